//! Adjacent-pair swap involutions and the `Z_2^m` group actions they
//! generate.
//!
//! Odd pairs are positions `(2i-1, 2i)` for `i = 1..⌊n/2⌋`; even pairs are
//! `(2i, 2i+1)` for `i = 1..⌊(n-1)/2⌋`. Swapping disjoint pairs commutes,
//! so a subset `S` of pair indices acts as one map and the orbit of a
//! permutation has size `2^(number of pairs)`.

use std::collections::BTreeSet;

use super::Permutation;

/// Which family of adjacent pairs the action swaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// Positions `(2i-1, 2i)`; toggles odd descents.
    OddPairs,
    /// Positions `(2i, 2i+1)`; toggles even descents.
    EvenPairs,
}

impl PairKind {
    /// Number of swappable pairs in a permutation of length `n`.
    pub fn pair_count(self, n: usize) -> usize {
        match self {
            PairKind::OddPairs => n / 2,
            PairKind::EvenPairs => (n - 1) / 2,
        }
    }

    /// 0-based index of the left slot of pair `i` (1-based).
    fn left_slot(self, i: usize) -> usize {
        match self {
            PairKind::OddPairs => 2 * i - 2,
            PairKind::EvenPairs => 2 * i - 1,
        }
    }
}

/// A pair index outside `1..=pair_count`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pair index {index} out of range 1..={max} for n={n}")]
pub struct SwapIndexError {
    pub index: usize,
    pub max: usize,
    pub n: usize,
}

fn swap_pairs(
    pi: &Permutation,
    indices: &BTreeSet<usize>,
    kind: PairKind,
) -> Result<Permutation, SwapIndexError> {
    let n = pi.n();
    let max = kind.pair_count(n);
    let mut letters = pi.letters().to_vec();
    for &i in indices {
        if i == 0 || i > max {
            return Err(SwapIndexError { index: i, max, n });
        }
        let left = kind.left_slot(i);
        letters.swap(left, left + 1);
    }
    Ok(Permutation { letters })
}

/// Swaps positions `(2i-1, 2i)` for every `i` in `indices`.
pub fn varphi(pi: &Permutation, indices: &BTreeSet<usize>) -> Result<Permutation, SwapIndexError> {
    swap_pairs(pi, indices, PairKind::OddPairs)
}

/// Swaps positions `(2i, 2i+1)` for every `i` in `indices`.
pub fn phi_even(pi: &Permutation, indices: &BTreeSet<usize>) -> Result<Permutation, SwapIndexError> {
    swap_pairs(pi, indices, PairKind::EvenPairs)
}

/// The orbit of a permutation under one of the two actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// The unique member whose acted-on pairs are all ascending (`π̂` for
    /// odd pairs, `π̄` for even pairs).
    pub representative: Permutation,
    pub members: BTreeSet<Permutation>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Materializes the full orbit by applying every subset of pair swaps.
///
/// Orbit size is `2^pair_count`, so this is meant for the exhaustive
/// small-`n` checks, not for bulk computation.
pub fn orbit(pi: &Permutation, kind: PairKind) -> Orbit {
    let k = kind.pair_count(pi.n());
    let mut members = BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let indices: BTreeSet<usize> = (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let sigma = swap_pairs(pi, &indices, kind).expect("indices are in range");
        members.insert(sigma);
    }

    let mut letters = pi.letters().to_vec();
    for i in 1..=k {
        let left = kind.left_slot(i);
        if letters[left] > letters[left + 1] {
            letters.swap(left, left + 1);
        }
    }
    Orbit {
        representative: Permutation { letters },
        members,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(indices: &[usize]) -> BTreeSet<usize> {
        indices.iter().copied().collect()
    }

    #[test]
    fn single_and_double_swaps() {
        assert_eq!(varphi(&perm("3,1,4,2"), &set(&[1])).unwrap(), perm("1,3,4,2"));
        let rep = varphi(&perm("3,1,4,2"), &set(&[1, 2])).unwrap();
        assert_eq!(rep, perm("1,3,2,4"));
        assert_eq!(phi_even(&perm("3,1,2"), &set(&[1])).unwrap(), perm("3,2,1"));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let err = varphi(&perm("3,1,4,2"), &set(&[3])).unwrap_err();
        assert_eq!(err.max, 2);
        assert!(phi_even(&perm("1,2,3"), &set(&[2])).is_err());
        assert!(varphi(&perm("1,2"), &set(&[0])).is_err());
    }

    #[test]
    fn orbit_of_3142_under_odd_pairs() {
        let orb = orbit(&perm("3,1,4,2"), PairKind::OddPairs);
        let expect: BTreeSet<Permutation> = ["3,1,4,2", "1,3,4,2", "3,1,2,4", "1,3,2,4"]
            .iter()
            .map(|s| perm(s))
            .collect();
        assert_eq!(orb.members, expect);
        assert_eq!(orb.representative, perm("1,3,2,4"));
        assert_eq!(orb.representative.descent_counts().0, 0);
    }

    #[test]
    fn representative_is_a_member_with_zero_statistic() {
        for pi in crate::perm::all_permutations(5) {
            let orb = orbit(&pi, PairKind::EvenPairs);
            assert!(orb.members.contains(&orb.representative));
            assert_eq!(orb.representative.descent_counts().1, 0);
        }
    }
}

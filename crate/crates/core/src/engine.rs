//! Computation of the joint odd/even-descent generating polynomial
//! `A_n(p,q)`, two ways.
//!
//! `brute_force` enumerates `S_n` and tallies `(odes, edes)` — the oracle.
//! `fast` evaluates the descent-set decomposition
//!
//! ```text
//! A_n(p,q) = Σ_{T ⊆ [n-1]} α_n(T) · Π_{j∈T} w_j · Π_{j∉T} (1-w_j)
//! ```
//!
//! where `α_n(T)` counts permutations whose descent set is contained in `T`
//! (a multinomial over the composition induced by `T`) and `w_j` is `p` for
//! odd `j`, `q` for even `j`. A DP over the largest element of `T` brings
//! this to `O(n^2)` polynomial operations instead of `2^(n-1)` subsets.
//! Everything is exact integer arithmetic.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::unipoly::UniPoly;

/// Default cap for [`brute_force`]: 10! is 3.6M permutations.
pub const DEFAULT_BRUTE_CAP: u32 = 10;
/// Soft cap the CLI applies to [`fast`]; the DP itself has no hard limit.
pub const DEFAULT_FAST_CAP: u32 = 64;
/// [`beta`] iterates over all subsets of `S`, so it stays a small-n oracle.
pub const BETA_ORACLE_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("n={n} exceeds the {what} cap of {cap}")]
    CapExceeded { n: u32, cap: u32, what: &'static str },
    #[error("descent position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: u32, max: u32 },
}

/// `A_n(p,q)` by enumerating `S_n` in lexicographic order and tallying
/// `(odes, edes)` into a `(⌊n/2⌋+1) x (⌊(n-1)/2⌋+1)` grid.
pub fn brute_force(n: u32) -> Result<BiPoly, EngineError> {
    brute_force_with_cap(n, DEFAULT_BRUTE_CAP)
}

/// [`brute_force`] with an explicit cap. Counts are tallied in `u64`, which
/// holds every statistic class up to `n = 20`; the cap is clamped there.
pub fn brute_force_with_cap(n: u32, cap: u32) -> Result<BiPoly, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroN);
    }
    let cap = cap.min(20);
    if n > cap {
        return Err(EngineError::CapExceeded { n, cap, what: "brute-force" });
    }

    let n_us = n as usize;
    let rows = n_us / 2 + 1;
    let cols = (n_us - 1) / 2 + 1;
    let mut grid = vec![0u64; rows * cols];

    let mut letters: Vec<u32> = (1..=n).collect();
    loop {
        let (odes, edes) = crate::perm::odd_even_descent_counts(&letters);
        grid[odes * cols + edes] += 1;
        if !next_in_place(&mut letters) {
            break;
        }
    }

    Ok(BiPoly::from_terms(grid.iter().enumerate().filter(|(_, &c)| c != 0).map(
        |(idx, &c)| {
            let a = (idx / cols) as u32;
            let b = (idx % cols) as u32;
            ((a, b), BigInt::from(c))
        },
    )))
}

fn next_in_place(letters: &mut [u32]) -> bool {
    let n = letters.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && letters[i - 1] >= letters[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while letters[j] <= letters[i - 1] {
        j -= 1;
    }
    letters.swap(i - 1, j);
    letters[i..].reverse();
    true
}

/// Position weight: `p` for odd positions, `q` for even ones.
fn weight(j: usize) -> BiPoly {
    if j % 2 == 1 {
        BiPoly::monomial(1, 0, 1)
    } else {
        BiPoly::monomial(0, 1, 1)
    }
}

/// `A_n(p,q)` in `O(n^2)` polynomial operations.
///
/// `f(j)` accumulates the contribution of all descent-supersets whose
/// largest element is `j`; the binomial `C(n-i, j-i)` extends the
/// composition by one part and the running product supplies the
/// `(1-w)`-factors for the skipped positions. Agrees with [`brute_force`]
/// term for term (that equivalence is the test suite's central oracle).
///
/// # Panics
///
/// If `n == 0`.
pub fn fast(n: u32) -> BiPoly {
    assert!(n >= 1, "n must be at least 1");
    let n = n as usize;
    let binomials = pascal_rows(n);
    let one = BiPoly::one();

    let mut f: Vec<BiPoly> = Vec::with_capacity(n);
    f.push(BiPoly::one());
    for j in 1..n {
        let mut acc = BiPoly::zero();
        let mut skipped = BiPoly::one(); // Π_{l=i+1}^{j-1} (1 - w_l)
        for i in (0..j).rev() {
            acc += &(&f[i] * &skipped).scale(&binomials[n - i][j - i]);
            if i > 0 {
                skipped = &skipped * &(&one - &weight(i));
            }
        }
        f.push(&weight(j) * &acc);
    }

    let mut total = BiPoly::zero();
    let mut skipped = BiPoly::one(); // Π_{l=i+1}^{n-1} (1 - w_l)
    for i in (0..n).rev() {
        total += &(&f[i] * &skipped);
        if i > 0 {
            skipped = &skipped * &(&one - &weight(i));
        }
    }
    total
}

/// `Ã_n`: `A_n` itself for odd `n`, `(1+q)·A_n` for even `n`. This is the
/// version that is palindromic of darga `⌊n/2⌋`.
pub fn a_tilde(n: u32) -> BiPoly {
    a_tilde_from(n, &fast(n))
}

/// Forms `Ã_n` from an already-computed `A_n`.
pub fn a_tilde_from(n: u32, a_n: &BiPoly) -> BiPoly {
    assert!(n >= 1, "n must be at least 1");
    if n % 2 == 0 {
        let one_plus_q = BiPoly::from_terms([((0, 0), BigInt::one()), ((0, 1), BigInt::one())]);
        &one_plus_q * a_n
    } else {
        a_n.clone()
    }
}

/// Pascal's triangle rows `0..=n` as big integers.
fn pascal_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]);
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::one());
        for r in 1..m {
            row.push(&prev[r - 1] + &prev[r]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

fn check_positions(n: u32, positions: &BTreeSet<u32>) -> Result<(), EngineError> {
    for &pos in positions {
        if pos == 0 || pos >= n {
            return Err(EngineError::PositionOutOfRange { pos, max: n.saturating_sub(1) });
        }
    }
    Ok(())
}

/// Number of permutations of `[n]` whose descent set is *contained in* `S`:
/// the multinomial coefficient of the composition of `n` induced by `S`.
pub fn alpha(n: u32, positions: &BTreeSet<u32>) -> Result<BigInt, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroN);
    }
    check_positions(n, positions)?;
    let mut numerator = factorial(n);
    let mut prev = 0u32;
    for &pos in positions {
        numerator /= factorial(pos - prev);
        prev = pos;
    }
    numerator /= factorial(n - prev);
    Ok(numerator)
}

/// Number of permutations of `[n]` whose descent set is *exactly* `S`, by
/// inclusion-exclusion over subsets of `S`. Exponential in `|S|`; kept as a
/// small-n oracle and capped accordingly.
pub fn beta(n: u32, positions: &BTreeSet<u32>) -> Result<BigInt, EngineError> {
    if n == 0 {
        return Err(EngineError::ZeroN);
    }
    if n > BETA_ORACLE_CAP {
        return Err(EngineError::CapExceeded { n, cap: BETA_ORACLE_CAP, what: "beta oracle" });
    }
    check_positions(n, positions)?;
    let elems: Vec<u32> = positions.iter().copied().collect();
    let mut acc = BigInt::zero();
    for mask in 0u64..(1u64 << elems.len()) {
        let subset: BTreeSet<u32> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &pos)| pos)
            .collect();
        let sign = if (elems.len() - subset.len()) % 2 == 0 { 1 } else { -1 };
        acc += alpha(n, &subset)? * sign;
    }
    Ok(acc)
}

/// The pair `(α, β)` for one descent set, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentSetCount {
    pub n: u32,
    pub positions: BTreeSet<u32>,
    pub alpha: BigInt,
    pub beta: BigInt,
}

impl DescentSetCount {
    pub fn compute(n: u32, positions: BTreeSet<u32>) -> Result<Self, EngineError> {
        let alpha = alpha(n, &positions)?;
        let beta = beta(n, &positions)?;
        Ok(DescentSetCount { n, positions, alpha, beta })
    }
}

/// The odd-descent generating polynomial in closed form:
/// `A_n(p,1) = (n!/2^⌊n/2⌋) (1+p)^⌊n/2⌋`.
pub fn closed_form_odes(n: u32) -> UniPoly {
    assert!(n >= 1, "n must be at least 1");
    binomial_closed_form(n, n / 2)
}

/// The even-descent generating polynomial in closed form:
/// `A_n(1,q) = (n!/2^⌊(n-1)/2⌋) (1+q)^⌊(n-1)/2⌋`.
pub fn closed_form_edes(n: u32) -> UniPoly {
    assert!(n >= 1, "n must be at least 1");
    binomial_closed_form(n, (n - 1) / 2)
}

fn binomial_closed_form(n: u32, k: u32) -> UniPoly {
    // n! always carries at least ⌊n/2⌋ factors of two, so this is exact.
    let fact = factorial(n);
    let divisor = BigInt::one() << k;
    debug_assert!((&fact % &divisor).is_zero());
    let lead = fact / divisor;
    let binomials = pascal_rows(k as usize);
    UniPoly::from_coeffs((0..=k).map(|i| (i, &lead * &binomials[k as usize][i as usize])))
}

/// The classic Eulerian polynomial via the triangle recurrence
/// `E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1)` — deliberately independent
/// of the bivariate code path, so the diagonal check is a real cross-check.
pub fn classical_eulerian(n: u32) -> UniPoly {
    assert!(n >= 1, "n must be at least 1");
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m as usize];
        for (k, item) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += &row[k] * (k as u32 + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                v += &row[k - 1] * (m - k as u32);
            }
            *item = v;
        }
        while next.last().is_some_and(|c| c.is_zero()) {
            next.pop();
        }
        row = next;
    }
    UniPoly::from_coeffs(row.into_iter().enumerate().map(|(k, c)| (k as u32, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::Var;

    fn poly(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(a, b, c)| ((a, b), BigInt::from(c))))
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(brute_force(1).unwrap(), BiPoly::one());
        assert_eq!(brute_force(3).unwrap(), poly(&[(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]));
        assert_eq!(brute_force(6).unwrap().coeff(1, 1), 152.into());
    }

    #[test]
    fn brute_force_cap() {
        assert!(matches!(brute_force(11), Err(EngineError::CapExceeded { .. })));
        assert!(matches!(brute_force(0), Err(EngineError::ZeroN)));
        assert!(brute_force_with_cap(11, 11).is_ok());
    }

    #[test]
    fn fast_matches_hand_evaluation() {
        // n=2: (1-p) + 2p = 1+p; n=3: four subsets sum to 1+2p+2q+pq
        assert_eq!(fast(2), poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(fast(3), poly(&[(0, 0, 1), (1, 0, 2), (0, 1, 2), (1, 1, 1)]));
    }

    #[test]
    fn a_tilde_branches() {
        assert_eq!(a_tilde(2), poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]));
        assert_eq!(a_tilde(3), fast(3));
        assert_eq!(a_tilde(4).coeff(1, 1), 12.into());
    }

    #[test]
    fn alpha_beta_examples() {
        let s = BTreeSet::from([2u32]);
        assert_eq!(alpha(4, &s).unwrap(), 6.into());
        assert_eq!(beta(4, &s).unwrap(), 5.into());
        assert_eq!(alpha(7, &BTreeSet::new()).unwrap(), 1.into());
        let counts = DescentSetCount::compute(4, s).unwrap();
        assert_eq!(counts.alpha, 6.into());
        assert_eq!(counts.beta, 5.into());
    }

    #[test]
    fn alpha_beta_errors() {
        assert!(matches!(
            alpha(4, &BTreeSet::from([4u32])),
            Err(EngineError::PositionOutOfRange { pos: 4, max: 3 })
        ));
        assert!(matches!(
            beta(13, &BTreeSet::new()),
            Err(EngineError::CapExceeded { .. })
        ));
    }

    #[test]
    fn closed_forms_small() {
        let odes4 = closed_form_odes(4);
        assert_eq!(
            (odes4.coeff(0), odes4.coeff(1), odes4.coeff(2)),
            (6.into(), 12.into(), 6.into())
        );
        assert_eq!(closed_form_odes(1), UniPoly::one());
        let edes5 = closed_form_edes(5);
        assert_eq!(
            (edes5.coeff(0), edes5.coeff(1), edes5.coeff(2)),
            (30.into(), 60.into(), 30.into())
        );
        assert_eq!(closed_form_edes(2), UniPoly::constant(2));
    }

    #[test]
    fn closed_forms_match_specializations() {
        for n in 1..=9 {
            let a = fast(n);
            assert_eq!(a.specialize(Var::Q, &BigInt::one()), closed_form_odes(n), "n={n}");
            assert_eq!(a.specialize(Var::P, &BigInt::one()), closed_form_edes(n), "n={n}");
        }
    }

    #[test]
    fn classical_eulerian_small() {
        assert_eq!(classical_eulerian(1), UniPoly::one());
        let a3 = classical_eulerian(3);
        assert_eq!((a3.coeff(0), a3.coeff(1), a3.coeff(2)), (1.into(), 4.into(), 1.into()));
        assert_eq!(classical_eulerian(10).eval(&BigInt::one()), factorial(10));
    }
}

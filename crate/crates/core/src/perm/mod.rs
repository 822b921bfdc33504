//! Permutations, extended words, and the four parity descent statistics.
//!
//! Positions are 1-based throughout: position `i` of a word `w` compares
//! `w_i` with `w_{i+1}`, and the parity of `i` itself classifies the step as
//! odd or even. The three classical symmetries (reversal, complement,
//! reversal-complement) live here; the boundary bijection is in [`psi`] and
//! the pair-swap group actions in [`orbit`].

mod orbit;
mod psi;

pub use orbit::{orbit, phi_even, varphi, Orbit, PairKind, SwapIndexError};
pub use psi::{psi, PsiError};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Error building a [`Permutation`] or [`ExtendedWord`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("a permutation must have at least one letter")]
    Empty,
    #[error("letters are not a bijection onto 1..={n}: {letters:?}")]
    NotBijection { n: usize, letters: Vec<u32> },
    #[error("letters are not pairwise distinct: {letters:?}")]
    DuplicateLetter { letters: Vec<u32> },
    #[error("cannot parse {text:?} as a comma-separated word")]
    Parse { text: String },
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    letters: Vec<u32>,
}

impl Permutation {
    /// Validates that `letters` is a bijection onto `1..=n` with `n >= 1`.
    pub fn new(letters: Vec<u32>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        let n = letters.len();
        let mut seen = vec![false; n];
        for &x in &letters {
            let ok = (1..=n as u32).contains(&x) && !seen[(x - 1) as usize];
            if !ok {
                return Err(WordError::NotBijection { n, letters });
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation { letters })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            letters: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// `π^r`: letter `i` of the output is letter `n+1-i` of the input.
    pub fn reversal(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Permutation { letters }
    }

    /// `π^c`: every letter `x` becomes `n+1-x`; descents and ascents swap
    /// positionwise.
    pub fn complement(&self) -> Self {
        let n = self.letters.len() as u32;
        Permutation {
            letters: self.letters.iter().map(|&x| n + 1 - x).collect(),
        }
    }

    /// `π^rc = (π^c)^r = (π^r)^c`.
    pub fn reversal_complement(&self) -> Self {
        self.complement().reversal()
    }

    pub fn descent_profile(&self) -> DescentProfile {
        DescentProfile::of_letters(&self.letters)
    }

    /// `(odes, edes)` without building the full profile.
    pub fn descent_counts(&self) -> (usize, usize) {
        odd_even_descent_counts(&self.letters)
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line notation, e.g. `3,1,4,2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.letters, f)
    }
}

impl FromStr for Permutation {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::new(parse_letters(s)?)
    }
}

/// A word of pairwise-distinct non-negative letters. Unlike a permutation
/// the values need not be contiguous, which admits the boundary letters `0`
/// and `2k+1` used by the appended/prepended words of the symmetry proof.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedWord {
    letters: Vec<u32>,
}

impl ExtendedWord {
    pub fn new(letters: Vec<u32>) -> Result<Self, WordError> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(WordError::DuplicateLetter { letters });
        }
        Ok(ExtendedWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn descent_profile(&self) -> DescentProfile {
        DescentProfile::of_letters(&self.letters)
    }

    pub fn descent_counts(&self) -> (usize, usize) {
        odd_even_descent_counts(&self.letters)
    }
}

impl From<&Permutation> for ExtendedWord {
    fn from(pi: &Permutation) -> Self {
        ExtendedWord {
            letters: pi.letters.clone(),
        }
    }
}

impl fmt::Display for ExtendedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.letters, f)
    }
}

impl FromStr for ExtendedWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExtendedWord::new(parse_letters(s)?)
    }
}

/// Appends a letter, e.g. `π(2k+1)` or `π0`.
pub fn append_letter(pi: &Permutation, x: u32) -> Result<ExtendedWord, WordError> {
    let mut letters = pi.letters.clone();
    letters.push(x);
    ExtendedWord::new(letters)
}

/// Prepends a letter, e.g. `(2k+1)π` or `0π`.
pub fn prepend_letter(x: u32, pi: &Permutation) -> Result<ExtendedWord, WordError> {
    let mut letters = Vec::with_capacity(pi.letters.len() + 1);
    letters.push(x);
    letters.extend_from_slice(&pi.letters);
    ExtendedWord::new(letters)
}

/// The partition of positions `1..=m-1` of a word by
/// (descent/ascent) x (odd/even).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentProfile {
    pub odes_set: BTreeSet<usize>,
    pub edes_set: BTreeSet<usize>,
    pub oasc_set: BTreeSet<usize>,
    pub easc_set: BTreeSet<usize>,
}

impl DescentProfile {
    pub fn of_letters(letters: &[u32]) -> Self {
        let mut profile = DescentProfile {
            odes_set: BTreeSet::new(),
            edes_set: BTreeSet::new(),
            oasc_set: BTreeSet::new(),
            easc_set: BTreeSet::new(),
        };
        for (i, pair) in letters.windows(2).enumerate() {
            let pos = i + 1;
            let set = match (pair[0] > pair[1], pos % 2 == 1) {
                (true, true) => &mut profile.odes_set,
                (true, false) => &mut profile.edes_set,
                (false, true) => &mut profile.oasc_set,
                (false, false) => &mut profile.easc_set,
            };
            set.insert(pos);
        }
        profile
    }

    pub fn odes(&self) -> usize {
        self.odes_set.len()
    }

    pub fn edes(&self) -> usize {
        self.edes_set.len()
    }

    pub fn oasc(&self) -> usize {
        self.oasc_set.len()
    }

    pub fn easc(&self) -> usize {
        self.easc_set.len()
    }
}

/// `(odes, edes)` of a letter slice; the hot path of the brute-force tally.
pub fn odd_even_descent_counts(letters: &[u32]) -> (usize, usize) {
    let mut odes = 0;
    let mut edes = 0;
    for (i, pair) in letters.windows(2).enumerate() {
        if pair[0] > pair[1] {
            if i % 2 == 0 {
                odes += 1; // 1-based position i+1 is odd
            } else {
                edes += 1;
            }
        }
    }
    (odes, edes)
}

/// Iterator over all of `S_n` in lexicographic order.
///
/// Uses the classic in-place successor step, so no permutation list is ever
/// materialized.
pub fn all_permutations(n: usize) -> Permutations {
    assert!(n >= 1);
    Permutations {
        current: Some((1..=n as u32).collect()),
    }
}

pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let letters = self.current.as_ref()?.clone();
        self.current = next_lexicographic(self.current.take().unwrap());
        Some(Permutation { letters })
    }
}

fn next_lexicographic(mut letters: Vec<u32>) -> Option<Vec<u32>> {
    let n = letters.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && letters[i - 1] >= letters[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while letters[j] <= letters[i - 1] {
        j -= 1;
    }
    letters.swap(i - 1, j);
    letters[i..].reverse();
    Some(letters)
}

fn parse_letters(s: &str) -> Result<Vec<u32>, WordError> {
    s.split(',')
        .map(|part| part.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| WordError::Parse { text: s.to_owned() })
}

fn fmt_letters(letters: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn profile_of_3142() {
        let profile = perm("3,1,4,2").descent_profile();
        assert_eq!(profile.odes_set, BTreeSet::from([1, 3]));
        assert!(profile.edes_set.is_empty());
        assert!(profile.oasc_set.is_empty());
        assert_eq!(profile.easc_set, BTreeSet::from([2]));
        assert_eq!(perm("3,1,4,2").descent_counts(), (2, 0));
    }

    #[test]
    fn profile_of_identity_and_singleton() {
        let profile = Permutation::identity(6).descent_profile();
        assert_eq!(profile.odes(), 0);
        assert_eq!(profile.edes(), 0);
        assert_eq!(profile.oasc() + profile.easc(), 5);
        let single = Permutation::identity(1).descent_profile();
        assert!(single.oasc_set.is_empty() && single.easc_set.is_empty());
    }

    #[test]
    fn s2_gives_a2() {
        // 12 contributes 1, 21 contributes p: A_2 = 1 + p
        assert_eq!(perm("1,2").descent_counts(), (0, 0));
        assert_eq!(perm("2,1").descent_counts(), (1, 0));
    }

    #[test]
    fn reversal_and_complement_examples() {
        assert_eq!(perm("3,1,4,2").reversal(), perm("2,4,1,3"));
        assert_eq!(perm("3,1,4,2").complement(), perm("2,4,1,3"));
        assert_eq!(Permutation::identity(1).reversal(), Permutation::identity(1));
        assert_eq!(perm("1,2").reversal_complement(), perm("1,2"));
    }

    #[test]
    fn validation_rejects_bad_words() {
        assert!(matches!(Permutation::new(vec![]), Err(WordError::Empty)));
        assert!(matches!(
            Permutation::new(vec![1, 3]),
            Err(WordError::NotBijection { .. })
        ));
        assert!(matches!(
            Permutation::new(vec![2, 2, 1]),
            Err(WordError::NotBijection { .. })
        ));
        assert!(matches!(
            ExtendedWord::new(vec![0, 3, 3]),
            Err(WordError::DuplicateLetter { .. })
        ));
        assert!("1,x,3".parse::<Permutation>().is_err());
    }

    #[test]
    fn round_trip_notation() {
        let pi = perm("3,1,4,2");
        assert_eq!(pi.to_string(), "3,1,4,2");
        assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi);
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = all_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(all_permutations(1).count(), 1);
        assert_eq!(all_permutations(6).count(), 720);
    }

    #[test]
    fn boundary_word_constructors() {
        let pi = perm("2,1");
        assert_eq!(append_letter(&pi, 0).unwrap().to_string(), "2,1,0");
        assert_eq!(prepend_letter(3, &pi).unwrap().to_string(), "3,2,1");
        assert!(append_letter(&pi, 2).is_err());
    }
}

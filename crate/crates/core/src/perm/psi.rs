//! The boundary-word bijection behind the even-`n` symmetry.
//!
//! Domain: words `πx` with `π` a permutation of `[2k]` and `x ∈ {0, 2k+1}`.
//! Codomain: words `yσ` with `y ∈ {0, 2k+1}` and `σ` a permutation of
//! `[2k]`. The appended boundary letter flips to the front, and the body is
//! replaced by its reversal-complement.

use super::ExtendedWord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PsiError {
    #[error("word length {len} is not odd (expected 2k+1)")]
    EvenLength { len: usize },
    #[error("last letter {last} is neither 0 nor {boundary}")]
    BadBoundaryLetter { last: u32, boundary: u32 },
    #[error("the first 2k letters are not a permutation of 1..={k2}")]
    PrefixNotPermutation { k2: u32 },
}

/// Applies the map: `π0 -> (2k+1)·π^rc` and `π(2k+1) -> 0·π^rc`, where
/// `π^rc` abbreviates the word `(2k+1-π_2k)...(2k+1-π_1)`.
///
/// Input validation is strict; a word outside the stated domain is rejected
/// rather than coerced.
pub fn psi(word: &ExtendedWord) -> Result<ExtendedWord, PsiError> {
    let letters = word.letters();
    let m = letters.len();
    if m % 2 == 0 {
        return Err(PsiError::EvenLength { len: m });
    }
    let k2 = (m - 1) as u32; // 2k
    let boundary = k2 + 1; // 2k+1
    let last = letters[m - 1];
    if last != 0 && last != boundary {
        return Err(PsiError::BadBoundaryLetter { last, boundary });
    }
    let prefix = &letters[..m - 1];
    let mut seen = vec![false; k2 as usize];
    for &x in prefix {
        if !(1..=k2).contains(&x) || seen[(x - 1) as usize] {
            return Err(PsiError::PrefixNotPermutation { k2 });
        }
        seen[(x - 1) as usize] = true;
    }

    let mut out = Vec::with_capacity(m);
    out.push(if last == 0 { boundary } else { 0 });
    out.extend(prefix.iter().rev().map(|&x| boundary - x));
    Ok(ExtendedWord { letters: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> ExtendedWord {
        s.parse().unwrap()
    }

    #[test]
    fn definition_on_small_words() {
        assert_eq!(psi(&word("1,2,0")).unwrap(), word("3,1,2"));
        assert_eq!(psi(&word("2,1,3")).unwrap(), word("0,2,1"));
    }

    #[test]
    fn transferred_statistic_on_k1() {
        // odes(ψ(120)) = 1 = edes(12^rc) + 1
        let image = psi(&word("1,2,0")).unwrap();
        assert_eq!(image.descent_counts(), (1, 0));
    }

    #[test]
    fn rejects_out_of_domain_words() {
        assert!(matches!(
            psi(&word("1,2,3,0")),
            Err(PsiError::EvenLength { len: 4 })
        ));
        assert!(matches!(
            psi(&word("1,2,4")),
            Err(PsiError::BadBoundaryLetter { last: 4, .. })
        ));
        assert!(matches!(
            psi(&word("1,3,0")),
            Err(PsiError::PrefixNotPermutation { .. })
        ));
        // boundary letter in the body instead of the tail
        assert!(psi(&word("3,2,0")).is_err());
    }

    #[test]
    fn degenerate_k0_words() {
        assert_eq!(psi(&word("0")).unwrap(), word("1"));
        assert_eq!(psi(&word("1")).unwrap(), word("0"));
    }
}

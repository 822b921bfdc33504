//! Univariate counterpart of [`BiPoly`](crate::BiPoly), used for the
//! specializations `A_n(p,1)`, `A_n(1,q)`, the diagonal, and the classic
//! Eulerian cross-check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A sparse univariate polynomial over the integers, canonical (no stored
/// zero coefficients).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        UniPoly::monomial(0, c)
    }

    pub fn monomial(e: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        UniPoly { coeffs }
    }

    pub fn from_coeffs<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, BigInt)>,
    {
        let mut poly = UniPoly::zero();
        for (e, c) in iter {
            poly.add_term(e, c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: u32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().max().copied()
    }

    pub fn min_exponent(&self) -> Option<u32> {
        self.coeffs.keys().min().copied()
    }

    pub fn add_term(&mut self, e: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(entry) => {
                entry.insert(c);
            }
            Entry::Occupied(mut entry) => {
                *entry.get_mut() += c;
                if entry.get().is_zero() {
                    entry.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.coeffs {
            acc += c * x.pow(e);
        }
        acc
    }

    /// Coefficient symmetry `[x^e] f = [x^(darga - e)] f`. The zero
    /// polynomial counts as palindromic of any darga.
    pub fn is_palindromic(&self, darga: u32) -> bool {
        match self.degree() {
            None => true,
            Some(d) if d > darga => false,
            Some(_) => (0..=darga).all(|e| self.coeff(e) == self.coeff(darga - e)),
        }
    }
}

impl std::ops::Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl std::ops::Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, 'q')
    }
}

impl UniPoly {
    fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: char) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !mag.is_one() || e == 0 {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }

    /// Renders with an explicit variable letter, e.g. `p` for `A_n(p, 1)`.
    pub fn display_with(&self, var: char) -> impl fmt::Display + '_ {
        struct D<'a>(&'a UniPoly, char);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_var(f, self.1)
            }
        }
        D(self, var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let f = UniPoly::from_coeffs([(0, 1.into()), (1, 4.into()), (2, 1.into())]);
        let one_plus_q = UniPoly::from_coeffs([(0, 1.into()), (1, 1.into())]);
        assert_eq!(one_plus_q.pow(2).coeff(1), 2.into());
        assert_eq!(f.eval(&2.into()), 13.into());
        assert_eq!(&f - &f, UniPoly::zero());
    }

    #[test]
    fn palindromic_by_darga() {
        let f = UniPoly::from_coeffs([(0, 1.into()), (1, 4.into()), (2, 1.into())]);
        assert!(f.is_palindromic(2));
        assert!(!f.is_palindromic(3));
        // q + q^2 is palindromic of darga 3 (coefficients 0,1,1,0)
        let g = UniPoly::from_coeffs([(1, 1.into()), (2, 1.into())]);
        assert!(g.is_palindromic(3));
        assert!(UniPoly::zero().is_palindromic(0));
    }

    #[test]
    fn display_uses_requested_variable() {
        let f = UniPoly::from_coeffs([(0, 6.into()), (1, 12.into()), (2, 6.into())]);
        assert_eq!(f.display_with('p').to_string(), "6 + 12p + 6p^2");
        assert_eq!(f.to_string(), "6 + 12q + 6q^2");
    }
}

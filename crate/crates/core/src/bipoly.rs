//! Sparse bivariate polynomials in `(p, q)` with exact big-integer
//! coefficients.
//!
//! Terms are kept in a canonical map from exponent pair to nonzero
//! coefficient, so structural equality is polynomial equality. The JSON form
//! is `{"terms": [[a, b, "coeff"], ...]}` sorted by `(a, b)` ascending, with
//! coefficients as decimal strings so big integers survive any tooling.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::unipoly::UniPoly;

/// Which of the two variables to act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    P,
    Q,
}

/// Error from [`BiPoly::reciprocal`]: the requested exponent bounds are
/// smaller than the polynomial's actual degrees, so mirroring would create
/// negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("reciprocal bounds ({dp}, {dq}) below actual degrees ({deg_p}, {deg_q})")]
pub struct ReciprocalError {
    pub dp: u32,
    pub dq: u32,
    pub deg_p: u32,
    pub deg_q: u32,
}

/// A sparse polynomial in `p` and `q` over the integers.
///
/// The term map never stores zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly::monomial(0, 0, c)
    }

    /// The single term `c * p^a q^b` (zero `c` yields the zero polynomial).
    pub fn monomial(a: u32, b: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        BiPoly { terms }
    }

    /// Builds a polynomial from `((a, b), coeff)` pairs, summing duplicates
    /// and dropping zeros.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), BigInt)>,
    {
        let mut poly = BiPoly::zero();
        for ((a, b), c) in iter {
            poly.add_term(a, b, c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `p^a q^b` (zero when absent).
    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in `(a, b)` ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn degree_p(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    /// All terms of maximal total degree.
    pub fn top_terms(&self) -> Vec<((u32, u32), BigInt)> {
        match self.total_degree() {
            None => Vec::new(),
            Some(d) => self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == d)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// In-place `self += c * p^a q^b`, keeping the map canonical.
    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges the two variables: term `(a, b)` becomes `(b, a)`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// Mirrors exponents within the box `(dp, dq)`: term `(a, b)` becomes
    /// `(dp - a, dq - b)`. This is `p^dp q^dq f(1/p, 1/q)` made exact.
    pub fn reciprocal(&self, dp: u32, dq: u32) -> Result<Self, ReciprocalError> {
        let deg_p = self.degree_p().unwrap_or(0);
        let deg_q = self.degree_q().unwrap_or(0);
        if deg_p > dp || deg_q > dq {
            return Err(ReciprocalError { dp, dq, deg_p, deg_q });
        }
        Ok(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((dp - a, dq - b), c.clone()))
                .collect(),
        })
    }

    /// Both symmetry conditions for darga `k`: invariance under variable
    /// swap and under exponent mirroring in the `(k, k)` box. Degrees above
    /// `k` make the polynomial non-palindromic rather than an error.
    pub fn is_palindromic(&self, k: u32) -> bool {
        if self.swap_vars() != *self {
            return false;
        }
        match self.reciprocal(k, k) {
            Ok(mirrored) => mirrored == *self,
            Err(_) => false,
        }
    }

    /// Substitutes an integer for one variable, leaving a polynomial in the
    /// other.
    pub fn specialize(&self, var: Var, value: &BigInt) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            let (kept, subst) = match var {
                Var::P => (b, a),
                Var::Q => (a, b),
            };
            out.add_term(kept, c * value.pow(subst));
        }
        out
    }

    /// The diagonal `f(q, q)` as a univariate polynomial.
    pub fn diagonal(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a + b, c.clone());
        }
        out
    }

    pub fn eval(&self, p0: &BigInt, q0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * p0.pow(a) * q0.pow(b);
        }
        acc
    }
}

impl std::ops::Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl std::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
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
            let coeff_is_one = mag.is_one();
            if !coeff_is_one || (a == 0 && b == 0) {
                write!(f, "{mag}")?;
            }
            match a {
                0 => {}
                1 => write!(f, "p")?,
                _ => write!(f, "p^{a}")?,
            }
            match b {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{b}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            terms: Vec<(u32, u32, &'a str)>,
        }
        let rendered: Vec<String> = self.terms.values().map(|c| c.to_str_radix(10)).collect();
        let terms = self
            .terms
            .keys()
            .zip(rendered.iter())
            .map(|(&(a, b), s)| (a, b, s.as_str()))
            .collect();
        Wire { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            terms: Vec<(u32, u32, String)>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let mut poly = BiPoly::zero();
        for (a, b, s) in wire.terms {
            let c: BigInt = s
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))?;
            poly.add_term(a, b, c);
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> BiPoly {
        BiPoly::monomial(1, 0, 1)
    }

    fn q() -> BiPoly {
        BiPoly::monomial(0, 1, 1)
    }

    /// A_3 and A_4 as printed in the introduction's table.
    fn a3() -> BiPoly {
        BiPoly::from_terms([
            ((0, 0), 1.into()),
            ((1, 0), 2.into()),
            ((0, 1), 2.into()),
            ((1, 1), 1.into()),
        ])
    }

    fn a4() -> BiPoly {
        BiPoly::from_terms([
            ((0, 0), 1.into()),
            ((1, 0), 6.into()),
            ((0, 1), 5.into()),
            ((2, 0), 5.into()),
            ((1, 1), 6.into()),
            ((2, 1), 1.into()),
        ])
    }

    #[test]
    fn product_of_binomials() {
        let f = &BiPoly::one() + &p();
        let g = &BiPoly::one() + &q();
        let expect = BiPoly::from_terms([
            ((0, 0), 1.into()),
            ((1, 0), 1.into()),
            ((0, 1), 1.into()),
            ((1, 1), 1.into()),
        ]);
        assert_eq!(&f * &g, expect);
    }

    #[test]
    fn ring_identities() {
        let f = a4();
        assert_eq!(&f + &BiPoly::zero(), f);
        assert_eq!(&f * &BiPoly::one(), f);
        assert_eq!(&f - &f, BiPoly::zero());
    }

    #[test]
    fn one_plus_q_times_a4_has_12_pq() {
        let tilde = &(&BiPoly::one() + &q()) * &a4();
        assert_eq!(tilde.coeff(1, 1), 12.into());
    }

    #[test]
    fn swap_vars_examples() {
        assert_eq!(BiPoly::monomial(2, 1, 1).swap_vars(), BiPoly::monomial(1, 2, 1));
        assert_eq!(a3().swap_vars(), a3());
        assert_ne!(a4().swap_vars(), a4());
        assert_eq!(a4().coeff(1, 0), 6.into());
        assert_eq!(a4().coeff(0, 1), 5.into());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p().reciprocal(1, 0).unwrap(), BiPoly::one());
        assert_eq!(a3().reciprocal(1, 1).unwrap(), a3());
        assert_eq!(a4().reciprocal(2, 1).unwrap(), a4());
    }

    #[test]
    fn reciprocal_rejects_small_bounds() {
        let err = a4().reciprocal(1, 1).unwrap_err();
        assert_eq!(err.deg_p, 2);
    }

    #[test]
    fn palindromic_examples() {
        let f = &BiPoly::one() + &(&p() * &q());
        assert!(f.is_palindromic(1));
        assert!(!a4().is_palindromic(2));
    }

    #[test]
    fn specialize_and_eval() {
        // A_4(p, 1) = 6 + 12p + 6p^2
        let odes = a4().specialize(Var::Q, &1.into());
        assert_eq!(odes.coeff(0), 6.into());
        assert_eq!(odes.coeff(1), 12.into());
        assert_eq!(odes.coeff(2), 6.into());
        assert_eq!(a4().eval(&1.into(), &1.into()), 24.into());
        // diagonal of A_3 is the classic 1 + 4q + q^2
        let diag = a3().diagonal();
        assert_eq!(diag.coeff(1), 4.into());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut f = p();
        f.add_term(1, 0, (-1).into());
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(a3().to_string(), "1 + 2p + 2q + pq");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_schema_round_trip() {
        let f = a4();
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(
            js,
            r#"{"terms":[[0,0,"1"],[0,1,"5"],[1,0,"6"],[1,1,"6"],[2,0,"5"],[2,1,"1"]]}"#
        );
        let back: BiPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }
}

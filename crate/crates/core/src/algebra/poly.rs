//! Polynomials in one variable over the two-element field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

const WORD: usize = 64;

/// A polynomial over F₂ in a single variable, stored as a bit set of the
/// exponents carrying coefficient one.
///
/// Addition is symmetric difference of exponent sets, so `p + p == 0` for
/// every `p`. The zero polynomial is the empty set. The word vector never has
/// trailing zero words, which keeps equality structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldPoly {
    words: Vec<u64>,
}

impl FieldPoly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `w^k`.
    pub fn monomial(k: u32) -> Self {
        let mut p = Self::zero();
        p.toggle(k);
        p
    }

    /// Builds a polynomial from exponents; repeated exponents cancel in pairs.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        let last = *self.words.last()?;
        let top = WORD - 1 - last.leading_zeros() as usize;
        Some(((self.words.len() - 1) * WORD + top) as u32)
    }

    /// Lowest exponent present, or `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        for (i, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some((i * WORD + w.trailing_zeros() as usize) as u32);
            }
        }
        None
    }

    /// Returns `Some(k)` when the polynomial is exactly `w^k`.
    pub fn as_monomial(&self) -> Option<u32> {
        let d = self.degree()?;
        (self.valuation() == Some(d)).then_some(d)
    }

    pub fn coefficient(&self, k: u32) -> bool {
        let (w, b) = (k as usize / WORD, k as usize % WORD);
        self.words.get(w).is_some_and(|x| (x >> b) & 1 == 1)
    }

    /// Ascending list of exponents with coefficient one.
    pub fn exponents(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, w) in self.words.iter().enumerate() {
            let mut w = *w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push((i * WORD + b) as u32);
                w &= w - 1;
            }
        }
        out
    }

    pub fn toggle(&mut self, k: u32) {
        let (w, b) = (k as usize / WORD, k as usize % WORD);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << b;
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Multiplication by `w^k`.
    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k as usize / WORD, k as usize % WORD);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (WORD - bs);
            }
        }
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg remainder < deg divisor`.
    ///
    /// Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let k = rd - dd;
            quot.toggle(k);
            rem += &divisor.shift(k);
        }
        (quot, rem)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }
}

impl AddAssign<&FieldPoly> for FieldPoly {
    fn add_assign(&mut self, rhs: &FieldPoly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Add<&FieldPoly> for &FieldPoly {
    type Output = FieldPoly;
    fn add(self, rhs: &FieldPoly) -> FieldPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&FieldPoly> for &FieldPoly {
    type Output = FieldPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &FieldPoly) -> FieldPoly {
        let mut out = FieldPoly::zero();
        for e in rhs.exponents() {
            out += &self.shift(e);
        }
        out
    }
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "w".to_string(),
                _ => format!("w^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = FieldPoly> {
        proptest::collection::vec(0u32..150, 0..8).prop_map(FieldPoly::from_exponents)
    }

    #[test]
    fn degree_and_valuation() {
        let p = FieldPoly::from_exponents([3, 70, 1]);
        assert_eq!(p.degree(), Some(70));
        assert_eq!(p.valuation(), Some(1));
        assert_eq!(p.exponents(), vec![1, 3, 70]);
        assert_eq!(FieldPoly::zero().degree(), None);
        assert_eq!(FieldPoly::monomial(64).as_monomial(), Some(64));
        assert_eq!(p.as_monomial(), None);
    }

    #[test]
    fn repeated_exponents_cancel() {
        assert!(FieldPoly::from_exponents([5, 5]).is_zero());
    }

    #[test]
    fn division_by_w_plus_one() {
        // w^2 + 1 = (w + 1)^2 over F2
        let a = FieldPoly::from_exponents([2, 0]);
        let b = FieldPoly::from_exponents([1, 0]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(FieldPoly::gcd(&a, &FieldPoly::from_exponents([3, 0])), b);
    }

    proptest! {
        #[test]
        fn self_sum_is_zero(p in poly()) {
            prop_assert!((&p + &p).is_zero());
        }

        #[test]
        fn div_rem_reconstructs(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn product_degree_adds(a in poly(), b in poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }
}

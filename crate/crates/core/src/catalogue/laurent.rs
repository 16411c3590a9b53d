use std::collections::BTreeMap;
use std::fmt;

/// Integer Laurent polynomial in one variable `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(0, 1)])
    }

    /// Sums `(exponent, coefficient)` terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        let entry = self.coeffs.entry(exponent).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(e, c)| self.coefficient(-e) == c)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + k, c)))
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    /// Exact division by a polynomial with leading coefficient ±1; `None`
    /// when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dmax, dlead) = divisor.coeffs.iter().next_back().map(|(e, c)| (*e, *c))?;
        let dmin = divisor.min_degree()?;
        if dlead.abs() != 1 {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rmax, rlead)) = rem.coeffs.iter().next_back().map(|(e, c)| (*e, *c)) {
            if rmax - dmax < rem.min_degree()? - dmin {
                return None;
            }
            let (e, c) = (rmax - dmax, rlead * dlead);
            quot.add_term(e, c);
            for (de, dc) in divisor.terms() {
                rem.add_term(de + e, -c * dc);
            }
        }
        Some(quot)
    }

    /// Shifted so that it is symmetric under `t -> 1/t`, when possible.
    pub fn symmetrized(&self) -> Self {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) if (lo + hi) % 2 == 0 => self.shift(-(lo + hi) / 2),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

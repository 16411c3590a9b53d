//! Υ(t) from the t-modified complex over F₂[w], w = v^{1/q}.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::algebra::{FieldPoly, FreeChainModule, PolyMatrix, Tracking};
use crate::complex::CfkComplex;
use crate::error::CfkError;

pub type Rational = Ratio<i64>;

/// The t-modified complex for `t = p/q` in lowest terms: gradings
/// `M - tA`, and each arrow `(x -> y, a)` becomes `w^e` with
/// `e = p (A(x) - A(y)) + 2 q a`.
pub fn t_modified(c: &CfkComplex, t: Rational) -> Result<FreeChainModule, CfkError> {
    check_t(t)?;
    let (p, q) = (*t.numer(), *t.denom());
    let gradings = c
        .generators()
        .iter()
        .map(|g| Rational::from_integer(g.maslov) - t * g.alexander)
        .collect();
    let mut d = PolyMatrix::zeros(c.len(), c.len());
    for a in c.arrows() {
        let e = p * (c.alexander(a.from) - c.alexander(a.to)) + 2 * q * i64::from(a.u_power);
        debug_assert!(e >= 0);
        d.set(a.to, a.from, FieldPoly::monomial(e as u32));
    }
    Ok(FreeChainModule::new_unchecked(gradings, d, Rational::new(1, q)))
}

fn check_t(t: Rational) -> Result<(), CfkError> {
    if t < Rational::from_integer(0) || t > Rational::from_integer(2) {
        return Err(CfkError::TOutOfRange(format_rational(t)));
    }
    Ok(())
}

/// Υ(t) together with the generator whose line `M - tA` realises it.
pub fn upsilon_with_generator(c: &CfkComplex, t: Rational) -> Result<(Rational, usize), CfkError> {
    let m = t_modified(c, t)?;
    let h = m.graded_reduction(Tracking::NONE);
    match h.free.as_slice() {
        [g] => Ok((m.grading(*g), *g)),
        other => Err(CfkError::FreeRank(other.len())),
    }
}

pub fn upsilon_at(c: &CfkComplex, t: Rational) -> Result<Rational, CfkError> {
    Ok(upsilon_with_generator(c, t)?.0)
}

/// Continuous piecewise-linear function on [0, 2].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    pub breakpoints: Vec<Rational>,
    pub values: Vec<Rational>,
    pub certified: bool,
}

impl PLFunction {
    pub fn zero() -> Self {
        let z = Rational::from_integer(0);
        Self { breakpoints: vec![z, Rational::from_integer(2)], values: vec![z, z], certified: true }
    }

    pub fn eval(&self, t: Rational) -> Option<Rational> {
        let k = self.breakpoints.iter().position(|b| *b >= t)?;
        if self.breakpoints[k] == t {
            return Some(self.values[k]);
        }
        if k == 0 {
            return None;
        }
        let (t0, t1) = (self.breakpoints[k - 1], self.breakpoints[k]);
        let (v0, v1) = (self.values[k - 1], self.values[k]);
        Some(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    pub fn slopes(&self) -> Vec<Rational> {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(t, v)| (v[1] - v[0]) / (t[1] - t[0]))
            .collect()
    }

    pub fn max_slope(&self) -> Option<Rational> {
        self.slopes().into_iter().max()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == Rational::from_integer(0))
    }
}

impl fmt::Display for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .breakpoints
            .iter()
            .zip(&self.values)
            .map(|(t, v)| format!("({}, {})", format_rational(*t), format_rational(*v)))
            .collect();
        write!(f, "{}", pts.join(" "))
    }
}

pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Values of t in (0, 2) where two generator lines `M - tA` cross, plus
/// the endpoints. Υ follows a single line between consecutive candidates.
pub fn candidate_breakpoints(c: &CfkComplex) -> Vec<Rational> {
    let lines: BTreeSet<(i64, i64)> = c.generators().iter().map(|g| (g.maslov, g.alexander)).collect();
    let lines: Vec<_> = lines.into_iter().collect();
    let (zero, two) = (Rational::from_integer(0), Rational::from_integer(2));
    let mut out = BTreeSet::from([zero, two]);
    for (k, &(m1, a1)) in lines.iter().enumerate() {
        for &(m2, a2) in &lines[k + 1..] {
            if a1 != a2 {
                let t = Rational::new(m1 - m2, a1 - a2);
                if t > zero && t < two {
                    out.insert(t);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Exact Υ as a PL function: evaluate at every candidate crossing and at
/// each midpoint between consecutive candidates, check that the line found
/// at the midpoint meets both endpoint values, then merge collinear pieces.
pub fn upsilon_pl(c: &CfkComplex) -> Result<PLFunction, CfkError> {
    let cands = candidate_breakpoints(c);
    let mids: Vec<Rational> = cands.windows(2).map(|w| (w[0] + w[1]) / 2).collect();
    let at_cands: Vec<Rational> =
        cands.par_iter().map(|t| upsilon_at(c, *t)).collect::<Result<_, _>>()?;
    let at_mids: Vec<(Rational, usize)> =
        mids.par_iter().map(|t| upsilon_with_generator(c, *t)).collect::<Result<_, _>>()?;

    for (k, (_, g)) in at_mids.iter().enumerate() {
        let line = |t: Rational| Rational::from_integer(c.maslov(*g)) - t * c.alexander(*g);
        for (t, v) in [(cands[k], at_cands[k]), (cands[k + 1], at_cands[k + 1])] {
            if line(t) != v {
                return Err(CfkError::Certification(format!(
                    "Υ is not linear on [{}, {}]: value {} at t = {} is off the midpoint line",
                    format_rational(cands[k]),
                    format_rational(cands[k + 1]),
                    format_rational(v),
                    format_rational(t)
                )));
            }
        }
    }

    let mut breakpoints = vec![cands[0]];
    let mut values = vec![at_cands[0]];
    for k in 1..cands.len() {
        let n = breakpoints.len();
        if n >= 2 {
            let s_prev = (values[n - 1] - values[n - 2]) / (breakpoints[n - 1] - breakpoints[n - 2]);
            let s_next = (at_cands[k] - values[n - 1]) / (cands[k] - breakpoints[n - 1]);
            if s_prev == s_next {
                breakpoints[n - 1] = cands[k];
                values[n - 1] = at_cands[k];
                continue;
            }
        }
        breakpoints.push(cands[k]);
        values.push(at_cands[k]);
    }
    let pl = PLFunction { breakpoints, values, certified: true };
    if pl.slopes().iter().any(|s| !s.is_integer()) {
        return Err(CfkError::Certification("non-integer slope".into()));
    }
    Ok(pl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trefoil_samples() {
        let t = catalogue::trefoil();
        assert_eq!(upsilon_at(&t, r(1, 2)).unwrap(), r(-1, 2));
        assert_eq!(upsilon_at(&t, r(3, 2)).unwrap(), r(-1, 2));
        assert_eq!(upsilon_at(&t, r(1, 1)).unwrap(), r(-1, 1));
        assert!(matches!(upsilon_at(&t, r(5, 2)), Err(CfkError::TOutOfRange(_))));
    }

    #[test]
    fn trefoil_pl() {
        let pl = upsilon_pl(&catalogue::trefoil()).unwrap();
        assert_eq!(pl.breakpoints, vec![r(0, 1), r(1, 1), r(2, 1)]);
        assert_eq!(pl.values, vec![r(0, 1), r(-1, 1), r(0, 1)]);
        assert_eq!(pl.slopes(), vec![r(-1, 1), r(1, 1)]);
    }

    #[test]
    fn unknot_pl_is_zero() {
        assert_eq!(upsilon_pl(&catalogue::unknot()).unwrap(), PLFunction::zero());
    }

    #[test]
    fn figure_six_pl() {
        let pl = upsilon_pl(&catalogue::fixture("fig6_C").unwrap()).unwrap();
        assert_eq!(pl.breakpoints, vec![r(0, 1), r(2, 3), r(1, 1), r(4, 3), r(2, 1)]);
        assert_eq!(pl.values, vec![r(0, 1), r(0, 1), r(-1, 1), r(0, 1), r(0, 1)]);
        assert_eq!(pl.max_slope(), Some(r(3, 1)));
    }
}

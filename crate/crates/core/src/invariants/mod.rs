//! Concordance invariants and bounds computed from a complex.

pub mod hfk;
pub mod tau;
pub mod upsilon;
pub mod vs;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

pub use hfk::{alexander_poly, hfk_hat, hfk_minus, HfkMinusColumn};
pub use tau::{epsilon, nu, tau, tau_from_hfk_minus};
pub use upsilon::{format_rational, upsilon_at, upsilon_pl, PLFunction, Rational};
pub use vs::{vs_duality_check, nu_minus, v_prime, v_s, v_s_truncated, v_sequence};

use crate::catalogue::LaurentPoly;
use crate::complex::CfkComplex;
use crate::error::CfkError;
use crate::reduce::reduce;
use crate::validate::{validate, Level};

/// g(C): the top Alexander grading of the reduced complex.
pub fn genus(c: &CfkComplex) -> i64 {
    let (r, _) = reduce(c);
    r.generators().iter().map(|g| g.alexander).max().unwrap_or(0)
}

/// Largest slope of Υ, a lower bound for the concordance genus.
pub fn concordance_genus_bound(c: &CfkComplex) -> Result<i64, CfkError> {
    let pl = upsilon_pl(c)?;
    Ok(pl.max_slope().map_or(0, |s| s.to_integer()))
}

/// Order on ε-classes: compares via ε(c1 ⊗ c2*).
pub fn epsilon_order(c1: &CfkComplex, c2: &CfkComplex) -> Result<Ordering, CfkError> {
    let (t, _) = reduce(&c1.tensor(&c2.dual()));
    Ok(epsilon(&t)?.cmp(&0))
}

/// Whether V₀ vanishes on both c1 ⊗ c2* and c1* ⊗ c2.
pub fn v0_equivalent(c1: &CfkComplex, c2: &CfkComplex) -> Result<bool, CfkError> {
    let (a, _) = reduce(&c1.tensor(&c2.dual()));
    let (b, _) = reduce(&c1.dual().tensor(c2));
    Ok(v_s(&a, 0)? == 0 && v_s(&b, 0)? == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonData {
    pub pl: Option<PLFunction>,
    pub samples: Vec<(Rational, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: String,
    pub tau: i64,
    pub nu: i64,
    pub epsilon: i8,
    pub nu_minus: i64,
    pub v_sequence: Vec<(i64, u64)>,
    pub v0: u64,
    pub d_plus_one_surgery: i64,
    pub genus: i64,
    pub upsilon: UpsilonData,
    pub hfk_hat: BTreeMap<(i64, i64), usize>,
    pub alexander_poly: LaurentPoly,
    pub concordance_genus_lower_bound: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub upsilon_pl: bool,
    pub samples: Vec<Rational>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { upsilon_pl: true, samples: (0..=8).map(|k| Rational::new(k, 4)).collect() }
    }
}

/// Computes the full report. The input is validated at knotlike level and
/// then reduced; every invariant here is unchanged by reduction.
pub fn report(c: &CfkComplex, opts: &ReportOptions) -> Result<InvariantReport, CfkError> {
    validate(c, Level::Knotlike)?;
    let (r, _) = reduce(c);
    let (concordance, surgery) = rayon::join(
        || -> Result<_, CfkError> { Ok((tau(&r)?, nu(&r)?, epsilon(&r)?)) },
        || -> Result<_, CfkError> { Ok((v_sequence(&r)?, v_s(&r, 0)?)) },
    );
    let (tau, nu, epsilon) = concordance?;
    let (v_sequence, v0) = surgery?;
    let nu_minus = v_sequence.last().map_or(0, |(s, _)| *s);
    let samples = opts
        .samples
        .par_iter()
        .map(|t| Ok((*t, upsilon_at(&r, *t)?)))
        .collect::<Result<Vec<_>, CfkError>>()?;
    let pl = if opts.upsilon_pl { Some(upsilon_pl(&r)?) } else { None };
    let bound = pl.as_ref().map(|p| p.max_slope().map_or(0, |s| s.to_integer()));
    Ok(InvariantReport {
        name: c.name().to_string(),
        tau,
        nu,
        epsilon,
        nu_minus,
        v_sequence,
        v0,
        d_plus_one_surgery: -2 * v0 as i64,
        genus: r.generators().iter().map(|g| g.alexander).max().unwrap_or(0),
        upsilon: UpsilonData { pl, samples },
        hfk_hat: hfk_hat(&r),
        alexander_poly: alexander_poly(&r),
        concordance_genus_lower_bound: bound,
    })
}

impl InvariantReport {
    /// One row in the layout of a comparison table.
    pub fn table_row(&self) -> String {
        let upsilon = match &self.upsilon.pl {
            Some(pl) if pl.is_zero() => "0".to_string(),
            Some(pl) => pl.to_string(),
            None => "-".to_string(),
        };
        format!(
            "{} | tau={} nu={} nu-={} V0={} eps={} | Upsilon: {}",
            self.name, self.tau, self.nu, self.nu_minus, self.v0, self.epsilon, upsilon
        )
    }
}

//! Structural checks on complexes.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{f2, BitVector};
use crate::complex::CfkComplex;
use crate::error::CfkError;
use crate::region::{region_complex, Region};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Filtration, grading and ∂² = 0 axioms.
    Basic,
    /// Basic plus vertical homology F in Maslov 0, horizontal homology of
    /// dimension 1 and ĤFK rank symmetry.
    Knotlike,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    AlexanderFiltration { from: String, to: String, u_power: u32 },
    MaslovDrop { from: String, to: String, u_power: u32 },
    SquareNonzero { from: String, to: String, u_power: u32 },
    Empty,
    VerticalHomology { dimension: usize },
    VerticalMaslov { maslov: i64 },
    HorizontalHomology { dimension: usize },
    HfkAsymmetric { s: i64, rank: usize, mirror_rank: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AlexanderFiltration { from, to, u_power } => {
                write!(f, "Alexander filtration: arrow {from} -> {to} (u_power {u_power}) raises A")
            }
            Violation::MaslovDrop { from, to, u_power } => {
                write!(f, "Maslov drop: arrow {from} -> {to} (u_power {u_power}) does not lower M by one")
            }
            Violation::SquareNonzero { from, to, u_power } => {
                write!(f, "d^2 != 0: odd number of paths {from} -> {to} with total u_power {u_power}")
            }
            Violation::Empty => write!(f, "empty complex"),
            Violation::VerticalHomology { dimension } => {
                write!(f, "vertical homology has dimension {dimension}, expected 1")
            }
            Violation::VerticalMaslov { maslov } => {
                write!(f, "vertical homology sits in Maslov grading {maslov}, expected 0")
            }
            Violation::HorizontalHomology { dimension } => {
                write!(f, "horizontal homology has dimension {dimension}, expected 1")
            }
            Violation::HfkAsymmetric { s, rank, mirror_rank } => {
                write!(f, "HFK-hat rank {rank} in Alexander grading {s} but {mirror_rank} in {}", -s)
            }
        }
    }
}

pub fn violations(c: &CfkComplex, level: Level) -> Vec<Violation> {
    let mut out = basic_violations(c);
    if level == Level::Knotlike && out.is_empty() {
        out.extend(knotlike_violations(c));
    }
    out
}

pub fn validate(c: &CfkComplex, level: Level) -> Result<(), CfkError> {
    let v = violations(c, level);
    if v.is_empty() {
        Ok(())
    } else {
        Err(CfkError::Invalid(v))
    }
}

fn basic_violations(c: &CfkComplex) -> Vec<Violation> {
    let id = |i: usize| c.generator(i).id.clone();
    let mut out = Vec::new();
    for a in c.arrows() {
        let (from, to) = (c.generator(a.from), c.generator(a.to));
        let u = i64::from(a.u_power);
        if to.alexander - u > from.alexander {
            out.push(Violation::AlexanderFiltration { from: id(a.from), to: id(a.to), u_power: a.u_power });
        }
        if to.maslov - 2 * u != from.maslov - 1 {
            out.push(Violation::MaslovDrop { from: id(a.from), to: id(a.to), u_power: a.u_power });
        }
    }
    for x in 0..c.len() {
        let mut paths: HashMap<(usize, u32), usize> = HashMap::new();
        for &(y, a) in c.outgoing(x) {
            for &(z, b) in c.outgoing(y) {
                *paths.entry((z, a + b)).or_default() += 1;
            }
        }
        let mut odd: Vec<(usize, u32)> =
            paths.into_iter().filter(|(_, k)| k % 2 == 1).map(|(key, _)| key).collect();
        odd.sort_unstable();
        for (z, u) in odd {
            out.push(Violation::SquareNonzero { from: id(x), to: id(z), u_power: u });
        }
    }
    out
}

fn knotlike_violations(c: &CfkComplex) -> Vec<Violation> {
    if c.is_empty() {
        return vec![Violation::Empty];
    }
    let mut out = Vec::new();
    let vertical = region_complex(c, Region::Vertical);
    let h = vertical.module.homology_f2().expect("basic-valid vertical complex");
    let dimension: usize = h.values().sum();
    if dimension != 1 {
        out.push(Violation::VerticalHomology { dimension });
    } else {
        let g = *h.keys().next().expect("one class");
        if g != 0.into() {
            out.push(Violation::VerticalMaslov { maslov: g.to_integer() });
        }
    }
    let dimension = horizontal_dimension(c);
    if dimension != 1 {
        out.push(Violation::HorizontalHomology { dimension });
    }
    let ranks = hfk_hat_ranks(c);
    for (&s, &rank) in &ranks {
        let mirror_rank = ranks.get(&-s).copied().unwrap_or(0);
        if s > 0 && rank != mirror_rank {
            out.push(Violation::HfkAsymmetric { s, rank, mirror_rank });
        }
    }
    for (&s, &rank) in &ranks {
        if s < 0 && !ranks.contains_key(&-s) {
            out.push(Violation::HfkAsymmetric { s, rank, mirror_rank: 0 });
        }
    }
    out
}

/// Dimension of H(C{j = 0}): the translate of each generator at j = 0,
/// joined by the arrows that preserve j.
fn horizontal_dimension(c: &CfkComplex) -> usize {
    let mut cols = vec![BitVector::zeros(c.len()); c.len()];
    for a in c.arrows() {
        if c.alexander(a.to) - i64::from(a.u_power) == c.alexander(a.from) {
            cols[a.from].flip(a.to);
        }
    }
    c.len() - 2 * f2::rank(c.len(), &cols)
}

/// Total ĤFK rank per Alexander grading (nonzero entries only).
pub(crate) fn hfk_hat_ranks(c: &CfkComplex) -> std::collections::BTreeMap<i64, usize> {
    let (lo, hi) = c.alexander_range();
    (lo..=hi)
        .filter_map(|s| {
            let r = region_complex(c, Region::AssocGradedHat(s));
            let dim: usize = r.module.homology_f2().expect("associated graded is an F2 complex").values().sum();
            (dim > 0).then_some((s, dim))
        })
        .collect()
}

//! JSON documents for complexes and reports.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{Arrow, CfkComplex, Generator};
use crate::error::CfkError;
use crate::invariants::{format_rational, InvariantReport, Rational};
use crate::validate::{validate, Level};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub id: String,
    pub maslov: i64,
    pub alexander: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub from: String,
    pub to: String,
    pub u_power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    pub arrows: Vec<ArrowEntry>,
}

impl ComplexFile {
    /// Canonical form: generators by (Maslov, Alexander, id), arrows by
    /// (from, to, u_power) in that generator order.
    pub fn from_complex(c: &CfkComplex) -> Self {
        let order = c.canonical_order();
        let mut rank = vec![0; c.len()];
        for (k, &i) in order.iter().enumerate() {
            rank[i] = k;
        }
        let generators = order
            .iter()
            .map(|&i| {
                let g = c.generator(i);
                GeneratorEntry { id: g.id.clone(), maslov: g.maslov, alexander: g.alexander }
            })
            .collect();
        let mut arrows: Vec<&Arrow> = c.arrows().iter().collect();
        arrows.sort_by_key(|a| (rank[a.from], rank[a.to], a.u_power));
        let arrows = arrows
            .into_iter()
            .map(|a| ArrowEntry {
                from: c.generator(a.from).id.clone(),
                to: c.generator(a.to).id.clone(),
                u_power: a.u_power,
            })
            .collect();
        Self { name: c.name().to_string(), generators, arrows }
    }

    pub fn to_complex(&self) -> Result<CfkComplex, CfkError> {
        let gens: Vec<Generator> =
            self.generators.iter().map(|g| Generator::new(g.id.clone(), g.maslov, g.alexander)).collect();
        let index: HashMap<&str, usize> =
            self.generators.iter().enumerate().map(|(i, g)| (g.id.as_str(), i)).collect();
        let lookup = |id: &str| {
            index.get(id).copied().ok_or_else(|| CfkError::Format(format!("arrow references unknown generator `{id}`")))
        };
        let arrows = self
            .arrows
            .iter()
            .map(|a| Ok(Arrow { from: lookup(&a.from)?, to: lookup(&a.to)?, u_power: a.u_power }))
            .collect::<Result<Vec<_>, CfkError>>()?;
        CfkComplex::new(self.name.clone(), gens, arrows)
    }
}

pub fn to_json(c: &CfkComplex) -> String {
    let mut s = serde_json::to_string_pretty(&ComplexFile::from_complex(c)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses a complex document and checks the basic axioms.
pub fn from_json(text: &str) -> Result<CfkComplex, CfkError> {
    let file: ComplexFile = serde_json::from_str(text)
        .map_err(|e| CfkError::Format(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let c = file.to_complex()?;
    validate(&c, Level::Basic)?;
    Ok(c)
}

pub fn load(path: &Path) -> Result<CfkComplex, CfkError> {
    let text = std::fs::read_to_string(path).map_err(|e| CfkError::Format(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| match e {
        CfkError::Format(m) => CfkError::Format(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn save(c: &CfkComplex, path: &Path) -> Result<(), CfkError> {
    std::fs::write(path, to_json(c)).map_err(|e| CfkError::Format(format!("{}: {e}", path.display())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonFile {
    /// `[t, value]` pairs at the breakpoints, when the PL form was computed.
    pub breakpoints: Option<Vec<[String; 2]>>,
    pub certified: Option<bool>,
    pub samples: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfkEntry {
    pub alexander: i64,
    pub maslov: i64,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub name: String,
    pub tau: i64,
    pub nu: i64,
    pub epsilon: i8,
    pub nu_minus: i64,
    pub v_sequence: Vec<[i64; 2]>,
    pub v0: u64,
    pub d_plus_one_surgery: i64,
    pub genus: i64,
    pub concordance_genus_lower_bound: Option<i64>,
    pub upsilon: UpsilonFile,
    pub hfk_hat: Vec<HfkEntry>,
    /// `[exponent, coefficient]` pairs, descending.
    pub alexander_poly: Vec<[i64; 2]>,
}

fn pair(t: Rational, v: Rational) -> [String; 2] {
    [format_rational(t), format_rational(v)]
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, CfkError> {
    let bad = || CfkError::Format(format!("`{s}` is not a rational p/q"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if d == 0 {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl From<&InvariantReport> for ReportFile {
    fn from(r: &InvariantReport) -> Self {
        Self {
            name: r.name.clone(),
            tau: r.tau,
            nu: r.nu,
            epsilon: r.epsilon,
            nu_minus: r.nu_minus,
            v_sequence: r.v_sequence.iter().map(|&(s, v)| [s, v as i64]).collect(),
            v0: r.v0,
            d_plus_one_surgery: r.d_plus_one_surgery,
            genus: r.genus,
            concordance_genus_lower_bound: r.concordance_genus_lower_bound,
            upsilon: UpsilonFile {
                breakpoints: r
                    .upsilon
                    .pl
                    .as_ref()
                    .map(|pl| pl.breakpoints.iter().zip(&pl.values).map(|(t, v)| pair(*t, *v)).collect()),
                certified: r.upsilon.pl.as_ref().map(|pl| pl.certified),
                samples: r.upsilon.samples.iter().map(|(t, v)| pair(*t, *v)).collect(),
            },
            hfk_hat: r
                .hfk_hat
                .iter()
                .map(|(&(alexander, maslov), &rank)| HfkEntry { alexander, maslov, rank })
                .collect(),
            alexander_poly: r.alexander_poly.terms().rev().map(|(e, c)| [e, c]).collect(),
        }
    }
}

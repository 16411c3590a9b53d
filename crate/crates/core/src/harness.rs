//! Random small complexes and the property suite run over them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalogue;
use crate::complex::{Arrow, CfkComplex, Generator};
use crate::error::CfkError;
use crate::format;
use crate::reduce::reduce;
use crate::invariants::{
    self, vs_duality_check, epsilon, nu, tau, tau_from_hfk_minus, upsilon_at, upsilon_pl, v_s, v_s_truncated,
    v_sequence, Rational,
};
use crate::validate::{hfk_hat_ranks, violations, Level};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub max_generators: usize,
    pub max_u_power: u32,
    pub alexander_range: (i64, i64),
    pub seed: u64,
    pub iterations: usize,
    /// Negative control: flip the power of one arrow in every sample.
    pub corrupt: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self { max_generators: 6, max_u_power: 3, alexander_range: (-3, 3), seed: 0, iterations: 500, corrupt: false }
    }
}

/// Rng for one iteration; iterations use independent streams of the seed.
pub fn iteration_rng(seed: u64, iteration: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(iteration as u64);
    rng
}

fn square_zero(c: &CfkComplex) -> bool {
    violations(c, Level::Basic).is_empty()
}

/// A random complex satisfying the basic axioms. Arrows are offered in
/// random order; one that breaks ∂² = 0 is kept only if a single further
/// arrow repairs it.
pub fn random_complex(cfg: &FuzzConfig, rng: &mut impl Rng) -> CfkComplex {
    let n = rng.gen_range(1..=cfg.max_generators.max(1));
    let (alo, ahi) = cfg.alexander_range;
    let m_span = 2 * i64::from(cfg.max_u_power) + 1;
    let gens: Vec<Generator> = (0..n)
        .map(|i| Generator::new(format!("g{i}"), rng.gen_range(-m_span..=m_span) / 2, rng.gen_range(alo..=ahi)))
        .collect();

    let mut candidates = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let lift = gens[y].maslov - gens[x].maslov + 1;
            if x == y || lift < 0 || lift % 2 != 0 {
                continue;
            }
            let a = lift / 2;
            if a <= i64::from(cfg.max_u_power) && gens[y].alexander - a <= gens[x].alexander {
                candidates.push(Arrow { from: x, to: y, u_power: a as u32 });
            }
        }
    }
    candidates.shuffle(rng);

    let build = |arrows: &[Arrow]| CfkComplex::new("fuzz", gens.clone(), arrows.to_vec()).expect("distinct arrows");
    let mut arrows: Vec<Arrow> = Vec::new();
    for (k, a) in candidates.iter().enumerate() {
        if arrows.contains(a) || !rng.gen_bool(0.5) {
            continue;
        }
        arrows.push(*a);
        if square_zero(&build(&arrows)) {
            continue;
        }
        let repair = candidates[k + 1..].iter().find(|b| {
            if arrows.contains(b) {
                return false;
            }
            let mut trial = arrows.clone();
            trial.push(**b);
            square_zero(&build(&trial))
        });
        match repair {
            Some(b) => arrows.push(*b),
            None => {
                arrows.pop();
            }
        }
    }
    let mut c = build(&arrows);
    if cfg.corrupt && !arrows.is_empty() {
        let k = rng.gen_range(0..arrows.len());
        arrows[k].u_power += 1;
        c = build(&arrows);
    }
    c
}

/// A random complex invariant under the flip of the two filtrations, in
/// the pinned picture `(M, A) -> (M - 2A, -A)`. Generators come in twin
/// pairs or sit alone at A = 0; arrows are added in flip orbits.
pub fn random_symmetric_complex(cfg: &FuzzConfig, rng: &mut impl Rng) -> CfkComplex {
    let (alo, ahi) = cfg.alexander_range;
    let reach = alo.abs().min(ahi.abs()).max(1);
    let m_span = 2 * i64::from(cfg.max_u_power) + 1;
    let total = rng.gen_range(1..=cfg.max_generators.max(1));
    let pairs = rng.gen_range(0..=total / 2);
    let mut gens = Vec::new();
    let mut twin = Vec::new();
    for p in 0..pairs {
        let a = rng.gen_range(1..=reach) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let m = rng.gen_range(-m_span..=m_span) / 2;
        gens.push(Generator::new(format!("p{p}"), m, a));
        gens.push(Generator::new(format!("q{p}"), m - 2 * a, -a));
        let k = gens.len();
        twin.extend([k - 1, k - 2]);
    }
    for z in 0..total - 2 * pairs {
        gens.push(Generator::new(format!("z{z}"), rng.gen_range(-m_span..=m_span) / 2, 0));
        twin.push(gens.len() - 1);
    }
    let n = gens.len();
    let flip = |e: Arrow| {
        let u = i64::from(e.u_power) + gens[e.from].alexander - gens[e.to].alexander;
        Arrow { from: twin[e.from], to: twin[e.to], u_power: u as u32 }
    };
    let mut orbits: Vec<Vec<Arrow>> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let lift = gens[y].maslov - gens[x].maslov + 1;
            if x == y || lift < 0 || lift % 2 != 0 {
                continue;
            }
            let a = lift / 2;
            if a <= i64::from(cfg.max_u_power) && gens[y].alexander - a <= gens[x].alexander {
                let e = Arrow { from: x, to: y, u_power: a as u32 };
                let f = flip(e);
                if f < e {
                    continue;
                }
                orbits.push(if f == e { vec![e] } else { vec![e, f] });
            }
        }
    }
    orbits.shuffle(rng);
    let build = |arrows: &[Arrow]| CfkComplex::new("fuzz", gens.clone(), arrows.to_vec()).expect("distinct arrows");
    let mut arrows: Vec<Arrow> = Vec::new();
    for (k, orbit) in orbits.iter().enumerate() {
        if arrows.contains(&orbit[0]) || !rng.gen_bool(0.5) {
            continue;
        }
        let before = arrows.len();
        arrows.extend(orbit);
        if square_zero(&build(&arrows)) {
            continue;
        }
        let repair = orbits[k + 1..].iter().find(|o| {
            if arrows.contains(&o[0]) {
                return false;
            }
            let mut trial = arrows.clone();
            trial.extend(o.iter());
            square_zero(&build(&trial))
        });
        match repair {
            Some(o) => arrows.extend(o.iter()),
            None => arrows.truncate(before),
        }
    }
    build(&arrows)
}

/// Shifts gradings so the vertical homology sits in Maslov 0 and the ĤFK
/// ranks are centred, then keeps the result if it is knotlike.
pub fn knotlike_normalized(c: &CfkComplex) -> Option<CfkComplex> {
    if !violations(c, Level::Basic).is_empty() {
        return None;
    }
    let c = catalogue::normalize_maslov(c);
    let ranks = hfk_hat_ranks(&c);
    let (lo, hi) = (*ranks.keys().next()?, *ranks.keys().next_back()?);
    if (lo + hi) % 2 != 0 {
        return None;
    }
    let c = c.shifted(0, -(lo + hi) / 2);
    violations(&c, Level::Knotlike).is_empty().then_some(c)
}

/// The first knotlike complex with at least one arrow in the stream for
/// `iteration`, if one turns up within `max_draws` draws. Draws alternate
/// between unconstrained and flip-symmetric complexes. Three iterations in
/// four also insist that the reduced complex keeps at least 3 generators.
pub fn random_knotlike(cfg: &FuzzConfig, iteration: usize, max_draws: usize) -> Option<CfkComplex> {
    let mut rng = iteration_rng(cfg.seed, iteration);
    let nontrivial = cfg.max_generators > 1;
    let min_reduced = if nontrivial && cfg.max_generators >= 3 && !iteration.is_multiple_of(4) { 3 } else { 0 };
    (0..max_draws)
        .find_map(|k| {
            let c = if k % 2 == 0 { random_complex(cfg, &mut rng) } else { random_symmetric_complex(cfg, &mut rng) };
            if nontrivial && c.arrows().is_empty() {
                return None;
            }
            knotlike_normalized(&c).filter(|c| min_reduced == 0 || reduce(c).0.len() >= min_reduced)
        })
        .map(|c| c.with_name(format!("fuzz seed {} iteration {iteration}", cfg.seed)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyViolation {
    pub property: String,
    pub detail: String,
    /// The offending complex as a complex document.
    pub reproducer: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checked: usize,
    pub violations: Vec<PropertyViolation>,
    /// Outcomes that no algebraic identity rules out, such as both excess
    /// conditions of ε holding at once.
    pub findings: Vec<PropertyViolation>,
}

impl SuiteReport {
    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        self.findings.extend(other.findings);
    }
}

struct Checker<'a> {
    c: &'a CfkComplex,
    out: SuiteReport,
}

impl<'a> Checker<'a> {
    fn new(c: &'a CfkComplex) -> Self {
        Self { c, out: SuiteReport { checked: 1, ..Default::default() } }
    }

    fn entry(&self, property: &str, detail: String) -> PropertyViolation {
        PropertyViolation { property: property.to_string(), detail, reproducer: format::to_json(self.c) }
    }

    fn check(&mut self, property: &str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            let v = self.entry(property, detail());
            self.out.violations.push(v);
        }
    }

    fn value<T>(&mut self, property: &str, r: Result<T, CfkError>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(CfkError::EpsilonConflict) => {
                let v = self.entry(property, CfkError::EpsilonConflict.to_string());
                self.out.findings.push(v);
                None
            }
            Err(e) => {
                let v = self.entry(property, e.to_string());
                self.out.violations.push(v);
                None
            }
        }
    }
}

fn samples() -> Vec<Rational> {
    (0..=8).map(|k| Rational::new(k, 4)).collect()
}

/// Checks every algebraic property on one complex.
pub fn check_complex(c: &CfkComplex) -> SuiteReport {
    let mut k = Checker::new(c);
    let bad = violations(c, Level::Knotlike);
    if !bad.is_empty() {
        let detail = bad.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        k.check("knotlike validity", false, || detail);
        return k.out;
    }
    let d = c.dual();

    let t = k.value("tau", tau(c));
    let n = k.value("nu", nu(c));
    let seq = k.value("V_s", v_sequence(c));
    if let (Some(t), Some(n), Some(seq)) = (t, n, &seq) {
        let nm = seq.last().map_or(0, |(s, _)| *s);
        k.check("tau <= nu <= nu-", t <= n && n <= nm, || format!("tau {t}, nu {n}, nu- {nm}"));
        k.check("nu in {tau, tau + 1}", n == t || n == t + 1, || format!("tau {t}, nu {n}"));
        k.check("nu- >= 0", nm >= 0, || format!("nu- {nm}"));
    }
    if let Some(t) = t {
        let th = k.value("tau via HFK-", tau_from_hfk_minus(c));
        k.check("tau routes agree", th.is_none_or(|th| th == t), || format!("{t} vs {th:?}"));
        if let Some(td) = k.value("tau of dual", tau(&d)) {
            k.check("tau(dual) = -tau", td == -t, || format!("tau {t}, tau(dual) {td}"));
        }
    }
    if let (Some(e), Some(ed)) = (k.value("epsilon", epsilon(c)), k.value("epsilon of dual", epsilon(&d))) {
        k.check("epsilon(dual) = -epsilon", ed == -e, || format!("epsilon {e}, epsilon(dual) {ed}"));
    }
    if let Some(seq) = &seq {
        let (lo, hi) = c.alexander_range();
        let ext: Vec<(i64, u64)> =
            (lo - 2..=hi + 2).filter_map(|s| k.value("V_s", v_s(c, s)).map(|v| (s, v))).collect();
        let monotone = ext.windows(2).all(|w| w[0].1 >= w[1].1);
        k.check("V_s non-increasing", monotone, || format!("{ext:?}"));
        let tail = seq.iter().rev().skip(1).all(|(_, v)| *v > 0);
        k.check("V_s > 0 below nu-", tail, || format!("{seq:?}"));
    }
    for s in -1..=1 {
        if let Some(ok) = k.value("V_s duality", vs_duality_check(c, s)) {
            k.check("V_s duality", ok, || format!("V_{s}(C) != V'_{}(C*)", -s));
        }
    }
    if let (Some(a), Some(b)) = (k.value("V_0", v_s(c, 0)), k.value("V_0 truncated", v_s_truncated(c, 0))) {
        k.check("V_0 exact = truncated", a == b, || format!("exact {a}, truncated {b}"));
    }
    for t in samples() {
        if let (Some(u), Some(ud)) = (k.value("Upsilon", upsilon_at(c, t)), k.value("Upsilon of dual", upsilon_at(&d, t))) {
            k.check("Upsilon(dual) = -Upsilon", ud == -u, || format!("t = {t}: {u} vs {ud}"));
            if t == Rational::from_integer(0) {
                k.check("Upsilon(0) = 0", u == t, || format!("Upsilon(0) = {u}"));
            }
        }
    }
    if let Some(pl) = k.value("Upsilon PL", upsilon_pl(c)) {
        k.check("integer Upsilon slopes", pl.slopes().iter().all(|s| s.is_integer()), || pl.to_string());
        if let Some(t) = t {
            let first = pl.slopes().first().copied().unwrap_or_default();
            k.check("Upsilon'(0) = -tau", first == Rational::from_integer(-t), || format!("{pl} with tau {t}"));
        }
    }
    k.out
}

/// Runs the suite on `cfg.iterations` knotlike samples in parallel and
/// merges results in iteration order.
pub fn run_property_suite(cfg: &FuzzConfig) -> SuiteReport {
    let per: Vec<SuiteReport> = (0..cfg.iterations)
        .into_par_iter()
        .map(|i| {
            if cfg.corrupt {
                let mut rng = iteration_rng(cfg.seed, i);
                return check_complex(&random_complex(cfg, &mut rng));
            }
            random_knotlike(cfg, i, 2000).map_or_else(SuiteReport::default, |c| check_complex(&c))
        })
        .collect();
    let mut out = SuiteReport::default();
    for r in per {
        out.merge(r);
    }
    out
}

/// The named complexes the catalogue suite runs on.
pub fn catalogue_complexes() -> Vec<CfkComplex> {
    let mut out: Vec<CfkComplex> =
        catalogue::FIXTURES.iter().map(|n| catalogue::fixture(n).expect("listed fixture")).collect();
    for e in ["U", "T(2,3)", "-T(2,3)", "T(2,5)", "T(3,4)", "thin(2,1)", "thin(-1,2)", "T(2,3) # -T(2,3)"] {
        out.push(catalogue::named(e).expect("catalogue expression"));
    }
    out
}

/// Suite over the catalogue, plus the knot-level identities: symmetry of Υ
/// and behaviour under connected sum.
pub fn run_catalogue_suite() -> SuiteReport {
    let cs = catalogue_complexes();
    let mut out = SuiteReport::default();
    for r in cs.par_iter().map(check_complex).collect::<Vec<_>>() {
        out.merge(r);
    }
    for c in &cs {
        let mut k = Checker::new(c);
        k.out.checked = 0;
        for t in samples() {
            let (a, b) = (upsilon_at(c, t), upsilon_at(c, Rational::from_integer(2) - t));
            k.check("Upsilon(2 - t) = Upsilon(t)", a == b, || format!("t = {t}: {a:?} vs {b:?}"));
        }
        out.merge(k.out);
    }
    let pairs = [("T(2,3)", "T(2,3)"), ("T(2,3)", "-T(2,3)"), ("T(2,3)", "fig1"), ("T(2,5)", "fig6_C"), ("-T(2,3)", "thin(-1,1)")];
    for (a, b) in pairs {
        let (x, y) = (catalogue::named(a).expect("pair"), catalogue::named(b).expect("pair"));
        let (sum, _) = reduce(&x.tensor(&y));
        out.merge(additivity(&x, &y, &sum));
    }
    out
}

fn additivity(x: &CfkComplex, y: &CfkComplex, sum: &CfkComplex) -> SuiteReport {
    let mut k = Checker::new(sum);
    k.out.checked = 0;
    if let (Some(a), Some(b), Some(s)) = (k.value("tau", tau(x)), k.value("tau", tau(y)), k.value("tau", tau(sum))) {
        k.check("tau additive", s == a + b, || format!("{a} + {b} vs {s}"));
    }
    for t in samples() {
        let parts = (upsilon_at(x, t), upsilon_at(y, t), upsilon_at(sum, t));
        if let (Ok(a), Ok(b), Ok(s)) = parts {
            k.check("Upsilon additive", s == a + b, || format!("t = {t}: {a} + {b} vs {s}"));
        }
    }
    if let (Some(a), Some(b), Some(s)) = (k.value("epsilon", epsilon(x)), k.value("epsilon", epsilon(y)), k.value("epsilon", epsilon(sum))) {
        k.check("epsilon of equal signs", a != b || s == a, || format!("{a}, {b} give {s}"));
    }
    let nm = |c: &CfkComplex| invariants::nu_minus(c);
    if let (Some(a), Some(b), Some(s)) = (k.value("nu-", nm(x)), k.value("nu-", nm(y)), k.value("nu-", nm(sum))) {
        k.check("nu- subadditive", s <= a + b, || format!("{s} > {a} + {b}"));
    }
    k.out
}

//! Brute-force oracles. Everything here enumerates subsets of small degree
//! slices of CFK∞ directly, sharing no code with the library's elimination
//! routines beyond reading generators and arrows.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cfk::catalogue::LaurentPoly;
use cfk::{CfkComplex, Rational};

/// A translate `U^n x`, stored as `(generator, n)`.
pub type Translate = (usize, i64);

/// All translates of Maslov degree `d` passing `keep(i, j)`, over the
/// exponents `n` in `range`.
pub fn slice(c: &CfkComplex, d: i64, range: std::ops::RangeInclusive<i64>, keep: impl Fn(i64, i64) -> bool) -> Vec<Translate> {
    let mut out = Vec::new();
    for x in 0..c.len() {
        let m = c.maslov(x);
        if (m - d).rem_euclid(2) != 0 {
            continue;
        }
        let n = (m - d) / 2;
        if range.contains(&n) && keep(-n, c.alexander(x) - n) {
            out.push((x, n));
        }
    }
    out
}

/// Boundary of a chain in CFK∞ (no region restriction), as a set of translates.
pub fn boundary(c: &CfkComplex, chain: &BTreeSet<Translate>) -> BTreeSet<Translate> {
    let mut out = BTreeSet::new();
    for &(x, n) in chain {
        for a in c.arrows().iter().filter(|a| a.from == x) {
            let t = (a.to, n + i64::from(a.u_power));
            if !out.remove(&t) {
                out.insert(t);
            }
        }
    }
    out
}

pub fn subsets(items: &[Translate]) -> impl Iterator<Item = BTreeSet<Translate>> + '_ {
    assert!(items.len() < 20, "slice too large for enumeration");
    (0u32..1 << items.len()).map(move |mask| {
        items.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, t)| *t).collect()
    })
}

/// Boundary restricted to a region: components outside are dropped (quotient).
fn region_boundary(c: &CfkComplex, chain: &BTreeSet<Translate>, inside: &dyn Fn(i64, i64) -> bool) -> BTreeSet<Translate> {
    boundary(c, chain).into_iter().filter(|&(y, n)| inside(-n, c.alexander(y) - n)).collect()
}

/// Cycles of degree `d` in a region, and the set of boundaries of degree `d`
/// in an ambient region, by enumeration.
struct Homology {
    cycles: Vec<BTreeSet<Translate>>,
    boundaries: BTreeSet<BTreeSet<Translate>>,
}

fn homology(
    c: &CfkComplex,
    d: i64,
    range: std::ops::RangeInclusive<i64>,
    region: &dyn Fn(i64, i64) -> bool,
    ambient: &dyn Fn(i64, i64) -> bool,
) -> Homology {
    let here = slice(c, d, range.clone(), region);
    let cycles = subsets(&here).filter(|z| region_boundary(c, z, region).is_empty()).collect();
    let above = slice(c, d + 1, range, ambient);
    let boundaries = subsets(&above).map(|b| region_boundary(c, &b, ambient)).collect();
    Homology { cycles, boundaries }
}

/// τ by enumeration of vertical chains.
pub fn tau(c: &CfkComplex) -> i64 {
    let (lo, hi) = c.alexander_range();
    let vertical = |i: i64, _: i64| i == 0;
    for s in lo - 1..=hi + 1 {
        let sub = move |i: i64, j: i64| i == 0 && j <= s;
        let h = homology(c, 0, 0..=0, &sub, &vertical);
        if h.cycles.iter().any(|z| !h.boundaries.contains(z)) {
            return s;
        }
    }
    panic!("vertical homology never reached");
}

/// ν by enumeration: cycles of the hat hook whose vertical part is
/// nontrivial in H(C{i = 0}).
pub fn nu(c: &CfkComplex) -> i64 {
    let (lo, hi) = c.alexander_range();
    let vertical = |i: i64, _: i64| i == 0;
    let vb = homology(c, 0, 0..=0, &vertical, &vertical).boundaries;
    for s in lo - 1..=hi + 1 {
        let hook = move |i: i64, j: i64| i.max(j - s) == 0;
        let bound = (hi - s).max(0);
        let here = slice(c, 0, 0..=bound, hook);
        let hit = subsets(&here).filter(|z| region_boundary(c, z, &hook).is_empty()).any(|z| {
            let vpart: BTreeSet<Translate> = z.into_iter().filter(|t| t.1 == 0).collect();
            !vb.contains(&vpart)
        });
        if hit {
            return s;
        }
    }
    panic!("hat hook never surjects");
}

/// Maslov grading of the top of H(C{i <= 0}), found by scanning degrees.
pub fn minus_top(c: &CfkComplex) -> i64 {
    let mhi = c.generators().iter().map(|g| g.maslov).max().unwrap();
    let minus = |i: i64, _: i64| i <= 0;
    for d in (mhi - 40..=mhi).rev() {
        let h = homology(c, d, 0..=40, &minus, &minus);
        if h.cycles.iter().any(|z| !h.boundaries.contains(z)) {
            return d;
        }
    }
    panic!("no homology in C{{i <= 0}}");
}

/// V_s by enumeration: the top degree of a hook cycle nontrivial in
/// H(C{i <= 0}), measured down from the top of the tower.
pub fn v_s(c: &CfkComplex, s: i64) -> u64 {
    let top = minus_top(c);
    let minus = |i: i64, _: i64| i <= 0;
    let hook = move |i: i64, j: i64| i <= 0 && j <= s;
    for n in 0..=40 {
        let d = top - 2 * n;
        let h = homology(c, d, 0..=40, &hook, &minus);
        if h.cycles.iter().any(|z| !h.boundaries.contains(z)) {
            return n as u64;
        }
    }
    panic!("V_s not found below 40");
}

/// Υ(t) = -2 ν_t, where ν_t is the least level of the filtration
/// `(t/2) j + (1 - t/2) i` on degree-0 chains of CFK∞ at which the
/// generator of H_0 appears.
pub fn upsilon(c: &CfkComplex, t: Rational) -> Rational {
    let half = t / 2;
    let level = |(x, n): Translate| half * c.alexander(x) - n;
    let all = |_: i64, _: i64| true;
    let h = homology(c, 0, -40..=40, &all, &all);
    let best = h
        .cycles
        .iter()
        .filter(|z| !h.boundaries.contains(*z))
        .map(|z| z.iter().map(|&tr| level(tr)).max().expect("nonzero cycle"))
        .min()
        .expect("H_0 is nonzero");
    -best * 2
}

/// Alexander polynomial of T(p, q) from its semigroup: (1 - t) times the
/// sum of t^s over the semigroup elements, centred.
pub fn torus_alexander(p: i64, q: i64) -> LaurentPoly {
    let g2 = (p - 1) * (q - 1);
    let in_semigroup = |s: i64| (0..=s / p).any(|a| (s - a * p) % q == 0);
    let mut out = LaurentPoly::zero();
    for s in 0..=g2 {
        if in_semigroup(s) {
            out.add_term(s - g2 / 2, 1);
            out.add_term(s + 1 - g2 / 2, -1);
        }
    }
    // the tail beyond 2g telescopes to the single term t^{2g}
    out.add_term(g2 + 1 - g2 / 2, 1);
    out
}

/// Rank over F₂ by dense Gaussian elimination on rows of bytes.
pub fn dense_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else { continue };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] == 1 {
                let pivot = rows[rank].clone();
                for (a, b) in rows[r].iter_mut().zip(pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

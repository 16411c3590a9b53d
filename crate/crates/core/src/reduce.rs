//! Filtered cancellation and splitting off an unknot summand.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{f2, rank_over_fraction_field, BitVector, Echelon, FieldPoly, PolyMatrix};
use crate::complex::{Arrow, CfkComplex, Generator};
use crate::error::CfkError;
use crate::invariants;
use crate::slice::{boundary_columns, transfer, Slice};
use crate::validate::{validate, Level};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    /// `(source, target)` of each cancelled arrow, in cancellation order.
    pub cancelled_pairs: Vec<(String, String)>,
    /// `(replaced, added)`: the basis element `replaced` became
    /// `replaced + U^k added` for the unique grading-compatible `k`.
    pub basis_changes: Vec<(String, String)>,
}

/// Mutable arrow table keyed by generator index.
struct Table {
    out: BTreeMap<usize, BTreeMap<usize, u32>>,
    inc: BTreeMap<usize, BTreeMap<usize, u32>>,
}

impl Table {
    fn new(c: &CfkComplex) -> Self {
        let mut t = Table { out: BTreeMap::new(), inc: BTreeMap::new() };
        for a in c.arrows() {
            t.toggle(a.from, a.to, a.u_power);
        }
        t
    }

    fn toggle(&mut self, from: usize, to: usize, u: u32) {
        let row = self.out.entry(from).or_default();
        match row.get(&to) {
            Some(&old) => {
                assert_eq!(old, u, "inhomogeneous arrow update {from} -> {to}");
                row.remove(&to);
                self.inc.get_mut(&to).map(|m| m.remove(&from));
            }
            None => {
                row.insert(to, u);
                self.inc.entry(to).or_default().insert(from, u);
            }
        }
    }

    fn outgoing(&self, x: usize) -> Vec<(usize, u32)> {
        self.out.get(&x).map(|m| m.iter().map(|(k, v)| (*k, *v)).collect()).unwrap_or_default()
    }

    fn incoming(&self, x: usize) -> Vec<(usize, u32)> {
        self.inc.get(&x).map(|m| m.iter().map(|(k, v)| (*k, *v)).collect()).unwrap_or_default()
    }

    fn remove(&mut self, x: usize) {
        for (y, u) in self.outgoing(x) {
            self.toggle(x, y, u);
        }
        for (z, u) in self.incoming(x) {
            self.toggle(z, x, u);
        }
    }

    fn into_complex(self, c: &CfkComplex, keep: &[usize]) -> CfkComplex {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let gens: Vec<Generator> = keep.iter().map(|&i| c.generator(i).clone()).collect();
        let mut arrows = Vec::new();
        for (from, row) in &self.out {
            for (to, u) in row {
                arrows.push(Arrow { from: pos[from], to: pos[to], u_power: *u });
            }
        }
        arrows.sort();
        CfkComplex::new(c.name(), gens, arrows).expect("rewired arrows are well formed")
    }
}

/// Cancels every arrow that preserves both filtrations. The source with the
/// lowest (Maslov, id) goes first, then the target with the lowest id.
pub fn reduce(c: &CfkComplex) -> (CfkComplex, ReductionTrace) {
    let mut table = Table::new(c);
    let mut alive: BTreeSet<usize> = (0..c.len()).collect();
    let mut trace = ReductionTrace::default();
    let order = {
        let mut o: Vec<usize> = (0..c.len()).collect();
        o.sort_by(|&a, &b| (c.maslov(a), &c.generator(a).id).cmp(&(c.maslov(b), &c.generator(b).id)));
        o
    };
    let cancellable = |table: &Table, x: usize| -> Option<usize> {
        table
            .outgoing(x)
            .into_iter()
            .filter(|&(y, u)| u == 0 && c.alexander(y) == c.alexander(x))
            .map(|(y, _)| y)
            .min_by(|&a, &b| c.generator(a).id.cmp(&c.generator(b).id))
    };
    while let Some((x, y)) =
        order.iter().filter(|x| alive.contains(x)).find_map(|&x| cancellable(&table, x).map(|y| (x, y)))
    {
        let sources: Vec<(usize, u32)> = table.incoming(y).into_iter().filter(|(z, _)| *z != x).collect();
        let targets: Vec<(usize, u32)> = table.outgoing(x).into_iter().filter(|(w, _)| *w != y).collect();
        for &(z, b) in &sources {
            for &(w, d) in &targets {
                table.toggle(z, w, b + d);
            }
        }
        table.remove(x);
        table.remove(y);
        alive.remove(&x);
        alive.remove(&y);
        trace.cancelled_pairs.push((c.generator(x).id.clone(), c.generator(y).id.clone()));
    }
    let keep: Vec<usize> = alive.into_iter().collect();
    (table.into_complex(c, &keep), trace)
}

/// Result of splitting `C ≅ C(unknot) ⊕ A`.
#[derive(Clone, Debug)]
pub struct Split {
    /// Id of the basis element replaced by the distinguished cycle.
    pub distinguished: String,
    /// The distinguished cycle as `(id, n)` terms `U^n x`.
    pub cycle: Vec<(String, i64)>,
    /// The complementary summand, expressed in the new basis.
    pub remainder: CfkComplex,
    pub trace: ReductionTrace,
}

/// Finds a filtered basis in which a generator of the homology is isolated,
/// and returns the complementary (acyclic) summand.
pub fn split_unknot_summand(c: &CfkComplex) -> Result<Split, CfkError> {
    validate(c, Level::Knotlike)?;
    let v0 = invariants::v_s(c, 0)?;
    let v0_dual = invariants::v_s(&c.dual(), 0)?;
    if v0 != 0 || v0_dual != 0 {
        return Err(CfkError::Precondition(format!(
            "splitting needs V0 = 0 on both sides, found {v0} and {v0_dual}"
        )));
    }

    let cycle = distinguished_cycle(c)?;
    let p = cycle
        .iter()
        .filter(|&&(x, n)| n == 0 && c.alexander(x) == 0)
        .map(|&(x, _)| x)
        .min_by(|&a, &b| c.generator(a).id.cmp(&c.generator(b).id))
        .ok_or_else(|| CfkError::Internal("distinguished cycle has no term at (0, 0)".into()))?;

    let mut trace = ReductionTrace::default();
    // Differential as (to, from) -> power, then substitute x_p := cycle.
    let mut d: BTreeMap<(usize, usize), u32> =
        c.arrows().iter().map(|a| ((a.to, a.from), a.u_power)).collect();
    let row_p: Vec<(usize, u32)> =
        d.iter().filter(|((to, _), _)| *to == p).map(|((_, from), u)| (*from, *u)).collect();
    for &(w, n_w) in cycle.iter().filter(|(w, _)| *w != p) {
        trace.basis_changes.push((c.generator(p).id.clone(), c.generator(w).id.clone()));
        for &(z, a) in &row_p {
            toggle(&mut d, w, z, a + n_w as u32);
        }
    }
    d.retain(|(_, from), _| *from != p);
    let substituted = complex_from_table(c, &d, c.name());

    // Functional on Q_0 = C{min(i, j) >= 0}_0 vanishing on boundaries, with
    // value 1 on x_p; its support names the basis elements to modify.
    let in_q = |i: i64, j: i64| i >= 0 && j >= 0;
    let q0 = Slice::new(&substituted, 0, in_q);
    let q1 = Slice::new(&substituted, 1, in_q);
    let cols = boundary_columns(&substituted, &q1, &q0);
    let equations: Vec<BitVector> = (0..q0.len())
        .map(|k| BitVector::from_indices(cols.len(), cols.iter().enumerate().filter(|(_, v)| v.get(k)).map(|(j, _)| j)))
        .collect();
    let kp = q0.position(p).expect("x_p sits at (0, 0)");
    let phi = f2::kernel(cols.len(), &equations)
        .into_iter()
        .find(|v| v.get(kp))
        .ok_or_else(|| CfkError::Internal("distinguished cycle is a boundary in C{min(i,j) >= 0}".into()))?;
    for k in phi.ones().filter(|&k| k != kp) {
        let (y, n) = q0.elems[k];
        let m = (-n) as u32;
        trace.basis_changes.push((c.generator(y).id.clone(), c.generator(p).id.clone()));
        let row_y: Vec<(usize, u32)> =
            d.iter().filter(|((to, _), _)| *to == y).map(|((_, from), u)| (*from, *u)).collect();
        for (z, a) in row_y {
            toggle(&mut d, p, z, a + m);
        }
    }
    if d.keys().any(|(to, from)| *to == p || *from == p) {
        return Err(CfkError::Internal("basis cleaning left arrows at the distinguished generator".into()));
    }

    let keep: Vec<usize> = (0..c.len()).filter(|&i| i != p).collect();
    let full = complex_from_table(c, &d, &format!("{} remainder", c.name()));
    let remainder = full.restrict(&keep);
    validate(&remainder, Level::Basic)?;
    let matrix = u_matrix(&remainder);
    if !remainder.len().is_multiple_of(2) || 2 * rank_over_fraction_field(&matrix) != remainder.len() {
        return Err(CfkError::Certification("remainder is not acyclic".into()));
    }
    Ok(Split {
        distinguished: c.generator(p).id.clone(),
        cycle: cycle.iter().map(|&(x, n)| (c.generator(x).id.clone(), n)).collect(),
        remainder,
        trace,
    })
}

fn toggle(d: &mut BTreeMap<(usize, usize), u32>, to: usize, from: usize, u: u32) {
    match d.get(&(to, from)) {
        Some(&old) => {
            assert_eq!(old, u, "inhomogeneous basis change");
            d.remove(&(to, from));
        }
        None => {
            d.insert((to, from), u);
        }
    }
}

fn complex_from_table(c: &CfkComplex, d: &BTreeMap<(usize, usize), u32>, name: &str) -> CfkComplex {
    let arrows = d.iter().map(|(&(to, from), &u)| Arrow { from, to, u_power: u }).collect();
    CfkComplex::new(name, c.generators().to_vec(), arrows).expect("basis change keeps structure")
}

/// Differential over F₂[U] with rows = targets and columns = sources.
pub fn u_matrix(c: &CfkComplex) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(c.len(), c.len());
    for a in c.arrows() {
        m.set(a.to, a.from, FieldPoly::monomial(a.u_power));
    }
    m
}

/// A Maslov-0 cycle of C{max(i, j) <= 0} that is not a boundary in
/// C{i <= 0}, put in normal form against boundaries lying in the hook.
fn distinguished_cycle(c: &CfkComplex) -> Result<Vec<(usize, i64)>, CfkError> {
    let hook = |i: i64, j: i64| i <= 0 && j <= 0;
    let minus = |i: i64, _: i64| i <= 0;
    let h0 = Slice::new(c, 0, hook);
    let h_1 = Slice::new(c, -1, hook);
    let cycles = f2::kernel(h_1.len(), &boundary_columns(c, &h0, &h_1));

    // Ambient degree-0 slice with non-hook translates first, so echelon rows
    // pivoting inside the hook span exactly the boundaries that lie in it.
    let ambient = Slice::new(c, 0, minus).partitioned(|x, n| !hook(-n, c.alexander(x) - n));
    let first_hook = ambient.elems.iter().take_while(|(x, n)| !hook(-n, c.alexander(*x) - n)).count();
    let mut boundaries = Echelon::new(ambient.len());
    for col in boundary_columns(c, &Slice::new(c, 1, minus), &ambient) {
        boundaries.insert(&col);
    }
    let mut in_hook = Echelon::new(ambient.len());
    for row in boundaries.basis().cloned().collect::<Vec<_>>() {
        if row.first_one().is_some_and(|p| p >= first_hook) {
            in_hook.insert(&row);
        }
    }
    for z in &cycles {
        let v = transfer(z, &h0, &ambient);
        if boundaries.contains(&v) {
            continue;
        }
        let normal = in_hook.reduce(&v);
        let terms: Vec<(usize, i64)> = normal.ones().map(|k| ambient.elems[k]).collect();
        debug_assert!(terms.iter().all(|&(x, n)| hook(-n, c.alexander(x) - n)));
        return Ok(terms);
    }
    Err(CfkError::Precondition("no hook cycle generates the homology of C{i <= 0}".into()))
}

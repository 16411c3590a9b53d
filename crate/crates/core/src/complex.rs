//! Generators, arrows and the complex itself.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::CfkError;

/// A basis element over F₂[U, U⁻¹], pinned at algebraic filtration 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub maslov: i64,
    pub alexander: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, maslov: i64, alexander: i64) -> Self {
        Self { id: id.into(), maslov, alexander }
    }
}

/// The term `U^u_power · to` in the boundary of `from`. Endpoints are
/// indices into the owning complex's generator list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub u_power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfkComplex {
    name: String,
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
    outgoing: Vec<Vec<(usize, u32)>>,
    incoming: Vec<Vec<(usize, u32)>>,
}

impl CfkComplex {
    /// Builds a complex, rejecting repeated ids, dangling arrows and
    /// repeated arrows. Grading axioms are left to [`crate::validate`].
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        arrows: Vec<Arrow>,
    ) -> Result<Self, CfkError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.id.as_str()) {
                return Err(CfkError::Format(format!("duplicate generator id `{}`", g.id)));
            }
        }
        let n = generators.len();
        let mut arrow_set = HashSet::new();
        for a in &arrows {
            if a.from >= n || a.to >= n {
                return Err(CfkError::Format(format!("arrow {a:?} references a missing generator")));
            }
            if !arrow_set.insert(*a) {
                return Err(CfkError::Format(format!(
                    "duplicate arrow {} -> {} (u_power {})",
                    generators[a.from].id, generators[a.to].id, a.u_power
                )));
            }
        }
        let mut outgoing = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        for a in &arrows {
            outgoing[a.from].push((a.to, a.u_power));
            incoming[a.to].push((a.from, a.u_power));
        }
        Ok(Self { name: name.into(), generators, arrows, outgoing, incoming })
    }

    /// Convenience constructor from `(id, maslov, alexander)` triples and
    /// `(from, to, u_power)` arrows given by id.
    pub fn from_ids(
        name: impl Into<String>,
        generators: &[(&str, i64, i64)],
        arrows: &[(&str, &str, u32)],
    ) -> Result<Self, CfkError> {
        let gens: Vec<Generator> =
            generators.iter().map(|(id, m, a)| Generator::new(*id, *m, *a)).collect();
        let index: HashMap<&str, usize> =
            generators.iter().enumerate().map(|(i, (id, _, _))| (*id, i)).collect();
        let lookup = |id: &str| {
            index.get(id).copied().ok_or_else(|| CfkError::Format(format!("unknown generator `{id}`")))
        };
        let arrows = arrows
            .iter()
            .map(|(f, t, u)| Ok(Arrow { from: lookup(f)?, to: lookup(t)?, u_power: *u }))
            .collect::<Result<Vec<_>, CfkError>>()?;
        Self::new(name, gens, arrows)
    }

    pub fn empty(name: impl Into<String>) -> Self {
        Self::new(name, Vec::new(), Vec::new()).expect("empty complex is well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    /// `(target, u_power)` for each arrow out of `i`.
    pub fn outgoing(&self, i: usize) -> &[(usize, u32)] {
        &self.outgoing[i]
    }

    /// `(source, u_power)` for each arrow into `i`.
    pub fn incoming(&self, i: usize) -> &[(usize, u32)] {
        &self.incoming[i]
    }

    pub fn maslov(&self, i: usize) -> i64 {
        self.generators[i].maslov
    }

    pub fn alexander(&self, i: usize) -> i64 {
        self.generators[i].alexander
    }

    /// Smallest and largest Alexander grading, `(0, 0)` when empty.
    pub fn alexander_range(&self) -> (i64, i64) {
        let min = self.generators.iter().map(|g| g.alexander).min().unwrap_or(0);
        let max = self.generators.iter().map(|g| g.alexander).max().unwrap_or(0);
        (min, max)
    }

    /// Range of s beyond which every s-indexed construction is constant.
    pub fn s_scan_range(&self) -> std::ops::RangeInclusive<i64> {
        let (lo, hi) = self.alexander_range();
        lo - 1..=hi + 1
    }

    /// Shifts every Maslov and Alexander grading uniformly. Arrow validity
    /// is unaffected.
    pub fn shifted(&self, maslov: i64, alexander: i64) -> Self {
        let gens = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), g.maslov + maslov, g.alexander + alexander))
            .collect();
        Self::new(self.name.clone(), gens, self.arrows.clone()).expect("shift keeps structure")
    }

    /// The dual complex: gradings negated, arrows reversed. Ids are kept.
    pub fn dual(&self) -> Self {
        let gens = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), -g.maslov, -g.alexander))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { from: a.to, to: a.from, u_power: a.u_power })
            .collect();
        let name = match self.name.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => rest.to_string(),
            _ if self.name.contains(' ') => format!("-({})", self.name),
            _ => format!("-{}", self.name),
        };
        Self::new(name, gens, arrows).expect("dual keeps structure")
    }

    /// Tensor product over F₂[U, U⁻¹]. The generator for `(x, y)` has id
    /// `x.y`, made unique if that clashes.
    pub fn tensor(&self, other: &Self) -> Self {
        let n2 = other.len();
        let mut used = HashSet::new();
        let mut gens = Vec::with_capacity(self.len() * n2);
        for x in &self.generators {
            for y in &other.generators {
                let mut id = format!("{}.{}", x.id, y.id);
                while !used.insert(id.clone()) {
                    id.push('\'');
                }
                gens.push(Generator::new(id, x.maslov + y.maslov, x.alexander + y.alexander));
            }
        }
        let idx = |i: usize, j: usize| i * n2 + j;
        let mut arrows = Vec::with_capacity(self.arrows.len() * n2 + self.len() * other.arrows.len());
        for a in &self.arrows {
            for j in 0..n2 {
                arrows.push(Arrow { from: idx(a.from, j), to: idx(a.to, j), u_power: a.u_power });
            }
        }
        for i in 0..self.len() {
            for b in &other.arrows {
                arrows.push(Arrow { from: idx(i, b.from), to: idx(i, b.to), u_power: b.u_power });
            }
        }
        let name = format!("{} # {}", self.name, other.name);
        Self::new(name, gens, arrows).expect("tensor keeps structure")
    }

    /// Disjoint union of generators and arrows. Clashing ids from `other`
    /// get a prime appended.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut used: HashSet<String> = self.generators.iter().map(|g| g.id.clone()).collect();
        let mut gens = self.generators.clone();
        for g in &other.generators {
            let mut id = g.id.clone();
            while !used.insert(id.clone()) {
                id.push('\'');
            }
            gens.push(Generator::new(id, g.maslov, g.alexander));
        }
        let off = self.len();
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().map(|a| Arrow {
            from: a.from + off,
            to: a.to + off,
            u_power: a.u_power,
        }));
        Self::new(format!("{} + {}", self.name, other.name), gens, arrows)
            .expect("direct sum keeps structure")
    }

    /// Keeps the generators whose indices are listed, with the arrows among them.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let gens = keep.iter().map(|&i| self.generators[i].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow { from: *pos.get(&a.from)?, to: *pos.get(&a.to)?, u_power: a.u_power })
            })
            .collect();
        Self::new(self.name.clone(), gens, arrows).expect("restriction keeps structure")
    }

    /// Generator indices in canonical (Maslov, Alexander, id) order.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| {
            let (x, y) = (&self.generators[a], &self.generators[b]);
            (x.maslov, x.alexander, &x.id).cmp(&(y.maslov, y.alexander, &y.id))
        });
        idx
    }

    /// Same complex with generators in canonical order and arrows sorted.
    pub fn canonicalized(&self) -> Self {
        let order = self.canonical_order();
        let mut c = self.restrict(&order);
        let mut arrows = c.arrows.clone();
        arrows.sort_by(|a, b| {
            let key = |x: &Arrow| (c.generators[x.from].id.clone(), c.generators[x.to].id.clone(), x.u_power);
            key(a).cmp(&key(b))
        });
        c = Self::new(c.name.clone(), c.generators.clone(), arrows).expect("reordering keeps structure");
        c
    }

    /// A grading-preserving bijection `self -> other` carrying arrows onto
    /// arrows, if one exists. Backtracking over generators with equal
    /// gradings; intended for small complexes.
    pub fn find_isomorphism(&self, other: &Self) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.arrows.len() != other.arrows.len() {
            return None;
        }
        let key = |c: &Self, i: usize| {
            (c.maslov(i), c.alexander(i), c.outgoing[i].len(), c.incoming[i].len())
        };
        let mut buckets: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for j in 0..other.len() {
            buckets.entry(key(other, j)).or_default().push(j);
        }
        let targets: BTreeSet<Arrow> = other.arrows.iter().copied().collect();
        let mut map = vec![usize::MAX; self.len()];
        let mut taken = vec![false; other.len()];
        fn go(
            i: usize,
            me: &CfkComplex,
            buckets: &BTreeMap<(i64, i64, usize, usize), Vec<usize>>,
            key: &dyn Fn(&CfkComplex, usize) -> (i64, i64, usize, usize),
            targets: &BTreeSet<Arrow>,
            map: &mut Vec<usize>,
            taken: &mut Vec<bool>,
        ) -> bool {
            if i == me.len() {
                return true;
            }
            let Some(cands) = buckets.get(&key(me, i)) else {
                return false;
            };
            for &j in cands {
                if taken[j] {
                    continue;
                }
                map[i] = j;
                // arrows between i and already-mapped generators must match
                let consistent = me.outgoing[i]
                    .iter()
                    .filter(|(t, _)| *t <= i)
                    .all(|&(t, u)| targets.contains(&Arrow { from: j, to: map[t], u_power: u }))
                    && me.incoming[i]
                        .iter()
                        .filter(|(s, _)| *s < i)
                        .all(|&(s, u)| targets.contains(&Arrow { from: map[s], to: j, u_power: u }));
                if consistent {
                    taken[j] = true;
                    if go(i + 1, me, buckets, key, targets, map, taken) {
                        return true;
                    }
                    taken[j] = false;
                }
            }
            map[i] = usize::MAX;
            false
        }
        go(0, self, &buckets, &key, &targets, &mut map, &mut taken).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

impl fmt::Display for CfkComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({} generators, {} arrows)", self.name, self.len(), self.arrows.len())?;
        for g in &self.generators {
            writeln!(f, "  {} M={} A={}", g.id, g.maslov, g.alexander)?;
        }
        for a in &self.arrows {
            let (s, t) = (&self.generators[a.from].id, &self.generators[a.to].id);
            match a.u_power {
                0 => writeln!(f, "  {s} -> {t}")?,
                1 => writeln!(f, "  {s} -> U {t}")?,
                k => writeln!(f, "  {s} -> U^{k} {t}")?,
            }
        }
        Ok(())
    }
}

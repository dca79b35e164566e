//! Whole-graph separations: comparison, crossing, corners, triple stars,
//! bottlenecks, the inductive nested set, and tree-decompositions built from
//! splitting stars. This module is the classical reference machinery that
//! the local (radius-bounded) machinery is checked against.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{componental_cuts, Graph, Part, VertexSet};

pub const TSTAR_CAP: usize = 1_000_000;

/// An oriented separation (A, B): A ∪ B = V and no edge runs between A\B
/// and B\A. The unoriented separation {A, B} is represented by its
/// canonical orientation (lexicographically smaller side first).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Sep {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Sep {
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Sep> {
        let s = Sep { a, b };
        s.validate(g)?;
        Ok(s)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut union = self.a.clone();
        union.extend(self.b.iter().copied());
        if union != g.vertex_set() {
            return Err(Error::contract("separation sides must cover the vertex set"));
        }
        for &(u, v) in g.edges() {
            let u_sa = self.a.contains(&u) && !self.b.contains(&u);
            let v_sa = self.a.contains(&v) && !self.b.contains(&v);
            let u_sb = self.b.contains(&u) && !self.a.contains(&u);
            let v_sb = self.b.contains(&v) && !self.a.contains(&v);
            if (u_sa && v_sb) || (u_sb && v_sa) {
                return Err(Error::contract(format!(
                    "edge {}-{} joins the two strict sides",
                    g.name(u),
                    g.name(v)
                )));
            }
        }
        Ok(())
    }

    pub fn rev(&self) -> Sep {
        Sep { a: self.b.clone(), b: self.a.clone() }
    }

    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn order(&self) -> usize {
        self.separator().len()
    }

    pub fn strict_a(&self) -> VertexSet {
        self.a.difference(&self.b).copied().collect()
    }

    pub fn strict_b(&self) -> VertexSet {
        self.b.difference(&self.a).copied().collect()
    }

    pub fn is_proper(&self) -> bool {
        !self.strict_a().is_empty() && !self.strict_b().is_empty()
    }

    /// Canonical representative of the underlying unoriented separation.
    pub fn canon(&self) -> Sep {
        if self.a <= self.b {
            self.clone()
        } else {
            self.rev()
        }
    }

    pub fn same_unoriented(&self, other: &Sep) -> bool {
        self.canon() == other.canon()
    }

    /// (A,B) >= (C,D) iff A ⊆ C and B ⊇ D.
    pub fn geq(&self, other: &Sep) -> bool {
        self.a.is_subset(&other.a) && self.b.is_superset(&other.b)
    }

    /// Both sides host a component of G − X whose neighbourhood is all of X.
    pub fn is_tight(&self, g: &Graph) -> bool {
        let x = self.separator();
        let comps = g.components(&x);
        let tight_in = |side: &VertexSet| {
            comps
                .iter()
                .any(|k| k.is_subset(side) && g.neighbourhood(k) == x)
        };
        tight_in(&self.a) && tight_in(&self.b)
    }

    pub fn display(&self, g: &Graph) -> String {
        format!("({:?},{:?})", g.names_of(&self.a), g.names_of(&self.b))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparison {
    Geq,
    Leq,
    Equal,
    Incomparable,
}

pub fn compare(s: &Sep, t: &Sep) -> Comparison {
    match (s.geq(t), t.geq(s)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Geq,
        (false, true) => Comparison::Leq,
        (false, false) => Comparison::Incomparable,
    }
}

/// Nestedness via orientation comparison: {A,B} and {C,D} are nested iff
/// they have ≥-comparable orientations.
pub fn nested_global(s: &Sep, t: &Sep) -> bool {
    let (sr, tr) = (s.rev(), t.rev());
    for o1 in [s, &sr] {
        for o2 in [t, &tr] {
            if o1.geq(o2) || o2.geq(o1) {
                return true;
            }
        }
    }
    false
}

pub fn cross_global(s: &Sep, t: &Sep) -> bool {
    !nested_global(s, t)
}

/// The links characterization of crossing: s and t cross iff for every
/// orientation pair (i, j), the Y-link for A_i, the X-link for C_j, or the
/// strict-side intersection is non-empty. Kept as a second, independent
/// implementation of `cross_global`.
pub fn cross_global_via_links(s: &Sep, t: &Sep) -> bool {
    let x = s.separator();
    let y = t.separator();
    let s_sides = [s.clone(), s.rev()];
    let t_sides = [t.clone(), t.rev()];
    for ai in &s_sides {
        for cj in &t_sides {
            // Y-link for A_i = Y \ A_{3-i}; here ai.b plays A_{3-i}.
            let y_link_empty = y.iter().all(|v| ai.b.contains(v));
            let x_link_empty = x.iter().all(|v| cj.b.contains(v));
            let interior_empty = ai
                .strict_a()
                .intersection(&cj.strict_a())
                .next()
                .is_none();
            if y_link_empty && x_link_empty && interior_empty {
                // this orientation pair satisfies (A_i, A_{3-i}) ≥ (C_{3-j}, C_j)
                return false;
            }
        }
    }
    true
}

/// The four corner separations of a crossing pair, oriented with the corner
/// intersection first.
#[derive(Clone, Debug)]
pub struct Corners {
    /// {A∩C, B∪D}
    pub ac: Sep,
    /// {A∩D, B∪C}
    pub ad: Sep,
    /// {B∩D, A∪C}
    pub bd: Sep,
    /// {B∩C, A∪D}
    pub bc: Sep,
}

impl Corners {
    pub fn opposite_pairs(&self) -> [(&Sep, &Sep); 2] {
        [(&self.ac, &self.bd), (&self.ad, &self.bc)]
    }

    pub fn a_side(&self) -> [&Sep; 2] {
        [&self.ac, &self.ad]
    }

    pub fn b_side(&self) -> [&Sep; 2] {
        [&self.bd, &self.bc]
    }

    pub fn all(&self) -> [&Sep; 4] {
        [&self.ac, &self.ad, &self.bd, &self.bc]
    }
}

pub fn corners_global(g: &Graph, s: &Sep, t: &Sep) -> Result<Corners> {
    if !cross_global(s, t) {
        return Err(Error::contract("corners are defined for crossing separations only"));
    }
    let cap = |p: &VertexSet, q: &VertexSet| -> VertexSet { p.intersection(q).copied().collect() };
    let cup = |p: &VertexSet, q: &VertexSet| -> VertexSet { p.union(q).copied().collect() };
    let mk = |a: VertexSet, b: VertexSet| Sep::new(g, a, b);
    Ok(Corners {
        ac: mk(cap(&s.a, &t.a), cup(&s.b, &t.b))?,
        ad: mk(cap(&s.a, &t.b), cup(&s.b, &t.a))?,
        bd: mk(cap(&s.b, &t.b), cup(&s.a, &t.a))?,
        bc: mk(cap(&s.b, &t.a), cup(&s.a, &t.b))?,
    })
}

/// Three pairwise distinct oriented separations whose strict sides
/// near-partition the complement of the union X of their separators, and
/// whose separators pairwise overlap so that each X_i is covered by the
/// other two (every vertex of X_i lies in some X_j, j ≠ i).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TStar {
    pub elems: [Sep; 3],
}

impl TStar {
    pub fn new(g: &Graph, elems: [Sep; 3]) -> Result<TStar> {
        let t = TStar { elems };
        t.validate(g)?;
        Ok(t)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for e in &self.elems {
            e.validate(g)?;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if self.elems[i] == self.elems[j] {
                    return Err(Error::contract("constituents must be pairwise distinct"));
                }
            }
        }
        let x = self.union_of_separators();
        // strict sides avoid X and partition V \ X (empty parts allowed)
        let mut covered = x.clone();
        for e in &self.elems {
            for v in e.strict_a() {
                if !covered.insert(v) {
                    return Err(Error::contract("strict sides must be disjoint and avoid X"));
                }
            }
        }
        let all: VertexSet = g.vertex_set();
        if covered != all {
            return Err(Error::contract("strict sides must near-partition V \\ X"));
        }
        // separator overlap: every separator vertex lies in another separator
        for i in 0..3 {
            for v in self.elems[i].separator() {
                let elsewhere = (0..3)
                    .filter(|&j| j != i)
                    .any(|j| self.elems[j].separator().contains(&v));
                if !elsewhere {
                    return Err(Error::contract(format!(
                        "separator vertex {} lies in only one separator",
                        g.name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn union_of_separators(&self) -> VertexSet {
        let mut x = VertexSet::new();
        for e in &self.elems {
            x.extend(e.separator());
        }
        x
    }

    pub fn centre(&self) -> VertexSet {
        let x0 = self.elems[0].separator();
        x0.into_iter()
            .filter(|v| {
                self.elems[1].separator().contains(v) && self.elems[2].separator().contains(v)
            })
            .collect()
    }

    /// The ij-link (X_i ∩ X_j) \ Z, with i, j zero-based element indices.
    pub fn link(&self, i: usize, j: usize) -> VertexSet {
        let z = self.centre();
        self.elems[i]
            .separator()
            .intersection(&self.elems[j].separator())
            .filter(|v| !z.contains(v))
            .copied()
            .collect()
    }

    pub fn order_leq(&self, k: usize) -> bool {
        self.elems.iter().all(|e| e.order() <= k)
    }

    /// Canonical key for dedup: the three oriented constituents, sorted.
    pub fn key(&self) -> [Sep; 3] {
        let mut v = self.elems.clone();
        v.sort();
        v
    }
}

/// Relevance of a triple star with respect to a designated base, which has
/// to occur among the constituents (up to orientation).
pub fn relevant_tstar_check(g: &Graph, star: &TStar, base: &Sep) -> Result<bool> {
    let pos = (0..3)
        .find(|&i| star.elems[i].same_unoriented(base))
        .ok_or_else(|| Error::contract("base is not a constituent of the triple star"))?;
    let mut elems = star.elems.clone();
    elems.rotate_left(pos);
    Ok(relevance_with_first_as_base(g, &elems))
}

fn relevance_with_first_as_base(g: &Graph, elems: &[Sep; 3]) -> bool {
    if !elems[0].is_tight(g) {
        return false;
    }
    let z: VertexSet = {
        let x0 = elems[0].separator();
        x0.into_iter()
            .filter(|v| elems[1].separator().contains(v) && elems[2].separator().contains(v))
            .collect()
    };
    let link = |i: usize, j: usize| -> VertexSet {
        elems[i]
            .separator()
            .intersection(&elems[j].separator())
            .filter(|v| !z.contains(v))
            .copied()
            .collect()
    };
    let x23 = link(1, 2);
    for &x in &x23 {
        for i in [1usize, 2] {
            let x1i = link(0, i);
            let direct = x1i.iter().any(|&y| g.has_edge(x, y));
            if direct {
                continue;
            }
            // a component of the strict side of constituent i whose
            // neighbourhood catches x and some y in X_{1i} ∪ Z
            let strict = elems[i].strict_a();
            let forbidden: VertexSet =
                g.vertex_set().difference(&strict).copied().collect();
            let mut ok = false;
            for k in g.components(&forbidden) {
                let n = g.neighbourhood(&k);
                if n.contains(&x) && n.iter().any(|v| x1i.contains(v) || z.contains(v)) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

/// All tight separations with separator of size exactly `k`, as canonical
/// unoriented representatives.
pub fn tight_separations_of_order(g: &Graph, k: usize) -> Vec<Sep> {
    let mut out = BTreeSet::new();
    let vs: Vec<_> = g.vertices().collect();
    for x in subsets_exact(&vs, k) {
        let xset: VertexSet = x.iter().copied().collect();
        let cuts = componental_cuts(g, &xset);
        let tight: Vec<&VertexSet> = cuts
            .iter()
            .map(|(comp, _)| comp)
            .filter(|comp| g.neighbourhood(comp) == xset)
            .collect();
        if tight.is_empty() {
            continue;
        }
        let comps: Vec<&VertexSet> = cuts.iter().map(|(c, _)| c).collect();
        // every bipartition of the components induces a separation with
        // separator exactly X; keep the tight ones
        let n = comps.len();
        for bits in 0..(1u64 << n) {
            let mut a = xset.clone();
            let mut b = xset.clone();
            let mut a_tight = false;
            let mut b_tight = false;
            for (i, comp) in comps.iter().enumerate() {
                let comp_tight = g.neighbourhood(comp) == xset;
                if bits >> i & 1 == 1 {
                    a.extend(comp.iter().copied());
                    a_tight |= comp_tight;
                } else {
                    b.extend(comp.iter().copied());
                    b_tight |= comp_tight;
                }
            }
            if a_tight && b_tight {
                out.insert(Sep { a, b }.canon());
            }
        }
    }
    out.into_iter().collect()
}

fn subsets_exact(vs: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(vs: &[u32], start: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if vs.len() - start < k - cur.len() {
            return;
        }
        for i in start..vs.len() {
            cur.push(vs[i]);
            rec(vs, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(vs, 0, k, &mut cur, &mut out);
    out
}

fn subsets_up_to(vs: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for size in 0..=k.min(vs.len()) {
        out.extend(subsets_exact(vs, size));
    }
    out
}

/// Enumerates every triple star of order ≤ k that is relevant with the given
/// base: both orientations of the base are tried in the designated slot, the
/// base separator is split into the two base-links and the centre, the
/// remaining shared separator part W is drawn from the far side of the base,
/// and the components of G − (X₁ ∪ W) are distributed over the sides.
pub fn relevant_tstars_based_at(
    g: &Graph,
    k: usize,
    base: &Sep,
    cap: usize,
) -> Result<Vec<TStar>> {
    let mut found: BTreeMap<[Sep; 3], TStar> = BTreeMap::new();
    for oriented in [base.clone(), base.rev()] {
        enumerate_for_oriented_base(g, k, &oriented, cap, &mut found)?;
    }
    Ok(found.into_values().collect())
}

fn enumerate_for_oriented_base(
    g: &Graph,
    k: usize,
    base: &Sep,
    cap: usize,
    found: &mut BTreeMap<[Sep; 3], TStar>,
) -> Result<()> {
    let x1: Vec<u32> = base.separator().into_iter().collect();
    let far: Vec<u32> = base.strict_b().into_iter().collect();
    let all = g.vertex_set();
    // every split of X1 into (X12 | Z | X13), encoded base-3
    let mut split = vec![0u8; x1.len()];
    loop {
        let mut x12 = VertexSet::new();
        let mut z = VertexSet::new();
        let mut x13 = VertexSet::new();
        for (i, &v) in x1.iter().enumerate() {
            match split[i] {
                0 => x12.insert(v),
                1 => z.insert(v),
                _ => x13.insert(v),
            };
        }
        let fixed2 = x12.len() + z.len();
        let fixed3 = x13.len() + z.len();
        if fixed2 <= k && fixed3 <= k {
            let w_budget = (k - fixed2).min(k - fixed3);
            for w in subsets_up_to(&far, w_budget) {
                let wset: VertexSet = w.iter().copied().collect();
                let mut x2: VertexSet = x12.union(&z).copied().collect();
                x2.extend(wset.iter().copied());
                let mut x3: VertexSet = x13.union(&z).copied().collect();
                x3.extend(wset.iter().copied());
                let mut x = base.separator();
                x.extend(wset.iter().copied());
                assemble_stars(g, k, base, &x, &x2, &x3, &all, cap, found)?;
            }
        }
        // next base-3 word
        let mut i = 0;
        loop {
            if i == split.len() {
                return Ok(());
            }
            split[i] += 1;
            if split[i] < 3 {
                break;
            }
            split[i] = 0;
            i += 1;
        }
        if split.is_empty() {
            return Ok(());
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble_stars(
    g: &Graph,
    k: usize,
    base: &Sep,
    x: &VertexSet,
    x2: &VertexSet,
    x3: &VertexSet,
    all: &VertexSet,
    cap: usize,
    found: &mut BTreeMap<[Sep; 3], TStar>,
) -> Result<()> {
    let strict1 = base.strict_a();
    let comps = g.components(x);
    // components inside the base's strict side stay there; the rest may go
    // to any side whose separator swallows their neighbourhood
    let mut free: Vec<&VertexSet> = Vec::new();
    for comp in &comps {
        if comp.iter().next().map(|v| strict1.contains(v)).unwrap_or(false) {
            continue;
        }
        free.push(comp);
    }
    let mut choices: Vec<Vec<bool>> = Vec::new(); // per free comp: [may go 2, may go 3]
    for comp in &free {
        let n = g.neighbourhood(comp);
        let c2 = n.is_subset(x2);
        let c3 = n.is_subset(x3);
        if !c2 && !c3 {
            return Ok(());
        }
        choices.push(vec![c2, c3]);
    }
    let mut assignment = vec![0usize; free.len()];
    'outer: loop {
        // build sides from the current assignment
        let mut side2 = VertexSet::new();
        let mut side3 = VertexSet::new();
        let mut valid = true;
        for (i, comp) in free.iter().enumerate() {
            let to2 = assignment[i] == 0;
            if to2 && !choices[i][0] {
                valid = false;
            }
            if !to2 && !choices[i][1] {
                valid = false;
            }
            if !valid {
                break;
            }
            if to2 {
                side2.extend(comp.iter().copied());
            } else {
                side3.extend(comp.iter().copied());
            }
        }
        if valid {
            let a2: VertexSet = x2.union(&side2).copied().collect();
            let b2: VertexSet = all.difference(&side2).copied().collect();
            let a3: VertexSet = x3.union(&side3).copied().collect();
            let b3: VertexSet = all.difference(&side3).copied().collect();
            let t2 = Sep { a: a2, b: b2 };
            let t3 = Sep { a: a3, b: b3 };
            if t2.order() <= k && t3.order() <= k {
                let elems = [base.clone(), t2, t3];
                let distinct = elems[0] != elems[1] && elems[0] != elems[2] && elems[1] != elems[2];
                if distinct {
                    if let Ok(star) = TStar::new(g, elems.clone()) {
                        if relevance_with_first_as_base(g, &elems) {
                            if found.len() >= cap {
                                return Err(Error::CapExceeded { what: "triple stars", cap });
                            }
                            found.entry(star.key()).or_insert(star);
                        }
                    }
                }
            }
        }
        // next assignment
        for i in 0..assignment.len() {
            if assignment[i] == 0 {
                assignment[i] = 1;
                continue 'outer;
            }
            assignment[i] = 0;
        }
        if assignment.is_empty() {
            // single pass when there are no free components
            return Ok(());
        }
        return Ok(());
    }
}

/// Direct check of the bottleneck property for an explicit candidate set.
pub fn bottleneck_check_global(g: &Graph, beta: &[Sep], k: usize) -> Result<bool> {
    if beta.is_empty() {
        return Ok(false);
    }
    let canon: BTreeSet<Sep> = beta.iter().map(|s| s.canon()).collect();
    for s in &canon {
        if s.order() != k || !s.is_tight(g) {
            return Ok(false);
        }
    }
    for s in &canon {
        for star in relevant_tstars_based_at(g, k, s, TSTAR_CAP)? {
            let pos = (0..3).find(|&i| star.elems[i].same_unoriented(s)).unwrap();
            let others: Vec<&Sep> =
                (0..3).filter(|&i| i != pos).map(|i| &star.elems[i]).collect();
            if !others.iter().any(|t| canon.contains(&t.canon())) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Constraint table for the fixpoint computations: for every pool member,
/// the partner pairs contributed by the relevant triple stars based at it.
/// `None` encodes a partner that cannot lie in any bottleneck drawn from the
/// pool (it is not a pool member). Constraints whose partner equals the base
/// itself are dropped — they are always satisfied.
pub struct BottleneckConstraints {
    pub pool: Vec<Sep>,
    pub constraints: Vec<Vec<(Option<usize>, Option<usize>)>>,
}

pub fn bottleneck_constraints(g: &Graph, k: usize, pool: &[Sep], cap: usize) -> Result<BottleneckConstraints> {
    let index: BTreeMap<Sep, usize> =
        pool.iter().enumerate().map(|(i, s)| (s.canon(), i)).collect();
    let mut constraints = Vec::with_capacity(pool.len());
    for s in pool {
        let mut cs = Vec::new();
        for star in relevant_tstars_based_at(g, k, s, cap)? {
            let pos = (0..3).find(|&i| star.elems[i].same_unoriented(s)).unwrap();
            let partners: Vec<&Sep> =
                (0..3).filter(|&i| i != pos).map(|i| &star.elems[i]).collect();
            if partners.iter().any(|t| t.same_unoriented(s)) {
                continue; // satisfied by the base itself
            }
            let resolve = |t: &Sep| index.get(&t.canon()).copied();
            cs.push((resolve(partners[0]), resolve(partners[1])));
        }
        constraints.push(cs);
    }
    Ok(BottleneckConstraints { pool: pool.to_vec(), constraints })
}

impl BottleneckConstraints {
    /// Largest subset of the pool (restricted to `alive`) on which every
    /// based triple-star constraint keeps a partner inside; equivalently the
    /// union of all bottlenecks within the restricted pool.
    pub fn greatest_fixpoint(&self, alive: &mut Vec<bool>) {
        loop {
            let mut changed = false;
            for i in 0..self.pool.len() {
                if !alive[i] {
                    continue;
                }
                let dead = self.constraints[i].iter().any(|&(p, q)| {
                    let p_ok = p.map(|j| alive[j]).unwrap_or(false);
                    let q_ok = q.map(|j| alive[j]).unwrap_or(false);
                    !p_ok && !q_ok
                });
                if dead {
                    alive[i] = false;
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct NestedSetLevels {
    /// levels[k] = the members added at order k (levels[0] at order 0, ...)
    pub levels: Vec<Vec<Sep>>,
}

impl NestedSetLevels {
    pub fn all(&self) -> Vec<Sep> {
        self.levels.iter().flatten().cloned().collect()
    }

    pub fn up_to(&self, k: usize) -> Vec<Sep> {
        self.levels.iter().take(k + 1).flatten().cloned().collect()
    }
}

/// The inductive nested set: at each order k, members of the union of all
/// k-bottlenecks that are nested with everything chosen earlier and that
/// survive the fixpoint test against the candidates with strictly smaller
/// crossing count.
pub fn nested_set_global(g: &Graph, kmax: usize, cap: usize) -> Result<NestedSetLevels> {
    let mut out = NestedSetLevels::default();
    let mut chosen: Vec<Sep> = Vec::new();
    for k in 0..=kmax {
        let pool = tight_separations_of_order(g, k);
        let level = nested_level(g, k, &pool, &chosen, cap)?;
        chosen.extend(level.iter().cloned());
        out.levels.push(level);
    }
    Ok(out)
}

fn nested_level(
    g: &Graph,
    k: usize,
    pool: &[Sep],
    chosen: &[Sep],
    cap: usize,
) -> Result<Vec<Sep>> {
    if pool.is_empty() {
        return Ok(Vec::new());
    }
    let cons = bottleneck_constraints(g, k, pool, cap)?;
    // X^k: the union of all k-bottlenecks
    let mut member = vec![true; pool.len()];
    cons.greatest_fixpoint(&mut member);
    let xk: Vec<usize> = (0..pool.len()).filter(|&i| member[i]).collect();
    // crossing counts within X^k
    let mut xnum: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in &xk {
        let c = xk
            .iter()
            .filter(|&&j| j != i && cross_global(&pool[i], &pool[j]))
            .count();
        xnum.insert(i, c);
    }
    let nested_with_chosen: Vec<bool> = pool
        .iter()
        .map(|s| chosen.iter().all(|t| nested_global(s, t)))
        .collect();
    let mut level = Vec::new();
    for &i in &xk {
        if !nested_with_chosen[i] {
            continue;
        }
        // restrict the pool to everything except the strictly better
        // candidates that are nested with the previous levels
        let mut alive: Vec<bool> = member.clone();
        for &j in &xk {
            if nested_with_chosen[j] && xnum[&j] < xnum[&i] {
                alive[j] = false;
            }
        }
        cons.greatest_fixpoint(&mut alive);
        if alive[i] {
            level.push(pool[i].clone());
        }
    }
    Ok(level)
}

/// All minimum-order separations distinguishing two cliques, provided the
/// minimum is smaller than both clique sizes; the result is a bottleneck.
pub fn clique_pair_bottleneck(g: &Graph, y: &VertexSet, z: &VertexSet) -> Result<Vec<Sep>> {
    for set in [y, z] {
        if set.is_empty() {
            return Err(Error::contract("clique must be non-empty"));
        }
        for &u in set.iter() {
            for &v in set.iter().filter(|&&v| v > u) {
                if !g.has_edge(u, v) {
                    return Err(Error::contract(format!(
                        "{} and {} are not adjacent: input is not a clique",
                        g.name(u),
                        g.name(v)
                    )));
                }
            }
        }
    }
    let bound = y.len().min(z.len());
    let vs: Vec<u32> = g.vertices().collect();
    for order in 0..bound {
        let mut found: BTreeSet<Sep> = BTreeSet::new();
        for xs in subsets_exact(&vs, order) {
            let xset: VertexSet = xs.iter().copied().collect();
            let comps = g.components(&xset);
            let n = comps.len();
            for bits in 0..(1u64 << n) {
                let mut a = xset.clone();
                let mut b = xset.clone();
                for (i, comp) in comps.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        a.extend(comp.iter().copied());
                    } else {
                        b.extend(comp.iter().copied());
                    }
                }
                let s = Sep { a, b };
                if distinguishes(&s, y, z) {
                    found.insert(s.canon());
                }
            }
        }
        if !found.is_empty() {
            return Ok(found.into_iter().collect());
        }
    }
    Err(Error::contract(format!(
        "no separation of order < {bound} distinguishes the two cliques"
    )))
}

/// Up to renaming the sides: Y ⊆ A meeting A\B, and Z ⊆ B meeting B\A.
fn distinguishes(s: &Sep, y: &VertexSet, z: &VertexSet) -> bool {
    let one_way = |a: &VertexSet, b: &VertexSet| {
        y.is_subset(a)
            && y.iter().any(|v| !b.contains(v))
            && z.is_subset(b)
            && z.iter().any(|v| !a.contains(v))
    };
    one_way(&s.a, &s.b) || one_way(&s.b, &s.a)
}

// ---------------------------------------------------------------------------
// splitting stars and tree-decompositions

#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    /// node i = splitting star i (oriented members, sorted)
    pub stars: Vec<Vec<Sep>>,
    pub parts: Vec<Part>,
    /// (t1, t2, separation oriented so that t1 holds (A,B))
    pub edges: Vec<(usize, usize, Sep)>,
}

/// Splitting stars of a finite nested set of proper separations, computed
/// as the classes of the relation "points directly at": s ~ t when s ≥ t*
/// with nothing from the set strictly between.
pub fn splitting_stars(n: &[Sep]) -> Vec<Vec<Sep>> {
    let canon: Vec<Sep> = {
        let set: BTreeSet<Sep> = n.iter().map(|s| s.canon()).collect();
        set.into_iter().collect()
    };
    let mut oriented: Vec<Sep> = Vec::new();
    for s in &canon {
        oriented.push(s.clone());
        oriented.push(s.rev());
    }
    if oriented.is_empty() {
        return vec![Vec::new()]; // the empty star: one node, interior G
    }
    let strictly_between = |s: &Sep, t: &Sep, u: &Sep| -> bool {
        u != s && u != t && s.geq(u) && u.geq(t)
    };
    let mut class = vec![usize::MAX; oriented.len()];
    let mut next = 0;
    for i in 0..oriented.len() {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = next;
        // gather everything equivalent to i
        let mut stack = vec![i];
        while let Some(cur) = stack.pop() {
            for j in 0..oriented.len() {
                if class[j] != usize::MAX || j == cur {
                    continue;
                }
                let (s, t) = (&oriented[cur], &oriented[j]);
                let tr = t.rev();
                let related = s != &tr
                    && s.geq(&tr)
                    && !oriented.iter().any(|u| strictly_between(s, &tr, u));
                let related_rev = {
                    let sr = s.rev();
                    t != &sr
                        && t.geq(&sr)
                        && !oriented.iter().any(|u| strictly_between(t, &sr, u))
                };
                if related || related_rev {
                    class[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    let mut stars = vec![Vec::new(); next];
    for (i, s) in oriented.into_iter().enumerate() {
        stars[class[i]].push(s);
    }
    for star in &mut stars {
        star.sort();
    }
    stars.sort();
    stars
}

fn star_interior(g: &Graph, star: &[Sep]) -> Part {
    let mut inter = g.vertex_set();
    for s in star {
        inter = inter.intersection(&s.b).copied().collect();
    }
    Part::induced(g, &inter)
}

/// Builds the candidate tree-decomposition of a nested set of proper
/// separations and validates that it really is one: the splitting stars
/// obey their definition, the decomposition graph is a tree, the parts
/// cover the graph, and every vertex's nodes induce a subtree.
pub fn tree_decomposition(g: &Graph, n: &[Sep]) -> Result<TreeDecomposition> {
    let canon: Vec<Sep> = {
        let set: BTreeSet<Sep> = n.iter().map(|s| s.canon()).collect();
        set.into_iter().collect()
    };
    for s in &canon {
        if !s.is_proper() {
            return Err(Error::contract(format!("separation {} is improper", s.display(g))));
        }
        s.validate(g)?;
    }
    for (i, s) in canon.iter().enumerate() {
        for t in canon.iter().skip(i + 1) {
            if !nested_global(s, t) {
                return Err(Error::contract(format!(
                    "separations {} and {} cross",
                    s.display(g),
                    t.display(g)
                )));
            }
        }
    }
    let stars = splitting_stars(&canon);
    validate_splitting_stars(g, &canon, &stars)?;
    let parts: Vec<Part> = stars.iter().map(|st| star_interior(g, st)).collect();
    // edges: each separation joins the star holding (A,B) to the star
    // holding (B,A)
    let mut edges = Vec::new();
    for s in &canon {
        let holder = |o: &Sep| stars.iter().position(|st| st.contains(o));
        let t1 = holder(s).ok_or_else(|| {
            Error::validation("splitting-star-partition", format!("{} unassigned", s.display(g)))
        })?;
        let t2 = holder(&s.rev()).ok_or_else(|| {
            Error::validation("splitting-star-partition", format!("{} unassigned", s.display(g)))
        })?;
        edges.push((t1, t2, s.clone()));
    }
    let td = TreeDecomposition { stars, parts, edges };
    validate_tree(&td)?;
    validate_graph_decomposition(
        g,
        &td.parts,
        &td.edges.iter().map(|&(a, b, _)| (a, b)).collect::<Vec<_>>(),
    )?;
    Ok(td)
}

fn validate_splitting_stars(g: &Graph, n: &[Sep], stars: &[Vec<Sep>]) -> Result<()> {
    let oriented: Vec<Sep> = n.iter().flat_map(|s| [s.clone(), s.rev()]).collect();
    let total: usize = stars.iter().map(|s| s.len()).sum();
    if !oriented.is_empty() && total != oriented.len() {
        return Err(Error::validation(
            "splitting-star-partition",
            format!("{} orientations, {} placed", oriented.len(), total),
        ));
    }
    for star in stars {
        for (i, s) in star.iter().enumerate() {
            for (j, t) in star.iter().enumerate() {
                if i != j && !s.geq(&t.rev()) {
                    return Err(Error::validation(
                        "star",
                        format!("{} vs {}", s.display(g), t.display(g)),
                    ));
                }
            }
            if star.contains(&s.rev()) {
                return Err(Error::validation("star-antisymmetry", s.display(g)));
            }
        }
        // covering: every member of N has an orientation above some element
        if !oriented.is_empty() {
            for u in n {
                let covered = [u.clone(), u.rev()]
                    .iter()
                    .any(|o| star.iter().any(|s| o.geq(s)));
                if !covered {
                    return Err(Error::validation(
                        "splitting-star-covering",
                        format!("{} not above {:?}", u.display(g), star.len()),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn validate_tree(td: &TreeDecomposition) -> Result<()> {
    let n = td.stars.len();
    let m = td.edges.len();
    if n != m + 1 {
        return Err(Error::validation("tree", format!("{n} nodes, {m} edges")));
    }
    // connectivity over the edge list
    let mut adj = vec![Vec::new(); n];
    for &(a, b, _) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut cnt = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                cnt += 1;
                stack.push(w);
            }
        }
    }
    if cnt != n {
        return Err(Error::validation("tree", format!("{cnt} of {n} nodes reachable")));
    }
    Ok(())
}

/// (H1)/(H2) for an arbitrary decomposition graph given by its edge list.
pub fn validate_graph_decomposition(
    g: &Graph,
    parts: &[Part],
    edges: &[(usize, usize)],
) -> Result<()> {
    let mut vs = VertexSet::new();
    let mut es = BTreeSet::new();
    for p in parts {
        vs.extend(p.vertices.iter().copied());
        es.extend(p.edges.iter().copied());
    }
    if vs != g.vertex_set() {
        let missing: Vec<String> = g
            .vertex_set()
            .difference(&vs)
            .map(|&v| g.name(v).to_string())
            .collect();
        return Err(Error::validation("H1", format!("vertices not covered: {missing:?}")));
    }
    if &es != g.edges() {
        let missing: Vec<_> = g.edges().difference(&es).collect();
        return Err(Error::validation("H1", format!("edges not covered: {missing:?}")));
    }
    for v in g.vertices() {
        let hosts: Vec<usize> =
            (0..parts.len()).filter(|&i| parts[i].vertices.contains(&v)).collect();
        if hosts.is_empty() {
            return Err(Error::validation("H2", format!("{} hosted nowhere", g.name(v))));
        }
        let host_set: BTreeSet<usize> = hosts.iter().copied().collect();
        let mut seen = BTreeSet::from([hosts[0]]);
        let mut stack = vec![hosts[0]];
        while let Some(h) = stack.pop() {
            for &(a, b) in edges {
                let other = if a == h && host_set.contains(&b) {
                    b
                } else if b == h && host_set.contains(&a) {
                    a
                } else {
                    continue;
                };
                if seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        if seen.len() != hosts.len() {
            return Err(Error::validation(
                "H2",
                format!("{} hosted in a disconnected node set", g.name(v)),
            ));
        }
    }
    Ok(())
}

/// Tree-order on oriented decomposition-tree edges: e1 ≥ e2 when they are
/// equal or the path from e1's head to e2's tail avoids e1's tail and e2's
/// head.
pub fn tree_order_geq(td: &TreeDecomposition, e1: (usize, bool), e2: (usize, bool)) -> bool {
    let endpoints = |(idx, fwd): (usize, bool)| -> (usize, usize) {
        let (a, b, _) = td.edges[idx];
        if fwd {
            (a, b)
        } else {
            (b, a)
        }
    };
    if e1.0 == e2.0 {
        // an oriented edge is comparable with its reverse only via equality
        return e1.1 == e2.1;
    }
    let (u1, v1) = endpoints(e1);
    let (u2, v2) = endpoints(e2);
    // path from v1 to u2 in the tree
    let n = td.stars.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b, _) in &td.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut prev = vec![usize::MAX; n];
    let mut stack = vec![v1];
    prev[v1] = v1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                stack.push(y);
            }
        }
    }
    let mut path = vec![u2];
    let mut cur = u2;
    while cur != v1 {
        cur = prev[cur];
        path.push(cur);
    }
    !path.contains(&u1) && !path.contains(&v2)
}

/// The separation attached to an oriented decomposition-tree edge: the union
/// of the parts on each side of the edge.
pub fn edge_separation(td: &TreeDecomposition, e: (usize, bool)) -> Sep {
    let (idx, fwd) = e;
    let (a, b, _) = td.edges[idx];
    let (t1, t2) = if fwd { (a, b) } else { (b, a) };
    let n = td.stars.len();
    let mut adj = vec![Vec::new(); n];
    for (i, &(p, q, _)) in td.edges.iter().enumerate() {
        if i != idx {
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    let side = |start: usize| -> VertexSet {
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = VertexSet::new();
        while let Some(x) = stack.pop() {
            out.extend(td.parts[x].vertices.iter().copied());
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out
    };
    Sep { a: side(t1), b: side(t2) }
}

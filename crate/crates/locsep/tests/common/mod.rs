//! Independent oracles, implemented with deliberately different algorithms
//! than the library so expected values are derived twice.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use locsep::graph::{edge, Edge, Graph, VertexId, VertexSet};

/// Simple-cycle oracle: for every vertex subset of size 3..=max_len, check
/// by permutation whether the subset carries a Hamilton cycle of its induced
/// subgraph. Exponential, fine at fixture scale.
pub fn oracle_simple_cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<VertexId>> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = BTreeSet::new();
    for size in 3..=max_len.min(vs.len()) {
        for subset in subsets_of_size(&vs, size) {
            hamilton_cycles_of_subset(g, &subset, &mut out);
        }
    }
    out
}

fn subsets_of_size(vs: &[VertexId], size: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        vs: &[VertexId],
        start: usize,
        size: usize,
        cur: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..vs.len() {
            cur.push(vs[i]);
            rec(vs, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(vs, 0, size, &mut cur, &mut out);
    out
}

fn hamilton_cycles_of_subset(g: &Graph, subset: &[VertexId], out: &mut BTreeSet<Vec<VertexId>>) {
    // subset is sorted; root the cycle at its minimum and canonicalize by
    // direction (second element smaller than last).
    let root = subset[0];
    let rest: Vec<VertexId> = subset[1..].to_vec();
    permute(&rest, &mut Vec::new(), &mut |perm| {
        if perm[0] > perm[perm.len() - 1] {
            return;
        }
        let mut ok = g.has_edge(root, perm[0]) && g.has_edge(*perm.last().unwrap(), root);
        if ok {
            for w in perm.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let mut cyc = vec![root];
            cyc.extend_from_slice(perm);
            out.insert(cyc);
        }
    });
}

fn permute(items: &[VertexId], cur: &mut Vec<VertexId>, f: &mut impl FnMut(&[VertexId])) {
    if cur.len() == items.len() {
        f(cur);
        return;
    }
    for &x in items {
        if !cur.contains(&x) {
            cur.push(x);
            permute(items, cur, f);
            cur.pop();
        }
    }
}

/// Component oracle via recursive DFS (the library uses iterative BFS).
pub fn oracle_components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    fn dfs(g: &Graph, v: VertexId, removed: &VertexSet, seen: &mut VertexSet, comp: &mut VertexSet) {
        comp.insert(v);
        seen.insert(v);
        for &w in g.adj(v) {
            if !removed.contains(&w) && !seen.contains(&w) {
                dfs(g, w, removed, seen, comp);
            }
        }
    }
    let mut seen = removed.clone();
    let mut out = Vec::new();
    for v in g.vertices() {
        if !seen.contains(&v) {
            let mut comp = VertexSet::new();
            dfs(g, v, removed, &mut seen, &mut comp);
            out.push(comp);
        }
    }
    out
}

/// Naive boolean-matrix GF(2) rank.
pub fn oracle_gf2_rank(g: &Graph, rows: &[BTreeSet<Edge>]) -> usize {
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    let mut mat: Vec<Vec<bool>> =
        rows.iter().map(|r| edges.iter().map(|e| r.contains(e)).collect()).collect();
    let mut rank = 0;
    for col in 0..edges.len() {
        if let Some(pivot) = (rank..mat.len()).find(|&i| mat[i][col]) {
            mat.swap(rank, pivot);
            for i in 0..mat.len() {
                if i != rank && mat[i][col] {
                    let (a, b) = if i < rank {
                        let (lo, hi) = mat.split_at_mut(rank);
                        (&mut lo[i], &hi[0])
                    } else {
                        let (lo, hi) = mat.split_at_mut(i);
                        (&mut hi[0], &lo[rank])
                    };
                    for (x, y) in a.iter_mut().zip(b.iter()) {
                        *x ^= *y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

pub fn cycle_edges(cyc: &[VertexId]) -> BTreeSet<Edge> {
    (0..cyc.len()).map(|i| edge(cyc[i], cyc[(i + 1) % cyc.len()])).collect()
}

/// Exhaustive separation oracle: every ordered pair (A, B) of the 2^n * 2^n
/// vertex-set pairs that covers V and has no edge between A\B and B\A.
/// Returns unoriented separations as canonical (smaller side, larger side)
/// pairs. Only usable for n <= 12 or so.
pub fn oracle_all_separations(g: &Graph, max_order: usize) -> BTreeSet<(VertexSet, VertexSet)> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    assert!(n <= 16, "oracle_all_separations is exponential");
    let mut out = BTreeSet::new();
    for a_bits in 0u32..(1 << n) {
        let a: VertexSet =
            vs.iter().enumerate().filter(|(i, _)| a_bits >> i & 1 == 1).map(|(_, &v)| v).collect();
        'b: for b_bits in 0u32..(1 << n) {
            if a_bits | b_bits != (1 << n) - 1 {
                continue;
            }
            let b: VertexSet = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| b_bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let x: VertexSet = a.intersection(&b).copied().collect();
            if x.len() > max_order {
                continue;
            }
            for &(u, v) in g.edges() {
                let u_strict_a = a.contains(&u) && !b.contains(&u);
                let v_strict_a = a.contains(&v) && !b.contains(&v);
                let u_strict_b = b.contains(&u) && !a.contains(&u);
                let v_strict_b = b.contains(&v) && !a.contains(&v);
                if (u_strict_a && v_strict_b) || (u_strict_b && v_strict_a) {
                    continue 'b;
                }
            }
            let key = if a <= b { (a.clone(), b) } else { (b, a.clone()) };
            out.insert(key);
        }
    }
    out
}

/// Deterministic connected random graph for fuzzing: a random spanning tree
/// plus extra random edges, vertices named v0..v{n-1}.
pub fn random_connected_graph(
    rng: &mut impl rand::Rng,
    n: usize,
    extra_edges: usize,
) -> Graph {
    assert!(n >= 2);
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        pairs.insert((u, v));
    }
    for _ in 0..extra_edges {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            pairs.insert((u.min(v), u.max(v)));
        }
    }
    let named: Vec<(String, String)> =
        pairs.iter().map(|&(u, v)| (format!("v{u}"), format!("v{v}"))).collect();
    Graph::from_named_edges(&named).unwrap()
}

pub fn name_set(g: &Graph, vs: &VertexSet) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

pub fn vset(g: &Graph, names: &[&str]) -> VertexSet {
    g.ids(names).unwrap()
}

pub fn eset(g: &Graph, pairs: &[(&str, &str)]) -> BTreeSet<Edge> {
    pairs.iter().map(|&(u, v)| g.edge_by_names(u, v).unwrap()).collect()
}

/// Frequency map helper for histogram-style assertions.
pub fn counts<T: Ord, I: IntoIterator<Item = T>>(items: I) -> BTreeMap<T, usize> {
    let mut map = BTreeMap::new();
    for x in items {
        *map.entry(x).or_insert(0) += 1;
    }
    map
}

// --- oracles for the whole-graph separation machinery -----------------------

use locsep::global::{Sep, TStar};

pub fn sep(g: &Graph, a: &[&str], b: &[&str]) -> Sep {
    Sep::new(g, vset(g, a), vset(g, b)).unwrap()
}

/// Every separation of order ≤ max_order as a canonical Sep, improper ones
/// included; exponential scan, independent of the library's enumerators.
pub fn oracle_seps(g: &Graph, max_order: usize) -> Vec<Sep> {
    oracle_all_separations(g, max_order)
        .into_iter()
        .map(|(a, b)| Sep { a, b })
        .collect()
}

/// All relevant triple stars of order ≤ k whose designated base is the given
/// separation, found by scanning ordered triples of oriented separations.
pub fn oracle_relevant_tstars(g: &Graph, k: usize, base: &Sep) -> BTreeSet<Vec<Sep>> {
    let seps = oracle_seps(g, k);
    let mut oriented = Vec::new();
    for s in &seps {
        oriented.push(s.clone());
        oriented.push(s.rev());
    }
    let mut out = BTreeSet::new();
    for b in [base.clone(), base.rev()] {
        for t2 in &oriented {
            for t3 in &oriented {
                let elems = [b.clone(), t2.clone(), t3.clone()];
                let star = match TStar::new(g, elems) {
                    Ok(star) => star,
                    Err(_) => continue,
                };
                if locsep::global::relevant_tstar_check(g, &star, &b).unwrap() {
                    out.insert(star.key().to_vec());
                }
            }
        }
    }
    out
}

/// Direct statement of the bottleneck property, driven by the oracle star
/// scan instead of the library's based enumeration.
pub fn oracle_is_bottleneck(g: &Graph, beta: &[Sep], k: usize) -> bool {
    if beta.is_empty() {
        return false;
    }
    let canon: BTreeSet<Sep> = beta.iter().map(|s| s.canon()).collect();
    if canon.iter().any(|s| s.order() != k || !s.is_tight(g)) {
        return false;
    }
    for s in &canon {
        for star in oracle_relevant_tstars(g, k, s) {
            let pos = (0..3).position(|i| star[i].same_unoriented(s)).unwrap();
            let ok = (0..3)
                .filter(|&i| i != pos)
                .any(|i| canon.contains(&star[i].canon()));
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Tightness straight from the definition, using the recursive component
/// oracle rather than the library's search.
pub fn oracle_is_tight(g: &Graph, s: &Sep) -> bool {
    let x: VertexSet = s.a.intersection(&s.b).copied().collect();
    let comps = oracle_components(g, &x);
    let hosted = |side: &VertexSet| {
        comps.iter().any(|c| {
            c.is_subset(side) && {
                let mut n = VertexSet::new();
                for &v in c {
                    for &w in g.adj(v) {
                        if !c.contains(&w) {
                            n.insert(w);
                        }
                    }
                }
                n == x
            }
        })
    };
    hosted(&s.a) && hosted(&s.b)
}

/// The union of all bottlenecks of order k, by explicit subset search over
/// the tight k-separations. Exponential in their number.
pub fn oracle_bottleneck_union(g: &Graph, k: usize) -> BTreeSet<Sep> {
    let pool: Vec<Sep> = oracle_seps(g, k)
        .into_iter()
        .filter(|s| s.order() == k && oracle_is_tight(g, s))
        .collect();
    assert!(pool.len() <= 16, "oracle_bottleneck_union is exponential");
    let mut union = BTreeSet::new();
    for bits in 1u32..(1 << pool.len()) {
        let beta: Vec<Sep> = (0..pool.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| pool[i].clone())
            .collect();
        if oracle_is_bottleneck(g, &beta, k) {
            union.extend(beta);
        }
    }
    union
}

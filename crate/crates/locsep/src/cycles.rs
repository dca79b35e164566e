use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, VertexId};

pub const SHORT_CYCLE_CAP: usize = 1_000_000;

/// A walk is a vertex sequence with every consecutive pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Walk(pub Vec<VertexId>);

impl Walk {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Walk> {
        if vertices.is_empty() {
            return Err(Error::contract("a walk has at least one vertex"));
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::contract(format!(
                    "walk step {}-{} is not an edge",
                    g.name(w[0]),
                    g.name(w[1])
                )));
            }
        }
        Ok(Walk(vertices))
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.0.first() == self.0.last() && self.0.len() > 1
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        *self.0.last().unwrap()
    }

    /// Removes immediate backtracks (u,v,u -> u) until none remain.
    pub fn reduced(&self) -> Walk {
        let mut stack: Vec<VertexId> = Vec::with_capacity(self.0.len());
        for &v in &self.0 {
            if stack.len() >= 2 && stack[stack.len() - 2] == v {
                stack.pop();
            } else {
                stack.push(v);
            }
        }
        Walk(stack)
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.0.windows(2).map(|w| edge(w[0], w[1])).collect()
    }
}

/// Canonical form of a simple cycle given as a vertex sequence without the
/// repeated closing vertex: rotate the smallest vertex to the front, then
/// pick the direction with the smaller successor.
pub fn canonical_cycle(seq: &[VertexId]) -> Vec<VertexId> {
    debug_assert!(seq.len() >= 3);
    let (pos, _) = seq.iter().enumerate().min_by_key(|&(_, v)| v).unwrap();
    let n = seq.len();
    let fwd: Vec<VertexId> = (0..n).map(|i| seq[(pos + i) % n]).collect();
    let bwd: Vec<VertexId> = (0..n).map(|i| seq[(pos + n - i) % n]).collect();
    if fwd < bwd { fwd } else { bwd }
}

/// All simple cycles of length at most `max_len`, canonically rotated, in
/// lexicographic order. Enumeration roots every cycle at its smallest
/// vertex and walks only through larger vertices, recording each cycle in
/// its canonical direction, so nothing is produced twice.
pub fn short_cycles(g: &Graph, max_len: usize, cap: usize) -> Result<Vec<Vec<VertexId>>> {
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    if max_len < 3 {
        return Ok(out);
    }
    let mut path: Vec<VertexId> = Vec::new();
    let mut on_path = vec![false; g.n()];
    for s in g.vertices() {
        path.push(s);
        on_path[s as usize] = true;
        extend_cycle_search(g, s, max_len, cap, &mut path, &mut on_path, &mut out)?;
        on_path[s as usize] = false;
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend_cycle_search(
    g: &Graph,
    root: VertexId,
    max_len: usize,
    cap: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<VertexId>>,
) -> Result<()> {
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, root) && path[1] < last {
        if out.len() >= cap {
            return Err(Error::CapExceeded { what: "short cycles", cap });
        }
        out.push(path.clone());
    }
    if path.len() == max_len {
        return Ok(());
    }
    for &w in g.adj(last) {
        if w > root && !on_path[w as usize] {
            path.push(w);
            on_path[w as usize] = true;
            extend_cycle_search(g, root, max_len, cap, path, on_path, out)?;
            on_path[w as usize] = false;
            path.pop();
        }
    }
    Ok(())
}

/// Length of a shortest induced cycle longer than `r`; `None` when every
/// induced cycle (hence every cycle) has length at most `r`. With `r = 0`
/// this is the girth.
pub fn min_induced_cycle_longer_than(g: &Graph, r: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut path: Vec<VertexId> = Vec::new();
    for s in g.vertices() {
        path.push(s);
        induced_cycle_search(g, s, r, &mut path, &mut best);
        path.pop();
    }
    best
}

fn induced_cycle_search(
    g: &Graph,
    root: VertexId,
    r: usize,
    path: &mut Vec<VertexId>,
    best: &mut Option<usize>,
) {
    let last = *path.last().unwrap();
    if let Some(b) = *best {
        // Any extension closes at length >= path.len() + 1.
        if path.len() + 1 > b {
            return;
        }
    }
    for &w in g.adj(last) {
        if w <= root || path.contains(&w) {
            continue;
        }
        // Chordlessness: w may touch the path only at its tip, except that
        // touching the root closes a cycle.
        let touches_inner = path.len() >= 2
            && path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
        if touches_inner {
            continue;
        }
        // Only once the path has a second vertex is an edge back to the root
        // a closing edge (before that it is simply the first step).
        if path.len() >= 2 && g.has_edge(w, root) {
            let len = path.len() + 1;
            if len >= 3 && len > r && path[1] < w && best.map_or(true, |b| len < b) {
                *best = Some(len);
            }
            // An extension through w would keep the chord w-root.
            continue;
        }
        path.push(w);
        induced_cycle_search(g, root, r, path, best);
        path.pop();
    }
}

/// GF(2) rank of the given edge sets, with edges indexed by their position
/// in `g.edges()`.
pub fn gf2_rank(g: &Graph, rows: &[BTreeSet<Edge>]) -> usize {
    let edge_index: std::collections::BTreeMap<Edge, usize> =
        g.edges().iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
    let words = (g.m() + 63) / 64;
    // pivot bit -> reduced vector whose highest set bit is that pivot
    let mut basis: std::collections::BTreeMap<usize, Vec<u64>> = std::collections::BTreeMap::new();
    for row in rows {
        let mut vec = vec![0u64; words];
        for e in row {
            let i = edge_index[e];
            vec[i / 64] ^= 1 << (i % 64);
        }
        while let Some(p) = highest_bit(&vec) {
            match basis.get(&p) {
                Some(b) => {
                    for (x, y) in vec.iter_mut().zip(b.iter()) {
                        *x ^= y;
                    }
                }
                None => {
                    basis.insert(p, vec);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn highest_bit(vec: &[u64]) -> Option<usize> {
    for (i, &w) in vec.iter().enumerate().rev() {
        if w != 0 {
            return Some(i * 64 + 63 - w.leading_zeros() as usize);
        }
    }
    None
}

fn cycle_edge_set(cyc: &[VertexId]) -> BTreeSet<Edge> {
    let mut set = BTreeSet::new();
    for i in 0..cyc.len() {
        set.insert(edge(cyc[i], cyc[(i + 1) % cyc.len()]));
    }
    set
}

/// Whether the cycles of length at most `r` span the whole binary cycle
/// space, i.e. their GF(2) rank is m - n + (number of components).
pub fn short_cycles_generate_cycle_space(g: &Graph, r: usize) -> Result<bool> {
    let cycles = short_cycles(g, r, SHORT_CYCLE_CAP)?;
    let rows: Vec<BTreeSet<Edge>> = cycles.iter().map(|c| cycle_edge_set(c)).collect();
    let dim = g.m() + g.components(&BTreeSet::new()).len() - g.n();
    Ok(gf2_rank(g, &rows) == dim)
}

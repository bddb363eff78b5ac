//! Graph isomorphism by backtracking over color classes produced by
//! iterated neighborhood color refinement.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`isomorphism`].
pub const DEFAULT_ISO_CAP: usize = 5000;

/// Searches for an isomorphism from `g1` to `g2`. Returns a witness mapping
/// `map[u] = v` (indices of `g1` to indices of `g2`) or `None`.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    isomorphism_with_cap(g1, g2, DEFAULT_ISO_CAP)
}

pub fn isomorphism_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = g1.vertex_count();
    if n > cap || g2.vertex_count() > cap {
        return Err(Error::size_cap(
            "isomorphism search",
            n.max(g2.vertex_count()),
            cap as u64,
        ));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }

    let (colors1, colors2) = match refine(g1, g2) {
        Some(c) => c,
        None => return Ok(None),
    };

    let order = search_order(g1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = backtrack(g1, g2, &colors1, &colors2, &order, 0, &mut map, &mut used);
    if !found {
        return Ok(None);
    }
    debug_assert!(verify_witness(g1, g2, &map));
    Ok(Some(map))
}

/// True iff `map` is a bijection with `u ~ v` in `g1` exactly when
/// `map[u] ~ map[v]` in `g2`.
pub fn verify_witness(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.vertex_count();
    if map.len() != n || g2.vertex_count() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|u| {
        (u + 1..n).all(|v| g1.has_edge_idx(u, v) == g2.has_edge_idx(map[u], map[v]))
    })
}

/// Jointly refines vertex colors of both graphs until stable. Returns `None`
/// as soon as the color histograms diverge, which proves non-isomorphism.
fn refine(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g1.vertex_count();
    let mut c1 = vec![0usize; n];
    let mut c2 = vec![0usize; n];
    let mut color_count = 1;
    loop {
        let key = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors_idx(v).iter().map(|&u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let mut table: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let keys1: Vec<_> = (0..n).map(|v| key(g1, &c1, v)).collect();
        let keys2: Vec<_> = (0..n).map(|v| key(g2, &c2, v)).collect();
        for k in keys1.iter().chain(keys2.iter()) {
            let next = table.len();
            table.entry(k.clone()).or_insert(next);
        }
        let next1: Vec<usize> = keys1.iter().map(|k| table[k]).collect();
        let next2: Vec<usize> = keys2.iter().map(|k| table[k]).collect();

        let mut hist1 = vec![0usize; table.len()];
        let mut hist2 = vec![0usize; table.len()];
        for &c in &next1 {
            hist1[c] += 1;
        }
        for &c in &next2 {
            hist2[c] += 1;
        }
        if hist1 != hist2 {
            return None;
        }
        if table.len() == color_count {
            return Some((next1, next2));
        }
        color_count = table.len();
        c1 = next1;
        c2 = next2;
    }
}

/// Static vertex order for the backtracking: each vertex after the first of
/// its component has a previously ordered neighbor (ties by index).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut picked = vec![false; n];
    let mut mapped_neighbors = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (mapped_neighbors[v], usize::MAX - v))
            .expect("vertices remain");
        picked[v] = true;
        order.push(v);
        for &u in g.neighbors_idx(v) {
            mapped_neighbors[u] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g1: &Graph,
    g2: &Graph,
    colors1: &[usize],
    colors2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mapped_deg = g1
        .neighbors_idx(v)
        .iter()
        .filter(|&&u| map[u] != usize::MAX)
        .count();
    'candidates: for w in 0..g2.vertex_count() {
        if used[w] || colors2[w] != colors1[v] {
            continue;
        }
        // every already-mapped neighbor of v must land on a neighbor of w,
        // and w must have no other mapped neighbors
        for &u in g1.neighbors_idx(v) {
            if map[u] != usize::MAX && !g2.has_edge_idx(map[u], w) {
                continue 'candidates;
            }
        }
        let w_mapped_deg = g2.neighbors_idx(w).iter().filter(|&&x| used[x]).count();
        if w_mapped_deg != mapped_deg {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(g1, g2, colors1, colors2, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

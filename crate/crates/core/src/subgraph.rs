//! Non-induced subgraph containment: injective maps `pattern -> host` that send
//! edges to edges.

use crate::bits::ones;
use crate::graph::SmallGraph;

/// Searches for an embedding of `pattern` into `host`. With `pin = Some(((a, b), (u, v)))`
/// the embedding must send `a -> u` and `b -> v`.
pub fn find_embedding(
    pattern: &SmallGraph,
    host: &SmallGraph,
    pin: Option<((usize, usize), (usize, usize))>,
) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let order = placement_order(pattern, pin.map(|(ab, _)| ab));
    let mut image = vec![usize::MAX; k];
    let mut used = 0u64;
    if let Some(((a, b), (u, v))) = pin {
        if a == b || u == v {
            return None;
        }
        if pattern.has_edge(a, b) && !host.has_edge(u, v) {
            return None;
        }
        if pattern.degree(a) > host.degree(u) || pattern.degree(b) > host.degree(v) {
            return None;
        }
        image[a] = u;
        image[b] = v;
        used = 1 << u | 1 << v;
    }
    let start = if pin.is_some() { 2 } else { 0 };
    if extend(pattern, host, &order, start, &mut image, used) {
        Some(image)
    } else {
        None
    }
}

pub fn contains_subgraph(host: &SmallGraph, pattern: &SmallGraph) -> bool {
    find_embedding(pattern, host, None).is_some()
}

/// Whether host edge `uv` is an edge of some copy of `pattern` in `host`.
pub fn edge_in_copy(host: &SmallGraph, pattern: &SmallGraph, (u, v): (usize, usize)) -> bool {
    pattern.edges().into_iter().any(|(a, b)| {
        find_embedding(pattern, host, Some(((a, b), (u, v)))).is_some()
            || find_embedding(pattern, host, Some(((a, b), (v, u)))).is_some()
    })
}

/// Pinned vertices first, then greedily the vertex with most already-placed
/// neighbors (ties by degree), so adjacency constraints bite early.
fn placement_order(pattern: &SmallGraph, pinned: Option<(usize, usize)>) -> Vec<usize> {
    let k = pattern.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    if let Some((a, b)) = pinned {
        order.extend([a, b]);
        placed = 1 << a | 1 << b;
    }
    while order.len() < k {
        let next = (0..k)
            .filter(|&x| placed >> x & 1 == 0)
            .max_by_key(|&x| ((pattern.neighbors(x) & placed).count_ones(), pattern.degree(x), usize::MAX - x))
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }
    order
}

fn extend(
    pattern: &SmallGraph,
    host: &SmallGraph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let mut cand = host.vertex_mask() & !used;
    for y in ones(pattern.neighbors(x)) {
        if image[y] != usize::MAX {
            cand &= host.neighbors(image[y]);
        }
    }
    let need = pattern.degree(x);
    for h in ones(cand) {
        if host.degree(h) < need {
            continue;
        }
        image[x] = h;
        if extend(pattern, host, order, depth + 1, image, used | 1 << h) {
            return true;
        }
    }
    image[x] = usize::MAX;
    false
}

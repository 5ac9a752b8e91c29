//! Catalogue of small forbidden graphs, induced-subgraph search and the
//! search for witnesses that a colourable graph has no round ordering.

use serde::{Deserialize, Serialize};

use crate::graph::{complement, Graph};

/// A named pattern graph. Family members carry their parameter `k`.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub name: String,
    pub k: Option<usize>,
    pub graph: Graph,
}

/// An induced embedding: `map[i]` is the host vertex of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub pattern: String,
    pub k: Option<usize>,
    pub map: Vec<usize>,
}

impl Occurrence {
    /// Whether `map` is an injective induced embedding of `p` in `host`.
    pub fn is_valid(&self, host: &Graph, p: &Pattern) -> bool {
        if self.map.len() != p.graph.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] == self.map[j] || host.adjacent(self.map[i], self.map[j]) != p.graph.adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds a pattern from 1-based edges on vertices `1..=n`.
fn drawn(name: &str, n: usize, edges: &[(usize, usize)]) -> Pattern {
    let e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Pattern { name: name.into(), k: None, graph: Graph::from_edges(n, &e).expect("catalogue edges are valid") }
}

/// Path `1..7` plus chords.
fn path7(name: &str, chords: &[(usize, usize)]) -> Pattern {
    let mut e: Vec<(usize, usize)> = (1..7).map(|i| (i, i + 1)).collect();
    e.extend_from_slice(chords);
    drawn(name, 7, &e)
}

pub fn f1() -> Pattern {
    path7("F1", &[(2, 4), (3, 5), (4, 6)])
}

pub fn f2() -> Pattern {
    path7("F2", &[(1, 3), (2, 4), (3, 5), (4, 6), (5, 7)])
}

pub fn f3() -> Pattern {
    path7("F3", &[(1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (2, 5), (3, 6)])
}

pub fn claw() -> Pattern {
    drawn("claw", 4, &[(1, 2), (1, 3), (1, 4)])
}

pub fn k1_plus_k3() -> Pattern {
    drawn("K1+K3", 4, &[(2, 3), (3, 4), (2, 4)])
}

/// The 3-sun: a triangle with a vertex on each of its sides.
pub fn tent() -> Pattern {
    drawn("tent", 6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (1, 6), (3, 6)])
}

pub fn cycle(k: usize) -> Pattern {
    let g = Graph::from_fn(k, |i, j| j == i + 1 || (i == 0 && j == k - 1));
    Pattern { name: format!("C{k}"), k: Some(k), graph: g }
}

pub fn cycle_plus_k1(k: usize) -> Pattern {
    let g = Graph::from_fn(k + 1, |i, j| j < k && (j == i + 1 || (i == 0 && j == k - 1)));
    Pattern { name: "C2k+K1".into(), k: Some(k), graph: g }
}

/// Complement of `C_{2k}`.
pub fn antihole(k: usize) -> Pattern {
    Pattern { name: "co-C2k".into(), k: Some(k), graph: complement(&cycle(2 * k).graph) }
}

/// The five drawings of the Tucker figure, in drawing order, relabelled to
/// `1..`.
pub fn tucker_drawings() -> Vec<Pattern> {
    vec![
        drawn(
            "tucker-a",
            6,
            &[(2, 3), (3, 5), (5, 2), (2, 1), (1, 3), (3, 6), (6, 5), (5, 4), (4, 2)],
        ),
        drawn("tucker-b", 7, &[(1, 3), (3, 6), (6, 7), (7, 4), (4, 3), (3, 2), (2, 5), (5, 6)]),
        drawn(
            "tucker-c",
            7,
            &[(2, 7), (7, 5), (5, 2), (2, 3), (3, 6), (6, 5), (5, 4), (4, 1), (1, 2)],
        ),
        drawn("tucker-d", 7, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7), (6, 4)]),
        drawn("tucker-e", 7, &[(1, 2), (2, 3), (3, 4), (4, 5), (7, 6), (6, 3)]),
    ]
}

/// Complements of the Tucker drawings.
pub fn tucker_complements() -> Vec<Pattern> {
    tucker_drawings()
        .into_iter()
        .map(|p| Pattern { name: format!("co-{}", p.name), k: None, graph: complement(&p.graph) })
        .collect()
}

/// Fixed patterns plus small members of each family.
pub fn catalogue() -> Vec<Pattern> {
    let mut out = vec![f1(), f2(), f3(), claw(), k1_plus_k3(), tent()];
    out.extend(tucker_drawings());
    out.extend([cycle(4), cycle(5), cycle(6), cycle(7), cycle_plus_k1(4), antihole(3)]);
    out
}

/// Backtracking search for an induced copy of `p` in `host`.
pub fn find_induced(host: &Graph, p: &Pattern) -> Option<Occurrence> {
    let pg = &p.graph;
    let (hn, pn) = (host.n(), pg.n());
    if pn > hn {
        return None;
    }
    if pn == 0 {
        return Some(Occurrence { pattern: p.name.clone(), k: p.k, map: vec![] });
    }
    // Pattern vertices in BFS order from the highest-degree vertex so each
    // new vertex is constrained by earlier ones.
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    while order.len() < pn {
        let start = (0..pn).filter(|&v| !placed[v]).max_by_key(|&v| pg.degree(v)).unwrap();
        placed[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut nb: Vec<usize> = pg.neighbours(v).iter().copied().filter(|&w| !placed[w]).collect();
            nb.sort_by_key(|&w| std::cmp::Reverse(pg.degree(w)));
            for w in nb {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    if embed(host, pg, &order, 0, &mut map, &mut used) {
        Some(Occurrence { pattern: p.name.clone(), k: p.k, map })
    } else {
        None
    }
}

fn embed(host: &Graph, pg: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let (hn, pn) = (host.n(), pg.n());
    let pv = order[depth];
    let pdeg = pg.degree(pv);
    let pnon = pn - 1 - pdeg;
    for hv in 0..hn {
        if used[hv] || host.degree(hv) < pdeg || hn - 1 - host.degree(hv) < pnon {
            continue;
        }
        let fits = order[..depth].iter().all(|&q| host.adjacent(hv, map[q]) == pg.adjacent(pv, q));
        if !fits {
            continue;
        }
        map[pv] = hv;
        used[hv] = true;
        if embed(host, pg, order, depth + 1, map, used) {
            return true;
        }
        used[hv] = false;
        map[pv] = usize::MAX;
    }
    false
}

/// Finds a chordless cycle among the `allowed` vertices whose length
/// satisfies `accept` and is at least `min_len` (which must be at least 3).
pub fn find_induced_cycle(g: &Graph, allowed: &[bool], min_len: usize, accept: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let n = g.n();
    if n <= 128 {
        return find_induced_cycle_bits(g, allowed, min_len, &accept);
    }
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for start in 0..n {
        if !allowed[start] {
            continue;
        }
        path.push(start);
        on_path[start] = true;
        let found = extend_cycle(g, allowed, min_len, &accept, &mut path, &mut on_path);
        if found {
            return Some(path);
        }
        path.pop();
        on_path[start] = false;
    }
    None
}

/// Bitset search for small graphs. A partial path is abandoned as soon as
/// no chordless continuation can reach a neighbour of the start.
fn find_induced_cycle_bits(
    g: &Graph,
    allowed: &[bool],
    min_len: usize,
    accept: &impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = g.n();
    let adj: Vec<u128> = (0..n).map(|v| g.neighbours(v).iter().fold(0u128, |m, &w| m | 1 << w)).collect();
    let allowed_mask = (0..n).filter(|&v| allowed[v]).fold(0u128, |m, v| m | 1 << v);
    for start in 0..n {
        if !allowed[start] {
            continue;
        }
        let above = if start + 1 >= 128 { 0 } else { allowed_mask & (!0u128 << (start + 1)) };
        let mut path = vec![start];
        let search = BitCycle { adj: &adj, start, above, min_len, accept };
        if search.extend(&mut path, 1 << start) {
            return Some(path);
        }
    }
    None
}

struct BitCycle<'a, F> {
    adj: &'a [u128],
    start: usize,
    above: u128,
    min_len: usize,
    accept: &'a F,
}

impl<F: Fn(usize) -> bool> BitCycle<'_, F> {
    /// `blocked` holds the path and every neighbour of its inner vertices.
    fn extend(&self, path: &mut Vec<usize>, blocked: u128) -> bool {
        let last = *path.last().unwrap();
        let mut cand = self.adj[last] & self.above & !blocked;
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if path.len() >= 2 && self.adj[self.start] >> x & 1 == 1 {
                let len = path.len() + 1;
                if len >= self.min_len && (self.accept)(len) {
                    path.push(x);
                    return true;
                }
                continue;
            }
            let inner = if last == self.start { 0 } else { self.adj[last] };
            let next_blocked = blocked | 1 << x | inner;
            if !self.can_close(x, next_blocked) {
                continue;
            }
            path.push(x);
            if self.extend(path, next_blocked) {
                return true;
            }
            path.pop();
        }
        false
    }

    fn can_close(&self, x: usize, blocked: u128) -> bool {
        let free = self.above & !blocked;
        let closing = self.adj[self.start];
        let mut seen = 1u128 << x;
        let mut frontier = 1u128 << x;
        while frontier != 0 {
            let mut next = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= free & !seen;
            if next & closing != 0 {
                return true;
            }
            seen |= next;
            frontier = next & !closing;
        }
        false
    }
}

fn extend_cycle(
    g: &Graph,
    allowed: &[bool],
    min_len: usize,
    accept: &impl Fn(usize) -> bool,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    for &x in g.neighbours(last) {
        if x <= start || !allowed[x] || on_path[x] {
            continue;
        }
        // x may touch only `last`, and `start` when it closes the cycle.
        let closes = path.len() >= 2 && g.adjacent(x, start);
        let inner = path.get(1..path.len() - 1).unwrap_or(&[]);
        let chord = inner.iter().any(|&y| g.adjacent(x, y));
        if chord {
            continue;
        }
        if closes {
            let len = path.len() + 1;
            if len >= min_len && accept(len) {
                path.push(x);
                return true;
            }
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend_cycle(g, allowed, min_len, accept, path, on_path) {
            return true;
        }
        path.pop();
        on_path[x] = false;
    }
    false
}

/// An induced odd cycle of length at least 5 in `g` or in its complement,
/// as `(in_complement, cycle)`.
pub fn odd_hole_or_antihole(g: &Graph) -> Option<(bool, Vec<usize>)> {
    let all = vec![true; g.n()];
    if let Some(c) = find_induced_cycle(g, &all, 5, |l| l % 2 == 1) {
        return Some((false, c));
    }
    find_induced_cycle(&complement(g), &all, 5, |l| l % 2 == 1).map(|c| (true, c))
}

/// An induced copy of F1, F2 or F3.
pub fn f_witness(g: &Graph) -> Option<Occurrence> {
    [f1(), f2(), f3()].iter().find_map(|p| find_induced(g, p))
}

/// A witness that a colourable graph has no round ordering: `C_{2k} + K_1`,
/// an even antihole on at least six vertices, or a Tucker complement.
pub fn non_pca_witness(g: &Graph) -> Option<Occurrence> {
    let n = g.n();
    for v in 0..n {
        let mut allowed = vec![true; n];
        allowed[v] = false;
        for &w in g.neighbours(v) {
            allowed[w] = false;
        }
        if let Some(c) = find_induced_cycle(g, &allowed, 4, |l| l % 2 == 0) {
            let k = c.len() / 2;
            let mut map = c;
            map.push(v);
            return Some(Occurrence { pattern: "C2k+K1".into(), k: Some(k), map });
        }
    }
    let co = complement(g);
    if let Some(c) = find_induced_cycle(&co, &vec![true; n], 6, |l| l % 2 == 0) {
        let k = c.len() / 2;
        return Some(Occurrence { pattern: "co-C2k".into(), k: Some(k), map: c });
    }
    tucker_complements().iter().find_map(|p| find_induced(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_sizes() {
        assert_eq!((f1().graph.n(), f1().graph.m()), (7, 9));
        assert_eq!((f2().graph.n(), f2().graph.m()), (7, 11));
        assert_eq!((f3().graph.n(), f3().graph.m()), (7, 13));
        assert_eq!((k1_plus_k3().graph.n(), k1_plus_k3().graph.m()), (4, 3));
        let sizes: Vec<(usize, usize)> = tucker_drawings().iter().map(|p| (p.graph.n(), p.graph.m())).collect();
        assert_eq!(sizes, vec![(6, 9), (7, 8), (7, 9), (7, 7), (7, 6)]);
    }

    #[test]
    fn drawings_are_connected() {
        use crate::graph::components;
        let counts: Vec<usize> = tucker_drawings().iter().map(|p| components(&p.graph).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn induced_search() {
        assert!(find_induced(&f1().graph, &claw()).is_none());
        let c7 = cycle(7);
        let occ = find_induced(&c7.graph, &c7).unwrap();
        assert!(occ.is_valid(&c7.graph, &c7));
        assert!(find_induced(&f3().graph, &f2()).is_none());
        assert!(find_induced(&f2().graph, &f1()).is_none());
    }

    #[test]
    fn witnesses() {
        let c4k1 = cycle_plus_k1(4).graph;
        let w = non_pca_witness(&c4k1).unwrap();
        assert_eq!((w.pattern.as_str(), w.k), ("C2k+K1", Some(2)));
        let co6 = complement(&cycle(6).graph);
        let w = non_pca_witness(&co6).unwrap();
        assert_eq!((w.pattern.as_str(), w.k), ("co-C2k", Some(3)));
        assert!(non_pca_witness(&cycle(6).graph).is_none());
    }

    #[test]
    fn holes() {
        assert!(odd_hole_or_antihole(&cycle(6).graph).is_none());
        assert!(odd_hole_or_antihole(&cycle(5).graph).is_some());
        let (co, c) = odd_hole_or_antihole(&complement(&cycle(7).graph)).unwrap();
        assert!(co);
        assert_eq!(c.len(), 7);
    }
}

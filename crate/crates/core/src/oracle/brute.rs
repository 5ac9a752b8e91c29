//! Exhaustive searches straight from the definitions.

use rayon::prelude::*;

use super::OracleError;
use crate::aux::EdgeColouring;
use crate::graph::Graph;
use crate::orderings::{verify_round, RoundOrdering, StraightOrdering};

pub const BRUTE_EDGE_LIMIT: usize = 20;
pub const BRUTE_ORDER_LIMIT: usize = 8;

#[derive(Debug, Clone)]
pub struct BruteForce {
    /// Exact number of valid colourings.
    pub count: u64,
    /// Valid colourings in assignment order, at most `cap` of them.
    pub colourings: Vec<EdgeColouring>,
}

/// Pairs of edge ids forming an induced path `u w v`, listed per later edge.
fn conflicts(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_later = vec![Vec::new(); g.m()];
    for w in 0..g.n() {
        let nb = g.neighbours(w);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                if !g.adjacent(u, v) {
                    let e = g.edge_id(w, u).unwrap();
                    let f = g.edge_id(w, v).unwrap();
                    by_later[e.max(f)].push(e.min(f));
                }
            }
        }
    }
    by_later
}

/// Every colouring in which no induced two-edge path is monochromatic.
///
/// Edge 0 is fixed to colour 1 and each hit is counted with its switch.
/// Assignments are enumerated in binary order of edges `1..m`; the space is
/// split on the first few edges across workers and merged in order. A
/// partial assignment is abandoned as soon as one of its decided pairs is
/// monochromatic, which leaves the set of complete assignments visited
/// unchanged.
pub fn brute_force_colourings(g: &Graph, cap: usize) -> Result<BruteForce, OracleError> {
    let m = g.m();
    if m > BRUTE_EDGE_LIMIT {
        return Err(OracleError::TooLarge { what: "edges", size: m, limit: BRUTE_EDGE_LIMIT });
    }
    if m == 0 {
        let colourings = if cap > 0 { vec![EdgeColouring::uniform(0, 1)] } else { vec![] };
        return Ok(BruteForce { count: 1, colourings });
    }
    let conf = conflicts(g);
    let split = (m - 1).min(4);
    let parts: Vec<(u64, Vec<Vec<u8>>)> = (0u32..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut col = vec![0u8; m];
            col[0] = 1;
            for i in 0..split {
                col[1 + i] = if prefix >> (split - 1 - i) & 1 == 0 { 1 } else { 2 };
            }
            let mut hits = Vec::new();
            let mut count = 0;
            if (1..=split).all(|e| conf[e].iter().all(|&f| col[f] != col[e])) {
                walk(&conf, &mut col, 1 + split, cap, &mut count, &mut hits);
            }
            (count, hits)
        })
        .collect();
    let mut count = 0u64;
    let mut colourings = Vec::new();
    for (c, hits) in parts {
        count += c;
        for h in hits {
            if colourings.len() < cap {
                let ec = EdgeColouring::new(h).expect("colours are 1 or 2");
                colourings.push(ec.switched());
                colourings.push(ec);
            }
        }
    }
    colourings.truncate(cap);
    Ok(BruteForce { count: 2 * count, colourings })
}

fn walk(conf: &[Vec<usize>], col: &mut [u8], e: usize, cap: usize, count: &mut u64, hits: &mut Vec<Vec<u8>>) {
    if e == col.len() {
        *count += 1;
        if hits.len() < cap {
            hits.push(col.to_vec());
        }
        return;
    }
    for c in [1u8, 2] {
        col[e] = c;
        if conf[e].iter().all(|&f| col[f] != c) {
            walk(conf, col, e + 1, cap, count, hits);
        }
    }
    col[e] = 0;
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// First straight ordering in lexicographic permutation order.
pub fn brute_force_straight(g: &Graph) -> Result<Option<StraightOrdering>, OracleError> {
    if g.n() > BRUTE_ORDER_LIMIT {
        return Err(OracleError::TooLarge { what: "vertices", size: g.n(), limit: BRUTE_ORDER_LIMIT });
    }
    let mut p: Vec<usize> = (0..g.n()).collect();
    loop {
        if let Ok(o) = StraightOrdering::from_order(g, p.clone()).expect("permutation") {
            return Ok(Some(o));
        }
        if !next_permutation(&mut p) {
            return Ok(None);
        }
    }
}

/// First round ordering, in lexicographic order of permutations fixing
/// vertex 0 first.
pub fn brute_force_round(g: &Graph) -> Result<Option<RoundOrdering>, OracleError> {
    let n = g.n();
    if n > BRUTE_ORDER_LIMIT + 1 {
        return Err(OracleError::TooLarge { what: "vertices", size: n, limit: BRUTE_ORDER_LIMIT + 1 });
    }
    if n == 0 {
        return Ok(Some(RoundOrdering::from_order(g, vec![]).expect("empty").expect("empty")));
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut order = vec![0];
        order.extend(&rest);
        if let Ok(o) = RoundOrdering::from_order(g, order).expect("permutation") {
            debug_assert!(verify_round(g, &o).expect("permutation").is_none());
            return Ok(Some(o));
        }
        if !next_permutation(&mut rest) {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn counts() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(brute_force_colourings(&p4, 10).unwrap().count, 2);
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(brute_force_colourings(&c5, 10).unwrap().count, 0);
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let bf = brute_force_colourings(&k3, 100).unwrap();
        assert_eq!(bf.count, 8);
        assert_eq!(bf.colourings.len(), 8);
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(brute_force_colourings(&c4, 10).unwrap().count, 2);
    }

    #[test]
    fn orderings() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(brute_force_straight(&c4).unwrap().is_none());
        assert!(brute_force_round(&c4).unwrap().is_some());
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(brute_force_straight(&k3).unwrap().unwrap().order, vec![0, 1, 2]);
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(brute_force_round(&claw).unwrap().is_none());
    }
}

//! Kaleidoscopes: odd-parity non-colourability certificates that live in
//! the complement of a graph.
//!
//! A kaleidoscope of order `k` in a host `h` has anchors `v_0..v_{k-1}`
//! (repeats allowed) and walks `W_i` from `v_i` to `v_{i+2}` that avoid
//! `v_{i+1}` (no walk vertex equals or neighbours it), with odd total length.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::aux::{forms_induced_p3, is_aux_odd_cycle};
use crate::cycles::{induced_odd_cycle, is_induced_cycle};
use crate::graph::{complement, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kaleidoscope {
    pub k: usize,
    pub anchors: Vec<usize>,
    pub walks: Vec<Vec<usize>>,
    /// Edge count of the host the certificate was built for.
    pub host_edges: usize,
    /// SHA-256 of the host's sorted edge list.
    pub host_hash: String,
}

/// Content hash binding a certificate to its host graph.
pub fn host_hash(h: &Graph) -> String {
    hex::encode(Sha256::digest(h.to_edge_list().as_bytes()))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KaleidoscopeError {
    #[error("vertex {0} is out of range for the host")]
    OutOfRange(usize),
    #[error("order {k} with {anchors} anchors and {walks} walks")]
    Shape { k: usize, anchors: usize, walks: usize },
    #[error("input is not an odd cycle of the auxiliary graph")]
    NotAuxOddCycle,
    #[error("kaleidoscope does not verify: {0}")]
    Invalid(KalViolation),
    #[error("order {0} given where order 2 is required")]
    NotOrderTwo(usize),
}

/// First failing clause found by [`verify_kaleidoscope`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum KalViolation {
    HostMismatch,
    OrderTooSmall,
    EmptyWalk { walk: usize },
    WrongStart { walk: usize },
    WrongEnd { walk: usize },
    NotAnEdge { walk: usize, step: usize },
    MeetsAvoided { walk: usize, position: usize },
    TouchesAvoided { walk: usize, position: usize },
    EvenTotal { total: usize },
}

impl std::fmt::Display for KalViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KalViolation::HostMismatch => write!(f, "host hash or edge count differs"),
            KalViolation::OrderTooSmall => write!(f, "order below 2"),
            KalViolation::EmptyWalk { walk } => write!(f, "walk {walk} is empty"),
            KalViolation::WrongStart { walk } => write!(f, "walk {walk} does not start at its anchor"),
            KalViolation::WrongEnd { walk } => write!(f, "walk {walk} does not end two anchors on"),
            KalViolation::NotAnEdge { walk, step } => write!(f, "walk {walk} step {step} is not an edge"),
            KalViolation::MeetsAvoided { walk, position } => {
                write!(f, "walk {walk} position {position} is the avoided anchor")
            }
            KalViolation::TouchesAvoided { walk, position } => {
                write!(f, "walk {walk} position {position} neighbours the avoided anchor")
            }
            KalViolation::EvenTotal { total } => write!(f, "total length {total} is even"),
        }
    }
}

impl Kaleidoscope {
    /// Builds a certificate for host `h`.
    pub fn new(h: &Graph, anchors: Vec<usize>, walks: Vec<Vec<usize>>) -> Kaleidoscope {
        Kaleidoscope {
            k: anchors.len(),
            anchors,
            walks,
            host_edges: h.m(),
            host_hash: host_hash(h),
        }
    }

    pub fn total_length(&self) -> usize {
        self.walks.iter().map(|w| w.len().saturating_sub(1)).sum()
    }
}

/// Checks every clause of the definition. `Ok(None)` means valid.
pub fn verify_kaleidoscope(
    h: &Graph,
    kal: &Kaleidoscope,
) -> Result<Option<KalViolation>, KaleidoscopeError> {
    let k = kal.k;
    if kal.anchors.len() != k || kal.walks.len() != k {
        return Err(KaleidoscopeError::Shape { k, anchors: kal.anchors.len(), walks: kal.walks.len() });
    }
    for &v in kal.anchors.iter().chain(kal.walks.iter().flatten()) {
        if v >= h.n() {
            return Err(KaleidoscopeError::OutOfRange(v));
        }
    }
    if kal.host_edges != h.m() || kal.host_hash != host_hash(h) {
        return Ok(Some(KalViolation::HostMismatch));
    }
    if k < 2 {
        return Ok(Some(KalViolation::OrderTooSmall));
    }
    for (i, w) in kal.walks.iter().enumerate() {
        let Some((&first, &last)) = w.first().zip(w.last()) else {
            return Ok(Some(KalViolation::EmptyWalk { walk: i }));
        };
        if first != kal.anchors[i] {
            return Ok(Some(KalViolation::WrongStart { walk: i }));
        }
        if last != kal.anchors[(i + 2) % k] {
            return Ok(Some(KalViolation::WrongEnd { walk: i }));
        }
        if let Some(step) = (0..w.len() - 1).find(|&s| !h.adjacent(w[s], w[s + 1])) {
            return Ok(Some(KalViolation::NotAnEdge { walk: i, step }));
        }
        let avoid = kal.anchors[(i + 1) % k];
        for (position, &x) in w.iter().enumerate() {
            if x == avoid {
                return Ok(Some(KalViolation::MeetsAvoided { walk: i, position }));
            }
            if h.adjacent(x, avoid) {
                return Ok(Some(KalViolation::TouchesAvoided { walk: i, position }));
            }
        }
    }
    let total = kal.total_length();
    if total.is_multiple_of(2) {
        return Ok(Some(KalViolation::EvenTotal { total }));
    }
    Ok(None)
}

fn common_endpoint(g: &Graph, e: usize, f: usize) -> usize {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    if a == c || a == d {
        a
    } else {
        debug_assert!(b == c || b == d);
        b
    }
}

fn other_endpoint(g: &Graph, e: usize, x: usize) -> usize {
    let (a, b) = g.edge(e);
    if a == x {
        b
    } else {
        a
    }
}

/// Kaleidoscope in a host containing the chordless odd cycle `c` (|c| >= 5):
/// anchors `c_0, c_q, c_{2q}, ...` with single-edge walks `c_{iq} c_{iq-1}`.
pub fn from_odd_hole(h: &Graph, c: &[usize]) -> Kaleidoscope {
    let len = c.len();
    let q = (len - 1) / 2;
    let anchors: Vec<usize> = (0..len).map(|j| c[(j * q) % len]).collect();
    let walks = (0..len).map(|j| vec![c[(j * q) % len], c[(j * q + len - 1) % len]]).collect();
    Kaleidoscope::new(h, anchors, walks)
}

/// Order-2 kaleidoscope: an isolated anchor `u` and an odd closed walk
/// through `x = walk[0]` whose vertices all avoid `u`.
pub fn order_two(h: &Graph, u: usize, closed_walk: &[usize]) -> Kaleidoscope {
    let x = closed_walk[0];
    let mut w1 = closed_walk.to_vec();
    w1.push(x);
    Kaleidoscope::new(h, vec![u, x], vec![vec![u], w1])
}

/// Turns an odd cycle of the auxiliary graph of `g` into a kaleidoscope in
/// the complement of `g`.
///
/// If all cycle edges share one endpoint `u`, the far endpoints form an odd
/// closed walk in the complement; its induced odd cycle yields either an odd
/// hole kaleidoscope or, for a triangle, the order-2 one around `u`.
/// Otherwise the anchors are the endpoints shared along maximal runs between
/// distinguished edges, and walk `j` collects the far endpoints of its run,
/// so the total walk length equals the cycle length.
pub fn extract_kaleidoscope(g: &Graph, odd_cycle: &[usize]) -> Result<Kaleidoscope, KaleidoscopeError> {
    if !is_aux_odd_cycle(g, odd_cycle) {
        return Err(KaleidoscopeError::NotAuxOddCycle);
    }
    let h = complement(g);
    let len = odd_cycle.len();
    let e = |i: usize| odd_cycle[i % len];
    // c[i] = common endpoint of e_i and e_{i+1}.
    let c: Vec<usize> = (0..len).map(|i| common_endpoint(g, e(i), e(i + 1))).collect();

    if c.iter().all(|&x| x == c[0]) {
        let u = c[0];
        let far: Vec<usize> = (0..len).map(|i| other_endpoint(g, e(i), u)).collect();
        let cyc = induced_odd_cycle(&far, |a, b| h.adjacent(a, b));
        return Ok(if cyc.len() >= 5 { from_odd_hole(&h, &cyc) } else { order_two(&h, u, &cyc) });
    }

    // e_i distinguished iff c[i-1] != c[i].
    let dist: Vec<usize> = (0..len).filter(|&i| c[(i + len - 1) % len] != c[i]).collect();
    let k = dist.len();
    // Run j spans e_{dist[j]} .. e_{dist[j+1]} and shares endpoint a[j] = c[dist[j]].
    let a: Vec<usize> = dist.iter().map(|&i| c[i]).collect();
    let mut anchors = Vec::with_capacity(k);
    let mut walks = Vec::with_capacity(k);
    for j in 0..k {
        let start = dist[j];
        let end = if j + 1 < k { dist[j + 1] } else { dist[0] + len };
        let prev = a[(j + k - 1) % k];
        let mut w = vec![prev];
        for i in start + 1..end {
            w.push(other_endpoint(g, e(i), a[j]));
        }
        w.push(a[(j + 1) % k]);
        anchors.push(prev);
        walks.push(w);
    }
    Ok(Kaleidoscope::new(&h, anchors, walks))
}

/// What an order-2 kaleidoscope forces as an induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderTwoWitness {
    /// Isolated vertex followed by a triangle.
    K1PlusK3 { isolated: usize, triangle: [usize; 3] },
    /// Chordless odd cycle of length at least 5, in cyclic order.
    OddHole(Vec<usize>),
}

impl OrderTwoWitness {
    /// Vertex set, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = match self {
            OrderTwoWitness::K1PlusK3 { isolated, triangle } => {
                let mut v = triangle.to_vec();
                v.push(*isolated);
                v
            }
            OrderTwoWitness::OddHole(c) => c.clone(),
        };
        out.sort_unstable();
        out
    }

    /// Independent check that the witness is induced in `h`.
    pub fn is_induced_in(&self, h: &Graph) -> bool {
        match self {
            OrderTwoWitness::K1PlusK3 { isolated, triangle } => {
                h.is_clique(triangle)
                    && triangle.iter().all(|&t| t != *isolated && !h.adjacent(t, *isolated))
            }
            OrderTwoWitness::OddHole(c) => {
                c.len() >= 5 && c.len() % 2 == 1 && is_induced_cycle(c, |a, b| h.adjacent(a, b))
            }
        }
    }
}

/// Reads off an induced K1+K3 or odd hole from a verified order-2
/// kaleidoscope: the odd-length walk is a closed walk avoiding the other
/// anchor.
pub fn order2_to_subgraph(h: &Graph, kal: &Kaleidoscope) -> Result<OrderTwoWitness, KaleidoscopeError> {
    if kal.k != 2 {
        return Err(KaleidoscopeError::NotOrderTwo(kal.k));
    }
    if let Some(v) = verify_kaleidoscope(h, kal)? {
        return Err(KaleidoscopeError::Invalid(v));
    }
    let i = if (kal.walks[0].len() - 1) % 2 == 1 { 0 } else { 1 };
    let w = &kal.walks[i];
    let closed = &w[..w.len() - 1];
    let cyc = induced_odd_cycle(closed, |a, b| h.adjacent(a, b));
    if cyc.len() >= 5 {
        Ok(OrderTwoWitness::OddHole(cyc))
    } else {
        Ok(OrderTwoWitness::K1PlusK3 { isolated: kal.anchors[1 - i], triangle: [cyc[0], cyc[1], cyc[2]] })
    }
}

/// Converse direction, used as a cross-check: the walks of a kaleidoscope in
/// the complement of `g` trace an odd closed walk in the auxiliary graph.
pub fn aux_closed_walk(g: &Graph, kal: &Kaleidoscope) -> Option<Vec<usize>> {
    let k = kal.k;
    let mut out = Vec::new();
    for i in 0..k {
        let centre = kal.anchors[(i + 1) % k];
        for s in 0..kal.walks[i].len() {
            out.push(g.edge_id(centre, kal.walks[i][s])?);
        }
    }
    // Consecutive runs meet at anchors: drop the duplicated junction nodes.
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    let len = out.len();
    let closed = len >= 3 && (0..len).all(|i| {
        let (x, y) = (out[i], out[(i + 1) % len]);
        x == y || forms_induced_p3(g, x, y)
    });
    closed.then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aux::{recognize, RecognitionResult};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn k1k3() -> Graph {
        // v0 = 0 isolated, triangle v1 = 1, x = 2, y = 3.
        g(4, &[(1, 2), (2, 3), (1, 3)])
    }

    #[test]
    fn k1_plus_k3_kaleidoscope() {
        let h = k1k3();
        let kal = Kaleidoscope::new(&h, vec![0, 1], vec![vec![0], vec![1, 2, 3, 1]]);
        assert_eq!(verify_kaleidoscope(&h, &kal), Ok(None));
        assert_eq!(kal.total_length(), 3);
        let w = order2_to_subgraph(&h, &kal).unwrap();
        assert_eq!(w.vertices(), vec![0, 1, 2, 3]);
        assert!(w.is_induced_in(&h));
    }

    #[test]
    fn extra_edge_breaks_avoidance() {
        let h = g(4, &[(1, 2), (2, 3), (1, 3), (0, 2)]);
        let kal = Kaleidoscope::new(&h, vec![0, 1], vec![vec![0], vec![1, 2, 3, 1]]);
        assert_eq!(
            verify_kaleidoscope(&h, &kal),
            Ok(Some(KalViolation::TouchesAvoided { walk: 1, position: 1 }))
        );
    }

    #[test]
    fn five_cycle_kaleidoscope() {
        let h = cycle(5);
        // Anchors v0, v2, v4, v1, v3; walk i is v_{2i} v_{2i-1}.
        let kal = from_odd_hole(&h, &[0, 1, 2, 3, 4]);
        assert_eq!(kal.anchors, vec![0, 2, 4, 1, 3]);
        assert_eq!(kal.walks[0], vec![0, 4]);
        assert_eq!(verify_kaleidoscope(&h, &kal), Ok(None));
    }

    #[test]
    fn host_binding() {
        let h = cycle(5);
        let kal = from_odd_hole(&h, &[0, 1, 2, 3, 4]);
        let other = cycle(7);
        assert_eq!(verify_kaleidoscope(&other, &kal), Ok(Some(KalViolation::HostMismatch)));
    }

    #[test]
    fn degenerate_repeated_anchors() {
        // Order 4 with anchors a, b, a, b: walks a->a avoiding b and b->b avoiding a.
        let h = k1k3();
        let kal = Kaleidoscope::new(
            &h,
            vec![0, 1, 0, 1],
            vec![vec![0], vec![1, 2, 3, 1], vec![0], vec![1]],
        );
        assert_eq!(verify_kaleidoscope(&h, &kal), Ok(None));
        assert_eq!(kal.anchors[0], kal.anchors[2]);
    }

    fn extract_for(host: &Graph) -> Kaleidoscope {
        let RecognitionResult::NotColourable(cyc) = recognize(host) else { panic!("colourable") };
        let kal = extract_kaleidoscope(host, &cyc).unwrap();
        assert_eq!(verify_kaleidoscope(&complement(host), &kal), Ok(None));
        assert_eq!(kal.total_length(), cyc.len());
        kal
    }

    #[test]
    fn extraction_claw_and_c5() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(extract_for(&claw).k, 2);
        extract_for(&cycle(5));
        extract_for(&cycle(7));
        extract_for(&complement(&cycle(7)));
    }

    #[test]
    fn extraction_rejects_non_cycles() {
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(extract_kaleidoscope(&claw, &[0, 1]), Err(KaleidoscopeError::NotAuxOddCycle));
    }

    #[test]
    fn converse_walk_is_closed() {
        let c5 = cycle(5);
        let kal = extract_for(&c5);
        let walk = aux_closed_walk(&c5, &kal).unwrap();
        assert!(walk.len() >= 3);
    }
}

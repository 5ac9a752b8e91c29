//! Auxiliary graph on edges, locally complete colourings, recognition
//! and counting.
//!
//! Two edges are linked in the auxiliary graph when they form an induced
//! path of length two. A colouring is locally complete exactly when it
//! properly 2-colours the auxiliary graph.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::induced_odd_cycle;
use crate::graph::Graph;

/// Graph whose nodes are the edge ids of a host graph.
#[derive(Debug, Clone)]
pub struct AuxGraph {
    adj: Vec<Vec<usize>>,
}

impl AuxGraph {
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, e: usize) -> &[usize] {
        &self.adj[e]
    }

    pub fn adjacent(&self, e: usize, f: usize) -> bool {
        self.adj[e].binary_search(&f).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Connected components of the auxiliary graph (as lists of edge ids).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let e = comp[head];
                head += 1;
                for &f in &self.adj[e] {
                    if !seen[f] {
                        seen[f] = true;
                        comp.push(f);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Direct test of the auxiliary adjacency on host edges.
pub fn forms_induced_p3(g: &Graph, e: usize, f: usize) -> bool {
    let (a, b) = g.edge(e);
    let (c, d) = g.edge(f);
    let (x, y) = if a == c {
        (b, d)
    } else if a == d {
        (b, c)
    } else if b == c {
        (a, d)
    } else if b == d {
        (a, c)
    } else {
        return false;
    };
    x != y && !g.adjacent(x, y)
}

/// Builds the auxiliary graph by scanning non-adjacent neighbour pairs of
/// every vertex.
pub fn build_aux(g: &Graph) -> AuxGraph {
    let mut adj = vec![Vec::new(); g.m()];
    for w in 0..g.n() {
        let nb = g.neighbours(w);
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                if !g.adjacent(u, v) {
                    let e = g.edge_id(w, u).expect("edge exists");
                    let f = g.edge_id(w, v).expect("edge exists");
                    adj[e].push(f);
                    adj[f].push(e);
                }
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    AuxGraph { adj }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("colouring has {found} entries but the graph has {expected} edges")]
    Length { expected: usize, found: usize },
    #[error("colour {colour} on edge {edge} is not 1 or 2")]
    BadColour { edge: usize, colour: u8 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Total map edge id -> colour in {1, 2}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColouring {
    colours: Vec<u8>,
}

impl EdgeColouring {
    pub fn new(colours: Vec<u8>) -> Result<EdgeColouring, ColouringError> {
        if let Some((edge, &colour)) = colours.iter().enumerate().find(|(_, &c)| c != 1 && c != 2) {
            return Err(ColouringError::BadColour { edge, colour });
        }
        Ok(EdgeColouring { colours })
    }

    pub fn uniform(m: usize, colour: u8) -> EdgeColouring {
        EdgeColouring::new(vec![colour; m]).expect("colour must be 1 or 2")
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn colour(&self, edge: usize) -> u8 {
        self.colours[edge]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Colours 1 and 2 exchanged.
    pub fn switched(&self) -> EdgeColouring {
        EdgeColouring { colours: self.colours.iter().map(|&c| 3 - c).collect() }
    }

    /// Serializes as `u v c` lines sorted by (u, v).
    pub fn to_text(&self, g: &Graph) -> String {
        let mut rows: Vec<(usize, usize, u8)> =
            g.edges().iter().zip(&self.colours).map(|(&(u, v), &c)| (u, v, c)).collect();
        rows.sort_unstable();
        let mut out = String::new();
        for (u, v, c) in rows {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        out
    }

    /// Parses `u v c` lines; every edge of `g` must appear exactly once.
    pub fn parse(g: &Graph, text: &str) -> Result<EdgeColouring, ColouringError> {
        let mut colours = vec![0u8; g.m()];
        let mut seen = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| ColouringError::Parse { line: i + 1, msg: msg.to_string() };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err("expected `u v c`"));
            }
            let nums: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            let nums = nums.ok_or_else(|| err("non-numeric field"))?;
            if nums[0] >= g.n() || nums[1] >= g.n() {
                return Err(err("vertex out of range"));
            }
            let id = g.edge_id(nums[0], nums[1]).ok_or_else(|| err("not an edge of the graph"))?;
            if colours[id] != 0 {
                return Err(err("edge listed twice"));
            }
            if nums[2] != 1 && nums[2] != 2 {
                return Err(err("colour must be 1 or 2"));
            }
            colours[id] = nums[2] as u8;
            seen += 1;
        }
        if seen != g.m() {
            return Err(ColouringError::Length { expected: g.m(), found: seen });
        }
        Ok(EdgeColouring { colours })
    }

    /// `[u, v, c]` triples sorted by (u, v), the JSON form.
    pub fn triples(&self, g: &Graph) -> Vec<[usize; 3]> {
        let mut rows: Vec<[usize; 3]> = g
            .edges()
            .iter()
            .zip(&self.colours)
            .map(|(&(u, v), &c)| [u, v, c as usize])
            .collect();
        rows.sort_unstable();
        rows
    }

    /// Inverse of [`EdgeColouring::triples`].
    pub fn from_triples(g: &Graph, rows: &[[usize; 3]]) -> Result<EdgeColouring, ColouringError> {
        let text: String = rows.iter().map(|r| format!("{} {} {}\n", r[0], r[1], r[2])).collect();
        EdgeColouring::parse(g, &text)
    }
}

/// A monochromatic induced path `u - w - v` (centre `w`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub centre: usize,
    pub u: usize,
    pub v: usize,
}

/// Checks that same-coloured neighbours of every vertex are pairwise adjacent.
pub fn verify_locally_complete(
    g: &Graph,
    c: &EdgeColouring,
) -> Result<Option<Violation>, ColouringError> {
    if c.len() != g.m() {
        return Err(ColouringError::Length { expected: g.m(), found: c.len() });
    }
    for w in 0..g.n() {
        let nb = g.neighbours(w);
        for (i, &u) in nb.iter().enumerate() {
            let cu = c.colour(g.edge_id(w, u).expect("edge"));
            for &v in &nb[i + 1..] {
                if cu == c.colour(g.edge_id(w, v).expect("edge")) && !g.adjacent(u, v) {
                    return Ok(Some(Violation { centre: w, u, v }));
                }
            }
        }
    }
    Ok(None)
}

/// Convenience wrapper: true iff `c` is a locally complete colouring of `g`.
pub fn is_locally_complete(g: &Graph, c: &EdgeColouring) -> bool {
    matches!(verify_locally_complete(g, c), Ok(None))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    Colourable(EdgeColouring),
    /// Chordless odd cycle of auxiliary nodes (host edge ids).
    NotColourable(Vec<usize>),
}

impl RecognitionResult {
    pub fn is_colourable(&self) -> bool {
        matches!(self, RecognitionResult::Colourable(_))
    }

    pub fn to_json(&self, g: &Graph) -> RecognitionJson {
        match self {
            RecognitionResult::Colourable(c) => RecognitionJson {
                status: "colourable".into(),
                colouring: c.triples(g),
                odd_cycle: Vec::new(),
            },
            RecognitionResult::NotColourable(cyc) => RecognitionJson {
                status: "not_colourable".into(),
                colouring: Vec::new(),
                odd_cycle: cyc.iter().map(|&e| g.edge(e)).map(|(u, v)| [u, v]).collect(),
            },
        }
    }
}

/// Serialized recognition result. Aux nodes are written as host edges `[u, v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionJson {
    pub status: String,
    pub colouring: Vec<[usize; 3]>,
    pub odd_cycle: Vec<[usize; 2]>,
}

impl RecognitionJson {
    pub fn into_result(self, g: &Graph) -> Result<RecognitionResult, ColouringError> {
        match self.status.as_str() {
            "colourable" => Ok(RecognitionResult::Colourable(EdgeColouring::from_triples(
                g,
                &self.colouring,
            )?)),
            "not_colourable" => {
                let ids: Option<Vec<usize>> =
                    self.odd_cycle.iter().map(|&[u, v]| g.edge_id(u, v)).collect();
                ids.map(RecognitionResult::NotColourable).ok_or(ColouringError::Parse {
                    line: 0,
                    msg: "odd cycle names a non-edge".into(),
                })
            }
            other => Err(ColouringError::Parse { line: 0, msg: format!("unknown status {other}") }),
        }
    }
}

/// Breadth-first 2-colouring of the auxiliary graph. Each component's
/// smallest edge id gets colour 1. On the first conflict, the two tree
/// paths to the common ancestor plus the conflicting link give an odd cycle,
/// which is then shortened to a chordless one.
pub fn recognize(g: &Graph) -> RecognitionResult {
    recognize_with_aux(g, &build_aux(g))
}

pub fn recognize_with_aux(g: &Graph, aux: &AuxGraph) -> RecognitionResult {
    let m = g.m();
    let mut colour = vec![0u8; m];
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![0usize; m];
    let mut queue = VecDeque::new();
    for root in 0..m {
        if colour[root] != 0 {
            continue;
        }
        colour[root] = 1;
        queue.push_back(root);
        while let Some(e) = queue.pop_front() {
            for &f in aux.neighbours(e) {
                if colour[f] == 0 {
                    colour[f] = 3 - colour[e];
                    parent[f] = e;
                    depth[f] = depth[e] + 1;
                    queue.push_back(f);
                } else if colour[f] == colour[e] {
                    let cycle = tree_cycle(e, f, &parent, &depth);
                    let short = induced_odd_cycle(&cycle, |x, y| aux.adjacent(x, y));
                    return RecognitionResult::NotColourable(short);
                }
            }
        }
    }
    RecognitionResult::Colourable(EdgeColouring { colours: colour })
}

fn tree_cycle(e: usize, f: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (e, f);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}

/// Checks that `cycle` is an odd closed sequence of pairwise distinct aux
/// nodes with consecutive nodes adjacent.
pub fn is_aux_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 || len.is_multiple_of(2) || cycle.iter().any(|&e| e >= g.m()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == len && (0..len).all(|i| forms_induced_p3(g, cycle[i], cycle[(i + 1) % len]))
}

/// Number of locally complete colourings: 2^(aux components) when the
/// auxiliary graph is bipartite, else 0.
pub fn count_colourings(g: &Graph) -> BigUint {
    let aux = build_aux(g);
    if !recognize_with_aux(g, &aux).is_colourable() {
        return BigUint::from(0u32);
    }
    BigUint::from(1u32) << aux.components().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn claw() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    #[test]
    fn aux_of_claw_is_triangle() {
        let a = build_aux(&claw());
        assert_eq!(a.neighbours(0), &[1, 2]);
        assert_eq!(a.neighbours(1), &[0, 2]);
        assert_eq!(a.edge_count(), 3);
    }

    #[test]
    fn aux_of_path_is_path() {
        let a = build_aux(&g(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(a.neighbours(0), &[1]);
        assert_eq!(a.neighbours(1), &[0, 2]);
        assert_eq!(a.neighbours(2), &[1]);
    }

    #[test]
    fn aux_matches_predicate() {
        let h = cycle(6);
        let a = build_aux(&h);
        for e in 0..h.m() {
            for f in 0..h.m() {
                assert_eq!(a.adjacent(e, f), forms_induced_p3(&h, e, f));
            }
        }
    }

    #[test]
    fn recognize_examples() {
        let c5 = cycle(5);
        match recognize(&c5) {
            RecognitionResult::NotColourable(cyc) => assert!(is_aux_odd_cycle(&c5, &cyc)),
            other => panic!("{other:?}"),
        }
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(recognize(&k3), RecognitionResult::Colourable(EdgeColouring::uniform(3, 1)));
        assert!(recognize(&Graph::empty(3)).is_colourable());
    }

    #[test]
    fn verifier_examples() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(verify_locally_complete(&k3, &EdgeColouring::uniform(3, 1)), Ok(None));
        let c = EdgeColouring::new(vec![1, 1, 2]).unwrap();
        assert_eq!(
            verify_locally_complete(&claw(), &c),
            Ok(Some(Violation { centre: 0, u: 1, v: 2 }))
        );
        assert!(verify_locally_complete(&claw(), &EdgeColouring::uniform(2, 1)).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_colourings(&g(4, &[(0, 1), (1, 2), (2, 3)])), BigUint::from(2u32));
        assert_eq!(count_colourings(&cycle(5)), BigUint::from(0u32));
        assert_eq!(count_colourings(&g(3, &[(0, 1), (1, 2), (0, 2)])), BigUint::from(8u32));
        assert_eq!(count_colourings(&Graph::empty(2)), BigUint::from(1u32));
    }

    #[test]
    fn colouring_text_round_trip() {
        let p4 = g(4, &[(2, 3), (0, 1), (1, 2)]);
        let RecognitionResult::Colourable(c) = recognize(&p4) else { panic!() };
        let text = c.to_text(&p4);
        assert_eq!(text, "0 1 1\n1 2 2\n2 3 1\n");
        assert_eq!(EdgeColouring::parse(&p4, &text).unwrap(), c);
        assert!(EdgeColouring::parse(&p4, "0 1 1\n").is_err());
        assert!(EdgeColouring::parse(&p4, "0 1 3\n1 2 1\n2 3 1\n").is_err());
        assert!(EdgeColouring::parse(&p4, "0 2 1\n1 2 1\n2 3 1\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        for h in [cycle(5), cycle(6), claw()] {
            let r = recognize(&h);
            let js = serde_json::to_string(&r.to_json(&h)).unwrap();
            let back: RecognitionJson = serde_json::from_str(&js).unwrap();
            assert_eq!(back.into_result(&h).unwrap(), r);
        }
    }
}

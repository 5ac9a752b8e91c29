//! Type 1–4 classification of canonical covers, the per-type colourings and
//! the labelled induced paths of each type.

use serde::{Deserialize, Serialize};

use super::cover::CanonicalCliqueCover;
use super::StructureError;
use crate::aux::EdgeColouring;
use crate::graph::{cutvertices, is_connected, is_reduced, Graph};
use crate::orderings::StraightOrdering;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotTypedReason {
    /// Shared boundary `t_i = s_{i+1}` away from the two ends (1-based `i`).
    InteriorShared { i: usize },
    /// Interior clique `i` (1-based) with `gamma(s_i - 1) = a >= b = ell(t_i + 1)`.
    SideCondition { i: usize, a: usize, b: usize },
    /// Boundary `i` (1-based) neither shared nor a gap.
    BadBoundary { i: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PigClass {
    Clique,
    Type1,
    Type2,
    Type3,
    Type4,
    NotTyped(NotTypedReason),
}

impl PigClass {
    pub fn name(&self) -> &'static str {
        match self {
            PigClass::Clique => "Clique",
            PigClass::Type1 => "Type1",
            PigClass::Type2 => "Type2",
            PigClass::Type3 => "Type3",
            PigClass::Type4 => "Type4",
            PigClass::NotTyped(_) => "NotTyped",
        }
    }

    pub fn is_typed(&self) -> bool {
        matches!(self, PigClass::Type1 | PigClass::Type2 | PigClass::Type3 | PigClass::Type4)
    }
}

fn shared(c: &CanonicalCliqueCover, i: usize) -> bool {
    c.t[i] == c.s[i + 1]
}

/// Classifies a reduced 2-connected PIG from its canonical cover.
pub fn classify_type(g: &Graph, o: &StraightOrdering, c: &CanonicalCliqueCover) -> Result<PigClass, StructureError> {
    if c.k == 1 {
        return Ok(PigClass::Clique);
    }
    if !is_connected(g) {
        return Err(StructureError::Precondition("graph is not connected".into()));
    }
    if !is_reduced(g) {
        return Err(StructureError::Precondition("graph is not reduced".into()));
    }
    if !cutvertices(g)?.is_empty() {
        return Err(StructureError::Precondition("graph has a cutvertex".into()));
    }
    let k = c.k;
    for i in 0..k - 1 {
        if c.s[i + 1] != c.t[i] && c.s[i + 1] != c.t[i] + 1 {
            return Ok(PigClass::NotTyped(NotTypedReason::BadBoundary { i: i + 1 }));
        }
    }
    for i in 1..k - 1 {
        let a = o.gamma[c.s[i] - 1];
        let b = o.ell[c.t[i] + 1];
        if a >= b {
            return Ok(PigClass::NotTyped(NotTypedReason::SideCondition { i: i + 1, a: a + 1, b: b + 1 }));
        }
    }
    for i in 1..k.saturating_sub(2) {
        if shared(c, i) {
            return Ok(PigClass::NotTyped(NotTypedReason::InteriorShared { i: i + 1 }));
        }
    }
    let first = shared(c, 0);
    let last = shared(c, k - 2);
    Ok(match (first, last) {
        (true, true) => PigClass::Type1,
        (true, false) => PigClass::Type2,
        (false, true) => PigClass::Type3,
        (false, false) => PigClass::Type4,
    })
}

fn within(c: &CanonicalCliqueCover, i: usize, p: usize, q: usize) -> bool {
    c.s[i] <= p && q <= c.t[i]
}

/// The explicit colouring of a typed PIG, in the graph's own edge ids.
///
/// For type 1 with two cliques the shared vertex is universal and the
/// general formula does not apply; the first of [`type1_pair_colourings`]
/// is returned instead.
pub fn type_colouring(
    g: &Graph,
    o: &StraightOrdering,
    c: &CanonicalCliqueCover,
    class: &PigClass,
) -> Result<EdgeColouring, StructureError> {
    let k = c.k;
    let pos = o.positions();
    let rule: Box<dyn Fn(usize, usize) -> bool> = match class {
        PigClass::Clique => return Ok(EdgeColouring::uniform(g.m(), 1)),
        PigClass::NotTyped(_) => {
            return Err(StructureError::Precondition("type colouring needs a typed graph".into()));
        }
        PigClass::Type1 if k == 2 => return Ok(type1_pair_colourings(g, o, c)?.0),
        PigClass::Type1 => Box::new(move |p, q| {
            q < c.t[0] || p > c.s[k - 1] || (1..k - 1).any(|i| within(c, i, p, q))
        }),
        PigClass::Type2 => Box::new(move |p, q| q < c.t[0] || (1..k).any(|i| within(c, i, p, q))),
        PigClass::Type3 => Box::new(move |p, q| p > c.s[k - 1] || (0..k - 1).any(|i| within(c, i, p, q))),
        PigClass::Type4 => Box::new(move |p, q| (0..k).any(|i| within(c, i, p, q))),
    };
    let colours = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (p, q) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            if rule(p, q) {
                1
            } else {
                2
            }
        })
        .collect();
    Ok(EdgeColouring::new(colours).expect("colours are 1 or 2"))
}

/// The two colourings of a type-1 graph with two cliques sharing the
/// universal vertex `c`: the first keeps all edges at the first vertex in
/// colour 1, the second all edges at the last vertex.
pub fn type1_pair_colourings(
    g: &Graph,
    o: &StraightOrdering,
    c: &CanonicalCliqueCover,
) -> Result<(EdgeColouring, EdgeColouring), StructureError> {
    if c.k != 2 || c.t[0] != c.s[1] {
        return Err(StructureError::Precondition("needs two cliques sharing a vertex".into()));
    }
    let mid = c.t[0];
    let pos = o.positions();
    let build = |rule: &dyn Fn(usize, usize) -> bool| {
        let colours = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (p, q) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                if rule(p, q) {
                    1
                } else {
                    2
                }
            })
            .collect();
        EdgeColouring::new(colours).expect("colours are 1 or 2")
    };
    let left = build(&|p, q| q <= mid || p > mid);
    let right = build(&|p, q| q < mid || p >= mid);
    Ok((left, right))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedPath {
    pub label: String,
    /// Ordering positions along the path.
    pub positions: Vec<usize>,
    pub vertices: Vec<usize>,
    pub stated: Parity,
    pub induced: bool,
}

impl TypedPath {
    /// Number of edges.
    pub fn length(&self) -> usize {
        self.positions.len().saturating_sub(1)
    }

    pub fn holds(&self) -> bool {
        self.induced && Parity::of(self.length()) == self.stated
    }
}

fn is_induced_path(g: &Graph, vs: &[usize]) -> bool {
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i] == vs[j] || g.adjacent(vs[i], vs[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    !vs.is_empty()
}

/// The labelled paths attached to each type, built from the cover and
/// checked for inducedness.
pub fn typed_paths(
    g: &Graph,
    o: &StraightOrdering,
    c: &CanonicalCliqueCover,
    class: &PigClass,
) -> Result<Vec<TypedPath>, StructureError> {
    let k = c.k;
    if k < 3 {
        return Err(StructureError::Precondition("typed paths need at least three cliques".into()));
    }
    // 1-based accessors.
    let s = |i: usize| c.s[i - 1];
    let t = |i: usize| c.t[i - 1];
    // s_a t_a s_{a+1} ... s_b t_b with shared boundaries merged.
    let chain = |a: usize, b: usize| {
        let mut out: Vec<usize> = Vec::new();
        for i in a..=b {
            for p in [s(i), t(i)] {
                if out.last() != Some(&p) {
                    out.push(p);
                }
            }
        }
        out
    };
    let tail = |v: Vec<usize>| v.get(1..).map(<[usize]>::to_vec).unwrap_or_default();
    let cat = |parts: &[Vec<usize>]| {
        let mut out: Vec<usize> = Vec::new();
        for part in parts {
            for &p in part {
                if out.last() != Some(&p) {
                    out.push(p);
                }
            }
        }
        out
    };
    use Parity::*;
    let specs: Vec<(&str, Vec<usize>, Parity)> = match class {
        PigClass::Type1 => vec![
            ("1.1", chain(2, k - 1), Odd),
            ("1.2", tail(chain(2, k)), Odd),
            ("1.3", cat(&[vec![s(2) + 1], tail(chain(2, k - 1))]), Odd),
            ("1.4", cat(&[vec![s(2) - 1, s(2) + 1], tail(chain(2, k))]), Odd),
            ("1.5", cat(&[vec![s(1)], chain(2, k - 1)]), Even),
            ("1.6", cat(&[vec![s(1)], chain(2, k)]), Odd),
            ("1.7", cat(&[vec![t(1)], tail(chain(2, k))]), Even),
        ],
        PigClass::Type2 => vec![
            ("2.1", cat(&[tail(chain(2, k - 1)), vec![s(k)]]), Odd),
            ("2.2", tail(chain(2, k)), Even),
            ("2.3", cat(&[vec![s(2) + 1], tail(chain(2, k - 1)), vec![s(k)]]), Even),
            ("2.4", cat(&[vec![s(1)], chain(2, k - 1), vec![s(k)]]), Odd),
            ("2.5", cat(&[vec![s(1)], chain(2, k)]), Even),
            ("2.6", cat(&[vec![s(2) + 1], tail(chain(2, k))]), Odd),
        ],
        PigClass::Type3 => vec![
            ("3.1", chain(2, k - 1), Odd),
            ("3.2", cat(&[chain(2, k - 1), vec![s(k) + 1]]), Even),
            ("3.3", chain(1, k - 1), Odd),
            ("3.4", chain(1, k), Even),
            ("3.5", cat(&[chain(1, k - 2), vec![s(k - 1)]]), Even),
            (
                "3.6",
                cat(&[vec![t(1)], chain(2, k - 2), vec![s(k - 1), s(k) - 1, s(k) + 1, t(k)]]),
                Even,
            ),
        ],
        PigClass::Type4 => vec![
            ("4.1", cat(&[chain(2, k - 1), vec![s(k)]]), Even),
            ("4.2", cat(&[chain(1, k - 1), vec![s(k)]]), Even),
            ("4.3", chain(1, k), Odd),
            ("4.4", cat(&[vec![t(1)], chain(2, k)]), Even),
        ],
        _ => return Err(StructureError::Precondition("typed paths need a typed graph".into())),
    };
    Ok(specs
        .into_iter()
        .map(|(label, positions, stated)| {
            let vertices: Vec<usize> = positions.iter().map(|&p| o.order[p]).collect();
            let induced = is_induced_path(g, &vertices);
            TypedPath { label: label.to_string(), positions, vertices, stated, induced }
        })
        .collect())
}

//! Explicit colourings for reduced proper circular-arc graphs without
//! pseudo-cutvertices.
//!
//! Three pairwise non-adjacent vertices `v_1, v_a, v_b` are chosen on a
//! round ordering so that the arc from `v_b` round to `v_a` is as short as
//! possible. The prefix `G[1, b]` is a proper interval graph; its reduction
//! `H` keeps `v_1, v_{a-1}, v_a, v_b`. When `H` has no cutvertex its type
//! and two adjacencies around `v_{b+1}` select a configuration, and two of
//! the configurations come with an explicit arc-based colouring.
//!
//! Positions here are 1-based along the rotated ordering, matching the
//! usual `v_1 .. v_n` labelling.

use serde::{Deserialize, Serialize};

use super::cover::canonical_cover;
use super::types::{classify_type, PigClass};
use super::StructureError;
use crate::aux::EdgeColouring;
use crate::graph::{cutvertices, induced, Graph};
use crate::orderings::{RoundOrdering, StraightOrdering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseKind {
    /// `H` has a cutvertex.
    PrefixCutvertex,
    /// `H` is not of any type.
    NotTyped,
    Type1,
    /// Type 2 with `v_{a-1}`, `v_{b+1}`, `u_{s_k}` pairwise as required.
    Type2,
    Type3,
    /// Type 4 with `v_{a-1} ~ v_{b+1}` and `v_{b+1}` not adjacent to `u_{s_k}`.
    Type4Near,
    /// Type 4 with `v_{a-1}` not adjacent to `v_{b+1}` and `v_{b+1} ~ u_{s_k}`.
    Type4Far,
    /// Any other type-2 or type-4 adjacency pattern.
    Other,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseSetup {
    /// Round ordering rotated so that `order[0]` is `v_1`.
    pub order: Vec<usize>,
    pub a: usize,
    pub b: usize,
    /// Canonical cover of `H`, its clique ends given as positions in `G`.
    pub k: usize,
    pub us: Vec<usize>,
    pub ut: Vec<usize>,
    /// Position of the furthest counter-clockwise neighbour of `v_2`.
    pub ell2: usize,
    pub kind: CaseKind,
}

fn adjacent_at(g: &Graph, order: &[usize], p: usize, q: usize) -> bool {
    g.adjacent(order[p - 1], order[q - 1])
}

/// Whether 1-based position `x` lies on the clockwise arc `from..=to`.
fn on_arc(n: usize, from: usize, to: usize, x: usize) -> bool {
    (x + n - from) % n <= (to + n - from) % n
}

/// Chooses the triple and builds the reduced prefix. `Ok(None)` when the
/// graph has no three pairwise non-adjacent vertices.
pub fn case_setup(g: &Graph, o: &RoundOrdering) -> Result<Option<CaseSetup>, StructureError> {
    let n = o.order.len();
    let at = |p: usize| o.order[p];
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for p in 0..n {
        for q in p + 1..n {
            if g.adjacent(at(p), at(q)) {
                continue;
            }
            for r in q + 1..n {
                if g.adjacent(at(p), at(r)) || g.adjacent(at(q), at(r)) {
                    continue;
                }
                for (start, x, y) in [(p, q, r), (q, r, p), (r, p, q)] {
                    let a = (x + n - start) % n + 1;
                    let b = (y + n - start) % n + 1;
                    let size = n - b + 1 + a;
                    if best.is_none_or(|(s, ..)| size < s) {
                        best = Some((size, start, a, b));
                    }
                }
            }
        }
    }
    let Some((_, start, a, b)) = best else { return Ok(None) };
    let order: Vec<usize> = (0..n).map(|i| o.order[(start + i) % n]).collect();
    let ell2 = {
        let v2 = 2;
        let mut back = 0;
        while back + 1 < n && adjacent_at(g, &order, v2, (v2 + n - back - 2) % n + 1) {
            back += 1;
        }
        (v2 + n - back - 1) % n + 1
    };

    // Twin classes of the prefix are runs of consecutive positions.
    let (prefix, _) = induced(g, &order[..b])?;
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for p in 0..b {
        match runs.last_mut() {
            Some((_, hi)) if prefix.closed_neighbourhood(*hi) == prefix.closed_neighbourhood(p) => *hi = p,
            _ => runs.push((p, p)),
        }
    }
    let reps: Vec<usize> = runs.iter().map(|&(lo, _)| lo).collect();
    let (h, _) = induced(&prefix, &reps)?;
    let ho = match StraightOrdering::from_order(&h, (0..h.n()).collect())? {
        Ok(ho) => ho,
        Err(v) => return Err(StructureError::TheoremViolation(format!("prefix is not straight: {v:?}"))),
    };
    let cover = canonical_cover(&h, &ho)?;
    let k = cover.k;
    let ut: Vec<usize> = cover.t.iter().map(|&t| runs[t].1 + 1).collect();
    let us: Vec<usize> = (0..k)
        .map(|i| if i > 0 && cover.s[i] == cover.t[i - 1] { ut[i - 1] } else { runs[cover.s[i]].0 + 1 })
        .collect();
    let kind = if !cutvertices(&h)?.is_empty() {
        CaseKind::PrefixCutvertex
    } else {
        let near = adjacent_at(g, &order, a - 1, b + 1);
        let far = adjacent_at(g, &order, b + 1, us[k - 1]);
        match classify_type(&h, &ho, &cover)? {
            PigClass::NotTyped(_) | PigClass::Clique => CaseKind::NotTyped,
            PigClass::Type1 => CaseKind::Type1,
            PigClass::Type3 => CaseKind::Type3,
            PigClass::Type2 if !near && !far => CaseKind::Type2,
            PigClass::Type4 if near && !far => CaseKind::Type4Near,
            PigClass::Type4 if !near && far => CaseKind::Type4Far,
            _ => CaseKind::Other,
        }
    };
    Ok(Some(CaseSetup { order, a, b, k, us, ut, ell2, kind }))
}

/// The explicit colouring for [`CaseKind::Type2`], [`CaseKind::Type4Near`]
/// and [`CaseKind::Type4Far`]; `None` for every other configuration.
pub fn case_colouring(g: &Graph, c: &CaseSetup) -> Option<EdgeColouring> {
    let n = c.order.len();
    let (a, b, k) = (c.a, c.b, c.k);
    let mut arcs: Vec<(usize, usize)> = match c.kind {
        CaseKind::Type2 => vec![(b + 1, a - 2)],
        CaseKind::Type4Near => vec![(b + 1, a - 1)],
        CaseKind::Type4Far => vec![(c.us[k - 1], (c.ell2 + n - 2) % n + 1), (c.ell2, a - 1)],
        _ => return None,
    };
    let last = if c.kind == CaseKind::Type4Far { k - 1 } else { k };
    arcs.extend((1..last).map(|i| (c.us[i], c.ut[i])));
    let mut pos = vec![0; g.n()];
    for (i, &v) in c.order.iter().enumerate() {
        pos[v] = i + 1;
    }
    let colours = g
        .edges()
        .iter()
        .map(|&(x, y)| {
            let inside = arcs.iter().any(|&(from, to)| on_arc(n, from, to, pos[x]) && on_arc(n, from, to, pos[y]));
            if inside {
                1
            } else {
                2
            }
        })
        .collect();
    Some(EdgeColouring::new(colours).expect("colours are 1 or 2"))
}

//! Clique covering numbers and the canonical clique cover of a straight
//! ordering.

use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::graph::{complement, components, induced, is_connected, Graph};
use crate::orderings::{find_straight, verify_straight, StraightOrdering};

/// Exact search is used up to this many vertices when no ordering is known.
pub const EXACT_COVER_LIMIT: usize = 40;

/// Cliques `order[s[i]..=t[i]]`, positions 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalCliqueCover {
    pub k: usize,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

/// Greedy left-to-right cover: `t_1 = gamma(first)`, `t_{i+1} = gamma(t_i + 1)`,
/// `s_i = ell(t_i)`.
pub fn canonical_cover(g: &Graph, o: &StraightOrdering) -> Result<CanonicalCliqueCover, StructureError> {
    if let Some(v) = verify_straight(g, o)? {
        return Err(StructureError::Precondition(format!("ordering does not verify: {v:?}")));
    }
    if !is_connected(g) {
        return Err(StructureError::Precondition("graph is not connected".into()));
    }
    let n = g.n();
    if n == 0 {
        return Ok(CanonicalCliqueCover { k: 0, s: vec![], t: vec![] });
    }
    let mut t = vec![o.gamma[0]];
    while *t.last().unwrap() < n - 1 {
        let next = o.gamma[t.last().unwrap() + 1];
        t.push(next);
    }
    let s: Vec<usize> = t.iter().map(|&ti| o.ell[ti]).collect();
    let cover = CanonicalCliqueCover { k: t.len(), s, t };
    if let Err(msg) = check_canonical(g, o, &cover) {
        return Err(StructureError::TheoremViolation(format!("canonical cover: {msg}")));
    }
    Ok(cover)
}

/// Endpoints, boundary functions, completeness and monotonicity of a cover.
pub fn check_canonical(g: &Graph, o: &StraightOrdering, c: &CanonicalCliqueCover) -> Result<(), String> {
    let n = g.n();
    let k = c.k;
    if k == 0 || c.s[0] != 0 || c.t[k - 1] != n - 1 {
        return Err("first/last positions".into());
    }
    for i in 0..k {
        if o.gamma[c.s[i]] != c.t[i] || o.ell[c.t[i]] != c.s[i] {
            return Err(format!("boundary functions at clique {i}"));
        }
        if !g.is_clique(&o.order[c.s[i]..=c.t[i]]) {
            return Err(format!("clique {i} is not complete"));
        }
    }
    for i in 1..k {
        if c.s[i] <= c.s[i - 1] || c.t[i] <= c.t[i - 1] {
            return Err(format!("monotonicity at clique {i}"));
        }
    }
    Ok(())
}

/// First clique `i` whose start lies strictly before the end of clique
/// `i - 1`. Such overlaps can occur even in reduced graphs.
pub fn overlapping_boundary(c: &CanonicalCliqueCover) -> Option<usize> {
    (1..c.k).find(|&i| c.s[i] < c.t[i - 1])
}

/// Minimum number of cliques covering the vertices. Components with a
/// straight ordering use the greedy sweep; others use exact colouring of
/// the complement when small enough.
pub fn clique_cover_number(g: &Graph) -> Result<usize, StructureError> {
    let mut total = 0;
    for comp in components(g) {
        let (h, _) = induced(g, &comp)?;
        if let Some(o) = find_straight(&h)? {
            total += canonical_cover(&h, &o)?.k;
        } else if h.n() <= EXACT_COVER_LIMIT {
            total += chromatic_number(&complement(&h));
        } else {
            return Err(StructureError::ScaleExceeded { n: h.n(), limit: EXACT_COVER_LIMIT });
        }
    }
    Ok(total)
}

/// Exact chromatic number by DSATUR-ordered branch and bound.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut colour = vec![usize::MAX; n];
    let mut best = n;
    branch(g, &mut colour, 0, &mut best);
    best
}

fn branch(g: &Graph, colour: &mut [usize], used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    // Uncoloured vertex with the most distinct neighbour colours, then degree.
    let mut pick = None;
    let mut key = (0usize, 0usize);
    for v in 0..g.n() {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut seen: Vec<usize> = g
            .neighbours(v)
            .iter()
            .filter_map(|&w| (colour[w] != usize::MAX).then_some(colour[w]))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let k = (seen.len(), g.degree(v));
        if pick.is_none() || k > key {
            pick = Some(v);
            key = k;
        }
    }
    let Some(v) = pick else {
        *best = used;
        return;
    };
    for c in 0..=used {
        if c + 1 > *best - 1 && c == used {
            break;
        }
        if g.neighbours(v).iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        branch(g, colour, used.max(c + 1), best);
        colour[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase(r: &[usize]) -> Graph {
        // r is 1-based reach: i ~ j (i < j) iff j <= r(i).
        Graph::from_fn(r.len(), |i, j| j < r[i])
    }

    #[test]
    fn reduced_graph_with_overlapping_cliques() {
        let g = staircase(&[4, 5, 7, 8, 8, 8, 11, 12, 12, 13, 14, 14, 14, 14]);
        assert!(crate::graph::is_reduced(&g));
        let o = StraightOrdering::from_order(&g, (0..14).collect()).unwrap().unwrap();
        let c = canonical_cover(&g, &o).unwrap();
        assert_eq!((c.s.clone(), c.t.clone()), (vec![0, 3, 7, 10], vec![3, 7, 11, 13]));
        assert_eq!(overlapping_boundary(&c), Some(3));
    }

    #[test]
    fn cover_numbers() {
        assert_eq!(clique_cover_number(&Graph::from_fn(5, |_, _| true)).unwrap(), 1);
        let c5 = Graph::from_fn(5, |i, j| j == i + 1 || (i == 0 && j == 4));
        assert_eq!(clique_cover_number(&c5).unwrap(), 3);
        assert_eq!(clique_cover_number(&staircase(&[3, 4, 5, 6, 6, 6])).unwrap(), 2);
        assert_eq!(clique_cover_number(&Graph::empty(3)).unwrap(), 3);
    }

    #[test]
    fn staircase_cover() {
        let g = staircase(&[3, 4, 5, 6, 6, 6]);
        let o = StraightOrdering::from_order(&g, (0..6).collect()).unwrap().unwrap();
        let c = canonical_cover(&g, &o).unwrap();
        assert_eq!(c, CanonicalCliqueCover { k: 2, s: vec![0, 3], t: vec![2, 5] });
    }

    #[test]
    fn clique_cover() {
        let g = Graph::from_fn(4, |_, _| true);
        let o = StraightOrdering::from_order(&g, (0..4).collect()).unwrap().unwrap();
        assert_eq!(canonical_cover(&g, &o).unwrap(), CanonicalCliqueCover { k: 1, s: vec![0], t: vec![3] });
    }

    #[test]
    fn chromatic_small() {
        let c5 = Graph::from_fn(5, |i, j| j == i + 1 || (i == 0 && j == 4));
        assert_eq!(chromatic_number(&c5), 3);
        assert_eq!(chromatic_number(&Graph::from_fn(6, |_, _| true)), 6);
        assert_eq!(chromatic_number(&Graph::empty(4)), 1);
    }
}

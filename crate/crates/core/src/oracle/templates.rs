//! Proper interval templates with a prescribed canonical cover and type,
//! and proper circular-arc graphs glued from them.
//!
//! End cliques have three vertices, interior cliques four or five (chosen
//! by the seed). A shared boundary `c` gets the extra edge `(c-1, c+1)`; a
//! gap boundary after `t` gets `(t-1, t+1)`, `(t, t+1)` and `(t, t+2)`.
//! These choices keep the graph reduced and 2-connected and satisfy the
//! interior side condition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::staircase;
use super::OracleError;
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct TypeTemplate {
    pub graph: Graph,
    /// Intended 0-based cover in the identity ordering.
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub ty: u8,
}

/// Which boundaries (0-based, between clique `i` and `i+1`) are shared.
fn shared_pattern(ty: u8, k: usize) -> Result<Vec<bool>, OracleError> {
    let bad = || OracleError::Parameter(format!("no type {ty} template with {k} cliques"));
    if k < 2 {
        return Err(bad());
    }
    let mut shared = vec![false; k - 1];
    match ty {
        1 => {
            shared[0] = true;
            shared[k - 2] = true;
        }
        2 if k >= 3 => shared[0] = true,
        3 if k >= 3 => shared[k - 2] = true,
        4 => {}
        _ => return Err(bad()),
    }
    Ok(shared)
}

/// A template of type `ty` with `k` canonical cliques.
pub fn type_template(ty: u8, k: usize, seed: u64) -> Result<TypeTemplate, OracleError> {
    let shared = shared_pattern(ty, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (0..k).map(|i| if i == 0 || i + 1 == k { 3 } else { 4 + rng.gen_range(0..=1) }).collect();
    let (mut s, mut t) = (vec![0], Vec::new());
    for i in 0..k {
        t.push(s[i] + sizes[i] - 1);
        if i + 1 < k {
            s.push(if shared[i] { t[i] } else { t[i] + 1 });
        }
    }
    let n = t[k - 1] + 1;
    let mut reach: Vec<usize> = (0..n).collect();
    for i in 0..k {
        for x in s[i]..=t[i] {
            reach[x] = reach[x].max(t[i]);
        }
    }
    for i in 0..k - 1 {
        if shared[i] {
            let c = t[i];
            reach[c - 1] = reach[c - 1].max(c + 1);
        } else {
            let b = t[i];
            reach[b - 1] = reach[b - 1].max(b + 1);
            reach[b] = reach[b].max(b + 2);
        }
    }
    for x in 1..n {
        reach[x] = reach[x].max(reach[x - 1]);
    }
    Ok(TypeTemplate { graph: staircase(&reach), s, t, ty })
}

/// Two type-4 templates with `k1` and `k2` cliques glued into a circle: the
/// last vertex of each is the first of the other. Returns the graph and
/// its round ordering.
pub fn pca_blocks(k1: usize, k2: usize, seed: u64) -> Result<(Graph, Vec<usize>), OracleError> {
    let a = type_template(4, k1, seed)?;
    let b = type_template(4, k2, seed.wrapping_add(1))?;
    let (na, nb) = (a.graph.n(), b.graph.n());
    // Circle positions: A occupies 0..na-1, B's interior na..na+nb-3, and
    // B's last vertex is A's first.
    let n = na + nb - 2;
    let b_pos = |v: usize| if v == nb - 1 { 0 } else { na - 1 + v };
    let mut edges: Vec<(usize, usize)> = a.graph.edges().to_vec();
    edges.extend(b.graph.edges().iter().map(|&(u, v)| (b_pos(u), b_pos(v))));
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::from_edges(n, &edges)?;
    Ok((g, (0..n).collect()))
}

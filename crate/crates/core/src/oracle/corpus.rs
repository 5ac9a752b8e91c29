//! Seeded corpora of reduced proper interval and proper circular-arc graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{generate, GeneratorSpec};
use crate::aux::recognize;
use crate::graph::{is_connected, twin_reduce, Graph};
use crate::orderings::{find_straight, StraightOrdering};
use crate::structure::{canonical_cover, complement_bipartition, universal_vertices};

/// Tries per requested instance before a corpus gives up.
const ATTEMPTS_PER_ITEM: usize = 2000;

fn collect<T>(count: usize, seed: u64, mut attempt: impl FnMut(&mut ChaCha8Rng) -> Option<T>) -> Vec<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count && tries < count * ATTEMPTS_PER_ITEM {
        tries += 1;
        if let Some(x) = attempt(&mut rng) {
            out.push(x);
        }
    }
    out
}

fn reduce_connected(g: &Graph) -> Option<Graph> {
    if !is_connected(g) {
        return None;
    }
    Some(twin_reduce(g).reduced)
}

/// Connected reduced proper interval graphs with `2 <= n <= max_n`.
pub fn reduced_pigs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    collect(count, seed, |rng| {
        let n = rng.gen_range(4..=max_n * 2);
        let spec = GeneratorSpec::StaircasePig { n, reach: rng.gen_range(1..=4), seed: rng.gen(), shuffle: true };
        let r = reduce_connected(&generate(&spec).ok()?.graph)?;
        (r.n() >= 2 && r.n() <= max_n).then_some(r)
    })
}

/// Connected reduced proper circular-arc graphs with no straight ordering,
/// clique cover number at least 3 and at most `max_n` vertices.
pub fn reduced_pcas(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    collect(count, seed, |rng| {
        let n = rng.gen_range(5..=max_n * 2);
        let arc = rng.gen_range(0.05..0.45);
        let spec = GeneratorSpec::CircularArcPca { n, arc, seed: rng.gen(), even: false, shuffle: true };
        let r = reduce_connected(&generate(&spec).ok()?.graph)?;
        if r.n() > max_n || r.n() < 4 || complement_bipartition(&r).is_some() {
            return None;
        }
        find_straight(&r).ok()?.is_none().then_some(r)
    })
}

/// Connected reduced proper interval graphs with clique cover number 2 and
/// no cutvertex, with or without a universal vertex, plus an ordering.
pub fn cc2_pigs(count: usize, universal: bool, seed: u64) -> Vec<(Graph, StraightOrdering)> {
    collect(count, seed, |rng| {
        let n = rng.gen_range(4..=16);
        let spec = GeneratorSpec::StaircasePig { n, reach: rng.gen_range(1..=5), seed: rng.gen(), shuffle: true };
        let r = reduce_connected(&generate(&spec).ok()?.graph)?;
        if r.n() < 3 || !crate::graph::cutvertices(&r).ok()?.is_empty() {
            return None;
        }
        if universal_vertices(&r).is_empty() == universal {
            return None;
        }
        let o = find_straight(&r).ok()??;
        (canonical_cover(&r, &o).ok()?.k == 2 && r.m() <= 20).then_some((r, o))
    })
}

/// Connected colourable graphs on at most `max_n` vertices drawn from a mix
/// of families, some with round orderings and some without.
pub fn colourable_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    collect(count, seed, |rng| {
        let n = rng.gen_range(4..=max_n);
        let spec = match rng.gen_range(0..4) {
            0 => GeneratorSpec::CircularArcPca { n, arc: rng.gen_range(0.1..0.45), seed: rng.gen(), even: false, shuffle: true },
            1 => {
                let x = rng.gen_range(1..n);
                GeneratorSpec::BipartiteComplement { x, y: n - x, p: rng.gen_range(0.1..0.6), seed: rng.gen() }
            }
            2 => GeneratorSpec::StaircasePig { n, reach: rng.gen_range(1..=3), seed: rng.gen(), shuffle: true },
            _ => GeneratorSpec::Gnp { n, p: rng.gen_range(0.2..0.9), seed: rng.gen() },
        };
        let g = generate(&spec).ok()?.graph;
        (is_connected(&g) && recognize(&g).is_colourable()).then_some(g)
    })
}

//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`, so
//! a spec reproduces the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::graph::{complement, Graph};
use crate::patterns;

/// A reproducible instance description; serialised with a `family` tag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    /// Each pair adjacent with probability `p`.
    Gnp { n: usize, p: f64, seed: u64 },
    /// Fixed reach sequence, 1-based: `i ~ j` (`i < j`) iff `j <= r(i)`.
    Staircase { r: Vec<usize> },
    /// Random non-decreasing reach with increments up to `2 * reach`.
    StaircasePig {
        n: usize,
        reach: usize,
        seed: u64,
        #[serde(default)]
        shuffle: bool,
    },
    /// Equal arcs of length `arc` (fraction of the circle) at random
    /// positions, or evenly spaced when `even` is set.
    CircularArcPca {
        n: usize,
        arc: f64,
        seed: u64,
        #[serde(default)]
        even: bool,
        #[serde(default)]
        shuffle: bool,
    },
    /// Complement of a random bipartite graph with sides `x` and `y`.
    BipartiteComplement { x: usize, y: usize, p: f64, seed: u64 },
    /// The labelled graph on `n` vertices whose edge set is the binary
    /// expansion of `index` over pairs in lexicographic order.
    Exhaustive { n: usize, index: u64 },
    /// A named instance such as `F1`, `claw`, `C7`, `co-C5`, `P4`, `K3`.
    Named { name: String },
    /// A proper interval template of the given type (1 to 4) and number of
    /// canonical cliques.
    TypeTemplate { ty: u8, k: usize, seed: u64 },
    /// Two type-4 templates glued end to end around a circle.
    PcaBlocks { k1: usize, k2: usize, seed: u64 },
}

/// Ordering or bipartition that the construction guarantees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Straight { order: Vec<usize> },
    Round { order: Vec<usize> },
    Bipartition { side: Vec<bool> },
    Cover { s: Vec<usize>, t: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub witness: Option<Witness>,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<(), OracleError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(OracleError::Parameter(format!("probability {p} outside [0, 1]")))
    }
}

/// Graph from a 0-based reach sequence.
pub fn staircase(r: &[usize]) -> Graph {
    Graph::from_fn(r.len(), |i, j| j <= r[i])
}

fn shuffled(graph: Graph, witness: Option<Witness>, seed: u64) -> Generated {
    let n = graph.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed ^ 0x5eed_5eed));
    let graph = graph.relabel(&perm);
    let witness = witness.map(|w| match w {
        Witness::Straight { order } => Witness::Straight { order: order.iter().map(|&v| perm[v]).collect() },
        Witness::Round { order } => Witness::Round { order: order.iter().map(|&v| perm[v]).collect() },
        Witness::Bipartition { side } => {
            let mut out = vec![false; n];
            for v in 0..n {
                out[perm[v]] = side[v];
            }
            Witness::Bipartition { side: out }
        }
        other => other,
    });
    Generated { graph, witness }
}

/// Builds the instance described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Generated, OracleError> {
    match spec {
        GeneratorSpec::Gnp { n, p, seed } => {
            check_p(*p)?;
            let mut r = rng(*seed);
            let mut edges = Vec::new();
            for i in 0..*n {
                for j in i + 1..*n {
                    if r.gen_bool(*p) {
                        edges.push((i, j));
                    }
                }
            }
            Ok(Generated { graph: Graph::from_edges(*n, &edges)?, witness: None })
        }
        GeneratorSpec::Staircase { r } => {
            let n = r.len();
            for (i, &ri) in r.iter().enumerate() {
                if ri < i + 1 || ri > n || (i > 0 && ri < r[i - 1]) {
                    return Err(OracleError::Parameter(format!("reach {ri} at position {} is invalid", i + 1)));
                }
            }
            let zero: Vec<usize> = r.iter().map(|&x| x - 1).collect();
            Ok(Generated { graph: staircase(&zero), witness: Some(Witness::Straight { order: (0..n).collect() }) })
        }
        GeneratorSpec::StaircasePig { n, reach, seed, shuffle } => {
            if *n == 0 {
                return Err(OracleError::Parameter("n must be positive".into()));
            }
            let mut r = rng(*seed);
            let mut reach_of = vec![0usize; *n];
            for i in 0..*n {
                let step = r.gen_range(1..=(2 * reach).max(1));
                let prev = if i > 0 { reach_of[i - 1] } else { 0 };
                reach_of[i] = (i + step).max(prev).min(n - 1);
            }
            let g = staircase(&reach_of);
            let w = Some(Witness::Straight { order: (0..*n).collect() });
            Ok(if *shuffle { shuffled(g, w, *seed) } else { Generated { graph: g, witness: w } })
        }
        GeneratorSpec::CircularArcPca { n, arc, seed, even, shuffle } => {
            if !(0.0..1.0).contains(arc) {
                return Err(OracleError::Parameter(format!("arc length {arc} outside [0, 1)")));
            }
            let mut r = rng(*seed);
            let mut starts: Vec<f64> = if *even {
                (0..*n).map(|i| i as f64 / *n as f64).collect()
            } else {
                (0..*n).map(|_| r.gen::<f64>()).collect()
            };
            starts.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
            let eps = 1e-9;
            let g = Graph::from_fn(*n, |i, j| {
                let d = (starts[j] - starts[i]).abs();
                d.min(1.0 - d) <= arc + eps
            });
            let w = Some(Witness::Round { order: (0..*n).collect() });
            Ok(if *shuffle { shuffled(g, w, *seed) } else { Generated { graph: g, witness: w } })
        }
        GeneratorSpec::BipartiteComplement { x, y, p, seed } => {
            check_p(*p)?;
            let mut r = rng(*seed);
            let n = x + y;
            let mut edges = Vec::new();
            for i in 0..*x {
                for j in *x..n {
                    if r.gen_bool(*p) {
                        edges.push((i, j));
                    }
                }
            }
            let g = complement(&Graph::from_edges(n, &edges)?);
            let side = (0..n).map(|v| v >= *x).collect();
            Ok(shuffled(g, Some(Witness::Bipartition { side }), *seed))
        }
        GeneratorSpec::Exhaustive { n, index } => {
            let pairs = n * n.saturating_sub(1) / 2;
            if pairs > 63 || *index >> pairs != 0 {
                return Err(OracleError::Parameter(format!("index {index} out of range for n = {n}")));
            }
            let mut edges = Vec::new();
            let mut bit = 0;
            for i in 0..*n {
                for j in i + 1..*n {
                    if index >> bit & 1 == 1 {
                        edges.push((i, j));
                    }
                    bit += 1;
                }
            }
            Ok(Generated { graph: Graph::from_edges(*n, &edges)?, witness: None })
        }
        GeneratorSpec::Named { name } => Ok(Generated { graph: named(name)?, witness: None }),
        GeneratorSpec::TypeTemplate { ty, k, seed } => {
            let t = super::templates::type_template(*ty, *k, *seed)?;
            Ok(Generated { graph: t.graph, witness: Some(Witness::Cover { s: t.s, t: t.t }) })
        }
        GeneratorSpec::PcaBlocks { k1, k2, seed } => {
            let (graph, order) = super::templates::pca_blocks(*k1, *k2, *seed)?;
            Ok(Generated { graph, witness: Some(Witness::Round { order }) })
        }
    }
}

/// Named small instances.
pub fn named(name: &str) -> Result<Graph, OracleError> {
    let parse_k = |s: &str| s.parse::<usize>().map_err(|_| OracleError::Parameter(format!("unknown instance {name}")));
    if let Some(p) = patterns::catalogue().into_iter().find(|p| p.name == name) {
        return Ok(p.graph);
    }
    if let Some(rest) = name.strip_prefix("co-C") {
        return Ok(complement(&patterns::cycle(parse_k(rest)?).graph));
    }
    if let Some(rest) = name.strip_prefix('C') {
        return Ok(patterns::cycle(parse_k(rest)?).graph);
    }
    if let Some(rest) = name.strip_prefix('P') {
        let k = parse_k(rest)?;
        return Ok(Graph::from_fn(k, |i, j| j == i + 1));
    }
    if let Some(rest) = name.strip_prefix('K') {
        let k = parse_k(rest)?;
        return Ok(Graph::from_fn(k, |_, _| true));
    }
    Err(OracleError::Parameter(format!("unknown instance {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_example() {
        let g = generate(&GeneratorSpec::Staircase { r: vec![3, 4, 5, 6, 6, 6] }).unwrap().graph;
        assert_eq!(g.m(), 9);
        assert!(g.adjacent(1, 3) && !g.adjacent(0, 3));
    }

    #[test]
    fn even_arcs_give_c6() {
        let spec = GeneratorSpec::CircularArcPca { n: 6, arc: 0.25, seed: 0, even: true, shuffle: false };
        let g = generate(&spec).unwrap().graph;
        assert!(g.same_edges(&patterns::cycle(6).graph));
    }

    #[test]
    fn empty_bipartite_part_gives_clique() {
        let spec = GeneratorSpec::BipartiteComplement { x: 3, y: 3, p: 0.0, seed: 1 };
        assert!(generate(&spec).unwrap().graph.is_complete());
    }

    #[test]
    fn deterministic() {
        let spec = GeneratorSpec::Gnp { n: 12, p: 0.4, seed: 9 };
        assert!(generate(&spec).unwrap().graph.same_edges(&generate(&spec).unwrap().graph));
        let spec = GeneratorSpec::StaircasePig { n: 15, reach: 2, seed: 3, shuffle: true };
        assert!(generate(&spec).unwrap().graph.same_edges(&generate(&spec).unwrap().graph));
    }

    #[test]
    fn spec_json() {
        let spec: GeneratorSpec = serde_json::from_str(r#"{"family":"gnp","n":5,"p":0.5,"seed":2}"#).unwrap();
        assert_eq!(spec, GeneratorSpec::Gnp { n: 5, p: 0.5, seed: 2 });
        let spec: GeneratorSpec = serde_json::from_str(r#"{"family":"named","name":"F1"}"#).unwrap();
        assert_eq!(generate(&spec).unwrap().graph.m(), 9);
    }
}

//! Cross-checks every method on a corpus.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::brute::brute_force_colourings;
use super::generate::{generate, GeneratorSpec};
use crate::aux::{count_colourings, recognize, verify_locally_complete, RecognitionResult};
use crate::graph::{complement, Graph};
use crate::kaleidoscope::{extract_kaleidoscope, verify_kaleidoscope};
use crate::structure::structural_recognize;

/// Brute force is run up to this many edges.
pub const HARNESS_BRUTE_LIMIT: usize = 16;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceVerdict {
    pub index: usize,
    pub spec: GeneratorSpec,
    pub n: usize,
    pub m: usize,
    pub aux: bool,
    pub count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<u64>,
    pub failures: Vec<String>,
    /// Edge list of the instance when something failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HarnessReport {
    pub total: usize,
    pub disagreements: usize,
    pub instances: Vec<InstanceVerdict>,
}

/// Results of every method on one graph.
#[derive(Debug, Clone)]
pub struct GraphCheck {
    pub aux: bool,
    pub count: String,
    pub structural: Option<bool>,
    pub brute: Option<u64>,
    pub failures: Vec<String>,
}

/// Runs the auxiliary recognizer, its certificates, the structural
/// dispatcher and (for small graphs) brute force, and lists disagreements.
pub fn check_graph(g: &Graph) -> GraphCheck {
    let mut failures = Vec::new();
    let result = recognize(g);
    let aux = result.is_colourable();
    let count = count_colourings(g);
    match &result {
        RecognitionResult::Colourable(c) => {
            if !matches!(verify_locally_complete(g, c), Ok(None)) {
                failures.push("aux colouring fails verification".into());
            }
        }
        RecognitionResult::NotColourable(cycle) => match extract_kaleidoscope(g, cycle) {
            Ok(kal) => {
                if !matches!(verify_kaleidoscope(&complement(g), &kal), Ok(None)) {
                    failures.push("kaleidoscope fails verification".into());
                }
                if kal.total_length() != cycle.len() || kal.total_length() % 2 == 0 {
                    failures.push(format!("kaleidoscope length {} vs cycle {}", kal.total_length(), cycle.len()));
                }
            }
            Err(e) => failures.push(format!("extraction failed: {e}")),
        },
    }
    let structural = match structural_recognize(g) {
        Ok(rep) => {
            if rep.is_colourable() != aux {
                failures.push(format!("structural says {} but aux says {}", rep.is_colourable(), aux));
            }
            Some(rep.is_colourable())
        }
        Err(e) => {
            failures.push(format!("structural error: {e}"));
            None
        }
    };
    let brute = if g.m() <= HARNESS_BRUTE_LIMIT {
        let bf = brute_force_colourings(g, 0).expect("within limit");
        if (bf.count > 0) != aux {
            failures.push(format!("brute force count {} but aux says {}", bf.count, aux));
        }
        if count.to_string() != bf.count.to_string() {
            failures.push(format!("count {count} but brute force {}", bf.count));
        }
        Some(bf.count)
    } else {
        None
    };
    GraphCheck { aux, count: count.to_string(), structural, brute, failures }
}

/// Checks every instance of the corpus; results stay in corpus order.
pub fn equivalence_harness(corpus: &[GeneratorSpec]) -> HarnessReport {
    let instances: Vec<InstanceVerdict> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, spec)| match generate(spec) {
            Ok(gen) => {
                let g = gen.graph;
                let c = check_graph(&g);
                let instance = (!c.failures.is_empty()).then(|| g.to_edge_list());
                InstanceVerdict {
                    index,
                    spec: spec.clone(),
                    n: g.n(),
                    m: g.m(),
                    aux: c.aux,
                    count: c.count,
                    structural: c.structural,
                    brute: c.brute,
                    failures: c.failures,
                    instance,
                }
            }
            Err(e) => InstanceVerdict {
                index,
                spec: spec.clone(),
                n: 0,
                m: 0,
                aux: false,
                count: "0".into(),
                structural: None,
                brute: None,
                failures: vec![format!("generation failed: {e}")],
                instance: None,
            },
        })
        .collect();
    let disagreements = instances.iter().filter(|v| !v.failures.is_empty()).count();
    HarnessReport { total: instances.len(), disagreements, instances }
}

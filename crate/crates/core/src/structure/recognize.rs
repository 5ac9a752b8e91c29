//! Per-component dispatcher over the structural decision procedures, with
//! twin lifting back to the input graph.

use serde::{Deserialize, Serialize};

use super::cover::{canonical_cover, CanonicalCliqueCover};
use super::decide::{
    cc2_colouring, complement_bipartition, pca_decide, pig_decide, pseudo_cutvertices, universal_vertices,
};
use super::types::classify_type;
use super::{Decision, StructureError};
use crate::aux::{recognize, verify_locally_complete, EdgeColouring, RecognitionResult};
use crate::graph::{components, cutvertices, induced, twin_reduce, Graph};
use crate::orderings::{find_round, find_straight, RoundOrdering, StraightOrdering};
use crate::patterns::f_witness;

/// Round orderings are searched only up to this many reduced vertices.
pub const ROUND_SEARCH_LIMIT: usize = 200;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub class: String,
    pub reduced_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CanonicalCliqueCover>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_cutvertices: Option<Vec<usize>>,
    /// Which procedure decided: cc2, pig, pca or aux.
    pub method: String,
    pub decision: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Whole-graph report. Top-level `cover`, `type` and `pseudo_cutvertices`
/// describe the single component when the graph is connected.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructuralReport {
    pub class: String,
    pub reduced_n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CanonicalCliqueCover>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudo_cutvertices: Option<Vec<usize>>,
    pub decision: String,
    pub colouring: Vec<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub components: Vec<ComponentReport>,
    #[serde(skip)]
    pub result: Option<Decision>,
}

impl StructuralReport {
    pub fn is_colourable(&self) -> bool {
        self.decision == "colourable"
    }

    pub fn colouring(&self) -> Option<&EdgeColouring> {
        match &self.result {
            Some(Decision::Colourable(c)) => Some(c),
            _ => None,
        }
    }
}

struct Shape {
    class: &'static str,
    straight: Option<StraightOrdering>,
    round: Option<RoundOrdering>,
    cover: Option<CanonicalCliqueCover>,
    type_name: Option<String>,
    pseudo: Option<Vec<usize>>,
}

fn shape(r: &Graph) -> Result<Shape, StructureError> {
    if let Some(o) = find_straight(r)? {
        let cover = canonical_cover(r, &o)?;
        let type_name = if cover.k == 1 {
            Some("Clique".to_string())
        } else if cutvertices(r)?.is_empty() {
            Some(classify_type(r, &o, &cover)?.name().to_string())
        } else {
            Some("Segmented".to_string())
        };
        return Ok(Shape { class: "PIG", straight: Some(o), round: None, cover: Some(cover), type_name, pseudo: None });
    }
    if r.n() <= ROUND_SEARCH_LIMIT {
        if let Some(o) = find_round(r)? {
            let pseudo = Some(pseudo_cutvertices(r, &o)?.pseudo_cut);
            return Ok(Shape { class: "PCA", straight: None, round: Some(o), cover: None, type_name: None, pseudo });
        }
        return Ok(Shape { class: "other", straight: None, round: None, cover: None, type_name: None, pseudo: None });
    }
    Ok(Shape { class: "unknown", straight: None, round: None, cover: None, type_name: None, pseudo: None })
}

fn aux_decide(r: &Graph) -> Decision {
    match recognize(r) {
        RecognitionResult::Colourable(c) => Decision::Colourable(c),
        RecognitionResult::NotColourable(cyc) => {
            Decision::NotColourable(format!("auxiliary graph has an odd cycle of length {}", cyc.len()))
        }
    }
}

fn decide_reduced(r: &Graph, sh: &Shape) -> Result<(Decision, &'static str), StructureError> {
    if universal_vertices(r).len() > 1 {
        return Err(StructureError::TheoremViolation("reduced graph with two universal vertices".into()));
    }
    if complement_bipartition(r).is_some() {
        return Ok((Decision::Colourable(cc2_colouring(r)?), "cc2"));
    }
    if let Some(o) = &sh.straight {
        let mut d = pig_decide(r, o)?;
        if let Decision::NotColourable(reason) = &d {
            d = Decision::NotColourable(match f_witness(r) {
                Some(w) => format!("F-pattern/NotTyped: {reason}; contains {} at {:?}", w.pattern, w.map),
                None => format!("NotTyped: {reason}"),
            });
        }
        return Ok((d, "pig"));
    }
    if let Some(o) = &sh.round {
        if r.n() <= super::decide::PERFECT_LIMIT || !pseudo_cutvertices(r, o)?.pseudo_cut.is_empty() {
            return Ok((pca_decide(r, o)?, "pca"));
        }
    }
    Ok((aux_decide(r), "aux"))
}

/// Twin-reduces each component, decides it structurally where the theory
/// applies (falling back to the auxiliary graph elsewhere), lifts the
/// colouring to the input graph and verifies it.
pub fn structural_recognize(g: &Graph) -> Result<StructuralReport, StructureError> {
    let mut colours = vec![0u8; g.m()];
    let mut reports = Vec::new();
    let mut failure: Option<String> = None;
    for comp in components(g) {
        let (cg, _) = induced(g, &comp)?;
        let tr = twin_reduce(&cg);
        let r = &tr.reduced;
        let sh = shape(r)?;
        let (decision, method) = decide_reduced(r, &sh)?;
        let reason = match &decision {
            Decision::Colourable(rc) => {
                for &(a, b) in cg.edges() {
                    let (ra, rb) = (tr.class_of[a], tr.class_of[b]);
                    let c = if ra == rb { 1 } else { rc.colour(r.edge_id(ra, rb).expect("twins preserve adjacency")) };
                    colours[g.edge_id(comp[a], comp[b]).expect("component edge")] = c;
                }
                None
            }
            Decision::NotColourable(why) => {
                failure.get_or_insert_with(|| why.clone());
                Some(why.clone())
            }
        };
        reports.push(ComponentReport {
            vertices: comp.clone(),
            class: sh.class.to_string(),
            reduced_n: r.n(),
            cover: sh.cover.clone(),
            type_name: sh.type_name.clone(),
            pseudo_cutvertices: sh.pseudo.clone(),
            method: method.to_string(),
            decision: if decision.is_colourable() { "colourable" } else { "not colourable" }.to_string(),
            reason,
        });
    }
    let class = overall_class(&reports);
    let single = (reports.len() == 1).then(|| reports[0].clone());
    let (decision, colouring, result) = match failure {
        None => {
            let c = EdgeColouring::new(colours).expect("colours are 1 or 2");
            if let Some(v) = verify_locally_complete(g, &c).expect("length matches") {
                return Err(StructureError::TheoremViolation(format!("lifted colouring fails at {v:?}")));
            }
            ("colourable", c.triples(g), Decision::Colourable(c))
        }
        Some(why) => ("not colourable", Vec::new(), Decision::NotColourable(why)),
    };
    Ok(StructuralReport {
        class,
        reduced_n: reports.iter().map(|c| c.reduced_n).sum(),
        cover: single.as_ref().and_then(|c| c.cover.clone()),
        type_name: single.as_ref().and_then(|c| c.type_name.clone()),
        pseudo_cutvertices: single.as_ref().and_then(|c| c.pseudo_cutvertices.clone()),
        decision: decision.to_string(),
        colouring,
        reason: match &result {
            Decision::NotColourable(why) => Some(why.clone()),
            _ => None,
        },
        components: reports,
        result: Some(result),
    })
}

fn overall_class(reports: &[ComponentReport]) -> String {
    if reports.is_empty() || reports.iter().all(|c| c.class == "PIG") {
        "PIG".into()
    } else if reports.iter().all(|c| c.class == "PIG" || c.class == "PCA") {
        "PCA".into()
    } else if reports.iter().any(|c| c.class == "unknown") {
        "unknown".into()
    } else {
        "other".into()
    }
}

//! Decision procedures for reduced proper interval and proper circular-arc
//! graphs, built from segment and weak-block classifications.

use serde::{Deserialize, Serialize};

use super::cover::{canonical_cover, CanonicalCliqueCover};
use super::types::{classify_type, type1_pair_colourings, type_colouring, PigClass};
use super::{Decision, StructureError};
use crate::aux::{recognize, verify_locally_complete, EdgeColouring, RecognitionResult};
use crate::graph::{complement, cutvertices, induced, is_connected, is_reduced, Graph};
use crate::orderings::{find_straight, verify_round, verify_straight, RoundOrdering, StraightOrdering};
use crate::patterns::{f_witness, odd_hole_or_antihole};

/// Perfection is tested by exhaustive hole search up to this size.
pub const PERFECT_LIMIT: usize = 30;

/// A contiguous run of an ordering, twin-reduced inside itself while
/// keeping the requested end vertices.
#[derive(Debug, Clone)]
pub struct Piece {
    /// Host vertices in ordering sequence; piece vertex `i` is `host[i]`.
    pub host: Vec<usize>,
    pub full: Graph,
    /// Reduced piece on `0..keep.len()`; vertex `j` is piece vertex `keep[j]`.
    pub reduced: Graph,
    pub keep: Vec<usize>,
    /// Piece vertex -> reduced vertex.
    pub class_of: Vec<usize>,
    pub ordering: StraightOrdering,
    pub cover: CanonicalCliqueCover,
    pub class: PigClass,
}

impl Piece {
    pub fn new(g: &Graph, host: Vec<usize>, keep_first: bool, keep_last: bool) -> Result<Piece, StructureError> {
        Self::with_end_edge(g, host, keep_first, keep_last, true)
    }

    /// Like [`Piece::new`], optionally leaving out the edge between the two
    /// end vertices when it belongs to the rest of a circular ordering.
    pub fn with_end_edge(
        g: &Graph,
        host: Vec<usize>,
        keep_first: bool,
        keep_last: bool,
        end_edge: bool,
    ) -> Result<Piece, StructureError> {
        let (mut full, _) = induced(g, &host)?;
        let len = host.len();
        if !end_edge && len > 2 && full.adjacent(0, len - 1) {
            let edges: Vec<(usize, usize)> = full.edges().iter().copied().filter(|&e| e != (0, len - 1)).collect();
            full = Graph::from_edges(len, &edges)?;
        }
        let mut rep_of = vec![usize::MAX; len];
        let mut keys: Vec<(Vec<usize>, usize)> = Vec::new();
        let preferred = |v: usize| (keep_first && v == 0) || (keep_last && v + 1 == len);
        for v in 0..len {
            let key = full.closed_neighbourhood(v);
            match keys.iter_mut().find(|(k, _)| *k == key) {
                Some((_, rep)) => {
                    if preferred(v) && !preferred(*rep) {
                        *rep = v;
                    }
                }
                None => keys.push((key, v)),
            }
        }
        for v in 0..len {
            let key = full.closed_neighbourhood(v);
            rep_of[v] = keys.iter().find(|(k, _)| *k == key).unwrap().1;
        }
        let keep: Vec<usize> = (0..len).filter(|&v| rep_of[v] == v).collect();
        let mut idx = vec![usize::MAX; len];
        for (j, &v) in keep.iter().enumerate() {
            idx[v] = j;
        }
        let class_of: Vec<usize> = (0..len).map(|v| idx[rep_of[v]]).collect();
        let (reduced, _) = induced(&full, &keep)?;
        let ordering = match StraightOrdering::from_order(&reduced, (0..keep.len()).collect())? {
            Ok(o) => o,
            Err(v) => return Err(StructureError::TheoremViolation(format!("piece ordering is not straight: {v:?}"))),
        };
        let cover = canonical_cover(&reduced, &ordering)?;
        let class = if cover.k == 1 { PigClass::Clique } else { classify_type(&reduced, &ordering, &cover)? };
        Ok(Piece { host, full, reduced, keep, class_of, ordering, cover, class })
    }

    /// Candidate colourings of the reduced piece.
    fn candidates(&self) -> Result<Vec<EdgeColouring>, StructureError> {
        Ok(match self.class {
            PigClass::Clique => vec![EdgeColouring::uniform(self.reduced.m(), 1)],
            PigClass::Type1 if self.cover.k == 2 => {
                let (a, b) = type1_pair_colourings(&self.reduced, &self.ordering, &self.cover)?;
                vec![a, b]
            }
            _ => vec![type_colouring(&self.reduced, &self.ordering, &self.cover, &self.class)?],
        })
    }

    /// Colours of the piece's own edges (ids of `full`) from a colouring of
    /// the reduced piece; edges inside a twin class get colour `intra`.
    pub fn lift(&self, c: &EdgeColouring, intra: u8) -> Vec<u8> {
        self.full
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (ra, rb) = (self.class_of[a], self.class_of[b]);
                if ra == rb {
                    intra
                } else {
                    c.colour(self.reduced.edge_id(ra, rb).expect("twin classes preserve adjacency"))
                }
            })
            .collect()
    }

    fn ends_coloured(&self, colours: &[u8], first: Option<u8>, last: Option<u8>) -> bool {
        let at = |v: usize, want: u8| {
            self.full.neighbours(v).iter().all(|&w| colours[self.full.edge_id(v, w).unwrap()] == want)
        };
        first.is_none_or(|x| at(0, x)) && last.is_none_or(|x| at(self.host.len() - 1, x))
    }
}

/// Tries every candidate colouring and its switch until the piece ends
/// carry the requested colours.
fn colour_piece(piece: &Piece, first: Option<u8>, last: Option<u8>) -> Result<Option<Vec<u8>>, StructureError> {
    for c in piece.candidates()? {
        for cand in [c.clone(), c.switched()] {
            for intra in [1, 2] {
                let lifted = piece.lift(&cand, intra);
                if piece.ends_coloured(&lifted, first, last) {
                    return Ok(Some(lifted));
                }
            }
        }
    }
    Ok(None)
}

/// Writes piece colours into a host colouring; `Err` on a clash.
fn compose(g: &Graph, out: &mut [u8], piece: &Piece, colours: &[u8]) -> Result<(), StructureError> {
    for (id, &(a, b)) in piece.full.edges().iter().enumerate() {
        let e = g.edge_id(piece.host[a], piece.host[b]).expect("piece edges are host edges");
        if out[e] != 0 && out[e] != colours[id] {
            return Err(StructureError::TheoremViolation(format!("edge {e} coloured twice differently")));
        }
        out[e] = colours[id];
    }
    Ok(())
}

fn finish(g: &Graph, colours: Vec<u8>) -> Result<EdgeColouring, StructureError> {
    if let Some(e) = colours.iter().position(|&c| c == 0) {
        return Err(StructureError::TheoremViolation(format!("edge {e} left uncoloured")));
    }
    let c = EdgeColouring::new(colours).expect("colours are 1 or 2");
    if let Some(v) = verify_locally_complete(g, &c).expect("length matches") {
        return Err(StructureError::TheoremViolation(format!("composed colouring fails at {v:?}")));
    }
    Ok(c)
}

fn check_reduced_connected(g: &Graph) -> Result<(), StructureError> {
    if !is_connected(g) {
        return Err(StructureError::Precondition("graph is not connected".into()));
    }
    if !is_reduced(g) {
        return Err(StructureError::Precondition("graph is not reduced".into()));
    }
    Ok(())
}

/// Segment colour at cutvertices: 1 for even segment index, 2 for odd.
fn alternate(i: usize) -> u8 {
    if i.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// Decides a connected reduced proper interval graph from its straight
/// ordering by splitting at cutvertices.
pub fn pig_decide(g: &Graph, o: &StraightOrdering) -> Result<Decision, StructureError> {
    check_reduced_connected(g)?;
    if let Some(v) = verify_straight(g, o)? {
        return Err(StructureError::Precondition(format!("ordering does not verify: {v:?}")));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(Decision::Colourable(EdgeColouring::uniform(0, 1)));
    }
    let pos = o.positions();
    let mut cuts: Vec<usize> = cutvertices(g)?.into_iter().map(|v| pos[v]).collect();
    cuts.sort_unstable();
    let mut bounds = vec![0];
    bounds.extend(&cuts);
    bounds.push(n - 1);
    let segs = bounds.len() - 1;
    let mut out = vec![0u8; g.m()];
    for i in 0..segs {
        let host: Vec<usize> = o.order[bounds[i]..=bounds[i + 1]].to_vec();
        let piece = Piece::new(g, host, i > 0, i + 1 < segs)?;
        let k = piece.cover.k;
        let allowed = match (&piece.class, segs == 1, i == 0, i + 1 == segs) {
            (PigClass::NotTyped(_), _, _, _) => false,
            (_, true, _, _) => true,
            (PigClass::Clique | PigClass::Type4, _, _, _) => true,
            (PigClass::Type1, _, true, _) | (PigClass::Type1, _, _, true) => k == 2,
            (PigClass::Type2, _, true, _) => true,
            (PigClass::Type3, _, _, true) => true,
            _ => false,
        };
        if !allowed {
            let place = match (segs == 1, i == 0, i + 1 == segs) {
                (true, _, _) => "graph".to_string(),
                (_, true, _) => "first segment".to_string(),
                (_, _, true) => "last segment".to_string(),
                _ => format!("middle segment {i}"),
            };
            return Ok(Decision::NotColourable(format!("{place} is {:?} with {k} cliques", piece.class)));
        }
        let first = (i > 0).then(|| alternate(i));
        let last = (i + 1 < segs).then(|| alternate(i));
        let Some(colours) = colour_piece(&piece, first, last)? else {
            return Err(StructureError::TheoremViolation(format!(
                "segment {i} ({:?}) admits no colouring with monochromatic cut ends",
                piece.class
            )));
        };
        compose(g, &mut out, &piece, &colours)?;
    }
    Ok(Decision::Colourable(finish(g, out)?))
}

/// One weak block of a round ordering.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeakBlock {
    /// Positions of the bounding pseudo-cutvertices.
    pub from: usize,
    pub to: usize,
    /// Host vertices clockwise from `from` to `to`.
    pub vertices: Vec<usize>,
    pub class: PigClass,
    /// Canonical cover of the reduced block.
    pub cover: CanonicalCliqueCover,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeakBlockDecomposition {
    /// Positions of pseudo-cutvertices on the round ordering.
    pub pseudo_cut: Vec<usize>,
    /// Blocks between consecutive pseudo-cutvertices; empty when there are
    /// fewer than two.
    pub blocks: Vec<WeakBlock>,
    #[serde(skip)]
    pieces: Vec<Piece>,
}

/// Positions `i` with `v_{i-1}` not adjacent to `v_{i+1}`, and the weak
/// blocks between them.
pub fn pseudo_cutvertices(g: &Graph, o: &RoundOrdering) -> Result<WeakBlockDecomposition, StructureError> {
    if let Some(v) = verify_round(g, o)? {
        return Err(StructureError::Precondition(format!("ordering does not verify: {v:?}")));
    }
    if !is_connected(g) {
        return Err(StructureError::Precondition("graph is not connected".into()));
    }
    if find_straight(g)?.is_some() {
        return Err(StructureError::Precondition("graph has a straight ordering".into()));
    }
    let n = g.n();
    let at = |i: usize| o.order[i % n];
    for i in 0..n {
        if !g.adjacent(at(i), at(i + 1)) {
            return Err(StructureError::TheoremViolation(format!("consecutive positions {i} and {} not adjacent", (i + 1) % n)));
        }
    }
    let pseudo_cut: Vec<usize> = (0..n).filter(|&i| !g.adjacent(at(i + n - 1), at(i + 1))).collect();
    let p = pseudo_cut.len();
    let mut blocks = Vec::new();
    let mut pieces = Vec::new();
    if p >= 2 {
        let arc_vertices = |from: usize, to: usize| -> Vec<usize> { (0..=(to + n - from) % n).map(|d| at(from + d)).collect() };
        for j in 0..p {
            let from = pseudo_cut[j];
            let to = pseudo_cut[(j + 1) % p];
            let host = arc_vertices(from, to);
            // With two pseudo-cutvertices the ends of one block may be joined
            // through the other block, which then owns that edge.
            let end_edge = p > 2
                || host.len() == 2
                || !g.is_clique(&arc_vertices(to, from))
                || (j == 0 && g.is_clique(&host));
            let piece = Piece::with_end_edge(g, host.clone(), true, true, end_edge)?;
            blocks.push(WeakBlock { from, to, vertices: host, class: piece.class.clone(), cover: piece.cover.clone() });
            pieces.push(piece);
        }
    }
    Ok(WeakBlockDecomposition { pseudo_cut, blocks, pieces })
}

/// Perfection test by odd hole and odd antihole search.
pub fn is_perfect(g: &Graph) -> Result<bool, StructureError> {
    if g.n() > PERFECT_LIMIT {
        return Err(StructureError::ScaleExceeded { n: g.n(), limit: PERFECT_LIMIT });
    }
    Ok(odd_hole_or_antihole(g).is_none())
}

/// Side of every vertex in a 2-colouring of the complement, if bipartite.
pub fn complement_bipartition(g: &Graph) -> Option<Vec<bool>> {
    let co = complement(g);
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let sv = side[v].unwrap();
            for &w in co.neighbours(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(Option::unwrap).collect())
}

/// Colour 1 inside each side of a complement bipartition, 2 across.
pub fn cc2_colouring(g: &Graph) -> Result<EdgeColouring, StructureError> {
    let side = complement_bipartition(g)
        .ok_or_else(|| StructureError::Precondition("complement is not bipartite".into()))?;
    let colours = g.edges().iter().map(|&(u, v)| if side[u] == side[v] { 1 } else { 2 }).collect();
    finish(g, colours)
}

/// Vertices adjacent to all others.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) + 1 == g.n()).collect()
}

/// Decides a connected reduced proper circular-arc graph without a
/// straight ordering and with clique cover number at least 3.
pub fn pca_decide(g: &Graph, o: &RoundOrdering) -> Result<Decision, StructureError> {
    check_reduced_connected(g)?;
    if complement_bipartition(g).is_some() {
        return Err(StructureError::Precondition("clique cover number is at most 2".into()));
    }
    let dec = pseudo_cutvertices(g, o)?;
    let p = dec.pseudo_cut.len();
    if p == 1 {
        return Ok(Decision::NotColourable("exactly one pseudo-cutvertex".into()));
    }
    if p >= 2 {
        if p % 2 == 1 {
            return Ok(Decision::NotColourable(format!("odd number ({p}) of pseudo-cutvertices")));
        }
        if let Some((j, b)) = dec
            .blocks
            .iter()
            .enumerate()
            .find(|(_, b)| !matches!(b.class, PigClass::Clique | PigClass::Type4))
        {
            return Ok(Decision::NotColourable(format!("weak block {j} is {:?}", b.class)));
        }
        let mut out = vec![0u8; g.m()];
        for (j, piece) in dec.pieces.iter().enumerate() {
            let x = Some(alternate(j));
            let Some(colours) = colour_piece(piece, x, x)? else {
                return Err(StructureError::TheoremViolation(format!("weak block {j} ends are not monochromatic")));
            };
            compose(g, &mut out, piece, &colours)?;
        }
        return Ok(Decision::Colourable(finish(g, out)?));
    }
    if !is_perfect(g)? {
        return Ok(Decision::NotColourable("no pseudo-cutvertex and not perfect".into()));
    }
    if let Some(w) = f_witness(g) {
        return Ok(Decision::NotColourable(format!("F-pattern/NotTyped: contains {} at {:?}", w.pattern, w.map)));
    }
    match recognize(g) {
        RecognitionResult::Colourable(c) => Ok(Decision::Colourable(finish(g, c.colours().to_vec())?)),
        RecognitionResult::NotColourable(_) => Err(StructureError::TheoremViolation(
            "perfect F-free graph without pseudo-cutvertex is not colourable".into(),
        )),
    }
}

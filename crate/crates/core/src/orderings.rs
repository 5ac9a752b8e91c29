//! Straight orderings (proper interval graphs) and round orderings (proper
//! circular-arc graphs).
//!
//! Positions are 0-based. `ell[i]` and `gamma[i]` are the positions of the
//! first and last members of the closed neighbourhood of `order[i]`; for
//! round orderings they are read clockwise, modulo `n`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aux::forms_induced_p3;
use crate::graph::{is_connected, twin_reduce, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("order is not a permutation of the vertex set")]
    NotPermutation,
    #[error("graph is not connected")]
    Disconnected,
}

/// First failing clause of an ordering check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderingViolation {
    /// The closed neighbourhood at this position is not contiguous.
    NotContiguous { position: usize },
    /// Stored boundary indices differ from the recomputed ones.
    BoundsMismatch { position: usize },
    /// `G[ell(i), i]` is not complete.
    LeftNotComplete { position: usize },
    /// `G[i, gamma(i)]` is not complete.
    RightNotComplete { position: usize },
    /// Neither arc between the endpoints of this edge is a clique.
    EdgeArcs { from: usize, to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraightOrdering {
    pub order: Vec<usize>,
    pub ell: Vec<usize>,
    pub gamma: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundOrdering {
    pub order: Vec<usize>,
    pub ell: Vec<usize>,
    pub gamma: Vec<usize>,
}

/// JSON form shared by both ordering kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingJson {
    pub order: Vec<usize>,
    pub ell: Vec<usize>,
    pub gamma: Vec<usize>,
    pub circular: bool,
}

impl From<&StraightOrdering> for OrderingJson {
    fn from(o: &StraightOrdering) -> Self {
        OrderingJson { order: o.order.clone(), ell: o.ell.clone(), gamma: o.gamma.clone(), circular: false }
    }
}

impl From<&RoundOrdering> for OrderingJson {
    fn from(o: &RoundOrdering) -> Self {
        OrderingJson { order: o.order.clone(), ell: o.ell.clone(), gamma: o.gamma.clone(), circular: true }
    }
}

fn positions(n: usize, order: &[usize]) -> Result<Vec<usize>, OrderingError> {
    if order.len() != n {
        return Err(OrderingError::NotPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(OrderingError::NotPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

impl StraightOrdering {
    /// Computes boundaries for `order` and verifies it. `Ok(Err(_))` carries
    /// the violation when the order is a permutation but not straight.
    pub fn from_order(
        g: &Graph,
        order: Vec<usize>,
    ) -> Result<Result<StraightOrdering, OrderingViolation>, OrderingError> {
        let pos = positions(g.n(), &order)?;
        let (ell, gamma) = straight_bounds(g, &order, &pos);
        let o = StraightOrdering { order, ell, gamma };
        Ok(match verify_straight(g, &o)? {
            None => Ok(o),
            Some(v) => Err(v),
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of every vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn reversed(&self, g: &Graph) -> StraightOrdering {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        let pos = positions(g.n(), &order).expect("permutation");
        let (ell, gamma) = straight_bounds(g, &order, &pos);
        StraightOrdering { order, ell, gamma }
    }

    /// The same sequence read circularly.
    pub fn to_round(&self, g: &Graph) -> RoundOrdering {
        let pos = positions(g.n(), &self.order).expect("permutation");
        let (ell, gamma) = round_bounds(g, &self.order, &pos);
        RoundOrdering { order: self.order.clone(), ell, gamma }
    }
}

impl RoundOrdering {
    pub fn from_order(
        g: &Graph,
        order: Vec<usize>,
    ) -> Result<Result<RoundOrdering, OrderingViolation>, OrderingError> {
        let pos = positions(g.n(), &order)?;
        let (ell, gamma) = round_bounds(g, &order, &pos);
        let o = RoundOrdering { order, ell, gamma };
        Ok(match verify_round(g, &o)? {
            None => Ok(o),
            Some(v) => Err(v),
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Same circle, starting at position `start`.
    pub fn rotated(&self, g: &Graph, start: usize) -> RoundOrdering {
        let n = self.order.len();
        let order: Vec<usize> = (0..n).map(|i| self.order[(start + i) % n]).collect();
        let pos = positions(g.n(), &order).expect("permutation");
        let (ell, gamma) = round_bounds(g, &order, &pos);
        RoundOrdering { order, ell, gamma }
    }
}

fn straight_bounds(g: &Graph, order: &[usize], pos: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut ell = Vec::with_capacity(order.len());
    let mut gamma = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let ps = g.neighbours(v).iter().map(|&w| pos[w]);
        ell.push(ps.clone().min().unwrap_or(i).min(i));
        gamma.push(ps.max().unwrap_or(i).max(i));
    }
    (ell, gamma)
}

/// Clockwise and counter-clockwise runs of neighbours. For a vertex whose
/// closed neighbourhood is everything, the clockwise side is the longest
/// clique run and the rest goes counter-clockwise.
fn round_bounds(g: &Graph, order: &[usize], _pos: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = order.len();
    let mut ell = Vec::with_capacity(n);
    let mut gamma = Vec::with_capacity(n);
    for i in 0..n {
        let v = order[i];
        if g.degree(v) + 1 == n {
            let mut run = vec![v];
            let mut fwd = 0;
            while fwd + 1 < n {
                let w = order[(i + fwd + 1) % n];
                if run.iter().all(|&x| g.adjacent(x, w)) {
                    run.push(w);
                    fwd += 1;
                } else {
                    break;
                }
            }
            gamma.push((i + fwd) % n);
            ell.push((i + fwd + 1) % n);
            if fwd + 1 == n {
                *ell.last_mut().unwrap() = i;
                *gamma.last_mut().unwrap() = (i + n - 1) % n;
            }
            continue;
        }
        let mut fwd = 0;
        while g.adjacent(v, order[(i + fwd + 1) % n]) {
            fwd += 1;
        }
        let mut back = 0;
        while g.adjacent(v, order[(i + n - back - 1) % n]) {
            back += 1;
        }
        gamma.push((i + fwd) % n);
        ell.push((i + n - back) % n);
    }
    (ell, gamma)
}

/// Checks contiguity, boundary indices and the two completeness clauses.
pub fn verify_straight(g: &Graph, o: &StraightOrdering) -> Result<Option<OrderingViolation>, OrderingError> {
    let pos = positions(g.n(), &o.order)?;
    if o.ell.len() != o.order.len() || o.gamma.len() != o.order.len() {
        return Ok(Some(OrderingViolation::BoundsMismatch { position: 0 }));
    }
    let (ell, gamma) = straight_bounds(g, &o.order, &pos);
    for i in 0..o.order.len() {
        if gamma[i] - ell[i] != g.degree(o.order[i]) {
            return Ok(Some(OrderingViolation::NotContiguous { position: i }));
        }
        if ell[i] != o.ell[i] || gamma[i] != o.gamma[i] {
            return Ok(Some(OrderingViolation::BoundsMismatch { position: i }));
        }
    }
    for i in 0..o.order.len() {
        if !g.is_clique(&o.order[ell[i]..=i]) {
            return Ok(Some(OrderingViolation::LeftNotComplete { position: i }));
        }
        if !g.is_clique(&o.order[i..=gamma[i]]) {
            return Ok(Some(OrderingViolation::RightNotComplete { position: i }));
        }
    }
    Ok(None)
}

/// Vertices at clockwise positions `from..=to`.
pub fn arc(order: &[usize], from: usize, to: usize) -> Vec<usize> {
    let n = order.len();
    let len = (to + n - from) % n + 1;
    (0..len).map(|k| order[(from + k) % n]).collect()
}

/// Checks circular contiguity, boundary indices, the completeness clauses
/// and the per-edge arc-clique property, reporting which one fails.
pub fn verify_round(g: &Graph, o: &RoundOrdering) -> Result<Option<OrderingViolation>, OrderingError> {
    let n = g.n();
    let pos = positions(n, &o.order)?;
    if o.ell.len() != n || o.gamma.len() != n {
        return Ok(Some(OrderingViolation::BoundsMismatch { position: 0 }));
    }
    let (ell, gamma) = round_bounds(g, &o.order, &pos);
    for i in 0..n {
        let v = o.order[i];
        let span = (gamma[i] + n - i) % n + (i + n - ell[i]) % n;
        let universal = g.degree(v) + 1 == n;
        if !universal && span != g.degree(v) {
            return Ok(Some(OrderingViolation::NotContiguous { position: i }));
        }
        if ell[i] != o.ell[i] || gamma[i] != o.gamma[i] {
            return Ok(Some(OrderingViolation::BoundsMismatch { position: i }));
        }
    }
    for i in 0..n {
        if !g.is_clique(&arc(&o.order, ell[i], i)) {
            return Ok(Some(OrderingViolation::LeftNotComplete { position: i }));
        }
        if !g.is_clique(&arc(&o.order, i, gamma[i])) {
            return Ok(Some(OrderingViolation::RightNotComplete { position: i }));
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = (pos[u], pos[v]);
        if !g.is_clique(&arc(&o.order, a, b)) && !g.is_clique(&arc(&o.order, b, a)) {
            return Ok(Some(OrderingViolation::EdgeArcs { from: a.min(b), to: a.max(b) }));
        }
    }
    Ok(None)
}

/// Lexicographic breadth-first search. Ties inside the first class are
/// broken by the initial order of `seed_order` (first wins).
fn lex_bfs(g: &Graph, seed_order: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = vec![seed_order.to_vec()];
    let mut mark = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        out.push(v);
        for &w in g.neighbours(v) {
            mark[w] = true;
        }
        let mut next = Vec::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (inside, outside): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&w| mark[w]);
            if !inside.is_empty() {
                next.push(inside);
            }
            if !outside.is_empty() {
                next.push(outside);
            }
        }
        classes = next;
        for &w in g.neighbours(v) {
            mark[w] = false;
        }
    }
    out
}

/// Three-sweep search: a plain LexBFS followed by two LexBFS+ sweeps that
/// break ties by the latest vertex of the previous sweep. Every candidate
/// (and its reverse) is verified; the first verified one is returned.
pub fn find_straight(g: &Graph) -> Result<Option<StraightOrdering>, OrderingError> {
    if !is_connected(g) {
        return Err(OrderingError::Disconnected);
    }
    let identity: Vec<usize> = (0..g.n()).collect();
    let mut sweep = lex_bfs(g, &identity);
    for round in 0..4 {
        for cand in [sweep.clone(), sweep.iter().rev().copied().collect()] {
            if let Ok(o) = StraightOrdering::from_order(g, cand)? {
                return Ok(Some(o));
            }
        }
        if round < 3 {
            let seed: Vec<usize> = sweep.iter().rev().copied().collect();
            sweep = lex_bfs(g, &seed);
        }
    }
    Ok(None)
}

/// Whether a connected graph admits an orientation in which every in- and
/// out-neighbourhood is a tournament.
pub fn has_local_tournament_orientation(g: &Graph) -> bool {
    orientation_classes(g).is_some()
}

/// Classes of edges whose orientations determine each other in every
/// local tournament orientation. Non-adjacent neighbours `u, w` of `v`
/// force `uv` and `vw` to point the same way along `u v w`; this is a
/// parity system over edge orientations, solved by breadth-first labelling.
/// Entry `e` is `(class, x)`: with every class root oriented from its lower
/// to its higher endpoint, edge `e = (a, b)`, `a < b`, points `a -> b`
/// exactly when `x` is true. `None` when the system is inconsistent.
pub fn orientation_classes(g: &Graph) -> Option<Vec<(usize, bool)>> {
    let m = g.m();
    let mut label: Vec<Option<(usize, bool)>> = vec![None; m];
    let toward = |e: usize, x: bool, head: usize| -> bool {
        let (_, b) = g.edge(e);
        if head == b {
            x
        } else {
            !x
        }
    };
    let mut classes = 0;
    for root in 0..m {
        if label[root].is_some() {
            continue;
        }
        let class = classes;
        classes += 1;
        label[root] = Some((class, true));
        let mut stack = vec![root];
        while let Some(e) = stack.pop() {
            let (_, xe) = label[e].expect("labelled");
            let (a, b) = g.edge(e);
            for centre in [a, b] {
                let far = if centre == a { b } else { a };
                for &w in g.neighbours(centre) {
                    if w == far || g.adjacent(w, far) {
                        continue;
                    }
                    let f = g.edge_id(centre, w).expect("edge");
                    debug_assert!(forms_induced_p3(g, e, f));
                    // e points into centre iff f points away from it.
                    let want_f_into_centre = !toward(e, xe, centre);
                    let xf = if g.edge(f).1 == centre { want_f_into_centre } else { !want_f_into_centre };
                    match label[f] {
                        None => {
                            label[f] = Some((class, xf));
                            stack.push(f);
                        }
                        Some((_, y)) if y != xf => return None,
                        _ => {}
                    }
                }
            }
        }
    }
    Some(label.into_iter().map(|l| l.expect("every edge labelled")).collect())
}

/// Search over orientations of the implication classes of a twin-free
/// graph. A round ordering orients every edge forward along the circle,
/// which makes every out- and in-neighbourhood a transitive tournament;
/// assignments creating a directed triangle inside one are pruned. A
/// complete assignment yields a candidate ordering by following, from each
/// vertex, the source of its out-neighbourhood; it is accepted only when it
/// verifies.
struct ClassSearch<'a> {
    g: &'a Graph,
    labels: Vec<(usize, bool)>,
    class_edges: Vec<Vec<usize>>,
    flip: Vec<Option<bool>>,
}

impl ClassSearch<'_> {
    /// Whether `a -> b`, once the class of the edge is decided.
    fn points(&self, a: usize, b: usize) -> Option<bool> {
        let e = self.g.edge_id(a, b).expect("edge");
        let (c, x) = self.labels[e];
        let forward = x != self.flip[c]?;
        Some(if a < b { forward } else { !forward })
    }

    fn cyclic(&self, x: usize, y: usize, z: usize) -> bool {
        match (self.points(x, y), self.points(y, z), self.points(z, x)) {
            (Some(p), Some(q), Some(r)) => p == q && q == r,
            _ => false,
        }
    }

    /// Whether `v` points the same way at all of `xs`.
    fn uniform(&self, v: usize, xs: [usize; 3]) -> bool {
        let d: Vec<Option<bool>> = xs.iter().map(|&x| self.points(v, x)).collect();
        d.iter().all(|x| x.is_some()) && d.iter().all(|&x| x == d[0])
    }

    fn common(&self, vs: &[usize]) -> Vec<usize> {
        self.g.neighbours(vs[0]).iter().copied().filter(|&w| vs[1..].iter().all(|&u| self.g.adjacent(u, w))).collect()
    }

    /// Directed triangle inside a neighbourhood using an edge of class `c`.
    fn conflict(&self, c: usize) -> bool {
        for &e in &self.class_edges[c] {
            let (a, b) = self.g.edge(e);
            for z in self.common(&[a, b]) {
                if self.cyclic(a, b, z) && self.common(&[a, b, z]).into_iter().any(|v| self.uniform(v, [a, b, z])) {
                    return true;
                }
            }
            for (v, x) in [(a, b), (b, a)] {
                let around = self.common(&[v, x]);
                for (i, &y) in around.iter().enumerate() {
                    for &z in &around[i + 1..] {
                        if self.g.adjacent(y, z) && self.cyclic(x, y, z) && self.uniform(v, [x, y, z]) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn walk(&self) -> Option<RoundOrdering> {
        let g = self.g;
        let n = g.n();
        let succ = |v: usize| -> Option<usize> {
            let outs: Vec<usize> = g.neighbours(v).iter().copied().filter(|&u| self.points(v, u) == Some(true)).collect();
            let mut sources =
                outs.iter().copied().filter(|&u| outs.iter().all(|&x| x == u || self.points(u, x) == Some(true)));
            let s = sources.next()?;
            sources.next().is_none().then_some(s)
        };
        let mut order = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        while order.len() < n {
            let u = succ(*order.last().expect("non-empty")).filter(|&u| !seen[u])?;
            seen[u] = true;
            order.push(u);
        }
        RoundOrdering::from_order(g, order).ok()?.ok()
    }

    fn search(&mut self, pending: &[usize]) -> Option<RoundOrdering> {
        let Some((&c, rest)) = pending.split_first() else { return self.walk() };
        for f in [false, true] {
            self.flip[c] = Some(f);
            if !self.conflict(c) {
                if let Some(o) = self.search(rest) {
                    return Some(o);
                }
            }
        }
        self.flip[c] = None;
        None
    }
}

fn round_from_orientation(g: &Graph) -> Option<RoundOrdering> {
    let labels = orientation_classes(g)?;
    let classes = labels.iter().map(|&(c, _)| c + 1).max().unwrap_or(0);
    if classes == 0 {
        return None;
    }
    let mut class_edges = vec![Vec::new(); classes];
    for (e, &(c, _)) in labels.iter().enumerate() {
        class_edges[c].push(e);
    }
    let mut pending: Vec<usize> = (1..classes).collect();
    pending.sort_by_key(|&c| std::cmp::Reverse(class_edges[c].len()));
    let mut flip = vec![None; classes];
    // Reversing every edge reverses the ordering, so class 0 stays fixed.
    flip[0] = Some(false);
    let mut search = ClassSearch { g, labels, class_edges, flip };
    if search.conflict(0) {
        return None;
    }
    search.search(&pending)
}

/// Round ordering search. Straight orderings are tried first, then an
/// ordering built from a local tournament orientation of the twin-free
/// reduction with twins placed together. Otherwise a backtracking search
/// places vertex 0 first and every later vertex next to a neighbour of its
/// predecessor (consecutive vertices of a round ordering of a connected
/// non-interval graph are adjacent), pruning any prefix in which some
/// placed vertex sees a non-interval of the cyclic prefix.
/// Graphs without a local tournament orientation are rejected up front.
pub fn find_round(g: &Graph) -> Result<Option<RoundOrdering>, OrderingError> {
    if let Some(s) = find_straight(g)? {
        let o = s.to_round(g);
        if verify_round(g, &o)?.is_none() {
            return Ok(Some(o));
        }
    }
    if !has_local_tournament_orientation(g) {
        return Ok(None);
    }
    let tr = twin_reduce(g);
    if let Some(o) = round_from_orientation(&tr.reduced) {
        let classes = tr.classes();
        let order: Vec<usize> = o.order.iter().flat_map(|&c| classes[c].iter().copied()).collect();
        if let Ok(Ok(o)) = RoundOrdering::from_order(g, order) {
            return Ok(Some(o));
        }
    }
    let n = g.n();
    let mut order = vec![0usize];
    let mut used = vec![false; n];
    used[0] = true;
    let mut found = None;
    let mut wrap = vec![false; n];
    backtrack(g, &mut order, &mut used, &mut wrap, &mut found);
    Ok(found)
}

/// Updates the wrap set after appending a vertex. An edge between placed
/// positions `i < j` whose clockwise arc `i..j` is not a clique must have
/// the arc `j..i` complete, so the vertices placed from `j` on, the
/// unplaced ones and those in `0..=i` form a clique. `wrap` is the union
/// of these arcs over all such edges; every later vertex belongs to each
/// of them. Returns false when a required adjacency is missing.
fn extend_wrap(g: &Graph, order: &[usize], used: &[bool], wrap: &mut [bool]) -> bool {
    let last = order.len() - 1;
    let w = order[last];
    let mut grew = wrap.iter().any(|&x| x);
    if grew && (0..last).any(|i| wrap[order[i]] && !g.adjacent(order[i], w)) {
        return false;
    }
    let mut clique = true;
    let mut widest = None;
    for i in (0..last).rev() {
        clique = clique && order[i + 1..last].iter().all(|&x| g.adjacent(order[i], x)) && g.adjacent(order[i], w);
        if !clique && g.adjacent(order[i], w) {
            widest = Some(i);
        }
    }
    if let Some(i) = widest {
        if !g.is_clique(&order[..=i]) || !order[..=i].iter().all(|&x| g.adjacent(x, w)) {
            return false;
        }
        for &x in &order[..=i] {
            wrap[x] = true;
        }
        grew = true;
    }
    if !grew {
        return true;
    }
    wrap[w] = true;
    let members: Vec<usize> = (0..g.n()).filter(|&x| wrap[x]).collect();
    (0..g.n()).all(|u| used[u] || members.iter().all(|&x| g.adjacent(u, x)))
}

fn backtrack(
    g: &Graph,
    order: &mut Vec<usize>,
    used: &mut [bool],
    wrap: &mut Vec<bool>,
    found: &mut Option<RoundOrdering>,
) -> bool {
    let n = g.n();
    if order.len() == n {
        if !g.adjacent(order[n - 1], order[0]) {
            return false;
        }
        if let Ok(Ok(o)) = RoundOrdering::from_order(g, order.clone()) {
            *found = Some(o);
            return true;
        }
        return false;
    }
    let last = *order.last().expect("non-empty");
    let mut cands: Vec<usize> = g.neighbours(last).iter().copied().filter(|&w| !used[w]).collect();
    // Successors in a round ordering have the most similar neighbourhoods.
    let nl = g.closed_neighbourhood(last);
    cands.sort_by_key(|&w| {
        let nw = g.closed_neighbourhood(w);
        let common = nw.iter().filter(|x| nl.binary_search(x).is_ok()).count();
        (nl.len() + nw.len() - 2 * common, w)
    });
    for w in cands {
        order.push(w);
        used[w] = true;
        let saved = wrap.clone();
        if extend_wrap(g, order, used, wrap) && prefix_ok(g, order, used) && backtrack(g, order, used, wrap, found) {
            return true;
        }
        *wrap = saved;
        used[w] = false;
        order.pop();
    }
    false
}

/// Every placed vertex must see a cyclic interval of the whole circle. The
/// unplaced vertices sit between the last and first placed ones; those
/// that are neighbours must border the placed run on one side.
fn prefix_ok(g: &Graph, order: &[usize], used: &[bool]) -> bool {
    let n = g.n();
    let k = order.len();
    for &v in order {
        let mut flags: Vec<bool> = order.iter().map(|&w| w == v || g.adjacent(v, w)).collect();
        let unplaced_nbrs = g.neighbours(v).iter().filter(|&&w| !used[w]).count();
        let unplaced_others = n - k - unplaced_nbrs;
        let changes = |f: &[bool]| (0..f.len()).filter(|&i| f[i] != f[(i + 1) % f.len()]).count();
        let ok = match (unplaced_nbrs > 0, unplaced_others > 0) {
            (false, false) => changes(&flags) <= 2,
            (true, false) | (false, true) => {
                flags.push(unplaced_nbrs > 0);
                changes(&flags) <= 2
            }
            (true, true) => [&[true, false][..], &[false, true], &[true, false, true]].iter().any(|gap| {
                let mut f = flags.clone();
                f.extend_from_slice(gap);
                changes(&f) <= 2
            }),
        };
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn f1() -> Graph {
        let e = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4), (3, 5), (4, 6)];
        let e: Vec<_> = e.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        g(7, &e)
    }

    #[test]
    fn straight_examples() {
        let f = f1();
        let o = StraightOrdering::from_order(&f, (0..7).collect()).unwrap().unwrap();
        assert_eq!(o.ell, vec![0, 0, 1, 1, 2, 3, 5]);
        assert_eq!(o.gamma, vec![1, 3, 4, 5, 5, 6, 6]);
        let k4 = Graph::from_fn(4, |_, _| true);
        let o = StraightOrdering::from_order(&k4, (0..4).collect()).unwrap().unwrap();
        assert_eq!(o.ell, vec![0; 4]);
        assert_eq!(o.gamma, vec![3; 4]);
        assert!(StraightOrdering::from_order(&cycle(4), (0..4).collect()).unwrap().is_err());
        assert_eq!(StraightOrdering::from_order(&k4, vec![0, 0, 1, 2]), Err(OrderingError::NotPermutation));
    }

    #[test]
    fn find_straight_examples() {
        assert!(find_straight(&f1()).unwrap().is_some());
        assert!(find_straight(&g(4, &[(0, 1), (0, 2), (0, 3)])).unwrap().is_none());
        assert!(find_straight(&cycle(6)).unwrap().is_none());
        assert_eq!(find_straight(&Graph::empty(2)), Err(OrderingError::Disconnected));
    }

    #[test]
    fn round_examples() {
        let c6 = cycle(6);
        let o = RoundOrdering::from_order(&c6, (0..6).collect()).unwrap().unwrap();
        assert_eq!(o.ell, vec![5, 0, 1, 2, 3, 4]);
        assert_eq!(o.gamma, vec![1, 2, 3, 4, 5, 0]);
        assert!(RoundOrdering::from_order(&c6, vec![0, 2, 4, 1, 3, 5]).unwrap().is_err());
        let s = find_straight(&f1()).unwrap().unwrap();
        assert_eq!(verify_round(&f1(), &s.to_round(&f1())), Ok(None));
    }

    #[test]
    fn find_round_examples() {
        assert!(find_round(&cycle(5)).unwrap().is_some());
        assert!(find_round(&cycle(8)).unwrap().is_some());
        assert!(find_round(&g(4, &[(0, 1), (0, 2), (0, 3)])).unwrap().is_none());
    }

    #[test]
    fn orientation_examples() {
        assert!(has_local_tournament_orientation(&cycle(7)));
        assert!(!has_local_tournament_orientation(&g(4, &[(0, 1), (0, 2), (0, 3)])));
    }
}

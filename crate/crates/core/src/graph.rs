//! Simple undirected graphs on dense vertex ids, plus the structural
//! primitives used everywhere else: complement, induced subgraphs,
//! components, cutvertices and true-twin reduction.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Sorted, duplicate-free list of vertex ids.
pub type VertexSet = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("line {line}: malformed edge line {text:?}")]
    EdgeLine { line: usize, text: String },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("header announces {expected} edges but {found} edge lines were read")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
}

/// Immutable simple graph. Edge ids are positions in `edges()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

/// Parser output: the graph and any duplicate edges that were dropped.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub duplicates: Vec<(usize, usize)>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { n, adj: vec![Vec::new(); n], edges: Vec::new(), index: HashMap::new() }
    }

    /// Builds a graph from an edge list. Duplicates are dropped silently;
    /// use [`Graph::from_edges_reporting`] to see them.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::from_edges_reporting(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], also returning the dropped duplicates.
    pub fn from_edges_reporting(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
        let mut g = Graph::empty(n);
        let mut dups = Vec::new();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if g.index.contains_key(&key) {
                dups.push(key);
                continue;
            }
            g.index.insert(key, g.edges.len());
            g.edges.push(key);
            g.adj[key.0].push(key.1);
            g.adj[key.1].push(key.0);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok((g, dups))
    }

    /// Builds a graph from an adjacency predicate over all pairs u < v.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("generated edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Closed neighbourhood N[v], sorted.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.m() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Same vertex set and same edge relation, ignoring edge-id order.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    /// Edge-list text with edges sorted by (u, v).
    pub fn to_edge_list(&self) -> String {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let mut out = format!("{} {}\n", self.n, sorted.len());
        for (u, v) in sorted {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graph with edge ids renumbered in (u, v) order.
    pub fn canonical(&self) -> Graph {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        Graph::from_edges(self.n, &sorted).expect("edges already valid")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges).expect("permutation keeps edges valid")
    }
}

/// Parses the edge-list format: header `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<Parsed, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| GraphError::Header("empty input".into()))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(GraphError::Header(header.to_string()));
    }
    let n: usize = nums[0].parse().map_err(|_| GraphError::Header(header.to_string()))?;
    let m: usize = nums[1].parse().map_err(|_| GraphError::Header(header.to_string()))?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let parse = |s: &str| s.parse::<usize>().ok();
        match parts.as_slice() {
            [a, b] => match (parse(a), parse(b)) {
                (Some(u), Some(v)) => edges.push((u, v)),
                _ => return Err(GraphError::EdgeLine { line, text: text.to_string() }),
            },
            _ => return Err(GraphError::EdgeLine { line, text: text.to_string() }),
        }
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCount { expected: m, found: edges.len() });
    }
    let (graph, duplicates) = Graph::from_edges_reporting(n, &edges)?;
    for &(u, v) in &duplicates {
        log::warn!("duplicate edge {u} {v} ignored");
    }
    Ok(Parsed { graph, duplicates })
}

/// Complement graph on the same vertex ids.
pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.n(), |u, v| !g.adjacent(u, v))
}

/// Subgraph induced by `s` (in the given order). Vertex `s[i]` becomes `i`;
/// the returned map is `s` itself.
pub fn induced(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in s.iter().enumerate() {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
        }
        pos[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &u) in s.iter().enumerate() {
        for &w in g.neighbours(u) {
            let j = pos[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    Ok((Graph::from_edges(s.len(), &edges)?, s.to_vec()))
}

/// Connected components, each sorted, listed by smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    components_avoiding(g, None)
}

fn components_avoiding(g: &Graph, removed: Option<usize>) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

/// Articulation points of a connected graph (Hopcroft-Tarjan low-link).
pub fn cutvertices(g: &Graph) -> Result<VertexSet, GraphError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    // Iterative DFS: (vertex, parent, next neighbour index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbours(v)[*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}

/// Brute-force cutvertex definition, used as an oracle in tests.
pub fn cutvertices_by_removal(g: &Graph) -> VertexSet {
    let base = components(g).len();
    (0..g.n()).filter(|&v| components_avoiding(g, Some(v)).len() > base).collect()
}

/// Result of repeatedly deleting one member of a true-twin pair.
#[derive(Debug, Clone)]
pub struct TwinReduction {
    pub reduced: Graph,
    /// Original vertex -> reduced vertex.
    pub class_of: Vec<usize>,
    /// Reduced vertex -> original vertex kept for it.
    pub representative: Vec<usize>,
}

impl TwinReduction {
    /// Original vertices grouped by reduced vertex.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![Vec::new(); self.reduced.n()];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// True twins have equal closed neighbourhoods. Twins form equivalence
/// classes that deletion never merges or splits, so the process of deleting
/// the larger member of the smallest twin pair keeps exactly the minimum of
/// every class.
pub fn twin_reduce(g: &Graph) -> TwinReduction {
    let n = g.n();
    let mut key_to_rep: HashMap<VertexSet, usize> = HashMap::new();
    let mut rep_of = vec![0; n];
    for v in 0..n {
        let key = g.closed_neighbourhood(v);
        let rep = *key_to_rep.entry(key).or_insert(v);
        rep_of[v] = rep;
    }
    let representative: Vec<usize> = (0..n).filter(|&v| rep_of[v] == v).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &r) in representative.iter().enumerate() {
        new_id[r] = i;
    }
    let class_of: Vec<usize> = (0..n).map(|v| new_id[rep_of[v]]).collect();
    let (reduced, _) = induced(g, &representative).expect("representatives are in range");
    TwinReduction { reduced, class_of, representative }
}

/// Whether no two vertices share a closed neighbourhood.
pub fn is_reduced(g: &Graph) -> bool {
    let mut seen = std::collections::HashSet::new();
    (0..g.n()).all(|v| seen.insert(g.closed_neighbourhood(v)))
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

    #[test]
    fn parse_triangle() {
        let p = parse_graph("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(p.graph.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert!(p.duplicates.is_empty());
    }

    #[test]
    fn parse_claw_and_comments() {
        let p = parse_graph("# claw\n4 3\n0 1\n\n0 2\n# x\n3 0\n").unwrap();
        assert_eq!(p.graph.degree(0), 3);
        assert_eq!(p.graph.edge(2), (0, 3));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph(""), Err(GraphError::Header(_))));
        assert!(matches!(parse_graph("3\n"), Err(GraphError::Header(_))));
        assert!(matches!(
            parse_graph("3 1\n0 3\n"),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(parse_graph("3 1\n1 1\n"), Err(GraphError::SelfLoop(1))));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(GraphError::EdgeCount { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(GraphError::EdgeLine { line: 2, .. })));
    }

    #[test]
    fn parse_dedups_with_report() {
        let p = parse_graph("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(p.graph.m(), 2);
        assert_eq!(p.duplicates, vec![(0, 1)]);
        assert_eq!(p.graph.edge_id(2, 1), Some(1));
    }

    #[test]
    fn serializer_sorts() {
        let x = g(3, &[(2, 1), (0, 2)]);
        assert_eq!(x.to_edge_list(), "3 2\n0 2\n1 2\n");
        let back = parse_graph(&x.to_edge_list()).unwrap().graph;
        assert!(back.same_edges(&x));
    }

    #[test]
    fn complement_examples() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(complement(&k3).m(), 0);
        let c5c = complement(&cycle(5));
        let mut e = c5c.edges().to_vec();
        e.sort();
        assert_eq!(e, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn induced_examples() {
        let (p, map) = induced(&cycle(5), &[0, 1, 2]).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);
        let c = cycle(6);
        let all: Vec<_> = (0..6).collect();
        assert!(induced(&c, &all).unwrap().0.same_edges(&c));
        assert!(induced(&c, &[7]).is_err());
    }

    #[test]
    fn components_examples() {
        let k1k3 = g(4, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(components(&k1k3), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(components(&Graph::empty(4)).len(), 4);
    }

    #[test]
    fn cutvertex_examples() {
        assert_eq!(cutvertices(&g(4, &[(0, 1), (1, 2), (2, 3)])).unwrap(), vec![1, 2]);
        assert!(cutvertices(&cycle(6)).unwrap().is_empty());
        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(cutvertices(&bowtie).unwrap(), vec![2]);
        assert_eq!(cutvertices_by_removal(&bowtie), vec![2]);
        assert_eq!(cutvertices(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn twin_examples() {
        let k4 = Graph::from_fn(4, |_, _| true);
        let r = twin_reduce(&k4);
        assert_eq!(r.reduced.n(), 1);
        assert_eq!(r.class_of, vec![0; 4]);
        assert_eq!(r.representative, vec![0]);
        let c5 = cycle(5);
        assert_eq!(twin_reduce(&c5).reduced.n(), 5);
    }

    #[test]
    fn twin_reduce_staircase_duplicate() {
        // Staircase with reach r = (3,4,5,6,6) (1-based), vertex 5 duplicated as 6.
        let base = Graph::from_fn(6, |i, j| j < [3, 4, 5, 6, 6, 6][i]);
        let mut edges = base.edges().to_vec();
        for &w in base.neighbours(4) {
            edges.push((w, 6));
        }
        edges.push((4, 6));
        let dup = Graph::from_edges(7, &edges).unwrap();
        let r = twin_reduce(&dup);
        assert!(r.reduced.same_edges(&base));
        assert_eq!(r.class_of[6], 4);
        assert!(is_reduced(&r.reduced));
    }
}

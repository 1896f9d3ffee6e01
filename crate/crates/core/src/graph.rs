//! Finite edge-labeled directed graphs and the structural algorithms the
//! decision procedures run on: essentialization, strongly connected
//! components, cycle-length gcd and directed diameter.

use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: Symbol,
}

/// A finite graph whose edges carry symbols of an alphabet.
///
/// Parallel edges are allowed; [`LabeledGraph::dedup`] collapses edges that
/// agree on source, target and label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: Alphabet,
    names: Vec<String>,
    edges: Vec<Edge>,
}

impl LabeledGraph {
    pub fn new(alphabet: Alphabet, names: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.src >= names.len() || e.dst >= names.len() {
                return Err(Error::InvalidWord(format!(
                    "edge {}->{} references a missing vertex",
                    e.src, e.dst
                )));
            }
            if e.label as usize >= alphabet.len() {
                return Err(Error::AlphabetMismatch(format!(
                    "edge label {} outside alphabet of size {}",
                    e.label,
                    alphabet.len()
                )));
            }
        }
        Ok(LabeledGraph { alphabet, names, edges })
    }

    /// Graph with vertices named `0..n`.
    pub fn with_vertex_count(alphabet: Alphabet, n: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::new(alphabet, (0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        LabeledGraph {
            alphabet,
            names: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Outgoing edge lists indexed by vertex, each sorted by (label, target).
    pub fn out_edges(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for &e in &self.edges {
            out[e.src].push(e);
        }
        for list in &mut out {
            list.sort_by_key(|e| (e.label, e.dst));
        }
        out
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            succ[e.src].push(e.dst);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        succ
    }

    /// Collapses parallel edges with equal labels and sorts the edge list.
    pub fn dedup(&self) -> LabeledGraph {
        let set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        LabeledGraph {
            alphabet: self.alphabet.clone(),
            names: self.names.clone(),
            edges: set.into_iter().collect(),
        }
    }

    /// Subgraph induced by `keep` (sorted vertex indices), renumbered densely.
    pub fn induced(&self, keep: &[usize]) -> LabeledGraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.src] != usize::MAX && map[e.dst] != usize::MAX)
            .map(|e| Edge {
                src: map[e.src],
                dst: map[e.dst],
                label: e.label,
            })
            .collect();
        LabeledGraph {
            alphabet: self.alphabet.clone(),
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
            edges,
        }
    }

    /// Right-resolving: at most one outgoing edge per (vertex, label).
    pub fn is_right_resolving(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.dedup().edges.iter().all(|e| seen.insert((e.src, e.label)))
    }

    /// Dense adjacency matrix counting (deduplicated) edges.
    pub fn adjacency(&self) -> Vec<Vec<f64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0.0; n]; n];
        for e in &self.dedup().edges {
            m[e.src][e.dst] += 1.0;
        }
        m
    }

    /// Vertices lying on bi-infinite paths.
    pub fn essential_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut alive = vec![true; n];
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        let mut preds = vec![Vec::new(); n];
        let mut succs = vec![Vec::new(); n];
        for e in &self.edges {
            outdeg[e.src] += 1;
            indeg[e.dst] += 1;
            preds[e.dst].push(e.src);
            succs[e.src].push(e.dst);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
        for &v in &queue {
            alive[v] = false;
        }
        while let Some(v) = queue.pop_front() {
            for &u in &preds[v] {
                outdeg[u] -= 1;
                if alive[u] && outdeg[u] == 0 {
                    alive[u] = false;
                    queue.push_back(u);
                }
            }
            for &w in &succs[v] {
                indeg[w] -= 1;
                if alive[w] && indeg[w] == 0 {
                    alive[w] = false;
                    queue.push_back(w);
                }
            }
        }
        (0..n).filter(|&v| alive[v]).collect()
    }

    pub fn is_essential(&self) -> bool {
        self.essential_vertices().len() == self.vertex_count()
    }

    /// Strongly connected components in reverse topological order of the
    /// condensation (sinks first), each sorted.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        tarjan(&self.successors())
    }

    /// Index of the component containing each vertex, for `comps` as
    /// returned by [`LabeledGraph::sccs`].
    pub fn component_index(&self, comps: &[Vec<usize>]) -> Vec<usize> {
        let mut idx = vec![0; self.vertex_count()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                idx[v] = c;
            }
        }
        idx
    }

    pub fn is_strongly_connected(&self) -> bool {
        !self.is_empty() && self.sccs().len() == 1
    }

    /// Components that contain at least one edge (hence a cycle).
    pub fn nontrivial_sccs(&self) -> Vec<Vec<usize>> {
        let comps = self.sccs();
        let idx = self.component_index(&comps);
        let mut has_edge = vec![false; comps.len()];
        for e in &self.edges {
            if idx[e.src] == idx[e.dst] {
                has_edge[idx[e.src]] = true;
            }
        }
        comps
            .into_iter()
            .zip(has_edge)
            .filter_map(|(c, h)| h.then_some(c))
            .collect()
    }

    /// Gcd of cycle lengths inside the component `comp` (0 if it has no cycle).
    pub fn cycle_gcd(&self, comp: &[usize]) -> usize {
        let Some(&root) = comp.first() else { return 0 };
        let mut inside = vec![false; self.vertex_count()];
        for &v in comp {
            inside[v] = true;
        }
        let succ = self.successors();
        let mut level = vec![usize::MAX; self.vertex_count()];
        level[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &succ[v] {
                if inside[w] && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut g = 0;
        for e in &self.edges {
            if inside[e.src] && inside[e.dst] {
                let diff = (level[e.src] + 1).abs_diff(level[e.dst]);
                g = gcd(g, diff);
            }
        }
        g
    }

    /// Shortest path lengths from `src` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let succ = self.successors();
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &succ[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Directed diameter: the longest shortest path over ordered vertex
    /// pairs. `None` when some pair is not connected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.distances_from(v) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }
}

/// Removes every vertex that does not lie on a bi-infinite path.
pub fn essentialize(g: &LabeledGraph) -> LabeledGraph {
    g.induced(&g.essential_vertices())
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Iterative Tarjan. Components are emitted sinks first.
pub(crate) fn tarjan(succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = succ.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if *next < succ[v].len() {
                let w = succ[v][*next];
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Vertices reachable from `start` (inclusive) along `succ`.
pub(crate) fn reachable(succ: &[Vec<usize>], start: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; succ.len()];
    let mut stack: Vec<usize> = start.into_iter().collect();
    for &v in &stack {
        seen[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &w in &succ[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

//! Injectivity and pre-injectivity through the graph of path pairs with
//! equal images.
//!
//! Points of `X` are the bi-infinite paths of the block presentation, and a
//! pair of points with equal images is a bi-infinite path in the pair graph.
//! Two points differ iff some pair edge carries different input blocks.
//!
//! * `τ` is not injective iff some differing pair edge lies on a bi-infinite
//!   pair path: its source is reachable from a cycle and its target reaches
//!   one.
//! * `τ` is not pre-injective iff such a path exists whose edges carry equal
//!   blocks outside a finite stretch. Its left part then enters the stretch
//!   from a vertex reachable from a cycle of equal-block pair edges, and its
//!   right part leaves it towards such a cycle.
//!
//! Both criteria quantify over points, not paths, so they are exact for any
//! presentation of a sofic shift.

use std::collections::VecDeque;

use crate::alphabet::{Symbol, Word};
use crate::ca::image::CodeGraph;
use crate::ca::CellularAutomaton;
use crate::decision::{Decision, Scope};
use crate::error::Result;
use crate::graph::tarjan;
use crate::shift::Shift;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairEdge {
    pub src: usize,
    pub dst: usize,
    /// Edges of the block presentation followed by each coordinate.
    pub first: usize,
    pub second: usize,
    /// The two coordinates read different input blocks.
    pub differ: bool,
}

/// Pairs of vertices of the block presentation of the domain, joined by
/// pairs of edges with equal image letters. Vertex `(p, q)` has index
/// `p * n + q`.
#[derive(Debug, Clone)]
pub struct PairGraph {
    base: usize,
    edges: Vec<PairEdge>,
    out: Vec<Vec<usize>>,
    code: CodeGraph,
}

impl PairGraph {
    pub fn new(t: &CellularAutomaton, x: &Shift) -> Result<Self> {
        Ok(Self::from_code(CodeGraph::new(t, x)?))
    }

    pub(crate) fn from_code(code: CodeGraph) -> Self {
        let n = code.vertex_count();
        let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in code.blocks.edges.iter().enumerate() {
            by_src[e.src].push(i);
        }
        for list in &mut by_src {
            list.sort_by(|&a, &b| code.blocks.edges[a].word.cmp(&code.blocks.edges[b].word));
        }
        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); n * n];
        for p in 0..n {
            for q in 0..n {
                for &e in &by_src[p] {
                    for &f in &by_src[q] {
                        if code.images[e] != code.images[f] {
                            continue;
                        }
                        let (ee, ff) = (&code.blocks.edges[e], &code.blocks.edges[f]);
                        out[p * n + q].push(edges.len());
                        edges.push(PairEdge {
                            src: p * n + q,
                            dst: ee.dst * n + ff.dst,
                            first: e,
                            second: f,
                            differ: ee.word != ff.word,
                        });
                    }
                }
            }
        }
        PairGraph {
            base: n,
            edges,
            out,
            code,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.base * self.base
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.base, v % self.base)
    }

    pub fn is_diagonal(&self, v: usize) -> bool {
        let (p, q) = self.pair(v);
        p == q
    }

    pub fn edges(&self) -> &[PairEdge] {
        &self.edges
    }

    /// Vertices lying on a cycle of the subgraph of edges passing `keep`.
    fn cyclic(&self, keep: &dyn Fn(&PairEdge) -> bool) -> Vec<bool> {
        let succ: Vec<Vec<usize>> = self
            .out
            .iter()
            .map(|list| {
                list.iter()
                    .filter(|&&i| keep(&self.edges[i]))
                    .map(|&i| self.edges[i].dst)
                    .collect()
            })
            .collect();
        let mut on_cycle = vec![false; self.vertex_count()];
        for comp in tarjan(&succ) {
            let v = comp[0];
            if comp.len() > 1 || succ[v].contains(&v) {
                for &u in &comp {
                    on_cycle[u] = true;
                }
            }
        }
        on_cycle
    }

    /// Breadth-first search from the marked vertices along edges passing
    /// `keep`, forwards or backwards. Returns, per vertex, the edge it was
    /// first reached by (`None` for sources and unreached vertices) and
    /// whether it was reached.
    fn bfs(
        &self,
        sources: &[bool],
        keep: &dyn Fn(&PairEdge) -> bool,
        forward: bool,
    ) -> (Vec<Option<usize>>, Vec<bool>) {
        let n = self.vertex_count();
        let mut incoming: Vec<Vec<usize>> = Vec::new();
        if !forward {
            incoming = vec![Vec::new(); n];
            for (i, e) in self.edges.iter().enumerate() {
                incoming[e.dst].push(i);
            }
        }
        let mut via = vec![None; n];
        let mut seen = sources.to_vec();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| sources[v]).collect();
        while let Some(v) = queue.pop_front() {
            let list = if forward { &self.out[v] } else { &incoming[v] };
            for &i in list {
                let e = &self.edges[i];
                if !keep(e) {
                    continue;
                }
                let w = if forward { e.dst } else { e.src };
                if !seen[w] {
                    seen[w] = true;
                    via[w] = Some(i);
                    queue.push_back(w);
                }
            }
        }
        (via, seen)
    }

    /// Shortest cycle through `v` using edges passing `keep`.
    fn cycle_at(&self, v: usize, keep: &dyn Fn(&PairEdge) -> bool) -> Vec<usize> {
        let mut via: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let mut queue = VecDeque::from([v]);
        let mut seen = vec![false; self.vertex_count()];
        while let Some(u) = queue.pop_front() {
            for &i in &self.out[u] {
                let e = &self.edges[i];
                if !keep(e) {
                    continue;
                }
                if e.dst == v {
                    let mut path = vec![i];
                    let mut cur = u;
                    while cur != v {
                        let j = via[cur].expect("bfs tree");
                        path.push(j);
                        cur = self.edges[j].src;
                    }
                    path.reverse();
                    return path;
                }
                if !seen[e.dst] {
                    seen[e.dst] = true;
                    via[e.dst] = Some(i);
                    queue.push_back(e.dst);
                }
            }
        }
        panic!("vertex {v} is not on a cycle");
    }

    /// Follows `via` edges back from `v` to a source, returning the path in
    /// forward order (for forward searches).
    fn path_to(&self, via: &[Option<usize>], mut v: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some(i) = via[v] {
            path.push(i);
            v = self.edges[i].src;
        }
        path.reverse();
        path
    }

    /// Follows `via` edges forward from `v` (for backward searches).
    fn path_from(&self, via: &[Option<usize>], mut v: usize) -> Vec<usize> {
        let mut path = Vec::new();
        while let Some(i) = via[v] {
            path.push(i);
            v = self.edges[i].dst;
        }
        path
    }

    fn spell(&self, path: &[usize]) -> [Word; 2] {
        let a: Vec<Symbol> = path.iter().map(|&i| self.code.letter(self.edges[i].first)).collect();
        let b: Vec<Symbol> = path.iter().map(|&i| self.code.letter(self.edges[i].second)).collect();
        [Word::new(a), Word::new(b)]
    }

    /// Builds the eventually periodic pair of points around `middle`, whose
    /// ends are attached to cycles of `keep` edges.
    fn point_pair(&self, middle: &[usize], start: usize, end: usize, keep: &dyn Fn(&PairEdge) -> bool) -> PointPair {
        let on_cycle = self.cyclic(keep);
        // left: from a cyclic vertex to `start`
        let (via, _) = self.bfs(&on_cycle, keep, true);
        let lead = self.path_to(&via, start);
        let anchor = lead.first().map_or(start, |&i| self.edges[i].src);
        let left_cycle = self.cycle_at(anchor, keep);
        // right: from `end` to a cyclic vertex
        let (via, _) = self.bfs(&on_cycle, keep, false);
        let tail = self.path_from(&via, end);
        let anchor = tail.last().map_or(end, |&i| self.edges[i].dst);
        let right_cycle = self.cycle_at(anchor, keep);

        let mut mid = lead;
        mid.extend_from_slice(middle);
        mid.extend_from_slice(&tail);
        PointPair {
            left_period: self.spell(&left_cycle),
            middle: self.spell(&mid),
            right_period: self.spell(&right_cycle),
        }
    }
}

/// Two points `... L L M R R ...` given coordinate-wise by a left period, a
/// middle word and a right period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointPair {
    pub left_period: [Word; 2],
    pub middle: [Word; 2],
    pub right_period: [Word; 2],
}

impl PointPair {
    /// The two points restricted to `reps` left periods, the middle and
    /// `reps` right periods.
    pub fn windows(&self, reps: usize) -> [Word; 2] {
        [0, 1].map(|i| {
            let mut w = Vec::new();
            for _ in 0..reps {
                w.extend_from_slice(self.left_period[i].letters());
            }
            w.extend_from_slice(self.middle[i].letters());
            for _ in 0..reps {
                w.extend_from_slice(self.right_period[i].letters());
            }
            Word::new(w)
        })
    }

    /// Whether the points agree outside the middle.
    pub fn is_asymptotic(&self) -> bool {
        self.left_period[0] == self.left_period[1] && self.right_period[0] == self.right_period[1]
    }

    pub fn format(&self, x: &Shift) -> String {
        let f = |w: &Word| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                x.format_word(w)
            }
        };
        format!(
            "({})^inf {} ({})^inf | ({})^inf {} ({})^inf",
            f(&self.left_period[0]),
            f(&self.middle[0]),
            f(&self.right_period[0]),
            f(&self.left_period[1]),
            f(&self.middle[1]),
            f(&self.right_period[1]),
        )
    }
}

/// Injectivity of `t` on `x`; a `false` verdict carries two distinct points
/// with equal images.
pub fn is_injective(t: &CellularAutomaton, x: &Shift) -> Result<Decision<PointPair>> {
    Ok(injective_on(&PairGraph::new(t, x)?))
}

pub(crate) fn injective_on(pg: &PairGraph) -> Decision<PointPair> {
    let all = |_: &PairEdge| true;
    let on_cycle = pg.cyclic(&all);
    let (_, from_cycle) = pg.bfs(&on_cycle, &all, true);
    let (_, to_cycle) = pg.bfs(&on_cycle, &all, false);
    let hit = pg
        .edges
        .iter()
        .position(|e| e.differ && from_cycle[e.src] && to_cycle[e.dst]);
    match hit {
        None => Decision::yes(),
        Some(i) => {
            let e = pg.edges[i];
            Decision::no(Some(pg.point_pair(&[i], e.src, e.dst, &all)))
        }
    }
}

/// Pre-injectivity of `t` on `x`; a `false` verdict carries two points that
/// differ on a finite stretch and have equal images. The decision is exact
/// for every sofic shift, so its scope is point-level.
pub fn is_pre_injective(t: &CellularAutomaton, x: &Shift) -> Result<Decision<PointPair>> {
    Ok(pre_injective_on(&PairGraph::new(t, x)?))
}

pub(crate) fn pre_injective_on(pg: &PairGraph) -> Decision<PointPair> {
    let same = |e: &PairEdge| !e.differ;
    let on_cycle = pg.cyclic(&same);
    let (_, left_ok) = pg.bfs(&on_cycle, &same, true);
    let (_, right_ok) = pg.bfs(&on_cycle, &same, false);

    // shortest walk from `left_ok` to `right_ok` using a differing edge;
    // state = vertex * 2 + diverged
    let n = pg.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; 2 * n];
    let mut seen = vec![false; 2 * n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if left_ok[v] {
            seen[2 * v] = true;
            queue.push_back(2 * v);
        }
    }
    let mut found = None;
    while let Some(s) = queue.pop_front() {
        let (v, diverged) = (s / 2, s % 2 == 1);
        if diverged && right_ok[v] {
            found = Some(s);
            break;
        }
        for &i in &pg.out[v] {
            let e = &pg.edges[i];
            let t = 2 * e.dst + usize::from(diverged || e.differ);
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some((s, i));
                queue.push_back(t);
            }
        }
    }
    let Some(mut s) = found else {
        return Decision::yes().with_scope(Scope::PointLevel);
    };
    let end = s / 2;
    let mut middle = Vec::new();
    while let Some((prev, i)) = parent[s] {
        middle.push(i);
        s = prev;
    }
    middle.reverse();
    let start = s / 2;
    Decision::no(Some(pg.point_pair(&middle, start, end, &same)))
}

//! Higher-block graphs: vertices are paths of length `k - 1`, edges are
//! paths of length `k` carrying the word they spell.

use std::collections::HashMap;

use crate::alphabet::Symbol;
use crate::graph::LabeledGraph;

#[derive(Debug, Clone)]
pub(crate) struct BlockEdge {
    pub src: usize,
    pub dst: usize,
    pub word: Vec<Symbol>,
}

#[derive(Debug, Clone)]
pub(crate) struct BlockGraph {
    /// First vertex of each vertex path, in the underlying graph.
    pub anchors: Vec<usize>,
    pub edges: Vec<BlockEdge>,
}

impl BlockGraph {
    pub fn vertex_count(&self) -> usize {
        self.anchors.len()
    }
}

/// The `k`-block graph of `g` (parallel equal-label edges collapsed first).
pub(crate) fn block_graph(g: &LabeledGraph, k: usize) -> BlockGraph {
    assert!(k >= 1);
    let g = g.dedup();
    let out = g.out_edges();
    let edges_list = g.edges();
    let edge_id: HashMap<_, usize> = edges_list.iter().enumerate().map(|(i, e)| (*e, i)).collect();

    // vertex key: (start vertex, edge ids of a path of length k-1)
    let mut vindex: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut anchors = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |key: (usize, Vec<usize>), anchors: &mut Vec<usize>| {
        let next = anchors.len();
        *vindex.entry(key.clone()).or_insert_with(|| {
            anchors.push(key.0);
            next
        })
    };

    for start in 0..g.vertex_count() {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            if path.len() == k {
                let src_key = (start, path[..k - 1].to_vec());
                let dst_start = edges_list[path[0]].dst;
                let dst_key = (dst_start, path[1..].to_vec());
                let src = intern(src_key, &mut anchors);
                let dst = intern(dst_key, &mut anchors);
                let word = path.iter().map(|&e| edges_list[e].label).collect();
                edges.push(BlockEdge { src, dst, word });
                continue;
            }
            for e in out[v].iter().rev() {
                let mut p = path.clone();
                p.push(edge_id[e]);
                stack.push((e.dst, p));
            }
        }
    }
    BlockGraph { anchors, edges }
}

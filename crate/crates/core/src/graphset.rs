//! Reflection sets as colored multigraphs on `{0..n}`.
//!
//! `[(i j); k]` becomes the edge `(i, j, k)` and a diagonal reflection at `i`
//! becomes a loop. Generation questions for G(m,1,n) and G(m,m,n) reduce to
//! the shape of this graph (tree, rooted tree, unicycle) plus one color.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::wreath::{GroupParams, Reflection};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReflGraph {
    pub n: usize,
    pub m: u32,
    /// `(i, j, color)` with `i < j`, read as `[(i j); color]`.
    pub edges: Vec<(usize, usize, u32)>,
    pub loops: Vec<(usize, u32)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphTag {
    Tree,
    RootedTree,
    Unicycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub tag: GraphTag,
    /// For a unicycle: the cycle in canonical orientation.
    pub cycle_vertices: Option<Vec<usize>>,
    /// For a unicycle: the signed color sum along the cycle. For a relative
    /// unicycle whose contraction is a rooted tree, the color of that loop.
    pub delta: Option<u32>,
    /// For a rooted tree: the color of its loop.
    pub loop_color: Option<u32>,
}

impl GraphClass {
    fn plain(tag: GraphTag) -> Self {
        GraphClass { tag, cycle_vertices: None, delta: None, loop_color: None }
    }
}

/// A set partition of `{0..n}`, blocks sorted internally and by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidParams("empty block in set partition".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidParams(format!("blocks do not partition 0..{n}")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidParams(format!("blocks do not cover 0..{n}")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition { blocks: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `block_of()[x]` is the index of the block containing `x`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.ground_size()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x] = b;
            }
        }
        out
    }
}

pub fn graph_of(set: &[Reflection], params: GroupParams) -> ReflGraph {
    let mut g = ReflGraph { n: params.n(), m: params.m(), edges: Vec::new(), loops: Vec::new() };
    for r in set {
        match *r {
            Reflection::Transposition { i, j, color } => g.edges.push((i, j, color)),
            Reflection::Diagonal { i, color } => g.loops.push((i, color)),
        }
    }
    g
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

fn connected(n: usize, edges: &[(usize, usize, u32)]) -> bool {
    let mut uf = UnionFind::new(n);
    for &(i, j, _) in edges {
        uf.union(i, j);
    }
    (0..n).all(|x| uf.find(x) == uf.find(0))
}

/// The color contributed by walking edge `(i, j, k)` from `from` to the other end.
fn signed(edge: (usize, usize, u32), from: usize, m: u32) -> u32 {
    if edge.0 == from {
        edge.2 % m
    } else {
        (m - edge.2 % m) % m
    }
}

pub fn classify(g: &ReflGraph) -> GraphClass {
    if g.n == 0 || !connected(g.n, &g.edges) || g.edges.len() + 1 < g.n {
        return GraphClass::plain(GraphTag::Other);
    }
    let tree_edges = g.n - 1;
    match (g.edges.len() - tree_edges, g.loops.len()) {
        (0, 0) => GraphClass::plain(GraphTag::Tree),
        (0, 1) => GraphClass { loop_color: Some(g.loops[0].1), ..GraphClass::plain(GraphTag::RootedTree) },
        (1, 0) => {
            let (cycle, delta) = unique_cycle(g);
            GraphClass {
                tag: GraphTag::Unicycle,
                cycle_vertices: Some(cycle),
                delta: Some(delta),
                loop_color: None,
            }
        }
        _ => GraphClass::plain(GraphTag::Other),
    }
}

/// The unique cycle of a connected graph with `n` edges, walked from its
/// smallest vertex toward the smaller of that vertex's cycle neighbors.
fn unique_cycle(g: &ReflGraph) -> (Vec<usize>, u32) {
    let mut alive = vec![true; g.edges.len()];
    let mut degree = vec![0usize; g.n];
    for &(i, j, _) in &g.edges {
        degree[i] += 1;
        degree[j] += 1;
    }
    // Strip leaves until only the cycle is left.
    let mut leaves: Vec<usize> = (0..g.n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        if degree[v] != 1 {
            continue;
        }
        let e = (0..g.edges.len())
            .find(|&e| alive[e] && (g.edges[e].0 == v || g.edges[e].1 == v))
            .expect("a leaf has an edge");
        alive[e] = false;
        let (a, b, _) = g.edges[e];
        degree[a] -= 1;
        degree[b] -= 1;
        let w = if a == v { b } else { a };
        if degree[w] == 1 {
            leaves.push(w);
        }
    }
    let mut cyc_edges: Vec<(usize, usize, u32)> =
        (0..g.edges.len()).filter(|&e| alive[e]).map(|e| g.edges[e]).collect();
    cyc_edges.sort_unstable();
    let start = cyc_edges.iter().map(|e| e.0).min().expect("nonempty cycle");
    if cyc_edges.len() == 2 {
        // Two parallel edges: out along the smaller one, back along the other.
        let (a, b) = (cyc_edges[0], cyc_edges[1]);
        let other = a.1;
        let delta = (signed(a, start, g.m) + signed(b, other, g.m)) % g.m;
        return (vec![start, other], delta);
    }
    let neighbor = |e: &(usize, usize, u32), v: usize| if e.0 == v { e.1 } else { e.0 };
    let first = cyc_edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.0 == start || e.1 == start)
        .min_by_key(|(_, e)| neighbor(e, start))
        .map(|(k, _)| k)
        .unwrap();
    let mut used = vec![false; cyc_edges.len()];
    let mut vertices = vec![start];
    let mut delta = 0u32;
    let mut cur = start;
    let mut e = first;
    loop {
        used[e] = true;
        delta = (delta + signed(cyc_edges[e], cur, g.m)) % g.m;
        cur = neighbor(&cyc_edges[e], cur);
        if cur == start {
            break;
        }
        vertices.push(cur);
        e = (0..cyc_edges.len())
            .find(|&f| !used[f] && (cyc_edges[f].0 == cur || cyc_edges[f].1 == cur))
            .expect("cycle continues");
    }
    (vertices, delta)
}

pub fn delta(g: &ReflGraph) -> Result<u32> {
    let class = classify(g);
    match class.tag {
        GraphTag::Unicycle => Ok(class.delta.expect("unicycle carries delta")),
        _ => Err(Error::NotUnicycle),
    }
}

/// Quotient multigraph: each block becomes one vertex, edges inside a block
/// become loops. An edge whose endpoints' blocks come in decreasing order is
/// re-read through `[(i j); k] = [(j i); −k]`, so the reflection it stands
/// for is unchanged.
pub fn contract(g: &ReflGraph, partition: &SetPartition) -> ReflGraph {
    let block = partition.block_of();
    let m = g.m;
    let mut out = ReflGraph { n: partition.blocks().len(), m, edges: Vec::new(), loops: Vec::new() };
    for &(i, j, k) in &g.edges {
        let (a, b) = (block[i], block[j]);
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => out.loops.push((a, k)),
            std::cmp::Ordering::Less => out.edges.push((a, b, k)),
            std::cmp::Ordering::Greater => out.edges.push((b, a, (m - k % m) % m)),
        }
    }
    for &(i, c) in &g.loops {
        out.loops.push((block[i], c));
    }
    out
}

/// Shape of `g` relative to a partition of its vertices.
///
/// * Tree: no loops, no edge inside a block, and the contraction is a tree.
/// * RootedTree: as a tree, plus exactly one diagonal loop.
/// * Unicycle: no loops and the contraction is either a unicycle (`delta`
///   is its δ) or a rooted tree coming from a single edge inside a block
///   (`delta` is that edge's color).
pub fn classify_relative(g: &ReflGraph, partition: &SetPartition) -> GraphClass {
    let block = partition.block_of();
    let inside = g.edges.iter().filter(|&&(i, j, _)| block[i] == block[j]).count();
    let q = contract(g, partition);
    let k = q.n;
    let cross = q.edges.len();
    let linked = k > 0 && connected(k, &q.edges);
    if !linked {
        return GraphClass::plain(GraphTag::Other);
    }
    match (g.loops.len(), inside) {
        (0, 0) if cross + 1 == k => GraphClass::plain(GraphTag::Tree),
        (1, 0) if cross + 1 == k => {
            GraphClass { loop_color: Some(g.loops[0].1), ..GraphClass::plain(GraphTag::RootedTree) }
        }
        (0, 1) if cross + 1 == k => {
            let (b, c) = q.loops[0];
            GraphClass { tag: GraphTag::Unicycle, cycle_vertices: Some(vec![b]), delta: Some(c), loop_color: None }
        }
        (0, 0) if cross == k => classify(&q),
        _ => GraphClass::plain(GraphTag::Other),
    }
}

/// Whether `set` is a minimal generating set of reflections for the whole group.
pub fn is_good_generating_set(set: &[Reflection], params: GroupParams) -> Result<bool> {
    if !params.is_well_generated() {
        return Err(Error::UnsupportedP(params));
    }
    for r in set {
        r.validate(params)?;
    }
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != params.rank() || set.len() != distinct.len() {
        return Err(Error::Cardinality { expected: params.rank(), got: set.len() });
    }
    if params.rank() == 0 {
        return Ok(true);
    }
    let m = params.m();
    let class = classify(&graph_of(set, params));
    Ok(match (m, params.p()) {
        (1, _) => class.tag == GraphTag::Tree,
        (_, 1) => class.tag == GraphTag::RootedTree && gcd(class.loop_color.unwrap() as u64, m as u64) == 1,
        _ => class.tag == GraphTag::Unicycle && gcd(class.delta.unwrap() as u64, m as u64) == 1,
    })
}

/// Graphviz rendering, 1-based vertex labels, colors as edge labels.
pub fn to_dot(g: &ReflGraph) -> String {
    let mut s = String::from("graph reflections {\n");
    for v in 0..g.n {
        let _ = writeln!(s, "  {};", v + 1);
    }
    for &(i, j, k) in &g.edges {
        let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", i + 1, j + 1, k);
    }
    for &(i, c) in &g.loops {
        let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", i + 1, i + 1, c);
    }
    s.push_str("}\n");
    s
}

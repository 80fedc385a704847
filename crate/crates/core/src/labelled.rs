//! Labelled trees and labelled graphs on `{0, …, n−1}`, rooted at 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::{fold_range, Config};

/// Edge sets are `u64` masks over the `n(n−1)/2` vertex pairs.
pub const MAX_GRAPH_VERTICES: usize = 11;

/// A tree on `{0, …, n−1}` stored as the parent of every non-root vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledTree {
    parents: Vec<usize>,
}

impl LabelledTree {
    /// The one-vertex tree.
    pub fn singleton() -> Self {
        LabelledTree { parents: Vec::new() }
    }

    /// `parents[k]` is the parent of vertex `k + 1`.
    pub fn from_parents(parents: Vec<usize>) -> Result<Self> {
        let n = parents.len() + 1;
        let bad = |reason: String| Error::Malformed { what: "labelled tree", reason };
        if let Some(&p) = parents.iter().find(|&&p| p >= n) {
            return Err(bad(format!("parent {p} is not a vertex")));
        }
        let tree = LabelledTree { parents };
        for v in 1..n {
            // a walk longer than n steps must cycle
            let mut u = v;
            let mut steps = 0;
            while u != 0 {
                u = tree.parent(u).expect("non-root");
                steps += 1;
                if steps > n {
                    return Err(bad(format!("vertex {v} does not reach the root")));
                }
            }
        }
        Ok(tree)
    }

    /// Roots an undirected tree given by its edges at vertex 0.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let bad = |reason: &str| Error::Malformed {
            what: "labelled tree",
            reason: reason.to_string(),
        };
        if n == 0 || edges.len() + 1 != n {
            return Err(bad("a tree on n vertices has n - 1 edges"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(bad("edge endpoint out of range"));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parents = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parents[w] = v;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::NotConnected);
        }
        Ok(LabelledTree {
            parents: parents[1..].to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        v.checked_sub(1).map(|k| self.parents[k])
    }

    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Children of every vertex, in increasing label order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.vertex_count()];
        for (k, &p) in self.parents.iter().enumerate() {
            children[p].push(k + 1);
        }
        children
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parents
            .iter()
            .enumerate()
            .map(|(k, &p)| (p.min(k + 1), p.max(k + 1)))
    }

    pub fn to_graph(&self) -> LabelledGraph {
        let mut g = LabelledGraph::empty(self.vertex_count());
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        g
    }

    /// `d̃`: 0 at the root, `d̃_j = d̃_i + k − 1` for the `k`-th smallest child
    /// `j` of `i`.
    pub fn d_tilde(&self) -> Vec<u32> {
        let children = self.children();
        let mut d = vec![0u32; self.vertex_count()];
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for (k, &c) in children[v].iter().enumerate() {
                d[c] = d[v] + k as u32;
                stack.push(c);
            }
        }
        d
    }

    /// Pairs `0 < i < j` with `j` a descendant of `i`.
    pub fn coinv(&self) -> u32 {
        (1..self.vertex_count())
            .map(|j| {
                let mut count = 0;
                let mut u = self.parent(j).expect("non-root");
                while u != 0 {
                    if u < j {
                        count += 1;
                    }
                    u = self.parent(u).expect("non-root");
                }
                count
            })
            .sum()
    }

    /// `𝓔_T(i)`: the pairs `{i, j}` where `j` is a smaller sibling of some
    /// vertex on the path from `i` up to the root.
    pub fn edge_set_e(&self, i: usize) -> Vec<(usize, usize)> {
        let children = self.children();
        let mut out = Vec::new();
        let mut k = i;
        while let Some(p) = self.parent(k) {
            for &j in children[p].iter().take_while(|&&j| j < k) {
                out.push((i.min(j), i.max(j)));
            }
            k = p;
        }
        out.sort_unstable();
        out
    }

    /// `𝓔_T`, the union of [`edge_set_e`](Self::edge_set_e) over all vertices,
    /// as an edge mask.
    pub fn edge_set_e_all(&self) -> LabelledGraph {
        let mut g = LabelledGraph::empty(self.vertex_count());
        for i in 0..self.vertex_count() {
            for (a, b) in self.edge_set_e(i) {
                g.add_edge(a, b);
            }
        }
        g
    }
}

impl fmt::Display for LabelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parents.iter().map(ToString::to_string).collect();
        f.write_str(&body.join(","))
    }
}

impl FromStr for LabelledTree {
    type Err = Error;

    /// Parent array `p_1,…,p_{n−1}`; the empty string is the one-vertex tree.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LabelledTree::singleton());
        }
        let parents = s
            .split(',')
            .map(|x| {
                x.trim().parse::<usize>().map_err(|e| Error::Malformed {
                    what: "labelled tree",
                    reason: format!("{x:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LabelledTree::from_parents(parents)
    }
}

/// Decodes a Prüfer sequence of length `n − 2` over `{0, …, n−1}`.
fn prufer_decode(n: usize, code: &[usize]) -> LabelledTree {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    LabelledTree::from_edges(n, &edges).expect("Prüfer codes decode to trees")
}

/// Every labelled tree on `n ≥ 1` vertices, in Prüfer-code order.
pub fn enumerate_labelled_trees(n: usize) -> Vec<LabelledTree> {
    match n {
        0 => Vec::new(),
        1 => vec![LabelledTree::singleton()],
        _ => {
            let len = n - 2;
            let total = n.pow(len as u32);
            (0..total)
                .map(|mut x| {
                    let mut code = vec![0; len];
                    for slot in code.iter_mut().rev() {
                        *slot = x % n;
                        x /= n;
                    }
                    prufer_decode(n, &code)
                })
                .collect()
        }
    }
}

/// A simple graph on `{0, …, n−1}`.
///
/// Bit `k` of the mask is the `k`-th pair in lexicographic order
/// `01, 02, …, 0(n−1), 12, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledGraph {
    n: usize,
    mask: u64,
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl LabelledGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GRAPH_VERTICES, "at most {MAX_GRAPH_VERTICES} vertices");
        LabelledGraph { n, mask: 0 }
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= MAX_GRAPH_VERTICES, "at most {MAX_GRAPH_VERTICES} vertices");
        debug_assert!(pair_count(n) == 64 || mask >> pair_count(n) == 0);
        LabelledGraph { n, mask }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::UnsupportedSize {
                what: "graph vertices",
                requested: n,
                cap: MAX_GRAPH_VERTICES,
            });
        }
        let mut g = LabelledGraph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Malformed {
                    what: "graph",
                    reason: format!("bad edge {a}-{b}"),
                });
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    fn bit(&self, a: usize, b: usize) -> u64 {
        let (i, j) = (a.min(b), a.max(b));
        let index = i * self.n - i * (i + 1) / 2 + (j - i - 1);
        1 << index
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.mask |= self.bit(a, b);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.mask & self.bit(a, b) != 0
    }

    pub fn edge_count(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    /// Neighbour sets as bitmasks over vertices.
    pub fn adjacency(&self) -> Vec<u16> {
        let mut adj = vec![0u16; self.n];
        for (i, j) in self.edges() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    pub fn union(&self, other: &LabelledGraph) -> LabelledGraph {
        assert_eq!(self.n, other.n);
        LabelledGraph::from_mask(self.n, self.mask | other.mask)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut reached: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached.count_ones() as usize == self.n
    }
}

impl fmt::Display for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "{}; {}", self.n, body.join(","))
    }
}

impl FromStr for LabelledGraph {
    type Err = Error;

    /// `n; i-j,i-j,…`
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Malformed { what: "graph", reason };
        let (n, rest) = s.split_once(';').ok_or_else(|| bad("expected `n; i-j,...`".into()))?;
        let n: usize = n.trim().parse().map_err(|e| bad(format!("vertex count: {e}")))?;
        let mut edges = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (a, b) = item.split_once('-').ok_or_else(|| bad(format!("edge {item:?}")))?;
            let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| bad(format!("edge {item:?}: {e}")));
            edges.push((parse(a)?, parse(b)?));
        }
        LabelledGraph::from_edges(n, &edges)
    }
}

/// The spanning tree `𝒮(G)`.
///
/// Vertex 0 is seen first and its neighbours are visited in increasing
/// order. Then, while some vertex is unseen, the most recently visited
/// unseen vertex becomes seen and visits its unvisited neighbours in
/// increasing order; each visit keeps the edge it came along.
pub fn spanning_tree_s(g: &LabelledGraph) -> Result<LabelledTree> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let adj = g.adjacency();
    let mut parents = vec![0usize; n];
    let mut visited: u16 = 1;
    let mut seen = vec![false; n];
    let mut order: Vec<usize> = vec![0];
    while let Some(&v) = order.iter().rev().find(|&&u| !seen[u]) {
        seen[v] = true;
        let mut fresh = adj[v] & !visited;
        while fresh != 0 {
            let w = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            visited |= 1 << w;
            parents[w] = v;
            order.push(w);
        }
    }
    debug_assert!(seen.iter().all(|&s| s));
    LabelledTree::from_parents(parents[1..].to_vec())
}

/// Fails with [`Error::UnsupportedSize`] above the vertex cap for graphs
/// and labelled trees.
pub fn check_graph_size(n: usize, config: &Config) -> Result<()> {
    let cap = config.limits.max_graph_vertices.min(MAX_GRAPH_VERTICES);
    if n > cap {
        return Err(Error::UnsupportedSize {
            what: "graph vertices",
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Folds over every connected graph on `n` vertices (brute force over all
/// edge masks).
pub fn fold_connected_graphs<T, Id, F, R>(
    n: usize,
    config: &Config,
    identity: Id,
    fold: F,
    reduce: R,
) -> Result<T>
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(T, &LabelledGraph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    check_graph_size(n, config)?;
    if n == 0 {
        return Ok(identity());
    }
    let end = 1u64 << pair_count(n);
    Ok(fold_range(
        end,
        config.strategy,
        identity,
        |acc, mask| {
            let g = LabelledGraph::from_mask(n, mask);
            if g.is_connected() {
                fold(acc, &g)
            } else {
                acc
            }
        },
        reduce,
    ))
}

/// Every connected graph on `n` vertices, in increasing mask order.
pub fn enumerate_connected_graphs(n: usize, config: &Config) -> Result<Vec<LabelledGraph>> {
    let mut graphs = fold_connected_graphs(
        n,
        config,
        Vec::new,
        |mut acc, g| {
            acc.push(*g);
            acc
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    graphs.sort_unstable_by_key(LabelledGraph::mask);
    Ok(graphs)
}

//! Simple undirected graphs, the graph families used throughout the crate,
//! and the cartesian product.

mod spec;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

pub use spec::{parse_graph_spec, GraphSpec};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// Finite simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if g.adj[u].contains(&v) {
                return Err(Error::invalid(format!("repeated edge {u}-{v}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::invalid("relabeling is not a permutation"));
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(n, &edges)
    }

    /// Vertex-disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|ns| ns.iter().map(|v| v + off).collect()),
        );
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Checks simplicity, symmetry and sorted neighbor lists.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns
                    .iter()
                    .all(|&v| v != u && v < self.adj.len() && self.adj[v].binary_search(&u).is_ok())
        })
    }
}

/// Path `P_n`: edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_n` for `n >= 3`: the path plus `{0, n-1}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Complete bipartite `K_{n,m}` with parts `0..n` and `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph> {
    if n == 0 || m == 0 {
        return Err(Error::invalid(
            "both parts of a complete bipartite graph must be nonempty",
        ));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (n..n + m).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n + m, &edges)
}

/// Star `K_{1,m}` with center 0.
pub fn star(m: usize) -> Result<Graph> {
    complete_bipartite(1, m)
}

/// Perfect binary tree of height `h` in heap order: root 0, children of `i`
/// are `2i+1` and `2i+2`.
pub fn perfect_binary_tree(h: u32) -> Result<Graph> {
    if h >= 30 {
        return Err(Error::invalid(format!("height {h} is too large")));
    }
    let n = (1usize << (h + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Grid `P_m x P_n`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    Ok(cartesian_product(&path(m)?, &path(n)?))
}

/// Cartesian product. Vertex `(a, b)` gets index `a * |V(h)| + b`, so in
/// `G x P_n` the slice over path vertex `t` is `{ a * n + t }`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let hn = h.vertex_count();
    let idx = |a: usize, b: usize| a * hn + b;
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + hn * g.edge_count());
    for a in 0..g.vertex_count() {
        for (b1, b2) in h.edges() {
            edges.push((idx(a, b1), idx(a, b2)));
        }
    }
    for (a1, a2) in g.edges() {
        for b in 0..hn {
            edges.push((idx(a1, b), idx(a2, b)));
        }
    }
    Graph::from_edges(g.vertex_count() * hn, &edges).expect("product of simple graphs is simple")
}

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (u, v) in g.edges() {
        uf.union(u, v);
    }
    let mut slot = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = uf.find(v);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(v);
    }
    out
}

/// SplitMix64 generator; the reference sequence for reproducible test
/// inputs.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// `next_u64() % bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Random labeled tree on `n` vertices.
///
/// The Prüfer sequence has `n - 2` entries, entry `i` being
/// `SplitMix64(seed).next_u64() % n` drawn in order; it is decoded by always
/// removing the smallest current leaf.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("tree needs at least one vertex"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    Graph::from_edges(n, &prufer_decode(n, &seq))
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves
            .pop()
            .expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_examples() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(2).unwrap().edges(), vec![(0, 1)]);
        let p5 = path(5).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert!((0..5).all(|v| p5.degree(v) <= 2));
        assert!(p5.is_connected());
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle(2).is_err());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete(1).unwrap().edge_count(), 0);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        let k5 = complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v) == 4));
    }

    #[test]
    fn bipartite_examples() {
        let s = complete_bipartite(1, 3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert!((1..4).all(|v| s.degree(v) == 1));
        assert_eq!(star(3).unwrap(), s);
        let k22 = complete_bipartite(2, 2).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert!((0..4).all(|v| k22.degree(v) == 2));
        assert!(k22.is_connected());
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn binary_tree_examples() {
        assert_eq!(perfect_binary_tree(0).unwrap().vertex_count(), 1);
        let b1 = perfect_binary_tree(1).unwrap();
        assert_eq!(b1.edges(), vec![(0, 1), (0, 2)]);
        let b2 = perfect_binary_tree(2).unwrap();
        assert_eq!(b2.vertex_count(), 7);
        assert_eq!((0..7).filter(|&v| b2.degree(v) == 1).count(), 4);
        assert!(b2.is_tree());
    }

    #[test]
    fn product_examples() {
        let sq = cartesian_product(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!(sq.edge_count(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
        let prism = cartesian_product(&complete(3).unwrap(), &path(2).unwrap());
        assert_eq!(prism.edge_count(), 9);
        let g = cycle(5).unwrap();
        assert_eq!(cartesian_product(&path(1).unwrap(), &g), g);
        assert_eq!(cartesian_product(&g, &path(1).unwrap()), g);
    }

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&path(5).unwrap()).len(), 1);
        assert_eq!(connected_components(&Graph::empty(3)).len(), 3);
        let k3 = complete(3).unwrap();
        let two = k3.disjoint_union(&k3);
        assert_eq!(
            connected_components(&two),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
    }

    #[test]
    fn random_tree_small_and_reproducible() {
        assert_eq!(random_tree(1, 9).unwrap().vertex_count(), 1);
        assert_eq!(random_tree(2, 9).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(random_tree(12, 77).unwrap(), random_tree(12, 77).unwrap());
    }

    #[test]
    fn splitmix_reference_values() {
        // Reference outputs of SplitMix64 seeded with 0.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn prufer_known_sequence() {
        // Sequence (3, 3, 3) on 5 vertices is the star centered at 3 plus
        // a pendant path: leaves 0, 1, 2 attach to 3, then {3, 4}.
        let mut e = prufer_decode(5, &[3, 3, 3]);
        e.sort_unstable();
        assert_eq!(e, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
    }
}

//! `Cay(S_n, S)` for a transposition set `S`, indexed by permutation rank.
//!
//! Vertex `h` is adjacent to `s·h` for every `s ∈ S` (apply `s`, then `h`).
//! Right multiplication `h ↦ h·g` then preserves edges by associativity,
//! which is how `R(S_n)` acts.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Girth, SimpleGraph};
use crate::perm::{factorial, Parity, Permutation, Transposition};
use crate::tgraph::{build_tgraph, TranspositionSet};

/// Default cap on the degree `n` of the symmetric group.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    n: usize,
    set: TranspositionSet,
    graph: SimpleGraph,
}

/// A cycle as a vertex sequence, stored in canonical form: it starts at its
/// least vertex and runs in the direction whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePath {
    vertices: Vec<usize>,
}

impl CyclePath {
    pub fn new(vertices: Vec<usize>) -> Self {
        let len = vertices.len();
        if len < 3 {
            return CyclePath { vertices };
        }
        let start = (0..len).min_by_key(|&i| vertices[i]).expect("non-empty");
        let forward: Vec<usize> = (0..len).map(|i| vertices[(start + i) % len]).collect();
        let backward: Vec<usize> = (0..len).map(|i| vertices[(start + len - i) % len]).collect();
        CyclePath {
            vertices: forward.min(backward),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// The cycle written with the permutations at each vertex.
    pub fn render(&self, cayley: &CayleyGraph) -> String {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|&v| cayley.vertex(v).to_string())
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for CyclePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}

/// Builds `Cay(S_n, S)`; `T(S)` must be connected and `n ≤ max_n`.
pub fn build_cayley(s: &TranspositionSet, max_n: usize) -> Result<CayleyGraph> {
    let n = s.n();
    if n > max_n {
        return Err(Error::DegreeCap { n, max: max_n });
    }
    if !build_tgraph(s).is_connected() {
        return Err(Error::NotGenerating);
    }
    let total = factorial(n).ok_or(Error::DegreeCap { n, max: max_n })?;
    let generators = s.permutations();
    let adjacency = (0..total)
        .map(|r| {
            let h = Permutation::unrank(r, n).expect("rank in range");
            generators.iter().map(|g| (g * &h).rank()).collect()
        })
        .collect();
    Ok(CayleyGraph {
        n,
        set: s.clone(),
        graph: SimpleGraph::from_adjacency_unchecked(adjacency),
    })
}

impl CayleyGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generating_set(&self) -> &TranspositionSet {
        &self.set
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Index of the identity, always 0 under lexicographic ranking.
    pub fn e_index(&self) -> usize {
        0
    }

    pub fn vertex(&self, index: usize) -> Permutation {
        Permutation::unrank(index, self.n).expect("vertex index in range")
    }

    pub fn index_of(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: p.degree(),
            });
        }
        Ok(p.rank())
    }

    pub fn index_of_transposition(&self, t: Transposition) -> Result<usize> {
        self.index_of(&t.to_permutation(self.n)?)
    }

    pub fn bfs_distances(&self, source: usize) -> Result<Vec<usize>> {
        if source >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                vertices: self.vertex_count(),
            });
        }
        Ok(self
            .graph
            .bfs_distances(source)
            .into_iter()
            .map(|d| d.expect("Cayley graphs of generating sets are connected"))
            .collect())
    }

    /// Even and odd permutations, checked to be a proper 2-coloring.
    pub fn bipartition_by_parity(&self) -> Result<(Vec<usize>, Vec<usize>)> {
        let parity: Vec<Parity> = (0..self.vertex_count()).map(|v| self.vertex(v).parity()).collect();
        if let Some((a, b)) = self.graph.edges().find(|&(a, b)| parity[a] == parity[b]) {
            return Err(Error::Consistency(format!(
                "edge {} - {} joins permutations of equal parity",
                self.vertex(a),
                self.vertex(b)
            )));
        }
        Ok((0..self.vertex_count()).partition(|&v| parity[v] == Parity::Even))
    }

    /// Girth of the Cayley graph. One breadth-first search from `e` is
    /// enough because the graph is vertex-transitive.
    pub fn girth(&self) -> Girth {
        self.graph.shortest_cycle_from(self.e_index())
    }

    fn check_pair(&self, t: Transposition, k: Transposition) -> Result<()> {
        for x in [t, k] {
            if !self.set.contains(x) {
                return Err(Error::NotInGeneratingSet(x.to_string()));
            }
        }
        if t == k {
            return Err(Error::HypothesisViolated(format!("{t} and {k} must be distinct")));
        }
        Ok(())
    }

    /// All distinct cycles of length `len` through `e`, as canonical paths.
    pub fn cycles_through_e(&self, len: usize) -> Vec<CyclePath> {
        let e = self.e_index();
        let mut found = BTreeSet::new();
        if len < 3 {
            return Vec::new();
        }
        let mut path = vec![e];
        let mut on_path = vec![false; self.vertex_count()];
        on_path[e] = true;
        self.extend_paths(len, &mut path, &mut on_path, &mut found);
        found.into_iter().collect()
    }

    fn extend_paths(
        &self,
        len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut BTreeSet<CyclePath>,
    ) {
        let last = *path.last().expect("path starts at e");
        if path.len() == len {
            // each cycle is walked in both directions; keep one
            if self.graph.has_edge(last, path[0]) && path[1] < last {
                found.insert(CyclePath::new(path.clone()));
            }
            return;
        }
        for &w in self.graph.neighbors(last) {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_paths(len, path, on_path, found);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// Distinct 4-cycles containing `e`, `t` and `k`.
    pub fn four_cycles_through(&self, t: Transposition, k: Transposition) -> Result<Vec<CyclePath>> {
        self.check_pair(t, k)?;
        let (tv, kv) = (self.index_of_transposition(t)?, self.index_of_transposition(k)?);
        Ok(self
            .cycles_through_e(4)
            .into_iter()
            .filter(|c| c.contains(tv) && c.contains(kv))
            .collect())
    }

    /// Distinct 6-cycles containing `e`, `t`, `k` and a vertex at distance 3
    /// from `e`. Requires `tk ≠ kt`.
    pub fn six_cycles_through_with_distance3(
        &self,
        t: Transposition,
        k: Transposition,
    ) -> Result<Vec<CyclePath>> {
        self.check_pair(t, k)?;
        if t.commutes_with(k) {
            return Err(Error::HypothesisViolated(format!("{t} and {k} commute")));
        }
        let (tv, kv) = (self.index_of_transposition(t)?, self.index_of_transposition(k)?);
        let dist = self.bfs_distances(self.e_index())?;
        Ok(self
            .cycles_through_e(6)
            .into_iter()
            .filter(|c| c.contains(tv) && c.contains(kv) && c.vertices().iter().any(|&v| dist[v] == 3))
            .collect())
    }

    /// Vertices at distance 3 from `e` lying on any of `cycles`.
    pub fn distance3_vertices(&self, cycles: &[CyclePath]) -> Result<BTreeSet<usize>> {
        let dist = self.bfs_distances(self.e_index())?;
        Ok(cycles
            .iter()
            .flat_map(|c| c.vertices().iter().copied())
            .filter(|&v| dist[v] == 3)
            .collect())
    }

    /// The 6-cycle `(e, t, kt, tkt, tk, k)`.
    pub fn standard_six_cycle(&self, t: Transposition, k: Transposition) -> Result<CyclePath> {
        let tp = t.to_permutation(self.n)?;
        let kp = k.to_permutation(self.n)?;
        let kt = &kp * &tp;
        let tk = &tp * &kp;
        let tkt = &tk * &tp;
        let vertices = [Permutation::identity(self.n), tp, kt, tkt, tk, kp]
            .iter()
            .map(Permutation::rank)
            .collect();
        Ok(CyclePath::new(vertices))
    }
}

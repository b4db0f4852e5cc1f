//! Automorphism groups of vertex-colored graphs.
//!
//! The search individualizes a vertex of the first smallest non-singleton
//! cell, refines to an equitable partition, and repeats until the partition
//! is discrete. Generators are collected bottom-up along the first path: at
//! each level, every vertex of the target cell that is not yet in the orbit
//! of the first choice gets a subtree search for a leaf equivalent to the
//! first leaf. The generators found this way generate the full group.

mod partition;

pub use partition::{OrderedPartition, Trace};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::perm::Permutation;
use crate::permgroup::GeneratedGroup;

/// Default cap on the number of vertices the search accepts.
pub const DEFAULT_MAX_VERTICES: usize = 1000;

/// A graph whose automorphisms must preserve vertex colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: SimpleGraph,
    colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: SimpleGraph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::DegreeMismatch {
                left: graph.vertex_count(),
                right: colors.len(),
            });
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn uniform(graph: SimpleGraph) -> Self {
        let colors = vec![0; graph.vertex_count()];
        ColoredGraph { graph, colors }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        self.graph.is_automorphism(p)
            && (0..self.colors.len()).all(|v| self.colors[v] == self.colors[p.apply(v)])
    }

    /// Recolors by `(old color, key(v))`, renumbering densely in sorted order.
    fn refined_by<K: Ord + Clone>(&self, key: impl Fn(usize) -> K) -> ColoredGraph {
        let keys: Vec<(usize, K)> = (0..self.colors.len()).map(|v| (self.colors[v], key(v))).collect();
        let mut dense = BTreeMap::new();
        for k in &keys {
            dense.entry(k.clone()).or_insert(0);
        }
        for (i, value) in dense.values_mut().enumerate() {
            *value = i;
        }
        ColoredGraph {
            graph: self.graph.clone(),
            colors: keys.iter().map(|k| dense[k]).collect(),
        }
    }
}

/// Coarsest equitable refinement of `p`.
pub fn refine(g: &ColoredGraph, p: &OrderedPartition) -> OrderedPartition {
    let mut q = p.clone();
    q.refine(&g.graph);
    q
}

/// Full color-preserving automorphism group.
pub fn automorphism_group(g: &ColoredGraph, max_vertices: usize) -> Result<GeneratedGroup> {
    let n = g.graph.vertex_count();
    if n > max_vertices {
        return Err(Error::VertexCap {
            vertices: n,
            max: max_vertices,
        });
    }
    let generators = Search::new(g).generators()?;
    GeneratedGroup::new(n, generators)
}

/// Automorphisms fixing `v`.
///
/// `v` gets its own color and every other vertex is additionally colored by
/// its distance from `v`, which any automorphism fixing `v` preserves.
pub fn vertex_stabilizer(g: &ColoredGraph, v: usize, max_vertices: usize) -> Result<GeneratedGroup> {
    check_vertex(g, v)?;
    let dist = g.graph.bfs_distances(v);
    let seeded = g.refined_by(|u| (u != v, dist[u].unwrap_or(usize::MAX)));
    automorphism_group(&seeded, max_vertices)
}

/// Automorphisms fixing `v` and each of its neighbours individually.
pub fn pointwise_neighborhood_stabilizer(
    g: &ColoredGraph,
    v: usize,
    max_vertices: usize,
) -> Result<GeneratedGroup> {
    check_vertex(g, v)?;
    let dist = g.graph.bfs_distances(v);
    let neighbors = g.graph.neighbors(v);
    let seeded = g.refined_by(|u| {
        let fixed = if u == v {
            0
        } else {
            neighbors.binary_search(&u).map_or(usize::MAX, |i| i + 1)
        };
        (fixed, dist[u].unwrap_or(usize::MAX))
    });
    automorphism_group(&seeded, max_vertices)
}

fn check_vertex(g: &ColoredGraph, v: usize) -> Result<()> {
    if v >= g.graph.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertices: g.graph.vertex_count(),
        });
    }
    Ok(())
}

struct PathNode {
    partition: OrderedPartition,
    trace: Trace,
    target: Option<(usize, usize)>,
}

struct Search<'a> {
    graph: &'a ColoredGraph,
    path: Vec<PathNode>,
    /// Vertex individualized at each non-leaf level of the first path.
    chosen: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a ColoredGraph) -> Self {
        let mut partition = OrderedPartition::from_colors(&graph.colors);
        let trace = partition.refine(&graph.graph);
        let mut path = Vec::new();
        let mut chosen = Vec::new();
        let mut node = PathNode {
            target: partition.target_cell(),
            partition,
            trace,
        };
        while let Some((start, _)) = node.target {
            let v = *node.partition.cell(start).iter().min().expect("non-empty cell");
            let mut child = node.partition.clone();
            let trace = child.individualize(&graph.graph, v);
            chosen.push(v);
            path.push(node);
            node = PathNode {
                target: child.target_cell(),
                partition: child,
                trace,
            };
        }
        path.push(node);
        Search {
            graph,
            path,
            chosen,
        }
    }

    fn generators(&self) -> Result<Vec<Permutation>> {
        let n = self.graph.graph.vertex_count();
        let mut generators: Vec<Permutation> = Vec::new();
        for level in (0..self.chosen.len()).rev() {
            let node = &self.path[level];
            let (start, _) = node.target.expect("non-leaf level has a target");
            let first = self.chosen[level];
            let mut cell = node.partition.cell(start).to_vec();
            cell.sort_unstable();
            let mut orbits = Orbits::new(n, &generators);
            let mut failed: Vec<usize> = Vec::new();
            for w in cell {
                if orbits.same(w, first) || failed.iter().any(|&f| orbits.same(w, f)) {
                    continue;
                }
                let mut child = node.partition.clone();
                let trace = child.individualize(&self.graph.graph, w);
                match self.matches(level + 1, &child, trace).then(|| self.equivalent_leaf(level + 1, &child)).flatten() {
                    Some(gamma) => {
                        if !self.graph.is_automorphism(&gamma) || gamma.apply(first) != w {
                            return Err(Error::Consistency(format!(
                                "search produced an invalid automorphism {gamma}"
                            )));
                        }
                        generators.push(gamma);
                        orbits = Orbits::new(n, &generators);
                    }
                    None => failed.push(w),
                }
            }
        }
        Ok(generators)
    }

    fn matches(&self, depth: usize, p: &OrderedPartition, trace: Trace) -> bool {
        let node = &self.path[depth];
        trace == node.trace
            && p.cell_count() == node.partition.cell_count()
            && p.target_cell() == node.target
    }

    /// Depth-first search below `p` for a leaf equivalent to the first leaf.
    fn equivalent_leaf(&self, depth: usize, p: &OrderedPartition) -> Option<Permutation> {
        match self.path[depth].target {
            None => {
                let first_leaf = self.path[depth].partition.lab();
                let mut images = vec![0; first_leaf.len()];
                for (&from, &to) in first_leaf.iter().zip(p.lab()) {
                    images[from] = to;
                }
                let gamma = Permutation::from_images(images).ok()?;
                self.graph.is_automorphism(&gamma).then_some(gamma)
            }
            Some((start, _)) => {
                let mut cell = p.cell(start).to_vec();
                cell.sort_unstable();
                cell.into_iter().find_map(|u| {
                    let mut child = p.clone();
                    let trace = child.individualize(&self.graph.graph, u);
                    if self.matches(depth + 1, &child, trace) {
                        self.equivalent_leaf(depth + 1, &child)
                    } else {
                        None
                    }
                })
            }
        }
    }
}

/// Orbits of a set of permutations, by union-find.
struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize, generators: &[Permutation]) -> Self {
        let mut orbits = Orbits {
            parent: (0..n).collect(),
        };
        for g in generators {
            for x in 0..n {
                orbits.union(x, g.apply(x));
            }
        }
        orbits
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
        SimpleGraph::from_edges(a + b, &edges).unwrap()
    }

    /// Exhaustive oracle: count color-preserving vertex permutations that
    /// preserve adjacency.
    fn brute_force_count(g: &ColoredGraph) -> u128 {
        let n = g.graph().vertex_count();
        let mut count = 0;
        let mut images: Vec<usize> = (0..n).collect();
        fn go(k: usize, images: &mut Vec<usize>, g: &ColoredGraph, count: &mut u128) {
            let n = images.len();
            if k == n {
                let p = Permutation::from_images(images.clone()).unwrap();
                if g.is_automorphism(&p) {
                    *count += 1;
                }
                return;
            }
            for i in k..n {
                images.swap(k, i);
                go(k + 1, images, g, count);
                images.swap(k, i);
            }
        }
        go(0, &mut images, g, &mut count);
        count
    }

    fn order(g: &ColoredGraph) -> u128 {
        automorphism_group(g, DEFAULT_MAX_VERTICES).unwrap().order()
    }

    #[test]
    fn small_graph_orders() {
        assert_eq!(order(&ColoredGraph::uniform(cycle(6))), 12);
        assert_eq!(order(&ColoredGraph::uniform(complete_bipartite(3, 3))), 72);
        assert_eq!(order(&ColoredGraph::uniform(SimpleGraph::empty(5))), 120);
        assert_eq!(order(&ColoredGraph::uniform(SimpleGraph::empty(0))), 1);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let petersen_like = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        let graphs = vec![
            ColoredGraph::uniform(cycle(5)),
            ColoredGraph::uniform(cycle(8)),
            ColoredGraph::uniform(complete_bipartite(2, 4)),
            ColoredGraph::uniform(petersen_like.clone()),
            ColoredGraph::new(petersen_like, vec![0, 1, 0, 1, 1, 0, 1, 0]).unwrap(),
            ColoredGraph::uniform(
                SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6)]).unwrap(),
            ),
            ColoredGraph::new(cycle(6), vec![1, 0, 0, 0, 0, 0]).unwrap(),
            ColoredGraph::uniform(
                SimpleGraph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
            ),
        ];
        for g in &graphs {
            assert_eq!(order(g), brute_force_count(g), "{}", g.graph());
        }
    }

    #[test]
    fn stabilizers_of_a_hexagon() {
        let g = ColoredGraph::uniform(cycle(6));
        for v in 0..6 {
            let stab = vertex_stabilizer(&g, v, DEFAULT_MAX_VERTICES).unwrap();
            assert_eq!(stab.order(), 2);
            assert!(stab.generators().iter().all(|p| p.apply(v) == v));
            let local = pointwise_neighborhood_stabilizer(&g, v, DEFAULT_MAX_VERTICES).unwrap();
            assert_eq!(local.order(), 1);
        }
        assert!(vertex_stabilizer(&g, 6, DEFAULT_MAX_VERTICES).is_err());
    }

    #[test]
    fn orbit_stabilizer_on_k33() {
        let g = ColoredGraph::uniform(complete_bipartite(3, 3));
        let aut = automorphism_group(&g, DEFAULT_MAX_VERTICES).unwrap();
        for v in 0..6 {
            let stab = vertex_stabilizer(&g, v, DEFAULT_MAX_VERTICES).unwrap();
            assert_eq!(aut.order(), aut.orbit(v).len() as u128 * stab.order());
            assert!(stab.is_subgroup_of(&aut).unwrap());
        }
    }

    #[test]
    fn vertex_cap() {
        let g = ColoredGraph::uniform(cycle(10));
        assert!(matches!(automorphism_group(&g, 9), Err(Error::VertexCap { .. })));
    }

    #[test]
    fn colors_must_match_vertex_count() {
        assert!(ColoredGraph::new(cycle(4), vec![0; 3]).is_err());
    }
}

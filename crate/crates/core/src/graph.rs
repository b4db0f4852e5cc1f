//! Simple undirected graphs with sorted adjacency lists.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list; rejects loops and repeated edges.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertices: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::DegenerateTransposition(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(format!("at vertex {}", v + 1)));
            }
        }
        Ok(SimpleGraph { adjacency })
    }

    /// Adjacency lists must be symmetric, loop-free and duplicate-free.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        SimpleGraph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have a distance");
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        (0..self.vertex_count())
            .map(|v| self.shortest_cycle_from(v))
            .min()
            .unwrap_or(Girth::Infinite)
    }

    /// Shortest cycle found by a BFS rooted at `root`. Equals the girth
    /// whenever `root` lies on a shortest cycle, e.g. in a vertex-transitive graph.
    pub fn shortest_cycle_from(&self, root: usize) -> Girth {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut best = Girth::Infinite;
        while let Some(v) = queue.pop_front() {
            if Girth::Finite(2 * dist[v] + 1) >= best {
                break;
            }
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(Girth::Finite(dist[v] + dist[w] + 1));
                }
            }
        }
        best
    }

    /// Whether `p` maps edges to edges (and hence non-edges to non-edges).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self.adjacency.iter().enumerate().all(|(a, list)| {
                let pa = p.apply(a);
                self.adjacency[pa].len() == list.len()
                    && list.iter().all(|&b| self.has_edge(pa, p.apply(b)))
            })
    }
}

impl fmt::Display for SimpleGraph {
    /// Edge-list text with 1-based endpoints, e.g. `1-2 2-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// Girth of a graph; acyclic graphs have infinite girth, ordered above
/// every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Girth::Finite(a), Girth::Finite(b)) => a.cmp(b),
            (Girth::Finite(_), Girth::Infinite) => Ordering::Less,
            (Girth::Infinite, Girth::Finite(_)) => Ordering::Greater,
            (Girth::Infinite, Girth::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

impl serde::Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u64(*g as u64),
            Girth::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

impl<'de> serde::Deserialize<'de> for Girth {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(g) if g >= 3 => Ok(Girth::Finite(g as usize)),
            Raw::Number(g) => Err(serde::de::Error::custom(format!("girth {g} is below 3"))),
            Raw::Text(s) if s == "infinite" => Ok(Girth::Infinite),
            Raw::Text(s) => Err(serde::de::Error::custom(format!("unknown girth {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn girths() {
        assert_eq!(cycle(4).girth(), Girth::Finite(4));
        assert_eq!(cycle(5).girth(), Girth::Finite(5));
        let tree = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree.girth(), Girth::Infinite);
        let pendant = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(pendant.girth(), Girth::Finite(3));
        // odd and even cycles sharing a vertex
        let two = SimpleGraph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 0)],
        )
        .unwrap();
        assert_eq!(two.girth(), Girth::Finite(4));
    }

    #[test]
    fn girth_ordering() {
        assert!(Girth::Infinite.is_at_least(5));
        assert!(Girth::Finite(5).is_at_least(5));
        assert!(!Girth::Finite(4).is_at_least(5));
        assert!(Girth::Finite(1000) < Girth::Infinite);
    }

    #[test]
    fn connectivity_and_trees() {
        let p4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_connected());
        assert!(p4.is_tree());
        assert!(!cycle(4).is_tree());
        let split = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(SimpleGraph::empty(1).is_connected());
        assert!(SimpleGraph::empty(1).is_tree());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(SimpleGraph::from_edges(3, &[(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn distances_and_automorphisms() {
        let c6 = cycle(6);
        let d: Vec<usize> = c6.bfs_distances(0).into_iter().map(Option::unwrap).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap();
        assert!(c6.is_automorphism(&rot));
        let swap = Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(!c6.is_automorphism(&swap));
        assert_eq!(c6.regular_degree(), Some(2));
        assert_eq!(c6.to_string(), "1-2 1-6 2-3 3-4 4-5 5-6");
    }

    #[test]
    fn girth_serializes_as_number_or_infinite() {
        assert_eq!(serde_json::to_string(&Girth::Finite(5)).unwrap(), "5");
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"infinite\"");
        let g: Girth = serde_json::from_str("\"infinite\"").unwrap();
        assert_eq!(g, Girth::Infinite);
        assert!(serde_json::from_str::<Girth>("2").is_err());
        assert!(serde_json::from_str::<Girth>("\"inf\"").is_err());
    }
}

//! Transposition sets and their transposition graphs.

use std::collections::HashSet;
use std::fmt;

use crate::autosearch::{self, ColoredGraph};
use crate::error::{Error, Result};
use crate::graph::{Girth, SimpleGraph};
use crate::perm::{Permutation, Transposition};
use crate::permgroup::{rank_action, GeneratedGroup};

/// Largest transposition graph handed to [`graph_automorphisms`].
pub const MAX_TGRAPH_VERTICES: usize = 12;

/// A duplicate-free set of transpositions of `{0, .., n-1}`, kept in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionSet {
    n: usize,
    edges: Vec<Transposition>,
}

impl TranspositionSet {
    pub fn new(n: usize, edges: Vec<Transposition>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &t in &edges {
            let (_, b) = t.points();
            if b >= n {
                return Err(Error::PointOutOfRange { point: b, degree: n });
            }
            if !seen.insert(t) {
                return Err(Error::DuplicateEdge(t.to_string()));
            }
        }
        Ok(TranspositionSet { n, edges })
    }

    /// Builds from 0-based point pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    /// Path `1-2-…-n`.
    pub fn path(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// Star `K_{1,n-1}` centred at point 1.
    pub fn star(n: usize) -> Result<Self> {
        let pairs: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// Cycle `1-2-…-n-1`; needs `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::HypothesisViolated(format!("a cycle needs at least 3 points, got {n}")));
        }
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// The labelled tree with the given 0-based Prüfer sequence on
    /// `sequence.len() + 2` points.
    pub fn from_prufer(sequence: &[usize]) -> Result<Self> {
        let n = sequence.len() + 2;
        if let Some(&bad) = sequence.iter().find(|&&x| x >= n) {
            return Err(Error::PointOutOfRange { point: bad, degree: n });
        }
        let mut degree = vec![1usize; n];
        for &x in sequence {
            degree[x] += 1;
        }
        let mut pairs = Vec::with_capacity(n - 1);
        for &x in sequence {
            let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
            pairs.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        pairs.push((rest[0], rest[1]));
        Self::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Transposition] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, t: Transposition) -> bool {
        self.edges.contains(&t)
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        self.edges
            .iter()
            .map(|t| t.to_permutation(self.n).expect("endpoints checked at construction"))
            .collect()
    }

    /// Unordered pairs of distinct elements, in input order.
    pub fn pairs(&self) -> Vec<(Transposition, Transposition)> {
        let e = &self.edges;
        (0..e.len())
            .flat_map(|i| (i + 1..e.len()).map(move |j| (e[i], e[j])))
            .collect()
    }
}

impl fmt::Display for TranspositionSet {
    /// Edge-list text, e.g. `1-2 2-3 3-4 1-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let (a, b) = t.points();
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// `T(S)`: vertices `0..n`, with `i ~ j` whenever `(i,j) ∈ S`.
pub fn build_tgraph(s: &TranspositionSet) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = s.edges.iter().map(|t| t.points()).collect();
    SimpleGraph::from_edges(s.n, &pairs).expect("transposition sets are simple graphs")
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    g.is_connected()
}

pub fn is_tree(g: &SimpleGraph) -> bool {
    g.is_tree()
}

pub fn girth(g: &SimpleGraph) -> Girth {
    g.girth()
}

/// Full automorphism group of a transposition graph.
pub fn graph_automorphisms(g: &SimpleGraph) -> Result<GeneratedGroup> {
    autosearch::automorphism_group(&ColoredGraph::uniform(g.clone()), MAX_TGRAPH_VERTICES)
}

/// The vertex permutation of `Cay(S_n, S)` induced by `x ↦ σ⁻¹xσ`.
pub fn conjugation_action(n: usize, sigma: &Permutation) -> Permutation {
    rank_action(n, |h| h.conjugate_by(sigma).expect("same degree"))
}

/// `Aut(S_n, S)` as a group of Cayley-graph vertex permutations, induced by
/// conjugation with the automorphisms of `T(S)`.
///
/// Each automorphism is checked to fix `S` setwise before it is used.
pub fn aut_sn_s(s: &TranspositionSet, max_n: usize) -> Result<GeneratedGroup> {
    let t = build_tgraph(s);
    if !t.is_connected() {
        return Err(Error::NotGenerating);
    }
    if s.n > max_n {
        return Err(Error::DegreeCap { n: s.n, max: max_n });
    }
    let sigma_group = graph_automorphisms(&t)?;
    let elements: HashSet<Permutation> = s.permutations().into_iter().collect();
    let mut induced = Vec::with_capacity(sigma_group.generators().len());
    for sigma in sigma_group.generators() {
        for x in &elements {
            if !elements.contains(&x.conjugate_by(sigma)?) {
                return Err(Error::Consistency(format!(
                    "conjugation by {sigma} moves {x} out of S"
                )));
            }
        }
        induced.push(conjugation_action(s.n, sigma));
    }
    let total = crate::perm::factorial(s.n).ok_or(Error::DegreeCap { n: s.n, max: max_n })?;
    GeneratedGroup::new(total, induced)
}

//! Ordered partitions with counting refinement.
//!
//! Cells are contiguous ranges of `lab` and are identified by their start
//! index. Splitting keeps the fragments in place, ordered by the number of
//! neighbours each vertex has in the splitting cell, so two partitions that
//! differ by an automorphism refine identically and produce equal traces.

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<usize>,
    /// Cell start of each vertex.
    cell_of: Vec<usize>,
    /// Length of the cell starting at each index; meaningful at cell starts only.
    cell_len: Vec<usize>,
    cells: usize,
}

/// A fingerprint of the splits performed during refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Trace(u64);

impl OrderedPartition {
    /// One cell per color class, ordered by color value.
    pub fn from_colors(colors: &[usize]) -> Self {
        let n = colors.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut cell_of = vec![0; n];
        let mut cell_len = vec![0; n];
        let mut cells = 0;
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && colors[lab[end]] == colors[lab[start]] {
                end += 1;
            }
            for &v in &lab[start..end] {
                cell_of[v] = start;
            }
            cell_len[start] = end - start;
            cells += 1;
            start = end;
        }
        OrderedPartition {
            lab,
            cell_of,
            cell_len,
            cells,
        }
    }

    pub fn unit(n: usize) -> Self {
        Self::from_colors(&vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.lab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lab.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub fn lab(&self) -> &[usize] {
        &self.lab
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    /// Cell start indices in order.
    pub fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.lab.len() {
            starts.push(s);
            s += self.cell_len[s];
        }
        starts
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.cell_len[start]]
    }

    /// Cells as vertex lists, in order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts().into_iter().map(|s| self.cell(s).to_vec()).collect()
    }

    /// First smallest non-singleton cell, as `(start, len)`.
    pub fn target_cell(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let len = self.cell_len[s];
            if len > 1 && best.is_none_or(|(_, l)| len < l) {
                best = Some((s, len));
            }
            s += len;
        }
        best
    }

    /// Splits `v` off the front of its cell and refines; returns the trace.
    pub fn individualize(&mut self, graph: &SimpleGraph, v: usize) -> Trace {
        let start = self.cell_of[v];
        let len = self.cell_len[start];
        let mut trace = TraceHasher::new();
        trace.write(&[u64::MAX, start as u64]);
        if len == 1 {
            return trace.finish();
        }
        let pos = start + self.lab[start..start + len].iter().position(|&x| x == v).expect("v in its cell");
        self.lab.swap(start, pos);
        self.cell_len[start] = 1;
        self.cell_len[start + 1] = len - 1;
        for &x in &self.lab[start + 1..start + len] {
            self.cell_of[x] = start + 1;
        }
        self.cells += 1;
        self.refine_from(graph, vec![start], &mut trace);
        trace.finish()
    }

    /// Coarsest equitable refinement, using every cell as a splitter.
    pub fn refine(&mut self, graph: &SimpleGraph) -> Trace {
        let mut trace = TraceHasher::new();
        let starts = self.cell_starts();
        self.refine_from(graph, starts, &mut trace);
        trace.finish()
    }

    fn refine_from(&mut self, graph: &SimpleGraph, splitters: Vec<usize>, trace: &mut TraceHasher) {
        let n = self.lab.len();
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::with_capacity(splitters.len());
        for s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0usize; n];
        let mut touched_vertices = Vec::new();
        let mut touched_cells = Vec::new();
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if self.is_discrete() {
                break;
            }
            let splitter: Vec<usize> = self.cell(w).to_vec();
            for &x in &splitter {
                for &y in graph.neighbors(x) {
                    if count[y] == 0 {
                        touched_vertices.push(y);
                    }
                    count[y] += 1;
                }
            }
            touched_cells.clear();
            touched_cells.extend(touched_vertices.iter().map(|&y| self.cell_of[y]));
            touched_cells.sort_unstable();
            touched_cells.dedup();
            for &start in &touched_cells {
                let len = self.cell_len[start];
                if len == 1 {
                    continue;
                }
                let cell = &mut self.lab[start..start + len];
                let first = count[cell[0]];
                if cell.iter().all(|&v| count[v] == first) {
                    continue;
                }
                cell.sort_by_key(|&v| (count[v], v));
                trace.write(&[w as u64, start as u64]);
                let mut fragments = Vec::new();
                let mut s = start;
                while s < start + len {
                    let c = count[self.lab[s]];
                    let mut e = s + 1;
                    while e < start + len && count[self.lab[e]] == c {
                        e += 1;
                    }
                    fragments.push((s, e - s));
                    trace.write(&[c as u64, (e - s) as u64]);
                    s = e;
                }
                for &(s, l) in &fragments {
                    self.cell_len[s] = l;
                    for &v in &self.lab[s..s + l] {
                        self.cell_of[v] = s;
                    }
                }
                self.cells += fragments.len() - 1;
                if in_queue[start] {
                    for &(s, _) in &fragments[1..] {
                        in_queue[s] = true;
                        queue.push_back(s);
                    }
                } else {
                    // all fragments but the first largest one
                    let largest = fragments
                        .iter()
                        .enumerate()
                        .max_by(|a, b| a.1 .1.cmp(&b.1 .1).then(b.0.cmp(&a.0)))
                        .map(|(i, _)| i)
                        .expect("at least two fragments");
                    for (i, &(s, _)) in fragments.iter().enumerate() {
                        if i != largest {
                            in_queue[s] = true;
                            queue.push_back(s);
                        }
                    }
                }
            }
            for &y in &touched_vertices {
                count[y] = 0;
            }
            touched_vertices.clear();
        }
        trace.write(&[self.cells as u64]);
    }

    /// Whether every vertex in a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, graph: &SimpleGraph) -> bool {
        let starts = self.cell_starts();
        for &s in &starts {
            let cell = self.cell(s);
            let profile = |v: usize| {
                let mut counts = vec![0usize; self.lab.len()];
                for &w in graph.neighbors(v) {
                    counts[self.cell_of[w]] += 1;
                }
                counts
            };
            let first = profile(cell[0]);
            if cell[1..].iter().any(|&v| profile(v) != first) {
                return false;
            }
        }
        true
    }
}

struct TraceHasher(std::collections::hash_map::DefaultHasher);

impl TraceHasher {
    fn new() -> Self {
        TraceHasher(std::collections::hash_map::DefaultHasher::new())
    }

    fn write(&mut self, words: &[u64]) {
        words.hash(&mut self.0);
    }

    fn finish(&self) -> Trace {
        Trace(self.0.finish())
    }
}

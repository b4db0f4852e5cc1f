//! Permutation groups given by generators.
//!
//! Every [`GeneratedGroup`] carries a base and strong generating set built
//! eagerly by deterministic Schreier–Sims. Basic orbits are stored as
//! Schreier trees rather than explicit transversals so that groups acting on
//! the `n!` vertices of a Cayley graph stay cheap in memory.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, Transposition};

/// Default cap on element enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

const NOT_IN_ORBIT: usize = usize::MAX;
const ROOT: usize = usize::MAX - 1;

#[derive(Clone)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    inverses: Vec<Permutation>,
    /// `tree[x]` is the index of the generator whose application reached `x`.
    tree: Vec<usize>,
    orbit: Vec<usize>,
    /// Schreier generators `(orbit[i], gens[j])` with `j < checked[i]` are known to sift.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut tree = vec![NOT_IN_ORBIT; degree];
        tree[base] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            inverses: Vec::new(),
            tree,
            orbit: vec![base],
            checked: vec![0],
        }
    }

    fn in_orbit(&self, point: usize) -> bool {
        self.tree[point] != NOT_IN_ORBIT
    }

    /// Adds a generator and extends the orbit without touching existing
    /// tree edges, so previously checked Schreier generators stay valid.
    fn add_generator(&mut self, g: Permutation) {
        let index = self.gens.len();
        self.inverses.push(g.inverse());
        self.gens.push(g);
        let old_len = self.orbit.len();
        for k in 0..old_len {
            let image = self.gens[index].apply(self.orbit[k]);
            if self.tree[image] == NOT_IN_ORBIT {
                self.tree[image] = index;
                self.orbit.push(image);
            }
        }
        let mut k = old_len;
        while k < self.orbit.len() {
            let point = self.orbit[k];
            for (si, s) in self.gens.iter().enumerate() {
                let image = s.apply(point);
                if self.tree[image] == NOT_IN_ORBIT {
                    self.tree[image] = si;
                    self.orbit.push(image);
                }
            }
            k += 1;
        }
        self.checked.resize(self.orbit.len(), 0);
    }

    /// Coset representative mapping the base point to `point`.
    fn representative(&self, point: usize) -> Permutation {
        let mut path = Vec::new();
        let mut x = point;
        while self.tree[x] != ROOT {
            let si = self.tree[x];
            path.push(si);
            x = self.inverses[si].apply(x);
        }
        let mut images: Vec<usize> = (0..self.tree.len()).collect();
        for &si in path.iter().rev() {
            for y in images.iter_mut() {
                *y = self.gens[si].apply(*y);
            }
        }
        Permutation::from_images_unchecked(images)
    }

    /// Replaces `h` by `h · u⁻¹` where `u` is the representative of `h(base)`.
    fn strip(&self, images: &mut [usize]) {
        let mut x = images[self.base];
        while self.tree[x] != ROOT {
            let inv = &self.inverses[self.tree[x]];
            for y in images.iter_mut() {
                *y = inv.apply(*y);
            }
            x = inv.apply(x);
        }
    }
}

#[derive(Clone, Default)]
struct Chain {
    levels: Vec<Level>,
}

impl Chain {
    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Sifts `h` from level `start`; returns the residue and the level at
    /// which it dropped out (`levels.len()` if it passed every level).
    fn sift(&self, h: &Permutation, start: usize) -> (Vec<usize>, usize) {
        let mut images = h.images().to_vec();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            if !level.in_orbit(images[level.base]) {
                return (images, i);
            }
            level.strip(&mut images);
        }
        (images, self.levels.len())
    }

    fn build(degree: usize, generators: &[Permutation], known_order: Option<u128>) -> Chain {
        let mut chain = Chain::default();
        let gens: Vec<&Permutation> = generators.iter().filter(|g| !g.is_identity()).collect();
        // every generator must move some base point
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let moved = first_moved_point(g).expect("non-identity generator");
                chain.levels.push(Level::new(moved, degree));
            }
        }
        for g in &gens {
            for level in chain.levels.iter_mut() {
                level.add_generator((*g).clone());
                if g.apply(level.base) != level.base {
                    break;
                }
            }
        }
        let complete = |c: &Chain| known_order.is_some_and(|o| c.order() >= o);

        let mut i = chain.levels.len();
        while i > 0 && !complete(&chain) {
            let level_index = i - 1;
            match chain.failing_schreier_generator(level_index) {
                None => i -= 1,
                Some((residue, dropped_at)) => {
                    let h = Permutation::from_images_unchecked(residue);
                    if dropped_at == chain.levels.len() {
                        let moved = first_moved_point(&h).expect("non-identity residue");
                        chain.levels.push(Level::new(moved, degree));
                    }
                    for l in level_index + 1..=dropped_at {
                        chain.levels[l].add_generator(h.clone());
                    }
                    i = dropped_at + 1;
                }
            }
        }
        chain
    }

    /// First Schreier generator at `level_index` that does not sift through
    /// the levels below it.
    fn failing_schreier_generator(&mut self, level_index: usize) -> Option<(Vec<usize>, usize)> {
        let mut k = 0;
        while k < self.levels[level_index].orbit.len() {
            let (progress, failure) = self.check_point(level_index, k);
            self.levels[level_index].checked[k] = progress;
            if failure.is_some() {
                return failure;
            }
            k += 1;
        }
        None
    }

    /// Checks the unchecked Schreier generators of the `k`-th orbit point;
    /// returns how many generators are now known to sift, and the first failure.
    fn check_point(&self, level_index: usize, k: usize) -> (usize, Option<(Vec<usize>, usize)>) {
        let level = &self.levels[level_index];
        let point = level.orbit[k];
        let mut u = None;
        for si in level.checked[k]..level.gens.len() {
            let s = &level.gens[si];
            let image = s.apply(point);
            let tree_edge = level.tree[image] == si && level.inverses[si].apply(image) == point;
            if tree_edge {
                continue;
            }
            let u = u.get_or_insert_with(|| level.representative(point));
            let mut g = (&*u * s).images().to_vec();
            level.strip(&mut g);
            let g = Permutation::from_images_unchecked(g);
            let (residue, dropped_at) = self.sift(&g, level_index + 1);
            let is_identity = residue.iter().enumerate().all(|(x, &y)| x == y);
            if dropped_at < self.levels.len() || !is_identity {
                return (si, Some((residue, dropped_at)));
            }
        }
        (level.gens.len(), None)
    }
}

fn first_moved_point(p: &Permutation) -> Option<usize> {
    p.images().iter().enumerate().find(|&(i, &x)| i != x).map(|(i, _)| i)
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Chain,
}

impl GeneratedGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::build(degree, generators, None)
    }

    /// Builds the chain knowing the group order in advance, which lets
    /// Schreier–Sims stop as soon as the basic orbits account for it.
    ///
    /// A wrong `order` yields a wrong chain; only use it for groups whose
    /// order is known by construction.
    pub fn with_known_order(degree: usize, generators: Vec<Permutation>, order: u128) -> Result<Self> {
        Self::build(degree, generators, Some(order))
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup {
            degree,
            generators: Vec::new(),
            chain: Chain::default(),
        }
    }

    fn build(degree: usize, generators: Vec<Permutation>, known_order: Option<u128>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = Chain::build(degree, &generators, known_order);
        Ok(GeneratedGroup {
            degree,
            generators,
            chain,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the basic orbits; their product is the group order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, dropped_at) = self.chain.sift(p, 0);
        Ok(dropped_at == self.chain.levels.len()
            && residue.iter().enumerate().all(|(x, &y)| x == y))
    }

    pub fn is_subgroup_of(&self, other: &GeneratedGroup) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `self` is normal in `ambient`: every conjugate of a generator
    /// of `self` by a generator of `ambient` lies in `self`.
    pub fn is_normal_in(&self, ambient: &GeneratedGroup) -> Result<bool> {
        for x in &self.generators {
            if !ambient.contains(x)? {
                return Err(Error::NotSubgroup(x.to_string()));
            }
        }
        for g in &ambient.generators {
            for x in &self.generators {
                if !self.contains(&x.conjugate_by(g)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Orbit of `point`, in breadth-first order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit
    }

    /// All elements, or `None` if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        if self.order() > cap as u128 {
            return None;
        }
        // g = u_k ⋯ u_1 u_0 with u_i drawn from the transversal of level i
        let mut elements = vec![Permutation::identity(self.degree)];
        for level in self.chain.levels.iter().rev() {
            let reps: Vec<Permutation> = level
                .orbit
                .iter()
                .map(|&b| level.representative(b))
                .collect();
            elements = elements
                .iter()
                .flat_map(|x| reps.iter().map(move |u| x * u))
                .collect();
        }
        Some(elements)
    }

    pub fn facts(&self, cap: usize) -> GroupFacts {
        let order = self.order();
        let (exponent, is_abelian) = match self.elements(cap) {
            Some(elements) => {
                let exponent = elements.iter().fold(1u128, |acc, g| lcm(acc, g.order()));
                let abelian = self.generators.iter().enumerate().all(|(i, a)| {
                    self.generators[i + 1..].iter().all(|b| a * b == b * a)
                });
                (Some(exponent), Some(abelian))
            }
            None => (None, None),
        };
        GroupFacts {
            order,
            is_abelian,
            is_klein_four: order == 4 && exponent == Some(2),
            exponent,
        }
    }

    /// The action on an invariant set of points, relabelled `0..points.len()`
    /// in the given order.
    pub fn induced_action(&self, points: &[usize]) -> Result<GeneratedGroup> {
        let mut index = vec![usize::MAX; self.degree];
        for (i, &p) in points.iter().enumerate() {
            if p >= self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            index[p] = i;
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let images: Vec<usize> = points.iter().map(|&p| index[g.apply(p)]).collect();
            if images.contains(&usize::MAX) {
                return Err(Error::Consistency(format!(
                    "point set is not invariant under {g}"
                )));
            }
            gens.push(Permutation::from_images(images)?);
        }
        GeneratedGroup::new(points.len(), gens)
    }
}

impl fmt::Display for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratedGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .finish()
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

/// Order plus the small-group invariants needed to recognize `Z_2 × Z_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupFacts {
    pub order: u128,
    /// `None` when the order is above the enumeration cap.
    pub is_abelian: Option<bool>,
    pub is_klein_four: bool,
    pub exponent: Option<u128>,
}

/// Whether `a ∩ b` is trivial, by enumerating the smaller group.
pub fn intersection_is_trivial(a: &GeneratedGroup, b: &GeneratedGroup, cap: usize) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elements = small.elements(cap).ok_or(Error::Undecided { cap })?;
    for g in elements.iter().filter(|g| !g.is_identity()) {
        if large.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The permutation of ranks `rank(h) ↦ rank(f(h))` over all of `S_n`.
pub fn rank_action<F>(n: usize, f: F) -> Permutation
where
    F: Fn(&Permutation) -> Permutation,
{
    let total = factorial(n).expect("degree within rankable range");
    let images = (0..total)
        .map(|r| f(&Permutation::unrank(r, n).expect("rank in range")).rank())
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `R(S_n)` acting on permutation ranks: `g` acts as `rank(h) ↦ rank(h·g)`.
pub fn right_regular_representation(n: usize, max_n: usize) -> Result<GeneratedGroup> {
    if !(2..=max_n).contains(&n) {
        return Err(Error::DegreeCap { n, max: max_n });
    }
    let total = factorial(n).ok_or(Error::DegreeCap { n, max: max_n })?;
    let gens = (0..n - 1)
        .map(|i| {
            let s = Transposition::new(i, i + 1)?.to_permutation(n)?;
            Ok(right_multiplication(n, &s))
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratedGroup::with_known_order(total, gens, total as u128)
}

/// The vertex permutation `r_g: rank(h) ↦ rank(h·g)`.
pub fn right_multiplication(n: usize, g: &Permutation) -> Permutation {
    rank_action(n, |h| h * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let zero: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|p| p - 1).collect())
            .collect();
        let refs: Vec<&[usize]> = zero.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs).unwrap()
    }

    /// Closure under multiplication, the independent order oracle.
    fn closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn symmetric_group_order() {
        let g = GeneratedGroup::new(
            4,
            vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[2, 3]]), cyc(4, &[&[3, 4]])],
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(GeneratedGroup::new(4, vec![Permutation::identity(4)]).unwrap().order(), 1);
        assert_eq!(GeneratedGroup::trivial(7).order(), 1);
    }

    #[test]
    fn larger_groups() {
        // S_8 from a transposition and an 8-cycle
        let g = GeneratedGroup::new(
            8,
            vec![cyc(8, &[&[1, 2]]), cyc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]])],
        )
        .unwrap();
        assert_eq!(g.order(), 40320);
        // A_7 from 3-cycles
        let a7 = GeneratedGroup::new(
            7,
            (3..=7).map(|k| cyc(7, &[&[1, 2, k]])).collect(),
        )
        .unwrap();
        assert_eq!(a7.order(), 2520);
        // cube rotations × reflection on the 8 vertices of Q_3 (order 48)
        let flip = |bit: usize| Permutation::from_images((0..8).map(|v| v ^ (1 << bit)).collect()).unwrap();
        let swap01 = Permutation::from_images(
            (0..8usize).map(|v| (v & 4) | ((v & 1) << 1) | ((v >> 1) & 1)).collect(),
        )
        .unwrap();
        let swap12 = Permutation::from_images(
            (0..8usize).map(|v| (v & 1) | ((v & 2) << 1) | ((v >> 1) & 2)).collect(),
        )
        .unwrap();
        let q3 = GeneratedGroup::new(8, vec![flip(0), flip(1), flip(2), swap01, swap12]).unwrap();
        assert_eq!(q3.order(), 48);
    }

    #[test]
    fn membership() {
        let g = GeneratedGroup::new(3, vec![cyc(3, &[&[1, 2]])]).unwrap();
        assert!(g.contains(&Permutation::identity(3)).unwrap());
        assert!(!g.contains(&cyc(3, &[&[1, 3]])).unwrap());
        assert!(g.contains(&Permutation::identity(4)).is_err());
        let a4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2, 3]]), cyc(4, &[&[2, 3, 4]])]).unwrap();
        assert_eq!(a4.order(), 12);
        for a in 0..4 {
            for b in a + 1..4 {
                let t = Transposition::new(a, b).unwrap().to_permutation(4).unwrap();
                assert!(!a4.contains(&t).unwrap());
            }
        }
    }

    #[test]
    fn normality() {
        let s4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert!(s4.is_normal_in(&s4).unwrap());
        let v4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]).unwrap();
        assert!(v4.is_normal_in(&s4).unwrap());
        let c2 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2]])]).unwrap();
        assert!(!c2.is_normal_in(&s4).unwrap());
        let c3 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert!(matches!(s4.is_normal_in(&c3), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn facts() {
        let f = GeneratedGroup::new(3, vec![cyc(3, &[&[1, 2]])]).unwrap().facts(DEFAULT_ENUMERATION_CAP);
        assert_eq!(f.order, 2);
        assert_eq!(f.exponent, Some(2));
        assert_eq!(f.is_abelian, Some(true));
        assert!(!f.is_klein_four);
        let f = GeneratedGroup::new(3, vec![cyc(3, &[&[1, 2, 3]])]).unwrap().facts(DEFAULT_ENUMERATION_CAP);
        assert_eq!(f.order, 3);
        assert!(!f.is_klein_four);
        let v4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])]).unwrap();
        let f = v4.facts(DEFAULT_ENUMERATION_CAP);
        assert!(f.is_klein_four);
        let z4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert!(!z4.facts(DEFAULT_ENUMERATION_CAP).is_klein_four);
        let s5 = GeneratedGroup::new(5, vec![cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])]).unwrap();
        let f = s5.facts(100);
        assert_eq!(f.order, 120);
        assert_eq!(f.exponent, None);
        assert_eq!(f.is_abelian, None);
    }

    #[test]
    fn intersections() {
        let s4 = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        assert!(intersection_is_trivial(&s4, &GeneratedGroup::trivial(4), 100).unwrap());
        let a = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2]])]).unwrap();
        let b = GeneratedGroup::new(4, vec![cyc(4, &[&[1, 2]]), cyc(4, &[&[3, 4]])]).unwrap();
        assert!(!intersection_is_trivial(&a, &b, 100).unwrap());
        assert!(matches!(
            intersection_is_trivial(&s4, &s4, 10),
            Err(Error::Undecided { .. })
        ));
    }

    #[test]
    fn right_regular() {
        let r = right_regular_representation(4, 8).unwrap();
        assert_eq!(r.degree(), 24);
        assert_eq!(r.order(), 24);
        let elements = r.elements(100).unwrap();
        assert_eq!(elements.len(), 24);
        for g in &elements {
            assert_eq!(g.apply(0) == 0, g.is_identity());
        }
        assert!(right_regular_representation(1, 8).is_err());
        assert!(right_regular_representation(9, 8).is_err());
        // membership of an arbitrary right multiplication
        let g = cyc(4, &[&[1, 3, 4]]);
        assert!(r.contains(&right_multiplication(4, &g)).unwrap());
        // left multiplication by a non-central element is not in R(S_4)
        let left = rank_action(4, |h| &cyc(4, &[&[1, 2]]) * h);
        assert!(!r.contains(&left).unwrap());
    }

    #[test]
    fn induced_action_on_an_orbit() {
        let g = GeneratedGroup::new(5, vec![cyc(5, &[&[1, 2, 3]]), cyc(5, &[&[4, 5]])]).unwrap();
        let action = g.induced_action(&[0, 1, 2]).unwrap();
        assert_eq!(action.order(), 3);
        assert!(g.induced_action(&[0, 3]).is_err());
    }

    #[test]
    fn elements_are_distinct_members() {
        let g = GeneratedGroup::new(6, vec![cyc(6, &[&[1, 2, 3]]), cyc(6, &[&[3, 4], &[5, 6]])]).unwrap();
        let elements = g.elements(10_000).unwrap();
        let set: HashSet<_> = elements.iter().cloned().collect();
        assert_eq!(set.len() as u128, g.order());
        assert_eq!(set, closure(6, g.generators()));
    }

    fn arb_gens() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
        (2usize..=7).prop_flat_map(|n| {
            let one = Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap());
            (Just(n), prop::collection::vec(one, 0..4))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn order_and_membership_match_closure((n, gens) in arb_gens(), probe in prop::collection::vec(0usize..5040, 8)) {
            let g = GeneratedGroup::new(n, gens.clone()).unwrap();
            let all = closure(n, &gens);
            prop_assert_eq!(g.order(), all.len() as u128);
            for gen in &gens {
                prop_assert!(g.contains(gen).unwrap());
            }
            let total = factorial(n).unwrap();
            for r in probe {
                let p = Permutation::unrank(r % total, n).unwrap();
                prop_assert_eq!(g.contains(&p).unwrap(), all.contains(&p));
            }
            // Lagrange for the stabilizer of the first base point
            prop_assert_eq!(g.order() % g.basic_orbit_lengths().first().copied().unwrap_or(1) as u128, 0);
        }
    }
}

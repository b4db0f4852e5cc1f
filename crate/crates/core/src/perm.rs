//! Permutations of `{0, .., n-1}` with right-action composition.
//!
//! `p * q` applies `p` first and then `q`, so products read left to right
//! like `kt` in the usual hand calculations: with `k = (1,2)` and
//! `t = (2,3)`, `k * t` is the 3-cycle `(1,3,2)`.
//!
//! Points are 0-based internally and rendered 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest degree for which `n!` fits in a `usize` on 64-bit targets.
pub const MAX_RANKABLE_DEGREE: usize = 20;

/// `n!`, or `None` on overflow.
pub fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::BitXor for Parity {
    type Output = Parity;

    fn bitxor(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A permutation stored as its image table: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation { degree: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection on `0..images.len()`.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if used[x] {
                    return Err(Error::NotAPermutation { degree });
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Right-action product: `x ↦ other(self(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`; relabels every point `x` of a cycle as `g(x)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[g.images[x]] = g.images[y];
        }
        Ok(Permutation { images })
    }

    pub fn parity(&self) -> Parity {
        // A k-cycle is a product of k - 1 transpositions.
        let moved: usize = self
            .cycle_structure()
            .cycles()
            .iter()
            .map(|c| c.len() - 1)
            .sum();
        if moved.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        self.cycle_structure()
            .cycles()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleStructure { cycles }
    }

    /// Lexicographic Lehmer-code rank in `[0, n!)`; the identity has rank 0.
    ///
    /// Panics if the degree exceeds [`MAX_RANKABLE_DEGREE`].
    pub fn rank(&self) -> usize {
        let n = self.degree();
        assert!(
            n <= MAX_RANKABLE_DEGREE,
            "rank is only defined up to degree {MAX_RANKABLE_DEGREE}"
        );
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_after = self.images[i + 1..]
                .iter()
                .filter(|&&y| y < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }

    pub fn unrank(rank: usize, degree: usize) -> Result<Permutation> {
        let total = factorial(degree)
            .filter(|_| degree <= MAX_RANKABLE_DEGREE)
            .ok_or(Error::RankOutOfRange { rank, degree })?;
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, degree });
        }
        let mut digits = vec![0usize; degree];
        let mut r = rank;
        for i in (0..degree).rev() {
            let base = degree - i;
            digits[i] = r % base;
            r /= base;
        }
        let mut remaining: Vec<usize> = (0..degree).collect();
        let images = digits.iter().map(|&d| remaining.remove(d)).collect();
        Ok(Permutation { images })
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
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

/// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_structure())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Disjoint cycle decomposition with fixed points omitted. Each cycle starts
/// at its least point and cycles are sorted by that point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleStructure {
    cycles: Vec<Vec<usize>>,
}

impl CycleStructure {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A transposition `(a,b)`, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Transposition { a, b }),
            std::cmp::Ordering::Greater => Ok(Transposition { a: b, b: a }),
            std::cmp::Ordering::Equal => Err(Error::DegenerateTransposition(a)),
        }
    }

    pub fn points(self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn to_permutation(self, degree: usize) -> Result<Permutation> {
        if self.b >= degree {
            return Err(Error::PointOutOfRange {
                point: self.b,
                degree,
            });
        }
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(self.a, self.b);
        Ok(Permutation { images })
    }

    pub fn commutes_with(self, other: Transposition) -> bool {
        self == other
            || (self.a != other.a && self.a != other.b && self.b != other.a && self.b != other.b)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a + 1, self.b + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: usize, a: usize, b: usize) -> Permutation {
        // 1-based points, as written by hand
        Transposition::new(a - 1, b - 1)
            .unwrap()
            .to_permutation(n)
            .unwrap()
    }

    fn cyc(n: usize, points: &[usize]) -> Permutation {
        let zero: Vec<usize> = points.iter().map(|p| p - 1).collect();
        Permutation::from_cycles(n, &[&zero]).unwrap()
    }

    #[test]
    fn products_follow_hand_calculation() {
        let k = t(3, 1, 2);
        let tt = t(3, 2, 3);
        let kt = k.compose(&tt).unwrap();
        assert_eq!(kt, cyc(3, &[1, 3, 2]));
        assert_eq!(kt.to_string(), "(1,3,2)");
        assert_eq!(&kt * &kt, cyc(3, &[1, 2, 3]));
        let tkt = &(&tt * &k) * &tt;
        assert_eq!(tkt, t(3, 1, 3));
    }

    #[test]
    fn compose_rejects_mixed_degrees() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
        assert!(Permutation::identity(3)
            .conjugate_by(&Permutation::identity(2))
            .is_err());
    }

    #[test]
    fn compose_with_identity() {
        let p = cyc(5, &[1, 4, 2]);
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(cyc(3, &[1, 2, 3]).inverse(), cyc(3, &[1, 3, 2]));
        let s = t(5, 2, 5);
        assert_eq!(s.inverse(), s);
        assert!((&s * &s).is_identity());
    }

    #[test]
    fn parities() {
        assert_eq!(t(4, 1, 3).parity(), Parity::Odd);
        assert_eq!(cyc(4, &[1, 2, 3]).parity(), Parity::Even);
        assert_eq!(Permutation::identity(4).parity(), Parity::Even);
    }

    #[test]
    fn rank_edges() {
        assert_eq!(Permutation::identity(4).rank(), 0);
        assert_eq!(Permutation::unrank(0, 6).unwrap(), Permutation::identity(6));
        assert!(Permutation::unrank(24, 4).is_err());
        assert!(Permutation::unrank(0, 40).is_err());
    }

    /// Lexicographic enumeration oracle, independent of the Lehmer code.
    fn lexicographic(n: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for x in 0..n {
                if !prefix.contains(&x) {
                    prefix.push(x);
                    go(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn rank_matches_lexicographic_enumeration() {
        let all = lexicographic(4);
        assert_eq!(all[23], vec![3, 2, 1, 0]);
        let reversal = Permutation::from_images(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(reversal.rank(), 23);
        assert_eq!(Permutation::unrank(23, 4).unwrap(), reversal);
        for n in 0..=6 {
            for (r, images) in lexicographic(n).into_iter().enumerate() {
                let p = Permutation::from_images(images).unwrap();
                assert_eq!(p.rank(), r);
                assert_eq!(Permutation::unrank(r, n).unwrap(), p);
            }
        }
    }

    #[test]
    fn rank_roundtrip_degree_seven() {
        for r in (0..5040).step_by(7) {
            assert_eq!(Permutation::unrank(r, 7).unwrap().rank(), r);
        }
    }

    #[test]
    fn cycle_structures() {
        assert!(Permutation::identity(5).cycle_structure().is_empty());
        let path = &(&t(4, 1, 2) * &t(4, 2, 3)) * &t(4, 3, 4);
        let cs = path.cycle_structure();
        assert_eq!(cs.cycle_type(), vec![4]);
        let mut pts = cs.cycles()[0].clone();
        pts.sort_unstable();
        assert_eq!(pts, vec![0, 1, 2, 3]);
        let two = &t(4, 1, 2) * &t(4, 3, 4);
        assert_eq!(two.cycle_structure().cycle_type(), vec![2, 2]);
        assert_eq!(two.to_string(), "(1,2)(3,4)");
        assert_eq!(Permutation::identity(3).to_string(), "e");
    }

    #[test]
    fn supports() {
        assert!(Permutation::identity(4).support().is_empty());
        let s: Vec<usize> = t(5, 1, 4).support().into_iter().collect();
        assert_eq!(s, vec![0, 3]);
        let s: Vec<usize> = cyc(5, &[1, 2, 3]).support().into_iter().collect();
        assert_eq!(s, vec![0, 1, 2]);
    }

    #[test]
    fn conjugation_relabels() {
        let s = t(3, 1, 2);
        assert_eq!(s.conjugate_by(&Permutation::identity(3)).unwrap(), s);
        assert_eq!(s.conjugate_by(&t(3, 2, 3)).unwrap(), t(3, 1, 3));
        // equals g⁻¹ s g under the product convention
        let g = cyc(5, &[1, 3, 5, 2]);
        let p = cyc(5, &[1, 2]);
        assert_eq!(p.conjugate_by(&g).unwrap(), &(&g.inverse() * &p) * &g);
    }

    #[test]
    fn transposition_normalization() {
        let s = Transposition::new(3, 1).unwrap();
        assert_eq!(s.points(), (1, 3));
        assert_eq!(s.to_string(), "(2,4)");
        assert!(Transposition::new(2, 2).is_err());
        assert!(s.to_permutation(3).is_err());
        assert!(s.commutes_with(Transposition::new(0, 2).unwrap()));
        assert!(!s.commutes_with(Transposition::new(0, 1).unwrap()));
    }

    /// Brute force over ordered triples of distinct transpositions on 5
    /// points: a single 4-cycle product forces the three edges to form a
    /// tree on the four moved points, and every tree product is a 4-cycle.
    #[test]
    fn four_cycle_products_come_from_trees() {
        let n = 5;
        let all: Vec<Transposition> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| Transposition::new(a, b).unwrap()))
            .collect();
        let is_tree_on_four = |edges: &[Transposition]| {
            let mut verts = BTreeSet::new();
            for e in edges {
                let (a, b) = e.points();
                verts.insert(a);
                verts.insert(b);
            }
            if verts.len() != 4 {
                return false;
            }
            // 3 edges on 4 vertices: a tree iff connected
            let mut comp: Vec<usize> = (0..n).collect();
            fn find(c: &mut Vec<usize>, x: usize) -> usize {
                if c[x] != x {
                    let r = find(c, c[x]);
                    c[x] = r;
                }
                c[x]
            }
            for e in edges {
                let (a, b) = e.points();
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                if ra == rb {
                    return false;
                }
                comp[ra] = rb;
            }
            true
        };
        let mut tree_triples = 0;
        for &x in &all {
            for &y in &all {
                for &z in &all {
                    if x == y || y == z || x == z {
                        continue;
                    }
                    let p = &(&x.to_permutation(n).unwrap() * &y.to_permutation(n).unwrap())
                        * &z.to_permutation(n).unwrap();
                    let single_four = p.cycle_structure().cycle_type() == vec![4];
                    let tree = is_tree_on_four(&[x, y, z]);
                    assert_eq!(single_four, tree, "{x}{y}{z} -> {p}");
                    tree_triples += usize::from(tree);
                }
            }
        }
        assert!(tree_triples > 0);
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (3..=max_degree).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<usize>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap())
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (3usize..=7).prop_flat_map(|n| {
            let one = || {
                Just((0..n).collect::<Vec<usize>>())
                    .prop_shuffle()
                    .prop_map(|v| Permutation::from_images(v).unwrap())
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn associativity((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn parity_is_a_homomorphism((p, q, _r) in arb_triple()) {
            prop_assert_eq!((&p * &q).parity(), p.parity() ^ q.parity());
        }

        #[test]
        fn inverse_cancels(p in arb_perm(9)) {
            prop_assert!((&p * &p.inverse()).is_identity());
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        }

        #[test]
        fn conjugation_preserves_cycle_type((p, g, _r) in arb_triple()) {
            let c = p.conjugate_by(&g).unwrap();
            prop_assert_eq!(c.cycle_structure().cycle_type(), p.cycle_structure().cycle_type());
        }

        #[test]
        fn cycle_structure_is_normalized(p in arb_perm(9)) {
            let cs = p.cycle_structure();
            let mut prev = None;
            for cycle in cs.cycles() {
                prop_assert!(cycle.len() >= 2);
                prop_assert_eq!(Some(&cycle[0]), cycle.iter().min());
                prop_assert!(prev < Some(cycle[0]));
                prev = Some(cycle[0]);
            }
            let rebuilt: Vec<&[usize]> = cs.cycles().iter().map(Vec::as_slice).collect();
            prop_assert_eq!(Permutation::from_cycles(p.degree(), &rebuilt).unwrap(), p);
        }
    }
}

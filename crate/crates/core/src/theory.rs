//! Executable checks of the structural claims about `Cay(S_n, S)`.
//!
//! Each check reports what it found instead of failing: a violated claim is
//! recorded as a witness string in the verdict.

use rayon::prelude::*;

use crate::autosearch::{self, ColoredGraph};
use crate::cayley::{build_cayley, CayleyGraph};
use crate::error::{Error, Result};
use crate::graph::{Girth, SimpleGraph};
use crate::limits::Limits;
use crate::perm::{factorial, Transposition};
use crate::permgroup::{intersection_is_trivial, right_regular_representation, GeneratedGroup};
use crate::tgraph::{aut_sn_s, build_tgraph, graph_automorphisms, TranspositionSet};

/// Outcome of a check whose hypothesis may not hold for the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<T> {
    Ran(T),
    Skipped(String),
}

impl<T> Check<T> {
    pub fn ran(&self) -> Option<&T> {
        match self {
            Check::Ran(t) => Some(t),
            Check::Skipped(_) => None,
        }
    }
}

/// Commuting pairs lie on exactly one 4-cycle through `e`; others on none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCyclePair {
    pub t: Transposition,
    pub k: Transposition,
    pub commute: bool,
    pub four_cycles: usize,
}

impl FourCyclePair {
    pub fn passed(&self) -> bool {
        self.commute == (self.four_cycles == 1)
    }

    fn witness(&self) -> String {
        format!(
            "t={} k={} {}: {} 4-cycles through e,t,k",
            self.t,
            self.k,
            if self.commute { "commute" } else { "do not commute" },
            self.four_cycles
        )
    }
}

/// A non-commuting pair and its 6-cycles through `e`, `t`, `k` and a vertex
/// at distance 3 from `e`, rendered in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixCyclePair {
    pub t: Transposition,
    pub k: Transposition,
    pub cycles: Vec<String>,
    pub distance3_vertices: usize,
}

impl SixCyclePair {
    pub fn passed(&self) -> bool {
        self.cycles.len() == 1
    }

    fn witness(&self) -> String {
        format!(
            "t={} k={}: {} qualifying 6-cycles [{}]",
            self.t,
            self.k,
            self.cycles.len(),
            self.cycles.join("; ")
        )
    }
}

fn map_pairs<T, F>(pairs: Vec<(Transposition, Transposition)>, parallel: bool, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Transposition, Transposition) -> Result<T> + Sync,
{
    if parallel {
        pairs.into_par_iter().map(|(t, k)| f(t, k)).collect()
    } else {
        pairs.into_iter().map(|(t, k)| f(t, k)).collect()
    }
}

fn four_cycle_pairs(cay: &CayleyGraph, parallel: bool) -> Result<Vec<FourCyclePair>> {
    map_pairs(cay.generating_set().pairs(), parallel, |t, k| {
        Ok(FourCyclePair {
            t,
            k,
            commute: t.commutes_with(k),
            four_cycles: cay.four_cycles_through(t, k)?.len(),
        })
    })
}

fn six_cycle_pairs(cay: &CayleyGraph, parallel: bool) -> Result<Vec<SixCyclePair>> {
    let pairs = cay
        .generating_set()
        .pairs()
        .into_iter()
        .filter(|(t, k)| !t.commutes_with(*k))
        .collect();
    map_pairs(pairs, parallel, |t, k| {
        let cycles = cay.six_cycles_through_with_distance3(t, k)?;
        Ok(SixCyclePair {
            t,
            k,
            distance3_vertices: cay.distance3_vertices(&cycles)?.len(),
            cycles: cycles.iter().map(|c| c.render(cay)).collect(),
        })
    })
}

fn lemma2_gate(tgraph: &SimpleGraph) -> Option<String> {
    if !tgraph.is_connected() {
        Some("T(S) is disconnected".to_string())
    } else if !tgraph.girth().is_at_least(4) {
        Some("T(S) contains a triangle".to_string())
    } else {
        None
    }
}

fn theorem4_gate(tgraph: &SimpleGraph) -> Option<String> {
    if !tgraph.is_connected() {
        Some("T(S) is disconnected".to_string())
    } else if !tgraph.girth().is_at_least(5) {
        Some(format!("T(S) has girth {}", tgraph.girth()))
    } else {
        None
    }
}

/// For triangle-free connected `T(S)`: `tk = kt` iff exactly one 4-cycle
/// of the Cayley graph contains `e`, `t` and `k`.
pub fn check_lemma2(s: &TranspositionSet, limits: &Limits) -> Result<Check<Vec<FourCyclePair>>> {
    if let Some(reason) = lemma2_gate(&build_tgraph(s)) {
        return Ok(Check::Skipped(reason));
    }
    let cay = build_cayley(s, limits.max_n)?;
    Ok(Check::Ran(four_cycle_pairs(&cay, limits.parallel)?))
}

/// For `T(S)` of girth at least 5: every non-commuting pair has exactly one
/// 6-cycle through `e`, `t`, `k` and a vertex at distance 3 from `e`.
pub fn check_theorem4(s: &TranspositionSet, limits: &Limits) -> Result<Check<Vec<SixCyclePair>>> {
    if let Some(reason) = theorem4_gate(&build_tgraph(s)) {
        return Ok(Check::Skipped(reason));
    }
    let cay = build_cayley(s, limits.max_n)?;
    Ok(Check::Ran(six_cycle_pairs(&cay, limits.parallel)?))
}

/// The combined 4-cycle / 6-cycle condition that forces normality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FengCondition {
    pub holds: bool,
    pub pairs_checked: usize,
    /// Pairs where commuting and lying on a unique 4-cycle disagree.
    pub four_cycle_failures: usize,
    /// Non-commuting pairs without a unique qualifying 6-cycle.
    pub six_cycle_failures: usize,
    /// First offending pair, if any.
    pub witness: Option<String>,
}

pub fn check_feng_condition(s: &TranspositionSet, limits: &Limits) -> Result<FengCondition> {
    let cay = build_cayley(s, limits.max_n)?;
    feng_condition_on(&cay, limits.parallel)
}

fn feng_condition_on(cay: &CayleyGraph, parallel: bool) -> Result<FengCondition> {
    let four = four_cycle_pairs(cay, parallel)?;
    let six = six_cycle_pairs(cay, parallel)?;
    let witness = six
        .iter()
        .find(|p| !p.passed())
        .map(SixCyclePair::witness)
        .or_else(|| four.iter().find(|p| !p.passed()).map(FourCyclePair::witness));
    Ok(FengCondition {
        holds: witness.is_none(),
        pairs_checked: four.len(),
        four_cycle_failures: four.iter().filter(|p| !p.passed()).count(),
        six_cycle_failures: six.iter().filter(|p| !p.passed()).count(),
        witness,
    })
}

/// Whether a small graph contains a 4-cycle, by checking every pair of
/// vertices for two common neighbours.
pub fn contains_four_cycle(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    (0..n).any(|a| {
        (a + 1..n).any(|b| g.neighbors(a).iter().filter(|&&x| g.has_edge(x, b)).count() >= 2)
    })
}

/// Automorphism data of the whole Cayley graph.
#[derive(Debug, Clone)]
pub struct WholeGraph {
    pub aut: GeneratedGroup,
    /// Stabilizer of `e`.
    pub ge: GeneratedGroup,
    /// Stabilizer of `e` and each of its neighbours.
    pub le: GeneratedGroup,
    pub regular: GeneratedGroup,
}

fn whole_graph(cay: &CayleyGraph, limits: &Limits) -> Result<Option<WholeGraph>> {
    if limits.skip_full_aut || cay.n() > limits.full_aut_max_n {
        return Ok(None);
    }
    let colored = ColoredGraph::uniform(cay.graph().clone());
    let e = cay.e_index();
    Ok(Some(WholeGraph {
        aut: autosearch::automorphism_group(&colored, limits.max_search_vertices)?,
        ge: autosearch::vertex_stabilizer(&colored, e, limits.max_search_vertices)?,
        le: autosearch::pointwise_neighborhood_stabilizer(&colored, e, limits.max_search_vertices)?,
        regular: right_regular_representation(cay.n(), limits.max_n)?,
    }))
}

/// Consistency of the computed groups: vertex-transitivity, orbit–stabilizer,
/// the containments `L_e ≤ G_e ≤ Aut`, and `|G_e| = |L_e| · |G_e acting on N(e)|`.
fn whole_graph_consistency(cay: &CayleyGraph, w: &WholeGraph, aut_s: &GeneratedGroup) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let vertices = cay.vertex_count() as u128;
    let e = cay.e_index();
    if w.aut.orbit(e).len() as u128 != vertices {
        failures.push("automorphism group is not vertex-transitive".to_string());
    }
    if w.aut.order() != vertices * w.ge.order() {
        failures.push(format!(
            "orbit-stabilizer: |Aut| = {} but n!·|G_e| = {}",
            w.aut.order(),
            vertices * w.ge.order()
        ));
    }
    for (name, sub, sup) in [
        ("L_e ≤ G_e", &w.le, &w.ge),
        ("G_e ≤ Aut", &w.ge, &w.aut),
        ("R(S_n) ≤ Aut", &w.regular, &w.aut),
        ("Aut(S_n,S) ≤ Aut", aut_s, &w.aut),
    ] {
        if !sub.is_subgroup_of(sup)? {
            failures.push(format!("containment {name} fails"));
        }
    }
    let neighbors = cay.graph().neighbors(e).to_vec();
    let local = w.ge.induced_action(&neighbors)?.order();
    if w.ge.order() != w.le.order() * local {
        failures.push(format!(
            "|G_e| = {} but |L_e|·|G_e on N(e)| = {}·{}",
            w.ge.order(),
            w.le.order(),
            local
        ));
    }
    Ok(failures)
}

/// Normality verdict for one transposition set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    /// `T(S)` has girth at least 5 (trees included).
    pub applicable: bool,
    pub aut_order: Option<u128>,
    pub ge_order: Option<u128>,
    pub le_order: Option<u128>,
    pub le_is_klein: Option<bool>,
    pub r_normal: Option<bool>,
    /// `|Aut| = n! · |Aut(S_n,S)|`.
    pub order_product: Option<bool>,
    /// `R(S_n) ∩ Aut(S_n,S) = 1`.
    pub intersection_trivial: Option<bool>,
    pub semidirect_holds: Option<bool>,
    pub confirmed: bool,
    pub failures: Vec<String>,
}

fn theorem1_from(
    cay: &CayleyGraph,
    girth: Girth,
    whole: Option<&WholeGraph>,
    aut_s: &GeneratedGroup,
    limits: &Limits,
) -> Result<Theorem1Report> {
    let applicable = girth.is_at_least(5);
    let Some(w) = whole else {
        return Ok(Theorem1Report {
            applicable,
            aut_order: None,
            ge_order: None,
            le_order: None,
            le_is_klein: None,
            r_normal: None,
            order_product: None,
            intersection_trivial: None,
            semidirect_holds: None,
            confirmed: false,
            failures: Vec::new(),
        });
    };
    let vertices = cay.vertex_count() as u128;
    let r_normal = w.regular.is_normal_in(&w.aut)?;
    let order_product = w.aut.order() == vertices * aut_s.order();
    let intersection_trivial = match intersection_is_trivial(&w.regular, aut_s, limits.enumeration_cap) {
        Ok(b) => Some(b),
        Err(Error::Undecided { .. }) => None,
        Err(e) => return Err(e),
    };
    let semidirect_holds = intersection_trivial.map(|i| i && r_normal && order_product);
    let le_trivial = w.le.order() == 1;
    let mut failures = Vec::new();
    if applicable {
        if !r_normal {
            failures.push("girth ≥ 5 but R(S_n) is not normal in Aut".to_string());
        }
        if !order_product {
            failures.push(format!(
                "girth ≥ 5 but |Aut| = {} ≠ n!·|Aut(S_n,S)| = {}",
                w.aut.order(),
                vertices * aut_s.order()
            ));
        }
        if intersection_trivial == Some(false) {
            failures.push("R(S_n) ∩ Aut(S_n,S) is not trivial".to_string());
        }
        if !le_trivial {
            failures.push(format!("girth ≥ 5 but |L_e| = {}", w.le.order()));
        }
    }
    Ok(Theorem1Report {
        applicable,
        aut_order: Some(w.aut.order()),
        ge_order: Some(w.ge.order()),
        le_order: Some(w.le.order()),
        le_is_klein: Some(w.le.facts(limits.enumeration_cap).is_klein_four),
        r_normal: Some(r_normal),
        order_product: Some(order_product),
        intersection_trivial,
        semidirect_holds,
        confirmed: applicable && semidirect_holds == Some(true) && le_trivial,
        failures,
    })
}

/// Girth ≥ 5 implies `Aut(Cay(S_n,S)) = R(S_n) ⋊ Aut(S_n,S)` with trivial
/// `L_e`; below girth 5 the same facts are recorded without assertion.
pub fn check_theorem1(s: &TranspositionSet, limits: &Limits) -> Result<Theorem1Report> {
    let tgraph = build_tgraph(s);
    let cay = build_cayley(s, limits.max_n)?;
    let aut_s = aut_sn_s(s, limits.max_n)?;
    let whole = whole_graph(&cay, limits)?;
    theorem1_from(&cay, tgraph.girth(), whole.as_ref(), &aut_s, limits)
}

/// Order equations for an `n`-cycle transposition graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructureCheck {
    pub n: usize,
    pub aut_order: u128,
    pub ge_order: u128,
    pub le_order: u128,
    /// `|G_e| = |L_e| · 2n`.
    pub stabilizer_equation: bool,
    /// `|Aut| = n! · |G_e|`.
    pub orbit_equation: bool,
    /// The image of `Aut(T(S))` meets `L_e` trivially.
    pub dihedral_meets_le_trivially: Option<bool>,
}

pub fn check_ncycle_structure(s: &TranspositionSet, limits: &Limits) -> Result<CycleStructureCheck> {
    let tgraph = build_tgraph(s);
    let n = s.n();
    let is_cycle = tgraph.is_connected() && tgraph.regular_degree() == Some(2);
    if !is_cycle {
        return Err(Error::NotACycle);
    }
    if n < 4 {
        return Err(Error::HypothesisViolated(format!("needs an n-cycle with n ≥ 4, got n = {n}")));
    }
    if n > limits.full_aut_max_n {
        return Err(Error::DegreeCap {
            n,
            max: limits.full_aut_max_n,
        });
    }
    let cay = build_cayley(s, limits.max_n)?;
    let w = whole_graph(&cay, &Limits {
        skip_full_aut: false,
        ..*limits
    })?
    .expect("degree within the whole-graph cap");
    let aut_s = aut_sn_s(s, limits.max_n)?;
    let dihedral_meets_le_trivially = match intersection_is_trivial(&aut_s, &w.le, limits.enumeration_cap) {
        Ok(b) => Some(b),
        Err(Error::Undecided { .. }) => None,
        Err(e) => return Err(e),
    };
    let factorial_n = factorial(n).expect("small n") as u128;
    Ok(CycleStructureCheck {
        n,
        aut_order: w.aut.order(),
        ge_order: w.ge.order(),
        le_order: w.le.order(),
        stabilizer_equation: w.ge.order() == w.le.order() * 2 * n as u128,
        orbit_equation: w.aut.order() == factorial_n * w.ge.order(),
        dihedral_meets_le_trivially,
    })
}

/// Every computed fact and check for one transposition set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub input: TranspositionSet,
    pub girth: Girth,
    pub tgraph_aut_order: u128,
    pub aut_sn_s_order: u128,
    pub cayley_order_v: u128,
    pub cayley_degree: usize,
    pub bipartite: bool,
    pub aut_order: Option<u128>,
    pub ge_order: Option<u128>,
    pub le_order: Option<u128>,
    pub le_is_klein: Option<bool>,
    pub r_normal: Option<bool>,
    pub semidirect_holds: Option<bool>,
    pub theorem1_applicable: bool,
    pub theorem1_confirmed: bool,
    pub lemma2_pairs_checked: usize,
    pub lemma2_failures: Vec<String>,
    pub lemma2_skipped: Option<String>,
    pub theorem4_pairs_checked: usize,
    pub theorem4_failures: Vec<String>,
    pub theorem4_skipped: Option<String>,
    pub feng_condition: FengCondition,
    pub failures: Vec<String>,
}

impl VerdictReport {
    pub fn n(&self) -> usize {
        self.input.n()
    }
}

/// Runs every applicable check. Violated claims land in `failures`.
pub fn full_report(s: &TranspositionSet, limits: &Limits) -> Result<VerdictReport> {
    let tgraph = build_tgraph(s);
    if !tgraph.is_connected() {
        return Err(Error::NotGenerating);
    }
    let cay = build_cayley(s, limits.max_n)?;
    let girth = tgraph.girth();
    let tgraph_aut_order = graph_automorphisms(&tgraph)?.order();
    let aut_s = aut_sn_s(s, limits.max_n)?;
    let mut failures = Vec::new();

    if s.n() >= 3 && aut_s.order() != tgraph_aut_order {
        failures.push(format!(
            "|Aut(S_n,S)| = {} but |Aut(T(S))| = {}",
            aut_s.order(),
            tgraph_aut_order
        ));
    }
    let bipartite = match cay.bipartition_by_parity() {
        Ok(_) => true,
        Err(e) => {
            failures.push(e.to_string());
            false
        }
    };

    let (lemma2_pairs_checked, lemma2_failures, lemma2_skipped) = match lemma2_gate(&tgraph) {
        Some(reason) => (0, Vec::new(), Some(reason)),
        None => {
            let pairs = four_cycle_pairs(&cay, limits.parallel)?;
            let bad: Vec<String> = pairs.iter().filter(|p| !p.passed()).map(FourCyclePair::witness).collect();
            (pairs.len(), bad, None)
        }
    };
    let (theorem4_pairs_checked, theorem4_failures, theorem4_skipped) = match theorem4_gate(&tgraph) {
        Some(reason) => (0, Vec::new(), Some(reason)),
        None => {
            let pairs = six_cycle_pairs(&cay, limits.parallel)?;
            let bad: Vec<String> = pairs.iter().filter(|p| !p.passed()).map(SixCyclePair::witness).collect();
            (pairs.len(), bad, None)
        }
    };
    failures.extend(lemma2_failures.iter().map(|f| format!("4-cycle criterion: {f}")));
    failures.extend(theorem4_failures.iter().map(|f| format!("6-cycle uniqueness: {f}")));

    let feng_condition = feng_condition_on(&cay, limits.parallel)?;
    if contains_four_cycle(&tgraph) && feng_condition.holds {
        failures.push("T(S) contains a 4-cycle yet every non-commuting pair has a unique 6-cycle".to_string());
    }

    let whole = whole_graph(&cay, limits)?;
    if let Some(w) = &whole {
        failures.extend(whole_graph_consistency(&cay, w, &aut_s)?);
    }
    let theorem1 = theorem1_from(&cay, girth, whole.as_ref(), &aut_s, limits)?;
    failures.extend(theorem1.failures.iter().cloned());

    Ok(VerdictReport {
        input: s.clone(),
        girth,
        tgraph_aut_order,
        aut_sn_s_order: aut_s.order(),
        cayley_order_v: cay.vertex_count() as u128,
        cayley_degree: s.len(),
        bipartite,
        aut_order: theorem1.aut_order,
        ge_order: theorem1.ge_order,
        le_order: theorem1.le_order,
        le_is_klein: theorem1.le_is_klein,
        r_normal: theorem1.r_normal,
        semidirect_holds: theorem1.semidirect_holds,
        theorem1_applicable: theorem1.applicable,
        theorem1_confirmed: theorem1.confirmed,
        lemma2_pairs_checked,
        lemma2_failures,
        lemma2_skipped,
        theorem4_pairs_checked,
        theorem4_failures,
        theorem4_skipped,
        feng_condition,
        failures,
    })
}

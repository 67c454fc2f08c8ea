//! Amplification gadgets: variable duplication for 3-SAT, the path gadget for
//! Vertex Cover and the edge-pair gadget for directed Hamiltonian Cycle, with
//! decoders that read a feasible choice off an approximate witness.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::cnf::{CnfFormula, Literal};
use crate::error::{HamError, Result};
use crate::graph::{Digraph, Graph};

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon.is_finite() && epsilon > 0.0 && epsilon <= 1.0 {
        Ok(())
    } else {
        Err(HamError::InvalidParameter(format!("epsilon must lie in (0, 1], got {epsilon}")))
    }
}

/// `⌈1/ε⌉`, tolerating float noise such as `1/0.1 = 10.000000000000002`.
pub fn inverse_epsilon(epsilon: f64) -> Result<u32> {
    check_epsilon(epsilon)?;
    let inv = 1.0 / epsilon;
    let rounded = inv.round();
    Ok(if (inv - rounded).abs() < 1e-9 { rounded as u32 } else { inv.ceil() as u32 })
}

/// `⌈n^{1/ε}⌉`, exact when `1/ε` is an integer.
pub fn ceil_pow_inv_epsilon(n: usize, epsilon: f64) -> Result<usize> {
    check_epsilon(epsilon)?;
    let inv = 1.0 / epsilon;
    if (inv - inv.round()).abs() < 1e-9 {
        (n as u64)
            .checked_pow(inv.round() as u32)
            .map(|x| x as usize)
            .ok_or_else(|| HamError::InvalidParameter(format!("{n}^{inv} overflows")))
    } else {
        Ok((n as f64).powf(inv).ceil() as usize)
    }
}

/// Largest corruption `⌊n′/2 − n′^ε⌋` the decoders must tolerate, or `None`
/// when that bound is negative.
pub fn compliant_budget(n_prime: usize, epsilon: f64) -> Option<usize> {
    let b = n_prime as f64 / 2.0 - (n_prime as f64).powf(epsilon);
    (b >= 0.0).then(|| b.floor() as usize)
}

// ---------------------------------------------------------------- 3-SAT

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaddedFormula {
    pub base: CnfFormula,
    pub target_var: usize,
    pub duplicate_vars: Vec<usize>,
    pub epsilon: f64,
    pub formula: CnfFormula,
}

impl PaddedFormula {
    pub fn total_variables(&self) -> usize {
        self.formula.variable_count()
    }

    /// Extend a base assignment by copying `z` onto every duplicate.
    pub fn extend(&self, base_assignment: &BitString) -> BitString {
        let z = base_assignment.get(self.target_var);
        base_assignment.concat(&BitString::new(vec![z; self.duplicate_vars.len()]))
    }

    pub fn project(&self, assignment: &BitString) -> BitString {
        assignment.prefix(self.base.variable_count())
    }

    pub fn to_dimacs(&self) -> String {
        let first = self.duplicate_vars.first().map_or(0, |&v| v + 1);
        let last = self.duplicate_vars.last().map_or(0, |&v| v + 1);
        let comments = vec![
            format!("padded: base variables 1..{}", self.base.variable_count()),
            format!("duplicates of variable {}: {}..{}", self.target_var + 1, first, last),
        ];
        self.formula.to_dimacs(&comments)
    }
}

/// Add `N = n^{⌈1/ε⌉}` copies of variable 0, each tied to it by
/// `(zⁱ ∨ ¬z ∨ ¬z) ∧ (¬zⁱ ∨ z ∨ z)`.
pub fn pad_sat(f: &CnfFormula, epsilon: f64) -> Result<PaddedFormula> {
    let n = f.variable_count();
    if n == 0 {
        return Err(HamError::InvalidParameter("formula has no variables".into()));
    }
    let copies = (n as u64)
        .checked_pow(inverse_epsilon(epsilon)?)
        .ok_or_else(|| HamError::InvalidParameter("duplicate count overflows".into()))? as usize;
    let mut formula = CnfFormula::new(n + copies);
    for c in f.clauses() {
        formula.add_clause(c.clone())?;
    }
    let z = 0;
    let duplicate_vars: Vec<usize> = (n..n + copies).collect();
    for &d in &duplicate_vars {
        formula.add_clause(vec![Literal::pos(d), Literal::neg(z), Literal::neg(z)])?;
        formula.add_clause(vec![Literal::neg(d), Literal::pos(z), Literal::pos(z)])?;
    }
    Ok(PaddedFormula { base: f.clone(), target_var: z, duplicate_vars, epsilon, formula })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MajorityDecode {
    pub value: bool,
    /// Exactly half the duplicates were set. `value` is then `true`.
    pub tie: bool,
}

pub fn decode_sat_majority(pf: &PaddedFormula, a_prime: &BitString) -> Result<MajorityDecode> {
    if a_prime.len() != pf.total_variables() {
        return Err(HamError::UnequalLengths { left: a_prime.len(), right: pf.total_variables() });
    }
    let ones = pf.duplicate_vars.iter().filter(|&&d| a_prime.get(d)).count();
    let zeros = pf.duplicate_vars.len() - ones;
    Ok(MajorityDecode { value: ones >= zeros, tie: ones == zeros })
}

/// Suggests a value for variable 0 of the given formula.
pub trait FeasibleValueOracle {
    fn feasible_value(&mut self, f: &CnfFormula) -> bool;
}

impl<F: FnMut(&CnfFormula) -> bool> FeasibleValueOracle for F {
    fn feasible_value(&mut self, f: &CnfFormula) -> bool {
        self(f)
    }
}

/// Turns a Hamming approximator for 3-SAT into a feasible-value oracle:
/// pad, approximate, decode the majority of the duplicates.
pub struct PaddedApproxOracle<A> {
    pub epsilon: f64,
    pub approximator: A,
}

impl<A: FnMut(&CnfFormula) -> BitString> FeasibleValueOracle for PaddedApproxOracle<A> {
    fn feasible_value(&mut self, f: &CnfFormula) -> bool {
        let Ok(pf) = pad_sat(f, self.epsilon) else { return true };
        let a = (self.approximator)(&pf.formula);
        decode_sat_majority(&pf, &a).map_or(true, |d| d.value)
    }
}

/// Self-reduction: fix variables one at a time to the majority of
/// `max(1, n)^repeats_exponent` oracle answers, then re-verify. `None` means
/// the final assignment did not satisfy `f`.
pub fn solve_sat_via_feasible_oracle(
    f: &CnfFormula,
    oracle: &mut dyn FeasibleValueOracle,
    repeats_exponent: u32,
) -> Option<BitString> {
    let n = f.variable_count();
    let mut current = f.clone();
    let mut assignment = Vec::with_capacity(n);
    for _ in 0..n {
        let repeats = (current.variable_count().max(1) as u64).saturating_pow(repeats_exponent).max(1);
        let trues = (0..repeats).filter(|_| oracle.feasible_value(&current)).count() as u64;
        let value = 2 * trues >= repeats;
        assignment.push(value);
        current = current.assign_first(value);
    }
    let a = BitString::new(assignment);
    f.satisfied_by(&a).then_some(a)
}

// ---------------------------------------------------------- Vertex Cover

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcGadget {
    pub base: Graph,
    pub v: usize,
    pub v_prime: usize,
    pub k: usize,
    pub k_prime: usize,
    pub g_prime: Graph,
    /// `v₁, …, v_{L−1}, v′` in path order.
    pub path: Vec<usize>,
    pub p0: BTreeSet<usize>,
    pub p1: BTreeSet<usize>,
    pub path_len: usize,
}

/// Copy `v` to `v′ = n`, then join `v` to `v′` by a path of
/// `L = 2⌈n^{1/ε}/2⌉` edges over new vertices `n+1, …, n+L−1`.
pub fn build_vc_gadget(g: &Graph, v: usize, k: usize, epsilon: f64) -> Result<VcGadget> {
    build_vc_gadget_with_path(g, v, k, 2 * ceil_pow_inv_epsilon(g.vertex_count(), epsilon)?.div_ceil(2))
}

/// As [`build_vc_gadget`] with an explicit even path length.
pub fn build_vc_gadget_with_path(g: &Graph, v: usize, k: usize, path_len: usize) -> Result<VcGadget> {
    let n = g.vertex_count();
    if v >= n {
        return Err(HamError::InvalidParameter(format!("vertex {v} out of range")));
    }
    if g.degree(v) == 0 {
        return Err(HamError::InvalidParameter(format!("vertex {v} is isolated")));
    }
    if path_len == 0 || path_len % 2 == 1 {
        return Err(HamError::InvalidParameter(format!("path length {path_len} must be positive and even")));
    }
    let v_prime = n;
    let mut g_prime = Graph::new(n + path_len);
    for (a, b) in g.edges() {
        g_prime.add_edge(a, b)?;
    }
    for u in g.neighbors(v) {
        g_prime.add_edge(v_prime, u)?;
    }
    // v = v_0, v_i = n + i for 0 < i < L, v_L = v′
    let path: Vec<usize> = (1..path_len).map(|i| n + i).chain([v_prime]).collect();
    let mut prev = v;
    for &x in &path {
        g_prime.add_edge(prev, x)?;
        prev = x;
    }
    let p0 = path.iter().skip(1).step_by(2).copied().collect();
    let p1 = path.iter().step_by(2).copied().collect();
    Ok(VcGadget { base: g.clone(), v, v_prime, k, k_prime: k + path_len / 2, g_prime, path, p0, p1, path_len })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VcCase {
    /// Some minimum cover contains `v`.
    Contains,
    /// Some minimum cover avoids `v`.
    Avoids,
}

impl VcGadget {
    /// Symmetric differences `(|C_A Δ P₀|, |C_A Δ P₁|)` over the path vertices.
    pub fn path_distances(&self, c_a: &BitString) -> (usize, usize) {
        let mut d = (0, 0);
        for &x in &self.path {
            let inside = x < c_a.len() && c_a.get(x);
            d.0 += (inside != self.p0.contains(&x)) as usize;
            d.1 += (inside != self.p1.contains(&x)) as usize;
        }
        d
    }

    pub fn sidecar_json(&self) -> String {
        #[derive(Serialize)]
        struct Sidecar<'a> {
            v: usize,
            v_prime: usize,
            p0: &'a BTreeSet<usize>,
            p1: &'a BTreeSet<usize>,
            k_prime: usize,
        }
        serde_json::to_string_pretty(&Sidecar { v: self.v, v_prime: self.v_prime, p0: &self.p0, p1: &self.p1, k_prime: self.k_prime })
            .expect("sidecar serializes")
    }
}

pub fn decode_vc_gadget(gdt: &VcGadget, c_a: &BitString) -> VcCase {
    let (d0, d1) = gdt.path_distances(c_a);
    if d0 < d1 { VcCase::Contains } else { VcCase::Avoids }
}

// --------------------------------------------------- Hamiltonian Cycle

/// A 3-SAT to directed Hamiltonian Cycle reduction in which each variable
/// owns a pair of opposite arcs `(v, v′)` and `(v′, v)`: every Hamiltonian
/// cycle uses exactly one, and the extracted assignment sets the variable
/// true exactly when it uses `(v, v′)`.
pub trait EdgePairReduction {
    fn graph(&self) -> &Digraph;
    /// `(v, v′)` for the variable, if registered.
    fn edge_pair(&self, var: usize) -> Option<(usize, usize)>;
    fn extract_assignment(&self, cycle: &BTreeSet<(usize, usize)>) -> BitString;
}

/// Hand-built reduction: a digraph with registered edge pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToyReduction {
    pub graph: Digraph,
    pub pairs: BTreeMap<usize, (usize, usize)>,
    pub variable_count: usize,
}

impl ToyReduction {
    pub fn new(graph: Digraph, variable_count: usize, pairs: impl IntoIterator<Item = (usize, (usize, usize))>) -> Result<Self> {
        let pairs: BTreeMap<_, _> = pairs.into_iter().collect();
        for (&z, &(a, b)) in &pairs {
            if z >= variable_count || !graph.has_edge(a, b) || !graph.has_edge(b, a) {
                return Err(HamError::InvalidParameter(format!("variable {z}: pair ({a}, {b}) is not a registered arc pair")));
            }
        }
        Ok(Self { graph, pairs, variable_count })
    }
}

impl EdgePairReduction for ToyReduction {
    fn graph(&self) -> &Digraph {
        &self.graph
    }

    fn edge_pair(&self, var: usize) -> Option<(usize, usize)> {
        self.pairs.get(&var).copied()
    }

    fn extract_assignment(&self, cycle: &BTreeSet<(usize, usize)>) -> BitString {
        (0..self.variable_count).map(|z| self.pairs.get(&z).is_some_and(|p| cycle.contains(p))).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcGadget {
    pub target_var: usize,
    pub v: usize,
    pub v_prime: usize,
    pub g_prime: Digraph,
    /// `v → v₁ → … → v_k → v′`.
    pub p0: BTreeSet<(usize, usize)>,
    /// `v′ → v_k → … → v₁ → v`.
    pub p1: BTreeSet<(usize, usize)>,
    pub k: usize,
}

/// Replace the arc pair of `z` by two opposite paths over
/// `k = ⌈|E|^{1/ε}/2⌉` shared new vertices.
pub fn build_hc_gadget(red: &dyn EdgePairReduction, z: usize, epsilon: f64) -> Result<HcGadget> {
    let k = ceil_pow_inv_epsilon(red.graph().edge_count(), epsilon)?.div_ceil(2);
    build_hc_gadget_with_interior(red, z, k)
}

/// As [`build_hc_gadget`] with an explicit interior vertex count `k ≥ 1`.
pub fn build_hc_gadget_with_interior(red: &dyn EdgePairReduction, z: usize, k: usize) -> Result<HcGadget> {
    let (v, v_prime) = red
        .edge_pair(z)
        .ok_or_else(|| HamError::InvalidParameter(format!("variable {z} has no registered edge pair")))?;
    if k == 0 {
        return Err(HamError::InvalidParameter("need at least one interior vertex".into()));
    }
    let mut g_prime = red.graph().clone();
    g_prime.remove_edge(v, v_prime);
    g_prime.remove_edge(v_prime, v);
    let interior: Vec<usize> = (0..k).map(|_| g_prime.add_vertex()).collect();
    let chain: Vec<usize> = std::iter::once(v).chain(interior).chain([v_prime]).collect();
    let mut p0 = BTreeSet::new();
    let mut p1 = BTreeSet::new();
    for w in chain.windows(2) {
        g_prime.add_edge(w[0], w[1])?;
        g_prime.add_edge(w[1], w[0])?;
        p0.insert((w[0], w[1]));
        p1.insert((w[1], w[0]));
    }
    Ok(HcGadget { target_var: z, v, v_prime, g_prime, p0, p1, k })
}

impl HcGadget {
    /// Symmetric differences `(|P′ Δ P₀|, |P′ Δ P₁|)` over the duplicate arcs.
    pub fn duplicate_distances(&self, p_prime: &BTreeSet<(usize, usize)>) -> (usize, usize) {
        let mut d = (0, 0);
        for arc in self.p0.iter().chain(&self.p1) {
            let inside = p_prime.contains(arc);
            d.0 += (inside != self.p0.contains(arc)) as usize;
            d.1 += (inside != self.p1.contains(arc)) as usize;
        }
        d
    }

    pub fn sidecar_json(&self) -> String {
        #[derive(Serialize)]
        struct Sidecar<'a> {
            variable: usize,
            v: usize,
            v_prime: usize,
            p0: &'a BTreeSet<(usize, usize)>,
            p1: &'a BTreeSet<(usize, usize)>,
            k: usize,
        }
        serde_json::to_string_pretty(&Sidecar {
            variable: self.target_var,
            v: self.v,
            v_prime: self.v_prime,
            p0: &self.p0,
            p1: &self.p1,
            k: self.k,
        })
        .expect("sidecar serializes")
    }
}

pub fn decode_hc_gadget(gdt: &HcGadget, p_prime: &BTreeSet<(usize, usize)>) -> bool {
    let (d0, d1) = gdt.duplicate_distances(p_prime);
    d0 < d1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn two_var() -> CnfFormula {
        CnfFormula::from_clauses(2, [vec![Literal::pos(0), Literal::pos(1), Literal::pos(1)]]).unwrap()
    }

    #[test]
    fn pad_sizes() {
        let pf = pad_sat(&two_var(), 0.5).unwrap();
        assert_eq!(pf.duplicate_vars, vec![2, 3, 4, 5]);
        assert_eq!(pf.total_variables(), 6);
        assert_eq!(pf.formula.clauses().len(), 1 + 8);
        assert!(pf.formula.is_three_cnf());

        let one = CnfFormula::from_clauses(1, [vec![Literal::pos(0); 3]]).unwrap();
        assert_eq!(pad_sat(&one, 1.0).unwrap().total_variables(), 2);
        assert!(pad_sat(&CnfFormula::new(0), 0.5).is_err());
        assert!(pad_sat(&one, 0.0).is_err());
        assert!(pad_sat(&one, 1.5).is_err());
    }

    #[test]
    fn epsilon_rounding() {
        assert_eq!(inverse_epsilon(0.1).unwrap(), 10);
        assert_eq!(inverse_epsilon(0.4).unwrap(), 3);
        assert_eq!(ceil_pow_inv_epsilon(3, 0.5).unwrap(), 9);
        assert_eq!(ceil_pow_inv_epsilon(4, 2.0 / 3.0).unwrap(), 8);
        assert_eq!(compliant_budget(36, 0.5), Some(12));
        assert_eq!(compliant_budget(2, 1.0), None);
    }

    #[test]
    fn extend_satisfies_padding() {
        let pf = pad_sat(&two_var(), 0.5).unwrap();
        let w = pf.extend(&bs("10"));
        assert_eq!(w, bs("101111"));
        assert!(pf.formula.satisfied_by(&w));
        assert!(!pf.formula.satisfied_by(&bs("101101")));
        assert_eq!(pf.project(&w), bs("10"));
        let text = pf.to_dimacs();
        assert!(text.contains("duplicates of variable 1: 3..6"));
        assert_eq!(CnfFormula::parse_dimacs(&text).unwrap(), pf.formula);
    }

    #[test]
    fn majority_decoding() {
        let pf = pad_sat(&two_var(), 0.5).unwrap();
        assert_eq!(decode_sat_majority(&pf, &bs("001101")).unwrap(), MajorityDecode { value: true, tie: false });
        assert_eq!(decode_sat_majority(&pf, &bs("110000")).unwrap(), MajorityDecode { value: false, tie: false });
        assert_eq!(decode_sat_majority(&pf, &bs("000011")).unwrap(), MajorityDecode { value: true, tie: true });
        assert!(decode_sat_majority(&pf, &bs("00")).is_err());
    }

    #[test]
    fn self_reduction_with_perfect_oracle() {
        // x0 must be false, x1 must be true
        let f = CnfFormula::from_clauses(
            2,
            [vec![Literal::neg(0), Literal::neg(0), Literal::neg(0)], vec![Literal::pos(1), Literal::pos(0), Literal::pos(0)]],
        )
        .unwrap();
        let mut perfect = |g: &CnfFormula| {
            let fixed = g.assign_first(true);
            (0..1u64 << fixed.variable_count()).any(|x| fixed.satisfied_by(&BitString::from_u64(x, fixed.variable_count())))
        };
        assert_eq!(solve_sat_via_feasible_oracle(&f, &mut perfect, 1), Some(bs("01")));

        let unsat = CnfFormula::from_clauses(1, [vec![Literal::pos(0); 3], vec![Literal::neg(0); 3]]).unwrap();
        assert_eq!(solve_sat_via_feasible_oracle(&unsat, &mut perfect, 1), None);
    }

    fn single_edge_gadget() -> VcGadget {
        build_vc_gadget(&Graph::from_edges(2, [(0, 1)]).unwrap(), 1, 1, 1.0).unwrap()
    }

    #[test]
    fn vc_gadget_single_edge() {
        let g = single_edge_gadget();
        assert_eq!(g.path_len, 2);
        assert_eq!(g.g_prime.vertex_count(), 4);
        assert_eq!(g.k_prime, 2);
        assert_eq!(g.v_prime, 2);
        assert_eq!(g.p0, BTreeSet::from([2]));
        assert_eq!(g.p1, BTreeSet::from([3]));
        assert!(g.g_prime.is_vertex_cover(&BitString::from_positions(4, [1, 2])));
        assert!(g.g_prime.is_vertex_cover(&BitString::from_positions(4, [0, 3])));
    }

    #[test]
    fn vc_path_alternation() {
        let g = build_vc_gadget_with_path(&Graph::path(3), 1, 1, 6).unwrap();
        assert_eq!(g.path, vec![4, 5, 6, 7, 8, 3]);
        assert_eq!(g.p1, BTreeSet::from([4, 6, 8]));
        assert_eq!(g.p0, BTreeSet::from([5, 7, 3]));
        assert_eq!(g.k_prime, 4);
        assert!(g.sidecar_json().contains("\"k_prime\": 4"));
    }

    #[test]
    fn vc_decoder_examples() {
        let g = single_edge_gadget();
        let contains = BitString::from_positions(4, [1, 2]);
        assert_eq!(g.path_distances(&contains), (0, 2));
        assert_eq!(decode_vc_gadget(&g, &contains), VcCase::Contains);
        let avoids = BitString::from_positions(4, [0, 3]);
        assert_eq!(g.path_distances(&avoids), (2, 0));
        assert_eq!(decode_vc_gadget(&g, &avoids), VcCase::Avoids);
    }

    #[test]
    fn vc_gadget_errors() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(build_vc_gadget(&g, 2, 1, 1.0).is_err());
        assert!(build_vc_gadget(&g, 5, 1, 1.0).is_err());
        assert!(build_vc_gadget_with_path(&g, 0, 1, 3).is_err());
    }

    /// a→v→v′→b→a plus the back arc v′→v; only the forward cycle exists.
    fn one_way_toy() -> ToyReduction {
        let (a, v, vp, b) = (0, 1, 2, 3);
        let g = Digraph::from_edges(4, [(a, v), (v, vp), (vp, b), (b, a), (vp, v)]).unwrap();
        ToyReduction::new(g, 1, [(0, (v, vp))]).unwrap()
    }

    #[test]
    fn hc_gadget_toy() {
        let red = one_way_toy();
        let gdt = build_hc_gadget_with_interior(&red, 0, 2).unwrap();
        assert_eq!(gdt.p0, BTreeSet::from([(1, 4), (4, 5), (5, 2)]));
        assert_eq!(gdt.p1, BTreeSet::from([(2, 5), (5, 4), (4, 1)]));
        assert_eq!(gdt.p0.len() + gdt.p1.len(), 6);
        assert_eq!(gdt.g_prime.edge_count(), 5 - 2 + 6);
        assert!(!gdt.g_prime.has_edge(1, 2));
        let cycle: BTreeSet<_> = [(0, 1), (1, 4), (4, 5), (5, 2), (2, 3), (3, 0)].into();
        assert!(gdt.g_prime.is_hamiltonian_cycle(&cycle));
        assert!(decode_hc_gadget(&gdt, &cycle));
        assert!(decode_hc_gadget(&gdt, &gdt.p0));
        assert!(!decode_hc_gadget(&gdt, &gdt.p1));
        assert!(gdt.sidecar_json().contains("\"k\": 2"));
    }

    #[test]
    fn hc_gadget_epsilon_sizing() {
        let red = one_way_toy();
        let gdt = build_hc_gadget(&red, 0, 0.5).unwrap();
        // |E| = 5, ⌈25 / 2⌉ = 13
        assert_eq!(gdt.k, 13);
        assert_eq!(gdt.g_prime.edge_count(), 5 + 2 * 13);
        assert!(build_hc_gadget(&red, 1, 0.5).is_err());
    }

    #[test]
    fn toy_extraction() {
        let red = one_way_toy();
        let cycle: BTreeSet<_> = [(0, 1), (1, 2), (2, 3), (3, 0)].into();
        assert!(red.graph().is_hamiltonian_cycle(&cycle));
        assert_eq!(red.extract_assignment(&cycle), bs("1"));
        assert!(ToyReduction::new(red.graph.clone(), 1, [(0, (0, 1))]).is_err());
    }
}

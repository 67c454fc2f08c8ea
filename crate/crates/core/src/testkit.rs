//! Brute-force oracles and seeded instance generators.
//!
//! Everything here scans explicitly and shares no counting code with the
//! ball, decider or approximator modules, so agreement between the two is a
//! real cross-check.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::cnf::{CnfFormula, Literal};
use crate::error::{HamError, Result};
use crate::gadgets::{FeasibleValueOracle, ToyReduction};
use crate::graph::{Digraph, Graph};
use crate::seed::{rng_from_seed, trial_seed};
use crate::verifier::Verifier;

pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 22;

fn check_cap(bits: usize, cap: u64) -> Result<u64> {
    let needed = if bits >= 64 { None } else { Some(1u64 << bits) };
    match needed {
        Some(x) if x <= cap => Ok(x),
        _ => Err(HamError::CapExceeded { needed: format!("2^{bits}"), cap }),
    }
}

/// MSB-first `len`-bit string of `x`.
fn bits_of(x: u64, len: usize) -> BitString {
    (0..len).map(|i| (x >> (len - 1 - i)) & 1 == 1).collect()
}

fn value_of(s: &BitString) -> u64 {
    s.iter().fold(0, |acc, b| (acc << 1) | b as u64)
}

/// All accepted strings in lexicographic order.
pub fn enumerate_witnesses(v: &dyn Verifier, cap: u64) -> Result<Vec<BitString>> {
    let n = v.witness_length();
    let total = check_cap(n, cap)?;
    Ok((0..total).map(|x| bits_of(x, n)).filter(|w| v.accepts(w)).collect())
}

pub fn nearest_witness_distance(a: &BitString, v: &dyn Verifier, cap: u64) -> Result<Option<usize>> {
    if a.len() != v.witness_length() {
        return Err(HamError::UnequalLengths { left: a.len(), right: v.witness_length() });
    }
    let witnesses = enumerate_witnesses(v, cap)?;
    Ok(witnesses.iter().map(|w| a.iter().zip(w.iter()).filter(|(x, y)| x != y).count()).min())
}

fn subsets_where(n: usize, keep: impl Fn(&BitString) -> bool) -> Result<Vec<BitString>> {
    if n > 20 {
        return Err(HamError::CapExceeded { needed: format!("2^{n}"), cap: 1 << 20 });
    }
    Ok((0..1u64 << n).map(|x| bits_of(x, n)).filter(|s| keep(s)).collect())
}

fn extremal(sets: Vec<BitString>, minimize: bool) -> (usize, Vec<BitString>) {
    let best = if minimize {
        sets.iter().map(BitString::weight).min()
    } else {
        sets.iter().map(BitString::weight).max()
    }
    .unwrap_or(0);
    let mut chosen: Vec<_> = sets.into_iter().filter(|s| s.weight() == best).collect();
    chosen.sort();
    (best, chosen)
}

fn covers(g: &Graph, s: &BitString) -> bool {
    g.edges().all(|(u, v)| s.get(u) || s.get(v))
}

/// Size of a minimum vertex cover and all covers of that size, sorted.
pub fn min_vertex_covers_exact(g: &Graph) -> Result<(usize, Vec<BitString>)> {
    Ok(extremal(subsets_where(g.vertex_count(), |s| covers(g, s))?, true))
}

pub fn max_independent_sets_exact(g: &Graph) -> Result<(usize, Vec<BitString>)> {
    let independent = |s: &BitString| g.edges().all(|(u, v)| !(s.get(u) && s.get(v)));
    Ok(extremal(subsets_where(g.vertex_count(), independent)?, false))
}

pub fn max_cliques_exact(g: &Graph) -> Result<(usize, Vec<BitString>)> {
    let n = g.vertex_count();
    let clique = |s: &BitString| (0..n).all(|u| (u + 1..n).all(|v| !(s.get(u) && s.get(v)) || g.has_edge(u, v)));
    Ok(extremal(subsets_where(n, clique)?, false))
}

/// All vertex covers of size at most `k`.
pub fn vertex_covers_upto(g: &Graph, k: usize) -> Result<Vec<BitString>> {
    subsets_where(g.vertex_count(), |s| s.weight() <= k && covers(g, s))
}

/// Minimum doubled cost over all `{0, ½, 1}` feasible vectors, and every
/// vector attaining it.
pub fn half_integral_optimum_exact(g: &Graph) -> Result<(usize, Vec<Vec<u8>>)> {
    let n = g.vertex_count();
    if n > 12 {
        return Err(HamError::CapExceeded { needed: format!("3^{n}"), cap: 3u64.pow(12) });
    }
    let mut best = usize::MAX;
    let mut all = Vec::new();
    let mut y = vec![0u8; n];
    loop {
        if g.edges().all(|(u, v)| y[u] + y[v] >= 2) {
            let cost: usize = y.iter().map(|&x| x as usize).sum();
            if cost < best {
                best = cost;
                all.clear();
            }
            if cost == best {
                all.push(y.clone());
            }
        }
        // base-3 increment
        let mut i = 0;
        while i < n && y[i] == 2 {
            y[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        y[i] += 1;
    }
    Ok((best, all))
}

/// Members of the radius-`d` ball around `a` among the first `u` strings of
/// length `n_u`, by direct scan.
pub fn ball_members_bruteforce(n_u: usize, a: &BitString, d: usize, u: u64) -> Result<Vec<BitString>> {
    if n_u > 22 {
        return Err(HamError::CapExceeded { needed: format!("2^{n_u}"), cap: 1 << 22 });
    }
    if a.len() != n_u {
        return Err(HamError::UnequalLengths { left: a.len(), right: n_u });
    }
    let center = value_of(a);
    let limit = u.min(1u64 << n_u);
    Ok((0..limit).filter(|x| (x ^ center).count_ones() as usize <= d).map(|x| bits_of(x, n_u)).collect())
}

pub fn sat_solutions(f: &CnfFormula, cap: u64) -> Result<Vec<BitString>> {
    let n = f.variable_count();
    let total = check_cap(n, cap)?;
    Ok((0..total).map(|x| bits_of(x, n)).filter(|a| f.satisfied_by(a)).collect())
}

pub fn is_satisfiable(f: &CnfFormula, cap: u64) -> Result<bool> {
    let n = f.variable_count();
    let total = check_cap(n, cap)?;
    Ok((0..total).any(|x| f.satisfied_by(&bits_of(x, n))))
}

/// Whether `true` and `false` are feasible for variable 0.
pub fn feasible_values(f: &CnfFormula, cap: u64) -> Result<(bool, bool)> {
    let sols = sat_solutions(f, cap)?;
    Ok((sols.iter().any(|s| s.get(0)), sols.iter().any(|s| !s.get(0))))
}

/// All directed Hamiltonian cycles, each as its arc set, sorted.
///
/// Plain backtracking from vertex 0: cost grows with branching, not size, so
/// long forced chains are cheap.
pub fn hamiltonian_cycles_exact(g: &Digraph) -> Vec<BTreeSet<(usize, usize)>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let succ: Vec<Vec<usize>> = (0..n).map(|v| g.successors(v).collect()).collect();
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn dfs(succ: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<BTreeSet<(usize, usize)>>) {
        let last = *path.last().expect("path starts at 0");
        if path.len() == used.len() {
            if succ[last].contains(&0) {
                let mut arcs: BTreeSet<_> = path.windows(2).map(|w| (w[0], w[1])).collect();
                arcs.insert((last, 0));
                out.push(arcs);
            }
            return;
        }
        for &next in &succ[last] {
            if !used[next] {
                used[next] = true;
                path.push(next);
                dfs(succ, path, used, out);
                path.pop();
                used[next] = false;
            }
        }
    }
    dfs(&succ, &mut path, &mut used, &mut out);
    out.sort();
    out
}

/// Flip `count` distinct positions chosen uniformly.
pub fn corrupt<R: Rng + ?Sized>(w: &BitString, count: usize, rng: &mut R) -> BitString {
    let mut out = w.clone();
    let mut positions: Vec<usize> = (0..w.len()).collect();
    positions.shuffle(rng);
    for &i in positions.iter().take(count) {
        out.flip(i);
    }
    out
}

// ------------------------------------------------------------ oracles

/// Answers with a truly feasible value for variable 0, preferring `true`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PerfectFeasibleOracle;

impl FeasibleValueOracle for PerfectFeasibleOracle {
    fn feasible_value(&mut self, f: &CnfFormula) -> bool {
        if f.variable_count() == 0 {
            return true;
        }
        let with_true = f.assign_first(true);
        is_satisfiable(&with_true, u64::MAX).expect("no cap")
    }
}

/// A perfect oracle whose answer is flipped with probability `1 − p`.
pub struct NoisyFeasibleOracle<R> {
    pub p_correct: f64,
    pub rng: R,
}

impl<R: Rng> FeasibleValueOracle for NoisyFeasibleOracle<R> {
    fn feasible_value(&mut self, f: &CnfFormula) -> bool {
        let truth = PerfectFeasibleOracle.feasible_value(f);
        if self.rng.gen_bool(self.p_correct) { truth } else { !truth }
    }
}

// --------------------------------------------------------- generators

fn random_clause<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Literal> {
    let vars: Vec<usize> = if n >= 3 {
        rand::seq::index::sample(rng, n, 3).into_vec()
    } else {
        (0..3).map(|_| rng.gen_range(0..n)).collect()
    };
    vars.into_iter().map(|v| Literal { var: v, positive: rng.gen() }).collect()
}

/// Uniform random 3-CNF: three distinct variables per clause when `n ≥ 3`.
pub fn random_3cnf(n: usize, m: usize, seed: u64) -> CnfFormula {
    assert!(n > 0 || m == 0, "clauses need variables");
    let mut rng = rng_from_seed(seed);
    CnfFormula::from_clauses(n, (0..m).map(|_| random_clause(n, &mut rng))).expect("variables in range")
}

/// Random 3-CNF satisfied by a hidden uniform assignment, returned alongside.
pub fn random_planted_3cnf(n: usize, m: usize, seed: u64) -> (CnfFormula, BitString) {
    planted(n, m, seed, |f, a| f.satisfied_by(a))
}

/// Random 3-CNF that a hidden assignment NAE-satisfies.
pub fn random_nae3sat(n: usize, m: usize, seed: u64) -> (CnfFormula, BitString) {
    planted(n, m, seed, |f, a| f.nae_satisfied_by(a))
}

fn planted(n: usize, m: usize, seed: u64, ok: impl Fn(&CnfFormula, &BitString) -> bool) -> (CnfFormula, BitString) {
    assert!(n > 0, "planting needs variables");
    let mut rng = rng_from_seed(seed);
    let hidden = BitString::random(n, &mut rng);
    let mut f = CnfFormula::new(n);
    while f.clauses().len() < m {
        let clause = random_clause(n, &mut rng);
        let single = CnfFormula::from_clauses(n, [clause.clone()]).expect("variables in range");
        if ok(&single, &hidden) {
            f.add_clause(clause).expect("variables in range");
        }
    }
    (f, hidden)
}

/// `G(n, p)`: each pair independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let p = p.clamp(0.0, 1.0);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct endpoints");
            }
        }
    }
    g
}

// ----------------------------------------------------- toy reductions

/// `a → v → v′ → b → a` plus the back arc `v′ → v`, with `(v, v′)` as the
/// pair of variable 0. Only the forward orientation is Hamiltonian.
pub fn one_way_reduction() -> ToyReduction {
    let g = Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 1)]).expect("valid arcs");
    ToyReduction::new(g, 1, [(0, (1, 2))]).expect("registered pair")
}

/// Four vertices where both `a v v′ b` and `a v′ v b` are Hamiltonian.
pub fn two_way_reduction() -> ToyReduction {
    let g = Digraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 1), (1, 3)]).expect("valid arcs");
    ToyReduction::new(g, 1, [(0, (1, 2))]).expect("registered pair")
}

/// A ring of hubs `h_0 … h_{m−1}` with one gadget `h_i → {x_i, y_i} → h_{i+1}`
/// per variable. Passing `x_i → y_i` sets variable `i` true. `Some(b)` drops
/// the entry arc that would allow `¬b`.
pub fn ladder_reduction(forced: &[Option<bool>]) -> ToyReduction {
    let m = forced.len();
    assert!(m > 0, "ladder needs a variable");
    let mut g = Digraph::new(3 * m);
    let mut pairs = Vec::new();
    for (i, f) in forced.iter().enumerate() {
        let (h, next) = (i, (i + 1) % m);
        let (x, y) = (m + 2 * i, m + 2 * i + 1);
        let arcs = [(x, y), (y, x), (x, next), (y, next)];
        for (a, b) in arcs {
            g.add_edge(a, b).expect("valid arc");
        }
        if *f != Some(false) {
            g.add_edge(h, x).expect("valid arc");
        }
        if *f != Some(true) {
            g.add_edge(h, y).expect("valid arc");
        }
        pairs.push((i, (x, y)));
    }
    ToyReduction::new(g, m, pairs).expect("registered pairs")
}

/// The hand-built reductions used by the gadget suites.
pub fn toy_reduction_corpus() -> Vec<ToyReduction> {
    vec![
        one_way_reduction(),
        two_way_reduction(),
        ladder_reduction(&[None]),
        ladder_reduction(&[None, None]),
        ladder_reduction(&[None, Some(false)]),
        ladder_reduction(&[Some(true), None, Some(false)]),
    ]
}

// ------------------------------------------------------------- corpus

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceSpec {
    Cnf { n: usize, m: usize },
    PlantedCnf { n: usize, m: usize },
    Nae { n: usize, m: usize },
    Graph { n: usize, p: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Cnf { formula: CnfFormula, planted: Option<BitString> },
    Graph(Graph),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub seed: u64,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub seed: u64,
    pub instances: Vec<Instance>,
}

impl Corpus {
    /// Instance `i` is generated from `trial_seed(seed, i)`.
    pub fn generate(seed: u64, specs: &[InstanceSpec]) -> Self {
        let instances = specs
            .iter()
            .enumerate()
            .map(|(i, &spec)| {
                let s = trial_seed(seed, i as u64);
                let payload = match spec {
                    InstanceSpec::Cnf { n, m } => Payload::Cnf { formula: random_3cnf(n, m, s), planted: None },
                    InstanceSpec::PlantedCnf { n, m } => {
                        let (formula, a) = random_planted_3cnf(n, m, s);
                        Payload::Cnf { formula, planted: Some(a) }
                    }
                    InstanceSpec::Nae { n, m } => {
                        let (formula, a) = random_nae3sat(n, m, s);
                        Payload::Cnf { formula, planted: Some(a) }
                    }
                    InstanceSpec::Graph { n, p } => Payload::Graph(random_graph(n, p, s)),
                };
                Instance { spec, seed: s, payload }
            })
            .collect();
        Self { seed, instances }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("corpus serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HamError::Parse { line: e.line(), msg: e.to_string() })
    }
}

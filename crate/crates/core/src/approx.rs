//! `n/2`-Hamming-approximation algorithms for natural verifiers, and the
//! black-box baselines for arbitrary verifiers.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::cnf::CnfFormula;
use crate::combinatorics::binomial_prefix_sum;
use crate::error::{HamError, Result};
use crate::graph::Graph;
use crate::matching::konig_cover;
use crate::seed::rng_from_seed;
use crate::verifier::Verifier;

/// For subset verifiers with a size bound `k`: `0^n` when `k ≤ n/2`, else `1^n`.
pub fn halfsplit_decision_approx(n: usize, k: usize) -> Result<BitString> {
    if k > n {
        return Err(HamError::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    Ok(if 2 * k <= n { BitString::zeros(n) } else { BitString::ones(n) })
}

/// The all-false assignment. NAE solutions come in complementary pairs, so
/// one of each pair is within `n/2` of it.
pub fn nae3sat_allfalse(f: &CnfFormula) -> BitString {
    BitString::zeros(f.variable_count())
}

/// Vertex-cover LP solution with entries in `{0, ½, 1}`, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfIntegralSolution {
    doubled: Vec<u8>,
}

impl HalfIntegralSolution {
    pub fn from_doubled(doubled: Vec<u8>) -> Self {
        assert!(doubled.iter().all(|&x| x <= 2));
        Self { doubled }
    }

    pub fn doubled(&self) -> &[u8] {
        &self.doubled
    }

    pub fn value(&self, v: usize) -> f64 {
        self.doubled[v] as f64 / 2.0
    }

    /// Twice the LP cost.
    pub fn cost_halves(&self) -> usize {
        self.doubled.iter().map(|&x| x as usize).sum()
    }

    pub fn cost(&self) -> f64 {
        self.cost_halves() as f64 / 2.0
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.doubled.len() == g.vertex_count() && g.edges().all(|(u, v)| self.doubled[u] + self.doubled[v] >= 2)
    }

    /// Vertices at value 1.
    pub fn ones(&self) -> BitString {
        self.doubled.iter().map(|&x| x == 2).collect()
    }

    /// Vertices with positive value.
    pub fn support(&self) -> BitString {
        self.doubled.iter().map(|&x| x > 0).collect()
    }
}

/// Optimal half-integral vertex-cover LP solution with the Nemhauser–Trotter
/// property, via a minimum vertex cover of the bipartite double cover.
///
/// Each edge `{u, v}` becomes `(u_L, v_R)` and `(v_L, u_R)`; König's theorem
/// gives a minimum cover `x` of that graph, and `y_v = (x_{v_L} + x_{v_R}) / 2`.
pub fn half_integral_lp_optimum(g: &Graph) -> HalfIntegralSolution {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let cover = konig_cover(n, &adj);
    let doubled = (0..n).map(|v| cover.left[v] as u8 + cover.right[v] as u8).collect();
    let y = HalfIntegralSolution { doubled };
    debug_assert_eq!(y.cost_halves(), cover.matching_size);
    y
}

/// Support of the half-integral optimum: contains a minimum cover `C*` with
/// `|C*| ≥ |S|/2`, hence within `n/2` of it.
pub fn nt_vertex_cover_approx(g: &Graph) -> BitString {
    half_integral_lp_optimum(g).support()
}

pub fn nt_independent_set_approx(g: &Graph) -> BitString {
    nt_vertex_cover_approx(g).complement()
}

pub fn nt_clique_approx(g: &Graph) -> BitString {
    nt_independent_set_approx(&g.complement())
}

/// Visits every `n`-bit string of weight `w` in lexicographic order of the
/// chosen positions. Stops early when `visit` returns `false`.
pub(crate) fn for_each_weight(n: usize, w: usize, mut visit: impl FnMut(&BitString) -> bool) {
    if w > n {
        return;
    }
    let mut positions: Vec<usize> = (0..w).collect();
    loop {
        if !visit(&BitString::from_positions(n, positions.iter().copied())) {
            return;
        }
        // advance to the next combination
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if positions[i] < n - w + i {
                positions[i] += 1;
                for j in i + 1..w {
                    positions[j] = positions[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Query every string with at most `c` ones; return the first accepted one,
/// else `1^n`. Errors when that is more than `budget` queries.
pub fn deterministic_lowweight_baseline(v: &dyn Verifier, c: usize, budget: u64) -> Result<BitString> {
    let n = v.witness_length();
    let needed = binomial_prefix_sum(n as u64, c as u64);
    if needed > BigUint::from(budget) {
        return Err(HamError::CapExceeded { needed: needed.to_string(), cap: budget });
    }
    let mut found = None;
    for w in 0..=c.min(n) {
        for_each_weight(n, w, |s| {
            if v.accepts(s) {
                found = Some(s.clone());
                false
            } else {
                true
            }
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found.unwrap_or_else(|| BitString::ones(n)))
}

/// `n` uniform bits from a seeded generator.
pub fn randomized_baseline(n: usize, seed: u64) -> BitString {
    BitString::random(n, &mut rng_from_seed(seed))
}

/// A black-box algorithm: it sees the verifier only through accept queries.
pub trait QueryStrategy {
    fn play(&mut self, n: usize, query: &mut dyn FnMut(&BitString) -> bool) -> BitString;
}

/// Fixed queries, then a fixed answer.
#[derive(Debug, Clone)]
pub struct ScriptedStrategy {
    pub queries: Vec<BitString>,
    pub output: BitString,
}

impl QueryStrategy for ScriptedStrategy {
    fn play(&mut self, _n: usize, query: &mut dyn FnMut(&BitString) -> bool) -> BitString {
        for q in &self.queries {
            if query(q) {
                return q.clone();
            }
        }
        self.output.clone()
    }
}

/// The low-weight baseline as a query strategy.
#[derive(Debug, Clone, Copy)]
pub struct LowWeightStrategy {
    pub c: usize,
}

impl QueryStrategy for LowWeightStrategy {
    fn play(&mut self, n: usize, query: &mut dyn FnMut(&BitString) -> bool) -> BitString {
        let mut found = None;
        for w in 0..=self.c.min(n) {
            for_each_weight(n, w, |s| {
                if query(s) {
                    found = Some(s.clone());
                }
                found.is_none()
            });
            if let Some(f) = found {
                return f;
            }
        }
        BitString::ones(n)
    }
}

/// Queries `budget` random strings, then outputs a random string.
#[derive(Debug, Clone)]
pub struct RandomStrategy {
    pub budget: usize,
    pub seed: u64,
}

impl QueryStrategy for RandomStrategy {
    fn play(&mut self, n: usize, query: &mut dyn FnMut(&BitString) -> bool) -> BitString {
        let mut rng = rng_from_seed(self.seed);
        for _ in 0..self.budget {
            let q = BitString::random(n, &mut rng);
            if query(&q) {
                return q;
            }
        }
        BitString::random(n, &mut rng)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameResult {
    /// Distinct strings queried.
    pub query_count: usize,
    /// `n − c + 1` when the adversary could plant a witness that far away,
    /// 0 otherwise.
    pub achieved_distance: usize,
    /// Every string at distance `n − c + 1` was queried.
    pub adversary_loss: bool,
    pub output: BitString,
    pub planted: Option<BitString>,
}

/// Answer "no" to every query, then plant the witness at an unqueried string
/// at distance `n − c + 1` from the output if one exists.
pub fn adversary_game(strategy: &mut dyn QueryStrategy, n: usize, c: usize) -> Result<GameResult> {
    if c == 0 || c > n + 1 {
        return Err(HamError::InvalidParameter(format!("need 1 <= c <= n + 1, got c = {c}, n = {n}")));
    }
    let mut queried: HashSet<BitString> = HashSet::new();
    let output = strategy.play(n, &mut |w: &BitString| {
        queried.insert(w.clone());
        false
    });
    if output.len() != n {
        return Err(HamError::UnequalLengths { left: output.len(), right: n });
    }
    let target = n + 1 - c;
    let mut planted = None;
    for_each_weight(n, target, |flips| {
        let candidate: BitString = output.iter().zip(flips.iter()).map(|(a, f)| a ^ f).collect();
        if queried.contains(&candidate) {
            true
        } else {
            planted = Some(candidate);
            false
        }
    });
    Ok(GameResult {
        query_count: queried.len(),
        achieved_distance: if planted.is_some() { target } else { 0 },
        adversary_loss: planted.is_none(),
        output,
        planted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::hamming_distance;
    use crate::cnf::Literal;
    use crate::verifier::SetVerifier;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn halfsplit_examples() {
        assert_eq!(halfsplit_decision_approx(4, 1).unwrap(), bs("0000"));
        assert_eq!(halfsplit_decision_approx(4, 3).unwrap(), bs("1111"));
        let a = halfsplit_decision_approx(6, 3).unwrap();
        assert_eq!(a, bs("000000"));
        assert_eq!(hamming_distance(&a, &bs("101010")).unwrap(), 3);
        assert!(halfsplit_decision_approx(3, 4).is_err());
    }

    #[test]
    fn nae_complement_pairs() {
        let f = CnfFormula::from_clauses(4, [vec![Literal::pos(0), Literal::pos(1), Literal::pos(2)]]).unwrap();
        assert_eq!(nae3sat_allfalse(&f), bs("0000"));
        let w = bs("1101");
        assert!(f.nae_satisfied_by(&w));
        assert!(f.nae_satisfied_by(&w.complement()));
        let zero = nae3sat_allfalse(&f);
        let best = hamming_distance(&zero, &w).unwrap().min(hamming_distance(&zero, &w.complement()).unwrap());
        assert_eq!(best, 1);
    }

    #[test]
    fn lp_examples() {
        let empty = half_integral_lp_optimum(&Graph::new(4));
        assert_eq!(empty.doubled(), &[0, 0, 0, 0]);
        let k3 = half_integral_lp_optimum(&Graph::complete(3));
        assert_eq!(k3.doubled(), &[1, 1, 1]);
        assert_eq!(k3.cost(), 1.5);
        let star = half_integral_lp_optimum(&Graph::star(3));
        assert_eq!(star.doubled(), &[2, 0, 0, 0]);
        assert_eq!(star.cost(), 1.0);
    }

    #[test]
    fn nt_examples() {
        assert_eq!(nt_vertex_cover_approx(&Graph::complete(3)), bs("111"));
        assert_eq!(nt_vertex_cover_approx(&Graph::star(3)), bs("1000"));
        assert_eq!(nt_vertex_cover_approx(&Graph::new(5)), bs("00000"));
        assert_eq!(nt_independent_set_approx(&Graph::complete(3)), bs("000"));
        assert_eq!(nt_independent_set_approx(&Graph::new(5)), bs("11111"));
        assert_eq!(nt_independent_set_approx(&Graph::star(3)), bs("0111"));
        assert_eq!(nt_clique_approx(&Graph::complete(4)), bs("1111"));
        assert_eq!(nt_clique_approx(&Graph::new(3)), bs("000"));
    }

    #[test]
    fn weight_enumeration_counts() {
        for n in 0..8 {
            for w in 0..=n + 1 {
                let mut seen = Vec::new();
                for_each_weight(n, w, |s| {
                    assert_eq!(s.weight(), w);
                    seen.push(s.clone());
                    true
                });
                let expected = crate::combinatorics::binomial(n as u64, w as u64);
                assert_eq!(BigUint::from(seen.len()), expected);
                let unique: HashSet<_> = seen.iter().collect();
                assert_eq!(unique.len(), seen.len());
            }
        }
    }

    #[test]
    fn lowweight_examples() {
        let only_zero = SetVerifier::new(3, [bs("000")]);
        assert_eq!(deterministic_lowweight_baseline(&only_zero, 1, 100).unwrap(), bs("000"));
        let heavy = SetVerifier::new(3, [bs("110")]);
        let a = deterministic_lowweight_baseline(&heavy, 1, 100).unwrap();
        assert_eq!(a, bs("111"));
        assert_eq!(hamming_distance(&a, &bs("110")).unwrap(), 1);
        assert_eq!(deterministic_lowweight_baseline(&SetVerifier::empty(3), 1, 100).unwrap(), bs("111"));
        assert!(deterministic_lowweight_baseline(&heavy, 2, 5).is_err());
    }

    #[test]
    fn randomized_baseline_is_seeded() {
        assert_eq!(randomized_baseline(8, 17), randomized_baseline(8, 17));
        assert_ne!(randomized_baseline(64, 1), randomized_baseline(64, 2));
        assert!(randomized_baseline(0, 3).is_empty());
    }

    #[test]
    fn adversary_examples() {
        let mut s = ScriptedStrategy { queries: vec![bs("0000"), bs("1111")], output: bs("0000") };
        let r = adversary_game(&mut s, 4, 2).unwrap();
        assert_eq!((r.query_count, r.achieved_distance), (2, 3));
        assert!(!r.adversary_loss);
        let planted = r.planted.unwrap();
        assert_eq!(hamming_distance(&planted, &bs("0000")).unwrap(), 3);

        let all: Vec<_> = (0..16).map(|v| BitString::from_u64(v, 4)).collect();
        let mut s = ScriptedStrategy { queries: all, output: bs("0101") };
        let r = adversary_game(&mut s, 4, 2).unwrap();
        assert!(r.adversary_loss);
        assert_eq!(r.achieved_distance, 0);

        let mut s = ScriptedStrategy { queries: vec![], output: bs("0110") };
        let r = adversary_game(&mut s, 4, 1).unwrap();
        assert_eq!(r.planted, Some(bs("1001")));

        assert!(adversary_game(&mut LowWeightStrategy { c: 1 }, 4, 0).is_err());
    }

    #[test]
    fn lowweight_strategy_defeats_adversary() {
        for n in 2..7 {
            for c in 1..=3.min(n) {
                let r = adversary_game(&mut LowWeightStrategy { c }, n, c).unwrap();
                assert!(r.adversary_loss, "n={n} c={c}");
            }
        }
    }
}

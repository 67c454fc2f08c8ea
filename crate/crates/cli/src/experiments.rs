//! One runner per subcommand. Trial `i` always uses `trial_seed(seed, i)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use hamwit_core::approx::{
    adversary_game, deterministic_lowweight_baseline, halfsplit_decision_approx, nae3sat_allfalse,
    nt_clique_approx, nt_independent_set_approx, nt_vertex_cover_approx, randomized_baseline, LowWeightStrategy,
    QueryStrategy, RandomStrategy, ScriptedStrategy,
};
use hamwit_core::combinatorics::{binomial, h_bound, lemma1_ratio, p_bound, ratio_to_pow2, tail_count};
use hamwit_core::decider::{check_universe, normalized_recursions, PlantedOracle};
use hamwit_core::gadgets::{
    build_hc_gadget, build_vc_gadget, compliant_budget, decode_hc_gadget, decode_sat_majority, decode_vc_gadget,
    pad_sat, EdgePairReduction, VcCase,
};
use hamwit_core::graph::VertexCoverVerifier;
use hamwit_core::seed::{rng_from_seed, trial_seed};
use hamwit_core::testkit::{
    corrupt, enumerate_witnesses, feasible_values, hamiltonian_cycles_exact, max_cliques_exact,
    max_independent_sets_exact, min_vertex_covers_exact, random_graph, random_nae3sat, random_planted_3cnf,
    sat_solutions, toy_reduction_corpus,
};
use hamwit_core::verifier::SetVerifier;
use hamwit_core::{
    hamming_distance, ApproxParams, BitString, DeciderConfig, FlipPolicy, Graph, NaeVerifier, SharedVerifier,
    Universe,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Check, ExperimentConfig, Report, Stat};

fn params(cfg: &ExperimentConfig) -> Result<ApproxParams> {
    ApproxParams::new(cfg.alpha).context("invalid --alpha")
}

fn require_enumerable(n: usize, cfg: &ExperimentConfig) -> Result<()> {
    if n >= 64 || (1u64 << n) > cfg.enum_cap {
        bail!("n = {n} needs 2^{n} candidates, above the enumeration cap {} (set HAMWIT_ENUM_CAP)", cfg.enum_cap);
    }
    Ok(())
}

fn all_pass<R>(rows: &[R], name: &str, pass: impl Fn(&R) -> bool) -> Check {
    let good = rows.iter().filter(|r| pass(r)).count();
    Check::new(name, good == rows.len(), format!("{good}/{} rows", rows.len()))
}

fn rate(name: &str, good: usize, total: usize) -> Stat {
    Stat { name: name.into(), value: if total == 0 { 1.0 } else { good as f64 / total as f64 } }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma1Row {
    pub n: usize,
    pub threshold: f64,
    pub tail_count: String,
    pub two_pow_n_over_p: f64,
    pub ratio: f64,
}

pub fn lemma1(cfg: &ExperimentConfig) -> Result<Report<Lemma1Row>> {
    let p = params(cfg)?;
    let ns = cfg.n_values()?;
    if let Some(&n) = ns.iter().find(|&&n| n < 2) {
        bail!("lemma1 needs n >= 2, got {n}");
    }
    let rows = ns
        .par_iter()
        .map(|&n| {
            let nn = n as u64;
            let threshold = n as f64 / 2.0 + h_bound(nn, &p)?;
            let tail = tail_count(nn - 1, threshold);
            Ok(Lemma1Row {
                n,
                threshold,
                tail_count: tail.to_string(),
                two_pow_n_over_p: 2f64.powi(n as i32) / p_bound(nn, &p)?,
                ratio: lemma1_ratio(nn, &p)?,
            })
        })
        .collect::<hamwit_core::Result<Vec<_>>>()?;
    // Past n - 1 the tail is empty and the ratio is zero by definition.
    let open: Vec<&Lemma1Row> = rows.iter().filter(|r| r.threshold < (r.n - 1) as f64).collect();
    let checks = vec![all_pass(&open, "ratios_positive", |r| r.ratio > 0.0)];
    Ok(Report { config: cfg.clone(), rows, checks, stats: vec![] })
}

#[derive(Debug, Clone, Serialize)]
pub struct DeciderRow {
    pub trial: usize,
    pub n: usize,
    pub planted: bool,
    pub outcome: bool,
    pub recursion_count: u64,
    pub n_p: f64,
    pub normalized: f64,
    pub oracle_calls: u64,
    pub fallback_used: bool,
}

pub fn policy_from_name(name: &str) -> Result<FlipPolicy> {
    Ok(match name {
        "exact-max" => FlipPolicy::ExactMax,
        "uniform" => FlipPolicy::UniformUpToMax,
        "zero" => FlipPolicy::Zero,
        other => bail!("unknown policy {other:?}; expected exact-max, uniform or zero"),
    })
}

/// Even trials plant one witness, odd trials use an empty verifier. `n`
/// cycles through the range.
pub fn decider(cfg: &ExperimentConfig) -> Result<Report<DeciderRow>> {
    let p = params(cfg)?;
    let ns = cfg.n_values()?;
    if ns[0] < 2 {
        bail!("decider needs n >= 2");
    }
    let policy = policy_from_name(cfg.policy.as_deref().unwrap_or("exact-max"))?;
    let mut dcfg = DeciderConfig::new(p);
    dcfg.enumeration_cap = cfg.enum_cap;
    let rows = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let seed = trial_seed(cfg.seed, i as u64);
            let n = ns[i % ns.len()];
            let planted = i % 2 == 0;
            let w = BitString::random(n, &mut rng_from_seed(seed));
            let v: SharedVerifier =
                if planted { Arc::new(SetVerifier::new(n, [w.clone()])) } else { Arc::new(SetVerifier::empty(n)) };
            let mut oracle = PlantedOracle::new(planted.then_some(w), policy, seed);
            let (outcome, trace) = check_universe(n, Universe::full(n), v, &mut oracle, &dcfg)?;
            Ok(DeciderRow {
                trial: i,
                n,
                planted,
                outcome,
                recursion_count: trace.recursion_count,
                n_p: n as f64 * p_bound(n as u64, &p)?,
                normalized: normalized_recursions(&trace, n, &p)?,
                oracle_calls: trace.oracle_calls,
                fallback_used: trace.fallback_used,
            })
        })
        .collect::<hamwit_core::Result<Vec<_>>>()?;
    let planted: Vec<&DeciderRow> = rows.iter().filter(|r| r.planted).collect();
    let empty: Vec<&DeciderRow> = rows.iter().filter(|r| !r.planted).collect();
    let checks = vec![
        all_pass(&planted, "planted_accepted", |r| r.outcome),
        all_pass(&empty, "empty_rejected", |r| !r.outcome),
    ];
    let stats = vec![Stat { name: "max_normalized".into(), value: rows.iter().map(|r| r.normalized).fold(0.0, f64::max) }];
    Ok(Report { config: cfg.clone(), rows, checks, stats })
}

#[derive(Debug, Clone, Serialize)]
pub struct ApproxRow {
    pub instance: usize,
    pub n: usize,
    pub size: usize,
    pub k: Option<usize>,
    pub output_weight: usize,
    pub nearest_distance: Option<usize>,
    pub half_n: f64,
    pub pass: bool,
}

fn nearest(a: &BitString, witnesses: &[BitString]) -> Option<usize> {
    witnesses.iter().map(|w| hamming_distance(a, w).expect("equal lengths")).min()
}

/// `instance` cycles `n` through the range. Graph kinds draw G(n, p) with
/// `p` uniform in `[0.15, 0.85)`; `nae` draws `3n` clauses with a hidden
/// solution. A halfsplit instance with no witness passes vacuously.
pub fn approx(cfg: &ExperimentConfig) -> Result<Report<ApproxRow>> {
    let kind = cfg.kind.as_deref().unwrap_or("nt-vc");
    if !["nt-vc", "nt-is", "nt-clique", "halfsplit", "nae"].contains(&kind) {
        bail!("unknown approx kind {kind:?}; expected nt-vc, nt-is, nt-clique, halfsplit or nae");
    }
    let ns = cfg.n_values()?;
    if ns[0] < 1 {
        bail!("approx needs n >= 1");
    }
    require_enumerable(*ns.last().unwrap(), cfg)?;
    let rows = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let seed = trial_seed(cfg.seed, i as u64);
            let mut rng = rng_from_seed(seed);
            let n = ns[i % ns.len()];
            let density = rng.gen_range(0.15..0.85);
            let graph = || random_graph(n, density, seed);
            let (size, k, a, witnesses) = match kind {
                "nt-vc" => {
                    let g = graph();
                    (g.edge_count(), None, nt_vertex_cover_approx(&g), min_vertex_covers_exact(&g)?.1)
                }
                "nt-is" => {
                    let g = graph();
                    (g.edge_count(), None, nt_independent_set_approx(&g), max_independent_sets_exact(&g)?.1)
                }
                "nt-clique" => {
                    let g = graph();
                    (g.edge_count(), None, nt_clique_approx(&g), max_cliques_exact(&g)?.1)
                }
                "halfsplit" => {
                    let g: Graph = graph();
                    let k = rng.gen_range(0..=n);
                    let v = VertexCoverVerifier { graph: g.clone(), k };
                    (g.edge_count(), Some(k), halfsplit_decision_approx(n, k)?, enumerate_witnesses(&v, cfg.enum_cap)?)
                }
                _ => {
                    let (f, _) = random_nae3sat(n, 3 * n, seed);
                    let size = f.clauses().len();
                    (size, None, nae3sat_allfalse(&f), enumerate_witnesses(&NaeVerifier(f), cfg.enum_cap)?)
                }
            };
            let d = nearest(&a, &witnesses);
            Ok(ApproxRow {
                instance: i,
                n,
                size,
                k,
                output_weight: a.weight(),
                nearest_distance: d,
                half_n: n as f64 / 2.0,
                pass: d.is_none_or(|d| 2 * d <= n),
            })
        })
        .collect::<hamwit_core::Result<Vec<_>>>()?;
    let checks = vec![all_pass(&rows, "within_half_n", |r| r.pass)];
    let good = rows.iter().filter(|r| r.pass).count();
    let stats = vec![rate("pass_rate", good, rows.len())];
    Ok(Report { config: cfg.clone(), rows, checks, stats })
}

#[derive(Debug, Clone, Serialize)]
pub struct GadgetRow {
    pub trial: usize,
    pub n: usize,
    pub n_prime: usize,
    pub budget: usize,
    pub flips: usize,
    pub concentrated: bool,
    pub decoded: bool,
    pub tie: bool,
    pub feasible: bool,
}

/// Flip `count` positions of `w`, all inside `focus` when `concentrate` is
/// set and `focus` is large enough, otherwise anywhere.
fn corrupt_focused<R: Rng>(w: &BitString, count: usize, focus: &[usize], concentrate: bool, rng: &mut R) -> BitString {
    if !concentrate || focus.len() < count {
        return corrupt(w, count, rng);
    }
    let mut out = w.clone();
    for &i in focus.choose_multiple(rng, count) {
        out.flip(i);
    }
    out
}

fn budget_for(n_prime: usize, cfg: &ExperimentConfig) -> Result<(usize, usize)> {
    let budget = compliant_budget(n_prime, cfg.epsilon)
        .with_context(|| format!("epsilon = {} leaves no corruption budget at n' = {n_prime}", cfg.epsilon))?;
    Ok((budget, (budget + cfg.overshoot).min(n_prime)))
}

fn sat_trial(i: usize, n: usize, cfg: &ExperimentConfig) -> Result<GadgetRow> {
    let seed = trial_seed(cfg.seed, i as u64);
    let mut rng = rng_from_seed(seed);
    let (f, _) = random_planted_3cnf(n, 4 * n, seed);
    let sols = sat_solutions(&f, cfg.enum_cap)?;
    let w = sols.choose(&mut rng).expect("planted formula is satisfiable");
    let pf = pad_sat(&f, cfg.epsilon)?;
    let (budget, flips) = budget_for(pf.total_variables(), cfg)?;
    let concentrated = i % 2 == 1;
    let a = corrupt_focused(&pf.extend(w), flips, &pf.duplicate_vars, concentrated, &mut rng);
    let decoded = decode_sat_majority(&pf, &a)?;
    let (t, fl) = feasible_values(&f, cfg.enum_cap)?;
    Ok(GadgetRow {
        trial: i,
        n,
        n_prime: pf.total_variables(),
        budget,
        flips,
        concentrated,
        decoded: decoded.value,
        tie: decoded.tie,
        feasible: if decoded.value { t } else { fl },
    })
}

fn vc_trial(i: usize, n: usize, cfg: &ExperimentConfig) -> Result<GadgetRow> {
    let seed = trial_seed(cfg.seed, i as u64);
    let mut rng = rng_from_seed(seed);
    let g = loop {
        let g = random_graph(n, 0.5, rng.gen());
        if g.edge_count() > 0 {
            break g;
        }
    };
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let v = *candidates.choose(&mut rng).unwrap();
    let (k, covers) = min_vertex_covers_exact(&g)?;
    let gdt = build_vc_gadget(&g, v, k, cfg.epsilon)?;
    let n_prime = gdt.g_prime.vertex_count();
    let c = covers.choose(&mut rng).unwrap();
    let side = if c.get(v) { &gdt.p0 } else { &gdt.p1 };
    let planted = BitString::from_positions(n_prime, c.ones_positions().into_iter().chain(side.iter().copied()));
    let (budget, flips) = budget_for(n_prime, cfg)?;
    let concentrated = i % 2 == 1;
    let a = corrupt_focused(&planted, flips, &gdt.path, concentrated, &mut rng);
    let case = decode_vc_gadget(&gdt, &a);
    let contains = case == VcCase::Contains;
    Ok(GadgetRow {
        trial: i,
        n,
        n_prime,
        budget,
        flips,
        concentrated,
        decoded: contains,
        tie: false,
        feasible: covers.iter().any(|c| c.get(v) == contains),
    })
}

/// Every Hamiltonian cycle of every gadget in the toy corpus, corrupted
/// `trials` times. `trial` numbers rows in that order.
fn hc_trials(cfg: &ExperimentConfig) -> Result<Vec<GadgetRow>> {
    let mut jobs = Vec::new();
    for red in toy_reduction_corpus() {
        let base_cycles = hamiltonian_cycles_exact(red.graph());
        for z in 0..red.variable_count {
            let (v, w) = red.edge_pair(z).expect("corpus variables have edge pairs");
            let feasible = (base_cycles.iter().any(|c| c.contains(&(v, w))), base_cycles.iter().any(|c| c.contains(&(w, v))));
            let gdt = Arc::new(build_hc_gadget(&red, z, cfg.epsilon)?);
            let cycles = hamiltonian_cycles_exact(&gdt.g_prime);
            for cycle in cycles {
                for t in 0..cfg.trials {
                    jobs.push((red.graph().vertex_count(), Arc::clone(&gdt), cycle.clone(), feasible, t));
                }
            }
        }
    }
    jobs.into_par_iter()
        .enumerate()
        .map(|(i, (n, gdt, cycle, (ft, ff), t))| {
            let mut rng = rng_from_seed(trial_seed(cfg.seed, i as u64));
            let m = gdt.g_prime.edge_count();
            let dup: Vec<usize> =
                gdt.p0.iter().chain(&gdt.p1).map(|&(a, b)| gdt.g_prime.edge_index(a, b).expect("gadget edge")).collect();
            let (budget, flips) = budget_for(m, cfg)?;
            let concentrated = t % 2 == 1;
            let a = corrupt_focused(&gdt.g_prime.edge_set_bits(&cycle), flips, &dup, concentrated, &mut rng);
            let edges: BTreeSet<(usize, usize)> = gdt.g_prime.edges_of_bits(&a);
            let value = decode_hc_gadget(&gdt, &edges);
            Ok(GadgetRow {
                trial: i,
                n,
                n_prime: m,
                budget,
                flips,
                concentrated,
                decoded: value,
                tie: false,
                feasible: if value { ft } else { ff },
            })
        })
        .collect()
}

/// Decodes must be feasible whenever the corruption stays within budget.
/// With `--overshoot` only the success rate is reported.
pub fn gadgets(cfg: &ExperimentConfig) -> Result<Report<GadgetRow>> {
    let kind = cfg.kind.as_deref().unwrap_or("sat");
    let rows = match kind {
        "sat" | "vc" => {
            let ns = cfg.n_values()?;
            let floor = if kind == "sat" { 3 } else { 2 };
            if ns[0] < floor {
                bail!("{kind} gadgets need n >= {floor}");
            }
            require_enumerable(*ns.last().unwrap(), cfg)?;
            (0..cfg.trials)
                .into_par_iter()
                .map(|i| {
                    let n = ns[i % ns.len()];
                    if kind == "sat" { sat_trial(i, n, cfg) } else { vc_trial(i, n, cfg) }
                })
                .collect::<Result<Vec<_>>>()?
        }
        "hc" => hc_trials(cfg)?,
        other => bail!("unknown gadget kind {other:?}; expected sat, vc or hc"),
    };
    let good = rows.iter().filter(|r| r.feasible || r.tie).count();
    let stats = vec![rate("success_rate", good, rows.len())];
    let checks = if cfg.overshoot == 0 { vec![all_pass(&rows, "decodes_feasible", |r| r.feasible || r.tie)] } else { vec![] };
    Ok(Report { config: cfg.clone(), rows, checks, stats })
}

#[derive(Debug, Clone, Serialize)]
pub struct BaselineRow {
    pub section: &'static str,
    pub n: usize,
    pub c: Option<usize>,
    pub trials: u64,
    pub empirical: Option<f64>,
    pub exact: Option<f64>,
    pub z: Option<f64>,
    pub violations: u64,
    pub pass: bool,
}

const EXHAUSTIVE_MAX_N: usize = 12;

fn cs(cfg: &ExperimentConfig, n: usize) -> Vec<usize> {
    match cfg.c {
        Some(c) => vec![c],
        None => (1..=3).collect(),
    }
    .into_iter()
    .filter(|&c| c >= 1 && c <= n + 1)
    .collect()
}

fn random_section(cfg: &ExperimentConfig, ns: &[usize]) -> Result<Vec<BaselineRow>> {
    let p = params(cfg)?;
    ns.iter()
        .enumerate()
        .map(|(j, &n)| {
            let threshold = n as f64 / 2.0 + h_bound(n as u64, &p)?;
            let section_seed = trial_seed(cfg.seed, j as u64);
            let target = BitString::random(n, &mut rng_from_seed(section_seed));
            let hits = (0..cfg.trials as u64)
                .into_par_iter()
                .filter(|&i| {
                    let guess = randomized_baseline(n, trial_seed(section_seed, i));
                    hamming_distance(&guess, &target).expect("equal lengths") as f64 <= threshold
                })
                .count();
            let exact = 1.0 - ratio_to_pow2(&tail_count(n as u64, threshold), n as u64);
            let freq = if cfg.trials == 0 { exact } else { hits as f64 / cfg.trials as f64 };
            let se = (exact * (1.0 - exact) / cfg.trials.max(1) as f64).sqrt();
            let z = if se > 0.0 { (freq - exact) / se } else if freq == exact { 0.0 } else { f64::INFINITY };
            Ok(BaselineRow {
                section: "random",
                n,
                c: None,
                trials: cfg.trials as u64,
                empirical: Some(freq),
                exact: Some(exact),
                z: Some(z),
                violations: (z.abs() > 3.0) as u64,
                pass: z.abs() <= 3.0,
            })
        })
        .collect()
}

/// Every single-witness verifier on `n` bits, plus every witness set when
/// `n <= 4`.
fn deterministic_section(cfg: &ExperimentConfig, ns: &[usize]) -> Result<Vec<BaselineRow>> {
    let jobs: Vec<(usize, usize)> = ns.iter().flat_map(|&n| cs(cfg, n).into_iter().map(move |c| (n, c))).collect();
    jobs.par_iter()
        .map(|&(n, c)| {
            let mut verifiers: Vec<SetVerifier> =
                (0..1u64 << n).map(|x| SetVerifier::new(n, [BitString::from_u64(x, n)])).collect();
            if n <= 4 {
                verifiers.extend((1..1u64 << (1u64 << n)).filter(|s| s.count_ones() > 1).map(|s| {
                    SetVerifier::new(n, (0..1u64 << n).filter(|x| s >> x & 1 == 1).map(|x| BitString::from_u64(x, n)))
                }));
            }
            let mut bad = 0;
            for v in &verifiers {
                let a = deterministic_lowweight_baseline(v, c, cfg.enum_cap)?;
                let d = v.accepted().iter().map(|w| hamming_distance(&a, w).expect("equal lengths")).min().unwrap();
                bad += (d > n.saturating_sub(c)) as u64;
            }
            Ok(BaselineRow {
                section: "deterministic",
                n,
                c: Some(c),
                trials: verifiers.len() as u64,
                empirical: None,
                exact: None,
                z: None,
                violations: bad,
                pass: bad == 0,
            })
        })
        .collect()
}

fn shell(center: &BitString, t: usize) -> Vec<BitString> {
    let n = center.len();
    (0..1u64 << n)
        .filter(|x| x.count_ones() as usize == t)
        .map(|x| center.iter().zip(BitString::from_u64(x, n).iter()).map(|(a, f)| a ^ f).collect())
        .collect()
}

/// Low-weight, random and scripted strategies. A game violates the bound
/// when a strategy with fewer than `C(n, n+1-c)` queries is not pushed to
/// distance exactly `n+1-c`, or a planted witness sits elsewhere.
fn adversary_section(cfg: &ExperimentConfig, ns: &[usize]) -> Result<Vec<BaselineRow>> {
    let jobs: Vec<(usize, usize)> = ns.iter().flat_map(|&n| cs(cfg, n).into_iter().map(move |c| (n, c))).collect();
    jobs.par_iter()
        .enumerate()
        .map(|(j, &(n, c))| {
            let t = n + 1 - c;
            let limit = binomial(n as u64, t as u64);
            let mut rng = rng_from_seed(trial_seed(cfg.seed, j as u64));
            let mut strategies: Vec<Box<dyn QueryStrategy>> = Vec::new();
            for cc in 0..=3 {
                strategies.push(Box::new(LowWeightStrategy { c: cc }));
            }
            for _ in 0..40 {
                strategies.push(Box::new(RandomStrategy { budget: rng.gen_range(0..=(1usize << n)), seed: rng.gen() }));
            }
            for _ in 0..40 {
                let output = BitString::random(n, &mut rng);
                let mut far = shell(&output, t);
                far.shuffle(&mut rng);
                let keep = rng.gen_range(0..=far.len());
                far.truncate(keep);
                strategies.push(Box::new(ScriptedStrategy { queries: far, output }));
            }
            let mut bad = 0;
            for s in strategies.iter_mut() {
                let r = adversary_game(s.as_mut(), n, c)?;
                if queries_below(r.query_count, &limit) && (r.achieved_distance != t || r.adversary_loss) {
                    bad += 1;
                }
                if let Some(p) = &r.planted {
                    bad += (hamming_distance(p, &r.output)? != t) as u64;
                }
            }
            Ok(BaselineRow {
                section: "adversary",
                n,
                c: Some(c),
                trials: strategies.len() as u64,
                empirical: None,
                exact: None,
                z: None,
                violations: bad,
                pass: bad == 0,
            })
        })
        .collect()
}

fn queries_below(count: usize, limit: &hamwit_core::BigUint) -> bool {
    hamwit_core::BigUint::from(count) < *limit
}

/// Ranges the baselines use when `--n-min`/`--n-max` are not given.
pub const RANDOM_RANGE: (usize, usize) = (32, 32);
pub const DETERMINISTIC_RANGE: (usize, usize) = (1, 10);
pub const ADVERSARY_RANGE: (usize, usize) = (1, 8);

pub fn baselines(cfg: &ExperimentConfig, explicit_range: bool) -> Result<Report<BaselineRow>> {
    let kind = cfg.kind.as_deref().unwrap_or("all");
    if !["all", "random", "deterministic", "adversary"].contains(&kind) {
        bail!("unknown baselines kind {kind:?}; expected all, random, deterministic or adversary");
    }
    let range = |default: (usize, usize)| -> Result<Vec<usize>> {
        if explicit_range {
            cfg.n_values()
        } else {
            Ok((default.0..=default.1).collect())
        }
    };
    let mut rows = Vec::new();
    if kind == "all" || kind == "random" {
        let ns = range(RANDOM_RANGE)?;
        if ns[0] < 1 {
            bail!("random baseline needs n >= 1");
        }
        rows.extend(random_section(cfg, &ns)?);
    }
    for (name, default, run) in [
        ("deterministic", DETERMINISTIC_RANGE, deterministic_section as fn(&ExperimentConfig, &[usize]) -> Result<Vec<BaselineRow>>),
        ("adversary", ADVERSARY_RANGE, adversary_section),
    ] {
        if kind == "all" || kind == name {
            let ns = range(default)?;
            if ns[0] < 1 || *ns.last().unwrap() > EXHAUSTIVE_MAX_N {
                bail!("{name} baseline is exhaustive and needs 1 <= n <= {EXHAUSTIVE_MAX_N}");
            }
            rows.extend(run(cfg, &ns)?);
        }
    }
    let checks = ["random", "deterministic", "adversary"]
        .into_iter()
        .filter(|s| kind == "all" || kind == *s)
        .map(|s| {
            let section: Vec<&BaselineRow> = rows.iter().filter(|r| r.section == s).collect();
            all_pass(&section, &format!("{s}_holds"), |r| r.pass)
        })
        .collect();
    Ok(Report { config: cfg.clone(), rows, checks, stats: vec![] })
}

//! Exact binomial arithmetic and the quantitative bounds `H(n, α)` and `P(n, α)`.
//!
//! Binomial coefficients and their row prefix sums are memoized in a
//! triangular table that grows on demand up to a fixed cap. Rows past the cap
//! fall back to the multiplicative formula.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{HamError, Result};

pub const DEFAULT_TABLE_CAP: u64 = 1024;

struct Row {
    coeffs: Vec<BigUint>,
    /// `prefix[r] = Σ_{j ≤ r} C(n, j)`.
    prefix: Vec<BigUint>,
}

/// Memoized Pascal triangle with row prefix sums.
pub struct BinomialTable {
    cap: u64,
    rows: RwLock<Vec<Row>>,
}

impl BinomialTable {
    pub fn with_cap(cap: u64) -> Self {
        Self { cap, rows: RwLock::new(Vec::new()) }
    }

    /// The process-wide table used by the free functions in this module.
    pub fn global() -> &'static BinomialTable {
        static TABLE: OnceLock<BinomialTable> = OnceLock::new();
        TABLE.get_or_init(|| BinomialTable::with_cap(DEFAULT_TABLE_CAP))
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn ensure(&self, n: u64) {
        if (self.rows.read().len() as u64) > n {
            return;
        }
        let mut rows = self.rows.write();
        while (rows.len() as u64) <= n {
            let coeffs = match rows.last() {
                None => vec![BigUint::one()],
                Some(prev) => {
                    let m = prev.coeffs.len();
                    let mut next = Vec::with_capacity(m + 1);
                    next.push(BigUint::one());
                    for k in 1..m {
                        next.push(&prev.coeffs[k - 1] + &prev.coeffs[k]);
                    }
                    next.push(BigUint::one());
                    next
                }
            };
            let mut acc = BigUint::zero();
            let prefix = coeffs
                .iter()
                .map(|c| {
                    acc += c;
                    acc.clone()
                })
                .collect();
            rows.push(Row { coeffs, prefix });
        }
    }

    pub fn binomial(&self, n: u64, k: u64) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        if n > self.cap {
            return binomial_multiplicative(n, k);
        }
        self.ensure(n);
        self.rows.read()[n as usize].coeffs[k as usize].clone()
    }

    /// `Σ_{j=0}^{r} C(n, j)`, saturating at `2^n` once `r ≥ n`.
    pub fn prefix_sum(&self, n: u64, r: u64) -> BigUint {
        let r = r.min(n);
        if n > self.cap {
            return prefix_sum_running(n, r);
        }
        self.ensure(n);
        self.rows.read()[n as usize].prefix[r as usize].clone()
    }
}

fn binomial_multiplicative(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn prefix_sum_running(n: u64, r: u64) -> BigUint {
    let mut term = BigUint::one();
    let mut acc = BigUint::one();
    for j in 0..r {
        term *= n - j;
        term /= j + 1;
        acc += &term;
    }
    acc
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    BinomialTable::global().binomial(n, k)
}

/// Number of `m`-bit strings with at most `r` ones.
pub fn binomial_prefix_sum(m: u64, r: u64) -> BigUint {
    BinomialTable::global().prefix_sum(m, r)
}

/// Exact number of `m`-bit strings with strictly more than `threshold` ones.
pub fn tail_count(m: u64, threshold: f64) -> BigUint {
    debug_assert!(!threshold.is_nan());
    let total = BigUint::one() << m;
    if threshold < 0.0 {
        return total;
    }
    let floor = threshold.floor();
    if floor >= m as f64 {
        return BigUint::zero();
    }
    total - binomial_prefix_sum(m, floor as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LogBase {
    #[default]
    Natural,
    Base2,
}

impl LogBase {
    pub fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Base2 => x.log2(),
        }
    }
}

/// The approximation slack constant `α > 0` and the logarithm convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct ApproxParams {
    alpha: f64,
    log_base: LogBase,
}

#[derive(Deserialize)]
struct RawParams {
    alpha: f64,
    #[serde(default)]
    log_base: LogBase,
}

impl TryFrom<RawParams> for ApproxParams {
    type Error = HamError;

    fn try_from(raw: RawParams) -> Result<Self> {
        Self::with_log_base(raw.alpha, raw.log_base)
    }
}

impl ApproxParams {
    pub fn new(alpha: f64) -> Result<Self> {
        Self::with_log_base(alpha, LogBase::Natural)
    }

    pub fn with_log_base(alpha: f64, log_base: LogBase) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(HamError::InvalidParameter(format!("alpha must be positive, got {alpha}")));
        }
        Ok(Self { alpha, log_base })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn log_base(&self) -> LogBase {
        self.log_base
    }
}

/// `H(n, α) = sqrt(α · n · log n)`.
pub fn h_bound(n: u64, params: &ApproxParams) -> Result<f64> {
    if n == 0 {
        return Err(HamError::Undefined("H(n, alpha) needs n >= 1".into()));
    }
    let n = n as f64;
    Ok((params.alpha * n * params.log_base.log(n)).sqrt())
}

/// `P(n, α) = n^{4α} · sqrt(α · log n)`.
pub fn p_bound(n: u64, params: &ApproxParams) -> Result<f64> {
    if n < 2 {
        return Err(HamError::Undefined("P(n, alpha) needs n >= 2".into()));
    }
    let n = n as f64;
    Ok(n.powf(4.0 * params.alpha) * (params.alpha * params.log_base.log(n)).sqrt())
}

/// `value / 2^exp` as a float, without overflowing for large values.
pub fn ratio_to_pow2(value: &BigUint, exp: u64) -> f64 {
    let shift = value.bits().saturating_sub(62);
    let mantissa = (value >> shift).to_f64().unwrap_or(f64::INFINITY);
    mantissa * 2f64.powf(shift as f64 - exp as f64)
}

/// `tail_count(n − 1, n/2 + H(n, α)) · P(n, α) / 2^n`.
///
/// Bounded below by a positive constant as `n` grows.
pub fn lemma1_ratio(n: u64, params: &ApproxParams) -> Result<f64> {
    let h = h_bound(n, params)?;
    let p = p_bound(n, params)?;
    let tail = tail_count(n - 1, n as f64 / 2.0 + h);
    Ok(ratio_to_pow2(&tail, n) * p)
}

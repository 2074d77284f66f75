//! Restriction of `sl(n)`-irreducibles to the principal `sl(2)`.
//!
//! Under the principal embedding `ℂ^n ≅ F_(n-1)`, so the character of
//! `L(λ)` restricted to `sl(2)` is the Schur polynomial evaluated at
//! `q^(n-1), q^(n-3), ..., q^(1-n)`. The main path uses the hook-content
//! product for the principal specialization; an exhaustive tableau sum is
//! kept as an independent oracle.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::laurent::LaurentPoly;
use crate::par::{map_ordered, Execution};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::sl2::{decompose, Sl2Decomposition};
use crate::{Error, Result};

/// Default cap on the number of tableaux the oracle may enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// Weights `n-1, n-3, ..., 1-n` of `ℂ^n` under the principal `sl(2)`.
pub fn principal_weights(n: usize) -> Vec<i64> {
    let n = n as i64;
    (1..=n).map(|i| n + 1 - 2 * i).collect()
}

fn check_rank(lambda: &Partition, n: usize) -> Result<Partition> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    lambda.canonical_sl(n)
}

/// Hook lengths, row-major, matching [`Partition::cells`].
fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    lambda
        .cells()
        .map(|(i, j)| {
            let arm = lambda.part(i) - j as u32 - 1;
            let leg = conj.part(j) - i as u32 - 1;
            arm + leg + 1
        })
        .collect()
}

/// `dim L(λ) = ∏ (n + c(u)) / h(u)` over the cells of `λ`.
pub fn hook_content_dimension(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let num: BigUint = lambda
        .cells()
        .map(|(i, j)| BigUint::from(n + j - i))
        .product();
    let den: BigUint = hook_lengths(lambda).into_iter().map(BigUint::from).product();
    num / den
}

// Polynomials in t, ascending coefficients.
fn mul_one_minus_t_pow(poly: &mut Vec<BigInt>, a: usize) {
    let old_len = poly.len();
    poly.resize(old_len + a, BigInt::zero());
    for k in (a..old_len + a).rev() {
        let sub = poly[k - a].clone();
        poly[k] -= sub;
    }
}

fn div_one_minus_t_pow(poly: &[BigInt], h: usize) -> Result<Vec<BigInt>> {
    let deg = poly.len() - 1;
    if deg < h {
        return Err(Error::InexactDivision(h as u32));
    }
    let len = deg - h + 1;
    let mut quot: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut b = poly[k].clone();
        if k >= h {
            b += &quot[k - h];
        }
        quot.push(b);
    }
    // Remaining high coefficients must satisfy a_k = -b_(k-h).
    for k in len..=deg {
        let expected = if k >= h { -&quot[k - h] } else { BigInt::zero() };
        if poly[k] != expected {
            return Err(Error::InexactDivision(h as u32));
        }
    }
    Ok(quot)
}

/// Exact `s_λ(q^(n-1), q^(n-3), ..., q^(1-n))`.
///
/// Computed as `q^((n-1)|λ|) · s_λ(1, t, ..., t^(n-1))` with `t = q^-2` and
/// `s_λ(1, t, ..., t^(n-1)) = t^(Σ (i-1) λ_i) ∏_u (1 - t^(n+c(u))) / (1 - t^(h(u)))`.
pub fn principal_character(lambda: &Partition, n: usize) -> Result<LaurentPoly> {
    let lambda = check_rank(lambda, n)?;
    let mut poly = vec![BigInt::one()];
    let mut cells: Vec<(usize, usize)> = lambda.cells().collect();
    // Only the factor ratios matter; sorting keeps intermediate degrees modest.
    cells.sort_unstable();
    for &(i, j) in &cells {
        mul_one_minus_t_pow(&mut poly, n + j - i);
    }
    for h in hook_lengths(&lambda) {
        poly = div_one_minus_t_pow(&poly, h as usize)?;
    }
    let t_shift: i64 = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i64 * i64::from(p))
        .sum();
    let q_top = (n as i64 - 1) * i64::from(lambda.size());
    Ok(LaurentPoly::from_terms(
        poly.into_iter()
            .enumerate()
            .map(|(k, c)| (q_top - 2 * (k as i64 + t_shift), c)),
    ))
}

/// `Σ_T ∏ q^(weights[T(u)-1])` over semistandard tableaux `T` of shape `λ`
/// with entries in `1..=weights.len()`.
///
/// Fails with [`Error::BudgetExceeded`] once more than `budget` tableaux
/// have been produced.
pub fn tableau_character(lambda: &Partition, weights: &[i64], budget: u64) -> Result<LaurentPoly> {
    if lambda.len() > weights.len() {
        return Ok(LaurentPoly::zero());
    }
    struct Walk<'a> {
        shape: &'a [u32],
        weights: &'a [i64],
        filling: Vec<Vec<usize>>,
        counts: BTreeMap<i64, u64>,
        produced: u64,
        budget: u64,
    }

    impl Walk<'_> {
        fn go(&mut self, row: usize, col: usize, weight: i64) -> Result<()> {
            if row == self.shape.len() {
                self.produced += 1;
                if self.produced > self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                *self.counts.entry(weight).or_insert(0) += 1;
                return Ok(());
            }
            if col == self.shape[row] as usize {
                return self.go(row + 1, 0, weight);
            }
            let left = if col > 0 { self.filling[row][col - 1] } else { 0 };
            let above = if row > 0 { self.filling[row - 1][col] + 1 } else { 0 };
            // Leave room for the strictly increasing entries below in this column.
            let max = self.weights.len() - (self.shape_height(col) - row);
            for v in left.max(above).max(row)..=max {
                self.filling[row][col] = v;
                self.go(row, col + 1, weight + self.weights[v])?;
            }
            Ok(())
        }

        fn shape_height(&self, col: usize) -> usize {
            self.shape.iter().filter(|&&p| p as usize > col).count()
        }
    }

    let mut walk = Walk {
        shape: lambda.parts(),
        weights,
        filling: lambda.parts().iter().map(|&p| vec![0; p as usize]).collect(),
        counts: BTreeMap::new(),
        produced: 0,
        budget,
    };
    walk.go(0, 0, 0)?;
    Ok(LaurentPoly::from_terms(walk.counts))
}

/// Principal character by brute-force tableau enumeration.
pub fn principal_character_oracle(lambda: &Partition, n: usize, budget: u64) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            max: n,
        });
    }
    tableau_character(lambda, &principal_weights(n), budget)
}

/// Decomposition of `Res L(λ)` to the principal `sl(2)`.
pub fn restrict_to_principal(lambda: &Partition, n: usize) -> Result<Sl2Decomposition> {
    decompose(&principal_character(lambda, n)?)
}

/// `1 + min { j : F_j ⊂ Res L(λ) }`.
pub fn min_dim(lambda: &Partition, n: usize) -> Result<usize> {
    Ok(restrict_to_principal(lambda, n)?
        .min_dim()
        .expect("restriction of a nonzero representation is nonzero"))
}

/// Outcome of an exhaustive min-dim search over a range of highest weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub max_boxes: u32,
    pub checked: usize,
    pub max_min_dim_found: usize,
    /// Partitions attaining `max_min_dim_found`, in enumeration order.
    pub witnesses: Vec<(Partition, usize)>,
    /// Partitions with `min_dim > n`, in enumeration order.
    pub violations: Vec<Partition>,
}

impl BoundReport {
    /// Folds per-partition results (in enumeration order) into a report.
    pub fn from_results(n: usize, max_boxes: u32, results: Vec<(Partition, usize)>) -> Self {
        let max_min_dim_found = results.iter().map(|(_, d)| *d).max().unwrap_or(0);
        let violations = results
            .iter()
            .filter(|(_, d)| *d > n)
            .map(|(p, _)| p.clone())
            .collect();
        let checked = results.len();
        let witnesses = results
            .into_iter()
            .filter(|(_, d)| *d == max_min_dim_found)
            .collect();
        Self {
            n,
            max_boxes,
            checked,
            max_min_dim_found,
            witnesses,
            violations,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|(p, d)| json!([p.to_string(), d]))
            .collect();
        let violations: Vec<String> = self.violations.iter().map(Partition::to_string).collect();
        json!({
            "n": self.n,
            "max_boxes": self.max_boxes,
            "checked": self.checked,
            "max_min_dim": self.max_min_dim_found,
            "witnesses": witnesses,
            "violations": violations,
        })
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// [`verify_bound_with`] on the default execution.
pub fn verify_bound(n: usize, max_boxes: u32) -> Result<BoundReport> {
    verify_bound_with(n, max_boxes, Execution::default())
}

/// Computes `min_dim(λ, n)` for every partition with at most `n - 1` parts
/// and at most `max_boxes` boxes.
pub fn verify_bound_with(n: usize, max_boxes: u32, exec: Execution) -> Result<BoundReport> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    let lambdas = partitions_up_to(max_boxes, n - 1);
    let dims = map_ordered(&lambdas, exec, |l| min_dim(l, n));
    let results = lambdas
        .into_iter()
        .zip(dims)
        .map(|(l, d)| d.map(|d| (l, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::from_results(n, max_boxes, results))
}

/// Checks that `F_(j1+j2) ⊂ Res L(λ1+λ2)` whenever `F_j1 ⊂ Res L(λ1)` and
/// `F_j2 ⊂ Res L(λ2)`.
pub fn semigroup_check(lambda1: &Partition, lambda2: &Partition, n: usize) -> Result<bool> {
    let a = restrict_to_principal(lambda1, n)?;
    let b = restrict_to_principal(lambda2, n)?;
    let sum = restrict_to_principal(&lambda1.sum(lambda2), n)?;
    let holds = a.types().all(|j1| b.types().all(|j2| sum.contains(j1 + j2)));
    Ok(holds)
}

/// One sampled instance of [`semigroup_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupCase {
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub n: usize,
}

/// Draws `count` random pairs with `2 ≤ n ≤ max_n` and `|λ_i| ≤ max_size`
/// (each `λ_i` with at most `n - 1` parts). Deterministic in `seed`.
pub fn random_semigroup_cases(count: usize, max_size: u32, max_n: usize, seed: u64) -> Vec<SemigroupCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng, n: usize| {
        let size = rng.gen_range(0..=max_size);
        partitions_of(size, n - 1)
            .choose(rng)
            .cloned()
            .unwrap_or_default()
    };
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let lambda1 = draw(&mut rng, n);
            let lambda2 = draw(&mut rng, n);
            SemigroupCase { lambda1, lambda2, n }
        })
        .collect()
}

/// Runs [`semigroup_check`] on every case and returns the failing ones.
pub fn semigroup_violations(cases: &[SemigroupCase], exec: Execution) -> Result<Vec<SemigroupCase>> {
    let verdicts = map_ordered(cases, exec, |c| semigroup_check(&c.lambda1, &c.lambda2, c.n));
    let mut bad = Vec::new();
    for (case, ok) in cases.iter().zip(verdicts) {
        if !ok? {
            bad.push(case.clone());
        }
    }
    Ok(bad)
}

//! Arbitrary `sl(2) → sl(n)` embeddings.
//!
//! Up to conjugacy an embedding is fixed by how `ℂ^n` splits into
//! `sl(2)`-irreducibles, `ℂ^n ≅ F_(n_1 - 1) ⊕ ... ⊕ F_(n_p - 1)`. The
//! restricted character of `L(λ)` is `s_λ` evaluated at the resulting
//! weight multiset, computed here with the Jacobi-Trudi determinant over
//! Laurent-polynomial entries.

use std::fmt;
use std::str::FromStr;

use crate::branching::{tableau_character, BoundReport};
use crate::laurent::{ext_powers_from_weights, sym_powers_from_weights, LaurentPoly};
use crate::par::{map_ordered, Execution};
use crate::partitions::{partitions_of, partitions_up_to, Partition};
use crate::sl2::{decompose, Sl2Decomposition};
use crate::{Error, Result};

/// Block sizes `n_1 ≥ n_2 ≥ ... ≥ n_p ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbeddingSpec {
    blocks: Vec<usize>,
}

impl EmbeddingSpec {
    /// Sorts the blocks into canonical (weakly decreasing) order.
    pub fn new(mut blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidComposition(
                blocks.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            ));
        }
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { blocks })
    }

    /// The principal embedding into `sl(n)`.
    pub fn principal(n: usize) -> Self {
        assert!(n >= 1);
        Self { blocks: vec![n] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn is_principal(&self) -> bool {
        self.blocks.len() == 1
    }

    /// All blocks equal to 1.
    pub fn is_zero_map(&self) -> bool {
        self.blocks.iter().all(|&b| b == 1)
    }
}

impl fmt::Display for EmbeddingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for EmbeddingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidComposition(s.to_string()))?;
        Self::new(blocks)
    }
}

/// Every embedding into `sl(n)`, i.e. every partition of `n`, in
/// decreasing lexicographic order.
pub fn all_embeddings(n: usize) -> Vec<EmbeddingSpec> {
    partitions_of(n as u32, n)
        .into_iter()
        .map(|p| EmbeddingSpec {
            blocks: p.parts().iter().map(|&b| b as usize).collect(),
        })
        .collect()
}

/// Union over blocks of `{n_j - 1, n_j - 3, ..., 1 - n_j}`.
pub fn embedding_weights(spec: &EmbeddingSpec) -> Vec<i64> {
    spec.blocks
        .iter()
        .flat_map(|&b| {
            let b = b as i64;
            (1..=b).map(move |i| b + 1 - 2 * i)
        })
        .collect()
}

/// Determinant by Laplace expansion memoized over used-column sets.
fn determinant(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let size = matrix.len();
    if size == 0 {
        return LaurentPoly::one();
    }
    let full = (1usize << size) - 1;
    let mut partial = vec![LaurentPoly::zero(); full + 1];
    partial[0] = LaurentPoly::one();
    for mask in 0..full {
        if partial[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for col in 0..size {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            let term = &partial[mask] * &matrix[row][col];
            // Each used column to the right of `col` is one inversion.
            let inversions = (mask >> (col + 1)).count_ones();
            let next = mask | (1 << col);
            partial[next] = if inversions % 2 == 0 {
                &partial[next] + &term
            } else {
                &partial[next] - &term
            };
        }
    }
    partial.swap_remove(full)
}

/// `s_λ` at the monomials `q^w`, by Jacobi-Trudi: `det(h_(λ_i - i + j))`,
/// or the dual form `det(e_(λ'_i - i + j))` when `λ` is wider than tall.
pub fn jacobi_trudi(lambda: &Partition, weights: &[i64]) -> LaurentPoly {
    let conj = lambda.conjugate();
    let (rows, basis) = if lambda.len() <= conj.len() {
        (lambda.clone(), sym_powers_from_weights(weights, (lambda.part(0) as usize) + lambda.len()))
    } else {
        (conj.clone(), ext_powers_from_weights(weights, (conj.part(0) as usize) + conj.len()))
    };
    let size = rows.len();
    let matrix: Vec<Vec<LaurentPoly>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let k = rows.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        LaurentPoly::zero()
                    } else {
                        basis[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

fn check_parts(lambda: &Partition, spec: &EmbeddingSpec) -> Result<Partition> {
    lambda.canonical_sl(spec.n())
}

/// Character of `Res L(λ)` along the embedding.
pub fn embedding_character(lambda: &Partition, spec: &EmbeddingSpec) -> Result<LaurentPoly> {
    let lambda = check_parts(lambda, spec)?;
    Ok(jacobi_trudi(&lambda, &embedding_weights(spec)))
}

/// Same character by tableau enumeration.
pub fn embedding_character_oracle(
    lambda: &Partition,
    spec: &EmbeddingSpec,
    budget: u64,
) -> Result<LaurentPoly> {
    if lambda.len() > spec.n() {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            max: spec.n(),
        });
    }
    tableau_character(lambda, &embedding_weights(spec), budget)
}

pub fn restrict_via_embedding(lambda: &Partition, spec: &EmbeddingSpec) -> Result<Sl2Decomposition> {
    decompose(&embedding_character(lambda, spec)?)
}

/// [`verify_bound_embedding_with`] on the default execution.
pub fn verify_bound_embedding(spec: &EmbeddingSpec, max_boxes: u32) -> Result<BoundReport> {
    verify_bound_embedding_with(spec, max_boxes, Execution::default())
}

/// Minimal occurring `sl(2)`-dimension for every partition with at most
/// `n - 1` parts and `max_boxes` boxes; violations exceed `n`.
pub fn verify_bound_embedding_with(
    spec: &EmbeddingSpec,
    max_boxes: u32,
    exec: Execution,
) -> Result<BoundReport> {
    let n = spec.n();
    let lambdas = partitions_up_to(max_boxes, n - 1);
    let dims = map_ordered(&lambdas, exec, |l| {
        restrict_via_embedding(l, spec).map(|d| d.min_dim().expect("nonzero restriction"))
    });
    let results = lambdas
        .into_iter()
        .zip(dims)
        .map(|(l, d)| d.map(|d| (l, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundReport::from_results(n, max_boxes, results))
}

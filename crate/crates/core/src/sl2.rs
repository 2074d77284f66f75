//! sl(2)-character theory.
//!
//! Decomposition of characters into the irreducibles `F_j`, the plethysm
//! characters `S^m(F_d)` and `Λ^k(F_d)`, and the lowest type
//! `ℓ(m,d) = min { j : F_j ⊂ S^m(F_d) }`, both computed and in closed form.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::laurent::{chi, ext_powers_from_weights, sym_powers_from_weights, LaurentPoly};
use crate::par::{map_ordered, Execution};
use crate::{Error, Result};

/// Multiplicities `a_0, a_1, ...` of the irreducibles `F_0, F_1, ...`.
/// Trailing zeros are trimmed; the zero representation has no entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sl2Decomposition {
    mults: Vec<BigUint>,
}

impl Sl2Decomposition {
    pub fn from_mults(mut mults: Vec<BigUint>) -> Self {
        while mults.last().is_some_and(Zero::is_zero) {
            mults.pop();
        }
        Self { mults }
    }

    pub fn mults(&self) -> &[BigUint] {
        &self.mults
    }

    /// Multiplicity of `F_j`.
    pub fn mult(&self, j: usize) -> BigUint {
        self.mults.get(j).cloned().unwrap_or_default()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.mults.get(j).is_some_and(|a| !a.is_zero())
    }

    /// Indices `j` with `a_j > 0`, ascending.
    pub fn types(&self) -> impl Iterator<Item = usize> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, _)| j)
    }

    /// Smallest `j` with `a_j > 0`; `None` for the zero representation.
    pub fn lowest(&self) -> Option<usize> {
        self.types().next()
    }

    pub fn highest(&self) -> Option<usize> {
        self.mults.len().checked_sub(1)
    }

    /// Dimension of the smallest irreducible that occurs.
    pub fn min_dim(&self) -> Option<usize> {
        self.lowest().map(|j| j + 1)
    }

    /// `Σ_j a_j (j+1)`.
    pub fn dim(&self) -> BigUint {
        self.mults
            .iter()
            .enumerate()
            .map(|(j, a)| a * BigUint::from(j + 1))
            .sum()
    }

    /// `Σ_j a_j χ_j`.
    pub fn recompose(&self) -> LaurentPoly {
        self.types()
            .map(|j| {
                let a = BigInt::from_biguint(Sign::Plus, self.mults[j].clone());
                LaurentPoly::from_terms(chi(j as u32).terms().map(|(e, _)| (e, a.clone())))
            })
            .sum()
    }

    /// `{"mults": [a_0, ...], "lowest": j, "highest": j, "dim": "..."}`.
    ///
    /// Multiplicities are emitted as exact JSON integers of any size;
    /// `lowest`/`highest` are `null` for the zero representation.
    pub fn to_json(&self) -> Value {
        let mults: Vec<Value> = self
            .mults
            .iter()
            .map(|a| Value::Number(a.to_string().parse().expect("decimal integer")))
            .collect();
        json!({
            "mults": mults,
            "lowest": self.lowest(),
            "highest": self.highest(),
            "dim": self.dim().to_string(),
        })
    }
}

impl Serialize for Sl2Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// Splits a character into irreducibles via `a_j = c_j - c_(j+2)`.
pub fn decompose(character: &LaurentPoly) -> Result<Sl2Decomposition> {
    if !character.is_palindromic() {
        return Err(Error::NotACharacter("coefficients are not palindromic".into()));
    }
    let Some(top) = character.max_exponent() else {
        return Ok(Sl2Decomposition::default());
    };
    let mut mults = Vec::with_capacity(top as usize + 1);
    for j in 0..=top {
        let a = character.coeff(j) - character.coeff(j + 2);
        match a.to_biguint() {
            Some(a) => mults.push(a),
            None => {
                return Err(Error::NotACharacter(format!(
                    "multiplicity of F_{j} would be {a}"
                )))
            }
        }
    }
    Ok(Sl2Decomposition::from_mults(mults))
}

/// Weights `d, d-2, ..., -d` of `F_d`.
pub fn irrep_weights(d: u32) -> Vec<i64> {
    let d = i64::from(d);
    (0..=d).map(|i| d - 2 * i).collect()
}

/// Character of `S^m(F_d)`, the centered q-binomial `[m+d choose d]_q`.
pub fn sym_power_character(m: u32, d: u32) -> LaurentPoly {
    let mut h = sym_powers_from_weights(&irrep_weights(d), m as usize);
    h.pop().expect("m + 1 entries")
}

/// Character of `Λ^k(F_d)`; zero when `k > d + 1`.
pub fn ext_power_character(k: u32, d: u32) -> LaurentPoly {
    let mut e = ext_powers_from_weights(&irrep_weights(d), k as usize);
    e.pop().expect("k + 1 entries")
}

fn lowest_of(character: &LaurentPoly) -> u32 {
    decompose(character)
        .expect("symmetric powers are sl(2)-characters")
        .lowest()
        .expect("symmetric powers are nonzero") as u32
}

/// `ℓ(m,d)`: the least `j` with `F_j ⊂ S^m(F_d)`.
pub fn lowest_type(m: u32, d: u32) -> u32 {
    if m == 0 || d == 0 {
        return 0;
    }
    lowest_of(&sym_power_character(m, d))
}

/// `[ℓ(0,d), ℓ(1,d), ..., ℓ(max_m,d)]` from a single generating-function pass.
pub fn lowest_type_column(d: u32, max_m: u32) -> Vec<u32> {
    sym_powers_from_weights(&irrep_weights(d), max_m as usize)
        .iter()
        .map(lowest_of)
        .collect()
}

/// `table[m][d] = ℓ(m,d)` for `0 ≤ m ≤ max_m`, `0 ≤ d ≤ max_d`.
pub fn lowest_type_table(max_m: u32, max_d: u32, exec: Execution) -> Vec<Vec<u32>> {
    let ds: Vec<u32> = (0..=max_d).collect();
    let columns = map_ordered(&ds, exec, |&d| lowest_type_column(d, max_m));
    (0..=max_m as usize)
        .map(|m| columns.iter().map(|col| col[m]).collect())
        .collect()
}

/// Pairs with `5 ≤ m ≤ d` where the lowest type is 2 rather than 0 or 1.
pub const EXCEPTIONAL: [(u32, u32); 8] = [
    (5, 6),
    (5, 10),
    (5, 14),
    (6, 7),
    (6, 9),
    (6, 11),
    (6, 13),
    (7, 10),
];

fn is_exceptional(m: u32, d: u32) -> bool {
    EXCEPTIONAL.contains(&(m, d)) || EXCEPTIONAL.contains(&(d, m))
}

/// `ℓ(m,d)` from the piecewise closed form, symmetric in `m` and `d`.
pub fn lowest_type_closed_form(m: u32, d: u32) -> u32 {
    let (small, large) = if m <= d { (m, d) } else { (d, m) };
    match small {
        0 => 0,
        1 => large,
        2 => {
            if large % 2 == 0 {
                0
            } else {
                2
            }
        }
        3 => match large % 4 {
            0 => 0,
            2 => 2,
            _ => 3,
        },
        4 => 0,
        _ if is_exceptional(small, large) => 2,
        _ if small % 2 == 1 && large % 2 == 1 => 1,
        _ => 0,
    }
}

/// `S^m(F_d) ≅ S^d(F_m)` as characters.
pub fn hermite_check(m: u32, d: u32) -> bool {
    sym_power_character(m, d) == sym_power_character(d, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().copied())
    }

    fn mults(xs: &[u32]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&chi(5)).unwrap();
        assert_eq!(d.mults(), mults(&[0, 0, 0, 0, 0, 1]).as_slice());
        let d = decompose(&p(&[(2, 1), (0, 2), (-2, 1)])).unwrap();
        assert_eq!(d.mults(), mults(&[1, 0, 1]).as_slice());
        let d = decompose(&p(&[(1, 1), (0, 1), (-1, 1)])).unwrap();
        assert_eq!(d.mults(), mults(&[1, 1]).as_slice());
    }

    #[test]
    fn decompose_rejects_non_characters() {
        assert!(matches!(
            decompose(&p(&[(2, 1), (-2, 1)])),
            Err(Error::NotACharacter(_))
        ));
        assert!(matches!(
            decompose(&p(&[(1, 1)])),
            Err(Error::NotACharacter(_))
        ));
    }

    #[test]
    fn decompose_zero() {
        let d = decompose(&LaurentPoly::zero()).unwrap();
        assert!(d.mults().is_empty());
        assert_eq!(d.lowest(), None);
        assert_eq!(d.dim(), BigUint::zero());
    }

    #[test]
    fn sym_power_examples() {
        for d in 0..10 {
            assert_eq!(sym_power_character(1, d), chi(d));
        }
        assert_eq!(sym_power_character(2, 2), &chi(4) + &chi(0));
        assert_eq!(sym_power_character(2, 2).eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn ext_power_examples() {
        for d in 0..10 {
            assert_eq!(ext_power_character(0, d), LaurentPoly::one());
            assert_eq!(ext_power_character(d + 1, d), LaurentPoly::one());
            assert_eq!(ext_power_character(1, d), chi(d));
            assert_eq!(ext_power_character(d, d), chi(d));
            assert!(ext_power_character(d + 2, d).is_zero());
        }
    }

    #[test]
    fn lowest_type_examples() {
        for d in 0..12 {
            assert_eq!(lowest_type(1, d), d);
        }
        assert_eq!(lowest_type(5, 6), 2);
        assert_eq!(lowest_type(4, 1), 4);
        assert_eq!(lowest_type(3, 5), 3);
        // Computed directly; the matrix row 2 starts 0,2,0.
        assert_eq!(lowest_type(2, 1), 2);
        assert_eq!(lowest_type(0, 7), 0);
        assert_eq!(lowest_type(7, 0), 0);
    }

    #[test]
    fn quintic_even_columns() {
        // Row 5 through column 18, computed directly.
        let row: Vec<u32> = (0..=18).map(|d| lowest_type(5, d)).collect();
        assert_eq!(row, vec![0, 5, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 0]);
        assert_eq!(lowest_type(5, 16), 0);
        assert_eq!(lowest_type(5, 18), 0);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(lowest_type_closed_form(6, 13), 2);
        assert_eq!(lowest_type_closed_form(13, 6), 2);
        assert_eq!(lowest_type_closed_form(9, 11), 1);
        assert_eq!(lowest_type_closed_form(8, 12), 0);
        assert_eq!(lowest_type_closed_form(4, 1), 4);
        assert_eq!(lowest_type_closed_form(1, 4), 4);
        assert_eq!(lowest_type_closed_form(0, 0), 0);
    }

    #[test]
    fn column_matches_pointwise() {
        for d in 0..8 {
            let col = lowest_type_column(d, 10);
            for m in 0..=10 {
                assert_eq!(col[m as usize], lowest_type(m, d), "m={m} d={d}");
            }
        }
    }

    #[test]
    fn table_serial_equals_parallel() {
        let a = lowest_type_table(9, 9, Execution::Serial);
        let b = lowest_type_table(9, 9, Execution::Parallel);
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert_eq!(a[0].len(), 10);
    }

    #[test]
    fn hermite_examples() {
        assert!(hermite_check(3, 7));
        assert!(hermite_check(0, 5));
        assert_eq!(lowest_type(5, 2), lowest_type(2, 5));
        assert_eq!(lowest_type(5, 2), 2);
    }

    #[test]
    fn decomposition_json() {
        let d = decompose(&sym_power_character(2, 2)).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"mults":[1,0,0,0,1],"lowest":0,"highest":4,"dim":"6"}"#
        );
        let z = Sl2Decomposition::default();
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"mults":[],"lowest":null,"highest":null,"dim":"0"}"#
        );
    }

    #[test]
    fn big_multiplicities_stay_exact_in_json() {
        let d = decompose(&sym_power_character(60, 60)).unwrap();
        let top_mult = d.mults().iter().max().unwrap().clone();
        assert!(top_mult > BigUint::from(u64::MAX));
        let text = d.to_json().to_string();
        assert!(text.contains(&top_mult.to_string()));
    }
}

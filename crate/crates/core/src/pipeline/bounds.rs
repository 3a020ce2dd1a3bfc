use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

/// The colour-count formulas with the configured budgets substituted for
/// the unknown constants `K` and `ell`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicBounds {
    pub t: usize,
    pub alpha: usize,
    pub k_budget: usize,
    pub ell_budget: usize,
    /// `g = 2 ell t + 5 t K^2`.
    #[serde(serialize_with = "decimal")]
    pub g: BigUint,
    /// `f = 2 g + 5 t`.
    #[serde(serialize_with = "decimal")]
    pub f: BigUint,
    /// Jewel parameter: `3 dense(t, alpha - 1) + 2t`, or `t` when `alpha = 1`.
    #[serde(serialize_with = "decimal")]
    pub d: BigUint,
    /// `dense(t, alpha)`.
    #[serde(serialize_with = "decimal")]
    pub dense: BigUint,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Evaluates the bound ledger. `dense(t, 1) = f(t)` and for `alpha >= 2`
/// `dense = 2((1 + K^2)(15 p + 10t + 2) + ell (d + 1))` with
/// `p = dense(t, alpha - 1)` and `d = 3p + 2t`.
pub fn evaluate_bounds(
    t: usize,
    alpha: usize,
    k_budget: usize,
    ell_budget: usize,
) -> Result<SymbolicBounds> {
    if alpha == 0 {
        return Err(Error::parameter("alpha must be at least 1"));
    }
    let tb = BigUint::from(t);
    let kk = BigUint::from(k_budget) * BigUint::from(k_budget);
    let ell = BigUint::from(ell_budget);
    let g = 2u32 * &ell * &tb + 5u32 * &tb * &kk;
    let f = 2u32 * &g + 5u32 * &tb;
    let mut dense = f.clone();
    let mut d = tb.clone();
    for _ in 2..=alpha {
        let prev = dense;
        d = 3u32 * &prev + 2u32 * &tb;
        dense = 2u32 * ((1u32 + &kk) * (15u32 * &prev + 10u32 * &tb + 2u32) + &ell * (&d + 1u32));
    }
    Ok(SymbolicBounds {
        t,
        alpha,
        k_budget,
        ell_budget,
        g,
        f,
        d,
        dense,
    })
}

//! The cluster size function `s` and the threshold `clust`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest exponent `clust_value` is willing to materialise.
const MAX_EXPONENT: usize = 1 << 24;

/// `s(0) = 1`, `s(x) = x² · s(x - 1) + x`.
pub fn s_value(x: usize) -> BigUint {
    let mut s = BigUint::one();
    for i in 1..=x {
        s = BigUint::from(i * i) * s + BigUint::from(i);
    }
    s
}

/// `s(0), ..., s(x)`.
pub fn s_table(x: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for i in 1..=x {
        let next = BigUint::from(i * i) * &out[i - 1] + BigUint::from(i);
        out.push(next);
    }
    out
}

/// `s(x)` as a machine integer, saturating at `usize::MAX`.
pub fn s_saturating(x: usize) -> usize {
    s_value(x).to_usize().unwrap_or(usize::MAX)
}

/// `clust(c) = c · 2^s(2c) + s(2c) + 1`.
pub fn clust_value(c: usize) -> Result<BigUint> {
    let s = s_value(2 * c);
    let exp = s
        .to_usize()
        .filter(|&e| e <= MAX_EXPONENT)
        .ok_or_else(|| Error::parameter(format!("clust({c}) is too large to evaluate")))?;
    let mut power = BigUint::zero();
    power.set_bit(exp as u64, true);
    Ok(BigUint::from(c) * power + s + BigUint::one())
}

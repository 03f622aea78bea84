//! Scalars are exact rationals; every computation in the crate is over ℚ.
//!
//! `num_rational::BigRational` already maintains the canonical form we rely
//! on (reduced fraction, positive denominator), and its string form is the
//! wire format used in all JSON documents: `"p/q"`, or `"p"` when `q = 1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = num_rational::BigRational;

/// An integer as a scalar.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// The fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    Scalar::from_str(s).map_err(|_| Error::ParseScalar(s.to_string()))
}

pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

/// `v^e` for a signed exponent; errors on `0^negative`.
pub fn pow_scalar(v: &Scalar, e: i64) -> Result<Scalar> {
    if v.is_zero() && e < 0 {
        return Err(Error::ZeroScale);
    }
    Ok(v.pow(e as i32))
}

/// Rational `w`-th root, if one exists. For even `w` the input must be
/// non-negative; the non-negative root is returned.
pub fn nth_root_exact(v: &Scalar, w: u32) -> Option<Scalar> {
    assert!(w > 0);
    if w == 1 {
        return Some(v.clone());
    }
    if v.is_zero() {
        return Some(Scalar::zero());
    }
    if v.is_negative() && w % 2 == 0 {
        return None;
    }
    let sign = if v.is_negative() { -1 } else { 1 };
    let p = v.numer().abs();
    let q = v.denom().clone();
    let rp = p.nth_root(w);
    let rq = q.nth_root(w);
    if num_traits::pow(rp.clone(), w as usize) != p || num_traits::pow(rq.clone(), w as usize) != q
    {
        return None;
    }
    Some(Scalar::new(rp * BigInt::from(sign), rq))
}

// -- small dense-vector helpers shared across the crate --

pub fn zero_vec(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// `dst += c * src`, entrywise.
pub fn add_scaled(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn dense_to_sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(n: usize, v: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut out = zero_vec(n);
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_string_forms() {
        assert_eq!(format_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert_eq!(parse_scalar("-3/9").unwrap(), frac(-1, 3));
        assert_eq!(parse_scalar("5").unwrap(), int(5));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(nth_root_exact(&frac(8, 27), 3), Some(frac(2, 3)));
        assert_eq!(nth_root_exact(&frac(-8, 27), 3), Some(frac(-2, 3)));
        assert_eq!(nth_root_exact(&int(2), 2), None);
        assert_eq!(nth_root_exact(&int(-4), 2), None);
        assert_eq!(nth_root_exact(&int(1), 5), Some(int(1)));
    }
}

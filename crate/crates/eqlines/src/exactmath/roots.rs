//! Real-root counting and isolation by Sturm sequences with rational
//! bisection.

use super::poly::UniPoly;
use super::{int, sign, Rat};
use num::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    ZeroPolynomial,
    NoRealRoot,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::ZeroPolynomial => write!(f, "zero polynomial"),
            RootError::NoRealRoot => write!(f, "no real root in the given interval"),
        }
    }
}

impl std::error::Error for RootError {}

/// Sturm chain of the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let p0 = p.squarefree().primitive();
        let p1 = p0.derivative().primitive();
        let mut chain = vec![p0, p1];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_zero() {
                chain.pop();
                break;
            }
            let prev = &chain[chain.len() - 2];
            let (_, r) = prev.div_rem(last);
            // content removal keeps coefficient sizes under control
            chain.push(r.neg().primitive());
        }
        Ok(SturmChain { chain })
    }

    /// Number of sign variations in the chain evaluated at `x`.
    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut prev = 0i32;
        for p in &self.chain {
            let s = sign(&p.eval(x));
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        assert!(lo <= hi);
        self.variations(lo) - self.variations(hi)
    }
}

/// Count distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Rat, hi: &Rat) -> Result<usize, RootError> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Cauchy root bound `1 + max |c_i / c_n|`; all real roots lie in
/// `(-bound, bound)`.
pub fn cauchy_bound(p: &UniPoly) -> Rat {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    int(1) + max / lead
}

/// Isolate the largest real root of `p` in `(lo, hi)` to an interval
/// `(l, h]` with `h - l <= width`. The caller must supply a bracket
/// containing all real roots, e.g. the Cauchy bound.
pub fn isolate_max_root(
    p: &UniPoly,
    lo: &Rat,
    hi: &Rat,
    width: &Rat,
) -> Result<(Rat, Rat), RootError> {
    let chain = SturmChain::new(p)?;
    if chain.count(lo, hi) == 0 {
        return Err(RootError::NoRealRoot);
    }
    let mut l = lo.clone();
    let mut h = hi.clone();
    // invariant: the largest root lies in (l, h]
    while &h - &l > *width {
        let mid = (&l + &h) / int(2);
        if chain.count(&mid, &h) >= 1 {
            l = mid;
        } else {
            h = mid;
        }
    }
    Ok((l, h))
}

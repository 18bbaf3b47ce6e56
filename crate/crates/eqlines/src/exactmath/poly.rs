//! Univariate polynomials with exact rational coefficients.

use super::Rat;
use num::{One, Signed, Zero};
use std::fmt;

/// Polynomial with coefficients in ascending degree order; trailing zeros
/// are trimmed, the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiply by `x` (degree shift).
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rat::zero());
        out.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * super::int(i as i64))
            .collect();
        Self::new(out)
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let v = &c * b;
                    rem[k + i] -= v;
                }
            }
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(lc) = a.leading().cloned() {
            a = a.scale(&(Rat::one() / lc));
        }
        a
    }

    /// Squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// Divide out rational content, keeping the sign of the leading
    /// coefficient. Used to control coefficient growth in Sturm chains.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut num_gcd = num::BigInt::zero();
        let mut den_lcm = num::BigInt::one();
        for c in &self.coeffs {
            num_gcd = num::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num::Integer::lcm(&den_lcm, c.denom());
        }
        let factor = Rat::new(den_lcm, num_gcd);
        let factor = factor.abs();
        self.scale(&factor)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn basic_arith() {
        let a = p(&[1, 2, 3]); // 3x^2+2x+1
        let b = p(&[0, 1]); // x
        assert_eq!(a.mul(&b), p(&[0, 1, 2, 3]));
        assert_eq!(a.eval(&int(2)), int(17));
        assert_eq!(a.derivative(), p(&[2, 6]));
        assert_eq!(a.degree(), Some(2));
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn div_rem_exact() {
        let a = p(&[-2, 0, 1]); // x^2-2
        let b = p(&[1, 1]); // x+1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[-1]));
        assert_eq!(b.mul(&q).add(&r), a);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 1]); // x+1
        let sq = a.mul(&a).mul(&p(&[-1, 1])); // (x+1)^2 (x-1)
        let g = sq.gcd(&sq.derivative());
        assert_eq!(g, a);
        assert_eq!(sq.squarefree(), p(&[-1, 0, 1]));
    }

    #[test]
    fn primitive_clears_denominators() {
        let a = UniPoly::new(vec![rat(1, 2), rat(-3, 4)]);
        let q = a.primitive();
        assert_eq!(q, UniPoly::new(vec![int(2), int(-3)]));
    }
}

//! Gegenbauer polynomials `P^d_k`, three-point kernels `Q^d_k` and
//! multivariate kernels `Q^{d,m}_k`, all evaluated exactly.
//!
//! The kernels are computed in their parity-decomposed form: by the parity
//! of Gegenbauer polynomials, `(1-u^2)^{k/2}(1-v^2)^{k/2} P(z/sqrt(w))`
//! expands as a polynomial in `z = t - uv` and `w = (1-u^2)(1-v^2)`, so no
//! square roots ever appear.

use crate::exactmath::{int, LinAlgError, Rat, RatMatrix, UniPoly};
use num::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GegenbauerError {
    BadDimension,
    ImproperGram,
}

impl fmt::Display for GegenbauerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GegenbauerError::BadDimension => write!(f, "dimension must be at least 2"),
            GegenbauerError::ImproperGram => write!(f, "Gram matrix is not positive definite"),
        }
    }
}

impl std::error::Error for GegenbauerError {}

/// The family `P^d_k` for a fixed (possibly rational) dimension `d`,
/// precomputed up to a maximum degree. Immutable after construction.
pub struct GegenbauerFamily {
    d: Rat,
    polys: Vec<UniPoly>,
}

/// Default maximum kernel degree; the four-point bound only uses k in
/// {0, 3}, higher k supports exploratory checks.
pub const DEFAULT_MAX_K: usize = 10;

impl GegenbauerFamily {
    /// Precompute `P^d_0 .. P^d_max_k` from the three-term recursion
    /// `(k+d-3) P_k = (2k+d-4) t P_{k-1} - (k-1) P_{k-2}`.
    pub fn new(d: Rat, max_k: usize) -> Self {
        let mut polys = Vec::with_capacity(max_k + 1);
        polys.push(UniPoly::constant(Rat::one()));
        if max_k >= 1 {
            polys.push(UniPoly::x());
        }
        for k in 2..=max_k {
            let ki = int(k as i64);
            let a = &ki * int(2) + &d - int(4);
            let b = &ki - int(1);
            let denom = ki + &d - int(3);
            let prev: &UniPoly = &polys[k - 1];
            let prev2: &UniPoly = &polys[k - 2];
            let p = prev
                .shift_up()
                .scale(&a)
                .sub(&prev2.scale(&b))
                .scale(&(Rat::one() / denom));
            polys.push(p);
        }
        GegenbauerFamily { d, polys }
    }

    pub fn dimension(&self) -> &Rat {
        &self.d
    }

    pub fn poly(&self, k: usize) -> &UniPoly {
        &self.polys[k]
    }

    pub fn max_k(&self) -> usize {
        self.polys.len() - 1
    }
}

/// `P^d_k` for an integer dimension `d >= 2`.
pub fn gegenbauer_poly(d: i64, k: usize) -> Result<UniPoly, GegenbauerError> {
    if d < 2 {
        return Err(GegenbauerError::BadDimension);
    }
    Ok(gegenbauer_poly_rat(&int(d), k))
}

/// `P^d_k` for a rational dimension (used by the dual certificate, where
/// the ambient dimension enters the formulas as a free rational parameter).
/// Coefficient tables are cached per dimension; kernels are evaluated
/// thousands of times during constraint assembly.
pub fn gegenbauer_poly_rat(d: &Rat, k: usize) -> UniPoly {
    use std::cell::RefCell;
    use std::collections::HashMap;
    thread_local! {
        static CACHE: RefCell<HashMap<Rat, GegenbauerFamily>> = RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        let mut cache = cache.borrow_mut();
        let fam = cache
            .entry(d.clone())
            .or_insert_with(|| GegenbauerFamily::new(d.clone(), k.max(DEFAULT_MAX_K)));
        if fam.max_k() < k {
            *fam = GegenbauerFamily::new(d.clone(), k);
        }
        fam.poly(k).clone()
    })
}

/// Evaluate the parity form: `sum_{j = k mod 2} c_j z^j w^{(k-j)/2}` where
/// `c_j` are the coefficients of `p` (which must have the parity of `k`).
fn parity_eval(p: &UniPoly, k: usize, z: &Rat, w: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for j in (k % 2..=k).step_by(2) {
        let c = p.coeff(j);
        if c.is_zero() {
            continue;
        }
        let mut term = c;
        for _ in 0..j {
            term *= z;
        }
        for _ in 0..(k - j) / 2 {
            term *= w;
        }
        acc += term;
    }
    // odd-parity coefficients of a Gegenbauer polynomial of even k (and
    // vice versa) are identically zero
    debug_assert!((0..p.coeffs().len())
        .filter(|j| j % 2 != k % 2)
        .all(|j| p.coeff(j).is_zero()));
    acc
}

/// Three-point kernel `Q^d_k(u, v, t)` with `z = t - uv`,
/// `w = (1-u^2)(1-v^2)`.
pub fn q3(d: i64, k: usize, u: &Rat, v: &Rat, t: &Rat) -> Result<Rat, GegenbauerError> {
    if d < 3 {
        return Err(GegenbauerError::BadDimension);
    }
    Ok(q3_rat(&int(d), k, u, v, t))
}

pub fn q3_rat(d: &Rat, k: usize, u: &Rat, v: &Rat, t: &Rat) -> Rat {
    let p = gegenbauer_poly_rat(&(d - int(1)), k);
    let z = t - u * v;
    let w = (Rat::one() - u * u) * (Rat::one() - v * v);
    parity_eval(&p, k, &z, &w)
}

/// Multivariate kernel `Q^{d,m}_k(G; u, v, t)` with
/// `z = t - u G^{-1} v^T` and `w = (1 - u G^{-1} u^T)(1 - v G^{-1} v^T)`.
/// For `m = 1`, `G = (1)`, this coincides with `q3`.
pub fn qm(
    d: &Rat,
    m: usize,
    k: usize,
    g: &RatMatrix,
    u: &[Rat],
    v: &[Rat],
    t: &Rat,
) -> Result<Rat, GegenbauerError> {
    assert_eq!(g.rows(), m);
    assert_eq!(g.cols(), m);
    assert_eq!(u.len(), m);
    assert_eq!(v.len(), m);
    if !g.is_positive_definite() {
        return Err(GegenbauerError::ImproperGram);
    }
    let gu = g.solve_linear(u).map_err(|e| match e {
        LinAlgError::Singular => GegenbauerError::ImproperGram,
        _ => unreachable!(),
    })?;
    let gv = g.solve_linear(v).unwrap();
    let dot = |a: &[Rat], b: &[Rat]| -> Rat { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let z = t - dot(u, &gv);
    let wu = Rat::one() - dot(u, &gu);
    let wv = Rat::one() - dot(v, &gv);
    let w = wu * wv;
    let p = gegenbauer_poly_rat(&(d - int(m as i64)), k);
    Ok(parity_eval(&p, k, &z, &w))
}

/// A switching transform of an extended Gram tuple: a diagonal +-1 matrix
/// acting on the block `G` and signs for the last two rows.
#[derive(Clone, Debug)]
pub struct SwitchTransform {
    pub lambda: Vec<i8>,
    pub eps1: i8,
    pub eps2: i8,
}

impl SwitchTransform {
    /// Apply to `(G; u, v, t)`, producing the switched tuple.
    pub fn apply(
        &self,
        g: &RatMatrix,
        u: &[Rat],
        v: &[Rat],
        t: &Rat,
    ) -> (RatMatrix, Vec<Rat>, Vec<Rat>, Rat) {
        let m = u.len();
        let sgn = |s: i8, r: &Rat| if s < 0 { -r.clone() } else { r.clone() };
        let g2 = RatMatrix::from_fn(m, m, |i, j| {
            sgn(self.lambda[i] * self.lambda[j], g.get(i, j))
        });
        let u2: Vec<Rat> = (0..m).map(|i| sgn(self.eps1 * self.lambda[i], &u[i])).collect();
        let v2: Vec<Rat> = (0..m).map(|i| sgn(self.eps2 * self.lambda[i], &v[i])).collect();
        let t2 = sgn(self.eps1 * self.eps2, t);
        (g2, u2, v2, t2)
    }
}

/// `Q^{d,m}_k` evaluated at the switched tuple; by the switching property
/// this equals `(eps1 eps2)^k Q^{d,m}_k(G; u, v, t)`.
pub fn switching_conjugate_value(
    d: &Rat,
    m: usize,
    k: usize,
    transform: &SwitchTransform,
    g: &RatMatrix,
    u: &[Rat],
    v: &[Rat],
    t: &Rat,
) -> Result<Rat, GegenbauerError> {
    let (g2, u2, v2, t2) = transform.apply(g, u, v, t);
    qm(d, m, k, &g2, &u2, &v2, &t2)
}

//! Assembly of the semidefinite constraint matrices: the two-point linear
//! functional, the original and alternative three-point matrices, the
//! alternative multi-point matrices, and their switching-reduced forms.

use crate::distributions::{
    class_distribution, multipoint, three_point, two_point, Configuration, DistError,
};
use crate::exactmath::{int, Rat, RatMatrix};
use crate::gegenbauer::{gegenbauer_poly_rat, q3_rat, qm, GegenbauerError};
use crate::gram::SignPattern;
use num::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintError {
    ImproperGram,
    NotEquiangular,
    TooFewPoints,
    UnsupportedOrder,
}

impl fmt::Display for ConstraintError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintError::ImproperGram => write!(f, "base Gram matrix is not positive definite"),
            ConstraintError::NotEquiangular => write!(f, "configuration is not equiangular"),
            ConstraintError::TooFewPoints => write!(f, "configuration has too few points"),
            ConstraintError::UnsupportedOrder => write!(f, "only m in {{1, 2}} is supported"),
        }
    }
}

impl std::error::Error for ConstraintError {}

impl From<DistError> for ConstraintError {
    fn from(e: DistError) -> Self {
        match e {
            DistError::ImproperGram => ConstraintError::ImproperGram,
            DistError::NotEquiangular => ConstraintError::NotEquiangular,
            DistError::TooFewPoints => ConstraintError::TooFewPoints,
        }
    }
}

impl From<GegenbauerError> for ConstraintError {
    fn from(_: GegenbauerError) -> Self {
        ConstraintError::ImproperGram
    }
}

/// Basis slot of a constraint matrix: the aggregated all-ones slot, or an
/// index vector of inner products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisLabel {
    One,
    Ip(Vec<Rat>),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::One => write!(f, "1"),
            BasisLabel::Ip(v) => {
                write!(f, "(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintKind {
    Alt3 { k: usize },
    Orig3 { k: usize, n: usize },
    AltMulti { m: usize, k: usize },
    Reduced { m: usize, k: usize },
}

/// A symmetric constraint matrix with labeled basis slots.
#[derive(Debug, Clone)]
pub struct ConstraintMatrix {
    pub kind: ConstraintKind,
    pub matrix: RatMatrix,
    pub labels: Vec<BasisLabel>,
}

/// Two-point linear functional `N + sum_t x(t) P^d_k(t)`; nonnegative for
/// every genuine configuration when k >= 1.
pub fn lp_value(x: &Configuration, k: usize) -> Rat {
    let d = int(x.dim() as i64);
    let p = gegenbauer_poly_rat(&d, k);
    let counts = two_point(x);
    let n = int(x.len() as i64);
    let mut acc = n;
    for (t, c) in counts {
        if t.is_one() {
            continue;
        }
        acc += int(c as i64) * p.eval(&t);
    }
    acc
}

/// Inner product list A' = {1} followed by A(X) in descending order.
fn a_prime(x: &Configuration) -> Vec<Rat> {
    let mut out = vec![int(1)];
    out.extend(x.inner_products());
    out
}

/// Alternative three-point matrix of order s+1, basis (1, then A
/// descending); entry (u, v) sums y(u, v, t) Q^d_k(u, v, t) over t in A'.
pub fn build_alt_threepoint(x: &Configuration, k: usize) -> ConstraintMatrix {
    let d = int(x.dim() as i64);
    let slots = a_prime(x);
    let y = three_point(x);
    let s1 = slots.len();
    let matrix = RatMatrix::from_fn(s1, s1, |i, j| {
        let mut acc = Rat::zero();
        for t in &slots {
            let key = (slots[i].clone(), slots[j].clone(), t.clone());
            if let Some(&count) = y.get(&key) {
                if count > 0 {
                    acc += int(count as i64) * q3_rat(&d, k, &slots[i], &slots[j], t);
                }
            }
        }
        acc
    });
    ConstraintMatrix {
        kind: ConstraintKind::Alt3 { k },
        matrix,
        labels: slots.into_iter().map(|u| BasisLabel::Ip(vec![u])).collect(),
    }
}

/// Original three-point matrix of order n+1 in the monomial basis
/// (1, u, ..., u^n); entry (i, j) sums y(u, v, t) Q^d_k(u, v, t) u^i v^j.
pub fn build_original_threepoint(x: &Configuration, k: usize, n: usize) -> ConstraintMatrix {
    let d = int(x.dim() as i64);
    let slots = a_prime(x);
    let y = three_point(x);
    let mut matrix = RatMatrix::zeros(n + 1, n + 1);
    for u in &slots {
        for v in &slots {
            for t in &slots {
                let key = (u.clone(), v.clone(), t.clone());
                let Some(&count) = y.get(&key) else { continue };
                if count == 0 {
                    continue;
                }
                let base = int(count as i64) * q3_rat(&d, k, u, v, t);
                if base.is_zero() {
                    continue;
                }
                let mut upow = Rat::one();
                for i in 0..=n {
                    let mut vpow = Rat::one();
                    for j in 0..=n {
                        let add = &base * &upow * &vpow;
                        let cur = matrix.get(i, j).clone();
                        matrix.set(i, j, cur + add);
                        vpow *= v;
                    }
                    upow *= u;
                }
            }
        }
    }
    ConstraintMatrix {
        kind: ConstraintKind::Orig3 { k, n },
        matrix,
        labels: (0..=n)
            .map(|i| BasisLabel::Ip(vec![int(i as i64)]))
            .collect(),
    }
}

/// All index vectors in A^m, lexicographic over A descending.
fn index_vectors(a: &[Rat], m: usize) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                a.iter().map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Alternative multi-point matrix for a fixed proper base Gram matrix G:
/// order s^m + 1 with the aggregated slot when k = 0, order s^m when
/// k >= 1.
pub fn build_alt_multipoint(
    x: &Configuration,
    m: usize,
    k: usize,
    g: &RatMatrix,
) -> Result<ConstraintMatrix, ConstraintError> {
    let d = int(x.dim() as i64);
    let tables = multipoint(x, m, g)?;
    let a = x.inner_products();
    let vectors = index_vectors(&a, m);
    let count_sub1 = |u: &Vec<Rat>| -> Rat { int(*tables.sub1.get(u).unwrap_or(&0) as i64) };
    let count_level = |u: &Vec<Rat>, v: &Vec<Rat>, t: &Rat| -> Rat {
        int(*tables
            .level
            .get(&(u.clone(), v.clone(), t.clone()))
            .unwrap_or(&0) as i64)
    };

    if k == 0 {
        // all Q weights are 1
        let order = vectors.len() + 1;
        let mut matrix = RatMatrix::zeros(order, order);
        matrix.set(0, 0, int(tables.sub2 as i64));
        for (i, u) in vectors.iter().enumerate() {
            let c = count_sub1(u);
            matrix.set(0, i + 1, c.clone());
            matrix.set(i + 1, 0, c.clone());
            matrix.set(i + 1, i + 1, c);
        }
        for (i, u) in vectors.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate() {
                let mut acc = matrix.get(i + 1, j + 1).clone();
                for t in &a {
                    acc += count_level(u, v, t);
                }
                matrix.set(i + 1, j + 1, acc);
            }
        }
        let mut labels = vec![BasisLabel::One];
        labels.extend(vectors.into_iter().map(BasisLabel::Ip));
        Ok(ConstraintMatrix {
            kind: ConstraintKind::AltMulti { m, k },
            matrix,
            labels,
        })
    } else {
        let order = vectors.len();
        let mut matrix = RatMatrix::zeros(order, order);
        for (i, u) in vectors.iter().enumerate() {
            let c = count_sub1(u);
            if !c.is_zero() {
                let q = qm(&d, m, k, g, u, u, &int(1))?;
                matrix.set(i, i, c * q);
            }
        }
        for (i, u) in vectors.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate() {
                let mut acc = matrix.get(i, j).clone();
                for t in &a {
                    let c = count_level(u, v, t);
                    if !c.is_zero() {
                        acc += c * qm(&d, m, k, g, u, v, t)?;
                    }
                }
                matrix.set(i, j, acc);
            }
        }
        Ok(ConstraintMatrix {
            kind: ConstraintKind::AltMulti { m, k },
            matrix,
            labels: vectors.into_iter().map(BasisLabel::Ip).collect(),
        })
    }
}

/// First-row-normalized sign pattern of the extended tuple Gram matrix
/// assembled from the signs of G, u, v, t.
fn tuple_pattern(g: &RatMatrix, u: &[Rat], v: &[Rat], t: Option<&Rat>) -> SignPattern {
    let m = u.len();
    let extra = if t.is_some() { 2 } else { 1 };
    let n = m + extra;
    let entry = |i: usize, j: usize| -> i8 {
        // order: the m base rows, then the u column, then the v column
        let val: &Rat = if i < m && j < m {
            g.get(i, j)
        } else if i < m {
            if j == m {
                &u[i]
            } else {
                &v[i]
            }
        } else if j < m {
            if i == m {
                &u[j]
            } else {
                &v[j]
            }
        } else {
            t.expect("t required for two extra rows")
        };
        if val.is_positive() {
            1
        } else {
            -1
        }
    };
    let mut bits = 0u32;
    let mut pos = 0usize;
    for p in 0..n {
        for q in (p + 1)..n {
            let s = if p == 0 {
                1
            } else {
                entry(0, p) * entry(0, q) * entry(p, q)
            };
            if s > 0 {
                bits |= 1 << pos;
            }
            pos += 1;
        }
    }
    SignPattern::new(n, bits)
}

/// Index vectors over {+-alpha}^m with the first slot pinned to +alpha.
fn reduced_vectors(alpha: &Rat, m: usize) -> Vec<Vec<Rat>> {
    let pm = vec![alpha.clone(), -alpha.clone()];
    index_vectors(&pm, m - 1)
        .into_iter()
        .map(|tail| {
            let mut v = vec![alpha.clone()];
            v.extend(tail);
            v
        })
        .collect()
}

/// Switching-reduced constraint matrix for an equiangular configuration:
/// order 2^{m-1} + 1 when k = 0, order 2^{m-1} when k >= 1. Counts are
/// class counts; Q weights are evaluated at the supplied representative G.
pub fn build_reduced(
    x: &Configuration,
    m: usize,
    k: usize,
    g: &RatMatrix,
) -> Result<ConstraintMatrix, ConstraintError> {
    if m == 0 || m > 2 {
        return Err(ConstraintError::UnsupportedOrder);
    }
    if !g.is_symmetric() || !g.is_positive_definite() {
        return Err(ConstraintError::ImproperGram);
    }
    let alpha = x
        .alpha()
        .ok_or(ConstraintError::NotEquiangular)?
        .clone();
    let d = int(x.dim() as i64);
    let table = class_distribution(x, m)?;
    let vectors = reduced_vectors(&alpha, m);
    let pm = [alpha.clone(), -alpha.clone()];

    let class_level = |u: &[Rat], v: &[Rat], t: &Rat| -> Rat {
        let pat = tuple_pattern(g, u, v, Some(t));
        int(*table.level().get(&pat).unwrap_or(&0) as i64)
    };
    let class_sub1 = |u: &[Rat]| -> Rat {
        let pat = tuple_pattern(g, u, &[], None);
        int(*table.sub1().get(&pat).unwrap_or(&0) as i64)
    };
    let class_sub2 = || -> Rat { int(table.sub2_total() as i64) };

    if k == 0 {
        let order = vectors.len() + 1;
        let mut matrix = RatMatrix::zeros(order, order);
        matrix.set(0, 0, class_sub2());
        for (i, u) in vectors.iter().enumerate() {
            let c = class_sub1(u);
            matrix.set(0, i + 1, c.clone());
            matrix.set(i + 1, 0, c.clone());
            matrix.set(i + 1, i + 1, c);
        }
        for (i, u) in vectors.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate() {
                let mut acc = matrix.get(i + 1, j + 1).clone();
                for t in &pm {
                    acc += class_level(u, v, t);
                }
                matrix.set(i + 1, j + 1, acc);
            }
        }
        let mut labels = vec![BasisLabel::One];
        labels.extend(vectors.into_iter().map(BasisLabel::Ip));
        Ok(ConstraintMatrix {
            kind: ConstraintKind::Reduced { m, k },
            matrix,
            labels,
        })
    } else {
        let order = vectors.len();
        let mut matrix = RatMatrix::zeros(order, order);
        for (i, u) in vectors.iter().enumerate() {
            for (j, v) in vectors.iter().enumerate() {
                let mut acc = if i == j {
                    class_sub1(u) * qm(&d, m, k, g, u, u, &int(1))?
                } else {
                    Rat::zero()
                };
                for t in &pm {
                    let c = class_level(u, v, t);
                    if !c.is_zero() {
                        acc += c * qm(&d, m, k, g, u, v, t)?;
                    }
                }
                matrix.set(i, j, acc);
            }
        }
        Ok(ConstraintMatrix {
            kind: ConstraintKind::Reduced { m, k },
            matrix,
            labels: vectors.into_iter().map(BasisLabel::Ip).collect(),
        })
    }
}

/// Verify, entry by entry, that summing the basis-conjugated alternative
/// matrices over all sign patterns of the base block equals twice the
/// reduced matrix.
pub fn halved_identity_check(
    x: &Configuration,
    m: usize,
    k: usize,
    g: &RatMatrix,
) -> Result<bool, ConstraintError> {
    let reduced = build_reduced(x, m, k, g)?;
    let alpha = x.alpha().ok_or(ConstraintError::NotEquiangular)?.clone();
    let vectors = reduced_vectors(&alpha, m);
    let order = reduced.matrix.rows();
    let offset = if k == 0 { 1 } else { 0 };
    let mut total = RatMatrix::zeros(order, order);

    // all +-alpha index vectors, in the alternative basis order
    let pm = [alpha.clone(), -alpha.clone()];
    let alt_vectors = index_vectors(&pm, m);
    for lam_mask in 0..(1u32 << m) {
        let lambda: Vec<i8> = (0..m)
            .map(|i| if lam_mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        let g2 = RatMatrix::from_fn(m, m, |i, j| {
            let e = g.get(i, j);
            if lambda[i] * lambda[j] < 0 {
                -e.clone()
            } else {
                e.clone()
            }
        });
        let alt = build_alt_multipoint(x, m, k, &g2)?;
        // map each alternative slot w to the reduced slot of
        // lambda * w, normalized to first coordinate +alpha, with sign
        // (-1)^k when the normalization flips (k >= 1 only)
        let mut target = Vec::with_capacity(alt_vectors.len());
        let mut sign = Vec::with_capacity(alt_vectors.len());
        for w in &alt_vectors {
            let lw: Vec<Rat> = w
                .iter()
                .zip(&lambda)
                .map(|(c, &l)| if l < 0 { -c.clone() } else { c.clone() })
                .collect();
            let flip = lw[0].is_negative();
            let nu: Vec<Rat> = if flip { lw.iter().map(|c| -c).collect() } else { lw };
            let idx = vectors
                .iter()
                .position(|v| v == &nu)
                .expect("normalized vector in reduced basis");
            target.push(idx + offset);
            sign.push(if flip && k % 2 == 1 { -1i8 } else { 1 });
        }
        if k == 0 {
            let cur = total.get(0, 0).clone();
            total.set(0, 0, cur + alt.matrix.get(0, 0).clone());
            for (wi, &ti) in target.iter().enumerate() {
                let cur = total.get(0, ti).clone() + alt.matrix.get(0, wi + 1);
                total.set(0, ti, cur.clone());
                total.set(ti, 0, cur);
            }
        }
        for (wi, &ti) in target.iter().enumerate() {
            for (wj, &tj) in target.iter().enumerate() {
                let s = sign[wi] * sign[wj];
                let add = alt.matrix.get(wi + offset, wj + offset);
                let add = if s < 0 { -add.clone() } else { add.clone() };
                let cur = total.get(ti, tj).clone();
                total.set(ti, tj, cur + add);
            }
        }
    }
    Ok(total == reduced.matrix.scale(&int(2)))
}

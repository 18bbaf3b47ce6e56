//! Gram matrices, switching equivalence, canonical class representatives,
//! and exhaustive enumeration of switching classes (Seidel matrices) of
//! small order.

use crate::exactmath::{Rat, RatMatrix};
use itertools::Itertools;
use num::{One, Signed};
use std::collections::BTreeSet;
use std::fmt;

/// Largest order supported by exhaustive class enumeration.
pub const MAX_ENUM_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramError {
    NotSymmetric,
    NotUnitDiagonal,
    MixedMagnitudes,
    TooLarge,
}

impl fmt::Display for GramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramError::NotSymmetric => write!(f, "matrix is not symmetric"),
            GramError::NotUnitDiagonal => write!(f, "diagonal entries are not all 1"),
            GramError::MixedMagnitudes => {
                write!(f, "off-diagonal entries are not all of the same magnitude")
            }
            GramError::TooLarge => {
                write!(f, "order exceeds the exhaustive enumeration bound {MAX_ENUM_ORDER}")
            }
        }
    }
}

impl std::error::Error for GramError {}

/// A symmetric rational matrix with unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    mat: RatMatrix,
}

impl GramMatrix {
    pub fn new(mat: RatMatrix) -> Result<Self, GramError> {
        if !mat.is_symmetric() {
            return Err(GramError::NotSymmetric);
        }
        for i in 0..mat.rows() {
            if !mat.get(i, i).is_one() {
                return Err(GramError::NotUnitDiagonal);
            }
        }
        Ok(GramMatrix { mat })
    }

    pub fn order(&self) -> usize {
        self.mat.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        self.mat.get(i, j)
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.mat
    }

    /// Proper Gram matrix = positive definite.
    pub fn is_proper(&self) -> bool {
        self.mat.is_positive_definite()
    }

    /// Sign-flip the rows and columns where `lambda[i] = -1`.
    pub fn switch(&self, lambda: &[i8]) -> GramMatrix {
        assert_eq!(lambda.len(), self.order());
        let n = self.order();
        let mat = RatMatrix::from_fn(n, n, |i, j| {
            let e = self.mat.get(i, j);
            if lambda[i] * lambda[j] < 0 {
                -e.clone()
            } else {
                e.clone()
            }
        });
        GramMatrix { mat }
    }

    /// Extract the off-diagonal sign pattern, requiring all off-diagonal
    /// entries to be +-alpha for a single magnitude alpha.
    pub fn sign_pattern(&self) -> Result<SignPattern, GramError> {
        let n = self.order();
        if n < 2 {
            return Ok(SignPattern { n, bits: 0 });
        }
        let alpha = self.entry(0, 1).abs();
        let mut bits = 0u32;
        for i in 0..n {
            for j in (i + 1)..n {
                let e = self.entry(i, j);
                if e.abs() != alpha {
                    return Err(GramError::MixedMagnitudes);
                }
                if e.is_positive() {
                    bits |= 1 << bit_index(n, i, j);
                }
            }
        }
        Ok(SignPattern { n, bits })
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

fn bit_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Off-diagonal +-1 pattern of an order-n Gram matrix with entries
/// +-alpha, stored as a bitset of the upper triangle (bit set = +alpha).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern {
    n: usize,
    bits: u32,
}

impl SignPattern {
    pub fn new(n: usize, bits: u32) -> Self {
        assert!(n <= 8);
        SignPattern { n, bits }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.bits >> bit_index(self.n, i, j) & 1 == 1
    }

    /// Flip every edge incident to vertex `v`.
    pub fn switch_vertex(&self, v: usize) -> SignPattern {
        let mut bits = self.bits;
        for i in 0..self.n {
            if i == v {
                continue;
            }
            let (a, b) = if i < v { (i, v) } else { (v, i) };
            bits ^= 1 << bit_index(self.n, a, b);
        }
        SignPattern { n: self.n, bits }
    }

    /// Switch the vertex subset given by `mask`; an edge flips iff exactly
    /// one endpoint is in the set.
    pub fn switch_mask(&self, mask: u32) -> SignPattern {
        let mut bits = self.bits;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (mask >> i & 1) != (mask >> j & 1) {
                    bits ^= 1 << bit_index(self.n, i, j);
                }
            }
        }
        SignPattern { n: self.n, bits }
    }

    /// Relabel vertices: new edge (i, j) takes the old edge
    /// (perm[i], perm[j]).
    pub fn permute(&self, perm: &[usize]) -> SignPattern {
        let mut bits = 0u32;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(perm[i], perm[j]) {
                    bits |= 1 << bit_index(self.n, i, j);
                }
            }
        }
        SignPattern { n: self.n, bits }
    }

    /// Swap vertices `a` and `b`.
    fn transpose_vertices(&self, a: usize, b: usize) -> SignPattern {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(a, b);
        self.permute(&perm)
    }

    /// Upper-triangle string, row by row, `+` for +alpha.
    pub fn to_triangle_string(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                s.push(if self.get(i, j) { '+' } else { '-' });
            }
        }
        s
    }
}

/// Canonical representative of a switching-and-permutation class: the
/// lexicographically minimal pattern over all switchings and relabelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwitchingClassKey(pub SignPattern);

impl SwitchingClassKey {
    pub fn pattern(&self) -> SignPattern {
        self.0
    }
}

/// Canonical key of a sign pattern: minimum over all 2^{n-1} switchings
/// (vertex 0 fixed to +, as switching a set and its complement coincide)
/// times all n! vertex permutations.
pub fn canonical_key_of_pattern(p: SignPattern) -> SwitchingClassKey {
    let n = p.order();
    if n < 2 {
        return SwitchingClassKey(p);
    }
    let mut best = p.bits();
    for perm in (0..n).permutations(n) {
        let q = p.permute(&perm);
        for mask in 0..(1u32 << (n - 1)) {
            let r = q.switch_mask(mask << 1);
            if r.bits() < best {
                best = r.bits();
            }
        }
    }
    SwitchingClassKey(SignPattern::new(n, best))
}

/// Canonical key of an equiangular Gram matrix (off-diagonal +-alpha).
pub fn canonical_key(m: &GramMatrix) -> Result<SwitchingClassKey, GramError> {
    Ok(canonical_key_of_pattern(m.sign_pattern()?))
}

/// All switching-and-permutation classes of order `n`, one canonical
/// representative each, sorted. The orbit partition is computed by a BFS
/// closure under single-vertex switchings and adjacent transpositions.
pub fn enumerate_classes(n: usize) -> Result<Vec<SwitchingClassKey>, GramError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(GramError::TooLarge);
    }
    if n == 1 {
        return Ok(vec![SwitchingClassKey(SignPattern::new(1, 0))]);
    }
    let edges = n * (n - 1) / 2;
    let total = 1usize << edges;
    let mut visited = vec![false; total];
    let mut classes = Vec::new();
    let mut queue: Vec<u32> = Vec::new();
    for start in 0..total as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut min_bits = start;
        visited[start as usize] = true;
        queue.clear();
        queue.push(start);
        while let Some(bits) = queue.pop() {
            if bits < min_bits {
                min_bits = bits;
            }
            let p = SignPattern::new(n, bits);
            for v in 0..n {
                let q = p.switch_vertex(v).bits();
                if !visited[q as usize] {
                    visited[q as usize] = true;
                    queue.push(q);
                }
            }
            for v in 0..n - 1 {
                let q = p.transpose_vertices(v, v + 1).bits();
                if !visited[q as usize] {
                    visited[q as usize] = true;
                    queue.push(q);
                }
            }
        }
        classes.push(SwitchingClassKey(SignPattern::new(n, min_bits)));
    }
    classes.sort();
    Ok(classes)
}

/// Partition the order-n pattern space into switching-and-permutation
/// orbits, returning (key, orbit size) pairs.
pub fn orbit_sizes(n: usize) -> Result<Vec<(SwitchingClassKey, usize)>, GramError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(GramError::TooLarge);
    }
    if n == 1 {
        return Ok(vec![(SwitchingClassKey(SignPattern::new(1, 0)), 1)]);
    }
    let edges = n * (n - 1) / 2;
    let total = 1usize << edges;
    let mut visited = vec![false; total];
    let mut out = Vec::new();
    let mut queue: Vec<u32> = Vec::new();
    for start in 0..total as u32 {
        if visited[start as usize] {
            continue;
        }
        let mut min_bits = start;
        let mut size = 0usize;
        visited[start as usize] = true;
        queue.clear();
        queue.push(start);
        while let Some(bits) = queue.pop() {
            size += 1;
            if bits < min_bits {
                min_bits = bits;
            }
            let p = SignPattern::new(n, bits);
            for v in 0..n {
                let q = p.switch_vertex(v).bits();
                if !visited[q as usize] {
                    visited[q as usize] = true;
                    queue.push(q);
                }
            }
            for v in 0..n - 1 {
                let q = p.transpose_vertices(v, v + 1).bits();
                if !visited[q as usize] {
                    visited[q as usize] = true;
                    queue.push(q);
                }
            }
        }
        out.push((SwitchingClassKey(SignPattern::new(n, min_bits)), size));
    }
    out.sort();
    Ok(out)
}

/// Extended Gram tuple `(G; u, v, t)` with exact entries.
pub type ExtendedGram = (RatMatrix, Vec<Rat>, Vec<Rat>, Rat);

/// All distinct extended Grams in the switching class of `(G; u, v, t)`;
/// the orbit size divides 2^{m+1}.
pub fn switching_orbit(g: &RatMatrix, u: &[Rat], v: &[Rat], t: &Rat) -> Vec<ExtendedGram> {
    use crate::gegenbauer::SwitchTransform;
    let m = u.len();
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut out = Vec::new();
    for lam_mask in 0..(1u32 << m) {
        let lambda: Vec<i8> = (0..m)
            .map(|i| if lam_mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        for (eps1, eps2) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
            let tr = SwitchTransform {
                lambda: lambda.clone(),
                eps1,
                eps2,
            };
            let (g2, u2, v2, t2) = tr.apply(g, u, v, t);
            let mut flat: Vec<Rat> = Vec::with_capacity(m * m + 2 * m + 1);
            for i in 0..m {
                for j in 0..m {
                    flat.push(g2.get(i, j).clone());
                }
            }
            flat.extend(u2.iter().cloned());
            flat.extend(v2.iter().cloned());
            flat.push(t2.clone());
            if seen.insert(flat) {
                out.push((g2, u2, v2, t2));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn gram_from_signs(alpha: &Rat, signs: &[&[i8]]) -> GramMatrix {
        let n = signs.len() + 1;
        let mat = RatMatrix::from_fn(n, n, |i, j| {
            if i == j {
                int(1)
            } else {
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                let s = signs[a][b - a - 1];
                if s > 0 {
                    alpha.clone()
                } else {
                    -alpha.clone()
                }
            }
        });
        GramMatrix::new(mat).unwrap()
    }

    #[test]
    fn switch_identity_and_negation() {
        let a = rat(1, 3);
        let m = gram_from_signs(&a, &[&[1, 1], &[1]]);
        assert_eq!(m.switch(&[1, 1, 1]), m);
        assert_eq!(m.switch(&[-1, -1, -1]), m);
        let s = m.switch(&[1, 1, -1]);
        assert_eq!(s.entry(0, 1), &a);
        assert_eq!(s.entry(0, 2), &(-a.clone()));
        assert_eq!(s.entry(1, 2), &(-a.clone()));
    }

    #[test]
    fn switch_involution() {
        let a = rat(1, 5);
        let m = gram_from_signs(&a, &[&[1, -1, 1], &[-1, -1], &[1]]);
        for mask in 0..16u32 {
            let lam: Vec<i8> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            assert_eq!(m.switch(&lam).switch(&lam), m);
        }
    }

    #[test]
    fn three_by_three_has_two_classes() {
        let a = rat(1, 3);
        let mut keys = BTreeSet::new();
        for bits in 0..8u32 {
            let signs0 = [
                if bits & 1 == 1 { 1i8 } else { -1 },
                if bits & 2 == 2 { 1 } else { -1 },
            ];
            let signs1 = [if bits & 4 == 4 { 1i8 } else { -1 }];
            let m = gram_from_signs(&a, &[&signs0, &signs1]);
            keys.insert(canonical_key(&m).unwrap());
        }
        assert_eq!(keys.len(), 2);
    }

    #[test]
    fn six_listed_order4_matrices_share_a_key() {
        let a = rat(1, 3);
        // upper-triangle sign rows of the six matrices of the switching
        // example: rows (12,13,14), (23,24), (34)
        let sixes: [[&[i8]; 3]; 6] = [
            [&[1, 1, 1], &[1, 1], &[-1]],
            [&[1, 1, 1], &[1, -1], &[1]],
            [&[1, 1, 1], &[1, -1], &[-1]],
            [&[1, 1, 1], &[-1, 1], &[1]],
            [&[1, 1, 1], &[-1, 1], &[-1]],
            [&[1, 1, 1], &[-1, -1], &[1]],
        ];
        let keys: BTreeSet<_> = sixes
            .iter()
            .map(|rows| canonical_key(&gram_from_signs(&a, rows)).unwrap())
            .collect();
        assert_eq!(keys.len(), 1);
    }

    #[test]
    fn all_plus_key_is_permutation_stable() {
        let a = rat(1, 3);
        let m = gram_from_signs(&a, &[&[1, 1, 1, 1], &[1, 1, 1], &[1, 1], &[1]]);
        let base = canonical_key(&m).unwrap();
        let p = m.sign_pattern().unwrap();
        for perm in (0..5).permutations(5) {
            assert_eq!(canonical_key_of_pattern(p.permute(&perm)), base);
        }
    }

    #[test]
    fn key_invariant_under_switch_and_permute() {
        let a = rat(1, 3);
        let m = gram_from_signs(&a, &[&[1, -1, 1], &[1, 1], &[-1]]);
        let base = canonical_key(&m).unwrap();
        for mask in 0..16u32 {
            let lam: Vec<i8> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            assert_eq!(canonical_key(&m.switch(&lam)).unwrap(), base);
        }
        let p = m.sign_pattern().unwrap();
        for perm in (0..4).permutations(4) {
            assert_eq!(canonical_key_of_pattern(p.permute(&perm)), base);
        }
    }

    #[test]
    fn class_counts_small_orders() {
        // Seidel matrix counts 1, 1, 2, 3, 7, 16 for n = 1..6
        // (n = 7 -> 54 runs in the acceptance suite)
        let expect = [1usize, 1, 2, 3, 7, 16];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(enumerate_classes(i + 1).unwrap().len(), e, "n = {}", i + 1);
        }
        assert_eq!(enumerate_classes(8), Err(GramError::TooLarge));
        assert_eq!(enumerate_classes(0), Err(GramError::TooLarge));
    }

    #[test]
    fn orbit_sizes_partition_pattern_space() {
        for n in 2..=5usize {
            let sizes = orbit_sizes(n).unwrap();
            let total: usize = sizes.iter().map(|(_, s)| s).sum();
            assert_eq!(total, 1 << (n * (n - 1) / 2));
        }
    }

    #[test]
    fn mixed_magnitudes_rejected() {
        let mat = RatMatrix::from_rows(vec![
            vec![int(1), rat(1, 2)],
            vec![rat(1, 2), int(1)],
        ]);
        let g = GramMatrix::new(mat).unwrap();
        assert!(g.sign_pattern().is_ok());
        let mat = RatMatrix::from_rows(vec![
            vec![int(1), rat(1, 2), rat(1, 3)],
            vec![rat(1, 2), int(1), rat(1, 2)],
            vec![rat(1, 3), rat(1, 2), int(1)],
        ]);
        let g = GramMatrix::new(mat).unwrap();
        assert_eq!(g.sign_pattern(), Err(GramError::MixedMagnitudes));
    }

    #[test]
    fn order4_switching_reaches_one_of_eight_normal_forms() {
        // every 4x4 pattern reaches, under switching alone, exactly one
        // pattern whose first row is (+,+,+)
        for bits in 0..(1u32 << 6) {
            let p = SignPattern::new(4, bits);
            let mut normals = BTreeSet::new();
            for mask in 0..16u32 {
                let q = p.switch_mask(mask);
                if q.get(0, 1) && q.get(0, 2) && q.get(0, 3) {
                    normals.insert(q);
                }
            }
            assert_eq!(normals.len(), 1);
        }
    }

    #[test]
    fn orbit_of_triple_all_alpha() {
        let a = rat(1, 3);
        let g = RatMatrix::identity(1);
        let orbit = switching_orbit(&g, &[a.clone()], &[a.clone()], &a);
        assert_eq!(orbit.len(), 4);
        // the y1 patterns: (a,a,a), (a,-a,-a), (-a,a,-a), (-a,-a,a)
        let pats: BTreeSet<(Rat, Rat, Rat)> = orbit
            .iter()
            .map(|(_, u, v, t)| (u[0].clone(), v[0].clone(), t.clone()))
            .collect();
        let na = -a.clone();
        let expect: BTreeSet<_> = [
            (a.clone(), a.clone(), a.clone()),
            (a.clone(), na.clone(), na.clone()),
            (na.clone(), a.clone(), na.clone()),
            (na.clone(), na.clone(), a.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(pats, expect);
    }

    #[test]
    fn orbit_of_triple_mixed() {
        let a = rat(1, 3);
        let g = RatMatrix::identity(1);
        let na = -a.clone();
        let orbit = switching_orbit(&g, &[a.clone()], &[a.clone()], &na);
        assert_eq!(orbit.len(), 4);
        let pats: BTreeSet<(Rat, Rat, Rat)> = orbit
            .iter()
            .map(|(_, u, v, t)| (u[0].clone(), v[0].clone(), t.clone()))
            .collect();
        let expect: BTreeSet<_> = [
            (a.clone(), a.clone(), na.clone()),
            (a.clone(), na.clone(), a.clone()),
            (na.clone(), a.clone(), a.clone()),
            (na.clone(), na.clone(), na.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(pats, expect);
    }
}

//! Distance distributions of spherical configurations: two-, three-, and
//! (m+2)-point counts by exhaustive scanning, and their aggregation into
//! switching-class distributions for equiangular sets.

use crate::exactmath::{int, Rat, RatMatrix};
use crate::gram::{canonical_key_of_pattern, GramMatrix, SignPattern, SwitchingClassKey};
use num::Signed;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistError {
    ImproperGram,
    NotEquiangular,
    TooFewPoints,
}

impl fmt::Display for DistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistError::ImproperGram => write!(f, "base Gram matrix is not positive definite"),
            DistError::NotEquiangular => {
                write!(f, "configuration is not equiangular with the declared alpha")
            }
            DistError::TooFewPoints => write!(f, "configuration has fewer than m + 2 points"),
        }
    }
}

impl std::error::Error for DistError {}

/// A concrete spherical configuration: N unit vectors in dimension d given
/// by their Gram matrix, optionally equiangular with inner products
/// +-alpha.
#[derive(Clone, Debug)]
pub struct Configuration {
    d: usize,
    gram: GramMatrix,
    alpha: Option<Rat>,
}

impl Configuration {
    /// A general s-distance configuration.
    pub fn new(d: usize, gram: GramMatrix) -> Self {
        Configuration {
            d,
            gram,
            alpha: None,
        }
    }

    /// An equiangular configuration; every off-diagonal entry must be
    /// +-alpha.
    pub fn equiangular(d: usize, gram: GramMatrix, alpha: Rat) -> Result<Self, DistError> {
        let n = gram.order();
        for i in 0..n {
            for j in (i + 1)..n {
                if gram.entry(i, j).abs() != alpha {
                    return Err(DistError::NotEquiangular);
                }
            }
        }
        Ok(Configuration {
            d,
            gram,
            alpha: Some(alpha),
        })
    }

    pub fn len(&self) -> usize {
        self.gram.order()
    }

    pub fn is_empty(&self) -> bool {
        self.gram.order() == 0
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn alpha(&self) -> Option<&Rat> {
        self.alpha.as_ref()
    }

    /// The inner product set A(X): all off-diagonal values, descending.
    pub fn inner_products(&self) -> Vec<Rat> {
        let n = self.len();
        let mut set = std::collections::BTreeSet::new();
        for i in 0..n {
            for j in (i + 1)..n {
                set.insert(self.gram.entry(i, j).clone());
            }
        }
        set.into_iter().rev().collect()
    }

    /// Re-project: flip the vectors where `lambda[i] = -1`.
    pub fn switch(&self, lambda: &[i8]) -> Configuration {
        Configuration {
            d: self.d,
            gram: self.gram.switch(lambda),
            alpha: self.alpha.clone(),
        }
    }

    /// Off-diagonal sign matrix (+1 on the diagonal); requires
    /// equiangularity.
    pub fn sign_matrix(&self) -> Result<Vec<i8>, DistError> {
        let alpha = self.alpha.as_ref().ok_or(DistError::NotEquiangular)?;
        let n = self.len();
        let mut s = vec![1i8; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let e = self.gram.entry(i, j);
                if &e.abs() != alpha {
                    return Err(DistError::NotEquiangular);
                }
                let v = if e.is_positive() { 1 } else { -1 };
                s[i * n + j] = v;
                s[j * n + i] = v;
            }
        }
        Ok(s)
    }
}

/// Two-point distance distribution x(t) over all ordered pairs (including
/// the diagonal, so x(1) = N).
pub fn two_point(x: &Configuration) -> BTreeMap<Rat, u64> {
    let n = x.len();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let t = if i == j {
                int(1)
            } else {
                x.gram().entry(i, j).clone()
            };
            *out.entry(t).or_insert(0) += 1;
        }
    }
    out
}

/// Three-point distance distribution y(u, v, t) over all ordered triples
/// in X^3 (including degenerate ones, so y(1, t, t) = x(t)).
pub fn three_point(x: &Configuration) -> BTreeMap<(Rat, Rat, Rat), u64> {
    let n = x.len();
    let ip = |i: usize, j: usize| -> Rat {
        if i == j {
            int(1)
        } else {
            x.gram().entry(i, j).clone()
        }
    };
    let mut out = BTreeMap::new();
    for b in 0..n {
        for c in 0..n {
            let u = ip(b, c);
            for cp in 0..n {
                let key = (u.clone(), ip(b, cp), ip(c, cp));
                *out.entry(key).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Raw (m+2)-point distance distributions for one fixed base Gram matrix
/// G: the level-m map N_m(G; u, v, t) over all tuples in X^{m+2} whose
/// base block matches G exactly, plus N_{m-1}(G; u) and N_{m-2}(G) from
/// the same scan.
#[derive(Debug)]
pub struct MultipointTables {
    pub m: usize,
    pub level: BTreeMap<(Vec<Rat>, Vec<Rat>, Rat), u64>,
    pub sub1: BTreeMap<Vec<Rat>, u64>,
    pub sub2: u64,
}

impl MultipointTables {
    /// Degeneration relations on the raw counts: a slot equal to 1 pins
    /// the rest of the tuple to a column of G.
    pub fn check_degenerations(&self, g: &RatMatrix) -> bool {
        let m = self.m;
        let one = int(1);
        let col = |p: usize| -> Vec<Rat> { (0..m).map(|i| g.get(i, p).clone()).collect() };
        for ((u, v, t), &count) in &self.level {
            if count == 0 {
                continue;
            }
            // u_p = 1 forces u = G_(p), t = v_p
            for p in 0..m {
                if u[p] == one && (u != &col(p) || t != &v[p]) {
                    return false;
                }
                if v[p] == one && (v != &col(p) || t != &u[p]) {
                    return false;
                }
            }
            // u_p = v_q = 1 additionally forces t = G_pq and the count to
            // degenerate to N_{m-2}(G)
            for p in 0..m {
                for q in 0..m {
                    if u[p] == one && v[q] == one {
                        if t != g.get(p, q) || count != self.sub2 {
                            return false;
                        }
                    }
                }
            }
            // t = 1 forces u = v and the count to degenerate to N_{m-1}
            if t == &one {
                if u != v || count != *self.sub1.get(u).unwrap_or(&0) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exhaustive (m+2)-point scan for a fixed proper base Gram matrix G.
pub fn multipoint(
    x: &Configuration,
    m: usize,
    g: &RatMatrix,
) -> Result<MultipointTables, DistError> {
    if !g.is_symmetric() || !g.is_positive_definite() {
        return Err(DistError::ImproperGram);
    }
    if x.len() < m + 2 {
        return Err(DistError::TooFewPoints);
    }
    let n = x.len();
    let ip = |i: usize, j: usize| -> Rat {
        if i == j {
            int(1)
        } else {
            x.gram().entry(i, j).clone()
        }
    };

    // interned u-vector values keep the inner loop on integer indices
    let mut values: Vec<Vec<Rat>> = Vec::new();
    let mut value_idx: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
    let mut intern = |v: Vec<Rat>, values: &mut Vec<Vec<Rat>>| -> usize {
        if let Some(&i) = value_idx.get(&v) {
            return i;
        }
        let i = values.len();
        value_idx.insert(v.clone(), i);
        values.push(v);
        i
    };
    let mut tvals: Vec<Rat> = Vec::new();
    let t_idx_of = |t: Rat, tvals: &mut Vec<Rat>| -> usize {
        if let Some(i) = tvals.iter().position(|x| x == &t) {
            return i;
        }
        tvals.push(t);
        tvals.len() - 1
    };
    // t-index lookup per ordered pair
    let mut tmat = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            tmat[i * n + j] = t_idx_of(ip(i, j), &mut tvals);
        }
    }

    let mut level_raw: HashMap<(usize, usize, usize), u64> = HashMap::new();
    let mut sub1_raw: HashMap<usize, u64> = HashMap::new();
    let mut sub2 = 0u64;

    // enumerate ordered m-tuples B with Gram exactly G
    let mut stack: Vec<usize> = Vec::with_capacity(m);
    let mut process_base = |b: &[usize],
                            level_raw: &mut HashMap<(usize, usize, usize), u64>,
                            sub1_raw: &mut HashMap<usize, u64>,
                            sub2: &mut u64,
                            values: &mut Vec<Vec<Rat>>| {
        *sub2 += 1;
        let u_of: Vec<usize> = (0..n)
            .map(|c| {
                let u: Vec<Rat> = b.iter().map(|&bp| ip(bp, c)).collect();
                intern(u, values)
            })
            .collect();
        for (c, &ui) in u_of.iter().enumerate() {
            *sub1_raw.entry(ui).or_insert(0) += 1;
            for (cp, &vi) in u_of.iter().enumerate() {
                *level_raw.entry((ui, vi, tmat[c * n + cp])).or_insert(0) += 1;
            }
        }
    };
    fn rec<F: FnMut(&[usize])>(
        n: usize,
        m: usize,
        g: &RatMatrix,
        gram: &GramMatrix,
        stack: &mut Vec<usize>,
        f: &mut F,
    ) {
        if stack.len() == m {
            f(stack);
            return;
        }
        let p = stack.len();
        'next: for cand in 0..n {
            if g.get(p, p) != &int(1) {
                return;
            }
            for (q, &prev) in stack.iter().enumerate() {
                let e = if prev == cand {
                    int(1)
                } else {
                    gram.entry(prev, cand).clone()
                };
                if &e != g.get(q, p) {
                    continue 'next;
                }
            }
            stack.push(cand);
            rec(n, m, g, gram, stack, f);
            stack.pop();
        }
    }
    {
        let mut f = |b: &[usize]| {
            process_base(b, &mut level_raw, &mut sub1_raw, &mut sub2, &mut values)
        };
        rec(n, m, g, x.gram(), &mut stack, &mut f);
    }

    let mut level = BTreeMap::new();
    for ((ui, vi, ti), count) in level_raw {
        level.insert(
            (values[ui].clone(), values[vi].clone(), tvals[ti].clone()),
            count,
        );
    }
    let mut sub1 = BTreeMap::new();
    for (ui, count) in sub1_raw {
        sub1.insert(values[ui].clone(), count);
    }
    Ok(MultipointTables {
        m,
        level,
        sub1,
        sub2,
    })
}

/// Switching-class distance distributions of an equiangular configuration.
///
/// Counts are keyed by the first-row-normalized sign pattern of the tuple
/// Gram matrix (every switching class of patterns with +-alpha entries
/// contains exactly one pattern whose first row is all +). Three levels
/// are scanned: tuples of m+2, m+1 and m points.
#[derive(Debug)]
pub struct DistributionTable {
    m: usize,
    level: BTreeMap<SignPattern, u64>,
    sub1: BTreeMap<SignPattern, u64>,
    sub2: BTreeMap<SignPattern, u64>,
}

impl DistributionTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn level(&self) -> &BTreeMap<SignPattern, u64> {
        &self.level
    }

    pub fn sub1(&self) -> &BTreeMap<SignPattern, u64> {
        &self.sub1
    }

    pub fn sub2(&self) -> &BTreeMap<SignPattern, u64> {
        &self.sub2
    }

    pub fn level_total(&self) -> u64 {
        self.level.values().sum()
    }

    pub fn sub1_total(&self) -> u64 {
        self.sub1.values().sum()
    }

    pub fn sub2_total(&self) -> u64 {
        self.sub2.values().sum()
    }

    fn count(map: &BTreeMap<SignPattern, u64>, pat: SignPattern) -> u64 {
        *map.get(&pat).unwrap_or(&0)
    }

    /// Count for the normalized order-3 pattern with sign `s23` on the
    /// non-first-row edge (triple class counts y1 for +, y2 for -).
    fn triple(map: &BTreeMap<SignPattern, u64>, plus: bool) -> u64 {
        // order 3 bits: (0,1), (0,2), (1,2)
        let bits = 0b011 | if plus { 0b100 } else { 0 };
        Self::count(map, SignPattern::new(3, bits))
    }

    /// Count for the normalized order-4 pattern with free signs
    /// (s23, s24, s34) on the non-first-row edges.
    fn quad(map: &BTreeMap<SignPattern, u64>, s23: bool, s24: bool, s34: bool) -> u64 {
        // order 4 bits: (0,1), (0,2), (0,3), (1,2), (1,3), (2,3)
        let bits = 0b000111
            | if s23 { 1 << 3 } else { 0 }
            | if s24 { 1 << 4 } else { 0 }
            | if s34 { 1 << 5 } else { 0 };
        Self::count(map, SignPattern::new(4, bits))
    }

    /// y1: triple class count with all inner products +alpha (level m = 1,
    /// or the sub-level of m = 2).
    pub fn y1(&self) -> u64 {
        match self.m {
            1 => Self::triple(&self.level, true),
            2 => Self::triple(&self.sub1, true),
            _ => panic!("y1 requires m = 1 or 2"),
        }
    }

    /// y2: triple class count with one -alpha after normalization.
    pub fn y2(&self) -> u64 {
        match self.m {
            1 => Self::triple(&self.level, false),
            2 => Self::triple(&self.sub1, false),
            _ => panic!("y2 requires m = 1 or 2"),
        }
    }

    /// z1: quadruple class count of the all-plus pattern (m = 2).
    pub fn z1(&self) -> u64 {
        assert_eq!(self.m, 2);
        Self::quad(&self.level, true, true, true)
    }

    /// z2: the common count of the six middle quadruple classes (m = 2).
    pub fn z2(&self) -> u64 {
        assert_eq!(self.m, 2);
        Self::quad(&self.level, true, true, false)
    }

    /// z3: quadruple class count of the pattern with three -alpha (m = 2).
    pub fn z3(&self) -> u64 {
        assert_eq!(self.m, 2);
        Self::quad(&self.level, false, false, false)
    }

    /// Aggregate the level-m counts by canonical class key, checking that
    /// permutation-equivalent classes carry equal counts; returns
    /// (common value, number of classes) per key.
    pub fn class_values(&self) -> BTreeMap<SwitchingClassKey, (u64, usize)> {
        let mut out: BTreeMap<SwitchingClassKey, (u64, usize)> = BTreeMap::new();
        for (&pat, &count) in &self.level {
            let key = canonical_key_of_pattern(pat);
            match out.get_mut(&key) {
                None => {
                    out.insert(key, (count, 1));
                }
                Some((v, mult)) => {
                    assert_eq!(*v, count, "permutation-equivalent classes must agree");
                    *mult += 1;
                }
            }
        }
        out
    }
}

fn normalized_pattern(signs: &[i8], n: usize, tuple: &[usize]) -> SignPattern {
    let k = tuple.len();
    let mut bits = 0u32;
    let mut pos = 0usize;
    for p in 0..k {
        for q in (p + 1)..k {
            let s = if p == 0 {
                1
            } else {
                signs[tuple[0] * n + tuple[p]]
                    * signs[tuple[0] * n + tuple[q]]
                    * signs[tuple[p] * n + tuple[q]]
            };
            if s > 0 {
                bits |= 1 << pos;
            }
            pos += 1;
        }
    }
    SignPattern::new(k, bits)
}

fn scan_level(signs: &[i8], n: usize, k: usize) -> BTreeMap<SignPattern, u64> {
    let mut out = BTreeMap::new();
    let mut tuple = vec![0usize; k];
    let mut used = vec![false; n];
    fn rec(
        signs: &[i8],
        n: usize,
        k: usize,
        depth: usize,
        tuple: &mut [usize],
        used: &mut [bool],
        out: &mut BTreeMap<SignPattern, u64>,
    ) {
        if depth == k {
            let pat = normalized_pattern(signs, n, tuple);
            *out.entry(pat).or_insert(0) += 1;
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            used[c] = true;
            tuple[depth] = c;
            rec(signs, n, k, depth + 1, tuple, used, out);
            used[c] = false;
        }
    }
    rec(signs, n, k, 0, &mut tuple, &mut used, &mut out);
    out
}

fn check_preconditions(x: &Configuration, m: usize) -> Result<Vec<i8>, DistError> {
    if x.len() < m + 2 {
        return Err(DistError::TooFewPoints);
    }
    x.sign_matrix()
}

/// Switching-class distributions by the naive ordered-tuple scan
/// (O(N^{m+2})); the oracle for `class_distribution`.
pub fn class_distribution_naive(
    x: &Configuration,
    m: usize,
) -> Result<DistributionTable, DistError> {
    let signs = check_preconditions(x, m)?;
    let n = x.len();
    Ok(DistributionTable {
        m,
        level: scan_level(&signs, n, m + 2),
        sub1: scan_level(&signs, n, m + 1),
        sub2: if m >= 1 {
            scan_level(&signs, n, m)
        } else {
            BTreeMap::new()
        },
    })
}

/// Switching-class distributions; at m = 2 the level scan classifies each
/// unordered 4-subset once and distributes its 24 orderings uniformly over
/// the first-row representatives of the subset's class orbit.
pub fn class_distribution(x: &Configuration, m: usize) -> Result<DistributionTable, DistError> {
    if m != 2 {
        return class_distribution_naive(x, m);
    }
    let signs = check_preconditions(x, m)?;
    let n = x.len();

    // group the 8 first-row representatives by canonical key
    let reps: Vec<SignPattern> = (0..8u32)
        .map(|free| SignPattern::new(4, 0b000111 | free << 3))
        .collect();
    let mut groups: BTreeMap<SwitchingClassKey, Vec<SignPattern>> = BTreeMap::new();
    for &rep in &reps {
        groups
            .entry(canonical_key_of_pattern(rep))
            .or_default()
            .push(rep);
    }

    let mut level: BTreeMap<SignPattern, u64> = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                for l in (k + 1)..n {
                    let pat = normalized_pattern(&signs, n, &[i, j, k, l]);
                    let group = &groups[&canonical_key_of_pattern(pat)];
                    let share = 24 / group.len() as u64;
                    for &rep in group {
                        *level.entry(rep).or_insert(0) += share;
                    }
                }
            }
        }
    }
    Ok(DistributionTable {
        m,
        level,
        sub1: scan_level(&signs, n, 3),
        sub2: scan_level(&signs, n, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    /// Six equiangular lines at alpha = 1/3: vectors indexed by the 2-sets
    /// of {0,1,2,3}; inner product 1/3 when the index sets share one
    /// element, -1/3 when disjoint.
    fn mini6() -> Configuration {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .collect();
        let a = rat(1, 3);
        let mat = RatMatrix::from_fn(6, 6, |i, j| {
            if i == j {
                return int(1);
            }
            let (p, q) = (pairs[i], pairs[j]);
            let overlap = [p.0, p.1]
                .iter()
                .filter(|x| **x == q.0 || **x == q.1)
                .count();
            if overlap == 1 {
                a.clone()
            } else {
                -a.clone()
            }
        });
        Configuration::equiangular(7, GramMatrix::new(mat).unwrap(), a).unwrap()
    }

    #[test]
    fn two_point_mini6() {
        let x = mini6();
        let map = two_point(&x);
        assert_eq!(map[&int(1)], 6);
        assert_eq!(map[&rat(1, 3)], 24);
        assert_eq!(map[&rat(-1, 3)], 6);
        assert_eq!(map.len(), 3);
    }

    #[test]
    fn three_point_identities() {
        let x = mini6();
        let xmap = two_point(&x);
        let y = three_point(&x);
        let one = int(1);
        assert_eq!(y[&(one.clone(), one.clone(), one.clone())], 6);
        // y(1, t, t) = x(t); y(1, u, v) = 0 for u != v
        for t in x.inner_products() {
            assert_eq!(y[&(one.clone(), t.clone(), t.clone())], xmap[&t]);
        }
        for ((u, v, t), &c) in &y {
            if u == &one && v != t {
                assert_eq!(c, 0);
            }
        }
        // sum over A^3 = N(N-1)(N-2)
        let a = x.inner_products();
        let total: u64 = y
            .iter()
            .filter(|((u, v, t), _)| a.contains(u) && a.contains(v) && a.contains(t))
            .map(|(_, &c)| c)
            .sum();
        assert_eq!(total, 6 * 5 * 4);
    }

    #[test]
    fn multipoint_m1_matches_three_point() {
        let x = mini6();
        let tables = multipoint(&x, 1, &RatMatrix::identity(1)).unwrap();
        let y = three_point(&x);
        assert_eq!(tables.sub2, 6);
        for ((u, v, t), &c) in &tables.level {
            assert_eq!(y[&(u[0].clone(), v[0].clone(), t.clone())], c);
        }
        let total: u64 = tables.level.values().sum();
        assert_eq!(total, 6 * 6 * 6);
    }

    #[test]
    fn multipoint_degenerations() {
        let x = mini6();
        let a = rat(1, 3);
        for g12 in [a.clone(), -a.clone()] {
            let g = RatMatrix::from_rows(vec![
                vec![int(1), g12.clone()],
                vec![g12.clone(), int(1)],
            ]);
            let tables = multipoint(&x, 2, &g).unwrap();
            assert!(tables.check_degenerations(&g));
        }
    }

    #[test]
    fn multipoint_improper_gram() {
        let x = mini6();
        let g = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(1)]]);
        assert_eq!(multipoint(&x, 2, &g).unwrap_err(), DistError::ImproperGram);
    }

    #[test]
    fn factorial_sums() {
        let x = mini6();
        for m in 0..=2usize {
            let table = class_distribution(&x, m).unwrap();
            let fact = |k: usize| -> u64 { (6 - k as u64 + 1..=6).product() };
            assert_eq!(table.level_total(), fact(m + 2), "level at m = {m}");
            assert_eq!(table.sub1_total(), fact(m + 1), "sub1 at m = {m}");
            if m >= 1 {
                assert_eq!(table.sub2_total(), fact(m), "sub2 at m = {m}");
            }
        }
    }

    #[test]
    fn y_split_matches_raw_three_point() {
        let x = mini6();
        let table = class_distribution(&x, 1).unwrap();
        let y = three_point(&x);
        let a = rat(1, 3);
        let na = -a.clone();
        let get = |u: &Rat, v: &Rat, t: &Rat| -> u64 {
            *y.get(&(u.clone(), v.clone(), t.clone())).unwrap_or(&0)
        };
        let y1 = get(&a, &a, &a) + get(&a, &na, &na) + get(&na, &a, &na) + get(&na, &na, &a);
        let y2 = get(&a, &a, &na) + get(&a, &na, &a) + get(&na, &a, &a) + get(&na, &na, &na);
        assert_eq!(table.y1(), y1);
        assert_eq!(table.y2(), y2);
        assert_eq!(y1 + y2, 6 * 5 * 4);
    }

    #[test]
    fn shortcut_matches_naive() {
        let x = mini6();
        let fast = class_distribution(&x, 2).unwrap();
        let slow = class_distribution_naive(&x, 2).unwrap();
        assert_eq!(fast.level(), slow.level());
        assert_eq!(fast.sub1(), slow.sub1());
        assert_eq!(fast.sub2(), slow.sub2());
        assert_eq!(fast.z1() + 6 * fast.z2() + fast.z3(), 6 * 5 * 4 * 3);
    }

    #[test]
    fn projection_invariance() {
        let x = mini6();
        let base = class_distribution(&x, 2).unwrap();
        for mask in [0b000001u32, 0b101010, 0b111111, 0b010011] {
            let lam: Vec<i8> = (0..6)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let switched = class_distribution(&x.switch(&lam), 2).unwrap();
            assert_eq!(base.level(), switched.level());
            assert_eq!(base.sub1(), switched.sub1());
        }
    }

    #[test]
    fn class_values_group_middle_classes() {
        let x = mini6();
        let table = class_distribution(&x, 2).unwrap();
        let values = table.class_values();
        // multiplicities follow the class orbits: the all-plus and
        // all-minus-normalized classes are alone, the middle value is
        // shared by six classes
        for &(_, mult) in values.values() {
            assert!(mult == 1 || mult == 6);
        }
        let total: u64 = values.values().map(|&(v, m)| v * m as u64).sum();
        assert_eq!(total, 6 * 5 * 4 * 3);
        assert_eq!(table.z1() + 6 * table.z2() + table.z3(), total);
    }

    #[test]
    fn too_few_points() {
        let a = rat(1, 3);
        let mat = RatMatrix::from_rows(vec![
            vec![int(1), a.clone()],
            vec![a.clone(), int(1)],
        ]);
        let x = Configuration::equiangular(3, GramMatrix::new(mat).unwrap(), a).unwrap();
        assert_eq!(
            class_distribution(&x, 2).unwrap_err(),
            DistError::TooFewPoints
        );
    }

    #[test]
    fn not_equiangular_detected() {
        let mat = RatMatrix::from_rows(vec![
            vec![int(1), rat(1, 2), rat(1, 3)],
            vec![rat(1, 2), int(1), rat(1, 3)],
            vec![rat(1, 3), rat(1, 3), int(1)],
        ]);
        let g = GramMatrix::new(mat).unwrap();
        assert_eq!(
            Configuration::equiangular(3, g, rat(1, 3)).unwrap_err(),
            DistError::NotEquiangular
        );
    }
}

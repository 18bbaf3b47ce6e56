//! Built-in extremal configurations, Gram-file ingestion, and
//! extremal-structure analysis: rank-1 audit of the order-0 reduced
//! matrix, two-fixed-point counts, derived codes, and strongly regular
//! graph extraction with exact spectra.

use crate::constraints::build_reduced;
use crate::distributions::Configuration;
use crate::exactmath::matrix::PsdVerdict;
use crate::exactmath::{int, parse_rat, rat, Rat, RatMatrix};
use crate::gram::GramMatrix;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    Parse(String),
    NotEquiangular,
    NotPsd(Vec<Rat>),
    RankExceedsDimension { rank: usize, d: usize },
    IndexOutOfRange,
    NotExtremal,
    NotStronglyRegular { u: usize, v: usize },
    Io(String),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Parse(msg) => write!(f, "parse error: {msg}"),
            ConstructionError::NotEquiangular => {
                write!(f, "off-diagonal entries are not all +-alpha")
            }
            ConstructionError::NotPsd(_) => {
                write!(f, "Gram matrix has a direction of negative energy")
            }
            ConstructionError::RankExceedsDimension { rank, d } => {
                write!(f, "Gram rank {rank} exceeds declared dimension {d}")
            }
            ConstructionError::IndexOutOfRange => write!(f, "point index out of range"),
            ConstructionError::NotExtremal => {
                write!(f, "configuration does not meet the extremal cardinality")
            }
            ConstructionError::NotStronglyRegular { u, v } => {
                write!(f, "common-neighbor count fails at vertex pair ({u}, {v})")
            }
            ConstructionError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for ConstructionError {}

/// The 28 equiangular lines in dimension 7 at alpha = 1/3: one line per
/// pair {i, j} of an 8-element set, inner product 1/3 when the pairs
/// share one element and -1/3 when they are disjoint.
pub fn gen28() -> Configuration {
    let pairs: Vec<(usize, usize)> = (0..8)
        .flat_map(|i| ((i + 1)..8).map(move |j| (i, j)))
        .collect();
    let third = rat(1, 3);
    let mat = RatMatrix::from_fn(28, 28, |p, q| {
        let (i, j) = pairs[p];
        let (k, l) = pairs[q];
        let overlap = [i == k, i == l, j == k, j == l].iter().filter(|&&b| b).count();
        match overlap {
            2 => int(1),
            1 => third.clone(),
            _ => -third.clone(),
        }
    });
    let gram = GramMatrix::new(mat).expect("symmetric with unit diagonal");
    Configuration::equiangular(7, gram, third).expect("entries are +-1/3")
}

/// Render a configuration in the Gram text format: a header line
/// `N d alpha_num/alpha_den`, then N rows of rationals.
pub fn format_configuration(x: &Configuration) -> String {
    let alpha = x.alpha().expect("equiangular configuration");
    let mut out = format!("{} {} {}\n", x.len(), x.dim(), alpha);
    for i in 0..x.len() {
        let row: Vec<String> = (0..x.len())
            .map(|j| x.gram().entry(i, j).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse and fully validate a configuration from the Gram text format:
/// symmetry, unit diagonal, off-diagonals +-alpha, positive
/// semidefiniteness, and rank at most the declared dimension.
pub fn parse_configuration(text: &str, alpha: &Rat) -> Result<Configuration, ConstructionError> {
    let mut tokens = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.split_whitespace());
    let mut next = |what: &str| -> Result<String, ConstructionError> {
        tokens
            .next()
            .map(str::to_owned)
            .ok_or_else(|| ConstructionError::Parse(format!("missing {what}")))
    };
    let n: usize = next("point count")?
        .parse()
        .map_err(|_| ConstructionError::Parse("bad point count".into()))?;
    let d: usize = next("dimension")?
        .parse()
        .map_err(|_| ConstructionError::Parse("bad dimension".into()))?;
    let header_alpha = parse_rat(&next("alpha")?).map_err(ConstructionError::Parse)?;
    if &header_alpha != alpha {
        return Err(ConstructionError::NotEquiangular);
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = Vec::with_capacity(n);
        for _ in 0..n {
            row.push(parse_rat(&next("matrix entry")?).map_err(ConstructionError::Parse)?);
        }
        rows.push(row);
    }
    if tokens.next().is_some() {
        return Err(ConstructionError::Parse("trailing data".into()));
    }
    let mat = RatMatrix::from_rows(rows);
    let gram =
        GramMatrix::new(mat).map_err(|e| ConstructionError::Parse(e.to_string()))?;
    let x = Configuration::equiangular(d, gram, alpha.clone())
        .map_err(|_| ConstructionError::NotEquiangular)?;
    match x.gram().matrix().psd_check().expect("symmetric") {
        PsdVerdict::Psd => {}
        PsdVerdict::NotPsd(w) => return Err(ConstructionError::NotPsd(w)),
    }
    let rank = x.gram().matrix().rank();
    if rank > d {
        return Err(ConstructionError::RankExceedsDimension { rank, d });
    }
    Ok(x)
}

pub fn load_configuration(
    path: &Path,
    alpha: &Rat,
) -> Result<Configuration, ConstructionError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| ConstructionError::Io(e.to_string()))?;
    parse_configuration(&text, alpha)
}

pub fn save_configuration(path: &Path, x: &Configuration) -> Result<(), ConstructionError> {
    std::fs::write(path, format_configuration(x)).map_err(|e| ConstructionError::Io(e.to_string()))
}

/// Outcome of the rank-1 audit of the order-0 reduced matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rank1Audit {
    /// The matrix is c * w w^T; the generating vector w is returned
    /// normalized to leading entry 1.
    Rank1(Vec<Rat>),
    HigherRank(usize),
}

/// Audit the order-0 two-variable reduced matrix for rank 1. For an
/// extremal configuration the generating vector must be proportional to
/// (1, (a+1)^3(a-2)/4, (a-1)^3(a+2)/4).
pub fn rank1_audit(x: &Configuration) -> Result<Rank1Audit, ConstructionError> {
    let alpha = x.alpha().ok_or(ConstructionError::NotEquiangular)?.clone();
    let g = RatMatrix::from_rows(vec![
        vec![int(1), alpha.clone()],
        vec![alpha, int(1)],
    ]);
    let cm = build_reduced(x, 2, 0, &g).map_err(|_| ConstructionError::NotEquiangular)?;
    let rank = cm.matrix.rank();
    if rank != 1 {
        return Ok(Rank1Audit::HigherRank(rank));
    }
    let lead = cm.matrix.get(0, 0);
    let w: Vec<Rat> = (0..cm.matrix.cols())
        .map(|j| cm.matrix.get(0, j) / lead)
        .collect();
    Ok(Rank1Audit::Rank1(w))
}

/// Count the points c such that the sign triple of (b, b', c) is
/// switching-equivalent to all-plus, together with the complementary
/// count; the two always sum to N - 2.
pub fn two_fixed_point(
    x: &Configuration,
    b: usize,
    bp: usize,
) -> Result<(u64, u64), ConstructionError> {
    let n = x.len();
    if b >= n || bp >= n || b == bp {
        return Err(ConstructionError::IndexOutOfRange);
    }
    let signs = x.sign_matrix().map_err(|_| ConstructionError::NotEquiangular)?;
    let s = |i: usize, j: usize| signs[i * n + j];
    let mut plus = 0u64;
    for c in 0..n {
        if c == b || c == bp {
            continue;
        }
        if s(b, bp) * s(b, c) * s(bp, c) == 1 {
            plus += 1;
        }
    }
    Ok((plus, (n as u64 - 2) - plus))
}

/// The re-projected configuration around one base point: every other
/// vector is re-signed to have inner product +alpha with the base, then
/// projected to the base's orthogonal complement and renormalized.
#[derive(Debug, Clone)]
pub struct DerivedCode {
    pub base_point: usize,
    /// the two possible inner products 1/(a+1) and -1/(a-1)
    pub inner_products: (Rat, Rat),
    pub gram: GramMatrix,
}

/// Build the derived code of an equiangular configuration at a base
/// point.
pub fn derived_code(x: &Configuration, base: usize) -> Result<DerivedCode, ConstructionError> {
    let n = x.len();
    if base >= n {
        return Err(ConstructionError::IndexOutOfRange);
    }
    let alpha = x.alpha().ok_or(ConstructionError::NotEquiangular)?.clone();
    // re-sign so every inner product with the base is +alpha
    let lambda: Vec<i8> = (0..n)
        .map(|i| {
            if i != base && x.gram().entry(base, i).is_negative() {
                -1
            } else {
                1
            }
        })
        .collect();
    let y = x.switch(&lambda);
    let others: Vec<usize> = (0..n).filter(|&i| i != base).collect();
    let denom = int(1) - &alpha * &alpha;
    let mat = RatMatrix::from_fn(n - 1, n - 1, |i, j| {
        if i == j {
            int(1)
        } else {
            (y.gram().entry(others[i], others[j]) - &alpha * &alpha) / &denom
        }
    });
    let plus = &alpha / (int(1) + &alpha);
    let minus = -(&alpha / (int(1) - &alpha));
    Ok(DerivedCode {
        base_point: base,
        inner_products: (plus, minus),
        gram: GramMatrix::new(mat).expect("symmetric with unit diagonal"),
    })
}

/// Exact report of the strongly regular graph carried by an extremal
/// configuration's derived code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgReport {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
    /// adjacency eigenvalues with multiplicities
    pub adjacency_spectrum: Vec<(Rat, usize)>,
    /// derived-code Gram eigenvalues with multiplicities
    pub gram_spectrum: Vec<(Rat, usize)>,
    pub base_point: usize,
}

/// Extract and fully verify the strongly regular graph of an extremal
/// equiangular configuration: regularity and the common-neighbor counts
/// are checked combinatorially over every vertex pair, the spectra are
/// obtained by exact nullity computations at the known candidate
/// eigenvalues, and the derived-code Gram is matched against
/// I + M/(a+1) - (J - I - M)/(a-1).
pub fn srg_extract(x: &Configuration, base: usize) -> Result<SrgReport, ConstructionError> {
    let alpha = x.alpha().ok_or(ConstructionError::NotEquiangular)?.clone();
    let inv = int(1) / &alpha;
    if !inv.is_integer() || inv < int(3) {
        return Err(ConstructionError::NotExtremal);
    }
    let a = inv.to_integer().to_i64().unwrap();
    let n = x.len() as i64;
    if 2 * n != (a * a - 1) * (a * a - 2) {
        return Err(ConstructionError::NotExtremal);
    }
    let code = derived_code(x, base)?;
    let v = (n - 1) as usize;
    let plus = &code.inner_products.0;
    let adj: Vec<Vec<bool>> = (0..v)
        .map(|i| (0..v).map(|j| i != j && code.gram.entry(i, j) == plus).collect())
        .collect();
    // degree and common-neighbor counts, combinatorially
    let k = adj[0].iter().filter(|&&b| b).count();
    for (i, row) in adj.iter().enumerate() {
        if row.iter().filter(|&&b| b).count() != k {
            return Err(ConstructionError::NotStronglyRegular { u: i, v: i });
        }
    }
    let common = |i: usize, j: usize| (0..v).filter(|&c| adj[i][c] && adj[j][c]).count();
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for i in 0..v {
        for j in (i + 1)..v {
            let c = common(i, j);
            let slot = if adj[i][j] { &mut lambda } else { &mut mu };
            match slot {
                Some(expect) if *expect != c => {
                    return Err(ConstructionError::NotStronglyRegular { u: i, v: j })
                }
                Some(_) => {}
                None => *slot = Some(c),
            }
        }
    }
    let (lambda, mu) = (lambda.unwrap_or(0), mu.unwrap_or(0));

    // spectra at the candidate eigenvalues, by exact nullity
    let m = RatMatrix::from_fn(v, v, |i, j| if adj[i][j] { int(1) } else { int(0) });
    let cand = [
        int(k as i64),
        int(k as i64) / int(a + 1),
        -rat(a + 1, 2),
    ];
    let mut adjacency_spectrum = Vec::new();
    let mut total = 0usize;
    let mut trace = Rat::zero();
    for ev in &cand {
        let shifted = m.sub(&RatMatrix::identity(v).scale(ev));
        let mult = shifted.nullity();
        total += mult;
        trace += ev * int(mult as i64);
        adjacency_spectrum.push((ev.clone(), mult));
    }
    if total != v || !trace.is_zero() {
        return Err(ConstructionError::NotStronglyRegular { u: 0, v: 0 });
    }

    // derived-code Gram must match I + M/(a+1) - (J - I - M)/(a-1)
    let one = Rat::one();
    let expected = RatMatrix::from_fn(v, v, |i, j| {
        if i == j {
            one.clone()
        } else if adj[i][j] {
            rat(1, a + 1)
        } else {
            -rat(1, a - 1)
        }
    });
    if code.gram.matrix() != &expected {
        return Err(ConstructionError::NotStronglyRegular { u: 0, v: 0 });
    }
    let mut gram_spectrum = Vec::new();
    let mut gtotal = 0usize;
    for ev in [rat(a * a, 2), Rat::zero()] {
        let shifted = expected.sub(&RatMatrix::identity(v).scale(&ev));
        let mult = shifted.nullity();
        gtotal += mult;
        gram_spectrum.push((ev, mult));
    }
    if gtotal != v {
        return Err(ConstructionError::NotStronglyRegular { u: 0, v: 0 });
    }

    Ok(SrgReport {
        v: v as u64,
        k: k as u64,
        lambda: lambda as u64,
        mu: mu as u64,
        adjacency_spectrum,
        gram_spectrum,
        base_point: base,
    })
}

/// The parameter identities an extremal report must satisfy:
/// lambda = (3k - v - 1)/2, mu = k/2, and the printed closed forms
/// v = a^2(a^2-3)/2, k = (a+1)^3(a-2)/4, lambda = (a+1)(a+2)(a^2-5)/8.
pub fn lambda_identity_check(report: &SrgReport, a: i64) -> bool {
    let (v, k, lambda, mu) = (
        report.v as i64,
        report.k as i64,
        report.lambda as i64,
        report.mu as i64,
    );
    2 * lambda == 3 * k - v - 1
        && 2 * mu == k
        && 2 * v == a * a * (a * a - 3)
        && 4 * k == (a + 1).pow(3) * (a - 2)
        && 8 * lambda == (a + 1) * (a + 2) * (a * a - 5)
        && 8 * mu == (a + 1).pow(3) * (a - 2)
}

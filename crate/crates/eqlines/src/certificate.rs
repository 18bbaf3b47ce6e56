//! The four-point dual certificate for equiangular lines with inner
//! products +-1/a: exact solution of the defining linear system, closed
//! forms and minor identities, the certificate quartic and its maximum
//! root, and asymptotic root-interval verification in Q(sqrt 5).

use crate::exactmath::roots::{cauchy_bound, isolate_max_root, SturmChain};
use crate::exactmath::{int, rat, sign, Rat, RatMatrix, UniPoly};
use crate::gegenbauer::qm;
use num::{BigInt, One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    BadA,
    BadDimension,
    SingularSystem,
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError::BadA => write!(f, "a must be an odd integer >= 3"),
            CertError::BadDimension => write!(f, "dimension out of range"),
            CertError::SingularSystem => {
                write!(f, "excluded locus (a^4 - 5a^2 + 12) - (a^2 + 7)d = 0")
            }
        }
    }
}

impl std::error::Error for CertError {}

fn check_a(a: i64) -> Result<(), CertError> {
    if a < 3 || a % 2 == 0 {
        return Err(CertError::BadA);
    }
    Ok(())
}

/// The certificate quartic g_a(x); the bound applies for dimensions up to
/// its maximum real root.
#[derive(Debug, Clone)]
pub struct GaPolynomial {
    pub a: i64,
    pub poly: UniPoly,
}

/// Exact coefficients of g_a(x) as integer polynomials in a.
pub fn build_ga(a: i64) -> Result<GaPolynomial, CertError> {
    check_a(a)?;
    let a = int(a);
    let pow = |b: &Rat, e: u32| -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= b;
        }
        acc
    };
    let c4 = -int(7) * pow(&a, 14) - int(122) * pow(&a, 12) - int(342) * pow(&a, 10)
        + int(2776) * pow(&a, 8)
        + int(7049) * pow(&a, 6)
        - int(17238) * pow(&a, 4)
        - int(22932) * pow(&a, 2)
        - int(6048);
    let c3 = int(12)
        * (int(4) * pow(&a, 16) + int(21) * pow(&a, 14) - int(227) * pow(&a, 12)
            - int(46) * pow(&a, 10)
            + int(3338) * pow(&a, 8)
            - int(7643) * pow(&a, 6)
            + int(2693) * pow(&a, 4)
            + int(7140) * pow(&a, 2)
            + int(864));
    let c2 = -int(9)
        * pow(&a, 2)
        * (int(11) * pow(&a, 16) - int(94) * pow(&a, 14) - int(25) * pow(&a, 12)
            + int(3068) * pow(&a, 10)
            - int(13951) * pow(&a, 8)
            + int(25882) * pow(&a, 6)
            - int(15987) * pow(&a, 4)
            - int(9608) * pow(&a, 2)
            + int(14800));
    let am2 = &a - int(2);
    let am1 = &a - int(1);
    let ap1 = &a + int(1);
    let ap2 = &a + int(2);
    let c1 = int(54)
        * pow(&a, 2)
        * pow(&am2, 2)
        * pow(&am1, 2)
        * pow(&ap1, 2)
        * pow(&ap2, 2)
        * (pow(&a, 2) + int(1))
        * (pow(&a, 4) - pow(&a, 3) - int(5) * pow(&a, 2) + int(3) * &a + int(10))
        * (pow(&a, 4) + pow(&a, 3) - int(5) * pow(&a, 2) - int(3) * &a + int(10));
    let c0 = -int(81) * pow(&a, 2) * pow(&am2, 4) * pow(&am1, 4) * pow(&ap1, 4) * pow(&ap2, 4);
    let poly = UniPoly::new(vec![c0, c1, c2, c3, c4]);
    Ok(GaPolynomial {
        a: a.to_integer().to_i64().unwrap(),
        poly,
    })
}

/// The exactly solved dual certificate at (a, d): the 3x3 pairing matrix
/// F, the two diagonal weights f1 and f2, and the named principal minors.
#[derive(Debug, Clone)]
pub struct DualCertificate {
    pub a: i64,
    pub d: Rat,
    pub f_mat: RatMatrix,
    pub f1: Rat,
    pub f2: Rat,
    pub minors: Vec<(&'static str, Rat)>,
    pub ga_at_d: Rat,
}

/// The six kernel weights entering the defining equations at (a, d):
/// Q^{d,2}_3 at (u1,u1,1), (u1,u1,a), (u1,u1,-a), (u2,u2,1), (u2,u2,a),
/// (u2,u2,-a) for alpha = 1/a.
fn q3_weights(a: i64, d: &Rat) -> [Rat; 6] {
    let alpha = rat(1, a);
    let g = RatMatrix::from_rows(vec![
        vec![int(1), alpha.clone()],
        vec![alpha.clone(), int(1)],
    ]);
    let u1 = vec![alpha.clone(), alpha.clone()];
    let u2 = vec![alpha.clone(), -alpha.clone()];
    let q = |u: &[Rat], v: &[Rat], t: &Rat| qm(d, 2, 3, &g, u, v, t).expect("proper base");
    [
        q(&u1, &u1, &int(1)),
        q(&u1, &u1, &alpha),
        q(&u1, &u1, &-alpha.clone()),
        q(&u2, &u2, &int(1)),
        q(&u2, &u2, &alpha),
        q(&u2, &u2, &-alpha.clone()),
    ]
}

fn excluded_denominator(a: i64, d: &Rat) -> Rat {
    let a = int(a);
    &a * &a * &a * &a - int(5) * &a * &a + int(12) - (&a * &a + int(7)) * d
}

impl DualCertificate {
    pub fn f(&self, i: usize) -> &Rat {
        match i {
            0 => self.f_mat.get(0, 0),
            1 => self.f_mat.get(0, 1),
            2 => self.f_mat.get(0, 2),
            3 => self.f_mat.get(1, 1),
            4 => self.f_mat.get(1, 2),
            5 => self.f_mat.get(2, 2),
            _ => panic!("entry index out of range"),
        }
    }

    /// F annihilates (4, (a+1)^3(a-2), (a-1)^3(a+2)).
    pub fn check_null_vector(&self) -> bool {
        let a = int(self.a);
        let p1 = (&a + int(1)).pow(3) * (&a - int(2));
        let p2 = (&a - int(1)).pow(3) * (&a + int(2));
        let v = [int(4), p1, p2];
        self.f_mat.mul_vec(&v).iter().all(|x| x.is_zero())
    }

    /// The printed closed forms for f1, f2, F0, F3, F5 (defined away from
    /// d in {0, 3}).
    pub fn check_closed_forms(&self) -> bool {
        let a = int(self.a);
        let d = &self.d;
        if d.is_zero() || d == &int(3) {
            return true;
        }
        let exc = excluded_denominator(self.a, d);
        if exc.is_zero() {
            return false;
        }
        let a3 = &a * &a * &a;
        let am2 = &a - int(2);
        let am1 = &a - int(1);
        let ap1 = &a + int(1);
        let ap2 = &a + int(2);
        let f1 = &a3 * (d - int(3))
            * (int(3) * &a * am2.pow(2) * ap1.pow(2) - (&a3 + int(9) * &a - int(6)) * d)
            / (int(3) * d * &am2 * &am1 * &ap1 * &exc);
        let f2 = -(&a3 * (d - int(3)))
            * (int(3) * &a * ap2.pow(2) * am1.pow(2) - (&a3 + int(9) * &a + int(6)) * d)
            / (int(3) * d * &ap2 * &am1 * &ap1 * &exc);
        let f0 = (&a * &a - int(1)) * (&a * &a - int(2)) / int(2) - int(2);
        let f3 = am1.pow(3) * (int(3) * ap2.pow(2) - d) * &f1 / (&a3 * ap1.pow(3) * (d - int(3)));
        let f5 =
            -(ap1.pow(3) * (int(3) * am2.pow(2) - d)) * &f2 / (&a3 * am1.pow(3) * (d - int(3)));
        self.f1 == f1
            && self.f2 == f2
            && self.f(0) == &f0
            && self.f(3) == &f3
            && self.f(5) == &f5
    }

    /// The three 2x2 principal minors carry g_a(d) as their numerator over
    /// the printed positive denominators, and det F vanishes.
    pub fn check_minor_identities(&self) -> bool {
        let a = int(self.a);
        let d = &self.d;
        if d.is_zero() {
            return true;
        }
        let exc = excluded_denominator(self.a, d);
        let am2 = &a - int(2);
        let am1 = &a - int(1);
        let ap1 = &a + int(1);
        let ap2 = &a + int(2);
        let d2 = d * d;
        let exc2 = &exc * &exc;
        let g = &self.ga_at_d;
        let m03 = self.f(0) * self.f(3) - self.f(1) * self.f(1);
        let m05 = self.f(0) * self.f(5) - self.f(2) * self.f(2);
        let m35 = self.f(3) * self.f(5) - self.f(4) * self.f(4);
        let det = self.f(0) * &m35 - self.f(1) * (self.f(1) * self.f(5) - self.f(4) * self.f(2))
            + self.f(2) * (self.f(1) * self.f(4) - self.f(3) * self.f(2));
        m03 == g / (int(36) * &d2 * am2.pow(2) * ap1.pow(6) * &exc2)
            && m05 == g / (int(36) * &d2 * ap2.pow(2) * am1.pow(6) * &exc2)
            && m35
                == int(4) * g
                    / (int(9) * &d2 * am2.pow(2) * ap2.pow(2) * am1.pow(6) * ap1.pow(6) * &exc2)
            && det.is_zero()
    }

    /// Regenerate the six pairing coefficients from fresh kernel
    /// evaluations and confirm the defining equations: the coefficient of
    /// the pair count is the bound minus 2, the two triple-class
    /// coefficients are -1, and the three quadruple-class coefficients
    /// vanish.
    pub fn check_pairing_coefficients(&self) -> bool {
        let [q1i, qa1, qn1, q2i, qa2, qn2] = q3_weights(self.a, &self.d);
        let a = int(self.a);
        let bound_minus2 = (&a * &a - int(1)) * (&a * &a - int(2)) / int(2) - int(2);
        let c_pairs = self.f(0).clone();
        let c_y1 = int(2) * self.f(1) + self.f(3) + &q1i * &self.f1;
        let c_y2 = int(2) * self.f(2) + self.f(5) + &q2i * &self.f2;
        let c_z1 = self.f(3) + &qa1 * &self.f1;
        let c_z2 = self.f(3) + int(4) * self.f(4) + self.f(5) + &qn1 * &self.f1 + &qa2 * &self.f2;
        let c_z3 = self.f(5) + &qn2 * &self.f2;
        c_pairs == bound_minus2
            && c_y1 == int(-1)
            && c_y2 == int(-1)
            && c_z1.is_zero()
            && c_z2.is_zero()
            && c_z3.is_zero()
    }
}

/// Solve the eight defining equations exactly at (a, d).
pub fn solve_certificate(a: i64, d: &Rat) -> Result<DualCertificate, CertError> {
    check_a(a)?;
    if excluded_denominator(a, d).is_zero() {
        return Err(CertError::SingularSystem);
    }
    let [q1i, qa1, qn1, q2i, qa2, qn2] = q3_weights(a, d);
    let ar = int(a);
    let p1 = (&ar + int(1)).pow(3) * (&ar - int(2));
    let p2 = (&ar - int(1)).pow(3) * (&ar + int(2));
    let f0_rhs = (&ar * &ar - int(1)) * (&ar * &ar - int(2)) / int(2) - int(2);
    let z = Rat::zero;
    // unknowns: F0, F1, F2, F3, F4, F5, f1, f2
    let rows = vec![
        vec![z(), int(4), z(), p1.clone(), p2.clone(), z(), z(), z()],
        vec![z(), z(), int(4), z(), p1.clone(), p2.clone(), z(), z()],
        vec![int(1), z(), z(), z(), z(), z(), z(), z()],
        vec![z(), int(2), z(), int(1), z(), z(), q1i, z()],
        vec![z(), z(), int(2), z(), z(), int(1), z(), q2i],
        vec![z(), z(), z(), int(1), z(), z(), qa1, z()],
        vec![z(), z(), z(), int(1), int(4), int(1), qn1, qa2],
        vec![z(), z(), z(), z(), z(), int(1), z(), qn2],
    ];
    let rhs = vec![z(), z(), f0_rhs, int(-1), int(-1), z(), z(), z()];
    let sol = RatMatrix::from_rows(rows)
        .solve_linear(&rhs)
        .map_err(|_| CertError::SingularSystem)?;
    let f_mat = RatMatrix::from_rows(vec![
        vec![sol[0].clone(), sol[1].clone(), sol[2].clone()],
        vec![sol[1].clone(), sol[3].clone(), sol[4].clone()],
        vec![sol[2].clone(), sol[4].clone(), sol[5].clone()],
    ]);
    let ga_at_d = build_ga(a)?.poly.eval(d);
    let m03 = f_mat.get(0, 0) * f_mat.get(1, 1) - f_mat.get(0, 1) * f_mat.get(0, 1);
    let m05 = f_mat.get(0, 0) * f_mat.get(2, 2) - f_mat.get(0, 2) * f_mat.get(0, 2);
    let m35 = f_mat.get(1, 1) * f_mat.get(2, 2) - f_mat.get(1, 2) * f_mat.get(1, 2);
    let minors = vec![
        ("F0", f_mat.get(0, 0).clone()),
        ("F3", f_mat.get(1, 1).clone()),
        ("F5", f_mat.get(2, 2).clone()),
        ("F0*F3 - F1^2", m03),
        ("F0*F5 - F2^2", m05),
        ("F3*F5 - F4^2", m35),
    ];
    let cert = DualCertificate {
        a,
        d: d.clone(),
        f_mat,
        f1: sol[6].clone(),
        f2: sol[7].clone(),
        minors,
        ga_at_d,
    };
    debug_assert!(cert.check_null_vector());
    Ok(cert)
}

/// Outcome of the bound verification at integer dimension d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Certified {
        bound: Rat,
        /// g_a(d) = 0 exactly: the minors vanish but F stays PSD.
        boundary: bool,
    },
    NotCertified {
        reason: String,
    },
}

impl CertifyOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, CertifyOutcome::Certified { .. })
    }
}

/// Verify the dual certificate at (a, d): nonnegative diagonal weights, F
/// positive semidefinite by exact elimination, and the pairing
/// coefficients regenerated from fresh kernel evaluations.
pub fn certify_bound(a: i64, d: i64) -> Result<CertifyOutcome, CertError> {
    check_a(a)?;
    if d < 4 {
        return Err(CertError::BadDimension);
    }
    let dr = int(d);
    let cert = match solve_certificate(a, &dr) {
        Ok(c) => c,
        Err(CertError::SingularSystem) => {
            return Ok(CertifyOutcome::NotCertified {
                reason: "defining system is singular at this dimension".into(),
            })
        }
        Err(e) => return Err(e),
    };
    if !cert.check_pairing_coefficients()
        || !cert.check_closed_forms()
        || !cert.check_minor_identities()
        || !cert.check_null_vector()
    {
        return Ok(CertifyOutcome::NotCertified {
            reason: "internal consistency check failed".into(),
        });
    }
    if cert.f1.is_negative() {
        return Ok(CertifyOutcome::NotCertified {
            reason: format!("f1 = {} < 0", cert.f1),
        });
    }
    if cert.f2.is_negative() {
        return Ok(CertifyOutcome::NotCertified {
            reason: format!("f2 = {} < 0", cert.f2),
        });
    }
    for (name, value) in &cert.minors {
        if value.is_negative() {
            return Ok(CertifyOutcome::NotCertified {
                reason: format!("minor {name} = {value} < 0"),
            });
        }
    }
    match cert.f_mat.psd_check().expect("symmetric by construction") {
        crate::exactmath::matrix::PsdVerdict::Psd => {}
        crate::exactmath::matrix::PsdVerdict::NotPsd(_) => {
            return Ok(CertifyOutcome::NotCertified {
                reason: "F is not positive semidefinite".into(),
            })
        }
    }
    let a_r = int(a);
    Ok(CertifyOutcome::Certified {
        bound: (&a_r * &a_r - int(1)) * (&a_r * &a_r - int(2)) / int(2),
        boundary: cert.ga_at_d.is_zero(),
    })
}

/// Isolate the maximum real root of g_a to an interval of the given
/// width.
pub fn d4_interval(a: i64, width: &Rat) -> Result<(Rat, Rat), CertError> {
    let ga = build_ga(a)?;
    let b = cauchy_bound(&ga.poly);
    isolate_max_root(&ga.poly, &-b.clone(), &b, width).map_err(|_| CertError::BadA)
}

/// The floor of the maximum real root of g_a.
pub fn d4_floor(a: i64) -> Result<i64, CertError> {
    let ga = build_ga(a)?;
    let (l, h) = d4_interval(a, &rat(1, 4))?;
    let n: BigInt = h.floor().to_integer();
    let nr = Rat::from_integer(n.clone());
    let n = n.to_i64().expect("root bound fits in i64");
    if nr <= l {
        // the whole bracket lies in (n, n+1)
        return Ok(n);
    }
    // the bracket straddles n: the maximum root exceeds n, equals it, or
    // falls below
    let chain = SturmChain::new(&ga.poly).expect("nonzero polynomial");
    if chain.count(&nr, &h) >= 1 || ga.poly.eval(&nr).is_zero() {
        Ok(n)
    } else {
        Ok(n - 1)
    }
}

/// An element p + q sqrt(5) of the real quadratic field Q(sqrt 5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sqrt5 {
    pub p: Rat,
    pub q: Rat,
}

impl Sqrt5 {
    pub fn new(p: Rat, q: Rat) -> Self {
        Sqrt5 { p, q }
    }

    pub fn from_rat(p: Rat) -> Self {
        Sqrt5 {
            p,
            q: Rat::zero(),
        }
    }

    pub fn add(&self, o: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&self.p + &o.p, &self.q + &o.q)
    }

    pub fn sub(&self, o: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(&self.p - &o.p, &self.q - &o.q)
    }

    pub fn mul(&self, o: &Sqrt5) -> Sqrt5 {
        Sqrt5::new(
            &self.p * &o.p + int(5) * &self.q * &o.q,
            &self.p * &o.q + &self.q * &o.p,
        )
    }

    /// Exact sign: when p and q disagree in sign, compare p^2 with 5q^2.
    pub fn sign(&self) -> i32 {
        let sp = sign(&self.p);
        let sq = sign(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // opposite signs: |p| vs |q| sqrt 5
        let cmp = &self.p * &self.p - int(5) * &self.q * &self.q;
        match sign(&cmp) {
            0 => 0,
            1 => sp,
            _ => sq,
        }
    }

    pub fn is_less_than(&self, o: &Sqrt5) -> bool {
        self.sub(o).sign() < 0
    }
}

fn eval_ga_sqrt5(ga: &GaPolynomial, x: &Sqrt5) -> Sqrt5 {
    let mut acc = Sqrt5::from_rat(Rat::zero());
    for c in ga.poly.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Sqrt5::from_rat(c.clone()));
    }
    acc
}

/// The four printed root intervals of g_a for a >= 5, as Q(sqrt 5) pairs
/// of endpoints.
pub fn asymptotic_intervals(a: i64) -> [(Sqrt5, Sqrt5); 4] {
    let z = || Rat::zero();
    let main = int(3 * a * a) - rat(948, 25);
    let drift = rat(12 * a, 5);
    [
        (
            Sqrt5::new(z(), z()),
            Sqrt5::new(rat(3, 2 * a * a), z()),
        ),
        (
            Sqrt5::new(rat(6 * a * a, 7) - int(8), z()),
            Sqrt5::new(rat(6 * a * a, 7), z()),
        ),
        (
            Sqrt5::new(main.clone(), -drift.clone() + rat(30, a)),
            Sqrt5::new(main.clone(), -drift.clone() + rat(45, a)),
        ),
        (
            Sqrt5::new(main.clone(), drift.clone() - rat(32, a)),
            Sqrt5::new(main, drift + rat(2, a)),
        ),
    ]
}

/// Confirm that g_a has exactly one root in each of the four printed
/// intervals: the eight endpoints are strictly increasing, g_a is nonzero
/// with opposite signs at the two endpoints of every interval, and the
/// degree caps the root count at four.
pub fn asymptotic_interval_check(a: i64) -> Result<bool, CertError> {
    check_a(a)?;
    if a < 5 {
        return Err(CertError::BadA);
    }
    let ga = build_ga(a)?;
    if !ga.poly.leading().expect("degree 4").is_negative() {
        return Ok(false);
    }
    let intervals = asymptotic_intervals(a);
    // disjoint and ordered
    let mut flat: Vec<&Sqrt5> = Vec::new();
    for (lo, hi) in &intervals {
        flat.push(lo);
        flat.push(hi);
    }
    for w in flat.windows(2) {
        if !w[0].is_less_than(w[1]) {
            return Ok(false);
        }
    }
    // opposite nonzero signs at the endpoints of each interval
    for (lo, hi) in &intervals {
        let slo = eval_ga_sqrt5(&ga, lo).sign();
        let shi = eval_ga_sqrt5(&ga, hi).sign();
        if slo == 0 || shi == 0 || slo == shi {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::matrix::PsdVerdict;
    use crate::exactmath::roots::sturm_count;

    #[test]
    fn ga_coefficients_at_3() {
        let ga = build_ga(3).unwrap();
        assert_eq!(ga.poly.coeff(4), int(-96768000));
        // constant term = -81 a^2 (a-2)^4 (a-1)^4 (a+1)^4 (a+2)^4
        assert_eq!(ga.poly.coeff(0), int(-81 * 9 * 16 * 256 * 625));
    }

    #[test]
    fn ga_constant_term_sign() {
        for a in [3i64, 5, 7, 9, 11, 13] {
            assert!(build_ga(a).unwrap().poly.coeff(0).is_negative());
        }
        assert_eq!(build_ga(2).unwrap_err(), CertError::BadA);
        assert_eq!(build_ga(1).unwrap_err(), CertError::BadA);
    }

    #[test]
    fn ga_four_real_roots() {
        for a in [5i64, 7, 9] {
            let ga = build_ga(a).unwrap();
            assert!(ga.poly.leading().unwrap().is_negative());
            let b = cauchy_bound(&ga.poly);
            assert_eq!(sturm_count(&ga.poly, &-b.clone(), &b).unwrap(), 4);
        }
    }

    #[test]
    fn certificate_at_3_14() {
        let cert = solve_certificate(3, &int(14)).unwrap();
        assert_eq!(cert.f1, rat(297, 112));
        assert_eq!(cert.f(0), &int(26));
        assert!(cert.check_null_vector());
        assert!(cert.check_closed_forms());
        assert!(cert.check_minor_identities());
        assert!(cert.check_pairing_coefficients());
    }

    #[test]
    fn certificate_rational_dimension() {
        let d = rat(27, 2);
        let cert = solve_certificate(5, &d).unwrap();
        assert!(cert.check_closed_forms());
        assert!(cert.check_minor_identities());
        assert!(cert.check_pairing_coefficients());
    }

    #[test]
    fn singular_locus_rejected() {
        // (a^4 - 5a^2 + 12) - (a^2 + 7)d = 0 at a = 3 gives d = 48/16 = 3
        assert_eq!(
            solve_certificate(3, &int(3)).unwrap_err(),
            CertError::SingularSystem
        );
    }

    #[test]
    fn floors_small() {
        assert_eq!(d4_floor(3).unwrap(), 14);
        assert_eq!(d4_floor(5).unwrap(), 64);
    }

    #[test]
    fn certify_at_floor_and_beyond() {
        for a in [3i64, 5] {
            let d = d4_floor(a).unwrap();
            let good = certify_bound(a, d).unwrap();
            assert!(good.is_certified(), "a = {a}, d = {d}");
            let bad = certify_bound(a, d + 1).unwrap();
            assert!(!bad.is_certified(), "a = {a}, d = {}", d + 1);
        }
    }

    #[test]
    fn certified_bound_value() {
        match certify_bound(3, 14).unwrap() {
            CertifyOutcome::Certified { bound, boundary } => {
                assert_eq!(bound, int(28));
                assert!(!boundary);
            }
            other => panic!("expected certified, got {other:?}"),
        }
        let cert = solve_certificate(3, &int(14)).unwrap();
        assert!(matches!(
            cert.f_mat.psd_check().unwrap(),
            PsdVerdict::Psd
        ));
    }

    #[test]
    fn sqrt5_sign_logic() {
        // 81 > 80, so 9 - 4 sqrt(5) is a small positive number
        assert_eq!(Sqrt5::new(int(9), int(-4)).sign(), 1);
        assert_eq!(Sqrt5::new(int(-9), int(4)).sign(), -1);
        assert_eq!(Sqrt5::new(int(7), int(-3)).sign(), 1);
        assert_eq!(Sqrt5::new(int(-7), int(3)).sign(), -1);
        assert_eq!(Sqrt5::new(int(0), int(0)).sign(), 0);
        assert_eq!(Sqrt5::new(int(2), int(1)).sign(), 1);
        assert_eq!(Sqrt5::new(int(-2), int(-1)).sign(), -1);
        // (2 + sqrt 5)(2 - sqrt 5) = -1
        let x = Sqrt5::new(int(2), int(1));
        let y = Sqrt5::new(int(2), int(-1));
        assert_eq!(x.mul(&y), Sqrt5::new(int(-1), int(0)));
    }

    #[test]
    fn asymptotic_intervals_small() {
        assert!(asymptotic_interval_check(5).unwrap());
        assert!(asymptotic_interval_check(7).unwrap());
        assert_eq!(asymptotic_interval_check(3).unwrap_err(), CertError::BadA);
    }

    #[test]
    fn floor_brackets_match_intervals() {
        // the fourth interval contains the maximum root, so the floor lies
        // within one of its integer endpoints
        for a in [5i64, 7, 9] {
            let floor = d4_floor(a).unwrap();
            let (lo, hi) = &asymptotic_intervals(a)[3];
            let f = Sqrt5::from_rat(int(floor));
            let f1 = Sqrt5::from_rat(int(floor + 1));
            // lo - 1 <= floor and floor <= hi
            assert!(f1.sub(lo).sign() >= 0, "a = {a}");
            assert!(f.sub(hi).sign() <= 0, "a = {a}");
        }
    }
}

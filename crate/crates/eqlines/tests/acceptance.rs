//! End-to-end acceptance checks: each test prints a single pass line on
//! success and panics with details on failure.

use eqlines::certificate::{
    asymptotic_interval_check, certify_bound, d4_floor, d4_interval, solve_certificate,
    CertifyOutcome,
};
use eqlines::constraints::{
    build_alt_threepoint, build_original_threepoint, build_reduced, halved_identity_check,
    lp_value,
};
use eqlines::constructions::{
    format_configuration, gen28, lambda_identity_check, parse_configuration, rank1_audit,
    srg_extract, Rank1Audit,
};
use eqlines::distributions::{
    class_distribution, class_distribution_naive, multipoint, two_point, Configuration,
};
use eqlines::exactmath::{int, rat, to_decimal, Rat, RatMatrix};
use eqlines::gram::{enumerate_classes, GramMatrix};
use num::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn elapsed_under(start: Instant, secs: u64, what: &str) {
    let took = start.elapsed();
    assert!(
        took.as_secs() < secs,
        "{what} took {took:?}, budget {secs}s"
    );
}

#[test]
fn criterion_1_dimension_table() {
    let start = Instant::now();
    let expected = [
        (3i64, 11i64, "14.42"),
        (5, 59, "64.56"),
        (7, 131, "144.52"),
        (9, 227, "250.41"),
        (11, 347, "380.96"),
    ];
    for (a, d3, d4) in expected {
        assert_eq!(3 * a * a - 16, d3, "a = {a}");
        let (lo, hi) = d4_interval(a, &rat(1, 1000)).unwrap();
        assert!(&hi - &lo <= rat(5, 1000));
        let mid = (&lo + &hi) / int(2);
        assert_eq!(to_decimal(&mid, 2), d4, "a = {a}");
    }
    // the binary prints the same rows
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_eqlines"))
        .arg("table3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for (a, d3, d4) in expected {
        let row = format!("{a:>3} | {d3:>4} | {d4:>7}");
        assert!(text.contains(&row), "missing row {row:?} in:\n{text}");
    }
    elapsed_under(start, 5, "criterion 1");
    println!("criterion 1 (dimension table): pass");
}

#[test]
fn criterion_2_floor_values() {
    let start = Instant::now();
    for (a, floor) in [(3i64, 14i64), (5, 64), (7, 144), (9, 250), (11, 380)] {
        assert_eq!(d4_floor(a).unwrap(), floor, "a = {a}");
    }
    elapsed_under(start, 5, "criterion 2");
    println!("criterion 2 (floor values): pass");
}

fn det3(m: &RatMatrix) -> Rat {
    m.get(0, 0) * (m.get(1, 1) * m.get(2, 2) - m.get(1, 2) * m.get(2, 1))
        - m.get(0, 1) * (m.get(1, 0) * m.get(2, 2) - m.get(1, 2) * m.get(2, 0))
        + m.get(0, 2) * (m.get(1, 0) * m.get(2, 1) - m.get(1, 1) * m.get(2, 0))
}

#[test]
fn criterion_3_certificate_suite() {
    let start = Instant::now();
    for a in (3i64..=19).step_by(2) {
        let d = d4_floor(a).unwrap();
        let outcome = certify_bound(a, d).unwrap();
        assert!(
            matches!(outcome, CertifyOutcome::Certified { .. }),
            "a = {a}, d = {d}: {outcome:?}"
        );
        let cert = solve_certificate(a, &int(d)).unwrap();
        assert!(cert.f1.is_positive(), "a = {a}");
        assert!(cert.f2.is_positive(), "a = {a}");
        for (name, value) in &cert.minors {
            assert!(value.is_positive(), "a = {a}, minor {name} = {value}");
        }
        assert!(det3(&cert.f_mat).is_zero(), "a = {a}: det F != 0");
        let beyond = certify_bound(a, d + 1).unwrap();
        assert!(
            matches!(beyond, CertifyOutcome::NotCertified { .. }),
            "a = {a}, d = {}: {beyond:?}",
            d + 1
        );
    }
    elapsed_under(start, 30, "criterion 3");
    println!("criterion 3 (certificate suite): pass");
}

#[test]
fn criterion_4_triple_redundancy() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut done = 0usize;
    while done < 50 {
        let a = 2 * rng.gen_range(1..=10) + 1; // odd, 3..=21
        let num: i64 = rng.gen_range(-60..=240);
        let den: i64 = rng.gen_range(1..=9);
        let d = rat(num, den);
        if d.is_zero() || d == int(3) {
            continue;
        }
        let cert = match solve_certificate(a, &d) {
            Ok(c) => c,
            Err(_) => continue, // excluded locus
        };
        assert!(cert.check_closed_forms(), "(a, d) = ({a}, {d})");
        assert!(cert.check_minor_identities(), "(a, d) = ({a}, {d})");
        assert!(cert.check_pairing_coefficients(), "(a, d) = ({a}, {d})");
        assert!(cert.check_null_vector(), "(a, d) = ({a}, {d})");
        done += 1;
    }
    println!("criterion 4 (triple redundancy): pass");
}

#[test]
fn criterion_5_28_line_audit() {
    let start = Instant::now();
    let x = gen28();

    // validation round trip
    let reparsed = parse_configuration(&format_configuration(&x), &rat(1, 3)).unwrap();
    assert_eq!(reparsed.gram().matrix(), x.gram().matrix());

    // pair distribution
    let tp = two_point(&x);
    assert_eq!(tp.get(&rat(1, 3)), Some(&336));
    assert_eq!(tp.get(&rat(-1, 3)), Some(&420));

    // brute-force class distributions, checked against the subset shortcut
    let naive = class_distribution_naive(&x, 2).unwrap();
    assert_eq!((naive.y1(), naive.y2()), (12096, 7560));
    assert_eq!((naive.z1(), naive.z2(), naive.z3()), (120960, 60480, 7560));
    let fast = class_distribution(&x, 2).unwrap();
    assert_eq!(fast.level(), naive.level());
    assert_eq!(fast.sub1(), naive.sub1());

    // rank-1 audit
    match rank1_audit(&x).unwrap() {
        Rank1Audit::Rank1(w) => assert_eq!(w, vec![int(1), int(16), int(10)]),
        other => panic!("expected rank 1, got {other:?}"),
    }

    // constraint matrices are PSD for m in {1, 2}, k <= 6
    let alpha = rat(1, 3);
    for m in 1..=2usize {
        let g = RatMatrix::from_fn(m, m, |i, j| if i == j { int(1) } else { alpha.clone() });
        for k in 0..=6 {
            let cm = build_reduced(&x, m, k, &g).unwrap();
            assert!(
                cm.matrix.psd_check().unwrap().is_psd(),
                "(m, k) = ({m}, {k})"
            );
        }
    }
    for k in 0..=10 {
        assert!(!lp_value(&x, k).is_negative(), "lp at k = {k}");
    }

    // strongly regular graph and exact spectra
    let report = srg_extract(&x, 0).unwrap();
    assert_eq!(
        (report.v, report.k, report.lambda, report.mu),
        (27, 16, 10, 8)
    );
    assert_eq!(
        report.adjacency_spectrum,
        vec![(int(16), 1), (int(4), 6), (int(-2), 20)]
    );
    assert_eq!(report.gram_spectrum, vec![(rat(9, 2), 6), (int(0), 21)]);
    assert!(lambda_identity_check(&report, 3));

    elapsed_under(start, 60, "criterion 5");
    println!("criterion 5 (28-line audit): pass");
}

#[test]
fn criterion_6_switching_class_counts() {
    let start = Instant::now();
    for (n, count) in [(1usize, 1usize), (2, 1), (3, 2), (4, 3), (5, 7), (6, 16)] {
        assert_eq!(enumerate_classes(n).unwrap().len(), count, "n = {n}");
    }
    elapsed_under(start, 10, "criterion 6 (n <= 6)");
    assert_eq!(enumerate_classes(7).unwrap().len(), 54);
    elapsed_under(start, 600, "criterion 6");
    println!("criterion 6 (switching classes): pass");
}

#[test]
fn criterion_7_property_suites() {
    // kernel switching invariance on 1000 random exact inputs
    use eqlines::gegenbauer::{qm, switching_conjugate_value, SwitchTransform};
    let mut rng = StdRng::seed_from_u64(0xfeed);
    let small = |rng: &mut StdRng| rat(rng.gen_range(-3..=3), rng.gen_range(4..=7));
    for _ in 0..1000 {
        let g01 = small(&mut rng);
        let g = RatMatrix::from_rows(vec![
            vec![int(1), g01.clone()],
            vec![g01, int(1)],
        ]);
        let u = vec![small(&mut rng), small(&mut rng)];
        let v = vec![small(&mut rng), small(&mut rng)];
        let t = small(&mut rng);
        let d = rat(rng.gen_range(7..=21), rng.gen_range(1..=2));
        let k = rng.gen_range(0..=4);
        let tr = SwitchTransform {
            lambda: vec![
                if rng.gen_bool(0.5) { 1 } else { -1 },
                if rng.gen_bool(0.5) { 1 } else { -1 },
            ],
            eps1: if rng.gen_bool(0.5) { 1 } else { -1 },
            eps2: if rng.gen_bool(0.5) { 1 } else { -1 },
        };
        let base = qm(&d, 2, k, &g, &u, &v, &t).unwrap();
        let conj = switching_conjugate_value(&d, 2, k, &tr, &g, &u, &v, &t).unwrap();
        let expected = if tr.eps1 * tr.eps2 == -1 && k % 2 == 1 {
            -base
        } else {
            base
        };
        assert_eq!(conj, expected);
    }

    let x = gen28();

    // degeneration identities on raw multipoint scans
    let alpha = rat(1, 3);
    for g01 in [alpha.clone(), -alpha.clone()] {
        let g = RatMatrix::from_rows(vec![
            vec![int(1), g01.clone()],
            vec![g01, int(1)],
        ]);
        let tables = multipoint(&x, 2, &g).unwrap();
        assert!(tables.check_degenerations(&g));
    }

    // factorial-sum identities for the class tables
    let n = x.len() as u64;
    for m in 0..=2usize {
        let table = class_distribution(&x, m).unwrap();
        let falling = |len: u64| -> u64 { (0..len).map(|i| n - i).product() };
        assert_eq!(table.level_total(), falling(m as u64 + 2), "m = {m}");
        assert_eq!(table.sub1_total(), falling(m as u64 + 1), "m = {m}");
        if m >= 1 {
            assert_eq!(table.sub2_total(), falling(m as u64), "m = {m}");
        }
    }

    // conjugated-sum identity, entry exact
    let g = RatMatrix::from_fn(2, 2, |i, j| if i == j { int(1) } else { alpha.clone() });
    for k in [0usize, 3] {
        assert!(halved_identity_check(&x, 2, k, &g).unwrap(), "k = {k}");
    }

    // alternative vs original three-point matrices: related by the exact
    // basis change V[i][j] = a_j^i over the distance set {1, 1/3, -1/3}
    let avals = [int(1), alpha.clone(), -alpha.clone()];
    let vander = RatMatrix::from_fn(3, 3, |i, j| {
        let mut p = int(1);
        for _ in 0..i {
            p *= &avals[j];
        }
        p
    });
    for k in 0..=4 {
        let alt = build_alt_threepoint(&x, k);
        let orig = build_original_threepoint(&x, k, 2);
        let expected = vander.matmul(&alt.matrix).matmul(&vander.transpose());
        assert_eq!(orig.matrix, expected, "k = {k}");
    }

    println!("criterion 7 (property suites): pass");
}

#[test]
fn criterion_8_asymptotic_intervals() {
    let start = Instant::now();
    for a in (5i64..=101).step_by(2) {
        assert!(asymptotic_interval_check(a).unwrap(), "a = {a}");
    }
    elapsed_under(start, 120, "criterion 8");
    println!("criterion 8 (asymptotic intervals): pass");
}

/// Shortcut-vs-naive agreement on sub-configurations beyond the unit
/// fixtures (supports the 28-line audit's oracle role).
#[test]
fn shortcut_matches_naive_on_subsets() {
    let x = gen28();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..5 {
        let size = rng.gen_range(5..=9);
        let mut idx: Vec<usize> = (0..28).collect();
        for i in 0..size {
            let j = rng.gen_range(i..28);
            idx.swap(i, j);
        }
        let sub = RatMatrix::from_fn(size, size, |i, j| x.gram().entry(idx[i], idx[j]).clone());
        let y =
            Configuration::equiangular(7, GramMatrix::new(sub).unwrap(), rat(1, 3)).unwrap();
        let fast = class_distribution(&y, 2).unwrap();
        let naive = class_distribution_naive(&y, 2).unwrap();
        assert_eq!(fast.level(), naive.level());
        assert_eq!(fast.sub1(), naive.sub1());
        assert_eq!(fast.sub2(), naive.sub2());
    }
}

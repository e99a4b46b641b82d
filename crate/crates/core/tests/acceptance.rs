//! Acceptance suite. Runs every criterion once, single-threaded, prints one
//! PASS/FAIL line per criterion and fails if any criterion failed.

use std::f64::consts::{LN_2, PI};
use std::time::{Duration, Instant};

use hurwitz_core::closed_forms::{closed_even, lemma21_rhs, Selection, PRINTED};
use hurwitz_core::hypothesis::Canon;
use hurwitz_core::quadrature::{family_quadrature, Family, FamilySpec};
use hurwitz_core::transforms::{kernel_sine_transform, kernel_transform_quadrature, TransformQuery};
use hurwitz_core::verification::{
    parseval_check, resolve_all, sweep, theorem_grid, GridPoint, Status, VerificationRecord, MELLIN_TOL,
};
use hurwitz_core::zeta::{hermite_zeta, hurwitz_zeta, hurwitz_zeta_ds, KernelKind, ZetaParams};
use hurwitz_core::{c, cli, Complex64};

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn rel(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / y.norm().max(1.0)
}

fn continuation_grid() -> Vec<(Complex64, Complex64)> {
    let ss = [
        c(-2.5),
        c(-1.0),
        c(0.5),
        c(2.0),
        c(3.7),
        Complex64::new(2.0, 3.0),
    ];
    let aa = [c(0.5), c(1.0), c(2.3), Complex64::new(1.0, 0.5)];
    ss.iter().flat_map(|&s| aa.iter().map(move |&a| (s, a))).collect()
}

fn zeta(s: Complex64, a: Complex64) -> Complex64 {
    hurwitz_zeta(ZetaParams::new(s, a)).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    worst = worst.max(rel(zeta(c(2.0), c(1.0)), c(PI * PI / 6.0)));
    worst = worst.max(rel(zeta(c(2.0), c(0.5)), c(PI * PI / 2.0)));
    for a in [0.5, 1.0, 2.5] {
        worst = worst.max(rel(zeta(c(0.0), c(a)), c(0.5 - a)));
    }
    for (s, a) in continuation_grid() {
        let lhs = zeta(s, a) - zeta(s, a + 1.0);
        let err = (lhs - a.powc(-s)).norm() / zeta(s, a).norm().max(1.0);
        worst = worst.max(err);
    }
    let elapsed = start.elapsed();
    check(
        worst <= 1e-11 && elapsed < Duration::from_secs(1),
        format!("max rel err {worst:.2e}, {elapsed:.2?}"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (s, a) in continuation_grid() {
        let p = ZetaParams::new(s, a);
        let h = hermite_zeta(p).map_err(|e| format!("hermite_zeta({s},{a}): {e}"))?;
        worst = worst.max(rel(hurwitz_zeta(p).unwrap(), h));
    }
    let elapsed = start.elapsed();
    check(
        worst <= 1e-10 && elapsed < Duration::from_secs(10),
        format!("max rel err {worst:.2e} over 24 points, {elapsed:.2?}"),
    )
}

fn criterion_3() -> Outcome {
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for (s, a) in continuation_grid() {
        if (s - 1.0).norm() < 0.1 {
            continue;
        }
        let d = hurwitz_zeta_ds(ZetaParams::new(s, a)).unwrap();
        let fd = (zeta(s + h, a) - zeta(s - h, a)) / (2.0 * h);
        worst = worst.max((d - fd).norm());
        points += 1;
    }
    let at_zero = hurwitz_zeta_ds(ZetaParams::real(0.0, 1.0)).unwrap();
    let zero_err = (at_zero - c(-0.5 * (LN_2 + PI.ln()))).norm();
    check(
        worst <= 1e-7 && zero_err <= 1e-8,
        format!("max abs err {worst:.2e} over {points} points, ζ'(0,1) err {zero_err:.2e}"),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for kernel in KernelKind::ALL {
        for beta in [PI, 2.0 * PI] {
            for w in [0.1, 0.5, 1.0, 2.0, 5.0] {
                let q = TransformQuery::new(kernel, w, beta);
                let closed = kernel_sine_transform(q).unwrap().value;
                let quad = kernel_transform_quadrature(q, 1e-13).unwrap().value;
                worst = worst.max((quad - c(closed)).norm());
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        worst <= 1e-10 && elapsed < Duration::from_secs(10),
        format!("max abs err {worst:.2e}, {elapsed:.2?}"),
    )
}

fn printed_grid(family: Family) -> Vec<GridPoint> {
    theorem_grid(family).into_iter().map(|spec| GridPoint::new(spec, PRINTED)).collect()
}

fn summarize(records: &[VerificationRecord]) -> (usize, f64) {
    let pass = records.iter().filter(|r| r.status == Status::Pass).count();
    let worst = records.iter().filter_map(|r| r.rel_err).fold(0.0, f64::max);
    (pass, worst)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let records = sweep(&printed_grid(Family::BoseEven), &Canon::default(), 1e-8, false).unwrap();
    let (pass, worst) = summarize(&records);

    let mut lemma_worst: f64 = 0.0;
    for (n, a, s) in [
        (0usize, 0.7, 1.5),
        (0, 1.0, 3.7),
        (1, 2.3, 3.5),
        (1, 1.0, 8.0),
        (2, 0.7, 7.7),
        (3, 2.3, 12.0),
    ] {
        let rhs = lemma21_rhs(n, c(a), c(s)).map_err(|e| format!("lemma21_rhs({n},{a},{s}): {e}"))?;
        let closed = closed_even(Family::BoseEven, n, c(a), c(s), Selection::Candidate(PRINTED)).unwrap();
        lemma_worst = lemma_worst.max(rel(rhs, closed));
    }
    let elapsed = start.elapsed();
    check(
        pass == 36 && lemma_worst <= 1e-8 && elapsed < Duration::from_secs(120),
        format!(
            "{pass}/36 PASS (max rel err {worst:.2e}), lemma route max rel err {lemma_worst:.2e} at 6 points, {elapsed:.2?}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let records = sweep(&printed_grid(Family::SinhEven), &Canon::default(), 1e-8, false).unwrap();
    let (pass, worst) = summarize(&records);
    check(pass == 36, format!("{pass}/36 PASS (max rel err {worst:.2e})"))
}

fn criterion_7_and_8() -> (Outcome, Outcome) {
    let report = match resolve_all(1e-8, false) {
        Ok(r) => r,
        Err(e) => return (Err(format!("resolution failed: {e}")), Err("no report".into())),
    };

    let contested = [
        Family::FermiEven,
        Family::SechEven,
        Family::BoseOdd,
        Family::SinhOdd,
        Family::FermiOdd,
        Family::SechOdd,
    ];
    let mut problems = Vec::new();
    for family in contested {
        let Some(res) = report.families.iter().find(|f| f.family == family) else {
            problems.push(format!("{family} missing"));
            continue;
        };
        let survivors = res
            .evidence
            .iter()
            .filter(|e| e.pass >= 24 && e.pass == e.fail + e.pass + e.skipped + e.no_convergence + e.invalid)
            .count();
        if survivors != 1 {
            problems.push(format!("{family}: {survivors} survivors"));
        }
        let listed = report.discrepancies.iter().any(|d| d.subject == family.to_string());
        if (res.canonical != PRINTED) != listed {
            problems.push(format!("{family}: discrepancy list disagrees with canonical {}", res.canonical));
        }
    }
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["hurwitz", "--format", "text", "errata"], &mut out, &mut err);
    if code != 0 {
        problems.push(format!("errata exit code {code}"));
    }
    let c7 = check(
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "one survivor per family, {} discrepancies listed, exit code {code}",
                report.discrepancies.len()
            )
        } else {
            problems.join("; ")
        },
    );

    let mut worst: f64 = 0.0;
    let mut stated = Vec::new();
    for m in &report.mellin {
        stated.push(format!("{} c={}", m.kernel, m.constant_value));
        for &(s, a) in &[(2.0, 1.0), (3.5, 0.7), (2.5, 2.0)] {
            let closed = hurwitz_core::zeta::kernel_mellin(
                m.kernel,
                c(s),
                c(a),
                hurwitz_core::zeta::MellinChoice::Candidate(m.constant),
            )
            .unwrap();
            let quad = mellin_quadrature(m.kernel, s, a);
            worst = worst.max(rel(closed, quad));
        }
    }
    let text = String::from_utf8_lossy(&out);
    let all_stated = report.mellin.len() == 4
        && report.mellin.iter().all(|m| text.contains(&format!("c = {}", m.constant_value)));
    let c8 = check(
        worst <= MELLIN_TOL && all_stated,
        format!("{}; max rel err {worst:.2e}", stated.join(", ")),
    );
    (c7, c8)
}

fn mellin_quadrature(kind: KernelKind, s: f64, a: f64) -> Complex64 {
    let decay = match kind {
        KernelKind::Bose | KernelKind::Fermi => a,
        KernelKind::Sinh | KernelKind::Cosh => a + 1.0,
    };
    let f = move |t: f64| {
        if t == 0.0 {
            c(0.0)
        } else {
            c(((s - 1.0) * t.ln() - a * t).exp() * kind.weight(t))
        }
    };
    hurwitz_core::quadrature::integrate_half_line(f, 1e-13, decay).unwrap().value
}

fn criterion_9() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (n, a, s) in [(0usize, 1.0, 3.0), (1, 2.0, 6.0), (0, 1.0, 2.0)] {
        let r = parseval_check(n, c(a), c(s), 1e-8).map_err(|e| e.to_string())?;
        ok &= r.status == Status::Pass;
        lines.push(format!("({n},{a},{s}) {} {:.1e}", r.status.name(), r.rel_err.unwrap_or(f64::NAN)));
    }
    check(ok, lines.join(", "))
}

fn criterion_10() -> Outcome {
    let tol = 1e-12;
    let mut worst_est: f64 = 0.0;
    let mut problems = Vec::new();
    for family in [Family::OpenI, Family::OpenT, Family::OpenL] {
        for k in 0..=2usize {
            for q in [0.5, 1.0, 2.0] {
                let spec = FamilySpec::open(family, k, q);
                let full = family_quadrature(&spec, tol).map_err(|e| format!("{family} k={k} q={q}: {e}"))?;
                let half = family_quadrature(&spec, tol / 2.0).map_err(|e| format!("{family} k={k} q={q}: {e}"))?;
                worst_est = worst_est.max(full.err_estimate);
                if full.err_estimate >= 1e-10 || (full.value - half.value).norm() > full.err_estimate {
                    problems.push(format!(
                        "{family} k={k} q={q}: est {:.1e}, drift {:.1e}",
                        full.err_estimate,
                        (full.value - half.value).norm()
                    ));
                }
            }
        }
    }
    check(
        problems.is_empty(),
        if problems.is_empty() {
            format!("27 integrals, max err_estimate {worst_est:.2e}")
        } else {
            problems.join("; ")
        },
    )
}

fn criterion_11(elapsed: Duration) -> Outcome {
    let mut grid = printed_grid(Family::BoseEven);
    grid.extend(printed_grid(Family::SinhEven));
    grid.push(GridPoint::new(FamilySpec::real(Family::BoseEven, 1, 1.0, 3.0), PRINTED));
    let serial = sweep(&grid, &Canon::default(), 1e-8, false).unwrap();
    let parallel = sweep(&grid, &Canon::default(), 1e-8, true).unwrap();
    let strip = |rs: &[VerificationRecord]| rs.iter().map(|r| r.without_timing()).collect::<Vec<_>>();
    let identical = strip(&serial) == strip(&parallel);
    check(
        identical && elapsed < Duration::from_secs(300),
        format!(
            "criteria 1-10 took {elapsed:.2?}; serial and parallel sweeps of {} points {}",
            grid.len(),
            if identical { "identical" } else { "differ" }
        ),
    )
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let mut results: Vec<(&str, Outcome)> = vec![
        ("1 Hurwitz core", criterion_1()),
        ("2 continuation agreement", criterion_2()),
        ("3 derivative", criterion_3()),
        ("4 transform oracles", criterion_4()),
        ("5 even bose grid", criterion_5()),
        ("6 even sinh grid", criterion_6()),
    ];
    let (c7, c8) = criterion_7_and_8();
    results.push(("7 hypothesis resolution", c7));
    results.push(("8 Mellin constants", c8));
    results.push(("9 Parseval", criterion_9()));
    results.push(("10 open families", criterion_10()));
    let elapsed = start.elapsed();
    results.push(("11 suite runtime and parallel sweeps", criterion_11(elapsed)));

    let mut failed = Vec::new();
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                println!("FAIL criterion {name}: {detail}");
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

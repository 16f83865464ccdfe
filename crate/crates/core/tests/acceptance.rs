//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test -p nefslope-core --test acceptance`.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{charpoly_by_interpolation, int_sqrt_exact, r, surd_gt, to_f64};
use nefslope_core::generators::{gen_random, GenKind, GenSpec, Instance};
use nefslope_core::nefslope::{
    is_nef, slope, slope_lower_bound, slope_with_width, verify_certificate, Rationality,
    SlopeResult,
};
use nefslope_core::numdata::profile_from_matrix;
use nefslope_core::polyroot::{chi_polynomial, Bound, IntPolynomial, SturmChain};
use nefslope_core::simplicity::{kernel_witness, norm_slope_check, NormClassSpec};
use nefslope_core::{Int, IntersectionProfile, Rat, SymMatrixModel};
use num_traits::{One, Signed, Zero};

struct Outcome {
    id: &'static str,
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.limit.is_none_or(|l| self.elapsed <= l)
    }
}

fn run(
    id: &'static str,
    name: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce(&mut Vec<String>) -> usize,
) -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let cases = body(&mut failures);
    Outcome {
        id,
        name,
        cases,
        failures,
        elapsed: start.elapsed(),
        limit,
    }
}

/// Rational slopes seen by criteria 1 and 3, re-checked by criterion 4.
type RationalLog = Vec<(IntersectionProfile, Rationality)>;

fn ac1(log: &mut RationalLog) -> impl FnOnce(&mut Vec<String>) -> usize + '_ {
    move |fails| {
        let mut cases = 0;
        for n in 2..=4 {
            for dim_y in 1..n {
                for e in 1..=5u64 {
                    cases += 1;
                    let spec = NormClassSpec::new(n, dim_y, e).unwrap();
                    let check = norm_slope_check(&spec).unwrap();
                    let expected = Rat::new(Int::one(), Int::from(e * e));
                    if !check.pass || check.slope.rational_value() != Some(expected) {
                        fails.push(format!(
                            "n={n} dimY={dim_y} e={e}: {:?}",
                            check.slope.rational_value()
                        ));
                    }
                    if let SlopeResult::Finite { rationality, .. } = &check.slope {
                        let p = profile_from_matrix(&nefslope_core::simplicity::norm_class(&spec))
                            .unwrap();
                        log.push((p, rationality.clone()));
                    }
                }
            }
        }
        cases
    }
}

fn ac2(fails: &mut Vec<String>) -> usize {
    let p = IntersectionProfile::from_i64(2, &[2, 3, 2]).unwrap();
    let width = Rat::new(Int::one(), Int::from(10u64.pow(12)));
    let s = slope_with_width(&p, &width).unwrap();
    let SlopeResult::Finite {
        slope,
        rationality: Rationality::Irrational { certificate },
        ..
    } = &s
    else {
        fails.push(format!("expected finite irrational, got {s:?}"));
        return 1;
    };
    // Positive divisor candidates of 2u^2 - 6u + 2: r | 2, s | 2.
    let expected = vec![r(2, 1), r(1, 1), r(1, 2)];
    let got: Vec<Rat> = certificate
        .candidates
        .iter()
        .map(|(c, _)| c.clone())
        .collect();
    if got != expected {
        fails.push(format!("candidates {got:?}"));
    }
    if certificate.candidates.iter().any(|(_, v)| v.is_zero()) {
        fails.push("a candidate evaluated to zero".into());
    }
    let (lo, hi) = slope.interval();
    if hi - lo > width {
        fails.push(format!("width {} > 1e-12", hi - lo));
    }
    // (3 - sqrt 5)/2 in (lo, hi], decided exactly and in floating point.
    let half = r(1, 2);
    let inside = surd_gt(&r(3, 2), &-half.clone(), &Int::from(5), lo)
        && !surd_gt(&r(3, 2), &-half, &Int::from(5), hi);
    let oracle = (3.0 - 5f64.sqrt()) / 2.0;
    if !inside || to_f64(lo) > oracle + 1e-15 || to_f64(hi) < oracle - 1e-15 {
        fails.push(format!("({lo}, {hi}] misses (3 - sqrt 5)/2"));
    }
    1
}

fn ac3(log: &mut RationalLog) -> impl FnOnce(&mut Vec<String>) -> usize + '_ {
    move |fails| {
        let mut cases = 0;
        let width = Rat::new(Int::one(), Int::from(10u64.pow(11)));
        for l2 in 1..=10i64 {
            for lm in -10..=10i64 {
                for m2 in -10..=10i64 {
                    if lm * lm < l2 * m2 {
                        continue;
                    }
                    cases += 1;
                    let p = IntersectionProfile::from_i64(2, &[m2, lm, l2]).unwrap();
                    let s = slope_with_width(&p, &width).unwrap();
                    // zeta = (lm + sqrt disc)/l2, slope = 1/zeta.
                    let disc = Int::from(lm * lm - l2 * m2);
                    let root = int_sqrt_exact(&disc);
                    let zeta_f = (lm as f64 + (disc_f(lm, l2, m2)).sqrt()) / l2 as f64;
                    let zeta_positive = surd_gt(&r(lm, l2), &r(1, l2), &disc, &Rat::zero());
                    let tag = format!("(M^2, LM, L^2) = ({m2}, {lm}, {l2})");
                    match (&s, zeta_positive) {
                        (SlopeResult::Infinite { .. }, false) => {}
                        (
                            SlopeResult::Finite {
                                slope, rationality, ..
                            },
                            true,
                        ) => {
                            if rationality.is_rational() != root.is_some() {
                                fails.push(format!(
                                    "{tag}: rationality {} vs oracle {}",
                                    rationality.is_rational(),
                                    root.is_some()
                                ));
                            }
                            if let Some(root) = &root {
                                let exact = Rat::new(Int::from(l2), Int::from(lm) + root);
                                if s.rational_value() != Some(exact.clone()) {
                                    fails.push(format!(
                                        "{tag}: slope {:?} vs {exact}",
                                        s.rational_value()
                                    ));
                                }
                                log.push((p.clone(), rationality.clone()));
                            } else {
                                let mid = slope.to_f64();
                                if (mid - 1.0 / zeta_f).abs() > 1e-9 {
                                    fails.push(format!(
                                        "{tag}: slope {mid} vs oracle {}",
                                        1.0 / zeta_f
                                    ));
                                }
                            }
                        }
                        _ => fails.push(format!(
                            "{tag}: kind mismatch, oracle zeta>0 = {zeta_positive}"
                        )),
                    }
                }
            }
        }
        cases
    }
}

fn disc_f(lm: i64, l2: i64, m2: i64) -> f64 {
    (lm * lm - l2 * m2) as f64
}

/// 1000 seeded instances across every generator family.
fn random_corpus(seed: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    let kinds = [
        GenKind::Surface { bound: 12 },
        GenKind::ProductMatrix { n: 3, bound: 4 },
        GenKind::RationalSpectrum { n: 3, bound: 6 },
        GenKind::Profile { n: 3, bound: 12 },
    ];
    for (i, kind) in kinds.into_iter().enumerate() {
        out.extend(gen_random(&GenSpec {
            kind,
            count: 250,
            seed: seed + i as u64,
        }));
    }
    out
}

fn ac4(log: &RationalLog) -> impl FnOnce(&mut Vec<String>) -> usize + '_ {
    move |fails| {
        let mut checked = 0;
        let mut check = |p: &IntersectionProfile, rat: &Rationality, fails: &mut Vec<String>| {
            if let Rationality::Rational { p: num, q, .. } = rat {
                checked += 1;
                let div = |d: &Int, n: &Int| n.is_zero() || (n % d).is_zero();
                if !div(num, p.top()) || !div(q, p.m_top()) || !verify_certificate(p, rat) {
                    fails.push(format!("{p}: {num}/{q}"));
                }
            }
        };
        for (p, rat) in log {
            check(p, rat, fails);
        }
        for inst in random_corpus(4000) {
            let p = inst.profile().unwrap();
            if let SlopeResult::Finite { rationality, .. } = slope(&p).unwrap() {
                check(&p, &rationality, fails);
            }
        }
        checked
    }
}

fn ac5(fails: &mut Vec<String>) -> usize {
    let mut cases = 0;
    let mut seed = 5000;
    while cases < 1000 {
        for inst in random_corpus(seed) {
            if cases == 1000 {
                break;
            }
            let p = inst.profile().unwrap();
            let Ok(bound) = slope_lower_bound(&p) else {
                continue;
            };
            cases += 1;
            match slope(&p).unwrap().slope() {
                Some(s) if s.cmp_rat(&bound) != Ordering::Less => {}
                other => fails.push(format!("{p}: slope {other:?} < bound {bound}")),
            }
        }
        seed += 10;
    }
    cases
}

fn matrix_corpus(count_per_kind: usize, seed: u64) -> Vec<SymMatrixModel> {
    let mut out = Vec::new();
    for (i, n) in (2..=6).enumerate() {
        let kinds = [
            GenKind::RationalMatrix {
                n,
                bound: 5,
                denom: 3,
            },
            GenKind::ProductMatrix { n, bound: 3 },
        ];
        for (j, kind) in kinds.into_iter().enumerate() {
            let spec = GenSpec {
                kind,
                count: count_per_kind,
                seed: seed + (10 * i + j) as u64,
            };
            out.extend(
                gen_random(&spec)
                    .into_iter()
                    .map(|m| m.matrix().unwrap().clone()),
            );
        }
    }
    out
}

fn ac6(fails: &mut Vec<String>) -> usize {
    let matrices = matrix_corpus(50, 6000);
    for m in &matrices {
        let chi = chi_polynomial(&profile_from_matrix(m).unwrap());
        let ln = Rat::from_integer(m.ln().clone());
        let oracle: Vec<Rat> = charpoly_by_interpolation(m.matrix())
            .iter()
            .map(|c| c * &ln)
            .collect();
        let got: Vec<Rat> = chi
            .coeffs()
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        if got != oracle {
            fails.push(format!("{m:?}"));
        }
    }
    matrices.len()
}

/// `Ln * det(xI - F)` as an integer polynomial, via the interpolation oracle.
fn oracle_charpoly(m: &SymMatrixModel) -> IntPolynomial {
    let ln = Rat::from_integer(m.ln().clone());
    let c: Vec<Rat> = charpoly_by_interpolation(m.matrix())
        .iter()
        .map(|c| c * &ln)
        .collect();
    let den = c.iter().fold(Int::one(), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    IntPolynomial::new(
        c.iter()
            .map(|x| (x * Rat::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

fn ac7(fails: &mut Vec<String>) -> usize {
    let mut matrices = matrix_corpus(25, 7000);
    // Positive semidefinite Gram matrices A^T A for a balanced corpus.
    for inst in gen_random(&GenSpec {
        kind: GenKind::ProductMatrix { n: 4, bound: 3 },
        count: 150,
        seed: 7100,
    }) {
        let a = inst.matrix().unwrap().matrix().to_vec();
        let n = a.len();
        let gram: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rat::zero(), |acc, k| acc + &a[k][i] * &a[k][j]))
                    .collect()
            })
            .collect();
        matrices.push(SymMatrixModel::principal(gram).unwrap());
    }
    for inst in gen_random(&GenSpec {
        kind: GenKind::RationalSpectrum { n: 3, bound: 3 },
        count: 100,
        seed: 7200,
    }) {
        matrices.push(inst.matrix().unwrap().clone());
    }
    let mut nef = 0;
    for m in &matrices {
        let report = is_nef(&profile_from_matrix(m).unwrap());
        let cp = oracle_charpoly(m);
        let chain = SturmChain::new(&cp);
        let mut negatives = chain.count(&Bound::NegInf, &Bound::Finite(Rat::zero()));
        if cp.sign_at(&Rat::zero()) == 0 {
            negatives -= 1;
        }
        if report.is_nef() {
            nef += 1;
        }
        if report.is_nef() != (negatives == 0) {
            fails.push(format!(
                "{m:?}: nef={} negative eigenvalues={negatives}",
                report.is_nef()
            ));
        }
    }
    if nef == 0 || nef == matrices.len() {
        fails.push(format!(
            "degenerate corpus: {nef} nef of {}",
            matrices.len()
        ));
    }
    matrices.len()
}

fn rational_spectrum_corpus(count: usize, seed: u64) -> Vec<SymMatrixModel> {
    let mut out = Vec::new();
    for (i, n) in (2..=5).enumerate() {
        let spec = GenSpec {
            kind: GenKind::RationalSpectrum { n, bound: 6 },
            count: count / 4,
            seed: seed + i as u64,
        };
        out.extend(
            gen_random(&spec)
                .into_iter()
                .map(|m| m.matrix().unwrap().clone()),
        );
    }
    out
}

fn ac8(fails: &mut Vec<String>) -> usize {
    let matrices = rational_spectrum_corpus(200, 8000);
    for m in &matrices {
        let n = m.dim();
        let p = profile_from_matrix(m).unwrap();
        if p.proportional_ratio().is_some() {
            fails.push(format!("{m:?}: proportional"));
            continue;
        }
        let s = slope(&p).unwrap();
        let Some(Rationality::Rational { p: num, q, .. }) = s.rationality() else {
            fails.push(format!("{m:?}: slope not certified rational"));
            continue;
        };
        let k = kernel_witness(m, num, q);
        if !k.is_proper(n) {
            fails.push(format!("{m:?}: kernel {k:?}"));
        }
        let b = p.binary(q, &-num.clone());
        if !is_nef(&b).is_boundary() {
            fails.push(format!("{m:?}: boundary class {b} not nef-and-not-ample"));
        }
    }
    matrices.len()
}

fn ac9(fails: &mut Vec<String>) -> usize {
    let mut profiles: Vec<IntersectionProfile> = rational_spectrum_corpus(80, 9000)
        .iter()
        .map(|m| profile_from_matrix(m).unwrap())
        .collect();
    for e in 1..=4u64 {
        for (n, d) in [(2, 1), (3, 1), (3, 2), (4, 3), (4, 2)] {
            let spec = NormClassSpec::new(n, d, e).unwrap();
            profiles
                .push(profile_from_matrix(&nefslope_core::simplicity::norm_class(&spec)).unwrap());
        }
    }
    profiles.truncate(100);
    let step = r(1, 1000);
    for p in &profiles {
        let Some(value) = slope(p).unwrap().rational_value() else {
            fails.push(format!("{p}: slope not rational"));
            continue;
        };
        for (t, want_nef) in [(&value - &step, true), (&value + &step, false)] {
            // L - tM with t = a/b, b > 0, cleared to bL - aM.
            let b = p.binary(t.denom(), &-t.numer().clone());
            if is_nef(&b).is_nef() != want_nef {
                fails.push(format!("{p}: t = {t} nef = {}", !want_nef));
            }
        }
        if !value.is_positive() {
            fails.push(format!("{p}: non-positive slope {value}"));
        }
    }
    profiles.len()
}

fn main() -> ExitCode {
    let mut log = RationalLog::new();
    let mut outcomes = vec![
        run(
            "AC1",
            "norm-class law sigma = 1/e^2",
            Some(Duration::from_secs(1)),
            ac1(&mut log),
        ),
        run(
            "AC2",
            "irrational certification for (2,3,2)",
            Some(Duration::from_millis(100)),
            ac2,
        ),
        run(
            "AC3",
            "exhaustive surface oracle equivalence",
            Some(Duration::from_secs(30)),
            ac3(&mut log),
        ),
    ];
    outcomes.push(run("AC4", "divisibility p | L^n, q | M^n", None, ac4(&log)));
    outcomes.push(run(
        "AC5",
        "Cauchy lower bound",
        Some(Duration::from_secs(10)),
        ac5,
    ));
    outcomes.push(run("AC6", "chi = L^n charpoly(F)", None, ac6));
    outcomes.push(run("AC7", "nef iff no negative eigenvalue", None, ac7));
    outcomes.push(run("AC8", "kernel witness on non-simple models", None, ac8));
    outcomes.push(run("AC9", "threshold at slope -/+ 1/1000", None, ac9));

    let mut all = true;
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        let limit = o.limit.map_or(String::new(), |l| {
            format!(" (limit {:.3}s)", l.as_secs_f64())
        });
        println!(
            "[{status}] {} {}: {} cases, {} failures, {:.3}s{limit}",
            o.id,
            o.name,
            o.cases,
            o.failures.len(),
            o.elapsed.as_secs_f64()
        );
        for f in o.failures.iter().take(5) {
            println!("       {f}");
        }
        all &= o.passed();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

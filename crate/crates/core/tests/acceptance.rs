//! Acceptance criteria 1-10, run in order with their time limits. Each
//! criterion prints one PASS/FAIL line on stderr.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use linkbound::bounds::{
    assemble_report, band_certificate_genus, infection_transfer, width_upper_bound, BandCertificate, InfectionDecl,
};
use linkbound::braid::torus_braid;
use linkbound::catalog::Catalog;
use linkbound::factor::{fox_milnor_test, FoxMilnor, DEFAULT_DEGREE_CAP};
use linkbound::oracle::float_oracle;
use linkbound::scalar::{ratio, rational_to_f64};
use linkbound::seifert::{connected_sum, mirror, seifert_matrix_from_braid, stabilize, Direction, SeifertData};
use linkbound::signature::{
    alexander_from_seifert, link_nullity, matrix_signature_function, signature_function, CirclePoint, SignatureFunction,
};
use linkbound::IntLaurent;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{probe_points, random_knot, random_link, random_matrix};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn t35() -> SeifertData {
    seifert_matrix_from_braid(&torus_braid(3, 5).unwrap()).unwrap()
}

fn t35_alexander() -> IntLaurent {
    IntLaurent::from_i64_terms(&[(8, 1), (7, -1), (5, 1), (4, -1), (3, 1), (1, -1), (0, 1)])
}

fn product_polynomial() -> IntLaurent {
    t35_alexander() * IntLaurent::from_i64_terms(&[(2, 2), (1, -5), (0, 2)])
}

fn alexander_regression() -> Check {
    let got = alexander_from_seifert(&t35());
    ensure(got == t35_alexander(), || format!("got {got}"))
}

fn signature_magnitude() -> Check {
    let f = signature_function(&t35()).map_err(|e| e.to_string())?;
    let (s, at) = f.max_abs_sigma();
    ensure(s == 8, || format!("max |sigma| = {s}"))?;
    let first = &f.intervals[0];
    ensure(first.lo == CirclePoint::from_int(-2) && first.sigma.abs() == 8, || {
        format!(
            "first interval has sigma {}, maximum attained on interval {at}",
            first.sigma
        )
    })?;
    ensure(f.at_minus_two.sigma.abs() == 8, || {
        format!("sigma(-1) = {}", f.at_minus_two.sigma)
    })
}

fn exact_bound() -> Check {
    let r = assemble_report(&t35(), &[], DEFAULT_DEGREE_CAP).map_err(|e| e.to_string())?;
    ensure(r.lower == 4 && r.upper == Some(4) && r.exact, || {
        format!("lower {} upper {:?}", r.lower, r.upper)
    })
}

fn width_bound() -> Check {
    let p = product_polynomial();
    let w = p.width().map_err(|e| e.to_string())?;
    let u = width_upper_bound(&p).map_err(|e| e.to_string())?;
    ensure(w == 10 && u == 5, || format!("width {w}, bound {u}"))
}

fn band_certificate() -> Check {
    let g = band_certificate_genus(&BandCertificate {
        bands: 11,
        resulting_unlink_components: 4,
    })
    .map_err(|e| e.to_string())?;
    ensure(g == 4, || format!("genus {g}"))
}

fn fox_milnor() -> Check {
    let product = fox_milnor_test(&product_polynomial(), DEFAULT_DEGREE_CAP).map_err(|e| e.to_string())?;
    ensure(product.fails(), || format!("product polynomial: {product:?}"))?;
    let ribbon = fox_milnor_test(
        &IntLaurent::from_i64_terms(&[(2, 2), (1, -5), (0, 2)]),
        DEFAULT_DEGREE_CAP,
    )
    .map_err(|e| e.to_string())?;
    let expected = IntLaurent::from_i64_terms(&[(1, 1), (0, -2)]);
    match ribbon {
        FoxMilnor::Passes { witness } if witness == expected => Ok(()),
        other => Err(format!("2t^2-5t+2: {other:?}")),
    }
}

fn infection() -> Check {
    let base = assemble_report(&t35(), &[], DEFAULT_DEGREE_CAP).map_err(|e| e.to_string())?;
    let decl = InfectionDecl {
        axes: 2,
        linking_numbers: vec![vec![0], vec![0]],
        double_points: 3,
        milnor_vanishing_length: Some(6),
        notes: String::new(),
    };
    let r = infection_transfer(&base, &decl).map_err(|e| e.to_string())?;
    ensure(r.lower == 4 && r.upper == Some(4) && r.exact, || {
        format!("lower {} upper {:?}", r.lower, r.upper)
    })?;
    let tags: Vec<&str> = r.assumptions.iter().map(|a| a.tag.as_str()).collect();
    ensure(
        tags.contains(&"immersed-discs") && tags.contains(&"milnor-invariants"),
        || format!("assumptions {tags:?}"),
    )
}

/// Exact (σ, nullity) at a rational sample of `(-2, 2)`.
fn exact_at(f: &SignatureFunction, x: i64, den: i64) -> (i64, usize) {
    let (s, n) = f.value_at(&CirclePoint::rational(ratio(x, den))).unwrap();
    (s.to_integer().expect("integral off breakpoints"), n)
}

fn oracle_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let den = 1 << 20;
    let mut compared = 0;
    for case in 0..100 {
        let v = random_matrix(&mut rng, 6, 3);
        let f = matrix_signature_function(&v).map_err(|e| e.to_string())?;
        let bps: Vec<f64> = f.breakpoints.iter().map(|b| b.point.approx()).collect();
        for _ in 0..20 {
            let k = rng.gen_range(-2 * den + 1..2 * den);
            let x = k as f64 / den as f64;
            if bps.iter().any(|b| (b - x).abs() <= 1e-3) {
                continue;
            }
            let exact = exact_at(&f, k, den);
            let approx = float_oracle(&v, (x / 2.0).acos());
            ensure(exact == approx, || {
                format!("case {case}, x = {x}: exact {exact:?}, oracle {approx:?}, V = {v:?}")
            })?;
            compared += 1;
        }
    }
    ensure(compared >= 1000, || {
        format!("only {compared} samples away from breakpoints")
    })
}

/// Compare `f(p)` with `expect` applied to the values of `others` at every probe point.
fn same_values(
    what: &str,
    f: &SignatureFunction,
    others: &[&SignatureFunction],
    expect: impl Fn(&[(i64, usize)]) -> (i64, usize),
    skip_nullity_at_two: bool,
) -> Check {
    let mut all = vec![f];
    all.extend_from_slice(others);
    for p in probe_points(&all) {
        let (s, n) = f.value_at(&p).map_err(|e| e.to_string())?;
        let parts: Vec<(i64, usize)> = others
            .iter()
            .map(|g| g.value_at(&p).map(|(s, n)| (s.twice(), n)))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let (es, en) = expect(&parts);
        let at_two = p == CirclePoint::from_int(2);
        ensure(s.twice() == es && (n == en || (skip_nullity_at_two && at_two)), || {
            format!(
                "{what} at x = {:.6}: got ({}, {n}), expected ({}, {en})",
                p.approx(),
                s.twice(),
                es
            )
        })?;
    }
    Ok(())
}

fn invariance_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for case in 0..50 {
        let a = random_knot(&mut rng, 4, 8);
        let b = random_knot(&mut rng, 4, 8);
        let fa = signature_function(&a).map_err(|e| e.to_string())?;
        let fb = signature_function(&b).map_err(|e| e.to_string())?;

        let sum = connected_sum(&a, &b).map_err(|e| e.to_string())?;
        let fs = signature_function(&sum).map_err(|e| e.to_string())?;
        same_values(
            &format!("connected sum {case}"),
            &fs,
            &[&fa, &fb],
            |p| (p[0].0 + p[1].0, p[0].1 + p[1].1),
            false,
        )?;

        let fm = signature_function(&mirror(&a)).map_err(|e| e.to_string())?;
        same_values(&format!("mirror {case}"), &fm, &[&fa], |p| (-p[0].0, p[0].1), false)?;

        let dir = if rng.gen_bool(0.5) {
            Direction::RowFirst
        } else {
            Direction::ColumnFirst
        };
        let xi: Vec<i64> = (0..a.size()).map(|_| rng.gen_range(-3..=3)).collect();
        let st = stabilize(&a, dir, &xi).map_err(|e| e.to_string())?;
        let da = alexander_from_seifert(&a);
        let ds = alexander_from_seifert(&st);
        ensure(da.equals_up_to_units(&ds), || {
            format!("stabilization {case}: alexander {da} became {ds}")
        })?;
        let fst = signature_function(&st).map_err(|e| e.to_string())?;
        ensure(
            fst.breakpoints.len() == fa.breakpoints.len() && fst.intervals.len() == fa.intervals.len(),
            || format!("stabilization {case}: breakpoint count changed"),
        )?;
        same_values(&format!("stabilization {case}"), &fst, &[&fa], |p| p[0], true)?;

        for (s, f) in [(&a, &fa), (&sum, &fs), (&st, &fst)] {
            averaged_is_mean(s, f).map_err(|e| format!("case {case}: {e}"))?;
        }
    }
    Ok(())
}

/// The value at each breakpoint is the mean of the float oracle on either side.
fn averaged_is_mean(s: &SeifertData, f: &SignatureFunction) -> Check {
    let bps: Vec<f64> = f.breakpoints.iter().map(|b| b.point.approx()).collect();
    let side = |i: usize| -> Result<i64, String> {
        let iv = &f.intervals[i];
        let x = rational_to_f64(&iv.sample);
        if bps.iter().all(|b| (b - x).abs() > 1e-3) {
            let (sigma, _) = float_oracle(s.matrix(), (x / 2.0).acos());
            ensure(sigma == iv.sigma, || {
                format!("interval {i}: exact {}, oracle {sigma}", iv.sigma)
            })?;
        }
        Ok(iv.sigma)
    };
    for (i, bp) in f.breakpoints.iter().enumerate() {
        let left = side(i)?;
        let right = side(i + 1)?;
        ensure(bp.averaged_sigma.twice() == left + right, || {
            format!(
                "breakpoint {i}: averaged {} but neighbours {left}, {right}",
                bp.averaged_sigma
            )
        })?;
    }
    Ok(())
}

fn nullity_range() -> Check {
    let catalog = Catalog::builtin();
    let mut inputs: Vec<SeifertData> = Vec::new();
    for e in &catalog.entries {
        inputs.push(e.seifert_data().map_err(|e| e.to_string())?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for _ in 0..100 {
        inputs.push(random_link(&mut rng, 5, 10));
    }
    for s in &inputs {
        let beta = link_nullity(s).map_err(|e| format!("{}: {e}", s.label()))?;
        ensure(beta < s.components(), || {
            format!("{}: beta {beta} with {} components", s.label(), s.components())
        })?;
    }
    let unlink = SeifertData::from_rows(&[vec![0]], 2, "unlink").unwrap();
    let hopf = SeifertData::from_rows(&[vec![1]], 2, "Hopf").unwrap();
    let (bu, bh) = (link_nullity(&unlink).unwrap(), link_nullity(&hopf).unwrap());
    ensure(bu == 1 && bh == 0, || format!("unlink beta {bu}, Hopf beta {bh}"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const INSTANT: Duration = Duration::from_secs(1);

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion {
            id: 1,
            name: "Alexander polynomial of T(3,5)",
            limit: Duration::from_secs(1),
            run: alexander_regression,
        },
        Criterion {
            id: 2,
            name: "max |sigma| of T(3,5)",
            limit: Duration::from_secs(5),
            run: signature_magnitude,
        },
        Criterion {
            id: 3,
            name: "exact bound for T(3,5)",
            limit: Duration::from_secs(5),
            run: exact_bound,
        },
        Criterion {
            id: 4,
            name: "width bound",
            limit: INSTANT,
            run: width_bound,
        },
        Criterion {
            id: 5,
            name: "band certificate",
            limit: INSTANT,
            run: band_certificate,
        },
        Criterion {
            id: 6,
            name: "Fox-Milnor test",
            limit: Duration::from_secs(10),
            run: fox_milnor,
        },
        Criterion {
            id: 7,
            name: "infection transfer",
            limit: INSTANT,
            run: infection,
        },
        Criterion {
            id: 8,
            name: "oracle equivalence",
            limit: Duration::from_secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 9,
            name: "invariance suite",
            limit: Duration::from_secs(120),
            run: invariance_suite,
        },
        Criterion {
            id: 10,
            name: "nullity range",
            limit: Duration::from_secs(2),
            run: nullity_range,
        },
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.limit {
            outcome = Err(format!("took {elapsed:.2?}, limit {:?}", c.limit));
        }
        match &outcome {
            Ok(()) => writeln!(err, "criterion {:>2} PASS  {} ({elapsed:.2?})", c.id, c.name).unwrap(),
            Err(msg) => {
                writeln!(err, "criterion {:>2} FAIL  {} ({elapsed:.2?}): {msg}", c.id, c.name).unwrap();
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

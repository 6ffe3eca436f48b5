//! End-to-end acceptance checks. Runs without the libtest harness so that
//! one PASS/FAIL line per criterion is always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use delannoy_core::bijections::{
    delta_map, pi_map, tau_domain, tau_inverse, tau_map, verify_delta, verify_pi, verify_tau,
};
use delannoy_core::conjectures::{check_conjecture1, check_conjecture2};
use delannoy_core::counting::{
    a_count, b_closed, b_dp, delannoy_count, expand_bivariate, h_closed, h_dp, schroeder_count,
    schroeder_rect_count, BivariatePoly, CountTable,
};
use delannoy_core::series::{assemble_triple, closed_k1, closed_k2, radical_identity_check_k1};
use delannoy_core::{count_bruteforce, enumerate_paths, PathFamily, Pattern, Step};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

/// Brute-force counts against the closed forms for `h`, `b`, `a` and Delannoy.
fn oracle_vs_formulas() -> Outcome {
    let mut checked = 0;
    for n in 0..=7 {
        for m in 0..=7 {
            let cases = [
                ("h", PathFamily::peak_valley_free(n, m), ok(h_closed(n, m))?),
                ("b", PathFamily::deep_valley_free(n, m), ok(b_closed(n, m))?),
                (
                    "a",
                    PathFamily::augmented_deep_valley_free(n, m),
                    ok(a_count(n, m))?,
                ),
                ("delannoy", PathFamily::new(n, m), ok(delannoy_count(n, m))?),
            ];
            for (name, family, formula) in cases {
                let brute = ok(count_bruteforce(&family))?;
                ensure(brute == formula, || {
                    format!("{name}({n}, {m}): brute force {brute}, formula {formula}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} counts agree for 0 <= n, m <= 7"))
}

fn recurrence_ranges() -> Outcome {
    let h = CountTable::h(12, 12);
    let b = CountTable::b(12, 12);
    let g = |t: &CountTable, n: i64, m: i64| BigInt::from(t.get(n, m));
    let rhs = |t: &CountTable, n: i64, m: i64| g(t, n - 1, m) + g(t, n, m - 1) - g(t, n - 2, m - 2);
    for n in 2..=12 {
        for m in 2..=12 {
            ensure(g(&h, n, m) == rhs(&h, n, m), || {
                format!("h recurrence fails inside its range at ({n}, {m})")
            })?;
        }
    }
    let (lhs11, rhs11) = (g(&h, 1, 1), rhs(&h, 1, 1));
    ensure(lhs11 == BigInt::from(1) && rhs11 == BigInt::from(2), || {
        format!("expected h(1, 1) = 1 against recurrence value 2, got {lhs11} vs {rhs11}")
    })?;
    for n in 0..=12 {
        for m in 0..=12 {
            if (n, m) != (0, 0) {
                ensure(g(&b, n, m) == rhs(&b, n, m), || {
                    format!("b recurrence fails at ({n}, {m})")
                })?;
            }
        }
    }
    Ok(format!(
        "h recurrence holds on 2 <= n, m <= 12 and fails at (1, 1) ({lhs11} vs {rhs11}); \
         b recurrence holds off the origin"
    ))
}

fn bijections() -> Outcome {
    let mut checks = 0;
    for n in 0..=6 {
        for m in 0..=6 {
            let reports = [
                ("pi", ok(verify_pi(n, m, None, None))?),
                ("delta", ok(verify_delta(n, m, None, None))?),
                ("tau", ok(verify_tau(n, m, None))?),
            ];
            for (name, r) in reports {
                // tau at n = 0 or m = 0 has an empty domain and codomain
                ensure(r.is_bijection(), || {
                    format!("{name} fails at ({n}, {m}): {r:?}")
                })?;
                checks += 1;
            }
            let north_east = PathFamily::new(n, m).avoiding([Pattern::diagonal()]);
            for p in ok(enumerate_paths(&north_east))? {
                let back = ok(pi_map(&p).and_then(|q| delta_map(&q)))?;
                ensure(back == p, || format!("delta(pi({p})) = {back}"))?;
            }
            let peak_free = PathFamily::new(n, m).avoiding([Pattern::peak()]);
            for q in ok(enumerate_paths(&peak_free))? {
                let back = ok(delta_map(&q).and_then(|p| pi_map(&p)))?;
                ensure(back == q, || format!("pi(delta({q})) = {back}"))?;
            }
            for p in ok(tau_domain(n, m, None))? {
                let back = ok(tau_map(&p).and_then(|q| tau_inverse(&q)))?;
                ensure(back == p, || format!("tau_inverse(tau({p})) = {back}"))?;
            }
            if n >= 1 && m >= 1 {
                for q in ok(enumerate_paths(&PathFamily::deep_valley_free(n - 1, m - 1)))? {
                    let back = ok(tau_inverse(&q).and_then(|p| tau_map(&p)))?;
                    ensure(back == q, || format!("tau(tau_inverse({q})) = {back}"))?;
                }
            }
        }
    }
    let en = ok(delannoy_core::LatticePath::parse(
        "EN",
        delannoy_core::Point::ORIGIN,
    ))?;
    ensure(ok(tau_map(&en))?.is_empty(), || {
        "tau(EN) is not empty".into()
    })?;
    for k in 1..=3u32 {
        for n in 0..=5i64 {
            for m in 0..=k as i64 * 5 {
                for (name, r) in [
                    ("pi", ok(verify_pi(n, m, Some(k), None))?),
                    ("delta", ok(verify_delta(n, m, Some(k), None))?),
                ] {
                    ensure(r.is_bijection(), || {
                        format!("{name} in y >= {k}x fails at ({n}, {m}): {r:?}")
                    })?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checks} bijection checks and all round trips, no counterexamples"
    ))
}

fn golden_values() -> Outcome {
    let expected: [(u32, &str, usize, &[i64]); 9] = [
        (1, "F", 0, &[1, 1, 2, 5, 13, 35, 97, 275]),
        (1, "FD", 1, &[1, 1, 2, 5, 13, 35, 97]),
        (1, "FE", 2, &[1, 3, 8, 22, 62, 178]),
        (2, "F", 0, &[1, 1, 3, 11, 44, 186, 818, 3706, 17182, 81136]),
        (2, "FD", 1, &[1, 2, 6, 22, 89, 381, 1694]),
        (2, "FE", 2, &[1, 5, 22, 97, 437, 2012]),
        (3, "F", 0, &[1, 1, 4, 20, 111, 657, 4065, 25981]),
        (3, "FD", 1, &[1, 3, 13, 67, 380, 2288, 14351]),
        (3, "FE", 2, &[1, 7, 44, 277, 1777, 11630]),
    ];
    for (k, name, offset, values) in expected {
        let triple = ok(assemble_triple(k, 12))?;
        let series = match name {
            "F" => &triple.f,
            "FD" => &triple.fd,
            _ => &triple.fe,
        };
        for i in 0..offset {
            ensure(series.coeff(i) == &BigInt::from(0), || {
                format!("{name}^({k}) has nonzero coefficient at x^{i}")
            })?;
        }
        for (i, v) in values.iter().enumerate() {
            let got = series.coeff(offset + i);
            ensure(got == &BigInt::from(*v), || {
                format!("{name}^({k}) at x^{}: got {got}, expected {v}", offset + i)
            })?;
        }
    }
    Ok("all nine printed prefixes reproduced".into())
}

fn closed_forms() -> Outcome {
    let t1 = ok(assemble_triple(1, 20))?;
    let t2 = ok(assemble_triple(2, 20))?;
    for n in 0..=20usize {
        let c1 = closed_k1(n as u64);
        ensure(
            &c1.f == t1.f.coeff(n) && &c1.fd == t1.fd.coeff(n) && &c1.fe == t1.fe.coeff(n),
            || format!("k = 1 sums differ from the series at n = {n}"),
        )?;
        let c2 = ok(closed_k2(n as u64))?;
        ensure(&c2.f == t2.f.coeff(n) && &c2.fd == t2.fd.coeff(n), || {
            format!("k = 2 sums differ from the series at n = {n}")
        })?;
    }
    Ok("k = 1 and k = 2 sums match the series for n <= 20".into())
}

fn series_vs_enumeration() -> Outcome {
    for k in 1..=3u32 {
        let triple = ok(assemble_triple(k, 7))?;
        for n in 0..=7usize {
            let family = PathFamily::peak_valley_free(n as i64, k as i64 * n as i64).in_region(k);
            let all = BigInt::from(ok(count_bruteforce(&family))?);
            let d = BigInt::from(ok(count_bruteforce(&family.clone().last(Step::D)))?);
            let e = BigInt::from(ok(count_bruteforce(&family.clone().last(Step::E)))?);
            ensure(&all == triple.f.coeff(n), || {
                format!("F k={k} n={n}: {all}")
            })?;
            ensure(&d == triple.fd.coeff(n), || format!("FD k={k} n={n}: {d}"))?;
            ensure(&e == triple.fe.coeff(n), || format!("FE k={k} n={n}: {e}"))?;
            let empty = BigInt::from(u8::from(n == 0));
            ensure(d + e + empty == all, || {
                format!("D/E split fails k={k} n={n}")
            })?;
        }
    }
    Ok("F, F_D, F_E match brute force for k <= 3, n <= 7".into())
}

fn region_formulas() -> Outcome {
    let mut zeros = 0;
    for k in 1..=3i64 {
        for n in 0..=6i64 {
            let square = ok(schroeder_count(n, k))?;
            let brute = ok(count_bruteforce(&PathFamily::schroeder(n, k as u32)))?;
            ensure(square == brute, || {
                format!("square corner n={n} k={k}: {square} vs {brute}")
            })?;
            for m in 0..=12i64 {
                let yj = ok(schroeder_rect_count(n, m, k))?;
                let brute = ok(count_bruteforce(&PathFamily::new(n, m).in_region(k as u32)))?;
                ensure(yj == brute, || {
                    format!("rectangle formula n={n} m={m} k={k}: {yj} vs {brute}")
                })?;
                if m < k * n {
                    ensure(yj == 0u32.into(), || {
                        format!("nonzero for m < kn at {n} {m} {k}")
                    })?;
                    zeros += 1;
                }
            }
        }
    }
    Ok(format!(
        "both formulas exact and integral, including {zeros} cases with m < kn"
    ))
}

fn bivariate() -> Outcome {
    let b = expand_bivariate(&BivariatePoly::one(), 12);
    let h = expand_bivariate(&BivariatePoly::one_minus_xy(), 12);
    for n in 0..=12 {
        for m in 0..=12 {
            let (ni, mi) = (n as i64, m as i64);
            ensure(b[n][m] == BigInt::from(ok(b_dp(ni, mi))?), || {
                format!("b at ({n}, {m})")
            })?;
            ensure(h[n][m] == BigInt::from(ok(h_dp(ni, mi))?), || {
                format!("h at ({n}, {m})")
            })?;
        }
    }
    Ok("numerators 1 and 1 - xy give b and h for n, m <= 12".into())
}

fn conjectures() -> Outcome {
    let c1 = ok(check_conjecture1(8))?;
    ensure(c1.verdict, || {
        format!("first conjecture differs: {:?}", c1.rows)
    })?;
    let c2 = ok(check_conjecture2(8))?;
    ensure(c2.verdict, || {
        format!("second conjecture differs: {:?}", c2.rows)
    })?;
    let fd2 = ok(assemble_triple(2, 8))?.fd;
    for row in &c2.rows {
        ensure(&BigInt::from(row.rhs.clone()) == fd2.coeff(row.n), || {
            format!(
                "inversion count {} differs from F_D at n = {}",
                row.rhs, row.n
            )
        })?;
    }
    let last = |r: &delannoy_core::conjectures::ConjectureReport| {
        r.rows.last().map(|x| x.lhs.to_string()).unwrap_or_default()
    };
    Ok(format!(
        "both agree for n <= 8 (n = 8: {} and {})",
        last(&c1),
        last(&c2)
    ))
}

fn radical_identity() -> Outcome {
    let r = ok(radical_identity_check_k1(20))?;
    ensure(r.holds, || {
        format!("fails at coefficient {:?}", r.first_failure)
    })?;
    Ok("holds to order 20".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "oracle vs formulas",
            limit: Some(Duration::from_secs(30)),
            run: oracle_vs_formulas,
        },
        Criterion {
            id: 2,
            name: "recurrence ranges",
            limit: None,
            run: recurrence_ranges,
        },
        Criterion {
            id: 3,
            name: "bijections",
            limit: Some(Duration::from_secs(60)),
            run: bijections,
        },
        Criterion {
            id: 4,
            name: "series golden values",
            limit: None,
            run: golden_values,
        },
        Criterion {
            id: 5,
            name: "closed forms vs series",
            limit: Some(Duration::from_secs(5)),
            run: closed_forms,
        },
        Criterion {
            id: 6,
            name: "series vs enumeration",
            limit: None,
            run: series_vs_enumeration,
        },
        Criterion {
            id: 7,
            name: "region formulas",
            limit: None,
            run: region_formulas,
        },
        Criterion {
            id: 8,
            name: "bivariate expansion",
            limit: None,
            run: bivariate,
        },
        Criterion {
            id: 9,
            name: "conjecture harness",
            limit: Some(Duration::from_secs(120)),
            run: conjectures,
        },
        Criterion {
            id: 10,
            name: "radical identity",
            limit: None,
            run: radical_identity,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let started = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = started.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {} ({elapsed:.2?}): {detail}",
                c.id, c.name
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {} ({elapsed:.2?}): {detail}",
                    c.id, c.name
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

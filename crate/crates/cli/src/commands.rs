use std::collections::BTreeMap;
use std::fmt::Write as _;

use delannoy_core::bijections::{
    delta_map, describe, pi_map, tau_inverse, tau_map, verify_delta, verify_pi, verify_tau,
    BijectionReport,
};
use delannoy_core::conjectures::{
    check_conjecture1_with_budget, check_conjecture2_with_budget, ConjectureReport,
};
use delannoy_core::counting::{
    a_count, b_closed, b_dp, delannoy_count, delannoy_dp, expand_bivariate, h_closed, h_dp,
    schroeder_count, schroeder_rect_count, BivariatePoly, CountTable,
};
use delannoy_core::family::{count_bruteforce_with_budget, PathFamily};
use delannoy_core::series::{assemble_triple, closed_k1, closed_k2, PowerSeries};
use delannoy_core::{ConjectureError, CountError, LatticePath, PathError, Pattern, Point, Step};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use crate::cli::{
    BfileArgs, ConjectureArgs, ConjectureKind, CountArgs, EnumArgs, Family, MapArgs, MapKind,
    Method, Sequence, SeriesArgs, VerifyArgs, VerifyTarget, Which,
};
use crate::output::{usage, CliError, Report};

fn count_error(e: CountError) -> CliError {
    match e {
        CountError::Inconsistent(_) | CountError::NonIntegral { .. } => {
            CliError::Mismatch(e.to_string())
        }
        _ => usage(e),
    }
}

fn path_error(e: PathError) -> CliError {
    match e {
        PathError::BudgetExceeded(b) => CliError::Usage(format!(
            "enumeration budget of {b} visited prefixes exceeded; use smaller bounds or raise --budget"
        )),
        other => usage(other),
    }
}

fn conjecture_error(e: ConjectureError) -> CliError {
    match e {
        ConjectureError::Path(p) => path_error(p),
        other => usage(other),
    }
}

fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

fn signed(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn natural(name: &str, v: i64) -> Result<i64, CliError> {
    if v < 0 {
        return Err(CliError::Usage(format!(
            "{name} must be nonnegative, got {v}"
        )));
    }
    Ok(v)
}

pub fn count(args: &CountArgs, budget: u64) -> Result<Report, CliError> {
    let (n, m) = match (args.family, args.params.as_slice()) {
        (Family::Schroeder, [n]) => (*n, args.k * *n),
        (Family::Schroeder, _) => {
            return Err(usage("schroeder takes one parameter n (use --k for k)"))
        }
        (_, [n, m]) => (*n, *m),
        (f, _) => return Err(CliError::Usage(format!("{f:?} takes two parameters n m"))),
    };
    natural("n", n)?;
    natural("m", m)?;
    let schroeder_like = matches!(args.family, Family::Schroeder | Family::SchroederRect);
    if schroeder_like && args.k < 1 {
        return Err(CliError::Usage(format!(
            "--k must be at least 1, got {}",
            args.k
        )));
    }
    let k = u32::try_from(args.k).unwrap_or(u32::MAX);

    let methods: Vec<Method> = match args.method {
        Method::All => vec![Method::Dp, Method::Closed, Method::Bruteforce],
        one => vec![one],
    };
    let mut values: BTreeMap<Method, BigUint> = BTreeMap::new();
    for method in methods {
        let mut v = match method {
            Method::Dp => count_dp(args.family, n, m, k)?,
            Method::Closed => count_closed(args.family, n, m, args.k)?,
            Method::Bruteforce => {
                count_bruteforce_with_budget(&family_for(args.family, n, m, k), budget)
                    .map_err(path_error)?
            }
            Method::All => unreachable!("expanded above"),
        };
        if args.corrupt == Some(method) {
            v += 1u32;
        }
        values.insert(method, v);
    }

    let first = values.values().next().cloned().unwrap_or_default();
    let agree = values.values().all(|v| *v == first);
    let name = |m: &Method| match m {
        Method::Dp => "dp",
        Method::Closed => "closed",
        Method::Bruteforce => "bruteforce",
        Method::All => "all",
    };
    let mut text = first.to_string();
    if values.len() > 1 {
        for (m, v) in &values {
            let _ = write!(text, "\n  {}: {v}", name(m));
        }
        text.push_str(if agree {
            "\nall methods agree"
        } else {
            "\nMETHODS DISAGREE"
        });
    }
    let methods_json: serde_json::Map<String, Value> = values
        .iter()
        .map(|(m, v)| (name(m).to_string(), big(v)))
        .collect();

    let mut report = Report::default()
        .param("family", format!("{:?}", args.family).to_lowercase())
        .param("n", n)
        .param("m", m);
    if schroeder_like {
        report = report.param("k", args.k);
    }
    report = report.param("method", name(&args.method));
    report.result = json!({ "value": big(&first), "methods": methods_json, "agree": agree });
    report.text = text;
    if !agree {
        report.mismatch = Some("count methods disagree".into());
    }
    Ok(report)
}

fn count_dp(family: Family, n: i64, m: i64, k: u32) -> Result<BigUint, CliError> {
    Ok(match family {
        Family::Delannoy => delannoy_dp(n, m).map_err(count_error)?,
        Family::H => h_dp(n, m).map_err(count_error)?,
        Family::B => b_dp(n, m).map_err(count_error)?,
        Family::A => {
            let order = n.max(m) as usize;
            let c =
                &expand_bivariate(&BivariatePoly::one_minus_xy(), order)[n as usize][m as usize];
            c.to_biguint()
                .ok_or_else(|| CliError::Mismatch(format!("negative coefficient {c}")))?
        }
        Family::Schroeder | Family::SchroederRect => {
            CountTable::region(n as usize, m as usize, k).get(n, m)
        }
    })
}

fn count_closed(family: Family, n: i64, m: i64, k: i64) -> Result<BigUint, CliError> {
    match family {
        Family::Delannoy => delannoy_count(n, m),
        Family::H => h_closed(n, m),
        Family::B => b_closed(n, m),
        Family::A => a_count(n, m),
        Family::Schroeder => schroeder_count(n, k),
        Family::SchroederRect => schroeder_rect_count(n, m, k),
    }
    .map_err(count_error)
}

fn family_for(family: Family, n: i64, m: i64, k: u32) -> PathFamily {
    match family {
        Family::Delannoy => PathFamily::new(n, m),
        Family::H => PathFamily::peak_valley_free(n, m),
        Family::B => PathFamily::deep_valley_free(n, m),
        Family::A => PathFamily::augmented_deep_valley_free(n, m),
        Family::Schroeder | Family::SchroederRect => PathFamily::new(n, m).in_region(k),
    }
}

fn parse_step(flag: &str, s: &Option<String>) -> Result<Option<Step>, CliError> {
    s.as_deref()
        .map(|s| {
            s.parse::<Step>()
                .map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
        })
        .transpose()
}

pub fn enumerate(args: &EnumArgs, budget: u64) -> Result<Report, CliError> {
    let (n, m) = (args.target[0], args.target[1]);
    let forbidden =
        Pattern::parse_list(&args.avoid).map_err(|e| CliError::Usage(format!("--avoid: {e}")))?;
    let forbidden_aug = Pattern::parse_list(&args.avoid_aug)
        .map_err(|e| CliError::Usage(format!("--avoid-aug: {e}")))?;
    let mut family = PathFamily::new(n, m)
        .avoiding(forbidden.clone())
        .avoiding_aug(forbidden_aug.clone());
    family.region_k = args.region;
    family.first_step = parse_step("first", &args.first)?;
    family.last_step = parse_step("last", &args.last)?;

    let paths = family
        .paths_with_budget(budget)
        .map_err(path_error)?
        .try_collect()
        .map_err(path_error)?;
    let words: Vec<String> = paths.iter().map(LatticePath::to_string).collect();

    let list = |ps: &[Pattern]| Value::from(ps.iter().map(ToString::to_string).collect::<Vec<_>>());
    let mut report = Report::default()
        .param("target", vec![n, m])
        .param("avoid", list(&forbidden))
        .param("avoid_aug", list(&forbidden_aug))
        .param("region", args.region)
        .param("first", args.first.clone())
        .param("last", args.last.clone());
    report.result = json!({ "count": words.len(), "paths": words });
    report.text = words.iter().map(|w| format!("{w}\n")).collect();
    Ok(report)
}

pub fn map(args: &MapArgs) -> Result<Report, CliError> {
    let path = LatticePath::parse(&args.word, Point::ORIGIN).map_err(usage)?;
    let (name, image) = match args.map {
        MapKind::Pi => ("pi", pi_map(&path)),
        MapKind::Delta => ("delta", delta_map(&path)),
        MapKind::Tau => ("tau", tau_map(&path)),
        MapKind::TauInv => ("tau-inv", tau_inverse(&path)),
    };
    let image = image.map_err(usage)?;
    let mut report = Report::default()
        .param("map", name)
        .param("word", args.word.clone());
    report.result = json!({ "image": image.to_string(), "end": [image.end().x, image.end().y] });
    report.text = format!("{image}\n");
    Ok(report)
}

fn coeffs(s: &PowerSeries) -> Vec<Value> {
    s.coeffs().iter().map(signed).collect()
}

fn coeff_text(s: &PowerSeries) -> String {
    s.to_string()
}

pub fn series(args: &SeriesArgs) -> Result<Report, CliError> {
    if args.k == 0 {
        return Err(usage("--k must be at least 1"));
    }
    if args.check_closed && args.k >= 3 {
        return Err(CliError::Usage(format!(
            "--check-closed: no closed form available for k = {}",
            args.k
        )));
    }
    let triple =
        assemble_triple(args.k, args.order).map_err(|e| CliError::Mismatch(e.to_string()))?;
    let selected: Vec<(&str, &PowerSeries)> = match args.which {
        Which::F => vec![("F", &triple.f)],
        Which::Fd => vec![("FD", &triple.fd)],
        Which::Fe => vec![("FE", &triple.fe)],
        Which::All => vec![("F", &triple.f), ("FD", &triple.fd), ("FE", &triple.fe)],
    };
    let mut text = if selected.len() == 1 {
        coeff_text(selected[0].1)
    } else {
        selected
            .iter()
            .map(|(name, s)| format!("{name}: {}", coeff_text(s)))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let mut result = serde_json::Map::new();
    for (name, s) in &selected {
        result.insert(name.to_string(), Value::from(coeffs(s)));
    }

    let mut mismatch = None;
    if args.check_closed {
        let mut failures = Vec::new();
        for n in 0..=args.order {
            let mut check = |name: &str, closed: &BigInt, series: &BigInt| {
                if closed != series {
                    failures.push(format!("{name}[{n}]: closed {closed} vs series {series}"));
                }
            };
            if args.k == 1 {
                let c = closed_k1(n as u64);
                check("F", &c.f, triple.f.coeff(n));
                check("FD", &c.fd, triple.fd.coeff(n));
                check("FE", &c.fe, triple.fe.coeff(n));
            } else {
                let c = closed_k2(n as u64).map_err(|e| CliError::Mismatch(e.to_string()))?;
                check("F", &c.f, triple.f.coeff(n));
                check("FD", &c.fd, triple.fd.coeff(n));
            }
        }
        result.insert(
            "closed_check".into(),
            json!({ "passed": failures.is_empty(), "failures": failures }),
        );
        if failures.is_empty() {
            text.push_str("\nclosed-form check passed");
        } else {
            text.push_str("\nclosed-form check FAILED");
            mismatch = Some(failures.join("; "));
        }
    }

    let which = match args.which {
        Which::F => "F",
        Which::Fd => "FD",
        Which::Fe => "FE",
        Which::All => "all",
    };
    let mut report = Report::default()
        .param("k", args.k)
        .param("order", args.order)
        .param("which", which)
        .param("check_closed", args.check_closed);
    report.result = Value::Object(result);
    report.text = text;
    report.mismatch = mismatch;
    Ok(report)
}

struct VerifyRow {
    map: &'static str,
    n: u32,
    m: u32,
    report: BijectionReport,
}

pub fn verify(args: &VerifyArgs, budget: u64) -> Result<Report, CliError> {
    if args.k == Some(0) {
        return Err(usage("--k must be at least 1"));
    }
    let max_m = args
        .max_m
        .unwrap_or_else(|| args.k.unwrap_or(1).saturating_mul(args.max_n));
    let maps: &[&'static str] = match args.target {
        VerifyTarget::Pi => &["pi"],
        VerifyTarget::Delta => &["delta"],
        VerifyTarget::Tau => &["tau"],
        VerifyTarget::All => &["pi", "delta", "tau"],
    };
    let mut rows = Vec::new();
    for &map in maps {
        for n in 0..=args.max_n {
            for m in 0..=max_m {
                let (ni, mi) = (i64::from(n), i64::from(m));
                let report = match map {
                    "pi" => verify_pi(ni, mi, args.k, Some(budget)),
                    "delta" => verify_delta(ni, mi, args.k, Some(budget)),
                    _ => verify_tau(ni, mi, Some(budget)),
                }
                .map_err(path_error)?;
                rows.push(VerifyRow { map, n, m, report });
            }
        }
    }

    let mut text = String::new();
    let mut failed = Vec::new();
    for &map in maps {
        let mine: Vec<&VerifyRow> = rows.iter().filter(|r| r.map == map).collect();
        let paths: BigUint = mine.iter().map(|r| r.report.domain_size.clone()).sum();
        let bad: Vec<&&VerifyRow> = mine.iter().filter(|r| !r.report.is_bijection()).collect();
        let region = match (map, args.k) {
            ("tau", _) | (_, None) => String::new(),
            (_, Some(k)) => format!(" in y >= {k}x"),
        };
        if bad.is_empty() {
            let _ = writeln!(
                text,
                "{map}: bijection verified{region} for 0 <= n <= {}, 0 <= m <= {max_m} ({} endpoints, {paths} paths)",
                args.max_n,
                mine.len()
            );
        } else {
            for r in bad {
                failed.push(format!("{map}({}, {})", r.n, r.m));
                let _ = writeln!(text, "{map}: FAILED at ({}, {})", r.n, r.m);
                for line in describe(&r.report) {
                    let _ = writeln!(text, "    {line}");
                }
            }
        }
    }

    let results: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "map": r.map,
                "n": r.n,
                "m": r.m,
                "domain_size": big(&r.report.domain_size),
                "codomain_size": big(&r.report.codomain_size),
                "injective": r.report.injective,
                "surjective": r.report.surjective,
                "counterexamples": describe(&r.report),
            })
        })
        .collect();
    let target = match args.target {
        VerifyTarget::Pi => "pi",
        VerifyTarget::Delta => "delta",
        VerifyTarget::Tau => "tau",
        VerifyTarget::All => "all",
    };
    let mut report = Report::default()
        .param("target", target)
        .param("max_n", args.max_n)
        .param("max_m", max_m)
        .param("k", args.k);
    report.result = json!({ "verified": failed.is_empty(), "checks": results });
    report.text = text.trim_end().to_string();
    if !failed.is_empty() {
        report.mismatch = Some(format!("bijection checks failed: {}", failed.join(", ")));
    }
    Ok(report)
}

pub fn conjecture(args: &ConjectureArgs, budget: u64) -> Result<Report, CliError> {
    if args.max_n < 1 {
        return Err(usage("--max-n must be at least 1"));
    }
    let (which, report): (u8, ConjectureReport) = match args.which {
        ConjectureKind::One => (
            1,
            check_conjecture1_with_budget(args.max_n, Some(budget)).map_err(conjecture_error)?,
        ),
        ConjectureKind::Two => (
            2,
            check_conjecture2_with_budget(args.max_n, Some(budget)).map_err(conjecture_error)?,
        ),
    };
    let mut text = String::from("n lhs rhs\n");
    for r in &report.rows {
        let _ = writeln!(text, "{} {} {}", r.n, r.lhs, r.rhs);
    }
    text.push_str(if report.verdict {
        "verdict: equal"
    } else {
        "verdict: DIFFERENT"
    });
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| json!({ "n": r.n, "lhs": big(&r.lhs), "rhs": big(&r.rhs) }))
        .collect();
    let mut out = Report::default()
        .param("which", which)
        .param("max_n", args.max_n);
    out.result = json!({ "rows": rows, "verdict": report.verdict });
    out.text = text;
    if !report.verdict {
        out.mismatch = Some(format!("conjecture {which} counts differ"));
    }
    Ok(out)
}

/// Terms `(index, value)` of a b-file sequence; the index is the exponent
/// of `x` (or `n` for `h(n, n)`), starting at the first nonzero term.
pub fn bfile_terms(sequence: Sequence, order: usize) -> Result<Vec<(usize, BigInt)>, CliError> {
    let mismatch = |e: delannoy_core::SeriesError| CliError::Mismatch(e.to_string());
    let (series, offset) = match sequence {
        Sequence::HDiag => {
            let t = CountTable::h(order, order);
            return Ok((0..=order)
                .map(|n| (n, BigInt::from(t.get(n as i64, n as i64))))
                .collect());
        }
        Sequence::F1 => (assemble_triple(1, order).map_err(mismatch)?.f, 0),
        Sequence::Fd2 => (assemble_triple(2, order).map_err(mismatch)?.fd, 1),
        Sequence::Fe1 => (assemble_triple(1, order).map_err(mismatch)?.fe, 2),
        Sequence::Fd3 => (assemble_triple(3, order).map_err(mismatch)?.fd, 1),
    };
    Ok((offset..=order)
        .map(|n| (n, series.coeff(n).clone()))
        .collect())
}

pub fn bfile(args: &BfileArgs) -> Result<Report, CliError> {
    let terms = bfile_terms(args.sequence, args.order)?;
    let name = match args.sequence {
        Sequence::HDiag => "h-diag",
        Sequence::F1 => "F1",
        Sequence::Fd2 => "FD2",
        Sequence::Fe1 => "FE1",
        Sequence::Fd3 => "FD3",
    };
    let mut text = String::new();
    for (n, v) in &terms {
        let _ = writeln!(text, "{n} {v}");
    }
    let mut report = Report::default()
        .param("sequence", name)
        .param("order", args.order);
    report.result = json!({
        "terms": terms.iter().map(|(n, v)| json!([n, signed(v)])).collect::<Vec<_>>()
    });
    report.text = text;
    Ok(report)
}

//! The peak/diagonal maps `pi` and `delta`, the map `tau` that removes one
//! unit from both coordinates of a deep-valley-free path, and an exhaustive
//! bijectivity verifier.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{MapError, PathError};
use crate::family::PathFamily;
use crate::path::{word_to_string, LatticePath, Pattern, Step};

fn violation(map: &'static str, condition: &'static str, path: &LatticePath) -> MapError {
    MapError::Precondition {
        map,
        condition,
        input: path.to_string(),
    }
}

/// Replaces every peak `NE` of a North-East path by `D`.
///
/// Peaks never overlap, so a single left-to-right scan realises the
/// simultaneous replacement.
pub fn pi_map(path: &LatticePath) -> Result<LatticePath, MapError> {
    if path.count_step(Step::D) > 0 {
        return Err(violation("pi", "input must not contain D", path));
    }
    let word = path.word();
    let mut out = Vec::with_capacity(word.len());
    let mut i = 0;
    while i < word.len() {
        if word[i] == Step::N && word.get(i + 1) == Some(&Step::E) {
            out.push(Step::D);
            i += 2;
        } else {
            out.push(word[i]);
            i += 1;
        }
    }
    Ok(LatticePath::new(path.start(), out))
}

/// Replaces every `D` of a peak-free path by the peak `NE`.
pub fn delta_map(path: &LatticePath) -> Result<LatticePath, MapError> {
    if path.contains(&Pattern::peak()) {
        return Err(violation(
            "delta",
            "input must not contain the factor NE",
            path,
        ));
    }
    let mut out = Vec::with_capacity(path.len() + path.count_step(Step::D));
    for &s in path.word() {
        match s {
            Step::D => out.extend([Step::N, Step::E]),
            other => out.push(other),
        }
    }
    Ok(LatticePath::new(path.start(), out))
}

fn is_deep_valley_free(path: &LatticePath) -> bool {
    path.count_step(Step::D) == 0 && !path.contains(&Pattern::deep_valley())
}

const ENN: [Step; 3] = [Step::E, Step::N, Step::N];
const EEN: [Step; 3] = [Step::E, Step::E, Step::N];

/// Maps a deep-valley-free North-East path whose augmented path does contain
/// a deep valley to a deep-valley-free path ending one unit lower and one
/// unit further west.
///
/// Such a word starts with `ENN`, ends with `EEN`, or is exactly `EN`:
/// * `ENN.b -> N.b`, which also covers words with both ends;
/// * `a.EEN -> E.a`;
/// * `EN -> ` the empty word.
pub fn tau_map(path: &LatticePath) -> Result<LatticePath, MapError> {
    if !is_deep_valley_free(path) {
        return Err(violation("tau", "input must avoid D and EENN", path));
    }
    let word = path.word();
    let image = if word.starts_with(&ENN) {
        word[2..].to_vec()
    } else if word.ends_with(&EEN) {
        let mut out = Vec::with_capacity(word.len() - 2);
        out.push(Step::E);
        out.extend_from_slice(&word[..word.len() - 3]);
        out
    } else if word == [Step::E, Step::N] {
        Vec::new()
    } else {
        return Err(violation(
            "tau",
            "augmented input must contain EENN (start with ENN, end with EEN, or equal EN)",
            path,
        ));
    };
    Ok(LatticePath::new(path.start(), image))
}

/// Inverse of [`tau_map`] on deep-valley-free North-East paths.
pub fn tau_inverse(path: &LatticePath) -> Result<LatticePath, MapError> {
    if !is_deep_valley_free(path) {
        return Err(violation(
            "tau-inverse",
            "input must avoid D and EENN",
            path,
        ));
    }
    let word = path.word();
    let image = match word.first() {
        None => vec![Step::E, Step::N],
        Some(Step::E) => {
            let mut out = word[1..].to_vec();
            out.extend(EEN);
            out
        }
        Some(_) => {
            let mut out = vec![Step::E, Step::N];
            out.extend_from_slice(word);
            out
        }
    };
    Ok(LatticePath::new(path.start(), image))
}

/// Why a domain element was reported by the verifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureKind {
    /// The map refused the input.
    MapRejected(MapError),
    /// The image does not belong to the codomain.
    OutsideCodomain,
    /// The image was already produced by an earlier input.
    Collision,
    /// A codomain element that no input reaches.
    Unreached,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The domain element, or the unreached codomain element.
    pub path: LatticePath,
    pub image: Option<LatticePath>,
    pub kind: FailureKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub domain_size: BigUint,
    pub codomain_size: BigUint,
    pub injective: bool,
    pub surjective: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl BijectionReport {
    pub fn is_bijection(&self) -> bool {
        self.injective
            && self.surjective
            && self.domain_size == self.codomain_size
            && self.counterexamples.is_empty()
    }
}

/// Witnesses kept per report.
const MAX_WITNESSES: usize = 16;

/// Checks that `map` sends every path of `domain` into `codomain`,
/// injectively and onto.
pub fn verify_bijection<F>(
    domain: &PathFamily,
    map: F,
    codomain: &PathFamily,
) -> Result<BijectionReport, PathError>
where
    F: Fn(&LatticePath) -> Result<LatticePath, MapError>,
{
    verify_bijection_with_budget(domain, map, codomain, None)
}

/// As [`verify_bijection`], with an optional cap on visited prefixes per
/// enumeration.
pub fn verify_bijection_with_budget<F>(
    domain: &PathFamily,
    map: F,
    codomain: &PathFamily,
    budget: Option<u64>,
) -> Result<BijectionReport, PathError>
where
    F: Fn(&LatticePath) -> Result<LatticePath, MapError>,
{
    let paths = collect(domain, budget)?;
    verify_mapping(paths, map, codomain, budget)
}

fn collect(family: &PathFamily, budget: Option<u64>) -> Result<Vec<LatticePath>, PathError> {
    match budget {
        Some(b) => family.paths_with_budget(b)?.try_collect(),
        None => Ok(family.paths()?.collect()),
    }
}

/// Verifies a map on an explicit domain, for domains that are not a single
/// family (such as a set difference).
pub fn verify_mapping<F>(
    domain: impl IntoIterator<Item = LatticePath>,
    map: F,
    codomain: &PathFamily,
    budget: Option<u64>,
) -> Result<BijectionReport, PathError>
where
    F: Fn(&LatticePath) -> Result<LatticePath, MapError>,
{
    let mut failures: Vec<Counterexample> = Vec::new();
    let mut images = BTreeSet::new();
    let mut domain_size = 0u64;
    let mut injective = true;
    for path in domain {
        domain_size += 1;
        match map(&path) {
            Err(e) => {
                failures.push(Counterexample {
                    path,
                    image: None,
                    kind: FailureKind::MapRejected(e),
                });
            }
            Ok(image) => {
                if !codomain.contains(&image) {
                    failures.push(Counterexample {
                        path,
                        image: Some(image),
                        kind: FailureKind::OutsideCodomain,
                    });
                } else if !images.insert(image.clone()) {
                    injective = false;
                    failures.push(Counterexample {
                        path,
                        image: Some(image),
                        kind: FailureKind::Collision,
                    });
                }
            }
        }
    }
    let target = collect(codomain, budget)?;
    let codomain_size = target.len();
    let mut surjective = true;
    for path in target {
        if !images.contains(&path) {
            surjective = false;
            failures.push(Counterexample {
                path,
                image: None,
                kind: FailureKind::Unreached,
            });
        }
    }
    failures.truncate(MAX_WITNESSES);
    Ok(BijectionReport {
        domain_size: domain_size.into(),
        codomain_size: codomain_size.into(),
        injective,
        surjective,
        counterexamples: failures,
    })
}

/// The domain of `tau` at `(n, m)`: deep-valley-free North-East paths whose
/// augmented path has a deep valley.
pub fn tau_domain(n: i64, m: i64, budget: Option<u64>) -> Result<Vec<LatticePath>, PathError> {
    let excluded = PathFamily::augmented_deep_valley_free(n, m);
    Ok(collect(&PathFamily::deep_valley_free(n, m), budget)?
        .into_iter()
        .filter(|p| !excluded.contains(p))
        .collect())
}

/// `pi` from the augmented-deep-valley-free family onto the peak- and
/// valley-free family at `(n, m)`, optionally restricted to `y >= k x`.
pub fn verify_pi(
    n: i64,
    m: i64,
    k: Option<u32>,
    budget: Option<u64>,
) -> Result<BijectionReport, PathError> {
    let (domain, codomain) = pi_delta_families(n, m, k);
    verify_bijection_with_budget(&domain, pi_map, &codomain, budget)
}

/// `delta` in the opposite direction of [`verify_pi`].
pub fn verify_delta(
    n: i64,
    m: i64,
    k: Option<u32>,
    budget: Option<u64>,
) -> Result<BijectionReport, PathError> {
    let (codomain, domain) = pi_delta_families(n, m, k);
    verify_bijection_with_budget(&domain, delta_map, &codomain, budget)
}

/// `tau` onto the deep-valley-free family at `(n - 1, m - 1)`.
pub fn verify_tau(n: i64, m: i64, budget: Option<u64>) -> Result<BijectionReport, PathError> {
    let domain = tau_domain(n, m, budget)?;
    let codomain = PathFamily::deep_valley_free(n - 1, m - 1);
    if n == 0 || m == 0 {
        // the codomain has a negative coordinate and is empty
        return Ok(BijectionReport {
            domain_size: domain.len().into(),
            codomain_size: BigUint::default(),
            injective: true,
            surjective: true,
            counterexamples: domain
                .into_iter()
                .map(|path| Counterexample {
                    path,
                    image: None,
                    kind: FailureKind::OutsideCodomain,
                })
                .collect(),
        });
    }
    verify_mapping(domain, tau_map, &codomain, budget)
}

fn pi_delta_families(n: i64, m: i64, k: Option<u32>) -> (PathFamily, PathFamily) {
    let mut aug = PathFamily::augmented_deep_valley_free(n, m);
    let mut free = PathFamily::peak_valley_free(n, m);
    if let Some(k) = k {
        aug = aug.in_region(k);
        free = free.in_region(k);
    }
    (aug, free)
}

/// Renders witnesses as `input -> image (reason)` lines.
pub fn describe(report: &BijectionReport) -> Vec<String> {
    report
        .counterexamples
        .iter()
        .map(|c| {
            let image = c
                .image
                .as_ref()
                .map(|p| word_to_string(p.word()))
                .unwrap_or_else(|| "-".into());
            let reason = match &c.kind {
                FailureKind::MapRejected(e) => e.to_string(),
                FailureKind::OutsideCodomain => "image outside codomain".into(),
                FailureKind::Collision => "image already produced".into(),
                FailureKind::Unreached => "codomain element not reached".into(),
            };
            format!("{:?} -> {:?} ({reason})", c.path.to_string(), image)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(text: &str) -> LatticePath {
        text.parse().unwrap()
    }

    fn show(r: Result<LatticePath, MapError>) -> String {
        r.unwrap().to_string()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(show(pi_map(&path("ENNEENNNENEEN"))), "ENDENNDDEN");
        assert_eq!(show(pi_map(&path("NE"))), "D");
        assert_eq!(show(pi_map(&path("NNEE"))), "NDE");
        assert!(pi_map(&path("ND")).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(show(delta_map(&path("ENDENNDDEN"))), "ENNEENNNENEEN");
        assert_eq!(show(delta_map(&path("D"))), "NE");
        assert_eq!(show(delta_map(&path("EDN"))), "ENEN");
        assert!(delta_map(&path("ENE")).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(show(tau_map(&path("ENNEEN"))), "NEEN");
        assert_eq!(show(tau_map(&path("EEN"))), "E");
        assert_eq!(show(tau_map(&path("EN"))), "");
        // starts with ENN only
        assert_eq!(show(tau_map(&path("ENNE"))), "NE");
        assert!(tau_map(&path("NE")).is_err());
        assert!(tau_map(&path("EENN")).is_err());
        assert!(tau_map(&path("ED")).is_err());
    }

    #[test]
    fn tau_inverse_examples() {
        assert_eq!(show(tau_inverse(&path("NEEN"))), "ENNEEN");
        assert_eq!(show(tau_inverse(&path("E"))), "EEN");
        assert_eq!(show(tau_inverse(&path(""))), "EN");
        assert!(tau_inverse(&path("EENN")).is_err());
        assert!(tau_inverse(&path("D")).is_err());
    }

    #[test]
    fn maps_preserve_start() {
        let p = LatticePath::parse("NNEE", crate::path::Point::new(2, 5)).unwrap();
        assert_eq!(pi_map(&p).unwrap().start(), p.start());
        let q = LatticePath::parse("ENNE", crate::path::Point::new(-1, 3)).unwrap();
        assert_eq!(tau_map(&q).unwrap().start(), q.start());
    }

    #[test]
    fn verifier_reports_success_and_failure() {
        let r = verify_pi(3, 3, None, None).unwrap();
        assert!(r.is_bijection(), "{:?}", describe(&r));
        assert_eq!(r.domain_size, BigUint::from(h(3, 3)));

        // identity is not a map from the augmented family onto peak-free paths
        let (domain, codomain) = pi_delta_families(2, 2, None);
        let r = verify_bijection(&domain, |p| Ok(p.clone()), &codomain).unwrap();
        assert!(!r.is_bijection());
        assert!(!r.counterexamples.is_empty());
        assert!(r
            .counterexamples
            .iter()
            .any(|c| c.kind == FailureKind::OutsideCodomain));

        // a constant map collides
        let all = PathFamily::new(1, 1);
        let r = verify_bijection(&all, |_| Ok(path("D")), &all).unwrap();
        assert!(!r.injective && !r.surjective);
        assert!(r
            .counterexamples
            .iter()
            .any(|c| c.kind == FailureKind::Collision));
        assert!(r
            .counterexamples
            .iter()
            .any(|c| c.kind == FailureKind::Unreached));
    }

    fn h(n: i64, m: i64) -> u64 {
        crate::counting::h_dp(n, m).unwrap().try_into().unwrap()
    }

    #[test]
    fn tau_degenerate_case() {
        let r = verify_tau(1, 1, None).unwrap();
        assert!(r.is_bijection());
        assert_eq!(r.domain_size, BigUint::from(1u32));
        assert!(verify_tau(0, 3, None).unwrap().is_bijection());
    }
}

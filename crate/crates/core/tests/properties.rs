use std::collections::BTreeSet;

use delannoy_core::bijections::{delta_map, pi_map, tau_domain, tau_inverse, tau_map};
use delannoy_core::conjectures::{count_catalan_no_symmetric_peak, count_inversion_102};
use delannoy_core::counting::{delannoy_count, schroeder_count, schroeder_rect_count};
use delannoy_core::series::assemble_triple;
use delannoy_core::{
    count_bruteforce, count_memoized, enumerate_paths, LatticePath, PathFamily, Pattern, Point,
    Step,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn words(family: &PathFamily) -> Vec<String> {
    enumerate_paths(family)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect()
}

fn starts_with(word: &[Step], prefix: &str) -> bool {
    word.iter()
        .map(|s| s.as_char())
        .collect::<String>()
        .starts_with(prefix)
}

fn ends_with(word: &[Step], suffix: &str) -> bool {
    word.iter()
        .map(|s| s.as_char())
        .collect::<String>()
        .ends_with(suffix)
}

#[test]
fn augmented_deep_valley_characterization() {
    let dv = Pattern::deep_valley();
    for n in 0..=6 {
        for m in 0..=6 {
            let north_east = PathFamily::new(n, m).avoiding([Pattern::diagonal()]);
            for p in enumerate_paths(&north_east).unwrap() {
                let w = p.word();
                let expected = !p.contains(&dv)
                    && !starts_with(w, "ENN")
                    && !ends_with(w, "EEN")
                    && p.to_string() != "EN";
                assert_eq!(!p.augment().contains(&dv), expected, "{p}");
            }
        }
    }
}

#[test]
fn full_enumeration_matches_delannoy_numbers() {
    for n in 0..=7 {
        for m in 0..=7 {
            let all = enumerate_paths(&PathFamily::new(n, m)).unwrap();
            assert_eq!(BigUint::from(all.len()), delannoy_count(n, m).unwrap());
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }
}

#[test]
fn region_formulas_match_bruteforce() {
    for k in 1..=3i64 {
        for n in 0..=6 {
            let fam = PathFamily::schroeder(n, k as u32);
            assert_eq!(
                count_bruteforce(&fam).unwrap(),
                schroeder_count(n, k).unwrap()
            );
            for m in 0..=6 {
                let fam = PathFamily::new(n, m).in_region(k as u32);
                assert_eq!(
                    count_bruteforce(&fam).unwrap(),
                    schroeder_rect_count(n, m, k).unwrap(),
                    "n={n} m={m} k={k}"
                );
            }
        }
    }
}

#[test]
fn pi_delta_round_trip_exhaustive() {
    for n in 0..=6 {
        for m in 0..=6 {
            let north_east = PathFamily::new(n, m).avoiding([Pattern::diagonal()]);
            for p in enumerate_paths(&north_east).unwrap() {
                let q = pi_map(&p).unwrap();
                assert_eq!(delta_map(&q).unwrap(), p);
                assert_eq!(q.end(), p.end());
                assert_eq!(q.count_step(Step::D), p.count_pattern(&Pattern::peak()));
            }
            let peak_free = PathFamily::new(n, m).avoiding([Pattern::peak()]);
            for q in enumerate_paths(&peak_free).unwrap() {
                assert_eq!(pi_map(&delta_map(&q).unwrap()).unwrap(), q);
            }
        }
    }
}

#[test]
fn tau_round_trip_exhaustive() {
    for n in 0..=6 {
        for m in 0..=6 {
            for p in tau_domain(n, m, None).unwrap() {
                assert_eq!(tau_inverse(&tau_map(&p).unwrap()).unwrap(), p, "{p}");
            }
            if n >= 1 && m >= 1 {
                for q in enumerate_paths(&PathFamily::deep_valley_free(n - 1, m - 1)).unwrap() {
                    assert_eq!(tau_map(&tau_inverse(&q).unwrap()).unwrap(), q, "{q}");
                }
            }
        }
    }
}

#[test]
fn tau_treats_en_as_the_empty_path() {
    let en = LatticePath::parse("EN", Point::ORIGIN).unwrap();
    assert!(tau_domain(1, 1, None).unwrap().contains(&en));
    assert!(tau_map(&en).unwrap().is_empty());
}

#[test]
fn deep_valley_free_corner_equals_augmented_variant() {
    for k in 1..=3u32 {
        for n in 0..=6i64 {
            let m = k as i64 * n;
            let plain = PathFamily::deep_valley_free(n, m).in_region(k);
            let aug = PathFamily::augmented_deep_valley_free(n, m).in_region(k);
            assert_eq!(words(&plain), words(&aug), "n={n} k={k}");
        }
    }
}

fn schroeder_peak_valley_free(n: i64, k: u32) -> PathFamily {
    PathFamily::peak_valley_free(n, k as i64 * n).in_region(k)
}

#[test]
fn series_match_memoized_counts() {
    for k in 1..=3u32 {
        let triple = assemble_triple(k, 12).unwrap();
        for n in 0..=12usize {
            let fam = schroeder_peak_valley_free(n as i64, k);
            let all = count_memoized(&fam).unwrap();
            let d = count_memoized(&fam.clone().last(Step::D)).unwrap();
            let e = count_memoized(&fam.clone().last(Step::E)).unwrap();
            assert_eq!(
                BigInt::from(all.clone()),
                *triple.f.coeff(n),
                "F k={k} n={n}"
            );
            assert_eq!(
                BigInt::from(d.clone()),
                *triple.fd.coeff(n),
                "FD k={k} n={n}"
            );
            assert_eq!(
                BigInt::from(e.clone()),
                *triple.fe.coeff(n),
                "FE k={k} n={n}"
            );
            let empty = BigUint::from(u32::from(n == 0));
            assert_eq!(d + e + empty, all);
        }
    }
}

#[test]
fn memoized_matches_bruteforce_on_schroeder_corner() {
    for k in 1..=3u32 {
        for n in 0..=6i64 {
            let fam = schroeder_peak_valley_free(n, k);
            assert_eq!(
                count_memoized(&fam).unwrap(),
                count_bruteforce(&fam).unwrap()
            );
        }
    }
}

#[test]
fn inversion_sequences_match_fd2() {
    let triple = assemble_triple(2, 9).unwrap();
    for n in 1..=9usize {
        assert_eq!(
            BigInt::from(count_inversion_102(n).unwrap()),
            *triple.fd.coeff(n),
            "n={n}"
        );
    }
}

#[test]
fn symmetric_peak_free_dyck_paths_match_fe1() {
    let triple = assemble_triple(1, 11).unwrap();
    for n in 1..=11usize {
        // semilength n is counted by [x^n] (1 + x F_E), i.e. [x^(n-1)] F_E
        assert_eq!(
            BigInt::from(count_catalan_no_symmetric_peak(n).unwrap()),
            *triple.fe.coeff(n - 1),
            "n={n}"
        );
    }
}

fn step() -> impl Strategy<Value = Step> {
    prop_oneof![Just(Step::E), Just(Step::N), Just(Step::D)]
}

fn north_east_step() -> impl Strategy<Value = Step> {
    prop_oneof![Just(Step::E), Just(Step::N)]
}

fn naive_occurs(pattern: &[Step], word: &[Step]) -> bool {
    (0..word.len())
        .filter(|&i| i + pattern.len() <= word.len())
        .any(|i| (0..pattern.len()).all(|j| word[i + j] == pattern[j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn matcher_agrees_with_naive_scan(
        word in prop::collection::vec(step(), 0..16),
        pattern in prop::collection::vec(step(), 1..5),
    ) {
        let p = Pattern::new(pattern.clone()).unwrap();
        prop_assert_eq!(p.occurs_in(&word), naive_occurs(&pattern, &word));
    }
}

proptest! {
    #[test]
    fn augment_then_diminish_is_identity(
        word in prop::collection::vec(step(), 0..20),
        x in -5i64..5,
        y in -5i64..5,
    ) {
        let p = LatticePath::new(Point::new(x, y), word);
        let aug = p.augment();
        prop_assert_eq!(aug.len(), p.len() + 2);
        prop_assert_eq!(aug.start(), Point::new(x - 1, y));
        prop_assert_eq!(aug.contains(&Pattern::diagonal()), p.contains(&Pattern::diagonal()));
        prop_assert_eq!(aug.diminish().unwrap(), p);
    }

    #[test]
    fn pi_preserves_endpoints_and_regions(
        word in prop::collection::vec(north_east_step(), 0..30),
        k in 1u32..4,
    ) {
        let p = LatticePath::from_word(word);
        let q = pi_map(&p).unwrap();
        prop_assert_eq!(q.start(), p.start());
        prop_assert_eq!(q.end(), p.end());
        prop_assert!(!p.in_region(k) || q.in_region(k));
        prop_assert!(!q.contains(&Pattern::peak()));
        prop_assert_eq!(delta_map(&q).unwrap(), p);
    }
}

use std::collections::BTreeSet;

use graded_core::primality::{self, replay};
use graded_core::{catalog, ideal, ElementSet, GradedRing, Lattice, Limits, Property, Witness};
use proptest::prelude::*;

fn corpus() -> Vec<(String, GradedRing)> {
    catalog::default_corpus()
}

fn small_corpus() -> Vec<(String, GradedRing)> {
    corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 27)
        .collect()
}

/// Every subset of the ring that is a graded right ideal, by direct table
/// checks over all 2ⁿ subsets.
fn brute_force_graded_right_ideals(gr: &GradedRing) -> Vec<ElementSet> {
    let n = gr.order();
    let r = gr.ring();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let has = |x: usize| mask >> x & 1 == 1;
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| has(r.add(a, b))));
        let absorbs = closed && members.iter().all(|&a| (0..n).all(|t| has(r.mul(a, t))));
        let graded = absorbs
            && members
                .iter()
                .all(|&a| gr.decompose(a).into_iter().all(has));
        if graded {
            out.push(ElementSet::from_indices(n, members));
        }
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_subset_oracle() {
    let mut compared = 0;
    for (name, gr) in corpus() {
        if gr.order() > 16 {
            continue;
        }
        let fast = ideal::enumerate_graded_right_ideals(&gr, &Limits::default()).unwrap();
        assert_eq!(fast, brute_force_graded_right_ideals(&gr), "{name}");
        compared += 1;
    }
    assert!(compared >= 10);
}

#[test]
fn twosided_list_is_the_left_absorbing_part() {
    for (name, gr) in small_corpus() {
        let limits = Limits::default();
        let right = ideal::enumerate_graded_right_ideals(&gr, &limits).unwrap();
        let twosided = ideal::enumerate_graded_twosided_ideals(&gr, &limits).unwrap();
        let r = gr.ring();
        let filtered: Vec<_> = right
            .into_iter()
            .filter(|s| {
                s.iter()
                    .all(|a| (0..gr.order()).all(|t| s.contains(r.mul(t, a))))
            })
            .collect();
        assert_eq!(twosided, filtered, "{name}");
    }
}

#[test]
fn implication_chain_and_shortcuts_hold_corpus_wide() {
    let mut changed = Vec::new();
    for (name, gr) in corpus() {
        let lat = Lattice::new(&gr, &Limits::default()).unwrap();
        let report = lat.classify_all();
        for e in &report.entries {
            let p = &e.ideal;
            assert!(!e.prime.value || e.weakly_prime.value, "{name} {p}");
            assert!(!e.weakly_prime.value || e.almost_prime.value, "{name} {p}");
            if e.flags.is_idempotent {
                assert!(e.almost_prime.value, "{name} {p}");
            }
            if p.count() == 1 {
                assert!(e.almost_prime.value, "{name}");
                assert!(e.weakly_prime.value, "{name}");
            }
            for property in Property::ALL {
                let with = lat.decide(p, property).unwrap();
                let without = lat.decide_excluding_improper(p, property).unwrap();
                if with.value != without.value {
                    changed.push(format!("{name} {p} {}", property.name()));
                    // Only primeness can change, and only through a pair
                    // involving R itself.
                    assert_eq!(property, Property::Prime, "{name} {p}");
                    match &with.witness {
                        Some(Witness::Ideals { x, y }) => assert!(x.is_full() || y.is_full()),
                        other => panic!("{name} {p}: unexpected witness {other:?}"),
                    }
                }
            }
        }
    }
    // In ℤ₂ with zero multiplication, {0} is not prime only because RR = {0}.
    assert!(
        changed.contains(&"square-zero-1 {0} prime".to_string()),
        "{changed:?}"
    );
    assert!(
        changed.iter().all(|c| c.starts_with("square-zero")),
        "{changed:?}"
    );
}

#[test]
fn every_negative_verdict_replays() {
    for (name, gr) in corpus() {
        let lat = Lattice::new(&gr, &Limits::default()).unwrap();
        for p in lat.proper_right_ideals() {
            let e = lat.classify(p).unwrap();
            for v in [&e.prime, &e.weakly_prime, &e.almost_prime] {
                assert!(replay(&gr, p, v), "{name} {p} {v:?}");
            }
            if gr.is_unital() {
                let v = lat.is_graded_prime_elementwise(p).unwrap();
                assert_eq!(v.value, e.prime.value, "{name} {p}");
                assert!(replay(&gr, p, &v), "{name} {p}");
            }
        }
        for p in lat.proper_twosided_ideals() {
            let v = lat.is_graded_almost_prime_twosided(p).unwrap();
            assert!(replay(&gr, p, &v));
            if gr.is_unital() {
                let v = lat.is_graded_almost_prime_elementwise(p).unwrap();
                assert!(replay(&gr, p, &v));
                for reading in graded_core::Reading::BOTH {
                    let v = lat.is_graded_almost_prime_principal(p, reading).unwrap();
                    assert!(replay(&gr, p, &v));
                    let c = lat.almost_prime_colon_criterion(p, reading).unwrap();
                    assert!(replay(&gr, p, &c.union_form));
                    assert!(replay(&gr, p, &c.dichotomy));
                }
            }
        }
    }
}

#[test]
fn gaussian_readings_coincide_because_the_ring_is_commutative() {
    let gr = catalog::gaussian_mod(6).unwrap();
    for x in gr.homogeneous_elements() {
        let xr = ideal::principal_twosided(&gr, x, graded_core::Reading::XrOnly).unwrap();
        let rxr = ideal::principal_twosided(&gr, x, graded_core::Reading::Rxr).unwrap();
        assert_eq!(xr, rxr);
    }
}

fn ring_and_subset() -> impl Strategy<Value = (usize, Vec<bool>)> {
    let rings = small_corpus().len();
    (0..rings).prop_flat_map(|i| {
        let n = small_corpus()[i].1.order();
        (
            Just(i),
            proptest::collection::vec(proptest::bool::weighted(0.15), n),
        )
    })
}

fn subset(n: usize, bits: &[bool]) -> ElementSet {
    ElementSet::from_indices(n, (0..n).filter(|&i| bits[i]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn decomposition_is_additive((i, bits) in ring_and_subset(), x in 0usize..1024, y in 0usize..1024) {
        let gr = &small_corpus()[i].1;
        let _ = bits;
        let n = gr.order();
        let (x, y) = (x % n, y % n);
        let r = gr.ring();
        let dx = gr.decompose(x);
        let sum = dx.iter().fold(0, |acc, &c| r.add(acc, c));
        prop_assert_eq!(sum, x);
        for (g, &c) in dx.iter().enumerate() {
            prop_assert!(gr.component_set(g).contains(c));
        }
        let dy = gr.decompose(y);
        let dxy = gr.decompose(r.add(x, y));
        for g in 0..dx.len() {
            prop_assert_eq!(dxy[g], r.add(dx[g], dy[g]));
        }
    }

    #[test]
    fn graded_closure_is_the_smallest_graded_right_ideal((i, bits) in ring_and_subset()) {
        let gr = &small_corpus()[i].1;
        let s = subset(gr.order(), &bits);
        let closure = ideal::graded_right_ideal_closure(gr, &s);
        prop_assert!(ideal::is_graded_right_ideal(gr, &closure));
        prop_assert!(s.is_subset(&closure));
        let lattice = ideal::enumerate_graded_right_ideals(gr, &Limits::default()).unwrap();
        let smallest = lattice
            .iter()
            .filter(|t| s.is_subset(t))
            .fold(ElementSet::full(gr.order()), |acc, t| acc.intersection(t));
        prop_assert_eq!(closure, smallest);
    }

    #[test]
    fn products_are_monotone_and_associative((i, a) in ring_and_subset(), b in 0usize..64, c in 0usize..64) {
        let gr = &small_corpus()[i].1;
        let lattice = ideal::enumerate_graded_right_ideals(gr, &Limits::default()).unwrap();
        let k = lattice.len();
        let x = &lattice[a.iter().filter(|&&t| t).count() % k];
        let y = &lattice[b % k];
        let z = &lattice[c % k];
        let xy = ideal::product(gr, x, y);
        prop_assert!(xy.is_subset(x));
        let bigger = ideal::graded_right_ideal_closure(gr, &x.union(z));
        prop_assert!(xy.is_subset(&ideal::product(gr, &bigger, y)));
        prop_assert_eq!(
            ideal::product(gr, &xy, z),
            ideal::product(gr, x, &ideal::product(gr, y, z))
        );
    }

    #[test]
    fn colon_is_the_largest_set_mapped_into_p((i, a) in ring_and_subset(), b in 0usize..64) {
        let gr = &small_corpus()[i].1;
        let lattice = ideal::enumerate_graded_right_ideals(gr, &Limits::default()).unwrap();
        let k = lattice.len();
        let p = &lattice[a.iter().filter(|&&t| t).count() % k];
        let kk = &lattice[b % k];
        let right = ideal::colon_right(gr, p, kk);
        prop_assert!(ideal::product(gr, kk, &right).is_subset(p));
        if ideal::is_twosided_ideal(gr, p) {
            prop_assert!(p.is_subset(&right));
        }
        let r = gr.ring();
        for y in 0..gr.order() {
            let maps_in = kk.iter().all(|a| p.contains(r.mul(a, y)));
            prop_assert_eq!(right.contains(y), maps_in);
        }
        let left = ideal::colon_left(gr, p, kk);
        for y in 0..gr.order() {
            let maps_in = kk.iter().all(|a| p.contains(r.mul(y, a)));
            prop_assert_eq!(left.contains(y), maps_in);
        }
    }
}

#[test]
fn classification_is_deterministic() {
    for (_, gr) in small_corpus() {
        let a = primality::classify_all(&gr, &Limits::default()).unwrap();
        let b = primality::classify_all(&gr, &Limits::default()).unwrap();
        assert_eq!(a, b);
        let ideals: BTreeSet<_> = a.entries.iter().map(|e| e.ideal.clone()).collect();
        assert_eq!(ideals.len(), a.entries.len());
    }
}

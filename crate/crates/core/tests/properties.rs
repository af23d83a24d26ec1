mod common;

use proptest::prelude::*;
use semigroup_patterns::{
    admits, closure, enumerate_all, witness_family, AdmissibilityDegree, NumericalSemigroup,
    Pattern,
};

use common::{brute_admits, Reference};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn generators(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max, 1..5)
        .prop_filter("gcd 1", |g| g.iter().fold(0, |a, &x| gcd(a, x)) == 1)
}

fn semigroup(max: u32) -> impl Strategy<Value = NumericalSemigroup> {
    generators(max).prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

fn coefficient() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

fn pattern(max_len: usize) -> impl Strategy<Value = Pattern> {
    prop::collection::vec(coefficient(), 1..=max_len).prop_map(|c| Pattern::new(c).unwrap())
}

fn strongly_admissible(max_len: usize) -> impl Strategy<Value = Pattern> {
    pattern(max_len).prop_filter("strongly admissible", Pattern::is_strongly_admissible)
}

fn boolean(max_len: usize) -> impl Strategy<Value = Pattern> {
    prop::collection::vec(prop::bool::ANY, 2..=max_len).prop_map(|b| {
        Pattern::new(b.into_iter().map(|x| if x { 1 } else { -1 }).collect()).unwrap()
    })
}

/// Derive until not admissible, giving up after `cap` steps.
fn naive_degree(p: &Pattern, cap: u64) -> Option<u64> {
    let mut q = p.clone();
    for k in 0..cap {
        if !q.is_admissible() {
            return Some(k);
        }
        if q.is_empty() {
            return None;
        }
        q = q.derived().unwrap();
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn semigroup_matches_reference(g in generators(40)) {
        let s = NumericalSemigroup::from_generators(&g).unwrap();
        let r = Reference::new(&g);
        prop_assert_eq!(s.frobenius(), r.frobenius);
        prop_assert_eq!(s.multiplicity(), r.multiplicity);
        for x in 0..=2 * s.conductor() as usize + 2 {
            prop_assert_eq!(s.contains(x as i64), r.contains(x));
        }
        prop_assert_eq!(s.minimal_generators(), r.minimal_generators());
        for lambda in [s.multiplicity(), g[0]] {
            let ap = s.apery(lambda as i64).unwrap();
            let expected = r.apery(lambda);
            prop_assert_eq!(ap.witnesses(), expected.as_slice());
        }
    }

    #[test]
    fn generated_by_minimal_generators(s in semigroup(40)) {
        prop_assert_eq!(NumericalSemigroup::from_generators(&s.minimal_generators()).unwrap(), s);
    }

    #[test]
    fn genus_counts_gaps(s in semigroup(40)) {
        prop_assert_eq!(s.gaps().count() as u32, s.genus());
        prop_assert!(2 * s.genus() >= s.conductor());
    }

    #[test]
    fn apery_partition(s in semigroup(30)) {
        let m = s.multiplicity();
        let ap = s.apery(m as i64).unwrap();
        for (r, &w) in ap.witnesses().iter().enumerate() {
            prop_assert_eq!(w % m, r as u32);
            prop_assert!(s.contains(w as i64));
            prop_assert!(!s.contains(w as i64 - m as i64));
        }
        for x in 0..3 * s.conductor() + m {
            prop_assert_eq!(s.contains(x as i64), x >= ap.witnesses()[(x % m) as usize]);
        }
        let depth = s.apery_depth();
        prop_assert!(depth >= 1 && depth <= m);
    }

    #[test]
    fn remove_and_add_frobenius(s in semigroup(30)) {
        let f = s.frobenius();
        for a in s.minimal_generators() {
            let smaller = s.remove_element(a).unwrap();
            prop_assert!(!smaller.contains(a as i64));
            prop_assert_eq!(smaller.genus(), s.genus() + 1);
            if a as i64 > f {
                prop_assert_eq!(smaller.frobenius(), a as i64);
                prop_assert_eq!(smaller.add_frobenius().unwrap(), s.clone());
            }
        }
        if !s.is_natural() {
            let bigger = s.add_frobenius().unwrap();
            prop_assert!(bigger.is_minimal_generator(f as u32));
            prop_assert_eq!(bigger.remove_element(f as u32).unwrap(), s);
        }
    }

    #[test]
    fn semigroup_text_and_json_roundtrip(s in semigroup(40)) {
        let back: NumericalSemigroup = s.to_string().parse().unwrap();
        prop_assert_eq!(&back, &s);
        let json = serde_json::to_string(&s).unwrap();
        let back: NumericalSemigroup = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn pattern_text_and_json_roundtrip(p in pattern(8)) {
        let back: Pattern = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        let json = serde_json::to_string(&p).unwrap();
        let back: Pattern = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn degree_fast_path_matches_iteration(
        lead in 1i64..300,
        rest in prop::collection::vec(prop_oneof![-400i64..=-1, 1i64..=400], 0..5),
    ) {
        let mut c = vec![lead];
        c.extend(rest);
        let p = Pattern::new(c).unwrap();
        let expected = match naive_degree(&p, 5_000) {
            Some(k) => AdmissibilityDegree::Finite(k),
            None => AdmissibilityDegree::Infinite,
        };
        prop_assert_eq!(p.admissibility_degree(), expected);
    }

    #[test]
    fn degree_classes(p in pattern(6)) {
        let k = p.admissibility_degree();
        prop_assert_eq!(p.is_admissible(), k != AdmissibilityDegree::Finite(0));
        prop_assert_eq!(
            p.is_strongly_admissible(),
            k != AdmissibilityDegree::Finite(0) && k != AdmissibilityDegree::Finite(1)
        );
    }

    #[test]
    fn boolean_reassembly(p in boolean(10)) {
        if let Ok(b) = p.boolean_decomposition() {
            let mut joined = b.f().coeffs().to_vec();
            joined.extend_from_slice(b.g().coeffs());
            joined.extend_from_slice(b.h().coeffs());
            prop_assert_eq!(joined.as_slice(), p.coeffs());
            prop_assert!(b.f().coeffs().iter().all(|&a| a == 1));
            prop_assert_eq!(b.g().coeffs().iter().sum::<i64>(), 0);
            prop_assert!(b.h().prefix_sums().iter().all(|&s| s > 0));
            prop_assert!(b.d >= 1);
        }
    }

    // <q, q+1> ∪ … ∪ [kq, ∞) admits a boolean pattern of degree k exactly
    // when d ≤ q - k - 1
    #[test]
    fn witness_family_separates_by_d(p in boolean(10)) {
        let Ok(b) = p.boolean_decomposition() else { return Ok(()) };
        prop_assume!(b.k >= 3);
        let k = b.k as u32;
        for q in k + 2..k + 6 {
            let s = witness_family(q, k).unwrap();
            prop_assert_eq!(admits(&s, &p).is_admits(), b.d <= (q - k - 1) as i64, "q = {}", q);
        }
    }

    #[test]
    fn admits_matches_brute_force(s in semigroup(12), p in strongly_admissible(4)) {
        prop_assert_eq!(admits(&s, &p).is_admits(), brute_admits(&s, &p, s.multiplicity()));
    }

    #[test]
    fn rejection_witness_is_valid(s in semigroup(15), p in pattern(5)) {
        if let semigroup_patterns::AdmitsVerdict::Rejects { witness, value } = admits(&s, &p) {
            prop_assert!(witness.windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(witness.iter().all(|&x| s.contains(x as i64)));
            prop_assert_eq!(p.evaluate(&witness).unwrap(), value);
            prop_assert!(!s.contains(value as i64) || value < 0);
        }
    }

    #[test]
    fn closure_is_least_fixpoint(s in semigroup(12), p in strongly_admissible(4)) {
        prop_assume!(p.is_premonic());
        let trace = closure(&s, &p).unwrap();
        let c = trace.last();
        prop_assert!(admits(c, &p).is_admits());
        prop_assert!(s.small_elements().iter().all(|&x| c.contains(x as i64)));
        prop_assert_eq!(closure(c, &p).unwrap().k(), 0);
        for w in trace.steps().windows(2) {
            prop_assert!(w[0].genus() > w[1].genus());
        }
    }
}

#[test]
fn closure_is_contained_in_every_admitting_oversemigroup() {
    let census: Vec<NumericalSemigroup> = enumerate_all(6).semigroups().cloned().collect();
    for p in [
        Pattern::arf(),
        "x1+x2+x3-x4".parse().unwrap(),
        "x1+3x2-x3".parse().unwrap(),
    ] {
        let admitting: Vec<&NumericalSemigroup> = census
            .iter()
            .filter(|t| admits(t, &p).is_admits())
            .collect();
        for s in &census {
            let c = closure(s, &p).unwrap().into_last();
            for t in &admitting {
                let contains_s = s.small_elements().iter().all(|&x| t.contains(x as i64));
                if contains_s {
                    assert!(
                        c.small_elements().iter().all(|&x| t.contains(x as i64)),
                        "{s} {p} {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn normalize_tail_is_equivalent_on_census() {
    let census: Vec<NumericalSemigroup> = enumerate_all(7).semigroups().cloned().collect();
    let patterns = [
        "x1+x2-x3+x4",
        "x1+x2+x3-x4+2x5",
        "2x1-x2+x3+x4",
        "x1+x2-x3+x4-x5+x6+x7",
    ];
    for text in patterns {
        let p: Pattern = text.parse().unwrap();
        let q = p.normalize_tail();
        assert!(q.len() < p.len(), "{p}");
        for s in &census {
            assert_eq!(
                admits(s, &p).is_admits(),
                admits(s, &q).is_admits(),
                "{s} {p}"
            );
        }
    }
}

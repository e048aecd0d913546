mod common;

use common::{catalog_up_to, random_relabeling};
use finring_core::predicates::is_weakly_tripotent_ring;
use finring_core::search::{audit_with_pool, hunt, AuditOptions, EnumerationOptions, R0Pool};
use finring_core::{build_cyclic, build_poly_quotient};
use finring_core::morphisms::are_isomorphic;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn audit_verdicts_survive_relabeling() {
    let pool = R0Pool::from_catalog(&catalog_up_to(8).cloned().collect::<Vec<_>>());
    let opts = AuditOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in catalog_up_to(8).filter(|r| is_weakly_tripotent_ring(r)) {
        let base = audit_with_pool(r, &pool, &opts).unwrap();
        for _ in 0..5 {
            let s = r.relabel(&random_relabeling(r.order(), &mut rng)).unwrap();
            let other = audit_with_pool(&s, &pool, &opts).unwrap();
            assert_eq!(base.verdicts, other.verdicts, "{}", r.label());
            let clauses = |a: &finring_core::search::AuditReport| {
                let mut v: Vec<_> = a
                    .splittings
                    .iter()
                    .map(|s| {
                        (
                            s.r1.order,
                            s.r2.order,
                            s.clause1_literal,
                            s.clause1_paper_variant,
                            s.clause2_criterion,
                            s.clause2_bounded_embedding,
                        )
                    })
                    .collect();
                v.sort();
                v
            };
            assert_eq!(clauses(&base), clauses(&other), "{}", r.label());
        }
    }
}

#[test]
fn disagreements_carry_both_witnesses() {
    let pool = R0Pool::from_catalog(&catalog_up_to(8).cloned().collect::<Vec<_>>());
    for r in catalog_up_to(8).filter(|r| is_weakly_tripotent_ring(r)) {
        let report = audit_with_pool(r, &pool, &AuditOptions::default()).unwrap();
        for s in &report.splittings {
            if s.clause2_bounded_embedding != s.clause2_criterion {
                let c = s.criterion.as_ref().expect("nonzero R1 has a criterion record");
                assert!(c.trivial_meet_maximal.is_none());
                assert!(!c.maximal_ideals.is_empty());
                assert!(!s.embedding_witnesses.is_empty());
            }
        }
    }
}

#[test]
fn hunt_reports() {
    let opts = EnumerationOptions::default();
    let found = hunt(
        4,
        "weakly-tripotent AND clause2-criterion-fails-for-some-splitting",
        &opts,
        &AuditOptions::default(),
    )
    .unwrap();
    let z4 = build_cyclic(4).unwrap();
    let dual = build_poly_quotient(&build_cyclic(2).unwrap(), &[0, 0, 1]).unwrap();
    let rings: Vec<_> = found
        .entries
        .iter()
        .map(|e| finring_core::FiniteRing::from_record(&e.entry.record).unwrap())
        .collect();
    assert!(rings.iter().any(|r| are_isomorphic(r, &z4).is_some()));
    assert!(rings.iter().any(|r| are_isomorphic(r, &dual).is_some()));

    let large = EnumerationOptions {
        allow_large: true,
        jobs: 0,
    };
    let none = hunt(
        16,
        "weakly-tripotent AND NOT strongly-invo-clean",
        &large,
        &AuditOptions::default(),
    )
    .unwrap();
    assert!(none.entries.is_empty());
}

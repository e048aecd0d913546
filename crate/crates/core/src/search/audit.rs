//! Clause-by-clause audit of the decomposition theorem for commutative
//! weakly tripotent rings:
//!
//! R is weakly tripotent iff R = R1 × R2 where
//! 1. R2 is a tripotent ring of characteristic 3, or R2 = 0, and
//! 2. R1 = 0, or R1 embeds as a subring of R0 × ∏ R_i with R0 weakly
//!    tripotent without nontrivial idempotents and every R_i Boolean.
//!
//! Each idempotent splitting `R ≅ eR × (1-e)R` is checked with
//! `R1 = eR`, `R2 = (1-e)R`. Clause 1 is evaluated as stated (tripotent)
//! and in the weakly tripotent variant. Clause 2 is evaluated twice: by the
//! maximal-ideal criterion (some maximal `L` of `R1` with `L ∩ J(R1) = 0`)
//! and by a bounded search for unital embeddings into `R0 × Z2^m`.

use serde::{Deserialize, Serialize};

use crate::construct::{build_cyclic, direct_product};
use crate::error::{Error, Result};
use crate::morphisms::{find_embedding, fingerprint, Fingerprint, Homomorphism};
use crate::predicates::{
    has_nontrivial_idempotents, is_boolean_ring, is_tripotent_ring, is_weakly_tripotent_ring,
};
use crate::ring::FiniteRing;
use crate::structure::{
    find_trivial_meet_maximal, jacobson_radical, maximal_ideals, peirce_splittings, Ideal,
};

use super::catalog::build_catalog;
use super::enumerate::{EnumerationOptions, HARD_MAX_ORDER};

pub const DEFAULT_BOOLEAN_FACTOR_BOUND: usize = 4;

#[derive(Clone, Copy, Debug)]
pub struct AuditOptions {
    /// Largest `|R0|` tried; `None` means `|R1|` for each splitting.
    pub embed_bound: Option<usize>,
    /// Largest `m` in `R0 × Z2^m`.
    pub boolean_factor_bound: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            embed_bound: None,
            boolean_factor_bound: DEFAULT_BOOLEAN_FACTOR_BOUND,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSummary {
    pub label: String,
    pub order: usize,
    pub characteristic: usize,
    pub zero_ring: bool,
    pub boolean: bool,
    pub tripotent: bool,
    pub weakly_tripotent: bool,
    /// Indices of the audited ring making up this factor.
    pub elements: Vec<usize>,
}

impl PartSummary {
    fn new(ring: &FiniteRing, elements: &[usize]) -> Self {
        Self {
            label: ring.label().to_string(),
            order: ring.order(),
            characteristic: ring.characteristic(),
            zero_ring: ring.is_zero_ring(),
            boolean: is_boolean_ring(ring),
            tripotent: is_tripotent_ring(ring),
            weakly_tripotent: is_weakly_tripotent_ring(ring),
            elements: elements.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionRecord {
    /// Maximal ideals of `R1`, as local indices.
    pub maximal_ideals: Vec<Ideal>,
    pub jacobson_radical: Ideal,
    /// First maximal ideal meeting `J(R1)` trivially.
    pub trivial_meet_maximal: Option<Ideal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingWitness {
    pub r0: String,
    pub r0_order: usize,
    /// `m` in `R0 × Z2^m`.
    pub boolean_factors: usize,
    /// `m = 0`: the Boolean family is empty and the target is `R0` alone.
    pub empty_boolean_family: bool,
    /// Images in the row-major encoding of `R0 × Z2 × ... × Z2`.
    pub map: Homomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingAudit {
    pub idempotent: usize,
    pub r1: PartSummary,
    pub r2: PartSummary,
    /// `R2 = 0`, or `R2` tripotent of characteristic 3.
    pub clause1_literal: bool,
    /// `R2 = 0`, or `R2` weakly tripotent of characteristic 3.
    pub clause1_paper_variant: bool,
    /// `R1 = 0`, or some maximal ideal of `R1` meets `J(R1)` trivially.
    pub clause2_criterion: bool,
    pub criterion: Option<CriterionRecord>,
    /// `R1 = 0`, or an embedding into `R0 × Z2^m` was found within bounds.
    pub clause2_bounded_embedding: bool,
    pub embed_bound: usize,
    pub embedding_witnesses: Vec<EmbeddingWitness>,
    /// Every witness found uses `m = 0`.
    pub only_empty_boolean_family: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Some splitting satisfies clause 1 (literal) and clause 2 (embedding).
    pub literal: bool,
    /// Some splitting satisfies clause 1 (literal) and clause 2 (criterion).
    pub criterion: bool,
    pub literal_paper_variant: bool,
    pub criterion_paper_variant: bool,
    /// `literal != criterion`.
    pub disagree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub ring: String,
    pub fingerprint: Fingerprint,
    pub weakly_tripotent: bool,
    /// Embeddings are unital: the subring contains the identity of the
    /// target product.
    pub unital_embeddings_only: bool,
    pub boolean_factor_bound: usize,
    pub splittings: Vec<SplittingAudit>,
    pub verdicts: Verdicts,
}

/// Candidate `R0` rings: weakly tripotent, no nontrivial idempotents.
#[derive(Clone, Debug, Default)]
pub struct R0Pool {
    rings: Vec<FiniteRing>,
}

impl R0Pool {
    /// Filters a catalog down to admissible `R0` candidates.
    pub fn from_catalog(catalog: &[FiniteRing]) -> Self {
        Self {
            rings: catalog
                .iter()
                .filter(|r| is_weakly_tripotent_ring(r) && !has_nontrivial_idempotents(r))
                .cloned()
                .collect(),
        }
    }

    /// Enumerates the catalog up to `max_order` and filters it.
    pub fn up_to(max_order: usize, jobs: usize) -> Result<Self> {
        let opts = EnumerationOptions {
            allow_large: true,
            jobs,
        };
        Ok(Self::from_catalog(&build_catalog(max_order.max(1), &opts)?))
    }

    pub fn rings(&self) -> &[FiniteRing] {
        &self.rings
    }

    pub fn max_order(&self) -> usize {
        self.rings.iter().map(FiniteRing::order).max().unwrap_or(0)
    }
}

/// Audits `ring`, enumerating `R0` candidates as needed.
pub fn audit_theorem(ring: &FiniteRing, opts: &AuditOptions) -> Result<AuditReport> {
    let bound = opts.embed_bound.unwrap_or(ring.order());
    if bound > HARD_MAX_ORDER {
        return Err(Error::BoundExceeded(format!(
            "embed bound {bound} is above {HARD_MAX_ORDER}"
        )));
    }
    let pool = R0Pool::up_to(bound, 0)?;
    audit_with_pool(ring, &pool, opts)
}

/// Audits `ring` against a precomputed `R0` pool. The pool must cover the
/// embed bound in use.
pub fn audit_with_pool(ring: &FiniteRing, pool: &R0Pool, opts: &AuditOptions) -> Result<AuditReport> {
    if !ring.is_commutative() {
        return Err(Error::NonCommutative);
    }
    if !is_weakly_tripotent_ring(ring) {
        return Err(Error::NotWeaklyTripotent(ring.label().to_string()));
    }
    let m_bound = opts.boolean_factor_bound;
    let boolean_powers = boolean_powers(m_bound);

    let mut splittings = Vec::new();
    for s in peirce_splittings(ring)? {
        let (r1, r2) = (&s.part1, &s.part2);
        let char3 = r2.characteristic() == 3;
        let clause1_literal = r2.is_zero_ring() || (char3 && is_tripotent_ring(r2));
        let clause1_paper_variant = r2.is_zero_ring() || (char3 && is_weakly_tripotent_ring(r2));

        let criterion = if r1.is_zero_ring() {
            None
        } else {
            Some(CriterionRecord {
                maximal_ideals: maximal_ideals(r1)?,
                jacobson_radical: jacobson_radical(r1)?,
                trivial_meet_maximal: find_trivial_meet_maximal(r1)?,
            })
        };
        let clause2_criterion = criterion
            .as_ref()
            .is_none_or(|c| c.trivial_meet_maximal.is_some());

        let embed_bound = opts.embed_bound.unwrap_or(r1.order());
        let mut witnesses = Vec::new();
        if !r1.is_zero_ring() {
            for r0 in pool.rings().iter().filter(|r| r.order() <= embed_bound) {
                for (m, power) in boolean_powers.iter().enumerate() {
                    let target = match power {
                        None => r0.clone(),
                        Some(b) => direct_product(r0, b),
                    };
                    if let Some(map) = find_embedding(r1, &target) {
                        witnesses.push(EmbeddingWitness {
                            r0: r0.label().to_string(),
                            r0_order: r0.order(),
                            boolean_factors: m,
                            empty_boolean_family: m == 0,
                            map,
                        });
                    }
                }
            }
        }
        let clause2_bounded_embedding = r1.is_zero_ring() || !witnesses.is_empty();
        let only_empty_boolean_family =
            !witnesses.is_empty() && witnesses.iter().all(|w| w.empty_boolean_family);

        splittings.push(SplittingAudit {
            idempotent: s.idempotent,
            r1: PartSummary::new(r1, &s.part1_elements),
            r2: PartSummary::new(r2, &s.part2_elements),
            clause1_literal,
            clause1_paper_variant,
            clause2_criterion,
            criterion,
            clause2_bounded_embedding,
            embed_bound,
            embedding_witnesses: witnesses,
            only_empty_boolean_family,
        });
    }

    let any = |f: &dyn Fn(&SplittingAudit) -> bool| splittings.iter().any(f);
    let literal = any(&|s| s.clause1_literal && s.clause2_bounded_embedding);
    let criterion = any(&|s| s.clause1_literal && s.clause2_criterion);
    let verdicts = Verdicts {
        literal,
        criterion,
        literal_paper_variant: any(&|s| s.clause1_paper_variant && s.clause2_bounded_embedding),
        criterion_paper_variant: any(&|s| s.clause1_paper_variant && s.clause2_criterion),
        disagree: literal != criterion,
    };
    Ok(AuditReport {
        ring: ring.label().to_string(),
        fingerprint: fingerprint(ring),
        weakly_tripotent: true,
        unital_embeddings_only: true,
        boolean_factor_bound: m_bound,
        splittings,
        verdicts,
    })
}

/// `[None, Some(Z2), Some(Z2 × Z2), ...]` up to `Z2^bound`.
fn boolean_powers(bound: usize) -> Vec<Option<FiniteRing>> {
    let z2 = build_cyclic(2).expect("Z2");
    let mut out = vec![None];
    let mut acc: Option<FiniteRing> = None;
    for _ in 0..bound {
        let next = match &acc {
            None => z2.clone(),
            Some(b) => direct_product(b, &z2),
        };
        out.push(Some(next.clone()));
        acc = Some(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    #[test]
    fn z6_has_a_passing_splitting() {
        let z6 = build_cyclic(6).unwrap();
        let report = audit_theorem(&z6, &AuditOptions::default()).unwrap();
        assert_eq!(report.splittings.len(), 4);
        // e = 3: R1 = {0,3} ≅ Z2, R2 = {0,2,4} ≅ Z3
        let s = report.splittings.iter().find(|s| s.idempotent == 3).unwrap();
        assert_eq!(s.r1.elements, vec![0, 3]);
        assert!(s.r1.boolean);
        assert_eq!((s.r2.order, s.r2.characteristic), (3, 3));
        assert!(s.r2.tripotent);
        assert!(s.clause1_literal && s.clause1_paper_variant);
        assert!(s.clause2_criterion && s.clause2_bounded_embedding);
        assert!(report.verdicts.literal && report.verdicts.criterion);
        assert!(!report.verdicts.disagree);
    }

    #[test]
    fn dual_numbers_split_the_verdicts() {
        let dual = build_poly_quotient(&build_cyclic(2).unwrap(), &[0, 0, 1]).unwrap();
        let report = audit_theorem(&dual, &AuditOptions::default()).unwrap();
        let zero_r1 = &report.splittings[0];
        assert!(zero_r1.r1.zero_ring);
        assert!(!zero_r1.clause1_literal && !zero_r1.clause1_paper_variant);
        let zero_r2 = &report.splittings[1];
        assert!(zero_r2.r2.zero_ring);
        assert!(!zero_r2.clause2_criterion);
        assert!(zero_r2.clause2_bounded_embedding);
        let w = &zero_r2.embedding_witnesses[0];
        assert_eq!((w.r0_order, w.boolean_factors), (4, 0));
        assert_eq!(w.r0, "Z2[x]/(x^2)");
        let mut image = w.map.map().to_vec();
        image.sort();
        assert_eq!(image, vec![0, 1, 2, 3]);
        assert!(report.verdicts.literal && !report.verdicts.criterion);
        assert!(report.verdicts.disagree);
    }

    #[test]
    fn rejects_non_weakly_tripotent() {
        let f4 = build_gf(4).unwrap();
        assert!(matches!(
            audit_theorem(&f4, &AuditOptions::default()),
            Err(Error::NotWeaklyTripotent(_))
        ));
    }
}

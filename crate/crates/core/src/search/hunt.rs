//! Filtered search over the catalog for rings of interest.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::FiniteRing;

use super::audit::{audit_with_pool, AuditOptions, AuditReport, R0Pool};
use super::catalog::{build_catalog, CatalogEntry};
use super::enumerate::{with_pool, EnumerationOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Commutative,
    ZeroRing,
    Field,
    Boolean,
    Tripotent,
    WeaklyTripotent,
    InvoClean,
    StronglyInvoClean,
    NontrivialIdempotents,
    Clause1LiteralHoldsForSomeSplitting,
    Clause1VariantHoldsForSomeSplitting,
    Clause2CriterionFailsForSomeSplitting,
    Clause2EmbeddingFailsForSomeSplitting,
    TheoremLiteralHolds,
    TheoremCriterionHolds,
    VerdictsDisagree,
}

const SELECTORS: &[(&str, Selector)] = &[
    ("commutative", Selector::Commutative),
    ("zero-ring", Selector::ZeroRing),
    ("field", Selector::Field),
    ("boolean", Selector::Boolean),
    ("tripotent", Selector::Tripotent),
    ("weakly-tripotent", Selector::WeaklyTripotent),
    ("invo-clean", Selector::InvoClean),
    ("strongly-invo-clean", Selector::StronglyInvoClean),
    ("nontrivial-idempotents", Selector::NontrivialIdempotents),
    ("clause1-literal-holds-for-some-splitting", Selector::Clause1LiteralHoldsForSomeSplitting),
    ("clause1-variant-holds-for-some-splitting", Selector::Clause1VariantHoldsForSomeSplitting),
    ("clause2-criterion-fails-for-some-splitting", Selector::Clause2CriterionFailsForSomeSplitting),
    ("clause2-embedding-fails-for-some-splitting", Selector::Clause2EmbeddingFailsForSomeSplitting),
    ("theorem-literal-holds", Selector::TheoremLiteralHolds),
    ("theorem-criterion-holds", Selector::TheoremCriterionHolds),
    ("verdicts-disagree", Selector::VerdictsDisagree),
];

impl Selector {
    pub fn names() -> impl Iterator<Item = &'static str> {
        SELECTORS.iter().map(|(n, _)| *n)
    }

    fn name(self) -> &'static str {
        SELECTORS.iter().find(|(_, s)| *s == self).unwrap().0
    }

    /// Clause selectors are false for rings that were not audited.
    fn eval(self, entry: &CatalogEntry, audit: Option<&AuditReport>) -> bool {
        let p = &entry.properties;
        let splits = |f: &dyn Fn(&super::audit::SplittingAudit) -> bool| {
            audit.is_some_and(|a| a.splittings.iter().any(f))
        };
        match self {
            Selector::Commutative => p.commutative,
            Selector::ZeroRing => entry.record.order == 1,
            Selector::Field => entry.record.order > 1 && p.counts.units + 1 == entry.record.order,
            Selector::Boolean => p.boolean_ring,
            Selector::Tripotent => p.tripotent_ring,
            Selector::WeaklyTripotent => p.weakly_tripotent_ring,
            Selector::InvoClean => p.invo_clean,
            Selector::StronglyInvoClean => p.strongly_invo_clean,
            Selector::NontrivialIdempotents => p.has_nontrivial_idempotents,
            Selector::Clause1LiteralHoldsForSomeSplitting => splits(&|s| s.clause1_literal),
            Selector::Clause1VariantHoldsForSomeSplitting => splits(&|s| s.clause1_paper_variant),
            Selector::Clause2CriterionFailsForSomeSplitting => splits(&|s| !s.clause2_criterion),
            Selector::Clause2EmbeddingFailsForSomeSplitting => {
                splits(&|s| !s.clause2_bounded_embedding)
            }
            Selector::TheoremLiteralHolds => audit.is_some_and(|a| a.verdicts.literal),
            Selector::TheoremCriterionHolds => audit.is_some_and(|a| a.verdicts.criterion),
            Selector::VerdictsDisagree => audit.is_some_and(|a| a.verdicts.disagree),
        }
    }
}

/// Conjunction of possibly negated selectors, e.g.
/// `weakly-tripotent AND NOT strongly-invo-clean`. The empty filter (or
/// `all`) accepts everything.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    terms: Vec<(bool, Selector)>,
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text.eq_ignore_ascii_case("all") {
            return Ok(Self::default());
        }
        let mut terms = Vec::new();
        let mut tokens = text.split_whitespace().peekable();
        loop {
            let mut negated = false;
            let mut word = tokens
                .next()
                .ok_or_else(|| Error::UnknownPredicate("<missing term>".into()))?;
            while word.eq_ignore_ascii_case("not") {
                negated = !negated;
                word = tokens
                    .next()
                    .ok_or_else(|| Error::UnknownPredicate("<missing term after NOT>".into()))?;
            }
            let sel = SELECTORS
                .iter()
                .find(|(n, _)| n.eq_ignore_ascii_case(word))
                .map(|(_, s)| *s)
                .ok_or_else(|| Error::UnknownPredicate(word.to_string()))?;
            terms.push((negated, sel));
            match tokens.next() {
                None => break,
                Some(t) if t.eq_ignore_ascii_case("and") => continue,
                Some(t) => return Err(Error::UnknownPredicate(t.to_string())),
            }
        }
        Ok(Self { terms })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("all");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(neg, s)| format!("{}{}", if *neg { "NOT " } else { "" }, s.name()))
            .collect();
        f.write_str(&parts.join(" AND "))
    }
}

impl Filter {
    pub fn accepts(&self, entry: &CatalogEntry, audit: Option<&AuditReport>) -> bool {
        self.terms
            .iter()
            .all(|&(neg, sel)| sel.eval(entry, audit) != neg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntEntry {
    #[serde(flatten)]
    pub entry: CatalogEntry,
    pub audit: Option<AuditReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub max_order: usize,
    pub filter: String,
    pub entries: Vec<HuntEntry>,
}

/// Catalog rings of order `<= max_order` accepted by `filter`, each with
/// its properties and, when weakly tripotent, its audit.
pub fn hunt(
    max_order: usize,
    filter: &str,
    enum_opts: &EnumerationOptions,
    audit_opts: &AuditOptions,
) -> Result<HuntReport> {
    let filter: Filter = filter.parse()?;
    let catalog = build_catalog(max_order, enum_opts)?;
    let report = hunt_in_catalog(&catalog, &filter, enum_opts.jobs, audit_opts)?;
    Ok(HuntReport {
        max_order,
        ..report
    })
}

/// Same as [`hunt`] over an existing catalog.
pub fn hunt_in_catalog(
    catalog: &[FiniteRing],
    filter: &Filter,
    jobs: usize,
    audit_opts: &AuditOptions,
) -> Result<HuntReport> {
    let needed = audit_opts
        .embed_bound
        .unwrap_or_else(|| catalog.iter().map(FiniteRing::order).max().unwrap_or(1));
    let pool = if needed <= catalog.iter().map(FiniteRing::order).max().unwrap_or(0) {
        R0Pool::from_catalog(catalog)
    } else {
        R0Pool::up_to(needed, jobs)?
    };
    let entries: Result<Vec<Option<HuntEntry>>> = with_pool(jobs, || {
        catalog
            .par_iter()
            .map(|ring| {
                let entry = CatalogEntry::new(ring);
                let audit = if entry.properties.weakly_tripotent_ring {
                    Some(audit_with_pool(ring, &pool, audit_opts)?)
                } else {
                    None
                };
                Ok(filter
                    .accepts(&entry, audit.as_ref())
                    .then_some(HuntEntry { entry, audit }))
            })
            .collect()
    });
    Ok(HuntReport {
        max_order: catalog.iter().map(FiniteRing::order).max().unwrap_or(0),
        filter: filter.to_string(),
        entries: entries?.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_parsing() {
        let f: Filter = "weakly-tripotent AND NOT strongly-invo-clean".parse().unwrap();
        assert_eq!(f.to_string(), "weakly-tripotent AND NOT strongly-invo-clean");
        assert_eq!("".parse::<Filter>().unwrap(), Filter::default());
        assert!(matches!(
            "weakly-tripotent AND sparkly".parse::<Filter>(),
            Err(Error::UnknownPredicate(w)) if w == "sparkly"
        ));
        assert!("weakly-tripotent OR boolean".parse::<Filter>().is_err());
        assert!("NOT".parse::<Filter>().is_err());
    }

    #[test]
    fn weakly_tripotent_up_to_four() {
        let r = hunt(4, "weakly-tripotent", &Default::default(), &Default::default()).unwrap();
        let mut labels: Vec<&str> = r.entries.iter().map(|e| e.entry.record.label.as_str()).collect();
        labels.sort();
        assert_eq!(labels, vec!["0", "Z2", "Z2 * Z2", "Z2[x]/(x^2)", "Z3", "Z4"]);
        assert!(r.entries.iter().all(|e| e.audit.is_some()));
    }
}

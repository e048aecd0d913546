//! Named catalog of small commutative rings and its JSON form.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{build_cyclic, build_poly_quotient, format_poly};
use crate::error::Result;
use crate::morphisms::{are_isomorphic, fingerprint, Fingerprint};
use crate::predicates::{has_nontrivial_idempotents, is_idempotent, ring_properties, RingProperties};
use crate::ring::{FiniteRing, RingRecord};
use crate::structure::peirce_splittings;

use super::enumerate::{check_bound, enumerate_rings, with_pool, EnumerationOptions};

/// Every commutative unital ring of order `1..=max_order`, one per
/// isomorphism class, sorted by (order, fingerprint, tables) and labelled.
pub fn build_catalog(max_order: usize, opts: &EnumerationOptions) -> Result<Vec<FiniteRing>> {
    check_bound(max_order, opts)?;
    let mut named: Vec<FiniteRing> = Vec::new();
    for n in 1..=max_order {
        let rings = enumerate_rings(n, true, opts)?;
        for (idx, ring) in rings.into_iter().enumerate() {
            let label = name_ring(&ring, idx, &named);
            named.push(ring.with_label(label));
        }
    }
    Ok(named)
}

/// Readable name: `Zn`, `GF(q)`, `Zm[x]/(f)`, a product of such names, or
/// `R{n}.{idx}` when none applies. `known` holds the already named rings of
/// smaller order.
fn name_ring(ring: &FiniteRing, idx: usize, known: &[FiniteRing]) -> String {
    let n = ring.order();
    if ring.is_zero_ring() {
        return "0".into();
    }
    if has_nontrivial_idempotents(ring) {
        let mut factors = Vec::new();
        local_factors(ring, &mut factors);
        let mut names: Vec<(usize, String)> = factors
            .iter()
            .map(|f| {
                let name = known
                    .iter()
                    .find(|k| are_isomorphic(k, f).is_some())
                    .map(|k| k.label().to_string())
                    .unwrap_or_else(|| format!("R{}?", f.order()));
                (f.order(), name)
            })
            .collect();
        names.sort();
        return names.into_iter().map(|(_, s)| s).collect::<Vec<_>>().join(" * ");
    }
    let ch = ring.characteristic();
    if ch == n {
        return format!("Z{n}");
    }
    let units = ring
        .elements()
        .filter(|&a| ring.elements().any(|b| ring.mul(a, b) == ring.one()))
        .count();
    if units == n - 1 {
        return format!("GF({n})");
    }
    if let Some(name) = monogenic_name(ring, ch) {
        return name;
    }
    format!("R{n}.{idx}")
}

fn local_factors(ring: &FiniteRing, out: &mut Vec<FiniteRing>) {
    let e = ring
        .elements()
        .find(|&a| a != 0 && a != ring.one() && is_idempotent(ring, a));
    match e {
        None => out.push(ring.clone()),
        Some(e) => {
            let split = peirce_splittings(ring)
                .expect("catalog rings are commutative")
                .into_iter()
                .find(|s| s.idempotent == e)
                .expect("splitting for every idempotent");
            local_factors(&split.part1, out);
            local_factors(&split.part2, out);
        }
    }
}

/// Tries `Z_ch[x]/(f)` for every monic `f` of the right degree.
fn monogenic_name(ring: &FiniteRing, ch: usize) -> Option<String> {
    let n = ring.order();
    let mut degree = 1;
    let mut size = ch;
    while size < n {
        size *= ch;
        degree += 1;
    }
    if size != n || degree < 2 {
        return None;
    }
    let base = build_cyclic(ch).ok()?;
    let target = fingerprint(ring);
    for code in 0..ch.pow(degree as u32) {
        let mut coeffs = vec![0i64; degree + 1];
        let mut rest = code;
        for i in (0..degree).rev() {
            coeffs[i] = (rest % ch) as i64;
            rest /= ch;
        }
        coeffs[degree] = 1;
        let cand = build_poly_quotient(&base, &coeffs).ok()?;
        if fingerprint(&cand) == target && are_isomorphic(&cand, ring).is_some() {
            return Some(format!("Z{ch}[x]/({})", format_poly(&coeffs)));
        }
    }
    None
}

/// One catalog record: the ring tables plus derived data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    #[serde(flatten)]
    pub record: RingRecord,
    pub properties: RingProperties,
    pub fingerprint: Fingerprint,
}

impl CatalogEntry {
    pub fn new(ring: &FiniteRing) -> Self {
        Self {
            record: ring.to_record(),
            properties: ring_properties(ring),
            fingerprint: fingerprint(ring),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub rings: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_rings(rings: &[FiniteRing], jobs: usize) -> Self {
        let entries = with_pool(jobs, || rings.par_iter().map(CatalogEntry::new).collect());
        Self { rings: entries }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes") + "\n"
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_rings(&self) -> Result<Vec<FiniteRing>> {
        self.rings
            .iter()
            .map(|e| FiniteRing::from_record(&e.record))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_names() {
        let cat = build_catalog(4, &EnumerationOptions::default()).unwrap();
        let mut names: Vec<&str> = cat.iter().map(|r| r.label()).collect();
        names.sort();
        assert_eq!(
            names,
            vec!["0", "GF(4)", "Z2", "Z2 * Z2", "Z2[x]/(x^2)", "Z3", "Z4"]
        );
    }

    #[test]
    fn json_round_trip() {
        let cat = build_catalog(3, &EnumerationOptions::default()).unwrap();
        let c = Catalog::from_rings(&cat, 1);
        let back = Catalog::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_rings().unwrap(), cat);
        assert!(c.to_json().contains("\"properties\""));
    }
}

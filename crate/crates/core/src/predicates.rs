//! Element and ring predicates: idempotent, nilpotent, unit, involution,
//! tripotent, weakly tripotent, Boolean, invo-clean.
//!
//! Ring-level predicates quantify over every element, so the zero ring
//! satisfies all of them (its single element is both `0` and `1`).

use serde::{Deserialize, Serialize};

use crate::ring::FiniteRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementFlags {
    pub idempotent: bool,
    /// Nilpotency index when nilpotent.
    pub nilpotent: Option<usize>,
    /// Two-sided inverse when a unit.
    pub unit: Option<usize>,
    pub involution: bool,
    pub tripotent: bool,
    pub weakly_tripotent: bool,
}

/// `element = v + r` with `v^2 = 1` and `r^2 = r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvoWitness {
    pub element: usize,
    pub v: usize,
    pub r: usize,
    pub commuting: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementCounts {
    pub idempotents: usize,
    pub nilpotents: usize,
    pub units: usize,
    pub tripotent: usize,
    pub weakly_tripotent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingProperties {
    pub commutative: bool,
    pub boolean_ring: bool,
    pub tripotent_ring: bool,
    pub weakly_tripotent_ring: bool,
    pub invo_clean: bool,
    pub strongly_invo_clean: bool,
    pub has_nontrivial_idempotents: bool,
    pub characteristic: usize,
    pub counts: ElementCounts,
}

pub fn is_idempotent(r: &FiniteRing, a: usize) -> bool {
    r.mul(a, a) == a
}

pub fn is_tripotent_element(r: &FiniteRing, a: usize) -> bool {
    r.power(a, 3) == a
}

/// `a^3 = a` or `(1 + a)^3 = 1 + a`.
pub fn is_weakly_tripotent_element(r: &FiniteRing, a: usize) -> bool {
    is_tripotent_element(r, a) || is_tripotent_element(r, r.add(r.one(), a))
}

/// Least `k >= 1` with `a^k = 0`, searching up to the ring order.
pub fn nilpotency_index(r: &FiniteRing, a: usize) -> Option<usize> {
    let mut x = a;
    for k in 1..=r.order() {
        if x == 0 {
            return Some(k);
        }
        x = r.mul(x, a);
    }
    None
}

pub fn inverse(r: &FiniteRing, a: usize) -> Option<usize> {
    r.elements()
        .find(|&b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one())
}

pub fn is_involution(r: &FiniteRing, a: usize) -> bool {
    r.mul(a, a) == r.one()
}

pub fn classify_element(r: &FiniteRing, a: usize) -> ElementFlags {
    ElementFlags {
        idempotent: is_idempotent(r, a),
        nilpotent: nilpotency_index(r, a),
        unit: inverse(r, a),
        involution: is_involution(r, a),
        tripotent: is_tripotent_element(r, a),
        weakly_tripotent: is_weakly_tripotent_element(r, a),
    }
}

pub fn is_boolean_ring(r: &FiniteRing) -> bool {
    r.elements().all(|a| is_idempotent(r, a))
}

pub fn is_tripotent_ring(r: &FiniteRing) -> bool {
    r.elements().all(|a| is_tripotent_element(r, a))
}

pub fn is_weakly_tripotent_ring(r: &FiniteRing) -> bool {
    r.elements().all(|a| is_weakly_tripotent_element(r, a))
}

pub fn has_nontrivial_idempotents(r: &FiniteRing) -> bool {
    r.elements()
        .any(|a| a != 0 && a != r.one() && is_idempotent(r, a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvoCleanStatus {
    pub invo_clean: bool,
    pub strongly: bool,
    /// One witness per decomposable element, in element order. A commuting
    /// witness is preferred when one exists.
    pub witnesses: Vec<InvoWitness>,
}

/// Exhaustive search for `a = v + r`, `v^2 = 1`, `r^2 = r`. Since `r` is
/// determined by `v`, candidates are scanned in increasing `v`.
pub fn invo_clean_status(r: &FiniteRing) -> InvoCleanStatus {
    let involutions: Vec<usize> = r.elements().filter(|&v| is_involution(r, v)).collect();
    let mut invo_clean = true;
    let mut strongly = true;
    let mut witnesses = Vec::new();
    for a in r.elements() {
        let mut first = None;
        let mut first_commuting = None;
        for &v in &involutions {
            let e = r.sub(a, v);
            if !is_idempotent(r, e) {
                continue;
            }
            let commuting = r.mul(v, e) == r.mul(e, v);
            let w = InvoWitness {
                element: a,
                v,
                r: e,
                commuting,
            };
            first.get_or_insert(w);
            if commuting {
                first_commuting = Some(w);
                break;
            }
        }
        invo_clean &= first.is_some();
        strongly &= first_commuting.is_some();
        if let Some(w) = first_commuting.or(first) {
            witnesses.push(w);
        }
    }
    InvoCleanStatus {
        invo_clean,
        strongly,
        witnesses,
    }
}

pub fn element_counts(r: &FiniteRing) -> ElementCounts {
    let mut c = ElementCounts::default();
    for a in r.elements() {
        let f = classify_element(r, a);
        c.idempotents += f.idempotent as usize;
        c.nilpotents += f.nilpotent.is_some() as usize;
        c.units += f.unit.is_some() as usize;
        c.tripotent += f.tripotent as usize;
        c.weakly_tripotent += f.weakly_tripotent as usize;
    }
    c
}

pub fn ring_properties(r: &FiniteRing) -> RingProperties {
    let invo = invo_clean_status(r);
    RingProperties {
        commutative: r.is_commutative(),
        boolean_ring: is_boolean_ring(r),
        tripotent_ring: is_tripotent_ring(r),
        weakly_tripotent_ring: is_weakly_tripotent_ring(r),
        invo_clean: invo.invo_clean,
        strongly_invo_clean: invo.strongly,
        has_nontrivial_idempotents: has_nontrivial_idempotents(r),
        characteristic: r.characteristic(),
        counts: element_counts(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn z(n: usize) -> FiniteRing {
        build_cyclic(n).unwrap()
    }

    fn dual() -> FiniteRing {
        build_poly_quotient(&z(2), &[0, 0, 1]).unwrap()
    }

    #[test]
    fn element_tripotency() {
        assert!(is_tripotent_element(&z(4), 3));
        assert!(!is_tripotent_element(&z(4), 2));
        assert!(is_weakly_tripotent_element(&z(4), 2));
        assert_eq!(z(4).power(z(4).add(1, 2), 3), 3);
        assert!(!is_weakly_tripotent_element(&z(5), 2));
        for r in [z(4), z(7), dual(), zero_ring()] {
            assert!(is_tripotent_element(&r, 0));
            assert!(is_weakly_tripotent_element(&r, r.one()));
        }
    }

    #[test]
    fn element_classification() {
        let d = dual();
        let f = classify_element(&d, 2);
        assert_eq!(f.nilpotent, Some(2));
        assert_eq!(f.unit, None);

        let one = classify_element(&z(5), 1);
        assert!(one.idempotent && one.involution && one.tripotent);
        assert_eq!(one.unit, Some(1));

        let three = classify_element(&z(4), 3);
        assert!(three.involution);
        assert_eq!(three.unit, Some(3));
    }

    #[test]
    fn ring_predicates() {
        let z4 = z(4);
        assert!(is_weakly_tripotent_ring(&z4));
        assert!(!is_tripotent_ring(&z4));
        assert!(!is_boolean_ring(&z4));
        assert!(is_weakly_tripotent_ring(&dual()));
        assert!(!is_tripotent_ring(&dual()));
        assert!(!is_weakly_tripotent_ring(&build_gf(4).unwrap()));
        assert!(is_tripotent_ring(&z(6)));
        let zr = zero_ring();
        assert!(is_boolean_ring(&zr) && is_tripotent_ring(&zr) && is_weakly_tripotent_ring(&zr));
        assert!(invo_clean_status(&zr).strongly);
    }

    #[test]
    fn invo_clean_witnesses() {
        let s = invo_clean_status(&z(4));
        assert!(s.invo_clean && s.strongly);
        let w2 = s.witnesses.iter().find(|w| w.element == 2).unwrap();
        assert_eq!((w2.v, w2.r), (1, 1));
        let w0 = s.witnesses.iter().find(|w| w.element == 0).unwrap();
        assert_eq!((w0.v, w0.r), (3, 1));
        assert!(invo_clean_status(&z(8)).strongly);

        let b = direct_product(&z(2), &z(2));
        assert!(is_boolean_ring(&b));
        assert!(invo_clean_status(&b).strongly);
        for a in b.elements() {
            assert!(is_idempotent(&b, b.add(b.one(), a)));
        }
        assert!(!invo_clean_status(&z(5)).invo_clean);
    }

    #[test]
    fn nontrivial_idempotents() {
        assert!(!has_nontrivial_idempotents(&z(4)));
        assert!(has_nontrivial_idempotents(&z(6)));
        let idem: Vec<_> = z(6).elements().filter(|&a| is_idempotent(&z(6), a)).collect();
        assert_eq!(idem, vec![0, 1, 3, 4]);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            assert!(!has_nontrivial_idempotents(&build_gf(q).unwrap()));
        }
    }

    #[test]
    fn properties_of_z4() {
        let p = ring_properties(&z(4));
        assert_eq!(p.characteristic, 4);
        assert_eq!(
            p.counts,
            ElementCounts {
                idempotents: 2,
                nilpotents: 2,
                units: 2,
                tripotent: 3,
                weakly_tripotent: 4
            }
        );
    }
}

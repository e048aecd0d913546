//! Ideals, radicals, quotients and idempotent splittings of finite
//! commutative rings.
//!
//! Every operation here refuses noncommutative input: one-sided ideals are
//! not modelled.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::construct::direct_product;
use crate::error::{Error, Result};
use crate::morphisms::Homomorphism;
use crate::predicates::{is_idempotent, nilpotency_index};
use crate::ring::FiniteRing;

/// A two-sided ideal, stored as a strictly increasing list of indices.
///
/// Ordered canonically: by size, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal {
    elements: Vec<usize>,
}

impl Ideal {
    /// Validates `elements` as an ideal of `r`.
    pub fn new(r: &FiniteRing, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&a| a >= r.order()) {
            return Err(Error::NotAnIdeal(format!("index {bad} out of range")));
        }
        let ideal = Self {
            elements: set.into_iter().collect(),
        };
        ideal.check(r)?;
        Ok(ideal)
    }

    fn from_sorted(elements: Vec<usize>) -> Self {
        Self { elements }
    }

    fn from_mask(mask: &[bool]) -> Self {
        Self::from_sorted(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &m)| m.then_some(i))
                .collect(),
        )
    }

    /// Re-checks the ideal invariants against `r`.
    pub fn check(&self, r: &FiniteRing) -> Result<()> {
        let mask = self.mask(r.order());
        if !mask[0] {
            return Err(Error::NotAnIdeal("does not contain 0".into()));
        }
        for &a in &self.elements {
            for &b in &self.elements {
                if !mask[r.add(a, b)] {
                    return Err(Error::NotAnIdeal(format!("{a} + {b} escapes")));
                }
            }
            for x in r.elements() {
                if !mask[r.mul(x, a)] || !mask[r.mul(a, x)] {
                    return Err(Error::NotAnIdeal(format!("{x} * {a} escapes")));
                }
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_zero(&self) -> bool {
        self.elements == [0]
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal::from_sorted(
            self.elements
                .iter()
                .copied()
                .filter(|&a| other.contains(a))
                .collect(),
        )
    }

    fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &a in &self.elements {
            m[a] = true;
        }
        m
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn require_commutative(r: &FiniteRing) -> Result<()> {
    if r.is_commutative() {
        Ok(())
    } else {
        Err(Error::NonCommutative)
    }
}

fn require_nonzero(r: &FiniteRing) -> Result<()> {
    if r.is_zero_ring() {
        Err(Error::ZeroRing)
    } else {
        Ok(())
    }
}

/// `R a = { r a : r in R }`.
pub fn principal_ideal(r: &FiniteRing, a: usize) -> Result<Ideal> {
    require_commutative(r)?;
    let mut mask = vec![false; r.order()];
    for x in r.elements() {
        mask[r.mul(x, a)] = true;
    }
    Ok(Ideal::from_mask(&mask))
}

fn ideal_sum(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let mut mask = vec![false; r.order()];
    for &a in i.elements() {
        for &b in j.elements() {
            mask[r.add(a, b)] = true;
        }
    }
    Ideal::from_mask(&mask)
}

/// Every ideal of `r` in canonical order, obtained by closing the principal
/// ideals under pairwise sums.
pub fn all_ideals(r: &FiniteRing) -> Result<Vec<Ideal>> {
    require_commutative(r)?;
    let mut found: BTreeSet<Ideal> = BTreeSet::new();
    for a in r.elements() {
        found.insert(principal_ideal(r, a)?);
    }
    let mut frontier: Vec<Ideal> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<Ideal> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for i in &frontier {
            for j in &snapshot {
                let s = ideal_sum(r, i, j);
                if found.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    Ok(found.into_iter().collect())
}

/// Proper ideals that are maximal under inclusion, in canonical order.
pub fn maximal_ideals(r: &FiniteRing) -> Result<Vec<Ideal>> {
    require_nonzero(r)?;
    let proper: Vec<Ideal> = all_ideals(r)?
        .into_iter()
        .filter(|i| i.len() < r.order())
        .collect();
    Ok(proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .cloned()
        .collect())
}

/// The set of nilpotent elements.
pub fn nilradical(r: &FiniteRing) -> Result<Ideal> {
    require_commutative(r)?;
    Ok(Ideal::from_sorted(
        r.elements()
            .filter(|&a| nilpotency_index(r, a).is_some())
            .collect(),
    ))
}

/// Intersection of all maximal ideals.
pub fn jacobson_radical(r: &FiniteRing) -> Result<Ideal> {
    let maxes = maximal_ideals(r)?;
    let mut it = maxes.into_iter();
    let first = it.next().expect("a nonzero finite ring has a maximal ideal");
    Ok(it.fold(first, |acc, m| acc.intersection(&m)))
}

/// First maximal ideal `L` (canonical order) with `L ∩ J(R) = {0}`.
pub fn find_trivial_meet_maximal(r: &FiniteRing) -> Result<Option<Ideal>> {
    let j = jacobson_radical(r)?;
    Ok(maximal_ideals(r)?
        .into_iter()
        .find(|l| l.intersection(&j).is_zero()))
}

/// `r / ideal`, with each coset represented by its least index. Coset `k`
/// of the result is the `k`-th smallest representative.
pub fn quotient_by_ideal(r: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing> {
    require_commutative(r)?;
    ideal.check(r)?;
    let n = r.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in r.elements() {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        for &i in ideal.elements() {
            coset_of[r.add(a, i)] = id;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(coset_of[r.add(a, b)]);
            mul.push(coset_of[r.mul(a, b)]);
        }
    }
    let label = format!("({}) / {:?}", r.label(), ideal.elements());
    Ok(FiniteRing::from_trusted(label, m, add, mul, coset_of[r.one()]))
}

/// `R ≅ eR × (1 - e)R` for an idempotent `e`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub idempotent: usize,
    /// `eR` with identity `e`.
    pub part1: FiniteRing,
    /// `(1 - e)R` with identity `1 - e`.
    pub part2: FiniteRing,
    /// Indices of `r` that make up `part1`, in local index order.
    pub part1_elements: Vec<usize>,
    pub part2_elements: Vec<usize>,
    /// `part1 × part2` with the row-major pair encoding.
    pub product: FiniteRing,
    /// `a ↦ (e a, (1 - e) a)`.
    pub iso_to_product: Homomorphism,
}

/// The ring `e R` as a standalone ring with identity `e`.
fn corner_ring(r: &FiniteRing, e: usize, label: String) -> (FiniteRing, Vec<usize>) {
    let elems: Vec<usize> = r
        .elements()
        .map(|a| r.mul(e, a))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut local = vec![usize::MAX; r.order()];
    for (i, &a) in elems.iter().enumerate() {
        local[a] = i;
    }
    let m = elems.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            add.push(local[r.add(a, b)]);
            mul.push(local[r.mul(a, b)]);
        }
    }
    let ring = FiniteRing::from_trusted(label, m, add, mul, local[e]);
    (ring, elems)
}

/// `0`, the ring's own label, or `e·R` for a proper idempotent `e`.
fn corner_label(r: &FiniteRing, e: usize) -> String {
    if e == 0 {
        "0".into()
    } else if e == r.one() {
        r.label().to_string()
    } else if r.label().contains(' ') {
        format!("{e}·({})", r.label())
    } else {
        format!("{e}·{}", r.label())
    }
}

/// One splitting per idempotent, in increasing idempotent index. The
/// idempotents `0` and `1` give the splittings with a zero-ring factor.
pub fn peirce_splittings(r: &FiniteRing) -> Result<Vec<Splitting>> {
    require_commutative(r)?;
    let mut out = Vec::new();
    for e in r.elements().filter(|&e| is_idempotent(r, e)) {
        let f = r.sub(r.one(), e);
        let (part1, part1_elements) = corner_ring(r, e, corner_label(r, e));
        let (part2, part2_elements) = corner_ring(r, f, corner_label(r, f));
        let product = direct_product(&part1, &part2);
        let local = |elems: &[usize], x: usize| elems.binary_search(&x).expect("in corner");
        let map: Vec<usize> = r
            .elements()
            .map(|a| {
                local(&part1_elements, r.mul(e, a)) * part2.order()
                    + local(&part2_elements, r.mul(f, a))
            })
            .collect();
        let iso_to_product = Homomorphism::new(r, &product, map)?;
        debug_assert!(iso_to_product.is_bijective(&product));
        out.push(Splitting {
            idempotent: e,
            part1,
            part2,
            part1_elements,
            part2_elements,
            product,
            iso_to_product,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::*;

    fn z(n: usize) -> FiniteRing {
        build_cyclic(n).unwrap()
    }

    fn ideal(xs: &[usize]) -> Ideal {
        Ideal::from_sorted(xs.to_vec())
    }

    #[test]
    fn principal_ideals() {
        assert_eq!(principal_ideal(&z(4), 2).unwrap(), ideal(&[0, 2]));
        assert_eq!(principal_ideal(&z(4), 0).unwrap(), ideal(&[0]));
        assert_eq!(principal_ideal(&z(5), 3).unwrap(), ideal(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn ideal_lattices() {
        assert_eq!(
            all_ideals(&z(4)).unwrap(),
            vec![ideal(&[0]), ideal(&[0, 2]), ideal(&[0, 1, 2, 3])]
        );
        assert_eq!(
            all_ideals(&z(6)).unwrap(),
            vec![
                ideal(&[0]),
                ideal(&[0, 3]),
                ideal(&[0, 2, 4]),
                ideal(&[0, 1, 2, 3, 4, 5])
            ]
        );
        assert_eq!(all_ideals(&build_gf(9).unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn maximal_ideals_and_radicals() {
        assert_eq!(maximal_ideals(&z(4)).unwrap(), vec![ideal(&[0, 2])]);
        assert_eq!(
            maximal_ideals(&z(6)).unwrap(),
            vec![ideal(&[0, 3]), ideal(&[0, 2, 4])]
        );
        assert_eq!(maximal_ideals(&build_gf(8).unwrap()).unwrap(), vec![ideal(&[0])]);
        assert_eq!(maximal_ideals(&zero_ring()).unwrap_err(), Error::ZeroRing);

        assert_eq!(nilradical(&z(4)).unwrap(), ideal(&[0, 2]));
        assert_eq!(nilradical(&z(6)).unwrap(), ideal(&[0]));
        let dual = build_poly_quotient(&z(2), &[0, 0, 1]).unwrap();
        assert_eq!(nilradical(&dual).unwrap(), ideal(&[0, 2]));

        assert_eq!(jacobson_radical(&z(4)).unwrap(), nilradical(&z(4)).unwrap());
        assert_eq!(jacobson_radical(&build_gf(4).unwrap()).unwrap(), ideal(&[0]));
        assert_eq!(jacobson_radical(&dual).unwrap(), ideal(&[0, 2]));
    }

    #[test]
    fn trivial_meet_maximal() {
        assert_eq!(find_trivial_meet_maximal(&z(4)).unwrap(), None);
        let dual = build_poly_quotient(&z(2), &[0, 0, 1]).unwrap();
        assert_eq!(find_trivial_meet_maximal(&dual).unwrap(), None);
        assert_eq!(find_trivial_meet_maximal(&z(6)).unwrap(), Some(ideal(&[0, 3])));
    }

    #[test]
    fn quotients() {
        let q = quotient_by_ideal(&z(4), &ideal(&[0, 2])).unwrap();
        assert_eq!(q.add_table(), z(2).add_table());
        assert_eq!(q.mul_table(), z(2).mul_table());
        let same = quotient_by_ideal(&z(6), &ideal(&[0])).unwrap();
        assert_eq!(same.mul_table(), z(6).mul_table());
        let all = quotient_by_ideal(&z(6), &ideal(&[0, 1, 2, 3, 4, 5])).unwrap();
        assert!(all.is_zero_ring());
        assert!(quotient_by_ideal(&z(6), &ideal(&[0, 2])).is_err());
    }

    #[test]
    fn ideal_validation() {
        assert!(Ideal::new(&z(6), [0, 3]).is_ok());
        assert!(Ideal::new(&z(6), [0, 2]).is_err());
        assert!(Ideal::new(&z(6), [3]).is_err());
        assert!(Ideal::new(&z(6), [0, 9]).is_err());
    }

    #[test]
    fn splittings() {
        let s4 = peirce_splittings(&z(4)).unwrap();
        assert_eq!(s4.iter().map(|s| s.idempotent).collect::<Vec<_>>(), vec![0, 1]);
        assert!(s4[0].part1.is_zero_ring());
        assert_eq!(s4[0].part2.order(), 4);

        let s6 = peirce_splittings(&z(6)).unwrap();
        let at4 = s6.iter().find(|s| s.idempotent == 4).unwrap();
        assert_eq!(at4.part1_elements, vec![0, 2, 4]);
        assert_eq!(at4.part1_elements[at4.part1.one()], 4);
        assert_eq!(at4.part2_elements, vec![0, 3]);
        assert_eq!(at4.part2_elements[at4.part2.one()], 3);
        assert!(at4.iso_to_product.is_bijective(&at4.product));

        let s0 = peirce_splittings(&zero_ring()).unwrap();
        assert_eq!(s0.len(), 1);
        assert!(s0[0].part1.is_zero_ring() && s0[0].part2.is_zero_ring());
    }

    #[test]
    fn noncommutative_input_is_refused() {
        // upper triangular 2x2 matrices over Z2, elements (a, b, d) encoded a*4 + b*2 + d
        let n = 8;
        let dec = |i: usize| (i >> 2 & 1, i >> 1 & 1, i & 1);
        let enc = |(a, b, d): (usize, usize, usize)| a << 2 | b << 1 | d;
        let mut add = vec![];
        let mut mul = vec![];
        for x in 0..n {
            for y in 0..n {
                let (a, b, d) = dec(x);
                let (e, f, g) = dec(y);
                add.push(enc(((a + e) % 2, (b + f) % 2, (d + g) % 2)));
                mul.push(enc((a * e % 2, (a * f + b * g) % 2, d * g % 2)));
            }
        }
        let r = FiniteRing::from_tables("T2", n, add, mul, enc((1, 0, 1))).unwrap();
        assert!(!r.is_commutative());
        assert_eq!(all_ideals(&r).unwrap_err(), Error::NonCommutative);
        assert_eq!(nilradical(&r).unwrap_err(), Error::NonCommutative);
        assert_eq!(principal_ideal(&r, 1).unwrap_err(), Error::NonCommutative);
        assert!(peirce_splittings(&r).is_err());
    }
}

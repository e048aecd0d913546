//! Finite unital rings stored as validated Cayley tables.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::lcm;
use crate::error::{Error, Result};

/// Largest order any constructor will materialise. Tables are dense, so a
/// ring of order `n` costs `2 n^2` words.
pub const MAX_ORDER: usize = 1024;

/// A finite ring with unity. Elements are the indices `0..order`; index `0`
/// is the additive identity.
///
/// Values are immutable once built. Every public constructor either
/// validates the tables or produces them by a construction that is correct
/// by design (and covered by the axiom tests).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    order: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    one: usize,
    commutative: bool,
    label: String,
}

impl FiniteRing {
    /// Builds a ring from row-major tables after a full axiom check.
    pub fn from_tables(
        label: impl Into<String>,
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("ring order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge(order, MAX_ORDER));
        }
        let report = verify_axioms(order, &add, &mul, one);
        if let Some(v) = report.violations.first() {
            return Err(Error::AxiomViolation(format!(
                "{} (witness {:?}){}",
                v.axiom,
                v.witness,
                if report.violations.len() > 1 {
                    format!(" and {} more", report.violations.len() - 1)
                } else {
                    String::new()
                }
            )));
        }
        Ok(Self::from_trusted(label.into(), order, add, mul, one))
    }

    /// Assembles a ring from tables the caller guarantees to be valid.
    pub(crate) fn from_trusted(
        label: String,
        order: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
    ) -> Self {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        let neg = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| add[a * order + b] == 0)
                    .expect("additive inverse exists")
            })
            .collect();
        let commutative =
            (0..order).all(|a| (0..a).all(|b| mul[a * order + b] == mul[b * order + a]));
        Self {
            order,
            add,
            mul,
            neg,
            one,
            commutative,
            label,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Row-major addition table.
    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    /// Row-major multiplication table.
    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    /// `a` multiplied by itself `k` times; `power(a, 0)` is `one`.
    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut acc = self.one;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Adds `a` to itself `k` times.
    pub fn scale(&self, a: usize, k: u64) -> usize {
        let k = k % self.additive_order(a) as u64;
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    /// Image of the integer `c` under the canonical map `Z -> R`.
    pub fn integer(&self, c: i64) -> usize {
        let pos = self.scale(self.one, c.unsigned_abs());
        if c < 0 {
            self.neg(pos)
        } else {
            pos
        }
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    /// Additive order of `one`; `1` for the zero ring.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Exponent of the additive group (`lcm` of all additive orders).
    pub fn additive_exponent(&self) -> usize {
        self.elements()
            .fold(1u64, |acc, a| lcm(acc, self.additive_order(a) as u64)) as usize
    }

    /// Renames elements: element `a` becomes `perm[a]`. The permutation must
    /// fix `0` so the additive identity stays at index `0`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, ring has order {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        if perm[0] != 0 {
            return Err(Error::InvalidArgument(
                "relabeling must keep the additive identity at index 0".into(),
            ));
        }
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[perm[a] * n + perm[b]] = perm[self.add(a, b)];
                mul[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(Self::from_trusted(self.label.clone(), n, add, mul, perm[self.one]))
    }

    pub fn to_record(&self) -> RingRecord {
        let n = self.order;
        RingRecord {
            label: self.label.clone(),
            order: n,
            one: self.one,
            add: self.add.chunks(n).map(<[usize]>::to_vec).collect(),
            mul: self.mul.chunks(n).map(<[usize]>::to_vec).collect(),
        }
    }

    pub fn from_record(record: &RingRecord) -> Result<Self> {
        let n = record.order;
        let flatten = |rows: &[Vec<usize>], name: &str| -> Result<Vec<usize>> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidArgument(format!(
                    "`{name}` table must be {n}x{n}"
                )));
            }
            Ok(rows.concat())
        };
        let add = flatten(&record.add, "add")?;
        let mul = flatten(&record.mul, "mul")?;
        Self::from_tables(record.label.clone(), n, add, mul, record.one)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

/// Serialized form of a ring. Zero is implicitly index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRecord {
    pub label: String,
    pub order: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    TableShape,
    TableRange,
    AdditiveIdentity,
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    MultiplicativeIdentity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::TableShape => "table shape",
            Axiom::TableRange => "table range",
            Axiom::AdditiveIdentity => "additive identity at index 0",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveInverse => "additive inverses",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    pub commutative: bool,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// Exhaustively checks row-major tables against the unital ring axioms.
///
/// Each violated axiom is reported once, with the first witness found by a
/// scan in lexicographic order of the element tuple. Shape and range
/// problems short-circuit the remaining checks.
pub fn verify_axioms(order: usize, add: &[usize], mul: &[usize], one: usize) -> AxiomReport {
    let n = order;
    let mut report = AxiomReport::default();
    if n == 0 || add.len() != n * n || mul.len() != n * n {
        report.violations.push(Violation {
            axiom: Axiom::TableShape,
            witness: vec![add.len(), mul.len()],
        });
        return report;
    }
    if let Some(pos) = add.iter().chain(mul.iter()).position(|&x| x >= n) {
        let pos = pos % (n * n);
        report.violations.push(Violation {
            axiom: Axiom::TableRange,
            witness: vec![pos / n, pos % n],
        });
        return report;
    }
    if one >= n {
        report.violations.push(Violation {
            axiom: Axiom::TableRange,
            witness: vec![one],
        });
        return report;
    }

    let ad = |a: usize, b: usize| add[a * n + b];
    let mu = |a: usize, b: usize| mul[a * n + b];
    let mut push = |axiom, witness| report.violations.push(Violation { axiom, witness });

    if let Some(a) = (0..n).find(|&a| ad(0, a) != a || ad(a, 0) != a) {
        push(Axiom::AdditiveIdentity, vec![a]);
    }
    if let Some(w) = triples(n).find(|&(a, b, c)| ad(ad(a, b), c) != ad(a, ad(b, c))) {
        push(Axiom::AdditiveAssociativity, vec![w.0, w.1, w.2]);
    }
    if let Some(w) = pairs(n).find(|&(a, b)| ad(a, b) != ad(b, a)) {
        push(Axiom::AdditiveCommutativity, vec![w.0, w.1]);
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| ad(a, b) == 0)) {
        push(Axiom::AdditiveInverse, vec![a]);
    }
    if let Some(w) = triples(n).find(|&(a, b, c)| mu(mu(a, b), c) != mu(a, mu(b, c))) {
        push(Axiom::MultiplicativeAssociativity, vec![w.0, w.1, w.2]);
    }
    if let Some(w) = triples(n).find(|&(a, b, c)| mu(a, ad(b, c)) != ad(mu(a, b), mu(a, c))) {
        push(Axiom::LeftDistributivity, vec![w.0, w.1, w.2]);
    }
    if let Some(w) = triples(n).find(|&(a, b, c)| mu(ad(a, b), c) != ad(mu(a, c), mu(b, c))) {
        push(Axiom::RightDistributivity, vec![w.0, w.1, w.2]);
    }
    if let Some(a) = (0..n).find(|&a| mu(one, a) != a || mu(a, one) != a) {
        push(Axiom::MultiplicativeIdentity, vec![a]);
    }

    report.commutative = pairs(n).all(|(a, b)| mu(a, b) == mu(b, a));
    report
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_cyclic, build_poly_quotient, direct_product, zero_ring};

    #[test]
    fn patched_identity_is_reported() {
        let z4 = build_cyclic(4).unwrap();
        let mut mul = z4.mul_table().to_vec();
        mul[4 + 3] = 2;
        let report = verify_axioms(4, z4.add_table(), &mul, 1);
        let v = report.violated(Axiom::MultiplicativeIdentity).unwrap();
        assert_eq!(v.witness, vec![3]);
    }

    #[test]
    fn patched_associativity_is_reported_with_first_triple() {
        let z4 = build_cyclic(4).unwrap();
        let mut mul = z4.mul_table().to_vec();
        mul[2 * 4 + 3] = 1;
        // independent scan for the first non-associative triple
        let m = |a: usize, b: usize| mul[a * 4 + b];
        let mut expected = None;
        'scan: for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        expected = Some(vec![a, b, c]);
                        break 'scan;
                    }
                }
            }
        }
        let report = verify_axioms(4, z4.add_table(), &mul, 1);
        let v = report.violated(Axiom::MultiplicativeAssociativity).unwrap();
        assert_eq!(Some(v.witness.clone()), expected);
        assert!(!report.commutative);
    }

    #[test]
    fn from_tables_rejects_bad_tables() {
        let z4 = build_cyclic(4).unwrap();
        let mut mul = z4.mul_table().to_vec();
        mul[5] = 3;
        let err = FiniteRing::from_tables("bad", 4, z4.add_table().to_vec(), mul, 1).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
        let err = FiniteRing::from_tables("bad", 2, vec![0, 1, 1], vec![0; 4], 1).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
        let report = verify_axioms(2, &[0, 1, 1, 7], &[0; 4], 1);
        assert_eq!(report.violations[0].axiom, Axiom::TableRange);
    }

    #[test]
    fn power_and_characteristic() {
        let z4 = build_cyclic(4).unwrap();
        assert_eq!(z4.power(3, 3), 3);
        assert_eq!(z4.power(2, 0), 1);
        assert_eq!(z4.characteristic(), 4);
        let z2 = build_cyclic(2).unwrap();
        let dual = build_poly_quotient(&z2, &[0, 0, 1]).unwrap();
        assert_eq!(dual.characteristic(), 2);
        // x is index 2 under the low-degree-first digit encoding
        assert_eq!(dual.power(2, 2), 0);
        for a in dual.elements() {
            assert_eq!(dual.power(a, 1), a);
        }
        let z6 = direct_product(&z2, &build_cyclic(3).unwrap());
        assert_eq!(z6.characteristic(), 6);
        assert_eq!(zero_ring().characteristic(), 1);
    }

    #[test]
    fn record_round_trip() {
        let r = direct_product(&build_cyclic(2).unwrap(), &build_cyclic(3).unwrap());
        let back = FiniteRing::from_record(&r.to_record()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn relabel_rejects_moving_zero() {
        let z3 = build_cyclic(3).unwrap();
        assert!(z3.relabel(&[1, 0, 2]).is_err());
        let r = z3.relabel(&[0, 2, 1]).unwrap();
        assert_eq!(r.one(), 2);
        assert!(verify_axioms(3, r.add_table(), r.mul_table(), r.one()).is_ok());
    }
}

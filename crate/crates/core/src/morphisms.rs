//! Unital ring homomorphisms, embeddings, isomorphisms and fingerprints.
//!
//! All maps here send `1` to `1`. Searches assign images to a minimal
//! generating set of the source and propagate the images through `+` and
//! `·` until the map is total or a contradiction appears.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::predicates::{classify_element, element_counts, ElementFlags};
use crate::ring::FiniteRing;

/// A validated unital homomorphism, stored as the image of each source
/// index. Serializes as the bare image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    /// Checks that `map` preserves `+`, `·` and `1` from `source` to `target`.
    pub fn new(source: &FiniteRing, target: &FiniteRing, map: Vec<usize>) -> Result<Self> {
        if let Some(reason) = hom_defect(source, target, &map) {
            return Err(Error::InvalidHomomorphism(reason));
        }
        Ok(Self { map })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|x| seen.insert(*x))
    }

    pub fn is_bijective(&self, target: &FiniteRing) -> bool {
        self.map.len() == target.order() && self.is_injective()
    }

    /// Re-validates against a pair of rings.
    pub fn is_valid_for(&self, source: &FiniteRing, target: &FiniteRing) -> bool {
        hom_defect(source, target, &self.map).is_none()
    }
}

fn hom_defect(source: &FiniteRing, target: &FiniteRing, map: &[usize]) -> Option<String> {
    if map.len() != source.order() {
        return Some(format!(
            "map has {} entries for a source of order {}",
            map.len(),
            source.order()
        ));
    }
    if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
        return Some(format!("image {bad} out of range"));
    }
    if map[source.one()] != target.one() {
        return Some("one is not mapped to one".into());
    }
    for a in source.elements() {
        for b in source.elements() {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Some(format!("addition not preserved at ({a}, {b})"));
            }
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Some(format!("multiplication not preserved at ({a}, {b})"));
            }
        }
    }
    None
}

/// Smallest unital subring containing `gens`.
pub fn generated_subring(r: &FiniteRing, gens: &[usize]) -> Vec<bool> {
    let mut inside = vec![false; r.order()];
    let mut members = Vec::new();
    let mut queue = vec![0, r.one()];
    queue.extend_from_slice(gens);
    while let Some(x) = queue.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        members.push(x);
        for &y in &members {
            for z in [r.add(x, y), r.mul(x, y), r.mul(y, x)] {
                if !inside[z] {
                    queue.push(z);
                }
            }
        }
    }
    inside
}

/// Greedy inclusion-minimal generating set: add each element (in index
/// order) not yet generated, then drop any generator the others cover.
pub fn minimal_generators(r: &FiniteRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut covered = generated_subring(r, &[]);
    for a in r.elements() {
        if !covered[a] {
            gens.push(a);
            covered = generated_subring(r, &gens);
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if generated_subring(r, &rest).iter().all(|&c| c) {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

const UNSET: usize = usize::MAX;

/// Partial map under construction.
#[derive(Clone)]
struct PartialMap {
    image: Vec<usize>,
    defined: Vec<usize>,
    used: Vec<bool>,
}

struct MapSearch<'a> {
    source: &'a FiniteRing,
    target: &'a FiniteRing,
    injective: bool,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl<'a> MapSearch<'a> {
    fn new(
        source: &'a FiniteRing,
        target: &'a FiniteRing,
        injective: bool,
        compatible: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let gens = minimal_generators(source);
        let candidates = gens
            .iter()
            .map(|&g| target.elements().filter(|&t| compatible(g, t)).collect())
            .collect();
        Self {
            source,
            target,
            injective,
            gens,
            candidates,
        }
    }

    /// Records `a ↦ t` and closes the map under `+` and `·`.
    fn assign(&self, state: &mut PartialMap, a: usize, t: usize) -> bool {
        let (src, dst) = (self.source, self.target);
        let mut queue = vec![(a, t)];
        while let Some((x, tx)) = queue.pop() {
            match state.image[x] {
                UNSET => {}
                prev if prev == tx => continue,
                _ => return false,
            }
            if self.injective && state.used[tx] {
                return false;
            }
            state.image[x] = tx;
            state.used[tx] = true;
            state.defined.push(x);
            for i in 0..state.defined.len() {
                let y = state.defined[i];
                let ty = state.image[y];
                let forced = [
                    (src.add(x, y), dst.add(tx, ty)),
                    (src.mul(x, y), dst.mul(tx, ty)),
                    (src.mul(y, x), dst.mul(ty, tx)),
                ];
                for (z, tz) in forced {
                    match state.image[z] {
                        UNSET => queue.push((z, tz)),
                        prev if prev == tz => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn run(&self, visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>) {
        let n = self.source.order();
        let mut start = PartialMap {
            image: vec![UNSET; n],
            defined: Vec::new(),
            used: vec![false; self.target.order()],
        };
        if !self.assign(&mut start, 0, 0) || !self.assign(&mut start, self.source.one(), self.target.one()) {
            return;
        }
        let _ = self.extend(start, 0, visit);
    }

    fn extend(
        &self,
        state: PartialMap,
        depth: usize,
        visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == self.gens.len() {
            debug_assert!(state.image.iter().all(|&x| x != UNSET));
            if hom_defect(self.source, self.target, &state.image).is_none() {
                return visit(state.image);
            }
            return ControlFlow::Continue(());
        }
        let g = self.gens[depth];
        if state.image[g] != UNSET {
            return self.extend(state, depth + 1, visit);
        }
        for &t in &self.candidates[depth] {
            let mut next = state.clone();
            if self.assign(&mut next, g, t) {
                self.extend(next, depth + 1, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Unital homomorphisms `a -> b`, ordered lexicographically by the images of
/// the generators of `a`.
pub fn enumerate_unital_homs(a: &FiniteRing, b: &FiniteRing) -> Vec<Homomorphism> {
    let mut out = Vec::new();
    for_each_unital_hom(a, b, false, |h| {
        out.push(h);
        ControlFlow::Continue(())
    });
    out
}

fn for_each_unital_hom(
    a: &FiniteRing,
    b: &FiniteRing,
    injective: bool,
    mut f: impl FnMut(Homomorphism) -> ControlFlow<()>,
) {
    let src_orders: Vec<usize> = a.elements().map(|x| a.additive_order(x)).collect();
    let dst_orders: Vec<usize> = b.elements().map(|x| b.additive_order(x)).collect();
    let search = MapSearch::new(a, b, injective, |g, t| {
        if injective {
            dst_orders[t] == src_orders[g]
        } else {
            src_orders[g].is_multiple_of(dst_orders[t])
        }
    });
    search.run(&mut |map| f(Homomorphism { map }));
}

/// First injective unital homomorphism `a -> b` in enumeration order.
pub fn find_embedding(a: &FiniteRing, b: &FiniteRing) -> Option<Homomorphism> {
    if a.order() > b.order() || a.characteristic() != b.characteristic() {
        return None;
    }
    let mut found = None;
    for_each_unital_hom(a, b, true, |h| {
        found = Some(h);
        ControlFlow::Break(())
    });
    found
}

/// Invariant summary used to rule out isomorphism cheaply.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub characteristic: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub units: usize,
    pub tripotent: usize,
    pub weakly_tripotent: usize,
    /// Sorted additive orders of all elements.
    pub additive_orders: Vec<usize>,
    /// Sorted multiplicative orders of the units.
    pub unit_orders: Vec<usize>,
}

pub fn multiplicative_order(r: &FiniteRing, u: usize) -> Option<usize> {
    let mut x = u;
    for k in 1..=r.order() {
        if x == r.one() {
            return Some(k);
        }
        x = r.mul(x, u);
    }
    None
}

pub fn fingerprint(r: &FiniteRing) -> Fingerprint {
    let counts = element_counts(r);
    let mut additive_orders: Vec<usize> = r.elements().map(|a| r.additive_order(a)).collect();
    additive_orders.sort_unstable();
    let mut unit_orders: Vec<usize> = r
        .elements()
        .filter_map(|a| multiplicative_order(r, a))
        .collect();
    unit_orders.sort_unstable();
    Fingerprint {
        order: r.order(),
        characteristic: r.characteristic(),
        idempotents: counts.idempotents,
        nilpotents: counts.nilpotents,
        units: counts.units,
        tripotent: counts.tripotent,
        weakly_tripotent: counts.weakly_tripotent,
        additive_orders,
        unit_orders,
    }
}

/// Isomorphism-invariant label of a single element, used to prune
/// candidate images.
#[derive(Clone, Copy, PartialEq, Eq)]
struct ElementSignature {
    additive_order: usize,
    flags: (bool, Option<usize>, bool, bool, bool, bool),
    mult_order: Option<usize>,
}

fn signatures(r: &FiniteRing) -> Vec<ElementSignature> {
    r.elements()
        .map(|a| {
            let ElementFlags {
                idempotent,
                nilpotent,
                unit,
                involution,
                tripotent,
                weakly_tripotent,
            } = classify_element(r, a);
            ElementSignature {
                additive_order: r.additive_order(a),
                flags: (
                    idempotent,
                    nilpotent,
                    unit.is_some(),
                    involution,
                    tripotent,
                    weakly_tripotent,
                ),
                mult_order: multiplicative_order(r, a),
            }
        })
        .collect()
}

/// An isomorphism `a -> b` when one exists.
pub fn are_isomorphic(a: &FiniteRing, b: &FiniteRing) -> Option<Homomorphism> {
    if a.order() != b.order() || fingerprint(a) != fingerprint(b) {
        return None;
    }
    isomorphism_unfiltered(a, b)
}

/// Isomorphism search without the fingerprint pre-check, for callers that
/// already compared fingerprints.
pub(crate) fn isomorphism_unfiltered(a: &FiniteRing, b: &FiniteRing) -> Option<Homomorphism> {
    if a.order() != b.order() {
        return None;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let search = MapSearch::new(a, b, true, |g, t| sa[g] == sb[t]);
    let mut found = None;
    search.run(&mut |map| {
        found = Some(Homomorphism { map });
        ControlFlow::Break(())
    });
    found
}

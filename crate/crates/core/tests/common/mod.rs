//! Shared fixtures and brute-force oracles. Nothing here calls into the
//! search paths under test except for fetching catalog rings.
#![allow(dead_code)]

use std::sync::OnceLock;

use finring_core::search::{build_catalog, EnumerationOptions};
use finring_core::FiniteRing;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn catalog_16() -> &'static [FiniteRing] {
    static CAT: OnceLock<Vec<FiniteRing>> = OnceLock::new();
    CAT.get_or_init(|| {
        build_catalog(
            16,
            &EnumerationOptions {
                allow_large: true,
                jobs: 0,
            },
        )
        .unwrap()
    })
}

pub fn catalog_up_to(n: usize) -> impl Iterator<Item = &'static FiniteRing> {
    catalog_16().iter().filter(move |r| r.order() <= n)
}

/// Uniform permutation of `0..n` fixing 0.
pub fn random_relabeling<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    std::iter::once(0).chain(rest).collect()
}

/// Every permutation of `1..n` (with 0 fixed), via Heap's algorithm.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut tail: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    heap(tail.len(), &mut tail, &mut out);
    out.into_iter()
        .map(|t| std::iter::once(0).chain(t).collect())
        .collect()
}

/// Plain tables, independent of `FiniteRing`.
#[derive(Clone, Debug)]
pub struct Tables {
    pub n: usize,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub one: usize,
}

impl Tables {
    pub fn of(r: &FiniteRing) -> Self {
        Self {
            n: r.order(),
            add: r.add_table().to_vec(),
            mul: r.mul_table().to_vec(),
            one: r.one(),
        }
    }
}

/// Isomorphism by trying every bijection fixing 0.
pub fn brute_isomorphic(a: &Tables, b: &Tables, perms: &[Vec<usize>]) -> bool {
    if a.n != b.n {
        return false;
    }
    let n = a.n;
    perms.iter().any(|p| {
        p[a.one] == b.one
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    p[a.add[x * n + y]] == b.add[p[x] * n + p[y]]
                        && p[a.mul[x * n + y]] == b.mul[p[x] * n + p[y]]
                })
            })
    })
}

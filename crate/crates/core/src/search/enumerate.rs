//! Enumeration of commutative unital rings of a given order by structure
//! constants over each additive group type.
//!
//! For a group `⊕ Z_{d_i}` with generators `g_i`, a ring is fixed by the
//! products `g_i g_j`. Each `p`-primary part of a unital ring is a ring
//! whose identity has maximal additive order, and a cyclic subgroup of
//! maximal order is a direct summand. So without loss every ring has
//! `1 = Σ_p h_p` where `h_p` is the first (largest) generator of the
//! `p`-block. That fixes all products involving a block head, and products
//! across different primes vanish. Only products between non-head
//! generators of the same block are free; they are assigned by backtracking
//! with associativity checked on generator triples as soon as it can be
//! evaluated. Commutativity, distributivity and the identity law then hold
//! by construction.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::morphisms::{fingerprint, isomorphism_unfiltered, Fingerprint};
use crate::ring::FiniteRing;

use super::groups::{abelian_group_types, GroupType};

/// Orders above this need [`EnumerationOptions::allow_large`].
pub const DEFAULT_MAX_ORDER: usize = 8;
/// Orders above this are never enumerated.
pub const HARD_MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerationOptions {
    /// Permit orders in `DEFAULT_MAX_ORDER + 1 ..= HARD_MAX_ORDER`.
    pub allow_large: bool,
    /// Worker threads; `0` uses rayon's default.
    pub jobs: usize,
}

pub(crate) fn check_bound(n: usize, opts: &EnumerationOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("ring order must be positive".into()));
    }
    if n > HARD_MAX_ORDER {
        return Err(Error::BoundExceeded(format!(
            "order {n} is above the hard cap {HARD_MAX_ORDER}"
        )));
    }
    if n > DEFAULT_MAX_ORDER && !opts.allow_large {
        return Err(Error::BoundExceeded(format!(
            "order {n} is above {DEFAULT_MAX_ORDER}; enable large orders explicitly"
        )));
    }
    Ok(())
}

pub(crate) fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// All commutative unital rings of order `n` up to isomorphism, sorted by
/// (fingerprint, addition table, multiplication table). Within an
/// isomorphism class the representative is the first candidate in
/// lexicographic structure-constant order.
///
/// Labels are placeholders; [`super::catalog`] assigns readable names.
pub fn enumerate_rings(
    n: usize,
    commutative: bool,
    opts: &EnumerationOptions,
) -> Result<Vec<FiniteRing>> {
    if !commutative {
        return Err(Error::Unsupported(
            "only commutative rings are enumerated".into(),
        ));
    }
    check_bound(n, opts)?;
    Ok(with_pool(opts.jobs, || enumerate_in_pool(n)))
}

fn enumerate_in_pool(n: usize) -> Vec<FiniteRing> {
    let mut candidates: Vec<FiniteRing> = Vec::new();
    for group in abelian_group_types(n as u64) {
        let space = StructureSpace::new(&group);
        let mut found = space.solutions();
        // workers emit in DFS order already; sorting keeps the merge
        // independent of how the space was partitioned
        found.sort();
        candidates.extend(found.par_iter().map(|free| space.build(free)).collect::<Vec<_>>());
    }
    let prints: Vec<Fingerprint> = candidates.par_iter().map(fingerprint).collect();

    let mut reps: Vec<(Fingerprint, FiniteRing)> = Vec::new();
    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    for (ring, fp) in candidates.into_iter().zip(prints) {
        let bucket = buckets.entry(fp.clone()).or_default();
        if bucket
            .iter()
            .any(|&i| isomorphism_unfiltered(&reps[i].1, &ring).is_some())
        {
            continue;
        }
        bucket.push(reps.len());
        reps.push((fp, ring));
    }
    reps.sort_by(|a, b| {
        a.0.cmp(&b.0)
            .then_with(|| a.1.add_table().cmp(b.1.add_table()))
            .then_with(|| a.1.mul_table().cmp(b.1.mul_table()))
    });
    reps.into_iter().map(|(_, r)| r).collect()
}

/// Search space of structure constants for one additive group.
struct StructureSpace {
    group: GroupType,
    n: usize,
    moduli: Vec<usize>,
    strides: Vec<usize>,
    digits: Vec<Vec<usize>>,
    add: Vec<usize>,
    /// `g_i g_j` when forced by the choice of identity.
    fixed: Vec<Vec<Option<usize>>>,
    free_pairs: Vec<(usize, usize)>,
    domains: Vec<Vec<usize>>,
    one: usize,
}

impl StructureSpace {
    fn new(group: &GroupType) -> Self {
        let moduli: Vec<usize> = group.factors.iter().map(|&d| d as usize).collect();
        let k = moduli.len();
        let n: usize = moduli.iter().product();
        let mut strides = vec![1; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        let digits: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..k).map(|i| x / strides[i] % moduli[i]).collect())
            .collect();
        let encode = |ds: &[usize]| ds.iter().zip(&strides).map(|(d, s)| d * s).sum::<usize>();
        let mut add = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let s: Vec<usize> = (0..k)
                    .map(|i| (digits[x][i] + digits[y][i]) % moduli[i])
                    .collect();
                add[x * n + y] = encode(&s);
            }
        }

        let prime = |d: usize| (2..=d).find(|p| d.is_multiple_of(*p)).unwrap_or(1);
        let primes: Vec<usize> = moduli.iter().map(|&d| prime(d)).collect();
        let head: Vec<usize> = (0..k)
            .map(|i| (0..=i).find(|&j| primes[j] == primes[i]).unwrap())
            .collect();

        let mut fixed = vec![vec![None; k]; k];
        let mut free_pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                fixed[i][j] = if primes[i] != primes[j] {
                    Some(0)
                } else if head[i] == i {
                    Some(strides[j])
                } else if head[j] == j {
                    Some(strides[i])
                } else {
                    if i <= j {
                        free_pairs.push((i, j));
                    }
                    None
                };
            }
        }
        let order_of = |x: usize| -> usize {
            (0..k)
                .map(|i| moduli[i] / gcd(digits[x][i] as u64, moduli[i] as u64) as usize)
                .fold(1, |a, b| a / gcd(a as u64, b as u64) as usize * b)
        };
        let domains = free_pairs
            .iter()
            .map(|&(i, j)| {
                let bound = gcd(moduli[i] as u64, moduli[j] as u64) as usize;
                (0..n).filter(|&x| bound.is_multiple_of(order_of(x))).collect()
            })
            .collect();
        let one = (0..k).filter(|&i| head[i] == i).map(|i| strides[i]).sum();
        Self {
            group: group.clone(),
            n,
            moduli,
            strides,
            digits,
            add,
            fixed,
            free_pairs,
            domains,
            one,
        }
    }

    fn k(&self) -> usize {
        self.moduli.len()
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    fn scale(&self, x: usize, c: usize) -> usize {
        (0..self.k())
            .map(|i| self.digits[x][i] * c % self.moduli[i] * self.strides[i])
            .sum()
    }

    fn table(&self, free: &[usize]) -> Vec<Vec<Option<usize>>> {
        let mut c = self.fixed.clone();
        for (&(i, j), &v) in self.free_pairs.iter().zip(free) {
            c[i][j] = Some(v);
            c[j][i] = Some(v);
        }
        c
    }

    /// `x · g_j`, or `None` if a needed constant is still unassigned.
    fn times_gen(&self, c: &[Vec<Option<usize>>], x: usize, j: usize) -> Option<usize> {
        let mut acc = 0;
        for (l, &d) in self.digits[x].iter().enumerate() {
            if d != 0 {
                acc = self.add(acc, self.scale(c[l][j]?, d));
            }
        }
        Some(acc)
    }

    /// `false` if some fully evaluable generator triple is non-associative.
    fn consistent(&self, c: &[Vec<Option<usize>>]) -> bool {
        let k = self.k();
        for i in 0..k {
            for j in 0..k {
                let Some(ij) = c[i][j] else { continue };
                for l in 0..k {
                    let Some(jl) = c[j][l] else { continue };
                    if let (Some(left), Some(right)) =
                        (self.times_gen(c, ij, l), self.times_gen(c, jl, i))
                    {
                        if left != right {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// All consistent assignments of the free constants, partitioned over
    /// the first free constant's domain.
    fn solutions(&self) -> Vec<Vec<usize>> {
        if self.free_pairs.is_empty() {
            return vec![Vec::new()];
        }
        let parts: Vec<Vec<Vec<usize>>> = self.domains[0]
            .par_iter()
            .map(|&v| {
                let mut out = Vec::new();
                let mut prefix = vec![v];
                self.dfs(&mut prefix, &mut out);
                out
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    fn dfs(&self, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !self.consistent(&self.table(prefix)) {
            return;
        }
        let depth = prefix.len();
        if depth == self.free_pairs.len() {
            out.push(prefix.clone());
            return;
        }
        for &v in &self.domains[depth] {
            prefix.push(v);
            self.dfs(prefix, out);
            prefix.pop();
        }
    }

    /// Full Cayley tables by bilinear extension.
    fn build(&self, free: &[usize]) -> FiniteRing {
        let c = self.table(free);
        let (n, k) = (self.n, self.k());
        let mut gen_products = vec![vec![0; k]; n];
        for (x, row) in gen_products.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = self.times_gen(&c, x, j).expect("complete constants");
            }
        }
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut acc = 0;
                for (j, &d) in self.digits[y].iter().enumerate() {
                    if d != 0 {
                        acc = self.add(acc, self.scale(gen_products[x][j], d));
                    }
                }
                mul[x * n + y] = acc;
            }
        }
        FiniteRing::from_trusted(
            format!("R{}[{}]", n, self.group),
            n,
            self.add.clone(),
            mul,
            self.one,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::verify_axioms;

    fn opts() -> EnumerationOptions {
        EnumerationOptions::default()
    }

    #[test]
    fn prime_orders_have_one_class() {
        for p in [2, 3, 5, 7] {
            assert_eq!(enumerate_rings(p, true, &opts()).unwrap().len(), 1);
        }
        let zero = enumerate_rings(1, true, &opts()).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero_ring());
    }

    #[test]
    fn order_four_has_four_classes() {
        let rings = enumerate_rings(4, true, &opts()).unwrap();
        assert_eq!(rings.len(), 4);
        for r in &rings {
            assert!(verify_axioms(4, r.add_table(), r.mul_table(), r.one()).is_ok());
            assert!(r.is_commutative());
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            enumerate_rings(9, true, &opts()),
            Err(Error::BoundExceeded(_))
        ));
        let big = EnumerationOptions {
            allow_large: true,
            jobs: 0,
        };
        assert!(matches!(
            enumerate_rings(17, true, &big),
            Err(Error::BoundExceeded(_))
        ));
        assert!(matches!(
            enumerate_rings(4, false, &opts()),
            Err(Error::Unsupported(_))
        ));
        assert_eq!(enumerate_rings(9, true, &big).unwrap().len(), 4);
    }
}

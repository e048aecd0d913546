//! Finite abelian groups as lists of prime-power cyclic factors.

use serde::{Deserialize, Serialize};

use crate::arith::factorize;

/// Additive group type: prime-power cyclic factors ordered by prime, and
/// within one prime by decreasing size. `[4, 2]` is `Z4 ⊕ Z2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupType {
    pub factors: Vec<u64>,
}

impl GroupType {
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

impl std::fmt::Display for GroupType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        f.write_str(&parts.join("+"))
    }
}

/// Partitions of `k` into non-increasing parts, in reverse lexicographic
/// order (`[3]`, `[2, 1]`, `[1, 1, 1]`).
fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of order `n` up to isomorphism.
pub fn abelian_group_types(n: u64) -> Vec<GroupType> {
    let mut types = vec![GroupType { factors: vec![] }];
    for (p, e) in factorize(n) {
        let blocks: Vec<Vec<u64>> = partitions(e)
            .into_iter()
            .map(|parts| parts.into_iter().map(|k| p.pow(k)).collect())
            .collect();
        types = types
            .into_iter()
            .flat_map(|t| {
                blocks.iter().map(move |b| {
                    let mut factors = t.factors.clone();
                    factors.extend_from_slice(b);
                    GroupType { factors }
                })
            })
            .collect();
    }
    types
}

mod common;

use common::{brute_isomorphic, catalog_up_to, permutations_fixing_zero, Tables};
use finring_core::morphisms::are_isomorphic;
use finring_core::search::{enumerate_rings, EnumerationOptions};
use finring_core::{build_cyclic, build_gf, build_poly_quotient, direct_product, verify_axioms, zero_ring};

/// Additive groups of order n <= 6 as Z_a ⊕ Z_b with a | b.
fn groups(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=n {
        if n.is_multiple_of(a) && (n / a).is_multiple_of(a) {
            let b = n / a;
            let mut add = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    let (x1, x2) = (x / b, x % b);
                    let (y1, y2) = (y / b, y % b);
                    add[x * n + y] = (x1 + y1) % a * b + (x2 + y2) % b;
                }
            }
            out.push(add);
        }
    }
    out
}

/// All commutative multiplication tables over `add` that satisfy the ring
/// axioms and have an identity. Cells are filled in order; any axiom
/// instance whose cells are all filled is checked immediately.
fn brute_force_rings(n: usize) -> Vec<Tables> {
    let mut out = Vec::new();
    for add in groups(n) {
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (x..n).map(move |y| (x, y)))
            .collect();
        let mut mul = vec![usize::MAX; n * n];
        fill(n, &add, &cells, 0, &mut mul, &mut out);
    }
    out
}

fn fill(
    n: usize,
    add: &[usize],
    cells: &[(usize, usize)],
    k: usize,
    mul: &mut Vec<usize>,
    out: &mut Vec<Tables>,
) {
    if !partial_ok(n, add, mul) {
        return;
    }
    if k == cells.len() {
        if let Some(one) = (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] == x)) {
            out.push(Tables {
                n,
                add: add.to_vec(),
                mul: mul.clone(),
                one,
            });
        }
        return;
    }
    let (x, y) = cells[k];
    for v in 0..n {
        mul[x * n + y] = v;
        mul[y * n + x] = v;
        fill(n, add, cells, k + 1, mul, out);
    }
    mul[x * n + y] = usize::MAX;
    mul[y * n + x] = usize::MAX;
}

fn partial_ok(n: usize, add: &[usize], mul: &[usize]) -> bool {
    const U: usize = usize::MAX;
    let m = |a: usize, b: usize| mul[a * n + b];
    let s = |a: usize, b: usize| add[a * n + b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ab, bc) = (m(a, b), m(b, c));
                if ab != U && bc != U && m(ab, c) != U && m(a, bc) != U && m(ab, c) != m(a, bc) {
                    return false;
                }
                let (abc, ac) = (m(a, s(b, c)), m(a, c));
                if abc != U && ab != U && ac != U && abc != s(ab, ac) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn structure_constants_match_table_brute_force_up_to_six() {
    for n in 1..=6 {
        let perms = permutations_fixing_zero(n);
        let mut oracle: Vec<Tables> = Vec::new();
        for t in brute_force_rings(n) {
            if !oracle.iter().any(|o| brute_isomorphic(o, &t, &perms)) {
                oracle.push(t);
            }
        }
        let found = enumerate_rings(n, true, &EnumerationOptions::default()).unwrap();
        assert_eq!(found.len(), oracle.len(), "class count at order {n}");
        for o in &oracle {
            let hits = found
                .iter()
                .filter(|f| brute_isomorphic(&Tables::of(f), o, &perms))
                .count();
            assert_eq!(hits, 1, "order {n}: oracle class matched {hits} times");
        }
    }
}

#[test]
fn census_counts() {
    let opts = EnumerationOptions {
        allow_large: true,
        jobs: 0,
    };
    let expected = [1, 1, 1, 4, 1, 1, 1, 10, 4, 1, 1, 4, 1, 1, 1, 37];
    for (n, &count) in (1..=16).zip(&expected) {
        assert_eq!(enumerate_rings(n, true, &opts).unwrap().len(), count, "order {n}");
    }
}

#[test]
fn catalog_rings_are_valid_and_pairwise_non_isomorphic() {
    let cat: Vec<_> = catalog_up_to(16).collect();
    for r in &cat {
        let report = verify_axioms(r.order(), r.add_table(), r.mul_table(), r.one());
        assert!(report.is_ok() && report.commutative, "{}", r.label());
    }
    for (i, a) in cat.iter().enumerate() {
        for b in &cat[i + 1..] {
            assert!(are_isomorphic(a, b).is_none(), "{} ≅ {}", a.label(), b.label());
        }
    }
}

#[test]
fn constructor_rings_appear_exactly_once() {
    let z = |n| build_cyclic(n).unwrap();
    let z2 = z(2);
    let mut rings = vec![zero_ring()];
    rings.extend((1..=16).map(z));
    rings.extend([4, 8, 9, 16].map(|q| build_gf(q).unwrap()));
    rings.push(build_poly_quotient(&z2, &[0, 0, 1]).unwrap());
    rings.push(build_poly_quotient(&z2, &[0, 0, 0, 1]).unwrap());
    rings.push(build_poly_quotient(&z(4), &[2, 0, 1]).unwrap());
    rings.push(build_poly_quotient(&z(3), &[0, 0, 1]).unwrap());
    rings.push(direct_product(&z2, &z(4)));
    rings.push(direct_product(&z(4), &z(4)));
    rings.push(direct_product(&build_gf(4).unwrap(), &z2));
    for r in &rings {
        let hits = catalog_up_to(16)
            .filter(|c| are_isomorphic(c, r).is_some())
            .count();
        assert_eq!(hits, 1, "{}", r.label());
    }
}

#[test]
fn output_is_independent_of_worker_count() {
    let run = |jobs| {
        enumerate_rings(
            16,
            true,
            &EnumerationOptions {
                allow_large: true,
                jobs,
            },
        )
        .unwrap()
    };
    assert_eq!(run(1), run(8));
}

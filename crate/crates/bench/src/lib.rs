//! Fixtures shared by the benchmarks in `benches/`.

use finring_core::{build_cyclic, build_gf, build_poly_quotient, direct_product, FiniteRing};

/// A spread of order-16 rings: a field, a chain ring, a product and a
/// local ring with a large radical.
pub fn order_sixteen() -> Vec<FiniteRing> {
    let z2 = build_cyclic(2).unwrap();
    let z4 = build_cyclic(4).unwrap();
    vec![
        build_gf(16).unwrap(),
        build_cyclic(16).unwrap(),
        direct_product(&z4, &z4),
        build_poly_quotient(&z2, &[0, 0, 0, 0, 1]).unwrap(),
    ]
}

/// The same ring with its non-zero elements listed in reverse, so an
/// isomorphism search cannot succeed on the identity map.
pub fn reversed(r: &FiniteRing) -> FiniteRing {
    let n = r.order();
    let perm: Vec<usize> = (0..n).map(|a| if a == 0 { 0 } else { n - a }).collect();
    r.relabel(&perm).unwrap()
}

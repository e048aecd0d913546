//! Ring constructors: `Z_n`, `GF(q)`, polynomial quotients and products.

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, MAX_ORDER};

/// The ring with one element, where `one == zero`.
pub fn zero_ring() -> FiniteRing {
    FiniteRing::from_trusted("0".into(), 1, vec![0], vec![0], 0)
}

/// Integers modulo `n`; index `i` is the residue `i`.
pub fn build_cyclic(n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z0 is not a finite ring".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n, MAX_ORDER));
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push((a + b) % n);
            mul.push(a * b % n);
        }
    }
    Ok(FiniteRing::from_trusted(format!("Z{n}"), n, add, mul, 1 % n))
}

/// `base[x] / (f)` for a monic `f` given by integer coefficients, lowest
/// degree first. Coefficients enter the base ring as multiples of `one`.
///
/// An element `c_0 + c_1 x + ... + c_{d-1} x^{d-1}` has index
/// `sum c_i * m^i` where `m = |base|`.
pub fn build_poly_quotient(base: &FiniteRing, coeffs: &[i64]) -> Result<FiniteRing> {
    if !base.is_commutative() {
        return Err(Error::NonCommutative);
    }
    let degree = match coeffs.iter().rposition(|&c| c != 0) {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "modulus must have degree at least 1".into(),
            ))
        }
    };
    let f: Vec<usize> = coeffs[..=degree].iter().map(|&c| base.integer(c)).collect();
    if f[degree] != base.one() {
        return Err(Error::NonMonic);
    }

    let m = base.order();
    let order = (m as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
    if order > MAX_ORDER as u128 {
        return Err(Error::TooLarge(order.min(usize::MAX as u128) as usize, MAX_ORDER));
    }
    let n = order as usize;

    let digits = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; degree];
        for d in out.iter_mut() {
            *d = idx % m;
            idx /= m;
        }
        out
    };
    let encode = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &d| acc * m + d);
    let polys: Vec<Vec<usize>> = (0..n).map(digits).collect();

    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for p in &polys {
        for q in &polys {
            let sum: Vec<usize> = p.iter().zip(q).map(|(&a, &b)| base.add(a, b)).collect();
            add.push(encode(&sum));

            let mut prod = vec![0; 2 * degree - 1];
            for (i, &a) in p.iter().enumerate() {
                for (j, &b) in q.iter().enumerate() {
                    prod[i + j] = base.add(prod[i + j], base.mul(a, b));
                }
            }
            // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
            for k in (degree..prod.len()).rev() {
                let t = prod[k];
                if t == 0 {
                    continue;
                }
                prod[k] = 0;
                for (i, &fi) in f[..degree].iter().enumerate() {
                    let at = k - degree + i;
                    prod[at] = base.sub(prod[at], base.mul(t, fi));
                }
            }
            mul.push(encode(&prod[..degree]));
        }
    }
    let one = encode(&{
        let mut v = vec![0; degree];
        v[0] = base.one();
        v
    });
    let base_label = if base.label().contains('*') {
        format!("({})", base.label())
    } else {
        base.label().to_string()
    };
    let label = format!("{base_label}[x]/({})", format_poly(&coeffs[..=degree]));
    Ok(FiniteRing::from_trusted(label, n, add, mul, one))
}

/// Field with `q` elements. For `q = p^k`, `k > 1`, the modulus is the
/// lexicographically smallest monic irreducible of degree `k` over `Z_p`,
/// comparing coefficient sequences lowest degree first.
pub fn build_gf(q: u64) -> Result<FiniteRing> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > MAX_ORDER as u64 {
        return Err(Error::TooLarge(q as usize, MAX_ORDER));
    }
    let zp = build_cyclic(p as usize)?;
    if k == 1 {
        return Ok(zp.with_label(format!("GF({q})")));
    }
    let modulus = smallest_irreducible(p, k as usize);
    let coeffs: Vec<i64> = modulus.iter().map(|&c| c as i64).collect();
    Ok(build_poly_quotient(&zp, &coeffs)?.with_label(format!("GF({q})")))
}

/// Componentwise product; the pair `(i, j)` has index `i * |B| + j`.
pub fn direct_product(a: &FiniteRing, b: &FiniteRing) -> FiniteRing {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..n {
            let (y1, y2) = (y / nb, y % nb);
            add.push(a.add(x1, y1) * nb + b.add(x2, y2));
            mul.push(a.mul(x1, y1) * nb + b.mul(x2, y2));
        }
    }
    let right = if b.label().contains('*') {
        format!("({})", b.label())
    } else {
        b.label().to_string()
    };
    FiniteRing::from_trusted(
        format!("{} * {}", a.label(), right),
        n,
        add,
        mul,
        a.one() * nb + b.one(),
    )
}

/// Renders integer coefficients (lowest degree first) as `x^2 + 3x - 1`.
pub fn format_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match (deg, mag) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, 1) => {}
            _ => out.push_str(&mag.to_string()),
        }
        match deg {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Monic irreducible of degree `k` over `Z_p` (coefficients lowest degree
/// first, including the leading 1).
fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    // Walk (c_0, ..., c_{k-1}) in lexicographic order: c_0 is the most
    // significant position of the counter.
    let total = p.pow(k as u32);
    for code in 0..total {
        let mut f = vec![0u64; k + 1];
        let mut rest = code;
        for i in (0..k).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = vec![0u64; d + 1];
            let mut rest = code;
            for c in g.iter_mut().take(d) {
                *c = rest % p;
                rest /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo monic `g` over `Z_p`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    for k in (dg..r.len()).rev() {
        let t = r[k];
        if t == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let at = k - dg + i;
            r[at] = (r[at] + p - t * gi % p) % p;
        }
    }
    r.truncate(dg);
    r
}

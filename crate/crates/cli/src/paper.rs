//! Machine checks of the worked examples for weakly tripotent rings: the
//! order-4 ring `Z2[x]/(x^2)` split as `0 × R2`, the ring `Z4` split as
//! `Z4 × 0`, and the symmetry `R1 × R2 ≅ R2 × R1`.
//!
//! Every status is computed. The ring operations the checks depend on go
//! through a [`Backend`] so that tests can substitute broken ones.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use finring_core::morphisms::{are_isomorphic, find_embedding};
use finring_core::predicates::{
    has_nontrivial_idempotents, is_tripotent_element, is_tripotent_ring,
    is_weakly_tripotent_ring, nilpotency_index,
};
use finring_core::search::{audit_theorem, enumerate_rings, AuditOptions};
use finring_core::structure::{maximal_ideals, nilradical};
use finring_core::{
    build_cyclic, build_poly_quotient, direct_product, zero_ring, FiniteRing, Homomorphism,
    Ideal, Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Reported fact that is neither confirmed nor contradicted.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PaperAssertion {
    pub id: &'static str,
    pub description: String,
    pub status: Status,
    pub witness: Value,
}

/// Ring operations used by [`verify_paper_with`].
#[derive(Clone, Copy)]
pub struct Backend {
    pub enumerate: fn(usize) -> Result<Vec<FiniteRing>>,
    pub zero_ring: fn() -> FiniteRing,
    pub direct_product: fn(&FiniteRing, &FiniteRing) -> FiniteRing,
    pub maximal_ideals: fn(&FiniteRing) -> Result<Vec<Ideal>>,
    pub nilradical: fn(&FiniteRing) -> Result<Ideal>,
    pub find_embedding: fn(&FiniteRing, &FiniteRing) -> Option<Homomorphism>,
    pub are_isomorphic: fn(&FiniteRing, &FiniteRing) -> Option<Homomorphism>,
}

impl Default for Backend {
    fn default() -> Self {
        Self {
            enumerate: |n| enumerate_rings(n, true, &Default::default()),
            zero_ring,
            direct_product,
            maximal_ideals,
            nilradical,
            find_embedding,
            are_isomorphic,
        }
    }
}

pub fn verify_paper() -> Vec<PaperAssertion> {
    verify_paper_with(&Backend::default())
}

/// True when no assertion failed; `INFO` never fails.
pub fn all_passed(report: &[PaperAssertion]) -> bool {
    report.iter().all(|a| a.status != Status::Fail)
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn assertion(id: &'static str, description: &str, status: Status, witness: Value) -> PaperAssertion {
    PaperAssertion {
        id,
        description: description.to_string(),
        status,
        witness,
    }
}

fn cube(r: &FiniteRing, a: usize) -> usize {
    r.power(a, 3)
}

/// Names of the order-4 local ring's elements: `a = 1`, `c` the nonzero
/// nilpotent, `b` the remaining element.
#[derive(Clone, Copy)]
struct Abc {
    a: usize,
    b: usize,
    c: usize,
}

fn name_elements(r2: &FiniteRing) -> Option<Abc> {
    let a = r2.one();
    let nil: Vec<usize> = r2
        .elements()
        .filter(|&x| x != 0 && nilpotency_index(r2, x).is_some())
        .collect();
    let [c] = nil[..] else { return None };
    let rest: Vec<usize> = r2.elements().filter(|&x| ![0, a, c].contains(&x)).collect();
    let [b] = rest[..] else { return None };
    Some(Abc { a, b, c })
}

pub fn verify_paper_with(be: &Backend) -> Vec<PaperAssertion> {
    let mut out = Vec::new();

    // A1: the order-4 ring of characteristic 2 with one nonzero nilpotent.
    let classes = (be.enumerate)(4);
    let (r2, a1) = match &classes {
        Ok(classes) => {
            let matching: Vec<&FiniteRing> = classes
                .iter()
                .filter(|r| {
                    r.characteristic() == 2
                        && r.elements()
                            .filter(|&x| x != 0 && nilpotency_index(r, x).is_some())
                            .count()
                            == 1
                })
                .collect();
            let witness = json!({
                "classes_of_order_4": classes.len(),
                "matching": matching.iter().map(|r| r.to_record()).collect::<Vec<_>>(),
            });
            (
                matching.first().map(|r| (*r).clone()),
                assertion(
                    "A1",
                    "exactly one commutative ring of order 4 and characteristic 2 has exactly one nonzero nilpotent",
                    status(matching.len() == 1),
                    witness,
                ),
            )
        }
        Err(e) => (
            None,
            assertion("A1", "enumeration of order-4 rings", Status::Fail, json!({ "error": e.to_string() })),
        ),
    };
    out.push(a1);
    let r2 = r2.unwrap_or_else(|| {
        build_poly_quotient(&build_cyclic(2).expect("Z2"), &[0, 0, 1]).expect("Z2[x]/(x^2)")
    });
    let names = name_elements(&r2);

    // A2: the relation table in R2.
    let a2 = match names {
        Some(Abc { a, b, c }) => {
            let checks = [
                ("a + b = c", r2.add(a, b) == c),
                ("a + c = b", r2.add(a, c) == b),
                ("b + c = a", r2.add(b, c) == a),
                ("a^2 = a", r2.mul(a, a) == a),
                ("b^2 = a", r2.mul(b, b) == a),
                ("c^2 = 0", r2.mul(c, c) == 0),
            ];
            let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            assertion(
                "A2",
                "with a = 1, b = 1 + x, c = x: a+b=c, a+c=b, b+c=a, a^2=b^2=a, c^2=0",
                status(failed.is_empty()),
                json!({ "a": a, "b": b, "c": c, "failed": failed }),
            )
        }
        None => assertion(
            "A2",
            "elements a, b, c of R2 could not be identified",
            Status::Fail,
            json!({ "ring": r2.to_record() }),
        ),
    };
    out.push(a2);

    // A3: 0 × R2 is weakly tripotent, with the displayed cubes.
    let zero = (be.zero_ring)();
    let r = (be.direct_product)(&zero, &r2);
    let a3 = match names {
        Some(Abc { a, b, c }) => {
            let n2 = r2.order();
            let pair = |i: usize, j: usize| i * n2 + j;
            let (oa, ob, oc) = (pair(0, a), pair(0, b), pair(0, c));
            let sized = zero.order() == 1 && r.order() == n2;
            let mut failed: Vec<&str> = Vec::new();
            if !sized {
                failed.push("|0 × R2| = |R2|");
            }
            if sized {
                let sum = r.add(oa, oc);
                for (name, ok) in [
                    ("(0,0)^3 = (0,0)", cube(&r, pair(0, 0)) == pair(0, 0)),
                    ("(0,a)^3 = (0,a)", cube(&r, oa) == oa),
                    ("(0,b)^3 = (0,b)", cube(&r, ob) == ob),
                    ("[(0,a) + (0,c)]^3 = (0,a) + (0,c)", cube(&r, sum) == sum),
                    ("characteristic 2", r.characteristic() == 2),
                    ("weakly tripotent", is_weakly_tripotent_ring(&r)),
                ] {
                    if !ok {
                        failed.push(name);
                    }
                }
            }
            assertion(
                "A3",
                "0 × R2 is a weakly tripotent ring of characteristic 2 with (0,a)^3=(0,a), (0,b)^3=(0,b), [(0,a)+(0,c)]^3=(0,a)+(0,c)",
                status(failed.is_empty()),
                json!({ "order": r.order(), "zero_ring_order": zero.order(), "failed": failed }),
            )
        }
        None => assertion("A3", "requires the elements named in A2", Status::Fail, Value::Null),
    };
    out.push(a3);

    // A4: clause 1 fails for R1 = 0 under both readings.
    let non_tripotent = r2.elements().find(|&x| !is_tripotent_element(&r2, x));
    let literal = r2.is_zero_ring() || (is_tripotent_ring(&r2) && r2.characteristic() == 3);
    let variant = r2.is_zero_ring() || (is_weakly_tripotent_ring(&r2) && r2.characteristic() == 3);
    let audited = audit_theorem(&r, &AuditOptions::default()).map(|rep| {
        rep.splittings
            .iter()
            .filter(|s| s.r1.zero_ring)
            .map(|s| (s.clause1_literal, s.clause1_paper_variant))
            .collect::<Vec<_>>()
    });
    let audit_agrees = matches!(&audited, Ok(v) if !v.is_empty() && v.iter().all(|&(l, p)| !l && !p));
    out.push(assertion(
        "A4",
        "R2 is not tripotent and has characteristic 2, not 3: with R1 = 0, clause (1) fails whether it asks for a tripotent or a weakly tripotent R2",
        status(non_tripotent.is_some() && r2.characteristic() != 3 && !literal && !variant && audit_agrees),
        json!({
            "non_tripotent_element": non_tripotent,
            "characteristic": r2.characteristic(),
            "clause1_literal": literal,
            "clause1_weakly_tripotent_reading": variant,
            "audit_splittings_with_r1_zero": audited.map_err(|e| e.to_string()),
        }),
    ));

    // B1: Z4 × 0 with the displayed cubes.
    let z4 = build_cyclic(4).expect("Z4");
    let r = (be.direct_product)(&z4, &zero);
    let n2 = zero.order();
    let pair = |i: usize, j: usize| i * n2 + j;
    let b1 = if r.order() == 4 && n2 == 1 {
        let (p0, p1, p2, p3) = (pair(0, 0), pair(1, 0), pair(2, 0), pair(3, 0));
        let lhs = cube(&r, r.add(p1, p2));
        let displayed_rhs = r.add(p3, p2);
        let mut failed: Vec<&str> = Vec::new();
        for (name, ok) in [
            ("(0,0)^3 = (0,0)", cube(&r, p0) == p0),
            ("(1,0)^3 = (1,0)", cube(&r, p1) == p1),
            ("(3,0)^3 = (3,0)", cube(&r, p3) == p3),
            ("[(1,0) + (2,0)]^3 = (3,0)", lhs == p3),
            ("characteristic 4", r.characteristic() == 4),
            ("weakly tripotent", is_weakly_tripotent_ring(&r)),
        ] {
            if !ok {
                failed.push(name);
            }
        }
        assertion(
            "B1",
            "Z4 × 0 is weakly tripotent: (1,0)^3=(1,0), (3,0)^3=(3,0), [(1,0)+(2,0)]^3=(3,0); \
             the right-hand side often stated as (3,0)+(2,0) equals (1,0), so (3,0) = (1,0)+(2,0) is the reading checked",
            status(failed.is_empty()),
            json!({
                "cube_of_(1,0)+(2,0)": lhs,
                "stated_rhs_(3,0)+(2,0)": displayed_rhs,
                "failed": failed,
            }),
        )
    } else {
        assertion(
            "B1",
            "Z4 × 0 has order 4",
            Status::Fail,
            json!({ "order": r.order(), "zero_ring_order": n2 }),
        )
    };
    out.push(b1);

    // B2, B3: radicals of Z4 from its maximal ideals.
    let maxes = (be.maximal_ideals)(&z4);
    let nil = (be.nilradical)(&z4);
    match (&maxes, &nil) {
        (Ok(maxes), Ok(nil)) => {
            let all = Ideal::new(&z4, z4.elements()).expect("whole ring");
            let j = maxes.iter().fold(all, |acc, m| acc.intersection(m));
            out.push(assertion(
                "B2",
                "J(Z4) coincides with the nilradical of Z4",
                status(&j == nil),
                json!({ "maximal_ideals": maxes, "jacobson_radical": j, "nilradical": nil }),
            ));
            let trivial = maxes.iter().find(|m| m.intersection(&j).is_zero());
            out.push(assertion(
                "B3",
                "Z4 has no maximal ideal L with L ∩ J(Z4) = 0",
                status(trivial.is_none() && !maxes.is_empty()),
                json!({ "maximal_ideals": maxes, "jacobson_radical": j, "trivial_meet_maximal": trivial }),
            ));
        }
        _ => {
            let err = json!({
                "maximal_ideals": maxes.as_ref().map_err(|e| e.to_string()).err(),
                "nilradical": nil.as_ref().map_err(|e| e.to_string()).err(),
            });
            out.push(assertion("B2", "radicals of Z4", Status::Fail, err.clone()));
            out.push(assertion("B3", "maximal ideals of Z4", Status::Fail, err));
        }
    }

    // B4: literal embeddings of Z4 into R0 × Z2^m with R0 = Z4.
    let admissible = is_weakly_tripotent_ring(&z4) && !has_nontrivial_idempotents(&z4);
    let z2 = build_cyclic(2).expect("Z2");
    let mut target = z4.clone();
    let mut witnesses = Vec::new();
    let mut invalid = Vec::new();
    for m in 0..=2 {
        if m > 0 {
            target = (be.direct_product)(&target, &z2);
        }
        if let Some(h) = (be.find_embedding)(&z4, &target) {
            if h.is_valid_for(&z4, &target) && h.is_injective() {
                witnesses.push(json!({ "r0": "Z4", "boolean_factors": m, "map": h }));
            } else {
                invalid.push(json!({ "boolean_factors": m, "map": h }));
            }
        }
    }
    let b4_status = if !invalid.is_empty() || !admissible {
        Status::Fail
    } else if witnesses.is_empty() {
        Status::Pass
    } else {
        Status::Info
    };
    out.push(assertion(
        "B4",
        "Z4 nevertheless embeds unitally into R0 × Z2^m with R0 = Z4 (weakly tripotent, no nontrivial idempotents); \
         the maximal-ideal criterion of B3 and a literal embedding search disagree",
        b4_status,
        json!({ "r0_admissible": admissible, "embeddings": witnesses, "invalid_maps": invalid }),
    ));

    // N1: 0 × R2 ≅ R2 × 0.
    let left = (be.direct_product)(&zero, &r2);
    let right = (be.direct_product)(&r2, &zero);
    let iso = (be.are_isomorphic)(&left, &right);
    let ok = iso
        .as_ref()
        .is_some_and(|h| h.is_valid_for(&left, &right) && h.is_bijective(&right));
    out.push(assertion(
        "N1",
        "0 × R2 is isomorphic to R2 × 0",
        status(ok),
        json!({ "isomorphism": iso }),
    ));

    out
}

/// One line per assertion followed by its witness.
pub fn render_text(report: &[PaperAssertion]) -> String {
    let mut s = String::new();
    for a in report {
        s.push_str(&format!("{}  {}  {}\n", a.id, a.status, a.description));
        if !a.witness.is_null() {
            s.push_str(&format!("      {}\n", a.witness));
        }
    }
    let fails = report.iter().filter(|a| a.status == Status::Fail).count();
    s.push_str(&format!(
        "{} assertions, {} failed\n",
        report.len(),
        fails
    ));
    s
}

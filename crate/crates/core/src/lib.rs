//! Exact computation with small finite unital rings.
//!
//! Rings are stored as complete Cayley tables over the index set `0..n`,
//! with index `0` always the additive identity. On top of that
//! representation the crate provides:
//!
//! * constructors for `Z_n`, Galois fields, polynomial quotients and direct
//!   products ([`construct`]);
//! * element and ring predicates such as (weak) tripotency and
//!   invo-cleanness ([`predicates`]);
//! * ideal lattices, radicals, quotients and idempotent splittings for
//!   commutative rings ([`structure`]);
//! * unital homomorphism enumeration, embedding and isomorphism search
//!   ([`morphisms`]);
//! * enumeration of all commutative unital rings of small order up to
//!   isomorphism, a decomposition-theorem audit, and a filtered
//!   counterexample hunt ([`search`]).

pub mod construct;
pub mod error;
pub mod morphisms;
pub mod predicates;
pub mod ring;
pub mod search;
pub mod structure;

mod arith;

pub use arith::prime_power;
pub use construct::{build_cyclic, build_gf, build_poly_quotient, direct_product, zero_ring};
pub use error::{Error, Result};
pub use morphisms::{Fingerprint, Homomorphism};
pub use predicates::{ElementFlags, InvoWitness, RingProperties};
pub use ring::{verify_axioms, Axiom, AxiomReport, FiniteRing, RingRecord, Violation};
pub use structure::{Ideal, Splitting};

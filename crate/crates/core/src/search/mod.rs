//! Small-ring enumeration, theorem auditing and counterexample hunting.

pub mod audit;
pub mod catalog;
pub mod enumerate;
pub mod groups;
pub mod hunt;

pub use audit::{audit_theorem, audit_with_pool, AuditOptions, AuditReport, R0Pool};
pub use catalog::{build_catalog, Catalog, CatalogEntry};
pub use enumerate::{enumerate_rings, EnumerationOptions, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
pub use groups::{abelian_group_types, GroupType};
pub use hunt::{hunt, hunt_in_catalog, Filter, HuntEntry, HuntReport, Selector};

//! Command-line definition and command implementations.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use finring_core::morphisms::{are_isomorphic, find_embedding};
use finring_core::predicates::{classify_element, invo_clean_status, ring_properties};
use finring_core::search::{
    audit_theorem, build_catalog, hunt_in_catalog, AuditOptions, AuditReport, Catalog,
    CatalogEntry, EnumerationOptions, Filter, HuntReport,
};
use finring_core::structure::{
    all_ideals, find_trivial_meet_maximal, jacobson_radical, maximal_ideals, nilradical,
};
use finring_core::{FiniteRing, Ideal, RingProperties};

use crate::expr::{parse_ring_spec, ParseError};
use crate::paper;

#[derive(Debug, Parser)]
#[command(name = "finring", version, about = "Exact computations with small finite rings")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for enumeration and search; 0 uses every core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Addition and multiplication tables plus ring properties.
    Show { spec: String },
    /// Ring properties and per-element classification.
    Props { spec: String },
    /// Ideal lattice, maximal ideals, nilradical and Jacobson radical.
    Ideals { spec: String },
    /// Check every idempotent splitting against the decomposition theorem.
    Audit {
        spec: String,
        /// Largest |R0| tried (default: |R1| of each splitting).
        #[arg(long)]
        embed_bound: Option<usize>,
        /// Largest m in R0 × Z2^m.
        #[arg(long, default_value_t = finring_core::search::audit::DEFAULT_BOOLEAN_FACTOR_BOUND)]
        boolean_bound: usize,
    },
    /// Enumerate all commutative rings up to an order and filter them.
    Search {
        #[arg(long)]
        max_order: usize,
        /// Conjunction of selectors, e.g. "weakly-tripotent AND NOT boolean".
        #[arg(long, default_value = "all")]
        filter: String,
        /// Also write the full catalog as JSON to this file.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Permit orders 9 through 16.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        embed_bound: Option<usize>,
        #[arg(long, default_value_t = finring_core::search::audit::DEFAULT_BOOLEAN_FACTOR_BOUND)]
        boolean_bound: usize,
    },
    /// Find a unital embedding of the first ring into the second.
    Embed { source: String, target: String },
    /// Decide whether two rings are isomorphic.
    Iso { left: String, right: String },
    /// Check the worked examples for weakly tripotent rings.
    VerifyPaper,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}", .err.render(.input))]
    Parse { input: String, err: ParseError },
    #[error("{0}")]
    Core(#[from] finring_core::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// 2 for malformed input or out-of-range arguments, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use finring_core::Error as E;
        match self {
            CliError::Parse { .. } => 2,
            CliError::Core(
                E::InvalidArgument(_)
                | E::NotPrimePower(_)
                | E::NonMonic
                | E::TooLarge(..)
                | E::BoundExceeded(_)
                | E::UnknownPredicate(_)
                | E::Unsupported(_),
            ) => 2,
            _ => 1,
        }
    }
}

fn ring(spec: &str) -> Result<FiniteRing, CliError> {
    let expr = parse_ring_spec(spec).map_err(|err| CliError::Parse {
        input: spec.to_string(),
        err,
    })?;
    Ok(expr.build()?)
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set(ideal: &Ideal) -> String {
    let items: Vec<String> = ideal.elements().iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// Runs a command, writing its report to `out`. Returns the exit code for
/// completed commands: 0, or 1 when a check came out negative.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Show { spec } => {
            let r = ring(spec)?;
            if json {
                print_json(out, &CatalogEntry::new(&r))?;
            } else {
                write!(out, "{}", header(&r))?;
                write!(out, "\n{}", table(&r, '+', FiniteRing::add))?;
                write!(out, "\n{}", table(&r, '*', FiniteRing::mul))?;
                write!(out, "\n{}", properties_text(&ring_properties(&r)))?;
            }
        }
        Command::Props { spec } => {
            let r = ring(spec)?;
            let props = ring_properties(&r);
            let flags: Vec<_> = r.elements().map(|a| classify_element(&r, a)).collect();
            let invo = invo_clean_status(&r);
            if json {
                print_json(
                    out,
                    &json!({
                        "ring": r.label(),
                        "properties": props,
                        "elements": flags,
                        "invo_clean": invo,
                    }),
                )?;
            } else {
                write!(out, "{}{}", header(&r), properties_text(&props))?;
                writeln!(out, "\nelement  idem  nil  inverse  invol  trip  wtrip  v + r")?;
                for (a, f) in flags.iter().enumerate() {
                    let opt = |o: Option<usize>| o.map_or("-".to_string(), |x| x.to_string());
                    let split = invo
                        .witnesses
                        .iter()
                        .find(|w| w.element == a)
                        .map_or("-".to_string(), |w| format!("{} + {}", w.v, w.r));
                    writeln!(
                        out,
                        "{a:>7}  {:<4}  {:<3}  {:<7}  {:<5}  {:<4}  {:<5}  {split}",
                        yes(f.idempotent),
                        opt(f.nilpotent),
                        opt(f.unit),
                        yes(f.involution),
                        yes(f.tripotent),
                        yes(f.weakly_tripotent),
                    )?;
                }
            }
        }
        Command::Ideals { spec } => {
            let r = ring(spec)?;
            let ideals = all_ideals(&r)?;
            // The zero ring has no maximal ideals; both radicals are the ring.
            let (maxes, nil, j, trivial) = if r.is_zero_ring() {
                let whole = Ideal::new(&r, [0])?;
                (Vec::new(), whole.clone(), whole, None)
            } else {
                (
                    maximal_ideals(&r)?,
                    nilradical(&r)?,
                    jacobson_radical(&r)?,
                    find_trivial_meet_maximal(&r)?,
                )
            };
            if json {
                print_json(
                    out,
                    &json!({
                        "ring": r.label(),
                        "ideals": ideals,
                        "maximal_ideals": maxes,
                        "nilradical": nil,
                        "jacobson_radical": j,
                        "trivial_meet_maximal": trivial,
                    }),
                )?;
            } else {
                write!(out, "{}", header(&r))?;
                writeln!(out, "ideals ({}):", ideals.len())?;
                for i in &ideals {
                    let tag = if maxes.contains(i) { "  maximal" } else { "" };
                    writeln!(out, "  {}{tag}", set(i))?;
                }
                writeln!(out, "nilradical: {}", set(&nil))?;
                writeln!(out, "jacobson radical: {}", set(&j))?;
                match &trivial {
                    Some(l) => writeln!(out, "maximal L with L ∩ J = 0: {}", set(l))?,
                    None => writeln!(out, "maximal L with L ∩ J = 0: none")?,
                }
            }
        }
        Command::Audit {
            spec,
            embed_bound,
            boolean_bound,
        } => {
            let r = ring(spec)?;
            let opts = AuditOptions {
                embed_bound: *embed_bound,
                boolean_factor_bound: *boolean_bound,
            };
            let report = audit_theorem(&r, &opts)?;
            if json {
                print_json(out, &report)?;
            } else {
                write!(out, "{}", audit_text(&report))?;
            }
        }
        Command::Search {
            max_order,
            filter,
            catalog,
            allow_large,
            embed_bound,
            boolean_bound,
        } => {
            let filter: Filter = filter.parse()?;
            let opts = EnumerationOptions {
                allow_large: *allow_large,
                jobs: cli.jobs,
            };
            let rings = build_catalog(*max_order, &opts)?;
            if let Some(path) = catalog {
                std::fs::write(path, Catalog::from_rings(&rings, cli.jobs).to_json())?;
            }
            let audit_opts = AuditOptions {
                embed_bound: *embed_bound,
                boolean_factor_bound: *boolean_bound,
            };
            let report = hunt_in_catalog(&rings, &filter, cli.jobs, &audit_opts)?;
            if json {
                print_json(out, &report)?;
            } else {
                write!(out, "{}", hunt_text(&report, rings.len()))?;
            }
        }
        Command::Embed { source, target } => {
            let (a, b) = (ring(source)?, ring(target)?);
            let found = find_embedding(&a, &b);
            if json {
                print_json(
                    out,
                    &json!({ "source": a.label(), "target": b.label(), "embedding": found }),
                )?;
            } else {
                match &found {
                    Some(h) => writeln!(out, "{} embeds into {}: {:?}", a.label(), b.label(), h.map())?,
                    None => writeln!(out, "{} does not embed into {}", a.label(), b.label())?,
                }
            }
            return Ok(if found.is_some() { 0 } else { 1 });
        }
        Command::Iso { left, right } => {
            let (a, b) = (ring(left)?, ring(right)?);
            let found = are_isomorphic(&a, &b);
            if json {
                print_json(
                    out,
                    &json!({ "left": a.label(), "right": b.label(), "isomorphism": found }),
                )?;
            } else {
                match &found {
                    Some(h) => writeln!(out, "{} ≅ {}: {:?}", a.label(), b.label(), h.map())?,
                    None => writeln!(out, "{} and {} are not isomorphic", a.label(), b.label())?,
                }
            }
            return Ok(if found.is_some() { 0 } else { 1 });
        }
        Command::VerifyPaper => {
            let report = paper::verify_paper();
            if json {
                print_json(out, &report)?;
            } else {
                write!(out, "{}", paper::render_text(&report))?;
            }
            return Ok(if paper::all_passed(&report) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn header(r: &FiniteRing) -> String {
    format!(
        "ring: {}\norder: {}  characteristic: {}  one: {}  commutative: {}\n",
        r.label(),
        r.order(),
        r.characteristic(),
        r.one(),
        yes(r.is_commutative())
    )
}

fn table(r: &FiniteRing, op: char, f: fn(&FiniteRing, usize, usize) -> usize) -> String {
    let w = (r.order().max(2) - 1).to_string().len();
    let mut s = format!("{op:>w$} |");
    for b in r.elements() {
        write!(s, " {b:>w$}").unwrap();
    }
    writeln!(s, "\n{}", "-".repeat(w + 2 + (w + 1) * r.order())).unwrap();
    for a in r.elements() {
        write!(s, "{a:>w$} |").unwrap();
        for b in r.elements() {
            write!(s, " {:>w$}", f(r, a, b)).unwrap();
        }
        s.push('\n');
    }
    s
}

fn properties_text(p: &RingProperties) -> String {
    let c = &p.counts;
    format!(
        "boolean: {}\ntripotent: {}\nweakly tripotent: {}\ninvo-clean: {}\n\
         strongly invo-clean: {}\nnontrivial idempotents: {}\n\
         counts: {} idempotent, {} nilpotent, {} units, {} tripotent, {} weakly tripotent\n",
        yes(p.boolean_ring),
        yes(p.tripotent_ring),
        yes(p.weakly_tripotent_ring),
        yes(p.invo_clean),
        yes(p.strongly_invo_clean),
        yes(p.has_nontrivial_idempotents),
        c.idempotents,
        c.nilpotents,
        c.units,
        c.tripotent,
        c.weakly_tripotent,
    )
}

fn audit_text(report: &AuditReport) -> String {
    let mut s = format!(
        "ring: {}  (unital embeddings, m <= {})\n",
        report.ring, report.boolean_factor_bound
    );
    for sp in &report.splittings {
        writeln!(
            s,
            "\ne = {}: R1 = {} (order {}, char {}), R2 = {} (order {}, char {})",
            sp.idempotent,
            sp.r1.label,
            sp.r1.order,
            sp.r1.characteristic,
            sp.r2.label,
            sp.r2.order,
            sp.r2.characteristic
        )
        .unwrap();
        writeln!(
            s,
            "  clause 1, R2 = 0 or tripotent of char 3:          {}",
            yes(sp.clause1_literal)
        )
        .unwrap();
        writeln!(
            s,
            "  clause 1, R2 = 0 or weakly tripotent of char 3:   {}",
            yes(sp.clause1_paper_variant)
        )
        .unwrap();
        let detail = sp.criterion.as_ref().map_or(String::new(), |c| {
            let maxes: Vec<String> = c.maximal_ideals.iter().map(set).collect();
            format!(
                "  (J = {}; maximal: {})",
                set(&c.jacobson_radical),
                maxes.join(" ")
            )
        });
        writeln!(
            s,
            "  clause 2, maximal L with L ∩ J(R1) = 0:           {}{detail}",
            yes(sp.clause2_criterion)
        )
        .unwrap();
        writeln!(
            s,
            "  clause 2, R1 embeds in R0 × Z2^m, |R0| <= {:<3}    {}",
            sp.embed_bound,
            yes(sp.clause2_bounded_embedding)
        )
        .unwrap();
        for w in &sp.embedding_witnesses {
            writeln!(
                s,
                "    R0 = {}, m = {}{}: {:?}",
                w.r0,
                w.boolean_factors,
                if w.empty_boolean_family { " (empty Boolean family)" } else { "" },
                w.map.map()
            )
            .unwrap();
        }
    }
    let v = &report.verdicts;
    writeln!(
        s,
        "\nverdicts (some splitting satisfies both clauses):\n  \
         embedding reading: {}\n  criterion reading: {}\n  \
         embedding reading, weak clause 1: {}\n  criterion reading, weak clause 1: {}\n  \
         readings disagree: {}",
        yes(v.literal),
        yes(v.criterion),
        yes(v.literal_paper_variant),
        yes(v.criterion_paper_variant),
        yes(v.disagree)
    )
    .unwrap();
    s
}

fn hunt_text(report: &HuntReport, total: usize) -> String {
    let mut s = format!(
        "{} of {} rings of order <= {} match '{}'\n\n",
        report.entries.len(),
        total,
        report.max_order,
        report.filter
    );
    for e in &report.entries {
        let p = &e.entry.properties;
        let mut tags = Vec::new();
        for (on, name) in [
            (p.boolean_ring, "boolean"),
            (p.tripotent_ring, "tripotent"),
            (p.weakly_tripotent_ring, "weakly-tripotent"),
            (p.strongly_invo_clean, "strongly-invo-clean"),
            (!p.strongly_invo_clean && p.invo_clean, "invo-clean"),
            (p.has_nontrivial_idempotents, "nontrivial-idempotents"),
        ] {
            if on {
                tags.push(name);
            }
        }
        write!(
            s,
            "{:<22} order {:>2}  char {:>2}  {}",
            e.entry.record.label,
            e.entry.record.order,
            p.characteristic,
            tags.join(" ")
        )
        .unwrap();
        if let Some(a) = &e.audit {
            write!(
                s,
                "  [embedding {}, criterion {}]",
                yes(a.verdicts.literal),
                yes(a.verdicts.criterion)
            )
            .unwrap();
        }
        s.push('\n');
    }
    s
}

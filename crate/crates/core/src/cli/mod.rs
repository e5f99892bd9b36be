//! The `ebring` command-line interface.
//!
//! Exit codes: 0 success, 1 invariant violation, 2 usage or parse error,
//! 3 search budget or cap exceeded.

mod json;
pub mod spec;

use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

pub use json::{serialize_coincidence, serialize_davenport, serialize_report, serialize_trace};
pub use spec::{parse_group_spec, parse_poly, parse_ring_spec, Atom, RingSpec, TableFile};

use crate::davenport::{davenport, DavenportOptions, DAVENPORT_SEARCH_CAP};
use crate::eb::{
    construct_extremal, dedekind_crosscheck_int, dedekind_crosscheck_poly, exact_eb,
    local_case_certificate, report, squarefree_case_certificate, EbOptions, EqualityCase,
    ExactMode, InvariantReport,
};
use crate::error::Error;
use crate::group::synthetic_group;
use crate::ideal::{maximal_ideals, nilradical, Ideal};
use crate::ring::FiniteRing;
use crate::search::Budget;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ebring", version, about = "Erdős-Burgess and Davenport constants of finite commutative rings")]
struct Cli {
    /// Worker threads for the exhaustive searches (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// All invariants of a ring.
    Invariants {
        spec: String,
        /// Search for the exact constant regardless of the ring-order cap.
        #[arg(long)]
        exact: bool,
        /// Search node budget; also lifts the ring-order cap.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Use D(Z_n) = n for cyclic unit groups instead of searching.
        #[arg(long)]
        trust_formulas: bool,
    },
    /// Build and verify the long idempotent-product-free sequence.
    Construct {
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trust_formulas: bool,
    },
    /// Davenport constant of a group such as `Z2 x Z4`.
    Davenport {
        group: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Largest group order searched.
        #[arg(long, default_value_t = DAVENPORT_SEARCH_CAP)]
        cap: usize,
        #[arg(long)]
        trust_formulas: bool,
    },
    /// Search the exact constant and check every bound and certificate.
    Verify {
        spec: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compare ideal indices against the prime factorization of the modulus.
    Crosscheck {
        #[command(subcommand)]
        kind: CrosscheckKind,
    },
    /// List units, idempotents, maximal ideals or the nilradical.
    Inspect { spec: String, what: InspectWhat },
}

#[derive(Debug, Subcommand)]
enum CrosscheckKind {
    /// `Z/n`.
    Int {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// `GF(q)[x]/(f)`.
    Poly {
        q: usize,
        f: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InspectWhat {
    Units,
    Idempotents,
    Maxideals,
    Nilradical,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExhausted { .. } | Error::CapExceeded { .. } => EXIT_BUDGET,
        Error::InternalConsistency(_) | Error::AxiomViolation { .. } => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

fn budget_from(flag: Option<u64>) -> Budget {
    flag.map_or_else(Budget::from_env, Budget::nodes)
}

fn ring_from(text: &str) -> Result<FiniteRing, Error> {
    parse_ring_spec(text)?.build(Path::new("."))
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let threads = cli.threads.max(1);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(cli.command, threads > 1, &mut buffer));
    let _ = out.write_all(&buffer);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, parallel: bool, out: &mut Vec<u8>) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match command {
        Command::Invariants {
            spec,
            exact,
            budget,
            json,
            trust_formulas,
        } => {
            let ring = ring_from(&spec)?;
            let mut opts = EbOptions::default().with_budget(budget_from(budget)).with_parallel(parallel);
            opts.davenport.trust_formulas = trust_formulas;
            if budget.is_some() {
                opts.exact_cap = None;
            }
            let mode = if exact { ExactMode::Force } else { ExactMode::Auto };
            let rep = report(&ring, mode, &opts)?;
            if json {
                writeln!(out, "{}", serialize_report(&rep)).map_err(io)?;
            } else {
                write_report(out, &rep).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            spec,
            json,
            trust_formulas,
        } => {
            let ring = ring_from(&spec)?;
            let mut opts = EbOptions::default().with_parallel(parallel);
            opts.davenport.trust_formulas = trust_formulas;
            let trace = construct_extremal(&ring, &opts)?;
            if json {
                writeln!(out, "{}", serialize_trace(&ring, &trace)).map_err(io)?;
            } else {
                let name = |i: usize| ring.element_name(i);
                writeln!(out, "ring        {}", ring.label()).map_err(io)?;
                writeln!(out, "D(U(R))     {}", trace.davenport_of_units).map_err(io)?;
                writeln!(out, "V           [{}]", trace.davenport_witness.render(name)).map_err(io)?;
                for s in &trace.steps {
                    let ys: Vec<String> = s.chosen.iter().map(|&y| name(y)).collect();
                    let lifts: Vec<String> = s.lifted.iter().map(|&y| name(y)).collect();
                    writeln!(
                        out,
                        "M = {:<10} index {}  y = [{}]  lifted = [{}]",
                        s.maximal_ideal.render(),
                        s.index,
                        ys.join(","),
                        lifts.join(",")
                    )
                    .map_err(io)?;
                }
                writeln!(out, "T           [{}]", trace.sequence.render(name)).map_err(io)?;
                writeln!(out, "|T|         {} (lower bound {})", trace.sequence.len(), trace.lower_bound())
                    .map_err(io)?;
                writeln!(out, "verified    {}", trace.verified).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Davenport {
            group,
            json,
            budget,
            cap,
            trust_formulas,
        } => {
            let moduli = parse_group_spec(&group)?;
            let g = synthetic_group(&moduli)?;
            let opts = DavenportOptions {
                cap,
                budget: budget_from(budget),
                trust_formulas,
                parallel,
            };
            let d = davenport(&g, &opts)?;
            if json {
                writeln!(out, "{}", serialize_davenport(&g, &d)).map_err(io)?;
            } else {
                writeln!(out, "group       {} (invariant factors {:?})", g.label(), g.invariant_factors())
                    .map_err(io)?;
                writeln!(out, "D(G)        {}", d.value).map_err(io)?;
                writeln!(out, "witness     [{}]", d.witness.render(|t| g.element_name(t))).map_err(io)?;
                let how = if d.exhaustive { format!("exhaustive search, {} nodes", d.nodes) } else { "closed form".into() };
                writeln!(out, "method      {how}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { spec, budget } => {
            let ring = ring_from(&spec)?;
            verify(&ring, budget_from(budget), parallel, out).map_err(|e| match e {
                VerifyError::Io(e) => io(e),
                VerifyError::Ring(e) => e,
            })
        }
        Command::Crosscheck { kind } => {
            let (record, json) = match kind {
                CrosscheckKind::Int { n, json } => (dedekind_crosscheck_int(n)?, json),
                CrosscheckKind::Poly { q, f, json } => (dedekind_crosscheck_poly(q, &parse_poly(&f)?)?, json),
            };
            if json {
                writeln!(out, "{}", serialize_coincidence(&record)).map_err(io)?;
            } else {
                writeln!(out, "ring          {}", record.ring_label).map_err(io)?;
                for c in &record.components {
                    writeln!(
                        out,
                        "prime {:<8} multiplicity {}  image ({})  index {}",
                        c.factor,
                        c.multiplicity,
                        c.image_generators.join(", "),
                        c.index
                    )
                    .map_err(io)?;
                }
                writeln!(out, "Omega - omega {}", record.big_omega - record.small_omega).map_err(io)?;
                writeln!(out, "sum(Ind - 1)  {}", record.index_excess).map_err(io)?;
                writeln!(out, "coincides     {}", record.coincides()).map_err(io)?;
            }
            Ok(if record.coincides() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Inspect { spec, what } => {
            let ring = ring_from(&spec)?;
            let list = |set: &crate::ElementSet| -> String {
                set.iter().map(|i| ring.element_name(i)).collect::<Vec<_>>().join(", ")
            };
            match what {
                InspectWhat::Units => writeln!(out, "{}", list(&ring.units())),
                InspectWhat::Idempotents => writeln!(out, "{}", list(&ring.idempotents())),
                InspectWhat::Nilradical => writeln!(out, "{}", list(nilradical(&ring).members())),
                InspectWhat::Maxideals => {
                    for m in maximal_ideals(&ring)? {
                        writeln!(out, "{}  size {}  index {}", m.render(), m.len(), m.index()).map_err(io)?;
                    }
                    Ok(())
                }
            }
            .map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_report(out: &mut dyn Write, rep: &InvariantReport) -> std::io::Result<()> {
    writeln!(out, "ring             {}", rep.ring_label)?;
    writeln!(out, "order            {}", rep.ring_order)?;
    writeln!(out, "unit group       {:?} (order {})", rep.unit_group, rep.units_order)?;
    writeln!(out, "D(U(R))          {}", rep.davenport_of_units)?;
    for m in &rep.maximal_ideals {
        writeln!(out, "maximal ideal    ({})  size {}  index {}", m.generators.join(", "), m.size, m.index)?;
    }
    writeln!(out, "lower bound      {}", rep.lower_bound)?;
    match rep.exact_i {
        Some(v) if rep.exact_is_formula_derived => writeln!(out, "I(S_R)           {v} (equality case)")?,
        Some(v) => writeln!(out, "I(S_R)           {v} (exhaustive search)")?,
        None => writeln!(out, "I(S_R)           unknown (search skipped or out of budget)")?,
    }
    writeln!(out, "upper bound      {}", rep.upper_bound)?;
    writeln!(out, "equality case    {}", rep.equality_case)?;
    if let Some(names) = &rep.witness_t_names {
        writeln!(out, "witness T        [{}]", names.join(","))?;
    }
    Ok(())
}

enum VerifyError {
    Io(std::io::Error),
    Ring(Error),
}

impl From<std::io::Error> for VerifyError {
    fn from(e: std::io::Error) -> Self {
        VerifyError::Io(e)
    }
}

impl From<Error> for VerifyError {
    fn from(e: Error) -> Self {
        VerifyError::Ring(e)
    }
}

/// Runs every check on one ring, printing a PASS/FAIL line for each.
fn verify(ring: &FiniteRing, budget: Budget, parallel: bool, out: &mut Vec<u8>) -> Result<i32, VerifyError> {
    let opts = EbOptions {
        exact_cap: None,
        ..EbOptions::default()
    }
    .with_budget(budget)
    .with_parallel(parallel);
    let mut checks: Vec<(bool, String)> = Vec::new();
    let mut check = |ok: bool, what: String| checks.push((ok, what));

    let exact = exact_eb(ring, &opts)?;
    let rep = report(ring, ExactMode::Force, &opts)?;
    let trace = construct_extremal(ring, &opts)?;
    let maximal = maximal_ideals(ring)?;

    check(
        exact.value >= rep.lower_bound,
        format!("I = {} >= D(U(R)) + sum(Ind - 1) = {}", exact.value, rep.lower_bound),
    );
    check(
        exact.value <= rep.upper_bound,
        format!("I = {} <= |R \\ E| + 1 = {}", exact.value, rep.upper_bound),
    );
    if rep.equality_case.guarantees_equality() {
        check(
            exact.value == rep.lower_bound,
            format!("equality case {}: I = lower bound", rep.equality_case),
        );
    }
    check(
        trace.verified && trace.sequence.len() + 1 == rep.lower_bound,
        format!("constructed T of length {} is idempotent-product free", trace.sequence.len()),
    );
    check(trace.certificates_hold(), "prefix depth certificates hold".to_string());

    let mut product = Ideal::unit(ring);
    for m in &maximal {
        product = product.product(&m.power(m.index()))?;
    }
    check(product.is_zero(), "product of M^Ind(M) over maximal ideals is zero".to_string());
    let mut intersection = Ideal::unit(ring);
    for m in &maximal {
        intersection = intersection.intersection(m)?;
    }
    check(intersection == nilradical(ring), "nilradical equals the intersection of maximal ideals".to_string());

    // Every extension of T by one more term must contain an idempotent product.
    match rep.equality_case {
        EqualityCase::Local | EqualityCase::Both => {
            let ok = (0..ring.order()).all(|a| local_case_certificate(ring, &trace.sequence.with(a), &opts).is_ok());
            check(ok, "local certificate for every one-term extension of T".to_string());
        }
        EqualityCase::AllIndicesOne => {
            let ok = (0..ring.order())
                .all(|a| squarefree_case_certificate(ring, &trace.sequence.with(a), &opts).is_ok());
            check(ok, "index-one certificate for every one-term extension of T".to_string());
        }
        EqualityCase::Unknown => {}
    }
    for (ok, what) in &checks {
        writeln!(out, "{} {what}", if *ok { "PASS" } else { "FAIL" })?;
    }
    if !rep.equality_case.guarantees_equality() {
        writeln!(out, "INFO equality case unknown: I = {}, lower bound {}", exact.value, rep.lower_bound)?;
    }
    Ok(if checks.iter().all(|c| c.0) { EXIT_OK } else { EXIT_VIOLATION })
}

use clap::{Parser, Subcommand};
use liebound::catalog::{Catalog, LoadOptions, CATALOG_ENV, DEFAULT_CHECK_RANK};
use liebound::coiso::{CoisoCertificate, Outcome};
use liebound::report::{self, exit, AlgebraInfo, Payload, Query, Report, ReportError, TableDump};
use liebound::verdict::{RouteStatus, SweepReport, Verdict};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "liebound", version, about = "Bounded multiplicity routes for symmetric pairs of real simple Lie algebras")]
struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Catalog file; defaults to the bundled catalog.
    #[arg(long, global = true, env = CATALOG_ENV)]
    catalog: Option<PathBuf>,
    /// Complex-rank bound for matrix cross-checks at load time and for
    /// matrix-level sigma in the sweep.
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Sampling {
    /// Sampled slice points per certificate.
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for the slice sampler.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of one algebra: n, m, (a, b), Hermitian and para-Hermitian data.
    Info { g: String },
    /// Routes for the restriction from g to g'.
    Pair {
        g: String,
        gprime: String,
        /// Run the coisotropic certificates backing the routes.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Routes for tensor products of representations of g.
    Tensor {
        g: String,
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Dump a catalog table (n, m, para, remaining, bblist, ...).
    Tables { which: String },
    /// Coisotropic certificate for a matrix-level pair.
    VerifyCoiso {
        g: String,
        gprime: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Decide every catalog pair and every tensor question.
    Sweep,
}

fn query(cli: &Cli) -> Query {
    let (name, args, sampling, verify): (&str, Vec<&str>, Option<Sampling>, bool) = match &cli.command {
        Command::Info { g } => ("info", vec![g], None, false),
        Command::Pair { g, gprime, verify, sampling } => ("pair", vec![g, gprime], Some(*sampling), *verify),
        Command::Tensor { g, verify, sampling } => ("tensor", vec![g], Some(*sampling), *verify),
        Command::Tables { which } => ("tables", vec![which], None, false),
        Command::VerifyCoiso { g, gprime, sampling } => ("verify-coiso", vec![g, gprime], Some(*sampling), true),
        Command::Sweep => ("sweep", vec![], None, false),
    };
    let mut q = Query::new(name, &args);
    q.verify = verify;
    q.max_rank = cli.max_rank;
    if let Some(s) = sampling {
        q.trials = s.trials;
        q.seed = s.seed;
    }
    q
}

fn run(cli: &Cli) -> Result<Report, ReportError> {
    let opts = LoadOptions { check_rank: cli.max_rank.unwrap_or(DEFAULT_CHECK_RANK) };
    let cat = match Catalog::load_default(cli.catalog.as_deref(), opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit::USAGE);
        }
    };
    let q = query(cli);
    match &cli.command {
        Command::Info { g } => report::info(&cat, q, g),
        Command::Pair { g, gprime, .. } => report::pair(&cat, q, g, gprime),
        Command::Tensor { g, .. } => report::tensor(&cat, q, g),
        Command::Tables { which } => report::tables(&cat, q, which),
        Command::VerifyCoiso { g, gprime, .. } => report::verify_coiso(&cat, q, g, gprime),
        Command::Sweep => Ok(report::sweep(&cat, q, cli.max_rank.unwrap_or(DEFAULT_CHECK_RANK))),
    }
}

fn print_info(i: &AlgebraInfo) {
    println!("{}", i.label);
    if !i.aliases.is_empty() {
        println!("  aliases: {}", i.aliases.join(", "));
    }
    println!("  dim {}, real rank {}, restricted type {}", i.dim, i.real_rank, i.restricted_type);
    let mult: Vec<String> = i.mult.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    println!("  multiplicities {}", mult.join(" "));
    println!("  complexification type {}{}", i.complex_type, if i.is_complex { " (g complex)" } else { "" });
    println!("  n(g_C) = {}", i.n);
    println!("  m(g) = {}", i.m);
    println!("  (a, b) = ({}, {})", i.a, i.b);
    println!("  {:?}", i.case);
    println!("  Hermitian: {}", if i.hermitian { "yes" } else { "no" });
    if i.para_hermitian_levis.is_empty() {
        println!("  para-Hermitian: no");
    } else {
        println!("  para-Hermitian: yes, l = {}", i.para_hermitian_levis.join(", "));
    }
    match (&i.minimal_gk.witness, &i.minimal_gk.excluded_by) {
        (Some(w), _) => println!("  minimal GK witness: {:?} ({})", w.kind, w.notes),
        (None, Some(by)) => println!("  minimal GK witness: none (excluded as {by})"),
        _ => {}
    }
    println!("  matrix model: {}", if i.matrix_model { "yes" } else { "no" });
    println!("  registered symmetric pairs: {}", i.symmetric_pairs);
}

fn print_verdict(v: &Verdict) {
    if v.tensor {
        println!("tensor products of {}", v.pair.gprime_label);
    } else {
        println!("({}, {})", v.pair.g_label, v.pair.gprime_label);
    }
    if let Some(f) = &v.pair.sigma_mu_minus {
        println!("  sigma(mu) = -mu: {} [{:?}]", f.value, f.provenance);
    }
    if let Some(h) = &v.pair.holo_type {
        println!("  sigma is {:?} [{:?}]", h.value, h.provenance);
    }
    for r in &v.routes {
        println!("  route {}", r.theorem_id);
        if let Some(w) = &r.witness {
            let gk = match &w.gk_dim {
                liebound::verdict::GkDim::Exact(d) => d.to_string(),
                liebound::verdict::GkDim::Formula(s) => s.clone(),
            };
            println!("    witness {:?}, GK dimension {gk}: {}", w.kind, w.notes);
        }
        for c in &r.conditions_checked {
            println!("    {} = {} [{:?}: {}]", c.condition, c.result, c.provenance, c.source);
        }
    }
    for r in v.other_routes.iter().filter(|r| r.status == RouteStatus::Conditional) {
        println!("  route {} conditional", r.theorem_id);
    }
    let missed: Vec<String> =
        v.other_routes.iter().filter(|r| r.status == RouteStatus::Fails).map(|r| r.theorem_id.to_string()).collect();
    if !missed.is_empty() {
        println!("  not applicable: {}", missed.join(", "));
    }
    println!("  bounded: {:?}", v.bounded);
    for d in &v.diagnostics {
        println!("  note: {d}");
    }
}

fn print_table(t: &TableDump) {
    println!("{} ({})", t.name, t.table.citation);
    for row in &t.table.rows {
        println!("  {row}");
    }
    if let Some(d) = &t.table.dims {
        println!("  dims {d:?}");
    }
}

fn print_certificate(c: &CoisoCertificate) {
    println!("{} on {} (seed {}, {} trials): {}", c.statement, c.algebra, c.seed, c.trials, if c.holds { "holds" } else { "fails" });
    for (h, ok) in &c.hypotheses {
        println!("  hypothesis {h}: {ok}");
    }
    for o in &c.openness {
        println!("  {}: {} of {} ({})", o.name, o.sum_dim, o.dim_g, if o.holds { "holds" } else { "fails" });
    }
    for p in &c.points {
        let what = match p.outcome {
            Outcome::Holds => "holds",
            Outcome::Fails => "fails",
            Outcome::Skipped => "skipped",
        };
        println!("  point {} {}: {}", p.id, p.generator, what);
    }
}

fn print_sweep(s: &SweepReport) {
    println!("{} pairs, {} algebras", s.pairs, s.algebras);
    for (id, n) in &s.route_counts {
        println!("  {id}: {n}");
    }
    for (id, n) in &s.tensor_route_counts {
        println!("  {id}: {n}");
    }
    println!("  zero-route pairs: {}", s.zero_route.len());
    for (g, gp) in &s.zero_route {
        println!("    ({g}, {gp})");
    }
    for g in &s.tensor_zero_route {
        println!("    tensor {g}");
    }
    for e in &s.errors {
        println!("  error: {e}");
    }
}

fn print_text(r: &Report) {
    match &r.result {
        Payload::Info(i) => print_info(i),
        Payload::Verdict(v) => print_verdict(v),
        Payload::Table(t) => print_table(t),
        Payload::Certificates => {}
        Payload::Sweep(s) => print_sweep(s),
    }
    for c in &r.certificates {
        print_certificate(c);
    }
    for p in r.provenance.iter().skip(1) {
        println!("# {p}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            if cli.json {
                println!("{}", r.to_json());
            } else {
                print_text(&r);
            }
            ExitCode::from(r.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

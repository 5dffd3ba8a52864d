//! Command-line front end.
//!
//! Subcommands: `vanish`, `audit`, `schur`, `dominance`, `ns`, `sweep`.
//! Output formats: `json` (the stable machine contract, versioned by a
//! top-level `schema` field), `table` (for humans) and `csv`. Exit codes:
//! 0 on success, 1 on invalid input, 2 when an audit (single or swept)
//! reports a failing check. Sweep output is ordered by parameter tuple and is
//! byte-identical for any `--jobs` value.

use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::audit::{full_audit, k_alpha_profile, ns_table, AuditParams, AuditReport, Mode};
use crate::guards::Guards;
use crate::partitions::{dominates, Dominance, Partition};
use crate::schur::{branch_direct_sum, dimension, lr_product, tensor_power, SchurVector};
use crate::sweep::{sweep_audit, sweep_vanish, AuditGrid, RangeSpec, VanishGrid};
use crate::vanishing::{evaluate, VanishingQuery, VanishingReport};

#[derive(Parser)]
#[command(
    name = "hookschur",
    version,
    about = "Exact hook Schur functor combinatorics: vanishing thresholds, induction audits, Schur products"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one vanishing query against both criteria
    Vanish(VanishArgs),
    /// Audit the induction bookkeeping for one parameter set
    Audit(AuditArgs),
    /// Schur-basis computations: products, powers, branchings, dimensions
    Schur(SchurArgs),
    /// Compare two partitions in the scaled dominance order
    Dominance(DominanceArgs),
    /// Print the multiplicity table n_s(a) for a given r
    Ns(NsArgs),
    /// Sweep a parameter grid deterministically
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Args)]
struct VanishArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    e: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    m: i64,
    #[arg(long)]
    alpha: i64,
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    P,
    Q,
    Both,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    e: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    m: i64,
    #[arg(long)]
    alpha0: i64,
    #[arg(long)]
    p0: i64,
    #[arg(long)]
    q0: i64,
    /// Induction mode: which variable anchors r0, the cutoff and L
    #[arg(long, value_enum, default_value = "p")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
#[command(group = ArgGroup::new("op").required(true).args(["product", "tensor_power", "branch", "dim"]))]
struct SchurArgs {
    /// Littlewood-Richardson product of two partitions, e.g. --product 1,1 1
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    product: Option<Vec<String>>,
    /// t-fold product of a partition with itself, e.g. --tensor-power 2,1 2
    #[arg(long, num_args = 2, value_names = ["I", "T"])]
    tensor_power: Option<Vec<String>>,
    /// Direct-sum branching over ranks (EA, EB), e.g. --branch 2,1 2 1
    #[arg(long, num_args = 3, value_names = ["I", "EA", "EB"])]
    branch: Option<Vec<String>>,
    /// Dimension of the functor at the given rank
    #[arg(long, value_name = "I")]
    dim: Option<String>,
    /// Rank bound e (required for --product, --tensor-power, --dim)
    #[arg(long)]
    rank: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct DominanceArgs {
    /// First partition, e.g. "3,2,2"
    i: String,
    /// Second partition, e.g. "3,1,1,1,1"
    j: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct NsArgs {
    #[arg(long)]
    r: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[command(subcommand)]
    cmd: SweepCmd,
}

#[derive(Subcommand)]
enum SweepCmd {
    /// Sweep vanishing queries over a grid
    Vanish(SweepVanishArgs),
    /// Sweep induction audits over a grid; exits 2 if any audit fails
    Audit(SweepAuditArgs),
}

#[derive(Args)]
struct SweepVanishArgs {
    /// Inclusive range: A, A..B
    #[arg(long)]
    n: String,
    #[arg(long)]
    e: String,
    #[arg(long)]
    k: String,
    #[arg(long)]
    m: String,
    /// Defaults to 0..k-1; accepts A, A..B, A..n
    #[arg(long)]
    alpha: Option<String>,
    /// Defaults to 0..n
    #[arg(long)]
    p: Option<String>,
    /// Defaults to 0..n
    #[arg(long)]
    q: Option<String>,
    /// Worker threads; the output does not depend on this
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct SweepAuditArgs {
    #[arg(long)]
    n: String,
    #[arg(long)]
    e: String,
    #[arg(long)]
    k: String,
    #[arg(long)]
    m: String,
    /// Defaults to 0..k-1
    #[arg(long)]
    alpha0: Option<String>,
    /// Defaults to 0..n
    #[arg(long)]
    p0: Option<String>,
    /// Defaults to 0..n
    #[arg(long)]
    q0: Option<String>,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    /// Worker threads; the output does not depend on this
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.cmd {
        Cmd::Vanish(args) => cmd_vanish(args),
        Cmd::Audit(args) => cmd_audit(args),
        Cmd::Schur(args) => cmd_schur(args),
        Cmd::Dominance(args) => cmd_dominance(args),
        Cmd::Ns(args) => cmd_ns(args),
        Cmd::Sweep(args) => match args.cmd {
            SweepCmd::Vanish(a) => cmd_sweep_vanish(a),
            SweepCmd::Audit(a) => cmd_sweep_audit(a),
        },
    }
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    Partition::from_text(text).map_err(|e| e.to_string())
}

fn emit(text: String) {
    print!("{text}");
}

// ---------------------------------------------------------------------------
// vanish
// ---------------------------------------------------------------------------

const VANISH_CSV_HEADER: &str = "n,e,k,m,alpha,p,q,r,gamma_nonzero,cond_m1,cond_alpha0,cond_alpha_ge1,cond_k_gt_e1,threshold,guaranteed_pq,guaranteed_qp,theorem";

fn vanish_csv_row(rep: &VanishingReport) -> String {
    let q = &rep.query;
    let f = &rep.flags;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        q.n,
        q.e,
        q.k,
        q.m,
        q.alpha,
        q.p,
        q.q,
        f.r,
        rep.gamma_nonzero,
        f.cond_m1,
        f.cond_alpha0,
        f.cond_alpha_ge1,
        f.cond_k_gt_e1,
        rep.threshold,
        rep.guaranteed_pq,
        rep.guaranteed_qp,
        rep.theorem
    )
}

fn vanish_table(rep: &VanishingReport) -> String {
    let q = &rep.query;
    let f = &rep.flags;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "query:                n={} e={} k={} m={} alpha={} p={} q={}",
        q.n, q.e, q.k, q.m, q.alpha, q.p, q.q
    );
    let hp = rep.hypothesis_partition.to_string();
    let _ = writeln!(
        out,
        "hypothesis partition: {}",
        if hp.is_empty() { "(zero)" } else { &hp }
    );
    let _ = writeln!(out, "gamma nonzero:        {}", rep.gamma_nonzero);
    let _ = writeln!(out, "r:                    {}", f.r);
    let _ = writeln!(
        out,
        "conditions:           m1={} alpha0={} alpha_ge1={} k_gt_e1={}",
        f.cond_m1, f.cond_alpha0, f.cond_alpha_ge1, f.cond_k_gt_e1
    );
    let _ = writeln!(out, "threshold:            {}", rep.threshold);
    let _ = writeln!(out, "guaranteed (p,q):     {}", rep.guaranteed_pq);
    let _ = writeln!(out, "guaranteed (q,p):     {}", rep.guaranteed_qp);
    let _ = writeln!(out, "theorem:              {}", rep.theorem);
    for note in &rep.notes {
        let _ = writeln!(out, "note:                 {note}");
    }
    out
}

fn cmd_vanish(args: VanishArgs) -> Result<i32, String> {
    let query = VanishingQuery::new(args.n, args.e, args.k, args.m, args.alpha, args.p, args.q)
        .map_err(|e| e.to_string())?;
    let rep = evaluate(&query).map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => emit(format!("{}\n", rep.to_json())),
        Format::Table => emit(vanish_table(&rep)),
        Format::Csv => emit(format!("{VANISH_CSV_HEADER}\n{}\n", vanish_csv_row(&rep))),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

const AUDIT_CSV_HEADER: &str = "n,e,k,m,alpha0,p0,q0,mode,b_size,pass,failed_checks";

fn mode_str(mode: Mode) -> &'static str {
    match mode {
        Mode::P => "p",
        Mode::Q => "q",
    }
}

fn audit_csv_row(rep: &AuditReport) -> String {
    let p = &rep.params;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        p.n,
        p.e,
        p.k,
        p.m,
        p.alpha0,
        p.p0,
        p.q0,
        mode_str(p.mode),
        rep.b_size,
        rep.pass(),
        rep.failed_check_names().join(";")
    )
}

fn audit_table(rep: &AuditReport) -> String {
    let p = &rep.params;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "params: n={} e={} k={} m={} alpha0={} p0={} q0={} mode={}",
        p.n,
        p.e,
        p.k,
        p.m,
        p.alpha0,
        p.p0,
        p.q0,
        mode_str(p.mode)
    );
    let _ = writeln!(out, "r0={} b_size={}", p.r0(), rep.b_size);
    for c in &rep.checks {
        let _ = writeln!(
            out,
            "{} {}",
            if c.pass { "ok  " } else { "FAIL" },
            c.name
        );
        for w in c.witnesses.iter().take(5) {
            let _ = writeln!(
                out,
                "     alpha={} p={} q={}: {}",
                w.alpha,
                w.p.map_or("-".to_string(), |v| v.to_string()),
                w.q.map_or("-".to_string(), |v| v.to_string()),
                w.detail
            );
        }
        if c.witnesses.len() > 5 {
            let _ = writeln!(out, "     ... and {} more", c.witnesses.len() - 5);
        }
    }
    let profile = k_alpha_profile(p);
    if !profile.entries.is_empty() {
        let floors: Vec<String> = profile
            .entries
            .iter()
            .map(|en| {
                format!(
                    "k({})={} [{}]",
                    en.alpha,
                    en.k_bound,
                    en.floor.map_or("-inf".to_string(), |f| f.to_string())
                )
            })
            .collect();
        let _ = writeln!(out, "weight bounds: {}", floors.join("  "));
        if let (Some(mx), Some(arg)) = (profile.max_floor, profile.argmax_alpha) {
            let _ = writeln!(out, "max floor {mx} at alpha={arg}");
        }
        if profile.exceptional_plus_one {
            let _ = writeln!(out, "note: max exceeds floor(k(1)) by one");
        }
    }
    let _ = writeln!(out, "pass: {}", rep.pass());
    out
}

fn cmd_audit(args: AuditArgs) -> Result<i32, String> {
    let mode = match args.mode {
        ModeArg::P => Mode::P,
        ModeArg::Q => Mode::Q,
        ModeArg::Both => return Err("audit takes --mode p or --mode q".to_string()),
    };
    let params = AuditParams::new(
        args.n,
        args.e,
        args.k,
        args.m,
        args.alpha0,
        args.p0,
        args.q0,
        mode,
    )
    .map_err(|e| e.to_string())?;
    let rep = full_audit(&params);
    match args.format {
        Format::Json => emit(format!("{}\n", rep.to_json())),
        Format::Table => emit(audit_table(&rep)),
        Format::Csv => emit(format!("{AUDIT_CSV_HEADER}\n{}\n", audit_csv_row(&rep))),
    }
    Ok(if rep.pass() { 0 } else { 2 })
}

// ---------------------------------------------------------------------------
// schur
// ---------------------------------------------------------------------------

fn schur_vector_out(v: &SchurVector, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", v.to_json_string()),
        Format::Table => {
            let mut out = String::new();
            for (p, m) in v.terms() {
                let text = p.to_string();
                let _ = writeln!(
                    out,
                    "{:>6}  {}",
                    m,
                    if text.is_empty() { "(zero)" } else { &text }
                );
            }
            if v.is_zero() {
                let _ = writeln!(out, "(zero vector)");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("partition,mult\n");
            for (p, m) in v.terms() {
                let _ = writeln!(out, "\"{}\",{}", p, m);
            }
            out
        }
    }
}

fn cmd_schur(args: SchurArgs) -> Result<i32, String> {
    let need_rank = || args.rank.ok_or_else(|| "--rank is required".to_string());
    if let Some(pair) = &args.product {
        let rank = need_rank()?;
        let i = parse_partition(&pair[0])?;
        let j = parse_partition(&pair[1])?;
        let u = SchurVector::with_term(rank, i, 1);
        let v = SchurVector::with_term(rank, j, 1);
        let prod = lr_product(&u, &v).map_err(|e| e.to_string())?;
        emit(schur_vector_out(&prod, args.format));
        return Ok(0);
    }
    if let Some(pair) = &args.tensor_power {
        let rank = need_rank()?;
        let i = parse_partition(&pair[0])?;
        let t: u32 = pair[1]
            .parse()
            .map_err(|_| format!("bad exponent {:?}", pair[1]))?;
        let v = tensor_power(&i, t, rank).map_err(|e| e.to_string())?;
        emit(schur_vector_out(&v, args.format));
        return Ok(0);
    }
    if let Some(trip) = &args.branch {
        let i = parse_partition(&trip[0])?;
        let ea: u32 = trip[1].parse().map_err(|_| format!("bad rank {:?}", trip[1]))?;
        let eb: u32 = trip[2].parse().map_err(|_| format!("bad rank {:?}", trip[2]))?;
        let pairs = branch_direct_sum(&i, ea, eb);
        match args.format {
            Format::Json => {
                let rows: Vec<serde_json::Value> = pairs
                    .iter()
                    .map(|((j, k), c)| {
                        serde_json::json!({
                            "left": j.to_string(),
                            "right": k.to_string(),
                            "mult": c,
                        })
                    })
                    .collect();
                emit(format!("{}\n", serde_json::Value::Array(rows)));
            }
            Format::Table => {
                let mut out = String::new();
                for ((j, k), c) in &pairs {
                    let _ = writeln!(out, "{:>6}  ({}) (x) ({})", c, j, k);
                }
                emit(out);
            }
            Format::Csv => {
                let mut out = String::from("left,right,mult\n");
                for ((j, k), c) in &pairs {
                    let _ = writeln!(out, "\"{}\",\"{}\",{}", j, k, c);
                }
                emit(out);
            }
        }
        return Ok(0);
    }
    if let Some(text) = &args.dim {
        let rank = need_rank()?;
        let i = parse_partition(text)?;
        let d = dimension(&i, rank).map_err(|e| e.to_string())?;
        match args.format {
            Format::Json => emit(format!(
                "{}\n",
                serde_json::json!({"partition": i.to_string(), "rank": rank, "dimension": d.to_string()})
            )),
            Format::Table => emit(format!("dim S_({}) C^{} = {}\n", i, rank, d)),
            Format::Csv => emit(format!("partition,rank,dimension\n\"{}\",{},{}\n", i, rank, d)),
        }
        return Ok(0);
    }
    Err("one of --product, --tensor-power, --branch, --dim is required".to_string())
}

// ---------------------------------------------------------------------------
// dominance
// ---------------------------------------------------------------------------

fn cmd_dominance(args: DominanceArgs) -> Result<i32, String> {
    let i = parse_partition(&args.i)?;
    let j = parse_partition(&args.j)?;
    let rel = dominates(&i, &j).map_err(|e| e.to_string())?;
    let rel_text = match rel {
        Dominance::StrictlyDominates => "strictly_dominates",
        Dominance::Equivalent => "equivalent",
        Dominance::Dominated => "dominated",
        Dominance::Incomparable => "incomparable",
    };
    match args.format {
        Format::Json => emit(format!(
            "{}\n",
            serde_json::json!({
                "schema": "hookschur/dominance/v1",
                "i": i.to_string(),
                "j": j.to_string(),
                "relation": rel_text,
            })
        )),
        Format::Table => emit(format!("({}) vs ({}): {}\n", i, j, rel_text)),
        Format::Csv => emit(format!(
            "i,j,relation\n\"{}\",\"{}\",{}\n",
            i, j, rel_text
        )),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// ns
// ---------------------------------------------------------------------------

fn cmd_ns(args: NsArgs) -> Result<i32, String> {
    let table = ns_table(args.r).map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => {
            let sigma: Vec<i64> = (0..=args.r).map(|s| table.sigma(s)).collect();
            emit(format!(
                "{}\n",
                serde_json::json!({
                    "schema": "hookschur/ns-table/v1",
                    "r": args.r,
                    "sigma": sigma,
                    "rows": table.rows(),
                })
            ));
        }
        Format::Table => {
            let mut out = String::new();
            for s in 0..=args.r {
                let row = &table.rows()[s as usize];
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "s={s} sigma={:>2}: {}",
                    table.sigma(s),
                    cells.join(" ")
                );
            }
            emit(out);
        }
        Format::Csv => {
            let mut out = String::from("s,a,count\n");
            for s in 0..=args.r {
                for (a, &v) in table.rows()[s as usize].iter().enumerate() {
                    if v > 0 {
                        let _ = writeln!(out, "{s},{a},{v}");
                    }
                }
            }
            emit(out);
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn parse_range(text: &str) -> Result<RangeSpec, String> {
    RangeSpec::parse(text).map_err(|e| e.to_string())
}

fn parse_opt_range(text: &Option<String>) -> Result<Option<RangeSpec>, String> {
    text.as_deref().map(parse_range).transpose()
}

fn cmd_sweep_vanish(args: SweepVanishArgs) -> Result<i32, String> {
    let grid = VanishGrid {
        n: parse_range(&args.n)?,
        e: parse_range(&args.e)?,
        k: parse_range(&args.k)?,
        m: parse_range(&args.m)?,
        alpha: parse_opt_range(&args.alpha)?,
        p: parse_opt_range(&args.p)?,
        q: parse_opt_range(&args.q)?,
    };
    let points = grid.points(&Guards::from_env()).map_err(|e| e.to_string())?;
    let reports = sweep_vanish(&points, args.jobs);
    let mut out = String::new();
    match args.format {
        Format::Csv => {
            let _ = writeln!(out, "{VANISH_CSV_HEADER}");
            for rep in &reports {
                let _ = writeln!(out, "{}", vanish_csv_row(rep));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
            let _ = writeln!(
                out,
                "{}",
                serde_json::json!({"schema": "hookschur/vanish-sweep/v1", "reports": rows})
            );
        }
        Format::Table => {
            for rep in &reports {
                let q = &rep.query;
                let _ = writeln!(
                    out,
                    "n={} e={} k={} m={} alpha={} p={} q={}  threshold={:>4}  guaranteed={}",
                    q.n, q.e, q.k, q.m, q.alpha, q.p, q.q, rep.threshold, rep.guaranteed_pq
                );
            }
        }
    }
    emit(out);
    Ok(0)
}

fn cmd_sweep_audit(args: SweepAuditArgs) -> Result<i32, String> {
    let modes = match args.mode {
        ModeArg::P => vec![Mode::P],
        ModeArg::Q => vec![Mode::Q],
        ModeArg::Both => vec![Mode::P, Mode::Q],
    };
    let grid = AuditGrid {
        n: parse_range(&args.n)?,
        e: parse_range(&args.e)?,
        k: parse_range(&args.k)?,
        m: parse_range(&args.m)?,
        alpha0: parse_opt_range(&args.alpha0)?,
        p0: parse_opt_range(&args.p0)?,
        q0: parse_opt_range(&args.q0)?,
        modes,
    };
    let points = grid.points(&Guards::from_env()).map_err(|e| e.to_string())?;
    let reports = sweep_audit(&points, args.jobs);
    let mut out = String::new();
    match args.format {
        Format::Csv => {
            let _ = writeln!(out, "{AUDIT_CSV_HEADER}");
            for rep in &reports {
                let _ = writeln!(out, "{}", audit_csv_row(rep));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json()).collect();
            let _ = writeln!(
                out,
                "{}",
                serde_json::json!({"schema": "hookschur/audit-sweep/v1", "reports": rows})
            );
        }
        Format::Table => {
            for rep in &reports {
                let _ = writeln!(out, "{}", audit_csv_row(rep));
            }
        }
    }
    emit(out);
    Ok(if reports.iter().all(|r| r.pass()) { 0 } else { 2 })
}

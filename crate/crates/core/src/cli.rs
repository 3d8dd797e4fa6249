//! The `biq` command line: argument parsing, file ingestion and report
//! rendering. [`dispatch`] is the whole program minus process I/O.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::census::{
    run_census, verify_structural, verify_theorem, CensusOptions, CensusReport, StructuralClaim, StructuralReport,
    TheoremCheck, TheoremId,
};
use crate::constructors::{catalog, construct, Family, FamilyParams, GroupName};
use crate::error::{Error, Result};
use crate::identity::{check, resolve_identity, Equation};
use crate::linear::{Biquasigroup, Kind};
use crate::properties::full_report;
use crate::table::{parse_blocks, CayleyTable};

#[derive(Parser, Debug)]
#[command(name = "biq", version, about = "Finite biquasigroup workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an identity on every assignment of a biquasigroup.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        out: Output,
    },
    /// Report structural properties of a biquasigroup.
    Props {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Build a member of a named family.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        group: Option<GroupName>,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        out: Output,
    },
    /// Enumerate the linear specs over a group that satisfy an identity.
    Census {
        #[arg(long)]
        group: GroupName,
        #[arg(long)]
        identity: String,
        #[arg(long, default_value = "middle")]
        kind: Kind,
        #[command(flatten)]
        out: Output,
    },
    /// Compare a census with a theorem's characterization.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Group for linear theorems.
        #[arg(long)]
        group: Option<GroupName>,
        /// Order for structural theorems.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// List the automorphisms of a group.
    Aut {
        #[arg(long)]
        group: GroupName,
        #[command(flatten)]
        out: Output,
    },
    /// Parse an identity and print its canonical form.
    Parse {
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Two-block biquasigroup file.
    #[arg(long)]
    biq: Option<PathBuf>,
    /// Single-table file, used for both operations.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    variant: Option<u8>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append elapsed wall time.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match run(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

/// Entry point for the binary: dispatches `std::env::args` and exits.
pub fn main_entry() -> ! {
    let outcome = dispatch(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Reads a two-block biquasigroup file (`∘` then `*`).
pub fn ingest_biquasigroup(path: &Path) -> Result<Biquasigroup> {
    let source = path.display().to_string();
    let blocks = parse_blocks(&read(path)?, &source)?;
    match <[CayleyTable; 2]>::try_from(blocks) {
        Ok([circ, star]) => Biquasigroup::new(circ, star),
        Err(blocks) => Err(Error::Format {
            path: source,
            line: 1,
            column: 1,
            message: format!("expected 2 table blocks, found {}", blocks.len()),
        }),
    }
}

/// Reads a single-table file as the biquasigroup `(Q, ∘, ∘)`.
pub fn ingest_table(path: &Path) -> Result<Biquasigroup> {
    let source = path.display().to_string();
    let blocks = parse_blocks(&read(path)?, &source)?;
    match <[CayleyTable; 1]>::try_from(blocks) {
        Ok([t]) => Biquasigroup::single(t),
        Err(blocks) => Err(Error::Format {
            path: source,
            line: 1,
            column: 1,
            message: format!("expected 1 table block, found {}", blocks.len()),
        }),
    }
}

fn ingest(input: &Input) -> Result<Biquasigroup> {
    match (&input.biq, &input.table) {
        (Some(p), _) => ingest_biquasigroup(p),
        (None, Some(p)) => ingest_table(p),
        (None, None) => Err(Error::InvalidParameters("one of --biq or --table is required".into())),
    }
}

fn json_text(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn no_csv(what: &str) -> Error {
    Error::InvalidParameters(format!("csv output is not available for {what} reports"))
}

fn timing_line(out: &Output, start: Instant) -> String {
    if out.timing {
        format!("elapsed_ms: {}\n", start.elapsed().as_millis())
    } else {
        String::new()
    }
}

fn run(command: Command) -> Result<Outcome> {
    let start = Instant::now();
    match command {
        Command::Check { input, identity, out } => {
            let biq = ingest(&input)?;
            let eq = resolve_identity(&identity)?;
            let result = check(&biq, &eq);
            let mut text = match out.format {
                Format::Csv => return Err(no_csv("check")),
                Format::Json => json_text(&json!({
                    "identity": eq.render(),
                    "holds": result.holds,
                    "counterexample": result.counterexample,
                })),
                Format::Text => {
                    let mut s = String::new();
                    match &result.counterexample {
                        None => s.push_str("holds\n"),
                        Some(ce) => {
                            let mut bindings = ce.assignment.clone();
                            bindings.sort_by_key(|b| b.var);
                            let vals: Vec<String> = bindings
                                .iter()
                                .map(|b| format!("{}={}", b.var.name(), b.value))
                                .collect();
                            let _ = writeln!(s, "fails");
                            let _ = writeln!(s, "counterexample: {}", vals.join(" "));
                            let _ = writeln!(s, "lhs: {}", ce.lhs);
                            let _ = writeln!(s, "rhs: {}", ce.rhs);
                        }
                    }
                    s
                }
            };
            text.push_str(&timing_line(&out, start));
            Ok(Outcome {
                code: if result.holds { 0 } else { 1 },
                stdout: text,
                stderr: String::new(),
            })
        }
        Command::Props { input, out } => {
            let report = full_report(&ingest(&input)?);
            let note = "medial and paramedial are decided per table; linearity over a common group is not checked";
            let mut text = match out.format {
                Format::Text => {
                    let mut s = String::new();
                    for (k, v) in report.fields() {
                        let _ = writeln!(s, "{k}: {v}");
                    }
                    let _ = writeln!(s, "note: {note}");
                    s
                }
                Format::Json => {
                    let mut value = serde_json::to_value(&report).expect("report serializes");
                    value["note"] = json!(note);
                    json_text(&value)
                }
                Format::Csv => {
                    let mut s = String::from("property,value\n");
                    for (k, v) in report.fields() {
                        let _ = writeln!(s, "{k},\"{v}\"");
                    }
                    s
                }
            };
            text.push_str(&timing_line(&out, start));
            Ok(Outcome::ok(text))
        }
        Command::Construct {
            family,
            group,
            params,
            out,
        } => {
            let family = resolve_family(&family, params.variant)?;
            let g = match &group {
                Some(name) => Some(catalog(name)?),
                None => None,
            };
            let p = FamilyParams {
                a: params.a,
                b: params.b,
                c: params.c,
                d: params.d,
                n: params.n,
            };
            let biq = construct(family, g.as_ref(), &p)?;
            let mut text = match out.format {
                Format::Text => biq.to_text(),
                Format::Json => {
                    let rows = |t: &CayleyTable| (0..t.order()).map(|x| t.row(x).to_vec()).collect::<Vec<_>>();
                    json_text(&json!({
                        "family": family.name(),
                        "target": family.target().map(|b| b.name()),
                        "order": biq.order(),
                        "circ": rows(biq.circ()),
                        "star": rows(biq.star()),
                    }))
                }
                Format::Csv => return Err(no_csv("construct")),
            };
            if out.timing {
                text.push_str(&format!("# elapsed_ms: {}\n", start.elapsed().as_millis()));
            }
            Ok(Outcome::ok(text))
        }
        Command::Census {
            group,
            identity,
            kind,
            out,
        } => {
            let eq = resolve_identity(&identity)?;
            let report = run_census(&group, &eq, kind, &CensusOptions::from_env())?;
            let mut text = render_census(&report, out.format);
            if out.format == Format::Text {
                text.push_str(&timing_line(&out, start));
            }
            Ok(Outcome::ok(text))
        }
        Command::Verify { theorem, group, n, out } => {
            let opts = CensusOptions::from_env();
            let mut text = match theorem.parse::<TheoremId>() {
                Ok(t) if t.is_linear() => {
                    let group =
                        group.ok_or_else(|| Error::InvalidParameters(format!("theorem {t} requires --group")))?;
                    render_check(&verify_theorem(t, &group, &opts)?, out.format)?
                }
                parsed => {
                    let claims = match parsed {
                        Ok(t) => StructuralClaim::for_theorem(t)?,
                        Err(e) => vec![theorem.parse::<StructuralClaim>().map_err(|_| e)?],
                    };
                    let n = n.ok_or_else(|| {
                        Error::InvalidParameters(format!("structural theorem {theorem} requires --n"))
                    })?;
                    let reports = claims
                        .into_iter()
                        .map(|c| verify_structural(c, n, &opts))
                        .collect::<Result<Vec<_>>>()?;
                    render_structural(&reports, out.format)?
                }
            };
            if out.format == Format::Text {
                text.push_str(&timing_line(&out, start));
            }
            Ok(Outcome::ok(text))
        }
        Command::Aut { group, out } => {
            let g = catalog(&group)?;
            let auts = g.automorphisms();
            let text = match out.format {
                Format::Text => {
                    let mut s = format!("group: {group}\norder: {}\ncount: {}\n", g.order(), auts.len());
                    for (i, p) in auts.iter().enumerate() {
                        let _ = writeln!(s, "{i}: {p}");
                    }
                    s.push_str(&timing_line(&out, start));
                    s
                }
                Format::Json => json_text(&json!({
                    "group": group.to_string(),
                    "order": g.order(),
                    "count": auts.len(),
                    "automorphisms": auts,
                })),
                Format::Csv => {
                    let mut s = String::from("index,images\n");
                    for (i, p) in auts.iter().enumerate() {
                        let images: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(s, "{i},{}", images.join(" "));
                    }
                    s
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Parse { identity, out } => {
            let eq: Equation = resolve_identity(&identity)?;
            let vars: Vec<String> = eq.vars().iter().map(|v| v.name().to_string()).collect();
            let text = match out.format {
                Format::Text => format!("{}\nvariables: {}\n", eq.render(), vars.join(" ")),
                Format::Json => json_text(&json!({ "identity": eq.render(), "variables": vars })),
                Format::Csv => return Err(no_csv("parse")),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn resolve_family(name: &str, variant: Option<u8>) -> Result<Family> {
    match (name, variant) {
        ("c72", Some(1)) => Ok(Family::C72V1),
        ("c72", Some(2)) => Ok(Family::C72V2),
        ("c72", Some(v)) => Err(Error::InvalidParameters(format!("c72 variant must be 1 or 2, got {v}"))),
        ("c72", None) => Err(Error::InvalidParameters("family c72 requires --variant 1|2".into())),
        _ => name.parse(),
    }
}

fn render_census(r: &CensusReport, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from("phi,psi,a,alpha,beta,b\n");
            for d in &r.satisfying {
                s.push_str(&d.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Json => json_text(&json!({
            "group": r.group,
            "identity": r.identity,
            "kind": r.kind,
            "scope": r.scope,
            "total_specs": r.total_specs,
            "satisfying_count": r.satisfying.len(),
            "satisfying": r.satisfying,
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "group: {}", r.group);
            let _ = writeln!(s, "identity: {}", r.identity);
            let _ = writeln!(s, "kind: {}", r.kind);
            let _ = writeln!(s, "scope: {}", r.scope);
            let _ = writeln!(s, "total_specs: {}", r.total_specs);
            let _ = writeln!(s, "satisfying: {}", r.satisfying.len());
            for d in &r.satisfying {
                let _ = writeln!(s, "  {}", d.csv_row());
            }
            s
        }
    }
}

fn render_check(c: &TheoremCheck, format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => {
            let mut s = String::from("identity,kind,phi,psi,a,alpha,beta,b\n");
            for d in &c.census_set {
                let id = d.identity.map_or("all", |b| b.name());
                let _ = writeln!(s, "{id},{},{}", d.kind, d.spec.csv_row());
            }
            s
        }
        Format::Json => json_text(&json!({
            "theorem": c.theorem,
            "group": c.group,
            "agree": c.agree,
            "census_count": c.census_set.len(),
            "predicate_count": c.predicate_set.len(),
            "census_set": c.census_set,
            "predicate_set": c.predicate_set,
            "witnesses": c.witnesses,
            "neutral_check": c.neutral_check,
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "theorem: {}", c.theorem);
            let _ = writeln!(s, "group: {}", c.group);
            let _ = writeln!(s, "satisfying: {}", c.census_set.len());
            let _ = writeln!(s, "predicate: {}", c.predicate_set.len());
            let _ = writeln!(s, "agree: {}", c.agree);
            let _ = writeln!(s, "witnesses: {}", c.witnesses.len());
            for w in &c.witnesses {
                let id = w.identity.map_or("all", |b| b.name());
                let _ = writeln!(s, "  {id} {} {}", w.kind, w.spec.csv_row());
            }
            if let Some(nc) = &c.neutral_check {
                let _ = writeln!(s, "common_right_neutral: {}/{}", nc.with_common_neutral, nc.specs);
                let _ = writeln!(
                    s,
                    "neutral_is_minus_beta_inv_b: {}/{}",
                    nc.matching_minus_beta_inv_b, nc.specs
                );
            }
            s
        }
    })
}

fn render_structural(reports: &[StructuralReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => return Err(no_csv("structural")),
        Format::Json => json_text(&reports),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "claim: {}", r.claim);
                let _ = writeln!(s, "identity: {}", r.identity);
                let _ = writeln!(s, "order: {}", r.order);
                let _ = writeln!(s, "pairs_examined: {}", r.pairs_examined);
                let _ = writeln!(s, "satisfying_pairs: {}", r.satisfying_pairs);
                let _ = writeln!(s, "violations: {}", r.violations.len());
                for v in r.violations.iter().take(5) {
                    let _ = writeln!(
                        s,
                        "  {}: circ {:?} star {:?}",
                        v.reason,
                        v.circ.entries(),
                        v.star.entries()
                    );
                }
            }
            s
        }
    })
}

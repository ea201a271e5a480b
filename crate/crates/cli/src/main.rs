//! `bckcode`: verify, encode, construct, lift and enumerate from the shell.
//!
//! Exit codes: 0 success, 1 property failure (report printed), 2 input or
//! hypothesis error, 3 internal invariant breach.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bckcode_core::census::{census_with_limit, DEFAULT_MAX_CENSUS_ORDER};
use bckcode_core::code::DEFAULT_MAX_CN_ORDER;
use bckcode_core::format::{parse_algebra, parse_code, parse_function, write_algebra, write_code};
use bckcode_core::report::{
    CodesReport, ConstructReport, EncodeReport, FamilyReport, LiftReport, Report, ReportBody,
    VerifyReport,
};
use bckcode_core::{
    cn_count, construct_from_code, enumerate_cn_with_limit, equivalence_classes, family_algebra,
    generate_code, lift_code, verify_roundtrip, AxiomReport, BckAlgebra, BckFunction, Error,
};
use clap::{ArgGroup, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bckcode",
    version,
    about = "BCK-algebras and binary block codes"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the BCK axioms of an algebra file.
    Verify {
        /// Algebra file, or `-` for stdin.
        file: PathBuf,
    },
    /// Print the code generated by an algebra and a BCK-function.
    Encode {
        file: PathBuf,
        /// `label value` lines; defaults to the identity on the carrier.
        #[arg(long)]
        function: Option<PathBuf>,
    },
    /// Build the algebra of a square unitriangular code and check the round trip.
    Construct {
        file: PathBuf,
        /// Report an inexact round trip as a warning instead of failing.
        #[arg(long)]
        lax: bool,
    },
    /// Embed any code into an algebra whose code contains it.
    Lift { file: PathBuf },
    /// Enumerate the code family, all BCK-algebras, or the family algebra.
    #[command(group(ArgGroup::new("what").required(true).args(["codes", "algebras", "family"])))]
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        codes: bool,
        #[arg(long)]
        algebras: bool,
        #[arg(long)]
        family: bool,
        /// With --codes, print every code as well as the count.
        #[arg(long)]
        list: bool,
        /// Raise the default order limit.
        #[arg(long)]
        max_order: Option<usize>,
    },
}

/// What a command prints and how it exits.
struct Outcome {
    status: u8,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

fn failure(err: Error) -> Outcome {
    let status = match err {
        Error::NotBck(_) => 1,
        Error::Internal(_) => 3,
        _ => 2,
    };
    Outcome {
        status,
        stdout: String::new(),
        stderr: format!("error: {err}\n"),
    }
}

fn read_input(path: &Path) -> Result<String, Outcome> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map(|_| text).map_err(|e| Outcome {
        status: 2,
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
    })
}

fn render(json: bool, body: ReportBody, text: String) -> String {
    if json {
        let mut out = Report::new(body).to_json();
        out.push('\n');
        out
    } else {
        text
    }
}

fn axiom_lines(report: &AxiomReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        let _ = write!(
            out,
            "axiom {} [{}]: ",
            check.axiom.number(),
            check.axiom.identity()
        );
        match &check.witness {
            None => out.push_str("holds\n"),
            Some(w) => {
                let _ = write!(out, "FAILS at x={}", w.x);
                if let Some(y) = w.y {
                    let _ = write!(out, " y={y}");
                }
                if let Some(z) = w.z {
                    let _ = write!(out, " z={z}");
                }
                let _ = writeln!(out, " (got {})", w.found);
            }
        }
    }
    let _ = writeln!(out, "bci: {}\nbck: {}", report.is_bci, report.is_bck);
    out
}

fn verify(path: &Path, json: bool) -> Outcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let alg = match parse_algebra(&text) {
        Ok(a) => a,
        Err(e) => return failure(e),
    };
    let report = match VerifyReport::new(&alg) {
        Ok(r) => r,
        Err(e) => return failure(e),
    };
    let mut out = format!("order: {}\n", report.order);
    out.push_str(&axiom_lines(&report.axioms));
    let property =
        |name: &str, holds: Option<bool>, witness: Option<(usize, usize)>| match (holds, witness) {
            (Some(true), _) => format!("{name}: true\n"),
            (Some(false), Some((x, y))) => format!("{name}: false (x={x}, y={y})\n"),
            _ => String::new(),
        };
    out.push_str(&property(
        "commutative",
        report.commutative,
        report.commutativity_witness,
    ));
    out.push_str(&property(
        "implicative",
        report.implicative,
        report.implicativity_witness,
    ));
    if let Some(rel) = &report.order_relation {
        let below: Vec<String> = (0..alg.order())
            .flat_map(|x| (0..alg.order()).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && rel[x][y])
            .map(|(x, y)| format!("{}<{}", alg.name(x), alg.name(y)))
            .collect();
        let _ = writeln!(out, "relation: {}", below.join(" "));
    }
    let status = if report.axioms.is_bck { 0 } else { 1 };
    Outcome {
        status,
        stdout: render(json, ReportBody::Verify(report), out),
        stderr: String::new(),
    }
}

fn encode(path: &Path, function: Option<&Path>, json: bool) -> Outcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let alg = match parse_algebra(&text).and_then(BckAlgebra::new) {
        Ok(a) => a,
        Err(Error::NotBck(report)) => {
            return Outcome {
                status: 1,
                stdout: String::new(),
                stderr: axiom_lines(&report),
            };
        }
        Err(e) => return failure(e),
    };
    let f = match function {
        None => BckFunction::identity(&alg),
        Some(p) => {
            let pairs = match read_input(p) {
                Ok(t) => parse_function(&t),
                Err(o) => return o,
            };
            match pairs.and_then(|pairs| BckFunction::new(&alg, pairs)) {
                Ok(f) => f,
                Err(e) => return failure(e),
            }
        }
    };
    let code = generate_code(&f);
    let report = EncodeReport {
        labels: f.labels().to_vec(),
        values: f.values().to_vec(),
        classes: equivalence_classes(&f)
            .classes
            .into_iter()
            .map(|c| c.members)
            .collect(),
        code: code.clone(),
    };
    Outcome::ok(render(json, ReportBody::Encode(report), write_code(&code)))
}

fn construct(path: &Path, lax: bool, json: bool) -> Outcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let code = match parse_code(&text) {
        Ok(c) => c,
        Err(e) => return failure(e),
    };
    let (built, roundtrip) =
        match construct_from_code(&code).and_then(|b| Ok((b, verify_roundtrip(&code)?))) {
            Ok(pair) => pair,
            Err(e) => return failure(e),
        };
    let mut out = write_algebra(&built.algebra);
    let _ = writeln!(out, "# roundtrip exact: {}", roundtrip.exact);
    let _ = writeln!(out, "# self-describing: {}", roundtrip.self_describing);
    for m in &roundtrip.mismatches {
        let _ = writeln!(
            out,
            "# {}: expected {}, regenerated {}",
            built.algebra.name(m.element),
            m.expected,
            m.produced
        );
    }
    let (status, stderr) = match (roundtrip.exact, lax) {
        (true, _) => (0, String::new()),
        (false, true) => (
            0,
            "warning: regenerated code differs from the input\n".to_string(),
        ),
        (false, false) => (1, "regenerated code differs from the input\n".to_string()),
    };
    let report = ConstructReport {
        table: built.algebra.to_rows(),
        roundtrip,
    };
    Outcome {
        status,
        stdout: render(json, ReportBody::Construct(report), out),
        stderr,
    }
}

fn lift(path: &Path, json: bool) -> Outcome {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let lift = match parse_code(&text).and_then(|c| lift_code(&c)) {
        Ok(l) => l,
        Err(e) => return failure(e),
    };
    let report = LiftReport::from(&lift);
    if !report.contains_source {
        return failure(Error::Internal(
            "lifted code does not contain the input".into(),
        ));
    }
    let q = lift.augmented.rows();
    let mut out = format!(
        "# augmented matrix {q}x{q}{}\n",
        if lift.prepended {
            ", all-ones row prepended"
        } else {
            ""
        }
    );
    for row in lift.augmented.row_strings() {
        let _ = writeln!(out, "# {row}");
    }
    let map: Vec<String> = lift
        .column_map()
        .iter()
        .map(|(c, e)| format!("{}->{}", c + 1, e + 1))
        .collect();
    let _ = writeln!(out, "# column map: {}", map.join(" "));
    let _ = writeln!(out, "# contains source: {}", report.contains_source);
    out.push_str(&write_code(&lift.lifted_code));
    Outcome::ok(render(json, ReportBody::Lift(report), out))
}

fn enumerate(
    order: usize,
    codes: bool,
    algebras: bool,
    list: bool,
    max_order: Option<usize>,
    json: bool,
) -> Outcome {
    if codes {
        let iter = match enumerate_cn_with_limit(order, max_order.unwrap_or(DEFAULT_MAX_CN_ORDER)) {
            Ok(it) => it,
            Err(e) => return failure(e),
        };
        let count = cn_count(order);
        let all = list.then(|| iter.map(|c| c.into_code()).collect::<Vec<_>>());
        let mut out = format!("count: {count}\n");
        for code in all.iter().flatten() {
            out.push('\n');
            out.push_str(&write_code(code));
        }
        return Outcome::ok(render(
            json,
            ReportBody::Codes(CodesReport {
                order,
                count,
                codes: all,
            }),
            out,
        ));
    }
    if algebras {
        let limit = max_order.unwrap_or(DEFAULT_MAX_CENSUS_ORDER);
        let stderr = if order > DEFAULT_MAX_CENSUS_ORDER && order <= limit {
            format!("warning: order {order} census can take a long time\n")
        } else {
            String::new()
        };
        let report = match census_with_limit(order, limit) {
            Ok(r) => r,
            Err(e) => return failure(e),
        };
        let mut out = String::new();
        let _ = writeln!(out, "order: {}", report.order);
        let _ = writeln!(out, "tables: {}", report.total_tables);
        let _ = writeln!(out, "isomorphism classes: {}", report.iso_classes);
        let _ = writeln!(out, "similarity classes: {}", report.similarity_classes);
        let _ = writeln!(
            out,
            "labelled code classes: {}",
            report.labeled_code_classes
        );
        let _ = writeln!(
            out,
            "isomorphic pairs with different codes: {}",
            report.isomorphic_code_mismatch
        );
        let _ = writeln!(
            out,
            "lower bound {}: {}",
            report.bound_threshold,
            if report.bound_check { "holds" } else { "FAILS" }
        );
        for (i, class) in report.classes.iter().enumerate() {
            let rows: Vec<String> = class
                .representative
                .iter()
                .map(|r| {
                    r.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let _ = writeln!(
                out,
                "class {}: size {} commutative {} implicative {} table [{}] code {}",
                i + 1,
                class.size,
                class.commutative,
                class.implicative,
                rows.join(" | "),
                class.canonical_code.to_strings().join(" ")
            );
        }
        let mut outcome = Outcome::ok(render(json, ReportBody::Census(report), out));
        outcome.stderr = stderr;
        return outcome;
    }
    let family = match family_algebra(order) {
        Ok(f) => f,
        Err(e) => return failure(e),
    };
    let mut out = format!("# family algebra of order {}\n", family.algebra.order());
    out.push_str(&write_algebra(&family.algebra));
    out.push_str("# code\n");
    for w in family.code.words() {
        let _ = writeln!(out, "# {w}");
    }
    Outcome::ok(render(
        json,
        ReportBody::Family(FamilyReport::from(&family)),
        out,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify { file } => verify(file, cli.json),
        Command::Encode { file, function } => encode(file, function.as_deref(), cli.json),
        Command::Construct { file, lax } => construct(file, *lax, cli.json),
        Command::Lift { file } => lift(file, cli.json),
        Command::Enumerate {
            order,
            codes,
            algebras,
            family: _,
            list,
            max_order,
        } => enumerate(*order, *codes, *algebras, *list, *max_order, cli.json),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.status)
}

//! Command-line front end. Exit status: 0 success, 1 failed validation or
//! check, 2 usage or parse error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use effect_logic::deduction::{atoms, enumerate_ded, generate, theorem3_report};
use effect_logic::dsl::{emit_algebra, parse_algebra};
use effect_logic::enumerate::enumerate_effect_algebras;
use effect_logic::implication::implication_table;
use effect_logic::laws::{
    check_intro_adjointness, check_prop1, check_prop2_equivalence, counterexample_search,
    identity_equ1, LawReport,
};
use effect_logic::render::{
    emit_algebra_dot, emit_table, implication_grid, order_grid, sum_grid, TableFormat,
};
use effect_logic::residuation::{from_effect_algebra, roundtrip_check, surp_report};
use effect_logic::suites::{parse_suite_list, run_suite};
use effect_logic::{algebra, fixtures, EffectAlgebra, Error};

// Output is collected and written once at exit; writes to a String cannot fail.
macro_rules! say {
    ($out:expr, $($t:tt)*) => {{ let _ = writeln!($out, $($t)*); }};
}
macro_rules! put {
    ($out:expr, $($t:tt)*) => {{ let _ = write!($out, $($t)*); }};
}

#[derive(Parser)]
#[command(
    name = "effalg",
    version,
    about = "Finite effect algebras and unsharp implication"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file, or `fixture:NAME` for a bundled one
    file: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Aligned,
    Csv,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Aligned => TableFormat::Aligned,
            Format::Csv => TableFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the effect-algebra axioms
    Validate(Input),
    /// Print the induced order
    Order {
        #[command(flatten)]
        input: Input,
        /// Hasse diagram in DOT instead of the order matrix
        #[arg(long)]
        dot: bool,
    },
    /// Print x → y
    Implies {
        #[command(flatten)]
        input: Input,
        x: String,
        y: String,
    },
    /// Print the full implication table
    Table {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "aligned")]
        format: Format,
        /// The partial sum instead of the implication
        #[arg(long)]
        sum: bool,
    },
    /// Build the residuated poset and report its conditions
    Residuate {
        #[command(flatten)]
        input: Input,
        /// Also convert back and compare with the input
        #[arg(long)]
        roundtrip: bool,
    },
    /// Deductive systems
    Ded {
        #[command(flatten)]
        input: Input,
        #[arg(long, group = "mode")]
        enumerate: bool,
        #[arg(long, group = "mode")]
        atoms: bool,
        /// Comma-separated generators
        #[arg(long, group = "mode", value_name = "X,Y,...")]
        generate: Option<String>,
    },
    /// Contraposition and related laws
    Laws {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        contraposition: bool,
        #[arg(long)]
        identity1: bool,
        #[arg(long)]
        intro_adjointness: bool,
        #[arg(long)]
        monotonous: bool,
    },
    /// List every effect algebra with N elements
    Enumerate {
        /// Carrier size, 2 to 7
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        count_only: bool,
        /// Write one file per algebra into DIR
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Run property suites; exit 0 iff all pass
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated suite names, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print a bundled algebra
    Fixture {
        /// E9, E6, BOOL-k, CHAIN-n; omit to list
        name: Option<String>,
    },
}

/// How a subcommand ended, mapped to the exit status.
enum Fail {
    Check(String),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid(r) => Fail::Check(r.to_string()),
            Error::Parse(_)
            | Error::UnknownFixture(_)
            | Error::UnknownLabel(_)
            | Error::UnknownSuite(_)
            | Error::Io(_) => Fail::Usage(e.to_string()),
            other => Fail::Check(other.to_string()),
        }
    }
}

type Outcome = Result<(), Fail>;

fn read_source(arg: &str) -> Result<String, Error> {
    match arg.strip_prefix("fixture:") {
        Some(name) => fixtures::text(name),
        None => Ok(fs::read_to_string(arg)?),
    }
}

fn load(input: &Input) -> Result<EffectAlgebra, Error> {
    parse_algebra(&read_source(&input.file)?)
}

fn element(e: &EffectAlgebra, label: &str) -> Result<usize, Error> {
    e.index_of(label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

fn print_law(out: &mut String, e: &EffectAlgebra, r: &LawReport) {
    let status = if r.holds_globally { "holds" } else { "fails" };
    say!(out, "{}: {status}", r.law);
    for f in &r.failing_pairs {
        let kind = if f.comparable {
            "comparable"
        } else {
            "incomparable"
        };
        say!(
            out,
            "  ({},{}) {kind}: {} vs {}",
            e.label(f.x),
            e.label(f.y),
            e.render(f.lhs),
            e.render(f.rhs)
        );
    }
}

fn run(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Validate(input) => {
            let raw = parse_algebra_raw(&input)?;
            match algebra::validate(&raw) {
                Ok(e) => {
                    say!(
                        out,
                        "{}: valid effect algebra on {} elements",
                        e.name(),
                        e.len()
                    );
                    Ok(())
                }
                Err(report) => Err(Fail::Check(report.to_string())),
            }
        }
        Command::Order { input, dot } => {
            let e = load(&input)?;
            if dot {
                put!(out, "{}", emit_algebra_dot(&e));
            } else {
                put!(
                    out,
                    "{}",
                    emit_table(&order_grid(e.order()), TableFormat::Aligned)
                );
                say!(out, "lattice: {}", e.is_lattice());
            }
            Ok(())
        }
        Command::Implies { input, x, y } => {
            let e = load(&input)?;
            let (x, y) = (element(&e, &x)?, element(&e, &y)?);
            say!(out, "{}", e.render(e.implies(x, y)));
            Ok(())
        }
        Command::Table { input, format, sum } => {
            let e = load(&input)?;
            let grid = if sum {
                sum_grid(&e)
            } else {
                implication_grid(&implication_table(&e))
            };
            put!(out, "{}", emit_table(&grid, format.into()));
            Ok(())
        }
        Command::Residuate { input, roundtrip } => {
            let e = load(&input)?;
            let report = surp_report(&e);
            put!(out, "{report}");
            let mut ok = report.all_pass();
            match from_effect_algebra(&e) {
                Ok(c) => say!(out, "divisible: {}", c.is_divisible()),
                Err(r) => {
                    say!(out, "not a strict unsharp residuated poset:\n{r}");
                    ok = false;
                }
            }
            if roundtrip {
                let rt = roundtrip_check(&e);
                say!(out, "roundtrip identical: {}", rt.identical);
                if let Some(err) = &rt.error {
                    say!(out, "  {err}");
                }
                for &(x, y, a, b) in &rt.diffs {
                    let show =
                        |v: Option<usize>| v.map_or("-".to_string(), |z| e.label(z).to_string());
                    say!(
                        out,
                        "  {} + {}: {} became {}",
                        e.label(x),
                        e.label(y),
                        show(a),
                        show(b)
                    );
                }
                ok &= rt.identical;
            }
            if ok {
                Ok(())
            } else {
                Err(Fail::Check("residuation checks failed".into()))
            }
        }
        Command::Ded {
            input,
            enumerate,
            atoms: want_atoms,
            generate: gens,
        } => {
            let e = load(&input)?;
            if let Some(list) = gens {
                let labels: Vec<&str> = list
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                let m = e.subset(&labels)?;
                say!(out, "{}", e.render(generate(&e, m)));
            } else if want_atoms {
                for a in atoms(&e)? {
                    say!(out, "{}", e.render(a));
                }
            } else if enumerate {
                let systems = enumerate_ded(&e)?;
                say!(out, "{} deductive systems", systems.len());
                for s in systems {
                    say!(out, "{}", e.render(s));
                }
            } else {
                let r = theorem3_report(&e)?;
                put!(out, "{r}");
                if !r.all_pass() {
                    return Err(Fail::Check("characterization check failed".into()));
                }
            }
            Ok(())
        }
        Command::Laws {
            input,
            contraposition,
            identity1,
            intro_adjointness,
            monotonous,
        } => {
            let e = load(&input)?;
            let all = !(contraposition || identity1 || intro_adjointness || monotonous);
            // law failures are findings; only a broken invariant is an error
            let mut broken = Vec::new();
            if all || contraposition {
                let r = counterexample_search(&e);
                print_law(out, &e, &r);
                let p1 = check_prop1(&e);
                put!(out, "{p1}");
                if !r.comparable_pairs_hold || !p1.all_pass() {
                    broken.push("contraposition failed on a comparable pair");
                }
            }
            if all || identity1 {
                match identity_equ1(&e) {
                    Ok(r) => {
                        print_law(out, &e, &r);
                        let p = check_prop2_equivalence(&e)?;
                        say!(
                            out,
                            "law and identity agree: {} (law {}, identity {})",
                            p.agree(),
                            p.contraposition_holds,
                            p.identity_holds
                        );
                        if !p.agree() {
                            broken.push("law and identity disagree");
                        }
                    }
                    Err(Error::NotALattice) if all => {
                        say!(out, "identity: skipped, order is not a lattice")
                    }
                    Err(err) => return Err(err.into()),
                }
            }
            if all || intro_adjointness {
                let r = check_intro_adjointness(&e);
                match r.witness {
                    None => say!(
                        out,
                        "intro adjointness: holds on all {} triples",
                        r.triples_checked
                    ),
                    Some((x, y, z)) => say!(
                        out,
                        "intro adjointness: fails at ({},{},{})",
                        e.label(x),
                        e.label(y),
                        e.label(z)
                    ),
                }
            }
            if all || monotonous || intro_adjointness {
                let m = algebra::is_monotonous(&e);
                let how = if m.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                };
                say!(out, "monotonous: {} ({how}, {} cases)", m.holds, m.cases);
                if let Some((x, a, b)) = m.witness {
                    say!(
                        out,
                        "  x = {}, A = {}, B = {}",
                        e.label(x),
                        e.render(a),
                        e.render(b)
                    );
                }
            }
            if broken.is_empty() {
                Ok(())
            } else {
                Err(Fail::Check(broken.join("; ")))
            }
        }
        Command::Enumerate {
            n,
            up_to_iso,
            count_only,
            emit,
        } => {
            let r =
                enumerate_effect_algebras(n, up_to_iso).map_err(|e| Fail::Usage(e.to_string()))?;
            let summary = format!("n={} labeled={} iso={}", r.n, r.labeled_count, r.iso_count);
            if count_only {
                say!(out, "{summary}");
                return Ok(());
            }
            if let Some(dir) = emit {
                fs::create_dir_all(&dir).map_err(|e| Fail::Usage(e.to_string()))?;
                for e in &r.algebras {
                    let path = dir.join(format!("{}.alg", e.name()));
                    fs::write(&path, emit_algebra(e))
                        .map_err(|err| Fail::Usage(err.to_string()))?;
                }
                say!(
                    out,
                    "{summary}; wrote {} files to {}",
                    r.algebras.len(),
                    dir.display()
                );
                return Ok(());
            }
            say!(out, "# {summary}");
            for e in &r.algebras {
                put!(out, "{}", emit_algebra(e));
            }
            Ok(())
        }
        Command::Check { input, suite } => {
            let names = parse_suite_list(&suite).map_err(Fail::Usage)?;
            let e = load(&input)?;
            let mut failed = Vec::new();
            for name in names {
                let r = run_suite(&e, name)?;
                put!(out, "{r}");
                if !r.all_pass() {
                    failed.push(name);
                }
            }
            if failed.is_empty() {
                say!(out, "{}: all suites pass", e.name());
                Ok(())
            } else {
                Err(Fail::Check(format!(
                    "failing suites: {}",
                    failed.join(", ")
                )))
            }
        }
        Command::Fixture { name } => {
            match name {
                Some(name) => put!(out, "{}", fixtures::text(&name)?),
                None => {
                    for n in fixtures::names() {
                        say!(out, "{n}");
                    }
                }
            }
            Ok(())
        }
    }
}

fn parse_algebra_raw(input: &Input) -> Result<algebra::RawAlgebra, Error> {
    let text = read_source(&input.file)?;
    Ok(effect_logic::dsl::parse_spec(&text)?.to_raw())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(t) = std::env::var("THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe downstream is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

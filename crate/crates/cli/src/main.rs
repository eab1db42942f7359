//! `eulab`: command-line access to the enumerators, gamma-expansions, grammar
//! derivatives, the PRW involution, the group action and the check registry.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error,
//! 3 enumeration cap exceeded.

use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use eulab::action::{orbit, orbit_dot};
use eulab::gamma::{gamma_expand, gamma_from_class};
use eulab::identity::{build, registry, run_all, verify, CheckReport, Params};
use eulab::perm::stats;
use eulab::{bijection, EnumeratorKind, Error, GammaInterp, Grammar, MultiPoly, PermClass, Permutation, Verdict};

#[derive(Parser)]
#[command(name = "eulab", version, about = "Exact binomial-Stirling-Eulerian combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation statistics and group-action orbits.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Enumerator polynomials.
    Poly(PolyArgs),
    /// Gamma-coefficients of the binomial-Stirling-Eulerian polynomial.
    Gamma(GammaArgs),
    /// Formal derivatives with respect to a grammar.
    #[command(subcommand)]
    Grammar(GrammarCmd),
    /// The des/asc-swapping involution on PRW permutations.
    #[command(subcommand)]
    Bijection(BijectionCmd),
    /// Run one registry check, or all of them.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum PermCmd {
    /// Statistics of a permutation, e.g. `perm stats "2 1 3"`.
    Stats {
        word: Permutation,
        #[command(flatten)]
        out: Output,
    },
    /// Orbit under the modified Foata-Strehl action.
    Orbit {
        word: Permutation,
        #[command(flatten)]
        out: Output,
        /// Emit a Graphviz graph.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Bse,
    BseZ,
    Ptilde,
    Se,
}

#[derive(Args)]
struct PolyArgs {
    kind: PolyKind,
    #[arg(short)]
    n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum Interp {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    Expand,
}

#[derive(Args)]
struct GammaArgs {
    #[arg(short)]
    n: usize,
    #[arg(long, value_enum, default_value = "expand")]
    interp: Interp,
    #[command(flatten)]
    out: Output,
}

#[derive(Subcommand)]
enum GrammarCmd {
    /// Apply the derivative `steps` times to a start variable.
    Derive {
        /// Grammar file with rules `head -> expr ;`.
        #[arg(long, required_unless_present = "builtin", conflicts_with = "builtin")]
        file: Option<String>,
        /// A built-in grammar: G or Gtilde.
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long)]
        start: String,
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand)]
enum BijectionCmd {
    /// Image of one PRW permutation.
    Phi {
        word: Permutation,
        #[command(flatten)]
        out: Output,
    },
    /// The whole correspondence on PRW_n.
    Table {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a check id.
    target: String,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    a: Option<usize>,
    #[arg(short)]
    b: Option<usize>,
    #[arg(long)]
    class: Option<PermClass>,
    /// Upper size bound for `verify all`.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[command(flatten)]
    out: Output,
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Perm(PermCmd::Stats { word, out }) => {
            let s = stats(&word);
            if out.json {
                print_json(&s);
            } else {
                println!(
                    "des={} asc={} M={} V={} da={} dd={} lrmin={} rlmin={}",
                    s.des, s.asc, s.peaks, s.valleys, s.double_asc, s.double_desc, s.lrmin, s.rlmin
                );
                println!(
                    "internal_da={} rlmin_da={} internal_dd={} lrmin_dd={} st={}",
                    s.internal_da,
                    s.rlmin_da,
                    s.internal_dd,
                    s.lrmin_dd,
                    s.st()
                );
            }
        }
        Command::Perm(PermCmd::Orbit { word, out, dot }) => {
            let o = orbit(&word)?;
            if dot {
                print!("{}", orbit_dot(&o)?);
            } else if out.json {
                print_json(&o);
            } else {
                for m in &o.members {
                    let mark = if *m == o.representative { "  *" } else { "" };
                    println!("{m}{mark}");
                }
            }
        }
        Command::Poly(args) => {
            let kind = match args.kind {
                PolyKind::Bse => EnumeratorKind::Bse,
                PolyKind::BseZ => EnumeratorKind::BseZ,
                PolyKind::Ptilde => EnumeratorKind::Ptilde,
                PolyKind::Se => EnumeratorKind::Se,
            };
            let e = build(kind, args.n)?;
            if args.out.json {
                print_json(&e);
            } else {
                println!("{}", e.value);
            }
        }
        Command::Gamma(args) => {
            let gamma = match args.interp {
                Interp::Expand => gamma_expand(&eulab::identity::bse(args.n)?)?.gamma,
                Interp::One => gamma_from_class(GammaInterp::Gamma1, args.n)?,
                Interp::Two => gamma_from_class(GammaInterp::Gamma2, args.n)?,
                Interp::Three => gamma_from_class(GammaInterp::Gamma3, args.n)?,
            };
            if args.out.json {
                print_json(&json!({ "n": args.n, "gamma": gamma }));
            } else {
                for (k, g) in gamma.iter().enumerate() {
                    println!("{k}: {g}");
                }
            }
        }
        Command::Grammar(GrammarCmd::Derive {
            file,
            builtin,
            start,
            steps,
            out,
        }) => {
            let g = match (file, builtin) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))?;
                    Grammar::parse(&text)?
                }
                (None, Some(name)) => Grammar::builtin(&name)?,
                (None, None) => unreachable!("clap requires one of --file/--builtin"),
            };
            let ders = g.derivatives(&MultiPoly::var(&start), steps);
            if out.json {
                print_json(&json!({ "start": start, "steps": steps, "derivatives": ders }));
            } else {
                println!("{}", ders.last().expect("steps + 1 entries"));
            }
        }
        Command::Bijection(BijectionCmd::Phi { word, out }) => {
            let image = bijection::phi(&word)?;
            if out.json {
                print_json(&bijection::TableRow {
                    fixed: image == word,
                    input: word,
                    image,
                });
            } else {
                println!("{image}");
            }
        }
        Command::Bijection(BijectionCmd::Table { n, out }) => {
            let rows = bijection::table(n)?;
            if out.json {
                print_json(&rows);
            } else {
                for r in &rows {
                    let mark = if r.fixed { "  (fixed)" } else { "" };
                    println!("{} -> {}{mark}", r.input, r.image);
                }
            }
        }
        Command::Verify(args) => return run_verify(args),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let reports: Vec<CheckReport> = if args.target == "all" {
        run_all(args.max_n)?
    } else {
        let params = Params {
            n: args.n,
            a: args.a,
            b: args.b,
            class: args.class,
        };
        vec![verify(&args.target, &params)?]
    };
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    if args.out.json {
        if args.target == "all" {
            print_json(&reports);
        } else {
            print_json(&reports[0]);
        }
    } else if args.target == "all" {
        // one summary line per registry check, failures spelled out
        for spec in registry() {
            let mine: Vec<&CheckReport> = reports.iter().filter(|r| r.check == spec.id).collect();
            let bad: Vec<&&CheckReport> = mine.iter().filter(|r| r.verdict == Verdict::Fail).collect();
            let verdict = if bad.is_empty() { Verdict::Pass } else { Verdict::Fail };
            println!("{verdict} {} ({} cases)", spec.id, mine.len());
            for r in bad {
                println!("  {r}");
            }
        }
    } else {
        println!("{}", reports[0]);
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            eprint!("{rendered}");
            if !rendered.contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e @ Error::CapExceeded { .. }) => {
            eprintln!("error: {e} (raise it with EULAB_MAX_N)");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

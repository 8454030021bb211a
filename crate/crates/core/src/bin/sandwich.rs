use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sandwich::crosscheck::{crosscheck, CrossConfig};
use sandwich::csp::{enumerate_polymorphisms_naive, has_siggers, OpTable};
use sandwich::format::{
    emit_graph, emit_instance, emit_structure, emit_structure_instance, parse_graph, parse_instance,
    parse_structure, parse_structure_instance,
};
use sandwich::gen::gen_instance;
use sandwich::oracle::DEFAULT_BUDGET;
use sandwich::pp::{gadget_reduce, gadget_to_sandwich, parse_ppc, pp_power, BuiltinConstruction, GadgetSandwich, PPConstruction};
use sandwich::reduce;
use sandwich::structure::BuiltinTemplate;
use sandwich::{solve, Certificate, ClassId, Error, FiniteStructure, Graph, Method, Result};

#[derive(Parser)]
#[command(name = "sandwich", version, about = "Graph sandwich problems as constraint satisfaction")]
struct Cli {
    /// Write results here instead of standard output.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a sandwich instance (`p swi`).
    Solve {
        input: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Test a graph (`p gr`) for class membership.
    Recognize {
        input: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Apply a reduction: colouring, complement, pq-pad:<p>, universal-pad,
    /// pendant-pad, linebip-to-A, ham-to-kt:<s>,<t>.
    Reduce { name: String, input: PathBuf },
    /// pp-power of a structure (`p fst`).
    Ppower {
        #[command(flatten)]
        con: ConstructionArg,
        #[arg(long)]
        structure: PathBuf,
    },
    /// Gadget reduction of a structure instance (`p sti`).
    Gadget {
        #[command(flatten)]
        con: ConstructionArg,
        input: PathBuf,
        /// Emit a sandwich instance, for constructions over B and R.
        #[arg(long)]
        sandwich: bool,
    },
    /// Polymorphism search on a template file or builtin name.
    Polymorphism {
        #[arg(long, conflicts_with = "naive")]
        siggers: bool,
        /// Count every table of the given arity by brute force.
        #[arg(long)]
        naive: Option<usize>,
        /// With --naive, only count tables satisfying the Siggers identity.
        #[arg(long, requires = "naive")]
        identity: bool,
        template: String,
    },
    /// Random instance: each pair forced, else forbidden, else undetermined.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        p_forced: f64,
        #[arg(long, default_value_t = 0.0)]
        p_forbidden: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Fast solver against the oracle on exhaustive and random suites.
    Crosscheck {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        exhaustive: usize,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_value = "5,6,7")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct ConstructionArg {
    /// c5k5, split12-1in3, betweenness-perm or gr-structa.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long)]
    ppc: Option<PathBuf>,
}

impl ConstructionArg {
    fn load(&self) -> Result<PPConstruction> {
        match (&self.builtin, &self.ppc) {
            (Some(name), _) => Ok(BuiltinConstruction::parse(name)?.build()),
            (None, Some(path)) => parse_ppc(&read(path)?),
            (None, None) => Err(Error::Invalid("need --builtin or --ppc".into())),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    let mut s = String::new();
    let r = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn class(name: &str) -> Result<ClassId> {
    ClassId::parse_with(name, |f| parse_graph(&read(Path::new(f))?))
}

fn template(name: &str) -> Result<FiniteStructure> {
    let path = Path::new(name);
    if path.exists() {
        return parse_structure(&read(path)?);
    }
    Ok(BuiltinTemplate::parse(name)?.build())
}

fn emit_table(op: &OpTable) -> String {
    let mut out = format!("table {} {}\n", op.domain, op.arity);
    for (code, v) in op.values.iter().enumerate() {
        for x in sandwich::csp::decode(code, op.domain, op.arity) {
            let _ = write!(out, "{x} ");
        }
        let _ = writeln!(out, "-> {v}");
    }
    out
}

fn emit_certificate(cert: &Certificate) -> String {
    match cert {
        Certificate::CompletionYes(edges) => {
            let mut out = String::from("YES\n");
            for p in edges {
                let _ = writeln!(out, "e {} {}", p.lo() + 1, p.hi() + 1);
            }
            out
        }
        Certificate::HomYes(map) => {
            let mut out = String::from("YES\n");
            for (v, x) in map.iter().enumerate() {
                let _ = writeln!(out, "v {} {x}", v + 1);
            }
            out
        }
        Certificate::No => "NO\n".into(),
    }
}

fn two_numbers(arg: &str) -> Result<(usize, usize)> {
    let bad = || Error::Invalid(format!("expected two comma-separated numbers, got {arg}"));
    let (a, b) = arg.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn run_reduce(name: &str, input: &Path) -> Result<String> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let need = || arg.ok_or_else(|| Error::Invalid(format!("reduction {head} needs a parameter")));
    let inst = || parse_instance(&read(input)?);
    Ok(match head {
        "colouring" => emit_instance(&reduce::colouring_to_sandwich(&parse_graph(&read(input)?)?)),
        "complement" => emit_instance(&reduce::complement_instance(&inst()?)),
        "pq-pad" => {
            let p = need()?
                .parse()
                .map_err(|_| Error::Invalid("pq-pad needs a number".into()))?;
            emit_instance(&reduce::pq_padding(&inst()?, p))
        }
        "universal-pad" => emit_instance(&reduce::universal_vertex_padding(&inst()?)),
        "pendant-pad" => emit_instance(&reduce::pendant_padding(&inst()?)),
        "linebip-to-A" => emit_structure_instance(&reduce::line_bip_to_a(&inst()?)?),
        "ham-to-kt" => {
            let (s, t) = two_numbers(need()?)?;
            if s == 0 || t == 0 {
                return Err(Error::Range("vertices are 1-based".into()));
            }
            let g: Graph = parse_graph(&read(input)?)?;
            emit_graph(&reduce::ham_path_to_cycle_family(&g, s - 1, t - 1)?)
        }
        _ => return Err(Error::Invalid(format!("unknown reduction {name}"))),
    })
}

/// Returns the text to print and the exit code.
fn run(cmd: Command) -> Result<(String, u8)> {
    match cmd {
        Command::Solve {
            input,
            class: name,
            method,
            budget,
        } => {
            let inst = parse_instance(&read(&input)?)?;
            let cls = class(&name)?;
            match solve(&inst, &cls, method, budget) {
                Ok((cert, _)) => Ok((emit_certificate(&cert), 0)),
                Err(Error::Budget(b)) => Ok((format!("UNKNOWN(budget {b})\n"), 4)),
                Err(e) => Err(e),
            }
        }
        Command::Recognize { input, class: name } => {
            let g = parse_graph(&read(&input)?)?;
            let yes = class(&name)?.contains(&g)?;
            Ok((if yes { "YES\n" } else { "NO\n" }.into(), 0))
        }
        Command::Reduce { name, input } => Ok((run_reduce(&name, &input)?, 0)),
        Command::Ppower { con, structure } => {
            let s = parse_structure(&read(&structure)?)?;
            Ok((emit_structure(&pp_power(&s, &con.load()?)?), 0))
        }
        Command::Gadget { con, input, sandwich } => {
            let inst = parse_structure_instance(&read(&input)?)?;
            let con = con.load()?;
            if !sandwich {
                return Ok((emit_structure_instance(&gadget_reduce(&con, &inst)?), 0));
            }
            Ok(match gadget_to_sandwich(&con, &inst)? {
                GadgetSandwich::Instance(s) => (emit_instance(&s), 0),
                GadgetSandwich::Infeasible(why) => (format!("INFEASIBLE {why}\n"), 0),
            })
        }
        Command::Polymorphism {
            siggers,
            naive,
            identity,
            template: name,
        } => {
            let t = template(&name)?;
            if let Some(arity) = naive {
                let r = enumerate_polymorphisms_naive(&t, arity, identity)?;
                let mut out = format!("COUNT {}\n", r.count);
                for s in &r.samples {
                    out.push_str(&emit_table(s));
                }
                return Ok((out, 0));
            }
            if !siggers {
                return Err(Error::Invalid("choose --siggers or --naive <arity>".into()));
            }
            Ok(match has_siggers(&t)? {
                Some(op) => (emit_table(&op), 0),
                None => ("NONE\n".into(), 0),
            })
        }
        Command::Gen {
            n,
            p_forced,
            p_forbidden,
            seed,
        } => Ok((emit_instance(&gen_instance(n, p_forced, p_forbidden, seed)?), 0)),
        Command::Crosscheck {
            class: name,
            seed,
            exhaustive,
            count,
            sizes,
            budget,
        } => {
            let cfg = CrossConfig {
                exhaustive_n: exhaustive,
                random_sizes: sizes,
                random_count: count,
                seed,
                budget,
            };
            let report = crosscheck(&class(&name)?, &cfg)?;
            let mut out = serde_json::to_string_pretty(&report).expect("plain data serializes");
            out.push('\n');
            Ok((out, if report.passed() { 0 } else { 1 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|(text, code)| {
        match &cli.output {
            Some(path) => std::fs::write(path, &text),
            None => std::io::stdout().write_all(text.as_bytes()),
        }
        .map_err(|e| Error::Invalid(format!("writing output: {e}")))?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

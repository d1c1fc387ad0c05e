//! `invrig`: validate and analyse finite inverse semirings and modules, and
//! compute with free and bounded polynomials.
//!
//! Exit codes: 0 when every check passed (property verdicts such as "not
//! E-unitary" are data), 1 when a law or theorem check failed, 2 for usage,
//! parse and search-budget errors.

mod input;
mod poly;
mod report;
mod sampled;
mod verbs;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invrig::finite::{Side, DEFAULT_BUDGET};
use serde_json::json;

use input::{Input, Source, Structure};
use report::{usage, Failure, Report};

#[derive(Parser, Debug)]
#[command(
    name = "invrig",
    version,
    about = "Inverse semirings: finite structures, ideals, reflections, free polynomials"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Emit line-delimited JSON records instead of text
    #[arg(long, global = true)]
    machine: bool,

    /// Sidedness of ideals when a semiring acts on itself
    #[arg(long, global = true, value_enum, default_value_t = SideArg::Two)]
    side: SideArg,

    /// Seed for sampled law suites
    #[arg(long, global = true, default_value_t = 24301)]
    seed: u64,

    /// Sample size for sampled law suites
    #[arg(long, global = true, default_value_t = 16)]
    samples: usize,

    /// Search budget for homomorphism and endomorphism searches
    /// [default: $INVRIG_BUDGET, else 100000000]
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Print wall time to stderr
    #[arg(long, global = true)]
    time: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Two,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Two => Side::Two,
        }
    }
}

#[derive(Args, Debug)]
struct SetInput {
    #[command(flatten)]
    input: Input,
    /// Subset of the carrier, e.g. "{a, j}"
    #[arg(long)]
    set: String,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check the inverse-semiring (or module) laws
    Validate(Input),
    /// Ring, idempotent semiring or neither, decided by 0_1
    Classify(Input),
    /// The additive idempotents E(R)
    Idempotents(Input),
    /// The groups G(z) for each idempotent z
    Groups(Input),
    /// All submodules (ideals), with subtractive and downward-closed checks
    Ideals(Input),
    /// Submodule, subtractive closure and downset generated by --set
    Closure(SetInput),
    /// Quotient by the submodule generated by --set
    Quotient(SetInput),
    /// Modularity of the submodule and subtractive-submodule lattices
    Lattice(Input),
    /// Whether R is E-unitary and whether x -> ([x], 0_x) is injective
    Eunitary(Input),
    /// The map x -> ([x], 0_x) into R/E(R) x E(R)
    Embed(Input),
    /// Ring and idempotent reflections
    Reflect(Input),
    /// The heart and its map into R
    Heart(Input),
    /// Endomorphism semiring of the additive monoid
    Endsr(Input),
    /// Arithmetic on polynomials: EXPR bound N | z0poly EXPR, joined by + - *
    Poly {
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        terms: Vec<String>,
    },
    /// (x^2 + x) + (-x^2) in Z[x], Z_0[x] and bounded polynomials
    Demo,
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::Validate(_) => "validate",
            Verb::Classify(_) => "classify",
            Verb::Idempotents(_) => "idempotents",
            Verb::Groups(_) => "groups",
            Verb::Ideals(_) => "ideals",
            Verb::Closure(_) => "closure",
            Verb::Quotient(_) => "quotient",
            Verb::Lattice(_) => "lattice",
            Verb::Eunitary(_) => "eunitary",
            Verb::Embed(_) => "embed",
            Verb::Reflect(_) => "reflect",
            Verb::Heart(_) => "heart",
            Verb::Endsr(_) => "endsr",
            Verb::Poly { .. } => "poly",
            Verb::Demo => "demo",
        }
    }

    fn input(&self) -> Option<&Input> {
        match self {
            Verb::Validate(i)
            | Verb::Classify(i)
            | Verb::Idempotents(i)
            | Verb::Groups(i)
            | Verb::Ideals(i)
            | Verb::Lattice(i)
            | Verb::Eunitary(i)
            | Verb::Embed(i)
            | Verb::Reflect(i)
            | Verb::Heart(i)
            | Verb::Endsr(i) => Some(i),
            Verb::Closure(s) | Verb::Quotient(s) => Some(&s.input),
            Verb::Poly { .. } | Verb::Demo => None,
        }
    }
}

fn budget(cli: &Cli) -> Result<u64, Failure> {
    if let Some(b) = cli.budget {
        return Ok(b);
    }
    match std::env::var("INVRIG_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("INVRIG_BUDGET is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn finite_only(s: &Structure, verb: &str) -> Result<(), Failure> {
    match s.source {
        Source::Sampled(_) => Err(usage(format!(
            "{verb} needs a finite structure, got {}",
            s.label
        ))),
        Source::Finite(_) => Ok(()),
    }
}

fn run(cli: &Cli, out: &mut Report) -> Result<(), Failure> {
    let budget = budget(cli)?;
    let side = Side::from(cli.side);
    let verb = cli.verb.name();
    let label = cli.verb.input().map(Input::label);
    out.machine_only(
        "command",
        json!({
            "verb": verb,
            "input": label,
            "side": format!("{:?}", cli.side).to_lowercase(),
            "seed": cli.seed,
            "samples": cli.samples,
            "budget": budget,
        }),
    );
    match &cli.verb {
        Verb::Poly { terms } => return poly::poly(out, terms),
        Verb::Demo => return poly::demo(out),
        _ => {}
    }
    let input = cli.verb.input().expect("structure verbs take an input");
    let s = input.load()?;
    if let Source::Sampled(name) = s.source {
        return match &cli.verb {
            Verb::Validate(_) => sampled::validate(out, name, cli.seed, cli.samples),
            Verb::Classify(_) => sampled::classify_sampled(out, name),
            _ => Err(usage(format!(
                "{verb} needs a finite structure, got {}",
                s.label
            ))),
        };
    }
    finite_only(&s, verb)?;
    match &cli.verb {
        Verb::Validate(_) => verbs::validate(out, &s),
        Verb::Classify(_) => {
            verbs::classify_finite(out, verbs::semiring_of(&s, verb)?);
            Ok(())
        }
        Verb::Idempotents(_) => verbs::idempotents_verb(out, verbs::semiring_of(&s, verb)?),
        Verb::Groups(_) => verbs::groups(out, verbs::semiring_of(&s, verb)?),
        Verb::Ideals(_) => verbs::ideals(out, &s.module(side)?),
        Verb::Closure(a) => verbs::closure(out, &s.module(side)?, &a.set),
        Verb::Quotient(a) => verbs::quotient_verb(out, &s.module(side)?, &a.set),
        Verb::Lattice(_) => verbs::lattice(out, &s.module(side)?),
        Verb::Eunitary(_) => verbs::eunitary(out, verbs::semiring_of(&s, verb)?),
        Verb::Embed(_) => verbs::embed(out, verbs::semiring_of(&s, verb)?),
        Verb::Reflect(_) => verbs::reflect(out, verbs::semiring_of(&s, verb)?, budget),
        Verb::Heart(_) => verbs::heart_verb(out, verbs::semiring_of(&s, verb)?, budget),
        Verb::Endsr(_) => verbs::endsr(out, &s, budget),
        Verb::Poly { .. } | Verb::Demo => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut out = Report::new(cli.machine);
    let code = match run(&cli, &mut out) {
        Ok(()) => u8::from(out.violated()),
        Err(Failure::Violation(found)) => {
            for (check, witness) in found {
                out.violation(&check, witness);
            }
            1
        }
        Err(Failure::Usage(msg)) => {
            print!("{}", out.render());
            eprintln!("error: {msg}");
            if cli.time {
                eprintln!("time: {} ms", start.elapsed().as_millis());
            }
            return ExitCode::from(2);
        }
    };
    out.machine_only("status", json!({ "exit": code }));
    print!("{}", out.render());
    if cli.time {
        eprintln!("time: {} ms", start.elapsed().as_millis());
    }
    ExitCode::from(code)
}

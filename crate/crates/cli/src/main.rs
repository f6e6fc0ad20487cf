//! `algshift`: algebraic shifting and matroidality from the command line.
//!
//! Exit status: 0 on success, 1 when `--expect` is not met or a verification
//! suite fails, 2 on usage, input or budget errors, 3 when the seeds disagree.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use algshift::combinatorics::io::{parse_hypergraph, write_hypergraph};
use algshift::linalg::{Field, FieldConfig, RationalField, MERSENNE_61};
use algshift::matroid::{
    classify_m_and_s, ExchangeVerdict, Lab, MatroidalReport, ViolationCheck, ViolationConstruction, DEFAULT_BUDGET,
};
use algshift::verify::{run_suite, Suite, SuiteBounds};
use algshift::{Error, ShiftMode, Shifter, SimplicialComplex, UniformHypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "algshift", version, about = "Exterior and symmetric algebraic shifting of uniform hypergraphs")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Options {
    /// Shifting operator.
    #[arg(long, global = true, default_value = "exterior", value_parser = parse_mode)]
    mode: ShiftMode,
    /// Prime modulus of the field generic entries are drawn from.
    #[arg(long, global = true, default_value_t = MERSENNE_61)]
    prime: u64,
    /// Base seed; per-run seeds are derived from it.
    #[arg(long, global = true, default_value_t = FieldConfig::DEFAULT_SEED)]
    seed: u64,
    /// Number of independent seeds that must agree.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    seeds: u64,
    /// Largest number of candidate hypergraphs a preimage search may examine.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Work over the rationals instead of a prime field.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Hypergraph file: a header line `n k`, then one edge per line.
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Matroid,
    NotMatroid,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shift a hypergraph.
    Shift(Input),
    /// Shiftedness, segment test, f- and Betti vectors, and the m_H split.
    Check(Input),
    /// All hypergraphs of the same size shifting onto the input.
    Preimage(Input),
    /// Whether the preimage is the basis set of a matroid.
    Matroidal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Matroidality of a graph under symmetric shifting.
    SMatroidal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Whether every lex-prefix of the input is matroidal.
    LexMatroidal {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Build and check an explicit exchange violation.
    ConstructViolation(Input),
    /// Compare exterior and symmetric shifting.
    DiffShift(Input),
    /// Run reproduction suites (all of them when none is named).
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
}

fn parse_mode(s: &str) -> Result<ShiftMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Successful runs: the report and whether its verdict met expectations.
struct Outcome {
    report: Report,
    met: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, met: true }
    }
}

fn load(input: &Input) -> Result<UniformHypergraph, Error> {
    let text = std::fs::read_to_string(&input.input)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", input.input.display())))?;
    parse_hypergraph(&text)
}

fn field_name<F: Field>(field: &F) -> String {
    match field.characteristic() {
        0 => "Q".into(),
        p => format!("F_{p}"),
    }
}

fn header<F: Field>(r: &mut Report, lab: &Lab<F>, field: &F, mode: Option<ShiftMode>) {
    if let Some(mode) = mode {
        r.kv("mode", mode);
    }
    r.kv("field", field_name(field))
        .kv("base_seed", lab.shifter().base_seed())
        .kv("seeds", lab.shifter().num_seeds());
}

fn expectation(expect: Option<Expect>, holds: bool) -> bool {
    match expect {
        None => true,
        Some(Expect::Matroid) => holds,
        Some(Expect::NotMatroid) => !holds,
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn certificate(r: &mut Report, prefix: &str, verdict: &ExchangeVerdict) {
    let Some(v) = verdict.violation() else {
        return;
    };
    r.both(&format!("{prefix}b1"), &v.b1)
        .both(&format!("{prefix}b2"), &v.b2)
        .both(&format!("{prefix}e1"), v.e1);
    for (i, ev) in v.evidence.iter().enumerate() {
        let shifted = ev.shifted.as_ref().map_or("-".to_string(), |s| s.to_string());
        let lemmas = if ev.lemmas.is_empty() {
            "-".to_string()
        } else {
            join(&ev.lemmas, ",")
        };
        r.kv(format!("{prefix}e2.{i}"), ev.e2)
            .kv(format!("{prefix}e2.{i}.shift"), &shifted)
            .kv(format!("{prefix}e2.{i}.lemmas"), &lemmas)
            .line(format!("  e2={} shifts to {shifted} (lemmas: {lemmas})", ev.e2));
    }
}

fn matroidal_lines(r: &mut Report, m: &MatroidalReport) {
    r.line(m.to_string())
        .kv("input", &m.h)
        .kv("preimage_size", m.preimage.len())
        .kv("matroidal", m.is_matroidal());
    certificate(r, "", &m.verdict);
}

fn violation_lines(r: &mut Report, c: &ViolationConstruction, check: &ViolationCheck) {
    r.both("construction", c.path()).both("pi", &c.pi).both("e1", c.e1);
    if let Some(s) = c.s {
        r.both("s", s);
    }
    r.both("pi_h", &check.pi_h).both("holds", check.holds);
    for (i, ev) in check.evidence.iter().enumerate() {
        let shifted = ev.shifted.as_ref().map_or("-".to_string(), |s| s.to_string());
        let lemmas = if ev.lemmas.is_empty() {
            "-".to_string()
        } else {
            join(&ev.lemmas, ",")
        };
        r.kv(format!("e2.{i}"), ev.e2)
            .kv(format!("e2.{i}.shift"), &shifted)
            .kv(format!("e2.{i}.lemmas"), &lemmas)
            .line(format!("  e2={} shifts to {shifted} (lemmas: {lemmas})", ev.e2));
    }
}

fn run<F: Field>(command: &Command, lab: &Lab<F>, field: &F, mode: ShiftMode) -> Result<Outcome, Error> {
    let shifter = lab.shifter();
    match command {
        Command::Shift(input) => {
            let h = load(input)?;
            let report = shifter.report(&h, mode)?;
            let mut r = Report::new("shift");
            header(&mut r, lab, field, Some(mode));
            r.kv("seed_list", join(&report.seeds_used, ","))
                .kv("consensus", report.consensus)
                .kv("input", &h)
                .kv("output", &report.output)
                .line(format!(
                    "# {mode} shift, field {}, seeds {}, consensus {}",
                    field_name(field),
                    join(&report.seeds_used, ","),
                    report.consensus
                ))
                .line(write_hypergraph(&report.output).trim_end());
            Ok(Outcome::ok(r))
        }
        Command::Check(input) => {
            let h = load(input)?;
            let k = SimplicialComplex::downward_closure(&h).with_all_vertices();
            let mut r = Report::new("check");
            r.both("input", &h)
                .both("edges", h.len())
                .both("shifted", h.is_shifted())
                .both("initial_lex_segment", h.is_initial_lex_segment())
                .both("f_vector", k.f_vector())
                .both("betti", k.betti_homology(MERSENNE_61)?);
            if h.is_shifted() && !h.is_empty() {
                let spec = classify_m_and_s(&h)?;
                r.both("m_h", spec.m_h).both("case", &spec.case);
                if let Some(s) = spec.s_h {
                    r.both("s_h", s).both("s_h_in_h", spec.s_in_h);
                }
            }
            Ok(Outcome::ok(r))
        }
        Command::Preimage(input) => {
            let h = load(input)?;
            let pre = lab.preimage(&h, mode)?;
            let mut r = Report::new("preimage");
            header(&mut r, lab, field, Some(mode));
            r.kv("input", &h)
                .kv("count", pre.len())
                .line(format!("{} hypergraphs shift onto {h} ({mode})", pre.len()));
            for (i, g) in pre.iter().enumerate() {
                r.kv(format!("member.{i}"), g).line(g.to_string());
            }
            Ok(Outcome::ok(r))
        }
        Command::Matroidal { input, expect } => {
            let h = load(input)?;
            let m = lab.is_matroidal(&h, mode)?;
            let mut r = Report::new("matroidal");
            header(&mut r, lab, field, Some(mode));
            matroidal_lines(&mut r, &m);
            let met = expectation(*expect, m.is_matroidal());
            Ok(Outcome { report: r, met })
        }
        Command::SMatroidal { input, expect } => {
            let h = load(input)?;
            let s = lab.is_s_matroidal_graph(&h)?;
            let mut r = Report::new("s-matroidal");
            header(&mut r, lab, field, Some(ShiftMode::Symmetric));
            matroidal_lines(&mut r, &s.report);
            if let Some(agrees) = s.nprime_agrees {
                r.both("nprime_bases_agree", agrees);
            }
            let met = expectation(*expect, s.report.is_matroidal());
            Ok(Outcome { report: r, met })
        }
        Command::LexMatroidal { input, expect } => {
            let h = load(input)?;
            let l = lab.is_lex_matroidal(&h, mode)?;
            let mut r = Report::new("lex-matroidal");
            header(&mut r, lab, field, Some(mode));
            r.both("input", &h)
                .both("lex_matroidal", l.is_lex_matroidal())
                .both("prefixes_checked", l.prefixes_checked);
            if let Some((s, m)) = &l.failure {
                r.both("failing_prefix_end", s).both("failing_prefix", &m.h);
                certificate(&mut r, "prefix.", &m.verdict);
            }
            let met = expectation(*expect, l.is_lex_matroidal());
            Ok(Outcome { report: r, met })
        }
        Command::ConstructViolation(input) => {
            let h = load(input)?;
            let (c, check) = lab.construct_violation(&h, mode)?;
            let mut r = Report::new("construct-violation");
            header(&mut r, lab, field, Some(mode));
            r.both("input", &h);
            violation_lines(&mut r, &c, &check);
            Ok(Outcome::ok(r))
        }
        Command::DiffShift(input) => {
            let h = load(input)?;
            let e = shifter.shift_uniform(&h, ShiftMode::Exterior)?;
            let s = shifter.shift_uniform(&h, ShiftMode::Symmetric)?;
            let mut r = Report::new("diff-shift");
            header(&mut r, lab, field, None);
            r.both("input", &h)
                .both("exterior", &e)
                .both("symmetric", &s)
                .both("equal", e == s)
                .both("only_exterior", UniformHypergraph::new(h.n(), h.k(), e.difference(&s))?)
                .both("only_symmetric", UniformHypergraph::new(h.n(), h.k(), s.difference(&e))?);
            Ok(Outcome::ok(r))
        }
        Command::Verify { .. } => Err(Error::Unsupported("verification suites run over a prime field".into())),
    }
}

fn verify(lab: &Lab, suite: Option<Suite>, bounds: SuiteBounds) -> Result<Outcome, Error> {
    let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let mut r = Report::new("verify");
    r.kv("base_seed", lab.shifter().base_seed()).kv("seeds", lab.shifter().num_seeds());
    let mut met = true;
    for suite in suites {
        let report = run_suite(suite, lab, &bounds)?;
        met &= report.passed();
        for (i, c) in report.checks.iter().enumerate() {
            r.kv(format!("{suite}.{i}.name"), &c.name)
                .kv(format!("{suite}.{i}.pass"), c.passed)
                .kv(format!("{suite}.{i}.detail"), &c.detail);
        }
        r.kv(format!("{suite}.pass"), report.passed()).line(report.to_string());
    }
    r.kv("pass", met);
    Ok(Outcome { report: r, met })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NoConsensus(_) => 3,
        _ => 2,
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let o = &cli.opts;
    let seeds = o.seeds as usize;
    if let Command::Verify {
        suite,
        n,
        k,
        max_edges,
        samples,
    } = &cli.command
    {
        if o.exact {
            return Err(Error::Unsupported("verification suites run over a prime field".into()));
        }
        let lab = Lab::new(Shifter::new(FieldConfig::new(o.prime, o.seed)?, seeds)?, o.budget);
        let bounds = SuiteBounds {
            n: *n,
            k: *k,
            max_edges: *max_edges,
            samples: *samples,
        };
        return verify(&lab, *suite, bounds);
    }
    if o.exact {
        let lab = Lab::new(Shifter::with_field(RationalField, o.seed, seeds)?, o.budget);
        run(&cli.command, &lab, &RationalField, o.mode)
    } else {
        let config = FieldConfig::new(o.prime, o.seed)?;
        let field = config.field();
        let lab = Lab::new(Shifter::new(config, seeds)?, o.budget);
        run(&cli.command, &lab, &field, o.mode)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(threads) = cli.opts.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.report.render(cli.opts.format));
            ExitCode::from(if outcome.met { 0 } else { 1 })
        }
        Err(e) => {
            if let Error::NoConsensus(failure) = &e {
                let mut r = Report::new("error");
                r.both("consensus", false).both("seed_list", join(&failure.seeds, ","));
                for (i, out) in failure.outputs.iter().enumerate() {
                    r.both(&format!("output.{i}"), join(out, " "));
                }
                print!("{}", r.render(cli.opts.format));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

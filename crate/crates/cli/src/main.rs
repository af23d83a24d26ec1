mod args;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use semigroup_patterns::{
    admits_with_bound, closure, enumerate_all, enumerate_sp, equivalence_check, minimal_p_system,
    subtraction_degree, subtraction_degree_bounds, witness_family, AdmissibilityDegree,
    AdmitsVerdict, EquivalenceVerdict, Error, NumericalSemigroup, Pattern, SemigroupDag,
};
use serde::Serialize;
use serde_json::{json, Value};

use args::{Cli, Command, Format, GRAMMAR};

const DEFAULT_EQUIV_GENUS: u32 = 8;

struct Output {
    text: String,
    json: Value,
    dot: Option<String>,
}

impl Output {
    fn new(text: impl Into<String>, json: impl Serialize) -> Self {
        Self {
            text: text.into(),
            json: serde_json::to_value(json).expect("serialisable output"),
            dot: None,
        }
    }
}

enum Failure {
    Domain(Error),
    Usage(ErrorKind, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn semigroup(text: &str) -> Result<NumericalSemigroup, Error> {
    text.parse()
}

fn pattern(text: &str) -> Result<Pattern, Error> {
    text.parse()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn verdict_text(v: &AdmitsVerdict) -> String {
    match v {
        AdmitsVerdict::Admits => "ADMITS".into(),
        AdmitsVerdict::Rejects { witness, value } => {
            format!("REJECTS witness=({}) value={value}", join(witness))
        }
        AdmitsVerdict::UnknownUpToBound { bound } => {
            format!("UNKNOWN no failing tuple with s1 <= {bound}")
        }
    }
}

fn degree_json(k: AdmissibilityDegree) -> Value {
    match k {
        AdmissibilityDegree::Finite(k) => json!(k),
        AdmissibilityDegree::Infinite => json!("infinity"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify(p: &Pattern) -> Output {
    let degree = p.admissibility_degree();
    let mut lines = vec![
        format!("pattern: {p}"),
        format!("admissible: {}", yes_no(p.is_admissible())),
        format!(
            "strongly admissible: {}",
            yes_no(p.is_strongly_admissible())
        ),
        format!("premonic: {}", yes_no(p.is_premonic())),
        format!("boolean: {}", yes_no(p.is_boolean())),
        format!("admissibility degree: {degree}"),
    ];
    let decomposition = if p.is_boolean() {
        match p.boolean_decomposition() {
            Ok(b) => {
                lines.push(format!(
                    "boolean decomposition: k={} l={} d={}",
                    b.k, b.l, b.d
                ));
                json!({ "k": b.k, "l": b.l, "d": b.d })
            }
            Err(e) => {
                lines.push(format!("boolean decomposition: none ({})", e.code()));
                Value::Null
            }
        }
    } else {
        Value::Null
    };
    Output::new(
        lines.join("\n"),
        json!({
            "pattern": p,
            "text": p.to_string(),
            "admissible": p.is_admissible(),
            "strongly_admissible": p.is_strongly_admissible(),
            "premonic": p.is_premonic(),
            "boolean": p.is_boolean(),
            "admissibility_degree": degree_json(degree),
            "boolean_decomposition": decomposition,
        }),
    )
}

fn dag_output(dag: &SemigroupDag, quiet: bool) -> Output {
    let edges = dag.edges().count();
    let mut lines = Vec::new();
    if !quiet {
        for node in dag.nodes() {
            let leaf = if dag.out_degree(&node.semigroup) == 0 {
                "  (leaf)"
            } else {
                ""
            };
            lines.push(format!(
                "<{}>_p, F={}{leaf}",
                join(&node.psystem),
                node.frobenius
            ));
        }
    }
    lines.push(format!("{} semigroups, {edges} edges", dag.len()));
    let mut out = Output::new(lines.join("\n"), dag.export());
    out.dot = Some(dag.to_dot());
    out
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let quiet = cli.quiet;
    let out = match &cli.command {
        Command::Classify { pattern: p } => classify(&pattern(p)?),
        Command::Admits {
            semigroup: s,
            pattern: p,
        } => {
            let (s, p) = (semigroup(s)?, pattern(p)?);
            let v = admits_with_bound(&s, &p, cli.bound);
            Output::new(
                verdict_text(&v),
                json!({ "semigroup": s, "pattern": p, "verdict": v }),
            )
        }
        Command::Closure {
            semigroup: s,
            pattern: p,
        } => {
            let (s, p) = (semigroup(s)?, pattern(p)?);
            let trace = closure(&s, &p)?;
            let mut lines: Vec<String> = Vec::new();
            if !quiet {
                for (i, step) in trace.steps().iter().enumerate() {
                    lines.push(format!("step {i}: {step}"));
                }
            }
            lines.push(trace.last().to_string());
            Output::new(
                lines.join("\n"),
                json!({ "steps": trace.steps(), "k": trace.k(), "closure": trace.last() }),
            )
        }
        Command::Psystem {
            semigroup: s,
            pattern: p,
        } => {
            let (s, p) = (semigroup(s)?, pattern(p)?);
            let system = minimal_p_system(&s, &p)?;
            Output::new(join(&system), json!({ "semigroup": s, "psystem": system }))
        }
        Command::Apery {
            semigroup: s,
            lambda,
        } => {
            let s = semigroup(s)?;
            let lambda = lambda.unwrap_or(s.multiplicity() as i64);
            let ap = s.apery(lambda)?;
            Output::new(
                format!("{{{}}}", join(&ap.sorted())),
                json!({ "modulus": ap.modulus(), "by_residue": ap.witnesses(), "sorted": ap.sorted() }),
            )
        }
        Command::Depth { semigroup: s } => {
            let depth = semigroup(s)?.apery_depth();
            Output::new(depth.to_string(), json!({ "apery_depth": depth }))
        }
        Command::Subdeg { semigroup: s } => {
            let s = semigroup(s)?;
            let (lower, upper) = subtraction_degree_bounds(&s);
            let d = subtraction_degree(&s);
            Output::new(
                format!("{d} (bounds: apery_depth={lower}, ceil(c/m)+1={upper})"),
                json!({ "subtraction_degree": d, "apery_depth": lower, "upper_bound": upper }),
            )
        }
        Command::Enumerate { pattern: p, .. } => {
            let p = pattern(p)?;
            let max_f = cli.max_frobenius.ok_or_else(|| {
                Failure::Usage(
                    ErrorKind::MissingRequiredArgument,
                    "enumerate needs --max-frobenius N".into(),
                )
            })?;
            dag_output(&enumerate_sp(&p, max_f as i64)?, quiet)
        }
        Command::Census => {
            let g = cli.max_genus.ok_or_else(|| {
                Failure::Usage(
                    ErrorKind::MissingRequiredArgument,
                    "census needs --max-genus N".into(),
                )
            })?;
            let census = enumerate_all(g);
            let mut by_genus = vec![0usize; g as usize + 1];
            for s in census.semigroups() {
                by_genus[s.genus() as usize] += 1;
            }
            let mut lines: Vec<String> = Vec::new();
            if !quiet {
                lines.extend(census.semigroups().map(ToString::to_string));
            }
            lines.push(format!("by genus: {}", join(&by_genus)));
            lines.push(format!("{} semigroups of genus <= {g}", census.len()));
            let semigroups: Vec<&NumericalSemigroup> = census.semigroups().collect();
            let mut out = Output::new(
                lines.join("\n"),
                json!({ "count": census.len(), "by_genus": by_genus, "semigroups": semigroups }),
            );
            out.dot = Some(census.to_dot());
            out
        }
        Command::Equiv { first, second } => {
            let (p1, p2) = (pattern(first)?, pattern(second)?);
            let g = cli.max_genus.unwrap_or(DEFAULT_EQUIV_GENUS);
            let v = equivalence_check(&p1, &p2, g)?;
            let text = match &v {
                EquivalenceVerdict::Separated {
                    separator,
                    first,
                    second,
                } => format!(
                    "SEPARATED by {separator}\n  {p1}: {}\n  {p2}: {}",
                    verdict_text(first),
                    verdict_text(second)
                ),
                EquivalenceVerdict::IndistinguishableUpToGenus { genus_bound } => {
                    format!("INDISTINGUISHABLE up to genus {genus_bound}")
                }
            };
            Output::new(text, v)
        }
        Command::WitnessFamily { q, k } => {
            let s = witness_family(*q, *k)?;
            Output::new(s.to_string(), &s)
        }
    };
    Ok(out)
}

fn usage_exit(e: clap::Error) -> ! {
    match e.kind() {
        ErrorKind::DisplayHelp
        | ErrorKind::DisplayVersion
        | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => e.exit(),
        _ => {
            let _ = e.print();
            eprintln!("\n{GRAMMAR}");
            std::process::exit(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| usage_exit(e));
    let format = match cli.command {
        Command::Enumerate { dot: true, .. } => Format::Dot,
        _ => cli.format,
    };
    let result = run(&cli).and_then(|out| match (format, &out.dot) {
        (Format::Dot, None) => Err(Failure::Usage(
            ErrorKind::InvalidValue,
            "--format dot is only available for enumerate and census".into(),
        )),
        _ => Ok(out),
    });
    match result {
        Ok(out) => {
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", json!({ "ok": true, "result": out.json })),
                Format::Dot => println!("{}", out.dot.unwrap_or_default()),
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(kind, message)) => usage_exit(Cli::command().error(kind, message)),
        Err(Failure::Domain(e)) => {
            if format == Format::Json {
                println!(
                    "{}",
                    json!({ "ok": false, "error": e.code(), "message": e.to_string() })
                );
            } else {
                eprintln!("error[{}]: {e}", e.code());
            }
            ExitCode::from(1)
        }
    }
}

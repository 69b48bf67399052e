//! Command dispatch. Exit codes: 0 success / Equivalent, 1 counterexample,
//! 2 UnknownSampled, 3 usage or input error, 4 resource cap exceeded.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cli::parse::{parse_document, parse_field_spec, parse_unipoly, SystemDocument};
use crate::cli::print::{print_canonical, print_point, print_unipoly};
use crate::collapse::{collapse_chain, ChainResult};
use crate::error::{Error, Result};
use crate::fields::FieldDescriptor;
use crate::locus::{
    enumerate_zero_locus_capped, verify_equivalence_with, Emptiness, EquivalenceVerdict,
    LocusMode, ZeroLocusReport, DEFAULT_MAX_POINTS, DEFAULT_SAMPLE_SEED,
};
use crate::remark::{monicize, specialize_and_solve};
use crate::witness::{find_rootfree, WitnessPoly};

const DEFAULT_WITNESS_DEGREE: usize = 8;

#[derive(Parser)]
#[command(
    name = "ideal-collapse",
    about = "Reduce a polynomial ideal to a single polynomial with the same zero locus",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a root-free monic witness polynomial for a field.
    Witness {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = DEFAULT_WITNESS_DEGREE)]
        max_degree: usize,
    },
    /// Collapse the generators of a system file into one polynomial.
    Reduce {
        file: PathBuf,
        /// Witness polynomial in T, e.g. "T^2 + 1"; discovered if omitted.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the zero locus of a system over a finite field.
    Solve {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Collapse, then check the zero locus equals the intersection.
    Verify {
        file: PathBuf,
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Make a generator monic in the last variable and solve the
    /// specialized univariate polynomial.
    Monicize {
        file: PathBuf,
        #[arg(long)]
        target: String,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SearchSpaceTooLarge { .. }
        | Error::DegreeOverflow(_)
        | Error::FieldTooLarge { .. } => 4,
        _ => 3,
    }
}

fn max_points() -> u64 {
    std::env::var("IDEAL_COLLAPSE_MAX_POINTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_POINTS)
}

fn load_document(file: &PathBuf) -> Result<SystemDocument> {
    let text = std::fs::read_to_string(file).map_err(|e| Error::Syntax {
        line: 0,
        col: 0,
        expected: format!("a readable file ({e})"),
    })?;
    parse_document(&text)
}

fn resolve_witness(
    field: &FieldDescriptor,
    witness_text: Option<&str>,
) -> Result<WitnessPoly> {
    match witness_text {
        Some(text) => WitnessPoly::from_user(parse_unipoly(text, field)?),
        None => find_rootfree(field, DEFAULT_WITNESS_DEGREE),
    }
}

fn poly_json(p: &crate::polys::MultiPoly, names: &[String]) -> Result<Value> {
    Ok(Value::String(print_canonical(p, names)?))
}

fn chain_json(doc: &SystemDocument, chain: &ChainResult) -> Result<Value> {
    let names = &doc.system.var_names;
    let mut steps = vec![];
    for s in &chain.steps {
        steps.push(json!({
            "f1": poly_json(&s.f1, names)?,
            "f2": poly_json(&s.f2, names)?,
            "result": poly_json(&s.result, names)?,
            "cofactor_a": poly_json(&s.cofactor_a, names)?,
            "cofactor_b": poly_json(&s.cofactor_b, names)?,
        }));
    }
    let degrees: Vec<i64> = chain.steps.iter().map(|s| s.result.degree()).collect();
    Ok(json!({
        "field": doc.system.field.to_string(),
        "collapsed": poly_json(&chain.collapsed, names)?,
        "degree": chain.collapsed.degree(),
        "steps": steps,
        "degrees": degrees,
        "warnings": chain.warnings,
    }))
}

fn locus_json(field: &FieldDescriptor, report: &ZeroLocusReport) -> Value {
    let points: Vec<Value> = report
        .points
        .iter()
        .map(|p| {
            Value::Array(
                p.coords
                    .iter()
                    .map(|c| Value::String(field.format_element(c)))
                    .collect(),
            )
        })
        .collect();
    let mode = match &report.mode {
        LocusMode::Exhaustive {
            field_size,
            points_searched,
        } => json!({"exhaustive": {"field_size": field_size, "points_searched": points_searched}}),
        LocusMode::Sampled { sample_count, seed } => {
            json!({"sampled": {"sample_count": sample_count, "seed": seed}})
        }
    };
    let empty = match report.empty {
        Emptiness::Empty => "Empty",
        Emptiness::NonEmpty => "NonEmpty",
        Emptiness::UnknownSampled => "UnknownSampled",
    };
    json!({
        "field": field.to_string(),
        "mode": mode,
        "points": points,
        "empty": empty,
    })
}

fn cmd_witness(field: &str, max_degree: usize) -> Result<i32> {
    let k = parse_field_spec(field)?;
    let w = find_rootfree(&k, max_degree)?;
    println!("{}", print_unipoly(&w.poly, "T"));
    Ok(0)
}

fn cmd_reduce(file: &PathBuf, witness: Option<&str>, as_json: bool) -> Result<i32> {
    let doc = load_document(file)?;
    let w = resolve_witness(&doc.system.field, witness)?;
    let chain = collapse_chain(&w, &doc.system)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&chain_json(&doc, &chain)?)?);
    } else {
        let names = &doc.system.var_names;
        println!("witness: {}", print_unipoly(&w.poly, "T"));
        println!("collapsed: {}", print_canonical(&chain.collapsed, names)?);
        println!("degree: {}", chain.collapsed.degree());
        for (i, s) in chain.steps.iter().enumerate() {
            println!(
                "step {}: combine({}, {}) -> degree {}",
                i + 1,
                print_canonical(&s.f1, names)?,
                print_canonical(&s.f2, names)?,
                s.result.degree()
            );
            println!(
                "  certificate: ({})*f1 + ({})*f2 = result",
                print_canonical(&s.cofactor_a, names)?,
                print_canonical(&s.cofactor_b, names)?
            );
        }
        for warning in &chain.warnings {
            eprintln!("warning: {warning}");
        }
    }
    Ok(0)
}

fn cmd_solve(file: &PathBuf, as_json: bool) -> Result<i32> {
    let doc = load_document(file)?;
    let system = &doc.system;
    let report = enumerate_zero_locus_capped(
        &system.generators,
        &system.field,
        system.nvars(),
        max_points(),
    )?;
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&locus_json(&system.field, &report))?
        );
    } else if report.points.is_empty() {
        println!("empty locus");
    } else {
        for p in &report.points {
            println!("{}", print_point(&system.field, p));
        }
    }
    Ok(0)
}

fn cmd_verify(
    file: &PathBuf,
    witness: Option<&str>,
    seed: Option<u64>,
    as_json: bool,
) -> Result<i32> {
    let doc = load_document(file)?;
    let w = resolve_witness(&doc.system.field, witness)?;
    let chain = collapse_chain(&w, &doc.system)?;
    let seed = seed.unwrap_or(DEFAULT_SAMPLE_SEED);
    let verdict = verify_equivalence_with(&doc.system, &chain.collapsed, seed, max_points())?;
    let names = &doc.system.var_names;
    let (code, verdict_json) = match &verdict {
        EquivalenceVerdict::Equivalent => (0, json!({"verdict": "equivalent"})),
        EquivalenceVerdict::CounterexamplePoint(a) => (
            1,
            json!({
                "verdict": "counterexample",
                "point": a.coords
                    .iter()
                    .map(|c| doc.system.field.format_element(c))
                    .collect::<Vec<_>>(),
            }),
        ),
        EquivalenceVerdict::UnknownSampled => (
            2,
            json!({"verdict": "unknown_sampled", "seed": seed}),
        ),
    };
    if as_json {
        let mut out = chain_json(&doc, &chain)?;
        out.as_object_mut()
            .unwrap()
            .insert("verification".to_string(), verdict_json);
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("collapsed: {}", print_canonical(&chain.collapsed, names)?);
        match &verdict {
            EquivalenceVerdict::Equivalent => println!("equivalent (exhaustive)"),
            EquivalenceVerdict::CounterexamplePoint(a) => {
                println!("counterexample: {}", print_point(&doc.system.field, a))
            }
            EquivalenceVerdict::UnknownSampled => println!(
                "no counterexample found at any sampled point (seed {seed}); \
                 equivalence over Q is not decidable by evaluation"
            ),
        }
    }
    Ok(code)
}

fn cmd_monicize(file: &PathBuf, target: &str) -> Result<i32> {
    let doc = load_document(file)?;
    let f = doc.generator_named(target)?;
    let names = &doc.system.var_names;
    let m = monicize(f)?;
    println!("scaling: {}", doc.system.field.format_element(&m.scaling));
    println!("monic degree: {}", m.monic_degree);
    for (j, row) in m.transform.matrix.iter().enumerate() {
        let form: Vec<String> = row
            .iter()
            .map(|c| doc.system.field.format_element(c))
            .collect();
        println!("{} -> [{}]", names[j], form.join(", "));
    }
    println!("monic form: {}", print_canonical(&m.transformed, names)?);
    if doc.system.field.is_finite() {
        let points = specialize_and_solve(&m)?;
        if points.is_empty() {
            println!("specialized polynomial has no roots in {}", doc.system.field);
        } else {
            for p in &points {
                println!("zero: {}", print_point(&doc.system.field, p));
            }
        }
    }
    Ok(0)
}

/// Run one CLI invocation and return the process exit code.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.cmd {
        Command::Witness { field, max_degree } => cmd_witness(field, *max_degree),
        Command::Reduce {
            file,
            witness,
            json,
        } => cmd_reduce(file, witness.as_deref(), *json),
        Command::Solve { file, json } => cmd_solve(file, *json),
        Command::Verify {
            file,
            witness,
            seed,
            json,
        } => cmd_verify(file, witness.as_deref(), *seed, *json),
        Command::Monicize { file, target } => cmd_monicize(file, target),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Syntax {
            line: 0,
            col: 0,
            expected: format!("serializable report ({e})"),
        }
    }
}

//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.

mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_core::catalog::{example_5_3, example_5_3_algebra, example_5_5};
use leibniz_core::decompose::{decompose, Verdict};
use leibniz_core::io::{
    parse_algebra, parse_rep, parse_rep_parts, serialize_algebra, serialize_rep,
};
use leibniz_core::linalg::unit_vector;
use leibniz_core::rep::AxiomViolation;
use leibniz_core::sl2::{
    check_sl2_matrices, classify_irreps, simple_ext_algebra, sl2_algebra, sl2_leibniz_irrep,
};
use leibniz_core::{
    Equivalence, Error, Irreducibility, LambdaVariant, LeibnizAlgebra, Representation, Simplicity,
    Subspace,
};
use serde_json::{json, Value};

pub use report::render;

#[derive(Parser, Debug)]
#[command(
    name = "leibniz",
    version,
    about = "Exact computations with Leibniz algebras and their representations"
)]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Leibniz identity, Lie test and kernel dimension.
    Check(Input),
    /// Basis of the Leibniz kernel.
    Kernel(Input),
    /// Lower central and derived series.
    Series(Input),
    /// Maximal solvable ideal.
    Radical(Input),
    Semisimple(Input),
    Simple(Input),
    /// Derivations and inner derivations.
    Derivations(Input),
    /// Levi complement of a semisimple algebra.
    Levi(Input),
    #[command(subcommand)]
    Rep(RepCommand),
    /// Write a catalog algebra or representation file to stdout.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args, Debug)]
pub struct Input {
    /// Input file, or `-` for stdin.
    pub file: String,
}

#[derive(Subcommand, Debug)]
pub enum RepCommand {
    /// Check the three representation axioms.
    Check(Input),
    /// Burnside envelope test and the lambda dichotomy.
    Irreducible(Input),
    /// Irreducible representations of an sl2-extension algebra.
    Classify {
        /// Algebra file, or `-` for stdin.
        file: String,
        /// Highest weight; the module has dimension m+1.
        #[arg(long)]
        m: usize,
    },
    Equivalent {
        first: String,
        second: String,
    },
    Decompose(Input),
    /// Restrict to the subalgebra spanned by the given basis labels.
    Restrict {
        file: String,
        /// Comma-separated basis labels.
        #[arg(long, value_delimiter = ',', required = true)]
        basis: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    Sl2Irrep {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::ZeroLambda)]
        variant: VariantArg,
    },
    SimpleExt {
        #[arg(long)]
        n: usize,
    },
    /// The five-dimensional simple algebra, or its adjoint representation.
    #[command(name = "example-5-3")]
    Example53 {
        #[arg(long)]
        adjoint: bool,
    },
    /// The 3+2 dimensional sl2 representation.
    #[command(name = "example-5-5")]
    Example55 {
        #[arg(long, value_enum, default_value_t = VariantArg::ZeroLambda)]
        first: VariantArg,
        #[arg(long, value_enum, default_value_t = VariantArg::ZeroLambda)]
        second: VariantArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    ZeroLambda,
    AntiSymmetric,
}

impl From<VariantArg> for LambdaVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::ZeroLambda => LambdaVariant::ZeroLambda,
            VariantArg::AntiSymmetric => LambdaVariant::AntiSymmetric,
        }
    }
}

/// What a command run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            code: if e.is_internal() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Runs one command. `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S], stdin: &str) -> Outcome {
    let argv = std::iter::once("leibniz").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(Output::File(text)) => Outcome::ok(text),
        Ok(Output::Report(value)) => Outcome::ok(if cli.json {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        } else {
            render(&value)
        }),
        Err(e) => Outcome::error(&e),
    }
}

enum Output {
    /// An algebra or representation file, printed as is.
    File(String),
    Report(Value),
}

fn read_input(file: &str, stdin: &str) -> leibniz_core::Result<(String, Option<PathBuf>)> {
    if file == "-" {
        return Ok((stdin.to_string(), None));
    }
    let text = std::fs::read_to_string(file).map_err(|e| Error::Io {
        path: file.to_string(),
        message: e.to_string(),
    })?;
    Ok((text, Path::new(file).parent().map(Path::to_path_buf)))
}

fn load_algebra(file: &str, stdin: &str) -> leibniz_core::Result<LeibnizAlgebra> {
    parse_algebra(&read_input(file, stdin)?.0)
}

fn load_rep(file: &str, stdin: &str) -> leibniz_core::Result<Representation> {
    let (text, dir) = read_input(file, stdin)?;
    parse_rep(&text, dir.as_deref())
}

fn execute(cli: &Cli, stdin: &str) -> leibniz_core::Result<Output> {
    use Output::Report;
    match &cli.command {
        Command::Check(i) => check(&load_algebra(&i.file, stdin)?).map(Report),
        Command::Kernel(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            let kernel = alg.leibniz_kernel()?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "kernel_dim": kernel.dim(),
                "kernel_basis": span_labels(&alg, &kernel),
            })))
        }
        Command::Series(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            let lower = alg.lower_central_series()?;
            let derived = alg.derived_series()?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "lower_central_dims": lower.dims(),
                "derived_dims": derived.dims(),
                "nilpotent": lower.reaches_zero(),
                "solvable": derived.reaches_zero(),
            })))
        }
        Command::Radical(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            let radical = alg.radical()?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "radical_dim": radical.dim(),
                "radical_basis": span_labels(&alg, &radical),
            })))
        }
        Command::Semisimple(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "semisimple": alg.is_semisimple()?,
                "radical_dim": alg.radical()?.dim(),
                "kernel_dim": alg.leibniz_kernel()?.dim(),
            })))
        }
        Command::Simple(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            let mut out = json!({ "algebra": alg.name() });
            match alg.is_simple()? {
                Simplicity::Yes => out["simple"] = json!("yes"),
                Simplicity::No { witness, reason } => {
                    out["simple"] = json!("no");
                    out["reason"] = json!(reason);
                    out["witness"] = json!(span_labels(&alg, &witness));
                }
                Simplicity::Undetermined { blocking } => {
                    out["simple"] = json!("undetermined");
                    out["reason"] = json!(blocking);
                }
            }
            Ok(Report(out))
        }
        Command::Derivations(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "der_dim": alg.derivations()?.dim(),
                "inn_dim": alg.inner_derivations()?.dim(),
                "inn_is_ideal": alg.check_inn_ideal()?,
            })))
        }
        Command::Levi(i) => {
            let alg = load_algebra(&i.file, stdin)?;
            let s = alg.levi_subalgebra()?;
            Ok(Report(json!({
                "algebra": alg.name(),
                "levi_dim": s.dim(),
                "levi_basis": span_labels(&alg, &s),
                "kernel_dim": alg.leibniz_kernel()?.dim(),
            })))
        }
        Command::Rep(cmd) => rep_command(cmd, stdin),
        Command::Gen(cmd) => Ok(Output::File(gen_command(cmd)?)),
    }
}

fn check(alg: &LeibnizAlgebra) -> leibniz_core::Result<Value> {
    let names = alg.basis_names();
    let violations: Vec<Value> = alg
        .check_leibniz()
        .iter()
        .map(|&(i, j, k)| json!([names[i], names[j], names[k]]))
        .collect();
    let valid = violations.is_empty();
    Ok(json!({
        "algebra": alg.name(),
        "dim": alg.dim(),
        "leibniz": valid,
        "lie": valid && alg.is_lie(),
        "kernel_dim": if valid { json!(alg.leibniz_kernel()?.dim()) } else { Value::Null },
        "violations": violations,
    }))
}

fn rep_command(cmd: &RepCommand, stdin: &str) -> leibniz_core::Result<Output> {
    use Output::Report;
    match cmd {
        RepCommand::Check(i) => {
            let (text, dir) = read_input(&i.file, stdin)?;
            let parts = parse_rep_parts(&text, dir.as_deref())?;
            let names = parts.algebra.basis_names().to_vec();
            let violations =
                Representation::axiom_violations(&parts.algebra, &parts.rho, &parts.lambda)?;
            let listed: Vec<Value> = violations
                .iter()
                .map(|AxiomViolation { axiom, left, right }| json!({"axiom": axiom, "x": names[*left], "y": names[*right]}))
                .collect();
            let mut out = json!({
                "algebra": parts.algebra.name(),
                "module_dim": parts.rho.first().map_or(0, |m| m.rows()),
                "axioms_hold": listed.is_empty(),
                "violations": listed,
            });
            if parts.algebra.same_structure(&sl2_algebra()) {
                let report = check_sl2_matrices(&parts.rho, &parts.lambda)?;
                out["sl2_failing_identities"] = json!(report.failing_identities);
            }
            Ok(Report(out))
        }
        RepCommand::Irreducible(i) => {
            let rep = load_rep(&i.file, stdin)?;
            let verdict = rep.irreducibility();
            let mut out = json!({
                "algebra": rep.algebra().name(),
                "module_dim": rep.module_dim(),
                "envelope_dim": rep.envelope_dim(),
                "verdict": verdict.label(),
            });
            match &verdict {
                Irreducibility::Reducible(w) => out["invariant_subspace"] = json!(span_coords(w)),
                Irreducibility::AbsIrreducible => {
                    let d = rep.dichotomy_classify()?;
                    out["lambda_variant"] = json!(d.variant.to_string());
                    out["sym_span_dim"] = json!(d.v_span.dim());
                }
                Irreducibility::Undetermined => {}
            }
            Ok(Report(out))
        }
        RepCommand::Classify { file, m } => {
            let alg = load_algebra(file, stdin)?;
            let reps = classify_irreps(&alg, *m)?;
            let listed: Vec<Value> = reps
                .iter()
                .map(|r| {
                    let variant = if r.lambda().iter().all(|l| l.is_zero()) {
                        LambdaVariant::ZeroLambda
                    } else {
                        LambdaVariant::AntiSymmetric
                    };
                    json!({
                        "variant": variant.to_string(),
                        "representation": serde_json::to_value(leibniz_core::io::rep_to_file(r)).expect("rep files serialize"),
                    })
                })
                .collect();
            Ok(Report(json!({
                "algebra": alg.name(),
                "m": m,
                "module_dim": m + 1,
                "count": reps.len(),
                "variants": listed.iter().map(|v| v["variant"].clone()).collect::<Vec<_>>(),
                "representations": listed,
            })))
        }
        RepCommand::Equivalent { first, second } => {
            let a = load_rep(first, stdin)?;
            let b = load_rep(second, stdin)?;
            let verdict = a.equivalence(&b)?;
            let mut out = json!({ "verdict": verdict.label() });
            if let Equivalence::Equivalent(p) = &verdict {
                out["intertwiner"] = json!(matrix_strings(p));
            }
            Ok(Report(out))
        }
        RepCommand::Decompose(i) => {
            let rep = load_rep(&i.file, stdin)?;
            let result = decompose(&rep)?;
            let mut out = json!({
                "algebra": rep.algebra().name(),
                "module_dim": rep.module_dim(),
                "verdict": result.verdict.to_string(),
                "component_dims": result.components.iter().map(Subspace::dim).collect::<Vec<_>>(),
                "components": result.components.iter().map(span_coords).collect::<Vec<_>>(),
            });
            if let Some(o) = &result.obstruction {
                out["obstruction"] = json!(o);
            }
            if result.verdict == Verdict::Decomposed {
                let variants: Vec<Value> = result
                    .components
                    .iter()
                    .map(|c| {
                        let sub = rep.subrepresentation(c)?;
                        Ok(match sub.irreducibility() {
                            Irreducibility::AbsIrreducible => {
                                json!(sub.dichotomy_classify()?.variant.to_string())
                            }
                            other => json!(other.label()),
                        })
                    })
                    .collect::<leibniz_core::Result<_>>()?;
                out["component_types"] = json!(variants);
            }
            Ok(Report(out))
        }
        RepCommand::Restrict { file, basis } => {
            let rep = load_rep(file, stdin)?;
            let alg = rep.algebra();
            let vectors = basis
                .iter()
                .map(|label| {
                    alg.index_of(label)
                        .map(|i| unit_vector(alg.dim(), i))
                        .ok_or_else(|| Error::UnknownLabel(label.clone()))
                })
                .collect::<leibniz_core::Result<Vec<_>>>()?;
            let restricted = rep.restrict(&Subspace::span(alg.dim(), &vectors))?;
            Ok(Output::File(serialize_rep(&restricted)))
        }
    }
}

fn gen_command(cmd: &GenCommand) -> leibniz_core::Result<String> {
    Ok(match cmd {
        GenCommand::Sl2Irrep { m, variant } => {
            serialize_rep(&sl2_leibniz_irrep(*m, (*variant).into()))
        }
        GenCommand::SimpleExt { n } => serialize_algebra(&simple_ext_algebra(*n)?),
        GenCommand::Example53 { adjoint: false } => serialize_algebra(&example_5_3_algebra()),
        GenCommand::Example53 { adjoint: true } => serialize_rep(&example_5_3().1),
        GenCommand::Example55 { first, second } => {
            serialize_rep(&example_5_5((*first).into(), (*second).into()))
        }
    })
}

fn span_labels(alg: &LeibnizAlgebra, space: &Subspace) -> Vec<String> {
    space.vectors().map(|v| alg.format_vector(v)).collect()
}

fn span_coords(space: &Subspace) -> Vec<Vec<String>> {
    space
        .vectors()
        .map(|v| {
            v.iter()
                .map(leibniz_core::linalg::format_rational)
                .collect()
        })
        .collect()
}

fn matrix_strings(m: &leibniz_core::Matrix) -> Vec<Vec<String>> {
    m.row_vectors()
        .map(|r| {
            r.iter()
                .map(leibniz_core::linalg::format_rational)
                .collect()
        })
        .collect()
}

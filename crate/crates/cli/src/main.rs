//! `leibniz`: compute Frattini-type invariants of finite-dimensional
//! Leibniz algebras given by structure constants, and run the statement
//! checks on them.

use std::fs;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leibniz_cli::exit_code;
use leibniz_cli::format::{self, parse_field};
use leibniz_cli::report;
use leibniz_core::engel;
use leibniz_core::frattini::{self, GenFratMethod};
use leibniz_core::lattice::{self, EnumBudget};
use leibniz_core::verify::{self, StatementId};
use leibniz_core::{catalog, Error as CoreError, FieldSpec, LeibnizAlgebra};

#[derive(Parser)]
#[command(
    name = "leibniz",
    about = "Frattini-type invariants of finite-dimensional Leibniz algebras",
    version
)]
struct Cli {
    /// Maximum number of subspaces exhaustive enumeration may visit.
    #[arg(long, global = true, default_value_t = 200_000)]
    budget_subspaces: u64,
    /// Maximum number of elements element-exhaustive checks may visit.
    #[arg(long, global = true, default_value_t = 100_000)]
    budget_elements: u64,
    /// Seed for all randomized searches (Cartan descent, fuzz corpora).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-instantiate catalog entries over another field (Q or GF(p)).
    #[arg(long, global = true)]
    field_override: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a .lal file and validate the Leibniz identity.
    Check { file: String },
    /// Center, left center, Leib(A), A² and the Lie flag.
    Invariants { file: String },
    /// Lower central, derived and upper central series with flags.
    Series { file: String },
    /// Exhaustive subalgebra/ideal lattice over a prime field.
    Lattice { file: String },
    /// F, Φ, R, T, τ, nFrat, Nil and Rad in the strongest certified mode.
    Frattini { file: String },
    /// Test an ideal for the generalized Frattini property.
    Genfrat {
        file: String,
        /// Ideal generators: comma-separated combinations, e.g. "a2+a3".
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = MethodArg::NilPullback)]
        method: MethodArg,
    },
    /// Search for a Cartan subalgebra and verify it.
    Cartan { file: String },
    /// Test an ideal for primitivity.
    Primitive {
        file: String,
        #[arg(long)]
        ideal: String,
    },
    /// Non-generator, normal non-generator and n-nongenerator sets.
    Nongen { file: String },
    /// Run statement checks on a file, the catalog, or a dim-2 sweep.
    Verify {
        file: Option<String>,
        /// Use the built-in catalog as the corpus.
        #[arg(long)]
        catalog: bool,
        /// Use every valid dim-2 algebra over GF(p) as the corpus.
        #[arg(long, value_name = "p")]
        exhaustive_dim2: Option<u32>,
        /// Comma-separated statement names (default: all).
        #[arg(long)]
        statements: Option<String>,
        /// Print passing checks too.
        #[arg(long)]
        verbose: bool,
    },
    /// List or emit built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    NilPullback,
    Theorem7,
    DefinitionCartan,
    Theorem16,
}

impl MethodArg {
    fn to_core(self) -> GenFratMethod {
        match self {
            MethodArg::NilPullback => GenFratMethod::NilPullback,
            MethodArg::Theorem7 => GenFratMethod::Theorem7Exhaustive,
            MethodArg::DefinitionCartan => GenFratMethod::DefinitionCartan,
            MethodArg::Theorem16 => GenFratMethod::Theorem16Engel,
        }
    }
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the builder families.
    List,
    /// Emit a catalog entry as a .lal file (default field: Q).
    Emit { name: String },
}

struct CliFailure {
    message: String,
    exit: i32,
}

fn fail(message: impl Into<String>, exit: i32) -> CliFailure {
    CliFailure {
        message: message.into(),
        exit,
    }
}

fn core_error(e: CoreError) -> CliFailure {
    let exit = match e {
        CoreError::BudgetExceeded { .. }
        | CoreError::WrongField
        | CoreError::UnsupportedField(_)
        | CoreError::NilUnavailable
        | CoreError::CartanSearchFailed { .. }
        | CoreError::WitnessNotFound => exit_code::SKIP,
        _ => exit_code::USAGE,
    };
    fail(e.to_string(), exit)
}

struct Outcome {
    text: String,
    machine: Value,
    exit: i32,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    match dispatch(&cli) {
        Ok(mut outcome) => {
            if cli.format == Format::Machine {
                if let Value::Object(map) = &mut outcome.machine {
                    map.insert(
                        "elapsed_ms".into(),
                        json!(started.elapsed().as_millis() as u64),
                    );
                    map.insert("seed".into(), json!(cli.seed));
                    map.insert(
                        "budget".into(),
                        json!({
                            "max_subspaces": cli.budget_subspaces,
                            "max_elements": cli.budget_elements,
                        }),
                    );
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.machine).expect("reports serialize")
                );
            } else {
                print!("{}", outcome.text);
            }
            std::process::exit(outcome.exit);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.exit);
        }
    }
}

fn budget_of(cli: &Cli) -> EnumBudget {
    EnumBudget {
        max_subspaces: cli.budget_subspaces,
        max_elements: cli.budget_elements,
    }
}

fn load_algebra(path: &str) -> Result<LeibnizAlgebra, CliFailure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(format!("cannot read {path}: {e}"), exit_code::USAGE))?;
    format::parse_lal(&text).map_err(|e| fail(format!("{path}: {e}"), exit_code::USAGE))
}

fn override_field(cli: &Cli) -> Result<Option<FieldSpec>, CliFailure> {
    match &cli.field_override {
        None => Ok(None),
        Some(text) => parse_field(text)
            .map(Some)
            .map_err(|e| fail(e, exit_code::USAGE)),
    }
}

fn parse_ideal(a: &LeibnizAlgebra, text: &str) -> Result<leibniz_core::Subspace, CliFailure> {
    let gens = format::parse_generators(a.field(), a.basis_names(), text)
        .map_err(|e| fail(e, exit_code::USAGE))?;
    Ok(a.span(&gens))
}

fn algebra_header(a: &LeibnizAlgebra) -> Value {
    json!({
        "field": a.field().to_string(),
        "dim": a.dim(),
        "basis": a.basis_names(),
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliFailure> {
    let budget = budget_of(cli);
    match &cli.command {
        Command::Check { file } => {
            let a = load_algebra(file)?;
            Ok(Outcome {
                text: format!(
                    "valid Leibniz algebra: dim {} over {} (basis {})\n",
                    a.dim(),
                    a.field(),
                    a.basis_names().join(" ")
                ),
                machine: json!({"command": "check", "algebra": algebra_header(&a), "valid": true}),
                exit: exit_code::OK,
            })
        }
        Command::Invariants { file } => {
            let a = load_algebra(file)?;
            let inv = a.invariants();
            Ok(Outcome {
                text: report::invariants_text(&a, &inv),
                machine: json!({
                    "command": "invariants",
                    "algebra": algebra_header(&a),
                    "result": report::invariants_json(&a, &inv),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Series { file } => {
            let a = load_algebra(file)?;
            let s = a.series();
            Ok(Outcome {
                text: report::series_text(&a, &s),
                machine: json!({
                    "command": "series",
                    "algebra": algebra_header(&a),
                    "result": report::series_json(&a, &s),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Lattice { file } => {
            let a = load_algebra(file)?;
            let r = lattice::lattice_report(&a, &budget).map_err(core_error)?;
            Ok(Outcome {
                text: report::lattice_text(&a, &r),
                machine: json!({
                    "command": "lattice",
                    "algebra": algebra_header(&a),
                    "result": report::lattice_json(&a, &r),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Frattini { file } => {
            let a = load_algebra(file)?;
            let r = frattini::frattini_report(&a, &budget).map_err(core_error)?;
            Ok(Outcome {
                text: report::frattini_text(&a, &r),
                machine: json!({
                    "command": "frattini",
                    "algebra": algebra_header(&a),
                    "result": report::frattini_json(&a, &r),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Genfrat {
            file,
            ideal,
            method,
        } => {
            let a = load_algebra(file)?;
            let h = parse_ideal(&a, ideal)?;
            let v = frattini::is_generalized_frattini(&a, &h, method.to_core(), &budget, cli.seed)
                .map_err(core_error)?;
            let exit = if v.holds {
                exit_code::OK
            } else {
                exit_code::MATH_FAIL
            };
            Ok(Outcome {
                text: report::genfrat_text(&a, &v),
                machine: json!({
                    "command": "genfrat",
                    "algebra": algebra_header(&a),
                    "ideal": report::subspace_json(&a, &h),
                    "result": report::genfrat_json(&a, &v),
                }),
                exit,
            })
        }
        Command::Cartan { file } => {
            let a = load_algebra(file)?;
            let r = engel::find_cartan(&a, cli.seed, engel::DEFAULT_ENGEL_BUDGET)
                .map_err(core_error)?;
            Ok(Outcome {
                text: report::cartan_text(&a, &r),
                machine: json!({
                    "command": "cartan",
                    "algebra": algebra_header(&a),
                    "result": report::cartan_json(&a, &r),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Primitive { file, ideal } => {
            let a = load_algebra(file)?;
            let k = parse_ideal(&a, ideal)?;
            let v = frattini::is_primitive_ideal(&a, &k, &budget).map_err(core_error)?;
            let exit = if v.is_primitive {
                exit_code::OK
            } else {
                exit_code::MATH_FAIL
            };
            Ok(Outcome {
                text: report::primitive_text(&a, &v),
                machine: json!({
                    "command": "primitive",
                    "algebra": algebra_header(&a),
                    "ideal": report::subspace_json(&a, &k),
                    "result": report::primitive_json(&a, &v),
                }),
                exit,
            })
        }
        Command::Nongen { file } => {
            let a = load_algebra(file)?;
            let sets = frattini::nongenerator_sets(&a, &budget).map_err(core_error)?;
            Ok(Outcome {
                text: report::nongen_text(&a, &sets),
                machine: json!({
                    "command": "nongen",
                    "algebra": algebra_header(&a),
                    "result": report::nongen_json(&a, &sets),
                }),
                exit: exit_code::OK,
            })
        }
        Command::Verify {
            file,
            catalog: use_catalog,
            exhaustive_dim2,
            statements,
            verbose,
        } => {
            let corpus = build_corpus(cli, file.as_deref(), *use_catalog, *exhaustive_dim2)?;
            let statements = match statements {
                None => verify::ALL_STATEMENTS.to_vec(),
                Some(list) => {
                    let mut out = Vec::new();
                    for name in list.split(',') {
                        let name = name.trim();
                        let s = StatementId::parse(name).ok_or_else(|| {
                            fail(format!("unknown statement '{name}'"), exit_code::USAGE)
                        })?;
                        out.push(s);
                    }
                    out
                }
            };
            let started = Instant::now();
            let suite = verify::run_suite(&corpus, &statements, &budget, cli.seed, &mut || {
                started.elapsed().as_micros() as u64
            });
            let exit = if suite.fail_count() > 0 {
                exit_code::MATH_FAIL
            } else if suite.pass_count() > 0 {
                exit_code::OK
            } else {
                exit_code::SKIP
            };
            Ok(Outcome {
                text: report::suite_text(&suite, *verbose),
                machine: json!({
                    "command": "verify",
                    "corpus": corpus.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                    "result": report::suite_json(&suite),
                }),
                exit,
            })
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let mut text = String::new();
                let mut rows = Vec::new();
                for family in catalog::families() {
                    let field = override_field(cli)?.unwrap_or(FieldSpec::Rationals);
                    let built = catalog::build(family, field).expect("listed family exists");
                    match built {
                        Ok(entry) => {
                            text.push_str(&format!(
                                "{:<20} dim {} over {} ({} asserted facts)\n",
                                family,
                                entry.algebra.dim(),
                                field,
                                entry.asserted.len()
                            ));
                            rows.push(json!({
                                "family": family,
                                "dim": entry.algebra.dim(),
                                "field": field.to_string(),
                                "asserted_facts": entry.asserted.len(),
                            }));
                        }
                        Err(e) => {
                            text.push_str(&format!("{family:<20} unavailable over {field}: {e}\n"));
                            rows.push(json!({"family": family, "error": e.to_string()}));
                        }
                    }
                }
                Ok(Outcome {
                    text,
                    machine: json!({"command": "catalog-list", "families": rows}),
                    exit: exit_code::OK,
                })
            }
            CatalogAction::Emit { name } => {
                let field = override_field(cli)?.unwrap_or(FieldSpec::Rationals);
                let entry = catalog::build(name, field)
                    .ok_or_else(|| {
                        fail(format!("unknown catalog family '{name}'"), exit_code::USAGE)
                    })?
                    .map_err(core_error)?;
                let lal = format::emit_lal(&entry.algebra);
                Ok(Outcome {
                    text: lal.clone(),
                    machine: json!({
                        "command": "catalog-emit",
                        "family": name,
                        "field": field.to_string(),
                        "lal": lal,
                    }),
                    exit: exit_code::OK,
                })
            }
        },
    }
}

fn build_corpus(
    cli: &Cli,
    file: Option<&str>,
    use_catalog: bool,
    exhaustive_dim2: Option<u32>,
) -> Result<Vec<(String, LeibnizAlgebra)>, CliFailure> {
    let sources = usize::from(file.is_some())
        + usize::from(use_catalog)
        + usize::from(exhaustive_dim2.is_some());
    if sources != 1 {
        return Err(fail(
            "verify needs exactly one corpus: a file, --catalog, or --exhaustive-dim2 p",
            exit_code::USAGE,
        ));
    }
    if let Some(path) = file {
        let a = load_algebra(path)?;
        return Ok(vec![(path.to_string(), a)]);
    }
    if let Some(p) = exhaustive_dim2 {
        if p != 2 && p != 3 {
            return Err(fail(
                "the exhaustive dim-2 sweep supports p = 2 or p = 3",
                exit_code::USAGE,
            ));
        }
        let entries = catalog::exhaustive_dim2(p).map_err(core_error)?;
        return Ok(entries
            .into_iter()
            .map(|e| (e.name.clone(), e.algebra))
            .collect());
    }
    // catalog corpus, optionally re-instantiated over one field
    match override_field(cli)? {
        None => Ok(catalog::standard_entries()
            .into_iter()
            .map(|(name, e)| (name, e.algebra))
            .collect()),
        Some(field) => {
            let mut out = Vec::new();
            for family in catalog::families() {
                let entry = catalog::build(family, field)
                    .expect("listed family exists")
                    .map_err(core_error)?;
                out.push((format!("{family}[{field}]"), entry.algebra));
            }
            Ok(out)
        }
    }
}

//! Batch front end: JSON in, JSON or markdown out.
//!
//! Exit codes: 0 success, 1 input or resource error, 2 verification
//! failure. Every report carries the convention block; all randomness
//! flows from `--seed`, and reports are byte-identical for a fixed seed
//! (pass `--timing` to add wall-clock data outside that contract).

use bardel::deligne::{
    class_is_trivial, cocycle_check, deligne_complex, flat_normal_form, gerbe_view,
    localize_cocycle, scalar_curvature, tower_check, tower_collapse, weil_kostant_lift,
};
use bardel::exact::group::FgAbGroup;
use bardel::io;
use bardel::simplicial::complex::Complex;
use bardel::simplicial::periods::ComplexHomology;
use bardel::simplicial::spaces::{standard_space, SpaceName};
use bardel::suite;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "bardel",
    version,
    about = "Exact bar-construction and Deligne cocycle computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock timing (reports then vary run to run).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
struct SpaceArgs {
    /// Built-in space: circle, sphere(n), torus, rp2, klein.
    #[arg(long)]
    space: Option<String>,
    /// Complex from a JSON file: {"vertices": n, "facets": [[...], ...]}.
    #[arg(long)]
    complex: Option<PathBuf>,
}

impl SpaceArgs {
    fn load(&self) -> Result<Complex, CliError> {
        match (&self.space, &self.complex) {
            (Some(name), None) => Ok(standard_space(SpaceName::parse(name)?)),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                Ok(io::complex_from_json(&io::parse(&text)?)?)
            }
            _ => Err(CliError::input(
                "exactly one of --space or --complex is required",
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Integral (and rational) cohomology of a complex.
    Cohomology {
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// Homology of the Eilenberg-MacLane space K(A, s).
    EmHomology {
        /// Group spec, e.g. "Z", "Z/2", "Z/2+Z/4".
        #[arg(long)]
        group: String,
        /// Number of classifying-space iterations.
        #[arg(long)]
        s: usize,
        #[arg(long)]
        max_degree: usize,
        /// Degreewise generator budget.
        #[arg(long, default_value_t = bardel::bar::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// E- and B-side homology of the Milnor join model.
    JoinModel {
        #[arg(long)]
        group: String,
        /// Join stage: the (n+1)-fold join of |G| points.
        #[arg(long)]
        n: usize,
    },
    /// Degreewise exactness of the bar resolution G -> EG -> EBG -> ...
    BarExactness {
        #[arg(long)]
        group: String,
        /// Resolution length L (stages through EB^L G).
        #[arg(long)]
        s: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = bardel::bar::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Build the Deligne complex; with --cocycle, run the class operations.
    Deligne {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Cocycle JSON: {"p":, "q":, "c":, "omega":, "theta":}.
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Lift a closed form with integral periods to a Deligne cocycle.
    WeilKostant {
        #[command(flatten)]
        space: SpaceArgs,
        /// Degree of the form (the weight is the same).
        #[arg(long)]
        p: usize,
        /// Cochain JSON for the form.
        #[arg(long)]
        form: PathBuf,
    },
    /// Check, collapse, or read a Čech tower as gerbe data.
    Tower {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum)]
        mode: TowerMode,
        /// Tower JSON file.
        #[arg(long)]
        tower: Option<PathBuf>,
        /// Alternatively, localize this cocycle over the star cover first.
        #[arg(long)]
        from_cocycle: Option<PathBuf>,
    },
    /// Run the full verification corpus.
    Corpus,
}

#[derive(Clone, Copy, ValueEnum)]
enum TowerMode {
    Check,
    Collapse,
    GerbeView,
}

struct CliError {
    message: String,
    exit: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit: 1,
        }
    }
}

impl From<bardel::Error> for CliError {
    fn from(e: bardel::Error) -> Self {
        CliError {
            message: e.to_string(),
            exit: 1,
        }
    }
}

fn read_json(path: &PathBuf) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(io::parse(&text)?)
}

/// A finished report plus the exit code its verdicts imply.
struct Outcome {
    result: Value,
    markdown: Vec<String>,
    /// Pre-rendered markdown (used verbatim when present).
    markdown_raw: Option<String>,
    exit: u8,
}

impl Outcome {
    fn ok(result: Value, markdown: Vec<String>) -> Self {
        Outcome {
            result,
            markdown,
            markdown_raw: None,
            exit: 0,
        }
    }

    fn verification_failure(result: Value, markdown: Vec<String>) -> Self {
        Outcome {
            result,
            markdown,
            markdown_raw: None,
            exit: 2,
        }
    }
}

fn group_table(groups: &[FgAbGroup], prefix: &str) -> Vec<String> {
    groups
        .iter()
        .enumerate()
        .map(|(i, g)| format!("{prefix}{i} = {g}"))
        .collect()
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Cohomology { space } => {
            let x = space.load()?;
            let hom = ComplexHomology::new(&x)?;
            let dim = x.dim();
            let co: Vec<FgAbGroup> = (0..=dim as isize)
                .map(|d| hom.cohomology().group(d))
                .collect();
            let ho: Vec<FgAbGroup> = (0..=dim as isize)
                .map(|d| hom.homology().group(d))
                .collect();
            let result = json!({
                "f_vector": x.f_vector(),
                "euler_characteristic": x.euler_characteristic(),
                "cohomology": io::homology_table_to_json(&co),
                "homology": io::homology_table_to_json(&ho),
            });
            let mut md = group_table(&co, "H^");
            md.push(format!("chi = {}", x.euler_characteristic()));
            Ok(Outcome::ok(result, md))
        }
        Command::EmHomology {
            group,
            s,
            max_degree,
            budget,
        } => {
            let g = FgAbGroup::parse(group)?;
            let table = bardel::bar::em_homology(&g, *s, *max_degree, *budget)?;
            let result = json!({
                "group": io::group_to_json(&g),
                "s": s,
                "homology": io::homology_table_to_json(&table),
            });
            Ok(Outcome::ok(result, group_table(&table, "H_")))
        }
        Command::JoinModel { group, n } => {
            let g = FgAbGroup::parse(group)?;
            let jm = bardel::bar::milnor_join_homology(&g, *n)?;
            let result = json!({
                "group": io::group_to_json(&g),
                "n": n,
                "e_homology": io::homology_table_to_json(&jm.e_homology),
                "b_homology": io::homology_table_to_json(&jm.b_homology),
            });
            let mut md = group_table(&jm.e_homology, "E side H_");
            md.extend(group_table(&jm.b_homology, "B side H_"));
            Ok(Outcome::ok(result, md))
        }
        Command::BarExactness {
            group,
            s,
            max_degree,
            budget,
        } => {
            let g = FgAbGroup::parse(group)?;
            let report = bardel::bar::bar_resolution_check(&g, *s, *max_degree, *budget)?;
            let stages: Vec<Value> = report
                .stages
                .iter()
                .map(|st| {
                    json!({
                        "stage": st.stage,
                        "degree": st.degree,
                        "verdict": if st.passed { "exact" } else { "FAIL" },
                        "witness": st.witness.as_ref().map(|w| {
                            w.iter().map(ToString::to_string).collect::<Vec<_>>()
                        }),
                    })
                })
                .collect();
            let all = report.all_exact();
            let result = json!({
                "group": io::group_to_json(&g),
                "length": s,
                "max_degree": max_degree,
                "stages": stages,
                "exact": all,
            });
            let md = vec![format!(
                "bar resolution of {g}: {} ({} stages)",
                if all { "exact" } else { "NOT exact" },
                report.stages.len()
            )];
            if all {
                Ok(Outcome::ok(result, md))
            } else {
                Ok(Outcome::verification_failure(result, md))
            }
        }
        Command::Deligne {
            space,
            p,
            q,
            cocycle,
        } => {
            let x = space.load()?;
            let dc = deligne_complex(&x, *q, (*p).max(x.dim()) + 1)?;
            let rc = dc.rational_complex()?; // asserts d∘d = 0
            let mut result = json!({
                "p": p,
                "q": q,
                "term_ranks": (0..=*p).map(|n| {
                    let (z, o, t) = dc.term_ranks(n);
                    json!({"degree": n, "z": z, "omega": o, "theta": t})
                }).collect::<Vec<_>>(),
                "d_squared_zero": true,
                "total_rank": (0..=rc.hi()).map(|d| rc.rank(d)).sum::<usize>(),
            });
            let mut md = vec![format!("Deligne complex at weight {q}: d∘d = 0")];
            let mut exit_ok = true;
            if let Some(path) = cocycle {
                let hom = ComplexHomology::new(&x)?;
                let cocycle = io::cocycle_from_json(&x, &read_json(path)?)?;
                if cocycle.p != *p || cocycle.q != *q {
                    return Err(CliError::input("cocycle (p, q) disagrees with the flags"));
                }
                let check = cocycle_check(&hom, &cocycle)?;
                let mut class_ops = json!({
                    "valid": check.valid,
                    "violations": check.violations,
                    "char_class": check.char_class.as_ref().map(|cc| {
                        cc.iter().map(ToString::to_string).collect::<Vec<_>>()
                    }),
                });
                if check.valid {
                    let trivial = class_is_trivial(&hom, &cocycle)?;
                    class_ops["trivial"] = json!(trivial.is_some());
                    if let Some(w) = trivial {
                        class_ops["witness"] = json!({
                            "b": io::cochain_to_json(&w.b),
                            "zeta": io::cochain_to_json(&w.zeta),
                            "eta": io::cochain_to_json(&w.eta),
                        });
                    }
                    if p == q {
                        let crv = scalar_curvature(&hom, &cocycle)?;
                        class_ops["scalar_curvature"] = io::cochain_to_json(&crv);
                    }
                    if cocycle.omega.is_zero() {
                        let flat = flat_normal_form(&hom, &cocycle)?;
                        class_ops["flat_invariant"] = io::cochain_to_json(&flat.u);
                    }
                    md.push(format!(
                        "cocycle valid; trivial: {}",
                        class_ops["trivial"].as_bool().unwrap_or(false)
                    ));
                } else {
                    md.push(format!("cocycle INVALID: {}", check.violations.join("; ")));
                    exit_ok = false;
                }
                result["cocycle"] = class_ops;
            }
            if exit_ok {
                Ok(Outcome::ok(result, md))
            } else {
                Ok(Outcome::verification_failure(result, md))
            }
        }
        Command::WeilKostant { space, p, form } => {
            let x = space.load()?;
            let hom = ComplexHomology::new(&x)?;
            let omega = io::cochain_from_json(&x, &read_json(form)?)?;
            if omega.degree() != *p {
                return Err(CliError::input(format!(
                    "form has degree {}, expected {p}",
                    omega.degree()
                )));
            }
            let lift = weil_kostant_lift(&hom, &omega)?;
            // postcondition echo
            let back = scalar_curvature(&hom, &lift)?;
            if back != omega {
                return Err(CliError::input("internal: lift curvature mismatch"));
            }
            let check = cocycle_check(&hom, &lift)?;
            let result = json!({
                "lift": io::cocycle_to_json(&lift),
                "round_trip_curvature_equal": true,
                "char_class": check.char_class.map(|cc| {
                    cc.iter().map(ToString::to_string).collect::<Vec<_>>()
                }),
            });
            Ok(Outcome::ok(
                result,
                vec!["lift emitted; curvature round trip exact".into()],
            ))
        }
        Command::Tower {
            space,
            mode,
            tower,
            from_cocycle,
        } => {
            let x = space.load()?;
            let hom = ComplexHomology::new(&x)?;
            let t = match (tower, from_cocycle) {
                (Some(path), None) => io::tower_from_json(&x, &read_json(path)?)?,
                (None, Some(path)) => {
                    let cocycle = io::cocycle_from_json(&x, &read_json(path)?)?;
                    localize_cocycle(&hom, &cocycle)?
                }
                _ => {
                    return Err(CliError::input(
                        "exactly one of --tower or --from-cocycle is required",
                    ))
                }
            };
            match mode {
                TowerMode::Check => {
                    let report = tower_check(&x, &t)?;
                    let result = json!({
                        "valid": report.valid,
                        "defect": report.defect.as_ref().map(|(eq, key)| json!({
                            "equation": eq, "intersection": key,
                        })),
                        "tower": io::tower_to_json(&t),
                    });
                    let md = vec![match &report.defect {
                        None => "tower valid".to_string(),
                        Some((eq, key)) => format!("tower INVALID: {eq} fails at {key}"),
                    }];
                    if report.valid {
                        Ok(Outcome::ok(result, md))
                    } else {
                        Ok(Outcome::verification_failure(result, md))
                    }
                }
                TowerMode::Collapse => {
                    let collapsed = tower_collapse(&hom, &t)?;
                    let check = cocycle_check(&hom, &collapsed)?;
                    let result = json!({
                        "cocycle": io::cocycle_to_json(&collapsed),
                        "valid": check.valid,
                        "char_class": check.char_class.map(|cc| {
                            cc.iter().map(ToString::to_string).collect::<Vec<_>>()
                        }),
                    });
                    Ok(Outcome::ok(
                        result,
                        vec!["tower collapsed to a valid cocycle".into()],
                    ))
                }
                TowerMode::GerbeView => {
                    let gerbe = gerbe_view(&x, &t)?;
                    let fund: Vec<_> = hom.free_cycles(3);
                    let period = fund
                        .first()
                        .map(|z| gerbe.curvature.pair(&x, z))
                        .transpose()?
                        .map(|p| {
                            use bardel::scalar::Scalar;
                            p.render()
                        });
                    let result = json!({
                        "transition_g": gerbe.g.iter().map(|(k, c)| {
                            json!({"intersection": k.label(), "value": io::cochain_to_json(c)})
                        }).collect::<Vec<_>>(),
                        "connective_a": gerbe.a.len(),
                        "curving_b": gerbe.b.len(),
                        "curvature": io::cochain_to_json(&gerbe.curvature),
                        "curvature_total_period": period,
                    });
                    Ok(Outcome::ok(result, vec!["gerbe data extracted".into()]))
                }
            }
        }
        Command::Corpus => {
            let report = suite::run_corpus(cli.seed)?;
            let result = report.to_json();
            let exit = if report.all_passed() { 0 } else { 2 };
            Ok(Outcome {
                result,
                markdown: Vec::new(),
                markdown_raw: Some(report.to_markdown()),
                exit,
            })
        }
    }
}

fn command_echo(cli: &Cli) -> String {
    let name = match &cli.command {
        Command::Cohomology { .. } => "cohomology",
        Command::EmHomology { .. } => "em-homology",
        Command::JoinModel { .. } => "join-model",
        Command::BarExactness { .. } => "bar-exactness",
        Command::Deligne { .. } => "deligne",
        Command::WeilKostant { .. } => "weil-kostant",
        Command::Tower { .. } => "tower",
        Command::Corpus => "corpus",
    };
    name.to_string()
}

fn main() -> ExitCode {
    // exit code 2 is reserved for verification failures; argument and
    // input problems exit 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            let _ = e.print();
            return ExitCode::from(0);
        }
    };
    let started = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            let mut report = json!({
                "command": command_echo(&cli),
                "seed": cli.seed,
                "conventions": suite::conventions(),
                "results": outcome.result,
            });
            if cli.timing {
                report["timing_ms"] = json!(started.elapsed().as_millis() as u64);
            }
            let text = match cli.format {
                Format::Json => io::to_string_pretty(&report),
                Format::Markdown => {
                    let mut md = match &outcome.markdown_raw {
                        Some(raw) => raw.clone(),
                        None => {
                            let mut md = format!("# {}\n\n", command_echo(&cli));
                            for line in &outcome.markdown {
                                md.push_str(&format!("- {line}\n"));
                            }
                            md.push_str(&format!(
                                "\nConventions: {}\n",
                                suite::conventions_text()
                            ));
                            md
                        }
                    };
                    if cli.timing {
                        md.push_str(&format!("\nTiming: {} ms\n", started.elapsed().as_millis()));
                    }
                    md
                }
            };
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                // tolerate closed pipes (e.g. `bardel ... | head`)
                use std::io::Write;
                let _ = writeln!(std::io::stdout(), "{text}");
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit)
        }
    }
}

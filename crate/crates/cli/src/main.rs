//! `scg` — exact computation and verification for the `osp(1|2n)`
//! Scasimir algebra.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a verification check
//! failed, 2 = usage or parse error.

mod parse;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scasimir_core as core;
use scasimir_core::{GeneratorOrder, Report};

#[derive(Parser)]
#[command(
    name = "scg",
    about = "Exact computer algebra for U(osp(1|2n)): PBW normal ordering, the triangle action, and the Scasimir operator",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    All,
    Series,
    RecursionA,
    RecursionB,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Standard,
    Borel,
    BorelAlt,
}

impl From<OrderArg> for GeneratorOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Standard => GeneratorOrder::Standard,
            OrderArg::Borel => GeneratorOrder::Borel,
            OrderArg::BorelAlt => GeneratorOrder::BorelAlt,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichVerify {
    Ghost,
    ModuleAxioms,
    SumRule,
    Stability,
    Hwv,
    Hc,
    HcSquare,
    Oscillator,
    Rep,
    Filtration,
    PbwOracle,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Scasimir coefficient tables x_0..x_n (and the rescaled y_k).
    Coeffs {
        #[arg(long)]
        n: u32,
        /// Which engine to run; `all` runs the three and checks agreement.
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
    },
    /// The Scasimir in bracket (Ω) coordinates.
    Scasimir {
        #[arg(long)]
        n: u32,
    },
    /// Parse an expression and rewrite it into PBW normal form.
    NormalOrder {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = OrderArg::Standard)]
        order: OrderArg,
        /// Reduce into the bosonic-oscillator quotient instead (the
        /// `--order` flag is then irrelevant).
        #[arg(long)]
        weyl: bool,
        /// Expression over rationals and generators s(a), s(a,b).
        expr: String,
    },
    /// Highest weight vectors of the bracket space Ω.
    Hwv {
        #[arg(long)]
        n: u32,
    },
    /// Harish-Chandra image γ⁻¹∘h of the Scasimir (and of its square).
    Hc {
        #[arg(long)]
        n: u32,
        /// Also compute the image of Sc².
        #[arg(long)]
        square: bool,
    },
    /// Matrix images in the (2n+1)-dimensional fundamental representation.
    Rep {
        #[arg(long)]
        n: u32,
        /// Evaluate this expression instead of listing the generator images.
        expr: Option<String>,
    },
    /// Run a verification sweep; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        which: WhichVerify,
        #[arg(long)]
        n: u32,
        /// Seed for the randomized sweeps.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Sample count for the randomized sweeps.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Allow the expensive ranks (equivalent to SCG_EXTENDED=1).
        #[arg(long)]
        extended: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> anyhow::Result<()> {
    match out {
        None => {
            // Tolerate a closed pipe (e.g. `scg .. | head`).
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{content}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{content}")?;
        }
    }
    Ok(())
}

fn json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Caps on the rank `n` (or degree) accepted without `--extended`.
fn check_extended(which: WhichVerify, n: u32, extended: bool) -> anyhow::Result<()> {
    let cap = match which {
        WhichVerify::Ghost => 2,
        WhichVerify::Stability | WhichVerify::Hwv => 2,
        WhichVerify::Hc | WhichVerify::HcSquare => 2,
        WhichVerify::Oscillator | WhichVerify::Rep => 3,
        WhichVerify::ModuleAxioms => 3,
        WhichVerify::SumRule | WhichVerify::Filtration | WhichVerify::PbwOracle => u32::MAX,
        WhichVerify::All => 2,
    };
    if n > cap && !extended {
        anyhow::bail!(
            "n = {n} exceeds the practical bound {cap} for this check; pass --extended (or set SCG_EXTENDED=1) to run it anyway"
        );
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Coeffs { n, route } => {
            let tables: Vec<core::CoeffTable> = match route {
                RouteArg::Series => vec![core::coeffs_series(n)],
                RouteArg::RecursionA => vec![core::coeffs_recursion_a(n)],
                RouteArg::RecursionB => vec![core::coeffs_recursion_b(n)],
                RouteArg::All => vec![
                    core::coeffs_series(n),
                    core::coeffs_recursion_a(n),
                    core::coeffs_recursion_b(n),
                ],
            };
            let agree = tables.windows(2).all(|w| w[0].x == w[1].x && w[0].y == w[1].y);
            let content = match cli.format {
                Format::Json => {
                    let vals: Vec<Value> = tables.iter().map(render::coeff_table_json).collect();
                    json_string(&Value::Array(vals))
                }
                Format::Text => tables
                    .iter()
                    .map(|t| {
                        let xs: Vec<String> = t.x.iter().map(|v| v.to_string()).collect();
                        let ys: Vec<String> = t.y.iter().map(|v| v.to_string()).collect();
                        format!(
                            "route {} (n = {}):\n  x = ({})\n  y = ({})",
                            t.route,
                            t.n,
                            xs.join(", "),
                            ys.join(", ")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Latex => {
                    let lines: Vec<String> = tables
                        .iter()
                        .map(|t| format!("\\[ {} \\]", render::coeff_table_latex(t)))
                        .collect();
                    render::latex_document(&lines.join("\n"))
                }
            };
            emit(&cli.out, &content)?;
            if !agree {
                eprintln!("error: coefficient routes disagree");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Scasimir { n } => {
            let sc = core::scasimir(n);
            let content = match cli.format {
                Format::Json => json_string(&render::omega_json(&sc)),
                Format::Text => sc.to_string(),
                Format::Latex => {
                    render::latex_document(&format!("\\[ {} \\]", render::omega_latex(&sc)))
                }
            };
            emit(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::NormalOrder {
            n,
            order,
            weyl,
            expr,
        } => {
            let parsed = match parse::parse(&expr, n) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let content = if weyl {
                let reduced = core::weyl_reduce(&parsed);
                match cli.format {
                    Format::Json => json_string(&render::weyl_json(&reduced)),
                    Format::Text => reduced.to_string(),
                    Format::Latex => render::latex_document(&format!(
                        "\\[ {} \\]",
                        render::escape_latex(&reduced.to_string())
                    )),
                }
            } else {
                let nf = core::normal_order(&parsed, order.into());
                match cli.format {
                    Format::Json => json_string(&render::element_json(&nf)),
                    Format::Text => nf.to_string(),
                    Format::Latex => {
                        render::latex_document(&format!("\\[ {} \\]", render::element_latex(&nf)))
                    }
                }
            };
            emit(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Rep { n, expr } => {
            let rep = core::fundamental_rep(n)?;
            let targets: Vec<(String, core::RatMatrix)> = match expr {
                Some(text) => {
                    let parsed = match parse::parse(&text, n) {
                        Ok(p) => p,
                        Err(e) => {
                            eprintln!("error: {e}");
                            return Ok(ExitCode::from(2));
                        }
                    };
                    vec![(text, core::evaluate(&parsed, &rep))]
                }
                None => core::all_generators(n)
                    .into_iter()
                    .map(|g| (g.to_string(), rep.image(g)))
                    .collect(),
            };
            let content = match cli.format {
                Format::Json => {
                    let vals: Vec<Value> = targets
                        .iter()
                        .map(|(name, m)| json!({"of": name, "matrix": render::matrix_json(m)}))
                        .collect();
                    json_string(&Value::Array(vals))
                }
                Format::Text => targets
                    .iter()
                    .map(|(name, m)| format!("{name} ->\n{m}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Latex => {
                    let lines: Vec<String> = targets
                        .iter()
                        .map(|(name, m)| {
                            format!(
                                "\\[ {} \\mapsto {} \\]",
                                render::escape_latex(name),
                                render::matrix_latex(m)
                            )
                        })
                        .collect();
                    render::latex_document(&lines.join("\n"))
                }
            };
            emit(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Hwv { n } => {
            if n > 3 {
                anyhow::bail!("highest weight vectors are computed exactly on a 4^n-dimensional space; n = {n} is past the practical bound 3");
            }
            let hwvs = core::highest_weight_vectors(n);
            let content = match cli.format {
                Format::Json => {
                    let vals: Vec<Value> = hwvs
                        .iter()
                        .map(|(w, v)| {
                            json!({
                                "weight": w.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                                "element": render::omega_json(v),
                            })
                        })
                        .collect();
                    json_string(&Value::Array(vals))
                }
                Format::Text => hwvs
                    .iter()
                    .map(|(w, v)| {
                        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                        format!("weight ({}): {v}", ws.join(", "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Latex => {
                    let lines: Vec<String> = hwvs
                        .iter()
                        .map(|(w, v)| {
                            let ws: Vec<String> = w.iter().map(render::rat_latex).collect();
                            format!(
                                "\\[ ({}) : {} \\]",
                                ws.join(", "),
                                render::omega_latex(v)
                            )
                        })
                        .collect();
                    render::latex_document(&lines.join("\n"))
                }
            };
            emit(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Hc { n, square } => {
            let mut images = vec![("Sc", core::hc_scasimir_image(n))];
            if square {
                images.push(("Sc^2", core::hc_square_image(n)));
            }
            let content = match cli.format {
                Format::Json => {
                    let vals: Vec<Value> = images
                        .iter()
                        .map(|(name, p)| json!({"of": name, "image": render::cartan_json(p)}))
                        .collect();
                    json_string(&Value::Array(vals))
                }
                Format::Text => images
                    .iter()
                    .map(|(name, p)| format!("gamma^-1 h({name}) = {p}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Latex => {
                    let lines: Vec<String> = images
                        .iter()
                        .map(|(name, p)| {
                            format!(
                                "\\[ \\gamma^{{-1}} h({name}) = {} \\]",
                                render::cartan_latex(p)
                            )
                        })
                        .collect();
                    render::latex_document(&lines.join("\n"))
                }
            };
            emit(&cli.out, &content)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            which,
            n,
            seed,
            samples,
            extended,
        } => {
            let extended = extended || std::env::var("SCG_EXTENDED").as_deref() == Ok("1");
            check_extended(which, n, extended)?;
            let reports = run_verify(which, n, seed, samples, extended);
            let all_pass = reports.iter().all(Report::is_pass);
            let content = match cli.format {
                Format::Json => {
                    let vals: Vec<Value> = reports.iter().map(render::report_json).collect();
                    json_string(&Value::Array(vals))
                }
                Format::Text => reports
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Latex => {
                    let lines: Vec<String> = reports
                        .iter()
                        .map(|r| format!("{}\n", render::report_latex(r)))
                        .collect();
                    render::latex_document(&lines.join("\n\\par\n"))
                }
            };
            emit(&cli.out, &content)?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_verify(which: WhichVerify, n: u32, seed: u64, samples: usize, extended: bool) -> Vec<Report> {
    match which {
        WhichVerify::Ghost => vec![core::verify_ghost(n)],
        WhichVerify::ModuleAxioms => vec![core::verify_module_axioms(n, samples, seed)],
        WhichVerify::SumRule => vec![core::verify_sum_rule(n)],
        WhichVerify::Stability => vec![core::verify_stability(n)],
        WhichVerify::Hwv => vec![core::verify_hwv(n)],
        WhichVerify::Hc => vec![core::verify_hc_scasimir(n)],
        WhichVerify::HcSquare => vec![core::verify_hc_square(n)],
        WhichVerify::Oscillator => vec![core::verify_oscillator(n)],
        WhichVerify::Rep => vec![core::verify_rep_ghost(n)],
        WhichVerify::Filtration => vec![core::verify_filtration(n)],
        WhichVerify::PbwOracle => vec![core::verify_pbw_oracle(n, samples.max(200), seed)],
        WhichVerify::All => {
            let mut reports = vec![
                core::verify_pbw_oracle(n, samples.max(200), seed),
                core::verify_module_axioms(n, samples, seed),
                core::verify_stability(n),
                core::verify_hwv(n),
                core::verify_ghost(n),
                core::verify_ghost_in_omega(n),
                core::verify_sum_rule(50),
                core::verify_routes(30),
                core::verify_oscillator(n),
                core::verify_hc_scasimir(n),
                core::verify_hc_square(n),
                core::verify_rep_ghost(n),
                core::verify_filtration(10),
            ];
            if extended && n >= 3 {
                reports.push(core::verify_ghost(3));
                reports.push(core::verify_vanishing(3));
            }
            reports
        }
    }
}

//! Command-line front end: verification targets, coaction and basis output,
//! and Bockstein pages.

use clap::{Args, Parser, Subcommand};
use coact::comodule::ComoduleAlgebra;
use coact::f2poly::GradedAlgebraSpec;
use coact::steenrod::{Profile, QuotientHopf};
use coact::targets::{self, TargetOpts};
use coact::{bockstein, expr, presets};

#[derive(Parser)]
#[command(
    name = "coact",
    about = "Exact mod-2 computations with the dual Steenrod algebra, \
             operation actions, comodule algebras and Bockstein pages",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct CommonOpts {
    /// Degree cap; defaults depend on the target.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Family-index cap for ideal generators.
    #[arg(long)]
    smax: Option<u32>,
    /// Page cap for Bockstein computations.
    #[arg(long)]
    pages: Option<u32>,
    /// Preset variant, such as `corrected` or `as-printed`.
    #[arg(long)]
    variant: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification target; exits nonzero on failure.
    Verify {
        /// Target name, optionally with a variant as `name:variant`.
        target: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Print coactions, bases, series or normal forms.
    Emit {
        /// One of `coact`, `basis`, `poincare`, `reduce`.
        what: String,
        /// The element, in the expression grammar (for `coact`, `reduce`).
        expr: Option<String>,
        /// Preset addressing the algebra the element lives in.
        #[arg(long)]
        preset: Option<String>,
        /// Profile addressing a quotient Hopf algebra (`A(n)`, `E(1)`,
        /// `E(2)`, `E`, or `profile:[...]`), or `A` for the full algebra.
        #[arg(long)]
        over: Option<String>,
        /// Single degree for `basis`.
        #[arg(long)]
        degree: Option<u32>,
        /// Coaction side for `coact`.
        #[arg(long, value_parser = ["left", "right"], default_value = "left")]
        side: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Bockstein pages and the summand profile for a preset.
    Bockstein {
        #[arg(long, default_value = "Mj1")]
        preset: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// List the preset catalog and the verification targets.
    Presets {
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> coact::Result<i32> {
    match cli.command {
        Command::Verify { target, opts } => {
            let topts = TargetOpts {
                max_degree: opts.max_degree,
                smax: opts.smax,
                pages: opts.pages,
                variant: opts.variant.clone(),
            };
            let report = targets::run(&target, &topts)?;
            if opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).unwrap()
                );
            } else {
                println!("{report}");
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Emit {
            what,
            expr,
            preset,
            over,
            degree,
            side,
            opts,
        } => emit(
            &what,
            expr.as_deref(),
            preset.as_deref(),
            over.as_deref(),
            degree,
            &side,
            &opts,
        ),
        Command::Bockstein { preset, opts } => {
            if preset != "Mj1" {
                return Err(coact::Error::UnknownPreset(format!(
                    "Bockstein pages are implemented for Mj1, not {preset}"
                )));
            }
            let dmax = opts.max_degree.unwrap_or(12);
            let rmax = opts.pages.unwrap_or(4);
            let result = bockstein::bss_pages(dmax, rmax)?;
            if opts.json {
                let torsion: Vec<_> = result
                    .summands
                    .torsion
                    .iter()
                    .map(|((d, r), count)| {
                        serde_json::json!({
                            "degree": d,
                            "order": format!("Z/{}", 1u64 << r),
                            "count": count,
                        })
                    })
                    .collect();
                let value = serde_json::json!({
                    "preset": preset,
                    "max-degree": dmax,
                    "pages": result.pages.iter().map(|p| serde_json::json!({
                        "page": p.r,
                        "dims": p.dims,
                    })).collect::<Vec<_>>(),
                    "summands": {
                        "torsion": torsion,
                        "torsion-free-degrees": result.summands.torsion_free,
                    },
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("Bockstein pages for {preset} to degree {dmax}");
                for p in &result.pages {
                    let dims: Vec<String> = p.dims.iter().map(|d| d.to_string()).collect();
                    println!("  page {}: {}", p.r, dims.join(", "));
                }
                println!("summands:");
                for ((d, r), count) in &result.summands.torsion {
                    println!("  degree {d}: {count} x Z/{}", 1u64 << r);
                }
                for d in &result.summands.torsion_free {
                    println!("  degree {d}: torsion free");
                }
            }
            Ok(0)
        }
        Command::Presets { json } => {
            if json {
                let value = serde_json::json!({
                    "comodules": presets::COMODULE_PRESETS,
                    "covers": presets::COVER_PRESETS,
                    "targets": targets::TARGETS,
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!("comodule presets:");
                for p in presets::COMODULE_PRESETS {
                    println!("  {p}");
                }
                println!("cover bookkeeping:");
                for p in presets::COVER_PRESETS {
                    println!("  {p}");
                }
                println!("verification targets:");
                for t in targets::TARGETS {
                    println!("  {t}");
                }
            }
            Ok(0)
        }
    }
}

fn parse_in_preset(text: &str, _preset: &ComoduleAlgebra) -> coact::Result<coact::f2poly::Poly> {
    let resolver = presets::resolver();
    expr::parse_with(text, Some(&resolver))
}

fn emit(
    what: &str,
    expr_text: Option<&str>,
    preset: Option<&str>,
    over: Option<&str>,
    degree: Option<u32>,
    side: &str,
    opts: &CommonOpts,
) -> coact::Result<i32> {
    match what {
        "coact" => {
            let name =
                preset.ok_or_else(|| coact::Error::UnknownPreset("--preset required".into()))?;
            let name = match &opts.variant {
                Some(v) => format!("{name}:{v}"),
                None => name.to_string(),
            };
            let alg = presets::build(&name)?;
            let text = expr_text.ok_or_else(|| coact::Error::Syntax {
                offset: 0,
                msg: "an expression is required".into(),
            })?;
            let p = parse_in_preset(text, &alg)?;
            let value = match (side, over) {
                ("right", _) => alg.rcoact(&p)?,
                ("left", None) => alg.coact(&p)?,
                ("left", Some(profile)) => {
                    let q = QuotientHopf::new(Profile::parse(profile)?, profile)?;
                    alg.induced_coact(&p, &q)?
                }
                _ => unreachable!("clap validates the side"),
            };
            if opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&expr::tensor2_json(&value)).unwrap()
                );
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        "basis" => {
            let d = degree.ok_or_else(|| coact::Error::Syntax {
                offset: 0,
                msg: "--degree is required for basis".into(),
            })?;
            let basis = basis_of(preset, over, d)?;
            if opts.json {
                let value =
                    serde_json::Value::Array(basis.iter().map(expr::monomial_json).collect());
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                let names: Vec<String> = basis.iter().map(|m| m.to_string()).collect();
                println!("{}", names.join(", "));
            }
            Ok(0)
        }
        "poincare" => {
            let dmax = opts.max_degree.unwrap_or(12);
            let series = series_of(preset, over, dmax)?;
            if opts.json {
                println!("{}", serde_json::json!(series));
            } else {
                let names: Vec<String> = series.iter().map(|c| c.to_string()).collect();
                println!("{}", names.join(", "));
            }
            Ok(0)
        }
        "reduce" => {
            let profile = over.ok_or_else(|| coact::Error::Syntax {
                offset: 0,
                msg: "--over is required for reduce".into(),
            })?;
            let q = QuotientHopf::new(Profile::parse(profile)?, profile)?;
            let text = expr_text.ok_or_else(|| coact::Error::Syntax {
                offset: 0,
                msg: "an expression is required".into(),
            })?;
            let resolver = presets::resolver();
            let p = expr::parse_with(text, Some(&resolver))?;
            let value = q.reduce(&p);
            if opts.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&expr::poly_json(&value)).unwrap()
                );
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        other => Err(coact::Error::UnknownTarget(format!("emit {other}"))),
    }
}

fn basis_of(
    preset: Option<&str>,
    over: Option<&str>,
    d: u32,
) -> coact::Result<Vec<coact::f2poly::Monomial>> {
    match (preset, over) {
        (Some(name), _) => {
            if presets::COVER_PRESETS.contains(&name) {
                let gens = presets::cover_generators(name, d)?;
                Ok(GradedAlgebraSpec::new(gens)?.graded_basis(d))
            } else {
                Ok(presets::build(name)?.basis_of_degree(d))
            }
        }
        (None, Some(profile)) => {
            if profile == "A" {
                return Ok(coact::comodule::steenrod_spec(d).graded_basis(d));
            }
            let q = QuotientHopf::new(Profile::parse(profile)?, profile)?;
            Ok(q.basis(d))
        }
        (None, None) => Err(coact::Error::Syntax {
            offset: 0,
            msg: "pass --preset or --over to address an algebra".into(),
        }),
    }
}

fn series_of(preset: Option<&str>, over: Option<&str>, dmax: u32) -> coact::Result<Vec<i64>> {
    match (preset, over) {
        (Some(name), _) => {
            if presets::COVER_PRESETS.contains(&name) {
                let gens = presets::cover_generators(name, dmax)?;
                Ok(GradedAlgebraSpec::new(gens)?.poincare(dmax))
            } else {
                let alg = presets::build(name)?;
                if alg.is_finite() {
                    Ok((0..=dmax)
                        .map(|d| alg.basis_of_degree(d).len() as i64)
                        .collect())
                } else {
                    Ok(alg.algebra_spec(dmax).poincare(dmax))
                }
            }
        }
        (None, Some(profile)) => {
            if profile == "A" {
                return Ok(coact::comodule::steenrod_spec(dmax).poincare(dmax));
            }
            let q = QuotientHopf::new(Profile::parse(profile)?, profile)?;
            Ok((0..=dmax).map(|d| q.basis(d).len() as i64).collect())
        }
        (None, None) => Err(coact::Error::Syntax {
            offset: 0,
            msg: "pass --preset or --over to address an algebra".into(),
        }),
    }
}

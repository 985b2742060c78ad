//! `crlie`: checks, constructions and catalog access on the command line.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! input errors (unreadable file, malformed document, missing block, unknown
//! catalog id, bad usage).

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use crlie_core::cr_kahler::{left_symmetric_product, CrError, LeftSymmetricProduct};
use crlie_core::poisson::format_trivector;
use crlie_core::{catalog, run_all, Document, LieAlgebra, Vector};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "crlie",
    version,
    about = "Exact checks of CR, Kähler-CR and pseudo-Poisson structures on Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check enabled by the blocks of a document.
    Check {
        /// Input document, `-` for stdin.
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a derived structure from a document.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Print `[Λ, Λ]` and whether it lies in `U∧Λ²G`.
    Schouten {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Built-in example structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// The left-symmetric product on H and its commutator bracket.
    LeftSymmetric {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry ids with a one-line description.
    List,
    /// Print the document of an entry.
    Dump { id: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// An outcome that maps onto exit code 0 or 1.
struct Verdict(bool);

fn read_document(path: &str) -> anyhow::Result<Document> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    Ok(Document::parse(&text)?)
}

fn check(file: &str, format: Format) -> anyhow::Result<Verdict> {
    let doc = read_document(file)?;
    let report = run_all(&doc);
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => print!("{}", report.to_structured()),
    }
    Ok(Verdict(report.passed()))
}

fn h_names(p: &LeftSymmetricProduct) -> Vec<String> {
    (1..=p.h_basis().len()).map(|i| format!("h{i}")).collect()
}

fn left_symmetric(file: &str, format: Format) -> anyhow::Result<Verdict> {
    let doc = read_document(file)?;
    let Some(k) = doc.kahler() else {
        bail!("construct left-symmetric needs `cr` and `metric` blocks");
    };
    let g = k.algebra();
    let p = match left_symmetric_product(k) {
        Ok(p) => p,
        Err(CrError::DegenerateOmega) => {
            eprintln!("omega is degenerate on H; no product exists");
            return Ok(Verdict(false));
        }
        Err(e) => return Err(e.into()),
    };
    let names = h_names(&p);
    let m = names.len();
    let label = |v: &Vector| g.format_vector(v);
    let induced = p.induced_algebra(names.clone());
    let bracket = |s: usize, t: usize| &p.basis_product(s, t) - &p.basis_product(t, s);

    match format {
        Format::Text => {
            println!("basis of H:");
            for (name, v) in names.iter().zip(p.h_basis()) {
                println!("  {name} = {}", label(v));
            }
            println!("product:");
            for s in 0..m {
                for t in 0..m {
                    println!(
                        "  {} * {} = {}",
                        names[s],
                        names[t],
                        label(&p.basis_product(s, t))
                    );
                }
            }
            println!("induced bracket:");
            for s in 0..m {
                for t in s + 1..m {
                    println!(
                        "  [{}, {}]' = {}",
                        names[s],
                        names[t],
                        label(&bracket(s, t))
                    );
                }
            }
            match &induced {
                Ok(_) => println!("jacobi: holds"),
                Err(e) => println!("jacobi: fails ({e})"),
            }
        }
        Format::Structured => {
            let products: Vec<_> = (0..m)
                .flat_map(|s| (0..m).map(move |t| (s, t)))
                .map(|(s, t)| json!({"x": s + 1, "y": t + 1, "result": p.basis_product(s, t).entries()}))
                .collect();
            let brackets: Vec<_> = (0..m)
                .flat_map(|s| (s + 1..m).map(move |t| (s, t)))
                .map(|(s, t)| json!({"x": s + 1, "y": t + 1, "result": bracket(s, t).entries()}))
                .collect();
            let out = json!({
                "h_basis": p.h_basis().iter().map(Vector::entries).collect::<Vec<_>>(),
                "names": names,
                "product": products,
                "bracket": brackets,
                "jacobi": induced.is_ok(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(Verdict(induced.is_ok()))
}

fn schouten(file: &str, format: Format) -> anyhow::Result<Verdict> {
    let doc = read_document(file)?;
    let Some(p) = doc.poisson() else {
        bail!("schouten needs a `poisson` block");
    };
    let g: &LieAlgebra = p.algebra();
    let square = p.schouten_square();
    let residual = p.residual();
    let member = residual.is_zero();
    match format {
        Format::Text => {
            println!(
                "[Lambda, Lambda] = {}",
                format_trivector(g.names(), &square)
            );
            let u: Vec<String> = p.u().basis().iter().map(|v| g.format_vector(v)).collect();
            println!("U = span{{{}}}", u.join(", "));
            println!(
                "residual modulo U^L2G = {}",
                format_trivector(g.names(), &residual)
            );
            println!(
                "verdict: {}",
                if member { "in U^L2G" } else { "not in U^L2G" }
            );
        }
        Format::Structured => {
            let out = json!({
                "schouten": square.coords().entries(),
                "residual": residual.coords().entries(),
                "member": member,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(Verdict(member))
}

fn catalog_action(action: CatalogAction) -> anyhow::Result<Verdict> {
    match action {
        CatalogAction::List => {
            for (id, description) in catalog::list() {
                println!("{id:<24} {description}");
            }
        }
        CatalogAction::Dump { id } => print!("{}", catalog::get(&id)?.document.to_json()),
    }
    Ok(Verdict(true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file, format } => check(&file, format),
        Command::Construct {
            what: Construct::LeftSymmetric { file, format },
        } => left_symmetric(&file, format),
        Command::Schouten { file, format } => schouten(&file, format),
        Command::Catalog { action } => catalog_action(action),
    };
    match result {
        Ok(Verdict(true)) => ExitCode::SUCCESS,
        Ok(Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! `fzb`: command-line front end.
//!
//! Exit status is 0 on success or when the queried predicate holds, 1 when it
//! does not (or a counterexample/violation was found), 2 on usage or input
//! errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fuzzy_balance::audit::{self, Property, SampleProfile, DEFAULT_GRID};
use fuzzy_balance::io::{read_graph, write_graph, write_record};
use fuzzy_balance::value::{approx, format_rational};
use fuzzy_balance::{
    balance_check, combine, find_isomorphism, generate, star_density, Error, Family,
    FuzzyGraph, GenParams, MembershipValue, Method, OpKind, Rational,
};

#[derive(Parser)]
#[command(name = "fzb", version, about = "Density and balance of fuzzy graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a graph file.
    Validate { file: PathBuf },
    /// Print D* exactly and as a decimal.
    Density { file: PathBuf },
    /// Decide whether the graph is balanced.
    Balance {
        file: PathBuf,
        #[arg(long, default_value = "flow")]
        method: Method,
        /// Print a strictly denser vertex set when unbalanced.
        #[arg(long)]
        witness: bool,
    },
    Complement {
        file: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Combine two graphs.
    Op {
        kind: OpKind,
        g1: PathBuf,
        g2: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Find an isomorphism between two graphs.
    Iso { g1: PathBuf, g2: PathBuf },
    /// Report completeness, strength, regularity and constant memberships.
    Classify { file: PathBuf },
    /// Generate a constant-membership family member.
    Gen {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: MembershipValue,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Audit properties on seeded random samples.
    Audit {
        #[arg(long, default_value = "all")]
        property: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-vertices", default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: u32,
        /// Directory for counterexample records.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a counterexample to a negative claim.
    Search {
        claim: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<FuzzyGraph, Error> {
    read_graph(path)
}

fn show(r: &Rational) -> String {
    format!("{} (≈ {:.6})", format_rational(r), approx(r))
}

fn optional(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "no".into(), format_rational)
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Validate { file } => {
            let g = load(&file)?;
            println!(
                "ok: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            Ok(true)
        }
        Command::Density { file } => {
            let d = star_density(&load(&file)?);
            println!("D* = {}", format_rational(&d.value));
            println!("   ≈ {:.6}", approx(&d.value));
            Ok(true)
        }
        Command::Balance {
            file,
            method,
            witness,
        } => {
            let verdict = balance_check(&load(&file)?, method)?;
            println!(
                "{} (method {})",
                if verdict.balanced { "balanced" } else { "not balanced" },
                verdict.method
            );
            println!("D*(G)         = {}", show(&verdict.graph_density.value));
            println!("max D*(H)     = {}", show(&verdict.max_subgraph_density.value));
            if witness {
                match &verdict.witness {
                    Some(w) => {
                        let ids: Vec<String> = w.members().iter().map(|v| v.to_string()).collect();
                        println!("witness: {{{}}}", ids.join(", "));
                    }
                    None => println!("witness: none"),
                }
            }
            Ok(verdict.balanced)
        }
        Command::Complement { file, out } => {
            write_graph(&load(&file)?.complement(), &out)?;
            Ok(true)
        }
        Command::Op { kind, g1, g2, out } => {
            write_graph(&combine(kind, &load(&g1)?, &load(&g2)?)?, &out)?;
            Ok(true)
        }
        Command::Iso { g1, g2 } => match find_isomorphism(&load(&g1)?, &load(&g2)?)? {
            Some(m) => {
                for (a, b) in &m.mapping {
                    println!("{a} -> {b}");
                }
                Ok(true)
            }
            None => {
                println!("not isomorphic");
                Ok(false)
            }
        },
        Command::Classify { file } => {
            let r = load(&file)?.classify();
            println!("complete:        {}", r.is_complete);
            println!("strong:          {}", r.is_strong);
            println!("regular:         {}", optional(&r.regular_degree));
            println!("totally regular: {}", optional(&r.totally_regular_degree));
            println!("constant sigma:  {}", optional(&r.constant_sigma));
            println!("constant mu:     {}", optional(&r.constant_mu));
            Ok(true)
        }
        Command::Gen { family, n, c, out } => {
            write_graph(&generate(family, &GenParams::new(n, c))?, &out)?;
            Ok(true)
        }
        Command::Audit {
            property,
            samples,
            seed,
            max_vertices,
            grid,
            out,
        } => {
            let properties: Vec<Property> = if property == "all" {
                Property::ALL.to_vec()
            } else {
                vec![property.parse()?]
            };
            let mut clean = true;
            for p in properties {
                let profile = SampleProfile::new(p.default_profile(), max_vertices, grid)?;
                let report = audit::check_property(p.id(), samples, seed, &profile)?;
                println!(
                    "{}: samples={} discarded={} violations={} seed={}",
                    report.property_id,
                    report.samples_run,
                    report.discarded,
                    report.violations,
                    report.seed
                );
                if let Some(record) = &report.first_violation {
                    clean = false;
                    if let Some(dir) = &out {
                        let path = write_record(record, dir)?;
                        println!("  first violation written to {}", path.display());
                    }
                }
            }
            Ok(clean)
        }
        Command::Search {
            claim,
            budget,
            seed,
            out,
        } => match audit::search_counterexample(&claim, budget, seed)? {
            Some(record) => {
                println!("{}: found (seed {})", record.claim_id, record.seed);
                for (k, v) in &record.measured {
                    println!("  {k} = {}", format_rational(v));
                }
                if let Some(dir) = &out {
                    println!("  written to {}", write_record(&record, dir)?.display());
                }
                Ok(false)
            }
            None => {
                println!("{claim}: not found within budget {budget}");
                Ok(true)
            }
        },
    }
}

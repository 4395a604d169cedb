use clap::{Parser, Subcommand, ValueEnum};
use drgcheck::feasibility::{analyze, Outcome, Status};
use drgcheck::io::{
    parse_array, read_batch_csv, read_batch_text, render_array_report_text, render_report,
    scan_batch, ReportFormat,
};
use drgcheck::oracle::{self, catalog, Lemma};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

/// Feasibility checker for distance-regular graph intersection arrays.
#[derive(Parser)]
#[command(name = "drgcheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one intersection array and print its proof trace.
    ///
    /// Exits 1 when the array is infeasible, 0 when the chain is
    /// inconclusive, 2 on malformed input.
    Check {
        /// The array, e.g. "{55,36,11;1,4,45}"
        array: String,
    },
    /// Analyze a batch of arrays from a file.
    Scan {
        /// Input file: one array per line, or CSV rows d,b...,c...
        #[arg(long)]
        input: PathBuf,
        /// How to read the input; auto picks CSV for .csv files
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
        /// Report format
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Measure the feasibility inequalities on a concrete graph.
    ///
    /// The graph must be distance-regular; every local graph is then
    /// checked against the bounds its intersection array implies.
    Oracle {
        /// Edge list file: one "u v" pair per line, 0-indexed
        #[arg(long, conflicts_with = "builtin")]
        graph: Option<PathBuf>,
        /// Built-in graph name; use "list" to see them all
        #[arg(long)]
        builtin: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { array } => check(&array),
        Command::Scan {
            input,
            input_format,
            format,
            output,
        } => scan(&input, input_format, format, output.as_deref()),
        Command::Oracle { graph, builtin } => oracle_command(graph.as_deref(), builtin.as_deref()),
    }
}

fn check(text: &str) -> ExitCode {
    let arr = match parse_array(text) {
        Ok(arr) => arr,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let report = analyze(&arr);
    print!("{}", render_array_report_text(&report));
    match report.verdict.status {
        Status::Infeasible => ExitCode::from(1),
        Status::Inconclusive => ExitCode::SUCCESS,
    }
}

fn scan(
    input: &std::path::Path,
    input_format: InputFormat,
    format: OutputFormat,
    output: Option<&std::path::Path>,
) -> ExitCode {
    let content = match fs::read_to_string(input) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", input.display());
            return ExitCode::from(2);
        }
    };
    let use_csv = match input_format {
        InputFormat::Csv => true,
        InputFormat::Text => false,
        InputFormat::Auto => input
            .extension()
            .map(|e| e.eq_ignore_ascii_case("csv"))
            .unwrap_or(false),
    };
    let records = if use_csv {
        read_batch_csv(&content)
    } else {
        read_batch_text(&content)
    };
    let entries = scan_batch(records);
    let rendered = render_report(
        &entries,
        match format {
            OutputFormat::Text => ReportFormat::Text,
            OutputFormat::Json => ReportFormat::Json,
            OutputFormat::Csv => ReportFormat::Csv,
        },
    );
    if let Some(path) = output {
        if let Err(err) = fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
        if !rendered.ends_with('\n') {
            println!();
        }
    }
    let any_infeasible = entries.iter().any(|e| {
        e.outcome
            .as_ref()
            .map(|r| r.verdict.status == Status::Infeasible)
            .unwrap_or(false)
    });
    if any_infeasible {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn oracle_command(graph: Option<&std::path::Path>, builtin: Option<&str>) -> ExitCode {
    let g = match (graph, builtin) {
        (Some(path), None) => {
            let content = match fs::read_to_string(path) {
                Ok(c) => c,
                Err(err) => {
                    eprintln!("error: cannot read {}: {err}", path.display());
                    return ExitCode::from(2);
                }
            };
            match oracle::parse_edge_list(&content) {
                Ok(g) => g,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            }
        }
        (None, Some("list")) => {
            for name in catalog::names() {
                println!("{name}");
            }
            return ExitCode::SUCCESS;
        }
        (None, Some(name)) => match catalog::by_name(name) {
            Some(entry) => entry.graph(),
            None => {
                eprintln!(
                    "error: unknown graph '{name}'; available: {}",
                    catalog::names().join(", ")
                );
                return ExitCode::from(2);
            }
        },
        _ => {
            eprintln!("error: pass exactly one of --graph or --builtin");
            return ExitCode::from(2);
        }
    };

    let report = match oracle::validate_lemmas(&g) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    println!(
        "graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    println!("intersection array: {}", report.array);
    for lemma in [Lemma::Terwilliger, Lemma::Brooks, Lemma::KoolenPark] {
        let (pass, violated, inapplicable) = report.counts(lemma);
        println!(
            "{}: {} pass, {} violated, {} inapplicable",
            lemma.label(),
            pass,
            violated,
            inapplicable
        );
    }
    for check in report.checks.iter().filter(|c| c.outcome == Outcome::Violated) {
        println!(
            "VIOLATED {} at vertex {}: {}",
            check.lemma.label(),
            check.vertex,
            check.detail
        );
    }
    if report.all_hold() {
        println!("oracle: all applicable checks hold");
        ExitCode::SUCCESS
    } else {
        println!("oracle: VIOLATIONS FOUND");
        ExitCode::from(1)
    }
}

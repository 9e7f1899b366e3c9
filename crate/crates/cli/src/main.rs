//! gcensus: invariants, lattices, and the verification suite from the
//! command line.
//!
//! Exit codes: 0 = success / all checks pass, 1 = violations found (the
//! report is still written), 2 = usage or input error.

use clap::{Args, Parser, Subcommand};
use group_census::constructors::group_from_spec;
use group_census::group::{all_subgroups, Caps};
use group_census::invariants::invariant_record;
use group_census::verifier::{
    self, errata_report, CheckStatus, CorpusConfig, VerdictReport, WitnessKind,
};
use group_census_cli::report_fmt;
use report_fmt::{format_kv_table, format_report, Format};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gcensus",
    version,
    about = "Exact finite-group invariants and a theorem verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format for the machine report.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the machine report here as well as summarizing to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all available).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct CapOpts {
    /// Largest group order any constructor may materialize.
    #[arg(long, default_value_t = 20_000)]
    order_cap: usize,
    /// Largest order for which subgroup lattices are enumerated.
    #[arg(long, default_value_t = 2_000)]
    lattice_cap: usize,
    /// Largest order for which isomorphism testing runs.
    #[arg(long, default_value_t = 2_000)]
    iso_cap: usize,
}

impl CapOpts {
    fn caps(&self) -> Caps {
        Caps {
            order: self.order_cap,
            lattice: self.lattice_cap,
            isomorphism: self.iso_cap,
            ..Caps::default()
        }
    }
}

#[derive(Args)]
struct CorpusOpts {
    /// Order bound for the enumerated corpus.
    #[arg(long, default_value_t = 660)]
    max_order: u64,
    /// Skip the squarefree-order enumeration.
    #[arg(long)]
    no_squarefree: bool,
    /// Generator files to ingest into the corpus (repeatable).
    #[arg(long)]
    ingest: Vec<PathBuf>,
    /// Extra group specs to include in the corpus (repeatable).
    #[arg(long)]
    spec: Vec<String>,
}

impl CorpusOpts {
    fn config(&self, caps: Caps) -> CorpusConfig {
        let mut cfg = CorpusConfig::with_max_order(self.max_order);
        cfg.include_squarefree = !self.no_squarefree;
        cfg.ingest_paths = self.ingest.clone();
        cfg.spec_list.extend(self.spec.iter().cloned());
        cfg.caps = caps;
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant record of one group spec.
    Invariants {
        /// Group spec, e.g. "A(4) x Z(5)" or "PSL(2,7)".
        spec: String,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Dump the full subgroup lattice of one group spec.
    Lattice {
        spec: String,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Run the verification suite over the corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Scan the corpus for conjecture counterexamples and near misses.
    Conjecture {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Build the sharpness witness families and verify their exact values.
    Witness {
        #[arg(long, default_value_t = 2)]
        t_min: u32,
        #[arg(long, default_value_t = 4)]
        t_max: u32,
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Compare the catalogued claims against computed values.
    Errata {
        #[command(flatten)]
        output: OutputOpts,
        #[command(flatten)]
        caps: CapOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(())
}

/// Summarize to stdout, write the machine report, and exit 1 on failures.
fn finish_reports(
    reports: Vec<VerdictReport>,
    output: &OutputOpts,
    extra_summary: Option<String>,
) -> Result<ExitCode, String> {
    let text = format_report(&reports, output.format);
    write_out(&text, &output.out)?;
    if output.format == Format::Table || output.out.is_none() {
        print!("{text}");
    } else {
        // the machine report went to --out; keep stdout human-readable
        print!("{}", format_report(&reports, Format::Table));
    }
    if let Some(extra) = extra_summary {
        println!("{extra}");
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == CheckStatus::Fail)
        .map(|r| r.check_id.as_str())
        .collect();
    if failed.is_empty() {
        println!("all {} checks clear", reports.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAILED checks: {}", failed.join(", "));
        Ok(ExitCode::from(1))
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Invariants { spec, output, caps } => {
            let caps = caps.caps();
            let group = group_from_spec(&spec, &caps).map_err(|e| e.to_string())?;
            let record =
                verifier::with_worker_pool(output.jobs, || invariant_record(&group, &caps, true))
                    .map_err(|e| e.to_string())?;
            let rows = record.rows();
            let text = match output.format {
                Format::Table => format_kv_table(&rows),
                Format::Csv => {
                    let header: Vec<&str> = rows.iter().map(|(k, _)| *k).collect();
                    let values: Vec<String> = rows.iter().map(|(_, v)| v.clone()).collect();
                    format!("{}\n{}\n", header.join(","), values.join(","))
                }
                Format::Json => serde_json::to_string_pretty(&record).expect("record serializes"),
            };
            write_out(&text, &output.out)?;
            println!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { spec, output, caps } => {
            let caps = caps.caps();
            let group = group_from_spec(&spec, &caps).map_err(|e| e.to_string())?;
            let lattice = all_subgroups(&group, &caps).map_err(|e| e.to_string())?;
            let text = render_lattice(&lattice, output.format);
            write_out(&text, &output.out)?;
            println!(
                "{} subgroups of {} (order {})",
                lattice.len(),
                group.name(),
                group.order()
            );
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            corpus,
            output,
            caps,
        } => {
            let cfg = corpus.config(caps.caps());
            let (corpus, reports) =
                verifier::run_verification(&cfg, output.jobs).map_err(|e| e.to_string())?;
            let summary = build_issue_summary(&corpus.build_issues, corpus.len());
            finish_reports(reports, &output, Some(summary))
        }
        Command::Conjecture {
            corpus,
            output,
            caps,
        } => {
            let mut cfg = corpus.config(caps.caps());
            // The scan always covers PSL(2,q) for q up to 13.
            for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
                let spec = format!("PSL(2,{q})");
                if !cfg.spec_list.contains(&spec) {
                    cfg.spec_list.push(spec);
                }
            }
            let (corpus, report) =
                verifier::run_conjecture_scan(&cfg, output.jobs).map_err(|e| e.to_string())?;
            let summary = build_issue_summary(&corpus.build_issues, corpus.len());
            finish_reports(vec![report], &output, Some(summary))
        }
        Command::Witness {
            t_min,
            t_max,
            output,
            caps,
        } => {
            let caps = caps.caps();
            let reports = verifier::with_worker_pool(output.jobs, || {
                WitnessKind::ALL
                    .iter()
                    .map(|&kind| verifier::check_sharpness(kind, t_min, t_max, &caps))
                    .collect::<Vec<_>>()
            });
            finish_reports(reports, &output, None)
        }
        Command::Errata { output, caps } => {
            let report = errata_report(&caps.caps());
            finish_reports(vec![report], &output, None)
        }
    }
}

fn render_lattice(lattice: &group_census::group::SubgroupLattice, format: Format) -> String {
    match format {
        Format::Json => {
            let objs: Vec<serde_json::Value> = lattice
                .iter()
                .enumerate()
                .map(|(i, sub)| {
                    serde_json::json!({
                        "index": i,
                        "order": sub.order(),
                        "cyclic": lattice.is_cyclic(i),
                        "normal": lattice.is_normal(i),
                        "maximal": lattice.is_maximal(i),
                        "members": sub.member_indices(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&objs).expect("lattice rows serialize")
        }
        Format::Csv => {
            let mut out = String::from("index,order,cyclic,normal,maximal,members\n");
            for (i, sub) in lattice.iter().enumerate() {
                let members = sub
                    .member_indices()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    i,
                    sub.order(),
                    lattice.is_cyclic(i),
                    lattice.is_normal(i),
                    lattice.is_maximal(i),
                    members
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "{:>5}  {:>6}  {:>6}  {:>6}  {:>7}  members\n",
                "idx", "order", "cyclic", "normal", "maximal"
            );
            for (i, sub) in lattice.iter().enumerate() {
                let members = sub
                    .member_indices()
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&format!(
                    "{:>5}  {:>6}  {:>6}  {:>6}  {:>7}  {}\n",
                    i,
                    sub.order(),
                    lattice.is_cyclic(i),
                    lattice.is_normal(i),
                    lattice.is_maximal(i),
                    members
                ));
            }
            out
        }
    }
}

fn build_issue_summary(issues: &[String], corpus_len: usize) -> String {
    if issues.is_empty() {
        format!("corpus: {corpus_len} groups")
    } else {
        format!(
            "corpus: {corpus_len} groups; {} build issue(s): {}",
            issues.len(),
            issues.join("; ")
        )
    }
}

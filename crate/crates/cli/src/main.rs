//! `matroid` — build family members, run theorem checks, inspect matroids.
//!
//! Exit codes: 0 all checks passed, 1 a violation or counterexample was
//! found, 2 input or usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use matroid_core::catalog::{self, Provenance};
use matroid_core::connectivity;
use matroid_core::families;
use matroid_core::format;
use matroid_core::iso;
use matroid_core::verifier::{self, CheckKind, LemmaId};
use matroid_core::Matroid;

#[derive(Parser)]
#[command(
    name = "matroid",
    version,
    about = "Matroid connectivity toolkit and theorem verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit K~3,n as GRAPH v1, or its bond matroid as MATROID v1 with --dual.
    Family {
        /// Size of the large vertex part (n >= 3).
        #[arg(long)]
        n: usize,
        /// Emit the bond matroid of the graph instead of the graph.
        #[arg(long)]
        dual: bool,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream every catalog entry with `# name:` headers.
    Catalog {
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify theorem or lemma statements; exit 0 iff every verdict passed.
    Check {
        /// Which statement family to check.
        mode: CheckMode,
        /// A MATROID/GRAPH v1 file to check (or use --catalog).
        target: Option<PathBuf>,
        /// Run over the whole built-in catalog instead of a file.
        #[arg(long, conflicts_with = "target")]
        catalog: bool,
        /// Lemma id for `check lemmas` (e.g. 2.3); all suites when omitted.
        #[arg(long)]
        which: Option<String>,
        /// Seed for sampled suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report format.
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Deterministic structural listings from a matroid or graph file.
    #[command(group(ArgGroup::new("selector")
        .required(true)
        .args(["hyperplanes", "separations", "segments", "fans", "vertical"])))]
    Inspect {
        path: PathBuf,
        /// List hyperplanes, one per line.
        #[arg(long)]
        hyperplanes: bool,
        /// List k-separating sides (both sides >= 2 elements) for this k.
        #[arg(long, value_name = "K")]
        separations: Option<usize>,
        /// List maximal segments.
        #[arg(long)]
        segments: bool,
        /// List maximal fans.
        #[arg(long)]
        fans: bool,
        /// List vertical 3-partitions.
        #[arg(long)]
        vertical: bool,
    },
    /// Decide whether two files describe isomorphic matroids.
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Main,
    Vertical,
    Lemmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    /// REPORT v1: header line plus indented certificate lines.
    Text,
    /// One JSON object per report.
    Records,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_out(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn load_matroid(path: &Path) -> Result<Matroid, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    format::parse_any(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn subject_of(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Family { n, dual, out } => {
            // the emission contract starts at n = 3; the library also
            // recognizes the n = 2 boundary member M*(K5-e)
            if n < 3 {
                return Err("family needs n >= 3".to_string());
            }
            let content = if dual {
                let m = families::family_member(n).map_err(|e| e.to_string())?;
                format::write_matroid(&m)
            } else {
                let g = families::build_ktilde_graph(n).map_err(|e| e.to_string())?;
                format::write_graph(&g)
            };
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { out } => {
            let mut content = String::new();
            for entry in catalog::full_catalog() {
                content.push_str(&format!("# name: {}\n", entry.name));
                let body = match (&entry.provenance, entry.matroid.graph_backend()) {
                    (Provenance::Graphic { .. }, Some((g, false))) => format::write_graph(g),
                    _ => format::write_matroid(&entry.matroid),
                };
                content.push_str(&body);
            }
            write_out(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            mode,
            target,
            catalog: use_catalog,
            which,
            seed,
            format: fmt,
        } => {
            let kind = match mode {
                CheckMode::Main => CheckKind::Main,
                CheckMode::Vertical => CheckKind::Vertical,
                CheckMode::Lemmas => CheckKind::Lemmas(match &which {
                    Some(id) => Some(LemmaId::parse(id).map_err(|e| e.to_string())?),
                    None => None,
                }),
            };
            if !matches!(mode, CheckMode::Lemmas) && which.is_some() {
                return Err("--which only applies to `check lemmas`".to_string());
            }
            let reports = if use_catalog {
                verifier::catalog_reports(&catalog::full_catalog(), kind, seed)
            } else {
                let path = target.ok_or("give a file target or --catalog")?;
                let m = load_matroid(&path)?;
                let subject = subject_of(&path);
                match kind {
                    // a file target must meet the checks' preconditions
                    CheckKind::Main => {
                        vec![verifier::check_main_theorem(&m, &subject)
                            .map_err(|e| e.to_string())?]
                    }
                    CheckKind::Vertical => {
                        vec![verifier::check_vertical_theorem(&m, &subject)
                            .map_err(|e| e.to_string())?]
                    }
                    CheckKind::Lemmas(_) => verifier::reports_for(&m, &subject, kind, seed),
                }
            };
            let mut all_passed = true;
            let mut out = String::new();
            for r in &reports {
                all_passed &= r.passed;
                match fmt {
                    ReportFormat::Text => out.push_str(&r.to_text()),
                    ReportFormat::Records => {
                        out.push_str(&r.to_record());
                        out.push('\n');
                    }
                }
            }
            write_out(None, &out)?;
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Inspect {
            path,
            hyperplanes,
            separations,
            segments,
            fans,
            vertical,
        } => {
            let m = load_matroid(&path)?;
            let mut out = String::new();
            let ids = |s: matroid_core::ElementSet| -> String {
                s.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let csv = |s: matroid_core::ElementSet| -> String {
                s.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            if hyperplanes {
                for h in m.hyperplanes() {
                    out.push_str(&ids(h));
                    out.push('\n');
                }
            } else if let Some(k) = separations {
                if !(2..=4).contains(&k) {
                    return Err("separations k must be 2, 3 or 4".to_string());
                }
                for rec in connectivity::enumerate_separations(&m, k) {
                    let tag = if rec.exact { "exact" } else { "loose" };
                    out.push_str(&format!("{} {} {}\n", rec.order, tag, ids(rec.side)));
                }
            } else if segments || fans || vertical {
                if !connectivity::is_k_connected(&m, 3) {
                    return Err("matroid is not 3-connected".to_string());
                }
                if segments {
                    for s in connectivity::maximal_segments(&m, false) {
                        out.push_str(&ids(s));
                        out.push('\n');
                    }
                } else if fans {
                    for f in connectivity::fans(&m) {
                        let seq: Vec<String> = f.iter().map(|e| e.to_string()).collect();
                        out.push_str(&seq.join(" "));
                        out.push('\n');
                    }
                } else {
                    for p in connectivity::vertical_3_partitions(&m).map_err(|e| e.to_string())? {
                        out.push_str(&format!(
                            "x={} X1={} X2={} r1={} r2={}\n",
                            p.x,
                            csv(p.x1),
                            csv(p.x2),
                            p.rank_x1,
                            p.rank_x2
                        ));
                    }
                }
            }
            write_out(None, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { a, b } => {
            let ma = load_matroid(&a)?;
            let mb = load_matroid(&b)?;
            match iso::is_isomorphic(&ma, &mb) {
                Some(bijection) => {
                    let mut out = String::from("isomorphic\n");
                    for (e, f) in bijection.iter().enumerate() {
                        out.push_str(&format!("{e} -> {f}\n"));
                    }
                    write_out(None, &out)?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    write_out(None, "not isomorphic\n")?;
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

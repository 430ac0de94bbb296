//! `acyclic`: generate the supported graph families, evaluate coclique and
//! forest bounds, run the exact solvers and certifications, drive the
//! two-vertex-addition scan, and check the reference-value suite.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad input,
//! 3 unsupported operation, 4 budget exhaustion.

mod report;

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use acyclic_core::constructions::{default_scan_range, full_scan_range, scan_one};
use acyclic_core::families::{
    generate, gq_noncollinearity_graph, oa_block_complement_graph, FamilyGraph, FamilySpec,
    FieldSpec, IncidenceStructure, OrthogonalArray,
};
use acyclic_core::io::{self, GraphFormat};
use acyclic_core::search::{verify_certificate, Budget, TauCertificate};
use acyclic_core::verification::{run_all, Scope};

const EXIT_MISMATCH: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;
const EXIT_UNSUPPORTED: i32 = 3;
const EXIT_BUDGET: i32 = 4;

#[derive(Parser)]
#[command(name = "acyclic", version, about = "Maximum induced forests: bounds, exact search, certification")]
struct Cli {
    /// Worker threads for parallel sections (ACYCLIC_THREADS as fallback).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized internals. Current pipelines are deterministic;
    /// the flag is accepted for stability of scripts.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family graph and write it to DIMACS or JSON.
    Gen {
        /// kneser | q-kneser | paley | paley-complement | hamming |
        /// oa-complement | gq-noncollinearity (omit when using --oa/--gq)
        name: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a graph: bounds, exact alpha/tau, certification.
    Analyze {
        #[command(flatten)]
        family: FamilyArgs,
        /// Read the graph from a DIMACS or JSON file instead.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Solve the maximum coclique exactly.
        #[arg(long)]
        alpha: bool,
        /// Solve the maximum induced forest exactly.
        #[arg(long)]
        tau: bool,
        /// Evaluate the ratio, spectral-forest, edge-forest and
        /// non-canonical bounds (regular graphs only).
        #[arg(long)]
        bounds: bool,
        /// Produce a search-free certificate (needs family metadata).
        #[arg(long)]
        certify: bool,
        /// Classify the maximum forests by exact search and enumeration.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Node budget per solve.
        #[arg(long, default_value_t = 100_000_000)]
        budget_nodes: u64,
        /// Time budget per solve, in seconds.
        #[arg(long, default_value_t = 600)]
        budget_secs: u64,
    },
    /// Scan complement Paley graphs for forests made by adding two vertices
    /// to a maximum coclique.
    ScanPaley {
        /// Largest order to scan.
        #[arg(long)]
        qmax: Option<u32>,
        /// Use the extended range up to 67 (hours, not minutes).
        #[arg(long)]
        full: bool,
        /// Directory for the per-order JSON reports.
        #[arg(long, default_value = ".")]
        outdir: PathBuf,
        /// Time budget per order, in seconds.
        #[arg(long, default_value_t = 600)]
        budget_secs: u64,
    },
    /// Run the reference-value suite and print one line per check.
    VerifyPaper {
        #[arg(value_enum)]
        scope: ScopeArg,
    },
    /// Re-check a stored certificate against a regenerated graph.
    VerifyCertificate { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Fast,
    Full,
}

/// Family selection shared by gen and analyze.
#[derive(Args, Clone)]
struct FamilyArgs {
    /// kneser | q-kneser | paley | paley-complement | hamming |
    /// oa-complement | gq-noncollinearity
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Field characteristic.
    #[arg(long)]
    p: Option<u32>,
    /// Field extension degree.
    #[arg(long)]
    d: Option<u32>,
    /// Field order as a prime power (q-Kneser base field, W(q)).
    #[arg(long)]
    q: Option<u32>,
    /// Paley field order (e.g. 9 for the order-9 graph).
    #[arg(long)]
    q2: Option<u32>,
    /// Modulus polynomial, little-endian coefficients, e.g. 1,0,1 for x^2+1.
    #[arg(long, value_name = "C0,C1,..")]
    modulus: Option<String>,
    /// JSON file holding a user-supplied orthogonal array
    /// {"m":..,"n":..,"cells":[[..]]}.
    #[arg(long)]
    oa: Option<PathBuf>,
    /// JSON file holding a user-supplied point-line geometry
    /// {"points":..,"lines":[[..]],"s":..,"t":..}.
    #[arg(long)]
    gq: Option<PathBuf>,
}

impl FamilyArgs {
    fn field_spec(&self, square: bool) -> Result<FieldSpec> {
        let modulus = self
            .modulus
            .as_ref()
            .map(|s| {
                s.split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()
            .context("modulus coefficients must be integers")?;
        let mut spec = match (self.p, self.d, if square { self.q2 } else { self.q }) {
            (Some(p), d, None) => FieldSpec::new(p, d.unwrap_or(1)),
            (None, None, Some(q)) => {
                FieldSpec::from_order(q).map_err(|e| anyhow!(e.to_string()))?
            }
            (None, None, None) => bail!("specify the field with --p/--d or an order flag"),
            _ => bail!("give either --p/--d or a single order flag, not both"),
        };
        if let Some(m) = modulus {
            spec.modulus = Some(m);
        }
        Ok(spec)
    }

    fn build(&self) -> Result<Option<FamilyGraph>> {
        if let Some(path) = &self.oa {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let oa: OrthogonalArray = serde_json::from_str(&text).context("parsing array JSON")?;
            let fg = oa_block_complement_graph(&oa, None).map_err(|e| anyhow!(e.to_string()))?;
            return Ok(Some(fg));
        }
        if let Some(path) = &self.gq {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let gq: IncidenceStructure =
                serde_json::from_str(&text).context("parsing geometry JSON")?;
            let fg = gq_noncollinearity_graph(&gq, None).map_err(|e| anyhow!(e.to_string()))?;
            return Ok(Some(fg));
        }
        let Some(name) = &self.family else {
            return Ok(None);
        };
        let need = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| anyhow!("family {name} requires --{flag}"))
        };
        let spec = match name.as_str() {
            "kneser" => FamilySpec::Kneser {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
            },
            "q-kneser" | "qkneser" => FamilySpec::QKneser {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                field: self.field_spec(false)?,
            },
            "paley" => FamilySpec::Paley {
                field: self.field_spec(true)?,
                complement: false,
            },
            "paley-complement" => FamilySpec::Paley {
                field: self.field_spec(true)?,
                complement: true,
            },
            "hamming" => FamilySpec::Hamming {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            },
            "oa-complement" => FamilySpec::OaComplement {
                m: need(self.m, "m")?,
                n: need(self.n, "n")?,
            },
            "gq-noncollinearity" => FamilySpec::GqNoncollinearity {
                field: self.field_spec(false)?,
            },
            other => bail!("unknown family {other}"),
        };
        let fg = generate(&spec).map_err(|e| anyhow!(e.to_string()))?;
        Ok(Some(fg))
    }
}

fn init_threads(threads: Option<usize>) {
    let n = threads.or_else(|| {
        std::env::var("ACYCLIC_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(n) = n {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_gen(family: &FamilyArgs, format: FormatArg, out: Option<&PathBuf>) -> Result<i32> {
    let fg = family
        .build()?
        .ok_or_else(|| anyhow!("gen requires --family or --oa/--gq"))?;
    let text = io::write_graph(
        &fg.graph,
        match format {
            FormatArg::Dimacs => GraphFormat::Dimacs,
            FormatArg::Json => GraphFormat::Json,
        },
    );
    write_output(out, &text)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    family: &FamilyArgs,
    input: Option<&PathBuf>,
    alpha: bool,
    tau: bool,
    bounds: bool,
    certify: bool,
    classify: bool,
    out: Option<&PathBuf>,
    budget: Budget,
) -> Result<i32> {
    let started = std::time::Instant::now();
    let (fg, identity) = match (family.build()?, input) {
        (Some(fg), None) => {
            let identity = match &fg.spec {
                Some(spec) => serde_json::json!({ "family": spec }),
                None => serde_json::json!({ "family": "user-supplied structure" }),
            };
            (fg, identity)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let graph = io::parse_graph_auto(&text).map_err(|e| anyhow!(e.to_string()))?;
            let identity = serde_json::json!({
                "input": path.display().to_string(),
                "sha256": report::sha256_hex(text.as_bytes()),
            });
            let fg = FamilyGraph {
                graph,
                spec: None,
                known_spectrum: None,
                known_lambda_min: None,
                coclique_witness: None,
                notes: Vec::new(),
            };
            (fg, identity)
        }
        (Some(_), Some(_)) => bail!("give either a family or --input, not both"),
        (None, None) => bail!("analyze requires --family or --input"),
    };

    if bounds && fg.graph.regularity().is_none() {
        eprintln!("bounds require a regular graph");
        return Ok(EXIT_UNSUPPORTED);
    }
    if classify && (fg.graph.regularity().is_none() || fg.graph.edge_count() == 0) {
        eprintln!("classification requires a regular graph with at least one edge");
        return Ok(EXIT_UNSUPPORTED);
    }

    let report = report::analysis_report(
        &fg,
        identity,
        report::AnalysisRequest {
            alpha,
            tau,
            bounds,
            certify,
            classify,
            budget,
        },
        started,
    )?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    write_output(out, &text)?;
    Ok(0)
}

fn cmd_scan(qmax: Option<u32>, full: bool, outdir: &PathBuf, budget_secs: u64) -> Result<i32> {
    let range = if full {
        full_scan_range()
    } else {
        default_scan_range()
    };
    let qmax = qmax.unwrap_or_else(|| *range.last().unwrap());
    let budget = Budget {
        max_time: Duration::from_secs(budget_secs),
        ..Budget::default()
    };
    std::fs::create_dir_all(outdir)
        .with_context(|| format!("creating {}", outdir.display()))?;
    let mut incomplete = false;
    for q in range.into_iter().filter(|&q| q >= 3 && q <= qmax) {
        let report = scan_one(q, &budget).map_err(|e| anyhow!(e.to_string()))?;
        let path = outdir.join(format!("scan-q{q}.json"));
        let mut text = serde_json::to_string_pretty(&report)?;
        text.push('\n');
        std::fs::write(&path, text)
            .with_context(|| format!("writing {}", path.display()))?;
        println!(
            "q={:<3} sets={:<5} pairs={:<12} hits={:<6} {}",
            report.q,
            report.sets_examined,
            report.pairs_examined,
            report.hits.len(),
            if report.complete { "complete" } else { "INCOMPLETE" }
        );
        incomplete |= !report.complete;
    }
    Ok(if incomplete { EXIT_BUDGET } else { 0 })
}

fn cmd_verify_paper(scope: ScopeArg) -> Result<i32> {
    let scope = match scope {
        ScopeArg::Fast => Scope::Fast,
        ScopeArg::Full => Scope::Full,
    };
    let budget = Budget::default();
    let reports = run_all(scope, &budget);
    let mut all_pass = true;
    for r in &reports {
        for line in &r.lines {
            println!(
                "[{}] {} {}: expected {}, computed {}",
                r.id,
                if line.pass { "PASS" } else { "FAIL" },
                line.label,
                line.expected,
                line.computed
            );
        }
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("[{}] {} ({:.1}s) -- {}", r.id, status, r.seconds, r.title);
        all_pass &= r.passed();
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("summary: {passed}/{} criteria passed", reports.len());
    Ok(if all_pass { 0 } else { EXIT_MISMATCH })
}

fn cmd_verify_certificate(path: &PathBuf) -> Result<i32> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let cert: TauCertificate = serde_json::from_str(&text).context("parsing certificate")?;
    let failures = verify_certificate(&cert).map_err(|e| anyhow!(e.to_string()))?;
    if failures.is_empty() {
        println!("certificate verifies");
        Ok(0)
    } else {
        for f in &failures {
            println!("FAIL {f}");
        }
        Ok(EXIT_MISMATCH)
    }
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    init_threads(cli.threads);
    match &cli.cmd {
        Cmd::Gen {
            name,
            family,
            format,
            out,
        } => {
            let mut family = family.clone();
            if family.family.is_none() {
                family.family = name.clone();
            }
            cmd_gen(&family, *format, out.as_ref())
        }
        Cmd::Analyze {
            family,
            input,
            alpha,
            tau,
            bounds,
            certify,
            classify,
            out,
            budget_nodes,
            budget_secs,
        } => cmd_analyze(
            family,
            input.as_ref(),
            *alpha,
            *tau,
            *bounds,
            *certify,
            *classify,
            out.as_ref(),
            Budget {
                max_nodes: *budget_nodes,
                max_time: Duration::from_secs(*budget_secs),
            },
        ),
        Cmd::ScanPaley {
            qmax,
            full,
            outdir,
            budget_secs,
        } => cmd_scan(*qmax, *full, outdir, *budget_secs),
        Cmd::VerifyPaper { scope } => cmd_verify_paper(*scope),
        Cmd::VerifyCertificate { path } => cmd_verify_certificate(path),
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(EXIT_BAD_INPUT);
        }
    }
}

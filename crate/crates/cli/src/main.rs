use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use corona_spectra::acceptance::{run_battery, SPECTRUM_TOL};
use corona_spectra::generators;
use corona_spectra::io::{parse_edge_list, write_edge_list};
use corona_spectra::linalg::round_sig12;
use corona_spectra::predictor::predict;
use corona_spectra::{
    build_corona, check_cospectral, laplacian_spectrum, verify_theorem, AttachmentSpec, CoronaMode,
    Graph, PredictedSpectrum, RegularGraphSpec, SpectrumMultiset,
};

/// Normalized Laplacian spectra of subdivision-vertex and subdivision-edge
/// coronas.
///
/// Graph arguments are an edge-list path or a generator spec such as
/// `gen:cycle:6`, `gen:hypercube:3`, `gen:petersen` or `gen:shrikhande`.
#[derive(Parser)]
#[command(name = "corona-spectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a corona and write it as an edge list.
    Build {
        #[command(flatten)]
        corona: CoronaArgs,
        /// Output path; the edge list goes to stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the block layout as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Eigensolve the normalized Laplacian of a graph.
    Spectrum {
        #[arg(short = 'g', long = "graph")]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form spectrum of a corona of a regular graph.
    Predict {
        #[command(flatten)]
        corona: CoronaArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compare the eigensolver spectrum of a corona with the closed form.
    Verify {
        #[command(flatten)]
        corona: CoronaArgs,
        #[arg(long, default_value_t = SPECTRUM_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Test two graphs for normalized-Laplacian cospectrality.
    Cospectral {
        #[arg(short = 'a')]
        a: String,
        #[arg(short = 'b')]
        b: String,
        #[arg(long, default_value_t = SPECTRUM_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance battery.
    Battery {
        #[arg(long, default_value_t = SPECTRUM_TOL)]
        tol: f64,
        /// Print the verification reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CoronaArgs {
    #[arg(long, value_parser = parse_mode)]
    mode: CoronaMode,
    /// Base graph.
    #[arg(short = 'g', long = "graph")]
    graph: String,
    /// Attached graph, replicated at every attachment point.
    #[arg(short = 'H', long = "attach", required_unless_present = "per_attach")]
    attach: Option<String>,
    /// Directory holding H_1.el .. H_k.el, one per attachment point.
    #[arg(long, conflicts_with = "attach")]
    per_attach: Option<PathBuf>,
}

fn parse_mode(s: &str) -> std::result::Result<CoronaMode, String> {
    s.parse::<CoronaMode>()
}

fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| anyhow!("cannot read {}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_graph(arg: &str) -> Result<Graph> {
    if arg.starts_with("gen:") {
        Ok(generators::from_spec(arg)?)
    } else {
        read_graph_file(Path::new(arg))
    }
}

impl CoronaArgs {
    fn load(&self) -> Result<(Graph, Vec<Graph>)> {
        let g = load_graph(&self.graph)?;
        let k = self.mode.attach_points(g.order(), g.size());
        let hs = match (&self.attach, &self.per_attach) {
            (_, Some(dir)) => (1..=k)
                .map(|i| read_graph_file(&dir.join(format!("H_{i}.el"))))
                .collect::<Result<Vec<_>>>()?,
            (Some(h), None) => vec![load_graph(h)?; k],
            (None, None) => unreachable!("clap requires -H or --per-attach"),
        };
        Ok((g, hs))
    }
}

fn fmt12(x: f64) -> String {
    format!("{:?}", round_sig12(x))
}

fn print_values(values: &[f64]) {
    for (i, x) in values.iter().enumerate() {
        println!("{i:>6}  {:>20}", fmt12(*x));
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn print_prediction(p: &PredictedSpectrum) {
    let parts = &p.parts;
    println!("shifted_delta ({} values)", parts.shifted_delta.len());
    print_values(&parts.shifted_delta);
    println!(
        "repeated: {} x{}",
        parts.repeated.values.iter().map(|x| fmt12(*x)).collect::<Vec<_>>().join(", "),
        parts.repeated.multiplicity
    );
    println!("cubic roots ({} triples)", parts.cubic.len());
    for (i, roots) in parts.cubic.iter().enumerate() {
        println!(
            "{i:>6}  {:>20}  {:>20}  {:>20}",
            fmt12(roots[0]),
            fmt12(roots[1]),
            fmt12(roots[2])
        );
    }
    println!("flattened (order {})", p.flattened.len());
    print_values(p.flattened.values());
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { corona, output, json } => {
            let (g, hs) = corona.load()?;
            let layout = build_corona(corona.mode, &g, &hs)?;
            let text = write_edge_list(&layout.graph);
            match &output {
                Some(path) => {
                    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
                }
                None if !json => print!("{text}"),
                None => {}
            }
            if json {
                print_json(&layout)?;
            } else if let Some(path) = &output {
                eprintln!(
                    "wrote {} ({} vertices, {} edges)",
                    path.display(),
                    layout.graph.order(),
                    layout.graph.size()
                );
            }
        }
        Command::Spectrum { graph, json } => {
            let s: SpectrumMultiset = laplacian_spectrum(&load_graph(&graph)?)?;
            if json {
                print_json(&s)?;
            } else {
                println!("order {}", s.len());
                print_values(s.values());
            }
        }
        Command::Predict { corona, json } => {
            let (g, hs) = corona.load()?;
            let base = RegularGraphSpec::from_graph(&g)?;
            let attach = AttachmentSpec::from_graphs(&hs)?;
            let p = predict(corona.mode, &base, &attach)?;
            if json {
                print_json(&p)?;
            } else {
                print_prediction(&p);
            }
        }
        Command::Verify { corona, tol, json } => {
            let (g, hs) = corona.load()?;
            let report = verify_theorem(corona.mode, &g, &hs, tol)?;
            if json {
                print_json(&report)?;
            } else {
                println!("mode          {}", report.mode);
                println!("instance      {}", report.instance);
                println!("order         {}", report.order);
                println!("tol           {:e}", report.tol);
                match report.max_abs_err {
                    Some(e) => println!("max_abs_err   {e:.3e}"),
                    None => println!("max_abs_err   -"),
                }
                println!("matched       {}", report.matched);
                if let Some(part) = &report.first_mismatch {
                    println!("first_mismatch {part}");
                }
                if let Some(why) = &report.predictor_refusal {
                    println!("refused       {why}");
                }
            }
            if !report.matched {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Cospectral { a, b, tol, json } => {
            let cert = check_cospectral(&load_graph(&a)?, &load_graph(&b)?, tol)?;
            if json {
                print_json(&cert)?;
            } else {
                let opt = |o: Option<bool>| o.map_or("-".to_string(), |b| b.to_string());
                let deg = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
                println!("cospectral            {}", cert.cospectral);
                match cert.max_abs_diff {
                    Some(d) => println!("max_abs_diff          {d:.3e}"),
                    None => println!("max_abs_diff          - (orders {} and {})", cert.spectra[0].len(), cert.spectra[1].len()),
                }
                println!("regular_degrees       {} {}", deg(cert.regular_degrees[0]), deg(cert.regular_degrees[1]));
                println!("adjacency_cospectral  {}", opt(cert.adjacency_cospectral));
                println!("isomorphic_hint       {}", opt(cert.isomorphic_hint));
            }
            if !cert.cospectral {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Battery { tol, json } => {
            let result = run_battery(tol);
            if json {
                print_json(&result.reports)?;
                for c in &result.criteria {
                    eprintln!("{c}");
                }
            } else {
                for c in &result.criteria {
                    println!("{c}");
                }
                let passed = result.criteria.iter().filter(|c| c.passed).count();
                println!("{passed}/{} criteria passed", result.criteria.len());
            }
            if !result.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

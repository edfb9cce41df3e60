use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use surflink::certify::{certify, double_cover_diagram, AmbientAssertion};
use surflink::diagram::{find_nugatory, reduce};
use surflink::format::{parse_diagram, parse_map, serialize_diagram};
use surflink::map::surface_info;
use surflink::report::{certificate_json, certificate_text, REPORT_VERSION};
use surflink::weave::{density_stats, weave_from_map, weave_from_three_regular, TilingQuotient};
use surflink::Error;

#[derive(Parser)]
#[command(name = "surflink", version, about = "Alternating link diagrams on closed surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Process every path listed (one per line) in this file.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Surface, alternation and reduction summary.
    Check { file: Option<PathBuf> },
    /// Hyperbolicity certificate.
    Certify {
        file: Option<PathBuf>,
        /// Assertions about the ambient 3-manifold, one per line.
        #[arg(long)]
        ambient: Option<PathBuf>,
    },
    /// Remove nugatory crossings.
    Reduce {
        file: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Lift to the orientable double cover.
    Cover {
        file: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Alternating diagram from a 4-regular (or 3-regular) quotient map.
    Weave {
        file: Option<PathBuf>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Crossing density statistics.
    Stats { file: Option<PathBuf> },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: String, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Internal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_one(cli: &Cli, path: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let name = path.display().to_string();
    match &cli.command {
        Command::Check { .. } => {
            let (d, declared) = parse_diagram(&read(path)?)?;
            let s = surface_info(d.map());
            let alt = d.is_alternating();
            let full = d.is_fully_alternating(declared)?;
            let nugatory = find_nugatory(&d).len();
            if cli.json {
                let v = json!({
                    "version": REPORT_VERSION, "input": name,
                    "surface": { "chi": s.euler_char, "genus": s.genus, "orientable": s.orientable },
                    "crossings": d.crossing_count(), "components": d.components().len(),
                    "connected": d.is_connected(), "alternating": alt.alternating,
                    "cellular": full.cellular, "fully_alternating": full.fully_alternating,
                    "nugatory_crossings": nugatory,
                });
                emit(format!("{v}\n"), None)
            } else {
                emit(
                    format!(
                        "{name}\n  surface: {} (chi = {})\n  crossings: {}, components: {}\n  connected: {}, alternating: {}, fully alternating: {}, nugatory crossings: {nugatory}\n",
                        s.surface_type(), s.euler_char, d.crossing_count(), d.components().len(),
                        d.is_connected(), alt.alternating, full.fully_alternating
                    ),
                    None,
                )
            }
        }
        Command::Certify { ambient, .. } => {
            let (d, declared) = parse_diagram(&read(path)?)?;
            let ambient = ambient.as_deref().map(read).transpose()?.map(|t| AmbientAssertion::parse(&t));
            let cert = certify(&d, declared, ambient.as_ref());
            if cli.json {
                emit(format!("{}\n", certificate_json(&name, &cert)), None)
            } else {
                emit(certificate_text(&name, &cert), None)
            }
        }
        Command::Reduce { .. } => {
            let (d, declared) = parse_diagram(&read(path)?)?;
            emit(serialize_diagram(&reduce(&d), declared), out)
        }
        Command::Cover { .. } => {
            let (d, _) = parse_diagram(&read(path)?)?;
            let (_, lifted) = double_cover_diagram(&d);
            emit(serialize_diagram(&lifted, None), out)
        }
        Command::Weave { .. } => {
            let (map, _) = parse_map(&read(path)?)?;
            let q = TilingQuotient::new(map, name)?;
            let d = if q.degree() == 3 { weave_from_three_regular(&q)?.1 } else { weave_from_map(&q)? };
            emit(serialize_diagram(&d, None), out)
        }
        Command::Stats { .. } => {
            let (d, _) = parse_diagram(&read(path)?)?;
            let s = density_stats(&d);
            if cli.json {
                emit(format!("{}\n", json!({ "version": REPORT_VERSION, "input": name, "stats": s })), None)
            } else {
                emit(
                    format!(
                        "{name}\n  crossings per fundamental domain: {}\n  components: {}\n  surface: {}\n  reduced crossings: {}\n",
                        s.crossings_per_fundamental_domain, s.component_count, s.surface.surface_type(), s.reduced_crossing_count
                    ),
                    None,
                )
            }
        }
    }
}

fn inputs(cli: &Cli) -> Result<(Vec<PathBuf>, Option<PathBuf>), Failure> {
    let (file, out) = match &cli.command {
        Command::Check { file } | Command::Certify { file, .. } | Command::Stats { file } => (file, None),
        Command::Reduce { file, o } | Command::Cover { file, o } | Command::Weave { file, o } => (file, o.clone()),
    };
    let mut files: Vec<PathBuf> = file.iter().cloned().collect();
    if let Some(list) = &cli.batch {
        if out.is_some() {
            return Err(Failure::Input("-o cannot be combined with --batch".into()));
        }
        files.extend(
            read(list)?.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(PathBuf::from),
        );
    }
    if files.is_empty() {
        return Err(Failure::Input("no input file".into()));
    }
    Ok((files, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (files, out) = match inputs(&cli) {
        Ok(x) => x,
        Err(Failure::Input(m)) | Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
    };
    let mut code = 0u8;
    for f in &files {
        let result = std::panic::catch_unwind(|| run_one(&cli, f, out.as_deref()));
        let failure = match result {
            Ok(Ok(())) => continue,
            Ok(Err(failure)) => failure,
            Err(_) => Failure::Internal(format!("{}: internal error", f.display())),
        };
        match failure {
            Failure::Input(m) => {
                eprintln!("error: {m}");
                code = code.max(1);
            }
            Failure::Internal(m) => {
                eprintln!("internal error: {m}");
                code = 2;
            }
        }
    }
    ExitCode::from(code)
}

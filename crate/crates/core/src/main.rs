use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use arrangeproj::cli::{
    cmd_charpoly, cmd_regions, cmd_render, cmd_verify, parse_graph_file, CliError, Family, Method,
};
use arrangeproj::combinatorics::Graph;
use arrangeproj::geometry::RationalPoint;
use arrangeproj::nui::{nui_from_c_vector, CVector};

#[derive(Parser)]
#[command(name = "arrangeproj", version, about = "Characteristic polynomials of graphical arrangements, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph file: `n N` then `e i j` lines
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Natural unit interval graph given by its c-vector, e.g. `0,1,1`
    #[arg(long)]
    cvector: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<Graph, CliError> {
        match (&self.graph, &self.cvector) {
            (Some(path), _) => Ok(parse_graph_file(path)?),
            (None, Some(text)) => Ok(nui_from_c_vector(&text.parse::<CVector>()?)),
            (None, None) => Err(CliError::Usage("one of --graph or --cvector is required".to_string())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the characteristic polynomial
    Charpoly {
        #[command(flatten)]
        source: GraphSource,
        /// chromatic | mobius | projection | product
        #[arg(long, default_value = "chromatic")]
        method: String,
        /// Comma-separated rationals used by the projection method
        #[arg(long)]
        point: Option<String>,
    },
    /// Tabulate every region with its source components and projection
    Regions {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        point: Option<String>,
    },
    /// Check the identities over a family of graphs
    Verify {
        /// all-graphs | nui | braid
        #[arg(long)]
        family: String,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra random graphs (all-graphs only)
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Draw the section of a 3-vertex arrangement as SVG
    Render {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        point: Option<String>,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_point(text: Option<&String>) -> Result<Option<RationalPoint>, CliError> {
    text.map(|t| t.parse::<RationalPoint>().map_err(|e| CliError::InvalidPoint(e.to_string()))).transpose()
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Charpoly { source, method, point } => {
            let g = source.load()?;
            print!("{}", cmd_charpoly(&g, method.parse::<Method>()?, parse_point(point.as_ref())?.as_ref())?);
        }
        Command::Regions { source, point } => {
            let g = source.load()?;
            print!("{}", cmd_regions(&g, parse_point(point.as_ref())?.as_ref())?);
        }
        Command::Verify { family, max_n, seed, samples } => {
            let report = cmd_verify(family.parse::<Family>()?, max_n, seed, samples)?;
            print!("{report}");
            return Ok(report.passed());
        }
        Command::Render { source, point, out } => {
            let g = source.load()?;
            let svg = cmd_render(&g, parse_point(point.as_ref())?.as_ref())?;
            match out {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

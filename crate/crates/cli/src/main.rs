use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vlink_core::catalog::{table_row, ExampleFamily, Params};
use vlink_core::moves::loop_descriptor;
use vlink_core::report::{legendrian_report, nu_report, table_report, verdict_report};
use vlink_core::script::{self, ScriptFile};
use vlink_core::{h_v, normal_form_loop, nu, promote_to_legendrian, table_all, verdict_for_script, HomotopyScript};

/// Invariants of V-transverse links in circle bundles over surfaces.
#[derive(Parser)]
#[command(name = "vlink", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and run every homotopy in a script file
    Validate { file: PathBuf },
    /// Figure-8 invariant of a homotopy
    Nu {
        file: PathBuf,
        #[arg(long)]
        homotopy: Option<String>,
    },
    /// Total h_V of a loop of events
    Hv {
        file: PathBuf,
        #[arg(long = "loop")]
        events: String,
    },
    /// Normal form of a closed loop on one component
    NormalForm {
        file: PathBuf,
        #[arg(long = "loop")]
        events: String,
    },
    /// Five-slot verdict with provenance
    Verdict {
        file: PathBuf,
        #[arg(long)]
        homotopy: Option<String>,
    },
    /// Verdict transferred to Legendrian links
    Legendrian {
        file: PathBuf,
        #[arg(long)]
        homotopy: Option<String>,
        #[arg(long)]
        loose_components: bool,
        #[arg(long)]
        loose_link: bool,
    },
    /// Rows of the summary table
    Table(TableArgs),
}

#[derive(Args)]
struct TableArgs {
    /// All seven regimes
    #[arg(long, conflicts_with_all = ["family", "i1", "i2"])]
    all: bool,
    #[arg(long, required_unless_present = "all", value_parser = parse_family)]
    family: Option<ExampleFamily>,
    #[arg(long, default_value_t = 2)]
    g: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, required_unless_present = "all", allow_negative_numbers = true)]
    i1: Option<i64>,
    #[arg(long, required_unless_present = "all", allow_negative_numbers = true)]
    i2: Option<i64>,
}

fn parse_family(s: &str) -> Result<ExampleFamily, String> {
    ExampleFamily::parse(s).map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<ScriptFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    script::parse(&text).map_err(|e| e.to_string())
}

fn homotopy(file: &ScriptFile, name: Option<&str>) -> Result<HomotopyScript, String> {
    file.script(name).map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<String, String> {
    match command {
        Command::Validate { file } => {
            let f = load(&file)?;
            for s in f.scripts().map_err(|e| e.to_string())? {
                s.validate().map_err(|e| format!("homotopy {}: {e}", s.name))?;
            }
            Ok("OK\n".into())
        }
        Command::Nu { file, homotopy: name } => {
            let f = load(&file)?;
            let s = homotopy(&f, name.as_deref())?;
            let value = nu(&s).map_err(|e| e.to_string())?;
            Ok(nu_report(&s, &value, &s.ambient))
        }
        Command::Hv { file, events } => {
            let f = load(&file)?;
            let amb = f.ambient().map_err(|e| e.to_string())?;
            let events = script::parse_events(&events, amb.genus()).map_err(|e| e.to_string())?;
            let word = loop_descriptor(&amb, &f.components, &events).map_err(|e| e.to_string())?;
            let h = h_v(&amb.field, &word).map_err(|e| e.to_string())?;
            Ok(format!("{h}\n"))
        }
        Command::NormalForm { file, events } => {
            let f = load(&file)?;
            let amb = f.ambient().map_err(|e| e.to_string())?;
            let events = script::parse_events(&events, amb.genus()).map_err(|e| e.to_string())?;
            let first = events.first().and_then(|e| e.components().first().map(|c| c.to_string()));
            let name = first.ok_or("empty loop")?;
            let decl =
                f.components.iter().find(|c| c.name == name).ok_or_else(|| format!("unknown component `{name}`"))?;
            let nf = normal_form_loop(&amb, decl, &events).map_err(|e| e.to_string())?;
            Ok(format!("{nf}\n"))
        }
        Command::Verdict { file, homotopy: name } => {
            let f = load(&file)?;
            let v = verdict_for_script(&homotopy(&f, name.as_deref())?).map_err(|e| e.to_string())?;
            Ok(verdict_report(&v))
        }
        Command::Legendrian { file, homotopy: name, loose_components, loose_link } => {
            let f = load(&file)?;
            let v = verdict_for_script(&homotopy(&f, name.as_deref())?).map_err(|e| e.to_string())?;
            Ok(legendrian_report(&promote_to_legendrian(&v, loose_components, loose_link)))
        }
        Command::Table(t) => {
            let rows = if t.all {
                table_all(t.g, t.k)
            } else {
                // clap guarantees these when --all is absent
                let (family, i1, i2) = (t.family.unwrap(), t.i1.unwrap(), t.i2.unwrap());
                Params::new(family, t.g, t.k, i1, i2).and_then(|p| table_row(&p)).map(|r| vec![r])
            };
            Ok(table_report(&rows.map_err(|e| e.to_string())?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let validate = matches!(cli.command, Command::Validate { .. });
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) if validate => {
            println!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

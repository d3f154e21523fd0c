//! Argument grammar and dispatch for the `singcat` binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};
use thiserror::Error;

use singcat::ade::AdeType;
use singcat::dga::{self, Parity};
use singcat::gentle::{self, GentleError};
use singcat::nodal::{self, Component, NodalIndecomposable, NodalObject, ParsedObject};
use singcat::quiver::{self, Presentation, QuiverError};
use singcat::surface::{self, DualGraph, SurfaceError};

pub mod corpus;

#[derive(Debug, Parser)]
#[command(
    name = "singcat",
    version,
    about = "Exact invariants of singularity categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for randomized choices.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gentle algebras given in the quiver text format.
    #[command(subcommand)]
    Gentle(GentleCmd),
    /// The nodal relative singularity category.
    #[command(subcommand)]
    Nodal(NodalCmd),
    /// Dual graphs of rational surface singularities.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Dg Auslander algebras.
    #[command(subcommand)]
    Dga(DgaCmd),
    /// Run every case in a corpus directory.
    Corpus { dir: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum GentleCmd {
    Check { file: PathBuf },
    Cycles { file: PathBuf },
    Gp { file: PathBuf },
    Singcat { file: PathBuf },
    Compare { left: PathBuf, right: PathBuf },
}

#[derive(Debug, Args)]
pub struct Window {
    /// Shift range `a..b`.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    pub shifts: String,
    #[arg(long, default_value_t = 3)]
    pub maxlen: u32,
}

#[derive(Debug, Subcommand)]
pub enum NodalCmd {
    Hom {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Table(Window),
    Complex {
        object: String,
    },
    /// A direct sum is written as a comma-separated list.
    K0 {
        object: String,
    },
    Cluster {
        object: String,
    },
    Ar {
        component: String,
        #[command(flatten)]
        window: Window,
    },
}

#[derive(Debug, Subcommand)]
pub enum SurfaceCmd {
    Cyclic {
        n: u64,
        a: u64,
    },
    Fundamental {
        file: PathBuf,
    },
    Decompose {
        file: PathBuf,
        /// Comma-separated (-2)-curves to contract.
        #[arg(long, value_delimiter = ',', conflicts_with = "all_minus_two")]
        contract: Option<Vec<String>>,
        #[arg(long)]
        all_minus_two: bool,
    },
    Ranks {
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum DgaCmd {
    /// `parity` is a Krull dimension or `even`/`odd`.
    Emit { ade: String, parity: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Quiver(#[from] QuiverError),
    #[error("{0}")]
    Gentle(#[from] GentleError),
    #[error("{0}")]
    Surface(#[from] SurfaceError),
    #[error("{0}")]
    Dga(#[from] dga::DgError),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Quiver(_) => "quiver",
            CliError::Gentle(GentleError::NotGentle(_)) => "not_gentle",
            CliError::Gentle(_) => "gentle",
            CliError::Surface(_) => "surface",
            CliError::Dga(_) => "dga",
            CliError::Input(_) => "input",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind(), "message": self.to_string() })
    }
}

/// A command's result: JSON plus its text rendering.
pub struct Output {
    pub json: Value,
    pub text: String,
    /// Set by the corpus runner when a case fails.
    pub failed: bool,
}

impl Output {
    pub(crate) fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).unwrap_or_default() + "\n",
            Format::Text => self.text.clone(),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn presentation(path: &Path) -> Result<Presentation, CliError> {
    Ok(quiver::parse_presentation(&read(path)?)?)
}

fn graph(path: &Path) -> Result<DualGraph, CliError> {
    Ok(surface::parse_graph(&read(path)?)?)
}

fn nodal_object(s: &str) -> Result<NodalIndecomposable, CliError> {
    match s
        .parse::<ParsedObject>()
        .map_err(|e| CliError::Input(e.to_string()))?
    {
        ParsedObject::Nodal(x) => Ok(x),
        ParsedObject::Zero(_) => Err(CliError::Input(format!(
            "`{s}` lives in the zero-dimensional block; expected P±[n] or S±(l)[n]"
        ))),
    }
}

fn range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Input(format!("expected a shift range `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Gentle(c) => run_gentle(c),
        Command::Nodal(c) => run_nodal(c),
        Command::Surface(c) => run_surface(c, cli.seed),
        Command::Dga(c) => run_dga(c),
        Command::Corpus { dir } => corpus::run(dir),
    }
}

fn run_gentle(cmd: &GentleCmd) -> Result<Output, CliError> {
    match cmd {
        GentleCmd::Check { file } => {
            let r = gentle::check_gentle(&presentation(file)?);
            let mut text = format!("gentle: {}\n", r.is_gentle);
            for v in &r.violations {
                text += &format!("{:?} at {}: {}\n", v.condition, v.location, v.detail);
            }
            Ok(Output::new(to_value(&r), text))
        }
        GentleCmd::Cycles { file } => {
            let cycles = gentle::critical_cycles(&presentation(file)?)?;
            let list: Vec<Value> = cycles
                .iter()
                .map(
                    |c| json!({ "arrows": c.arrows, "display": c.display(), "length": c.length() }),
                )
                .collect();
            let text = cycles
                .iter()
                .map(|c| format!("{} {}\n", c.display(), c.length()))
                .collect();
            Ok(Output::new(json!({ "cycles": list }), text))
        }
        GentleCmd::Gp { file } => {
            let gp = gentle::gorenstein_projectives(&presentation(file)?)?;
            let mut text = format!("projectives: {}\n", gp.projectives.join(" "));
            for r in &gp.radicals {
                let w = &r.module.walk;
                let word = if w.is_lazy() {
                    format!("e{}", w.source)
                } else {
                    w.display()
                };
                text += &format!("R({})_{} = {}\n", r.cycle.display(), r.vertex, word);
            }
            Ok(Output::new(to_value(&gp), text))
        }
        GentleCmd::Singcat { file } => {
            let d = gentle::singularity_category(&presentation(file)?)?;
            let text = if d.is_trivial() {
                "trivial\n".to_string()
            } else {
                d.periods()
                    .iter()
                    .map(|p| format!("D^b(k)/[{p}]\n"))
                    .collect()
            };
            let factors: Vec<Value> = d
                .factors
                .iter()
                .map(|f| json!({ "period": f.period, "cycle": f.cycle.display() }))
                .collect();
            Ok(Output::new(
                json!({ "factors": factors, "periods": d.periods() }),
                text,
            ))
        }
        GentleCmd::Compare { left, right } => {
            let c = gentle::compare_invariant(&presentation(left)?, &presentation(right)?)?;
            let text = format!(
                "compatible: {}\nonly left: {:?}\nonly right: {:?}\n",
                c.compatible, c.witness.only_left, c.witness.only_right
            );
            Ok(Output::new(to_value(&c), text))
        }
    }
}

fn run_nodal(cmd: &NodalCmd) -> Result<Output, CliError> {
    match cmd {
        NodalCmd::Hom { x, y } => {
            let px = x
                .parse::<ParsedObject>()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let py = y
                .parse::<ParsedObject>()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let dim = match (px, py) {
                (ParsedObject::Nodal(a), ParsedObject::Nodal(b)) => nodal::hom_dim(&a, &b),
                (ParsedObject::Zero(a), ParsedObject::Zero(b)) => nodal::hom_dim_zero(&a, &b),
                _ => return Err(CliError::Input("objects come from different blocks".into())),
            };
            Ok(Output::new(json!({ "dim": dim }), format!("{dim}\n")))
        }
        NodalCmd::Table(w) => {
            let (lo, hi) = range(&w.shifts)?;
            let objects: Vec<NodalIndecomposable> =
                NodalIndecomposable::window(lo.abs().max(hi.abs()), w.maxlen)
                    .into_iter()
                    .filter(|x| (lo..=hi).contains(&x.shift))
                    .collect();
            let names: Vec<String> = objects.iter().map(|x| x.to_string()).collect();
            let rows: Vec<Vec<u32>> = objects
                .iter()
                .map(|x| objects.iter().map(|y| nodal::hom_dim(x, y)).collect())
                .collect();
            let mut text = String::new();
            for (name, row) in names.iter().zip(&rows) {
                let cells: String = row.iter().map(|d| d.to_string()).collect();
                text += &format!("{name:>12} {cells}\n");
            }
            Ok(Output::new(
                json!({ "objects": names, "table": rows }),
                text,
            ))
        }
        NodalCmd::Complex { object } => {
            let x = nodal_object(object)?;
            let nodal::Kind::MinimalString { sign, length } = x.kind else {
                return Err(CliError::Input(format!(
                    "`{object}` is not a minimal string"
                )));
            };
            let mut c = nodal::minimal_string_complex(sign, length);
            for t in &mut c.terms {
                t.degree -= x.shift;
            }
            for d in &mut c.differentials {
                d.from_degree -= x.shift;
            }
            let mut text = String::new();
            for (k, t) in c.terms.iter().enumerate() {
                text += &format!("P{} ({})", t.projective, t.degree);
                if let Some(d) = c.differentials.get(k) {
                    text += &format!(" --{}--> ", d.path.display());
                }
            }
            text.push('\n');
            let terms: Vec<Value> = c
                .terms
                .iter()
                .map(|t| json!({ "degree": t.degree, "projective": t.projective }))
                .collect();
            let diffs: Vec<Value> = c
                .differentials
                .iter()
                .map(|d| json!({ "from_degree": d.from_degree, "path": d.path.display(), "arrows": d.path.arrows }))
                .collect();
            Ok(Output::new(
                json!({ "object": x.to_string(), "terms": terms, "differentials": diffs }),
                text,
            ))
        }
        NodalCmd::K0 { object } => {
            let x: NodalObject = object
                .split(',')
                .map(|s| nodal_object(s.trim()))
                .collect::<Result<Vec<_>, _>>()?
                .into();
            let class = nodal::k0_class(&x).to_pair();
            Ok(Output::new(
                json!({ "class": class }),
                format!("{} [P+] + {} [P-]\n", class[0], class[1]),
            ))
        }
        NodalCmd::Cluster { object } => {
            let x = nodal_object(object)?;
            let member = nodal::cluster_member(&x);
            Ok(Output::new(
                json!({ "object": x.to_string(), "member": member }),
                format!("{member}\n"),
            ))
        }
        NodalCmd::Ar { component, window } => {
            let c: Component = component.parse().map_err(|e: String| CliError::Input(e))?;
            let (lo, hi) = range(&window.shifts)?;
            let f = nodal::ar_window(c, lo, hi, window.maxlen);
            let show = |v: &[(NodalIndecomposable, NodalIndecomposable)]| -> Vec<[String; 2]> {
                v.iter()
                    .map(|(a, b)| [a.to_string(), b.to_string()])
                    .collect()
            };
            let vertices: Vec<String> = f.vertices.iter().map(|x| x.to_string()).collect();
            let mut text = String::new();
            for [a, b] in show(&f.irreducible) {
                text += &format!("{a} -> {b}\n");
            }
            for [a, b] in show(&f.translation) {
                text += &format!("tau {a} = {b}\n");
            }
            Ok(Output::new(
                json!({
                    "vertices": vertices,
                    "irreducible": show(&f.irreducible),
                    "translation": show(&f.translation),
                }),
                text,
            ))
        }
    }
}

fn run_surface(cmd: &SurfaceCmd, seed: Option<u64>) -> Result<Output, CliError> {
    match cmd {
        SurfaceCmd::Cyclic { n, a } => {
            let c = surface::jung_hirzebruch(*n, *a)?;
            let g = surface::cyclic_dual_graph(*n, *a)?;
            let text = format!(
                "{n}/{a} = [{}]\n{}",
                c.iter().map(u64::to_string).collect::<Vec<_>>().join(", "),
                surface::serialize_graph(&g)
            );
            Ok(Output::new(
                json!({
                    "fraction": format!("{n}/{a}"),
                    "expansion": c,
                    "value": surface::evaluate_hj(&c).to_string(),
                    "graph": graph_json(&g),
                }),
                text,
            ))
        }
        SurfaceCmd::Fundamental { file } => {
            let g = graph(file)?;
            let z = match seed {
                None => surface::fundamental_cycle(&g)?,
                Some(s) => {
                    let mut rng = StdRng::seed_from_u64(s);
                    surface::fundamental_cycle_with(&g, |v| v[rng.gen_range(0..v.len())])?
                }
            };
            let text = g
                .vertices()
                .iter()
                .zip(&z)
                .map(|(v, c)| format!("{v} {c}\n"))
                .collect();
            let coefficients: serde_json::Map<String, Value> = g
                .vertices()
                .iter()
                .cloned()
                .zip(z.iter().map(|&c| json!(c)))
                .collect();
            Ok(Output::new(json!({ "coefficients": coefficients }), text))
        }
        SurfaceCmd::Decompose {
            file,
            contract,
            all_minus_two: _,
        } => {
            let g = graph(file)?;
            let d = match contract {
                Some(s) => surface::decompose(&g, s)?,
                None => surface::decompose_standard(&g)?,
            };
            let text = if d.blocks.is_empty() {
                "trivial\n".to_string()
            } else {
                d.blocks
                    .iter()
                    .map(|b| format!("{} {}\n", b.ade, b.vertices.join(" ")))
                    .collect()
            };
            let types: Vec<String> = d.types().iter().map(|t| t.to_string()).collect();
            let mut json = to_value(&d);
            json["types"] = json!(types);
            Ok(Output::new(json, text))
        }
        SurfaceCmd::Ranks { file } => {
            let g = graph(file)?;
            let ranks = surface::special_ranks(&g)?;
            let proj = surface::projective_injective_vertices(&g);
            let syz = surface::canonical_syzygy_multiplicities(&g);
            let text = g
                .vertices()
                .iter()
                .map(|v| {
                    let mark = if proj.contains(v) {
                        " projective-injective"
                    } else {
                        ""
                    };
                    format!("{v} rank {} syzygy {}{mark}\n", ranks[v], syz[v])
                })
                .collect();
            Ok(Output::new(
                json!({
                    "ranks": ranks,
                    "projective_injective": proj,
                    "syzygy_multiplicities": syz,
                }),
                text,
            ))
        }
    }
}

fn graph_json(g: &DualGraph) -> Value {
    let edges: Vec<[&String; 2]> = g
        .edges()
        .iter()
        .map(|&(a, b)| [&g.vertices()[a], &g.vertices()[b]])
        .collect();
    json!({ "vertices": g.vertices(), "weights": g.weights(), "edges": edges })
}

fn run_dga(cmd: &DgaCmd) -> Result<Output, CliError> {
    let DgaCmd::Emit { ade, parity } = cmd;
    let t: AdeType = ade
        .parse()
        .map_err(|e: singcat::ade::InvalidType| CliError::Input(e.to_string()))?;
    let p = match parity.as_str() {
        "even" => Parity::Even,
        "odd" => Parity::Odd,
        d => dga::knoerrer_parity(d.parse().map_err(|_| {
            CliError::Input(format!("expected a dimension, `even` or `odd`, got `{d}`"))
        })?),
    };
    let (q, d) = dga::dg_auslander(t, p)?;
    let images: serde_json::Map<String, Value> = d
        .images
        .iter()
        .map(|(rho, terms)| (rho.clone(), json!(dga::show_sum(terms))))
        .collect();
    Ok(Output::new(
        json!({
            "type": t.to_string(),
            "parity": p,
            "quiver": q,
            "differential": images,
            "k0_rank": dga::k0_rank(&q),
        }),
        dga::render_text(&q, &d),
    ))
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit status with what to print on stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                (0, msg, String::new())
            } else {
                (2, String::new(), msg)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let body = out.render(cli.format);
            let code = i32::from(out.failed);
            match &cli.out {
                Some(path) => match fs::write(path, &body) {
                    Ok(()) => (code, String::new(), String::new()),
                    Err(e) => {
                        let err = CliError::Io {
                            path: path.display().to_string(),
                            source: e,
                        };
                        (1, String::new(), err.to_json().to_string() + "\n")
                    }
                },
                None => (code, body, String::new()),
            }
        }
        Err(e) => (1, String::new(), e.to_json().to_string() + "\n"),
    }
}

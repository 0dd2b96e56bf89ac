//! Subcommands. Each returns the text to print on stdout or a [`CliError`]
//! carrying the process exit code.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use parslit_core::census::{enumerate_cells_with, CensusConfig, CensusError, Method};
use parslit_core::surface::{
    euler_report, summarize, verify_surface_type, Diagnosis, SurfaceError, SurfaceSummary,
};
use parslit_core::uniformizer::{uniformize_full, uniformize_slit_data, Uniformization, UniformizeError};
use parslit_core::{glue, periods, scramble, GluedGrid, ParallelSlitDomain};
use parslit_core::rational::format_rational;
use serde_json::json;

use crate::document::{self, DocError, Document, Kind, Object};
use crate::svg::{self, RenderError, View};

#[derive(Debug, Parser)]
#[command(name = "parslit", version, about = "Parallel slit domains: gluing, invariants and uniformization")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a document; cells and domains must glue to a surface of their type.
    Validate { file: PathBuf },
    /// Glue a domain into a grid.
    Glue { file: PathBuf },
    /// Genus, punctures, residues, zeros and genericity of a domain or grid.
    Invariants { file: PathBuf },
    /// Slit normal form of a domain or grid; exit code 2 if it is not generic.
    Uniformize { file: PathBuf },
    /// Rewrite a domain or grid into another presentation of the same surface.
    Scramble {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
    },
    /// Succeeds iff uniformizing a scrambled gluing of the domain gives it back.
    Roundtrip {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate the top cells of type (g, m).
    Census {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "stepped")]
        method: Method,
        /// Refuse searches over more candidate sequences than this.
        #[arg(long)]
        max_candidates: Option<u64>,
    },
    /// Draw a domain (slit picture) or a grid (developed, with critical graph).
    Render {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// XMIN:XMAX:YMIN:YMAX, rationals allowed.
        #[arg(long)]
        view: Option<View>,
    },
    /// Period matrix z_{k,l} of a domain or grid.
    Periods { file: PathBuf },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("not generic: {0}")]
    NonGeneric(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::NonGeneric(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<RenderError> for CliError {
    fn from(e: RenderError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        match e {
            SurfaceError::InternalAssertion(_) => CliError::Internal(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<UniformizeError> for CliError {
    fn from(e: UniformizeError) -> Self {
        match e {
            UniformizeError::NonGeneric(d) => CliError::NonGeneric(describe(&d)),
            UniformizeError::Surface(s) => s.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

pub fn describe(d: &Diagnosis) -> String {
    match d {
        Diagnosis::Generic => "generic".into(),
        Diagnosis::NoZeros => "no zeros".into(),
        Diagnosis::NonSimpleOrColocated { wall } => {
            format!("zero of higher order or two zeros on internal wall {wall}")
        }
        Diagnosis::SaddleConnection { from_wall, to_wall } => {
            format!("saddle connection from internal wall {from_wall} to {to_wall}")
        }
        Diagnosis::CoincidentLevels => "two slits on the same level".into(),
        Diagnosis::Invalid(msg) => format!("invalid surface: {msg}"),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn read_doc(path: &Path) -> Result<Document, CliError> {
    Ok(document::read(&read_text(path)?)?)
}

enum Surface {
    Domain(ParallelSlitDomain),
    Grid(GluedGrid),
}

impl Surface {
    fn grid(&self) -> GluedGrid {
        match self {
            Surface::Domain(x) => glue(x),
            Surface::Grid(g) => g.clone(),
        }
    }
}

fn read_surface(path: &Path) -> Result<Surface, CliError> {
    match read_doc(path)?.object {
        Object::Domain(x) => Ok(Surface::Domain(x)),
        Object::Grid(g) => Ok(Surface::Grid(g)),
        other => Err(CliError::Invalid(format!(
            "expected a domain or grid document, found {}",
            other.kind()
        ))),
    }
}

fn read_domain(path: &Path) -> Result<ParallelSlitDomain, CliError> {
    match read_doc(path)?.object {
        Object::Domain(x) => Ok(x),
        other => Err(CliError::Invalid(format!("expected a domain document, found {}", other.kind()))),
    }
}

fn emit(object: Object, note: String) -> String {
    document::write(&Document::new(object, vec![note]))
}

/// Uniformizes whatever the file holds. Domains are read without
/// normalization so that tied coordinates are reported as non-generic.
fn uniformize_file(path: &Path) -> Result<Uniformization, CliError> {
    let text = read_text(path)?;
    match document::kind_of(&text)? {
        Kind::Domain => {
            let raw = document::read_slit_data(&text)?;
            let x = uniformize_slit_data(&raw.cell, &raw.a, &raw.b).map_err(|e| match e {
                UniformizeError::Coord(c) => CliError::Invalid(c.to_string()),
                other => other.into(),
            })?;
            Ok(uniformize_full(&glue(&x))?)
        }
        Kind::Grid => match document::read(&text)?.object {
            Object::Grid(g) => Ok(uniformize_full(&g)?),
            _ => unreachable!("kind checked"),
        },
        other => Err(CliError::Invalid(format!("expected a domain or grid document, found {other}"))),
    }
}

fn summary_json(grid: &GluedGrid, s: &SurfaceSummary) -> Result<serde_json::Value, CliError> {
    let euler = euler_report(grid)?;
    let walls = grid.walls();
    let columns = grid.num_columns();
    let zeros: Vec<_> = s
        .cones
        .zeros()
        .map(|z| {
            json!({
                // walls counted from the right, as the a-coordinates are
                "wall": columns - 1 - z.wall,
                "x": format_rational(&walls[z.wall]),
                "cone_angle_over_2pi": z.k(),
                "order": z.zero_order(),
                "strips": z.bottom_left_strips(),
            })
        })
        .collect();
    let punctures: Vec<_> = s
        .ends
        .punctures
        .iter()
        .map(|p| {
            json!({
                "label": p.label,
                "pole_order": p.pole_order,
                "residue_times_2pi": format_rational(&p.circumference),
                "strips": p.strips,
            })
        })
        .collect();
    Ok(json!({
        "genus": { "cones": s.genus_cones, "euler": s.genus_euler },
        "euler": {
            "vertices": euler.vertices,
            "edges": euler.edges,
            "faces": euler.faces,
            "boundary_circuits": euler.boundary_circuits,
            "chi": euler.chi,
        },
        "punctures": punctures,
        "residue_sum": format_rational(&s.ends.residue_sum()),
        "zeros": zeros,
        "total_zero_order": s.cones.total_zero_order(),
        "generic": s.genericity.is_generic(),
        "diagnosis": describe(&s.genericity.diagnosis),
    }))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("json values serialize");
    out.push('\n');
    out
}

pub fn run(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Validate { file } => {
            let doc = read_doc(file)?;
            let kind = doc.object.kind();
            match &doc.object {
                Object::Domain(x) => {
                    verify_surface_type(x)?;
                }
                Object::Cell(label) => {
                    verify_surface_type(&parslit_core::census::sample_domain(label.clone()))?;
                }
                _ => {}
            }
            Ok(format!("ok: valid {kind} document\n"))
        }
        Command::Glue { file } => {
            let x = read_domain(file)?;
            Ok(emit(Object::Grid(glue(&x)), "glue".into()))
        }
        Command::Invariants { file } => {
            let grid = read_surface(file)?.grid();
            let summary = summarize(&grid)?;
            Ok(pretty(&summary_json(&grid, &summary)?))
        }
        Command::Uniformize { file } => {
            let u = uniformize_file(file)?;
            Ok(emit(Object::Domain(u.domain), "uniformize".into()))
        }
        Command::Scramble { file, seed } => {
            let grid = read_surface(file)?.grid();
            Ok(emit(Object::Grid(scramble(&grid, *seed)), format!("scramble seed={seed}")))
        }
        Command::Roundtrip { file, seed } => {
            let x = read_domain(file)?;
            let back = uniformize_full(&scramble(&glue(&x), *seed))?.domain;
            if back != x {
                return Err(CliError::Internal(format!(
                    "round trip with seed {seed} returned a different domain:\n{back}"
                )));
            }
            Ok(format!("ok: round trip with seed {seed} reproduces the domain\n"))
        }
        Command::Census {
            g,
            m,
            method,
            max_candidates,
        } => {
            let mut config = CensusConfig::default();
            if let Some(bound) = max_candidates {
                config.max_candidates = u128::from(*bound);
            }
            let report = enumerate_cells_with(*g, *m, *method, &config).map_err(|e| match e {
                CensusError::EmptyCell | CensusError::TooLarge { .. } => CliError::Invalid(e.to_string()),
            })?;
            Ok(emit(Object::Report(report), format!("census g={g} m={m} method={method}")))
        }
        Command::Render { file, out, view } => {
            let svg = match read_doc(file)?.object {
                Object::Domain(x) => svg::render_domain(&x, view.as_ref())?,
                Object::Grid(g) => svg::render_development(&uniformize_full(&g)?, view.as_ref())?,
                other => {
                    return Err(CliError::Invalid(format!(
                        "render needs a domain or grid document, found {}",
                        other.kind()
                    )))
                }
            };
            fs::write(out, svg).map_err(|e| CliError::Invalid(format!("{}: {e}", out.display())))?;
            Ok(String::new())
        }
        Command::Periods { file } => {
            let u = uniformize_file(file)?;
            Ok(emit(Object::Periods(periods(&u.development)), "periods".into()))
        }
    }
}

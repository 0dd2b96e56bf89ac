//! Versioned JSON documents.
//!
//! Every file is an envelope
//!
//! ```json
//! { "format": "parslit", "version": 1, "kind": "domain", "payload": {...}, "notes": [] }
//! ```
//!
//! Rationals travel as `"p/q"` strings and infinities as `"inf"` / `"-inf"`.
//! Columns are listed right to left (column 0 holds `σ_0`), strips bottom to
//! top, so the wire format uses the same indices as the slit picture.
//! Writing is canonical: `write(read(doc)) == doc` for anything `write` produced.

use std::fmt;

use parslit_core::census::{CellDigest, CensusReport, Method, ZeroDigest};
use parslit_core::rational::{format_rational, parse_rational};
use parslit_core::slit::{normalize, CellError, CoordError};
use parslit_core::surface::GridError;
use parslit_core::{
    validate_cell_label, CellCandidate, CellLabel, ComplexRational, ExtRational, GluedGrid,
    ParallelSlitDomain, PeriodMatrix, Permutation, Rational, Strip,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const FORMAT: &str = "parslit";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cell,
    Domain,
    Grid,
    Report,
    Periods,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Cell => "cell",
            Kind::Domain => "domain",
            Kind::Grid => "grid",
            Kind::Report => "report",
            Kind::Periods => "periods",
        };
        f.write_str(s)
    }
}

/// A failed module-level check on otherwise well-formed data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unsupported document: format {format:?} version {version}")]
    Version { format: String, version: u32 },
    #[error("expected a {expected} document, found {found}")]
    WrongKind { expected: String, found: Kind },
    #[error("invariant violation: {0}")]
    InvariantViolation(#[from] Violation),
}

fn parse_err(location: impl Into<String>, message: impl fmt::Display) -> DocError {
    DocError::Parse {
        location: location.into(),
        message: message.to_string(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format: String,
    version: u32,
    kind: Kind,
    payload: Value,
    #[serde(default)]
    notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Cell(CellLabel),
    Domain(ParallelSlitDomain),
    Grid(GluedGrid),
    Report(CensusReport),
    Periods(PeriodMatrix),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Cell(_) => Kind::Cell,
            Object::Domain(_) => Kind::Domain,
            Object::Grid(_) => Kind::Grid,
            Object::Report(_) => Kind::Report,
            Object::Periods(_) => Kind::Periods,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub object: Object,
    /// Free-form provenance, carried through unchanged.
    pub notes: Vec<String>,
}

impl Document {
    pub fn new(object: Object, notes: Vec<String>) -> Self {
        Self { object, notes }
    }
}

// ---- wire types -------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellWire {
    pub g: usize,
    pub m: usize,
    #[serde(default = "one")]
    pub n: usize,
    pub h: usize,
    pub sigmas: Vec<Vec<usize>>,
    pub nu: Vec<Vec<usize>>,
}

fn one() -> usize {
    1
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainWire {
    pub cell: CellWire,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StripWire {
    lo: String,
    hi: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridWire {
    /// Finite walls, right to left.
    walls: Vec<String>,
    strips: Vec<StripWire>,
    /// One permutation per column, right to left.
    perms: Vec<Vec<usize>>,
    end_labels: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ZeroWire {
    tip: usize,
    strips: [usize; 2],
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigestWire {
    cell: CellWire,
    genus_cones: usize,
    genus_euler: usize,
    punctures: usize,
    zeros: Vec<ZeroWire>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportWire {
    g: usize,
    m: usize,
    h: usize,
    method: String,
    candidates: u64,
    sequences: usize,
    labels: usize,
    saddle_degenerate: usize,
    sigma_sequences: Vec<Vec<Vec<usize>>>,
    cells: Vec<DigestWire>,
    saddle_examples: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexWire {
    re: String,
    im: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PeriodsWire {
    /// `entries[k][l]` is `z_{k+1,l+1}`.
    entries: Vec<Vec<ComplexWire>>,
}

// ---- reading ----------------------------------------------------------------

fn from_payload<T: DeserializeOwned>(payload: Value) -> Result<T, DocError> {
    serde_path_to_error::deserialize(payload).map_err(|e| {
        let path = e.path().to_string();
        let location = if path == "." { "payload".to_string() } else { format!("payload.{path}") };
        parse_err(location, e.into_inner())
    })
}

fn rational_at(s: &str, location: String) -> Result<Rational, DocError> {
    parse_rational(s).map_err(|e| parse_err(location, e))
}

fn ext_rational_at(s: &str, location: String) -> Result<ExtRational, DocError> {
    s.parse::<ExtRational>().map_err(|e| parse_err(location, e))
}

fn perm_at(v: &[usize], location: String) -> Result<Permutation, DocError> {
    Permutation::from_one_line(v.to_vec()).map_err(|e| parse_err(location, e))
}

fn parse_envelope(text: &str) -> Result<Envelope, DocError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e))?;
    let env: Envelope = serde_path_to_error::deserialize(value)
        .map_err(|e| parse_err(e.path().to_string(), e.into_inner()))?;
    if env.format != FORMAT || env.version != VERSION {
        return Err(DocError::Version {
            format: env.format,
            version: env.version,
        });
    }
    Ok(env)
}

impl CellWire {
    pub fn to_candidate(&self) -> Result<CellCandidate, DocError> {
        if self.n != 1 {
            return Err(Violation::Other(format!("n = {} is not supported, only n = 1", self.n)).into());
        }
        if self.h != 2 * self.g + self.m {
            return Err(Violation::Other(format!(
                "h = {} but 2g + m = {}",
                self.h,
                2 * self.g + self.m
            ))
            .into());
        }
        Ok(CellCandidate {
            g: self.g,
            m: self.m,
            sigmas: self.sigmas.clone(),
            nu: self.nu.clone(),
        })
    }

    pub fn to_label(&self) -> Result<CellLabel, DocError> {
        Ok(validate_cell_label(&self.to_candidate()?).map_err(Violation::from)?)
    }

    pub fn from_label(label: &CellLabel) -> Self {
        Self {
            g: label.g(),
            m: label.m(),
            n: label.n(),
            h: label.h(),
            sigmas: label.sigmas().iter().map(|s| s.as_slice().to_vec()).collect(),
            nu: label.nu().to_vec(),
        }
    }
}

/// Raw slit data exactly as written, before coordinates are normalized.
#[derive(Debug, Clone)]
pub struct SlitData {
    pub cell: CellCandidate,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl DomainWire {
    fn coordinates(&self) -> Result<(Vec<Rational>, Vec<Rational>), DocError> {
        let a = self
            .a
            .iter()
            .enumerate()
            .map(|(i, s)| rational_at(s, format!("payload.a[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let b = self
            .b
            .iter()
            .enumerate()
            .map(|(i, s)| rational_at(s, format!("payload.b[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let h = self.cell.h;
        for (which, expected, found) in [("a", h, a.len()), ("b", 2 * h, b.len())] {
            if expected != found {
                return Err(Violation::Coord(CoordError::LengthMismatch {
                    which,
                    expected,
                    found,
                })
                .into());
            }
        }
        Ok((a, b))
    }

    fn to_domain(&self) -> Result<ParallelSlitDomain, DocError> {
        let label = self.cell.to_label()?;
        let (a, b) = self.coordinates()?;
        let coords = normalize(&a, &b).map_err(Violation::from)?;
        Ok(ParallelSlitDomain::new(label, coords).map_err(Violation::from)?)
    }
}

fn grid_from_wire(w: GridWire) -> Result<GluedGrid, DocError> {
    let mut walls = w
        .walls
        .iter()
        .enumerate()
        .map(|(i, s)| rational_at(s, format!("payload.walls[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    walls.reverse();
    let strips = w
        .strips
        .iter()
        .enumerate()
        .map(|(i, s)| {
            Ok(Strip::new(
                ext_rational_at(&s.lo, format!("payload.strips[{i}].lo"))?,
                ext_rational_at(&s.hi, format!("payload.strips[{i}].hi"))?,
            ))
        })
        .collect::<Result<Vec<_>, DocError>>()?;
    let mut perms = w
        .perms
        .iter()
        .enumerate()
        .map(|(i, p)| perm_at(p, format!("payload.perms[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    perms.reverse();
    Ok(GluedGrid::new(walls, strips, perms, w.end_labels).map_err(Violation::from)?)
}

fn grid_to_wire(g: &GluedGrid) -> GridWire {
    GridWire {
        walls: g.walls().iter().rev().map(format_rational).collect(),
        strips: g
            .strips()
            .iter()
            .map(|s| StripWire {
                lo: s.lo.to_string(),
                hi: s.hi.to_string(),
            })
            .collect(),
        perms: g.perms().iter().rev().map(|p| p.as_slice().to_vec()).collect(),
        end_labels: g.end_labels().to_vec(),
    }
}

fn sequences_from_wire(v: &[Vec<Vec<usize>>], field: &str) -> Result<Vec<Vec<Permutation>>, DocError> {
    v.iter()
        .enumerate()
        .map(|(i, seq)| {
            seq.iter()
                .enumerate()
                .map(|(j, p)| perm_at(p, format!("payload.{field}[{i}][{j}]")))
                .collect()
        })
        .collect()
}

fn sequences_to_wire(v: &[Vec<Permutation>]) -> Vec<Vec<Vec<usize>>> {
    v.iter()
        .map(|seq| seq.iter().map(|p| p.as_slice().to_vec()).collect())
        .collect()
}

fn report_from_wire(w: ReportWire) -> Result<CensusReport, DocError> {
    let method: Method = w.method.parse().map_err(|e: String| parse_err("payload.method", e))?;
    let sigma_sequences = sequences_from_wire(&w.sigma_sequences, "sigma_sequences")?;
    let saddle_examples = sequences_from_wire(&w.saddle_examples, "saddle_examples")?;
    let labels = w
        .cells
        .iter()
        .map(|d| {
            Ok(CellDigest {
                label: d.cell.to_label()?,
                genus_cones: d.genus_cones,
                genus_euler: d.genus_euler,
                punctures: d.punctures,
                zeros: d
                    .zeros
                    .iter()
                    .map(|z| ZeroDigest {
                        tip: z.tip,
                        strips: z.strips,
                    })
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>, DocError>>()?;
    if w.h != 2 * w.g + w.m {
        return Err(Violation::Other(format!("h = {} but 2g + m = {}", w.h, 2 * w.g + w.m)).into());
    }
    if w.sequences != sigma_sequences.len() || w.labels != labels.len() {
        return Err(Violation::Other("report totals do not match its lists".into()).into());
    }
    Ok(CensusReport {
        g: w.g,
        m: w.m,
        h: w.h,
        method,
        candidates: u128::from(w.candidates),
        sigma_sequences,
        labels,
        saddle_degenerate: w.saddle_degenerate,
        saddle_examples,
    })
}

fn report_to_wire(r: &CensusReport) -> ReportWire {
    ReportWire {
        g: r.g,
        m: r.m,
        h: r.h,
        method: r.method.to_string(),
        candidates: u64::try_from(r.candidates).unwrap_or(u64::MAX),
        sequences: r.total_sequences(),
        labels: r.total_labels(),
        saddle_degenerate: r.saddle_degenerate,
        sigma_sequences: sequences_to_wire(&r.sigma_sequences),
        cells: r
            .labels
            .iter()
            .map(|d| DigestWire {
                cell: CellWire::from_label(&d.label),
                genus_cones: d.genus_cones,
                genus_euler: d.genus_euler,
                punctures: d.punctures,
                zeros: d
                    .zeros
                    .iter()
                    .map(|z| ZeroWire {
                        tip: z.tip,
                        strips: z.strips,
                    })
                    .collect(),
            })
            .collect(),
        saddle_examples: sequences_to_wire(&r.saddle_examples),
    }
}

fn periods_from_wire(w: PeriodsWire) -> Result<PeriodMatrix, DocError> {
    let n = w.entries.len();
    let entries = w
        .entries
        .iter()
        .enumerate()
        .map(|(k, row)| {
            if row.len() != n {
                return Err(Violation::Other(format!("row {k} has {} entries, expected {n}", row.len())).into());
            }
            row.iter()
                .enumerate()
                .map(|(l, z)| {
                    Ok(ComplexRational::new(
                        rational_at(&z.re, format!("payload.entries[{k}][{l}].re"))?,
                        rational_at(&z.im, format!("payload.entries[{k}][{l}].im"))?,
                    ))
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<_>>, DocError>>()?;
    Ok(PeriodMatrix { entries })
}

fn periods_to_wire(p: &PeriodMatrix) -> PeriodsWire {
    PeriodsWire {
        entries: p
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|z| ComplexWire {
                        re: format_rational(&z.re),
                        im: format_rational(&z.im),
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Parses and validates a document of any kind.
pub fn read(text: &str) -> Result<Document, DocError> {
    let env = parse_envelope(text)?;
    let object = match env.kind {
        Kind::Cell => Object::Cell(from_payload::<CellWire>(env.payload)?.to_label()?),
        Kind::Domain => Object::Domain(from_payload::<DomainWire>(env.payload)?.to_domain()?),
        Kind::Grid => Object::Grid(grid_from_wire(from_payload(env.payload)?)?),
        Kind::Report => Object::Report(report_from_wire(from_payload(env.payload)?)?),
        Kind::Periods => Object::Periods(periods_from_wire(from_payload(env.payload)?)?),
    };
    Ok(Document {
        object,
        notes: env.notes,
    })
}

/// Reads a domain document without normalizing or checking its coordinates,
/// so that degenerate slit data can still be diagnosed. The cell label is
/// validated.
pub fn read_slit_data(text: &str) -> Result<SlitData, DocError> {
    let env = parse_envelope(text)?;
    if env.kind != Kind::Domain {
        return Err(DocError::WrongKind {
            expected: "domain".into(),
            found: env.kind,
        });
    }
    let wire: DomainWire = from_payload(env.payload)?;
    wire.cell.to_label()?;
    let (a, b) = wire.coordinates()?;
    Ok(SlitData {
        cell: wire.cell.to_candidate()?,
        a,
        b,
    })
}

/// Peeks at the kind without validating the payload.
pub fn kind_of(text: &str) -> Result<Kind, DocError> {
    Ok(parse_envelope(text)?.kind)
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn write(doc: &Document) -> String {
    let payload = match &doc.object {
        Object::Cell(l) => serde_json::to_value(CellWire::from_label(l)),
        Object::Domain(x) => serde_json::to_value(DomainWire {
            cell: CellWire::from_label(x.label()),
            a: x.coords().a().iter().map(format_rational).collect(),
            b: x.coords().b().iter().map(format_rational).collect(),
        }),
        Object::Grid(g) => serde_json::to_value(grid_to_wire(g)),
        Object::Report(r) => serde_json::to_value(report_to_wire(r)),
        Object::Periods(p) => serde_json::to_value(periods_to_wire(p)),
    }
    .expect("wire types serialize");
    let env = Envelope {
        format: FORMAT.into(),
        version: VERSION,
        kind: doc.object.kind(),
        payload,
        notes: doc.notes.clone(),
    };
    let mut out = serde_json::to_string_pretty(&env).expect("envelope serializes");
    out.push('\n');
    out
}

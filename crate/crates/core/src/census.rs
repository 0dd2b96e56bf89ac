//! Enumeration of the top-dimensional cells of `Par(g, 1, m)` for small `h`.
//!
//! Candidates are generated either by brute force over all permutation
//! sequences with `σ_i(2h) = 0`, or by stepping `σ_i = τ_i σ_{i-1}` with
//! transpositions `τ_i` fixing 0. Either way each candidate is glued at the
//! sample coordinates `a_i = -i`, `b_j = j` and kept only if both genus
//! computations give `g`, there are `m` log ends, and the surface is generic.
//!
//! A cheap screen on the permutations alone (one transposition per wall,
//! separatrices that escape to the left) discards most candidates before
//! anything is glued. Only survivors go through the surface checks.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::perm::Permutation;
use crate::rational::int;
use crate::slit::{normalize, validate_cell_label, CellCandidate, CellLabel, ParallelSlitDomain};
use crate::surface::{
    cone_points, ends, genus_via_cones, genus_via_euler, glue, is_generic, Diagnosis,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Stepped,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Stepped => "stepped",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "stepped" => Ok(Method::Stepped),
            other => Err(format!("unknown census method {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusConfig {
    /// Largest candidate space (number of permutation sequences) searched.
    pub max_candidates: u128,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self { max_candidates: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("h = 2g + m must be at least 1")]
    EmptyCell,
    #[error("{method} search over {candidates} candidates exceeds the bound {bound}")]
    TooLarge {
        method: Method,
        candidates: u128,
        bound: u128,
    },
}

/// Zero sitting on the wall `x = a_tip`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroDigest {
    /// 1-based index `i` of the tip coordinate `a_i`.
    pub tip: usize,
    /// Strips whose bottom-left corner lies on the zero.
    pub strips: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDigest {
    pub label: CellLabel,
    pub genus_cones: usize,
    pub genus_euler: usize,
    pub punctures: usize,
    pub zeros: Vec<ZeroDigest>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub g: usize,
    pub m: usize,
    pub h: usize,
    pub method: Method,
    /// Size of the candidate space that was searched.
    pub candidates: u128,
    /// Accepted permutation sequences, before puncture labelling.
    pub sigma_sequences: Vec<Vec<Permutation>>,
    /// Every accepted label, one per puncture labelling, sorted.
    pub labels: Vec<CellDigest>,
    /// Number of sequences with one simple zero per wall whose separatrices
    /// join two zeros. Not counted as cells.
    pub saddle_degenerate: usize,
    /// The first few of those, in enumeration order.
    pub saddle_examples: Vec<Vec<Permutation>>,
}

impl CensusReport {
    pub fn total_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn total_sequences(&self) -> usize {
        self.sigma_sequences.len()
    }
}

/// Canonical sample coordinates `a_i = -i`, `b_j = j`, normalized.
pub fn sample_domain(label: CellLabel) -> ParallelSlitDomain {
    let h = label.h();
    let a: Vec<_> = (1..=h as i64).map(|i| int(-i)).collect();
    let b: Vec<_> = (1..=2 * h as i64).map(int).collect();
    ParallelSlitDomain::new(label, normalize(&a, &b).expect("strict")).expect("lengths match")
}

enum Verdict {
    Accepted(CellLabel),
    Saddle,
    Rejected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Screen {
    Candidate,
    Saddle,
    Reject,
}

/// Permutation-level pre-screen: one simple zero per wall and leftward
/// separatrices that reach `-inf`. Survivors are re-checked on the glued
/// surface by [`verify`].
fn screen(m: usize, sigmas: &[Permutation]) -> Screen {
    let h = sigmas.len() - 1;
    if sigmas[h].cycle_count() != m + 1 {
        return Screen::Reject;
    }
    // zero on the wall x = a_i, i = 1..h: support of σ_{i-1} σ_i⁻¹
    let mut zero_strips = Vec::with_capacity(h);
    for i in 1..=h {
        let inv = sigmas[i].inverse();
        let moved: Vec<usize> = (0..sigmas[i].len())
            .filter(|&s| sigmas[i - 1].apply(inv.apply(s)) != s)
            .collect();
        if moved.len() != 2 {
            return Screen::Reject;
        }
        zero_strips.push([moved[0], moved[1]]);
    }
    for i in 1..=h {
        let inv = sigmas[i].inverse();
        for &p in &zero_strips[i - 1] {
            let strip = inv.apply(p);
            for column in i..h {
                if zero_strips[column].contains(&sigmas[column].apply(strip)) {
                    return Screen::Saddle;
                }
            }
        }
    }
    Screen::Candidate
}

fn verify(g: usize, m: usize, sigmas: &[Permutation]) -> Verdict {
    match screen(m, sigmas) {
        Screen::Reject => return Verdict::Rejected,
        Screen::Saddle => return Verdict::Saddle,
        Screen::Candidate => {}
    }
    full_verify(g, m, sigmas)
}

/// Glues the candidate at the sample coordinates and checks genus (both
/// ways), log ends and genericity on the surface itself.
fn full_verify(g: usize, m: usize, sigmas: &[Permutation]) -> Verdict {
    let h = 2 * g + m;
    let last = &sigmas[h];
    if last.cycle_count() != m + 1 {
        return Verdict::Rejected;
    }
    let mut nu = vec![last.cycle_of(0)];
    nu.extend(last.cycles().into_iter().filter(|c| !c.contains(&0)));
    let Ok(label) = validate_cell_label(&CellCandidate {
        g,
        m,
        sigmas: sigmas.iter().map(|s| s.as_slice().to_vec()).collect(),
        nu,
    }) else {
        return Verdict::Rejected;
    };
    let grid = glue(&sample_domain(label.clone()));
    let type_ok = genus_via_cones(&grid) == Ok(g)
        && genus_via_euler(&grid) == Ok(g)
        && ends(&grid).map(|e| e.m()) == Ok(m);
    if !type_ok {
        return Verdict::Rejected;
    }
    match is_generic(&grid).diagnosis {
        Diagnosis::Generic => Verdict::Accepted(label),
        Diagnosis::SaddleConnection { .. } => Verdict::Saddle,
        _ => Verdict::Rejected,
    }
}

/// Every labelling of the `m` left cylinders of an accepted sequence.
fn labellings(label: &CellLabel) -> Vec<CellLabel> {
    let nu = label.nu();
    let rest: Vec<Vec<usize>> = nu[1..].to_vec();
    let m = rest.len();
    rest.into_iter()
        .permutations(m)
        .map(|order| {
            let mut c = label.to_candidate();
            c.nu = std::iter::once(nu[0].clone()).chain(order).collect();
            validate_cell_label(&c).expect("relabelling keeps validity")
        })
        .collect()
}

fn digest(label: CellLabel) -> CellDigest {
    let h = label.h();
    let grid = glue(&sample_domain(label.clone()));
    let cones = cone_points(&grid).expect("verified");
    let mut zeros: Vec<ZeroDigest> = cones
        .zeros()
        .map(|z| {
            let bl = z.bottom_left_strips();
            ZeroDigest {
                tip: h - z.wall,
                strips: [bl[0], bl[1]],
            }
        })
        .collect();
    zeros.sort();
    CellDigest {
        genus_cones: genus_via_cones(&grid).expect("verified"),
        genus_euler: genus_via_euler(&grid).expect("verified"),
        punctures: ends(&grid).expect("verified").punctures.len(),
        zeros,
        label,
    }
}

fn step_choices(method: Method, h: usize) -> Vec<Permutation> {
    let n = 2 * h + 1;
    match method {
        Method::Brute => (1..n)
            .permutations(n - 1)
            .map(|mut v| {
                v.push(0);
                Permutation::from_one_line(v).unwrap()
            })
            .collect(),
        Method::Stepped => (1..n)
            .tuple_combinations()
            .map(|(p, q)| Permutation::transposition(n, p, q))
            .collect(),
    }
}

const SADDLE_EXAMPLES: usize = 8;

type Hit = (u64, Option<(Vec<Permutation>, CellLabel)>);

pub fn candidate_count(method: Method, h: usize) -> u128 {
    let n = 2 * h as u128;
    let per_step: u128 = match method {
        Method::Brute => (1..=n).product(),
        Method::Stepped => n * (n - 1) / 2,
    };
    per_step.checked_pow(h as u32).unwrap_or(u128::MAX)
}

pub fn enumerate_cells(g: usize, m: usize, method: Method) -> Result<CensusReport, CensusError> {
    enumerate_cells_with(g, m, method, &CensusConfig::default())
}

pub fn enumerate_cells_with(
    g: usize,
    m: usize,
    method: Method,
    config: &CensusConfig,
) -> Result<CensusReport, CensusError> {
    let h = 2 * g + m;
    if h == 0 {
        return Err(CensusError::EmptyCell);
    }
    let candidates = candidate_count(method, h);
    if candidates > config.max_candidates {
        return Err(CensusError::TooLarge {
            method,
            candidates,
            bound: config.max_candidates,
        });
    }
    let choices = step_choices(method, h);
    let base = choices.len() as u64;
    let sigma0 = Permutation::long_cycle(2 * h + 1);
    let decode = |mut index: u64| -> Vec<Permutation> {
        let mut sigmas = Vec::with_capacity(h + 1);
        sigmas.push(sigma0.clone());
        for _ in 0..h {
            let pick = &choices[(index % base) as usize];
            index /= base;
            let next = match method {
                Method::Brute => pick.clone(),
                Method::Stepped => pick.compose(sigmas.last().unwrap()),
            };
            sigmas.push(next);
        }
        sigmas
    };

    // candidate index, and the sequence with its label unless it was a saddle
    let results: Vec<Hit> = (0..candidates as u64)
        .into_par_iter()
        .filter_map(|index| {
            let sigmas = decode(index);
            match verify(g, m, &sigmas) {
                Verdict::Rejected => None,
                Verdict::Saddle => Some((index, None)),
                Verdict::Accepted(label) => Some((index, Some((sigmas, label)))),
            }
        })
        .collect();

    let mut sigma_sequences = Vec::new();
    let mut accepted = Vec::new();
    let mut saddle_degenerate = 0;
    let mut saddle_examples = Vec::new();
    for (index, hit) in results {
        match hit {
            Some((sigmas, label)) => {
                sigma_sequences.push(sigmas);
                accepted.push(label);
            }
            None => {
                saddle_degenerate += 1;
                if saddle_examples.len() < SADDLE_EXAMPLES {
                    saddle_examples.push(decode(index));
                }
            }
        }
    }
    sigma_sequences.sort();
    sigma_sequences.dedup();

    let mut labels: Vec<CellLabel> = accepted.iter().flat_map(labellings).collect();
    labels.sort();
    labels.dedup();
    let labels = labels.into_par_iter().map(digest).collect();

    Ok(CensusReport {
        g,
        m,
        h,
        method,
        candidates,
        sigma_sequences,
        labels,
        saddle_degenerate,
        saddle_examples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_for_h1() {
        let r = enumerate_cells(0, 1, Method::Brute).unwrap();
        assert_eq!(r.candidates, 2);
        assert_eq!(r.total_labels(), 1);
        assert_eq!(r.labels[0].label.sigma(1).as_slice(), &[2, 1, 0]);
        assert_eq!(r.labels[0].zeros, vec![ZeroDigest { tip: 1, strips: [1, 2] }]);
    }

    #[test]
    fn candidate_space_sizes() {
        assert_eq!(candidate_count(Method::Brute, 2), 576);
        assert_eq!(candidate_count(Method::Stepped, 2), 36);
        assert_eq!(candidate_count(Method::Stepped, 4), 614_656);
    }

    #[test]
    fn oversized_search_is_refused() {
        let err = enumerate_cells(1, 1, Method::Brute).unwrap_err();
        assert!(matches!(err, CensusError::TooLarge { .. }));
    }

    #[test]
    fn screen_agrees_with_surface_checks() {
        for h in 1..=2usize {
            for sigmas in (0..candidate_count(Method::Brute, h) as usize).map(|i| {
                let choices = step_choices(Method::Brute, h);
                let mut v = vec![Permutation::long_cycle(2 * h + 1)];
                let mut idx = i;
                for _ in 0..h {
                    v.push(choices[idx % choices.len()].clone());
                    idx /= choices.len();
                }
                v
            }) {
                for g in 0..=h / 2 {
                    let m = h - 2 * g;
                    let full = match full_verify(g, m, &sigmas) {
                        Verdict::Accepted(_) => Screen::Candidate,
                        Verdict::Saddle => Screen::Saddle,
                        Verdict::Rejected => Screen::Reject,
                    };
                    let quick = screen(m, &sigmas);
                    if quick == Screen::Candidate || full == Screen::Candidate {
                        assert_eq!(quick, full, "{sigmas:?}");
                    }
                    if full == Screen::Saddle {
                        assert_eq!(quick, Screen::Saddle, "{sigmas:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn brute_and_stepped_agree_for_h2() {
        for (g, m) in [(1, 0), (0, 2)] {
            let brute = enumerate_cells(g, m, Method::Brute).unwrap();
            let stepped = enumerate_cells(g, m, Method::Stepped).unwrap();
            assert_eq!(brute.labels, stepped.labels);
            assert_eq!(brute.sigma_sequences, stepped.sigma_sequences);
            assert!(brute.saddle_degenerate > 0);
            assert_eq!(brute.saddle_degenerate, stepped.saddle_degenerate);
        }
    }
}

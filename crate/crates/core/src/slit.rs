//! Combinatorial and coordinate data of a parallel slit domain: a point in a
//! top-dimensional cell of `Par(g, 1, m)`.
//!
//! Index conventions follow the cell description: permutations act on
//! `{0, .., 2h}`, `sigmas[0]` belongs to the rightmost column, and strip `j`
//! lies between levels `b_j` and `b_{j+1}` (with `b_0 = -inf`,
//! `b_{2h+1} = +inf`).

use std::fmt;

use crate::perm::{canonical_cycle, Permutation};
use crate::rational::Rational;

/// Unchecked cell data, as read from a document or produced by a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCandidate {
    pub g: usize,
    pub m: usize,
    /// `σ_0, .., σ_h` in one-line form.
    pub sigmas: Vec<Vec<usize>>,
    /// `nu[k]` is the cycle of `σ_h` carrying puncture `k` (0 is the dipole end).
    pub nu: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CellError {
    #[error("h = 2g + m must be at least 1")]
    EmptyCell,
    #[error("expected {expected} permutations, found {found}")]
    WrongSigmaCount { expected: usize, found: usize },
    #[error("sigma_{index}: {reason}")]
    NotAPermutation { index: usize, reason: String },
    #[error("sigma_0 must be j -> j+1 (j < 2h), 2h -> 0")]
    BadSigmaZero,
    #[error("sigma_{index}(2h) = {value}, expected 0")]
    Fixed2hViolated { index: usize, value: usize },
    #[error("sigma_h has {found} cycles, expected m + 1 = {expected}")]
    CycleCountMismatch { expected: usize, found: usize },
    #[error("nu is not a labelling of the cycles of sigma_h: {0}")]
    NuMismatch(String),
}

/// A checked cell label. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellLabel {
    g: usize,
    m: usize,
    sigmas: Vec<Permutation>,
    nu: Vec<Vec<usize>>,
}

impl CellLabel {
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of marked directions; always 1 here.
    pub fn n(&self) -> usize {
        1
    }

    pub fn h(&self) -> usize {
        2 * self.g + self.m
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigmas
    }

    pub fn sigma(&self, i: usize) -> &Permutation {
        &self.sigmas[i]
    }

    /// Cycles of `σ_h`, indexed by puncture label, each starting at its minimum.
    pub fn nu(&self) -> &[Vec<usize>] {
        &self.nu
    }

    /// Puncture label of the left end containing strip `j`.
    pub fn label_of_strip(&self, j: usize) -> usize {
        self.nu
            .iter()
            .position(|c| c.contains(&j))
            .expect("nu covers every strip")
    }

    pub fn to_candidate(&self) -> CellCandidate {
        CellCandidate {
            g: self.g,
            m: self.m,
            sigmas: self.sigmas.iter().map(|s| s.as_slice().to_vec()).collect(),
            nu: self.nu.clone(),
        }
    }
}

/// Checks every cell-label invariant and returns the validated label.
pub fn validate_cell_label(c: &CellCandidate) -> Result<CellLabel, CellError> {
    let h = 2 * c.g + c.m;
    if h == 0 {
        return Err(CellError::EmptyCell);
    }
    if c.sigmas.len() != h + 1 {
        return Err(CellError::WrongSigmaCount {
            expected: h + 1,
            found: c.sigmas.len(),
        });
    }
    let n = 2 * h + 1;
    let mut sigmas = Vec::with_capacity(h + 1);
    for (index, raw) in c.sigmas.iter().enumerate() {
        if raw.len() != n {
            return Err(CellError::NotAPermutation {
                index,
                reason: format!("length {} instead of {n}", raw.len()),
            });
        }
        let p = Permutation::from_one_line(raw.clone()).map_err(|e| CellError::NotAPermutation {
            index,
            reason: e.to_string(),
        })?;
        sigmas.push(p);
    }
    if sigmas[0] != Permutation::long_cycle(n) {
        return Err(CellError::BadSigmaZero);
    }
    for (index, s) in sigmas.iter().enumerate() {
        if s.apply(2 * h) != 0 {
            return Err(CellError::Fixed2hViolated {
                index,
                value: s.apply(2 * h),
            });
        }
    }
    let last = &sigmas[h];
    let cycles = last.cycles();
    if cycles.len() != c.m + 1 {
        return Err(CellError::CycleCountMismatch {
            expected: c.m + 1,
            found: cycles.len(),
        });
    }
    if c.nu.len() != c.m + 1 {
        return Err(CellError::NuMismatch(format!(
            "{} labels given for {} cycles",
            c.nu.len(),
            c.m + 1
        )));
    }
    let mut nu = Vec::with_capacity(c.nu.len());
    let mut used = vec![false; cycles.len()];
    for (k, raw) in c.nu.iter().enumerate() {
        if raw.is_empty() || raw.iter().any(|&v| v >= n) {
            return Err(CellError::NuMismatch(format!("label {k}: {raw:?} is not a cycle")));
        }
        let canon = canonical_cycle(raw.clone());
        let Some(pos) = cycles.iter().position(|cy| *cy == canon) else {
            return Err(CellError::NuMismatch(format!(
                "label {k}: {raw:?} is not a cycle of sigma_{h}"
            )));
        };
        if used[pos] {
            return Err(CellError::NuMismatch(format!("cycle {canon:?} labelled twice")));
        }
        used[pos] = true;
        nu.push(canon);
    }
    if !nu[0].contains(&0) {
        return Err(CellError::NuMismatch(
            "label 0 must be the cycle containing 0".into(),
        ));
    }
    Ok(CellLabel {
        g: c.g,
        m: c.m,
        sigmas,
        nu,
    })
}

/// Real dimension of the cell, `(h - 1) + (2h - 1)`.
pub fn cell_dimension(label: &CellLabel) -> usize {
    cell_dimension_for(label.g(), label.m())
}

/// Same count from `(g, m)`; panics when `h = 0`.
pub fn cell_dimension_for(g: usize, m: usize) -> usize {
    let h = 2 * g + m;
    assert!(h >= 1);
    (h - 1) + (2 * h - 1)
}

/// Dimension of the moduli space of dipole differentials with one direction,
/// `6g - 6 + 5n + 3m - 1` at `n = 1`. Signed because it is negative for the
/// excluded `(0, 0)`.
pub fn moduli_dimension(g: usize, m: usize) -> i64 {
    let n = 1;
    6 * g as i64 - 6 + 5 * n + 3 * m as i64 - 1
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoordError {
    #[error("{which} is not strictly ordered at index {index}")]
    NotStrict { which: &'static str, index: usize },
    #[error("empty coordinate sequence {0}")]
    Empty(&'static str),
    #[error("expected {expected} {which}-values, found {found}")]
    LengthMismatch {
        which: &'static str,
        expected: usize,
        found: usize,
    },
}

/// Slit tips `a_1 > .. > a_h` and slit levels `b_1 < .. < b_2h`, translated so
/// that `a_1 = b_1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlitCoordinates {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl SlitCoordinates {
    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }
}

/// Checks strictness and picks the representative with `a_1 = b_1 = 0`.
pub fn normalize(a: &[Rational], b: &[Rational]) -> Result<SlitCoordinates, CoordError> {
    if a.is_empty() {
        return Err(CoordError::Empty("a"));
    }
    if b.is_empty() {
        return Err(CoordError::Empty("b"));
    }
    if let Some(index) = a.windows(2).position(|w| w[0] <= w[1]) {
        return Err(CoordError::NotStrict { which: "a", index: index + 1 });
    }
    if let Some(index) = b.windows(2).position(|w| w[0] >= w[1]) {
        return Err(CoordError::NotStrict { which: "b", index: index + 1 });
    }
    let a0 = a[0].clone();
    let b0 = b[0].clone();
    Ok(SlitCoordinates {
        a: a.iter().map(|v| v - &a0).collect(),
        b: b.iter().map(|v| v - &b0).collect(),
    })
}

/// A point of a top-dimensional cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParallelSlitDomain {
    label: CellLabel,
    coords: SlitCoordinates,
}

impl ParallelSlitDomain {
    pub fn new(label: CellLabel, coords: SlitCoordinates) -> Result<Self, CoordError> {
        let h = label.h();
        if coords.a.len() != h {
            return Err(CoordError::LengthMismatch {
                which: "a",
                expected: h,
                found: coords.a.len(),
            });
        }
        if coords.b.len() != 2 * h {
            return Err(CoordError::LengthMismatch {
                which: "b",
                expected: 2 * h,
                found: coords.b.len(),
            });
        }
        Ok(Self { label, coords })
    }

    pub fn label(&self) -> &CellLabel {
        &self.label
    }

    pub fn coords(&self) -> &SlitCoordinates {
        &self.coords
    }

    pub fn h(&self) -> usize {
        self.label.h()
    }
}

impl fmt::Display for ParallelSlitDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, m={}) sigmas:", self.label.g, self.label.m)?;
        for s in &self.label.sigmas {
            write!(f, " {s}")?;
        }
        f.write_str(" a:")?;
        for v in &self.coords.a {
            write!(f, " {v}")?;
        }
        f.write_str(" b:")?;
        for v in &self.coords.b {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn h1_candidate(sigma1: Vec<usize>) -> CellCandidate {
        CellCandidate {
            g: 0,
            m: 1,
            sigmas: vec![vec![1, 2, 0], sigma1],
            nu: vec![vec![0, 2], vec![1]],
        }
    }

    #[test]
    fn h1_label_is_valid() {
        let label = validate_cell_label(&h1_candidate(vec![2, 1, 0])).unwrap();
        assert_eq!(label.h(), 1);
        assert_eq!(label.nu(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn h1_brute_force_has_exactly_one_sigma() {
        // both sigma_1 in S_3 with sigma_1(2) = 0
        let ok: Vec<_> = [vec![1, 2, 0], vec![2, 1, 0]]
            .into_iter()
            .filter(|s| validate_cell_label(&h1_candidate(s.clone())).is_ok())
            .collect();
        assert_eq!(ok, vec![vec![2, 1, 0]]);
    }

    #[test]
    fn single_cycle_sigma_is_rejected_for_m1() {
        let err = validate_cell_label(&h1_candidate(vec![1, 2, 0])).unwrap_err();
        assert_eq!(err, CellError::CycleCountMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn sigma_must_send_2h_to_zero() {
        let err = validate_cell_label(&h1_candidate(vec![0, 2, 1])).unwrap_err();
        assert_eq!(err, CellError::Fixed2hViolated { index: 1, value: 1 });
    }

    #[test]
    fn sigma_zero_is_forced() {
        let mut c = h1_candidate(vec![2, 1, 0]);
        c.sigmas[0] = vec![2, 0, 1];
        assert_eq!(validate_cell_label(&c), Err(CellError::BadSigmaZero));
    }

    #[test]
    fn nu_zero_must_contain_zero() {
        let mut c = h1_candidate(vec![2, 1, 0]);
        c.nu = vec![vec![1], vec![0, 2]];
        assert!(matches!(validate_cell_label(&c), Err(CellError::NuMismatch(_))));
        c.nu = vec![vec![2, 0], vec![2, 0]];
        assert!(matches!(validate_cell_label(&c), Err(CellError::NuMismatch(_))));
        // rotations of a cycle are accepted
        c.nu = vec![vec![2, 0], vec![1]];
        assert!(validate_cell_label(&c).is_ok());
    }

    #[test]
    fn dimensions_match_moduli_count() {
        assert_eq!(cell_dimension_for(0, 1), 1);
        assert_eq!(cell_dimension_for(2, 0), 10);
        assert_eq!(cell_dimension_for(1, 1), 7);
        for g in 0..4 {
            for m in 0..7 {
                if 2 * g + m == 0 {
                    continue;
                }
                assert_eq!(cell_dimension_for(g, m) as i64, moduli_dimension(g, m));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let c = normalize(&[int(3)], &[int(5), int(7)]).unwrap();
        assert_eq!(c.a(), &[int(0)]);
        assert_eq!(c.b(), &[int(0), int(2)]);
        assert_eq!(normalize(c.a(), c.b()).unwrap(), c);
        assert_eq!(
            normalize(&[int(0)], &[int(5), int(5)]),
            Err(CoordError::NotStrict { which: "b", index: 1 })
        );
        assert_eq!(
            normalize(&[int(0), int(0)], &[int(0), int(1)]),
            Err(CoordError::NotStrict { which: "a", index: 1 })
        );
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_order_preserving(
            a in proptest::collection::btree_set(-50i64..50, 1..5),
            b in proptest::collection::btree_set(-50i64..50, 1..9),
        ) {
            let a: Vec<Rational> = a.into_iter().rev().map(int).collect();
            let b: Vec<Rational> = b.into_iter().map(int).collect();
            let n1 = normalize(&a, &b).unwrap();
            let n2 = normalize(n1.a(), n1.b()).unwrap();
            prop_assert_eq!(&n1, &n2);
            prop_assert!(n1.a().windows(2).all(|w| w[0] > w[1]));
            prop_assert!(n1.b().windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(&n1.a()[0], &int(0));
            prop_assert_eq!(&n1.b()[0], &int(0));
        }
    }
}

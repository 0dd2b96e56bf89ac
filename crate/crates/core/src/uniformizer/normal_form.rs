use super::critical::{trace_critical_graph, TraceError};
use super::develop::{develop, DevelopError, Development};
use crate::rational::{int, ComplexRational, ExtRational, Rational};
use crate::slit::{
    normalize, validate_cell_label, CellCandidate, CellError, CoordError, ParallelSlitDomain,
};
use crate::surface::{ends, glue, is_generic, Diagnosis, GluedGrid, SurfaceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UniformizeError {
    #[error("surface is not generic: {0:?}")]
    NonGeneric(Diagnosis),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Develop(#[from] DevelopError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("reconstructed cell is invalid: {0}")]
    Cell(#[from] CellError),
    #[error("reconstructed coordinates are invalid: {0}")]
    Coord(#[from] CoordError),
    #[error("slit picture is inconsistent: {0}")]
    Reconstruction(String),
}

/// Everything computed on the way to the normal form.
#[derive(Debug, Clone)]
pub struct Uniformization {
    pub domain: ParallelSlitDomain,
    /// The presentation after fake walls were merged; `development` refers to it.
    pub grid: GluedGrid,
    pub development: Development,
}

/// The Hilbert-uniformization of a generic grid: its parallel slit domain.
pub fn uniformize(grid: &GluedGrid) -> Result<ParallelSlitDomain, UniformizeError> {
    uniformize_full(grid).map(|u| u.domain)
}

pub fn uniformize_full(grid: &GluedGrid) -> Result<Uniformization, UniformizeError> {
    let grid = grid.merge_fake_walls();
    ends(&grid)?;
    let genericity = is_generic(&grid);
    if !genericity.is_generic() {
        return Err(UniformizeError::NonGeneric(genericity.diagnosis));
    }
    let k = trace_critical_graph(&grid)?;
    let dev = develop(&grid, &k)?;

    let h = k.zeros.len();
    // tips, right to left
    let mut a: Vec<Rational> = k.zeros.iter().map(|z| z.x.clone()).collect();
    a.sort_by(|x, y| y.cmp(x));
    a.dedup();
    if a.len() != h {
        return Err(UniformizeError::NonGeneric(Diagnosis::NonSimpleOrColocated {
            wall: k.zeros[0].wall,
        }));
    }

    let mut b: Vec<Rational> = dev.banks.iter().map(|bk| bk.lower.clone()).collect();
    b.sort();
    b.dedup();
    if b.len() != 2 * h {
        return Err(UniformizeError::NonGeneric(Diagnosis::CoincidentLevels));
    }
    let mut uppers: Vec<Rational> = dev.banks.iter().map(|bk| bk.upper.clone()).collect();
    uppers.sort();
    if uppers != b {
        return Err(UniformizeError::Reconstruction(
            "upper banks do not sit on the slit levels".into(),
        ));
    }
    for (zi, images) in dev.zero_images.iter().enumerate() {
        if images.len() != 2 {
            return Err(UniformizeError::Reconstruction(format!(
                "zero {zi} has {} developed images, expected 2",
                images.len()
            )));
        }
        let tips: Vec<&Rational> = k
            .rays
            .iter()
            .zip(&dev.banks)
            .filter(|(r, _)| r.zero == zi)
            .map(|(_, bk)| &bk.lower)
            .collect();
        if tips.len() != 2 || !tips.iter().all(|y| images.iter().any(|(_, iy)| iy == *y)) {
            return Err(UniformizeError::Reconstruction(format!(
                "slit tips of zero {zi} do not match its developed images"
            )));
        }
    }

    // cell column i spans [a_{i+1}, a_i]; sample an interior abscissa
    let sample_x = |i: usize| -> Rational {
        match (i, i == h) {
            (0, _) => &a[0] + int(1),
            (_, true) => &a[h - 1] - int(1),
            _ => (&a[i] + &a[i - 1]) / int(2),
        }
    };
    let level_index = |y: &Rational| b.iter().position(|v| v == y);

    let n = 2 * h + 1;
    let mut sigmas = Vec::with_capacity(h + 1);
    for i in 0..=h {
        let x = sample_x(i);
        let mut sigma = vec![0usize; n];
        for (j, level) in b.iter().enumerate() {
            let (c, s) = dev.locate_below(&grid, &x, level).ok_or_else(|| {
                UniformizeError::Reconstruction(format!("nothing developed below ({x}, {level})"))
            })?;
            let (_, hi) = dev.y_extent(&grid, c, s);
            sigma[j] = if hi > ExtRational::Finite(level.clone()) {
                j + 1
            } else {
                let up = grid.perm(c).apply(s);
                let (lo, _) = dev.y_extent(&grid, c, up);
                let lo = lo.finite().cloned().ok_or_else(|| {
                    UniformizeError::Reconstruction("seam glued to an infinite bottom".into())
                })?;
                level_index(&lo).ok_or_else(|| {
                    UniformizeError::Reconstruction(format!("bank at {lo} is not a slit level"))
                })? + 1
            };
        }
        sigma[2 * h] = 0;
        sigmas.push(sigma);
    }

    // puncture labels: read the end label of each left cylinder through the development
    let last = crate::perm::Permutation::from_one_line(sigmas[h].clone())
        .map_err(|e| UniformizeError::Reconstruction(e.to_string()))?;
    let cycles = last.cycles();
    let x = sample_x(h);
    let strip_sample_y = |j: usize| -> Rational {
        if j == 0 {
            &b[0] - int(1)
        } else if j == 2 * h {
            &b[2 * h - 1] + int(1)
        } else {
            (&b[j - 1] + &b[j]) / int(2)
        }
    };
    let mut nu: Vec<Option<Vec<usize>>> = vec![None; cycles.len()];
    for cycle in &cycles {
        let mut label = None;
        for &j in cycle {
            let y = strip_sample_y(j);
            let (_, s) = dev.locate_above(&grid, &x, &y).ok_or_else(|| {
                UniformizeError::Reconstruction(format!("nothing developed at ({x}, {y})"))
            })?;
            let l = grid.end_labels()[s];
            if label.is_some_and(|prev| prev != l) {
                return Err(UniformizeError::Reconstruction(format!(
                    "left end {cycle:?} carries two labels"
                )));
            }
            label = Some(l);
        }
        let l = label.expect("cycles are non-empty");
        if l >= nu.len() || nu[l].is_some() {
            return Err(UniformizeError::Reconstruction(format!("end label {l} is not a bijection")));
        }
        nu[l] = Some(cycle.clone());
    }
    let nu: Vec<Vec<usize>> = nu.into_iter().map(|c| c.expect("every label assigned")).collect();

    let m = cycles.len() - 1;
    if m > h || (h - m) % 2 != 0 {
        return Err(UniformizeError::Reconstruction(format!(
            "{h} zeros are incompatible with {m} log ends"
        )));
    }
    let label = validate_cell_label(&CellCandidate {
        g: (h - m) / 2,
        m,
        sigmas,
        nu,
    })?;
    let coords = normalize(&a, &b)?;
    let domain = ParallelSlitDomain::new(label, coords)?;
    Ok(Uniformization {
        domain,
        grid,
        development: dev,
    })
}

/// Glues raw slit data and uniformizes it. Tied tips or levels describe a
/// lower-dimensional cell and are reported as non-generic.
pub fn uniformize_slit_data(
    cell: &CellCandidate,
    a: &[Rational],
    b: &[Rational],
) -> Result<ParallelSlitDomain, UniformizeError> {
    let label = validate_cell_label(cell)?;
    if b.windows(2).any(|w| w[0] == w[1]) {
        return Err(UniformizeError::NonGeneric(Diagnosis::CoincidentLevels));
    }
    if let Some(i) = a.windows(2).position(|w| w[0] == w[1]) {
        return Err(UniformizeError::NonGeneric(Diagnosis::NonSimpleOrColocated {
            wall: label.h() - 2 - i,
        }));
    }
    let coords = normalize(a, b)?;
    let x = ParallelSlitDomain::new(label, coords)?;
    uniformize(&glue(&x))
}

/// `z_{k,l}` for zeros numbered right to left (zero 1 has the largest critical value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodMatrix {
    /// `entries[k][l]` is `z_{k+1, l+1}`.
    pub entries: Vec<Vec<ComplexRational>>,
}

impl PeriodMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, k: usize, l: usize) -> &ComplexRational {
        &self.entries[k][l]
    }
}

/// Integrals of `dz` between zeros inside the cut surface.
///
/// Each zero is entered through the tip of its upper slit. `z_{k,k}` is the
/// difference between the upper and the lower tip of zero `k`.
pub fn periods(dev: &Development) -> PeriodMatrix {
    let zeros = &dev.graph().zeros;
    let mut order: Vec<usize> = (0..zeros.len()).collect();
    order.sort_by(|&i, &j| zeros[j].x.cmp(&zeros[i].x));
    let point = |(x, y): &(Rational, Rational)| ComplexRational::new(x.clone(), y.clone());
    let access: Vec<ComplexRational> = order
        .iter()
        .map(|&i| point(dev.zero_images[i].last().expect("zero has images")))
        .collect();
    let lower: Vec<ComplexRational> = order
        .iter()
        .map(|&i| point(dev.zero_images[i].first().expect("zero has images")))
        .collect();
    let n = order.len();
    let entries = (0..n)
        .map(|k| {
            (0..n)
                .map(|l| {
                    if k == l {
                        &access[k] - &lower[k]
                    } else {
                        &access[l] - &access[k]
                    }
                })
                .collect()
        })
        .collect();
    PeriodMatrix { entries }
}

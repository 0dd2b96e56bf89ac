//! Random generic slit domains, for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::Permutation;
use crate::rational::{int, ratio, Rational};
use crate::slit::{normalize, validate_cell_label, CellCandidate, CellLabel, ParallelSlitDomain};
use crate::surface::{glue, is_generic};

/// `σ_1 .. σ_h` obtained by successive left multiplication with random
/// transpositions fixing 0, and a random puncture labelling.
pub fn random_transposition_label(rng: &mut impl Rng, h: usize) -> CellLabel {
    assert!(h >= 1);
    let n = 2 * h + 1;
    let mut sigmas = vec![Permutation::long_cycle(n)];
    for _ in 0..h {
        let p = rng.gen_range(1..n);
        let mut q = rng.gen_range(1..n - 1);
        if q >= p {
            q += 1;
        }
        let tau = Permutation::transposition(n, p, q);
        let next = tau.compose(sigmas.last().unwrap());
        sigmas.push(next);
    }
    let cycles = sigmas[h].cycles();
    let m = cycles.len() - 1;
    let mut rest: Vec<Vec<usize>> = cycles.iter().filter(|c| !c.contains(&0)).cloned().collect();
    rest.shuffle(rng);
    let mut nu = vec![sigmas[h].cycle_of(0)];
    nu.extend(rest);
    validate_cell_label(&CellCandidate {
        g: (h - m) / 2,
        m,
        sigmas: sigmas.into_iter().map(Permutation::into_vec).collect(),
        nu,
    })
    .expect("transposition steps give a valid label")
}

fn random_positive(rng: &mut impl Rng) -> Rational {
    let den = rng.gen_range(1..=7i64);
    ratio(rng.gen_range(1..=4 * den), den)
}

/// Strictly decreasing `a` (length `h`) and strictly increasing `b` (length `2h`).
pub fn random_coordinates(rng: &mut impl Rng, h: usize) -> (Vec<Rational>, Vec<Rational>) {
    let mut a = vec![int(rng.gen_range(-5..=5))];
    for _ in 1..h {
        let next = a.last().unwrap() - random_positive(rng);
        a.push(next);
    }
    let mut b = vec![int(rng.gen_range(-5..=5))];
    for _ in 1..2 * h {
        let next = b.last().unwrap() + random_positive(rng);
        b.push(next);
    }
    (a, b)
}

/// A uniformly seeded generic domain with `h` slit pairs. Labels whose
/// separatrices run into another zero are resampled.
pub fn random_generic_domain(rng: &mut impl Rng, h: usize) -> ParallelSlitDomain {
    loop {
        let label = random_transposition_label(rng, h);
        let (a, b) = random_coordinates(rng, h);
        let coords = normalize(&a, &b).expect("strict by construction");
        let x = ParallelSlitDomain::new(label, coords).expect("lengths match");
        if is_generic(&glue(&x)).is_generic() {
            return x;
        }
    }
}

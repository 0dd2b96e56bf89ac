#![allow(dead_code)]

use parslit_core::sample::random_generic_domain;
use parslit_core::surface::{cross, Crossing, GluedGrid, Step};
use parslit_core::ParallelSlitDomain;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn domain(seed: u64, h: usize) -> ParallelSlitDomain {
    random_generic_domain(&mut ChaCha8Rng::seed_from_u64(seed), h)
}

/// Random walk over rectangle crossings, stopped at the first return to its
/// starting rectangle.
pub fn random_closed_loop(grid: &GluedGrid, seed: u64) -> Option<Vec<Crossing>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = (
        rng.gen_range(0..grid.num_columns()),
        rng.gen_range(0..grid.num_strips()),
    );
    let mut at = start;
    let mut path = Vec::new();
    for _ in 0..2000 {
        let step = [Step::Up, Step::Down, Step::Left, Step::Right][rng.gen_range(0..4)];
        let c = Crossing::new(at.0, at.1, step);
        if let Ok((next, _)) = cross(grid, c) {
            path.push(c);
            at = next;
            if at == start {
                return Some(path);
            }
        }
    }
    None
}

//! Equivalence-preserving rewrites of a grid presentation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;
use crate::rational::{int, ratio, ExtRational, Rational};
use crate::surface::{GluedGrid, Strip};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    FakeWall,
    SplitStrip,
    Relabel,
    Translate,
}

/// A random rational in `(0, 1)` with a small denominator.
fn unit_fraction(rng: &mut impl Rng) -> Rational {
    let den = rng.gen_range(2..=12i64);
    ratio(rng.gen_range(1..den), den)
}

/// A point strictly inside `(lo, hi)`.
fn point_inside(rng: &mut impl Rng, lo: &ExtRational, hi: &ExtRational) -> Rational {
    match (lo, hi) {
        (ExtRational::Finite(l), ExtRational::Finite(r)) => l + (r - l) * unit_fraction(rng),
        (ExtRational::NegInf, ExtRational::Finite(r)) => r - int(rng.gen_range(1..=3)) * unit_fraction(rng) * int(4),
        (ExtRational::Finite(l), ExtRational::PosInf) => l + int(rng.gen_range(1..=3)) * unit_fraction(rng) * int(4),
        _ => int(rng.gen_range(-5..=5)),
    }
}

/// Splits column `c` at an interior abscissa; both halves keep its gluing.
pub fn insert_fake_wall(grid: &GluedGrid, c: usize, x: Rational) -> GluedGrid {
    let mut walls = grid.walls().to_vec();
    let mut perms = grid.perms().to_vec();
    walls.insert(c, x);
    perms.insert(c, grid.perm(c).clone());
    GluedGrid::from_parts_unchecked(walls, grid.strips().to_vec(), perms, grid.end_labels().to_vec())
}

/// Cuts strip `s` at level `y`; the lower piece keeps index `s`, the upper
/// piece is appended and inherits every upward gluing of `s`.
pub fn split_strip(grid: &GluedGrid, s: usize, y: Rational) -> GluedGrid {
    let fresh = grid.num_strips();
    let mut strips = grid.strips().to_vec();
    let old = strips[s].clone();
    strips[s] = Strip::new(old.lo, ExtRational::Finite(y.clone()));
    strips.push(Strip::new(ExtRational::Finite(y), old.hi));
    let perms = grid
        .perms()
        .iter()
        .map(|p| {
            let mut v = p.as_slice().to_vec();
            v.push(v[s]);
            v[s] = fresh;
            Permutation::from_one_line(v).expect("split keeps a bijection")
        })
        .collect();
    let mut labels = grid.end_labels().to_vec();
    labels.push(labels[s]);
    GluedGrid::from_parts_unchecked(grid.walls().to_vec(), strips, perms, labels)
}

/// Renames strip `s` to `phi(s)` everywhere.
pub fn relabel_strips(grid: &GluedGrid, phi: &Permutation) -> GluedGrid {
    let n = grid.num_strips();
    let mut strips = vec![None; n];
    let mut labels = vec![0; n];
    for s in 0..n {
        strips[phi.apply(s)] = Some(grid.strip(s).clone());
        labels[phi.apply(s)] = grid.end_labels()[s];
    }
    let perms = grid.perms().iter().map(|p| p.conjugate_by(phi)).collect();
    GluedGrid::from_parts_unchecked(
        grid.walls().to_vec(),
        strips.into_iter().map(Option::unwrap).collect(),
        perms,
        labels,
    )
}

/// Moves the origin.
pub fn translate(grid: &GluedGrid, dx: &Rational, dy: &Rational) -> GluedGrid {
    let walls = grid.walls().iter().map(|w| w + dx).collect();
    let strips = grid
        .strips()
        .iter()
        .map(|s| Strip::new(s.lo.shifted(dy), s.hi.shifted(dy)))
        .collect();
    GluedGrid::from_parts_unchecked(walls, strips, grid.perms().to_vec(), grid.end_labels().to_vec())
}

pub fn apply_random_move(grid: &GluedGrid, mv: Move, rng: &mut impl Rng) -> GluedGrid {
    match mv {
        Move::FakeWall => {
            let c = rng.gen_range(0..grid.num_columns());
            let x = point_inside(rng, &grid.column_left(c), &grid.column_right(c));
            insert_fake_wall(grid, c, x)
        }
        Move::SplitStrip => {
            let s = rng.gen_range(0..grid.num_strips());
            let st = grid.strip(s);
            let y = point_inside(rng, &st.lo, &st.hi);
            split_strip(grid, s, y)
        }
        Move::Relabel => {
            let mut v: Vec<usize> = (0..grid.num_strips()).collect();
            v.shuffle(rng);
            relabel_strips(grid, &Permutation::from_one_line(v).unwrap())
        }
        Move::Translate => {
            let dx = int(rng.gen_range(-9..=9)) + unit_fraction(rng);
            let dy = int(rng.gen_range(-9..=9)) + unit_fraction(rng);
            translate(grid, &dx, &dy)
        }
    }
}

/// The moves `scramble` applies for a given seed, in order. Every kind occurs
/// at least once.
pub fn scramble_plan(seed: u64) -> Vec<Move> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    plan(&mut rng)
}

fn plan(rng: &mut ChaCha8Rng) -> Vec<Move> {
    let mut moves = vec![Move::FakeWall, Move::SplitStrip, Move::Relabel, Move::Translate];
    let extra = rng.gen_range(0..=4);
    for _ in 0..extra {
        moves.push(*[Move::FakeWall, Move::SplitStrip, Move::Relabel, Move::Translate].choose(rng).unwrap());
    }
    moves.shuffle(rng);
    moves
}

/// A different presentation of the same translation surface, determined by `seed`.
pub fn scramble(grid: &GluedGrid, seed: u64) -> GluedGrid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moves = plan(&mut rng);
    moves
        .into_iter()
        .fold(grid.clone(), |g, mv| apply_random_move(&g, mv, &mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::h1_domain;
    use crate::surface::glue;
    use crate::uniformizer::uniformize;

    #[test]
    fn fake_wall_is_merged_back() {
        let x = h1_domain();
        let g = insert_fake_wall(&glue(&x), 0, int(-2));
        assert_eq!(g.num_columns(), 3);
        assert_eq!(uniformize(&g).unwrap(), x);
    }

    #[test]
    fn swapping_strips_one_and_two() {
        let x = h1_domain();
        let phi = Permutation::from_one_line(vec![0, 2, 1]).unwrap();
        let g = relabel_strips(&glue(&x), &phi);
        assert_eq!(g.top_strip(), 1);
        assert_eq!(uniformize(&g).unwrap(), x);
    }

    #[test]
    fn split_then_translate() {
        let x = h1_domain();
        let g = split_strip(&glue(&x), 1, ratio(1, 3));
        let g = split_strip(&g, 0, int(-5));
        let g = translate(&g, &ratio(7, 2), &int(-4));
        assert_eq!(uniformize(&g).unwrap(), x);
    }

    #[test]
    fn scramble_is_deterministic() {
        let g = glue(&h1_domain());
        assert_eq!(scramble(&g, 7), scramble(&g, 7));
        assert_ne!(scramble(&g, 7), g);
    }
}

//! Small worked domains used by tests, examples and the CLI.

use crate::rational::int;
use crate::slit::{normalize, validate_cell_label, CellCandidate, ParallelSlitDomain};

/// The single top cell of `Par(0, 1, 1)`: one zero, a cylinder of height 1.
pub fn h1_domain() -> ParallelSlitDomain {
    let label = validate_cell_label(&CellCandidate {
        g: 0,
        m: 1,
        sigmas: vec![vec![1, 2, 0], vec![2, 1, 0]],
        nu: vec![vec![0, 2], vec![1]],
    })
    .expect("h = 1 label is valid");
    let coords = normalize(&[int(0)], &[int(0), int(1)]).expect("strict");
    ParallelSlitDomain::new(label, coords).expect("lengths match")
}

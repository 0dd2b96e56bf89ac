use parslit_core::census::{enumerate_cells, sample_domain, Method};
use parslit_core::rational::int;
use parslit_core::surface::{glue, is_generic, verify_surface_type, Diagnosis, SurfaceError};
use parslit_core::uniformizer::{insert_fake_wall, uniformize_slit_data, UniformizeError};
use parslit_core::{uniformize, validate_cell_label, CellCandidate, Permutation};

fn long_cycle(n: usize) -> Vec<usize> {
    Permutation::long_cycle(n).into_vec()
}

#[test]
fn coincident_levels() {
    let cell = CellCandidate {
        g: 0,
        m: 1,
        sigmas: vec![vec![1, 2, 0], vec![2, 1, 0]],
        nu: vec![vec![0, 2], vec![1]],
    };
    let err = uniformize_slit_data(&cell, &[int(3)], &[int(1), int(1)]).unwrap_err();
    assert_eq!(err, UniformizeError::NonGeneric(Diagnosis::CoincidentLevels));
}

#[test]
fn coincident_tips() {
    let report = enumerate_cells(1, 0, Method::Brute).unwrap();
    let cell = report.labels[0].label.to_candidate();
    let b: Vec<_> = (0..4).map(int).collect();
    let err = uniformize_slit_data(&cell, &[int(0), int(0)], &b).unwrap_err();
    assert!(matches!(
        err,
        UniformizeError::NonGeneric(Diagnosis::NonSimpleOrColocated { .. })
    ));
}

#[test]
fn saddle_connection() {
    for (g, m) in [(1, 0), (0, 2)] {
        let report = enumerate_cells(g, m, Method::Stepped).unwrap();
        assert!(!report.saddle_examples.is_empty());
        for sigmas in &report.saddle_examples {
            let last = &sigmas[sigmas.len() - 1];
            let mut nu = vec![last.cycle_of(0)];
            nu.extend(last.cycles().into_iter().filter(|c| !c.contains(&0)));
            let label = validate_cell_label(&CellCandidate {
                g,
                m,
                sigmas: sigmas.iter().map(|s| s.as_slice().to_vec()).collect(),
                nu,
            })
            .unwrap();
            let grid = glue(&sample_domain(label));
            let diagnosis = is_generic(&grid).diagnosis;
            assert!(matches!(diagnosis, Diagnosis::SaddleConnection { .. }), "{diagnosis:?}");
            assert_eq!(uniformize(&grid).unwrap_err(), UniformizeError::NonGeneric(diagnosis));
        }
    }
}

#[test]
fn collapsed_walls_are_not_a_genus_one_cell() {
    let five = long_cycle(5);
    let label = validate_cell_label(&CellCandidate {
        g: 1,
        m: 0,
        sigmas: vec![five.clone(), five.clone(), five],
        nu: vec![vec![0, 1, 2, 3, 4]],
    })
    .unwrap();
    let x = sample_domain(label);
    let err = verify_surface_type(&x).unwrap_err();
    assert!(
        matches!(err, SurfaceError::TypeMismatch { g: 1, m: 0, found_genus: 0, found_m: 0 }),
        "{err:?}"
    );
    assert_eq!(
        uniformize(&glue(&x)).unwrap_err(),
        UniformizeError::NonGeneric(Diagnosis::NoZeros)
    );
}

#[test]
fn fake_wall_next_to_a_double_zero() {
    // σ_1 = σ_0 leaves the first wall flat; σ_2 = (1 2 3)·σ_1 puts a zero of
    // order two on the second wall; σ_3 = (4 5)·σ_2
    let n = 7;
    let s0 = Permutation::long_cycle(n);
    let c3 = Permutation::from_one_line(vec![0, 2, 3, 1, 4, 5, 6]).unwrap();
    let s2 = c3.compose(&s0);
    let s3 = Permutation::transposition(n, 4, 5).compose(&s2);
    let m = s3.cycle_count() - 1;
    let mut nu = vec![s3.cycle_of(0)];
    nu.extend(s3.cycles().into_iter().filter(|c| !c.contains(&0)));
    let label = validate_cell_label(&CellCandidate {
        g: (3 - m) / 2,
        m,
        sigmas: vec![s0.clone().into_vec(), s0.into_vec(), s2.into_vec(), s3.into_vec()],
        nu,
    })
    .unwrap();
    let x = sample_domain(label);
    assert!(verify_surface_type(&x).is_err());
    let err = uniformize(&glue(&x)).unwrap_err();
    assert!(
        matches!(err, UniformizeError::NonGeneric(Diagnosis::NonSimpleOrColocated { .. })),
        "{err:?}"
    );
}

#[test]
fn extra_fake_wall_is_not_degenerate() {
    let report = enumerate_cells(0, 2, Method::Brute).unwrap();
    let x = sample_domain(report.labels[0].label.clone());
    let grid = insert_fake_wall(&glue(&x), 1, parslit_core::rational::ratio(-1, 2));
    assert_eq!(uniformize(&grid).unwrap(), x);
}

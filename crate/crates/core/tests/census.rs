use parslit_core::census::{enumerate_cells, sample_domain, Method};
use parslit_core::slit::{cell_dimension, moduli_dimension};
use parslit_core::surface::verify_surface_type;
use parslit_core::{glue, uniformize};

#[test]
fn h1_has_one_cell() {
    let r = enumerate_cells(0, 1, Method::Brute).unwrap();
    assert_eq!(r.total_labels(), 1);
    assert_eq!(r.total_sequences(), 1);
}

#[test]
fn methods_agree_up_to_h2() {
    for (g, m) in [(0, 1), (0, 2), (1, 0)] {
        let brute = enumerate_cells(g, m, Method::Brute).unwrap();
        let stepped = enumerate_cells(g, m, Method::Stepped).unwrap();
        assert_eq!(brute.labels, stepped.labels, "(g, m) = ({g}, {m})");
        assert_eq!(brute.saddle_degenerate, stepped.saddle_degenerate);
    }
    assert_eq!(enumerate_cells(1, 0, Method::Brute).unwrap().candidates, 576);
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_cells(1, 1, Method::Stepped).unwrap();
    let b = enumerate_cells(1, 1, Method::Stepped).unwrap();
    assert_eq!(a, b);
}

#[test]
fn every_cell_survives_the_pipeline() {
    for h in 1..=3usize {
        for g in 0..=h / 2 {
            let m = h - 2 * g;
            let method = if h <= 2 { Method::Brute } else { Method::Stepped };
            let r = enumerate_cells(g, m, method).unwrap();
            assert!(r.total_labels() > 0);
            for cell in &r.labels {
                assert_eq!(cell.genus_cones, g);
                assert_eq!(cell.genus_euler, g);
                assert_eq!(cell.punctures, m + 1);
                assert_eq!(cell.zeros.len(), h);
                assert_eq!(cell_dimension(&cell.label) as i64, moduli_dimension(g, m));
                let x = sample_domain(cell.label.clone());
                verify_surface_type(&x).unwrap();
                assert_eq!(uniformize(&glue(&x)).unwrap(), x);
            }
        }
    }
}

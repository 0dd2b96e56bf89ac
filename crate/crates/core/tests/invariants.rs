mod common;

use num_traits::{Signed, Zero};
use parslit_core::surface::{
    cone_points, ends, euler_report, genus_via_cones, genus_via_euler, period_of_loop,
    vertical_loop,
};
use parslit_core::uniformizer::{trace_critical_graph, uniformize_full};
use parslit_core::{glue, periods, scramble};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn surface_type_matches_label(seed in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        let g = glue(&x);
        let label = x.label();
        prop_assert_eq!(genus_via_cones(&g).unwrap(), label.g());
        prop_assert_eq!(genus_via_euler(&g).unwrap(), label.g());
        prop_assert_eq!(euler_report(&g).unwrap().boundary_circuits, label.m() + 1);
        prop_assert_eq!(ends(&g).unwrap().punctures.len(), label.m() + 1);
    }

    #[test]
    fn one_simple_zero_per_wall(seed in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        let cones = cone_points(&glue(&x)).unwrap();
        prop_assert_eq!(cones.total_zero_order(), h);
        let mut walls: Vec<usize> = cones.zeros().map(|z| z.wall).collect();
        prop_assert!(cones.zeros().all(|z| z.k() == 2));
        walls.dedup();
        prop_assert_eq!(walls.len(), h);
        for class in &cones.classes {
            prop_assert_eq!(class.corners.len() % 4, 0);
        }
    }

    #[test]
    fn residues_have_the_dipole_pattern(seed in any::<u64>(), mix in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        for grid in [glue(&x), scramble(&glue(&x), mix)] {
            let e = ends(&grid).unwrap();
            prop_assert!(e.residue_sum().is_zero());
            for p in &e.punctures {
                if p.label == 0 {
                    prop_assert_eq!(p.pole_order, 2);
                } else {
                    prop_assert_eq!(p.pole_order, 1);
                    prop_assert!(p.circumference.is_positive());
                }
            }
        }
    }

    #[test]
    fn loops_have_imaginary_periods(seed in any::<u64>(), walk in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        let g = glue(&x);
        for c in 0..g.num_columns() {
            for cycle in g.perm(c).cycles() {
                if cycle.contains(&g.top_strip()) {
                    continue;
                }
                let z = period_of_loop(&g, &vertical_loop(&g, c, cycle[0])).unwrap();
                prop_assert!(z.is_purely_imaginary());
                prop_assert!(z.im.is_positive());
            }
        }
        if let Some(path) = common::random_closed_loop(&g, walk) {
            prop_assert!(period_of_loop(&g, &path).unwrap().is_purely_imaginary());
        }
    }

    #[test]
    fn period_matrix_relations(seed in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        let u = uniformize_full(&glue(&x)).unwrap();
        let z = periods(&u.development);
        let a = x.coords().a();
        prop_assert_eq!(z.size(), h);
        for k in 0..h {
            prop_assert!(z.get(k, k).is_purely_imaginary());
            prop_assert!(!z.get(k, k).is_zero());
            for l in 0..h {
                prop_assert_eq!(&z.get(k, l).re, &(&a[l] - &a[k]));
                if k != l {
                    prop_assert!((z.get(k, l) + z.get(l, k)).is_zero());
                    for n in 0..h {
                        if n != k && n != l {
                            prop_assert_eq!(z.get(k, l) + z.get(l, n), z.get(k, n).clone());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn critical_graph_and_development(seed in any::<u64>(), h in 1usize..=4) {
        let x = common::domain(seed, h);
        let g = glue(&x);
        let k = trace_critical_graph(&g).unwrap();
        prop_assert_eq!(k.rays.len(), 2 * h);
        let u = uniformize_full(&g).unwrap();
        let dev = &u.development;
        let mut levels: Vec<_> = dev.banks.iter().map(|b| b.lower.clone()).collect();
        levels.sort();
        prop_assert_eq!(levels.as_slice(), x.coords().b());
        for images in &dev.zero_images {
            prop_assert_eq!(images.len(), 2);
            prop_assert_eq!(&images[0].0, &images[1].0);
        }
    }
}

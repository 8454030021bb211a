use sandwich::csp::hom_search;
use sandwich::gen::all_instances;
use sandwich::oracle::oracle_solve;
use sandwich::recognize::{contains_cycle_in_capped, contains_cycle_through};
use sandwich::reduce::{colouring_to_sandwich, complement_instance, ham_path_to_cycle_family, line_bip_to_a};
use sandwich::structure::struct_a;
use sandwich::{ClassId, FamilySpec, Graph, SandwichInstance};

#[test]
fn complement_preserves_split_verdicts() {
    for n in 1..=4 {
        for inst in all_instances(n) {
            let back = complement_instance(&complement_instance(&inst));
            assert_eq!(back, inst);
            assert_eq!(
                oracle_solve(&inst, &ClassId::Split).unwrap().is_yes(),
                oracle_solve(&complement_instance(&inst), &ClassId::Split).unwrap().is_yes()
            );
        }
    }
}

#[test]
fn colouring_examples() {
    let p5k3 = ClassId::f_free(vec![Graph::path(5).unwrap(), Graph::complete(3).unwrap()]).unwrap();
    let c5 = colouring_to_sandwich(&Graph::cycle(5).unwrap());
    assert!(oracle_solve(&c5, &p5k3).unwrap().is_yes());
    let k4 = colouring_to_sandwich(&Graph::complete(4).unwrap());
    assert!(!oracle_solve(&k4, &ClassId::PnKkFree(4, 4)).unwrap().is_yes());
    let i3 = colouring_to_sandwich(&Graph::empty(3).unwrap());
    assert_eq!(i3, SandwichInstance::free(3));
    for cls in [ClassId::Split, ClassId::Threshold, ClassId::Permutation, p5k3] {
        assert!(oracle_solve(&i3, &cls).unwrap().is_yes());
    }
}

#[test]
fn claw_is_not_pair_colourable() {
    let claw = SandwichInstance::from_graph(&Graph::star(3).unwrap());
    assert!(!hom_search(&line_bip_to_a(&claw).unwrap(), &struct_a()).unwrap().is_yes());
    let edge = SandwichInstance::new(2, [(0, 1)], []).unwrap();
    let a = line_bip_to_a(&edge).unwrap();
    assert_eq!((a.var_count, a.constraints.len()), (1, 1));
    assert!(hom_search(&a, &struct_a()).unwrap().is_yes());
}

#[test]
fn anchored_cycle_search_matches_full_search_on_small_cases() {
    let cases = [
        (Graph::path(2).unwrap(), 0, 1),
        (Graph::path(3).unwrap(), 0, 2),
        (Graph::path(3).unwrap(), 0, 1),
        (Graph::empty(2).unwrap(), 0, 1),
    ];
    for (g, s, t) in cases {
        let h = ham_path_to_cycle_family(&g, s, t).unwrap();
        let anchored = contains_cycle_through(&h, g.vertex_count(), &FamilySpec::GeometricT).unwrap();
        let full = contains_cycle_in_capped(&h, &FamilySpec::GeometricT, h.vertex_count()).unwrap();
        assert_eq!(anchored, full);
    }
}

#[test]
fn ham_reduction_on_even_cycle() {
    let c6 = Graph::cycle(6).unwrap();
    let adjacent = ham_path_to_cycle_family(&c6, 0, 1).unwrap();
    assert!(contains_cycle_through(&adjacent, 6, &FamilySpec::GeometricT).unwrap());
    // opposite vertices of C6 split it into two short paths
    let opposite = ham_path_to_cycle_family(&c6, 0, 3).unwrap();
    assert!(!contains_cycle_through(&opposite, 6, &FamilySpec::GeometricT).unwrap());
}

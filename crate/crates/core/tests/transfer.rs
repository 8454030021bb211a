use sandwich::csp::hom_search;
use sandwich::gen::all_instances;
use sandwich::grid::{grid_map, validate_grid_map};
use sandwich::oracle::oracle_solve;
use sandwich::pp::{emit_ppc, gadget_reduce, gr_to_struct_a, parse_ppc, pp_power, BuiltinConstruction};
use sandwich::reduce::{complement_instance, line_bip_to_a};
use sandwich::structure::{struct_a, struct_k};
use sandwich::{validate_hom, ClassId, Error, FiniteStructure, Graph, SandwichInstance, StructureInstance};

const GRID_SIDE: usize = 4;
const GRID_NODES: u64 = 5_000_000;

#[test]
fn builtins_survive_the_text_format() {
    let c5 = FiniteStructure::from_graph(&Graph::cycle(5).unwrap());
    for b in BuiltinConstruction::ALL {
        let con = b.build();
        let back = parse_ppc(&emit_ppc(&con)).unwrap();
        assert_eq!(back, con, "{}", b.name());
    }
    let con = parse_ppc(&emit_ppc(&BuiltinConstruction::C5ToK5.build())).unwrap();
    assert_eq!(pp_power(&c5, &con).unwrap(), pp_power(&c5, &BuiltinConstruction::C5ToK5.build()).unwrap());
}

#[test]
fn pair_colouring_matches_line_bip_oracle() {
    let a = struct_a();
    for n in 2..=4 {
        for inst in all_instances(n) {
            let ai = line_bip_to_a(&inst).unwrap();
            let cert = hom_search(&ai, &a).unwrap();
            validate_hom(&ai, &a, &cert).unwrap();
            let want = oracle_solve(&inst, &ClassId::LineOfBipartite).unwrap().is_yes();
            assert_eq!(cert.is_yes(), want, "{inst:?}");
        }
    }
}

fn grid_verdict(inst: &SandwichInstance) -> (bool, bool) {
    let ai = line_bip_to_a(inst).unwrap();
    let want = hom_search(&ai, &struct_a()).unwrap().is_yes();
    let gi = gadget_reduce(&gr_to_struct_a(), &ai).unwrap();
    let got = grid_map(&gi, GRID_SIDE, GRID_NODES).unwrap();
    if let Some(map) = &got {
        assert!(validate_grid_map(&gi, map));
    }
    (want, got.is_some())
}

#[test]
fn grid_construction_transfers_verdicts() {
    for inst in all_instances(3) {
        let (want, got) = grid_verdict(&inst);
        assert_eq!(got, want, "{inst:?}");
    }
}

/// Proving that no map exists is out of reach for the search at these sizes,
/// so NO instances only have to avoid producing a map.
fn grid_no(ai: &StructureInstance) {
    assert!(!hom_search(ai, &struct_a()).unwrap().is_yes());
    let gi = gadget_reduce(&gr_to_struct_a(), ai).unwrap();
    match grid_map(&gi, GRID_SIDE, 200_000) {
        Ok(None) | Err(Error::Budget(_)) => {}
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn grid_construction_on_claw_and_k4() {
    let k4 = SandwichInstance::from_graph(&Graph::complete(4).unwrap());
    assert_eq!(grid_verdict(&k4), (true, true));

    let claw = SandwichInstance::from_graph(&Graph::star(3).unwrap());
    grid_no(&line_bip_to_a(&claw).unwrap());
    // two triangles sharing an edge whose third colours clash
    let mut ai = StructureInstance::new(4);
    ai.push("T", vec![0, 1, 2]).unwrap();
    ai.push("T", vec![0, 1, 3]).unwrap();
    for v in [0, 1, 3] {
        ai.push("U_E", vec![v]).unwrap();
    }
    ai.push("U_N", vec![2]).unwrap();
    grid_no(&ai);
}

#[test]
fn split_sandwich_is_csp_of_struct_k() {
    // clique side 1, independent side 0
    let k = struct_k();
    for n in 1..=4 {
        for inst in all_instances(n) {
            let mut si = StructureInstance::new(n);
            for p in inst.forced() {
                si.push("B", vec![p.lo(), p.hi()]).unwrap();
            }
            for p in inst.forbidden() {
                si.push("R", vec![p.lo(), p.hi()]).unwrap();
            }
            let got = hom_search(&si, &k).unwrap();
            validate_hom(&si, &k, &got).unwrap();
            let want = oracle_solve(&inst, &ClassId::Split).unwrap().is_yes();
            assert_eq!(got.is_yes(), want, "{inst:?}");
            let flipped = oracle_solve(&complement_instance(&inst), &ClassId::Split).unwrap().is_yes();
            assert_eq!(flipped, want);
        }
    }
}

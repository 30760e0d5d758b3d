use indsat_core::assemble::*;
use indsat_core::catalog::{Family, CUBIC_BASES};
use indsat_core::detect::Budget;
use indsat_core::io::Manifest;

fn base(name: &str) -> CubicBase {
    CubicBase::from_catalog(&name.parse::<Family>().unwrap(), 3).unwrap()
}

#[test]
fn catalog_matchings_and_families() {
    for name in CUBIC_BASES {
        let b = base(name);
        for m in &b.matchings {
            assert!(is_perfect_matching(&b.graph, m), "{name}");
        }
        let fam = cycle_family(&b).unwrap();
        for class in 1..=3 {
            let mut seen = vec![0; b.graph.order()];
            for c in fam.class(class) {
                assert_eq!(c.len() % 2, 0);
                for &v in c.cycle.verts() {
                    seen[v] += 1;
                }
            }
            assert!(seen.iter().all(|&s| s == 1), "{name} class {class}");
        }
        assert!(fam.edge_multiplicity(&b.graph).iter().all(|&(_, k)| k == 2));
        assert_eq!(fam.class(3).count(), 1);
    }
}

#[test]
fn k4_has_no_territories() {
    let b = base("k4");
    let fam = cycle_family(&b).unwrap();
    match assemble_gt(&b, &fam, 5, Provider::Canonical) {
        Err(AssembleError::TerritoryUnavailable(items)) => {
            assert_eq!(items.len(), 3);
            assert!(items.iter().all(|i| i.length == 4));
        }
        other => panic!("expected infeasible, got {other:?}"),
    }
}

#[test]
fn trivial_provider_returns_base() {
    for name in CUBIC_BASES {
        let b = base(name);
        let fam = cycle_family(&b).unwrap();
        let a = assemble_gt(&b, &fam, 5, Provider::Trivial).unwrap();
        assert_eq!(a.graph, b.graph);
        assert!(a.audit.passed());
    }
}

#[test]
fn heawood_canonical_assembly() {
    let b = base("heawood");
    let fam = cycle_family(&b).unwrap();
    let a = assemble_gt(&b, &fam, 5, Provider::Canonical).unwrap();
    assert!(a.audit.passed(), "{:?}", a.audit);
    assert_eq!(a.graph.order(), a.expected_order());
    for r in &a.records {
        assert_eq!(r.territory.perimeter(), 14);
        assert_eq!(
            r.embedding[r.territory.boundary().verts()[0]],
            r.cycle.verts()[0]
        );
        assert_eq!(r.cycle.verts()[0], *r.cycle.verts().iter().min().unwrap());
    }
    let manifest = Manifest::new(&a, b.girth, 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&manifest.to_json()).unwrap();
    assert_eq!(v["cycles"].as_array().unwrap().len(), 3);
    assert_eq!(v["cycles"][0]["territory_vertices"], 17);
    assert_eq!(v["girth"]["required"], "5^25");
}

#[test]
fn injected_edges_are_caught() {
    let b = base("heawood");
    let fam = cycle_family(&b).unwrap();
    let a = assemble_gt(&b, &fam, 5, Provider::Canonical).unwrap();
    let inner0: Vec<usize> = a.records[0].interior().collect();
    let inner1: Vec<usize> = a.records[1].interior().collect();

    let mut g = a.graph.clone();
    g.add_edge(inner0[0], inner1[0]).unwrap();
    let audit = structural_audit(&a.gamma, &g, &a.records);
    assert!(!audit.interiors_anticomplete && !audit.passed());

    // Every Heawood family cycle is Hamiltonian, so the interior-to-base
    // case is exercised on Desargues below.
    let (u, v) = b.graph.non_edges().next().unwrap();
    let mut g = a.graph.clone();
    g.add_edge(u, v).unwrap();
    assert!(!structural_audit(&a.gamma, &g, &a.records).base_induced);
}

#[test]
fn desargues_injection_outside_cycle() {
    let b = base("desargues");
    let fam = cycle_family(&b).unwrap();
    let a = assemble_gt(&b, &fam, 5, Provider::Canonical).unwrap();
    assert!(a.audit.passed());
    let r = a
        .records
        .iter()
        .find(|r| r.cycle.len() < b.graph.order())
        .unwrap();
    let outside = (0..b.graph.order())
        .find(|&v| !r.cycle.contains(v))
        .unwrap();
    let inner = r.interior().next().unwrap();
    let mut g = a.graph.clone();
    g.add_edge(inner, outside).unwrap();
    let audit = structural_audit(&a.gamma, &g, &a.records);
    assert!(!audit.interiors_avoid_base && !audit.passed());
}

#[test]
fn short_path_pairs() {
    let b = base("heawood");
    let fam = cycle_family(&b).unwrap();
    let r = short_path_probe(&b, &fam, 2).unwrap();
    assert!(r.violations.is_empty());
    assert!(r.pairs_checked > 0 && r.shared_edge > 0 && r.shared_end > 0);
    assert!(matches!(
        short_path_probe(&b, &fam, 3),
        Err(AssembleError::ProbeCapTooLarge { .. })
    ));
}

#[test]
fn shared_chord_is_an_edge_pair() {
    let b = base("heawood");
    let (u, v) = b.matching(3)[0];
    assert_eq!(
        classify_pair(&b.graph, &[u, v], &[v, u]),
        Some(PairShape::SharedEdge)
    );
    let w = *b.graph.neighbors(v).iter().find(|&&w| w != u).unwrap();
    assert_eq!(
        classify_pair(&b.graph, &[u, v], &[v, w]),
        Some(PairShape::SharedEnd)
    );
    // Shared vertex inside one path and at the end of the other.
    let x = *b.graph.neighbors(u).iter().find(|&&x| x != v).unwrap();
    let y = *b.graph.neighbors(w).iter().find(|&&y| y != v).unwrap();
    assert_eq!(
        classify_pair(&b.graph, &[x, u, v], &[w, v, y]),
        Some(PairShape::SharedEnd)
    );
    assert_eq!(classify_pair(&b.graph, &[x, u, v, w], &[y, w, v, u]), None);
}

#[test]
fn chord_probe_runs() {
    let b = base("desargues");
    let fam = cycle_family(&b).unwrap();
    let a = assemble_gt(&b, &fam, 5, Provider::Canonical).unwrap();
    let r = m3_edge_probe(&a, &b, &Budget::default()).unwrap();
    assert_eq!(r.edges_checked, b.matching(3).len());
}

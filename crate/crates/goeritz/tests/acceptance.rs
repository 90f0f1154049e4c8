//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All arithmetic is exact; every equality is required with zero tolerance.

use goeritz::diagram::{
    apply_move, bracket_state_sum, checkerboard, crossing_types_and_euler, determinant_set,
    goeritz_from_diagram, goeritz_with_regions, jones, medial, nu, tait_graph, writhe_data,
    CrossingType, Diagram, Embedding, Move, R1Side, Shading,
};
use goeritz::graph::{graph_from_matrix, tau, tau_random_order, SignedMultigraph, SplitMix64};
use goeritz::laurent::{p_n, HalfTLaurent, LaurentPoly};
use goeritz::matrix::{
    det_modulus_check, jones_orientable, jones_with_euler, mu, mu_random_pivots,
    SymmetricIntMatrix,
};
use num_bigint::BigInt;

fn pass(n: usize, what: &str) {
    println!("[PASS] criterion {:>2}: {}", n, what);
}

fn random_symmetric(rng: &mut SplitMix64, max_dim: usize, bound: i64) -> SymmetricIntMatrix {
    let n = rng.below(max_dim + 1);
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.below((2 * bound + 1) as usize) as i64 - bound;
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    SymmetricIntMatrix::from_rows(&rows).unwrap()
}

struct Fixture {
    name: &'static str,
    diagram: Diagram,
}

fn fixture(name: &'static str, text: &str) -> Fixture {
    Fixture {
        name,
        diagram: Diagram::from_json(text).unwrap(),
    }
}

fn genus_zero_fixtures() -> Vec<Fixture> {
    vec![
        fixture("unknot-kink", include_str!("../fixtures/unknot-kink.json")),
        fixture("trefoil", include_str!("../fixtures/trefoil.json")),
        fixture("figure-eight", include_str!("../fixtures/figure-eight.json")),
        fixture("hopf", include_str!("../fixtures/hopf.json")),
        fixture("5_2", include_str!("../fixtures/knot-5-2.json")),
        fixture("nugatory-sum", include_str!("../fixtures/nugatory-sum.json")),
    ]
}

fn colorable_fixtures() -> Vec<Fixture> {
    let mut all = genus_zero_fixtures();
    all.push(fixture("torus-medial", include_str!("../fixtures/torus-medial.json")));
    all
}

fn nu_set(d: &Diagram, emb: &Embedding, s0: &Shading, s1: &Shading) -> Vec<HalfTLaurent> {
    let mut set = vec![nu(d, emb, s0).unwrap(), nu(d, emb, s1).unwrap()];
    set.sort_by_key(|h| format!("{}", h));
    set
}

#[test]
fn criterion_01_trefoil_worked_example() {
    let g = SymmetricIntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]).unwrap();
    let expect = LaurentPoly::from_terms(&[(7, 1), (3, -1), (-5, -1)]);
    assert_eq!(mu(&g), expect);
    assert_eq!(format!("{}", mu(&g)), "-A^-5 - A^3 + A^7");
    pass(1, "mu[[2,-1],[-1,2]] = A^7 - A^3 - A^-5");
}

#[test]
fn criterion_02_mu_well_defined() {
    let mut rng = SplitMix64::new(0xC0FFEE);
    for k in 0..200 {
        let g = random_symmetric(&mut rng, 5, 4);
        let reference = mu(&g);
        for _ in 0..10 {
            assert_eq!(
                mu_random_pivots(&g, rng.next_u64()),
                reference,
                "pivot order changed mu of {} (case {})",
                g,
                k
            );
        }
    }
    pass(2, "mu is pivot-independent on 200 random matrices x 10 orders");
}

#[test]
fn criterion_03_determinant_lemma_modulus() {
    let mut rng = SplitMix64::new(0xDE7);
    for k in 0..200 {
        let g = random_symmetric(&mut rng, 6, 5);
        let (modulus_sq, det_sq) = det_modulus_check(&g);
        assert!(modulus_sq.is_integer(), "sqrt2 part nonzero for {} (case {})", g, k);
        assert_eq!(modulus_sq.int, det_sq, "|mu(zeta)|^2 != det^2 for {} (case {})", g, k);
    }
    pass(3, "|mu[G](zeta_8)|^2 = det(G)^2 on 200 random matrices");
}

#[test]
fn criterion_04_tau_of_realization_equals_mu() {
    let mut rng = SplitMix64::new(0xA4);
    for k in 0..100 {
        let g = random_symmetric(&mut rng, 4, 3);
        let realized = graph_from_matrix(&g);
        assert_eq!(realized.coloop_signs(), (0, 0));
        assert_eq!(tau(&realized), mu(&g), "case {}: {}", k, g);
    }
    pass(4, "tau[graph_from_matrix(G)] = mu[G] on 100 random matrices");
}

#[test]
fn criterion_05_bracket_equals_mu_and_tau() {
    for f in genus_zero_fixtures() {
        let d = &f.diagram;
        let emb = Embedding::new(d);
        let bracket = bracket_state_sum(d, &emb).unwrap();
        let (s0, s1) = checkerboard(d, &emb).unwrap();
        for (si, s) in [&s0, &s1].into_iter().enumerate() {
            let t = tait_graph(d, &emb, s);
            assert_eq!(tau(&t.graph), bracket, "{} shading {}: tau != bracket", f.name, si);
            let wd = writhe_data(d, &emb, s);
            for base in s.white_faces() {
                let g = goeritz_from_diagram(d, &emb, s, base).unwrap();
                let from_goeritz = &LaurentPoly::neg_a_pow(3 * wd.w0) * &mu(&g);
                assert_eq!(
                    from_goeritz, bracket,
                    "{} shading {} base {}: (-A)^(3 w0) mu[G] != bracket",
                    f.name, si, base
                );
            }
        }
    }
    pass(5, "state-sum bracket = writhe-corrected mu[G] = tau[Gamma] on all fixtures");
}

#[test]
fn criterion_06_orientable_jones_on_trefoil() {
    let d = Diagram::from_json(include_str!("../fixtures/trefoil.json")).unwrap();
    let emb = Embedding::new(&d);
    let oracle = jones(&d, &emb).unwrap();
    let (s0, s1) = checkerboard(&d, &emb).unwrap();
    let mut checked = false;
    for s in [&s0, &s1] {
        let base = s.white_faces()[0];
        let g = goeritz_from_diagram(&d, &emb, s, base).unwrap();
        if !g.is_orientable() {
            continue;
        }
        let (types, _) = crossing_types_and_euler(&d, &emb, s);
        if !types.iter().all(|&t| t == CrossingType::I) {
            continue;
        }
        checked = true;
        let via_goeritz = jones_orientable(&g).unwrap();
        assert_eq!(via_goeritz, oracle);
        let at_minus_one = via_goeritz.eval_minus_one().modulus_if_integer().unwrap();
        assert_eq!(at_minus_one, BigInt::from(3));
        assert_eq!(g.determinant(), BigInt::from(3));
    }
    assert!(checked, "no orientable-compatible shading found on the trefoil");
    pass(6, "orientable-surface Jones route matches the oracle on the trefoil; |J(-1)| = det = 3");
}

#[test]
fn criterion_07_full_jones_on_all_fixtures() {
    for f in genus_zero_fixtures() {
        let d = &f.diagram;
        let emb = Embedding::new(d);
        let oracle = jones(d, &emb).unwrap();
        let (s0, s1) = checkerboard(d, &emb).unwrap();
        for (si, s) in [&s0, &s1].into_iter().enumerate() {
            let base = s.white_faces()[0];
            let g = goeritz_from_diagram(d, &emb, s, base).unwrap();
            let (_, e) = crossing_types_and_euler(d, &emb, s);
            assert_eq!(e.0 % 2, 0, "{}: Euler number odd", f.name);
            let via_goeritz = jones_with_euler(&g, e).unwrap();
            assert_eq!(via_goeritz, oracle, "{} shading {}: Goeritz route != oracle", f.name, si);
        }
    }
    pass(7, "Goeritz + Euler-number Jones route matches the oracle on all fixtures, both shadings");
}

#[test]
fn criterion_08_orientable_writhe_formula() {
    let mut checked = 0;
    for f in genus_zero_fixtures() {
        let d = &f.diagram;
        let emb = Embedding::new(d);
        let (s0, s1) = checkerboard(d, &emb).unwrap();
        for s in [&s0, &s1] {
            let base = s.white_faces()[0];
            let g = goeritz_from_diagram(d, &emb, s, base).unwrap();
            let (types, _) = crossing_types_and_euler(d, &emb, s);
            let compatible = types.iter().all(|&t| t == CrossingType::I);
            if !g.is_orientable() || !compatible {
                continue;
            }
            let wd = writhe_data(d, &emb, s);
            assert_eq!(
                wd.w - wd.w0,
                -g.upper_sum(),
                "{}: w - w0 != -sum g_ij",
                f.name
            );
            checked += 1;
        }
    }
    assert!(checked >= 2, "too few orientable-compatible shadings exercised");
    pass(8, "w - w0 = -sum_{i<=j} g_ij on all orientable-compatible fixture shadings");
}

#[test]
fn criterion_09_every_matrix_is_a_goeritz_matrix() {
    let mut rng = SplitMix64::new(0x1999);
    for k in 0..100 {
        let g = random_symmetric(&mut rng, 4, 3);
        let realized = graph_from_matrix(&g);
        let med = medial(&realized);
        if g.dim() == 0 {
            // the empty matrix realizes as a single bare vertex: no diagram
            assert!(med.is_err());
            continue;
        }
        let med = med.unwrap();
        let d = &med.diagram;
        let emb = Embedding::new(d);
        let (s0, s1) = checkerboard(d, &emb).unwrap_or_else(|e| {
            panic!("case {}: medial diagram not colorable: {:?}", k, e)
        });
        // White regions must be the vertex disks; order them by vertex id.
        let disks: Vec<usize> = med
            .disk_corner_of_vertex
            .iter()
            .map(|&(c, q)| emb.face_at_corner(d, c, q))
            .collect();
        let s = if !s0.is_black(disks[0]) { &s0 } else { &s1 };
        let regions: Vec<usize> = disks[1..].to_vec();
        let recovered = goeritz_with_regions(d, &emb, s, &regions).unwrap();
        assert_eq!(recovered, g, "case {}: recovered Goeritz matrix differs", k);
    }
    pass(9, "medial(graph_from_matrix(G)) is colorable and recovers G, 100 random matrices");
}

#[test]
fn criterion_10_determinant_chromatic_duality() {
    for f in colorable_fixtures() {
        let d = &f.diagram;
        let emb = Embedding::new(d);
        let ds = determinant_set(d, &emb).unwrap();
        assert!(ds.pairing_ok, "{}: |nu(-1)| pairing failed: {:?}", f.name, ds);
        if f.name == "trefoil" {
            assert_eq!(ds.values, [BigInt::from(3), BigInt::from(3)]);
        }
        if f.name == "unknot-kink" {
            assert_eq!(ds.values, [BigInt::from(1), BigInt::from(1)]);
        }
    }
    pass(10, "{|nu(-1)|, |nu'(-1)|} = {|det G'|, |det G|} with the crossed pairing, all fixtures");
}

#[test]
fn criterion_11_nu_set_invariance_under_moves() {
    let mut rng = SplitMix64::new(0x11);
    for f in colorable_fixtures() {
        let d0 = &f.diagram;
        let emb0 = Embedding::new(d0);
        let (s0, s1) = checkerboard(d0, &emb0).unwrap();
        let reference = nu_set(d0, &emb0, &s0, &s1);
        let genus0 = emb0.genus();
        for seq in 0..20 {
            let mut d = d0.clone();
            let mut emb = emb0.clone();
            let moves = 1 + rng.below(4);
            for _ in 0..moves {
                let use_r2 = rng.below(2) == 1;
                let next = if use_r2 {
                    // pick a face with at least two distinct boundary arcs
                    let mut choice = None;
                    for _ in 0..20 {
                        let face = rng.below(emb.face_count());
                        let arcs = &emb.faces()[face].arcs;
                        let mut distinct: Vec<usize> = arcs.clone();
                        distinct.dedup();
                        if distinct.len() >= 2 {
                            let a = distinct[rng.below(distinct.len())];
                            let mut b = distinct[rng.below(distinct.len())];
                            while b == a {
                                b = distinct[rng.below(distinct.len())];
                            }
                            choice = Some(Move::R2 { face, over_arc: a, under_arc: b });
                            break;
                        }
                    }
                    match choice {
                        Some(m) => m,
                        None => continue,
                    }
                } else {
                    let arc = 1 + rng.below(d.arc_count());
                    let side = if rng.below(2) == 0 { R1Side::Left } else { R1Side::Right };
                    let sign = if rng.below(2) == 0 { 1 } else { -1 };
                    Move::R1 { arc, side, sign }
                };
                d = apply_move(&d, &emb, &next).unwrap();
                emb = Embedding::new(&d);
                assert_eq!(emb.genus(), genus0, "{} seq {}: move changed the surface", f.name, seq);
            }
            let (t0, t1) = checkerboard(&d, &emb).unwrap();
            assert_eq!(
                nu_set(&d, &emb, &t0, &t1),
                reference,
                "{} seq {}: nu set changed",
                f.name,
                seq
            );
        }
    }
    pass(11, "unordered nu-set unchanged under 20 random R1/R2 sequences per fixture");
}

#[test]
fn criterion_12_recursion_identities_on_graphs() {
    let mut rng = SplitMix64::new(0x7EC4);

    // Bundle identity: tau[G] = A^n tau[G - E_uv] + P_n tau[G / E_uv]
    // for the parallel bundle between two distinct non-base vertices,
    // n = -sum of the bundle's signs.
    let mut bundles_tested = 0;
    while bundles_tested < 100 {
        let n = 3 + rng.below(3);
        let mut edges = vec![];
        for v in 1..n {
            let u = rng.below(v);
            edges.push((u, v, if rng.below(2) == 0 { 1i8 } else { -1 }));
        }
        for _ in 0..rng.below(6) {
            edges.push((
                rng.below(n),
                rng.below(n),
                if rng.below(2) == 0 { 1 } else { -1 },
            ));
        }
        let g = SignedMultigraph::new(n, edges).unwrap();
        let mut found = None;
        'search: for u in 1..n {
            for v in (u + 1)..n {
                let bundle: Vec<usize> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| (e.u, e.v) == (u, v) || (e.u, e.v) == (v, u))
                    .map(|(id, _)| id)
                    .collect();
                if !bundle.is_empty() {
                    found = Some(bundle);
                    break 'search;
                }
            }
        }
        let Some(bundle) = found else { continue };
        bundles_tested += 1;
        let exp: i64 = -bundle.iter().map(|&id| g.edges()[id].sign as i64).sum::<i64>();
        let rhs = &tau(&g.without_edges(&bundle)).mul_monomial(1, exp)
            + &(&p_n(exp) * &tau(&g.contract_bundle(&bundle).unwrap()));
        assert_eq!(tau(&g), rhs);
        // order-independence ride-along on the same corpus
        assert_eq!(tau_random_order(&g, rng.next_u64()), tau(&g));
    }

    // Pendant identity: a vertex adjacent only to the base contributes the
    // factor A^n(-A^-2 - A^2) + P_n.
    for _ in 0..100 {
        let n = 2 + rng.below(4);
        let mut edges = vec![];
        let star_size = 1 + rng.below(3);
        for _ in 0..star_size {
            edges.push((0usize, n, if rng.below(2) == 0 { 1i8 } else { -1 }));
        }
        for v in 1..n {
            let u = rng.below(v);
            edges.push((u, v, if rng.below(2) == 0 { 1 } else { -1 }));
        }
        let g = SignedMultigraph::new(n + 1, edges).unwrap();
        let star: Vec<usize> = (0..star_size).collect();
        let exp: i64 = -star.iter().map(|&id| g.edges()[id].sign as i64).sum::<i64>();
        let factor = &LaurentPoly::circle().mul_monomial(1, exp) + &p_n(exp);
        assert_eq!(tau(&g), &factor * &tau(&g.contract_bundle(&star).unwrap()));
    }
    pass(12, "bundle and pendant deletion/contraction identities hold on 100 random graphs each");
}

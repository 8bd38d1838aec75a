use itertools::Itertools;
use proptest::prelude::*;
use toric_ranks::complex::{face_ring, minimal_nonfaces, FaceRingPresentation, SimplicialComplex, SquarefreeMonomial};
use toric_ranks::gale::{self, components, subsets_of_size, CyclicParams, VertexSubset};
use toric_ranks::hilton::{basic_product_count, mixed_wedge_spectrum, wedge_spectrum};
use toric_ranks::manifold::{
    connected_sum_homology, euler_characteristic, poincare_check, rational_homotopy_rank, ConnectedSumSpec,
    SphereProduct,
};
use toric_ranks::syzygy::{min_relation_degree, RelationAmongRelations};

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSubset> {
    (0..=n).flat_map(move |k| subsets_of_size(n, k))
}

#[test]
fn cyclic_faces_are_downward_closed() {
    for n in 3..=10 {
        for d in 2..n {
            let p = CyclicParams::new(n, d).unwrap();
            for x in all_subsets(n) {
                if gale::is_face(&x, p).unwrap() {
                    for y in x.facets() {
                        assert!(gale::is_face(&y, p).unwrap(), "{y} below face {x} of {p}");
                    }
                }
            }
        }
    }
}

#[test]
fn cyclic_polytopes_are_half_neighborly() {
    for n in 3..=12 {
        for d in 2..n {
            let p = CyclicParams::new(n, d).unwrap();
            assert!(gale::is_q_neighborly(p, d / 2).unwrap_or(true), "{p}");
            let ring = face_ring(&SimplicialComplex::from_cyclic(p));
            assert!(ring.generators().iter().all(|g| g.support().len() > d / 2), "{p}");
        }
    }
}

#[test]
fn c84_f_vector_and_euler_relation() {
    let k = SimplicialComplex::from_cyclic(CyclicParams::new(8, 4).unwrap());
    let f = k.f_vector();
    assert_eq!(f, vec![8, 28, 40, 20]);
    assert_eq!(f[0] as i64 - f[1] as i64 + f[2] as i64 - f[3] as i64, 0);
}

#[test]
fn necklace_identity() {
    for k in 1..=16u64 {
        for w in 1..=8u64 {
            let sum: u64 = (1..=w)
                .filter(|d| w % d == 0)
                .map(|d| d * basic_product_count::<u64>(k, d).unwrap())
                .sum();
            assert_eq!(sum, k.pow(w as u32), "k={k} w={w}");
        }
    }
}

#[test]
fn mixed_spectrum_agrees_with_single_dimension_spectrum() {
    for k in 1..=5u64 {
        for dim in [3u64, 5, 7, 9] {
            for ceiling in 0..=30 {
                let dims = vec![dim; k as usize];
                let a = mixed_wedge_spectrum::<u64>(&dims, ceiling).unwrap();
                let b = wedge_spectrum::<u64>(k, dim, ceiling).unwrap();
                assert_eq!(a, b, "k={k} dim={dim} ceiling={ceiling}");
                let expected: Vec<u64> = (1..)
                    .map(|w| (dim - 1) * w + 1)
                    .take_while(|&d| d <= ceiling)
                    .filter(|&d| basic_product_count::<u64>(k, (d - 1) / (dim - 1)).unwrap() > 0)
                    .collect();
                assert_eq!(b.entries().keys().copied().collect::<Vec<_>>(), expected);
            }
        }
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (4usize..=9).prop_flat_map(|m| {
        proptest::collection::vec(proptest::sample::subsequence((1..=m).collect::<Vec<_>>(), 2..=m.min(4)), 1..6)
            .prop_map(move |sets| {
                let sets = sets.into_iter().map(|s| VertexSubset::new(s, m).unwrap()).collect();
                SimplicialComplex::from_nonfaces(m, sets).unwrap()
            })
    })
}

fn arb_facet_complex() -> impl Strategy<Value = SimplicialComplex> {
    (4usize..=10).prop_flat_map(|m| {
        proptest::collection::vec(proptest::sample::subsequence((1..=m).collect::<Vec<_>>(), 1..=m.min(5)), 1..8)
            .prop_map(move |mut facets| {
                // keep every vertex covered
                facets.extend((1..=m).map(|v| vec![v]));
                let facets = facets.into_iter().map(|f| VertexSubset::new(f, m).unwrap()).collect();
                SimplicialComplex::from_facets(m, facets).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn components_partition_the_subset(bits in 0u32..(1 << 12)) {
        let n = 12;
        let x = VertexSubset::new((1..=n).filter(|v| bits & (1 << (v - 1)) != 0), n).unwrap();
        let comps = components(&x, n).unwrap();
        let flat: Vec<usize> = comps.iter().flat_map(|c| c.start..=c.end).collect();
        prop_assert_eq!(flat.as_slice(), x.as_slice());
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(c.start == 1 || !x.contains(c.start - 1));
            prop_assert!(!x.contains(c.end + 1));
            prop_assert_eq!(c.proper, c.start != 1 && c.end != n);
            prop_assert_eq!(c.odd, c.len() % 2 == 1);
        }
    }

    #[test]
    fn minimal_nonfaces_reconstruct_the_complex(k in arb_facet_complex()) {
        let m = k.vertex_count();
        let gens = minimal_nonfaces(&k);
        for (a, b) in gens.iter().tuple_combinations() {
            prop_assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
        }
        for s in all_subsets(m) {
            let contains_gen = gens.iter().any(|g| g.is_subset_of(&s));
            prop_assert_eq!(k.is_face(&s), !contains_gen);
            if contains_gen {
                prop_assert!(!k.is_face(&s));
            }
        }
        let again = SimplicialComplex::from_nonfaces(m, gens.to_vec()).unwrap();
        prop_assert_eq!(minimal_nonfaces(&again), gens);
        prop_assert_eq!(again.dim(), k.dim());
    }

    #[test]
    fn nonface_input_is_canonical(k in arb_complex()) {
        let gens = minimal_nonfaces(&k);
        prop_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        let ring = face_ring(&k);
        prop_assert!(FaceRingPresentation::new(k.vertex_count(), ring.generators().to_vec()).is_ok());
        for s in all_subsets(k.vertex_count()) {
            if k.is_face(&s) {
                for t in s.facets() {
                    prop_assert!(k.is_face(&t));
                }
            }
        }
    }

    #[test]
    fn relation_degree_band_and_witness(k in arb_complex()) {
        let ring = face_ring(&k);
        prop_assume!(ring.len() >= 2);
        let rel = min_relation_degree(&ring).unwrap();
        let g = ring.generators();
        let (a, b) = (g[rel.i].support().len(), g[rel.j].support().len());
        prop_assert!(2 * (a.max(b) + 1) <= rel.degree && rel.degree <= 2 * (a + b));
        prop_assert!(rel.i < rel.j);
        for (x, y) in g.iter().tuple_combinations() {
            prop_assert!(rel.degree <= 2 * x.support().union(y.support()).len());
        }
        let rebuilt = RelationAmongRelations::new(&ring, rel.i, rel.multiplier_i.clone(), rel.j, rel.multiplier_j.clone());
        prop_assert_eq!(rebuilt.unwrap(), rel.clone());
        let lhs = g[rel.i].support().union(rel.multiplier_i.support());
        let rhs = g[rel.j].support().union(rel.multiplier_j.support());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn relation_degree_ignores_order_and_labels(k in arb_complex(), seed in any::<u64>()) {
        let ring = face_ring(&k);
        prop_assume!(ring.len() >= 2);
        let m = ring.variable_count();
        // relabel vertices by a rotation-and-reflection derived from the seed
        let shift = (seed % m as u64) as usize;
        let flip = seed & 1 == 1;
        let relabel = |v: usize| {
            let r = (v - 1 + shift) % m;
            if flip { m - r } else { r + 1 }
        };
        let gens: Vec<SquarefreeMonomial> = ring
            .generators()
            .iter()
            .rev()
            .map(|g| SquarefreeMonomial::new(VertexSubset::new(g.support().as_slice().iter().map(|&v| relabel(v)), m).unwrap()).unwrap())
            .collect();
        let other = FaceRingPresentation::new(m, gens).unwrap();
        prop_assert_eq!(min_relation_degree(&other).unwrap().degree, min_relation_degree(&ring).unwrap().degree);
    }

    #[test]
    fn connected_sums_are_poincare_and_additive(
        a in proptest::collection::vec((1usize..4, 2usize..7), 1..4),
        b in proptest::collection::vec((1usize..4, 2usize..7), 1..4),
    ) {
        let dim = 12;
        let mk = |v: &[(usize, usize)]| {
            ConnectedSumSpec::new(v.iter().map(|&(k, m)| (k, SphereProduct::new(m, dim - m).unwrap()))).unwrap()
        };
        let (sa, sb) = (mk(&a), mk(&b));
        let both: Vec<(usize, usize)> = a.iter().chain(&b).copied().collect();
        let sab = mk(&both);
        let (ha, hb, hab) = (connected_sum_homology(&sa), connected_sum_homology(&sb), connected_sum_homology(&sab));
        prop_assert!(poincare_check(&hab));
        for k in 1..dim {
            prop_assert_eq!(hab.rank(k), ha.rank(k) + hb.rank(k));
        }
        prop_assert_eq!(euler_characteristic(&hab), euler_characteristic(&ha) + euler_characteristic(&hb) - 2);
        let low = a.iter().chain(&b).map(|&(_, m)| m.min(dim - m)).min().unwrap();
        for k in 1..low {
            prop_assert_eq!(hab.rank(k), 0);
        }
        let r = hab.connectivity_degree().unwrap();
        prop_assert_eq!(r, low);
        prop_assert_eq!(rational_homotopy_rank(&hab, r).unwrap(), hab.rank(r));
    }

    #[test]
    fn spec_normalization_is_idempotent(parts in proptest::collection::vec((1usize..20, 2usize..9), 1..6)) {
        let text = parts.iter().map(|&(k, m)| format!("{k} * S{} x S{m}", 10 - m)).join(" # ");
        let spec: ConnectedSumSpec = text.parse().unwrap();
        let again: ConnectedSumSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(&again, &spec);
        prop_assert_eq!(again.to_string(), spec.to_string());
        let reversed = parts.iter().rev().map(|&(k, m)| format!("{k}*S{m}xS{}", 10 - m)).join("#");
        prop_assert_eq!(reversed.parse::<ConnectedSumSpec>().unwrap(), spec);
    }
}

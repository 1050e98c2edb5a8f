mod common;

use kquiver::quiver::{in_orbit_closure, membership_table, orbit_representative, OrbitSpec, Quiver, QuiverRep};
use kquiver::resolution::{codim, minimal_pair};
use proptest::prelude::*;

use common::dim_vectors;

fn random_dag() -> impl Strategy<Value = Quiver> {
    (2usize..=6).prop_flat_map(|n| {
        proptest::collection::vec((1..=n, 1..=n), 0..8).prop_map(move |pairs| {
            // orient every edge from the smaller to the larger index
            let arrows = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
            Quiver::new(n, arrows).unwrap()
        })
    })
}

fn random_type_a() -> impl Strategy<Value = Quiver> {
    proptest::collection::vec(any::<bool>(), 1..=4).prop_map(|dirs| Quiver::type_a(&dirs))
}

proptest! {
    #[test]
    fn euler_form_on_simple_roots(q in random_dag()) {
        let n = q.num_vertices();
        for i in 1..=n {
            for j in 1..=n {
                let ei: Vec<usize> = (1..=n).map(|v| usize::from(v == i)).collect();
                let ej: Vec<usize> = (1..=n).map(|v| usize::from(v == j)).collect();
                let arrows = q.arrows().iter().filter(|&&a| a == (i, j)).count() as i64;
                prop_assert_eq!(q.euler_form(&ei, &ej).unwrap(), i64::from(i == j) - arrows);
            }
        }
    }

    #[test]
    fn root_count_is_orientation_free(q in random_type_a()) {
        let n = q.num_vertices();
        let roots = q.positive_roots().unwrap();
        prop_assert_eq!(roots.len(), n * (n + 1) / 2);
        for r in &roots {
            prop_assert_eq!(q.tits_form(r.as_slice()), 1);
        }
    }

    #[test]
    fn orbits_sum_to_the_dimension_vector(q in random_type_a(), seed in proptest::collection::vec(0usize..=2, 5)) {
        let e: Vec<usize> = seed[..q.num_vertices()].to_vec();
        let orbits = q.orbits(&e).unwrap();
        prop_assert!(!orbits.is_empty());
        for o in &orbits {
            let mut sum = vec![0; e.len()];
            for (root, &m) in o.mults() {
                for (s, &a) in sum.iter_mut().zip(root.as_slice()) {
                    *s += m * a;
                }
            }
            prop_assert_eq!(&sum, &e);
        }
        let mut sorted = orbits.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), orbits.len());
    }
}

#[test]
fn d_and_e_root_counts_for_other_orientations() {
    let d5 = Quiver::new(5, vec![(2, 1), (2, 3), (4, 3), (3, 5)]).unwrap();
    assert_eq!(d5.positive_roots().unwrap().len(), 20);
    let d6 = Quiver::new(6, vec![(1, 2), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
    assert_eq!(d6.positive_roots().unwrap().len(), 30);
    let e6 = Quiver::new(6, vec![(2, 1), (2, 3), (4, 3), (4, 5), (6, 3)]).unwrap();
    assert_eq!(e6.positive_roots().unwrap().len(), 36);
}

/// The orbit poset of small type-A quivers: closure membership between
/// canonical representatives is a partial order that refines codimension.
#[test]
fn orbit_closure_is_a_partial_order() {
    let quivers = [Quiver::type_a(&[true]), Quiver::inbound_a3(), Quiver::outbound_a3(), Quiver::type_a(&[true, true])];
    for q in &quivers {
        for e in dim_vectors(q.num_vertices(), 2) {
            let orbits: Vec<OrbitSpec> = q.orbits(&e).unwrap();
            let reps: Vec<QuiverRep> = orbits.iter().map(|o| orbit_representative(q, o).unwrap()).collect();
            let codims: Vec<usize> =
                orbits.iter().map(|o| codim(q, &e, &minimal_pair(q, o).unwrap()).unwrap()).collect();
            let k = orbits.len();
            let below: Vec<Vec<bool>> =
                (0..k).map(|a| (0..k).map(|b| in_orbit_closure(q, &reps[a], &orbits[b]).unwrap()).collect()).collect();
            for a in 0..k {
                assert!(below[a][a], "reflexive at {:?}", orbits[a].mults());
                for b in 0..k {
                    if a != b && below[a][b] {
                        assert!(!below[b][a], "antisymmetric");
                        assert!(codims[a] > codims[b], "smaller orbit has larger codimension");
                    }
                    for c in 0..k {
                        if below[a][b] && below[b][c] {
                            assert!(below[a][c], "transitive");
                        }
                    }
                }
            }
            let zero = QuiverRep::zero(q, e.clone());
            for o in &orbits {
                assert!(in_orbit_closure(q, &zero, o).unwrap());
            }
        }
    }
}

#[test]
fn membership_table_reports_every_root() {
    let q = Quiver::inbound_a3();
    let orbit = q.orbits(&[1, 1, 1]).unwrap().into_iter().next().unwrap();
    let rep = orbit_representative(&q, &orbit).unwrap();
    let table = membership_table(&q, &rep, &orbit).unwrap();
    assert_eq!(table.len(), 6);
    assert!(table.iter().all(|row| row.candidate == row.orbit));
}

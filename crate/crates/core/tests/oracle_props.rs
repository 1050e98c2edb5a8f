mod common;

use kquiver::engine::{check_alternating, CoefficientTable};
use kquiver::gamma::key_degree;
use kquiver::oracle_a3::{inbound_c_table, inbound_table, outbound_d, outbound_table, porteous, A3OrbitMults};
use kquiver::partitions::Partition;
use kquiver::quiver::Quiver;
use kquiver::resolution::{codim, minimal_pair};

use common::dim_vectors;

fn all_mults(q: &Quiver) -> Vec<A3OrbitMults> {
    dim_vectors(3, 3)
        .into_iter()
        .flat_map(|e| q.orbits(&e).unwrap())
        .map(|o| A3OrbitMults::from_orbit(&o).unwrap())
        .collect()
}

fn table(q: &Quiver, m: &A3OrbitMults, tensor: kquiver::TensorElement) -> CoefficientTable {
    let pair = minimal_pair(q, &m.to_orbit()).unwrap();
    CoefficientTable { codim: codim(q, &m.dim(), &pair).unwrap(), tensor, pair, caveat: None }
}

#[test]
fn inbound_sign_law_and_codim() {
    let q = Quiver::inbound_a3();
    for m in all_mults(&q) {
        let shift = (m.m33 * m.m12 + m.m11 * m.m23) as i64;
        for (key, c) in inbound_c_table(&m).iter() {
            let exponent = key_degree(key) as i64 - shift;
            assert!(exponent >= 0);
            let sign = if exponent % 2 == 0 { 1 } else { -1 };
            assert!(sign * c > 0, "{m:?} at {key:?}");
            assert!(key[1].part(0) <= m.m11 + m.m33);
        }
        let t = table(&q, &m, inbound_table(&m).unwrap());
        assert_eq!(t.tensor.min_degree(), Some(t.codim), "{m:?}");
        assert!(check_alternating(&t).is_empty(), "{m:?}");
    }
}

#[test]
fn outbound_sign_law_and_codim() {
    let q = Quiver::outbound_a3();
    for m in all_mults(&q) {
        let t = table(&q, &m, outbound_table(&m).unwrap());
        assert_eq!(t.tensor.min_degree(), Some(t.codim), "{m:?}");
        assert!(check_alternating(&t).is_empty(), "{m:?}");
    }
    for (rows, cols) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let rect = Partition::rectangle(rows, cols);
        let inside = Partition::all_in_rectangle(rows, cols);
        for l in &inside {
            for u in &inside {
                for n in &inside {
                    let d = outbound_d(&rect, l, u, n).unwrap();
                    let exponent = (l.weight() + u.weight() + n.weight()) as i64 - rect.weight() as i64;
                    assert!(d == 0 || exponent >= 0);
                    let sign = if exponent.rem_euclid(2) == 0 { 1 } else { -1 };
                    assert!(sign * d >= 0);
                }
            }
        }
    }
}

#[test]
fn porteous_degree_is_codim() {
    let a2 = Quiver::type_a(&[true]);
    for e1 in 0..=4 {
        for e2 in 0..=4 {
            for r in 0..=e1.min(e2) {
                let t = porteous(e1, e2, r).unwrap();
                assert_eq!(t.min_degree(), Some((e1 - r) * (e2 - r)));
                let orbit = a2
                    .orbits(&[e1, e2])
                    .unwrap()
                    .into_iter()
                    .find(|o| o.mult(&kquiver::quiver::Root(vec![1, 1])) == r)
                    .unwrap();
                assert_eq!(codim(&a2, &[e1, e2], &minimal_pair(&a2, &orbit).unwrap()).unwrap(), (e1 - r) * (e2 - r));
            }
        }
    }
}

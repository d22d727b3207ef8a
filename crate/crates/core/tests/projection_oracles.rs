//! Region projections checked against certificates that do not search
//! faces: first-order optimality over the up-sets of the orientation, and
//! pool-adjacent-violators on braid regions.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arrangeproj::combinatorics::{
    enumerate_acyclic_orientations, orientation_of_permutation, AcyclicOrientation, Graph, OrderedSetPartition,
    Permutation,
};
use arrangeproj::geometry::{
    braid_generic_point, good_face_min_criterion, graphical_generic_point, is_good_face, lrmax_generic_point,
    pava_chain_projection, GraphicalFace, RationalPoint, RegionProjector,
};

/// `p` is the nearest point to `v` of the cone `{x : x_h ≥ x_t for every arc}`
/// exactly when `p` lies in the cone, the residual `r = v − p` sums to zero,
/// is orthogonal to `p`, and sums to at most zero over every up-set (a set
/// holding the head of each arc whose tail it holds).
fn is_projection(gamma: &AcyclicOrientation<'_>, v: &RationalPoint, p: &RationalPoint) -> bool {
    let n = v.len();
    if !gamma.arcs().all(|(t, h)| p.at(h) >= p.at(t)) {
        return false;
    }
    let r: Vec<BigRational> = (1..=n).map(|i| v.at(i) - p.at(i)).collect();
    let total = r.iter().fold(BigRational::zero(), |a, x| a + x);
    let inner = (1..=n).fold(BigRational::zero(), |a, i| a + &r[i - 1] * p.at(i));
    if !total.is_zero() || !inner.is_zero() {
        return false;
    }
    (0u32..1 << n).all(|mask| {
        let member = |i: usize| mask >> (i - 1) & 1 == 1;
        let up_set = gamma.arcs().all(|(t, h)| !member(t) || member(h));
        !up_set || (1..=n).filter(|&i| member(i)).fold(BigRational::zero(), |a, i| a + &r[i - 1]) <= BigRational::zero()
    })
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> RationalPoint {
    let coords = (0..n).map(|_| BigRational::new(rng.gen_range(-500i64..500).into(), rng.gen_range(1i64..20).into()));
    RationalPoint::new(coords.collect())
}

#[test]
fn certificate_accepts_and_rejects() {
    let p3 = Graph::path(3);
    let gamma = AcyclicOrientation::from_arcs(&p3, &[(1, 2), (3, 2)]).unwrap();
    let v = graphical_generic_point(3);
    assert!(is_projection(&gamma, &v, &RationalPoint::from_integers(&[1596, 1596, 1])));
    // in the region, but not nearest
    assert!(!is_projection(&gamma, &v, &RationalPoint::from_integers(&[1597, 1597, 1])));
    assert!(!is_projection(&gamma, &v, &v));
}

#[test]
fn oracle_and_closed_form_satisfy_certificate_at_generic_points() {
    for n in 1..=5 {
        let v = graphical_generic_point(n);
        for g in Graph::all(n) {
            let projector = RegionProjector::new(&g, v.clone()).unwrap();
            for gamma in enumerate_acyclic_orientations(&g) {
                let oracle = projector.oracle(&gamma).unwrap();
                assert!(is_projection(&gamma, &v, &oracle.point), "graph {g} region {gamma}");
                assert!(oracle.face.contains_in_interior(&g, &oracle.point));
                assert_eq!(projector.closed_form(&gamma).unwrap(), oracle);
            }
        }
    }
}

#[test]
fn oracle_satisfies_certificate_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        for g in Graph::all(n) {
            for _ in 0..3 {
                let v = random_point(&mut rng, n);
                let projector = RegionProjector::new(&g, v.clone()).unwrap();
                for gamma in enumerate_acyclic_orientations(&g) {
                    let oracle = projector.oracle(&gamma).unwrap();
                    assert!(is_projection(&gamma, &v, &oracle.point), "graph {g} region {gamma} point {v}");
                    assert!(oracle.face.contains_in_interior(&g, &oracle.point));
                }
            }
        }
    }
}

#[test]
fn closed_form_refuses_points_outside_its_hypothesis() {
    let p3 = Graph::path(3);
    let projector = RegionProjector::new(&p3, braid_generic_point(3)).unwrap();
    let gamma = &enumerate_acyclic_orientations(&p3)[0];
    assert!(projector.closed_form(gamma).is_err());
    assert!(projector.oracle(gamma).is_ok());
}

#[test]
fn pava_matches_oracle_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=5 {
        let kn = Graph::complete(n);
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        for _ in 0..100 {
            let v = random_point(&mut rng, n);
            let projector = RegionProjector::new(&kn, v.clone()).unwrap();
            for sigma in &perms {
                let gamma = orientation_of_permutation(&kn, sigma);
                let pava = pava_chain_projection(&v, sigma);
                assert_eq!(projector.oracle(&gamma).unwrap().point, pava, "v {v} sigma {sigma}");
                assert!(is_projection(&gamma, &v, &pava));
            }
        }
    }
}

#[test]
fn pava_matches_oracle_at_generic_points() {
    for n in 1..=5 {
        let kn = Graph::complete(n);
        for v in [braid_generic_point(n), graphical_generic_point(n)] {
            let projector = RegionProjector::new(&kn, v.clone()).unwrap();
            for sigma in Permutation::all(n) {
                let oracle = projector.oracle(&orientation_of_permutation(&kn, &sigma)).unwrap();
                assert_eq!(oracle.point, pava_chain_projection(&v, &sigma));
            }
        }
    }
}

#[test]
fn projection_is_nearest_among_sampled_region_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in 2..=5 {
        let v = graphical_generic_point(n);
        for _ in 0..20 {
            let g = Graph::random(n, &mut rng);
            let projector = RegionProjector::new(&g, v.clone()).unwrap();
            for gamma in enumerate_acyclic_orientations(&g) {
                let p = projector.oracle(&gamma).unwrap().point;
                let nearest = v.sq_dist(&p);
                for sigma in gamma.linear_extensions().iter().take(4) {
                    // weakly decreasing values along a linear extension stay in the closed region
                    let mut values: Vec<i64> = (0..n).map(|_| rng.gen_range(-4000..4000)).collect();
                    values.sort_unstable_by(|a, b| b.cmp(a));
                    let mut coords = vec![0i64; n];
                    for (k, &i) in sigma.word().iter().enumerate() {
                        coords[i - 1] = values[k];
                    }
                    let x = RationalPoint::from_integers(&coords);
                    assert!(gamma.arcs().all(|(t, h)| x.at(h) >= x.at(t)));
                    assert!(nearest <= v.sq_dist(&x), "graph {g} region {gamma} sample {x}");
                }
            }
        }
    }
}

#[test]
fn min_criterion_matches_geometric_goodness() {
    for n in 1..=5 {
        let kn = Graph::complete(n);
        let v = braid_generic_point(n);
        for pi in OrderedSetPartition::all(n) {
            let face = GraphicalFace::from_ordered(&kn, &pi).unwrap();
            assert_eq!(good_face_min_criterion(&pi), is_good_face(&kn, &v, &face), "face {pi}");
        }
    }
}

#[test]
fn lr_max_point_counts_left_to_right_maxima() {
    for n in 1..=5 {
        let kn = Graph::complete(n);
        let projector = RegionProjector::new(&kn, lrmax_generic_point(n)).unwrap();
        for sigma in Permutation::all(n) {
            let pd = projector.oracle(&orientation_of_permutation(&kn, &sigma)).unwrap().pd;
            assert_eq!(pd, sigma.lr_max(), "sigma {sigma}");
        }
    }
}

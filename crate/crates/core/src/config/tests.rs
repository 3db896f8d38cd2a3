use super::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{strict_transform_of_exceptional, SurfaceModel};
use crate::random::{random_configuration, random_specs, RandomShape};

const P2: SurfaceModel = SurfaceModel::ProjectivePlane;

fn build(specs: &[(PointId, &[PointId])]) -> Result<Configuration, ConfigError> {
    Configuration::build(specs.iter().map(|(id, p)| (*id, p.to_vec())), P2)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| ints(r)).collect())
}

pub(crate) fn example12() -> Configuration {
    build(&[
        (1, &[]),
        (2, &[1]),
        (3, &[2]),
        (4, &[2]),
        (5, &[4, 2]),
        (6, &[]),
        (7, &[6]),
        (8, &[7, 6]),
        (9, &[8]),
        (10, &[]),
        (11, &[10]),
        (12, &[10]),
    ])
    .unwrap()
}

#[test]
fn singleton() {
    let c = build(&[(1, &[])]).unwrap();
    assert_eq!(c.origins(), vec![1]);
    assert_eq!(c.ends(), vec![1]);
    let class = &c.classify()[0];
    assert!(class.origin && class.end);
    assert_eq!(class.kind, PointKind::Free);
    assert_eq!(class.level, 0);
    let pm = c.proximity_matrix();
    assert_eq!(pm.matrix(), &matrix(&[&[1]]));
    assert_eq!(pm.inverse(), &matrix(&[&[1]]));
    assert_eq!(c.multiplicity_vector().values(), ints(&[1]).as_slice());
    let e = c.exceptional_self_intersections();
    assert_eq!(e.get(1), Some(-1));
    assert_eq!(e.gamma(), 1);
}

#[test]
fn chain_of_two() {
    let c = build(&[(1, &[]), (2, &[1])]).unwrap();
    let pm = c.proximity_matrix();
    assert_eq!(pm.matrix(), &matrix(&[&[1, 0], &[-1, 1]]));
    assert_eq!(pm.inverse(), &matrix(&[&[1, 0], &[1, 1]]));
    assert!(c.to_dot().contains("p2 -> p1 [style=solid];"));
}

#[test]
fn satellite_chain() {
    let c = build(&[(1, &[]), (2, &[1]), (3, &[2, 1])]).unwrap();
    assert_eq!(c.point(3).unwrap().kind(), PointKind::Satellite);
    assert_eq!(c.point(3).unwrap().parent(), Some(2));
    assert_eq!(c.point(3).unwrap().satellite_target(), Some(1));
    let pm = c.proximity_matrix();
    assert_eq!(
        pm.matrix(),
        &matrix(&[&[1, 0, 0], &[-1, 1, 0], &[-1, -1, 1]])
    );
    assert_eq!(pm.inverse(), &matrix(&[&[1, 0, 0], &[1, 1, 0], &[2, 1, 1]]));
}

#[test]
fn build_errors() {
    assert_eq!(build(&[]), Err(ConfigError::Empty));
    assert_eq!(
        build(&[(1, &[]), (1, &[])]),
        Err(ConfigError::DuplicateId { id: 1 })
    );
    assert_eq!(build(&[(1, &[]), (3, &[1])]), Err(ConfigError::MissingId { id: 2 }));
    assert_eq!(
        build(&[(1, &[]), (2, &[2])]),
        Err(ConfigError::ForwardReference { id: 2, target: 2 })
    );
    assert_eq!(
        build(&[(1, &[]), (2, &[1]), (3, &[2, 1]), (4, &[3, 2, 1])]),
        Err(ConfigError::TooManyProximities { id: 4, count: 3 })
    );
    // parent listed second
    assert_eq!(
        build(&[(1, &[]), (2, &[1]), (3, &[2, 1]), (4, &[2, 3])]),
        Err(ConfigError::Normalization { id: 4 })
    );
    // 3 is proximate to 2 only, so 4 cannot be proximate to 3 and 1
    assert!(matches!(
        build(&[(1, &[]), (2, &[1]), (3, &[2]), (4, &[3, 1])]),
        Err(ConfigError::InvalidSatellite { id: 4, parent: 3, target: 1 })
    ));
    // both 3 and 4 would be the satellite point between 2 and 1
    assert_eq!(
        build(&[(1, &[]), (2, &[1]), (3, &[2, 1]), (4, &[2, 1])]),
        Err(ConfigError::DuplicateSatellite { id: 4, other: 3 })
    );
    // a satellite of a chain that passes through 4
    assert!(build(&[(1, &[]), (2, &[1]), (3, &[2, 1]), (4, &[3, 1])]).is_ok());
}

#[test]
fn build_accepts_unsorted_specs() {
    let c = build(&[(2, &[1]), (1, &[])]).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c.point(2).unwrap().level(), 1);
}

#[test]
fn example_classification() {
    let c = example12();
    assert_eq!(c.origins(), vec![1, 6, 10]);
    assert_eq!(c.ends(), vec![3, 5, 9, 11, 12]);
    let satellites: Vec<PointId> = c
        .points()
        .iter()
        .filter(|p| p.kind() == PointKind::Satellite)
        .map(Point::id)
        .collect();
    assert_eq!(satellites, vec![5, 8]);
    let levels: Vec<usize> = c.points().iter().map(Point::level).collect();
    assert_eq!(levels, vec![0, 1, 2, 2, 3, 0, 1, 2, 3, 0, 1, 1]);
    assert_eq!(c.origin_of(9), Some(6));
    assert!(c.is_infinitely_near(5, 1));
    assert!(!c.is_infinitely_near(5, 3));
}

#[test]
fn example_subconfigurations() {
    let c = example12();
    let below = c.subconfiguration(1, Direction::Below).unwrap();
    assert_eq!(below.original_ids, vec![1, 2, 3, 4, 5]);
    assert_eq!(below.configuration.len(), 5);
    let above = c.subconfiguration(5, Direction::Above).unwrap();
    assert_eq!(above.original_ids, vec![1, 2, 4, 5]);
    assert_eq!(
        above.configuration.point(4).unwrap().proximities(),
        &[3, 2]
    );
    let below = c.subconfiguration(10, Direction::Below).unwrap();
    assert_eq!(below.original_ids, vec![10, 11, 12]);
    assert_eq!(below.configuration.origins(), vec![1]);
}

#[test]
fn subconfiguration_below_a_non_origin_can_dangle() {
    let c = example12();
    assert_eq!(
        c.subconfiguration(4, Direction::Below),
        Err(ConfigError::DanglingProximity { id: 5, target: 2 })
    );
    assert_eq!(
        c.subconfiguration(13, Direction::Below),
        Err(ConfigError::UnknownPoint { id: 13 })
    );
}

#[test]
fn example_self_intersections() {
    let e = example12().exceptional_self_intersections();
    assert_eq!(e.get(2), Some(-4));
    assert_eq!(e.get(10), Some(-3));
    assert_eq!(e.gamma(), 4);
}

#[test]
fn hat_multiplicities() {
    // {p1, p2, p3, q1, p4, p5} in blowup order
    let c = build(&[
        (1, &[]),
        (2, &[1]),
        (3, &[2]),
        (4, &[3, 2]),
        (5, &[2]),
        (6, &[5, 2]),
    ])
    .unwrap();
    assert_eq!(c.multiplicity_vector().values(), ints(&[4, 4, 1, 1, 1, 1]).as_slice());
    // {p6, p7, p8, p9, q2}
    let c = build(&[(1, &[]), (2, &[1]), (3, &[2, 1]), (4, &[3]), (5, &[4, 3])]).unwrap();
    assert_eq!(c.multiplicity_vector().values(), ints(&[4, 2, 2, 1, 1]).as_slice());
}

#[test]
fn example_dot() {
    let dot = example12().to_dot();
    assert!(dot.starts_with("digraph proximity {"));
    assert_eq!(dot.matches("[label=").count(), 12);
    assert_eq!(dot.matches("[style=solid]").count(), 9);
    assert_eq!(dot.matches("[style=dashed]").count(), 2);
    assert!(dot.contains("p5 -> p2 [style=dashed];"));
    assert!(dot.contains("p8 -> p6 [style=dashed];"));
    let single = build(&[(1, &[])]).unwrap().to_dot();
    assert_eq!(single.matches("[label=").count(), 1);
    assert!(!single.contains("->"));
}

#[test]
fn config_file_round_trip() {
    let c = example12();
    let text = c.to_config_text();
    assert_eq!(parse_configuration(&text).unwrap(), c);
    let f = c.with_surface(SurfaceModel::hirzebruch(2));
    assert_eq!(parse_configuration(&f.to_config_text()).unwrap(), f);
}

#[test]
fn config_file_errors() {
    let err = parse_configuration("surface p2\n1 origin\n2 -> 1\n\n5 -> 7\n").unwrap_err();
    assert_eq!(err.line(), Some(5));
    assert!(matches!(
        err,
        ConfigFileError::Invalid {
            error: ConfigError::ForwardReference { id: 5, target: 7 },
            ..
        }
    ));
    assert_eq!(
        parse_configuration("# nothing\n1 origin\n").unwrap_err(),
        ConfigFileError::MissingSurface
    );
    assert!(matches!(
        parse_configuration("surface p2\n1 -> \n"),
        Err(ConfigFileError::Syntax { line: 2, .. })
    ));
    assert!(matches!(
        parse_configuration("surface q7\n1 origin\n"),
        Err(ConfigFileError::Syntax { line: 1, .. })
    ));
    let err = parse_configuration("surface p2\n1 origin\n2 -> 1\n3 -> 2\n4 -> 3 1\n").unwrap_err();
    assert_eq!(err.line(), Some(5));
}

#[test]
fn config_file_comments_and_hirzebruch() {
    let c = parse_configuration("# header\nsurface f 3 # F_3\n1 origin\n2 -> 1 # free\n").unwrap();
    assert_eq!(c.surface(), SurfaceModel::hirzebruch(3));
    assert_eq!(c.len(), 2);
}

fn shapes() -> impl Strategy<Value = (u64, usize, bool)> {
    (any::<u64>(), 1usize..=30, any::<bool>())
}

fn random(seed: u64, n: usize, multi: bool) -> Configuration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = if multi {
        RandomShape::multi_origin(n)
    } else {
        RandomShape::single_origin(n)
    };
    random_configuration(&mut rng, shape, P2)
}

proptest! {
    #[test]
    fn inverse_is_exact_and_nonnegative((seed, n, multi) in shapes()) {
        let c = random(seed, n, multi);
        let pm = c.proximity_matrix();
        prop_assert!(pm.matrix().is_unit_lower_triangular());
        prop_assert!((pm.matrix() * pm.inverse()).is_identity());
        prop_assert!((pm.inverse() * pm.matrix()).is_identity());
        for row in pm.inverse().rows() {
            prop_assert!(row.iter().all(|x| x >= &BigInt::from(0)));
        }
    }

    #[test]
    fn transpose_times_multiplicities_is_end_indicator((seed, n, multi) in shapes()) {
        let c = random(seed, n, multi);
        let pm = c.proximity_matrix();
        let got = pm.matrix().transpose_mul_vec(c.multiplicity_vector().values());
        let want: Vec<BigInt> = (1..=c.len())
            .map(|id| BigInt::from(c.is_end(id) as i64))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn classification_is_consistent((seed, n, multi) in shapes()) {
        let c = random(seed, n, multi);
        let m = c.multiplicity_vector();
        for class in c.classify() {
            let p = c.point(class.id).unwrap();
            prop_assert_eq!(p.proximities().is_empty(), class.origin);
            prop_assert_eq!(class.origin, class.level == 0);
            let one = m.get(class.id).unwrap() == &BigInt::from(1);
            prop_assert_eq!(class.end, one && c.proximate_to(class.id).is_empty());
        }
    }

    #[test]
    fn graph_self_intersections_match_lattice((seed, n, multi) in shapes()) {
        let c = random(seed, n, multi);
        let e = c.exceptional_self_intersections();
        for q in 1..=c.len() {
            let cls = strict_transform_of_exceptional(&c, q).unwrap();
            prop_assert_eq!(cls.self_intersection(), crate::Rational::from_integer(e.get(q).unwrap().into()));
        }
    }

    #[test]
    fn renumbering_permutes_strict_multiplicities(seed in any::<u64>(), n in 2usize..=20) {
        // Interleave two independent single-origin configurations in a
        // random admissible order; P⁻¹m must follow the relabeling.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_specs(&mut rng, RandomShape::single_origin(n / 2 + 1));
        let b = random_specs(&mut rng, RandomShape::single_origin(n - n / 2));
        let concat: Vec<(PointId, Vec<PointId>)> = a
            .iter()
            .cloned()
            .chain(b.iter().map(|(id, p)| (id + a.len(), p.iter().map(|t| t + a.len()).collect())))
            .collect();
        let mut order: Vec<bool> = std::iter::repeat_n(true, a.len())
            .chain(std::iter::repeat_n(false, b.len()))
            .collect();
        rand::seq::SliceRandom::shuffle(order.as_mut_slice(), &mut rng);
        let (mut ia, mut ib) = (0, a.len());
        let mut new_of_old = vec![0; concat.len() + 1];
        for (k, from_a) in order.iter().enumerate() {
            let old = if *from_a { ia += 1; ia } else { ib += 1; ib };
            new_of_old[old] = k + 1;
        }
        let relabeled: Vec<(PointId, Vec<PointId>)> = concat
            .iter()
            .map(|(id, p)| (new_of_old[*id], p.iter().map(|t| new_of_old[*t]).collect()))
            .collect();
        let c1 = Configuration::build(concat, P2).unwrap();
        let c2 = Configuration::build(relabeled, P2).unwrap();
        let s1 = c1.proximity_matrix().solve(c1.multiplicity_vector().values());
        let s2 = c2.proximity_matrix().solve(c2.multiplicity_vector().values());
        for old in 1..=c1.len() {
            prop_assert_eq!(&s1[old - 1], &s2[new_of_old[old] - 1]);
        }
    }

    #[test]
    fn config_text_round_trips((seed, n, multi) in shapes()) {
        let c = random(seed, n, multi);
        prop_assert_eq!(parse_configuration(&c.to_config_text()).unwrap(), c);
    }
}

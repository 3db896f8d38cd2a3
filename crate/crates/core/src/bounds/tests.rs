use super::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::tests::example12;
use crate::lattice::strict_transform_of_exceptional;
use crate::random::{random_configuration, RandomShape};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn singleton() -> Configuration {
    Configuration::build([(1, vec![])], SurfaceModel::ProjectivePlane).unwrap()
}

#[test]
fn example_inputs() {
    let inputs = BoundInputs::from_configuration(&example12());
    assert_eq!(inputs.n_stated, BigInt::from(12));
    assert_eq!(inputs.n_example, BigInt::from(16));
    assert_eq!(inputs.d, BigInt::from(23));
    assert_eq!(inputs.gamma, BigInt::from(4));
    assert!(inputs.conventions_differ());
}

#[test]
fn teo2_cases() {
    let c = example12();
    let t = teo2_bounds(&c);
    assert_eq!(t.non_invariant.bound, q(-43));
    assert_eq!(t.invariant.bound, q(23 * (1 - 12)));
    for delta in 0..6i64 {
        let t = teo2_bounds(&c.with_surface(SurfaceModel::hirzebruch(delta as u32)));
        assert_eq!(t.non_invariant.bound, q(-44 - delta));
    }
    let t = teo2_bounds(&singleton());
    assert_eq!(t.non_invariant.bound, q(-1));
    assert_eq!(t.invariant.bound, q(0));
}

#[test]
fn pullback_bounds_of_example() {
    let c = example12();
    let rep = cor_cotaejemplo_bounds(&c, NConvention::Example);
    assert_eq!(rep.term("3-2d"), Some(&q(-43)));
    assert_eq!(rep.term("d(1-n)"), Some(&q(-345)));
    assert_eq!(rep.bound, q(-345));
    assert!(rep.convention_warning().is_some());
    for delta in 0..6i64 {
        let f = c.with_surface(SurfaceModel::hirzebruch(delta as u32));
        let rep = cor_cotaejemplo_bounds(&f, NConvention::Example);
        assert_eq!(rep.term("2-2d-delta"), Some(&q(-44 - delta)));
        assert_eq!(rep.term("-n-delta"), Some(&q(-16 - delta)));
        assert_eq!(rep.term("-(delta+2)dn"), Some(&q(-368 * (2 + delta))));
        assert_eq!(rep.bound, q(-368 * (2 + delta)));
        let rep = cor_cotaejemplo_bounds(&f, NConvention::Stated);
        assert_eq!(rep.term("-n-delta"), Some(&q(-12 - delta)));
        assert_eq!(rep.bound, q(-276 * (2 + delta)));
    }
}

#[test]
fn delta_nef_bounds_of_example() {
    let c = example12();
    let rep = cor_expl1_bounds(&c, &q(1), NConvention::Stated).unwrap();
    let names: Vec<&str> = rep.terms.iter().map(|t| t.name.as_str()).collect();
    assert_eq!(names, ["(3-2d)/eps", "d(1-n)/eps", "-gamma"]);
    let values: Vec<Rational> = rep.terms.iter().map(|t| t.value.clone()).collect();
    assert_eq!(values, [q(-43), q(-253), q(-4)]);
    assert_eq!(rep.bound, q(-253));
    let rep = cor_expl1_bounds(&c, &q(1), NConvention::Example).unwrap();
    assert_eq!(rep.bound, q(-345));
    assert_eq!(rep.epsilon, Some(q(1)));

    let rep = cor_expl1_bounds(&singleton(), &r(1, 2), NConvention::Stated).unwrap();
    assert_eq!(rep.term("(3-2d)/eps"), Some(&q(-2)));
    assert_eq!(rep.term("d(1-n)/eps"), Some(&q(0)));
    assert_eq!(rep.term("-gamma"), Some(&q(-1)));
    assert_eq!(rep.bound, q(-2));
    assert!(rep.convention_warning().is_none());

    assert_eq!(
        cor_expl1_bounds(&c, &q(0), NConvention::Stated),
        Err(BoundsError::NonPositiveEpsilon(q(0)))
    );
    assert!(cor_expl1_bounds(&c, &r(-1, 3), NConvention::Stated).is_err());
}

#[test]
fn hirzebruch_delta_nef_bounds() {
    let c = example12().with_surface(SurfaceModel::hirzebruch(3));
    let rep = cor_expl1_bounds(&c, &r(1, 2), NConvention::Stated).unwrap();
    assert_eq!(rep.term("(2-2d-delta)/eps"), Some(&q(-94)));
    assert_eq!(rep.term("(-n-delta)/eps"), Some(&q(-30)));
    assert_eq!(rep.term("-(delta+2)dn/eps"), Some(&q(-2 * 5 * 23 * 12)));
    assert_eq!(rep.term("-gamma"), Some(&q(-4)));
    let short = cor_expl1_short_bounds_for(&BoundInputs::from_configuration(&c), &r(1, 2), NConvention::Stated).unwrap();
    assert_eq!(short.term("(-n-delta)/eps"), None);
    assert_eq!(short.bound, rep.bound);
}

#[test]
fn empty_configuration_has_zero_gamma() {
    let inputs = BoundInputs::for_configuration(None, SurfaceModel::ProjectivePlane);
    assert_eq!(inputs.gamma, BigInt::zero());
    let rep = cor_expl1_bounds_for(&inputs, &q(1), NConvention::Stated).unwrap();
    assert_eq!(rep.term("-gamma"), Some(&q(0)));
    assert_eq!(rep.bound, q(0));
    let overridden = BoundInputs::from_configuration(&singleton()).with_gamma(7);
    assert_eq!(overridden.gamma, BigInt::from(7));
}

#[test]
fn beta_bounds() {
    let p2 = SurfaceModel::ProjectivePlane;
    assert_eq!(beta_bound(FoliationDegree::Plane(1), p2).unwrap(), q(0));
    assert_eq!(beta_bound(FoliationDegree::Plane(5), p2).unwrap(), q(-4));
    assert_eq!(
        beta_bound(FoliationDegree::Hirzebruch(3, 2), SurfaceModel::hirzebruch(1)).unwrap(),
        q(-5)
    );
    assert_eq!(
        beta_bound_scaled(FoliationDegree::Plane(5), p2, &r(2, 3)).unwrap(),
        q(-6)
    );
    assert!(matches!(
        beta_bound(FoliationDegree::Plane(2), SurfaceModel::hirzebruch(0)),
        Err(BoundsError::FoliationMismatch { .. })
    ));
    assert!(beta_bound_scaled(FoliationDegree::Plane(2), p2, &q(0)).is_err());
    assert_eq!(generic_epsilon_bound(&r(1, 4)).unwrap(), q(-4));
    assert!(generic_epsilon_bound(&q(-1)).is_err());
}

#[test]
fn foliation_reports() {
    let p2 = SurfaceModel::ProjectivePlane;
    let rep = foliation_nu_bound(
        FoliationDegree::Plane(5),
        p2,
        Some(&q(2)),
        Some(&q(3)),
        Some(&BigInt::from(1)),
    )
    .unwrap();
    assert_eq!(rep.beta, BigInt::from(4));
    assert_eq!(rep.term_values(), vec![q(-2), q(-3), q(-1)]);
    assert_eq!(rep.bound, q(-3));
    let rep = foliation_nu_bound(FoliationDegree::Plane(5), p2, None, None, None).unwrap();
    assert_eq!(rep.bound, q(-4));
    let rep = generic_foliation_nu_bound(&r(1, 3), Some(&r(1, 2))).unwrap();
    assert_eq!(rep.bound, q(-3));
}

impl FoliationBoundReport {
    fn term_values(&self) -> Vec<Rational> {
        self.terms.iter().map(|t| t.value.clone()).collect()
    }
}

#[test]
fn attached_degrees() {
    let c = example12();
    assert_eq!(
        attached_foliation_degree_bounds(&c),
        AttachedDegreeBounds::Plane {
            r_max: BigInt::from(44),
            first_integral_degree: BigInt::from(23)
        }
    );
    assert_eq!(
        attached_foliation_degree_bounds(&singleton()),
        AttachedDegreeBounds::Plane {
            r_max: BigInt::from(2),
            first_integral_degree: BigInt::from(2)
        }
    );
    assert_eq!(
        attached_foliation_degree_bounds(&c.with_surface(SurfaceModel::hirzebruch(3))),
        AttachedDegreeBounds::Hirzebruch {
            r1_max: BigInt::from(47),
            r2_max: BigInt::from(44),
            first_integral_d1_max: BigInt::from(23),
            first_integral_d2: BigInt::from(23),
        }
    );
}

#[test]
fn empirical_nu_examples() {
    let e1 = DivisorClass::exceptional_generator(SurfaceModel::ProjectivePlane, 1, 1);
    let nu = empirical_nu(&[e1], &DivisorClass::line(1)).unwrap();
    assert_eq!(nu.value, None);
    assert_eq!(nu.curves[0].nef_dot_curve, q(0));

    let conic = DivisorClass::plane(2, &[1, 1, 1, 1, 1]);
    let nu = empirical_nu(&[conic], &DivisorClass::line(5)).unwrap();
    assert_eq!(nu.value, Some(r(-1, 2)));

    let c = example12();
    let e2 = strict_transform_of_exceptional(&c, 2).unwrap();
    let d = DivisorClass::parse_literal("3L - E2", c.surface(), c.len()).unwrap();
    let nu = empirical_nu(&[e2], &d).unwrap();
    assert_eq!(nu.curves[0].self_intersection, q(-4));
    assert_eq!(nu.curves[0].nef_dot_curve, q(1));
    assert_eq!(nu.value, Some(q(-4)));

    assert!(empirical_nu(&[DivisorClass::line(2)], &DivisorClass::line(1)).is_err());
}

#[test]
fn delta_membership_examples() {
    let l = DivisorClass::line(0);
    let check = delta_membership_check(&l, &l, &q(1), std::slice::from_ref(&l)).unwrap();
    assert!(check.passed());
    assert!(check.shifted_nonnegative_on_all);
    assert_eq!(check.shifted, DivisorClass::zero(SurfaceModel::ProjectivePlane, 0));

    let two_l = DivisorClass::plane(2, &[]);
    let check = delta_membership_check(&two_l, &l, &q(3), std::slice::from_ref(&l)).unwrap();
    assert!(!check.passed());
    assert_eq!(check.violations, vec![0]);
    assert_eq!(check.witnesses[0].shifted_dot_witness, q(-1));

    let g = DivisorClass::polarization(SurfaceModel::hirzebruch(2), 0);
    let witnesses = [
        DivisorClass::fiber(2, 0),
        DivisorClass::section(2, 0),
        special_section(2),
    ];
    let check = delta_membership_check(&g, &g, &r(1, 2), &witnesses).unwrap();
    assert!(check.passed());
    assert_eq!(check.shifted, g.scaled(&r(1, 2)));

    assert!(matches!(
        delta_membership_check(&l, &l, &q(0), &[]),
        Err(BoundsError::NonPositiveEpsilon(_))
    ));
    assert!(delta_membership_check(&l, &DivisorClass::fiber(0, 0), &q(1), &[]).is_err());
}

fn special_section(delta: u32) -> DivisorClass {
    crate::lattice::special_section_class(SurfaceModel::hirzebruch(delta), 0).unwrap()
}

#[test]
fn n_convention_tokens() {
    assert_eq!("stated".parse::<NConvention>(), Ok(NConvention::Stated));
    assert_eq!("example".parse::<NConvention>(), Ok(NConvention::Example));
    assert!("other".parse::<NConvention>().is_err());
    assert_eq!(NConvention::default(), NConvention::Stated);
}

fn surface_of(delta: Option<u32>) -> SurfaceModel {
    match delta {
        Some(d) => SurfaceModel::hirzebruch(d),
        None => SurfaceModel::ProjectivePlane,
    }
}

fn random(seed: u64, n: usize, delta: Option<u32>) -> Configuration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_configuration(&mut rng, RandomShape::multi_origin(n), surface_of(delta))
}

fn convention() -> impl Strategy<Value = NConvention> {
    prop_oneof![Just(NConvention::Stated), Just(NConvention::Example)]
}

proptest! {
    #[test]
    fn pullback_bound_is_min_of_curve_cases(
        seed in any::<u64>(), n in 1usize..=30, delta in proptest::option::of(0u32..6), conv in convention()
    ) {
        let inputs = BoundInputs::from_configuration(&random(seed, n, delta));
        let t = teo2_bounds_for(&inputs, conv);
        let joint = std::cmp::min(t.non_invariant.bound, t.invariant.bound);
        prop_assert_eq!(cor_cotaejemplo_bounds_for(&inputs, conv).bound, joint);
    }

    #[test]
    fn fiber_term_is_redundant(
        seed in any::<u64>(), n in 1usize..=30, delta in 0u32..6, conv in convention(),
        num in 1i64..20, den in 1i64..20
    ) {
        let inputs = BoundInputs::from_configuration(&random(seed, n, Some(delta)));
        let eps = r(num, den);
        let full = cor_expl1_bounds_for(&inputs, &eps, conv).unwrap();
        let short = cor_expl1_short_bounds_for(&inputs, &eps, conv).unwrap();
        prop_assert!(full.term("-(delta+2)dn/eps") <= full.term("(-n-delta)/eps"));
        prop_assert_eq!(full.bound, short.bound);
    }

    #[test]
    fn doubling_epsilon_halves_scaled_terms(
        seed in any::<u64>(), n in 1usize..=30, delta in proptest::option::of(0u32..6), conv in convention(),
        num in 1i64..20, den in 1i64..20
    ) {
        let inputs = BoundInputs::from_configuration(&random(seed, n, delta));
        let eps = r(num, den);
        let a = cor_expl1_bounds_for(&inputs, &eps, conv).unwrap();
        let b = cor_expl1_bounds_for(&inputs, &(&eps * q(2)), conv).unwrap();
        prop_assert_eq!(a.terms.len(), b.terms.len());
        for (x, y) in a.terms.iter().zip(&b.terms) {
            prop_assert_eq!(&x.name, &y.name);
            if x.name == "-gamma" {
                prop_assert_eq!(&x.value, &y.value);
            } else {
                prop_assert_eq!(&x.value / q(2), y.value.clone());
            }
        }
    }

    #[test]
    fn exceptional_curves_respect_the_bound(
        seed in any::<u64>(), n in 1usize..=20, delta in proptest::option::of(0u32..4),
        coeffs in proptest::collection::vec(-3i64..4, 22), num in 1i64..10, den in 1i64..10
    ) {
        // For an integral D with D·E_q > 0 we have D·E_q ≥ 1, so
        // E_q²/(D·E_q) ≥ E_q² ≥ -γ, and -γ is one of the terms.
        let c = random(seed, n, delta);
        let base: Vec<Rational> = coeffs[..c.surface().rank()].iter().map(|&x| q(x)).collect();
        let exc: Vec<Rational> = coeffs[2..2 + c.len()].iter().map(|&x| q(x)).collect();
        let d = DivisorClass::new(c.surface(), base, exc).unwrap();
        let curves: Vec<DivisorClass> = (1..=c.len())
            .map(|q| strict_transform_of_exceptional(&c, q).unwrap())
            .collect();
        let nu = empirical_nu(&curves, &d).unwrap();
        let bound = cor_expl1_bounds(&c, &r(num, den), NConvention::Stated).unwrap().bound;
        if let Some(v) = nu.value {
            prop_assert!(v >= bound);
        }
    }
}

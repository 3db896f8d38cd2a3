// Intersection numbers on blowups of P2 and F_δ: the special section,
// Hirzebruch multiplicity limits, closure bidegrees and the non-invariant
// curve inequality C² ≥ -K·C.
//
//     cargo run --example lattice_pairing

use std::fmt::Write as _;

use lwbn::lattice::{
    bidegree_of_closure, invariant_bound_check, multiplicity_bound_check, special_section_class,
    AffineDegrees, Chart,
};
use lwbn::{DivisorClass, SurfaceModel};

pub fn run_example() -> String {
    let mut out = String::new();
    for delta in 0..4 {
        let f = SurfaceModel::hirzebruch(delta);
        let m0 = special_section_class(f, 0).unwrap();
        let fiber = DivisorClass::fiber(delta, 0);
        writeln!(
            out,
            "F{delta}: M0 = {m0}, M0^2 = {}, M0.F = {}",
            m0.self_intersection(),
            m0.dot(&fiber).unwrap()
        )
        .unwrap();
    }

    // a bidegree (1, 1) curve on F2 through three points
    let c = DivisorClass::parse_literal("F + M - E1 - E2 - 3E3", SurfaceModel::hirzebruch(2), 3).unwrap();
    let check = multiplicity_bound_check(&c).unwrap();
    writeln!(out, "{c}: C^2 = {}, limit {}, violators {:?}", c.self_intersection(), check.limit, check.violators).unwrap();

    for chart in [Chart::U00, Chart::U01, Chart::U10, Chart::U11] {
        let closure = bidegree_of_closure(SurfaceModel::hirzebruch(2), chart, AffineDegrees::with_corners(4)).unwrap();
        writeln!(out, "closure of a degree-4 curve from {chart}: {closure:?}").unwrap();
    }

    let k = DivisorClass::plane(2, &[0]);
    for curve in ["L", "2L - 5E1"] {
        let c = DivisorClass::parse_literal(curve, SurfaceModel::ProjectivePlane, 1).unwrap();
        let r = invariant_bound_check(&k, &c).unwrap();
        writeln!(
            out,
            "K = 2L, C = {curve}: C^2 = {} vs -K.C = {} -> {}",
            r.self_intersection,
            r.lower_bound,
            if r.holds() { "ok" } else { "cannot be a non-invariant curve" }
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

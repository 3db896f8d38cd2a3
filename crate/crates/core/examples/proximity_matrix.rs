// Builds the twelve-point configuration with three origins and prints its
// classification, proximity matrix, inverse, multiplicities and E_q².
//
//     cargo run --example proximity_matrix

use std::fmt::Write as _;

use lwbn::{Configuration, SurfaceModel};

pub fn run_example() -> String {
    let config = Configuration::build(
        [
            (1, vec![]),
            (2, vec![1]),
            (3, vec![2]),
            (4, vec![2]),
            (5, vec![4, 2]),
            (6, vec![]),
            (7, vec![6]),
            (8, vec![7, 6]),
            (9, vec![8]),
            (10, vec![]),
            (11, vec![10]),
            (12, vec![10]),
        ],
        SurfaceModel::ProjectivePlane,
    )
    .expect("valid proximity structure");

    let mut out = String::new();
    let e_sq = config.exceptional_self_intersections();
    let m = config.multiplicity_vector();
    writeln!(out, "origins {:?}, ends {:?}", config.origins(), config.ends()).unwrap();
    for class in config.classify() {
        writeln!(
            out,
            "p{:<2} level {} {:<9} m = {} E^2 = {}",
            class.id,
            class.level,
            class.kind,
            m.get(class.id).unwrap(),
            e_sq.get(class.id).unwrap()
        )
        .unwrap();
    }
    writeln!(out, "gamma = {}", e_sq.gamma()).unwrap();
    let pm = config.proximity_matrix();
    writeln!(out, "P =\n{}P^-1 =\n{}", pm.matrix(), pm.inverse()).unwrap();
    writeln!(out, "P^T m = {:?}", pm.matrix().transpose_mul_vec(m.values())).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

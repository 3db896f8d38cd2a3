// Samples random configurations with a fixed seed and tabulates n, the
// number of origins, γ, d and the two n counts.
//
//     cargo run --example random_configurations

use std::fmt::Write as _;

use lwbn::bounds::BoundInputs;
use lwbn::random::{random_configuration, RandomShape};
use lwbn::SurfaceModel;
use rand::SeedableRng;

pub fn run_example() -> String {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut out = String::from("  n origins gamma    d  n_hat\n");
    for n in [1, 3, 5, 8, 13, 21, 30] {
        let config = random_configuration(&mut rng, RandomShape::multi_origin(n), SurfaceModel::ProjectivePlane);
        let inputs = BoundInputs::from_configuration(&config);
        writeln!(
            out,
            "{n:>3} {:>7} {:>5} {:>4} {:>6}",
            config.origins().len(),
            inputs.gamma,
            inputs.d,
            inputs.n_example
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

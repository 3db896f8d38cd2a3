// Hat configurations and the integers d for each origin, with the
// positivity certificates v_d and v_{d-1}.
//
//     cargo run --example hat_and_dvalue [config-file]

use std::fmt::Write as _;

use lwbn::config::parse_configuration;
use lwbn::sufficiency::origin_d_values;
use lwbn::BigInt;

const EXAMPLE: &str = include_str!("../data/example12.conf");

fn show(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run_on(text: &str) -> String {
    let config = parse_configuration(text).expect("valid configuration file");
    let mut out = String::new();
    let mut total = BigInt::from(0);
    for v in origin_d_values(&config) {
        writeln!(out, "origin p{}: #hat = {}, d = {}", v.origin, v.hat.len(), v.d).unwrap();
        for (new, end) in &v.hat.added {
            let prox = v.hat.extended.point(*new).unwrap().proximities();
            writeln!(out, "  point {new} proximate to {prox:?} (above local end {end})").unwrap();
        }
        writeln!(out, "  v_d     = [{}]", show(&v.certificate)).unwrap();
        writeln!(out, "  v_(d-1) = [{}]", show(&v.previous)).unwrap();
        total += &v.d;
    }
    writeln!(out, "d = {total}").unwrap();
    out
}

pub fn run_example() -> String {
    run_on(EXAMPLE)
}

#[allow(dead_code)]
fn main() {
    match std::env::args().nth(1) {
        Some(path) => print!("{}", run_on(&std::fs::read_to_string(path).expect("readable file"))),
        None => print!("{}", run_example()),
    }
}

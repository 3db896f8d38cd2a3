// Ratios C²/(D·C) over a finite list of classes, compared with the bound
// for D in Δ(S; L*, ε), and a Δ-membership test against witness curves.
//
//     cargo run --example empirical_nu

use std::fmt::Write as _;

use lwbn::bounds::{cor_expl1_bounds, delta_membership_check, empirical_nu};
use lwbn::config::parse_configuration;
use lwbn::lattice::strict_transform_of_exceptional;
use lwbn::report::exact_and_decimal;
use lwbn::{DivisorClass, NConvention, Rational};

const EXAMPLE: &str = include_str!("../data/example12.conf");

pub fn run_example() -> String {
    let config = parse_configuration(EXAMPLE).unwrap();
    let (s, n) = (config.surface(), config.len());
    let mut out = String::new();

    let mut curves: Vec<DivisorClass> = (1..=n)
        .map(|q| strict_transform_of_exceptional(&config, q).unwrap())
        .collect();
    curves.push(DivisorClass::parse_literal("L - E1 - E2", s, n).unwrap());
    curves.push(DivisorClass::parse_literal("L - E6 - E7", s, n).unwrap());

    let d = DivisorClass::parse_literal("6L - E1 - E2 - E6", s, n).unwrap();
    let nu = empirical_nu(&curves, &d).unwrap();
    for (c, row) in curves.iter().zip(&nu.curves) {
        let ratio = row.ratio.as_ref().map(exact_and_decimal).unwrap_or_else(|| "-".into());
        writeln!(out, "{:<24} C^2 = {:<3} D.C = {:<3} ratio {ratio}", c.to_string(), row.self_intersection, row.nef_dot_curve).unwrap();
    }
    match &nu.value {
        Some(v) => writeln!(out, "nu over the list: {}", exact_and_decimal(v)).unwrap(),
        None => writeln!(out, "nu over the list: undefined").unwrap(),
    }

    let eps = Rational::new(1.into(), 2.into());
    let g = DivisorClass::line(n);
    let check = delta_membership_check(&d, &g, &eps, &curves).unwrap();
    writeln!(
        out,
        "D - eps L = {}: violations at {:?}, nonnegative on all witnesses: {}",
        check.shifted, check.violations, check.shifted_nonnegative_on_all
    )
    .unwrap();
    let bound = cor_expl1_bounds(&config, &eps, NConvention::Stated).unwrap();
    writeln!(out, "bound for eps = 1/2: {}", exact_and_decimal(&bound.bound)).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

// Lower bounds on C²/(D·C) for the twelve-point configuration over P2 and
// over several Hirzebruch surfaces, in both n conventions.
//
//     cargo run --example negativity_bounds

use std::fmt::Write as _;

use lwbn::bounds::{
    attached_foliation_degree_bounds, beta_bound, cor_cotaejemplo_bounds, cor_expl1_bounds,
    teo2_bounds, FoliationDegree,
};
use lwbn::config::parse_configuration;
use lwbn::report::exact_and_decimal;
use lwbn::{BoundReport, NConvention, Rational, SurfaceModel};

const EXAMPLE: &str = include_str!("../data/example12.conf");

fn line(out: &mut String, label: &str, r: &BoundReport) {
    let terms: Vec<String> = r.terms.iter().map(|t| format!("{} = {}", t.name, t.value)).collect();
    writeln!(out, "{label}: {} [{}]", exact_and_decimal(&r.bound), terms.join(", ")).unwrap();
}

pub fn run_example() -> String {
    let config = parse_configuration(EXAMPLE).unwrap();
    let mut out = String::new();

    let t = teo2_bounds(&config);
    line(&mut out, "P2 non-invariant", &t.non_invariant);
    line(&mut out, "P2 invariant", &t.invariant);
    for conv in [NConvention::Stated, NConvention::Example] {
        line(&mut out, &format!("P2 pullback ({conv})"), &cor_cotaejemplo_bounds(&config, conv));
    }
    let third = Rational::new(1.into(), 3.into());
    line(
        &mut out,
        "P2 delta-nef, eps = 1/3",
        &cor_expl1_bounds(&config, &third, NConvention::Stated).unwrap(),
    );
    for delta in 0..3 {
        let f = config.with_surface(SurfaceModel::hirzebruch(delta));
        line(&mut out, &format!("F{delta} pullback (example)"), &cor_cotaejemplo_bounds(&f, NConvention::Example));
        writeln!(out, "F{delta} attached foliation: {:?}", attached_foliation_degree_bounds(&f)).unwrap();
    }
    writeln!(out, "P2 attached foliation: {:?}", attached_foliation_degree_bounds(&config)).unwrap();
    writeln!(
        out,
        "degree-5 foliation on P2: -beta = {}",
        beta_bound(FoliationDegree::Plane(5), SurfaceModel::ProjectivePlane).unwrap()
    )
    .unwrap();
    if let Some(w) = cor_cotaejemplo_bounds(&config, NConvention::Stated).convention_warning() {
        writeln!(out, "note: {w}").unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}

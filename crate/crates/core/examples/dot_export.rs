// Writes the proximity graph of a configuration file as DOT, plus the
// normalized configuration text.
//
//     cargo run --example dot_export [config-file] | dot -Tsvg > graph.svg

use lwbn::config::parse_configuration;

const EXAMPLE: &str = include_str!("../data/example12.conf");

pub fn run_on(text: &str) -> String {
    let config = parse_configuration(text).expect("valid configuration file");
    let mut out = config.to_dot();
    for line in config.to_config_text().lines() {
        out.push_str("// ");
        out.push_str(line);
        out.push('\n');
    }
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

use ordspace::rational::format_rational;
use ordspace::{OrdinalSpace, Q};
use serde_json::Value;

use crate::{commands, envelope, Cli, VERSION};

pub fn text_header(cli: &Cli) -> String {
    format!("# ordspace {VERSION} {} seed={}\n", commands::name(&cli.command), cli.global.seed)
}

pub fn json_report(cli: &Cli, body: Value) -> String {
    let mut s = serde_json::to_string_pretty(&envelope(cli, body)).expect("serializable");
    s.push('\n');
    s
}

pub fn point(i: usize) -> String {
    format!("x{}", i + 1)
}

pub fn set(members: &[usize]) -> String {
    let inner: Vec<String> = members.iter().map(|&x| point(x)).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn points(p: &[usize]) -> String {
    p.iter().map(|&x| point(x)).collect::<Vec<_>>().join(" ")
}

/// `x1->x3 x2->x1 ...`
pub fn mapping(f: &[usize]) -> String {
    f.iter()
        .enumerate()
        .map(|(i, &j)| format!("{}->{}", point(i), point(j)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn q(v: &Q) -> String {
    format_rational(v)
}

pub fn matrix_json(s: &OrdinalSpace) -> Value {
    Value::String(s.to_string())
}

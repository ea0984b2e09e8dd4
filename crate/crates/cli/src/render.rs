use std::io::Write;

use serde_json::{json, Value};

use swdual::dualities::DualityReport;
use swdual::morphisms::{MorphismKind, MorphismReport};
use swdual::ExactMatrix;

use crate::commands::{CliError, Output};
use crate::{Cli, Format};

pub fn emit(cli: &Cli, output: &Output) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Text => output.text.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&output.json).expect("values serialize");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

/// Entries as `[row, col, "value"]`, values in lowest terms.
pub fn matrix_json(m: &ExactMatrix) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .map(|(r, c, v)| json!([r, c, v.to_string()]))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_line(r: &DualityReport) -> String {
    let centralizer = match &r.centralizer_dims {
        Some(c) => format!(
            "centralizer={}/{} mirror={}/{} {}",
            c.commutant_of_left,
            c.span_of_right,
            c.commutant_of_right,
            c.span_of_left,
            if c.holds() { "equal" } else { "DIFFER" }
        ),
        None => "centralizer=skipped".to_string(),
    };
    format!(
        "{} n={} k={} dim={} commute={} {} semigroup_faithful={}/{} algebra_faithful={}/{} {}",
        r.space,
        r.n,
        r.k,
        r.dimension,
        yes(r.commute_ok),
        centralizer,
        yes(r.semigroup_faithful_left),
        yes(r.semigroup_faithful_right),
        yes(r.algebra_faithful_left),
        yes(r.algebra_faithful_right),
        if r.matches { "match" } else { "MISMATCH" }
    )
}

pub fn morphism_line(m: &MorphismReport) -> String {
    let parts: Vec<String> = m
        .parts
        .iter()
        .map(|p| format!("{}={}({})", p.name, yes(p.holds), p.checked))
        .collect();
    let map = match m.map {
        MorphismKind::Phi => "phi",
        MorphismKind::Psi => "psi",
    };
    format!(
        "{map} n={} k={} homomorphism={}({} pairs) inverse={} {} {}",
        m.n,
        m.k,
        yes(m.homomorphism_ok),
        m.homomorphism_pairs,
        yes(m.inverse_ok),
        parts.join(" "),
        if m.holds() { "match" } else { "MISMATCH" }
    )
}

//! The consolidated report over the built-in special sections, checked
//! against a stored golden file.

use crate::commands::{involutivity_text, sequence_text, Output};
use crate::error::{CliError, CliResult};
use crate::input::{classify, read_value, Input};
use liedef::foundation::{format_rational, rat};
use liedef::jet::involutivity;
use liedef::vessiot::{
    centralizer, deformation_sequence, fixtures, jacobi_condition, medolaghi_system, normalizer_quotient,
    object_janet_dims, vessiot_constants, vessiot_deformation_check, DeformationCheck, GeometricObject, JacobiCheck,
    VessiotConstants,
};
use serde_json::{json, Value};

pub const GOLDEN: &str = include_str!("../golden/report_paper.txt");

enum Entry {
    Object(String, GeometricObject),
    Constants(String, VessiotConstants),
}

fn builtin() -> CliResult<Vec<Entry>> {
    let mut out = Vec::new();
    for (name, src) in fixtures::OBJECTS {
        out.push(Entry::Object(name.to_string(), GeometricObject::from_json(src)?));
    }
    Ok(out)
}

fn from_dir(dir: &str) -> CliResult<Vec<Entry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CliError::input(format!("cannot read {dir}: {e}")))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let name = p.file_stem().and_then(|s| s.to_str()).unwrap_or("?").to_string();
        match classify(&read_value(&p.to_string_lossy())?)? {
            Input::Object(o, _) => out.push(Entry::Object(name, o)),
            Input::Constants(c, _) => out.push(Entry::Constants(name, c)),
            _ => {
                return Err(CliError::input(format!(
                    "{}: not an object or constants file",
                    p.display()
                )))
            }
        }
    }
    Ok(out)
}

struct Builder {
    lines: Vec<String>,
    json: Value,
}

impl Builder {
    fn section(&mut self, title: &str) {
        if !self.lines.is_empty() {
            self.lines.push(String::new());
        }
        self.lines.push(format!("== {title}"));
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

/// Generates the report; `fixtures_dir` replaces the built-in objects and
/// skips the golden comparison.
pub fn report_paper(fixtures_dir: Option<&str>, seed: u64) -> CliResult<Output> {
    let entries = match fixtures_dir {
        Some(d) => from_dir(d)?,
        None => builtin()?,
    };
    let mut b = Builder {
        lines: Vec::new(),
        json: json!({}),
    };

    // constants and Jacobi conditions
    b.section("Vessiot structure constants");
    let mut consts: Vec<(String, VessiotConstants, Option<GeometricObject>)> = Vec::new();
    let mut cj = Vec::new();
    for e in &entries {
        let (name, vc, obj) = match e {
            Entry::Object(n, o) => (n.clone(), vessiot_constants(o)?, Some(o.clone())),
            Entry::Constants(n, c) => (n.clone(), c.clone(), None),
        };
        if let JacobiCheck::Violated(w) = jacobi_condition(&vc) {
            return Err(CliError::math(format!("Jacobi violated: {w}")));
        }
        b.line(format!(
            "{name:<20} family={:<18} {}  Jacobi holds",
            vc.family(),
            vc.describe()
        ));
        cj.push(json!({"name": name, "constants": vc.to_json_value(), "jacobi": true}));
        consts.push((name, vc, obj));
    }
    b.json["constants"] = json!(cj);

    // involutivity and Janet dims of the Medolaghi systems
    let mut inv = Vec::new();
    for (name, _, obj) in &consts {
        let Some(o) = obj else { continue };
        if !matches!(
            name.as_str(),
            "contact_special" | "unimodular_special" | "coframe_affine"
        ) {
            continue;
        }
        b.section(&format!("Medolaghi system of {name}"));
        for r in medolaghi_system(o)?.display_rows() {
            b.line(format!("  {r}"));
        }
        let r = involutivity(&medolaghi_system(o)?, seed)?;
        b.line(involutivity_text(&r));
        let j = object_janet_dims(o, seed)?;
        let dims: Vec<String> = j.dims.iter().map(|d| d.to_string()).collect();
        b.line(format!(
            "Janet bundles: dim T = {}, dim F_0..F_n = ({}), Euler sum = {}",
            j.fiber,
            dims.join(", "),
            j.euler
        ));
        inv.push(json!({"name": name, "involutivity": r, "janet": j}));
    }
    b.json["involutivity"] = json!(inv);

    // deformation sequences
    let mut seqs = Vec::new();
    let mut table: Vec<(String, String, usize, usize, usize)> = Vec::new();
    for (name, vc, obj) in &consts {
        let rep = deformation_sequence(vc)?;
        if !rep.compositions_vanish || !rep.exactness_holds {
            return Err(CliError::math(format!(
                "{name}: deformation sequence is not a complex or fails exactness"
            )));
        }
        if matches!(vc, VessiotConstants::UnimodularContact(..)) {
            b.section(&format!("Deformation sequence of {name}"));
            b.line(sequence_text(&rep));
            if let Some(o) = obj {
                let g = centralizer(o)?;
                let shown: Vec<String> = g
                    .iter()
                    .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
                    .collect();
                b.line(format!("C(Θ) generator: {}", shown.join(" ")));
            }
            seqs.push(json!({"name": name, "sequence": rep.to_json_value()}));
        }
        let nq = normalizer_quotient(vc)?;
        table.push((
            name.clone(),
            vc.describe(),
            nq.dim,
            rep.centralizer_mod_center,
            rep.cohomology[0],
        ));
    }
    b.json["sequences"] = json!(seqs);

    b.section("Normalizer table");
    b.line(format!(
        "{:<20} {:<22} {:>5} {:>5} {:>4}",
        "object", "constants", "N/Θ", "C/Z", "H0"
    ));
    let mut nt = Vec::new();
    for (name, c, nq, cz, h0) in &table {
        b.line(format!("{name:<20} {c:<22} {nq:>5} {cz:>5} {h0:>4}"));
        nt.push(
            json!({"name": name, "constants": c, "normalizer_quotient": nq, "centralizer_mod_center": cz, "h0": h0}),
        );
    }
    b.json["normalizer_table"] = json!(nt);

    b.section("Order-by-order deformation of c = (0, 0) along C = (1, 1)");
    let (z, one) = (rat(0), rat(1));
    let chk = vessiot_deformation_check((&z, &z), (&one, &one), 3)?;
    match &chk {
        DeformationCheck::Obstructed { order, residual, .. } => {
            b.line("cocycle test c″C′ + c′C″ = 0: passes");
            b.line(format!(
                "obstruction at order {order}: forced term {} (needs C′C″ = 0)",
                format_rational(residual)
            ));
            b.json["obstruction"] = json!({"order": order, "residual": format_rational(residual)});
        }
        DeformationCheck::Extends(_) => {
            return Err(CliError::math(
                "expected an obstruction for C = (1, 1) at c = (0, 0)".into(),
            ));
        }
    }

    let text = b.lines.join("\n");
    let mut json = b.json;
    if fixtures_dir.is_some() {
        json["golden_match"] = Value::Null;
        return Ok(Output { text, json, code: 0 });
    }
    let mismatches = compare(GOLDEN, &text);
    json["golden_match"] = json!(mismatches.is_empty());
    if mismatches.is_empty() {
        Ok(Output { text, json, code: 0 })
    } else {
        for m in &mismatches {
            eprintln!("{m}");
        }
        Ok(Output { text, json, code: 1 })
    }
}

/// Line-by-line differences, "line k: expected ... computed ...".
pub fn compare(golden: &str, computed: &str) -> Vec<String> {
    let g: Vec<&str> = golden.trim_end().lines().collect();
    let c: Vec<&str> = computed.trim_end().lines().collect();
    let mut out = Vec::new();
    for i in 0..g.len().max(c.len()) {
        let (a, b) = (
            g.get(i).copied().unwrap_or("<missing>"),
            c.get(i).copied().unwrap_or("<missing>"),
        );
        if a != b {
            out.push(format!("line {}: expected {a:?} computed {b:?}", i + 1));
        }
    }
    out
}

//! One function per verb; each returns the text and JSON renderings.

use crate::error::{CliError, CliResult};
use crate::input::{self, Input};
use liedef::foundation::{format_rational, parse_rational, ExactMatrix, Rational};
use liedef::jet::{
    algebroid_closure_check, delta_report, formal_integrability_report, involutivity, InvolutivityReport,
};
use liedef::lie_deform::{
    cohomology, extend_deformation, is_rigid_sufficient, jacobi_residual, Extension, RigidityVerdict,
};
use liedef::vessiot::{
    centralizer, centralizer_dim, deformation_sequence, jacobi_condition, label_action, label_object,
    normalizer_quotient, vessiot_constants, vessiot_constants_with, vessiot_deformation_check, DeformationCheck,
    DeformationSequenceReport, GeometricObject, JacobiCheck, McSign, VessiotConstants,
};
use serde_json::{json, Value};

pub struct Output {
    pub text: String,
    pub json: Value,
    /// 0, or 1 for a negative mathematical verdict
    pub code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

pub fn matrix_text(m: &ExactMatrix) -> String {
    if m.cols() == 0 {
        return format!("0 ({}x0)", m.rows());
    }
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

/// Constants of an object or a constants file.
pub fn constants_of(inp: &Input, sign: McSign) -> CliResult<(VessiotConstants, Option<GeometricObject>)> {
    match inp {
        Input::Object(o, _) => Ok((vessiot_constants_with(o, sign)?, Some(o.clone()))),
        Input::Constants(c, _) => Ok((c.clone(), None)),
        _ => Err(CliError::input(
            "expected a geometric object or Vessiot constants".into(),
        )),
    }
}

pub fn jacobi(path: &str) -> CliResult<Output> {
    match input::load(path)? {
        Input::Algebra(c) => {
            let r = jacobi_residual(&c);
            let entries = r.entries();
            if entries.is_empty() {
                Ok(Output::ok("J(c) = 0".into(), json!({"holds": true})))
            } else {
                let lines: Vec<String> = entries
                    .iter()
                    .map(|(s, t, v)| {
                        format!(
                            "J(e{}, e{}, e{}) e{} component = {}",
                            s[0] + 1,
                            s[1] + 1,
                            s[2] + 1,
                            t + 1,
                            format_rational(v)
                        )
                    })
                    .collect();
                Ok(Output {
                    text: format!("Jacobi violated\n{}", lines.join("\n")),
                    json: json!({"holds": false, "residual": r.to_json_value()}),
                    code: 1,
                })
            }
        }
        inp @ (Input::Object(..) | Input::Constants(..)) => {
            let (vc, _) = constants_of(&inp, McSign::Vessiot)?;
            match jacobi_condition(&vc) {
                JacobiCheck::Holds => {
                    let text = match vc {
                        VessiotConstants::Coframe(_) => "J(c) = 0",
                        VessiotConstants::UnimodularContact(..) => "c′c″ = 0",
                        _ => "no Jacobi condition for this family",
                    };
                    Ok(Output::ok(
                        text.into(),
                        json!({"holds": true, "constants": vc.to_json_value()}),
                    ))
                }
                JacobiCheck::Violated(w) => Err(CliError::math(format!("Jacobi violated: {w}"))),
            }
        }
        _ => Err(CliError::input(format!("{path}: expected structure constants"))),
    }
}

pub fn cohomology_cmd(path: &str, degree: Option<usize>) -> CliResult<Output> {
    let c = input::algebra(path)?;
    let degrees: Vec<usize> = match degree {
        Some(r) => vec![r],
        None => (0..=c.dim()).collect(),
    };
    let mut text = format!("{:>3} {:>6} {:>6} {:>6} {:>6}", "r", "C^r", "Z^r", "B^r", "H^r");
    let mut rows = Vec::new();
    for r in degrees {
        let d = cohomology(&c, r)?;
        text.push_str(&format!(
            "\n{:>3} {:>6} {:>6} {:>6} {:>6}",
            d.degree, d.cochains, d.cocycles, d.coboundaries, d.cohomology
        ));
        rows.push(serde_json::to_value(d).expect("serializable"));
    }
    Ok(Output::ok(text, json!({"dim": c.dim(), "degrees": rows})))
}

pub fn rigidity(path: &str) -> CliResult<Output> {
    let c = input::algebra(path)?;
    let v = is_rigid_sufficient(&c)?;
    let text = match &v {
        RigidityVerdict::CertifiedRigid => "H^2 = 0: rigid".to_string(),
        RigidityVerdict::Inconclusive { h2 } => format!("H^2 = {h2}: inconclusive (H^2 = 0 is only sufficient)"),
    };
    Ok(Output::ok(text, serde_json::to_value(&v).expect("serializable")))
}

fn vessiot_cocycle(v: &Value) -> CliResult<(Rational, Rational)> {
    let get = |k: &str| -> CliResult<Rational> {
        match v.get(k) {
            Some(Value::String(s)) => Ok(parse_rational(s)?),
            Some(Value::Number(n)) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
            _ => Err(CliError::input(format!("missing exact '{k}'"))),
        }
    };
    Ok((get("C1")?, get("C2")?))
}

pub fn deform(path: &str, cocycle: &str, order: usize) -> CliResult<Output> {
    match input::load(path)? {
        Input::Algebra(c) => {
            let cc = match input::load(cocycle)? {
                Input::Cochain(cc) => cc,
                _ => return Err(CliError::input(format!("{cocycle}: expected a cochain"))),
            };
            let ext = extend_deformation(&c, &cc, order)?;
            let summary = serde_json::to_value(ext.summary()).expect("serializable");
            match ext {
                Extension::Series(s) => {
                    let json =
                        json!({"summary": summary, "series": s.iter().map(|x| x.to_json_value()).collect::<Vec<_>>()});
                    Ok(Output::ok(format!("extends: C_1..C_{} found", s.len()), json))
                }
                Extension::Obstructed { nu, witness, partial } => Ok(Output {
                    text: format!(
                        "obstructed at nu = {nu}: no C_{} exists (C_1..C_{} found)",
                        nu + 1,
                        partial.len()
                    ),
                    json: json!({"summary": summary, "witness": witness.to_json_value()}),
                    code: 1,
                }),
            }
        }
        inp @ Input::Constants(..) => {
            let (vc, _) = constants_of(&inp, McSign::Vessiot)?;
            let VessiotConstants::UnimodularContact(c1, c2) = &vc else {
                return Err(CliError::input(
                    "order-by-order check is defined for unimodular contact constants".into(),
                ));
            };
            let v = input::read_value(cocycle)?;
            let (k1, k2) = vessiot_cocycle(&v)?;
            let pair = |(a, b): &(Rational, Rational)| json!([format_rational(a), format_rational(b)]);
            match vessiot_deformation_check((c1, c2), (&k1, &k2), order)? {
                DeformationCheck::Extends(s) => Ok(Output::ok(
                    format!("cocycle test passes; extends to order {order}"),
                    json!({"extends": true, "series": s.iter().map(pair).collect::<Vec<_>>()}),
                )),
                DeformationCheck::Obstructed {
                    order: nu, residual, ..
                } => Ok(Output {
                    text: format!(
                        "cocycle test passes; obstruction at order {nu} (forced term {} with c = (0, 0))",
                        format_rational(&residual)
                    ),
                    json: json!({"extends": false, "order": nu, "residual": format_rational(&residual)}),
                    code: 1,
                }),
            }
        }
        _ => Err(CliError::input(format!(
            "{path}: expected structure constants or Vessiot constants"
        ))),
    }
}

pub fn delta(path: &str, r_max: usize, seed: u64) -> CliResult<Output> {
    let sys = input::system(path)?;
    let spots = delta_report(&sys, r_max, seed)?;
    let mut text = format!("{:>3} {:>6} {:>6} {:>4}", "s", "order", "dim", "H");
    for s in &spots {
        text.push_str(&format!("\n{:>3} {:>6} {:>6} {:>4}", s.s, s.order, s.dim, s.cohomology));
    }
    let exact = spots.iter().all(|s| s.cohomology == 0);
    text.push_str(&format!(
        "\ndelta-sequences exact: {}",
        if exact { "yes" } else { "no" }
    ));
    Ok(Output::ok(text, json!({"spots": spots, "exact": exact})))
}

pub fn prolong(path: &str, order: usize) -> CliResult<Output> {
    let sys = input::system(path)?.prolong(order);
    Ok(Output::ok(sys.display_rows().join("\n"), sys.to_json_value()))
}

pub fn involutivity_text(r: &InvolutivityReport) -> String {
    let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    let yn = |b: bool| if b { "yes" } else { "no" };
    format!(
        "n={} m={} q={}\nbeta (classes 1..n) = ({})\nalpha = ({})\ndim g_q = {}, dim g_q+1 = {}, Cartan bound = {}\nCartan test: {}\ndelta-exact: {}\nprojection onto: {}\ninvolutive: {}\ncompatibility conditions: {}",
        r.n,
        r.m,
        r.q,
        list(&r.beta),
        list(&r.alpha),
        r.dim_g_q,
        r.dim_g_q1,
        r.cartan_bound,
        yn(r.cartan_test),
        yn(r.delta_exact),
        yn(r.projection_onto),
        yn(r.involutive),
        r.compatibility_conditions
    )
}

pub fn involutive(path: &str, seed: u64) -> CliResult<Output> {
    let sys = input::system(path)?;
    let r = involutivity(&sys, seed)?;
    Ok(Output::ok(
        involutivity_text(&r),
        serde_json::to_value(&r).expect("serializable"),
    ))
}

pub fn integrability(path: &str, r_max: usize, degree: usize, seed: u64) -> CliResult<Output> {
    let sys = input::system(path)?;
    let rep = formal_integrability_report(&sys, r_max, seed)?;
    let mut text = format!(
        "{:>5} {:>6} {:>6} {:>8} {:>5}",
        "order", "dim R", "dim g", "dim pi R", "onto"
    );
    for l in &rep.levels {
        text.push_str(&format!(
            "\n{:>5} {:>6} {:>6} {:>8} {:>5}",
            l.order,
            l.dim_r,
            l.dim_g,
            l.dim_projection,
            if l.surjective { "yes" } else { "no" }
        ));
    }
    text.push_str(&format!(
        "\nformally integrable (up to r = {r_max}): {}",
        if rep.formally_integrable { "yes" } else { "no" }
    ));
    let mut json = json!({"integrability": rep});
    if sys.n == sys.m && sys.q == 1 {
        let cl = algebroid_closure_check(&sys, degree)?;
        text.push_str(&format!(
            "\nalgebroid closure (degree <= {degree}, {} sections, {} pairs): {}",
            cl.sections,
            cl.pairs_checked,
            if cl.closed { "closed" } else { "not closed" }
        ));
        if let Some(ce) = &cl.counterexample {
            text.push_str(&format!(
                "\n  counterexample: [{}, {}] violates row {}: {}",
                ce.first,
                ce.second,
                ce.equation + 1,
                ce.residual
            ));
        }
        json["closure"] = serde_json::to_value(&cl).expect("serializable");
    }
    Ok(Output::ok(text, json))
}

pub fn vessiot(path: &str, sign: McSign) -> CliResult<Output> {
    let inp = input::load(path)?;
    let Input::Object(o, _) = &inp else {
        return Err(CliError::input(format!("{path}: expected a geometric object")));
    };
    let vc = vessiot_constants_with(o, sign)?;
    let text = format!("family={} {} residual=0", o.family(), vc.describe());
    Ok(Output::ok(
        text,
        json!({"family": o.family().as_str(), "constants": vc.to_json_value(), "residual": "0"}),
    ))
}

pub fn labels(path: &str) -> CliResult<Output> {
    let inp = input::load(path)?;
    let params = match &inp {
        Input::Object(_, Some(p)) | Input::Constants(_, Some(p)) => p.clone(),
        Input::Object(..) | Input::Constants(..) => {
            return Err(CliError::input(format!("{path}: missing 'label_params'")));
        }
        _ => {
            return Err(CliError::input(format!(
                "{path}: expected a geometric object or Vessiot constants"
            )))
        }
    };
    let (vc, obj) = constants_of(&inp, McSign::Vessiot)?;
    let h = label_action(&vc, &params)?;
    let mut text = format!("{} -> {}", vc.describe(), h.describe());
    let jac = jacobi_condition(&h).holds();
    text.push_str(&format!(
        "\nJacobi condition preserved: {}",
        if jac { "yes" } else { "no" }
    ));
    let mut json = json!({"constants": vc.to_json_value(), "transformed": h.to_json_value(), "jacobi_preserved": jac});
    if let Some(o) = obj {
        let direct = vessiot_constants(&label_object(&o, &params)?)?;
        let agree = direct == h;
        text.push_str(&format!(
            "\nrecomputed from the transformed object: {}",
            if agree { "agrees" } else { "DIFFERS" }
        ));
        json["recomputed_agrees"] = json!(agree);
        if !agree {
            return Ok(Output { text, json, code: 1 });
        }
    }
    Ok(Output::ok(text, json))
}

fn sequence_header(vc: &VessiotConstants) -> String {
    match vc {
        VessiotConstants::UnimodularContact(..) => "(K) -> (A, B) -> (C′, C″) -> (D)".into(),
        VessiotConstants::Metric(_) | VessiotConstants::ContactDensity(_) => "0 -> (A) -> (C)".into(),
        VessiotConstants::Coframe(c) => format!("adjoint complex of the {}-dimensional algebra", c.dim()),
    }
}

pub fn sequence_text(rep: &DeformationSequenceReport) -> String {
    let mut out = vec![
        format!("family={} {}", rep.family, rep.constants.describe()),
        sequence_header(&rep.constants),
    ];
    let spaces: Vec<String> = rep
        .dims
        .iter()
        .enumerate()
        .map(|(i, d)| {
            if i == 0 {
                format!("C(Θ)={d}")
            } else {
                format!("Υ{}={d}", i - 1)
            }
        })
        .collect();
    out.push(format!("dims: {}", spaces.join(" ")));
    for (name, m) in rep.map_names().iter().zip(&rep.maps) {
        out.push(format!("{name:<3}= {}", matrix_text(m)));
    }
    out.push(format!(
        "compositions vanish: {}",
        if rep.compositions_vanish { "yes" } else { "no" }
    ));
    let hs: Vec<String> = rep
        .cohomology
        .iter()
        .enumerate()
        .map(|(i, h)| format!("H{i}={h}"))
        .collect();
    out.push(format!(
        "Z={} C/Z={} N/Θ={} {}",
        rep.center,
        rep.centralizer_mod_center,
        rep.normalizer_quotient,
        hs.join(" ")
    ));
    out.push(format!(
        "N/Θ = C/Z + H0: {} = {} + {} ({})",
        rep.normalizer_quotient,
        rep.centralizer_mod_center,
        rep.cohomology[0],
        if rep.exactness_holds { "holds" } else { "FAILS" }
    ));
    out.join("\n")
}

pub fn sequence(path: &str) -> CliResult<Output> {
    let inp = input::load(path)?;
    let (vc, _) = constants_of(&inp, McSign::Vessiot)?;
    let rep = deformation_sequence(&vc)?;
    let code = if rep.compositions_vanish && rep.exactness_holds {
        0
    } else {
        1
    };
    Ok(Output {
        text: sequence_text(&rep),
        json: rep.to_json_value(),
        code,
    })
}

pub fn normalizer(path: &str) -> CliResult<Output> {
    let inp = input::load(path)?;
    let (vc, obj) = constants_of(&inp, McSign::Vessiot)?;
    let nq = normalizer_quotient(&vc)?;
    let cd = centralizer_dim(&vc)?;
    let mut text = format!(
        "family={} {}\ndim N(Θ)/Θ = {}\nconditions: {}\ndim C(Θ) = {}, dim Z(Θ) = {}",
        vc.family(),
        vc.describe(),
        nq.dim,
        if nq.conditions.is_empty() {
            "none".to_string()
        } else {
            nq.conditions.join(", ")
        },
        cd.centralizer,
        cd.center
    );
    let mut json = json!({
        "family": vc.family().as_str(),
        "constants": vc.to_json_value(),
        "normalizer_quotient": nq.dim,
        "conditions": nq.conditions,
        "centralizer": cd.centralizer,
        "center": cd.center,
    });
    if let Some(o) = obj {
        let gens = centralizer(&o)?;
        let shown: Vec<String> = gens
            .iter()
            .map(|g| format!("({})", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        if !shown.is_empty() {
            text.push_str(&format!("\nC(Θ) generators: {}", shown.join(" ")));
        }
        json["centralizer_generators"] = json!(shown);
    }
    Ok(Output::ok(text, json))
}

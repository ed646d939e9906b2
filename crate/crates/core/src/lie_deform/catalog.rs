//! Small algebras shipped as data files (plus abelian algebras of any
//! dimension).

use super::constants::StructureConstants;

pub const HEISENBERG_JSON: &str = include_str!("../../data/algebras/heisenberg.json");
pub const SL2_JSON: &str = include_str!("../../data/algebras/sl2.json");
pub const AFFINE2_JSON: &str = include_str!("../../data/algebras/affine2.json");
pub const SO3_JSON: &str = include_str!("../../data/algebras/so3.json");

pub fn abelian(p: usize) -> StructureConstants {
    StructureConstants::zero(p)
}

/// [e1, e2] = e3.
pub fn heisenberg() -> StructureConstants {
    StructureConstants::from_json(HEISENBERG_JSON).expect("bundled data")
}

/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2() -> StructureConstants {
    StructureConstants::from_json(SL2_JSON).expect("bundled data")
}

/// [e1, e2] = e2.
pub fn affine2() -> StructureConstants {
    StructureConstants::from_json(AFFINE2_JSON).expect("bundled data")
}

/// [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
pub fn so3() -> StructureConstants {
    StructureConstants::from_json(SO3_JSON).expect("bundled data")
}

pub fn by_name(name: &str) -> Option<StructureConstants> {
    match name {
        "heisenberg" => Some(heisenberg()),
        "sl2" => Some(sl2()),
        "affine2" => Some(affine2()),
        "so3" => Some(so3()),
        _ => name.strip_prefix("abelian").and_then(|p| p.parse().ok()).map(abelian),
    }
}

pub fn all() -> Vec<(String, StructureConstants)> {
    let mut v: Vec<(String, StructureConstants)> = (1..=3).map(|p| (format!("abelian{p}"), abelian(p))).collect();
    for n in ["heisenberg", "sl2", "affine2", "so3"] {
        v.push((n.to_string(), by_name(n).expect("known")));
    }
    v
}

//! JSON and DOT renderings.
//!
//! Expansions serialize as
//! `{"algebra":"QSym","basis":"M","degree":3,"coeffs":{"[2,1]":"5"}}` with
//! coefficients as exact decimal strings (`"p/q"` for non-integers).

use std::collections::BTreeMap;
use std::fmt::Write;

use num::{BigRational, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::analysis::IndecomposabilityCertificate;
use crate::combinatorics::Composition;
use crate::hecke::{GeneratorImage, HeckeModule};
use crate::qsym::{Algebra, Basis, BasisExpansion};

#[derive(Serialize, Deserialize)]
struct RawExpansion {
    algebra: Algebra,
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for BasisExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawExpansion {
            algebra: self.algebra(),
            basis: self.basis(),
            degree: self.degree(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|(alpha, c)| (alpha.to_string(), c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BasisExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawExpansion::deserialize(deserializer)?;
        if raw.basis.algebra() != raw.algebra {
            return Err(D::Error::custom(format!(
                "basis {} does not belong to {:?}",
                raw.basis, raw.algebra
            )));
        }
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (key, value) in raw.coeffs {
            let alpha: Composition = key.parse().map_err(D::Error::custom)?;
            let coeff: BigRational = value
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {value:?}")))?;
            terms.push((alpha, coeff));
        }
        BasisExpansion::from_terms(raw.basis, raw.degree, terms).map_err(D::Error::custom)
    }
}

/// `{"F": {"[3]": "1"}}`: the compact form used for characteristics.
pub fn compact_expansion(x: &BasisExpansion) -> Value {
    let coeffs: Map<String, Value> = x
        .coeffs()
        .iter()
        .map(|(alpha, c)| (alpha.to_string(), Value::String(c.to_string())))
        .collect();
    json!({ x.basis().symbol(): coeffs })
}

fn image_json(image: GeneratorImage) -> Value {
    match image {
        GeneratorImage::Fixed => json!({"fixed": true}),
        GeneratorImage::Zero => json!({"zero": true}),
        GeneratorImage::MovedTo(k) => json!({"to": k}),
    }
}

/// Module dump: label, shape, dimension, the basis (as words) and every
/// generator's image list.
pub fn module_json(m: &HeckeModule) -> Value {
    let act = m.action();
    let generators: Map<String, Value> = (1..=act.generators())
        .map(|i| {
            let images = act.images_of(i).iter().map(|&g| image_json(g)).collect();
            (i.to_string(), Value::Array(images))
        })
        .collect();
    let basis: Vec<Value> = (0..m.dim()).map(|b| Value::String(m.word(b).to_string())).collect();
    json!({
        "label": m.kind().label(),
        "alpha": m.alpha().to_string(),
        "dim": m.dim(),
        "basis": basis,
        "generators": generators,
    })
}

/// Node identifier of the shared sink standing for the zero vector.
pub const ZERO_NODE: &str = "\"0\"";

/// The action graph in DOT: one vertex per basis element labelled by its
/// (Y-)word, an edge `T -> S` labelled `i` whenever `π_i T = S ≠ T`, and edges
/// into the shared sink `"0"` for zero images. Self-loops are omitted.
pub fn module_dot(m: &HeckeModule) -> String {
    let act = m.action();
    let mut out = String::new();
    let name = format!("{}{}", m.kind().label(), m.alpha());
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for b in 0..m.dim() {
        let tooltip = m
            .tableau(b)
            .map(|t| format!(", tooltip=\"{t}\""))
            .unwrap_or_default();
        writeln!(out, "  t{b} [label=\"{}\"{tooltip}];", m.word(b)).unwrap();
    }
    writeln!(out, "  {ZERO_NODE} [label=\"0\", shape=circle];").unwrap();
    for b in 0..m.dim() {
        for i in 1..=act.generators() {
            match act.image(i, b) {
                GeneratorImage::Fixed => {}
                GeneratorImage::Zero => writeln!(out, "  t{b} -> {ZERO_NODE} [label=\"{i}\"];").unwrap(),
                GeneratorImage::MovedTo(t) => writeln!(out, "  t{b} -> t{t} [label=\"{i}\"];").unwrap(),
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn certificate_json(cert: &IndecomposabilityCertificate) -> Value {
    let m = crate::hecke::quotient_module(&cert.alpha);
    let basis: Vec<Value> = (0..m.dim()).map(|b| Value::String(m.word(b).to_string())).collect();
    let cyclic: Map<String, Value> = cert
        .cyclic
        .witnesses
        .iter()
        .map(|(b, seq)| (b.to_string(), json!(seq)))
        .collect();
    let separation: Map<String, Value> = cert
        .separation
        .iter()
        .map(|(b, i)| (b.to_string(), json!(i)))
        .collect();
    json!({
        "alpha": cert.alpha.to_string(),
        "dim": cert.dim,
        "seed": cert.seed,
        "basis": basis,
        "commutant_dim": cert.commutant_dim,
        "cyclic": {
            "total": cert.cyclic.is_total(),
            "witnesses": cyclic,
            "unreached": cert.cyclic.unreached,
        },
        "separation": {
            "total": cert.separation_missing.is_empty(),
            "witnesses": separation,
            "missing": cert.separation_missing,
        },
        "failures": cert.failures,
        "valid": cert.is_valid(),
    })
}

/// True when the expansion has no stored zero coefficients.
pub fn is_sparse(x: &BasisExpansion) -> bool {
    x.coeffs().values().all(|c| !c.is_zero())
}

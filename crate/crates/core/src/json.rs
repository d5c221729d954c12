//! JSON forms of scalars, elements, group-algebra elements and root data.
//!
//! ```text
//! scalar     {"2": 1, "0": -1}                       v^2 - 1
//! fraction   {"num": scalar, "den": scalar}
//! element    {"model": "im" | "bern", "terms": [{"x": [..], "w": [..], "c": scalar}]}
//! group alg  {"terms": [{"x": [..], "c": fraction}]}
//! config     {"type": "B2", "lattice": "sc"}
//!            {"simple_roots": [[..]], "simple_coroots": [[..]]}
//! ```
//!
//! Words `w` list 1-based simple reflections; any word is accepted on input
//! and the lex-least reduced word is written on output. Terms are written in
//! lexicographic order of `(x, w)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::coeffring::{LaurentScalar, ScalarFraction};
use crate::error::{Error, Result};
use crate::extweyl::ExtAffElt;
use crate::heckebern::{BernElement, BernKey};
use crate::heckeim::ImElement;
use crate::rootdata::{CartanType, LatticeElt, LatticeKind, RootDatum, WeylElt};
use crate::satake::GroupAlgElement;

/// Which basis an element is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Im,
    Bern,
}

impl Model {
    pub fn label(self) -> &'static str {
        match self {
            Model::Im => "im",
            Model::Bern => "bern",
        }
    }
}

impl std::str::FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "im" => Ok(Model::Im),
            "bern" => Ok(Model::Bern),
            _ => Err(Error::Parse(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Im(ImElement),
    Bern(BernElement),
}

impl Element {
    pub fn model(&self) -> Model {
        match self {
            Element::Im(_) => Model::Im,
            Element::Bern(_) => Model::Bern,
        }
    }
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn big_to_json(c: &BigInt) -> Value {
    Value::Number(c.to_string().parse::<Number>().expect("integer literal"))
}

fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            n.to_string().parse::<BigInt>().map_err(|_| parse_err(format!("expected an integer, found {n}")))
        }
        _ => Err(parse_err(format!("expected an integer, found {v}"))),
    }
}

fn int_from_json(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| parse_err(format!("expected a small integer, found {v}")))
}

pub fn laurent_to_json(c: &LaurentScalar) -> Value {
    let mut m = Map::new();
    for (e, k) in c.terms() {
        m.insert(e.to_string(), big_to_json(k));
    }
    Value::Object(m)
}

/// Accepts the object form or a bare integer.
pub fn laurent_from_json(v: &Value) -> Result<LaurentScalar> {
    match v {
        Value::Object(m) => {
            let mut terms = Vec::with_capacity(m.len());
            for (e, k) in m {
                let e: i32 = e.trim().parse().map_err(|_| parse_err(format!("bad exponent {e:?}")))?;
                terms.push((e, big_from_json(k)?));
            }
            Ok(LaurentScalar::from_terms(terms))
        }
        Value::Number(_) => Ok(LaurentScalar::from_int(big_from_json(v)?)),
        _ => Err(parse_err(format!("expected a scalar, found {v}"))),
    }
}

pub fn fraction_to_json(c: &ScalarFraction) -> Value {
    json!({"num": laurent_to_json(c.num()), "den": laurent_to_json(c.den())})
}

pub fn fraction_from_json(v: &Value) -> Result<ScalarFraction> {
    match v.get("num") {
        Some(num) => {
            let den = v.get("den").map(laurent_from_json).transpose()?.unwrap_or_else(LaurentScalar::one);
            ScalarFraction::new(laurent_from_json(num)?, den)
        }
        None => Ok(ScalarFraction::from(laurent_from_json(v)?)),
    }
}

fn lattice_to_json(x: &LatticeElt) -> Value {
    Value::Array(x.coords().iter().map(|&c| Value::from(c)).collect())
}

fn lattice_from_json(rd: &RootDatum, v: &Value) -> Result<LatticeElt> {
    let arr = v.as_array().ok_or_else(|| parse_err(format!("expected coordinates, found {v}")))?;
    if arr.len() != rd.dim() {
        return Err(parse_err(format!("expected {} coordinates, found {}", rd.dim(), arr.len())));
    }
    let coords = arr.iter().map(int_from_json).collect::<Result<Vec<_>>>()?;
    Ok(LatticeElt::from_slice(&coords))
}

/// Parses lattice coordinates given as a JSON array or a comma list.
pub fn parse_lattice(rd: &RootDatum, s: &str) -> Result<LatticeElt> {
    let s = s.trim();
    let v: Value = if s.starts_with('[') {
        serde_json::from_str(s)?
    } else {
        serde_json::from_str(&format!("[{s}]"))?
    };
    lattice_from_json(rd, &v)
}

fn word_to_json(rd: &RootDatum, w: WeylElt) -> Value {
    Value::Array(rd.weyl_word(w).iter().map(|&i| Value::from(i as u64 + 1)).collect())
}

fn word_from_json(rd: &RootDatum, v: Option<&Value>) -> Result<WeylElt> {
    let Some(v) = v else { return Ok(WeylElt::IDENTITY) };
    let arr = v.as_array().ok_or_else(|| parse_err(format!("expected a word, found {v}")))?;
    let mut word = Vec::with_capacity(arr.len());
    for i in arr {
        let i = int_from_json(i)?;
        if i < 1 || i as usize > rd.rank() {
            return Err(parse_err(format!("simple reflection {i} out of range 1..={}", rd.rank())));
        }
        word.push(i as usize - 1);
    }
    rd.weyl_from_word(&word)
}

/// Total order used for output: coordinates of `x`, then the reduced word.
pub fn key_order(rd: &RootDatum, a: (&LatticeElt, WeylElt), b: (&LatticeElt, WeylElt)) -> Ordering {
    a.0.coords().cmp(b.0.coords()).then_with(|| rd.weyl_word(a.1).cmp(rd.weyl_word(b.1)))
}

fn terms_json<'a>(rd: &RootDatum, mut terms: Vec<(&'a LatticeElt, WeylElt, &'a LaurentScalar)>) -> Value {
    terms.sort_by(|a, b| key_order(rd, (a.0, a.1), (b.0, b.1)));
    Value::Array(
        terms
            .into_iter()
            .map(|(x, w, c)| json!({"x": lattice_to_json(x), "w": word_to_json(rd, w), "c": laurent_to_json(c)}))
            .collect(),
    )
}

pub fn im_to_json(rd: &RootDatum, f: &ImElement) -> Value {
    let terms = f.iter().map(|(a, c)| (&a.x, a.w, c)).collect();
    json!({"model": "im", "terms": terms_json(rd, terms)})
}

pub fn bern_to_json(rd: &RootDatum, f: &BernElement) -> Value {
    let terms = f.iter().map(|(k, c)| (&k.x, k.w, c)).collect();
    json!({"model": "bern", "terms": terms_json(rd, terms)})
}

pub fn element_to_json(rd: &RootDatum, f: &Element) -> Value {
    match f {
        Element::Im(f) => im_to_json(rd, f),
        Element::Bern(f) => bern_to_json(rd, f),
    }
}

pub fn element_from_json(rd: &RootDatum, v: &Value) -> Result<Element> {
    let model: Model = v
        .get("model")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("element is missing \"model\""))?
        .parse()?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| parse_err("element is missing \"terms\""))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let x = lattice_from_json(rd, t.get("x").ok_or_else(|| parse_err("term is missing \"x\""))?)?;
        let w = word_from_json(rd, t.get("w"))?;
        let c = t.get("c").map(laurent_from_json).transpose()?.unwrap_or_else(LaurentScalar::one);
        parsed.push((x, w, c));
    }
    Ok(match model {
        Model::Im => Element::Im(parsed.into_iter().map(|(x, w, c)| (ExtAffElt::new(x, w), c)).collect()),
        Model::Bern => Element::Bern(parsed.into_iter().map(|(x, w, c)| (BernKey::new(x, w), c)).collect()),
    })
}

pub fn group_alg_to_json(g: &GroupAlgElement) -> Value {
    let terms: Vec<Value> =
        g.sorted_terms().into_iter().map(|(x, c)| json!({"x": lattice_to_json(x), "c": fraction_to_json(c)})).collect();
    json!({"terms": terms})
}

pub fn group_alg_from_json(rd: &RootDatum, v: &Value) -> Result<GroupAlgElement> {
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"terms\""))?;
    let mut out = GroupAlgElement::zero();
    for t in terms {
        let x = lattice_from_json(rd, t.get("x").ok_or_else(|| parse_err("term is missing \"x\""))?)?;
        let c = fraction_from_json(t.get("c").ok_or_else(|| parse_err("term is missing \"c\""))?)?;
        out.add_term(x, c);
    }
    Ok(out)
}

fn matrix_from_json(v: &Value) -> Result<Vec<Vec<i64>>> {
    let rows = v.as_array().ok_or_else(|| parse_err(format!("expected a matrix, found {v}")))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| parse_err(format!("expected a row, found {r}")))?
                .iter()
                .map(int_from_json)
                .collect()
        })
        .collect()
}

/// Builds a root datum from a config object.
pub fn root_datum_from_config(v: &Value) -> Result<RootDatum> {
    if let Some(roots) = v.get("simple_roots") {
        let coroots = v.get("simple_coroots").ok_or_else(|| parse_err("custom data needs \"simple_coroots\""))?;
        return RootDatum::custom(matrix_from_json(roots)?, matrix_from_json(coroots)?);
    }
    let ty: CartanType =
        v.get("type").and_then(Value::as_str).ok_or_else(|| parse_err("config is missing \"type\""))?.parse()?;
    let lat: LatticeKind = match v.get("lattice").and_then(Value::as_str) {
        Some(s) => s.parse()?,
        None => LatticeKind::SimplyConnected,
    };
    RootDatum::build(ty, lat)
}

pub fn root_datum_to_config(rd: &RootDatum) -> Value {
    let roots: Vec<Value> = (0..rd.rank()).map(|i| Value::from(rd.simple_root(i).to_vec())).collect();
    let coroots: Vec<Value> = (0..rd.rank()).map(|i| lattice_to_json(rd.simple_coroot(i))).collect();
    json!({"type": rd.label(), "lattice": rd.lattice().label(), "simple_roots": roots, "simple_coroots": coroots})
}

/// Pretty-printed canonical text with a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable value");
    s.push('\n');
    s
}

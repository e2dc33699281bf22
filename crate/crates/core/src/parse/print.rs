//! Canonical text and JSON forms.

use serde_json::{json, Value};

use crate::arith::rat::{parse_rat, rat_to_wire};
use crate::arith::{PolyH, RatFuncH};
use crate::error::ParseError;
use crate::weyl::{BElement, Coeff, GradedElement, WeylElement};

/// Degrees ascending; `(f)` for degree 0, `(f)*X^i`, `(f)*Y^i`.
pub fn print_canonical<C: Coeff>(a: &GradedElement<C>) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = a
        .components()
        .map(|(i, f)| match i {
            0 => format!("({})", f.to_text()),
            i if i > 0 => format!("({})*X^{i}", f.to_text()),
            i => format!("({})*Y^{}", f.to_text(), -i),
        })
        .collect();
    parts.join(" + ")
}

impl std::fmt::Display for WeylElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_canonical(self))
    }
}

impl std::fmt::Display for BElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_canonical(self))
    }
}

fn jerr(msg: impl Into<String>) -> ParseError {
    ParseError::Json(msg.into())
}

pub trait JsonForm: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, ParseError>;
}

impl JsonForm for PolyH {
    /// `{"poly": [[exp, "num/den"], ...]}`, exponents ascending.
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| json!([e, rat_to_wire(c)]))
            .collect();
        json!({ "poly": terms })
    }

    fn from_json(v: &Value) -> Result<Self, ParseError> {
        let terms = v
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| jerr("expected {\"poly\": [...]}"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| jerr("term must be [exp, \"num/den\"]"))?;
            let e = pair[0].as_u64().ok_or_else(|| jerr("exponent must be a nonnegative integer"))?;
            let c = pair[1].as_str().ok_or_else(|| jerr("coefficient must be a string"))?;
            out.push((e as usize, parse_rat(c)?));
        }
        Ok(PolyH::from_terms(out))
    }
}

impl JsonForm for RatFuncH {
    /// `{"num": <poly>, "den": <poly>}`.
    fn to_json(&self) -> Value {
        json!({ "num": self.num().to_json(), "den": self.den().to_json() })
    }

    fn from_json(v: &Value) -> Result<Self, ParseError> {
        if v.get("poly").is_some() {
            return Ok(RatFuncH::from_poly(PolyH::from_json(v)?));
        }
        let num = PolyH::from_json(v.get("num").ok_or_else(|| jerr("missing num"))?)?;
        let den = PolyH::from_json(v.get("den").ok_or_else(|| jerr("missing den"))?)?;
        RatFuncH::try_new(num, den).map_err(|_| jerr("zero denominator"))
    }
}

impl<C: Coeff + JsonForm> JsonForm for GradedElement<C> {
    /// `{"components": [[i, <coeff>], ...]}`, degrees ascending.
    fn to_json(&self) -> Value {
        let comps: Vec<Value> = self
            .components()
            .map(|(i, f)| json!([i, f.to_json()]))
            .collect();
        json!({ "components": comps })
    }

    fn from_json(v: &Value) -> Result<Self, ParseError> {
        let comps = v
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| jerr("expected {\"components\": [...]}"))?;
        let mut out = Vec::with_capacity(comps.len());
        for c in comps {
            let pair = c.as_array().filter(|a| a.len() == 2).ok_or_else(|| jerr("component must be [degree, coeff]"))?;
            let i = pair[0].as_i64().ok_or_else(|| jerr("degree must be an integer"))?;
            out.push((i, C::from_json(&pair[1])?));
        }
        Ok(GradedElement::from_components(out))
    }
}

pub fn to_json_string<T: JsonForm>(t: &T) -> String {
    t.to_json().to_string()
}

pub fn from_json_str<T: JsonForm>(s: &str) -> Result<T, ParseError> {
    let v: Value = serde_json::from_str(s).map_err(|e| jerr(e.to_string()))?;
    T::from_json(&v)
}

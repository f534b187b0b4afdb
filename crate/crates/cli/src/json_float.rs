//! JSON floats written with 17 significant digits.
//!
//! serde_json would print the shortest round-trip form (`0.5`); the report
//! schema promises a fixed 17-digit mantissa instead, which still parses back
//! to the identical bits.

use serde::{Deserialize, Deserializer, Serializer};
use serde_json::value::RawValue;

fn raw(v: f64) -> Result<Box<RawValue>, String> {
    if !v.is_finite() {
        return Err(format!("cannot write non-finite value {v} to JSON"));
    }
    RawValue::from_string(format!("{v:.16e}")).map_err(|e| e.to_string())
}

pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    let r = raw(*v).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&r, s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    f64::deserialize(d)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => super::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<f64>::deserialize(d)
    }
}

//! JSON integers that survive double-precision consumers: magnitudes
//! within the 53-bit safe range serialize as plain numbers, anything
//! larger as decimal strings. Parsing accepts both forms.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest magnitude a JSON number can carry without rounding when read
/// through an f64 (2^53 - 1).
pub const MAX_SAFE_JSON_INT: u64 = (1 << 53) - 1;

/// An `i64` with number-or-string JSON encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JsonInt(pub i64);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.unsigned_abs() <= MAX_SAFE_JSON_INT {
            serializer.serialize_i64(self.0)
        } else {
            serializer.collect_str(&self.0)
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = i64;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<i64, E> {
        Ok(v)
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<i64, E> {
        i64::try_from(v).map_err(|_| E::custom(format!("integer {v} out of i64 range")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<i64, E> {
        v.parse().map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(JsonIntVisitor).map(JsonInt)
    }
}

/// An arbitrary-precision integer with number-or-string JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonBig(pub BigInt);

impl Serialize for JsonBig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) if v.unsigned_abs() <= MAX_SAFE_JSON_INT => serializer.serialize_i64(v),
            _ => serializer.collect_str(&self.0),
        }
    }
}

struct JsonBigVisitor;

impl Visitor<'_> for JsonBigVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        BigInt::from_str(v).map_err(|_| E::custom(format!("not a decimal integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonBig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(JsonBigVisitor).map(JsonBig)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ints_round_trip_as_numbers() {
        let v = JsonInt(-42);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, "-42");
        assert_eq!(serde_json::from_str::<JsonInt>(&text).unwrap(), v);
    }

    #[test]
    fn large_ints_become_strings() {
        let v = JsonInt(1 << 60);
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(text, "\"1152921504606846976\"");
        assert_eq!(serde_json::from_str::<JsonInt>(&text).unwrap(), v);
        assert_eq!(serde_json::from_str::<JsonInt>("\"-7\"").unwrap(), JsonInt(-7));
        assert_eq!(
            serde_json::to_string(&JsonInt(i64::MIN)).unwrap(),
            "\"-9223372036854775808\""
        );
    }

    #[test]
    fn boundary_sits_at_two_to_the_53() {
        let safe = JsonInt(MAX_SAFE_JSON_INT as i64);
        assert_eq!(serde_json::to_string(&safe).unwrap(), "9007199254740991");
        let unsafe_ = JsonInt(MAX_SAFE_JSON_INT as i64 + 1);
        assert_eq!(serde_json::to_string(&unsafe_).unwrap(), "\"9007199254740992\"");
    }

    #[test]
    fn bigints_round_trip() {
        let huge: BigInt = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let text = serde_json::to_string(&JsonBig(huge.clone())).unwrap();
        assert!(text.starts_with('"'));
        assert_eq!(serde_json::from_str::<JsonBig>(&text).unwrap().0, huge);
        assert_eq!(serde_json::from_str::<JsonBig>("48").unwrap().0, BigInt::from(48));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(serde_json::from_str::<JsonInt>("1.5").is_err());
        assert!(serde_json::from_str::<JsonInt>("\"abc\"").is_err());
        assert!(serde_json::from_str::<JsonBig>("[1]").is_err());
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// JSON form of a rational: `[num, den]`. Integers that do not fit in an
/// `i64` are written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalJson(pub Rational);

fn write_int<S: SerializeTuple>(t: &mut S, v: &BigInt) -> Result<(), S::Error> {
    match v.to_i64() {
        Some(small) => t.serialize_element(&small),
        None => t.serialize_element(&v.to_string()),
    }
}

impl Serialize for RationalJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        write_int(&mut t, self.0.numer())?;
        write_int(&mut t, self.0.denom())?;
        t.end()
    }
}

struct IntOrString(BigInt);

impl<'de> Deserialize<'de> for IntOrString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = IntOrString;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(IntOrString(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(IntOrString(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                v.parse().map(IntOrString).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

impl<'de> Deserialize<'de> for RationalJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RationalJson;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [numerator, denominator] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let num: IntOrString = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let den: IntOrString = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<IntOrString>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                if den.0 == BigInt::from(0) {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(RationalJson(Rational::new(num.0, den.0)))
            }
        }
        d.deserialize_seq(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_small_and_big() {
        let r = rat(-6, 4);
        let s = serde_json::to_string(&RationalJson(r.clone())).unwrap();
        assert_eq!(s, "[-3,2]");
        let back: RationalJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.0, r);

        let big = Rational::new(BigInt::from(10).pow(30), BigInt::from(7));
        let s = serde_json::to_string(&RationalJson(big.clone())).unwrap();
        assert_eq!(s, "[\"1000000000000000000000000000000\",7]");
        assert_eq!(serde_json::from_str::<RationalJson>(&s).unwrap().0, big);
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(serde_json::from_str::<RationalJson>("[1,0]").is_err());
        assert!(serde_json::from_str::<RationalJson>("[1]").is_err());
    }
}

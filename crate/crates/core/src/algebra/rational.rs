//! Exact rationals backed by arbitrary-precision integers.
//!
//! `Rational` is always in lowest terms with a positive denominator; the
//! underlying `Ratio` type maintains that on every operation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` in lowest terms. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Integer value if the rational is integral and fits in `i64`.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Exact `p/q` text, or just `p` for integers.
pub fn fmt(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"`, `"-p"` or `"p/q"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Serde adapter: integers become JSON numbers, everything else `"p/q"` strings.
pub mod serde_rational {
    use super::{fmt, parse, to_i64, Rational};
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt as sfmt;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        match to_i64(r) {
            Some(i) => s.serialize_i64(i),
            None => s.serialize_str(&fmt(r)),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RatVisitor)
    }

    pub(crate) struct RatVisitor;

    impl<'de> Visitor<'de> for RatVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut sfmt::Formatter) -> sfmt::Result {
            f.write_str("an integer or a string \"p/q\"")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(super::int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            i64::try_from(v)
                .map(super::int)
                .map_err(|_| E::custom("integer too large"))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse(v).ok_or_else(|| E::custom(format!("not a rational: {v:?}")))
        }
    }

    /// Same encoding for vectors of rationals.
    pub mod vec {
        use super::super::Rational;
        use serde::de::{SeqAccess, Visitor};
        use serde::ser::SerializeSeq;
        use serde::{Deserializer, Serializer};
        use std::fmt as sfmt;

        struct Item<'a>(&'a Rational);

        impl serde::Serialize for Item<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                super::serialize(self.0, s)
            }
        }

        struct Owned(Rational);

        impl<'de> serde::Deserialize<'de> for Owned {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                super::deserialize(d).map(Owned)
            }
        }

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&Item(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            struct V;
            impl<'de> Visitor<'de> for V {
                type Value = Vec<Rational>;
                fn expecting(&self, f: &mut sfmt::Formatter) -> sfmt::Result {
                    f.write_str("an array of rationals")
                }
                fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> Result<Self::Value, A::Error> {
                    let mut out = Vec::new();
                    while let Some(Owned(r)) = a.next_element()? {
                        out.push(r);
                    }
                    Ok(out)
                }
            }
            d.deserialize_seq(V)
        }
    }
}

//! Extended rationals {-inf} ∪ Q ∪ {+inf}.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Variant order gives the total order -inf < finite < +inf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ext {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Ext {
    pub fn int(n: i64) -> Self {
        Ext::Finite(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Ext::Finite(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Ext::Finite(Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Finite(_))
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Ext::NegInf)
    }

    pub fn is_pos_inf(&self) -> bool {
        matches!(self, Ext::PosInf)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Ext::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Ext::Finite(r) => r.is_integer(),
            _ => true,
        }
    }

    /// Tropical product (classical sum). -inf absorbs; +inf is rejected.
    pub fn tmul(&self, other: &Ext) -> Result<Ext> {
        match (self, other) {
            (Ext::PosInf, _) | (_, Ext::PosInf) => Err(Error::InfiniteProduct),
            (Ext::NegInf, _) | (_, Ext::NegInf) => Ok(Ext::NegInf),
            (Ext::Finite(a), Ext::Finite(b)) => Ok(Ext::Finite(a + b)),
        }
    }

    /// Tropical sum in the max convention.
    pub fn tadd(&self, other: &Ext) -> Ext {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Classical negation, exchanging the two infinities.
    pub fn neg(&self) -> Ext {
        match self {
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
            Ext::Finite(r) => Ext::Finite(-r),
        }
    }

    pub fn scale(&self, lambda: &Rational) -> Ext {
        match self {
            Ext::Finite(r) => Ext::Finite(r * lambda),
            other => other.clone(),
        }
    }

    pub fn shift(&self, c: &Rational) -> Ext {
        match self {
            Ext::Finite(r) => Ext::Finite(r + c),
            other => other.clone(),
        }
    }
}

impl From<i64> for Ext {
    fn from(n: i64) -> Self {
        Ext::int(n)
    }
}

impl From<Rational> for Ext {
    fn from(r: Rational) -> Self {
        Ext::Finite(r)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::PosInf => write!(f, "+inf"),
            Ext::Finite(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl FromStr for Ext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ext> {
        let t = s.trim();
        match t {
            "-inf" | "-infinity" => return Ok(Ext::NegInf),
            "+inf" | "inf" | "+infinity" | "infinity" => return Ok(Ext::PosInf),
            _ => {}
        }
        let bad = || Error::Parse(format!("not an extended rational: {s:?}"));
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Ext::Finite(Rational::new(n, d)))
        } else {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Ext::Finite(Rational::from_integer(n)))
        }
    }
}

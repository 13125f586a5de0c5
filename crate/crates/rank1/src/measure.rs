//! Exact rational computation of the invariant measure data of an
//! eventually periodic construction.
//!
//! The unique shift-invariant measure that gives the 0-symbol cylinder mass
//! 1 has total mass `Z = lim len(v_n) / zeros(v_n)` (the normalizer). For a
//! periodic tail the limit is a geometric series summed in closed form, so
//! every quantity here is an exact rational; no floating point is used
//! anywhere in this module.

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::engine::{ParamSpec, Tail};
use crate::error::Error;

/// An arbitrary-precision rational in canonical reduced form with a
/// positive denominator. Equality is structural.
///
/// Serializes as `{"num": "<decimal>", "den": "<decimal>"}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `num / den`, reducing to canonical form. Fails on a zero
    /// denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::InvalidParams("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: u64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Self {
        ExactRational(self.0.recip())
    }

    fn from_ratio(num: BigUint, den: BigUint) -> Self {
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }

        impl $trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut state = serializer.serialize_struct("ExactRational", 2)?;
        state.serialize_field("num", &self.0.numer().to_string())?;
        state.serialize_field("den", &self.0.denom().to_string())?;
        state.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalWire {
    num: String,
    den: String,
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = RationalWire::deserialize(deserializer)?;
        let num = wire
            .num
            .parse::<BigInt>()
            .map_err(|e| D::Error::custom(format!("num: {e}")))?;
        let den = wire
            .den
            .parse::<BigInt>()
            .map_err(|e| D::Error::custom(format!("den: {e}")))?;
        ExactRational::new(num, den).map_err(D::Error::custom)
    }
}

/// The total mass of the unnormalized invariant measure, when it is
/// determined by the representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormalizerResult {
    /// Periodic tail: the limit, summed in closed form.
    Exact { value: ExactRational },
    /// Unspecified tail: the partial value at the end of the prefix. These
    /// values are nondecreasing in the depth.
    LowerBound { value: ExactRational, depth: u64 },
}

impl NormalizerResult {
    pub fn exact(&self) -> Option<&ExactRational> {
        match self {
            NormalizerResult::Exact { value } => Some(value),
            NormalizerResult::LowerBound { .. } => None,
        }
    }
}

/// Measures of the two symbol cylinders after normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolMeasures {
    pub zero: ExactRational,
    pub one: ExactRational,
}

/// The mass seen at `level`: word length over zero count, an exact
/// rational. Nondecreasing in the level, with the normalizer as its limit.
pub fn partial_normalizer(params: &ParamSpec, level: u64) -> Result<ExactRational, Error> {
    Ok(ExactRational::from_ratio(
        params.word_length(level)?,
        params.zero_count(level)?,
    ))
}

/// The normalizer `Z`. For a periodic tail the contribution beyond the
/// prefix is a geometric series with ratio the reciprocal of the product of
/// the cycle's cut counts, summed exactly; for an unspecified tail only the
/// prefix value is available.
pub fn normalizer(params: &ParamSpec) -> NormalizerResult {
    let prefix_len = params.prefix_len();
    let at_prefix_end =
        partial_normalizer(params, prefix_len).expect("prefix levels always resolve");
    match params.tail() {
        Tail::Unspecified => NormalizerResult::LowerBound {
            value: at_prefix_end,
            depth: prefix_len,
        },
        Tail::Periodic { cycle } => {
            // sum over one cycle of sum(s_j) / (product of cut counts through j)
            let mut running = BigUint::one();
            let mut cycle_mass = BigRational::zero();
            for spec in cycle {
                running *= spec.cut_count();
                cycle_mass += BigRational::new(
                    BigInt::from(spec.spacers().sum()),
                    BigInt::from(running.clone()),
                );
            }
            let rho = BigInt::from(running);
            let geometric = BigRational::new(rho.clone(), rho - BigInt::one());
            let prefix_zeros = BigRational::from_integer(BigInt::from(
                params
                    .zero_count(prefix_len)
                    .expect("prefix levels always resolve"),
            ));
            let tail_mass = cycle_mass * geometric / prefix_zeros;
            NormalizerResult::Exact {
                value: ExactRational(at_prefix_end.0 + tail_mass),
            }
        }
    }
}

fn exact_normalizer(params: &ParamSpec) -> Result<ExactRational, Error> {
    match normalizer(params) {
        NormalizerResult::Exact { value } => Ok(value),
        NormalizerResult::LowerBound { .. } => Err(Error::UnspecifiedTail),
    }
}

/// Measure of the cylinder of points with an expected occurrence of the
/// level-`level` word starting at a fixed position: one over the zero
/// count times the normalizer. By shift invariance the position does not
/// matter.
pub fn cylinder_measure(params: &ParamSpec, level: u64) -> Result<ExactRational, Error> {
    let z = exact_normalizer(params)?;
    let zeros = BigRational::from_integer(BigInt::from(params.zero_count(level)?));
    Ok(ExactRational((zeros * z.0).recip()))
}

/// Total mass of the level-`level` tower: word length times the cylinder
/// measure, equal to the partial normalizer over the normalizer. Strictly
/// positive, nondecreasing, with limit 1.
pub fn tower_mass(params: &ParamSpec, level: u64) -> Result<ExactRational, Error> {
    let z = exact_normalizer(params)?;
    Ok(partial_normalizer(params, level)? / z)
}

/// Normalized measures of the 0-symbol and 1-symbol cylinders.
pub fn symbol_measures(params: &ParamSpec) -> Result<SymbolMeasures, Error> {
    let z = exact_normalizer(params)?;
    let zero = z.recip();
    let one = ExactRational::one() - zero.clone();
    Ok(SymbolMeasures { zero, one })
}

/// An explicit geometric bound on the mass not yet seen at `level`:
/// `normalizer - partial_normalizer(level)` is at most twice the largest
/// per-level spacer sum over the zero count at `level + 1`, because the
/// zero counts at least double per level.
pub fn tail_mass_bound(params: &ParamSpec, level: u64) -> Result<ExactRational, Error> {
    if !params.is_periodic() {
        return Err(Error::UnspecifiedTail);
    }
    let max_sum = BigInt::from(params.level_sum_bound());
    let zeros = BigInt::from(params.zero_count(level + 1)?);
    Ok(ExactRational(BigRational::new(
        max_sum * BigInt::from(2u32),
        zeros,
    )))
}

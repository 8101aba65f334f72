//! Exact rational values and the comparison kernels.
//!
//! Every inequality decided by this crate reduces to integer
//! cross-multiplication or cross-exponentiation on arbitrary-precision
//! integers. Quantities like `x^{1/a}` are never extracted as roots:
//! `x^{1/a} vs r` is decided as `x vs r^a` and `x^{1/a} vs y^{1/b}` as
//! `x^b vs y^a`, both exact because `t -> t^k` is strictly increasing on
//! positive reals. Intermediate integers are allowed to grow (a comparison
//! like `2436^27 vs 3010^26` involves ~90-digit numbers); that is the price
//! of verdicts that cannot be corrupted by rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form: positive
/// denominator, gcd(|numerator|, denominator) = 1.
///
/// The text encoding is base-10 `"P/Q"`, or just `"P"` when the denominator
/// is 1; `Display` and `FromStr` round-trip it exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(Ratio<BigInt>);

impl ExactRational {
    /// Builds the reduced fraction `numer/denom`. Fails on a zero denominator.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self(Ratio::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(Ratio::from_integer(n.into()))
    }

    pub fn one() -> Self {
        Self(Ratio::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.numer().is_positive()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Exact nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        // Coprime numerator/denominator stay coprime under powers, so no
        // re-reduction is needed; Ratio::new only has to fix signs.
        Self(Ratio::new(
            Pow::pow(self.0.numer(), exp),
            Pow::pow(self.0.denom(), exp),
        ))
    }

    pub fn square(&self) -> Self {
        self.pow(2)
    }

    /// Canonical-form check used by debug assertions and property tests.
    pub fn is_canonical(&self) -> bool {
        use num::Integer;
        self.0.denom().is_positive()
            && self.0.numer().gcd(self.0.denom()).is_one()
    }

    pub fn cmp_one(&self) -> Ordering {
        self.0.numer().cmp(self.0.denom())
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

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t).map_err(|_| Error::InvalidNumber(s.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Self(Ratio::from_integer(parse_int(s)?))),
            Some((p, q)) => Self::new(parse_int(p)?, parse_int(q)?),
        }
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<u64> for ExactRational {
    fn from(n: u64) -> Self {
        Self::from_integer(n)
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 * &rhs.0)
    }
}

impl Div for &ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &ExactRational) -> ExactRational {
        ExactRational(&self.0 / &rhs.0)
    }
}

fn ensure_positive(x: &ExactRational, op: &'static str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive(op))
    }
}

/// Decides `x^{1/a} vs r` for positive rationals, exactly.
///
/// With `x = P/Q` and `r = N/D` this is the integer comparison
/// `P * D^a  vs  N^a * Q`.
pub fn cmp_root_vs_ratio(x: &ExactRational, a: u32, r: &ExactRational) -> Result<Ordering> {
    const OP: &str = "cmp_root_vs_ratio";
    if a == 0 {
        return Err(Error::ZeroRootDegree(OP));
    }
    ensure_positive(x, OP)?;
    ensure_positive(r, OP)?;
    let lhs = x.numer() * Pow::pow(r.denom(), a);
    let rhs = Pow::pow(r.numer(), a) * x.denom();
    Ok(lhs.cmp(&rhs))
}

/// Decides `x^{1/a} vs y^{1/b}` for positive rationals, exactly.
///
/// Cross-exponentiation: `x^b vs y^a`, i.e. `P_x^b * Q_y^a  vs  P_y^a * Q_x^b`.
pub fn cmp_roots(x: &ExactRational, a: u32, y: &ExactRational, b: u32) -> Result<Ordering> {
    const OP: &str = "cmp_roots";
    if a == 0 || b == 0 {
        return Err(Error::ZeroRootDegree(OP));
    }
    ensure_positive(x, OP)?;
    ensure_positive(y, OP)?;
    let lhs = Pow::pow(x.numer(), b) * Pow::pow(y.denom(), a);
    let rhs = Pow::pow(y.numer(), a) * Pow::pow(x.denom(), b);
    Ok(lhs.cmp(&rhs))
}

//! Scalar types: arbitrary-precision integers, rationals, and prime fields.
//!
//! All matrix code is generic over [`Scalar`]; field-specific algorithms
//! (Gaussian elimination, hom-space solving) require [`Field`]. Exhaustive
//! enumeration is only available over finite fields via [`EnumerableField`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Arbitrary-precision integer, the base ring of all presentations.
pub type Int = BigInt;
/// Exact rational, stored as a reduced fraction of [`Int`]s.
pub type Rat = BigRational;

/// Exact ring element usable as a matrix entry.
///
/// Blanket-implemented; `BigInt`, `BigRational` and `Fp<P>` all qualify.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
        + Send
        + Sync
        + 'static
{
}

/// A scalar with exact division by nonzero elements.
pub trait Field: Scalar {
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;

    /// Field tag used in the JSON wire format: `"Q"` or `"Fp:<p>"`.
    fn tag() -> String;

    /// Parses an entry from its wire string (decimal or `a/b`).
    fn parse(s: &str) -> Result<Self, String>;

    /// Renders an entry for the wire format.
    fn render(&self) -> String {
        self.to_string()
    }
}

/// A field whose elements can be listed, enabling exhaustive scans.
pub trait EnumerableField: Field {
    fn elements() -> Vec<Self>;
    fn order() -> u64;
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn tag() -> String {
        "Q".into()
    }

    fn parse(s: &str) -> Result<Self, String> {
        Rat::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
    }
}

/// Element of the prime field of order `P`, stored as its canonical
/// representative in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        debug_assert!(is_prime(P), "Fp modulus {P} is not prime");
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn rep(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp((self.0 * rhs.0) % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2) mod P.
        let mut acc = 1u64;
        let mut base = self.0;
        let mut e = P - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Some(Fp(acc))
    }

    fn tag() -> String {
        format!("Fp:{P}")
    }

    fn parse(s: &str) -> Result<Self, String> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|e| format!("bad field element {s:?}: {e}"))?;
        Ok(Fp::new(v))
    }
}

impl<const P: u64> EnumerableField for Fp<P> {
    fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }

    fn order() -> u64 {
        P
    }
}

/// Parses a decimal string into an [`Int`]; the JSON format stores all
/// integers as strings so no precision is lost.
pub fn parse_int(s: &str) -> Result<Int, String> {
    Int::from_str(s.trim()).map_err(|e| format!("bad integer {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let a = F5::new(3);
        let b = F5::new(4);
        assert_eq!(a + b, F5::new(2));
        assert_eq!(a * b, F5::new(2));
        assert_eq!(-a, F5::new(2));
        assert_eq!(a - b, F5::new(4));
    }

    #[test]
    fn fp_inverses() {
        for p in F7::elements() {
            match p.inv() {
                Some(q) => assert_eq!(p * q, F7::new(1)),
                None => assert!(p.is_zero()),
            }
        }
    }

    #[test]
    fn rational_roundtrip() {
        let x = Rat::parse("-3/6").unwrap();
        assert_eq!(x.render(), "-1/2");
        assert_eq!(Rat::parse("4").unwrap().render(), "4");
    }
}

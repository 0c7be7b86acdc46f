//! Scalar fields the algebra engine is generic over.
//!
//! Every computation that decides a dimension runs in exact arithmetic:
//! either arbitrary-precision rationals (ground truth) or a prime field
//! used as a fast pre-pass. Floating point is deliberately not a scalar
//! here; ranks computed with rounding are worthless as evidence.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::rank::{EchelonRankStore, RankStore};

/// Canonical exact rational type used for weights and ground-truth runs.
pub type Rational = num_rational::BigRational;

/// Error converting a rational constant into a scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// The denominator vanishes in the target field (e.g. is divisible by
    /// the prime modulus), so the value has no image there.
    UnrepresentableDenominator { value: String, modulus: u64 },
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::UnrepresentableDenominator { value, modulus } => write!(
                f,
                "denominator of {value} is divisible by the field modulus {modulus}"
            ),
        }
    }
}

impl std::error::Error for ScalarError {}

/// Field of scalars for tilde vectors, score vectors and rank computations.
///
/// All operations are exact; `Eq`/`Hash`/`Ord` agree with field equality so
/// values can be deduplicated and sorted deterministically.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// Runtime parameters of the field (empty for the rationals, the
    /// modulus for a prime field).
    type Config: Clone + fmt::Debug + Default + PartialEq + Send + Sync;

    /// Row-echelon store used for exact rank computations in this field.
    type RankStore: RankStore<Self>;

    /// Embeds an exact rational constant into the field.
    fn from_rational(value: &Rational, cfg: &Self::Config) -> Result<Self, ScalarError>;
}

impl Scalar for Rational {
    type Config = ();
    type RankStore = EchelonRankStore<Rational>;

    fn from_rational(value: &Rational, _cfg: &()) -> Result<Self, ScalarError> {
        Ok(value.clone())
    }
}

// ==== prime field ====

/// Default modulus for prime-field runs: the Mersenne prime 2^61 - 1.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// Runtime configuration of [`Fp`]: the prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpConfig {
    pub modulus: u64,
}

impl Default for FpConfig {
    fn default() -> Self {
        FpConfig {
            modulus: DEFAULT_PRIME,
        }
    }
}

/// Element of a prime field with runtime modulus.
///
/// `Zero::zero()` and `One::one()` cannot know the modulus, so they carry
/// modulus 0 as "not yet attached"; any arithmetic with a real element
/// adopts its modulus. Detached values stay in {0, 1} or small positive
/// integers produced before the first combination, which is below every
/// admissible modulus, so equality and hashing on the reduced value alone
/// are consistent.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(modulus > 1);
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn from_i64(value: i64, cfg: &FpConfig) -> Self {
        Fp::new(value.rem_euclid(cfg.modulus as i64) as u64, cfg.modulus)
    }

    fn unified_modulus(&self, other: &Fp) -> u64 {
        match (self.modulus, other.modulus) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "mixed prime-field moduli {a} and {b}");
                a
            }
        }
    }

    fn reduced(value: u64, modulus: u64) -> u64 {
        if modulus == 0 {
            value
        } else {
            value % modulus
        }
    }

    fn inverse(value: u64, modulus: u64) -> u64 {
        assert!(value != 0, "division by zero in prime field");
        mod_pow(value, modulus - 2, modulus)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Fp {}

impl PartialOrd for Fp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value.cmp(&other.value)
    }
}

impl Hash for Fp {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = self.unified_modulus(&rhs);
        let (a, b) = (Fp::reduced(self.value, m), Fp::reduced(rhs.value, m));
        let value = if m == 0 {
            a.checked_add(b).expect("overflow in detached field element")
        } else {
            ((a as u128 + b as u128) % m as u128) as u64
        };
        Fp { value, modulus: m }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = self.unified_modulus(&rhs);
        let (a, b) = (Fp::reduced(self.value, m), Fp::reduced(rhs.value, m));
        let value = if m == 0 {
            a.checked_sub(b).expect("negative detached field element")
        } else {
            (a + m - b) % m
        };
        Fp { value, modulus: m }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = self.unified_modulus(&rhs);
        let (a, b) = (Fp::reduced(self.value, m), Fp::reduced(rhs.value, m));
        let value = if m == 0 {
            a.checked_mul(b).expect("overflow in detached field element")
        } else {
            ((a as u128 * b as u128) % m as u128) as u64
        };
        Fp { value, modulus: m }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        let m = self.unified_modulus(&rhs);
        if m == 0 {
            assert_eq!(rhs.value, 1, "division needs a modulus");
            return self;
        }
        let inv = Fp::inverse(Fp::reduced(rhs.value, m), m);
        Fp {
            value: Fp::reduced(self.value, m),
            modulus: m,
        } * Fp {
            value: inv,
            modulus: m,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.value == 0 {
            return self;
        }
        assert!(self.modulus != 0, "negation needs a modulus");
        Fp {
            value: self.modulus - self.value,
            modulus: self.modulus,
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }
}

impl Scalar for Fp {
    type Config = FpConfig;
    type RankStore = EchelonRankStore<Fp>;

    fn from_rational(value: &Rational, cfg: &FpConfig) -> Result<Self, ScalarError> {
        use num_integer::Integer;
        let p = cfg.modulus;
        let pb = num_bigint::BigInt::from(p);
        let num = value.numer().mod_floor(&pb);
        let den = value.denom().mod_floor(&pb);
        let num: u64 = num.try_into().expect("reduced residue fits in u64");
        let den: u64 = den.try_into().expect("reduced residue fits in u64");
        if den == 0 {
            return Err(ScalarError::UnrepresentableDenominator {
                value: value.to_string(),
                modulus: p,
            });
        }
        Ok(Fp::new(num, p) * Fp::new(Fp::inverse(den, p), p))
    }
}

fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test, valid for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Parses a rational literal: an integer `p` or a fraction `p/r`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for the rational n/d.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

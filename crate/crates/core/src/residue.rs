//! Reduction of integers to signed digital roots and the two-sided matrix
//! coordinate system.
//!
//! Every nonzero integer sits in one of eighteen columns: `1..=9` for the
//! positive integers and `-1..=-9` for the negative ones, with 0 alone in the
//! null column between them. Within a column the integers are numbered by a
//! 1-based row, so `v` can be stored as a `(label, row)` pair and recovered
//! exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::integer::{div_floor, mod_floor, Integer};

/// A primal class label: `-9..=-1`, the null class, or `1..=9`.
///
/// Labels `9` and `-9` both stand for residue 0, on the positive and negative
/// side respectively. Ordering is by label value, so negatives sort before
/// the null class, which sorts before positives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedResidue(i8);

impl SignedResidue {
    pub const NULL: SignedResidue = SignedResidue(0);
    pub const NINE: SignedResidue = SignedResidue(9);
    pub const ONE: SignedResidue = SignedResidue(1);

    /// Builds a non-null label. Zero is rejected; use [`SignedResidue::NULL`].
    pub fn new(label: i64) -> Result<Self> {
        if label == 0 || !(-9..=9).contains(&label) {
            return Err(Error::InvalidLabel(label));
        }
        Ok(SignedResidue(label as i8))
    }

    /// The positive label for a residue mod 9 (residue 0 maps to 9).
    pub fn from_residue(residue: i64) -> Self {
        let r = residue.rem_euclid(9) as i8;
        SignedResidue(if r == 0 { 9 } else { r })
    }

    /// The negative label for a residue mod 9 (residue 0 maps to -9).
    pub fn negative_from_residue(residue: i64) -> Self {
        let r = residue.rem_euclid(9) as i8;
        SignedResidue(if r == 0 { -9 } else { r - 9 })
    }

    /// Integer value of the label; 0 for the null class.
    pub fn value(self) -> i8 {
        self.0
    }

    pub fn label(self) -> Option<i8> {
        (self.0 != 0).then_some(self.0)
    }

    /// Residue mod 9 in `0..9`.
    pub fn residue(self) -> u8 {
        self.0.rem_euclid(9) as u8
    }

    pub fn is_null(self) -> bool {
        self.0 == 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// `1..=9` in ascending order.
    pub fn positive_labels() -> impl Iterator<Item = SignedResidue> + Clone {
        (1..=9).map(SignedResidue)
    }

    /// `-1..=-9` in the order the negative sub-matrix lists them.
    pub fn negative_labels() -> impl Iterator<Item = SignedResidue> + Clone {
        (1..=9).map(|k| SignedResidue(-k))
    }

    /// All eighteen non-null labels, ascending.
    pub fn nonnull_labels() -> impl Iterator<Item = SignedResidue> + Clone {
        (-9..=9).filter(|&k| k != 0).map(SignedResidue)
    }

    /// Whether `v` belongs to this class (sign included).
    pub fn contains<T: Integer>(self, v: T) -> bool {
        reduce(v) == self
    }
}

impl fmt::Debug for SignedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_null() {
            f.write_str("∅")
        } else {
            write!(f, "{}_φ", self.0)
        }
    }
}

impl FromStr for SignedResidue {
    type Err = Error;

    /// Accepts `null`, `∅`, a signed integer, or the `k_φ` display form.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("null") || s == "∅" {
            return Ok(SignedResidue::NULL);
        }
        let digits = s.strip_suffix("_φ").unwrap_or(s).replace('−', "-");
        let n: i64 = digits
            .parse()
            .map_err(|_| Error::UnparsableLabel(s.to_string()))?;
        SignedResidue::new(n)
    }
}

impl Serialize for SignedResidue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.label() {
            Some(k) => serializer.serialize_i8(k),
            None => serializer.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for SignedResidue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Option::<i64>::deserialize(deserializer)?;
        match raw {
            None => Ok(SignedResidue::NULL),
            Some(k) => SignedResidue::new(k).map_err(serde::de::Error::custom),
        }
    }
}

fn label_of<T: Integer>(single_digit: T) -> SignedResidue {
    SignedResidue(
        single_digit
            .to_i8()
            .expect("fixed points lie in -9..=9"),
    )
}

/// Sum of the base-10 digits of `|v|`, negated when `v < 0`.
pub fn digit_sum<T: Integer>(v: T) -> T {
    let ten = T::ten();
    let mut rest = v;
    let mut acc = T::zero();
    // truncating `%` keeps the sign of `v`, so negatives accumulate negatively
    while !rest.is_zero() {
        acc = acc + rest % ten;
        rest = rest / ten;
    }
    acc
}

/// The digit-sum chain from a starting integer down to its fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IterationTrace<T> {
    pub start: T,
    /// Successive digit sums; empty when `start` is already a fixed point.
    pub steps: Vec<T>,
    pub fixed_point: SignedResidue,
    /// Number of digit-sum applications.
    pub k: usize,
}

impl<T: Integer> IterationTrace<T> {
    /// The final integer in the chain (`start` when no step was taken).
    pub fn last_value(&self) -> T {
        self.steps.last().copied().unwrap_or(self.start)
    }
}

/// Applies [`digit_sum`] until the value lies in `-9..=9`.
///
/// The stopping point is unique: one further digit sum leaves it unchanged.
pub fn iterated_digital_root<T: Integer>(v: T) -> IterationTrace<T> {
    let nine = T::nine();
    let mut current = v;
    let mut steps = Vec::new();
    while current > nine || current < -nine {
        current = digit_sum(current);
        steps.push(current);
    }
    IterationTrace {
        start: v,
        k: steps.len(),
        steps,
        fixed_point: label_of(current),
    }
}

/// Closed-form root of a positive integer: `v - 9 * floor((v - 1) / 9)`.
pub fn novem_root_positive<T: Integer>(v: T) -> Result<SignedResidue> {
    if v < T::one() {
        return Err(Error::NotPositive(v.to_string()));
    }
    let nine = T::nine();
    Ok(label_of(v - nine * ((v - T::one()) / nine)))
}

/// Closed-form root of a negative integer: `((v + 1) mod -9) - 1`, with the
/// remainder taking the sign of the divisor.
pub fn novem_root_negative<T: Integer>(v: T) -> Result<SignedResidue> {
    if v > -T::one() {
        return Err(Error::NotNegative(v.to_string()));
    }
    Ok(label_of(mod_floor(v + T::one(), -T::nine()) - T::one()))
}

/// Floor-function form of the negative root: `v - (-9) * floor((v + 1) / -9)`.
///
/// Always agrees with [`novem_root_negative`].
pub fn novem_floor_negative<T: Integer>(v: T) -> Result<SignedResidue> {
    if v > -T::one() {
        return Err(Error::NotNegative(v.to_string()));
    }
    let q = div_floor(v + T::one(), -T::nine());
    Ok(label_of(v + T::nine() * q))
}

/// Signed primal label of any integer. 0 maps to the null class.
pub fn reduce<T: Integer>(v: T) -> SignedResidue {
    if v.is_zero() {
        SignedResidue::NULL
    } else if v.is_positive() {
        let nine = T::nine();
        label_of(v - nine * ((v - T::one()) / nine))
    } else {
        label_of(mod_floor(v + T::one(), -T::nine()) - T::one())
    }
}

/// Row of `v` in its column, by the divisible / non-divisible case split.
pub fn row_index<T: Integer>(v: T) -> Result<T> {
    if v.is_zero() {
        return Err(Error::ZeroHasNoCoordinate);
    }
    let nine = T::nine();
    let q = v / nine;
    let exact = (v % nine).is_zero();
    // q is -(|v| / 9) for negative v
    let band = if v.is_positive() { q } else { -q };
    Ok(if exact { band } else { band + T::one() })
}

/// Row of `v` from its label: `(|v| - |label|) / 9 + 1`.
///
/// Kept separate from [`row_index`] so the two forms can be checked against
/// each other. The variant `(v - label) / 9 - 1` for negative `v` produces
/// negative rows and is not used.
pub fn row_index_closed<T: Integer>(v: T) -> Result<T> {
    if v.is_zero() {
        return Err(Error::ZeroHasNoCoordinate);
    }
    let label = T::small(reduce(v).value());
    // v - label has the sign of v and is an exact multiple of 9
    let offset = (v - label) / T::nine();
    let band = if v.is_positive() { offset } else { -offset };
    Ok(band + T::one())
}

/// Compressed `label_row` form of a nonzero integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MatrixCoord<T> {
    label: SignedResidue,
    row: T,
}

impl<T: Integer> MatrixCoord<T> {
    pub fn new(label: SignedResidue, row: T) -> Result<Self> {
        if label.is_null() {
            return Err(Error::NullClass("matrix row"));
        }
        if row < T::one() {
            return Err(Error::InvalidRow(row.to_string()));
        }
        Ok(MatrixCoord { label, row })
    }

    pub fn label(&self) -> SignedResidue {
        self.label
    }

    pub fn row(&self) -> T {
        self.row
    }
}

impl<T: Integer> fmt::Display for MatrixCoord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.label.value(), self.row)
    }
}

pub fn encode<T: Integer>(v: T) -> Result<MatrixCoord<T>> {
    let row = row_index(v)?;
    Ok(MatrixCoord {
        label: reduce(v),
        row,
    })
}

/// `k + 9(row - 1)` for positive labels, `-k - 9(row - 1)` for negative ones.
pub fn decode<T: Integer>(c: &MatrixCoord<T>) -> Result<T> {
    let label = T::small(c.label.value());
    let band = (c.row - T::one())
        .checked_mul(&T::nine())
        .ok_or(Error::Overflow("decoding a matrix coordinate"))?;
    let v = if c.label.is_positive() {
        label.checked_add(&band)
    } else {
        label.checked_sub(&band)
    };
    v.ok_or(Error::Overflow("decoding a matrix coordinate"))
}

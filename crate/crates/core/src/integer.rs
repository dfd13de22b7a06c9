use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Signed};

/// Signed machine integers the reduction routines accept (`i8` through `i128`).
pub trait Integer: PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static {
    fn small(n: i8) -> Self {
        Self::from(n).expect("every signed primitive holds an i8")
    }

    fn nine() -> Self {
        Self::small(9)
    }

    fn ten() -> Self {
        Self::small(10)
    }
}

impl<T> Integer for T where T: PrimInt + Signed + Hash + Debug + Display + Send + Sync + 'static {}

/// Quotient rounded toward negative infinity.
pub(crate) fn div_floor<T: Integer>(a: T, b: T) -> T {
    let q = a / b;
    let r = a % b;
    if !r.is_zero() && (r.is_negative() != b.is_negative()) {
        q - T::one()
    } else {
        q
    }
}

/// Remainder carrying the sign of the divisor.
pub(crate) fn mod_floor<T: Integer>(a: T, b: T) -> T {
    let r = a % b;
    if !r.is_zero() && (r.is_negative() != b.is_negative()) {
        r + b
    } else {
        r
    }
}

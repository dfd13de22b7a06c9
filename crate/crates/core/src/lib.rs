//! Signed digital-root arithmetic over mod-9 residue classes.
//!
//! * [`residue`]: reduction of integers to signed labels and the
//!   `(label, row)` coordinate system, generic over the integer width.
//! * [`algebra`]: class-level `+ - * / ^`, mirroring and group-law checks.
//! * [`tables`]: regenerated operation tables and audits against the
//!   published transcriptions.
//! * [`conjecture`]: bounded witness searches, the power cycle and power-sum
//!   residue profiles.
//! * [`search`]: residue-prefiltered search for sums of three powers.

pub mod algebra;
pub mod conjecture;
pub mod error;
mod fixtures;
pub mod integer;
pub mod residue;
pub mod search;
pub mod tables;

pub use algebra::{
    class_add, class_div, class_mul, class_pow, class_sub, mirror, opposite, verify_group_axioms,
    verify_group_axioms_on, AxiomReport, ClassOpOutcome, OpKind,
};
pub use error::{Error, Result};
pub use integer::Integer;
pub use residue::{
    decode, digit_sum, encode, iterated_digital_root, novem_floor_negative, novem_root_negative,
    novem_root_positive, reduce, row_index, row_index_closed, IterationTrace, MatrixCoord,
    SignedResidue,
};
pub use search::{bench_compare, prefilter, search, BenchResult, SearchConfig, SearchReport};
pub use tables::{audit_table, generate_table, render_table, OpTable, Orientation, RenderFormat, TableAudit};

/// Coordinate over the default 64-bit integers.
pub type Coord = MatrixCoord<i64>;
/// Coordinate over 128-bit integers.
pub type WideCoord = MatrixCoord<i128>;
/// Digit-sum trace over the default 64-bit integers.
pub type Trace = IterationTrace<i64>;
/// Digit-sum trace over 128-bit integers.
pub type WideTrace = IterationTrace<i128>;

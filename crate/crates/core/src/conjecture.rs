//! Bounded checks of the existence conjecture, the six-step power cycle and
//! the residue behaviour of power-sum equations mod 9.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{apply, class_pow, OpKind, MIN_EXPONENT, POWER_PERIOD};
use crate::error::{Error, Result};
use crate::residue::{reduce, SignedResidue};
use crate::search::{elapsed_ms, worker_pool, DEFAULT_CANDIDATE_CEILING};

/// Find `v_a ⊙ v_b = target` with `v_a` in `class_a`, `v_b` in `class_b` and
/// `|v_a|, |v_b| <= bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessQuery {
    pub op: OpKind,
    pub class_a: SignedResidue,
    pub class_b: SignedResidue,
    pub target: i64,
    pub bound: i64,
}

impl WitnessQuery {
    /// Rejects queries whose target cannot be reached at the class level.
    pub fn validate(&self) -> Result<()> {
        if self.bound < 1 {
            return Err(Error::MalformedQuery(format!(
                "bound must be at least 1, got {}",
                self.bound
            )));
        }
        if self.bound > i64::from(i32::MAX) {
            return Err(Error::MalformedQuery(format!(
                "bound {} exceeds {}",
                self.bound,
                i32::MAX
            )));
        }
        let expected = match self.op {
            OpKind::Pow => return Err(Error::MalformedQuery("pow takes no second class".into())),
            op => apply(op, self.class_a, self.class_b)?,
        };
        let target_class = reduce(self.target);
        if !expected.iter().any(|c| c.residue() == target_class.residue()) {
            return Err(Error::MalformedQuery(format!(
                "{} {} {} lands in {}, but target {} is in {}",
                self.class_a,
                self.op.symbol(),
                self.class_b,
                expected,
                self.target,
                target_class
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub query: WitnessQuery,
    /// Exact solutions in search order.
    pub witnesses: Vec<(i64, i64)>,
    pub exhausted: bool,
    /// Whether every member of the target's class within the bound is reached.
    pub universal: bool,
    pub unexpressed_count: usize,
    /// Up to [`UNEXPRESSED_SAMPLE`] unreached class members, smallest first.
    pub unexpressed_sample: Vec<i64>,
    pub scan_size: u64,
    pub elapsed_ms: f64,
}

pub const UNEXPRESSED_SAMPLE: usize = 10;

/// Members of a class with `|v| <= bound`, smallest magnitude first.
pub fn class_members(label: SignedResidue, bound: i64) -> Vec<i64> {
    match label.label() {
        None => vec![0],
        Some(k) => {
            let k = i64::from(k);
            let step = if k > 0 { 9 } else { -9 };
            std::iter::successors(Some(k), |v| Some(v + step))
                .take_while(|v| v.abs() <= bound)
                .collect()
        }
    }
}

fn combine(op: OpKind, a: i64, b: i64) -> Option<i64> {
    match op {
        OpKind::Add => a.checked_add(b),
        OpKind::Sub => a.checked_sub(b),
        OpKind::Mul => a.checked_mul(b),
        OpKind::Div => (b != 0 && a % b == 0).then(|| a / b),
        OpKind::Pow => None,
    }
}

pub fn witness_search(q: &WitnessQuery) -> Result<WitnessReport> {
    witness_search_with_workers(q, 1)
}

/// Scans the full bounded grid, splitting the rows for `class_a` across
/// `workers` threads. The report does not depend on the worker count.
///
/// Search order is ascending `|v_a|`, then ascending `|v_b|`.
pub fn witness_search_with_workers(q: &WitnessQuery, workers: usize) -> Result<WitnessReport> {
    q.validate()?;
    let start = Instant::now();
    let members_a = class_members(q.class_a, q.bound);
    let members_b = class_members(q.class_b, q.bound);
    let scan_size = members_a.len() as u64 * members_b.len() as u64;
    if u128::from(scan_size) > DEFAULT_CANDIDATE_CEILING {
        return Err(Error::ResourceGuard {
            needed: scan_size.into(),
            ceiling: DEFAULT_CANDIDATE_CEILING,
        });
    }
    let target_class = reduce(q.target);
    let pool = worker_pool(workers)?;

    // per row of a: the witnesses found and the products reached
    type RowScan = (Vec<(i64, i64)>, Vec<i64>);
    let rows: Vec<RowScan> = pool.install(|| {
        members_a
            .par_iter()
            .map(|&va| {
                let mut hits = Vec::new();
                let mut reached = Vec::new();
                for &vb in &members_b {
                    if let Some(r) = combine(q.op, va, vb) {
                        if r == q.target {
                            hits.push((va, vb));
                        }
                        if r.abs() <= q.bound && reduce(r) == target_class {
                            reached.push(r);
                        }
                    }
                }
                (hits, reached)
            })
            .collect()
    });

    let mut witnesses = Vec::new();
    let mut reached = HashSet::new();
    for (hits, row_reached) in rows {
        witnesses.extend(hits);
        reached.extend(row_reached);
    }
    let unexpressed: Vec<i64> = class_members(target_class, q.bound)
        .into_iter()
        .filter(|v| !reached.contains(v))
        .collect();

    Ok(WitnessReport {
        query: *q,
        witnesses,
        exhausted: true,
        universal: unexpressed.is_empty(),
        unexpressed_count: unexpressed.len(),
        unexpressed_sample: unexpressed.into_iter().take(UNEXPRESSED_SAMPLE).collect(),
        scan_size,
        elapsed_ms: elapsed_ms(start),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCase {
    pub label: SignedResidue,
    /// `a^1`, i.e. the class itself in positive form.
    pub first: SignedResidue,
    pub seventh: SignedResidue,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerCycleReport {
    pub max_n: u64,
    pub checks: u64,
    /// `(label, n)` pairs where `a^n != a^(n+6)`.
    pub violations: Vec<(SignedResidue, u64)>,
    /// How each label behaves if the cycle is pushed down to `n = 1`.
    pub boundary: Vec<BoundaryCase>,
    pub boundary_failures: Vec<SignedResidue>,
}

/// Checks `a^n = a^(n+6)` for all eighteen labels and `2 <= n <= max_n`.
pub fn power_cycle_check(max_n: u64) -> Result<PowerCycleReport> {
    const MIN_SPAN: u64 = 8;
    if max_n < MIN_SPAN {
        return Err(Error::ExponentTooSmall {
            got: max_n,
            min: MIN_SPAN,
        });
    }
    let mut checks = 0;
    let mut violations = Vec::new();
    for a in SignedResidue::nonnull_labels() {
        for n in MIN_EXPONENT..=max_n {
            checks += 1;
            if class_pow(a, n)? != class_pow(a, n + POWER_PERIOD)? {
                violations.push((a, n));
            }
        }
    }
    let boundary: Vec<BoundaryCase> = SignedResidue::nonnull_labels()
        .map(|a| {
            let first = SignedResidue::from_residue(i64::from(a.residue()));
            let seventh = class_pow(a, 1 + POWER_PERIOD)
                .expect("exponent 7 is in range")
                .as_single()
                .expect("powers are single-valued");
            BoundaryCase {
                label: a,
                first,
                seventh,
                holds: first == seventh,
            }
        })
        .collect();
    let boundary_failures = boundary.iter().filter(|b| !b.holds).map(|b| b.label).collect();
    Ok(PowerCycleReport {
        max_n,
        checks,
        violations,
        boundary,
        boundary_failures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationId {
    ThreeCubes,
    ThreeNinthPowers,
    SquarePlusCube,
    FermatLike,
    PowerSum,
}

/// Residues mod 9 reachable by a sum of powers, with the lexicographically
/// smallest residue tuple reaching each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueProfile {
    pub equation: EquationId,
    pub exponents: Vec<u32>,
    pub attainable: BTreeSet<u8>,
    pub witness_per_residue: BTreeMap<u8, Vec<u8>>,
}

impl ResidueProfile {
    pub fn unattainable(&self) -> BTreeSet<u8> {
        (0..9).filter(|r| !self.attainable.contains(r)).collect()
    }
}

/// `x^e mod 9` for a residue `x`.
pub fn residue_pow(x: u8, e: u32) -> u8 {
    (0..e).fold(1u32, |acc, _| acc * u32::from(x) % 9) as u8
}

/// Exhausts every residue tuple `(x_1, .., x_m)` in `0..9` and records which
/// values of `x_1^e_1 + .. + x_m^e_m mod 9` occur.
pub fn power_sum_profile(equation: EquationId, exponents: &[u32]) -> ResidueProfile {
    let mut attainable = BTreeSet::new();
    let mut witness_per_residue = BTreeMap::new();
    let terms = exponents.len();
    let mut tuple = vec![0u8; terms];
    let total = 9usize.pow(terms as u32);
    for index in 0..total {
        // odometer in lexicographic order, first coordinate most significant
        let mut rest = index;
        for slot in tuple.iter_mut().rev() {
            *slot = (rest % 9) as u8;
            rest /= 9;
        }
        let sum: u32 = tuple
            .iter()
            .zip(exponents)
            .map(|(&x, &e)| u32::from(residue_pow(x, e)))
            .sum();
        let r = (sum % 9) as u8;
        if attainable.insert(r) {
            witness_per_residue.insert(r, tuple.clone());
        }
    }
    ResidueProfile {
        equation,
        exponents: exponents.to_vec(),
        attainable,
        witness_per_residue,
    }
}

/// Residues of `x^3 + y^3 + z^3` mod 9.
pub fn cube_residue_profile() -> ResidueProfile {
    power_sum_profile(EquationId::ThreeCubes, &[3, 3, 3])
}

/// Residues of `a^2 + b^3` mod 9.
pub fn square_plus_cube_profile() -> ResidueProfile {
    power_sum_profile(EquationId::SquarePlusCube, &[2, 3])
}

/// Residues of three `exponent`-th powers; the basis of the search prefilter.
pub fn three_power_profile(exponent: u32) -> ResidueProfile {
    let id = match exponent {
        3 => EquationId::ThreeCubes,
        9 => EquationId::ThreeNinthPowers,
        _ => EquationId::PowerSum,
    };
    power_sum_profile(id, &[exponent; 3])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NinthPowerReport {
    pub bound: i64,
    pub checked: u64,
    /// Integers with `x^9 ≢ x^3 (mod 9)`.
    pub violations: Vec<i64>,
    /// `x^9 + y^9 + z^9 ≡ x^3 + y^3 + z^3` over all residue triples.
    pub sums_congruent: bool,
}

fn pow_mod9(x: i64, e: u32) -> i64 {
    match i128::from(x).checked_pow(e) {
        Some(p) => p.rem_euclid(9) as i64,
        None => {
            let base = x.rem_euclid(9);
            (0..e).fold(1, |acc, _| acc * base % 9)
        }
    }
}

/// Checks `x^9 ≡ x^3 (mod 9)` for every `|x| <= bound`, with the powers
/// computed exactly wherever they fit in 128 bits.
pub fn ninth_power_equiv_check(bound: i64) -> Result<NinthPowerReport> {
    if bound < 1 {
        return Err(Error::InvalidConfig(format!("bound must be at least 1, got {bound}")));
    }
    let violations: Vec<i64> = (-bound..=bound)
        .filter(|&x| pow_mod9(x, 9) != pow_mod9(x, 3))
        .collect();
    let cubes = power_sum_profile(EquationId::ThreeCubes, &[3, 3, 3]);
    let ninths = power_sum_profile(EquationId::ThreeNinthPowers, &[9, 9, 9]);
    let sums_congruent = (0..9u8).all(|x| {
        (0..9u8).all(|y| {
            (0..9u8).all(|z| {
                let s3: u32 = [x, y, z].iter().map(|&t| u32::from(residue_pow(t, 3))).sum();
                let s9: u32 = [x, y, z].iter().map(|&t| u32::from(residue_pow(t, 9))).sum();
                s3 % 9 == s9 % 9
            })
        })
    }) && cubes.attainable == ninths.attainable;
    Ok(NinthPowerReport {
        bound,
        checked: (2 * bound + 1) as u64,
        violations,
        sums_congruent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatProfile {
    pub n: u32,
    /// Residues of `z^n + x^n`.
    pub lhs: BTreeSet<u8>,
    /// Residues of `k^n`.
    pub rhs: BTreeSet<u8>,
    pub common: BTreeSet<u8>,
    /// Whether the profile for `n + 6` is the same.
    pub shifted_equal: bool,
}

fn fermat_sides(n: u32) -> (BTreeSet<u8>, BTreeSet<u8>) {
    let lhs = power_sum_profile(EquationId::FermatLike, &[n, n]).attainable;
    let rhs = power_sum_profile(EquationId::FermatLike, &[n]).attainable;
    (lhs, rhs)
}

pub fn fermat_cycle_profile(n: u32) -> Result<FermatProfile> {
    if u64::from(n) < MIN_EXPONENT {
        return Err(Error::ExponentTooSmall {
            got: n.into(),
            min: MIN_EXPONENT,
        });
    }
    let (lhs, rhs) = fermat_sides(n);
    let shifted_equal = fermat_sides(n + POWER_PERIOD as u32) == (lhs.clone(), rhs.clone());
    Ok(FermatProfile {
        n,
        common: lhs.intersection(&rhs).copied().collect(),
        lhs,
        rhs,
        shifted_equal,
    })
}

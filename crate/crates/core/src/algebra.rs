//! Class-level arithmetic on primal labels.
//!
//! Results are always given with the positive labels `1..=9`; residue 0 is
//! written `9_φ`. The null class behaves as residue 0 on input. Use
//! [`mirror`] to move a result to its negative-side name.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::residue::SignedResidue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl OpKind {
    pub fn name(self) -> &'static str {
        match self {
            OpKind::Add => "add",
            OpKind::Sub => "sub",
            OpKind::Mul => "mul",
            OpKind::Div => "div",
            OpKind::Pow => "pow",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OpKind::Add => "+",
            OpKind::Sub => "-",
            OpKind::Mul => "*",
            OpKind::Div => "/",
            OpKind::Pow => "^",
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "add" | "+" => Ok(OpKind::Add),
            "sub" | "-" => Ok(OpKind::Sub),
            "mul" | "*" | "x" => Ok(OpKind::Mul),
            "div" | "/" => Ok(OpKind::Div),
            "pow" | "^" => Ok(OpKind::Pow),
            _ => Err(Error::UnsupportedOp("unknown operation name")),
        }
    }
}

/// The set of classes produced by a class operation, ordered by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct ClassOpOutcome(BTreeSet<SignedResidue>);

impl ClassOpOutcome {
    pub fn empty() -> Self {
        ClassOpOutcome(BTreeSet::new())
    }

    pub fn single(label: SignedResidue) -> Self {
        ClassOpOutcome(BTreeSet::from([label]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: SignedResidue) -> bool {
        self.0.contains(&label)
    }

    pub fn iter(&self) -> impl Iterator<Item = SignedResidue> + '_ {
        self.0.iter().copied()
    }

    /// The sole element, if there is exactly one.
    pub fn as_single(&self) -> Option<SignedResidue> {
        match self.0.len() {
            1 => self.0.first().copied(),
            _ => None,
        }
    }

    /// Relabels every element with its negative-side name.
    pub fn mirrored(&self) -> Result<Self> {
        self.iter().map(mirror).collect()
    }
}

impl FromIterator<SignedResidue> for ClassOpOutcome {
    fn from_iter<I: IntoIterator<Item = SignedResidue>>(iter: I) -> Self {
        ClassOpOutcome(iter.into_iter().collect())
    }
}

impl fmt::Display for ClassOpOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for (i, label) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

fn canonical(residue: u32) -> ClassOpOutcome {
    ClassOpOutcome::single(SignedResidue::from_residue(residue as i64))
}

pub fn class_add(a: SignedResidue, b: SignedResidue) -> ClassOpOutcome {
    canonical(a.residue() as u32 + b.residue() as u32)
}

pub fn class_sub(a: SignedResidue, b: SignedResidue) -> ClassOpOutcome {
    canonical(a.residue() as u32 + 9 - b.residue() as u32)
}

pub fn class_mul(a: SignedResidue, b: SignedResidue) -> ClassOpOutcome {
    canonical(a.residue() as u32 * b.residue() as u32)
}

/// Every class `c` with `b * c = a`. May be empty, or hold 3 or 9 classes
/// when `b` shares the factor 3 with the modulus.
pub fn class_div(a: SignedResidue, b: SignedResidue) -> ClassOpOutcome {
    let target = class_mul(a, SignedResidue::ONE);
    SignedResidue::positive_labels()
        .filter(|&c| class_mul(b, c) == target)
        .collect()
}

/// Smallest exponent the power table covers.
pub const MIN_EXPONENT: u64 = 2;
/// Period of class powers from the square onward.
pub const POWER_PERIOD: u64 = 6;

/// `a^n` for `n >= 2`, folding the exponent into `2..=7` first.
pub fn class_pow(a: SignedResidue, n: u64) -> Result<ClassOpOutcome> {
    if n < MIN_EXPONENT {
        return Err(Error::ExponentTooSmall {
            got: n,
            min: MIN_EXPONENT,
        });
    }
    let folded = (n - MIN_EXPONENT) % POWER_PERIOD + MIN_EXPONENT;
    let base = a.residue() as u32;
    let residue = (0..folded).fold(1u32, |acc, _| acc * base % 9);
    Ok(canonical(residue))
}

/// Applies a two-operand class operation. `Pow` needs an exponent and is
/// rejected here.
pub fn apply(op: OpKind, a: SignedResidue, b: SignedResidue) -> Result<ClassOpOutcome> {
    match op {
        OpKind::Add => Ok(class_add(a, b)),
        OpKind::Sub => Ok(class_sub(a, b)),
        OpKind::Mul => Ok(class_mul(a, b)),
        OpKind::Div => Ok(class_div(a, b)),
        OpKind::Pow => Err(Error::UnsupportedOp("pow as a two-class operation")),
    }
}

/// Swaps between the positive and negative names of the same residue:
/// `k <-> -(9 - k)`, with `9 <-> -9`.
pub fn mirror(a: SignedResidue) -> Result<SignedResidue> {
    if a.is_null() {
        return Err(Error::NullClass("mirror label"));
    }
    let residue = a.residue() as i64;
    Ok(if a.is_positive() {
        SignedResidue::negative_from_residue(residue)
    } else {
        SignedResidue::from_residue(residue)
    })
}

/// The positive label `o` with `a + o = 9_φ`.
pub fn opposite(a: SignedResidue) -> Result<SignedResidue> {
    if a.is_null() {
        return Err(Error::NullClass("opposite"));
    }
    Ok(SignedResidue::from_residue(9 - a.residue() as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum Counterexample {
    Closure {
        a: SignedResidue,
        b: SignedResidue,
        result: ClassOpOutcome,
    },
    Associativity {
        a: SignedResidue,
        b: SignedResidue,
        c: SignedResidue,
    },
    NoNeutral,
    NoOpposite {
        a: SignedResidue,
    },
    Cancellation {
        a: SignedResidue,
        b: SignedResidue,
        c: SignedResidue,
    },
}

/// Outcome of checking the group laws over a finite set of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub op: OpKind,
    pub universe: Vec<SignedResidue>,
    pub closure_ok: bool,
    pub associativity_ok: bool,
    pub neutral_label: Option<SignedResidue>,
    pub opposites_ok: bool,
    pub opposite_pairs: Vec<(SignedResidue, SignedResidue)>,
    pub missing_opposites: Vec<SignedResidue>,
    pub cancellation_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.closure_ok
            && self.associativity_ok
            && self.neutral_label.is_some()
            && self.opposites_ok
            && self.cancellation_ok
    }
}

/// Checks the group laws for `op` over the nine positive classes.
pub fn verify_group_axioms(op: OpKind) -> Result<AxiomReport> {
    let universe: Vec<_> = SignedResidue::positive_labels().collect();
    verify_group_axioms_on(op, &universe)
}

/// Checks closure, associativity, the neutral element, opposites and right
/// cancellation for `op` over `universe` by exhaustion.
///
/// The universe must be a non-empty set of positive labels, since class
/// operations report their results with positive labels.
pub fn verify_group_axioms_on(op: OpKind, universe: &[SignedResidue]) -> Result<AxiomReport> {
    if !matches!(op, OpKind::Add | OpKind::Mul) {
        return Err(Error::UnsupportedOp("group axioms are checked for add and mul"));
    }
    if universe.is_empty() || universe.iter().any(|l| !l.is_positive()) {
        return Err(Error::InvalidConfig(
            "axiom universe must be a non-empty set of positive labels".into(),
        ));
    }
    let universe: Vec<SignedResidue> = universe
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let combine = |a, b| match op {
        OpKind::Add => class_add(a, b),
        _ => class_mul(a, b),
    };
    let inside = |o: &ClassOpOutcome| o.as_single().filter(|l| universe.contains(l));

    let mut counterexamples = Vec::new();

    let mut closure_ok = true;
    for &a in &universe {
        for &b in &universe {
            let result = combine(a, b);
            if inside(&result).is_none() {
                closure_ok = false;
                counterexamples.push(Counterexample::Closure { a, b, result });
            }
        }
    }

    let mut associativity_ok = true;
    for &a in &universe {
        for &b in &universe {
            for &c in &universe {
                let ab = combine(a, b).as_single().expect("single-valued");
                let bc = combine(b, c).as_single().expect("single-valued");
                if combine(ab, c) != combine(a, bc) {
                    associativity_ok = false;
                    counterexamples.push(Counterexample::Associativity { a, b, c });
                }
            }
        }
    }

    let neutral_label = universe.iter().copied().find(|&e| {
        universe.iter().all(|&a| {
            combine(e, a) == ClassOpOutcome::single(a) && combine(a, e) == ClassOpOutcome::single(a)
        })
    });
    if neutral_label.is_none() {
        counterexamples.push(Counterexample::NoNeutral);
    }

    let mut opposite_pairs = Vec::new();
    let mut missing_opposites = Vec::new();
    for &a in &universe {
        let found = neutral_label.and_then(|e| {
            let e = ClassOpOutcome::single(e);
            universe
                .iter()
                .copied()
                .find(|&o| combine(a, o) == e && combine(o, a) == e)
        });
        match found {
            Some(o) => opposite_pairs.push((a, o)),
            None => {
                missing_opposites.push(a);
                counterexamples.push(Counterexample::NoOpposite { a });
            }
        }
    }

    let mut cancellation_ok = true;
    for &a in &universe {
        for &b in &universe {
            if a == b {
                continue;
            }
            for &c in &universe {
                if combine(a, c) == combine(b, c) {
                    cancellation_ok = false;
                    counterexamples.push(Counterexample::Cancellation { a, b, c });
                }
            }
        }
    }

    Ok(AxiomReport {
        op,
        universe,
        closure_ok,
        associativity_ok,
        neutral_label,
        opposites_ok: missing_opposites.is_empty(),
        opposite_pairs,
        missing_opposites,
        cancellation_ok,
        counterexamples,
    })
}

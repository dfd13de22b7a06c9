//! Acceptance runner: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p primal-core --test acceptance`.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use primal_core::algebra::{verify_group_axioms, OpKind};
use primal_core::conjecture::{
    cube_residue_profile, fermat_cycle_profile, ninth_power_equiv_check, power_cycle_check,
    witness_search, WitnessQuery,
};
use primal_core::residue::{
    decode, encode, novem_floor_negative, novem_root_negative,
    novem_root_positive, SignedResidue,
};
use primal_core::search::{bench_compare, search, SearchConfig};
use primal_core::tables::{audit_table, fixture_cells, Header};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn label(k: i64) -> SignedResidue {
    SignedResidue::new(k).unwrap()
}

/// Digit sum on the decimal string, repeated until one digit is left.
fn string_root(v: i64) -> i64 {
    let sign = v.signum();
    let mut s = v.unsigned_abs().to_string();
    while s.len() > 1 {
        s = s.bytes().map(|b| u64::from(b - b'0')).sum::<u64>().to_string();
    }
    sign * s.parse::<i64>().unwrap()
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    match limit {
        Some(l) if took > l => Err(format!("{out}; took {took:.2?}, limit {l:?}")),
        _ => Ok(format!("{out} in {took:.2?}")),
    }
}

fn ac1() -> Check {
    timed(Some(Duration::from_secs(10)), || {
        for v in 1..=1_000_000i64 {
            let want = string_root(v);
            let got = novem_root_positive(v).map_err(|e| e.to_string())?;
            if i64::from(got.value()) != want {
                return Err(format!("positive closed form at {v}: {got} vs {want}"));
            }
        }
        for v in -1_000_000..=-1i64 {
            let want = string_root(v);
            let m = novem_root_negative(v).map_err(|e| e.to_string())?;
            let f = novem_floor_negative(v).map_err(|e| e.to_string())?;
            if i64::from(m.value()) != want || i64::from(f.value()) != want {
                return Err(format!("negative forms at {v}: {m}, {f} vs {want}"));
            }
        }
        Ok("closed forms equal iterated digit sum on 2,000,000 integers".into())
    })
}

fn ac2() -> Check {
    for v in (-1_000_000..=1_000_000i64).filter(|&v| v != 0) {
        let c = encode(v).map_err(|e| e.to_string())?;
        let back = decode(&c).map_err(|e| e.to_string())?;
        if back != v {
            return Err(format!("{v} -> {c} -> {back}"));
        }
    }
    for (v, want) in [(178, "7_20"), (157, "4_18"), (293, "5_33"), (359, "8_40"), (999, "9_111")] {
        let got = encode(v).unwrap().to_string();
        if got != want {
            return Err(format!("encode({v}) = {got}, expected {want}"));
        }
    }
    Ok("round trip on 2,000,000 integers; 5 worked examples exact".into())
}

/// Representatives of each nonzero label with |v| <= 1000, by direct digit sums.
fn representatives() -> HashMap<i64, Vec<i64>> {
    let mut map: HashMap<i64, Vec<i64>> = HashMap::new();
    for v in (-1000..=1000i64).filter(|&v| v != 0) {
        map.entry(string_root(v)).or_default().push(v);
    }
    map
}

fn pos_label(v: i64) -> i64 {
    string_root(v.rem_euclid(9) + 9)
}

fn neg_label(v: i64) -> i64 {
    string_root(v.rem_euclid(9) - 18)
}

/// Every (a, b) representative pair, collapsed to the set of result labels.
fn cell_over(
    reps: &HashMap<i64, Vec<i64>>,
    a: i64,
    b: i64,
    f: impl Fn(i64, i64) -> i64,
) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for &x in reps[&a].iter().step_by(11) {
        for &y in reps[&b].iter().step_by(11) {
            out.insert(f(x, y));
        }
    }
    out
}

fn oracle_table(reps: &HashMap<i64, Vec<i64>>, id: u32) -> Vec<Vec<BTreeSet<i64>>> {
    let grid = |f: &dyn Fn(i64, i64) -> BTreeSet<i64>| -> Vec<Vec<BTreeSet<i64>>> {
        (1..=9).map(|r| (1..=9).map(|c| f(r, c)).collect()).collect()
    };
    match id {
        4 => grid(&|r, c| cell_over(reps, r, c, |x, y| pos_label(x + y))),
        8 => grid(&|r, c| cell_over(reps, r, c, |x, y| pos_label(x * y))),
        5 => grid(&|r, c| cell_over(reps, c, -r, |x, y| pos_label(x + y))),
        6 => grid(&|r, c| cell_over(reps, r, -c, |x, y| neg_label(x + y))),
        7 => grid(&|b, a| {
            (1..=9)
                .filter(|&c| {
                    cell_over(reps, b, c, |x, y| pos_label(x * y)).contains(&a)
                })
                .collect()
        }),
        9 => (1..=9)
            .map(|r| {
                (2..=15u32)
                    .map(|n| {
                        reps[&r]
                            .iter()
                            .step_by(13)
                            .map(|&x| pos_label((0..n).fold(1, |acc, _| acc * x % 9)))
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        _ => unreachable!(),
    }
}

fn ac3() -> Check {
    let reps = representatives();
    let expected: [(u32, usize, usize); 6] =
        [(4, 81, 81), (5, 81, 81), (8, 81, 81), (9, 126, 126), (7, 80, 81), (6, 9, 81)];
    let mut summary = Vec::new();
    for (id, want_match, want_total) in expected {
        let audit = audit_table(id).map_err(|e| e.to_string())?;
        if audit.match_count != want_match || audit.total() != want_total {
            return Err(format!(
                "table {id}: {}/{} match, expected {want_match}/{want_total}",
                audit.match_count,
                audit.total()
            ));
        }
        // independent diff of the transcription against representatives
        let oracle = oracle_table(&reps, id);
        let published = fixture_cells(id).map_err(|e| e.to_string())?;
        let mut oracle_mismatch = 0;
        for (r, row) in published.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let published: BTreeSet<i64> = cell.iter().map(|l| i64::from(l.value())).collect();
                if oracle[r][c].len() > 1 && id != 7 {
                    return Err(format!("table {id}: representatives disagree at {r},{c}"));
                }
                if published != oracle[r][c] {
                    oracle_mismatch += 1;
                }
            }
        }
        if oracle_mismatch != audit.mismatch_count {
            return Err(format!(
                "table {id}: audit found {} mismatches, oracle {oracle_mismatch}",
                audit.mismatch_count
            ));
        }
        summary.push(format!("T{id} {}/{}", audit.match_count, audit.total()));
    }
    let seven = audit_table(7).unwrap();
    let m = &seven.mismatches[0];
    let at_expected = m.row == label(2)
        && m.col == Header::Class(label(8))
        && m.published.iter().collect::<Vec<_>>() == [label(7)]
        && m.computed.iter().collect::<Vec<_>>() == [label(4)];
    if !at_expected {
        return Err(format!("table 7 mismatch is at {:?}, {:?}", m.row, m.col));
    }
    Ok(format!("{}; T7 differs only at (φ^2, φ^8): 7 vs 4", summary.join(", ")))
}

fn ac4() -> Check {
    timed(Some(Duration::from_secs(1)), || {
        let r = power_cycle_check(200).map_err(|e| e.to_string())?;
        if !r.violations.is_empty() || r.checks != 18 * 199 {
            return Err(format!("{} violations over {} checks", r.violations.len(), r.checks));
        }
        let failing: Vec<i64> = r.boundary_failures.iter().map(|l| l.value().into()).collect();
        if failing != [-6, -3, 3, 6] {
            return Err(format!("n=1 failures {failing:?}"));
        }
        Ok(format!("0 violations over {} checks; n=1 fails for ±3, ±6", r.checks))
    })
}

fn ac5() -> Check {
    let add = verify_group_axioms(OpKind::Add).map_err(|e| e.to_string())?;
    if !add.all_ok() || add.neutral_label != Some(label(9)) {
        return Err(format!("add: {add:?}"));
    }
    let mul = verify_group_axioms(OpKind::Mul).map_err(|e| e.to_string())?;
    let missing: Vec<i64> = mul.missing_opposites.iter().map(|l| l.value().into()).collect();
    if !mul.closure_ok || !mul.associativity_ok || mul.opposites_ok || missing != [3, 6, 9] {
        return Err(format!("mul: {mul:?}"));
    }
    Ok("add is a group with neutral 9; mul closed, associative, no opposites for 3, 6, 9".into())
}

fn ac6() -> Check {
    let cubes = cube_residue_profile();
    if cubes.attainable != BTreeSet::from([0, 1, 2, 3, 6, 7, 8]) {
        return Err(format!("cube residues {:?}", cubes.attainable));
    }
    let ninth = ninth_power_equiv_check(10_000).map_err(|e| e.to_string())?;
    if !ninth.violations.is_empty() || ninth.checked != 20_001 {
        return Err(format!("ninth powers: {:?}", ninth.violations));
    }
    for n in 2..=50 {
        let a = fermat_cycle_profile(n).map_err(|e| e.to_string())?;
        let b = fermat_cycle_profile(n + 6).map_err(|e| e.to_string())?;
        if (a.lhs, a.rhs, a.common) != (b.lhs, b.rhs, b.common) {
            return Err(format!("fermat profile differs at n={n}"));
        }
    }
    Ok("cube residues {0,1,2,3,6,7,8}; x^9≡x^3 for |x|<=1e4; fermat profile 6-periodic on 2..=50".into())
}

fn ac7() -> Check {
    timed(Some(Duration::from_secs(30)), || {
        let cfg = SearchConfig::for_range(1, 100, 30);
        let b = bench_compare(&cfg).map_err(|e| e.to_string())?;
        if !b.solution_sets_equal {
            return Err("filtered and unfiltered solution sets differ".into());
        }
        if b.filtered.filter_skips != 22 {
            return Err(format!("{} skipped, expected 22", b.filtered.filter_skips));
        }
        let has = |k: i64, t: [i64; 3]| {
            b.filtered.result(k).is_some_and(|r| r.solutions.contains(&t))
        };
        if !has(29, [1, 1, 3]) || !has(3, [1, 1, 1]) || !has(3, [-5, 4, 4]) {
            return Err("missing a known small solution for k=3 or k=29".into());
        }
        Ok("solution sets equal, 22/100 skipped, k=29 (1,1,3), k=3 (1,1,1) (-5,4,4)".into())
    })
}

fn ac8() -> Check {
    let q = |target| WitnessQuery {
        op: OpKind::Mul,
        class_a: label(2),
        class_b: label(2),
        target,
        bound: 100,
    };
    let hit = witness_search(&q(4)).map_err(|e| e.to_string())?;
    if !hit.witnesses.contains(&(2, 2)) {
        return Err(format!("target 4: {:?}", hit.witnesses));
    }
    let miss = witness_search(&q(13)).map_err(|e| e.to_string())?;
    if !miss.witnesses.is_empty() || !miss.exhausted {
        return Err(format!("target 13: {:?}", miss.witnesses));
    }
    Ok("target 4 finds (2,2); target 13 exhausts with 0 witnesses".into())
}

fn ac9() -> Check {
    for filter in [true, false] {
        let mut docs = Vec::new();
        for workers in [1, 2, 8] {
            let cfg = SearchConfig {
                worker_count: workers,
                filter_enabled: filter,
                ..SearchConfig::for_range(-20, 60, 25)
            };
            docs.push(search(&cfg).map_err(|e| e.to_string())?.comparable_json());
        }
        if docs.iter().any(|d| *d != docs[0]) {
            return Err(format!("reports differ across workers (filter {filter})"));
        }
    }
    Ok("reports byte-identical for 1, 2 and 8 workers, filter on and off".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(msg) => println!("[PASS] {name} {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name} {msg}");
            }
        }
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

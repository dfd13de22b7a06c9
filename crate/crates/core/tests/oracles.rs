//! Brute-force oracles that never call the class operations: table cells are
//! recomputed from concrete representatives and search results from a plain
//! triple loop.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use primal_core::residue::{iterated_digital_root, SignedResidue};
use primal_core::search::{search, KStatus, SearchConfig};
use primal_core::tables::{audit_table, fixture_cells, generate_by_id, Header};

const REP_BOUND: i64 = 1000;

fn reps(label: i64) -> &'static [i64] {
    // members of each class by direct filtering, no decode
    static REPS: OnceLock<HashMap<i64, Vec<i64>>> = OnceLock::new();
    let all = REPS.get_or_init(|| {
        let mut map: HashMap<i64, Vec<i64>> = HashMap::new();
        for v in (-REP_BOUND..=REP_BOUND).filter(|&v| v != 0) {
            let label = iterated_digital_root(v).fixed_point.value() as i64;
            map.entry(label).or_default().push(v);
        }
        map
    });
    &all[&label]
}

fn positive_label(n: i64) -> SignedResidue {
    // shift to a positive representative, then take its digital root
    let shifted = n.rem_euclid(9) + 9;
    iterated_digital_root(shifted).fixed_point
}

fn negative_label(n: i64) -> SignedResidue {
    let shifted = n.rem_euclid(9) - 18;
    iterated_digital_root(shifted).fixed_point
}

/// What each published table should contain, from representatives alone.
fn oracle_cells(table_id: u32) -> Vec<Vec<BTreeSet<SignedResidue>>> {
    let pos = 1..=9i64;
    let single = |l| BTreeSet::from([l]);
    match table_id {
        4 | 8 => pos
            .clone()
            .map(|r| {
                pos.clone()
                    .map(|c| {
                        let (ra, rb) = (reps(r), reps(c));
                        let outs: BTreeSet<_> = ra
                            .iter()
                            .step_by(7)
                            .flat_map(|&a| {
                                rb.iter().step_by(7).map(move |&b| {
                                    positive_label(if table_id == 4 { a + b } else { a * b })
                                })
                            })
                            .collect();
                        assert_eq!(outs.len(), 1, "representatives disagree");
                        outs
                    })
                    .collect()
            })
            .collect(),
        5 => (1..=9i64)
            .map(|r| {
                pos.clone()
                    .map(|c| single(positive_label(reps(c)[3] + reps(-r)[5])))
                    .collect()
            })
            .collect(),
        6 => pos
            .clone()
            .map(|r| {
                (1..=9i64)
                    .map(|c| single(negative_label(reps(r)[4] + reps(-c)[2])))
                    .collect()
            })
            .collect(),
        7 => pos
            .clone()
            .map(|b| {
                pos.clone()
                    .map(|a| {
                        // c solves b * c = a if some representative product lands in a
                        (1..=9i64)
                            .filter(|&c| {
                                reps(b).iter().take(20).any(|&vb| {
                                    reps(c).iter().take(20).any(|&vc| {
                                        positive_label(vb * vc).value() as i64 == a
                                    })
                                })
                            })
                            .map(|c| SignedResidue::new(c).unwrap())
                            .collect()
                    })
                    .collect()
            })
            .collect(),
        9 => pos
            .clone()
            .map(|r| {
                (2..=15u32)
                    .map(|n| {
                        let v = reps(r)[2] as i128;
                        let p = v.pow(n).rem_euclid(9) as i64;
                        single(positive_label(p))
                    })
                    .collect()
            })
            .collect(),
        _ => unreachable!(),
    }
}

#[test]
fn regenerated_tables_match_representative_oracle() {
    for id in 4..=9 {
        let table = generate_by_id(id).unwrap();
        let oracle = oracle_cells(id);
        for (r, row) in oracle.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let got: BTreeSet<_> = table.cell(r, c).iter().collect();
                assert_eq!(&got, cell, "table {id} row {r} col {c}");
            }
        }
    }
}

#[test]
fn audit_counts_match_oracle_diff() {
    for id in 4..=9 {
        let oracle = oracle_cells(id);
        let published = fixture_cells(id).unwrap();
        let mut expected_mismatches = Vec::new();
        for (r, row) in published.iter().enumerate() {
            for (c, published) in row.iter().enumerate() {
                let published: BTreeSet<_> = published.iter().collect();
                if published != oracle[r][c] {
                    expected_mismatches.push((r, c));
                }
            }
        }
        let audit = audit_table(id).unwrap();
        assert_eq!(audit.mismatch_count, expected_mismatches.len(), "table {id}");
        let table = generate_by_id(id).unwrap();
        for (m, (r, c)) in audit.mismatches.iter().zip(&expected_mismatches) {
            assert_eq!(m.row, table.row_labels[*r]);
            assert_eq!(m.col, table.col_headers[*c]);
        }
    }
    // Table 6 disagrees everywhere off the diagonal
    let six = audit_table(6).unwrap();
    assert_eq!(six.match_count, 9);
    for m in &six.mismatches {
        let Header::Class(col) = m.col else { panic!() };
        assert_ne!(m.row.value(), -col.value());
    }
}

fn naive_triples(k: i64, bound: i64, e: u32) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for z in -bound..=bound {
        for y in z..=bound {
            for x in y..=bound {
                if z.pow(e) + y.pow(e) + x.pow(e) == k {
                    out.push([z, y, x]);
                }
            }
        }
    }
    out
}

#[test]
fn search_matches_naive_triple_loop() {
    for e in [2u32, 3, 4, 5] {
        let bound = if e == 5 { 6 } else { 9 };
        let cfg = SearchConfig {
            exponent: e,
            filter_enabled: false,
            ..SearchConfig::for_range(-30, 60, bound)
        };
        let report = search(&cfg).unwrap();
        for r in &report.results {
            assert_eq!(r.solutions, naive_triples(r.k, bound, e), "k = {} e = {e}", r.k);
        }
    }
}

#[test]
fn prefilter_never_drops_a_solvable_target() {
    for e in [2u32, 3, 4, 6, 9] {
        let bound = if e >= 6 { 4 } else { 8 };
        let unfiltered = search(&SearchConfig {
            exponent: e,
            filter_enabled: false,
            ..SearchConfig::for_range(-50, 50, bound)
        })
        .unwrap();
        let filtered = search(&SearchConfig {
            exponent: e,
            ..SearchConfig::for_range(-50, 50, bound)
        })
        .unwrap();
        for (f, u) in filtered.results.iter().zip(&unfiltered.results) {
            if f.status == KStatus::FilteredOut {
                assert!(u.solutions.is_empty(), "k = {} e = {e}", f.k);
            } else {
                assert_eq!(f.solutions, u.solutions);
            }
        }
    }
}

#[test]
fn nine_consecutive_targets_skip_two_cubes() {
    for start in -20..20 {
        let r = search(&SearchConfig::for_range(start, start + 8, 2)).unwrap();
        assert_eq!(r.filter_skips, 2, "window starting at {start}");
    }
}

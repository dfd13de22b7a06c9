//! Bounded search for `x^e + y^e + z^e = k` with a mod-9 prefilter.
//!
//! Targets whose residue mod 9 no sum of three `e`-th powers can reach are
//! skipped before any integer work. The attainable residues come from
//! [`three_power_profile`], so the filter is derived rather than hard-coded.
//!
//! Triples are enumerated in canonical form `z <= y <= x`: for each `(z, y)`
//! pair the remaining term is looked up in a table of `e`-th powers, so one
//! candidate is one `(z, y)` pair.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::conjecture::three_power_profile;
use crate::error::{Error, Result};

pub const DEFAULT_CANDIDATE_CEILING: u128 = 1_000_000_000;

pub(crate) fn worker_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::InvalidConfig("worker count must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start worker pool: {e}")))
}

pub(crate) fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub k_min: i64,
    pub k_max: i64,
    /// Per-variable radius; all of `x, y, z` lie in `-bound..=bound`.
    pub bound: i64,
    pub exponent: u32,
    pub filter_enabled: bool,
    pub worker_count: usize,
    pub candidate_ceiling: u128,
    /// Print one line per finished `k` to stderr.
    pub progress: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            k_min: 1,
            k_max: 1,
            bound: 10,
            exponent: 3,
            filter_enabled: true,
            worker_count: 1,
            candidate_ceiling: DEFAULT_CANDIDATE_CEILING,
            progress: false,
        }
    }
}

impl SearchConfig {
    pub fn for_k(k: i64, bound: i64) -> Self {
        SearchConfig {
            k_min: k,
            k_max: k,
            bound,
            ..Default::default()
        }
    }

    pub fn for_range(k_min: i64, k_max: i64, bound: i64) -> Self {
        SearchConfig {
            k_min,
            k_max,
            bound,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_min > self.k_max {
            return Err(Error::InvalidConfig(format!(
                "k_min {} exceeds k_max {}",
                self.k_min, self.k_max
            )));
        }
        if self.bound < 1 {
            return Err(Error::InvalidConfig(format!("bound must be at least 1, got {}", self.bound)));
        }
        if self.exponent < 2 {
            return Err(Error::ExponentTooSmall {
                got: self.exponent.into(),
                min: 2,
            });
        }
        if self.worker_count == 0 {
            return Err(Error::InvalidConfig("worker count must be at least 1".into()));
        }
        // three terms plus k must stay inside i128
        let fits = i128::from(self.bound)
            .checked_pow(self.exponent)
            .and_then(|p| p.checked_mul(4))
            .is_some();
        if !fits {
            return Err(Error::InvalidConfig(format!(
                "bound {}^{} overflows 128-bit arithmetic",
                self.bound, self.exponent
            )));
        }
        Ok(())
    }

    fn pairs_per_k(&self) -> u128 {
        let n = 2 * self.bound as u128 + 1;
        n * (n + 1) / 2
    }
}

/// `true` unless `k mod 9` is unreachable by three `exponent`-th powers.
pub fn prefilter(k: i64, exponent: u32) -> bool {
    three_power_profile(exponent)
        .attainable
        .contains(&(k.rem_euclid(9) as u8))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KStatus {
    Solved,
    FilteredOut,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KResult {
    pub k: i64,
    pub status: KStatus,
    /// Ascending triples `[z, y, x]`, sorted lexicographically.
    pub solutions: Vec<[i64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub k_min: i64,
    pub k_max: i64,
    pub bound: i64,
    pub exponent: u32,
    pub filter_enabled: bool,
    pub results: Vec<KResult>,
    pub candidates_examined: u64,
    pub filter_skips: u64,
    pub elapsed_ms: f64,
}

impl SearchReport {
    /// The report as JSON without the timing field, for comparing runs.
    pub fn comparable_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(map) = value.as_object_mut() {
            map.remove("elapsed_ms");
        }
        value.to_string()
    }

    pub fn result(&self, k: i64) -> Option<&KResult> {
        self.results.iter().find(|r| r.k == k)
    }

    /// All `(k, triple)` pairs found.
    pub fn solution_set(&self) -> BTreeSet<(i64, [i64; 3])> {
        self.results
            .iter()
            .flat_map(|r| r.solutions.iter().map(move |s| (r.k, *s)))
            .collect()
    }
}

struct PowerTable {
    bound: i64,
    powers: Vec<i128>,
    roots: HashMap<i128, Vec<i64>>,
}

impl PowerTable {
    fn new(bound: i64, exponent: u32) -> Self {
        let powers: Vec<i128> = (-bound..=bound).map(|x| i128::from(x).pow(exponent)).collect();
        let mut roots: HashMap<i128, Vec<i64>> = HashMap::new();
        for x in -bound..=bound {
            roots.entry(powers[(x + bound) as usize]).or_default().push(x);
        }
        PowerTable { bound, powers, roots }
    }

    fn pow(&self, x: i64) -> i128 {
        self.powers[(x + self.bound) as usize]
    }

    /// Canonical solutions with the given smallest term `z`, and the number of
    /// `(z, y)` pairs examined.
    fn slice(&self, k: i64, z: i64) -> (Vec<[i64; 3]>, u64) {
        let mut found = Vec::new();
        let zp = self.pow(z);
        for y in z..=self.bound {
            let rest = i128::from(k) - zp - self.pow(y);
            if let Some(xs) = self.roots.get(&rest) {
                found.extend(xs.iter().filter(|&&x| x >= y).map(|&x| [z, y, x]));
            }
        }
        (found, (self.bound - z + 1) as u64)
    }
}

pub fn search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let start = Instant::now();
    let attainable = three_power_profile(config.exponent).attainable;
    let passes = |k: i64| !config.filter_enabled || attainable.contains(&(k.rem_euclid(9) as u8));

    let scanned = (config.k_min..=config.k_max).filter(|&k| passes(k)).count() as u128;
    let needed = scanned * config.pairs_per_k();
    if needed > config.candidate_ceiling {
        return Err(Error::ResourceGuard {
            needed,
            ceiling: config.candidate_ceiling,
        });
    }

    let pool = worker_pool(config.worker_count)?;
    let table = PowerTable::new(config.bound, config.exponent);
    let mut results = Vec::new();
    let mut candidates_examined = 0u64;
    let mut filter_skips = 0u64;

    for k in config.k_min..=config.k_max {
        if !passes(k) {
            filter_skips += 1;
            results.push(KResult {
                k,
                status: KStatus::FilteredOut,
                solutions: Vec::new(),
            });
            if config.progress {
                eprintln!("k={k} filtered-out");
            }
            continue;
        }
        let slices: Vec<(Vec<[i64; 3]>, u64)> = pool.install(|| {
            (-config.bound..=config.bound)
                .into_par_iter()
                .map(|z| table.slice(k, z))
                .collect()
        });
        let mut solutions = Vec::new();
        for (found, examined) in slices {
            solutions.extend(found);
            candidates_examined += examined;
        }
        solutions.sort_unstable();
        solutions.dedup();
        let status = if solutions.is_empty() {
            KStatus::Exhausted
        } else {
            KStatus::Solved
        };
        if config.progress {
            eprintln!("k={k} {} solution(s)", solutions.len());
        }
        results.push(KResult { k, status, solutions });
    }

    Ok(SearchReport {
        k_min: config.k_min,
        k_max: config.k_max,
        bound: config.bound,
        exponent: config.exponent,
        filter_enabled: config.filter_enabled,
        results,
        candidates_examined,
        filter_skips,
        elapsed_ms: elapsed_ms(start),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchResult {
    pub filtered: SearchReport,
    pub unfiltered: SearchReport,
    pub solution_sets_equal: bool,
    /// Unfiltered over filtered candidate counts; `None` when the filtered
    /// run examined nothing.
    pub candidate_ratio: Option<f64>,
    pub wall_clock_ratio: Option<f64>,
}

fn ratio(num: f64, den: f64) -> Option<f64> {
    (den > 0.0).then(|| num / den)
}

/// Runs the search with the filter on and off and insists the solutions agree.
pub fn bench_compare(config: &SearchConfig) -> Result<BenchResult> {
    let filtered = search(&SearchConfig {
        filter_enabled: true,
        ..config.clone()
    })?;
    let unfiltered = search(&SearchConfig {
        filter_enabled: false,
        ..config.clone()
    })?;
    for (f, u) in filtered.results.iter().zip(&unfiltered.results) {
        if f.solutions != u.solutions {
            return Err(Error::Unsound { k: f.k });
        }
    }
    Ok(BenchResult {
        solution_sets_equal: filtered.solution_set() == unfiltered.solution_set(),
        candidate_ratio: ratio(
            unfiltered.candidates_examined as f64,
            filtered.candidates_examined as f64,
        ),
        wall_clock_ratio: ratio(unfiltered.elapsed_ms, filtered.elapsed_ms),
        filtered,
        unfiltered,
    })
}

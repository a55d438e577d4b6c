//! Mechanical checks of a code descriptor: recovery-set locality, agreement
//! with the declared group orbits, repair round trips and exact minimum
//! distance.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::LrcCode;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::repair::{repair, ErasurePattern};
use crate::tower::place_index;

pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

/// Codes with at most this many codewords get exhaustive repair checks.
pub const EXHAUSTIVE_REPAIR_LIMIT: u128 = 10_000;

/// Enumeration cap, overridable through `LRC_MAX_ENUM`.
pub fn enum_cap_from_env() -> u128 {
    std::env::var("LRC_MAX_ENUM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateCheck {
    pub coord: usize,
    pub set1: bool,
    pub set2: bool,
    pub disjoint: bool,
}

impl CoordinateCheck {
    pub fn passed(&self) -> bool {
        self.set1 && self.set2 && self.disjoint
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalityReport {
    pub coordinates: Vec<CoordinateCheck>,
    pub passed: bool,
}

impl LocalityReport {
    fn from_checks(coordinates: Vec<CoordinateCheck>) -> Self {
        let passed = coordinates.iter().all(CoordinateCheck::passed);
        LocalityReport {
            coordinates,
            passed,
        }
    }

    pub fn first_failure(&self) -> Option<&CoordinateCheck> {
        self.coordinates.iter().find(|c| !c.passed())
    }
}

/// Index list is in range, duplicate-free, avoids `i` and has at most `r`
/// entries.
fn well_formed(set: &[usize], i: usize, r: usize, n: usize) -> bool {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == set.len() && set.len() <= r && set.iter().all(|&h| h < n && h != i)
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| !b.contains(x))
}

/// Locality by column spans: coordinate `i` is determined by the symbols on
/// `I_{i,j}` iff column `i` of the generator lies in the span of the columns
/// indexed by `I_{i,j}`.
pub fn verify_definition1(code: &LrcCode) -> LocalityReport {
    let f = code.spec.field();
    let n = code.n();
    let gt = code.generator.transpose();
    let determined = |i: usize, set: &[usize]| {
        let cols = Matrix::from_rows(code.k(), set.iter().map(|&h| gt.row(h).to_vec()).collect());
        cols.row_space_contains(f, gt.row(i))
    };
    let checks = code
        .recovery_sets
        .iter()
        .enumerate()
        .map(|(i, rs)| {
            let ok = |j: usize| {
                let set = rs.set(j);
                rs.coord == i && well_formed(set, i, code.locality(j), n) && determined(i, set)
            };
            CoordinateCheck {
                coord: i,
                set1: ok(1),
                set2: ok(2),
                disjoint: disjoint(&rs.set1, &rs.set2),
            }
        })
        .collect();
    LocalityReport::from_checks(checks)
}

/// Definition 1 taken literally: for every codeword, the symbols on
/// `I_{i,j}` must pin down the symbol at `i`. Enumerates all `q^k`
/// codewords, so only for tiny codes.
pub fn verify_definition1_exhaustive(code: &LrcCode, cap: u128) -> Result<LocalityReport> {
    let words = all_codewords(code, cap)?;
    let n = code.n();
    let checks = code
        .recovery_sets
        .iter()
        .enumerate()
        .map(|(i, rs)| {
            let ok = |j: usize| {
                let set = rs.set(j);
                if rs.coord != i || !well_formed(set, i, code.locality(j), n) {
                    return false;
                }
                let mut seen: HashMap<Vec<FieldElement>, FieldElement> = HashMap::new();
                words.iter().all(|w| {
                    let key: Vec<FieldElement> = set.iter().map(|&h| w[h]).collect();
                    *seen.entry(key).or_insert(w[i]) == w[i]
                })
            };
            CoordinateCheck {
                coord: i,
                set1: ok(1),
                set2: ok(2),
                disjoint: disjoint(&rs.set1, &rs.set2),
            }
        })
        .collect();
    Ok(LocalityReport::from_checks(checks))
}

/// Whether each listed recovery set is exactly the orbit of its place under
/// the declared group, minus the place itself. Returns the coordinates that
/// disagree.
pub fn orbit_mismatches(code: &LrcCode) -> Vec<usize> {
    let index = place_index(&code.places);
    let mut bad = Vec::new();
    for (i, rs) in code.recovery_sets.iter().enumerate() {
        let place = &code.places[i];
        let agrees = |j: usize| {
            let mut expected: Vec<Option<usize>> = code
                .group(j)
                .elements()
                .iter()
                .filter(|s| !s.is_identity())
                .map(|s| index.get(&s.apply(&code.spec, &place.coords)).copied())
                .collect();
            let mut listed: Vec<Option<usize>> = rs.set(j).iter().map(|&h| Some(h)).collect();
            expected.sort_unstable();
            listed.sort_unstable();
            expected == listed
        };
        if !(agrees(1) && agrees(2)) {
            bad.push(i);
        }
    }
    bad
}

fn codeword_count(code: &LrcCode) -> u128 {
    (code.spec.q() as u128).saturating_pow(code.k() as u32)
}

fn message_from_index(code: &LrcCode, mut idx: u128) -> Vec<FieldElement> {
    let q = code.spec.q() as u128;
    let mut msg = vec![FieldElement::ZERO; code.k()];
    for slot in msg.iter_mut().rev() {
        *slot = code.spec.field().el((idx % q) as u32);
        idx /= q;
    }
    msg
}

fn all_codewords(code: &LrcCode, cap: u128) -> Result<Vec<Vec<FieldElement>>> {
    let count = codeword_count(code);
    if count > cap {
        return Err(Error::TooLarge { count, cap });
    }
    Ok((0..count)
        .map(|idx| code.encode(&message_from_index(code, idx)))
        .collect())
}

/// Exact minimum distance by enumerating the message space in a q-ary Gray
/// order: consecutive messages differ in one symbol, so each codeword costs
/// one row addition. Work is split by the leading message symbol.
pub fn brute_force_distance(code: &LrcCode, cap: u128) -> Result<usize> {
    let count = codeword_count(code);
    if count > cap {
        return Err(Error::TooLarge { count, cap });
    }
    let f = code.spec.field();
    let q = code.spec.q();
    let n = code.n();
    let k = code.k();
    let g = &code.generator;

    // inc[t][v] = (e(v + 1) - e(v)) * g_{t+1}: the change when Gray digit t
    // (over message slots 1..k) steps from value v to v + 1.
    let inc: Vec<Vec<Vec<FieldElement>>> = (1..k)
        .map(|slot| {
            (0..q)
                .map(|v| {
                    let delta = f.sub(f.el((v + 1) % q), f.el(v));
                    g.row(slot).iter().map(|&x| f.mul(delta, x)).collect()
                })
                .collect()
        })
        .collect();
    let rest = q as u128;
    let steps = rest.pow(k as u32 - 1);

    let best = (0..q)
        .into_par_iter()
        .map(|lead| {
            let mut word: Vec<FieldElement> =
                g.row(0).iter().map(|&x| f.mul(f.el(lead), x)).collect();
            let mut weight = word.iter().filter(|x| !x.is_zero()).count();
            let mut best = if lead == 0 { n + 1 } else { weight };
            let mut gray = vec![0u32; k.saturating_sub(1)];
            let mut counter = vec![0u32; k.saturating_sub(1)];
            for _ in 1..steps {
                let mut t = 0;
                while counter[t] == q - 1 {
                    counter[t] = 0;
                    t += 1;
                }
                counter[t] += 1;
                let row = &inc[t][gray[t] as usize];
                gray[t] = (gray[t] + 1) % q;
                for (c, &d) in word.iter_mut().zip(row) {
                    if d.is_zero() {
                        continue;
                    }
                    let was = !c.is_zero();
                    *c = f.add(*c, d);
                    match (was, c.is_zero()) {
                        (true, true) => weight -= 1,
                        (false, false) => weight += 1,
                        _ => {}
                    }
                }
                best = best.min(weight);
            }
            best
        })
        .min()
        .unwrap_or(n + 1);
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub k: usize,
    pub dim_v1: usize,
    pub dim_v2: usize,
    pub dim_sum: usize,
    pub budget: u64,
    pub genus: u64,
    /// `dim V1 + dim V2 - (budget - g + 1)`, the value the Riemann–Roch
    /// estimate gives when `budget >= 2g - 1`.
    pub riemann_roch_estimate: Option<i64>,
}

/// Dimension bookkeeping for a freshly constructed code; `None` for codes
/// loaded from a descriptor.
pub fn dimension_report(code: &LrcCode) -> Option<DimensionReport> {
    let info = code.construction.as_ref()?;
    let genus = code.spec.genus();
    let riemann_roch_estimate = (info.budget + 1 >= 2 * genus).then(|| {
        info.dim_v1 as i64 + info.dim_v2 as i64 - (info.budget as i64 - genus as i64 + 1)
    });
    Some(DimensionReport {
        k: code.k(),
        dim_v1: info.dim_v1,
        dim_v2: info.dim_v2,
        dim_sum: info.dim_sum,
        budget: info.budget,
        genus,
        riemann_roch_estimate,
    })
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random codewords used when the code is too large to check them all.
    pub random_trials: usize,
    pub enum_cap: u128,
    /// Fail with `TooLarge` instead of skipping the distance check.
    pub exact_distance: bool,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            random_trials: 100,
            enum_cap: DEFAULT_ENUM_CAP,
            exact_distance: false,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairSummary {
    pub seed: u64,
    pub exhaustive: bool,
    pub codewords: usize,
    pub attempts: usize,
    pub failures: usize,
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DistanceResult {
    Exact { value: usize, d_designed: usize },
    Skipped { codewords: String, cap: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub locality_ms: f64,
    pub repair_ms: f64,
    pub distance_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub k: usize,
    pub locality: LocalityReport,
    pub orbit_mismatches: Vec<usize>,
    pub repair: RepairSummary,
    pub distance: DistanceResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
    pub passed: bool,
}

impl VerifyReport {
    /// Short name of the first failed check.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(c) = self.locality.first_failure() {
            return Some(format!("locality check failed at coordinate {}", c.coord));
        }
        if let Some(i) = self.orbit_mismatches.first() {
            return Some(format!(
                "recovery sets of coordinate {i} are not the declared group orbits"
            ));
        }
        if let Some((i, j)) = self.repair.first_failure {
            return Some(format!("repair failed at coordinate {i} through set {j}"));
        }
        if let DistanceResult::Exact { value, d_designed } = self.distance {
            if value < d_designed {
                return Some(format!(
                    "minimum distance {value} is below the designed {d_designed}"
                ));
            }
        }
        None
    }
}

fn repair_round_trips(code: &LrcCode, options: &VerifyOptions) -> RepairSummary {
    let f = code.spec.field();
    let q = code.spec.q();
    let exhaustive = codeword_count(code) <= EXHAUSTIVE_REPAIR_LIMIT;
    let messages: Vec<Vec<FieldElement>> = if exhaustive {
        (0..codeword_count(code))
            .map(|idx| message_from_index(code, idx))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        (0..options.random_trials)
            .map(|_| (0..code.k()).map(|_| f.el(rng.gen_range(0..q))).collect())
            .collect()
    };
    let mut attempts = 0;
    let mut failures = 0;
    let mut first_failure = None;
    for msg in &messages {
        let word = code.encode(msg);
        for i in 0..code.n() {
            for set in 1..=2 {
                attempts += 1;
                let pattern = ErasurePattern {
                    received: word.clone(),
                    erased: i,
                    set,
                };
                if repair(code, &pattern, false).ok() != Some(word[i]) {
                    failures += 1;
                    first_failure.get_or_insert((i, set));
                }
            }
        }
    }
    RepairSummary {
        seed: options.seed,
        exhaustive,
        codewords: messages.len(),
        attempts,
        failures,
        first_failure,
    }
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs every check. Errors only when `exact_distance` is set and the code
/// is beyond the enumeration cap.
pub fn verify(code: &LrcCode, options: &VerifyOptions) -> Result<VerifyReport> {
    let t0 = Instant::now();
    let locality = verify_definition1(code);
    let orbit_mismatches = orbit_mismatches(code);
    let locality_ms = ms_since(t0);

    let t1 = Instant::now();
    let repair = repair_round_trips(code, options);
    let repair_ms = ms_since(t1);

    let t2 = Instant::now();
    let distance = match brute_force_distance(code, options.enum_cap) {
        Ok(value) => DistanceResult::Exact {
            value,
            d_designed: code.params.d_designed,
        },
        Err(Error::TooLarge { count, cap }) if !options.exact_distance => DistanceResult::Skipped {
            codewords: count.to_string(),
            cap: cap.to_string(),
        },
        Err(e) => return Err(e),
    };
    let distance_ms = ms_since(t2);

    let mut report = VerifyReport {
        n: code.n(),
        k: code.k(),
        locality,
        orbit_mismatches,
        repair,
        distance,
        timings: options.timings.then_some(Timings {
            locality_ms,
            repair_ms,
            distance_ms,
        }),
        passed: false,
    };
    report.passed = report.first_failure().is_none();
    Ok(report)
}

//! Code construction: two invariant-structured function spaces, their
//! evaluation images on the tower places, and the intersection of those
//! images.
//!
//! Every spanning function of `V_j` has the form `F * w^l` with `F` constant
//! on the orbits of `H_j` and `l <= r_j - 1`, so on each orbit a codeword is a
//! polynomial of degree `< r_j` in the (pairwise distinct) values of `w`.
//! All spanning functions lie in `L(D)` for one effective divisor `D` with
//! `deg D <= n - d`, which bounds the number of zeros of any nonzero codeword.
//! Because evaluation is injective on `L(D)` when `deg D < n`, intersecting
//! the evaluation images is the same as intersecting the function spaces.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::group::{combine, GroupKind, ProductStructure, RecoveryGroup};
use crate::linalg::{rowspace_intersection, Matrix};
use crate::tower::{place_index, GFactor, MonomialFunction, Place, TowerSpec, Variant};

/// A spanning set of invariant-structured monomials under a pole budget.
#[derive(Debug, Clone)]
pub struct FunctionSpace {
    pub functions: Vec<MonomialFunction>,
    pub budget: u64,
    /// Per-generator caps on effective degree, when the generators do not
    /// share a single pole.
    pub caps: Option<Vec<u64>>,
    pub w_index: usize,
    pub kind: GroupKind,
    pub group_order: usize,
}

impl FunctionSpace {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

/// How much each generator is scaled by a multiplicative group element
/// (as an exponent of the scalar).
fn scaling_weights(spec: &TowerSpec) -> Vec<u32> {
    match spec.variant() {
        Variant::Gs96 => vec![1; spec.m()],
        Variant::Gs95 => {
            let mut w = vec![0; spec.m()];
            w[0] = 1;
            w
        }
    }
}

/// All vectors `e` with `e[i] <= bounds[i]`.
fn boxes(bounds: &[u64]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b as u32).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Spanning set for `V` structured by `group` with every function's pole
/// degree at most `budget` and, when `caps` is given, effective degree of
/// generator `i` at most `caps[i]`.
pub fn spanning_set(
    spec: &TowerSpec,
    group: &RecoveryGroup,
    budget: u64,
    caps: Option<&[u64]>,
) -> FunctionSpace {
    let f = spec.field();
    let m = spec.m();
    let weights = spec.generator_pole_degrees();
    let bounds: Vec<u64> = (0..m)
        .map(|i| {
            let by_budget = budget / weights[i];
            caps.map_or(by_budget, |c| c[i].min(by_budget))
        })
        .collect();
    let wi = group.w_index();
    let order = group.order();
    let max_l = order as u32 - 2;
    let mut out: Vec<MonomialFunction> = Vec::new();

    match group.kind() {
        GroupKind::Additive => {
            let g = group.orbit_polynomial_arc(f).unwrap();
            let gdeg = order as u64;
            let mut others = bounds.clone();
            others[wi] = 0;
            for e in boxes(&others) {
                for j in 0..=(bounds[wi] / gdeg) as u32 {
                    for l in 0..=max_l {
                        if j as u64 * gdeg + l as u64 > bounds[wi] {
                            continue;
                        }
                        out.push(MonomialFunction {
                            exponents: e.clone(),
                            g_factor: (j > 0).then(|| GFactor {
                                poly: g.clone(),
                                power: j,
                            }),
                            w_index: wi,
                            w_power: l,
                        });
                    }
                }
            }
        }
        GroupKind::Multiplicative => {
            let sw = scaling_weights(spec);
            let u = order as u64;
            for e in boxes(&bounds) {
                let twist: u64 = e.iter().zip(&sw).map(|(&x, &s)| x as u64 * s as u64).sum();
                let l = (twist % u) as u32;
                if l > max_l || e[wi] < l {
                    continue;
                }
                let mut inv = e.clone();
                inv[wi] -= l;
                out.push(MonomialFunction {
                    exponents: inv,
                    g_factor: None,
                    w_index: wi,
                    w_power: l,
                });
            }
        }
    }

    out.retain(|mono| mono.pole_degree(spec) <= budget);
    out.sort_by_key(|mono| {
        (
            mono.pole_degree(spec),
            mono.effective_degrees(),
            mono.g_factor.as_ref().map_or(0, |g| g.power),
            mono.w_power,
        )
    });
    out.dedup();

    FunctionSpace {
        functions: out,
        budget,
        caps: caps.map(|c| c.to_vec()),
        w_index: wi,
        kind: group.kind(),
        group_order: order,
    }
}

/// One row per spanning function, one column per place.
pub fn evaluation_matrix(spec: &TowerSpec, space: &FunctionSpace, places: &[Place]) -> Matrix {
    let f = spec.field();
    let rows = space
        .functions
        .iter()
        .map(|mono| places.iter().map(|p| mono.evaluate(f, p)).collect())
        .collect();
    Matrix::from_rows(places.len(), rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d_designed: usize,
    pub r1: usize,
    pub r2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoverySets {
    pub coord: usize,
    pub set1: Vec<usize>,
    pub set2: Vec<usize>,
}

impl RecoverySets {
    pub fn set(&self, j: usize) -> &[usize] {
        match j {
            1 => &self.set1,
            2 => &self.set2,
            _ => panic!("recovery set index must be 1 or 2"),
        }
    }
}

/// Dimensions recorded while building a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionInfo {
    pub budget: u64,
    pub caps: Option<Vec<u64>>,
    pub spanning_sizes: (usize, usize),
    pub dim_v1: usize,
    pub dim_v2: usize,
    pub dim_sum: usize,
    pub structure: ProductStructure,
}

#[derive(Debug, Clone)]
pub struct LrcCode {
    pub spec: TowerSpec,
    pub groups: [RecoveryGroup; 2],
    pub places: Vec<Place>,
    pub generator: Matrix,
    pub recovery_sets: Vec<RecoverySets>,
    pub params: CodeParams,
    pub construction: Option<ConstructionInfo>,
}

impl LrcCode {
    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn group(&self, j: usize) -> &RecoveryGroup {
        &self.groups[j - 1]
    }

    pub fn locality(&self, j: usize) -> usize {
        match j {
            1 => self.params.r1,
            _ => self.params.r2,
        }
    }

    /// `message * G`.
    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        self.generator.left_mul(self.spec.field(), message)
    }

    /// The w-value of place `coord` for recovery set `j`.
    pub fn w_value(&self, coord: usize, j: usize) -> FieldElement {
        self.places[coord].coords[self.group(j).w_index()]
    }
}

#[derive(Debug, Clone, Default)]
pub struct ConstructOptions {
    /// Explicit per-generator degree caps for towers whose generators have
    /// different poles. When absent, every split of the budget is tried and
    /// the one with the largest dimension wins.
    pub caps: Option<Vec<u64>>,
}

/// Intersection data for one choice of caps.
struct Assembled {
    generator: Matrix,
    spanning_sizes: (usize, usize),
    dim_v1: usize,
    dim_v2: usize,
    dim_sum: usize,
}

fn assemble(
    spec: &TowerSpec,
    h1: &RecoveryGroup,
    h2: &RecoveryGroup,
    places: &[Place],
    budget: u64,
    caps: Option<&[u64]>,
) -> Assembled {
    let f = spec.field();
    let v1 = spanning_set(spec, h1, budget, caps);
    let v2 = spanning_set(spec, h2, budget, caps);
    let m1 = evaluation_matrix(spec, &v1, places);
    let m2 = evaluation_matrix(spec, &v2, places);
    let generator = rowspace_intersection(f, &m1, &m2);
    Assembled {
        spanning_sizes: (v1.len(), v2.len()),
        dim_v1: m1.rank(f),
        dim_v2: m2.rank(f),
        dim_sum: m1.vstack(&m2).rank(f),
        generator,
    }
}

/// Compositions of `total` into `parts` non-negative parts, lexicographic.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Orbit of each place under `group` as place indices, identity excluded.
pub fn orbit_indices(
    spec: &TowerSpec,
    group: &RecoveryGroup,
    places: &[Place],
    index: &HashMap<Vec<FieldElement>, usize>,
) -> Vec<Vec<usize>> {
    places
        .iter()
        .map(|p| {
            group
                .elements()
                .iter()
                .filter(|s| !s.is_identity())
                .map(|s| index[&s.apply(spec, &p.coords)])
                .collect()
        })
        .collect()
}

pub fn construct_lrc(
    spec: &TowerSpec,
    h1: &RecoveryGroup,
    h2: &RecoveryGroup,
    d_target: usize,
    options: &ConstructOptions,
) -> Result<LrcCode> {
    let f = spec.field();
    let structure = combine(spec, h1, h2)?.structure;
    let places = spec.enumerate_places();
    let n = places.len();
    if d_target == 0 || d_target > n {
        return Err(Error::InvalidDistance { d: d_target, n });
    }
    let budget = (n - d_target) as u64;
    let weights = spec.generator_pole_degrees();
    for h in [h1, h2] {
        let needed = (h.locality() as u64 - 1) * weights[h.w_index()];
        if budget < needed {
            return Err(Error::BudgetTooSmall { budget, needed });
        }
    }

    let (assembled, caps) = if let Some(caps) = &options.caps {
        if caps.len() != spec.m() {
            return Err(Error::InvalidQuery(format!(
                "expected {} degree caps, got {}",
                spec.m(),
                caps.len()
            )));
        }
        let used: u64 = caps.iter().zip(&weights).map(|(c, w)| c * w).sum();
        if used > budget {
            return Err(Error::BudgetTooSmall {
                budget,
                needed: used,
            });
        }
        (assemble(spec, h1, h2, &places, budget, Some(caps)), Some(caps.clone()))
    } else if spec.single_pole() {
        (assemble(spec, h1, h2, &places, budget, None), None)
    } else {
        // GS96 generators all have pole degree l^(m-1).
        let units = budget / weights[0];
        let min_w = (h1.locality().max(h2.locality()) - 1) as u64;
        let mut best: Option<(Assembled, Vec<u64>)> = None;
        for caps in compositions(units, spec.m()) {
            if caps[spec.m() - 1] < min_w {
                continue;
            }
            let a = assemble(spec, h1, h2, &places, budget, Some(&caps));
            if best
                .as_ref()
                .is_none_or(|(b, _)| a.generator.rows() > b.generator.rows())
            {
                best = Some((a, caps));
            }
        }
        let (a, caps) = best.expect("budget covers the repair variable");
        (a, Some(caps))
    };

    let k = assembled.generator.rows();
    if k == 0 {
        return Err(Error::EmptyCode);
    }

    let index = place_index(&places);
    let o1 = orbit_indices(spec, h1, &places, &index);
    let o2 = orbit_indices(spec, h2, &places, &index);
    let recovery_sets: Vec<RecoverySets> = o1
        .into_iter()
        .zip(o2)
        .enumerate()
        .map(|(coord, (set1, set2))| RecoverySets { coord, set1, set2 })
        .collect();
    for rs in &recovery_sets {
        assert!(
            rs.set1.iter().all(|x| !rs.set2.contains(x) && *x != rs.coord),
            "recovery sets of coordinate {} overlap",
            rs.coord
        );
    }

    let info = ConstructionInfo {
        budget,
        caps,
        spanning_sizes: assembled.spanning_sizes,
        dim_v1: assembled.dim_v1,
        dim_v2: assembled.dim_v2,
        dim_sum: assembled.dim_sum,
        structure,
    };
    let code = LrcCode {
        spec: spec.clone(),
        groups: [h1.clone(), h2.clone()],
        places,
        generator: assembled.generator,
        recovery_sets,
        params: CodeParams {
            n,
            k,
            d_designed: d_target,
            r1: h1.locality(),
            r2: h2.locality(),
        },
        construction: Some(info),
    };
    debug_assert_eq!(code.generator.rank(f), k);
    Ok(code)
}

//! The two Garcia–Stichtenoth towers over GF(l^2) at small depth.
//!
//! * `Gs96`: `T_1 = F_q(y_1)`, `y_i^l + y_i = y_{i-1}^l / (y_{i-1}^{l-1} + 1)`.
//!   Rational places over `y_1 = a` with `a^l + a != 0` split completely and
//!   are identified with coordinate tuples `(a_1, ..., a_m)`.
//! * `Gs95`: `T_1 = F_q(x_1)`, `z_2^l + z_2 = x_1^(l+1)` (the Hermitian function
//!   field at `m = 2`). Places over `x_1 = a != 0` are stored as `(x_1, z_2)`.
//!
//! Functions are modelled as monomials in the tower generators, optionally
//! carrying a factor `g(w)^j` for an additive polynomial `g`. Evaluation
//! places never meet a pole of a generator, so evaluation is total.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Gs96,
    Gs95,
}

impl Variant {
    pub fn max_depth(self) -> usize {
        match self {
            Variant::Gs96 => 3,
            Variant::Gs95 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Gs96 => "gs96",
            Variant::Gs95 => "gs95",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gs96" => Ok(Variant::Gs96),
            "gs95" => Ok(Variant::Gs95),
            other => Err(Error::Descriptor(format!("unknown tower variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    variant: Variant,
    field: Arc<FiniteField>,
    m: usize,
    ell: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Place {
    pub coords: Vec<FieldElement>,
    pub index: usize,
}

/// Why a coordinate tuple is not in the evaluation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaceDefect {
    WrongLength { expected: usize, got: usize },
    OutOfRange(u32),
    /// GS96: `a_1^l + a_1 = 0`, the place lies under a pole of the tower.
    DegenerateBase,
    /// GS95: `x_1 = 0`.
    ZeroBase,
    /// The recursion equation fails at this level (1-based).
    Recursion(usize),
}

impl fmt::Display for PlaceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceDefect::WrongLength { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            PlaceDefect::OutOfRange(v) => write!(f, "coordinate {v} is not a field element"),
            PlaceDefect::DegenerateBase => write!(f, "a_1^l + a_1 = 0"),
            PlaceDefect::ZeroBase => write!(f, "x_1 = 0"),
            PlaceDefect::Recursion(i) => write!(f, "recursion equation fails at level {i}"),
        }
    }
}

impl TowerSpec {
    pub fn new(variant: Variant, field: Arc<FiniteField>, m: usize) -> Result<Self> {
        let ell = field.ell()?;
        if m == 0 || m > variant.max_depth() {
            return Err(Error::UnsupportedDepth {
                variant: variant.name(),
                m,
                max: variant.max_depth(),
            });
        }
        Ok(TowerSpec {
            variant,
            field,
            m,
            ell,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FiniteField> {
        Arc::clone(&self.field)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    /// Closed-form number of places: `(q - l) l^(m-1)` or `(q - 1) l^(m-1)`.
    pub fn expected_place_count(&self) -> usize {
        let spread = (self.ell as usize).pow(self.m as u32 - 1);
        match self.variant {
            Variant::Gs96 => (self.q() - self.ell) as usize * spread,
            Variant::Gs95 => (self.q() - 1) as usize * spread,
        }
    }

    /// Right-hand side of the recursion for level `i + 1` given the level-`i`
    /// coordinate, or `None` if the denominator vanishes.
    fn recursion_rhs(&self, prev: FieldElement, prev_x: FieldElement) -> Option<FieldElement> {
        let f = self.field();
        let l = self.ell as u64;
        match self.variant {
            Variant::Gs96 => {
                let den = f.add(f.pow(prev, l - 1), FieldElement::ONE);
                f.div(f.pow(prev, l), den)
            }
            Variant::Gs95 => Some(f.pow(prev_x, l + 1)),
        }
    }

    /// All rational places of the evaluation set, in lexicographic order of
    /// their coordinate encodings.
    pub fn enumerate_places(&self) -> Vec<Place> {
        let f = self.field();
        let mut by_trace: HashMap<FieldElement, Vec<FieldElement>> = HashMap::new();
        for x in f.elements() {
            by_trace.entry(f.trace(x).unwrap()).or_default().push(x);
        }
        let base: Vec<FieldElement> = match self.variant {
            Variant::Gs96 => f
                .elements()
                .filter(|&a| !f.trace(a).unwrap().is_zero())
                .collect(),
            Variant::Gs95 => f.elements().skip(1).collect(),
        };
        let mut out = Vec::with_capacity(self.expected_place_count());
        let mut stack = Vec::with_capacity(self.m);
        for a in base {
            stack.push(a);
            self.extend(&by_trace, &mut stack, &mut out);
            stack.pop();
        }
        for (i, p) in out.iter_mut().enumerate() {
            p.index = i;
        }
        out
    }

    fn extend(
        &self,
        by_trace: &HashMap<FieldElement, Vec<FieldElement>>,
        stack: &mut Vec<FieldElement>,
        out: &mut Vec<Place>,
    ) {
        if stack.len() == self.m {
            out.push(Place {
                coords: stack.clone(),
                index: 0,
            });
            return;
        }
        let prev = *stack.last().unwrap();
        let Some(rhs) = self.recursion_rhs(prev, stack[0]) else {
            return;
        };
        if let Some(sols) = by_trace.get(&rhs) {
            for &s in sols {
                stack.push(s);
                self.extend(by_trace, stack, out);
                stack.pop();
            }
        }
    }

    /// Membership test for the evaluation set.
    pub fn check_place(&self, coords: &[FieldElement]) -> std::result::Result<(), PlaceDefect> {
        let f = self.field();
        if coords.len() != self.m {
            return Err(PlaceDefect::WrongLength {
                expected: self.m,
                got: coords.len(),
            });
        }
        if let Some(c) = coords.iter().find(|c| c.value() >= f.order()) {
            return Err(PlaceDefect::OutOfRange(c.value()));
        }
        match self.variant {
            Variant::Gs96 if f.trace(coords[0]).unwrap().is_zero() => {
                return Err(PlaceDefect::DegenerateBase)
            }
            Variant::Gs95 if coords[0].is_zero() => return Err(PlaceDefect::ZeroBase),
            _ => {}
        }
        for i in 1..self.m {
            let rhs = self
                .recursion_rhs(coords[i - 1], coords[0])
                .ok_or(PlaceDefect::Recursion(i + 1))?;
            if f.trace(coords[i]).unwrap() != rhs {
                return Err(PlaceDefect::Recursion(i + 1));
            }
        }
        Ok(())
    }

    /// Genus of the function field at this level. GS96 uses the closed form
    /// of the tower; GS95 is only supported up to the Hermitian level.
    pub fn genus(&self) -> u64 {
        let l = self.ell as u64;
        let m = self.m as u32;
        match self.variant {
            Variant::Gs96 if m % 2 == 0 => (l.pow(m / 2) - 1).pow(2),
            Variant::Gs96 => (l.pow((m + 1) / 2) - 1) * (l.pow((m - 1) / 2) - 1),
            Variant::Gs95 if m == 1 => 0,
            Variant::Gs95 => l * (l - 1) / 2,
        }
    }

    /// Degree of the pole divisor of each generator. For GS96 every
    /// generator has degree `l^(m-1)`; for the Hermitian level the single
    /// pole has orders `l` (x_1) and `l + 1` (z_2).
    pub fn generator_pole_degrees(&self) -> Vec<u64> {
        let l = self.ell as u64;
        match (self.variant, self.m) {
            (Variant::Gs96, m) => vec![l.pow(m as u32 - 1); m],
            (Variant::Gs95, 1) => vec![1],
            (Variant::Gs95, _) => vec![l, l + 1],
        }
    }

    /// Whether all generators share one pole, so that the pole divisor of
    /// any linear combination of monomials is bounded by the largest weighted
    /// degree among them.
    pub fn single_pole(&self) -> bool {
        match self.variant {
            Variant::Gs96 => self.m == 1,
            Variant::Gs95 => true,
        }
    }
}

/// Lookup from coordinate tuple to place index.
pub fn place_index(places: &[Place]) -> HashMap<Vec<FieldElement>, usize> {
    places
        .iter()
        .map(|p| (p.coords.clone(), p.index))
        .collect()
}

/// A factor `g(w)^power` kept unexpanded, `g` given low-degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFactor {
    pub poly: Arc<Vec<FieldElement>>,
    pub power: u32,
}

impl GFactor {
    pub fn degree(&self) -> u64 {
        (self.poly.len() as u64).saturating_sub(1)
    }
}

/// `prod_i gen_i^exponents[i] * g(gen_w)^j * gen_w^w_power`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialFunction {
    pub exponents: Vec<u32>,
    pub g_factor: Option<GFactor>,
    pub w_index: usize,
    pub w_power: u32,
}

impl MonomialFunction {
    pub fn constant(m: usize) -> Self {
        MonomialFunction {
            exponents: vec![0; m],
            g_factor: None,
            w_index: m - 1,
            w_power: 0,
        }
    }

    pub fn monomial(exponents: Vec<u32>) -> Self {
        let m = exponents.len();
        MonomialFunction {
            exponents,
            g_factor: None,
            w_index: m - 1,
            w_power: 0,
        }
    }

    /// Exponent of each generator after conceptually expanding `g` and `w`.
    pub fn effective_degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.exponents.iter().map(|&e| e as u64).collect();
        d[self.w_index] += self.w_power as u64;
        if let Some(g) = &self.g_factor {
            d[self.w_index] += g.power as u64 * g.degree();
        }
        d
    }

    pub fn is_constant(&self) -> bool {
        self.effective_degrees().iter().all(|&e| e == 0)
    }

    /// Upper bound on the degree of the pole divisor.
    pub fn pole_degree(&self, spec: &TowerSpec) -> u64 {
        self.effective_degrees()
            .iter()
            .zip(spec.generator_pole_degrees())
            .map(|(e, w)| e * w)
            .sum()
    }

    pub fn evaluate(&self, f: &FiniteField, place: &Place) -> FieldElement {
        self.evaluate_coords(f, &place.coords)
    }

    pub fn evaluate_coords(&self, f: &FiniteField, coords: &[FieldElement]) -> FieldElement {
        let mut acc = FieldElement::ONE;
        for (&a, &e) in coords.iter().zip(&self.exponents) {
            acc = f.mul(acc, f.pow(a, e as u64));
        }
        let w = coords[self.w_index];
        acc = f.mul(acc, f.pow(w, self.w_power as u64));
        if let Some(g) = &self.g_factor {
            acc = f.mul(acc, f.pow(eval_poly(f, &g.poly, w), g.power as u64));
        }
        acc
    }
}

/// Horner evaluation of a polynomial given low-degree first.
pub fn eval_poly(f: &FiniteField, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    coeffs
        .iter()
        .rev()
        .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::square_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(variant: Variant, ell: u32, m: usize) -> TowerSpec {
        TowerSpec::new(variant, Arc::new(square_field(ell).unwrap()), m).unwrap()
    }

    #[test]
    fn gs96_q9_m1_places() {
        let s = spec(Variant::Gs96, 3, 1);
        let places: Vec<u32> = s
            .enumerate_places()
            .iter()
            .map(|p| p.coords[0].value())
            .collect();
        // {1, 2, 1+t, 2+t, 1+2t, 2+2t} as encodings c0 + 3 c1
        assert_eq!(places, vec![1, 2, 4, 5, 7, 8]);
    }

    #[test]
    fn place_counts_match_closed_form() {
        for ell in [2u32, 3, 4, 5] {
            for m in 1..=3 {
                let s = spec(Variant::Gs96, ell, m);
                assert_eq!(s.enumerate_places().len(), s.expected_place_count());
            }
            for m in 1..=2 {
                let s = spec(Variant::Gs95, ell, m);
                assert_eq!(s.enumerate_places().len(), s.expected_place_count());
            }
        }
        assert_eq!(spec(Variant::Gs96, 3, 2).enumerate_places().len(), 18);
        assert_eq!(spec(Variant::Gs95, 5, 2).enumerate_places().len(), 120);
    }

    #[test]
    fn unsupported_depths() {
        let f = Arc::new(square_field(3).unwrap());
        assert!(matches!(
            TowerSpec::new(Variant::Gs96, f.clone(), 4),
            Err(Error::UnsupportedDepth { .. })
        ));
        assert!(matches!(
            TowerSpec::new(Variant::Gs95, f.clone(), 3),
            Err(Error::UnsupportedDepth { .. })
        ));
        assert!(TowerSpec::new(Variant::Gs96, f, 0).is_err());
    }

    #[test]
    fn gs96_coordinates_never_in_kernel() {
        for ell in [2u32, 3, 4] {
            let s = spec(Variant::Gs96, ell, 3);
            let f = s.field();
            for p in s.enumerate_places() {
                for &a in &p.coords {
                    assert!(!f.trace(a).unwrap().is_zero());
                    assert!(!a.is_zero());
                }
                assert_eq!(s.check_place(&p.coords), Ok(()));
            }
        }
    }

    #[test]
    fn check_place_examples() {
        let s2 = spec(Variant::Gs96, 3, 2);
        let f = s2.field();
        for other in f.elements() {
            assert_eq!(
                s2.check_place(&[f.el(3), other]),
                Err(PlaceDefect::DegenerateBase)
            );
        }
        let s1 = spec(Variant::Gs96, 3, 1);
        assert_eq!(s1.check_place(&[f.el(1)]), Ok(()));
        assert!(matches!(
            s1.check_place(&[f.el(1), f.el(1)]),
            Err(PlaceDefect::WrongLength { .. })
        ));
        let h = spec(Variant::Gs95, 5, 2);
        assert_eq!(h.check_place(&[FieldElement::ZERO, FieldElement::ZERO]), Err(PlaceDefect::ZeroBase));
        for p in h.enumerate_places() {
            assert_eq!(h.check_place(&p.coords), Ok(()));
        }
    }

    #[test]
    fn genus_table() {
        assert_eq!(spec(Variant::Gs96, 3, 2).genus(), 4);
        assert_eq!(spec(Variant::Gs96, 2, 3).genus(), 3);
        for ell in [2u32, 3, 4, 5] {
            assert_eq!(spec(Variant::Gs96, ell, 1).genus(), 0);
        }
        assert_eq!(spec(Variant::Gs95, 5, 2).genus(), 10);
    }

    #[test]
    fn pole_degree_examples() {
        let s1 = spec(Variant::Gs96, 3, 1);
        let g = GFactor {
            poly: Arc::new(vec![s1.field().el(0), s1.field().el(1), s1.field().el(0), s1.field().el(1)]),
            power: 1,
        };
        let f = MonomialFunction {
            exponents: vec![0],
            g_factor: Some(g),
            w_index: 0,
            w_power: 1,
        };
        assert_eq!(f.pole_degree(&s1), 4);
        let s2 = spec(Variant::Gs96, 3, 2);
        assert_eq!(MonomialFunction::monomial(vec![1, 1]).pole_degree(&s2), 6);
        let h = spec(Variant::Gs95, 5, 2);
        assert_eq!(MonomialFunction::monomial(vec![2, 1]).pole_degree(&h), 16);
    }

    #[test]
    fn evaluate_examples() {
        let s = spec(Variant::Gs96, 3, 2);
        let f = s.field();
        let places = s.enumerate_places();
        let p = places.iter().find(|p| p.coords[0] == f.el(4)).unwrap();
        assert_eq!(MonomialFunction::monomial(vec![1, 0]).evaluate(f, p), f.el(4));
        // g(T) = T^3 + T vanishes on the kernel element t
        let g = [f.el(0), f.el(1), f.el(0), f.el(1)];
        assert_eq!(eval_poly(f, &g, f.el(3)), FieldElement::ZERO);
        for p in &places {
            assert_eq!(MonomialFunction::constant(2).evaluate(f, p), FieldElement::ONE);
        }
    }

    // Zero counts of f - v never exceed the reported pole degree.
    #[test]
    fn zero_count_soundness() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let specs = [
            spec(Variant::Gs96, 2, 3),
            spec(Variant::Gs96, 3, 2),
            spec(Variant::Gs96, 3, 3),
            spec(Variant::Gs96, 4, 2),
            spec(Variant::Gs95, 4, 2),
            spec(Variant::Gs95, 5, 2),
        ];
        for s in &specs {
            let f = s.field();
            let places = s.enumerate_places();
            let mut checked = 0;
            while checked < 20 {
                let e: Vec<u32> = (0..s.m()).map(|_| rng.gen_range(0..4)).collect();
                let mono = MonomialFunction::monomial(e);
                if mono.is_constant() {
                    continue;
                }
                let v = f.el(rng.gen_range(0..f.order()));
                let zeros = places
                    .iter()
                    .filter(|p| mono.evaluate(f, p) == v)
                    .count() as u64;
                assert!(zeros <= mono.pole_degree(s), "{mono:?} v={v}");
                checked += 1;
            }
        }
    }
}

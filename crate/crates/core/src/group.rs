//! Recovery groups: small subgroups of tower automorphisms whose orbits on the
//! evaluation places are the recovery sets.
//!
//! Elements are pairs `(scale, shift)`:
//!
//! * GS96: `y_i -> scale * y_i` for `i < m` and `y_m -> scale * y_m + shift`,
//!   with `scale` in `GF(l)^*` and `shift^l + shift = 0`.
//! * GS95: `x_1 -> scale * x_1`, `z_m -> z_m + shift`, with
//!   `scale^(l+1) = 1` and `shift^l + shift = 0`.
//!
//! Composition is composition of field automorphisms. On places the element
//! acts by the coordinate map `(a_i) -> (scale * a_i, ..., scale * a_m + shift)`
//! (GS96) or `(scale * a_1, a_2 + shift)` (GS95); only orbits as sets matter.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gcd, FieldElement, FiniteField};
use crate::tower::{Place, TowerSpec, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub scale: FieldElement,
    pub shift: FieldElement,
}

impl Automorphism {
    pub const IDENTITY: Automorphism = Automorphism {
        scale: FieldElement::ONE,
        shift: FieldElement::ZERO,
    };

    pub fn new(scale: FieldElement, shift: FieldElement) -> Self {
        Automorphism { scale, shift }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// `self ∘ other` as field automorphisms (`other` applied first).
    pub fn compose(&self, other: &Automorphism, variant: Variant, f: &FiniteField) -> Automorphism {
        match variant {
            // self(other(y)) = other.scale * self(y) + other.shift
            Variant::Gs96 => Automorphism {
                scale: f.mul(self.scale, other.scale),
                shift: f.add(f.mul(other.scale, self.shift), other.shift),
            },
            Variant::Gs95 => Automorphism {
                scale: f.mul(self.scale, other.scale),
                shift: f.add(self.shift, other.shift),
            },
        }
    }

    pub fn inverse(&self, variant: Variant, f: &FiniteField) -> Automorphism {
        let ci = f.inv(self.scale).expect("scale is a unit");
        match variant {
            Variant::Gs96 => Automorphism {
                scale: ci,
                shift: f.neg(f.mul(self.shift, ci)),
            },
            Variant::Gs95 => Automorphism {
                scale: ci,
                shift: f.neg(self.shift),
            },
        }
    }

    /// `tau⁻¹ ∘ self ∘ tau`.
    pub fn conjugate_by(&self, tau: &Automorphism, variant: Variant, f: &FiniteField) -> Automorphism {
        tau.inverse(variant, f)
            .compose(&self.compose(tau, variant, f), variant, f)
    }

    /// Image of a place under the coordinate action.
    pub fn apply(&self, spec: &TowerSpec, coords: &[FieldElement]) -> Vec<FieldElement> {
        let f = spec.field();
        let m = coords.len();
        let mut out = coords.to_vec();
        match spec.variant() {
            Variant::Gs96 => {
                for a in out.iter_mut() {
                    *a = f.mul(self.scale, *a);
                }
                out[m - 1] = f.add(out[m - 1], self.shift);
            }
            Variant::Gs95 => {
                out[0] = f.mul(self.scale, out[0]);
                if m > 1 {
                    out[m - 1] = f.add(out[m - 1], self.shift);
                }
            }
        }
        out
    }

    fn is_valid(&self, spec: &TowerSpec) -> bool {
        let f = spec.field();
        let l = spec.ell() as u64;
        let shift_ok = f.trace(self.shift).unwrap().is_zero();
        let scale_ok = match spec.variant() {
            Variant::Gs96 => !self.scale.is_zero() && f.pow(self.scale, l) == self.scale,
            Variant::Gs95 => f.pow(self.scale, l + 1) == FieldElement::ONE,
        };
        let depth_ok = !(spec.variant() == Variant::Gs95 && spec.m() == 1 && !self.shift.is_zero());
        shift_ok && scale_ok && depth_ok
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Additive,
    Multiplicative,
}

/// How to build a recovery group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupParams {
    /// The whole Artin–Schreier kernel as shifts.
    AdditiveKernel,
    /// Shifts spanned by `generators` over `GF(p^h)`, where `h` is the least
    /// `t >= 1` with `scalar_order | p^t - 1`. With `scalar_order = 1` this is
    /// the `GF(p)`-span.
    Additive {
        generators: Vec<FieldElement>,
        scalar_order: u32,
    },
    /// The cyclic scalar subgroup of the given order: inside `GF(l)^*` for
    /// GS96, inside the norm-one group for GS95.
    Multiplicative { order: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveryGroup {
    kind: GroupKind,
    variant: Variant,
    elements: Vec<Automorphism>,
    w_index: usize,
}

/// JSON form: `{"kind":"additive","shifts":[...]}` or
/// `{"kind":"multiplicative","scalars":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Additive { shifts: Vec<u32> },
    Multiplicative { scalars: Vec<u32> },
}

impl RecoveryGroup {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Locality `r = |H| - 1`.
    pub fn locality(&self) -> usize {
        self.elements.len() - 1
    }

    /// 0-based coordinate of the repair variable `w` in a place tuple.
    pub fn w_index(&self) -> usize {
        self.w_index
    }

    pub fn shifts(&self) -> Vec<FieldElement> {
        self.elements.iter().map(|e| e.shift).collect()
    }

    pub fn scalars(&self) -> Vec<FieldElement> {
        self.elements.iter().map(|e| e.scale).collect()
    }

    /// `g(T) = prod_{a in W} (T - a)` for an additive group, low-degree
    /// first. `g` is constant on every orbit.
    pub fn orbit_polynomial(&self, f: &FiniteField) -> Option<Vec<FieldElement>> {
        if self.kind != GroupKind::Additive {
            return None;
        }
        let mut poly = vec![FieldElement::ONE];
        for a in self.shifts() {
            let na = f.neg(a);
            let mut next = vec![FieldElement::ZERO; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.add(next[i], f.mul(c, na));
            }
            poly = next;
        }
        Some(poly)
    }

    pub fn orbit_polynomial_arc(&self, f: &FiniteField) -> Option<Arc<Vec<FieldElement>>> {
        self.orbit_polynomial(f).map(Arc::new)
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        match self.kind {
            GroupKind::Additive => GroupDescriptor::Additive {
                shifts: self.shifts().iter().map(|x| x.value()).collect(),
            },
            GroupKind::Multiplicative => GroupDescriptor::Multiplicative {
                scalars: self.scalars().iter().map(|x| x.value()).collect(),
            },
        }
    }

    /// Rebuilds a group from its descriptor, validating closure and element
    /// constraints.
    pub fn from_descriptor(spec: &TowerSpec, d: &GroupDescriptor) -> Result<Self> {
        let f = spec.field();
        let (kind, elements) = match d {
            GroupDescriptor::Additive { shifts } => (
                GroupKind::Additive,
                shifts
                    .iter()
                    .map(|&s| Ok(Automorphism::new(FieldElement::ONE, f.element(s)?)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            GroupDescriptor::Multiplicative { scalars } => (
                GroupKind::Multiplicative,
                scalars
                    .iter()
                    .map(|&s| Ok(Automorphism::new(f.element(s)?, FieldElement::ZERO)))
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Self::from_elements(spec, kind, elements)
    }

    fn from_elements(spec: &TowerSpec, kind: GroupKind, mut elements: Vec<Automorphism>) -> Result<Self> {
        let f = spec.field();
        let v = spec.variant();
        elements.sort();
        elements.dedup();
        if elements.len() < 2 {
            return Err(Error::IllegalOrder("a recovery group needs order at least 2".into()));
        }
        if let Some(bad) = elements.iter().find(|e| !e.is_valid(spec)) {
            return Err(Error::NotASubgroup(format!(
                "element (scale {}, shift {}) is not an automorphism of this tower",
                bad.scale, bad.shift
            )));
        }
        let set: HashSet<Automorphism> = elements.iter().copied().collect();
        for a in &elements {
            for b in &elements {
                if !set.contains(&a.compose(b, v, f)) {
                    return Err(Error::NotASubgroup("not closed under composition".into()));
                }
            }
        }
        let w_index = match (v, kind) {
            (Variant::Gs95, GroupKind::Multiplicative) => 0,
            _ => spec.m() - 1,
        };
        Ok(RecoveryGroup {
            kind,
            variant: v,
            elements,
            w_index,
        })
    }
}

pub fn build_recovery_group(spec: &TowerSpec, params: &GroupParams) -> Result<RecoveryGroup> {
    let f = spec.field();
    let l = spec.ell();
    let p = f.characteristic();
    if spec.variant() == Variant::Gs95
        && spec.m() == 1
        && !matches!(params, GroupParams::Multiplicative { .. })
    {
        return Err(Error::VariantMismatch(
            "gs95 additive groups act on z_2 and need m = 2".into(),
        ));
    }
    match params {
        GroupParams::AdditiveKernel => {
            let elements = f
                .artin_schreier_kernel()?
                .into_iter()
                .map(|a| Automorphism::new(FieldElement::ONE, a))
                .collect();
            RecoveryGroup::from_elements(spec, GroupKind::Additive, elements)
        }
        GroupParams::Additive {
            generators,
            scalar_order,
        } => {
            let u = *scalar_order as u64;
            if u == 0 || (l as u64 - 1) % u != 0 {
                return Err(Error::IllegalOrder(format!(
                    "scalar order {u} must divide l - 1 = {}",
                    l - 1
                )));
            }
            for &g in generators {
                if g.value() >= f.order() || !f.trace(g)?.is_zero() {
                    return Err(Error::NotASubgroup(format!(
                        "generator {g} is not in the kernel of x^l + x"
                    )));
                }
            }
            let h = (1..).find(|&t| ((p as u64).pow(t) - 1) % u == 0).unwrap();
            let ph = (p as u64).pow(h);
            let scalars: Vec<FieldElement> = f.elements().filter(|&s| f.pow(s, ph) == s).collect();
            let mut span: Vec<FieldElement> = vec![FieldElement::ZERO];
            for &g in generators {
                if span.contains(&g) {
                    continue;
                }
                let mut next = Vec::with_capacity(span.len() * scalars.len());
                for &x in &span {
                    for &s in &scalars {
                        next.push(f.add(x, f.mul(s, g)));
                    }
                }
                next.sort();
                next.dedup();
                span = next;
            }
            let elements = span
                .into_iter()
                .map(|a| Automorphism::new(FieldElement::ONE, a))
                .collect();
            RecoveryGroup::from_elements(spec, GroupKind::Additive, elements)
        }
        GroupParams::Multiplicative { order } => {
            let order = *order as u64;
            let (pool, bound, label) = match spec.variant() {
                Variant::Gs96 => (f.subfield_units()?, l as u64 - 1, "l - 1"),
                Variant::Gs95 => (f.norm_one_group()?, l as u64 + 1, "l + 1"),
            };
            if order < 2 || bound % order != 0 {
                return Err(Error::IllegalOrder(format!(
                    "order {order} must be at least 2 and divide {label} = {bound}"
                )));
            }
            let elements = pool
                .into_iter()
                .filter(|&c| f.pow(c, order) == FieldElement::ONE)
                .map(|c| Automorphism::new(c, FieldElement::ZERO))
                .collect();
            RecoveryGroup::from_elements(spec, GroupKind::Multiplicative, elements)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductStructure {
    /// Every element of one factor commutes with every element of the other.
    Direct,
    /// `normal` (1 or 2) is normalized by the other factor.
    SemiDirect { normal: u8 },
}

#[derive(Debug, Clone)]
pub struct CombinedGroup {
    pub elements: Vec<Automorphism>,
    pub structure: ProductStructure,
}

impl CombinedGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// `G = H1 H2`, checking that the factors meet trivially and that one of
/// them is normalized by the other.
pub fn combine(spec: &TowerSpec, h1: &RecoveryGroup, h2: &RecoveryGroup) -> Result<CombinedGroup> {
    let f = spec.field();
    let v = spec.variant();
    if h1.variant != v || h2.variant != v {
        return Err(Error::VariantMismatch("groups built for another tower".into()));
    }
    let s1: HashSet<Automorphism> = h1.elements.iter().copied().collect();
    let s2: HashSet<Automorphism> = h2.elements.iter().copied().collect();
    if s1.intersection(&s2).any(|e| !e.is_identity()) {
        return Err(Error::NontrivialIntersection);
    }
    let mut commute = true;
    let mut h1_normal = true;
    let mut h2_normal = true;
    for a in &h1.elements {
        for b in &h2.elements {
            commute &= a.compose(b, v, f) == b.compose(a, v, f);
            h1_normal &= s1.contains(&a.conjugate_by(b, v, f));
            h2_normal &= s2.contains(&b.conjugate_by(a, v, f));
        }
    }
    let structure = if commute {
        ProductStructure::Direct
    } else if h1_normal {
        ProductStructure::SemiDirect { normal: 1 }
    } else if h2_normal {
        ProductStructure::SemiDirect { normal: 2 }
    } else {
        return Err(Error::NotNormalized(
            "neither factor is normalized by the other; for an additive W and scalars H, W must be closed under multiplication by H".into(),
        ));
    };
    let mut elements: Vec<Automorphism> = h1
        .elements
        .iter()
        .flat_map(|a| h2.elements.iter().map(move |b| (a, b)))
        .map(|(a, b)| a.compose(b, v, f))
        .collect();
    elements.sort();
    elements.dedup();
    debug_assert_eq!(elements.len(), h1.order() * h2.order());
    Ok(CombinedGroup {
        elements,
        structure,
    })
}

pub fn apply(spec: &TowerSpec, sigma: &Automorphism, place: &Place) -> Vec<FieldElement> {
    sigma.apply(spec, &place.coords)
}

/// Images of `place` under the elements of `group`, in element order (the
/// identity comes first).
pub fn orbit(spec: &TowerSpec, group: &RecoveryGroup, place: &Place) -> Vec<Vec<FieldElement>> {
    group
        .elements
        .iter()
        .map(|s| s.apply(spec, &place.coords))
        .collect()
}

/// Whether the two orbits of `place` meet only in `place` itself.
pub fn orbits_disjoint(spec: &TowerSpec, h1: &RecoveryGroup, h2: &RecoveryGroup, place: &Place) -> bool {
    let o1: HashSet<Vec<FieldElement>> = orbit(spec, h1, place).into_iter().collect();
    let shared = orbit(spec, h2, place)
        .into_iter()
        .filter(|x| o1.contains(x))
        .count();
    shared == 1
}

/// Number of distinct images of `place`, which equals `|H|` when the action
/// is free.
pub fn orbit_size(spec: &TowerSpec, elements: &[Automorphism], place: &Place) -> usize {
    elements
        .iter()
        .map(|s| s.apply(spec, &place.coords))
        .collect::<HashSet<_>>()
        .len()
}

/// Whether two orders are coprime, as required for pairs of scalar groups.
pub fn coprime_orders(h1: &RecoveryGroup, h2: &RecoveryGroup) -> bool {
    gcd(h1.order() as u64, h2.order() as u64) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::square_field;

    fn spec(variant: Variant, ell: u32, m: usize) -> TowerSpec {
        TowerSpec::new(variant, Arc::new(square_field(ell).unwrap()), m).unwrap()
    }

    #[test]
    fn apply_example() {
        let s = spec(Variant::Gs96, 3, 2);
        let f = s.field();
        let sigma = Automorphism::new(f.el(2), f.el(3));
        for p in s.enumerate_places().iter().filter(|p| p.coords[0] == f.el(1)) {
            let img = apply(&s, &sigma, p);
            assert_eq!(img[0], f.el(2));
            assert_eq!(img[1], f.add(f.mul(f.el(2), p.coords[1]), f.el(3)));
            assert_eq!(s.check_place(&img), Ok(()));
        }
        let p = &s.enumerate_places()[0];
        assert_eq!(apply(&s, &Automorphism::IDENTITY, p), p.coords);
    }

    #[test]
    fn build_examples() {
        let s = spec(Variant::Gs96, 3, 2);
        let f = s.field();
        let h1 = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        assert_eq!(h1.order(), 3);
        assert_eq!(h1.locality(), 2);
        assert_eq!(h1.w_index(), 1);
        let h2 = build_recovery_group(&s, &GroupParams::Multiplicative { order: 2 }).unwrap();
        assert_eq!(h2.scalars(), vec![f.el(1), f.el(2)]);
        assert!(matches!(
            build_recovery_group(&s, &GroupParams::Multiplicative { order: 3 }),
            Err(Error::IllegalOrder(_))
        ));
        let h = spec(Variant::Gs95, 5, 2);
        let g3 = build_recovery_group(&h, &GroupParams::Multiplicative { order: 3 }).unwrap();
        assert_eq!(g3.order(), 3);
        assert_eq!(g3.w_index(), 0);
        let n1 = h.field().norm_one_group().unwrap();
        assert!(g3.scalars().iter().all(|c| n1.contains(c)));
    }

    #[test]
    fn additive_generators_must_lie_in_kernel() {
        let s = spec(Variant::Gs96, 3, 1);
        let f = s.field();
        let bad = GroupParams::Additive {
            generators: vec![f.el(1)],
            scalar_order: 1,
        };
        assert!(matches!(build_recovery_group(&s, &bad), Err(Error::NotASubgroup(_))));
        let good = GroupParams::Additive {
            generators: vec![f.el(3)],
            scalar_order: 1,
        };
        assert_eq!(build_recovery_group(&s, &good).unwrap().order(), 3);
    }

    #[test]
    fn orbit_polynomial_is_t3_plus_t_for_gf9_kernel() {
        let s = spec(Variant::Gs96, 3, 1);
        let f = s.field();
        let h = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        assert_eq!(
            h.orbit_polynomial(f).unwrap(),
            vec![f.el(0), f.el(1), f.el(0), f.el(1)]
        );
    }

    #[test]
    fn semidirect_q9() {
        let s = spec(Variant::Gs96, 3, 2);
        let f = s.field();
        let h1 = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        let h2 = build_recovery_group(&s, &GroupParams::Multiplicative { order: 2 }).unwrap();
        let g = combine(&s, &h1, &h2).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.structure, ProductStructure::SemiDirect { normal: 1 });
        let tau = Automorphism::new(f.el(2), FieldElement::ZERO);
        for sigma in h1.elements() {
            let c = sigma.conjugate_by(&tau, Variant::Gs96, f);
            assert_eq!(c, Automorphism::new(FieldElement::ONE, f.mul(f.el(2), sigma.shift)));
        }
    }

    #[test]
    fn identical_groups_intersect() {
        let s = spec(Variant::Gs96, 3, 2);
        let h1 = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        assert_eq!(combine(&s, &h1, &h1).unwrap_err(), Error::NontrivialIntersection);
    }

    #[test]
    fn gs95_q64_two_additive_groups() {
        let s = spec(Variant::Gs95, 8, 2);
        let f = s.field();
        let ker = f.artin_schreier_kernel().unwrap();
        let nz: Vec<FieldElement> = ker.into_iter().filter(|a| !a.is_zero()).collect();
        let w1 = build_recovery_group(
            &s,
            &GroupParams::Additive {
                generators: vec![nz[0], nz[1]],
                scalar_order: 1,
            },
        )
        .unwrap();
        assert_eq!(w1.order(), 4);
        let shifts = w1.shifts();
        let other = *nz.iter().find(|a| !shifts.contains(a)).unwrap();
        let w2 = build_recovery_group(
            &s,
            &GroupParams::Additive {
                generators: vec![other],
                scalar_order: 1,
            },
        )
        .unwrap();
        let g = combine(&s, &w1, &w2).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.structure, ProductStructure::Direct);
    }

    #[test]
    fn orbit_examples_and_disjointness() {
        let s = spec(Variant::Gs96, 3, 2);
        let f = s.field();
        let h1 = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        let h2 = build_recovery_group(&s, &GroupParams::Multiplicative { order: 2 }).unwrap();
        let places = s.enumerate_places();
        let p = places.iter().find(|p| p.coords[0] == f.el(4)).unwrap();
        let o = orbit(&s, &h1, p);
        let a2 = p.coords[1];
        assert_eq!(
            o,
            vec![
                vec![f.el(4), a2],
                vec![f.el(4), f.add(a2, f.el(3))],
                vec![f.el(4), f.add(a2, f.el(6))]
            ]
        );
        for p in &places {
            assert!(orbits_disjoint(&s, &h1, &h2, p));
            assert_eq!(orbit_size(&s, h1.elements(), p), 3);
            // w-separation on the repair coordinate
            let ws: HashSet<FieldElement> = orbit(&s, &h2, p).iter().map(|c| c[1]).collect();
            assert_eq!(ws.len(), 2);
        }
        assert!(!orbits_disjoint(&s, &h1, &h1, &places[0]));
    }

    #[test]
    fn hermitian_orders_two_and_three_are_disjoint() {
        let s = spec(Variant::Gs95, 5, 2);
        let h1 = build_recovery_group(&s, &GroupParams::Multiplicative { order: 2 }).unwrap();
        let h2 = build_recovery_group(&s, &GroupParams::Multiplicative { order: 3 }).unwrap();
        assert!(coprime_orders(&h1, &h2));
        let g = combine(&s, &h1, &h2).unwrap();
        assert_eq!(g.structure, ProductStructure::Direct);
        for p in s.enumerate_places() {
            assert!(orbits_disjoint(&s, &h1, &h2, &p));
            assert_eq!(orbit_size(&s, &g.elements, &p), 6);
        }
    }

    #[test]
    fn unnormalized_additive_group_is_rejected() {
        // l = 4, W = GF(2)-span of one kernel element is not closed under GF(4)^*
        let s = spec(Variant::Gs96, 4, 1);
        let f = s.field();
        let a = *f.artin_schreier_kernel().unwrap().iter().find(|a| !a.is_zero()).unwrap();
        let w = build_recovery_group(
            &s,
            &GroupParams::Additive {
                generators: vec![a],
                scalar_order: 1,
            },
        )
        .unwrap();
        let h = build_recovery_group(&s, &GroupParams::Multiplicative { order: 3 }).unwrap();
        assert!(matches!(combine(&s, &w, &h), Err(Error::NotNormalized(_))));
        let w3 = build_recovery_group(
            &s,
            &GroupParams::Additive {
                generators: vec![a],
                scalar_order: 3,
            },
        )
        .unwrap();
        assert_eq!(w3.order(), 4);
        assert_eq!(combine(&s, &w3, &h).unwrap().order(), 12);
    }

    #[test]
    fn descriptor_round_trip() {
        let s = spec(Variant::Gs96, 3, 1);
        let h = build_recovery_group(&s, &GroupParams::AdditiveKernel).unwrap();
        let json = serde_json::to_string(&h.descriptor()).unwrap();
        assert_eq!(json, r#"{"kind":"additive","shifts":[0,3,6]}"#);
        let back = RecoveryGroup::from_descriptor(&s, &serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, h);
        let bad = GroupDescriptor::Additive { shifts: vec![0, 3] };
        assert!(RecoveryGroup::from_descriptor(&s, &bad).is_err());
    }
}

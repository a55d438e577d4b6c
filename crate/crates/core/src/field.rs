//! Table-driven arithmetic in GF(p^k) for desk-scale orders (q <= 2^16).
//!
//! An element `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` is encoded as the integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`, so the encodings of a field of order
//! `q` are exactly `0..q`. Multiplication goes through log/antilog tables built
//! from the smallest primitive element; addition is digit-wise mod p (XOR in
//! characteristic 2, a dense table for small odd-characteristic fields).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const MAX_ORDER: u64 = 1 << 16;
const ADD_TABLE_MAX: u32 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// JSON form of a field: `{"p":3,"k":2,"modulus":[1,0,1]}`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    ell: Option<u32>,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u16>>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// GF(p^k) with the first monic irreducible modulus of degree `k`, where
    /// candidates `(c_0, ..., c_{k-1})` are ordered lexicographically with the
    /// constant term most significant.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        check_params(p, k)?;
        let count = (p as u64).pow(k) as u32;
        for n in 0..count {
            let mut coeffs = vec![0u32; k as usize + 1];
            let mut rest = n;
            for i in (0..k as usize).rev() {
                coeffs[i] = rest % p;
                rest /= p;
            }
            coeffs[k as usize] = 1;
            if is_irreducible(&coeffs, p) {
                return Self::build(p, coeffs);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// GF(p^k) with an explicit monic modulus (constant term first).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        let k = (modulus.len() - 1) as u32;
        check_params(p, k)?;
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidModulus(format!("{modulus:?} is reducible over GF({p})")));
        }
        Self::build(p, modulus)
    }

    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        if d.modulus.len() != d.k as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "modulus has {} coefficients, expected {}",
                d.modulus.len(),
                d.k + 1
            )));
        }
        Self::with_modulus(d.p, d.modulus.clone())
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.p,
            k: self.k,
            modulus: self.modulus.clone(),
        }
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Self> {
        let k = (modulus.len() - 1) as u32;
        let q = p.pow(k);
        let ell = if k % 2 == 0 { Some(p.pow(k / 2)) } else { None };

        let slow = SlowArith { p, modulus: &modulus };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| order == 1 || slow.pow(g, order / r) != 1)
            })
            .expect("multiplicative group is cyclic");

        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = slow.mul(x, generator);
        }
        for i in (q - 1) as usize..exp.len() {
            exp[i] = exp[i - (q - 1) as usize];
        }

        let neg = (0..q).map(|a| digitwise(p, a, 0, |x, _| (p - x) % p)).collect();
        let add_table = if p != 2 && q <= ADD_TABLE_MAX {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digitwise(p, a, b, |x, y| (x + y) % p) as u16;
                }
            }
            Some(t)
        } else {
            None
        };

        Ok(FiniteField {
            p,
            k,
            q,
            ell,
            modulus,
            generator,
            exp,
            log,
            neg,
            add_table,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.generator)
    }

    /// `l` with `q = l^2`.
    pub fn ell(&self) -> Result<u32> {
        self.ell.ok_or(Error::NotASquareField(self.q))
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.q })
        }
    }

    /// Element from its encoding; panics when out of range.
    pub fn el(&self, value: u32) -> FieldElement {
        assert!(value < self.q, "element {value} out of range for GF({})", self.q);
        FieldElement(value)
    }

    /// Image of the prime-field integer `n mod p`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(FieldElement)
    }

    /// Coefficients `c_0..c_{k-1}` of the element.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.k)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if let Some(t) = &self.add_table {
            return FieldElement(t[(a.0 * self.q + b.0) as usize] as u32);
        }
        FieldElement(digitwise(self.p, a.0, b.0, |x, y| (x + y) % self.p))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let l = self.log[a.0 as usize];
        Some(FieldElement(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]))
    }

    /// `a / b`; `None` when `b` is zero.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        FieldElement(self.exp[l as usize])
    }

    /// `x^l + x`, the trace from GF(l^2) onto GF(l).
    pub fn trace(&self, x: FieldElement) -> Result<FieldElement> {
        let ell = self.ell()?;
        Ok(self.add(self.pow(x, ell as u64), x))
    }

    /// `x^(l+1)`, the norm from GF(l^2) onto GF(l).
    pub fn norm(&self, x: FieldElement) -> Result<FieldElement> {
        let ell = self.ell()?;
        Ok(self.pow(x, ell as u64 + 1))
    }

    /// `{a : a^l + a = 0}`, an additive subgroup of order `l`.
    pub fn artin_schreier_kernel(&self) -> Result<Vec<FieldElement>> {
        let ell = self.ell()? as u64;
        Ok(self
            .elements()
            .filter(|&a| self.add(self.pow(a, ell), a).is_zero())
            .collect())
    }

    /// The units of the subfield GF(l), i.e. `{c != 0 : c^l = c}`.
    pub fn subfield_units(&self) -> Result<Vec<FieldElement>> {
        let ell = self.ell()? as u64;
        Ok(self
            .elements()
            .skip(1)
            .filter(|&c| self.pow(c, ell) == c)
            .collect())
    }

    /// `{a : a^(l+1) = 1}`, cyclic of order `l + 1`.
    pub fn norm_one_group(&self) -> Result<Vec<FieldElement>> {
        let ell = self.ell()? as u64;
        Ok(self
            .elements()
            .skip(1)
            .filter(|&a| self.pow(a, ell + 1) == FieldElement::ONE)
            .collect())
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let order = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Some(order / gcd(order, l))
    }
}

fn check_params(p: u32, k: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    if k == 0 {
        return Err(Error::InvalidModulus("extension degree must be positive".into()));
    }
    match (p as u64).checked_pow(k) {
        Some(q) if q <= MAX_ORDER => Ok(()),
        _ => Err(Error::FieldTooLarge { p, k }),
    }
}

fn digitwise(p: u32, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += op(a % p, b % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

/// Polynomial arithmetic on encodings, only used while building the tables.
struct SlowArith<'a> {
    p: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let k = self.modulus.len() - 1;
        let p = self.p as u64;
        let da = to_digits(a, self.p, k);
        let db = to_digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        prod[..k]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c) as u32
    }

    fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
}

fn to_digits(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree `1..=k/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut div = vec![0u32; d + 1];
            let mut rest = n;
            for c in div.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            div[d] = 1;
            if poly_rem_is_zero(poly, &div, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(num: &[u32], monic_div: &[u32], p: u32) -> bool {
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let d = monic_div.len() - 1;
    let p = p as u64;
    for deg in (d..r.len()).rev() {
        let c = r[deg] % p;
        if c == 0 {
            continue;
        }
        for (i, &m) in monic_div.iter().enumerate() {
            let idx = deg - d + i;
            r[idx] = (r[idx] + (p - c) * m as u64) % p;
        }
    }
    r[..d].iter().all(|&c| c % p == 0)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, e)` with `n = p^e`, if `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = prime_factors(n);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut e = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Some((p, e))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The field GF(l^2) for a prime power `l`.
pub fn square_field(ell: u32) -> Result<FiniteField> {
    let (p, w) = prime_power(ell as u64).ok_or(Error::NotAPrimePower(ell as u64))?;
    FiniteField::new(p as u32, 2 * w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[FieldElement]) -> Vec<u32> {
        let mut s: Vec<u32> = v.iter().map(|x| x.value()).collect();
        s.sort();
        s
    }

    // Independent search over all monic quadratics over GF(3), constant
    // term most significant: the first with no root in GF(3).
    #[test]
    fn gf9_modulus_is_t2_plus_1() {
        let mut first = None;
        'outer: for c0 in 0..3u32 {
            for c1 in 0..3u32 {
                let has_root = (0..3u32).any(|x| (x * x + c1 * x + c0) % 3 == 0);
                if !has_root {
                    first = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(first.unwrap(), vec![1, 0, 1]);
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.order(), 9);
        assert_eq!(f.ell().unwrap(), 3);
        // t^2 = -1
        let t = f.el(3);
        assert_eq!(f.mul(t, t), f.el(2));
    }

    #[test]
    fn default_moduli() {
        let cases: [(u32, u32, &[u32]); 4] = [
            (5, 2, &[1, 1, 1]),
            (7, 2, &[1, 0, 1]),
            (2, 3, &[1, 0, 1, 1]),
            (2, 4, &[1, 0, 0, 1, 1]),
        ];
        for (p, k, modulus) in cases {
            assert_eq!(FiniteField::new(p, k).unwrap().modulus(), modulus);
        }
    }

    #[test]
    fn prime_field_uses_identity_modulus() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(f.el(1), f.el(1)), FieldElement::ZERO);
        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.mul(f7.el(3), f7.el(5)), f7.el(1));
        assert_eq!(f7.inv(f7.el(3)), Some(f7.el(5)));
    }

    #[test]
    fn frobenius_is_additive_in_gf25() {
        let f = FiniteField::new(5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let a = f.el(rng.gen_range(0..25));
            let b = f.el(rng.gen_range(0..25));
            assert_eq!(f.pow(f.add(a, b), 5), f.add(f.pow(a, 5), f.pow(b, 5)));
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 2), Err(Error::NonPrimeCharacteristic(4)));
        assert_eq!(FiniteField::new(2, 17), Err(Error::FieldTooLarge { p: 2, k: 17 }));
        assert!(FiniteField::new(2, 16).is_ok());
        assert!(matches!(
            FiniteField::with_modulus(3, vec![2, 0, 1]),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn gf9_kernel_units_norm_one() {
        let f = FiniteField::new(3, 2).unwrap();
        // {0, t, 2t}
        assert_eq!(set(&f.artin_schreier_kernel().unwrap()), vec![0, 3, 6]);
        assert_eq!(set(&f.subfield_units().unwrap()), vec![1, 2]);
        assert_eq!(f.norm_one_group().unwrap().len(), 4);
    }

    #[test]
    fn gf4_kernel_and_units() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(set(&f.artin_schreier_kernel().unwrap()), vec![0, 1]);
        assert_eq!(set(&f.subfield_units().unwrap()), vec![1]);
        assert_eq!(f.norm_one_group().unwrap().len(), 3);
    }

    #[test]
    fn gf25_units_cyclic_and_norm_one() {
        let f = FiniteField::new(5, 2).unwrap();
        let units = f.subfield_units().unwrap();
        assert_eq!(units.len(), 4);
        assert!(units.iter().any(|&u| f.multiplicative_order(u) == Some(4)));
        for &a in &units {
            for &b in &units {
                assert!(units.contains(&f.mul(a, b)));
            }
        }
        let n1 = f.norm_one_group().unwrap();
        assert_eq!(n1.len(), 6);
        assert!(n1.contains(&FieldElement::ONE));
    }

    #[test]
    fn non_square_fields_are_rejected() {
        let f = FiniteField::new(2, 3).unwrap();
        assert_eq!(f.artin_schreier_kernel(), Err(Error::NotASquareField(8)));
        assert_eq!(f.subfield_units(), Err(Error::NotASquareField(8)));
        assert_eq!(f.norm_one_group(), Err(Error::NotASquareField(8)));
    }

    #[test]
    fn structured_subsets_for_small_squares() {
        for ell in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = square_field(ell).unwrap();
            let ker = f.artin_schreier_kernel().unwrap();
            assert_eq!(ker.len(), ell as usize);
            for &a in &ker {
                for &b in &ker {
                    assert!(ker.contains(&f.add(a, b)));
                }
            }
            let mut sub = f.subfield_units().unwrap();
            assert_eq!(sub.len(), ell as usize - 1);
            sub.push(FieldElement::ZERO);
            for &a in &sub {
                for &b in &sub {
                    assert!(sub.contains(&f.add(a, b)));
                    assert!(sub.contains(&f.mul(a, b)));
                }
            }
            let n1 = f.norm_one_group().unwrap();
            assert_eq!(n1.len(), ell as usize + 1);
            for &a in &n1 {
                assert!(n1.contains(&f.inv(a).unwrap()));
                for &b in &n1 {
                    assert!(n1.contains(&f.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        let f = FiniteField::new(2, 4).unwrap();
        let d = f.descriptor();
        let json = serde_json::to_string(&d).unwrap();
        let g = FiniteField::from_descriptor(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(f, g);
        assert_eq!(
            serde_json::to_string(&FiniteField::new(3, 2).unwrap().descriptor()).unwrap(),
            r#"{"p":3,"k":2,"modulus":[1,0,1]}"#
        );
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn field_and_triple() -> impl Strategy<Value = (u32, u32, u32, u32, u32)> {
            prop_oneof![Just((2u32, 4u32)), Just((3, 2)), Just((5, 2)), Just((3, 4)), Just((2, 6)), Just((7, 2))]
                .prop_flat_map(|(p, k)| {
                    let q = p.pow(k);
                    (Just(p), Just(k), 0..q, 0..q, 0..q)
                })
        }

        proptest! {
            #[test]
            fn field_axioms((p, k, a, b, c) in field_and_triple()) {
                let f = FiniteField::new(p, k).unwrap();
                let (a, b, c) = (f.el(a), f.el(b), f.el(c));
                prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                prop_assert_eq!(f.pow(a, f.order() as u64), a);
                if !a.is_zero() {
                    prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    prop_assert_eq!(f.pow(a, f.order() as u64 - 1), FieldElement::ONE);
                }
            }
        }
    }
}

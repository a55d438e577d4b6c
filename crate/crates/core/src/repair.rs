//! Single-erasure repair through one recovery set.
//!
//! On every recovery orbit a codeword agrees with a polynomial of degree
//! `< r_j` in the w-coordinate, so the erased symbol is the Lagrange
//! interpolant through the `r_j` surviving neighbours, evaluated at the
//! erased place's w-value.

use crate::construct::LrcCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};

/// A received word with one erased coordinate. The symbol stored at
/// `erased` is ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasurePattern {
    pub received: Vec<FieldElement>,
    pub erased: usize,
    /// 1 or 2.
    pub set: usize,
}

/// Value at `x` of the polynomial of degree `< nodes.len()` through
/// `(nodes[h], values[h])`. Nodes must be distinct.
pub fn lagrange_eval(
    f: &FiniteField,
    nodes: &[FieldElement],
    values: &[FieldElement],
    x: FieldElement,
) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for (h, (&xh, &vh)) in nodes.iter().zip(values).enumerate() {
        let mut num = FieldElement::ONE;
        let mut den = FieldElement::ONE;
        for (g, &xg) in nodes.iter().enumerate() {
            if g != h {
                num = f.mul(num, f.sub(x, xg));
                den = f.mul(den, f.sub(xh, xg));
            }
        }
        let basis = f.div(num, den).expect("distinct interpolation nodes");
        acc = f.add(acc, f.mul(vh, basis));
    }
    acc
}

/// Recovers the erased symbol from its recovery set. With `strict`, the
/// completed word must also be a codeword.
pub fn repair(code: &LrcCode, pattern: &ErasurePattern, strict: bool) -> Result<FieldElement> {
    let f = code.spec.field();
    let n = code.n();
    let i = pattern.erased;
    if i >= n || pattern.received.len() != n || !(1..=2).contains(&pattern.set) {
        return Err(Error::InvalidQuery(format!(
            "erasure at {i}, set {} on a word of length {} (n = {n})",
            pattern.set,
            pattern.received.len()
        )));
    }
    let set = code.recovery_sets[i].set(pattern.set);
    if let Some(&bad) = set.iter().find(|&&h| h >= n) {
        return Err(Error::Descriptor(format!(
            "recovery set {} of coordinate {i} names coordinate {bad}",
            pattern.set
        )));
    }
    let x = code.w_value(i, pattern.set);
    let nodes: Vec<FieldElement> = set.iter().map(|&h| code.w_value(h, pattern.set)).collect();
    let mut all = nodes.clone();
    all.push(x);
    all.sort();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateWValues(i));
    }
    let values: Vec<FieldElement> = set.iter().map(|&h| pattern.received[h]).collect();
    let symbol = lagrange_eval(f, &nodes, &values, x);

    if strict {
        let mut word = pattern.received.clone();
        word[i] = symbol;
        if !code.generator.row_space_contains(f, &word) {
            return Err(Error::NotACodeword);
        }
    }
    Ok(symbol)
}

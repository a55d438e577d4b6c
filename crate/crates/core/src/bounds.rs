//! Upper bounds on the minimum distance of codes with locality and
//! availability, the asymptotic rate/distance trade-off lines, and the table
//! of admissible locality pairs.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::field::{gcd, prime_power};

pub type Rational = Ratio<i64>;

fn div_ceil(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn check_nk(n: i64, k: i64) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::InvalidQuery(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn check_r(r: i64) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidQuery(format!("locality must be positive, got {r}")));
    }
    Ok(())
}

fn check_t(t: i64) -> Result<()> {
    if t < 1 {
        return Err(Error::InvalidQuery(format!("availability must be positive, got {t}")));
    }
    Ok(())
}

fn check_list(rs: &[i64]) -> Result<()> {
    if rs.is_empty() {
        return Err(Error::InvalidQuery("empty locality list".into()));
    }
    rs.iter().try_for_each(|&r| check_r(r))
}

/// `n - k - ceil(k/r) + 2`
pub fn singleton_lrc(n: i64, k: i64, r: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(r)?;
    Ok(n - k - div_ceil(k, r) + 2)
}

/// `n - sum_{i=0}^{t} floor((k-1)/r^i)`
pub fn tb_bound(n: i64, k: i64, r: i64, t: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(r)?;
    check_t(t)?;
    let mut sum = 0;
    let mut power: i64 = 1;
    for _ in 0..=t {
        sum += (k - 1) / power;
        power = power.saturating_mul(r);
    }
    Ok(n - sum)
}

/// `n - k - ceil(((k-1)t + 1) / ((r-1)t + 1)) + 2`
pub fn wz_bound(n: i64, k: i64, r: i64, t: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(r)?;
    check_t(t)?;
    Ok(n - k - div_ceil((k - 1) * t + 1, (r - 1) * t + 1) + 2)
}

/// `n - k - ceil(kt/r) + t + 1`
pub fn rpdv_bound(n: i64, k: i64, r: i64, t: i64) -> Result<i64> {
    check_nk(n, k)?;
    check_r(r)?;
    check_t(t)?;
    Ok(n - k - div_ceil(k * t, r) + t + 1)
}

/// `n - k + 1 - sum_{i=1}^{t} floor((k-1) / prod_{j=t+1-i}^{t} r_j)` for
/// localities sorted ascending.
pub fn bt_bound(n: i64, k: i64, rs: &[i64]) -> Result<i64> {
    check_nk(n, k)?;
    check_list(rs)?;
    if rs.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::UnsortedLocalities);
    }
    let mut sum = 0;
    let mut product: i64 = 1;
    for &r in rs.iter().rev() {
        product = product.saturating_mul(r);
        sum += (k - 1) / product;
    }
    Ok(n - k + 1 - sum)
}

/// `n - k - ceil(((k-1)t + 1) / (1 + sum r_i)) + 2`
pub fn bmq_bound(n: i64, k: i64, rs: &[i64]) -> Result<i64> {
    check_nk(n, k)?;
    check_list(rs)?;
    let t = rs.len() as i64;
    let s: i64 = rs.iter().sum();
    Ok(n - k - div_ceil((k - 1) * t + 1, 1 + s) + 2)
}

/// The six bounds at one query. Single-locality bounds use `r_1` when the
/// localities differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundTable {
    pub singleton: i64,
    pub tb: i64,
    pub wz: i64,
    pub rpdv: i64,
    pub bt: i64,
    pub bmq: i64,
}

impl BoundTable {
    pub fn labeled(&self) -> [(&'static str, i64); 6] {
        [
            ("singleton", self.singleton),
            ("tb", self.tb),
            ("wz", self.wz),
            ("rpdv", self.rpdv),
            ("bt", self.bt),
            ("bmq", self.bmq),
        ]
    }

    /// Smallest of the bounds; every code with these parameters has
    /// distance at most this.
    pub fn min(&self) -> i64 {
        self.labeled().iter().map(|(_, v)| *v).min().unwrap()
    }
}

pub fn all_bounds(n: i64, k: i64, t: i64, rs: &[i64]) -> Result<BoundTable> {
    check_list(rs)?;
    if rs.len() as i64 != t {
        return Err(Error::InvalidQuery(format!(
            "t = {t} but {} localities given",
            rs.len()
        )));
    }
    let r = rs[0];
    Ok(BoundTable {
        singleton: singleton_lrc(n, k, r)?,
        tb: tb_bound(n, k, r, t)?,
        wz: wz_bound(n, k, r, t)?,
        rpdv: rpdv_bound(n, k, r, t)?,
        bt: bt_bound(n, k, rs)?,
        bmq: bmq_bound(n, k, rs)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Earlier construction from automorphisms of the Hermitian-type tower.
    Btv,
    Thm33,
    Thm34Case1,
    Thm34Case2,
    Thm35Case1,
    Thm35Case2,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Btv,
        Theorem::Thm33,
        Theorem::Thm34Case1,
        Theorem::Thm34Case2,
        Theorem::Thm35Case1,
        Theorem::Thm35Case2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Btv => "btv",
            Theorem::Thm33 => "thm33",
            Theorem::Thm34Case1 => "thm34(1)",
            Theorem::Thm34Case2 => "thm34(2)",
            Theorem::Thm35Case1 => "thm35(1)",
            Theorem::Thm35Case2 => "thm35(2)",
        }
    }

    /// The first condition of this row that `(r1, r2)` violates.
    pub fn violation(self, ell: u64, r1: u64, r2: u64) -> Option<String> {
        let (a, b) = (r1 + 1, r2 + 1);
        let divides = |x: u64, y: u64| y % x == 0;
        let checks: Vec<(bool, String)> = match self {
            Theorem::Btv => vec![
                (divides(a, ell + 1), format!("(r1+1) | (l+1): {a} | {}", ell + 1)),
                (divides(b, ell), format!("(r2+1) | l: {b} | {ell}")),
                (gcd(a, b) == 1, format!("gcd(r1+1, r2+1) = 1: gcd({a}, {b})")),
            ],
            Theorem::Thm33 => vec![
                (divides(a, ell), format!("(r1+1) | l: {a} | {ell}")),
                (divides(b, ell - 1), format!("(r2+1) | (l-1): {b} | {}", ell - 1)),
                (
                    divides(b, gcd(r1, ell - 1)),
                    format!("(r2+1) | gcd(r1, l-1): {b} | {}", gcd(r1, ell - 1)),
                ),
            ],
            Theorem::Thm34Case1 => vec![
                (divides(a, ell - 1), format!("(r1+1) | (l-1): {a} | {}", ell - 1)),
                (divides(b, ell - 1), format!("(r2+1) | (l-1): {b} | {}", ell - 1)),
                (gcd(a, b) == 1, format!("gcd(r1+1, r2+1) = 1: gcd({a}, {b})")),
            ],
            Theorem::Thm35Case1 => vec![
                (divides(a, ell + 1), format!("(r1+1) | (l+1): {a} | {}", ell + 1)),
                (divides(b, ell + 1), format!("(r2+1) | (l+1): {b} | {}", ell + 1)),
                (gcd(a, b) == 1, format!("gcd(r1+1, r2+1) = 1: gcd({a}, {b})")),
            ],
            Theorem::Thm34Case2 | Theorem::Thm35Case2 => vec![
                (divides(a, ell), format!("(r1+1) | l: {a} | {ell}")),
                (divides(b, ell), format!("(r2+1) | l: {b} | {ell}")),
                (a * b <= ell, format!("(r1+1)(r2+1) <= l: {} <= {ell}", a * b)),
            ],
        };
        checks.into_iter().find(|(ok, _)| !ok).map(|(_, why)| why)
    }

    pub fn admits(self, ell: u64, r1: u64, r2: u64) -> bool {
        r1 >= 1 && r2 >= 1 && self.violation(ell, r1, r2).is_none()
    }

    /// The constant `c` in the denominators `q - c` of the trade-off line.
    fn line_offset(self, ell: i64) -> i64 {
        match self {
            Theorem::Thm35Case1 | Theorem::Thm35Case2 => 1,
            _ => ell,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown theorem {s:?}")))
    }
}

/// `delta + slope * R >= intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TradeoffLine {
    pub ell: u64,
    pub r1: u64,
    pub r2: u64,
    pub theorem: Theorem,
    pub slope: Rational,
    pub intercept: Rational,
    /// The intercept is not positive, so the line says nothing.
    pub vacuous: bool,
}

fn checked_ell(ell: u64) -> Result<i64> {
    match prime_power(ell) {
        Some(_) if ell <= 64 => Ok(ell as i64),
        Some(_) => Err(Error::InvalidQuery(format!("l = {ell} exceeds 64"))),
        None => Err(Error::NotAPrimePower(ell)),
    }
}

fn regime_check(theorems: &[Theorem], ell: u64, r1: u64, r2: u64) -> Result<Theorem> {
    if let Some(&t) = theorems.iter().find(|t| t.admits(ell, r1, r2)) {
        return Ok(t);
    }
    let t = theorems[0];
    Err(Error::RegimeViolation {
        theorem: t.name(),
        condition: t
            .violation(ell, r1, r2)
            .unwrap_or_else(|| "localities must be positive".into()),
    })
}

/// The earlier trade-off `delta + (r1+1)(r2+1)/(r1 r2) R >= (l-2)/(l-1) -
/// (r1+r2-2)/(q-1)`.
pub fn btv_line(ell: u64, r1: u64, r2: u64) -> Result<TradeoffLine> {
    let l = checked_ell(ell)?;
    let theorem = regime_check(&[Theorem::Btv], ell, r1, r2)?;
    let (a, b) = (r1 as i64, r2 as i64);
    let q = l * l;
    let slope = Rational::new((a + 1) * (b + 1), a * b);
    let intercept = Rational::new(l - 2, l - 1) - Rational::new(a + b - 2, q - 1);
    Ok(TradeoffLine {
        ell,
        r1,
        r2,
        theorem,
        slope,
        intercept,
        vacuous: intercept <= Rational::from_integer(0),
    })
}

/// The new trade-off line under the regime of `theorem`.
pub fn gs_line(ell: u64, r1: u64, r2: u64, theorem: Theorem) -> Result<TradeoffLine> {
    let l = checked_ell(ell)?;
    let (a, b) = (r1 as i64, r2 as i64);
    if a * b == 1 {
        return Err(Error::DenominatorZero);
    }
    if theorem == Theorem::Btv {
        return btv_line(ell, r1, r2);
    }
    let theorem = regime_check(&[theorem], ell, r1, r2)?;
    Ok(gs_line_unchecked(l, a, b, theorem))
}

/// Either case of a two-case theorem (`thm34` or `thm35`).
pub fn gs_line_any_case(ell: u64, r1: u64, r2: u64, family: &str) -> Result<TradeoffLine> {
    let cases: &[Theorem] = match family {
        "thm33" => &[Theorem::Thm33],
        "thm34" => &[Theorem::Thm34Case1, Theorem::Thm34Case2],
        "thm35" => &[Theorem::Thm35Case1, Theorem::Thm35Case2],
        "btv" => return btv_line(ell, r1, r2),
        other => return gs_line(ell, r1, r2, other.parse()?),
    };
    let l = checked_ell(ell)?;
    if r1 * r2 == 1 {
        return Err(Error::DenominatorZero);
    }
    let theorem = regime_check(cases, ell, r1, r2)?;
    Ok(gs_line_unchecked(l, r1 as i64, r2 as i64, theorem))
}

fn gs_line_unchecked(l: i64, a: i64, b: i64, theorem: Theorem) -> TradeoffLine {
    let q = l * l;
    let qc = q - theorem.line_offset(l);
    let slope = Rational::new((a + 1) * (b + 1), a * b - 1);
    let intercept = Rational::new(l - 2, l - 1)
        - Rational::new(a + b, qc)
        - Rational::new((a - b) * (a - b), qc * (a * b - 1));
    TradeoffLine {
        ell: l as u64,
        r1: a as u64,
        r2: b as u64,
        theorem,
        slope,
        intercept,
        vacuous: intercept <= Rational::from_integer(0),
    }
}

/// One admissible `(r1, r2)` pair; `line` is `None` where the line is
/// undefined (`r1 = r2 = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeRow {
    pub ell: u64,
    pub r1: u64,
    pub r2: u64,
    pub theorem: Theorem,
    pub line: Option<TradeoffLine>,
}

/// All `(r1, r2)` with `1 <= r_i <= l` admitted by each row of the table,
/// grouped by theorem in table order.
pub fn regimes(ell: u64) -> Result<Vec<RegimeRow>> {
    checked_ell(ell)?;
    let mut rows = Vec::new();
    for theorem in Theorem::ALL {
        for r1 in 1..=ell {
            for r2 in 1..=ell {
                if !theorem.admits(ell, r1, r2) {
                    continue;
                }
                let line = match theorem {
                    Theorem::Btv => Some(btv_line(ell, r1, r2)?),
                    _ if r1 * r2 == 1 => None,
                    _ => Some(gs_line(ell, r1, r2, theorem)?),
                };
                rows.push(RegimeRow {
                    ell,
                    r1,
                    r2,
                    theorem,
                    line,
                });
            }
        }
    }
    Ok(rows)
}

pub const CSV_HEADER: &str =
    "ell,r1,r2,theorem,slope_num,slope_den,intercept_num,intercept_den,vacuous";

pub fn csv_row(row: &RegimeRow) -> String {
    match &row.line {
        Some(l) => format!(
            "{},{},{},{},{},{},{},{},{}",
            row.ell,
            row.r1,
            row.r2,
            row.theorem,
            l.slope.numer(),
            l.slope.denom(),
            l.intercept.numer(),
            l.intercept.denom(),
            l.vacuous
        ),
        None => format!("{},{},{},{},,,,,", row.ell, row.r1, row.r2, row.theorem),
    }
}

pub fn regimes_csv(rows: &[RegimeRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&csv_row(r));
        out.push('\n');
    }
    out
}

/// A rational rendered with 12 significant digits.
pub fn sig12(x: Rational) -> String {
    let v = *x.numer() as f64 / *x.denom() as f64;
    if v == 0.0 {
        return "0".into();
    }
    let digits = 11 - v.abs().log10().floor() as i32;
    if digits >= 0 {
        let s = format!("{:.*}", digits as usize, v);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{:.11e}", v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_query() {
        let t = all_bounds(18, 8, 2, &[2, 2]).unwrap();
        assert_eq!(
            [t.singleton, t.tb, t.wz, t.rpdv, t.bt, t.bmq],
            [8, 7, 7, 5, 7, 9]
        );
    }

    #[test]
    fn spot_values() {
        assert_eq!(singleton_lrc(6, 2, 2), Ok(5));
        assert_eq!(singleton_lrc(20, 5, 9), Ok(16));
        assert_eq!(wz_bound(6, 3, 1, 1), Ok(2));
        assert_eq!(rpdv_bound(120, 40, 2, 2), Ok(43));
        assert_eq!(bmq_bound(18, 8, &[2, 1]), Ok(8));
        assert_eq!(bt_bound(18, 8, &[2, 1]), Err(Error::UnsortedLocalities));
        assert!(tb_bound(18, 8, 2, 0).is_err());
        assert!(singleton_lrc(5, 6, 1).is_err());
    }

    #[test]
    fn monotone_in_k() {
        for n in [12i64, 30] {
            for r in 1..4 {
                for t in 1..3 {
                    let rs = vec![r; t as usize];
                    for k in 1..n {
                        let a = all_bounds(n, k, t, &rs).unwrap();
                        let b = all_bounds(n, k + 1, t, &rs).unwrap();
                        for ((_, x), (_, y)) in a.labeled().iter().zip(b.labeled()) {
                            assert!(y <= *x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn btv_lines() {
        let l = btv_line(8, 2, 3).unwrap();
        assert_eq!(l.intercept, Rational::new(17, 21));
        assert_eq!(l.slope, Rational::new(2, 1));
        assert_eq!(btv_line(4, 4, 1).unwrap().slope, Rational::new(10, 4));
        assert!(matches!(btv_line(8, 3, 3), Err(Error::RegimeViolation { .. })));
    }

    #[test]
    fn gs_lines() {
        let l = gs_line_any_case(8, 3, 1, "thm35").unwrap();
        assert_eq!(l.theorem, Theorem::Thm35Case2);
        assert_eq!(l.intercept, Rational::new(48, 63));
        assert_eq!(l.slope, Rational::new(8, 2));
        let v = gs_line(3, 2, 1, Theorem::Thm33).unwrap();
        assert_eq!(v.intercept, Rational::new(-1, 6));
        assert!(v.vacuous);
        assert_eq!(gs_line(4, 1, 1, Theorem::Thm34Case2), Err(Error::DenominatorZero));
        assert_eq!(gs_line_any_case(4, 1, 1, "thm35"), Err(Error::DenominatorZero));
        assert_eq!(gs_line(6, 1, 2, Theorem::Thm33), Err(Error::NotAPrimePower(6)));
    }

    #[test]
    fn intercepts_grow_with_ell() {
        let mut prev = None;
        for ell in [8u64, 16, 32, 64] {
            let a = gs_line_any_case(ell, 3, 1, "thm35").unwrap().intercept;
            let b = gs_line_any_case(ell, 3, 1, "thm34").unwrap().intercept;
            if let Some((pa, pb)) = prev {
                assert!(a > pa && b > pb);
            }
            prev = Some((a, b));
        }
    }

    #[test]
    fn table_rows() {
        let has = |ell, r1, r2, t| regimes(ell).unwrap().iter().any(|row| (row.r1, row.r2, row.theorem) == (r1, r2, t));
        assert!(has(3, 2, 1, Theorem::Thm33));
        assert!(has(4, 1, 1, Theorem::Thm34Case2));
        assert!(has(5, 1, 2, Theorem::Thm35Case1));
        let row = regimes(4).unwrap().into_iter().find(|r| r.theorem == Theorem::Thm34Case2).unwrap();
        assert_eq!(csv_row(&row), "4,1,1,thm34(2),,,,,");
        assert!(matches!(regimes(12), Err(Error::NotAPrimePower(12))));
    }

    #[test]
    fn csv_layout() {
        let csv = regimes_csv(&regimes(3).unwrap());
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert!(csv.contains("3,2,1,thm33,6,1,-1,6,true"));
    }

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(Rational::new(48, 63)), "0.761904761905");
        assert_eq!(sig12(Rational::new(-1, 6)), "-0.166666666667");
        assert_eq!(sig12(Rational::new(4, 1)), "4");
        assert_eq!(sig12(Rational::new(17, 21)), "0.809523809524");
    }
}

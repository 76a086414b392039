//! Asymptotic bound arithmetic: bounds on Ihara's function `A(q)`, rows of
//! the Garcia–Stichtenoth tower, the rate/distance planner for a tower of
//! AG-codes, and the inequality ledger for the genus-4 tower.
//!
//! Everything whose inputs are rational stays in `Ratio<i128>`. Only `sqrt q`
//! and `log2 q` for non-square or non-power-of-two `q` fall back to `f64`,
//! rounded to 12 significant digits.
//!
//! Odd tower levels use the genus `(q^((i+1)/2) - 1)(q^((i-1)/2) - 1)`.

use std::fmt;
use std::io;

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ff::is_prime;

pub type Q = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("level {i} of the tower over F_{q} has genus 0")]
    GenusZeroLevel { q: u64, i: u32 },
    #[error("no integer r with {lower} < r <= {upper}")]
    InfeasibleInterval { lower: Q, upper: Q },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("value does not fit in 128-bit arithmetic")]
    Overflow,
    #[error("cannot parse {0:?} as a rational number")]
    BadNumber(String),
}

/// A bound value: exact when the inputs allow it, otherwise a rounded float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Real {
    Exact(Q),
    Approx(f64),
}

impl Real {
    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => ratio_to_f64(r),
            Real::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<Q> {
        match self {
            Real::Exact(r) => Some(*r),
            Real::Approx(_) => None,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => write!(f, "{r}"),
            Real::Approx(x) => write!(f, "{}", round12(*x)),
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            value: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            exact: Option<String>,
        }
        Repr {
            value: round12(self.to_f64()),
            exact: self.exact().map(|r| r.to_string()),
        }
        .serialize(s)
    }
}

pub fn ratio_to_f64(r: &Q) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    for e in (1..=63u32).rev() {
        let r = q.nth_root(e);
        if r >= 2 && r.checked_pow(e) == Some(q) && is_prime(r) {
            return Some((r, e));
        }
    }
    None
}

fn exact_root(q: u64, e: u32) -> Option<u64> {
    let r = q.nth_root(e);
    (r.checked_pow(e) == Some(q)).then_some(r)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub q: u64,
    /// Drinfeld–Vladut: `A(q) <= sqrt q - 1`.
    pub dv_upper: Real,
    /// Serre: `A(q) >= log2(q) / 96`.
    pub serre_lower: Real,
    /// Square `q`: `A(q) >= sqrt q - 1`.
    pub gs_square_lower: Option<Real>,
    /// Cube `q = r^3`: `A(q) >= 2(r^2 - 1)/(r + 2)`.
    pub bgs_cube_lower: Option<Real>,
    /// `1 - 1/A` for the best lower bound `A`, when `A > 1`.
    pub tvz_lambda: Option<Real>,
}

impl BoundReport {
    pub fn best_lower(&self) -> Real {
        [Some(self.serre_lower), self.gs_square_lower, self.bgs_cube_lower]
            .into_iter()
            .flatten()
            .fold(
                self.serre_lower,
                |best, r| if r.to_f64() > best.to_f64() { r } else { best },
            )
    }
}

pub fn ihara_bounds(q: u64) -> Result<BoundReport, BoundsError> {
    let (p, e) = prime_power(q).ok_or(BoundsError::NotPrimePower(q))?;
    let int = |v: u64| Q::from_integer(v as i128);

    let square = exact_root(q, 2);
    let dv_upper = match square {
        Some(r) => Real::Exact(int(r) - Q::one()),
        None => Real::Approx(round12((q as f64).sqrt() - 1.0)),
    };
    let serre_lower = if p == 2 {
        Real::Exact(Q::new(e as i128, 96))
    } else {
        Real::Approx(round12((q as f64).log2() / 96.0))
    };
    let gs_square_lower = square.map(|r| Real::Exact(int(r) - Q::one()));
    let bgs_cube_lower = exact_root(q, 3).map(|r| {
        let r = r as i128;
        Real::Exact(Q::new(2 * (r * r - 1), r + 2))
    });

    let mut report = BoundReport {
        q,
        dv_upper,
        serre_lower,
        gs_square_lower,
        bgs_cube_lower,
        tvz_lambda: None,
    };
    report.tvz_lambda = match report.best_lower() {
        Real::Exact(a) if a > Q::one() => Some(Real::Exact(Q::one() - a.recip())),
        Real::Approx(a) if a > 1.0 => Some(Real::Approx(round12(1.0 - 1.0 / a))),
        _ => None,
    };
    Ok(report)
}

/// Level `i` of the Garcia–Stichtenoth tower over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerRow {
    pub q: u64,
    pub i: u32,
    /// `q^(i-1) (q^2 - q) + 1`.
    pub n_lower: u128,
    pub genus: u128,
    /// `(n_lower - 1) / genus`, always at least `q - 1`.
    #[serde(serialize_with = "ser_ratio")]
    pub ratio_lower: Q,
}

pub fn gs_tower_row(q: u64, i: u32) -> Result<TowerRow, BoundsError> {
    prime_power(q).ok_or(BoundsError::NotPrimePower(q))?;
    if q < 3 {
        return Err(BoundsError::PreconditionViolated(format!("q = {q} must be at least 3")));
    }
    if i == 0 {
        return Err(BoundsError::PreconditionViolated("level must be at least 1".into()));
    }
    let qq = q as u128;
    let pow = |e: u32| qq.checked_pow(e).ok_or(BoundsError::Overflow);
    let n_lower = pow(i - 1)?
        .checked_mul(qq * qq - qq)
        .and_then(|v| v.checked_add(1))
        .ok_or(BoundsError::Overflow)?;
    let genus = if i.is_multiple_of(2) {
        let a = pow(i / 2)? - 1;
        a.checked_mul(a).ok_or(BoundsError::Overflow)?
    } else {
        (pow(i.div_ceil(2))? - 1)
            .checked_mul(pow((i - 1) / 2)? - 1)
            .ok_or(BoundsError::Overflow)?
    };
    if genus == 0 {
        return Err(BoundsError::GenusZeroLevel { q, i });
    }
    let to_i = |v: u128| i128::try_from(v).map_err(|_| BoundsError::Overflow);
    let ratio_lower = Q::new(to_i(n_lower - 1)?, to_i(genus)?);
    assert!(ratio_lower >= Q::from_integer(q as i128 - 1), "tower ratio below q - 1");
    Ok(TowerRow {
        q,
        i,
        n_lower,
        genus,
        ratio_lower,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlannerResult {
    /// Largest `r` with `r deg_G / n <= 1 - delta`.
    pub r: u64,
    /// `r deg_G / n`.
    #[serde(serialize_with = "ser_ratio")]
    pub fraction: Q,
    /// `1 - delta - eps - ell`.
    #[serde(serialize_with = "ser_ratio")]
    pub rate_lower: Q,
    #[serde(serialize_with = "ser_ratio")]
    pub delta: Q,
}

/// Picks the divisor multiple `r G` for a code of length `n` so that
/// `1 - delta >= r deg_G / n > 1 - delta - eps`, given a genus-to-length
/// bound `ell`.
pub fn plan_rate_distance(n: u64, deg_g: u64, ell: Q, delta: Q, eps: Q) -> Result<PlannerResult, BoundsError> {
    let zero = Q::zero();
    let one = Q::one();
    let bad = |what: &str| Err(BoundsError::PreconditionViolated(what.to_string()));
    if n == 0 || deg_g == 0 {
        return bad("n and deg_G must be positive");
    }
    if ell < zero || ell >= one {
        return bad("need 0 <= ell < 1");
    }
    if !(zero < delta && delta < one - ell) {
        return bad("need 0 < delta < 1 - ell");
    }
    if !(zero < eps && eps < one - delta) {
        return bad("need 0 < eps < 1 - delta");
    }
    let ni = Q::from_integer(n as i128);
    let di = Q::from_integer(deg_g as i128);
    let upper = one - delta;
    let lower = upper - eps;
    let r = (upper * ni / di).floor().to_integer();
    let fraction = Q::from_integer(r) * di / ni;
    if fraction <= lower {
        return Err(BoundsError::InfeasibleInterval {
            lower: lower * ni / di,
            upper: upper * ni / di,
        });
    }
    assert!(upper >= fraction && fraction > lower);
    let rate_lower = one - delta - eps - ell;
    assert_eq!(rate_lower + delta + eps + ell, one);
    Ok(PlannerResult {
        r: r as u64,
        fraction,
        rate_lower,
        delta,
    })
}

/// One level of the genus-4 tower ledger, with `deg = [F'_i : F]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub i: u32,
    pub deg: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub deg_g_bound: Q,
    #[serde(serialize_with = "ser_ratio")]
    pub genus_bound: Q,
    pub n: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio_bound: Q,
    #[serde(serialize_with = "ser_ratio")]
    pub lambda: Q,
    /// Open interval of admissible `delta`.
    #[serde(serialize_with = "ser_ratio_pair")]
    pub delta_range: (Q, Q),
}

pub fn thm_ledger_row(i: u32, deg: u64) -> Result<LedgerRow, BoundsError> {
    if deg == 0 {
        return Err(BoundsError::PreconditionViolated("deg must be positive".into()));
    }
    let two_i = 1i128.checked_shl(i).filter(|&v| v > 0).ok_or(BoundsError::Overflow)?;
    let d = deg as i128;
    let n = deg.checked_mul(4).ok_or(BoundsError::Overflow)?;
    let lambda = Q::new(1, 8);
    let row = LedgerRow {
        i,
        deg,
        deg_g_bound: Q::new(d, two_i),
        genus_bound: Q::new(7, 2) * Q::from_integer(d) + Q::one(),
        n,
        ratio_bound: Q::new(7, 8) + Q::new(1, n as i128),
        lambda,
        delta_range: (Q::zero(), lambda),
    };
    assert!(row.genus_bound / Q::from_integer(n as i128) <= row.ratio_bound);
    Ok(row)
}

/// Ledger rows for levels `0..levels` with `deg_i = base_deg * 2^i`.
pub fn thm_ledger(levels: u32, base_deg: u64) -> Result<Vec<LedgerRow>, BoundsError> {
    (0..levels)
        .map(|i| {
            let deg = 1u64
                .checked_shl(i)
                .and_then(|s| s.checked_mul(base_deg))
                .ok_or(BoundsError::Overflow)?;
            thm_ledger_row(i, deg)
        })
        .collect()
}

/// q-ary entropy `H_q(x)` for `0 <= x <= 1 - 1/q`.
pub fn entropy_q(q: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let lg = |v: f64| v.ln() / q.ln();
    x * lg(q - 1.0) - x * lg(x) - (1.0 - x) * lg(1.0 - x)
}

/// Gilbert–Varshamov rate `1 - H_q(delta)`. Not part of the tower arithmetic;
/// included for comparison plots.
pub fn gv_rate(q: u64, delta: f64) -> Option<f64> {
    let qf = q as f64;
    (0.0..=1.0 - 1.0 / qf)
        .contains(&delta)
        .then(|| 1.0 - entropy_q(qf, delta))
}

/// Rate `lambda - delta` of a `(lambda, delta)`-bound, clipped at 0.
pub fn lambda_line(lambda: f64, delta: f64) -> f64 {
    (lambda - delta).max(0.0)
}

/// Parses `7/8`, `0.05`, `-3` or `1e-2` style input exactly.
pub fn parse_rational(s: &str) -> Result<Q, BoundsError> {
    let bad = || BoundsError::BadNumber(s.to_string());
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    let (mantissa, exp) = match t.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: i128 = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = |k: u32| 10i128.checked_pow(k).ok_or_else(bad);
    let mut value = if scale >= 0 {
        Q::from_integer(all.checked_mul(ten(scale as u32)?).ok_or_else(bad)?)
    } else {
        Q::new(all, ten(scale.unsigned_abs())?)
    };
    if neg {
        value = -value;
    }
    Ok(value)
}

fn ser_ratio<S: Serializer>(r: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_ratio_pair<S: Serializer>(r: &(Q, Q), s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("({}, {})", r.0, r.1))
}

#[derive(Serialize)]
struct IharaCsv {
    q: u64,
    dv_upper: String,
    serre_lower: String,
    gs_square_lower: String,
    bgs_cube_lower: String,
    tvz_lambda: String,
}

fn opt(r: Option<Real>) -> String {
    r.map(|v| v.to_string()).unwrap_or_default()
}

pub fn write_ihara_csv<W: io::Write>(w: W, rows: &[BoundReport]) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(IharaCsv {
            q: r.q,
            dv_upper: r.dv_upper.to_string(),
            serre_lower: r.serre_lower.to_string(),
            gs_square_lower: opt(r.gs_square_lower),
            bgs_cube_lower: opt(r.bgs_cube_lower),
            tvz_lambda: opt(r.tvz_lambda),
        })?;
    }
    out.flush()?;
    Ok(())
}

/// CSV for rows whose fields are all scalars or exact rationals.
pub fn write_csv<W: io::Write, T: Serialize>(w: W, rows: &[T]) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i128, d: i128) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(1 << 40), Some((2, 40)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert_eq!(ihara_bounds(6), Err(BoundsError::NotPrimePower(6)));
    }

    #[test]
    fn prime_power_oracle() {
        let mut pp = vec![false; 10_001];
        for p in (2..=10_000u64).filter(|&p| is_prime(p)) {
            let mut v = p;
            while v <= 10_000 {
                pp[v as usize] = true;
                v *= p;
            }
        }
        for n in 0..=10_000u64 {
            assert_eq!(prime_power(n).is_some(), pp[n as usize], "{n}");
        }
    }

    #[test]
    fn ihara_examples() {
        let r = ihara_bounds(49).unwrap();
        assert_eq!(r.dv_upper, Real::Exact(q(6, 1)));
        assert_eq!(r.gs_square_lower, Some(Real::Exact(q(6, 1))));
        assert_eq!(r.tvz_lambda, Some(Real::Exact(q(5, 6))));
        assert_eq!(r.bgs_cube_lower, None);

        let r = ihara_bounds(8).unwrap();
        assert_eq!(r.bgs_cube_lower, Some(Real::Exact(q(3, 2))));
        assert_eq!(r.gs_square_lower, None);
        assert_eq!(r.serre_lower, Real::Exact(q(3, 96)));
        assert_eq!(r.tvz_lambda, Some(Real::Exact(q(1, 3))));

        let r = ihara_bounds(2).unwrap();
        assert_eq!(r.serre_lower, Real::Exact(q(1, 96)));
        assert!((r.serre_lower.to_f64() - 0.0104).abs() < 1e-4);
        assert_eq!(r.tvz_lambda, None);

        let r = ihara_bounds(64).unwrap();
        assert_eq!(r.gs_square_lower, Some(Real::Exact(q(7, 1))));
        assert_eq!(r.bgs_cube_lower, Some(Real::Exact(q(5, 1))));
        assert_eq!(r.best_lower(), Real::Exact(q(7, 1)));

        let r = ihara_bounds(7).unwrap();
        assert!(matches!(r.dv_upper, Real::Approx(x) if (x - (7f64.sqrt() - 1.0)).abs() < 1e-11));
        assert_eq!(r.tvz_lambda, None);
    }

    #[test]
    fn lower_bounds_below_dv_exhaustive() {
        for n in 2..=10_000u64 {
            let Ok(r) = ihara_bounds(n) else { continue };
            let dv = r.dv_upper.to_f64();
            for lower in [Some(r.serre_lower), r.gs_square_lower, r.bgs_cube_lower]
                .into_iter()
                .flatten()
            {
                assert!(lower.to_f64() <= dv + 1e-12, "q = {n}");
            }
            if let (Some(Real::Exact(a)), Real::Exact(b)) = (r.gs_square_lower, r.dv_upper) {
                assert_eq!(a, b);
            }
            if let Some(l) = r.tvz_lambda {
                assert!(l.to_f64() > 0.0 && l.to_f64() < 1.0);
            }
        }
    }

    #[test]
    fn tower_examples() {
        let r = gs_tower_row(3, 2).unwrap();
        assert_eq!((r.n_lower, r.genus, r.ratio_lower), (19, 4, q(9, 2)));
        let r = gs_tower_row(4, 2).unwrap();
        assert_eq!((r.n_lower, r.genus, r.ratio_lower), (49, 9, q(16, 3)));
        assert_eq!(gs_tower_row(3, 1), Err(BoundsError::GenusZeroLevel { q: 3, i: 1 }));
        let r = gs_tower_row(3, 3).unwrap();
        assert_eq!((r.n_lower, r.genus), (55, 16));
        assert!(gs_tower_row(2, 4).is_err());
        assert!(gs_tower_row(6, 4).is_err());
        assert!(gs_tower_row(3, 0).is_err());
        assert_eq!(gs_tower_row(9, 200), Err(BoundsError::Overflow));
    }

    #[test]
    fn tower_ratio_at_least_q_minus_one() {
        for qv in [3u64, 4, 5, 7, 8, 9] {
            for i in 2..=20 {
                let r = gs_tower_row(qv, i).unwrap();
                assert!(r.ratio_lower >= Q::from_integer(qv as i128 - 1));
            }
        }
    }

    #[test]
    fn planner_examples() {
        let r = plan_rate_distance(1000, 10, q(7, 8), q(1, 20), q(1, 100)).unwrap();
        assert_eq!(r.r, 95);
        assert_eq!(r.rate_lower, q(13, 200));
        assert_eq!(r.delta, q(1, 20));
        assert!(q(19, 20) >= r.fraction && r.fraction > q(47, 50));

        assert!(matches!(
            plan_rate_distance(10, 10, q(1, 10), q(1, 2), q(1, 100)),
            Err(BoundsError::InfeasibleInterval { .. })
        ));
        assert!(matches!(
            plan_rate_distance(100, 3, q(1, 4), q(3, 4), q(1, 100)),
            Err(BoundsError::PreconditionViolated(_))
        ));
        assert!(plan_rate_distance(100, 3, q(1, 4), q(1, 4), q(3, 4)).is_err());
        assert!(plan_rate_distance(0, 3, q(1, 4), q(1, 4), q(1, 10)).is_err());
    }

    #[test]
    fn ledger_examples() {
        let r = thm_ledger_row(3, 64).unwrap();
        assert_eq!(
            (r.deg_g_bound, r.genus_bound, r.n, r.ratio_bound),
            (q(8, 1), q(225, 1), 256, q(225, 256))
        );
        assert_eq!(r.ratio_bound, q(7, 8) + q(1, 256));
        let r = thm_ledger_row(0, 1).unwrap();
        assert_eq!((r.n, r.genus_bound), (4, q(9, 2)));
        assert!(Q::from_integer(4) <= r.genus_bound);
        let rows = thm_ledger(6, 1).unwrap();
        assert_eq!(rows.iter().map(|r| r.deg).collect::<Vec<_>>(), vec![1, 2, 4, 8, 16, 32]);
        assert!(rows
            .iter()
            .all(|r| r.lambda == q(1, 8) && r.delta_range == (Q::zero(), q(1, 8))));
        assert!(rows.iter().all(|r| r.deg_g_bound == Q::one()));
    }

    #[test]
    fn ledger_ratio_hits_cap_exactly() {
        for deg in 1..500 {
            for i in 0..10 {
                let r = thm_ledger_row(i, deg).unwrap();
                assert_eq!(r.genus_bound / Q::from_integer(r.n as i128), r.ratio_bound);
            }
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("7/8").unwrap(), q(7, 8));
        assert_eq!(parse_rational("0.05").unwrap(), q(1, 20));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), q(-3, 1));
        assert_eq!(parse_rational("1e-2").unwrap(), q(1, 100));
        assert_eq!(parse_rational("2.5E1").unwrap(), q(25, 1));
        for s in ["", ".", "1/0", "abc", "1.2.3", "--1"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn gv_and_lines() {
        assert_eq!(gv_rate(2, 0.0), Some(1.0));
        assert!(gv_rate(2, 0.6).is_none());
        assert!((gv_rate(2, 0.5).unwrap()).abs() < 1e-12);
        let r = gv_rate(49, 0.1).unwrap();
        assert!(r > 0.0 && r < 1.0);
        assert_eq!(lambda_line(0.125, 0.2), 0.0);
        assert_eq!(lambda_line(0.125, 0.025), 0.1);
    }

    #[test]
    fn csv_output() {
        let mut buf = Vec::new();
        write_ihara_csv(&mut buf, &[ihara_bounds(49).unwrap(), ihara_bounds(2).unwrap()]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "q,dv_upper,serre_lower,gs_square_lower,bgs_cube_lower,tvz_lambda\n\
             49,6,0.0584865608762,6,,5/6\n\
             2,0.414213562373,1/96,,,\n"
        );
        let mut buf = Vec::new();
        write_csv(&mut buf, &[thm_ledger_row(3, 64).unwrap()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "i,deg,deg_g_bound,genus_bound,n,ratio_bound,lambda,delta_range\n3,64,8,225,256,225/256,1/8,\"(0, 1/8)\"\n"
        );
        let mut buf = Vec::new();
        write_csv(&mut buf, &[gs_tower_row(3, 2).unwrap()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "q,i,n_lower,genus,ratio_lower\n3,2,19,4,9/2\n"
        );
    }

    #[test]
    fn json_shapes() {
        let r = serde_json::to_value(ihara_bounds(49).unwrap()).unwrap();
        assert_eq!(r["tvz_lambda"]["exact"], "5/6");
        assert_eq!(r["dv_upper"]["value"], 6.0);
        assert!(r["bgs_cube_lower"].is_null());
        let r = serde_json::to_value(thm_ledger_row(3, 64).unwrap()).unwrap();
        assert_eq!(r["ratio_bound"], "225/256");
        assert_eq!(r["delta_range"], "(0, 1/8)");
    }

    proptest! {
        #[test]
        fn planner_window_holds(
            n in 1u64..100_000,
            deg_g in 1u64..1000,
            ell_n in 0i128..90,
            delta_n in 1i128..100,
            eps_n in 1i128..100,
        ) {
            let ell = q(ell_n, 100);
            let delta = q(delta_n, 100) * (Q::one() - ell);
            let eps = q(eps_n, 100) * (Q::one() - delta);
            match plan_rate_distance(n, deg_g, ell, delta, eps) {
                Ok(r) => {
                    let frac = Q::from_integer(r.r as i128 * deg_g as i128) / Q::from_integer(n as i128);
                    prop_assert!(Q::one() - delta >= frac && frac > Q::one() - delta - eps);
                    prop_assert_eq!(r.rate_lower + delta + eps + ell, Q::one());
                    prop_assert!(r.r >= 1);
                    // maximality
                    let next = Q::from_integer((r.r + 1) as i128 * deg_g as i128) / Q::from_integer(n as i128);
                    prop_assert!(next > Q::one() - delta);
                }
                Err(BoundsError::InfeasibleInterval { lower, upper }) => {
                    prop_assert!(upper.floor() <= lower);
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }

        #[test]
        fn parse_round_trip(n in -10_000i128..10_000, d in 1i128..10_000) {
            let r = q(n, d);
            prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}

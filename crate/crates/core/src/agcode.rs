//! Evaluation codes `C_L(D, G)`: generator matrices, designed parameters and
//! exact minimum distance by enumeration.
//!
//! On the hyperelliptic curve `G = m Q_inf` and `D` is a list of affine
//! places, so the supports are disjoint by construction. The genus-0
//! builder evaluates polynomials of degree `<= m` at points of `F_p`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveError, HyperCurve, Place};
use crate::ff::PrimeField;
use crate::linalg::{independent_rows, Matrix};

/// Default number of codeword evaluations allowed for exact distance.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("place {0} appears twice")]
    PlaceRepeated(String),
    #[error("the pole of x cannot be a coordinate of C_L(D, m Q_inf)")]
    PoleInSupport,
    #[error("deg G = {deg_g} must be below the length {n}")]
    DegreeTooLarge { deg_g: u64, n: u64 },
    #[error("generator rows must all have length {0}")]
    LengthMismatch(usize),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// A coordinate of an evaluation code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodePlace {
    /// The zero of `x - a` on the rational function field.
    Rational(u64),
    /// A rational place of the hyperelliptic curve.
    Curve(Place),
}

impl fmt::Display for CodePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodePlace::Rational(a) => write!(f, "x={a}"),
            CodePlace::Curve(p) => p.fmt(f),
        }
    }
}

/// Linear code given by independent generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: PrimeField,
    rows: Matrix,
    places: Vec<CodePlace>,
    deg_g: Option<u64>,
}

impl LinearCode {
    /// Keeps a maximal independent subset of `rows`.
    pub fn from_rows(
        field: PrimeField,
        rows: Matrix,
        places: Vec<CodePlace>,
        deg_g: Option<u64>,
    ) -> Result<Self, CodeError> {
        let n = places.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CodeError::LengthMismatch(n));
        }
        let rows = independent_rows(field, &rows);
        Ok(Self {
            field,
            rows,
            places,
            deg_g,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn p(&self) -> u64 {
        self.field.modulus()
    }
    pub fn n(&self) -> usize {
        self.places.len()
    }
    pub fn k(&self) -> usize {
        self.rows.len()
    }
    pub fn rows(&self) -> &Matrix {
        &self.rows
    }
    pub fn places(&self) -> &[CodePlace] {
        &self.places
    }
    pub fn deg_g(&self) -> Option<u64> {
        self.deg_g
    }

    /// `sum msg_i * row_i`.
    pub fn encode(&self, msg: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut word = vec![0; self.n()];
        for (c, row) in msg.iter().zip(&self.rows) {
            for (w, &r) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(*c, r));
            }
        }
        word
    }

    /// Rows with columns rearranged so that column `i` holds old column
    /// `images[i]`.
    pub fn permuted_rows(&self, images: &[usize]) -> Matrix {
        self.rows
            .iter()
            .map(|row| images.iter().map(|&j| row[j]).collect())
            .collect()
    }

    /// Same code with its coordinates reordered as in [`Self::permuted_rows`].
    pub fn permuted(&self, images: &[usize]) -> LinearCode {
        LinearCode {
            field: self.field,
            rows: self.permuted_rows(images),
            places: images.iter().map(|&j| self.places[j]).collect(),
            deg_g: self.deg_g,
        }
    }

    /// One line per row, space-separated residues.
    pub fn generator_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn record(&self, distance: MinDistance) -> CodeRecord {
        CodeRecord {
            p: self.p(),
            n: self.n(),
            k: self.k(),
            deg_g: self.deg_g,
            distance,
            places: self.places.iter().map(|p| p.to_string()).collect(),
        }
    }
}

/// Structured summary of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub deg_g: Option<u64>,
    pub distance: MinDistance,
    pub places: Vec<String>,
}

/// Parameters guaranteed by the Riemann-Roch and Goppa bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignedParams {
    pub k_lower: u64,
    pub k_exact: bool,
    pub d_lower: u64,
}

/// `k >= deg G + 1 - g` (exact when `2g - 2 < deg G`) and `d >= n - deg G`,
/// both for `deg G < n`.
pub fn designed_parameters(n: u64, deg_g: u64, genus: u64) -> Result<DesignedParams, CodeError> {
    if deg_g >= n {
        return Err(CodeError::DegreeTooLarge { deg_g, n });
    }
    Ok(DesignedParams {
        k_lower: (deg_g + 1).saturating_sub(genus),
        k_exact: (2 * genus as i64 - 2) < deg_g as i64,
        d_lower: n - deg_g,
    })
}

fn check_distinct<T: Copy + Eq + std::hash::Hash + fmt::Display>(items: &[T]) -> Result<(), CodeError> {
    let mut seen = HashSet::new();
    for &it in items {
        if !seen.insert(it) {
            return Err(CodeError::PlaceRepeated(it.to_string()));
        }
    }
    Ok(())
}

/// `C_L(P_1 + ... + P_n, m Q_inf)` on the hyperelliptic curve.
pub fn build_ag_code(curve: &HyperCurve, places: &[Place], m: u64) -> Result<LinearCode, CodeError> {
    if places.contains(&Place::Infinity) {
        return Err(CodeError::PoleInSupport);
    }
    check_distinct(places)?;
    if let Some(bad) = places.iter().find(|q| !curve.contains(q)) {
        return Err(CurveError::NotOnCurve(*bad).into());
    }
    let rows = curve
        .rr_basis(m)
        .into_iter()
        .map(|f| {
            places
                .iter()
                .map(|q| curve.evaluate(f, q))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Matrix, _>>()?;
    LinearCode::from_rows(
        curve.field(),
        rows,
        places.iter().map(|&q| CodePlace::Curve(q)).collect(),
        Some(m),
    )
}

/// Polynomials of degree `<= m` evaluated at the given points of `F_p`.
pub fn build_rational_code(field: PrimeField, points: &[u64], m: u64) -> Result<LinearCode, CodeError> {
    check_distinct(points)?;
    let rows = (0..=m)
        .map(|i| points.iter().map(|&a| field.pow(a, i)).collect())
        .collect();
    LinearCode::from_rows(
        field,
        rows,
        points.iter().map(|&a| CodePlace::Rational(a)).collect(),
        Some(m),
    )
}

/// Reed-Solomon `[p, m+1, p-m]` code on the points `0, 1, ..., p-1`.
pub fn build_rs_demo(field: PrimeField, m: u64) -> Result<LinearCode, CodeError> {
    let p = field.modulus();
    if m >= p {
        return Err(CodeError::DegreeTooLarge { deg_g: m, n: p });
    }
    let points: Vec<u64> = (0..p).collect();
    build_rational_code(field, &points, m)
}

/// Minimum distance, tagged by how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinDistance {
    Exact(u64),
    /// Designed bound `n - deg G` (1 when `deg G` is unknown or too large).
    LowerBoundOnly(u64),
}

impl MinDistance {
    pub fn value(&self) -> u64 {
        match *self {
            MinDistance::Exact(d) | MinDistance::LowerBoundOnly(d) => d,
        }
    }
}

fn weight(word: &[u64]) -> u64 {
    word.iter().filter(|&&c| c != 0).count() as u64
}

fn add_row(field: PrimeField, word: &mut [u64], row: &[u64]) {
    for (w, &r) in word.iter_mut().zip(row) {
        *w = field.add(*w, r);
    }
}

/// Minimum weight over `base + span(free)`, walking the coefficients like an
/// odometer so each step costs about one row addition.
fn min_weight_coset(field: PrimeField, base: Vec<u64>, free: &[Vec<u64>]) -> u64 {
    let p = field.modulus();
    let mut word = base;
    let mut digits = vec![0u64; free.len()];
    let mut best = weight(&word);
    loop {
        let mut i = 0;
        loop {
            if i == free.len() {
                return best;
            }
            add_row(field, &mut word, &free[i]);
            digits[i] += 1;
            if digits[i] == p {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        best = best.min(weight(&word));
    }
}

/// Exact minimum distance when the `p^k - 1` nonzero codewords fit in
/// `budget`, otherwise the designed lower bound.
pub fn exact_min_distance(code: &LinearCode, budget: u128) -> MinDistance {
    let n = code.n() as u64;
    let k = code.k() as u32;
    let words = (code.p() as u128).checked_pow(k).map(|w| w - 1);
    if k == 0 || words.is_none_or(|w| w > budget) {
        let bound = code.deg_g.filter(|&g| g < n).map_or(1, |g| n - g);
        return MinDistance::LowerBoundOnly(bound);
    }
    // One representative per projective point: the first nonzero
    // coefficient is 1.
    let field = code.field;
    let rows = &code.rows;
    let k = rows.len();
    let mut tasks: Vec<(Vec<u64>, usize)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            for v in 0..code.p() {
                let mut base = rows[lead].clone();
                for (b, &r) in base.iter_mut().zip(&rows[lead + 1]) {
                    *b = field.add(*b, field.mul(v, r));
                }
                tasks.push((base, lead + 2));
            }
        } else {
            tasks.push((rows[lead].clone(), k));
        }
    }
    let run = |(base, from): (Vec<u64>, usize)| min_weight_coset(field, base, &rows[from..]);
    #[cfg(feature = "parallel")]
    let d = {
        use rayon::prelude::*;
        tasks.into_par_iter().map(run).min()
    };
    #[cfg(not(feature = "parallel"))]
    let d = tasks.into_iter().map(run).min();
    MinDistance::Exact(d.expect("k >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::testutil::default_curve;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Oracle: every message vector, encoded, nonzero words only.
    fn brute_force_distance(code: &LinearCode) -> u64 {
        let p = code.p();
        let k = code.k() as u32;
        let mut best = u64::MAX;
        for idx in 1..p.pow(k) {
            let msg: Vec<u64> = (0..k).map(|i| (idx / p.pow(i)) % p).collect();
            best = best.min(weight(&code.encode(&msg)));
        }
        best
    }

    #[test]
    fn rs_demo_parameters() {
        let c = build_rs_demo(f(5), 2).unwrap();
        assert_eq!((c.n(), c.k()), (5, 3));
        assert_eq!(brute_force_distance(&c), 3);
        assert_eq!(exact_min_distance(&c, DEFAULT_BUDGET), MinDistance::Exact(3));
        let rep = build_rs_demo(f(7), 0).unwrap();
        assert_eq!((rep.n(), rep.k()), (7, 1));
        assert_eq!(exact_min_distance(&rep, DEFAULT_BUDGET), MinDistance::Exact(7));
        assert_eq!(
            build_rs_demo(f(5), 5),
            Err(CodeError::DegreeTooLarge { deg_g: 5, n: 5 })
        );
    }

    /// Every `k` columns independent, i.e. `d = n - k + 1`.
    fn all_k_column_sets_independent(code: &LinearCode) -> bool {
        let (n, k) = (code.n(), code.k());
        let mut cols: Vec<usize> = (0..k).collect();
        loop {
            let sub: Vec<Vec<u64>> = code
                .rows()
                .iter()
                .map(|r| cols.iter().map(|&c| r[c]).collect())
                .collect();
            if rank(code.field(), &sub) != k {
                return false;
            }
            let Some(i) = (0..k).rev().find(|&i| cols[i] < n - k + i) else {
                return true;
            };
            cols[i] += 1;
            for j in i + 1..k {
                cols[j] = cols[j - 1] + 1;
            }
        }
    }

    #[test]
    fn rs_demo_is_mds() {
        for p in [3u64, 5, 7, 11, 13] {
            for m in 0..p {
                let c = build_rs_demo(f(p), m).unwrap();
                match exact_min_distance(&c, DEFAULT_BUDGET) {
                    MinDistance::Exact(d) => assert_eq!(d, p - m, "p = {p}, m = {m}"),
                    MinDistance::LowerBoundOnly(_) => assert!(all_k_column_sets_independent(&c)),
                }
                if p <= 7 {
                    assert_eq!(brute_force_distance(&c), p - m);
                }
            }
        }
    }

    #[test]
    fn budget_gate() {
        let c = build_rs_demo(f(13), 6).unwrap();
        assert_eq!(exact_min_distance(&c, 1000), MinDistance::LowerBoundOnly(7));
        // 5^3 - 1 = 124 nonzero words
        let c = build_rs_demo(f(5), 2).unwrap();
        assert_eq!(exact_min_distance(&c, 124), MinDistance::Exact(3));
        assert_eq!(exact_min_distance(&c, 123), MinDistance::LowerBoundOnly(3));
    }

    #[test]
    fn designed_examples() {
        assert_eq!(
            designed_parameters(30, 9, 4),
            Ok(DesignedParams {
                k_lower: 6,
                k_exact: true,
                d_lower: 21
            })
        );
        let d = designed_parameters(12, 0, 0).unwrap();
        assert_eq!((d.k_lower, d.d_lower), (1, 12));
        assert_eq!(
            designed_parameters(10, 10, 1),
            Err(CodeError::DegreeTooLarge { deg_g: 10, n: 10 })
        );
        let d = designed_parameters(30, 5, 4).unwrap();
        assert_eq!((d.k_lower, d.k_exact), (2, false));
    }

    #[test]
    fn ag_code_dimensions_on_worked_curves() {
        for p in [13, 17, 19, 23] {
            let curve = default_curve(p);
            let places = curve.affine_places();
            let n = places.len() as u64;
            for m in 7..n {
                let code = build_ag_code(&curve, &places, m).unwrap();
                assert_eq!(code.k() as u64, m - 3, "p = {p}, m = {m}");
            }
            let c0 = build_ag_code(&curve, &places, 0).unwrap();
            assert_eq!(c0.k(), 1);
            assert!(c0.rows()[0].iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn f13_curve_code_m9() {
        let curve = default_curve(13);
        let places = curve.affine_places();
        let code = build_ag_code(&curve, &places, 9).unwrap();
        assert_eq!((code.n(), code.k()), (13, 6));
        let designed = designed_parameters(13, 9, 4).unwrap();
        assert_eq!(designed.k_lower, 6);
        assert!(designed.k_exact);
    }

    #[test]
    fn f13_curve_code_m7_exact_distance() {
        let curve = default_curve(13);
        let places = curve.affine_places();
        let code = build_ag_code(&curve, &places, 7).unwrap();
        assert_eq!(code.k(), 4);
        let d = exact_min_distance(&code, DEFAULT_BUDGET);
        assert_eq!(d, MinDistance::Exact(brute_force_distance(&code)));
        let d = d.value();
        assert!((13 - 7..=13 - 4 + 1).contains(&d), "d = {d}");
    }

    #[test]
    fn large_m_reports_rank() {
        let curve = default_curve(13);
        let places = curve.split_places();
        let code = build_ag_code(&curve, &places, 20).unwrap();
        let raw: Vec<Vec<u64>> = curve
            .rr_basis(20)
            .into_iter()
            .map(|m| places.iter().map(|q| curve.evaluate(m, q).unwrap()).collect())
            .collect();
        assert_eq!(code.k(), rank(curve.field(), &raw));
        assert_eq!(code.k(), places.len());
    }

    #[test]
    fn ag_code_input_errors() {
        let curve = default_curve(13);
        let mut places = curve.affine_places();
        assert_eq!(
            build_ag_code(&curve, &[Place::Infinity], 3),
            Err(CodeError::PoleInSupport)
        );
        places.push(places[0]);
        assert!(matches!(
            build_ag_code(&curve, &places, 3),
            Err(CodeError::PlaceRepeated(_))
        ));
        assert!(matches!(
            build_ag_code(&curve, &[Place::Affine { x: 1, y: 1 }], 3),
            Err(CodeError::Curve(CurveError::NotOnCurve(_)))
        ));
    }

    #[test]
    fn permuted_places_give_permuted_code() {
        let curve = default_curve(17);
        let places = curve.affine_places();
        let code = build_ag_code(&curve, &places, 8).unwrap();
        let images: Vec<usize> = (0..places.len()).rev().collect();
        let shuffled: Vec<Place> = images.iter().map(|&i| places[i]).collect();
        let direct = build_ag_code(&curve, &shuffled, 8).unwrap();
        assert_eq!(direct.rows(), &code.permuted_rows(&images));
        assert_eq!(direct.places(), code.permuted(&images).places());
    }

    #[test]
    fn text_and_record() {
        let c = build_rs_demo(f(3), 1).unwrap();
        assert_eq!(c.generator_text(), "1 1 1\n0 1 2\n");
        let rec = c.record(exact_min_distance(&c, DEFAULT_BUDGET));
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"p":3,"n":3,"k":2,"deg_g":1,"distance":{"exact":2},"places":["x=0","x=1","x=2"]}"#
        );
    }
}

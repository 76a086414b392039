//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the functions stay callable from native tests.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use qtag_core::bounds::{gv_rate, ihara_bounds, lambda_line};
use qtag_core::curve::{make_curve, Decomposition, Place};
use qtag_core::poly::{render_factored, seed_roots};
use qtag_core::seeds::{scan_prime, ScanOptions, ScanRecord};
use qtag_core::{build_seed_poly, PrimeField, SeedTuple};

/// Largest prime the page will draw; the QR map and point cloud are `O(p)`.
pub const MAX_PRIME: u64 = 5003;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(error)
}

fn error(e: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": e.to_string() }).to_string()
}

fn checked_field(p: u64) -> Result<PrimeField, String> {
    if p > MAX_PRIME {
        return Err(format!("p must be at most {MAX_PRIME}"));
    }
    PrimeField::new(p).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SeedView {
    h: Option<String>,
    #[serde(flatten)]
    record: ScanRecord,
    /// Legendre symbol of `h(a)` for `a = 0..p`, when `h` exists.
    character: Vec<i8>,
}

/// Witness search for the seed polynomial of `tuple` (e.g. `"2,3,4,5"`) over
/// `F_p`, plus the quadratic character of `h` on all of `F_p`.
#[wasm_bindgen]
pub fn seed_certificate(p: u32, tuple: &str) -> String {
    let run = || -> Result<SeedView, String> {
        let p = p as u64;
        let field = checked_field(p)?;
        let tuple: SeedTuple = tuple.parse()?;
        let report = scan_prime(p, &ScanOptions { tuple, fallback: false });
        let (h, character) = match build_seed_poly(field, tuple) {
            Ok(h) => (
                seed_roots(field, tuple).ok().map(|r| render_factored(p, &r)),
                (0..p).map(|a| field.legendre(h.eval(a))).collect(),
            ),
            Err(_) => (None, Vec::new()),
        };
        Ok(SeedView {
            h,
            record: ScanRecord::from(&report),
            character,
        })
    };
    run().map_or_else(error, |v| to_json(&v))
}

#[derive(Serialize)]
struct CurveView {
    p: u64,
    h: String,
    points: Vec<[u64; 2]>,
    split_x: Vec<u64>,
    ramified_x: Vec<u64>,
    inert_x: Vec<u64>,
}

/// Affine points of `y^2 = h(x)` for a scatter plot, with the decomposition
/// of every `x`.
#[wasm_bindgen]
pub fn curve_points(p: u32, tuple: &str) -> String {
    let run = || -> Result<CurveView, String> {
        let field = checked_field(p as u64)?;
        let tuple: SeedTuple = tuple.parse()?;
        let h = build_seed_poly(field, tuple).map_err(|e| e.to_string())?;
        let curve = make_curve(&h).map_err(|e| e.to_string())?;
        let xs = |d: Decomposition| (0..curve.p()).filter(|&a| curve.classify_x(a) == d).collect::<Vec<_>>();
        Ok(CurveView {
            p: curve.p(),
            h: curve.h().to_string(),
            points: curve
                .affine_places()
                .into_iter()
                .filter_map(|q| match q {
                    Place::Affine { x, y } => Some([x, y]),
                    Place::Infinity => None,
                })
                .collect(),
            split_x: xs(Decomposition::Split),
            ramified_x: xs(Decomposition::Ramified),
            inert_x: xs(Decomposition::Inert),
        })
    };
    run().map_or_else(error, |v| to_json(&v))
}

#[derive(Serialize)]
struct BoundView {
    q: u64,
    tvz_lambda: Option<f64>,
    /// `(delta, rate)` samples.
    gv: Vec<[f64; 2]>,
    tvz: Vec<[f64; 2]>,
    eighth: Vec<[f64; 2]>,
}

/// Rate/distance curves on `[0, 1]`: Gilbert–Varshamov, the line
/// `lambda - delta` for the best known lower bound on `A(q)`, and the line
/// `1/8 - delta`.
#[wasm_bindgen]
pub fn bound_curves(q: u32, samples: u32) -> String {
    let run = || -> Result<BoundView, String> {
        let q = q as u64;
        let report = ihara_bounds(q).map_err(|e| e.to_string())?;
        let lambda = report.tvz_lambda.map(|l| l.to_f64());
        let samples = samples.clamp(2, 2000);
        let deltas: Vec<f64> = (0..samples).map(|i| i as f64 / (samples - 1) as f64).collect();
        Ok(BoundView {
            q,
            tvz_lambda: lambda,
            gv: deltas.iter().filter_map(|&d| gv_rate(q, d).map(|r| [d, r])).collect(),
            tvz: lambda
                .map(|l| {
                    deltas
                        .iter()
                        .filter(|&&d| d <= l)
                        .map(|&d| [d, lambda_line(l, d)])
                        .collect()
                })
                .unwrap_or_default(),
            eighth: deltas
                .iter()
                .filter(|&&d| d <= 0.125)
                .map(|&d| [d, lambda_line(0.125, d)])
                .collect(),
        })
    };
    run().map_or_else(error, |v| to_json(&v))
}

//! Dense univariate polynomials over `F_p` and the degree-9 seed family
//! `h(t) = (t+1) * prod (t - a_i)(t - a_i^-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::PrimeField;

/// Above this modulus split-separability is decided algebraically instead of
/// by collecting roots.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("repeated root {root} in the seed polynomial over F_{p}")]
    RepeatedRoot { p: u64, root: u64 },
    #[error("seed element {0} is zero modulo p")]
    ZeroElement(u64),
    #[error("F_{0} is too small to host nine distinct roots")]
    FieldTooSmall(u64),
}

/// Polynomial with coefficients lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: PrimeField, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let p = field.modulus();
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        trim(&mut coeffs);
        Self { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self { field, coeffs: vec![1] }
    }

    /// The monic polynomial `prod (t - r)`; duplicates are kept.
    pub fn from_roots(field: PrimeField, roots: &[u64]) -> Self {
        let mut coeffs = vec![1u64];
        for &r in roots {
            let r = r % field.modulus();
            // multiply by (t - r)
            coeffs.push(0);
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 { coeffs[i - 1] } else { 0 };
                coeffs[i] = field.sub(lower, field.mul(r, coeffs[i]));
            }
        }
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Horner evaluation.
    pub fn eval(&self, a: u64) -> u64 {
        let f = self.field;
        let a = a % f.modulus();
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, i as u64 % f.modulus()));
        Self::new(f, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            f.sub(a, b)
        });
        Self::new(f, coeffs)
    }

    /// Remainder of division by a nonzero divisor.
    pub fn rem(&self, divisor: &Self) -> Self {
        let f = self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let c = f.mul(r[top], lead_inv);
            if c != 0 {
                let shift = top - dd;
                for (i, &d) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] = f.sub(r[shift + i], f.mul(c, d));
                }
            }
            r.pop();
            trim(&mut r);
        }
        Self::new(f, r)
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        Self::new(self.field, self.coeffs.iter().map(|&c| self.field.mul(c, inv)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `t^e mod self` by square-and-multiply.
    pub fn pow_t_mod(&self, mut e: u64) -> Self {
        let f = self.field;
        let mut acc = Self::one(f).rem(self);
        let mut base = Self::new(f, [0, 1]).rem(self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(self);
            }
            base = base.mul(&base).rem(self);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p`, ascending, by evaluating at every residue.
    pub fn roots(&self) -> Vec<u64> {
        (0..self.modulus()).filter(|&a| self.eval(a) == 0).collect()
    }

    /// `gcd(h, h') = 1`.
    pub fn is_separable(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Split into distinct linear factors, decided by counting roots.
    pub fn is_split_separable_exhaustive(&self) -> bool {
        match self.degree() {
            None => false,
            Some(d) => self.roots().len() == d,
        }
    }

    /// Split into distinct linear factors, decided by `gcd(h, h') = 1` and
    /// `deg gcd(h, t^p - t) = deg h`.
    pub fn is_split_separable_algebraic(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return true;
        }
        if !self.is_separable() {
            return false;
        }
        let t = Self::new(self.field, [0, 1]);
        let frob = self.pow_t_mod(self.modulus()).sub(&t);
        self.gcd(&frob).degree() == Some(d)
    }

    pub fn is_split_separable(&self) -> bool {
        if self.modulus() <= EXHAUSTIVE_ROOT_LIMIT {
            self.is_split_separable_exhaustive()
        } else {
            self.is_split_separable_algebraic()
        }
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly(F_{}; {})", self.modulus(), self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Renders `prod (t - r)` the way the factorisations are usually written:
/// `p - 1` shows as `(t+1)` and `0` as `t`.
pub fn render_factored(p: u64, roots: &[u64]) -> String {
    roots
        .iter()
        .map(|&r| match r % p {
            0 => "t".to_string(),
            r if r == p - 1 => "(t+1)".to_string(),
            r => format!("(t-{r})"),
        })
        .collect()
}

/// Four seed elements `a_1..a_4` for the degree-9 family. Values are taken
/// modulo the prime at build time, so one tuple can be reused across primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedTuple(pub [u64; 4]);

impl SeedTuple {
    pub const DEFAULT: SeedTuple = SeedTuple([2, 3, 4, 5]);

    pub fn values(&self) -> [u64; 4] {
        self.0
    }
}

impl fmt::Display for SeedTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl std::str::FromStr for SeedTuple {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<u64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad tuple entry {t:?}: {e}"))
            })
            .collect::<Result<_, _>>()?;
        let arr: [u64; 4] = parts
            .try_into()
            .map_err(|v: Vec<u64>| format!("expected 4 comma-separated values, got {}", v.len()))?;
        Ok(SeedTuple(arr))
    }
}

/// Roots of the seed polynomial in display order
/// `-1, a_1, a_1^-1, ..., a_4, a_4^-1`, checked pairwise distinct.
pub fn seed_roots(field: PrimeField, tuple: SeedTuple) -> Result<Vec<u64>, PolyError> {
    let p = field.modulus();
    if p < 11 {
        return Err(PolyError::FieldTooSmall(p));
    }
    let mut roots = vec![field.minus_one()];
    for a in tuple.values() {
        let a = a % p;
        let inv = field.inv(a).map_err(|_| PolyError::ZeroElement(a))?;
        roots.push(a);
        roots.push(inv);
    }
    let mut seen = roots.clone();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(PolyError::RepeatedRoot { p, root: w[0] });
    }
    Ok(roots)
}

/// The monic degree-9 seed polynomial with root set `{-1} + {a_i, a_i^-1}`.
pub fn build_seed_poly(field: PrimeField, tuple: SeedTuple) -> Result<Poly, PolyError> {
    let roots = seed_roots(field, tuple)?;
    Ok(Poly::from_roots(field, &roots))
}

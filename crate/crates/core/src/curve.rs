//! The function field `F = F_p(x, y)` with `y^2 = h(x)`, `deg h = 9`.
//!
//! `F/F_p(x)` is a degree-2 Kummer extension of genus 4. The pole of `x` is
//! totally ramified, giving a single rational place `Q_inf`, and the
//! Weierstrass semigroup there is generated by the pole orders of `x` (2) and
//! `y` (9). Hence `{x^i y^j : j <= 1, 2i + 9j <= m}` is a basis of
//! `L(m Q_inf)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{FieldError, PrimeField};
use crate::poly::Poly;

pub const GENUS: u32 = 4;
pub const H_DEGREE: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("h must have degree 9, got {0:?}")]
    WrongDegree(Option<usize>),
    #[error("h must be monic")]
    NotMonic,
    #[error("h has a repeated factor")]
    NotSeparable,
    #[error("the function has a pole at {0}")]
    PoleAtPlace(Place),
    #[error("{0} is not a point of the curve")]
    NotOnCurve(Place),
    #[error("cannot parse place {0:?}")]
    BadPlace(String),
}

/// Decomposition of the base place `x = a` in `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decomposition {
    /// Two rational places `(a, b)`, `(a, -b)`.
    Split,
    /// `h(a) = 0`: one rational place `(a, 0)`.
    Ramified,
    /// No rational place above `a`.
    Inert,
}

/// Rational place of `F`. The derived order puts `Infinity` first, then
/// affine places by `x` and, for a split `x`, the branch `y <= (p-1)/2` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinity,
    Affine { x: u64, y: u64 },
}

impl Place {
    pub fn is_affine(&self) -> bool {
        matches!(self, Place::Affine { .. })
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::Affine { x, y } => write!(f, "{x},{y}"),
        }
    }
}

impl FromStr for Place {
    type Err = CurveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Place::Infinity);
        }
        let bad = || CurveError::BadPlace(s.to_string());
        let (x, y) = s.split_once(',').ok_or_else(bad)?;
        Ok(Place::Affine {
            x: x.trim().parse().map_err(|_| bad())?,
            y: y.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Divisor supported on rational places.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `m Q_inf`.
    pub fn at_infinity(m: i64) -> Self {
        let mut d = Self::zero();
        d.add_place(Place::Infinity, m);
        d
    }

    /// `P_1 + ... + P_n`.
    pub fn sum_of(places: &[Place]) -> Self {
        let mut d = Self::zero();
        for &p in places {
            d.add_place(p, 1);
        }
        d
    }

    pub fn add_place(&mut self, place: Place, mult: i64) {
        let e = self.terms.entry(place).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&place);
        }
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.terms.get(place).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.terms.keys()
    }

    pub fn disjoint_from(&self, other: &Divisor) -> bool {
        self.support().all(|p| other.multiplicity(p) == 0)
    }
}

impl std::ops::Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&p, &m) in &rhs.terms {
            out.add_place(p, m);
        }
        out
    }
}

/// The monomial `x^i y^j` (`j <= 1`) of `L(m Q_inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub x_exp: u32,
    pub y_exp: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x_exp: 0, y_exp: 0 };

    pub fn pole_order(&self) -> u64 {
        2 * self.x_exp as u64 + H_DEGREE as u64 * self.y_exp as u64
    }

    pub fn is_constant(&self) -> bool {
        *self == Self::ONE
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x_exp, self.y_exp) {
            (0, 0) => f.write_str("1"),
            (0, _) => f.write_str("y"),
            (1, 0) => f.write_str("x"),
            (1, _) => f.write_str("x*y"),
            (i, 0) => write!(f, "x^{i}"),
            (i, _) => write!(f, "x^{i}*y"),
        }
    }
}

/// A validated curve `y^2 = h(x)` with `h` monic, separable, of degree 9.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperCurve {
    h: Poly,
    roots: Vec<u64>,
}

pub fn make_curve(h: &Poly) -> Result<HyperCurve, CurveError> {
    if h.modulus() == 2 {
        return Err(CurveError::EvenCharacteristic);
    }
    if h.degree() != Some(H_DEGREE) {
        return Err(CurveError::WrongDegree(h.degree()));
    }
    if !h.is_monic() {
        return Err(CurveError::NotMonic);
    }
    if !h.is_separable() {
        return Err(CurveError::NotSeparable);
    }
    Ok(HyperCurve {
        h: h.clone(),
        roots: h.roots(),
    })
}

impl HyperCurve {
    pub fn field(&self) -> PrimeField {
        self.h.field()
    }

    pub fn p(&self) -> u64 {
        self.h.modulus()
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn genus(&self) -> u32 {
        GENUS
    }

    /// Rational roots of `h`, ascending.
    pub fn roots(&self) -> &[u64] {
        &self.roots
    }

    /// Rational places of `F_p(x)` ramified in `F`: the roots of `h` and the
    /// pole of `x` (`None`).
    pub fn ramified_base_places(&self) -> Vec<Option<u64>> {
        self.roots
            .iter()
            .map(|&r| Some(r))
            .chain(std::iter::once(None))
            .collect()
    }

    pub fn classify_x(&self, a: u64) -> Decomposition {
        match self.field().legendre(self.h.eval(a)) {
            0 => Decomposition::Ramified,
            1 => Decomposition::Split,
            _ => Decomposition::Inert,
        }
    }

    /// Rational places above `x = a`, low branch first.
    pub fn places_over(&self, a: u64) -> Vec<Place> {
        let a = a % self.p();
        let v = self.h.eval(a);
        match self.field().sqrt(v) {
            Some(0) => vec![Place::Affine { x: a, y: 0 }],
            Some(b) => vec![Place::Affine { x: a, y: b }, Place::Affine { x: a, y: self.p() - b }],
            None => Vec::new(),
        }
    }

    /// `Infinity`, then affine places ascending in `x`.
    pub fn rational_places(&self) -> Vec<Place> {
        std::iter::once(Place::Infinity)
            .chain((0..self.p()).flat_map(|a| self.places_over(a)))
            .collect()
    }

    pub fn affine_places(&self) -> Vec<Place> {
        (0..self.p()).flat_map(|a| self.places_over(a)).collect()
    }

    /// Affine places over split `x` values only.
    pub fn split_places(&self) -> Vec<Place> {
        (0..self.p())
            .filter(|&a| self.classify_x(a) == Decomposition::Split)
            .flat_map(|a| self.places_over(a))
            .collect()
    }

    pub fn contains(&self, place: &Place) -> bool {
        match *place {
            Place::Infinity => true,
            Place::Affine { x, y } => {
                let f = self.field();
                x < self.p() && y < self.p() && f.mul(y, y) == self.h.eval(x)
            }
        }
    }

    /// Monomial basis of `L(m Q_inf)`, ordered by pole order.
    pub fn rr_basis(&self, m: u64) -> Vec<Monomial> {
        rr_basis(m)
    }

    /// `a^i b^j` at `(a, b)`; only constants are finite at `Infinity`.
    pub fn evaluate(&self, f: Monomial, place: &Place) -> Result<u64, CurveError> {
        match *place {
            Place::Infinity if f.is_constant() => Ok(1),
            Place::Infinity => Err(CurveError::PoleAtPlace(*place)),
            Place::Affine { x, y } => {
                if !self.contains(place) {
                    return Err(CurveError::NotOnCurve(*place));
                }
                let fld = self.field();
                Ok(fld.mul(fld.pow(x, f.x_exp as u64), fld.pow(y, f.y_exp as u64)))
            }
        }
    }
}

/// Monomial basis of `L(m Q_inf)` on any curve `y^2 = h(x)`, `deg h = 9`.
pub fn rr_basis(m: u64) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..=m / 2)
        .map(|i| Monomial {
            x_exp: i as u32,
            y_exp: 0,
        })
        .chain((0..).map_while(|i: u64| {
            (2 * i + H_DEGREE as u64 <= m).then_some(Monomial {
                x_exp: i as u32,
                y_exp: 1,
            })
        }))
        .collect();
    out.sort_by_key(Monomial::pole_order);
    out
}

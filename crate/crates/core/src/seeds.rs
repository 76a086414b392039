//! Certificates for the degree-9 seed hypothesis: a monic `h` that splits into
//! nine distinct linear factors over `F_p`, together with two distinct
//! witnesses `a`, `b` whose values `h(a)`, `h(b)` are nonzero squares.
//!
//! Witnesses are searched in ascending order starting from 0, so every search
//! result is reproducible.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{is_prime, FieldError, PrimeField};
use crate::poly::{build_seed_poly, render_factored, seed_roots, Poly, PolyError, SeedTuple};

/// Default upper limit for [`exhaustive_seed_search`]; the candidate count
/// is `C(p, 9)`.
pub const EXHAUSTIVE_SEARCH_CAP: u64 = 31;

/// Smallest prime for which the six reduced Legendre products are available.
pub const REDUCTION_MIN_PRIME: u64 = 37;

/// Bound on the lexicographic tuples tried after the explicit fallbacks.
pub const FALLBACK_LIMIT: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Alpha,
    Beta,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Witness::Alpha => "alpha",
            Witness::Beta => "beta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("h is not monic of degree 9")]
    WrongShape,
    #[error("h does not split into nine distinct linear factors over F_{0}")]
    NotSeparableSplit(u64),
    #[error("witness {0} is a root of h or h({0}) is not a square")]
    WitnessInvalid(Witness),
    #[error("the two witnesses coincide")]
    WitnessesEqual,
    #[error("F_{0} has fewer than 11 elements")]
    FieldTooSmall(u64),
    #[error("p = {p} exceeds the exhaustive search cap {cap}")]
    CapExceeded { p: u64, cap: u64 },
    #[error("j = {0} is outside 2..=7")]
    JOutOfRange(u64),
    #[error("reduced Legendre products need p >= 37, got {0}")]
    PrimeTooSmall(u64),
    #[error("h(p - {0}) vanishes")]
    DegenerateEvaluation(u64),
    #[error("modulus and residue are not coprime")]
    NotCoprime,
}

/// Checked evidence for the seed hypothesis. Only constructed through
/// [`verify_witnesses`], so every instance satisfies its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedCertificate {
    h: Poly,
    alpha: u64,
    beta: u64,
    gamma_alpha: u64,
    gamma_beta: u64,
}

impl SeedCertificate {
    pub fn p(&self) -> u64 {
        self.h.modulus()
    }
    pub fn h(&self) -> &Poly {
        &self.h
    }
    pub fn alpha(&self) -> u64 {
        self.alpha
    }
    pub fn beta(&self) -> u64 {
        self.beta
    }
    pub fn gamma_alpha(&self) -> u64 {
        self.gamma_alpha
    }
    pub fn gamma_beta(&self) -> u64 {
        self.gamma_beta
    }
    pub fn h_alpha(&self) -> u64 {
        self.h.eval(self.alpha)
    }
    pub fn h_beta(&self) -> u64 {
        self.h.eval(self.beta)
    }

    /// Re-runs the verifier on the certificate contents.
    pub fn recheck(&self) -> Result<SeedCertificate, SeedError> {
        verify_witnesses(&self.h, self.alpha, self.beta)
    }
}

fn check_shape(h: &Poly) -> Result<(), SeedError> {
    if h.degree() != Some(9) || !h.is_monic() {
        return Err(SeedError::WrongShape);
    }
    if !h.is_split_separable() {
        return Err(SeedError::NotSeparableSplit(h.modulus()));
    }
    Ok(())
}

fn nonzero_square_root(h: &Poly, a: u64) -> Option<u64> {
    let v = h.eval(a);
    if v == 0 {
        return None;
    }
    h.field().sqrt(v)
}

/// Certifies `(h, alpha, beta)`; the gammas are the canonical square roots.
pub fn verify_witnesses(h: &Poly, alpha: u64, beta: u64) -> Result<SeedCertificate, SeedError> {
    let p = h.modulus();
    let (alpha, beta) = (alpha % p, beta % p);
    if alpha == beta {
        return Err(SeedError::WitnessesEqual);
    }
    check_shape(h)?;
    let gamma_alpha = nonzero_square_root(h, alpha).ok_or(SeedError::WitnessInvalid(Witness::Alpha))?;
    let gamma_beta = nonzero_square_root(h, beta).ok_or(SeedError::WitnessInvalid(Witness::Beta))?;
    Ok(SeedCertificate {
        h: h.clone(),
        alpha,
        beta,
        gamma_alpha,
        gamma_beta,
    })
}

/// Outcome of a witness search together with the number of evaluations of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSearch {
    pub certificate: Option<SeedCertificate>,
    pub evaluations: u64,
}

/// Lexicographically least valid pair `(alpha, beta)`, `alpha < beta`.
pub fn search_witness(h: &Poly) -> Result<WitnessSearch, SeedError> {
    check_shape(h)?;
    let field = h.field();
    let mut found = Vec::with_capacity(2);
    let mut evaluations = 0;
    for a in 0..field.modulus() {
        evaluations += 1;
        if nonzero_square_root(h, a).is_some() {
            found.push(a);
            if found.len() == 2 {
                break;
            }
        }
    }
    let certificate = match found[..] {
        [a, b] => Some(verify_witnesses(h, a, b)?),
        _ => None,
    };
    Ok(WitnessSearch {
        certificate,
        evaluations,
    })
}

/// Visits every 9-subset of `0..p` in lexicographic order.
fn for_each_nine_subset(p: u64, mut visit: impl FnMut(&[u64])) {
    let k = 9usize;
    let mut idx: Vec<u64> = (0..k as u64).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < p - (k - i) as u64 {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Number of 9-subsets of `F_p`.
pub fn split_candidate_count(p: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 0..9u128 {
        c = c * (p as u128 - i) / (i + 1);
    }
    c
}

/// Enumerates every monic split separable degree-9 polynomial over `F_p`
/// (one per 9-subset of root values) and returns those that admit two
/// witnesses.
pub fn exhaustive_seed_search(p: u64, cap: u64) -> Result<Vec<SeedCertificate>, SeedError> {
    let field = PrimeField::new(p)?;
    if p < 11 {
        return Err(SeedError::FieldTooSmall(p));
    }
    if p > cap {
        return Err(SeedError::CapExceeded { p, cap });
    }
    let mut out = Vec::new();
    let mut first_err = None;
    for_each_nine_subset(p, |roots| {
        let h = Poly::from_roots(field, roots);
        match search_witness(&h) {
            Ok(WitnessSearch {
                certificate: Some(c), ..
            }) => out.push(c),
            Ok(_) => {}
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    });
    match first_err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Squarefree signed kernel of an integer: the primes of odd multiplicity,
/// preceded by `-1` when the integer is negative.
fn squarefree_factors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    if n < 0 {
        out.push(-1);
    }
    let mut m = n.unsigned_abs();
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0;
        while m.is_multiple_of(d) {
            m /= d;
            e += 1;
        }
        if e % 2 == 1 {
            out.push(d as i64);
        }
        d += 1;
    }
    if m > 1 {
        out.push(m as i64);
    }
    out
}

/// Squarefree factor list of `(1-j) * prod_{k=2..5} (j+k) * k * (kj+1)`,
/// whose Legendre symbol equals that of `h(p-j)` for the default tuple.
pub fn reduction_factors(j: u64) -> Vec<i64> {
    let j = j as i64;
    let mut negative = false;
    let mut exponents: BTreeMap<i64, u32> = BTreeMap::new();
    let mut absorb = |n: i64| {
        negative ^= n < 0;
        for f in squarefree_factors(n.abs()) {
            *exponents.entry(f).or_default() += 1;
        }
    };
    absorb(1 - j);
    for k in 2..=5 {
        absorb(j + k);
        absorb(k);
        absorb(k * j + 1);
    }
    let mut out: Vec<i64> = if negative { vec![-1] } else { vec![] };
    out.extend(exponents.into_iter().filter(|(_, e)| e % 2 == 1).map(|(f, _)| f));
    out
}

/// Reduced-product and direct Legendre signs of `h(p-j)` for the default
/// tuple `(2,3,4,5)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSign {
    pub p: u64,
    pub j: u64,
    /// Squarefree integers whose symbols multiply to the reduced sign.
    pub factors: Vec<i64>,
    pub reduced: i8,
    pub direct: i8,
}

impl ReductionSign {
    pub fn agrees(&self) -> bool {
        self.reduced == self.direct
    }
}

pub fn legendre_reduction_sign(p: u64, j: u64) -> Result<ReductionSign, SeedError> {
    if !(2..=7).contains(&j) {
        return Err(SeedError::JOutOfRange(j));
    }
    let field = PrimeField::new(p)?;
    if p < REDUCTION_MIN_PRIME {
        return Err(SeedError::PrimeTooSmall(p));
    }
    let h = build_seed_poly(field, SeedTuple::DEFAULT)?;
    let value = h.eval(p - j);
    if value == 0 {
        return Err(SeedError::DegenerateEvaluation(j));
    }
    let factors = reduction_factors(j);
    let reduced = factors.iter().map(|&f| field.legendre(field.reduce(f))).product();
    Ok(ReductionSign {
        p,
        j,
        factors,
        reduced,
        direct: field.legendre(value),
    })
}

/// Per-prime outcome of a scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    Certified(SeedCertificate),
    /// The tuple does not yield nine distinct roots (or is unusable) at `p`.
    TupleFails(String),
    /// `h` is fine but fewer than two witnesses exist.
    NoWitness,
}

impl ScanOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, ScanOutcome::Certified(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            ScanOutcome::Certified(_) => "certified",
            ScanOutcome::TupleFails(_) => "tuple_fails",
            ScanOutcome::NoWitness => "no_witness",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub p: u64,
    pub tuple: SeedTuple,
    pub outcome: ScanOutcome,
    /// Evaluations of `h` spent, summed over every tuple tried.
    pub work: u64,
}

/// Options for [`scan_prime`] and [`scan_primes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub tuple: SeedTuple,
    /// Try `(2,3,4,6)` and then lexicographic tuples when `tuple` fails.
    pub fallback: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            tuple: SeedTuple::DEFAULT,
            fallback: false,
        }
    }
}

fn try_tuple(field: PrimeField, tuple: SeedTuple) -> (ScanOutcome, u64) {
    let h = match build_seed_poly(field, tuple) {
        Ok(h) => h,
        Err(e) => return (ScanOutcome::TupleFails(e.to_string()), 0),
    };
    match search_witness(&h) {
        Ok(WitnessSearch {
            certificate: Some(c),
            evaluations,
        }) => (ScanOutcome::Certified(c), evaluations),
        Ok(WitnessSearch {
            certificate: None,
            evaluations,
        }) => (ScanOutcome::NoWitness, evaluations),
        Err(e) => (ScanOutcome::TupleFails(e.to_string()), 0),
    }
}

fn fallback_tuples(p: u64) -> impl Iterator<Item = SeedTuple> {
    let explicit = std::iter::once(SeedTuple([2, 3, 4, 6]));
    // increasing 4-subsets of 2..p-1 (p-1 = -1 is always excluded)
    let hi = p.saturating_sub(2);
    let lex = (2..=hi).flat_map(move |a| {
        (a + 1..=hi)
            .flat_map(move |b| (b + 1..=hi).flat_map(move |c| (c + 1..=hi).map(move |d| SeedTuple([a, b, c, d]))))
    });
    explicit.chain(lex).take(FALLBACK_LIMIT)
}

/// Builds and searches one prime. `p` must be an odd prime.
pub fn scan_prime(p: u64, opts: &ScanOptions) -> ScanReport {
    let field = match PrimeField::new(p) {
        Ok(f) => f,
        Err(e) => {
            return ScanReport {
                p,
                tuple: opts.tuple,
                outcome: ScanOutcome::TupleFails(e.to_string()),
                work: 0,
            }
        }
    };
    let (outcome, mut work) = try_tuple(field, opts.tuple);
    if outcome.is_certified() || !opts.fallback {
        return ScanReport {
            p,
            tuple: opts.tuple,
            outcome,
            work,
        };
    }
    for tuple in fallback_tuples(p).filter(|t| *t != opts.tuple) {
        let (o, w) = try_tuple(field, tuple);
        work += w;
        if o.is_certified() {
            return ScanReport {
                p,
                tuple,
                outcome: o,
                work,
            };
        }
    }
    ScanReport {
        p,
        tuple: opts.tuple,
        outcome,
        work,
    }
}

const SCAN_CHUNK: u64 = 1 << 14;

/// Odd primes in `[lo, hi]`, ascending.
pub fn odd_primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo.max(3)..=hi).filter(|&n| n % 2 == 1 && is_prime(n))
}

/// Streams one report per odd prime in `[lo, hi]` in ascending order. Work is
/// done in chunks, in parallel when the `parallel` feature is on.
pub fn scan_primes(lo: u64, hi: u64, opts: ScanOptions) -> impl Iterator<Item = ScanReport> {
    let starts = (lo..=hi).step_by(SCAN_CHUNK as usize);
    starts.flat_map(move |start| {
        let end = start.saturating_add(SCAN_CHUNK - 1).min(hi);
        let primes: Vec<u64> = odd_primes(start, end).collect();
        map_ordered(primes, |p| scan_prime(p, &opts))
    })
}

#[cfg(feature = "parallel")]
fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// One prime of an arithmetic progression together with its reduced sign and
/// full scan outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub reduction: ReductionSign,
    pub report: ScanReport,
}

/// The first `count` primes `p = residue (mod modulus)` with `p > 37`.
pub fn progression_primes(modulus: u64, residue: u64, count: usize) -> Result<Vec<u64>, SeedError> {
    if num_integer::gcd(modulus, residue) != 1 {
        return Err(SeedError::NotCoprime);
    }
    let residue = residue % modulus;
    let mut k = REDUCTION_MIN_PRIME / modulus;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = k * modulus + residue;
        if n > REDUCTION_MIN_PRIME && is_prime(n) {
            out.push(n);
        }
        k += 1;
    }
    Ok(out)
}

pub fn prime_family_scan(modulus: u64, residue: u64, count: usize, j: u64) -> Result<Vec<FamilyRow>, SeedError> {
    if !(2..=7).contains(&j) {
        return Err(SeedError::JOutOfRange(j));
    }
    let primes = progression_primes(modulus, residue, count)?;
    let opts = ScanOptions::default();
    let rows = map_ordered(primes, |p| {
        legendre_reduction_sign(p, j).map(|reduction| FamilyRow {
            reduction,
            report: scan_prime(p, &opts),
        })
    });
    rows.into_iter().collect()
}

/// One line of the scan stream (version 1 of the record schema).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub p: u64,
    pub outcome: String,
    pub alpha: Option<u64>,
    pub beta: Option<u64>,
    pub h_alpha: Option<u64>,
    pub h_beta: Option<u64>,
    pub gamma_alpha: Option<u64>,
    pub gamma_beta: Option<u64>,
    pub tuple: [u64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub work: u64,
}

impl From<&ScanReport> for ScanRecord {
    fn from(r: &ScanReport) -> Self {
        let cert = match &r.outcome {
            ScanOutcome::Certified(c) => Some(c),
            _ => None,
        };
        ScanRecord {
            p: r.p,
            outcome: r.outcome.label().to_string(),
            alpha: cert.map(|c| c.alpha()),
            beta: cert.map(|c| c.beta()),
            h_alpha: cert.map(|c| c.h_alpha()),
            h_beta: cert.map(|c| c.h_beta()),
            gamma_alpha: cert.map(|c| c.gamma_alpha()),
            gamma_beta: cert.map(|c| c.gamma_beta()),
            tuple: r.tuple.values(),
            reason: match &r.outcome {
                ScanOutcome::TupleFails(why) => Some(why.clone()),
                _ => None,
            },
            work: r.work,
        }
    }
}

impl ScanRecord {
    /// Rebuilds `h` from the recorded tuple and re-verifies a certified
    /// record, also checking the recorded values and roots.
    pub fn reverify(&self) -> Result<SeedCertificate, SeedError> {
        let field = PrimeField::new(self.p)?;
        let h = build_seed_poly(field, SeedTuple(self.tuple))?;
        let (Some(a), Some(b)) = (self.alpha, self.beta) else {
            return Err(SeedError::WitnessInvalid(Witness::Alpha));
        };
        let cert = verify_witnesses(&h, a, b)?;
        let matches = self.h_alpha == Some(cert.h_alpha())
            && self.h_beta == Some(cert.h_beta())
            && self.gamma_alpha == Some(cert.gamma_alpha())
            && self.gamma_beta == Some(cert.gamma_beta());
        if !matches {
            return Err(SeedError::WitnessInvalid(Witness::Beta));
        }
        Ok(cert)
    }
}

/// Factored rendering of the seed polynomial, e.g. `(t+1)(t-2)(t-7)...`.
pub fn seed_factored(p: u64, tuple: SeedTuple) -> Result<String, SeedError> {
    let field = PrimeField::new(p)?;
    Ok(render_factored(p, &seed_roots(field, tuple)?))
}

//! Permutation invariance of codes: full permutations, block-wise actions on
//! `r` blocks of length `m`, the cyclic shift, and two explicit sources of
//! automorphisms (the hyperelliptic involution `y -> -y` and affine maps
//! `x -> ax + b` of `F_p(x)`).
//!
//! Invariance is decided by comparing row spaces through ranks, which is exact
//! over `F_p`. Only supplied generators are verified; `Perm(C)` itself is
//! never enumerated.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::agcode::LinearCode;
use crate::curve::{Decomposition, HyperCurve, Place};
use crate::ff::PrimeField;
use crate::linalg::same_row_space;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("permutation of length {perm} applied to a code of length {n}")]
    LengthMismatch { perm: usize, n: usize },
    #[error("block shape {r} x {m} does not fit length {n}")]
    ShapeMismatch { r: usize, m: usize, n: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("x = {0} does not split")]
    NotSplit(u64),
    #[error("x = {0} listed twice")]
    RepeatedX(u64),
    #[error("the multiplier of an affine map must be nonzero")]
    ZeroMultiplier,
}

/// A permutation `pi` of `{1..n}` acting by `(pi v)_i = v_{pi(i)}`. Stored
/// 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodePermutation {
    images: Vec<usize>,
}

impl CodePermutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self, StructureError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(StructureError::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Self { images })
    }

    /// From 1-based images `pi(1), ..., pi(n)`.
    pub fn from_one_based(images: &[usize]) -> Result<Self, StructureError> {
        let shifted = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| StructureError::NotAPermutation(format!("{images:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(shifted)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// `s(1) = n`, `s(i) = i - 1`, so `s v = (v_n, v_1, ..., v_{n-1})`.
    pub fn cyclic_shift(n: usize) -> Self {
        Self {
            images: (0..n).map(|i| if i == 0 { n - 1 } else { i - 1 }).collect(),
        }
    }

    /// Swap of two 1-based positions.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, StructureError> {
        let mut images: Vec<usize> = (0..n).collect();
        if i == 0 || j == 0 || i > n || j > n {
            return Err(StructureError::NotAPermutation(format!("({i} {j}) on {n} points")));
        }
        images.swap(i - 1, j - 1);
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1 2)(3 5 4)`; `()` is the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self, StructureError> {
        let bad = || StructureError::NotAPermutation(text.to_string());
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(bad)?;
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let body = &body[..body_end - 1];
            let cycle: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().ok().filter(|&v| v >= 1 && v <= n).map(|v| v - 1))
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            for &c in &cycle {
                if std::mem::replace(&mut used[c], true) {
                    return Err(bad());
                }
            }
            for (idx, &c) in cycle.iter().enumerate() {
                images[c] = cycle[(idx + 1) % cycle.len()];
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.images.iter().map(|&j| v[j].clone()).collect()
    }

    /// Disjoint cycles (0-based), fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for CodePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let items: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

/// `n = r * m`: `r` consecutive blocks of `m` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockStructure {
    pub r: usize,
    pub m: usize,
}

impl BlockStructure {
    pub fn new(n: usize, m: usize) -> Result<Self, StructureError> {
        if m == 0 || !n.is_multiple_of(m) {
            return Err(StructureError::ShapeMismatch { r: 0, m, n });
        }
        Ok(Self { r: n / m, m })
    }

    pub fn len(&self) -> usize {
        self.r * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The same permutation of `{1..m}` applied inside every block.
    pub fn expand(&self, pi: &CodePermutation) -> Result<CodePermutation, StructureError> {
        if pi.len() != self.m {
            return Err(StructureError::ShapeMismatch {
                r: self.r,
                m: pi.len(),
                n: self.len(),
            });
        }
        let images = (0..self.r)
            .flat_map(|b| pi.images().iter().map(move |&t| b * self.m + t))
            .collect();
        Ok(CodePermutation { images })
    }
}

pub fn is_invariant(code: &LinearCode, perm: &CodePermutation) -> Result<bool, StructureError> {
    if perm.len() != code.n() {
        return Err(StructureError::LengthMismatch {
            perm: perm.len(),
            n: code.n(),
        });
    }
    Ok(same_row_space(
        code.field(),
        code.rows(),
        &code.permuted_rows(perm.images()),
    ))
}

pub fn is_block_invariant(
    code: &LinearCode,
    blocks: BlockStructure,
    pi: &CodePermutation,
) -> Result<bool, StructureError> {
    if blocks.len() != code.n() {
        return Err(StructureError::ShapeMismatch {
            r: blocks.r,
            m: blocks.m,
            n: code.n(),
        });
    }
    is_invariant(code, &blocks.expand(pi)?)
}

/// Orbits of the group generated by `gens` on `{0..m}`.
pub fn orbits(m: usize, gens: &[CodePermutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let j = g.images()[i];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                    queue.push_back(j);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Every generator lies in `Perm_r(C)` and together they act transitively on
/// `{1..m}`.
pub fn check_r_quasi_transitive(
    code: &LinearCode,
    blocks: BlockStructure,
    gens: &[CodePermutation],
) -> Result<bool, StructureError> {
    for g in gens {
        if !is_block_invariant(code, blocks, g)? {
            return Ok(false);
        }
    }
    Ok(orbits(blocks.m, gens).len() <= 1)
}

pub fn check_cyclic(code: &LinearCode) -> bool {
    is_invariant(code, &CodePermutation::cyclic_shift(code.n())).expect("shift has length n")
}

/// Coordinates `(a, b), (a, -b)` per split `a`, and the swap `(1 2)` that the
/// involution `y -> -y` induces on every block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLayout {
    pub places: Vec<Place>,
    pub blocks: BlockStructure,
    pub swap: CodePermutation,
}

pub fn conjugate_pair_layout(curve: &HyperCurve, xs: &[u64]) -> Result<PairLayout, StructureError> {
    let mut places = Vec::with_capacity(2 * xs.len());
    for (i, &a) in xs.iter().enumerate() {
        if xs[..i].contains(&a) {
            return Err(StructureError::RepeatedX(a));
        }
        if curve.classify_x(a) != Decomposition::Split {
            return Err(StructureError::NotSplit(a));
        }
        places.extend(curve.places_over(a));
    }
    Ok(PairLayout {
        places,
        blocks: BlockStructure { r: xs.len(), m: 2 },
        swap: CodePermutation { images: vec![1, 0] },
    })
}

/// The automorphism `x -> a x + b` of `F_p(x)`; it fixes the pole of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    field: PrimeField,
    a: u64,
    b: u64,
}

impl AffineMap {
    pub fn new(field: PrimeField, a: u64, b: u64) -> Result<Self, StructureError> {
        let p = field.modulus();
        let (a, b) = (a % p, b % p);
        if a == 0 {
            return Err(StructureError::ZeroMultiplier);
        }
        Ok(Self { field, a, b })
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.field.add(self.field.mul(self.a, x), self.b)
    }

    pub fn inverse_apply(&self, y: u64) -> u64 {
        let inv = self.field.inv(self.a).expect("a != 0");
        self.field.mul(self.field.sub(y, self.b), inv)
    }

    /// Order in `Aut(F_p(x))`: `p` for a translation, the multiplicative
    /// order of `a` otherwise, 1 for the identity.
    pub fn order(&self) -> u64 {
        let f = self.field;
        if self.a == 1 {
            return if self.b == 0 { 1 } else { f.modulus() };
        }
        let mut k = 1;
        let mut acc = self.a;
        while acc != 1 {
            acc = f.mul(acc, self.a);
            k += 1;
        }
        k
    }
}

/// Orbits of an affine map on the affine rational places of `F_p(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub order: u64,
    /// Each orbit as a cycle `x, s(x), s^2(x), ...` starting at its least
    /// element; orbits sorted by that element.
    pub orbits: Vec<Vec<u64>>,
    pub fixed_points: Vec<u64>,
    pub infinity_fixed: bool,
}

impl OrbitReport {
    /// Places `P_1..P_n` of one orbit ordered so that `s(P_1) = P_n` and
    /// `s(P_i) = P_{i-1}`.
    pub fn shift_order(orbit: &[u64]) -> Vec<u64> {
        let n = orbit.len();
        (0..n).map(|i| orbit[(n - i) % n]).collect()
    }
}

pub fn affine_automorphism_orbits(map: &AffineMap) -> OrbitReport {
    let p = map.field.modulus();
    let mut seen = vec![false; p as usize];
    let mut orbits = Vec::new();
    for start in 0..p {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut x = map.apply(start);
        while x != start {
            seen[x as usize] = true;
            cycle.push(x);
            x = map.apply(x);
        }
        orbits.push(cycle);
    }
    let fixed_points = orbits.iter().filter(|o| o.len() == 1).map(|o| o[0]).collect();
    OrbitReport {
        order: map.order(),
        orbits,
        fixed_points,
        infinity_fixed: true,
    }
}

impl FromStr for BlockStructure {
    type Err = StructureError;

    /// `r x m`, e.g. `3x2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StructureError::ShapeMismatch { r: 0, m: 0, n: 0 };
        let (r, m) = s.split_once('x').ok_or_else(bad)?;
        Ok(Self {
            r: r.trim().parse().map_err(|_| bad())?,
            m: m.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agcode::{build_ag_code, build_rational_code, build_rs_demo};
    use crate::testutil::default_curve;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Oracle: every codeword of `code`, permuted, must be a codeword.
    fn invariant_by_enumeration(code: &LinearCode, perm: &CodePermutation) -> bool {
        let p = code.p();
        let k = code.k() as u32;
        let words: std::collections::HashSet<Vec<u64>> = (0..p.pow(k))
            .map(|idx| code.encode(&(0..k).map(|i| (idx / p.pow(i)) % p).collect::<Vec<_>>()))
            .collect();
        words.iter().all(|w| words.contains(&perm.apply(w)))
    }

    #[test]
    fn cycle_notation() {
        let pi = CodePermutation::from_cycles(5, "(1 2)(3 5 4)").unwrap();
        assert_eq!(pi.images(), &[1, 0, 4, 2, 3]);
        assert_eq!(pi.to_string(), "(1 2)(3 5 4)");
        assert_eq!(
            CodePermutation::from_cycles(3, "()").unwrap(),
            CodePermutation::identity(3)
        );
        assert_eq!(CodePermutation::identity(4).to_string(), "()");
        assert!(CodePermutation::from_cycles(3, "(1 4)").is_err());
        assert!(CodePermutation::from_cycles(3, "(1 2)(2 3)").is_err());
        assert!(CodePermutation::from_cycles(3, "1 2").is_err());
        assert_eq!(CodePermutation::cyclic_shift(5).to_string(), "(1 5 4 3 2)");
    }

    #[test]
    fn shift_acts_as_written() {
        let s = CodePermutation::cyclic_shift(4);
        assert_eq!(s.apply(&['a', 'b', 'c', 'd']), vec!['d', 'a', 'b', 'c']);
        let pi = CodePermutation::from_cycles(4, "(1 3 2)").unwrap();
        assert_eq!(pi.compose(&pi.inverse()), CodePermutation::identity(4));
        assert!(CodePermutation::from_images(vec![0, 0]).is_err());
        assert!(CodePermutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn rs_demo_invariance() {
        let rs = build_rs_demo(f(5), 2).unwrap();
        assert!(is_invariant(&rs, &CodePermutation::identity(5)).unwrap());
        let shift = CodePermutation::cyclic_shift(5);
        assert!(is_invariant(&rs, &shift).unwrap());
        assert!(invariant_by_enumeration(&rs, &shift));
        let swap = CodePermutation::transposition(5, 1, 2).unwrap();
        assert!(!is_invariant(&rs, &swap).unwrap());
        assert!(!invariant_by_enumeration(&rs, &swap));
        assert!(check_cyclic(&rs));
        assert_eq!(
            is_invariant(&rs, &CodePermutation::identity(4)),
            Err(StructureError::LengthMismatch { perm: 4, n: 5 })
        );
    }

    #[test]
    fn rank_test_agrees_with_enumeration() {
        let rs = build_rs_demo(f(5), 2).unwrap();
        let all: Vec<Vec<usize>> = permutations(5);
        for images in all {
            let pi = CodePermutation::from_images(images).unwrap();
            assert_eq!(
                is_invariant(&rs, &pi).unwrap(),
                invariant_by_enumeration(&rs, &pi),
                "{pi}"
            );
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in permutations(n - 1) {
            for pos in 0..n {
                let mut v = rest.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn shuffled_rs_is_not_cyclic() {
        let rs = build_rs_demo(f(5), 2).unwrap();
        // 0, 2, 1, 3, 4 as evaluation order
        let shuffled = rs.permuted(&[0, 2, 1, 3, 4]);
        assert!(!check_cyclic(&shuffled));
        let words_say = invariant_by_enumeration(&shuffled, &CodePermutation::cyclic_shift(5));
        assert!(!words_say);
    }

    #[test]
    fn cyclic_shift_on_rs_exhaustive() {
        for p in [3u64, 5, 7, 11, 13] {
            for m in 0..p {
                assert!(check_cyclic(&build_rs_demo(f(p), m).unwrap()), "p = {p}, m = {m}");
            }
        }
    }

    #[test]
    fn length_one_code_is_cyclic() {
        let c = build_rational_code(f(7), &[3], 0).unwrap();
        assert!(check_cyclic(&c));
    }

    #[test]
    fn one_block_quasi_transitivity_is_transitivity() {
        let rs = build_rs_demo(f(5), 2).unwrap();
        let one = BlockStructure::new(5, 5).unwrap();
        let shift = CodePermutation::cyclic_shift(5);
        assert!(is_block_invariant(&rs, one, &shift).unwrap());
        assert!(check_r_quasi_transitive(&rs, one, &[shift]).unwrap());
        assert!(!check_r_quasi_transitive(&rs, one, &[CodePermutation::identity(5)]).unwrap());
        let singletons = BlockStructure::new(5, 1).unwrap();
        assert!(check_r_quasi_transitive(&rs, singletons, &[]).unwrap());
        assert!(check_r_quasi_transitive(&rs, singletons, &[CodePermutation::identity(1)]).unwrap());
        assert!(matches!(
            is_block_invariant(&rs, BlockStructure { r: 2, m: 2 }, &CodePermutation::identity(2)),
            Err(StructureError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn composition_stays_in_perm() {
        let rs = build_rs_demo(f(7), 3).unwrap();
        let s = CodePermutation::cyclic_shift(7);
        // x -> 3x permutes 0..6 and keeps degrees
        let scale = CodePermutation::from_images((0..7).map(|i| (3 * i) % 7).collect()).unwrap();
        assert!(is_invariant(&rs, &s).unwrap());
        assert!(is_invariant(&rs, &scale).unwrap());
        assert!(is_invariant(&rs, &s.compose(&scale)).unwrap());
        assert!(is_invariant(&rs, &scale.compose(&s).compose(&s)).unwrap());
    }

    #[test]
    fn involution_swap_on_worked_curves() {
        for p in [13, 17, 19, 23] {
            let curve = default_curve(p);
            let xs: Vec<u64> = (0..p)
                .filter(|&a| curve.classify_x(a) == Decomposition::Split)
                .collect();
            let layout = conjugate_pair_layout(&curve, &xs).unwrap();
            let n = layout.places.len() as u64;
            for m in 0..=(n + 10) {
                let code = build_ag_code(&curve, &layout.places, m).unwrap();
                assert!(
                    is_block_invariant(&code, layout.blocks, &layout.swap).unwrap(),
                    "p = {p}, m = {m}"
                );
                assert!(check_r_quasi_transitive(&code, layout.blocks, std::slice::from_ref(&layout.swap)).unwrap());
            }
        }
    }

    #[test]
    fn swap_oracle_on_f13() {
        let curve = default_curve(13);
        let layout = conjugate_pair_layout(&curve, &[0, 11]).unwrap();
        assert_eq!(layout.blocks, BlockStructure { r: 2, m: 2 });
        let code = build_ag_code(&curve, &layout.places, 9).unwrap();
        let full = layout.blocks.expand(&layout.swap).unwrap();
        assert!(invariant_by_enumeration(&code, &full));
    }

    #[test]
    fn swapping_across_blocks_breaks_invariance() {
        let curve = default_curve(23);
        let xs: Vec<u64> = (0..23)
            .filter(|&a| curve.classify_x(a) == Decomposition::Split)
            .collect();
        let layout = conjugate_pair_layout(&curve, &xs).unwrap();
        let code = build_ag_code(&curve, &layout.places, 9).unwrap();
        let n = code.n();
        // exchange the first coordinates of two different fibres
        let cross = CodePermutation::transposition(n, 1, 3).unwrap();
        assert!(!is_invariant(&code, &cross).unwrap());
    }

    #[test]
    fn layout_errors() {
        let curve = default_curve(13);
        assert_eq!(conjugate_pair_layout(&curve, &[2]), Err(StructureError::NotSplit(2)));
        assert_eq!(
            conjugate_pair_layout(&curve, &[11, 11]),
            Err(StructureError::RepeatedX(11))
        );
        let empty = conjugate_pair_layout(&curve, &[]).unwrap();
        assert!(empty.places.is_empty());
        let code = build_ag_code(&curve, &empty.places, 4).unwrap();
        assert!(is_block_invariant(&code, empty.blocks, &empty.swap).unwrap());
    }

    #[test]
    fn affine_orbit_examples() {
        let translate = AffineMap::new(f(5), 1, 1).unwrap();
        let rep = affine_automorphism_orbits(&translate);
        assert_eq!(rep.order, 5);
        assert_eq!(rep.orbits, vec![vec![0, 1, 2, 3, 4]]);
        assert!(rep.infinity_fixed);
        assert!(rep.orbits[0].iter().all(|&a| (a.pow(5) - a) % 5 == 0));
        assert_eq!(OrbitReport::shift_order(&rep.orbits[0]), vec![0, 4, 3, 2, 1]);

        let scale = AffineMap::new(f(13), 5, 0).unwrap();
        let rep = affine_automorphism_orbits(&scale);
        assert_eq!(rep.order, 4);
        assert_eq!(rep.fixed_points, vec![0]);
        assert!(rep.orbits.iter().filter(|o| o.len() > 1).all(|o| o.len() == 4));
        assert_eq!(rep.orbits.len(), 4);

        let id = affine_automorphism_orbits(&AffineMap::new(f(7), 1, 0).unwrap());
        assert_eq!(id.order, 1);
        assert_eq!(id.fixed_points.len(), 7);
        assert_eq!(AffineMap::new(f(7), 0, 1), Err(StructureError::ZeroMultiplier));
    }

    #[test]
    fn orbit_sizes_divide_order() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            for a in 1..p {
                for b in 0..p {
                    let map = AffineMap::new(f(p), a, b).unwrap();
                    let rep = affine_automorphism_orbits(&map);
                    assert!(rep.orbits.iter().all(|o| rep.order.is_multiple_of(o.len() as u64)));
                    assert_eq!(rep.orbits.iter().map(Vec::len).sum::<usize>() as u64, p);
                    for o in &rep.orbits {
                        for (i, &x) in o.iter().enumerate() {
                            assert_eq!(map.apply(x), o[(i + 1) % o.len()]);
                            assert_eq!(map.inverse_apply(map.apply(x)), x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_in_shift_order_gives_cyclic_code() {
        // x -> 5x on F_13: the orbit of 1 is {1, 5, 12, 8}. Polynomials of
        // degree <= m are carried to themselves, so the code on that orbit,
        // listed with s(P_1) = P_n, is cyclic.
        let field = f(13);
        let map = AffineMap::new(field, 5, 0).unwrap();
        let rep = affine_automorphism_orbits(&map);
        let orbit = rep.orbits.iter().find(|o| o.contains(&1)).unwrap();
        assert_eq!(orbit, &vec![1, 5, 12, 8]);
        let places = OrbitReport::shift_order(orbit);
        for m in 0..4 {
            let code = build_rational_code(field, &places, m).unwrap();
            assert!(check_cyclic(&code), "m = {m}");
        }
    }

    #[test]
    fn block_shape_parsing() {
        assert_eq!("3x2".parse::<BlockStructure>().unwrap(), BlockStructure { r: 3, m: 2 });
        assert!("3".parse::<BlockStructure>().is_err());
        assert_eq!(BlockStructure::new(6, 2).unwrap(), BlockStructure { r: 3, m: 2 });
        assert!(BlockStructure::new(5, 2).is_err());
    }
}

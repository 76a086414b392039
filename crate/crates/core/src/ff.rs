//! Arithmetic modulo an odd prime, quadratic characters and primality.
//!
//! Residues are plain `u64` values in `[0, p)`. Products go through a `u128`
//! intermediate so any 64-bit modulus is safe.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} has no inverse (zero)")]
    ZeroInverse(u64),
}

/// The prime field `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces a signed integer to its canonical residue.
    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        (a as i128).rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        add_mod(a, b, self.p)
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        sub_mod(a, b, self.p)
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    #[inline]
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Inverse by Fermat, `a^(p-2)`.
    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a.is_multiple_of(self.p) {
            return Err(FieldError::ZeroInverse(a));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Quadratic character of a residue: 0, +1 or -1.
    pub fn legendre(&self, a: u64) -> i8 {
        euler_criterion(a % self.p, self.p)
    }

    /// Canonical square root, see [`sqrt_mod`].
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        sqrt_mod(a % self.p, self.p)
    }

    /// `-1` as a canonical residue.
    #[inline]
    pub fn minus_one(&self) -> u64 {
        self.p - 1
    }
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    if p == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn euler_criterion(a: u64, p: u64) -> i8 {
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Legendre symbol `(a/p)` via Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8, FieldError> {
    let field = PrimeField::new(p)?;
    Ok(field.legendre(field.reduce(a)))
}

/// Legendre symbol computed by quadratic reciprocity (binary Jacobi
/// algorithm). Must agree with [`legendre_symbol`] for every odd prime.
pub fn legendre_by_reciprocity(a: i64, p: u64) -> Result<i8, FieldError> {
    let field = PrimeField::new(p)?;
    let mut a = field.reduce(a);
    let mut n = p;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// Square root modulo an odd prime by Tonelli-Shanks.
///
/// Returns the representative `r <= (p-1)/2`, or `None` for a non-residue.
/// `a` must already be reduced.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    debug_assert!(a < p);
    if a == 0 {
        return Some(0);
    }
    if euler_criterion(a, p) != 1 {
        return None;
    }
    let r = if p % 4 == 3 {
        pow_mod(a, (p + 1) / 4, p)
    } else {
        tonelli_shanks(a, p)
    };
    Some(r.min(p - r))
}

fn tonelli_shanks(a: u64, p: u64) -> u64 {
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while euler_criterion(z, p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// Deterministic Miller-Rabin for the whole `u64` range.
///
/// The first twelve primes as bases are sufficient below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n`, if one fits in `u64`.
pub fn next_prime(n: u64) -> Option<u64> {
    (n..=u64::MAX).find(|&c| is_prime(c))
}

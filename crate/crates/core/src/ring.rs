//! Exact arithmetic over `Z_m`, prime fields and the quadratic extension
//! `F_{p^2}`, plus the number-theoretic predicates used throughout the crate.
//!
//! Residues are plain `u64` values kept in `[0, m)`. Products go through
//! `u128` so any modulus that fits in a `u64` is safe.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Residue = u64;

/// Trial-division primality test. Moduli handled by this crate stay well
/// below `10^12`, where this is instant.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, ascending by prime.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All primes in `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// The ring `Z_m` together with the factorization of `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueRing {
    m: u64,
    factors: Vec<(u64, u32)>,
    is_prime: bool,
    is_prime_power: bool,
}

impl ResidueRing {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus {
                modulus: m,
                reason: "modulus must be at least 2",
            });
        }
        let factors = factorize(m);
        let is_prime_power = factors.len() == 1;
        let is_prime = is_prime_power && factors[0].1 == 1;
        Ok(ResidueRing {
            m,
            factors,
            is_prime,
            is_prime_power,
        })
    }

    /// The prime field `F_p`.
    pub fn prime_field(p: u64) -> Result<Self> {
        let ring = Self::new(p)?;
        if !ring.is_prime {
            return Err(Error::InvalidModulus {
                modulus: p,
                reason: "expected a prime",
            });
        }
        Ok(ring)
    }

    /// The ring `Z_{p^t}`.
    pub fn prime_power(p: u64, t: u32) -> Result<Self> {
        if !is_prime(p) || t == 0 {
            return Err(Error::InvalidModulus {
                modulus: p,
                reason: "expected a prime and a positive exponent",
            });
        }
        let m = p.checked_pow(t).ok_or(Error::InvalidModulus {
            modulus: p,
            reason: "prime power overflows u64",
        })?;
        Self::new(m)
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        self.is_prime
    }

    pub fn is_prime_power(&self) -> bool {
        self.is_prime_power
    }

    /// The characteristic prime when `m` is a prime power.
    pub fn prime(&self) -> Option<u64> {
        self.is_prime_power.then(|| self.factors[0].0)
    }

    /// Normalizes a signed integer into `[0, m)`.
    #[inline]
    pub fn reduce(&self, v: i64) -> Residue {
        v.rem_euclid(self.m as i64) as Residue
    }

    #[inline]
    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        ((a as u128 + b as u128) % self.m as u128) as Residue
    }

    #[inline]
    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        let (a, b) = (a % self.m, b % self.m);
        if a >= b {
            a - b
        } else {
            self.m - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: Residue) -> Residue {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: Residue, b: Residue) -> Residue {
        ((a as u128 * b as u128) % self.m as u128) as Residue
    }

    pub fn pow(&self, base: Residue, exp: u64) -> Residue {
        pow_mod(base, exp, self.m)
    }

    /// Multiplicative inverse; fails when `gcd(a, m) != 1`.
    pub fn inv(&self, a: Residue) -> Result<Residue> {
        let a = a % self.m;
        let egcd = (a as i128).extended_gcd(&(self.m as i128));
        if egcd.gcd != 1 {
            return Err(Error::NotInvertible {
                value: a,
                modulus: self.m,
            });
        }
        Ok(egcd.x.rem_euclid(self.m as i128) as Residue)
    }

    /// `1/4`, when 4 is a unit.
    pub fn quarter(&self) -> Option<Residue> {
        self.inv(4 % self.m).ok()
    }

    pub fn elements(&self) -> std::ops::Range<Residue> {
        0..self.m
    }
}

impl fmt::Display for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.m)
    }
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `ring_inv` as a free function.
pub fn ring_inv(a: Residue, ring: &ResidueRing) -> Result<Residue> {
    ring.inv(a)
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidModulus {
            modulus: p,
            reason: "expected an odd prime",
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LegendreValue {
    MinusOne,
    Zero,
    One,
}

impl LegendreValue {
    pub fn value(self) -> i8 {
        match self {
            LegendreValue::MinusOne => -1,
            LegendreValue::Zero => 0,
            LegendreValue::One => 1,
        }
    }

    /// Encoding in `F_p`, with -1 as `p - 1`.
    pub fn as_residue(self, p: u64) -> Residue {
        match self {
            LegendreValue::MinusOne => p - 1,
            LegendreValue::Zero => 0,
            LegendreValue::One => 1,
        }
    }
}

/// Legendre symbol `(a / p)` computed with quadratic reciprocity, so that
/// Euler's criterion stays available as an independent check.
pub fn legendre(a: i64, p: u64) -> Result<LegendreValue> {
    require_odd_prime(p)?;
    let mut a = a.rem_euclid(p as i64) as u64;
    let mut n = p;
    if a == 0 {
        return Ok(LegendreValue::Zero);
    }
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
    Ok(if sign == 1 {
        LegendreValue::One
    } else {
        LegendreValue::MinusOne
    })
}

/// Smallest `k >= 1` with `a^k = 1 (mod p)`.
pub fn mult_order(a: Residue, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::InvalidModulus {
            modulus: p,
            reason: "expected a prime",
        });
    }
    let a = a % p;
    if a == 0 {
        return Err(Error::NotInvertible {
            value: a,
            modulus: p,
        });
    }
    // The order divides p - 1; take the smallest divisor that works.
    let group = p - 1;
    let mut divisors: Vec<u64> = (1..=group)
        .take_while(|d| d * d <= group)
        .filter(|d| group % d == 0)
        .flat_map(|d| [d, group / d])
        .collect();
    divisors.sort_unstable();
    divisors.dedup();
    Ok(divisors
        .into_iter()
        .find(|&d| pow_mod(a, d, p) == 1)
        .expect("a^(p-1) = 1 for every unit"))
}

pub fn is_mersenne_prime(p: u64) -> bool {
    is_prime(p) && p >= 3 && (p + 1).is_power_of_two()
}

/// The smallest positive quadratic non-residue modulo an odd prime.
pub fn smallest_non_residue(p: u64) -> Result<Residue> {
    require_odd_prime(p)?;
    Ok((2..p)
        .find(|&d| pow_mod(d, (p - 1) / 2, p) == p - 1)
        .expect("every odd prime has a non-residue"))
}

/// Square root in `F_p` (Tonelli–Shanks). Returns the smaller of the two
/// roots, or `None` for non-residues.
pub fn sqrt_mod(a: Residue, p: u64) -> Option<Residue> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r.min(p - r))
}

/// An element `a + b·√d` of `F_{p^2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    pub a: Residue,
    pub b: Residue,
}

impl QuadExtElem {
    pub fn is_base(&self) -> bool {
        self.b == 0
    }
}

/// The field `F_{p^2} = F_p(√d)` for the smallest non-residue `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadExt {
    p: u64,
    d: Residue,
}

impl QuadExt {
    pub fn new(p: u64) -> Result<Self> {
        let d = smallest_non_residue(p)?;
        Ok(QuadExt { p, d })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn non_residue(&self) -> Residue {
        self.d
    }

    pub fn elem(&self, a: Residue, b: Residue) -> QuadExtElem {
        QuadExtElem {
            a: a % self.p,
            b: b % self.p,
        }
    }

    pub fn base(&self, a: Residue) -> QuadExtElem {
        self.elem(a, 0)
    }

    pub fn zero(&self) -> QuadExtElem {
        self.elem(0, 0)
    }

    pub fn one(&self) -> QuadExtElem {
        self.elem(1, 0)
    }

    pub fn sqrt_d(&self) -> QuadExtElem {
        self.elem(0, 1)
    }

    #[inline]
    fn mulp(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.p as u128) as u64
    }

    pub fn add(&self, x: QuadExtElem, y: QuadExtElem) -> QuadExtElem {
        self.elem(x.a + y.a, x.b + y.b)
    }

    pub fn sub(&self, x: QuadExtElem, y: QuadExtElem) -> QuadExtElem {
        self.elem(x.a + self.p - y.a, x.b + self.p - y.b)
    }

    pub fn mul(&self, x: QuadExtElem, y: QuadExtElem) -> QuadExtElem {
        let bb = self.mulp(self.mulp(x.b, y.b), self.d);
        let a = (self.mulp(x.a, y.a) + bb) % self.p;
        let b = (self.mulp(x.a, y.b) + self.mulp(x.b, y.a)) % self.p;
        QuadExtElem { a, b }
    }

    /// Inverse via the norm `a² - d·b²`; `None` for zero.
    pub fn inv(&self, x: QuadExtElem) -> Option<QuadExtElem> {
        let p = self.p;
        let norm = (self.mulp(x.a, x.a) + p - self.mulp(self.d, self.mulp(x.b, x.b))) % p;
        if norm == 0 {
            return None;
        }
        let ni = pow_mod(norm, p - 2, p);
        Some(self.elem(self.mulp(x.a, ni), self.mulp(p - x.b, ni)))
    }

    pub fn div(&self, x: QuadExtElem, y: QuadExtElem) -> Option<QuadExtElem> {
        self.inv(y).map(|yi| self.mul(x, yi))
    }

    /// `y^n` by square-and-multiply.
    pub fn pow(&self, y: QuadExtElem, mut n: u64) -> QuadExtElem {
        let mut acc = self.one();
        let mut b = y;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            n >>= 1;
        }
        acc
    }

    /// A root `y` of `y(1 - y) = x`, namely `y = (1 + s)/2` with `s² = 1 - 4x`.
    ///
    /// `s` is canonical: the smaller of `±r` when `1 - 4x = r²` in `F_p`,
    /// otherwise `c·√d` with the smaller of `±c`.
    pub fn solve_y(&self, x: Residue) -> QuadExtElem {
        let p = self.p;
        let disc = (1 + p - self.mulp(4, x % p)) % p;
        let s = match sqrt_mod(disc, p) {
            Some(r) => self.elem(r, 0),
            None => {
                // disc / d is a residue because both are non-residues.
                let q = self.mulp(disc, pow_mod(self.d, p - 2, p));
                let c = sqrt_mod(q, p).expect("quotient of non-residues is a residue");
                self.elem(0, c)
            }
        };
        let half = pow_mod(2, p - 2, p);
        let one_plus_s = self.add(self.one(), s);
        self.mul(one_plus_s, self.base(half))
    }
}

/// `ext_make`: the field for `p` and the canonical `y` with `y(1-y) = x`.
pub fn ext_make(x: Residue, p: u64) -> Result<(QuadExt, QuadExtElem)> {
    let field = QuadExt::new(p)?;
    let y = field.solve_y(x);
    Ok((field, y))
}

/// `ext_pow` as a free function.
pub fn ext_pow(field: &QuadExt, y: QuadExtElem, n: u64) -> QuadExtElem {
    field.pow(y, n)
}

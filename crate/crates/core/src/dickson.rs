//! Reversed Dickson polynomials `D_{n,k}(a, x)` over `Z_m`.
//!
//! Three evaluation routes are kept deliberately separate:
//!
//! * [`eval_recurrence`]: the three-term recurrence `u_n = a·u_{n-1} - x·u_{n-2}`.
//! * [`eval_explicit`]: the closed sum with exact big-integer coefficients.
//! * [`eval_functional`]: the substitution `x = y(1-y)` with `y` in `F_{p^2}`.
//!
//! The first kind (`k = 0`) is `D_n`, the second (`k = 1`) is `E_n`, and a
//! general kind is the combination `(1-k)·D_n + k·E_n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{QuadExt, Residue, ResidueRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Kind(pub u32);

impl Kind {
    pub const FIRST: Kind = Kind(0);
    pub const SECOND: Kind = Kind(1);

    pub fn k(self) -> u32 {
        self.0
    }

    /// `D_{0,k} = 2 - k` reduced into the ring.
    fn initial(self, ring: &ResidueRing) -> Residue {
        ring.sub(2 % ring.modulus(), self.0 as u64 % ring.modulus())
    }
}

/// A reversed Dickson polynomial `D_{n,k}(a, ·)` over a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdpSpec {
    pub n: u64,
    pub kind: Kind,
    pub a: Residue,
    pub ring: ResidueRing,
}

impl RdpSpec {
    /// The normalized case `a = 1`.
    pub fn new(n: u64, kind: Kind, ring: ResidueRing) -> Self {
        let a = 1 % ring.modulus();
        RdpSpec { n, kind, a, ring }
    }

    pub fn first(n: u64, ring: ResidueRing) -> Self {
        Self::new(n, Kind::FIRST, ring)
    }

    pub fn second(n: u64, ring: ResidueRing) -> Self {
        Self::new(n, Kind::SECOND, ring)
    }

    pub fn with_a(mut self, a: Residue) -> Self {
        self.a = a % self.ring.modulus();
        self
    }

    pub fn with_n(&self, n: u64) -> Self {
        RdpSpec { n, ..self.clone() }
    }
}

fn lucas(n: u64, u0: Residue, a: Residue, x: Residue, ring: &ResidueRing) -> Residue {
    if n == 0 {
        return u0;
    }
    let (mut prev, mut cur) = (u0, a);
    for _ in 1..n {
        let next = ring.sub(ring.mul(a, cur), ring.mul(x, prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Value via the recurrence, from `D_0 = 2, D_1 = a` and `E_0 = 1, E_1 = a`.
pub fn eval_recurrence(spec: &RdpSpec, x: Residue) -> Residue {
    let ring = &spec.ring;
    let x = x % ring.modulus();
    let two = 2 % ring.modulus();
    let one = 1 % ring.modulus();
    match spec.kind.k() {
        0 => lucas(spec.n, two, spec.a, x, ring),
        1 => lucas(spec.n, one, spec.a, x, ring),
        k => {
            let d = lucas(spec.n, two, spec.a, x, ring);
            let e = lucas(spec.n, one, spec.a, x, ring);
            let k = k as u64 % ring.modulus();
            ring.add(ring.mul(ring.sub(one, k), d), ring.mul(k, e))
        }
    }
}

/// Exact integer coefficients `(n - k·i)/(n - i) · C(n - i, i)` for
/// `i = 0..=n/2`. For `n = 0` the single coefficient is `2 - k`.
pub fn explicit_coefficients(n: u64, kind: Kind) -> Vec<BigInt> {
    let k = BigInt::from(kind.k());
    if n == 0 {
        return vec![BigInt::from(2) - k];
    }
    let mut out = Vec::with_capacity(n as usize / 2 + 1);
    let mut binom = BigUint::one();
    for i in 0..=n / 2 {
        if i > 0 {
            // C(n-i, i) from C(n-i+1, i-1)
            let j = i - 1;
            binom *= BigUint::from((n - 2 * j) * (n - 2 * j - 1));
            binom /= BigUint::from((j + 1) * (n - j));
        }
        let numer = (BigInt::from(n) - &k * BigInt::from(i)) * BigInt::from(binom.clone());
        let (q, r) = numer.div_rem(&BigInt::from(n - i));
        debug_assert!(r.is_zero(), "coefficient must be integral");
        out.push(q);
    }
    out
}

/// Reduces an explicit coefficient list mod `m` into a coefficient vector
/// for `D_{n,k}(a, x)` in powers of `x`.
pub fn explicit_to_poly(coeffs: &[BigInt], n: u64, a: Residue, ring: &ResidueRing) -> CoefPoly {
    let m = BigInt::from(ring.modulus());
    let mut out = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.iter().enumerate() {
        let i = i as u64;
        let c = c.mod_floor(&m).to_u64().expect("reduced below modulus");
        let sign = if i % 2 == 1 { ring.neg(c) } else { c };
        let exp = if n == 0 { 0 } else { n - 2 * i };
        out.push(ring.mul(sign, ring.pow(a, exp)));
    }
    CoefPoly::new(ring.clone(), out)
}

/// Value via the explicit sum with big-integer coefficients.
pub fn eval_explicit(spec: &RdpSpec, x: Residue) -> Residue {
    let coeffs = explicit_coefficients(spec.n, spec.kind);
    explicit_to_poly(&coeffs, spec.n, spec.a, &spec.ring).eval(x)
}

/// Value via the functional expression in `F_{p^2}`.
///
/// A unit `a` is handled through `D_n(a, x) = a^n·D_n(1, x/a²)`.
pub fn eval_functional(spec: &RdpSpec, x: Residue) -> Result<Residue> {
    let ring = &spec.ring;
    let p = ring.modulus();
    if !ring.is_prime() || p == 2 {
        return Err(Error::UnsupportedRing {
            modulus: p,
            reason: "functional expression needs an odd prime field",
        });
    }
    if spec.a % p != 1 {
        let a_inv = ring.inv(spec.a)?;
        let scaled = ring.mul(x, ring.mul(a_inv, a_inv));
        let unit = RdpSpec::new(spec.n, spec.kind, ring.clone());
        let v = eval_functional(&unit, scaled)?;
        return Ok(ring.mul(ring.pow(spec.a, spec.n), v));
    }
    let field = QuadExt::new(p)?;
    let x = x % p;
    let n = spec.n;
    let first = || {
        let y = field.solve_y(x);
        let z = field.sub(field.one(), y);
        let v = field.add(field.pow(y, n), field.pow(z, n));
        debug_assert!(v.is_base());
        v.a
    };
    let second = || {
        if Some(x) == ring.quarter() {
            // (n+1) / 2^n
            let two_n = ring.pow(2, n);
            return ring.mul((n + 1) % p, ring.inv(two_n).expect("2 is a unit"));
        }
        let y = field.solve_y(x);
        let z = field.sub(field.one(), y);
        let num = field.sub(field.pow(y, n + 1), field.pow(z, n + 1));
        let den = field.sub(field.add(y, y), field.one());
        let v = field.div(num, den).expect("2y - 1 != 0 away from x = 1/4");
        debug_assert!(v.is_base());
        v.a
    };
    Ok(match spec.kind.k() {
        0 => {
            if n == 0 {
                2 % p
            } else {
                first()
            }
        }
        1 => second(),
        k => {
            let d = if n == 0 { 2 % p } else { first() };
            let e = second();
            let k = k as u64 % p;
            ring.add(ring.mul(ring.sub(1, k), d), ring.mul(k, e))
        }
    })
}

/// Dense polynomial over `Z_m`, lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefPoly {
    ring: ResidueRing,
    coeffs: Vec<Residue>,
}

impl CoefPoly {
    pub fn new(ring: ResidueRing, mut coeffs: Vec<Residue>) -> Self {
        let m = ring.modulus();
        for c in coeffs.iter_mut() {
            *c %= m;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CoefPoly { ring, coeffs }
    }

    pub fn zero(ring: ResidueRing) -> Self {
        CoefPoly::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Residue] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Residue) -> Residue {
        let ring = &self.ring;
        let x = x % ring.modulus();
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| ring.add(ring.mul(acc, x), c))
    }

    pub fn derivative(&self) -> CoefPoly {
        let ring = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ring.mul(c, i as u64 % ring.modulus()))
            .collect();
        CoefPoly::new(ring.clone(), coeffs)
    }

    pub fn add(&self, other: &CoefPoly) -> CoefPoly {
        let ring = &self.ring;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ring.add(a, b)
            })
            .collect();
        CoefPoly::new(ring.clone(), coeffs)
    }

    pub fn mul(&self, other: &CoefPoly) -> CoefPoly {
        if self.is_zero() || other.is_zero() {
            return CoefPoly::zero(self.ring.clone());
        }
        let ring = &self.ring;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(out[i + j], ring.mul(a, b));
            }
        }
        CoefPoly::new(ring.clone(), out)
    }

    /// Reduction modulo `x^q - x`: exponents `e >= q` fold onto
    /// `1 + (e - 1) mod (q - 1)`.
    pub fn reduce_frobenius(&self, q: u64) -> CoefPoly {
        let q = q as usize;
        if self.coeffs.len() <= q {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = vec![0; q];
        for (e, &c) in self.coeffs.iter().enumerate() {
            let target = if e < q { e } else { 1 + (e - 1) % (q - 1) };
            out[target] = ring.add(out[target], c);
        }
        CoefPoly::new(ring.clone(), out)
    }

    /// `self + x`.
    pub fn plus_identity(&self) -> CoefPoly {
        let x = CoefPoly::new(self.ring.clone(), vec![0, 1]);
        self.add(&x)
    }
}

/// Term-wise derivative `c_i·i·x^{i-1}`.
pub fn formal_derivative(poly: &CoefPoly) -> CoefPoly {
    poly.derivative()
}

/// Coefficient polynomial of `D_{n,k}(a, x)` reduced mod `m`, built by the
/// symbolic recurrence from `D_{0,k} = 2 - k` and `D_{1,k} = a`. It is not
/// reduced modulo `x^p - x`.
pub fn coefficient_poly(spec: &RdpSpec) -> CoefPoly {
    let ring = &spec.ring;
    let init = spec.kind.initial(ring);
    if spec.n == 0 {
        return CoefPoly::new(ring.clone(), vec![init]);
    }
    let mut prev = vec![init];
    let mut cur = vec![spec.a];
    for _ in 1..spec.n {
        // next = a·cur - x·prev
        let len = cur.len().max(prev.len() + 1);
        let mut next = vec![0; len];
        for (i, &c) in cur.iter().enumerate() {
            next[i] = ring.mul(spec.a, c);
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = ring.sub(next[i + 1], c);
        }
        prev = cur;
        cur = next;
    }
    CoefPoly::new(ring.clone(), cur)
}

/// Value sequence `[f_0(c), ..., f_{n_max}(c)]` for fixed argument `c`.
pub fn sequence(
    kind: Kind,
    a: Residue,
    c: Residue,
    ring: &ResidueRing,
    n_max: u64,
) -> Vec<Residue> {
    let a = a % ring.modulus();
    let c = c % ring.modulus();
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(kind.initial(ring));
    if n_max == 0 {
        return out;
    }
    out.push(a);
    for n in 2..=n_max as usize {
        let v = ring.sub(ring.mul(a, out[n - 1]), ring.mul(c, out[n - 2]));
        out.push(v);
    }
    out
}

/// Formal-derivative sequence `[f'_0(c), ..., f'_{n_max}(c)]`, obtained by
/// differentiating the recurrence: `u'_n = a·u'_{n-1} - u_{n-2} - x·u'_{n-2}`.
pub fn derivative_sequence(
    kind: Kind,
    a: Residue,
    c: Residue,
    ring: &ResidueRing,
    n_max: u64,
) -> Vec<Residue> {
    let a = a % ring.modulus();
    let c = c % ring.modulus();
    let values = sequence(kind, a, c, ring, n_max);
    let mut out = vec![0; n_max as usize + 1];
    for n in 2..=n_max as usize {
        let t = ring.sub(ring.mul(a, out[n - 1]), values[n - 2]);
        out[n] = ring.sub(t, ring.mul(c, out[n - 2]));
    }
    out
}

/// `f'_n(x)` through the differentiated recurrence.
pub fn formal_derivative_value(spec: &RdpSpec, x: Residue) -> Residue {
    derivative_sequence(spec.kind, spec.a, x, &spec.ring, spec.n)[spec.n as usize]
}

fn odd_prime_field(p: u64) -> Result<ResidueRing> {
    let ring = ResidueRing::new(p)?;
    if !ring.is_prime() || p == 2 {
        return Err(Error::UnsupportedRing {
            modulus: p,
            reason: "expected an odd prime field",
        });
    }
    Ok(ring)
}

/// `D'_n(1, x)` over `F_p`: `-n·E_{n-2}(1, x)` away from `x = 1/4`, the
/// formal derivative at `x = 1/4` (and for `n < 2`).
pub fn derivative_first_kind(n: u64, x: Residue, p: u64) -> Result<Residue> {
    let ring = odd_prime_field(p)?;
    let x = x % p;
    if n < 2 || Some(x) == ring.quarter() {
        return Ok(formal_derivative_value(&RdpSpec::first(n, ring), x));
    }
    let e = eval_recurrence(&RdpSpec::second(n - 2, ring.clone()), x);
    Ok(ring.neg(ring.mul(n % p, e)))
}

/// `E'_n(1, x)` over `F_p`: `(2·E_n - (n+1)·D_n)/(1 - 4x)` away from
/// `x = 1/4`, the formal derivative at `x = 1/4`.
pub fn derivative_second_kind(n: u64, x: Residue, p: u64) -> Result<Residue> {
    let ring = odd_prime_field(p)?;
    let x = x % p;
    if Some(x) == ring.quarter() {
        return Ok(formal_derivative_value(&RdpSpec::second(n, ring), x));
    }
    let d = eval_recurrence(&RdpSpec::first(n, ring.clone()), x);
    let e = eval_recurrence(&RdpSpec::second(n, ring.clone()), x);
    let num = ring.sub(ring.mul(2, e), ring.mul((n + 1) % p, d));
    let den = ring.sub(1, ring.mul(4, x));
    Ok(ring.mul(num, ring.inv(den)?))
}

/// `D_n(0, x)` and `E_n(0, x)`: zero for odd `n`, `2(-x)^l` resp. `(-x)^l`
/// for `n = 2l`.
pub fn closed_form_a_zero(n: u64, kind: Kind, x: Residue, ring: &ResidueRing) -> Result<Residue> {
    let lead = match kind.k() {
        0 => 2 % ring.modulus(),
        1 => 1 % ring.modulus(),
        k => return Err(Error::UnsupportedKind(k)),
    };
    if n % 2 == 1 {
        return Ok(0);
    }
    let neg_x = ring.neg(x % ring.modulus());
    Ok(ring.mul(lead, ring.pow(neg_x, n / 2)))
}

/// Streams the rows `[f_n(0), ..., f_n(m-1)]` for consecutive `n`.
///
/// Rows can start at any index: the starting pair is computed with the
/// companion matrix `[[a, -x], [1, 0]]`, so disjoint index ranges can be
/// scanned independently.
#[derive(Debug, Clone)]
pub struct IndexRows {
    ring: ResidueRing,
    a: Residue,
    init: Residue,
    n: u64,
    prev: Vec<Residue>,
    cur: Vec<Residue>,
}

impl IndexRows {
    pub fn new(kind: Kind, a: Residue, ring: &ResidueRing, start: u64) -> Self {
        let a = a % ring.modulus();
        let init = kind.initial(ring);
        let (prev, cur): (Vec<_>, Vec<_>) = ring
            .elements()
            .map(|x| {
                if start == 0 {
                    // prev is a placeholder: only cur is read before the first step
                    (0, init)
                } else {
                    let (u_n, u_prev) = companion_power(a, x, init, ring, start);
                    (u_prev, u_n)
                }
            })
            .unzip();
        IndexRows {
            ring: ring.clone(),
            a,
            init,
            n: start,
            prev,
            cur,
        }
    }

    /// Index of the row [`Self::row`] returns.
    pub fn index(&self) -> u64 {
        self.n
    }

    pub fn row(&self) -> &[Residue] {
        &self.cur
    }

    pub fn advance(&mut self) {
        let ring = &self.ring;
        if self.n == 0 {
            self.prev = vec![self.init; ring.modulus() as usize];
            self.cur = vec![self.a; ring.modulus() as usize];
        } else {
            for (x, (p, c)) in self.prev.iter_mut().zip(self.cur.iter_mut()).enumerate() {
                let next = ring.sub(ring.mul(self.a, *c), ring.mul(x as u64, *p));
                *p = *c;
                *c = next;
            }
        }
        self.n += 1;
    }
}

/// Returns `(u_n, u_{n-1})` for `n >= 1`.
fn companion_power(
    a: Residue,
    x: Residue,
    u0: Residue,
    ring: &ResidueRing,
    n: u64,
) -> (Residue, Residue) {
    type M = [[Residue; 2]; 2];
    let mul = |p: &M, q: &M| -> M {
        let mut r = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = ring.add(ring.mul(p[i][0], q[0][j]), ring.mul(p[i][1], q[1][j]));
            }
        }
        r
    };
    let one = 1 % ring.modulus();
    let mut acc: M = [[one, 0], [0, one]];
    let mut base: M = [[a, ring.neg(x)], [one, 0]];
    let mut e = n - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    let u1 = a;
    (
        ring.add(ring.mul(acc[0][0], u1), ring.mul(acc[0][1], u0)),
        ring.add(ring.mul(acc[1][0], u1), ring.mul(acc[1][1], u0)),
    )
}

/// `f_n(x)` in `O(log n)` via the companion matrix.
pub fn eval_fast(spec: &RdpSpec, x: Residue) -> Residue {
    let init = spec.kind.initial(&spec.ring);
    if spec.n == 0 {
        return init;
    }
    companion_power(spec.a, x % spec.ring.modulus(), init, &spec.ring, spec.n).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> ResidueRing {
        ResidueRing::new(p).unwrap()
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(eval_recurrence(&RdpSpec::first(2, field(5)), 2), 2);
        for m in [2, 3, 7, 12] {
            for x in 0..m {
                assert_eq!(eval_recurrence(&RdpSpec::first(0, field(m)), x), 2 % m);
            }
        }
        // E_15 = 4x^3 + x - 1 on F_5 \ {0, -1}
        assert_eq!(eval_recurrence(&RdpSpec::second(15, field(5)), 1), 4);
    }

    #[test]
    fn explicit_examples() {
        // D_3(1, x) = 1 - 3x, i.e. 1 + 4x over F_7
        let d3 = explicit_to_poly(&explicit_coefficients(3, Kind::FIRST), 3, 1, &field(7));
        assert_eq!(d3.coeffs(), &[1, 4]);
        for p in [3u64, 5, 7, 11] {
            let e2 = explicit_to_poly(&explicit_coefficients(2, Kind::SECOND), 2, 1, &field(p));
            assert_eq!(e2.coeffs(), &[1, p - 1]);
        }
        assert_eq!(explicit_coefficients(0, Kind(3)), vec![BigInt::from(-1)]);
    }

    #[test]
    fn explicit_coefficients_small_cases() {
        // D_4 = 2 - 4x + ... : coefficients n/(n-i)·C(n-i,i) = 1, 4, 2
        let c: Vec<i64> = explicit_coefficients(4, Kind::FIRST)
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(c, vec![1, 4, 2]);
        let c: Vec<i64> = explicit_coefficients(6, Kind::SECOND)
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(c, vec![1, 5, 6, 1]);
    }

    #[test]
    fn functional_examples() {
        let ring = field(5);
        assert_eq!(
            eval_functional(&RdpSpec::second(15, ring.clone()), 4).unwrap(),
            2
        );
        assert_eq!(
            eval_functional(&RdpSpec::second(94, ring.clone()), 4).unwrap(),
            0
        );
        for p in [3u64, 5, 7, 11, 13] {
            for x in 0..p {
                assert_eq!(eval_functional(&RdpSpec::first(1, field(p)), x).unwrap(), 1);
            }
        }
        assert!(matches!(
            eval_functional(&RdpSpec::first(3, field(2)), 1),
            Err(Error::UnsupportedRing { .. })
        ));
        assert!(eval_functional(&RdpSpec::first(3, field(9)), 1).is_err());
    }

    #[test]
    fn functional_handles_unit_parameter() {
        let ring = field(11);
        for a in 1..11 {
            for n in 0..40 {
                for kind in [Kind::FIRST, Kind::SECOND, Kind(3)] {
                    let spec = RdpSpec::new(n, kind, ring.clone()).with_a(a);
                    for x in 0..11 {
                        assert_eq!(
                            eval_functional(&spec, x).unwrap(),
                            eval_recurrence(&spec, x)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coefficient_poly_examples() {
        assert_eq!(
            coefficient_poly(&RdpSpec::first(4, field(3))).coeffs(),
            &[1, 2, 2]
        );
        for p in [5u64, 7, 13] {
            assert_eq!(
                coefficient_poly(&RdpSpec::second(3, field(p))).coeffs(),
                &[1, p - 2]
            );
        }
        assert_eq!(
            coefficient_poly(&RdpSpec::first(0, field(7))).coeffs(),
            &[2]
        );
        // E_0 over Z_2... D_{0,2} = 0 is the zero polynomial
        assert!(coefficient_poly(&RdpSpec::new(0, Kind(2), field(7))).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let d = formal_derivative(&CoefPoly::new(field(3), vec![1, 2, 2]));
        assert_eq!(d.coeffs(), &[2, 1]);
        for p in [3u64, 5, 7, 11] {
            for n in 1..60 {
                let dd = formal_derivative(&coefficient_poly(&RdpSpec::first(n, field(p))));
                let want = if n == 1 { 0 } else { field(p).neg(n % p) };
                assert_eq!(dd.eval(0), want, "D'_{n}(1,0) mod {p}");
                let de = formal_derivative(&coefficient_poly(&RdpSpec::second(n, field(p))));
                assert_eq!(
                    de.eval(0),
                    field(p).neg((n + p - 1) % p),
                    "E'_{n}(1,0) mod {p}"
                );
            }
        }
    }

    #[test]
    fn derivative_first_kind_examples() {
        assert_eq!(derivative_first_kind(6, 0, 3).unwrap(), 0);
        assert_eq!(derivative_first_kind(18, 0, 3).unwrap(), 0);
        assert_eq!(derivative_first_kind(10, 1, 3).unwrap(), 0);
        assert_eq!(derivative_first_kind(22, 1, 3).unwrap(), 0);
        assert_eq!(derivative_first_kind(20, 1, 3).unwrap(), 1);
        // independent: D_20 mod 3 = 1+x+2x²+x³+x⁴+x⁵+2x⁹+2x¹⁰
        let d20 = coefficient_poly(&RdpSpec::first(20, field(3)));
        assert_eq!(d20.coeffs(), &[1, 1, 2, 1, 1, 1, 0, 0, 0, 2, 2]);
        assert_eq!(d20.derivative().eval(1), 1);
        assert!(derivative_first_kind(5, 1, 2).is_err());
    }

    #[test]
    fn derivative_second_kind_examples() {
        for p in [3u64, 5, 7, 11, 13] {
            for x in 0..p {
                assert_eq!(derivative_second_kind(2, x, p).unwrap(), p - 1);
            }
        }
        assert_eq!(derivative_second_kind(15, 2, 3).unwrap(), 2);
        assert_eq!(derivative_second_kind(5, 1, 3).unwrap(), 2);
    }

    #[test]
    fn derivative_routes_agree() {
        for p in [3u64, 5, 7, 11, 13] {
            let ring = field(p);
            for n in 0..80 {
                let dpoly = coefficient_poly(&RdpSpec::first(n, ring.clone())).derivative();
                let epoly = coefficient_poly(&RdpSpec::second(n, ring.clone())).derivative();
                for x in 0..p {
                    if n >= 2 {
                        assert_eq!(derivative_first_kind(n, x, p).unwrap(), dpoly.eval(x));
                    }
                    assert_eq!(
                        derivative_second_kind(n, x, p).unwrap(),
                        epoly.eval(x),
                        "n={n} x={x} p={p}"
                    );
                    assert_eq!(
                        formal_derivative_value(&RdpSpec::first(n, ring.clone()), x),
                        dpoly.eval(x)
                    );
                }
            }
        }
    }

    #[test]
    fn a_zero_closed_forms() {
        let z5 = field(5);
        for m in [2u64, 5, 8, 9, 25] {
            let ring = field(m);
            for x in 0..m {
                assert_eq!(closed_form_a_zero(3, Kind::FIRST, x, &ring).unwrap(), 0);
                assert_eq!(
                    closed_form_a_zero(2, Kind::FIRST, x, &ring).unwrap(),
                    ring.neg(ring.mul(2, x))
                );
            }
        }
        assert_eq!(closed_form_a_zero(4, Kind::SECOND, 2, &z5).unwrap(), 4);
        assert!(closed_form_a_zero(4, Kind(2), 2, &z5).is_err());
        for m in [2u64, 3, 4, 5, 8, 9, 25, 27] {
            let ring = field(m);
            for n in 0..60 {
                for kind in [Kind::FIRST, Kind::SECOND] {
                    let spec = RdpSpec::new(n, kind, ring.clone()).with_a(0);
                    for x in 0..m {
                        assert_eq!(
                            closed_form_a_zero(n, kind, x, &ring).unwrap(),
                            eval_recurrence(&spec, x)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(
            sequence(Kind::SECOND, 1, 1, &field(2), 8),
            vec![1, 1, 0, 1, 1, 0, 1, 1, 0]
        );
        assert_eq!(sequence(Kind::FIRST, 1, 0, &field(5), 3), vec![2, 1, 1, 1]);
        let z3 = field(3);
        assert_eq!(
            sequence(Kind::SECOND, 1, z3.reduce(-1), &z3, 7),
            vec![1, 1, 2, 0, 2, 2, 1, 0]
        );
    }

    #[test]
    fn index_rows_match_recurrence_from_any_start() {
        for m in [2u64, 5, 9, 12] {
            let ring = field(m);
            for kind in [Kind::FIRST, Kind::SECOND, Kind(4)] {
                for a in [0u64, 1, 3] {
                    for start in [0u64, 1, 2, 7, 30] {
                        let mut rows = IndexRows::new(kind, a, &ring, start);
                        for _ in 0..15 {
                            let n = rows.index();
                            let spec = RdpSpec::new(n, kind, ring.clone()).with_a(a);
                            let want: Vec<_> =
                                ring.elements().map(|x| eval_recurrence(&spec, x)).collect();
                            assert_eq!(rows.row(), &want[..], "m={m} kind={kind:?} a={a} n={n}");
                            for x in ring.elements() {
                                assert_eq!(eval_fast(&spec, x), want[x as usize]);
                            }
                            rows.advance();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_frobenius_preserves_values() {
        let ring = field(7);
        let poly = coefficient_poly(&RdpSpec::first(40, ring.clone()));
        let red = poly.reduce_frobenius(7);
        assert!(red.degree().unwrap() < 7);
        for x in 0..7 {
            assert_eq!(poly.eval(x), red.eval(x));
        }
    }
}

//! Finite fields `GF(p^k)` with `p >= 5`.
//!
//! Elements are stored by their *encoding*: an element with polynomial-basis
//! coordinates `(c_0, ..., c_{k-1})` (so that it equals `c_0 + c_1 x + ...`
//! in `GF(p)[x] / (modulus)`) is encoded as the integer `sum c_i p^i`.
//! Comparing encodings compares coordinate tuples lexicographically, highest
//! power first. This is the canonical order used wherever a "least"
//! representative is asked for.
//!
//! Multiplication, inversion and square roots go through discrete-log
//! tables. Addition in extension fields uses Zech logarithms; prime fields
//! use plain modular arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::algebra::poly::UniPoly;
use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u64 = 1 << 22;

const NO_LOG: u32 = u32::MAX;

/// A finite field `GF(p^k)` together with its arithmetic tables.
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "{}^{}/{}", self.p, self.k, coeffs.join(","))
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Raw arithmetic in `GF(p)[x] / (modulus)` on coordinate vectors, used
/// only while the tables are being built.
struct RawExt<'a> {
    p: u64,
    modulus: &'a [u32],
}

impl RawExt<'_> {
    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let k = self.k();
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % self.p;
            }
        }
        // reduce using x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for d in (k..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = d - k + i;
                prod[idx] = (prod[idx] + (self.p - c) * m as u64) % self.p;
            }
        }
        prod[..k].iter().map(|&c| c as u32).collect()
    }

    fn pow(&self, base: &[u32], mut e: u64) -> Vec<u32> {
        let mut result = vec![0u32; self.k()];
        result[0] = 1;
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        result
    }
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn decode(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0u32; k];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

impl Field {
    /// Builds `GF(p^k)`.
    ///
    /// When `modulus` is `None` and `k > 1`, the least monic irreducible
    /// polynomial of degree `k` (coefficients `c_0..c_{k-1}` compared as an
    /// encoding) is selected. `modulus` is given low-to-high and must be monic.
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ReducibleModulus("degree must be at least 1".into()));
        }
        if (p == 2 || p == 3) && k == 1 {
            return Err(Error::BadCharacteristic(p));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(k)))?;
        if q <= 4 {
            return Err(Error::FieldTooSmall(q));
        }
        if p == 2 || p == 3 {
            return Err(Error::BadCharacteristic(p));
        }
        let p32 = p as u32;
        if k == 1 {
            return Ok(Self::build(p32, 1, vec![0, 1]));
        }
        let base = Self::build(p32, 1, vec![0, 1]);
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::ReducibleModulus(format!(
                        "expected {} monic coefficients below {}",
                        k + 1,
                        p
                    )));
                }
                let m: Vec<u32> = m.iter().map(|&c| c as u32).collect();
                if !is_irreducible(&base, &m) {
                    return Err(Error::ReducibleModulus(format!(
                        "{m:?} factors over GF({p})"
                    )));
                }
                m
            }
            None => least_irreducible(&base, k as usize),
        };
        Ok(Self::build(p32, k, modulus))
    }

    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        Self::new(p, 1, None)
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Field {
        let q = p.pow(k);
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let raw = RawExt {
            p: p as u64,
            modulus: &modulus,
        };
        let mut exp = Vec::with_capacity(q as usize - 1);
        if k == 1 {
            let pw = |b: u64, mut e: u64| {
                let (mut r, mut b) = (1u64, b);
                while e > 0 {
                    if e & 1 == 1 {
                        r = r * b % p as u64;
                    }
                    b = b * b % p as u64;
                    e >>= 1;
                }
                r
            };
            let g = (2..p as u64)
                .find(|&g| factors.iter().all(|&r| pw(g, order / r) != 1))
                .unwrap_or(1);
            let mut x = 1u64;
            for _ in 0..order {
                exp.push(x as u32);
                x = x * g % p as u64;
            }
        } else {
            let g = (2..q)
                .map(|v| decode(v, p, k as usize))
                .find(|g| {
                    factors.iter().all(|&r| {
                        let t = raw.pow(g, order / r);
                        !(t[0] == 1 && t[1..].iter().all(|&c| c == 0))
                    })
                })
                .expect("multiplicative group is cyclic");
            let mut x = decode(1, p, k as usize);
            for _ in 0..order {
                exp.push(encode(&x, p));
                x = raw.mul(&x, &g);
            }
        }
        let mut log = vec![NO_LOG; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mut zech = Vec::new();
        if k > 1 {
            zech = exp
                .iter()
                .map(|&e| {
                    let mut d = decode(e, p, k as usize);
                    d[0] = (d[0] + 1) % p;
                    log[encode(&d, p) as usize]
                })
                .collect();
        }
        Field {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            zech,
        }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order `q = p^k`.
    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Monic modulus, low-to-high (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// `mu` in `{1, -1}` with `q = mu (mod 3)`.
    pub fn mu(&self) -> i64 {
        if self.q % 3 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn zero(&self) -> FieldElem<'_> {
        FieldElem { f: self, v: 0 }
    }

    pub fn one(&self) -> FieldElem<'_> {
        FieldElem { f: self, v: 1 }
    }

    /// Image of an integer in the prime subfield.
    pub fn int(&self, n: i64) -> FieldElem<'_> {
        FieldElem {
            f: self,
            v: n.rem_euclid(self.p as i64) as u32,
        }
    }

    /// `num / den` in the prime subfield, or `None` if `den = 0` in the field.
    pub fn frac(&self, num: i64, den: i64) -> Option<FieldElem<'_>> {
        self.int(den).inv().map(|d| self.int(num) * d)
    }

    /// Element with the given encoding.
    ///
    /// Panics if `enc >= q`.
    pub fn elem(&self, enc: u32) -> FieldElem<'_> {
        assert!(
            enc < self.q,
            "encoding {enc} out of range for field of order {}",
            self.q
        );
        FieldElem { f: self, v: enc }
    }

    pub fn try_elem(&self, enc: u64) -> Option<FieldElem<'_>> {
        (enc < self.q as u64).then_some(FieldElem {
            f: self,
            v: enc as u32,
        })
    }

    /// Element with polynomial-basis coordinates `digits` (low-to-high).
    pub fn from_digits(&self, digits: &[u32]) -> Option<FieldElem<'_>> {
        if digits.len() > self.k as usize || digits.iter().any(|&d| d >= self.p) {
            return None;
        }
        Some(FieldElem {
            f: self,
            v: encode(digits, self.p),
        })
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem<'_>> + '_ {
        (0..self.q).map(move |v| FieldElem { f: self, v })
    }

    /// The generator used for the log tables.
    pub fn primitive_element(&self) -> FieldElem<'_> {
        FieldElem {
            f: self,
            v: self.exp[1 % self.exp.len()],
        }
    }

    /// The canonically least nonsquare.
    pub fn nonsquare(&self) -> FieldElem<'_> {
        self.elements()
            .find(|x| !x.is_square())
            .expect("odd-order field has nonsquares")
    }

    /// The canonically least primitive cube root of unity, present iff `q = 1 (mod 3)`.
    pub fn cube_root_of_unity(&self) -> Option<FieldElem<'_>> {
        self.elements()
            .find(|&w| (w * w + w + self.one()).is_zero())
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if a == 0 {
            b
        } else if b == 0 {
            a
        } else {
            let n = self.q - 1;
            let (la, lb) = (self.log[a as usize], self.log[b as usize]);
            let d = if lb >= la { lb - la } else { lb + n - la };
            let z = self.zech[d as usize];
            if z == NO_LOG {
                0
            } else {
                self.exp[((la as u64 + z as u64) % n as u64) as usize]
            }
        }
    }

    fn neg_raw(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else if self.k == 1 {
            self.p - a
        } else {
            let n = self.q - 1;
            self.exp[((self.log[a as usize] + n / 2) % n) as usize]
        }
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else if self.k == 1 {
            (a as u64 * b as u64 % self.p as u64) as u32
        } else {
            let n = (self.q - 1) as u64;
            self.exp[((self.log[a as usize] as u64 + self.log[b as usize] as u64) % n) as usize]
        }
    }
}

fn is_irreducible(base: &Field, modulus: &[u32]) -> bool {
    let f = UniPoly::new(base, modulus.iter().map(|&c| base.elem(c)).collect());
    let k = modulus.len() - 1;
    if base.elements().any(|x| f.eval(x).is_zero()) {
        return false;
    }
    // Ben-Or: no irreducible factor of degree <= k/2
    let x = UniPoly::x(base);
    let mut frob = x.clone();
    for _ in 1..=k / 2 {
        frob = frob
            .powmod(&num_bigint::BigUint::from(base.p()), &f)
            .expect("modulus is nonzero");
        let g = UniPoly::gcd(&(&frob - &x), &f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn least_irreducible(base: &Field, k: usize) -> Vec<u32> {
    let p = base.p;
    let count = (p as u64).pow(k as u32);
    (0..count)
        .map(|tail| {
            let mut m = decode(tail as u32, p, k);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(base, m))
        .expect("irreducible polynomials exist in every degree")
}

/// Element of a [`Field`].
#[derive(Clone, Copy)]
pub struct FieldElem<'f> {
    f: &'f Field,
    v: u32,
}

impl<'f> FieldElem<'f> {
    pub fn field(&self) -> &'f Field {
        self.f
    }

    /// Canonical integer encoding `sum c_i p^i`.
    pub fn encoding(&self) -> u32 {
        self.v
    }

    /// Polynomial-basis coordinates, low-to-high.
    pub fn digits(&self) -> Vec<u32> {
        decode(self.v, self.f.p, self.f.k as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.v == 1
    }

    pub fn inv(&self) -> Option<FieldElem<'f>> {
        if self.v == 0 {
            return None;
        }
        let n = self.f.q - 1;
        let l = self.f.log[self.v as usize];
        Some(FieldElem {
            f: self.f,
            v: self.f.exp[((n - l) % n) as usize],
        })
    }

    pub fn pow(&self, e: u64) -> FieldElem<'f> {
        if e == 0 {
            return self.f.one();
        }
        if self.v == 0 {
            return *self;
        }
        let n = (self.f.q - 1) as u64;
        let l = self.f.log[self.v as usize] as u64;
        let idx = ((l as u128 * e as u128) % n as u128) as usize;
        FieldElem {
            f: self.f,
            v: self.f.exp[idx],
        }
    }

    /// Square and multiply, without the log tables.
    pub fn pow_by_squaring(&self, mut e: u64) -> FieldElem<'f> {
        let mut result = self.f.one();
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                result *= b;
            }
            b *= b;
            e >>= 1;
        }
        result
    }

    pub fn square(&self) -> FieldElem<'f> {
        *self * *self
    }

    pub fn cube(&self) -> FieldElem<'f> {
        *self * *self * *self
    }

    /// `0` counts as a square.
    pub fn is_square(&self) -> bool {
        self.v == 0 || self.f.log[self.v as usize].is_multiple_of(2)
    }

    /// Quadratic character with `chi(0) = 0`.
    pub fn chi(&self) -> i64 {
        if self.v == 0 {
            0
        } else if self.is_square() {
            1
        } else {
            -1
        }
    }

    /// A square root, choosing the one of `{y, -y}` with the smaller encoding.
    ///
    /// Prime fields use Tonelli-Shanks; extension fields halve the discrete log.
    pub fn sqrt(&self) -> Option<FieldElem<'f>> {
        if self.v == 0 {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        let y = if self.f.k == 1 {
            let r = tonelli_shanks(self.v as u64, self.f.p as u64)?;
            FieldElem {
                f: self.f,
                v: r as u32,
            }
        } else {
            let l = self.f.log[self.v as usize];
            FieldElem {
                f: self.f,
                v: self.f.exp[(l / 2) as usize],
            }
        };
        let neg = -y;
        Some(if neg.v < y.v { neg } else { y })
    }
}

/// Square root of a quadratic residue `n` modulo an odd prime `p`.
pub fn tonelli_shanks(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    let pw = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = (r as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        r
    };
    if pw(n, (p - 1) / 2) != 1 {
        return None;
    }
    let mut s = 0;
    let mut odd = p - 1;
    while odd.is_multiple_of(2) {
        odd /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pw(z, (p - 1) / 2) == p - 1)?;
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
    let mut m = s;
    let mut c = pw(z, odd);
    let mut t = pw(n, odd);
    let mut r = pw(n, odd.div_ceil(2));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = pw(c, 1 << (m - i - 1));
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r)
}

impl PartialEq for FieldElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(
            std::ptr::eq(self.f, other.f),
            "elements of different fields"
        );
        self.v == other.v
    }
}

impl Eq for FieldElem<'_> {}

impl Hash for FieldElem<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl PartialOrd for FieldElem<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.cmp(&other.v)
    }
}

impl fmt::Debug for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for FieldElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl<'f> Add for FieldElem<'f> {
    type Output = FieldElem<'f>;
    fn add(self, rhs: Self) -> Self::Output {
        FieldElem {
            f: self.f,
            v: self.f.add_raw(self.v, rhs.v),
        }
    }
}

impl<'f> Sub for FieldElem<'f> {
    type Output = FieldElem<'f>;
    fn sub(self, rhs: Self) -> Self::Output {
        FieldElem {
            f: self.f,
            v: self.f.add_raw(self.v, self.f.neg_raw(rhs.v)),
        }
    }
}

impl<'f> Neg for FieldElem<'f> {
    type Output = FieldElem<'f>;
    fn neg(self) -> Self::Output {
        FieldElem {
            f: self.f,
            v: self.f.neg_raw(self.v),
        }
    }
}

impl<'f> Mul for FieldElem<'f> {
    type Output = FieldElem<'f>;
    fn mul(self, rhs: Self) -> Self::Output {
        FieldElem {
            f: self.f,
            v: self.f.mul_raw(self.v, rhs.v),
        }
    }
}

impl<'f> Div for FieldElem<'f> {
    type Output = FieldElem<'f>;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self::Output {
        self * rhs.inv().expect("division by zero in finite field")
    }
}

impl AddAssign for FieldElem<'_> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElem<'_> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElem<'_> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<'f> Mul<FieldElem<'f>> for i64 {
    type Output = FieldElem<'f>;
    fn mul(self, rhs: FieldElem<'f>) -> Self::Output {
        rhs.f.int(self) * rhs
    }
}

impl<'f> std::iter::Sum for FieldElem<'f> {
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty iterator needs a field");
        iter.fold(first, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_errors() {
        assert_eq!(
            Field::new(3, 1, None).unwrap_err(),
            Error::BadCharacteristic(3)
        );
        assert_eq!(Field::new(2, 2, None).unwrap_err(), Error::FieldTooSmall(4));
        assert_eq!(
            Field::new(3, 2, None).unwrap_err(),
            Error::BadCharacteristic(3)
        );
        assert_eq!(Field::new(9, 1, None).unwrap_err(), Error::NotPrime(9));
        assert!(matches!(
            Field::new(5, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(
            Field::new(5, 2, Some(&[2, 0, 2])),
            Err(Error::ReducibleModulus(_))
        ));
    }

    #[test]
    fn gf7_basics() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.q(), 7);
        let two = f.int(2);
        assert!(two.is_square());
        assert_eq!(two.sqrt().unwrap().encoding(), 3);
        assert!(!f.int(3).is_square());
        assert_eq!(f.int(3).sqrt(), None);
        assert_eq!(f.zero().sqrt(), Some(f.zero()));
        assert_eq!(f.nonsquare().encoding(), 3);
        assert_eq!(f.cube_root_of_unity().unwrap().encoding(), 2);
        assert_eq!(f.mu(), 1);
    }

    #[test]
    fn gf5_has_no_cube_root_of_unity() {
        let f = Field::prime(5).unwrap();
        assert!(f.cube_root_of_unity().is_none());
        assert_eq!(f.mu(), -1);
    }

    #[test]
    fn gf25_modulus_is_least_irreducible() {
        let f = Field::new(5, 2, None).unwrap();
        // x^2 + 2 is the first monic quadratic without roots mod 5 (tail order 0,1,2,...)
        assert_eq!(f.modulus(), &[2, 0, 1]);
        for x in f.elements() {
            assert_eq!(x.pow_by_squaring(25), x);
        }
    }

    #[test]
    fn squares_match_euler_and_tonelli() {
        for p in [5u64, 7, 11, 13, 17, 97, 101] {
            let f = Field::prime(p).unwrap();
            let mut n = 0;
            for x in f.elements().skip(1) {
                let euler = x.pow_by_squaring((p - 1) / 2).is_one();
                assert_eq!(x.is_square(), euler);
                if euler {
                    n += 1;
                    let y = x.sqrt().unwrap();
                    assert_eq!(y * y, x);
                    assert!(y.encoding() <= (-y).encoding());
                }
            }
            assert_eq!(n, (p - 1) / 2);
        }
    }

    #[test]
    fn extension_squares_match_norm_test() {
        for (p, k) in [(5u64, 2u32), (7, 2), (5, 3), (7, 3)] {
            let f = Field::new(p, k, None).unwrap();
            let q = f.q();
            let norm_exp = (q - 1) / (p - 1);
            let mut squares = 0;
            for x in f.elements().skip(1) {
                let norm = x.pow_by_squaring(norm_exp);
                assert!(norm.encoding() < p as u32, "norm lands in the prime field");
                let in_fp = f.int(norm.encoding() as i64);
                let by_norm = in_fp.pow_by_squaring((p - 1) / 2).is_one();
                assert_eq!(x.is_square(), by_norm);
                if let Some(y) = x.sqrt() {
                    assert_eq!(y * y, x);
                    squares += 1;
                }
                assert_eq!(x.pow_by_squaring(q - 1), f.one());
            }
            assert_eq!(squares, (q - 1) / 2);
        }
    }

    #[test]
    fn field_axioms_on_extension() {
        let f = Field::new(7, 2, None).unwrap();
        let els: Vec<_> = f.elements().collect();
        for (i, &a) in els.iter().enumerate().step_by(5) {
            for &b in els.iter().skip(i % 3).step_by(7) {
                for &c in els.iter().step_by(11) {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!(a - b + b, a);
                }
                if !b.is_zero() {
                    assert_eq!(a / b * b, a);
                }
            }
        }
    }

    #[test]
    fn tonelli_shanks_large_two_adicity() {
        // 97 - 1 = 2^5 * 3
        for n in 1..97u64 {
            if let Some(r) = tonelli_shanks(n, 97) {
                assert_eq!(r * r % 97, n);
            }
        }
    }
}

//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigUint;

use crate::algebra::field::{Field, FieldElem};
use crate::error::{Error, Result};

/// Coefficients low-to-high; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
#[derive(Clone)]
pub struct UniPoly<'f> {
    field: &'f Field,
    coeffs: Vec<FieldElem<'f>>,
}

impl PartialEq for UniPoly<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly<'_> {}

impl fmt::Debug for UniPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

impl<'f> UniPoly<'f> {
    pub fn new(field: &'f Field, mut coeffs: Vec<FieldElem<'f>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: &'f Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElem<'f>) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The indeterminate `X`.
    pub fn x(field: &'f Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `X - r`.
    pub fn linear(r: FieldElem<'f>) -> Self {
        Self::new(r.field(), vec![-r, r.field().one()])
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem<'f>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElem<'f>> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: FieldElem<'f>) -> FieldElem<'f> {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.int(i as i64) * c)
            .collect();
        Self::new(self.field, coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                Self::new(self.field, self.coeffs.iter().map(|&c| c * inv).collect())
            }
        }
    }

    pub fn scale(&self, s: FieldElem<'f>) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Euclidean division `self = quot * divisor + rem`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroModulus)?;
        let inv = divisor.coeffs[dd]
            .inv()
            .expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * inv;
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        rem.truncate(dd);
        Ok((Self::new(self.field, quot), Self::new(self.field, rem)))
    }

    pub fn rem(&self, m: &Self) -> Result<Self> {
        self.div_rem(m).map(|(_, r)| r)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let mut result = Self::constant(self.field.one()).rem(m)?;
        let base = self.rem(m)?;
        for i in (0..e.bits()).rev() {
            result = (&result * &result).rem(m)?;
            if e.bit(i) {
                result = (&result * &base).rem(m)?;
            }
        }
        Ok(result)
    }

    /// Roots in the base field, each listed once, in canonical order.
    pub fn roots(&self) -> Vec<FieldElem<'f>> {
        self.field
            .elements()
            .filter(|&x| self.eval(x).is_zero())
            .collect()
    }
}

impl<'f> Add for &UniPoly<'f> {
    type Output = UniPoly<'f>;
    fn add(self, rhs: Self) -> UniPoly<'f> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        let coeffs = (0..n)
            .map(|i| *self.coeffs.get(i).unwrap_or(&z) + *rhs.coeffs.get(i).unwrap_or(&z))
            .collect();
        UniPoly::new(self.field, coeffs)
    }
}

impl<'f> Sub for &UniPoly<'f> {
    type Output = UniPoly<'f>;
    fn sub(self, rhs: Self) -> UniPoly<'f> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        let coeffs = (0..n)
            .map(|i| *self.coeffs.get(i).unwrap_or(&z) - *rhs.coeffs.get(i).unwrap_or(&z))
            .collect();
        UniPoly::new(self.field, coeffs)
    }
}

impl<'f> Mul for &UniPoly<'f> {
    type Output = UniPoly<'f>;
    fn mul(self, rhs: Self) -> UniPoly<'f> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.field, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly<'f>(f: &'f Field, c: &[i64]) -> UniPoly<'f> {
        UniPoly::new(f, c.iter().map(|&x| f.int(x)).collect())
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = Field::prime(7).unwrap();
        let a = poly(&f, &[1, 2, 3]);
        assert_eq!(UniPoly::gcd(&a, &UniPoly::zero(&f)), a.monic());
    }

    #[test]
    fn gcd_shared_root() {
        let f = Field::prime(7).unwrap();
        let a = poly(&f, &[-1, 0, 1]);
        let b = poly(&f, &[-1, 1]);
        assert_eq!(UniPoly::gcd(&a, &b), b);
    }

    #[test]
    fn frobenius_on_nonresidue_root() {
        // f = X^2 - 3 over GF(7): X^7 = -X mod f
        let f = Field::prime(7).unwrap();
        let m = poly(&f, &[-3, 0, 1]);
        let x = UniPoly::x(&f);
        let r = x.powmod(&BigUint::from(7u32), &m).unwrap();
        // oracle: repeated multiplication
        let mut naive = UniPoly::constant(f.one());
        for _ in 0..7 {
            naive = (&naive * &x).rem(&m).unwrap();
        }
        assert_eq!(r, naive);
        assert_eq!(r, poly(&f, &[0, -1]));
    }

    #[test]
    fn powmod_zero_modulus() {
        let f = Field::prime(5).unwrap();
        let x = UniPoly::x(&f);
        assert_eq!(
            x.powmod(&BigUint::from(3u32), &UniPoly::zero(&f)),
            Err(Error::ZeroModulus)
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = Field::prime(11).unwrap();
        let a = poly(&f, &[3, 1, 4, 1, 5, 9]);
        let b = poly(&f, &[2, 6, 5]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn derivative_of_cube() {
        let f = Field::prime(7).unwrap();
        assert_eq!(poly(&f, &[1, 1, 1, 1]).derivative(), poly(&f, &[1, 2, 3]));
    }
}

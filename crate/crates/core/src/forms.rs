//! Binary forms of degree 1 to 4, the `GL(2, q)` action on them, the
//! pairings `Omega_m`, and the invariants of binary quartics.
//!
//! A form of degree `m` is stored by its coordinates `(z_0, ..., z_m)` in
//! the basis
//!
//! ```text
//! B_m = (Y^m, -C(m,1) Y^(m-1) X, C(m,2) Y^(m-2) X^2, ..., (-1)^m X^m)
//! ```
//!
//! so a quartic is `z0 Y^4 - 4 z1 Y^3 X + 6 z2 Y^2 X^2 - 4 z3 Y X^3 + z4 X^4`
//! and `(Xt - Ys)^m` has coordinates `(s^m, s^(m-1) t, ..., t^m)` up to sign.
//! Monomial coefficients are only used at the boundary: index `i` of a
//! monomial vector is the coefficient of `X^i Y^(m-i)`.

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{Field, FieldElem, Mat, UniPoly};
use crate::error::{Error, Result};

const BINOMIAL: [[i64; 5]; 5] = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 2, 1, 0, 0],
    [1, 3, 3, 1, 0],
    [1, 4, 6, 4, 1],
];

/// Point of `PG(1, q)` normalised so that the first nonzero entry is 1.
pub type Point1<'f> = (FieldElem<'f>, FieldElem<'f>);

/// The `q + 1` points of `PG(1, q)`: `(0, 1)` followed by `(1, t)`.
pub fn pg1_points(field: &Field) -> impl Iterator<Item = Point1<'_>> + '_ {
    std::iter::once((field.zero(), field.one())).chain(field.elements().map(|t| (field.one(), t)))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm<'f> {
    coords: Vec<FieldElem<'f>>,
}

impl<'f> BinaryForm<'f> {
    /// Form of degree `coords.len() - 1`, which must lie in `1..=4`.
    pub fn new(coords: Vec<FieldElem<'f>>) -> Result<Self> {
        match coords.len() {
            2..=5 => Ok(BinaryForm { coords }),
            n => Err(Error::BadDegree(n.saturating_sub(1))),
        }
    }

    pub fn from_ints(field: &'f Field, coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| field.int(c)).collect())
    }

    /// Inverse of [`BinaryForm::to_monomials`].
    pub fn from_monomials(mono: &[FieldElem<'f>]) -> Result<Self> {
        let m = mono.len().wrapping_sub(1);
        if !(1..=4).contains(&m) {
            return Err(Error::BadDegree(m));
        }
        let field = mono[0].field();
        let coords = mono
            .iter()
            .enumerate()
            .map(|(i, &c)| c / basis_scale(field, m, i))
            .collect();
        Ok(BinaryForm { coords })
    }

    /// `(Xt - Ys)^m`.
    pub fn linear_power(s: FieldElem<'f>, t: FieldElem<'f>, m: usize) -> Result<Self> {
        let lin = BinaryForm::from_monomials(&[-s, t])?;
        let mut acc = lin.clone();
        for _ in 1..m {
            acc = acc.multiply(&lin)?;
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[FieldElem<'f>] {
        &self.coords
    }

    pub fn field(&self) -> &'f Field {
        self.coords[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: FieldElem<'f>) -> Self {
        BinaryForm {
            coords: self.coords.iter().map(|&c| c * s).collect(),
        }
    }

    /// Representative with first nonzero coordinate equal to 1.
    pub fn normalized(&self) -> Option<Self> {
        let lead = self.coords.iter().find(|c| !c.is_zero())?;
        Some(self.scale(lead.inv().expect("nonzero")))
    }

    pub fn to_monomials(&self) -> Vec<FieldElem<'f>> {
        let m = self.degree();
        let field = self.field();
        self.coords
            .iter()
            .enumerate()
            .map(|(i, &z)| z * basis_scale(field, m, i))
            .collect()
    }

    /// Value at `X = x, Y = y`.
    pub fn eval(&self, x: FieldElem<'f>, y: FieldElem<'f>) -> FieldElem<'f> {
        eval_monomials(&self.to_monomials(), x, y)
    }

    /// Product of two forms; the total degree must stay within 4.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let prod = mono_mul(&self.to_monomials(), &other.to_monomials());
        BinaryForm::from_monomials(&prod)
    }

    /// Distinct rational roots `(s, t)` (so that `Xt - Ys` divides the form),
    /// each with its multiplicity.
    pub fn rational_roots(&self) -> Result<Vec<(Point1<'f>, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mono = self.to_monomials();
        let field = self.field();
        let mut out = Vec::new();
        for (s, t) in pg1_points(field) {
            let mut cur = mono.clone();
            let mut mult = 0;
            while let Some(q) = divide_linear(&cur, s, t) {
                mult += 1;
                cur = q;
            }
            if mult > 0 {
                out.push(((s, t), mult));
            }
        }
        Ok(out)
    }
}

fn basis_scale<'f>(field: &'f Field, m: usize, i: usize) -> FieldElem<'f> {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    field.int(sign * BINOMIAL[m][i])
}

fn eval_monomials<'f>(mono: &[FieldElem<'f>], x: FieldElem<'f>, y: FieldElem<'f>) -> FieldElem<'f> {
    // homogeneous Horner: ((c_m x + c_{m-1} y) x + c_{m-2} y^2) ...
    let mut acc = x.field().zero();
    let mut ypow = x.field().one();
    for &c in mono.iter().rev() {
        acc = acc * x + c * ypow;
        ypow *= y;
    }
    acc
}

fn mono_mul<'f>(a: &[FieldElem<'f>], b: &[FieldElem<'f>]) -> Vec<FieldElem<'f>> {
    let field = a[0].field();
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of a monomial vector by `tX - sY`.
fn divide_linear<'f>(
    mono: &[FieldElem<'f>],
    s: FieldElem<'f>,
    t: FieldElem<'f>,
) -> Option<Vec<FieldElem<'f>>> {
    let m = mono.len() - 1;
    if m == 0 {
        return None;
    }
    let field = s.field();
    let mut d = vec![field.zero(); m];
    if !s.is_zero() {
        // t d_{j-1} - s d_j = c_j
        let si = s.inv().expect("nonzero");
        d[0] = -mono[0] * si;
        for j in 1..m {
            d[j] = (t * d[j - 1] - mono[j]) * si;
        }
        (t * d[m - 1] == mono[m]).then_some(d)
    } else {
        let ti = t.inv()?;
        for j in 1..=m {
            d[j - 1] = mono[j] * ti;
        }
        mono[0].is_zero().then_some(d)
    }
}

/// Invertible 2x2 matrix `(a b; c d)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Gl2<'f> {
    pub a: FieldElem<'f>,
    pub b: FieldElem<'f>,
    pub c: FieldElem<'f>,
    pub d: FieldElem<'f>,
}

impl<'f> Gl2<'f> {
    pub fn new(
        a: FieldElem<'f>,
        b: FieldElem<'f>,
        c: FieldElem<'f>,
        d: FieldElem<'f>,
    ) -> Result<Self> {
        let g = Gl2 { a, b, c, d };
        if g.det().is_zero() {
            Err(Error::SingularMatrix)
        } else {
            Ok(g)
        }
    }

    pub fn from_ints(field: &'f Field, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(field.int(a), field.int(b), field.int(c), field.int(d))
    }

    pub fn identity(field: &'f Field) -> Self {
        Gl2 {
            a: field.one(),
            b: field.zero(),
            c: field.zero(),
            d: field.one(),
        }
    }

    /// Uniformly random invertible matrix.
    pub fn random<R: Rng + ?Sized>(field: &'f Field, rng: &mut R) -> Self {
        loop {
            let mut r = || field.elem(rng.gen_range(0..field.q() as u32));
            if let Ok(g) = Gl2::new(r(), r(), r(), r()) {
                return g;
            }
        }
    }

    pub fn det(&self) -> FieldElem<'f> {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, o: &Self) -> Self {
        Gl2 {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Self {
        let di = self.det().inv().expect("invertible");
        Gl2 {
            a: self.d * di,
            b: -self.b * di,
            c: -self.c * di,
            d: self.a * di,
        }
    }

    /// Matrix `g_m` of the action on degree-`m` forms in the basis `B_m`.
    pub fn action_matrix(&self, m: usize) -> Result<Mat<'f>> {
        let Gl2 { a, b, c, d } = *self;
        let field = a.field();
        let n = |x: i64| field.int(x);
        let det = self.det();
        let rows: Vec<Vec<FieldElem<'f>>> = match m {
            1 => vec![vec![a, b], vec![c, d]],
            2 => vec![
                vec![a * a, n(2) * a * b, b * b],
                vec![a * c, a * d + b * c, b * d],
                vec![c * c, n(2) * c * d, d * d],
            ],
            3 => vec![
                vec![a.cube(), n(3) * a * a * b, n(3) * a * b * b, b.cube()],
                vec![
                    a * a * c,
                    a * (a * d + n(2) * b * c),
                    b * (b * c + n(2) * a * d),
                    b * b * d,
                ],
                vec![
                    a * c * c,
                    c * (b * c + n(2) * a * d),
                    d * (a * d + n(2) * b * c),
                    b * d * d,
                ],
                vec![c.cube(), n(3) * c * c * d, n(3) * c * d * d, d.cube()],
            ],
            4 => {
                let s = a * d + b * c;
                vec![
                    vec![
                        a.pow(4),
                        n(4) * a.cube() * b,
                        n(6) * a * a * b * b,
                        n(4) * a * b.cube(),
                        b.pow(4),
                    ],
                    vec![
                        a.cube() * c,
                        a * a * (a * d + n(3) * b * c),
                        n(3) * a * b * s,
                        b * b * (b * c + n(3) * a * d),
                        b.cube() * d,
                    ],
                    vec![
                        a * a * c * c,
                        n(2) * a * c * s,
                        s * s + n(2) * a * b * c * d,
                        n(2) * b * d * s,
                        d * d * b * b,
                    ],
                    vec![
                        c.cube() * a,
                        c * c * (b * c + n(3) * a * d),
                        n(3) * c * d * s,
                        d * d * (a * d + n(3) * b * c),
                        d.cube() * b,
                    ],
                    vec![
                        c.pow(4),
                        n(4) * c.cube() * d,
                        n(6) * c * c * d * d,
                        n(4) * c * d.cube(),
                        d.pow(4),
                    ],
                ]
            }
            _ => return Err(Error::BadDegree(m)),
        };
        let scale = det.pow(m as u64).inv().expect("invertible");
        Ok(Mat::from_rows(rows).scale(scale))
    }
}

/// `g . f` through the matrix `g_m`.
pub fn act<'f>(g: &Gl2<'f>, f: &BinaryForm<'f>) -> BinaryForm<'f> {
    let gm = g
        .action_matrix(f.degree())
        .expect("degree checked at construction");
    let out = BinaryForm {
        coords: gm.mul_vec(&f.coords),
    };
    debug_assert_eq!(
        out,
        act_by_substitution(g, f),
        "matrix and substitution routes disagree"
    );
    out
}

/// `g . f = det(g)^(-m) f(dX - bY, aY - cX)`, by expanding the substitution.
pub fn act_by_substitution<'f>(g: &Gl2<'f>, f: &BinaryForm<'f>) -> BinaryForm<'f> {
    let field = f.field();
    let m = f.degree();
    // linear forms as monomial vectors [coef of Y, coef of X]
    let new_x = [-g.b, g.d];
    let new_y = [g.a, -g.c];
    let mut total = vec![field.zero(); m + 1];
    for (i, &c) in f.to_monomials().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = vec![c];
        for _ in 0..i {
            term = mono_mul(&term, &new_x);
        }
        for _ in i..m {
            term = mono_mul(&term, &new_y);
        }
        for (t, v) in total.iter_mut().zip(term) {
            *t += v;
        }
    }
    let scale = g.det().pow(m as u64).inv().expect("invertible");
    let mono: Vec<_> = total.into_iter().map(|x| x * scale).collect();
    BinaryForm::from_monomials(&mono).expect("degree preserved")
}

/// Gram matrix `A_m` of `Omega_m` in the basis `B_m`.
pub fn omega_matrix(field: &Field, m: usize) -> Result<Mat<'_>> {
    let entries: &[i64] = match m {
        1 => &[1, -1],
        2 => &[1, -2, 1],
        3 => &[1, -3, 3, -1],
        4 => &[1, -4, 6, -4, 1],
        _ => return Err(Error::BadDegree(m)),
    };
    let mut a = Mat::zeros(field, m + 1, m + 1);
    for (i, &e) in entries.iter().enumerate() {
        a[(i, m - i)] = field.int(e);
    }
    Ok(a)
}

/// `Omega_m(f, h) = f^T A_m h`.
pub fn omega_pair<'f>(f: &BinaryForm<'f>, h: &BinaryForm<'f>) -> Result<FieldElem<'f>> {
    if f.degree() != h.degree() {
        return Err(Error::DegreeMismatch(f.degree(), h.degree()));
    }
    let a = omega_matrix(f.field(), f.degree())?;
    Ok(a.bilinear(&f.coords, &h.coords))
}

fn expect_quartic(phi: &BinaryForm<'_>) {
    assert_eq!(
        phi.degree(),
        4,
        "quartic invariant of a degree-{} form",
        phi.degree()
    );
}

/// Apolar invariant `I = (z0 z4 - 4 z1 z3 + 3 z2^2) / 3`.
pub fn inv_i<'f>(phi: &BinaryForm<'f>) -> FieldElem<'f> {
    expect_quartic(phi);
    let z = &phi.coords;
    let f = phi.field();
    (z[0] * z[4] - f.int(4) * z[1] * z[3] + f.int(3) * z[2] * z[2]) / f.int(3)
}

/// Catalecticant `J = det(M_phi) / 4`.
pub fn inv_j<'f>(phi: &BinaryForm<'f>) -> FieldElem<'f> {
    expect_quartic(phi);
    m_phi(phi).det() / phi.field().int(4)
}

/// `J` as the Hankel determinant `det((z0 z1 z2), (z1 z2 z3), (z2 z3 z4))`.
pub fn inv_j_hankel<'f>(phi: &BinaryForm<'f>) -> FieldElem<'f> {
    expect_quartic(phi);
    let z = &phi.coords;
    z[0] * (z[2] * z[4] - z[3] * z[3]) - z[1] * (z[1] * z[4] - z[2] * z[3])
        + z[2] * (z[1] * z[3] - z[2] * z[2])
}

/// `Delta = I^3 - J^2`.
pub fn discriminant<'f>(phi: &BinaryForm<'f>) -> FieldElem<'f> {
    inv_i(phi).cube() - inv_j(phi).square()
}

/// Gram matrix of `<f1, f2>_phi = Omega_4(f1 f2, phi)` in the basis `B_2`.
pub fn m_phi<'f>(phi: &BinaryForm<'f>) -> Mat<'f> {
    expect_quartic(phi);
    let z = &phi.coords;
    let f = phi.field();
    let m2 = f.int(-2);
    Mat::from_rows(vec![
        vec![z[4], m2 * z[3], z[2]],
        vec![m2 * z[3], f.int(4) * z[2], m2 * z[1]],
        vec![z[2], m2 * z[1], z[0]],
    ])
}

/// `j = 1728 I^3 / Delta`.
pub fn j_invariant<'f>(phi: &BinaryForm<'f>) -> Result<FieldElem<'f>> {
    let i3 = inv_i(phi).cube();
    let delta = i3 - inv_j(phi).square();
    let inv = delta.inv().ok_or(Error::SingularForm)?;
    Ok(phi.field().int(1728) * i3 * inv)
}

/// j-invariant of the cross-ratio `lambda`: `256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)`.
///
/// Satisfies `1 - 1728/j = ((l + 1)(l - 2)(l - 1/2))^2 / (l^2 - l + 1)^3`.
pub fn j_of_lambda(lambda: FieldElem<'_>) -> Result<FieldElem<'_>> {
    let f = lambda.field();
    let den = (lambda * (lambda - f.one())).square();
    let inv = den.inv().ok_or(Error::BadLambda)?;
    let num = (lambda * lambda - lambda + f.one()).cube();
    Ok(f.int(256) * num * inv)
}

/// Factorisation type of a squarefree quartic over `F_q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum FactorType {
    /// Four linear factors.
    F4,
    /// Two linear factors and an irreducible quadratic.
    F2,
    /// One linear factor and an irreducible cubic.
    F1,
    /// Two irreducible quadratics.
    F4Prime,
    /// Irreducible.
    F2Prime,
}

impl FactorType {
    /// Number of rational linear factors.
    pub fn eta(self) -> usize {
        match self {
            FactorType::F4 => 4,
            FactorType::F2 => 2,
            FactorType::F1 => 1,
            FactorType::F4Prime | FactorType::F2Prime => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FactorType::F4 => "F4",
            FactorType::F2 => "F2",
            FactorType::F1 => "F1",
            FactorType::F4Prime => "F4'",
            FactorType::F2Prime => "F2'",
        }
    }
}

pub fn factor_type(phi: &BinaryForm<'_>) -> Result<FactorType> {
    expect_quartic(phi);
    if phi.is_zero() {
        return Err(Error::ZeroForm);
    }
    if discriminant(phi).is_zero() {
        return Err(Error::SingularForm);
    }
    let roots = phi.rational_roots()?;
    Ok(match roots.len() {
        4 => FactorType::F4,
        2 => FactorType::F2,
        1 => FactorType::F1,
        0 => {
            if splits_over_quadratic_extension(phi) {
                FactorType::F4Prime
            } else {
                FactorType::F2Prime
            }
        }
        _ => unreachable!("a squarefree quartic cannot have exactly 3 rational roots"),
    })
}

/// For a quartic without rational roots: does `gcd(x^(q^2) - x, phi(x, 1))`
/// have full degree?
fn splits_over_quadratic_extension(phi: &BinaryForm<'_>) -> bool {
    let field = phi.field();
    let dehom = UniPoly::new(field, phi.to_monomials());
    let x = UniPoly::x(field);
    let q2 = BigUint::from(field.q()).pow(2);
    let frob = x.powmod(&q2, &dehom).expect("quartic is nonzero");
    UniPoly::gcd(&(&frob - &x), &dehom).degree() == dehom.degree()
}

/// Linear-factor structure of a binary cubic over `F_q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum CubicPattern {
    Cube,
    SquareTimesLinear,
    ThreeRational,
    OneRationalPlusQuadratic,
    IrreducibleCubic,
}

pub fn cubic_pattern(f: &BinaryForm<'_>) -> Result<CubicPattern> {
    if f.degree() != 3 {
        return Err(Error::DegreeMismatch(f.degree(), 3));
    }
    let roots = f.rational_roots()?;
    let repeated = roots.iter().any(|&(_, m)| m > 1);
    Ok(match (roots.len(), repeated) {
        (1, true) => CubicPattern::Cube,
        (2, true) => CubicPattern::SquareTimesLinear,
        (3, false) => CubicPattern::ThreeRational,
        (1, false) => CubicPattern::OneRationalPlusQuadratic,
        (0, _) => CubicPattern::IrreducibleCubic,
        _ => unreachable!("impossible root pattern for a cubic"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_round_trip() {
        let f = Field::prime(7).unwrap();
        let phi = BinaryForm::from_ints(&f, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(
            BinaryForm::from_monomials(&phi.to_monomials()).unwrap(),
            phi
        );
    }

    #[test]
    fn bad_degrees() {
        let f = Field::prime(7).unwrap();
        assert_eq!(
            BinaryForm::from_ints(&f, &[1]).unwrap_err(),
            Error::BadDegree(0)
        );
        assert_eq!(
            BinaryForm::from_ints(&f, &[1; 6]).unwrap_err(),
            Error::BadDegree(5)
        );
    }

    #[test]
    fn linear_power_coordinates() {
        let f = Field::prime(11).unwrap();
        let (s, t) = (f.int(3), f.int(5));
        let c = BinaryForm::linear_power(s, t, 3).unwrap();
        // (Xt - Ys)^3 has B_3 coordinates (-1)^3 (s^3, s^2 t, s t^2, t^3)
        let expect: Vec<_> = (0..4).map(|i| -(s.pow(3 - i) * t.pow(i))).collect();
        assert_eq!(c.coords(), &expect[..]);
    }

    #[test]
    fn antidiagonal_swaps_variables() {
        let f = Field::prime(7).unwrap();
        let g = Gl2::from_ints(&f, 0, 1, 1, 0).unwrap();
        let x3 = BinaryForm::from_ints(&f, &[0, 0, 0, -1]).unwrap();
        let y3 = BinaryForm::from_ints(&f, &[1, 0, 0, 0]).unwrap();
        assert_eq!(act(&g, &x3), y3);
    }

    #[test]
    fn identity_action() {
        let f = Field::prime(5).unwrap();
        let phi = BinaryForm::from_ints(&f, &[1, 2, 0, 4, 3]).unwrap();
        assert_eq!(act(&Gl2::identity(&f), &phi), phi);
    }

    #[test]
    fn omega_examples() {
        let f = Field::prime(7).unwrap();
        let y2 = BinaryForm::from_ints(&f, &[1, 0, 0]).unwrap();
        let x2 = BinaryForm::from_ints(&f, &[0, 0, 1]).unwrap();
        assert_eq!(omega_pair(&y2, &x2).unwrap(), f.one());
        // XY = -2 * (-1/2) XY: B_2 middle basis vector is -2YX
        let xy = BinaryForm::new(vec![f.zero(), f.frac(-1, 2).unwrap(), f.zero()]).unwrap();
        assert_eq!(
            omega_pair(&xy, &xy).unwrap(),
            f.int(-2) * f.frac(1, 4).unwrap()
        );
        let cubic = BinaryForm::from_ints(&f, &[1, 5, 2, 3]).unwrap();
        assert!(omega_pair(&cubic, &cubic).unwrap().is_zero());
        assert_eq!(omega_pair(&cubic, &y2), Err(Error::DegreeMismatch(3, 2)));
    }

    #[test]
    fn invariants_of_xy_x2_minus_y2() {
        let f = Field::prime(7).unwrap();
        let q = |a, b| f.frac(a, b).unwrap();
        let phi = BinaryForm::new(vec![f.zero(), q(1, 4), f.zero(), q(-1, 4), f.zero()]).unwrap();
        assert_eq!(
            phi.to_monomials(),
            vec![f.zero(), f.int(-1), f.zero(), f.one(), f.zero()]
        );
        assert_eq!(inv_i(&phi), q(1, 12));
        assert!(inv_j(&phi).is_zero());
        assert_eq!(j_invariant(&phi).unwrap(), f.int(1728));
        assert_eq!(factor_type(&phi).unwrap(), FactorType::F4);
    }

    #[test]
    fn x4_is_singular() {
        let f = Field::prime(7).unwrap();
        let phi = BinaryForm::from_ints(&f, &[0, 0, 0, 0, 1]).unwrap();
        assert!(inv_i(&phi).is_zero() && inv_j(&phi).is_zero() && discriminant(&phi).is_zero());
        assert_eq!(j_invariant(&phi), Err(Error::SingularForm));
        assert_eq!(factor_type(&phi), Err(Error::SingularForm));
    }

    #[test]
    fn m_phi_examples() {
        let f = Field::prime(7).unwrap();
        let sixth = f.frac(1, 6).unwrap();
        let phi = BinaryForm::new(vec![f.zero(), f.zero(), sixth, f.zero(), f.zero()]).unwrap();
        let m = m_phi(&phi);
        assert_eq!(m[(0, 2)], sixth);
        assert_eq!(m[(1, 1)], f.frac(2, 3).unwrap());
        assert_eq!(m.det(), f.frac(-1, 54).unwrap());
        assert_eq!(m.det(), f.int(4) * inv_j(&phi));
        let y4 = BinaryForm::from_ints(&f, &[1, 0, 0, 0, 0]).unwrap();
        let my = m_phi(&y4);
        assert_eq!(my[(2, 2)], f.one());
        assert_eq!(my.rank(), 1);
    }

    #[test]
    fn j_of_lambda_special_values() {
        let f = Field::prime(7).unwrap();
        assert_eq!(j_of_lambda(f.int(-1)).unwrap(), f.int(1728));
        assert_eq!(j_of_lambda(f.int(2)).unwrap(), f.int(1728));
        assert_eq!(j_of_lambda(f.frac(1, 2).unwrap()).unwrap(), f.int(1728));
        let w = f.cube_root_of_unity().unwrap();
        assert!(j_of_lambda(-w).unwrap().is_zero());
        assert!(j_of_lambda(-(w * w)).unwrap().is_zero());
        assert_eq!(j_of_lambda(f.zero()), Err(Error::BadLambda));
        assert_eq!(j_of_lambda(f.one()), Err(Error::BadLambda));
    }

    #[test]
    fn cubic_patterns() {
        let f = Field::prime(7).unwrap();
        let eps = f.nonsquare();
        let x = BinaryForm::from_ints(&f, &[0, -1]).unwrap();
        let y = BinaryForm::from_ints(&f, &[1, 0]).unwrap();
        let x_minus_y = BinaryForm::from_ints(&f, &[-1, -1]).unwrap();
        let x3 = x.multiply(&x).unwrap().multiply(&x).unwrap();
        let x2y = x.multiply(&x).unwrap().multiply(&y).unwrap();
        let xyz = x.multiply(&y).unwrap().multiply(&x_minus_y).unwrap();
        // X^2 - eps Y^2 in B_2: z0 = -eps, z2 = 1
        let quad = BinaryForm::new(vec![-eps, f.zero(), f.one()]).unwrap();
        let x_quad = x.multiply(&quad).unwrap();
        assert_eq!(cubic_pattern(&x3).unwrap(), CubicPattern::Cube);
        assert_eq!(
            cubic_pattern(&x2y).unwrap(),
            CubicPattern::SquareTimesLinear
        );
        assert_eq!(cubic_pattern(&xyz).unwrap(), CubicPattern::ThreeRational);
        assert_eq!(
            cubic_pattern(&x_quad).unwrap(),
            CubicPattern::OneRationalPlusQuadratic
        );
        let zero = BinaryForm::from_ints(&f, &[0, 0, 0, 0]).unwrap();
        assert_eq!(cubic_pattern(&zero), Err(Error::ZeroForm));
    }

    #[test]
    fn two_conjugate_quadratics_are_f4_prime() {
        let f = Field::prime(7).unwrap();
        let eps = f.nonsquare();
        let eps2 = eps * f.int(4); // 4 eps is another nonsquare
        let q1 = BinaryForm::new(vec![-eps, f.zero(), f.one()]).unwrap();
        let q2 = BinaryForm::new(vec![-eps2, f.zero(), f.one()]).unwrap();
        let phi = q1.multiply(&q2).unwrap();
        assert_eq!(factor_type(&phi).unwrap(), FactorType::F4Prime);
    }
}

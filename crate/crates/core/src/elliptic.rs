//! The elliptic curve `E_L : T^2 = 4 S^3 - g2 S - g3` of a generic line.

use crate::algebra::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::forms::Gl2;
use crate::forms::{inv_i, inv_j};
use crate::incidence::d_quartic;
use crate::klein::{act_on_line, Line};

/// A curve in Weierstrass form `T^2 = 4 S^3 - g2 S - g3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Curve<'f> {
    pub g2: FieldElem<'f>,
    pub g3: FieldElem<'f>,
}

/// Affine point, or `None` for the point at infinity.
pub type CurvePoint<'f> = Option<(FieldElem<'f>, FieldElem<'f>)>;

impl<'f> Curve<'f> {
    pub fn new(g2: FieldElem<'f>, g3: FieldElem<'f>) -> Result<Self> {
        let c = Curve { g2, g3 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn field(&self) -> &'f Field {
        self.g2.field()
    }

    /// `g2^3 - 27 g3^2`, zero iff the right-hand side has a repeated root.
    pub fn discriminant(&self) -> FieldElem<'f> {
        self.g2.cube() - self.field().int(27) * self.g3.square()
    }

    pub fn rhs(&self, s: FieldElem<'f>) -> FieldElem<'f> {
        self.field().int(4) * s.cube() - self.g2 * s - self.g3
    }

    pub fn contains(&self, p: CurvePoint<'f>) -> bool {
        match p {
            None => true,
            Some((s, t)) => t.square() == self.rhs(s),
        }
    }

    /// Number of points over the base field, the point at infinity included.
    pub fn count_points(&self) -> u64 {
        1 + self
            .field()
            .elements()
            .map(|s| (1 + self.rhs(s).chi()) as u64)
            .sum::<u64>()
    }

    pub fn neg(&self, p: CurvePoint<'f>) -> CurvePoint<'f> {
        p.map(|(s, t)| (s, -t))
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: CurvePoint<'f>, r: CurvePoint<'f>) -> CurvePoint<'f> {
        let (Some((x1, y1)), Some((x2, y2))) = (p, r) else {
            return p.or(r);
        };
        let f = self.field();
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return None;
            }
            (f.int(12) * x1.square() - self.g2) / (f.int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        // the leading coefficient 4 rescales the usual formulas
        let x3 = slope.square() / f.int(4) - x1 - x2;
        let y3 = -(y1 + slope * (x3 - x1));
        Some((x3, y3))
    }

    pub fn mul(&self, n: u64, p: CurvePoint<'f>) -> CurvePoint<'f> {
        let mut acc = None;
        let mut base = p;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }
}

/// `|N - (q + 1)| <= 2 sqrt(q)`.
pub fn hasse_ok(count: u64, q: u64) -> bool {
    let d = count as i128 - (q as i128 + 1);
    d * d <= 4 * q as i128
}

fn require_generic(l: &Line<'_>) -> Result<()> {
    if l.nature().generic {
        Ok(())
    } else {
        Err(Error::NonGenericLine)
    }
}

/// `g2 = 3 z5 J + (15/4) I^2`, `g3 = -(11 I^3 + 2 J^2 + 14 z5^3 J) / 8`.
pub fn coeffs_closed_form<'f>(l: &Line<'f>) -> (FieldElem<'f>, FieldElem<'f>) {
    let f = l.field();
    let phi = l.phi();
    let (i, j, z5) = (inv_i(&phi), inv_j(&phi), l.z5());
    let g2 = f.int(3) * z5 * j + f.frac(15, 4).expect("odd") * i.square();
    let g3 = -(f.int(11) * i.cube() + f.int(2) * j.square() + f.int(14) * z5.cube() * j) / f.int(8);
    (g2, g3)
}

/// `g2 = 3 I(D_L)`, `g3 = J(D_L)`.
pub fn coeffs_from_discriminant_quartic<'f>(
    l: &Line<'f>,
) -> Result<(FieldElem<'f>, FieldElem<'f>)> {
    let d = d_quartic(l)?;
    Ok((l.field().int(3) * inv_i(&d), inv_j(&d)))
}

pub fn coeffs<'f>(l: &Line<'f>) -> Result<(FieldElem<'f>, FieldElem<'f>)> {
    require_generic(l)?;
    let closed = coeffs_closed_form(l);
    assert_eq!(
        closed,
        coeffs_from_discriminant_quartic(l)?,
        "g2, g3 routes disagree for {l}"
    );
    Ok(closed)
}

pub fn curve<'f>(l: &Line<'f>) -> Result<Curve<'f>> {
    let (g2, g3) = coeffs(l)?;
    Curve::new(g2, g3)
}

pub fn count_points<'f>(g2: FieldElem<'f>, g3: FieldElem<'f>) -> Result<u64> {
    Ok(Curve::new(g2, g3)?.count_points())
}

/// The flex `(3I/4, (J - z5^3)/2)` of `E_L`; checked to be 3-torsion.
pub fn torsion_witness<'f>(l: &Line<'f>) -> Result<(FieldElem<'f>, FieldElem<'f>)> {
    let c = curve(l)?;
    let f = l.field();
    let phi = l.phi();
    let w = (
        f.frac(3, 4).expect("odd") * inv_i(&phi),
        (inv_j(&phi) - l.z5().cube()) / f.int(2),
    );
    assert!(c.contains(Some(w)), "witness off the curve for {l}");
    assert!(
        c.mul(3, Some(w)).is_none(),
        "witness is not 3-torsion for {l}"
    );
    Ok(w)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EllipticData<'f> {
    pub g2: FieldElem<'f>,
    pub g3: FieldElem<'f>,
    pub e_count: u64,
    pub torsion_witness: (FieldElem<'f>, FieldElem<'f>),
}

pub fn elliptic_data<'f>(l: &Line<'f>) -> Result<EllipticData<'f>> {
    let c = curve(l)?;
    Ok(EllipticData {
        g2: c.g2,
        g3: c.g3,
        e_count: c.count_points(),
        torsion_witness: torsion_witness(l)?,
    })
}

/// `#E_L = #E_{gL}`.
pub fn orbit_invariance_check(l: &Line<'_>, g: &Gl2<'_>) -> bool {
    let count = |m: &Line<'_>| curve(m).map(|c| c.count_points());
    match (count(l), count(&act_on_line(g, l))) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_root_gives_one_point() {
        let f = Field::prime(7).unwrap();
        // 4 s^3 - 4 s = 4 s (s - 1)(s + 1): roots 0, 1, -1
        let c = Curve::new(f.int(4), f.zero()).unwrap();
        for s in [0, 1, -1] {
            assert!(c.rhs(f.int(s)).is_zero());
        }
        let n = c.count_points();
        assert!(hasse_ok(n, 7));
        assert_eq!(n % 4, 0, "full 2-torsion");
    }

    #[test]
    fn singular_curve_rejected() {
        let f = Field::prime(7).unwrap();
        assert_eq!(Curve::new(f.zero(), f.zero()), Err(Error::SingularCurve));
        // g2 = 3, g3 = 1: 27 - 27 = 0
        assert_eq!(count_points(f.int(3), f.int(1)), Err(Error::SingularCurve));
    }

    #[test]
    fn group_law_basics() {
        let f = Field::prime(11).unwrap();
        let c = Curve::new(f.int(2), f.int(5)).unwrap();
        let pts: Vec<CurvePoint> = f
            .elements()
            .filter_map(|s| c.rhs(s).sqrt().map(|t| Some((s, t))))
            .collect();
        let n = c.count_points();
        for &p in &pts {
            assert!(c.contains(p));
            assert_eq!(c.add(p, c.neg(p)), None);
            assert_eq!(c.add(p, None), p);
            assert_eq!(c.mul(n, p), None);
            for &r in &pts {
                assert!(c.contains(c.add(p, r)));
                assert_eq!(c.add(p, r), c.add(r, p));
            }
        }
    }

    #[test]
    fn non_generic_rejected() {
        let f = Field::prime(7).unwrap();
        let secant = Line::from_ints(&f, [0, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(coeffs(&secant), Err(Error::NonGenericLine));
        assert_eq!(torsion_witness(&secant), Err(Error::NonGenericLine));
    }
}

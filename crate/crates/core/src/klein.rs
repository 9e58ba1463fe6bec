//! Points, lines and planes of `PG(3, q) = P(V_3)`.
//!
//! Lines are points of the Klein quadric, written in the coordinates
//! `(z0, ..., z5)` for which the Pluecker vector of the line is
//! `(z0, 2 z1, 3(z2 + z5), z2 - z5, 2 z3, z4)`. The first five coordinates
//! are those of the quartic `phi_L` in the basis `B_4`; the quadric itself
//! reads `I(phi_L) = z5^2`.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{Field, FieldElem, Mat};
use crate::error::{Error, Result};
use crate::forms::{
    self, act, cubic_pattern, inv_i, inv_j, omega_pair, pg1_points, BinaryForm, CubicPattern, Gl2,
};

/// Scale so that the first nonzero entry is 1; `None` for the zero vector.
pub(crate) fn normalize<'f>(v: &mut [FieldElem<'f>]) -> Option<()> {
    let lead = v.iter().find(|c| !c.is_zero())?.inv().expect("nonzero");
    for c in v.iter_mut() {
        *c *= lead;
    }
    Some(())
}

/// A point of `PG(3, q)`: a binary cubic up to scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PointP3<'f> {
    form: BinaryForm<'f>,
}

impl<'f> PointP3<'f> {
    pub fn new(form: BinaryForm<'f>) -> Result<Self> {
        if form.degree() != 3 {
            return Err(Error::DegreeMismatch(form.degree(), 3));
        }
        let form = form.normalized().ok_or(Error::ZeroVector)?;
        Ok(PointP3 { form })
    }

    pub fn from_ints(field: &'f Field, coords: &[i64]) -> Result<Self> {
        Self::new(BinaryForm::from_ints(field, coords)?)
    }

    pub fn form(&self) -> &BinaryForm<'f> {
        &self.form
    }

    pub fn coords(&self) -> &[FieldElem<'f>] {
        self.form.coords()
    }

    /// The point `(Xt - Ys)^3` of the twisted cubic.
    pub fn on_cubic(s: FieldElem<'f>, t: FieldElem<'f>) -> Result<Self> {
        Self::new(BinaryForm::linear_power(s, t, 3)?)
    }

    pub fn act(&self, g: &Gl2<'f>) -> Self {
        PointP3::new(act(g, &self.form)).expect("the action is invertible")
    }
}

/// All `q^3 + q^2 + q + 1` points, in canonical order.
pub fn all_points(field: &Field) -> Vec<PointP3<'_>> {
    let q = field.q() as usize;
    let mut out = Vec::with_capacity(q * q * q + q * q + q + 1);
    for lead in 0..4 {
        let free = 3 - lead;
        let total = q.pow(free as u32);
        for idx in 0..total {
            let mut coords = vec![field.zero(); 4];
            coords[lead] = field.one();
            let mut rest = idx;
            for j in (lead + 1..4).rev() {
                coords[j] = field.elem((rest % q) as u32);
                rest /= q;
            }
            out.push(PointP3 {
                form: BinaryForm::new(coords).expect("cubic"),
            });
        }
    }
    out
}

/// A line of `PG(3, q)` in Klein coordinates, first nonzero coordinate 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Line<'f> {
    z: [FieldElem<'f>; 6],
}

impl fmt::Display for Line<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.z.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl PartialOrd for Line<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Line<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.z.cmp(&other.z)
    }
}

/// Left-hand side minus right-hand side of the Klein equation.
pub fn klein_defect<'f>(z: &[FieldElem<'f>; 6]) -> FieldElem<'f> {
    let phi = BinaryForm::new(z[..5].to_vec()).expect("quartic");
    inv_i(&phi) - z[5].square()
}

impl<'f> Line<'f> {
    /// Checks the Klein equation and normalises.
    pub fn new(mut z: [FieldElem<'f>; 6]) -> Result<Self> {
        normalize(&mut z).ok_or(Error::ZeroVector)?;
        if !klein_defect(&z).is_zero() {
            return Err(Error::NotOnKleinQuadric);
        }
        Ok(Line { z })
    }

    pub fn from_ints(field: &'f Field, z: [i64; 6]) -> Result<Self> {
        Self::new(z.map(|c| field.int(c)))
    }

    pub fn from_slice(z: &[FieldElem<'f>]) -> Result<Self> {
        let arr: [FieldElem<'f>; 6] = z
            .try_into()
            .map_err(|_| Error::Parse(format!("expected 6 coordinates, got {}", z.len())))?;
        Self::new(arr)
    }

    /// From Pluecker coordinates `(p01, p02, p03, p12, p13, p23)`.
    pub fn from_plucker(p: &[FieldElem<'f>; 6]) -> Result<Self> {
        let f = p[0].field();
        let half = f.frac(1, 2).expect("odd characteristic");
        let third = f.frac(1, 3).expect("characteristic >= 5");
        let a = p[2] * third;
        Self::new([
            p[0],
            p[1] * half,
            (a + p[3]) * half,
            p[4] * half,
            p[5],
            (a - p[3]) * half,
        ])
    }

    /// Uniformly random line (span of two random independent cubics).
    pub fn random<R: Rng + ?Sized>(field: &'f Field, rng: &mut R) -> Self {
        let mut cubic = || {
            let c = (0..4)
                .map(|_| field.elem(rng.gen_range(0..field.q() as u32)))
                .collect();
            BinaryForm::new(c).expect("cubic")
        };
        loop {
            if let Ok(l) = line_from_pencil(&cubic(), &cubic()) {
                return l;
            }
        }
    }

    pub fn z(&self) -> &[FieldElem<'f>; 6] {
        &self.z
    }

    pub fn field(&self) -> &'f Field {
        self.z[0].field()
    }

    pub fn phi(&self) -> BinaryForm<'f> {
        BinaryForm::new(self.z[..5].to_vec()).expect("quartic")
    }

    pub fn z5(&self) -> FieldElem<'f> {
        self.z[5]
    }

    pub fn plucker(&self) -> [FieldElem<'f>; 6] {
        let z = &self.z;
        let f = self.field();
        [
            z[0],
            f.int(2) * z[1],
            f.int(3) * (z[2] + z[5]),
            z[2] - z[5],
            f.int(2) * z[3],
            z[4],
        ]
    }

    /// Two cubics spanning the line.
    pub fn pencil_basis(&self) -> (BinaryForm<'f>, BinaryForm<'f>) {
        let p = self.plucker();
        let f = self.field();
        // skew matrix P = u v^T - v u^T; its columns span the line
        let idx = [
            (0, 1, 0),
            (0, 2, 1),
            (0, 3, 2),
            (1, 2, 3),
            (1, 3, 4),
            (2, 3, 5),
        ];
        let mut m = Mat::zeros(f, 4, 4);
        for &(i, j, k) in &idx {
            m[(i, j)] = p[k];
            m[(j, i)] = -p[k];
        }
        let cols: Vec<Vec<FieldElem<'f>>> = (0..4)
            .map(|j| (0..4).map(|i| m[(i, j)]).collect())
            .collect();
        let first = cols
            .iter()
            .position(|c| c.iter().any(|x| !x.is_zero()))
            .expect("nonzero line");
        let second = (first + 1..4)
            .find(|&j| Mat::from_rows(vec![cols[first].clone(), cols[j].clone()]).rank() == 2)
            .expect("rank two");
        let u = BinaryForm::new(cols[first].clone()).expect("cubic");
        let v = BinaryForm::new(cols[second].clone()).expect("cubic");
        (u, v)
    }

    /// The `q + 1` points of the line.
    pub fn points(&self) -> Vec<PointP3<'f>> {
        let (u, v) = self.pencil_basis();
        pg1_points(self.field())
            .map(|(a, b)| {
                let c: Vec<_> = u
                    .coords()
                    .iter()
                    .zip(v.coords())
                    .map(|(&x, &y)| a * x + b * y)
                    .collect();
                PointP3::new(BinaryForm::new(c).expect("cubic")).expect("independent basis")
            })
            .collect()
    }

    pub fn contains(&self, p: &PointP3<'f>) -> bool {
        let (u, v) = self.pencil_basis();
        Mat::from_rows(vec![
            u.coords().to_vec(),
            v.coords().to_vec(),
            p.coords().to_vec(),
        ])
        .rank()
            == 2
    }

    pub fn nature(&self) -> LineNature {
        line_nature(self)
    }

    pub fn dual(&self) -> Self {
        polar_dual_line(self)
    }

    pub fn act(&self, g: &Gl2<'f>) -> Self {
        act_on_line(g, self)
    }

    /// Packs the canonical coordinates into an integer, `z0` most
    /// significant; the integer order agrees with the line order.
    pub fn key(&self) -> u64 {
        let q = self.field().q();
        self.z
            .iter()
            .fold(0, |acc, c| acc * q + c.encoding() as u64)
    }

    pub fn from_key(field: &'f Field, mut key: u64) -> Self {
        let q = field.q();
        let mut z = [field.zero(); 6];
        for c in z.iter_mut().rev() {
            *c = field.elem((key % q) as u32);
            key /= q;
        }
        Line { z }
    }
}

/// Every line of `PG(3, q)`, in canonical order.
pub fn all_lines(field: &Field) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for p in all_points_of_dim(field, 5) {
        let mut z = [field.zero(); 6];
        z[..5].copy_from_slice(&p);
        let phi = BinaryForm::new(p).expect("quartic");
        let Some(r) = inv_i(&phi).sqrt() else {
            continue;
        };
        z[5] = r;
        out.push(Line { z });
        if !r.is_zero() {
            z[5] = -r;
            out.push(Line { z });
        }
    }
    out.sort();
    out
}

/// Canonical representatives of `PG(n - 1, q)`.
fn all_points_of_dim(field: &Field, n: usize) -> impl Iterator<Item = Vec<FieldElem<'_>>> + '_ {
    let q = field.q();
    (0..n).flat_map(move |lead| {
        let free = (n - 1 - lead) as u32;
        (0..q.pow(free)).map(move |mut idx| {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            for j in (lead + 1..n).rev() {
                v[j] = field.elem((idx % q) as u32);
                idx /= q;
            }
            v
        })
    })
}

/// Line spanned by two independent cubics.
pub fn line_from_pencil<'f>(u: &BinaryForm<'f>, v: &BinaryForm<'f>) -> Result<Line<'f>> {
    for f in [u, v] {
        if f.degree() != 3 {
            return Err(Error::DegreeMismatch(f.degree(), 3));
        }
    }
    let (a, b) = (u.coords(), v.coords());
    let p = |i: usize, j: usize| a[i] * b[j] - a[j] * b[i];
    let pl = [p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)];
    if pl.iter().all(|x| x.is_zero()) {
        return Err(Error::DependentForms);
    }
    let line = Line::from_plucker(&pl);
    assert!(
        line.is_ok(),
        "Pluecker vector of a pencil violates the Klein equation"
    );
    line
}

pub fn line_to_quartic<'f>(l: &Line<'f>) -> (BinaryForm<'f>, FieldElem<'f>) {
    (l.phi(), l.z5())
}

/// `L^perp`: same quartic, opposite `z5`.
pub fn polar_dual_line<'f>(l: &Line<'f>) -> Line<'f> {
    let mut z = l.z;
    z[5] = -z[5];
    Line { z }
}

/// `L^perp` as the `Omega_3`-orthogonal complement of a spanning pencil.
pub fn polar_dual_line_by_orthocomplement<'f>(l: &Line<'f>) -> Line<'f> {
    let (u, v) = l.pencil_basis();
    let a3 = forms::omega_matrix(l.field(), 3).expect("degree 3");
    let rows = vec![
        a3.transpose().mul_vec(u.coords()),
        a3.transpose().mul_vec(v.coords()),
    ];
    let ns = Mat::from_rows(rows).nullspace();
    let u2 = BinaryForm::new(ns[0].clone()).expect("cubic");
    let v2 = BinaryForm::new(ns[1].clone()).expect("cubic");
    line_from_pencil(&u2, &v2).expect("two-dimensional complement")
}

/// A plane of `PG(3, q)`, stored as its polar point: the plane is
/// `{f : Omega_3(f, P) = 0}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Plane<'f> {
    dual: PointP3<'f>,
}

impl<'f> Plane<'f> {
    pub fn dual_point(&self) -> &PointP3<'f> {
        &self.dual
    }

    pub fn contains_point(&self, p: &PointP3<'f>) -> bool {
        omega_pair(p.form(), self.dual.form())
            .expect("cubics")
            .is_zero()
    }

    pub fn contains_line(&self, l: &Line<'f>) -> bool {
        let (u, v) = l.pencil_basis();
        let d = self.dual.form();
        omega_pair(&u, d).expect("cubics").is_zero() && omega_pair(&v, d).expect("cubics").is_zero()
    }
}

pub fn polar_dual_point<'f>(p: &PointP3<'f>) -> Plane<'f> {
    Plane { dual: p.clone() }
}

/// Orbit `O_1..O_5` of a point under `PGL(2, q)`.
pub fn point_classify(p: &PointP3<'_>) -> usize {
    match cubic_pattern(p.form()).expect("nonzero cubic") {
        CubicPattern::Cube => 1,
        CubicPattern::SquareTimesLinear => 2,
        CubicPattern::ThreeRational => 3,
        CubicPattern::OneRationalPlusQuadratic => 4,
        CubicPattern::IrreducibleCubic => 5,
    }
}

/// Orbit `N_1..N_5` of a plane.
pub fn plane_classify(pl: &Plane<'_>) -> usize {
    point_classify(&pl.dual)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct LineNature {
    pub generic: bool,
    #[serde(rename = "meets_C")]
    pub meets_c: bool,
    pub in_osculating: bool,
}

pub fn line_nature(l: &Line<'_>) -> LineNature {
    let phi = l.phi();
    let (i, j, z5) = (inv_i(&phi), inv_j(&phi), l.z5());
    let nature = LineNature {
        generic: !(i.cube() - j.square()).is_zero(),
        meets_c: j == -z5.cube(),
        in_osculating: j == z5.cube(),
    };
    debug_assert!(!(nature.generic && (nature.meets_c || nature.in_osculating)));
    nature
}

/// `M_z = M_phi + z5 A_2` on raw coordinates.
pub fn m_z_coords<'f>(z: &[FieldElem<'f>; 6]) -> Mat<'f> {
    let phi = BinaryForm::new(z[..5].to_vec()).expect("quartic");
    let mut m = forms::m_phi(&phi);
    let f = z[0].field();
    m[(0, 2)] += z[5];
    m[(2, 0)] += z[5];
    m[(1, 1)] -= f.int(2) * z[5];
    m
}

pub fn m_z<'f>(l: &Line<'f>) -> Mat<'f> {
    m_z_coords(&l.z)
}

/// `g~5 z = det(g)^(-1) (g_4 (z0..z4), det(g)^(-2) z5)` on raw coordinates.
pub fn act_coords<'f>(g: &Gl2<'f>, z: &[FieldElem<'f>; 6]) -> [FieldElem<'f>; 6] {
    let g4 = g.action_matrix(4).expect("degree 4");
    let di = g.det().inv().expect("invertible");
    let phi = g4.mul_vec(&z[..5]);
    let mut out = [z[0]; 6];
    for (o, p) in out.iter_mut().zip(phi) {
        *o = p * di;
    }
    out[5] = z[5] * di.cube();
    out
}

pub fn act_on_line<'f>(g: &Gl2<'f>, l: &Line<'f>) -> Line<'f> {
    let out = Line::new(act_coords(g, &l.z)).expect("the action preserves the Klein quadric");
    debug_assert_eq!(out, {
        let (u, v) = l.pencil_basis();
        line_from_pencil(&act(g, &u), &act(g, &v)).expect("independent")
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn secant_from_pencil() {
        let f = f7();
        let u = BinaryForm::from_ints(&f, &[1, 0, 0, 0]).unwrap();
        let v = BinaryForm::from_ints(&f, &[0, 0, 0, -1]).unwrap();
        let l = line_from_pencil(&u, &v).unwrap();
        assert_eq!(l, Line::from_ints(&f, [0, 0, 1, 0, 0, 1]).unwrap());
        assert_eq!(line_from_pencil(&v, &u).unwrap(), l);
        assert_eq!(
            line_from_pencil(&u, &u.scale(f.int(3))),
            Err(Error::DependentForms)
        );
    }

    #[test]
    fn klein_equation_enforced() {
        let f = f7();
        assert_eq!(
            Line::from_ints(&f, [0, 0, 1, 0, 0, 0]),
            Err(Error::NotOnKleinQuadric)
        );
        assert_eq!(Line::from_ints(&f, [0; 6]), Err(Error::ZeroVector));
    }

    #[test]
    fn quartic_of_representatives() {
        let f = f7();
        let (phi, z5) = line_to_quartic(&Line::from_ints(&f, [0, 0, 1, 0, 0, 1]).unwrap());
        assert_eq!(
            phi.coords(),
            BinaryForm::from_ints(&f, &[0, 0, 1, 0, 0])
                .unwrap()
                .coords()
        );
        assert_eq!(z5, f.one());
        let (phi, z5) = line_to_quartic(&Line::from_ints(&f, [0, 0, 0, 0, 1, 0]).unwrap());
        assert_eq!(phi.rational_roots().unwrap().len(), 1);
        assert!(z5.is_zero());
    }

    #[test]
    fn secant_and_real_axis() {
        let f = f7();
        let secant = Line::from_ints(&f, [0, 0, 1, 0, 0, 1]).unwrap();
        let axis = Line::from_ints(&f, [0, 0, 1, 0, 0, -1]).unwrap();
        assert_eq!(secant.dual(), axis);
        assert_eq!(polar_dual_line_by_orthocomplement(&secant), axis);
        assert_eq!(inv_j(&secant.phi()), f.int(-1));
        let n = secant.nature();
        assert!(n.meets_c && !n.in_osculating && !n.generic);
        let n = axis.nature();
        assert!(n.in_osculating && !n.meets_c);
        assert_eq!(
            m_z(&secant),
            Mat::from_ints(&f, &[&[0, 0, 2], &[0, 2, 0], &[2, 0, 0]])
        );
        assert_eq!(m_z(&axis).det(), f.zero());
    }

    #[test]
    fn point_orbits_of_examples() {
        let f = f7();
        // X^3, X^2 Y, XY(X - Y), X(X^2 - 3Y^2) in B_3 coordinates
        let third = |n: i64| f.frac(n, 3).unwrap();
        let x3 = PointP3::from_ints(&f, &[0, 0, 0, -1]).unwrap();
        let x2y =
            PointP3::new(BinaryForm::new(vec![f.zero(), f.zero(), third(1), f.zero()]).unwrap())
                .unwrap();
        let xyxy =
            PointP3::new(BinaryForm::new(vec![f.zero(), third(1), third(1), f.zero()]).unwrap())
                .unwrap();
        let eps = f.nonsquare();
        let xq = PointP3::new(
            BinaryForm::new(vec![f.zero(), eps / f.int(3), f.zero(), -f.one()]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            [x3, x2y, xyxy, xq].map(|p| point_classify(&p)),
            [1, 2, 3, 4]
        );
    }

    #[test]
    fn point_orbit_sizes_q7() {
        let f = f7();
        let mut sizes = [0usize; 5];
        for p in all_points(&f) {
            sizes[point_classify(&p) - 1] += 1;
        }
        assert_eq!(sizes, [8, 56, 56, 168, 112]);
    }

    #[test]
    fn line_count_q5() {
        let f = Field::prime(5).unwrap();
        let lines = all_lines(&f);
        assert_eq!(lines.len(), 26 * 31);
        for l in &lines {
            let (u, v) = l.pencil_basis();
            assert_eq!(&line_from_pencil(&u, &v).unwrap(), l);
            assert_eq!(Line::from_key(&f, l.key()), *l);
        }
    }

    #[test]
    fn planes_of_examples() {
        let f = f7();
        let x3 = PointP3::from_ints(&f, &[0, 0, 0, -1]).unwrap();
        let plane = polar_dual_point(&x3);
        assert_eq!(plane_classify(&plane), 1);
        // the osculating plane at X^3 contains the tangent line and X^3 itself
        assert!(plane.contains_point(&x3));
    }

    #[test]
    fn action_scales_z5() {
        let f = f7();
        let g = Gl2::from_ints(&f, 2, 0, 0, 1).unwrap();
        let l = Line::from_ints(&f, [0, 0, 1, 0, 0, 1]).unwrap();
        let z = act_coords(&g, l.z());
        let di = g.det().inv().unwrap();
        assert_eq!(z[5], di.cube() * l.z5());
        let phi = act(&g, &l.phi()).scale(di);
        assert_eq!(&z[..5], phi.coords());
        assert_eq!(act_on_line(&Gl2::identity(&f), &l), l);
    }
}

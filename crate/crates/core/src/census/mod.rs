//! Exhaustive orbit census for small `q`.
//!
//! Orbits are computed by applying every element of `PGL(2, q)` to a line,
//! never by trusting invariant labels; the labels are recorded afterwards
//! and checked to be constant on each orbit.

pub mod group;
pub mod report;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Embedding, Field, FieldElem};
use crate::error::{Error, Result};
use crate::forms::{factor_type, inv_j, j_invariant, j_of_lambda, FactorType};
use crate::incidence::{brute_decompose, classify_line, decompose, IncidenceProfile, LineClass};
use crate::klein::{act_coords, all_lines, all_points, point_classify, Line, PointP3};

pub use group::{group_order, pgl2};
pub use report::{census_checks, verify_all, Check, Report, VerifyOptions};

/// Largest `q` for which orbits are computed exhaustively by default.
pub const DEFAULT_BOUND: u64 = 13;
/// Largest `q` accepted for sampled incidence checks.
pub const INCIDENCE_BOUND: u64 = 101;

fn check_bound(field: &Field, bound: u64) -> Result<()> {
    if field.q() > bound {
        Err(Error::BoundExceeded {
            q: field.q(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// `(q+1, q(q+1), (q^3-q)/6, q(q^2-1)/2, (q^3-q)/3)`.
pub fn expected_point_orbit_sizes(q: u64) -> [u64; 5] {
    let g = group_order(q);
    [q + 1, q * (q + 1), g / 6, q * (q * q - 1) / 2, g / 3]
}

/// Sizes of the point classes `O_1, ..., O_5`.
pub fn point_census(field: &Field, bound: u64) -> Result<[u64; 5]> {
    check_bound(field, bound)?;
    let mut sizes = [0u64; 5];
    for p in all_points(field) {
        sizes[point_classify(&p) - 1] += 1;
    }
    Ok(sizes)
}

/// Whether the orbit of the first point of each class, under the full
/// group, is exactly that class.
pub fn point_classes_are_orbits(field: &Field) -> bool {
    let group = pgl2(field);
    let points = all_points(field);
    (1..=5).all(|class| {
        let members: BTreeSet<Vec<u32>> = points
            .iter()
            .filter(|p| point_classify(p) == class)
            .map(|p| p.coords().iter().map(|c| c.encoding()).collect())
            .collect();
        let rep: PointP3 = points
            .iter()
            .find(|p| point_classify(p) == class)
            .expect("nonempty class")
            .clone();
        let orbit: BTreeSet<Vec<u32>> = group
            .par_iter()
            .map(|g| rep.act(g).coords().iter().map(|c| c.encoding()).collect())
            .collect();
        orbit == members
    })
}

/// Invariants attached to a line orbit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct OrbitLabel {
    pub class: LineClass,
    pub factor_type: Option<FactorType>,
    /// Encoding of `j(phi_L)` for generic lines.
    pub j: Option<u32>,
    /// Encoding of `J / z5^3` when `z5 != 0`.
    pub r: Option<u32>,
}

pub fn label_of(l: &Line<'_>) -> OrbitLabel {
    let class = classify_line(l).expect("the eleven classes are exhaustive");
    let phi = l.phi();
    let generic = class == LineClass::Generic;
    OrbitLabel {
        class,
        factor_type: if generic {
            factor_type(&phi).ok()
        } else {
            None
        },
        j: if generic {
            j_invariant(&phi).ok().map(|j| j.encoding())
        } else {
            None
        },
        r: l.z5().cube().inv().map(|c| (inv_j(&phi) * c).encoding()),
    }
}

#[derive(Clone, Debug)]
pub struct LineOrbit<'f> {
    /// Least line of the orbit in canonical order.
    pub rep: Line<'f>,
    pub size: u64,
    pub label: OrbitLabel,
    /// Whether every member carries the representative's label.
    pub labels_constant: bool,
    pub formula: std::result::Result<IncidenceProfile, Error>,
    pub brute: IncidenceProfile,
}

#[derive(Clone, Debug)]
pub struct OrbitCensus<'f> {
    pub field: &'f Field,
    pub point_orbit_sizes: [u64; 5],
    pub line_count: u64,
    pub orbits: Vec<LineOrbit<'f>>,
}

/// One row of the per-orbit table.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRow {
    pub orbit_id: usize,
    pub size: u64,
    pub generic: bool,
    pub factor_type: Option<&'static str>,
    pub j: Option<u32>,
    pub r: Option<u32>,
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub c4: usize,
    pub c5: usize,
    pub e_count: Option<u64>,
}

impl<'f> OrbitCensus<'f> {
    pub fn generic_orbits(&self) -> impl Iterator<Item = &LineOrbit<'f>> {
        self.orbits
            .iter()
            .filter(|o| o.label.class == LineClass::Generic)
    }

    /// Number of generic orbits of size `|G|, |G|/2, |G|/3, |G|/4, |G|/12`.
    pub fn generic_histogram(&self) -> [u64; 5] {
        histogram(self.field.q(), self.generic_orbits())
    }

    pub fn rows(&self) -> Vec<OrbitRow> {
        self.orbits
            .iter()
            .enumerate()
            .map(|(i, o)| {
                let c = o.brute.counts;
                OrbitRow {
                    orbit_id: i + 1,
                    size: o.size,
                    generic: o.label.class == LineClass::Generic,
                    factor_type: o.label.factor_type.map(FactorType::label),
                    j: o.label.j,
                    r: o.label.r,
                    c1: c[0],
                    c2: c[1],
                    c3: c[2],
                    c4: c[3],
                    c5: c[4],
                    e_count: o.formula.as_ref().ok().and_then(|p| p.e_count),
                }
            })
            .collect()
    }
}

/// Histogram of orbit sizes by index `1, 2, 3, 4, 12` in `G`; other indices
/// are ignored.
pub fn histogram<'a, 'f: 'a>(q: u64, orbits: impl Iterator<Item = &'a LineOrbit<'f>>) -> [u64; 5] {
    let g = group_order(q);
    let mut h = [0u64; 5];
    for o in orbits {
        if let Some(i) = [1, 2, 3, 4, 12].iter().position(|&d| o.size * d == g) {
            h[i] += 1;
        }
    }
    h
}

/// Splits the lines into orbits.
pub fn line_census(field: &Field, bound: u64) -> Result<OrbitCensus<'_>> {
    check_bound(field, bound)?;
    let q = field.q();
    let group = pgl2(field);
    let lines = all_lines(field);
    let mut visited = vec![false; q.pow(6) as usize];
    let mut orbits = Vec::new();
    for l in &lines {
        if visited[l.key() as usize] {
            continue;
        }
        let mut keys: Vec<u64> = group
            .par_iter()
            .map(|g| {
                Line::new(act_coords(g, l.z()))
                    .expect("the action preserves the quadric")
                    .key()
            })
            .collect();
        keys.par_sort_unstable();
        keys.dedup();
        assert_eq!(
            keys[0],
            l.key(),
            "orbit representative is not the least member"
        );
        for &k in &keys {
            visited[k as usize] = true;
        }
        let label = label_of(l);
        let labels_constant = keys
            .par_iter()
            .all(|&k| label_of(&Line::from_key(field, k)) == label);
        orbits.push(LineOrbit {
            rep: *l,
            size: keys.len() as u64,
            label,
            labels_constant,
            formula: decompose(l),
            brute: brute_decompose(l),
        });
    }
    Ok(OrbitCensus {
        field,
        point_orbit_sizes: point_census(field, bound)?,
        line_count: lines.len() as u64,
        orbits,
    })
}

/// `2q - 3 + mu`.
pub fn expected_generic_orbit_count(q: u64, mu: i64) -> u64 {
    (2 * q as i64 - 3 + mu) as u64
}

/// Totals row of the generic-orbit size table.
pub fn expected_generic_histogram(q: u64, mu: i64) -> [u64; 5] {
    let q = q as i64;
    let half = (1 + mu) / 2;
    [(q - mu) / 3, q - 1, 1 + mu, (2 * q - 10 - half) / 3, half].map(|x| x as u64)
}

/// Generic orbits with `j = 0`: their number and size histogram.
pub fn expected_j0_orbits(mu: i64) -> [u64; 5] {
    if mu == 1 {
        [0, 0, 2, 1, 1]
    } else {
        [0, 2, 0, 0, 0]
    }
}

/// Generic orbits with `j = 1728`: size histogram.
pub fn expected_j1728_orbits(q: u64) -> [u64; 5] {
    if matches!(q % 12, 1 | 11) {
        [0, 0, 0, 4, 0]
    } else {
        [0, 2, 0, 0, 0]
    }
}

/// The sets `J_1, J_2, J_4` and their subsets `J_i^+`, as encodings.
#[derive(Clone, Debug, Default, Serialize)]
pub struct JSetCensus {
    pub j1: BTreeSet<u32>,
    pub j2: BTreeSet<u32>,
    pub j4: BTreeSet<u32>,
    pub j1_plus: BTreeSet<u32>,
    pub j2_plus: BTreeSet<u32>,
    pub j4_plus: BTreeSet<u32>,
}

impl JSetCensus {
    pub fn sizes(&self) -> [usize; 3] {
        [self.j1.len(), self.j2.len(), self.j4.len()]
    }

    pub fn plus_sizes(&self) -> [usize; 3] {
        [self.j1_plus.len(), self.j2_plus.len(), self.j4_plus.len()]
    }

    /// Whether `J_1, J_2, J_4` are disjoint with union `F_q \ {0, 1728}`.
    pub fn partitions(&self, field: &Field) -> bool {
        let total = self.j1.len() + self.j2.len() + self.j4.len();
        let union: BTreeSet<u32> = self
            .j1
            .iter()
            .chain(&self.j2)
            .chain(&self.j4)
            .copied()
            .collect();
        let expected: BTreeSet<u32> = field
            .elements()
            .filter(|x| !x.is_zero() && *x != field.int(1728))
            .map(|x| x.encoding())
            .collect();
        total == union.len() && union == expected
    }
}

/// `(|J_1|, |J_2|, |J_4|) = ((q - mu)/3, (q - 2 + mu)/2, (q - 6 - mu)/6)`.
pub fn expected_j_set_sizes(q: u64, mu: i64) -> [usize; 3] {
    let q = q as i64;
    [(q - mu) / 3, (q - 2 + mu) / 2, (q - 6 - mu) / 6].map(|x| x as usize)
}

/// `(|J_1^+|, |J_2^+|, |J_4^+|)`.
pub fn expected_j_plus_sizes(q: u64, mu: i64) -> [usize; 3] {
    let r = match q % 12 {
        1 => 13,
        other => other,
    };
    let j2 = match r {
        13 => (q - 1) / 4,
        7 | 11 => (q - 3) / 4,
        _ => (q - 5) / 4,
    };
    [
        ((q as i64 - mu) / 6) as usize,
        j2 as usize,
        ((q - r) / 12) as usize,
    ]
}

fn is_exceptional(l: FieldElem<'_>) -> bool {
    let f = l.field();
    l == f.int(-1) || l == f.int(2) || Some(l) == f.frac(1, 2) || (l * l - l + f.one()).is_zero()
}

/// Builds `J_i = j(N_i)` from the restricted cross-ratios in `F_q`,
/// `F_(q^2)` and `F_(q^3)`.
pub fn j_set_census(field: &Field, bound: u64) -> Result<JSetCensus> {
    check_bound(field, bound)?;
    let (p, k, q) = (field.p(), field.k(), field.q());
    let f2 = Field::new(p, 2 * k, None)?;
    let f3 = Field::new(p, 3 * k, None)?;
    let e2 = Embedding::new(field, &f2)?;
    let e3 = Embedding::new(field, &f3)?;
    let mut out = JSetCensus::default();
    let plus = |r: FieldElem<'_>| (r / (r - field.int(1728))).is_square();

    for lam in field
        .elements()
        .filter(|l| !l.is_zero() && !l.is_one() && !is_exceptional(*l))
    {
        out.j4.insert(j_of_lambda(lam)?.encoding());
    }
    for lam in f2.elements() {
        if lam.is_one() || !lam.pow(q + 1).is_one() || is_exceptional(lam) {
            continue;
        }
        let j = e2
            .to_small(j_of_lambda(lam)?)
            .expect("j of a norm-one cross-ratio lies in F_q");
        out.j2.insert(j.encoding());
    }
    for lam in f3.elements() {
        if !(lam.pow(q + 1) - lam.pow(q) + f3.one()).is_zero() || is_exceptional(lam) {
            continue;
        }
        let j = e3
            .to_small(j_of_lambda(lam)?)
            .expect("j of a cubic cross-ratio lies in F_q");
        out.j1.insert(j.encoding());
    }
    for (all, pos) in [
        (&out.j1, &mut out.j1_plus),
        (&out.j2, &mut out.j2_plus),
        (&out.j4, &mut out.j4_plus),
    ] {
        pos.extend(all.iter().copied().filter(|&r| plus(field.elem(r))));
    }
    Ok(out)
}

/// Which `J_i` set a generic factorisation type draws its `j` from.
pub fn j_set_index(ft: FactorType) -> usize {
    match ft {
        FactorType::F1 => 0,
        FactorType::F2 | FactorType::F2Prime => 1,
        FactorType::F4 | FactorType::F4Prime => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_census_q5() {
        let f = Field::prime(5).unwrap();
        assert_eq!(
            point_census(&f, DEFAULT_BOUND).unwrap(),
            [6, 30, 20, 60, 40]
        );
        assert_eq!(expected_point_orbit_sizes(5), [6, 30, 20, 60, 40]);
        assert!(point_classes_are_orbits(&f));
    }

    #[test]
    fn bound_enforced() {
        let f = Field::prime(17).unwrap();
        assert_eq!(
            point_census(&f, 13),
            Err(Error::BoundExceeded { q: 17, bound: 13 })
        );
    }

    #[test]
    fn line_census_q5() {
        let f = Field::prime(5).unwrap();
        let c = line_census(&f, DEFAULT_BOUND).unwrap();
        assert_eq!(c.generic_orbits().count(), 6);
        assert_eq!(c.generic_histogram(), [2, 4, 0, 0, 0]);
        assert_eq!(c.orbits.iter().map(|o| o.size).sum::<u64>(), 806);
        assert!(c.orbits.iter().all(|o| o.labels_constant));
    }

    #[test]
    fn j_sets_q7() {
        let f = Field::prime(7).unwrap();
        let j = j_set_census(&f, DEFAULT_BOUND).unwrap();
        assert_eq!(j.sizes(), [2, 3, 0]);
        assert_eq!(j.plus_sizes(), [1, 1, 0]);
        assert!(j.partitions(&f));
        assert_eq!(expected_j_set_sizes(7, 1), [2, 3, 0]);
        assert_eq!(expected_j_plus_sizes(7, 1), [1, 1, 0]);
    }

    #[test]
    fn histogram_formulas_add_up() {
        for (q, mu) in [(5u64, -1i64), (7, 1), (11, -1), (13, 1), (17, -1), (19, 1)] {
            let h = expected_generic_histogram(q, mu);
            assert_eq!(h.iter().sum::<u64>(), expected_generic_orbit_count(q, mu));
            let g = group_order(q);
            let lines = h[0] * g + h[1] * g / 2 + h[2] * g / 3 + h[3] * g / 4 + h[4] * g / 12;
            assert_eq!(lines, LineClass::Generic.size(q));
        }
    }
}

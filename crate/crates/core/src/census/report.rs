//! Pass/fail report over the census and the randomised identities.

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use super::*;
use crate::elliptic::hasse_ok;
use crate::identities;
use crate::incidence::{brute_planes_through_line, planes_through_line_decompose};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub reference: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, reference: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            reference: reference.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn compare<T: PartialEq + std::fmt::Debug>(
        name: &str,
        reference: &str,
        got: T,
        want: T,
    ) -> Self {
        let passed = got == want;
        let detail = if passed {
            format!("{got:?}")
        } else {
            format!("got {got:?}, expected {want:?}")
        };
        Check::new(name, reference, passed, detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub field: String,
    pub q: u64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random instances per identity.
    pub trials: usize,
    /// Largest `q` for the exhaustive census.
    pub bound: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            trials: 200,
            bound: DEFAULT_BOUND,
        }
    }
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    bad: impl Fn(&T) -> Option<String>,
) -> (bool, String) {
    for it in items {
        if let Some(msg) = bad(&it) {
            return (false, msg);
        }
    }
    (true, String::new())
}

/// Checks of the orbit census against the closed-form counts.
pub fn census_checks(
    census: &OrbitCensus<'_>,
    jsets: &JSetCensus,
    points_are_orbits: bool,
) -> Vec<Check> {
    let field = census.field;
    let (q, mu) = (field.q(), field.mu());
    let g = group_order(q);
    let mut checks = vec![
        Check::compare(
            "point_orbit_sizes",
            "point orbits have sizes q+1, q(q+1), (q^3-q)/6, q(q^2-1)/2, (q^3-q)/3",
            census.point_orbit_sizes,
            expected_point_orbit_sizes(q),
        ),
        Check::new(
            "point_orbit_closure",
            "each point class is a single orbit of PGL(2,q)",
            points_are_orbits,
            if points_are_orbits {
                "ok"
            } else {
                "a class is not one orbit"
            },
        ),
        Check::compare(
            "line_count",
            "PG(3,q) has (q^2+1)(q^2+q+1) lines",
            census.line_count,
            (q * q + 1) * (q * q + q + 1),
        ),
        Check::compare(
            "line_orbits_cover",
            "line orbit sizes add up to the number of lines",
            census.orbits.iter().map(|o| o.size).sum::<u64>(),
            census.line_count,
        ),
    ];

    let (ok, msg) = first_failure(&census.orbits, |o| {
        (!g.is_multiple_of(o.size)).then(|| format!("orbit of {} has size {}", o.rep, o.size))
    });
    checks.push(Check::new(
        "orbit_sizes_divide_group_order",
        "every orbit size divides q^3-q",
        ok,
        msg,
    ));
    let (ok, msg) = first_failure(&census.orbits, |o| {
        (!o.labels_constant).then(|| format!("labels vary on the orbit of {}", o.rep))
    });
    checks.push(Check::new(
        "orbit_labels_constant",
        "class, factorisation type, j and J/z5^3 are orbit invariants",
        ok,
        msg,
    ));

    checks.push(Check::compare(
        "generic_orbit_count",
        "there are 2q-3+mu orbits of generic lines",
        census.generic_orbits().count() as u64,
        expected_generic_orbit_count(q, mu),
    ));
    checks.push(Check::compare(
        "generic_orbit_histogram",
        "generic orbits of size |G|, |G|/2, |G|/3, |G|/4, |G|/12 number (q-mu)/3, q-1, 1+mu, (2q-10-(1+mu)/2)/3, (1+mu)/2",
        census.generic_histogram(),
        expected_generic_histogram(q, mu),
    ));
    let j_zero = field.zero().encoding();
    let j_1728 = field.int(1728).encoding();
    checks.push(Check::compare(
        "j0_orbits",
        "3+mu generic orbits with j = 0, of sizes |G|/2 (mu = -1) or |G|/3, |G|/3, |G|/4, |G|/12 (mu = 1)",
        histogram(q, census.generic_orbits().filter(|o| o.label.j == Some(j_zero))),
        expected_j0_orbits(mu),
    ));
    checks.push(Check::compare(
        "j1728_orbits",
        "4 generic orbits of size |G|/4 with j = 1728 if q = +-1 mod 12, else 2 of size |G|/2",
        histogram(
            q,
            census
                .generic_orbits()
                .filter(|o| o.label.j == Some(j_1728)),
        ),
        expected_j1728_orbits(q),
    ));
    let p = jsets.plus_sizes();
    checks.push(Check::compare(
        "generic_orbits_other_j",
        "generic orbits with j != 0, 1728: 2|J1+| of size |G|, 4|J2+| of size |G|/2, 8|J4+| of size |G|/4",
        histogram(q, census.generic_orbits().filter(|o| o.label.j != Some(j_zero) && o.label.j != Some(j_1728))),
        [2 * p[0] as u64, 4 * p[1] as u64, 0, 8 * p[2] as u64, 0],
    ));
    let (ok, msg) = first_failure(census.generic_orbits(), |o| {
        let j = o.label.j?;
        if j == j_zero || j == j_1728 {
            return None;
        }
        let i = j_set_index(o.label.factor_type?);
        let set = [&jsets.j1_plus, &jsets.j2_plus, &jsets.j4_plus][i];
        (!set.contains(&j)).then(|| format!("j = {j} of {} is not in the expected J+ set", o.rep))
    });
    checks.push(Check::new(
        "generic_j_in_j_plus",
        "the j-invariant of a generic line lies in J_i^+ for its factorisation type",
        ok,
        msg,
    ));

    let nongeneric: Vec<_> = census
        .orbits
        .iter()
        .filter(|o| o.label.class != LineClass::Generic)
        .collect();
    let mut classes: Vec<LineClass> = nongeneric.iter().map(|o| o.label.class).collect();
    classes.sort();
    let (ok, msg) = if classes != LineClass::NONGENERIC.to_vec() {
        (false, format!("non-generic orbit classes {classes:?}"))
    } else {
        first_failure(&nongeneric, |o| {
            let c = o.label.class;
            if o.size != c.size(q) {
                return Some(format!(
                    "{} has size {}, expected {}",
                    c.symbol(),
                    o.size,
                    c.size(q)
                ));
            }
            let rep = c.representative(field)?;
            (label_of(&rep).class != c).then(|| {
                format!(
                    "representative of {} classified as {:?}",
                    c.symbol(),
                    label_of(&rep).class
                )
            })
        })
    };
    checks.push(Check::new(
        "nongeneric_orbits",
        "ten non-generic orbits with the stated sizes and representatives",
        ok,
        msg,
    ));
    let (ok, msg) = first_failure(&nongeneric, |o| {
        let row = o.label.class.table_row(q, mu).ok()?;
        (row != o.brute.counts).then(|| {
            format!(
                "{}: table {row:?}, brute force {:?}",
                o.label.class.symbol(),
                o.brute.counts
            )
        })
    });
    checks.push(Check::new(
        "nongeneric_table",
        "non-generic incidence table with q and mu substituted",
        ok,
        msg,
    ));

    let (ok, msg) = first_failure(&census.orbits, |o| match &o.formula {
        Ok(p) if p.counts == o.brute.counts => None,
        Ok(p) => Some(format!(
            "{}: formula {:?}, brute force {:?}",
            o.rep, p.counts, o.brute.counts
        )),
        Err(e) => Some(format!("{}: {e}", o.rep)),
    });
    checks.push(Check::new(
        "orbit_incidence",
        "formula decomposition equals brute force on every orbit",
        ok,
        msg,
    ));
    let (ok, msg) = first_failure(census.generic_orbits(), |o| {
        let p = o.formula.as_ref().ok()?;
        let (e, eta, nu) = (p.e_count?, p.eta? as u64, p.nu? as u64);
        if 2 * nu + eta != e {
            Some(format!("{}: nu = {nu}, eta = {eta}, #E = {e}", o.rep))
        } else if e % 3 != 0 || !hasse_ok(e, q) {
            Some(format!("{}: #E = {e}", o.rep))
        } else {
            None
        }
    });
    checks.push(Check::new(
        "orbit_elliptic",
        "nu = (#E - eta)/2, 3 | #E and the Hasse bound on every generic orbit",
        ok,
        msg,
    ));
    let (ok, msg) = first_failure(&census.orbits, |o| {
        let formula = planes_through_line_decompose(&o.rep).ok()?;
        let brute = brute_planes_through_line(&o.rep);
        (formula != brute).then(|| format!("{}: {formula:?} vs {brute:?}", o.rep))
    });
    checks.push(Check::new(
        "orbit_plane_duality",
        "planes through L split like the points of L^perp",
        ok,
        msg,
    ));

    checks.push(Check::compare(
        "j_set_sizes",
        "|J1| = (q-mu)/3, |J2| = (q-2+mu)/2, |J4| = (q-6-mu)/6",
        jsets.sizes(),
        expected_j_set_sizes(q, mu),
    ));
    let part = jsets.partitions(field);
    checks.push(Check::new(
        "j_set_partition",
        "J1, J2, J4 partition F_q minus {0, 1728}",
        part,
        if part { "ok" } else { "overlap or gap" },
    ));
    checks.push(Check::compare(
        "j_plus_sizes",
        "|J1+| = (q-mu)/6, |J2+| by q mod 12, |J4+| = (q-r)/12",
        jsets.plus_sizes(),
        expected_j_plus_sizes(q, mu),
    ));
    checks
}

/// Runs the census (for `q <= bound`) and the randomised identities.
pub fn verify_all(field: &Field, opts: VerifyOptions) -> Result<Report> {
    let q = field.q();
    if q > INCIDENCE_BOUND {
        return Err(Error::BoundExceeded {
            q,
            bound: INCIDENCE_BOUND,
        });
    }
    let mut checks = Vec::new();
    if q <= opts.bound {
        let census = line_census(field, opts.bound)?;
        let jsets = j_set_census(field, opts.bound)?;
        checks.extend(census_checks(
            &census,
            &jsets,
            point_classes_are_orbits(field),
        ));
    }
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for id in identities::all() {
        let result = id.run(field, &mut rng, opts.trials);
        let detail = match &result {
            Ok(()) => format!("{} trials", opts.trials),
            Err(e) => e.clone(),
        };
        checks.push(Check::new(id.name, id.statement, result.is_ok(), detail));
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report {
        field: field.to_string(),
        q,
        checks,
        passed,
    })
}

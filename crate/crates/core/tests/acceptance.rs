//! One line per acceptance criterion. Exits with status 1 if any fails.

use rand::rngs::StdRng;
use rand::SeedableRng;

use twisted_cubic::algebra::Field;
use twisted_cubic::census::{self, DEFAULT_BOUND};
use twisted_cubic::elliptic::{self, hasse_ok, orbit_invariance_check};
use twisted_cubic::forms::Gl2;
use twisted_cubic::identities;
use twisted_cubic::incidence::{
    brute_decompose, brute_planes_through_line, classify_line, decompose_generic,
    decompose_nongeneric, planes_through_line_decompose, LineClass,
};
use twisted_cubic::klein::{all_lines, Line};

const QS: [u64; 4] = [5, 7, 11, 13];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn field(q: u64) -> Field {
    Field::prime(q).unwrap()
}

fn point_orbits() -> Outcome {
    for q in QS {
        let f = field(q);
        let got = census::point_census(&f, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        let want = census::expected_point_orbit_sizes(q);
        if got != want {
            return Err(format!("q={q}: {got:?} != {want:?}"));
        }
        if !census::point_classes_are_orbits(&f) {
            return Err(format!("q={q}: a point class is not one orbit"));
        }
    }
    Ok("q = 5, 7, 11, 13".into())
}

fn generic_orbits() -> Outcome {
    let mut detail = Vec::new();
    for q in QS {
        let f = field(q);
        let mu = f.mu();
        let start = std::time::Instant::now();
        let c = census::line_census(&f, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        let n = c.generic_orbits().count() as u64;
        if n != census::expected_generic_orbit_count(q, mu) {
            return Err(format!("q={q}: {n} generic orbits"));
        }
        let h = c.generic_histogram();
        if h != census::expected_generic_histogram(q, mu) {
            return Err(format!("q={q}: histogram {h:?}"));
        }
        detail.push(format!("q={q}: {n} orbits in {:.1?}", start.elapsed()));
    }
    Ok(detail.join(", "))
}

fn generic_lines(f: &Field) -> Vec<Line<'_>> {
    all_lines(f)
        .into_iter()
        .filter(|l| l.nature().generic)
        .collect()
}

fn main_theorem() -> Outcome {
    let mut total = 0;
    for q in QS {
        let f = field(q);
        for l in generic_lines(&f) {
            let formula = decompose_generic(&l).map_err(|e| format!("{l}: {e}"))?;
            let brute = brute_decompose(&l);
            let e = formula.e_count.unwrap() as usize;
            let o3 = (e - 3 * formula.eta.unwrap()) / 6;
            if formula.counts != brute.counts || o3 != brute.counts[2] {
                return Err(format!(
                    "q={q} {l}: {:?} vs {:?}",
                    formula.counts, brute.counts
                ));
            }
            total += 1;
        }
    }
    Ok(format!("all {total} generic lines at q = 5, 7, 11, 13"))
}

fn nongeneric_table() -> Outcome {
    let mut total = 0;
    for q in [5, 7] {
        let f = field(q);
        let mu = f.mu();
        for class in LineClass::NONGENERIC {
            let rep = class
                .representative(&f)
                .ok_or(format!("no representative for {}", class.symbol()))?;
            if classify_line(&rep) != Ok(class) {
                return Err(format!(
                    "q={q}: representative of {} misclassified",
                    class.symbol()
                ));
            }
        }
        for l in all_lines(&f).into_iter().filter(|l| !l.nature().generic) {
            let class = classify_line(&l).map_err(|e| e.to_string())?;
            let formula = decompose_nongeneric(&l).map_err(|e| e.to_string())?;
            let row = class.table_row(q, mu).map_err(|e| e.to_string())?;
            let brute = brute_decompose(&l);
            if formula.counts != brute.counts || row != brute.counts {
                return Err(format!(
                    "q={q} {l} ({}): {row:?} vs {:?}",
                    class.symbol(),
                    brute.counts
                ));
            }
            total += 1;
        }
    }
    Ok(format!(
        "ten representatives and all {total} non-generic lines at q = 5, 7"
    ))
}

fn elliptic_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut total = 0;
    for q in QS {
        let f = field(q);
        let c = census::line_census(&f, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        for l in generic_lines(&f) {
            let p = decompose_generic(&l).map_err(|e| format!("{l}: {e}"))?;
            let e = p.e_count.unwrap();
            if 2 * p.nu.unwrap() as u64 + p.eta.unwrap() as u64 != e
                || e % 3 != 0
                || !hasse_ok(e, q)
            {
                return Err(format!("q={q} {l}: #E = {e}"));
            }
            elliptic::torsion_witness(&l).map_err(|e| e.to_string())?;
            total += 1;
        }
        for o in c.generic_orbits() {
            for _ in 0..50 {
                let g = Gl2::random(&f, &mut rng);
                if !orbit_invariance_check(&o.rep, &g) {
                    return Err(format!("q={q}: #E changes on the orbit of {}", o.rep));
                }
            }
        }
    }
    Ok(format!(
        "{total} generic lines, 50 group elements per orbit"
    ))
}

fn identity_suite() -> Outcome {
    let trials = 1000;
    let mut rng = StdRng::seed_from_u64(6);
    let ids = identities::all();
    for (p, k) in [(5, 1), (13, 1), (5, 2)] {
        let f = Field::new(p, k, None).unwrap();
        let q = f.q();
        for id in &ids {
            id.run(&f, &mut rng, trials)
                .map_err(|e| format!("q={q} {}: {e}", id.name))?;
        }
    }
    Ok(format!(
        "{} identities, {trials} trials each at q = 5, 13, 25",
        ids.len()
    ))
}

fn j_sets() -> Outcome {
    for q in QS {
        let f = field(q);
        let mu = f.mu();
        let j = census::j_set_census(&f, DEFAULT_BOUND).map_err(|e| e.to_string())?;
        if j.sizes() != census::expected_j_set_sizes(q, mu)
            || j.plus_sizes() != census::expected_j_plus_sizes(q, mu)
        {
            return Err(format!("q={q}: {:?} {:?}", j.sizes(), j.plus_sizes()));
        }
        if !j.partitions(&f) {
            return Err(format!("q={q}: J sets do not partition"));
        }
    }
    Ok("q = 5, 7, 11, 13".into())
}

fn duality() -> Outcome {
    let f = field(5);
    let lines = all_lines(&f);
    for l in &lines {
        let formula = planes_through_line_decompose(l).map_err(|e| e.to_string())?;
        if formula != brute_planes_through_line(l) {
            return Err(format!("{l}"));
        }
    }
    Ok(format!("all {} lines at q = 5", lines.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("point-orbit sizes", point_orbits),
        ("generic-orbit count and histogram", generic_orbits),
        ("main theorem, exhaustive", main_theorem),
        ("non-generic table", nongeneric_table),
        ("elliptic identities", elliptic_identities),
        ("algebraic identity suite", identity_suite),
        ("J set sizes", j_sets),
        ("plane duality", duality),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

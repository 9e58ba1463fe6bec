use twisted_cubic::algebra::Field;
use twisted_cubic::elliptic::{self, hasse_ok};
use twisted_cubic::incidence::{
    brute_decompose, brute_planes_through_line, classify_line, decompose,
    planes_through_line_decompose, LineClass,
};
use twisted_cubic::klein::{all_lines, polar_dual_line_by_orthocomplement};

fn check_all_lines(q: u64) {
    let f = Field::prime(q).unwrap();
    let lines = all_lines(&f);
    assert_eq!(lines.len() as u64, (q * q + 1) * (q * q + q + 1));
    let mut class_sizes = std::collections::BTreeMap::new();
    for l in &lines {
        let class = classify_line(l).unwrap();
        *class_sizes.entry(class).or_insert(0u64) += 1;
        let brute = brute_decompose(l);
        let formula = decompose(l).unwrap();
        assert_eq!(formula.counts, brute.counts, "{l} ({class:?})");
        if class == LineClass::Generic {
            let e = formula.e_count.unwrap();
            let (eta, nu) = (formula.eta.unwrap() as u64, formula.nu.unwrap() as u64);
            assert_eq!(2 * nu + eta, e, "{l}");
            assert_eq!(e % 3, 0);
            assert!(hasse_ok(e, q));
            elliptic::torsion_witness(l).unwrap();
        }
    }
    for (class, n) in class_sizes {
        assert_eq!(n, class.size(q), "{class:?}");
    }
}

#[test]
fn every_line_q5() {
    check_all_lines(5);
}

#[test]
fn every_line_q7() {
    check_all_lines(7);
}

#[test]
fn planes_through_every_line_q5() {
    let f = Field::prime(5).unwrap();
    for l in all_lines(&f) {
        assert_eq!(polar_dual_line_by_orthocomplement(&l), l.dual());
        assert_eq!(
            planes_through_line_decompose(&l).unwrap(),
            brute_planes_through_line(&l),
            "{l}"
        );
    }
}

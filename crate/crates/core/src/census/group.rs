//! Enumeration of `PGL(2, q)`.

use crate::algebra::Field;
use crate::forms::Gl2;

/// `|PGL(2, q)| = q^3 - q`.
pub fn group_order(q: u64) -> u64 {
    q * q * q - q
}

/// One matrix per element of `PGL(2, q)`: `(1 b; c d)` with `d != bc`, and
/// `(0 1; c d)` with `c != 0`.
pub fn pgl2(field: &Field) -> Vec<Gl2<'_>> {
    let mut out = Vec::with_capacity(group_order(field.q()) as usize);
    let (zero, one) = (field.zero(), field.one());
    for b in field.elements() {
        for c in field.elements() {
            for d in field.elements() {
                if let Ok(g) = Gl2::new(one, b, c, d) {
                    out.push(g);
                }
            }
        }
    }
    for c in field.elements().filter(|c| !c.is_zero()) {
        for d in field.elements() {
            out.push(Gl2::new(zero, one, c, d).expect("c != 0"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_distinctness() {
        let f = Field::prime(5).unwrap();
        let g = pgl2(&f);
        assert_eq!(g.len() as u64, group_order(5));
        // distinct up to scalars: compare normalised entries
        let mut keys: Vec<_> = g
            .iter()
            .map(|m| {
                let lead = if m.a.is_zero() { m.b } else { m.a };
                let s = lead.inv().unwrap();
                [m.a * s, m.b * s, m.c * s, m.d * s].map(|x| x.encoding())
            })
            .collect();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(keys.len(), 120);
    }
}

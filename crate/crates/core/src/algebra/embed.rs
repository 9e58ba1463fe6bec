//! Embedding of `GF(q)` into an extension `GF(q^d)`.

use std::collections::HashMap;

use crate::algebra::field::{Field, FieldElem};
use crate::error::{Error, Result};

/// Explicit field embedding `small -> big`, fixed by sending the generator
/// of `small`'s polynomial basis to the least root of its modulus in `big`.
pub struct Embedding<'s, 'b> {
    small: &'s Field,
    big: &'b Field,
    image: Vec<FieldElem<'b>>,
    preimage: HashMap<u32, u32>,
}

impl<'s, 'b> Embedding<'s, 'b> {
    pub fn new(small: &'s Field, big: &'b Field) -> Result<Self> {
        if small.p() != big.p() || !big.k().is_multiple_of(small.k()) {
            return Err(Error::DegreeMismatch(small.k() as usize, big.k() as usize));
        }
        let lift = |c: u32| big.int(c as i64);
        let modulus = small.modulus();
        let alpha = if small.k() == 1 {
            big.zero()
        } else {
            big.elements()
                .find(|&a| {
                    modulus
                        .iter()
                        .rev()
                        .fold(big.zero(), |acc, &c| acc * a + lift(c))
                        .is_zero()
                })
                .ok_or_else(|| {
                    Error::ReducibleModulus("modulus has no root in the extension".into())
                })?
        };
        let image: Vec<FieldElem<'b>> = small
            .elements()
            .map(|x| {
                if small.k() == 1 {
                    lift(x.encoding())
                } else {
                    x.digits()
                        .iter()
                        .rev()
                        .fold(big.zero(), |acc, &c| acc * alpha + lift(c))
                }
            })
            .collect();
        let preimage = image
            .iter()
            .enumerate()
            .map(|(i, y)| (y.encoding(), i as u32))
            .collect();
        Ok(Embedding {
            small,
            big,
            image,
            preimage,
        })
    }

    pub fn big(&self) -> &'b Field {
        self.big
    }

    pub fn to_big(&self, x: FieldElem<'s>) -> FieldElem<'b> {
        self.image[x.encoding() as usize]
    }

    /// Inverse image, or `None` if `y` is outside the subfield.
    pub fn to_small(&self, y: FieldElem<'b>) -> Option<FieldElem<'s>> {
        self.preimage
            .get(&y.encoding())
            .map(|&v| self.small.elem(v))
    }
}

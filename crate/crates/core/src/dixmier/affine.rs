//! Affine automorphisms `Y -> aY + bX + λ`, `X -> cY + dX + μ`.
//!
//! The matrix of a word `[g1, ..., gk]` on the basis `(Y, X)` is `M(gk)···M(g1)`.
//! With `c ≠ 0` the linear part factors as `U((a-1)/c) L(c) U((d-1)/c)`, where `U`
//! and `L` are the transvections of `PhiX(1, ·)` and `PhiY(1, ·)`. With `c = 0` the
//! pivot `a` is nonzero and the part is `Torus(1/a)` after `PhiX(1, b/a)`.

use num_traits::{One, Zero};

use super::auto::{AutoGen, AutoWord};
use crate::arith::rat::rat_to_text;
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::weyl::WeylElement;

fn linear_form(a: &Rat, b: &Rat, l: &Rat) -> WeylElement {
    WeylElement::y()
        .scale(a)
        .add(&WeylElement::x().scale(b))
        .add(&WeylElement::scalar(l.clone()))
}

pub fn affine_decompose(a: &Rat, b: &Rat, c: &Rat, d: &Rat, lambda: &Rat, mu: &Rat) -> Result<AutoWord> {
    let det = a * d - b * c;
    if !det.is_one() {
        return Err(Error::Determinant(rat_to_text(&det)));
    }
    let mut gens = if !c.is_zero() {
        vec![
            AutoGen::PhiX { n: 1, lambda: (d - Rat::one()) / c },
            AutoGen::PhiY { n: 1, lambda: c.clone() },
            AutoGen::PhiX { n: 1, lambda: (a - Rat::one()) / c },
        ]
    } else {
        vec![
            AutoGen::PhiX { n: 1, lambda: b / a },
            AutoGen::Torus { mu: a.recip() },
        ]
    };
    gens.push(AutoGen::Translate { c: mu.clone(), d: lambda.clone() });
    let word = AutoWord::new(gens).simplified();
    let (tx, ty) = word.images();
    if ty != linear_form(a, b, lambda) || tx != linear_form(c, d, mu) {
        return Err(Error::Verification("affine decomposition does not reproduce the images".into()));
    }
    Ok(word)
}

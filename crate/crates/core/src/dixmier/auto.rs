//! Tame automorphisms as words in elementary generators.
//!
//! A word `[g1, g2, ..., gk]` denotes the composite `g1 ∘ g2 ∘ ... ∘ gk`.
//! Images of `X` and `Y` are built left to right: starting from `(X, Y)`,
//! each generator's formula is evaluated at the current images.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arith::rat::{parse_rat, rat_to_text, rat_to_wire};
use crate::arith::Rat;
use crate::error::ParseError;
use crate::parse::JsonForm;
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AutoGen {
    /// `(X, Y) -> (X, Y + lambda X^n)`
    PhiX { n: u32, lambda: Rat },
    /// `(X, Y) -> (X + lambda Y^n, Y)`
    PhiY { n: u32, lambda: Rat },
    /// `(X, Y) -> (mu X, mu^-1 Y)`
    Torus { mu: Rat },
    /// `(X, Y) -> (X + c, Y + d)`
    Translate { c: Rat, d: Rat },
    /// `(X, Y) -> (Y, -X)`
    Xi,
}

impl AutoGen {
    /// Generator formulas evaluated at images `(x, y)`: returns the new `(x, y)`.
    fn push_forward(&self, x: &WeylElement, y: &WeylElement) -> (WeylElement, WeylElement) {
        match self {
            AutoGen::PhiX { n, lambda } => (x.clone(), y.add(&x.pow(*n).scale(lambda))),
            AutoGen::PhiY { n, lambda } => (x.add(&y.pow(*n).scale(lambda)), y.clone()),
            AutoGen::Torus { mu } => (x.scale(mu), y.scale(&mu.recip())),
            AutoGen::Translate { c, d } => (
                x.add(&WeylElement::scalar(c.clone())),
                y.add(&WeylElement::scalar(d.clone())),
            ),
            AutoGen::Xi => (y.clone(), x.neg()),
        }
    }

    /// Inverse as a word (`Xi` needs two generators).
    pub fn inverse(&self) -> Vec<AutoGen> {
        match self {
            AutoGen::PhiX { n, lambda } => vec![AutoGen::PhiX { n: *n, lambda: -lambda }],
            AutoGen::PhiY { n, lambda } => vec![AutoGen::PhiY { n: *n, lambda: -lambda }],
            AutoGen::Torus { mu } => vec![AutoGen::Torus { mu: mu.recip() }],
            AutoGen::Translate { c, d } => vec![AutoGen::Translate { c: -c, d: -d }],
            AutoGen::Xi => vec![AutoGen::Torus { mu: -Rat::one() }, AutoGen::Xi],
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            AutoGen::PhiX { lambda, .. } | AutoGen::PhiY { lambda, .. } => lambda.is_zero(),
            AutoGen::Torus { mu } => mu.is_one(),
            AutoGen::Translate { c, d } => c.is_zero() && d.is_zero(),
            AutoGen::Xi => false,
        }
    }

    fn validate(&self) -> Result<(), String> {
        match self {
            AutoGen::PhiX { n: 0, .. } | AutoGen::PhiY { n: 0, .. } => {
                Err("exponent n must be at least 1".into())
            }
            AutoGen::Torus { mu } if mu.is_zero() => Err("torus parameter must be nonzero".into()),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AutoWord {
    pub gens: Vec<AutoGen>,
}

impl AutoWord {
    pub fn identity() -> Self {
        AutoWord { gens: Vec::new() }
    }

    pub fn new(gens: Vec<AutoGen>) -> Self {
        AutoWord { gens }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self ∘ other`.
    pub fn then(mut self, other: &AutoWord) -> AutoWord {
        self.gens.extend(other.gens.iter().cloned());
        self
    }

    /// Drops generators that act as the identity.
    pub fn simplified(&self) -> AutoWord {
        AutoWord {
            gens: self.gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
        }
    }

    /// `(tau(X), tau(Y))`.
    pub fn images(&self) -> (WeylElement, WeylElement) {
        let mut x = WeylElement::x();
        let mut y = WeylElement::y();
        for g in &self.gens {
            (x, y) = g.push_forward(&x, &y);
        }
        (x, y)
    }

    pub fn apply(&self, a: &WeylElement) -> WeylElement {
        if self.gens.is_empty() {
            return a.clone();
        }
        let (x, y) = self.images();
        a.substitute(&x, &y)
    }

    pub fn inverse(&self) -> AutoWord {
        AutoWord {
            gens: self.gens.iter().rev().flat_map(AutoGen::inverse).collect(),
        }
    }
}

impl std::fmt::Display for AutoGen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AutoGen::PhiX { n, lambda } => write!(f, "PhiX({n}, {})", rat_to_text(lambda)),
            AutoGen::PhiY { n, lambda } => write!(f, "PhiY({n}, {})", rat_to_text(lambda)),
            AutoGen::Torus { mu } => write!(f, "Torus({})", rat_to_text(mu)),
            AutoGen::Translate { c, d } => write!(f, "Translate({}, {})", rat_to_text(c), rat_to_text(d)),
            AutoGen::Xi => f.write_str("Xi"),
        }
    }
}

impl std::fmt::Display for AutoWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn apply_auto(w: &AutoWord, a: &WeylElement) -> WeylElement {
    w.apply(a)
}

pub fn invert_auto(w: &AutoWord) -> AutoWord {
    w.inverse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TameLimits {
    pub word_len: usize,
    pub max_n: u32,
    pub coeff_height: i64,
}

impl Default for TameLimits {
    fn default() -> Self {
        TameLimits {
            word_len: 3,
            max_n: 3,
            coeff_height: 3,
        }
    }
}

fn random_rat<R: Rng>(rng: &mut R, h: i64, nonzero: bool) -> Rat {
    loop {
        let n = rng.gen_range(-h..=h);
        if nonzero && n == 0 {
            continue;
        }
        let d = rng.gen_range(1..=h);
        return Rat::new(BigInt::from(n), BigInt::from(d));
    }
}

/// Deterministic pseudorandom word of length `1..=word_len`.
pub fn random_tame(seed: u64, limits: TameLimits) -> AutoWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = rng.gen_range(1..=limits.word_len.max(1));
    let h = limits.coeff_height.max(1);
    let max_n = limits.max_n.max(1);
    let gens = (0..len)
        .map(|_| match rng.gen_range(0..5) {
            0 => AutoGen::PhiX {
                n: rng.gen_range(1..=max_n),
                lambda: random_rat(&mut rng, h, true),
            },
            1 => AutoGen::PhiY {
                n: rng.gen_range(1..=max_n),
                lambda: random_rat(&mut rng, h, true),
            },
            2 => AutoGen::Torus {
                mu: random_rat(&mut rng, h, true),
            },
            3 => AutoGen::Translate {
                c: random_rat(&mut rng, h, false),
                d: random_rat(&mut rng, h, false),
            },
            _ => AutoGen::Xi,
        })
        .collect();
    AutoWord { gens }
}

fn jerr(msg: impl Into<String>) -> ParseError {
    ParseError::Json(msg.into())
}

impl JsonForm for AutoWord {
    /// `{"word": [{"gen": "PhiX", "n": 3, "lambda": "2/1"}, ...]}`.
    fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .gens
            .iter()
            .map(|g| match g {
                AutoGen::PhiX { n, lambda } => {
                    json!({"gen": "PhiX", "n": n, "lambda": rat_to_wire(lambda)})
                }
                AutoGen::PhiY { n, lambda } => {
                    json!({"gen": "PhiY", "n": n, "lambda": rat_to_wire(lambda)})
                }
                AutoGen::Torus { mu } => json!({"gen": "Torus", "mu": rat_to_wire(mu)}),
                AutoGen::Translate { c, d } => {
                    json!({"gen": "Translate", "c": rat_to_wire(c), "d": rat_to_wire(d)})
                }
                AutoGen::Xi => json!({"gen": "Xi"}),
            })
            .collect();
        json!({ "word": gens })
    }

    fn from_json(v: &Value) -> Result<Self, ParseError> {
        let items = v
            .get("word")
            .and_then(Value::as_array)
            .ok_or_else(|| jerr("expected {\"word\": [...]}"))?;
        let rat_field = |o: &Value, k: &str| -> Result<Rat, ParseError> {
            let s = o
                .get(k)
                .and_then(Value::as_str)
                .ok_or_else(|| jerr(format!("missing string field {k:?}")))?;
            parse_rat(s)
        };
        let n_field = |o: &Value| -> Result<u32, ParseError> {
            o.get("n")
                .and_then(Value::as_u64)
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| jerr("missing integer field \"n\""))
        };
        let mut gens = Vec::with_capacity(items.len());
        for o in items {
            let g = match o.get("gen").and_then(Value::as_str) {
                Some("PhiX") => AutoGen::PhiX {
                    n: n_field(o)?,
                    lambda: rat_field(o, "lambda")?,
                },
                Some("PhiY") => AutoGen::PhiY {
                    n: n_field(o)?,
                    lambda: rat_field(o, "lambda")?,
                },
                Some("Torus") => AutoGen::Torus {
                    mu: rat_field(o, "mu")?,
                },
                Some("Translate") => AutoGen::Translate {
                    c: rat_field(o, "c")?,
                    d: rat_field(o, "d")?,
                },
                Some("Xi") => AutoGen::Xi,
                other => return Err(jerr(format!("unknown generator {other:?}"))),
            };
            g.validate().map_err(jerr)?;
            gens.push(g);
        }
        Ok(AutoWord { gens })
    }
}

#![allow(dead_code)]

use b3quot::{FieldContext, FieldElement, ParameterSet, Rational, RepSpec};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn params(values: &[&str]) -> ParameterSet {
    ParameterSet::parse_rationals(values).unwrap()
}

pub fn q(s: &str) -> FieldElement {
    FieldElement::parse(&FieldContext::rationals(), s).unwrap()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-12..=12);
        let d: i64 = rng.gen_range(1..=5);
        if n != 0 {
            return Rational::new(n, d);
        }
    }
}

/// Distinct nonzero rationals, the last forced to `last(first n-1)` when given.
fn distinct(
    rng: &mut ChaCha8Rng,
    n: usize,
    mut last: impl FnMut(&[Rational], &mut ChaCha8Rng) -> Rational,
) -> Option<ParameterSet> {
    let mut vals: Vec<Rational> = (0..n - 1).map(|_| small_rational(rng)).collect();
    vals.push(last(&vals, rng));
    ParameterSet::from_rationals(&FieldContext::rationals(), &vals).ok()
}

/// A random spec of dimension `dim` over `Q`. Dimension 4 takes `x4 = h²/(x1x2x3)`,
/// dimension 5 takes `x5 = f⁵/(x1x2x3x4)`, so the roots are rational.
pub fn random_spec(rng: &mut ChaCha8Rng, dim: usize) -> RepSpec {
    loop {
        let n = if dim == 6 { 5 } else { dim };
        let mut root = None;
        let x = match dim {
            4 | 5 => distinct(rng, n, |first, rng| {
                let r = small_rational(rng);
                let prod = first.iter().fold(Rational::one(), |a, b| &a * b);
                root = Some(r.clone());
                let k = if dim == 4 { 2 } else { 5 };
                &r.pow(k) / &prod
            }),
            _ => distinct(rng, n, |_, rng| small_rational(rng)),
        };
        let Some(x) = x else { continue };
        let ctx = x.context().clone();
        let spec = match dim {
            4 => RepSpec::new(4, x).with_h(FieldElement::from_rational(&ctx, root.unwrap())),
            5 => RepSpec::new(5, x).with_f(FieldElement::from_rational(&ctx, root.unwrap())),
            6 => RepSpec::new(6, x).with_variant(rng.gen_range(1..=5)),
            d => RepSpec::new(d, x),
        };
        debug_assert!(spec.validate().is_ok());
        return spec;
    }
}

//! Explicit representations of `Q_X` in the eigenbasis of `g1`, dimensions 1 to 6.
//!
//! Indices in the public API are 1-based, matching the labels `x1..x5`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{poly_string, rational_kth_root, roots_of_binomial, Context, FieldElement, Rational};
use crate::linalg::Matrix;
use crate::poly::Polynomial;

/// Ordered eigenvalue list `x1..xn`: nonzero, pairwise distinct, `n <= 5`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterSet {
    values: Vec<FieldElement>,
}

impl ParameterSet {
    pub fn new(values: Vec<FieldElement>) -> Result<ParameterSet> {
        let n = values.len();
        if n == 0 {
            return Err(Error::BadParameters("X must not be empty".into()));
        }
        if n > 5 {
            return Err(Error::BadParameters(format!(
                "|X| = {n}: the quotient algebra is finite-dimensional only for |X| <= 5 (1/3 + 1/p > 1/2)"
            )));
        }
        let ctx = values[0].context().clone();
        for (i, v) in values.iter().enumerate() {
            if v.context().as_ref() != ctx.as_ref() {
                return Err(Error::ContextMismatch);
            }
            if v.is_zero() {
                return Err(Error::BadParameters(format!("x{} is zero", i + 1)));
            }
            if let Some(j) = values[..i].iter().position(|w| w == v) {
                return Err(Error::BadParameters(format!("x{} = x{}", j + 1, i + 1)));
            }
        }
        Ok(ParameterSet { values })
    }

    pub fn from_rationals(ctx: &Context, values: &[Rational]) -> Result<ParameterSet> {
        ParameterSet::new(
            values
                .iter()
                .map(|r| FieldElement::from_rational(ctx, r.clone()))
                .collect(),
        )
    }

    /// Parses rational strings such as `"27/2"` into the base field.
    pub fn parse_rationals(values: &[&str]) -> Result<ParameterSet> {
        let ctx = crate::field::FieldContext::rationals();
        let rs = values.iter().map(|s| s.parse()).collect::<Result<Vec<Rational>>>()?;
        ParameterSet::from_rationals(&ctx, &rs)
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn context(&self) -> &Context {
        self.values[0].context()
    }

    /// `x_i`, 1-based.
    pub fn get(&self, i: usize) -> Result<&FieldElement> {
        check_index(i, self.len())?;
        Ok(&self.values[i - 1])
    }

    /// Copy with `x_i` and `x_j` exchanged (1-based).
    pub fn swapped(&self, i: usize, j: usize) -> Result<ParameterSet> {
        check_index(i, self.len())?;
        check_index(j, self.len())?;
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Ok(ParameterSet { values })
    }

    /// Sub-list on the given 1-based indices, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Result<ParameterSet> {
        let values = indices
            .iter()
            .map(|&i| self.get(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        ParameterSet::new(values)
    }

    /// `P_X(λ) = ∏ (λ - x_i)`.
    pub fn minimal_polynomial(&self) -> Polynomial {
        Polynomial::from_roots(self.context(), &self.values)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(FieldElement::to_json).collect())
    }
}

fn check_index(i: usize, len: usize) -> Result<()> {
    if i == 0 || i > len {
        Err(Error::IndexOutOfRange { index: i, len })
    } else {
        Ok(())
    }
}

/// `e_k` of an arbitrary list of elements.
pub fn esym(values: &[FieldElement], k: usize) -> FieldElement {
    let ctx = values[0].context();
    // coefficients of ∏ (1 + x_i z)
    let mut e = vec![FieldElement::one(ctx)];
    for x in values {
        let mut next = e.clone();
        next.push(FieldElement::zero(ctx));
        for j in 1..next.len() {
            next[j] = &next[j] + &(&e[j - 1] * x);
        }
        e = next;
    }
    e.get(k).cloned().unwrap_or_else(|| FieldElement::zero(ctx))
}

/// `e_k(X)`; `e_0 = 1`.
pub fn elementary_symmetric(x: &ParameterSet, k: usize) -> Result<FieldElement> {
    if k > x.len() {
        return Err(Error::IndexOutOfRange { index: k, len: x.len() });
    }
    Ok(esym(x.values(), k))
}

/// `Δ_i(X) = ∏_{j≠i} (x_j - x_i)`, 1-based.
pub fn delta(x: &ParameterSet, i: usize) -> Result<FieldElement> {
    check_index(i, x.len())?;
    Ok(delta_of(x.values(), i - 1))
}

fn delta_of(x: &[FieldElement], i: usize) -> FieldElement {
    let ctx = x[0].context();
    x.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(FieldElement::one(ctx), |acc, (_, xj)| acc * (xj - &x[i]))
}

fn without(x: &[FieldElement], i: usize) -> Vec<FieldElement> {
    x.iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, v)| v.clone())
        .collect()
}

/// Root choices for the square-root (`h² = e4`) and fifth-root (`f⁵ = e5`) families.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RootChoice {
    pub h: Option<FieldElement>,
    pub f: Option<FieldElement>,
}

/// What to build: dimension, parameters, roots, and the dim-6 variant index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepSpec {
    pub dim: usize,
    pub params: ParameterSet,
    pub roots: RootChoice,
    /// For `dim == 6`: index `i` with `C = -x_i e5(X)`.
    pub variant: Option<usize>,
}

impl RepSpec {
    pub fn new(dim: usize, params: ParameterSet) -> RepSpec {
        RepSpec {
            dim,
            params,
            roots: RootChoice::default(),
            variant: None,
        }
    }

    pub fn with_h(mut self, h: FieldElement) -> RepSpec {
        self.roots.h = Some(h);
        self
    }

    pub fn with_f(mut self, f: FieldElement) -> RepSpec {
        self.roots.f = Some(f);
        self
    }

    pub fn with_variant(mut self, i: usize) -> RepSpec {
        self.variant = Some(i);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.params.len();
        match self.dim {
            1..=5 if n != self.dim => {
                return Err(Error::BadSpec(format!(
                    "dimension {} needs |X| = {}, got {n}",
                    self.dim, self.dim
                )))
            }
            1..=5 => {}
            6 => {
                if n != 5 {
                    return Err(Error::BadSpec(format!("dimension 6 needs |X| = 5, got {n}")));
                }
                match self.variant {
                    Some(1..=5) => {}
                    other => {
                        return Err(Error::BadSpec(format!(
                            "dimension 6 needs a variant in 1..=5, got {other:?}"
                        )))
                    }
                }
            }
            d => return Err(Error::BadSpec(format!("no representation of dimension {d}"))),
        }
        let ctx = self.params.context();
        for r in [&self.roots.h, &self.roots.f].into_iter().flatten() {
            if r.context().as_ref() != ctx.as_ref() {
                return Err(Error::ContextMismatch);
            }
        }
        if self.dim == 4 {
            let h = self
                .roots
                .h
                .as_ref()
                .ok_or_else(|| Error::MissingRoot("dimension 4 needs h".into()))?;
            if h.pow(2) != esym(self.params.values(), 4) {
                return Err(Error::MissingRoot(format!("h = {h} does not satisfy h^2 = e4(X)")));
            }
        }
        if self.dim == 5 {
            let f = self
                .roots
                .f
                .as_ref()
                .ok_or_else(|| Error::MissingRoot("dimension 5 needs f".into()))?;
            if f.pow(5) != esym(self.params.values(), 5) {
                return Err(Error::MissingRoot(format!("f = {f} does not satisfy f^5 = e5(X)")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "dim": self.dim, "X": self.params.to_json() });
        if let Some(h) = &self.roots.h {
            v["h"] = h.to_json();
        }
        if let Some(f) = &self.roots.f {
            v["f"] = f.to_json();
        }
        if let Some(i) = self.variant {
            v["variant"] = json!(i);
        }
        v
    }

    /// Reads `{dim, X, h?, f?, variant?}`.
    pub fn from_json(ctx: &Context, v: &Value) -> Result<RepSpec> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("RepSpec needs an integer \"dim\"".into()))? as usize;
        let params = parse_params(
            ctx,
            v.get("X").ok_or_else(|| Error::Parse("RepSpec needs \"X\"".into()))?,
        )?;
        let mut spec = RepSpec::new(dim, params);
        if let Some(h) = v.get("h") {
            spec.roots.h = Some(FieldElement::from_json(ctx, h)?);
        }
        if let Some(f) = v.get("f") {
            spec.roots.f = Some(FieldElement::from_json(ctx, f)?);
        }
        if let Some(i) = v.get("variant") {
            spec.variant = Some(
                i.as_u64()
                    .ok_or_else(|| Error::Parse("variant must be an integer".into()))? as usize,
            );
        }
        Ok(spec)
    }
}

pub fn parse_params(ctx: &Context, v: &Value) -> Result<ParameterSet> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("X must be a list of field elements".into()))?;
    let values = items
        .iter()
        .map(|e| FieldElement::from_json(ctx, e))
        .collect::<Result<Vec<_>>>()?;
    ParameterSet::new(values)
}

/// A constructed representation: `g1` diagonal, `g2` dense.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub spec: RepSpec,
    pub g1: Matrix,
    pub g2: Matrix,
    /// Multiplicity of each `x_i` (original order) as an eigenvalue of `g1`.
    pub multiplicities: Vec<usize>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.g1.rows()
    }

    pub fn context(&self) -> &Context {
        self.g1.context()
    }

    pub fn generators(&self) -> [Matrix; 2] {
        [self.g1.clone(), self.g2.clone()]
    }

    /// Short label such as `rho4[h=6]` or `rho6[2]`.
    pub fn label(&self) -> String {
        match self.spec.dim {
            4 => format!(
                "rho4[h={}]",
                self.spec.roots.h.as_ref().map(|h| h.encode()).unwrap_or_default()
            ),
            5 => format!(
                "rho5[f={}]",
                self.spec.roots.f.as_ref().map(|f| f.encode()).unwrap_or_default()
            ),
            6 => format!("rho6[{}]", self.spec.variant.unwrap_or(0)),
            d => format!("rho{d}"),
        }
    }

    /// `g1 g2 g1 = g2 g1 g2`.
    pub fn verify_braid_relation(&self) -> bool {
        &(&self.g1 * &self.g2) * &self.g1 == &(&self.g2 * &self.g1) * &self.g2
    }

    /// `P_X(g2) = 0` and `minpoly(g2) = P_X`.
    pub fn verify_minimal_polynomial(&self) -> bool {
        let p = self.spec.params.minimal_polynomial();
        if !self.g2.eval_poly(&p).is_zero() {
            return false;
        }
        self.g2.minpoly().is_ok_and(|m| m == p)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec.to_json(),
            "label": self.label(),
            "g1": self.g1.to_json(),
            "g2": self.g2.to_json(),
            "multiplicities": self.multiplicities,
        })
    }
}

/// Builds the representation described by `spec` and self-checks it.
pub fn build_rep(spec: &RepSpec) -> Result<Representation> {
    let rep = build_unchecked(spec)?;
    if !rep.verify_braid_relation() {
        return Err(Error::ConstructionCheck(format!(
            "the braid relation for {}",
            rep.label()
        )));
    }
    if !rep.verify_minimal_polynomial() {
        return Err(Error::ConstructionCheck(format!(
            "the minimal polynomial check for {}",
            rep.label()
        )));
    }
    Ok(rep)
}

/// Builds without the braid/minimal-polynomial self-check.
pub fn build_unchecked(spec: &RepSpec) -> Result<Representation> {
    spec.validate()?;
    let ctx = spec.params.context().clone();
    let x = spec.params.values();
    let n = x.len();
    let (g1, g2, multiplicities) = match spec.dim {
        1 => {
            let m = Matrix::diag(&ctx, &x[..1]);
            (m.clone(), m, vec![1])
        }
        2 => (Matrix::diag(&ctx, x), rep2_g2(&ctx, x), vec![1; 2]),
        3 => (Matrix::diag(&ctx, x), rep3_g2(&ctx, x), vec![1; 3]),
        4 => (
            Matrix::diag(&ctx, x),
            rep4_g2(&ctx, x, spec.roots.h.as_ref().unwrap()),
            vec![1; 4],
        ),
        5 => (
            Matrix::diag(&ctx, x),
            rep5_g2(&ctx, x, spec.roots.f.as_ref().unwrap()),
            vec![1; 5],
        ),
        6 => {
            let i = spec.variant.unwrap();
            // ρ6_i = σ_{i5} ∘ ρ6_5
            let mut y = x.to_vec();
            y.swap(i - 1, 4);
            let mut diag = y.clone();
            diag.push(y[4].clone());
            let mut mult = vec![1; n];
            mult[i - 1] = 2;
            (Matrix::diag(&ctx, &diag), rep6_g2(&ctx, &y), mult)
        }
        _ => unreachable!("validated"),
    };
    Ok(Representation {
        spec: spec.clone(),
        g1,
        g2,
        multiplicities,
    })
}

fn rep2_g2(ctx: &Context, x: &[FieldElement]) -> Matrix {
    let (x1, x2) = (&x[0], &x[1]);
    let k = (x1 - x2).inv().expect("distinct parameters");
    let rows = vec![
        vec![-(x2 * x2) * &k, -(x1 * x2) * &k],
        vec![(x1 * x1 - x1 * x2 + x2 * x2) * &k, x1 * x1 * &k],
    ];
    Matrix::from_rows(ctx, rows).unwrap()
}

fn rep3_g2(ctx: &Context, x: &[FieldElement]) -> Matrix {
    let (x1, x2, x3) = (&x[0], &x[1], &x[2]);
    let d: Vec<FieldElement> = (0..3).map(|i| delta_of(x, i).inv().unwrap()).collect();
    let rows = vec![
        vec![
            x2 * x3 * (x2 + x3) * &d[0],
            x3 * (x1 * x1 + x2 * x3) * &d[0],
            x2 * (x1 * x1 + x2 * x3) * &d[0],
        ],
        vec![
            x3 * (x2 * x2 + x1 * x3) * &d[1],
            x1 * x3 * (x1 + x3) * &d[1],
            x1 * (x2 * x2 + x1 * x3) * &d[1],
        ],
        vec![
            x2 * (x3 * x3 + x1 * x2) * &d[2],
            x1 * (x3 * x3 + x1 * x2) * &d[2],
            x1 * x2 * (x1 + x2) * &d[2],
        ],
    ];
    Matrix::from_rows(ctx, rows).unwrap()
}

/// `α_i`, `β_i` (i = 0..3) and `γ_a` (a = 1..3, index 0 unused) for the 4-dimensional family.
fn rep4_helpers(x: &[FieldElement], h: &FieldElement) -> (Vec<FieldElement>, Vec<FieldElement>, Vec<FieldElement>) {
    let e4 = esym(x, 4);
    let alpha = (0..4)
        .map(|i| {
            let rest = without(x, i);
            esym(&rest, 3) * esym(&rest, 1) - h * esym(&rest, 2)
        })
        .collect();
    let beta = (0..4).map(|i| &e4 / &(&x[i] * &x[i]) - h).collect();
    let mut gamma = vec![FieldElement::zero(h.context())];
    for a in 1..4 {
        let (b, c) = others3(a);
        gamma.push(&x[0] * &x[a] + &x[b] * &x[c] - h);
    }
    (alpha, beta, gamma)
}

/// The other two elements of {1, 2, 3} (0-based positions among x2..x4).
fn others3(a: usize) -> (usize, usize) {
    match a {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => unreachable!(),
    }
}

fn rep4_g2(ctx: &Context, x: &[FieldElement], h: &FieldElement) -> Matrix {
    let (alpha, beta, gamma) = rep4_helpers(x, h);
    let dinv: Vec<FieldElement> = (0..4).map(|i| delta_of(x, i).inv().unwrap()).collect();
    let mut g = Matrix::zeros(ctx, 4, 4);
    for i in 0..4 {
        g[(i, i)] = &alpha[i] * &dinv[i];
    }
    for a in 1..4 {
        let (b, c) = others3(a);
        g[(0, a)] = &beta[0] * &gamma[b] * &gamma[c] * &dinv[0];
        g[(a, 0)] = &beta[a] * &dinv[a];
        for b in (1..4).filter(|&b| b != a) {
            g[(a, b)] = &beta[a] * &gamma[a] * &dinv[a];
        }
    }
    g
}

fn rep5_g2(ctx: &Context, x: &[FieldElement], f: &FieldElement) -> Matrix {
    let f2 = f * f;
    let mut g = Matrix::zeros(ctx, 5, 5);
    for i in 0..5 {
        let rest = without(x, i);
        let dinv = delta_of(x, i).inv().unwrap();
        let prod = rest.iter().fold(FieldElement::one(ctx), |acc, xk| acc * (f + xk));
        g[(i, i)] = (esym(&rest, 4) * esym(&rest, 1) + f * &x[i] * esym(&rest, 3) + f * prod) * &dinv;
        for j in (0..5).filter(|&j| j != i) {
            let num = (0..5)
                .filter(|&k| k != i && k != j)
                .fold(&x[i] * &x[i] + f * &x[i] + &f2, |acc, k| acc * (&f2 + &x[i] * &x[k]));
            let den = f * &x[i] * &x[j] * delta_of(x, i);
            g[(i, j)] = num / den;
        }
    }
    g
}

/// Expressions of the 6-dimensional table as functions of `(x1, ..., x5)`.
pub mod table6 {
    use super::{delta_of, esym, without};
    use crate::field::FieldElement;

    type X<'a> = &'a [FieldElement];

    /// `σ_ij ∘ f`: evaluates `f` with `x_i` and `x_j` exchanged (1-based).
    pub fn sigma<F>(f: F, i: usize, j: usize) -> impl Fn(X) -> FieldElement
    where
        F: Fn(X) -> FieldElement,
    {
        move |x: X| {
            let mut y = x.to_vec();
            y.swap(i - 1, j - 1);
            f(&y)
        }
    }

    /// `Δ_k(X∖{x_m})`, labels kept from the full list (1-based).
    pub fn delta_without(x: X, k: usize, m: usize) -> FieldElement {
        let ctx = x[0].context();
        (1..=5)
            .filter(|&j| j != k && j != m)
            .fold(FieldElement::one(ctx), |acc, j| acc * (&x[j - 1] - &x[k - 1]))
    }

    /// `q_a = x1 x_a + x_b x_c`, `a ∈ {2,3,4}`.
    pub fn q(x: X, a: usize) -> FieldElement {
        let (b, c) = match a {
            2 => (3, 4),
            3 => (2, 4),
            4 => (2, 3),
            _ => panic!("q_a needs a in 2..=4"),
        };
        &x[0] * &x[a - 1] + &x[b - 1] * &x[c - 1]
    }

    /// `p_i = e5 - x_i^3 x5^2`.
    pub fn p(x: X, i: usize) -> FieldElement {
        esym(x, 5) - x[i - 1].pow(3) * x[4].pow(2)
    }

    pub fn r(x: X) -> FieldElement {
        let den = &x[0] * (&x[1] - &x[0]) * delta_without(x, 3, 2);
        &x[2] / &den
    }

    pub fn v(x: X) -> FieldElement {
        let den = &x[0] * &x[4] * (&x[1] - &x[0]) * delta_without(x, 5, 2);
        p(x, 2) / den
    }

    pub fn u(x: X) -> FieldElement {
        let (x1, x2, x3, x4, x5) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
        let num = x1 * x2 * (x3 + x4) * (x3 * x4 - x1 * x5) + x3 * x4 * (x2 - x1) * (x1 * x1 + x2 * x5);
        num / ((x2 - x1) * delta_without(x, 5, 2))
    }

    pub fn w(x: X) -> FieldElement {
        let (x1, x2, x3, x4, x5) = (&x[0], &x[1], &x[2], &x[3], &x[4]);
        let first = x1 * x2 * x3 * x4 * (x1 * x3 + x5 * (x2 + x4));
        let second = x5.pow(3) * (x1 * x3 * (x2 + x4) + x5 * x2 * x4);
        p(x, 1) * (first - second)
    }

    /// `z`, with `e_i` the elementary symmetric polynomials of `x2, x3, x4`.
    pub fn z(x: X) -> FieldElement {
        let (x1, x5) = (&x[0], &x[4]);
        let mid = &x[1..4];
        let (e1, e2, e3) = (esym(mid, 1), esym(mid, 2), esym(mid, 3));
        let t1 = (&e1 * &e3 - x1 * x1 * &e2) * (x1 * &e1 * &e3 - &e2 * x5.pow(3)) * x1 * x5;
        let inner = x1 * x1 * (&e1 - x1) * (&e3 * (x1 - x5) - &e1 * x5.pow(3))
            + (x1 * &e2 - &e3) * (x1 * &e2 + (x1 - x5) * x5 * x5) * x5;
        t1 + &e3 * (x1 - x5) * inner
    }

    /// Diagonal entry `g_ii`, `i ∈ 1..=4`.
    pub fn g_diag(x: X, i: usize) -> FieldElement {
        let rest = without(x, i - 1);
        (esym(&rest, 4) * esym(&rest, 1) - &x[i - 1] * &x[4] * esym(&rest, 3)) / delta_of(x, i - 1)
    }
}

fn rep6_g2(ctx: &Context, x: &[FieldElement]) -> Matrix {
    use table6::*;
    let xs = |i: usize| &x[i - 1];
    let d = |i: usize| delta_of(x, i - 1);
    let mut g = Matrix::zeros(ctx, 6, 6);
    let set = |g: &mut Matrix, i: usize, j: usize, v: FieldElement| g[(i - 1, j - 1)] = v;

    // G: upper-left 4x4
    for i in 1..=4 {
        set(&mut g, i, i, g_diag(x, i));
    }
    for a in 2..=4 {
        let (b, c) = match a {
            2 => (3, 4),
            3 => (2, 4),
            _ => (2, 3),
        };
        set(&mut g, 1, a, p(x, a) * q(x, b) * q(x, c) / (xs(1) * xs(1) * d(a)));
        set(&mut g, a, 1, p(x, 1) / (xs(a) * xs(a) * d(1)));
        for b in (2..=4).filter(|&b| b != a) {
            set(&mut g, a, b, q(x, a) * p(x, b) / (xs(a) * xs(a) * d(b)));
        }
    }

    // G31
    set(&mut g, 5, 1, d(1).inv().unwrap());
    set(&mut g, 6, 2, d(2).inv().unwrap());

    // G32
    set(&mut g, 5, 3, q(x, 4) * r(x));
    set(&mut g, 5, 4, q(x, 3) * sigma(r, 3, 4)(x));
    set(&mut g, 6, 3, sigma(r, 1, 2)(x));
    set(&mut g, 6, 4, sigma(sigma(r, 3, 4), 1, 2)(x));

    // G33
    set(&mut g, 5, 5, u(x));
    set(&mut g, 5, 6, q(x, 3) * q(x, 4) * v(x));
    set(&mut g, 6, 5, sigma(v, 1, 2)(x));
    set(&mut g, 6, 6, sigma(u, 1, 2)(x));

    // G23
    let pre = (xs(5) * d(5)).inv().unwrap();
    let x3sq = xs(3) * xs(3);
    let x4sq = xs(4) * xs(4);
    set(&mut g, 3, 5, w(x) / &x3sq * &pre);
    set(&mut g, 3, 6, q(x, 3) * sigma(w, 1, 2)(x) / &x3sq * &pre);
    set(&mut g, 4, 5, sigma(w, 3, 4)(x) / &x4sq * &pre);
    set(&mut g, 4, 6, q(x, 4) * sigma(sigma(w, 3, 4), 1, 2)(x) / &x4sq * &pre);

    // G13
    let pre = d(5).inv().unwrap();
    set(&mut g, 1, 5, z(x) / xs(1) * &pre);
    set(
        &mut g,
        1,
        6,
        q(x, 3) * q(x, 4) * sigma(sigma(w, 2, 3), 1, 2)(x) / (xs(1) * xs(1) * xs(5)) * &pre,
    );
    set(&mut g, 2, 5, sigma(w, 2, 3)(x) / (xs(2) * xs(2) * xs(5)) * &pre);
    set(&mut g, 2, 6, sigma(z, 1, 2)(x) / xs(2) * &pre);
    g
}

/// Named auxiliary quantities of a construction, for reports.
#[derive(Clone, Debug, PartialEq)]
pub struct HelperValues {
    pub values: BTreeMap<String, FieldElement>,
}

impl HelperValues {
    pub fn to_json(&self) -> Value {
        Value::Object(self.values.iter().map(|(k, v)| (k.clone(), v.to_json())).collect())
    }
}

pub fn helper_values(spec: &RepSpec) -> Result<HelperValues> {
    spec.validate()?;
    let mut x = spec.params.values().to_vec();
    if let Some(i) = spec.variant {
        x.swap(i - 1, 4);
    }
    let mut values = BTreeMap::new();
    if spec.dim >= 2 {
        for i in 0..x.len() {
            values.insert(format!("Delta{}", i + 1), delta_of(&x, i));
        }
    }
    match spec.dim {
        4 => {
            let (alpha, beta, gamma) = rep4_helpers(&x, spec.roots.h.as_ref().unwrap());
            for i in 0..4 {
                values.insert(format!("alpha{}", i + 1), alpha[i].clone());
                values.insert(format!("beta{}", i + 1), beta[i].clone());
            }
            for a in 1..4 {
                values.insert(format!("gamma{}", a + 1), gamma[a].clone());
            }
        }
        6 => {
            use table6::*;
            for a in 2..=4 {
                values.insert(format!("q{a}"), q(&x, a));
            }
            for i in 1..=5 {
                values.insert(format!("p{i}"), p(&x, i));
            }
            values.insert("r".into(), r(&x));
            values.insert("u".into(), u(&x));
            values.insert("v".into(), v(&x));
            values.insert("w".into(), w(&x));
            values.insert("z".into(), z(&x));
        }
        _ => {}
    }
    Ok(HelperValues { values })
}

/// `σ_ij` applied to a representation: exchange `x_i, x_j` in its parameters and rebuild.
pub fn transpose_parameters(rep: &Representation, i: usize, j: usize) -> Result<Representation> {
    if i == j {
        return Err(Error::BadSpec("transposition needs distinct indices".into()));
    }
    let mut spec = rep.spec.clone();
    spec.params = spec.params.swapped(i, j)?;
    build_rep(&spec)
}

/// A representation found by [`enumerate_irreps`], with the 1-based subset of `X` it lives on.
#[derive(Clone, Debug)]
pub struct EnumeratedRep {
    pub subset: Vec<usize>,
    pub rep: Representation,
}

/// Representations whose roots are not in the working field.
#[derive(Clone, Debug, PartialEq)]
pub struct Deferred {
    pub subset: Vec<usize>,
    pub dim: usize,
    /// How many root choices could not be realized.
    pub missing: usize,
    /// Polynomial whose roots must be adjoined.
    pub required_modulus: String,
    pub note: String,
}

impl Deferred {
    pub fn to_json(&self) -> Value {
        json!({
            "subset": self.subset,
            "dim": self.dim,
            "missing": self.missing,
            "required_modulus": self.required_modulus,
            "note": self.note,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub reps: Vec<EnumeratedRep>,
    pub deferred: Vec<Deferred>,
}

/// Nonempty subsets of `1..=n` in lexicographic order of their sorted index lists.
pub fn lex_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect())
        .collect();
    out.sort();
    out
}

/// Square roots of `e4` / fifth roots of `e5` available in the field.
pub fn available_roots(c: &FieldElement, k: u32, hints: &[FieldElement]) -> Vec<FieldElement> {
    roots_of_binomial(c, k, hints)
}

/// `f0·ζ5^k` for `k = 0..5`, when the context contains a primitive fifth root of unity as a power of `θ`.
pub fn fifth_roots_from_rational(ctx: &Context, f0: &Rational) -> Option<Vec<FieldElement>> {
    let order = crate::field::root_of_unity_order(ctx)?;
    if order % 5 != 0 {
        return None;
    }
    let zeta = FieldElement::generator(ctx).pow((order / 5) as u32);
    let base = FieldElement::from_rational(ctx, f0.clone());
    Some((0..5).map(|k| &base * &zeta.pow(k)).collect())
}

/// Every representation of dimension 1 to 6 on every nonempty subset of `X`.
pub fn enumerate_irreps(x: &ParameterSet, hints: &[FieldElement]) -> Result<Enumeration> {
    let ctx = x.context().clone();
    let mut out = Enumeration::default();
    for subset in lex_subsets(x.len()) {
        let sub = x.subset(&subset)?;
        match subset.len() {
            d @ 1..=3 => {
                let rep = build_rep(&RepSpec::new(d, sub))?;
                out.reps.push(EnumeratedRep { subset, rep });
            }
            4 => {
                let e4 = esym(sub.values(), 4);
                let roots = available_roots(&e4, 2, hints);
                for h in &roots {
                    let rep = build_rep(&RepSpec::new(4, sub.clone()).with_h(h.clone()))?;
                    out.reps.push(EnumeratedRep {
                        subset: subset.clone(),
                        rep,
                    });
                }
                if roots.len() < 2 {
                    out.deferred.push(Deferred {
                        subset: subset.clone(),
                        dim: 4,
                        missing: 2 - roots.len(),
                        required_modulus: binomial_string(&e4, 2),
                        note: format!("square roots of e4 = {e4} are not in the field"),
                    });
                }
            }
            5 => {
                let e5 = esym(sub.values(), 5);
                let roots = available_roots(&e5, 5, hints);
                for f in &roots {
                    let rep = build_rep(&RepSpec::new(5, sub.clone()).with_f(f.clone()))?;
                    out.reps.push(EnumeratedRep {
                        subset: subset.clone(),
                        rep,
                    });
                }
                if roots.len() < 5 {
                    let rational_root = e5.as_rational().and_then(|r| rational_kth_root(r, 5));
                    let (required_modulus, note) = match rational_root {
                        Some(f0) => (
                            "t^4 + t^3 + t^2 + t + 1".to_string(),
                            format!("fifth roots f = {f0}*zeta5^k need a primitive fifth root of unity"),
                        ),
                        None => (
                            binomial_string(&e5, 5),
                            format!("fifth roots of e5 = {e5} are not in the field"),
                        ),
                    };
                    out.deferred.push(Deferred {
                        subset: subset.clone(),
                        dim: 5,
                        missing: 5 - roots.len(),
                        required_modulus,
                        note,
                    });
                }
            }
            _ => unreachable!("|X| <= 5"),
        }
    }
    if x.len() == 5 {
        for i in 1..=5 {
            let rep = build_rep(&RepSpec::new(6, x.clone()).with_variant(i))?;
            out.reps.push(EnumeratedRep {
                subset: (1..=5).collect(),
                rep,
            });
        }
    }
    let _ = ctx;
    Ok(out)
}

fn binomial_string(c: &FieldElement, k: usize) -> String {
    match c.as_rational() {
        Some(r) => {
            let mut coeffs = vec![Rational::zero(); k + 1];
            coeffs[0] = -r;
            coeffs[k] = Rational::one();
            poly_string(&coeffs, "t")
        }
        None => format!("t^{k} - ({})", c.encode()),
    }
}

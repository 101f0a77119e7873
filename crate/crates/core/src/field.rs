//! Exact arithmetic over `Q` and over one simple algebraic extension `Q[t]/(m(t))`.
//!
//! A [`FieldContext`] owns the modulus; every [`FieldElement`] carries a shared
//! handle to its context and a coefficient vector of exactly `degree` rationals
//! in ascending powers of the adjoined root `θ`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Rational {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Rational> {
        if denom.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(numer, denom)))
        }
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, k: i32) -> Rational {
        Rational(num_traits::Pow::pow(&self.0, k))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::from_bigints(n, d).ok_or_else(bad)
    }
}

macro_rules! rational_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(self.0.$m(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
// Division panics on a zero divisor; use `Rational::inv` for the checked path.
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Exact `k`-th root of a rational, if one exists.
///
/// Even roots return the non-negative branch; callers enumerate signs.
pub fn rational_kth_root(a: &Rational, k: u32) -> Option<Rational> {
    assert!(k >= 1, "root index must be positive");
    if a.is_zero() {
        return Some(Rational::zero());
    }
    if a.is_negative() && k % 2 == 0 {
        return None;
    }
    let root_of = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(k);
        if num_traits::Pow::pow(&r, k) == *n {
            Some(r)
        } else {
            None
        }
    };
    let num = root_of(&a.numer().abs())?;
    let den = root_of(a.denom())?;
    let r = Rational::from_bigints(num, den)?;
    Some(if a.is_negative() { -r } else { r })
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, used only for the modulus.
// ---------------------------------------------------------------------------

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn qpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("divisor is trimmed");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                r[shift + i] = &r[shift + i] - &(&c * bi);
            }
        }
        q[shift] = c;
        // leading term cancels exactly
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn qpoly_monic_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = qpoly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lc) = x.last().cloned() {
        let inv = lc.inv().unwrap();
        for c in x.iter_mut() {
            *c = &*c * &inv;
        }
    }
    x
}

/// Exact arithmetic context: `Q` (modulus `t`) or `Q[t]/(m(t))`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldContext {
    modulus: Vec<Rational>,
    degree: usize,
    // t^(degree + k) mod m for k in 0..degree-1, used by multiplication.
    reductions: Vec<Vec<Rational>>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldContext({})", self.modulus_string())
    }
}

pub type Context = Arc<FieldContext>;

impl FieldContext {
    /// Builds a context from a monic, squarefree modulus given in ascending
    /// coefficient order.
    pub fn new(modulus: Vec<Rational>) -> Result<Context> {
        let mut m = modulus;
        trim(&mut m);
        if m.len() < 2 {
            return Err(Error::BadModulus("modulus must have degree at least 1".into()));
        }
        if !m.last().unwrap().is_one() {
            return Err(Error::NonMonic);
        }
        let derivative: Vec<Rational> = m
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_integer(i as i64))
            .collect();
        if qpoly_monic_gcd(&m, &derivative).len() > 1 {
            return Err(Error::NotSquarefree);
        }
        let degree = m.len() - 1;
        let mut reductions = Vec::with_capacity(degree.saturating_sub(1));
        // t^degree = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
        let mut cur: Vec<Rational> = m[..degree].iter().map(|c| -c).collect();
        for _ in 0..degree.saturating_sub(1) {
            reductions.push(cur.clone());
            // multiply by t and reduce
            let top = cur[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, slot) in next.iter_mut().enumerate() {
                    *slot = &*slot - &(&top * &m[i]);
                }
            }
            cur = next;
        }
        Ok(Arc::new(FieldContext {
            modulus: m,
            degree,
            reductions,
        }))
    }

    /// The base field `Q`, represented with modulus `t`.
    pub fn rationals() -> Context {
        FieldContext::new(vec![Rational::zero(), Rational::one()]).unwrap()
    }

    /// `Q(i)` with modulus `t^2 + 1`.
    pub fn gaussian() -> Context {
        FieldContext::new(vec![Rational::one(), Rational::zero(), Rational::one()]).unwrap()
    }

    /// `Q(ζ5)` with modulus `t^4 + t^3 + t^2 + t + 1`.
    pub fn zeta5() -> Context {
        FieldContext::cyclotomic(5)
    }

    /// `Q(sqrt(d))` with modulus `t^2 - d`.
    pub fn quadratic(d: &Rational) -> Result<Context> {
        FieldContext::new(vec![-d, Rational::zero(), Rational::one()])
    }

    /// `Q(ζn)` with the `n`-th cyclotomic polynomial as modulus.
    pub fn cyclotomic(n: usize) -> Context {
        FieldContext::new(cyclotomic_polynomial(n)).expect("cyclotomic polynomials are squarefree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn is_rational_field(&self) -> bool {
        self.degree == 1
    }

    pub fn modulus_string(&self) -> String {
        poly_string(&self.modulus, "t")
    }
}

/// The `n`-th cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_polynomial(n: usize) -> Vec<Rational> {
    assert!(n >= 1);
    // t^n - 1 divided by all Φ_d for proper divisors d
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = -Rational::one();
    p[n] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = qpoly_divrem(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// Human-readable polynomial, highest degree first.
pub fn poly_string(coeffs: &[Rational], var: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let body = if i == 0 {
            a.to_string()
        } else if a.is_one() {
            mono
        } else {
            format!("{a}*{mono}")
        };
        if parts.is_empty() {
            parts.push(if neg { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if neg { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// Exact element of a [`FieldContext`].
#[derive(Clone)]
pub struct FieldElement {
    ctx: Context,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn zero(ctx: &Context) -> FieldElement {
        FieldElement {
            ctx: ctx.clone(),
            coeffs: vec![Rational::zero(); ctx.degree],
        }
    }

    pub fn one(ctx: &Context) -> FieldElement {
        FieldElement::from_rational(ctx, Rational::one())
    }

    pub fn from_rational(ctx: &Context, r: Rational) -> FieldElement {
        let mut e = FieldElement::zero(ctx);
        e.coeffs[0] = r;
        e
    }

    pub fn from_int(ctx: &Context, n: i64) -> FieldElement {
        FieldElement::from_rational(ctx, Rational::from_integer(n))
    }

    /// The adjoined root `θ` (for the base field this is the element `0`).
    pub fn generator(ctx: &Context) -> FieldElement {
        FieldElement::from_coeffs(ctx, vec![Rational::zero(), Rational::one()])
    }

    /// Builds an element from any number of coefficients, reducing modulo the modulus.
    pub fn from_coeffs(ctx: &Context, coeffs: Vec<Rational>) -> FieldElement {
        let mut c = coeffs;
        trim(&mut c);
        if c.len() > ctx.degree {
            let (_, r) = qpoly_divrem(&c, &ctx.modulus);
            c = r;
        }
        c.resize(ctx.degree, Rational::zero());
        FieldElement {
            ctx: ctx.clone(),
            coeffs: c,
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn same_context(&self, other: &FieldElement) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.modulus == other.ctx.modulus
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in the base field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_eq(&self, other: &FieldElement) -> Result<bool> {
        self.check(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    fn add_unchecked(&self, other: &FieldElement) -> FieldElement {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    fn sub_unchecked(&self, other: &FieldElement) -> FieldElement {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn mul_unchecked(&self, other: &FieldElement) -> FieldElement {
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        let n = self.ctx.degree;
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        let mut out: Vec<Rational> = prod[..n].to_vec();
        for (k, c) in prod[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in out.iter_mut().zip(&self.ctx.reductions[k]) {
                if !r.is_zero() {
                    *slot = &*slot + &(c * r);
                }
            }
        }
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: out,
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against the modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(FieldElement::from_rational(&self.ctx, r.inv().unwrap()));
        }
        // Track s with s*a ≡ r (mod m).
        let mut r0 = self.ctx.modulus.clone();
        let mut r1 = self.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return Err(Error::NotInvertible);
        }
        let c = r0[0].inv().unwrap();
        let coeffs = s0.iter().map(|x| x * &c).collect();
        Ok(FieldElement::from_coeffs(&self.ctx, coeffs))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> FieldElement {
        let mut result = FieldElement::one(&self.ctx);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, k: i64) -> Result<FieldElement> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inv()?.pow((-k) as u32))
        }
    }

    /// Text encoding: `p/q` in the base field, `[c0, c1, ...]` otherwise.
    pub fn encode(&self) -> String {
        if self.ctx.degree == 1 {
            self.coeffs[0].to_string()
        } else {
            let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(", "))
        }
    }

    /// JSON encoding: a string in `Q`, an array of coefficient strings otherwise.
    pub fn to_json(&self) -> Value {
        if self.ctx.degree == 1 {
            Value::String(self.coeffs[0].to_string())
        } else {
            Value::Array(self.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
        }
    }

    pub fn from_json(ctx: &Context, v: &Value) -> Result<FieldElement> {
        match v {
            Value::String(s) => FieldElement::parse(ctx, s),
            Value::Number(n) => FieldElement::parse(ctx, &n.to_string()),
            Value::Array(items) => {
                let coeffs = items
                    .iter()
                    .map(|item| match item {
                        Value::String(s) => s.parse::<Rational>(),
                        Value::Number(n) => n.to_string().parse::<Rational>(),
                        other => Err(Error::Parse(format!("bad coefficient {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(FieldElement::from_coeffs(ctx, coeffs))
            }
            other => Err(Error::Parse(format!("bad field element {other}"))),
        }
    }

    /// Parses the text encoding (`"3/4"` or `"[1, -1/2]"`).
    pub fn parse(ctx: &Context, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let coeffs = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(str::parse::<Rational>)
                    .collect::<Result<Vec<_>>>()?
            };
            Ok(FieldElement::from_coeffs(ctx, coeffs))
        } else {
            Ok(FieldElement::from_rational(ctx, s.parse()?))
        }
    }

    /// Complex value under the embedding `θ ↦ theta`, for floating-point cross-checks.
    pub fn to_complex(&self, theta: (f64, f64)) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = (
                acc.0 * theta.0 - acc.1 * theta.1 + c.to_f64(),
                acc.0 * theta.1 + acc.1 * theta.0,
            );
        }
        acc
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &FieldElement) -> bool {
        self.same_context(other) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

// Operator forms panic on a context mismatch; the `try_*` methods report it.
macro_rules! element_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                assert!(self.same_context(rhs), "field context mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

element_binop!(Add, add, add_unchecked);
element_binop!(Sub, sub, sub_unchecked);
element_binop!(Mul, mul, mul_unchecked);

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero.
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.try_div(rhs).expect("division by zero")
    }
}

impl Div<FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl Div<&FieldElement> for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        &self / rhs
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Binary/unary operations selectable at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Neg,
    Eq,
    IsZero,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Element(FieldElement),
    Bool(bool),
}

/// Runtime-dispatched arithmetic; unary operations ignore `b`.
pub fn field_arith(op: FieldOp, a: &FieldElement, b: &FieldElement) -> Result<FieldValue> {
    Ok(match op {
        FieldOp::Add => FieldValue::Element(a.try_add(b)?),
        FieldOp::Sub => FieldValue::Element(a.try_sub(b)?),
        FieldOp::Mul => FieldValue::Element(a.try_mul(b)?),
        FieldOp::Neg => FieldValue::Element(-a),
        FieldOp::Eq => FieldValue::Bool(a.try_eq(b)?),
        FieldOp::IsZero => FieldValue::Bool(a.is_zero()),
    })
}

/// Roots of `t^k = c` that can be written as `r·u` with `r` rational and `u`
/// drawn from the powers of `θ` times products of the supplied `hints`.
///
/// When `θ` is a root of unity every power is tried; otherwise powers up to
/// the context degree. Roots are returned in discovery order (positive
/// rational multiple before negative), without duplicates, at most `k` of them.
pub fn roots_of_binomial(c: &FieldElement, k: u32, hints: &[FieldElement]) -> Vec<FieldElement> {
    let ctx = c.context();
    let mut found: Vec<FieldElement> = Vec::new();
    if c.is_zero() {
        return vec![FieldElement::zero(ctx)];
    }
    let theta_span = root_of_unity_order(ctx).unwrap_or(ctx.degree + 1);
    let hint_products = subset_products(ctx, hints);
    let theta = FieldElement::generator(ctx);
    let mut theta_pow = FieldElement::one(ctx);
    for _ in 0..theta_span {
        for h in &hint_products {
            let unit = &theta_pow * h;
            if unit.is_zero() {
                continue;
            }
            let unit_k = unit.pow(k);
            let Ok(ratio) = c.try_div(&unit_k) else {
                continue;
            };
            let Some(q) = ratio.as_rational() else {
                continue;
            };
            if let Some(r) = rational_kth_root(q, k) {
                let mut candidates = vec![unit.scale(&r)];
                if k % 2 == 0 {
                    candidates.push(unit.scale(&-r));
                }
                for cand in candidates {
                    if !found.contains(&cand) && cand.pow(k) == *c {
                        found.push(cand);
                    }
                }
                if found.len() as u32 >= k {
                    return found;
                }
            }
        }
        theta_pow = &theta_pow * &theta;
    }
    found
}

fn subset_products(ctx: &Context, hints: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::one(ctx)];
    for h in hints {
        let extra: Vec<FieldElement> = out.iter().map(|p| p * h).collect();
        out.extend(extra);
    }
    out
}

fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Multiplicative order of `θ` when it is a root of unity.
pub fn root_of_unity_order(ctx: &Context) -> Option<usize> {
    let deg = ctx.degree;
    let theta = FieldElement::generator(ctx);
    if deg == 1 {
        // θ = 0 in the base field
        return None;
    }
    // φ(n) >= sqrt(n/2), so n <= 2·deg² bounds every candidate order.
    (1..=2 * deg * deg + 2)
        .filter(|&n| euler_phi(n) <= deg)
        .find(|&n| theta.pow(n as u32).is_one())
}

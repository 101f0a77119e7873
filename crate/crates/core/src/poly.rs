//! Univariate polynomials with coefficients in a [`FieldContext`](crate::field::FieldContext).

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Context, FieldElement};

/// Dense polynomial, ascending coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Context,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(ctx: &Context, coeffs: Vec<FieldElement>) -> Polynomial {
        let mut p = Polynomial {
            ctx: ctx.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(ctx: &Context) -> Polynomial {
        Polynomial::new(ctx, Vec::new())
    }

    pub fn one(ctx: &Context) -> Polynomial {
        Polynomial::constant(FieldElement::one(ctx))
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        let ctx = c.context().clone();
        Polynomial::new(&ctx, vec![c])
    }

    /// `λ`
    pub fn x(ctx: &Context) -> Polynomial {
        Polynomial::new(ctx, vec![FieldElement::zero(ctx), FieldElement::one(ctx)])
    }

    /// `λ - root`
    pub fn linear(root: &FieldElement) -> Polynomial {
        let ctx = root.context().clone();
        Polynomial::new(&ctx, vec![-root, FieldElement::one(&ctx)])
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(ctx: &Context, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(ctx, coeffs.iter().map(|&c| FieldElement::from_int(ctx, c)).collect())
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots<'a>(ctx: &Context, roots: impl IntoIterator<Item = &'a FieldElement>) -> Polynomial {
        roots
            .into_iter()
            .fold(Polynomial::one(ctx), |acc, r| &acc * &Polynomial::linear(r))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.ctx))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = lc.inv()?;
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(&self.ctx, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(&self.ctx), |acc, c| &(&acc * at) + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&(i as i64).into()))
            .collect();
        Polynomial::new(&self.ctx, coeffs)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::one(&self.ctx), |acc, _| &acc * self)
    }

    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let db = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = divisor.leading().unwrap().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Polynomial::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![FieldElement::zero(&self.ctx); r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = r.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] = &r[shift + i] - &(&c * d);
                }
            }
            q[shift] = c;
            r.pop();
        }
        Ok((Polynomial::new(&self.ctx, q), Polynomial::new(&self.ctx, r)))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Monic least common multiple of two nonzero polynomials.
    pub fn lcm(&self, other: &Polynomial) -> Result<Polynomial> {
        let g = self.gcd(other)?;
        let (q, _) = (self * other).divrem(&g)?;
        q.monic()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(FieldElement::to_json).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Polynomial::new(&self.ctx, coeffs)
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Polynomial::new(&self.ctx, coeffs)
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut out = vec![FieldElement::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(&self.ctx, out)
    }
}

/// Resultant `Res(p, q)` by the Euclidean remainder sequence.
///
/// Uses the convention `Res(p, q) = lc(p)^deg q · ∏_{p(α)=0} q(α)`, so
/// `Res(t - a, q) = q(a)`.
pub fn poly_resultant(p: &Polynomial, q: &Polynomial) -> Result<FieldElement> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.ctx.as_ref().eq(q.ctx.as_ref()) {
        return Err(Error::ContextMismatch);
    }
    let ctx = p.ctx.clone();
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = FieldElement::one(&ctx);
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if n == 0 {
            return Ok(&acc * &b.coeffs[0].pow(m as u32));
        }
        if m == 0 {
            return Ok(&acc * &a.coeffs[0].pow(n as u32));
        }
        let (_, r) = a.divrem(&b)?;
        let Some(dr) = r.degree() else {
            return Ok(FieldElement::zero(&ctx));
        };
        // Res(a,b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        let mut factor = b.leading().unwrap().pow((m - dr) as u32);
        if (m * n) % 2 == 1 {
            factor = -factor;
        }
        acc = &acc * &factor;
        a = b;
        b = r;
    }
}

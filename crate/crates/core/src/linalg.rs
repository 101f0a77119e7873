//! Dense exact linear algebra over a field context.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Context, FieldElement, Rational};
use crate::poly::Polynomial;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: Context,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(ctx: &Context, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries: vec![FieldElement::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: &Context, n: usize) -> Matrix {
        Matrix::scalar(&FieldElement::one(ctx), n)
    }

    pub fn scalar(c: &FieldElement, n: usize) -> Matrix {
        let mut m = Matrix::zeros(c.context(), n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(ctx: &Context, values: &[FieldElement]) -> Matrix {
        let mut m = Matrix::zeros(ctx, values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_rows(ctx: &Context, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries: Vec<FieldElement> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.context().as_ref() != ctx.as_ref()) {
            return Err(Error::ContextMismatch);
        }
        Ok(Matrix {
            ctx: ctx.clone(),
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Integer entries, convenient for tests and fixtures.
    pub fn from_ints(ctx: &Context, rows: &[&[i64]]) -> Matrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| FieldElement::from_int(ctx, v)).collect())
            .collect();
        Matrix::from_rows(ctx, rows).expect("rectangular integer matrix")
    }

    pub fn from_column(ctx: &Context, v: &[FieldElement]) -> Matrix {
        Matrix {
            ctx: ctx.clone(),
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(ctx: &Context, rows: usize, cols: &[Vec<FieldElement>]) -> Matrix {
        let mut m = Matrix::zeros(ctx, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    fn check_ctx(&self, other: &Matrix) -> Result<()> {
        if self.ctx.as_ref() == other.ctx.as_ref() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ctx(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix {
            entries,
            ..self.clone_shape()
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ctx(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: Vec::new(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        Matrix {
            entries,
            ..self.clone_shape()
        }
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|a| -a).collect();
        Matrix {
            entries,
            ..self.clone_shape()
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows.min(self.cols)).fold(FieldElement::zero(&self.ctx), |acc, i| &acc + &self[(i, i)])
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut result = Matrix::identity(&self.ctx, self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The scalar `c` when the matrix equals `c·Id`.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if (i == j && *e != c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(FieldElement::one(&self.ctx));
        }
        let mut a: Vec<Vec<FieldElement>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = FieldElement::one(&self.ctx);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(FieldElement::zero(&self.ctx));
                };
                a.swap(k, p);
                sign_flip = !sign_flip;
            }
            let prev_inv = prev.inv()?;
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &v * &prev_inv;
                }
                a[i][k] = FieldElement::zero(&self.ctx);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut a: Vec<Vec<FieldElement>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<FieldElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            FieldElement::one(&self.ctx)
                        } else {
                            FieldElement::zero(&self.ctx)
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
                return Ok(None);
            };
            a.swap(col, p);
            inv.swap(col, p);
            let pinv = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = &a[col][j] * &pinv;
                inv[col][j] = &inv[col][j] * &pinv;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&f * &a[col][j]);
                    inv[i][j] = &inv[i][j] - &(&f * &inv[col][j]);
                }
            }
        }
        Ok(Some(Matrix::from_rows(&self.ctx, inv)?))
    }

    /// Determinant together with the inverse when it exists.
    pub fn det_and_inverse(&self) -> Result<(FieldElement, Option<Matrix>)> {
        let d = self.det()?;
        let inv = if d.is_zero() { None } else { self.inverse()? };
        Ok((d, inv))
    }

    /// Characteristic polynomial `det(λ - M)` by the Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut coeffs = vec![FieldElement::zero(&self.ctx); n + 1];
        coeffs[n] = FieldElement::one(&self.ctx);
        let mut m = Matrix::zeros(&self.ctx, n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            m = &(self * &m) + &Matrix::scalar(&coeffs[n - k + 1], n);
            let am = self * &m;
            coeffs[n - k] = am.trace().scale(&Rational::new(-1, k as i64));
        }
        Ok(Polynomial::new(&self.ctx, coeffs))
    }

    /// Minimal polynomial as the lcm of the Krylov annihilators of the standard basis vectors.
    pub fn minpoly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut result = Polynomial::one(&self.ctx);
        for j in 0..n {
            let mut e = vec![FieldElement::zero(&self.ctx); n];
            e[j] = FieldElement::one(&self.ctx);
            let ann = self.krylov_annihilator(e)?;
            result = result.lcm(&ann)?;
        }
        Ok(result)
    }

    fn krylov_annihilator(&self, start: Vec<FieldElement>) -> Result<Polynomial> {
        let n = self.rows;
        let mut krylov: Vec<Vec<FieldElement>> = Vec::new();
        let mut v = start;
        loop {
            if !krylov.is_empty() {
                let basis = Matrix::from_columns(&self.ctx, n, &krylov);
                if let Some(c) = basis.solve(&v)? {
                    // v = Σ c_i A^i e  ⇒  λ^m - Σ c_i λ^i annihilates e
                    let mut coeffs: Vec<FieldElement> = c.iter().map(|x| -x).collect();
                    coeffs.push(FieldElement::one(&self.ctx));
                    return Ok(Polynomial::new(&self.ctx, coeffs));
                }
            } else if v.iter().all(FieldElement::is_zero) {
                return Ok(Polynomial::one(&self.ctx));
            }
            let next = self.mul_vec(&v);
            krylov.push(v);
            v = next;
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::zero(&self.ctx), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        let mut aug = Matrix::zeros(&self.ctx, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref()?;
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElement::zero(&self.ctx); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Reduced row echelon form and pivot columns; pivots are the first nonzero entries.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let pinv = a[(row, col)].inv()?;
            for j in col..a.cols {
                a[(row, j)] = &a[(row, j)] * &pinv;
            }
            for i in 0..a.rows {
                if i == row || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let v = &a[(i, j)] - &(&f * &a[(row, j)]);
                    a[(i, j)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((a, pivots))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.entries.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<FieldElement>>> {
        let (r, pivots) = self.rref()?;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElement::zero(&self.ctx); self.cols];
            v[free] = FieldElement::one(&self.ctx);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Submatrix on the given row and column index lists (0-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(&self.ctx, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(&self.ctx, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Matrix {
        let n = self.rows;
        p.coeffs().iter().rev().fold(Matrix::zeros(&self.ctx, n, n), |acc, c| {
            &(&acc * self) + &Matrix::scalar(c, n)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(FieldElement::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(ctx: &Context, v: &Value) -> Result<Matrix> {
        let bad = || Error::Parse("matrix must be {rows, cols, entries}".into());
        let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|e| FieldElement::from_json(ctx, e))
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch("entry count does not match shape".into()));
        }
        Ok(Matrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries,
        })
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.entries[i * self.cols + j]
    }
}

// Operators panic on shape or context mismatch; use the `try_*` forms to get errors.
impl std::ops::Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl std::ops::Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl std::ops::Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(FieldElement::encode).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of a matrix-algebra span closure.
#[derive(Clone, Debug)]
pub struct Closure {
    pub dimension: usize,
    /// Products of generators in breadth-first order; linearly independent.
    pub basis: Vec<Matrix>,
    /// Span dimension after each breadth-first round (round 0 = identity and generators).
    pub growth: Vec<usize>,
}

/// Incremental echelon basis of flattened matrices.
struct Echelon {
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    /// Reduces `v` against the basis; inserts and returns true if independent.
    fn insert(&mut self, mut v: Vec<FieldElement>) -> Result<bool> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (slot, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *slot = &*slot - &(&f * r);
                }
            }
        }
        let Some(p) = v.iter().position(|e| !e.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inv()?;
        let v = v.iter().map(|e| e * &inv).collect();
        self.rows.push((p, v));
        Ok(true)
    }
}

fn check_generators(generators: &[Matrix]) -> Result<(Context, usize)> {
    let first = generators
        .first()
        .ok_or_else(|| Error::ShapeMismatch("no generators".into()))?;
    let d = first.rows;
    for g in generators {
        if !g.is_square() || g.rows != d {
            return Err(Error::ShapeMismatch("generators must be square of one size".into()));
        }
        if g.ctx.as_ref() != first.ctx.as_ref() {
            return Err(Error::ContextMismatch);
        }
    }
    Ok((first.ctx.clone(), d))
}

/// Dimension and basis of the unital algebra generated by `generators`.
///
/// Breadth-first by word length with generators in the given order; the
/// algebra is the full matrix algebra iff the dimension is `d²`.
pub fn algebra_closure(generators: &[Matrix]) -> Result<Closure> {
    let (ctx, d) = check_generators(generators)?;
    let full = d * d;
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    for m in std::iter::once(Matrix::identity(&ctx, d)).chain(generators.iter().cloned()) {
        if ech.insert(m.entries.clone())? {
            basis.push(m.clone());
            frontier.push(m);
        }
    }
    let mut growth = vec![basis.len()];
    while !frontier.is_empty() && basis.len() < full {
        let mut next = Vec::new();
        'outer: for m in &frontier {
            for g in generators {
                let p = m * g;
                if ech.insert(p.entries.clone())? {
                    basis.push(p.clone());
                    next.push(p);
                    if basis.len() == full {
                        break 'outer;
                    }
                }
            }
        }
        growth.push(basis.len());
        frontier = next;
    }
    Ok(Closure {
        dimension: basis.len(),
        basis,
        growth,
    })
}

pub fn algebra_closure_dim(generators: &[Matrix]) -> Result<(usize, Vec<Matrix>)> {
    let c = algebra_closure(generators)?;
    Ok((c.dimension, c.basis))
}

/// Basis of `{M : M·A_i = B_i·M for all i}` with `A_i` of size `n` and `B_i` of size `m`
/// (so `M` is `m × n`).
pub fn intertwiners(source: &[Matrix], target: &[Matrix]) -> Result<Vec<Matrix>> {
    let (ctx, n) = check_generators(source)?;
    let (tctx, m) = check_generators(target)?;
    if ctx.as_ref() != tctx.as_ref() {
        return Err(Error::ContextMismatch);
    }
    if source.len() != target.len() {
        return Err(Error::ShapeMismatch("generator lists differ in length".into()));
    }
    // unknown M[r][c] at index r*n + c
    let unknowns = m * n;
    let mut system = Matrix::zeros(&ctx, source.len() * m * n, unknowns);
    let mut row = 0;
    for (a, b) in source.iter().zip(target) {
        for i in 0..m {
            for j in 0..n {
                // (M A)_{ij} - (B M)_{ij} = Σ_k M_{ik} A_{kj} - Σ_k B_{ik} M_{kj}
                for k in 0..n {
                    let idx = i * n + k;
                    system[(row, idx)] = &system[(row, idx)] + &a[(k, j)];
                }
                for k in 0..m {
                    let idx = k * n + j;
                    system[(row, idx)] = &system[(row, idx)] - &b[(i, k)];
                }
                row += 1;
            }
        }
    }
    Ok(system
        .kernel_basis()?
        .into_iter()
        .map(|v| Matrix {
            ctx: ctx.clone(),
            rows: m,
            cols: n,
            entries: v,
        })
        .collect())
}

/// Dimension of the commutant of `generators`.
pub fn commutant_dim(generators: &[Matrix]) -> Result<usize> {
    Ok(intertwiners(generators, generators)?.len())
}

/// Whether the column span of `basis` is invariant under every matrix in `ops`.
pub fn is_invariant(basis: &Matrix, ops: &[Matrix]) -> Result<bool> {
    let r = basis.rank()?;
    for op in ops {
        let image = op * basis;
        let mut joined = Matrix::zeros(&basis.ctx, basis.rows, basis.cols * 2);
        for i in 0..basis.rows {
            for j in 0..basis.cols {
                joined[(i, j)] = basis[(i, j)].clone();
                joined[(i, basis.cols + j)] = image[(i, j)].clone();
            }
        }
        if joined.rank()? != r {
            return Ok(false);
        }
    }
    Ok(true)
}

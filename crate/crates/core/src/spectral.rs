//! Central character, traces and spectra of `A = g1 g2` and `B = g1 g2 g1`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::poly::Polynomial;
use crate::reps::{esym, RepSpec, Representation};

/// `(A, B)` for a representation.
pub fn a_and_b(rep: &Representation) -> (Matrix, Matrix) {
    let a = &rep.g1 * &rep.g2;
    let b = &a * &rep.g1;
    (a, b)
}

/// Scalar by which `c = (g1 g2)^3 = (g1 g2 g1)^2` acts.
pub fn central_value(rep: &Representation) -> Result<FieldElement> {
    let (a, b) = a_and_b(rep);
    let a3 = a.pow(3);
    let c = a3.as_scalar().ok_or(Error::NotScalar)?;
    if b.pow(2) != a3 {
        return Err(Error::NotScalar);
    }
    Ok(c)
}

/// Closed form of the central value for a spec.
pub fn expected_central(spec: &RepSpec) -> Result<FieldElement> {
    spec.validate()?;
    let x = spec.params.values();
    Ok(match spec.dim {
        1 => x[0].pow(6),
        2 => -esym(x, 2).pow(3),
        3 => esym(x, 3).pow(2),
        4 => spec.roots.h.as_ref().unwrap().pow(3),
        5 => spec.roots.f.as_ref().unwrap().pow(6),
        6 => -(&x[spec.variant.unwrap() - 1] * &esym(x, 5)),
        _ => unreachable!("validated"),
    })
}

/// Closed forms of `(Tr A, Tr A², Tr B)`.
pub fn expected_traces(spec: &RepSpec) -> Result<(FieldElement, FieldElement, FieldElement)> {
    let c = expected_central(spec)?;
    let ctx = spec.params.context();
    let x = spec.params.values();
    let zero = || FieldElement::zero(ctx);
    Ok(match spec.dim {
        1 => {
            let x1 = &x[0];
            (x1.pow(2), x1.pow(4), x1.pow(3))
        }
        2 => {
            let e2 = esym(x, 2);
            // A has eigenvalues e2·{-ν, -ν⁻¹}: Tr A² = e2²(ν² + ν⁻²) = -e2²
            (e2.clone(), -e2.pow(2), zero())
        }
        3 => (zero(), zero(), -esym(x, 3)),
        4 => {
            let e4 = esym(x, 4);
            (c / &e4, e4, zero())
        }
        5 => {
            let f = spec.roots.f.as_ref().unwrap();
            (-f.pow(2), -f.pow(4), f.pow(3))
        }
        6 => (zero(), zero(), zero()),
        _ => unreachable!("validated"),
    })
}

/// Expanded characteristic polynomials `(χ_A, χ_B)` in `λ`.
pub fn expected_charpolys(spec: &RepSpec) -> Result<(Polynomial, Polynomial)> {
    spec.validate()?;
    let ctx = spec.params.context();
    let x = spec.params.values();
    let fe = |n: i64| FieldElement::from_int(ctx, n);
    // λ² + sλ + s² (the two primitive cube-root-of-unity multiples of s)
    let cyclo = |s: &FieldElement| Polynomial::new(ctx, vec![s * s, s.clone(), fe(1)]);
    // λ^k + a
    let binom = |k: usize, a: FieldElement| {
        let mut coeffs = vec![FieldElement::zero(ctx); k + 1];
        coeffs[0] = a;
        coeffs[k] = fe(1);
        Polynomial::new(ctx, coeffs)
    };
    Ok(match spec.dim {
        1 => (Polynomial::linear(&x[0].pow(2)), Polynomial::linear(&x[0].pow(3))),
        2 => {
            let e2 = esym(x, 2);
            (cyclo(&-&e2), binom(2, e2.pow(3)))
        }
        3 => {
            let e3 = esym(x, 3);
            let chi_b = &Polynomial::linear(&e3) * &Polynomial::linear(&-&e3).pow(2);
            (binom(3, -e3.pow(2)), chi_b)
        }
        4 => {
            let h = spec.roots.h.as_ref().unwrap();
            let chi_a = &Polynomial::linear(h).pow(2) * &cyclo(h);
            let chi_b = binom(2, -h.pow(3)).pow(2);
            (chi_a, chi_b)
        }
        5 => {
            let f = spec.roots.f.as_ref().unwrap();
            let f2 = f.pow(2);
            let f3 = f.pow(3);
            let chi_a = &Polynomial::linear(&f2) * &cyclo(&f2).pow(2);
            let chi_b = &Polynomial::linear(&f3).pow(3) * &Polynomial::linear(&-&f3).pow(2);
            (chi_a, chi_b)
        }
        6 => {
            let s = &x[spec.variant.unwrap() - 1] * &esym(x, 5);
            (binom(3, s.clone()).pow(2), binom(2, s).pow(3))
        }
        _ => unreachable!("validated"),
    })
}

/// `(∏ x_i^{m_i})^6 = C^d`.
pub fn check_det_constraint(rep: &Representation) -> Result<bool> {
    let ctx = rep.context();
    let x = rep.spec.params.values();
    let prod = x
        .iter()
        .zip(&rep.multiplicities)
        .fold(FieldElement::one(ctx), |acc, (xi, &m)| acc * xi.pow(m as u32));
    let c = central_value(rep)?;
    Ok(prod.pow(6) == c.pow(rep.dim() as u32))
}

/// One expected/actual comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Check<T> {
    pub actual: T,
    pub expected: T,
}

impl<T: PartialEq> Check<T> {
    pub fn ok(&self) -> bool {
        self.actual == self.expected
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub c_rho: FieldElement,
    pub c_expected: FieldElement,
    pub a_cubed_scalar: bool,
    pub b_squared_scalar: bool,
    pub tr_a: Check<FieldElement>,
    pub tr_a2: Check<FieldElement>,
    pub tr_b: Check<FieldElement>,
    pub charpoly_a: Check<Polynomial>,
    pub charpoly_b: Check<Polynomial>,
    pub det_constraint_ok: bool,
    pub all_ok: bool,
}

impl SpectralReport {
    /// Names of the sub-checks that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.a_cubed_scalar {
            out.push("A^3 = C Id");
        }
        if !self.b_squared_scalar {
            out.push("B^2 = C Id");
        }
        if self.c_rho != self.c_expected {
            out.push("C_rho closed form");
        }
        if !self.tr_a.ok() {
            out.push("Tr A");
        }
        if !self.tr_a2.ok() {
            out.push("Tr A^2");
        }
        if !self.tr_b.ok() {
            out.push("Tr B");
        }
        if !self.charpoly_a.ok() {
            out.push("charpoly A");
        }
        if !self.charpoly_b.ok() {
            out.push("charpoly B");
        }
        if !self.det_constraint_ok {
            out.push("determinant constraint");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let pair = |c: &Check<FieldElement>| json!({"actual": c.actual.to_json(), "expected": c.expected.to_json()});
        let ppair = |c: &Check<Polynomial>| json!({"actual": c.actual.to_json(), "expected": c.expected.to_json()});
        json!({
            "C_rho": self.c_rho.to_json(),
            "C_expected": self.c_expected.to_json(),
            "A3_scalar": self.a_cubed_scalar,
            "B2_scalar": self.b_squared_scalar,
            "trA": pair(&self.tr_a),
            "trA2": pair(&self.tr_a2),
            "trB": pair(&self.tr_b),
            "charpoly_A": ppair(&self.charpoly_a),
            "charpoly_B": ppair(&self.charpoly_b),
            "det_constraint_ok": self.det_constraint_ok,
            "failures": self.failures(),
            "all_ok": self.all_ok,
        })
    }
}

/// Runs every spectral check on a representation. Mismatches are recorded, not raised.
pub fn check_traces(rep: &Representation) -> Result<SpectralReport> {
    let (a, b) = a_and_b(rep);
    let a3 = a.pow(3);
    let b2 = b.pow(2);
    let c_expected = expected_central(&rep.spec)?;
    let a_scalar = a3.as_scalar();
    let a_cubed_scalar = a_scalar.is_some();
    let c_rho = a_scalar.unwrap_or_else(|| a3[(0, 0)].clone());
    let b_squared_scalar = b2 == a3 && a_cubed_scalar;
    let (ta, ta2, tb) = expected_traces(&rep.spec)?;
    let (chi_a, chi_b) = expected_charpolys(&rep.spec)?;
    let tr_a = Check {
        actual: a.trace(),
        expected: ta,
    };
    let tr_a2 = Check {
        actual: (&a * &a).trace(),
        expected: ta2,
    };
    let tr_b = Check {
        actual: b.trace(),
        expected: tb,
    };
    let charpoly_a = Check {
        actual: a.charpoly()?,
        expected: chi_a,
    };
    let charpoly_b = Check {
        actual: b.charpoly()?,
        expected: chi_b,
    };
    let det_constraint_ok = a_cubed_scalar && b_squared_scalar && check_det_constraint(rep)?;
    let mut report = SpectralReport {
        c_rho,
        c_expected,
        a_cubed_scalar,
        b_squared_scalar,
        tr_a,
        tr_a2,
        tr_b,
        charpoly_a,
        charpoly_b,
        det_constraint_ok,
        all_ok: false,
    };
    report.all_ok = report.failures().is_empty();
    Ok(report)
}

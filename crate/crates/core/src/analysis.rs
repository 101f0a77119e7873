//! Irreducibility predicates, the closure oracle, invariant-subspace witnesses,
//! characters, the semisimplicity criterion and the dimension census.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::braidword::{parse, BraidWord, Evaluator, Generator};
use crate::error::{Error, Result};
use crate::field::{roots_of_binomial, FieldElement};
use crate::linalg::{algebra_closure_dim, commutant_dim, intertwiners, is_invariant, Matrix};
use crate::poly::{poly_resultant, Polynomial};
use crate::reps::{enumerate_irreps, esym, lex_subsets, Deferred, ParameterSet, RepSpec, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    I2,
    I3,
    I4,
    J4,
    I5,
    J5,
    I6,
    J6,
    K6,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::I2 => "I2",
            Family::I3 => "I3",
            Family::I4 => "I4",
            Family::J4 => "J4",
            Family::I5 => "I5",
            Family::J5 => "J5",
            Family::I6 => "I6",
            Family::J6 => "J6",
            Family::K6 => "K6",
        }
    }
}

/// One degeneracy polynomial evaluated at a parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct PredicateValue {
    pub family: Family,
    /// 1-based labels into the full parameter list.
    pub indices: Vec<usize>,
    /// The subset a square/fifth-root quantifier ranges over, when it is not all of `X`.
    pub subset: Option<Vec<usize>>,
    pub value: FieldElement,
    /// `value` is a resultant standing in for "vanishes for some root".
    pub via_resultant: bool,
    pub is_zero: bool,
}

impl PredicateValue {
    fn new(family: Family, indices: Vec<usize>, value: FieldElement, via_resultant: bool) -> PredicateValue {
        PredicateValue {
            family,
            indices,
            subset: None,
            is_zero: value.is_zero(),
            value,
            via_resultant,
        }
    }

    /// E.g. `I3(1,2,3)`, `J6(1,5)`, `K6(5;1,4,2,3)`, `I4(2;1,2,3,5)`.
    pub fn name(&self) -> String {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match (self.family, &self.subset) {
            (Family::K6, _) => format!("K6({};{})", self.indices[0], list(&self.indices[1..])),
            (_, Some(s)) => format!("{}({};{})", self.family.symbol(), list(&self.indices), list(s)),
            _ => format!("{}({})", self.family.symbol(), list(&self.indices)),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name(),
            "value": self.value.to_json(),
            "via_resultant": self.via_resultant,
            "is_zero": self.is_zero,
        })
    }
}

impl fmt::Display for PredicateValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name(), self.value)
    }
}

/// How the root `h` or `f` enters a predicate.
enum Root<'a> {
    /// Quantify over all roots of `t^k - c` by a resultant.
    All,
    Given(&'a FieldElement),
}

/// Evaluates `p(t)` at a root: either directly or as `Res_t(t^k - c, p)`.
fn at_root(p: Polynomial, k: usize, c: &FieldElement, root: &Root) -> Result<(FieldElement, bool)> {
    match root {
        Root::Given(r) => Ok((p.eval(r), false)),
        Root::All => {
            let ctx = c.context();
            let mut coeffs = vec![FieldElement::zero(ctx); k + 1];
            coeffs[0] = -c;
            coeffs[k] = FieldElement::one(ctx);
            Ok((poly_resultant(&Polynomial::new(ctx, coeffs), &p)?, true))
        }
    }
}

/// The three ways of splitting four labels into two pairs, first pair containing the smallest.
fn pairings(s: [usize; 4]) -> [[usize; 4]; 3] {
    [
        [s[0], s[1], s[2], s[3]],
        [s[0], s[2], s[1], s[3]],
        [s[0], s[3], s[1], s[2]],
    ]
}

/// Predicates of one class on `values`, labelled by `labels` (both in the same order).
fn class_predicates(
    values: &[FieldElement],
    labels: &[usize],
    level: usize,
    root: Root,
) -> Result<Vec<PredicateValue>> {
    let ctx = values[0].context();
    let x = |i: usize| &values[i];
    let lab = |is: &[usize]| is.iter().map(|&i| labels[i]).collect::<Vec<_>>();
    let mut out = Vec::new();
    match level {
        2 => {
            let v = x(0) * x(0) - x(0) * x(1) + x(1) * x(1);
            out.push(PredicateValue::new(Family::I2, lab(&[0, 1]), v, false));
        }
        3 => {
            for i in 0..3 {
                let (j, k) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let v = x(i) * x(i) + x(j) * x(k);
                out.push(PredicateValue::new(Family::I3, lab(&[i, j, k]), v, false));
            }
        }
        4 => {
            let e4 = esym(values, 4);
            let t = Polynomial::x(ctx);
            for i in 0..4 {
                let p = &Polynomial::constant(x(i) * x(i)) - &t;
                let (v, res) = at_root(p, 2, &e4, &root)?;
                out.push(PredicateValue::new(Family::I4, lab(&[i]), v, res));
            }
            for [i, j, k, l] in pairings([0, 1, 2, 3]) {
                let p = &Polynomial::constant(x(i) * x(j) + x(k) * x(l)) - &t;
                let (v, res) = at_root(p, 2, &e4, &root)?;
                out.push(PredicateValue::new(Family::J4, lab(&[i, j, k, l]), v, res));
            }
        }
        5 => {
            let e5 = esym(values, 5);
            let one = FieldElement::one(ctx);
            for i in 0..5 {
                let p = Polynomial::new(ctx, vec![x(i) * x(i), x(i).clone(), one.clone()]);
                let (v, res) = at_root(p, 5, &e5, &root)?;
                out.push(PredicateValue::new(Family::I5, lab(&[i]), v, res));
            }
            for i in 0..5 {
                for j in i + 1..5 {
                    let p = Polynomial::new(ctx, vec![x(i) * x(j), FieldElement::zero(ctx), one.clone()]);
                    let (v, res) = at_root(p, 5, &e5, &root)?;
                    out.push(PredicateValue::new(Family::J5, lab(&[i, j]), v, res));
                }
            }
        }
        6 => {
            let e5 = esym(values, 5);
            for i in 0..5 {
                out.push(PredicateValue::new(Family::I6, lab(&[i]), &e5 + &x(i).pow(5), false));
            }
            for i in 0..5 {
                for j in (0..5).filter(|&j| j != i) {
                    let v = &e5 - &(x(i).pow(3) * x(j).pow(2));
                    out.push(PredicateValue::new(Family::J6, lab(&[i, j]), v, false));
                }
            }
            for i in 0..5 {
                let rest: Vec<usize> = (0..5).filter(|&k| k != i).collect();
                for [j, k, l, m] in pairings([rest[0], rest[1], rest[2], rest[3]]) {
                    let v = x(j) * x(k) + x(l) * x(m);
                    out.push(PredicateValue::new(Family::K6, lab(&[i, j, k, l, m]), v, false));
                }
            }
        }
        other => return Err(Error::BadLevel(other)),
    }
    Ok(out)
}

fn class_size(level: usize) -> Result<usize> {
    match level {
        2..=5 => Ok(level),
        6 => Ok(5),
        other => Err(Error::BadLevel(other)),
    }
}

/// All predicates of one dimension class on `X`, quantifying over roots by resultants.
pub fn evaluate_predicates(x: &ParameterSet, level: usize) -> Result<Vec<PredicateValue>> {
    let size = class_size(level)?;
    if x.len() != size {
        return Err(Error::BadParameters(format!(
            "class {level} predicates need |X| = {size}, got {}",
            x.len()
        )));
    }
    let labels: Vec<usize> = (1..=size).collect();
    class_predicates(x.values(), &labels, level, Root::All)
}

/// Predicates for one representation, using its own root choice.
///
/// For dimension 6 these are the class predicates shared by all five variants.
pub fn rep_predicates(rep: &Representation) -> Result<Vec<PredicateValue>> {
    let x = rep.spec.params.values();
    let labels: Vec<usize> = (1..=x.len()).collect();
    match rep.spec.dim {
        1 => Ok(Vec::new()),
        d @ (2 | 3 | 6) => class_predicates(x, &labels, d, Root::All),
        4 => class_predicates(x, &labels, 4, Root::Given(rep.spec.roots.h.as_ref().unwrap())),
        5 => class_predicates(x, &labels, 5, Root::Given(rep.spec.roots.f.as_ref().unwrap())),
        d => Err(Error::BadLevel(d)),
    }
}

/// Closure of `{g1, g2}` is the full matrix algebra.
pub fn irreducible_oracle(rep: &Representation) -> Result<bool> {
    let d = rep.dim();
    Ok(algebra_closure_dim(&rep.generators())?.0 == d * d)
}

/// An invariant subspace: coordinates `Y`, plus for dimension 6 possibly a line `a v5 + b v6`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// 1-based coordinates spanning the coordinate part.
    pub y: Vec<usize>,
    /// Coefficients `[a, b]` on the doubled-eigenvalue plane `v5, v6`.
    pub line: Option<[FieldElement; 2]>,
    /// Column basis of the subspace.
    pub basis: Matrix,
}

impl Witness {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "Y": self.y });
        if let Some([a, b]) = &self.line {
            v["line"] = json!([a.to_json(), b.to_json()]);
        }
        v
    }
}

fn coordinate_witness(rep: &Representation, y: Vec<usize>) -> Witness {
    let ctx = rep.context();
    let d = rep.dim();
    let cols: Vec<Vec<FieldElement>> = y
        .iter()
        .map(|&k| {
            (0..d)
                .map(|i| {
                    if i + 1 == k {
                        FieldElement::one(ctx)
                    } else {
                        FieldElement::zero(ctx)
                    }
                })
                .collect()
        })
        .collect();
    let basis = Matrix::from_columns(ctx, d, &cols);
    Witness { y, line: None, basis }
}

fn line_witness(rep: &Representation, y: Vec<usize>, line: [FieldElement; 2]) -> Witness {
    let mut w = coordinate_witness(rep, y.clone());
    let ctx = rep.context();
    let mut col = vec![FieldElement::zero(ctx); 6];
    col[4] = line[0].clone();
    col[5] = line[1].clone();
    let mut cols: Vec<Vec<FieldElement>> = (0..w.basis.cols()).map(|j| w.basis.column(j)).collect();
    cols.push(col);
    w.basis = Matrix::from_columns(ctx, 6, &cols);
    w.line = Some(line);
    w
}

/// `g2` has no entries from `Y` into its complement.
fn coordinate_invariant(g2: &Matrix, y: &[usize]) -> bool {
    let d = g2.rows();
    (1..=d)
        .filter(|i| !y.contains(i))
        .all(|i| y.iter().all(|&j| g2[(i - 1, j - 1)].is_zero()))
}

/// Scales so the first nonzero coordinate is 1.
fn normalize(v: [FieldElement; 2]) -> Option<[FieldElement; 2]> {
    let [a, b] = v;
    if !a.is_zero() {
        let inv = a.inv().ok()?;
        Some([FieldElement::one(a.context()), &b * &inv])
    } else if !b.is_zero() {
        Some([a, FieldElement::one(b.context())])
    } else {
        None
    }
}

/// Eigenlines of a 2x2 matrix over the field; `None` if its eigenvalues need an extension.
fn eigenlines(m: &Matrix) -> Result<Option<Vec<[FieldElement; 2]>>> {
    if m.as_scalar().is_some() {
        return Ok(Some(Vec::new()));
    }
    let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    let disc = (a - d).pow(2) + FieldElement::from_int(a.context(), 4) * b * c;
    let roots = if disc.is_zero() {
        vec![disc.clone()]
    } else {
        roots_of_binomial(&disc, 2, &[])
    };
    if roots.is_empty() {
        return Ok(None);
    }
    let half = FieldElement::from_int(a.context(), 2).inv()?;
    let mut out = Vec::new();
    for s in roots {
        let lambda = (a + d + s) * &half;
        let shifted = m - &Matrix::scalar(&lambda, 2);
        for v in shifted.kernel_basis()? {
            out.push([v[0].clone(), v[1].clone()]);
        }
    }
    Ok(Some(out))
}

/// Every invariant proper subspace the search can see, ordered by dimension.
///
/// For dimension at most 5 `g1` has simple spectrum and these are exactly the coordinate
/// subspaces. For dimension 6 lines in the `x5`-plane are proposed from kernels and
/// eigenlines of the blocks coupling the plane to the rest; `notes` records when an
/// eigenline would need a field extension.
pub fn invariant_subspaces(rep: &Representation) -> Result<(Vec<Witness>, Vec<String>)> {
    let d = rep.dim();
    let g2 = &rep.g2;
    let mut found = Vec::new();
    let mut notes = Vec::new();
    for y in proper_subsets(d) {
        if coordinate_invariant(g2, &y) {
            found.push(coordinate_witness(rep, y));
        }
    }
    if d == 6 {
        let g33 = g2.submatrix(&[4, 5], &[4, 5]);
        let eig = eigenlines(&g33)?;
        if eig.is_none() {
            notes.push("no line in this field: the x5-plane block has eigenvalues outside the field".to_string());
        }
        for y in std::iter::once(Vec::new())
            .chain(proper_subsets(4))
            .chain(std::iter::once(vec![1, 2, 3, 4]))
        {
            let mut candidates: Vec<[FieldElement; 2]> = eig.clone().unwrap_or_default();
            let outside: Vec<usize> = (0..4).filter(|i| !y.contains(&(i + 1))).collect();
            if !outside.is_empty() {
                let rows = g2.submatrix(&outside, &[4, 5]);
                for v in rows.kernel_basis()? {
                    candidates.push([v[0].clone(), v[1].clone()]);
                }
            }
            for &k in &y {
                candidates.push([g2[(4, k - 1)].clone(), g2[(5, k - 1)].clone()]);
            }
            let mut seen = Vec::new();
            for line in candidates.into_iter().filter_map(normalize) {
                // coordinate lines are already covered
                if line[0].is_zero() || line[1].is_zero() || seen.contains(&line) {
                    continue;
                }
                seen.push(line.clone());
                let w = line_witness(rep, y.clone(), line);
                if is_invariant(&w.basis, &rep.generators())? {
                    found.push(w);
                }
            }
        }
    }
    found.sort_by_key(|w| (w.dim(), w.line.is_some()));
    Ok((found, notes))
}

/// Nonempty proper subsets of `1..=n`, by size then lexicographically.
fn proper_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = lex_subsets(n).into_iter().filter(|s| s.len() < n).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Smallest invariant proper subspace found, re-verified exactly.
pub fn invariant_subspace_witness(rep: &Representation) -> Result<Option<Witness>> {
    let (found, _) = invariant_subspaces(rep)?;
    for w in found {
        if is_invariant(&w.basis, &rep.generators())? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Whether the witnessed subspace has an invariant complement.
pub fn decomposability_check(rep: &Representation, w: &Witness) -> Result<bool> {
    let d = rep.dim();
    let k = w.dim();
    if w.basis.rows() != d || k == 0 || k >= d || w.basis.rank()? != k {
        return Err(Error::InvalidWitness);
    }
    if !is_invariant(&w.basis, &rep.generators())? {
        return Err(Error::InvalidWitness);
    }
    let (found, _) = invariant_subspaces(rep)?;
    for other in found.iter().filter(|o| o.dim() == d - k) {
        let mut cols: Vec<Vec<FieldElement>> = (0..k).map(|j| w.basis.column(j)).collect();
        cols.extend((0..other.dim()).map(|j| other.basis.column(j)));
        if Matrix::from_columns(rep.context(), d, &cols).rank()? == d {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Full irreducibility analysis of one representation.
#[derive(Clone, Debug)]
pub struct IrreducibilityReport {
    pub label: String,
    pub dim: usize,
    pub predicates: Vec<PredicateValue>,
    pub predicates_nonzero: bool,
    pub closure_dim: usize,
    pub oracle_irreducible: bool,
    pub commutant_dim: usize,
    pub witness: Option<Witness>,
    pub decomposable: Option<bool>,
    pub notes: Vec<String>,
    /// Predicates and oracle agree. For dimension 6 only "nonzero ⇒ irreducible" is per-variant.
    pub agrees: bool,
}

impl IrreducibilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "dim": self.dim,
            "predicates": self.predicates.iter().map(PredicateValue::to_json).collect::<Vec<_>>(),
            "vanishing": self.predicates.iter().filter(|p| p.is_zero).map(PredicateValue::name).collect::<Vec<_>>(),
            "predicates_nonzero": self.predicates_nonzero,
            "closure_dim": self.closure_dim,
            "oracle_irreducible": self.oracle_irreducible,
            "commutant_dim": self.commutant_dim,
            "witness": self.witness.as_ref().map_or(Value::Null, Witness::to_json),
            "decomposable": self.decomposable,
            "notes": self.notes,
            "agrees": self.agrees,
        })
    }
}

pub fn analyze_irreducibility(rep: &Representation) -> Result<IrreducibilityReport> {
    let d = rep.dim();
    let predicates = rep_predicates(rep)?;
    let predicates_nonzero = predicates.iter().all(|p| !p.is_zero);
    let closure_dim = algebra_closure_dim(&rep.generators())?.0;
    let oracle_irreducible = closure_dim == d * d;
    let commutant = commutant_dim(&rep.generators())?;
    let (found, mut notes) = invariant_subspaces(rep)?;
    let witness = found.into_iter().next();
    if oracle_irreducible || witness.is_some() {
        notes.clear();
    }
    let decomposable = match &witness {
        Some(w) => Some(decomposability_check(rep, w)?),
        None => None,
    };
    let agrees = if d == 6 {
        !predicates_nonzero || oracle_irreducible
    } else {
        predicates_nonzero == oracle_irreducible
    };
    Ok(IrreducibilityReport {
        label: rep.label(),
        dim: d,
        predicates,
        predicates_nonzero,
        closure_dim,
        oracle_irreducible,
        commutant_dim: commutant,
        witness,
        decomposable,
        notes,
        agrees,
    })
}

/// Traces of evaluated words.
pub fn character(rep: &Representation, words: &[BraidWord]) -> Result<Vec<FieldElement>> {
    let ev = Evaluator::new(rep)?;
    Ok(words.iter().map(|w| ev.evaluate(w).trace()).collect())
}

/// `g1, g2, g1g2, g1g2g1, g1²g2, g1³g2`.
pub fn default_probe_words() -> Vec<BraidWord> {
    ["s1", "s2", "s1 s2", "s1 s2 s1", "s1^2 s2", "s1^3 s2"]
        .iter()
        .map(|s| parse(s).expect("fixed probe words"))
        .collect()
}

/// Positive words in `s1`, `s2` of the given length, lexicographic with `s1 < s2`.
pub fn words_of_length(len: usize) -> Vec<BraidWord> {
    (0..1u32 << len)
        .map(|bits| {
            let factors = (0..len)
                .rev()
                .map(|k| {
                    (
                        if bits & (1 << k) == 0 {
                            Generator::G1
                        } else {
                            Generator::G2
                        },
                        1,
                    )
                })
                .collect();
            BraidWord::new(factors)
        })
        .collect()
}

/// Longest positive word length used to separate probe collisions before solving for intertwiners.
const MAX_PROBE_LENGTH: usize = 6;

/// Dimension of `Q_X` for `|X| = n`.
pub fn algebra_dim(n: usize) -> Option<usize> {
    match n {
        1 => Some(1),
        2 => Some(6),
        3 => Some(24),
        4 => Some(96),
        5 => Some(600),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub struct SemisimplicityReport {
    pub verdict: bool,
    pub predicates: Vec<PredicateValue>,
    pub failing: Vec<PredicateValue>,
}

impl SemisimplicityReport {
    pub fn failing_names(&self) -> Vec<String> {
        self.failing.iter().map(PredicateValue::name).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "predicate_count": self.predicates.len(),
            "failing": self.failing_names(),
            "failing_values": self.failing.iter().map(PredicateValue::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Every predicate over every subset of `X`; semisimple iff none vanishes.
pub fn semisimplicity(x: &ParameterSet) -> Result<SemisimplicityReport> {
    let n = x.len();
    let mut predicates = Vec::new();
    for subset in lex_subsets(n).into_iter().filter(|s| s.len() >= 2) {
        let sub = x.subset(&subset)?;
        let mut levels = vec![subset.len()];
        if subset.len() == 5 {
            levels.push(6);
        }
        for level in levels {
            let mut ps = class_predicates(sub.values(), &subset, level, Root::All)?;
            if matches!(level, 4 | 5) && subset.len() < n {
                for p in ps.iter_mut().filter(|p| matches!(p.family, Family::I4 | Family::I5)) {
                    p.subset = Some(subset.clone());
                }
            }
            predicates.extend(ps);
        }
    }
    let failing: Vec<PredicateValue> = predicates.iter().filter(|p| p.is_zero).cloned().collect();
    Ok(SemisimplicityReport {
        verdict: failing.is_empty(),
        predicates,
        failing,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    Constructive,
    Combinatorial,
}

impl CensusMode {
    pub fn name(self) -> &'static str {
        match self {
            CensusMode::Constructive => "constructive",
            CensusMode::Combinatorial => "combinatorial",
        }
    }
}

impl std::str::FromStr for CensusMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<CensusMode> {
        match s {
            "constructive" => Ok(CensusMode::Constructive),
            "combinatorial" => Ok(CensusMode::Combinatorial),
            other => Err(Error::Parse(format!("unknown census mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub subset: Vec<usize>,
    pub dim: usize,
    pub label: String,
    pub spec: Option<RepSpec>,
    pub probes: Vec<FieldElement>,
    pub class_id: usize,
}

impl CensusEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "subset": self.subset,
            "dim": self.dim,
            "label": self.label,
            "spec": self.spec.as_ref().map_or(Value::Null, RepSpec::to_json),
            "probes": self.probes.iter().map(FieldElement::to_json).collect::<Vec<_>>(),
            "class_id": self.class_id,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub mode: CensusMode,
    pub n: usize,
    pub entries: Vec<CensusEntry>,
    pub sum_of_squares: usize,
    pub algebra_dim: usize,
    pub semisimple_verdict: bool,
    pub failing_predicates: Vec<PredicateValue>,
    pub probe_words: Vec<String>,
    pub intertwiner_solves: usize,
    /// Every entry is its own equivalence class.
    pub all_inequivalent: bool,
}

impl CensusReport {
    pub fn matches(&self) -> bool {
        self.sum_of_squares == self.algebra_dim
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.name(),
            "n": self.n,
            "entries": self.entries.iter().map(CensusEntry::to_json).collect::<Vec<_>>(),
            "sum_of_squares": self.sum_of_squares,
            "algebra_dim": self.algebra_dim,
            "matches": self.matches(),
            "semisimple_verdict": self.semisimple_verdict,
            "failing_predicates": self.failing_predicates.iter().map(PredicateValue::name).collect::<Vec<_>>(),
            "probe_words": self.probe_words,
            "intertwiner_solves": self.intertwiner_solves,
            "all_inequivalent": self.all_inequivalent,
        })
    }
}

fn deferred_summary(deferred: &[Deferred]) -> String {
    deferred
        .iter()
        .map(|d| format!("dim {} on {:?} needs roots of {}", d.dim, d.subset, d.required_modulus))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Counts (constructive: builds and separates) the irreducible representations of `Q_X`.
///
/// `hints` are extra field elements offered to the root search (e.g. square roots in a
/// cyclotomic field).
pub fn dimension_census(x: &ParameterSet, mode: CensusMode, hints: &[FieldElement]) -> Result<CensusReport> {
    let n = x.len();
    let ss = semisimplicity(x)?;
    if !ss.verdict {
        return Err(Error::NotSemisimple);
    }
    let algebra_dim = algebra_dim(n).expect("|X| <= 5");
    let mut report = CensusReport {
        mode,
        n,
        entries: Vec::new(),
        sum_of_squares: 0,
        algebra_dim,
        semisimple_verdict: true,
        failing_predicates: Vec::new(),
        probe_words: Vec::new(),
        intertwiner_solves: 0,
        all_inequivalent: true,
    };
    match mode {
        CensusMode::Combinatorial => {
            for subset in lex_subsets(n) {
                let variants: Vec<String> = match subset.len() {
                    4 => vec!["h=+".into(), "h=-".into()],
                    5 => (0..5).map(|k| format!("f=f0*zeta5^{k}")).collect(),
                    _ => vec![String::new()],
                };
                for v in variants {
                    let label = if v.is_empty() {
                        format!("rho{}", subset.len())
                    } else {
                        format!("rho{}[{v}]", subset.len())
                    };
                    report.entries.push(CensusEntry {
                        subset: subset.clone(),
                        dim: subset.len(),
                        label,
                        spec: None,
                        probes: Vec::new(),
                        class_id: report.entries.len(),
                    });
                }
            }
            if n == 5 {
                for i in 1..=5 {
                    report.entries.push(CensusEntry {
                        subset: (1..=5).collect(),
                        dim: 6,
                        label: format!("rho6[{i}]"),
                        spec: None,
                        probes: Vec::new(),
                        class_id: report.entries.len(),
                    });
                }
            }
        }
        CensusMode::Constructive => {
            let e = enumerate_irreps(x, hints)?;
            if !e.deferred.is_empty() {
                return Err(Error::RootsUnavailable(deferred_summary(&e.deferred)));
            }
            let reps: Vec<&Representation> = e.reps.iter().map(|r| &r.rep).collect();
            let evaluators = reps.iter().map(|r| Evaluator::new(r)).collect::<Result<Vec<_>>>()?;
            let mut words = default_probe_words();
            let mut probes: Vec<Vec<FieldElement>> = evaluators
                .iter()
                .map(|ev| words.iter().map(|w| ev.evaluate(w).trace()).collect())
                .collect();
            let collisions = |probes: &[Vec<FieldElement>]| -> Vec<(usize, usize)> {
                let mut out = Vec::new();
                for i in 0..reps.len() {
                    for j in i + 1..reps.len() {
                        if reps[i].dim() == reps[j].dim() && probes[i] == probes[j] {
                            out.push((i, j));
                        }
                    }
                }
                out
            };
            let mut len = 4;
            while !collisions(&probes).is_empty() && len <= MAX_PROBE_LENGTH {
                let extra = words_of_length(len);
                for (p, ev) in probes.iter_mut().zip(&evaluators) {
                    p.extend(extra.iter().map(|w| ev.evaluate(w).trace()));
                }
                words.extend(extra);
                len += 1;
            }
            // union-find over exact equivalence
            let mut class: Vec<usize> = (0..reps.len()).collect();
            for (i, j) in collisions(&probes) {
                report.intertwiner_solves += 1;
                if !intertwiners(&reps[i].generators(), &reps[j].generators())?.is_empty() {
                    let (ci, cj) = (class[i], class[j]);
                    for c in class.iter_mut().filter(|c| **c == cj) {
                        *c = ci;
                    }
                }
            }
            let mut ids = BTreeMap::new();
            for (k, r) in e.reps.iter().enumerate() {
                let next = ids.len();
                let id = *ids.entry(class[k]).or_insert(next);
                report.entries.push(CensusEntry {
                    subset: r.subset.clone(),
                    dim: r.rep.dim(),
                    label: r.rep.label(),
                    spec: Some(r.rep.spec.clone()),
                    probes: probes[k].clone(),
                    class_id: id,
                });
            }
            report.probe_words = words.iter().map(BraidWord::to_string).collect();
        }
    }
    let mut seen = BTreeMap::new();
    for e in &report.entries {
        seen.entry(e.class_id).or_insert(e.dim);
    }
    report.sum_of_squares = seen.values().map(|d| d * d).sum();
    report.all_inequivalent = seen.len() == report.entries.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::build_rep;

    fn params(v: &[&str]) -> ParameterSet {
        ParameterSet::parse_rationals(v).unwrap()
    }

    fn rep(dim: usize, v: &[&str]) -> Representation {
        build_rep(&RepSpec::new(dim, params(v))).unwrap()
    }

    #[test]
    fn predicate_examples() {
        let p = evaluate_predicates(&params(&["1", "2"]), 2).unwrap();
        assert_eq!(p[0].name(), "I2(1,2)");
        assert_eq!(p[0].value.to_string(), "3");
        let p = evaluate_predicates(&params(&["2", "1", "-4"]), 3).unwrap();
        assert_eq!(p[0].name(), "I3(1,2,3)");
        assert!(p[0].is_zero);
        let p = evaluate_predicates(&params(&["1", "2", "3", "4", "24"]), 6).unwrap();
        let j15 = p.iter().find(|p| p.name() == "J6(1,5)").unwrap();
        assert!(j15.is_zero);
        assert_eq!(p.len(), 5 + 20 + 15);
        assert!(matches!(
            evaluate_predicates(&params(&["1", "2"]), 7),
            Err(Error::BadLevel(7))
        ));
        assert!(evaluate_predicates(&params(&["1", "2"]), 3).is_err());
    }

    #[test]
    fn resultant_quantifier_matches_explicit_roots() {
        // X = {1,2,27/2,3}: e4 = 81, h = 9 kills I4(4); the resultant sees it without choosing h
        let x = params(&["1", "2", "27/2", "3"]);
        let p = evaluate_predicates(&x, 4).unwrap();
        let i4 = p.iter().find(|p| p.name() == "I4(4)").unwrap();
        assert!(i4.is_zero && i4.via_resultant);
        // X = {-4,1,2,4,-1}: e5 = 32, f = 2 kills J5(1,2)
        let p = evaluate_predicates(&params(&["-4", "1", "2", "4", "-1"]), 5).unwrap();
        assert!(p.iter().any(|p| p.name() == "J5(1,2)" && p.is_zero));
    }

    #[test]
    fn oracle_examples() {
        assert!(irreducible_oracle(&rep(2, &["1", "2"])).unwrap());
        assert!(irreducible_oracle(&rep(1, &["5"])).unwrap());
        let r = rep(3, &["2", "1", "-4"]);
        assert!(!irreducible_oracle(&r).unwrap());
        let w = invariant_subspace_witness(&r).unwrap().unwrap();
        assert!(w.y.len() == 1 || w.y.len() == 2);
        assert!(!decomposability_check(&r, &w).unwrap());
    }

    #[test]
    fn decomposable_direct_sum_is_detected() {
        let a = rep(1, &["2"]);
        let b = rep(2, &["3", "5"]);
        let sum = Representation {
            spec: b.spec.clone(),
            g1: a.g1.direct_sum(&b.g1),
            g2: a.g2.direct_sum(&b.g2),
            multiplicities: vec![1, 1, 1],
        };
        let w = invariant_subspace_witness(&sum).unwrap().unwrap();
        assert_eq!(w.y, vec![1]);
        assert!(decomposability_check(&sum, &w).unwrap());
        let bogus = coordinate_witness(&rep(2, &["1", "2"]), vec![1]);
        assert_eq!(
            decomposability_check(&rep(2, &["1", "2"]), &bogus),
            Err(Error::InvalidWitness)
        );
    }

    #[test]
    fn semisimplicity_examples() {
        assert!(semisimplicity(&params(&["1", "2"])).unwrap().verdict);
        let r = semisimplicity(&params(&["2", "1", "-4"])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failing_names(), vec!["I3(1,2,3)"]);
        let r = semisimplicity(&params(&["1", "2", "-3", "6", "5"])).unwrap();
        assert!(
            r.failing_names().contains(&"K6(5;1,4,2,3)".to_string()),
            "{:?}",
            r.failing_names()
        );
    }

    #[test]
    fn combinatorial_census_sums() {
        for (x, total) in [
            (vec!["1", "2"], 6),
            (vec!["1", "2", "5"], 24),
            (vec!["1", "2", "5", "7"], 96),
            (vec!["1", "2", "5", "7", "11"], 600),
        ] {
            let c = dimension_census(&params(&x), CensusMode::Combinatorial, &[]).unwrap();
            assert_eq!(c.sum_of_squares, total);
            assert!(c.matches());
        }
    }

    #[test]
    fn constructive_census_small() {
        let c = dimension_census(&params(&["1", "2", "3", "6"]), CensusMode::Constructive, &[]).unwrap();
        assert_eq!(c.sum_of_squares, 96);
        assert!(c.all_inequivalent);
        let err = dimension_census(&params(&["1", "2", "3", "4"]), CensusMode::Constructive, &[]);
        assert!(matches!(err, Err(Error::RootsUnavailable(_))));
        let err = dimension_census(&params(&["2", "1", "-4"]), CensusMode::Combinatorial, &[]);
        assert!(matches!(err, Err(Error::NotSemisimple)));
    }

    #[test]
    fn characters_separate_dimension_four_pair() {
        let x = params(&["1", "2", "3", "6"]);
        let ctx = x.context().clone();
        let words = vec![parse("s1 s2").unwrap()];
        let tr: Vec<String> = [6, -6]
            .iter()
            .map(|&h| {
                let r = build_rep(&RepSpec::new(4, x.clone()).with_h(FieldElement::from_int(&ctx, h))).unwrap();
                character(&r, &words).unwrap()[0].to_string()
            })
            .collect();
        assert_eq!(tr, vec!["6", "-6"]);
    }
}

//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use b3quot::analysis::{
    analyze_irreducibility, decomposability_check, dimension_census, rep_predicates, semisimplicity, CensusMode,
};
use b3quot::braidword::{parse, print, BraidWord, Evaluator, Generator};
use b3quot::cli::{run, zeta120_square_roots};
use b3quot::linalg::is_invariant;
use b3quot::reps::esym;
use b3quot::spectral::{a_and_b, check_det_constraint, check_traces};
use b3quot::{
    build_rep, FieldContext, FieldElement, Matrix, ParameterSet, Polynomial, Rational, RepSpec, Representation,
};
use common::{params, q, random_spec, small_rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SWEEP_PER_DIM: usize = 100;
const SEED: u64 = 20240601;

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Random generic representations: every predicate nonzero, redrawn otherwise.
struct Sweep {
    reps: Vec<Representation>,
    redraws: usize,
    elapsed: Duration,
}

fn sweep() -> Sweep {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut reps = Vec::new();
    let mut redraws = 0;
    for dim in 1..=6 {
        let mut k = 0;
        while k < SWEEP_PER_DIM {
            let mut spec = random_spec(&mut rng, dim);
            if dim == 6 {
                spec.variant = Some(k % 5 + 1);
            }
            let generic = build_rep(&spec).ok().filter(|r| {
                rep_predicates(r)
                    .map(|ps| ps.iter().all(|p| !p.is_zero))
                    .unwrap_or(false)
            });
            match generic {
                Some(rep) => {
                    reps.push(rep);
                    k += 1;
                }
                None => redraws += 1,
            }
        }
    }
    Sweep {
        reps,
        redraws,
        elapsed: started.elapsed(),
    }
}

/// `∏ (λ - x_i)^{m_i}` with `m_i = 1`, except `m_i = 2` for the dimension-6 variant index.
fn generator_charpoly(spec: &RepSpec) -> Polynomial {
    let ctx = spec.params.context();
    spec.params
        .values()
        .iter()
        .enumerate()
        .fold(Polynomial::one(ctx), |acc, (i, x)| {
            let m = if spec.variant == Some(i + 1) { 2 } else { 1 };
            &acc * &Polynomial::linear(x).pow(m)
        })
}

fn structural_identities(s: &Sweep) -> Verdict {
    let started = Instant::now();
    for rep in &s.reps {
        let (g1, g2) = (&rep.g1, &rep.g2);
        let label = rep.label();
        ensure(&(g1 * g2) * g1 == &(g2 * g1) * g2, || {
            format!("{label}: braid relation")
        })?;
        let px = Polynomial::from_roots(rep.context(), rep.spec.params.values());
        ensure(g2.eval_poly(&px).is_zero(), || format!("{label}: P_X(g2) != 0"))?;
        ensure(g2.minpoly().unwrap() == px, || format!("{label}: minpoly(g2) != P_X"))?;
        let chi = generator_charpoly(&rep.spec);
        ensure(g1.charpoly().unwrap() == chi, || format!("{label}: charpoly(g1)"))?;
        ensure(g2.charpoly().unwrap() == chi, || format!("{label}: charpoly(g2)"))?;
    }
    let total = s.elapsed + started.elapsed();
    ensure(total <= Duration::from_secs(60), || format!("sweep took {total:?}"))?;
    Ok(format!("{} reps, {} redraws, {:.1?}", s.reps.len(), s.redraws, total))
}

/// `(C, Tr A, Tr A², Tr B)` in closed form.
fn closed_forms(spec: &RepSpec) -> [FieldElement; 4] {
    let ctx = spec.params.context();
    let x = spec.params.values();
    let zero = FieldElement::zero(ctx);
    match spec.dim {
        1 => [x[0].pow(6), x[0].pow(2), x[0].pow(4), x[0].pow(3)],
        2 => {
            let e2 = esym(x, 2);
            [-e2.pow(3), e2.clone(), -e2.pow(2), zero]
        }
        3 => {
            let e3 = esym(x, 3);
            [e3.pow(2), zero.clone(), zero, -e3]
        }
        4 => {
            let h = spec.roots.h.clone().unwrap();
            [h.pow(3), h.clone(), h.pow(2), zero]
        }
        5 => {
            let f = spec.roots.f.clone().unwrap();
            [f.pow(6), -f.pow(2), -f.pow(4), f.pow(3)]
        }
        _ => {
            let c = -(&x[spec.variant.unwrap() - 1] * &esym(x, 5));
            [c, zero.clone(), zero.clone(), zero]
        }
    }
}

fn spectral_identities(s: &Sweep) -> Verdict {
    for rep in &s.reps {
        let label = rep.label();
        let d = rep.dim();
        let [c, tr_a, tr_a2, tr_b] = closed_forms(&rep.spec);
        let (a, b) = a_and_b(rep);
        let scalar = Matrix::scalar(&c, d);
        ensure(a.pow(3) == scalar, || format!("{label}: A^3 != C Id"))?;
        ensure(b.pow(2) == scalar, || format!("{label}: B^2 != C Id"))?;
        ensure(a.trace() == tr_a, || format!("{label}: Tr A"))?;
        ensure(a.pow(2).trace() == tr_a2, || format!("{label}: Tr A^2"))?;
        ensure(b.trace() == tr_b, || format!("{label}: Tr B"))?;
        let report = check_traces(rep).unwrap();
        ensure(report.all_ok, || format!("{label}: {:?}", report.failures()))?;
        ensure(report.c_rho == c, || format!("{label}: report C"))?;
        ensure(check_det_constraint(rep).unwrap(), || {
            format!("{label}: det constraint")
        })?;
        ensure(rep.g1.det().unwrap().pow(6) == c.pow(d as u32), || {
            format!("{label}: det(g1)^6 != C^d")
        })?;
    }
    Ok(format!("{} reps", s.reps.len()))
}

struct Fixture {
    x: &'static [&'static str],
    dim: usize,
    root: Option<&'static str>,
    predicate: &'static str,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        x: &["2", "1", "-4"],
        dim: 3,
        root: None,
        predicate: "I3(1,2,3)",
    },
    Fixture {
        x: &["1", "2", "27/2", "3"],
        dim: 4,
        root: Some("9"),
        predicate: "I4(4)",
    },
    Fixture {
        x: &["-4", "1", "2", "4", "-1"],
        dim: 5,
        root: Some("2"),
        predicate: "J5(1,2)",
    },
    Fixture {
        x: &["1", "2", "3", "4", "24"],
        dim: 6,
        root: None,
        predicate: "J6(1,5)",
    },
    Fixture {
        x: &["1", "2", "-3", "6", "5"],
        dim: 6,
        root: None,
        predicate: "K6(5;1,4,2,3)",
    },
    Fixture {
        x: &["2", "3", "-1", "1/6", "1"],
        dim: 6,
        root: None,
        predicate: "I6(5)",
    },
];

fn fixture_reps(f: &Fixture) -> Vec<Representation> {
    let x = params(f.x);
    match f.dim {
        4 => vec![build_rep(&RepSpec::new(4, x).with_h(q(f.root.unwrap()))).unwrap()],
        5 => vec![build_rep(&RepSpec::new(5, x).with_f(q(f.root.unwrap()))).unwrap()],
        6 => (1..=5)
            .map(|i| build_rep(&RepSpec::new(6, x.clone()).with_variant(i)).unwrap())
            .collect(),
        d => vec![build_rep(&RepSpec::new(d, x)).unwrap()],
    }
}

fn predicate_agreement(s: &Sweep) -> Verdict {
    for rep in &s.reps {
        let a = analyze_irreducibility(rep).unwrap();
        ensure(a.predicates_nonzero && a.oracle_irreducible, || {
            format!("{}: generic point has closure dimension {}", a.label, a.closure_dim)
        })?;
        ensure(a.commutant_dim == 1, || {
            format!("{}: commutant dimension {}", a.label, a.commutant_dim)
        })?;
    }
    let mut witnesses = 0;
    let mut collinear = false;
    for f in FIXTURES {
        let reps = fixture_reps(f);
        let vanishing: Vec<String> = rep_predicates(&reps[0])
            .unwrap()
            .iter()
            .filter(|p| p.is_zero)
            .map(|p| p.name())
            .collect();
        ensure(vanishing.iter().any(|n| n == f.predicate), || {
            format!("{:?}: {} not among {vanishing:?}", f.x, f.predicate)
        })?;
        let mut reducible = 0;
        for rep in &reps {
            let a = analyze_irreducibility(rep).unwrap();
            ensure(a.agrees, || {
                format!("{:?} {}: predicates and oracle disagree", f.x, a.label)
            })?;
            if a.oracle_irreducible {
                continue;
            }
            reducible += 1;
            let w = a
                .witness
                .clone()
                .ok_or_else(|| format!("{:?} {}: no witness", f.x, a.label))?;
            ensure(is_invariant(&w.basis, &rep.generators()).unwrap(), || {
                format!("{}: witness not invariant", a.label)
            })?;
            ensure(!decomposability_check(rep, &w).unwrap(), || {
                format!("{:?} {}: decomposable", f.x, a.label)
            })?;
            witnesses += 1;
            if f.predicate == "I6(5)" && rep.spec.variant == Some(5) {
                // eigenvector (-42, -6) on the doubled-eigenvalue plane
                let [a0, b0] = w.line.clone().ok_or("I6 witness has no line")?;
                collinear = &a0 * &q("-6") == &b0 * &q("-42");
                ensure(collinear, || {
                    format!("I6 witness line [{a0}, {b0}] not collinear with (-42, -6)")
                })?;
            }
        }
        ensure(reducible > 0, || format!("{:?}: every representation irreducible", f.x))?;
    }
    ensure(collinear, || "I6 fixture produced no line witness".into())?;
    Ok(format!(
        "{} sweep reps irreducible, {} fixture witnesses, all indecomposable",
        s.reps.len(),
        witnesses
    ))
}

fn random_semisimple(rng: &mut ChaCha8Rng, n: usize) -> ParameterSet {
    loop {
        let vals: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
        if let Ok(x) = ParameterSet::from_rationals(&FieldContext::rationals(), &vals) {
            if semisimplicity(&x).unwrap().verdict {
                return x;
            }
        }
    }
}

fn census() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let expected = [(2, 6), (3, 24), (4, 96), (5, 600)];
    for (n, dim) in expected {
        for _ in 0..5 {
            let x = random_semisimple(&mut rng, n);
            let c = dimension_census(&x, CensusMode::Combinatorial, &[]).unwrap();
            ensure(c.sum_of_squares == dim, || {
                format!("combinatorial n={n}: {}", c.sum_of_squares)
            })?;
        }
    }
    let ctx = FieldContext::cyclotomic(120);
    let hints = zeta120_square_roots(&ctx);
    let z120 = |vals: &[&str]| {
        ParameterSet::new(vals.iter().map(|s| FieldElement::parse(&ctx, s).unwrap()).collect()).unwrap()
    };
    let constructive = [
        (random_semisimple(&mut rng, 2), Vec::new(), 6),
        (random_semisimple(&mut rng, 3), Vec::new(), 24),
        (params(&["1", "2", "3", "6"]), Vec::new(), 96),
        (z120(&["1", "2", "3", "4", "4/3"]), hints, 600),
    ];
    let mut sums = Vec::new();
    for (x, hints, dim) in &constructive {
        let c = dimension_census(x, CensusMode::Constructive, hints).unwrap();
        ensure(c.sum_of_squares == *dim, || {
            format!("constructive n={}: {}", x.len(), c.sum_of_squares)
        })?;
        ensure(c.all_inequivalent, || {
            format!("constructive n={}: equivalent members", x.len())
        })?;
        sums.push(c.sum_of_squares);
    }
    Ok(format!(
        "combinatorial 6/24/96/600 on 20 random sets; constructive {sums:?}, pairwise inequivalent"
    ))
}

fn degenerate_not_semisimple() -> Verdict {
    for f in FIXTURES {
        let ss = semisimplicity(&params(f.x)).unwrap();
        let names = ss.failing_names();
        ensure(!ss.verdict, || format!("{:?}: verdict true", f.x))?;
        ensure(names.iter().any(|n| n == f.predicate), || {
            format!("{:?}: {} not among {names:?}", f.x, f.predicate)
        })?;
    }
    Ok(format!("{} fixtures", FIXTURES.len()))
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, macros: bool) -> BraidWord {
    let gens = if macros {
        &[Generator::G1, Generator::G2, Generator::A, Generator::B, Generator::C][..]
    } else {
        &[Generator::G1, Generator::G2][..]
    };
    let len = rng.gen_range(1..=max_len);
    let factors = (0..len)
        .map(|_| {
            let g = gens[rng.gen_range(0..gens.len())];
            let mut e: i64 = rng.gen_range(1..=3);
            if rng.gen_bool(0.3) {
                e = -e;
            }
            (g, e)
        })
        .collect();
    BraidWord::new(factors)
}

fn braid_words(s: &Sweep) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for _ in 0..1000 {
        let w = random_word(&mut rng, 10, true);
        let text = print(&w);
        let back = parse(&text).map_err(|e| format!("{text:?}: {e}"))?;
        ensure(back == w, || format!("round trip of {text:?}"))?;
    }
    let central = parse("(s1 s2)^3").unwrap();
    for rep in &s.reps {
        let c = closed_forms(&rep.spec)[0].clone();
        let m = Evaluator::new(rep).unwrap().evaluate(&central);
        ensure(m == Matrix::scalar(&c, rep.dim()), || {
            format!("{}: (s1 s2)^3 != C Id", rep.label())
        })?;
    }
    let left = parse("s1 s2 s1").unwrap();
    let right = parse("s2 s1 s2").unwrap();
    for k in 0..1000 {
        let rep = &s.reps[(k * 7) % s.reps.len()];
        let ev = Evaluator::new(rep).unwrap();
        let (pre, post) = (random_word(&mut rng, 6, false), random_word(&mut rng, 6, false));
        let lhs = ev.evaluate(&pre.concat(&left).concat(&post));
        let rhs = ev.evaluate(&pre.concat(&right).concat(&post));
        ensure(lhs == rhs, || {
            format!("{}: substitution changed {pre} . {post}", rep.label())
        })?;
    }
    Ok("1000 round trips, central word on every sweep rep, 1000 substitutions".into())
}

fn cli(args: &[String]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("b3quot".to_string()).chain(args.iter().cloned()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn performance() -> Verdict {
    let job = json!({"X": ["1", "2", "3", "5", "7"]}).to_string();
    let started = Instant::now();
    for cmd in ["verify", "irred", "semisimple"] {
        let (code, out) = cli(&[cmd.into(), "--params".into(), job.clone()]);
        ensure(code == 0, || format!("{cmd}: exit {code}: {out}"))?;
        if cmd == "irred" {
            let v: Value = serde_json::from_str(&out).unwrap();
            ensure(
                v["dim6_family"]["variants_irreducible"].as_array().map(Vec::len) == Some(5),
                || "irred did not check the five dimension-6 variants".into(),
            )?;
        }
    }
    let pipeline = started.elapsed();
    ensure(pipeline < Duration::from_secs(5), || {
        format!("pipeline took {pipeline:?}")
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let points: Vec<Value> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(2..=5);
            Value::Array(
                (0..n)
                    .map(|_| Value::String(small_rational(&mut rng).to_string()))
                    .collect(),
            )
        })
        .collect();
    let scan_job = json!({"scan": {"points": points}}).to_string();
    let scan = |jobs: &str| {
        cli(&[
            "scan".into(),
            "--params".into(),
            scan_job.clone(),
            "--jobs".into(),
            jobs.into(),
        ])
    };
    let started = Instant::now();
    let (code4, out4) = scan("4");
    let scan_time = started.elapsed();
    let (code1, out1) = scan("1");
    ensure(code4 == 0 && code1 == 0, || format!("scan exit codes {code4}, {code1}"))?;
    ensure(out1 == out4, || "scan output depends on the worker count".into())?;
    ensure(scan_time < Duration::from_secs(600), || {
        format!("scan took {scan_time:?}")
    })?;
    Ok(format!(
        "|X|=5 pipeline {pipeline:.1?}; 1000-point scan with 4 workers {scan_time:.1?}, identical to 1 worker"
    ))
}

fn main() {
    let started = Instant::now();
    let s = sweep();
    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("structural identities", Box::new(|| structural_identities(&s))),
        (
            "central value, traces and spectra",
            Box::new(|| spectral_identities(&s)),
        ),
        (
            "predicates agree with the closure oracle",
            Box::new(|| predicate_agreement(&s)),
        ),
        ("dimension census", Box::new(census)),
        (
            "degenerate parameters are not semisimple",
            Box::new(degenerate_not_semisimple),
        ),
        ("braid-word engine", Box::new(|| braid_words(&s))),
        ("performance", Box::new(performance)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{:.1?}]", k + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why} [{:.1?}]", k + 1, t.elapsed());
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance criteria 1-10, one PASS/FAIL line each.
//!
//! Criteria 5 and 6 quantify over arbitrary term sets, but a Bar Code only
//! determines its term set when that set is an order ideal (`{x1}` and `{1}`
//! share a code). They are run literally and reported as they come out; the
//! process only fails on them if some mismatch falls outside that class or if
//! the order-ideal versions break.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use barjanet::janet::oracle;
use barjanet::{
    compute_basis, is_complete, parse_term, BarCode, Interpolator, JanetTable, PointSet,
    Polynomial, Power, Rational, Term, TermSet,
};
use num::{BigInt, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x0b4c_0de5;

struct Verdict {
    pass: bool,
    /// A failure that is expected and explained; does not fail the run.
    explained: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            explained: false,
            detail: detail.into(),
        }
    }
}

fn term(n: usize, text: &str) -> Term {
    parse_term(text, n).unwrap()
}

fn random_set(rng: &mut ChaCha8Rng, max_vars: usize, max_terms: usize, max_exp: u32) -> TermSet {
    let n = rng.gen_range(1..=max_vars);
    let size = rng.gen_range(1..=max_terms);
    let exps: Vec<Vec<u32>> = (0..size)
        .map(|_| (0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
        .collect();
    TermSet::from_exponents(n, exps).unwrap()
}

/// A random order ideal grown one term at a time, up to `max_terms` elements.
fn random_order_ideal(
    rng: &mut ChaCha8Rng,
    max_vars: usize,
    max_terms: usize,
    max_exp: u32,
) -> TermSet {
    let n = rng.gen_range(1..=max_vars);
    let target = rng.gen_range(1..=max_terms);
    let mut set: BTreeSet<Term> = BTreeSet::from([Term::one(n)]);
    for _ in 0..1000 {
        if set.len() >= target {
            break;
        }
        let base: Vec<&Term> = set.iter().collect();
        let t = base[rng.gen_range(0..base.len())].clone();
        let v = rng.gen_range(1..=n);
        let w = t.mul_var(v, 1);
        if w.deg(v) > max_exp {
            continue;
        }
        if (1..=n).all(|u| w.div_var(u).is_none_or(|d| set.contains(&d))) {
            set.insert(w);
        }
    }
    TermSet::new(n, set).unwrap()
}

fn box_terms(bound: &[u32]) -> Vec<Term> {
    let mut out = vec![Vec::<u32>::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|e| Term::new(e).unwrap()).collect()
}

/// Closure check by enumerating every divisor of every element.
fn is_order_ideal(set: &TermSet) -> bool {
    set.iter()
        .all(|t| box_terms(t.exponents()).iter().all(|d| set.contains(d)))
}

fn in_ideal(gens: &TermSet, w: &Term) -> bool {
    gens.iter()
        .any(|g| g.exponents().iter().zip(w.exponents()).all(|(a, b)| a <= b))
}

fn run_cli(args: &[&str], stdin: &str) -> (Option<i32>, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_barjanet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn barjanet");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

const SIX_TERMS: &str = "x1^5\nx2*x1^2\nx2^4*x1\nx3^2*x1^2\nx3^2*x2^2*x1\nx3^5\n";

fn criterion_1() -> Verdict {
    let expected_rows: [(&str, &[&str]); 6] = [
        ("x1^5", &["x2", "x3^2"]),
        ("x2*x1^2", &["x2^3", "x3^2"]),
        ("x2^4*x1", &["x3^2"]),
        ("x3^2*x1^2", &["x2^2", "x3^3"]),
        ("x3^2*x2^2*x1", &["x3^3"]),
        ("x3^5", &[]),
    ];
    let start = Instant::now();
    let (code, out) = run_cli(&["nmp", "-"], SIX_TERMS);
    let elapsed = start.elapsed();
    let rows: Vec<(Term, BTreeSet<Power>)> = out
        .lines()
        .skip(1)
        .map(|line| {
            let mut parts = line.splitn(2, "  ");
            let t = term(3, parts.next().unwrap().trim());
            let rest = parts.next().unwrap_or("").trim();
            let powers = if rest == "∅" {
                BTreeSet::new()
            } else {
                rest.split(", ").map(|p| Power::parse(p).unwrap()).collect()
            };
            (t, powers)
        })
        .collect();
    let expected: Vec<(Term, BTreeSet<Power>)> = expected_rows
        .iter()
        .map(|(t, ps)| {
            (
                term(3, t),
                ps.iter().map(|p| Power::parse(p).unwrap()).collect(),
            )
        })
        .collect();
    let pass = code == Some(0) && rows == expected && elapsed < Duration::from_secs(1);
    Verdict::new(pass, format!("{} rows, {:?}", rows.len(), elapsed))
}

fn criterion_2() -> Verdict {
    let u = barjanet::io::parse_term_set(SIX_TERMS).unwrap();
    let table = JanetTable::new(&u).unwrap();
    // The seven named products, then x3^2*x2^2*x1 * x3^3.
    let cases = [
        ("x1^5", "x2", "x1^2*x2"),
        ("x1^5", "x3^2", "x3^2*x1^2"),
        ("x2*x1^2", "x2^3", "x2^4*x1"),
        ("x2*x1^2", "x3^2", "x3^2*x1^2"),
        ("x2^4*x1", "x3^2", "x3^2*x2^2*x1"),
        ("x3^2*x1^2", "x3^3", "x3^5"),
        ("x3^2*x1^2", "x2^2", "x1*x2^2*x3^2"),
        ("x3^2*x2^2*x1", "x3^3", "x3^5"),
    ];
    let mut matched = 0;
    for (t, p, d) in cases {
        let got = table
            .divisor_for_nm_product(&term(3, t), Power::parse(p).unwrap())
            .unwrap();
        if got == Some(term(3, d)) {
            matched += 1;
        }
    }
    let (code, _) = run_cli(&["check-complete", "-"], SIX_TERMS);
    Verdict::new(
        matched == cases.len() && code == Some(0),
        format!(
            "{matched}/{} divisors, check-complete exit {code:?}",
            cases.len()
        ),
    )
}

fn criterion_3() -> Verdict {
    let m = TermSet::parse(3, ["x1", "x1^2", "x2*x3", "x1*x2^2*x3", "x2^3*x3"]).unwrap();
    let b = BarCode::build(&m).unwrap();
    let rows_ok = b.row_lengths(2) == [2, 1, 1, 1] && b.row_lengths(3) == [2, 3];
    let code = BarCode::from_row_lengths(&[vec![1, 1, 1, 1], vec![2, 1, 1], vec![3, 1]]).unwrap();
    let elist = code.e_list(2).unwrap();
    Verdict::new(
        rows_ok && elist.entries() == [0, 1, 0],
        format!(
            "rows {:?} {:?}, e-list {:?}",
            b.row_lengths(2),
            b.row_lengths(3),
            elist.entries()
        ),
    )
}

fn criterion_4() -> Verdict {
    let n = TermSet::parse(3, ["1", "x1", "x2", "x3"]).unwrap();
    let stars = BarCode::build(&n).unwrap().star_set().unwrap();
    let expected = TermSet::parse(3, ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]).unwrap();
    Verdict::new(stars == expected, format!("{} terms", stars.len()))
}

fn corpus_5_6() -> Vec<TermSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    (0..1000).map(|_| random_set(&mut rng, 4, 30, 6)).collect()
}

fn ideal_corpus() -> Vec<TermSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 56);
    (0..1000)
        .map(|_| random_order_ideal(&mut rng, 4, 30, 6))
        .collect()
}

fn criterion_5(corpus: &[TermSet], ideals: &[TermSet]) -> Verdict {
    let start = Instant::now();
    let mut failures = 0;
    let mut unexplained = 0;
    for m in corpus {
        let b = BarCode::build(m).unwrap();
        let elists_ok = m
            .iter()
            .enumerate()
            .all(|(c, t)| &b.e_list(c).unwrap().to_term() == t);
        if b.decode() != *m || !elists_ok {
            failures += 1;
            if is_order_ideal(m) {
                unexplained += 1;
            }
        }
    }
    let ideal_failures = ideals
        .iter()
        .filter(|n| {
            let b = BarCode::build(n).unwrap();
            b.decode() != **n
                || n.iter()
                    .enumerate()
                    .any(|(c, t)| &b.e_list(c).unwrap().to_term() != t)
        })
        .count();
    let elapsed = start.elapsed();
    let explained = unexplained == 0 && ideal_failures == 0 && elapsed < Duration::from_secs(30);
    Verdict {
        pass: failures == 0 && explained,
        explained,
        detail: format!(
            "{failures}/{} random sets fail the round trip (all non-order-ideals: {}); \
             order ideals {}/{} round trip; {:?}",
            corpus.len(),
            unexplained == 0,
            ideals.len() - ideal_failures,
            ideals.len(),
            elapsed
        ),
    }
}

fn criterion_6(corpus: &[TermSet], ideals: &[TermSet]) -> Verdict {
    let mut disagreements = 0;
    let mut unexplained = 0;
    for m in corpus {
        let b = BarCode::build(m).unwrap();
        let closed = is_order_ideal(m);
        if b.is_admissible() != closed {
            disagreements += 1;
            // Only admissible codes of non-ideals are expected.
            if closed || !is_order_ideal(&b.decode()) {
                unexplained += 1;
            }
        }
        if b.is_admissible() != is_order_ideal(&b.decode()) {
            unexplained += 1;
        }
    }
    let ideals_ok = ideals
        .iter()
        .all(|n| BarCode::build(n).unwrap().is_admissible());
    let explained = unexplained == 0 && ideals_ok;
    Verdict {
        pass: disagreements == 0 && explained,
        explained,
        detail: format!(
            "{disagreements}/{} disagreements (all admissible codes of non-order-ideals: {}); \
             admissible <=> decode is an order ideal on every code; order ideals admissible: {}",
            corpus.len(),
            unexplained == 0,
            ideals_ok
        ),
    }
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut sets = 0;
    let mut checks = 0usize;
    let mut bad = 0usize;
    for _ in 0..500 {
        let u = random_set(&mut rng, 4, 25, 5);
        let table = JanetTable::new(&u).unwrap();
        for a in table.annotations() {
            checks += 2;
            bad += usize::from(a.multiplicative != oracle::multiplicative_vars(&u, &a.term));
            bad += usize::from(a.nmp != oracle::nmp(&u, &a.term));
            for p in &a.nmp {
                checks += 1;
                let fast = table.divisors_for_nm_product(&a.term, *p).unwrap();
                let slow = oracle::janet_like_divisors(&u, &a.term.mul_var(p.var, p.exp));
                bad += usize::from(fast != slow);
            }
        }
        sets += 1;
    }
    Verdict::new(
        bad == 0,
        format!("{sets} sets, {checks} comparisons, {bad} disagreements"),
    )
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut violations = 0;
    let mut probes = 0usize;
    for _ in 0..100 {
        let u = random_set(&mut rng, 3, 8, 3);
        let done = barjanet::complete(&u).unwrap();
        let table = JanetTable::new(&done).unwrap();
        let n = done.nvars();
        for w in box_terms(&vec![8; n])
            .into_iter()
            .filter(|w| w.degree() <= 8)
        {
            probes += 1;
            let janet = table.janet_divisors(&w);
            let like = table.janet_like_divisors(&w);
            if janet.len() > 1 || janet.iter().any(|t| !like.contains(t)) {
                violations += 1;
            }
        }
    }
    Verdict::new(
        violations == 0,
        format!("100 completed sets, {probes} terms, {violations} violations"),
    )
}

fn criterion_9() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut bad = 0;
    for _ in 0..200 {
        let u = random_set(&mut rng, 3, 10, 4);
        let done = barjanet::complete(&u).unwrap();
        let bound = u.bounding_box();
        let inside = done
            .iter()
            .all(|t| t.exponents().iter().zip(&bound).all(|(e, b)| e <= b));
        let probe: Vec<u32> = bound.iter().map(|b| b + 2).collect();
        let same_ideal = box_terms(&probe)
            .iter()
            .all(|w| in_ideal(&u, w) == in_ideal(&done, w));
        let ok = is_complete(&done).unwrap().complete
            && oracle::is_complete(&done)
            && u.is_subset(&done)
            && inside
            && same_ideal;
        bad += usize::from(!ok);
    }
    let u = TermSet::parse(3, ["x2", "x1*x3"]).unwrap();
    let (done, report) = barjanet::complete_with_report(&u).unwrap();
    let fixed = report.added == [term(3, "x2*x3")]
        && done == TermSet::parse(3, ["x2", "x1*x3", "x2*x3"]).unwrap();
    Verdict::new(
        bad == 0 && fixed,
        format!("200 random sets, {bad} failures; fixed case {fixed}"),
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(-10..=10)),
        BigInt::from(rng.gen_range(1..=10)),
    )
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> Polynomial {
    let k = rng.gen_range(0..=5);
    Polynomial::from_terms(
        n,
        (0..k).map(|_| {
            let t = Term::new((0..n).map(|_| rng.gen_range(0..=4)).collect()).unwrap();
            (random_rational(rng), t)
        }),
    )
}

fn criterion_10() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let start = Instant::now();
    let mut bad = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let size = rng.gen_range(1..=10);
        let mut pts: BTreeSet<Vec<Rational>> = BTreeSet::new();
        while pts.len() < size {
            pts.insert((0..n).map(|_| random_rational(&mut rng)).collect());
        }
        let points = PointSet::new(n, pts.into_iter().collect()).unwrap();
        let comp = compute_basis(&points).unwrap();
        let vanish = comp
            .basis
            .iter()
            .all(|f| points.values(f).unwrap().iter().all(Zero::is_zero));
        let leading: Vec<Term> = comp
            .basis
            .iter()
            .map(|f| f.leading_term().unwrap().clone())
            .collect();
        let leading = TermSet::new(n, leading).unwrap();
        let complete = is_complete(&leading).unwrap().complete && leading == comp.completed;

        let interp = Interpolator::new(&comp.escalier, &points).unwrap();
        let (f, g) = (random_poly(&mut rng, n), random_poly(&mut rng, n));
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let nf = |p: &Polynomial| interp.normal_form(p).unwrap();
        let linear = nf(&f.scale(&a).add(&g.scale(&b))) == nf(&f).scale(&a).add(&nf(&g).scale(&b));
        let idempotent = nf(&nf(&f)) == nf(&f);
        bad += usize::from(!(vanish && complete && linear && idempotent));
    }
    let elapsed = start.elapsed();
    Verdict::new(
        bad == 0 && elapsed < Duration::from_secs(60),
        format!("100 point sets, {bad} failures, {elapsed:?}"),
    )
}

fn main() {
    let corpus = corpus_5_6();
    let ideals = ideal_corpus();
    let verdicts = [
        ("nmp table reproduction", criterion_1()),
        ("nm-product divisors", criterion_2()),
        ("bar code rows and e-list", criterion_3()),
        ("star set", criterion_4()),
        ("decode(build(M)) = M", criterion_5(&corpus, &ideals)),
        ("admissible <=> order ideal", criterion_6(&corpus, &ideals)),
        ("fast paths vs oracles", criterion_7()),
        ("janet cone properties", criterion_8()),
        ("completion soundness", criterion_9()),
        ("points pipeline", criterion_10()),
    ];
    let mut unexpected = 0;
    for (i, (name, v)) in verdicts.iter().enumerate() {
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", i + 1, v.detail);
        if !v.pass && !v.explained {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}

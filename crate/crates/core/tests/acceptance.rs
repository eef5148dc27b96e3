//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongdiv::charp::SPoly;
use strongdiv::ideal::{enumerate_strongly_divisorial, WindowMonoid};
use strongdiv::props::{irred_2d, run_harness, HarnessConfig, PROPERTIES};
use strongdiv::rees::{
    default_conductor_samples, generators, swap, verify_generator_identities, ReesTower, TMono, TWord,
};
use strongdiv::s21::QMonoid;
use strongdiv::weight::{in_a, in_weight_ge, win_strip, WLaurent, WTerm, Weight};
use strongdiv::Rat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

/// Sums of generators up to `bound`, by breadth-first search from 0.
fn bfs_elements(m: &QMonoid, bound: &Rat) -> BTreeSet<Rat> {
    let gens: Vec<Rat> = (0..).map_while(|i| m.generator(i).filter(|g| g <= bound)).collect();
    let mut seen = BTreeSet::from([Rat::zero()]);
    let mut frontier = vec![Rat::zero()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = x + g;
                if y <= *bound && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let m = QMonoid::perturbed_naturals();
    let twelve = Rat::from_int(12);
    let oracle = bfs_elements(&m, &twelve);
    let mut checked = 0;
    for a in 0..=12 * 64 {
        let q = Rat::frac(a, 64);
        let got = m.contains(&q).map_err(|e| e.to_string())?;
        ensure(got == oracle.contains(&q), || format!("disagreement at {q}"))?;
        checked += 1;
    }
    for q in ["2", "5", "4", "6", "7", "8", "9", "10", "11", "12"] {
        ensure(m.contains(&r(q)).unwrap(), || format!("{q} should be a member"))?;
    }
    for q in ["1", "3"] {
        ensure(!m.contains(&r(q)).unwrap(), || format!("{q} should not be a member"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} dyadic values agree with BFS in {elapsed:.2?}"))
}

fn ac2() -> Outcome {
    let m = QMonoid::perturbed_naturals();
    let mut found = Vec::new();
    for s in ["0", "2", "5/2", "4", "5", "13/4"] {
        let s = r(s);
        let bound = QMonoid::conductor_gap_proof_bound(&s);
        let n = m.conductor_gap_witness(&s, bound as u32).map_err(|e| e.to_string())?;
        let n = n.ok_or_else(|| format!("no n <= {bound} for s = {s}"))?;
        ensure(!m.contains(&(&s + &Rat::inv_pow2(n))).unwrap(), || {
            format!("witness for {s} is wrong")
        })?;
        found.push(format!("{s}:n={n}<={bound}"));
    }
    Ok(found.join(" "))
}

fn ac3() -> Outcome {
    let sweep = QMonoid::perturbed_naturals()
        .divisorial_gap_sweep(&Rat::from_int(8), 4, &Rat::from_int(16))
        .map_err(|e| e.to_string())?;
    ensure(!sweep.vacuous, || "no non-members checked".into())?;
    ensure(sweep.failures.is_empty(), || {
        format!("no witness for {:?}", sweep.failures)
    })?;
    Ok(format!("{} non-members, all with witnesses s <= 16", sweep.checked))
}

fn random_f2_poly(rng: &mut ChaCha8Rng, m: &QMonoid, lows: &[Rat]) -> SPoly {
    let low = lows[rng.gen_range(0..lows.len())].clone();
    let extra = rng.gen_range(0..=2);
    let mut terms = vec![(low.clone(), 1)];
    for _ in 0..extra {
        let d = Rat::frac(rng.gen_range(1..=48), 1 << rng.gen_range(0..=4));
        terms.push((&low + &d, 1));
    }
    let f = SPoly::new(2, terms).expect("p = 2");
    debug_assert!(m.contains(f.lowest().unwrap().0).unwrap());
    f
}

fn ac4() -> Outcome {
    let m = QMonoid::perturbed_naturals();
    let lows = m.elements_up_to(&Rat::from_int(6));
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut max_n = 0;
    for i in 0..50 {
        let f = random_f2_poly(&mut rng, &m, &lows);
        let assoc = f.monomial_associate(&m, 12).map_err(|e| e.to_string())?;
        let a = assoc.ok_or_else(|| format!("#{i} {f}: no n <= 12"))?;
        max_n = max_n.max(a.n);
        // f^{2^n} by n successive squarings.
        let mut sq = f.clone();
        for _ in 0..a.n {
            sq = sq.multiply(&sq).unwrap();
        }
        ensure(f.frobenius_power(a.n as i64).unwrap() == sq, || {
            format!("#{i} {f}: Frobenius disagrees")
        })?;
        for extra in 0..=2 {
            let n = a.n as i64 + extra;
            let k = 1u64 << n;
            if k <= 64 {
                ensure(f.frobenius_power(n).unwrap() == f.pow(k), || {
                    format!("#{i} {f}: f^{k} disagrees")
                })?;
            }
        }
    }
    Ok(format!("50 polynomials, largest n = {max_n}"))
}

fn ac5() -> Outcome {
    let report = run_harness(&HarnessConfig::default()).map_err(|e| e.to_string())?;
    ensure(report.semigroups.len() >= 14, || "too few semigroups".into())?;
    ensure(report.semigroups.iter().all(|g| g[0] <= 8), || {
        "multiplicity above 8".into()
    })?;
    for p in PROPERTIES {
        let t = report.tally(p).ok_or_else(|| format!("{p} missing"))?;
        ensure(t.violations == 0, || {
            format!("{p}: {} violations, e.g. {:?}", t.violations, report.counterexamples)
        })?;
        ensure(t.checked > 0 || p == "krull-boundary", || {
            format!("{p}: nothing checked")
        })?;
    }
    let n = Arc::new(WindowMonoid::numerical(&[1]).unwrap());
    ensure(enumerate_strongly_divisorial(&n, 12).unwrap().is_empty(), || {
        "N has a strongly divisorial ideal".into()
    })?;
    let counts: Vec<String> = report
        .tallies
        .iter()
        .map(|t| format!("{}={}", t.property, t.checked))
        .collect();
    Ok(format!(
        "{} semigroups, zero violations ({})",
        report.semigroups.len(),
        counts.join(" ")
    ))
}

fn ac6() -> Outcome {
    let rep = irred_2d(&[2, 3], &[2, 3]).map_err(|e| e.to_string())?;
    ensure(rep.passed(), || format!("{rep:?}"))?;
    Ok(format!("strong {:?}, divisorial {:?}", rep.strong, rep.divisorial))
}

fn random_laurent(rng: &mut ChaCha8Rng) -> WLaurent {
    let k = rng.gen_range(1..=4);
    WLaurent::from_terms((0..k).map(|_| {
        let coef = Rat::from_int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let exps = (1..=4u32).filter_map(|v| {
            let e = rng.gen_range(-2i64..=3);
            (e != 0 && rng.gen_bool(0.6)).then_some((v, e))
        });
        WTerm {
            coef,
            exps: exps.collect(),
        }
    }))
}

fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut strips = 0;
    for i in 0..100 {
        let (f, g) = (random_laurent(&mut rng), random_laurent(&mut rng));
        let fg = &f * &g;
        ensure(fg.win() == &f.win() * &g.win(), || format!("#{i}: win({f} * {g})"))?;
        let sum = match (f.weight(), g.weight()) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(a + b),
            _ => Weight::Infinite,
        };
        ensure(fg.weight() == sum, || format!("#{i}: weight({f} * {g})"))?;
        for h in [&f, &fg] {
            let seq = win_strip(h, 32).unwrap();
            ensure(seq.windows(2).all(|p| p[0].weight < p[1].weight), || {
                format!("#{i}: strip of {h}")
            })?;
            strips += 1;
        }
    }
    let w = WLaurent::parse("X1*X2^-2").unwrap();
    ensure(w.weight() == Weight::Finite(Rat::zero()), || {
        "witness weight is not 0".into()
    })?;
    ensure(in_weight_ge(&w, &Rat::zero()), || "witness not in weight >= 0".into())?;
    ensure(!in_a(&w), || "witness lies in A".into())?;
    Ok(format!(
        "100 pairs multiplicative, {strips} strips increasing, X1*X2^-2 has weight 0 and is outside A"
    ))
}

fn ac8() -> Outcome {
    let start = Instant::now();
    let ids = verify_generator_identities(4).map_err(|e| e.to_string())?;
    ensure(ids.len() == 15 && ids.iter().all(|c| c.holds), || {
        "identity failure".into()
    })?;
    ensure(ids.iter().any(|c| c.parent.is_none() && c.lhs == TMono::a()), || {
        "a = T_0 T_1 missing".into()
    })?;
    let mut swaps = 0;
    for n in 1..=4 {
        let gens: BTreeSet<TMono> = generators(n).into_iter().map(|(_, e)| e).collect();
        for plen in 0..n {
            let prefixes: Vec<Vec<bool>> = if plen == 0 {
                vec![Vec::new()]
            } else {
                TWord::all_of_length(plen)
                    .into_iter()
                    .map(|w| w.bits().to_vec())
                    .collect()
            };
            for prefix in prefixes {
                let moved: BTreeSet<TMono> = gens.iter().map(|g| swap(&prefix, g)).collect();
                ensure(moved == gens, || {
                    format!("swap at {prefix:?} does not permute level {n}")
                })?;
                swaps += 1;
            }
        }
    }
    let t = ReesTower::default();
    let mut colon_checked = 0;
    for n in 1..=2 {
        let rep = t.colon_collapse_check(n, 4).map_err(|e| e.to_string())?;
        ensure(rep.violations.is_empty(), || format!("level {n}: {:?}", rep.violations))?;
        colon_checked += rep.checked;
    }
    let mut samples = 0;
    for n in 1..=4 {
        let res = t
            .conductor_check(n, &default_conductor_samples(n))
            .map_err(|e| e.to_string())?;
        ensure(res.iter().all(|x| x.member), || {
            format!("level {n}: conductor sample fails")
        })?;
        samples += res.len();
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "15 identities, {swaps} swaps, {colon_checked} colon monomials, {samples} conductor samples in {elapsed:.2?}"
    ))
}

fn ac9() -> Outcome {
    let (q_max, level, bound) = (Rat::from_int(8), 4, Rat::from_int(16));
    let mutated = QMonoid::shifted_naturals()
        .divisorial_gap_sweep(&q_max, level, &bound)
        .map_err(|e| e.to_string())?;
    ensure(mutated.vacuous || !mutated.failures.is_empty(), || {
        format!(
            "mutated family still passes non-vacuously on {} values",
            mutated.checked
        )
    })?;
    // Dropping g_0 as well leaves <2,3>, where q = 1 has no witness.
    let two_three = QMonoid::finite(vec![r("2"), r("3")]).unwrap();
    let other = two_three
        .divisorial_gap_sweep(&q_max, level, &bound)
        .map_err(|e| e.to_string())?;
    ensure(!other.failures.is_empty(), || "<2,3> control did not flip".into())?;
    Ok(format!(
        "{{n+1}} gives N: precondition set empty, flagged vacuous; <2,3> fails at {:?}",
        other.failures.iter().map(Rat::to_string).collect::<Vec<_>>()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "dyadic membership vs BFS", ac1),
        ("AC2", "s + 1/2^n gaps within the proof bound", ac2),
        ("AC3", "divisorial gap witnesses", ac3),
        ("AC4", "monomial associates after Frobenius", ac4),
        ("AC5", "ideal property harness", ac5),
        ("AC6", "2D irredundant intersection", ac6),
        ("AC7", "weights and initial forms", ac7),
        ("AC8", "Rees tower identities, swaps, colon, conductor", ac8),
        ("AC9", "negative control", ac9),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let (status, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{id} {status} {name} [{:.2?}]: {detail}", start.elapsed());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

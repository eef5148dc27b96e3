//! Seeded property harness for star-operation identities on window monoids.

use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::ideal::{enumerate_ideals, maximal_elements, Point, SgIdeal, WindowMonoid};
use crate::numerical::NumericalSemigroup;

/// Names of the checked properties, in report order.
pub const PROPERTIES: [&str; 8] = [
    "closure-axioms",
    "t-equals-v",
    "strdiv-lemma",
    "maxstrdiv-prime",
    "divrad",
    "radical-of-strong",
    "dichotomy",
    "krull-boundary",
];

#[derive(Clone, Debug, Serialize)]
pub struct HarnessConfig {
    pub seed: u64,
    pub random_semigroups: usize,
    pub ideals_per_semigroup: usize,
    pub max_multiplicity: u64,
    pub max_conductor: u64,
    /// Enumeration covers ideals with minimum at most `multiplicity + slack`.
    pub enumeration_slack: i64,
    pub include_fixed: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            random_semigroups: 10,
            ideals_per_semigroup: 20,
            max_multiplicity: 8,
            max_conductor: 16,
            enumeration_slack: 2,
            include_fixed: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: String,
    pub semigroup: Vec<u64>,
    pub ideal: Vec<Vec<i64>>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Tally {
    pub property: String,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    pub config: HarnessConfig,
    pub semigroups: Vec<Vec<u64>>,
    pub tallies: Vec<Tally>,
    /// Smallest violation per property, by generator count then size.
    pub counterexamples: Vec<Violation>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.violations == 0)
    }

    pub fn tally(&self, property: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.property == property)
    }
}

/// `<2,3>`, `<3,4,5>`, `<2,5>` and `N`.
pub fn fixed_semigroups() -> Vec<NumericalSemigroup> {
    [&[2u64, 3][..], &[3, 4, 5], &[2, 5], &[1]]
        .iter()
        .map(|g| NumericalSemigroup::new(g).expect("valid"))
        .collect()
}

/// A random numerical semigroup with multiplicity in `2..=max_mult` and
/// conductor at most `max_conductor`.
pub fn random_semigroup(rng: &mut impl Rng, max_mult: u64, max_conductor: u64) -> NumericalSemigroup {
    loop {
        let m = rng.gen_range(2..=max_mult.max(2));
        let extra = rng.gen_range(1..=3);
        let mut gens = vec![m];
        for _ in 0..extra {
            gens.push(rng.gen_range(m + 1..=3 * m));
        }
        if gens.iter().fold(0u64, |a, &g| a.gcd(&g)) != 1 {
            continue;
        }
        let s = NumericalSemigroup::new(&gens).expect("gcd checked");
        if s.conductor() <= max_conductor {
            return s;
        }
    }
}

/// `count` semigroups drawn with [`random_semigroup`] from a seeded stream.
pub fn seeded_semigroups(seed: u64, count: usize, max_mult: u64, max_conductor: u64) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_semigroup(&mut rng, max_mult, max_conductor))
        .collect()
}

fn random_ideal(rng: &mut impl Rng, s: &Arc<WindowMonoid>) -> SgIdeal {
    let c = s.conductor()[0];
    let m = s.multiplicity()[0];
    let k = rng.gen_range(1..=3);
    let gens: Vec<Point> = (0..k).map(|_| [rng.gen_range(0..=3 * c + m), 0]).collect();
    SgIdeal::from_generators(s, &gens).expect("nonempty")
}

struct Collector {
    tallies: Vec<Tally>,
    violations: Vec<Violation>,
}

impl Collector {
    fn new() -> Self {
        Self {
            tallies: PROPERTIES
                .iter()
                .map(|p| Tally {
                    property: p.to_string(),
                    checked: 0,
                    violations: 0,
                })
                .collect(),
            violations: Vec::new(),
        }
    }

    fn record(
        &mut self,
        property: &str,
        s: &NumericalSemigroup,
        e: Option<&SgIdeal>,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        let t = self
            .tallies
            .iter_mut()
            .find(|t| t.property == property)
            .expect("known property");
        t.checked += 1;
        if !ok {
            t.violations += 1;
            self.violations.push(Violation {
                property: property.into(),
                semigroup: s.generators().to_vec(),
                ideal: e
                    .map(|e| e.generators().into_iter().map(|p| vec![p[0]]).collect())
                    .unwrap_or_default(),
                detail: detail(),
            });
        }
    }
}

fn check_semigroup(
    col: &mut Collector,
    s: &NumericalSemigroup,
    rng: &mut ChaCha8Rng,
    cfg: &HarnessConfig,
) -> Result<()> {
    let mono = Arc::new(WindowMonoid::new(vec![s.clone()])?);

    for _ in 0..cfg.ideals_per_semigroup {
        let e = random_ideal(rng, &mono);
        let ev = e.v_closure();
        let f = e.union(&random_ideal(rng, &mono))?;
        let g = [rng.gen_range(-5..=5), 0];
        let ok = e.is_subset(&ev)
            && ev.v_closure() == ev
            && ev.is_subset(&f.v_closure())
            && e.translate(g).v_closure() == ev.translate(g);
        col.record("closure-axioms", s, Some(&e), ok, || {
            format!("with F = {f:?}, shift {}", g[0])
        });
        let t = e.t_closure()?;
        col.record("t-equals-v", s, Some(&e), t == ev, || format!("t-closure {t:?}"));
    }

    let m = SgIdeal::maximal(&mono);
    let strong = m.is_strong()?;
    let inv = m.is_t_invertible()?;
    col.record("dichotomy", s, Some(&m), strong != inv, || {
        format!("strong {strong}, t-invertible {inv}")
    });

    let bound = s.multiplicity() as i64 + cfg.enumeration_slack;
    let ideals = enumerate_ideals(&mono, bound)?;
    let mut strdiv = Vec::new();
    for e in &ideals {
        let ev = e.v_closure();
        let t = e.t_closure()?;
        col.record("t-equals-v", s, Some(e), t == ev, || format!("t-closure {t:?}"));
        let is_div = ev == *e;
        let is_strong = e.is_strong()?;
        if is_strong && is_div {
            strdiv.push(e.clone());
        }
        if is_strong {
            let rad = e.radical()?;
            let ok = rad.is_strong()?;
            col.record("radical-of-strong", s, Some(e), ok, || {
                format!("radical {rad:?} is not strong")
            });
            // x in (S:E) \ E with x in S; E is integral so this is S \ E.
            for x in 0..=e.set().hi()[0] {
                let p = [x, 0];
                if !mono.contains(p) || e.contains(p) {
                    continue;
                }
                let j = e.colon_in_s(p);
                let ok = j.is_proper() && j.is_strong()?;
                col.record("strdiv-lemma", s, Some(e), ok, || format!("(E :_S {x}) = {j:?}"));
            }
        }
        if is_div {
            let rad = e.radical()?;
            let mut contains_power = false;
            for k in 1..=5 {
                if rad.power(k)?.is_subset(e) {
                    contains_power = true;
                    break;
                }
            }
            if contains_power {
                let ok = rad.is_divisorial();
                col.record("divrad", s, Some(e), ok, || {
                    format!("radical {rad:?} is not divisorial")
                });
            }
        }
    }
    for e in maximal_elements(&strdiv) {
        let w = e.primality_witness()?;
        col.record("maxstrdiv-prime", s, Some(&e), w.is_none(), || {
            format!("not prime: {w:?}")
        });
    }
    if s.is_naturals() {
        col.record("krull-boundary", s, None, strdiv.is_empty(), || {
            format!("{} strongly divisorial ideals", strdiv.len())
        });
    }
    Ok(())
}

/// Runs every property on the fixed semigroups and on
/// `cfg.random_semigroups` seeded random ones.
pub fn run_harness(cfg: &HarnessConfig) -> Result<HarnessReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut semigroups = if cfg.include_fixed {
        fixed_semigroups()
    } else {
        Vec::new()
    };
    for _ in 0..cfg.random_semigroups {
        semigroups.push(random_semigroup(&mut rng, cfg.max_multiplicity, cfg.max_conductor));
    }
    run_on(cfg, &semigroups, &mut rng)
}

/// Runs every property on the given semigroups.
pub fn run_harness_on(cfg: &HarnessConfig, semigroups: &[NumericalSemigroup]) -> Result<HarnessReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    run_on(cfg, semigroups, &mut rng)
}

fn run_on(cfg: &HarnessConfig, semigroups: &[NumericalSemigroup], rng: &mut ChaCha8Rng) -> Result<HarnessReport> {
    let mut col = Collector::new();
    for s in semigroups {
        check_semigroup(&mut col, s, rng, cfg)?;
    }
    let mut counterexamples = Vec::new();
    for p in PROPERTIES {
        let best = col.violations.iter().filter(|v| v.property == p).min_by_key(|v| {
            (
                v.ideal.len(),
                v.ideal.iter().flatten().map(|x| x.abs()).max().unwrap_or(0),
                v.semigroup.clone(),
            )
        });
        counterexamples.extend(best.cloned());
    }
    Ok(HarnessReport {
        config: cfg.clone(),
        semigroups: semigroups.iter().map(|s| s.generators().to_vec()).collect(),
        tallies: col.tallies,
        counterexamples,
    })
}

/// Strong and divisorial status of `P1 = M1 x S2`, `P2 = S1 x M2` and
/// `I = P1 n P2` in a product monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrredReport {
    pub irredundant: bool,
    pub p1_prime: bool,
    pub p2_prime: bool,
    pub strong: [bool; 3],
    pub divisorial: [bool; 3],
    /// `I` strong iff both primes strong.
    pub strong_equivalence: bool,
    /// `I` divisorial iff both primes divisorial.
    pub divisorial_equivalence: bool,
    /// `I` divisorial and `P1`, `P2` essential imply both primes divisorial.
    pub essential_primes_divisorial: bool,
}

impl IrredReport {
    pub fn passed(&self) -> bool {
        self.irredundant
            && self.p1_prime
            && self.p2_prime
            && self.strong_equivalence
            && self.divisorial_equivalence
            && self.essential_primes_divisorial
    }
}

pub fn irred_2d(g1: &[u64], g2: &[u64]) -> Result<IrredReport> {
    let mono = Arc::new(WindowMonoid::product(g1, g2)?);
    let s1 = NumericalSemigroup::new(g1)?;
    let s2 = NumericalSemigroup::new(g2)?;
    let p1_gens: Vec<Point> = s1.generators().iter().map(|&g| [g as i64, 0]).collect();
    let p2_gens: Vec<Point> = s2.generators().iter().map(|&g| [0, g as i64]).collect();
    let p1 = SgIdeal::from_generators(&mono, &p1_gens)?;
    let p2 = SgIdeal::from_generators(&mono, &p2_gens)?;
    let i = p1.intersect(&p2)?;
    let irredundant = !p1.is_subset(&p2) && !p2.is_subset(&p1);
    let strong = [i.is_strong()?, p1.is_strong()?, p2.is_strong()?];
    let divisorial = [i.is_divisorial(), p1.is_divisorial(), p2.is_divisorial()];
    Ok(IrredReport {
        irredundant,
        p1_prime: p1.is_prime()?,
        p2_prime: p2.is_prime()?,
        strong,
        divisorial,
        strong_equivalence: strong[0] == (strong[1] && strong[2]),
        divisorial_equivalence: divisorial[0] == (divisorial[1] && divisorial[2]),
        essential_primes_divisorial: !(divisorial[0] && irredundant) || (divisorial[1] && divisorial[2]),
    })
}

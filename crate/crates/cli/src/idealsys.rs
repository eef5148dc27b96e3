use std::sync::Arc;

use clap::Subcommand;
use serde::Deserialize;
use serde_json::json;
use strongdiv::ideal::{enumerate_strongly_divisorial, maximal_elements, MonoidJson, SgIdeal, WindowMonoid};
use strongdiv::numerical::NumericalSemigroup;
use strongdiv::props::{irred_2d, run_harness_on, seeded_semigroups, HarnessConfig, PROPERTIES};
use strongdiv::{Error, Result};

use crate::report::{status_of, Sink, Status};
use crate::Globals;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Select {
    /// Generators of a numerical semigroup, e.g. `2,3`.
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<u64>>,
    /// Use seeded random numerical semigroups instead (see `--seed`).
    #[arg(long)]
    random: bool,
    /// How many random semigroups.
    #[arg(long, default_value_t = 10)]
    count: usize,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Product {
    #[arg(long, value_delimiter = ',')]
    gens: Option<Vec<u64>>,
    /// First factor of a product monoid.
    #[arg(long, value_delimiter = ',')]
    gens1: Option<Vec<u64>>,
    /// Second factor of a product monoid.
    #[arg(long, value_delimiter = ',')]
    gens2: Option<Vec<u64>>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// E in E_v, idempotence, monotonicity and translation for random ideals.
    ClosureAxioms(Select),
    /// t-closure agrees with v-closure.
    TEqualsV(Select),
    /// (E :_S x) is proper and strong for strong E and x in S \ E.
    StrdivLemma(Select),
    /// Maximal strongly divisorial ideals are prime.
    MaxstrdivPrime(Select),
    /// A divisorial ideal containing a power of its radical has divisorial radical.
    Divrad(Select),
    /// Radicals of strong ideals are strong.
    RadicalOfStrong(Select),
    /// The maximal ideal is exactly one of strong, t-invertible.
    Dichotomy(Select),
    /// Every property at once.
    Harness(Select),
    /// Strong and divisorial behaviour of M1 x M2 = (M1 x S2) n (S1 x M2).
    Irred2d {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        gens1: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        gens2: Vec<u64>,
    },
    /// List strongly divisorial ideals with an element of size at most `--bound` (default 6).
    Enumerate(Product),
    /// Closures and tests for one ideal: {"semigroup":{...},"ideal":{"generators":[[3],[4]]}}.
    Compute { input: String },
}

fn semigroups(sel: &Select, g: &Globals) -> Result<Vec<NumericalSemigroup>> {
    match (&sel.gens, sel.random) {
        (Some(gens), false) => Ok(vec![NumericalSemigroup::new(gens)?]),
        (None, true) => Ok(seeded_semigroups(g.seed, sel.count, 8, 16)),
        _ => Err(Error::Domain("give exactly one of --gens or --random".into())),
    }
}

fn monoid_of(p: &Product) -> Result<WindowMonoid> {
    match (&p.gens, &p.gens1, &p.gens2) {
        (Some(g), None, None) => WindowMonoid::numerical(g),
        (None, Some(a), Some(b)) => WindowMonoid::product(a, b),
        _ => Err(Error::Domain("give --gens, or both --gens1 and --gens2".into())),
    }
}

fn property_reports(property: &str, sel: &Select, g: &Globals, sink: &mut Sink) -> Result<()> {
    let cfg = HarnessConfig {
        seed: g.seed,
        ..HarnessConfig::default()
    };
    for s in semigroups(sel, g)? {
        let report = run_harness_on(&cfg, std::slice::from_ref(&s))?;
        let names: Vec<&str> = if property == "harness" {
            PROPERTIES.to_vec()
        } else {
            vec![property]
        };
        let mut witness = json!({"semigroup": s.generators()});
        let mut ok = true;
        for name in names {
            let t = report.tally(name).expect("known property");
            ok &= t.violations == 0;
            witness[name] = json!({
                "checked": t.checked,
                "violations": t.violations,
                "vacuous": t.checked == 0,
                "counterexample": report.counterexamples.iter().find(|v| v.property == name),
            });
        }
        let mono = Arc::new(WindowMonoid::new(vec![s.clone()])?);
        match property {
            "dichotomy" => {
                let m = SgIdeal::maximal(&mono);
                witness["strong"] = json!(m.is_strong()?);
                witness["t_invertible"] = json!(m.is_t_invertible()?);
            }
            "maxstrdiv-prime" => {
                let bound = s.multiplicity() as i64 + cfg.enumeration_slack;
                let all = enumerate_strongly_divisorial(&mono, bound)?;
                let maximal: Vec<_> = maximal_elements(&all).iter().map(SgIdeal::to_json).collect();
                witness["maximal"] = json!(maximal);
                witness["maximal_is_m"] =
                    json!(maximal.len() == 1 && maximal_elements(&all)[0] == SgIdeal::maximal(&mono));
            }
            _ => {}
        }
        sink.push(
            format!("idealsys.{property}"),
            status_of(ok),
            witness,
            json!({"seed": g.seed, "ideals_per_semigroup": cfg.ideals_per_semigroup, "enumeration_slack": cfg.enumeration_slack}),
        );
    }
    Ok(())
}

#[derive(Deserialize)]
struct ComputeInput {
    semigroup: MonoidJson,
    ideal: IdealGens,
}

#[derive(Deserialize)]
struct IdealGens {
    generators: Vec<Vec<i64>>,
}

pub fn run(args: &Args, g: &Globals, sink: &mut Sink) -> Result<()> {
    match &args.cmd {
        Cmd::ClosureAxioms(s) => property_reports("closure-axioms", s, g, sink),
        Cmd::TEqualsV(s) => property_reports("t-equals-v", s, g, sink),
        Cmd::StrdivLemma(s) => property_reports("strdiv-lemma", s, g, sink),
        Cmd::MaxstrdivPrime(s) => property_reports("maxstrdiv-prime", s, g, sink),
        Cmd::Divrad(s) => property_reports("divrad", s, g, sink),
        Cmd::RadicalOfStrong(s) => property_reports("radical-of-strong", s, g, sink),
        Cmd::Dichotomy(s) => property_reports("dichotomy", s, g, sink),
        Cmd::Harness(s) => property_reports("harness", s, g, sink),
        Cmd::Irred2d { gens1, gens2 } => {
            let r = irred_2d(gens1, gens2)?;
            sink.push(
                "idealsys.irred2d",
                status_of(r.passed()),
                serde_json::to_value(&r).expect("plain data"),
                json!({"gens1": gens1, "gens2": gens2}),
            );
            Ok(())
        }
        Cmd::Enumerate(p) => {
            let mono = Arc::new(monoid_of(p)?);
            let bound = g.bound.unwrap_or(6);
            let all = enumerate_strongly_divisorial(&mono, bound)?;
            let maximal = maximal_elements(&all);
            sink.push(
                "idealsys.enumerate",
                Status::Pass,
                json!({
                    "monoid": MonoidJson::of(&mono),
                    "count": all.len(),
                    "ideals": all.iter().map(SgIdeal::to_json).collect::<Vec<_>>(),
                    "maximal": maximal.iter().map(SgIdeal::to_json).collect::<Vec<_>>(),
                }),
                json!({"min_bound": bound}),
            );
            Ok(())
        }
        Cmd::Compute { input } => {
            let inp: ComputeInput = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
            let mono = Arc::new(inp.semigroup.build()?);
            let gens = inp
                .ideal
                .generators
                .iter()
                .map(|c| mono.point(c))
                .collect::<Result<Vec<_>>>()?;
            let e = SgIdeal::from_generators(&mono, &gens)?;
            let proper = e.is_proper();
            let mut w = json!({
                "ideal": e.to_json(),
                "dual": e.dual().to_json(),
                "v_closure": e.v_closure().to_json(),
                "t_closure": e.t_closure()?.to_json(),
                "divisorial": e.is_divisorial(),
                "t_invertible": e.is_t_invertible()?,
                "integral": e.is_integral(),
                "proper": proper,
            });
            if e.is_integral() {
                w["radical"] = json!(e.radical()?.to_json());
            }
            if proper {
                w["strong"] = json!(e.is_strong()?);
                w["strongly_divisorial"] = json!(e.is_strongly_divisorial()?);
                w["prime"] = json!(e.is_prime()?);
            }
            sink.push("idealsys.compute", Status::Pass, w, json!({}));
            Ok(())
        }
    }
}

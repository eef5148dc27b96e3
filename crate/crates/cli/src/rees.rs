use std::collections::BTreeSet;

use clap::Subcommand;
use serde_json::json;
use strongdiv::rees::{
    default_conductor_samples, expand, generators, swap, verify_generator_identities, ReesTower, TMono, TWord,
    MAX_LEVEL,
};
use strongdiv::{Error, Result};

use crate::report::{status_of, Sink, Status};
use crate::Globals;

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// T_w as a^d times a Laurent monomial in the free indeterminates.
    Expand { word: String },
    /// T_{w0} T_{w1} = T_w for |w| < n, and T_0 T_1 = a.
    Identities { n: usize },
    /// Apply the swap at `prefix` (`-` for the root swap T_0 <-> T_1).
    Swap { prefix: String, monomial: String },
    /// Membership in R_n (`--level`, default the monomial's own level).
    Member { monomial: String },
    /// The colon by T_0, T_00, ... collapses to R_n on a window (`--bound`, default 4).
    ColonCollapse { n: usize },
    /// a times each almost-integral sample lies in R_n.
    Conductor { n: usize, samples: Vec<String> },
}

fn check_level(n: usize) -> Result<()> {
    if n > MAX_LEVEL {
        return Err(Error::Resource(format!("level {n} exceeds the cap {MAX_LEVEL}")));
    }
    Ok(())
}

fn parse_prefix(p: &str) -> Result<Vec<bool>> {
    if p == "-" || p.is_empty() {
        return Ok(Vec::new());
    }
    Ok(p.parse::<TWord>()?.bits().to_vec())
}

pub fn run(cmd: &Cmd, g: &Globals, sink: &mut Sink) -> Result<()> {
    let tower = ReesTower::default();
    match cmd {
        Cmd::Expand { word } => {
            let w: TWord = word.parse()?;
            let e = expand(&w);
            sink.push(
                "rees.expand",
                Status::Pass,
                json!({"word": w, "expansion": e.to_string(), "monomial": e}),
                json!({}),
            );
        }
        Cmd::Identities { n } => {
            check_level(*n)?;
            let checks = verify_generator_identities(*n)?;
            let all = checks.iter().all(|c| c.holds);
            let list: Vec<_> = checks
                .iter()
                .map(|c| {
                    let lhs = match &c.parent {
                        None => "T_0*T_1 = a".to_string(),
                        Some(w) => format!("T_{w}0*T_{w}1 = T_{w}"),
                    };
                    json!({"identity": lhs, "holds": c.holds, "product": c.lhs.to_string()})
                })
                .collect();
            sink.push(
                "rees.identities",
                status_of(all),
                json!({"count": checks.len(), "identities": list}),
                json!({"level": n}),
            );
        }
        Cmd::Swap { prefix, monomial } => {
            let p = parse_prefix(prefix)?;
            let m: TMono = monomial.parse()?;
            let image = swap(&p, &m);
            let involution = swap(&p, &image) == m;
            let n = (p.len() + 1).max(m.level());
            check_level(n)?;
            let gens: BTreeSet<TMono> = generators(n).into_iter().map(|(_, e)| e).collect();
            let moved: BTreeSet<TMono> = gens.iter().map(|e| swap(&p, e)).collect();
            let permutes = gens == moved;
            sink.push(
                "rees.swap",
                status_of(involution && permutes),
                json!({"input": m.to_string(), "image": image.to_string(), "involution": involution, "permutes_generators": permutes}),
                json!({"prefix": prefix, "level": n}),
            );
        }
        Cmd::Member { monomial } => {
            let m: TMono = monomial.parse()?;
            let n = g.level.unwrap_or(m.level());
            check_level(n)?;
            let fact = tower.member(&m, n)?;
            sink.push(
                "rees.member",
                status_of(fact.is_some()),
                json!({"monomial": m.to_string(), "member": fact.is_some(), "factorization": fact}),
                json!({"level": n}),
            );
        }
        Cmd::ColonCollapse { n } => {
            let window = g.bound.unwrap_or(4);
            if window < 0 {
                return Err(Error::Domain(format!("window {window} is negative")));
            }
            let r = tower.colon_collapse_check(*n, window as u32)?;
            sink.push(
                "rees.colon-collapse",
                status_of(r.violations.is_empty()),
                serde_json::to_value(&r).expect("plain data"),
                json!({"level": n, "window": window}),
            );
        }
        Cmd::Conductor { n, samples } => {
            check_level(*n)?;
            let samples: Vec<TMono> = if samples.is_empty() {
                default_conductor_samples(*n)
            } else {
                samples.iter().map(|s| s.parse()).collect::<Result<_>>()?
            };
            let res = tower.conductor_check(*n, &samples)?;
            let all = res.iter().all(|r| r.member);
            let list: Vec<_> = res
                .iter()
                .map(|r| json!({"sample": r.sample.to_string(), "product": r.product.to_string(), "member": r.member}))
                .collect();
            sink.push(
                "rees.conductor",
                status_of(all),
                json!({"results": list}),
                json!({"level": n}),
            );
        }
    }
    Ok(())
}

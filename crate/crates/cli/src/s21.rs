use clap::Subcommand;
use serde_json::json;
use strongdiv::charp::SPoly;
use strongdiv::s21::{MonoidDescriptor, QMonoid};
use strongdiv::{Error, Rat, Result};

use crate::report::{Sink, Status};
use crate::Globals;

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Monoid descriptor as JSON; defaults to {"kind":"perturbed-naturals"}.
    #[arg(long)]
    monoid: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Decide membership of a rational.
    Member { q: String },
    /// Write a member as a sum of generators.
    Represent { q: String },
    /// Every large enough m/2^n is a member.
    Lemma1 { n: u32, mmax: u64 },
    /// A nonzero s with q + s outside the monoid (`--bound`, default 16).
    Lemma2Witness { q: String },
    /// s + 1/2^n leaves the monoid for large n.
    Lemma3 { s: String, nmax: Option<u32> },
    /// Derive 1 from multiples of q via 2m, 3m => m.
    Seminormal { q: String, nmax: u64 },
    /// Frobenius powers become associated to monomials.
    Ass { poly: String, p: u64, nmax: u32 },
}

fn rat(s: &str) -> Result<Rat> {
    s.parse()
}

pub fn run(args: &Args, g: &Globals, sink: &mut Sink) -> Result<()> {
    let monoid = match &args.monoid {
        None => QMonoid::perturbed_naturals(),
        Some(j) => {
            let d: MonoidDescriptor = serde_json::from_str(j).map_err(|e| Error::Parse(e.to_string()))?;
            QMonoid::from_descriptor(&d)?
        }
    };
    let desc = serde_json::to_value(monoid.descriptor()).expect("descriptor serializes");
    match &args.cmd {
        Cmd::Member { q } => {
            let q = rat(q)?;
            let rep = monoid.representation(&q)?;
            let status = if rep.is_some() { Status::Pass } else { Status::Fail };
            sink.push(
                "s21.member",
                status,
                json!({"q": q, "member": rep.is_some(), "representation": rep}),
                json!({"monoid": desc}),
            );
        }
        Cmd::Represent { q } => {
            let q = rat(q)?;
            let rep = monoid.representation(&q)?;
            let value = rep.as_ref().map(|r| r.value(&monoid));
            let status = match &value {
                Some(v) if *v == q => Status::Pass,
                _ => Status::Fail,
            };
            sink.push(
                "s21.represent",
                status,
                json!({"q": q, "representation": rep, "value": value}),
                json!({"monoid": desc}),
            );
        }
        Cmd::Lemma1 { n, mmax } => {
            let found = monoid.dyadic_threshold(*n, *mmax)?;
            // With k = n + 5 both k 2^n and k 2^n + 1 are member numerators, so
            // every numerator from (a-1)(b-1) on is one.
            let a = (*n as u128 + 5) << n;
            let proof_bound = (a - 1) * a;
            let status = if found.is_some() {
                Status::Pass
            } else {
                Status::Undecided
            };
            sink.push(
                "s21.lemma-semigroup.1",
                status,
                json!({"level": n, "threshold": found.as_ref().map(|t| t.threshold), "step": found.as_ref().map(|t| t.step.clone()), "proof_bound": proof_bound.to_string()}),
                json!({"mmax": mmax, "monoid": desc}),
            );
        }
        Cmd::Lemma2Witness { q } => {
            let q = rat(q)?;
            let bound = Rat::from_int(g.bound.unwrap_or(16));
            let s = monoid.divisorial_gap_witness(&q, &bound)?;
            let status = if s.is_some() { Status::Pass } else { Status::Undecided };
            sink.push(
                "s21.lemma-semigroup.2",
                status,
                json!({"q": q, "witness_s": s}),
                json!({"search_bound": bound, "monoid": desc}),
            );
        }
        Cmd::Lemma3 { s, nmax } => {
            let s = rat(s)?;
            let proof_bound = QMonoid::conductor_gap_proof_bound(&s);
            let nmax = nmax.unwrap_or(proof_bound as u32);
            let first = monoid.conductor_gap_witness(&s, nmax)?;
            let mut tail_members = Vec::new();
            for n in proof_bound.max(1)..=nmax as u64 {
                if monoid.contains(&(&s + &Rat::inv_pow2(n as u32)))? {
                    tail_members.push(n);
                }
            }
            let status = match (&first, tail_members.is_empty()) {
                (_, false) => Status::Fail,
                (Some(_), true) => Status::BoundedPass,
                (None, true) => Status::Undecided,
            };
            sink.push(
                "s21.lemma-semigroup.3",
                status,
                json!({"s": s, "n": first, "proof_bound": proof_bound, "members_past_proof_bound": tail_members}),
                json!({"nmax": nmax, "monoid": desc}),
            );
        }
        Cmd::Seminormal { q, nmax } => {
            let cert = monoid.seminormal_violation(&rat(q)?, *nmax)?;
            let status = if cert.violated { Status::Pass } else { Status::Undecided };
            sink.push(
                "s21.seminormal",
                status,
                serde_json::to_value(&cert).expect("plain data"),
                json!({"nmax": nmax, "monoid": desc}),
            );
        }
        Cmd::Ass { poly, p, nmax } => {
            let f = SPoly::parse(*p, poly)?;
            let assoc = f.monomial_associate(&monoid, *nmax)?;
            let frobenius_matches = assoc.as_ref().and_then(|a| {
                let k = p.checked_pow(a.n).filter(|&k| k <= 64)?;
                Some(f.frobenius_power(a.n as i64).ok()? == f.pow(k))
            });
            let status = match (&assoc, frobenius_matches) {
                (Some(_), Some(false)) => Status::Fail,
                (Some(_), _) => Status::Pass,
                (None, _) => Status::Undecided,
            };
            sink.push(
                "s21.lemma-ass",
                status,
                json!({"f": f.to_json(), "associate": assoc, "frobenius_matches_multiply": frobenius_matches}),
                json!({"nmax": nmax, "monoid": desc}),
            );
        }
    }
    Ok(())
}

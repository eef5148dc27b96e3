use clap::Subcommand;
use serde_json::json;
use strongdiv::weight::{in_a, in_weight_ge, win_strip, WLaurent, Weight};
use strongdiv::{Error, Rat, Result};

use crate::report::{status_of, Sink, Status};
use crate::Globals;

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Least weight of a term.
    Weight {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Sum of the terms of least weight.
    Win {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// h, h - win(h), ... for at most `--bound` steps (default 10).
    Strip {
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Membership in F[X] + F(X)_{>=1}.
    #[command(name = "member-A", alias = "member-a")]
    MemberA {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Membership in F(X)_{>=q}.
    MemberGe {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

pub fn run(cmd: &Cmd, g: &Globals, sink: &mut Sink) -> Result<()> {
    match cmd {
        Cmd::Weight { f } => {
            let f = WLaurent::parse(f)?;
            sink.push(
                "w22.weight",
                Status::Pass,
                json!({"f": f.to_string(), "weight": f.weight()}),
                json!({}),
            );
        }
        Cmd::Win { f } => {
            let f = WLaurent::parse(f)?;
            let w = f.win();
            sink.push(
                "w22.win",
                Status::Pass,
                json!({"f": f.to_string(), "win": w.to_string(), "terms": w.to_json(), "weight": f.weight()}),
                json!({}),
            );
        }
        Cmd::Strip { h } => {
            let h = WLaurent::parse(h)?;
            let steps = g.bound.unwrap_or(10);
            if steps < 1 {
                return Err(Error::Domain(format!("steps {steps} must be at least 1")));
            }
            let seq = win_strip(&h, steps as usize)?;
            let increasing = seq.windows(2).all(|p| p[0].weight < p[1].weight);
            let out: Vec<_> = seq
                .iter()
                .map(|s| json!({"h": s.h.to_string(), "weight": s.weight}))
                .collect();
            sink.push(
                "w22.strip",
                status_of(increasing),
                json!({"steps": out, "strictly_increasing": increasing}),
                json!({"steps": steps}),
            );
        }
        Cmd::MemberA { f } => {
            let f = WLaurent::parse(f)?;
            let low: Vec<String> = f
                .terms()
                .filter(|t| !t.is_polynomial() && t.weight() < Rat::one())
                .map(|t| WLaurent::from_terms([t]).to_string())
                .collect();
            sink.push(
                "w22.member-A",
                status_of(in_a(&f)),
                json!({"f": f.to_string(), "member": in_a(&f), "weight": f.weight(), "terms_below_weight_1": low}),
                json!({}),
            );
        }
        Cmd::MemberGe { f, q } => {
            let f = WLaurent::parse(f)?;
            let q: Rat = q.parse()?;
            let member = in_weight_ge(&f, &q);
            let weight: Weight = f.weight();
            sink.push(
                "w22.member-ge",
                status_of(member),
                json!({"f": f.to_string(), "q": q, "member": member, "weight": weight}),
                json!({}),
            );
        }
    }
    Ok(())
}

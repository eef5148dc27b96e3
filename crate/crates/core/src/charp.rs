//! Sparse polynomials over `F_p` with rational exponents, i.e. elements of
//! the monoid algebra `F_p[X^G]` for an additive group `G` of rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::s21::QMonoid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPoly {
    p: u64,
    terms: BTreeMap<Rat, u64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Rat,
    coef: u64,
}

#[derive(Serialize, Deserialize)]
struct SPolyJson {
    p: u64,
    terms: Vec<TermJson>,
}

/// `f^{p^n} = X^s * u` with `u` a unit of the localization at the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialAssociate {
    pub n: u32,
    pub s: Rat,
    /// Exponents of the cofactor `u`, ascending; the first is always 0.
    pub cofactor_exponents: Vec<Rat>,
    /// Constant applied to make the lowest coefficient 1.
    pub normalizer: u64,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_pow(base: u64, exp: &BigUint, p: u64) -> u64 {
    BigUint::from(base)
        .modpow(exp, &BigUint::from(p))
        .to_u64()
        .expect("reduced mod p")
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^{p-2}
    mod_pow(a, &BigUint::from(p - 2), p)
}

impl SPoly {
    /// Builds a polynomial from `(exponent, coefficient)` pairs; coefficients
    /// are reduced mod `p` and like terms are merged.
    pub fn new(p: u64, terms: impl IntoIterator<Item = (Rat, u64)>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("characteristic {p} is not prime")));
        }
        let mut out = SPoly {
            p,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            out.add_term(e, c % p);
        }
        Ok(out)
    }

    pub fn monomial(p: u64, exp: Rat) -> Result<Self> {
        Self::new(p, [(exp, 1)])
    }

    fn add_term(&mut self, e: Rat, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, u64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn lowest(&self) -> Option<(&Rat, u64)> {
        self.terms.iter().next().map(|(e, &c)| (e, c))
    }

    pub fn multiply(&self, other: &SPoly) -> Result<SPoly> {
        if self.p != other.p {
            return Err(Error::Domain(format!(
                "characteristics {} and {} differ",
                self.p, other.p
            )));
        }
        let mut out = SPoly {
            p: self.p,
            terms: BTreeMap::new(),
        };
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2 % self.p);
            }
        }
        Ok(out)
    }

    /// `f^k` by repeated multiplication.
    pub fn pow(&self, k: u64) -> SPoly {
        let mut acc = SPoly {
            p: self.p,
            terms: BTreeMap::from([(Rat::zero(), 1)]),
        };
        for _ in 0..k {
            acc = acc.multiply(self).expect("same characteristic");
        }
        acc
    }

    /// `f^{p^n}` via the Frobenius identity: exponents scale by `p^n` and
    /// each coefficient is raised to `p^n`.
    pub fn frobenius_power(&self, n: i64) -> Result<SPoly> {
        if n < 0 {
            return Err(Error::Domain(format!("Frobenius exponent {n} is negative")));
        }
        let q = BigUint::from(self.p).pow(n as u32);
        let scale = num_bigint::BigInt::from(q.clone());
        let mut out = SPoly {
            p: self.p,
            terms: BTreeMap::new(),
        };
        for (e, &c) in &self.terms {
            out.add_term(e.mul_int(scale.clone()), mod_pow(c, &q, self.p));
        }
        Ok(out)
    }

    /// The least `n <= n_max` for which `f^{p^n}` is associated to the
    /// monomial `X^{p^n s_1}`: after scaling so the lowest coefficient is 1,
    /// every exponent `p^n (s_i - s_1)` must lie in `monoid`, making the
    /// cofactor a polynomial with constant term 1.
    pub fn monomial_associate(&self, monoid: &QMonoid, n_max: u32) -> Result<Option<MonomialAssociate>> {
        let (s1, c1) = self.lowest().ok_or_else(|| Error::Domain("zero polynomial".into()))?;
        if let Some((e, _)) = self.terms().find(|(e, _)| !monoid.in_group_of_quotients(e)) {
            return Err(Error::Domain(format!("exponent {e} is outside the group of quotients")));
        }
        if !monoid.contains(s1)? {
            return Err(Error::Precondition(format!(
                "lowest exponent {s1} is not in the monoid"
            )));
        }
        let normalizer = mod_inv(c1, self.p);
        let normalized = SPoly::new(self.p, self.terms().map(|(e, c)| (e.clone(), c * normalizer)))?;
        for n in 0..=n_max {
            let scale = num_bigint::BigInt::from(self.p).pow(n);
            let mut ok = true;
            for (e, _) in normalized.terms().skip(1) {
                if !monoid.contains(&(e - s1).mul_int(scale.clone()))? {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let power = normalized.frobenius_power(n as i64)?;
            let s = s1.mul_int(scale);
            let cofactor: Vec<(Rat, u64)> = power.terms().map(|(e, c)| (e - &s, c)).collect();
            debug_assert_eq!(cofactor[0], (Rat::zero(), 1));
            return Ok(Some(MonomialAssociate {
                n,
                s,
                cofactor_exponents: cofactor.into_iter().map(|(e, _)| e).collect(),
                normalizer,
            }));
        }
        Ok(None)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = SPolyJson {
            p: self.p,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| TermJson {
                    exp: e.clone(),
                    coef: c,
                })
                .collect(),
        };
        serde_json::to_value(j).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SPolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(j.p, j.terms.into_iter().map(|t| (t.exp, t.coef)))
    }

    /// Parses `X^2 + X^5/2 + 3*X^(9/4) + 1` style input.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for raw in s.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            let (coef, mono) = match t.split_once('*') {
                Some((c, m)) => (
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient in `{t}`")))?,
                    m.trim(),
                ),
                None if t.starts_with('X') => (1, t),
                None => {
                    let c = t.parse::<u64>().map_err(|_| Error::Parse(format!("bad term `{t}`")))?;
                    terms.push((Rat::zero(), c));
                    continue;
                }
            };
            let exp = match mono.strip_prefix('X') {
                Some("") => Rat::one(),
                Some(rest) => {
                    let e = rest
                        .strip_prefix('^')
                        .ok_or_else(|| Error::Parse(format!("bad monomial `{mono}`")))?;
                    e.trim_start_matches('(').trim_end_matches(')').parse()?
                }
                None => return Err(Error::Parse(format!("bad monomial `{mono}`"))),
            };
            terms.push((exp, coef));
        }
        Self::new(p, terms)
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, &c)| match (c, e.is_zero()) {
                (_, true) => c.to_string(),
                (1, false) => format!("X^{e}"),
                _ => format!("{c}*X^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

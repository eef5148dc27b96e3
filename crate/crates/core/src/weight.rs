//! Laurent polynomials in countably many variables `X_1, X_2, ...` graded
//! by the weight `w(X_n) = 1/n`.
//!
//! The weight of a nonzero element is the least weight of its terms and the
//! w-initial form (`win`) is the sum of the terms attaining it. Membership in
//! `A = F[X] + F(X)_{>=1}` is decided termwise for Laurent polynomials:
//! polynomial terms are absorbed by `F[X]`, and because the weight of a sum
//! of distinct monomials is the minimum of their weights, any decomposition
//! `f = p + g` with `w(g) >= 1` must place every non-polynomial term of `f`
//! in `g`. So `f` is in `A` iff each non-polynomial term has weight `>= 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Variable index (`n >= 1`) to nonzero exponent.
pub type Exponents = BTreeMap<u32, i64>;

/// A weight value: a rational, or `+infinity` for the zero element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Weight {
    Finite(Rat),
    Infinite,
}

impl Weight {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Weight::Finite(q) => Some(q),
            Weight::Infinite => None,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(q) => write!(f, "{q}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTerm {
    pub coef: Rat,
    #[serde(with = "exps_json")]
    pub exps: Exponents,
}

mod exps_json {
    use super::Exponents;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(e: &Exponents, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(e.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Exponents, D::Error> {
        let raw = BTreeMap::<String, i64>::deserialize(d)?;
        raw.into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(k, v)| match k.parse::<u32>() {
                Ok(n) if n >= 1 => Ok((n, v)),
                _ => Err(serde::de::Error::custom(format!("bad variable index `{k}`"))),
            })
            .collect()
    }
}

pub fn monomial_weight(exps: &Exponents) -> Rat {
    exps.iter()
        .fold(Rat::zero(), |acc, (&n, &e)| acc + Rat::frac(e, n as i64))
}

impl WTerm {
    pub fn weight(&self) -> Rat {
        monomial_weight(&self.exps)
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.values().all(|&e| e >= 0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WLaurent {
    terms: BTreeMap<Exponents, Rat>,
}

impl WLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Exponents::new())
    }

    pub fn term(coef: Rat, exps: Exponents) -> Self {
        let mut out = Self::zero();
        out.add_term(exps, coef);
        out
    }

    /// The variable `X_n`.
    pub fn var(n: u32) -> Self {
        Self::term(Rat::one(), Exponents::from([(n, 1)]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = WTerm>) -> Self {
        let mut out = Self::zero();
        for t in terms {
            out.add_term(t.exps, t.coef);
        }
        out
    }

    fn add_term(&mut self, mut exps: Exponents, coef: Rat) {
        exps.retain(|_, e| *e != 0);
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += &coef;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = WTerm> + '_ {
        self.terms.iter().map(|(e, c)| WTerm {
            coef: c.clone(),
            exps: e.clone(),
        })
    }

    pub fn weight(&self) -> Weight {
        self.terms
            .keys()
            .map(monomial_weight)
            .min()
            .map_or(Weight::Infinite, Weight::Finite)
    }

    /// Sum of the terms of least weight; `win(0) = 0`.
    pub fn win(&self) -> WLaurent {
        match self.weight() {
            Weight::Infinite => WLaurent::zero(),
            Weight::Finite(w) => WLaurent {
                terms: self
                    .terms
                    .iter()
                    .filter(|(e, _)| monomial_weight(e) == w)
                    .map(|(e, c)| (e.clone(), c.clone()))
                    .collect(),
            },
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms().all(|t| t.is_polynomial())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.terms().collect::<Vec<_>>()).expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<WTerm> = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self::from_terms(terms))
    }

    /// Parses sums like `X1*X2^-2 - 3/2*X_3 + 1`.
    pub fn parse(s: &str) -> Result<Self> {
        let src = s.trim();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = WLaurent::zero();
        for (sign, body) in split_signed_terms(src)? {
            let mut coef = Rat::one();
            let mut exps = Exponents::new();
            for factor in body.split('*') {
                let f = factor.trim();
                if let Some(rest) = f.strip_prefix('X') {
                    let rest = rest.strip_prefix('_').unwrap_or(rest);
                    let (idx, e) = match rest.split_once('^') {
                        Some((i, e)) => (i, e.trim_start_matches('(').trim_end_matches(')')),
                        None => (rest, "1"),
                    };
                    let n: u32 = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable in `{f}`")))?;
                    if n == 0 {
                        return Err(Error::Parse("variables are indexed from 1".into()));
                    }
                    let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?;
                    *exps.entry(n).or_insert(0) += e;
                } else {
                    coef = coef * f.parse::<Rat>()?;
                }
            }
            out.add_term(exps, if sign { -coef } else { coef });
        }
        Ok(out)
    }
}

/// Splits at top-level `+`/`-`, leaving exponent signs (`^-2`) alone.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut cur = String::new();
    let mut prev = '^';
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        if (ch == '+' || ch == '-') && prev != '^' && prev != '(' {
            if cur.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            out.push((negative, std::mem::take(&mut cur)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() && out.is_empty() {
            negative ^= ch == '-';
        } else {
            cur.push(ch);
        }
        prev = ch;
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    out.push((negative, cur));
    Ok(out)
}

impl fmt::Display for WLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.terms().enumerate() {
            let neg = t.coef.is_negative();
            let c = t.coef.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = t
                .exps
                .iter()
                .map(|(n, e)| if *e == 1 { format!("X{n}") } else { format!("X{n}^{e}") })
                .collect();
            match (mono.is_empty(), c == Rat::one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{c}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl Add for &WLaurent {
    type Output = WLaurent;
    fn add(self, rhs: &WLaurent) -> WLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &WLaurent {
    type Output = WLaurent;
    fn neg(self) -> WLaurent {
        WLaurent {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &WLaurent {
    type Output = WLaurent;
    fn sub(self, rhs: &WLaurent) -> WLaurent {
        self + &(-rhs)
    }
}

impl Mul for &WLaurent {
    type Output = WLaurent;
    fn mul(self, rhs: &WLaurent) -> WLaurent {
        let mut out = WLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = e1.clone();
                for (n, k) in e2 {
                    *e.entry(*n).or_insert(0) += k;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// `w(f) - w(g)` for nonzero `g`; infinite when `f = 0`.
pub fn weight_of_quotient(f: &WLaurent, g: &WLaurent) -> Result<Weight> {
    let wg = g.weight();
    let wg = wg.finite().ok_or_else(|| Error::Domain("quotient by zero".into()))?;
    Ok(match f.weight() {
        Weight::Finite(wf) => Weight::Finite(wf - wg),
        Weight::Infinite => Weight::Infinite,
    })
}

/// Membership in `F[X] + F(X)_{>=1}` for a Laurent polynomial.
pub fn in_a(f: &WLaurent) -> bool {
    f.terms()
        .filter(|t| !t.is_polynomial())
        .all(|t| t.weight() >= Rat::one())
}

/// Membership in `F(X)_{>=q}`.
pub fn in_weight_ge(f: &WLaurent, q: &Rat) -> bool {
    match f.weight() {
        Weight::Infinite => true,
        Weight::Finite(w) => w.cmp(q) != Ordering::Less,
    }
}

/// One step of the stripping sequence `h_{n+1} = h_n - win(h_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripStep {
    pub h: WLaurent,
    pub weight: Weight,
}

/// `h_0 = h, h_{i+1} = h_i - win(h_i)` for at most `steps` iterations,
/// stopping once zero is reached.
pub fn win_strip(h: &WLaurent, steps: usize) -> Result<Vec<StripStep>> {
    if steps < 1 {
        return Err(Error::Domain("steps must be at least 1".into()));
    }
    let mut out = vec![StripStep {
        weight: h.weight(),
        h: h.clone(),
    }];
    while out.len() <= steps {
        let last = &out.last().expect("nonempty").h;
        if last.is_zero() {
            break;
        }
        let next = last - &last.win();
        out.push(StripStep {
            weight: next.weight(),
            h: next,
        });
    }
    Ok(out)
}

//! Exponent-level model of an iterated extended-Rees tower.
//!
//! Over a base monoid algebra `A = k[y^S]` (`S` a numerical semigroup) with a
//! conductor element `a = y^e`, let `T_0` and every `T_w` with `w` ending in
//! `0` be independent indeterminates and define
//!
//! ```text
//! T_1 = a / T_0,        T_{w1} = T_w / T_{w0}.
//! ```
//!
//! `R_n` is generated over `A` by all `T_w` with `|w| <= n`, and
//! `R_{n+1} = R_n[Z_j, c_j / Z_j]` where `Z_j = T_{w0}`, `c_j = T_w` range over
//! the words `w` of length `n` (for `n = 0` the single pair is `T_0`, `a`).
//! Since the `Z_j` are independent over `R_n`, a monomial `u * prod Z_j^{k_j}`
//! with `u` free of the `Z_j` lies in `R_{n+1}` iff
//! `u / prod c_j^{max(0, -k_j)}` lies in `R_n`. Iterating down to `R_0 = A`
//! decides membership exactly and yields an explicit factorization into
//! generators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerical::NumericalSemigroup;

/// Levels above this are refused by the window checks.
pub const MAX_LEVEL: usize = 4;

/// Window points above this are refused by `colon_collapse_check`.
pub const MAX_WINDOW_POINTS: u64 = 5_000_000;

/// A nonempty binary word `e_1 ... e_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TWord(Vec<bool>);

impl TWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Domain("words are nonempty".into()));
        }
        Ok(TWord(bits))
    }

    /// `0^j`.
    pub fn zeros(j: usize) -> Result<Self> {
        Self::new(vec![false; j])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Words ending in `0` index the independent indeterminates.
    pub fn is_free(&self) -> bool {
        !self.0[self.0.len() - 1]
    }

    pub fn child(&self, bit: bool) -> TWord {
        let mut v = self.0.clone();
        v.push(bit);
        TWord(v)
    }

    pub fn root(bit: bool) -> TWord {
        TWord(vec![bit])
    }

    /// All words of length `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<TWord> {
        (0..1u64 << len)
            .map(|m| TWord((0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect()))
            .collect()
    }

    /// All words of length `1..=n`.
    pub fn all_up_to(n: usize) -> Vec<TWord> {
        (1..=n).flat_map(Self::all_of_length).collect()
    }
}

impl fmt::Display for TWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for TWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{self}")
    }
}

impl FromStr for TWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad word `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        Ok(TWord(bits))
    }
}

impl Serialize for TWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `a^{a_exp} * y^{base_exp} * prod T_w^{k_w}` over free words `w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TMono {
    #[serde(rename = "a")]
    pub a_exp: i64,
    #[serde(rename = "base")]
    pub base_exp: i64,
    #[serde(default)]
    pub free: BTreeMap<TWord, i64>,
}

impl TMono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn a() -> Self {
        TMono {
            a_exp: 1,
            ..Self::default()
        }
    }

    pub fn y(e: i64) -> Self {
        TMono {
            base_exp: e,
            ..Self::default()
        }
    }

    /// The indeterminate `T_w`; `w` must be free.
    pub fn var(w: &TWord) -> Result<Self> {
        if !w.is_free() {
            return Err(Error::Domain(format!("T{w} is not an indeterminate")));
        }
        Ok(TMono {
            free: BTreeMap::from([(w.clone(), 1)]),
            ..Self::default()
        })
    }

    fn bump(&mut self, w: &TWord, k: i64) {
        let e = self.free.entry(w.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.free.remove(w);
        }
    }

    pub fn mul(&self, other: &TMono) -> TMono {
        let mut out = self.clone();
        out.a_exp += other.a_exp;
        out.base_exp += other.base_exp;
        for (w, &k) in &other.free {
            out.bump(w, k);
        }
        out
    }

    pub fn pow(&self, k: i64) -> TMono {
        TMono {
            a_exp: self.a_exp * k,
            base_exp: self.base_exp * k,
            free: if k == 0 {
                BTreeMap::new()
            } else {
                self.free.iter().map(|(w, e)| (w.clone(), e * k)).collect()
            },
        }
    }

    pub fn inv(&self) -> TMono {
        self.pow(-1)
    }

    pub fn div(&self, other: &TMono) -> TMono {
        self.mul(&other.inv())
    }

    /// Length of the longest word present; 0 for base monomials.
    pub fn level(&self) -> usize {
        self.free.keys().map(TWord::len).max().unwrap_or(0)
    }

    /// Drops the indeterminates of length `len` ("set them to 1").
    pub fn evaluate_level(&self, len: usize) -> TMono {
        let mut out = self.clone();
        out.free.retain(|w, _| w.len() != len);
        out
    }

    pub fn exponent(&self, w: &TWord) -> i64 {
        self.free.get(w).copied().unwrap_or(0)
    }
}

impl fmt::Display for TMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let pw = |name: String, e: i64| if e == 1 { name } else { format!("{name}^{e}") };
        if self.a_exp != 0 {
            parts.push(pw("a".into(), self.a_exp));
        }
        if self.base_exp != 0 {
            parts.push(pw("y".into(), self.base_exp));
        }
        for (w, &k) in &self.free {
            parts.push(pw(format!("T_{w}"), k));
        }
        if parts.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for TMono {
    type Err = Error;
    /// Parses products like `a*y^3*T_0^-1*T_10`; derived `T_w` are expanded.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(TMono::one());
        }
        let mut out = TMono::one();
        for factor in s.split('*') {
            let f = factor.trim();
            let (name, e) = match f.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.trim_start_matches('(')
                        .trim_end_matches(')')
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?,
                ),
                None => (f, 1),
            };
            let base = match name {
                "a" => TMono::a(),
                "y" => TMono::y(1),
                _ => {
                    let w = name
                        .strip_prefix("T_")
                        .or_else(|| name.strip_prefix('T'))
                        .ok_or_else(|| Error::Parse(format!("bad factor `{f}`")))?;
                    expand(&w.parse()?)
                }
            };
            out = out.mul(&base.pow(e));
        }
        Ok(out)
    }
}

/// `T_w` as `a^d * (Laurent monomial in the indeterminates)`, `d` in {0, 1}.
pub fn expand(w: &TWord) -> TMono {
    if w.is_free() {
        return TMono::var(w).expect("free word");
    }
    let bits = w.bits();
    let parent = &bits[..bits.len() - 1];
    let (c, z) = if parent.is_empty() {
        (TMono::a(), TWord::root(false))
    } else {
        let p = TWord(parent.to_vec());
        (expand(&p), p.child(false))
    };
    c.div(&TMono::var(&z).expect("free word"))
}

/// Result of checking `T_{w0} * T_{w1} = T_w` (or `T_0 * T_1 = a`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    /// `None` for the root identity `T_0 T_1 = a`.
    pub parent: Option<TWord>,
    pub lhs: TMono,
    pub rhs: TMono,
    pub holds: bool,
}

/// The `2^n - 1` defining identities up to level `n`.
pub fn verify_generator_identities(n: usize) -> Result<Vec<IdentityCheck>> {
    if n < 1 {
        return Err(Error::Domain("level must be at least 1".into()));
    }
    let mut out = Vec::new();
    let root = expand(&TWord::root(false)).mul(&expand(&TWord::root(true)));
    out.push(IdentityCheck {
        parent: None,
        holds: root == TMono::a(),
        lhs: root,
        rhs: TMono::a(),
    });
    for w in TWord::all_up_to(n - 1) {
        let lhs = expand(&w.child(false)).mul(&expand(&w.child(true)));
        let rhs = expand(&w);
        out.push(IdentityCheck {
            parent: Some(w),
            holds: lhs == rhs,
            lhs,
            rhs,
        });
    }
    Ok(out)
}

/// The exponent-level automorphism swapping `T_{p0}` and `T_{p1}` (and with
/// them `T_{p0v}` and `T_{p1v}`), fixing `A` and every other indeterminate.
pub fn swap(prefix: &[bool], m: &TMono) -> TMono {
    let k = prefix.len();
    let mut out = TMono {
        a_exp: m.a_exp,
        base_exp: m.base_exp,
        free: BTreeMap::new(),
    };
    for (w, &e) in &m.free {
        let bits = w.bits();
        let image = if bits.len() > k && &bits[..k] == prefix {
            let mut flipped = bits.to_vec();
            flipped[k] = !flipped[k];
            expand(&TWord(flipped))
        } else {
            TMono::var(w).expect("free word")
        };
        out = out.mul(&image.pow(e));
    }
    out
}

/// Expansions of all generators `T_w`, `1 <= |w| <= n`.
pub fn generators(n: usize) -> Vec<(TWord, TMono)> {
    TWord::all_up_to(n)
        .into_iter()
        .map(|w| {
            let e = expand(&w);
            (w, e)
        })
        .collect()
}

/// A product of generators: base semigroup generators `y^g` and `T_w`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// Base generator (as a `y`-exponent) to multiplicity.
    pub base: BTreeMap<u64, u64>,
    pub tower: BTreeMap<TWord, u64>,
}

impl Factorization {
    pub fn product(&self) -> TMono {
        let mut out = TMono::one();
        for (&g, &k) in &self.base {
            out = out.mul(&TMono::y((g * k) as i64));
        }
        for (w, &k) in &self.tower {
            out = out.mul(&expand(w).pow(k as i64));
        }
        out
    }
}

/// Result of the colon-collapse check over a window.
#[derive(Clone, Debug, Serialize)]
pub struct CollapseReport {
    pub level: usize,
    pub window: u32,
    pub checked: u64,
    /// Window monomials satisfying `f * T_{0^j} in R_{n+1}` for all `j`.
    pub in_colon: u64,
    pub violations: Vec<CollapseViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollapseViolation {
    pub f: TMono,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConductorResult {
    pub sample: TMono,
    pub product: TMono,
    pub member: bool,
    pub witness: Option<Factorization>,
}

/// The tower over a base numerical semigroup with conductor element `y^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesTower {
    base: NumericalSemigroup,
    a: u64,
}

impl Default for ReesTower {
    fn default() -> Self {
        Self::new(NumericalSemigroup::new(&[2, 3]).expect("valid"), 2).expect("2 is in the conductor")
    }
}

impl ReesTower {
    /// `a` must be a nonzero element of the conductor `(A : A*)`, i.e. at
    /// least the conductor of the base semigroup.
    pub fn new(base: NumericalSemigroup, a: u64) -> Result<Self> {
        if a == 0 || a < base.conductor() {
            return Err(Error::Domain(format!(
                "y^{a} is not a nonzero conductor element of {base}"
            )));
        }
        Ok(Self { base, a })
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn a_exponent(&self) -> u64 {
        self.a
    }

    /// The same tower over the normalization `k[y]` of the base.
    pub fn over_normalization(&self) -> ReesTower {
        ReesTower {
            base: NumericalSemigroup::naturals(),
            a: self.a,
        }
    }

    /// Total `y`-exponent with `a = y^e` substituted.
    pub fn y_exponent(&self, m: &TMono) -> i64 {
        self.a as i64 * m.a_exp + m.base_exp
    }

    /// Whether two monomials denote the same element.
    pub fn same_element(&self, x: &TMono, y: &TMono) -> bool {
        x.free == y.free && self.y_exponent(x) == self.y_exponent(y)
    }

    /// Exact membership of `m` in `R_n`, with a factorization into generators.
    pub fn member(&self, m: &TMono, n: usize) -> Result<Option<Factorization>> {
        if m.level() > n {
            return Err(Error::Domain(format!("{m} involves indeterminates beyond level {n}")));
        }
        let mut fact = Factorization::default();
        let mut y = self.y_exponent(m);
        let mut free = m.free.clone();
        for level in (1..=n).rev() {
            let here: Vec<(TWord, i64)> = free
                .iter()
                .filter(|(w, _)| w.len() == level)
                .map(|(w, &k)| (w.clone(), k))
                .collect();
            for (w, k) in here {
                free.remove(&w);
                if k > 0 {
                    *fact.tower.entry(w).or_insert(0) += k as u64;
                    continue;
                }
                // Z^k = (c/Z)^{-k} / c^{-k}
                let mut partner = w.bits().to_vec();
                *partner.last_mut().expect("nonempty") = true;
                *fact.tower.entry(TWord(partner)).or_insert(0) += (-k) as u64;
                let c = if level == 1 {
                    TMono::a()
                } else {
                    expand(&TWord(w.bits()[..level - 1].to_vec()))
                };
                y += k * self.y_exponent(&c);
                for (v, &e) in &c.free {
                    let slot = free.entry(v.clone()).or_insert(0);
                    *slot += k * e;
                    if *slot == 0 {
                        free.remove(v);
                    }
                }
            }
        }
        debug_assert!(free.is_empty());
        match self.base.representation(y) {
            None => Ok(None),
            Some(counts) => {
                for (&g, c) in self.base.generators().iter().zip(counts) {
                    if c > 0 {
                        fact.base.insert(g, c);
                    }
                }
                Ok(Some(fact))
            }
        }
    }

    pub fn contains(&self, m: &TMono, n: usize) -> Result<bool> {
        Ok(self.member(m, n)?.is_some())
    }

    /// For every `f` over level-`n` variables with `|y-exponent| + sum |k_w|`
    /// at most `window`: if `f * T_{0^j}` lies in `R_{n+1}` for all
    /// `1 <= j <= n+1` then `f` lies in `R_n`. The factorization of
    /// `f * T_{0^{n+1}}` is also pushed through the map setting the level
    /// `n+1` indeterminates to 1, which must land in `R_n` and give back `f`.
    pub fn colon_collapse_check(&self, n: usize, window: u32) -> Result<CollapseReport> {
        if n > MAX_LEVEL {
            return Err(Error::Resource(format!("level {n} exceeds the cap {MAX_LEVEL}")));
        }
        let vars: Vec<TWord> = TWord::all_up_to(n).into_iter().filter(TWord::is_free).collect();
        let dims = vars.len() + 1;
        let points = l1_ball_size(dims, window);
        if points > MAX_WINDOW_POINTS {
            return Err(Error::Resource(format!(
                "window {window} at level {n} has {points} points (cap {MAX_WINDOW_POINTS})"
            )));
        }
        let chain: Vec<TMono> = (1..=n + 1)
            .map(|j| TMono::var(&TWord::zeros(j).expect("j >= 1")).expect("free"))
            .collect();
        let top = chain.last().expect("nonempty").clone();
        let mut report = CollapseReport {
            level: n,
            window,
            checked: 0,
            in_colon: 0,
            violations: Vec::new(),
        };
        let mut coords = vec![0i64; dims];
        for_each_l1(&mut coords, 0, window as i64, &mut |c| {
            let f = TMono {
                a_exp: 0,
                base_exp: c[0],
                free: vars
                    .iter()
                    .zip(&c[1..])
                    .filter(|(_, &k)| k != 0)
                    .map(|(w, &k)| (w.clone(), k))
                    .collect(),
            };
            report.checked += 1;
            let in_rn = self.contains(&f, n).expect("level checked");
            let mut hyp = true;
            for t in &chain {
                if !self.contains(&f.mul(t), n + 1).expect("level checked") {
                    hyp = false;
                    break;
                }
            }
            if in_rn && !hyp {
                report.violations.push(CollapseViolation {
                    f: f.clone(),
                    reason: "member of R_n outside the colon".into(),
                });
            }
            if !hyp {
                return;
            }
            report.in_colon += 1;
            if !in_rn {
                report.violations.push(CollapseViolation {
                    f: f.clone(),
                    reason: "in the colon but not in R_n".into(),
                });
                return;
            }
            let fact = self
                .member(&f.mul(&top), n + 1)
                .expect("level checked")
                .expect("hypothesis holds");
            let mut image = TMono::one();
            for (&g, &k) in &fact.base {
                image = image.mul(&TMono::y((g * k) as i64));
            }
            for (w, &k) in &fact.tower {
                let ev = expand(w).evaluate_level(n + 1);
                if !self.contains(&ev, n).expect("evaluated factor has level <= n") {
                    report.violations.push(CollapseViolation {
                        f: f.clone(),
                        reason: format!("factor T_{w} evaluates outside R_n"),
                    });
                    return;
                }
                image = image.mul(&ev.pow(k as i64));
            }
            if !self.same_element(&image, &f) {
                report.violations.push(CollapseViolation {
                    f: f.clone(),
                    reason: format!("evaluation gives {image}"),
                });
            }
        });
        Ok(report)
    }

    /// Checks `a * x in R_n` for each sample `x`. Samples must be almost
    /// integral: here, members of the tower over the normalization `k[y]`,
    /// every power of which is carried into `R_n` by `a`.
    pub fn conductor_check(&self, n: usize, samples: &[TMono]) -> Result<Vec<ConductorResult>> {
        if n > MAX_LEVEL {
            return Err(Error::Resource(format!("level {n} exceeds the cap {MAX_LEVEL}")));
        }
        let closure = self.over_normalization();
        samples
            .iter()
            .map(|x| {
                if x.a_exp < 0 || x.base_exp < 0 {
                    return Err(Error::Domain(format!("sample {x} has a negative base exponent")));
                }
                if !closure.contains(x, n)? {
                    return Err(Error::Domain(format!("sample {x} is not almost integral over R_{n}")));
                }
                let product = TMono::a().mul(x);
                let witness = self.member(&product, n)?;
                Ok(ConductorResult {
                    sample: x.clone(),
                    member: witness.is_some(),
                    witness,
                    product,
                })
            })
            .collect()
    }
}

/// Default conductor samples at level `n`: `1`, `y`, and `y * T_w` for every
/// generator `T_w` of `R_n`.
pub fn default_conductor_samples(n: usize) -> Vec<TMono> {
    let mut out = vec![TMono::one(), TMono::y(1)];
    out.extend(generators(n).into_iter().map(|(_, e)| TMono::y(1).mul(&e)));
    out
}

/// Number of integer points with L1 norm at most `r` in `dims` dimensions.
fn l1_ball_size(dims: usize, r: u32) -> u64 {
    // sum_k 2^k C(dims, k) C(r, k)
    let binom = |n: u64, k: u64| -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
    };
    (0..=dims.min(r as usize) as u64)
        .map(|k| {
            (1u64 << k)
                .saturating_mul(binom(dims as u64, k))
                .saturating_mul(binom(r as u64, k))
        })
        .fold(0u64, u64::saturating_add)
}

fn for_each_l1(coords: &mut Vec<i64>, i: usize, budget: i64, f: &mut impl FnMut(&[i64])) {
    if i == coords.len() {
        f(coords);
        return;
    }
    for v in -budget..=budget {
        coords[i] = v;
        for_each_l1(coords, i + 1, budget - v.abs(), f);
    }
    coords[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TWord {
        s.parse().unwrap()
    }

    fn m(s: &str) -> TMono {
        s.parse().unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand(&w("0")), TMono::var(&w("0")).unwrap());
        assert_eq!(expand(&w("1")).to_string(), "a*T_0^-1");
        assert_eq!(expand(&w("11")).to_string(), "a*T_0^-1*T_10^-1");
        assert_eq!(expand(&w("01")).to_string(), "T_0*T_00^-1");
        assert_eq!(expand(&w("111")).to_string(), "a*T_0^-1*T_10^-1*T_110^-1");
    }

    #[test]
    fn identities() {
        let checks = verify_generator_identities(3).unwrap();
        assert_eq!(checks.len(), 7);
        assert!(checks.iter().all(|c| c.holds));
        assert_eq!(checks[0].rhs, TMono::a());
        assert_eq!(verify_generator_identities(1).unwrap().len(), 1);
        assert!(verify_generator_identities(0).is_err());
    }

    #[test]
    fn swap_examples() {
        let t0 = expand(&w("0"));
        assert_eq!(swap(&[], &t0), expand(&w("1")));
        assert_eq!(swap(&[], &swap(&[], &t0)), t0);
        assert_eq!(swap(&[false], &expand(&w("00"))), expand(&w("01")));
        assert_eq!(swap(&[false], &t0), t0);
        assert_eq!(swap(&[], &expand(&w("10"))), expand(&w("00")));
    }

    #[test]
    fn membership_examples() {
        let r = ReesTower::default();
        assert!(r.contains(&expand(&w("11")), 2).unwrap());
        for n in 1..=3 {
            assert!(!r.contains(&m("T_0^-1"), n).unwrap());
        }
        assert!(r.contains(&m("a*T_0^-1"), 1).unwrap());
        assert!(!r.contains(&m("y"), 3).unwrap());
        assert!(r.contains(&m("y^3*T_0^2*T_1"), 1).unwrap());
        assert!(matches!(r.contains(&m("T_00"), 1), Err(Error::Domain(_))));
        let x = m("a*y^3*T_0^-1*T_10^-1*T_00");
        assert!(!r.contains(&m("a*y^3*T_0^-2*T_10^-1*T_00"), 2).unwrap());
        let f = r.member(&x, 2).unwrap().unwrap();
        assert!(r.same_element(&f.product(), &x));
    }

    #[test]
    fn collapse_small() {
        let r = ReesTower::default();
        let rep = r.colon_collapse_check(1, 3).unwrap();
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert!(rep.in_colon > 0);
        assert!(matches!(r.colon_collapse_check(5, 1), Err(Error::Resource(_))));
    }

    #[test]
    fn conductor_examples() {
        let r = ReesTower::default();
        let res = r.conductor_check(1, &[m("y"), m("y*T_0"), TMono::one()]).unwrap();
        assert!(res.iter().all(|c| c.member));
        assert!(matches!(r.conductor_check(1, &[m("T_0^-1")]), Err(Error::Domain(_))));
        assert!(matches!(r.conductor_check(1, &[m("T_00")]), Err(Error::Domain(_))));
    }

    #[test]
    fn json_shape() {
        let e = expand(&w("11"));
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"a":1,"base":0,"free":{"0":-1,"10":-1}}"#
        );
        let back: TMono = serde_json::from_str(r#"{"a":1,"base":0,"free":{"0":-1,"10":-1}}"#).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn ball_size() {
        assert_eq!(l1_ball_size(1, 3), 7);
        assert_eq!(l1_ball_size(2, 1), 5);
        let mut n = 0;
        for_each_l1(&mut vec![0; 3], 0, 2, &mut |_| n += 1);
        assert_eq!(n, l1_ball_size(3, 2));
    }
}

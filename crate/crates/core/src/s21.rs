//! Additive submonoids of the nonnegative rationals given by a generator
//! oracle, with exact membership and bounded witness searches.
//!
//! The distinguished example is the monoid generated by
//! `g_n = n + 1 + 1/2^n` for `n >= 0`. Every generator is at least 2, so
//! only finitely many generators can occur in a representation of a given
//! value and membership is decidable.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{dyadic_split, Rat};

/// Where the generators of a [`QMonoid`] come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Finitely many positive rationals, sorted ascending and deduplicated.
    Finite(Vec<Rat>),
    /// `g_n = n + 1 + 1/2^n`, `n >= 0`.
    PerturbedNaturals,
    /// `g_n = n + 1`, `n >= 0`: the dyadic perturbation removed.
    ShiftedNaturals,
}

/// JSON descriptor of a monoid, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MonoidDescriptor {
    Finite { generators: Vec<Rat> },
    #[serde(alias = "paper-s21")]
    PerturbedNaturals,
    ShiftedNaturals,
}

pub struct QMonoid {
    family: Family,
    min_gen: Rat,
    // (residual, largest usable generator index) -> representable
    memo: RwLock<HashMap<(Rat, usize), bool>>,
}

impl Clone for QMonoid {
    fn clone(&self) -> Self {
        QMonoid {
            family: self.family.clone(),
            min_gen: self.min_gen.clone(),
            memo: RwLock::default(),
        }
    }
}

impl fmt::Debug for QMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QMonoid").field("family", &self.family).finish()
    }
}

impl PartialEq for QMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

/// Generator multiplicities keyed by generator index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenMultiset(pub BTreeMap<usize, u64>);

impl GenMultiset {
    pub fn value(&self, monoid: &QMonoid) -> Rat {
        self.0.iter().fold(Rat::zero(), |acc, (&i, &m)| {
            acc + monoid.generator(i).expect("index produced by this monoid").mul_int(m)
        })
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for GenMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (i, m) in &self.0 {
            map.serialize_entry(&format!("g_{i}"), m)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlmostIntegralWitness {
    pub s: Rat,
    pub checked_up_to: u64,
}

/// One application of the rule `2m, 3m in T => m in T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureStep {
    pub derived: u64,
    pub from: [u64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeminormalCertificate {
    pub q: Rat,
    pub violated: bool,
    /// Multipliers `n <= n_max` with `n*q` in the monoid.
    pub members: Vec<u64>,
    /// Derivations in the order they were applied.
    pub chain: Vec<ClosureStep>,
    pub checked_up_to: u64,
}

/// Outcome of [`QMonoid::divisorial_gap_sweep`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapSweep {
    /// Non-members `q` in the group of quotients that were searched.
    pub checked: u64,
    /// Those `q` for which no witness `s` was found.
    pub failures: Vec<Rat>,
    /// No candidate `q` satisfied the precondition.
    pub vacuous: bool,
}

/// Least `m0` with `m/2^level` in the monoid for every `m >= m0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyadicThreshold {
    pub level: u32,
    pub threshold: u64,
    /// The generator whose translates cover everything past the run.
    pub step: Rat,
    pub checked_up_to: u64,
}

impl QMonoid {
    pub fn perturbed_naturals() -> Self {
        Self::from_family(Family::PerturbedNaturals).expect("family is valid")
    }

    pub fn shifted_naturals() -> Self {
        Self::from_family(Family::ShiftedNaturals).expect("valid family")
    }

    pub fn finite(generators: Vec<Rat>) -> Result<Self> {
        Self::from_family(Family::Finite(generators))
    }

    pub fn from_family(family: Family) -> Result<Self> {
        let (family, min_gen) = match family {
            Family::Finite(mut gens) => {
                if gens.is_empty() {
                    return Err(Error::Domain("a finite monoid needs at least one generator".into()));
                }
                if let Some(g) = gens.iter().find(|g| !g.is_positive()) {
                    return Err(Error::Domain(format!("generator {g} is not positive")));
                }
                gens.sort();
                gens.dedup();
                let min = gens[0].clone();
                (Family::Finite(gens), min)
            }
            Family::PerturbedNaturals => (Family::PerturbedNaturals, Rat::from_int(2)),
            Family::ShiftedNaturals => (Family::ShiftedNaturals, Rat::one()),
        };
        Ok(QMonoid {
            family,
            min_gen,
            memo: RwLock::default(),
        })
    }

    pub fn from_descriptor(d: &MonoidDescriptor) -> Result<Self> {
        match d {
            MonoidDescriptor::Finite { generators } => Self::finite(generators.clone()),
            MonoidDescriptor::PerturbedNaturals => Ok(Self::perturbed_naturals()),
            MonoidDescriptor::ShiftedNaturals => Ok(Self::shifted_naturals()),
        }
    }

    pub fn descriptor(&self) -> MonoidDescriptor {
        match &self.family {
            Family::Finite(g) => MonoidDescriptor::Finite { generators: g.clone() },
            Family::PerturbedNaturals => MonoidDescriptor::PerturbedNaturals,
            Family::ShiftedNaturals => MonoidDescriptor::ShiftedNaturals,
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn min_gen(&self) -> &Rat {
        &self.min_gen
    }

    pub fn generator(&self, i: usize) -> Option<Rat> {
        match &self.family {
            Family::Finite(g) => g.get(i).cloned(),
            Family::PerturbedNaturals => Some(Rat::from_int(i as i64 + 1) + Rat::inv_pow2(i as u32)),
            Family::ShiftedNaturals => Some(Rat::from_int(i as i64 + 1)),
        }
    }

    /// Largest generator index whose generator is `<= bound`.
    fn top_index(&self, bound: &Rat) -> Option<usize> {
        match &self.family {
            Family::Finite(g) => g.iter().rposition(|x| x <= bound),
            Family::PerturbedNaturals | Family::ShiftedNaturals => {
                // g_n > n + 1 for the perturbed family and g_n = n + 1 otherwise,
                // so floor(bound) - 1 is an upper estimate.
                let mut n = bound.floor().to_i64()? - 1;
                while n >= 0 {
                    if self.generator(n as usize).expect("infinite family") <= *bound {
                        return Some(n as usize);
                    }
                    n -= 1;
                }
                None
            }
        }
    }

    /// All generators with value `<= bound`, as `(index, value)` in ascending order.
    pub fn generators_up_to(&self, bound: &Rat) -> Vec<(usize, Rat)> {
        match self.top_index(bound) {
            None => vec![],
            Some(top) => (0..=top)
                .map(|i| (i, self.generator(i).expect("index in range")))
                .collect(),
        }
    }

    /// Whether `q` lies in the group generated by the generators.
    pub fn in_group_of_quotients(&self, q: &Rat) -> bool {
        match &self.family {
            // g_1 - g_0 = 1/2 and g_n - g_{n-1} = 1 - 1/2^n generate every dyadic rational.
            Family::PerturbedNaturals => q.dyadic_level().is_some(),
            Family::ShiftedNaturals => q.is_integer(),
            Family::Finite(gens) => {
                let lcm = gens
                    .iter()
                    .fold(BigInt::one(), |l, g| num_integer::lcm(l, g.denom().clone()));
                let gcd = gens.iter().fold(BigInt::zero(), |acc, g| {
                    num_integer::gcd(acc, g.numer() * (&lcm / g.denom()))
                });
                (q.mul_int(lcm) / Rat::from_int(gcd)).is_integer()
            }
        }
    }

    /// Cheap necessary condition for `r` to be a sum of generators with index `<= top`.
    fn admissible(&self, r: &Rat, top: usize) -> bool {
        match &self.family {
            // All of g_0..g_top have denominator dividing 2^top.
            Family::PerturbedNaturals => matches!(r.dyadic_level(), Some(k) if k <= top as u64),
            Family::ShiftedNaturals => r.is_integer(),
            Family::Finite(_) => true,
        }
    }

    /// Whether `r` is a sum of generators with index `<= top`.
    fn decide(&self, r: &Rat, top: Option<usize>) -> bool {
        if r.is_zero() {
            return true;
        }
        if r.is_negative() {
            return false;
        }
        let top = match (top, self.top_index(r)) {
            (Some(t), Some(u)) => t.min(u),
            _ => return false,
        };
        if !self.admissible(r, top) {
            return false;
        }
        let key = (r.clone(), top);
        if let Some(&hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit;
        }
        let found = self
            .choices(r, top)
            .any(|(_, rest)| self.decide(&rest, top.checked_sub(1)));
        self.memo.write().expect("memo lock").insert(key, found);
        found
    }

    /// Candidate multiplicities of generator `top` (largest first) and the residuals they leave.
    fn choices<'a>(&'a self, r: &'a Rat, top: usize) -> impl Iterator<Item = (u64, Rat)> + 'a {
        let g = self.generator(top).expect("index in range");
        let max = (r / &g).floor().to_u64().unwrap_or(0);
        (0..=max).rev().map(move |c| (c, r - &g.mul_int(c)))
    }

    fn check_nonneg(q: &Rat) -> Result<()> {
        if q.is_negative() {
            return Err(Error::Domain(format!("{q} is negative")));
        }
        Ok(())
    }

    /// Exact membership. `0` is the empty sum.
    pub fn contains(&self, q: &Rat) -> Result<bool> {
        Self::check_nonneg(q)?;
        Ok(self.decide(q, Some(usize::MAX)))
    }

    /// A multiset of generators summing to `q`, if one exists.
    pub fn representation(&self, q: &Rat) -> Result<Option<GenMultiset>> {
        if !self.contains(q)? {
            return Ok(None);
        }
        let mut out = GenMultiset::default();
        let mut r = q.clone();
        let mut top = self.top_index(&r);
        while !r.is_zero() {
            let t = top.expect("a member with positive residual has a usable generator");
            let (c, rest) = self
                .choices(&r, t)
                .find(|(_, rest)| self.decide(rest, t.checked_sub(1)))
                .expect("decide() said yes");
            if c > 0 {
                out.0.insert(t, c);
            }
            r = rest;
            top = t.checked_sub(1);
        }
        Ok(Some(out))
    }

    /// Every monoid element `<= bound`, ascending.
    pub fn elements_up_to(&self, bound: &Rat) -> Vec<Rat> {
        let mut set = BTreeSet::from([Rat::zero()]);
        for (_, g) in self.generators_up_to(bound) {
            let snapshot: Vec<Rat> = set.iter().cloned().collect();
            for x in snapshot {
                let mut y = x + &g;
                while y <= *bound {
                    set.insert(y.clone());
                    y += &g;
                }
            }
        }
        set.into_iter().collect()
    }

    /// Least `k <= k_max` with `k*q` in the monoid.
    pub fn integral_multiple_witness(&self, q: &Rat, k_max: u64) -> Result<Option<u64>> {
        if k_max < 1 {
            return Err(Error::Domain("k_max must be at least 1".into()));
        }
        if !q.is_positive() {
            return Err(Error::Domain(format!("{q} is not positive")));
        }
        for k in 1..=k_max {
            if self.contains(&q.mul_int(k))? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// First candidate `s` with `s + n*q` in the monoid for all `1 <= n <= n_max`.
    ///
    /// This is a bounded certificate of almost integrality, not a proof.
    pub fn almost_integral_witness(
        &self,
        q: &Rat,
        candidates: &[Rat],
        n_max: u64,
    ) -> Result<Option<AlmostIntegralWitness>> {
        if !q.is_positive() {
            return Err(Error::Domain(format!("{q} is not positive")));
        }
        for s in candidates {
            if !self.contains(s)? {
                return Err(Error::Domain(format!("candidate {s} is not in the monoid")));
            }
        }
        for s in candidates {
            let mut ok = true;
            for n in 1..=n_max {
                if !self.contains(&(s + &q.mul_int(n)))? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some(AlmostIntegralWitness {
                    s: s.clone(),
                    checked_up_to: n_max,
                }));
            }
        }
        Ok(None)
    }

    /// `max(ceil(s), odd part of the denominator of s) + 2`: past this `n`,
    /// `s + 1/2^n` cannot be a sum of generators of the perturbed family.
    pub fn conductor_gap_proof_bound(s: &Rat) -> u64 {
        let ceil = s.ceil().to_u64().unwrap_or(0);
        let beta = dyadic_split(s).beta.to_u64().unwrap_or(u64::MAX - 2);
        ceil.max(beta) + 2
    }

    /// Least `1 <= n <= n_max` with `s + 1/2^n` outside the monoid.
    pub fn conductor_gap_witness(&self, s: &Rat, n_max: u32) -> Result<Option<u32>> {
        if !self.contains(s)? {
            return Err(Error::Domain(format!("{s} is not in the monoid")));
        }
        for n in 1..=n_max {
            if !self.contains(&(s + &Rat::inv_pow2(n)))? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// Least nonzero element `s <= search_bound` with `q + s` outside the monoid.
    pub fn divisorial_gap_witness(&self, q: &Rat, search_bound: &Rat) -> Result<Option<Rat>> {
        if self.contains(q)? {
            return Err(Error::Precondition(format!("{q} is in the monoid")));
        }
        for s in self.elements_up_to(search_bound).into_iter().skip(1) {
            if !self.contains(&(q + &s))? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Runs [`divisorial_gap_witness`](Self::divisorial_gap_witness) on every
    /// `q = a/2^k` with `0 <= q <= q_max` and `k <= max_level` that lies in
    /// the group of quotients but not in the monoid.
    pub fn divisorial_gap_sweep(&self, q_max: &Rat, max_level: u32, search_bound: &Rat) -> Result<GapSweep> {
        let scale = BigInt::one() << max_level;
        let top = q_max.mul_int(scale.clone()).floor().to_i64().unwrap_or(0);
        let mut sweep = GapSweep {
            checked: 0,
            failures: Vec::new(),
            vacuous: false,
        };
        for a in 0..=top {
            let q = Rat::new(a, scale.clone())?;
            if !self.in_group_of_quotients(&q) || self.contains(&q)? {
                continue;
            }
            sweep.checked += 1;
            if self.divisorial_gap_witness(&q, search_bound)?.is_none() {
                sweep.failures.push(q);
            }
        }
        sweep.vacuous = sweep.checked == 0;
        Ok(sweep)
    }

    /// Closes `{n <= n_max : n*q in M}` under `2m, 3m => m`; reaching 1
    /// certifies that the monoid is not seminormal.
    pub fn seminormal_violation(&self, q: &Rat, n_max: u64) -> Result<SeminormalCertificate> {
        if !q.is_positive() {
            return Err(Error::Domain(format!("{q} is not positive")));
        }
        if self.contains(q)? {
            return Err(Error::Precondition(format!("{q} is in the monoid")));
        }
        let mut members = Vec::new();
        for n in 1..=n_max {
            if self.contains(&q.mul_int(n))? {
                members.push(n);
            }
        }
        let mut closed: BTreeSet<u64> = members.iter().copied().collect();
        let mut chain = Vec::new();
        loop {
            let next =
                (1..=n_max / 3).find(|m| !closed.contains(m) && closed.contains(&(2 * m)) && closed.contains(&(3 * m)));
            match next {
                Some(m) => {
                    closed.insert(m);
                    chain.push(ClosureStep {
                        derived: m,
                        from: [2 * m, 3 * m],
                    });
                }
                None => break,
            }
        }
        Ok(SeminormalCertificate {
            q: q.clone(),
            violated: closed.contains(&1),
            members,
            chain,
            checked_up_to: n_max,
        })
    }

    /// Scans `m = 1..=m_max` for the least `m0` after which every `m/2^level`
    /// is a member. A run of consecutive members as long as some generator
    /// `g` (in units of `1/2^level`) proves the claim for all larger `m`.
    pub fn dyadic_threshold(&self, level: u32, m_max: u64) -> Result<Option<DyadicThreshold>> {
        let unit = Rat::inv_pow2(level);
        let scale = BigInt::one() << level;
        let step = self
            .generators_up_to(&Rat::from_int(m_max as i64))
            .into_iter()
            .map(|(_, g)| g)
            .find(|g| g.mul_int(scale.clone()).is_integer())
            .ok_or_else(|| Error::Resource(format!("no generator on the 1/2^{level} lattice below {m_max}")))?;
        let step_units = step.mul_int(scale).numer().to_u64().unwrap_or(u64::MAX);
        let mut run_start = None;
        for m in 1..=m_max {
            if self.contains(&unit.mul_int(m))? {
                run_start.get_or_insert(m);
            } else {
                run_start = None;
            }
        }
        Ok(run_start
            .filter(|&start| m_max + 1 - start >= step_units)
            .map(|threshold| DyadicThreshold {
                level,
                threshold,
                step,
                checked_up_to: m_max,
            }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn gap_sweep_flags_vacuity() {
        let sweep = QMonoid::perturbed_naturals()
            .divisorial_gap_sweep(&r("2"), 2, &r("8"))
            .unwrap();
        assert_eq!(sweep.checked, 7); // 1/4, 1/2, 3/4, 1, 5/4, 3/2, 7/4
        assert!(sweep.failures.is_empty());
        let n = QMonoid::shifted_naturals()
            .divisorial_gap_sweep(&r("8"), 4, &r("16"))
            .unwrap();
        assert!(n.vacuous);
        let two_three = QMonoid::finite(vec![r("2"), r("3")]).unwrap();
        let sweep = two_three.divisorial_gap_sweep(&r("8"), 0, &r("16")).unwrap();
        assert_eq!(sweep.failures, vec![r("1")]);
    }

    #[test]
    fn generator_enumeration() {
        let s = QMonoid::perturbed_naturals();
        assert_eq!(s.min_gen(), &r("2"));
        let gens: Vec<Rat> = s.generators_up_to(&r("5")).into_iter().map(|(_, g)| g).collect();
        assert_eq!(gens, vec![r("2"), r("5/2"), r("13/4"), r("33/8")]);
        assert!(s.generators_up_to(&r("3/2")).is_empty());
        assert_eq!(s.generators_up_to(&r("2")).len(), 1);
    }

    #[test]
    fn membership_examples() {
        let s = QMonoid::perturbed_naturals();
        assert!(s.contains(&r("2")).unwrap());
        assert!(s.contains(&r("5")).unwrap());
        assert!(s.contains(&r("0")).unwrap());
        assert!(!s.contains(&r("3")).unwrap());
        assert!(!s.contains(&r("7/2")).unwrap());
        assert!(!s.contains(&r("1/3")).unwrap());
        assert!(matches!(s.contains(&r("-1")), Err(Error::Domain(_))));
    }

    #[test]
    fn representation_examples() {
        let s = QMonoid::perturbed_naturals();
        let rep = s.representation(&r("9/2")).unwrap().unwrap();
        assert_eq!(rep.0, BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(s.representation(&r("0")).unwrap().unwrap(), GenMultiset::default());
        let rep = s.representation(&r("5")).unwrap().unwrap();
        assert_eq!(rep.0, BTreeMap::from([(1, 2)]));
        assert_eq!(serde_json::to_string(&rep).unwrap(), r#"{"g_1":2}"#);
        assert_eq!(s.representation(&r("3")).unwrap(), None);
    }

    #[test]
    fn finite_family_validation() {
        assert!(QMonoid::finite(vec![]).is_err());
        assert!(QMonoid::finite(vec![r("0")]).is_err());
        assert!(QMonoid::finite(vec![r("-1/2")]).is_err());
        let m = QMonoid::finite(vec![r("5/2"), r("2"), r("2")]).unwrap();
        assert_eq!(
            m.descriptor(),
            MonoidDescriptor::Finite {
                generators: vec![r("2"), r("5/2")]
            }
        );
        assert!(m.contains(&r("9/2")).unwrap());
        assert!(!m.contains(&r("13/4")).unwrap());
        assert!(m.in_group_of_quotients(&r("1/2")));
        assert!(!m.in_group_of_quotients(&r("1/4")));
    }

    #[test]
    fn descriptor_json() {
        let d: MonoidDescriptor = serde_json::from_str(r#"{"kind":"finite","generators":["2","5/2"]}"#).unwrap();
        assert_eq!(
            d,
            MonoidDescriptor::Finite {
                generators: vec![r("2"), r("5/2")]
            }
        );
        let d: MonoidDescriptor = serde_json::from_str(r#"{"kind":"perturbed-naturals"}"#).unwrap();
        assert_eq!(d, MonoidDescriptor::PerturbedNaturals);
        assert_eq!(
            serde_json::to_string(&QMonoid::perturbed_naturals().descriptor()).unwrap(),
            r#"{"kind":"perturbed-naturals"}"#
        );
    }

    #[test]
    fn group_of_quotients() {
        let s = QMonoid::perturbed_naturals();
        assert!(s.in_group_of_quotients(&r("-7/1024")));
        assert!(!s.in_group_of_quotients(&r("1/6")));
        assert!(QMonoid::shifted_naturals().in_group_of_quotients(&r("-3")));
    }

    #[test]
    fn integral_multiples() {
        let s = QMonoid::perturbed_naturals();
        assert_eq!(s.integral_multiple_witness(&r("1/2"), 20).unwrap(), Some(4));
        assert_eq!(s.integral_multiple_witness(&r("2"), 5).unwrap(), Some(1));
        assert_eq!(s.integral_multiple_witness(&r("1/2"), 3).unwrap(), None);
        assert!(s.integral_multiple_witness(&r("1/2"), 0).is_err());
        assert!(s.integral_multiple_witness(&r("0"), 4).is_err());
    }

    #[test]
    fn almost_integral_examples() {
        let s = QMonoid::perturbed_naturals();
        let w = s.almost_integral_witness(&r("2"), &[r("2")], 10).unwrap().unwrap();
        assert_eq!(
            w,
            AlmostIntegralWitness {
                s: r("2"),
                checked_up_to: 10
            }
        );
        let w = s.almost_integral_witness(&r("1"), &[r("4")], 12).unwrap().unwrap();
        assert_eq!(w.s, r("4"));
        assert!(s.almost_integral_witness(&r("1"), &[r("3")], 12).is_err());
    }

    #[test]
    fn conductor_gap_examples() {
        let s = QMonoid::perturbed_naturals();
        assert_eq!(s.conductor_gap_witness(&r("2"), 10).unwrap(), Some(2));
        assert_eq!(s.conductor_gap_witness(&r("0"), 10).unwrap(), Some(1));
        assert!(s.conductor_gap_witness(&r("3"), 10).is_err());
        assert_eq!(QMonoid::conductor_gap_proof_bound(&r("13/4")), 6);
        assert_eq!(QMonoid::conductor_gap_proof_bound(&r("5")), 7);
        assert_eq!(QMonoid::conductor_gap_proof_bound(&r("0")), 3);
    }

    #[test]
    fn divisorial_gap_examples() {
        let s = QMonoid::perturbed_naturals();
        assert_eq!(s.divisorial_gap_witness(&r("1/2"), &r("10")).unwrap(), Some(r("5/2")));
        assert_eq!(s.divisorial_gap_witness(&r("1"), &r("10")).unwrap(), Some(r("2")));
        assert!(matches!(
            s.divisorial_gap_witness(&r("2"), &r("10")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn seminormal_examples() {
        let s = QMonoid::perturbed_naturals();
        let cert = s.seminormal_violation(&r("1"), 12).unwrap();
        assert!(cert.violated);
        assert_eq!(cert.members, vec![2, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        assert_eq!(
            cert.chain,
            vec![
                ClosureStep {
                    derived: 3,
                    from: [6, 9]
                },
                ClosureStep {
                    derived: 1,
                    from: [2, 3]
                },
            ]
        );
        let n = QMonoid::finite(vec![r("1")]).unwrap();
        assert!(!n.seminormal_violation(&r("1/2"), 12).unwrap().violated);
        assert!(matches!(
            s.seminormal_violation(&r("2"), 12),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn elements_listing() {
        let s = QMonoid::perturbed_naturals();
        let els = s.elements_up_to(&r("5"));
        let expect: Vec<Rat> = ["0", "2", "5/2", "13/4", "4", "33/8", "9/2", "5"]
            .iter()
            .map(|x| r(x))
            .collect();
        assert_eq!(els, expect);
    }

    #[test]
    fn threshold_for_halves() {
        let s = QMonoid::perturbed_naturals();
        let t = s.dyadic_threshold(1, 40).unwrap().unwrap();
        // every m/2 >= t/2 is a member; the one just below is not
        assert!(!s.contains(&Rat::frac(t.threshold as i64 - 1, 2)).unwrap());
        for m in t.threshold..=40 {
            assert!(s.contains(&Rat::frac(m as i64, 2)).unwrap());
        }
        assert_eq!(s.dyadic_threshold(1, 4).unwrap(), None);
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let s = QMonoid::perturbed_naturals();
        std::thread::scope(|scope| {
            for _ in 0..4 {
                scope.spawn(|| {
                    for k in 0..64 {
                        let q = Rat::frac(k, 4);
                        let rep = s.representation(&q).unwrap();
                        if let Some(rep) = rep {
                            assert_eq!(rep.value(&s), q);
                        }
                    }
                });
            }
        });
    }
}

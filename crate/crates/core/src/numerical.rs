//! Numerical semigroups: submonoids of `N` with finite complement.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GensJson", into = "GensJson")]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    conductor: u64,
    /// Membership of `0..conductor`.
    table: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct GensJson {
    generators: Vec<u64>,
}

impl TryFrom<GensJson> for NumericalSemigroup {
    type Error = Error;
    fn try_from(g: GensJson) -> Result<Self> {
        Self::new(&g.generators)
    }
}

impl From<NumericalSemigroup> for GensJson {
    fn from(s: NumericalSemigroup) -> Self {
        GensJson { generators: s.gens }
    }
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, which must be positive with gcd 1.
    /// Generators are reduced to the minimal system.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::Domain(format!(
                "generators must be positive and nonempty, got {gens:?}"
            )));
        }
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::Domain(format!("generators {gens:?} have gcd {g}")));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let (lo, hi) = (sorted[0], *sorted.last().expect("nonempty"));
        // Frobenius number is below lo * hi.
        let limit = (lo * hi) as usize + 1;
        let mut reach = vec![false; limit];
        reach[0] = true;
        for v in 1..limit {
            reach[v] = sorted.iter().any(|&g| g as usize <= v && reach[v - g as usize]);
        }
        let conductor = reach.iter().rposition(|&b| !b).map_or(0, |f| f + 1);
        let mut minimal = Vec::new();
        for &g in &sorted {
            let mut r = vec![false; g as usize + 1];
            r[0] = true;
            for v in 1..=g as usize {
                r[v] = minimal.iter().any(|&m: &u64| m as usize <= v && r[v - m as usize]);
            }
            if !r[g as usize] {
                minimal.push(g);
            }
        }
        reach.truncate(conductor);
        Ok(Self {
            gens: minimal,
            conductor: conductor as u64,
            table: reach,
        })
    }

    /// `N` itself.
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("valid")
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, or `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as u64 >= self.conductor || self.table[x as usize])
    }

    /// Multiplicities of the minimal generators summing to `x`, if `x` is a member.
    pub fn representation(&self, x: i64) -> Option<Vec<u64>> {
        if !self.contains(x) {
            return None;
        }
        let x = x as usize;
        // last[v] = index of a generator used last in some representation of v
        let mut last: Vec<Option<usize>> = vec![None; x + 1];
        let mut reach = vec![false; x + 1];
        reach[0] = true;
        for v in 1..=x {
            for (i, &g) in self.gens.iter().enumerate() {
                if g as usize <= v && reach[v - g as usize] {
                    reach[v] = true;
                    last[v] = Some(i);
                    break;
                }
            }
        }
        let mut counts = vec![0u64; self.gens.len()];
        let mut v = x;
        while v > 0 {
            let i = last[v].expect("reachable");
            counts[i] += 1;
            v -= self.gens[i] as usize;
        }
        Some(counts)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&x| !self.table[x as usize]).collect()
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(u64::to_string).collect();
        write!(f, "<{}>", g.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_semigroups() {
        let s = NumericalSemigroup::new(&[3, 2]).unwrap();
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.gaps(), vec![1]);
        assert!(!s.contains(-2) && s.contains(0) && !s.contains(1) && s.contains(7));

        let t = NumericalSemigroup::new(&[3, 4, 5, 6, 8]).unwrap();
        assert_eq!(t.generators(), &[3, 4, 5]);
        assert_eq!(t.gaps(), vec![1, 2]);

        let u = NumericalSemigroup::new(&[2, 5]).unwrap();
        assert_eq!(u.frobenius(), 3);
        assert_eq!(u.representation(9), Some(vec![2, 1]));
        assert_eq!(u.representation(3), None);
        assert_eq!(u.representation(0), Some(vec![0, 0]));

        let n = NumericalSemigroup::naturals();
        assert!(n.is_naturals());
        assert_eq!(n.frobenius(), -1);
        assert!(n.contains(0) && n.contains(1));
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(NumericalSemigroup::new(&[2, 4]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let s: NumericalSemigroup = serde_json::from_str(r#"{"generators":[5,2]}"#).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"generators":[2,5]}"#);
        assert!(serde_json::from_str::<NumericalSemigroup>(r#"{"generators":[4,6]}"#).is_err());
    }
}

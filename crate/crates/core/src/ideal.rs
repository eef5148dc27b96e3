//! Star-operation calculus for ideals of numerical semigroups and of
//! products of two numerical semigroups.
//!
//! Every set handled here is a [`GridSet`]: empty below a corner `lo`, and
//! past a corner `hi` membership no longer changes along any axis, i.e.
//! `p in X` iff `clamp(p, hi) in X`. Ideals of these monoids have this shape
//! (for a translate `g + S` take `hi = g + conductor`), and it is preserved by
//! translation, finite intersection and union, so colons, closures and
//! radicals are computed exactly on a finite box.
//!
//! One-dimensional sets use points `[x, 0]`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerical::NumericalSemigroup;

pub type Point = [i64; 2];

/// Ideals with more minimal generators than this are refused by `t_closure`.
pub const T_CLOSURE_MAX_GENERATORS: usize = 12;

/// Search nodes above this are refused by the ideal enumeration.
pub const ENUMERATION_NODE_CAP: u64 = 2_000_000;

fn add(p: Point, q: Point) -> Point {
    [p[0] + q[0], p[1] + q[1]]
}

fn sub(p: Point, q: Point) -> Point {
    [p[0] - q[0], p[1] - q[1]]
}

fn pmin(p: Point, q: Point) -> Point {
    [p[0].min(q[0]), p[1].min(q[1])]
}

fn pmax(p: Point, q: Point) -> Point {
    [p[0].max(q[0]), p[1].max(q[1])]
}

fn box_points(lo: Point, hi: Point) -> impl Iterator<Item = Point> {
    (lo[0]..=hi[0]).flat_map(move |x| (lo[1]..=hi[1]).map(move |y| [x, y]))
}

/// A subset of `Z^2` empty below `lo` and constant past `hi` on every axis.
#[derive(Clone)]
pub struct GridSet {
    lo: Point,
    hi: Point,
    bits: Vec<bool>,
}

impl GridSet {
    pub fn from_fn(lo: Point, hi: Point, f: impl Fn(Point) -> bool) -> Self {
        let hi = pmax(lo, hi);
        GridSet {
            lo,
            hi,
            bits: box_points(lo, hi).map(f).collect(),
        }
    }

    pub fn empty() -> Self {
        GridSet {
            lo: [0, 0],
            hi: [0, 0],
            bits: vec![false],
        }
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn contains(&self, p: Point) -> bool {
        if p[0] < self.lo[0] || p[1] < self.lo[1] {
            return false;
        }
        let c = pmin(p, self.hi);
        let width = self.hi[1] - self.lo[1] + 1;
        self.bits[((c[0] - self.lo[0]) * width + (c[1] - self.lo[1])) as usize]
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn translate(&self, t: Point) -> Self {
        GridSet {
            lo: add(self.lo, t),
            hi: add(self.hi, t),
            bits: self.bits.clone(),
        }
    }

    pub fn intersect(&self, other: &GridSet) -> Self {
        GridSet::from_fn(pmax(self.lo, other.lo), pmax(self.hi, other.hi), |p| {
            self.contains(p) && other.contains(p)
        })
    }

    pub fn union(&self, other: &GridSet) -> Self {
        GridSet::from_fn(pmin(self.lo, other.lo), pmax(self.hi, other.hi), |p| {
            self.contains(p) || other.contains(p)
        })
    }

    /// A box on which both sets are fully determined.
    fn joint_box(&self, other: &GridSet) -> (Point, Point) {
        (pmin(self.lo, other.lo), pmax(self.hi, other.hi))
    }

    pub fn is_subset(&self, other: &GridSet) -> bool {
        let (lo, hi) = self.joint_box(other);
        box_points(lo, hi).all(|p| !self.contains(p) || other.contains(p))
    }

    /// Members inside the box `[lo, hi]`.
    pub fn members(&self) -> Vec<Point> {
        box_points(self.lo, self.hi).filter(|&p| self.contains(p)).collect()
    }

    /// Shrinks the box to the smallest one describing the same set.
    pub fn tightened(&self) -> Self {
        if self.is_empty() {
            return GridSet::empty();
        }
        let members = self.members();
        let lo = members.iter().fold([i64::MAX, i64::MAX], |a, &p| pmin(a, p));
        let mut hi = self.hi;
        for axis in 0..2 {
            while hi[axis] > lo[axis] {
                let mut lower = hi;
                lower[axis] -= 1;
                let stable = box_points(self.lo, hi).filter(|p| p[axis] == hi[axis]).all(|p| {
                    let mut q = p;
                    q[axis] -= 1;
                    self.contains(p) == self.contains(q)
                });
                if !stable {
                    break;
                }
                hi = lower;
            }
        }
        GridSet::from_fn(lo, hi, |p| self.contains(p))
    }
}

impl PartialEq for GridSet {
    fn eq(&self, other: &GridSet) -> bool {
        let (lo, hi) = self.joint_box(other);
        box_points(lo, hi).all(|p| self.contains(p) == other.contains(p))
    }
}

impl Eq for GridSet {}

impl fmt::Debug for GridSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tightened();
        write!(
            f,
            "GridSet{{lo: {:?}, hi: {:?}, members: {:?}}}",
            t.lo,
            t.hi,
            t.members()
        )
    }
}

/// A numerical semigroup or a product of two of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowMonoid {
    factors: Vec<NumericalSemigroup>,
}

impl WindowMonoid {
    pub fn new(factors: Vec<NumericalSemigroup>) -> Result<Self> {
        if factors.is_empty() || factors.len() > 2 {
            return Err(Error::Domain(format!("dimension {} is not 1 or 2", factors.len())));
        }
        Ok(Self { factors })
    }

    pub fn numerical(gens: &[u64]) -> Result<Self> {
        Self::new(vec![NumericalSemigroup::new(gens)?])
    }

    pub fn product(g1: &[u64], g2: &[u64]) -> Result<Self> {
        Self::new(vec![NumericalSemigroup::new(g1)?, NumericalSemigroup::new(g2)?])
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[NumericalSemigroup] {
        &self.factors
    }

    pub fn contains(&self, p: Point) -> bool {
        self.factors.iter().enumerate().all(|(i, s)| s.contains(p[i])) && (self.dim() == 2 || p[1] == 0)
    }

    pub fn generators(&self) -> Vec<Point> {
        let mut out: Vec<Point> = self.factors[0].generators().iter().map(|&g| [g as i64, 0]).collect();
        if let Some(s2) = self.factors.get(1) {
            out.extend(s2.generators().iter().map(|&g| [0, g as i64]));
        }
        out
    }

    pub fn conductor(&self) -> Point {
        [
            self.factors[0].conductor() as i64,
            self.factors.get(1).map_or(0, |s| s.conductor() as i64),
        ]
    }

    /// Per-axis multiplicity (0 on the unused axis).
    pub fn multiplicity(&self) -> Point {
        [
            self.factors[0].multiplicity() as i64,
            self.factors.get(1).map_or(0, |s| s.multiplicity() as i64),
        ]
    }

    pub fn as_set(&self) -> GridSet {
        GridSet::from_fn([0, 0], self.conductor(), |p| self.contains(p))
    }

    /// Translates a point given with `dim()` coordinates.
    pub fn point(&self, coords: &[i64]) -> Result<Point> {
        match (self.dim(), coords) {
            (1, [x]) => Ok([*x, 0]),
            (2, [x, y]) => Ok([*x, *y]),
            _ => Err(Error::Domain(format!(
                "point {coords:?} does not have {} coordinates",
                self.dim()
            ))),
        }
    }

    pub fn coords(&self, p: Point) -> Vec<i64> {
        p[..self.dim()].to_vec()
    }
}

impl fmt::Display for WindowMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// JSON form of a monoid: `{"generators":[2,3]}` or `{"factors":[[2,3],[2,3]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidJson {
    Numerical { generators: Vec<u64> },
    Product { factors: Vec<Vec<u64>> },
}

impl MonoidJson {
    pub fn build(&self) -> Result<WindowMonoid> {
        match self {
            MonoidJson::Numerical { generators } => WindowMonoid::numerical(generators),
            MonoidJson::Product { factors } => WindowMonoid::new(
                factors
                    .iter()
                    .map(|g| NumericalSemigroup::new(g))
                    .collect::<Result<_>>()?,
            ),
        }
    }

    pub fn of(m: &WindowMonoid) -> Self {
        match m.factors() {
            [s] => MonoidJson::Numerical {
                generators: s.generators().to_vec(),
            },
            fs => MonoidJson::Product {
                factors: fs.iter().map(|s| s.generators().to_vec()).collect(),
            },
        }
    }
}

/// An ideal (possibly fractional) of a window monoid: a nonempty set `E`
/// bounded below with `E + S` contained in `E`.
#[derive(Clone, PartialEq, Eq)]
pub struct SgIdeal {
    monoid: Arc<WindowMonoid>,
    set: GridSet,
}

impl fmt::Debug for SgIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<Vec<i64>> = self.generators().into_iter().map(|p| self.monoid.coords(p)).collect();
        write!(f, "({gens:?}) + {}", self.monoid)
    }
}

impl SgIdeal {
    /// The ideal generated by `gens`.
    pub fn from_generators(monoid: &Arc<WindowMonoid>, gens: &[Point]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("an ideal needs at least one generator".into()));
        }
        let c = monoid.conductor();
        let lo = gens.iter().fold(gens[0], |a, &g| pmin(a, g));
        let hi = add(gens.iter().fold(gens[0], |a, &g| pmax(a, g)), c);
        let set = GridSet::from_fn(lo, hi, |p| gens.iter().any(|&g| monoid.contains(sub(p, g))));
        Ok(SgIdeal {
            monoid: monoid.clone(),
            set,
        })
    }

    /// Wraps a set the caller knows to be a nonempty `S`-stable set.
    fn from_set(monoid: &Arc<WindowMonoid>, set: GridSet) -> Self {
        debug_assert!(!set.is_empty());
        SgIdeal {
            monoid: monoid.clone(),
            set,
        }
    }

    pub fn whole(monoid: &Arc<WindowMonoid>) -> Self {
        Self::from_set(monoid, monoid.as_set())
    }

    /// `M = S \ {0}`.
    pub fn maximal(monoid: &Arc<WindowMonoid>) -> Self {
        Self::from_generators(monoid, &monoid.generators()).expect("nonempty")
    }

    pub fn principal(monoid: &Arc<WindowMonoid>, g: Point) -> Self {
        Self::from_generators(monoid, &[g]).expect("nonempty")
    }

    pub fn monoid(&self) -> &Arc<WindowMonoid> {
        &self.monoid
    }

    pub fn set(&self) -> &GridSet {
        &self.set
    }

    pub fn contains(&self, p: Point) -> bool {
        self.set.contains(p)
    }

    fn same_parent(&self, other: &SgIdeal) -> Result<()> {
        if self.monoid != other.monoid {
            return Err(Error::Domain(format!(
                "ideals live in {} and {}",
                self.monoid, other.monoid
            )));
        }
        Ok(())
    }

    /// Minimal generators: members `f` with `f - g` outside for every
    /// monoid generator `g`. Past `hi + multiplicity` on an axis, stepping
    /// back by the multiplicity stays past `hi`, so the search box is finite.
    pub fn generators(&self) -> Vec<Point> {
        let gens = self.monoid.generators();
        let top = add(self.set.hi, self.monoid.multiplicity());
        box_points(self.set.lo, top)
            .filter(|&p| self.contains(p) && gens.iter().all(|&g| !self.contains(sub(p, g))))
            .collect()
    }

    pub fn is_subset(&self, other: &SgIdeal) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn is_integral(&self) -> bool {
        self.set.is_subset(&self.monoid.as_set())
    }

    /// Integral and not the whole monoid.
    pub fn is_proper(&self) -> bool {
        self.is_integral() && !self.contains([0, 0])
    }

    pub fn translate(&self, t: Point) -> SgIdeal {
        Self::from_set(&self.monoid, self.set.translate(t))
    }

    pub fn intersect(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.same_parent(other)?;
        let set = self.set.intersect(&other.set);
        // Translates of a common point lie in both ideals, so the
        // intersection of ideals is never empty.
        Ok(Self::from_set(&self.monoid, set))
    }

    pub fn union(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.same_parent(other)?;
        Ok(Self::from_set(&self.monoid, self.set.union(&other.set)))
    }

    /// `(E : F) = {x : x + F in E}`, the intersection of `E - f` over the
    /// generators `f` of `F`.
    pub fn colon(&self, f: &SgIdeal) -> Result<SgIdeal> {
        self.same_parent(f)?;
        let gens = f.generators();
        let mut acc = self.set.translate([-gens[0][0], -gens[0][1]]);
        for g in &gens[1..] {
            acc = acc.intersect(&self.set.translate([-g[0], -g[1]]));
        }
        Ok(Self::from_set(&self.monoid, acc))
    }

    /// `(S : E)`.
    pub fn dual(&self) -> SgIdeal {
        SgIdeal::whole(&self.monoid).colon(self).expect("same parent")
    }

    /// Sumset `E + F`, the monoid form of the ideal product.
    pub fn sum(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.same_parent(other)?;
        let (a, b) = (self.generators(), other.generators());
        let gens: Vec<Point> = a.iter().flat_map(|&p| b.iter().map(move |&q| add(p, q))).collect();
        Self::from_generators(&self.monoid, &gens)
    }

    /// `k`-fold sum `E + ... + E`, `k >= 1`.
    pub fn power(&self, k: u32) -> Result<SgIdeal> {
        if k == 0 {
            return Err(Error::Domain("power must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.sum(self)?;
        }
        Ok(acc)
    }

    /// `E_v = (S : (S : E))`.
    pub fn v_closure(&self) -> SgIdeal {
        self.dual().dual()
    }

    pub fn is_divisorial(&self) -> bool {
        self.v_closure() == *self
    }

    /// Union of `J_v` over the ideals `J` generated by nonempty subsets of
    /// the minimal generators of `E`. Every finitely generated ideal inside
    /// `E` lies in one of these, so this is `E_t`.
    pub fn t_closure(&self) -> Result<SgIdeal> {
        let gens = self.generators();
        if gens.len() > T_CLOSURE_MAX_GENERATORS {
            return Err(Error::Resource(format!(
                "{} minimal generators exceeds the subset cap {T_CLOSURE_MAX_GENERATORS}",
                gens.len()
            )));
        }
        let mut acc: Option<GridSet> = None;
        for mask in 1u32..1 << gens.len() {
            let sub: Vec<Point> = (0..gens.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| gens[i])
                .collect();
            let jv = SgIdeal::from_generators(&self.monoid, &sub)?.v_closure();
            acc = Some(match acc {
                None => jv.set,
                Some(a) => a.union(&jv.set),
            });
        }
        let t = Self::from_set(&self.monoid, acc.expect("at least one generator"));
        debug_assert_eq!(t, self.v_closure());
        Ok(t)
    }

    fn require_proper(&self) -> Result<()> {
        if !self.is_integral() {
            return Err(Error::Precondition(format!("{self:?} is not integral")));
        }
        if self.contains([0, 0]) {
            return Err(Error::Precondition("the whole monoid is not a proper ideal".into()));
        }
        Ok(())
    }

    /// `(S : E) = (E : E)`.
    pub fn is_strong(&self) -> Result<bool> {
        self.require_proper()?;
        Ok(self.dual() == self.colon(self)?)
    }

    pub fn is_strongly_divisorial(&self) -> Result<bool> {
        Ok(self.is_strong()? && self.is_divisorial())
    }

    /// `x + y in E` with `x, y in S` forces `x in E` or `y in E`. Pairs past
    /// `hi` clamp to pairs inside the box with the same memberships, so
    /// checking the box `[0, hi]` is exhaustive.
    pub fn is_prime(&self) -> Result<bool> {
        self.require_proper()?;
        let hi = pmax(self.set.hi, self.monoid.conductor());
        let outside: Vec<Point> = box_points([0, 0], hi)
            .filter(|&p| self.monoid.contains(p) && !self.contains(p))
            .collect();
        Ok(outside
            .iter()
            .all(|&x| outside.iter().all(|&y| !self.contains(add(x, y)))))
    }

    /// A pair `x, y` outside `E` with `x + y` in `E`, if any.
    pub fn primality_witness(&self) -> Result<Option<(Point, Point)>> {
        self.require_proper()?;
        let hi = pmax(self.set.hi, self.monoid.conductor());
        let outside: Vec<Point> = box_points([0, 0], hi)
            .filter(|&p| self.monoid.contains(p) && !self.contains(p))
            .collect();
        for &x in &outside {
            for &y in &outside {
                if self.contains(add(x, y)) {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }

    /// `{x in S : n x in E for some n >= 1}`.
    pub fn radical(&self) -> Result<SgIdeal> {
        if !self.is_integral() {
            return Err(Error::Domain(format!("{self:?} is not integral")));
        }
        let hi = pmax(self.set.hi, self.monoid.conductor());
        let set = GridSet::from_fn([0, 0], hi, |x| {
            if !self.monoid.contains(x) {
                return false;
            }
            // Once every positive coordinate of n x passes hi, clamp(n x)
            // stops changing.
            let mut p = x;
            loop {
                if self.contains(p) {
                    return true;
                }
                let settled = (0..2).all(|i| x[i] == 0 || p[i] >= hi[i]);
                if settled {
                    return false;
                }
                p = add(p, x);
            }
        });
        Ok(Self::from_set(&self.monoid, set))
    }

    /// `(E + (S : E))_v = S`.
    pub fn is_t_invertible(&self) -> Result<bool> {
        Ok(self.sum(&self.dual())?.v_closure() == SgIdeal::whole(&self.monoid))
    }

    /// `(E :_S x) = {y in S : y + x in E}`.
    pub fn colon_in_s(&self, x: Point) -> SgIdeal {
        let set = self.set.translate([-x[0], -x[1]]).intersect(&self.monoid.as_set());
        Self::from_set(&self.monoid, set)
    }

    pub fn to_json(&self) -> IdealJson {
        let t = self.set.tightened();
        let dim = self.monoid.dim();
        IdealJson {
            min: t.lo[..dim].to_vec(),
            window_members: t
                .members()
                .into_iter()
                .filter(|p| dim == 2 || p[0] < t.hi[0])
                .map(|p| p[..dim].to_vec())
                .collect(),
            tail_from: t.hi[..dim].to_vec(),
            generators: self.generators().into_iter().map(|p| p[..dim].to_vec()).collect(),
        }
    }
}

/// Exported shape of an ideal: corner `min`, the members in the box below
/// `tail_from`, and membership past `tail_from` constant along each axis
/// (in one dimension: everything from `tail_from` on is a member).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub min: Vec<i64>,
    pub window_members: Vec<Vec<i64>>,
    pub tail_from: Vec<i64>,
    pub generators: Vec<Vec<i64>>,
}

/// All proper integral ideals having an element of coordinate sum at most
/// `min_bound` and all minimal generators in the box
/// `[0, min_bound + conductor + multiplicity]`. In dimension 1 the box
/// condition is automatic, so the list is complete.
pub fn enumerate_ideals(monoid: &Arc<WindowMonoid>, min_bound: i64) -> Result<Vec<SgIdeal>> {
    if min_bound < 0 {
        return Err(Error::Domain(format!("bound {min_bound} is negative")));
    }
    let dim = monoid.dim();
    let c = monoid.conductor();
    let m = monoid.multiplicity();
    let hi = [
        min_bound + c[0] + m[0],
        if dim == 2 { min_bound + c[1] + m[1] } else { 0 },
    ];
    let mut pts: Vec<Point> = box_points([0, 0], hi)
        .filter(|&p| p != [0, 0] && monoid.contains(p))
        .collect();
    pts.sort_by_key(|p| (p[0] + p[1], *p));
    let index = |p: Point| pts.binary_search_by_key(&(p[0] + p[1], p), |q| (q[0] + q[1], *q)).ok();
    let gens = monoid.generators();
    let preds: Vec<Vec<usize>> = pts
        .iter()
        .map(|&p| gens.iter().filter_map(|&g| index(sub(p, g))).collect())
        .collect();

    struct Walk<'a> {
        pts: &'a [Point],
        preds: &'a [Vec<usize>],
        bound: i64,
        chosen: Vec<bool>,
        out: Vec<Vec<Point>>,
        nodes: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, i: usize, any: bool) -> Result<()> {
            self.nodes += 1;
            if self.nodes > ENUMERATION_NODE_CAP {
                return Err(Error::Resource(format!(
                    "ideal enumeration exceeded {ENUMERATION_NODE_CAP} nodes"
                )));
            }
            if i == self.pts.len() {
                if any {
                    let gens = (0..self.pts.len())
                        .filter(|&j| self.chosen[j] && !self.preds[j].iter().any(|&k| self.chosen[k]))
                        .map(|j| self.pts[j])
                        .collect();
                    self.out.push(gens);
                }
                return Ok(());
            }
            let p = self.pts[i];
            if !any && p[0] + p[1] > self.bound {
                return Ok(());
            }
            if self.preds[i].iter().any(|&k| self.chosen[k]) {
                self.chosen[i] = true;
                self.go(i + 1, true)?;
                self.chosen[i] = false;
                return Ok(());
            }
            self.go(i + 1, any)?;
            self.chosen[i] = true;
            self.go(i + 1, true)?;
            self.chosen[i] = false;
            Ok(())
        }
    }
    let mut walk = Walk {
        pts: &pts,
        preds: &preds,
        bound: min_bound,
        chosen: vec![false; pts.len()],
        out: Vec::new(),
        nodes: 0,
    };
    walk.go(0, false)?;
    walk.out
        .into_iter()
        .map(|g| SgIdeal::from_generators(monoid, &g))
        .collect()
}

/// The strongly divisorial members of [`enumerate_ideals`].
pub fn enumerate_strongly_divisorial(monoid: &Arc<WindowMonoid>, min_bound: i64) -> Result<Vec<SgIdeal>> {
    let mut out = Vec::new();
    for e in enumerate_ideals(monoid, min_bound)? {
        if e.is_strongly_divisorial()? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Elements not strictly contained in another element of `ideals`.
pub fn maximal_elements(ideals: &[SgIdeal]) -> Vec<SgIdeal> {
    ideals
        .iter()
        .filter(|e| !ideals.iter().any(|f| f != *e && e.is_subset(f)))
        .cloned()
        .collect()
}

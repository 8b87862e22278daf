//! Relations on `{1..n}`, the five order classes, class enumerators, and
//! unit interval representations for semiorders.
//!
//! A [`Relation`] is a set of ordered pairs (arcs) over the ground set
//! `{1..n}`, stored as a bitmask over the arc set `A_n = {(i,j) : i != j}`.
//! Loops are not representable by construction.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest ground-set size any class enumerator supports.
pub const MAX_GROUND: usize = 8;

/// An ordered pair `(i, j)` of distinct elements, 1-based.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc(pub u8, pub u8);

impl Arc {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1, "arc must join distinct elements >= 1");
        Arc(i as u8, j as u8)
    }

    pub fn reversed(self) -> Self {
        Arc(self.1, self.0)
    }

    pub fn max_element(self) -> usize {
        self.0.max(self.1) as usize
    }

    /// Position of this arc in the fixed lexicographic order on `A_n`.
    pub fn index(self, n: usize) -> usize {
        let (i, j) = (self.0 as usize, self.1 as usize);
        debug_assert!(i <= n && j <= n);
        (i - 1) * (n - 1) + (j - 1) - usize::from(j > i)
    }

    /// Inverse of [`Arc::index`].
    pub fn from_index(idx: usize, n: usize) -> Self {
        let i = idx / (n - 1) + 1;
        let r = idx % (n - 1);
        let j = if r + 1 >= i { r + 2 } else { r + 1 };
        Arc(i as u8, j as u8)
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.0, self.1).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (i, j): (u8, u8) = Deserialize::deserialize(d)?;
        if i == j || i == 0 || j == 0 {
            return Err(D::Error::custom(format!("invalid arc ({i},{j})")));
        }
        Ok(Arc(i, j))
    }
}

/// Number of arcs in `A_n`.
pub fn arc_count(n: usize) -> usize {
    n * (n - 1)
}

/// All arcs of `A_n` in the fixed lexicographic order.
pub fn all_arcs(n: usize) -> impl Iterator<Item = Arc> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| Arc::new(i, j)))
}

/// The five classes of order relations, nested as
/// `LinearOrder ⊆ StrictWeakOrder ⊆ Semiorder ⊆ IntervalOrder ⊆ PartialOrder`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderClass {
    LinearOrder,
    StrictWeakOrder,
    Semiorder,
    IntervalOrder,
    PartialOrder,
}

impl OrderClass {
    pub const ALL: [OrderClass; 5] = [
        OrderClass::LinearOrder,
        OrderClass::StrictWeakOrder,
        OrderClass::Semiorder,
        OrderClass::IntervalOrder,
        OrderClass::PartialOrder,
    ];

    /// Short token used by the CLI and file formats.
    pub fn token(self) -> &'static str {
        match self {
            OrderClass::LinearOrder => "lo",
            OrderClass::StrictWeakOrder => "swo",
            OrderClass::Semiorder => "so",
            OrderClass::IntervalOrder => "io",
            OrderClass::PartialOrder => "po",
        }
    }

    /// Largest ground-set size `enumerate` supports for this class.
    pub fn max_n(self) -> usize {
        match self {
            OrderClass::LinearOrder => 8,
            OrderClass::StrictWeakOrder => 7,
            OrderClass::Semiorder => 7,
            OrderClass::IntervalOrder => 6,
            OrderClass::PartialOrder => 6,
        }
    }

    /// Class membership predicate.
    pub fn contains(self, r: &Relation) -> bool {
        match self {
            OrderClass::LinearOrder => r.is_linear_order(),
            OrderClass::StrictWeakOrder => r.is_strict_weak_order(),
            OrderClass::Semiorder => r.is_semiorder(),
            OrderClass::IntervalOrder => r.is_interval_order(),
            OrderClass::PartialOrder => r.is_partial_order(),
        }
    }
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for OrderClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lo" => Ok(OrderClass::LinearOrder),
            "swo" => Ok(OrderClass::StrictWeakOrder),
            "so" => Ok(OrderClass::Semiorder),
            "io" => Ok(OrderClass::IntervalOrder),
            "po" => Ok(OrderClass::PartialOrder),
            other => Err(Error::Parse {
                msg: format!("unknown order class `{other}` (expected lo|swo|so|io|po)"),
                col: 0,
            }),
        }
    }
}

/// An irreflexive binary relation on `{1..n}`, `2 <= n <= 8`.
///
/// Membership queries and mutations are O(1); equality is bitwise.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    n: usize,
    bits: u64,
}

impl Relation {
    /// The empty relation (antichain) on `{1..n}`.
    pub fn empty(n: usize) -> Self {
        assert!((2..=MAX_GROUND).contains(&n), "ground set size {n} out of range 2..=8");
        Relation { n, bits: 0 }
    }

    pub fn from_arcs(n: usize, arcs: &[Arc]) -> Result<Self> {
        let mut r = Relation::empty(n);
        for &a in arcs {
            if a.max_element() > n {
                return Err(Error::Parse {
                    msg: format!("arc {a} exceeds ground set {{1..{n}}}"),
                    col: 0,
                });
            }
            r.insert(a);
        }
        Ok(r)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(pairs.len());
        for &(i, j) in pairs {
            if i == j || i == 0 || j == 0 {
                return Err(Error::Parse {
                    msg: format!("invalid pair ({i},{j})"),
                    col: 0,
                });
            }
            arcs.push(Arc::new(i, j));
        }
        Relation::from_arcs(n, &arcs)
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> Self {
        debug_assert!(bits >> arc_count(n) == 0);
        Relation { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.bits >> a.index(self.n) & 1 == 1
    }

    pub fn insert(&mut self, a: Arc) {
        assert!(a.max_element() <= self.n);
        self.bits |= 1 << a.index(self.n);
    }

    pub fn remove(&mut self, a: Arc) {
        self.bits &= !(1 << a.index(self.n));
    }

    /// Arcs in the fixed lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        all_arcs(self.n).filter(move |&a| self.contains(a))
    }

    /// `χ^R` over `A_n` in the fixed arc order.
    pub fn characteristic_vector(&self) -> Vec<u8> {
        (0..arc_count(self.n)).map(|k| (self.bits >> k & 1) as u8).collect()
    }

    /// Complement within the arc set `A_n` (not a class member in general).
    pub fn complement(&self) -> Relation {
        let mask = (1u64 << arc_count(self.n)) - 1;
        Relation { n: self.n, bits: !self.bits & mask }
    }

    /// Size of the symmetric difference `|self Δ other|`.
    pub fn symmetric_difference_size(&self, other: &Relation) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch { left: self.n, right: other.n });
        }
        Ok((self.bits ^ other.bits).count_ones() as usize)
    }

    /// Image under a permutation of `{1..n}`; `perm[i-1]` is the image of `i`.
    pub fn relabel(&self, perm: &[usize]) -> Relation {
        let mut out = Relation::empty(self.n);
        for a in self.arcs() {
            out.insert(Arc::new(perm[a.0 as usize - 1], perm[a.1 as usize - 1]));
        }
        out
    }

    fn out_mask(&self, i: usize) -> u64 {
        // elements j with i -> j, as a bitmask over {1..n} (bit j-1)
        let mut m = 0u64;
        for j in 1..=self.n {
            if j != i && self.contains(Arc::new(i, j)) {
                m |= 1 << (j - 1);
            }
        }
        m
    }

    fn in_mask(&self, j: usize) -> u64 {
        let mut m = 0u64;
        for i in 1..=self.n {
            if i != j && self.contains(Arc::new(i, j)) {
                m |= 1 << (i - 1);
            }
        }
        m
    }

    pub fn is_asymmetric(&self) -> bool {
        self.arcs().all(|a| !self.contains(a.reversed()))
    }

    pub fn is_transitive(&self) -> bool {
        let outs: Vec<u64> = (1..=self.n).map(|i| self.out_mask(i)).collect();
        self.arcs().all(|a| outs[a.1 as usize - 1] & !outs[a.0 as usize - 1] == 0)
    }

    /// Asymmetric and transitive (irreflexivity is structural).
    pub fn is_partial_order(&self) -> bool {
        self.is_asymmetric() && self.is_transitive()
    }

    /// Partial order that is total.
    pub fn is_linear_order(&self) -> bool {
        self.is_partial_order() && self.len() == self.n * (self.n - 1) / 2
    }

    /// Partial order that is negatively transitive:
    /// `i R k` implies `i R j` or `j R k` for every `j`.
    pub fn is_strict_weak_order(&self) -> bool {
        if !self.is_partial_order() {
            return false;
        }
        let full = (1u64 << self.n) - 1;
        for a in self.arcs() {
            let (i, k) = (a.0 as usize, a.1 as usize);
            let covered = self.out_mask(i) | self.in_mask(k) | 1 << (i - 1) | 1 << (k - 1);
            if covered != full {
                return false;
            }
        }
        true
    }

    /// Does some 4-element subset induce the poset `2+2`?
    ///
    /// Errors if the relation is not a partial order.
    pub fn contains_two_plus_two(&self) -> Result<bool> {
        if !self.is_partial_order() {
            return Err(Error::NotPartialOrder);
        }
        Ok(self.two_plus_two_unchecked())
    }

    fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.contains(Arc::new(i, j)) && !self.contains(Arc::new(j, i))
    }

    fn two_plus_two_unchecked(&self) -> bool {
        let arcs: Vec<Arc> = self.arcs().collect();
        for &Arc(a, b) in &arcs {
            for &Arc(c, d) in &arcs {
                let (a, b, c, d) = (a as usize, b as usize, c as usize, d as usize);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if self.incomparable(a, c)
                    && self.incomparable(a, d)
                    && self.incomparable(b, c)
                    && self.incomparable(b, d)
                {
                    return true;
                }
            }
        }
        false
    }

    /// Does some 4-element subset induce the poset `3+1`?
    ///
    /// Errors if the relation is not a partial order.
    pub fn contains_three_plus_one(&self) -> Result<bool> {
        if !self.is_partial_order() {
            return Err(Error::NotPartialOrder);
        }
        Ok(self.three_plus_one_unchecked())
    }

    fn three_plus_one_unchecked(&self) -> bool {
        for a in 1..=self.n {
            for b in 1..=self.n {
                if b == a || !self.contains(Arc::new(a, b)) {
                    continue;
                }
                for c in 1..=self.n {
                    if c == a || c == b || !self.contains(Arc::new(b, c)) {
                        continue;
                    }
                    // transitivity gives a < c; look for an element incomparable to all three
                    for d in 1..=self.n {
                        if d != a
                            && d != b
                            && d != c
                            && self.incomparable(d, a)
                            && self.incomparable(d, b)
                            && self.incomparable(d, c)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Partial order with no induced `2+2` (Fishburn).
    pub fn is_interval_order(&self) -> bool {
        self.is_partial_order() && !self.two_plus_two_unchecked()
    }

    /// Partial order with no induced `2+2` nor `3+1` (Scott-Suppes).
    pub fn is_semiorder(&self) -> bool {
        self.is_interval_order() && !self.three_plus_one_unchecked()
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Relation {
    /// Text form `n=4; {(1,2),(2,3)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; {{", self.n)?;
        for (k, a) in self.arcs().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for Relation {
    type Err = Error;

    /// Parses the whitespace-insensitive text form `n=4; {(1,2),(2,3)}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = crate::parse::Cursor::new(s);
        p.expect_keyword("n")?;
        p.expect('=')?;
        let n = p.integer()? as usize;
        p.expect(';')?;
        p.expect('{')?;
        let mut arcs = Vec::new();
        if !p.peek_is('}') {
            loop {
                let (i, j) = p.pair()?;
                arcs.push((i, j));
                if p.peek_is('}') {
                    break;
                }
                p.expect(',')?;
            }
        }
        p.expect('}')?;
        p.end()?;
        if !(2..=MAX_GROUND).contains(&n) {
            return Err(Error::Parse { msg: format!("n={n} out of range 2..=8"), col: 0 });
        }
        Relation::from_pairs(n, &arcs)
    }
}

#[derive(Serialize, Deserialize)]
struct RelationRepr {
    n: usize,
    pairs: Vec<Arc>,
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelationRepr { n: self.n, pairs: self.arcs().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Relation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RelationRepr::deserialize(d)?;
        Relation::from_arcs(repr.n, &repr.pairs).map_err(D::Error::custom)
    }
}

/// A unit interval representation `f` of a semiorder:
/// `(i,j) ∈ S  ⇔  f(i) + 1 < f(j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitRepresentation {
    values: Vec<BigRational>,
}

impl UnitRepresentation {
    /// `f(i)` for a 1-based element.
    pub fn value(&self, i: usize) -> &BigRational {
        &self.values[i - 1]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Re-checks the defining equivalence pair by pair.
    pub fn represents(&self, r: &Relation) -> bool {
        let one = BigRational::from_integer(1.into());
        for i in 1..=r.n() {
            for j in 1..=r.n() {
                if i == j {
                    continue;
                }
                let strictly_below = self.value(i) + &one < *self.value(j);
                if strictly_below != r.contains(Arc::new(i, j)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Difference-constraint weight: `value + eps_count · ε` for an
/// infinitesimal `ε > 0`, compared lexicographically.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Weight {
    value: i64,
    eps_count: i64,
}

impl Weight {
    fn add(self, other: Weight) -> Weight {
        Weight { value: self.value + other.value, eps_count: self.eps_count + other.eps_count }
    }
}

/// Finds a unit interval representation of a partial order, if one exists.
///
/// Feasibility of the strict/non-strict difference-constraint system is
/// decided by negative-cycle detection (Bellman-Ford) over lexicographic
/// weights `(value, strictness count)`; a feasible system yields exact
/// rational values with the infinitesimal realized as `ε = 1/(2n+2)`.
///
/// Returns `None` exactly when the partial order is not a semiorder.
/// Errors if `r` is not a partial order.
pub fn find_unit_representation(r: &Relation) -> Result<Option<UnitRepresentation>> {
    if !r.is_partial_order() {
        return Err(Error::NotPartialOrder);
    }
    let n = r.n();
    // Edge u -> v with weight w encodes f(v) - f(u) <= w.
    let mut edges: Vec<(usize, usize, Weight)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            if r.contains(Arc::new(i, j)) {
                // f(j) - f(i) > 1, i.e. f(i) - f(j) <= -1 - ε
                edges.push((j, i, Weight { value: -1, eps_count: -1 }));
            } else if i < j && r.incomparable(i, j) {
                edges.push((i, j, Weight { value: 1, eps_count: 0 }));
                edges.push((j, i, Weight { value: 1, eps_count: 0 }));
            }
        }
    }

    // Bellman-Ford from a virtual source at distance 0 to every node.
    let mut dist = vec![Weight { value: 0, eps_count: 0 }; n + 1];
    for round in 0..n {
        let mut changed = false;
        for &(u, v, w) in &edges {
            let cand = dist[u].add(w);
            if cand < dist[v] {
                dist[v] = cand;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n - 1 {
            // still changing after n rounds: negative cycle
            return Ok(None);
        }
    }

    let eps = BigRational::new(1.into(), ((2 * n + 2) as i64).into());
    let mut values: Vec<BigRational> = (1..=n)
        .map(|i| {
            BigRational::from_integer(dist[i].value.into())
                + &eps * BigRational::from_integer(dist[i].eps_count.into())
        })
        .collect();
    let min = values.iter().min().cloned().unwrap_or_else(BigRational::zero);
    for v in &mut values {
        *v -= &min;
    }
    let rep = UnitRepresentation { values };
    debug_assert!(rep.represents(r));
    Ok(Some(rep))
}

/// All labeled relations of `class` on `{1..n}`, duplicate-free, sorted by
/// the bit pattern of the arc set under the fixed arc index.
pub fn enumerate(n: usize, class: OrderClass) -> Result<Vec<Relation>> {
    if n < 2 || n > class.max_n() {
        return Err(Error::UnsupportedSize { class, n, max: class.max_n() });
    }
    let mut out = match class {
        OrderClass::LinearOrder => enumerate_linear_orders(n),
        OrderClass::StrictWeakOrder => enumerate_strict_weak_orders(n),
        OrderClass::Semiorder => enumerate_semiorders(n),
        OrderClass::IntervalOrder => {
            let mut v = enumerate_partial_orders(n);
            v.retain(|r| !r.two_plus_two_unchecked());
            v
        }
        OrderClass::PartialOrder => enumerate_partial_orders(n),
    };
    out.sort_by_key(|r| r.bits);
    Ok(out)
}

fn enumerate_linear_orders(n: usize) -> Vec<Relation> {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    permute(&mut perm, 0, &mut |p| {
        let mut r = Relation::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                r.insert(Arc::new(p[a], p[b]));
            }
        }
        out.push(r);
    });
    out
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Ordered set partitions: `i R j` iff the block of `i` precedes the block of `j`.
fn enumerate_strict_weak_orders(n: usize) -> Vec<Relation> {
    let full: u64 = (1 << n) - 1;
    let mut out = Vec::new();
    let mut blocks: Vec<u64> = Vec::new();
    fn rec(remaining: u64, blocks: &mut Vec<u64>, n: usize, out: &mut Vec<Relation>) {
        if remaining == 0 {
            let mut r = Relation::empty(n);
            for (bi, &b) in blocks.iter().enumerate() {
                for &c in &blocks[bi + 1..] {
                    for i in 1..=n {
                        if b >> (i - 1) & 1 == 0 {
                            continue;
                        }
                        for j in 1..=n {
                            if c >> (j - 1) & 1 == 1 {
                                r.insert(Arc::new(i, j));
                            }
                        }
                    }
                }
            }
            out.push(r);
            return;
        }
        // iterate over nonempty subsets of `remaining` that contain its lowest
        // element, so each composition of blocks is produced exactly once
        let low = remaining & remaining.wrapping_neg();
        let rest = remaining & !low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            blocks.push(block);
            rec(remaining & !block, blocks, n, out);
            blocks.pop();
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    rec(full, &mut blocks, n, &mut out);
    out
}

/// Semiorders from Catalan endpoint-interleaving patterns with all `n!`
/// labelings, then deduplicated.
///
/// A ballot sequence of `n` left and `n` right endpoints describes a family
/// of unit intervals with the k-th interval opened by the k-th `L` and
/// closed by the k-th `R`; interval `k` lies strictly below interval `m`
/// exactly when `R_k` occurs before `L_m`.
fn enumerate_semiorders(n: usize) -> Vec<Relation> {
    let mut patterns: Vec<Relation> = Vec::new();
    let mut seq: Vec<bool> = Vec::with_capacity(2 * n); // true = L, false = R
    fn rec(seq: &mut Vec<bool>, opened: usize, closed: usize, n: usize, out: &mut Vec<Relation>) {
        if seq.len() == 2 * n {
            let mut l_pos = vec![0usize; n];
            let mut r_pos = vec![0usize; n];
            let (mut l, mut r) = (0, 0);
            for (pos, &is_l) in seq.iter().enumerate() {
                if is_l {
                    l_pos[l] = pos;
                    l += 1;
                } else {
                    r_pos[r] = pos;
                    r += 1;
                }
            }
            let mut rel = Relation::empty(n);
            for k in 1..=n {
                for m in 1..=n {
                    if k != m && r_pos[k - 1] < l_pos[m - 1] {
                        rel.insert(Arc::new(k, m));
                    }
                }
            }
            out.push(rel);
            return;
        }
        if opened < n {
            seq.push(true);
            rec(seq, opened + 1, closed, n, out);
            seq.pop();
        }
        if closed < opened {
            seq.push(false);
            rec(seq, opened, closed + 1, n, out);
            seq.pop();
        }
    }
    rec(&mut seq, 0, 0, n, &mut patterns);

    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut labelings: Vec<Vec<usize>> = Vec::new();
    permute(&mut perm, 0, &mut |p| labelings.push(p.to_vec()));
    for pat in &patterns {
        for lab in &labelings {
            let r = pat.relabel(lab);
            if seen.insert(r.bits) {
                out.push(r);
            }
        }
    }
    out
}

/// Partial orders by element-wise extension: a poset on `{1..k}` extends to
/// `{1..k+1}` by choosing a down-set `D` (elements below `k+1`) and an
/// up-set `U` (elements above) with `D × U ⊆ R`. Each poset restricts
/// uniquely, so the enumeration is duplicate-free.
fn enumerate_partial_orders(n: usize) -> Vec<Relation> {
    // posets on {1..k} as bitmasks over A_n (arc indices for ground set n)
    let mut current: Vec<Relation> = vec![Relation::empty(n)];
    for k in 1..n {
        // extend from ground {1..k} to {1..k+1}
        let new_elem = k + 1;
        let mut next = Vec::with_capacity(current.len() * 4);
        for r in &current {
            let outs: Vec<u64> = (1..=k).map(|i| r.out_mask(i) & ((1 << k) - 1)).collect();
            let ins: Vec<u64> = (1..=k).map(|i| r.in_mask(i) & ((1 << k) - 1)).collect();
            let full = (1u64 << k) - 1;
            for d in 0..=full {
                // D must be down-closed: predecessors of members stay inside
                let mut ok = true;
                let mut allowed = full & !d;
                for i in 1..=k {
                    if d >> (i - 1) & 1 == 1 {
                        if ins[i - 1] & !d != 0 {
                            ok = false;
                            break;
                        }
                        allowed &= outs[i - 1];
                    }
                }
                if !ok {
                    continue;
                }
                let mut u = allowed;
                loop {
                    // U must be up-closed
                    let mut uok = true;
                    for j in 1..=k {
                        if u >> (j - 1) & 1 == 1 && outs[j - 1] & !u != 0 {
                            uok = false;
                            break;
                        }
                    }
                    if uok {
                        let mut ext = *r;
                        for i in 1..=k {
                            if d >> (i - 1) & 1 == 1 {
                                ext.insert(Arc::new(i, new_elem));
                            }
                            if u >> (i - 1) & 1 == 1 {
                                ext.insert(Arc::new(new_elem, i));
                            }
                        }
                        next.push(ext);
                    }
                    if u == 0 {
                        break;
                    }
                    u = (u - 1) & allowed;
                }
            }
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn arc_indexing_roundtrip() {
        for n in 2..=MAX_GROUND {
            for (k, a) in all_arcs(n).enumerate() {
                assert_eq!(a.index(n), k);
                assert_eq!(Arc::from_index(k, n), a);
            }
            assert_eq!(all_arcs(n).count(), arc_count(n));
        }
    }

    #[test]
    fn partial_order_examples() {
        assert!(rel(3, &[]).is_partial_order());
        assert!(!rel(3, &[(1, 2), (2, 3)]).is_partial_order());
        assert!(rel(3, &[(1, 2), (2, 3), (1, 3)]).is_partial_order());
    }

    #[test]
    fn strict_weak_order_examples() {
        assert!(!rel(3, &[(1, 2)]).is_strict_weak_order());
        assert!(rel(3, &[(1, 2), (1, 3)]).is_strict_weak_order());
        for lo in enumerate(4, OrderClass::LinearOrder).unwrap() {
            assert!(lo.is_strict_weak_order());
        }
    }

    #[test]
    fn forbidden_poset_examples() {
        let two_two = rel(4, &[(1, 2), (3, 4)]);
        assert!(two_two.contains_two_plus_two().unwrap());
        assert!(!two_two.is_interval_order());

        let three_one = rel(4, &[(1, 2), (2, 3), (1, 3)]);
        assert!(!three_one.contains_two_plus_two().unwrap());
        assert!(three_one.contains_three_plus_one().unwrap());
        assert!(three_one.is_interval_order());
        assert!(!three_one.is_semiorder());

        let chain = rel(4, &[(1, 2), (2, 3), (3, 4), (1, 3), (1, 4), (2, 4)]);
        assert!(!chain.contains_two_plus_two().unwrap());
        assert!(!chain.contains_three_plus_one().unwrap());

        assert!(matches!(
            rel(3, &[(1, 2), (2, 3)]).contains_two_plus_two(),
            Err(Error::NotPartialOrder)
        ));
    }

    #[test]
    fn every_poset_on_three_elements_is_a_semiorder() {
        let posets = enumerate(3, OrderClass::PartialOrder).unwrap();
        assert_eq!(posets.len(), 19);
        for p in &posets {
            assert!(p.is_semiorder());
            assert!(p.is_interval_order());
        }
    }

    #[test]
    fn unit_representation_examples() {
        let r = rel(2, &[(1, 2)]);
        let f = find_unit_representation(&r).unwrap().unwrap();
        assert!(f.represents(&r));

        let chain = rel(3, &[(1, 2), (2, 3), (1, 3)]);
        let f = find_unit_representation(&chain).unwrap().unwrap();
        assert!(f.represents(&chain));

        let three_one = rel(4, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(find_unit_representation(&three_one).unwrap(), None);

        assert!(matches!(
            find_unit_representation(&rel(3, &[(1, 2), (2, 1)])),
            Err(Error::NotPartialOrder)
        ));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(3, OrderClass::LinearOrder).unwrap().len(), 6);
        assert_eq!(enumerate(3, OrderClass::StrictWeakOrder).unwrap().len(), 13);
        assert_eq!(enumerate(3, OrderClass::PartialOrder).unwrap().len(), 19);
        assert_eq!(enumerate(4, OrderClass::PartialOrder).unwrap().len(), 219);
        assert_eq!(enumerate(4, OrderClass::IntervalOrder).unwrap().len(), 207);
        assert_eq!(enumerate(4, OrderClass::Semiorder).unwrap().len(), 183);
        assert_eq!(enumerate(4, OrderClass::StrictWeakOrder).unwrap().len(), 75);
    }

    #[test]
    fn enumerate_matches_brute_force_filter() {
        for n in 2..=4 {
            let all: Vec<Relation> = (0..1u64 << arc_count(n))
                .map(|bits| Relation::from_bits(n, bits))
                .collect();
            for class in OrderClass::ALL {
                let brute: Vec<u64> =
                    all.iter().filter(|r| class.contains(r)).map(|r| r.bits).collect();
                let fast: Vec<u64> =
                    enumerate(n, class).unwrap().iter().map(|r| r.bits).collect();
                assert_eq!(brute, fast, "class {class} at n={n}");
            }
        }
    }

    #[test]
    fn enumerate_rejects_out_of_range() {
        assert!(matches!(
            enumerate(7, OrderClass::PartialOrder),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(matches!(enumerate(1, OrderClass::LinearOrder), Err(Error::UnsupportedSize { .. })));
        assert!(enumerate(7, OrderClass::Semiorder).is_ok());
    }

    #[test]
    fn characteristic_vector_examples() {
        assert_eq!(rel(2, &[]).characteristic_vector(), vec![0, 0]);
        assert_eq!(rel(2, &[(1, 2)]).characteristic_vector(), vec![1, 0]);
        let chain = rel(3, &[(1, 2), (2, 3), (1, 3)]);
        let chi = chain.characteristic_vector();
        assert_eq!(chi.iter().map(|&b| b as usize).sum::<usize>(), 3);
        assert_eq!(chi[Arc::new(1, 2).index(3)], 1);
        assert_eq!(chi[Arc::new(1, 3).index(3)], 1);
        assert_eq!(chi[Arc::new(2, 3).index(3)], 1);
    }

    #[test]
    fn text_format_roundtrip() {
        let r = rel(4, &[(1, 2), (2, 3), (1, 3)]);
        let s = r.to_string();
        assert_eq!(s, "n=4; {(1,2),(1,3),(2,3)}");
        assert_eq!(s.parse::<Relation>().unwrap(), r);
        assert_eq!(" n = 4 ; { ( 1 , 2 ) } ".parse::<Relation>().unwrap(), rel(4, &[(1, 2)]));
        assert_eq!("n=3; {}".parse::<Relation>().unwrap(), Relation::empty(3));
        assert!("n=3; {(1,1)}".parse::<Relation>().is_err());
    }

    #[test]
    fn relation_json_roundtrip() {
        let r = rel(3, &[(1, 2), (1, 3)]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"n":3,"pairs":[[1,2],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<Relation>(&json).unwrap(), r);
    }
}

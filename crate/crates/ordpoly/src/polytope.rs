//! V-representations of the five order polytopes, validity/face/facet
//! decisions, exact facet enumeration at small n, symmetry-orbit counting,
//! and inequality lifting.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exactlin::{IntRankAccumulator, Rational};
use crate::relations::{arc_count, Arc, OrderClass, Relation};
use crate::{Error, Result};

/// Size guard for facet enumeration. Both bounds must hold unless the
/// caller explicitly overrides; the strict weak order polytope at n=5 and
/// the linear ordering polytope from n=6 on are out of desk scale.
pub const MAX_DD_DIM: usize = 14;
pub const MAX_DD_VERTICES: usize = 800;

/// Affine dimension the polytope of `class` at `n` must have:
/// `n(n-1)` for the four full polytopes, `n(n-1)/2` for linear orders.
pub fn expected_dim(n: usize, class: OrderClass) -> usize {
    match class {
        OrderClass::LinearOrder => n * (n - 1) / 2,
        _ => n * (n - 1),
    }
}

/// The vertex set of one order polytope: all characteristic vectors of one
/// class at one n, with the affine dimension verified at construction.
#[derive(Clone)]
pub struct VertexSet {
    n: usize,
    class: OrderClass,
    vertices: Vec<Relation>,
    dim: usize,
}

impl VertexSet {
    /// Builds the polytope's V-representation and asserts the dimension
    /// formula. Enumeration limits propagate; a dimension mismatch is a
    /// fatal internal error.
    pub fn build(n: usize, class: OrderClass) -> Result<VertexSet> {
        let vertices = crate::relations::enumerate(n, class)?;
        let mut acc = IntRankAccumulator::new();
        let base = vertex_coords_i128(&vertices[0], n);
        let mut scratch = vec![0i128; arc_count(n)];
        let mut dim = 0;
        for v in &vertices[1..] {
            diff_into(v, &base, &mut scratch);
            if acc.insert(&scratch) {
                dim += 1;
            }
        }
        assert_eq!(
            dim,
            expected_dim(n, class),
            "dimension formula violated for {class} at n={n}"
        );
        Ok(VertexSet { n, class, vertices, dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> OrderClass {
        self.class
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Relation] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Validity, tight set, face dimension and facet status of an
    /// inequality over this polytope.
    pub fn check_face(&self, q: &GeneralInequality) -> FaceReport {
        assert_eq!(q.n, self.n, "inequality and polytope must share the ground set");
        let (coeffs, rhs) = q.integer_form();
        let small: Option<(Vec<i64>, i64)> = coeffs
            .iter()
            .map(BigInt::to_i64)
            .collect::<Option<Vec<i64>>>()
            .zip(rhs.to_i64());

        let mut valid = true;
        let mut violating = None;
        let mut tight: Vec<usize> = Vec::new();
        match small {
            Some((c, b)) => {
                for (idx, v) in self.vertices.iter().enumerate() {
                    let mut lhs = 0i64;
                    let mut bits = v.bits();
                    while bits != 0 {
                        let k = bits.trailing_zeros() as usize;
                        lhs += c[k];
                        bits &= bits - 1;
                    }
                    if lhs > b {
                        if valid {
                            valid = false;
                            violating = Some(*v);
                        }
                    } else if lhs == b {
                        tight.push(idx);
                    }
                }
            }
            None => {
                for (idx, v) in self.vertices.iter().enumerate() {
                    let mut lhs = BigInt::zero();
                    let mut bits = v.bits();
                    while bits != 0 {
                        let k = bits.trailing_zeros() as usize;
                        lhs += &coeffs[k];
                        bits &= bits - 1;
                    }
                    if lhs > rhs {
                        if valid {
                            valid = false;
                            violating = Some(*v);
                        }
                    } else if lhs == rhs {
                        tight.push(idx);
                    }
                }
            }
        }

        let face_dim = self.affine_dim_of(&tight);
        FaceReport {
            valid,
            violating_vertex: violating,
            tight_count: tight.len(),
            face_dim,
            is_facet: valid && face_dim >= 0 && face_dim as usize == self.dim - 1,
        }
    }

    /// Affine dimension of a vertex subset given by indices; -1 when empty.
    fn affine_dim_of(&self, tight: &[usize]) -> i64 {
        if tight.is_empty() {
            return -1;
        }
        let base = vertex_coords_i128(&self.vertices[tight[0]], self.n);
        let mut scratch = vec![0i128; arc_count(self.n)];
        let mut acc = IntRankAccumulator::new();
        let cap = self.dim; // a face never exceeds the polytope's dimension
        for &idx in &tight[1..] {
            diff_into(&self.vertices[idx], &base, &mut scratch);
            acc.insert(&scratch);
            if acc.rank() == cap {
                break;
            }
        }
        acc.rank() as i64
    }

    /// Exact H-representation of the polytope modulo its affine hull:
    /// facet list plus the equality system, every facet scaled to coprime
    /// integer coefficients.
    pub fn enumerate_facets(&self) -> Result<HRepresentation> {
        self.enumerate_facets_with(false)
    }

    /// Facet enumeration with an explicit size-guard override.
    pub fn enumerate_facets_with(&self, override_guard: bool) -> Result<HRepresentation> {
        if !override_guard && (self.dim > MAX_DD_DIM || self.len() > MAX_DD_VERTICES) {
            return Err(Error::SizeGuard {
                dim: self.dim,
                vertices: self.len(),
                max_dim: MAX_DD_DIM,
                max_vertices: MAX_DD_VERTICES,
            });
        }

        let chart = Chart::for_class(self.n, self.class);
        let points: Vec<Vec<u8>> =
            self.vertices.iter().map(|v| chart.project(v)).collect();
        let raw = crate::dd::polytope_facets(&points);

        let mut facets: Vec<GeneralInequality> = raw
            .into_iter()
            .map(|(normal, rhs)| chart.inequality_from_chart(&normal, rhs))
            .collect();
        facets.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

        Ok(HRepresentation {
            n: self.n,
            class: self.class,
            dim: self.dim,
            equalities: chart.equalities(),
            facets,
        })
    }

    /// V-representation as JSON-ready data: vertices as bit strings in the
    /// fixed arc order.
    pub fn to_json(&self) -> serde_json::Value {
        let verts: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                v.characteristic_vector().iter().map(|b| char::from(b'0' + b)).collect()
            })
            .collect();
        serde_json::json!({
            "class": self.class.token(),
            "n": self.n,
            "dim": self.dim,
            "vertices": verts,
        })
    }
}

fn vertex_coords_i128(v: &Relation, n: usize) -> Vec<i128> {
    (0..arc_count(n)).map(|k| (v.bits() >> k & 1) as i128).collect()
}

fn diff_into(v: &Relation, base: &[i128], out: &mut [i128]) {
    for (k, o) in out.iter_mut().enumerate() {
        *o = (v.bits() >> k & 1) as i128 - base[k];
    }
}

/// The coordinate chart facet enumeration runs in. The four full polytopes
/// use the ambient space; the linear ordering polytope lives in the chart
/// that keeps `x_ij` for `i < j` and eliminates `x_ji = 1 - x_ij`.
enum Chart {
    Full { n: usize },
    LinearOrder { n: usize },
}

impl Chart {
    fn for_class(n: usize, class: OrderClass) -> Chart {
        match class {
            OrderClass::LinearOrder => Chart::LinearOrder { n },
            _ => Chart::Full { n },
        }
    }

    fn project(&self, v: &Relation) -> Vec<u8> {
        match *self {
            Chart::Full { .. } => v.characteristic_vector(),
            Chart::LinearOrder { n } => chart_pairs(n)
                .map(|(i, j)| u8::from(v.contains(Arc::new(i, j))))
                .collect(),
        }
    }

    fn inequality_from_chart(&self, normal: &[BigInt], rhs: BigInt) -> GeneralInequality {
        let n = match *self {
            Chart::Full { n } | Chart::LinearOrder { n } => n,
        };
        let mut coeffs: BTreeMap<Arc, Rational> = BTreeMap::new();
        match *self {
            Chart::Full { .. } => {
                for (k, c) in normal.iter().enumerate() {
                    if !c.is_zero() {
                        coeffs.insert(Arc::from_index(k, n), Rational::from_integer(c.clone()));
                    }
                }
            }
            Chart::LinearOrder { .. } => {
                for ((i, j), c) in chart_pairs(n).zip(normal) {
                    if !c.is_zero() {
                        coeffs
                            .insert(Arc::new(i, j), Rational::from_integer(c.clone()));
                    }
                }
            }
        }
        GeneralInequality { n, coeffs, rhs: Rational::from_integer(rhs) }
    }

    fn equalities(&self) -> Vec<LinearEquality> {
        match *self {
            Chart::Full { .. } => Vec::new(),
            Chart::LinearOrder { n } => lo_equalities(n),
        }
    }
}

/// The equality system `x_ij + x_ji = 1` spanning the affine hull of the
/// linear ordering polytope.
pub(crate) fn lo_equalities(n: usize) -> Vec<LinearEquality> {
    chart_pairs(n)
        .map(|(i, j)| {
            let mut coeffs = BTreeMap::new();
            coeffs.insert(Arc::new(i, j), Rational::one());
            coeffs.insert(Arc::new(j, i), Rational::one());
            LinearEquality { n, coeffs, rhs: Rational::one() }
        })
        .collect()
}

/// Pairs `(i, j)` with `i < j` in lexicographic order; the chart
/// coordinates of the linear ordering polytope.
pub(crate) fn chart_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

pub(crate) fn chart_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j);
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

/// A linear inequality `Σ α_ij x_ij <= β` with exact rational coefficients
/// over the arc set. At least one coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralInequality {
    n: usize,
    coeffs: BTreeMap<Arc, Rational>,
    rhs: Rational,
}

impl GeneralInequality {
    pub fn new(n: usize, coeffs: BTreeMap<Arc, Rational>, rhs: Rational) -> Result<Self> {
        let coeffs: BTreeMap<Arc, Rational> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if coeffs.is_empty() {
            return Err(Error::InvalidInequality("all coefficients are zero".into()));
        }
        for a in coeffs.keys() {
            if a.max_element() > n {
                return Err(Error::InvalidInequality(format!(
                    "arc {a} exceeds the ground set {{1..{n}}}"
                )));
            }
        }
        Ok(GeneralInequality { n, coeffs, rhs })
    }

    pub fn from_integer_terms(n: usize, terms: &[(usize, usize, i64)], rhs: i64) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for &(i, j, c) in terms {
            coeffs.insert(Arc::new(i, j), crate::exactlin::rat(c));
        }
        GeneralInequality::new(n, coeffs, crate::exactlin::rat(rhs))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Arc, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, a: Arc) -> Rational {
        self.coeffs.get(&a).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    /// Dense canonical integer form over the fixed arc order: multiplied by
    /// the least common denominator and divided by the gcd. Only positive
    /// scalings preserve an inequality, so the orientation is inherent.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let mut lcm = self.rhs.denom().clone();
        for c in self.coeffs.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut dense = vec![BigInt::zero(); arc_count(self.n)];
        for (a, c) in &self.coeffs {
            dense[a.index(self.n)] = c.numer() * (&lcm / c.denom());
        }
        let rhs = self.rhs.numer() * (&lcm / self.rhs.denom());
        let mut g = rhs.clone();
        for c in &dense {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut dense {
                *c /= &g;
            }
            return (dense, rhs / g);
        }
        (dense, rhs)
    }

    /// Canonical integer form reduced into the linear-order chart
    /// (`x_ji ↦ 1 - x_ij` for `i < j`): the representative of this
    /// inequality modulo the affine hull of the linear ordering polytope.
    pub fn lo_chart_form(&self) -> (Vec<BigInt>, BigInt) {
        let (dense, mut rhs) = self.integer_form();
        let n = self.n;
        let mut chart = vec![BigInt::zero(); n * (n - 1) / 2];
        for (k, c) in dense.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = Arc::from_index(k, n);
            let (i, j) = (a.0 as usize, a.1 as usize);
            if i < j {
                chart[chart_index(i, j, n)] += c;
            } else {
                chart[chart_index(j, i, n)] -= c;
                rhs -= c;
            }
        }
        let mut g = rhs.clone();
        for c in &chart {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut chart {
                *c /= &g;
            }
            return (chart, rhs / g);
        }
        (chart, rhs)
    }

    fn sort_key(&self) -> (Vec<BigInt>, BigInt) {
        self.integer_form()
    }

    /// Image under a permutation of `{1..n}`; `perm[i-1]` is the image of `i`.
    pub fn relabel(&self, perm: &[usize]) -> GeneralInequality {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(a, c)| {
                (Arc::new(perm[a.0 as usize - 1], perm[a.1 as usize - 1]), c.clone())
            })
            .collect();
        GeneralInequality { n: self.n, coeffs, rhs: self.rhs.clone() }
    }

    /// Zero-padded reinterpretation over a larger ground set: identical
    /// coefficients, zeros on every arc touching the new elements, same
    /// independent term.
    pub fn lift_to(&self, m: usize) -> GeneralInequality {
        assert!(m >= self.n, "can only lift to a larger ground set");
        GeneralInequality { n: m, coeffs: self.coeffs.clone(), rhs: self.rhs.clone() }
    }

    /// Lift from `n` to `n + 1`.
    pub fn lift(&self) -> GeneralInequality {
        self.lift_to(self.n + 1)
    }

    /// Sum of two inequalities over the same ground set.
    pub fn sum(&self, other: &GeneralInequality) -> Result<GeneralInequality> {
        if self.n != other.n {
            return Err(Error::GroundSetMismatch { left: self.n, right: other.n });
        }
        let mut coeffs = self.coeffs.clone();
        for (a, c) in &other.coeffs {
            let v = coeffs.entry(*a).or_insert_with(Rational::zero);
            *v += c;
        }
        GeneralInequality::new(self.n, coeffs, &self.rhs + &other.rhs)
    }
}

impl fmt::Display for GeneralInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, c) in &self.coeffs {
            if c.is_one() {
                write!(f, "{}x({},{})", if first { "" } else { "+" }, a.0, a.1)?;
            } else if (-c.clone()).is_one() {
                write!(f, "-x({},{})", a.0, a.1)?;
            } else if c.is_positive() && !first {
                write!(f, "+{}x({},{})", c, a.0, a.1)?;
            } else {
                write!(f, "{}x({},{})", c, a.0, a.1)?;
            }
            first = false;
        }
        write!(f, "<={}", self.rhs)
    }
}

fn coeff_map_json<S: Serializer>(
    coeffs: &BTreeMap<Arc, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(coeffs.len()))?;
    for (a, c) in coeffs {
        let v = c
            .to_integer()
            .to_i64()
            .filter(|_| c.is_integer())
            .map(serde_json::Value::from)
            .unwrap_or_else(|| serde_json::Value::from(c.to_string()));
        map.serialize_entry(&format!("{},{}", a.0, a.1), &v)?;
    }
    map.end()
}

impl Serialize for GeneralInequality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            #[serde(serialize_with = "coeff_map_json")]
            coeffs: &'a BTreeMap<Arc, Rational>,
            rhs: serde_json::Value,
        }
        let rhs = self
            .rhs
            .to_integer()
            .to_i64()
            .filter(|_| self.rhs.is_integer())
            .map(serde_json::Value::from)
            .unwrap_or_else(|| serde_json::Value::from(self.rhs.to_string()));
        Repr { n: self.n, coeffs: &self.coeffs, rhs }.serialize(s)
    }
}

/// An exact linear equality, normalized so the first nonzero coefficient in
/// the fixed arc order is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearEquality {
    n: usize,
    coeffs: BTreeMap<Arc, Rational>,
    rhs: Rational,
}

impl Serialize for LinearEquality {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            #[serde(serialize_with = "coeff_map_json")]
            coeffs: &'a BTreeMap<Arc, Rational>,
            rhs: serde_json::Value,
        }
        let rhs = self
            .rhs
            .to_integer()
            .to_i64()
            .filter(|_| self.rhs.is_integer())
            .map(serde_json::Value::from)
            .unwrap_or_else(|| serde_json::Value::from(self.rhs.to_string()));
        Repr { n: self.n, coeffs: &self.coeffs, rhs }.serialize(s)
    }
}

impl LinearEquality {
    pub fn coeffs(&self) -> &BTreeMap<Arc, Rational> {
        &self.coeffs
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }
}

/// Validity flag, tight-vertex count, face dimension and facet verdict for
/// one inequality over one polytope.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaceReport {
    pub valid: bool,
    pub violating_vertex: Option<Relation>,
    pub tight_count: usize,
    /// Affine dimension of the tight vertex set; -1 when empty.
    pub face_dim: i64,
    pub is_facet: bool,
}

/// Facet system of one polytope modulo its affine hull.
#[derive(Clone, Serialize)]
pub struct HRepresentation {
    pub n: usize,
    pub class: OrderClass,
    pub dim: usize,
    pub equalities: Vec<LinearEquality>,
    pub facets: Vec<GeneralInequality>,
}

/// All permutations of `{1..n}` in a deterministic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (1..=n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

fn orbit_representative(
    q: &GeneralInequality,
    perms: &[Vec<usize>],
    modulo_lo: bool,
) -> (Vec<BigInt>, BigInt) {
    perms
        .iter()
        .map(|p| {
            let img = q.relabel(p);
            if modulo_lo {
                img.lo_chart_form()
            } else {
                img.integer_form()
            }
        })
        .min()
        .expect("at least the identity permutation")
}

/// Number of orbits of the inequalities under the relabeling action
/// `σ·x_ij = x_σ(i)σ(j)` over all `n!` permutations. The orbit
/// representative is the lexicographically minimal image of the canonical
/// integer scaling; the count is independent of input order and scaling.
pub fn orbit_count(ineqs: &[GeneralInequality], n: usize) -> usize {
    orbit_representatives(ineqs, n, false).len()
}

/// Orbit counting modulo the affine hull of the linear ordering polytope:
/// images are compared by their chart representatives.
pub fn orbit_count_modulo_lo(ineqs: &[GeneralInequality], n: usize) -> usize {
    orbit_representatives(ineqs, n, true).len()
}

/// Class-aware orbit counting: linear-order inequalities are compared
/// modulo the equality system, everything else in the ambient space.
pub fn orbit_count_in_class(ineqs: &[GeneralInequality], n: usize, class: OrderClass) -> usize {
    match class {
        OrderClass::LinearOrder => orbit_count_modulo_lo(ineqs, n),
        _ => orbit_count(ineqs, n),
    }
}

pub(crate) fn orbit_representatives(
    ineqs: &[GeneralInequality],
    n: usize,
    modulo_lo: bool,
) -> BTreeSet<(Vec<BigInt>, BigInt)> {
    let perms = permutations(n);
    ineqs.iter().map(|q| orbit_representative(q, &perms, modulo_lo)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn ineq(n: usize, terms: &[(usize, usize, i64)], rhs: i64) -> GeneralInequality {
        GeneralInequality::from_integer_terms(n, terms, rhs).unwrap()
    }

    #[test]
    fn build_examples() {
        let p = VertexSet::build(2, OrderClass::PartialOrder).unwrap();
        assert_eq!((p.len(), p.dim()), (3, 2));

        let lo3 = VertexSet::build(3, OrderClass::LinearOrder).unwrap();
        assert_eq!((lo3.len(), lo3.dim()), (6, 3));

        let so4 = VertexSet::build(4, OrderClass::Semiorder).unwrap();
        assert_eq!((so4.len(), so4.dim()), (183, 12));
    }

    #[test]
    fn check_face_examples() {
        // -x_12 <= 0 on P_PO^2: a facet
        let ppo2 = VertexSet::build(2, OrderClass::PartialOrder).unwrap();
        let r = ppo2.check_face(&ineq(2, &[(1, 2, -1)], 0));
        assert!(r.valid && r.is_facet && r.face_dim == 1);

        // x_12 + x_21 <= 1 on P_LO^3: valid, tight everywhere, not a facet
        let plo3 = VertexSet::build(3, OrderClass::LinearOrder).unwrap();
        let r = plo3.check_face(&ineq(3, &[(1, 2, 1), (2, 1, 1)], 1));
        assert!(r.valid && !r.is_facet);
        assert_eq!(r.tight_count, 6);
        assert_eq!(r.face_dim, 3);

        // x_12 + x_23 - x_13 <= 1 on P_SO^3: a facet
        let pso3 = VertexSet::build(3, OrderClass::Semiorder).unwrap();
        let r = pso3.check_face(&ineq(3, &[(1, 2, 1), (2, 3, 1), (1, 3, -1)], 1));
        assert!(r.valid && r.is_facet);

        // invalid inequality carries a violating vertex
        let r = pso3.check_face(&ineq(3, &[(1, 2, 1)], 0));
        assert!(!r.valid);
        let w = r.violating_vertex.unwrap();
        assert!(w.contains(Arc::new(1, 2)));
    }

    #[test]
    fn facet_counts_small() {
        let h = VertexSet::build(2, OrderClass::PartialOrder).unwrap().enumerate_facets().unwrap();
        assert_eq!(h.facets.len(), 3);
        assert_eq!(orbit_count(&h.facets, 2), 2);

        let h = VertexSet::build(3, OrderClass::PartialOrder).unwrap().enumerate_facets().unwrap();
        assert_eq!(h.facets.len(), 17);
        assert_eq!(orbit_count(&h.facets, 3), 4);

        let h = VertexSet::build(4, OrderClass::LinearOrder).unwrap().enumerate_facets().unwrap();
        assert_eq!(h.facets.len(), 20);
        assert_eq!(h.equalities.len(), 6);
        assert_eq!(orbit_count_modulo_lo(&h.facets, 4), 2);
    }

    #[test]
    fn facet_round_trip_small() {
        for (n, class) in [(3, OrderClass::PartialOrder), (3, OrderClass::LinearOrder)] {
            let vs = VertexSet::build(n, class).unwrap();
            let h = vs.enumerate_facets().unwrap();
            for f in &h.facets {
                let rep = vs.check_face(f);
                assert!(rep.valid && rep.is_facet, "facet fails round trip: {f}");
            }
        }
    }

    #[test]
    fn size_guard_refuses_documented_cases() {
        let swo5 = VertexSet::build(5, OrderClass::StrictWeakOrder).unwrap();
        assert!(matches!(swo5.enumerate_facets(), Err(Error::SizeGuard { .. })));
        let lo6 = VertexSet::build(6, OrderClass::LinearOrder).unwrap();
        assert!(matches!(lo6.enumerate_facets(), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn lift_examples() {
        let q = ineq(2, &[(1, 2, 1), (2, 1, 1)], 1);
        let lifted = q.lift();
        assert_eq!(lifted.n(), 3);
        assert_eq!(lifted.coeff(Arc::new(1, 2)), rat(1));
        assert_eq!(lifted.coeff(Arc::new(1, 3)), rat(0));
        assert_eq!(*lifted.rhs(), rat(1));

        // lifting preserves validity
        let pso3 = VertexSet::build(3, OrderClass::Semiorder).unwrap();
        assert!(pso3.check_face(&lifted).valid);
    }

    #[test]
    fn orbit_count_examples() {
        let nonneg: Vec<GeneralInequality> =
            all_arcs(3).map(|a| ineq(3, &[(a.0 as usize, a.1 as usize, -1)], 0)).collect();
        assert_eq!(nonneg.len(), 6);
        assert_eq!(orbit_count(&nonneg, 3), 1);
    }

    #[test]
    fn display_form() {
        let q = ineq(3, &[(1, 2, 1), (2, 3, 1), (1, 3, -1)], 1);
        assert_eq!(q.to_string(), "x(1,2)-x(1,3)+x(2,3)<=1");
    }
}

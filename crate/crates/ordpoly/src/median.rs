//! Remoteness of a relation to a profile, the c-vector linearization, and a
//! brute-force median-order solver over any of the five classes.
//!
//! The solver is deliberately an exhaustive scan: the median problem is
//! NP-hard in general, and this module exists to ground the
//! polytope-optimization reading of it at desk scale.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::relations::{arc_count, OrderClass, Relation};
use crate::{Error, Result};

/// A nonempty family of relations on a common ground set. Members are
/// arbitrary relations, not necessarily order relations.
#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    n: usize,
    relations: Vec<Relation>,
}

impl Profile {
    pub fn new(relations: Vec<Relation>) -> Result<Self> {
        let Some(first) = relations.first() else {
            return Err(Error::EmptyProfile);
        };
        let n = first.n();
        for r in &relations {
            if r.n() != n {
                return Err(Error::GroundSetMismatch { left: n, right: r.n() });
            }
        }
        Ok(Profile { n, relations })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Total number of arcs across the profile, `Σ_R |R|`; the constant in
    /// the affine identity `ρ(P, R) + c · χ^P = Σ_R |R|`.
    pub fn total_arcs(&self) -> u64 {
        self.relations.iter().map(|r| r.len() as u64).sum()
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.relations.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let relations: Vec<Relation> = Deserialize::deserialize(d)?;
        Profile::new(relations).map_err(D::Error::custom)
    }
}

/// Total disagreement `ρ(P, R) = Σ_{R∈profile} |P Δ R|`.
pub fn remoteness(p: &Relation, profile: &Profile) -> Result<u64> {
    if p.n() != profile.n {
        return Err(Error::GroundSetMismatch { left: p.n(), right: profile.n });
    }
    let mut total = 0u64;
    for r in &profile.relations {
        total += p.symmetric_difference_size(r)? as u64;
    }
    Ok(total)
}

/// The linearizing vector over `A_n`:
/// `c_ij = |{R : (i,j) ∈ R}| - |{Q : (i,j) ∉ Q}|`, indexed in the fixed
/// arc order.
pub fn c_vector(profile: &Profile) -> Vec<i64> {
    let m = profile.relations.len() as i64;
    let mut counts = vec![0i64; arc_count(profile.n)];
    for r in &profile.relations {
        let mut bits = r.bits();
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            counts[k] += 1;
            bits &= bits - 1;
        }
    }
    counts.iter().map(|&inc| inc - (m - inc)).collect()
}

/// The full argmin set of the remoteness over one order class, ties in the
/// canonical enumeration order, together with the optimal value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MedianResult {
    pub remoteness: u64,
    pub optima: Vec<Relation>,
}

/// Exhaustive scan of `enumerate(n, class)` for the class-median relations.
pub fn median_order(profile: &Profile, class: OrderClass) -> Result<MedianResult> {
    let candidates = crate::relations::enumerate(profile.n, class)?;
    let mut best = u64::MAX;
    let mut optima = Vec::new();
    for cand in candidates {
        let rho = remoteness(&cand, profile)?;
        if rho < best {
            best = rho;
            optima.clear();
            optima.push(cand);
        } else if rho == best {
            optima.push(cand);
        }
    }
    Ok(MedianResult { remoteness: best, optima })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::Arc;

    fn chain(n: usize, order: &[usize]) -> Relation {
        let mut r = Relation::empty(n);
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                r.insert(Arc::new(order[i], order[j]));
            }
        }
        r
    }

    fn condorcet() -> Profile {
        Profile::new(vec![chain(3, &[1, 2, 3]), chain(3, &[2, 3, 1]), chain(3, &[3, 1, 2])])
            .unwrap()
    }

    #[test]
    fn remoteness_examples() {
        let l = chain(3, &[1, 2, 3]);
        let prof = Profile::new(vec![l]).unwrap();
        assert_eq!(remoteness(&l, &prof).unwrap(), 0);
        assert_eq!(remoteness(&Relation::empty(3), &prof).unwrap(), 3);
        assert_eq!(remoteness(&l, &condorcet()).unwrap(), 8);
    }

    #[test]
    fn c_vector_examples() {
        let l = chain(3, &[1, 2, 3]);
        let prof = Profile::new(vec![l]).unwrap();
        let c = c_vector(&prof);
        for (k, &v) in c.iter().enumerate() {
            let expected = if l.bits() >> k & 1 == 1 { 1 } else { -1 };
            assert_eq!(v, expected);
        }

        let cancel = Profile::new(vec![l, l.complement()]).unwrap();
        assert!(c_vector(&cancel).iter().all(|&v| v == 0));

        let c = c_vector(&condorcet());
        assert!(c.iter().all(|&v| v == 1 || v == -1));
        assert_eq!(c[Arc::new(1, 2).index(3)], 1);
        assert_eq!(c[Arc::new(2, 3).index(3)], 1);
        assert_eq!(c[Arc::new(3, 1).index(3)], 1);
    }

    #[test]
    fn median_examples() {
        let l = chain(3, &[1, 2, 3]);
        let single = Profile::new(vec![l]).unwrap();
        let res = median_order(&single, OrderClass::LinearOrder).unwrap();
        assert_eq!(res.remoteness, 0);
        assert_eq!(res.optima, vec![l]);

        let res = median_order(&condorcet(), OrderClass::LinearOrder).unwrap();
        assert_eq!(res.remoteness, 8);
        let mut expected = vec![chain(3, &[1, 2, 3]), chain(3, &[2, 3, 1]), chain(3, &[3, 1, 2])];
        expected.sort_by_key(|r| r.bits());
        assert_eq!(res.optima, expected);

        let po = median_order(&condorcet(), OrderClass::PartialOrder).unwrap();
        assert!(po.remoteness <= 8);
    }

    #[test]
    fn profile_json_is_a_list_of_relations() {
        let prof = condorcet();
        let json = serde_json::to_string(&prof).unwrap();
        let back: Profile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, prof);
        assert!(serde_json::from_str::<Profile>("[]").is_err());
    }
}

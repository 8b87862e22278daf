//! Double description over exact integers for 0/1 polytopes.
//!
//! Facets of `conv(points)` are found as the extreme rays of the polar of
//! the homogenization cone: a ray `(b, a)` of
//! `{(b, a) : b + a·p >= 0 for all points p}` corresponds to the facet
//! inequality `(-a)·x <= b`. The polar is pointed exactly when the
//! polytope is full-dimensional in its coordinate space, which callers
//! guarantee (the linear ordering polytope is handled in a chart).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Bitset over constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet {
    words: Vec<u64>,
}

impl ZeroSet {
    fn empty(bits: usize) -> Self {
        ZeroSet { words: vec![0; bits.div_ceil(64)] }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_superset_of(&self, other: &ZeroSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| b & !a == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zero: ZeroSet,
}

impl Ray {
    fn reduce(&mut self) {
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.coords {
                *c /= &g;
            }
        }
    }
}

/// Value of a homogenized point constraint on a ray: `b + a·p` where the
/// ray is `(b, a)` and the point is 0/1, so this is a plain subset sum.
fn constraint_value(coords: &[BigInt], point: &[u8]) -> BigInt {
    let mut v = coords[0].clone();
    for (k, &bit) in point.iter().enumerate() {
        if bit == 1 {
            v += &coords[k + 1];
        }
    }
    v
}

/// Exact inverse via Gauss-Jordan over rationals; rows must be square and
/// nonsingular.
fn invert(rows: &[Vec<u8>]) -> Vec<Vec<BigRational>> {
    let d = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..d {
        let p = (col..d).find(|&r| !a[r][col].is_zero()).expect("singular basis matrix");
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for c in 0..d {
            a[col][c] /= &piv;
            inv[col][c] /= &piv;
        }
        for r in 0..d {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..d {
                    let av = &a[col][c] * &f;
                    a[r][c] -= av;
                    let iv = &inv[col][c] * &f;
                    inv[r][c] -= iv;
                }
            }
        }
    }
    inv
}

/// Facets of `conv(points)` with the points given as 0/1 coordinate rows
/// spanning a full-dimensional polytope. Returns pairs `(normal, rhs)`
/// with coprime integer entries: `normal·x <= rhs` holds for every point.
///
/// Insertion order is by increasing number of ones, which keeps the
/// intermediate descriptions small on order polytopes.
pub(crate) fn polytope_facets(points: &[Vec<u8>]) -> Vec<(Vec<BigInt>, BigInt)> {
    let dim = points[0].len();
    let d = dim + 1; // homogenized cone dimension
    let m = points.len();
    assert!(m >= d, "need at least dim+1 points for a full-dimensional polytope");

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (points[i].iter().map(|&b| b as usize).sum::<usize>(), i));

    // initial simplicial cone from the first d linearly independent
    // homogenized points
    let mut acc = crate::exactlin::IntRankAccumulator::new();
    let mut basis_rows: Vec<Vec<u8>> = Vec::with_capacity(d);
    let mut basis_ids: Vec<usize> = Vec::with_capacity(d);
    let mut rest: Vec<usize> = Vec::with_capacity(m - d);
    for &id in &order {
        let hom: Vec<u8> = std::iter::once(1u8).chain(points[id].iter().copied()).collect();
        if basis_ids.len() < d {
            let row: Vec<i128> = hom.iter().map(|&v| v as i128).collect();
            if acc.insert(&row) {
                basis_rows.push(hom);
                basis_ids.push(id);
                continue;
            }
        }
        rest.push(id);
    }
    assert_eq!(basis_ids.len(), d, "points do not span a full-dimensional polytope");

    let inv = invert(&basis_rows);
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let col: Vec<BigRational> = (0..d).map(|i| inv[i][j].clone()).collect();
            let mut lcm = BigInt::one();
            for v in &col {
                lcm = lcm.lcm(v.denom());
            }
            let coords: Vec<BigInt> = col.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
            let mut zero = ZeroSet::empty(m);
            for (pos, &id) in basis_ids.iter().enumerate() {
                if pos != j {
                    zero.set(id);
                }
            }
            let mut ray = Ray { coords, zero };
            ray.reduce();
            ray
        })
        .collect();

    for &id in &rest {
        let point = &points[id];
        let vals: Vec<BigInt> = rays.iter().map(|r| constraint_value(&r.coords, point)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        if neg.is_empty() {
            for (i, v) in vals.iter().enumerate() {
                if v.is_zero() {
                    rays[i].zero.set(id);
                }
            }
            continue;
        }

        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.intersection(&rays[q].zero);
                if common.count() + 2 < d {
                    continue;
                }
                // combinatorial adjacency: no third ray is tight everywhere
                // both p and q are
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(r, ray)| r == p || r == q || !ray.zero.is_superset_of(&common));
                if !adjacent {
                    continue;
                }
                // positive combination vanishing on the new constraint;
                // feasibility on inserted constraints is inherited
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(cp, cq)| &vals[p] * cq - &vals[q] * cp)
                    .collect();
                let mut zero = common;
                zero.set(id);
                let mut ray = Ray { coords, zero };
                ray.reduce();
                new_rays.push(ray);
            }
        }

        let mut keep = Vec::with_capacity(rays.len() - neg.len() + new_rays.len());
        for (i, ray) in rays.drain(..).enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if vals[i].is_zero() {
                ray.zero.set(id);
            }
            keep.push(ray);
        }
        keep.extend(new_rays);
        rays = keep;
    }

    rays.into_iter()
        .map(|r| {
            let rhs = r.coords[0].clone();
            let normal: Vec<BigInt> = r.coords[1..].iter().map(|c| -c).collect();
            (normal, rhs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facet_set(points: &[Vec<u8>]) -> Vec<(Vec<i64>, i64)> {
        let mut out: Vec<(Vec<i64>, i64)> = polytope_facets(points)
            .into_iter()
            .map(|(a, b)| {
                (a.iter().map(|v| i64::try_from(v).unwrap()).collect(), i64::try_from(&b).unwrap())
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn unit_square() {
        let points = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        let facets = facet_set(&points);
        assert_eq!(
            facets,
            vec![
                (vec![-1, 0], 0),
                (vec![0, -1], 0),
                (vec![0, 1], 1),
                (vec![1, 0], 1),
            ]
        );
    }

    #[test]
    fn triangle_with_interior_structure() {
        // standard simplex corner: x >= 0, y >= 0, x + y <= 1
        let points = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        let facets = facet_set(&points);
        assert_eq!(facets, vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 1)]);
    }

    #[test]
    fn cube_3d() {
        let mut points = Vec::new();
        for b in 0..8u8 {
            points.push(vec![b & 1, b >> 1 & 1, b >> 2 & 1]);
        }
        assert_eq!(facet_set(&points).len(), 6);
    }

    #[test]
    fn cross_section_of_cube() {
        // vertices of conv{e1,e2,e3, 1-e1, 1-e2, 1-e3}: an octahedron with
        // 8 facets
        let points = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ];
        assert_eq!(facet_set(&points).len(), 8);
    }
}

//! Dimension and normalized volume of lattice polytopes.
//!
//! The volume is measured in the lattice spanned by the points themselves
//! (after translating one of them to the origin), so it is the degree of the
//! associated projective toric variety.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, Rational};

/// Convex hull of finitely many lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    points: Vec<ExponentVector>,
}

impl LatticePolytope {
    /// Duplicates are removed; all points must share one length.
    pub fn new(points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let points: BTreeSet<ExponentVector> = points.into_iter().collect();
        let points: Vec<ExponentVector> = points.into_iter().collect();
        let first = points.first().ok_or(Error::EmptyInput)?;
        if let Some(bad) = points.iter().find(|p| p.len() != first.len()) {
            return Err(Error::DimensionMismatch {
                expected: first.len(),
                found: bad.len(),
            });
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        lattice_basis(&self.edge_vectors()).len()
    }

    /// `d!·vol` of the hull in its own lattice. A single point has volume 1.
    pub fn normalized_volume(&self) -> u64 {
        let edges = self.edge_vectors();
        let basis = lattice_basis(&edges);
        let d = basis.len();
        if d == 0 {
            return 1;
        }
        let mut coords: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d]];
        coords.extend(edges.iter().map(|v| {
            lattice_coordinates(&basis, v)
                .into_iter()
                .map(Rational::from_integer)
                .collect()
        }));
        let all: Vec<usize> = (0..coords.len()).collect();
        let mut total = BigInt::zero();
        for simplex in triangulate(&coords, &all) {
            debug_assert_eq!(simplex.len(), d + 1);
            let apex = &coords[simplex[0]];
            let edge_matrix: Vec<Vec<Rational>> = simplex[1..]
                .iter()
                .map(|&i| coords[i].iter().zip(apex).map(|(a, b)| a - b).collect())
                .collect();
            let det = determinant(edge_matrix);
            debug_assert!(det.is_integer());
            total += det.numer().abs();
        }
        total.to_u64().expect("normalized volume fits in u64")
    }

    fn edge_vectors(&self) -> Vec<Vec<BigInt>> {
        let base = &self.points[0];
        self.points[1..]
            .iter()
            .map(|p| {
                p.entries()
                    .iter()
                    .zip(base.entries())
                    .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
                    .collect()
            })
            .collect()
    }
}

pub fn polytope_dim(polytope: &LatticePolytope) -> usize {
    polytope.dim()
}

pub fn normalized_volume(polytope: &LatticePolytope) -> u64 {
    polytope.normalized_volume()
}

/// Row-echelon basis of the integer lattice generated by `vectors`, using
/// Euclidean row operations only. Pivots are positive.
pub(crate) fn lattice_basis(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        loop {
            let pivot = (rank..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs());
            let Some(pivot) = pivot else { break };
            rows.swap(rank, pivot);
            if rows[rank][col].is_negative() {
                for v in rows[rank].iter_mut() {
                    *v = -&*v;
                }
            }
            let mut cleared = true;
            for i in rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let factor = rows[i][col].div_floor(&rows[rank][col]);
                let pivot_row = rows[rank].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
                if !rows[i][col].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                rank += 1;
                break;
            }
        }
    }
    rows.truncate(rank);
    rows
}

/// Integer coordinates of `v` in an echelon lattice basis containing it.
fn lattice_coordinates(basis: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    let mut residual = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let col = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("basis rows are nonzero");
        let (c, rem) = residual[col].div_rem(&row[col]);
        debug_assert!(rem.is_zero(), "vector lies outside the lattice");
        for (r, b) in residual.iter_mut().zip(row) {
            *r -= &c * b;
        }
        coords.push(c);
    }
    debug_assert!(residual.iter().all(Zero::is_zero));
    coords
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot_row[c];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
        }
    }
    det
}

fn difference_matrix(points: &[Vec<Rational>], idx: &[usize]) -> Vec<Vec<Rational>> {
    let base = &points[idx[0]];
    idx[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect()
}

/// Pulling triangulation: cone from a vertex over a triangulation of every
/// facet that misses it. Returns index sets of full-dimensional simplices.
fn triangulate(points: &[Vec<Rational>], idx: &[usize]) -> Vec<Vec<usize>> {
    let mut diffs = difference_matrix(points, idx);
    let pivots = rref(&mut diffs);
    let dim = pivots.len();
    if dim == 0 {
        return vec![vec![idx[0]]];
    }
    // coordinate projection onto the pivot columns is injective on the hull
    let base = &points[idx[0]];
    let local: Vec<Vec<Rational>> = idx
        .iter()
        .map(|&i| pivots.iter().map(|&c| &points[i][c] - &base[c]).collect())
        .collect();
    let apex = (0..idx.len())
        .min_by(|&a, &b| local[a].cmp(&local[b]))
        .expect("nonempty");

    let mut simplices = Vec::new();
    for facet in facets(&local, dim) {
        if facet.contains(&apex) {
            continue;
        }
        let facet_idx: Vec<usize> = facet.iter().map(|&k| idx[k]).collect();
        for mut simplex in triangulate(points, &facet_idx) {
            simplex.insert(0, idx[apex]);
            simplices.push(simplex);
        }
    }
    simplices
}

/// Facets of a full-dimensional point configuration in `R^dim`, as sets of
/// point positions lying on each facet hyperplane.
fn facets(points: &[Vec<Rational>], dim: usize) -> BTreeSet<Vec<usize>> {
    let mut found = BTreeSet::new();
    let m = points.len();
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        if let Some(normal) = hyperplane_normal(points, &subset) {
            let offset = dot(&normal, &points[subset[0]]);
            let sides: Vec<Rational> = points.iter().map(|p| dot(&normal, p) - &offset).collect();
            let above = sides.iter().any(Signed::is_positive);
            let below = sides.iter().any(Signed::is_negative);
            if !(above && below) {
                found.insert((0..m).filter(|&i| sides[i].is_zero()).collect());
            }
        }
        // next combination
        let mut k = dim;
        loop {
            if k == 0 {
                return found;
            }
            k -= 1;
            if subset[k] != k + m - dim {
                break;
            }
        }
        subset[k] += 1;
        for j in k + 1..dim {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Normal of the hyperplane through `dim` affinely independent points.
fn hyperplane_normal(points: &[Vec<Rational>], subset: &[usize]) -> Option<Vec<Rational>> {
    let dim = points[0].len();
    if subset.len() == 1 {
        // dim == 1: the "hyperplane" is a point
        return Some(vec![Rational::from_integer(1.into())]);
    }
    let mut diffs = difference_matrix(points, subset);
    let pivots = rref(&mut diffs);
    if pivots.len() != dim - 1 {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut normal = vec![Rational::zero(); dim];
    normal[free] = Rational::from_integer(1.into());
    for (row, &p) in diffs.iter().zip(&pivots) {
        normal[p] = -&row[free];
    }
    Some(normal)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[u32]]) -> LatticePolytope {
        LatticePolytope::new(points.iter().map(|p| ExponentVector::new(p.to_vec()))).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(poly(&[&[0, 0], &[1, 0], &[0, 1]]).dim(), 2);
        assert_eq!(poly(&[&[4, 2]]).dim(), 0);
        assert_eq!(poly(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]).dim(), 1);
    }

    #[test]
    fn simplex_and_square() {
        assert_eq!(
            poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).normalized_volume(),
            1
        );
        assert_eq!(
            poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).normalized_volume(),
            2
        );
        assert_eq!(poly(&[&[7, 7]]).normalized_volume(), 1);
    }

    #[test]
    fn volume_is_intrinsic() {
        assert_eq!(poly(&[&[3, 0], &[0, 3]]).normalized_volume(), 1);
        // twisted cubic monomials: lattice spanned by (-1, 1), three steps
        assert_eq!(
            poly(&[&[3, 0], &[2, 1], &[1, 2], &[0, 3]]).normalized_volume(),
            3
        );
        // doubling a square in the ambient lattice does not change it intrinsically
        assert_eq!(
            poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]).normalized_volume(),
            2
        );
        // but adding the midpoint refines the lattice
        assert_eq!(
            poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1]]).normalized_volume(),
            4
        );
    }

    #[test]
    fn cube_and_cross_polytope() {
        let mut cube = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    cube.push(vec![a, b, c]);
                }
            }
        }
        let p = LatticePolytope::new(cube.into_iter().map(ExponentVector::new)).unwrap();
        assert_eq!(p.normalized_volume(), 6);

        // octahedron shifted into the orthant: 8 unit simplices of volume 1
        let oct = poly(&[
            &[2, 1, 1],
            &[0, 1, 1],
            &[1, 2, 1],
            &[1, 0, 1],
            &[1, 1, 2],
            &[1, 1, 0],
            &[1, 1, 1],
        ]);
        assert_eq!(oct.normalized_volume(), 8);
    }

    #[test]
    fn lattice_basis_of_dependent_vectors() {
        let v = |a: &[i64]| a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let basis = lattice_basis(&[v(&[2, 4]), v(&[3, 6]), v(&[0, 0])]);
        assert_eq!(basis, vec![v(&[1, 2])]);
    }
}

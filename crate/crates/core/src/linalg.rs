//! Exact rational linear algebra: incremental reduced row echelon form for
//! ranks, and linear endomorphisms of `V` given by the images of basis vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exterior::Vector;
use crate::Rational;

type SparseRow = BTreeMap<usize, Rational>;

/// Rows kept in fully reduced echelon form over `Q`.
///
/// Each stored row has a leading 1 in its pivot column and every pivot
/// column is zero in all other rows, so reducing a new row is a single pass.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, SparseRow)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `row` against the stored rows; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (pivot, stored) in &self.rows {
            let Some(c) = row.get(pivot).cloned() else {
                continue;
            };
            axpy(&mut row, &-c, stored);
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row` to the span. Returns `true` if the rank went up.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.keys().all(|&k| k < self.width));
        let mut row = self.reduce(row);
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in row.values_mut() {
            *c *= &inv;
        }
        for (_, stored) in self.rows.iter_mut() {
            if let Some(c) = stored.get(&pivot).cloned() {
                axpy(stored, &-c, &row);
            }
        }
        self.rows.push((pivot, std::mem::take(&mut row)));
        true
    }
}

// row += s * other
fn axpy(row: &mut SparseRow, s: &Rational, other: &SparseRow) {
    for (&k, v) in other {
        let e = row.entry(k).or_insert_with(Rational::zero);
        *e += s * v;
        if e.is_zero() {
            row.remove(&k);
        }
    }
}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(width);
    for r in rows {
        assert_eq!(r.len(), width, "ragged matrix");
        ech.insert(
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        );
    }
    ech.rank()
}

/// A linear endomorphism of `V`, stored as the images of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn identity(genus: usize) -> Self {
        LinearMap {
            images: (0..2 * genus).map(|i| Vector::basis(genus, i)).collect(),
        }
    }

    /// `images[i]` is the image of the `i`-th basis vector.
    pub fn from_images(images: Vec<Vector>) -> Self {
        let n = images.len();
        assert!(images.iter().all(|v| v.dim() == n), "non-square map");
        LinearMap { images }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.dim(), "dimension mismatch");
        let mut out = Vector::zero(self.dim() / 2);
        for (c, img) in v.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                out = &out + &img.scale(c);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            images: other.images.iter().map(|v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, v)| {
            v.coords()
                .iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    /// Row-major matrix `M` with `M[r][c]` the `r`-th coordinate of the
    /// image of basis vector `c`.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        (0..n)
            .map(|r| (0..n).map(|c| self.images[c].coords()[r].clone()).collect())
            .collect()
    }

    /// Whether `Lu · Lv = u · v` on all basis pairs.
    pub fn is_symplectic(&self) -> bool {
        let n = self.dim();
        let g = n / 2;
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.images[i].dot(&self.images[j])
                    == Rational::from_integer(crate::exterior::basis_pairing(g, i, j).into())
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rank(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&dense(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 1]])), 3);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert([(0, int(2)), (1, int(1))].into()));
        assert!(!e.insert([(0, int(4)), (1, int(2))].into()));
        assert!(e.contains([(0, rat(1, 3)), (1, rat(1, 6))].into()));
        assert!(!e.contains([(2, int(1))].into()));
        assert!(e.insert([(1, int(1)), (2, int(1))].into()));
        assert!(e.contains([(0, int(2)), (2, int(-1))].into()));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn identity_and_compose() {
        let id = LinearMap::identity(2);
        assert!(id.is_identity());
        assert!(id.is_symplectic());
        let v = Vector::from_integers(&[1, 2, 3, 4]).unwrap();
        assert_eq!(id.apply(&v), v);
        assert!(id.compose(&id).is_identity());
    }
}

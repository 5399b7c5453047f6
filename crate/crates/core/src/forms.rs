//! Invariant pairings on exterior powers of `V`, and the transvections used
//! to test their `𝔰𝔭(V)`-equivariance.
//!
//! * [`omega3`]: `(a0∧a1∧a2, b0∧b1∧b2) ↦ Σ_τ sign(τ) Π (a_i · b_τ(i))`,
//!   antisymmetric, and a symplectic form on `∧³ₒV`.
//! * [`q2`]: `(a∧a', b∧b') ↦ (a·b)(a'·b') - (a·b')(a'·b)`, symmetric.
//! * [`phi`]: `Σ_{i,j ∈ Z/3} q(a_i∧a_{i+1}, b_j∧b_{j+1}) a_{i+2} b_{j+2}`,
//!   valued in `Sym²V`.
//!
//! All three are evaluated on basis blades and extended bilinearly; they are
//! defined on all of `∧³V`, not only on the primitive part.

use num_traits::Zero;

use crate::exterior::{basis_pairing, Multivector, Sym2, Vector};
use crate::linalg::LinearMap;
use crate::{Error, Rational, Result};

fn check_pair(x: &Multivector, y: &Multivector, degree: usize) -> Result<()> {
    for m in [x, y] {
        if m.degree() != degree {
            return Err(Error::WrongDegree {
                expected: degree,
                found: m.degree(),
            });
        }
    }
    if x.genus() != y.genus() {
        return Err(Error::DimensionMismatch {
            expected: 2 * x.genus(),
            found: 2 * y.genus(),
        });
    }
    Ok(())
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn q_blades(g: usize, a: (usize, usize), b: (usize, usize)) -> i64 {
    basis_pairing(g, a.0, b.0) * basis_pairing(g, a.1, b.1) - basis_pairing(g, a.0, b.1) * basis_pairing(g, a.1, b.0)
}

/// The invariant pairing `ω₃` on `∧³V`.
pub fn omega3(s: &Multivector, t: &Multivector) -> Result<Rational> {
    check_pair(s, t, 3)?;
    let g = s.genus();
    let mut acc = Rational::zero();
    for (x, cx) in s.terms() {
        for (y, cy) in t.terms() {
            let mut m = [[0i64; 3]; 3];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    *e = basis_pairing(g, x[i], y[j]);
                }
            }
            let d = det3(m);
            if d != 0 {
                acc += cx * cy * Rational::from_integer(d.into());
            }
        }
    }
    Ok(acc)
}

/// The symmetric form `q` on `∧²V`.
pub fn q2(x: &Multivector, y: &Multivector) -> Result<Rational> {
    check_pair(x, y, 2)?;
    let g = x.genus();
    let mut acc = Rational::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let v = q_blades(g, (a[0], a[1]), (b[0], b[1]));
            if v != 0 {
                acc += ca * cb * Rational::from_integer(v.into());
            }
        }
    }
    Ok(acc)
}

/// The `Sym²V`-valued pairing `Φ` on `∧³V`.
pub fn phi(s: &Multivector, t: &Multivector) -> Result<Sym2> {
    check_pair(s, t, 3)?;
    let g = s.genus();
    let mut out = Sym2::zero(g);
    for (x, cx) in s.terms() {
        for (y, cy) in t.terms() {
            let c = cx * cy;
            for i in 0..3 {
                let xi = (x[i], x[(i + 1) % 3]);
                for j in 0..3 {
                    let v = q_blades(g, xi, (y[j], y[(j + 1) % 3]));
                    if v != 0 {
                        out.add_term(x[(i + 2) % 3], y[(j + 2) % 3], &c * Rational::from_integer(v.into()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The symplectic transvection `x ↦ x + (x·c) c`, the action of a Dehn twist
/// about a curve of class `c` on `H_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transvection {
    direction: Vector,
}

impl Transvection {
    pub fn new(direction: Vector) -> Self {
        Transvection { direction }
    }

    pub fn direction(&self) -> &Vector {
        &self.direction
    }

    pub fn apply_vector(&self, x: &Vector) -> Vector {
        x + &self.direction.scale(&x.dot(&self.direction))
    }

    /// `x ↦ x - (x·c) c`.
    pub fn inverse(&self) -> LinearMap {
        let g = self.direction.genus();
        LinearMap::from_images(
            (0..2 * g)
                .map(|i| {
                    let e = Vector::basis(g, i);
                    &e - &self.direction.scale(&e.dot(&self.direction))
                })
                .collect(),
        )
    }

    pub fn matrix(&self) -> LinearMap {
        let g = self.direction.genus();
        LinearMap::from_images((0..2 * g).map(|i| self.apply_vector(&Vector::basis(g, i))).collect())
    }

    /// Functorial action on `∧ᵏV`.
    pub fn apply(&self, x: &Multivector) -> Multivector {
        x.transform(&self.matrix())
    }

    /// Functorial action on `Sym²V`.
    pub fn apply_sym2(&self, x: &Sym2) -> Sym2 {
        x.transform(&self.matrix())
    }
}

//! Johnson elements of subsurfaces and bounding pairs.
//!
//! A subsurface `X'` cut out by a bounding pair is described homologically by
//! its boundary class `d` and a symplectic basis `(e_i, f_i)` of `H_1(X')`
//! modulo `d`. Its Johnson element is `j(X') = d ∧ Σ e_i∧f_i`, which does not
//! depend on the lift of the basis modulo `d` since `d∧d = 0`. The primitive
//! projection of `j(X')` is the class `j(d, d')` of the bounding pair map in
//! `∧³ₒV`.

use crate::exterior::{Multivector, SymplecticSpace, Vector};
use crate::forms::Transvection;
use crate::linalg::LinearMap;
use crate::{Error, Rational, Result};

/// Homology data of a subsurface bounded by a bounding pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsurfaceSpec {
    boundary: Vector,
    pairs: Vec<(Vector, Vector)>,
}

impl SubsurfaceSpec {
    /// Validates `e_i·f_j = δ_ij`, `e_i·e_j = f_i·f_j = 0`, `d·e_i = d·f_i = 0`
    /// and `d ≠ 0`.
    pub fn new(boundary: Vector, pairs: Vec<(Vector, Vector)>) -> Result<Self> {
        let dim = boundary.dim();
        for v in pairs.iter().flat_map(|(e, f)| [e, f]) {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        if boundary.is_zero() {
            return Err(Error::InvalidSubsurface {
                pairing: "d".into(),
                expected: "nonzero".into(),
                found: "0".into(),
            });
        }
        let expect = |name: String, got: Rational, want: i64| -> Result<()> {
            if got != Rational::from_integer(want.into()) {
                return Err(Error::InvalidSubsurface {
                    pairing: name,
                    expected: want.to_string(),
                    found: got.to_string(),
                });
            }
            Ok(())
        };
        for (i, (ei, fi)) in pairs.iter().enumerate() {
            let n = i + 1;
            expect(format!("d·e{n}"), boundary.dot(ei), 0)?;
            expect(format!("d·f{n}"), boundary.dot(fi), 0)?;
            for (j, (ej, fj)) in pairs.iter().enumerate() {
                let m = j + 1;
                expect(format!("e{n}·f{m}"), ei.dot(fj), i64::from(i == j))?;
                if j > i {
                    expect(format!("e{n}·e{m}"), ei.dot(ej), 0)?;
                    expect(format!("f{n}·f{m}"), fi.dot(fj), 0)?;
                }
            }
        }
        Ok(SubsurfaceSpec { boundary, pairs })
    }

    pub fn boundary(&self) -> &Vector {
        &self.boundary
    }

    pub fn pairs(&self) -> &[(Vector, Vector)] {
        &self.pairs
    }

    /// Genus of the subsurface.
    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    /// Genus of the ambient surface.
    pub fn ambient_genus(&self) -> usize {
        self.boundary.genus()
    }

    /// `Σ e_i ∧ f_i`, a lift of the intersection bivector of the subsurface.
    pub fn local_delta(&self) -> Multivector {
        let mut acc = Multivector::zero(self.ambient_genus(), 2);
        for (e, f) in &self.pairs {
            acc += &Multivector::from_vector(e)
                .wedge(&Multivector::from_vector(f))
                .expect("degree 2");
        }
        acc
    }
}

/// A bounding pair `(d, d')`: the two subsurfaces it cuts the surface into,
/// each with its own induced boundary orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingPairSpec {
    side1: SubsurfaceSpec,
    side2: SubsurfaceSpec,
}

impl BoundingPairSpec {
    /// Requires opposite boundary classes and `genus(side1) + genus(side2) + 1 = g`.
    pub fn new(side1: SubsurfaceSpec, side2: SubsurfaceSpec) -> Result<Self> {
        let g = side1.ambient_genus();
        if side2.ambient_genus() != g {
            return Err(Error::DimensionMismatch {
                expected: 2 * g,
                found: 2 * side2.ambient_genus(),
            });
        }
        if !(side1.boundary() + side2.boundary()).is_zero() {
            return Err(Error::InvalidBoundingPair(format!(
                "boundary classes must cancel, got {} and {}",
                side1.boundary(),
                side2.boundary()
            )));
        }
        if side1.genus() + side2.genus() + 1 != g {
            return Err(Error::InvalidBoundingPair(format!(
                "subsurface genera {} + {} + 1 must equal the surface genus {g}",
                side1.genus(),
                side2.genus()
            )));
        }
        Ok(BoundingPairSpec { side1, side2 })
    }

    pub fn side1(&self) -> &SubsurfaceSpec {
        &self.side1
    }

    pub fn side2(&self) -> &SubsurfaceSpec {
        &self.side2
    }

    pub fn genus(&self) -> usize {
        self.side1.ambient_genus()
    }

    /// The boundary class `d`, oriented as induced by `side1`.
    pub fn d(&self) -> &Vector {
        self.side1.boundary()
    }

    pub fn swapped(&self) -> Self {
        BoundingPairSpec {
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

/// `j(X') = d ∧ Σ e_i∧f_i`.
pub fn johnson_element(side: &SubsurfaceSpec) -> Multivector {
    Multivector::from_vector(side.boundary())
        .wedge(&side.local_delta())
        .expect("degree 3")
}

/// Everything computed for a bounding pair, with the identities it must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JohnsonData {
    pub side1: Multivector,
    pub side2: Multivector,
    /// `j(X') - j(X'')`
    pub difference: Multivector,
    /// `d ∧ δ`
    pub d_wedge_delta: Multivector,
    pub primitive1: Multivector,
    pub primitive2: Multivector,
}

impl JohnsonData {
    pub fn compute(pair: &BoundingPairSpec) -> Result<Self> {
        let space = SymplecticSpace::new(pair.genus())?;
        let side1 = johnson_element(pair.side1());
        let side2 = johnson_element(pair.side2());
        let d_wedge_delta = Multivector::from_vector(pair.d()).wedge(&space.delta())?;
        Ok(JohnsonData {
            difference: &side1 - &side2,
            primitive1: space.project_primitive(&side1)?,
            primitive2: space.project_primitive(&side2)?,
            side1,
            side2,
            d_wedge_delta,
        })
    }

    /// `j(X') - j(X'') = d∧δ`
    pub fn identity_holds(&self) -> bool {
        self.difference == self.d_wedge_delta
    }

    pub fn projections_agree(&self) -> bool {
        self.primitive1 == self.primitive2
    }
}

/// `j(d, d')`: the primitive projection of `j(X')`, after checking
/// `j(X') - j(X'') = d∧δ` and that both sides project to the same element.
pub fn johnson_bp(pair: &BoundingPairSpec) -> Result<Multivector> {
    let data = JohnsonData::compute(pair)?;
    if !data.identity_holds() {
        return Err(Error::IdentityFailure {
            identity: "j(X') - j(X'') = d^delta".into(),
            detail: format!("difference {} vs d^delta {}", data.difference, data.d_wedge_delta),
        });
    }
    if !data.projections_agree() {
        return Err(Error::IdentityFailure {
            identity: "projections of j(X') and j(X'') agree".into(),
            detail: format!("{} vs {}", data.primitive1, data.primitive2),
        });
    }
    Ok(data.primitive1)
}

/// Action of `τ_d τ_{d'}^{-1}` on `V`.
pub fn bounding_pair_action_on_v(pair: &BoundingPairSpec) -> LinearMap {
    let twist = Transvection::new(pair.side1().boundary().clone());
    let other = Transvection::new(pair.side2().boundary().clone());
    twist.matrix().compose(&other.inverse())
}

/// `contraction3(j(X')) = genus(X') · d`.
pub fn expected_johnson_contraction(side: &SubsurfaceSpec) -> Vector {
    side.boundary()
        .scale(&Rational::from_integer((side.genus() as i64).into()))
}

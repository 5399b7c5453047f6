//! Weight-graded model of the `𝔖₃`-invariant third homology of the
//! three-point configuration space, and the unipotent Torelli action on it.
//!
//! An element is a triple `(scalar, sym2, top)`. The pair `(scalar, sym2)`
//! lies in the sub `Q ⊕ Sym²V ≅ H_2(X²)^sign`, the image of the tube map; the
//! scalar spans the line of `[X]×1 - 1×[X]`. The component `top` lies in the
//! quotient `∧³ₒV`. An element `t` of the Johnson group `∧³ₒV` acts by
//!
//! ```text
//! (s, x, y) ↦ (s + κ₁ ω₃(t, y), x + κ₂ Φ(t, y), y)
//! ```
//!
//! Reading only `(sym2, top)` gives the quotient by the scalar line.

use std::ops::{Add, Neg, Sub};

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::exterior::{Multivector, Sym2, SymplecticSpace};
use crate::forms::{omega3, phi};
use crate::johnson::{johnson_bp, BoundingPairSpec};
use crate::{Error, Rational, Result};

/// Cohomological weight of the sub (dual to `∧³ₒV`).
pub const WEIGHT_PURE: u32 = 3;
/// Cohomological weight of the quotient (dual to `Sym²V(-1)`).
pub const WEIGHT_QUOTIENT: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedH3Element {
    scalar: Rational,
    sym2: Sym2,
    top: Multivector,
}

impl GradedH3Element {
    /// Fails if `top` is not primitive or the genera disagree.
    pub fn new(scalar: Rational, sym2: Sym2, top: Multivector) -> Result<Self> {
        let space = SymplecticSpace::new(top.genus())?;
        if sym2.genus() != top.genus() {
            return Err(Error::DimensionMismatch {
                expected: 2 * top.genus(),
                found: 2 * sym2.genus(),
            });
        }
        let c = space.contraction3(&top)?;
        if !c.is_zero() {
            return Err(Error::NotPrimitive(c.to_string()));
        }
        Ok(GradedH3Element { scalar, sym2, top })
    }

    pub fn zero(genus: usize) -> Self {
        GradedH3Element {
            scalar: Rational::zero(),
            sym2: Sym2::zero(genus),
            top: Multivector::zero(genus, 3),
        }
    }

    /// An element with the given quotient part and zero sub part.
    pub fn from_top(top: Multivector) -> Result<Self> {
        let g = top.genus();
        Self::new(Rational::zero(), Sym2::zero(g), top)
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn sym2(&self) -> &Sym2 {
        &self.sym2
    }

    pub fn top(&self) -> &Multivector {
        &self.top
    }

    pub fn genus(&self) -> usize {
        self.top.genus()
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.sym2.is_zero() && self.top.is_zero()
    }

    /// Lies in the sub, i.e. in the image of the tube map.
    pub fn in_sub(&self) -> bool {
        self.top.is_zero()
    }
}

impl Add for &GradedH3Element {
    type Output = GradedH3Element;
    fn add(self, rhs: &GradedH3Element) -> GradedH3Element {
        GradedH3Element {
            scalar: &self.scalar + &rhs.scalar,
            sym2: &self.sym2 + &rhs.sym2,
            top: &self.top + &rhs.top,
        }
    }
}

impl Neg for &GradedH3Element {
    type Output = GradedH3Element;
    fn neg(self) -> GradedH3Element {
        GradedH3Element {
            scalar: -&self.scalar,
            sym2: -&self.sym2,
            top: -&self.top,
        }
    }
}

impl Sub for &GradedH3Element {
    type Output = GradedH3Element;
    fn sub(self, rhs: &GradedH3Element) -> GradedH3Element {
        self + &(-rhs)
    }
}

/// Coefficients of the two components of the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorelliParams {
    kappa1: Rational,
    kappa2: Rational,
}

impl TorelliParams {
    /// `kappa2` must be nonzero.
    pub fn new(kappa1: Rational, kappa2: Rational) -> Result<Self> {
        if kappa2.is_zero() {
            return Err(Error::InvalidParameter("kappa2 must be nonzero".into()));
        }
        Ok(TorelliParams { kappa1, kappa2 })
    }

    pub fn kappa1(&self) -> &Rational {
        &self.kappa1
    }

    pub fn kappa2(&self) -> &Rational {
        &self.kappa2
    }
}

impl Default for TorelliParams {
    /// `κ₁ = 0`, `κ₂ = -1`. With `Φ(j(d,d'), a∧c∧b) = -ab` on the figure-one
    /// fixture, `κ₂ = -1` makes the variation of `a∧c∧b` equal to `+ab`.
    fn default() -> Self {
        TorelliParams {
            kappa1: Rational::zero(),
            kappa2: -Rational::one(),
        }
    }
}

/// The tube map, modelled as the inclusion of the sub.
pub fn lift_tube(x: &Sym2, s: &Rational) -> GradedH3Element {
    GradedH3Element {
        scalar: s.clone(),
        sym2: x.clone(),
        top: Multivector::zero(x.genus(), 3),
    }
}

/// Action of a Johnson-group element `t ∈ ∧³ₒV`.
pub fn act(t: &Multivector, m: &GradedH3Element, params: &TorelliParams) -> Result<GradedH3Element> {
    let space = SymplecticSpace::new(m.genus())?;
    let c = space.contraction3(t)?;
    if !c.is_zero() {
        return Err(Error::NotPrimitive(c.to_string()));
    }
    let dscalar = omega3(t, &m.top)? * &params.kappa1;
    let dsym = phi(t, &m.top)?.scale(&params.kappa2);
    Ok(GradedH3Element {
        scalar: &m.scalar + &dscalar,
        sym2: &m.sym2 + &dsym,
        top: m.top.clone(),
    })
}

/// `act(j(d,d'), m) - m` for `m = (0, 0, top)`.
pub fn variation(pair: &BoundingPairSpec, top: &Multivector, params: &TorelliParams) -> Result<GradedH3Element> {
    if top.genus() != pair.genus() {
        return Err(Error::DimensionMismatch {
            expected: 2 * pair.genus(),
            found: 2 * top.genus(),
        });
    }
    let j = johnson_bp(pair)?;
    let m = GradedH3Element::from_top(top.clone())?;
    Ok(&act(&j, &m, params)? - &m)
}

/// Dimensions of the three terms of `0 → Q ⊕ Sym²V → H → ∧³ₒV → 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionAudit {
    pub genus: usize,
    pub sub_scalar: usize,
    pub sub_sym2: usize,
    pub sub: usize,
    pub quotient: usize,
    pub total: usize,
    pub quotient_rank_projector: usize,
    pub quotient_rank_isotropic: usize,
    pub quotient_expected: usize,
}

impl DimensionAudit {
    pub fn consistent(&self) -> bool {
        self.quotient_rank_projector == self.quotient_rank_isotropic
            && self.quotient_rank_projector == self.quotient_expected
            && self.sub + self.quotient == self.total
    }
}

pub fn dimension_audit(space: &SymplecticSpace) -> DimensionAudit {
    let g = space.genus();
    let ranks = space.primitive_rank();
    let sub_sym2 = binomial(2 * g + 1, 2);
    let sub = 1 + sub_sym2;
    DimensionAudit {
        genus: g,
        sub_scalar: 1,
        sub_sym2,
        sub,
        quotient: ranks.projector_image,
        total: sub + ranks.projector_image,
        quotient_rank_projector: ranks.projector_image,
        quotient_rank_isotropic: ranks.isotropic_span,
        quotient_expected: ranks.expected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::figure_one;
    use crate::{int, rat};

    #[test]
    fn lift_tube_examples() {
        let f = figure_one();
        let ab = Sym2::product(&f.a, &f.b);
        let x = lift_tube(&ab, &Rational::zero());
        assert!(x.in_sub() && x.scalar().is_zero() && *x.sym2() == ab);
        let line = lift_tube(&Sym2::zero(3), &int(1));
        assert!(!line.is_zero() && line.sym2().is_zero());
        assert!(lift_tube(&Sym2::zero(3), &Rational::zero()).is_zero());
    }

    #[test]
    fn figure_one_variation_is_ab() {
        let f = figure_one();
        let v = variation(&f.bounding_pair, &f.top, &TorelliParams::default()).unwrap();
        assert_eq!(*v.sym2(), Sym2::product(&f.a, &f.b));
        assert!(v.top().is_zero());
        assert!(v.scalar().is_zero());
    }

    #[test]
    fn kappa_scales_the_variation() {
        let f = figure_one();
        let p = TorelliParams::new(int(2), rat(3, 2)).unwrap();
        let v = variation(&f.bounding_pair, &f.top, &p).unwrap();
        assert_eq!(*v.sym2(), Sym2::product(&f.a, &f.b).scale(&rat(-3, 2)));
    }

    #[test]
    fn sub_is_fixed() {
        let f = figure_one();
        let j = johnson_bp(&f.bounding_pair).unwrap();
        let m = lift_tube(&Sym2::product(&f.a, &f.c), &rat(5, 3));
        assert_eq!(act(&j, &m, &TorelliParams::default()).unwrap(), m);
    }

    #[test]
    fn zero_top_has_zero_variation() {
        let f = figure_one();
        let v = variation(&f.bounding_pair, &Multivector::zero(3, 3), &TorelliParams::default()).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn non_primitive_inputs_are_rejected() {
        let f = figure_one();
        let s = f.space;
        let bad = Multivector::wedge3(&s.a(1), &s.a(2), &s.b(2));
        assert!(matches!(
            GradedH3Element::from_top(bad.clone()),
            Err(Error::NotPrimitive(_))
        ));
        let m = GradedH3Element::from_top(f.top.clone()).unwrap();
        assert!(matches!(
            act(&bad, &m, &TorelliParams::default()),
            Err(Error::NotPrimitive(_))
        ));
        assert!(TorelliParams::new(int(1), int(0)).is_err());
    }

    #[test]
    fn audit_genus_three() {
        let a = dimension_audit(&SymplecticSpace::new(3).unwrap());
        assert_eq!((a.sub, a.quotient, a.total), (22, 14, 36));
        assert!(a.consistent());
    }
}

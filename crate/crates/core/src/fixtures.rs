//! Named built-in configurations.
//!
//! `paper-figure-1` is the genus-3 bounding pair with curves `a`, `b`, `c`:
//! `d = a1` bounds the genus-1 subsurface `X'` with symplectic pair
//! `(a2, b2)`, `d' = -a1` bounds `X''` with pair `(a3, b3)`, and
//! `a = a2 ⊂ X'`, `b = a3 ⊂ X''`, `c = b1` crosses `d` once with `d·c = 1`.
//! The class `a'` with `a·a' = 1` is `b2`.

use crate::exterior::{Multivector, SymplecticSpace, Vector};
use crate::johnson::{BoundingPairSpec, SubsurfaceSpec};
use crate::{Error, Result};

pub const FIGURE_ONE: &str = "paper-figure-1";
pub const GENUS_FOUR: &str = "genus-4-bounding-pair";

pub const NAMES: &[&str] = &[GENUS_FOUR, FIGURE_ONE];

/// A bounding pair together with the isotropic triple `a, c, b` it acts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub space: SymplecticSpace,
    pub bounding_pair: BoundingPairSpec,
    pub a: Vector,
    pub a_prime: Vector,
    pub b: Vector,
    pub c: Vector,
    /// `a ∧ c ∧ b`
    pub top: Multivector,
}

impl Fixture {
    pub fn d(&self) -> &Vector {
        self.bounding_pair.d()
    }

    pub fn d_prime(&self) -> &Vector {
        self.bounding_pair.side2().boundary()
    }
}

pub fn figure_one() -> Fixture {
    let s = SymplecticSpace::new(3).expect("genus 3");
    let pair = BoundingPairSpec::new(
        SubsurfaceSpec::new(s.a(1), vec![(s.a(2), s.b(2))]).expect("valid side"),
        SubsurfaceSpec::new(-s.a(1), vec![(s.a(3), s.b(3))]).expect("valid side"),
    )
    .expect("valid pair");
    build(FIGURE_ONE, s, pair)
}

/// Same curves in genus 4, with the extra handle on the `X''` side.
pub fn genus_four() -> Fixture {
    let s = SymplecticSpace::new(4).expect("genus 4");
    let pair = BoundingPairSpec::new(
        SubsurfaceSpec::new(s.a(1), vec![(s.a(2), s.b(2))]).expect("valid side"),
        SubsurfaceSpec::new(-s.a(1), vec![(s.a(3), s.b(3)), (s.a(4), s.b(4))]).expect("valid side"),
    )
    .expect("valid pair");
    build(GENUS_FOUR, s, pair)
}

fn build(name: &'static str, s: SymplecticSpace, pair: BoundingPairSpec) -> Fixture {
    let (a, b, c) = (s.a(2), s.a(3), s.b(1));
    Fixture {
        name,
        space: s,
        bounding_pair: pair,
        top: Multivector::wedge3(&a, &c, &b),
        a_prime: s.b(2),
        a,
        b,
        c,
    }
}

pub fn lookup(name: &str) -> Result<Fixture> {
    match name {
        FIGURE_ONE => Ok(figure_one()),
        GENUS_FOUR => Ok(genus_four()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

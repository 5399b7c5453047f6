//! Seeded random generators for property checks.

use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Multivector, SymplecticSpace, Vector};
use crate::forms::Transvection;
use crate::johnson::{BoundingPairSpec, SubsurfaceSpec};
use crate::linalg::LinearMap;
use crate::Rational;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 6`, `1 ≤ q ≤ 4`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into())
}

pub fn vector<R: Rng>(rng: &mut R, genus: usize) -> Vector {
    Vector::new((0..2 * genus).map(|_| rational(rng)).collect()).expect("even length")
}

/// Nonzero integral vector with coprime entries in `[-bound, bound]`.
pub fn primitive_integral_vector<R: Rng>(rng: &mut R, genus: usize, bound: i64) -> Vector {
    loop {
        let coords: Vec<i64> = (0..2 * genus).map(|_| rng.gen_range(-bound..=bound)).collect();
        let gcd = coords.iter().fold(0i64, |acc, &c| acc.gcd(&c));
        if gcd == 0 {
            continue;
        }
        let coords: Vec<i64> = coords.iter().map(|c| c / gcd).collect();
        return Vector::from_integers(&coords).expect("even length");
    }
}

/// Each basis blade gets a random coefficient with probability 1/2.
pub fn multivector<R: Rng>(rng: &mut R, genus: usize, degree: usize) -> Multivector {
    let space = SymplecticSpace::new(genus.max(2)).expect("genus >= 2");
    let terms: Vec<_> = space
        .basis_blades(degree)
        .into_iter()
        .filter_map(|b| rng.gen_bool(0.5).then(|| (b, rational(rng))))
        .collect();
    Multivector::from_terms(genus, degree, terms).expect("valid blades")
}

pub fn primitive<R: Rng>(rng: &mut R, space: &SymplecticSpace) -> Multivector {
    space
        .project_primitive(&multivector(rng, space.genus(), 3))
        .expect("degree 3")
}

pub fn transvection<R: Rng>(rng: &mut R, genus: usize) -> Transvection {
    Transvection::new(primitive_integral_vector(rng, genus, 2))
}

/// Product of `steps` random integral transvections.
pub fn symplectic_map<R: Rng>(rng: &mut R, genus: usize, steps: usize) -> LinearMap {
    (0..steps).fold(LinearMap::identity(genus), |acc, _| {
        transvection(rng, genus).matrix().compose(&acc)
    })
}

/// A random bounding pair: a symplectic basis moved by a random symplectic
/// map, `d` the image of `a1`, the other handles split between the sides.
pub fn bounding_pair<R: Rng>(rng: &mut R, genus: usize) -> BoundingPairSpec {
    assert!(genus >= 3, "bounding pairs with two positive-genus sides need g >= 3");
    let m = symplectic_map(rng, genus, 6);
    let a = |i: usize| m.apply(&Vector::basis(genus, i));
    let b = |i: usize| m.apply(&Vector::basis(genus, genus + i));
    let h1 = rng.gen_range(1..=genus - 2);
    let d = a(0);
    let pairs1 = (1..=h1).map(|i| (a(i), b(i))).collect();
    let pairs2 = (h1 + 1..genus).map(|i| (a(i), b(i))).collect();
    BoundingPairSpec::new(
        SubsurfaceSpec::new(d.clone(), pairs1).expect("valid side"),
        SubsurfaceSpec::new(-d, pairs2).expect("valid side"),
    )
    .expect("valid pair")
}

/// The same bounding pair with a new symplectic basis on each side and the
/// basis vectors shifted by random multiples of the boundary class.
pub fn respecify<R: Rng>(rng: &mut R, pair: &BoundingPairSpec) -> BoundingPairSpec {
    let side = |rng: &mut R, s: &SubsurfaceSpec| -> SubsurfaceSpec {
        let mut pairs = s.pairs().to_vec();
        for _ in 0..3 {
            if pairs.is_empty() {
                break;
            }
            let mut c = Vector::zero(s.ambient_genus());
            for (e, f) in &pairs {
                let (x, y) = (rng.gen_range(-2i64..=2), rng.gen_range(-2i64..=2));
                c = &(&c + &e.scale(&crate::int(x))) + &f.scale(&crate::int(y));
            }
            if c.is_zero() {
                continue;
            }
            let t = Transvection::new(c);
            pairs = pairs
                .iter()
                .map(|(e, f)| (t.apply_vector(e), t.apply_vector(f)))
                .collect();
        }
        let d = s.boundary();
        let pairs = pairs
            .into_iter()
            .map(|(e, f)| (&e + &d.scale(&rational(rng)), &f + &d.scale(&rational(rng))))
            .collect();
        SubsurfaceSpec::new(d.clone(), pairs).expect("still valid")
    };
    let s1 = side(rng, pair.side1());
    let s2 = side(rng, pair.side2());
    BoundingPairSpec::new(s1, s2).expect("still valid")
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

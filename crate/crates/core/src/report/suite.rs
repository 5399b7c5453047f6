//! Seeded randomized property suite behind the `invariants` command.
//!
//! Each check draws from its own generator, seeded from the job seed and the
//! check name, so results do not depend on which checks run or in what order.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exterior::{Multivector, Sym2, SymplecticSpace, Vector};
use crate::forms::{omega3, phi, q2};
use crate::h3::{act, GradedH3Element, TorelliParams};
use crate::johnson::{bounding_pair_action_on_v, johnson_bp, JohnsonData};
use crate::sample;
use crate::text::{parse_multivector, parse_sym2};

type CheckFn = fn(&SymplecticSpace, &mut ChaCha8Rng, usize) -> bool;

const CHECKS: &[(&str, CheckFn, bool)] = &[
    ("contraction-delta-wedge-v", contraction_delta_wedge_v, false),
    ("contraction-well-defined", contraction_well_defined, false),
    ("johnson-bp-respecification-invariant", johnson_respecification, true),
    ("johnson-identity", johnson_identity, true),
    ("omega3-antisymmetric", omega3_antisymmetric, false),
    ("omega3-invariant", omega3_invariant, false),
    ("omega3-splitting-orthogonal", omega3_orthogonal, false),
    ("phi-alternating", phi_alternating, false),
    ("phi-equivariant", phi_equivariant, false),
    ("phi-ignores-delta-component", phi_ignores_delta, false),
    ("phi-symmetric", phi_symmetric, false),
    ("primitive-rank-two-ways", primitive_rank, false),
    ("projector-idempotent", projector_idempotent, false),
    ("projector-kills-contraction", projector_kills_contraction, false),
    ("q-invariant", q_invariant, false),
    ("render-parse-round-trip", round_trip, false),
    ("splitting-reconstruction", splitting_reconstruction, false),
    ("torelli-trivial-on-v", torelli_trivial, true),
    ("unipotent-additive", unipotent_additive, false),
    ("wedge-graded-sign", wedge_graded_sign, false),
];

/// Runs every applicable check; results are sorted by name. Checks that
/// need a bounding pair are skipped below genus 3.
pub fn run_suite(space: &SymplecticSpace, seed: u64, trials: usize) -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> = CHECKS
        .iter()
        .filter(|(_, _, needs_pair)| !needs_pair || space.genus() >= 3)
        .map(|(name, f, _)| {
            let mut rng = sample::rng(seed ^ name_hash(name));
            (name.to_string(), f(space, &mut rng, trials))
        })
        .collect();
    out.sort();
    out
}

fn name_hash(name: &str) -> u64 {
    // FNV-1a
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
    })
}

fn mv(v: &Vector) -> Multivector {
    Multivector::from_vector(v)
}

fn contraction_delta_wedge_v(s: &SymplecticSpace, _: &mut ChaCha8Rng, _: usize) -> bool {
    let g1 = crate::int(s.genus() as i64 - 1);
    (0..s.dim()).all(|i| {
        let v = Vector::basis(s.genus(), i);
        s.contraction3(&s.delta().wedge(&mv(&v)).unwrap()).unwrap() == v.scale(&g1)
    })
}

fn contraction_well_defined(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let g = s.genus();
        let (u, v, w) = (sample::vector(rng, g), sample::vector(rng, g), sample::vector(rng, g));
        let base = s.contraction3(&Multivector::wedge3(&u, &v, &w)).unwrap();
        let odd = s.contraction3(&Multivector::wedge3(&v, &u, &w)).unwrap();
        let even = s.contraction3(&Multivector::wedge3(&w, &u, &v)).unwrap();
        odd == -&base && even == base
    })
}

fn johnson_respecification(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let p = sample::bounding_pair(rng, s.genus());
        let q = sample::respecify(rng, &p);
        let j = johnson_bp(&p).unwrap();
        johnson_bp(&q).unwrap() == j && johnson_bp(&p.swapped()).unwrap() == j
    })
}

fn johnson_identity(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let data = JohnsonData::compute(&sample::bounding_pair(rng, s.genus())).unwrap();
        data.identity_holds() && data.projections_agree()
    })
}

fn omega3_antisymmetric(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let (x, y) = (sample::primitive(rng, s), sample::primitive(rng, s));
        omega3(&x, &y).unwrap() == -omega3(&y, &x).unwrap()
    })
}

fn omega3_invariant(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let t = sample::transvection(rng, s.genus());
        let (x, y) = (sample::primitive(rng, s), sample::primitive(rng, s));
        omega3(&t.apply(&x), &t.apply(&y)).unwrap() == omega3(&x, &y).unwrap()
    })
}

fn omega3_orthogonal(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let p = sample::primitive(rng, s);
        let dv = s.delta().wedge(&mv(&sample::vector(rng, s.genus()))).unwrap();
        omega3(&p, &dv).unwrap().is_zero()
    })
}

fn phi_alternating(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let g = s.genus();
        let (u, v, w) = (sample::vector(rng, g), sample::vector(rng, g), sample::vector(rng, g));
        let t = sample::multivector(rng, g, 3);
        let x = phi(&Multivector::wedge3(&u, &v, &w), &t).unwrap();
        let y = phi(&Multivector::wedge3(&v, &u, &w), &t).unwrap();
        let uu = phi(&Multivector::wedge3(&u, &u, &w), &t).unwrap();
        y == -&x && uu.is_zero()
    })
}

fn phi_equivariant(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let t = sample::transvection(rng, s.genus());
        let (x, y) = (sample::primitive(rng, s), sample::primitive(rng, s));
        phi(&t.apply(&x), &t.apply(&y)).unwrap() == t.apply_sym2(&phi(&x, &y).unwrap())
    })
}

fn phi_ignores_delta(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let x = sample::multivector(rng, s.genus(), 3);
        let w = sample::primitive(rng, s);
        phi(&x, &w).unwrap() == phi(&s.project_primitive(&x).unwrap(), &w).unwrap()
    })
}

fn phi_symmetric(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let x = sample::multivector(rng, s.genus(), 3);
        let y = sample::multivector(rng, s.genus(), 3);
        phi(&x, &y).unwrap() == phi(&y, &x).unwrap()
    })
}

fn primitive_rank(s: &SymplecticSpace, _: &mut ChaCha8Rng, _: usize) -> bool {
    s.primitive_rank().agrees()
}

fn projector_idempotent(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let p = s.project_primitive(&sample::multivector(rng, s.genus(), 3)).unwrap();
        s.project_primitive(&p).unwrap() == p
    })
}

fn projector_kills_contraction(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let p = s.project_primitive(&sample::multivector(rng, s.genus(), 3)).unwrap();
        s.contraction3(&p).unwrap().is_zero()
    })
}

fn q_invariant(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let t = sample::transvection(rng, s.genus());
        let x = sample::multivector(rng, s.genus(), 2);
        let y = sample::multivector(rng, s.genus(), 2);
        q2(&t.apply(&x), &t.apply(&y)).unwrap() == q2(&x, &y).unwrap() && q2(&x, &y).unwrap() == q2(&y, &x).unwrap()
    })
}

fn round_trip(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let degree = rng.gen_range(1..=3);
        let x = sample::multivector(rng, s.genus(), degree);
        let y = phi(
            &sample::multivector(rng, s.genus(), 3),
            &sample::multivector(rng, s.genus(), 3),
        )
        .unwrap();
        parse_multivector(s.genus(), &x.to_string(), Some(degree)).unwrap() == x
            && parse_sym2(s.genus(), &y.to_string()).unwrap() == y
    })
}

fn splitting_reconstruction(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let x = sample::multivector(rng, s.genus(), 3);
        let p = s.project_primitive(&x).unwrap();
        let w = s.delta_component(&x).unwrap();
        &p + &s.delta().wedge(&mv(&w)).unwrap() == x
    })
}

fn torelli_trivial(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let p = sample::bounding_pair(rng, s.genus());
        let lone = sample::transvection(rng, s.genus()).matrix();
        bounding_pair_action_on_v(&p).is_identity() && !lone.is_identity()
    })
}

fn unipotent_additive(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let params = TorelliParams::new(sample::rational(rng), sample::nonzero_rational(rng)).unwrap();
        let (t1, t2) = (sample::primitive(rng, s), sample::primitive(rng, s));
        let sym = Sym2::product(&sample::vector(rng, s.genus()), &sample::vector(rng, s.genus()));
        let m = GradedH3Element::new(sample::rational(rng), sym, sample::primitive(rng, s)).unwrap();
        let twice = act(&t1, &act(&t2, &m, &params).unwrap(), &params).unwrap();
        let once = act(&(&t1 + &t2), &m, &params).unwrap();
        twice == once && once.top() == m.top()
    })
}

fn wedge_graded_sign(s: &SymplecticSpace, rng: &mut ChaCha8Rng, trials: usize) -> bool {
    (0..trials).all(|_| {
        let g = s.genus();
        let x = sample::multivector(rng, g, 1);
        let y = sample::multivector(rng, g, 2);
        let z = sample::multivector(rng, g, 1);
        x.wedge(&y).unwrap() == y.wedge(&x).unwrap()
            && x.wedge(&z).unwrap() == -&z.wedge(&x).unwrap()
            && x.wedge(&x).unwrap().is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_in_genus_two_and_three() {
        for g in 2..=3 {
            let s = SymplecticSpace::new(g).unwrap();
            let results = run_suite(&s, 11, 4);
            assert!(results.iter().all(|(_, ok)| *ok), "{results:?}");
            let mut names: Vec<_> = results.iter().map(|(n, _)| n.clone()).collect();
            names.sort();
            assert_eq!(names, results.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>());
        }
        assert_eq!(
            run_suite(&SymplecticSpace::new(2).unwrap(), 1, 1).len(),
            CHECKS.len() - 3
        );
    }
}

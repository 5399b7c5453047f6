//! End-to-end acceptance criteria. Each criterion prints one `PASS`/`FAIL`
//! line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p torelli --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::Rng;

use torelli::exterior::MAX_DEGREE;
use torelli::fixtures::{self, Fixture};
use torelli::johnson::{expected_johnson_contraction, JohnsonData};
use torelli::sample;
use torelli::text::{parse_multivector, parse_sym2, parse_vector};
use torelli::{
    act, bounding_pair_action_on_v, johnson_bp, johnson_element, omega3, phi, q2, variation, BoundingPairSpec,
    GradedH3Element, Multivector, Rational, Sym2, SymplecticSpace, TorelliParams, Transvection, Vector,
};

const SEED: u64 = 20_240_917;

// ---------------------------------------------------------------------------
// Oracles, written independently of the library internals.

/// Rank by plain dense Gauss-Jordan elimination.
fn oracle_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `q(u∧u', v∧v') = (u·v)(u'·v') - (u·v')(u'·v)`.
fn oracle_q(u: &Vector, u2: &Vector, v: &Vector, v2: &Vector) -> Rational {
    u.dot(v) * u2.dot(v2) - u.dot(v2) * u2.dot(v)
}

/// Nine-term cyclic sum of Φ evaluated directly on decomposable inputs.
fn oracle_phi(u: [&Vector; 3], v: [&Vector; 3]) -> Sym2 {
    let mut out = Sym2::zero(u[0].genus());
    for i in 0..3 {
        for j in 0..3 {
            let c = oracle_q(u[i], u[(i + 1) % 3], v[j], v[(j + 1) % 3]);
            out += &Sym2::product(u[(i + 2) % 3], v[(j + 2) % 3]).scale(&c);
        }
    }
    out
}

/// Kernel dimension of `contraction3` from its dense matrix.
fn oracle_kernel_dim(space: &SymplecticSpace) -> usize {
    let blades = space.basis_blades(3);
    let cols: Vec<Vector> = blades
        .iter()
        .map(|b| {
            space
                .contraction3(&Multivector::basis(space.genus(), b.clone()))
                .unwrap()
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..space.dim())
        .map(|r| cols.iter().map(|v| v.coords()[r].clone()).collect())
        .collect();
    blades.len() - oracle_rank(rows)
}

fn coords3(space: &SymplecticSpace, x: &Multivector) -> Vec<Rational> {
    space.basis_blades(3).into_iter().map(|b| x.coefficient(&b)).collect()
}

fn random_specs(genus: usize, count: usize, rng: &mut impl Rng) -> Vec<BoundingPairSpec> {
    (0..count)
        .map(|i| {
            let p = sample::bounding_pair(rng, genus);
            if i % 2 == 0 {
                sample::respecify(rng, &p)
            } else {
                p
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Harness.

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    o.detail = format!("{} [{:.3}s]", o.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        if elapsed >= limit {
            o.pass = false;
            o.detail.push_str(&format!(" exceeds {}s", limit.as_secs_f64()));
        }
    }
    o
}

// ---------------------------------------------------------------------------
// Criteria.

fn central_computation() -> Outcome {
    let fig = fixtures::figure_one();
    let Fixture { a, a_prime, b, c, .. } = &fig;
    let d = fig.d();
    let expected = -&Sym2::product(&fig.space.a(2), &fig.space.a(3));

    // brute-force expansion on d∧a∧a' against a∧c∧b
    let brute = oracle_phi([d, a, a_prime], [a, c, b]);
    // closed form (a'·a)(d·c) ab for a decomposable Johnson element
    let closed = Sym2::product(a, b).scale(&(a_prime.dot(a) * d.dot(c)));
    let j = johnson_bp(&fig.bounding_pair).unwrap();
    let lib = phi(&j, &fig.top).unwrap();

    let mut rng = sample::rng(SEED);
    let mut consistent = true;
    for _ in 0..25 {
        let p = sample::respecify(&mut rng, &fig.bounding_pair);
        for q in [p.clone(), p.swapped()] {
            consistent &= phi(&johnson_bp(&q).unwrap(), &fig.top).unwrap() == expected;
        }
    }
    let pass = lib == expected && brute == expected && closed == expected && consistent;
    outcome(
        pass,
        format!("phi(j(d,d'), a^c^b) = {lib} (epsilon = -1; closed form (a'·a)(d·c)ab = {closed}); 50 respecifications agree: {consistent}"),
    )
}

fn nontriviality() -> Outcome {
    let fig = fixtures::figure_one();
    let var = variation(&fig.bounding_pair, &fig.top, &TorelliParams::default()).unwrap();
    let expected = Sym2::product(&fig.space.a(2), &fig.space.a(3));
    let pass = !var.sym2().is_zero() && var.sym2() == &expected && var.top().is_zero();
    outcome(
        pass,
        format!(
            "variation of lift(a^c^b) = ({}, {}, {})",
            var.scalar(),
            var.sym2(),
            var.top()
        ),
    )
}

fn johnson_identity() -> Outcome {
    let mut rng = sample::rng(SEED ^ 3);
    let mut specs = vec![
        fixtures::figure_one().bounding_pair,
        fixtures::genus_four().bounding_pair,
    ];
    specs.extend(random_specs(3, 50, &mut rng));
    specs.extend(random_specs(4, 50, &mut rng));
    let mut failures = 0;
    for p in &specs {
        let (s, x1, x2) = (SymplecticSpace::new(p.genus()).unwrap(), p.side1(), p.side2());
        let lhs = &johnson_element(x1) - &johnson_element(x2);
        let rhs = Multivector::from_vector(p.d()).wedge(&s.delta()).unwrap();
        let data = JohnsonData::compute(p).unwrap();
        let ok = lhs == rhs
            && data.identity_holds()
            && data.projections_agree()
            && s.contraction3(&johnson_element(x1)).unwrap() == expected_johnson_contraction(x1);
        failures += usize::from(!ok);
    }
    outcome(
        failures == 0,
        format!(
            "{} specs (2 fixtures + 50 at g=3 + 50 at g=4), {failures} failures",
            specs.len()
        ),
    )
}

fn splitting() -> Outcome {
    let mut rng = sample::rng(SEED ^ 4);
    let mut failures = 0;
    for g in 2..=4 {
        let s = SymplecticSpace::new(g).unwrap();
        for _ in 0..100 {
            let x = sample::multivector(&mut rng, g, 3);
            let p = s.project_primitive(&x).unwrap();
            let ok = s.contraction3(&p).unwrap().is_zero() && s.project_primitive(&p).unwrap() == p;
            failures += usize::from(!ok);
        }
        let gm1 = Rational::from_integer((g as i64 - 1).into());
        for i in 0..2 * g {
            let v = Vector::basis(g, i);
            let dv = s.delta().wedge(&Multivector::from_vector(&v)).unwrap();
            failures += usize::from(s.contraction3(&dv).unwrap() != v.scale(&gm1));
        }
    }
    outcome(
        failures == 0,
        format!("300 random 3-vectors and all basis vectors at g=2,3,4, {failures} failures"),
    )
}

fn dimension_audit() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    for (g, expected) in [(2, 0), (3, 14), (4, 48)] {
        let s = SymplecticSpace::new(g).unwrap();
        let r = s.primitive_rank();
        let formula = binomial(2 * g, 3) - 2 * g;
        let oracle = oracle_kernel_dim(&s);
        let ok =
            r.projector_image == expected && r.isotropic_span == expected && formula == expected && oracle == expected;
        pass &= ok;
        lines.push(format!(
            "g={g}: projector {} / isotropic {} / kernel {oracle}",
            r.projector_image, r.isotropic_span
        ));
    }
    outcome(pass, lines.join(", "))
}

fn equivariance() -> Outcome {
    let s = SymplecticSpace::new(3).unwrap();
    let mut rng = sample::rng(SEED ^ 6);
    let mut failures = 0;
    for _ in 0..100 {
        let t = sample::transvection(&mut rng, 3);
        let (x, y) = (sample::multivector(&mut rng, 3, 3), sample::multivector(&mut rng, 3, 3));
        let (u, v) = (sample::multivector(&mut rng, 3, 2), sample::multivector(&mut rng, 3, 2));
        let (p, r) = (sample::primitive(&mut rng, &s), sample::primitive(&mut rng, &s));
        let ok = omega3(&t.apply(&x), &t.apply(&y)).unwrap() == omega3(&x, &y).unwrap()
            && omega3(&t.apply(&p), &t.apply(&r)).unwrap() == omega3(&p, &r).unwrap()
            && q2(&t.apply(&u), &t.apply(&v)).unwrap() == q2(&u, &v).unwrap()
            && phi(&t.apply(&x), &t.apply(&y)).unwrap() == t.apply_sym2(&phi(&x, &y).unwrap())
            && phi(&t.apply(&p), &t.apply(&r)).unwrap() == t.apply_sym2(&phi(&p, &r).unwrap());
        failures += usize::from(!ok);
    }
    outcome(
        failures == 0,
        format!("100 random transvections at g=3, {failures} failures"),
    )
}

fn omega3_rank() -> Outcome {
    let s = SymplecticSpace::new(3).unwrap();
    // a basis of the primitive part, picked from projected basis blades
    let mut basis: Vec<Multivector> = Vec::new();
    for b in s.basis_blades(3) {
        let p = s.project_primitive(&Multivector::basis(3, b)).unwrap();
        let mut rows: Vec<Vec<Rational>> = basis.iter().map(|x| coords3(&s, x)).collect();
        rows.push(coords3(&s, &p));
        if oracle_rank(rows) > basis.len() {
            basis.push(p);
        }
    }
    let gram: Vec<Vec<Rational>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| omega3(x, y).unwrap()).collect())
        .collect();
    let n = basis.len();
    let antisymmetric = (0..n).all(|i| (0..n).all(|j| gram[i][j] == -gram[j][i].clone()));
    let rank = oracle_rank(gram);
    outcome(
        n == 14 && rank == 14 && antisymmetric,
        format!("primitive basis size {n}, Gram rank {rank}, antisymmetric {antisymmetric}"),
    )
}

fn torelli_trivial_on_v() -> Outcome {
    let mut rng = sample::rng(SEED ^ 8);
    let mut specs = vec![
        fixtures::figure_one().bounding_pair,
        fixtures::genus_four().bounding_pair,
    ];
    specs.extend(random_specs(3, 25, &mut rng));
    specs.extend(random_specs(4, 25, &mut rng));
    let trivial = specs.iter().all(|p| {
        let m = bounding_pair_action_on_v(p);
        m.is_identity() && m.matrix() == torelli::LinearMap::identity(p.genus()).matrix()
    });
    let lone = Transvection::new(fixtures::figure_one().d().clone()).matrix();
    let lone_nontrivial = !lone.is_identity() && lone.is_symplectic();
    outcome(
        trivial && lone_nontrivial,
        format!(
            "{} specs act as identity: {trivial}; lone twist nontrivial: {lone_nontrivial}",
            specs.len()
        ),
    )
}

fn unipotency() -> Outcome {
    let mut rng = sample::rng(SEED ^ 9);
    let mut failures = 0;
    for g in 3..=4 {
        let s = SymplecticSpace::new(g).unwrap();
        for _ in 0..30 {
            let params = TorelliParams::new(sample::rational(&mut rng), sample::nonzero_rational(&mut rng)).unwrap();
            let (t1, t2) = (sample::primitive(&mut rng, &s), sample::primitive(&mut rng, &s));
            let sym = &Sym2::product(&sample::vector(&mut rng, g), &sample::vector(&mut rng, g))
                + &Sym2::product(&sample::vector(&mut rng, g), &sample::vector(&mut rng, g));
            let m = GradedH3Element::new(sample::rational(&mut rng), sym, sample::primitive(&mut rng, &s)).unwrap();
            let twice = act(&t1, &act(&t2, &m, &params).unwrap(), &params).unwrap();
            let once = act(&(&t1 + &t2), &m, &params).unwrap();
            let zero = act(&Multivector::zero(g, 3), &m, &params).unwrap();
            let ok = twice == once && once.top() == m.top() && twice.top() == m.top() && zero == m;
            failures += usize::from(!ok);
        }
    }
    outcome(
        failures == 0,
        format!("60 random triples (t1, t2, m) at g=3,4, {failures} failures"),
    )
}

fn cli_and_round_trip() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_torelli");
    let runs: [&[&str]; 4] = [
        &["act", "--fixture", "paper-figure-1", "--format", "json"],
        &["act", "--fixture", "genus-4-bounding-pair"],
        &["audit", "--genus", "4", "--format", "json"],
        &["invariants", "--genus", "3", "--seed", "11", "--format", "json"],
    ];
    let mut deterministic = true;
    for args in runs {
        let outputs: Vec<_> = (0..3).map(|_| Command::new(bin).args(args).output().unwrap()).collect();
        deterministic &= outputs
            .iter()
            .all(|o| o.status.success() && o.stdout == outputs[0].stdout);
    }

    let mut rng = sample::rng(SEED ^ 10);
    let mut round_trips = 0;
    for i in 0..200 {
        let g = rng.gen_range(2..=4);
        let ok = match i % 4 {
            0 => {
                let v = sample::vector(&mut rng, g);
                parse_vector(g, &v.to_string()).unwrap() == v
            }
            1 => {
                let k = rng.gen_range(1..=MAX_DEGREE);
                let x = sample::multivector(&mut rng, g, k);
                parse_multivector(g, &x.to_string(), Some(k)).unwrap() == x
            }
            2 => {
                let x = sample::primitive(&mut rng, &SymplecticSpace::new(g).unwrap());
                parse_multivector(g, &x.to_string(), Some(3)).unwrap() == x
            }
            _ => {
                let x = &Sym2::product(&sample::vector(&mut rng, g), &sample::vector(&mut rng, g))
                    + &Sym2::product(&sample::vector(&mut rng, g), &sample::vector(&mut rng, g));
                parse_sym2(g, &x.to_string()).unwrap() == x
            }
        };
        round_trips += usize::from(ok);
    }
    outcome(
        deterministic && round_trips == 200,
        format!(
            "4 CLI reports byte-identical over 3 runs: {deterministic}; parse(render(x)) = x for {round_trips}/200"
        ),
    )
}

#[test]
fn acceptance() {
    let one = Some(Duration::from_secs(1));
    let criteria: Vec<(&str, Outcome)> = vec![
        ("central computation", timed(one, central_computation)),
        ("nontriviality certificate", timed(one, nontriviality)),
        ("johnson identity", timed(None, johnson_identity)),
        ("splitting", timed(None, splitting)),
        ("dimension audit", timed(Some(Duration::from_secs(10)), dimension_audit)),
        ("equivariance", timed(None, equivariance)),
        ("omega3 rank", timed(None, omega3_rank)),
        ("torelli trivial on V", timed(None, torelli_trivial_on_v)),
        ("unipotency", timed(None, unipotency)),
        ("cli determinism and round trip", timed(None, cli_and_round_trip)),
    ];
    for (i, (name, o)) in criteria.iter().enumerate() {
        println!(
            "{} criterion {}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    let failed: Vec<_> = criteria.iter().filter(|(_, o)| !o.pass).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

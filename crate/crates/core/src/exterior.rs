//! The symplectic space `V` and sparse exterior powers `∧¹V, ∧²V, ∧³V`.
//!
//! Coordinates use the standard symplectic basis in the fixed order
//! `a1, …, ag, b1, …, bg`: slot `i < g` holds `a(i+1)` and slot `g + i`
//! holds `b(i+1)`. The only nonzero basis pairings are `ai·bi = 1` and
//! `bi·ai = -1`.
//!
//! Multivectors are stored in antisymmetric normal form: strictly increasing
//! index tuples with the sign absorbed into the coefficient and no stored
//! zeros, so structural equality is mathematical equality.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::linalg::{Echelon, LinearMap};
use crate::{Error, Rational, Result};

pub const MAX_DEGREE: usize = 3;

/// Intersection number of two standard basis vectors of the genus-`genus` space.
pub fn basis_pairing(genus: usize, i: usize, j: usize) -> i64 {
    if i < genus && j == i + genus {
        1
    } else if i >= genus && i - genus == j {
        -1
    } else {
        0
    }
}

/// Label of basis slot `idx`: `a1…ag` then `b1…bg`.
pub fn basis_label(genus: usize, idx: usize) -> String {
    if idx < genus {
        format!("a{}", idx + 1)
    } else {
        format!("b{}", idx - genus + 1)
    }
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` when an index repeats (the wedge vanishes).
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// The rational symplectic vector space `H_1` of a closed surface of genus `g ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymplecticSpace {
    genus: usize,
}

impl SymplecticSpace {
    pub fn new(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall(genus, 2));
        }
        Ok(SymplecticSpace { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    /// Basis vector `a_i`, 1-based.
    pub fn a(&self, i: usize) -> Vector {
        assert!(1 <= i && i <= self.genus, "a{i} out of range");
        Vector::basis(self.genus, i - 1)
    }

    /// Basis vector `b_i`, 1-based.
    pub fn b(&self, i: usize) -> Vector {
        assert!(1 <= i && i <= self.genus, "b{i} out of range");
        Vector::basis(self.genus, self.genus + i - 1)
    }

    pub fn zero_vector(&self) -> Vector {
        Vector::zero(self.genus)
    }

    /// The intersection matrix `J` with `J[i][j] = e_i · e_j`.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| basis_pairing(self.genus, i, j)).collect())
            .collect()
    }

    /// `uᵀ J v`.
    pub fn intersection(&self, u: &Vector, v: &Vector) -> Result<Rational> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        Ok(u.dot(v))
    }

    /// `δ = Σ a_i ∧ b_i`, the bivector of the intersection pairing.
    pub fn delta(&self) -> Multivector {
        let g = self.genus;
        Multivector::from_terms(g, 2, (0..g).map(|i| (vec![i, g + i], Rational::one())))
            .expect("delta terms are well formed")
    }

    /// The contraction `∧³V → V`, `u∧v∧w ↦ (u·v)w + (v·w)u + (w·u)v`.
    pub fn contraction3(&self, x: &Multivector) -> Result<Vector> {
        self.check_multivector(x, 3)?;
        let g = self.genus;
        let mut coords = vec![Rational::zero(); self.dim()];
        for (blade, c) in x.terms() {
            for k in 0..3 {
                let (p, q, r) = (blade[k], blade[(k + 1) % 3], blade[(k + 2) % 3]);
                let s = basis_pairing(g, p, q);
                if s != 0 {
                    coords[r] += c * Rational::from_integer(s.into());
                }
            }
        }
        Ok(Vector { coords })
    }

    /// `w = contraction3(x) / (g - 1)`, the unique vector with
    /// `x - δ∧w ∈ ∧³ₒV`.
    pub fn delta_component(&self, x: &Multivector) -> Result<Vector> {
        let scale = Rational::new(1.into(), ((self.genus - 1) as i64).into());
        Ok(self.contraction3(x)?.scale(&scale))
    }

    /// Projection onto `∧³ₒV` along `δ∧V`: `x - δ∧contraction3(x)/(g-1)`.
    ///
    /// The constant comes from `contraction3(δ∧v) = (g-1)v`.
    pub fn project_primitive(&self, x: &Multivector) -> Result<Multivector> {
        let w = self.delta_component(x)?;
        let dw = self.delta().wedge(&Multivector::from_vector(&w))?;
        Ok(x - &dw)
    }

    pub fn is_primitive(&self, x: &Multivector) -> Result<bool> {
        Ok(self.contraction3(x)?.is_zero())
    }

    /// Strictly increasing `k`-tuples of basis slots, lexicographic.
    pub fn basis_blades(&self, k: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.dim(), k, 0, &mut Vec::with_capacity(k), &mut out);
        out
    }

    /// `C(2g, 3) - 2g`, the dimension of `∧³ₒV` from the surjectivity of the
    /// contraction.
    pub fn expected_primitive_dim(&self) -> usize {
        binomial(self.dim(), 3) - self.dim()
    }

    /// Dimension of `∧³ₒV` computed twice: as the rank of the projector
    /// image of the basis, and as the rank of the span of wedges of pairwise
    /// isotropic triples drawn from the basis and the sums and differences
    /// of two basis vectors.
    pub fn primitive_rank(&self) -> PrimitiveRank {
        let mut image = Echelon::new(binomial(self.dim(), 3));
        for blade in self.basis_blades(3) {
            let x = Multivector::basis(self.genus, blade);
            let p = self.project_primitive(&x).expect("degree 3");
            image.insert(p.coordinates());
        }

        let candidates = self.isotropic_candidates();
        let mut span = Echelon::new(binomial(self.dim(), 3));
        let n = candidates.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if !candidates[i].dot(&candidates[j]).is_zero() {
                    continue;
                }
                for k in (j + 1)..n {
                    if !candidates[i].dot(&candidates[k]).is_zero() || !candidates[j].dot(&candidates[k]).is_zero() {
                        continue;
                    }
                    let w = Multivector::wedge3(&candidates[i], &candidates[j], &candidates[k]);
                    if !w.is_zero() {
                        span.insert(w.coordinates());
                    }
                }
            }
        }

        PrimitiveRank {
            genus: self.genus,
            projector_image: image.rank(),
            isotropic_span: span.rank(),
            expected: self.expected_primitive_dim(),
        }
    }

    fn isotropic_candidates(&self) -> Vec<Vector> {
        let g = self.genus;
        let n = self.dim();
        let mut out: Vec<Vector> = (0..n).map(|i| Vector::basis(g, i)).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                for sign in [1i64, -1] {
                    let mut v = Vector::basis(g, i);
                    v.coords[j] = Rational::from_integer(sign.into());
                    out.push(v);
                }
            }
        }
        out
    }

    pub(crate) fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_multivector(&self, x: &Multivector, degree: usize) -> Result<()> {
        if x.genus() != self.genus {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: 2 * x.genus(),
            });
        }
        if x.degree() != degree {
            return Err(Error::WrongDegree {
                expected: degree,
                found: x.degree(),
            });
        }
        Ok(())
    }
}

/// Result of [`SymplecticSpace::primitive_rank`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimitiveRank {
    pub genus: usize,
    pub projector_image: usize,
    pub isotropic_span: usize,
    pub expected: usize,
}

impl PrimitiveRank {
    pub fn agrees(&self) -> bool {
        self.projector_image == self.isotropic_span && self.projector_image == self.expected
    }
}

/// An element of `V` in standard coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "a vector needs an even, positive number of coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Vector { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(genus: usize) -> Self {
        Vector {
            coords: vec![Rational::zero(); 2 * genus],
        }
    }

    pub fn basis(genus: usize, idx: usize) -> Self {
        let mut v = Self::zero(genus);
        v.coords[idx] = Rational::one();
        v
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Intersection number `self · other`. Panics on a dimension mismatch;
    /// use [`SymplecticSpace::intersection`] for a checked version.
    pub fn dot(&self, other: &Vector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let g = self.genus();
        let mut acc = Rational::zero();
        for i in 0..g {
            let (ai, bi) = (&self.coords[i], &self.coords[g + i]);
            let (aj, bj) = (&other.coords[i], &other.coords[g + i]);
            if !(ai.is_zero() || bj.is_zero()) {
                acc += ai * bj;
            }
            if !(bi.is_zero() || aj.is_zero()) {
                acc -= bi * aj;
            }
        }
        acc
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Vector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Vector {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

/// A sparse element of `∧ᵏV`, `1 ≤ k ≤ 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    genus: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Multivector {
    pub fn zero(genus: usize, degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree), "degree {degree} unsupported");
        Multivector {
            genus,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single basis blade with coefficient one. `blade` may be unsorted;
    /// repeated indices give zero.
    pub fn basis(genus: usize, blade: Vec<usize>) -> Self {
        let degree = blade.len();
        Self::from_terms(genus, degree, [(blade, Rational::one())]).expect("valid basis blade")
    }

    /// Builds a multivector from arbitrary index tuples, normalizing order
    /// and sign, merging duplicates and dropping zeros.
    pub fn from_terms<I>(genus: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOverflow { left: degree, right: 0 });
        }
        let mut out = Self::zero(genus, degree);
        for (mut blade, c) in terms {
            if blade.len() != degree {
                return Err(Error::WrongDegree {
                    expected: degree,
                    found: blade.len(),
                });
            }
            if let Some(&bad) = blade.iter().find(|&&i| i >= 2 * genus) {
                return Err(Error::DimensionMismatch {
                    expected: 2 * genus,
                    found: bad + 1,
                });
            }
            if let Some(sign) = sort_with_sign(&mut blade) {
                let c = if sign < 0 { -c } else { c };
                out.add_term(blade, c);
            }
        }
        Ok(out)
    }

    /// Dense coordinates in the lexicographic basis of `∧ᵏV`.
    pub fn from_coordinates(genus: usize, degree: usize, coords: &[Rational]) -> Result<Self> {
        let space = SymplecticSpace { genus };
        let blades = space.basis_blades(degree);
        if coords.len() != blades.len() {
            return Err(Error::DimensionMismatch {
                expected: blades.len(),
                found: coords.len(),
            });
        }
        Self::from_terms(genus, degree, blades.into_iter().zip(coords.iter().cloned()))
    }

    pub fn from_vector(v: &Vector) -> Self {
        let terms = v
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![i], c.clone()))
            .collect();
        Multivector {
            genus: v.genus(),
            degree: 1,
            terms,
        }
    }

    pub fn to_vector(&self) -> Result<Vector> {
        if self.degree != 1 {
            return Err(Error::WrongDegree {
                expected: 1,
                found: self.degree,
            });
        }
        let mut v = Vector::zero(self.genus);
        for (blade, c) in &self.terms {
            v.coords[blade[0]] = c.clone();
        }
        Ok(v)
    }

    /// `u ∧ v ∧ w` for three vectors of the same space.
    pub fn wedge3(u: &Vector, v: &Vector, w: &Vector) -> Self {
        let (u, v, w) = (Self::from_vector(u), Self::from_vector(v), Self::from_vector(w));
        u.wedge(&v).and_then(|uv| uv.wedge(&w)).expect("degree 3")
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic blade order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(b, c)| (b.as_slice(), c))
    }

    pub fn coefficient(&self, blade: &[usize]) -> Rational {
        let mut b = blade.to_vec();
        match sort_with_sign(&mut b) {
            None => Rational::zero(),
            Some(sign) => match self.terms.get(&b) {
                Some(c) if sign < 0 => -c,
                Some(c) => c.clone(),
                None => Rational::zero(),
            },
        }
    }

    /// Dense coordinates over the lexicographic basis, as a sparse column map.
    pub(crate) fn coordinates(&self) -> BTreeMap<usize, Rational> {
        let index = blade_index_map(self.genus, self.degree);
        self.terms.iter().map(|(b, c)| (index[b], c.clone())).collect()
    }

    pub fn scale(&self, s: &Rational) -> Multivector {
        if s.is_zero() {
            return Self::zero(self.genus, self.degree);
        }
        Multivector {
            genus: self.genus,
            degree: self.degree,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * s)).collect(),
        }
    }

    /// Exterior product; graded-commutative, `x∧y = (-1)^{jk} y∧x`.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        if self.genus != other.genus {
            return Err(Error::DimensionMismatch {
                expected: 2 * self.genus,
                found: 2 * other.genus,
            });
        }
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = Self::zero(self.genus, degree);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let mut blade: Vec<usize> = x.iter().chain(y).copied().collect();
                if let Some(sign) = sort_with_sign(&mut blade) {
                    let c = cx * cy;
                    out.add_term(blade, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Pushes forward along a linear map, `v1∧…∧vk ↦ Lv1∧…∧Lvk`.
    pub fn transform(&self, map: &LinearMap) -> Multivector {
        assert_eq!(map.dim(), 2 * self.genus, "dimension mismatch");
        let mut out = Self::zero(self.genus, self.degree);
        for (blade, c) in &self.terms {
            let mut acc = Self::from_vector(map.image(blade[0]));
            for &i in &blade[1..] {
                acc = acc.wedge(&Self::from_vector(map.image(i))).expect("same degree");
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    fn add_term(&mut self, blade: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Multivector) {
        assert!(
            self.genus == other.genus && self.degree == other.degree,
            "incompatible multivectors: genus {} degree {} vs genus {} degree {}",
            self.genus,
            self.degree,
            other.genus,
            other.degree
        );
    }
}

fn blade_index_map(genus: usize, degree: usize) -> BTreeMap<Vec<usize>, usize> {
    SymplecticSpace { genus }
        .basis_blades(degree)
        .into_iter()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect()
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        self.assert_compatible(rhs);
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            genus: self.genus,
            degree: self.degree,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Multivector> for &Rational {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

/// A sparse element of `Sym²V`, keyed by unordered index pairs `(i, j)`, `i ≤ j`.
///
/// The key `(i, j)` stands for the commutative monomial `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sym2 {
    genus: usize,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Sym2 {
    pub fn zero(genus: usize) -> Self {
        Sym2 {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(genus: usize, i: usize, j: usize) -> Self {
        let mut s = Self::zero(genus);
        s.add_term(i, j, Rational::one());
        s
    }

    pub fn from_terms<I>(genus: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Rational)>,
    {
        let mut s = Self::zero(genus);
        for ((i, j), c) in terms {
            let bad = i.max(j);
            if bad >= 2 * genus {
                return Err(Error::DimensionMismatch {
                    expected: 2 * genus,
                    found: bad + 1,
                });
            }
            s.add_term(i, j, c);
        }
        Ok(s)
    }

    /// The symmetric product `uv`.
    pub fn product(u: &Vector, v: &Vector) -> Self {
        assert_eq!(u.dim(), v.dim(), "dimension mismatch");
        let mut s = Self::zero(u.genus());
        for (i, ci) in u.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, cj) in v.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                s.add_term(i, j, ci * cj);
            }
        }
        s
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Rational {
        self.terms
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> Sym2 {
        if s.is_zero() {
            return Self::zero(self.genus);
        }
        Sym2 {
            genus: self.genus,
            terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    pub fn transform(&self, map: &LinearMap) -> Sym2 {
        assert_eq!(map.dim(), 2 * self.genus, "dimension mismatch");
        let mut out = Self::zero(self.genus);
        for (&(i, j), c) in &self.terms {
            out += &Self::product(map.image(i), map.image(j)).scale(c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, i: usize, j: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (i.min(j), i.max(j));
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl AddAssign<&Sym2> for Sym2 {
    fn add_assign(&mut self, rhs: &Sym2) {
        assert_eq!(self.genus, rhs.genus, "genus mismatch");
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Add for &Sym2 {
    type Output = Sym2;
    fn add(self, rhs: &Sym2) -> Sym2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Sym2 {
    type Output = Sym2;
    fn sub(self, rhs: &Sym2) -> Sym2 {
        self + &(-rhs)
    }
}

impl Neg for &Sym2 {
    type Output = Sym2;
    fn neg(self) -> Sym2 {
        Sym2 {
            genus: self.genus,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

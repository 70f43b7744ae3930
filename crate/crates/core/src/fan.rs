//! Rational simplicial cones and fans.
//!
//! Fans are stored face-closed with rays in a canonical order (lexicographic
//! by generator), so per-cone quantifiers are plain loops and serialized
//! output is deterministic. Cones that are not full-dimensional are always
//! handled by restriction to the saturated span lattice.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fourier_motzkin;
use crate::lattice::{
    in_basis_coordinates, lattice_index, primitive_vector, saturate_span, smith_normal_form,
    IntMatrix, IntVector,
};
use crate::ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyhedralError {
    #[error("dual of zero cone undefined here")]
    ZeroCone,
    #[error("non-simplicial input")]
    NonSimplicial,
    #[error("unknown ray `{0}`")]
    UnknownRay(String),
    #[error("rays {0:?} do not form a cone of the fan")]
    NotACone(Vec<String>),
    #[error("invalid fan: {0}")]
    Invalid(ValidityReport),
}

/// A ray of a fan: a primitive lattice generator with a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub name: String,
    pub generator: IntVector,
}

/// A simplicial cone given by the sorted indices of its rays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialCone {
    ray_ids: Vec<usize>,
}

impl SimplicialCone {
    fn new(mut ray_ids: Vec<usize>) -> Self {
        ray_ids.sort_unstable();
        ray_ids.dedup();
        SimplicialCone { ray_ids }
    }

    pub fn ray_ids(&self) -> &[usize] {
        &self.ray_ids
    }

    pub fn dim(&self) -> usize {
        self.ray_ids.len()
    }

    pub fn is_zero(&self) -> bool {
        self.ray_ids.is_empty()
    }

    pub fn is_face_of(&self, other: &SimplicialCone) -> bool {
        self.ray_ids.iter().all(|i| other.ray_ids.contains(i))
    }
}

/// A single violation found while validating fan data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanIssue {
    WrongRankRay { ray: String },
    ZeroRay { ray: String },
    NonPrimitiveRay { ray: String },
    DuplicateRayName { name: String },
    DuplicateRayGenerator { first: String, second: String },
    UnknownRayInCone { cone: String, ray: String },
    DependentCone { cone: String },
    IntersectionNotFace { first: String, second: String },
}

impl fmt::Display for FanIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanIssue::WrongRankRay { ray } => {
                write!(f, "ray {}: generator length differs from lattice rank", ray)
            }
            FanIssue::ZeroRay { ray } => write!(f, "ray {}: zero generator", ray),
            FanIssue::NonPrimitiveRay { ray } => {
                write!(f, "ray {}: generator is not primitive", ray)
            }
            FanIssue::DuplicateRayName { name } => write!(f, "duplicate ray name {}", name),
            FanIssue::DuplicateRayGenerator { first, second } => {
                write!(f, "rays {} and {} share a generator", first, second)
            }
            FanIssue::UnknownRayInCone { cone, ray } => {
                write!(f, "cone {}: unknown ray {}", cone, ray)
            }
            FanIssue::DependentCone { cone } => {
                write!(f, "cone {}: generators are linearly dependent", cone)
            }
            FanIssue::IntersectionNotFace { first, second } => write!(
                f,
                "cones {} and {} do not intersect in a common face",
                first, second
            ),
        }
    }
}

/// Outcome of `validate_fan`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub issues: Vec<FanIssue>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "valid");
        }
        let lines: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", lines.join("; "))
    }
}

/// Raw fan data as read from a document, before canonicalization.
#[derive(Clone, Debug)]
pub struct FanData {
    pub lattice_rank: usize,
    pub rays: Vec<Ray>,
    /// Cones as lists of ray names; faces are closed automatically.
    pub cones: Vec<Vec<String>>,
}

/// A finite simplicial fan, face-closed, with canonically ordered rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    lattice_rank: usize,
    rays: Vec<Ray>,
    cones: Vec<SimplicialCone>,
}

impl Fan {
    /// Builds a fan from maximal (or arbitrary) cones, closing faces and
    /// validating the fan axioms.
    pub fn from_maximal(
        lattice_rank: usize,
        rays: Vec<Ray>,
        cones: Vec<Vec<String>>,
    ) -> Result<Fan, PolyhedralError> {
        let data = FanData {
            lattice_rank,
            rays,
            cones,
        };
        let report = validate_fan(&data);
        if !report.is_valid() {
            return Err(PolyhedralError::Invalid(report));
        }
        Ok(Self::from_valid_data(data))
    }

    fn from_valid_data(data: FanData) -> Fan {
        let mut rays = data.rays;
        rays.sort_by(|a, b| a.generator.cmp(&b.generator));
        let index_of = |name: &str| rays.iter().position(|r| r.name == name).unwrap();
        let mut cone_set: BTreeSet<Vec<usize>> = BTreeSet::new();
        cone_set.insert(Vec::new());
        for cone in &data.cones {
            let ids: Vec<usize> = {
                let mut v: Vec<usize> = cone.iter().map(|n| index_of(n)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            for mask in 0usize..(1usize << ids.len()) {
                let face: Vec<usize> = ids
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1usize << k) != 0)
                    .map(|(_, &id)| id)
                    .collect();
                cone_set.insert(face);
            }
        }
        let mut cones: Vec<SimplicialCone> =
            cone_set.into_iter().map(SimplicialCone::new).collect();
        cones.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.ray_ids.cmp(&b.ray_ids))
        });
        Fan {
            lattice_rank: data.lattice_rank,
            rays,
            cones,
        }
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> &[SimplicialCone] {
        &self.cones
    }

    pub fn ray(&self, id: usize) -> &Ray {
        &self.rays[id]
    }

    pub fn ray_index(&self, name: &str) -> Option<usize> {
        self.rays.iter().position(|r| r.name == name)
    }

    pub fn cone_generators(&self, cone: &SimplicialCone) -> Vec<IntVector> {
        cone.ray_ids
            .iter()
            .map(|&i| self.rays[i].generator.clone())
            .collect()
    }

    pub fn cone_ray_names(&self, cone: &SimplicialCone) -> Vec<String> {
        cone.ray_ids
            .iter()
            .map(|&i| self.rays[i].name.clone())
            .collect()
    }

    /// Looks up the cone spanned by the named rays, if it is in the fan.
    pub fn cone_by_ray_names(&self, names: &[String]) -> Result<&SimplicialCone, PolyhedralError> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            match self.ray_index(n) {
                Some(i) => ids.push(i),
                None => return Err(PolyhedralError::UnknownRay(n.clone())),
            }
        }
        ids.sort_unstable();
        ids.dedup();
        self.cones
            .iter()
            .find(|c| c.ray_ids == ids)
            .ok_or_else(|| PolyhedralError::NotACone(names.to_vec()))
    }

    pub fn maximal_cones(&self) -> Vec<&SimplicialCone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.dim() > c.dim() && c.is_face_of(d))
            })
            .collect()
    }

    /// Barycentric coordinates of a lattice point on a simplicial cone:
    /// `point = sum q_i * generator_i` with all `q_i >= 0`, or `None` when
    /// the point lies outside the cone (or outside its span).
    pub fn cone_coordinates(
        &self,
        cone: &SimplicialCone,
        point: &IntVector,
    ) -> Option<Vec<BigRational>> {
        if cone.is_zero() {
            return if point.is_zero() {
                Some(Vec::new())
            } else {
                None
            };
        }
        let gens = self.cone_generators(cone);
        let a: Vec<Vec<BigRational>> = (0..self.lattice_rank)
            .map(|i| {
                gens.iter()
                    .map(|g| BigRational::from_integer(g.get(i).clone()))
                    .collect()
            })
            .collect();
        let q = ratio::solve(&a, &point.to_rational())?;
        if q.iter().any(|x| x < &BigRational::zero()) {
            return None;
        }
        Some(q)
    }

    /// The unique cone containing the point in its relative interior, or
    /// `None` when the point is outside the support.
    pub fn minimal_containing_cone(&self, point: &IntVector) -> Option<&SimplicialCone> {
        self.cones.iter().find(|c| {
            self.cone_coordinates(c, point)
                .is_some_and(|q| q.iter().all(|x| x > &BigRational::zero()))
        })
    }

    pub fn support_contains(&self, point: &IntVector) -> bool {
        self.minimal_containing_cone(point).is_some()
    }

    /// Index of the subgroup spanned by the primitive ray generators inside
    /// the saturated span lattice (1 for the zero cone).
    pub fn multiplicity(&self, cone: &SimplicialCone) -> BigInt {
        if cone.is_zero() {
            return BigInt::one();
        }
        lattice_index(&self.cone_generators(cone)).expect("cone generators are independent")
    }

    /// Primitive dual covectors of a nonzero cone, computed in the dual of
    /// the saturated span lattice and paired with the cone's rays: the
    /// covector for ray `rho` pairs positively with `zeta_rho` and to zero
    /// with every other ray of the cone.
    pub fn dual_cone_basis(
        &self,
        cone: &SimplicialCone,
    ) -> Result<Vec<IntVector>, PolyhedralError> {
        if cone.is_zero() {
            return Err(PolyhedralError::ZeroCone);
        }
        let span = SpanLattice::new(&self.cone_generators(cone), self.lattice_rank);
        let gens = span.generators();
        Ok(dual_basis_in_span(gens))
    }
}

/// Dual basis covectors for a full-dimensional independent family, in the
/// coordinates of their own space.
fn dual_basis_in_span(gens: &[IntVector]) -> Vec<IntVector> {
    let k = gens.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let covector = if k == 1 {
            IntVector::from_i64(&[1])
        } else {
            let rows: Vec<Vec<BigRational>> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.to_rational())
                .collect();
            let kernel = ratio::kernel_basis(&rows);
            assert_eq!(kernel.len(), 1, "simplicial cone has one-dimensional duals");
            rational_to_primitive(&kernel[0])
        };
        let sign = covector.dot(&gens[i]);
        assert!(!sign.is_zero(), "dual covector degenerate");
        out.push(if sign.is_negative() {
            covector.scale(&BigInt::from(-1))
        } else {
            covector
        });
    }
    out
}

/// Clears denominators and divides by the content.
fn rational_to_primitive(v: &[BigRational]) -> IntVector {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive_vector(&IntVector::new(ints)).expect("kernel vector is nonzero")
}

/// The saturated span lattice of a family of lattice vectors, with
/// conversions between ambient and span coordinates.
pub(crate) struct SpanLattice {
    basis: Vec<IntVector>,
    generators: Vec<IntVector>,
}

impl SpanLattice {
    pub fn new(vectors: &[IntVector], ambient_rank: usize) -> Self {
        let basis = saturate_span(vectors, ambient_rank);
        let generators = vectors
            .iter()
            .map(|v| {
                in_basis_coordinates(&basis, v)
                    .expect("vector lies in the saturation of its own span")
            })
            .collect();
        SpanLattice { basis, generators }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The input vectors in span coordinates.
    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    pub fn to_span(&self, v: &IntVector) -> Option<IntVector> {
        in_basis_coordinates(&self.basis, v)
    }

    pub fn from_span(&self, coords: &IntVector) -> IntVector {
        let ambient = self.basis.first().map_or(0, |b| b.dim());
        let mut out = IntVector::zeros(ambient);
        for (b, c) in self.basis.iter().zip(coords.entries()) {
            out = out.add(&b.scale(c));
        }
        out
    }
}

/// The unique minimal generating set of `cone ∩ lattice` for a simplicial
/// cone, computed in the saturated span lattice and returned in ambient
/// coordinates, sorted lexicographically.
pub fn hilbert_basis(generators: &[IntVector]) -> Result<Vec<IntVector>, PolyhedralError> {
    if generators.is_empty() {
        return Ok(Vec::new());
    }
    let ambient = generators[0].dim();
    let span = SpanLattice::new(generators, ambient);
    let k = span.dim();
    if k != generators.len() {
        return Err(PolyhedralError::NonSimplicial);
    }
    let gens = span.generators().to_vec();
    let g = IntMatrix::from_cols(k, &gens);
    let g_inv = ratio::invert(
        &(0..k)
            .map(|i| {
                (0..k)
                    .map(|j| BigRational::from_integer(g.at(i, j).clone()))
                    .collect()
            })
            .collect::<Vec<_>>(),
    )
    .expect("independent generators are invertible over Q");

    let in_cone = |x: &IntVector| -> bool {
        (0..k).all(|i| {
            let mut acc = BigRational::zero();
            for j in 0..k {
                acc += &g_inv[i][j] * BigRational::from_integer(x.get(j).clone());
            }
            acc >= BigRational::zero()
        })
    };

    // Lattice points of the half-open fundamental parallelepiped, found by
    // normalizing one representative per residue class of Z^k / g Z^k.
    let snf = smith_normal_form(&g);
    let u_inv = snf
        .u
        .inverse_unimodular()
        .expect("Smith transform is unimodular");
    let diag = snf.s.diagonal();
    let mut candidates: BTreeSet<IntVector> = BTreeSet::new();
    let mut residue = vec![BigInt::zero(); k];
    loop {
        let x0 = u_inv.mul_vec(&IntVector::new(residue.clone()));
        // Shift x0 into the parallelepiped: x = x0 - g * floor(g^{-1} x0).
        let mut shift = IntVector::zeros(k);
        for i in 0..k {
            let mut t = BigRational::zero();
            for j in 0..k {
                t += &g_inv[i][j] * BigRational::from_integer(x0.get(j).clone());
            }
            let f = t.floor().to_integer();
            shift = shift.add(&gens[i].scale(&f));
        }
        let x = x0.sub(&shift);
        if !x.is_zero() {
            candidates.insert(x);
        }
        // Advance the mixed-radix residue counter.
        let mut carry = true;
        for (r, s) in residue.iter_mut().zip(&diag) {
            if !carry {
                break;
            }
            *r += 1;
            if &*r < s {
                carry = false;
            } else {
                *r = BigInt::zero();
            }
        }
        if carry {
            break;
        }
    }
    for gvec in &gens {
        candidates.insert(gvec.clone());
    }

    let all: Vec<IntVector> = candidates.iter().cloned().collect();
    let mut basis: Vec<IntVector> = Vec::new();
    'cand: for x in &all {
        for y in &all {
            let z = x.sub(y);
            if z.is_zero() {
                continue;
            }
            if in_cone(&z) {
                continue 'cand; // x = y + z splits inside the monoid
            }
        }
        basis.push(span.from_span(x));
    }
    basis.sort();
    Ok(basis)
}

/// Whether `target` lies in the rational cone spanned by `generators`,
/// decided by Farkas duality through Fourier–Motzkin elimination.
pub fn in_rational_cone(generators: &[IntVector], target: &IntVector) -> bool {
    let weak: Vec<Vec<BigRational>> = generators.iter().map(|g| g.to_rational()).collect();
    let strict = vec![target
        .to_rational()
        .into_iter()
        .map(|x| -x)
        .collect::<Vec<_>>()];
    !fourier_motzkin::feasible(&[], &weak, &strict)
}

/// Exact halfspace description of the simplicial cone spanned by `gens`
/// inside `Q^rank`: a list of equalities cutting out the span and one
/// inequality per generator.
fn halfspaces(
    gens: &[IntVector],
    rank: usize,
) -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>) {
    if gens.is_empty() {
        let eqs = (0..rank)
            .map(|i| IntVector::standard_basis(rank, i).to_rational())
            .collect();
        return (eqs, Vec::new());
    }
    let rows: Vec<Vec<BigRational>> = gens.iter().map(|g| g.to_rational()).collect();
    let eqs = ratio::kernel_basis(&rows);
    let mut ineqs = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        let mut e = vec![BigRational::zero(); gens.len()];
        e[i] = BigRational::one();
        let w = ratio::solve(&rows, &e).expect("independent generators admit dual covectors");
        ineqs.push(w);
    }
    (eqs, ineqs)
}

/// Checks that two simplicial cones intersect exactly in the cone spanned by
/// their shared rays, by verifying every defining constraint of the shared
/// face on the halfspace description of the intersection.
fn intersection_is_common_face(fan_rank: usize, a: &[IntVector], b: &[IntVector]) -> bool {
    let shared: Vec<IntVector> = a.iter().filter(|g| b.contains(g)).cloned().collect();
    let (eq_a, in_a) = halfspaces(a, fan_rank);
    let (eq_b, in_b) = halfspaces(b, fan_rank);
    let mut eqs = eq_a;
    eqs.extend(eq_b);
    let mut weak = in_a;
    weak.extend(in_b);

    let (eq_g, in_g) = halfspaces(&shared, fan_rank);
    for e in &eq_g {
        let neg: Vec<BigRational> = e.iter().map(|x| -x.clone()).collect();
        if fourier_motzkin::feasible(&eqs, &weak, std::slice::from_ref(e))
            || fourier_motzkin::feasible(&eqs, &weak, &[neg])
        {
            return false;
        }
    }
    for w in &in_g {
        let neg: Vec<BigRational> = w.iter().map(|x| -x.clone()).collect();
        if fourier_motzkin::feasible(&eqs, &weak, &[neg]) {
            return false;
        }
    }
    true
}

/// Validates raw fan data: ray well-formedness, simpliciality of every cone,
/// and pairwise intersection-in-a-common-face via exact Fourier–Motzkin.
/// Face closure is by construction (cones are closed when the fan is built).
pub fn validate_fan(data: &FanData) -> ValidityReport {
    let mut issues = Vec::new();
    let rank = data.lattice_rank;

    for (i, ray) in data.rays.iter().enumerate() {
        if ray.generator.dim() != rank {
            issues.push(FanIssue::WrongRankRay {
                ray: ray.name.clone(),
            });
            continue;
        }
        if ray.generator.is_zero() {
            issues.push(FanIssue::ZeroRay {
                ray: ray.name.clone(),
            });
        } else if primitive_vector(&ray.generator).unwrap() != ray.generator {
            issues.push(FanIssue::NonPrimitiveRay {
                ray: ray.name.clone(),
            });
        }
        for other in &data.rays[..i] {
            if other.name == ray.name {
                issues.push(FanIssue::DuplicateRayName {
                    name: ray.name.clone(),
                });
            }
            if other.generator == ray.generator {
                issues.push(FanIssue::DuplicateRayGenerator {
                    first: other.name.clone(),
                    second: ray.name.clone(),
                });
            }
        }
    }
    if !issues.is_empty() {
        return ValidityReport { issues };
    }

    let cone_label = |names: &[String]| format!("[{}]", names.join(", "));
    let mut cone_gens: Vec<(Vec<String>, Vec<IntVector>)> = Vec::new();
    for cone in &data.cones {
        let mut names: Vec<String> = cone.clone();
        names.sort();
        names.dedup();
        let mut gens = Vec::new();
        let mut ok = true;
        for n in &names {
            match data.rays.iter().find(|r| &r.name == n) {
                Some(r) => gens.push(r.generator.clone()),
                None => {
                    issues.push(FanIssue::UnknownRayInCone {
                        cone: cone_label(&names),
                        ray: n.clone(),
                    });
                    ok = false;
                }
            }
        }
        if !ok {
            continue;
        }
        let rows: Vec<Vec<BigRational>> = gens.iter().map(|g| g.to_rational()).collect();
        if ratio::rank(&rows) != gens.len() {
            issues.push(FanIssue::DependentCone {
                cone: cone_label(&names),
            });
            continue;
        }
        cone_gens.push((names, gens));
    }
    if !issues.is_empty() {
        return ValidityReport { issues };
    }

    // Intersection checks on maximal cones; faces of simplicial cones are
    // coordinate subcones, so the maximal pairs decide the whole fan.
    let maximal: Vec<&(Vec<String>, Vec<IntVector>)> = cone_gens
        .iter()
        .filter(|(names, _)| {
            !cone_gens
                .iter()
                .any(|(other, _)| other.len() > names.len() && names.iter().all(|n| other.contains(n)))
        })
        .collect();
    for (i, (na, ga)) in maximal.iter().enumerate() {
        for (nb, gb) in maximal.iter().skip(i + 1) {
            let a_in_b = na.iter().all(|n| nb.contains(n));
            let b_in_a = nb.iter().all(|n| na.contains(n));
            if a_in_b || b_in_a {
                continue;
            }
            if !intersection_is_common_face(rank, ga, gb) {
                issues.push(FanIssue::IntersectionNotFace {
                    first: cone_label(na),
                    second: cone_label(nb),
                });
            }
        }
    }
    ValidityReport { issues }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(name: &str, gen: &[i64]) -> Ray {
        Ray {
            name: name.to_string(),
            generator: IntVector::from_i64(gen),
        }
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// The running example: the cone spanned by (1,0) and (1,2).
    fn wedge_fan() -> Fan {
        Fan::from_maximal(
            2,
            vec![ray("r1", &[1, 0]), ray("r2", &[1, 2])],
            vec![names(&["r1", "r2"])],
        )
        .unwrap()
    }

    #[test]
    fn face_closure_gives_four_cones() {
        let fan = wedge_fan();
        assert_eq!(fan.cones().len(), 4);
        assert_eq!(fan.maximal_cones().len(), 1);
    }

    #[test]
    fn cone_coordinates_examples() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let q = fan
            .cone_coordinates(top, &IntVector::from_i64(&[3, 2]))
            .unwrap();
        assert_eq!(q[0], BigRational::from_integer(BigInt::from(2)));
        assert_eq!(q[1], BigRational::from_integer(BigInt::from(1)));
        assert!(fan
            .cone_coordinates(top, &IntVector::from_i64(&[-1, 0]))
            .is_none());
        let origin = fan
            .cone_coordinates(top, &IntVector::from_i64(&[0, 0]))
            .unwrap();
        assert!(origin.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn minimal_containing_cone_examples() {
        let fan = wedge_fan();
        let on_ray = fan
            .minimal_containing_cone(&IntVector::from_i64(&[2, 0]))
            .unwrap();
        assert_eq!(fan.cone_ray_names(on_ray), vec!["r1"]);
        let interior = fan
            .minimal_containing_cone(&IntVector::from_i64(&[3, 2]))
            .unwrap();
        assert_eq!(interior.dim(), 2);
        assert!(fan
            .minimal_containing_cone(&IntVector::from_i64(&[0, -1]))
            .is_none());
        let origin = fan
            .minimal_containing_cone(&IntVector::from_i64(&[0, 0]))
            .unwrap();
        assert!(origin.is_zero());
    }

    #[test]
    fn dual_cone_basis_examples() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let duals = fan.dual_cone_basis(top).unwrap();
        assert_eq!(duals, vec![IntVector::from_i64(&[2, -1]), IntVector::from_i64(&[0, 1])]);

        let quadrant = Fan::from_maximal(
            2,
            vec![ray("e1", &[1, 0]), ray("e2", &[0, 1])],
            vec![names(&["e1", "e2"])],
        )
        .unwrap();
        let top = quadrant.cone_by_ray_names(&names(&["e1", "e2"])).unwrap();
        assert_eq!(
            quadrant.dual_cone_basis(top).unwrap(),
            vec![IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[0, 1])]
        );

        // One-dimensional cone in Z^2: computed in the span lattice.
        let line = Fan::from_maximal(2, vec![ray("r", &[1, 2])], vec![names(&["r"])]).unwrap();
        let c = line.cone_by_ray_names(&names(&["r"])).unwrap();
        assert_eq!(line.dual_cone_basis(c).unwrap(), vec![IntVector::from_i64(&[1])]);

        let zero = fan.cone_by_ray_names(&[]).unwrap();
        assert_eq!(fan.dual_cone_basis(zero), Err(PolyhedralError::ZeroCone));
    }

    #[test]
    fn dual_pairing_is_positive_diagonal() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let span = SpanLattice::new(&fan.cone_generators(top), 2);
        let duals = fan.dual_cone_basis(top).unwrap();
        for (i, m) in duals.iter().enumerate() {
            for (j, g) in span.generators().iter().enumerate() {
                let p = m.dot(g);
                if i == j {
                    assert!(p > BigInt::zero());
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn hilbert_basis_examples() {
        let hb = hilbert_basis(&[IntVector::from_i64(&[0, 1]), IntVector::from_i64(&[2, -1])])
            .unwrap();
        assert_eq!(
            hb,
            vec![
                IntVector::from_i64(&[0, 1]),
                IntVector::from_i64(&[1, 0]),
                IntVector::from_i64(&[2, -1])
            ]
        );
        let smooth =
            hilbert_basis(&[IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[0, 1])]).unwrap();
        assert_eq!(
            smooth,
            vec![IntVector::from_i64(&[0, 1]), IntVector::from_i64(&[1, 0])]
        );
        let wedge =
            hilbert_basis(&[IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[1, 2])]).unwrap();
        assert_eq!(
            wedge,
            vec![
                IntVector::from_i64(&[1, 0]),
                IntVector::from_i64(&[1, 1]),
                IntVector::from_i64(&[1, 2])
            ]
        );
        assert_eq!(
            hilbert_basis(&[IntVector::from_i64(&[1, 0]), IntVector::from_i64(&[2, 0])]),
            Err(PolyhedralError::NonSimplicial)
        );
        // Non-full-dimensional input reduces to the span lattice.
        let line = hilbert_basis(&[IntVector::from_i64(&[2, 4])]).unwrap();
        assert_eq!(line, vec![IntVector::from_i64(&[1, 2])]);
    }

    #[test]
    fn validity_examples() {
        // Extra ray through the interior of the top cone.
        let bad = Fan::from_maximal(
            2,
            vec![ray("r1", &[1, 0]), ray("r2", &[1, 2]), ray("mid", &[1, 1])],
            vec![names(&["r1", "r2"]), names(&["mid"])],
        );
        match bad {
            Err(PolyhedralError::Invalid(report)) => {
                assert!(report
                    .issues
                    .iter()
                    .any(|i| matches!(i, FanIssue::IntersectionNotFace { .. })));
            }
            other => panic!("expected invalid fan, got {:?}", other.map(|_| ())),
        }

        // Dependent generators.
        let dep = validate_fan(&FanData {
            lattice_rank: 2,
            rays: vec![ray("a", &[1, 0]), ray("b", &[-1, 0])],
            cones: vec![names(&["a", "b"])],
        });
        assert!(dep
            .issues
            .iter()
            .any(|i| matches!(i, FanIssue::DependentCone { .. })));

        // Non-primitive ray generator.
        let nonprim = validate_fan(&FanData {
            lattice_rank: 2,
            rays: vec![ray("a", &[2, 0])],
            cones: vec![names(&["a"])],
        });
        assert!(nonprim
            .issues
            .iter()
            .any(|i| matches!(i, FanIssue::NonPrimitiveRay { .. })));

        assert!(validate_fan(&FanData {
            lattice_rank: 2,
            rays: vec![ray("r1", &[1, 0]), ray("r2", &[1, 2])],
            cones: vec![names(&["r1", "r2"])],
        })
        .is_valid());
    }

    #[test]
    fn two_cones_sharing_a_ray_are_valid() {
        let fan = Fan::from_maximal(
            2,
            vec![ray("a", &[1, 0]), ray("b", &[0, 1]), ray("c", &[-1, 2])],
            vec![names(&["a", "b"]), names(&["b", "c"])],
        )
        .unwrap();
        assert_eq!(fan.maximal_cones().len(), 2);
    }

    #[test]
    fn rational_cone_membership() {
        let gens = [IntVector::from_i64(&[0, 2]), IntVector::from_i64(&[2, 0])];
        assert!(in_rational_cone(&gens, &IntVector::from_i64(&[1, 0])));
        assert!(in_rational_cone(&gens, &IntVector::from_i64(&[3, 5])));
        assert!(!in_rational_cone(&gens, &IntVector::from_i64(&[-1, 0])));
        let half = [IntVector::from_i64(&[1, 0])];
        assert!(!in_rational_cone(&half, &IntVector::from_i64(&[0, 1])));
    }

    #[test]
    fn multiplicity_of_wedge_is_two() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        assert_eq!(fan.multiplicity(top), BigInt::from(2));
        let zero = fan.cone_by_ray_names(&[]).unwrap();
        assert_eq!(fan.multiplicity(zero), BigInt::one());
    }
}

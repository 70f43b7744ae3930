//! Stacky fans and their category.
//!
//! A stacky fan is a simplicial fan together with a positive level per ray.
//! The levels determine the free-net completely: on a cone the net is the
//! free submonoid spanned by `level * generator` over the cone's rays, which
//! is close to the cone's lattice points. Morphisms are lattice maps that
//! send cones into cones and the free-net into the free-net; the latter is
//! checked on the net generators only, which suffices because each per-cone
//! net is freely generated and its image lands in a single target monoid.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fan::{Fan, PolyhedralError, SimplicialCone};
use crate::lattice::{IntMatrix, IntVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StackyError {
    #[error("ray `{0}` has no level")]
    MissingLevel(String),
    #[error("ray `{0}` has a non-positive level")]
    NonPositiveLevel(String),
    #[error("unknown ray `{0}`")]
    UnknownRay(String),
    #[error("matrix shape {rows}x{cols} does not map rank {src} into rank {tgt}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        src: usize,
        tgt: usize,
    },
    #[error("morphism rejected: {0}")]
    Rejected(RejectionWitness),
    #[error("middle stacky fans of the composition differ")]
    MiddleMismatch,
    #[error(transparent)]
    Polyhedral(#[from] PolyhedralError),
}

/// Why a candidate lattice map fails to be a morphism of stacky fans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectionWitness {
    /// No target cone contains the image of this source cone.
    ConeNotMapped { cone: Vec<String> },
    /// The image of this ray's net generator is not in the target free-net.
    FreenetViolation { ray: String, image: IntVector },
}

impl fmt::Display for RejectionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectionWitness::ConeNotMapped { cone } => {
                write!(f, "no target cone contains the image of [{}]", cone.join(", "))
            }
            RejectionWitness::FreenetViolation { ray, image } => write!(
                f,
                "image {} of the net generator on ray {} is outside the target free-net",
                image, ray
            ),
        }
    }
}

/// A simplicial fan with a positive level on every ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackyFan {
    fan: Fan,
    levels: Vec<BigInt>,
}

impl StackyFan {
    /// Pairs a fan with explicit levels, one per ray.
    pub fn new(fan: Fan, levels: &BTreeMap<String, BigInt>) -> Result<StackyFan, StackyError> {
        for name in levels.keys() {
            if fan.ray_index(name).is_none() {
                return Err(StackyError::UnknownRay(name.clone()));
            }
        }
        let mut by_ray = Vec::with_capacity(fan.rays().len());
        for ray in fan.rays() {
            let level = levels
                .get(&ray.name)
                .ok_or_else(|| StackyError::MissingLevel(ray.name.clone()))?;
            if level <= &BigInt::zero() {
                return Err(StackyError::NonPositiveLevel(ray.name.clone()));
            }
            by_ray.push(level.clone());
        }
        Ok(StackyFan {
            fan,
            levels: by_ray,
        })
    }

    /// The canonical free-net: level one on every ray.
    pub fn canonical(fan: Fan) -> StackyFan {
        let levels = vec![BigInt::one(); fan.rays().len()];
        StackyFan { fan, levels }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn lattice_rank(&self) -> usize {
        self.fan.lattice_rank()
    }

    pub fn level(&self, ray_id: usize) -> &BigInt {
        &self.levels[ray_id]
    }

    pub fn level_by_name(&self, name: &str) -> Result<&BigInt, StackyError> {
        let id = self
            .fan
            .ray_index(name)
            .ok_or_else(|| StackyError::UnknownRay(name.to_string()))?;
        Ok(&self.levels[id])
    }

    pub fn levels(&self) -> &[BigInt] {
        &self.levels
    }

    pub fn is_canonical(&self) -> bool {
        self.levels.iter().all(|l| l.is_one())
    }

    /// The free-net generator on a ray: `level * primitive_generator`.
    pub fn freenet_generator(&self, ray_id: usize) -> IntVector {
        self.fan.ray(ray_id).generator.scale(&self.levels[ray_id])
    }

    pub fn freenet_generator_by_name(&self, name: &str) -> Result<IntVector, StackyError> {
        let id = self
            .fan
            .ray_index(name)
            .ok_or_else(|| StackyError::UnknownRay(name.to_string()))?;
        Ok(self.freenet_generator(id))
    }

    /// Free-net membership with a certificate: on the minimal containing
    /// cone, every barycentric coordinate must be a nonnegative integer
    /// multiple of the ray's level.
    pub fn freenet_contains(&self, point: &IntVector) -> FreenetMembership {
        let Some(cone) = self.fan.minimal_containing_cone(point) else {
            return FreenetMembership::OutsideSupport;
        };
        let coords = self
            .fan
            .cone_coordinates(cone, point)
            .expect("minimal containing cone contains the point");
        let mut multiples = Vec::with_capacity(coords.len());
        for (&ray_id, q) in cone.ray_ids().iter().zip(&coords) {
            let level = &self.levels[ray_id];
            if !q.is_integer() {
                return FreenetMembership::NotMultiple {
                    ray: self.fan.ray(ray_id).name.clone(),
                };
            }
            let (m, rem) = q.to_integer().div_rem(level);
            if !rem.is_zero() {
                return FreenetMembership::NotMultiple {
                    ray: self.fan.ray(ray_id).name.clone(),
                };
            }
            multiples.push((self.fan.ray(ray_id).name.clone(), m));
        }
        FreenetMembership::Inside { multiples }
    }

    /// Strips the levels.
    pub fn forget_to_fan(&self) -> Fan {
        self.fan.clone()
    }
}

/// Result of a free-net membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenetMembership {
    /// The point is in the net; `multiples` lists, per ray of its minimal
    /// containing cone, the coefficient on the net generator.
    Inside { multiples: Vec<(String, BigInt)> },
    OutsideSupport,
    NotMultiple { ray: String },
}

impl FreenetMembership {
    pub fn is_inside(&self) -> bool {
        matches!(self, FreenetMembership::Inside { .. })
    }
}

/// A validated morphism of stacky fans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackyFanMorphism {
    source: StackyFan,
    target: StackyFan,
    matrix: IntMatrix,
    /// For each source cone index, the index of the minimal target cone
    /// containing its image.
    cone_witness: Vec<usize>,
}

impl StackyFanMorphism {
    pub fn source(&self) -> &StackyFan {
        &self.source
    }

    pub fn target(&self) -> &StackyFan {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Strips the morphism to its lattice map.
    pub fn forget_matrix(&self) -> IntMatrix {
        self.matrix.clone()
    }

    /// The minimal target cone containing the image of the given source cone.
    pub fn witness_cone(&self, source_cone_index: usize) -> &SimplicialCone {
        &self.target.fan.cones()[self.cone_witness[source_cone_index]]
    }
}

/// Checks that a lattice map defines a morphism of stacky fans: every source
/// cone maps into some target cone, and every free-net generator maps into
/// the target free-net. Returns the rejection witness otherwise.
pub fn validate_morphism(
    matrix: &IntMatrix,
    source: &StackyFan,
    target: &StackyFan,
) -> Result<StackyFanMorphism, StackyError> {
    if matrix.rows() != target.lattice_rank() || matrix.cols() != source.lattice_rank() {
        return Err(StackyError::ShapeMismatch {
            rows: matrix.rows(),
            cols: matrix.cols(),
            src: source.lattice_rank(),
            tgt: target.lattice_rank(),
        });
    }
    let mut witness = Vec::with_capacity(source.fan.cones().len());
    for cone in source.fan.cones() {
        let images: Vec<IntVector> = cone
            .ray_ids()
            .iter()
            .map(|&i| matrix.mul_vec(&source.fan.ray(i).generator))
            .collect();
        let mut containing: Vec<usize> = Vec::new();
        for (t, tcone) in target.fan.cones().iter().enumerate() {
            if images
                .iter()
                .all(|v| target.fan.cone_coordinates(tcone, v).is_some())
            {
                containing.push(t);
            }
        }
        if containing.is_empty() {
            return Err(StackyError::Rejected(RejectionWitness::ConeNotMapped {
                cone: source.fan.cone_ray_names(cone),
            }));
        }
        // Cones containing the image are closed under intersection, so the
        // minimal one is the cone on the shared rays.
        let mut shared: Vec<usize> = target.fan.cones()[containing[0]].ray_ids().to_vec();
        for &t in &containing[1..] {
            shared.retain(|id| target.fan.cones()[t].ray_ids().contains(id));
        }
        let minimal = target
            .fan
            .cones()
            .iter()
            .position(|c| c.ray_ids() == shared.as_slice())
            .expect("fans are face-closed");
        witness.push(minimal);
    }
    for (id, ray) in source.fan.rays().iter().enumerate() {
        let image = matrix.mul_vec(&source.freenet_generator(id));
        if !target.freenet_contains(&image).is_inside() {
            return Err(StackyError::Rejected(RejectionWitness::FreenetViolation {
                ray: ray.name.clone(),
                image,
            }));
        }
    }
    Ok(StackyFanMorphism {
        source: source.clone(),
        target: target.clone(),
        matrix: matrix.clone(),
        cone_witness: witness,
    })
}

/// The identity morphism on a stacky fan.
pub fn identity(sf: &StackyFan) -> StackyFanMorphism {
    validate_morphism(&IntMatrix::identity(sf.lattice_rank()), sf, sf)
        .expect("identity is always a morphism")
}

/// Composition `g ∘ f`; the middle stacky fans must agree exactly.
pub fn compose(
    g: &StackyFanMorphism,
    f: &StackyFanMorphism,
) -> Result<StackyFanMorphism, StackyError> {
    if f.target != g.source {
        return Err(StackyError::MiddleMismatch);
    }
    let matrix = g.matrix.mul(&f.matrix);
    Ok(validate_morphism(&matrix, &f.source, &g.target)
        .expect("composite of morphisms revalidates"))
}

/// Whether the morphism is invertible in the category of stacky fans: the
/// matrix is unimodular and the inverse validates in the other direction.
pub fn is_isomorphism(m: &StackyFanMorphism) -> bool {
    let Some(inverse) = m.matrix.inverse_unimodular() else {
        return false;
    };
    validate_morphism(&inverse, &m.target, &m.source).is_ok()
}

/// The unique stacky fan whose ray levels are the given stabilizer orders.
pub fn reconstruct_from_stabilizers(
    fan: Fan,
    orders: &BTreeMap<String, BigInt>,
) -> Result<StackyFan, StackyError> {
    StackyFan::new(fan, orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Ray;

    fn ray(name: &str, gen: &[i64]) -> Ray {
        Ray {
            name: name.to_string(),
            generator: IntVector::from_i64(gen),
        }
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn wedge_fan() -> Fan {
        Fan::from_maximal(
            2,
            vec![ray("r1", &[1, 0]), ray("r2", &[1, 2])],
            vec![names(&["r1", "r2"])],
        )
        .unwrap()
    }

    /// Levels 2 on the ray through (1,0) and 1 on the ray through (1,2).
    fn wedge_stacky() -> StackyFan {
        let mut levels = BTreeMap::new();
        levels.insert("r1".to_string(), BigInt::from(2));
        levels.insert("r2".to_string(), BigInt::from(1));
        StackyFan::new(wedge_fan(), &levels).unwrap()
    }

    #[test]
    fn levels_and_generators() {
        let sf = wedge_stacky();
        assert_eq!(sf.level_by_name("r1").unwrap(), &BigInt::from(2));
        assert_eq!(sf.level_by_name("r2").unwrap(), &BigInt::one());
        assert_eq!(
            sf.freenet_generator_by_name("r1").unwrap(),
            IntVector::from_i64(&[2, 0])
        );
        assert_eq!(
            sf.freenet_generator_by_name("r2").unwrap(),
            IntVector::from_i64(&[1, 2])
        );
        let canonical = StackyFan::canonical(wedge_fan());
        assert!(canonical.is_canonical());
        assert_eq!(
            canonical.freenet_generator_by_name("r1").unwrap(),
            IntVector::from_i64(&[1, 0])
        );
    }

    #[test]
    fn zero_level_is_rejected() {
        let mut levels = BTreeMap::new();
        levels.insert("r1".to_string(), BigInt::zero());
        levels.insert("r2".to_string(), BigInt::one());
        assert_eq!(
            StackyFan::new(wedge_fan(), &levels),
            Err(StackyError::NonPositiveLevel("r1".to_string()))
        );
        let mut missing = BTreeMap::new();
        missing.insert("r1".to_string(), BigInt::one());
        assert_eq!(
            StackyFan::new(wedge_fan(), &missing),
            Err(StackyError::MissingLevel("r2".to_string()))
        );
    }

    #[test]
    fn freenet_membership_examples() {
        let sf = wedge_stacky();
        match sf.freenet_contains(&IntVector::from_i64(&[2, 0])) {
            FreenetMembership::Inside { multiples } => {
                assert_eq!(multiples, vec![("r1".to_string(), BigInt::one())]);
            }
            other => panic!("expected membership, got {:?}", other),
        }
        assert_eq!(
            sf.freenet_contains(&IntVector::from_i64(&[1, 0])),
            FreenetMembership::NotMultiple {
                ray: "r1".to_string()
            }
        );
        match sf.freenet_contains(&IntVector::from_i64(&[3, 2])) {
            FreenetMembership::Inside { multiples } => {
                assert_eq!(
                    multiples,
                    vec![
                        ("r1".to_string(), BigInt::one()),
                        ("r2".to_string(), BigInt::one())
                    ]
                );
            }
            other => panic!("expected membership, got {:?}", other),
        }
        assert_eq!(
            sf.freenet_contains(&IntVector::from_i64(&[0, -1])),
            FreenetMembership::OutsideSupport
        );
        assert!(sf.freenet_contains(&IntVector::from_i64(&[0, 0])).is_inside());
    }

    #[test]
    fn morphism_validation_examples() {
        let stacky = wedge_stacky();
        let canonical = StackyFan::canonical(wedge_fan());
        let id = IntMatrix::identity(2);
        // Coarser net into finer net: fine.
        assert!(validate_morphism(&id, &stacky, &canonical).is_ok());
        // Reverse direction fails on the net generator of r1.
        match validate_morphism(&id, &canonical, &stacky) {
            Err(StackyError::Rejected(RejectionWitness::FreenetViolation { ray, image })) => {
                assert_eq!(ray, "r1");
                assert_eq!(image, IntVector::from_i64(&[1, 0]));
            }
            other => panic!("expected freenet violation, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn morphism_from_line() {
        let line = StackyFan::canonical(
            Fan::from_maximal(1, vec![ray("r", &[1])], vec![names(&["r"])]).unwrap(),
        );
        let stacky = wedge_stacky();
        let map = IntMatrix::from_i64_rows(&[&[1], &[2]]); // 1 -> (1,2)
        assert!(validate_morphism(&map, &line, &stacky).is_ok());

        // Raise the level on the target ray (1,2) to 2: now rejected.
        let mut levels = BTreeMap::new();
        levels.insert("r1".to_string(), BigInt::from(2));
        levels.insert("r2".to_string(), BigInt::from(2));
        let finer = StackyFan::new(wedge_fan(), &levels).unwrap();
        assert!(matches!(
            validate_morphism(&map, &line, &finer),
            Err(StackyError::Rejected(_))
        ));
    }

    #[test]
    fn cone_not_mapped_witness() {
        let line = StackyFan::canonical(
            Fan::from_maximal(1, vec![ray("r", &[1])], vec![names(&["r"])]).unwrap(),
        );
        let stacky = wedge_stacky();
        let map = IntMatrix::from_i64_rows(&[&[-1], &[0]]); // 1 -> (-1,0), outside
        match validate_morphism(&map, &line, &stacky) {
            Err(StackyError::Rejected(RejectionWitness::ConeNotMapped { cone })) => {
                assert_eq!(cone, vec!["r".to_string()]);
            }
            other => panic!("expected cone witness, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let stacky = wedge_stacky();
        let bad = IntMatrix::identity(3);
        assert!(matches!(
            validate_morphism(&bad, &stacky, &stacky),
            Err(StackyError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn category_laws() {
        let stacky = wedge_stacky();
        let canonical = StackyFan::canonical(wedge_fan());
        let f = validate_morphism(&IntMatrix::identity(2), &stacky, &canonical).unwrap();
        let id_src = identity(&stacky);
        let id_tgt = identity(&canonical);
        let left = compose(&id_tgt, &f).unwrap();
        let right = compose(&f, &id_src).unwrap();
        assert_eq!(left.matrix(), f.matrix());
        assert_eq!(right.matrix(), f.matrix());
        assert!(matches!(
            compose(&f, &f),
            Err(StackyError::MiddleMismatch)
        ));
        // Forget is functorial.
        assert_eq!(
            compose(&id_tgt, &f).unwrap().forget_matrix(),
            id_tgt.forget_matrix().mul(&f.forget_matrix())
        );
    }

    #[test]
    fn isomorphism_examples() {
        let stacky = wedge_stacky();
        assert!(is_isomorphism(&identity(&stacky)));
        let canonical = StackyFan::canonical(wedge_fan());
        let f = validate_morphism(&IntMatrix::identity(2), &stacky, &canonical).unwrap();
        assert!(!is_isomorphism(&f));

        // Swapping the basis vectors between relabeled copies of a fan.
        let a = StackyFan::canonical(
            Fan::from_maximal(
                2,
                vec![ray("x", &[1, 0]), ray("y", &[0, 1])],
                vec![names(&["x", "y"])],
            )
            .unwrap(),
        );
        let b = StackyFan::canonical(
            Fan::from_maximal(
                2,
                vec![ray("p", &[1, 0]), ray("q", &[0, 1])],
                vec![names(&["p", "q"])],
            )
            .unwrap(),
        );
        let swap = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let m = validate_morphism(&swap, &a, &b).unwrap();
        assert!(is_isomorphism(&m));
    }

    #[test]
    fn reconstruct_roundtrip() {
        let sf = wedge_stacky();
        let mut orders = BTreeMap::new();
        for (id, ray) in sf.fan().rays().iter().enumerate() {
            orders.insert(ray.name.clone(), sf.level(id).clone());
        }
        let rebuilt = reconstruct_from_stabilizers(sf.forget_to_fan(), &orders).unwrap();
        assert_eq!(rebuilt, sf);
        let all_one: BTreeMap<String, BigInt> = sf
            .fan()
            .rays()
            .iter()
            .map(|r| (r.name.clone(), BigInt::one()))
            .collect();
        let canon = reconstruct_from_stabilizers(wedge_fan(), &all_one).unwrap();
        assert!(canon.is_canonical());
    }
}

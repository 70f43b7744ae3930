//! Free resolutions of the cone monoids `dual(cone) ∩ M`.
//!
//! The free monoid `F` is never stored abstractly: it is pinned to
//! coordinates by the dual basis of the scaled ray generators, so the image
//! of a monoid generator `p` is the vector of pairings with
//! `level_rho * zeta_rho` over the cone's rays. With canonical levels this
//! is the minimal free resolution; general levels scale each row.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fan::{hilbert_basis, in_rational_cone, Fan, PolyhedralError, SimplicialCone, SpanLattice};
use crate::lattice::{IntMatrix, IntVector};
use crate::stacky::StackyFan;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("zero cone has no free resolution here")]
    ZeroCone,
    #[error("submonoid generators must have nonnegative coordinates")]
    NegativeCoordinate,
    #[error("no generator lifts the irreducible element on axis {axis}")]
    MissingAxisGenerator { axis: usize },
    #[error(transparent)]
    Polyhedral(#[from] PolyhedralError),
}

/// A monoid presented by its Hilbert basis together with its coordinates in
/// the free monoid pinned by the dual basis of the scaled ray generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    /// Ray indices of the cone, in cone order; row `i` of `image` pairs
    /// against ray `cone_rays[i]`.
    pub cone_rays: Vec<usize>,
    /// Hilbert basis of the dual-cone monoid, in dual span-lattice
    /// coordinates, sorted lexicographically.
    pub monoid_generators: Vec<IntVector>,
    /// Column `j` is the free-monoid coordinate vector of generator `j`.
    pub image: IntMatrix,
    /// Level per cone ray (all one for the minimal resolution).
    pub levels: Vec<BigInt>,
}

fn resolution_with_levels(
    fan: &Fan,
    cone: &SimplicialCone,
    levels: Vec<BigInt>,
) -> Result<FreeResolution, ResolutionError> {
    if cone.is_zero() {
        return Err(ResolutionError::ZeroCone);
    }
    let span = SpanLattice::new(&fan.cone_generators(cone), fan.lattice_rank());
    let gens = span.generators().to_vec();
    let duals = fan.dual_cone_basis(cone)?;
    let monoid_generators = hilbert_basis(&duals)?;
    let k = gens.len();
    let mut image = IntMatrix::zeros(k, monoid_generators.len());
    for (j, p) in monoid_generators.iter().enumerate() {
        for i in 0..k {
            let pairing = p.dot(&gens[i]) * &levels[i];
            debug_assert!(!pairing.is_negative(), "dual pairing must be nonnegative");
            image.set(i, j, pairing);
        }
    }
    Ok(FreeResolution {
        cone_rays: cone.ray_ids().to_vec(),
        monoid_generators,
        image,
        levels,
    })
}

/// Minimal free resolution of the cone monoid: all levels one, image column
/// of `p` given by the pairings with the primitive ray generators.
pub fn minimal_free_resolution(
    fan: &Fan,
    cone: &SimplicialCone,
) -> Result<FreeResolution, ResolutionError> {
    resolution_with_levels(fan, cone, vec![BigInt::one(); cone.dim()])
}

/// Resolution twisted by the free-net: row of each ray scaled by its level.
pub fn stacky_free_resolution(
    sf: &StackyFan,
    cone: &SimplicialCone,
) -> Result<FreeResolution, ResolutionError> {
    let levels = cone.ray_ids().iter().map(|&i| sf.level(i).clone()).collect();
    resolution_with_levels(sf.fan(), cone, levels)
}

/// One side of the axis/ray bijection, with the monoid generator witnessing
/// it: the witness maps to a positive multiple of the axis element and pairs
/// to zero with every other ray of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayPairing {
    pub axis: usize,
    pub ray: usize,
    pub witness: IntVector,
}

impl fmt::Display for RayPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axis {} <-> ray {} (witness {})", self.axis, self.ray, self.witness)
    }
}

/// The bijection between coordinate axes of the free monoid and the cone's
/// rays, verified through witnesses rather than assumed from the coordinate
/// convention.
pub fn ray_correspondence(res: &FreeResolution) -> Result<Vec<RayPairing>, ResolutionError> {
    let k = res.cone_rays.len();
    let mut pairings = Vec::with_capacity(k);
    for axis in 0..k {
        let mut best: Option<(BigInt, usize)> = None;
        for j in 0..res.monoid_generators.len() {
            let on_axis = res.image.at(axis, j);
            if on_axis.is_zero() || on_axis.is_negative() {
                continue;
            }
            if (0..k).any(|i| i != axis && !res.image.at(i, j).is_zero()) {
                continue;
            }
            match &best {
                Some((v, _)) if v <= on_axis => {}
                _ => best = Some((on_axis.clone(), j)),
            }
        }
        let (_, j) = best.ok_or(ResolutionError::MissingAxisGenerator { axis })?;
        pairings.push(RayPairing {
            axis,
            ray: res.cone_rays[axis],
            witness: res.monoid_generators[j].clone(),
        });
    }
    Ok(pairings)
}

/// Whether a finitely generated submonoid of `N^d` is close to `N^d`: every
/// element of the ambient free monoid has a positive multiple in the
/// submonoid, equivalently every standard basis vector lies in the rational
/// cone of the generators.
pub fn is_close_submonoid(
    generators: &[IntVector],
    ambient_rank: usize,
) -> Result<bool, ResolutionError> {
    for g in generators {
        if g.entries().iter().any(|x| x.is_negative()) {
            return Err(ResolutionError::NegativeCoordinate);
        }
    }
    Ok((0..ambient_rank).all(|i| {
        in_rational_cone(generators, &IntVector::standard_basis(ambient_rank, i))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Ray;
    use std::collections::BTreeMap;

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

    fn wedge_stacky() -> StackyFan {
        let mut levels = BTreeMap::new();
        levels.insert("r1".to_string(), BigInt::from(2));
        levels.insert("r2".to_string(), BigInt::from(1));
        StackyFan::new(wedge_fan(), &levels).unwrap()
    }

    fn cols(m: &IntMatrix) -> Vec<IntVector> {
        m.columns()
    }

    #[test]
    fn minimal_resolution_of_wedge() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let res = minimal_free_resolution(&fan, top).unwrap();
        assert_eq!(
            res.monoid_generators,
            vec![
                IntVector::from_i64(&[0, 1]),
                IntVector::from_i64(&[1, 0]),
                IntVector::from_i64(&[2, -1])
            ]
        );
        assert_eq!(
            cols(&res.image),
            vec![
                IntVector::from_i64(&[0, 2]),
                IntVector::from_i64(&[1, 1]),
                IntVector::from_i64(&[2, 0])
            ]
        );
    }

    #[test]
    fn stacky_resolution_scales_rows() {
        let sf = wedge_stacky();
        let top = sf.fan().cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let res = stacky_free_resolution(&sf, top).unwrap();
        assert_eq!(
            cols(&res.image),
            vec![
                IntVector::from_i64(&[0, 2]),
                IntVector::from_i64(&[2, 1]),
                IntVector::from_i64(&[4, 0])
            ]
        );
        // Row-scaling law against the minimal resolution.
        let min = minimal_free_resolution(sf.fan(), top).unwrap();
        for j in 0..min.image.cols() {
            for i in 0..min.image.rows() {
                assert_eq!(
                    res.image.at(i, j),
                    &(min.image.at(i, j) * sf.level(res.cone_rays[i]))
                );
            }
        }
    }

    #[test]
    fn smooth_cone_gives_identity_columns() {
        let fan = Fan::from_maximal(
            2,
            vec![ray("e1", &[1, 0]), ray("e2", &[0, 1])],
            vec![names(&["e1", "e2"])],
        )
        .unwrap();
        let top = fan.cone_by_ray_names(&names(&["e1", "e2"])).unwrap();
        let res = minimal_free_resolution(&fan, top).unwrap();
        assert_eq!(res.monoid_generators.len(), 2);
        let mut columns = cols(&res.image);
        columns.sort();
        assert_eq!(
            columns,
            vec![IntVector::from_i64(&[0, 1]), IntVector::from_i64(&[1, 0])]
        );
    }

    #[test]
    fn one_dimensional_cone_reduces_to_span() {
        let fan = Fan::from_maximal(2, vec![ray("r", &[1, 2])], vec![names(&["r"])]).unwrap();
        let c = fan.cone_by_ray_names(&names(&["r"])).unwrap();
        let res = minimal_free_resolution(&fan, c).unwrap();
        assert_eq!(res.monoid_generators, vec![IntVector::from_i64(&[1])]);
        assert_eq!(cols(&res.image), vec![IntVector::from_i64(&[1])]);
    }

    #[test]
    fn zero_cone_is_an_error() {
        let fan = wedge_fan();
        let zero = fan.cone_by_ray_names(&[]).unwrap();
        assert_eq!(
            minimal_free_resolution(&fan, zero),
            Err(ResolutionError::ZeroCone)
        );
    }

    #[test]
    fn ray_correspondence_of_wedge() {
        let fan = wedge_fan();
        let top = fan.cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        let res = minimal_free_resolution(&fan, top).unwrap();
        let pairs = ray_correspondence(&res).unwrap();
        assert_eq!(pairs.len(), 2);
        // Axis 0 pairs with the ray through (1,0); its witness is the
        // primitive dual covector (2,-1), the only generator whose image
        // column is supported on axis 0 alone.
        assert_eq!(pairs[0].ray, fan.ray_index("r1").unwrap());
        assert_eq!(pairs[0].witness, IntVector::from_i64(&[2, -1]));
        assert_eq!(pairs[1].ray, fan.ray_index("r2").unwrap());
        assert_eq!(pairs[1].witness, IntVector::from_i64(&[0, 1]));
        // Scaling does not change the pairing.
        let sf = wedge_stacky();
        let stacky = stacky_free_resolution(&sf, top).unwrap();
        let stacky_pairs = ray_correspondence(&stacky).unwrap();
        for (a, b) in pairs.iter().zip(&stacky_pairs) {
            assert_eq!(a.axis, b.axis);
            assert_eq!(a.ray, b.ray);
        }
    }

    #[test]
    fn closeness_examples() {
        let close = [
            IntVector::from_i64(&[0, 2]),
            IntVector::from_i64(&[1, 1]),
            IntVector::from_i64(&[2, 0]),
        ];
        assert!(is_close_submonoid(&close, 2).unwrap());
        let half = [IntVector::from_i64(&[1, 0])];
        assert!(!is_close_submonoid(&half, 2).unwrap());
        let axes = [IntVector::from_i64(&[2, 0]), IntVector::from_i64(&[0, 3])];
        assert!(is_close_submonoid(&axes, 2).unwrap());
        let bad = [IntVector::from_i64(&[1, -1])];
        assert_eq!(
            is_close_submonoid(&bad, 2),
            Err(ResolutionError::NegativeCoordinate)
        );
    }

    #[test]
    fn resolutions_are_close() {
        let sf = wedge_stacky();
        let top = sf.fan().cone_by_ray_names(&names(&["r1", "r2"])).unwrap();
        for res in [
            minimal_free_resolution(sf.fan(), top).unwrap(),
            stacky_free_resolution(&sf, top).unwrap(),
        ] {
            assert!(is_close_submonoid(&res.image.columns(), res.cone_rays.len()).unwrap());
        }
    }
}

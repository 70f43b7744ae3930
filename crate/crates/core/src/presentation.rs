//! Local quotient presentations, stabilizer groups, divisor multiplicities,
//! and the canonical smooth quasi-affine cover.
//!
//! On a cone the chart monoid maps into a free monoid by pairing with the
//! scaled ray generators; the presentation group is the cokernel of that map
//! on group completions, recorded by its invariant factors together with the
//! action character of each coordinate. Stabilizers of intermediate faces
//! use the dual cokernel of `e_rho -> level * zeta_rho` into the saturated
//! span lattice, which agrees with the ray and maximal-cone cases; the order
//! law `|stabilizer| = prod(levels) * multiplicity` is asserted on every
//! computation.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::fan::{Fan, PolyhedralError, Ray, SimplicialCone, SpanLattice};
use crate::lattice::{cokernel, FinAbGroup, GroupElement, IntMatrix, IntVector};
use crate::stacky::{validate_morphism, StackyError, StackyFan, StackyFanMorphism};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown ray `{0}`")]
    UnknownRay(String),
    #[error(transparent)]
    Polyhedral(#[from] PolyhedralError),
    #[error(transparent)]
    Stacky(#[from] StackyError),
}

/// The data of a chart presented as a quotient: the group, the action
/// character of each free-monoid coordinate, and the defining map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    /// Ray indices of the cone, matching the rows of `map_matrix` and the
    /// order of `characters`.
    pub cone_rays: Vec<usize>,
    /// Dimension of the chart (the cone's dimension).
    pub chart_rank: usize,
    /// Cokernel of the group-completed resolution map.
    pub group: FinAbGroup,
    /// Image of each free-monoid basis vector in the group.
    pub characters: Vec<GroupElement>,
    /// Row `i` holds the span coordinates of `level_i * zeta_i`: the matrix
    /// of the resolution map on group completions in the dual basis.
    pub map_matrix: IntMatrix,
}

/// Presentation of the chart of a cone as a quotient of a smooth chart by a
/// finite abelian group, computed in the saturated span lattice.
pub fn local_quotient_presentation(
    sf: &StackyFan,
    cone: &SimplicialCone,
) -> QuotientPresentation {
    let k = cone.dim();
    if k == 0 {
        return QuotientPresentation {
            cone_rays: Vec::new(),
            chart_rank: 0,
            group: FinAbGroup::trivial(0),
            characters: Vec::new(),
            map_matrix: IntMatrix::zeros(0, 0),
        };
    }
    let span = SpanLattice::new(&sf.fan().cone_generators(cone), sf.lattice_rank());
    let mut map_matrix = IntMatrix::zeros(k, k);
    for (i, &ray_id) in cone.ray_ids().iter().enumerate() {
        let scaled = span.generators()[i].scale(sf.level(ray_id));
        for j in 0..k {
            map_matrix.set(i, j, scaled.get(j).clone());
        }
    }
    let group = cokernel(&map_matrix);
    let characters = (0..k)
        .map(|i| group.project(&IntVector::standard_basis(k, i)))
        .collect();
    QuotientPresentation {
        cone_rays: cone.ray_ids().to_vec(),
        chart_rank: k,
        group,
        characters,
        map_matrix,
    }
}

/// Stabilizer group of the torus orbit of a cone: the cokernel of
/// `e_rho -> level_rho * zeta_rho` into the saturated span lattice.
pub fn stabilizer_group(sf: &StackyFan, cone: &SimplicialCone) -> FinAbGroup {
    if cone.is_zero() {
        return FinAbGroup::trivial(0);
    }
    let span = SpanLattice::new(&sf.fan().cone_generators(cone), sf.lattice_rank());
    let cols: Vec<IntVector> = cone
        .ray_ids()
        .iter()
        .zip(span.generators())
        .map(|(&ray_id, g)| g.scale(sf.level(ray_id)))
        .collect();
    let group = cokernel(&IntMatrix::from_cols(span.dim(), &cols));
    // Order law cross-check: |stabilizer| = prod(levels) * multiplicity.
    let mut expected = sf.fan().multiplicity(cone);
    for &ray_id in cone.ray_ids() {
        expected *= sf.level(ray_id);
    }
    assert_eq!(
        group.order().as_ref(),
        Some(&expected),
        "stabilizer order law violated"
    );
    group
}

/// The multiplicity comparing the ray divisor pulled back from the
/// coarse-level stack: exactly the level of the ray.
pub fn divisor_multiplicity(sf: &StackyFan, ray_name: &str) -> Result<BigInt, PresentationError> {
    sf.level_by_name(ray_name)
        .map(Clone::clone)
        .map_err(PresentationError::from)
}

/// The canonical smooth quasi-affine cover of a stacky fan.
#[derive(Clone, Debug)]
pub struct CoverData {
    /// The cover as a stacky fan with canonical levels: the faces of the
    /// positive orthant of `Z^rays` whose ray sets live in a single cone of
    /// the base fan.
    pub cover: StackyFan,
    /// Columns send each orthant basis vector to the free-net generator of
    /// its base ray, in base-ray order.
    pub eta: IntMatrix,
    /// The validated cover morphism.
    pub morphism: StackyFanMorphism,
}

/// Builds the cover fan on one orthant axis per base ray, with the lattice
/// map sending each axis to the free-net generator of its ray. The morphism
/// is validated; failure would be an internal invariant violation.
pub fn canonical_cover(sf: &StackyFan) -> CoverData {
    let base = sf.fan();
    let r = base.rays().len();
    let cover_rays: Vec<Ray> = base
        .rays()
        .iter()
        .enumerate()
        .map(|(i, ray)| Ray {
            name: ray.name.clone(),
            generator: IntVector::standard_basis(r, i),
        })
        .collect();
    let cover_cones: Vec<Vec<String>> = base
        .cones()
        .iter()
        .map(|c| base.cone_ray_names(c))
        .collect();
    let cover_fan = Fan::from_maximal(r, cover_rays, cover_cones)
        .expect("orthant faces over a valid fan form a valid fan");
    let cover = StackyFan::canonical(cover_fan);
    let eta_cols: Vec<IntVector> = (0..r).map(|i| sf.freenet_generator(i)).collect();
    let eta = IntMatrix::from_cols(sf.lattice_rank(), &eta_cols);
    let morphism =
        validate_morphism(&eta, &cover, sf).expect("canonical cover morphism validates");
    CoverData {
        cover,
        eta,
        morphism,
    }
}

impl CoverData {
    /// Whether every maximal cone of the base is the image of a maximal
    /// cover cone; holds by construction and is exposed for cross-checks.
    pub fn covers_maximal_cones(&self, sf: &StackyFan) -> bool {
        let base = sf.fan();
        sf_maximal_ray_sets(base).into_iter().all(|rays| {
            self.cover
                .fan()
                .cones()
                .iter()
                .any(|c| self.cover.fan().cone_ray_names(c) == rays)
        })
    }
}

fn sf_maximal_ray_sets(fan: &Fan) -> Vec<Vec<String>> {
    fan.maximal_cones()
        .into_iter()
        .map(|c| fan.cone_ray_names(c))
        .collect()
}

//! Stacky fans over a finitely presented abelian group and their reduction.
//!
//! A triple `(N, Sigma, beta)` is stored as a presentation `N = Z^n /
//! relations` plus a fan over the free quotient and one beta column per ray.
//! The Smith basis of the relation matrix pins the splitting of `N` into a
//! free part and cyclic factors, so the torsion coordinates of the beta
//! columns (the gerbe data) are deterministic. Reduction maps the triple to
//! a level-framed stacky fan together with the per-factor root orders and
//! divisor coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::fan::Fan;
use crate::lattice::{cokernel, FinAbGroup, IntMatrix, IntVector};
use crate::stacky::StackyFan;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BcsError {
    #[error("relations matrix has {got} rows but the group has {expected} generators")]
    RelationRows { expected: usize, got: usize },
    #[error("beta matrix has {got} rows but the group has {expected} generators")]
    BetaRows { expected: usize, got: usize },
    #[error("beta has {got} columns but the fan has {expected} rays")]
    BetaColumns { expected: usize, got: usize },
    #[error("fan lattice rank {fan} differs from the free rank {free} of the group")]
    RankMismatch { fan: usize, free: usize },
    #[error("beta does not span the rays (ray `{ray}`)")]
    BetaDoesNotSpan { ray: String },
    #[error("input is not reduced; reduce it first")]
    NotReduced,
}

/// A stacky fan over a finitely presented abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcsStackyFan {
    group_generators: usize,
    /// Columns are the relations presenting `N = Z^n / columns`.
    relations: IntMatrix,
    /// Fan over the free quotient, in the Smith-basis coordinates.
    fan: Fan,
    /// Column `i` is the presentation-coordinate vector over ray `i` (in the
    /// fan's canonical ray order).
    beta: IntMatrix,
}

/// Root orders and divisor coefficients extracted from the torsion of the
/// group: one factor per cyclic summand, with a coefficient in `[0, order)`
/// per ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GerbeFactor {
    pub order: BigInt,
    pub coefficients: Vec<BigInt>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GerbeData {
    pub factors: Vec<GerbeFactor>,
}

impl GerbeData {
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl BcsStackyFan {
    pub fn new(
        group_generators: usize,
        relations: IntMatrix,
        fan: Fan,
        beta: IntMatrix,
    ) -> Result<BcsStackyFan, BcsError> {
        if relations.rows() != group_generators {
            return Err(BcsError::RelationRows {
                expected: group_generators,
                got: relations.rows(),
            });
        }
        if beta.rows() != group_generators {
            return Err(BcsError::BetaRows {
                expected: group_generators,
                got: beta.rows(),
            });
        }
        if beta.cols() != fan.rays().len() {
            return Err(BcsError::BetaColumns {
                expected: fan.rays().len(),
                got: beta.cols(),
            });
        }
        let bcs = BcsStackyFan {
            group_generators,
            relations,
            fan,
            beta,
        };
        bcs.reduction()?; // validates rank agreement and the spanning condition
        Ok(bcs)
    }

    pub fn group_generators(&self) -> usize {
        self.group_generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn beta(&self) -> &IntMatrix {
        &self.beta
    }

    pub fn is_reduced(&self) -> bool {
        self.relations.cols() == 0
    }

    fn group(&self) -> FinAbGroup {
        cokernel(&self.relations)
    }

    fn reduction(&self) -> Result<(Vec<BigInt>, GerbeData), BcsError> {
        let group = self.group();
        if group.free_rank() != self.fan.lattice_rank() {
            return Err(BcsError::RankMismatch {
                fan: self.fan.lattice_rank(),
                free: group.free_rank(),
            });
        }
        let rays = self.fan.rays();
        let mut levels = Vec::with_capacity(rays.len());
        let mut torsion_coords: Vec<Vec<BigInt>> =
            vec![Vec::with_capacity(rays.len()); group.invariant_factors().len()];
        for (i, ray) in rays.iter().enumerate() {
            let element = group.project(&self.beta.col(i));
            let reduced = IntVector::new(element.free.clone());
            let level = multiple_of_primitive(&reduced, &ray.generator).ok_or_else(|| {
                BcsError::BetaDoesNotSpan {
                    ray: ray.name.clone(),
                }
            })?;
            levels.push(level);
            for (j, t) in element.torsion.iter().enumerate() {
                torsion_coords[j].push(t.clone());
            }
        }
        let factors = group
            .invariant_factors()
            .iter()
            .zip(torsion_coords)
            .map(|(w, coefficients)| GerbeFactor {
                order: w.clone(),
                coefficients,
            })
            .collect();
        Ok((levels, GerbeData { factors }))
    }
}

/// The positive integer `n` with `v = n * primitive`, if any.
fn multiple_of_primitive(v: &IntVector, primitive: &IntVector) -> Option<BigInt> {
    if v.dim() != primitive.dim() || v.is_zero() {
        return None;
    }
    let j = primitive.entries().iter().position(|x| !x.is_zero())?;
    let (n, rem) = num_integer::Integer::div_rem(v.get(j), primitive.get(j));
    if !rem.is_zero() || !n.is_positive() {
        return None;
    }
    if &primitive.scale(&n) != v {
        return None;
    }
    Some(n)
}

/// Splits a stacky fan over a presented group into its level-framed
/// reduction and the root-gerbe data carried by the torsion.
pub fn reduce_bcs(bcs: &BcsStackyFan) -> (StackyFan, GerbeData) {
    let (levels, gerbe) = bcs
        .reduction()
        .expect("constructor validated the reduction");
    let by_name: BTreeMap<String, BigInt> = bcs
        .fan
        .rays()
        .iter()
        .zip(&levels)
        .map(|(r, l)| (r.name.clone(), l.clone()))
        .collect();
    let framed = StackyFan::new(bcs.fan.clone(), &by_name)
        .expect("levels from a validated reduction are positive");
    (framed, gerbe)
}

/// The framed stacky fan of a reduced triple (`N` free, no relations); the
/// level on each ray is the multiple relating its beta column to the
/// primitive generator.
pub fn bcs_to_framed(bcs: &BcsStackyFan) -> Result<StackyFan, BcsError> {
    if !bcs.is_reduced() {
        return Err(BcsError::NotReduced);
    }
    Ok(reduce_bcs(bcs).0)
}

/// The reduced triple of a framed stacky fan: the lattice itself with no
/// relations, and the free-net generators as beta columns.
pub fn framed_to_bcs(sf: &StackyFan) -> BcsStackyFan {
    let rank = sf.lattice_rank();
    let beta_cols: Vec<IntVector> = (0..sf.fan().rays().len())
        .map(|i| sf.freenet_generator(i))
        .collect();
    BcsStackyFan::new(
        rank,
        IntMatrix::zeros(rank, 0),
        sf.forget_to_fan(),
        IntMatrix::from_cols(rank, &beta_cols),
    )
    .expect("free-net generators span their rays")
}

//! Disjoint complements, bands and the lattice of bands.
//!
//! The disjoint complement of a set `S` is `Z(supp S)`, where
//! `supp S = {i : f_i(s) != 0 for some s ∈ S}` and `Z(J)` is the common zero
//! set of the facets in `J`. Every band is therefore a zero set of facets,
//! carried here by its saturated support `{i : f_i vanishes on the band}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{nullspace, same_span, span_contains, subspace_intersection, subspace_sum, Matrix, Vector};
use crate::scalar::Scalar;
use crate::space::{Method, OrderedSpace};

/// Largest facet count accepted by [`OrderedSpace::enumerate_bands`].
pub const MAX_ENUMERATION_FACETS: usize = 20;

const COMPLEMENT_PROBES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band<S> {
    /// Canonical basis: the RREF-derived nullspace basis of the support rows.
    pub basis: Matrix<S>,
    /// Indices of all facets vanishing on the band, ascending.
    pub support: Vec<usize>,
    pub directed: bool,
    /// `X = B ⊕ B^⊥` as vector spaces.
    pub is_projection_band: bool,
    /// Position in the enumerated band list, when known.
    pub id: Option<usize>,
}

impl<S: Scalar> Band<S> {
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.nrows() == 0
    }

    pub fn contains(&self, v: &Vector<S>) -> bool {
        span_contains(&self.basis, &Matrix::from_rows_unchecked(vec![v.clone()], self.basis.ncols()))
    }

    /// `self ⊆ other` as subspaces.
    pub fn is_subband_of(&self, other: &Band<S>) -> bool {
        span_contains(&other.basis, &self.basis)
    }

    /// Same subspace; ignores the id.
    pub fn same_band(&self, other: &Band<S>) -> bool {
        self.basis == other.basis
    }
}

/// All bands of a space, sorted by dimension and then by basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandLattice<S> {
    pub bands: Vec<Band<S>>,
}

impl<S: Scalar> BandLattice<S> {
    pub fn len(&self) -> usize {
        self.bands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bands.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Band<S>> {
        self.bands.iter()
    }

    /// The enumerated band with the same subspace as `band`.
    pub fn find(&self, band: &Band<S>) -> Option<&Band<S>> {
        self.bands.iter().find(|b| b.same_band(band))
    }

    pub fn projection_bands(&self) -> impl Iterator<Item = &Band<S>> {
        self.bands.iter().filter(|b| b.is_projection_band)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandSumCheck<S> {
    pub sum: Matrix<S>,
    pub sum_is_band: bool,
    /// `(B + C)^⊥⊥`.
    pub closure: Band<S>,
    /// `B ∩ C = (B^⊥ + C^⊥)^⊥`.
    pub meet_identity: bool,
    /// `(B + C)^⊥⊥ = (B^⊥ ∩ C^⊥)^⊥`.
    pub closure_identity: bool,
    pub identity_holds: bool,
}

impl<S: Scalar> OrderedSpace<S> {
    /// `{i : f_i(s) != 0 for some s}`.
    pub fn support_of(&self, set: &[Vector<S>]) -> Vec<usize> {
        self.facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| set.iter().any(|s| !f.dot(s).is_zero()))
            .map(|(i, _)| i)
            .collect()
    }

    /// Canonical basis of `Z(J)`.
    pub fn zero_set(&self, indices: &[usize]) -> Matrix<S> {
        let rows = indices.iter().map(|&i| self.facets()[i].clone()).collect();
        nullspace(&Matrix::from_rows_unchecked(rows, self.dim()))
    }

    /// Facets vanishing on the span of `basis`.
    pub fn saturation(&self, basis: &Matrix<S>) -> Vec<usize> {
        self.facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| basis.rows().iter().all(|b| f.dot(b).is_zero()))
            .map(|(i, _)| i)
            .collect()
    }

    fn complement_indices(&self, indices: &[usize]) -> Vec<usize> {
        (0..self.facets().len()).filter(|i| !indices.contains(i)).collect()
    }

    /// Builds the band `Z(J)` with flags; `J` need not be saturated.
    fn band_from_support(&self, indices: &[usize]) -> Result<Band<S>> {
        let basis = self.zero_set(indices);
        let support = self.saturation(&basis);
        let perp = self.zero_set(&self.complement_indices(&support));
        let directed = self.subspace_is_directed(&basis)?;
        let is_projection_band =
            basis.nrows() + perp.nrows() == self.dim() && subspace_intersection(&basis, &perp).nrows() == 0;
        Ok(Band { basis, support, directed, is_projection_band, id: None })
    }

    /// The band spanned by `basis`, which must already be a band.
    pub fn band_of_subspace(&self, basis: &Matrix<S>) -> Result<Band<S>> {
        let band = self.band_from_support(&self.saturation(basis))?;
        if !same_span(&band.basis, basis) {
            return Err(Error::PreconditionViolated("subspace is not a band".into()));
        }
        Ok(band)
    }

    fn complement_unchecked(&self, set: &[Vector<S>]) -> Result<Band<S>> {
        self.band_from_support(&self.support_of(set))
    }

    /// `S^⊥`, cross-checked against the disjointness oracle: every basis vector
    /// is disjoint from `S`, and seeded probes outside the complement are not.
    pub fn disjoint_complement(&self, set: &[Vector<S>]) -> Result<Band<S>> {
        for s in set {
            self.check_dim(s)?;
        }
        let band = self.complement_unchecked(set)?;
        for b in band.basis.rows() {
            for s in set {
                if !self.disjoint(b, s, Method::Oracle)? {
                    return Err(Error::ValidationFailure(format!(
                        "complement basis vector {b} is not disjoint from {s}"
                    )));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let mut probes = 0;
        let mut attempts = 0;
        while probes < COMPLEMENT_PROBES && attempts < 20 * COMPLEMENT_PROBES {
            attempts += 1;
            let x: Vector<S> = (0..self.dim()).map(|_| S::from_int(rng.gen_range(-3..=3))).collect();
            if band.contains(&x) {
                continue;
            }
            probes += 1;
            let mut separated = false;
            for s in set {
                if !self.disjoint(&x, s, Method::Oracle)? {
                    separated = true;
                    break;
                }
            }
            if !separated {
                return Err(Error::ValidationFailure(format!(
                    "{x} lies outside the computed complement yet is disjoint from the set"
                )));
            }
        }
        Ok(band)
    }

    /// `S^⊥⊥`, the smallest band containing `S`.
    pub fn band_closure(&self, set: &[Vector<S>]) -> Result<Band<S>> {
        let perp = self.disjoint_complement(set)?;
        self.disjoint_complement(perp.basis.rows())
    }

    fn band_closure_unchecked(&self, set: &[Vector<S>]) -> Result<Band<S>> {
        let perp = self.complement_unchecked(set)?;
        self.complement_unchecked(perp.basis.rows())
    }

    /// `B^⊥` without the oracle cross-check.
    pub fn band_complement(&self, band: &Band<S>) -> Result<Band<S>> {
        self.complement_unchecked(band.basis.rows())
    }

    /// Every band, as `Z(comp(sat(J)))` over all facet subsets `J`.
    pub fn enumerate_bands(&self) -> Result<BandLattice<S>> {
        let m = self.facets().len();
        if m > MAX_ENUMERATION_FACETS {
            return Err(Error::TooManyFacets { count: m, limit: MAX_ENUMERATION_FACETS });
        }
        let closed: BTreeSet<Vec<usize>> = (0u32..(1u32 << m))
            .into_par_iter()
            .map(|mask| {
                let j: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
                self.saturation(&self.zero_set(&j))
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        let mut bands: Vec<Band<S>> = closed
            .into_par_iter()
            .map(|c| self.band_from_support(&self.complement_indices(&c)))
            .collect::<Result<Vec<_>>>()?;
        bands.sort_by(|a, b| (a.dim(), a.basis.rows()).cmp(&(b.dim(), b.basis.rows())));
        bands.dedup_by(|a, b| a.same_band(b));
        for (i, b) in bands.iter_mut().enumerate() {
            b.id = Some(i);
        }
        Ok(BandLattice { bands })
    }

    /// Intersection of bands; the empty meet is the whole space.
    pub fn band_meet(&self, bands: &[Band<S>]) -> Result<Band<S>> {
        let support: BTreeSet<usize> = bands.iter().flat_map(|b| b.support.iter().copied()).collect();
        self.band_from_support(&support.into_iter().collect::<Vec<_>>())
    }

    /// `(∪ B_i^⊥)^⊥`, which equals the meet.
    pub fn band_meet_via_complements(&self, bands: &[Band<S>]) -> Result<Band<S>> {
        let mut union = Vec::new();
        for b in bands {
            union.extend(self.band_complement(b)?.basis.into_rows());
        }
        self.complement_unchecked(&union)
    }

    /// Smallest enumerated band containing every input.
    pub fn band_join(&self, bands: &[Band<S>], lattice: &BandLattice<S>) -> Result<Band<S>> {
        let above: Vec<Band<S>> =
            lattice.iter().filter(|c| bands.iter().all(|b| b.is_subband_of(c))).cloned().collect();
        let join = self.band_meet(&above)?;
        Ok(lattice.find(&join).cloned().unwrap_or(join))
    }

    pub fn band_sum_check(&self, b: &Band<S>, c: &Band<S>) -> Result<BandSumCheck<S>> {
        let sum = subspace_sum(&b.basis, &c.basis);
        let closure = self.band_closure_unchecked(sum.rows())?;
        let sum_is_band = same_span(&sum, &closure.basis);
        let bp = self.band_complement(b)?;
        let cp = self.band_complement(c)?;

        let meet = subspace_intersection(&b.basis, &c.basis);
        let via = self.complement_unchecked(subspace_sum(&bp.basis, &cp.basis).rows())?;
        let meet_identity = same_span(&meet, &via.basis);

        let perp_meet = subspace_intersection(&bp.basis, &cp.basis);
        let via = self.complement_unchecked(perp_meet.rows())?;
        let closure_identity = same_span(&closure.basis, &via.basis);

        Ok(BandSumCheck {
            sum,
            sum_is_band,
            closure,
            meet_identity,
            closure_identity,
            identity_holds: meet_identity && closure_identity,
        })
    }
}

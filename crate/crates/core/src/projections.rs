//! Band projections, their Boolean algebra, and the product decomposition.
//!
//! Band projections are found only through bands: a band `B` with
//! `X = B ⊕ B^⊥` yields the projection onto `B` along `B^⊥`, and every band
//! projection arises this way from its range.

use rayon::prelude::*;
use std::collections::HashMap;

use crate::bands::Band;
use crate::error::{Error, Result};
use crate::linalg::{
    inverse, nullspace, rank_of, row_basis, same_span, span_contains, subspace_intersection, subspace_sum, Matrix,
    Vector,
};
use crate::polyhedral::cone_subspace_intersection;
use crate::scalar::Scalar;
use crate::space::OrderedSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Positivity {
    pub projection_positive: bool,
    pub complement_positive: bool,
}

impl Positivity {
    pub fn both(&self) -> bool {
        self.projection_positive && self.complement_positive
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandProjection<S> {
    pub matrix: Matrix<S>,
    pub range: Band<S>,
    pub kernel: Band<S>,
    pub positivity: Positivity,
}

impl<S: Scalar> BandProjection<S> {
    pub fn rank(&self) -> usize {
        self.range.dim()
    }
}

/// The six equivalent descriptions of a band projection, each evaluated on
/// its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characterisation {
    /// `PX` is a projection band and `ker P = (PX)^⊥`.
    pub band_projection: bool,
    pub kernel_is_range_complement: bool,
    pub range_is_kernel_complement: bool,
    pub range_disjoint_from_kernel: bool,
    pub positive_with_complement: bool,
    /// The first condition for `I - P`.
    pub complement_band_projection: bool,
    pub verdict: bool,
}

impl Characterisation {
    pub fn as_array(&self) -> [bool; 6] {
        [
            self.band_projection,
            self.kernel_is_range_complement,
            self.range_is_kernel_complement,
            self.range_disjoint_from_kernel,
            self.positive_with_complement,
            self.complement_band_projection,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BooleanLaws {
    pub commutative: bool,
    pub associative: bool,
    pub absorptive: bool,
    pub distributive: bool,
    pub complemented: bool,
    pub bounded: bool,
    pub pairwise_commuting: bool,
}

impl BooleanLaws {
    pub fn all(&self) -> bool {
        self.commutative
            && self.associative
            && self.absorptive
            && self.distributive
            && self.complemented
            && self.bounded
            && self.pairwise_commuting
    }
}

/// All band projections with their Boolean operations as index tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanAlgebraReport<S> {
    /// Ordered like the ranges in the enumerated band list.
    pub projections: Vec<BandProjection<S>>,
    pub m: usize,
    pub meet_table: Vec<Vec<usize>>,
    pub join_table: Vec<Vec<usize>>,
    pub complement_map: Vec<usize>,
    /// Indices into `projections` of the minimal non-zero projection bands.
    pub minimal: Vec<usize>,
    /// For each projection, the minimal projections summing to it.
    pub atoms_of: Vec<Vec<usize>>,
    pub rank_one: usize,
    pub laws: BooleanLaws,
    pub is_lattice: bool,
}

impl<S: Scalar> BooleanAlgebraReport<S> {
    pub fn len(&self) -> usize {
        self.projections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projections.is_empty()
    }

    pub fn index_of(&self, matrix: &Matrix<S>) -> Option<usize> {
        self.projections.iter().position(|p| &p.matrix == matrix)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanOps<S> {
    pub meet: Matrix<S>,
    pub join: Matrix<S>,
    pub complement: Matrix<S>,
    pub commute: bool,
    /// `PQX = PX ∩ QX`.
    pub meet_range_identity: bool,
    /// `(P+Q-PQ)X = PX + QX`.
    pub join_range_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor<S> {
    pub band: Band<S>,
    /// The band in the coordinates of its own basis.
    pub space: OrderedSpace<S>,
    pub projection: BandProjection<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<S> {
    pub factors: Vec<Factor<S>>,
    /// Maps concatenated factor coordinates to `X`.
    pub j: Matrix<S>,
    pub j_inverse: Matrix<S>,
    /// `J` maps the product cone into `X₊`.
    pub forward_positive: bool,
    /// `J⁻¹` maps `X₊` into the product cone.
    pub backward_positive: bool,
    /// Each factor has exactly the two trivial band projections.
    pub factors_irreducible: bool,
}

fn column_space<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    row_basis(m.transpose().rows(), m.nrows())
}

impl<S: Scalar> OrderedSpace<S> {
    /// `T` maps every cone generator into `X₊`.
    pub fn is_positive_map(&self, t: &Matrix<S>) -> bool {
        self.cone().generators().iter().all(|g| self.contains_positive(&t.mul_vec(g)))
    }

    /// Projection onto `span(range)` along `span(kernel)`; the two bases must
    /// together form a basis of the space.
    pub fn projection_along(&self, range: &Matrix<S>, kernel: &Matrix<S>) -> Option<Matrix<S>> {
        let n = self.dim();
        let cols: Vec<Vector<S>> = range.rows().iter().chain(kernel.rows()).cloned().collect();
        if cols.len() != n {
            return None;
        }
        let m = Matrix::from_columns(&cols, n);
        let minv = inverse(&m)?;
        let k = range.nrows();
        let d = Matrix::from_rows_unchecked(
            (0..n).map(|r| if r < k { Vector::unit(n, r) } else { Vector::zeros(n) }).collect(),
            n,
        );
        Some(m.mul(&d).mul(&minv))
    }

    /// The band projection with range `band`, if `band` is a projection band.
    pub fn is_projection_band(&self, band: &Band<S>) -> Result<Option<BandProjection<S>>> {
        let perp = self.band_complement(band)?;
        if band.dim() + perp.dim() != self.dim() || subspace_intersection(&band.basis, &perp.basis).nrows() != 0 {
            return Ok(None);
        }
        let matrix = self.projection_along(&band.basis, &perp.basis).expect("complementary bases form a basis");
        let complement = Matrix::identity(self.dim()).sub(&matrix);
        let positivity = Positivity {
            projection_positive: self.is_positive_map(&matrix),
            complement_positive: self.is_positive_map(&complement),
        };
        if !positivity.both() {
            return Err(Error::PositivityContradiction(format!(
                "projection onto the band spanned by {} along its complement",
                band.basis
            )));
        }
        Ok(Some(BandProjection { matrix, range: band.clone(), kernel: perp, positivity }))
    }

    /// Range is a projection band and the kernel is its disjoint complement.
    fn satisfies_definition(&self, p: &Matrix<S>) -> Result<bool> {
        let range = column_space(p);
        let kernel = nullspace(p);
        let Ok(band) = self.band_of_subspace(&range) else {
            return Ok(false);
        };
        if self.is_projection_band(&band)?.is_none() {
            return Ok(false);
        }
        Ok(same_span(&kernel, &self.band_complement(&band)?.basis))
    }

    /// Evaluates all six descriptions of a band projection for an idempotent
    /// `P`; a mixed outcome is a theorem violation.
    pub fn check_characterisation(&self, p: &Matrix<S>) -> Result<Characterisation> {
        self.check_square(p)?;
        if !p.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        let n = self.dim();
        let range = column_space(p);
        let kernel = nullspace(p);
        let range_perp = self.disjoint_complement(range.rows())?;
        let kernel_perp = self.disjoint_complement(kernel.rows())?;
        let complement = Matrix::identity(n).sub(p);
        let c = Characterisation {
            band_projection: self.satisfies_definition(p)?,
            kernel_is_range_complement: same_span(&kernel, &range_perp.basis),
            range_is_kernel_complement: same_span(&range, &kernel_perp.basis),
            range_disjoint_from_kernel: self.subspaces_disjoint(&range, &kernel)?,
            positive_with_complement: self.is_positive_map(p) && self.is_positive_map(&complement),
            complement_band_projection: self.satisfies_definition(&complement)?,
            verdict: false,
        };
        let values = c.as_array();
        if values.iter().any(|&b| b != values[0]) {
            return Err(Error::TheoremViolation(format!("band projection characterisations disagree: {values:?}")));
        }
        Ok(Characterisation { verdict: values[0], ..c })
    }

    fn check_square(&self, p: &Matrix<S>) -> Result<()> {
        if p.nrows() != self.dim() || p.ncols() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: p.nrows().max(p.ncols()) });
        }
        Ok(())
    }

    fn require_band_projection(&self, p: &Matrix<S>) -> Result<()> {
        self.check_square(p)?;
        if !p.is_idempotent() || !self.satisfies_definition(p)? {
            return Err(Error::NotBandProjection);
        }
        Ok(())
    }

    /// Meet `PQ`, join `P+Q-PQ` and complement `I-P`, with the commutation
    /// and range identities.
    pub fn boolean_ops(&self, p: &Matrix<S>, q: &Matrix<S>) -> Result<BooleanOps<S>> {
        self.require_band_projection(p)?;
        self.require_band_projection(q)?;
        let pq = p.mul(q);
        let join = p.add(q).sub(&pq);
        let complement = Matrix::identity(self.dim()).sub(p);
        let commute = pq == q.mul(p);
        for r in [&pq, &join, &complement] {
            if !r.is_idempotent()
                || !self.is_positive_map(r)
                || !self.is_positive_map(&Matrix::identity(self.dim()).sub(r))
            {
                return Err(Error::TheoremViolation(format!("Boolean operation result {r} is not a band projection")));
            }
        }
        let (rp, rq) = (column_space(p), column_space(q));
        let meet_range_identity = same_span(&column_space(&pq), &subspace_intersection(&rp, &rq));
        let join_range_identity = same_span(&column_space(&join), &subspace_sum(&rp, &rq));
        if !(commute && meet_range_identity && join_range_identity) {
            return Err(Error::TheoremViolation("band projections fail to commute or range identities fail".into()));
        }
        Ok(BooleanOps { meet: pq, join, complement, commute, meet_range_identity, join_range_identity })
    }

    /// `[PX ⊆ QX, QP = P, P <= Q]`, which must agree.
    pub fn domination_check(&self, p: &Matrix<S>, q: &Matrix<S>) -> Result<[bool; 3]> {
        self.require_band_projection(p)?;
        self.require_band_projection(q)?;
        let r = [span_contains(&column_space(q), &column_space(p)), q.mul(p) == *p, self.is_positive_map(&q.sub(p))];
        if r.iter().any(|&b| b != r[0]) {
            return Err(Error::TheoremViolation(format!("domination conditions disagree: {r:?}")));
        }
        Ok(r)
    }

    /// `[PQ = 0, PX ∩ QX = {0}, PX ⊥ QX]`, which must agree.
    pub fn trivial_intersection_check(&self, p: &Matrix<S>, q: &Matrix<S>) -> Result<[bool; 3]> {
        self.require_band_projection(p)?;
        self.require_band_projection(q)?;
        let (rp, rq) = (column_space(p), column_space(q));
        let r = [p.mul(q).is_zero(), subspace_intersection(&rp, &rq).nrows() == 0, self.subspaces_disjoint(&rp, &rq)?];
        if r.iter().any(|&b| b != r[0]) {
            return Err(Error::TheoremViolation(format!("trivial intersection conditions disagree: {r:?}")));
        }
        Ok(r)
    }

    /// Range and kernel of `P` are both projection bands; must match the
    /// characterisation verdict.
    pub fn range_kernel_check(&self, p: &Matrix<S>) -> Result<bool> {
        let verdict = self.check_characterisation(p)?.verdict;
        let is_pb = |basis: &Matrix<S>| -> Result<bool> {
            match self.band_of_subspace(basis) {
                Ok(b) => Ok(self.is_projection_band(&b)?.is_some()),
                Err(Error::PreconditionViolated(_)) => Ok(false),
                Err(e) => Err(e),
            }
        };
        let result = is_pb(&column_space(p))? && is_pb(&nullspace(p))?;
        if result != verdict {
            return Err(Error::TheoremViolation("range and kernel test disagrees with the characterisation".into()));
        }
        Ok(result)
    }

    /// `P₁⋯P_k x = inf{P₁x, …, P_kx}` for positive `x`.
    pub fn product_infimum_check(&self, ps: &[Matrix<S>], x: &Vector<S>) -> Result<bool> {
        if ps.is_empty() {
            return Err(Error::EmptyInput("no projections"));
        }
        for p in ps {
            self.require_band_projection(p)?;
        }
        if !self.contains_positive(x) {
            return Err(Error::NotPositive);
        }
        let product = ps.iter().rev().fold(x.clone(), |acc, p| p.mul_vec(&acc));
        let images: Vec<Vector<S>> = ps.iter().map(|p| p.mul_vec(x)).collect();
        Ok(self.infimum(&images)? == Some(product))
    }

    /// All band projections with the Boolean algebra tables, checked against
    /// the structure theorem.
    pub fn enumerate_band_projections(&self) -> Result<BooleanAlgebraReport<S>> {
        let n = self.dim();
        let lattice = self.enumerate_bands()?;
        let projections: Vec<BandProjection<S>> = lattice
            .bands
            .par_iter()
            .map(|b| self.is_projection_band(b))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let k = projections.len();
        let index: HashMap<&Matrix<S>, usize> = projections.iter().enumerate().map(|(i, p)| (&p.matrix, i)).collect();
        let lookup = |m: &Matrix<S>| -> Result<usize> {
            index
                .get(m)
                .copied()
                .ok_or_else(|| Error::TheoremViolation(format!("{m} is missing from the enumerated band projections")))
        };

        let minimal: Vec<usize> = (0..k)
            .filter(|&i| {
                let b = &projections[i].range;
                !b.is_zero()
                    && !projections
                        .iter()
                        .any(|q| !q.range.is_zero() && !q.range.same_band(b) && q.range.is_subband_of(b))
            })
            .collect();
        let m = minimal.len();

        let identity = Matrix::identity(n);
        let zero = Matrix::zeros(n, n);
        for (a, &i) in minimal.iter().enumerate() {
            for &j in &minimal[a + 1..] {
                if !projections[i].matrix.mul(&projections[j].matrix).is_zero() {
                    return Err(Error::TheoremViolation("distinct minimal band projections are not orthogonal".into()));
                }
            }
        }
        let total = minimal.iter().fold(zero.clone(), |acc, &i| acc.add(&projections[i].matrix));
        if total != identity {
            return Err(Error::TheoremViolation("minimal band projections do not sum to the identity".into()));
        }
        if m >= usize::BITS as usize - 1 || k != 1usize << m {
            return Err(Error::TheoremViolation(format!("{k} band projections is not 2^{m}")));
        }
        let mut atoms_of = Vec::with_capacity(k);
        let mut seen = std::collections::HashSet::new();
        for p in &projections {
            let parts: Vec<usize> =
                minimal.iter().copied().filter(|&i| projections[i].range.is_subband_of(&p.range)).collect();
            let sum = parts.iter().fold(zero.clone(), |acc, &i| acc.add(&projections[i].matrix));
            if sum != p.matrix || !seen.insert(parts.clone()) {
                return Err(Error::TheoremViolation(format!(
                    "{} is not a unique sum of minimal band projections",
                    p.matrix
                )));
            }
            atoms_of.push(parts);
        }

        let mut meet_table = vec![vec![0; k]; k];
        let mut join_table = vec![vec![0; k]; k];
        let mut pairwise_commuting = true;
        for i in 0..k {
            for j in 0..k {
                let (p, q) = (&projections[i].matrix, &projections[j].matrix);
                let pq = p.mul(q);
                pairwise_commuting &= pq == q.mul(p);
                meet_table[i][j] = lookup(&pq)?;
                join_table[i][j] = lookup(&p.add(q).sub(&pq))?;
            }
        }
        let complement_map =
            projections.iter().map(|p| lookup(&identity.sub(&p.matrix))).collect::<Result<Vec<_>>>()?;
        let bottom = lookup(&zero)?;
        let top = lookup(&identity)?;
        let laws = boolean_laws(&meet_table, &join_table, &complement_map, bottom, top, pairwise_commuting);
        if !laws.all() {
            return Err(Error::TheoremViolation(format!("Boolean algebra laws fail: {laws:?}")));
        }
        let rank_one = projections.iter().filter(|p| p.rank() == 1).count();
        if rank_one > n || m > n {
            return Err(Error::TheoremViolation(format!(
                "{rank_one} rank-one band projections, {m} minimal, in dimension {n}"
            )));
        }
        Ok(BooleanAlgebraReport {
            projections,
            m,
            meet_table,
            join_table,
            complement_map,
            minimal,
            atoms_of,
            rank_one,
            laws,
            is_lattice: m == n,
        })
    }

    /// Smallest projection band containing `set`.
    pub fn generated_projection_band(&self, set: &[Vector<S>]) -> Result<Band<S>> {
        for s in set {
            self.check_dim(s)?;
        }
        let lattice = self.enumerate_bands()?;
        let mut containing = Vec::new();
        for b in lattice.iter() {
            if set.iter().all(|s| b.contains(s)) && self.is_projection_band(b)?.is_some() {
                containing.push(b.clone());
            }
        }
        let meet = self.band_meet(&containing)?;
        Ok(lattice.find(&meet).cloned().unwrap_or(meet))
    }

    /// Splits the space into the minimal projection bands, each with its own
    /// cone in band coordinates.
    pub fn decompose(&self) -> Result<Decomposition<S>> {
        let n = self.dim();
        let report = self.enumerate_band_projections()?;
        let mut factors = Vec::with_capacity(report.m);
        let mut columns = Vec::with_capacity(n);
        for &i in &report.minimal {
            let projection = report.projections[i].clone();
            let band = projection.range.clone();
            let local = cone_subspace_intersection(self.cone(), &band.basis)?.local;
            let space = OrderedSpace::validate(local.generators(), band.dim())?;
            columns.extend(band.basis.rows().iter().cloned());
            factors.push(Factor { band, space, projection });
        }
        let j = Matrix::from_columns(&columns, n);
        let j_inverse = inverse(&j)
            .ok_or_else(|| Error::TheoremViolation("minimal projection bands do not span the space".into()))?;

        let mut offset = 0;
        let mut forward_positive = true;
        let mut blocks = Vec::with_capacity(factors.len());
        for f in &factors {
            let k = f.space.dim();
            for g in f.space.cone().generators() {
                let mut coords = Vector::zeros(n);
                for (t, value) in g.iter().enumerate() {
                    coords[offset + t] = value.clone();
                }
                forward_positive &= self.contains_positive(&j.mul_vec(&coords));
            }
            blocks.push(offset..offset + k);
            offset += k;
        }
        let backward_positive = self.cone().generators().iter().all(|x| {
            let coords = j_inverse.mul_vec(x);
            factors.iter().zip(&blocks).all(|(f, r)| {
                let part: Vector<S> = coords.entries()[r.clone()].iter().cloned().collect();
                f.space.contains_positive(&part)
            })
        });
        let mut factors_irreducible = true;
        for f in &factors {
            factors_irreducible &= f.space.enumerate_band_projections()?.len() == 2;
        }
        if !(forward_positive && backward_positive && factors_irreducible) {
            return Err(Error::TheoremViolation(format!(
                "decomposition checks failed: forward {forward_positive}, backward {backward_positive}, irreducible {factors_irreducible}"
            )));
        }
        debug_assert_eq!(rank_of(&columns, n), n);
        Ok(Decomposition { factors, j, j_inverse, forward_positive, backward_positive, factors_irreducible })
    }
}

fn boolean_laws(
    meet: &[Vec<usize>],
    join: &[Vec<usize>],
    complement: &[usize],
    bottom: usize,
    top: usize,
    pairwise_commuting: bool,
) -> BooleanLaws {
    let k = meet.len();
    let mut laws = BooleanLaws {
        commutative: true,
        associative: true,
        absorptive: true,
        distributive: true,
        complemented: true,
        bounded: true,
        pairwise_commuting,
    };
    for a in 0..k {
        laws.complemented &= meet[a][complement[a]] == bottom && join[a][complement[a]] == top;
        laws.bounded &= meet[a][bottom] == bottom && join[a][top] == top && meet[a][top] == a && join[a][bottom] == a;
        for b in 0..k {
            laws.commutative &= meet[a][b] == meet[b][a] && join[a][b] == join[b][a];
            laws.absorptive &= meet[a][join[a][b]] == a && join[a][meet[a][b]] == a;
            for c in 0..k {
                laws.associative &=
                    meet[meet[a][b]][c] == meet[a][meet[b][c]] && join[join[a][b]][c] == join[a][join[b][c]];
                laws.distributive &= meet[join[a][b]][c] == join[meet[a][c]][meet[b][c]]
                    && join[meet[a][b]][c] == meet[join[a][c]][join[b][c]];
            }
        }
    }
    laws
}

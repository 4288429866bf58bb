//! Polyhedral cones in generator (V) and facet (H) form.
//!
//! Conversion uses the double description method. Constraints are inserted in
//! the order given, lineality is eliminated first, and ray pairs are combined
//! only when the rank test certifies adjacency. Facets are reported as
//! primitive integer vectors sorted lexicographically, so a cone has exactly
//! one facet list.

use crate::error::{Error, Result};
use crate::linalg::{rank_of, Matrix, Vector};
use crate::scalar::Scalar;

/// Generators of `{x : a·x >= 0 for every constraint a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators<S> {
    /// Extreme rays modulo the lineality space, primitive and deduplicated.
    pub rays: Vec<Vector<S>>,
    /// Basis of the lineality space.
    pub lineality: Vec<Vector<S>>,
}

fn push_unique<S: Scalar>(rays: &mut Vec<Vector<S>>, r: Vector<S>) {
    if !r.is_zero() && !rays.contains(&r) {
        rays.push(r);
    }
}

fn tight<'a, S: Scalar>(constraints: &'a [Vector<S>], x: &'a Vector<S>) -> impl Iterator<Item = &'a Vector<S>> {
    constraints.iter().filter(move |a| a.dot(x).is_zero())
}

/// Double description: H-representation to V-representation.
pub fn h_to_v<S: Scalar>(constraints: &[Vector<S>], dim: usize) -> Result<ConeGenerators<S>> {
    if let Some(bad) = constraints.iter().find(|a| a.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    let mut lineality: Vec<Vector<S>> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
    let mut rays: Vec<Vector<S>> = Vec::new();
    let mut processed: Vec<Vector<S>> = Vec::new();

    for a in constraints.iter().filter(|a| !a.is_zero()) {
        if let Some(k) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l = lineality.remove(k);
            if a.dot(&l).is_negative() {
                l = l.neg();
            }
            let al = a.dot(&l);
            for other in lineality.iter_mut() {
                let f = a.dot(other) / al.clone();
                *other = other.sub(&l.scale(&f));
            }
            let old = std::mem::take(&mut rays);
            for r in old {
                let f = a.dot(&r) / al.clone();
                push_unique(&mut rays, r.sub(&l.scale(&f)).primitive());
            }
            push_unique(&mut rays, l.primitive());
        } else {
            let target = (dim - lineality.len()).checked_sub(2);
            let (mut pos, mut zero, mut neg) = (Vec::new(), Vec::new(), Vec::new());
            for r in rays.drain(..) {
                let s = a.dot(&r);
                if s.is_positive() {
                    pos.push((r, s));
                } else if s.is_zero() {
                    zero.push(r);
                } else {
                    neg.push((r, s));
                }
            }
            let mut next: Vec<Vector<S>> = Vec::new();
            for r in zero.iter().chain(pos.iter().map(|(r, _)| r)) {
                push_unique(&mut next, r.clone());
            }
            for (p, sp) in &pos {
                for (q, sq) in &neg {
                    let common: Vec<Vector<S>> = tight(&processed, p).filter(|c| c.dot(q).is_zero()).cloned().collect();
                    if Some(rank_of(&common, dim)) != target {
                        continue;
                    }
                    let combo = q.scale(sp).sub(&p.scale(sq));
                    push_unique(&mut next, combo.primitive());
                }
            }
            rays = next;
        }
        processed.push(a.clone());
    }

    // Keep only genuine extreme rays: the tight constraints must cut the
    // cone down to the ray plus the lineality space.
    let want = dim - lineality.len();
    rays.retain(|r| {
        let active: Vec<Vector<S>> = tight(&processed, r).cloned().collect();
        want >= 1 && rank_of(&active, dim) == want - 1
    });
    let lineality = lineality.into_iter().map(|l| l.primitive()).collect();
    Ok(ConeGenerators { rays, lineality })
}

/// A polyhedral cone carried in both representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone<S> {
    dim: usize,
    generators: Vec<Vector<S>>,
    facets: Vec<Vector<S>>,
    extreme_rays: Vec<Vector<S>>,
}

impl<S: Scalar> Cone<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector<S>] {
        &self.generators
    }

    /// Facet functionals `f_i`; the cone is `{x : f_i(x) >= 0}`.
    pub fn facets(&self) -> &[Vector<S>] {
        &self.facets
    }

    /// Extreme generators in input order, one per ray.
    pub fn extreme_rays(&self) -> &[Vector<S>] {
        &self.extreme_rays
    }

    pub fn facet_matrix(&self) -> Matrix<S> {
        Matrix::from_rows_unchecked(self.facets.clone(), self.dim)
    }

    pub fn facet_values(&self, x: &Vector<S>) -> Vec<S> {
        self.facets.iter().map(|f| f.dot(x)).collect()
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        self.facets.iter().all(|f| !f.dot(x).is_negative())
    }

    pub fn is_pointed(&self) -> bool {
        rank_of(&self.facets, self.dim) == self.dim
    }

    pub fn is_generating(&self) -> bool {
        rank_of(&self.generators, self.dim) == self.dim
    }

    /// Rank of the facets vanishing at `x`.
    pub fn active_rank(&self, x: &Vector<S>) -> usize {
        let active: Vec<Vector<S>> = tight(&self.facets, x).cloned().collect();
        rank_of(&active, self.dim)
    }

    /// True when `x` is a non-zero element spanning an extreme ray.
    pub fn is_extreme(&self, x: &Vector<S>) -> bool {
        !x.is_zero()
            && self.contains(x)
            && self.facets.iter().any(|f| f.dot(x).is_positive())
            && self.active_rank(x) + 1 == rank_of(&self.facets, self.dim)
    }
}

fn canonical_facets<S: Scalar>(mut facets: Vec<Vector<S>>) -> Vec<Vector<S>> {
    for f in facets.iter_mut() {
        *f = f.primitive();
    }
    facets.retain(|f| !f.is_zero());
    facets.sort();
    facets.dedup();
    facets
}

/// Facet description of the conic hull of `generators`.
///
/// Lineality is allowed here: a cone that is not full-dimensional gets both
/// `l` and `-l` for each functional `l` vanishing on it.
pub fn v_to_h<S: Scalar>(generators: &[Vector<S>], dim: usize) -> Result<Cone<S>> {
    let dual = h_to_v(generators, dim)?;
    let mut facets = dual.rays;
    for l in dual.lineality {
        facets.push(l.neg());
        facets.push(l);
    }
    let facets = canonical_facets(facets);
    let mut cone = Cone { dim, generators: generators.to_vec(), facets, extreme_rays: Vec::new() };
    let mut extreme: Vec<Vector<S>> = Vec::new();
    for g in generators {
        if cone.is_extreme(g) && !extreme.iter().any(|e| e.same_ray(g)) {
            extreme.push(g.clone());
        }
    }
    cone.extreme_rays = extreme;
    Ok(cone)
}

/// `V ∩ C` for a subspace `V` given by independent basis rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceCone<S> {
    /// The intersection in coordinates with respect to the basis rows.
    pub local: Cone<S>,
    /// The same generators mapped back into the ambient space.
    pub ambient: Vec<Vector<S>>,
}

/// Intersects a cone with `span(basis)`.
pub fn cone_subspace_intersection<S: Scalar>(cone: &Cone<S>, basis: &Matrix<S>) -> Result<SubspaceCone<S>> {
    if basis.ncols() != cone.dim {
        return Err(Error::DimensionMismatch { expected: cone.dim, found: basis.ncols() });
    }
    let k = basis.nrows();
    if rank_of(basis.rows(), cone.dim) != k {
        return Err(Error::PreconditionViolated("subspace basis rows are dependent".into()));
    }
    let local_constraints: Vec<Vector<S>> =
        cone.facets.iter().map(|f| basis.rows().iter().map(|b| f.dot(b)).collect()).collect();
    let gens = h_to_v(&local_constraints, k)?;
    let mut local_gens = gens.rays;
    for l in gens.lineality {
        local_gens.push(l.neg());
        local_gens.push(l);
    }
    let to_ambient = |t: &Vector<S>| -> Vector<S> {
        basis.rows().iter().zip(t.iter()).fold(Vector::zeros(cone.dim), |acc, (b, tj)| acc.add(&b.scale(tj)))
    };
    let ambient = local_gens.iter().map(to_ambient).collect();
    let local = v_to_h(&local_gens, k)?;
    Ok(SubspaceCone { local, ambient })
}

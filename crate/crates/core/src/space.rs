//! Validated pre-Riesz spaces and pointwise order notions.
//!
//! A space is `ℚⁿ` ordered by a polyhedral cone `X₊ = {x : f_i(x) >= 0}`.
//! Since `u >= a` holds exactly when `f_i(u) >= f_i(a)` for every facet, all
//! order-theoretic sets below (upper bounds, lower bounds, order intervals)
//! are H-polyhedra over the facet normals and every question reduces to
//! exact linear programming.

use crate::error::{Error, Result};
use crate::linalg::{rank_of, solve, Matrix, Vector};
use crate::lp::{lp, lp_from, symmetric_polytope_nonzero_point, HPolyhedron, LpResult, LpStatus, Sense};
use crate::polyhedral::{cone_subspace_intersection, v_to_h, Cone};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    pub pointed: bool,
    pub generating: bool,
    /// Pointed and generating; closed polyhedral cones are Archimedean.
    pub preriesz: bool,
}

/// `ℚⁿ` with a pointed, generating polyhedral cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSpace<S> {
    dim: usize,
    cone: Cone<S>,
    validation: Validation,
}

/// How disjointness is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Equality of the upper-bound sets of `{x+y, -x-y}` and `{x-y, y-x}`,
    /// decided by containment LPs.
    Oracle,
    /// `f_i(x)·f_i(y) = 0` for every facet.
    Fast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessVerdict<S> {
    pub disjoint: bool,
    /// For non-disjoint positive inputs: a common lower bound `w ∉ -X₊`.
    /// For other non-disjoint inputs: a point in exactly one of the two
    /// upper-bound sets.
    pub witness: Option<Vector<S>>,
    pub method: Method,
}

impl<S: Scalar> OrderedSpace<S> {
    /// Computes the facets of the cone generated by `generators` and checks
    /// that it is pointed and generating.
    pub fn validate(generators: &[Vector<S>], dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput("dimension must be positive"));
        }
        if let Some(bad) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        let cone = v_to_h(generators, dim)?;
        let pointed = cone.is_pointed();
        let generating = cone.is_generating();
        if !pointed {
            return Err(Error::NotPointed);
        }
        if !generating {
            return Err(Error::NotGenerating);
        }
        let validation = Validation { pointed, generating, preriesz: pointed && generating };
        Ok(Self { dim, cone, validation })
    }

    /// Convenience constructor from integer generators.
    pub fn from_ints(generators: &[&[i64]]) -> Result<Self> {
        let dim = generators.first().map_or(0, |g| g.len());
        let gens: Vec<Vector<S>> = generators.iter().map(|g| Vector::from_ints(g)).collect();
        Self::validate(&gens, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cone(&self) -> &Cone<S> {
        &self.cone
    }

    pub fn facets(&self) -> &[Vector<S>] {
        self.cone.facets()
    }

    pub fn validation(&self) -> Validation {
        self.validation
    }

    pub fn facet_values(&self, x: &Vector<S>) -> Vec<S> {
        self.cone.facet_values(x)
    }

    pub fn check_dim(&self, x: &Vector<S>) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        Ok(())
    }

    fn check_all(&self, xs: &[Vector<S>]) -> Result<()> {
        xs.iter().try_for_each(|x| self.check_dim(x))
    }

    /// `x ∈ X₊`.
    pub fn contains_positive(&self, x: &Vector<S>) -> bool {
        self.cone.contains(x)
    }

    /// `x <= y`, i.e. `y - x ∈ X₊`.
    pub fn leq(&self, x: &Vector<S>, y: &Vector<S>) -> bool {
        self.cone.contains(&y.sub(x))
    }

    /// `{u : f_i(u) >= max_a f_i(a)}`, the set of upper bounds of `points`.
    pub fn upper_bounds(&self, points: &[Vector<S>]) -> Result<HPolyhedron<S>> {
        if points.is_empty() {
            return Err(Error::EmptyInput("upper bounds of an empty set"));
        }
        self.check_all(points)?;
        let offsets = self.facets().iter().map(|f| points.iter().map(|a| f.dot(a)).max().expect("non-empty")).collect();
        HPolyhedron::new(self.dim, self.facets().to_vec(), offsets)
    }

    /// `{z : f_i(z) <= min_a f_i(a)}`, the set of lower bounds of `points`.
    pub fn lower_bounds(&self, points: &[Vector<S>]) -> Result<HPolyhedron<S>> {
        if points.is_empty() {
            return Err(Error::EmptyInput("lower bounds of an empty set"));
        }
        self.check_all(points)?;
        let normals = self.facets().iter().map(Vector::neg).collect();
        let offsets =
            self.facets().iter().map(|f| -points.iter().map(|a| f.dot(a)).min().expect("non-empty")).collect();
        HPolyhedron::new(self.dim, normals, offsets)
    }

    /// The order interval `[lo, hi]`.
    pub fn order_interval(&self, lo: &Vector<S>, hi: &Vector<S>) -> HPolyhedron<S> {
        let mut p = HPolyhedron::universe(self.dim);
        for f in self.facets() {
            p.push(f.clone(), f.dot(lo));
            p.push_upper(f, f.dot(hi));
        }
        p
    }

    /// Optimises over a polyhedron, starting the simplex from the first point
    /// of the ray through `±Σ atoms` that satisfies every row, when there is one.
    fn lp_along_axis(
        &self,
        objective: &Vector<S>,
        sense: Sense,
        poly: &HPolyhedron<S>,
        upward: bool,
    ) -> Result<LpResult<S>> {
        let mut axis = self.atoms().iter().fold(Vector::zeros(self.dim), |acc, a| acc.add(a));
        if !upward {
            axis = axis.neg();
        }
        let mut t = S::zero();
        for (n, b) in poly.normals().iter().zip(poly.offsets()) {
            if b.is_positive() {
                let rate = n.dot(&axis);
                if !rate.is_positive() {
                    return lp(objective, sense, poly);
                }
                t = t.max(b.clone() / rate);
            }
        }
        let res = lp_from(objective, sense, poly, &axis.scale(&t))?;
        debug_assert!(res.verify(objective, sense, poly));
        Ok(res)
    }

    /// Solves `f_i(g) = targets[i]` and returns `g` if consistent.
    fn solve_facet_values(&self, targets: Vec<S>) -> Result<Option<Vector<S>>> {
        solve(&self.cone.facet_matrix(), &Vector::new(targets))
    }

    /// Greatest lower bound of `points`, if it exists.
    ///
    /// With `L` the lower bounds and `c_i = max_L f_i`, an infimum `g` must
    /// satisfy `f_i(g) = c_i` for all `i`; conversely any such `g` lies in
    /// `L` and dominates it.
    pub fn infimum(&self, points: &[Vector<S>]) -> Result<Option<Vector<S>>> {
        let lower = self.lower_bounds(points)?;
        let mut targets = Vec::with_capacity(self.facets().len());
        for f in self.facets() {
            let res = self.lp_along_axis(f, Sense::Max, &lower, false)?;
            targets.push(
                res.value
                    .ok_or_else(|| Error::TheoremViolation("lower-bound set is empty or unbounded above".into()))?,
            );
        }
        self.solve_facet_values(targets)
    }

    /// Least upper bound of `points`, if it exists.
    pub fn supremum(&self, points: &[Vector<S>]) -> Result<Option<Vector<S>>> {
        let upper = self.upper_bounds(points)?;
        let mut targets = Vec::with_capacity(self.facets().len());
        for f in self.facets() {
            let res = self.lp_along_axis(f, Sense::Min, &upper, true)?;
            targets.push(
                res.value
                    .ok_or_else(|| Error::TheoremViolation("upper-bound set is empty or unbounded below".into()))?,
            );
        }
        self.solve_facet_values(targets)
    }

    /// `{u : f_i(u) >= |f_i(v)|}`, the upper bounds of `{v, -v}`.
    fn symmetric_upper_bounds(&self, v: &Vector<S>) -> HPolyhedron<S> {
        let offsets = self.facets().iter().map(|f| f.dot(v).abs()).collect();
        HPolyhedron::new(self.dim, self.facets().to_vec(), offsets).expect("facet dimensions agree")
    }

    /// Returns a point of `a` outside `b` when `a ⊄ b`; both share the facet
    /// normals, so containment is one minimisation per facet.
    fn containment_gap(&self, a: &HPolyhedron<S>, b: &HPolyhedron<S>) -> Result<Option<Vector<S>>> {
        for (f, bound) in self.facets().iter().zip(b.offsets()) {
            let res = self.lp_along_axis(f, Sense::Min, a, true)?;
            match res.status {
                LpStatus::Optimal => {
                    if res.value.as_ref().expect("optimal value") < bound {
                        return Ok(res.point);
                    }
                }
                _ => return Err(Error::TheoremViolation("upper-bound set is empty or unbounded below".into())),
            }
        }
        Ok(None)
    }

    /// Decides `x ⊥ y` without producing a witness.
    pub fn disjoint(&self, x: &Vector<S>, y: &Vector<S>, method: Method) -> Result<bool> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(match method {
            Method::Oracle => {
                let sum = self.symmetric_upper_bounds(&x.add(y));
                let diff = self.symmetric_upper_bounds(&x.sub(y));
                self.containment_gap(&sum, &diff)?.is_none() && self.containment_gap(&diff, &sum)?.is_none()
            }
            Method::Fast => {
                let fx = self.facet_values(x);
                self.facets().iter().zip(&fx).all(|(f, a)| a.is_zero() || f.dot(y).is_zero())
            }
        })
    }

    /// Decides `x ⊥ y`, with a witness when they are not disjoint.
    pub fn is_disjoint(&self, x: &Vector<S>, y: &Vector<S>, method: Method) -> Result<DisjointnessVerdict<S>> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let sum = self.symmetric_upper_bounds(&x.add(y));
        let diff = self.symmetric_upper_bounds(&x.sub(y));
        let (disjoint, gap) = match method {
            Method::Oracle => {
                let gap = match self.containment_gap(&sum, &diff)? {
                    Some(p) => Some(p),
                    None => self.containment_gap(&diff, &sum)?,
                };
                (gap.is_none(), gap)
            }
            Method::Fast => {
                let fx = self.facet_values(x);
                let fy = self.facet_values(y);
                let disjoint = fx.iter().zip(&fy).all(|(a, b)| (a.clone() * b.clone()).is_zero());
                (disjoint, None)
            }
        };
        if disjoint {
            return Ok(DisjointnessVerdict { disjoint, witness: None, method });
        }
        let witness = if self.contains_positive(x) && self.contains_positive(y) {
            Some(self.lower_bound_witness(x, y)?)
        } else {
            match gap {
                Some(p) => Some(p),
                None => match self.containment_gap(&sum, &diff)? {
                    Some(p) => Some(p),
                    None => self.containment_gap(&diff, &sum)?,
                },
            }
        };
        Ok(DisjointnessVerdict { disjoint, witness, method })
    }

    /// A common lower bound of positive `x`, `y` that is not `<= 0`.
    ///
    /// First maximises `Σ f_i` over the lower bounds; if that optimum is
    /// still `<= 0`, maximises each facet in turn.
    fn lower_bound_witness(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        let lower = self.lower_bounds(&[x.clone(), y.clone()])?;
        let total = self.facets().iter().fold(Vector::zeros(self.dim), |acc, f| acc.add(f));
        let not_below_zero = |w: &Vector<S>| self.facets().iter().any(|f| f.dot(w).is_positive());
        let res = self.lp_along_axis(&total, Sense::Max, &lower, false)?;
        if let Some(w) = res.point.filter(|w| not_below_zero(w)) {
            return Ok(w);
        }
        for f in self.facets() {
            let res = self.lp_along_axis(f, Sense::Max, &lower, false)?;
            if let Some(w) = res.point.filter(|w| not_below_zero(w)) {
                return Ok(w);
            }
        }
        Err(Error::TheoremViolation(format!("{x} and {y} are not disjoint yet every common lower bound is <= 0")))
    }

    fn require_positive(&self, xs: &[&Vector<S>]) -> Result<()> {
        for x in xs {
            self.check_dim(x)?;
            if !self.contains_positive(x) {
                return Err(Error::NotPositive);
            }
        }
        Ok(())
    }

    /// `f_i(z) <= min(f_i(x), f_i(y))` for every facet, plus `f_i(z) >= -that`
    /// when `symmetric`, else `f_i(z) >= 0`. Same set as intersecting the two
    /// intervals, with half the rows.
    fn meet_of_intervals(&self, x: &Vector<S>, y: &Vector<S>, symmetric: bool) -> HPolyhedron<S> {
        let mut p = HPolyhedron::universe(self.dim);
        for f in self.facets() {
            let cap = f.dot(x).min(f.dot(y));
            let floor = if symmetric { -cap.clone() } else { S::zero() };
            p.push(f.clone(), floor);
            p.push_upper(f, cap);
        }
        p
    }

    /// `[0,x] ∩ [0,y]`.
    pub fn interval_meet(&self, x: &Vector<S>, y: &Vector<S>) -> HPolyhedron<S> {
        self.meet_of_intervals(x, y, false)
    }

    /// `[-x,x] ∩ [-y,y]`.
    pub fn symmetric_interval_meet(&self, x: &Vector<S>, y: &Vector<S>) -> HPolyhedron<S> {
        self.meet_of_intervals(x, y, true)
    }

    /// D-disjointness: `[0,x] ∩ [0,y] = {0}` for positive `x`, `y`.
    pub fn is_d_disjoint(&self, x: &Vector<S>, y: &Vector<S>) -> Result<bool> {
        self.require_positive(&[x, y])?;
        // the meet lies in the cone, where Σ f_i vanishes only at 0
        let meet = self.interval_meet(x, y);
        let total = self.facets().iter().fold(Vector::zeros(self.dim), |acc, f| acc.add(f));
        let res = lp(&total, Sense::Max, &meet)?;
        debug_assert!(res.verify(&total, Sense::Max, &meet));
        Ok(res.value.ok_or_else(|| Error::TheoremViolation("order interval is unbounded".into()))?.is_zero())
    }

    /// `[-x,x] ∩ [-y,y] = {0}` for positive `x`, `y`.
    pub fn is_symmetric_interval_disjoint(&self, x: &Vector<S>, y: &Vector<S>) -> Result<bool> {
        Ok(self.symmetric_interval_point(x, y)?.is_none())
    }

    /// A non-zero point of `[-x,x] ∩ [-y,y]`, if there is one.
    pub fn symmetric_interval_point(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Option<Vector<S>>> {
        self.require_positive(&[x, y])?;
        symmetric_polytope_nonzero_point(&self.symmetric_interval_meet(x, y), self.facets())
    }

    /// Representatives of the extreme rays, taken from the generators.
    pub fn atoms(&self) -> &[Vector<S>] {
        self.cone.extreme_rays()
    }

    /// `a` spans an extreme ray. For atoms the order interval `[-a,a]` is also
    /// checked to lie on the line through `a`.
    pub fn is_atom(&self, a: &Vector<S>) -> Result<bool> {
        self.check_dim(a)?;
        if !self.cone.is_extreme(a) {
            return Ok(false);
        }
        let interval = self.order_interval(&a.neg(), a);
        let annihilators = crate::linalg::nullspace(&Matrix::from_rows_unchecked(vec![a.clone()], self.dim));
        for h in annihilators.rows() {
            for sense in [Sense::Max, Sense::Min] {
                let res = lp(h, sense, &interval)?;
                if res.value.as_ref().is_none_or(|v| !v.is_zero()) {
                    return Err(Error::TheoremViolation(format!("[-a,a] leaves the line through the atom {a}")));
                }
            }
        }
        Ok(true)
    }

    /// `span(v) ⊥ span(w)`, tested on basis pairs with the oracle.
    pub fn subspaces_disjoint(&self, v: &Matrix<S>, w: &Matrix<S>) -> Result<bool> {
        for a in v.rows() {
            for b in w.rows() {
                if !self.disjoint(a, b, Method::Oracle)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Generators of `span(basis) ∩ X₊` in ambient coordinates.
    pub fn positive_part(&self, basis: &Matrix<S>) -> Result<Vec<Vector<S>>> {
        Ok(cone_subspace_intersection(&self.cone, basis)?.ambient)
    }

    /// `span(V ∩ X₊) = V`.
    pub fn subspace_is_directed(&self, basis: &Matrix<S>) -> Result<bool> {
        let positive = self.positive_part(basis)?;
        Ok(rank_of(&positive, self.dim) == rank_of(basis.rows(), self.dim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Rat;

    fn v(x: &[i64]) -> Vector<Rat> {
        Vector::from_ints(x)
    }

    #[test]
    fn validation_examples() {
        let s = fixtures::standard(3);
        assert_eq!(s.validation(), Validation { pointed: true, generating: true, preriesz: true });
        assert_eq!(fixtures::four_ray().facets().len(), 4);
        assert_eq!(OrderedSpace::<Rat>::from_ints(&[&[1, 0], &[-1, 0]]), Err(Error::NotPointed));
        assert_eq!(OrderedSpace::<Rat>::from_ints(&[&[1, 0, 0], &[0, 1, 0]]), Err(Error::NotGenerating));
    }

    #[test]
    fn order_examples() {
        let x = fixtures::four_ray();
        assert!(x.leq(&v(&[0, 0, 0]), &v(&[1, 0, 1])));
        assert!(x.leq(&v(&[1, 1, 0]), &v(&[1, 0, 1])));
        assert!(!x.contains_positive(&v(&[1, 1, 0])));
    }

    #[test]
    fn upper_bounds_examples() {
        let x = fixtures::four_ray();
        let ub = x.upper_bounds(&[v(&[0, 0, 0])]).unwrap();
        assert!(ub.offsets().iter().all(|b| *b == Rat::from_int(0)));
        // facets sorted as f12, f41, f23, f34; f(v1+v2) = (0, 2, 2, 4)
        let w = v(&[1, 1, 2]);
        let ub = x.upper_bounds(&[w.clone(), w.neg()]).unwrap();
        let expected: Vec<Rat> = [0, 2, 2, 4].iter().map(|&k| Rat::from_int(k)).collect();
        assert_eq!(ub.offsets(), expected.as_slice());
        let p = v(&[2, -1, 5]);
        let ub = x.upper_bounds(std::slice::from_ref(&p)).unwrap();
        assert!(ub.contains(&p));
        assert!(ub.contains(&p.add(&v(&[0, 1, 1]))));
        assert!(!ub.contains(&p.add(&v(&[1, 1, 0]))));
    }

    #[test]
    fn infimum_examples() {
        let x = fixtures::four_ray();
        let p = v(&[3, -1, 7]);
        assert_eq!(x.infimum(std::slice::from_ref(&p)).unwrap(), Some(p));
        let std2 = fixtures::standard(2);
        assert_eq!(std2.infimum(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), Some(v(&[0, 0])));
        assert_eq!(x.infimum(&[v(&[1, 0, 1]), v(&[0, 1, 1])]).unwrap(), None);
        assert_eq!(std2.supremum(&[v(&[1, 0]), v(&[0, 1])]).unwrap(), Some(v(&[1, 1])));
    }

    #[test]
    fn disjointness_examples() {
        let x = fixtures::four_ray();
        let [v1, v2, v3, _] = fixtures::four_ray_vectors();
        for method in [Method::Oracle, Method::Fast] {
            let verdict = x.is_disjoint(&v1, &v2, method).unwrap();
            assert!(!verdict.disjoint);
            assert_eq!(verdict.witness, Some(v(&[1, 1, 0])));
            assert!(x.is_disjoint(&v1, &v3, method).unwrap().disjoint);
            assert!(!x.is_disjoint(&v1, &v1, method).unwrap().disjoint);
            assert!(x.is_disjoint(&v(&[0, 0, 0]), &v1, method).unwrap().disjoint);
        }
    }

    #[test]
    fn general_witness_separates_upper_bound_sets() {
        let x = fixtures::four_ray();
        let a = v(&[1, 1, 0]);
        let b = v(&[1, 0, 0]);
        assert!(x.is_disjoint(&a, &v(&[1, -1, 0]), Method::Oracle).unwrap().disjoint);
        let verdict = x.is_disjoint(&a, &b, Method::Oracle).unwrap();
        assert!(!verdict.disjoint);
        let w = verdict.witness.unwrap();
        let s = x.upper_bounds(&[a.add(&b), a.add(&b).neg()]).unwrap();
        let d = x.upper_bounds(&[a.sub(&b), b.sub(&a)]).unwrap();
        assert_ne!(s.contains(&w), d.contains(&w));
    }

    #[test]
    fn d_and_symmetric_disjointness() {
        let x = fixtures::four_ray();
        let [v1, v2, v3, v4] = fixtures::four_ray_vectors();
        let w = v1.add(&v2);
        let wt = v3.add(&v4);
        assert!(x.is_d_disjoint(&v1, &v2).unwrap());
        assert!(x.is_d_disjoint(&w, &wt).unwrap());
        assert!(!x.is_d_disjoint(&v1, &v1).unwrap());
        assert!(x.is_symmetric_interval_disjoint(&v1, &v2).unwrap());
        assert!(!x.is_symmetric_interval_disjoint(&w, &wt).unwrap());
        assert!(x.symmetric_interval_meet(&w, &wt).contains(&v(&[1, -1, 0])));
        assert!(x.is_symmetric_interval_disjoint(&w, &v(&[0, 0, 0])).unwrap());
        assert_eq!(x.is_d_disjoint(&v(&[1, 1, 0]), &v1), Err(Error::NotPositive));
    }

    #[test]
    fn atom_examples() {
        let x = fixtures::four_ray();
        assert_eq!(x.atoms(), fixtures::four_ray_vectors().as_slice());
        let [v1, v2, ..] = fixtures::four_ray_vectors();
        assert!(x.is_atom(&v1).unwrap());
        assert!(!x.is_atom(&v1.add(&v2)).unwrap());
        let s = fixtures::standard(3);
        assert_eq!(s.atoms(), &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]);
    }

    #[test]
    fn subspace_examples() {
        let x = fixtures::four_ray();
        let l1 = Matrix::from_ints(&[&[1, 0, 1]]);
        let l3 = Matrix::from_ints(&[&[-1, 0, 1]]);
        assert!(x.subspaces_disjoint(&l1, &l3).unwrap());
        assert!(!x.subspace_is_directed(&Matrix::from_ints(&[&[1, 1, 0]])).unwrap());
        assert!(x.subspace_is_directed(&l1).unwrap());
    }
}

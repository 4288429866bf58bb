//! Exact linear programming over H-polyhedra.
//!
//! Problems have the form `optimise c·x subject to n_i·x >= b_i` with free
//! variables `x`. They are solved by a dense two-phase tableau simplex with
//! Bland's rule on the standard form `x = x⁺ - x⁻`, `n_i·x - s_i = b_i`.
//! Every answer carries an exact certificate that [`LpResult::verify`] checks:
//!
//! * optimal: dual multipliers `y >= 0` with `Σ y_i n_i = σc` and
//!   `σ Σ y_i b_i = c·x`, where `σ = 1` for minimisation and `-1` for
//!   maximisation;
//! * infeasible: a Farkas vector `y >= 0` with `Σ y_i n_i = 0`, `Σ y_i b_i > 0`;
//! * unbounded: a ray `d` with `n_i·d >= 0` and `σ c·d < 0`, plus a feasible
//!   point.
//!
//! Optimal points are moved to a vertex of the optimal face whenever the
//! constraint normals span the space, which makes witnesses reproducible.

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank_of, Matrix, Vector};
use crate::scalar::Scalar;

/// The set `{x : normals[i]·x >= offsets[i] for all i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron<S> {
    dim: usize,
    normals: Vec<Vector<S>>,
    offsets: Vec<S>,
}

impl<S: Scalar> HPolyhedron<S> {
    pub fn new(dim: usize, normals: Vec<Vector<S>>, offsets: Vec<S>) -> Result<Self> {
        if normals.len() != offsets.len() {
            return Err(Error::DimensionMismatch { expected: normals.len(), found: offsets.len() });
        }
        if let Some(bad) = normals.iter().find(|n| n.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        Ok(Self { dim, normals, offsets })
    }

    /// The whole space.
    pub fn universe(dim: usize) -> Self {
        Self { dim, normals: Vec::new(), offsets: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Vector<S>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[S] {
        &self.offsets
    }

    /// Adds the constraint `normal·x >= offset`.
    pub fn push(&mut self, normal: Vector<S>, offset: S) {
        debug_assert_eq!(normal.dim(), self.dim);
        self.normals.push(normal);
        self.offsets.push(offset);
    }

    /// Adds `normal·x <= bound`.
    pub fn push_upper(&mut self, normal: &Vector<S>, bound: S) {
        self.push(normal.neg(), -bound);
    }

    /// Adds `normal·x = value`.
    pub fn push_equal(&mut self, normal: &Vector<S>, value: S) {
        self.push(normal.clone(), value.clone());
        self.push_upper(normal, value);
    }

    pub fn contains(&self, x: &Vector<S>) -> bool {
        self.normals.iter().zip(&self.offsets).all(|(n, b)| n.dot(x) >= *b)
    }

    /// Intersection with another polyhedron of the same dimension.
    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (n, b) in other.normals.iter().zip(&other.offsets) {
            out.push(n.clone(), b.clone());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpResult<S> {
    pub status: LpStatus,
    pub value: Option<S>,
    pub point: Option<Vector<S>>,
    pub certificate: Option<Vector<S>>,
}

impl<S: Scalar> LpResult<S> {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// Checks the certificate exactly against the problem it claims to solve.
    pub fn verify(&self, objective: &Vector<S>, sense: Sense, poly: &HPolyhedron<S>) -> bool {
        let sigma = match sense {
            Sense::Min => S::one(),
            Sense::Max => -S::one(),
        };
        let combine = |y: &Vector<S>| -> Vector<S> {
            poly.normals.iter().zip(y.iter()).fold(Vector::zeros(poly.dim), |acc, (n, yi)| acc.add(&n.scale(yi)))
        };
        let dual_value = |y: &Vector<S>| -> S {
            poly.offsets.iter().zip(y.iter()).fold(S::zero(), |acc, (b, yi)| acc + b.clone() * yi.clone())
        };
        match self.status {
            LpStatus::Optimal => {
                let (Some(x), Some(y), Some(v)) = (&self.point, &self.certificate, &self.value) else {
                    return false;
                };
                poly.contains(x)
                    && y.dim() == poly.len()
                    && y.iter().all(|yi| !yi.is_negative())
                    && combine(y) == objective.scale(&sigma)
                    && dual_value(y) * sigma == *v
                    && objective.dot(x) == *v
            }
            LpStatus::Infeasible => {
                let Some(y) = &self.certificate else { return false };
                y.dim() == poly.len()
                    && y.iter().all(|yi| !yi.is_negative())
                    && combine(y).is_zero()
                    && dual_value(y).is_positive()
            }
            LpStatus::Unbounded => {
                let (Some(x), Some(d)) = (&self.point, &self.certificate) else { return false };
                poly.contains(x)
                    && poly.normals.iter().all(|n| !n.dot(d).is_negative())
                    && (objective.dot(d) * sigma).is_negative()
            }
        }
    }
}

enum Standard<S> {
    Optimal { z: Vec<S>, duals: Vec<S> },
    Unbounded { z: Vec<S>, direction: Vec<S> },
    Infeasible { farkas: Vec<S> },
}

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
    width: usize,
}

enum Phase {
    Optimal,
    Unbounded(usize),
}

impl<S: Scalar> Tableau<S> {
    fn reduced_costs(&self, cost: &[S]) -> Vec<S> {
        (0..self.width)
            .map(|j| {
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(cost[j].clone(), |acc, (row, &bj)| acc - cost[bj].clone() * row[j].clone())
            })
            .collect()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = S::one() / self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v = std::mem::replace(v, S::zero()) * inv.clone();
            }
        }
        self.rhs[r] = std::mem::replace(&mut self.rhs[r], S::zero()) * inv;
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            let row = &mut self.rows[i];
            for &j in &nonzero {
                row[j] = std::mem::replace(&mut row[j], S::zero()) - f.clone() * pivot_row[j].clone();
            }
            self.rhs[i] = std::mem::replace(&mut self.rhs[i], S::zero()) - f * self.rhs[r].clone();
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Largest-coefficient pricing, falling back for good to Bland's rule
    /// (lowest-index improving column, ratio ties broken by the lowest basic
    /// index) after a run of degenerate pivots, which rules out cycling.
    fn run(&mut self, cost: &[S], allowed: usize) -> Phase {
        const DEGENERATE_LIMIT: usize = 8;
        let mut reduced = self.reduced_costs(cost);
        let mut degenerate = 0;
        loop {
            let bland = degenerate >= DEGENERATE_LIMIT;
            let enter = if bland {
                (0..allowed).find(|&j| reduced[j].is_negative())
            } else {
                (0..allowed).filter(|&j| reduced[j].is_negative()).min_by(|&a, &b| reduced[a].cmp(&reduced[b]))
            };
            let Some(enter) = enter else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((k, best)) => {
                        if ratio < best || (ratio == best && self.basis[i] < self.basis[k]) {
                            Some((i, ratio))
                        } else {
                            Some((k, best))
                        }
                    }
                };
            }
            let Some((r, step)) = leave else {
                return Phase::Unbounded(enter);
            };
            if step.is_zero() {
                degenerate += 1;
            } else if !bland {
                degenerate = 0;
            }
            self.pivot(r, enter);
            let d = reduced[enter].clone();
            for (rj, pj) in reduced.iter_mut().zip(&self.rows[r]) {
                if !pj.is_zero() {
                    *rj = std::mem::replace(rj, S::zero()) - d.clone() * pj.clone();
                }
            }
        }
    }

    fn basic_solution(&self, len: usize) -> Vec<S> {
        let mut z = vec![S::zero(); len];
        for (i, &bj) in self.basis.iter().enumerate() {
            if bj < len {
                z[bj] = self.rhs[i].clone();
            }
        }
        z
    }
}

/// `min c·z` subject to `A z = b`, `z >= 0`.
fn solve_standard<S: Scalar>(a: &[Vec<S>], b: &[S], c: &[S]) -> Standard<S> {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        // zero rows are flipped too, so a surplus column can start basic
        let flip = !bi.is_positive();
        signs.push(if flip { -S::one() } else { S::one() });
        let mut t: Vec<S> = row.iter().map(|v| if flip { -v.clone() } else { v.clone() }).collect();
        t.extend((0..m).map(|k| if k == i { S::one() } else { S::zero() }));
        rows.push(t);
        rhs.push(bi.abs());
    }
    // Start from a structural unit column where a row has one (typically a
    // surplus variable of a constraint the origin satisfies); artificials
    // cover the remaining rows.
    let mut basis: Vec<usize> = (n..width).collect();
    let mut used = vec![false; n];
    for (i, slot) in basis.iter_mut().enumerate() {
        let unit = (0..n).find(|&j| {
            !used[j] && rows[i][j] == S::one() && rows.iter().enumerate().all(|(k, r)| k == i || r[j].is_zero())
        });
        if let Some(j) = unit {
            used[j] = true;
            *slot = j;
        }
    }
    let mut tab = Tableau { rows, rhs, basis, width };

    let phase1_cost: Vec<S> = (0..width).map(|j| if j < n { S::zero() } else { S::one() }).collect();
    match tab.run(&phase1_cost, n) {
        Phase::Optimal => {}
        Phase::Unbounded(_) => unreachable!("phase one objective is bounded below by zero"),
    }
    let infeasibility =
        tab.basis.iter().zip(&tab.rhs).filter(|(&bj, _)| bj >= n).fold(S::zero(), |acc, (_, v)| acc + v.clone());
    if infeasibility.is_positive() {
        let reduced = tab.reduced_costs(&phase1_cost);
        let farkas = (0..m).map(|i| (S::one() - reduced[n + i].clone()) * signs[i].clone()).collect();
        return Standard::Infeasible { farkas };
    }
    // Artificials still basic sit at level zero; pivot them out where the
    // row has a structural entry, otherwise the row is redundant and stays.
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }

    let mut cost: Vec<S> = c.to_vec();
    cost.extend((0..m).map(|_| S::zero()));
    match tab.run(&cost, n) {
        Phase::Optimal => {
            let reduced = tab.reduced_costs(&cost);
            let duals = (0..m).map(|i| -reduced[n + i].clone() * signs[i].clone()).collect();
            Standard::Optimal { z: tab.basic_solution(n), duals }
        }
        Phase::Unbounded(enter) => {
            let mut direction = vec![S::zero(); n];
            direction[enter] = S::one();
            for (i, &bj) in tab.basis.iter().enumerate() {
                if bj < n {
                    direction[bj] = -tab.rows[i][enter].clone();
                }
            }
            Standard::Unbounded { z: tab.basic_solution(n), direction }
        }
    }
}

/// Solves `optimise objective·x` over `constraints` exactly.
pub fn lp<S: Scalar>(objective: &Vector<S>, sense: Sense, constraints: &HPolyhedron<S>) -> Result<LpResult<S>> {
    let n = constraints.dim;
    if objective.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: objective.dim() });
    }
    let m = constraints.len();
    let cmin = match sense {
        Sense::Min => objective.clone(),
        Sense::Max => objective.neg(),
    };
    let a: Vec<Vec<S>> = constraints
        .normals
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<S> = row.iter().cloned().collect();
            r.extend(row.iter().map(|v| -v.clone()));
            r.extend((0..m).map(|k| if k == i { -S::one() } else { S::zero() }));
            r
        })
        .collect();
    let mut c: Vec<S> = cmin.iter().cloned().collect();
    c.extend(cmin.iter().map(|v| -v.clone()));
    c.extend((0..m).map(|_| S::zero()));

    let split = |z: &[S]| -> Vector<S> { (0..n).map(|j| z[j].clone() - z[n + j].clone()).collect() };

    Ok(match solve_standard(&a, &constraints.offsets, &c) {
        Standard::Optimal { z, duals } => {
            let mut x = split(&z);
            if rank_of(&constraints.normals, n) == n {
                x = purify(constraints, &cmin, x);
            }
            LpResult {
                status: LpStatus::Optimal,
                value: Some(objective.dot(&x)),
                point: Some(x),
                certificate: Some(Vector::new(duals)),
            }
        }
        Standard::Unbounded { z, direction } => LpResult {
            status: LpStatus::Unbounded,
            value: None,
            point: Some(split(&z)),
            certificate: Some(split(&direction)),
        },
        Standard::Infeasible { farkas } => {
            LpResult { status: LpStatus::Infeasible, value: None, point: None, certificate: Some(Vector::new(farkas)) }
        }
    })
}

/// Solves the same problem as [`lp`] from a known feasible `start`, by
/// shifting the origin there so the simplex needs no phase-one work for rows
/// the start satisfies.
pub fn lp_from<S: Scalar>(
    objective: &Vector<S>,
    sense: Sense,
    constraints: &HPolyhedron<S>,
    start: &Vector<S>,
) -> Result<LpResult<S>> {
    if !constraints.contains(start) {
        return Err(Error::PreconditionViolated("start point is not feasible".into()));
    }
    let offsets = constraints.normals.iter().zip(&constraints.offsets).map(|(n, b)| b.clone() - n.dot(start)).collect();
    let shifted = HPolyhedron { dim: constraints.dim, normals: constraints.normals.clone(), offsets };
    let mut res = lp(objective, sense, &shifted)?;
    if let Some(x) = res.point.take() {
        res.point = Some(x.add(start));
    }
    if let Some(v) = res.value.take() {
        res.value = Some(v + objective.dot(start));
    }
    Ok(res)
}

/// Walks from an optimal point to a vertex of the optimal face. Requires the
/// normals to span the space so that the polyhedron contains no line.
fn purify<S: Scalar>(poly: &HPolyhedron<S>, cmin: &Vector<S>, mut x: Vector<S>) -> Vector<S> {
    let n = poly.dim;
    loop {
        let active: Vec<Vector<S>> =
            poly.normals.iter().zip(&poly.offsets).filter(|(a, b)| a.dot(&x) == **b).map(|(a, _)| a.clone()).collect();
        let kernel = nullspace(&Matrix::from_rows_unchecked(active, n));
        let Some(d) = kernel.rows().first().cloned() else {
            return x;
        };
        debug_assert!(cmin.dot(&d).is_zero(), "optimal point has an improving direction");
        let step = |dir: &Vector<S>| -> Option<S> {
            poly.normals
                .iter()
                .zip(&poly.offsets)
                .filter_map(|(a, b)| {
                    let rate = a.dot(dir);
                    rate.is_negative().then(|| (a.dot(&x) - b.clone()) / -rate)
                })
                .min()
        };
        let (dir, t) = match step(&d) {
            Some(t) => (d, t),
            None => {
                let back = d.neg();
                let t = step(&back).expect("spanning normals bound every line");
                (back, t)
            }
        };
        x = x.add(&dir.scale(&t));
    }
}

/// Searches for a non-zero point of a polyhedron known to contain the origin:
/// every functional of a spanning family is maximised and minimised, and the
/// first optimum (or unbounded ray) off zero is returned.
pub fn polytope_nonzero_point<S: Scalar>(
    p: &HPolyhedron<S>,
    spanning_functionals: &[Vector<S>],
) -> Result<Option<Vector<S>>> {
    if p.offsets.iter().any(|b| b.is_positive()) {
        return Err(Error::PreconditionViolated("the origin is not in the polyhedron".into()));
    }
    // a basis of the family suffices: p = {0} iff each basis functional vanishes on p
    let basis = independent_subset(spanning_functionals, p.dim)?;
    for h in basis {
        for sense in [Sense::Max, Sense::Min] {
            let res = lp(h, sense, p)?;
            debug_assert!(res.verify(h, sense, p));
            match res.status {
                LpStatus::Optimal => {
                    let x = res.point.expect("optimal result has a point");
                    if !x.is_zero() && !h.dot(&x).is_zero() {
                        return Ok(Some(x));
                    }
                }
                // offsets are <= 0 and n_i·d >= 0, so the ray itself lies in p
                LpStatus::Unbounded => {
                    let d = res.certificate.expect("unbounded result has a ray");
                    return Ok(Some(d));
                }
                LpStatus::Infeasible => {
                    unreachable!("the origin is feasible")
                }
            }
        }
    }
    Ok(None)
}

/// As [`polytope_nonzero_point`] for a polyhedron with `p = -p`, where one
/// maximisation per functional suffices.
pub fn symmetric_polytope_nonzero_point<S: Scalar>(
    p: &HPolyhedron<S>,
    spanning_functionals: &[Vector<S>],
) -> Result<Option<Vector<S>>> {
    if p.offsets.iter().any(|b| b.is_positive()) {
        return Err(Error::PreconditionViolated("the origin is not in the polyhedron".into()));
    }
    for h in independent_subset(spanning_functionals, p.dim)? {
        let res = lp(h, Sense::Max, p)?;
        debug_assert!(res.verify(h, Sense::Max, p));
        match res.status {
            LpStatus::Optimal => {
                if res.value.as_ref().is_some_and(|v| v.is_positive()) {
                    return Ok(res.point);
                }
            }
            LpStatus::Unbounded => return Ok(res.certificate),
            LpStatus::Infeasible => unreachable!("the origin is feasible"),
        }
    }
    Ok(None)
}

/// A basis of the dual space drawn from `family`, in order.
fn independent_subset<S: Scalar>(family: &[Vector<S>], dim: usize) -> Result<Vec<&Vector<S>>> {
    let mut basis: Vec<&Vector<S>> = Vec::with_capacity(dim);
    let mut rows: Vec<Vector<S>> = Vec::with_capacity(dim);
    for h in family {
        rows.push(h.clone());
        if rank_of(&rows, dim) == rows.len() {
            basis.push(h);
        } else {
            rows.pop();
        }
        if basis.len() == dim {
            return Ok(basis);
        }
    }
    Err(Error::PreconditionViolated("functionals do not span the dual space".into()))
}

/// Decides `p = {0}` for a polyhedron known to contain the origin, by checking
/// that every functional in a spanning family has maximum and minimum zero.
pub fn polytope_is_zero<S: Scalar>(p: &HPolyhedron<S>, spanning_functionals: &[Vector<S>]) -> Result<bool> {
    Ok(polytope_nonzero_point(p, spanning_functionals)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn v(x: &[i64]) -> Vector<Rat> {
        Vector::from_ints(x)
    }

    fn poly(dim: usize, rows: &[(&[i64], i64)]) -> HPolyhedron<Rat> {
        HPolyhedron::new(
            dim,
            rows.iter().map(|(n, _)| v(n)).collect(),
            rows.iter().map(|(_, b)| Rat::from_int(*b)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn unbounded_half_line() {
        let p = poly(1, &[(&[1], 0)]);
        let r = lp(&v(&[1]), Sense::Max, &p).unwrap();
        assert_eq!(r.status, LpStatus::Unbounded);
        assert!(r.verify(&v(&[1]), Sense::Max, &p));
    }

    #[test]
    fn infeasible_has_farkas_certificate() {
        // x >= 1 and x <= 0
        let p = poly(1, &[(&[1], 1), (&[-1], 0)]);
        let r = lp(&v(&[0]), Sense::Min, &p).unwrap();
        assert_eq!(r.status, LpStatus::Infeasible);
        assert!(r.verify(&v(&[0]), Sense::Min, &p));
    }

    #[test]
    fn four_ray_upper_bound_minimum() {
        // f12(u) >= 0, f23(u) >= 2, f34(u) >= 2, f41(u) >= 2; minimise f34.
        let p = poly(3, &[(&[-1, -1, 1], 0), (&[1, -1, 1], 2), (&[1, 1, 1], 2), (&[-1, 1, 1], 2)]);
        let obj = v(&[1, 1, 1]);
        let r = lp(&obj, Sense::Min, &p).unwrap();
        assert_eq!(r.value, Some(Rat::from_int(2)));
        assert!(r.verify(&obj, Sense::Min, &p));
    }

    #[test]
    fn optimum_is_a_vertex() {
        // max x1 + x2 over the unit square: optimum face is the vertex (1,1)
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 0], -1), (&[0, -1], -1)]);
        let r = lp(&v(&[1, 1]), Sense::Max, &p).unwrap();
        assert_eq!(r.point, Some(v(&[1, 1])));
        // max x1 has an edge of optima; the answer must be one of its ends.
        let r = lp(&v(&[1, 0]), Sense::Max, &p).unwrap();
        let x = r.point.unwrap();
        assert!(x == v(&[1, 0]) || x == v(&[1, 1]));
    }

    #[test]
    fn free_variables_and_empty_constraints() {
        let p = HPolyhedron::<Rat>::universe(2);
        let r = lp(&v(&[0, 0]), Sense::Min, &p).unwrap();
        assert_eq!(r.value, Some(Rat::from_int(0)));
        let r = lp(&v(&[1, 0]), Sense::Min, &p).unwrap();
        assert_eq!(r.status, LpStatus::Unbounded);
        assert!(r.verify(&v(&[1, 0]), Sense::Min, &p));
    }

    #[test]
    fn polytope_zero_examples() {
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 0], 0), (&[0, -1], 0)]);
        let e = [v(&[1, 0]), v(&[0, 1])];
        assert!(polytope_is_zero(&p, &e).unwrap());
        let q = poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 0], -1), (&[0, -1], 0)]);
        assert!(!polytope_is_zero(&q, &e).unwrap());
        let r = poly(1, &[(&[1], 1)]);
        assert!(matches!(polytope_is_zero(&r, &[v(&[1])]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn works_over_fixed_width_rationals() {
        use num_rational::Ratio;
        type Q = Ratio<i64>;
        let p = HPolyhedron::new(
            2,
            vec![Vector::<Q>::from_ints(&[1, 0]), Vector::from_ints(&[0, 1]), Vector::from_ints(&[-1, -1])],
            vec![Q::from_int(0), Q::from_int(0), Q::from_int(-3)],
        )
        .unwrap();
        let obj = Vector::<Q>::from_ints(&[2, 1]);
        let r = lp(&obj, Sense::Max, &p).unwrap();
        assert_eq!(r.value, Some(Q::from_int(6)));
        assert!(r.verify(&obj, Sense::Max, &p));
    }
}

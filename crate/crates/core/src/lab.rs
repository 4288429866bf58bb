//! Lattice detection, pervasiveness probes, the disjointness hierarchy and
//! seeded random spaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rank_of, Vector};
use crate::lp::{lp, HPolyhedron, Sense};
use crate::scalar::Scalar;
use crate::space::{Method, OrderedSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeRoutes {
    /// Exactly `n` linearly independent extreme rays.
    pub simplicial: bool,
    pub rank1_census: usize,
    pub m_equals_n: bool,
    /// `n` extreme rays, pairwise disjoint.
    pub extreme_ray_pairwise_disjoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeVerdict<S> {
    pub is_lattice: bool,
    pub routes: LatticeRoutes,
    /// Two atoms with `[-x,x] ∩ [-y,y] = {0}` that are not disjoint.
    pub witness: Option<(Vector<S>, Vector<S>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PervasiveProbe<S> {
    pub pervasive: bool,
    /// Non-zero positive `x` below every positive upper bound of `b`.
    pub witness: Option<Vector<S>>,
    /// `min f_i` over the positive upper bounds of `b`.
    pub bounds: Vec<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HierarchyRow<S> {
    pub x: Vector<S>,
    pub y: Vector<S>,
    pub disjoint: bool,
    pub symmetric_interval_disjoint: bool,
    pub d_disjoint: bool,
}

impl<S> HierarchyRow<S> {
    pub fn triple(&self) -> (bool, bool, bool) {
        (self.disjoint, self.symmetric_interval_disjoint, self.d_disjoint)
    }

    /// Which adjacent implication this pair shows to be strict, if any.
    pub fn separation(&self) -> Option<&'static str> {
        match self.triple() {
            (false, true, _) => Some("symmetric-interval-disjoint but not disjoint"),
            (_, false, true) => Some("D-disjoint but not symmetric-interval-disjoint"),
            _ => None,
        }
    }
}

/// Parameters and rays of a seeded random cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSeed<S> {
    pub dim: usize,
    pub ray_count: usize,
    pub seed: u64,
    pub rays: Vec<Vector<S>>,
}

impl<S: Scalar> ConeSeed<S> {
    /// Rays `(p, 1)` with `p ∈ [-1,1]^{dim-1}` rational with denominator at
    /// most 4, resampled until they span.
    pub fn generate(dim: usize, ray_count: usize, seed: u64) -> Result<Self> {
        if !(2..=6).contains(&dim) {
            return Err(Error::PreconditionViolated(format!("dimension {dim} outside 2..=6")));
        }
        if ray_count < dim {
            return Err(Error::PreconditionViolated(format!("{ray_count} rays cannot span dimension {dim}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rays: Vec<Vector<S>> = (0..ray_count)
                .map(|_| {
                    let mut entries: Vec<S> = (0..dim - 1)
                        .map(|_| {
                            let q: i64 = rng.gen_range(1..=4);
                            S::from_frac(rng.gen_range(-q..=q), q)
                        })
                        .collect();
                    entries.push(S::one());
                    Vector::new(entries)
                })
                .collect();
            if rank_of(&rays, dim) == dim {
                return Ok(Self { dim, ray_count, seed, rays });
            }
        }
    }

    pub fn space(&self) -> Result<OrderedSpace<S>> {
        OrderedSpace::validate(&self.rays, self.dim)
    }
}

/// Deterministic pseudo-random space.
pub fn random_space<S: Scalar>(dim: usize, ray_count: usize, seed: u64) -> Result<OrderedSpace<S>> {
    ConeSeed::generate(dim, ray_count, seed)?.space()
}

impl<S: Scalar> OrderedSpace<S> {
    /// Non-negative integer combination of the atoms, coefficients in `0..=3`.
    pub fn random_positive<R: Rng>(&self, rng: &mut R) -> Vector<S> {
        self.atoms()
            .iter()
            .fold(Vector::zeros(self.dim()), |acc, a| acc.add(&a.scale(&S::from_int(rng.gen_range(0..=3)))))
    }

    /// Integer vector with entries in `-3..=3`.
    pub fn random_vector<R: Rng>(&self, rng: &mut R) -> Vector<S> {
        (0..self.dim()).map(|_| S::from_int(rng.gen_range(-3..=3))).collect()
    }

    fn atom_pairs(&self) -> impl Iterator<Item = (&Vector<S>, &Vector<S>)> {
        let atoms = self.atoms();
        (0..atoms.len()).flat_map(move |i| (i + 1..atoms.len()).map(move |j| (&atoms[i], &atoms[j])))
    }

    fn is_simplicial(&self) -> bool {
        let atoms = self.atoms();
        atoms.len() == self.dim() && rank_of(atoms, self.dim()) == self.dim()
    }

    /// Decides whether the space is a vector lattice along four independent
    /// routes, which must agree.
    pub fn is_vector_lattice(&self) -> Result<LatticeVerdict<S>> {
        let n = self.dim();
        let simplicial = self.is_simplicial();
        let report = self.enumerate_band_projections()?;
        let mut pairwise = self.atoms().len() == n;
        if pairwise {
            for (x, y) in self.atom_pairs() {
                if !self.disjoint(x, y, Method::Oracle)? {
                    pairwise = false;
                    break;
                }
            }
        }
        let routes = LatticeRoutes {
            simplicial,
            rank1_census: report.rank_one,
            m_equals_n: report.m == n,
            extreme_ray_pairwise_disjoint: pairwise,
        };
        let votes = [simplicial, report.rank_one == n, routes.m_equals_n, pairwise];
        if votes.iter().any(|&v| v != simplicial) {
            return Err(Error::TheoremViolation(format!("lattice routes disagree: {routes:?}")));
        }
        let witness = if simplicial {
            None
        } else {
            let mut found = None;
            for (x, y) in self.atom_pairs() {
                if self.is_symmetric_interval_disjoint(x, y)? && !self.disjoint(x, y, Method::Oracle)? {
                    found = Some((x.clone(), y.clone()));
                    break;
                }
            }
            Some(found.ok_or_else(|| {
                Error::SearchExhausted("no atom pair is symmetric-interval-disjoint without being disjoint".into())
            })?)
        };
        Ok(LatticeVerdict { is_lattice: simplicial, routes, witness })
    }

    /// A D-disjoint pair that is not disjoint, or `None` for lattices.
    pub fn weakly_pervasive_witness(&self) -> Result<Option<(Vector<S>, Vector<S>)>> {
        if self.is_simplicial() {
            return Ok(None);
        }
        for (x, y) in self.atom_pairs() {
            if self.is_d_disjoint(x, y)? && !self.disjoint(x, y, Method::Oracle)? {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..200 {
            let (x, y) = (self.random_positive(&mut rng), self.random_positive(&mut rng));
            if self.is_d_disjoint(&x, &y)? && !self.disjoint(&x, &y, Method::Oracle)? {
                return Ok(Some((x, y)));
            }
        }
        Err(Error::SearchExhausted("non-lattice space without a D-disjoint, non-disjoint pair".into()))
    }

    /// Is there a non-zero positive `x` below every positive upper bound of `b`?
    pub fn pervasive_at(&self, b: &Vector<S>) -> Result<PervasiveProbe<S>> {
        self.check_dim(b)?;
        if self.contains_positive(&b.neg()) {
            return Err(Error::NotApplicable(format!("{b} is not > 0 or incomparable with 0")));
        }
        let offsets = self
            .facets()
            .iter()
            .map(|f| {
                let v = f.dot(b);
                if v.is_positive() {
                    v
                } else {
                    S::zero()
                }
            })
            .collect();
        let upper = HPolyhedron::new(self.dim(), self.facets().to_vec(), offsets)?;
        let mut bounds = Vec::with_capacity(self.facets().len());
        for f in self.facets() {
            let res = lp(f, Sense::Min, &upper)?;
            bounds.push(
                res.value.ok_or_else(|| {
                    Error::TheoremViolation("positive upper bounds are empty or unbounded below".into())
                })?,
            );
        }
        let mut below = HPolyhedron::universe(self.dim());
        for (f, m) in self.facets().iter().zip(&bounds) {
            below.push(f.clone(), S::zero());
            below.push_upper(f, m.clone());
        }
        let total = self.facets().iter().fold(Vector::zeros(self.dim()), |acc, f| acc.add(f));
        let res = lp(&total, Sense::Max, &below)?;
        let value =
            res.value.ok_or_else(|| Error::TheoremViolation("interval below the bounds is unbounded".into()))?;
        let witness = if value.is_positive() { res.point } else { None };
        Ok(PervasiveProbe { pervasive: witness.is_some(), witness, bounds })
    }

    /// The three disjointness notions per pair; the implication chain must hold.
    pub fn hierarchy_report(&self, pairs: &[(Vector<S>, Vector<S>)]) -> Result<Vec<HierarchyRow<S>>> {
        let mut rows = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            let d_disjoint = self.is_d_disjoint(x, y)?;
            let symmetric_interval_disjoint = self.is_symmetric_interval_disjoint(x, y)?;
            let disjoint = self.disjoint(x, y, Method::Oracle)?;
            if (disjoint && !symmetric_interval_disjoint) || (symmetric_interval_disjoint && !d_disjoint) {
                return Err(Error::TheoremViolation(format!(
                    "implication chain broken at ({x}; {y}): ({disjoint}, {symmetric_interval_disjoint}, {d_disjoint})"
                )));
            }
            rows.push(HierarchyRow { x: x.clone(), y: y.clone(), disjoint, symmetric_interval_disjoint, d_disjoint });
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, Rat};

    fn v(x: &[i64]) -> Vector<Rat> {
        Vector::from_ints(x)
    }

    #[test]
    fn lattice_verdicts() {
        for n in 1..=3 {
            let r = fixtures::standard(n).is_vector_lattice().unwrap();
            assert!(r.is_lattice && r.witness.is_none());
            assert_eq!(r.routes.rank1_census, n);
        }
        let [v1, v2, ..] = fixtures::four_ray_vectors();
        let r = fixtures::four_ray().is_vector_lattice().unwrap();
        assert!(!r.is_lattice);
        assert_eq!(r.witness, Some((v1, v2)));
        assert!(!fixtures::four_ray_times_r().is_vector_lattice().unwrap().is_lattice);
    }

    #[test]
    fn weakly_pervasive_witnesses() {
        let [v1, v2, ..] = fixtures::four_ray_vectors();
        assert_eq!(fixtures::four_ray().weakly_pervasive_witness().unwrap(), Some((v1, v2)));
        assert_eq!(fixtures::standard(3).weakly_pervasive_witness().unwrap(), None);
        let x = random_space::<Rat>(3, 5, 7).unwrap();
        if x.atoms().len() > 3 {
            let (a, b) = x.weakly_pervasive_witness().unwrap().unwrap();
            assert!(x.is_d_disjoint(&a, &b).unwrap());
            assert!(!x.is_disjoint(&a, &b, Method::Oracle).unwrap().disjoint);
        }
    }

    #[test]
    fn pervasive_probes() {
        let s = fixtures::standard(2);
        let p = s.pervasive_at(&v(&[1, -1])).unwrap();
        assert!(p.pervasive);
        let w = p.witness.unwrap();
        assert!(w[1] == Rat::from_int(0) && w[0] > Rat::from_int(0) && w[0] <= Rat::from_int(1));

        let x = fixtures::four_ray();
        let p = x.pervasive_at(&v(&[1, 1, 0])).unwrap();
        assert!(!p.pervasive);
        // facets sorted f12, f41, f23, f34
        let zero = Rat::from_int(0);
        assert_eq!(p.bounds[0], zero);
        assert_eq!(p.bounds[1], zero);
        assert_eq!(p.bounds[2], zero);

        for g in fixtures::four_ray_vectors() {
            assert!(x.pervasive_at(&g).unwrap().pervasive);
        }
        assert!(matches!(x.pervasive_at(&v(&[0, 0, -1])), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn hierarchy_examples() {
        let x = fixtures::four_ray();
        let [v1, v2, v3, v4] = fixtures::four_ray_vectors();
        let rows =
            x.hierarchy_report(&[(v1.clone(), v2.clone()), (v1.add(&v2), v3.add(&v4)), (v1.clone(), v3)]).unwrap();
        let triples: Vec<_> = rows.iter().map(HierarchyRow::triple).collect();
        assert_eq!(triples, [(false, true, true), (false, false, true), (true, true, true)]);
        assert!(rows[0].separation().is_some() && rows[1].separation().is_some() && rows[2].separation().is_none());
    }

    #[test]
    fn random_space_examples() {
        let x = random_space::<Rat>(2, 2, 99).unwrap();
        assert!(x.is_vector_lattice().unwrap().is_lattice);
        let a = random_space::<Rat>(3, 4, 1).unwrap();
        let b = random_space::<Rat>(3, 4, 1).unwrap();
        assert_eq!(a.facets(), b.facets());
        assert!(matches!(random_space::<Rat>(7, 8, 1), Err(Error::PreconditionViolated(_))));
        assert!(matches!(random_space::<Rat>(3, 2, 1), Err(Error::PreconditionViolated(_))));
    }
}

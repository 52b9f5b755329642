//! Maximal lattice-free simplices `K_b = {x : A x ≤ b}` of a simplicial
//! matrix, enumerated up to integral translation.
//!
//! Candidates are tuples `(v₁, …, v_d)` of test vectors assembled by
//! depth-first backtracking; a candidate body is `⟨0, v₁, …, v_d⟩_A`.
//! Maximality is decided by the facet-witness criterion: a lattice-free
//! polytope is maximal iff every facet has an integral point in its relative
//! interior. Kept bodies are moved to their canonical translate, the one
//! with `b₀ = 0` for which `0` is the perturbed optimum of the program with
//! bounds `b_i - 1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::enumerate::PointEnumerator;
use crate::error::{Error, Result};
use crate::int::{IntMat, IntVec};
use crate::polyhedra::{body_rhs, max_vectors, SimplicialData};
use crate::testset::{compute_test_set, ip_solve, TestSet, TestVector};

/// A candidate body: right-hand side `b` and generating points
/// `(0, v₁, …, v_d)` with `b = max(A·0, A v₁, …, A v_d)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Body {
    pub b: IntVec,
    pub gens: Vec<IntVec>,
}

/// Canonical representatives of the maximal lattice-free bodies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlfbResult {
    pub data: SimplicialData,
    pub bodies: Vec<Body>,
    /// `witnesses[k][i]`: integral point in the relative interior of facet
    /// `i` of `bodies[k]`.
    pub witnesses: Vec<Vec<IntVec>>,
    /// Number of candidates produced by the backtracking.
    pub superset_size: usize,
}

/// Lattice-point queries on the simplices `K_b` of a fixed matrix.
#[derive(Debug, Clone)]
pub struct Geometry {
    data: SimplicialData,
    body: PointEnumerator,
    facets: Vec<PointEnumerator>,
    budget: u64,
}

impl Geometry {
    pub fn new(data: &SimplicialData, budget: u64) -> Self {
        let a = data.matrix();
        let facets = (0..a.rows())
            .map(|i| {
                let mut rows = a.row_vecs();
                rows.push(-&a.row(i));
                PointEnumerator::new(&IntMat::from_row_vecs(&rows).expect("equal row lengths"))
            })
            .collect();
        Geometry { data: data.clone(), body: PointEnumerator::new(a), facets, budget }
    }

    pub fn data(&self) -> &SimplicialData {
        &self.data
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    fn check_rhs(&self, b: &IntVec) -> Result<()> {
        if b.len() != self.data.dim() + 1 {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {}, expected {}",
                b.len(),
                self.data.dim() + 1
            )));
        }
        Ok(())
    }

    /// Some integral point of `K_b`.
    pub fn integral_point(&self, b: &IntVec) -> Result<Option<IntVec>> {
        self.check_rhs(b)?;
        self.body.first_point(b, self.budget)
    }

    /// All integral points of `K_b`.
    pub fn integral_points(&self, b: &IntVec) -> Result<Vec<IntVec>> {
        self.check_rhs(b)?;
        self.body.points(b, self.budget)
    }

    /// True iff no integral `x` satisfies `A x < b` in every coordinate.
    pub fn is_lattice_free(&self, b: &IntVec) -> Result<bool> {
        self.check_rhs(b)?;
        let shrunk: IntVec = b.iter().map(|c| c - 1).collect();
        Ok(self.body.first_point(&shrunk, self.budget)?.is_none())
    }

    /// An integral `x` with `a_i x = b_i` and `a_j x < b_j` for `j ≠ i`.
    pub fn facet_witness(&self, b: &IntVec, i: usize) -> Result<Option<IntVec>> {
        self.check_rhs(b)?;
        let d = self.data.dim();
        if i > d {
            return Err(Error::IndexOutOfRange { index: i, max: d });
        }
        let mut rhs: Vec<BigInt> = b.iter().enumerate().map(|(j, c)| if j == i { c.clone() } else { c - 1 }).collect();
        rhs.push(-&b[i]);
        self.facets[i].first_point(&IntVec::new(rhs), self.budget)
    }

    /// Witnesses for all `d + 1` facets, or `None` if some facet has none.
    pub fn facet_witnesses(&self, b: &IntVec) -> Result<Option<Vec<IntVec>>> {
        let mut out = Vec::with_capacity(self.data.dim() + 1);
        for i in 0..=self.data.dim() {
            match self.facet_witness(b, i)? {
                Some(x) => out.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// The maximality criterion: lattice free with a witness on every facet.
    pub fn is_maximal(&self, b: &IntVec) -> Result<bool> {
        Ok(self.is_lattice_free(b)? && self.facet_witnesses(b)?.is_some())
    }
}

/// `H_i(v) = {u ∈ T : a_i u < a_i v}` for `1 ≤ i ≤ d`.
pub fn h_set<'a>(tests: &'a TestSet, i: usize, v: &TestVector) -> Result<Vec<&'a TestVector>> {
    let d = tests.parent().dim();
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    Ok(tests.entries().iter().filter(|u| u.w()[i] < v.w()[i]).collect())
}

/// Test vectors lying in the interior of `⟨pts⟩_A`.
pub fn interior_points_from_t<'a>(
    data: &SimplicialData,
    pts: &[IntVec],
    tests: &'a TestSet,
) -> Result<Vec<&'a TestVector>> {
    let rhs = body_rhs(data.matrix(), pts)?;
    Ok(tests.entries().iter().filter(|u| u.w().lt_all(&rhs)).collect())
}

fn has_interior_test_vector(tests: &TestSet, rhs: &IntVec) -> bool {
    tests.entries().iter().any(|u| u.w().lt_all(rhs))
}

struct Backtrack<'a> {
    tests: &'a TestSet,
    d: usize,
}

impl Backtrack<'_> {
    /// Tries to extend the partial tuple `chosen` (whose body has right-hand
    /// side `rhs`) by entry `k`; `pool` holds the entries allowed at this level.
    fn step(&self, chosen: &mut Vec<usize>, rhs: &IntVec, k: usize, pool: &[usize], out: &mut Vec<Body>) {
        let level = chosen.len() + 1;
        let entries = self.tests.entries();
        let v = &entries[k];
        if !v.w()[level].is_positive() {
            return;
        }
        let next_rhs = max_vectors(&[rhs.clone(), v.w().clone()]).expect("equal lengths");
        if has_interior_test_vector(self.tests, &next_rhs) {
            return;
        }
        chosen.push(k);
        if level == self.d {
            if let Some(body) = self.leaf(chosen, next_rhs) {
                out.push(body);
            }
        } else {
            let next_pool: Vec<usize> =
                pool.iter().copied().filter(|&u| entries[u].w()[level] < v.w()[level]).collect();
            for &u in &next_pool {
                self.step(chosen, &next_rhs, u, &next_pool, out);
            }
        }
        chosen.pop();
    }

    fn leaf(&self, chosen: &[usize], b: IntVec) -> Option<Body> {
        if !b[0].is_zero() || b.iter().skip(1).any(|c| !c.is_positive()) {
            return None;
        }
        // `y·b > 0` makes `K_b` full dimensional even when the chosen
        // points are linearly dependent.
        let entries = self.tests.entries();
        let mut gens = vec![IntVec::zeros(self.d)];
        gens.extend(chosen.iter().map(|&k| entries[k].z().clone()));
        Some(Body { b, gens })
    }
}

/// The candidate superset produced by backtracking over `T`. Subtrees below
/// the first tuple entry are explored in parallel; the output is sorted by
/// `(b, gens)` and deduplicated.
pub fn enumerate_candidates(data: &SimplicialData, tests: &TestSet) -> Vec<Body> {
    let d = data.dim();
    let n = tests.len();
    let search = Backtrack { tests, d };
    let all: Vec<usize> = (0..n).collect();
    let zero = IntVec::zeros(d + 1);
    let mut out: Vec<Body> = all
        .par_iter()
        .map(|&k| {
            let mut found = Vec::new();
            search.step(&mut Vec::new(), &zero, k, &all, &mut found);
            found
        })
        .flatten()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Returns `b + A z`, the right-hand side of `z + K_b`.
pub fn translate_body(data: &SimplicialData, b: &IntVec, z: &IntVec) -> Result<IntVec> {
    if b.len() != data.dim() + 1 || z.len() != data.dim() {
        return Err(Error::DimensionMismatch("translation has the wrong shape".into()));
    }
    Ok(b + &data.image(z))
}

/// The unique translate of a maximal lattice-free body with `b₀ = 0` for
/// which `0` is the perturbed optimum of `min{a₀′ z : a_i z ≤ b_i - 1}`.
/// A body that is already canonical is returned unchanged.
pub fn canonicalize(geometry: &Geometry, tests: &TestSet, body: &Body) -> Result<Body> {
    let data = geometry.data();
    let d = data.dim();
    if !geometry.is_lattice_free(&body.b)? {
        return Err(Error::NotLatticeFree);
    }
    let x0 = geometry.facet_witness(&body.b, 0)?.ok_or(Error::NotLatticeFree)?;
    let moved = translate_body(data, &body.b, &-&x0)?;
    let bounds: IntVec = (1..=d).map(|i| &moved[i] - 1).collect();
    let opt = ip_solve(tests, &bounds, &IntVec::zeros(d))?;
    let shift = &x0 + &opt;
    if shift.is_zero() {
        return Ok(body.clone());
    }
    let b = translate_body(data, &body.b, &-&shift)?;
    let witnesses = geometry.facet_witnesses(&b)?.ok_or(Error::NotLatticeFree)?;
    let mut gens = vec![IntVec::zeros(d)];
    gens.extend(witnesses.into_iter().skip(1));
    debug_assert_eq!(body_rhs(data.matrix(), &gens).ok(), Some(b.clone()));
    Ok(Body { b, gens })
}

/// An integral `z` with `b + A z ≤ c`, i.e. `z + K_b ⊆ K_c`.
fn containing_translation(geometry: &Geometry, b: &IntVec, c: &IntVec) -> Result<Option<IntVec>> {
    geometry.integral_point(&(c - b))
}

/// Keeps the lattice-free candidates with a witness on every facet, moves
/// them to canonical form and checks that none of them sits strictly inside
/// a translate of another lattice-free candidate.
pub fn filter_maximal(geometry: &Geometry, tests: &TestSet, candidates: &[Body]) -> Result<MlfbResult> {
    let data = geometry.data();
    let mut lattice_free = Vec::new();
    let mut kept: BTreeMap<IntVec, (Body, Vec<IntVec>)> = BTreeMap::new();
    for cand in candidates {
        if !geometry.is_lattice_free(&cand.b)? {
            continue;
        }
        lattice_free.push(cand);
        if geometry.facet_witnesses(&cand.b)?.is_none() {
            continue;
        }
        let canon = canonicalize(geometry, tests, cand)?;
        if kept.contains_key(&canon.b) {
            continue;
        }
        let witnesses = geometry.facet_witnesses(&canon.b)?.ok_or(Error::NotLatticeFree)?;
        kept.insert(canon.b.clone(), (canon, witnesses));
    }
    for (body, _) in kept.values() {
        for other in &lattice_free {
            if let Some(z) = containing_translation(geometry, &body.b, &other.b)? {
                let image = translate_body(data, &body.b, &z)?;
                if image != other.b {
                    return Err(Error::CrossCheck(format!(
                        "body {} lies strictly inside a translate of {}",
                        body.b, other.b
                    )));
                }
            }
        }
    }
    let (bodies, witnesses) = kept.into_values().unzip();
    Ok(MlfbResult { data: data.clone(), bodies, witnesses, superset_size: candidates.len() })
}

/// Full pipeline: test set, candidate superset and maximality filter.
pub fn compute_mlfb(data: &SimplicialData, budget: u64) -> Result<(TestSet, Vec<Body>, MlfbResult)> {
    let tests = compute_test_set(data);
    let candidates = enumerate_candidates(data, &tests);
    let geometry = Geometry::new(data, budget);
    let result = filter_maximal(&geometry, &tests, &candidates)?;
    Ok((tests, candidates, result))
}

/// `Some(z)` with `b + A z = c` when `K_b` and `K_c` are integral translates.
pub fn translation_between(data: &SimplicialData, b: &IntVec, c: &IntVec) -> Option<IntVec> {
    data.preimage(&(c - b))
}

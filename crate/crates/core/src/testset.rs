//! Test sets for the lexicographically perturbed integer programs
//! `min{a₀′ z : a_i z ≤ b_i, i = 1..d}` of a simplicial matrix.
//!
//! A move `z` is improving iff its image `A z` is lexicographically negative,
//! which realizes the perturbed cost `a₀ + εa₁ + ⋯ + ε^d a_d` exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::completion::lattice_ideal_basis;
use crate::error::{Error, Result};
use crate::int::{IntMat, IntVec};
use crate::polyhedra::{lex_sign, SimplicialData};

/// An improving direction `z` with cached image `w = A z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TestVector {
    w: IntVec,
    z: IntVec,
}

impl TestVector {
    pub fn new(data: &SimplicialData, z: IntVec) -> Self {
        let w = data.image(&z);
        TestVector { w, z }
    }

    pub fn z(&self) -> &IntVec {
        &self.z
    }

    pub fn w(&self) -> &IntVec {
        &self.w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestSet {
    entries: Vec<TestVector>,
    parent: SimplicialData,
}

impl TestSet {
    /// Builds a test set from explicit directions, sorting them by `(w, z)`.
    /// Fails if some direction is not improving.
    pub fn from_vectors(parent: SimplicialData, zs: Vec<IntVec>) -> Result<Self> {
        let mut entries = Vec::with_capacity(zs.len());
        for z in zs {
            if z.len() != parent.dim() {
                return Err(Error::DimensionMismatch(format!("direction of length {}", z.len())));
            }
            let t = TestVector::new(&parent, z);
            if lex_sign(&t.w) != Ordering::Less {
                return Err(Error::CrossCheck(format!("direction {} is not improving", t.z)));
            }
            entries.push(t);
        }
        entries.sort();
        entries.dedup();
        Ok(TestSet { entries, parent })
    }

    pub fn entries(&self) -> &[TestVector] {
        &self.entries
    }

    pub fn parent(&self) -> &SimplicialData {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True if no entry's `w⁺` dominates another entry's `w⁺`.
    pub fn is_inter_reduced(&self) -> bool {
        let leads: Vec<IntVec> = self.entries.iter().map(|t| t.w.positive_part()).collect();
        leads.iter().enumerate().all(|(i, a)| leads.iter().enumerate().all(|(j, b)| i == j || !a.le_all(b)))
    }
}

/// The reduced reverse-lexicographic Gröbner basis of the lattice ideal of
/// `L = A ℤ^d`, read as a test set.
pub fn compute_test_set(data: &SimplicialData) -> TestSet {
    let generators = data.matrix().col_vecs();
    let basis = lattice_ideal_basis(generators, data.annihilator());
    let zs =
        basis.into_iter().map(|w| data.preimage(&w).expect("completion stays inside the column lattice")).collect();
    TestSet::from_vectors(data.clone(), zs).expect("completion output is lex-negative")
}

/// Default search radius for [`brute_force_test_set`]: `d·Δ` with `Δ` the
/// largest absolute subdeterminant of `A`.
pub fn default_radius(data: &SimplicialData) -> BigInt {
    data.matrix().max_subdeterminant() * BigInt::from(data.dim())
}

/// Every lex-negative `z` in the box `‖z‖∞ ≤ radius` whose `w⁺` is not
/// strictly dominated by the `w⁺` of another lex-negative box vector.
pub fn brute_force_test_set(data: &SimplicialData, radius: &BigInt, budget: u64) -> Result<TestSet> {
    if !radius.is_positive() {
        return Err(Error::DimensionMismatch("radius must be positive".into()));
    }
    let d = data.dim();
    let side: BigInt = radius * 2 + 1;
    let cells = num_traits::pow(side.clone(), d);
    if cells > BigInt::from(budget) {
        return Err(Error::BoxTooLarge { cells: cells.to_string(), budget });
    }
    let r = radius.to_i64().expect("radius bounded by budget");
    let side = side.to_u64().expect("bounded by budget");
    let total = cells.to_u64().expect("bounded by budget");

    let mut candidates: Vec<(BigInt, IntVec, TestVector)> = Vec::new();
    for idx in 0..total {
        let mut rest = idx;
        let coords: Vec<i64> = (0..d)
            .map(|_| {
                let c = (rest % side) as i64 - r;
                rest /= side;
                c
            })
            .collect();
        let t = TestVector::new(data, IntVec::from_i64s(&coords));
        if lex_sign(&t.w) == Ordering::Less {
            let lead = t.w.positive_part();
            let degree = lead.dot(data.annihilator());
            candidates.push((degree, lead, t));
        }
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0));

    // A strict dominator has strictly smaller degree, so it is already kept
    // (or dominated by something kept) when a candidate is examined.
    let mut kept: Vec<(BigInt, IntVec, TestVector)> = Vec::new();
    for c in candidates {
        let dominated = kept.iter().any(|k| k.0 < c.0 && k.1.le_all(&c.1));
        if !dominated {
            kept.push(c);
        }
    }
    TestSet::from_vectors(data.clone(), kept.into_iter().map(|k| k.2.z).collect())
}

/// Test-set descent for `min{a₀′ z : a_i z ≤ b_i, i = 1..d}` from the
/// feasible start `x0`. Entries are scanned in stored order and the first
/// feasible move is applied as often as it stays feasible.
pub fn ip_solve(tests: &TestSet, b: &IntVec, x0: &IntVec) -> Result<IntVec> {
    let data = tests.parent();
    let d = data.dim();
    if b.len() != d || x0.len() != d {
        return Err(Error::DimensionMismatch(format!("expected vectors of length {d}")));
    }
    let image = data.image(x0);
    let mut slack: Vec<BigInt> = (1..=d).map(|i| &b[i - 1] - &image[i]).collect();
    if let Some(i) = slack.iter().position(|s| s.is_negative()) {
        return Err(Error::Infeasible { row: i + 1 });
    }
    let mut x = x0.clone();
    loop {
        let step = tests.entries.iter().find_map(|t| {
            let mut times: Option<BigInt> = None;
            for i in 1..=d {
                let wi = &t.w[i];
                if wi.is_positive() {
                    let k = slack[i - 1].div_floor(wi);
                    if times.as_ref().is_none_or(|m| k < *m) {
                        times = Some(k);
                    }
                }
            }
            let k = times.expect("improving moves raise some bounded row");
            (k >= BigInt::one()).then_some((t, k))
        });
        match step {
            Some((t, k)) => {
                x = &x + &t.z.scale(&k);
                for i in 1..=d {
                    slack[i - 1] -= &t.w[i] * &k;
                }
            }
            None => return Ok(x),
        }
    }
}

/// Pulls a test set for `A` back to one for `A U`: every `z` becomes `U⁻¹ z`
/// while the images are unchanged.
pub fn transform_test_set(tests: &TestSet, u: &IntMat) -> Result<TestSet> {
    let parent = tests.parent.transformed(u)?;
    let inv = u.unimodular_inverse()?;
    let mut entries: Vec<TestVector> =
        tests.entries.iter().map(|t| TestVector { w: t.w.clone(), z: inv.mul_vec(&t.z) }).collect();
    entries.sort();
    debug_assert!(entries.iter().all(|t| parent.image(&t.z) == t.w));
    Ok(TestSet { entries, parent })
}

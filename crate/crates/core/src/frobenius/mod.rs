//! Frobenius numbers by semigroup scan, residue-graph shortest paths, the
//! maximal lattice-free body enumeration and the three-variable reduction.
//!
//! For an instance that contains 1 every natural number is representable
//! and all methods return -1.

mod ss3;

pub use ss3::{frobenius_ss3, special_basis_3, ss3_reduce, SpecialBasis, Ss3Outcome, Ss3State};

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::int::IntVec;
use crate::mlfb::{compute_mlfb, Geometry, MlfbResult};
use crate::polyhedra::SimplicialData;

/// Coprime positive generators `a₁, …, aₙ` with `n ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusInstance {
    a: IntVec,
}

impl FrobeniusInstance {
    pub fn new(a: IntVec) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::DimensionMismatch(format!("need at least two generators, got {}", a.len())));
        }
        if let Some(index) = a.iter().position(|c| !c.is_positive()) {
            return Err(Error::NonPositive { index });
        }
        let g = a.content();
        if !g.is_one() {
            return Err(Error::NonCoprime(g.to_string()));
        }
        Ok(FrobeniusInstance { a })
    }

    pub fn from_i64s(a: &[i64]) -> Result<Self> {
        Self::new(IntVec::from_i64s(a))
    }

    pub fn generators(&self) -> &IntVec {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> BigInt {
        self.a.iter().sum()
    }

    fn small_generators(&self, budget: u64) -> Result<Vec<u64>> {
        self.a.iter().map(|c| c.to_u64().filter(|&v| v <= budget).ok_or(Error::BudgetExceeded { budget })).collect()
    }
}

/// The gaps of the semigroup `ℕa₁ + ⋯ + ℕaₙ` in increasing order, found by
/// scanning until `min(a)` consecutive members appear.
pub fn semigroup_gaps(inst: &FrobeniusInstance, budget: u64) -> Result<Vec<BigInt>> {
    let gens = inst.small_generators(budget)?;
    let run_needed = *gens.iter().min().expect("nonempty") as usize;
    let mut member: Vec<bool> = Vec::new();
    let mut gaps = Vec::new();
    let mut run = 0usize;
    let mut k = 0usize;
    while run < run_needed {
        if k as u64 >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let m = k == 0 || gens.iter().any(|&g| (g as usize) <= k && member[k - g as usize]);
        member.push(m);
        if m {
            run += 1;
        } else {
            run = 0;
            gaps.push(BigInt::from(k));
        }
        k += 1;
    }
    Ok(gaps)
}

/// Largest non-representable integer by direct semigroup scan.
pub fn frobenius_naive(inst: &FrobeniusInstance, budget: u64) -> Result<BigInt> {
    Ok(semigroup_gaps(inst, budget)?.pop().unwrap_or_else(|| BigInt::from(-1)))
}

/// Shortest-path distances from residue 0 in the graph on `ℤ/a₁ℤ` with arcs
/// `v → v + a_i` of weight `a_i` (`i ≥ 2`): entry `f` is the smallest
/// combination of `a₂, …, aₙ` congruent to `f` mod `a₁`.
pub fn residue_distances(inst: &FrobeniusInstance, budget: u64) -> Result<Vec<u128>> {
    let gens = inst.small_generators(budget)?;
    let modulus = gens[0] as usize;
    let mut dist = vec![u128::MAX; modulus];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u128, 0usize))]);
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &g in &gens[1..] {
            let next = (v + (g % modulus as u64) as usize) % modulus;
            let nd = d + g as u128;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist)
}

/// `g = -a₁ + max{r_f : 0 < f < a₁}` from the residue distances.
pub fn frobenius_brauer_shockley(inst: &FrobeniusInstance, budget: u64) -> Result<BigInt> {
    let dist = residue_distances(inst, budget)?;
    let modulus = BigInt::from(dist.len());
    match dist.iter().skip(1).max() {
        Some(&r) => Ok(BigInt::from(r) - modulus),
        None => Ok(BigInt::from(-1)),
    }
}

/// Frobenius number from the lattice-free candidate bodies of the kernel
/// lattice: `g = max{a·b} - Σaᵢ`. Also returns the canonical maximal bodies.
pub fn frobenius_by_mlfb(inst: &FrobeniusInstance, budget: u64) -> Result<(BigInt, MlfbResult)> {
    let data = SimplicialData::from_frobenius(inst.generators())?;
    let (_, candidates, result) = compute_mlfb(&data, budget)?;
    let geometry = Geometry::new(&data, budget);
    let mut best: Option<BigInt> = None;
    for c in &candidates {
        if geometry.is_lattice_free(&c.b)? {
            let v = inst.generators().dot(&c.b);
            if best.as_ref().is_none_or(|b| v > *b) {
                best = Some(v);
            }
        }
    }
    let best = best.ok_or_else(|| Error::CrossCheck("no lattice-free candidate body".into()))?;
    Ok((best - inst.sum(), result))
}

/// Whether `a·b` is a nonnegative integral combination of the generators.
/// If `a·b = a·u` with `u ≥ 0` then `b - u = A x` for an integral `x ∈ K_b`,
/// and conversely `u = b - A x`; so this holds iff `K_b` has an integral point.
pub fn representable(inst: &FrobeniusInstance, b: &IntVec, budget: u64) -> Result<bool> {
    let data = SimplicialData::from_frobenius(inst.generators())?;
    Ok(Geometry::new(&data, budget).integral_point(b)?.is_some())
}

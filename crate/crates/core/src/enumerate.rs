//! Exact enumeration of the integral points of a bounded polyhedron
//! `{x ∈ ℤ^d : M x ≤ c}`.
//!
//! The coordinate bounds come from Fourier–Motzkin projections of the system.
//! Each projected inequality is stored as a nonnegative multiplier vector over
//! the original rows, so the projections are computed once per matrix and
//! re-evaluated for every right-hand side.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::int::{IntMat, IntVec};

/// Default enumeration budget (visited search nodes).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Projected {
    coeffs: Vec<BigInt>,
    mult: Vec<BigInt>,
}

impl Projected {
    fn normalized(mut self) -> Self {
        let g = self.mult.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && g != BigInt::from(1) {
            for c in self.coeffs.iter_mut().chain(self.mult.iter_mut()) {
                *c /= &g;
            }
        }
        self
    }
}

/// Precomputed projections for a fixed constraint matrix.
#[derive(Debug, Clone)]
pub struct PointEnumerator {
    rows: usize,
    dim: usize,
    /// `levels[k]`: inequalities in `x_0..=x_k` with a nonzero `x_k` coefficient.
    levels: Vec<Vec<Projected>>,
    /// Inequalities `0 ≤ mult·c` left after eliminating every variable.
    constants: Vec<Vec<BigInt>>,
}

impl PointEnumerator {
    pub fn new(m: &IntMat) -> Self {
        let dim = m.cols();
        let rows = m.rows();
        let mut current: Vec<Projected> = (0..rows)
            .map(|i| {
                let mut mult = vec![BigInt::zero(); rows];
                mult[i] = BigInt::from(1);
                Projected { coeffs: m.row_slice(i).to_vec(), mult }
            })
            .collect();
        let mut levels = vec![Vec::new(); dim];
        for k in (0..dim).rev() {
            let (active, passive): (Vec<_>, Vec<_>) = current.into_iter().partition(|p| !p.coeffs[k].is_zero());
            let mut next: BTreeSet<Projected> = passive
                .into_iter()
                .map(|mut p| {
                    p.coeffs.truncate(k);
                    p
                })
                .collect();
            for p in active.iter().filter(|p| p.coeffs[k].is_positive()) {
                for q in active.iter().filter(|q| q.coeffs[k].is_negative()) {
                    let lp = -&q.coeffs[k];
                    let lq = p.coeffs[k].clone();
                    let coeffs = (0..k).map(|j| &lp * &p.coeffs[j] + &lq * &q.coeffs[j]).collect();
                    let mult = (0..rows).map(|j| &lp * &p.mult[j] + &lq * &q.mult[j]).collect();
                    next.insert(Projected { coeffs, mult }.normalized());
                }
            }
            levels[k] = active;
            current = next.into_iter().collect();
        }
        let constants = current.into_iter().map(|p| p.mult).collect();
        PointEnumerator { rows, dim, levels, constants }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Visits every integral point of `{x : M x ≤ rhs}` in lexicographic
    /// order until `visit` breaks. Returns `true` if the visit was stopped.
    pub fn for_each_point<F>(&self, rhs: &IntVec, budget: u64, mut visit: F) -> Result<bool>
    where
        F: FnMut(&IntVec) -> ControlFlow<()>,
    {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let eval = |mult: &[BigInt]| -> BigInt { mult.iter().zip(rhs).map(|(m, c)| m * c).sum() };
        if self.constants.iter().any(|m| eval(m).is_negative()) {
            return Ok(false);
        }
        let level_rhs: Vec<Vec<BigInt>> =
            self.levels.iter().map(|ps| ps.iter().map(|p| eval(&p.mult)).collect()).collect();
        let mut search = Search { enumerator: self, level_rhs, budget, visited: 0, point: IntVec::zeros(self.dim) };
        if self.dim == 0 {
            return Ok(visit(&search.point).is_break());
        }
        search.descend(0, &mut visit)
    }

    /// Some integral point of the polyhedron, if any.
    pub fn first_point(&self, rhs: &IntVec, budget: u64) -> Result<Option<IntVec>> {
        let mut found = None;
        self.for_each_point(rhs, budget, |p| {
            found = Some(p.clone());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// All integral points of the polyhedron.
    pub fn points(&self, rhs: &IntVec, budget: u64) -> Result<Vec<IntVec>> {
        let mut out = Vec::new();
        self.for_each_point(rhs, budget, |p| {
            out.push(p.clone());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }
}

struct Search<'a> {
    enumerator: &'a PointEnumerator,
    level_rhs: Vec<Vec<BigInt>>,
    budget: u64,
    visited: u64,
    point: IntVec,
}

impl Search<'_> {
    fn bounds(&self, k: usize) -> Result<(BigInt, BigInt)> {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for (p, r) in self.enumerator.levels[k].iter().zip(&self.level_rhs[k]) {
            let mut slack = r.clone();
            for j in 0..k {
                slack -= &p.coeffs[j] * &self.point[j];
            }
            let c = &p.coeffs[k];
            if c.is_positive() {
                let b = slack.div_floor(c);
                if hi.as_ref().is_none_or(|h| b < *h) {
                    hi = Some(b);
                }
            } else {
                let b = slack.div_ceil(c);
                if lo.as_ref().is_none_or(|l| b > *l) {
                    lo = Some(b);
                }
            }
        }
        match (lo, hi) {
            (Some(lo), Some(hi)) => Ok((lo, hi)),
            _ => Err(Error::Unbounded(k)),
        }
    }

    fn descend<F>(&mut self, k: usize, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&IntVec) -> ControlFlow<()>,
    {
        let (lo, hi) = self.bounds(k)?;
        let mut x = lo;
        while x <= hi {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.point[k] = x.clone();
            let stop =
                if k + 1 == self.enumerator.dim { visit(&self.point).is_break() } else { self.descend(k + 1, visit)? };
            if stop {
                return Ok(true);
            }
            x += 1;
        }
        Ok(false)
    }
}

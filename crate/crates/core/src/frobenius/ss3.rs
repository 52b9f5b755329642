//! Three generators: the kernel lattice is reduced by sign-preserving column
//! additions until `{e₁, e₂, e₁ + e₂}` is a test set for the reduced basis,
//! so the two maximal lattice-free bodies can be read off directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{frobenius_by_mlfb, FrobeniusInstance};
use crate::error::{Error, Result};
use crate::int::{extended_gcd, IntMat, IntVec};
use crate::mlfb::MlfbResult;
use crate::polyhedra::max_vectors;

/// Kernel basis `u = (-γ, λa₁, -μa₁)`, `v = (0, -a₃/γ, a₂/γ)` with
/// `γ = gcd(a₂, a₃) = λa₂ - μa₃`, `0 < λ ≤ a₃/γ` and `0 ≤ μ < a₂/γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialBasis {
    pub u: IntVec,
    pub v: IntVec,
    pub gamma: BigInt,
    pub lambda: BigInt,
    pub mu: BigInt,
}

pub fn special_basis_3(a1: &BigInt, a2: &BigInt, a3: &BigInt) -> Result<SpecialBasis> {
    let inst = FrobeniusInstance::new(IntVec::new(vec![a1.clone(), a2.clone(), a3.clone()]))?;
    let (gamma, s, _) = extended_gcd(a2, a3);
    let period = a3 / &gamma;
    let mut lambda = s.mod_floor(&period);
    if lambda.is_zero() {
        lambda = period.clone();
    }
    let mu = (&lambda * a2 - &gamma) / a3;
    let u = IntVec::new(vec![-&gamma, &lambda * a1, -(&mu * a1)]);
    let v = IntVec::new(vec![BigInt::zero(), -period, a2 / &gamma]);
    debug_assert!(inst.generators().dot(&u).is_zero() && inst.generators().dot(&v).is_zero());
    Ok(SpecialBasis { u, v, gamma, lambda, mu })
}

/// Current basis `M` (columns in the kernel) with `M = M₀ U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ss3State {
    pub m: IntMat,
    pub u: IntMat,
    pub gamma: BigInt,
    pub lambda: BigInt,
    pub mu: BigInt,
}

impl Ss3State {
    pub fn initial(basis: &SpecialBasis) -> Self {
        Ss3State {
            m: IntMat::from_columns(&[basis.u.clone(), basis.v.clone()]).expect("two columns of length three"),
            u: IntMat::identity(2),
            gamma: basis.gamma.clone(),
            lambda: basis.lambda.clone(),
            mu: basis.mu.clone(),
        }
    }

    /// Adds `k` times column `from` to column `to`.
    fn add_column(&self, to: usize, from: usize, k: &BigInt) -> Self {
        let mut next = self.clone();
        for r in 0..3 {
            next.m[(r, to)] = &self.m[(r, to)] + k * &self.m[(r, from)];
        }
        for r in 0..2 {
            next.u[(r, to)] = &self.u[(r, to)] + k * &self.u[(r, from)];
        }
        next
    }

    /// True if the terminal conditions `B₁₁ + B₁₂ ≥ 0` and `B₂₁ + B₂₂ > 0`
    /// hold (rows 1 and 2 of `M`).
    pub fn is_target(&self) -> bool {
        let m = &self.m;
        admissible(m) && !(&m[(1, 0)] + &m[(1, 1)]).is_negative() && (&m[(2, 0)] + &m[(2, 1)]).is_positive()
    }

    /// One reduction step: the largest `k ≥ 1` with `col₁ += k·col₂`
    /// admissible, else the largest with `col₂ += k·col₁`. `None` when
    /// neither exists.
    pub fn step(&self) -> Result<Option<Ss3State>> {
        for (to, from) in [(0, 1), (1, 0)] {
            match max_multiplier(&self.m, to, from) {
                Multiplier::Unbounded => return Err(Error::ReductionStuck),
                Multiplier::At(k) if k >= BigInt::one() => return Ok(Some(self.add_column(to, from, &k))),
                Multiplier::At(_) => {}
            }
        }
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy)]
enum Sign {
    Neg,
    NonPos,
    Pos,
}

/// Sign pattern of `M`: row 0 is `(c₁ < 0, c₂ ≤ 0)`, rows 1 and 2 are
/// `(B₁₁ > 0, B₁₂ < 0)` and `(B₂₁ ≤ 0, B₂₂ > 0)`.
const PATTERN: [[Sign; 2]; 3] = [[Sign::Neg, Sign::NonPos], [Sign::Pos, Sign::Neg], [Sign::NonPos, Sign::Pos]];

fn satisfies(x: &BigInt, s: Sign) -> bool {
    match s {
        Sign::Neg => x.is_negative(),
        Sign::NonPos => !x.is_positive(),
        Sign::Pos => x.is_positive(),
    }
}

fn admissible(m: &IntMat) -> bool {
    (0..3).all(|r| (0..2).all(|c| satisfies(&m[(r, c)], PATTERN[r][c])))
}

enum Multiplier {
    At(BigInt),
    Unbounded,
}

/// Largest `k ≥ 0` keeping column `to` of `M + k·col_from·e_toᵀ` inside the
/// sign pattern (assumes `M` itself is admissible).
fn max_multiplier(m: &IntMat, to: usize, from: usize) -> Multiplier {
    let mut best: Option<BigInt> = None;
    for r in 0..3 {
        // Normalize to `x + k y > 0` or `x + k y ≥ 0`.
        let (x, y, strict) = match PATTERN[r][to] {
            Sign::Pos => (m[(r, to)].clone(), m[(r, from)].clone(), true),
            Sign::Neg => (-&m[(r, to)], -&m[(r, from)], true),
            Sign::NonPos => (-&m[(r, to)], -&m[(r, from)], false),
        };
        if !y.is_negative() {
            continue;
        }
        let top = if strict { x - 1 } else { x };
        let k = top.div_floor(&-y);
        if best.as_ref().is_none_or(|b| k < *b) {
            best = Some(k);
        }
    }
    best.map_or(Multiplier::Unbounded, Multiplier::At)
}

/// Runs reduction steps until none applies and checks the terminal
/// conditions.
pub fn ss3_reduce(state: Ss3State) -> Result<Ss3State> {
    if !admissible(&state.m) {
        return Err(Error::ReductionStuck);
    }
    let mut state = state;
    while let Some(next) = state.step()? {
        state = next;
    }
    if state.is_target() {
        Ok(state)
    } else {
        Err(Error::ReductionStuck)
    }
}

/// Result of [`frobenius_ss3`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ss3Outcome {
    /// The reduction reached the target pattern; `bodies` are the right-hand
    /// sides `max(0, g₁, g₁+g₂)` and `max(0, g₂, g₁+g₂)`.
    Reduced { g: BigInt, state: Ss3State, bodies: [IntVec; 2] },
    /// The reduction got stuck and the general enumeration was used.
    Fallback { g: BigInt, result: MlfbResult },
}

impl Ss3Outcome {
    pub fn g(&self) -> &BigInt {
        match self {
            Ss3Outcome::Reduced { g, .. } | Ss3Outcome::Fallback { g, .. } => g,
        }
    }
}

pub fn frobenius_ss3(inst: &FrobeniusInstance, budget: u64) -> Result<Ss3Outcome> {
    let a = inst.generators();
    if a.len() != 3 {
        return Err(Error::DimensionMismatch(format!("three generators required, got {}", a.len())));
    }
    let basis = special_basis_3(&a[0], &a[1], &a[2])?;
    match ss3_reduce(Ss3State::initial(&basis)) {
        Ok(state) => {
            let g1 = state.m.col(0);
            let g2 = state.m.col(1);
            let sum = &g1 + &g2;
            let zero = IntVec::zeros(3);
            let b1 = max_vectors(&[zero.clone(), g1, sum.clone()])?;
            let b2 = max_vectors(&[zero, g2, sum])?;
            let best = a.dot(&b1).max(a.dot(&b2));
            Ok(Ss3Outcome::Reduced { g: best - inst.sum(), state, bodies: [b1, b2] })
        }
        Err(Error::ReductionStuck) => {
            let (g, result) = frobenius_by_mlfb(inst, budget)?;
            Ok(Ss3Outcome::Fallback { g, result })
        }
        Err(e) => Err(e),
    }
}

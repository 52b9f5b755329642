//! Column Hermite normal form and kernel-lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::int::{extended_gcd, IntMat, IntVec};

/// Replaces columns `p` and `q` of `m` by `a·col_p + b·col_q` and
/// `c·col_p + d·col_q`.
fn combine_columns(m: &mut IntMat, p: usize, q: usize, [a, b, c, d]: [&BigInt; 4]) {
    for r in 0..m.rows() {
        let x = m[(r, p)].clone();
        let y = m[(r, q)].clone();
        m[(r, p)] = a * &x + b * &y;
        m[(r, q)] = c * &x + d * &y;
    }
}

fn add_column_multiple(m: &mut IntMat, target: usize, source: usize, k: &BigInt) {
    for r in 0..m.rows() {
        let delta = k * &m[(r, source)];
        m[(r, target)] += delta;
    }
}

fn negate_column(m: &mut IntMat, j: usize) {
    for r in 0..m.rows() {
        let v = -&m[(r, j)];
        m[(r, j)] = v;
    }
}

/// Column Hermite normal form: returns `(H, U)` with `H = M·U`, `U`
/// unimodular and `H` lower column-echelon with positive pivots; entries left
/// of a pivot lie in `[0, pivot)`. Zero columns are moved to the right.
pub fn hnf(m: &IntMat) -> (IntMat, IntMat) {
    let n = m.cols();
    let mut h = m.clone();
    let mut u = IntMat::identity(n);
    let mut pivot = 0;
    for r in 0..m.rows() {
        if pivot == n {
            break;
        }
        for j in pivot + 1..n {
            if h[(r, j)].is_zero() {
                continue;
            }
            let a = h[(r, pivot)].clone();
            let b = h[(r, j)].clone();
            let (g, s, t) = extended_gcd(&a, &b);
            let c = -(&b / &g);
            let d = &a / &g;
            combine_columns(&mut h, pivot, j, [&s, &t, &c, &d]);
            combine_columns(&mut u, pivot, j, [&s, &t, &c, &d]);
        }
        if h[(r, pivot)].is_zero() {
            continue;
        }
        if h[(r, pivot)].is_negative() {
            negate_column(&mut h, pivot);
            negate_column(&mut u, pivot);
        }
        let p = h[(r, pivot)].clone();
        for j in 0..pivot {
            let q = h[(r, j)].div_floor(&p);
            if !q.is_zero() {
                let k = -q;
                add_column_multiple(&mut h, j, pivot, &k);
                add_column_multiple(&mut u, j, pivot, &k);
            }
        }
        pivot += 1;
    }
    (h, u)
}

/// Pairwise size reduction of the columns of `m` in the Euclidean norm.
/// Each accepted step strictly shrinks a column, so the loop terminates; the
/// column lattice is unchanged.
pub(crate) fn size_reduce_columns(m: &mut IntMat) {
    let n = m.cols();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let ci = m.col(i);
                let cj = m.col(j);
                let nj = cj.dot(&cj);
                if nj.is_zero() {
                    continue;
                }
                let dot = ci.dot(&cj);
                let two = BigInt::from(2);
                let q = (&two * &dot + &nj).div_floor(&(&two * &nj));
                if q.is_zero() {
                    continue;
                }
                let reduced = &ci - &cj.scale(&q);
                if reduced.dot(&reduced) < ci.dot(&ci) {
                    add_column_multiple(m, i, j, &-q);
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Basis of the saturated lattice `{v ∈ ℤⁿ : a·v = 0}` as the columns of an
/// `n × (n-1)` matrix. Its signed maximal minors equal `±a`.
pub fn kernel_lattice_basis(a: &IntVec) -> Result<IntMat> {
    let n = a.len();
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("need at least two entries, got {n}")));
    }
    if let Some(index) = a.iter().position(|c| !c.is_positive()) {
        return Err(Error::NonPositive { index });
    }
    let g = a.content();
    if !g.is_one() {
        return Err(Error::NonCoprime(g.to_string()));
    }
    let row = IntMat::from_row_vecs(std::slice::from_ref(a))?;
    let (_, u) = hnf(&row);
    let cols: Vec<usize> = (1..n).collect();
    let rows: Vec<usize> = (0..n).collect();
    let mut basis = u.select(&rows, &cols);
    size_reduce_columns(&mut basis);
    Ok(basis)
}

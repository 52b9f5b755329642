//! Buchberger completion on lattice vectors.
//!
//! A lattice vector `w` stands for the pure binomial `x^{w⁺} - x^{w⁻}`. Every
//! vector is kept oriented so that `x^{w⁺}` is its leading term. Because
//! `y·w = 0` for a strictly positive grading `y`, both terms have the same
//! degree and a term order only has to break ties inside a degree. The orders
//! used here are reverse-lexicographic: `x^α ≻ x^β` iff the first nonzero
//! entry of `α - β`, scanned in the order's coordinate sequence, is negative.
//! The first coordinate of that sequence is therefore the cheapest variable.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::int::IntVec;

#[derive(Debug, Clone)]
pub(crate) struct RevLex {
    scan: Vec<usize>,
}

impl RevLex {
    /// Order whose cheapest variable is `first`; remaining coordinates are
    /// scanned in increasing index order.
    pub(crate) fn cheapest(first: usize, len: usize) -> Self {
        let mut scan = vec![first];
        scan.extend((0..len).filter(|&i| i != first));
        RevLex { scan }
    }

    /// Orients `w` so that its leading part is `w⁺`; `None` for `w = 0`.
    pub(crate) fn orient(&self, w: IntVec) -> Option<IntVec> {
        let pivot = self.scan.iter().map(|&i| &w[i]).find(|c| !c.is_zero())?;
        Some(if pivot.is_negative() { w } else { -&w })
    }
}

#[derive(Debug, Clone)]
struct Element {
    w: IntVec,
    lead: IntVec,
}

impl Element {
    fn new(w: IntVec) -> Self {
        let lead = w.positive_part();
        Element { w, lead }
    }
}

fn divides(small: &IntVec, big: &IntVec) -> bool {
    small.iter().zip(big).all(|(s, b)| s <= b)
}

fn disjoint(u: &IntVec, v: &IntVec) -> bool {
    u.iter().zip(v).all(|(a, b)| a.is_zero() || b.is_zero())
}

struct Completion<'a> {
    order: &'a RevLex,
    grading: &'a IntVec,
    basis: Vec<Element>,
    pairs: BinaryHeap<Reverse<(BigInt, usize, usize)>>,
}

impl Completion<'_> {
    /// Leading-term reduction to normal form; `None` if it reduces to zero.
    fn reduce(&self, w: IntVec) -> Option<IntVec> {
        let mut w = self.order.orient(w)?;
        loop {
            let lead = w.positive_part();
            match self.basis.iter().find(|g| divides(&g.lead, &lead)) {
                Some(g) => w = self.order.orient(&w - &g.w)?,
                None => return Some(w),
            }
        }
    }

    fn insert(&mut self, w: IntVec) {
        let e = Element::new(w);
        let idx = self.basis.len();
        for (i, g) in self.basis.iter().enumerate() {
            if disjoint(&g.lead, &e.lead) {
                continue;
            }
            let lcm: BigInt = g.lead.iter().zip(&e.lead).zip(self.grading).map(|((a, b), y)| a.max(b) * y).sum();
            self.pairs.push(Reverse((lcm, i, idx)));
        }
        self.basis.push(e);
    }

    fn run(mut self, generators: Vec<IntVec>) -> Vec<IntVec> {
        for w in generators {
            if let Some(r) = self.reduce(w) {
                self.insert(r);
            }
        }
        while let Some(Reverse((_, i, j))) = self.pairs.pop() {
            let s = &self.basis[i].w - &self.basis[j].w;
            if let Some(r) = self.reduce(s) {
                self.insert(r);
            }
        }
        minimize(self.basis)
    }
}

/// Keeps one element per minimal leading term.
fn minimize(basis: Vec<Element>) -> Vec<IntVec> {
    let mut keep: Vec<Element> = Vec::new();
    let mut sorted = basis;
    sorted
        .sort_by(|a, b| a.lead.iter().sum::<BigInt>().cmp(&b.lead.iter().sum::<BigInt>()).then_with(|| a.w.cmp(&b.w)));
    for e in sorted {
        if !keep.iter().any(|k| divides(&k.lead, &e.lead)) {
            keep.retain(|k| !divides(&e.lead, &k.lead));
            keep.push(e);
        }
    }
    keep.into_iter().map(|e| e.w).collect()
}

/// Completes `generators` to a minimal Gröbner basis (in vector form) of the
/// ideal they generate after cancelling common monomial factors.
pub(crate) fn complete(generators: Vec<IntVec>, grading: &IntVec, order: &RevLex) -> Vec<IntVec> {
    Completion { order, grading, basis: Vec::new(), pairs: BinaryHeap::new() }.run(generators)
}

/// Reduced Gröbner basis of the lattice ideal of the lattice spanned by
/// `generators`, for the order whose cheapest variable is coordinate 0.
///
/// Saturation runs one variable at a time: completing under an order that
/// makes `x_i` cheapest yields an `x_i`-saturated ideal, since no pure
/// binomial has `x_i` dividing both terms.
pub(crate) fn lattice_ideal_basis(generators: Vec<IntVec>, grading: &IntVec) -> Vec<IntVec> {
    let n = grading.len();
    let mut current = generators;
    for i in (1..n).rev() {
        current = complete(current, grading, &RevLex::cheapest(i, n));
    }
    let order = RevLex::cheapest(0, n);
    let minimal = complete(current, grading, &order);
    tail_reduce(minimal, &order)
}

/// Reduces the trailing term of every element against the others.
fn tail_reduce(minimal: Vec<IntVec>, order: &RevLex) -> Vec<IntVec> {
    let elements: Vec<Element> = minimal.into_iter().map(Element::new).collect();
    elements
        .iter()
        .map(|e| {
            let mut w = e.w.clone();
            loop {
                let tail = w.negative_part();
                match elements.iter().find(|g| divides(&g.lead, &tail)) {
                    Some(g) => w = &w + &g.w,
                    None => break,
                }
            }
            let w = order.orient(w).expect("tail reduction cannot cancel a saturated element");
            debug_assert_eq!(w.positive_part(), e.lead);
            w
        })
        .collect()
}

//! The Buchberger-Moller algorithm: reduced Groebner basis and standard
//! monomials of the vanishing ideal of a finite point set, by Gaussian
//! elimination on evaluation vectors.

use std::collections::HashSet;

use crate::error::Error;
use crate::field::{EchelonBasis, FieldElement, Insertion, PrimeField};
use crate::order::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// A finite set of distinct points, possibly living on a coordinate subset
/// of a larger ambient ring. Each point stores one value per entry of
/// `vars`; monomials keep their full-length (ambient) representation.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: PrimeField,
    ambient_n: usize,
    vars: Vec<usize>,
    points: Vec<Vec<FieldElement>>,
    order: TermOrder,
}

impl PointSet {
    pub fn new(
        field: PrimeField,
        ambient_n: usize,
        vars: Vec<usize>,
        points: Vec<Vec<FieldElement>>,
        order: TermOrder,
    ) -> Result<PointSet, Error> {
        if vars.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        assert!(
            vars.windows(2).all(|w| w[0] < w[1]) && *vars.last().unwrap() < ambient_n,
            "vars must be ascending ambient indices"
        );
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(points.len());
        for (t, point) in points.iter().enumerate() {
            if point.len() != vars.len() {
                return Err(Error::DimensionMismatch { expected: vars.len(), got: point.len() });
            }
            if !seen.insert(point.iter().map(|e| e.value()).collect()) {
                return Err(Error::DuplicatePoint(t));
            }
        }
        Ok(PointSet { field, ambient_n, vars, points, order })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Evaluates a monomial supported on `vars` at the t-th point.
    fn eval_monomial(&self, mono: &Monomial, t: usize) -> FieldElement {
        let point = &self.points[t];
        let mut acc = FieldElement::ONE;
        for (var, exp) in mono.iter() {
            let pos = self
                .vars
                .binary_search(&var)
                .expect("monomial mentions a variable outside the point set");
            acc = self.field.mul(acc, self.field.pow(point[pos], u64::from(exp)));
        }
        acc
    }
}

/// Computes the reduced Groebner basis and the standard monomials of the
/// vanishing ideal of `ps`.
///
/// Candidates are processed in ascending term order from a queue seeded
/// with 1 and extended by variable multiples of accepted standard
/// monomials; candidates divisible by an already-found leading term are
/// skipped. A dependent evaluation vector directly yields a reduced,
/// monic basis element `candidate - sum(c_j * sm_j)`.
///
/// The basis comes back sorted by ascending leading term and the standard
/// monomials in ascending order, with exactly one monomial per point.
pub fn buchberger_moller(ps: &PointSet) -> Result<(Vec<Polynomial>, Vec<Monomial>), Error> {
    let field = ps.field;
    let order = &ps.order;
    let m = ps.points.len();
    let mut span = EchelonBasis::new(field, m);
    let mut standard: Vec<Monomial> = Vec::new();
    let mut basis: Vec<Polynomial> = Vec::new();
    // Sorted descending; pop() takes the order-smallest candidate.
    let mut queue: Vec<Monomial> = vec![Monomial::one(ps.ambient_n)];
    while let Some(cand) = queue.pop() {
        let reducible = basis
            .iter()
            .any(|g| g.leading_term().expect("basis elements are nonzero").monomial.divides(&cand));
        if reducible {
            continue;
        }
        let evals: Vec<FieldElement> = (0..m).map(|t| ps.eval_monomial(&cand, t)).collect();
        match span.insert(&evals)? {
            Insertion::Dependent(coeffs) => {
                let mut pairs = Vec::with_capacity(coeffs.len() + 1);
                pairs.push((FieldElement::ONE, cand));
                for (c, sm) in coeffs.iter().zip(&standard) {
                    if !c.is_zero() {
                        pairs.push((field.neg(*c), sm.clone()));
                    }
                }
                basis.push(Polynomial::from_terms(field, order, pairs));
            }
            Insertion::Independent => {
                for &var in &ps.vars {
                    push_unique(&mut queue, cand.mul_var(var), order);
                }
                standard.push(cand);
            }
        }
    }
    debug_assert_eq!(standard.len(), m, "standard monomials must count the points");
    Ok((basis, standard))
}

fn push_unique(queue: &mut Vec<Monomial>, mono: Monomial, order: &TermOrder) {
    match queue.binary_search_by(|probe| order.compare(&mono, probe)) {
        Ok(_) => {} // already queued
        Err(pos) => queue.insert(pos, mono),
    }
}

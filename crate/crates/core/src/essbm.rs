//! Variable-by-variable basis construction optimized for point sets with
//! far fewer points than variables.
//!
//! Variables are visited from the order-smallest up. A variable whose
//! evaluation column is a combination of the standard-monomial columns
//! yields a linear relation with that variable as leading term; otherwise
//! the variable is essential and the basis over the essential variables is
//! recomputed on the projected points.

use std::collections::HashSet;

use crate::bma::{buchberger_moller, PointSet};
use crate::error::Error;
use crate::field::{EchelonBasis, FieldElement, Insertion, Matrix, PrimeField};
use crate::order::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// A finite set of m distinct points in F_p^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variety {
    field: PrimeField,
    n_vars: usize,
    points: Vec<Vec<FieldElement>>,
}

impl Variety {
    /// Strict constructor: duplicate points are an error.
    pub fn new(
        field: PrimeField,
        n_vars: usize,
        points: Vec<Vec<FieldElement>>,
    ) -> Result<Variety, Error> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(points.len());
        for (t, point) in points.iter().enumerate() {
            if point.len() != n_vars {
                return Err(Error::DimensionMismatch { expected: n_vars, got: point.len() });
            }
            if !seen.insert(point.iter().map(|e| e.value()).collect()) {
                return Err(Error::DuplicatePoint(t));
            }
        }
        Ok(Variety { field, n_vars, points })
    }

    /// Lenient constructor: drops repeated rows (the vanishing ideal is
    /// unchanged) and reports how many were removed.
    pub fn new_dedup(
        field: PrimeField,
        n_vars: usize,
        points: Vec<Vec<FieldElement>>,
    ) -> Result<(Variety, usize), Error> {
        let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(points.len());
        let before = points.len();
        let mut kept = Vec::with_capacity(points.len());
        for point in points {
            if seen.insert(point.iter().map(|e| e.value()).collect()) {
                kept.push(point);
            }
        }
        let removed = before - kept.len();
        Ok((Variety::new(field, n_vars, kept)?, removed))
    }

    /// Convenience constructor from raw residues (reduced mod p).
    pub fn from_values(field: PrimeField, n_vars: usize, rows: &[Vec<u64>]) -> Result<Variety, Error> {
        let points = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.element(v)).collect())
            .collect();
        Variety::new(field, n_vars, points)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Number of points, usually written m.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }
}

/// Evaluation matrix of a monomial list over the points of a variety:
/// entry (t, j) is the j-th monomial evaluated at the t-th point.
#[derive(Clone, Debug)]
pub struct EvaluationMatrix {
    pub monomials: Vec<Monomial>,
    pub matrix: Matrix,
}

pub fn build_eval_matrix(monomials: &[Monomial], variety: &Variety) -> EvaluationMatrix {
    let field = variety.field;
    let m = variety.len();
    let mut matrix = Matrix::zero(m, monomials.len());
    for (j, mono) in monomials.iter().enumerate() {
        for t in 0..m {
            matrix.set(t, j, eval_monomial_full(field, mono, &variety.points[t]));
        }
    }
    EvaluationMatrix { monomials: monomials.to_vec(), matrix }
}

fn eval_monomial_full(field: PrimeField, mono: &Monomial, point: &[FieldElement]) -> FieldElement {
    let mut acc = FieldElement::ONE;
    for (var, exp) in mono.iter() {
        acc = field.mul(acc, field.pow(point[var], u64::from(exp)));
    }
    acc
}

/// Restriction of the points to a variable subset, with collapsed
/// duplicates removed (first occurrence kept).
pub fn project_points(
    variety: &Variety,
    vars: &[usize],
    order: &TermOrder,
) -> Result<PointSet, Error> {
    if vars.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    let mut vars = vars.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(variety.len());
    let mut projected: Vec<Vec<FieldElement>> = Vec::new();
    for point in &variety.points {
        let row: Vec<FieldElement> = vars.iter().map(|&v| point[v]).collect();
        if seen.insert(row.iter().map(|e| e.value()).collect()) {
            projected.push(row);
        }
    }
    PointSet::new(variety.field, variety.n_vars, vars, projected, order.clone())
}

/// The standard monomials of `standard` (sorted ascending) that are
/// strictly smaller than the variable `var`.
pub fn candidate_monomials(
    standard: &[Monomial],
    var: usize,
    order: &TermOrder,
) -> Vec<Monomial> {
    standard[..prefix_len(standard, var, order)].to_vec()
}

fn prefix_len(standard: &[Monomial], var: usize, order: &TermOrder) -> usize {
    let var_mono = Monomial::variable(var, order.n_vars());
    standard.partition_point(|s| order.compare(s, &var_mono) == std::cmp::Ordering::Less)
}

/// Output of [`essbm`]: the reduced Groebner basis split into the part
/// supported on essential variables and the linear relations that rewrite
/// each remaining variable, plus the standard monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerResult {
    pub n_vars: usize,
    /// Essential variables, ascending by index.
    pub essential_vars: Vec<usize>,
    /// Standard monomials, ascending in the term order; exactly one per
    /// point.
    pub standard_monomials: Vec<Monomial>,
    /// Basis elements supported on the essential variables, ascending by
    /// leading term.
    pub basis: Vec<Polynomial>,
    /// One relation per inessential variable, in processing order; each has
    /// that variable as leading term.
    pub relations: Vec<Polynomial>,
}

impl GroebnerResult {
    /// The full reduced Groebner basis: basis elements first, then the
    /// relations.
    pub fn full_basis(&self) -> Vec<Polynomial> {
        self.basis.iter().chain(&self.relations).cloned().collect()
    }
}

/// Computes the reduced Groebner basis and standard monomials of the
/// vanishing ideal of `variety`, visiting variables from the smallest up.
pub fn essbm(variety: &Variety, order: &TermOrder) -> Result<GroebnerResult, Error> {
    assert_eq!(order.n_vars(), variety.n_vars, "order/variety variable count mismatch");
    let field = variety.field;
    let n = variety.n_vars;
    let m = variety.len();

    let mut essential: Vec<usize> = Vec::new();
    let mut standard: Vec<Monomial> = vec![Monomial::one(n)];
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut relations: Vec<Polynomial> = Vec::new();

    // Columns of the running linear system: evaluation vectors of the
    // standard monomials smaller than the current variable. The prefix only
    // grows while the standard monomials are unchanged, so the elimination
    // state is reused across consecutive variables.
    let mut span = EchelonBasis::new(field, m);
    let mut cols = 0usize;

    for var in order.variable_rank() {
        let wanted = prefix_len(&standard, var, order);
        while cols < wanted {
            let column: Vec<FieldElement> = variety
                .points
                .iter()
                .map(|pt| eval_monomial_full(field, &standard[cols], pt))
                .collect();
            let outcome = span.insert(&column)?;
            debug_assert_eq!(
                outcome,
                Insertion::Independent,
                "standard monomial columns are independent"
            );
            cols += 1;
        }
        let var_column: Vec<FieldElement> =
            variety.points.iter().map(|pt| pt[var]).collect();
        match span.classify(&var_column)? {
            Insertion::Dependent(coeffs) => {
                let mut pairs = Vec::with_capacity(coeffs.len() + 1);
                pairs.push((FieldElement::ONE, Monomial::variable(var, n)));
                for (c, sm) in coeffs.iter().zip(&standard) {
                    if !c.is_zero() {
                        pairs.push((field.neg(*c), sm.clone()));
                    }
                }
                relations.push(Polynomial::from_terms(field, order, pairs));
            }
            Insertion::Independent => {
                let pos = essential.binary_search(&var).unwrap_err();
                essential.insert(pos, var);
                let projected = project_points(variety, &essential, order)?;
                let (new_basis, new_standard) = buchberger_moller(&projected)?;
                basis = new_basis;
                standard = new_standard;
                span = EchelonBasis::new(field, m);
                cols = 0;
            }
        }
    }

    Ok(GroebnerResult {
        n_vars: n,
        essential_vars: essential,
        standard_monomials: standard,
        basis,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn variety(p: u64, n: usize, rows: &[&[u64]]) -> Variety {
        let field = PrimeField::new(p).unwrap();
        Variety::from_values(field, n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn rendered(polys: &[Polynomial]) -> Vec<String> {
        polys.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn single_point_gives_only_relations() {
        let v = variety(5, 3, &[&[1, 2, 3]]);
        let res = essbm(&v, &TermOrder::lex(3)).unwrap();
        assert!(res.essential_vars.is_empty());
        assert!(res.basis.is_empty());
        // Processing order is x3, x2, x1 (smallest first).
        assert_eq!(rendered(&res.relations), vec!["x3 + 2", "x2 + 3", "x1 + 4"]);
        assert_eq!(res.standard_monomials.len(), 1);
        assert!(res.standard_monomials[0].is_one());
    }

    #[test]
    fn two_points_in_the_plane() {
        let v = variety(3, 2, &[&[0, 0], &[1, 1]]);
        let res = essbm(&v, &TermOrder::lex(2)).unwrap();
        assert_eq!(res.essential_vars, vec![1]);
        assert_eq!(rendered(&res.basis), vec!["x2^2 + 2*x2"]);
        assert_eq!(rendered(&res.relations), vec!["x1 + 2*x2"]);
        let sms: Vec<String> = res.standard_monomials.iter().map(ToString::to_string).collect();
        assert_eq!(sms, vec!["1", "x2"]);
    }

    #[test]
    fn projection_collapse_example() {
        let v = variety(3, 3, &[&[0, 0, 0], &[1, 1, 0], &[2, 1, 0]]);
        let res = essbm(&v, &TermOrder::lex(3)).unwrap();
        assert_eq!(res.essential_vars, vec![0, 1]);
        assert_eq!(rendered(&res.relations), vec!["x3"]);
        assert_eq!(
            rendered(&res.basis),
            vec!["x2^2 + 2*x2", "x1*x2 + 2*x1", "x1^2 + 2*x2"]
        );
        let sms: Vec<String> = res.standard_monomials.iter().map(ToString::to_string).collect();
        assert_eq!(sms, vec!["1", "x2", "x1"]);
    }

    #[test]
    fn project_points_examples() {
        let v = variety(3, 3, &[&[0, 0, 0], &[1, 1, 0], &[2, 1, 0]]);
        let order = TermOrder::lex(3);
        let all = project_points(&v, &[0, 1, 2], &order).unwrap();
        assert_eq!(all.len(), 3);
        let middle = project_points(&v, &[1], &order).unwrap();
        assert_eq!(middle.len(), 2); // third point collapses onto the second
        let first_two = project_points(&v, &[0, 1], &order).unwrap();
        assert_eq!(first_two.len(), 3);
        assert!(matches!(project_points(&v, &[], &order), Err(Error::EmptyVariableSet)));
    }

    #[test]
    fn candidate_monomials_examples() {
        let n = 3;
        let one = Monomial::one(n);
        let x3 = Monomial::variable(2, n);
        let x3sq = x3.mul(&x3);
        let sms = vec![one.clone(), x3.clone(), x3sq.clone()];

        let grevlex = TermOrder::grevlex(n);
        assert_eq!(candidate_monomials(&sms, 1, &grevlex), vec![one.clone(), x3.clone()]);

        let lex = TermOrder::lex(n);
        assert_eq!(candidate_monomials(&sms, 1, &lex), vec![one.clone(), x3, x3sq]);

        assert_eq!(candidate_monomials(&[one.clone()], 0, &lex), vec![one]);
    }

    #[test]
    fn build_eval_matrix_example() {
        let v = variety(3, 3, &[&[0, 0, 0], &[1, 1, 0], &[2, 1, 0]]);
        let monos = vec![Monomial::one(3), Monomial::variable(1, 3)];
        let em = build_eval_matrix(&monos, &v);
        assert_eq!(em.matrix.rows(), 3);
        assert_eq!(em.matrix.cols(), 2);
        let got: Vec<Vec<u64>> = (0..3)
            .map(|t| (0..2).map(|j| em.matrix.get(t, j).value()).collect())
            .collect();
        assert_eq!(got, vec![vec![1, 0], vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn duplicate_points_rejected_strict_accepted_lenient() {
        let field = PrimeField::new(3).unwrap();
        let rows = vec![vec![0u64, 0], vec![1, 1], vec![0, 0]];
        let points: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.element(v)).collect())
            .collect();
        assert!(matches!(
            Variety::new(field, 2, points.clone()),
            Err(Error::DuplicatePoint(2))
        ));
        let (v, removed) = Variety::new_dedup(field, 2, points).unwrap();
        assert_eq!(removed, 1);
        assert_eq!(v.len(), 2);
    }
}

//! Sparse polynomials over F_p: leading term, support, evaluation, normal
//! form, and the rewriter that removes variables covered by a basis
//! relation of the shape x_i - g.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::field::{FieldElement, PrimeField};
use crate::order::{Monomial, TermOrder};

/// One term of a polynomial; the coefficient is always nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

/// A polynomial stored as a term list, strictly decreasing under the
/// ambient term order. The zero polynomial is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    /// Normalizes an arbitrary list of (coefficient, monomial) pairs:
    /// sorts descending, merges duplicates, drops zeros.
    pub fn from_terms(
        field: PrimeField,
        order: &TermOrder,
        pairs: Vec<(FieldElement, Monomial)>,
    ) -> Polynomial {
        let mut pairs = pairs;
        pairs.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut terms: Vec<Term> = Vec::with_capacity(pairs.len());
        for (coeff, monomial) in pairs {
            match terms.last_mut() {
                Some(last) if last.monomial == monomial => {
                    last.coeff = field.add(last.coeff, coeff);
                    if last.coeff.is_zero() {
                        terms.pop();
                    }
                }
                _ => {
                    if !coeff.is_zero() {
                        terms.push(Term { coeff, monomial });
                    }
                }
            }
        }
        Polynomial { terms }
    }

    pub fn constant(field: PrimeField, value: u64, n_vars: usize) -> Polynomial {
        let coeff = field.element(value);
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: vec![Term { coeff, monomial: Monomial::one(n_vars) }] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// The order-largest term; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// f - LT(f).
    pub fn tail(&self) -> Polynomial {
        Polynomial { terms: self.terms.get(1..).unwrap_or_default().to_vec() }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_term().is_some_and(|t| t.coeff == FieldElement::ONE)
    }

    /// Variables appearing with positive exponent in some term.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms.iter().flat_map(|t| t.monomial.support()).collect()
    }

    /// Value of the polynomial at a full-length point.
    pub fn evaluate(&self, field: PrimeField, point: &[FieldElement]) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for t in &self.terms {
            let mut val = t.coeff;
            for (var, exp) in t.monomial.iter() {
                assert!(var < point.len(), "point is shorter than the ambient ring");
                val = field.mul(val, field.pow(point[var], u64::from(exp)));
            }
            acc = field.add(acc, val);
        }
        acc
    }

    /// Merge-adds two normalized polynomials.
    pub fn add(&self, other: &Polynomial, field: PrimeField, order: &TermOrder) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].monomial, &b[j].monomial) {
                std::cmp::Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = field.add(a[i].coeff, b[j].coeff);
                    if !coeff.is_zero() {
                        terms.push(Term { coeff, monomial: a[i].monomial.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend_from_slice(&b[j..]);
        Polynomial { terms }
    }

    pub fn neg(&self, field: PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: field.neg(t.coeff), monomial: t.monomial.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, field: PrimeField, order: &TermOrder) -> Polynomial {
        self.add(&other.neg(field), field, order)
    }

    /// Multiplies by the term c * mono. Term order is multiplicative, so
    /// the term list stays sorted.
    pub fn mul_term(&self, field: PrimeField, coeff: FieldElement, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(t.coeff, coeff),
                    monomial: t.monomial.mul(mono),
                })
                .collect(),
        }
    }
}

/// Remainder of `f` under division by `divisors`: no monomial of the result
/// is divisible by any leading term of the divisors, and the difference lies
/// in the ideal they generate. Deterministic rule: always reduce the largest
/// reducible monomial, picking the first divisor in list order.
pub fn normal_form(
    f: &Polynomial,
    divisors: &[Polynomial],
    field: PrimeField,
    order: &TermOrder,
) -> Polynomial {
    let leads: Vec<&Term> =
        divisors.iter().map(|g| g.leading_term().expect("divisors must be nonzero")).collect();
    let mut rem = f.clone();
    let mut idx = 0;
    'scan: while idx < rem.terms.len() {
        let t = &rem.terms[idx];
        for (g, lead) in divisors.iter().zip(&leads) {
            if let Some(q) = t.monomial.try_div(&lead.monomial) {
                let factor =
                    field.mul(t.coeff, field.inverse(lead.coeff).expect("nonzero leading coeff"));
                let subtrahend = g.mul_term(field, factor, &q);
                rem = rem.sub(&subtrahend, field, order);
                // Terms above idx were irreducible and are untouched; the
                // monomial at idx was cancelled exactly.
                continue 'scan;
            }
        }
        idx += 1;
    }
    rem
}

/// Rewrites `f` so that no variable heading a relation in `relations`
/// appears, without changing the leading term; the difference vanishes on
/// the underlying points because each rewrite subtracts a multiple of a
/// relation. Each relation must be monic with a single-variable leading
/// term and a tail free of relation variables; variables are eliminated
/// from the largest down, one power at a time.
pub fn eliminate_inessential(
    f: &Polynomial,
    relations: &[Polynomial],
    field: PrimeField,
    order: &TermOrder,
) -> Result<Polynomial, Error> {
    let mut tail_for: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for rel in relations {
        let lead = rel.leading_term().expect("relations must be nonzero");
        let mut vars = lead.monomial.iter();
        let var = match (vars.next(), vars.next()) {
            (Some((v, 1)), None) => v,
            _ => panic!("relation leading term must be a single variable"),
        };
        assert!(lead.coeff == FieldElement::ONE, "relation must be monic");
        tail_for.insert(var, rel.tail());
    }
    for tail in tail_for.values() {
        for v in tail.support() {
            assert!(!tail_for.contains_key(&v), "relation tail mentions a relation variable");
        }
    }

    if f.is_zero() {
        return Ok(Polynomial::zero());
    }
    for v in f.leading_term().expect("nonzero").monomial.support() {
        if tail_for.contains_key(&v) {
            return Err(Error::InessentialLeadingTerm(v));
        }
    }

    let n = order.n_vars();
    let mut present: Vec<usize> =
        f.support().into_iter().filter(|v| tail_for.contains_key(v)).collect();
    // Largest variable first.
    present.sort_by(|&x, &y| {
        order.compare(&Monomial::variable(y, n), &Monomial::variable(x, n))
    });

    let mut out = f.clone();
    for beta in present {
        let beta_mono = Monomial::variable(beta, n);
        let tail = &tail_for[&beta];
        // Substitute one power of x_beta per pass: c * x_beta^e * rest
        // becomes -c * x_beta^(e-1) * rest * tail.
        while out.terms.iter().any(|t| t.monomial.exponent(beta) > 0) {
            let mut next = Polynomial::zero();
            for t in &out.terms {
                if t.monomial.exponent(beta) == 0 {
                    next = next.add(
                        &Polynomial { terms: vec![t.clone()] },
                        field,
                        order,
                    );
                } else {
                    let rest = t.monomial.try_div(&beta_mono).expect("positive exponent");
                    let replaced = tail.mul_term(field, field.neg(t.coeff), &rest);
                    next = next.add(&replaced, field, order);
                }
            }
            out = next;
        }
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if t.monomial.is_one() {
                write!(f, "{}", t.coeff)?;
            } else if t.coeff == FieldElement::ONE {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{}*{}", t.coeff, t.monomial)?;
            }
        }
        Ok(())
    }
}

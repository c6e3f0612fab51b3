//! Executable checks for every contract a computed basis must satisfy,
//! runnable standalone on any result. Checks report failures with a
//! counterexample instead of aborting, so a whole suite can be printed.

use std::collections::{BTreeSet, HashSet};

use crate::bma::{buchberger_moller, PointSet};
use crate::error::Error;
use crate::essbm::{GroebnerResult, Variety};
use crate::field::{EchelonBasis, FieldElement, Insertion};
use crate::order::{Monomial, TermOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
}

impl CheckStatus {
    pub fn passed(&self) -> bool {
        matches!(self, CheckStatus::Pass)
    }

    fn fail(msg: impl Into<String>) -> CheckStatus {
        CheckStatus::Fail(msg.into())
    }
}

/// One line per executed check; all-pass means every verified invariant
/// held on the given instance.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub checks: Vec<(&'static str, CheckStatus)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, s)| s.passed())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, status) in &self.checks {
            match status {
                CheckStatus::Pass => out.push_str(&format!("{name}: PASS\n")),
                CheckStatus::Fail(msg) => out.push_str(&format!("{name}: FAIL {msg}\n")),
            }
        }
        out
    }
}

fn render_point(point: &[FieldElement]) -> String {
    let coords: Vec<String> = point.iter().map(ToString::to_string).collect();
    format!("({})", coords.join(", "))
}

/// Passes iff every polynomial evaluates to zero at every point.
pub fn check_vanishing(polys: &[Polynomial], variety: &Variety) -> CheckStatus {
    let field = variety.field();
    for g in polys {
        for point in variety.points() {
            let value = g.evaluate(field, point);
            if !value.is_zero() {
                return CheckStatus::fail(format!(
                    "{g} evaluates to {value} at {}",
                    render_point(point)
                ));
            }
        }
    }
    CheckStatus::Pass
}

/// Passes iff no leading term divides any monomial of another element.
/// The input must consist of nonzero monic polynomials.
pub fn check_reduced(polys: &[Polynomial], _order: &TermOrder) -> Result<CheckStatus, Error> {
    for g in polys {
        if g.leading_term().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        if !g.is_monic() {
            return Err(Error::NonMonic);
        }
    }
    for (i, g) in polys.iter().enumerate() {
        let lead = &g.leading_term().expect("nonzero").monomial;
        for (j, h) in polys.iter().enumerate() {
            if i == j {
                continue;
            }
            for t in h.terms() {
                if lead.divides(&t.monomial) {
                    return Ok(CheckStatus::fail(format!(
                        "leading term {lead} of {g} divides {} in {h}",
                        t.monomial
                    )));
                }
            }
        }
    }
    Ok(CheckStatus::Pass)
}

/// Passes iff the standard monomials count the points, form an order ideal,
/// have exactly the essential variables as support, and have an invertible
/// evaluation matrix over the points.
pub fn check_sm(standard: &[Monomial], variety: &Variety, essential: &[usize]) -> CheckStatus {
    let m = variety.len();
    if standard.len() != m {
        return CheckStatus::fail(format!("{} standard monomials for {m} points", standard.len()));
    }
    let set: HashSet<&Monomial> = standard.iter().collect();
    for sm in standard {
        for var in sm.support() {
            let divisor = sm
                .try_div(&Monomial::variable(var, sm.n_vars()))
                .expect("support variable divides");
            if !set.contains(&divisor) {
                return CheckStatus::fail(format!(
                    "{sm} is standard but its divisor {divisor} is not"
                ));
            }
        }
    }
    let support: BTreeSet<usize> = standard.iter().flat_map(|sm| sm.support()).collect();
    let expected: BTreeSet<usize> = essential.iter().copied().collect();
    if support != expected {
        let name = |s: &BTreeSet<usize>| {
            let vars: Vec<String> = s.iter().map(|v| format!("x{}", v + 1)).collect();
            format!("{{{}}}", vars.join(", "))
        };
        return CheckStatus::fail(format!(
            "support of the standard monomials is {}, essential variables are {}",
            name(&support),
            name(&expected)
        ));
    }
    let field = variety.field();
    let mut span = EchelonBasis::new(field, m);
    for sm in standard {
        let column: Vec<FieldElement> =
            variety.points().iter().map(|pt| sm_eval(variety, sm, pt)).collect();
        match span.insert(&column) {
            Ok(Insertion::Independent) => {}
            Ok(Insertion::Dependent(_)) => {
                return CheckStatus::fail(format!(
                    "evaluation matrix is singular: column of {sm} is dependent"
                ));
            }
            Err(e) => return CheckStatus::fail(e.to_string()),
        }
    }
    CheckStatus::Pass
}

fn sm_eval(variety: &Variety, mono: &Monomial, point: &[FieldElement]) -> FieldElement {
    let field = variety.field();
    let mut acc = FieldElement::ONE;
    for (var, exp) in mono.iter() {
        acc = field.mul(acc, field.pow(point[var], u64::from(exp)));
    }
    acc
}

/// Passes iff there is exactly one monic relation per inessential variable,
/// each led by that single variable, with every tail monomial standard and
/// strictly below the leading variable.
pub fn check_rel_shape(result: &GroebnerResult, order: &TermOrder) -> CheckStatus {
    let n = result.n_vars;
    let essential: BTreeSet<usize> = result.essential_vars.iter().copied().collect();
    if result.relations.len() != n - essential.len() {
        return CheckStatus::fail(format!(
            "{} relations for {} inessential variables",
            result.relations.len(),
            n - essential.len()
        ));
    }
    if essential.len() > result.standard_monomials.len() {
        return CheckStatus::fail(format!(
            "{} essential variables exceed the {} standard monomials",
            essential.len(),
            result.standard_monomials.len()
        ));
    }
    let standard: HashSet<&Monomial> = result.standard_monomials.iter().collect();
    let mut lead_vars: BTreeSet<usize> = BTreeSet::new();
    for rel in &result.relations {
        let Some(lead) = rel.leading_term() else {
            return CheckStatus::fail("zero polynomial among the relations".to_string());
        };
        if lead.coeff != FieldElement::ONE {
            return CheckStatus::fail(format!("relation {rel} is not monic"));
        }
        let mut support = lead.monomial.iter();
        let var = match (support.next(), support.next()) {
            (Some((v, 1)), None) => v,
            _ => {
                return CheckStatus::fail(format!(
                    "leading term {} of {rel} is not a single variable",
                    lead.monomial
                ))
            }
        };
        if essential.contains(&var) {
            return CheckStatus::fail(format!(
                "relation {rel} is led by the essential variable x{}",
                var + 1
            ));
        }
        if !lead_vars.insert(var) {
            return CheckStatus::fail(format!("two relations led by x{}", var + 1));
        }
        let var_mono = Monomial::variable(var, n);
        for t in rel.tail().terms() {
            if !standard.contains(&t.monomial) {
                return CheckStatus::fail(format!(
                    "tail monomial {} of {rel} is not standard",
                    t.monomial
                ));
            }
            if order.compare(&t.monomial, &var_mono) != std::cmp::Ordering::Less {
                return CheckStatus::fail(format!(
                    "tail monomial {} of {rel} is not below x{}",
                    t.monomial,
                    var + 1
                ));
            }
        }
    }
    CheckStatus::Pass
}

/// Passes iff the result matches a from-scratch full-ring run on the same
/// points, as canonical-form sets. Intended for instances small enough for
/// the full-ring computation.
pub fn check_result_equivalence(
    result: &GroebnerResult,
    variety: &Variety,
    order: &TermOrder,
) -> Result<CheckStatus, Error> {
    let full = PointSet::new(
        variety.field(),
        variety.n_vars(),
        (0..variety.n_vars()).collect(),
        variety.points().to_vec(),
        order.clone(),
    )?;
    let (oracle_basis, oracle_standard) = buchberger_moller(&full)?;
    let mut got = result.full_basis();
    sort_by_leading_term(&mut got, order);
    let mut want = oracle_basis;
    sort_by_leading_term(&mut want, order);
    if got != want {
        let got_s: Vec<String> = got.iter().map(ToString::to_string).collect();
        let want_s: Vec<String> = want.iter().map(ToString::to_string).collect();
        return Ok(CheckStatus::fail(format!(
            "basis mismatch: got {{{}}}, full-ring run gives {{{}}}",
            got_s.join("; "),
            want_s.join("; ")
        )));
    }
    if result.standard_monomials != oracle_standard {
        let got_s: Vec<String> =
            result.standard_monomials.iter().map(ToString::to_string).collect();
        let want_s: Vec<String> = oracle_standard.iter().map(ToString::to_string).collect();
        return Ok(CheckStatus::fail(format!(
            "standard monomial mismatch: got {{{}}}, full-ring run gives {{{}}}",
            got_s.join(", "),
            want_s.join(", ")
        )));
    }
    Ok(CheckStatus::Pass)
}

fn sort_by_leading_term(polys: &mut [Polynomial], order: &TermOrder) {
    polys.sort_by(|a, b| {
        let (la, lb) = (a.leading_term(), b.leading_term());
        match (la, lb) {
            (Some(ta), Some(tb)) => order.compare(&ta.monomial, &tb.monomial),
            (None, None) => std::cmp::Ordering::Equal,
            (None, Some(_)) => std::cmp::Ordering::Less,
            (Some(_), None) => std::cmp::Ordering::Greater,
        }
    });
}

/// Runs the full suite on a result. The oracle comparison re-runs the
/// computation over the full ring, so enable it only when that is feasible.
pub fn run_checks(
    result: &GroebnerResult,
    variety: &Variety,
    order: &TermOrder,
    with_oracle: bool,
) -> VerificationReport {
    let full = result.full_basis();
    let mut checks: Vec<(&'static str, CheckStatus)> = Vec::new();
    checks.push(("vanishing", check_vanishing(&full, variety)));
    checks.push((
        "reduced",
        check_reduced(&full, order).unwrap_or_else(|e| CheckStatus::Fail(e.to_string())),
    ));
    checks.push((
        "standard-monomials",
        check_sm(&result.standard_monomials, variety, &result.essential_vars),
    ));
    checks.push(("relation-shape", check_rel_shape(result, order)));
    if with_oracle {
        checks.push((
            "oracle-equivalence",
            check_result_equivalence(result, variety, order)
                .unwrap_or_else(|e| CheckStatus::Fail(e.to_string())),
        ));
    }
    VerificationReport { checks }
}

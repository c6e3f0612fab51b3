//! Monomials and term orders (lex, grevlex, general matrix orders).
//!
//! A monomial is semantically a length-n exponent vector; only the nonzero
//! entries are stored so that the cost of handling monomials in a ring with
//! hundreds of variables is proportional to their support, not to n.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A monomial x_0^{e_0} ... x_{n-1}^{e_{n-1}} in an ambient ring with
/// `n_vars` variables. Entries hold the nonzero exponents, sorted by
/// variable index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    n_vars: u32,
    entries: Vec<(u32, u32)>,
}

impl Monomial {
    /// The constant monomial 1.
    pub fn one(n_vars: usize) -> Monomial {
        Monomial { n_vars: n_vars as u32, entries: Vec::new() }
    }

    /// The single variable x_var.
    pub fn variable(var: usize, n_vars: usize) -> Monomial {
        assert!(var < n_vars, "variable index out of range");
        Monomial { n_vars: n_vars as u32, entries: vec![(var as u32, 1)] }
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exponents: &[u32]) -> Monomial {
        let entries = exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| (i as u32, e))
            .collect();
        Monomial { n_vars: exponents.len() as u32, entries }
    }

    /// Expands back to the dense exponent vector.
    pub fn exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n_vars as usize];
        for &(v, e) in &self.entries {
            out[v as usize] = e;
        }
        out
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars as usize
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.entries.binary_search_by_key(&(var as u32), |&(v, _)| v) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    /// Iterates over (variable, exponent) pairs with nonzero exponent, in
    /// ascending variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.entries.iter().map(|&(v, e)| (v as usize, e))
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(v, _)| v as usize)
    }

    /// Product of two monomials. Panics on exponent overflow, which is
    /// unreachable for exponents bounded by the point count.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n_vars, other.n_vars, "monomial variable count mismatch");
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    entries.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    entries.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).expect("exponent overflow");
                    entries.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        entries.extend_from_slice(&a[i..]);
        entries.extend_from_slice(&b[j..]);
        Monomial { n_vars: self.n_vars, entries }
    }

    /// Multiplies by a single variable.
    pub fn mul_var(&self, var: usize) -> Monomial {
        self.mul(&Monomial::variable(var, self.n_vars as usize))
    }

    /// Exact quotient self / other, or `None` when other does not divide.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.n_vars, other.n_vars, "monomial variable count mismatch");
        let mut entries = Vec::with_capacity(self.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while j < b.len() {
            if i == a.len() {
                return None;
            }
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    entries.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => return None,
                Ordering::Equal => {
                    if a[i].1 < b[j].1 {
                        return None;
                    }
                    if a[i].1 > b[j].1 {
                        entries.push((a[i].0, a[i].1 - b[j].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        entries.extend_from_slice(&a[i..]);
        Some(Monomial { n_vars: self.n_vars, entries })
    }

    /// True iff each exponent of `self` is at most the matching exponent of
    /// `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.n_vars, other.n_vars, "monomial variable count mismatch");
        let (a, b) = (&self.entries, &other.entries);
        let mut j = 0;
        for &(v, e) in a {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }
}

/// Canonical text form: variables in ascending index order, 1-based names,
/// `^1` omitted; the constant monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Comparison rule of a [`TermOrder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Weight matrix; column k weights the k-th variable of the priority
    /// list, rows are compared lexicographically.
    Matrix(Vec<Vec<i64>>),
}

/// A multiplicative total order on monomials with 1 as minimum.
///
/// `priority` lists the variables the order compares, largest first; the
/// ambient order lists all n. An induced (subring) order keeps full-length
/// monomials and simply restricts the priority list, so projected data never
/// needs re-indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    n_vars: usize,
    priority: Vec<usize>,
    /// var -> position in `priority`; usize::MAX marks inactive variables.
    rank: Vec<usize>,
}

impl TermOrder {
    /// Lex order with the default priority x1 > x2 > ... > xn.
    pub fn lex(n_vars: usize) -> TermOrder {
        TermOrder::new(OrderKind::Lex, n_vars, (0..n_vars).collect()).expect("valid")
    }

    /// Grevlex order with the default priority x1 > x2 > ... > xn.
    pub fn grevlex(n_vars: usize) -> TermOrder {
        TermOrder::new(OrderKind::Grevlex, n_vars, (0..n_vars).collect()).expect("valid")
    }

    /// General constructor. `priority` holds distinct variable indices,
    /// largest first; for matrix kinds the weight matrix must have one
    /// column per priority variable, full column rank, and a positive first
    /// nonzero entry in every column.
    pub fn new(kind: OrderKind, n_vars: usize, priority: Vec<usize>) -> Result<TermOrder, Error> {
        if priority.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        let mut rank = vec![usize::MAX; n_vars];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n_vars {
                return Err(Error::InvalidOrder(format!("variable x{} out of range", v + 1)));
            }
            if rank[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("variable x{} listed twice", v + 1)));
            }
            rank[v] = pos;
        }
        if let OrderKind::Matrix(weights) = &kind {
            validate_weight_matrix(weights, priority.len())?;
        }
        Ok(TermOrder { kind, n_vars, priority, rank })
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Short name used in CSV output.
    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::Grevlex => "grevlex",
            OrderKind::Matrix(_) => "matrix",
        }
    }

    /// Total-order comparison of two monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.n_vars(), self.n_vars, "monomial/order variable count mismatch");
        assert_eq!(b.n_vars(), self.n_vars, "monomial/order variable count mismatch");
        match &self.kind {
            OrderKind::Lex => self.compare_lex(a, b),
            OrderKind::Grevlex => self.compare_grevlex(a, b),
            OrderKind::Matrix(weights) => self.compare_matrix(weights, a, b),
        }
    }

    fn compare_lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let mut best_rank = usize::MAX;
        let mut best = Ordering::Equal;
        for_each_diff(a, b, |var, ea, eb| {
            let r = self.rank[var];
            if r < best_rank {
                best_rank = r;
                best = ea.cmp(&eb);
            }
        });
        best
    }

    fn compare_grevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let deg = |m: &Monomial| -> u64 {
            m.iter().filter(|&(v, _)| self.rank[v] != usize::MAX).map(|(_, e)| u64::from(e)).sum()
        };
        let by_degree = deg(a).cmp(&deg(b));
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        // Tie-break: at the smallest differing variable, the larger
        // exponent loses.
        let mut best_rank = 0usize;
        let mut best = Ordering::Equal;
        let mut any = false;
        for_each_diff(a, b, |var, ea, eb| {
            let r = self.rank[var];
            if r == usize::MAX {
                return;
            }
            if !any || r > best_rank {
                any = true;
                best_rank = r;
                best = eb.cmp(&ea);
            }
        });
        best
    }

    fn compare_matrix(&self, weights: &[Vec<i64>], a: &Monomial, b: &Monomial) -> Ordering {
        let mut diffs: Vec<(usize, i64)> = Vec::new();
        for_each_diff(a, b, |var, ea, eb| {
            let r = self.rank[var];
            if r != usize::MAX {
                diffs.push((r, i64::from(ea) - i64::from(eb)));
            }
        });
        if diffs.is_empty() {
            return Ordering::Equal;
        }
        for row in weights {
            let mut w: i128 = 0;
            for &(pos, d) in &diffs {
                w += i128::from(row[pos]) * i128::from(d);
            }
            match w.cmp(&0) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Active variable indices sorted ascending under this order (the first
    /// entry is the smallest variable).
    pub fn variable_rank(&self) -> Vec<usize> {
        let mut vars = self.priority.clone();
        vars.sort_by(|&x, &y| {
            self.compare(&Monomial::variable(x, self.n_vars), &Monomial::variable(y, self.n_vars))
        });
        vars
    }

    /// The order induced on the subring spanned by `vars`. Monomials keep
    /// their full-length representation; the induced order just ignores the
    /// other variables, so it agrees with the ambient comparison on any
    /// monomials supported on `vars`.
    pub fn induced(&self, vars: &[usize]) -> Result<TermOrder, Error> {
        if vars.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        for &v in vars {
            if v >= self.n_vars || self.rank[v] == usize::MAX {
                return Err(Error::InvalidOrder(format!("variable x{} not in the order", v + 1)));
            }
        }
        let keep: Vec<bool> = {
            let mut k = vec![false; self.n_vars];
            for &v in vars {
                k[v] = true;
            }
            k
        };
        let positions: Vec<usize> =
            (0..self.priority.len()).filter(|&pos| keep[self.priority[pos]]).collect();
        let priority: Vec<usize> = positions.iter().map(|&pos| self.priority[pos]).collect();
        let kind = match &self.kind {
            OrderKind::Lex => OrderKind::Lex,
            OrderKind::Grevlex => OrderKind::Grevlex,
            OrderKind::Matrix(weights) => OrderKind::Matrix(
                weights
                    .iter()
                    .map(|row| positions.iter().map(|&pos| row[pos]).collect())
                    .collect(),
            ),
        };
        TermOrder::new(kind, self.n_vars, priority)
    }

    /// The same order expressed as an explicit weight matrix, used to
    /// cross-check the direct lex/grevlex comparators.
    pub fn matrix_form(&self) -> TermOrder {
        let k = self.priority.len();
        let weights = match &self.kind {
            OrderKind::Matrix(w) => w.clone(),
            OrderKind::Lex => (0..k)
                .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
                .collect(),
            OrderKind::Grevlex => {
                let mut rows: Vec<Vec<i64>> = vec![vec![1; k]];
                for i in 1..k {
                    let mut row = vec![0i64; k];
                    row[k - i] = -1;
                    rows.push(row);
                }
                rows
            }
        };
        TermOrder::new(OrderKind::Matrix(weights), self.n_vars, self.priority.clone())
            .expect("derived matrix order is valid")
    }

    /// Parses the CLI order spec `lex` | `grevlex` | `matrix:<row-major
    /// comma-separated integers>` plus an optional 1-based `varorder` list
    /// (largest variable first).
    pub fn parse(spec: &str, varorder: Option<&str>, n_vars: usize) -> Result<TermOrder, Error> {
        let priority = match varorder {
            None => (0..n_vars).collect(),
            Some(text) => {
                let mut out = Vec::new();
                for item in text.split(',') {
                    let idx: usize = item
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable index '{item}'")))?;
                    if idx == 0 || idx > n_vars {
                        return Err(Error::Parse(format!(
                            "variable index {idx} outside 1..={n_vars}"
                        )));
                    }
                    out.push(idx - 1);
                }
                if out.len() != n_vars {
                    return Err(Error::Parse(format!(
                        "varorder must list all {n_vars} variables, got {}",
                        out.len()
                    )));
                }
                out
            }
        };
        let kind = if spec == "lex" {
            OrderKind::Lex
        } else if spec == "grevlex" {
            OrderKind::Grevlex
        } else if let Some(body) = spec.strip_prefix("matrix:") {
            let entries: Vec<i64> = body
                .split(',')
                .map(|item| {
                    item.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad matrix entry '{item}'")))
                })
                .collect::<Result<_, _>>()?;
            if entries.len() != n_vars * n_vars {
                return Err(Error::Parse(format!(
                    "matrix order needs {} entries for n={n_vars}, got {}",
                    n_vars * n_vars,
                    entries.len()
                )));
            }
            OrderKind::Matrix(entries.chunks(n_vars).map(<[i64]>::to_vec).collect())
        } else {
            return Err(Error::Parse(format!("unknown order '{spec}'")));
        };
        TermOrder::new(kind, n_vars, priority)
    }
}

/// Calls `f(var, exp_a, exp_b)` for every variable where the exponents of
/// `a` and `b` differ.
fn for_each_diff(a: &Monomial, b: &Monomial, mut f: impl FnMut(usize, u32, u32)) {
    let (ae, be) = (&a.entries, &b.entries);
    let (mut i, mut j) = (0, 0);
    while i < ae.len() && j < be.len() {
        match ae[i].0.cmp(&be[j].0) {
            Ordering::Less => {
                f(ae[i].0 as usize, ae[i].1, 0);
                i += 1;
            }
            Ordering::Greater => {
                f(be[j].0 as usize, 0, be[j].1);
                j += 1;
            }
            Ordering::Equal => {
                if ae[i].1 != be[j].1 {
                    f(ae[i].0 as usize, ae[i].1, be[j].1);
                }
                i += 1;
                j += 1;
            }
        }
    }
    for &(v, e) in &ae[i..] {
        f(v as usize, e, 0);
    }
    for &(v, e) in &be[j..] {
        f(v as usize, 0, e);
    }
}

fn validate_weight_matrix(weights: &[Vec<i64>], cols: usize) -> Result<(), Error> {
    if weights.is_empty() {
        return Err(Error::InvalidOrder("weight matrix has no rows".into()));
    }
    for row in weights {
        if row.len() != cols {
            return Err(Error::InvalidOrder(format!(
                "weight matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
    }
    // Top-down first nonzero of every column must be positive; this makes 1
    // the minimum and every monomial comparison well founded.
    for c in 0..cols {
        match weights.iter().map(|row| row[c]).find(|&w| w != 0) {
            Some(w) if w > 0 => {}
            Some(_) => {
                return Err(Error::InvalidOrder(format!(
                    "column {} of the weight matrix starts negative",
                    c + 1
                )))
            }
            None => {
                return Err(Error::InvalidOrder(format!(
                    "column {} of the weight matrix is zero",
                    c + 1
                )))
            }
        }
    }
    if integer_rank(weights)? < cols {
        return Err(Error::InvalidOrder("weight matrix does not have full column rank".into()));
    }
    Ok(())
}

/// Rank of an integer matrix via fraction-free (Bareiss) elimination.
fn integer_rank(weights: &[Vec<i64>]) -> Result<usize, Error> {
    let overflow = || Error::InvalidOrder("weight matrix entries too large".into());
    let mut m: Vec<Vec<i128>> =
        weights.iter().map(|row| row.iter().map(|&w| i128::from(w)).collect()).collect();
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = m[r][c]
                    .checked_mul(m[rank][col])
                    .and_then(|x| m[r][col].checked_mul(m[rank][c]).map(|y| (x, y)))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or_else(overflow)?;
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

//! Exact arithmetic in F_p and the incremental elimination core shared by
//! the basis algorithms.

use std::fmt;

use crate::error::Error;

/// Exclusive upper bound on supported moduli; products of canonical
/// residues then fit in a u64.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The coefficient field F_p. Construction validates primality.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

/// An element of F_p, stored as the canonical residue in [0, p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PrimeField {
    /// Validates 2 <= p < 2^31 and primality (deterministic Miller-Rabin).
    pub fn new(p: u64) -> Result<Self, Error> {
        if p < 2 || p >= MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer to its canonical residue.
    pub fn element(self, value: u64) -> FieldElement {
        FieldElement(value % self.p)
    }

    pub fn add(self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(self, a: FieldElement, b: FieldElement) -> FieldElement {
        // a, b < 2^31, so the product fits in a u64.
        FieldElement(a.0 * b.0 % self.p)
    }

    pub fn pow(self, base: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = base.0;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        FieldElement(acc)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(self, a: FieldElement) -> Result<FieldElement, Error> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, so gcd must be 1");
        let t = t0.rem_euclid(self.p as i64) as u64;
        Ok(FieldElement(t))
    }
}

/// Deterministic Miller-Rabin. The witness set is exact for all inputs
/// below 3.2e9, which covers the supported modulus range.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    base %= n;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        exp >>= 1;
    }
    acc
}

/// Dense row-major matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Matrix, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch { expected: ncols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
}

/// Outcome of inserting a vector into an [`EchelonBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// The vector enlarged the span and was incorporated.
    Independent,
    /// The vector already lies in the span; the coefficients express it as
    /// a combination of the previously inserted (independent) vectors, in
    /// insertion order.
    Dependent(Vec<FieldElement>),
}

/// Incremental row-echelon accumulator with the transformation bookkeeping
/// needed to express dependent vectors in terms of the inserted basis.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    dim: usize,
    /// Echelon rows, each scaled so its pivot entry is 1.
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
    /// combos[k] expresses rows[k] over the inserted basis vectors.
    combos: Vec<Vec<FieldElement>>,
    inserted: usize,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, dim: usize) -> EchelonBasis {
        EchelonBasis { field, dim, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), inserted: 0 }
    }

    /// Number of (independent) vectors inserted so far.
    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    /// Reduces `v` against the current echelon rows. Returns the residue and
    /// the coefficients of the eliminated part over the inserted basis.
    fn reduce(&self, v: &[FieldElement]) -> (Vec<FieldElement>, Vec<FieldElement>) {
        let f = self.field;
        let mut residue = v.to_vec();
        let mut coeffs = vec![FieldElement::ZERO; self.inserted];
        for (k, row) in self.rows.iter().enumerate() {
            let factor = residue[self.pivots[k]];
            if factor.is_zero() {
                continue;
            }
            for (r, &e) in residue.iter_mut().zip(row.iter()) {
                *r = f.sub(*r, f.mul(factor, e));
            }
            for (c, &e) in coeffs.iter_mut().zip(self.combos[k].iter()) {
                *c = f.add(*c, f.mul(factor, e));
            }
        }
        (residue, coeffs)
    }

    /// Classifies `v` against the current span without modifying the basis.
    pub fn classify(&self, v: &[FieldElement]) -> Result<Insertion, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let (residue, coeffs) = self.reduce(v);
        if residue.iter().all(|e| e.is_zero()) {
            Ok(Insertion::Dependent(coeffs))
        } else {
            Ok(Insertion::Independent)
        }
    }

    /// Classifies `v` and, when independent, incorporates it.
    pub fn insert(&mut self, v: &[FieldElement]) -> Result<Insertion, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let f = self.field;
        let (mut residue, coeffs) = self.reduce(v);
        let pivot = match residue.iter().position(|e| !e.is_zero()) {
            None => return Ok(Insertion::Dependent(coeffs)),
            Some(j) => j,
        };
        // New row = v - sum(coeffs_j * inserted_j); normalize its pivot to 1.
        let inv = f.inverse(residue[pivot]).expect("pivot is nonzero");
        for e in residue.iter_mut() {
            *e = f.mul(*e, inv);
        }
        let mut combo: Vec<FieldElement> = coeffs.iter().map(|&c| f.mul(f.neg(c), inv)).collect();
        combo.push(inv);
        self.rows.push(residue);
        self.pivots.push(pivot);
        self.combos.push(combo);
        self.inserted += 1;
        Ok(Insertion::Independent)
    }
}

/// Solves A*c = b over F_p, or returns `None` when the system is
/// inconsistent. Columns of A that are dependent on earlier ones receive a
/// zero coefficient, so the solution is unique whenever the columns are
/// independent.
pub fn solve_linear(
    field: PrimeField,
    a: &Matrix,
    b: &[FieldElement],
) -> Result<Option<Vec<FieldElement>>, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: b.len() });
    }
    let mut basis = EchelonBasis::new(field, a.rows());
    let mut independent_cols = Vec::new();
    for j in 0..a.cols() {
        if let Insertion::Independent = basis.insert(&a.column(j))? {
            independent_cols.push(j);
        }
    }
    match basis.classify(b)? {
        Insertion::Independent => Ok(None),
        Insertion::Dependent(coeffs) => {
            let mut c = vec![FieldElement::ZERO; a.cols()];
            for (k, &j) in independent_cols.iter().enumerate() {
                c[j] = coeffs[k];
            }
            Ok(Some(c))
        }
    }
}

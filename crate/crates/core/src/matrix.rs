//! Arbitrary-precision integer matrices and the lattice algorithms built on
//! them: Smith normal form with unimodular transforms, Hermite-style row
//! echelon bases, saturated kernels, one-sided linear solving, and invariant
//! factors of finitely generated quotients.
//!
//! Vectors are coordinate rows; `x · A` is the only product ever formed with
//! a vector.  Every algorithm here is exact over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Errors from shape or schema violations in matrix-level operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("submodule has {found} columns but the ambient lattice has rank {ambient}")]
    ColumnCountMismatch { found: usize, ambient: usize },
    #[error("invalid matrix data: {0}")]
    InvalidData(String),
}

/// Dense row-major matrix over ℤ with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n × n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(MatrixError::ShapeMismatch(format!(
                    "ragged rows: expected {} columns, found {}",
                    ncols,
                    r.len()
                )));
            }
        }
        Ok(IntegerMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine integers (fixtures and tests).
    ///
    /// Panics on ragged input; intended for literal data only.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("literal matrix must be rectangular")
    }

    /// Builds an `rows × cols` matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntegerMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    /// The `i`-th row as a slice.
    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(
            self.cols, other.rows,
            "inner dimensions must agree in a product"
        );
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum.
    pub fn add(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&other.data) {
            *o += b;
        }
        out
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, b) in out.data.iter_mut().zip(&other.data) {
            *o -= b;
        }
        out
    }

    /// Horizontal concatenation `[self | others...]`.
    pub fn hstack(blocks: &[&IntegerMatrix]) -> IntegerMatrix {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows));
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntegerMatrix::zeros(rows, cols);
        for i in 0..rows {
            let mut off = 0;
            for b in blocks {
                for j in 0..b.cols {
                    out.set(i, off + j, b.get(i, j).clone());
                }
                off += b.cols;
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[&IntegerMatrix]) -> IntegerMatrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        IntegerMatrix { rows, cols, data }
    }

    /// Determinant by fraction-free (Bareiss) elimination.  Panics unless
    /// square.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    /// True iff `|det| = 1`.
    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[a] -= q * row[b]`.
    fn row_sub_scaled(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = q * self.get(b, j);
            let idx = a * self.cols + j;
            self.data[idx] -= t;
        }
    }

    /// `col[a] -= q * col[b]`.
    fn col_sub_scaled(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = q * self.get(i, b);
            let idx = i * self.cols + a;
            self.data[idx] -= t;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    /// Serializes to the wire form
    /// `{"rows": r, "cols": c, "data": [["0", "1"], ...]}` with decimal
    /// string entries (safe for entries beyond any fixed width).
    pub fn to_json(&self) -> Value {
        let data: Vec<Value> = (0..self.rows)
            .map(|i| {
                Value::Array(
                    self.row(i)
                        .iter()
                        .map(|e| Value::String(e.to_string()))
                        .collect(),
                )
            })
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "data": data })
    }

    /// Parses the wire form produced by [`IntegerMatrix::to_json`].  Entries
    /// may be JSON integers or decimal strings; a Unicode minus sign is
    /// accepted.
    pub fn from_json(v: &Value) -> Result<Self, MatrixError> {
        let obj = v
            .as_object()
            .ok_or_else(|| MatrixError::InvalidData("matrix must be a JSON object".into()))?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_u64)
            .ok_or_else(|| MatrixError::InvalidData("missing integer field `rows`".into()))?
            as usize;
        let cols = obj
            .get("cols")
            .and_then(Value::as_u64)
            .ok_or_else(|| MatrixError::InvalidData("missing integer field `cols`".into()))?
            as usize;
        let data = obj
            .get("data")
            .and_then(Value::as_array)
            .ok_or_else(|| MatrixError::InvalidData("missing array field `data`".into()))?;
        if data.len() != rows {
            return Err(MatrixError::InvalidData(format!(
                "expected {} rows of data, found {}",
                rows,
                data.len()
            )));
        }
        let mut out = Vec::with_capacity(rows);
        for row in data {
            let row = row
                .as_array()
                .ok_or_else(|| MatrixError::InvalidData("each row must be an array".into()))?;
            if row.len() != cols {
                return Err(MatrixError::InvalidData(format!(
                    "expected {} columns, found {}",
                    cols,
                    row.len()
                )));
            }
            out.push(
                row.iter()
                    .map(parse_entry)
                    .collect::<Result<Vec<BigInt>, _>>()?,
            );
        }
        Self::from_rows(out)
    }
}

/// Parses one matrix entry from JSON (integer or decimal string).
pub fn parse_entry(v: &Value) -> Result<BigInt, MatrixError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else {
                Err(MatrixError::InvalidData(format!(
                    "entry {n} is not an integer"
                )))
            }
        }
        Value::String(s) => {
            let normalized: String = s
                .chars()
                .map(|c| if c == '\u{2212}' { '-' } else { c })
                .collect();
            normalized
                .trim()
                .parse::<BigInt>()
                .map_err(|_| MatrixError::InvalidData(format!("cannot parse entry `{s}`")))
        }
        other => Err(MatrixError::InvalidData(format!(
            "entry must be an integer or string, found {other}"
        ))),
    }
}

impl std::fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form data: unimodular `U`, `V` with `U · A · V = S`, where
/// `S` is diagonal with non-negative entries `d_1 | d_2 | …` followed by
/// zeros.
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
    /// Inverse of `v`, tracked during elimination (needed to lift quotient
    /// representatives).
    vinv: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal of `S` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// The tracked inverse of `V`.
    pub fn v_inverse(&self) -> &IntegerMatrix {
        &self.vinv
    }
}

/// Floor-division quotient used for entry reduction: the remainder
/// `a - q·b` satisfies `0 ≤ r < |b|`.
fn floor_quot(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Computes the Smith normal form of `a` with tracked transforms.
///
/// Pivoting always moves a minimal-magnitude nonzero entry into place, which
/// keeps intermediate growth modest on the sparse small-entry systems that
/// arise from group actions.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut s = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);
    let mut vinv = IntegerMatrix::identity(n);
    let limit = m.min(n);

    let mut k = 0;
    'outer: while k < limit {
        // Locate a minimal-magnitude nonzero pivot in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..m {
            for j in k..n {
                if !s.get(i, j).is_zero()
                    && pivot.is_none_or(|(pi, pj)| s.get(i, j).abs() < s.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // trailing block is zero: done
        };
        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);
        vinv.swap_rows(k, pj);

        // Clear column k below the pivot and row k to its right.  A nonzero
        // remainder is strictly smaller than the pivot, so restarting the
        // pivot search terminates.
        let mut dirty = false;
        for i in k + 1..m {
            if !s.get(i, k).is_zero() {
                let q = floor_quot(s.get(i, k), s.get(k, k));
                s.row_sub_scaled(i, k, &q);
                u.row_sub_scaled(i, k, &q);
                if !s.get(i, k).is_zero() {
                    dirty = true;
                }
            }
        }
        for j in k + 1..n {
            if !s.get(k, j).is_zero() {
                let q = floor_quot(s.get(k, j), s.get(k, k));
                s.col_sub_scaled(j, k, &q);
                v.col_sub_scaled(j, k, &q);
                // (I - q·E)⁻¹ applied on the left adds q·row_j to row_k…
                // concretely: col_j -= q·col_k on V pairs with
                // row_k += q·row_j on V⁻¹.
                let q_neg = -q;
                vinv.row_sub_scaled(k, j, &q_neg);
                if !s.get(k, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Enforce the divisibility chain: fold any non-multiple into row k
        // and restart this pivot.
        for i in k + 1..m {
            for j in k + 1..n {
                if !(s.get(i, j) % s.get(k, k)).is_zero() {
                    let minus_one = BigInt::from(-1);
                    s.row_sub_scaled(k, i, &minus_one);
                    u.row_sub_scaled(k, i, &minus_one);
                    continue 'outer;
                }
            }
        }

        if s.get(k, k).is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }

    debug_assert!(u.mul(a).mul(&v) == s, "transform identity U·A·V = S");
    debug_assert!(v.mul(&vinv).is_identity(), "tracked inverse of V");
    SmithDecomposition { u, s, v, vinv }
}

/// Row Hermite form with transform: returns `(h, t)` with `t` unimodular,
/// `t · a = h`, `h` in row echelon form with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`.  Rows beyond the rank are
/// zero.  The nonzero rows are the canonical basis of the row lattice.
fn row_hermite_with_transform(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let m = a.rows();
    let n = a.cols();
    let mut h = a.clone();
    let mut t = IntegerMatrix::identity(m);
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        // Gcd-eliminate the column entries in rows r..m down to one pivot.
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if !h.get(i, col).is_zero()
                    && best.is_none_or(|b| h.get(i, col).abs() < h.get(b, col).abs())
                {
                    best = Some(i);
                }
            }
            let Some(best) = best else {
                break;
            };
            h.swap_rows(r, best);
            t.swap_rows(r, best);
            let mut cleared = true;
            for i in r + 1..m {
                if !h.get(i, col).is_zero() {
                    let q = floor_quot(h.get(i, col), h.get(r, col));
                    h.row_sub_scaled(i, r, &q);
                    t.row_sub_scaled(i, r, &q);
                    if !h.get(i, col).is_zero() {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if h.get(r, col).is_zero() {
            continue;
        }
        if h.get(r, col).is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        for j in 0..r {
            let q = floor_quot(h.get(j, col), h.get(r, col));
            h.row_sub_scaled(j, r, &q);
            t.row_sub_scaled(j, r, &q);
        }
        r += 1;
    }
    (h, t)
}

/// Canonical basis of the lattice spanned by the rows of `a`: the nonzero
/// rows of the row Hermite form (echelon, positive pivots, reduced above).
pub fn row_space_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let (h, _) = row_hermite_with_transform(a);
    let nonzero: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| !h.row(i).iter().all(Zero::is_zero))
        .map(|i| h.row(i).to_vec())
        .collect();
    let cols = a.cols();
    match IntegerMatrix::from_rows(nonzero) {
        Ok(m) if m.rows() > 0 => m,
        _ => IntegerMatrix::zeros(0, cols),
    }
}

/// Canonical basis of the saturated left kernel `{x : x · a = 0}`.
///
/// The kernel of a matrix is automatically saturated (it is the intersection
/// of the ambient lattice with a rational subspace), and the returned rows
/// extend to a basis of the ambient lattice.
pub fn kernel_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let (h, t) = row_hermite_with_transform(a);
    let rank = (0..h.rows())
        .filter(|&i| !h.row(i).iter().all(Zero::is_zero))
        .count();
    let rows: Vec<Vec<BigInt>> = (rank..a.rows()).map(|i| t.row(i).to_vec()).collect();
    let m = a.rows();
    match IntegerMatrix::from_rows(rows) {
        Ok(kb) if kb.rows() > 0 => row_space_basis(&kb),
        _ => IntegerMatrix::zeros(0, m),
    }
}

/// Solves `x · a = rhs` over ℤ, one solution per row of `rhs`.  Returns
/// `None` when some row has no integral solution.
pub fn solve_left(a: &IntegerMatrix, rhs: &IntegerMatrix) -> Option<IntegerMatrix> {
    assert_eq!(
        a.cols(),
        rhs.cols(),
        "solve_left: right-hand side has wrong width"
    );
    let (h, t) = row_hermite_with_transform(a);
    // Pivot columns of the echelon form.
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    for i in 0..h.rows() {
        if let Some(col) = (0..h.cols()).find(|&j| !h.get(i, j).is_zero()) {
            pivots.push((i, col));
        }
    }
    let mut solution_rows: Vec<Vec<BigInt>> = Vec::with_capacity(rhs.rows());
    for bi in 0..rhs.rows() {
        let mut residual: Vec<BigInt> = rhs.row(bi).to_vec();
        let mut y = vec![BigInt::zero(); a.rows()];
        for &(row, col) in &pivots {
            if residual[col].is_zero() {
                continue;
            }
            let (q, r) = residual[col].div_rem(h.get(row, col));
            if !r.is_zero() {
                return None; // not an integral combination
            }
            for j in 0..h.cols() {
                let tmp = &q * h.get(row, j);
                residual[j] -= tmp;
            }
            y[row] = q;
        }
        if residual.iter().any(|e| !e.is_zero()) {
            return None; // rhs outside the row space
        }
        // x = y · t
        let mut x = vec![BigInt::zero(); a.rows()];
        for (row, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            for j in 0..a.rows() {
                let tmp = yv * t.get(row, j);
                x[j] += tmp;
            }
        }
        solution_rows.push(x);
    }
    let nrows = solution_rows.len();
    match IntegerMatrix::from_rows(solution_rows) {
        Ok(m) => Some(m),
        Err(_) if nrows == 0 => Some(IntegerMatrix::zeros(0, a.rows())),
        Err(_) => None,
    }
}

/// True iff `row` lies in the lattice spanned by the rows of `basis`.
pub fn in_row_span(basis: &IntegerMatrix, row: &[BigInt]) -> bool {
    let rhs = IntegerMatrix::from_rows(vec![row.to_vec()]).expect("single row");
    solve_left(basis, &rhs).is_some()
}

/// Inverse of a unimodular matrix; `None` when the matrix is not square or
/// not invertible over ℤ.
pub fn unimodular_inverse(a: &IntegerMatrix) -> Option<IntegerMatrix> {
    if !a.is_square() {
        return None;
    }
    let inv = solve_left(a, &IntegerMatrix::identity(a.rows()))?;
    (inv.mul(a).is_identity()).then_some(inv)
}

/// Isomorphism type of `ℤ^ambient / rowspan(sub)`: free rank, invariant
/// factors `> 1` in divisibility order, and one ambient representative per
/// torsion factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStructure {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub torsion_representatives: Vec<Vec<BigInt>>,
}

impl QuotientStructure {
    /// The trivial group: free rank 0 and no torsion.
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Invariant factors as machine integers (they divide a group order in
    /// every use here).
    pub fn factors_u64(&self) -> Vec<u64> {
        self.invariant_factors
            .iter()
            .map(|d| u64::try_from(d).expect("invariant factor fits in u64"))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "free_rank": self.free_rank,
            "invariant_factors": self.factors_u64(),
        })
    }
}

/// Computes the quotient `ℤ^ambient_rank / rowspan(sub)`.
///
/// With `U · sub · V = S` in Smith form, the quotient is
/// `⊕ ℤ/d_i ⊕ ℤ^{ambient − rank}`, and the row of `V⁻¹` matching a
/// diagonal `d_i > 1` projects onto a generator of that cyclic factor.
pub fn quotient_invariants(
    sub: &IntegerMatrix,
    ambient_rank: usize,
) -> Result<QuotientStructure, MatrixError> {
    if sub.cols() != ambient_rank {
        return Err(MatrixError::ColumnCountMismatch {
            found: sub.cols(),
            ambient: ambient_rank,
        });
    }
    let smith = smith_normal_form(sub);
    let diag = smith.diagonal();
    let rank = smith.rank();
    let mut invariant_factors = Vec::new();
    let mut torsion_representatives = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if !d.is_zero() && !d.is_one() {
            invariant_factors.push(d.clone());
            torsion_representatives.push(smith.v_inverse().row(i).to_vec());
        }
    }
    Ok(QuotientStructure {
        free_rank: ambient_rank - rank,
        invariant_factors,
        torsion_representatives,
    })
}

/// The standard basis row `e_i` of length `n`.
pub fn unit_row(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn snf_of_small_full_rank_matrix() {
        // Minor gcds of [[2,4],[6,8]]: 1x1 gcd = 2, det = -8, so the
        // invariant factors are 2 and 8/2 = 4.
        let a = IntegerMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let d = smith_normal_form(&a);
        assert_eq!(d.diagonal(), vec![bi(2), bi(4)]);
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);
        assert!(d.u.is_unimodular());
        assert!(d.v.is_unimodular());
    }

    #[test]
    fn snf_of_identity_is_identity() {
        let a = IntegerMatrix::identity(3);
        let d = smith_normal_form(&a);
        assert!(d.s.is_identity());
    }

    #[test]
    fn snf_of_zero_matrix_is_zero() {
        let a = IntegerMatrix::zeros(2, 3);
        let d = smith_normal_form(&a);
        assert!(d.s.is_zero());
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn snf_divisibility_and_sign() {
        let a = IntegerMatrix::from_i64(&[&[6, 10, 15], &[10, 4, 6], &[0, -14, 21]]);
        let d = smith_normal_form(&a);
        let diag = d.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility {w:?}");
            }
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
        assert_eq!(d.u.mul(&a).mul(&d.v), d.s);
    }

    #[test]
    fn kernel_of_column_pair() {
        // x·[[2],[-2]] = 0 has saturated kernel generated by (1, 1).
        let a = IntegerMatrix::from_i64(&[&[2], &[-2]]);
        let k = kernel_basis(&a);
        assert_eq!(k.row_vectors(), vec![vec![bi(1), bi(1)]]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let a = IntegerMatrix::identity(2);
        let k = kernel_basis(&a);
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn kernel_of_rank_one_square() {
        let a = IntegerMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.row_vectors(), vec![vec![bi(1), bi(-1)]]);
    }

    #[test]
    fn kernel_rows_annihilate() {
        let a = IntegerMatrix::from_i64(&[&[3, 1, 2], &[0, 2, 4], &[3, 3, 6], &[1, 1, 1]]);
        let k = kernel_basis(&a);
        assert!(k.mul(&a).is_zero());
        // rank-nullity over the rationals
        let rank = row_space_basis(&a).rows();
        assert_eq!(k.rows() + rank, a.rows());
    }

    #[test]
    fn row_space_drops_dependent_rows() {
        let a = IntegerMatrix::from_i64(&[&[2, 0], &[0, 3], &[2, 3]]);
        let b = row_space_basis(&a);
        assert_eq!(b.row_vectors(), vec![vec![bi(2), bi(0)], vec![bi(0), bi(3)]]);
    }

    #[test]
    fn row_space_is_canonical_under_reordering() {
        let a = IntegerMatrix::from_i64(&[&[4, 6, 1], &[2, 5, 0], &[-2, 1, 1]]);
        let b = IntegerMatrix::from_i64(&[&[-2, 1, 1], &[4, 6, 1], &[2, 5, 0]]);
        assert_eq!(row_space_basis(&a), row_space_basis(&b));
    }

    #[test]
    fn quotient_by_diagonal_sublattice() {
        // <(2,0),(0,3)> in Z^2: quotient is Z/6 (factor 1 dropped).
        let sub = IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let q = quotient_invariants(&sub, 2).unwrap();
        assert_eq!(q.free_rank, 0);
        assert_eq!(q.invariant_factors, vec![bi(6)]);
        assert_eq!(q.torsion_representatives.len(), 1);
    }

    #[test]
    fn quotient_with_free_part() {
        let sub = IntegerMatrix::from_i64(&[&[1, 0]]);
        let q = quotient_invariants(&sub, 2).unwrap();
        assert_eq!(q.free_rank, 1);
        assert!(q.invariant_factors.is_empty());
    }

    #[test]
    fn quotient_by_full_lattice_is_trivial() {
        let q = quotient_invariants(&IntegerMatrix::identity(4), 4).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn quotient_rejects_wrong_ambient() {
        let sub = IntegerMatrix::from_i64(&[&[1, 0]]);
        let err = quotient_invariants(&sub, 3).unwrap_err();
        assert_eq!(
            err,
            MatrixError::ColumnCountMismatch {
                found: 2,
                ambient: 3
            }
        );
    }

    #[test]
    fn quotient_representative_generates_torsion() {
        let sub = IntegerMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let q = quotient_invariants(&sub, 2).unwrap();
        let rep = &q.torsion_representatives[0];
        // 6·rep lands in the sublattice, rep itself does not.
        let six_rep: Vec<BigInt> = rep.iter().map(|x| x * 6).collect();
        assert!(in_row_span(&sub, &six_rep));
        assert!(!in_row_span(&sub, rep));
        // Adding the representative kills all torsion.
        let rep_m = IntegerMatrix::from_rows(vec![rep.clone()]).unwrap();
        let extended = IntegerMatrix::vstack(&[&sub, &rep_m]);
        let q2 = quotient_invariants(&extended, 2).unwrap();
        assert!(q2.invariant_factors.is_empty());
    }

    #[test]
    fn solve_left_finds_integral_combination() {
        let a = IntegerMatrix::from_i64(&[&[2, 1, 0], &[0, 3, 1]]);
        let rhs = IntegerMatrix::from_i64(&[&[2, 4, 1], &[4, -1, -1]]);
        let x = solve_left(&a, &rhs).unwrap();
        assert_eq!(x.mul(&a), rhs);
    }

    #[test]
    fn solve_left_detects_non_integral_target() {
        let a = IntegerMatrix::from_i64(&[&[2, 0], &[0, 2]]);
        let rhs = IntegerMatrix::from_i64(&[&[1, 0]]);
        assert!(solve_left(&a, &rhs).is_none());
    }

    #[test]
    fn unimodular_inverse_round_trips() {
        let a = IntegerMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 3], &[0, 0, 1]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = IntegerMatrix::from_i64(&[&[3, 1, -2], &[0, 4, 1], &[2, -1, 5]]);
        // Cofactor expansion along the first row: 3·(20+1) − 1·(0−2) + (−2)·(0−8).
        assert_eq!(a.det(), bi(3 * 21 - 1 * -2 + -2 * -8));
        assert_eq!(IntegerMatrix::identity(5).det(), bi(1));
        assert_eq!(IntegerMatrix::zeros(2, 2).det(), bi(0));
    }

    #[test]
    fn json_round_trip_preserves_entries() {
        let a = IntegerMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let v = a.to_json();
        let b = IntegerMatrix::from_json(&v).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_accepts_numbers_and_unicode_minus() {
        let v: Value = serde_json::json!({
            "rows": 1, "cols": 3, "data": [[5, "\u{2212}7", "12"]]
        });
        let m = IntegerMatrix::from_json(&v).unwrap();
        assert_eq!(m.row(0), &[bi(5), bi(-7), bi(12)]);
    }

    #[test]
    fn json_rejects_ragged_data() {
        let v: Value = serde_json::json!({
            "rows": 2, "cols": 2, "data": [["1", "2"], ["3"]]
        });
        assert!(IntegerMatrix::from_json(&v).is_err());
    }
}

//! Exact linear algebra over the integers and rationals: fraction-free
//! (Bareiss) rank, modular screening ranks, kernels, subspace spans and
//! intersections. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest prime below 2³⁰; default modulus for screening ranks.
pub const DEFAULT_PRIME: u64 = 1_073_741_789;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::SizeMismatch("ragged matrix rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// [self | other] side by side.
    pub fn hstack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::SizeMismatch(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        let mut m = ExactMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(m)
    }

    /// Clear each row's denominators by its LCM, yielding integer rows with
    /// the same row space.
    pub fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for v in self.row(r) {
                    lcm = lcm.lcm(v.denom());
                }
                self.row(r)
                    .iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect()
    }

    /// Rank over Q by fraction-free elimination on the cleared integer rows.
    pub fn rank(&self) -> usize {
        bareiss_rank_bigint(self.to_integer_rows())
    }

    /// Rank of the reduction mod p. Entries must be integral; always ≤ rank().
    pub fn rank_mod_p(&self, p: u64) -> Result<usize> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let pe = BigInt::from(p);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for v in self.row(r) {
                if !v.is_integer() {
                    return Err(Error::SizeMismatch(
                        "rank_mod_p requires integral entries; clear denominators first".into(),
                    ));
                }
                let m = v.numer().mod_floor(&pe);
                row.push(u64::try_from(m).expect("residue fits u64"));
            }
            rows.push(row);
        }
        Ok(rank_mod_p_rows(&mut rows, p))
    }
}

/// Bareiss fraction-free elimination; deterministic pivoting (first nonzero
/// row per column, columns left to right). Returns the rank.
pub fn bareiss_rank_bigint(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[col].clone();
        // Every row below the pivot is updated by the 2x2-minor formula,
        // including rows with a zero leading entry: Bareiss' exact-division
        // invariant needs the uniform rescaling.
        for row in tail.iter_mut() {
            let rc = row[col].clone();
            for j in col..ncols {
                let num = &pv * &row[j] - &rc * &prow[j];
                debug_assert!((&num % &prev).is_zero());
                row[j] = num / &prev;
            }
        }
        prev = pv;
        rank += 1;
    }
    rank
}

/// Bareiss over i128 with overflow detection; None on overflow.
pub fn bareiss_rank_i128(rows: &mut Vec<Vec<i128>>) -> Option<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let pv = rows[rank][col];
        for i in rank + 1..nrows {
            let rc = rows[i][col];
            for j in col..ncols {
                let a = pv.checked_mul(rows[i][j])?;
                let b = rc.checked_mul(rows[rank][j])?;
                rows[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

/// In-place Gaussian elimination mod p; returns the rank. p must be < 2³¹ so
/// products fit in u64 via u128 is unnecessary (we still widen for safety).
pub fn rank_mod_p_rows(rows: &mut Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = mod_inverse(rows[rank][col] % p, p);
        for i in rank + 1..nrows {
            let factor = (rows[i][col] % p * inv) % p;
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = (factor as u128 * rows[rank][j] as u128 % p as u128) as u64;
                rows[i][j] = (rows[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduced row echelon form over Q. Returns (rref rows, pivot columns).
pub fn rref(mat: &ExactMatrix) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = (0..mat.rows()).map(|r| mat.row(r).to_vec()).collect();
    let nrows = rows.len();
    let ncols = mat.cols();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pv = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v / &pv;
        }
        for i in 0..nrows {
            if i == rank || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..ncols {
                let sub = &f * &rows[rank][j];
                rows[i][j] = &rows[i][j] - sub;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Basis of {x : M x = 0}, denominators cleared, one integer vector per free
/// column (deterministic order).
pub fn nullspace_int(mat: &ExactMatrix) -> Vec<Vec<BigInt>> {
    let (rows, pivots) = rref(mat);
    let ncols = mat.cols();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut vec_q = vec![BigRational::zero(); ncols];
        vec_q[free] = BigRational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            vec_q[pc] = -rows[k][free].clone();
        }
        let mut lcm = BigInt::one();
        for v in &vec_q {
            lcm = lcm.lcm(v.denom());
        }
        basis.push(
            vec_q
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
    }
    basis
}

/// Integer basis of the left kernel {x : xᵀ M = 0}, as rows.
pub fn left_kernel_int(mat: &ExactMatrix) -> Vec<Vec<BigInt>> {
    nullspace_int(&mat.transpose())
}

/// Incremental row reduction over Q for building independent spanning sets.
#[derive(Default)]
pub struct RowReducer {
    // (pivot column, reduced row with 1 at pivot)
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; if a nonzero remainder survives,
    /// store it and return true (v was independent).
    pub fn push(&mut self, mut v: Vec<BigRational>) -> bool {
        for (pc, row) in &self.rows {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    let sub = &f * y;
                    *x = &*x - sub;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pc) => {
                let pv = v[pc].clone();
                for x in v.iter_mut() {
                    *x = &*x / &pv;
                }
                self.rows.push((pc, v));
                self.rows.sort_by_key(|(c, _)| *c);
                true
            }
        }
    }
}

/// Subspace of Q^ambient given by an independent column basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix, // ambient × dim, independent columns
}

impl Subspace {
    /// Span of the given coordinate vectors; dependent generators dropped.
    pub fn from_columns(ambient: usize, cols: &[Vec<BigRational>]) -> Result<Self> {
        let mut red = RowReducer::new();
        let mut kept: Vec<Vec<BigRational>> = Vec::new();
        for col in cols {
            if col.len() != ambient {
                return Err(Error::SizeMismatch(format!(
                    "vector of length {} in ambient {}",
                    col.len(),
                    ambient
                )));
            }
            if red.push(col.clone()) {
                kept.push(col.clone());
            }
        }
        let dim = kept.len();
        let mut basis = ExactMatrix::zeros(ambient, dim);
        for (c, col) in kept.iter().enumerate() {
            for r in 0..ambient {
                basis.set(r, c, col[r].clone());
            }
        }
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }
}

/// dim(A ∩ B) = dim A + dim B − rank([A|B]).
pub fn intersect_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if a.ambient() != b.ambient() {
        return Err(Error::SizeMismatch(format!(
            "ambient {} vs {}",
            a.ambient(),
            b.ambient()
        )));
    }
    let stacked = a.basis().hstack(b.basis())?;
    Ok(a.dim() + b.dim() - stacked.rank())
}

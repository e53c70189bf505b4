use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Subspace};
use crate::symcomb::{standard_tableaux, Partition, Permutation, Tableau};
use super::tabloid::{canonicalize, find_violation, GarnirMove};

/// Element of V_λ in exact rational coordinates over the standard-tableau
/// basis. Zero coordinates are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SpechtVector {
    shape: Partition,
    coords: BTreeMap<Tableau, BigRational>,
}

impl SpechtVector {
    pub fn zero(shape: Partition) -> Self {
        SpechtVector {
            shape,
            coords: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &BTreeMap<Tableau, BigRational> {
        &self.coords
    }

    pub fn get(&self, t: &Tableau) -> BigRational {
        self.coords.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_scaled(&mut self, t: &Tableau, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self
            .coords
            .entry(t.clone())
            .or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(t);
        }
    }

    /// True iff every stored coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.values().all(|v| v.is_integer())
    }
}

impl fmt::Debug for SpechtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.coords {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·{}", c, t)?;
        }
        Ok(())
    }
}

/// The Specht module V_λ with its standard basis and a fully materialized
/// straightening table over all canonical column tabloids.
pub struct SpechtModule {
    shape: Partition,
    n: usize,
    tabloids: Vec<Tableau>,
    index: HashMap<Vec<u8>, u32>,
    /// Basis order: standard tableaux sorted by column-reading word.
    basis: Vec<Tableau>,
    /// tabloid index → sparse standard-basis expansion (integer, Thm "Z-basis")
    table: Vec<Vec<(u16, i64)>>,
}

fn tabloid_key(t: &Tableau) -> Vec<u8> {
    t.rows().iter().flatten().copied().collect()
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self> {
        if shape.is_empty() {
            return Err(Error::InvalidPartition("empty shape".into()));
        }
        let n = shape.n();
        let tabloids = enumerate_tabloids(shape);
        let mut index = HashMap::with_capacity(tabloids.len());
        for (i, t) in tabloids.iter().enumerate() {
            index.insert(tabloid_key(t), i as u32);
        }
        let entries: Vec<u8> = (1..=n as u8).collect();
        let basis = standard_tableaux(shape, &entries)?;
        debug_assert_eq!(basis.len() as u64, shape.hook_dimension());
        let basis_tabloid_idx: Vec<u32> = basis
            .iter()
            .map(|t| *index.get(&tabloid_key(t)).expect("standard tableau is canonical"))
            .collect();
        let mut basis_pos = vec![u16::MAX; tabloids.len()];
        for (pos, &ti) in basis_tabloid_idx.iter().enumerate() {
            basis_pos[ti as usize] = pos as u16;
        }
        let table = build_table(&tabloids, &index, &basis_pos)?;
        Ok(SpechtModule {
            shape: shape.clone(),
            n,
            tabloids,
            index,
            basis,
            table,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn tabloid_count(&self) -> usize {
        self.tabloids.len()
    }

    pub fn tabloid(&self, idx: u32) -> &Tableau {
        &self.tabloids[idx as usize]
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// Canonicalize and resolve to (sign, tabloid index).
    pub fn canon_index(&self, t: &Tableau) -> Result<(i64, u32)> {
        if t.shape() != self.shape {
            return Err(Error::SizeMismatch(format!(
                "tableau {} is not of shape {}",
                t, self.shape
            )));
        }
        let ct = canonicalize(t);
        let idx = self.index.get(&tabloid_key(&ct.base)).ok_or_else(|| {
            Error::SizeMismatch(format!("entries of {} are not 1..{}", t, self.n))
        })?;
        Ok((ct.sign, *idx))
    }

    /// Integer standard-basis expansion of f(tabloid idx).
    pub fn table_row(&self, idx: u32) -> &[(u16, i64)] {
        &self.table[idx as usize]
    }

    /// Straighten one tableau; coordinates are integers (Z-basis).
    pub fn straighten(&self, t: &Tableau) -> Result<SpechtVector> {
        let (sign, idx) = self.canon_index(t)?;
        let mut v = SpechtVector::zero(self.shape.clone());
        for &(pos, c) in self.table_row(idx) {
            v.add_scaled(
                &self.basis[pos as usize],
                &BigRational::from_integer(BigInt::from(sign * c)),
            );
        }
        Ok(v)
    }

    /// Straighten a signed rational combination of tableaux.
    pub fn straighten_combo(&self, terms: &[(Tableau, BigRational)]) -> Result<SpechtVector> {
        let mut v = SpechtVector::zero(self.shape.clone());
        for (t, coeff) in terms {
            let (sign, idx) = self.canon_index(t)?;
            let signed = coeff * BigRational::from_integer(BigInt::from(sign));
            for &(pos, c) in self.table_row(idx) {
                v.add_scaled(
                    &self.basis[pos as usize],
                    &(&signed * BigRational::from_integer(BigInt::from(c))),
                );
            }
        }
        Ok(v)
    }

    /// σ·v: relabel each basis tableau by σ and straighten; linear in v.
    pub fn act(&self, sigma: &Permutation, v: &SpechtVector) -> Result<SpechtVector> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch(format!(
                "σ ∈ S_{} acting on V of shape {}",
                sigma.n(),
                self.shape
            )));
        }
        if v.shape() != &self.shape {
            return Err(Error::SizeMismatch("vector shape mismatch".into()));
        }
        let terms: Vec<(Tableau, BigRational)> = v
            .coords
            .iter()
            .map(|(t, c)| (t.relabel(sigma), c.clone()))
            .collect();
        self.straighten_combo(&terms)
    }

    /// Dense integer column of σ·(basis vector at `pos`).
    pub fn action_column(&self, sigma: &Permutation, pos: usize) -> Result<Vec<i64>> {
        let moved = self.basis[pos].relabel(sigma);
        let (sign, idx) = self.canon_index(&moved)?;
        let mut col = vec![0i64; self.dim()];
        for &(p, c) in self.table_row(idx) {
            col[p as usize] = sign * c;
        }
        Ok(col)
    }

    /// Integer d×d matrix of σ on the standard basis.
    pub fn action_matrix(&self, sigma: &Permutation) -> Result<ExactMatrix> {
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for pos in 0..d {
            let col = self.action_column(sigma, pos)?;
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.set(r, pos, BigRational::from_integer(BigInt::from(v)));
                }
            }
        }
        Ok(m)
    }

    /// sgn(σ)·action_matrix: the V_{ᵗλ} action up to isomorphism.
    pub fn sign_twisted_matrix(&self, sigma: &Permutation) -> Result<ExactMatrix> {
        let mut m = self.action_matrix(sigma)?;
        if sigma.sign() < 0 {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let v = -m.get(r, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        Ok(m)
    }

    /// Exact trace of σ on V_λ (diagonal of the action matrix, without
    /// materializing it).
    pub fn trace(&self, sigma: &Permutation) -> Result<BigInt> {
        let mut tr = BigInt::zero();
        for pos in 0..self.dim() {
            let moved = self.basis[pos].relabel(sigma);
            let (sign, idx) = self.canon_index(&moved)?;
            for &(p, c) in self.table_row(idx) {
                if p as usize == pos {
                    tr += BigInt::from(sign * c);
                }
            }
        }
        Ok(tr)
    }

    /// Straighten generators and collect the independent columns.
    pub fn subspace_from_tableaux(&self, gens: &[Tableau]) -> Result<Subspace> {
        let cols: Vec<Vec<BigRational>> = gens
            .iter()
            .map(|g| {
                let v = self.straighten(g)?;
                Ok(self.to_dense(&v))
            })
            .collect::<Result<_>>()?;
        Subspace::from_columns(self.dim(), &cols)
    }

    /// Dense coordinate column in basis order.
    pub fn to_dense(&self, v: &SpechtVector) -> Vec<BigRational> {
        let mut col = vec![BigRational::zero(); self.dim()];
        for (t, c) in v.coords() {
            let pos = self
                .basis
                .binary_search_by_key(&t.column_word(), |b| b.column_word())
                .expect("coordinate key is a standard tableau");
            col[pos] = c.clone();
        }
        col
    }

    /// Unit vector at a standard tableau.
    pub fn unit(&self, t: &Tableau) -> Result<SpechtVector> {
        if !t.is_standard() {
            return Err(Error::Parse(format!("{} is not standard", t)));
        }
        let mut v = SpechtVector::zero(self.shape.clone());
        v.add_scaled(t, &BigRational::one());
        Ok(v)
    }
}

/// Process-wide cache of built modules. The straightening table for a shape
/// like (3,3,3) takes real time to materialize; certificate construction and
/// verification both need it, so share one copy.
pub fn shared_module(shape: &Partition) -> Result<Arc<SpechtModule>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<SpechtModule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().unwrap().get(shape) {
        return Ok(m.clone());
    }
    // Built outside the lock: a concurrent duplicate build wastes work but
    // never blocks other shapes.
    let built = Arc::new(SpechtModule::new(shape)?);
    let mut guard = cache.lock().unwrap();
    Ok(guard.entry(shape.clone()).or_insert(built).clone())
}

/// All canonical column tabloids of the shape: columns strictly increasing,
/// equal-length column blocks lexicographically increasing.
fn enumerate_tabloids(shape: &Partition) -> Vec<Tableau> {
    let clens = shape.column_lengths();
    let n = shape.n();
    let mut out = Vec::new();
    let mut cols: Vec<Vec<u8>> = Vec::new();
    let mut used = vec![false; n + 1];
    fn rec(
        ci: usize,
        clens: &[usize],
        n: usize,
        used: &mut Vec<bool>,
        cols: &mut Vec<Vec<u8>>,
        out: &mut Vec<Tableau>,
    ) {
        if ci == clens.len() {
            out.push(Tableau::from_columns(cols));
            return;
        }
        let len = clens[ci];
        // sorted `len`-subsets of the unused entries
        let avail: Vec<u8> = (1..=n as u8).filter(|&v| !used[v as usize]).collect();
        let mut pick = Vec::with_capacity(len);
        fn choose(
            start: usize,
            avail: &[u8],
            len: usize,
            pick: &mut Vec<u8>,
            ci: usize,
            clens: &[usize],
            n: usize,
            used: &mut Vec<bool>,
            cols: &mut Vec<Vec<u8>>,
            out: &mut Vec<Tableau>,
        ) {
            if pick.len() == len {
                // equal-length block must be lex increasing
                if ci > 0 && clens[ci - 1] == len && cols[ci - 1] > *pick {
                    return;
                }
                for &v in pick.iter() {
                    used[v as usize] = true;
                }
                cols.push(pick.clone());
                rec(ci + 1, clens, n, used, cols, out);
                cols.pop();
                for &v in pick.iter() {
                    used[v as usize] = false;
                }
                return;
            }
            for i in start..avail.len() {
                pick.push(avail[i]);
                choose(i + 1, avail, len, pick, ci, clens, n, used, cols, out);
                pick.pop();
            }
        }
        choose(0, &avail, len, &mut pick, ci, clens, n, used, cols, out);
    }
    rec(0, &clens, n, &mut used, &mut cols, &mut out);
    out
}

const STRAIGHTEN_STEP_LIMIT: u64 = 100_000_000;

fn checked_addmul(acc: &mut [i64], coeff: i64, row: &[(u16, i64)]) -> Result<()> {
    for &(p, c) in row {
        let term = coeff
            .checked_mul(c)
            .ok_or(Error::Overflow("straightening coefficient"))?;
        acc[p as usize] = acc[p as usize]
            .checked_add(term)
            .ok_or(Error::Overflow("straightening coefficient"))?;
    }
    Ok(())
}

/// Materialize the straightening table for every canonical tabloid with an
/// explicit-stack DFS (the Garnir rewriting is acyclic; a cycle or step
/// blow-up is reported as an error rather than looping).
fn build_table(
    tabloids: &[Tableau],
    index: &HashMap<Vec<u8>, u32>,
    basis_pos: &[u16],
) -> Result<Vec<Vec<(u16, i64)>>> {
    #[derive(Clone, Copy, PartialEq)]
    enum St {
        Todo,
        InProgress,
        Done,
    }
    let num = tabloids.len();
    let basis_count = basis_pos.iter().filter(|&&p| p != u16::MAX).count();
    let mut status = vec![St::Todo; num];
    let mut table: Vec<Vec<(u16, i64)>> = vec![Vec::new(); num];
    let mut steps = 0u64;

    struct Frame {
        idx: usize,
        children: Vec<(u32, i64)>,
        next: usize,
        acc: Vec<i64>,
    }

    for start in 0..num {
        if status[start] == St::Done {
            continue;
        }
        let mut stack: Vec<Frame> = vec![Frame {
            idx: start,
            children: Vec::new(),
            next: 0,
            acc: Vec::new(),
        }];
        status[start] = St::InProgress;
        while let Some(top) = stack.last_mut() {
            steps += 1;
            if steps > STRAIGHTEN_STEP_LIMIT {
                return Err(Error::Infeasible(
                    "straightening step limit exceeded".into(),
                ));
            }
            if top.next == 0 && top.children.is_empty() {
                let t = &tabloids[top.idx];
                match find_violation(t) {
                    None => {
                        let pos = basis_pos[top.idx];
                        debug_assert_ne!(pos, u16::MAX, "violation-free tabloid is standard");
                        table[top.idx] = vec![(pos, 1)];
                        status[top.idx] = St::Done;
                        stack.pop();
                        continue;
                    }
                    Some((c, q)) => {
                        let mv = GarnirMove::new(t, c, q).expect("violation indices are valid");
                        let mut children = Vec::new();
                        for (ct, coeff) in mv.expand() {
                            let ci = *index
                                .get(&tabloid_key(&ct.base))
                                .expect("expansion stays within the entry set");
                            children.push((ci, coeff * ct.sign));
                        }
                        top.children = children;
                        top.acc = vec![0i64; basis_count];
                    }
                }
            }
            let mut descended = false;
            while top.next < top.children.len() {
                let (ci, co) = top.children[top.next];
                match status[ci as usize] {
                    St::Done => {
                        checked_addmul(&mut top.acc, co, &table[ci as usize])?;
                        top.next += 1;
                    }
                    St::InProgress => {
                        return Err(Error::Infeasible(format!(
                            "Garnir rewriting cycle at {}",
                            tabloids[ci as usize]
                        )));
                    }
                    St::Todo => {
                        status[ci as usize] = St::InProgress;
                        stack.push(Frame {
                            idx: ci as usize,
                            children: Vec::new(),
                            next: 0,
                            acc: Vec::new(),
                        });
                        descended = true;
                        break;
                    }
                }
            }
            if descended {
                continue;
            }
            let done = stack.pop().expect("frame present");
            table[done.idx] = done
                .acc
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(p, &v)| (p as u16, v))
                .collect();
            status[done.idx] = St::Done;
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::poly::{specht_polynomial, SpechtPolynomial};
    use crate::symcomb::partitions_of;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn poly_of_vector(m: &SpechtModule, v: &SpechtVector) -> SpechtPolynomial {
        let mut total = SpechtPolynomial::zero(m.n());
        for (t, c) in v.coords() {
            assert!(c.is_integer());
            total = total.add(&specht_polynomial(t).scale(&c.to_integer()));
        }
        total
    }

    #[test]
    fn tabloid_counts() {
        // multinomial / column-sortings / equal-length block orderings
        let m = SpechtModule::new(&"3,3,3".parse().unwrap()).unwrap();
        assert_eq!(m.tabloid_count(), 280);
        let m = SpechtModule::new(&"2,2".parse().unwrap()).unwrap();
        assert_eq!(m.tabloid_count(), 3);
        assert_eq!(m.dim(), 2);
    }

    #[test]
    fn straighten_standard_is_unit() {
        let m = SpechtModule::new(&"3,2".parse().unwrap()).unwrap();
        for b in m.basis() {
            let v = m.straighten(b).unwrap();
            assert_eq!(v.coords().len(), 1);
            assert_eq!(v.get(b), q(1));
        }
    }

    #[test]
    fn straighten_rem_313() {
        let m = SpechtModule::new(&"3,2".parse().unwrap()).unwrap();
        let t: Tableau = "[[3,2,5],[4,1]]".parse().unwrap();
        let v = m.straighten(&t).unwrap();
        assert_eq!(v.coords().len(), 1);
        assert_eq!(v.get(&"[[1,3,5],[2,4]]".parse().unwrap()), q(-1));
    }

    #[test]
    fn straighten_matches_polynomial_small() {
        for shape in ["2,1", "2,2", "3,2", "2,2,1", "3,1,1"] {
            let lam: Partition = shape.parse().unwrap();
            let m = SpechtModule::new(&lam).unwrap();
            for idx in 0..m.tabloid_count() {
                let t = m.tabloid(idx as u32).clone();
                let v = m.straighten(&t).unwrap();
                assert_eq!(
                    poly_of_vector(&m, &v),
                    specht_polynomial(&t),
                    "shape {} tabloid {}",
                    lam,
                    t
                );
            }
        }
    }

    #[test]
    fn act_identity_and_composition() {
        let lam: Partition = "3,2".parse().unwrap();
        let m = SpechtModule::new(&lam).unwrap();
        let id = Permutation::identity(5);
        for b in m.basis() {
            let v = m.unit(b).unwrap();
            assert_eq!(m.act(&id, &v).unwrap(), v);
        }
        for ai in [5u64, 17, 63, 100] {
            for bi in [3u64, 29, 77, 119] {
                let s = Permutation::from_lex_index(5, ai);
                let t = Permutation::from_lex_index(5, bi);
                let st = s.compose(&t);
                for b in m.basis() {
                    let v = m.unit(b).unwrap();
                    let lhs = m.act(&st, &v).unwrap();
                    let rhs = m.act(&s, &m.act(&t, &v).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn action_matrix_props() {
        for shape in ["4", "1,1,1,1", "2,1", "2,2", "3,1"] {
            let lam: Partition = shape.parse().unwrap();
            let m = SpechtModule::new(&lam).unwrap();
            let n = lam.n();
            let id = m.action_matrix(&Permutation::identity(n)).unwrap();
            assert_eq!(id, ExactMatrix::identity(m.dim()));
            for idx in [1u64, 7, 13] {
                let s = Permutation::from_lex_index(n, idx % (1..=n as u64).product::<u64>());
                let ms = m.action_matrix(&s).unwrap();
                if shape == "4" {
                    assert_eq!(ms, ExactMatrix::identity(1));
                }
                if shape == "1,1,1,1" {
                    assert_eq!(*ms.get(0, 0), q(s.sign()));
                }
            }
        }
        // χ_{(2,1)}((1 2)) = 0
        let m = SpechtModule::new(&"2,1".parse().unwrap()).unwrap();
        let s = Permutation::new(vec![2, 1, 3]).unwrap();
        let ms = m.action_matrix(&s).unwrap();
        assert_eq!(ms.get(0, 0) + ms.get(1, 1), q(0));
        assert_eq!(m.trace(&s).unwrap(), BigInt::zero());
    }

    #[test]
    fn generator_relations_small() {
        for n in 3..=5usize {
            for lam in partitions_of(n) {
                let m = SpechtModule::new(&lam).unwrap();
                let gens: Vec<ExactMatrix> = (1..n)
                    .map(|i| m.action_matrix(&Permutation::adjacent_transposition(n, i)).unwrap())
                    .collect();
                let d = m.dim();
                let eye = ExactMatrix::identity(d);
                let mul = |a: &ExactMatrix, b: &ExactMatrix| {
                    let mut out = ExactMatrix::zeros(d, d);
                    for r in 0..d {
                        for c in 0..d {
                            let mut acc = q(0);
                            for k in 0..d {
                                acc += a.get(r, k) * b.get(k, c);
                            }
                            out.set(r, c, acc);
                        }
                    }
                    out
                };
                for g in &gens {
                    assert_eq!(mul(g, g), eye, "involution fails for {}", lam);
                }
                for w in gens.windows(2) {
                    let ab = mul(&w[0], &w[1]);
                    assert_eq!(mul(&mul(&ab, &ab), &ab), eye, "braid fails for {}", lam);
                }
                for i in 0..gens.len() {
                    for j in i + 2..gens.len() {
                        assert_eq!(
                            mul(&gens[i], &gens[j]),
                            mul(&gens[j], &gens[i]),
                            "commutation fails for {}",
                            lam
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subspace_dims() {
        let lam: Partition = "3,2".parse().unwrap();
        let m = SpechtModule::new(&lam).unwrap();
        let full = m.subspace_from_tableaux(&m.basis().to_vec()).unwrap();
        assert_eq!(full.dim(), m.dim());
        let dup = m
            .subspace_from_tableaux(&[m.basis()[0].clone(), m.basis()[0].clone()])
            .unwrap();
        assert_eq!(dup.dim(), 1);
    }
}

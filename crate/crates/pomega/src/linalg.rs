//! Exact dense linear algebra over the prime field GF(p).
//!
//! Everything downstream (homology dimensions, Specht layers, quotient
//! bases) reduces to ranks, nullspaces and canonical subspace arithmetic
//! computed here. Matrices are dense and row-major with fully reduced
//! `u64` residues. Elimination keeps intermediate rows unreduced and uses
//! 64-bit mul-add accumulation; with the modulus capped at 2^16 and
//! matrix sides well below 2^20, entries stay under 2^63.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest allowed modulus (exclusive). Keeps `entry + p^2 * side` inside u64.
pub const MAX_MODULUS: u64 = 1 << 16;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_modulus(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    Ok(())
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue mod a prime.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

/// A dense matrix over GF(p), row-major, entries fully reduced.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    #[serde(rename = "p")]
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl FpMatrix {
    /// Zero matrix. Zero-row and zero-column shapes are legal.
    pub fn zero(rows: usize, cols: usize, p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self {
            rows,
            cols,
            modulus: p,
            entries: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        let mut m = Self::zero(n, n, p)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self> {
        check_modulus(p)?;
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != width {
                return Err(Error::ShapeMismatch(height, width, 1, r.len()));
            }
        }
        let entries = rows.iter().flatten().map(|&e| e % p).collect();
        Ok(Self {
            rows: height,
            cols: width,
            modulus: p,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.modulus;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self {
            rows: self.cols,
            cols: self.rows,
            modulus: self.modulus,
            entries: vec![0; self.entries.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Matrix product `self * rhs` with delayed reduction per output entry.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows || self.modulus != rhs.modulus {
            return Err(Error::ShapeMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let p = self.modulus;
        let mut out = Self::zero(self.rows, rhs.cols, p)?;
        for i in 0..self.rows {
            let lhs_row = self.row(i);
            let out_row = &mut out.entries[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, &a) in lhs_row.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let rhs_row = rhs.row(k);
                for (acc, &b) in out_row.iter_mut().zip(rhs_row) {
                    *acc += a * b;
                }
            }
            // sums are bounded by cols * p^2 < 2^63 at our scale
            for acc in out_row.iter_mut() {
                *acc %= p;
            }
        }
        Ok(out)
    }

    /// Apply to a coefficient vector: `self * v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let p = self.modulus;
        (0..self.rows)
            .map(|i| {
                let acc: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a * (b % p)).sum();
                acc % p
            })
            .collect()
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        let c = c % p;
        Self {
            rows: self.rows,
            cols: self.cols,
            modulus: p,
            entries: self.entries.iter().map(|&e| e * c % p).collect(),
        }
    }

    /// Stack `self` on top of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols || self.modulus != other.modulus {
            return Err(Error::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            modulus: self.modulus,
            entries,
        })
    }

    pub fn random<R: rand::Rng>(rows: usize, cols: usize, p: u64, rng: &mut R) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self {
            rows,
            cols,
            modulus: p,
            entries: (0..rows * cols).map(|_| rng.random_range(0..p)).collect(),
        })
    }

    /// Validate an externally supplied payload against the invariants.
    pub fn validate(&self) -> Result<()> {
        check_modulus(self.modulus)?;
        if self.entries.len() != self.rows * self.cols {
            return Err(Error::BadMatrixPayload(format!(
                "expected {} entries for a {}x{} matrix, found {}",
                self.rows * self.cols,
                self.rows,
                self.cols,
                self.entries.len()
            )));
        }
        if let Some(e) = self.entries.iter().find(|&&e| e >= self.modulus) {
            return Err(Error::BadMatrixPayload(format!(
                "entry {e} is not reduced mod {}",
                self.modulus
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.modulus)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form. Returns `(reduced, rank, pivot_cols)`;
/// the reduced matrix keeps its original shape (zero rows at the bottom).
pub fn rref(m: &FpMatrix) -> (FpMatrix, usize, Vec<usize>) {
    let p = m.modulus;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let mut pivots: Vec<usize> = Vec::new();

    // Forward pass. Non-pivot rows are kept unreduced; a row is reduced
    // and normalised only when it becomes the pivot row.
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut sel = None;
        for i in r..rows {
            if a[i * cols + c] % p != 0 {
                sel = Some(i);
                break;
            }
        }
        let Some(i) = sel else { continue };
        if i != r {
            for l in 0..cols {
                a.swap(i * cols + l, r * cols + l);
            }
        }
        for l in 0..cols {
            a[r * cols + l] %= p;
        }
        let inv = mod_inv(a[r * cols + c], p);
        for l in c..cols {
            a[r * cols + l] = a[r * cols + l] * inv % p;
        }
        let (before, rest) = a.split_at_mut((r + 1) * cols);
        let piv = &before[r * cols..];
        for i2 in 0..rows - r - 1 {
            let row = &mut rest[i2 * cols..(i2 + 1) * cols];
            let coef = row[c] % p;
            if coef == 0 {
                continue;
            }
            let mult = p - coef;
            for (x, &pv) in row[c..].iter_mut().zip(&piv[c..]) {
                *x += mult * pv;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = r;

    // Back substitution, bottom pivot up. Each pivot row is reduced just
    // before it is used as a source row.
    for t in (0..rank).rev() {
        let c = pivots[t];
        for l in 0..cols {
            a[t * cols + l] %= p;
        }
        let (above, rest) = a.split_at_mut(t * cols);
        let piv = &rest[..cols];
        for i in 0..t {
            let row = &mut above[i * cols..(i + 1) * cols];
            let coef = row[c] % p;
            if coef == 0 {
                continue;
            }
            let mult = p - coef;
            for (x, &pv) in row[c..].iter_mut().zip(&piv[c..]) {
                *x += mult * pv;
            }
        }
    }
    for e in a.iter_mut() {
        *e %= p;
    }

    (
        FpMatrix {
            rows,
            cols,
            modulus: p,
            entries: a,
        },
        rank,
        pivots,
    )
}

/// An echelonised subspace of GF(p)^ambient. The basis matrix is in
/// reduced row echelon form with no zero rows, so two subspaces are equal
/// as sets iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    modulus: u64,
    basis: FpMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize, p: u64) -> Result<Self> {
        Ok(Self {
            ambient,
            modulus: p,
            basis: FpMatrix::zero(0, ambient, p)?,
        })
    }

    pub fn full(ambient: usize, p: u64) -> Result<Self> {
        Ok(Self {
            ambient,
            modulus: p,
            basis: FpMatrix::identity(ambient, p)?,
        })
    }

    /// Row space of `m`, canonicalised.
    pub fn from_spanning_rows(m: &FpMatrix) -> Self {
        let (reduced, rank, _) = rref(m);
        let mut entries = reduced.entries;
        entries.truncate(rank * m.cols);
        Self {
            ambient: m.cols,
            modulus: m.modulus,
            basis: FpMatrix {
                rows: rank,
                cols: m.cols,
                modulus: m.modulus,
                entries,
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    fn pivot_cols(&self) -> Vec<usize> {
        (0..self.basis.rows)
            .map(|i| self.basis.row(i).iter().position(|&e| e != 0).expect("no zero basis rows"))
            .collect()
    }

    /// Residual of `v` after eliminating against the basis.
    pub fn reduce_vector(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let p = self.modulus;
        let mut out: Vec<u64> = v.iter().map(|&e| e % p).collect();
        for (i, c) in self.pivot_cols().into_iter().enumerate() {
            let coef = out[c];
            if coef == 0 {
                continue;
            }
            let mult = p - coef;
            for (x, &b) in out.iter_mut().zip(self.basis.row(i)) {
                *x = (*x + mult * b) % p;
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce_vector(v).iter().all(|&e| e == 0)
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn complement(&self) -> Self {
        nullspace(&self.basis)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.modulus != other.modulus {
            return Err(Error::AmbientMismatch(
                self.ambient,
                self.modulus,
                other.ambient,
                other.modulus,
            ));
        }
        Ok(())
    }
}

/// Kernel `{v : m v = 0}` as a canonical subspace of GF(p)^cols.
pub fn nullspace(m: &FpMatrix) -> Subspace {
    let p = m.modulus;
    let cols = m.cols;
    let (reduced, rank, pivots) = rref(m);
    let free: Vec<usize> = {
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..cols).filter(|&c| !is_pivot[c]).collect()
    };
    let mut gen = FpMatrix::zero(free.len(), cols, p).expect("modulus already checked");
    for (i, &f) in free.iter().enumerate() {
        gen.set(i, f, 1);
        for (t, &c) in pivots.iter().enumerate() {
            let v = reduced.get(t, f);
            if v != 0 {
                gen.set(i, c, p - v);
            }
        }
    }
    let ker = Subspace::from_spanning_rows(&gen);
    debug_assert_eq!(ker.dim(), cols - rank);
    ker
}

/// Column space of `m` as a canonical subspace of GF(p)^rows.
pub fn column_space(m: &FpMatrix) -> Subspace {
    Subspace::from_spanning_rows(&m.transpose())
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_compatible(b)?;
    Ok(Subspace::from_spanning_rows(&a.basis.stack(&b.basis)?))
}

/// Intersection via orthogonal complements: (A^perp + B^perp)^perp.
/// Reuses the single elimination routine; the modular dimension identity
/// is kept as a consistency check.
pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_compatible(b)?;
    let perps = a.complement().basis.stack(&b.complement().basis)?;
    let meet = nullspace(&perps);
    debug_assert_eq!(
        a.dim() + b.dim(),
        subspace_sum(a, b)?.dim() + meet.dim(),
        "modular identity"
    );
    Ok(meet)
}

/// Whether `b` is contained in `a`.
pub fn contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.check_compatible(b)?;
    Ok((0..b.dim()).all(|i| a.contains_vector(b.basis.row(i))))
}

/// dim(a / b), requiring b to be a subspace of a.
pub fn quotient_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    if !contains(a, b)? {
        return Err(Error::NotASubspace);
    }
    Ok(a.dim() - b.dim())
}

/// One solution of `m x = rhs` with free variables set to zero, or None
/// when the system is inconsistent. Deterministic.
pub fn solve(m: &FpMatrix, rhs: &[u64]) -> Option<Vec<u64>> {
    assert_eq!(rhs.len(), m.rows());
    let p = m.modulus();
    let mut aug = FpMatrix::zero(m.rows(), m.cols() + 1, p).expect("valid modulus");
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, m.cols(), rhs[i]);
    }
    let (red, _, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![0u64; m.cols()];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = red.get(row, m.cols());
    }
    Some(x)
}

/// Canonical coset representatives for `num / den`: the basis rows of
/// `num` are reduced against the echelon basis of `den`, then echelonised.
/// Row count equals the quotient dimension.
pub fn representatives_mod(num: &Subspace, den: &Subspace) -> Result<FpMatrix> {
    if !contains(num, den)? {
        return Err(Error::NotASubspace);
    }
    let reduced_rows: Vec<Vec<u64>> = (0..num.dim())
        .map(|i| den.reduce_vector(num.basis.row(i)))
        .collect();
    let gen = FpMatrix::from_rows(num.modulus, &reduced_rows)?;
    let reps = Subspace::from_spanning_rows(&gen);
    debug_assert_eq!(reps.dim(), num.dim() - den.dim());
    Ok(reps.basis.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mat(p: u64, rows: &[&[u64]]) -> FpMatrix {
        FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rref_empty_and_identity() {
        let (r, rank, piv) = rref(&FpMatrix::zero(0, 0, 5).unwrap());
        assert_eq!((r.rows(), rank, piv), (0, 0, vec![]));

        let id = FpMatrix::identity(3, 5).unwrap();
        let (r, rank, piv) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(rank, 3);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        // row2 - 2*row1 = 0 mod 5
        let m = mat(5, &[&[1, 2], &[2, 4]]);
        let (r, rank, piv) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(piv, vec![0]);
        assert_eq!(r, mat(5, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn nullspace_cases() {
        assert_eq!(nullspace(&FpMatrix::identity(2, 3).unwrap()).dim(), 0);
        assert_eq!(nullspace(&FpMatrix::zero(2, 3, 3).unwrap()).dim(), 3);
        // boundary of 1-subsets for n=2: both {1} and {2} map to the empty set
        let m = mat(3, &[&[1, 1]]);
        let ker = nullspace(&m);
        assert_eq!(ker.dim(), 1);
        assert_eq!(ker.basis().row(0), &[1, 2]);
    }

    #[test]
    fn column_space_cases() {
        assert_eq!(column_space(&FpMatrix::zero(3, 2, 5).unwrap()).dim(), 0);
        assert_eq!(column_space(&FpMatrix::identity(3, 5).unwrap()).dim(), 3);
        let line = column_space(&mat(5, &[&[1], &[2]]));
        assert_eq!(line.dim(), 1);
        assert_eq!(line.basis().row(0), &[1, 2]);
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::from_spanning_rows(&mat(3, &[&[1, 0]]));
        let e2 = Subspace::from_spanning_rows(&mat(3, &[&[0, 1]]));
        let plane = subspace_sum(&e1, &e2).unwrap();
        assert_eq!(plane, Subspace::full(2, 3).unwrap());
        assert_eq!(subspace_intersection(&e1, &e2).unwrap().dim(), 0);

        let v = Subspace::from_spanning_rows(&mat(5, &[&[1, 1, 0]]));
        let w = Subspace::from_spanning_rows(&mat(5, &[&[1, 2, 0]]));
        let s = subspace_sum(&v, &w).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis(), &mat(5, &[&[1, 0, 0], &[0, 1, 0]]));
        // V + {0} = V
        assert_eq!(subspace_sum(&v, &Subspace::zero(3, 5).unwrap()).unwrap(), v);

        let x3 = Subspace::from_spanning_rows(&mat(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let x1 = Subspace::from_spanning_rows(&mat(3, &[&[0, 1, 0], &[0, 0, 1]]));
        let meet = subspace_intersection(&x3, &x1).unwrap();
        assert_eq!(meet.basis(), &mat(3, &[&[0, 1, 0]]));
        // V cap V = V
        assert_eq!(subspace_intersection(&x3, &x3).unwrap(), x3);
    }

    #[test]
    fn quotient_dims() {
        let full = Subspace::full(2, 3).unwrap();
        let zero = Subspace::zero(2, 3).unwrap();
        assert_eq!(quotient_dim(&full, &full).unwrap(), 0);
        assert_eq!(quotient_dim(&full, &zero).unwrap(), 2);
        let plane = Subspace::from_spanning_rows(&mat(3, &[&[1, 0, 0], &[0, 1, 0]]));
        let line = Subspace::from_spanning_rows(&mat(3, &[&[0, 1, 0]]));
        assert_eq!(quotient_dim(&plane, &line).unwrap(), 1);
        assert_eq!(quotient_dim(&line, &plane), Err(Error::NotASubspace));
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::zero(2, 3).unwrap();
        let b = Subspace::zero(3, 3).unwrap();
        assert!(matches!(subspace_sum(&a, &b), Err(Error::AmbientMismatch(..))));
        let c = Subspace::zero(2, 5).unwrap();
        assert!(matches!(subspace_intersection(&a, &c), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(FpMatrix::zero(1, 1, 4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FpMatrix::zero(1, 1, 65537).unwrap_err(), Error::ModulusTooLarge(65537));
    }

    #[test]
    fn representatives() {
        let num = Subspace::full(3, 3).unwrap();
        let den = Subspace::from_spanning_rows(&mat(3, &[&[1, 0, 0]]));
        let reps = representatives_mod(&num, &den).unwrap();
        assert_eq!(reps.rows(), 2);
        assert!(den.contains_vector(&[1, 0, 0]));
    }

    fn random_subspace(rng: &mut ChaCha8Rng, ambient: usize, p: u64) -> Subspace {
        let rows = rng.random_range(0..=ambient);
        Subspace::from_spanning_rows(&FpMatrix::random(rows, ambient, p, rng).unwrap())
    }

    #[test]
    fn rank_transpose_and_rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA5EED);
        for p in [2u64, 3, 5, 7, 13] {
            for _ in 0..40 {
                let r = rng.random_range(0..6);
                let c = rng.random_range(0..6);
                let m = FpMatrix::random(r, c, p, &mut rng).unwrap();
                let (_, rank, _) = rref(&m);
                let (_, rank_t, _) = rref(&m.transpose());
                assert_eq!(rank, rank_t);
                assert_eq!(nullspace(&m).dim() + rank, c);
            }
        }
    }

    #[test]
    fn modular_identity_and_commutativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA5EED);
        for _ in 0..60 {
            let p = *[2u64, 3, 5, 7].iter().nth(rng.random_range(0..4)).unwrap();
            let d = rng.random_range(1..6);
            let a = random_subspace(&mut rng, d, p);
            let b = random_subspace(&mut rng, d, p);
            let sum = subspace_sum(&a, &b).unwrap();
            let meet = subspace_intersection(&a, &b).unwrap();
            assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
            assert_eq!(sum, subspace_sum(&b, &a).unwrap());
            assert!(contains(&sum, &a).unwrap());
            assert!(contains(&a, &meet).unwrap());
        }
    }

    proptest! {
        #[test]
        fn prop_rref_is_projection(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = FpMatrix::random(rows, cols, 5, &mut rng).unwrap();
            let (r1, rank1, piv1) = rref(&m);
            let (r2, rank2, piv2) = rref(&r1);
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(rank1, rank2);
            prop_assert_eq!(piv1, piv2);
        }

        #[test]
        fn prop_nullspace_annihilated(rows in 0usize..5, cols in 0usize..5, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = FpMatrix::random(rows, cols, 7, &mut rng).unwrap();
            let ker = nullspace(&m);
            for i in 0..ker.dim() {
                prop_assert!(m.apply(ker.basis().row(i)).iter().all(|&e| e == 0));
            }
        }
    }
}

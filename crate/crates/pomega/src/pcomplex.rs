//! Generic p-complexes of GF(p)-spaces and their homology theories.
//!
//! A complex stores one space per degree 0..=top and one differential per
//! degree; degrees outside the range are materialised as dimension-0
//! spaces so every index computation is total. The nilpotency order is
//! kept separate from the field modulus: the subset complex has both
//! equal to p, while contracted complexes are ordinary chain complexes
//! (nilpotency 2) over the same field.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    column_space, nullspace, subspace_intersection, subspace_sum, FpMatrix, Subspace,
};
use crate::subsets::{a_step_boundary, binomial, boundary_matrix};

pub struct PComplex {
    modulus: u64,
    nilpotency: usize,
    dims: Vec<usize>,
    diffs: Vec<FpMatrix>,
}

impl PComplex {
    /// Build and validate a complex. `diffs[k]` is the map from degree k
    /// to degree k-1 (so `diffs[0]` has zero rows); any composition of
    /// `nilpotency` consecutive differentials must vanish.
    pub fn new(modulus: u64, nilpotency: usize, dims: Vec<usize>, diffs: Vec<FpMatrix>) -> Result<Self> {
        assert!(nilpotency >= 2);
        assert_eq!(dims.len(), diffs.len());
        for (k, d) in diffs.iter().enumerate() {
            let want_rows = if k == 0 { 0 } else { dims[k - 1] };
            if d.rows() != want_rows || d.cols() != dims[k] || d.modulus() != modulus {
                return Err(Error::ShapeMismatch(d.rows(), d.cols(), want_rows, dims[k]));
            }
        }
        let complex = Self {
            modulus,
            nilpotency,
            dims,
            diffs,
        };
        let bad = (1..complex.dims.len() as isize)
            .into_par_iter()
            .find_any(|&k| !complex.power_matrix(k, complex.nilpotency).is_zero());
        if let Some(k) = bad {
            return Err(Error::DegreeOutOfRange(k, complex.dims.len()));
        }
        Ok(complex)
    }

    /// The p-complex of k-subsets of [n] over GF(p), degrees 0..=n.
    pub fn omega(n: usize, p: u64) -> Result<Self> {
        let dims = (0..=n).map(|k| binomial(n as i64, k as i64) as usize).collect();
        let diffs = (0..=n)
            .map(|k| boundary_matrix(n, k, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, p as usize, dims, diffs)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim_at(&self, k: isize) -> usize {
        if k < 0 || k >= self.dims.len() as isize {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// Differential out of degree k, a zero-shaped matrix outside the range.
    pub fn diff(&self, k: isize) -> FpMatrix {
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            FpMatrix::zero(self.dim_at(k - 1), self.dim_at(k), self.modulus)
                .expect("modulus validated at construction")
        }
    }

    /// Matrix of the r-fold composition out of degree k (identity for r = 0).
    pub fn power_matrix(&self, k: isize, r: usize) -> FpMatrix {
        if r == 0 {
            return FpMatrix::identity(self.dim_at(k), self.modulus).expect("valid modulus");
        }
        let mut acc = self.diff(k);
        for j in 1..r {
            if acc.is_zero() {
                // the tail of the chain can only keep it zero
                return FpMatrix::zero(self.dim_at(k - r as isize), self.dim_at(k), self.modulus)
                    .expect("valid modulus");
            }
            acc = self.diff(k - j as isize).mul(&acc).expect("chained shapes");
        }
        acc
    }

    /// Ker of the a-fold differential out of degree k (zero space for a = 0).
    pub fn ker_power(&self, k: isize, a: usize) -> Subspace {
        nullspace(&self.power_matrix(k, a))
    }

    /// Image inside degree k of the a-fold differential from degree k+a
    /// (the full space for a = 0).
    pub fn im_power(&self, k: isize, a: usize) -> Subspace {
        column_space(&self.power_matrix(k + a as isize, a))
    }

    /// dim Ker(d^{a+1}) / (Im(d^{p-a-1}) + Ker(d^a)) at degree k.
    pub fn slash_dim(&self, k: isize, a: usize) -> usize {
        assert!(a + 2 <= self.nilpotency, "slash index out of range");
        let p = self.nilpotency;
        let num = self.ker_power(k, a + 1);
        let den = subspace_sum(&self.im_power(k, p - a - 1), &self.ker_power(k, a))
            .expect("same ambient space");
        num.dim() - den.dim()
    }

    /// dim (Im(d^a) cap Ker(d^{p-1-a})) / Im(d^{a+1}) at degree k.
    pub fn backslash_dim(&self, k: isize, a: usize) -> usize {
        assert!(a + 2 <= self.nilpotency, "backslash index out of range");
        let p = self.nilpotency;
        let num = if a == 0 {
            self.ker_power(k, p - 1)
        } else {
            subspace_intersection(&self.im_power(k, a), &self.ker_power(k, p - 1 - a))
                .expect("same ambient space")
        };
        num.dim() - self.im_power(k, a + 1).dim()
    }

    /// dim Ker(d^r) / Im(d^{p-r}) at degree k. Total for r in [0, p]
    /// (both ends are zero by convention).
    pub fn p_homology_dim(&self, k: isize, r: usize) -> usize {
        assert!(r <= self.nilpotency, "homology index out of range");
        let p = self.nilpotency;
        self.ker_power(k, r).dim() - self.im_power(k, p - r).dim()
    }

    /// All slash, backslash and classical homology dimensions.
    pub fn full_report(&self) -> HomologyReport {
        let p = self.nilpotency;
        let per_degree: Vec<DegreeDims> = (0..=self.top_degree() as isize)
            .into_par_iter()
            .map(|k| self.degree_dims(k))
            .collect();

        let mut report = HomologyReport {
            n: self.top_degree(),
            p: self.modulus,
            slash: Vec::new(),
            backslash: Vec::new(),
            p_homology: Vec::new(),
        };
        for (k, dd) in per_degree.into_iter().enumerate() {
            for a in 0..=p - 2 {
                report.slash.push((k, a, dd.slash[a]));
                report.backslash.push((k, a, dd.backslash[a]));
            }
            for r in 1..=p - 1 {
                report.p_homology.push((k, r, dd.classical[r - 1]));
            }
        }
        debug_assert!(report
            .slash
            .iter()
            .filter(|&&(_, a, _)| a == 0)
            .all(|&(k, _, d)| d == report.p_homology_dim(k, 1)));
        report
    }

    fn degree_dims(&self, k: isize) -> DegreeDims {
        let p = self.nilpotency;
        // kernels of d^r out of degree k, r = 0..=p-1
        let mut kers: Vec<Subspace> = Vec::with_capacity(p);
        kers.push(Subspace::zero(self.dim_at(k), self.modulus).expect("valid modulus"));
        let mut acc = self.diff(k);
        kers.push(nullspace(&acc));
        for r in 2..p {
            acc = self.diff(k - r as isize + 1).mul(&acc).expect("chained shapes");
            kers.push(nullspace(&acc));
        }
        // images in degree k of d^r from degree k+r, r = 0..=p-1
        let mut ims: Vec<Subspace> = Vec::with_capacity(p);
        ims.push(Subspace::full(self.dim_at(k), self.modulus).expect("valid modulus"));
        let mut acc = self.diff(k + 1);
        ims.push(column_space(&acc));
        for r in 2..p {
            acc = acc.mul(&self.diff(k + r as isize)).expect("chained shapes");
            ims.push(column_space(&acc));
        }

        let mut slash = Vec::with_capacity(p - 1);
        let mut backslash = Vec::with_capacity(p - 1);
        for a in 0..=p - 2 {
            let den = subspace_sum(&ims[p - a - 1], &kers[a]).expect("same ambient");
            slash.push(kers[a + 1].dim() - den.dim());
            let num = if a == 0 {
                kers[p - 1].dim()
            } else {
                subspace_intersection(&ims[a], &kers[p - 1 - a])
                    .expect("same ambient")
                    .dim()
            };
            backslash.push(num - ims[a + 1].dim());
        }
        let classical = (1..=p - 1).map(|r| kers[r].dim() - ims[p - r].dim()).collect();
        DegreeDims {
            slash,
            backslash,
            classical,
        }
    }

    /// Rank of the map on slash homology induced by the a-fold
    /// differential, from slash-a at degree k to slash-0 at degree k-a.
    pub fn slash_shift_rank(&self, k: isize, a: usize) -> usize {
        let p = self.nilpotency;
        let num_src = self.ker_power(k, a + 1);
        let den_tgt = self.im_power(k - a as isize, p - 1);
        let power_t = self.power_matrix(k, a).transpose();
        let mapped = num_src.basis().mul(&power_t).expect("shapes chain");
        let total = Subspace::from_spanning_rows(&mapped.stack(den_tgt.basis()).expect("same ambient"));
        let rank = total.dim() - den_tgt.dim();
        debug_assert_eq!(rank, self.slash_dim(k, a), "induced map must be injective");
        rank
    }

    /// The contracted 2-complex alternating the a-fold and (p-a)-fold
    /// differentials through the degrees congruent to k and k-a mod p.
    /// Returns the complex and the original degree of each slot.
    pub fn contracted(&self, k: usize, a: usize) -> Result<(PComplex, Vec<usize>)> {
        let p = self.nilpotency;
        assert!(a >= 1 && a <= p - 1, "contraction step out of range");
        assert!(k <= self.top_degree());
        let slots: Vec<usize> = (0..=self.top_degree())
            .filter(|&m| (m % p == k % p) || (m % p == (k + p - a) % p))
            .collect();
        let dims: Vec<usize> = slots.iter().map(|&m| self.dims[m]).collect();
        let mut diffs = Vec::with_capacity(slots.len());
        for (j, &m) in slots.iter().enumerate() {
            if j == 0 {
                // out of the lowest slot the chain leaves the degree range
                diffs.push(FpMatrix::zero(0, self.dims[m], self.modulus)?);
            } else {
                let step = m - slots[j - 1];
                debug_assert!(step == a || step == p - a);
                diffs.push(self.power_matrix(m as isize, step));
            }
        }
        Ok((PComplex::new(self.modulus, 2, dims, diffs)?, slots))
    }

    /// Classical homology of the contracted complex at every slot,
    /// reported as (original degree, dimension).
    pub fn contracted_homology_dims(&self, k: usize, a: usize) -> Result<Vec<(usize, usize)>> {
        let (c, slots) = self.contracted(k, a)?;
        Ok(slots
            .iter()
            .enumerate()
            .map(|(j, &m)| (m, c.p_homology_dim(j as isize, 1)))
            .collect())
    }
}

struct DegreeDims {
    slash: Vec<usize>,
    backslash: Vec<usize>,
    classical: Vec<usize>,
}

/// The contracted complex built from a-step matrices instead of powers
/// of the differential; over a field the homology dimensions agree.
pub fn contracted_omega_step(n: usize, p: u64, k: usize, a: usize) -> Result<(PComplex, Vec<usize>)> {
    let pu = p as usize;
    assert!(a >= 1 && a <= pu - 1);
    let slots: Vec<usize> = (0..=n)
        .filter(|&m| (m % pu == k % pu) || (m % pu == (k + pu - a) % pu))
        .collect();
    let dims: Vec<usize> = slots.iter().map(|&m| binomial(n as i64, m as i64) as usize).collect();
    let mut diffs = Vec::with_capacity(slots.len());
    for (j, &m) in slots.iter().enumerate() {
        if j == 0 {
            diffs.push(FpMatrix::zero(0, dims[0], p)?);
        } else {
            diffs.push(a_step_boundary(n, m, m - slots[j - 1], p)?);
        }
    }
    Ok((PComplex::new(p, 2, dims, diffs)?, slots))
}

/// Dimension table of every homology theory of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub n: usize,
    pub p: u64,
    /// (degree k, slash index a, dimension)
    pub slash: Vec<(usize, usize, usize)>,
    /// (degree k, backslash index a, dimension)
    pub backslash: Vec<(usize, usize, usize)>,
    /// (degree k, power r, dimension)
    pub p_homology: Vec<(usize, usize, usize)>,
}

impl HomologyReport {
    pub fn slash_dim(&self, k: usize, a: usize) -> usize {
        lookup(&self.slash, k, a)
    }

    pub fn backslash_dim(&self, k: usize, a: usize) -> usize {
        lookup(&self.backslash, k, a)
    }

    pub fn p_homology_dim(&self, k: usize, r: usize) -> usize {
        lookup(&self.p_homology, k, r)
    }

    /// Total slash homology attached to degree k: the sum over a of the
    /// slash-a dimensions at degree k+a. Conceptually this measures what
    /// remains of the complex after free summands of the underlying
    /// graded module are discarded; only the dimension identities are
    /// asserted anywhere in this crate.
    pub fn total_slash_at(&self, k: usize) -> usize {
        (0..=self.p as usize - 2).map(|a| self.slash_dim(k + a, a)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadMatrixPayload(e.to_string()))
    }
}

fn lookup(table: &[(usize, usize, usize)], k: usize, idx: usize) -> usize {
    table
        .iter()
        .find(|&&(tk, ti, _)| tk == k && ti == idx)
        .map_or(0, |&(_, _, d)| d)
}

/// An element of Z[zeta] for zeta a primitive p-th root of unity, in the
/// canonical basis 1, zeta, ..., zeta^{p-2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicInteger {
    order: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInteger {
    pub fn zero(p: u64) -> Self {
        Self {
            order: p,
            coeffs: vec![0; p as usize - 1],
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Add c * zeta^exp, reducing by zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
    pub fn add_power(&mut self, exp: i64, c: i64) {
        let e = exp.rem_euclid(self.order as i64) as usize;
        if e < self.order as usize - 1 {
            self.coeffs[e] += c;
        } else {
            for x in self.coeffs.iter_mut() {
                *x -= c;
            }
        }
    }
}

/// Left side of the dimension count: sum over degrees of zeta^k dim C_k.
pub fn euler_characteristic(c: &PComplex) -> CyclotomicInteger {
    let mut out = CyclotomicInteger::zero(c.modulus());
    for k in 0..=c.top_degree() {
        out.add_power(k as i64, c.dim_at(k as isize) as i64);
    }
    out
}

/// Right side: sum over all slash positions of zeta^degree times the
/// slash dimension.
pub fn slash_euler_from_report(report: &HomologyReport) -> CyclotomicInteger {
    let mut out = CyclotomicInteger::zero(report.p);
    for &(k, _, d) in &report.slash {
        out.add_power(k as i64, d as i64);
    }
    out
}

pub fn slash_euler(c: &PComplex) -> CyclotomicInteger {
    slash_euler_from_report(&c.full_report())
}

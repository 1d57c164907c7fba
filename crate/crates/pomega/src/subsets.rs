//! k-subsets of [n] and the unsigned boundary machinery on their span.
//!
//! A subset lives in one machine word (n <= 63, element e <-> bit e-1).
//! The space spanned by all k-subsets is coordinatised by the
//! colexicographic rank, so every map here also has a concrete matrix in
//! [`crate::linalg::FpMatrix`] form: matrices act on coefficient columns,
//! with column index = rank of the source subset.

use crate::error::{Error, Result};
use crate::linalg::{check_modulus, FpMatrix};

/// Binomial coefficient, zero outside 0 <= k <= n. Exact for n <= 63.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as u64
}

fn check_ground_set(n: usize) -> Result<()> {
    if n > 63 {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// A k-subset of [n] = {1, ..., n} as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    mask: u64,
    n: usize,
}

impl KSubset {
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_ground_set(n)?;
        let mut mask = 0u64;
        for &e in elements {
            assert!(e >= 1 && e <= n, "element {e} outside 1..={n}");
            mask |= 1 << (e - 1);
        }
        assert_eq!(mask.count_ones() as usize, elements.len(), "duplicate elements");
        Ok(Self { mask, n })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_ground_set(n)?;
        assert!(n == 64 || mask < (1u64 << n), "mask uses bits beyond n");
        Ok(Self { mask, n })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_mask(n, 0)
    }

    /// The full interval [1, m] inside ground set [n].
    pub fn interval(n: usize, m: usize) -> Result<Self> {
        check_ground_set(n)?;
        assert!(m <= n);
        Ok(Self {
            mask: if m == 0 { 0 } else { (1u64 << m) - 1 },
            n,
        })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn ground_set(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n && self.mask >> (e - 1) & 1 == 1
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut m = self.mask;
        while m != 0 {
            out.push(m.trailing_zeros() as usize + 1);
            m &= m - 1;
        }
        out
    }

    pub fn complement(&self) -> Self {
        let full = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        Self {
            mask: full & !self.mask,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            mask: self.mask & other.mask,
            n: self.n,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self {
            mask: self.mask | other.mask,
            n: self.n,
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.mask & other.mask == 0
    }

    pub fn with_element(&self, e: usize) -> Self {
        debug_assert!(e >= 1 && e <= self.n);
        Self {
            mask: self.mask | 1 << (e - 1),
            n: self.n,
        }
    }

    pub fn without_element(&self, e: usize) -> Self {
        debug_assert!(self.contains(e));
        Self {
            mask: self.mask & !(1 << (e - 1)),
            n: self.n,
        }
    }

    pub fn apply(&self, g: &Permutation) -> Self {
        debug_assert_eq!(self.n, g.degree());
        let mut mask = 0u64;
        for e in self.elements() {
            mask |= 1 << (g.image(e) - 1);
        }
        Self { mask, n: self.n }
    }
}

impl std::fmt::Debug for KSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All k-subsets of [n] in colexicographic (= rank) order.
pub fn all_subsets(n: usize, k: usize) -> Vec<KSubset> {
    if k > n {
        return Vec::new();
    }
    let count = binomial(n as i64, k as i64) as usize;
    let mut out = Vec::with_capacity(count);
    if k == 0 {
        out.push(KSubset { mask: 0, n });
        return out;
    }
    let mut m: u64 = (1 << k) - 1;
    let limit: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    while m <= limit {
        out.push(KSubset { mask: m, n });
        // Gosper's hack: next mask with the same popcount
        let c = m & m.wrapping_neg();
        let r = m + c;
        if r > limit || c == 0 {
            break;
        }
        m = (((r ^ m) >> 2) / c) | r;
    }
    debug_assert_eq!(out.len(), count);
    out
}

/// Colexicographic coordinatisation of the k-subsets of [n].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaBasis {
    n: usize,
    k: usize,
}

impl OmegaBasis {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        binomial(self.n as i64, self.k as i64) as usize
    }

    /// rank(omega) = sum_j C(omega_(j) - 1, j) over positions j = 1..k.
    pub fn rank(&self, omega: &KSubset) -> usize {
        debug_assert_eq!(omega.len(), self.k);
        debug_assert_eq!(omega.ground_set(), self.n);
        let mut acc = 0u64;
        for (j, e) in omega.elements().into_iter().enumerate() {
            acc += binomial(e as i64 - 1, j as i64 + 1);
        }
        acc as usize
    }

    pub fn unrank(&self, mut r: usize) -> KSubset {
        debug_assert!(r < self.size());
        let mut mask = 0u64;
        let mut j = self.k as i64;
        let mut c = self.n as i64 - 1;
        while j >= 1 {
            while binomial(c, j) as usize > r {
                c -= 1;
            }
            mask |= 1 << c;
            r -= binomial(c, j) as usize;
            j -= 1;
        }
        KSubset { mask, n: self.n }
    }
}

/// An element of the span of k-subsets, as residues over the rank basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaVector {
    basis: OmegaBasis,
    modulus: u64,
    coeffs: Vec<u64>,
}

impl OmegaVector {
    pub fn zero(n: usize, k: usize, p: u64) -> Result<Self> {
        check_modulus(p)?;
        let basis = OmegaBasis::new(n, k)?;
        let len = basis.size();
        Ok(Self {
            basis,
            modulus: p,
            coeffs: vec![0; len],
        })
    }

    pub fn unit(omega: &KSubset, p: u64) -> Result<Self> {
        let mut v = Self::zero(omega.ground_set(), omega.len(), p)?;
        let r = v.basis.rank(omega);
        v.coeffs[r] = 1;
        Ok(v)
    }

    pub fn from_coeffs(n: usize, k: usize, p: u64, coeffs: Vec<u64>) -> Result<Self> {
        let mut v = Self::zero(n, k, p)?;
        assert_eq!(coeffs.len(), v.coeffs.len());
        v.coeffs = coeffs.into_iter().map(|c| c % p).collect();
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn k(&self) -> usize {
        self.basis.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, omega: &KSubset) -> u64 {
        self.coeffs[self.basis.rank(omega)]
    }

    pub fn add_term(&mut self, omega: &KSubset, c: u64) {
        let r = self.basis.rank(omega);
        self.coeffs[r] = (self.coeffs[r] + c) % self.modulus;
    }

    /// Add `c` times a term with an integer (possibly negative) coefficient.
    pub fn add_signed_term(&mut self, omega: &KSubset, c: i64) {
        let p = self.modulus as i64;
        let c = c.rem_euclid(p) as u64;
        self.add_term(omega, c);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<KSubset> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(r, _)| self.basis.unrank(r))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis);
        assert_eq!(self.modulus, other.modulus);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Self {
            basis: self.basis,
            modulus: self.modulus,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.modulus - 1))
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.modulus;
        Self {
            basis: self.basis,
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|&a| a * c % self.modulus).collect(),
        }
    }
}

/// A permutation of [n]; `images[i-1]` is the image of i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut g = Self::identity(n);
        g.images[a - 1] = b;
        g.images[b - 1] = a;
        g
    }

    /// The cycle (c_0 c_1 ... c_r): c_0 -> c_1 -> ... -> c_r -> c_0.
    pub fn cycle(n: usize, elems: &[usize]) -> Self {
        let mut g = Self::identity(n);
        for w in elems.windows(2) {
            g.images[w[0] - 1] = w[1];
        }
        if elems.len() > 1 {
            g.images[elems[elems.len() - 1] - 1] = elems[0];
        }
        g
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, e: usize) -> usize {
        self.images[e - 1]
    }

    /// Right-to-left composition matching right actions: (x)(g.then(h)) = ((x)g)h.
    pub fn then(&self, h: &Self) -> Self {
        assert_eq!(self.degree(), h.degree());
        Self {
            images: self.images.iter().map(|&v| h.image(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Self { images }
    }

    pub fn random<R: rand::Rng>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            images.swap(i, rng.random_range(0..=i));
        }
        Self { images }
    }
}

/// Matrix of the boundary map sending a k-subset to the sum of its
/// (k-1)-subsets. Shape C(n,k-1) x C(n,k).
pub fn boundary_matrix(n: usize, k: usize, p: u64) -> Result<FpMatrix> {
    a_step_boundary(n, k, 1, p)
}

/// Matrix of the a-step boundary map sending a k-subset to the sum of all
/// its (k-a)-subsets, each with coefficient 1. Shape C(n,k-a) x C(n,k).
pub fn a_step_boundary(n: usize, k: usize, a: usize, p: u64) -> Result<FpMatrix> {
    check_ground_set(n)?;
    check_modulus(p)?;
    if k > n {
        return Err(Error::DegreeOutOfRange(k as isize, n));
    }
    let src = OmegaBasis::new(n, k)?;
    let rows = binomial(n as i64, k as i64 - a as i64) as usize;
    let mut m = FpMatrix::zero(rows, src.size(), p)?;
    if a > k {
        return Ok(m);
    }
    let tgt = OmegaBasis::new(n, k - a)?;
    for (col, omega) in all_subsets(n, k).into_iter().enumerate() {
        let elems = omega.elements();
        // all (k-a)-element subsets of omega
        for drop in all_subsets(k, a) {
            let mut mask = omega.mask();
            for pos in drop.elements() {
                mask &= !(1 << (elems[pos - 1] - 1));
            }
            let sub = KSubset::from_mask(n, mask)?;
            let row = tgt.rank(&sub);
            let v = m.get(row, col);
            m.set(row, col, v + 1);
        }
    }
    Ok(m)
}

/// Partial boundary: removes one element of I from each support subset.
pub fn partial_boundary(x: &OmegaVector, i_set: &KSubset) -> Result<OmegaVector> {
    let (n, k, p) = (x.n(), x.k(), x.modulus());
    if k == 0 {
        if x.is_zero() {
            return OmegaVector::zero(n, 0, p);
        }
        return Err(Error::DegreeUnderflow);
    }
    let mut out = OmegaVector::zero(n, k - 1, p)?;
    for omega in x.support() {
        let c = x.coeff(&omega);
        for e in omega.intersection(i_set).elements() {
            out.add_term(&omega.without_element(e), c);
        }
    }
    Ok(out)
}

/// Partial coboundary: adjoins one element of I to each support subset;
/// terms where the element is already present vanish by the product rule.
pub fn partial_coboundary(x: &OmegaVector, i_set: &KSubset) -> Result<OmegaVector> {
    let (n, k, p) = (x.n(), x.k(), x.modulus());
    // for k = n the target space C(n, n+1) is zero-dimensional
    let mut out = OmegaVector::zero(n, k + 1, p)?;
    for omega in x.support() {
        let c = x.coeff(&omega);
        for e in i_set.elements() {
            if !omega.contains(e) {
                out.add_term(&omega.with_element(e), c);
            }
        }
    }
    Ok(out)
}

/// Bilinear disjoint product: union on disjoint supports, zero otherwise.
pub fn disjoint_product(u: &OmegaVector, v: &OmegaVector) -> Result<OmegaVector> {
    assert_eq!(u.n(), v.n(), "incompatible ground sets");
    assert_eq!(u.modulus(), v.modulus(), "incompatible moduli");
    let (n, p) = (u.n(), u.modulus());
    let k = u.k() + v.k();
    if k > n {
        // every term overlaps
        return OmegaVector::zero(n, n, p);
    }
    let mut out = OmegaVector::zero(n, k, p)?;
    for a in u.support() {
        let ca = u.coeff(&a);
        for b in v.support() {
            if a.is_disjoint(&b) {
                out.add_term(&a.union(&b), ca * v.coeff(&b) % p);
            }
        }
    }
    Ok(out)
}

/// Natural right action of a permutation on the span of k-subsets.
pub fn act(x: &OmegaVector, g: &Permutation) -> OmegaVector {
    assert_eq!(x.n(), g.degree(), "permutation degree must match ground set");
    let mut out = OmegaVector::zero(x.n(), x.k(), x.modulus()).expect("same parameters");
    for omega in x.support() {
        out.add_term(&omega.apply(g), x.coeff(&omega));
    }
    out
}

/// Coefficients b_1, ..., b_{p-1} of the kernel-exchange identity, from
/// the recurrence y_[0] = 1, y_[l] = -(p-l)^2 y_[l-1] (mod p), with
/// b_i := y_[p-i]. Wilson's theorem gives b_1 = y_[p-1] = 1.
///
/// The exchange identity
///   (y) delta^{p-1} phi^{p-1} = y + sum_i (c_i y) phi delta^i phi^{i-1}
/// for y with positive threshold h and delta over [2h-1] holds with
/// c_i = y_[p-1-i], i.e. c_i = b_{i+1} for i < p-1 and c_{p-1} = b_1;
/// the closed form b_i = (-1)^{p-i}((p-1)!/(i-1)!)^2 describes the same
/// sequence. Both readings are exercised by the verification suites.
pub fn xchange_coefficients(p: u64) -> Result<Vec<u64>> {
    check_modulus(p)?;
    if p == 2 {
        return Err(Error::OddPrimeRequired(p));
    }
    let brackets = xchange_brackets(p);
    Ok((1..p as usize).map(|i| brackets[p as usize - i]).collect())
}

/// y_[0..=p-1] of the recurrence above, reduced mod p.
pub fn xchange_brackets(p: u64) -> Vec<u64> {
    let mut ys = vec![1u64];
    for l in 1..p {
        let step = (p - l) * (p - l) % p;
        ys.push(ys[l as usize - 1] * (p - step) % p);
    }
    ys
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ks(n: usize, elems: &[usize]) -> KSubset {
        KSubset::new(n, elems).unwrap()
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for n in 0..=10 {
            for k in 0..=n {
                let basis = OmegaBasis::new(n, k).unwrap();
                for (r, omega) in all_subsets(n, k).into_iter().enumerate() {
                    assert_eq!(basis.rank(&omega), r);
                    assert_eq!(basis.unrank(r), omega);
                }
            }
        }
    }

    #[test]
    fn ground_set_cap() {
        assert_eq!(OmegaBasis::new(64, 1).unwrap_err(), Error::GroundSetTooLarge(64));
        assert!(boundary_matrix(64, 2, 3).is_err());
    }

    #[test]
    fn boundary_small_cases() {
        // ({1,2})phi = {1} + {2} for n = 2
        let m = boundary_matrix(2, 2, 5).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert_eq!(m.get(0, 0), 1);
        assert_eq!(m.get(1, 0), 1);
        // ({1})phi = empty set with coefficient 1
        let m = boundary_matrix(4, 1, 3).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 4));
        assert!((0..4).all(|j| m.get(0, j) == 1));
        // degree 0 boundary has a zero-row matrix
        let m = boundary_matrix(3, 0, 3).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
    }

    #[test]
    fn boundary_cube_vanishes_mod_3() {
        // phi^3 = 0 on the n = 5 complex over GF(3)
        let m1 = boundary_matrix(5, 1, 3).unwrap();
        let m2 = boundary_matrix(5, 2, 3).unwrap();
        let m3 = boundary_matrix(5, 3, 3).unwrap();
        assert!(m1.mul(&m2).unwrap().mul(&m3).unwrap().is_zero());
    }

    #[test]
    fn a_step_cases() {
        // phi^(2) of {1,2,3} is {1}+{2}+{3}
        let m = a_step_boundary(3, 3, 2, 5).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert!((0..3).all(|i| m.get(i, 0) == 1));
        // 2! phi^(2) = phi . phi as matrices (n = 3, p = 5)
        let sq = boundary_matrix(3, 2, 5)
            .unwrap()
            .mul(&boundary_matrix(3, 3, 5).unwrap())
            .unwrap();
        assert_eq!(m.scale(2), sq);
        // phi^(0) is the identity
        assert_eq!(
            a_step_boundary(4, 2, 0, 3).unwrap(),
            FpMatrix::identity(6, 3).unwrap()
        );
    }

    #[test]
    fn factorial_step_identity() {
        // a! phi^(a) = phi^a for every a below the characteristic
        for p in [3u64, 5] {
            let n = 6;
            for k in 0..=n {
                for a in 1..=(p as usize - 1).min(k) {
                    let mut fact = 1u64;
                    for i in 2..=a as u64 {
                        fact = fact * i % p;
                    }
                    let step = a_step_boundary(n, k, a, p).unwrap().scale(fact);
                    let mut power = boundary_matrix(n, k, p).unwrap();
                    for j in 1..a {
                        power = boundary_matrix(n, k - j, p).unwrap().mul(&power).unwrap();
                    }
                    assert_eq!(step, power, "n={n} k={k} a={a} p={p}");
                }
            }
        }
    }

    #[test]
    fn p_step_nonzero_while_pth_power_vanishes() {
        let (n, k, p) = (6, 4, 3u64);
        let step = a_step_boundary(n, k, p as usize, p).unwrap();
        assert!(!step.is_zero());
        let power = boundary_matrix(n, k - 2, p)
            .unwrap()
            .mul(&boundary_matrix(n, k - 1, p).unwrap())
            .unwrap()
            .mul(&boundary_matrix(n, k, p).unwrap())
            .unwrap();
        assert!(power.is_zero());
    }

    fn random_vector(n: usize, k: usize, p: u64, rng: &mut ChaCha8Rng) -> OmegaVector {
        let len = binomial(n as i64, k as i64) as usize;
        OmegaVector::from_coeffs(n, k, p, (0..len).map(|_| rng.random_range(0..p)).collect())
            .unwrap()
    }

    #[test]
    fn partial_boundary_cases() {
        let p = 5;
        // disjoint I kills the subset
        let x = OmegaVector::unit(&ks(6, &[4, 5]), p).unwrap();
        let i_set = ks(6, &[1, 2]);
        assert!(partial_boundary(&x, &i_set).unwrap().is_zero());
        // phi_[n] = phi on random vectors
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = random_vector(7, 3, p, &mut rng);
            let full = KSubset::interval(7, 7).unwrap();
            let via_partial = partial_boundary(&x, &full).unwrap();
            let m = boundary_matrix(7, 3, p).unwrap();
            assert_eq!(via_partial.coeffs(), m.apply(x.coeffs()).as_slice());
        }
        // degree underflow only for nonzero vectors
        let zero = OmegaVector::zero(4, 0, p).unwrap();
        assert!(partial_boundary(&zero, &ks(4, &[1])).unwrap().is_zero());
        let one = OmegaVector::unit(&KSubset::empty(4).unwrap(), p).unwrap();
        assert_eq!(
            partial_boundary(&one, &ks(4, &[1])).unwrap_err(),
            Error::DegreeUnderflow
        );
    }

    #[test]
    fn partial_split_is_disjoint() {
        // phi = phi_I + phi_{I^c} on arbitrary vectors; the two images have
        // disjoint supports when the input support is homogeneous on I
        let p = 5;
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..30 {
            let x = random_vector(7, 3, p, &mut rng);
            let mask = rng.random_range(0..(1u64 << 7));
            let i_set = KSubset::from_mask(7, mask).unwrap();
            let a = partial_boundary(&x, &i_set).unwrap();
            let b = partial_boundary(&x, &i_set.complement()).unwrap();
            let m = boundary_matrix(7, 3, p).unwrap();
            assert_eq!(a.add(&b).coeffs(), m.apply(x.coeffs()).as_slice());

            let h = rng.random_range(0..=i_set.len().min(3));
            let mut y = OmegaVector::zero(7, 3, p).unwrap();
            for omega in all_subsets(7, 3) {
                if omega.intersection(&i_set).len() == h {
                    y.add_term(&omega, rng.random_range(0..p));
                }
            }
            let a = partial_boundary(&y, &i_set).unwrap();
            let b = partial_boundary(&y, &i_set.complement()).unwrap();
            for omega in a.support() {
                assert_eq!(b.coeff(&omega), 0);
            }
        }
    }

    #[test]
    fn coboundary_cases() {
        let p = 3;
        let x = OmegaVector::unit(&ks(3, &[1]), p).unwrap();
        // delta over the empty set is zero
        assert!(partial_coboundary(&x, &KSubset::empty(3).unwrap()).unwrap().is_zero());
        // delta_[3]({1}) = {1,2} + {1,3}
        let d = partial_coboundary(&x, &KSubset::interval(3, 3).unwrap()).unwrap();
        assert_eq!(d.coeff(&ks(3, &[1, 2])), 1);
        assert_eq!(d.coeff(&ks(3, &[1, 3])), 1);
        assert_eq!(d.coeff(&ks(3, &[2, 3])), 0);
    }

    #[test]
    fn curved_identity_full_interval() {
        // (y) delta_[n] phi = (y) phi delta_[n] - (2k - n) y
        let (n, k, p) = (6usize, 2usize, 5u64);
        let full = KSubset::interval(n, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let y = random_vector(n, k, p, &mut rng);
            let lhs = partial_boundary(&partial_coboundary(&y, &full).unwrap(), &full).unwrap();
            let rhs1 = partial_coboundary(&partial_boundary(&y, &full).unwrap(), &full).unwrap();
            let c = (2 * k as i64 - n as i64).rem_euclid(p as i64) as u64;
            let rhs = rhs1.sub(&y.scale(c));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn disjoint_product_cases() {
        let p = 3;
        let u = OmegaVector::unit(&ks(4, &[1, 2]), p).unwrap();
        let v = OmegaVector::unit(&ks(4, &[3]), p).unwrap();
        let w = disjoint_product(&u, &v).unwrap();
        assert_eq!(w.coeff(&ks(4, &[1, 2, 3])), 1);
        let overlap = OmegaVector::unit(&ks(4, &[2]), p).unwrap();
        assert!(disjoint_product(&u, &overlap).unwrap().is_zero());
    }

    #[test]
    fn splitting_rule_random() {
        // (vw) phi^(t) = sum_i (v) phi^(i) . (w) phi^(t-i) on disjoint supports
        let (n, p, t) = (8usize, 3u64, 2usize);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let split = rng.random_range(2..=5usize);
            let left = KSubset::interval(n, split).unwrap();
            let kv = rng.random_range(1..=split.min(3));
            let kw = rng.random_range(1..=(n - split).min(3));
            // v supported on subsets of [split], w on subsets of its complement
            let mut v = OmegaVector::zero(n, kv, p).unwrap();
            for omega in all_subsets(n, kv) {
                if omega.is_disjoint(&left.complement()) {
                    v.add_term(&omega, rng.random_range(0..p));
                }
            }
            let mut w = OmegaVector::zero(n, kw, p).unwrap();
            for omega in all_subsets(n, kw) {
                if omega.is_disjoint(&left) {
                    w.add_term(&omega, rng.random_range(0..p));
                }
            }
            let prod = disjoint_product(&v, &w).unwrap();
            let lhs = a_step_boundary(n, prod.k(), t, p).unwrap().apply(prod.coeffs());
            let mut rhs = OmegaVector::zero(n, prod.k() - t, p).unwrap();
            for i in 0..=t {
                if i > kv || t - i > kw {
                    continue;
                }
                let vi = OmegaVector::from_coeffs(
                    n,
                    kv - i,
                    p,
                    a_step_boundary(n, kv, i, p).unwrap().apply(v.coeffs()),
                )
                .unwrap();
                let wj = OmegaVector::from_coeffs(
                    n,
                    kw - (t - i),
                    p,
                    a_step_boundary(n, kw, t - i, p).unwrap().apply(w.coeffs()),
                )
                .unwrap();
                rhs = rhs.add(&disjoint_product(&vi, &wj).unwrap());
            }
            assert_eq!(lhs.as_slice(), rhs.coeffs());
        }
    }

    #[test]
    fn action_cases() {
        let p = 5;
        let x = OmegaVector::unit(&ks(4, &[1, 3]), p).unwrap();
        assert_eq!(act(&x, &Permutation::identity(4)), x);
        let swapped = act(&x, &Permutation::transposition(4, 1, 2));
        assert_eq!(swapped.coeff(&ks(4, &[2, 3])), 1);
        // equivariance: act(x, g) phi = act(x phi, g)
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = random_vector(6, 3, p, &mut rng);
            let g = Permutation::random(6, &mut rng);
            let m = boundary_matrix(6, 3, p).unwrap();
            let lhs = m.apply(act(&x, &g).coeffs());
            let xphi = OmegaVector::from_coeffs(6, 2, p, m.apply(x.coeffs())).unwrap();
            assert_eq!(lhs, act(&xphi, &g).coeffs());
        }
    }

    #[test]
    fn duality_square() {
        // the a-step matrix at complementary degrees is the transpose of
        // the original after re-indexing every subset by its complement
        for (n, k, a) in [(5usize, 3usize, 1usize), (6, 4, 2), (7, 3, 3)] {
            let p = 5;
            let low = a_step_boundary(n, k, a, p).unwrap();
            let high = a_step_boundary(n, n - k + a, a, p).unwrap();
            let src = OmegaBasis::new(n, k).unwrap();
            let tgt = OmegaBasis::new(n, k - a).unwrap();
            let src_c = OmegaBasis::new(n, n - k + a).unwrap();
            let tgt_c = OmegaBasis::new(n, n - k).unwrap();
            for omega in all_subsets(n, k) {
                for theta in all_subsets(n, k - a) {
                    assert_eq!(
                        low.get(tgt.rank(&theta), src.rank(&omega)),
                        high.get(tgt_c.rank(&omega.complement()), src_c.rank(&theta.complement())),
                    );
                }
            }
        }
    }

    #[test]
    fn xchange_sequences() {
        assert_eq!(xchange_coefficients(3).unwrap(), vec![1, 2]);
        for p in [3u64, 5, 7, 11] {
            let b = xchange_coefficients(p).unwrap();
            assert_eq!(b[0], 1, "b_1 = 1 for every odd prime");
            // Wilson consistency: y_[p-1] = prod -(p-l)^2 = 1 mod p
            assert_eq!(*xchange_brackets(p).last().unwrap(), 1);
        }
        assert_eq!(xchange_coefficients(2).unwrap_err(), Error::OddPrimeRequired(2));
    }
}

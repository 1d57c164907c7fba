//! Polytabloids, the filtration layers they span, Garnir straightening
//! and the p-standard quotient basis of the slash-0 homology.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    column_space, solve, subspace_intersection, FpMatrix, Subspace,
};
use crate::subsets::{
    act, all_subsets, binomial, boundary_matrix, a_step_boundary, OmegaVector, Permutation,
};
use crate::tableaux::{
    bad_entry_columns, dim_h0_formula, in_window, is_almost_standard, is_l_standard,
    is_p_standard, is_standard, standard_tableaux, TwoRowTableau,
};

/// The signed sum over the group generated by the first `level` column
/// transpositions of a tableau.
#[derive(Clone, Debug)]
pub struct SignedSubgroupSum {
    pairs: Vec<(usize, usize)>,
}

impl SignedSubgroupSum {
    pub fn from_tableau(t: &TwoRowTableau, level: usize) -> Result<Self> {
        let cap = t.k().min(t.n() - t.k());
        if level > cap {
            return Err(Error::BadStandardnessLevel(level, cap));
        }
        Ok(Self {
            pairs: (1..=level).map(|j| (t.entry(1, j), t.entry(2, j))).collect(),
        })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// All 2^level terms (sigma, sign), sign = (-1)^{number of
    /// transpositions multiplied into sigma}.
    pub fn expansion(&self, n: usize) -> Vec<(Permutation, i64)> {
        let l = self.pairs.len();
        (0..1u64 << l)
            .map(|mask| {
                let mut g = Permutation::identity(n);
                for (j, &(a, b)) in self.pairs.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        g = g.then(&Permutation::transposition(n, a, b));
                    }
                }
                (g, if mask.count_ones() % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }
}

/// The level-polytabloid of a tableau: the signed sum of the 2^level
/// subsets obtained by swapping entries in the first `level` columns.
/// Distinct row-equivalent tableaux can give distinct polytabloids.
pub fn l_polytabloid(t: &TwoRowTableau, level: usize, p: u64) -> Result<OmegaVector> {
    let sum = SignedSubgroupSum::from_tableau(t, level)?;
    let mut out = OmegaVector::zero(t.n(), t.k(), p)?;
    let base = t.subset();
    for mask in 0..1u64 << level {
        let mut omega = base;
        for (j, &(top, bottom)) in sum.pairs().iter().enumerate() {
            if mask >> j & 1 == 1 {
                omega = omega.without_element(bottom).with_element(top);
            }
        }
        out.add_signed_term(&omega, if mask.count_ones() % 2 == 0 { 1 } else { -1 });
    }
    Ok(out)
}

/// Polytabloid at full level k.
pub fn polytabloid(t: &TwoRowTableau, p: u64) -> Result<OmegaVector> {
    l_polytabloid(t, t.k().min(t.n() - t.k()), p)
}

/// The standard tableaux of shape (n-k, k) with their polytabloid rows.
pub fn standard_polytabloid_matrix(n: usize, k: usize, p: u64) -> Result<(Vec<TwoRowTableau>, FpMatrix)> {
    let tableaux = standard_tableaux(n, k);
    let rows: Vec<Vec<u64>> = tableaux
        .iter()
        .map(|t| Ok(polytabloid(t, p)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    Ok((tableaux, FpMatrix::from_rows(p, &rows)?))
}

/// One filtration layer: the span of all level-polytabloids of shape
/// (n-k, k) over GF(p).
pub struct SpechtLayer {
    n: usize,
    k: usize,
    level: usize,
    p: u64,
    basis: Subspace,
}

impl SpechtLayer {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.basis
    }
}

fn check_layer_params(n: usize, k: usize, level: usize) -> Result<()> {
    let cap = k.min(n - k);
    if k > n || level > cap {
        return Err(Error::BadStandardnessLevel(level, cap));
    }
    Ok(())
}

/// All level-standard tableaux (partition shapes only).
pub fn l_standard_tableaux(n: usize, k: usize, level: usize) -> Vec<TwoRowTableau> {
    let mut out = Vec::new();
    for omega in all_subsets(n, k) {
        let t = TwoRowTableau::from_subset(&omega);
        if is_l_standard(&t, level).unwrap_or(false) {
            out.push(t);
        }
    }
    out
}

/// Span of every level-polytabloid, enumerated over all distinct
/// (subset, column-pairing) combinations. Exhaustive but exponential;
/// meant for desk-scale verification and for the non-partition shapes.
pub fn specht_layer_full(n: usize, k: usize, level: usize, p: u64) -> Result<SpechtLayer> {
    check_layer_params(n, k, level)?;
    let ambient = binomial(n as i64, k as i64) as usize;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for omega in all_subsets(n, k) {
        let inside = omega.elements();
        let outside = omega.complement().elements();
        for bottoms in inside.iter().combinations(level) {
            for tops in outside.iter().permutations(level) {
                // pair tops[j] over bottoms[j]; remaining entries fill the rows
                let head2: Vec<usize> = bottoms.iter().map(|&&e| e).collect();
                let rest2: Vec<usize> = inside.iter().filter(|e| !head2.contains(e)).copied().collect();
                let head1: Vec<usize> = tops.iter().map(|&&e| e).collect();
                let rest1: Vec<usize> = outside.iter().filter(|e| !head1.contains(e)).copied().collect();
                let t = TwoRowTableau::new(n, [head1, rest1].concat(), [head2, rest2].concat());
                rows.push(l_polytabloid(&t, level, p)?.coeffs().to_vec());
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![0; ambient]);
    }
    let basis = Subspace::from_spanning_rows(&FpMatrix::from_rows(p, &rows)?);
    Ok(SpechtLayer {
        n,
        k,
        level,
        p,
        basis,
    })
}

/// The span of the level-standard level-polytabloids, with the linear
/// independence assertion built in. At level 0 this is the whole space
/// and at level k it is the top layer with its standard-polytabloid
/// basis; at intermediate levels it is a proper subspace of the full
/// span in general. Non-partition shapes (2k > n) fall back to the
/// exhaustive spanning family.
pub fn specht_layer(n: usize, k: usize, level: usize, p: u64) -> Result<SpechtLayer> {
    check_layer_params(n, k, level)?;
    if 2 * k > n {
        return specht_layer_full(n, k, level, p);
    }
    let tableaux = l_standard_tableaux(n, k, level);
    let rows: Vec<Vec<u64>> = tableaux
        .iter()
        .map(|t| Ok(l_polytabloid(t, level, p)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let ambient = binomial(n as i64, k as i64) as usize;
    let matrix = if rows.is_empty() {
        FpMatrix::zero(0, ambient, p)?
    } else {
        FpMatrix::from_rows(p, &rows)?
    };
    let basis = Subspace::from_spanning_rows(&matrix);
    assert_eq!(
        basis.dim(),
        tableaux.len(),
        "level-standard polytabloids must be independent"
    );
    Ok(SpechtLayer {
        n,
        k,
        level,
        p,
        basis,
    })
}

/// Matrix of the r-fold boundary out of degree k, with out-of-range
/// degrees treated as zero spaces.
pub fn phi_power_matrix(n: usize, k: isize, r: usize, p: u64) -> Result<FpMatrix> {
    let dim = |d: isize| -> usize { binomial(n as i64, d as i64) as usize };
    if r == 0 {
        return FpMatrix::identity(dim(k), p);
    }
    let mut acc = if k >= 0 && k <= n as isize {
        boundary_matrix(n, k as usize, p)?
    } else {
        FpMatrix::zero(dim(k - 1), dim(k), p)?
    };
    for j in 1..r {
        let d = k - j as isize;
        let step = if d >= 0 && d <= n as isize {
            boundary_matrix(n, d as usize, p)?
        } else {
            FpMatrix::zero(dim(d - 1), dim(d), p)?
        };
        acc = step.mul(&acc)?;
    }
    Ok(acc)
}

/// Check the two filtration identities at one layer: the kernel of the
/// (k-level)-step boundary restricted to the layer is the next layer,
/// and its image is the full layer at degree `level`. When k-level < p
/// the same holds for the iterated single-step boundary. The layers here
/// are the genuine spans over every polytabloid; the level-standard
/// polytabloids are additionally checked to be independent.
pub fn verify_james(n: usize, k: usize, level: usize, p: u64) -> Result<bool> {
    check_layer_params(n, k, level)?;
    let layer = specht_layer_full(n, k, level, p)?;
    let next = if level == k.min(n - k) {
        Subspace::zero(binomial(n as i64, k as i64) as usize, p)?
    } else {
        specht_layer_full(n, k, level + 1, p)?.basis
    };
    let target = specht_layer_full(n, level, level, p)?;

    if 2 * k <= n {
        // independence of the level-standard polytabloids, and their
        // containment in the layer they live in
        let standard = specht_layer(n, k, level, p)?;
        if !crate::linalg::contains(&layer.basis, &standard.basis)? {
            return Ok(false);
        }
    }

    let mut maps = vec![a_step_boundary(n, k, k - level, p)?];
    if k - level < p as usize {
        maps.push(phi_power_matrix(n, k as isize, k - level, p)?);
    }
    for map in maps {
        // restrict to the layer: columns of the basis give coefficients
        let restricted = map.mul(&layer.basis.basis().transpose())?;
        let coeff_kernel = crate::linalg::nullspace(&restricted);
        let kernel = Subspace::from_spanning_rows(&coeff_kernel.basis().mul(layer.basis.basis())?);
        if kernel != next {
            return Ok(false);
        }
        if column_space(&restricted) != target.basis {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The span of the positive-threshold subsets complements the top layer:
/// their dimensions add to C(n,k) and they intersect trivially.
pub fn direct_sum_check(n: usize, k: usize, p: u64) -> Result<bool> {
    if 2 * k > n {
        return Err(Error::WindowViolation(n, k, p));
    }
    let ambient = binomial(n as i64, k as i64) as usize;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for omega in all_subsets(n, k) {
        if crate::tableaux::threshold(&omega) > 0 {
            let mut row = vec![0u64; ambient];
            let basis = crate::subsets::OmegaBasis::new(n, k)?;
            row[basis.rank(&omega)] = 1;
            rows.push(row);
        }
    }
    let positive = if rows.is_empty() {
        Subspace::zero(ambient, p)?
    } else {
        Subspace::from_spanning_rows(&FpMatrix::from_rows(p, &rows)?)
    };
    let top = specht_layer(n, k, k, p)?;
    let meet = subspace_intersection(&positive, top.subspace())?;
    Ok(positive.dim() + top.dim() == ambient && meet.dim() == 0)
}

/// Canonical almost-standard form of a tableau together with the sign
/// relating the polytabloids: each column is sorted (a swap flips the
/// sign), then whole columns and the unpaired tail are reordered (which
/// leaves the polytabloid unchanged).
pub fn canonical_almost_standard(t: &TwoRowTableau) -> (TwoRowTableau, i64) {
    let n = t.n();
    let k = t.k();
    assert!(2 * k <= n, "straightening works on partition shapes");
    let mut sign = 1i64;
    let mut pairs: Vec<(usize, usize)> = (1..=k)
        .map(|j| {
            let (a, b) = (t.entry(1, j), t.entry(2, j));
            if a > b {
                sign = -sign;
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    pairs.sort_by_key(|&(_, bottom)| bottom);
    let mut tail: Vec<usize> = (k + 1..=n - k).map(|j| t.entry(1, j)).collect();
    tail.sort_unstable();
    let mut row1: Vec<usize> = pairs.iter().map(|&(top, _)| top).collect();
    row1.extend(tail);
    let row2 = pairs.into_iter().map(|(_, bottom)| bottom).collect();
    (TwoRowTableau::new(n, row1, row2), sign)
}

/// One Garnir step at a first-row descent in column j <= k: returns
/// (u, w) with e_t = e_u - e_w, both almost standard and strictly above
/// t in the straightening order.
pub fn garnir_expand(t: &TwoRowTableau, j: usize) -> Result<(TwoRowTableau, TwoRowTableau)> {
    if !is_almost_standard(t) {
        return Err(Error::NotAlmostStandard);
    }
    let k = t.k();
    assert!(j >= 1 && j <= k, "descent column must be paired");
    assert!(j < t.n() - k, "column j+1 must exist");
    if t.entry(1, j) < t.entry(1, j + 1) {
        return Err(Error::NoDescent(j));
    }
    let n = t.n();
    let tau = Permutation::transposition(n, t.entry(1, j), t.entry(1, j + 1));
    let u = t.apply_permutation(&tau);

    let sigma = Permutation::cycle(n, &[t.entry(1, j), t.entry(1, j + 1), t.entry(2, j)]);
    let v = t.apply_permutation(&sigma);
    // the new second-row entry t_{1,j} must move left to its sorted slot
    let moved = t.entry(1, j);
    let slot = (1..j).rev().find(|&i| v.entry(2, i) < moved).unwrap_or(0) + 1;
    let mut row1: Vec<usize> = v.row1().to_vec();
    let mut row2: Vec<usize> = v.row2().to_vec();
    row1[slot - 1..j].rotate_right(1);
    row2[slot - 1..j].rotate_right(1);
    let w = TwoRowTableau::new(n, row1, row2);
    debug_assert!(is_almost_standard(&u) && is_almost_standard(&w));
    Ok((u, w))
}

/// Rewrite a combination of polytabloids over the standard-polytabloid
/// basis by repeated Garnir expansion, always attacking the smallest
/// descent column. The step cap guards against non-termination.
pub fn straighten(
    n: usize,
    k: usize,
    p: u64,
    terms: &[(TwoRowTableau, u64)],
) -> Result<Vec<(TwoRowTableau, u64)>> {
    use std::collections::BTreeMap;
    assert!(2 * k <= n, "straightening works on partition shapes");
    let cap: u64 = 1u64 << n.min(62);
    let mut acc: BTreeMap<TwoRowTableau, u64> = BTreeMap::new();
    fn add(acc: &mut BTreeMap<TwoRowTableau, u64>, p: u64, t: TwoRowTableau, c: u64) {
        if c % p == 0 {
            return;
        }
        let total = (acc.get(&t).copied().unwrap_or(0) + c) % p;
        if total == 0 {
            acc.remove(&t);
        } else {
            acc.insert(t, total);
        }
    }
    for (t, c) in terms {
        assert_eq!((t.n(), t.k()), (n, k), "terms must share one shape");
        let (canon, sign) = canonical_almost_standard(t);
        let signed = if sign >= 0 { *c % p } else { (p - *c % p) % p };
        add(&mut acc, p, canon, signed);
    }
    let mut steps = 0u64;
    loop {
        let next = acc
            .iter()
            .find(|(t, _)| !is_standard(t))
            .map(|(t, &c)| (t.clone(), c));
        let Some((t, c)) = next else { break };
        acc.remove(&t);
        steps += 1;
        if steps > cap {
            return Err(Error::StraighteningDiverged(cap));
        }
        let descent = (1..t.n() - k)
            .find(|&j| t.entry(1, j) > t.entry(1, j + 1))
            .expect("non-standard almost standard tableau has a first-row descent");
        debug_assert!(descent <= k, "canonical tails are sorted");
        let (u, w) = garnir_expand(&t, descent)?;
        let (cu, su) = canonical_almost_standard(&u);
        let (cw, sw) = canonical_almost_standard(&w);
        let coeff = |sign: i64, c: u64| if sign >= 0 { c } else { (p - c) % p };
        add(&mut acc, p, cu, coeff(su, c));
        add(&mut acc, p, cw, coeff(-sw, c));
    }
    Ok(acc.into_iter().collect())
}

/// Coordinates of a vector over the standard-polytabloid basis by direct
/// linear solve; the independent oracle for `straighten`.
pub fn standard_coordinates(x: &OmegaVector) -> Result<Vec<(TwoRowTableau, u64)>> {
    let (n, k, p) = (x.n(), x.k(), x.modulus());
    let (tableaux, matrix) = standard_polytabloid_matrix(n, k, p)?;
    let coords = solve(&matrix.transpose(), x.coeffs()).ok_or(Error::NonMember)?;
    Ok(tableaux
        .into_iter()
        .zip(coords)
        .filter(|&(_, c)| c != 0)
        .collect())
}

/// The (p-1)-element block attached to a bad entry in column i:
/// the next p-2 first-row entries followed by the bad entry itself,
/// strictly increasing as listed.
pub fn bad_entry_block(t: &TwoRowTableau, i: usize, p: u64) -> Result<Vec<usize>> {
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    if !bad_entry_columns(t, p).contains(&i) {
        return Err(Error::NotBadEntry(i));
    }
    let shift = p as usize - 2;
    assert!(i + shift <= t.n() - t.k(), "bad entries sit left of the row end");
    let mut block: Vec<usize> = (1..=shift).map(|d| t.entry(1, i + d)).collect();
    block.push(t.entry(2, i));
    debug_assert!(block.windows(2).all(|w| w[0] < w[1]));
    Ok(block)
}

/// The symmetrised polytabloid sum over the block of a bad entry. The
/// result is checked to lie in the image of the (p-1)-fold boundary.
pub fn bad_entry_relation(t: &TwoRowTableau, i: usize, p: u64) -> Result<OmegaVector> {
    if p == 2 {
        return Err(Error::OddPrimeRequired(p));
    }
    let block = bad_entry_block(t, i, p)?;
    let (n, k) = (t.n(), t.k());
    let e = polytabloid(t, p)?;
    let mut out = OmegaVector::zero(n, k, p)?;
    for perm in block.iter().permutations(block.len()) {
        let mut images: Vec<usize> = (1..=n).collect();
        for (&from, &to) in block.iter().zip(perm) {
            images[from - 1] = to;
        }
        let g = Permutation::new(images).expect("block permutation is a bijection");
        out = out.add(&act(&e, &g));
    }
    let image = column_space(&phi_power_matrix(n, k as isize + p as isize - 1, p as usize - 1, p)?);
    assert!(
        image.contains_vector(out.coeffs()),
        "symmetrised bad-entry sum must fall into the deep boundary image"
    );
    Ok(out)
}

/// Quotient basis data at one in-window position: the p-standard
/// tableaux and the reduced coset representatives of their polytabloids.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H0Basis {
    pub n: usize,
    pub k: usize,
    pub p: u64,
    /// row pairs of the p-standard tableaux
    pub tableaux: Vec<[Vec<usize>; 2]>,
    /// one representative row per tableau, reduced against the radical
    pub representatives: FpMatrix,
}

impl H0Basis {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("basis serialises")
    }
}

/// The radical at an in-window position: the intersection of the deep
/// boundary image with the top layer.
pub fn radical_subspace(n: usize, k: usize, p: u64) -> Result<Subspace> {
    if !in_window(n, k, p) {
        return Err(Error::WindowViolation(n, k, p));
    }
    let top = specht_layer(n, k, k, p)?;
    let image = column_space(&phi_power_matrix(n, k as isize + p as isize - 1, p as usize - 1, p)?);
    subspace_intersection(&image, top.subspace())
}

pub fn radical_dim(n: usize, k: usize, p: u64) -> Result<usize> {
    let radical = radical_subspace(n, k, p)?;
    debug_assert_eq!(
        radical.dim() as u64,
        specht_layer(n, k, k, p)?.dim() as u64 - dim_h0_formula(n, k, p)
    );
    Ok(radical.dim())
}

/// The p-standard polytabloids reduced against the radical: linearly
/// independent coset representatives of the slash-0 homology.
pub fn h0_basis(n: usize, k: usize, p: u64) -> Result<H0Basis> {
    let radical = radical_subspace(n, k, p)?;
    let good: Vec<TwoRowTableau> = standard_tableaux(n, k)
        .into_iter()
        .filter(|t| is_p_standard(t, p).expect("standard by construction"))
        .collect();
    if good.is_empty() {
        return Err(Error::EmptyBasis);
    }
    let rows: Vec<Vec<u64>> = good
        .iter()
        .map(|t| Ok(radical.reduce_vector(polytabloid(t, p)?.coeffs())))
        .collect::<Result<_>>()?;
    let representatives = FpMatrix::from_rows(p, &rows)?;
    let rank = Subspace::from_spanning_rows(&representatives).dim();
    assert_eq!(rank, good.len(), "projected p-standard polytabloids must stay independent");
    Ok(H0Basis {
        n,
        k,
        p,
        tableaux: good
            .iter()
            .map(|t| [t.row1().to_vec(), t.row2().to_vec()])
            .collect(),
        representatives,
    })
}

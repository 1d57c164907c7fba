//! Two-row tableaux, density/threshold statistics and bounded lattice
//! paths, together with the closed-form dimension counts they support.

use crate::error::{Error, Result};
use crate::subsets::{all_subsets, binomial, KSubset, Permutation};

/// A filling of the two-row shape (n-k, k) whose entries partition [n].
/// Row and column indices are 1-based, rows counted from the top.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoRowTableau {
    n: usize,
    row1: Vec<usize>,
    row2: Vec<usize>,
}

impl TwoRowTableau {
    pub fn new(n: usize, row1: Vec<usize>, row2: Vec<usize>) -> Self {
        assert_eq!(row1.len() + row2.len(), n, "rows must fill the shape");
        let mut seen = vec![false; n + 1];
        for &e in row1.iter().chain(&row2) {
            assert!(e >= 1 && e <= n && !seen[e], "entries must partition [n]");
            seen[e] = true;
        }
        Self { n, row1, row2 }
    }

    /// The row-standard tableau whose second row is omega.
    pub fn from_subset(omega: &KSubset) -> Self {
        Self {
            n: omega.ground_set(),
            row1: omega.complement().elements(),
            row2: omega.elements(),
        }
    }

    /// The associated k-subset: the set of second-row entries.
    pub fn subset(&self) -> KSubset {
        KSubset::new(self.n, &self.row2).expect("entries lie in [n]")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.row2.len()
    }

    pub fn row1(&self) -> &[usize] {
        &self.row1
    }

    pub fn row2(&self) -> &[usize] {
        &self.row2
    }

    /// Entry t_{i,j} with 1-based row and column.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        match i {
            1 => self.row1[j - 1],
            2 => self.row2[j - 1],
            _ => panic!("row index {i} out of range"),
        }
    }

    pub fn apply_permutation(&self, g: &Permutation) -> Self {
        Self {
            n: self.n,
            row1: self.row1.iter().map(|&e| g.image(e)).collect(),
            row2: self.row2.iter().map(|&e| g.image(e)).collect(),
        }
    }
}

impl std::fmt::Debug for TwoRowTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:?}/{:?}]", self.row1, self.row2)
    }
}

pub fn is_row_standard(t: &TwoRowTableau) -> bool {
    t.row1.windows(2).all(|w| w[0] < w[1]) && t.row2.windows(2).all(|w| w[0] < w[1])
}

/// Entries increase down every two-entry column.
pub fn is_column_standard(t: &TwoRowTableau) -> bool {
    let cols = t.row1.len().min(t.row2.len());
    (0..cols).all(|j| t.row1[j] < t.row2[j])
}

/// Row-standard with the first `level` columns standard.
pub fn is_l_standard(t: &TwoRowTableau, level: usize) -> Result<bool> {
    let cap = t.k().min(t.n - t.k());
    if level > cap {
        return Err(Error::BadStandardnessLevel(level, cap));
    }
    Ok(is_row_standard(t) && (0..level).all(|j| t.row1[j] < t.row2[j]))
}

pub fn is_standard(t: &TwoRowTableau) -> bool {
    let k = t.k();
    2 * k <= t.n && is_l_standard(t, k).expect("k <= n-k here")
}

/// All subsets whose associated tableau is standard, in rank order.
pub fn standard_subsets(n: usize, k: usize) -> Vec<KSubset> {
    all_subsets(n, k)
        .into_iter()
        .filter(|omega| {
            omega
                .elements()
                .iter()
                .enumerate()
                .all(|(i, &e)| e >= 2 * (i + 1))
        })
        .collect()
}

pub fn standard_tableaux(n: usize, k: usize) -> Vec<TwoRowTableau> {
    standard_subsets(n, k)
        .iter()
        .map(TwoRowTableau::from_subset)
        .collect()
}

/// Density d_i = |omega cap [2i-1]| for i = 1..=m with m = floor(n/2)+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Density(Vec<usize>);

impl Density {
    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

pub fn density(omega: &KSubset) -> Density {
    let n = omega.ground_set();
    let m = n / 2 + 1;
    Density(
        (1..=m)
            .map(|i| {
                let bound = (2 * i - 1).min(n);
                omega
                    .intersection(&KSubset::interval(n, bound).expect("bound <= n"))
                    .len()
            })
            .collect(),
    )
}

/// Largest i with d_i = i, or 0 when the diagonal is never met.
pub fn threshold(omega: &KSubset) -> usize {
    density(omega)
        .values()
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d == i + 1)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// Partition of the k-subsets of [n] by threshold; entry h holds the
/// class of threshold h, h = 0..=m.
pub fn threshold_classes(n: usize, k: usize) -> Vec<Vec<KSubset>> {
    let m = n / 2 + 1;
    let mut classes = vec![Vec::new(); m + 1];
    for omega in all_subsets(n, k) {
        classes[threshold(&omega)].push(omega);
    }
    classes
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Right,
    Up,
}

/// An explicit bound for lattice paths; the unbounded case is a marker,
/// not a sentinel integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathBound {
    Finite(usize),
    Unbounded,
}

impl PathBound {
    fn admits(&self, excess: i64) -> bool {
        match *self {
            PathBound::Finite(b) => excess < b as i64,
            PathBound::Unbounded => true,
        }
    }
}

/// An n-step monotone lattice path from the origin.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::Up).count()
    }

    /// The n+1 visited points starting from (0,0).
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = vec![(0, 0)];
        let (mut x, mut y) = (0i64, 0i64);
        for s in &self.steps {
            match s {
                Step::Right => x += 1,
                Step::Up => y += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Every visited point (x, y) satisfies -t < y - x < s.
    pub fn is_bounded(&self, s: PathBound, t: PathBound) -> bool {
        self.points()
            .iter()
            .all(|&(x, y)| s.admits(y - x) && t.admits(x - y))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Step::Right),
                'U' | 'u' => Ok(Step::Up),
                _ => Err(Error::BadMatrixPayload(format!("bad path step '{c}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { steps })
    }
}

impl std::fmt::Display for LatticePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::Up { 'U' } else { 'R' })?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// The subset of positions where the path steps up.
pub fn subset_of_path(path: &LatticePath) -> Result<KSubset> {
    let ups: Vec<usize> = path
        .steps
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::Up)
        .map(|(i, _)| i + 1)
        .collect();
    KSubset::new(path.len(), &ups)
}

pub fn path_of_subset(omega: &KSubset) -> LatticePath {
    LatticePath {
        steps: (1..=omega.ground_set())
            .map(|a| if omega.contains(a) { Step::Up } else { Step::Right })
            .collect(),
    }
}

/// Path of a standard tableau; always 1-bounded-above.
pub fn path_of_tableau(t: &TwoRowTableau) -> Result<LatticePath> {
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    Ok(path_of_subset(&t.subset()))
}

/// Standard tableau read from a 1-bounded-above open path.
pub fn tableau_of_path(path: &LatticePath, n: usize, k: usize) -> Result<TwoRowTableau> {
    assert_eq!(path.len(), n, "path length must be n");
    assert_eq!(path.up_count(), k, "path must have k up-steps");
    let t = TwoRowTableau::from_subset(&subset_of_path(path)?);
    if !is_standard(&t) {
        return Err(Error::NotStandard);
    }
    Ok(t)
}

/// Whether a standard tableau comes from a (p-1)-bounded-below path.
pub fn is_p_standard(t: &TwoRowTableau, p: u64) -> Result<bool> {
    if !is_standard(t) {
        return Err(Error::NotStandard);
    }
    Ok(path_of_subset(&t.subset())
        .is_bounded(PathBound::Finite(1), PathBound::Finite(p as usize - 1)))
}

/// Bad-entry detection: some second-row entry satisfies t_{2,i} >= 2i-1+(p-1).
pub fn has_bad_entry(t: &TwoRowTableau, p: u64) -> bool {
    t.row2
        .iter()
        .enumerate()
        .any(|(i0, &e)| e >= 2 * (i0 + 1) + p as usize - 2)
}

/// Column indices (1-based) of all bad entries.
pub fn bad_entry_columns(t: &TwoRowTableau, p: u64) -> Vec<usize> {
    t.row2
        .iter()
        .enumerate()
        .filter(|&(i0, &e)| e >= 2 * (i0 + 1) + p as usize - 2)
        .map(|(i0, _)| i0 + 1)
        .collect()
}

/// The entrywise comparison t_{2,j} < t_{1,j+p-2}, skipped where the
/// first-row column does not exist.
pub fn kleshchev_entrywise(t: &TwoRowTableau, p: u64) -> bool {
    let shift = p as usize - 2;
    (1..=t.k()).all(|j| {
        if j + shift > t.n - t.k() {
            true
        } else {
            t.entry(2, j) < t.entry(1, j + shift)
        }
    })
}

/// Whether the slash homology window n-(p-1) < 2k <= n holds with p odd.
pub fn in_window(n: usize, k: usize, p: u64) -> bool {
    p != 2 && 2 * k <= n && n - 2 * k <= p as usize - 2
}

/// Depth-first enumeration of open (n-k,k)-paths within the bounds,
/// in lexicographic step order (Right before Up).
pub fn enumerate_paths(n: usize, k: usize, s: PathBound, t: PathBound) -> Vec<LatticePath> {
    let mut out = Vec::new();
    if k > n || !s.admits(0) || !t.admits(0) {
        return out;
    }
    let mut steps = Vec::with_capacity(n);
    fn rec(
        n: usize,
        k: usize,
        x: i64,
        y: i64,
        s: PathBound,
        t: PathBound,
        steps: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if steps.len() == n {
            out.push(LatticePath::new(steps.clone()));
            return;
        }
        let ups_left = k as i64 - y;
        let rights_left = (n - k) as i64 - x;
        if rights_left > 0 && s.admits(y - (x + 1)) && t.admits((x + 1) - y) {
            steps.push(Step::Right);
            rec(n, k, x + 1, y, s, t, steps, out);
            steps.pop();
        }
        if ups_left > 0 && s.admits((y + 1) - x) && t.admits(x - (y + 1)) {
            steps.push(Step::Up);
            rec(n, k, x, y + 1, s, t, steps, out);
            steps.pop();
        }
    }
    rec(n, k, 0, 0, s, t, &mut steps, &mut out);
    out
}

/// Closed-form count of (s,t)-bounded open paths:
/// sum over j of C(n, k+j(t+s)) - C(n, k+j(t+s)+t).
///
/// The reflection sum is exact precisely when the endpoint (n-k, k) lies
/// strictly inside the band -t < y-x < s; beyond the band no path exists
/// and the count is zero outright.
pub fn count_paths_formula(n: usize, k: usize, s: usize, t: usize) -> u64 {
    let excess = 2 * k as i64 - n as i64;
    if s + t == 0 || excess >= s as i64 || excess <= -(t as i64) {
        return 0;
    }
    let period = (s + t) as i64;
    let (n, k, t) = (n as i64, k as i64, t as i64);
    let mut acc: i128 = 0;
    // both binomial arguments vanish once |j| * period exceeds n + k + t
    let span = (n + k + t) / period + 1;
    for j in -span..=span {
        acc += binomial(n, k + j * period) as i128;
        acc -= binomial(n, k + j * period + t) as i128;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// dim of the slash-0 homology at degree k: zero outside the window,
/// otherwise sum over j of C(n, pj+k) - C(n, pj+k-1).
pub fn dim_h0_formula(n: usize, k: usize, p: u64) -> u64 {
    if !in_window(n, k, p) {
        return 0;
    }
    let (ni, ki, pi) = (n as i64, k as i64, p as i64);
    let mut acc: i128 = 0;
    let span = (ni + ki) / pi + 1;
    for j in -span..=span {
        acc += binomial(ni, pi * j + ki) as i128;
        acc -= binomial(ni, pi * j + ki - 1) as i128;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// The two-row simple-module dimension as an alternating binomial sum,
/// valid in the window n-(p-1) < 2k <= n for odd p.
pub fn dim_simple_erdmann(n: usize, k: usize, p: u64) -> Result<u64> {
    if p == 2 || !in_window(n, k, p) {
        return Err(Error::WindowViolation(n, k, p));
    }
    let (ni, ki, pi) = (n as i64, k as i64, p as i64);
    let mut acc: i128 = 0;
    for j in 0..=ki / pi {
        acc += binomial(ni, ki - pi * j) as i128 - binomial(ni, ki - pi * j - 1) as i128;
        let tail = ni - ki - pi * (j + 1);
        acc -= binomial(ni, tail + 1) as i128 - binomial(ni, tail) as i128;
    }
    debug_assert!(acc >= 0);
    Ok(acc as u64)
}

/// Column-standard with a sorted second row.
pub fn is_almost_standard(t: &TwoRowTableau) -> bool {
    2 * t.k() <= t.n
        && is_column_standard(t)
        && t.row2.windows(2).all(|w| w[0] < w[1])
}

/// All almost standard tableaux with the unpaired first-row tail sorted
/// (tail order never affects the associated polytabloid).
pub fn almost_standard_tableaux(n: usize, k: usize) -> Vec<TwoRowTableau> {
    assert!(2 * k <= n, "almost standard tableaux need a partition shape");
    let mut out = Vec::new();
    for omega in all_subsets(n, k) {
        let row2 = omega.elements();
        let pool = omega.complement().elements();
        let mut partners: Vec<usize> = Vec::with_capacity(k);
        let mut used = vec![false; pool.len()];
        fn rec(
            j: usize,
            row2: &[usize],
            pool: &[usize],
            used: &mut Vec<bool>,
            partners: &mut Vec<usize>,
            out: &mut Vec<TwoRowTableau>,
            n: usize,
        ) {
            if j == row2.len() {
                let mut row1 = partners.clone();
                row1.extend(pool.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(&e, _)| e));
                out.push(TwoRowTableau::new(n, row1, row2.to_vec()));
                return;
            }
            for (idx, &c) in pool.iter().enumerate() {
                if !used[idx] && c < row2[j] {
                    used[idx] = true;
                    partners.push(c);
                    rec(j + 1, row2, pool, used, partners, out, n);
                    partners.pop();
                    used[idx] = false;
                }
            }
        }
        rec(0, &row2, &pool, &mut used, &mut partners, &mut out, n);
    }
    out
}

/// Row-dominance comparison: |a cap [i]| <= |b cap [i]| for all i.
pub fn dominance_leq(a: &KSubset, b: &KSubset) -> bool {
    let n = a.ground_set();
    let mut ca = 0;
    let mut cb = 0;
    for i in 1..=n {
        if a.contains(i) {
            ca += 1;
        }
        if b.contains(i) {
            cb += 1;
        }
        if ca > cb {
            return false;
        }
    }
    true
}

/// The straightening order on almost standard tableaux: equality, strict
/// row-dominance of the associated subsets, or (for equal subsets) the
/// first-difference rule on first-row column positions. Returns whether
/// t precedes (is below or equal to) t2; the relation is a partial
/// order and pairs may be incomparable in both directions.
pub fn ast_precedes(t: &TwoRowTableau, t2: &TwoRowTableau) -> Result<bool> {
    if !is_almost_standard(t) || !is_almost_standard(t2) {
        return Err(Error::NotAlmostStandard);
    }
    assert_eq!((t.n, t.k()), (t2.n, t2.k()), "comparable shapes required");
    if t == t2 {
        return Ok(true);
    }
    let (s1, s2) = (t.subset(), t2.subset());
    if s1 != s2 {
        return Ok(dominance_leq(&s1, &s2) && s1 != s2);
    }
    // equal subsets: walk the complement in increasing order and compare
    // first-row positions at the first difference
    let col_of = |tab: &TwoRowTableau, e: usize| -> usize {
        tab.row1.iter().position(|&x| x == e).expect("element in first row") + 1
    };
    for e in s1.complement().elements() {
        let (a, b) = (col_of(t, e), col_of(t2, e));
        if a != b {
            return Ok(a > b);
        }
    }
    Ok(false)
}

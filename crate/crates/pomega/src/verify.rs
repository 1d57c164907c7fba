//! Named verification suites: every lemma-level identity and golden
//! table in one registry, runnable from the command line and reused by
//! the acceptance tests. All randomness is seeded and deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{column_space, nullspace};
use crate::pcomplex::{euler_characteristic, slash_euler_from_report, PComplex};
use crate::specht::{
    h0_basis, phi_power_matrix, polytabloid, standard_coordinates, standard_polytabloid_matrix,
    straighten, verify_james,
};
use crate::subsets::{
    all_subsets, binomial, boundary_matrix, partial_boundary, partial_coboundary,
    xchange_brackets, KSubset, OmegaBasis, OmegaVector,
};
use crate::tableaux::{
    almost_standard_tableaux, bad_entry_columns, count_paths_formula, density,
    dim_simple_erdmann, enumerate_paths, in_window, is_p_standard, standard_subsets,
    standard_tableaux, threshold, threshold_classes, PathBound,
};

pub const DEFAULT_SEED: u64 = 0xA5EED;

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n_max: usize,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub samples: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            n_max: 8,
            primes: vec![3, 5, 7],
            seed: DEFAULT_SEED,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub cases: u64,
    pub witness: Option<String>,
}

pub const SUITE_NAMES: &[&str] = &[
    "splitting",
    "partition",
    "homogeneity",
    "curved",
    "xchange",
    "ind",
    "fourterm",
    "duality",
    "shift",
    "window",
    "triple",
    "james",
    "euler",
    "figure1",
    "straighten",
    "paths",
    "density",
    "basis",
    "badentry",
    "contracted",
];

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteOutcome> {
    let (cases, witness) = match name {
        "splitting" => splitting(params),
        "partition" => partition(params),
        "homogeneity" => homogeneity(params),
        "curved" => curved(params),
        "xchange" => xchange(params),
        "ind" => theorem_ind(params),
        "fourterm" => fourterm(params),
        "duality" => duality(params),
        "shift" => shift(params),
        "window" => window(params),
        "triple" => triple(params),
        "james" => james(params),
        "euler" => euler(params),
        "figure1" => figure1(params),
        "straighten" => straighten_suite(params),
        "paths" => paths(params),
        "density" => density_suite(params),
        "basis" => basis_suite(params),
        "badentry" => badentry(params),
        "contracted" => contracted(params),
        other => return Err(Error::BadMatrixPayload(format!("unknown suite '{other}'"))),
    };
    Ok(SuiteOutcome {
        name: SUITE_NAMES
            .iter()
            .find(|&&s| s == name)
            .expect("validated above"),
        pass: witness.is_none(),
        cases,
        witness,
    })
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, k: usize, p: u64) -> OmegaVector {
    let len = binomial(n as i64, k as i64) as usize;
    OmegaVector::from_coeffs(n, k, p, (0..len).map(|_| rng.random_range(0..p)).collect())
        .expect("valid parameters")
}

/// Random vector supported on subsets meeting I in exactly h elements.
fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    p: u64,
    i_set: &KSubset,
    h: usize,
) -> OmegaVector {
    let mut y = OmegaVector::zero(n, k, p).expect("valid parameters");
    for omega in all_subsets(n, k) {
        if omega.intersection(i_set).len() == h {
            y.add_term(&omega, rng.random_range(0..p));
        }
    }
    y
}

fn random_threshold_vector(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    p: u64,
    h: usize,
) -> OmegaVector {
    let mut y = OmegaVector::zero(n, k, p).expect("valid parameters");
    for omega in all_subsets(n, k) {
        if threshold(&omega) == h {
            y.add_term(&omega, rng.random_range(0..p));
        }
    }
    y
}

fn delta_pow(y: &OmegaVector, i_set: &KSubset, times: usize) -> OmegaVector {
    let mut out = y.clone();
    for _ in 0..times {
        out = partial_coboundary(&out, i_set).expect("coboundary is total");
    }
    out
}

fn phi_pow(y: &OmegaVector, times: usize) -> OmegaVector {
    let full = KSubset::interval(y.n(), y.n()).expect("valid ground set");
    let mut out = y.clone();
    for _ in 0..times {
        if out.k() == 0 {
            return OmegaVector::zero(y.n(), 0, y.modulus()).expect("valid parameters");
        }
        out = partial_boundary(&out, &full).expect("k > 0 here");
    }
    out
}

fn splitting(params: &SuiteParams) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.n_max.clamp(4, 8);
    let mut cases = 0;
    for _ in 0..params.samples {
        let p = params.primes[rng.random_range(0..params.primes.len())];
        let split = rng.random_range(2..=n - 2);
        let left = KSubset::interval(n, split).expect("split <= n");
        let kv = rng.random_range(1..=split.min(3));
        let kw = rng.random_range(1..=(n - split).min(3));
        let v = random_homogeneous(&mut rng, n, kv, p, &left.complement(), 0);
        let w = random_homogeneous(&mut rng, n, kw, p, &left, 0);
        let prod = crate::subsets::disjoint_product(&v, &w).expect("compatible");
        let t = rng.random_range(0..=(kv + kw).min(p as usize));
        let lhs = crate::subsets::a_step_boundary(n, prod.k(), t, p)
            .expect("valid")
            .apply(prod.coeffs());
        let mut rhs = OmegaVector::zero(n, prod.k() - t, p).expect("valid");
        for i in 0..=t {
            if i > kv || t - i > kw {
                continue;
            }
            let vi = OmegaVector::from_coeffs(
                n,
                kv - i,
                p,
                crate::subsets::a_step_boundary(n, kv, i, p).expect("valid").apply(v.coeffs()),
            )
            .expect("valid");
            let wj = OmegaVector::from_coeffs(
                n,
                kw - (t - i),
                p,
                crate::subsets::a_step_boundary(n, kw, t - i, p)
                    .expect("valid")
                    .apply(w.coeffs()),
            )
            .expect("valid");
            rhs = rhs.add(&crate::subsets::disjoint_product(&vi, &wj).expect("compatible"));
        }
        cases += 1;
        if lhs.as_slice() != rhs.coeffs() {
            return (cases, Some(format!("splitting rule fails at n={n} p={p} t={t}")));
        }
    }
    (cases, None)
}

fn partition(params: &SuiteParams) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 1);
    let n = params.n_max.clamp(4, 8);
    let mut cases = 0;
    for _ in 0..params.samples {
        let p = params.primes[rng.random_range(0..params.primes.len())];
        let k = rng.random_range(1..=n - 1);
        let mask = rng.random_range(0..(1u64 << n));
        let i_set = KSubset::from_mask(n, mask).expect("valid mask");
        let x = random_vector(&mut rng, n, k, p);
        let a = partial_boundary(&x, &i_set).expect("k > 0");
        let b = partial_boundary(&x, &i_set.complement()).expect("k > 0");
        let full = boundary_matrix(n, k, p).expect("valid").apply(x.coeffs());
        cases += 1;
        if a.add(&b).coeffs() != full.as_slice() {
            return (cases, Some(format!("phi_I + phi_Ic != phi at n={n} k={k} p={p}")));
        }
        let h = rng.random_range(0..=i_set.len().min(k));
        let y = random_homogeneous(&mut rng, n, k, p, &i_set, h);
        let ya = partial_boundary(&y, &i_set).expect("k > 0");
        let yb = partial_boundary(&y, &i_set.complement()).expect("k > 0");
        if ya.support().iter().any(|omega| yb.coeff(omega) != 0) {
            return (
                cases,
                Some(format!("homogeneous image supports overlap at n={n} k={k} h={h}")),
            );
        }
    }
    (cases, None)
}

fn homogeneity(params: &SuiteParams) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 2);
    let n = params.n_max.clamp(4, 8);
    let mut cases = 0;
    for _ in 0..params.samples {
        let p = params.primes[rng.random_range(0..params.primes.len())];
        let k = rng.random_range(1..=n - 1);
        let mask = rng.random_range(1..(1u64 << n));
        let i_set = KSubset::from_mask(n, mask).expect("valid mask");
        let h = rng.random_range(1..=i_set.len().min(k));
        let y = random_homogeneous(&mut rng, n, k, p, &i_set, h);
        let a = rng.random_range(1..p as usize);
        let image = delta_pow(&y, &i_set, a);
        cases += 1;
        if h + a - 1 < i_set.len() {
            let target = h + a;
            if image
                .support()
                .iter()
                .any(|omega| omega.intersection(&i_set).len() != target)
            {
                return (
                    cases,
                    Some(format!("homogeneity propagation fails at n={n} k={k} h={h} a={a}")),
                );
            }
        } else if !image.is_zero() {
            return (
                cases,
                Some(format!("delta^a should vanish at n={n} k={k} h={h} a={a}")),
            );
        }
    }
    (cases, None)
}

fn curved(params: &SuiteParams) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 3);
    let n = params.n_max.clamp(4, 8);
    let mut cases = 0;
    for _ in 0..params.samples {
        let p = params.primes[rng.random_range(0..params.primes.len())];
        let k = rng.random_range(1..=n - 1);
        let mask = rng.random_range(0..(1u64 << n));
        let i_set = KSubset::from_mask(n, mask).expect("valid mask");
        let h = rng.random_range(0..=i_set.len().min(k));
        let y = random_homogeneous(&mut rng, n, k, p, &i_set, h);
        let lhs = partial_boundary(&partial_coboundary(&y, &i_set).expect("total"),
            &KSubset::interval(n, n).expect("valid"))
            .expect("k+1 > 0");
        let rhs1 = partial_coboundary(
            &partial_boundary(&y, &KSubset::interval(n, n).expect("valid")).expect("k > 0"),
            &i_set,
        )
        .expect("total");
        let c = (2 * h as i64 - i_set.len() as i64).rem_euclid(p as i64) as u64;
        let rhs = rhs1.sub(&y.scale(c));
        cases += 1;
        if lhs != rhs {
            return (
                cases,
                Some(format!("curved identity fails at n={n} k={k} h={h} |I|={}", i_set.len())),
            );
        }
    }
    (cases, None)
}

fn xchange(params: &SuiteParams) -> (u64, Option<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 4);
    let n = params.n_max.clamp(4, 8);
    let mut cases = 0;
    let odd: Vec<u64> = params.primes.iter().copied().filter(|&p| p != 2).collect();
    let mut attempts = 0;
    while cases < params.samples && attempts < 20 * params.samples + 20 {
        attempts += 1;
        let p = odd[rng.random_range(0..odd.len())];
        let k = rng.random_range(1..=n);
        let m = n / 2 + 1;
        // the interval [2h-1] must fit inside the ground set, which is
        // every threshold the reduction mechanism ever feeds in
        let h_cap = m.min(k).min(n.div_ceil(2));
        let h = rng.random_range(1..=h_cap);
        let y = random_threshold_vector(&mut rng, n, k, p, h);
        if y.is_zero() {
            continue;
        }
        let i_set = KSubset::interval(n, 2 * h - 1).expect("2h-1 <= n");
        let lhs = phi_pow(&delta_pow(&y, &i_set, p as usize - 1), p as usize - 1);
        // the identity carries y_[p-1-i] against phi delta^i phi^{i-1}
        let brackets = xchange_brackets(p);
        let mut rhs = y.clone();
        for i in 1..p as usize {
            let c = brackets[p as usize - 1 - i];
            let term = phi_pow(&delta_pow(&phi_pow(&y.scale(c), 1), &i_set, i), i - 1);
            rhs = rhs.add(&term);
        }
        cases += 1;
        if lhs != rhs {
            return (cases, Some(format!("exchange identity fails at n={n} k={k} h={h} p={p}")));
        }
    }
    (cases, None)
}

fn theorem_ind(params: &SuiteParams) -> (u64, Option<String>) {
    let p = 3u64;
    let mut cases = 0;
    for n in 2..=params.n_max.min(9) {
        for k in 1..=n {
            let kernel = nullspace(&boundary_matrix(n, k, p).expect("valid"));
            let image = column_space(
                &phi_power_matrix(n, (k + p as usize - 1) as isize, p as usize - 1, p)
                    .expect("valid"),
            );
            if 2 * k > n {
                // the first homology vanishes outright at high degrees
                cases += 1;
                if kernel.dim() != image.dim() {
                    return (cases, Some(format!("high-degree kernel exceeds image at n={n} k={k}")));
                }
                continue;
            }
            let basis = OmegaBasis::new(n, k).expect("valid");
            let (std_tabs, std_matrix) = standard_polytabloid_matrix(n, k, p).expect("valid");
            for i in 0..kernel.dim() {
                let mut y = kernel.basis().row(i).to_vec();
                for row in (0..std_matrix.rows()).rev() {
                    let r = basis.rank(&std_tabs[row].subset());
                    let c = y[r] % p;
                    if c != 0 {
                        let mult = p - c;
                        for (x, &b) in y.iter_mut().zip(std_matrix.row(row)) {
                            *x = (*x + mult * b) % p;
                        }
                    }
                }
                cases += 1;
                let clean = standard_subsets(n, k)
                    .iter()
                    .all(|omega| y[basis.rank(omega)] == 0);
                if !clean || !image.contains_vector(&y) {
                    return (
                        cases,
                        Some(format!("positive-threshold projection escapes the image at n={n} k={k}")),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn fourterm(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    let mut jobs: Vec<(usize, u64)> = Vec::new();
    for &p in &params.primes {
        for n in 1..=params.n_max.min(8) {
            jobs.push((n, p));
        }
    }
    if params.n_max >= 10 && params.primes.contains(&5) {
        jobs.push((10, 5));
    }
    for (n, p) in jobs {
        let report = PComplex::omega(n, p).expect("valid").full_report();
        let pu = p as usize;
        for k in 0..=n {
            for r in 1..=pu - 1 {
                let prev = if r == 1 { 0 } else { report.p_homology_dim(k, r - 1) };
                let back = if r == 1 { 0 } else { report.backslash_dim(k, pu - r) };
                cases += 1;
                if prev + report.slash_dim(k, r - 1) != report.p_homology_dim(k, r) + back {
                    return (cases, Some(format!("four-term count fails at n={n} p={p} k={k} r={r}")));
                }
            }
        }
    }
    (cases, None)
}

fn duality(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        for n in 1..=params.n_max.min(8) {
            let report = PComplex::omega(n, p).expect("valid").full_report();
            for k in 0..=n {
                for a in 0..=p as usize - 2 {
                    cases += 1;
                    if report.slash_dim(k, a) != report.backslash_dim(n - k, a) {
                        return (
                            cases,
                            Some(format!("back/slash duality fails at n={n} p={p} k={k} a={a}")),
                        );
                    }
                }
            }
        }
    }
    (cases, None)
}

fn shift(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        let pu = p as usize;
        for n in 1..=params.n_max.min(8) {
            let c = PComplex::omega(n, p).expect("valid");
            let report = c.full_report();
            for k in 0..=n {
                for a in 0..=pu - 2 {
                    let rank = c.slash_shift_rank(k as isize, a);
                    cases += 1;
                    if rank != report.slash_dim(k, a) {
                        return (
                            cases,
                            Some(format!("shift map not injective at n={n} p={p} k={k} a={a}")),
                        );
                    }
                    // isomorphism range onto the slash-0 target
                    if k >= a {
                        let tgt = k - a;
                        if in_window(n, tgt, p) && a <= n - 2 * tgt && rank != report.slash_dim(tgt, 0)
                        {
                            return (
                                cases,
                                Some(format!(
                                    "shift map misses the slash-0 target at n={n} p={p} k={k} a={a}"
                                )),
                            );
                        }
                    }
                }
            }
        }
    }
    (cases, None)
}

fn window(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    let mut primes = params.primes.clone();
    if !primes.contains(&2) {
        primes.push(2);
    }
    for &p in &primes {
        let pu = p as usize;
        for n in 1..=params.n_max {
            let report = PComplex::omega(n, p).expect("valid").full_report();
            for k in 0..=n {
                let total = report.total_slash_at(k);
                cases += 1;
                let expected_nonzero = in_window(n, k, p);
                if (total != 0) != expected_nonzero {
                    return (
                        cases,
                        Some(format!("vanishing window fails at n={n} p={p} k={k} (total {total})")),
                    );
                }
                if expected_nonzero {
                    let base = report.slash_dim(k, 0);
                    for a in 0..=n - 2 * k {
                        if report.slash_dim(k + a, a) != base {
                            return (
                                cases,
                                Some(format!("chain dims differ at n={n} p={p} k={k} a={a}")),
                            );
                        }
                    }
                }
                // individual vanishing statements feeding the window
                for a in 0..=pu - 2 {
                    let d = report.slash_dim(k, a);
                    let above_diag = 2 * k > n + 2 * a;
                    let empty_kernel_gap = a > k;
                    let deep_low = a == 0 && 2 * k + pu <= n + 1;
                    if (above_diag || empty_kernel_gap || deep_low) && d != 0 {
                        return (
                            cases,
                            Some(format!("vanishing lemma fails at n={n} p={p} k={k} a={a}")),
                        );
                    }
                    if in_window(n, k, p) && a > n - 2 * k && report.slash_dim(k + a, a) != 0 {
                        return (
                            cases,
                            Some(format!("window tail vanishing fails at n={n} p={p} k={k} a={a}")),
                        );
                    }
                }
                // dimension implication: consecutive vanishing of the top
                // classical homology pushes down the diagonal
                let mut b = 0;
                while b + 1 < pu
                    && k >= b + 1
                    && report.p_homology_dim(k - (b + 1), pu - 1) == 0
                {
                    b += 1;
                }
                for r in 1..=b {
                    if report.p_homology_dim(k - r, pu - r) != 0 {
                        return (
                            cases,
                            Some(format!("shift implication fails at n={n} p={p} k={k} r={r}")),
                        );
                    }
                }
            }
        }
    }
    (cases, None)
}

fn triple(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        if p == 2 {
            continue;
        }
        for n in 1..=params.n_max {
            let c = PComplex::omega(n, p).expect("valid");
            for k in 0..=n / 2 {
                if !in_window(n, k, p) {
                    continue;
                }
                let lin = c.slash_dim(k as isize, 0) as u64;
                let path = count_paths_formula(n, k, 1, p as usize - 1);
                let good = standard_tableaux(n, k)
                    .iter()
                    .filter(|t| is_p_standard(t, p).expect("standard"))
                    .count() as u64;
                let simple = dim_simple_erdmann(n, k, p).expect("window checked");
                cases += 1;
                if !(lin == path && path == good && good == simple) {
                    return (
                        cases,
                        Some(format!(
                            "triple agreement fails at n={n} k={k} p={p}: {lin}/{path}/{good}/{simple}"
                        )),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn james(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        for n in 1..=params.n_max.min(8) {
            for k in 0..=n / 2 {
                for level in 0..=k {
                    cases += 1;
                    if !verify_james(n, k, level, p).expect("parameters in range") {
                        return (
                            cases,
                            Some(format!("filtration identity fails at n={n} k={k} l={level} p={p}")),
                        );
                    }
                }
            }
        }
    }
    (cases, None)
}

fn euler(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    let mut primes = params.primes.clone();
    if !primes.contains(&2) {
        primes.push(2);
    }
    for &p in &primes {
        for n in 1..=params.n_max {
            let c = PComplex::omega(n, p).expect("valid");
            let lhs = euler_characteristic(&c);
            let rhs = slash_euler_from_report(&c.full_report());
            cases += 1;
            if lhs != rhs {
                return (cases, Some(format!("cyclotomic count fails at n={n} p={p}")));
            }
        }
    }
    (cases, None)
}

fn figure_expected(n: usize) -> Vec<(usize, usize, usize)> {
    match n {
        12 => {
            let mut v = Vec::new();
            for a in 0..=4 {
                v.push((4 + a, a, 221));
            }
            for a in 0..=2 {
                v.push((5 + a, a, 286));
            }
            v.push((6, 0, 131));
            v
        }
        13 => {
            let mut v = Vec::new();
            for a in 0..=5 {
                v.push((4 + a, a, 221));
            }
            for a in 0..=3 {
                v.push((5 + a, a, 507));
            }
            for a in 0..=1 {
                v.push((6 + a, a, 417));
            }
            v
        }
        _ => panic!("no golden table for n = {n}"),
    }
}

fn figure1(_params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for n in [12usize, 13] {
        let report = PComplex::omega(n, 7).expect("valid").full_report();
        let expected = figure_expected(n);
        for k in 0..=n {
            for a in 0..=5usize {
                let want = expected
                    .iter()
                    .find(|&&(ek, ea, _)| (ek, ea) == (k, a))
                    .map_or(0, |&(_, _, d)| d);
                cases += 1;
                if report.slash_dim(k, a) != want {
                    return (
                        cases,
                        Some(format!(
                            "slash table mismatch at n={n} k={k} a={a}: got {}, want {want}",
                            report.slash_dim(k, a)
                        )),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn straighten_suite(params: &SuiteParams) -> (u64, Option<String>) {
    let p = 3u64;
    let mut cases = 0;
    for n in 2..=params.n_max.min(7) {
        for k in 1..=n / 2 {
            for t in almost_standard_tableaux(n, k) {
                let direct = match straighten(n, k, p, &[(t.clone(), 1)]) {
                    Ok(d) => d,
                    Err(e) => return (cases, Some(format!("straighten error at {t:?}: {e}"))),
                };
                let e = polytabloid(&t, p).expect("valid");
                let mut solved = match standard_coordinates(&e) {
                    Ok(s) => s,
                    Err(err) => return (cases, Some(format!("solve error at {t:?}: {err}"))),
                };
                solved.sort();
                cases += 1;
                if direct != solved {
                    return (cases, Some(format!("straighten disagrees with solve at {t:?}")));
                }
            }
        }
    }
    (cases, None)
}

fn paths(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    // the enumeration-vs-formula sweep always covers the full stated range
    for n in 0..=14usize {
        for k in 0..=n {
            for t in 1..=7usize {
                cases += 1;
                let by_formula = count_paths_formula(n, k, 1, t);
                let by_walk =
                    enumerate_paths(n, k, PathBound::Finite(1), PathBound::Finite(t)).len() as u64;
                if by_formula != by_walk {
                    return (
                        cases,
                        Some(format!("path count mismatch at n={n} k={k} s=1 t={t}")),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn density_suite(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for n in 1..=params.n_max.min(12) {
        let m = n / 2 + 1;
        for k in 0..=n {
            for omega in all_subsets(n, k) {
                let d = density(&omega);
                let v = d.values();
                cases += 1;
                let mut ok = *v.last().expect("m >= 1") == k && v[0] <= 1.min(k);
                for i in 1..v.len() {
                    ok &= v[i - 1] <= v[i] && v[i] <= v[i - 1] + 2 && v[i] <= (2 * (i + 1) - 1).min(k);
                }
                let h = threshold(&omega);
                for i in h + 1..=m {
                    ok &= if 2 * k <= n { v[i - 1] < i } else { v[i - 1] > i };
                }
                if !ok {
                    return (cases, Some(format!("density bounds fail at {omega:?} in [{n}]")));
                }
            }
            let classes = threshold_classes(n, k);
            cases += 1;
            let empties_ok = if 2 * k <= n {
                (k + 1..=m).all(|h| classes[h].is_empty())
                    && classes[0].len() == standard_subsets(n, k).len()
            } else {
                classes[0].is_empty()
            };
            if !empties_ok {
                return (cases, Some(format!("threshold classes wrong at n={n} k={k}")));
            }
        }
    }
    (cases, None)
}

fn basis_suite(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        if p == 2 {
            continue;
        }
        for n in 1..=params.n_max.min(10) {
            let c = PComplex::omega(n, p).expect("valid");
            for k in 0..=n / 2 {
                if !in_window(n, k, p) {
                    continue;
                }
                let basis = match h0_basis(n, k, p) {
                    Ok(b) => b,
                    Err(e) => return (cases, Some(format!("basis error at n={n} k={k} p={p}: {e}"))),
                };
                cases += 1;
                if basis.tableaux.len() != c.slash_dim(k as isize, 0) {
                    return (
                        cases,
                        Some(format!("basis count misses the slash dim at n={n} k={k} p={p}")),
                    );
                }
            }
        }
    }
    (cases, None)
}

fn badentry(params: &SuiteParams) -> (u64, Option<String>) {
    let p = 3u64;
    let mut cases = 0;
    for n in 2..=params.n_max.min(8) {
        for k in 1..=n / 2 {
            for t in standard_tableaux(n, k) {
                for i in bad_entry_columns(&t, p) {
                    cases += 1;
                    // membership in the deep image is asserted inside
                    if crate::specht::bad_entry_relation(&t, i, p).is_err() {
                        return (cases, Some(format!("bad-entry relation fails at {t:?} col {i}")));
                    }
                }
            }
        }
    }
    (cases, None)
}

fn contracted(params: &SuiteParams) -> (u64, Option<String>) {
    let mut cases = 0;
    for &p in &params.primes {
        let pu = p as usize;
        for n in (2..=params.n_max.min(8)).step_by(2) {
            let c = PComplex::omega(n, p).expect("valid");
            for k in 0..pu.min(n + 1) {
                for a in 1..pu {
                    let dims = c.contracted_homology_dims(k, a).expect("valid");
                    for (m, d) in dims {
                        cases += 1;
                        let expected = if m % pu == k % pu {
                            c.p_homology_dim(m as isize, a)
                        } else {
                            c.p_homology_dim(m as isize, pu - a)
                        };
                        if d != expected {
                            return (
                                cases,
                                Some(format!("contracted homology wrong at n={n} p={p} k={k} a={a} m={m}")),
                            );
                        }
                    }
                }
            }
        }
    }
    (cases, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        let params = SuiteParams {
            n_max: 6,
            primes: vec![2, 3, 5],
            seed: DEFAULT_SEED,
            samples: 25,
        };
        for &name in SUITE_NAMES {
            if name == "figure1" {
                continue; // exercised by the acceptance tests
            }
            let outcome = run_suite(name, &params).unwrap();
            assert!(
                outcome.pass,
                "suite {name} failed: {:?}",
                outcome.witness
            );
            assert!(outcome.cases > 0, "suite {name} ran no cases");
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn deterministic_outcomes() {
        let params = SuiteParams {
            n_max: 5,
            primes: vec![3, 5],
            seed: 42,
            samples: 10,
        };
        let a = run_suite("xchange", &params).unwrap();
        let b = run_suite("xchange", &params).unwrap();
        assert_eq!((a.pass, a.cases), (b.pass, b.cases));
    }
}

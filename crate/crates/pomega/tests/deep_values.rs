//! Desk-scale golden values at the largest instances: quotient bases,
//! radical dimensions, induced-map ranks and contracted complexes at
//! n = 12 and 13 over GF(7).

use pomega::pcomplex::PComplex;
use pomega::specht::{direct_sum_check, h0_basis, radical_dim, specht_layer};

#[test]
fn quotient_basis_sizes_at_figure_scale() {
    assert_eq!(h0_basis(12, 6, 7).unwrap().tableaux.len(), 131);
    assert_eq!(h0_basis(13, 6, 7).unwrap().tableaux.len(), 417);
}

#[test]
fn radical_at_figure_scale() {
    // dim of the top layer is the standard-tableau count 132; the
    // quotient has dimension 131, leaving a radical line
    assert_eq!(specht_layer(12, 6, 6, 7).unwrap().dim(), 132);
    assert_eq!(radical_dim(12, 6, 7).unwrap(), 1);
    assert!(direct_sum_check(12, 6, 7).unwrap());
}

#[test]
fn induced_map_ranks_at_figure_scale() {
    let c12 = PComplex::omega(12, 7).unwrap();
    assert_eq!(c12.slash_shift_rank(7, 2), 286);
    let c13 = PComplex::omega(13, 7).unwrap();
    assert_eq!(c13.slash_shift_rank(9, 5), 221);
}

#[test]
fn contracted_complex_concentrates_at_figure_scale() {
    // in the window the single-step contraction is exact away from k
    let (n, p, k) = (12usize, 7u64, 5usize);
    let c = PComplex::omega(n, p).unwrap();
    let dims = c.contracted_homology_dims(k, 1).unwrap();
    for (m, d) in dims {
        if m == k {
            assert_eq!(d, 286, "the surviving slot carries the slash-0 dimension");
        } else {
            assert_eq!(d, 0, "contracted homology must vanish at degree {m}");
        }
    }
}

mod common;

use affine_hecke::satake::is_w_invariant;
use affine_hecke::{GroupAlgElement, LatticeElt, LaurentScalar, ScalarFraction};
use common::{Elt, Word};

fn poly(terms: &[(i32, i64)]) -> common::Poly {
    terms.iter().copied().collect()
}

/// `theta_n` from the oracle, choosing the smallest valid `m`.
fn oracle_theta(n: i64) -> Elt {
    common::theta(n, (-n).max(0))
}

#[test]
fn products_agree_with_engine() {
    let h = common::a1_engine();
    let rd = h.root_datum();
    for a in Word::up_to(5) {
        for b in Word::up_to(5) {
            let o = common::mul(&common::basis(a), &common::basis(b));
            let e = h.im_mul(&h.im_basis(common::to_ext(rd, a)), &h.im_basis(common::to_ext(rd, b))).unwrap();
            assert_eq!(common::to_engine(rd, &o), e, "{a:?} {b:?}");
        }
    }
}

#[test]
fn word_lengths_match_length_formula() {
    let h = common::a1_engine();
    let rd = h.root_datum();
    let table = common::words_by_ext(rd, 9);
    assert_eq!(table.len(), 19);
    for (g, w) in &table {
        assert_eq!(rd.ext_length(g), w.len as usize);
    }
}

#[test]
fn theta_agrees_with_engine_for_every_decomposition() {
    let h = common::a1_engine();
    let rd = h.root_datum();
    for n in -4..=4 {
        let engine = h.theta_im(&LatticeElt::from_slice(&[n])).unwrap();
        for m in (-n).max(0)..(-n).max(0) + 3 {
            assert_eq!(common::to_engine(rd, &common::theta(n, m)), *engine, "n={n} m={m}");
        }
    }
}

#[test]
fn cross_relation_sign_in_rank_one() {
    // T_s theta_1 - theta_{-1} T_s against (theta_1 + theta_0) in the oracle.
    let s1 = common::basis(Word { first: 1, len: 1 });
    let lhs = {
        let mut a = common::mul(&s1, &oracle_theta(1));
        for (w, c) in common::mul(&oracle_theta(-1), &s1) {
            common::add_term(&mut a, w, &c, -1);
        }
        a
    };
    let mut quotient = oracle_theta(1);
    for (w, c) in oracle_theta(0) {
        common::add_term(&mut quotient, w, &c, 1);
    }
    let scaled = |p: &common::Poly| -> Elt {
        let mut out = Elt::new();
        for (w, c) in &quotient {
            common::add_term(&mut out, *w, &common::poly_mul(c, p), 1);
        }
        out
    };
    assert_eq!(lhs, scaled(&poly(&[(2, 1), (0, -1)])));
    assert_ne!(lhs, scaled(&poly(&[(0, 1), (2, -1)])));
}

#[test]
fn spherical_indicator_and_satake_fixture() {
    let h = common::a1_engine();
    let rd = h.root_datum();

    // K t_1 K as alternating words: everything with translation part +-1.
    let mut c = Elt::new();
    for (g, w) in common::words_by_ext(rd, 6) {
        if g.x.coords()[0].abs() == 1 {
            common::add_term(&mut c, w, &poly(&[(0, 1)]), 1);
        }
    }
    assert_eq!(c.len(), 4);
    let lambda = LatticeElt::from_slice(&[1]);
    let engine_c = h.spherical_indicator(&lambda).unwrap();
    assert_eq!(common::to_engine(rd, &c), engine_c);

    // Rebuild the Bernstein expansion inside the oracle.
    let bern = h.from_im(&engine_c).unwrap();
    let mut rebuilt = Elt::new();
    for (k, coeff) in bern.iter() {
        let fin = if k.w.is_identity() { Word::ONE } else { Word { first: 1, len: 1 } };
        let term = common::mul(&oracle_theta(k.x.coords()[0]), &common::basis(fin));
        let cp: common::Poly = coeff.terms().map(|(e, n)| (e, i64::try_from(n.clone()).unwrap())).collect();
        for (w, d) in term {
            common::add_term(&mut rebuilt, w, &common::poly_mul(&d, &cp), 1);
        }
    }
    assert_eq!(rebuilt, c);

    let sat = h.sat_transform(&bern);
    assert!(is_w_invariant(rd, &sat));
    let f = |t: &[(i32, i64)]| ScalarFraction::from(LaurentScalar::from_terms(t.iter().copied()));
    let point = |n: i64| GroupAlgElement::basis(LatticeElt::from_slice(&[n]));
    let expected = point(1)
        .scale(&f(&[(2, 1), (4, 1)]))
        .add(&point(0).scale(&f(&[(0, -1), (4, 1)])))
        .add(&point(-1).scale(&f(&[(2, 1), (4, 1)])));
    assert_eq!(sat, expected);
}

//! The cross relation between T_s and theta_x, checked in both models.

use affine_hecke::{AffineHecke, LatticeElt, LaurentScalar, RootDatum};

fn main() {
    let h = AffineHecke::new(RootDatum::build("B2".parse().unwrap(), "sc".parse().unwrap()).unwrap()).with_budget(200);
    let rd = h.root_datum();
    let x = LatticeElt::from_slice(&[2, -1]);
    let qm1 = &LaurentScalar::q() - &LaurentScalar::one();
    for i in 0..rd.rank() {
        let sx = rd.act(rd.simple_reflection(i), &x);
        let lhs = h.bern_mul(&h.bern_simple(i), &h.bern_theta(&x)).unwrap();
        println!("T_s{} theta_{x:?} = {lhs:?}", i + 1);

        let ts = h.im_simple(i + 1);
        let im_lhs = h
            .im_mul(&ts, &h.theta_im(&x).unwrap())
            .unwrap()
            .sub(&h.im_mul(&h.theta_im(&sx).unwrap(), &ts).unwrap());
        let im_rhs = h.to_im(&h.geometric_quotient(&x, i)).unwrap().scale(&qm1);
        println!("  holds in the T-basis model: {}", im_lhs == im_rhs);
    }
}

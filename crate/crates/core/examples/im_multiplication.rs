//! Products in the T-basis: the quadratic relation, length additivity and
//! inverses.

use affine_hecke::{AffineHecke, LatticeElt, RootDatum};

fn main() {
    let h = AffineHecke::new(RootDatum::build("A1".parse().unwrap(), "sc".parse().unwrap()).unwrap());
    let s1 = h.im_simple(1);
    let s0 = h.im_simple(0);
    println!("T_s1 T_s1 = {:?}", h.im_mul(&s1, &s1).unwrap());
    println!("T_s0 T_s1 = {:?}", h.im_mul(&s0, &s1).unwrap());
    let t = h.im_translation(&LatticeElt::from_slice(&[1]));
    println!("T_t1 T_t1 = {:?}", h.im_mul(&t, &t).unwrap());
    let a = h.root_datum().affine_simple(0);
    println!("T_s0^-1 = {:?}", h.im_inverse_basis(&a).unwrap());
    println!("theta_-1 = {:?}", h.theta_im(&LatticeElt::from_slice(&[-1])).unwrap());
}

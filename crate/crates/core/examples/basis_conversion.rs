//! Moving between the T-basis and the Bernstein basis.

use affine_hecke::{AffineHecke, BernElement, BernKey, ExtAffElt, LatticeElt, RootDatum};

fn main() {
    let h = AffineHecke::new(RootDatum::build("A2".parse().unwrap(), "sc".parse().unwrap()).unwrap()).with_budget(200);
    let rd = h.root_datum();
    let a = ExtAffElt::new(LatticeElt::from_slice(&[-1, 1]), rd.simple_reflection(1));
    let b = h.from_im(&h.im_basis(a.clone())).unwrap();
    println!("T_{a:?} = {b:?}");
    println!("back: {:?}", h.to_im(&b).unwrap());

    let f = BernElement::basis(BernKey::new(LatticeElt::from_slice(&[1, -1]), rd.longest_element()));
    let g = h.to_im(&f).unwrap();
    println!("theta T_w0 has {} T-basis terms", g.len());
    println!("round trip exact: {}", h.from_im(&g).unwrap() == f);
}

//! Satake images of spherical indicators and of theta_x 1_K.

use affine_hecke::satake::is_w_invariant;
use affine_hecke::{AffineHecke, LatticeElt, RootDatum};

fn main() {
    let h = AffineHecke::new(RootDatum::build("A2".parse().unwrap(), "sc".parse().unwrap()).unwrap()).with_budget(200);
    let rd = h.root_datum();
    println!("[K:I] = {}", h.poincare());
    let lambda = LatticeElt::from_slice(&[1, 1]);
    let s = h.satake_spherical(&lambda).unwrap();
    println!("S(1_K t K) for {lambda:?}:");
    for (x, c) in s.sorted_terms() {
        println!("  {x:?}: {c}");
    }
    println!("W-invariant: {}", is_w_invariant(rd, &s));

    let x = LatticeElt::from_slice(&[2, -1]);
    println!("S(theta_x 1_K) = {:?}", h.sat_transform_fraction(&h.theta_spherical(&x).unwrap()));
}

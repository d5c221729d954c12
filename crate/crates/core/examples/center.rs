//! Orbit sums of thetas are central, the center map, a centralizer probe,
//! and a dimension count of the center on a box.

use affine_hecke::satake::group_orbit_sum;
use affine_hecke::{AffineHecke, BernKey, LatticeElt, RootDatum};
use num_rational::BigRational;

fn main() {
    let h = AffineHecke::new(RootDatum::build("A2".parse().unwrap(), "ad".parse().unwrap()).unwrap()).with_budget(200);
    let rd = h.root_datum();
    let x = LatticeElt::from_slice(&[1, 0]);
    let z = h.orbit_sum(&x);
    println!("orbit sum {z:?}");
    println!("central: {}", h.is_central(&z).unwrap());
    let img = h.sat_transform_fraction(&h.center_map(&z).unwrap());
    println!("S(Z(z)) is the orbit sum of [x]: {}", img == group_orbit_sum(rd, &x));

    let mut f = h.bern_theta(&x);
    f.add_term(BernKey::new(x.clone(), rd.simple_reflection(0)), 1.into());
    match h.centralizer_probe(&f, 4).unwrap() {
        Some(w) => println!("{f:?} fails to commute with {:?}", w.generator),
        None => println!("{f:?} commutes with the probes"),
    }

    let rep = h.center_exhaustion(2, &BigRational::from_integer(2.into())).unwrap();
    println!("{rep:?}, center spanned by orbit sums: {}", rep.holds());
}

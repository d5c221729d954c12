//! Cartan matrices, positive roots and dominant decompositions.

use affine_hecke::{LatticeElt, RootDatum};

fn main() {
    for (ty, lat) in [("A2", "sc"), ("B2", "ad"), ("G2", "sc"), ("A2", "gl")] {
        let rd = RootDatum::build(ty.parse().unwrap(), lat.parse().unwrap()).unwrap();
        println!("{} ({lat}): |W| = {}, lattice rank {}", rd.label(), rd.weyl_order(), rd.dim());
        println!("  cartan matrix {:?}", rd.cartan_matrix());
        println!("  positive coroots {:?}", rd.positive_coroots());
        let x = LatticeElt::from_slice(&vec![-1; rd.dim()]);
        let (y, z) = rd.dominant_decomposition(&x);
        println!("  {x:?} = {y:?} - {z:?}, dominant in orbit {:?}", rd.dominant_in_orbit(&x));
    }
}

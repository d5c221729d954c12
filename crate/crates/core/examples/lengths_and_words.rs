//! Lengths and reduced words in the extended affine Weyl group.

use affine_hecke::{ExtAffElt, LatticeElt, RootDatum};

fn main() {
    let rd = RootDatum::build("A2".parse().unwrap(), "ad".parse().unwrap()).unwrap();
    for c in [[0, 0], [1, 0], [1, 1], [-2, 1]] {
        for w in [rd.simple_reflection(0), rd.longest_element()] {
            let a = ExtAffElt::new(LatticeElt::from_slice(&c), w);
            let word = rd.reduced_word(&a).unwrap();
            println!("{a:?}: length {}, word {:?} * {:?}", rd.ext_length(&a), word.indices, word.omega);
        }
    }
    let x = LatticeElt::from_slice(&[2, 1]);
    println!("dominant {x:?}: l = {}, rho(x) = {}", rd.ext_length(&ExtAffElt::translation(x.clone())), rd.rho_pairing(&x));
}

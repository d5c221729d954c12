//! Acceptance criteria, one line each. Every comparison is exact; the only
//! tolerances are the wall-clock limits below.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use affine_hecke::checks::random_bern;
use affine_hecke::heckebern::{box_points, cube};
use affine_hecke::linalg::specialized_rank;
use affine_hecke::satake::{group_mul, group_orbit_sum, is_w_invariant};
use affine_hecke::{
    AffineHecke, BernElement, BernKey, ExtAffElt, Generator, GroupAlgElement, LatticeElt, LaurentScalar, RootDatum
};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Exact equality everywhere: coefficient tolerance is zero.
const COEFFICIENT_TOLERANCE: i64 = 0;
const LIMIT_CROSS: Duration = Duration::from_secs(120);
const LIMIT_SATAKE_HOM: Duration = Duration::from_secs(60);
const LIMIT_CENTER: Duration = Duration::from_secs(300);
const BUDGET: usize = 400;

type Verdict = Result<String, String>;

fn alg(ty: &str, lat: &str) -> AffineHecke {
    let rd = RootDatum::build(ty.parse().unwrap(), lat.parse().unwrap()).unwrap();
    AffineHecke::new(rd).with_budget(BUDGET)
}

fn q_minus_one() -> LaurentScalar {
    &LaurentScalar::q() - &LaurentScalar::one()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t <= limit {
        Ok(t)
    } else {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    }
}

const CROSS_GRID: [(&str, &str); 6] = [("A1", "sc"), ("A1", "ad"), ("A2", "sc"), ("A2", "ad"), ("B2", "sc"), ("B2", "ad")];

fn c1_bernstein_relation() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    for (ty, lat) in CROSS_GRID {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        for x in cube(rd.dim(), 3) {
            for i in 0..rd.rank() {
                let sx = rd.act(rd.simple_reflection(i), &x);
                let ts = h.im_simple(i + 1);
                let th = h.theta_im(&x).map_err(|e| e.to_string())?;
                let ths = h.theta_im(&sx).map_err(|e| e.to_string())?;
                let lhs = h.im_mul(&ts, &th).unwrap().sub(&h.im_mul(&ths, &ts).unwrap());
                let rhs = h.to_im(&h.geometric_quotient(&x, i)).unwrap().scale(&q_minus_one());
                if lhs != rhs {
                    return Err(format!("{ty} {lat} x={:?} i={}", x.coords(), i + 1));
                }
                checked += 1;
            }
        }
    }
    let t = within(start, LIMIT_CROSS)?;
    Ok(format!("{checked} (x, s) pairs over A1/A2/B2 sc+ad, x in [-3,3]^d, in {t:.1?}"))
}

fn c2_central_pairs() -> Verdict {
    let mut checked = 0;
    for (ty, lat) in CROSS_GRID {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        for x in cube(rd.dim(), 3) {
            for i in 0..rd.rank() {
                let sx = rd.act(rd.simple_reflection(i), &x);
                let pair = h.bern_theta(&x).add(&h.bern_theta(&sx));
                let ts = h.bern_simple(i);
                if !h.commutator(&ts, &pair).unwrap().is_zero() {
                    return Err(format!("Bernstein model: {ty} {lat} x={:?} i={}", x.coords(), i + 1));
                }
                let pim = h.theta_im(&x).unwrap().add(&*h.theta_im(&sx).unwrap());
                let tsi = h.im_simple(i + 1);
                if h.im_mul(&tsi, &pim).unwrap() != h.im_mul(&pim, &tsi).unwrap() {
                    return Err(format!("IM model: {ty} {lat} x={:?} i={}", x.coords(), i + 1));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} commutators zero in both models"))
}

/// The square block of the `to_im` matrix on the columns `T_(x,w)` has unit
/// diagonal and an acyclic off-diagonal pattern, so its determinant is a unit
/// of the Laurent ring.
fn unitriangular_block(keys: &[BernKey], images: &[affine_hecke::ImElement]) -> Result<(), String> {
    let col: std::collections::BTreeMap<ExtAffElt, usize> =
        keys.iter().enumerate().map(|(n, k)| (ExtAffElt::new(k.x.clone(), k.w), n)).collect();
    let mut indeg = vec![0usize; keys.len()];
    let mut edges = vec![Vec::new(); keys.len()];
    for (n, img) in images.iter().enumerate() {
        for (a, c) in img.iter() {
            match col.get(a) {
                Some(&m) if m == n => {
                    if c.as_unit().is_none() {
                        return Err(format!("diagonal entry at {:?} is {c:?}", keys[n]));
                    }
                }
                Some(&m) => {
                    edges[n].push(m);
                    indeg[m] += 1;
                }
                None => {}
            }
        }
        if img.coeff(&ExtAffElt::new(keys[n].x.clone(), keys[n].w)).is_none() {
            return Err(format!("diagonal entry at {:?} is zero", keys[n]));
        }
    }
    let mut ready: Vec<usize> = (0..keys.len()).filter(|&n| indeg[n] == 0).collect();
    let mut done = 0;
    while let Some(n) = ready.pop() {
        done += 1;
        for &m in &edges[n] {
            indeg[m] -= 1;
            if indeg[m] == 0 {
                ready.push(m);
            }
        }
    }
    if done == keys.len() {
        Ok(())
    } else {
        Err(format!("off-diagonal pattern has a cycle through {} keys", keys.len() - done))
    }
}

fn c3_bernstein_basis() -> Verdict {
    let mut report = Vec::new();
    for (ty, lat) in [("A1", "sc"), ("A2", "sc"), ("B2", "sc")] {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        let keys: Vec<BernKey> = cube(rd.dim(), 2)
            .into_iter()
            .flat_map(|x| rd.weyl_elements().map(move |w| BernKey::new(x.clone(), w)))
            .collect();
        let images: Vec<_> = keys.iter().map(|k| h.to_im(&BernElement::basis(k.clone())).unwrap()).collect();
        for q0 in [2, 3] {
            let r = specialized_rank(&images, &BigRational::from_integer(q0.into())).map_err(|e| e.to_string())?;
            if r != keys.len() {
                return Err(format!("{ty}: rank {r} of {} at q = {q0}", keys.len()));
            }
        }
        unitriangular_block(&keys, &images).map_err(|e| format!("{ty}: {e}"))?;
        for (k, img) in keys.iter().zip(&images) {
            if h.from_im(img).map_err(|e| e.to_string())? != BernElement::basis(k.clone()) {
                return Err(format!("{ty}: round trip failed at {k:?}"));
            }
        }
        report.push(format!("{ty} {}", keys.len()));
    }
    Ok(format!("full rank at q = 2, 3, unitriangular block, round trip exact ({})", report.join(", ")))
}

fn c4_theta_well_defined() -> Verdict {
    let mut rng = StdRng::seed_from_u64(4);
    let mut checked = 0;
    for (ty, lat) in [("A1", "sc"), ("A2", "sc"), ("B2", "ad"), ("G2", "sc")] {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        let d0 = rd.regular_dominant().clone();
        let dom: Vec<LatticeElt> =
            box_points(&vec![0; rd.dim()], &vec![2; rd.dim()]).into_iter().filter(|x| rd.is_dominant(x)).collect();
        for _ in 0..20 {
            let x = LatticeElt::from_slice(&(0..rd.dim()).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
            let (y, z) = rd.dominant_decomposition(&x);
            let e = &dom[rng.gen_range(1..dom.len())];
            let decomps = [(y.clone(), z.clone()), (&y + &d0, &z + &d0), (&y + e, &z + e)];
            let base = h.theta_im(&x).unwrap();
            for (a, b) in &decomps {
                if h.theta_im_from(a, b).unwrap() != *base {
                    return Err(format!("{ty}: x={:?} differs for y={:?}, z={:?}", x.coords(), a.coords(), b.coords()));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} points, 3 decompositions each"))
}

fn c5_length_law() -> Verdict {
    let mut pairs = 0;
    for (ty, lat) in [("A1", "sc"), ("A2", "sc"), ("B2", "sc"), ("G2", "ad")] {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        let dom: Vec<LatticeElt> =
            box_points(&vec![0; rd.dim()], &vec![3; rd.dim()]).into_iter().filter(|x| rd.is_dominant(x)).collect();
        for x in &dom {
            if rd.ext_length(&ExtAffElt::translation(x.clone())) as i64 != rd.rho_pairing(x) {
                return Err(format!("{ty}: l(x) != rho(x) at {:?}", x.coords()));
            }
            for y in &dom {
                let p = h.im_mul(&h.im_translation(x), &h.im_translation(y)).unwrap();
                if p != h.im_translation(&(x + y)) {
                    return Err(format!("{ty}: T_x T_y != T_x+y at {:?}, {:?}", x.coords(), y.coords()));
                }
            }
        }
        let grid: Vec<ExtAffElt> =
            cube(rd.dim(), 1).into_iter().flat_map(|x| rd.weyl_elements().map(move |w| ExtAffElt::new(x.clone(), w))).collect();
        for a in &grid {
            for b in &grid {
                let ab = rd.ext_mul(a, b);
                let adds = rd.ext_length(a) + rd.ext_length(b) == rd.ext_length(&ab);
                let collapses = h.im_mul(&h.im_basis(a.clone()), &h.im_basis(b.clone())).unwrap() == h.im_basis(ab);
                if adds != collapses {
                    return Err(format!("{ty}: lengths add = {adds} but product collapses = {collapses} at {a:?} {b:?}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("rho law and dominant products on [0,3]^d, iff law on {pairs} pairs"))
}

fn c6_rank_one_oracle() -> Verdict {
    let h = common::a1_engine();
    let rd = h.root_datum();
    let words = common::Word::up_to(5);
    for &a in &words {
        if rd.ext_length(&common::to_ext(rd, a)) != a.len as usize {
            return Err(format!("length mismatch at {a:?}"));
        }
    }
    let mut n = 0;
    for &a in &words {
        for &b in &words {
            let o = common::mul(&common::basis(a), &common::basis(b));
            let e = h.im_mul(&h.im_basis(common::to_ext(rd, a)), &h.im_basis(common::to_ext(rd, b))).unwrap();
            if common::to_engine(rd, &o) != e {
                return Err(format!("product differs at {a:?} * {b:?}"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} products of basis elements with length <= 5 agree"))
}

const ALL_TYPES: [(&str, &str); 10] = [
    ("A1", "sc"),
    ("A1", "ad"),
    ("A2", "sc"),
    ("A2", "ad"),
    ("B2", "sc"),
    ("B2", "ad"),
    ("C2", "sc"),
    ("C2", "ad"),
    ("G2", "sc"),
    ("A3", "gl"),
];

fn c7_spherical_thetas() -> Verdict {
    let mut n = 0;
    for (ty, lat) in ALL_TYPES {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        let r = if rd.dim() > 2 { 1 } else { 2 };
        for x in cube(rd.dim(), r) {
            let img = h.sat_transform_fraction(&h.theta_spherical(&x).unwrap());
            if img != GroupAlgElement::basis(x.clone()) {
                return Err(format!("{ty} {lat}: S(theta_x 1_K) != [x] at {:?}", x.coords()));
            }
            n += 1;
        }
    }
    Ok(format!("S(theta_x 1_K) = [x] at {n} points (A3 gl on [-1,1]^4, rank 2 and below on [-2,2]^d)"))
}

fn sat_of_product(h: &AffineHecke, l: &LatticeElt, m: &LatticeElt) -> Result<(GroupAlgElement, GroupAlgElement), String> {
    let cl = h.spherical_indicator(l).map_err(|e| e.to_string())?;
    let cm = h.spherical_indicator(m).map_err(|e| e.to_string())?;
    let prod = h.im_mul(&cl, &cm).map_err(|e| e.to_string())?;
    let lhs = h.sat_transform(&h.from_im(&prod).map_err(|e| e.to_string())?);
    let sl = h.satake_spherical(l).map_err(|e| e.to_string())?;
    let sm = h.satake_spherical(m).map_err(|e| e.to_string())?;
    for (s, lam) in [(&sl, l), (&sm, m)] {
        if !is_w_invariant(h.root_datum(), s) {
            return Err(format!("S(c_lambda) not W-invariant at {:?}", lam.coords()));
        }
    }
    Ok((lhs, group_mul(&sl, &sm)))
}

fn c8_satake_homomorphism() -> Verdict {
    let start = Instant::now();
    let v = |c: &[i64]| LatticeElt::from_slice(c);
    let mut cases = Vec::new();
    let a1 = alg("A1", "sc");
    for l in [v(&[1]), v(&[2])] {
        for m in [v(&[1]), v(&[2])] {
            cases.push((&a1, l.clone(), m));
        }
    }
    let a2 = alg("A2", "sc");
    cases.push((&a2, v(&[1, 1]), v(&[1, 1])));
    for (h, l, m) in &cases {
        let (lhs, rhs) = sat_of_product(h, l, m)?;
        if lhs != rhs {
            return Err(format!("{}: S(c_l c_m) != S(c_l) S(c_m) at {:?}, {:?}", h.root_datum().label(), l.coords(), m.coords()));
        }
    }
    let t = within(start, LIMIT_SATAKE_HOM)?;
    Ok(format!("{} products, images W-invariant, in {t:.1?}", cases.len()))
}

fn c9_center() -> Verdict {
    let start = Instant::now();
    let mut orbits = 0;
    for (ty, lat) in [("A1", "sc"), ("A1", "ad"), ("A2", "sc"), ("A2", "ad"), ("B2", "sc"), ("G2", "sc")] {
        let h = alg(ty, lat);
        let rd = h.root_datum();
        let reps: BTreeSet<LatticeElt> = cube(rd.dim(), 2).iter().map(|x| rd.dominant_in_orbit(x)).collect();
        for d in reps.iter().filter(|d| rd.orbit(d).iter().all(|p| p.coords().iter().all(|c| c.abs() <= 2))) {
            let z = h.orbit_sum(d);
            if let Some(w) = h.central_witness(&z).unwrap() {
                return Err(format!("{ty} {lat}: orbit sum of {:?} fails to commute with {:?}", d.coords(), w.generator));
            }
            let img = h.sat_transform_fraction(&h.center_map(&z).unwrap());
            if img != group_orbit_sum(rd, d) {
                return Err(format!("{ty} {lat}: S(Z(orbit sum)) != sum [w x] at {:?}", d.coords()));
            }
            orbits += 1;
        }
    }
    let mut exhaust = Vec::new();
    for (ty, lat) in [("A1", "sc"), ("A2", "sc")] {
        let h = alg(ty, lat);
        for q0 in [2, 3] {
            let rep = h.center_exhaustion(2, &BigRational::from_integer(q0.into())).unwrap();
            if !rep.holds() {
                return Err(format!("{ty} q={q0}: {rep:?}"));
            }
            exhaust.push(format!("{ty} q={q0}: {}/{}", rep.central_dimension, rep.candidates));
        }
    }
    let t = within(start, LIMIT_CENTER)?;
    Ok(format!("{orbits} orbit sums central with S(Z(.)) exact; exhaustion {} ; {t:.1?}", exhaust.join(", ")))
}

fn random_with_finite_part(h: &AffineHecke, rng: &mut StdRng) -> BernElement {
    let rd = h.root_datum();
    loop {
        let mut f = random_bern(h, rng, 3, 2);
        if f.keys().any(|k| !k.w.is_identity()) {
            return f;
        }
        let w = rd.simple_reflection(rng.gen_range(0..rd.rank()));
        f.add_term(BernKey::new(LatticeElt::zero(rd.dim()), w), LaurentScalar::one());
        if f.keys().any(|k| !k.w.is_identity()) {
            return f;
        }
    }
}

fn c10_centralizer_probe() -> Verdict {
    let mut rng = StdRng::seed_from_u64(10);
    let algs = [alg("A1", "sc"), alg("A2", "sc"), alg("B2", "ad")];
    for n in 0..50 {
        let h = &algs[n % algs.len()];
        let f = random_with_finite_part(h, &mut rng);
        let w = match h.centralizer_probe(&f, 4) {
            Ok(Some(w)) => w,
            Ok(None) => return Err(format!("probe accepted {f:?}")),
            Err(e) => return Err(format!("{e} for {f:?}")),
        };
        let Generator::Theta(y) = &w.generator else { return Err("witness is not a theta".into()) };
        let ty = h.to_im(&h.bern_theta(y)).unwrap();
        let fi = h.to_im(&f).unwrap();
        if h.im_mul(&ty, &fi).unwrap() == h.im_mul(&fi, &ty).unwrap() {
            return Err(format!("witness y = {:?} commutes with f in the IM model", y.coords()));
        }
    }
    for n in 0..50 {
        let h = &algs[n % algs.len()];
        let rd = h.root_datum();
        let mut f = BernElement::zero();
        for _ in 0..3 {
            let x = LatticeElt::from_slice(&(0..rd.dim()).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
            f.add_term(BernKey::theta(x), LaurentScalar::monomial(rng.gen_range(-2..=2), rng.gen_range(1..=5)));
        }
        if !matches!(h.centralizer_probe(&f, 4), Ok(None)) {
            return Err(format!("probe rejected an element of A: {f:?}"));
        }
    }
    Ok("50 elements outside A separated with IM-verified witnesses; 50 elements of A accepted".into())
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("1 Bernstein relation in the IM model", c1_bernstein_relation),
        ("2 T_s commutes with theta_x + theta_s(x)", c2_central_pairs),
        ("3 Bernstein basis", c3_bernstein_basis),
        ("4 theta independent of decomposition", c4_theta_well_defined),
        ("5 length law", c5_length_law),
        ("6 rank-1 oracle", c6_rank_one_oracle),
        ("7 S(theta_x 1_K) = [x]", c7_spherical_thetas),
        ("8 Satake homomorphism and invariance", c8_satake_homomorphism),
        ("9 center", c9_center),
        ("10 centralizer probe", c10_centralizer_probe),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match out {
            Ok(msg) => println!("criterion {name}: PASS ({msg}) [{:.1?}]", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({msg}) [{:.1?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed; coefficient tolerance {COEFFICIENT_TOLERANCE} (exact)", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

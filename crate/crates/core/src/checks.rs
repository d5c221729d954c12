//! Property suites over a single algebra, shared by the `hecke check` command
//! and the test harness. Each suite stops at the first counterexample.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::coeffring::LaurentScalar;
use crate::error::{Error, Result};
use crate::extweyl::ExtAffElt;
use crate::heckebern::{box_points, cube, BernElement, BernKey};
use crate::heckeim::{AffineHecke, ImElement};
use crate::json::{bern_to_json, group_alg_to_json, im_to_json};
use crate::satake::{group_orbit_sum, is_w_invariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lengths,
    Im,
    Bern,
    Cross,
    Satake,
    Center,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Lengths, Suite::Im, Suite::Bern, Suite::Cross, Suite::Satake, Suite::Center];

    pub fn label(self) -> &'static str {
        match self {
            Suite::Lengths => "lengths",
            Suite::Im => "im",
            Suite::Bern => "bern",
            Suite::Cross => "cross",
            Suite::Satake => "satake",
            Suite::Center => "center",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lengths" => Suite::Lengths,
            "im" => Suite::Im,
            "bern" => Suite::Bern,
            "cross" => Suite::Cross,
            "satake" => Suite::Satake,
            "center" => Suite::Center,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// The first property violation found, with a serialized witness.
#[derive(Clone, Debug)]
pub struct Violation {
    pub suite: &'static str,
    pub property: String,
    pub witness: Value,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.suite, self.property, self.witness)
    }
}

/// Settings for [`run_suite`].
#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Half-width of the coordinate box for grid properties.
    pub radius: i64,
    /// Specialization used by the center exhaustion check.
    pub q0: BigRational,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { radius: 2, q0: BigRational::from_integer(2.into()), samples: 40, seed: 7 }
    }
}

type Outcome = Result<std::result::Result<(), Violation>>;

struct Ctx<'a> {
    h: &'a AffineHecke,
    opts: &'a CheckOptions,
    suite: &'static str,
}

impl Ctx<'_> {
    fn fail(&self, property: impl Into<String>, witness: Value) -> Outcome {
        Ok(Err(Violation { suite: self.suite, property: property.into(), witness }))
    }

    fn im_json(&self, f: &ImElement) -> Value {
        im_to_json(self.h.root_datum(), f)
    }

    fn bern_json(&self, f: &BernElement) -> Value {
        bern_to_json(self.h.root_datum(), f)
    }
}

macro_rules! ensure {
    ($ctx:expr, $cond:expr, $prop:expr, $wit:expr) => {
        if !$cond {
            return $ctx.fail($prop, $wit);
        }
    };
}

/// Runs one suite (or all of them in order).
pub fn run_suite(h: &AffineHecke, suite: Suite, opts: &CheckOptions) -> Outcome {
    if suite == Suite::All {
        for s in Suite::EACH {
            if let Err(v) = run_suite(h, s, opts)? {
                return Ok(Err(v));
            }
        }
        return Ok(Ok(()));
    }
    let ctx = Ctx { h, opts, suite: suite.label() };
    match suite {
        Suite::Lengths => lengths(&ctx),
        Suite::Im => im(&ctx),
        Suite::Bern => bern(&ctx),
        Suite::Cross => cross(&ctx),
        Suite::Satake => satake(&ctx),
        Suite::Center => center(&ctx),
        Suite::All => unreachable!(),
    }
}

/// Random extended affine Weyl group elements of length at most `max_len`.
pub fn random_ext_elements(h: &AffineHecke, rng: &mut StdRng, count: usize, max_len: usize) -> Vec<ExtAffElt> {
    let rd = h.root_datum();
    let pts = cube(rd.dim(), 2);
    let ws: Vec<_> = rd.weyl_elements().collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = ExtAffElt::new(pts[rng.gen_range(0..pts.len())].clone(), ws[rng.gen_range(0..ws.len())]);
        if rd.ext_length(&a) <= max_len {
            out.push(a);
        }
    }
    out
}

/// A random Bernstein element with up to `terms` terms, `x` in `[-r, r]^d`.
pub fn random_bern(h: &AffineHecke, rng: &mut StdRng, terms: usize, r: i64) -> BernElement {
    let rd = h.root_datum();
    let ws: Vec<_> = rd.weyl_elements().collect();
    let mut out = BernElement::zero();
    for _ in 0..terms {
        let x: Vec<i64> = (0..rd.dim()).map(|_| rng.gen_range(-r..=r)).collect();
        let w = ws[rng.gen_range(0..ws.len())];
        let c = LaurentScalar::monomial(rng.gen_range(-2..=2), rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
        out.add_term(BernKey::new(crate::rootdata::LatticeElt::from_slice(&x), w), c);
    }
    out
}

fn lengths(ctx: &Ctx) -> Outcome {
    let rd = ctx.h.root_datum();
    let dom = box_points(&vec![0; rd.dim()], &vec![3; rd.dim()]);
    for x in dom.iter().filter(|x| rd.is_dominant(x)) {
        let l = rd.ext_length(&ExtAffElt::translation(x.clone()));
        ensure!(ctx, l as i64 == rd.rho_pairing(x), "l(x) = rho(x) for dominant x", json!({"x": x.coords()}));
    }
    for x in cube(rd.dim(), ctx.opts.radius) {
        for w in rd.weyl_elements() {
            let a = ExtAffElt::new(x.clone(), w);
            let l = rd.ext_length(&a);
            let word = rd.reduced_word(&a)?;
            ensure!(
                ctx,
                word.indices.len() == l && rd.reconstruct(&word) == a && rd.ext_length(&word.omega) == 0,
                "reduced word reconstructs with the right length",
                json!({"x": x.coords(), "w": rd.weyl_word(w)})
            );
            for i in 0..=rd.rank() {
                let b = rd.ext_simple_right(&a, i);
                ensure!(
                    ctx,
                    rd.ext_length(&b).abs_diff(l) == 1,
                    "l(a s_i) = l(a) +- 1",
                    json!({"x": x.coords(), "w": rd.weyl_word(w), "i": i})
                );
            }
        }
    }
    Ok(Ok(()))
}

fn im(ctx: &Ctx) -> Outcome {
    let h = ctx.h;
    let rd = h.root_datum();
    let one = ExtAffElt::identity(rd.dim());
    let qm1 = &LaurentScalar::q() - &LaurentScalar::one();
    for i in 0..=rd.rank() {
        let ts = h.im_simple(i);
        let mut expected = ts.scale(&qm1);
        expected.add_term(one.clone(), LaurentScalar::q());
        let got = h.im_mul(&ts, &ts)?;
        ensure!(ctx, got == expected, format!("T_s^2 = (q-1) T_s + q for s_{i}"), ctx.im_json(&got));
        let inv = h.im_inverse_basis(&rd.affine_simple(i))?;
        let prod = h.im_mul(&ts, &inv)?;
        ensure!(ctx, prod == h.im_one(), format!("T_s T_s^-1 = 1 for s_{i}"), ctx.im_json(&prod));
    }
    let mut rng = StdRng::seed_from_u64(ctx.opts.seed);
    let elts = random_ext_elements(h, &mut rng, 3 * ctx.opts.samples, 4);
    for t in elts.chunks(3) {
        let [a, b, c] = [h.im_basis(t[0].clone()), h.im_basis(t[1].clone()), h.im_basis(t[2].clone())];
        let l = h.im_mul(&h.im_mul(&a, &b)?, &c)?;
        let r = h.im_mul(&a, &h.im_mul(&b, &c)?)?;
        ensure!(ctx, l == r, "associativity", json!({"a": ctx.im_json(&a), "b": ctx.im_json(&b), "c": ctx.im_json(&c)}));
        let ab = rd.ext_mul(&t[0], &t[1]);
        let adds = rd.ext_length(&t[0]) + rd.ext_length(&t[1]) == rd.ext_length(&ab);
        let prod = h.im_mul(&a, &b)?;
        ensure!(
            ctx,
            adds == (prod == h.im_basis(ab)),
            "T_a T_b = T_ab exactly when lengths add",
            json!({"a": ctx.im_json(&a), "b": ctx.im_json(&b)})
        );
    }
    let pts = cube(rd.dim(), 1);
    for x in &pts {
        for y in &pts {
            let l = h.im_mul(&*h.theta_im(x)?, &*h.theta_im(y)?)?;
            ensure!(
                ctx,
                l == *h.theta_im(&(x + y))?,
                "theta_x theta_y = theta_{x+y}",
                json!({"x": x.coords(), "y": y.coords()})
            );
        }
    }
    Ok(Ok(()))
}

fn bern(ctx: &Ctx) -> Outcome {
    let h = ctx.h;
    let rd = h.root_datum();
    for x in cube(rd.dim(), ctx.opts.radius) {
        for i in 0..rd.rank() {
            let qt = h.geometric_quotient(&x, i);
            let back = qt.sub(&h.bern_theta_left(&-rd.simple_coroot(i), &qt));
            let sx = rd.act(rd.simple_reflection(i), &x);
            ensure!(
                ctx,
                back == h.bern_theta(&x).sub(&h.bern_theta(&sx)),
                "quotient times (1 - theta_-a) gives theta_x - theta_s(x)",
                json!({"x": x.coords(), "i": i + 1})
            );
        }
    }
    let mut rng = StdRng::seed_from_u64(ctx.opts.seed);
    for _ in 0..ctx.opts.samples / 2 {
        let f = random_bern(h, &mut rng, 2, 1);
        let g = random_bern(h, &mut rng, 2, 1);
        let lhs = h.to_im(&h.bern_mul(&f, &g)?)?;
        let rhs = h.im_mul(&h.to_im(&f)?, &h.to_im(&g)?)?;
        ensure!(ctx, lhs == rhs, "to_im is multiplicative", json!({"f": ctx.bern_json(&f), "g": ctx.bern_json(&g)}));
        let back = h.from_im(&h.to_im(&f)?)?;
        ensure!(ctx, back == f, "from_im(to_im(f)) = f", ctx.bern_json(&f));
    }
    Ok(Ok(()))
}

fn cross(ctx: &Ctx) -> Outcome {
    let h = ctx.h;
    let rd = h.root_datum();
    let qm1 = &LaurentScalar::q() - &LaurentScalar::one();
    for x in cube(rd.dim(), ctx.opts.radius) {
        for i in 0..rd.rank() {
            let sx = rd.act(rd.simple_reflection(i), &x);
            let ts = h.im_simple(i + 1);
            let lhs = h.im_mul(&ts, &*h.theta_im(&x)?)?.sub(&h.im_mul(&*h.theta_im(&sx)?, &ts)?);
            let rhs = h.to_im(&h.geometric_quotient(&x, i))?.scale(&qm1);
            ensure!(
                ctx,
                lhs == rhs,
                "T_s theta_x - theta_s(x) T_s = (q-1) quotient, in the IM model",
                json!({"x": x.coords(), "i": i + 1, "lhs": ctx.im_json(&lhs), "rhs": ctx.im_json(&rhs)})
            );
            let pair = h.theta_im(&x)?.add(&*h.theta_im(&sx)?);
            let c = h.im_mul(&ts, &pair)?.sub(&h.im_mul(&pair, &ts)?);
            ensure!(ctx, c.is_zero(), "T_s commutes with theta_x + theta_s(x), IM model", json!({"x": x.coords(), "i": i + 1}));
            let pair = h.bern_theta(&x).add(&h.bern_theta(&sx));
            let c = h.commutator(&h.bern_simple(i), &pair)?;
            ensure!(ctx, c.is_zero(), "T_s commutes with theta_x + theta_s(x), Bernstein model", json!({"x": x.coords(), "i": i + 1}));
        }
    }
    Ok(Ok(()))
}

fn satake(ctx: &Ctx) -> Outcome {
    let h = ctx.h;
    let rd = h.root_datum();
    let ek = h.e_k();
    let qek = ek.scale(&LaurentScalar::q());
    for i in 0..rd.rank() {
        let l = h.bern_mul(&h.bern_simple(i), &ek)?;
        let r = h.bern_mul(&ek, &h.bern_simple(i))?;
        ensure!(ctx, l == qek && r == qek, format!("T_s e_K = q e_K = e_K T_s for s_{}", i + 1), ctx.bern_json(&l));
    }
    for x in cube(rd.dim(), ctx.opts.radius) {
        let img = h.sat_transform_fraction(&h.theta_spherical(&x)?);
        ensure!(
            ctx,
            img == crate::satake::GroupAlgElement::basis(x.clone()),
            "S(theta_x 1_K) = [x]",
            json!({"x": x.coords(), "image": group_alg_to_json(&img)})
        );
    }
    for lam in box_points(&vec![0; rd.dim()], &vec![1; rd.dim()]).into_iter().filter(|x| rd.is_dominant(x)) {
        let s = h.satake_spherical(&lam)?;
        ensure!(ctx, is_w_invariant(rd, &s), "S(c_lambda) is W-invariant", json!({"lambda": lam.coords(), "image": group_alg_to_json(&s)}));
    }
    Ok(Ok(()))
}

fn center(ctx: &Ctx) -> Outcome {
    let h = ctx.h;
    let rd = h.root_datum();
    let r = ctx.opts.radius;
    let in_box = |x: &crate::rootdata::LatticeElt| x.coords().iter().all(|c| c.abs() <= r);
    let mut reps: Vec<_> = cube(rd.dim(), r).iter().map(|x| rd.dominant_in_orbit(x)).collect();
    reps.sort();
    reps.dedup();
    for d in reps.iter().filter(|d| rd.orbit(d).iter().all(in_box)) {
        let z = h.orbit_sum(d);
        if let Some(w) = h.central_witness(&z)? {
            return ctx.fail("orbit sums are central", json!({"x": d.coords(), "commutator": ctx.bern_json(&w.value)}));
        }
        let img = h.sat_transform_fraction(&h.center_map(&z)?);
        ensure!(
            ctx,
            img == group_orbit_sum(rd, d),
            "S(Z(orbit sum of x)) = sum_w [w x]",
            json!({"x": d.coords(), "image": group_alg_to_json(&img)})
        );
    }
    let rep = h.center_exhaustion(r.min(if rd.rank() <= 2 { 2 } else { 1 }), &ctx.opts.q0)?;
    ensure!(
        ctx,
        rep.holds(),
        "central elements in the box are spanned by orbit sums",
        json!({"central_dimension": rep.central_dimension, "orbit_count": rep.orbit_count, "orbit_sums_central": rep.orbit_sums_central})
    );
    Ok(Ok(()))
}

use super::cochain::{class_zero, coboundary, connecting_zeta, Cochain, Connecting};
use super::double::{as_vertical, BiCochain, DoubleComplex, Triple};
use crate::error::{Error, Result};
use crate::gaction::{borel, BorelSpace, SimplicialGAction};
use crate::sdist::Relative;
use crate::simplicial::{cofiber, face_closure, Cofiber, Nd, SSet, SimplexWord};
use serde::Serialize;
use std::sync::OnceLock;

/// A cohomology class representative with its class-zero verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub which: String,
    /// Nonzero values of the representative, by simplex name.
    pub representative: Vec<(String, u64)>,
    pub class_zero: bool,
    /// Cochain whose coboundary is the representative, when the class is zero.
    pub witness: Option<Vec<(String, u64)>>,
}

impl ObstructionReport {
    pub fn from_cochain(which: &str, x: &SSet, c: &Cochain, witness: Option<&Cochain>) -> Self {
        let named = |c: &Cochain| c.support(x).into_iter().map(|s| (x.name(s).to_string(), c.at(s))).collect();
        Self {
            which: which.to_string(),
            representative: named(c),
            class_zero: witness.is_some(),
            witness: witness.map(named),
        }
    }
}

fn relative_subspace(x: &SSet, rel: &Relative) -> Result<Vec<Nd>> {
    for &(e, _) in &rel.fixed {
        if e >= x.nd_count(1) {
            return Err(Error::InvalidSpace(format!("relative edge {e} does not exist")));
        }
    }
    let edges: Vec<Nd> = rel.fixed.iter().map(|&(e, _)| Nd::new(1, e)).collect();
    Ok(face_closure(x, &edges))
}

fn label_of(rel: &Relative, e: Nd) -> u64 {
    rel.fixed.iter().find(|&&(f, _)| f == e.idx).map_or(0, |&(_, a)| a as u64)
}

/// `γ = ζ(r)` on `X̄ = X / Y` where `Y` is spanned by the relative edges.
pub fn gamma(x: &SSet, rel: &Relative, modulus: u64) -> Result<Connecting> {
    let z = relative_subspace(x, rel)?;
    connecting_zeta(x, &z, |e| label_of(rel, e), modulus)
}

fn check_invariant(x: &SSet, action: &SimplicialGAction, rel: &Relative) -> Result<Vec<Nd>> {
    let z = relative_subspace(x, rel)?;
    if !action.is_invariant(&z) {
        return Err(Error::NotEquivariant("relative subspace is not invariant".into()));
    }
    for g in action.group().elements() {
        for &(e, a) in &rel.fixed {
            if label_of(rel, action.act_nd(g, Nd::new(1, e))) != a as u64 {
                return Err(Error::NotEquivariant("group moves the relative labels".into()));
            }
        }
    }
    Ok(z)
}

/// `γ_G` on the cofiber of `Y -> X // G`.
#[derive(Clone, Debug)]
pub struct BorelGamma {
    pub borel: BorelSpace,
    pub connecting: Connecting,
}

pub fn gamma_g(x: &SSet, action: &SimplicialGAction, rel: &Relative, modulus: u64) -> Result<BorelGamma> {
    let z = check_invariant(x, action, rel)?;
    let b = borel(action, x, x.truncation())?;
    let images: Vec<Nd> = z.iter().map(|&s| b.inclusion.image(s).base()).collect();
    let zw = face_closure(b.space(), &images);
    let connecting = connecting_zeta(
        b.space(),
        &zw,
        |e| {
            let y = b.space_part(&SimplexWord::nd(e));
            if y.is_degenerate() {
                0
            } else {
                label_of(rel, y.base())
            }
        },
        modulus,
    )?;
    Ok(BorelGamma { borel: b, connecting })
}

/// `γ̃_G` on `X̄ // G`, with the pieces needed to compare it with `γ` and `γ_G`.
#[derive(Clone, Debug)]
pub struct TildeGamma {
    pub quotient: Cofiber,
    pub action: SimplicialGAction,
    pub borel: BorelSpace,
    pub value: Cochain,
}

pub fn gamma_tilde_g(x: &SSet, action: &SimplicialGAction, rel: &Relative, modulus: u64) -> Result<TildeGamma> {
    let z = check_invariant(x, action, rel)?;
    let bx = borel(action, x, x.truncation())?;
    let in_y = |w: &SimplexWord| !w.is_degenerate() && z.contains(&w.base());
    // π̃: the NA-coordinate on edges of Y // G, zero elsewhere.
    let pi = Cochain::from_fn(bx.space(), 1, modulus, |e| {
        let y = bx.space_part(&SimplexWord::nd(e));
        if in_y(&y) {
            label_of(rel, y.base())
        } else {
            0
        }
    });
    let dpi = coboundary(bx.space(), &pi)?;
    let quotient = cofiber(x, &z)?;
    let qaction = action.descend(&quotient)?;
    let bq = borel(&qaction, &quotient.space, quotient.space.truncation())?;
    let value = Cochain::from_fn(bq.space(), 2, modulus, |s| {
        let (gs, w) = bq.rep(s);
        match quotient.lift(w.base()) {
            Some(orig) => {
                let lifted = SimplexWord::new(w.theta().to_vec(), orig);
                bx.word(gs, &lifted).map_or(0, |bw| dpi.eval(bw))
            }
            None => 0,
        }
    });
    Ok(TildeGamma { quotient, action: qaction, borel: bq, value })
}

/// `c^*`: pulls a cochain on `X̄ // G` back to the cofiber of `Y -> X // G`.
pub fn pull_along_c(tilde: &TildeGamma, g: &BorelGamma, c: &Cochain) -> Cochain {
    let cof = &g.connecting.cofiber;
    Cochain::from_fn(&cof.space, c.dim, c.modulus, |s| match cof.lift(s) {
        None => 0,
        Some(orig) => {
            let (gs, w) = g.borel.rep(orig);
            let qw = tilde.quotient.quotient.apply(w);
            tilde.borel.word(gs, &qw).map_or(0, |bw| c.eval(bw))
        }
    })
}

/// Verdicts of the two routes to `[γ_G] = 0` for an equivariant relative problem.
#[derive(Clone, Debug)]
pub struct EquivariantObstruction {
    /// Witness `(r, s)` with `d(r, s) = (0, 0, γ)`, if any.
    pub total_witness: Option<(BiCochain, BiCochain)>,
    /// `s` with `d s = γ_G` on the cofiber of `Y -> X // G`, if any.
    pub direct_witness: Option<Cochain>,
}

impl EquivariantObstruction {
    pub fn class_zero(&self) -> Result<bool> {
        let a = self.total_witness.is_some();
        if a != self.direct_witness.is_some() {
            return Err(Error::Internal("total-complex and Borel routes disagree".into()));
        }
        Ok(a)
    }
}

pub fn equivariant_obstruction(
    x: &SSet,
    action: &SimplicialGAction,
    rel: &Relative,
    modulus: u64,
) -> Result<EquivariantObstruction> {
    convention_self_test()?;
    let g = gamma(x, rel, modulus)?;
    let tilde = gamma_tilde_g(x, action, rel, modulus)?;
    let dc = DoubleComplex::new(&tilde.quotient.space, &tilde.action, modulus);
    let triple = Triple { c02: as_vertical(&g.value, &tilde.quotient.space), ..Triple::zero(modulus) };
    let total_witness = dc.total_class_zero(&triple)?;
    let gg = gamma_g(x, action, rel, modulus)?;
    let direct_witness = class_zero(&gg.connecting.cofiber.space, &gg.connecting.value)?;
    Ok(EquivariantObstruction { total_witness, direct_witness })
}

/// `φ = -d^h s` for a trivialization `s` of `γ` (`d^v s = γ`).
pub fn phi_from_trivialization(dc: &DoubleComplex<'_>, s: &Cochain) -> BiCochain {
    dc.dh(&as_vertical(s, dc.space)).neg()
}

/// Two-step version of the total-complex question: with `d^v s = γ` and
/// `φ = -d^h s`, look for `r` with `d^v r = 0` and `d^h r = φ`.
pub fn two_step_class_zero(dc: &DoubleComplex<'_>, s: &Cochain) -> Result<bool> {
    let phi = phi_from_trivialization(dc, s);
    let target = Triple { c11: phi, ..Triple::zero(dc.modulus) };
    Ok(dc.total_class_zero(&target)?.is_some())
}

static SELF_TEST: OnceLock<std::result::Result<(), String>> = OnceLock::new();

/// Pins the sign conventions on the torus: `φ(1, x_i) = 1` for
/// `s(x_0) = 0, s(x_1) = 1`, `∇_2(γ̃_G) = (0, 0, γ)`, and
/// `∇_2 ∘ Δ_2 = id` on that triple.
pub fn convention_self_test() -> Result<()> {
    SELF_TEST
        .get_or_init(|| run_self_test().map_err(|e| e.to_string()))
        .clone()
        .map_err(|e| Error::Internal(format!("cohomology convention self-test failed: {e}")))
}

fn run_self_test() -> Result<()> {
    let t = crate::gallery::Torus::new(3)?;
    let g = gamma(&t.space, &t.relative, 2)?;
    let tilde = gamma_tilde_g(&t.space, &t.action, &t.relative, 2)?;
    let xb = &tilde.quotient.space;
    let dc = DoubleComplex::new(xb, &tilde.action, 2);
    let s = Cochain::from_fn(xb, 1, 2, |e| u64::from(xb.name(e) == "x1"));
    let phi = phi_from_trivialization(&dc, &s);
    let one = tilde.action.group().elements().find(|&a| a != tilde.action.group().identity()).unwrap();
    for name in ["x0", "x1"] {
        if phi.get(&[one], xb.find(name).unwrap()) != 1 {
            return Err(Error::Internal(format!("phi(1, {name}) != 1")));
        }
    }
    let expect = Triple { c02: as_vertical(&g.value, xb), ..Triple::zero(2) };
    let got = dc.ez2(&tilde.borel, &tilde.value)?;
    if got != expect {
        return Err(Error::Internal("ez2 of the tilde class is not (0, 0, gamma)".into()));
    }
    if dc.ez2(&tilde.borel, &dc.aw2(&tilde.borel, &expect))? != expect {
        return Err(Error::Internal("ez2 after aw2 is not the identity".into()));
    }
    Ok(())
}

use super::cochain::Cochain;
use crate::algebra::{solve_linear_zmod, ZModMatrix};
use crate::error::{Error, Result};
use crate::gaction::{BorelSpace, SimplicialGAction};
use crate::simplicial::{Nd, SSet, SimplexWord};
use std::collections::BTreeMap;

/// Component of bidegree `(p, q)` of the Borel double complex: a function of
/// `(g_1, …, g_p; x)` with `x` a `q`-simplex, zero when some `g_i = 1` or
/// `x` is degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiCochain {
    pub p: usize,
    pub q: usize,
    pub modulus: u64,
    values: BTreeMap<(Vec<usize>, Nd), u64>,
}

impl BiCochain {
    pub fn zero(p: usize, q: usize, modulus: u64) -> Self {
        Self { p, q, modulus, values: BTreeMap::new() }
    }

    pub fn set(&mut self, gs: Vec<usize>, x: Nd, v: u64) {
        debug_assert!(gs.len() == self.p && x.dim == self.q);
        let v = v % self.modulus;
        if v == 0 {
            self.values.remove(&(gs, x));
        } else {
            self.values.insert((gs, x), v);
        }
    }

    pub fn get(&self, gs: &[usize], x: Nd) -> u64 {
        self.values.get(&(gs.to_vec(), x)).copied().unwrap_or(0)
    }

    pub fn eval(&self, identity: usize, gs: &[usize], w: &SimplexWord) -> u64 {
        if w.is_degenerate() || gs.contains(&identity) {
            0
        } else {
            self.get(gs, w.base())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero entries in a fixed order.
    pub fn entries(&self) -> impl Iterator<Item = (&(Vec<usize>, Nd), &u64)> {
        self.values.iter()
    }

    pub fn add(&self, other: &BiCochain) -> BiCochain {
        let mut out = self.clone();
        for ((g, x), v) in &other.values {
            let cur = out.get(g, *x);
            out.set(g.clone(), *x, cur + v);
        }
        out
    }

    pub fn neg(&self) -> BiCochain {
        let mut out = BiCochain::zero(self.p, self.q, self.modulus);
        for ((g, x), v) in &self.values {
            out.set(g.clone(), *x, self.modulus - v);
        }
        out
    }
}

/// A total-degree-2 element `(α, α', α'')` of bidegrees (2,0), (1,1), (0,2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub c20: BiCochain,
    pub c11: BiCochain,
    pub c02: BiCochain,
}

impl Triple {
    pub fn zero(modulus: u64) -> Self {
        Self {
            c20: BiCochain::zero(2, 0, modulus),
            c11: BiCochain::zero(1, 1, modulus),
            c02: BiCochain::zero(0, 2, modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c20.is_zero() && self.c11.is_zero() && self.c02.is_zero()
    }
}

/// The double complex of `G` acting on `X` with coefficients `Z/d`.
#[derive(Clone, Copy, Debug)]
pub struct DoubleComplex<'a> {
    pub space: &'a SSet,
    pub action: &'a SimplicialGAction,
    pub modulus: u64,
}

impl<'a> DoubleComplex<'a> {
    pub fn new(space: &'a SSet, action: &'a SimplicialGAction, modulus: u64) -> Self {
        Self { space, action, modulus }
    }

    fn e(&self) -> usize {
        self.action.group().identity()
    }

    /// Normalized basis positions of bidegree `(p, q)`.
    pub fn positions(&self, p: usize, q: usize) -> Vec<(Vec<usize>, Nd)> {
        let g = self.action.group();
        let mut tuples = vec![Vec::new()];
        for _ in 0..p {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    g.elements().filter(|&a| a != g.identity()).map(move |a| {
                        let mut u = t.clone();
                        u.push(a);
                        u
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for t in &tuples {
            for x in self.space.nd_ids(q) {
                out.push((t.clone(), x));
            }
        }
        out
    }

    /// `(d^h f)(g_1..g_{p+1}; x) = f(g_2..; g_1^{-1} x) + Σ_{i=1}^{p} (-1)^i
    /// f(.., g_i g_{i+1}, ..; x) + (-1)^{p+1} f(g_1..g_p; x)`.
    pub fn dh(&self, f: &BiCochain) -> BiCochain {
        let g = self.action.group();
        let (p, q, m) = (f.p, f.q, self.modulus);
        let e = self.e();
        let mut out = BiCochain::zero(p + 1, q, m);
        for (gs, x) in self.positions(p + 1, q) {
            let w = SimplexWord::nd(x);
            let mut acc = f.eval(e, &gs[1..], &self.action.act(g.inv(gs[0]), &w));
            for i in 1..=p {
                let mut t = gs.clone();
                t[i - 1] = g.mul(gs[i - 1], gs[i]);
                t.remove(i);
                let v = f.eval(e, &t, &w);
                acc += if i % 2 == 0 { v } else { m - v };
            }
            let v = f.eval(e, &gs[..p], &w);
            acc += if (p + 1) % 2 == 0 { v } else { m - v };
            out.set(gs, x, acc);
        }
        out
    }

    /// `(d^v f)(g; x) = Σ (-1)^i f(g; d_i x)`.
    pub fn dv(&self, f: &BiCochain) -> BiCochain {
        let (p, q, m) = (f.p, f.q, self.modulus);
        let e = self.e();
        let mut out = BiCochain::zero(p, q + 1, m);
        if q + 1 > self.space.truncation() {
            return out;
        }
        for (gs, x) in self.positions(p, q + 1) {
            let acc: u64 = self
                .space
                .faces(x)
                .iter()
                .enumerate()
                .map(|(i, fw)| {
                    let v = f.eval(e, &gs, fw);
                    if i % 2 == 0 {
                        v
                    } else {
                        m - v
                    }
                })
                .sum();
            out.set(gs, x, acc);
        }
        out
    }

    /// Total differential `d^h + (-1)^p d^v` on an element given by its
    /// components (indexed by `p`, all of the same total degree).
    pub fn total(&self, comps: &[BiCochain]) -> Vec<BiCochain> {
        let n = comps.first().map_or(0, |c| c.p + c.q);
        let mut out: Vec<BiCochain> = (0..=n + 1).map(|p| BiCochain::zero(p, n + 1 - p, self.modulus)).collect();
        for c in comps {
            out[c.p + 1] = out[c.p + 1].add(&self.dh(c));
            let v = self.dv(c);
            out[c.p] = out[c.p].add(&if c.p % 2 == 0 { v } else { v.neg() });
        }
        out
    }

    /// `d(r, s) = (d^h r, d^h s - d^v r, d^v s)` for `r` of bidegree (1,0)
    /// and `s` of bidegree (0,1).
    pub fn d_total1(&self, r: &BiCochain, s: &BiCochain) -> Triple {
        let out = self.total(&[s.clone(), r.clone()]);
        Triple { c20: out[2].clone(), c11: out[1].clone(), c02: out[0].clone() }
    }

    /// Dual of the Eilenberg–Zilber map: a diagonal 2-cochain on `X // G`
    /// becomes `(α, α', α'')` with
    /// `α(g_1,g_2; x) = θ[(1,g_1,g_2), s_1 s_0 x]`,
    /// `α'(g; x) = θ[(1,g,1), s_0 x] - θ[(1,1,g), s_1 x]`,
    /// `α''(x) = θ[(1,1,1), x]`.
    pub fn ez2(&self, borel: &BorelSpace, theta: &Cochain) -> Result<Triple> {
        let e = self.e();
        let m = self.modulus;
        let look = |gs: &[usize], w: &SimplexWord| -> Result<u64> {
            let bw =
                borel.word(gs, w).ok_or_else(|| Error::Internal("simplex missing from the Borel truncation".into()))?;
            Ok(theta.eval(bw))
        };
        let mut t = Triple::zero(m);
        for (gs, x) in self.positions(2, 0) {
            let w = SimplexWord::nd(x).degeneracy(0).degeneracy(1);
            t.c20.set(gs.clone(), x, look(&gs, &w)?);
        }
        for (gs, x) in self.positions(1, 1) {
            let w = SimplexWord::nd(x);
            let a = look(&[gs[0], e], &w.degeneracy(0))?;
            let b = look(&[e, gs[0]], &w.degeneracy(1))?;
            t.c11.set(gs, x, a + m - b);
        }
        for (gs, x) in self.positions(0, 2) {
            t.c02.set(gs, x, look(&[e, e], &SimplexWord::nd(x))?);
        }
        Ok(t)
    }

    /// Dual of the Alexander–Whitney map:
    /// `θ[(1,g_1,g_2), x] = α(g_1,g_2; d_0^2 x) + α'(g_1; d_0 x) + α''(x)`.
    pub fn aw2(&self, borel: &BorelSpace, t: &Triple) -> Cochain {
        let e = self.e();
        let x = self.space;
        Cochain::from_fn(borel.space(), 2, self.modulus, |s| {
            let (gs, w) = borel.rep(s);
            let d0 = x.face(0, w);
            let d00 = x.face(0, &d0);
            t.c20.eval(e, gs, &d00) + t.c11.eval(e, &gs[..1], &d0) + t.c02.eval(e, &[], w)
        })
    }

    /// Solves `d(r, s) = target` in the total complex, returning a witness
    /// `(r, s)` or `None` when the class of `target` is nonzero.
    pub fn total_class_zero(&self, target: &Triple) -> Result<Option<(BiCochain, BiCochain)>> {
        let m = self.modulus;
        let rpos = self.positions(1, 0);
        let spos = self.positions(0, 1);
        let rows: Vec<(usize, (Vec<usize>, Nd))> = [(2usize, 0usize), (1, 1), (0, 2)]
            .iter()
            .flat_map(|&(p, q)| self.positions(p, q).into_iter().map(move |k| (p, k)))
            .collect();
        let row_of: BTreeMap<(usize, (Vec<usize>, Nd)), usize> =
            rows.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut mat = ZModMatrix::zeros(rows.len(), rpos.len() + spos.len(), m);
        let put = |mat: &mut ZModMatrix, col: usize, t: &Triple| {
            for (p, c) in [(2usize, &t.c20), (1, &t.c11), (0, &t.c02)] {
                for (k, v) in c.entries() {
                    if let Some(&row) = row_of.get(&(p, k.clone())) {
                        mat.add_to(row, col, *v as i64);
                    }
                }
            }
        };
        for (j, (gs, x)) in rpos.iter().enumerate() {
            let mut r = BiCochain::zero(1, 0, m);
            r.set(gs.clone(), *x, 1);
            put(&mut mat, j, &self.d_total1(&r, &BiCochain::zero(0, 1, m)));
        }
        for (j, (gs, x)) in spos.iter().enumerate() {
            let mut s = BiCochain::zero(0, 1, m);
            s.set(gs.clone(), *x, 1);
            put(&mut mat, rpos.len() + j, &self.d_total1(&BiCochain::zero(1, 0, m), &s));
        }
        let rhs: Vec<u64> = rows
            .iter()
            .map(|(p, (gs, x))| match p {
                2 => target.c20.get(gs, *x),
                1 => target.c11.get(gs, *x),
                _ => target.c02.get(gs, *x),
            })
            .collect();
        let Some(sol) = solve_linear_zmod(&mat, &rhs)? else {
            return Ok(None);
        };
        let mut r = BiCochain::zero(1, 0, m);
        for ((gs, x), v) in rpos.iter().zip(&sol) {
            r.set(gs.clone(), *x, *v);
        }
        let mut s = BiCochain::zero(0, 1, m);
        for ((gs, x), v) in spos.iter().zip(&sol[rpos.len()..]) {
            s.set(gs.clone(), *x, *v);
        }
        if self.d_total1(&r, &s) != *target {
            return Err(Error::Internal("total-complex witness does not verify".into()));
        }
        Ok(Some((r, s)))
    }
}

/// A plain cochain viewed as a component of bidegree `(0, q)`.
pub fn as_vertical(c: &Cochain, x: &SSet) -> BiCochain {
    let mut b = BiCochain::zero(0, c.dim, c.modulus);
    for s in x.nd_ids(c.dim) {
        b.set(Vec::new(), s, c.at(s));
    }
    b
}

/// The `(0, q)` component as a plain cochain.
pub fn vertical_part(b: &BiCochain, x: &SSet) -> Cochain {
    Cochain::from_fn(x, b.q, b.modulus, |s| b.get(&[], s))
}

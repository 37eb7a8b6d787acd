//! Permutation supermodules `M^{μ|ν} = m_{μ|ν} H` and their tableau bases.
//!
//! The generator is `m_{μ|ν} = u⁺_a x_{μ*} y_{ν*}` where `a` are the
//! component sizes of `μ∨ν`. For a hook shape `λ` put
//! `z_λ = m_{λ_♯|λ_*}` and let `t_λ` be the super initial tableau, so that
//! `e(s) = d(t_λ)^{-1} d(s)` moves `t_λ` to `s`. For `S ∈ std(λ, μ|ν)` with
//! first preimage `s_0`,
//!
//! ```text
//! h_S  = x_{μ*} y_{ν*} T*_{e(s_0)} z_λ / P_S,
//! m_St = h_S T_{e(t)},
//! ```
//!
//! where `P_S` is the Poincaré factor of the stabilizer overlap, so that
//! `h_{T^λ} = z_λ`. When every repeated y-symbol of `S` sits in a single
//! column, `h_S` is the plain sum `Σ_{s ↦ S} T*_{e(s)} z_λ`.

use std::collections::BTreeMap;

use crate::combin::{enumerate_cumulative_hook_multipartitions, enumerate_hook_multipartitions, HookProfile, Multipartition, WeightPair};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::ring::{fraction_solve, poly_nullspace, poly_rank, LaurentPolynomial as P, Solution};
use crate::supertab::{enumerate_sstd, preimages, split_tableau, super_initial_tableau, SuperTableau};
use crate::symm::{d_of, enumerate_standard, Permutation, Tableau};

/// Default bound on `Σ rank M^{μ|ν}` for module-level verifiers.
pub const DEFAULT_MODULE_LIMIT: usize = 2_000;

/// Fails when some shape carrying semistandard tableaux is not a hook
/// multipartition; the construction of `h_S` needs `λ_♯|λ_*`.
pub fn check_profile(profile: &HookProfile, n: usize) -> Result<()> {
    let hooks = enumerate_hook_multipartitions(profile, n);
    for lam in enumerate_cumulative_hook_multipartitions(profile, n) {
        if !hooks.contains(&lam) {
            return Err(Error::InvalidInput(format!(
                "shape {lam} has semistandard tableaux but is not a hook multipartition; profile unsupported"
            )));
        }
    }
    Ok(())
}

/// `x_{μ*} y_{ν*}`.
pub fn symmetrizer(h: &HeckeAlgebra, weight: &WeightPair) -> HeckeElement {
    h.mul(&h.x(&weight.mu_star()), &h.y(&weight.nu_star()))
}

/// `m_{μ|ν} = u⁺_a x_{μ*} y_{ν*}`. Self-adjoint under `*`.
pub fn generator(h: &HeckeAlgebra, weight: &WeightPair) -> HeckeElement {
    h.mul(&h.u_plus(&weight.vee().component_sizes()), &symmetrizer(h, weight))
}

/// `z_λ = m_{λ_♯|λ_*}`.
pub fn z_lambda(h: &HeckeAlgebra, profile: &HookProfile, lam: &Multipartition) -> Result<HeckeElement> {
    Ok(generator(h, &profile.split(lam)?))
}

/// `e(s) = d(t_λ)^{-1} d(s)`.
pub fn shift(profile: &HookProfile, s: &Tableau) -> Result<Permutation> {
    let lam = Multipartition::new(s.shape().0.clone())?;
    let base = d_of(&super_initial_tableau(&lam, profile))?;
    Ok(base.inverse().mul(&d_of(s)?))
}

fn q_factorial(r: usize, inverse: bool) -> P {
    let mut acc = P::one();
    for i in 1..=r {
        let mut s = P::zero();
        for j in 0..i as i32 {
            s += &P::q_pow(if inverse { -j } else { j });
        }
        acc = &acc * &s;
    }
    acc
}

/// `P_S = Π [r]_q! · Π [r]_{q^-1}!` over repeated x-symbols in an x-row
/// and repeated y-symbols in a y-column of `S`.
pub fn stabilizer_factor(sst: &SuperTableau, profile: &HookProfile) -> P {
    let mut counts: BTreeMap<(usize, bool, usize, String), usize> = BTreeMap::new();
    for (c, comp) in sst.rows().iter().enumerate() {
        for (r, row) in comp.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                let x_row = r < profile.bk[c];
                if s.is_x() == x_row {
                    let block = if x_row { r } else { j };
                    *counts.entry((c, x_row, block, s.to_string())).or_default() += 1;
                }
            }
        }
    }
    counts.iter().fold(P::one(), |acc, ((_, x_row, _, _), &r)| &acc * &q_factorial(r, !x_row))
}

/// Divide every coefficient by `p`, failing loudly if inexact.
pub(crate) fn divide(e: &HeckeElement, p: &P) -> Result<HeckeElement> {
    if p.is_one() {
        return Ok(e.clone());
    }
    let mut coords = Vec::new();
    for (label, c) in e.terms() {
        let v = c.div_exact(p).ok_or_else(|| Error::Internal(format!("coefficient {c} not divisible by {p}")))?;
        coords.resize(label + 1, P::zero());
        coords[label] = v;
    }
    Ok(HeckeElement::from_coords(e.m(), e.n(), &coords))
}

/// `h_S ∈ M^{μ|ν} ∩ H z_λ`.
pub fn left_factor(h: &HeckeAlgebra, profile: &HookProfile, sst: &SuperTableau, weight: &WeightPair) -> Result<HeckeElement> {
    let pre = preimages(sst, weight);
    let s0 = pre.first().ok_or_else(|| Error::InvalidInput(format!("{sst} has no standard preimage of type {weight}")))?;
    let z = z_lambda(h, profile, sst.shape())?;
    let e = shift(profile, s0)?;
    let v = h.mul(&symmetrizer(h, weight), &h.left_t_w(&e.inverse(), &z));
    divide(&v, &stabilizer_factor(sst, profile))
}

/// `m_St = h_S T_{e(t)}`.
pub fn m_st(h: &HeckeAlgebra, profile: &HookProfile, sst: &SuperTableau, weight: &WeightPair, t: &Tableau) -> Result<HeckeElement> {
    if t.shape().0 != sst.shape().as_multicomposition().0 || !t.is_standard() {
        return Err(Error::InvalidInput(format!("{t} is not a standard tableau of shape {}", sst.shape())));
    }
    Ok(h.right_t_w(&left_factor(h, profile, sst, weight)?, &shift(profile, t)?))
}

/// The split pairs `(s_μ, s_ν)` of every preimage of `S`.
pub fn preimage_terms(sst: &SuperTableau, weight: &WeightPair) -> Result<Vec<(Tableau, Tableau)>> {
    preimages(sst, weight).iter().map(|s| split_tableau(s, sst, weight)).collect()
}

/// `Σ_{s ↦ S} T*_{e(s)} z_λ T_{e(t)}`.
pub fn preimage_sum(h: &HeckeAlgebra, profile: &HookProfile, sst: &SuperTableau, weight: &WeightPair, t: &Tableau) -> Result<HeckeElement> {
    let z = z_lambda(h, profile, sst.shape())?;
    let et = shift(profile, t)?;
    let mut acc = h.zero();
    for s in preimages(sst, weight) {
        acc = acc.add(&h.sandwich(&shift(profile, &s)?, &z, &et)?);
    }
    Ok(acc)
}

/// Shapes with at least one semistandard tableau of the given weight, and
/// those tableaux.
pub fn semistandard_by_shape(profile: &HookProfile, weight: &WeightPair) -> Vec<(Multipartition, Vec<SuperTableau>)> {
    enumerate_hook_multipartitions(profile, weight.size())
        .into_iter()
        .map(|lam| {
            let ss = enumerate_sstd(&lam, weight, profile);
            (lam, ss)
        })
        .filter(|(_, ss)| !ss.is_empty())
        .collect()
}

/// `λ ↦ |std(λ, μ|ν)|`.
pub fn filtration_multiplicities(profile: &HookProfile, weight: &WeightPair) -> BTreeMap<Multipartition, usize> {
    semistandard_by_shape(profile, weight).into_iter().map(|(lam, ss)| (lam, ss.len())).collect()
}

/// `M^{μ|ν}` with its `m_St` basis.
#[derive(Clone, Debug)]
pub struct PermSupermodule {
    pub weight: WeightPair,
    pub parity: u8,
    pub generator: HeckeElement,
    pub labels: Vec<(SuperTableau, Tableau)>,
    pub basis: Vec<HeckeElement>,
    dim: usize,
}

impl PermSupermodule {
    pub fn new(h: &HeckeAlgebra, profile: &HookProfile, weight: &WeightPair) -> Result<Self> {
        weight.check(profile)?;
        if weight.size() != h.n() || profile.m() != h.m() {
            return Err(Error::InvalidInput("weight does not match the algebra".into()));
        }
        check_profile(profile, h.n())?;
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        for (lam, ss) in semistandard_by_shape(profile, weight) {
            let std = enumerate_standard(&lam);
            for sst in ss {
                let hs = left_factor(h, profile, &sst, weight)?;
                for t in &std {
                    basis.push(h.right_t_w(&hs, &shift(profile, t)?));
                    labels.push((sst.clone(), t.clone()));
                }
            }
        }
        Ok(PermSupermodule { weight: weight.clone(), parity: weight.parity(), generator: generator(h, weight), labels, basis, dim: h.dim() })
    }

    /// `Σ_λ |std(λ, μ|ν)| · |std(λ)|`.
    pub fn expected_rank(&self) -> usize {
        self.labels.len()
    }

    /// Exact rank of the `m_St` over the fraction field.
    pub fn basis_rank(&self) -> usize {
        poly_rank(&self.basis.iter().map(|b| b.coords(self.dim)).collect::<Vec<_>>())
    }

    /// Coordinates of `el` in the `m_St` basis.
    pub fn express(&self, el: &HeckeElement) -> Result<Solution> {
        let cols: Vec<Vec<P>> = self.basis.iter().map(|b| b.coords(self.dim)).collect();
        let matrix: Vec<Vec<P>> = (0..self.dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        fraction_solve(&matrix, &el.coords(self.dim)).ok_or(Error::NotMember)
    }

    /// `M^{μ|ν}` equals `u⁺_a H ∩ x_{μ*} H ∩ y_{ν*} H` and both have the
    /// expected dimension.
    pub fn intersection_check(&self, h: &HeckeAlgebra) -> bool {
        let a = self.weight.vee().component_sizes();
        let ideals = [h.u_plus(&a), h.x(&self.weight.mu_star()), h.y(&self.weight.nu_star())];
        let spaces: Vec<Vec<Vec<P>>> = ideals.iter().map(|g| right_ideal(h, g)).collect();
        let inter = intersect_all(&spaces, self.dim);
        let span: Vec<Vec<P>> = self.basis.iter().map(|b| b.coords(self.dim)).collect();
        let r = poly_rank(&span);
        r == self.expected_rank() && inter.len() == r && same_span(&inter, &span)
    }

    /// `lr(m_{μ|ν}) = H m_{μ|ν}`.
    pub fn annihilator_check(&self, h: &HeckeAlgebra) -> bool {
        double_annihilator_check(h, &self.generator)
    }
}

/// Coordinates of `{g b}` over the standard basis `b`.
pub fn right_ideal(h: &HeckeAlgebra, g: &HeckeElement) -> Vec<Vec<P>> {
    (0..h.dim()).map(|l| h.mul(g, &h.basis_label(l)).coords(h.dim())).collect()
}

/// Coordinates of `{b g}`.
pub fn left_ideal(h: &HeckeAlgebra, g: &HeckeElement) -> Vec<Vec<P>> {
    (0..h.dim()).map(|l| h.mul(&h.basis_label(l), g).coords(h.dim())).collect()
}

fn transpose(rows: &[Vec<P>], width: usize) -> Vec<Vec<P>> {
    (0..width).map(|i| rows.iter().map(|r| r[i].clone()).collect()).collect()
}

/// Basis of `span(a) ∩ span(b)` for spanning sets given as rows.
pub fn intersect(a: &[Vec<P>], b: &[Vec<P>], width: usize) -> Vec<Vec<P>> {
    // α·A = β·B  ⇔  [A; -B]^T (α, β) = 0
    let mut stacked: Vec<Vec<P>> = a.to_vec();
    stacked.extend(b.iter().map(|r| r.iter().map(|x| -x).collect()));
    let sys = transpose(&stacked, width);
    let mut out: Vec<Vec<P>> = Vec::new();
    for v in poly_nullspace(&sys, stacked.len()) {
        let mut w = vec![P::zero(); width];
        for (coef, row) in v.iter().zip(a) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                *x += &(coef * y);
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            out.push(w);
        }
    }
    reduce_to_basis(out)
}

fn intersect_all(spaces: &[Vec<Vec<P>>], width: usize) -> Vec<Vec<P>> {
    let mut acc = reduce_to_basis(spaces[0].clone());
    for s in &spaces[1..] {
        acc = intersect(&acc, &reduce_to_basis(s.clone()), width);
    }
    acc
}

/// A maximal independent subset, in order.
pub fn reduce_to_basis(rows: Vec<Vec<P>>) -> Vec<Vec<P>> {
    let mut out: Vec<Vec<P>> = Vec::new();
    let mut r = 0;
    for row in rows {
        out.push(row);
        let nr = poly_rank(&out);
        if nr == r {
            out.pop();
        } else {
            r = nr;
        }
    }
    out
}

/// Equality of row spans.
pub fn same_span(a: &[Vec<P>], b: &[Vec<P>]) -> bool {
    let ra = poly_rank(a);
    let rb = poly_rank(b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && poly_rank(&both) == ra
}

/// `l(r(g)) = H g` as subspaces of `H`.
pub fn double_annihilator_check(h: &HeckeAlgebra, g: &HeckeElement) -> bool {
    let dim = h.dim();
    // r(g) = {Σ x_i b_i : Σ x_i g b_i = 0}
    let right = transpose(&right_ideal(h, g), dim);
    let r_basis: Vec<HeckeElement> = poly_nullspace(&right, dim).iter().map(|v| HeckeElement::from_coords(h.m(), h.n(), v)).collect();
    // l(R) = {Σ y_j b_j : Σ y_j b_j r = 0 for all r}
    let mut eqs: Vec<Vec<P>> = Vec::new();
    for r in &r_basis {
        eqs.extend(transpose(&left_ideal(h, r), dim));
    }
    let lr = poly_nullspace(&reduce_to_basis(eqs), dim);
    same_span(&lr, &left_ideal(h, g))
}

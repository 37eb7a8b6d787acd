//! The cyclotomic q-Schur superalgebra `S = End_H(⊕_{μ|ν} M^{μ|ν})`.
//!
//! Basis maps: for `S ∈ std(λ, μ|ν)` and `T ∈ std(λ, α|β)`, `φ_ST` sends
//! `m_{α|β} h ↦ m_ST h` and kills the other summands, where
//!
//! ```text
//! m_ST = h_S T_{e(t_0)} x_{α*} y_{β*} / P_T
//! ```
//!
//! with `h_S`, `e`, `P_T` as in [`crate::supermod`] and `t_0` the first
//! preimage of `T`. Then `m_ST* = m_TS` and `m_{T^λ T^λ} = m_{λ_♯|λ_*}`.
//!
//! Composition: `f ∘ g` applies `g` first. Products are computed on
//! generators: if `g(m_β) = m_α k` then `(f∘g)(m_β) = f(m_α) k`, which is
//! re-expressed in the `m_ST` of the block by an exact solve.
//!
//! Shapes are totally ordered, highest first; `S̄_λ` is spanned by the
//! `φ_ST` of shape strictly above `λ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::combin::{enumerate_hook_multipartitions, enumerate_weights, HookProfile, Multipartition, WeightPair};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement, DEFAULT_DIM_LIMIT};
use crate::ring::field::{nullspace as field_nullspace, rank as field_rank, Field, Point, PointVisitor};
use crate::ring::{fraction_solve, poly_rank, LaurentPolynomial as P, RationalFunction, SpecializationTarget};
use crate::supermod::{check_profile, divide, generator, left_factor, shift, stabilizer_factor, symmetrizer, DEFAULT_MODULE_LIMIT};
use crate::supertab::{enumerate_sstd, preimages, SuperTableau};
use crate::symm::enumerate_standard;

/// One basis map `φ_ST : M^{source} → M^{target}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurBasisLabel {
    pub shape: Multipartition,
    pub s: SuperTableau,
    pub t: SuperTableau,
    pub target: WeightPair,
    pub source: WeightPair,
}

impl SchurBasisLabel {
    /// `(|ν| + |β|) mod 2`.
    pub fn parity(&self) -> u8 {
        (self.target.parity() + self.source.parity()) % 2
    }
}

/// Coordinates in the `φ_ST` basis.
#[derive(Clone, Debug, Default)]
pub struct SchurElement {
    pub coeffs: BTreeMap<usize, RationalFunction>,
}

impl SchurElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, RationalFunction::from_poly(P::one()));
        SchurElement { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    pub fn coefficient(&self, i: usize) -> RationalFunction {
        self.coeffs.get(&i).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn add_scaled(&mut self, other: &SchurElement, c: &RationalFunction) {
        for (&i, v) in &other.coeffs {
            let e = self.coeffs.entry(i).or_insert_with(RationalFunction::zero);
            *e = &*e + &(v * c);
        }
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn equals(&self, other: &SchurElement) -> bool {
        let keys: std::collections::BTreeSet<usize> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.into_iter().all(|k| self.coefficient(k).equals(&other.coefficient(k)))
    }

    /// Every coefficient lies in the ground ring.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.as_poly().is_some())
    }
}

/// Result of [`SchurAlgebra::cellularity_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct CellularityReport {
    pub products: usize,
    pub star_violations: Vec<String>,
    pub independence_violations: Vec<String>,
    pub ideal_violations: Vec<String>,
}

impl CellularityReport {
    pub fn passed(&self) -> bool {
        self.star_violations.is_empty() && self.independence_violations.is_empty() && self.ideal_violations.is_empty()
    }
}

/// Gram matrix of one Weyl module.
#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub shape: Multipartition,
    /// `(S, type of S)` indexing rows and columns.
    pub index: Vec<(SuperTableau, WeightPair)>,
    pub entries: Vec<Vec<P>>,
}

impl GramMatrix {
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Rank after specializing.
    pub fn rank_at(&self, target: &SpecializationTarget) -> Result<usize> {
        crate::ring::rank_at(target, &self.entries)
    }
}

/// Result of [`SchurAlgebra::double_centralizer_check`].
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub dim_v: usize,
    pub dim_schur: usize,
    pub commutant_dim: usize,
    pub dim_hecke: usize,
    pub hecke_image_rank: usize,
    pub bicommutant_dim: usize,
    pub faithful: bool,
}

impl DualityReport {
    /// `End_H(V) = S` and `End_S(V)` is the image of `H`.
    pub fn centralizes(&self) -> bool {
        self.commutant_dim == self.dim_schur && self.bicommutant_dim == self.hecke_image_rank
    }

    /// [`DualityReport::centralizes`] with `H` acting faithfully.
    pub fn passed(&self) -> bool {
        self.centralizes() && self.faithful
    }
}

/// `S(bk|bl;Λ)` with its `φ_ST` basis.
pub struct SchurAlgebra {
    pub profile: HookProfile,
    pub weights: Vec<WeightPair>,
    /// Hook shapes with some semistandard tableau, highest first.
    pub shapes: Vec<Multipartition>,
    pub labels: Vec<SchurBasisLabel>,
    h: HeckeAlgebra,
    generators: Vec<HeckeElement>,
    images: Vec<HeckeElement>,
    shape_of: Vec<usize>,
    source_of: Vec<usize>,
    target_of: Vec<usize>,
    /// Labels of each `Hom(M^source, M^target)` block.
    blocks: HashMap<(usize, usize), Vec<usize>>,
    /// `(S, weight index)` per shape.
    tableaux: Vec<Vec<(SuperTableau, usize)>>,
    label_index: HashMap<(usize, usize, usize), usize>,
    cofactors: RwLock<HashMap<usize, (Vec<P>, P)>>,
    products: RwLock<HashMap<(usize, usize), SchurElement>>,
}

impl SchurAlgebra {
    /// Full weight set.
    pub fn new(profile: &HookProfile, n: usize) -> Result<Self> {
        Self::with_weights(profile, n, enumerate_weights(profile, n))
    }

    pub fn with_weights(profile: &HookProfile, n: usize, weights: Vec<WeightPair>) -> Result<Self> {
        Self::with_limits(profile, n, weights, DEFAULT_DIM_LIMIT, DEFAULT_MODULE_LIMIT)
    }

    /// Like [`SchurAlgebra::with_weights`] with explicit bounds on `dim H`
    /// and `dim ⊕M`.
    pub fn with_limits(profile: &HookProfile, n: usize, weights: Vec<WeightPair>, hecke_limit: usize, module_limit: usize) -> Result<Self> {
        let h = HeckeAlgebra::with_limit(profile.m(), n, hecke_limit)?;
        check_profile(profile, n)?;
        for w in &weights {
            w.check(profile)?;
            if w.size() != n {
                return Err(Error::InvalidInput(format!("weight {w} has size {} ≠ {n}", w.size())));
            }
        }
        let mut shapes = Vec::new();
        let mut tableaux = Vec::new();
        for lam in enumerate_hook_multipartitions(profile, n) {
            let per: Vec<(SuperTableau, usize)> =
                weights.iter().enumerate().flat_map(|(wi, w)| enumerate_sstd(&lam, w, profile).into_iter().map(move |s| (s, wi))).collect();
            if !per.is_empty() {
                shapes.push(lam);
                tableaux.push(per);
            }
        }
        let dim_v: usize = tableaux.iter().zip(&shapes).map(|(t, lam)| t.len() * enumerate_standard(lam).len()).sum();
        if dim_v > module_limit {
            return Err(Error::ScaleLimit { what: "dim ⊕M".into(), value: dim_v, limit: module_limit });
        }
        let generators: Vec<HeckeElement> = weights.iter().map(|w| generator(&h, w)).collect();
        let sym: Vec<HeckeElement> = weights.iter().map(|w| symmetrizer(&h, w)).collect();

        // h_S and the right factors T_{e(t_0)} Y_α / P_T, per (shape, tableau)
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (lam_i, per) in tableaux.iter().enumerate() {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for (sst, wi) in per {
                let w = &weights[*wi];
                l.push(left_factor(&h, profile, sst, w)?);
                let t0 = preimages(sst, w).into_iter().next().ok_or_else(|| Error::Internal(format!("{sst} has no preimage")))?;
                r.push((shift(profile, &t0)?, stabilizer_factor(sst, profile)));
            }
            debug_assert_eq!(l.len(), tableaux[lam_i].len());
            left.push(l);
            right.push(r);
        }

        let mut labels = Vec::new();
        let mut images = Vec::new();
        let (mut shape_of, mut source_of, mut target_of) = (Vec::new(), Vec::new(), Vec::new());
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut label_index = HashMap::new();
        for (lam_i, per) in tableaux.iter().enumerate() {
            for (a, (s, ws)) in per.iter().enumerate() {
                for (b, (t, wt)) in per.iter().enumerate() {
                    let (e, p) = &right[lam_i][b];
                    let prod = h.mul(&h.right_t_w(&left[lam_i][a], e), &sym[*wt]);
                    let img = divide(&prod, p)?;
                    let idx = labels.len();
                    labels.push(SchurBasisLabel {
                        shape: shapes[lam_i].clone(),
                        s: s.clone(),
                        t: t.clone(),
                        target: weights[*ws].clone(),
                        source: weights[*wt].clone(),
                    });
                    images.push(img);
                    shape_of.push(lam_i);
                    target_of.push(*ws);
                    source_of.push(*wt);
                    blocks.entry((*ws, *wt)).or_default().push(idx);
                    label_index.insert((lam_i, a, b), idx);
                }
            }
        }
        Ok(SchurAlgebra {
            profile: profile.clone(),
            weights,
            shapes,
            labels,
            h,
            generators,
            images,
            shape_of,
            source_of,
            target_of,
            blocks,
            tableaux,
            label_index,
            cofactors: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
        })
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `Σ_λ (Σ_{μ|ν} |std(λ, μ|ν)|)²`, from counting alone.
    pub fn dimension_formula(&self) -> usize {
        self.tableaux.iter().map(|t| t.len() * t.len()).sum()
    }

    /// `m_ST`.
    pub fn m_st(&self, i: usize) -> &HeckeElement {
        &self.images[i]
    }

    pub fn generator(&self, weight: usize) -> &HeckeElement {
        &self.generators[weight]
    }

    /// Index of `φ*`.
    pub fn star_label(&self, i: usize) -> usize {
        let lam = self.shape_of[i];
        let per = &self.tableaux[lam];
        let a = per.iter().position(|(s, _)| *s == self.labels[i].s).expect("label tableau");
        let b = per.iter().position(|(s, _)| *s == self.labels[i].t).expect("label tableau");
        self.label_index[&(lam, b, a)]
    }

    pub fn star(&self, x: &SchurElement) -> SchurElement {
        SchurElement { coeffs: x.coeffs.iter().map(|(&i, c)| (self.star_label(i), c.clone())).collect() }
    }

    /// Position of a shape in the cell order (0 is highest).
    pub fn shape_rank(&self, i: usize) -> usize {
        self.shape_of[i]
    }

    /// Index of `φ_λ = φ_{T^λ T^λ}`, if `λ_♯|λ_*` is among the weights.
    pub fn phi_lambda(&self, lam: &Multipartition) -> Result<usize> {
        let li = self.shapes.iter().position(|l| l == lam).ok_or_else(|| Error::InvalidInput(format!("{lam} is not a shape of this algebra")))?;
        let w = self.profile.split(lam)?;
        let wi = self.weights.iter().position(|x| *x == w).ok_or_else(|| Error::InvalidInput(format!("weight {w} not in the weight set")))?;
        let a = self.tableaux[li].iter().position(|(_, x)| *x == wi).ok_or_else(|| Error::Internal("T^λ missing".into()))?;
        Ok(self.label_index[&(li, a, a)])
    }

    /// `k` with `m_μ k = m_ST` for the target weight `μ`, as `(N, d)` with
    /// `k = N/d` over the standard basis.
    fn cofactor(&self, j: usize) -> Result<(Vec<P>, P)> {
        if let Some(v) = self.cofactors.read().unwrap().get(&j) {
            return Ok(v.clone());
        }
        let g = &self.generators[self.target_of[j]];
        let dim = self.h.dim();
        let cols: Vec<Vec<P>> = (0..dim).map(|l| self.h.mul(g, &self.h.basis_label(l)).coords(dim)).collect();
        let matrix: Vec<Vec<P>> = (0..dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let sol = fraction_solve(&matrix, &self.images[j].coords(dim))
            .ok_or_else(|| Error::Internal(format!("m_ST #{j} is not in the permutation module of its target weight")))?;
        let out = (sol.numerators, sol.denominator);
        self.cofactors.write().unwrap().insert(j, out.clone());
        Ok(out)
    }

    /// Coordinates of `num/den ∈ Hom(M^source, M^target)` in the block basis.
    fn express(&self, target: usize, source: usize, num: &HeckeElement, den: &P) -> Result<SchurElement> {
        if num.is_zero() {
            return Ok(SchurElement::zero());
        }
        let dim = self.h.dim();
        let block = self.blocks.get(&(target, source)).cloned().unwrap_or_default();
        let cols: Vec<Vec<P>> = block.iter().map(|&i| self.images[i].coords(dim)).collect();
        let matrix: Vec<Vec<P>> = (0..dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let sol = fraction_solve(&matrix, &num.coords(dim)).ok_or_else(|| Error::Internal("composition is not expressible in the φ basis".into()))?;
        let d = &sol.denominator * den;
        let coeffs = block
            .iter()
            .zip(sol.numerators)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&i, c)| (i, RationalFunction::new(c, d.clone())))
            .collect();
        Ok(SchurElement { coeffs })
    }

    /// `φ_i ∘ φ_j`.
    pub fn compose_basis(&self, i: usize, j: usize) -> Result<SchurElement> {
        if self.source_of[i] != self.target_of[j] {
            return Ok(SchurElement::zero());
        }
        if let Some(v) = self.products.read().unwrap().get(&(i, j)) {
            return Ok(v.clone());
        }
        let (k, d) = self.cofactor(j)?;
        let mut num = self.h.zero();
        for (l, c) in k.iter().enumerate() {
            if !c.is_zero() {
                num = num.add(&self.h.mul(&self.images[i], &self.h.basis_label(l)).scale(c));
            }
        }
        let out = self.express(self.target_of[i], self.source_of[j], &num, &d)?;
        self.products.write().unwrap().insert((i, j), out.clone());
        Ok(out)
    }

    /// `f ∘ g`.
    pub fn compose(&self, f: &SchurElement, g: &SchurElement) -> Result<SchurElement> {
        let mut out = SchurElement::zero();
        for (&i, a) in &f.coeffs {
            for (&j, b) in &g.coeffs {
                let p = self.compose_basis(i, j)?;
                out.add_scaled(&p, &(a * b));
            }
        }
        Ok(out)
    }

    /// Parity of a homogeneous element; `None` for zero or mixed elements.
    pub fn parity(&self, x: &SchurElement) -> Option<u8> {
        let mut ps = x.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(&i, _)| self.labels[i].parity());
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    /// Exact rank of the `m_ST` within every block; equals `dim` iff the
    /// `φ_ST` are linearly independent.
    pub fn basis_rank(&self) -> usize {
        let dim = self.h.dim();
        self.blocks.values().map(|b| poly_rank(&b.iter().map(|&i| self.images[i].coords(dim)).collect::<Vec<_>>())).sum()
    }

    /// Every `m_ST` lies in `m_μ H ∩ H m_α`.
    pub fn membership_check(&self) -> Result<bool> {
        for j in 0..self.dim() {
            self.cofactor(j)?;
            let star = self.h.star(&self.images[j]);
            if star != self.images[self.star_label(j)] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Verifies the three cellular axioms over all composable basis pairs.
    pub fn cellularity_check(&self) -> Result<CellularityReport> {
        let n = self.dim();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| self.source_of[i] == self.target_of[j]).collect();
        let results: Vec<Result<((usize, usize), SchurElement)>> = pairs.par_iter().map(|&(i, j)| Ok(((i, j), self.compose_basis(i, j)?))).collect();
        let mut prod: HashMap<(usize, usize), SchurElement> = HashMap::new();
        for r in results {
            let (k, v) = r?;
            prod.insert(k, v);
        }
        let mut rep = CellularityReport { products: prod.len(), ..Default::default() };
        for (&(i, j), p) in &prod {
            // (a) (φ_i φ_j)* = φ_j* φ_i*
            let rhs = &prod[&(self.star_label(j), self.star_label(i))];
            if !self.star(p).equals(rhs) {
                rep.star_violations.push(format!("({i},{j})"));
            }
            // (c) products stay at or above both factors
            let floor = self.shape_of[i].min(self.shape_of[j]);
            for (&k, c) in &p.coeffs {
                if !c.is_zero() && self.shape_of[k] > floor {
                    rep.ideal_violations.push(format!("φ{i}∘φ{j} has φ{k}"));
                }
            }
        }
        // (b) φ_ST ∘ φ ≡ Σ_U r_U φ_SU mod S̄_λ, r_U independent of S
        for j in 0..n {
            let mut seen: HashMap<(usize, usize), Vec<(usize, RationalFunction)>> = HashMap::new();
            for i in (0..n).filter(|&i| self.source_of[i] == self.target_of[j]) {
                let lam = self.shape_of[i];
                let s = &self.labels[i].s;
                let mut r: Vec<(usize, RationalFunction)> = Vec::new();
                for (&k, c) in &prod[&(i, j)].coeffs {
                    if c.is_zero() || self.shape_of[k] < lam {
                        continue;
                    }
                    if self.shape_of[k] > lam || self.labels[k].s != *s {
                        rep.independence_violations.push(format!("φ{i}∘φ{j} has φ{k} outside row S"));
                        continue;
                    }
                    let u = self.tableaux[lam].iter().position(|(x, _)| *x == self.labels[k].t).expect("tableau");
                    r.push((u, c.clone()));
                }
                r.sort_by_key(|x| x.0);
                let t = self.tableaux[lam].iter().position(|(x, _)| *x == self.labels[i].t).expect("tableau");
                match seen.get(&(lam, t)) {
                    Some(prev) => {
                        let same = prev.len() == r.len() && prev.iter().zip(&r).all(|(a, b)| a.0 == b.0 && a.1.equals(&b.1));
                        if !same {
                            rep.independence_violations.push(format!("r_U of φ{i}∘φ{j} depends on S"));
                        }
                    }
                    None => {
                        seen.insert((lam, t), r);
                    }
                }
            }
        }
        Ok(rep)
    }

    /// Weyl module basis `{φ_S}` and the Gram matrix of `λ`.
    pub fn gram(&self, lam: &Multipartition) -> Result<GramMatrix> {
        let li = self.shapes.iter().position(|l| l == lam).ok_or_else(|| Error::InvalidInput(format!("{lam} has no semistandard tableaux here")))?;
        let phi = self.phi_lambda(lam)?;
        let a0 = self.tableaux[li].iter().position(|(_, w)| *w == self.target_of[phi]).expect("T^λ");
        let per = &self.tableaux[li];
        let mut entries = vec![vec![P::zero(); per.len()]; per.len()];
        for (a, row) in entries.iter_mut().enumerate() {
            for (b, e) in row.iter_mut().enumerate() {
                // φ_{T^λ S} ∘ φ_{T T^λ}
                let x = self.label_index[&(li, a0, a)];
                let y = self.label_index[&(li, b, a0)];
                let c = self.compose_basis(x, y)?.coefficient(phi);
                *e = c.as_poly().ok_or_else(|| Error::Internal(format!("Gram entry {c} is not integral")))?;
            }
        }
        Ok(GramMatrix { shape: lam.clone(), index: per.iter().map(|(s, w)| (s.clone(), self.weights[*w].clone())).collect(), entries })
    }

    /// `λ ↦ dim F^λ` at `target`.
    pub fn simple_dims(&self, target: &SpecializationTarget) -> Result<BTreeMap<Multipartition, usize>> {
        self.shapes.iter().map(|lam| Ok((lam.clone(), self.gram(lam)?.rank_at(target)?))).collect()
    }

    /// Basis vectors of every `M^{μ|ν}` as `(weight, m_St)` pairs.
    fn module_basis(&self) -> Result<Vec<Vec<HeckeElement>>> {
        self.weights
            .iter()
            .map(|w| Ok(crate::supermod::PermSupermodule::new(&self.h, &self.profile, w)?.basis))
            .collect()
    }

    /// Dimensions of `End_H(V)` and `End_S(V)` at `target`, `V = ⊕ M^{μ|ν}`.
    pub fn double_centralizer_check(&self, target: &SpecializationTarget) -> Result<DualityReport> {
        let bases = self.module_basis()?;
        let h = &self.h;
        let dim = h.dim();
        // coordinates of m b for every basis vector m and every basis label b
        let mut images: Vec<Vec<Vec<Vec<P>>>> = Vec::new();
        for basis in &bases {
            images.push(basis.par_iter().map(|m| (0..dim).map(|l| h.mul(m, &h.basis_label(l)).coords(dim)).collect()).collect());
        }
        let basis_coords: Vec<Vec<Vec<P>>> = bases.iter().map(|b| b.iter().map(|m| m.coords(dim)).collect()).collect();
        struct V<'a> {
            basis: &'a [Vec<Vec<P>>],
            images: &'a [Vec<Vec<Vec<P>>>],
            dim: usize,
        }
        impl PointVisitor for V<'_> {
            type Output = Result<(usize, usize, usize, usize)>;
            fn visit<F: Field>(self, pt: Point<F>) -> Self::Output {
                let zero = pt.q.zero();
                // action matrices ρ_w(b)[row=out coord][col=in vector]
                let mut rho: Vec<Vec<Vec<Vec<F>>>> = Vec::new(); // [w][b] -> r×r
                for (w, bas) in self.basis.iter().enumerate() {
                    let r = bas.len();
                    let bmat: Vec<Vec<F>> = bas.iter().map(|v| v.iter().map(|x| pt.eval(x)).collect()).collect();
                    let mut per_b = Vec::new();
                    for l in 0..self.dim {
                        let mut m = vec![vec![zero.clone(); r]; r];
                        for (col, img) in self.images[w].iter().enumerate() {
                            let target: Vec<F> = img[l].iter().map(|x| pt.eval(x)).collect();
                            let x = solve_rows(&bmat, &target).ok_or_else(|| Error::Internal("module not closed under H".into()))?;
                            for (row, v) in x.into_iter().enumerate() {
                                m[row][col] = v;
                            }
                        }
                        per_b.push(m);
                    }
                    rho.push(per_b);
                }
                let sizes: Vec<usize> = self.basis.iter().map(|b| b.len()).collect();
                // commutant, block by block: X ρ_α(b) = ρ_μ(b) X for X: M^α → M^μ
                let mut commutant: Vec<(usize, usize, Vec<Vec<F>>)> = Vec::new();
                for mu in 0..sizes.len() {
                    for al in 0..sizes.len() {
                        let (rm, ra) = (sizes[mu], sizes[al]);
                        let mut eqs = Vec::new();
                        for l in 0..self.dim {
                            let (a, b) = (&rho[al][l], &rho[mu][l]);
                            for i in 0..rm {
                                for j in 0..ra {
                                    let mut row = vec![zero.clone(); rm * ra];
                                    for k in 0..ra {
                                        row[i * ra + k] = row[i * ra + k].add(&a[k][j]);
                                    }
                                    for k in 0..rm {
                                        row[k * ra + j] = row[k * ra + j].sub(&b[i][k]);
                                    }
                                    eqs.push(row);
                                }
                            }
                        }
                        for v in field_nullspace(&eqs, rm * ra, &zero) {
                            let x = (0..rm).map(|i| v[i * ra..(i + 1) * ra].to_vec()).collect();
                            commutant.push((mu, al, x));
                        }
                    }
                }
                // image of H: block-diagonal matrices, flattened
                let flat: Vec<Vec<F>> = (0..self.dim)
                    .map(|l| rho.iter().flat_map(|per_b| per_b[l].iter().flatten().cloned()).collect())
                    .collect();
                let h_rank = field_rank(&flat);
                // bicommutant: block-diagonal Y (commutes with the weight
                // projections) with Y_μ X = X Y_α for every commutant X
                let offsets: Vec<usize> = sizes.iter().scan(0, |acc, &r| {
                    let o = *acc;
                    *acc += r * r;
                    Some(o)
                }).collect();
                let unknowns: usize = sizes.iter().map(|r| r * r).sum();
                let mut eqs = Vec::new();
                for (mu, al, x) in &commutant {
                    let (rm, ra) = (sizes[*mu], sizes[*al]);
                    for i in 0..rm {
                        for j in 0..ra {
                            let mut row = vec![zero.clone(); unknowns];
                            for k in 0..rm {
                                let idx = offsets[*mu] + i * rm + k;
                                row[idx] = row[idx].add(&x[k][j]);
                            }
                            for k in 0..ra {
                                let idx = offsets[*al] + k * ra + j;
                                row[idx] = row[idx].sub(&x[i][k]);
                            }
                            eqs.push(row);
                        }
                    }
                }
                let bicommutant = unknowns - field_rank(&eqs);
                Ok((sizes.iter().sum(), commutant.len(), h_rank, bicommutant))
            }
        }
        let (dim_v, commutant_dim, hecke_image_rank, bicommutant_dim) = target.visit(V { basis: &basis_coords, images: &images, dim })??;
        Ok(DualityReport {
            dim_v,
            dim_schur: self.dim(),
            commutant_dim,
            dim_hecke: dim,
            hecke_image_rank,
            bicommutant_dim,
            faithful: hecke_image_rank == dim,
        })
    }
}

/// Solve `Σ_i x_i rows[i] = target`.
fn solve_rows<F: Field>(rows: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let r = rows.len();
    let zero = target.first().map(|x| x.zero())?;
    // augmented system with columns = rows
    let mut m: Vec<Vec<F>> = (0..target.len())
        .map(|c| {
            let mut v: Vec<F> = rows.iter().map(|row| row[c].clone()).collect();
            v.push(target[c].clone());
            v
        })
        .collect();
    let pivots = crate::ring::field::row_reduce(&mut m);
    if pivots.contains(&r) {
        return None;
    }
    let mut x = vec![zero; r];
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = m[k][r].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(bk: &[usize], bl: &[usize], n: usize) -> SchurAlgebra {
        SchurAlgebra::new(&HookProfile::new(bk.to_vec(), bl.to_vec()).unwrap(), n).unwrap()
    }

    #[test]
    fn dimension_and_independence() {
        for (bk, bl, n) in [(vec![1], vec![1], 2), (vec![1, 1], vec![1, 0], 2), (vec![1, 1], vec![1, 1], 2)] {
            let s = algebra(&bk, &bl, n);
            assert_eq!(s.dim(), s.dimension_formula());
            assert_eq!(s.basis_rank(), s.dim());
            assert!(s.membership_check().unwrap());
        }
    }

    #[test]
    fn classical_dimension() {
        // S_q(3,3) has dimension C(3² + 3 - 1, 3)
        let s = algebra(&[3], &[0], 3);
        assert_eq!(s.dim(), 165);
        assert_eq!(s.dimension_formula(), 165);
    }

    #[test]
    fn phi_lambda_is_identity() {
        let s = algebra(&[1, 1], &[1, 1], 2);
        for lam in s.shapes.clone() {
            let i = s.phi_lambda(&lam).unwrap();
            let w = s.source_of[i];
            assert_eq!(s.m_st(i), s.generator(w));
            let sq = s.compose_basis(i, i).unwrap();
            assert!(sq.equals(&SchurElement::basis(i)));
        }
    }

    #[test]
    fn cellular_small() {
        let s = algebra(&[1], &[1], 2);
        let rep = s.cellularity_check().unwrap();
        assert!(rep.passed(), "{rep:?}");
    }
}

//! Compositions, partitions, their m-tuples, dominance, hook conditions and
//! the weight sets attached to a hook profile.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Transpose of the Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let first = p.part(1);
    Partition((1..=first).map(|j| p.0.iter().filter(|&&r| r >= j).count()).collect())
}

/// All partitions of `n`, in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` with exactly `k` (possibly zero) parts, in
/// descending lexicographic order.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if k == 1 {
            cur.push(n);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=n).rev() {
            cur.push(p);
            rec(n - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// An m-tuple of compositions. Zero parts are kept: they address symbol
/// slots in weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicomposition(pub Vec<Vec<usize>>);

impl Multicomposition {
    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().flatten().sum()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.0.iter().map(|c| c.iter().sum()).collect()
    }

    /// `(1^{|μ^(1)|}; …; 1^{|μ^(m)|})`.
    pub fn tilde(&self) -> Multicomposition {
        Multicomposition(self.component_sizes().into_iter().map(|s| vec![1; s]).collect())
    }

    /// The rows as `(component, row, length)` in node order.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(c, comp)| comp.iter().enumerate().map(move |(r, &len)| (c, r, len)))
    }
}

impl fmt::Display for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> =
            self.0.iter().map(|c| format!("({})", c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))).collect();
        write!(f, "({})", comps.join(";"))
    }
}

impl FromStr for Multicomposition {
    type Err = Error;
    /// Parses the display form, e.g. `((2,1);();(0,3))`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad multicomposition '{s}'"));
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let comps = inner
            .split(';')
            .map(|c| {
                let c = c.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                if c.trim().is_empty() {
                    return Ok(Vec::new());
                }
                c.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multicomposition(comps))
    }
}

/// An m-tuple of partitions. Serializes as nested arrays, e.g.
/// `[[3,2],[1,1],[2,1]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Multipartition(Vec<Partition>);

impl TryFrom<Vec<Vec<usize>>> for Multipartition {
    type Error = Error;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self> {
        Multipartition::new(v)
    }
}

impl From<Multipartition> for Vec<Vec<usize>> {
    fn from(m: Multipartition) -> Self {
        m.0.into_iter().map(|p| p.0).collect()
    }
}

impl Multipartition {
    pub fn new(comps: Vec<Vec<usize>>) -> Result<Self> {
        Ok(Multipartition(comps.into_iter().map(Partition::new).collect::<Result<_>>()?))
    }

    pub fn from_partitions(comps: Vec<Partition>) -> Self {
        Multipartition(comps)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.0[c]
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn as_multicomposition(&self) -> Multicomposition {
        Multicomposition(self.0.iter().map(|p| p.0.clone()).collect())
    }

    /// `a_i = Σ_{j<i} |λ^(j)|`, 0-based components.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|p| {
                let a = acc;
                acc += p.size();
                a
            })
            .collect()
    }

    /// Nodes `(component, row, column)`, 0-based, in canonical order.
    pub fn nodes(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (c, p) in self.0.iter().enumerate() {
            for (r, &len) in p.0.iter().enumerate() {
                for col in 0..len {
                    out.push((c, r, col));
                }
            }
        }
        out
    }

    /// The cumulative partial sums that define dominance, one block of `n`
    /// entries per component.
    pub fn partial_sums(&self) -> Vec<usize> {
        partial_sums(&self.as_multicomposition(), self.size())
    }
}

impl FromStr for Multipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Multipartition::new(s.parse::<Multicomposition>()?.0)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.as_multicomposition(), f)
    }
}

fn partial_sums(a: &Multicomposition, n: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.m() * n.max(1));
    let mut before = 0;
    for comp in &a.0 {
        let mut acc = before;
        for j in 0..n.max(1) {
            acc += comp.get(j).copied().unwrap_or(0);
            out.push(acc);
        }
        before += comp.iter().sum::<usize>();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// Dominance between multicompositions of the same size and length.
pub fn dominance_mc(a: &Multicomposition, b: &Multicomposition) -> Result<Dominance> {
    if a.size() != b.size() || a.m() != b.m() {
        return Err(Error::InvalidInput("dominance needs equal sizes and component counts".into()));
    }
    let n = a.size().max(a.0.iter().chain(&b.0).map(Vec::len).max().unwrap_or(0));
    let (sa, sb) = (partial_sums(a, n), partial_sums(b, n));
    let ge = sa.iter().zip(&sb).all(|(x, y)| x >= y);
    let le = sa.iter().zip(&sb).all(|(x, y)| x <= y);
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    })
}

pub fn dominance(a: &Multipartition, b: &Multipartition) -> Result<Dominance> {
    dominance_mc(&a.as_multicomposition(), &b.as_multicomposition())
}

/// Total order refining dominance: dominant shapes first.
pub fn shape_order(a: &Multipartition, b: &Multipartition) -> Ordering {
    b.partial_sums().cmp(&a.partial_sums())
}

/// `λ_{k+1} ≤ l`.
pub fn hook_test(p: &Partition, k: usize, l: usize) -> bool {
    p.part(k + 1) <= l
}

/// `λ ↦ (λ_♯, λ_*)` with `λ_♯ = (λ_1..λ_k)` and `λ_*` the conjugate of the
/// rows below row `k`.
pub fn hook_split(p: &Partition, k: usize, l: usize) -> Result<(Partition, Partition)> {
    if !hook_test(p, k, l) {
        return Err(Error::InvalidInput(format!("{p} is not a ({k},{l})-hook partition")));
    }
    let sharp = Partition::new(p.0.iter().take(k).copied().collect())?;
    let rest = Partition::new(p.0.iter().skip(k).copied().collect())?;
    Ok((sharp, conjugate(&rest)))
}

/// Inverse of [`hook_split`]; requires the pair to satisfy `μ_k ≥ ℓ(ν)`
/// (no constraint when `k = 0`) and `ℓ(μ) ≤ k`, `ν_1 ≤ … ` fits `l` columns.
pub fn hook_join(sharp: &Partition, star: &Partition, k: usize, l: usize) -> Result<Partition> {
    if sharp.len() > k || star.len() > l {
        return Err(Error::InvalidInput(format!("{sharp}|{star} does not fit ({k}|{l})")));
    }
    if !in_p_plus(sharp, star, k) {
        return Err(Error::InvalidInput(format!("{sharp}|{star} violates the hook condition")));
    }
    let mut parts = sharp.0.clone();
    parts.extend(conjugate(star).0);
    Partition::new(parts)
}

/// Membership in `P^+(k|l)`: `μ_k ≥ ℓ(ν)`, reading `μ_0` as infinite.
pub fn in_p_plus(sharp: &Partition, star: &Partition, k: usize) -> bool {
    k == 0 || sharp.part(k) >= star.len()
}

/// `(k_1..k_m | l_1..l_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookProfile {
    pub bk: Vec<usize>,
    pub bl: Vec<usize>,
}

impl fmt::Display for HookProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bk.iter().zip(&self.bl).map(|(k, l)| format!("{k}|{l}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl HookProfile {
    pub fn new(bk: Vec<usize>, bl: Vec<usize>) -> Result<Self> {
        if bk.len() != bl.len() || bk.is_empty() {
            return Err(Error::InvalidInput("bk and bl must have the same positive length".into()));
        }
        if bk.iter().sum::<usize>() + bl.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidInput("need k + l > 0".into()));
        }
        Ok(HookProfile { bk, bl })
    }

    pub fn m(&self) -> usize {
        self.bk.len()
    }

    pub fn k(&self) -> usize {
        self.bk.iter().sum()
    }

    pub fn l(&self) -> usize {
        self.bl.iter().sum()
    }

    /// `d_i = d_{i-1} + k_i + l_i`, `d_0 = 0`.
    pub fn d(&self, i: usize) -> usize {
        (0..i).map(|j| self.bk[j] + self.bl[j]).sum()
    }

    /// `c(i) = a` when `d_{a-1} < i ≤ d_a` (1-based `i` and colors).
    pub fn color(&self, i: usize) -> Option<usize> {
        (1..=self.m()).find(|&a| self.d(a - 1) < i && i <= self.d(a))
    }

    pub fn is_hook(&self, lam: &Multipartition) -> bool {
        lam.m() == self.m() && lam.0.iter().enumerate().all(|(c, p)| hook_test(p, self.bk[c], self.bl[c]))
    }

    /// Whether component `c` is a `(k_c + … + k_m, l_c + … + l_m)`-hook for
    /// every `c`: exactly the shapes carrying some semistandard tableau,
    /// since component `c` may use every color from `c` on.
    pub fn is_cumulative_hook(&self, lam: &Multipartition) -> bool {
        lam.m() == self.m()
            && lam.0.iter().enumerate().all(|(c, p)| {
                hook_test(p, self.bk[c..].iter().sum(), self.bl[c..].iter().sum())
            })
    }

    /// `λ ↦ λ_♯|λ_*`, padded to the slot counts of the profile.
    pub fn split(&self, lam: &Multipartition) -> Result<WeightPair> {
        if lam.m() != self.m() {
            return Err(Error::InvalidInput("component count mismatch".into()));
        }
        let mut mu = Vec::new();
        let mut nu = Vec::new();
        for (c, p) in lam.0.iter().enumerate() {
            let (s, t) = hook_split(p, self.bk[c], self.bl[c])?;
            let mut a = s.0;
            a.resize(self.bk[c], 0);
            let mut b = t.0;
            if b.len() > self.bl[c] {
                return Err(Error::InvalidInput(format!("{lam} is not a hook multipartition")));
            }
            b.resize(self.bl[c], 0);
            mu.push(a);
            nu.push(b);
        }
        WeightPair::new(Multicomposition(mu), Multicomposition(nu), self)
    }
}

/// A weight `μ|ν` with `μ^(i)` of length `k_i` and `ν^(i)` of length `l_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightPair {
    pub mu: Multicomposition,
    pub nu: Multicomposition,
}

impl WeightPair {
    pub fn new(mu: Multicomposition, nu: Multicomposition, profile: &HookProfile) -> Result<Self> {
        let w = WeightPair { mu, nu };
        w.check(profile)?;
        Ok(w)
    }

    pub fn check(&self, profile: &HookProfile) -> Result<()> {
        let ok = self.mu.m() == profile.m()
            && self.nu.m() == profile.m()
            && self.mu.0.iter().zip(&profile.bk).all(|(c, &k)| c.len() == k)
            && self.nu.0.iter().zip(&profile.bl).all(|(c, &l)| c.len() == l);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("weight {self} does not match profile {:?}|{:?}", profile.bk, profile.bl)))
        }
    }

    pub fn size(&self) -> usize {
        self.mu.size() + self.nu.size()
    }

    /// `|ν| mod 2`.
    pub fn parity(&self) -> u8 {
        (self.nu.size() % 2) as u8
    }

    pub fn vee(&self) -> Multicomposition {
        vee(&self.mu, &self.nu).expect("weight components match")
    }

    /// `μ* = μ|ν̃`: the composition whose rows are the `μ`-rows followed by
    /// singleton rows for every `ν`-node, per component.
    pub fn mu_star(&self) -> Multicomposition {
        Multicomposition(
            self.mu.0.iter().zip(&self.nu.0).map(|(a, b)| a.iter().copied().chain(std::iter::repeat_n(1, b.iter().sum())).collect()).collect(),
        )
    }

    /// `ν_* = μ̃|ν`.
    pub fn nu_star(&self) -> Multicomposition {
        Multicomposition(
            self.mu.0.iter().zip(&self.nu.0).map(|(a, b)| std::iter::repeat_n(1, a.iter().sum()).chain(b.iter().copied()).collect()).collect(),
        )
    }
}

impl FromStr for WeightPair {
    type Err = Error;
    /// Parses `μ|ν` in display form; use [`WeightPair::check`] against a
    /// profile afterwards.
    fn from_str(s: &str) -> Result<Self> {
        let (mu, nu) = s.split_once('|').ok_or_else(|| Error::Parse(format!("bad weight '{s}'")))?;
        Ok(WeightPair { mu: mu.parse()?, nu: nu.parse()? })
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.mu, self.nu)
    }
}

/// Componentwise concatenation `μ∨ν`.
pub fn vee(a: &Multicomposition, b: &Multicomposition) -> Result<Multicomposition> {
    if a.m() != b.m() {
        return Err(Error::InvalidInput("vee needs the same number of components".into()));
    }
    Ok(Multicomposition(a.0.iter().zip(&b.0).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()))
}

/// All of `C(bk|bl;n)`, in descending lexicographic order of `μ∨ν`.
pub fn enumerate_weights(profile: &HookProfile, n: usize) -> Vec<WeightPair> {
    let slots: Vec<usize> = profile.bk.iter().zip(&profile.bl).map(|(k, l)| k + l).collect();
    let total: usize = slots.iter().sum();
    let mut out = Vec::new();
    for flat in compositions(n, total) {
        let mut mu = Vec::new();
        let mut nu = Vec::new();
        let mut pos = 0;
        for c in 0..profile.m() {
            mu.push(flat[pos..pos + profile.bk[c]].to_vec());
            pos += profile.bk[c];
            nu.push(flat[pos..pos + profile.bl[c]].to_vec());
            pos += profile.bl[c];
        }
        out.push(WeightPair { mu: Multicomposition(mu), nu: Multicomposition(nu) });
    }
    out
}

/// All multipartitions of `n` with `m` components, dominant first.
pub fn enumerate_multipartitions(m: usize, n: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    for sizes in compositions(n, m) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &s in &sizes {
            let ps = partitions(s);
            acc = acc.into_iter().flat_map(|pre| ps.iter().map(move |p| {
                let mut v = pre.clone();
                v.push(p.clone());
                v
            })).collect();
        }
        out.extend(acc.into_iter().map(Multipartition));
    }
    out.sort_by(shape_order);
    out
}

/// `H(bk|bl;n)`, dominant first.
pub fn enumerate_hook_multipartitions(profile: &HookProfile, n: usize) -> Vec<Multipartition> {
    enumerate_multipartitions(profile.m(), n).into_iter().filter(|l| profile.is_hook(l)).collect()
}

/// Shapes passing [`HookProfile::is_cumulative_hook`], dominant first.
pub fn enumerate_cumulative_hook_multipartitions(profile: &HookProfile, n: usize) -> Vec<Multipartition> {
    enumerate_multipartitions(profile.m(), n).into_iter().filter(|l| profile.is_cumulative_hook(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn display_forms_parse_back() {
        let a: Multicomposition = "((2,0);();(1))".parse().unwrap();
        assert_eq!(a, Multicomposition(vec![vec![2, 0], vec![], vec![1]]));
        assert_eq!(a.to_string().parse::<Multicomposition>().unwrap(), a);
        let lam: Multipartition = "((2,1);(1))".parse().unwrap();
        assert_eq!(lam.to_string(), "((2,1);(1))");
        assert!("((1,2))".parse::<Multipartition>().is_err());
        let w: WeightPair = "((1);(0))|((1);(0))".parse().unwrap();
        assert!(w.check(&HookProfile::new(vec![1, 1], vec![1, 1]).unwrap()).is_ok());
        assert_eq!(w.to_string(), "((1);(0))|((1);(0))");
    }

    fn mp(v: &[&[usize]]) -> Multipartition {
        Multipartition::new(v.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&p(&[4])), p(&[1, 1, 1, 1]));
        assert_eq!(conjugate(&p(&[2, 2, 1])), p(&[3, 2]));
        for n in 0..=8 {
            for l in partitions(n) {
                assert_eq!(conjugate(&conjugate(&l)), l);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance(&mp(&[&[2], &[1]]), &mp(&[&[1, 1], &[1]])).unwrap(), Dominance::Greater);
        let a = mp(&[&[2, 1], &[]]);
        assert_eq!(dominance(&a, &a).unwrap(), Dominance::Equal);
        assert!(dominance(&a, &mp(&[&[1], &[]])).is_err());
    }

    #[test]
    fn dominance_is_partial_order() {
        let all = enumerate_multipartitions(2, 4);
        for a in &all {
            for b in &all {
                let ab = dominance(a, b).unwrap();
                let ba = dominance(b, a).unwrap();
                let flipped = match ab {
                    Dominance::Greater => Dominance::Less,
                    Dominance::Less => Dominance::Greater,
                    x => x,
                };
                assert_eq!(ba, flipped);
                if ab == Dominance::Equal {
                    assert_eq!(a, b);
                }
                for c in &all {
                    let ge = |x, y| matches!(dominance(x, y).unwrap(), Dominance::Greater | Dominance::Equal);
                    if ge(a, b) && ge(b, c) {
                        assert!(ge(a, c));
                    }
                }
            }
        }
        // the enumeration order refines dominance
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(dominance(a, b).unwrap(), Dominance::Less);
            }
        }
    }

    #[test]
    fn hooks() {
        let l = p(&[3, 3, 2, 2, 1]);
        assert!(hook_test(&l, 2, 2));
        assert_eq!(hook_split(&l, 2, 2).unwrap(), (p(&[3, 3]), p(&[3, 2])));
        assert!(hook_test(&p(&[1, 1, 1]), 0, 1));
        assert!(!hook_test(&p(&[2, 1]), 0, 1));
        assert_eq!(hook_split(&p(&[3, 1]), 2, 0).unwrap(), (p(&[3, 1]), Partition::empty()));
        assert!(hook_split(&p(&[2, 2]), 0, 1).is_err());
    }

    #[test]
    fn hook_bijection() {
        for k in 0..=3 {
            for l in 0..=3 {
                for n in 0..=8 {
                    let hooks: Vec<Partition> = partitions(n).into_iter().filter(|x| hook_test(x, k, l)).collect();
                    let mut pplus = 0;
                    for n1 in 0..=n {
                        for a in partitions(n1).into_iter().filter(|a| a.len() <= k) {
                            for b in partitions(n - n1).into_iter().filter(|b| b.len() <= l) {
                                if in_p_plus(&a, &b, k) {
                                    pplus += 1;
                                    let j = hook_join(&a, &b, k, l).unwrap();
                                    assert_eq!(hook_split(&j, k, l).unwrap(), (a.clone(), b.clone()));
                                }
                            }
                        }
                    }
                    assert_eq!(hooks.len(), pplus, "k={k} l={l} n={n}");
                    for h in hooks {
                        let (a, b) = hook_split(&h, k, l).unwrap();
                        assert_eq!(hook_join(&a, &b, k, l).unwrap(), h);
                    }
                }
            }
        }
    }

    #[test]
    fn weights() {
        let prof = HookProfile::new(vec![1], vec![0]).unwrap();
        let w = enumerate_weights(&prof, 3);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].mu, Multicomposition(vec![vec![3]]));
        let prof = HookProfile::new(vec![1], vec![1]).unwrap();
        assert_eq!(enumerate_weights(&prof, 2).len(), 3);
        let prof = HookProfile::new(vec![1, 1], vec![1, 1]).unwrap();
        for n in 0..=6 {
            let ws = enumerate_weights(&prof, n);
            assert_eq!(ws.len(), compositions(n, 4).len());
            for w in &ws {
                w.check(&prof).unwrap();
                assert_eq!(w.size(), n);
            }
            let mut vs: Vec<_> = ws.iter().map(WeightPair::vee).collect();
            vs.dedup();
            assert_eq!(vs.len(), ws.len());
        }
    }

    #[test]
    fn vee_examples() {
        let a = Multicomposition(vec![vec![2]]);
        let b = Multicomposition(vec![vec![1]]);
        assert_eq!(vee(&a, &b).unwrap(), Multicomposition(vec![vec![2, 1]]));
        assert_eq!(vee(&a, &Multicomposition(vec![vec![]])).unwrap(), a);
    }

    #[test]
    fn hook_multipartitions() {
        let prof = HookProfile::new(vec![1, 1, 1], vec![1, 2, 3]).unwrap();
        let lam = mp(&[&[2, 1, 1], &[3, 2, 2, 1], &[4, 3, 1]]);
        assert!(prof.is_hook(&lam));
        let prof1 = HookProfile::new(vec![5], vec![0]).unwrap();
        assert_eq!(enumerate_hook_multipartitions(&prof1, 5).len(), 7);
        let prof2 = HookProfile::new(vec![1, 0], vec![1, 1]).unwrap();
        for n in 0..=6 {
            let fast = enumerate_hook_multipartitions(&prof2, n);
            let brute: Vec<_> = enumerate_multipartitions(2, n)
                .into_iter()
                .filter(|l| hook_test(l.component(0), 1, 1) && hook_test(l.component(1), 0, 1))
                .collect();
            assert_eq!(fast, brute);
        }
        let sp = prof.split(&lam).unwrap();
        assert_eq!(sp.mu, Multicomposition(vec![vec![2], vec![3], vec![4]]));
        assert_eq!(sp.nu, Multicomposition(vec![vec![2], vec![3, 2], vec![2, 1, 1]]));
    }

    #[test]
    fn json_forms() {
        let lam = mp(&[&[3, 2], &[1, 1], &[2, 1]]);
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[[3,2],[1,1],[2,1]]");
        let back: Multipartition = serde_json::from_str("[[3,2],[1,1],[2,1]]").unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Multipartition>("[[1,2]]").is_err());
        let prof = HookProfile::new(vec![1], vec![1]).unwrap();
        let w = WeightPair::new(Multicomposition(vec![vec![1]]), Multicomposition(vec![vec![2]]), &prof).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"mu":[[1]],"nu":[[2]]}"#);
        assert_eq!(w.parity(), 0);
    }
}

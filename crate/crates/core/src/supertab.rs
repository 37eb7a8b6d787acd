//! Colored even/odd symbols, semistandard super tableaux, types, and the
//! passage between standard tableaux and super tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combin::{Dominance, HookProfile, Multicomposition, Multipartition, WeightPair};
use crate::error::{Error, Result};
use crate::symm::{initial_tableau, tableau_dominance, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    X,
    Y,
}

/// `x_a^(c)` or `y_b^(c)`. Field order gives the total order
/// `x^(i) < y^(i) < x^(i+1)`, then by index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub color: usize,
    pub kind: Kind,
    pub index: usize,
}

impl Symbol {
    pub fn x(index: usize, color: usize) -> Self {
        Symbol { color, kind: Kind::X, index }
    }

    pub fn y(index: usize, color: usize) -> Self {
        Symbol { color, kind: Kind::Y, index }
    }

    pub fn is_x(&self) -> bool {
        self.kind == Kind::X
    }

    fn valid(&self, profile: &HookProfile) -> bool {
        self.color >= 1
            && self.color <= profile.m()
            && self.index >= 1
            && self.index <= if self.is_x() { profile.bk[self.color - 1] } else { profile.bl[self.color - 1] }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = if self.is_x() { 'x' } else { 'y' };
        write!(f, "{k}{}^{}", self.index, self.color)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad symbol '{s}'"));
        let (head, color) = s.split_once('^').ok_or_else(bad)?;
        let color: usize = color.parse().map_err(|_| bad())?;
        let kind = match head.chars().next() {
            Some('x') => Kind::X,
            Some('y') => Kind::Y,
            _ => return Err(bad()),
        };
        let index: usize = head[1..].parse().map_err(|_| bad())?;
        Ok(Symbol { color, kind, index })
    }
}

impl Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A filling of a multipartition diagram by symbols, stored in canonical
/// node order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperTableau {
    shape: Multipartition,
    filling: Vec<Symbol>,
}

impl SuperTableau {
    pub fn new(shape: Multipartition, filling: Vec<Symbol>) -> Result<Self> {
        if shape.size() != filling.len() {
            return Err(Error::InvalidInput("filling does not match shape".into()));
        }
        Ok(SuperTableau { shape, filling })
    }

    /// Build from rows of symbols, `rows[c][r]`.
    pub fn from_rows(rows: &[Vec<Vec<Symbol>>]) -> Result<Self> {
        let shape = Multipartition::new(rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect())?;
        Self::new(shape, rows.iter().flatten().flatten().copied().collect())
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn filling(&self) -> &[Symbol] {
        &self.filling
    }

    pub fn rows(&self) -> Vec<Vec<Vec<Symbol>>> {
        let mut it = self.filling.iter().copied();
        self.shape.components().iter().map(|p| p.parts().iter().map(|&len| it.by_ref().take(len).collect()).collect()).collect()
    }

    pub fn get(&self, node: (usize, usize, usize)) -> Option<Symbol> {
        let (c, r, col) = node;
        let comp = self.shape.components().get(c)?;
        if r >= comp.len() || col >= comp.parts()[r] {
            return None;
        }
        let before: usize = self.shape.components()[..c].iter().map(|p| p.size()).sum::<usize>()
            + comp.parts()[..r].iter().sum::<usize>();
        Some(self.filling[before + col])
    }

    /// Nodes holding x-symbols.
    pub fn x_nodes(&self) -> Vec<(usize, usize, usize)> {
        self.shape.nodes().into_iter().zip(&self.filling).filter(|(_, s)| s.is_x()).map(|(n, _)| n).collect()
    }
}

impl fmt::Display for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows()
            .iter()
            .map(|c| c.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / "))
            .collect();
        write!(f, "({})", comps.join(" | "))
    }
}

impl fmt::Debug for SuperTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nodes are keyed `"row,column,component"` (1-based) in canonical order.
impl Serialize for SuperTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.filling.len()))?;
        for ((c, r, col), sym) in self.shape.nodes().into_iter().zip(&self.filling) {
            map.serialize_entry(&format!("{},{},{}", r + 1, col + 1, c + 1), sym)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SuperTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, Symbol>::deserialize(d)?;
        let mut nodes = Vec::new();
        for (k, v) in raw {
            let parts: Vec<usize> =
                k.split(',').map(|x| x.trim().parse::<usize>()).collect::<std::result::Result<_, _>>().map_err(D::Error::custom)?;
            if parts.len() != 3 || parts.contains(&0) {
                return Err(D::Error::custom(format!("bad node key '{k}'")));
            }
            nodes.push(((parts[2] - 1, parts[0] - 1, parts[1] - 1), v));
        }
        nodes.sort();
        let m = nodes.iter().map(|((c, _, _), _)| c + 1).max().unwrap_or(0);
        let mut rows: Vec<Vec<Vec<Symbol>>> = vec![Vec::new(); m];
        for ((c, r, col), sym) in nodes {
            while rows[c].len() <= r {
                rows[c].push(Vec::new());
            }
            if rows[c][r].len() != col {
                return Err(D::Error::custom("nodes do not form a diagram"));
            }
            rows[c][r].push(sym);
        }
        SuperTableau::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// Whether `t` is `(bk,bl)`-semistandard: in each component `c` every
/// symbol has color at least `c`, rows and columns weakly increase in the
/// symbol order, no x repeats in a column and no y repeats in a row.
pub fn is_semistandard(t: &SuperTableau, profile: &HookProfile) -> bool {
    if t.shape.m() != profile.m() {
        return false;
    }
    let rows = t.rows();
    for (c, comp) in rows.iter().enumerate() {
        for (r, row) in comp.iter().enumerate() {
            for (j, &s) in row.iter().enumerate() {
                if !s.valid(profile) || s.color < c + 1 {
                    return false;
                }
                let left = if j > 0 { Some(row[j - 1]) } else { None };
                let above = if r > 0 { Some(comp[r - 1][j]) } else { None };
                if !adjacent_ok(left, above, s) {
                    return false;
                }
            }
        }
    }
    true
}

fn adjacent_ok(left: Option<Symbol>, above: Option<Symbol>, s: Symbol) -> bool {
    // rows and columns weakly increase in the total order; x is strict down
    // columns, y is strict along rows
    if s.is_x() {
        left.is_none_or(|l| l <= s) && above.is_none_or(|a| a < s)
    } else {
        left.is_none_or(|l| l < s) && above.is_none_or(|a| a <= s)
    }
}

/// The type `μ|ν`: multiplicities of every symbol.
pub fn type_of(t: &SuperTableau, profile: &HookProfile) -> Result<WeightPair> {
    let mut mu: Vec<Vec<usize>> = profile.bk.iter().map(|&k| vec![0; k]).collect();
    let mut nu: Vec<Vec<usize>> = profile.bl.iter().map(|&l| vec![0; l]).collect();
    for s in &t.filling {
        if !s.valid(profile) {
            return Err(Error::InvalidInput(format!("symbol {s} not in profile")));
        }
        let slot = if s.is_x() { &mut mu[s.color - 1] } else { &mut nu[s.color - 1] };
        slot[s.index - 1] += 1;
    }
    WeightPair::new(Multicomposition(mu), Multicomposition(nu), profile)
}

/// `T^{μ|ν}` as a map from entries of `t^{μ|ν}` to symbols:
/// `weight_symbols(w)[i-1]` is the symbol of entry `i`.
pub fn weight_symbols(weight: &WeightPair) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(weight.size());
    for c in 0..weight.mu.m() {
        for (a, &len) in weight.mu.0[c].iter().enumerate() {
            out.extend(std::iter::repeat_n(Symbol::x(a + 1, c + 1), len));
        }
        for (b, &len) in weight.nu.0[c].iter().enumerate() {
            out.extend(std::iter::repeat_n(Symbol::y(b + 1, c + 1), len));
        }
    }
    out
}

/// `t^{μ|ν}`, the row-reading tableau of `μ∨ν`.
pub fn weight_tableau(weight: &WeightPair) -> Tableau {
    initial_tableau(&weight.vee())
}

/// `μ|ν(s)`: replace each entry `i` of `s` with the symbol that `T^{μ|ν}`
/// puts in the node of `t^{μ|ν}` holding `i`.
pub fn apply_type(weight: &WeightPair, s: &Tableau) -> Result<SuperTableau> {
    if weight.size() != s.n() {
        return Err(Error::InvalidInput("weight and tableau sizes differ".into()));
    }
    let syms = weight_symbols(weight);
    let shape = Multipartition::new(s.shape().0.clone())?;
    SuperTableau::new(shape, s.entries().iter().map(|&e| syms[e - 1]).collect())
}

/// `row_s(i)`: `x_a^(c)` when `i` sits in row `a ≤ k_c` of component `c`,
/// else `y_b^(c)` for its column `b`.
pub fn row_function(s: &Tableau, i: usize, profile: &HookProfile) -> Symbol {
    let (c, r, col) = s.position(i);
    if r < profile.bk[c] {
        Symbol::x(r + 1, c + 1)
    } else {
        Symbol::y(col + 1, c + 1)
    }
}

/// All semistandard tableaux of the given shape and type.
pub fn enumerate_sstd(shape: &Multipartition, weight: &WeightPair, profile: &HookProfile) -> Vec<SuperTableau> {
    if shape.size() != weight.size() || shape.m() != profile.m() {
        return Vec::new();
    }
    let nodes = shape.nodes();
    // remaining multiplicity per distinct symbol
    let mut pool: BTreeMap<Symbol, usize> = BTreeMap::new();
    for s in weight_symbols(weight) {
        *pool.entry(s).or_default() += 1;
    }
    let index_of: BTreeMap<(usize, usize, usize), usize> = nodes.iter().enumerate().map(|(k, &n)| (n, k)).collect();
    let mut fill: Vec<Symbol> = Vec::with_capacity(nodes.len());
    let mut out = Vec::new();
    fn rec(
        k: usize,
        nodes: &[(usize, usize, usize)],
        index_of: &BTreeMap<(usize, usize, usize), usize>,
        pool: &mut BTreeMap<Symbol, usize>,
        fill: &mut Vec<Symbol>,
        shape: &Multipartition,
        out: &mut Vec<SuperTableau>,
    ) {
        if k == nodes.len() {
            out.push(SuperTableau { shape: shape.clone(), filling: fill.clone() });
            return;
        }
        let (c, r, col) = nodes[k];
        let left = if col > 0 { Some(fill[index_of[&(c, r, col - 1)]]) } else { None };
        let above = if r > 0 { Some(fill[index_of[&(c, r - 1, col)]]) } else { None };
        let candidates: Vec<Symbol> = pool.iter().filter(|(s, &cnt)| cnt > 0 && s.color > c).map(|(s, _)| *s).collect();
        for s in candidates {
            if !adjacent_ok(left, above, s) {
                continue;
            }
            *pool.get_mut(&s).unwrap() -= 1;
            fill.push(s);
            rec(k + 1, nodes, index_of, pool, fill, shape, out);
            fill.pop();
            *pool.get_mut(&s).unwrap() += 1;
        }
    }
    rec(0, &nodes, &index_of, &mut pool, &mut fill, shape, &mut out);
    out
}

/// `T^λ`: x-rows filled by their row symbol, y-columns by their column
/// symbol. The unique semistandard tableau of type `λ_♯|λ_*`.
pub fn hook_tableau(shape: &Multipartition, profile: &HookProfile) -> Result<SuperTableau> {
    if !profile.is_hook(shape) {
        return Err(Error::InvalidInput(format!("{shape} is not a hook multipartition")));
    }
    let rows: Vec<Vec<Vec<Symbol>>> = shape
        .components()
        .iter()
        .enumerate()
        .map(|(c, p)| {
            p.parts()
                .iter()
                .enumerate()
                .map(|(r, &len)| {
                    (0..len).map(|j| if r < profile.bk[c] { Symbol::x(r + 1, c + 1) } else { Symbol::y(j + 1, c + 1) }).collect()
                })
                .collect()
        })
        .collect();
    SuperTableau::from_rows(&rows)
}

/// The standard tableau whose x-rows are read along rows and whose y-part
/// is read down columns, component by component. It is the unique
/// preimage of `T^λ` under `λ_♯|λ_*`.
pub fn super_initial_tableau(shape: &Multipartition, profile: &HookProfile) -> Tableau {
    let mc = shape.as_multicomposition();
    let t = initial_tableau(&mc);
    let nodes = t.nodes();
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&k| {
        let (c, r, col) = nodes[k];
        if r < profile.bk[c] {
            (c, 0, r, col)
        } else {
            (c, 1, col, r)
        }
    });
    let mut entries = vec![0; nodes.len()];
    for (v, &k) in order.iter().enumerate() {
        entries[k] = v + 1;
    }
    Tableau::new(mc, entries).expect("a permutation of 1..n")
}

/// All standard `s` with `μ|ν(s) = S`.
pub fn preimages(sst: &SuperTableau, weight: &WeightPair) -> Vec<Tableau> {
    let syms = weight_symbols(weight);
    let n = syms.len();
    if sst.shape.size() != n {
        return Vec::new();
    }
    let mc = sst.shape.as_multicomposition();
    let rows: Vec<(usize, usize, usize)> = mc.rows().collect();
    let row_syms = sst.rows();
    let mut fill = vec![0usize; rows.len()];
    let mut seqs = Vec::new();
    let mut seq = Vec::with_capacity(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        syms: &[Symbol],
        rows: &[(usize, usize, usize)],
        row_syms: &[Vec<Vec<Symbol>>],
        fill: &mut Vec<usize>,
        seq: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == syms.len() {
            out.push(seq.clone());
            return;
        }
        for (ri, &(c, r, len)) in rows.iter().enumerate() {
            let j = fill[ri];
            if j == len || row_syms[c][r][j] != syms[i] {
                continue;
            }
            if r > 0 && fill[ri - 1] <= j {
                continue;
            }
            fill[ri] += 1;
            seq.push(ri);
            rec(i + 1, syms, rows, row_syms, fill, seq, out);
            seq.pop();
            fill[ri] -= 1;
        }
    }
    rec(0, &syms, &rows, &row_syms, &mut fill, &mut seq, &mut seqs);
    seqs.into_iter()
        .map(|s| {
            let mut re: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
            for (i, &ri) in s.iter().enumerate() {
                re[ri].push(i + 1);
            }
            Tableau::new(mc.clone(), re.into_iter().flatten().collect()).expect("standard filling")
        })
        .collect()
}

/// Greedy walk by the swaps `s ↦ s(i,i+1)` for `i, i+1` in one row of
/// `t^{μ|ν}`, moving up (`up = true`) or down in dominance until stuck.
fn walk(start: &Tableau, weight: &WeightPair, up: bool) -> Tableau {
    let syms = weight_symbols(weight);
    let mut s = start.clone();
    let mut block = vec![0usize; syms.len()];
    // entries in the same row of t^{μ|ν} share a block id
    let mut id = 0;
    let mut k = 0;
    for (_, _, len) in weight.vee().rows() {
        for _ in 0..len {
            block[k] = id;
            k += 1;
        }
        id += 1;
    }
    'outer: loop {
        let pos = s.positions();
        for i in 1..s.n() {
            if block[i - 1] != block[i] {
                continue;
            }
            let (a, b) = (pos[i - 1], pos[i]);
            if a.0 == b.0 && (a.1 == b.1 || a.2 == b.2) {
                continue;
            }
            // i+1 strictly earlier than i: swapping raises s in dominance
            let raises = (b.0, b.1) < (a.0, a.1);
            if raises == up {
                let swap = crate::symm::Permutation::simple(i, s.n());
                s = s.act(&swap);
                continue 'outer;
            }
        }
        return s;
    }
}

/// `(first(S), last(S))`, or `None` when `S` has no standard preimage.
pub fn first_last(sst: &SuperTableau, weight: &WeightPair) -> Option<(Tableau, Tableau)> {
    let start = preimages(sst, weight).into_iter().next()?;
    Some((walk(&start, weight, true), walk(&start, weight, false)))
}

/// Check of `first(S) ⊵ s ⊵ last(S)` over all preimages.
pub fn first_last_bounds_hold(sst: &SuperTableau, weight: &WeightPair) -> bool {
    let Some((f, l)) = first_last(sst, weight) else { return true };
    preimages(sst, weight).iter().all(|s| {
        matches!(tableau_dominance(&f, s), Ok(Dominance::Greater | Dominance::Equal))
            && matches!(tableau_dominance(s, &l), Ok(Dominance::Greater | Dominance::Equal))
    })
}

/// `(s_μ, s_ν)` for `μ|ν(s) = S`. In each component `s_μ` keeps the rows
/// of the x-nodes of `S` followed by one singleton row per y-entry, and
/// `s_ν` has one singleton row per x-entry followed by the rows of the
/// y-nodes; singleton rows are in increasing order.
pub fn split_tableau(s: &Tableau, sst: &SuperTableau, weight: &WeightPair) -> Result<(Tableau, Tableau)> {
    if &apply_type(weight, s)? != sst {
        return Err(Error::InvalidInput("tableau does not map to the given super tableau".into()));
    }
    let srows = s.rows();
    let trows = sst.rows();
    let mut mu_comps = Vec::new();
    let mut nu_comps = Vec::new();
    for (c, comp) in srows.iter().enumerate() {
        let mut xrows = Vec::new();
        let mut yrows = Vec::new();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (r, row) in comp.iter().enumerate() {
            let xr: Vec<usize> = row.iter().zip(&trows[c][r]).filter(|(_, y)| y.is_x()).map(|(e, _)| *e).collect();
            let yr: Vec<usize> = row.iter().zip(&trows[c][r]).filter(|(_, y)| !y.is_x()).map(|(e, _)| *e).collect();
            xs.extend(&xr);
            ys.extend(&yr);
            if !xr.is_empty() {
                xrows.push(xr);
            }
            if !yr.is_empty() {
                yrows.push(yr);
            }
        }
        xs.sort_unstable();
        ys.sort_unstable();
        let mut mu_c = xrows;
        mu_c.extend(ys.iter().map(|&e| vec![e]));
        let mut nu_c: Vec<Vec<usize>> = xs.iter().map(|&e| vec![e]).collect();
        nu_c.extend(yrows);
        mu_comps.push(mu_c);
        nu_comps.push(nu_c);
    }
    Ok((Tableau::from_rows(&mu_comps)?, Tableau::from_rows(&nu_comps)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::{enumerate_hook_multipartitions, enumerate_multipartitions, enumerate_weights};
    use crate::symm::enumerate_standard;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn st(rows: &[&[&[&str]]]) -> SuperTableau {
        SuperTableau::from_rows(&rows.iter().map(|c| c.iter().map(|r| r.iter().map(|s| sym(s)).collect()).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn symbol_order_and_text() {
        assert!(sym("x2^1") < sym("y1^1"));
        assert!(sym("y3^1") < sym("x1^2"));
        assert_eq!(sym("y2^3").to_string(), "y2^3");
        assert!("z1^1".parse::<Symbol>().is_err());
    }

    #[test]
    fn semistandard_example() {
        let prof = HookProfile::new(vec![2], vec![2]).unwrap();
        let t = st(&[&[&["x1^1", "x1^1", "x1^1"], &["x2^1", "y1^1", "y2^1"], &["y1^1", "y2^1"], &["y1^1", "y2^1"], &["y1^1"]]]);
        let s = st(&[&[&["x1^1", "x1^1", "x1^1"], &["x2^1", "y1^1", "x2^1"], &["y1^1", "y2^1"], &["y1^1", "y2^1"], &["y1^1"]]]);
        assert!(is_semistandard(&t, &prof));
        assert!(!is_semistandard(&s, &prof));
        let lam = Multipartition::new(vec![vec![3, 3, 2, 2, 1]]).unwrap();
        let th = hook_tableau(&lam, &prof).unwrap();
        let w = prof.split(&lam).unwrap();
        assert_eq!(enumerate_sstd(&lam, &w, &prof), vec![th.clone()]);
        assert_eq!(type_of(&th, &prof).unwrap(), w);
    }

    #[test]
    fn hook_tableau_example() {
        let prof = HookProfile::new(vec![1, 1, 1], vec![1, 2, 3]).unwrap();
        let lam = Multipartition::new(vec![vec![2, 1, 1], vec![3, 2, 2, 1], vec![4, 3, 1]]).unwrap();
        let th = hook_tableau(&lam, &prof).unwrap();
        let expected = st(&[
            &[&["x1^1", "x1^1"], &["y1^1"], &["y1^1"]],
            &[&["x1^2", "x1^2", "x1^2"], &["y1^2", "y2^2"], &["y1^2", "y2^2"], &["y1^2"]],
            &[&["x1^3", "x1^3", "x1^3", "x1^3"], &["y1^3", "y2^3", "y3^3"], &["y1^3"]],
        ]);
        assert_eq!(th, expected);
        assert!(is_semistandard(&th, &prof));
        let w = prof.split(&lam).unwrap();
        assert_eq!(enumerate_sstd(&lam, &w, &prof).len(), 1);
    }

    #[test]
    fn uniqueness_of_hook_tableau() {
        for (bk, bl) in [(vec![1], vec![1]), (vec![1, 1], vec![1, 0]), (vec![0, 1], vec![1, 1]), (vec![2], vec![1])] {
            let prof = HookProfile::new(bk, bl).unwrap();
            for n in 0..=6 {
                for lam in enumerate_hook_multipartitions(&prof, n) {
                    let w = prof.split(&lam).unwrap();
                    let all = enumerate_sstd(&lam, &w, &prof);
                    assert_eq!(all, vec![hook_tableau(&lam, &prof).unwrap()]);
                    let ts = super_initial_tableau(&lam, &prof);
                    assert!(ts.is_standard());
                    assert_eq!(preimages(&all[0], &w), vec![ts.clone()]);
                    assert_eq!(apply_type(&w, &ts).unwrap(), all[0]);
                }
            }
        }
    }

    #[test]
    fn nonempty_iff_cumulative_hook() {
        for (bk, bl) in [(vec![1, 0], vec![0, 1]), (vec![1, 1], vec![1, 1])] {
            let prof = HookProfile::new(bk, bl).unwrap();
            for n in 0..=5 {
                let ws = enumerate_weights(&prof, n);
                for lam in enumerate_multipartitions(2, n) {
                    let any = ws.iter().any(|w| !enumerate_sstd(&lam, w, &prof).is_empty());
                    assert_eq!(any, prof.is_cumulative_hook(&lam), "{lam}");
                    if prof.is_hook(&lam) {
                        assert!(any);
                    }
                }
            }
        }
    }

    #[test]
    fn classical_kostka() {
        // ν = ∅ reduces to semistandard tableaux of type μ
        let prof = HookProfile::new(vec![3], vec![0]).unwrap();
        let lam = Multipartition::new(vec![vec![2, 1]]).unwrap();
        let w = WeightPair::new(Multicomposition(vec![vec![1, 1, 1]]), Multicomposition(vec![vec![]]), &prof).unwrap();
        assert_eq!(enumerate_sstd(&lam, &w, &prof).len(), 2);
        let w = WeightPair::new(Multicomposition(vec![vec![2, 1, 0]]), Multicomposition(vec![vec![]]), &prof).unwrap();
        assert_eq!(enumerate_sstd(&lam, &w, &prof).len(), 1);
    }

    fn example_weight() -> (HookProfile, WeightPair, Multipartition) {
        let prof = HookProfile::new(vec![1, 1], vec![1, 2]).unwrap();
        let w = WeightPair::new(Multicomposition(vec![vec![2], vec![3]]), Multicomposition(vec![vec![2], vec![2, 1]]), &prof).unwrap();
        let lam = Multipartition::new(vec![vec![3, 1, 1], vec![2, 2, 1]]).unwrap();
        (prof, w, lam)
    }

    fn tab(rows: &[&[&[usize]]]) -> Tableau {
        Tableau::from_rows(&rows.iter().map(|c| c.iter().map(|r| r.to_vec()).collect()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn stand_sstd_example() {
        let (prof, w, lam) = example_weight();
        let s1 = tab(&[&[&[1, 3, 9], &[2], &[4]], &[&[5, 6], &[7, 8], &[10]]]);
        let s2 = tab(&[&[&[1, 4, 9], &[2], &[3]], &[&[5, 7], &[6, 8], &[10]]]);
        let s = tab(&[&[&[1, 2, 5], &[3], &[4]], &[&[6, 7], &[8, 10], &[9]]]);
        let s_tilde = tab(&[&[&[1, 2, 6], &[3], &[4]], &[&[5, 7], &[8, 10], &[9]]]);
        for t in [&s1, &s2, &s, &s_tilde] {
            assert!(t.is_standard());
            assert_eq!(t.shape(), &lam.as_multicomposition());
        }
        let bad = st(&[&[&["x1^1", "y1^1", "y1^2"], &["x1^1"], &["y1^1"]], &[&["x1^2", "x1^2"], &["x1^2", "y1^2"], &["y2^2"]]]);
        let good = st(&[&[&["x1^1", "x1^1", "x1^2"], &["y1^1"], &["y1^1"]], &[&["x1^2", "x1^2"], &["y1^2", "y2^2"], &["y1^2"]]]);
        assert_eq!(apply_type(&w, &s1).unwrap(), bad);
        assert_eq!(apply_type(&w, &s2).unwrap(), bad);
        assert_eq!(apply_type(&w, &s).unwrap(), good);
        assert_eq!(apply_type(&w, &s_tilde).unwrap(), good);
        assert!(!is_semistandard(&bad, &prof));
        assert!(is_semistandard(&good, &prof));
        assert_eq!(weight_tableau(&w).rows(), vec![vec![vec![1, 2], vec![3, 4]], vec![vec![5, 6, 7], vec![8, 9], vec![10]]]);
    }

    #[test]
    fn tableau_type_example() {
        let (prof, w, lam) = example_weight();
        let sst = st(&[&[&["x1^1", "x1^1", "x1^2"], &["y1^1"], &["y1^1"]], &[&["x1^2", "x1^2"], &["y1^2", "y2^2"], &["y1^2"]]]);
        assert!(is_semistandard(&sst, &prof));
        assert!(enumerate_sstd(&lam, &w, &prof).contains(&sst));
        let pre = preimages(&sst, &w);
        let s1 = tab(&[&[&[1, 2, 5], &[3], &[4]], &[&[6, 7], &[8, 10], &[9]]]);
        let s2 = tab(&[&[&[1, 2, 6], &[3], &[4]], &[&[5, 7], &[8, 10], &[9]]]);
        let s3 = tab(&[&[&[1, 2, 7], &[3], &[4]], &[&[5, 6], &[8, 10], &[9]]]);
        assert_eq!(pre, vec![s1.clone(), s2.clone(), s3.clone()]);
        let (mu1, nu1) = split_tableau(&s1, &sst, &w).unwrap();
        assert_eq!(mu1, tab(&[&[&[1, 2, 5], &[3], &[4]], &[&[6, 7], &[8], &[9], &[10]]]));
        assert_eq!(nu1, tab(&[&[&[1], &[2], &[5], &[3], &[4]], &[&[6], &[7], &[8, 10], &[9]]]));
        let (mu3, nu3) = split_tableau(&s3, &sst, &w).unwrap();
        assert_eq!(mu3, tab(&[&[&[1, 2, 7], &[3], &[4]], &[&[5, 6], &[8], &[9], &[10]]]));
        assert_eq!(nu3, tab(&[&[&[1], &[2], &[7], &[3], &[4]], &[&[5], &[6], &[8, 10], &[9]]]));
        let (f, l) = first_last(&sst, &w).unwrap();
        assert_eq!(f, s1);
        assert_eq!(l, s3);
    }

    #[test]
    fn preimage_sweep() {
        for (bk, bl) in [(vec![1], vec![1]), (vec![1, 1], vec![1, 1]), (vec![1, 0], vec![1, 1])] {
            let prof = HookProfile::new(bk, bl).unwrap();
            for n in 1..=5 {
                for w in enumerate_weights(&prof, n) {
                    for lam in enumerate_hook_multipartitions(&prof, n) {
                        for s in enumerate_standard(&lam) {
                            let img = apply_type(&w, &s).unwrap();
                            assert!(preimages(&img, &w).contains(&s));
                        }
                        for sst in enumerate_sstd(&lam, &w, &prof) {
                            assert!(!preimages(&sst, &w).is_empty(), "{sst} {w} {lam}");
                            assert!(first_last_bounds_hold(&sst, &w), "{sst}");
                            let pre = preimages(&sst, &w);
                            for s in &pre {
                                let (a, b) = split_tableau(s, &sst, &w).unwrap();
                                assert_eq!(a.n(), n);
                                assert_eq!(b.n(), n);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn row_function_cases() {
        let prof = HookProfile::new(vec![1], vec![2]).unwrap();
        let s = tab(&[&[&[1, 2], &[3, 4]]]);
        assert_eq!(row_function(&s, 1, &prof), Symbol::x(1, 1));
        assert_eq!(row_function(&s, 4, &prof), Symbol::y(2, 1));
    }

    #[test]
    fn json_roundtrip() {
        let t = st(&[&[&["x1^1", "x1^1"], &["y1^1"]], &[&["x1^2"]]]);
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"1,1,1":"x1^1","1,2,1":"x1^1","2,1,1":"y1^1","1,1,2":"x1^2"}"#);
        assert_eq!(serde_json::from_str::<SuperTableau>(&js).unwrap(), t);
    }
}

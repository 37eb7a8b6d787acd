//! Permutations, Young subgroups and tableaux.
//!
//! Permutations are one-line vectors over `1..=n` composed left to right:
//! `(wv)(i) = v(w(i))`. A permutation acts on a tableau from the right by
//! replacing every entry `e` with `w(e)`, so `s·(wv) = (s·w)·v`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combin::{Dominance, Multicomposition, Multipartition};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn from_one_line(v: Vec<usize>) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in &v {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidInput(format!("{v:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 ≤ i < n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} out of range for n = {n}");
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// `s_{i_1} s_{i_2} ⋯` in left-to-right composition.
    pub fn from_word(word: &[usize], n: usize) -> Self {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        w
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `self · v`, i.e. first `self`, then `v`.
    pub fn mul(&self, v: &Permutation) -> Permutation {
        assert_eq!(self.n(), v.n(), "window mismatch");
        Permutation(self.0.iter().map(|&x| v.apply(x)).collect())
    }

    /// `w s_i`: swaps the values `i` and `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        Permutation(self.0.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect())
    }

    /// `s_i w`: swaps positions `i` and `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`: value `i` occurs before `i+1`.
    pub fn right_ascent(&self, i: usize) -> bool {
        let pos = |val: usize| self.0.iter().position(|&x| x == val).unwrap();
        pos(i) < pos(i + 1)
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x - 1] = i + 1;
        }
        Permutation(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for i in 1..w.n() {
                if !w.right_ascent(i) {
                    w = w.mul_simple_right(i);
                    rev.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// Nontrivial cycles, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// All permutations of `1..=n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Position of this permutation in [`Permutation::all`].
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank += smaller * fact[n - 1 - i];
        }
        rank
    }

    pub fn from_lex_rank(mut rank: usize, n: usize) -> Permutation {
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let f = fact[n - 1 - i];
            v.push(pool.remove(rank / f));
            rank %= f;
        }
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The Young subgroup of a multicomposition: the row stabilizer of its
/// row-reading tableau, a product of symmetric groups on consecutive
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    n: usize,
    /// `(first entry, block length)`, 1-based.
    blocks: Vec<(usize, usize)>,
}

impl YoungSubgroup {
    pub fn new(a: &Multicomposition) -> Self {
        Self::from_block_sizes(a.0.iter().flatten().copied(), a.size())
    }

    pub fn from_block_sizes(sizes: impl IntoIterator<Item = usize>, n: usize) -> Self {
        let mut blocks = Vec::new();
        let mut start = 1;
        for len in sizes {
            if len > 0 {
                blocks.push((start, len));
            }
            start += len;
        }
        assert_eq!(start, n + 1, "block sizes must sum to n");
        YoungSubgroup { n, blocks }
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// The simple transpositions inside blocks.
    pub fn generators(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|&(s, len)| s..s + len - 1).collect()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(|&(_, len)| (1..=len).product::<usize>()).product()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.n)];
        for &(s, len) in &self.blocks {
            let local = Permutation::all(len);
            out = out
                .iter()
                .flat_map(|w| {
                    local.iter().map(move |p| {
                        let mut v = w.0.clone();
                        for i in 0..len {
                            v[s - 1 + i] = s - 1 + p.0[i];
                        }
                        Permutation(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        (1..=self.n).all(|i| {
            let x = w.apply(i);
            self.blocks.iter().any(|&(s, len)| i >= s && i < s + len && x >= s && x < s + len) || (x == i)
        })
    }
}

/// A filling of a multicomposition diagram by `1..=n`. Entries are stored
/// in canonical node order: component, then row, then column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Multicomposition,
    entries: Vec<usize>,
}

impl Tableau {
    pub fn new(shape: Multicomposition, entries: Vec<usize>) -> Result<Self> {
        if shape.size() != entries.len() {
            return Err(Error::InvalidInput("entry count does not match shape".into()));
        }
        Permutation::from_one_line(entries.clone())?;
        Ok(Tableau { shape, entries })
    }

    /// Build from rows: `comps[c][r]` is the list of entries of row `r`.
    pub fn from_rows(comps: &[Vec<Vec<usize>>]) -> Result<Self> {
        let shape = Multicomposition(comps.iter().map(|c| c.iter().map(Vec::len).collect()).collect());
        Self::new(shape, comps.iter().flatten().flatten().copied().collect())
    }

    pub fn shape(&self) -> &Multicomposition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The rows, `rows()[c][r]`.
    pub fn rows(&self) -> Vec<Vec<Vec<usize>>> {
        let mut it = self.entries.iter().copied();
        self.shape.0.iter().map(|comp| comp.iter().map(|&len| it.by_ref().take(len).collect()).collect()).collect()
    }

    /// Nodes `(component, row, column)` in canonical order.
    pub fn nodes(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.n());
        for (c, comp) in self.shape.0.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                for col in 0..len {
                    out.push((c, r, col));
                }
            }
        }
        out
    }

    /// Node holding entry `i`.
    pub fn position(&self, i: usize) -> (usize, usize, usize) {
        let k = self.entries.iter().position(|&e| e == i).expect("entry present");
        self.nodes()[k]
    }

    /// `positions()[i-1]` is the node of entry `i`.
    pub fn positions(&self) -> Vec<(usize, usize, usize)> {
        let nodes = self.nodes();
        let mut out = vec![(0, 0, 0); self.n()];
        for (k, &e) in self.entries.iter().enumerate() {
            out[e - 1] = nodes[k];
        }
        out
    }

    pub fn act(&self, w: &Permutation) -> Tableau {
        Tableau { shape: self.shape.clone(), entries: self.entries.iter().map(|&e| w.apply(e)).collect() }
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows().iter().flatten().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.rows().iter().all(|comp| {
            comp.windows(2).all(|pair| pair[1].iter().enumerate().all(|(j, &b)| pair[0].get(j).is_some_and(|&a| a < b)))
        })
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// Shape of the subtableau holding `1..=i`.
    pub fn restrict(&self, i: usize) -> Multicomposition {
        Multicomposition(self.rows().iter().map(|comp| comp.iter().map(|row| row.iter().filter(|&&e| e <= i).count()).collect()).collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows()
            .iter()
            .map(|c| c.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / "))
            .collect();
        write!(f, "({})", comps.join(" | "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Vec<usize>>>::deserialize(d)?;
        Tableau::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// `t^λ`: entries in row-reading order.
pub fn initial_tableau(shape: &Multicomposition) -> Tableau {
    Tableau { shape: shape.clone(), entries: (1..=shape.size()).collect() }
}

/// `t_λ`: entries down the columns of each component in turn.
pub fn final_tableau(shape: &Multipartition) -> Tableau {
    let mc = shape.as_multicomposition();
    let nodes = Tableau { shape: mc.clone(), entries: (1..=mc.size()).collect() }.nodes();
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by_key(|&k| (nodes[k].0, nodes[k].2, nodes[k].1));
    let mut entries = vec![0; nodes.len()];
    for (val, &k) in order.iter().enumerate() {
        entries[k] = val + 1;
    }
    Tableau { shape: mc, entries }
}

pub fn canonical_tableaux(shape: &Multipartition) -> (Tableau, Tableau) {
    (initial_tableau(&shape.as_multicomposition()), final_tableau(shape))
}

/// `d(s)` with `s = t^λ · d(s)`; its one-line form is the row reading of
/// `s`.
pub fn d_of(s: &Tableau) -> Result<Permutation> {
    if !s.is_row_standard() {
        return Err(Error::InvalidInput(format!("{s} is not row standard")));
    }
    Ok(Permutation(s.entries.clone()))
}

/// All standard tableaux of `shape`, ascending in the sequence of
/// `(component, row)` positions of `1, 2, …, n`; `t^λ` comes first and the
/// order refines tableau dominance.
pub fn enumerate_standard(shape: &Multipartition) -> Vec<Tableau> {
    let mc = shape.as_multicomposition();
    let n = mc.size();
    let rows: Vec<(usize, usize, usize)> = mc.rows().collect();
    let mut fill = vec![0usize; rows.len()];
    let mut seq = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        rows: &[(usize, usize, usize)],
        fill: &mut Vec<usize>,
        seq: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == n {
            out.push(seq.clone());
            return;
        }
        for (ri, &(c, r, len)) in rows.iter().enumerate() {
            if fill[ri] == len {
                continue;
            }
            // the node above must already be filled
            if r > 0 {
                let above = ri - 1;
                debug_assert_eq!(rows[above].0, c);
                if fill[above] <= fill[ri] {
                    continue;
                }
            }
            fill[ri] += 1;
            seq.push(ri);
            rec(k + 1, n, rows, fill, seq, out);
            seq.pop();
            fill[ri] -= 1;
        }
    }
    let mut seqs = Vec::new();
    rec(0, n, &rows, &mut fill, &mut seq, &mut seqs);
    for s in seqs {
        let mut row_entries: Vec<Vec<usize>> = vec![Vec::new(); rows.len()];
        for (i, &ri) in s.iter().enumerate() {
            row_entries[ri].push(i + 1);
        }
        out.push(Tableau { shape: mc.clone(), entries: row_entries.into_iter().flatten().collect() });
    }
    out
}

/// All row-standard tableaux of a multicomposition shape.
pub fn enumerate_row_standard(shape: &Multicomposition) -> Vec<Tableau> {
    let t = initial_tableau(shape);
    let mut out: Vec<Tableau> =
        Permutation::all(shape.size()).iter().map(|w| t.act(w)).filter(Tableau::is_row_standard).collect();
    out.sort();
    out
}

/// Tableau dominance: compare the restricted shapes at every `i`.
pub fn tableau_dominance(s: &Tableau, t: &Tableau) -> Result<Dominance> {
    if s.shape != t.shape {
        return Err(Error::InvalidInput("tableaux of different shapes".into()));
    }
    let mut ge = true;
    let mut le = true;
    for i in 1..=s.n() {
        match crate::combin::dominance_mc(&s.restrict(i), &t.restrict(i))? {
            Dominance::Equal => {}
            Dominance::Greater => le = false,
            Dominance::Less => ge = false,
            Dominance::Incomparable => {
                ge = false;
                le = false;
            }
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        _ => Dominance::Incomparable,
    })
}

/// `|std(λ)|` by the hook length formula times the multinomial of component
/// sizes; an independent count for tests.
pub fn count_standard(shape: &Multipartition) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut total = fact(shape.size());
    for p in shape.components() {
        let conj = crate::combin::conjugate(p);
        let mut hooks: u128 = 1;
        for (i, &row) in p.parts().iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1 + conj.parts()[j] - i - 1 + 1) as u128;
            }
        }
        total /= hooks;
    }
    total
}

//! Worked examples rendered as text and compared against checked-in
//! golden files.

use serde::Serialize;

use crate::combin::{hook_split, HookProfile, Multicomposition, Multipartition, Partition, WeightPair};
use crate::error::Result;
use crate::supermod::preimage_terms;
use crate::supertab::{apply_type, enumerate_sstd, hook_tableau, is_semistandard, preimages, weight_tableau, SuperTableau};
use crate::symm::{d_of, Tableau};

/// Names of the examples, in suite order.
pub const EXAMPLES: [&str; 5] = ["d_of", "hook_split", "hook_tableau", "stand_sstd", "tableau_type"];

fn expected(name: &str) -> Option<&'static str> {
    Some(match name {
        "d_of" => include_str!("../tests/golden/d_of.txt"),
        "hook_split" => include_str!("../tests/golden/hook_split.txt"),
        "hook_tableau" => include_str!("../tests/golden/hook_tableau.txt"),
        "stand_sstd" => include_str!("../tests/golden/stand_sstd.txt"),
        "tableau_type" => include_str!("../tests/golden/tableau_type.txt"),
        _ => return None,
    })
}

fn tab(rows: Vec<Vec<Vec<usize>>>) -> Result<Tableau> {
    Tableau::from_rows(&rows)
}

fn two_colour_setup() -> Result<(HookProfile, WeightPair, Multipartition)> {
    let prof = HookProfile::new(vec![1, 1], vec![1, 2])?;
    let w = WeightPair::new(Multicomposition(vec![vec![2], vec![3]]), Multicomposition(vec![vec![2], vec![2, 1]]), &prof)?;
    let lam = Multipartition::new(vec![vec![3, 1, 1], vec![2, 2, 1]])?;
    Ok((prof, w, lam))
}

fn render_d_of() -> Result<String> {
    let s = tab(vec![vec![vec![2, 5, 7], vec![3, 8]], vec![vec![1], vec![4]], vec![vec![6, 10], vec![9]]])?;
    Ok(format!("s = {s}\nd(s) = {}\n", d_of(&s)?))
}

fn render_hook_split() -> Result<String> {
    let lam = Partition::new(vec![3, 3, 2, 2, 1])?;
    let (sharp, star) = hook_split(&lam, 2, 2)?;
    Ok(format!("lambda = {lam}, k = 2, l = 2\nsharp = {sharp}\nstar = {star}\n"))
}

fn render_hook_tableau() -> Result<String> {
    let prof = HookProfile::new(vec![1, 1, 1], vec![1, 2, 3])?;
    let lam = Multipartition::new(vec![vec![2, 1, 1], vec![3, 2, 2, 1], vec![4, 3, 1]])?;
    let w = prof.split(&lam)?;
    let all = enumerate_sstd(&lam, &w, &prof);
    let mut out = format!("lambda = {lam}\ntype = {w}\ncount = {}\n", all.len());
    out += &format!("T = {}\n", hook_tableau(&lam, &prof)?);
    Ok(out)
}

fn render_stand_sstd() -> Result<String> {
    let (prof, w, _) = two_colour_setup()?;
    let mut out = format!("t = {}\n", weight_tableau(&w));
    let cases = [
        ("s1", vec![vec![vec![1, 3, 9], vec![2], vec![4]], vec![vec![5, 6], vec![7, 8], vec![10]]]),
        ("s2", vec![vec![vec![1, 4, 9], vec![2], vec![3]], vec![vec![5, 7], vec![6, 8], vec![10]]]),
        ("s", vec![vec![vec![1, 2, 5], vec![3], vec![4]], vec![vec![6, 7], vec![8, 10], vec![9]]]),
        ("s~", vec![vec![vec![1, 2, 6], vec![3], vec![4]], vec![vec![5, 7], vec![8, 10], vec![9]]]),
    ];
    for (name, rows) in cases {
        let img = apply_type(&w, &tab(rows)?)?;
        let verdict = if is_semistandard(&img, &prof) { "semistandard" } else { "not semistandard" };
        out += &format!("{name} -> {img} : {verdict}\n");
    }
    Ok(out)
}

fn render_tableau_type() -> Result<String> {
    let (prof, w, lam) = two_colour_setup()?;
    let sst = SuperTableau::from_rows(
        &[
            vec![vec!["x1^1", "x1^1", "x1^2"], vec!["y1^1"], vec!["y1^1"]],
            vec![vec!["x1^2", "x1^2"], vec!["y1^2", "y2^2"], vec!["y1^2"]],
        ]
        .iter()
        .map(|c| c.iter().map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?,
    )?;
    let member = enumerate_sstd(&lam, &w, &prof).contains(&sst);
    let mut out = format!("S = {sst}\nin std(lambda, type) = {member}\n");
    for (i, s) in preimages(&sst, &w).iter().enumerate() {
        out += &format!("s{} = {s}\n", i + 1);
    }
    let terms = preimage_terms(&sst, &w)?;
    out += &format!("m_St terms = {}\n", terms.len());
    for (i, (a, b)) in terms.iter().enumerate() {
        out += &format!("  m[s{0}mu = {a}] n[s{0}nu = {b}]\n", i + 1);
    }
    Ok(out)
}

/// Text rendering of one example.
pub fn render(name: &str) -> Result<String> {
    match name {
        "d_of" => render_d_of(),
        "hook_split" => render_hook_split(),
        "hook_tableau" => render_hook_tableau(),
        "stand_sstd" => render_stand_sstd(),
        "tableau_type" => render_tableau_type(),
        _ => Err(crate::Error::InvalidInput(format!("unknown example '{name}'"))),
    }
}

/// Outcome of one golden comparison.
#[derive(Clone, Debug, Serialize)]
pub struct GoldenResult {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

/// Runs every example against its golden file.
pub fn suite() -> Vec<GoldenResult> {
    EXAMPLES
        .iter()
        .map(|&name| {
            let exp = expected(name).unwrap_or_default().to_string();
            let actual = render(name).unwrap_or_else(|e| format!("error: {e}\n"));
            GoldenResult { name: name.to_string(), pass: exp == actual, expected: exp, actual }
        })
        .collect()
}

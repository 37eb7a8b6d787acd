//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines are always printed; exits nonzero if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use cyclo_schur::combin::{enumerate_hook_multipartitions, enumerate_weights, HookProfile};
use cyclo_schur::golden;
use cyclo_schur::hecke::{HeckeAlgebra, HeckeElement};
use cyclo_schur::ring::{LaurentPolynomial as P, Monomial, SpecializationTarget, MAX_PARAMS};
use cyclo_schur::schur::{SchurAlgebra, SchurElement};
use cyclo_schur::supermod::{double_annihilator_check, PermSupermodule};
use cyclo_schur::supertab::{enumerate_sstd, hook_tableau};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn profile(bk: &[usize], bl: &[usize]) -> HookProfile {
    HookProfile::new(bk.to_vec(), bl.to_vec()).unwrap()
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hecke_dimensions() -> Outcome {
    let start = Instant::now();
    let mut dims = Vec::new();
    let mut ok = true;
    for (m, n, d) in [(1, 2, 2), (1, 3, 6), (2, 2, 8), (2, 3, 48), (3, 2, 18)] {
        let (got, closed) = HeckeAlgebra::new(m, n).map_err(err)?.dim_check();
        ok &= closed && got == d;
        dims.push(got.to_string());
    }
    let t = start.elapsed();
    ensure(ok && t < Duration::from_secs(60), format!("dims {} in {t:.2?}", dims.join(", ")))
}

fn wreath_oracle() -> Outcome {
    let bad: Vec<usize> = [2, 3].iter().map(|&n| common::wreath_mismatches(n)).collect();
    ensure(bad == [0, 0], format!("mismatched products at n=2: {}, n=3: {}", bad[0], bad[1]))
}

fn murphy_basis() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (m, n) in [(1, 3), (2, 2), (2, 3)] {
        let h = HeckeAlgebra::new(m, n).map_err(err)?;
        let (count, rank) = h.murphy_basis_check().map_err(err)?;
        ok &= count == h.dim() && rank == h.dim();
        parts.push(format!("({m},{n}): {count} elements, rank {rank}"));
    }
    ensure(ok, parts.join("; "))
}

fn golden_examples() -> Outcome {
    let results = golden::suite();
    let failed: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    ensure(failed.is_empty(), format!("{} examples, failed: {failed:?}", results.len()))
}

fn module_ranks() -> Outcome {
    let h = HeckeAlgebra::new(2, 2).map_err(err)?;
    let p = profile(&[1, 1], &[1, 1]);
    let weights = enumerate_weights(&p, 2);
    let mut ok = true;
    for w in &weights {
        let module = PermSupermodule::new(&h, &p, w).map_err(err)?;
        ok &= module.basis.len() == module.expected_rank() && module.basis_rank() == module.expected_rank();
    }
    ensure(ok, format!("{} weights", weights.len()))
}

fn subspace_identities() -> Outcome {
    let h = HeckeAlgebra::new(2, 2).map_err(err)?;
    let p = profile(&[1, 1], &[1, 1]);
    let weights = enumerate_weights(&p, 2);
    let mut bad = Vec::new();
    for w in &weights {
        let module = PermSupermodule::new(&h, &p, w).map_err(err)?;
        if !module.intersection_check(&h) {
            bad.push(format!("intersection {w}"));
        }
        if !module.annihilator_check(&h) {
            bad.push(format!("annihilator {w}"));
        }
        if !double_annihilator_check(&h, &h.y(&w.nu_star())) {
            bad.push(format!("ann-y {w}"));
        }
    }
    ensure(bad.is_empty(), format!("{} weights, failures: {bad:?}", weights.len()))
}

fn schur_dimensions() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for bl in [[1, 0], [1, 1]] {
        let p = profile(&[1, 1], &bl);
        let s = SchurAlgebra::new(&p, 2).map_err(err)?;
        let weights = enumerate_weights(&p, 2);
        let brute: usize = enumerate_hook_multipartitions(&p, 2)
            .iter()
            .map(|lam| weights.iter().map(|w| enumerate_sstd(lam, w, &p).len()).sum::<usize>().pow(2))
            .sum();
        let commutant = s.double_centralizer_check(&SpecializationTarget::generic(2, 7)).map_err(err)?.commutant_dim;
        let formula = s.dimension_formula();
        ok &= formula == brute && formula == s.dim() && formula == commutant && s.basis_rank() == formula;
        parts.push(format!("{p}: formula {formula}, enumerated {brute}, dim End {commutant}"));
    }
    ensure(ok, parts.join("; "))
}

fn cellularity() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (bk, bl, n) in [(vec![1], vec![1], 2), (vec![1, 1], vec![1, 0], 2), (vec![1, 1], vec![1, 1], 2)] {
        let p = profile(&bk, &bl);
        let r = SchurAlgebra::new(&p, n).map_err(err)?.cellularity_check().map_err(err)?;
        let v = r.star_violations.len() + r.independence_violations.len() + r.ideal_violations.len();
        ok &= r.passed();
        parts.push(format!("{p} n={n}: {} products, {v} violations", r.products));
    }
    ensure(ok, parts.join("; "))
}

fn gram_matrices() -> Outcome {
    let p = profile(&[1, 1], &[1, 1]);
    let s = SchurAlgebra::new(&p, 2).map_err(err)?;
    let classical = SpecializationTarget::parse_spec("q=1,Q=1,-1").map_err(err)?;
    let generic = SpecializationTarget::generic(2, 11);
    let mut bad = Vec::new();
    for lam in &s.shapes {
        let g = s.gram(lam).map_err(err)?;
        let t = hook_tableau(lam, &p).map_err(err)?;
        let i = g.index.iter().position(|(u, _)| *u == t).ok_or("missing initial tableau")?;
        if !g.is_symmetric() {
            bad.push(format!("{lam} not symmetric"));
        }
        if !g.entries[i][i].is_one() {
            bad.push(format!("{lam} initial entry {}", g.entries[i][i]));
        }
        if g.rank_at(&generic).map_err(err)? != g.index.len() {
            bad.push(format!("{lam} degenerate at generic parameters"));
        }
    }
    let dims = s.simple_dims(&classical).map_err(err)?;
    if dims.len() != s.shapes.len() || dims.values().any(|&d| d == 0) {
        bad.push(format!("simple dims at q=1 {dims:?}"));
    }
    ensure(bad.is_empty(), format!("{} shapes, failures: {bad:?}", s.shapes.len()))
}

fn double_centralizer() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for (bk, bl, m) in [(vec![1], vec![1], 1usize), (vec![1, 1], vec![1, 1], 2)] {
        let p = profile(&bk, &bl);
        let s = SchurAlgebra::new(&p, 2).map_err(err)?;
        let r = s.double_centralizer_check(&SpecializationTarget::generic(m, 3)).map_err(err)?;
        let dim_h = m.pow(2) * 2;
        ok &= r.passed() && r.commutant_dim == s.dim() && r.bicommutant_dim == dim_h;
        parts.push(format!("{p}: End = {} (dim S {}), bicommutant {} (dim H {dim_h})", r.commutant_dim, s.dim(), r.bicommutant_dim));
    }
    let t = start.elapsed();
    ensure(ok && t < Duration::from_secs(600), format!("{} in {t:.2?}", parts.join("; ")))
}

fn random_poly(rng: &mut ChaCha8Rng) -> P {
    let terms = rng.gen_range(0..4);
    P::from_terms((0..terms).map(|_| {
        let mut params = [0u16; MAX_PARAMS];
        params[0] = rng.gen_range(0..3);
        params[1] = rng.gen_range(0..3);
        (Monomial { q: rng.gen_range(-3..=3), params }, BigInt::from(rng.gen_range(-4i64..=4)))
    }))
}

fn random_element(h: &HeckeAlgebra, rng: &mut ChaCha8Rng) -> HeckeElement {
    (0..rng.gen_range(1..4)).fold(h.zero(), |acc, _| {
        let c = P::from(rng.gen_range(-2i64..=2)) * P::q_pow(rng.gen_range(-1..=1));
        acc.add(&h.basis_label(rng.gen_range(0..h.dim())).scale(&c))
    })
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut bad = Vec::new();
    for _ in 0..300 {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        if !ok {
            bad.push("ring axioms".to_string());
            break;
        }
    }
    let h = HeckeAlgebra::new(2, 3).map_err(err)?;
    let mut assoc = 0;
    let mut star = 0;
    for _ in 0..500 {
        let (a, b, c) = (random_element(&h, &mut rng), random_element(&h, &mut rng), random_element(&h, &mut rng));
        assoc += usize::from(h.mul(&h.mul(&a, &b), &c) != h.mul(&a, &h.mul(&b, &c)));
        star += usize::from(h.star(&h.mul(&a, &b)) != h.mul(&h.star(&b), &h.star(&a)));
    }
    if assoc + star > 0 {
        bad.push(format!("associativity {assoc}, star {star}"));
    }
    let s = SchurAlgebra::new(&profile(&[1, 1], &[1, 1]), 2).map_err(err)?;
    let mut parity = 0;
    let mut checked = 0;
    for i in 0..s.dim() {
        for j in (0..s.dim()).filter(|&j| s.labels[j].target == s.labels[i].source) {
            let f = s.compose(&SchurElement::basis(i), &SchurElement::basis(j)).map_err(err)?;
            if !f.is_zero() {
                checked += 1;
                let want = (s.labels[i].parity() + s.labels[j].parity()) % 2;
                parity += usize::from(s.parity(&f) != Some(want));
            }
        }
    }
    if parity > 0 {
        bad.push(format!("parity {parity}"));
    }
    ensure(bad.is_empty(), format!("500 Hecke triples, {checked} nonzero Schur products, failures: {bad:?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Hecke dimensions", hecke_dimensions),
        ("classical specialization vs wreath product", wreath_oracle),
        ("Murphy basis count and independence", murphy_basis),
        ("golden examples", golden_examples),
        ("permutation supermodule ranks", module_ranks),
        ("intersection and annihilator identities", subspace_identities),
        ("Schur dimension formula", schur_dimensions),
        ("cellularity", cellularity),
        ("Gram matrices", gram_matrices),
        ("double centralizer", double_centralizer),
        ("property suites", properties),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (tag, detail) = match check() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {tag} {name} [{:.2?}]: {detail}", k + 1, start.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

//! One line per acceptance criterion; exits nonzero if any fails or runs
//! over its time budget.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hsw_core::affine_weyl::{AffineWeyl, ReflectionKind};
use hsw_core::hecke;
use hsw_core::lattice::ivec;
use hsw_core::report::Check;
use hsw_core::spherical::{self, Spherical, Sph};
use hsw_core::verify;
use hsw_core::{Integer, LaurentPoly, ModuleOracle};

type Z = Integer;

fn group(name: &str) -> Arc<AffineWeyl> {
    Arc::new(AffineWeyl::preset(name).expect("preset"))
}

fn lp(t: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_i64_terms(t)
}

fn bernstein() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, bound) in [("A1", 2), ("A2", 2), ("B2", 1)] {
        out.extend(hecke::verify_bernstein::<Z>(&group(name), bound));
    }
    out
}

fn quadratic() -> Vec<Check> {
    ["A1", "A2", "B2"].iter().map(|n| hecke::verify_quadratic_affine::<Z>(&group(n))).collect()
}

fn lengths() -> Vec<Check> {
    vec![verify::lengths(&group("A1"), 6), verify::lengths(&group("A2"), 5)]
}

fn golden() -> Vec<Check> {
    let g = group("A1");
    let sph = Spherical::<Z>::new(g.clone());
    let e = g.identity();
    let s = g.simple_index(ReflectionKind::Finite(0)).unwrap();
    let s0 = g.simple_index(ReflectionKind::Affine(0)).unwrap();
    let m = |l: i64, c: &[(i32, i64)]| Sph::term(&ivec(&[l]), lp(c));
    let mut c = Check::new("A1 golden values");
    let m_s0 = spherical::bs_char::<Z>(&g, &e, &[s0]).unwrap();
    c.record(m_s0 == m(-2, &[(0, 1)]).add(&m(0, &[(-1, 1)])), || format!("m(e,(s0)) = {}", m_s0.display(&g)));
    let m_s0s = spherical::bs_char::<Z>(&g, &e, &[s0, s]).unwrap();
    let want = m(2, &[(0, 1)]).add(&m(-2, &[(-1, 1)])).add(&m(0, &[(0, 1), (-2, 1)]));
    c.record(m_s0s == want, || format!("m(e,(s0,s)) = {}", m_s0s.display(&g)));
    let b = sph.canonical_basis(&ivec(&[2])).unwrap();
    let want = m(2, &[(0, 1)]).add(&m(-2, &[(-1, 1)])).add(&m(0, &[(-2, 1)]));
    c.record(*b == want, || format!("b_α = {}", b.display(&g)));
    let d = sph.decompose_bs(&e, &[s0, s]).unwrap();
    let ok = d.len() == 2 && d.get(&ivec(&[2])) == Some(&lp(&[(0, 1)])) && d.get(&ivec(&[0])) == Some(&lp(&[(0, 1)]));
    c.record(ok, || format!("decompose_bs(e,(s0,s)) = {d:?}"));
    let h = spherical::hom_rank::<Z>(&g, (&e, &[s]), (&e, &[s])).unwrap();
    c.record(h == lp(&[(-2, 1), (0, 2), (2, 1)]), || format!("hom_rank((e,(s)),(e,(s))) = {h}"));
    let h = spherical::hom_rank::<Z>(&g, (&e, &[s0]), (&e, &[s0])).unwrap();
    c.record(h == lp(&[(0, 1), (2, 1)]), || format!("hom_rank((e,(s0)),(e,(s0))) = {h}"));
    vec![c]
}

fn canonical() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, len) in [("A1", 6u32), ("A2", 5)] {
        let sph = Spherical::<Z>::new(group(name));
        out.extend(verify::canonical_structure(&sph, len));
        out.push(verify::decomposition_structure(&sph, 6));
    }
    out
}

fn kato() -> Vec<Check> {
    vec![
        verify::kato(&Spherical::<Z>::new(group("A1")), 6),
        verify::kato(&Spherical::<Z>::new(group("A2")), 4),
    ]
}

fn q_one() -> Vec<Check> {
    vec![verify::q_one(&group("A1"), 2), verify::q_one(&group("A2"), 2), verify::q_one(&group("B2"), 1)]
}

fn oracle() -> Vec<Check> {
    let g = group("A1");
    let e = g.identity();
    let s = g.simple_index(ReflectionKind::Finite(0)).unwrap();
    let s0 = g.simple_index(ReflectionKind::Affine(0)).unwrap();
    let objects = vec![
        (e.clone(), vec![]),
        (g.omega_of_weight(&ivec(&[1])), vec![]),
        (e.clone(), vec![s]),
        (e.clone(), vec![s0]),
        (e.clone(), vec![s, s0]),
        (e, vec![s0, s]),
    ];
    let oracle = ModuleOracle::new(g).unwrap();
    vec![verify::oracle_grid(&oracle, &objects, 16)]
}

fn pushforward() -> Vec<Check> {
    let mut out = verify::pushforward::<Z>(&group("A1"), 200, 3, 1);
    out.extend(verify::pushforward::<Z>(&group("A2"), 200, 3, 2));
    out
}

type Criterion = (&'static str, u64, fn() -> Vec<Check>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Bernstein relations (A1, A2 box 2; B2 box 1)", 30, bernstein),
        ("quadratic relation for affine simples (A1, A2, B2)", 5, quadratic),
        ("length formula vs BFS (A1 ℓ<=6, A2 ℓ<=5)", 60, lengths),
        ("A1 golden values", 60, golden),
        ("canonical basis structure (A1 ℓ<=6, A2 ℓ<=5)", 120, canonical),
        ("Kato identity (A1 ℓ<=6, A2 ℓ<=4)", 300, kato),
        ("q=1 against Freudenthal (A1, A2 box 2; B2 box 1)", 60, q_one),
        ("graded Hom oracle vs character pairing (A1, cutoff 16)", 120, oracle),
        ("module structure and pushforward (A1, A2)", 30, pushforward),
    ];
    let mut all = true;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let checks = run();
        let elapsed = start.elapsed();
        let checked: usize = checks.iter().map(|c| c.checked).sum();
        let failures: Vec<&String> = checks.iter().flat_map(|c| &c.failures).collect();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let ok = failures.is_empty() && in_time && checked > 0;
        all &= ok;
        println!(
            "criterion {}: {} {name} ({checked} checks, {:.2}s, limit {limit}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for f in failures.iter().take(5) {
            println!("    {f}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

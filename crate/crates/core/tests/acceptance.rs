//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so every line is printed. Two criteria
//! are known to fail for reasons recorded in the project notes: the
//! connected-sum target assumes a meridian that is null-homologous in the
//! complement of U1, and vertex moves that carry a vertex into another region
//! of the square can change Δ. The process exits non-zero when the set of
//! failures differs from that known set in either direction.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use t3links::algebra::{determinant, laurent_gcd, smith_normal_form, Cyclo, IntMatrix, LaurentPoly};
use t3links::cli;
use t3links::diagram::{builtin_example, serialize_diagram, Diagram};
use t3links::fox::{alexander_matrix, fox_derivative, GroupRingElem, TwistCharacter};
use t3links::invariants::{
    alexander_polynomial, classical_alexander, collapse_specialize, twisted_alexander, AlexanderOptions,
};
use t3links::moves::{scramble_with, ALL_FAMILIES, STABLE_FAMILIES};
use t3links::presentation::{build_presentation, first_homology, class_decomposition, snf_decomposition, Family, FreeWord};

const KNOWN_FAILURES: [usize; 2] = [7, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn t(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::univariate("t", 1, terms)
}

fn t_minus_1_pow(n: u32) -> LaurentPoly {
    t(&[(0, -1), (1, 1)]).pow(n)
}

fn delta(d: &Diagram) -> LaurentPoly {
    alexander_polynomial(d, &AlexanderOptions::default()).expect("pipeline runs").canonical
}

fn c1_group_u1() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("U1.t3d");
    std::fs::write(&path, serialize_diagram(&builtin_example("U1").unwrap())).unwrap();
    let out = cli::run(["t3", "group", path.to_str().unwrap()]);
    let expected = "generators: x, y, z, x1\n\
                    x1 y x1^-1 y^-1\n\
                    z x z^-1 x^-1 x1^-1\n\
                    y x y^-1 x^-1\n\
                    y z y^-1 z^-1\n";
    outcome(out.exit_code == 0 && out.stdout == expected, out.stdout.replace('\n', "; "))
}

fn c2_homology_u1() -> Outcome {
    let d = builtin_example("U1").unwrap();
    let h = first_homology(&d).unwrap();
    let by_class = class_decomposition(&d).unwrap();
    let snf = snf_decomposition(&build_presentation(&d));
    let pass = h.render() == "Z^3" && by_class == (3, vec![]) && snf == by_class;
    outcome(pass, format!("H1 = {}, class route {by_class:?}, SNF route {snf:?}", h.render()))
}

fn c3_delta_u1() -> Outcome {
    let got = delta(&builtin_example("U1").unwrap());
    outcome(got.unit_equivalent(&t_minus_1_pow(2)), format!("Delta = {got}"))
}

fn c4_local_unknot() -> Outcome {
    let d = builtin_example("local_unknot").unwrap();
    let got = delta(&d);
    // The torus block of the collapsed Fox matrix: rows of the three torus
    // relators, columns x, y, z.
    let p = build_presentation(&d);
    let h = first_homology(&d).unwrap();
    let a = alexander_matrix(&p, &h, &TwistCharacter::trivial(0)).unwrap();
    let ones = vec![1; a.vars.len()];
    let vars = vec!["t".to_string()];
    let block: Vec<Vec<LaurentPoly>> = p
        .relations
        .iter()
        .zip(&a.entries)
        .filter(|(r, _)| r.family == Family::T)
        .map(|(_, row)| row[..3].iter().map(|e| collapse_specialize(e, &ones)).collect())
        .collect();
    let det = determinant(&block, &vars, 1);
    // The block as printed in the proof of the local-link proposition.
    let printed = [
        [t(&[(0, -1), (1, 1)]), t(&[(0, 1), (1, -1)]), t(&[])],
        [t(&[(0, -1), (1, 1)]), t(&[]), t(&[(0, 1), (1, -1)])],
        [t(&[]), t(&[(0, 1), (1, -1)]), t(&[(0, -1), (1, 1)])],
    ];
    let printed_det = determinant(&printed.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), &vars, 1);
    let pass = got.is_zero() && block.len() == 3 && det.is_zero() && printed_det.is_zero();
    outcome(pass, format!("Delta = {got}, torus block det = {det}, printed block det = {printed_det}"))
}

/// Laplace expansion along the first row, independent of the library's
/// elimination-based determinant.
fn laplace(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = t(&[]);
    for j in 0..m.len() {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect()).collect();
        let term = m[0][j].mul(&laplace(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Hand-derived Fox matrix of L2 after the arc identities, with x, y, z and
/// x1 sent to t and x2 to t^-1 (x1 x2 is a commutator, so null-homologous).
/// Columns x, y, z, x1, x2; rows [x1,y], [x2,y], zxz^-1x^-1 x2^-1 x1^-1,
/// [y,x], [y,z].
fn l2_oracle() -> LaurentPoly {
    let a = t(&[(0, -1), (1, 1)]);
    let b = t(&[(0, 1), (1, -1)]);
    let z = t(&[]);
    let m = vec![
        vec![z.clone(), a.clone(), z.clone(), b.clone(), z.clone()],
        vec![z.clone(), t(&[(-1, 1), (0, -1)]), z.clone(), z.clone(), b.clone()],
        vec![a.clone(), z.clone(), b.clone(), t(&[(0, -1)]), t(&[(1, -1)])],
        vec![a.clone(), b.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), b.clone(), a.clone(), z.clone(), z.clone()],
    ];
    let mut minors = Vec::new();
    for rows in subsets(5, 4) {
        for cols in subsets(5, 4) {
            let sub: Vec<Vec<LaurentPoly>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
            minors.push(laplace(&sub));
        }
    }
    laurent_gcd(&minors).unit_normalize()
}

fn c5_ln_family() -> Outcome {
    let mut detail = String::new();
    let mut pass = true;
    for n in 1..=5u32 {
        let d = builtin_example(&format!("Ln({n})")).unwrap();
        let h = first_homology(&d).unwrap();
        let got = delta(&d);
        let ok = h.free_rank == n as usize + 2 && h.torsion.is_empty() && got.unit_equivalent(&t_minus_1_pow(n + 1));
        pass &= ok;
        let _ = write!(detail, "L{n}: {} {}{}; ", h.render(), got, if ok { "" } else { " (deviates)" });
    }
    let oracle = l2_oracle();
    let ok = oracle.unit_equivalent(&t_minus_1_pow(3)) && oracle.unit_equivalent(&delta(&builtin_example("Ln(2)").unwrap()));
    pass &= ok;
    let _ = write!(detail, "L2 oracle {oracle}");
    outcome(pass, detail)
}

fn c6_local_fixtures() -> Outcome {
    let got: Vec<String> = ["local_unknot", "local_trefoil", "local_hopf"]
        .iter()
        .map(|n| format!("{n}: {}", delta(&builtin_example(n).unwrap())))
        .collect();
    outcome(got.iter().all(|s| s.ends_with(": 0")), got.join(", "))
}

fn c7_connected_sum() -> Outcome {
    let got = delta(&builtin_example("U1#local_trefoil").unwrap());
    let trefoil = classical_alexander(&builtin_example("local_trefoil").unwrap()).unwrap();
    let target = t_minus_1_pow(2).mul(&trefoil);
    outcome(
        got.unit_equivalent(&target),
        format!(
            "Delta = {got}, target {}; the meridian of U1 is null-homologous, so the trefoil factor is evaluated at 1",
            target.unit_normalize()
        ),
    )
}

struct Fingerprint {
    classes: Vec<(i64, i64, i64)>,
    homology: String,
    delta: LaurentPoly,
}

fn fingerprint(d: &Diagram) -> Fingerprint {
    let h = first_homology(d).expect("homology");
    Fingerprint {
        classes: h.classes.iter().map(|c| (c.delta, c.sigma, c.xi)).collect(),
        homology: h.render(),
        delta: delta(d),
    }
}

/// Counts of scrambles breaking (classes, H1, Delta) per fixture.
fn invariance_counts(families: &[&str]) -> (bool, bool, String) {
    let mut detail = String::new();
    let (mut classes_hold, mut all_hold) = (true, true);
    for name in ["U1", "W2", "Ln(2)", "Ln(3)", "U1#local_trefoil"] {
        let d = builtin_example(name).unwrap();
        let base = fingerprint(&d);
        let mut bad = [0usize; 3];
        for seed in 0..200 {
            let r = scramble_with(&d, seed, 30, families);
            let f = fingerprint(&r.diagram);
            bad[0] += usize::from(f.classes != base.classes);
            bad[1] += usize::from(f.homology != base.homology);
            bad[2] += usize::from(!f.delta.unit_equivalent(&base.delta));
        }
        classes_hold &= bad[0] == 0 && bad[1] == 0;
        all_hold &= bad.iter().all(|&b| b == 0);
        let _ = write!(detail, "{name} {}/{}/{}; ", bad[0], bad[1], bad[2]);
    }
    (classes_hold, all_hold, detail)
}

fn c8_invariance() -> Outcome {
    let (_, all, detail) = invariance_counts(&ALL_FAMILIES);
    outcome(all, format!("broken classes/H1/Delta out of 200 with all moves: {detail}"))
}

fn random_word(rng: &mut ChaCha8Rng) -> FreeWord {
    let len = rng.gen_range(0..=12);
    FreeWord::new((0..len).map(|_| (rng.gen_range(0..5), if rng.gen() { 1 } else { -1 })))
}

fn c9_fox() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let one = GroupRingElem::one();
    let mut failures = 0;
    for _ in 0..500 {
        let w = random_word(&mut rng);
        let mut sum = GroupRingElem::zero();
        for g in 0..5 {
            let gm1 = GroupRingElem::word(FreeWord::generator(g)).sub(&one);
            sum = sum.add(&fox_derivative(&w, g).mul(&gm1));
        }
        failures += usize::from(sum != GroupRingElem::word(w).sub(&one));
    }
    for _ in 0..500 {
        let (u, v) = (random_word(&mut rng), random_word(&mut rng));
        for g in 0..5 {
            let lhs = fox_derivative(&u.mul(&v), g);
            let rhs = fox_derivative(&u, g).add(&GroupRingElem::word(u.clone()).mul(&fox_derivative(&v, g)));
            failures += usize::from(lhs != rhs);
        }
    }
    outcome(failures == 0, format!("{failures} failures over 500 identities and 500 product-rule pairs"))
}

/// Laplace expansion over the integers, independent of the library.
fn int_det(m: &[Vec<i64>]) -> BigInt {
    if m.is_empty() {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &e)| e).collect()).collect();
        let term = BigInt::from(m[0][j]) * int_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn snf_contract(entries: &[Vec<i64>]) -> Result<(), String> {
    let a = &IntMatrix::from_rows(entries);
    let s = smith_normal_form(a);
    if &(&s.u * a) * &s.v != s.s {
        return Err("U*A*V != S".into());
    }
    for m in [&s.u, &s.v] {
        if m.determinant().abs() != BigInt::one() {
            return Err("transform not unimodular".into());
        }
    }
    let diag = s.diagonal();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i != j && !s.s[(i, j)].is_zero() {
                return Err("S not diagonal".into());
            }
        }
    }
    for w in diag.windows(2) {
        if !w[0].is_zero() && !w[1].is_multiple_of(&w[0]) || w[0].is_zero() && !w[1].is_zero() || w[0].is_negative() {
            return Err(format!("divisibility fails on {diag:?}"));
        }
    }
    // d_k(A) = s_1 ... s_k, with d_k the gcd of all k x k minors.
    let mut prod = BigInt::one();
    for k in 1..=a.rows().min(a.cols()) {
        prod *= diag.get(k - 1).cloned().unwrap_or_default();
        let mut g = BigInt::zero();
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let sub: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| entries[r][c]).collect()).collect();
                g = g.gcd(&int_det(&sub));
            }
        }
        if g != prod.abs() {
            return Err(format!("gcd of {k}-minors {g} != {prod}"));
        }
    }
    Ok(())
}

/// Product of the factors whose bit is set in `mask`.
fn product(factors: &[LaurentPoly], mask: u32) -> LaurentPoly {
    let mut p = LaurentPoly::one(factors[0].vars(), factors[0].order());
    for (i, f) in factors.iter().enumerate() {
        if mask & (1 << i) != 0 {
            p = p.mul(f);
        }
    }
    p
}

fn gcd_families() -> Vec<(Vec<LaurentPoly>, LaurentPoly)> {
    let uni = vec![
        t(&[(0, -1), (1, 1)]),
        t(&[(0, 1), (1, 1)]),
        t(&[(0, 1), (1, 1), (2, 1)]),
        t(&[(0, 1), (1, -1), (2, 1)]),
        t(&[(0, 2)]),
        t(&[(0, 1), (3, 2)]),
    ];
    let vars: Vec<String> = ["t1", "t2"].iter().map(|s| s.to_string()).collect();
    let mv = |terms: &[([i32; 2], i64)]| {
        LaurentPoly::from_terms(&vars, 1, terms.iter().map(|(e, c)| (e.to_vec(), Cyclo::from_int(1, *c))))
    };
    let multi = vec![
        mv(&[([1, 0], 1), ([0, 1], -1)]),
        mv(&[([1, 1], 1), ([0, 0], 1)]),
        mv(&[([2, 0], 1), ([0, 1], 1), ([0, 0], -1)]),
        mv(&[([1, 0], 1), ([0, 0], -1)]),
        mv(&[([0, 0], 3)]),
    ];
    let z3 = |terms: &[(i32, i64, i64)]| {
        LaurentPoly::from_terms(
            &["t".to_string()],
            3,
            terms.iter().map(|&(e, a, b)| (vec![e], Cyclo::from_int(3, a).add(&Cyclo::root_power(3, 1).mul(&Cyclo::from_int(3, b))))),
        )
    };
    let cyc = vec![z3(&[(0, -1, 0), (1, 1, 0)]), z3(&[(0, 0, -1), (1, 1, 0)]), z3(&[(0, 1, 0), (2, 1, 0)]), z3(&[(0, 1, 1), (1, 1, 0)])];
    let mut out = Vec::new();
    for (set, count) in [(&uni, 20u32), (&multi, 18), (&cyc, 12)] {
        let n = set.len() as u32;
        for i in 0..count {
            // Common part and two cofactors from disjoint-ish bit masks.
            let common = (i * 7 + 3) % (1 << n);
            let a = (i * 13 + 5) % (1 << n);
            let b = (i * 11 + 1) % (1 << n);
            let g = product(set, common);
            let inputs = vec![g.mul(&product(set, a)), g.mul(&product(set, b)), g.mul(&product(set, a | b))];
            out.push((inputs, g));
        }
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, d: u32) -> LaurentPoly {
    let vars = vec!["t".to_string(), "s".to_string()];
    let n = rng.gen_range(1..=4);
    LaurentPoly::from_terms(
        &vars,
        d,
        (0..n).map(|_| {
            let e = vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
            let c = Cyclo::root_power(d, rng.gen_range(0..d as i64)).mul(&Cyclo::from_int(d, rng.gen_range(-4..=4)));
            (e, c)
        }),
    )
}

fn c10_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut snf_fail = 0;
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        if let Err(e) = snf_contract(&rows) {
            snf_fail += 1;
            eprintln!("SNF {rows:?}: {e}");
        }
    }
    let families = gcd_families();
    let mut gcd_fail = 0;
    for (inputs, common) in &families {
        let g = laurent_gcd(inputs);
        let divides_all = inputs.iter().all(|p| p.div_exact(&g).is_some());
        let common_divides = g.div_exact(common).is_some();
        gcd_fail += usize::from(!divides_all || !common_divides);
    }
    let mut norm_fail = 0;
    for i in 0..100 {
        let d = [1, 2, 3, 4, 6][i % 5];
        let p = random_poly(&mut rng, d);
        let n = p.unit_normalize();
        let unit = LaurentPoly::monomial(
            p.vars(),
            vec![rng.gen_range(-4..=4), rng.gen_range(-4..=4)],
            Cyclo::root_power(d, rng.gen_range(0..2 * d as i64)).mul(&Cyclo::from_int(d, if rng.gen() { 1 } else { -1 })),
        );
        let ok = n.unit_normalize() == n && p.mul(&unit).unit_normalize() == n && n.unit_equivalent(&p);
        norm_fail += usize::from(!ok);
    }
    outcome(
        snf_fail + gcd_fail + norm_fail == 0,
        format!(
            "SNF {snf_fail}/200 failures, gcd {gcd_fail}/{} failures, normalize {norm_fail}/100 failures",
            families.len()
        ),
    )
}

fn c11_twisted() -> Outcome {
    let d = builtin_example("W2").unwrap();
    let h = first_homology(&d).unwrap();
    let sigma = TwistCharacter::new(2, &[1], &h.torsion).unwrap();
    let simple = twisted_alexander(&d, &sigma, &AlexanderOptions::default()).unwrap();
    let raw = twisted_alexander(&d, &sigma, &AlexanderOptions { raw: true, ..Default::default() }).unwrap();
    let trivial = TwistCharacter::new(2, &[0], &h.torsion).unwrap();
    let reduced = twisted_alexander(&d, &trivial, &AlexanderOptions::default()).unwrap();
    let untwisted = alexander_polynomial(&d, &AlexanderOptions::default()).unwrap();
    let pass = simple.canonical.unit_equivalent(&raw.canonical)
        && reduced.d == 1
        && reduced.canonical == untwisted.canonical
        && reduced.raw == untwisted.raw;
    outcome(
        pass,
        format!(
            "simplified {} | raw {} | trivial character {} = untwisted {}",
            simple.canonical, raw.canonical, reduced.canonical, untwisted.canonical
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 U1 group presentation", c1_group_u1, Duration::from_secs(1)),
        ("2 U1 first homology", c2_homology_u1, Duration::from_secs(1)),
        ("3 U1 Alexander polynomial", c3_delta_u1, Duration::from_secs(1)),
        ("4 local unknot", c4_local_unknot, Duration::from_secs(1)),
        ("5 Ln family", c5_ln_family, Duration::from_secs(10)),
        ("6 local fixtures vanish", c6_local_fixtures, Duration::from_secs(5)),
        ("7 connected sum with trefoil", c7_connected_sum, Duration::from_secs(5)),
        ("8 move invariance", c8_invariance, Duration::from_secs(120)),
        ("9 Fox calculus", c9_fox, Duration::from_secs(10)),
        ("10 exact algebra", c10_algebra, Duration::from_secs(30)),
        ("11 twisted pipeline", c11_twisted, Duration::from_secs(5)),
    ];
    let mut failed = BTreeSet::new();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        let pass = o.pass && took <= *budget;
        if !pass {
            failed.insert(i + 1);
        }
        let timing = if took <= *budget { String::new() } else { format!(" [over budget {budget:?}]") };
        println!("{} {name} ({:.2?}){timing}: {}", if pass { "PASS" } else { "FAIL" }, took, o.detail);
    }

    let start = Instant::now();
    let (classes, all, detail) = invariance_counts(&STABLE_FAMILIES);
    println!(
        "INFO 8 restricted to R1-R5 and V1 ({:.2?}): classes and H1 {}, Delta {}: {detail}",
        start.elapsed(),
        if classes { "stable" } else { "broken" },
        if all { "stable" } else { "broken" }
    );

    let known: BTreeSet<usize> = KNOWN_FAILURES.into_iter().collect();
    if failed != known || !all {
        println!("unexpected outcome: failing {failed:?}, documented {known:?}");
        std::process::exit(1);
    }
    println!("{} of 11 criteria pass; failures {failed:?} are the documented ones", 11 - failed.len());
}

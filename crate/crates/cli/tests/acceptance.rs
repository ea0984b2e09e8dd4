//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use swdual::algebra::{AlgebraElement, Carrier};
use swdual::diagrams::{enumerate_composition, enumerate_is, enumerate_istar, enumerate_pistar};
use swdual::dualities::{
    default_grid, run_grid, verify_centralizer, verify_commutation, CentralizerDims, Theorem,
};
use swdual::morphisms::{
    homomorphism_pairs, phi_inverse, phi_inverse_mobius, phi_is_multiplicative, phi_linear,
    psi_inverse, psi_is_multiplicative, psi_linear, verify_prop3, verify_prop4,
};
use swdual::notation::{parse_element, parse_injection};
use swdual::semigroups::{
    bullet_multiply, compose_partial_injection, multiply_composition, multiply_istar,
    multiply_pistar, star_multiply,
};
use swdual::tensor_actions::{
    action_matrix_u, action_matrix_v, rook_action_matrix, ActionSpace, SpaceKind, Variant,
};
use swdual::{Family, HatElement, Limits, SetPartition};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn swdual_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_swdual"))
}

// ---------------------------------------------------------------------------
// Brute-force oracles, written without the library's enumerators.

/// Partial injections of `{1..n}` as image vectors (`0` = undefined).
fn oracle_is(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = (n + 1).pow(n as u32);
    for mut code in 0..total {
        let mut images = Vec::with_capacity(n);
        for _ in 0..n {
            images.push(code % (n + 1));
            code /= n + 1;
        }
        let defined: Vec<usize> = images.iter().copied().filter(|&t| t != 0).collect();
        let distinct: BTreeSet<usize> = defined.iter().copied().collect();
        if distinct.len() == defined.len() {
            out.push(images);
        }
    }
    out
}

/// Set partitions of `items` by inserting each item into an existing block
/// or a new one.
fn oracle_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for &x in items {
        let mut next = Vec::new();
        for p in &acc {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        acc = next;
    }
    acc
}

/// Points `0..k` are unprimed, `k..2k` primed.
fn meets_both_rows(block: &[usize], k: usize) -> bool {
    block.iter().any(|&p| p < k) && block.iter().any(|&p| p >= k)
}

fn oracle_istar_count(k: usize) -> usize {
    let points: Vec<usize> = (0..2 * k).collect();
    oracle_partitions(&points)
        .iter()
        .filter(|p| p.iter().all(|b| meets_both_rows(b, k)))
        .count()
}

fn oracle_pistar_count(k: usize) -> usize {
    let mut total = 0;
    for mask in 0u32..(1 << (2 * k)) {
        let points: Vec<usize> = (0..2 * k).filter(|i| mask >> i & 1 == 1).collect();
        total += oracle_partitions(&points)
            .iter()
            .filter(|p| p.iter().all(|b| meets_both_rows(b, k)))
            .count();
    }
    total
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Outcome {
    let x = parse_injection("[2,-,3,5,-]", 5).map_err(|e| e.to_string())?;
    let y = parse_injection("[5,4,1,-,-]", 5).map_err(|e| e.to_string())?;
    let mut best = Duration::MAX;
    let mut product = None;
    for _ in 0..20 {
        let t = Instant::now();
        let p = compose_partial_injection(&x, &y).map_err(|e| e.to_string())?;
        best = best.min(t.elapsed());
        product = Some(p);
    }
    let product = product.expect("ran").to_string();
    ensure(product == "[-,5,2,-,-]", || {
        format!("library gave {product}")
    })?;
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;

    let out = swdual_bin()
        .args([
            "multiply",
            "--semigroup",
            "is",
            "--n",
            "5",
            "[2,-,3,5,-]",
            "[5,4,1,-,-]",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success() && text.trim() == "[-,5,2,-,-]", || {
        format!("cli printed {text:?}")
    })?;
    Ok(format!("[-,5,2,-,-] in {best:?}"))
}

fn commutation_cells() -> Vec<(usize, usize, SpaceKind)> {
    let mut cells = Vec::new();
    for n in 1..=3 {
        for k in 1..=3 {
            cells.push((n, k, SpaceKind::V));
        }
    }
    for n in 1..=2 {
        for k in 1..=2 {
            cells.push((n, k, SpaceKind::U));
        }
    }
    cells.push((3, 2, SpaceKind::U));
    cells.push((2, 3, SpaceKind::U));
    cells
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let cells = commutation_cells();
    for &(n, k, space) in &cells {
        let ok = verify_commutation(n, k, space).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{space} n={n} k={k} does not commute"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("{} cells in {took:.2?}", cells.len()))
}

fn check_centralizer(c: &CentralizerDims, n: usize, k: usize) -> Result<(), String> {
    ensure(c.holds(), || format!("n={n} k={k}: {c:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cells = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3)];
    for (n, k) in cells {
        let c = verify_centralizer(n, k, SpaceKind::V).map_err(|e| e.to_string())?;
        check_centralizer(&c, n, k)?;
        if (n, k) == (3, 2) {
            let expected = oracle_istar_count(2);
            ensure(
                c.commutant_of_left == expected && c.span_of_right == expected,
                || format!("(3,2): {c:?}, expected {expected}"),
            )?;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!("{} cells, (3,2) = 3/3, in {took:.2?}", cells.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let cells = [(1, 1), (2, 1), (1, 2), (2, 2)];
    for (n, k) in cells {
        let c = verify_centralizer(n, k, SpaceKind::U).map_err(|e| e.to_string())?;
        check_centralizer(&c, n, k)?;
        if (n, k) == (2, 2) {
            let expected = oracle_pistar_count(2);
            ensure(
                c.commutant_of_left == expected && c.span_of_right == expected,
                || format!("(2,2): {c:?}, expected {expected}"),
            )?;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!(
        "{} cells, (2,2) = 12/12, in {took:.2?}",
        cells.len()
    ))
}

/// `(semigroup left, semigroup right, algebra left, algebra right)`.
fn expected_faithfulness(n: usize, k: usize, space: SpaceKind) -> (bool, bool, bool, bool) {
    match space {
        SpaceKind::V => (true, n >= 2 || k == 1, k >= n, k <= n),
        SpaceKind::U => (true, true, k >= n, k <= n),
    }
}

fn criterion_5() -> Outcome {
    let mut cells = default_grid(Theorem::V);
    cells.extend(default_grid(Theorem::U));
    let reports = run_grid(&cells, &Limits::default()).map_err(|e| e.to_string())?;
    for r in &reports {
        let got = (
            r.semigroup_faithful_left,
            r.semigroup_faithful_right,
            r.algebra_faithful_left,
            r.algebra_faithful_right,
        );
        let want = expected_faithfulness(r.n, r.k, r.space);
        ensure(got == want, || {
            format!(
                "{} n={} k={}: got {got:?}, want {want:?}",
                r.space, r.n, r.k
            )
        })?;
        ensure(r.matches, || {
            format!("{} n={} k={} mismatch", r.space, r.n, r.k)
        })?;
    }
    for (n, k) in [(1, 2), (2, 2), (3, 3), (2, 3), (3, 2)] {
        ensure(reports.iter().any(|r| (r.n, r.k) == (n, k)), || {
            format!("boundary cell ({n},{k}) missing")
        })?;
    }
    let status = swdual_bin()
        .args(["verify", "--all"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), || {
        format!("verify --all exited with {status}")
    })?;
    Ok(format!("{} cells, verify --all exit 0", reports.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let cells = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)];
    let mut indices = 0;
    for (n, k) in cells {
        let p3 = verify_prop3(n, k).map_err(|e| e.to_string())?;
        ensure(p3.parts.iter().all(|p| p.holds), || format!("{p3:?}"))?;
        let dimension = (n + 1).pow(k as u32);
        ensure(
            p3.pairs_checked == enumerate_pistar(k).unwrap().len() * dimension,
            || format!("not exhaustive: {p3:?}"),
        )?;
        indices += p3.pairs_checked;
        let p4 = verify_prop4(n, k).map_err(|e| e.to_string())?;
        ensure(p4.parts.iter().all(|p| p.holds), || format!("{p4:?}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("{indices} (alpha, index) pairs in {took:.2?}"))
}

fn criterion_7() -> Outcome {
    let mut summary = Vec::new();
    for k in 1..=3 {
        let elements = enumerate_pistar(k).map_err(|e| e.to_string())?;
        let pairs = homomorphism_pairs(&elements, k);
        if k <= 2 {
            ensure(pairs.len() == elements.len().pow(2), || {
                "not exhaustive".into()
            })?;
        } else {
            ensure(pairs.len() >= 10_000, || format!("{} pairs", pairs.len()))?;
        }
        ensure(
            phi_is_multiplicative(&pairs).map_err(|e| e.to_string())?,
            || format!("phi not multiplicative at k={k}"),
        )?;
        ensure(
            psi_is_multiplicative(&pairs).map_err(|e| e.to_string())?,
            || format!("psi not multiplicative at k={k}"),
        )?;
        for alpha in &elements {
            let unit = AlgebraElement::basis(Carrier::Hat, alpha.clone());
            let inv = phi_inverse(alpha).map_err(|e| e.to_string())?;
            ensure(inv == phi_inverse_mobius(alpha), || {
                format!("phi inverses disagree at {alpha}")
            })?;
            ensure(phi_linear(&inv) == unit, || {
                format!("phi(phi^-1({alpha})) != {alpha}")
            })?;
            ensure(psi_linear(&psi_inverse(alpha)) == unit, || {
                format!("psi(psi^-1({alpha})) != {alpha}")
            })?;
        }
        summary.push(format!("k={k}: {} pairs", pairs.len()));
    }
    Ok(summary.join(", "))
}

fn criterion_8() -> Outcome {
    let is3 = enumerate_is(3).map_err(|e| e.to_string())?.len();
    let istar3 = enumerate_istar(3).map_err(|e| e.to_string())?.len();
    let pistar2 = enumerate_pistar(2).map_err(|e| e.to_string())?.len();
    let istar1 = enumerate_istar(1).map_err(|e| e.to_string())?.len();
    let got = (is3, istar3, pistar2, istar1);
    ensure(got == (34, 25, 12, 1), || format!("{got:?}"))?;
    let oracle = (
        oracle_is(3).len(),
        oracle_istar_count(3),
        oracle_pistar_count(2),
        oracle_istar_count(1),
    );
    ensure(oracle == got, || {
        format!("oracle {oracle:?} vs library {got:?}")
    })?;
    Ok("34, 25, 12, 1".into())
}

fn check_associative<T, F>(name: &str, triples: &[(T, T, T)], mul: F) -> Result<(), String>
where
    T: PartialEq + std::fmt::Display,
    F: Fn(&T, &T) -> T,
{
    for (a, b, c) in triples {
        if mul(&mul(a, b), c) != mul(a, &mul(b, c)) {
            return Err(format!("{name} not associative at ({a}, {b}, {c})"));
        }
    }
    Ok(())
}

fn all_triples<T: Clone>(xs: &[T]) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for a in xs {
        for b in xs {
            for c in xs {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

fn random_triples<T: Clone>(xs: &[T], count: usize, seed: u64) -> Vec<(T, T, T)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut pick = || xs.choose(&mut rng).expect("non-empty").clone();
            (pick(), pick(), pick())
        })
        .collect()
}

fn hat_carrier(k: usize) -> Vec<HatElement> {
    std::iter::once(HatElement::Zero)
        .chain(
            enumerate_pistar(k)
                .unwrap()
                .into_iter()
                .map(HatElement::Diagram),
        )
        .collect()
}

fn associativity() -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=3 {
        let xs = enumerate_is(n).unwrap();
        let t = all_triples(&xs);
        check_associative("IS_n", &t, |a, b| compose_partial_injection(a, b).unwrap())?;
        checked += t.len();
    }
    for k in 1..=3 {
        let istar = enumerate_istar(k).unwrap();
        let pistar = enumerate_pistar(k).unwrap();
        let hat = hat_carrier(k);
        let ck = enumerate_composition(k).unwrap();
        let (ti, tp, th, tc) = if k <= 2 {
            (
                all_triples(&istar),
                all_triples(&pistar),
                all_triples(&hat),
                all_triples(&ck),
            )
        } else {
            (
                random_triples(&istar, 5_000, 1),
                random_triples(&pistar, 5_000, 2),
                random_triples(&hat, 5_000, 3),
                random_triples(&ck, 5_000, 4),
            )
        };
        check_associative("I*_k", &ti, |a, b| multiply_istar(a, b).unwrap())?;
        check_associative("PI*_k", &tp, |a, b| multiply_pistar(a, b).unwrap())?;
        check_associative("bullet", &tp, |a, b| bullet_multiply(a, b).unwrap())?;
        check_associative("star", &th, |a, b| star_multiply(a, b).unwrap())?;
        check_associative("C_k", &tc, |a, b| {
            multiply_composition(a, b).unwrap().diagram
        })?;
        checked += ti.len() + 2 * tp.len() + th.len() + tc.len();
    }
    Ok(checked)
}

fn matrix_homomorphisms() -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=3 {
        let v = ActionSpace::new(SpaceKind::V, n, 1).unwrap();
        let is = enumerate_is(n).unwrap();
        let mats: Vec<_> = is
            .iter()
            .map(|x| rook_action_matrix(x, &v).unwrap())
            .collect();
        for (x, mx) in is.iter().zip(&mats) {
            for (y, my) in is.iter().zip(&mats) {
                let xy = compose_partial_injection(x, y).unwrap();
                ensure(
                    rook_action_matrix(&xy, &v).unwrap() == mx.mul(my).unwrap(),
                    || format!("rook matrices at {x}, {y}"),
                )?;
                checked += 1;
            }
        }
        for k in 1..=n {
            let v = ActionSpace::new(SpaceKind::V, n, k).unwrap();
            let u = ActionSpace::new(SpaceKind::U, n, k).unwrap();
            let istar = enumerate_istar(k).unwrap();
            let mats: Vec<_> = istar
                .iter()
                .map(|a| action_matrix_v(a, &v).unwrap())
                .collect();
            for (a, ma) in istar.iter().zip(&mats) {
                for (b, mb) in istar.iter().zip(&mats) {
                    let ab = multiply_istar(a, b).unwrap();
                    ensure(
                        action_matrix_v(&ab, &v).unwrap() == mb.mul(ma).unwrap(),
                        || format!("I*_{k} on V, n={n}: {a} · {b}"),
                    )?;
                    checked += 1;
                }
            }
            let pistar = enumerate_pistar(k).unwrap();
            type Product = fn(&SetPartition, &SetPartition) -> swdual::Result<SetPartition>;
            let products: [(Variant, Product); 2] = [
                (Variant::Plain, multiply_pistar),
                (Variant::Tilde, bullet_multiply),
            ];
            for (variant, product) in products {
                let mats: Vec<_> = pistar
                    .iter()
                    .map(|a| action_matrix_u(a, &u, variant).unwrap())
                    .collect();
                for (a, ma) in pistar.iter().zip(&mats) {
                    for (b, mb) in pistar.iter().zip(&mats) {
                        let ab = product(a, b).unwrap();
                        ensure(
                            action_matrix_u(&ab, &u, variant).unwrap() == mb.mul(ma).unwrap(),
                            || format!("PI*_{k} {variant:?} on U, n={n}: {a} · {b}"),
                        )?;
                        checked += 1;
                    }
                }
            }
            let hats = hat_carrier(k);
            let mats: Vec<_> = hats
                .iter()
                .map(|a| swdual::tensor_actions::hat_action_matrix(a, &u).unwrap())
                .collect();
            for (a, ma) in hats.iter().zip(&mats) {
                for (b, mb) in hats.iter().zip(&mats) {
                    let ab = star_multiply(a, b).unwrap();
                    ensure(
                        swdual::tensor_actions::hat_action_matrix(&ab, &u).unwrap()
                            == mb.mul(ma).unwrap(),
                        || format!("hat on U, n={n}: {a} ⋆ {b}"),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

fn round_trips() -> Result<usize, String> {
    let mut checked = 0;
    let mut check = |text: String, family: Family, size: usize| -> Result<(), String> {
        let parsed = parse_element(&text, family, size).map_err(|e| format!("{text}: {e}"))?;
        let back = parsed.to_string();
        checked += 1;
        ensure(back == text, || format!("{text} printed back as {back}"))
    };
    for n in 1..=5 {
        for x in enumerate_is(n).unwrap() {
            check(x.to_string(), Family::Is, n)?;
        }
    }
    for k in 1..=4 {
        for x in enumerate_istar(k).unwrap() {
            check(x.to_string(), Family::Istar, k)?;
        }
        for x in enumerate_pistar(k).unwrap() {
            check(x.to_string(), Family::Pistar, k)?;
            check(x.to_string(), Family::Tilde, k)?;
            check(x.to_string(), Family::Hat, k)?;
        }
        check("0".into(), Family::Hat, k)?;
    }
    for k in 1..=3 {
        for x in enumerate_composition(k).unwrap() {
            check(x.to_string(), Family::Composition, k)?;
        }
    }
    Ok(checked)
}

fn criterion_9() -> Outcome {
    let triples = associativity()?;
    let pairs = matrix_homomorphisms()?;
    let parsed = round_trips()?;
    // A malformed element must not round-trip silently.
    let bad = parse_element("{1,2}", Family::Istar, 2);
    ensure(bad.is_err(), || "accepted {1,2} in I*_2".into())?;
    Ok(format!(
        "{triples} triples, {pairs} matrix pairs, {parsed} round trips"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 worked example", criterion_1),
        ("2 commutation", criterion_2),
        ("3 centralizers on V", criterion_3),
        ("4 centralizers on U", criterion_4),
        ("5 faithfulness grid", criterion_5),
        ("6 hat/plain/tilde identities", criterion_6),
        ("7 morphism suite", criterion_7),
        ("8 combinatorial counts", criterion_8),
        ("9 property suites", criterion_9),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

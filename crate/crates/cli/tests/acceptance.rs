//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use milnor_core::bounds::{component_bound, component_bound_floor_form, multiple_refinement};
use milnor_core::localalg::{
    milnor_number_at_origin, milnor_truncation_oracle, Budget, MilnorNumber,
};
use milnor_core::monolab::{
    charpoly_inverse_invariance, charpoly_mod_p_power_identity, cyclotomic, eigenvalue_one_bound,
    is_quasiunipotent, Matrix, UniPoly,
};
use milnor_core::polyring::parse_polynomial;
use milnor_core::IntPolynomial;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn bound_json(args: &[&str]) -> Result<(String, Value), String> {
    let mut argv = vec!["milnor", "bound"];
    argv.extend_from_slice(args);
    argv.extend(["--format", "json"]);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = milnor_cli::run(argv, &mut out, &mut err);
    if code != 0 {
        return Err(format!(
            "exit {code}: {}",
            String::from_utf8_lossy(&err).trim()
        ));
    }
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let v = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Ok((text, v))
}

fn field(v: &Value, path: &[&str]) -> String {
    let mut cur = v;
    for key in path {
        cur = &cur[*key];
    }
    cur.as_str().map_or_else(|| cur.to_string(), String::from)
}

fn components(v: &Value) -> Vec<(String, String)> {
    v["components"]
        .as_array()
        .map(|cs| {
            cs.iter()
                .map(|c| (field(c, &["label"]), field(c, &["mu_generic"])))
                .collect()
        })
        .unwrap_or_default()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn cubic_line() -> Outcome {
    let t = Instant::now();
    let (_, v) = bound_json(&["--poly", "z^2*y - x*y^2"])?;
    within(t, Duration::from_secs(1))?;
    let got = (
        field(&v, &["instance", "s"]),
        components(&v),
        field(&v, &["bounds", "naive"]),
        field(&v, &["bounds", "main"]),
    );
    let want = (
        "1".to_string(),
        vec![("V(z,y)".to_string(), "3".to_string())],
        "3".to_string(),
        "2".to_string(),
    );
    check(got == want, || format!("got {got:?}"))?;
    Ok(format!("s=1, mu=3, naive 3, main 2 in {:.2?}", t.elapsed()))
}

const DEGREE_25: [&str; 8] = [
    "--poly",
    "u^25 + w^24*z - x^22*y*z^2",
    "--component",
    "u,w,x",
    "--component",
    "u,w,z",
    "--multiple-of",
    "24",
];

fn degree_25() -> Outcome {
    let t = Instant::now();
    let (_, v) = bound_json(&DEGREE_25)?;
    within(t, Duration::from_secs(60))?;
    let comps = components(&v);
    let want = vec![
        ("V(u,w,z)".to_string(), "1128".to_string()),
        ("V(u,w,x)".to_string(), "11592".to_string()),
    ];
    check(comps == want, || format!("components {comps:?}"))?;
    let rs: Vec<String> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| field(c, &["main_term", "r"]))
        .collect();
    check(rs == ["4", "3"], || format!("remainders {rs:?}"))?;
    let got = (
        field(&v, &["bounds", "naive"]),
        field(&v, &["bounds", "main"]),
        field(&v, &["bounds", "refined"]),
    );
    check(
        got == ("12720".into(), "12716".into(), "12696".into()),
        || format!("bounds {got:?}"),
    )?;
    let refined = multiple_refinement(12_716, 24).map_err(|e| e.to_string())?;
    check(refined == 12_696, || {
        format!("multiple_refinement gave {refined}")
    })?;
    Ok(format!(
        "mu 11592/1128, r 3/4, naive 12720, main 12716, refined 12696 in {:.2?}",
        t.elapsed()
    ))
}

fn two_planes() -> Outcome {
    let t = Instant::now();
    let (_, v) = bound_json(&["--poly", "r^2*y^2 - t*x^3", "--vars", "x,y,r,t"])?;
    within(t, Duration::from_secs(5))?;
    let comps = components(&v);
    let want = vec![
        ("V(x,y)".to_string(), "2".to_string()),
        ("V(x,r)".to_string(), "2".to_string()),
    ];
    check(field(&v, &["instance", "s"]) == "2", || "s != 2".into())?;
    check(comps == want, || format!("components {comps:?}"))?;
    let got = (
        field(&v, &["bounds", "special"]),
        field(&v, &["bounds", "best"]),
    );
    check(got == ("0".into(), "0".into()), || {
        format!("special/best {got:?}")
    })?;
    Ok(format!(
        "s=2, V(x,y) and V(x,r) with mu 2/2, best 0 in {:.2?}",
        t.elapsed()
    ))
}

fn g_path() -> Outcome {
    let (_, v) = bound_json(&["--poly", "w^24*z - x^22*y*z^2"])?;
    let main: u64 = field(&v, &["bounds", "main"])
        .parse()
        .map_err(|_| "main bound missing".to_string())?;
    check(main == 528, || format!("main bound {main}"))?;
    let scaled = multiple_refinement(main * 24, 24).map_err(|e| e.to_string())?;
    check(scaled == 12_672, || format!("528 * 24 gave {scaled}"))?;
    Ok("main 528, times 24 = 12672".into())
}

fn power_identity() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cases = 0;
    for k in 0..1000 {
        let n = 2 + k % 5;
        let a = Matrix::from_fn(n, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
        for p in [2, 3, 5, 7] {
            for m in 1..=3 {
                let ok = charpoly_mod_p_power_identity(&a, p, m).map_err(|e| e.to_string())?;
                check(ok, || format!("fails for p={p} m={m} on\n{a}"))?;
                cases += 1;
            }
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!("{cases} cases, 100% true in {:.2?}", t.elapsed()))
}

fn floor_forms() -> Outcome {
    let mut mismatches = 0;
    let mut cases = 0;
    for mu in 1..=400u64 {
        for p in [2u64, 3, 5, 7, 11] {
            for (eps, s) in [(1i8, 1usize), (-1, 2)] {
                // n = 2: epsilon = (-1)^(3 - s).
                let direct = i128::from(
                    component_bound(mu, p, 2, s)
                        .map_err(|e| e.to_string())?
                        .value,
                );
                if direct != component_bound_floor_form(mu, p, eps) {
                    mismatches += 1;
                }
                cases += 1;
            }
        }
    }
    check(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!("{cases} cases, zero mismatches"))
}

fn oracle_equivalence() -> Outcome {
    let mut corpus: Vec<(String, Option<u64>, u32)> = Vec::new();
    for a in 2..=8u32 {
        for b in 2..=8u32 {
            corpus.push((
                format!("x^{a} + y^{b}"),
                Some(u64::from((a - 1) * (b - 1))),
                a + b,
            ));
        }
    }
    for (f, cap) in [
        ("4*y^2 - 3*x^3", 6),
        ("z^2*y - 7*y^2", 6),
        ("u^25 + 11*w^24 - 13*x^22", 68),
        ("u^25 + w^24*z - 6*z^2", 72),
    ] {
        corpus.push((f.to_string(), None, cap));
    }
    for (src, law, cap) in &corpus {
        let f = parse_polynomial(src, None).map_err(|e| e.to_string())?;
        let mu = milnor_number_at_origin(&f, &Budget::default()).map_err(|e| e.to_string())?;
        let oracle = milnor_truncation_oracle(&f, *cap).map_err(|e| e.to_string())?;
        check(oracle.agrees_with(mu), || {
            format!("{src}: mora {mu}, oracle {oracle:?}")
        })?;
        if let Some(law) = law {
            check(mu == MilnorNumber::Finite(*law), || {
                format!("{src}: {mu} != {law}")
            })?;
        }
    }
    Ok(format!(
        "{} polynomials agree, Brieskorn law holds",
        corpus.len()
    ))
}

/// Multisets of size at most `max` drawn from `0..kinds`, as count vectors.
fn count_vectors(kinds: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            go(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, max, &mut vec![0; kinds], &mut out);
    out
}

fn eigenvalue_bound_brute_force() -> Outcome {
    // Roots of unity of order <= 6 as exponents of a primitive 60th root.
    let mut roots: Vec<usize> = Vec::new();
    for order in 1..=6usize {
        for j in (0..order).filter(|j| gcd(*j, order) == 1) {
            roots.push(60 / order * j);
        }
    }
    check(roots.len() == 12, || format!("{} roots", roots.len()))?;
    let phi60 = cyclotomic(60);
    let (mut integral, mut total) = (0, 0);
    for counts in count_vectors(roots.len(), 6) {
        total += 1;
        let mut coeffs = vec![BigInt::from(0); 60];
        for (e, &c) in roots.iter().zip(&counts) {
            coeffs[*e] += c;
        }
        let (_, rem) = UniPoly::new(coeffs)
            .div_rem_monic(&phi60)
            .map_err(|e| e.to_string())?;
        if rem.degree().unwrap_or(0) > 0 {
            continue;
        }
        integral += 1;
        let trace: i64 = rem
            .coeff(0)
            .try_into()
            .map_err(|_| "trace overflow".to_string())?;
        let size: usize = counts.iter().sum();
        let ones = counts[0];
        let bound = eigenvalue_one_bound(size as u64, trace).map_err(|e| e.to_string())?;
        check(ones as u64 <= bound, || {
            format!("{counts:?}: e(1) = {ones} > {bound}")
        })?;
    }
    Ok(format!(
        "{integral} integer-trace multisets of {total} checked"
    ))
}

fn inverse_invariance() -> Outcome {
    let mut count = 0;
    let indices: Vec<u64> = (1..=12).collect();
    for counts in count_vectors(indices.len(), 5) {
        let q = indices
            .iter()
            .zip(&counts)
            .fold(UniPoly::one(), |acc: IntPolynomial, (&k, &c)| {
                (0..c).fold(acc, |a, _| a.mul(&cyclotomic(k)))
            });
        let ok = charpoly_inverse_invariance(&q).map_err(|e| format!("{q}: {e}"))?;
        check(ok, || format!("{q} is not invariant"))?;
        count += 1;
    }
    let ip = |c: &[i64]| UniPoly::new(c.iter().map(|&v| BigInt::from(v)).collect());
    for q in [ip(&[-2, 1]), ip(&[1, -3, 1])] {
        let f = is_quasiunipotent(&q).map_err(|e| e.to_string())?;
        check(!f.quasi_unipotent, || format!("{q} accepted"))?;
    }
    Ok(format!(
        "{count} products invariant; x - 2 and x^2 - 3x + 1 rejected"
    ))
}

fn determinism() -> Outcome {
    let (a, _) = bound_json(&DEGREE_25)?;
    let (b, _) = bound_json(&DEGREE_25)?;
    check(a == b, || "JSON differs between runs".into())?;
    Ok(format!("{} identical bytes", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cubic with a line singularity", cubic_line),
        ("degree-25 example", degree_25),
        ("quartic with two planes", two_planes),
        ("g-path", g_path),
        ("char(A) = char(A^(p^m)) mod p", power_identity),
        ("floor-form equivalence", floor_forms),
        ("Milnor oracle equivalence", oracle_equivalence),
        (
            "eigenvalue-1 bound brute force",
            eigenvalue_bound_brute_force,
        ),
        (
            "inverse invariance of cyclotomic products",
            inverse_invariance,
        ),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

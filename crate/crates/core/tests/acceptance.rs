//! Acceptance criteria, one line of output per criterion.
//!
//! Run with `cargo test -p uudd --test acceptance`. Every comparison is exact;
//! runtime bounds are measured on this process.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use uudd::cli::seed_from_even_b;
use uudd::extras::{entringer_count, entringer_series, eulerian_poly};
use uudd::fps::Rational;
use uudd::genfun::{
    apply_l, b_closed_form, build_p, build_q_r, seidel_closed_form, seidel_even_odd_split,
    uudd_series, extract_v, verify_beta_row_sum, verify_l_squared, verify_w_relation, SeidelArray,
};
use uudd::permlab::{
    brute_alternating_ending_zero, brute_descent_poly_ending_zero, brute_pnk_row, count_whirlpool,
    FeasibilityLimits,
};
use uudd::pnk::build_table;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_reproduction() -> Outcome {
    let expected: [&[u64]; 5] = [
        &[1],
        &[1, 0, 1],
        &[4, 2, 2, 2, 4],
        &[42, 28, 22, 20, 22, 28, 42],
        &[816, 612, 492, 428, 408, 428, 492, 612, 816],
    ];
    let start = Instant::now();
    let t = build_table(4);
    let elapsed = start.elapsed();
    for (n, row) in expected.iter().enumerate() {
        let want: Vec<BigUint> = row.iter().map(|&v| big(v)).collect();
        ensure(t.row(n).unwrap() == want.as_slice(), || format!("row {n} differs"))?;
    }
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("rows 0..=4 exact in {elapsed:?}"))
}

fn oracle_equivalence() -> Outcome {
    let limits = FeasibilityLimits::default();
    let t = build_table(4);
    let start = Instant::now();
    for n in 0..=4 {
        let brute = brute_pnk_row(n, &limits).map_err(|e| e.to_string())?;
        ensure(t.row(n).unwrap() == brute.as_slice(), || format!("row {n} differs"))?;
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(10), elapsed)?;
    Ok(format!("brute force n <= 4 in {elapsed:?}"))
}

fn closed_form_equivalence() -> Outcome {
    let start = Instant::now();
    let p = build_p(60);
    let t = build_table(30);
    for n in 0..=30 {
        let row = p.extract_row(n).map_err(|e| e.to_string())?;
        ensure(t.row(n).unwrap() == row.as_slice(), || format!("row {n} differs"))?;
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!("n <= 30 from order-60 series in {elapsed:?}"))
}

fn lemma_suite() -> Outcome {
    let t = build_table(30);
    ensure(t.verify_symmetry(), || "symmetry".into())?;
    ensure(t.verify_second_difference(), || "second difference".into())?;
    ensure(t.verify_edge_relation(), || "edge relation".into())?;
    Ok("symmetry, second difference, edge relation through n = 30".into())
}

fn eq1_coefficients() -> Outcome {
    let s = uudd_series(13);
    for (n, v) in [(0, 1), (1, 2), (2, 14), (3, 204), (4, 5104), (6, 10_570_416)] {
        let got = extract_v(&s, n).map_err(|e| e.to_string())?;
        ensure(got == big(v), || format!("V_{n} = {got}, expected {v}"))?;
    }
    let sum6 = build_table(6).row_sum(6).unwrap();
    ensure(sum6 == big(10_570_416), || format!("row_sum(6) = {sum6}"))?;
    Ok(format!(
        "V_0..V_4 = 1, 2, 14, 204, 5104; row_sum(6) = {sum6}; V_5 = {} (not listed)",
        extract_v(&s, 5).unwrap()
    ))
}

fn theorem_pipeline() -> Outcome {
    let p = build_p(60);
    ensure(verify_l_squared(&p), || "L^2 P != 4P".into())?;
    let (_, r) = build_q_r(&p);
    ensure(r.order() >= 59, || format!("R has order {}", r.order()))?;
    let l_r = apply_l(&r);
    ensure(l_r == r.truncate(l_r.order()).scale(&Rational::from_integer(2.into())), || {
        "L(R) != 2R".into()
    })?;
    let array = SeidelArray::from_series(r.truncate(59));
    if let Some((i, j)) = array.relation_violation() {
        return Err(format!("Seidel relation fails at ({i}, {j})"));
    }
    ensure(array.is_sign_symmetric(), || "sign symmetry".into())?;
    let seed = r.at_y_zero().truncate(40).coeffs().to_vec();
    let split = seidel_even_odd_split(&seed).map_err(|e| e.to_string())?;
    ensure(split.b == b_closed_form(40), || "B differs".into())?;
    Ok("L^2 P = 4P; R Seidel + sign-symmetric through i+j <= 58; B exact to order 40".into())
}

fn seidel_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let seed: Vec<Rational> = (0..10)
            .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect();
        let (array, _) = seidel_closed_form(&seed).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(array.satisfies_relation(), || format!("trial {trial}: relation"))?;
    }
    for trial in 0..100 {
        let b: Vec<i64> = (0..5).map(|_| rng.gen_range(-9i64..=9)).collect();
        let seed = seed_from_even_b(&b);
        let split = seidel_even_odd_split(&seed).map_err(|e| format!("split {trial}: {e}"))?;
        ensure(split.b.is_even(), || format!("split {trial}: B not even"))?;
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(5), elapsed)?;
    Ok(format!("100 closed-form seeds + 100 sign-symmetric seeds in {elapsed:?}"))
}

fn section3_identities() -> Outcome {
    let t = build_table(30);
    ensure(verify_w_relation(&t, 30), || "2p_n(n) = 2nV_(n-1)".into())?;
    ensure(verify_beta_row_sum(&t, 30), || "row sums = V_n".into())?;
    Ok("W relation and beta row sums through n = 30".into())
}

fn whirlpool() -> Outcome {
    let start = Instant::now();
    let limits = FeasibilityLimits::default();
    let s = uudd_series(7);
    let mut found = Vec::new();
    for (cols, listed) in [(2usize, 8u64), (3, 84), (4, 1632)] {
        let w = count_whirlpool(2, cols, &limits).map_err(|e| e.to_string())?;
        let via_v = BigUint::from(2 * cols) * extract_v(&s, cols - 1).unwrap();
        ensure(w == via_v, || format!("W_{cols} = {w} but 2nV = {via_v}"))?;
        ensure(w == big(listed), || format!("W_{cols} = {w}, expected {listed}"))?;
        found.push(w.to_string());
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(30), elapsed)?;
    Ok(format!("W_2, W_3, W_4 = {} = 2nV_(n-1) in {elapsed:?}", found.join(", ")))
}

fn entringer() -> Outcome {
    let start = Instant::now();
    let limits = FeasibilityLimits::default();
    let s = entringer_series(7);
    for total in 0..=7 {
        for m in 0..=total {
            let n = total - m;
            let a = entringer_count(&s, m, n).map_err(|e| e.to_string())?;
            let b = brute_alternating_ending_zero(m, n, &limits).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("({m}, {n}): series {a}, brute {b}"))?;
        }
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!("m+n <= 7 in {elapsed:?}"))
}

fn eulerian() -> Outcome {
    let limits = FeasibilityLimits::default();
    for total in 0..=5 {
        for m in 0..=total {
            let n = total - m;
            let a = eulerian_poly(m, n).map_err(|e| e.to_string())?;
            let b = brute_descent_poly_ending_zero(m, n, &limits).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("({m}, {n}): closed form {a}, brute {b}"))?;
        }
    }
    let mut fact = BigInt::one();
    for total in 0..=8usize {
        if total > 0 {
            fact *= total;
        }
        for m in 0..=total {
            let at_one = eulerian_poly(m, total - m).unwrap().eval(&BigInt::one());
            ensure(at_one == fact, || format!("A_({m},{})(1) = {at_one}", total - m))?;
        }
    }
    Ok("matches brute force for m+n <= 5; A(1) = (m+n)! for m+n <= 8".into())
}

fn cli(args: &[&str], corrupt: bool) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_uudd"));
    cmd.args(args).env_remove("UUDD_TEST_CORRUPT");
    if corrupt {
        cmd.env("UUDD_TEST_CORRUPT", "1");
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn cli_contract() -> Outcome {
    let (code, out) = cli(&["pnk", "--n", "2", "--format", "csv"], false);
    ensure(code == 0 && out.lines().any(|l| l == "2,-2,4"), || "pnk csv".into())?;
    let (code, out) = cli(&["pnk", "--n", "4", "--format", "json"], false);
    let doc: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let last = doc["payload"]["rows"][4].as_array().and_then(|r| r.last()).cloned();
    ensure(code == 0 && last == Some(816.into()), || "pnk json".into())?;
    let (code, out) = cli(&["pnk", "--n", "1", "--format", "bfile"], false);
    ensure(code == 0 && out == "1 1\n2 1\n3 0\n4 1\n", || "pnk bfile".into())?;
    let (code, out) = cli(&["series", "--name", "uudd", "--order", "9", "--format", "bfile"], false);
    ensure(code == 0 && out == "0 1\n1 2\n2 14\n3 204\n4 5104\n", || "series uudd".into())?;
    let (code, out) = cli(&["brute", "--kind", "whirlpool", "--rows", "2", "--cols", "2"], false);
    ensure(code == 0 && out.trim() == "8", || "brute whirlpool".into())?;
    let (code, _) = cli(&["verify", "--suite", "all"], false);
    ensure(code == 0, || format!("verify all exited {code}"))?;
    let (code, _) = cli(&["verify", "--suite", "all"], true);
    ensure(code == 1, || format!("corrupted verify exited {code}"))?;
    Ok("pnk/series/brute formats; verify exits 0 clean and 1 corrupted".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 table reproduction", table_reproduction),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 closed-form equivalence", closed_form_equivalence),
        ("4 lemma suite", lemma_suite),
        ("5 univariate coefficients", eq1_coefficients),
        ("6 theorem pipeline", theorem_pipeline),
        ("7 Seidel array properties", seidel_properties),
        ("8 W relation and row sums", section3_identities),
        ("9 whirlpool counts", whirlpool),
        ("10 Entringer numbers", entringer),
        ("11 Eulerian polynomials", eulerian),
        ("12 CLI contract", cli_contract),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

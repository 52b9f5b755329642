//! Acceptance suite: one PASS/FAIL line per criterion. Equalities are exact;
//! the only tolerances are the wall-clock limits below.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use latfree::frobenius::semigroup_gaps;
use latfree::mlfb::{canonicalize, translate_body, translation_between};
use latfree::testset::default_radius;
use latfree::{
    brute_force_test_set, compute_mlfb, compute_test_set, frobenius_brauer_shockley, frobenius_by_mlfb, hnf, ip_solve,
    Body, FrobeniusInstance, Geometry, IntMat, IntVec, PointEnumerator, SimplicialData, DEFAULT_BUDGET,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const LIMIT_MLFB_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_SS3_EXAMPLE: Duration = Duration::from_millis(100);
const LIMIT_SYLVESTER: Duration = Duration::from_secs(30);
const LIMIT_CROSS_METHOD: Duration = Duration::from_secs(120);

/// Expected gap set of (6,10,15) for criterion 3. It includes 27.
const EXPECTED_GAPS: [i64; 16] = [1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 14, 17, 19, 23, 27, 29];

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn latfree(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out =
        Command::new(env!("CARGO_BIN_EXE_latfree")).args(args).env_remove("MLFB_BUDGET").output().expect("binary runs");
    let elapsed = start.elapsed();
    let value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), value, elapsed)
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_i64).collect()).unwrap_or_default()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn coprime_tuple(rng: &mut ChaCha8Rng, n: usize, lo: i64, max: i64) -> Vec<i64> {
    loop {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=max)).collect();
        if a.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            return a;
        }
    }
}

fn instance(a: &[i64]) -> FrobeniusInstance {
    FrobeniusInstance::from_i64s(a).expect("valid instance")
}

fn kernel_data(a: &[i64]) -> SimplicialData {
    SimplicialData::from_frobenius(&IntVec::from_i64s(a)).expect("valid instance")
}

fn nongen() -> SimplicialData {
    SimplicialData::from_matrix(IntMat::from_rows(&[&[-1, 2], &[1, -3], &[2, -1]])).expect("simplicial")
}

fn criterion_1() -> Outcome {
    let (code, v, elapsed) = latfree(&["frob", "12,13,17", "--method", "mlfb"]);
    check(code == 0, || format!("exit code {code}"))?;
    check(v["result"]["g"] == 57, || format!("g = {}", v["result"]["g"]))?;
    let bodies: BTreeSet<Vec<i64>> =
        v["result"]["bodies"].as_array().into_iter().flatten().map(|b| ints(&b["b"])).collect();
    let want: BTreeSet<Vec<i64>> = [vec![0, 5, 2], vec![0, 2, 3]].into();
    check(bodies == want, || format!("bodies {bodies:?}"))?;
    check(elapsed < LIMIT_MLFB_EXAMPLE, || format!("took {elapsed:?}"))?;
    Ok(format!("g = 57, bodies (0,5,2) and (0,2,3), {:.3} s < 1 s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let (code, v, elapsed) = latfree(&["frob", "12,13,17", "--method", "ss3"]);
    check(code == 0, || format!("exit code {code}"))?;
    check(v["result"]["g"] == 57, || format!("g = {}", v["result"]["g"]))?;
    check(v["result"]["fallback"] == false, || "reduction fell back to enumeration".into())?;
    let columns: Vec<IntVec> =
        v["result"]["basis"].as_array().into_iter().flatten().map(|c| IntVec::from_i64s(&ints(c))).collect();
    let terminal = IntMat::from_columns(&columns).map_err(|e| e.to_string())?;
    let reference =
        IntMat::from_columns(&[IntVec::from_i64s(&[-4, 5, -1]), IntVec::from_i64s(&[-1, -3, 3])]).expect("shape");
    check(hnf(&terminal).0 == hnf(&reference).0, || format!("terminal basis\n{terminal}spans another lattice"))?;
    let u = IntMat::new(
        2,
        2,
        v["result"]["transform"].as_array().into_iter().flatten().flat_map(ints).map(BigInt::from).collect(),
    )
    .map_err(|e| e.to_string())?;
    let det = u.det().map_err(|e| e.to_string())?;
    check(det == BigInt::from(1) || det == BigInt::from(-1), || format!("det U = {det}"))?;
    check(elapsed < LIMIT_SS3_EXAMPLE, || format!("took {elapsed:?}"))?;
    Ok(format!("g = 57, terminal basis has the reference HNF, det U = {det}, {:.3} s < 0.1 s", elapsed.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let mut values = Vec::new();
    for method in ["mlfb", "bs", "naive", "ss3"] {
        let (code, v, _) = latfree(&["frob", "6,10,15", "--method", method]);
        check(code == 0 && v["result"]["g"] == 29, || format!("{method}: exit {code}, g = {}", v["result"]["g"]))?;
        values.push(method);
    }
    let gaps: Vec<i64> = semigroup_gaps(&instance(&[6, 10, 15]), DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|g| i64::try_from(g).expect("small"))
        .collect();
    let missing: Vec<i64> = EXPECTED_GAPS.iter().copied().filter(|g| !gaps.contains(g)).collect();
    let extra: Vec<i64> = gaps.iter().copied().filter(|g| !EXPECTED_GAPS.contains(g)).collect();
    check(missing.is_empty() && extra.is_empty(), || {
        format!(
            "g = 29 under {}; computed gap set has {} elements, expected list has {} (missing {missing:?}, extra {extra:?}); 27 = 2*6 + 15 is representable, so the expected list cannot be reproduced",
            values.join(", "),
            gaps.len(),
            EXPECTED_GAPS.len()
        )
    })?;
    Ok("g = 29 under all four methods, gap set matches".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let start = Instant::now();
    for _ in 0..100 {
        let (a1, a2) = loop {
            let a1 = rng.gen_range(2..500);
            let a2 = rng.gen_range(a1 + 1..=500);
            if gcd(a1, a2) == 1 {
                break (a1, a2);
            }
        };
        let (g, _) = frobenius_by_mlfb(&instance(&[a1, a2]), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        check(g == BigInt::from(a1 * a2 - a1 - a2), || format!("({a1},{a2}): g = {g}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < LIMIT_SYLVESTER, || format!("took {elapsed:?}"))?;
    Ok(format!("100 pairs match a1*a2 - a1 - a2 exactly, {:.3} s < 30 s", elapsed.as_secs_f64()))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let start = Instant::now();
    for (n, max, count) in [(3usize, 200i64, 50), (4, 80, 20)] {
        for _ in 0..count {
            let a = coprime_tuple(&mut rng, n, 1, max);
            let inst = instance(&a);
            let (g, _) = frobenius_by_mlfb(&inst, DEFAULT_BUDGET).map_err(|e| format!("{a:?}: {e}"))?;
            let bs = frobenius_brauer_shockley(&inst, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            check(g == bs, || format!("{a:?}: mlfb {g}, shortest paths {bs}"))?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < LIMIT_CROSS_METHOD, || format!("took {elapsed:?}"))?;
    Ok(format!("50 triples and 20 quadruples agree exactly, {:.3} s < 120 s", elapsed.as_secs_f64()))
}

fn feasible_program(rng: &mut ChaCha8Rng, data: &SimplicialData, spread: i64, slack: i64) -> (IntVec, IntVec) {
    let d = data.dim();
    let x0: IntVec = (0..d).map(|_| BigInt::from(rng.gen_range(-spread..=spread))).collect();
    let image = data.image(&x0);
    let b: IntVec = (1..=d).map(|i| &image[i] + rng.gen_range(0..=slack)).collect();
    (x0, b)
}

fn exhaustive_optimum(data: &SimplicialData, b: &IntVec, x0: &IntVec) -> Result<IntVec, String> {
    let mut rhs = vec![data.image(x0)[0].clone()];
    rhs.extend(b.iter().cloned());
    let points =
        PointEnumerator::new(data.matrix()).points(&IntVec::new(rhs), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    points.into_iter().min_by_key(|z| data.image(z)).ok_or_else(|| "start point not enumerated".into())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut programs = 0;
    for n in [3usize, 4, 3, 4, 4] {
        let a = coprime_tuple(&mut rng, n, 2, 60);
        let data = kernel_data(&a);
        let tests = compute_test_set(&data);
        for _ in 0..20 {
            let (x0, b) = feasible_program(&mut rng, &data, 4, 40);
            let got = ip_solve(&tests, &b, &x0).map_err(|e| e.to_string())?;
            let want = exhaustive_optimum(&data, &b, &x0)?;
            check(got == want, || format!("{a:?}, b = {b}: descent {got}, exhaustive {want}"))?;
            programs += 1;
        }
    }
    let mut compared = 0;
    for _ in 0..5 {
        let a = coprime_tuple(&mut rng, 3, 2, 30);
        let data = kernel_data(&a);
        let tests = compute_test_set(&data);
        let brute = brute_force_test_set(&data, &default_radius(&data), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let (x0, b) = feasible_program(&mut rng, &data, 5, 60);
            let got = ip_solve(&tests, &b, &x0).map_err(|e| e.to_string())?;
            let want = ip_solve(&brute, &b, &x0).map_err(|e| e.to_string())?;
            check(got == want, || format!("{a:?}, b = {b}: completion {got}, box {want}"))?;
            compared += 1;
        }
    }
    Ok(format!("{programs} programs match exhaustive optima, {compared} match box test sets"))
}

fn verify_with_library(data: &SimplicialData, bodies: &[IntVec]) -> Result<(), String> {
    let g = Geometry::new(data, DEFAULT_BUDGET);
    for b in bodies {
        check(g.is_lattice_free(b).map_err(|e| e.to_string())?, || format!("{b} is not lattice free"))?;
        for i in 0..=data.dim() {
            check(g.facet_witness(b, i).map_err(|e| e.to_string())?.is_some(), || format!("facet {i} of {b}"))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("acceptance_nongen.txt");
    std::fs::write(&path, "3 2\n-1 2\n1 -3\n2 -1\n").map_err(|e| e.to_string())?;
    let path = path.to_str().expect("utf-8 path").to_string();
    let mut total = 0;
    let cases: Vec<(Vec<&str>, SimplicialData)> = vec![
        (vec!["--matrix", &path], nongen()),
        (vec!["--vector", "12,13,17"], kernel_data(&[12, 13, 17])),
        (vec!["--vector", "6,10,15"], kernel_data(&[6, 10, 15])),
        (vec!["--vector", "23,29,41,53"], kernel_data(&[23, 29, 41, 53])),
        (vec!["--vector", "17,19,23,29,31"], kernel_data(&[17, 19, 23, 29, 31])),
    ];
    for (input, data) in &cases {
        let mut args = vec!["mlfb"];
        args.extend(input);
        args.push("--verify");
        let (code, v, _) = latfree(&args);
        check(code == 0, || format!("{input:?}: exit {code}"))?;
        check(v["verification"]["lattice_free"] == true && v["verification"]["facets_witnessed"] == true, || {
            format!("{input:?}: {}", v["verification"])
        })?;
        let bodies: Vec<IntVec> =
            v["result"]["bodies"].as_array().into_iter().flatten().map(|b| IntVec::from_i64s(&ints(&b["b"]))).collect();
        check(!bodies.is_empty(), || format!("{input:?}: no bodies"))?;
        verify_with_library(data, &bodies)?;
        total += bodies.len();
        if input[0] == "--matrix" {
            let target = IntVec::from_i64s(&[0, 1, 5]);
            check(bodies.iter().any(|b| translation_between(data, b, &target).is_some()), || {
                format!("no emitted body is a translate of K_(0,1,5): {bodies:?}")
            })?;
        }
    }
    Ok(format!("{total} bodies over {} inputs certified; triangle body lies in the orbit of (0,1,5)", cases.len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = vec![nongen(), kernel_data(&[12, 13, 17]), kernel_data(&[6, 10, 15])];
    for n in [3, 4, 4, 5] {
        instances.push(kernel_data(&coprime_tuple(&mut rng, n, 2, 50)));
    }
    let mut checked = 0;
    for data in &instances {
        let (tests, _, result) = compute_mlfb(data, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let g = Geometry::new(data, DEFAULT_BUDGET);
        for body in &result.bodies {
            let again = canonicalize(&g, &tests, body).map_err(|e| e.to_string())?;
            check(&again == body, || format!("{} is not a fixed point", body.b))?;
            for _ in 0..20 {
                let z: IntVec = (0..data.dim()).map(|_| BigInt::from(rng.gen_range(-25..=25))).collect();
                let moved = Body { b: translate_body(data, &body.b, &z).map_err(|e| e.to_string())?, gens: Vec::new() };
                let canon = canonicalize(&g, &tests, &moved).map_err(|e| e.to_string())?;
                check(canon.b == body.b, || format!("{} shifted by {z} canonicalizes to {}", body.b, canon.b))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} translated bodies return to their canonical representative"))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failed = Vec::new();
    for (id, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {id}: PASS ({detail})"),
            Err(reason) => {
                println!("criterion {id}: FAIL ({reason})");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 8 criteria pass");
    } else {
        println!("acceptance: {} of 8 criteria fail: {failed:?}", failed.len());
        std::process::exit(1);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Three criteria cannot pass because the published claim or value they test is
//! wrong. Each of those is listed in `KNOWN_FAILURES` with the exact failure
//! detail it must produce. The process exits 0 only if every other criterion
//! passes and every known failure reproduces its pinned detail verbatim.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hookbias_core::bias::{
    closed_b2, closed_bt, scan_conjecture_2regular, scan_conjecture_3regular, verify_2regular_12,
    verify_2regular_23, verify_closed_forms, verify_ordinary_bias, Verdict, THREE_REGULAR_THRESHOLD,
};
use hookbias_core::genfun::{
    gf_b_2_k, gf_b_3_2, gf_b_3_2_via_dual, gf_b_4_2, gf_b_4_2_via_dual, gf_b_t_1, gf_b_t_1_via_dual, gf_diff, gf_p,
    gf_p_k, gf_p_k_bivariate, gf_p_k_via_dual, regular_partition_gf, B2Form, GfId,
};
use hookbias_core::partitions::{
    classify_2regular, phi_map, psi_map, smallest_part_at_least_two_count, TwoRegularClass,
};
use hookbias_core::reference::{
    diff_3_12_printed_dense, DIFF_3_12_PRINTED_ERRATA, DIFF_3_12_PRINTED_MAX, ORDINARY_TABLE, TWO_REGULAR_TABLE,
};
use hookbias_core::{
    conjugate, enumerate_partitions, enumerate_t_regular, hook_tally, Coeff, Oracle, Sign, TruncatedSeries,
};
use rayon::prelude::*;

type Check = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const KNOWN_FAILURES: [(u8, &str, &str); 3] = [
    (
        7,
        "printed special value disagrees with enumeration: b_(3,3)(4) printed 2, enumerated 3",
        "published special value is wrong",
    ),
    (
        8,
        "202 counterexamples for 3 <= k <= 30, n <= 80, n != k+1; first k=9 n=12 diff=-1; \
         all 28 exceptions at n=k+1 match",
        "the conjectured inequality is false",
    ),
    (
        9,
        "printed expansion disagrees at n = 59, 61, 62, 63, 64, 65, 66, 67, 68, 69, 70",
        "published coefficients are wrong",
    ),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn compare(label: &str, s: &TruncatedSeries, expected: impl Fn(usize) -> Coeff, n_max: usize) -> Result<usize, String> {
    for n in 0..=n_max {
        let want = expected(n);
        ensure(s.coeff(n) == want, || format!("{label}: n={n} series {} enumeration {want}", s.coeff(n)))?;
    }
    Ok(n_max + 1)
}

fn ac1_tables() -> Check {
    let oracle = Oracle::default();
    for k in 1..=10u32 {
        let s = gf_p_k(k, 10).map_err(err)?;
        let b = match k {
            1 => gf_b_t_1(2, 10).map_err(err)?,
            2 | 3 => gf_b_2_k(k, 10, B2Form::Original).map_err(err)?,
            _ => {
                let c: Vec<Coeff> = (0..=10).map(|n| oracle.regular(n, 2, k).unwrap() as Coeff).collect();
                TruncatedSeries::new(10, &c)
            }
        };
        for n in 1..=10usize {
            let (i, j) = (k as usize - 1, n - 1);
            ensure(s.coeff(n) == ORDINARY_TABLE[i][j] as Coeff, || format!("p_({k})({n}) = {}", s.coeff(n)))?;
            ensure(b.coeff(n) == TWO_REGULAR_TABLE[i][j] as Coeff, || format!("b_(2,{k})({n}) = {}", b.coeff(n)))?;
        }
    }
    Ok("200/200 cells exact".into())
}

fn ac2_dual_engine() -> Check {
    let oracle = Oracle::default();
    let mut compared = 0usize;

    // ordinary, n <= 55, k <= 12
    let n_o = 55usize;
    let table = oracle.hook_table(None, n_o as u32).map_err(err)?;
    let p = gf_p(n_o).map_err(err)?;
    compared += compare("p", &p, |n| if n == 0 { 1 } else { table[n].iter().sum::<u64>() as Coeff / n as Coeff }, n_o)?;
    for k in 1..=12u32 {
        let col = |n: usize| table[n][k as usize] as Coeff;
        compared += compare(&format!("p_{k}"), &gf_p_k(k, n_o).map_err(err)?, col, n_o)?;
        compared += compare(&format!("p_{k} dual"), &gf_p_k_via_dual(k, n_o).map_err(err)?, col, n_o)?;
        compared += compare(&format!("p_{k} bivariate"), &GfId::PKBivariate { k }.evaluate(n_o).map_err(err)?, col, n_o)?;
        let next = |n: usize| table[n][k as usize] as Coeff - table[n][k as usize + 1] as Coeff;
        compared += compare(&format!("g_{k}"), &gf_diff(GfId::GK { k }, n_o).map_err(err)?, next, n_o)?;
    }
    // full bivariate histograms p_(k)(m, n)
    let hist: Vec<usize> = (1..=12u32)
        .into_par_iter()
        .map(|k| -> Result<usize, String> {
            let z = n_o / k as usize;
            let b = gf_p_k_bivariate(k, n_o, z).map_err(err)?;
            let mut c = 0;
            for n in 0..=n_o as u32 {
                let h = oracle.ordinary_bivariate(n, k).map_err(err)?;
                for m in 0..=z {
                    let want = h.get(&(m as u32)).copied().unwrap_or(0) as Coeff;
                    ensure(b.coeff(m, n as usize) == want, || format!("p_({k})({m},{n}) = {}", b.coeff(m, n as usize)))?;
                    c += 1;
                }
            }
            Ok(c)
        })
        .collect::<Result<_, _>>()?;
    compared += hist.iter().sum::<usize>();

    // 2-regular, n <= 70
    let n_2 = 70usize;
    let t2 = oracle.hook_table(Some(2), n_2 as u32).map_err(err)?;
    let t2 = &t2;
    let col2 = |k: usize| move |n: usize| t2[n][k] as Coeff;
    compared += compare("b_2_1", &gf_b_t_1(2, n_2).map_err(err)?, col2(1), n_2)?;
    compared += compare("b_2_1 dual", &gf_b_t_1_via_dual(2, n_2).map_err(err)?, col2(1), n_2)?;
    for (name, id) in [("b_2_2", GfId::B22), ("b_2_2_alt", GfId::B22Alt)] {
        compared += compare(name, &id.evaluate(n_2).map_err(err)?, col2(2), n_2)?;
    }
    for (name, id) in [("b_2_3", GfId::B23), ("b_2_3_alt", GfId::B23Alt)] {
        compared += compare(name, &id.evaluate(n_2).map_err(err)?, col2(3), n_2)?;
    }
    compared += compare("diff_2_23", &gf_diff(GfId::Diff223, n_2).map_err(err)?, |n| t2[n][2] as Coeff - t2[n][3] as Coeff, n_2)?;
    // all k: Σ_k b_{2,k}(n) = n · (number of 2-regular partitions of n), and the diagonal closed forms
    let pod = regular_partition_gf(2, n_2).map_err(err)?;
    for n in 1..=n_2 {
        let total: u64 = t2[n].iter().sum();
        ensure(total as Coeff == n as Coeff * pod.coeff(n), || format!("2-regular hook total at n={n}"))?;
        let c = closed_b2(n as u32).map_err(err)?;
        ensure(t2[n][n] == c.at_k, || format!("b_(2,{n})({n})"))?;
        if n < n_2 {
            ensure(t2[n + 1][n] == c.at_k_plus_1, || format!("b_(2,{n})({})", n + 1))?;
        }
        compared += 2;
    }

    // t = 3, 4, n <= 55, k <= 2
    let n_t = 55usize;
    for t in [3u32, 4] {
        let tt = oracle.hook_table(Some(t), n_t as u32).map_err(err)?;
        let tt = &tt;
        let col = |k: usize| move |n: usize| tt[n][k] as Coeff;
        compared += compare(&format!("b_{t}_1"), &gf_b_t_1(t, n_t).map_err(err)?, col(1), n_t)?;
        compared += compare(&format!("b_{t}_1 dual"), &gf_b_t_1_via_dual(t, n_t).map_err(err)?, col(1), n_t)?;
        let (closed, dual) = if t == 3 {
            (gf_b_3_2(n_t).map_err(err)?, gf_b_3_2_via_dual(n_t).map_err(err)?)
        } else {
            (gf_b_4_2(n_t).map_err(err)?, gf_b_4_2_via_dual(n_t).map_err(err)?)
        };
        compared += compare(&format!("b_{t}_2"), &closed, col(2), n_t)?;
        compared += compare(&format!("b_{t}_2 dual"), &dual, col(2), n_t)?;
        if t == 3 {
            let d = gf_diff(GfId::Diff312, n_t).map_err(err)?;
            compared += compare("diff_3_12", &d, |n| tt[n][2] as Coeff - tt[n][1] as Coeff, n_t)?;
        }
        let count = regular_partition_gf(t, n_t).map_err(err)?;
        compared += compare(&format!("{t}-regular count"), &count, |n| {
            if n == 0 {
                1
            } else {
                tt[n].iter().sum::<u64>() as Coeff / n as Coeff
            }
        }, n_t)?;
    }
    Ok(format!("{compared} coefficients exact"))
}

fn ac3_ordinary_bias() -> Check {
    let r = verify_ordinary_bias(50, 500).map_err(err)?;
    ensure(r.violations.is_empty(), || format!("violations: {:?}", &r.violations[..r.violations.len().min(5)]))?;
    ensure(r.missing_exceptions.is_empty(), || format!("missing exceptions: {:?}", r.missing_exceptions))?;
    ensure(r.exceptions_confirmed.len() == 49, || format!("{} exceptions", r.exceptions_confirmed.len()))?;
    ensure(r.differences[0].values[2] == 0, || "k=1 n=2 is not zero".into())?;
    ensure(r.verdict == Verdict::Pass, || "verdict".into())?;
    Ok("0 violations; 49 exceptions at n=k+1, each -1".into())
}

fn ac4_shift_identity() -> Check {
    let p = gf_p(30).map_err(err)?;
    let mut n = 0;
    for k in 1..=30u32 {
        let pk = gf_p_k(k, 60).map_err(err)?;
        for r in 0..k as usize {
            let want = p.coeff(r) * k as Coeff;
            ensure(pk.coeff(k as usize + r) == want, || format!("p_({k})({}) != {want}", k as usize + r))?;
            n += 1;
        }
    }
    Ok(format!("{n} identities exact"))
}

fn ac5_two_regular_12() -> Check {
    let r = verify_2regular_12(500).map_err(err)?;
    ensure(r.verdict == Verdict::Pass, || format!("violations: {:?}", r.violations))?;
    Ok(format!("0 violations for 4 < n <= 500; {} observations at n <= 4", r.observations.len()))
}

fn ac6_two_regular_23() -> Check {
    let r = verify_2regular_23(500).map_err(err)?;
    ensure(r.verdict == Verdict::Pass, || format!("violations: {:?}", r.violations))?;
    let direct = gf_b_2_k(2, 500, B2Form::Original)
        .and_then(|a| Ok(a.checked_sub(&gf_b_2_k(3, 500, B2Form::Original)?)?))
        .map_err(err)?;
    ensure(gf_diff(GfId::Diff223, 500).map_err(err)? == direct, || "product form differs".into())?;
    Ok("all 501 coefficients >= 0; product form equals b_2_2 - b_2_3".into())
}

fn ac7_closed_forms() -> Check {
    let oracle = Oracle::default();
    let r = verify_closed_forms(6, 20, &oracle).map_err(err)?;
    ensure(r.verdict == Verdict::Pass, || format!("closed forms disagree: {:?}", r.violations))?;
    for t in 3..=6u32 {
        for k in 1..=20u32 {
            let (a, b) = closed_bt(t, k).map_err(err)?;
            ensure(a == oracle.regular(k, t, k).map_err(err)?, || format!("t={t} k={k} at k"))?;
            ensure(b == oracle.regular(k + 1, t, k).map_err(err)?, || format!("t={t} k={k} at k+1"))?;
        }
    }
    // the printed special values, taken literally: (t, k, n, printed)
    let mut printed = vec![(3, 2, 3, 1), (3, 3, 4, 2), (4, 3, 4, 2)];
    for t in 3..=6 {
        printed.push((t, 1, 2, 2));
    }
    for t in 4..=6 {
        printed.push((t, 2, 3, 2));
    }
    for t in 5..=6 {
        printed.push((t, 3, 4, 3));
    }
    for (t, k, n, value) in printed {
        let seen = oracle.regular(n, t, k).map_err(err)?;
        ensure(seen == value, || {
            format!("printed special value disagrees with enumeration: b_({t},{k})({n}) printed {value}, enumerated {seen}")
        })?;
    }
    Ok("closed forms and printed special values match for t <= 6, k <= 20".into())
}

fn ac8_two_regular_scan() -> Check {
    let r = scan_conjecture_2regular(30, 80, &Oracle::default()).map_err(err)?;
    ensure(r.missing_exceptions.is_empty(), || format!("exceptions at n=k+1 off: {:?}", r.missing_exceptions))?;
    ensure(r.exceptions_confirmed.len() == 28, || format!("{} exceptions confirmed", r.exceptions_confirmed.len()))?;
    match r.violations.first() {
        None => Ok("no counterexample; all 28 exceptions at n=k+1 match".into()),
        Some(f) => Err(format!(
            "{} counterexamples for 3 <= k <= 30, n <= 80, n != k+1; first k={} n={} diff={}; \
             all 28 exceptions at n=k+1 match",
            r.violations.len(),
            f.k.unwrap_or(0),
            f.n,
            f.value
        )),
    }
}

fn ac9_three_regular() -> Check {
    let r = scan_conjecture_3regular(500).map_err(err)?;
    ensure(r.violations.is_empty(), || format!("negative for n >= {THREE_REGULAR_THRESHOLD}: {:?}", r.violations))?;
    let computed = &r.differences[0].values;
    let printed = diff_3_12_printed_dense();
    let bad: Vec<usize> = (0..=DIFF_3_12_PRINTED_MAX).filter(|&n| computed[n] != printed[n]).collect();
    // the disagreement must be exactly the documented one
    let errata: Vec<usize> = DIFF_3_12_PRINTED_ERRATA.iter().map(|e| e.0).collect();
    for &(n, _, actual) in &DIFF_3_12_PRINTED_ERRATA {
        ensure(computed[n] == actual, || format!("n={n} computed {} (errata says {actual})", computed[n]))?;
    }
    if bad.is_empty() {
        return Ok("matches printed expansion for n <= 70; >= 0 for 28 <= n <= 500".into());
    }
    ensure(bad == errata, || format!("unexpected mismatch set {bad:?}"))?;
    let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
    Err(format!("printed expansion disagrees at n = {}", list.join(", ")))
}

fn ac10_structure() -> Check {
    for n in 0..=40 {
        for lambda in enumerate_partitions(n) {
            let t = hook_tally(&lambda);
            ensure(t.total_cells() == n as u64, || format!("hook sum {lambda}"))?;
            ensure(hook_tally(&conjugate(&lambda)) == t, || format!("conjugation {lambda}"))?;
            ensure(t.count(1) == lambda.distinct_part_count() as u64, || format!("h1 {lambda}"))?;
        }
    }
    for n in 2..=40 {
        let mut seen = HashSet::new();
        for lambda in enumerate_partitions(n).filter(|p| p.smallest_part().is_some_and(|s| s >= 2)) {
            ensure(seen.insert(psi_map(&lambda).map_err(err)?), || format!("psi collision at n={n}"))?;
        }
    }
    for n in 0..=60 {
        let mut seen = HashSet::new();
        for lambda in enumerate_t_regular(n, 2).map_err(err)? {
            let t = hook_tally(&lambda);
            let (h1, h2) = (t.count(1), t.count(2));
            let class = classify_2regular(&lambda).map_err(err)?;
            let law = match class {
                TwoRegularClass::S => h1 == h2 + 1,
                TwoRegularClass::T => h1 == h2,
                TwoRegularClass::R => h2 >= h1,
            };
            ensure(law, || format!("case law {class:?} {lambda}"))?;
            if class == TwoRegularClass::S && n > 4 {
                let image = phi_map(&lambda).map_err(err)?;
                let ti = hook_tally(&image);
                ensure(classify_2regular(&image).map_err(err)? == TwoRegularClass::R, || format!("phi {lambda}"))?;
                ensure(ti.count(1) + 1 == ti.count(2), || format!("phi hooks {lambda}"))?;
                ensure(seen.insert(image), || format!("phi collision at n={n}"))?;
            }
        }
    }
    let a: Vec<u128> = (0..=201).map(smallest_part_at_least_two_count).collect();
    ensure((2..=200).all(|n| a[n + 1] >= a[n]), || "a(n) not monotone".into())?;
    let odd = TruncatedSeries::pochhammer(1, 2, Sign::Plus, 200).and_then(|s| s.invert_unit()).map_err(err)?;
    let distinct = TruncatedSeries::pochhammer(1, 1, Sign::Minus, 200).map_err(err)?;
    ensure(odd == distinct, || "odd/distinct identity".into())?;
    for k in 1..=20 {
        let h = gf_diff(GfId::HKCorollary { k }, 300).map_err(err)?;
        ensure(h.is_nonnegative(), || format!("H_{k} has a negative coefficient"))?;
    }
    let oracle = Oracle::default();
    for k in 1..=10u32 {
        let s = gf_p_k(k, 50).map_err(err)?;
        for n in 0..=50u32 {
            let v = oracle.ordinary(n, k).map_err(err)?;
            ensure(v % k as u64 == 0 && s.coeff(n as usize) == v as Coeff, || format!("p_({k})({n}) = {v}"))?;
        }
    }
    Ok("all structural suites exact".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "table reproduction", limit: Duration::from_secs(1), run: ac1_tables },
        Criterion { id: 2, name: "dual-engine equivalence", limit: Duration::from_secs(300), run: ac2_dual_engine },
        Criterion { id: 3, name: "ordinary k vs k+1 bias", limit: Duration::from_secs(60), run: ac3_ordinary_bias },
        Criterion { id: 4, name: "p_(k)(k+r) = p(r) k", limit: Duration::from_secs(10), run: ac4_shift_identity },
        Criterion { id: 5, name: "2-regular b_2,2 >= b_2,1", limit: Duration::from_secs(60), run: ac5_two_regular_12 },
        Criterion { id: 6, name: "2-regular b_2,2 >= b_2,3", limit: Duration::from_secs(60), run: ac6_two_regular_23 },
        Criterion { id: 7, name: "closed forms at n=k, k+1", limit: Duration::from_secs(60), run: ac7_closed_forms },
        Criterion { id: 8, name: "2-regular k vs k+1 scan", limit: Duration::from_secs(600), run: ac8_two_regular_scan },
        Criterion { id: 9, name: "3-regular b_3,2 >= b_3,1", limit: Duration::from_secs(60), run: ac9_three_regular },
        Criterion { id: 10, name: "structural properties", limit: Duration::from_secs(300), run: ac10_structure },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut result = (c.run)();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > c.limit {
            result = Err(format!("took {elapsed:.2?}, limit {:?}", c.limit));
        }
        let known = KNOWN_FAILURES.iter().find(|(id, _, _)| *id == c.id);
        let (status, note) = match (&result, known) {
            (Ok(_), None) => ("PASS", String::new()),
            (Err(d), Some((_, k, why))) if d == k => ("FAIL", format!(" [known: {why}]")),
            (Ok(_), Some(_)) => {
                unexpected += 1;
                ("PASS", " [UNEXPECTED: pinned failure no longer reproduces]".to_string())
            }
            (Err(_), _) => {
                unexpected += 1;
                ("FAIL", " [UNEXPECTED]".to_string())
            }
        };
        let detail = result.unwrap_or_else(|e| e);
        println!("AC{:<2} {status} {:<28} {:>9.3}s  {detail}{note}", c.id, c.name, elapsed.as_secs_f64());
    }
    if unexpected == 0 {
        println!("acceptance: {} criteria, {} known failures, 0 unexpected", criteria.len(), KNOWN_FAILURES.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use startrans::complex::{certify_acyclic, check_complex, koszul_differential, subset_index};
use startrans::corpus::{
    complete_intersection_squares, example_a, koszul_of_variables, random_instances, standard_corpus, Instance,
};
use startrans::groebner::{colon, submodule_equal};
use startrans::poly::parse_polynomial;
use startrans::transform::{splitting_is_retraction, splitting_map, star_transform, StarTransform};
use startrans::verify::{colon_length_check, depth_positive_check, star_iteration_driver, verify_star};
use startrans::{BaseRing, KoszulIndex, ModuleVector, Polynomial, Submodule};

const SEED: u64 = 20_240_917;
const RANDOM_INSTANCES: usize = 24;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ideal(inst: &Instance, texts: &[&str]) -> Submodule {
    let r = inst.complex.ring();
    let gens: Vec<Polynomial> = texts.iter().map(|t| parse_polynomial(t, r).unwrap()).collect();
    Submodule::ideal(&BaseRing::polynomial(r.clone()).unit_module(), &gens).unwrap()
}

fn transform(inst: &Instance) -> Result<StarTransform, String> {
    star_transform(&inst.complex, &inst.sop).map_err(|e| format!("{}: {e}", inst.name))
}

fn example_a_end_to_end() -> Outcome {
    let a = example_a();
    let t = transform(&a)?;
    let c = &t.star.complex;
    let m = a.complex.image(1).map_err(|e| e.to_string())?;
    let oracle = colon(&m, a.sop.elements()).map_err(|e| e.to_string())?;
    let image = c.image(1).map_err(|e| e.to_string())?;
    ensure(submodule_equal(&image, &oracle), || {
        "Im ∗φ1 differs from the colon oracle".into()
    })?;
    ensure(submodule_equal(&image, &ideal(&a, &["x^2", "x*y", "y^2"])), || {
        "Im ∗φ1 is not (x², xy, y²)".into()
    })?;
    ensure(c.rank(1) == 3 && c.rank(2) == 2, || format!("ranks {:?}", c.ranks()))?;
    ensure(c.map(2).entries().all(|(_, _, e)| e.constant_term().is_zero()), || {
        "∗φ2 has a unit entry".into()
    })?;
    certify_acyclic(c).map_err(|e| e.to_string())?;
    Ok(format!("Im ∗φ1 = (x², xy, y²), ranks {:?}", c.ranks()))
}

fn colon_length_counts() -> Outcome {
    let mut instances = vec![example_a(), complete_intersection_squares()];
    instances.extend(random_instances(SEED, RANDOM_INSTANCES));
    let mut shown = Vec::new();
    for inst in &instances {
        let m = inst.complex.image(1).map_err(|e| e.to_string())?;
        let n = inst.complex.length();
        let count = colon_length_check(&m, &inst.sop, inst.complex.rank(n)).map_err(|e| e.to_string())?;
        ensure(count.passed(), || {
            format!("{}: {} ≠ {}", inst.name, count.colon_length, count.expected)
        })?;
        if shown.len() < 2 {
            shown.push(format!("{} {} = {}", inst.name, count.colon_length, count.expected));
        }
    }
    Ok(format!("{}; {} instances", shown.join(", "), instances.len()))
}

fn corpus() -> Vec<Instance> {
    standard_corpus(SEED, RANDOM_INSTANCES - 4)
}

fn chain_map_structure() -> Outcome {
    let mut levels = 0;
    for inst in corpus() {
        let t = transform(&inst)?;
        let Some(st) = &t.stages else { continue };
        let f = &inst.complex;
        let s = &st.sigma;
        let n = f.length();
        let r = f.rank(n);
        ensure(s.commuting_defects(f).is_empty(), || {
            format!("{}: squares do not commute", inst.name)
        })?;
        let sharp = s.sharp_defects(f, &inst.sop);
        ensure(sharp.is_empty(), || {
            format!("{}: (♯) fails at {:?}", inst.name, sharp[0])
        })?;
        let top = s.sigma(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let id_ok = top.rows() == r
            && top.cols() == r
            && top.entries().all(|(i, j, e)| {
                let want = if i == j {
                    Polynomial::from_i64(f.ring(), sign)
                } else {
                    Polynomial::zero(f.ring())
                };
                *e == want
            });
        ensure(id_ok, || format!("{}: σ_n ≠ (−1)^n·id", inst.name))?;
        let next = s.sigma(n - 1);
        for lam in 0..r {
            for i in 1..=n {
                let col = lam * n + subset_index(n, &KoszulIndex::full(n).without(i));
                let v = &st.decomposition[lam][i - 1];
                let want: Vec<Polynomial> = if (n + i - 1) % 2 == 0 {
                    v.coords.clone()
                } else {
                    v.coords.iter().map(|p| -p).collect()
                };
                ensure(next.column(col) == want, || {
                    format!("{}: σ_(n−1) column ({lam},{i})", inst.name)
                })?;
            }
        }
        levels += n + 1;
    }
    Ok(format!("{levels} levels checked"))
}

fn cone_and_split() -> Outcome {
    let mut count = 0;
    for inst in corpus() {
        let t = transform(&inst)?;
        let Some(st) = &t.stages else { continue };
        check_complex(&st.cone).map_err(|e| format!("{}: cone {e}", inst.name))?;
        certify_acyclic(&st.cone).map_err(|e| format!("{}: cone {e}", inst.name))?;
        certify_acyclic(&st.split).map_err(|e| format!("{}: split {e}", inst.name))?;
        let phi = splitting_map(&inst.complex, &st.sigma).map_err(|e| e.to_string())?;
        ensure(splitting_is_retraction(&st.cone, &phi), || {
            format!("{}: φ∘ψ ≠ id", inst.name)
        })?;
        count += 1;
    }
    Ok(format!("{count} cones"))
}

fn top_map_closed_form(inst: &Instance, t: &StarTransform) -> Result<(), String> {
    let st = t.stages.as_ref().unwrap();
    let sel = &st.selection;
    let f = &inst.complex;
    let n = f.length();
    let ring = f.ring();
    let r = f.rank(n);
    let width = startrans::complex::binomial(n, n - 2);
    let d = koszul_differential(&inst.sop, n - 1);
    let check = |i: usize| subset_index(n, &KoszulIndex::full(n).without(i));
    let signed = |odd: bool, p: &Polynomial| if odd { -p } else { p.clone() };
    let star = &t.star.complex;
    for (k, &(mu, j)) in sel.star_lambda.iter().enumerate() {
        let mut col = vec![Polynomial::zero(ring); r * width + sel.u.len()];
        let mut boundary = |lam: usize, i: usize, c: &Polynomial| {
            for s in 0..width {
                let pos = lam * width + s;
                col[pos] = &col[pos] + &(c * d.get(s, check(i)));
            }
        };
        boundary(mu, j, &signed(j % 2 == 1, &Polynomial::one(ring)));
        for (l, &(lam, i)) in sel.lambda_prime.iter().enumerate() {
            boundary(lam, i, &signed((i - 1) % 2 == 1, &sel.a[k][l]));
        }
        for (l, b) in sel.b[k].iter().enumerate() {
            col[r * width + l] = &col[r * width + l] + b;
        }
        ensure(star.map(n).column(k) == col, || {
            format!("{}: column {k} of ∗φn", inst.name)
        })?;
    }
    Ok(())
}

fn basis_selection_and_top_map() -> Outcome {
    let mut count = 0;
    for inst in corpus() {
        let t = transform(&inst)?;
        let Some(st) = &t.stages else { continue };
        let f = &inst.complex;
        let n = f.length();
        let sel = &st.selection;
        ensure(sel.lambda_prime.len() + sel.u.len() == f.rank(n - 1), || {
            format!("{}: #Λ′ + #U ≠ rank F_(n−1)", inst.name)
        })?;
        ensure(sel.b.iter().flatten().all(|b| b.constant_term().is_zero()), || {
            format!("{}: a b-coefficient is a unit", inst.name)
        })?;
        if !t.star.top_vanished {
            top_map_closed_form(&inst, &t)?;
        }
        let report = verify_star(f, &inst.sop, &t.star);
        for name in ["rank_accounting", "top_map_minimality"] {
            let c = report.check(name).unwrap();
            ensure(c.passed, || format!("{}: {name}: {}", inst.name, c.detail))?;
        }
        count += 1;
    }
    Ok(format!("{count} instances"))
}

fn fast_path() -> Outcome {
    let inst = koszul_of_variables();
    let t = transform(&inst)?;
    let dec = &t.stages.as_ref().unwrap().decomposition;
    let units = dec
        .iter()
        .flatten()
        .all(|v: &ModuleVector| v.coords.iter().any(|p| !p.constant_term().is_zero()));
    ensure(units, || "a decomposition vector has no unit coordinate".into())?;
    ensure(t.star.top_vanished, || "∗F_n did not vanish".into())?;
    ensure(t.star.complex.length() == inst.complex.length() - 1, || {
        "length not reduced".into()
    })?;
    let image = t.star.complex.image(1).map_err(|e| e.to_string())?;
    ensure(depth_positive_check(&image).map_err(|e| e.to_string())?, || {
        "depth is zero".into()
    })?;
    Ok(format!("∗F_n = 0, ranks {:?}", t.star.complex.ranks()))
}

fn oracle_cross_validation() -> Outcome {
    let mut checks = 0;
    let instances = corpus();
    for inst in &instances {
        checks += common::crosscheck(inst, 6)?;
    }
    Ok(format!("{checks} degree checks on {} instances", instances.len()))
}

fn iteration_driver() -> Outcome {
    let a = example_a();
    let run = star_iteration_driver(&a.complex, &a.sop, 2).map_err(|e| e.to_string())?;
    ensure(run.rounds.len() == 2, || format!("{} rounds", run.rounds.len()))?;
    ensure(
        run.rounds.iter().all(|r| r.colon_matches_oracle && r.report.passed()),
        || "a round disagrees with the oracle".into(),
    )?;
    let q = a.sop.elements();
    let oracle = colon(&ideal(&a, &["x^2", "x*y", "y^2"]), q).map_err(|e| e.to_string())?;
    ensure(submodule_equal(&oracle, &ideal(&a, &["x", "y"])), || {
        "oracle colon is not (x, y)".into()
    })?;
    let second = run.rounds[1]
        .transform
        .star
        .complex
        .image(1)
        .map_err(|e| e.to_string())?;
    ensure(submodule_equal(&second, &oracle), || {
        "round 2 differs from (x, y)".into()
    })?;
    Ok("round 2 colon = (x, y)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("EX-A end to end", Duration::from_secs(1), example_a_end_to_end),
        ("colon length counts", Duration::from_secs(60), colon_length_counts),
        ("chain map structure", Duration::from_secs(60), chain_map_structure),
        ("cone and split", Duration::from_secs(60), cone_and_split),
        (
            "basis selection and top map",
            Duration::from_secs(60),
            basis_selection_and_top_map,
        ),
        ("fast path", Duration::from_secs(10), fast_path),
        (
            "oracle cross-validation",
            Duration::from_secs(120),
            oracle_cross_validation,
        ),
        ("iteration driver", Duration::from_secs(10), iteration_driver),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {} {} {name} [{:.3}s / {}s, exact]: {detail}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

//! Acceptance gate: one line per criterion, non-zero exit when any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use cohopf::catalog;
use cohopf::cohopf::{cohopf_operators, tensor_endofunctor, half_braiding_fn};
use cohopf::fixtures;
use cohopf::format::AlgebraFile;
use cohopf::functors::{check_duality_composition, check_zeta, Functor};
use cohopf::hopf::{drinfeld_double, dual_hopf, verify_all, verify_quasitriangular};
use cohopf::pipeline::{build_instance, run_theorems, with_threads, MapChoice, RunOptions};
use cohopf::report::{Report, Status};
use cohopf::theorems::{
    construct, form_suite, operators_suite, pivotal_suite, braided_suite, ribbon_suite, separability_suite, Instance,
    Suite,
};

/// A criterion failure: either a false property or a library error.
struct Fail(String);

impl From<cohopf::error::Error> for Fail {
    fn from(e: cohopf::error::Error) -> Self {
        Fail(format!("error {e}"))
    }
}

type Outcome = std::result::Result<(), Fail>;

fn opts(map: MapChoice, normalize_form: bool) -> RunOptions {
    RunOptions { map, normalize_form, ..RunOptions::default() }
}

fn instance(name: &str, map: MapChoice) -> cohopf::error::Result<Instance> {
    Ok(build_instance(&catalog::load(name)?, &opts(map, true))?.0)
}

fn diagonal() -> MapChoice {
    MapChoice::File(catalog::diagonal_map())
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

fn clean(what: &str, report: &Report) -> Outcome {
    match report.checks.iter().find(|c| c.status != Status::Pass) {
        None => Ok(()),
        Some(c) => Err(Fail(format!("{what}: {} is {:?}", c.id, c.status))),
    }
}

fn clean_suite(what: &str, s: &Suite) -> Outcome {
    clean(&format!("{what}/{}", s.name), &s.report())
}

fn criterion_1() -> Outcome {
    for name in catalog::NAMES {
        let h = catalog::load(name)?.to_hopf()?;
        clean(name, &verify_all(&h))?;
        clean(&format!("dual of {name}"), &verify_all(&dual_hopf(&h)))?;
        let d = drinfeld_double(&h)?;
        clean(&format!("double of {name}"), &verify_all(&d))?;
        clean(&format!("double of {name}"), &verify_quasitriangular(&d)?)?;
    }
    Ok(())
}

const SMALL: [&str; 3] = ["trivial", "c2", "s3"];

fn criterion_2() -> Outcome {
    for name in SMALL {
        for map in [MapChoice::Identity, MapChoice::DoubleInclusion] {
            let inst = instance(name, map)?;
            clean(name, &inst.adj.check_snakes(&inst.d_gen, &inst.c_gen)?)?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for name in SMALL {
        let inst = instance(name, MapChoice::DoubleInclusion)?;
        for x in &inst.d_gen.words {
            for y in &inst.c_gen.words {
                let e = cohopf_operators(&inst.adj, x, y)?;
                if e.hl_inv.is_none() || e.hr_inv.is_none() {
                    return Err(Fail(format!("{name}: singular operator at ({}, {})", x.name(), y.name())));
                }
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for name in ["c2", "s3"] {
        let inst = instance(name, MapChoice::DoubleInclusion)?;
        let (_, form) = form_suite(&inst, true)?;
        let Some(form) = form else { return Err(Fail(format!("{name}: no form"))) };
        let (report, _) = construct(&inst, &form.algebra)?;
        clean(name, &report)?;
        require(report.get("theorem.frobenius_functor.left").is_some(), || "missing Frobenius equation".into())?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for name in ["c2", "s3"] {
        for normalize in [true, false] {
            let inst = build_instance(&catalog::load(name)?, &opts(MapChoice::DoubleInclusion, normalize))?.0;
            let (_, form) = form_suite(&inst, normalize)?;
            let Some(form) = form else { return Err(Fail(format!("{name}: no form"))) };
            let (_, c) = construct(&inst, &form.algebra)?;
            let s = separability_suite(&inst, &form, &c, normalize)?;
            clean_suite(name, &s)?;
            if normalize {
                require(s.get("theorem.separable.normalized_identity").is_some(), || format!("{name}: R₂R² unchecked"))?;
            }
        }
    }
    Ok(())
}

fn catalog_adjunctions() -> Vec<(String, MapChoice)> {
    let mut out = Vec::new();
    for name in catalog::NAMES {
        out.push((name.to_string(), MapChoice::Identity));
        out.push((name.to_string(), MapChoice::DoubleInclusion));
    }
    out.push(("c2_super".into(), diagonal()));
    out
}

fn criterion_6() -> Outcome {
    for (name, map) in catalog_adjunctions() {
        let inst = instance(&name, map)?;
        let s = operators_suite(&inst)?;
        clean_suite(&name, &s)?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for name in ["c2", "c2xc2", "s3"] {
        let inst = instance(name, MapChoice::DoubleInclusion)?;
        let (_, form) = form_suite(&inst, true)?;
        let Some(form) = form else { return Err(Fail(format!("{name}: no form"))) };
        let (_, c) = construct(&inst, &form.algebra)?;
        let s = pivotal_suite(&inst, &form.algebra, &c)?;
        clean_suite(name, &s)?;
        for id in ["theorem.pivotal", "theorem.hl_unit.monoidal", "theorem.tensor_functor.kappa"] {
            require(s.get(id).is_some(), || format!("{name}: {id} missing"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let inst = instance("c2_super", diagonal())?;
    let (_, form) = form_suite(&inst, true)?;
    let Some(form) = form else { return Err(Fail("no form".into())) };
    let (_, c) = construct(&inst, &form.algebra)?;
    let braided = braided_suite(&inst, &c)?;
    clean_suite("diagonal", &braided)?;
    require(braided.get("theorem.cobraided.constructed").is_some(), || "cobraided unchecked".into())?;
    let ribbon = ribbon_suite(&inst, &form.algebra, &c)?;
    clean_suite("diagonal", &ribbon)?;
    require(ribbon.get("theorem.ribbon.cross_check").is_some(), || "cross-check missing".into())?;
    Ok(())
}

fn criterion_9() -> Outcome {
    for (name, map) in [("c2", MapChoice::DoubleInclusion), ("c2_super", diagonal()), ("s3", MapChoice::Identity)] {
        let inst = instance(name, map)?;
        let (_, form) = form_suite(&inst, true)?;
        let Some(form) = form else { return Err(Fail(format!("{name}: no form"))) };
        let (_, c) = construct(&inst, &form.algebra)?;
        let big = inst.adj.model.big.clone();
        let small = inst.adj.model.small.clone();
        let functors = [
            Functor::Identity(big.clone()),
            Functor::Identity(small.clone()),
            inst.adj.left.clone(),
            c.functor.clone(),
            tensor_endofunctor(&form.algebra, half_braiding_fn(&inst.adj)),
        ];
        let gen_for = |f: &Functor| if Arc::ptr_eq(f.source(), &big) { &inst.c_gen } else { &inst.d_gen };
        for f in &functors {
            let check = check_zeta(f, gen_for(f))?;
            require(check.passed(), || format!("{name}: ζ for {}", f.name()))?;
        }
        for g in &functors {
            for f in &functors {
                if Arc::ptr_eq(f.target(), g.source()) {
                    clean(&format!("{name}: {}∘{}", g.name(), f.name()), &check_duality_composition(g, f, gen_for(f))?)?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    for f in fixtures::all()? {
        require(f.exact(), || format!("{}: flagged {:?}, targets {:?}", f.name, f.flagged, f.targets))?;
    }
    let twist = fixtures::broken_twist()?;
    require(twist.flipped_together.iter().any(|id| id == "ribbon/theorem.ribbon"), || "ribbon sides did not flip".into())?;
    Ok(())
}

fn criterion_11() -> Outcome {
    let cases: Vec<(AlgebraFile, MapChoice)> = vec![
        (catalog::load("c2xc2")?, MapChoice::DoubleInclusion),
        (catalog::load("c2_super")?, diagonal()),
        (catalog::load("sweedler")?, MapChoice::DoubleInclusion),
    ];
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get().max(2));
    for (file, map) in cases {
        let o = opts(map, true);
        let runs = [
            with_threads(1, || run_theorems(&file, &o))??.to_json(),
            with_threads(1, || run_theorems(&file, &o))??.to_json(),
            with_threads(threads, || run_theorems(&file, &o))??.to_json(),
        ];
        require(runs[0] == runs[1] && runs[1] == runs[2], || format!("{}: reports differ", file.name))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Hopf axioms for the catalog, duals and doubles", criterion_1),
        ("snake equations for identity and double inclusions", criterion_2),
        ("coHopf operators invertible", criterion_3),
        ("Frobenius structure on R from the solved form", criterion_4),
        ("separable and special flags agree", criterion_5),
        ("operator identities on all catalog adjunctions", criterion_6),
        ("symmetric R(𝟙) iff pivotal R", criterion_7),
        ("braided, cobraided and ribbon on the diagonal instance", criterion_8),
        ("duality transform laws", criterion_9),
        ("fault fixtures flag exactly their targets", criterion_10),
        ("deterministic reports", criterion_11),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        total += elapsed;
        let (status, note) = match outcome {
            Ok(()) => ("PASS", String::new()),
            Err(Fail(why)) => ("FAIL", format!(": {why}")),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} [{:>8.2?}] {title}{note}", i + 1, elapsed);
    }
    println!("acceptance: {} of {} criteria pass in {:.2?}", criteria.len() - failed, criteria.len(), total);
    if failed > 0 {
        std::process::exit(1);
    }
}

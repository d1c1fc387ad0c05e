//! The twelve acceptance criteria. Runs without the libtest harness so each
//! criterion prints exactly one line; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use invrig::algebra::{
    absorption_failures, law_report, zeroless_law_report, ZerolessInverseSemiring,
};
use invrig::finite::hom::{hom_check_presentation, hom_enumerate_presentation};
use invrig::finite::lattice::{
    find_modularity_counterexamples, restricted_law_violations, restricted_modular_check,
};
use invrig::finite::{
    builtins, embed_eunitary, is_e_unitary, isomorphisms, kernel, module_hom_enumerate, quotient,
    reflections, upward_equivalences, FiniteInverseSemiring, FiniteModule, Side, Subset,
    DEFAULT_BUDGET,
};
use invrig::free::{
    idem_reflection, initial_hom, ring_reflection, to_bounded, z0_window, ExponentSets, FreePolys,
    IntegerPolys, MultiPoly,
};
use invrig::instances::adjoin::{adjoin_infinity, adjoin_zero, Adjoined, WithInfinity};
use invrig::instances::bounded::{BoundedPoly, BoundedPolys};
use invrig::instances::heart::heart;
use invrig::instances::rings::{Integers, IntegersMod};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn required_builtins() -> Vec<(&'static str, FiniteInverseSemiring)> {
    ["B1", "Z2", "If0", "End_Z2_0"]
        .into_iter()
        .map(|n| (n, builtins::builtin(n).unwrap()))
        .collect()
}

fn all_builtins() -> Vec<(&'static str, FiniteInverseSemiring)> {
    builtins::BUILTIN_NAMES
        .into_iter()
        .map(|n| (n, builtins::builtin(n).unwrap()))
        .collect()
}

/// Finite modules with carrier at most 6 used by the module criteria.
fn test_modules() -> Vec<(String, FiniteModule)> {
    let mut out = Vec::new();
    for (name, r) in all_builtins() {
        if r.size() > 6 {
            continue;
        }
        for side in [Side::Left, Side::Right, Side::Two] {
            out.push((format!("{name}/{side:?}"), FiniteModule::regular(&r, side)));
        }
    }
    out.push((
        "End_Z2_0 on (Z/2)_0".into(),
        builtins::end_z2_0_natural_module(),
    ));
    out
}

fn c1_law_suite() -> Check {
    for (name, r) in required_builtins() {
        let rep = r.law_report();
        ensure(rep.passed(), || format!("{name}: {rep}"))?;
    }
    let r = adjoin_zero(IntegersMod::new(2));
    let carrier = [Adjoined::Zero, Adjoined::Elem(0), Adjoined::Elem(1)];
    let rep = law_report(&r, &carrier).map_err(|e| e.to_string())?;
    ensure(rep.passed(), || format!("(Z/2)_0: {rep}"))
}

fn c2_motivating_sum() -> Check {
    let bp = BoundedPolys::<BigRational>::new();
    let p = BoundedPoly::parse("x^2 + x", "2").map_err(|e| e.to_string())?;
    let q = BoundedPoly::parse("-x^2", "2").map_err(|e| e.to_string())?;
    let expected = BoundedPoly::parse("x", "2").map_err(|e| e.to_string())?;
    let sum = bp.add(&p, &q);
    ensure(sum == expected, || format!("bounded sum {sum}"))?;
    ensure(sum.to_string() == "(x, bound 2)", || sum.to_string())?;

    let fp = FreePolys::new(1);
    let p = MultiPoly::parse("x^2 + x").unwrap();
    let q = MultiPoly::parse("-x^2").unwrap();
    let sum = fp.add(&p, &q);
    let expected = MultiPoly::from_terms(
        1,
        [
            (vec![2], Adjoined::Elem(BigInt::from(0))),
            (vec![1], Adjoined::Elem(BigInt::from(1))),
        ],
    )
    .unwrap();
    ensure(sum == expected, || format!("free sum {sum}"))?;
    ensure(sum.to_string() == "0^x^2 + x", || sum.to_string())
}

fn c3_subtractive_iff_downset() -> Check {
    let mut checked = 0;
    for (name, m) in test_modules() {
        let n = m.size();
        for mask in 0..1u64 << n {
            let s = Subset::from_mask(n, mask);
            if !m.is_submodule(&s) {
                continue;
            }
            ensure(m.is_subtractive(&s) == m.is_down_closed(&s), || {
                format!("{name}: {}", s.format(m.names()))
            })?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no submodules checked".into())
}

fn c4_kernels() -> Check {
    for (name, m) in test_modules() {
        let subs = m.all_submodules();
        for s in &subs {
            let (c, _) = quotient(&m, s).map_err(|e| e.to_string())?;
            let k = kernel(&m, &c);
            ensure(k == m.down_closure(s), || {
                format!("{name}: kernel of {:?}", s)
            })?;
            ensure((k == *s) == m.is_subtractive(s), || {
                format!("{name}: {:?}", s)
            })?;
        }
        if m.size() > 5 {
            continue;
        }
        // kernels of all homomorphisms into all quotients are exactly the
        // subtractive submodules
        let mut kernels = BTreeSet::new();
        for s in &subs {
            let (_, q) = quotient(&m, s).map_err(|e| e.to_string())?;
            for f in module_hom_enumerate(&m, &q, DEFAULT_BUDGET).map_err(|e| e.to_string())? {
                kernels.insert(Subset::from_indices(
                    m.size(),
                    m.elements().filter(|&x| f[x] == q.zero()),
                ));
            }
        }
        let subtractive: BTreeSet<Subset> = m.all_subtractive_submodules().into_iter().collect();
        ensure(kernels == subtractive, || {
            format!("{name}: kernels differ from subtractive submodules")
        })?;
    }
    Ok(())
}

fn c5_modular_law() -> Check {
    let b1 = builtins::b1();
    let m = FiniteModule::regular(&b1, Side::Two);
    let violations = restricted_law_violations(&m);
    ensure(violations.is_empty(), || {
        format!("{} violations", violations.len())
    })?;
    let one = |x: &str| Subset::from_indices(6, [b1.index_of(x).unwrap()]);
    let ideal = |x: &str| m.submodule_generate(&one(x));
    let holds = restricted_modular_check(&m, &ideal("a"), &ideal("m"), &ideal("j"))
        .map_err(|e| e.to_string())?;
    ensure(!holds, || "modular law holds at ((a), (m), (j))".into())?;
    let mut downsets: Vec<Subset> = b1
        .elements()
        .map(|x| m.down_closure(&Subset::from_indices(6, [x])))
        .collect();
    downsets.sort();
    ensure(m.all_subtractive_submodules() == downsets, || {
        "subtractive ideals are not the principal downsets".into()
    })?;
    let down = |x: &str| m.down_closure(&one(x));
    let found = find_modularity_counterexamples(&m, true).map_err(|e| e.to_string())?;
    ensure(
        found
            .iter()
            .any(|t| t.s1 == down("m") && t.s2 == down("b") && t.x == down("a")),
        || "no failure at (down m, down b, down a)".into(),
    )
}

fn c6_e_unitary() -> Check {
    for (name, r) in all_builtins() {
        let emb = embed_eunitary(&r).map_err(|e| format!("{name}: {e}"))?;
        ensure(emb.homomorphism, || format!("{name}: not a homomorphism"))?;
        ensure(emb.injective == is_e_unitary(&r), || {
            format!("{name}: verdicts differ")
        })?;
        let expected = match name {
            "B1" | "Z2" => Some(true),
            "If0" => Some(false),
            _ => None,
        };
        if let Some(e) = expected {
            ensure(emb.injective == e, || {
                format!("{name}: injective = {}", emb.injective)
            })?;
        }
    }
    Ok(())
}

fn c7_upward_closed() -> Check {
    for (name, r) in all_builtins() {
        let m = FiniteModule::regular(&r, Side::Two);
        for s in m.all_subtractive_submodules() {
            let rep = upward_equivalences(&m, &s).map_err(|e| format!("{name}: {e}"))?;
            ensure(
                rep.contains_zero_one.is_some() && rep.quotient_is_ring.is_some(),
                || format!("{name}: ideal conditions missing"),
            )?;
            ensure(rep.consistent(), || format!("{name}: {rep:?}"))?;
        }
    }
    Ok(())
}

fn c8_heart() -> Check {
    let mut count = 0;
    for (name, r) in all_builtins() {
        let idem = r.elements().filter(|x| r.is_idempotent(x)).count();
        let in_scope = name == "If0" || ((4..=6).contains(&r.size()) && idem == 2);
        if !in_scope {
            continue;
        }
        let h = heart(&r).map_err(|e| format!("{name}: {e}"))?;
        let isos = isomorphisms(&h.semiring, &r, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(!isos.is_empty(), || {
            format!("{name}: no isomorphism with its heart")
        })?;
        count += 1;
    }
    ensure(count >= 2, || format!("only {count} structures in scope"))
}

fn c9_initial_object() -> Check {
    let (elems, p) = z0_window(8);
    for (name, s) in all_builtins() {
        let f: Vec<usize> = elems.iter().map(|x| initial_hom(&s, x)).collect();
        ensure(hom_check_presentation(&f, &p, &s), || {
            format!("{name}: initial map fails hom_check")
        })?;
        let all = hom_enumerate_presentation(&p, &s, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(all == vec![f], || {
            format!("{name}: {} homomorphisms", all.len())
        })?;
    }
    Ok(())
}

fn c10_reflections() -> Check {
    for (name, r) in all_builtins() {
        let refl = reflections(&r, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        let image: BTreeSet<usize> = refl.idempotent_map.iter().copied().collect();
        ensure(image.len() == refl.idempotent.size(), || {
            format!("{name}: not surjective")
        })?;
        for (k, x) in refl.idempotents.iter().enumerate() {
            ensure(refl.idempotent_map[x] == k, || {
                format!("{name}: not injective on idempotents")
            })?;
        }
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> MultiPoly {
    let nterms = rng.random_range(0..=3);
    let terms = (0..nterms).map(|_| {
        let e: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..=3)).collect();
        let c = rng.random_range(-3i64..=3);
        (e, Adjoined::Elem(BigInt::from(c)))
    });
    MultiPoly::from_terms(nvars, terms.collect::<Vec<_>>()).unwrap()
}

fn c11_free_reflections() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let bp = BoundedPolys::<BigInt>::new();
    let mut univariate = 0;
    for i in 0..200 {
        let nvars = rng.random_range(1..=2);
        let p = random_poly(&mut rng, nvars);
        let q = random_poly(&mut rng, nvars);
        let fp = FreePolys::new(nvars);
        let ip = IntegerPolys { nvars };
        let es = ExponentSets { nvars };
        let (sum, prod) = (fp.add(&p, &q), fp.mul(&p, &q));
        let ctx = || format!("pair {i}: p = {p}, q = {q}");
        ensure(
            ring_reflection(&sum) == ip.add(&ring_reflection(&p), &ring_reflection(&q)),
            ctx,
        )?;
        ensure(
            ring_reflection(&prod) == ip.mul(&ring_reflection(&p), &ring_reflection(&q)),
            ctx,
        )?;
        ensure(
            idem_reflection(&sum) == es.add(&idem_reflection(&p), &idem_reflection(&q)),
            ctx,
        )?;
        ensure(
            idem_reflection(&prod) == es.mul(&idem_reflection(&p), &idem_reflection(&q)),
            ctx,
        )?;
        if nvars == 1 {
            univariate += 1;
            for x in [&p, &q, &sum, &prod] {
                let b = to_bounded(x).map_err(|e| e.to_string())?;
                let dense = ring_reflection(x).dense().map_err(|e| e.to_string())?;
                ensure(b.bound() == idem_reflection(x).max_degree(), ctx)?;
                ensure(b == BoundedPoly::new(dense, b.bound()).unwrap(), ctx)?;
            }
            let (bp_, bq) = (to_bounded(&p).unwrap(), to_bounded(&q).unwrap());
            ensure(to_bounded(&sum).unwrap() == bp.add(&bp_, &bq), ctx)?;
            ensure(to_bounded(&prod).unwrap() == bp.mul(&bp_, &bq), ctx)?;
        }
    }
    ensure(univariate > 0, || "no univariate pairs".into())
}

fn c12_zeroless() -> Check {
    let r = adjoin_infinity(Integers).map_err(|e| e.to_string())?;
    let mut sample: Vec<WithInfinity<BigInt>> = (-3..=3)
        .map(|n| WithInfinity::Finite(BigInt::from(n)))
        .collect();
    sample.push(WithInfinity::Infinity);
    let rep = zeroless_law_report(&r, &sample).map_err(|e| e.to_string())?;
    ensure(rep.passed(), || rep.to_string())?;
    let zero = WithInfinity::Finite(BigInt::from(0));
    ensure(
        r.mul(&zero, &WithInfinity::Infinity) == WithInfinity::Infinity,
        || "0 * inf != inf".into(),
    )?;
    let failures = absorption_failures(&r, &sample);
    ensure(failures == vec![(zero, WithInfinity::Infinity)], || {
        format!("{failures:?}")
    })
}

/// Number, title, time limit in ms (`None` for exact checks), check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            1,
            "law suite on builtins and (Z/2)_0",
            Some(1000),
            c1_law_suite,
        ),
        (2, "motivating sum, exact", None, c2_motivating_sum),
        (
            3,
            "subtractive iff downward closed",
            Some(5000),
            c3_subtractive_iff_downset,
        ),
        (4, "kernel theorem", Some(5000), c4_kernels),
        (
            5,
            "restricted modular law and B1 counterexamples",
            Some(10_000),
            c5_modular_law,
        ),
        (6, "E-unitary embedding", Some(1000), c6_e_unitary),
        (
            7,
            "upward-closed characterisation",
            Some(2000),
            c7_upward_closed,
        ),
        (8, "heart and two idempotents", Some(10_000), c8_heart),
        (9, "initial object", Some(5000), c9_initial_object),
        (10, "reflections", Some(2000), c10_reflections),
        (
            11,
            "free polynomial reflections, 200 seeded pairs",
            Some(2000),
            c11_free_reflections,
        ),
        (12, "zeroless Z_inf", Some(1000), c12_zeroless),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, title, limit_ms, run) in criteria {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let limit = limit_ms.map(Duration::from_millis);
        let outcome = match (outcome, limit) {
            (Ok(()), Some(l)) if elapsed > l => Err(format!("took {elapsed:?}, limit {l:?}")),
            (o, _) => o,
        };
        let budget = limit_ms.map_or("exact".to_string(), |l| format!("limit {l} ms"));
        match outcome {
            Ok(()) => println!(
                "criterion {n:>2} PASS  {title} ({} ms, {budget})",
                elapsed.as_millis()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {n:>2} FAIL  {title} ({} ms, {budget}): {why}",
                    elapsed.as_millis()
                );
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Law suites on seeded samples for the infinite built-in carriers.

use std::fmt::Display;

use invrig::algebra::{
    classify, law_report_seeded, zeroless_law_report_seeded, InverseSemiring, LawReport, SampleRng,
    ZerolessInverseSemiring,
};
use invrig::free::{z0, FreePolys, MultiPoly, Z0};
use invrig::instances::{
    adjoin_infinity, Adjoined, BoundedPoly, BoundedPolys, DegreeBound, Integers, MinPlus, Tropical,
    WithInfinity,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::json;

use crate::report::{Failure, Report};
use crate::verbs::report_laws;

fn small_int(rng: &mut SampleRng) -> BigInt {
    BigInt::from(rng.random_range(-6i64..=6))
}

fn gen_z0(rng: &mut SampleRng) -> Z0 {
    if rng.random_bool(0.15) {
        Adjoined::Zero
    } else {
        Adjoined::Elem(small_int(rng))
    }
}

fn gen_zinf(rng: &mut SampleRng) -> WithInfinity<BigInt> {
    if rng.random_bool(0.15) {
        WithInfinity::Infinity
    } else {
        WithInfinity::Finite(small_int(rng))
    }
}

fn gen_tropical(rng: &mut SampleRng) -> Tropical<BigInt> {
    if rng.random_bool(0.15) {
        Tropical::Infinity
    } else {
        Tropical::Finite(small_int(rng))
    }
}

fn gen_bounded(rng: &mut SampleRng) -> BoundedPoly<BigRational> {
    let len = rng.random_range(0..=3usize);
    let coeffs: Vec<BigRational> = (0..len)
        .map(|_| {
            BigRational::new(
                BigInt::from(rng.random_range(-3i64..=3)),
                BigInt::from(rng.random_range(1i64..=3)),
            )
        })
        .collect();
    let tight = BoundedPoly::tight(coeffs.clone());
    let bound = match tight.degree().value() {
        Some(d) => DegreeBound::finite(d + rng.random_range(0..=2u32)),
        None if rng.random_bool(0.5) => DegreeBound::NEG_INF,
        None => DegreeBound::finite(rng.random_range(0..=2u32)),
    };
    BoundedPoly::new(coeffs, bound).expect("bound is at least the degree")
}

fn gen_free2(rng: &mut SampleRng) -> MultiPoly {
    let count = rng.random_range(0..=3usize);
    let terms: Vec<(Vec<u32>, Z0)> = (0..count)
        .map(|_| {
            let exps = vec![rng.random_range(0..=2u32), rng.random_range(0..=2u32)];
            (
                exps,
                Adjoined::Elem(BigInt::from(rng.random_range(-3i64..=3))),
            )
        })
        .collect();
    MultiPoly::from_terms(2, terms).expect("two exponents per term")
}

fn named<E: Display>(laws: LawReport<E>) -> LawReport<String> {
    laws.map_witness(|e| e.to_string())
}

fn scope(samples: usize, seed: u64) -> String {
    format!("{samples} sampled elements, seed {seed}")
}

pub fn validate(out: &mut Report, name: &str, seed: u64, samples: usize) -> Result<(), Failure> {
    let sc = scope(samples, seed);
    out.record(
        "structure",
        json!({ "kind": "sampled", "name": name }),
        format!("{name}: infinite carrier, checked on samples"),
    );
    match name {
        "Z0" => report_laws(
            out,
            &named(law_report_seeded(&z0(), seed, samples, gen_z0)?),
            &sc,
        ),
        "Tropical" => {
            let r = MinPlus::<BigInt>::new();
            report_laws(
                out,
                &named(law_report_seeded(&r, seed, samples, gen_tropical)?),
                &sc,
            )
        }
        "Bounded" => {
            let r = BoundedPolys::<BigRational>::new();
            report_laws(
                out,
                &named(law_report_seeded(&r, seed, samples, gen_bounded)?),
                &sc,
            )
        }
        "Free2" => {
            let r = FreePolys::new(2);
            report_laws(
                out,
                &named(law_report_seeded(&r, seed, samples, gen_free2)?),
                &sc,
            )
        }
        "Zinf" => {
            let r = adjoin_infinity(Integers)?;
            let laws = zeroless_law_report_seeded(&r, seed, samples, gen_zinf)?;
            report_laws(
                out,
                &named(laws),
                &format!("{sc}; zeroless, no absorption law"),
            );
            let zero = WithInfinity::Finite(BigInt::from(0));
            let product = r.mul(&zero, &WithInfinity::Infinity);
            let holds = product == WithInfinity::Infinity;
            out.record(
                "zero_absorption",
                json!({ "absorbs": !holds, "product": product.to_string() }),
                format!("zero-absorption fails: 0 * inf = {product}"),
            );
            if !holds {
                out.violation("0 * inf = inf", vec!["0".into(), "inf".into()]);
            }
        }
        _ => unreachable!("not a sampled builtin: {name}"),
    }
    Ok(())
}

fn classify_line<R: InverseSemiring>(out: &mut Report, r: &R)
where
    R::Elem: Display,
{
    let c = classify(r);
    out.record(
        "classification",
        json!({ "class": c.tag.to_string(), "zero_one": c.zero_one.to_string() }),
        format!("classification: {}; 0_1 = {}", c.tag, c.zero_one),
    );
}

pub fn classify_sampled(out: &mut Report, name: &str) -> Result<(), Failure> {
    match name {
        "Z0" => classify_line(out, &z0()),
        "Tropical" => classify_line(out, &MinPlus::<BigInt>::new()),
        "Bounded" => classify_line(out, &BoundedPolys::<BigRational>::new()),
        "Free2" => classify_line(out, &FreePolys::new(2)),
        // no zero, so the 0_1 test does not apply; R_inf is neither
        "Zinf" => {
            let r = adjoin_infinity(Integers)?;
            let z1 = r.idem(&r.one());
            out.record(
                "classification",
                json!({ "class": "zeroless", "zero_one": z1.to_string() }),
                format!("classification: zeroless; 0_1 = {z1}"),
            );
        }
        _ => unreachable!("not a sampled builtin: {name}"),
    }
    Ok(())
}

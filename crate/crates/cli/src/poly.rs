//! `poly` and `demo`: arithmetic on free polynomials over `Z_0` and on
//! bounded polynomials.
//!
//! Operands are `EXPR bound N` (bounded), `z0poly EXPR` or a bare `EXPR`
//! (free), joined by `+`, `-` or `*`; `*` binds tighter.

use invrig::algebra::ZerolessInverseSemiring;
use invrig::free::{
    idem_reflection, ring_reflection, to_bounded, FreePolys, IntegerPolys, MultiPoly,
};
use invrig::instances::{BoundedPoly, BoundedPolys};
use num_rational::BigRational;
use serde_json::json;

use crate::report::{usage, Failure, Report};

#[derive(Clone, Debug)]
enum Operand {
    Free(MultiPoly),
    Bounded(BoundedPoly<BigRational>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Op {
    Add,
    Sub,
    Mul,
}

fn parse(args: &[String]) -> Result<(Vec<Operand>, Vec<Op>), Failure> {
    let mut operands = Vec::new();
    let mut ops = Vec::new();
    let mut i = 0;
    let take = |i: usize, what: &str| -> Result<&String, Failure> {
        args.get(i)
            .ok_or_else(|| usage(format!("expected {what} at the end of the expression")))
    };
    loop {
        let tok = take(i, "a polynomial")?;
        if tok == "z0poly" {
            operands.push(Operand::Free(MultiPoly::parse(take(
                i + 1,
                "a polynomial",
            )?)?));
            i += 2;
        } else if args.get(i + 1).is_some_and(|t| t == "bound") {
            let n = take(i + 2, "a bound")?;
            operands.push(Operand::Bounded(BoundedPoly::parse(tok, n)?));
            i += 3;
        } else {
            operands.push(Operand::Free(MultiPoly::parse(tok)?));
            i += 1;
        }
        let Some(op) = args.get(i) else { break };
        ops.push(match op.as_str() {
            "+" => Op::Add,
            "-" => Op::Sub,
            "*" => Op::Mul,
            other => return Err(usage(format!("expected +, - or *, found {other:?}"))),
        });
        i += 1;
    }
    Ok((operands, ops))
}

/// Applies `*` first, then `+` and `-` from the left.
fn fold<T: Clone>(
    operands: Vec<T>,
    ops: &[Op],
    add: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> T {
    let mut it = operands.into_iter();
    let mut terms = vec![it.next().expect("at least one operand")];
    let mut signs = vec![Op::Add];
    for (op, x) in ops.iter().zip(it) {
        match op {
            Op::Mul => {
                let last = terms.pop().expect("nonempty");
                terms.push(mul(&last, &x));
            }
            _ => {
                terms.push(x);
                signs.push(*op);
            }
        }
    }
    let signed = terms
        .iter()
        .zip(&signs)
        .map(|(t, s)| if *s == Op::Sub { neg(t) } else { t.clone() });
    signed
        .reduce(|a, b| add(&a, &b))
        .expect("at least one operand")
}

pub fn poly(out: &mut Report, args: &[String]) -> Result<(), Failure> {
    if args.is_empty() {
        return Err(usage("poly needs an expression"));
    }
    let (operands, ops) = parse(args)?;
    if operands.iter().all(|o| matches!(o, Operand::Bounded(_))) {
        let ps: Vec<BoundedPoly<BigRational>> = operands
            .into_iter()
            .map(|o| match o {
                Operand::Bounded(p) => p,
                Operand::Free(_) => unreachable!(),
            })
            .collect();
        let r = BoundedPolys::<BigRational>::new();
        let res = fold(
            ps,
            &ops,
            |a, b| r.add(a, b),
            |a| r.neg(a),
            |a, b| r.mul(a, b),
        );
        out.record(
            "result",
            json!({ "carrier": "bounded", "result": res.to_string() }),
            res.to_string(),
        );
        return Ok(());
    }
    if operands.iter().any(|o| matches!(o, Operand::Bounded(_))) {
        return Err(usage("cannot mix bounded and free polynomials"));
    }
    let ps: Vec<MultiPoly> = operands
        .into_iter()
        .map(|o| match o {
            Operand::Free(p) => p,
            Operand::Bounded(_) => unreachable!(),
        })
        .collect();
    let nvars = ps.iter().map(MultiPoly::nvars).max().expect("nonempty");
    let ps = ps
        .iter()
        .map(|p| p.widen(nvars))
        .collect::<Result<Vec<_>, _>>()?;
    let r = FreePolys::new(nvars);
    let res = fold(
        ps,
        &ops,
        |a, b| r.add(a, b),
        |a| r.neg(a),
        |a, b| r.mul(a, b),
    );
    let ring = ring_reflection(&res);
    let support = idem_reflection(&res);
    out.record(
        "result",
        json!({ "carrier": "free", "result": res.to_string() }),
        res.to_string(),
    );
    out.record(
        "reflections",
        json!({ "ring": ring.to_string(), "support": support.to_string() }),
        format!("ring reflection: {ring}\nidempotent reflection: {support}"),
    );
    if nvars == 1 {
        let b = to_bounded(&res)?;
        out.record(
            "bounded",
            json!({ "bounded": b.to_string() }),
            format!("bounded: {b}"),
        );
    }
    Ok(())
}

/// `(x^2 + x) + (-x^2)` in `Z[x]`, `Z_0[x]` and bounded polynomials.
pub fn demo(out: &mut Report) -> Result<(), Failure> {
    let p = MultiPoly::parse("x^2 + x")?;
    let q = MultiPoly::parse("-x^2")?;
    let ring = IntegerPolys { nvars: 1 }.add(&ring_reflection(&p), &ring_reflection(&q));
    let free = FreePolys::new(1).add(&p, &q);
    let bounded = BoundedPolys::<BigRational>::new().add(
        &BoundedPoly::parse("x^2 + x", "2")?,
        &BoundedPoly::parse("-x^2", "2")?,
    );
    for (carrier, value) in [
        ("ring", ring.to_string()),
        ("free", free.to_string()),
        ("bounded", bounded.to_string()),
    ] {
        out.record(
            "demo",
            json!({ "carrier": carrier, "result": value }),
            value,
        );
    }
    Ok(())
}

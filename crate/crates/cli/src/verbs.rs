use invrig::algebra::{classify, LawReport, LawStatus};
use invrig::finite::format::{Loaded, StructureFile};
use invrig::finite::lattice::{find_modularity_counterexamples, restricted_law_violations};
use invrig::finite::{
    e_unitary_witness, embed_eunitary, endomorphism_semiring, group_at, idempotents, isomorphisms,
    kernel, quotient, quotient_semiring, reflections, upward_equivalences, FiniteInverseSemiring,
    FiniteModule, Side, Subset,
};
use invrig::instances::heart;
use serde_json::json;

use crate::input::{Source, Structure};
use crate::report::{usage, Failure, Report};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn names_of(names: &[String], idx: impl IntoIterator<Item = usize>) -> Vec<String> {
    idx.into_iter().map(|i| names[i].clone()).collect()
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
        Side::Two => "two",
    }
}

/// One `law` record per law, a summary line in text mode, and a violation
/// for each failure.
pub fn report_laws(out: &mut Report, laws: &LawReport<String>, scope: &str) {
    for e in &laws.entries {
        let status = if e.status == LawStatus::Pass {
            "pass"
        } else {
            "fail"
        };
        out.machine_only("law", json!({ "law": e.law, "status": status }));
    }
    let total = laws.entries.len();
    let passed = laws
        .entries
        .iter()
        .filter(|e| e.status == LawStatus::Pass)
        .count();
    out.record(
        "laws",
        json!({ "passed": passed, "total": total, "scope": scope }),
        format!("laws: {passed} of {total} passed ({scope})"),
    );
    for e in laws.failures() {
        out.violation(e.law, e.witness.clone().unwrap_or_default());
    }
}

pub fn validate(out: &mut Report, s: &Structure) -> Result<(), Failure> {
    let Source::Finite(loaded) = &s.source else {
        unreachable!("sampled builtins are validated elsewhere")
    };
    match loaded.as_ref() {
        Loaded::Semiring(r) => {
            out.record(
                "structure",
                json!({ "kind": "semiring", "size": r.size(), "elements": r.names() }),
                format!(
                    "inverse semiring, {} elements: {}",
                    r.size(),
                    r.names().join(", ")
                ),
            );
            let laws = r.law_report().map_witness(|&i| r.name(i).to_string());
            report_laws(out, &laws, "exhaustive");
        }
        Loaded::Module(m) => {
            out.record(
                "structure",
                json!({
                    "kind": "module",
                    "side": side_name(m.side()),
                    "size": m.size(),
                    "elements": m.names(),
                    "base_size": m.base().size(),
                }),
                format!(
                    "{} module, {} elements over a {}-element base",
                    side_name(m.side()),
                    m.size(),
                    m.base().size()
                ),
            );
            // the module axioms were checked exhaustively while loading
            out.record(
                "laws",
                json!({ "status": "pass", "scope": "exhaustive" }),
                "module laws: pass (exhaustive)",
            );
        }
        Loaded::Monoid(x) => {
            out.record(
                "structure",
                json!({ "kind": "monoid", "size": x.size(), "elements": x.names() }),
                format!("commutative inverse monoid, {} elements", x.size()),
            );
            out.record(
                "laws",
                json!({ "status": "pass", "scope": "exhaustive" }),
                "monoid laws: pass (exhaustive)",
            );
        }
    }
    Ok(())
}

pub fn classify_finite(out: &mut Report, r: &FiniteInverseSemiring) {
    let c = classify(r);
    out.record(
        "classification",
        json!({ "class": c.tag.to_string(), "zero_one": r.name(c.zero_one), "size": r.size() }),
        format!(
            "classification: {}; 0_1 = {}; {} elements",
            c.tag,
            r.name(c.zero_one),
            r.size()
        ),
    );
}

pub fn idempotents_verb(out: &mut Report, r: &FiniteInverseSemiring) -> Result<(), Failure> {
    let (e, _) = idempotents(r)?;
    let members = names_of(r.names(), e.iter());
    out.record(
        "idempotents",
        json!({ "elements": members, "unit": r.name(r.zero_one()) }),
        format!(
            "E(R) = {} ({} elements, unit 0_1 = {})",
            e.format(r.names()),
            e.len(),
            r.name(r.zero_one())
        ),
    );
    Ok(())
}

pub fn groups(out: &mut Report, r: &FiniteInverseSemiring) -> Result<(), Failure> {
    let (e, _) = idempotents(r)?;
    for z in e.iter() {
        let g = group_at(r, z)?;
        let mut notes = Vec::new();
        if g.is_ideal {
            notes.push("ideal");
        }
        if g.ring.is_some() {
            notes.push("ring of scalars");
        }
        let suffix = if notes.is_empty() {
            String::new()
        } else {
            format!(" ({})", notes.join(", "))
        };
        out.record(
            "group",
            json!({
                "idempotent": r.name(z),
                "members": names_of(r.names(), g.members.iter()),
                "ideal": g.is_ideal,
                "ring": g.ring.is_some(),
            }),
            format!("G({}) = {}{suffix}", r.name(z), g.members.format(r.names())),
        );
    }
    Ok(())
}

fn sorted_submodules(m: &FiniteModule) -> Vec<Subset> {
    let mut all = m.all_submodules();
    all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    all
}

pub fn ideals(out: &mut Report, m: &FiniteModule) -> Result<(), Failure> {
    let names = m.names();
    let all = sorted_submodules(m);
    let mut subtractive = 0;
    for s in &all {
        let sub = m.is_subtractive(s);
        let down = m.is_down_closed(s);
        subtractive += usize::from(sub);
        let upward = if sub {
            let u = upward_equivalences(m, s)?;
            Some(u.verdict())
        } else {
            None
        };
        let up_text = upward.map_or(String::new(), |u| format!("; upward-closed: {}", yes(u)));
        out.record(
            "submodule",
            json!({
                "members": names_of(names, s.iter()),
                "subtractive": sub,
                "down_closed": down,
                "upward_closed": upward,
            }),
            format!(
                "{}  subtractive: {}; down-closed: {}{up_text}",
                s.format(names),
                yes(sub),
                yes(down)
            ),
        );
        if sub != down {
            out.violation("subtractive iff downward closed", names_of(names, s.iter()));
        }
    }
    out.record(
        "summary",
        json!({ "submodules": all.len(), "subtractive": subtractive, "side": side_name(m.side()) }),
        format!(
            "{} submodules ({} side), {} subtractive",
            all.len(),
            side_name(m.side()),
            subtractive
        ),
    );
    Ok(())
}

fn parse_set(m: &FiniteModule, set: &str) -> Result<Subset, Failure> {
    Ok(Subset::parse(m.names(), set)?)
}

pub fn closure(out: &mut Report, m: &FiniteModule, set: &str) -> Result<(), Failure> {
    let names = m.names();
    let gens = parse_set(m, set)?;
    let generated = m.submodule_generate(&gens);
    let subtractive = m.subtractive_closure(&gens)?;
    let down = m.down_closure(&generated);
    out.record(
        "closure",
        json!({
            "set": names_of(names, gens.iter()),
            "submodule": names_of(names, generated.iter()),
            "subtractive": names_of(names, subtractive.iter()),
            "downset": names_of(names, down.iter()),
        }),
        format!(
            "set: {}\ngenerated submodule: {}\nsubtractive closure: {}\ndownset of generated: {}",
            gens.format(names),
            generated.format(names),
            subtractive.format(names),
            down.format(names)
        ),
    );
    if subtractive != down {
        out.violation(
            "subtractive closure equals downset",
            names_of(names, generated.iter()),
        );
    }
    Ok(())
}

pub fn quotient_verb(out: &mut Report, m: &FiniteModule, set: &str) -> Result<(), Failure> {
    let names = m.names();
    let s = m.submodule_generate(&parse_set(m, set)?);
    let (c, q) = quotient(m, &s)?;
    let classes: Vec<Vec<String>> = c
        .classes()
        .iter()
        .map(|k| names_of(names, k.iter()))
        .collect();
    let class_text: Vec<String> = c.classes().iter().map(|k| k.format(names)).collect();
    let ker = kernel(m, &c);
    out.record(
        "quotient",
        json!({
            "submodule": names_of(names, s.iter()),
            "classes": classes,
            "kernel": names_of(names, ker.iter()),
        }),
        format!(
            "submodule: {}\nclasses: {}\nkernel: {}",
            s.format(names),
            class_text.join(" "),
            ker.format(names)
        ),
    );
    if ker != m.down_closure(&s) {
        out.violation(
            "kernel of quotient is the downset",
            names_of(names, s.iter()),
        );
    }
    if (ker == s) != m.is_subtractive(&s) {
        out.violation(
            "kernel equals submodule iff subtractive",
            names_of(names, s.iter()),
        );
    }
    let file = if m.is_regular() && m.side() == Side::Two {
        let (_, qs) = quotient_semiring(m.base(), &s)?;
        StructureFile::from_semiring(&qs)
    } else {
        StructureFile::from_module(&q)
    };
    structure_out(out, &file);
    Ok(())
}

/// Tables of a derived structure: TOML in text mode, a record otherwise.
fn structure_out(out: &mut Report, file: &StructureFile) {
    let value = serde_json::to_value(file).expect("structure files serialise");
    out.record("structure", value, file.to_toml().trim_end().to_string());
}

const SHOWN: usize = 3;

pub fn lattice(out: &mut Report, m: &FiniteModule) -> Result<(), Failure> {
    let names = m.names();
    let subs = m.all_submodules().len();
    let subtr = m.all_subtractive_submodules().len();
    out.record(
        "lattice",
        json!({ "submodules": subs, "subtractive": subtr, "side": side_name(m.side()) }),
        format!(
            "{subs} submodules, {subtr} subtractive ({} side)",
            side_name(m.side())
        ),
    );
    let restricted = restricted_law_violations(m);
    out.record(
        "restricted_modular_law",
        json!({ "violations": restricted.len() }),
        format!("restricted modular law: {} violations", restricted.len()),
    );
    for t in restricted.iter().take(SHOWN) {
        out.violation(
            "restricted modular law",
            vec![t.s1.format(names), t.x.format(names), t.s2.format(names)],
        );
    }
    for (label, subtractive_only) in [("submodule", false), ("subtractive", true)] {
        let bad = find_modularity_counterexamples(m, subtractive_only)?;
        out.record(
            "modularity",
            json!({ "lattice": label, "modular": bad.is_empty(), "counterexamples": bad.len() }),
            format!(
                "{label} lattice modular: {} ({} failing {})",
                yes(bad.is_empty()),
                bad.len(),
                if bad.len() == 1 { "triple" } else { "triples" }
            ),
        );
        for t in bad.iter().take(SHOWN) {
            out.record(
                "counterexample",
                json!({
                    "lattice": label,
                    "s1": names_of(names, t.s1.iter()),
                    "x": names_of(names, t.x.iter()),
                    "s2": names_of(names, t.s2.iter()),
                    "lhs": names_of(names, t.lhs.iter()),
                    "rhs": names_of(names, t.rhs.iter()),
                }),
                format!("  {}", t.describe(names)),
            );
        }
    }
    Ok(())
}

pub fn eunitary(out: &mut Report, r: &FiniteInverseSemiring) -> Result<(), Failure> {
    let witness = e_unitary_witness(r);
    let emb = embed_eunitary(r)?;
    let mut text = format!(
        "E-unitary: {}; embedding injective: {}",
        yes(witness.is_none()),
        yes(emb.injective)
    );
    if let Some((x, _)) = witness {
        text.push_str(&format!("; witness: {}", r.name(x)));
    }
    out.record(
        "eunitary",
        json!({
            "e_unitary": witness.is_none(),
            "embedding_injective": emb.injective,
            "witness": witness.map(|(x, z)| vec![r.name(x), r.name(z)]),
        }),
        text,
    );
    if !emb.homomorphism {
        out.violation("embedding is a homomorphism", vec![]);
    }
    if witness.is_none() != emb.injective {
        let pair = emb.collision().map_or(vec![], |(a, b)| {
            vec![r.name(a).to_string(), r.name(b).to_string()]
        });
        out.violation("E-unitary iff embedding injective", pair);
    }
    Ok(())
}

pub fn embed(out: &mut Report, r: &FiniteInverseSemiring) -> Result<(), Failure> {
    let emb = embed_eunitary(r)?;
    let t = &emb.target;
    out.record(
        "target",
        json!({
            "ring_part": emb.ring_part.names(),
            "idempotent_part": emb.idempotent_part.names(),
            "size": t.size(),
        }),
        format!(
            "target: R/E(R) x E(R), {} x {} = {} elements",
            emb.ring_part.size(),
            emb.idempotent_part.size(),
            t.size()
        ),
    );
    for x in r.elements() {
        out.record(
            "map",
            json!({ "from": r.name(x), "to": t.name(emb.map[x]) }),
            format!("  {} -> {}", r.name(x), t.name(emb.map[x])),
        );
    }
    let collision = emb.collision();
    let mut text = format!(
        "homomorphism: {}; injective: {}",
        yes(emb.homomorphism),
        yes(emb.injective)
    );
    if let Some((a, b)) = collision {
        text.push_str(&format!("; collision: {}, {}", r.name(a), r.name(b)));
    }
    out.record(
        "embedding",
        json!({
            "homomorphism": emb.homomorphism,
            "injective": emb.injective,
            "collision": collision.map(|(a, b)| vec![r.name(a), r.name(b)]),
        }),
        text,
    );
    if !emb.homomorphism {
        out.violation("embedding is a homomorphism", vec![]);
    }
    Ok(())
}

pub fn reflect(out: &mut Report, r: &FiniteInverseSemiring, budget: u64) -> Result<(), Failure> {
    let refl = reflections(r, budget)?;
    for (kind, label, q) in [
        ("ring_reflection", "ring reflection", &refl.ring),
        (
            "idempotent_reflection",
            "idempotent reflection",
            &refl.idempotent,
        ),
    ] {
        let tag = classify(q).tag;
        let plural = if q.size() == 1 { "element" } else { "elements" };
        out.record(
            kind,
            json!({ "elements": q.names(), "size": q.size(), "class": tag.to_string() }),
            format!(
                "{label}: {{{}}} ({} {plural}, {tag})",
                q.names().join(", "),
                q.size()
            ),
        );
    }
    let pairs: Vec<String> = r
        .elements()
        .map(|x| {
            format!(
                "{} -> {}",
                r.name(x),
                refl.idempotent.name(refl.idempotent_map[x])
            )
        })
        .collect();
    out.record(
        "idempotent_map",
        json!({
            "map": r.elements().map(|x| refl.idempotent.name(refl.idempotent_map[x])).collect::<Vec<_>>()
        }),
        format!("x -> 0_x: {}", pairs.join(", ")),
    );
    out.record(
        "checks",
        json!({
            "homomorphism": true,
            "surjective": true,
            "injective_on_idempotents": true,
            "quotient_isomorphic_to_idempotents": true,
        }),
        "checks: homomorphism yes; surjective yes; injective on idempotents yes; R/(0_1 ~ 1) isomorphic to E(R) yes",
    );
    Ok(())
}

pub fn heart_verb(out: &mut Report, r: &FiniteInverseSemiring, budget: u64) -> Result<(), Failure> {
    let h = heart(r)?;
    let hs = &h.semiring;
    out.record(
        "heart",
        json!({ "elements": hs.names(), "size": hs.size() }),
        format!(
            "heart: {{{}}} ({} elements)",
            hs.names().join(", "),
            hs.size()
        ),
    );
    let pairs: Vec<String> = hs
        .elements()
        .map(|x| format!("{} -> {}", hs.name(x), r.name(h.embedding[x])))
        .collect();
    out.record(
        "heart_map",
        json!({ "map": h.embedding.iter().map(|&x| r.name(x)).collect::<Vec<_>>() }),
        format!("into R: {}", pairs.join(", ")),
    );
    let ring = classify(r).is_ring;
    out.record(
        "heart_injective",
        json!({ "injective": h.injective, "input_is_ring": ring }),
        format!("injective: {}", yes(h.injective)),
    );
    if !ring && !h.injective {
        out.violation(
            "heart embeds when R is not a ring",
            names_of(hs.names(), hs.elements()),
        );
    }
    let (e, _) = idempotents(r)?;
    if e.len() == 2 {
        let isos = isomorphisms(hs, r, budget)?;
        out.record(
            "heart_isomorphic",
            json!({ "isomorphic": !isos.is_empty() }),
            format!(
                "two idempotents; heart isomorphic to R: {}",
                yes(!isos.is_empty())
            ),
        );
        if isos.is_empty() {
            out.violation(
                "two idempotents implies R is its heart",
                names_of(r.names(), e.iter()),
            );
        }
    }
    Ok(())
}

pub fn endsr(out: &mut Report, s: &Structure, budget: u64) -> Result<(), Failure> {
    let x = s.monoid()?;
    let (end, _) = endomorphism_semiring(&x, budget)?;
    let (e, _) = idempotents(&end)?;
    out.record(
        "endomorphisms",
        json!({ "size": end.size(), "elements": end.names(), "idempotents": e.len() }),
        format!(
            "End(X): {} elements: {}\nadditive idempotents: {}",
            end.size(),
            end.names().join(", "),
            e.format(end.names())
        ),
    );
    classify_finite(out, &end);
    let laws = end.law_report().map_witness(|&i| end.name(i).to_string());
    report_laws(out, &laws, "exhaustive");
    structure_out(out, &StructureFile::from_semiring(&end));
    Ok(())
}

pub fn semiring_of<'a>(s: &'a Structure, verb: &str) -> Result<&'a FiniteInverseSemiring, Failure> {
    s.semiring().map_err(|_| {
        usage(format!(
            "{verb} needs a finite inverse semiring, got {}",
            s.label
        ))
    })
}

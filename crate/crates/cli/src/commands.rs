use std::sync::Arc;

use davis_core::action::{act_on_gyn, fundamental_domain, induce_hzn, Construction};
use davis_core::cog::{
    canonical_morphism_to_group, validate_cog, validate_covering, validate_morphism_to_group, validate_scwol,
    ComplexOfGroups,
};
use davis_core::coxeter::{CoxeterSystem, SpecialGroups};
use davis_core::davis::{check_structure, verify_disjointness, EdgeMap, LocalGroup};
use davis_core::nerve::{
    build_nerve, find_witnesses, label_automorphisms, nondiscreteness_check, validate_witness, Nerve, Witness,
    CATALOG_NAMES,
};
use davis_core::Error;

use crate::config::{Mutation, RunConfig};
use crate::report::{Check, RunReport, Table};

fn is_resource(e: &Error) -> bool {
    matches!(e, Error::Resource(_) | Error::WordTooLong { .. })
}

/// A check from a library error: resource stops stay distinguishable from failures.
fn error_check(name: &str, e: &Error) -> Check {
    if is_resource(e) {
        Check::resource(name, e.to_string())
    } else {
        Check::fail(name, "error", "construction", e.to_string())
    }
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

struct Setup {
    sys: Arc<CoxeterSystem>,
    nerve: Nerve,
    groups: Arc<SpecialGroups>,
}

fn setup(cfg: &RunConfig, report: &mut RunReport) -> Result<Setup, String> {
    let (sys, _) = cfg.load_system()?;
    report.fact("generators", sys.names().join(" "));
    let nerve = build_nerve(sys.clone());
    let groups = Arc::new(SpecialGroups::new(sys.clone(), cfg.bounds));
    Ok(Setup { sys, nerve, groups })
}

/// The `--witness` entry of the search, or a failed check explaining why there is none.
fn select_witness(cfg: &RunConfig, s: &Setup, report: &mut RunReport) -> Option<Witness> {
    let found = match find_witnesses(&s.nerve, &s.groups) {
        Ok(f) => f,
        Err(e) => {
            report.check(error_check("witness search", &e));
            return None;
        }
    };
    match found.witnesses.get(cfg.witness) {
        Some(w) => {
            report.fact("witness", format!("#{} of {}: {}", cfg.witness, found.witnesses.len(), w.describe(s.sys.names())));
            Some(w.clone())
        }
        None => {
            let why = match &found.failure {
                Some(f) => format!("no witness: {f} fails"),
                None => format!("witness #{} requested, {} found", cfg.witness, found.witnesses.len()),
            };
            report.check(Check::fail("witness available", "witness", "nerve", why));
            None
        }
    }
}

pub fn check(cfg: &RunConfig, report: &mut RunReport) -> Result<(), String> {
    let s = setup(cfg, report)?;
    let st = s.nerve.stats();
    report.fact("nerve", format!("{} vertices, {} edges, {} simplices, dimension {}", st.vertices, st.edges, st.simplices, st.dimension));

    match label_automorphisms(&s.nerve, &cfg.bounds) {
        Ok(auts) => {
            report.fact("label automorphisms", auts.len());
            match nondiscreteness_check(&s.nerve, &auts) {
                Some((a, v)) => report.fact(
                    "nondiscrete",
                    format!("yes: {} fixes the star of {}", a.cycles(s.sys.names()), s.sys.name(v)),
                ),
                None => report.fact("nondiscrete", "no"),
            }
        }
        Err(e) => report.check(error_check("automorphism search", &e)),
    }

    match find_witnesses(&s.nerve, &s.groups) {
        Ok(found) => {
            report.fact("witnesses", found.witnesses.len());
            if let Some(f) = &found.failure {
                report.fact("no witness because", format!("{f} fails for every candidate"));
            }
            let mut t = Table::new("witnesses (first 10)", &["#", "s1", "s2", "alpha1", "alpha2", "q1", "q2"]);
            for (i, w) in found.witnesses.iter().take(10).enumerate() {
                t.row(vec![
                    i.to_string(),
                    s.sys.name(w.s1).into(),
                    s.sys.name(w.s2).into(),
                    w.alpha1.cycles(s.sys.names()),
                    w.alpha2.cycles(s.sys.names()),
                    w.q1.to_string(),
                    w.q2.to_string(),
                ]);
            }
            report.tables.push(t);
            let mut failures = Vec::new();
            for w in &found.witnesses {
                match validate_witness(&s.nerve, &s.groups, w) {
                    Ok(f) => failures.extend(f.into_iter().map(|x| (w.describe(s.sys.names()), x))),
                    Err(e) => failures.push((w.describe(s.sys.names()), e.to_string())),
                }
            }
            let mut c = match &found.failure {
                None => Check::pass("main theorem witnesses", format!("{} found", found.witnesses.len())),
                Some(f) => Check::fail("main theorem witnesses", f, "nerve", "every candidate is eliminated"),
            };
            c.checks = found.witnesses.len().max(1) as u64;
            for (loc, detail) in failures {
                c.status = crate::report::Status::Fail;
                c.violations.push(davis_core::cog::Violation { axiom: "witness".into(), location: loc, details: detail });
            }
            report.check(c);
        }
        Err(e) => report.check(error_check("main theorem witnesses", &e)),
    }

    let mut t = Table::new("halvability", &["T", "type", "s", "|W_T|", "halvable", "|Half_s(W_T)|"]);
    let mut problems = Vec::new();
    for &set in &s.nerve.simplices {
        let (ty, order) = match (s.groups.spherical(set), s.groups.full(set)) {
            (Ok(sph), Ok(w)) => (sph.type_string(), w.size()),
            (Err(e), _) | (_, Err(e)) => {
                problems.push(e);
                continue;
            }
        };
        for x in set.iter() {
            let half = match s.groups.half(set, x) {
                Ok(h) => h,
                Err(e) => {
                    problems.push(e);
                    continue;
                }
            };
            t.row(vec![
                s.sys.fmt_set(set),
                ty.clone(),
                s.sys.name(x).into(),
                order.to_string(),
                yes(half.is_some()),
                half.map_or("-".into(), |h| h.table.size().to_string()),
            ]);
        }
    }
    report.tables.push(t);
    if let Some(e) = problems.first() {
        report.check(error_check("halvability table", e));
    }
    Ok(())
}

pub fn build(cfg: &RunConfig, report: &mut RunReport) -> Result<(), String> {
    let s = setup(cfg, report)?;
    let Some(wit) = select_witness(cfg, &s, report) else { return Ok(()) };
    let c = match Construction::new(wit, s.sys.clone(), cfg.n, cfg.bounds) {
        Ok(c) => c,
        Err(e) => {
            report.check(error_check("construction of G(Y_n)", &e));
            return Ok(());
        }
    };
    let y = &c.y;
    report.fact("n", cfg.n);
    report.fact("chambers", y.chambers.len());
    let levels: Vec<String> = y.level_counts().iter().map(|x| x.to_string()).collect();
    report.fact("chambers per level 1..n", format!("({})", levels.join(",")));
    report.fact("vertices", y.vertices.len());
    report.fact("edges", y.scwol.edge_count());
    report.fact("half vertices", c.gy.local_kind.iter().filter(|k| matches!(k, LocalGroup::Half(..))).count());
    report.fact("Ad(s) edges", c.gy.edge_kind.iter().filter(|k| matches!(k, EdgeMap::Conjugation(_))).count());

    let mut t = Table::new("dual graph", &["chamber", "parent", "mirror"]);
    for (ch, p, u) in y.dual_graph() {
        t.row(vec![y.chambers[ch].label(), y.chambers[p].label(), s.sys.name(u).into()]);
    }
    report.tables.push(t);
    report.artifacts.push(crate::report::Artifact { name: "dual graph (DOT)".into(), content: y.dual_graph_dot() });

    report.check(Check::from_report("Y_n structure", &check_structure(y)));
    report.check(Check::from_report("scwol axioms", &validate_scwol(&y.scwol)));
    report.check(Check::from_report("G(Y_n) complex of groups", &validate_cog(&c.gy.cog)));
    Ok(())
}

/// The first twist replacement that `validate_cog` rejects.
fn mutate_twist(hz: &ComplexOfGroups) -> Option<(ComplexOfGroups, String)> {
    for (a, b, _) in hz.scwol.composable_pairs() {
        let target = &hz.local[hz.scwol.t(a)];
        for g in 1..target.size() as u32 {
            let m = hz.clone().with_twist(a, b, g);
            if !validate_cog(&m).passed() {
                return Some((m, format!("twist g(a{a}, b{b}) set to element {g}")));
            }
        }
    }
    None
}

pub fn verify(cfg: &RunConfig, report: &mut RunReport) -> Result<(), String> {
    let s = setup(cfg, report)?;
    let Some(wit) = select_witness(cfg, &s, report) else { return Ok(()) };
    report.fact("n", cfg.n);
    if let Some(m) = cfg.mutate {
        report.fact("mutation", format!("{m:?}").to_lowercase());
    }

    match validate_witness(&s.nerve, &s.groups, &wit) {
        Ok(f) if f.is_empty() => report.check(Check::pass("witness conditions", "conditions (1)-(3) hold")),
        Ok(f) => {
            let mut c = Check::fail("witness conditions", "witness", "witness", f[0].clone());
            for x in &f[1..] {
                c.violations.push(davis_core::cog::Violation { axiom: "witness".into(), location: "witness".into(), details: x.clone() });
            }
            report.check(c);
        }
        Err(e) => report.check(error_check("witness conditions", &e)),
    }

    match verify_disjointness(&wit, &s.sys, cfg.n, cfg.bounds.word_len) {
        Ok(d) => {
            let longest = d.words.iter().map(|(_, w)| w.len()).max().unwrap_or(0);
            let mut c = if d.passed() {
                Check::pass("disjointness of W_{k,n}", format!("{} words, longest {longest}", d.words.len()))
            } else {
                let mut c = Check::fail("disjointness of W_{k,n}", "distinct", "words", "");
                c.violations = d
                    .collisions
                    .iter()
                    .map(|&(i, j)| davis_core::cog::Violation {
                        axiom: "distinct".into(),
                        location: format!("{} / {}", d.words[i].0.label(), d.words[j].0.label()),
                        details: format!("both reduce to {}", s.sys.fmt_word(&d.reduced[i])),
                    })
                    .collect();
                c
            };
            c.checks = (d.words.len() * d.words.len().saturating_sub(1) / 2) as u64;
            report.check(c);
        }
        Err(e) => report.check(error_check("disjointness of W_{k,n}", &e)),
    }

    let c = match Construction::new(wit, s.sys.clone(), cfg.n, cfg.bounds) {
        Ok(c) => c,
        Err(e) => {
            report.check(error_check("construction of G(Y_n)", &e));
            return Ok(());
        }
    };
    report.check(Check::from_report("Y_n structure", &check_structure(&c.y)));
    report.check(Check::from_report("G(Y_n) complex of groups", &validate_cog(&c.gy.cog)));

    match c.phi() {
        Ok(mut phi) => {
            let mut note = None;
            if cfg.mutate == Some(Mutation::Covering) {
                match c.gy.edge_kind.iter().position(|k| matches!(k, EdgeMap::Conjugation(_))) {
                    Some(a) => {
                        phi.edge_elts[a] = 0;
                        note = Some(format!("mutated: Ad(s) element on edge {a} forced to 1"));
                    }
                    None => note = Some("no Ad(s) edge to mutate".to_string()),
                }
            }
            let mut chk = Check::from_report("covering Φ_n: G(Y_n) → G(Y_1)", &validate_covering(&phi));
            chk.note = note;
            report.check(chk);
        }
        Err(e) => report.check(error_check("covering Φ_n: G(Y_n) → G(Y_1)", &e)),
    }

    let names = [
        "H_n acts on G(Y_n)",
        "H(Z_n) complex of groups",
        "covering Λ_n: G(Y_n) → H(Z_n)",
        "canonical morphism H(Z_n) → H_n",
    ];
    let ya = match c.act_on_yn() {
        Ok(ya) => ya,
        Err(e) => {
            for n in names {
                report.check(error_check(n, &e));
            }
            return Ok(());
        }
    };
    report.fact("|H_n|", ya.elements.len());
    let fd = fundamental_domain(&ya);
    report.fact("Z_n vertices", fd.quotient.scwol.vertex_count());
    let ga = match act_on_gyn(&c.gy, &ya) {
        Ok(ga) => ga,
        Err(e) => {
            for n in names {
                report.check(error_check(n, &e));
            }
            return Ok(());
        }
    };
    report.check(Check::pass(names[0], "validated over the barycentric subdivision"));
    let iq = match induce_hzn(&ga) {
        Ok(iq) => iq,
        Err(e) => {
            for n in &names[1..] {
                report.check(error_check(n, &e));
            }
            return Ok(());
        }
    };
    let (hz, note) = match cfg.mutate {
        Some(Mutation::Twist) => match mutate_twist(&iq.hz) {
            Some((m, what)) => (Arc::new(m), Some(format!("mutated: {what}"))),
            None => (iq.hz.clone(), Some("no twist mutation is detectable".into())),
        },
        _ => (iq.hz.clone(), None),
    };
    let mut chk = Check::from_report(names[1], &validate_cog(&hz));
    chk.note = note;
    report.check(chk);
    let mut lambda = iq.lambda.clone();
    lambda.target = hz.clone();
    report.check(Check::from_report(names[2], &validate_covering(&lambda)));
    report.check(Check::from_report(names[3], &validate_morphism_to_group(&canonical_morphism_to_group(&hz, &iq.data))));
    Ok(())
}

pub fn covolume(cfg: &RunConfig, report: &mut RunReport) -> Result<(), String> {
    let s = setup(cfg, report)?;
    let Some(wit) = select_witness(cfg, &s, report) else { return Ok(()) };
    let mut rows = Table::new("covolumes", &["n", "|H_n|", "direct", "series", "agree", "direct from"]);
    let mut stabs = Table::new("cone point orbits", &["n", "level", "orbit", "stabilizer order"]);
    let mut agree_at = Vec::new();
    let mut series = Vec::new();
    let mut direct = Vec::new();
    for n in 1..=cfg.n_max {
        let name = format!("covolume report n={n}");
        let r = match Construction::new(wit.clone(), s.sys.clone(), n, cfg.bounds).and_then(|c| {
            let order = c.wreath().order;
            c.covolume_report().map(|r| (r, order))
        }) {
            Ok(r) => r,
            Err(e) => {
                report.check(error_check(&name, &e));
                continue;
            }
        };
        let (r, order) = r;
        rows.row(vec![
            n.to_string(),
            order.to_string(),
            r.direct.to_string(),
            r.series.to_string(),
            yes(r.agree),
            r.direct_source.clone(),
        ]);
        for p in &r.per_vertex {
            stabs.row(vec![n.to_string(), p.level.to_string(), p.orbit.to_string(), p.stab_order.to_string()]);
        }
        if r.agree {
            agree_at.push(n.to_string());
        }
        series.push(r.series.to_string());
        direct.push(r.direct.to_string());
        let consistent = r.orbit_stabilizer_ok && r.chamber_count_ok && r.direct_matches_table;
        report.check(if consistent {
            Check::pass(&name, "orbit-stabilizer, chamber count and direct value consistent")
        } else {
            Check::fail(
                &name,
                "consistency",
                &format!("n={n}"),
                format!(
                    "orbit-stabilizer {}, chamber count {}, direct matches table {}",
                    r.orbit_stabilizer_ok, r.chamber_count_ok, r.direct_matches_table
                ),
            )
        });
    }
    report.fact("series", series.join(", "));
    report.fact("direct", direct.join(", "));
    report.fact("agree at n", if agree_at.is_empty() { "none".into() } else { agree_at.join(", ") });
    report.tables.push(rows);
    report.tables.push(stabs);
    Ok(())
}

pub fn catalog_list(report: &mut RunReport) {
    let mut t = Table::new("catalog", &["name", "nerve"]);
    let about = |name: &str| match name.split('(').next().unwrap_or("") {
        "example1" => "K_{3,2}: s1,s2,s3 joined to s4 (label m) and s5 (label m')",
        "complete_bipartite" => "K_{q,q'} with every edge labelled m",
        "gl32_building" => "Heawood graph (points and lines of the Fano plane), labels m",
        "petersen" => "Petersen graph, labels m",
        "join_of_points" => "join of discrete sets of the given sizes, right-angled",
        _ => "",
    };
    for name in CATALOG_NAMES {
        t.row(vec![name.to_string(), about(name).into()]);
    }
    report.tables.push(t);
}

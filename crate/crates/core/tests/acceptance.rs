//! One line per acceptance criterion: status, number, name, wall time
//! against its limit, and a short detail.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use equicycle::assembly::{construct, Options};
use equicycle::blowup::{decompose_c3_blowup, decompose_c5_blowup};
use equicycle::certificate::{read_text, write_text};
use equicycle::design::{
    CayleyGroup, Colour, Colouring, Cycle, CycleSystem, Edge, GraphSpec, Provenance, Route, Vertex,
    VertexFamily,
};
use equicycle::difference::{audit_coverage, differences, CoverageReport, DifferenceKind};
use equicycle::gadgets::{circulant_ham_decomposition, graceful_path, infinity_cycle};
use equicycle::oracle::{enumerate_graceful, exact_cover_decompose, judge, recount};
use equicycle::rotational::{
    build_c0_c1, build_cp, colouring_k2l1, decompose_k2l1, decompose_k4l1, plan_k2l1, plan_k4l1,
};
use equicycle::verify::{verify, verify_certificate, Expectations, CLASS_SIZES, EDGE_PARTITION};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let (pass, detail) = match out {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over time limit")),
        Err(e) => (false, e),
    };
    println!(
        "{} {n:>2} {name} ({:.2}s, limit {}s): {detail}",
        if pass { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn fixture_k19() -> Outcome {
    let plan = plan_k2l1(9).map_err(|e| e.to_string())?;
    for (name, listing) in K19_BASES {
        let got = &plan.base(name).ok_or(format!("no base {name}"))?.cycle;
        ensure(got.canonical() == cyc(listing), || {
            format!("{name}: got {got}")
        })?;
    }
    // Colours as printed next to the listing.
    let phi = colouring_k2l1(9);
    let red = [
        "2_0", "0_0", "1_1", "3_1", "1_1", "6_0", "3_1", "4_0", "4_0", "8_0", "2_0", "6_0",
    ];
    let blue = [
        "inf", "1_0", "3_0", "2_1", "0_1", "7_0", "5_0", "4_1", "3_0", "7_0", "1_0", "5_0",
    ];
    for (toks, want) in [(red, Colour::Red), (blue, Colour::Blue)] {
        for t in toks {
            let v: Vertex = t.parse().map_err(|e: equicycle::Error| e.to_string())?;
            ensure(phi.get(&v) == Some(want), || {
                format!("{t} should be {want}")
            })?;
        }
    }
    let sys = decompose_k2l1(9).map_err(|e| e.to_string())?;
    ensure(verify_certificate(&sys).passed(), || {
        "system does not verify".into()
    })?;
    Ok("three base cycles and their colours match".into())
}

fn table_structure(
    report: &CoverageReport,
    s0: &[u32],
    s1: &[u32],
    m: u32,
    ell: u32,
) -> Result<(), String> {
    for e in &report.entries {
        let who: BTreeSet<&str> = e.suppliers.iter().map(String::as_str).collect();
        let want: &[&str] = match e.class.kind {
            DifferenceKind::Mixed if e.class.value == 0 || e.class.value == ell => &["c_pure"],
            DifferenceKind::Mixed => &["c_0", "c_1"],
            DifferenceKind::Pure(0) if e.class.value == m => &["c_0"],
            DifferenceKind::Pure(0) if e.class.value == 2 => &["c_2_0"],
            DifferenceKind::Pure(0) if s0.contains(&e.class.value) => &["c_pure"],
            DifferenceKind::Pure(0) => &["c_inf_0"],
            DifferenceKind::Pure(_) if e.class.value == m => &["c_1"],
            DifferenceKind::Pure(_) if s1.contains(&e.class.value) => &["c_pure"],
            DifferenceKind::Pure(_) => &["c_inf_1"],
        };
        let allowed: BTreeSet<&str> = want.iter().copied().collect();
        ensure(!who.is_empty() && who.is_subset(&allowed), || {
            format!(
                "{} supplied by {:?}, expected from {:?}",
                e.class, who, allowed
            )
        })?;
    }
    for i in &report.infinity {
        ensure(
            i.suppliers.iter().all(|s| s == "c_inf_0" || s == "c_inf_1") && !i.suppliers.is_empty(),
            || {
                format!(
                    "infinity edge at {}_{} from {:?}",
                    i.residue, i.part, i.suppliers
                )
            },
        )?;
    }
    ensure(report.passed(), || report.failures().join("; "))
}

fn fixture_k69() -> Outcome {
    let plan = plan_k4l1(17).map_err(|e| e.to_string())?;
    ensure(plan.base_cycles.len() == 6, || {
        format!("{} base cycles", plan.base_cycles.len())
    })?;
    for (name, listing) in K69_BASES {
        let got = &plan.base(name).ok_or(format!("no base {name}"))?.cycle;
        ensure(got.canonical() == cyc(listing), || {
            format!("{name}: got {got}")
        })?;
    }
    ensure(
        plan.s0 == K69_S0 && plan.s1 == K69_S1 && plan.m == Some(K69_M),
        || "S0/S1/m differ".into(),
    )?;
    let report = audit_coverage(&plan.base_cycles, 34).map_err(|e| e.to_string())?;
    table_structure(&report, &K69_S0, &K69_S1, K69_M, 17)?;
    let sys = decompose_k4l1(17).map_err(|e| e.to_string())?;
    ensure(verify_certificate(&sys).passed(), || {
        "system does not verify".into()
    })?;
    Ok(format!(
        "six base cycles match; {} ledger rows follow the table",
        report.entries.len()
    ))
}

fn fixture_listings() -> Outcome {
    let mut n = 0;
    for (ell, c0, c1, m) in C0_C1 {
        let (a, b, got_m) = build_c0_c1(ell).map_err(|e| e.to_string())?;
        ensure(a == cyc(c0) && b == cyc(c1) && got_m == m, || {
            format!("C_0/C_1 differ at l = {ell}")
        })?;
        n += 2;
    }
    for (ell, m, listing) in CP {
        let got = build_cp(ell, m).map_err(|e| e.to_string())?;
        ensure(got == cyc(listing), || {
            format!("C_p differs at l = {ell}: {got}")
        })?;
        n += 1;
    }
    let c5 = decompose_c5_blowup(7).map_err(|e| e.to_string())?;
    let starters: Vec<Cycle> = c5
        .provenance
        .base_cycles
        .iter()
        .map(|b| b.cycle.canonical())
        .collect();
    let want: Vec<Cycle> = C5_SEVEN.iter().map(|p| blown(p)).collect();
    ensure(starters == want, || "C_5[7] starters differ".into())?;
    n += 5;
    let c3 = decompose_c3_blowup(7).map_err(|e| e.to_string())?;
    ensure(
        c3.provenance
            .base_cycles
            .iter()
            .any(|b| b.cycle == blown(&C3_SEVEN_FOURTH)),
        || "C_3[7] fourth base cycle missing".into(),
    )?;
    n += 1;
    Ok(format!("{n} listed cycles reproduced"))
}

fn sweep(class_rows: &mut Vec<String>) -> Outcome {
    let mut worst = (Duration::ZERO, 0, 0);
    let mut count = 0;
    for ell in (7..=25u32).step_by(2) {
        for v in [
            2 * ell + 1,
            4 * ell + 1,
            6 * ell + 1,
            8 * ell + 1,
            ell,
            3 * ell,
            5 * ell,
            7 * ell,
        ] {
            let start = Instant::now();
            let sys = construct(ell, v, &Options::default())
                .map_err(|e| format!("l={ell} v={v}: {e}"))?;
            let text = write_text(&sys);
            let back = read_text(&text).map_err(|e| format!("l={ell} v={v}: {e}"))?;
            let verdict = verify_certificate(&back);
            ensure(verdict.passed(), || {
                format!("l={ell} v={v}: {:?}", verdict.failing())
            })?;
            let want = (v as usize * (v as usize - 1)) / (2 * ell as usize);
            ensure(back.cycle_count() == want, || {
                format!(
                    "l={ell} v={v}: {} cycles, expected {want}",
                    back.cycle_count()
                )
            })?;
            let lo = (ell as usize - 1) / 2;
            for c in &back.cycles {
                let red = c
                    .vertices()
                    .iter()
                    .filter(|x| back.colouring.get(x) == Some(Colour::Red))
                    .count();
                ensure(
                    c.len() == ell as usize && (red == lo || red == lo + 1),
                    || format!("l={ell} v={v}: cycle {c} has {red} red"),
                )?;
            }
            if v == 2 * ell + 1 || v == 4 * ell + 1 {
                let (r, b) = back.colouring.class_sizes();
                let k = (v - 1) / (2 * ell);
                let want = (k as usize * ell as usize, k as usize * ell as usize + 1);
                if (r, b) != want {
                    class_rows.push(format!("l={ell} v={v}: ({r}, {b}) expected {want:?}"));
                }
            }
            let took = start.elapsed();
            ensure(took <= Duration::from_secs(60), || {
                format!("l={ell} v={v} took {took:?}")
            })?;
            if took > worst.0 {
                worst = (took, ell, v);
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} instances verified; slowest l={} v={} at {:.2}s",
        worst.1,
        worst.2,
        worst.0.as_secs_f64()
    ))
}

fn infinity_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut n = 0;
    for ell in (7..=31u32).step_by(2) {
        let r = (ell as usize - 3) / 2;
        for _ in 0..200 {
            let mut d: Vec<u32> = sample(&mut rng, ell as usize - 1, r)
                .into_iter()
                .map(|x| x as u32 + 1)
                .collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            let part = rng.gen_range(0..2u8);
            let c = infinity_cycle(ell, &d, part).map_err(|e| format!("l={ell} D={d:?}: {e}"))?;
            let diffs = differences(&c, 2 * ell).map_err(|e| e.to_string())?;
            let mut want: Vec<u32> = d.iter().flat_map(|&x| [x, x]).chain([ell]).collect();
            want.sort_unstable();
            let got = diffs.values_of(DifferenceKind::Pure(part));
            ensure(got == want, || {
                format!("l={ell} D={d:?}: differences {got:?}")
            })?;
            for v in &c.vertices()[2..2 + r] {
                let Vertex::Rotational { residue, .. } = v else {
                    return Err(format!("unexpected vertex {v}"));
                };
                ensure(*residue > 0 && *residue < ell, || {
                    format!("l={ell} D={d:?}: partial sum {residue}")
                })?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} random difference sets"))
}

fn graceful_oracle() -> Outcome {
    let mut total = 0;
    for h in 2..=12u32 {
        for leaf in [0, 1] {
            let p = graceful_path(h, leaf).map_err(|e| e.to_string())?;
            let labels: Vec<u32> = p
                .vertices()
                .iter()
                .map(|v| match v {
                    Vertex::Plain(x) => *x,
                    _ => u32::MAX,
                })
                .collect();
            ensure(labels.first() == Some(&leaf), || {
                format!("h={h}: leaf is {:?}", labels.first())
            })?;
            let all = enumerate_graceful(h, Some(leaf)).map_err(|e| e.to_string())?;
            ensure(all.contains(&labels), || {
                format!("h={h} leaf={leaf}: {labels:?} not graceful")
            })?;
            total += all.len();
        }
    }
    Ok(format!(
        "P_0 and P_1 found among {total} enumerated labellings"
    ))
}

fn circulants() -> Outcome {
    for ell in (7..=31u32).step_by(2) {
        let d = circulant_ham_decomposition(ell).map_err(|e| format!("l={ell}: {e}"))?;
        d.check().map_err(|e| format!("l={ell}: {e}"))?;
        ensure(d.cycles.len() == (ell as usize - 5) / 2, || {
            format!("l={ell}: {} cycles", d.cycles.len())
        })?;
    }
    Ok("13 circulants decomposed and checked".into())
}

fn blowups() -> Outcome {
    for ell in (7..=31u32).step_by(2) {
        for (s, sys) in [(3, decompose_c3_blowup(ell)), (5, decompose_c5_blowup(ell))] {
            let sys = sys.map_err(|e| format!("C_{s}[{ell}]: {e}"))?;
            let exp = Expectations::from_provenance(&sys.provenance);
            ensure(verify(&sys, &exp).passed(), || {
                format!("C_{s}[{ell}] fails the verifier")
            })?;
            ensure(judge(&sys, &exp), || {
                format!("C_{s}[{ell}] fails the oracle")
            })?;
            ensure(sys.cycle_count() == (s * ell) as usize, || {
                format!("C_{s}[{ell}]: {} cycles", sys.cycle_count())
            })?;
        }
    }
    Ok("26 blow-up systems verified by verifier and oracle".into())
}

enum Mutation {
    EdgeSwap,
    ColourFlip,
    Drop,
    Duplicate,
}

fn mutate(sys: &CycleSystem, m: &Mutation, rng: &mut ChaCha8Rng) -> CycleSystem {
    let mut out = sys.clone();
    match m {
        Mutation::EdgeSwap => {
            let i = rng.gen_range(0..out.cycles.len());
            let mut vs = out.cycles[i].vertices().to_vec();
            let j = rng.gen_range(0..vs.len());
            let k = (j + 1) % vs.len();
            vs.swap(j, k);
            out.cycles[i] = Cycle::new(vs).unwrap();
        }
        Mutation::ColourFlip => {
            let vs: Vec<Vertex> = out.colouring.iter().map(|(v, _)| *v).collect();
            let v = vs[rng.gen_range(0..vs.len())];
            let c = out.colouring.get(&v).unwrap();
            out.colouring = out.colouring.with(v, c.flipped());
        }
        Mutation::Drop => {
            let i = rng.gen_range(0..out.cycles.len());
            out.cycles.remove(i);
        }
        Mutation::Duplicate => {
            let i = rng.gen_range(0..out.cycles.len());
            let c = out.cycles[i].clone();
            out.cycles.push(c);
        }
    }
    out
}

fn mutations() -> Outcome {
    let fixtures = [
        decompose_k2l1(9),
        decompose_k4l1(17),
        decompose_c3_blowup(7),
        decompose_c5_blowup(7),
        construct(7, 35, &Options::default()),
        construct(7, 43, &Options::default()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut n = 0;
    for f in fixtures {
        let sys = f.map_err(|e| e.to_string())?;
        ensure(verify_certificate(&sys).passed(), || {
            "fixture does not verify".into()
        })?;
        for (m, check) in [
            (Mutation::EdgeSwap, EDGE_PARTITION),
            (Mutation::ColourFlip, CLASS_SIZES),
            (Mutation::Drop, EDGE_PARTITION),
            (Mutation::Duplicate, EDGE_PARTITION),
        ] {
            for _ in 0..25 {
                let bad = mutate(&sys, &m, &mut rng);
                let verdict = verify_certificate(&bad);
                ensure(
                    !verdict.passed() && verdict.failing().contains(&check),
                    || {
                        format!(
                            "{} mutation of {} not caught by {check}",
                            check, sys.provenance.route
                        )
                    },
                )?;
                n += 1;
            }
        }
    }
    Ok(format!(
        "{n} of {n} mutations detected by the expected check"
    ))
}

fn small_hosts() -> Result<Vec<(GraphSpec, Vec<Cycle>)>, String> {
    let factor = |order: u32| -> Vec<Edge> {
        (0..order / 2)
            .map(|i| Edge::new(Vertex::Plain(2 * i), Vertex::Plain(2 * i + 1)))
            .collect()
    };
    let minus = |order: u32| GraphSpec::CompleteMinusFactor {
        family: VertexFamily::Plain { order },
        factor: factor(order),
    };
    let cases: Vec<(GraphSpec, Vec<usize>)> = vec![
        (GraphSpec::complete_plain(5), vec![5, 5]),
        (GraphSpec::complete_plain(7), vec![3; 7]),
        (GraphSpec::complete_plain(7), vec![7; 3]),
        (GraphSpec::complete_plain(9), vec![3; 12]),
        (GraphSpec::complete_plain(9), vec![9; 4]),
        (minus(6), vec![3; 4]),
        (minus(8), vec![4; 6]),
        (GraphSpec::Blowup { s: 3, ell: 3 }, vec![3; 9]),
        (
            GraphSpec::Cayley {
                group: CayleyGroup::Cyclic(11),
                connection: [1, 2, 9, 10].map(Vertex::Plain).to_vec(),
            },
            vec![11, 11],
        ),
        (
            GraphSpec::Complete(VertexFamily::Rotational {
                modulus: 2,
                infinity: true,
            }),
            vec![5, 5],
        ),
    ];
    cases
        .into_iter()
        .map(|(g, lengths)| {
            let d = exact_cover_decompose(&g, &lengths)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no decomposition of {g:?}"))?;
            Ok((g, d))
        })
        .collect()
}

fn oracle_agreement() -> Outcome {
    let hosts = small_hosts()?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut valid, mut invalid) = (0, 0);
    for trial in 0..1000 {
        let (graph, cycles) = &hosts[trial % hosts.len()];
        let colouring: Colouring = graph
            .vertices()
            .into_iter()
            .map(|v| {
                (
                    v,
                    if rng.gen_bool(0.5) {
                        Colour::Red
                    } else {
                        Colour::Blue
                    },
                )
            })
            .collect();
        let len = cycles[0].len() as u32;
        let order = graph.vertices().len() as u32;
        let mut sys = CycleSystem::new(
            graph.clone(),
            cycles.clone(),
            colouring,
            Provenance::new(Route::Custom, len, order),
        )
        .map_err(|e| e.to_string())?;
        match rng.gen_range(0..6) {
            0 => sys = mutate(&sys, &Mutation::EdgeSwap, &mut rng),
            1 => sys = mutate(&sys, &Mutation::Drop, &mut rng),
            2 => sys = mutate(&sys, &Mutation::Duplicate, &mut rng),
            _ => {}
        }
        let mut exp = Expectations::default();
        if rng.gen_bool(0.5) {
            exp.cycle_length = Some(len as usize + usize::from(rng.gen_bool(0.2)));
        }
        if rng.gen_bool(0.5) {
            let (r, b) = recount(&sys).class_sizes;
            exp.class_sizes = Some(if rng.gen_bool(0.7) {
                (r, b)
            } else {
                (r + 1, b.saturating_sub(1))
            });
        }
        if matches!(graph, GraphSpec::Blowup { .. }) && rng.gen_bool(0.5) {
            exp.red_per_part = Some(rng.gen_range(1..=2));
        }
        let v = verify(&sys, &exp).passed();
        let o = judge(&sys, &exp);
        ensure(v == o, || {
            format!("trial {trial}: verifier says {v}, oracle says {o} on {graph:?}")
        })?;
        if v {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    ensure(valid > 0 && invalid > 0, || {
        format!("degenerate sample: {valid} valid, {invalid} invalid")
    })?;
    Ok(format!(
        "agreement on 1000 certificates ({valid} valid, {invalid} invalid)"
    ))
}

fn class_sizes(rows: &[String], swept: bool) -> Outcome {
    ensure(swept, || "sweep did not complete".into())?;
    ensure(rows.is_empty(), || rows.join("; "))?;
    let mut n = 0;
    for ell in (7..=25u32).step_by(2) {
        let a = decompose_k2l1(ell)
            .map_err(|e| e.to_string())?
            .colouring
            .class_sizes();
        let b = decompose_k4l1(ell)
            .map_err(|e| e.to_string())?
            .colouring
            .class_sizes();
        let l = ell as usize;
        ensure(a == (l, l + 1) && b == (2 * l, 2 * l + 1), || {
            format!("l={ell}: {a:?} {b:?}")
        })?;
        n += 2;
    }
    Ok(format!(
        "{n} rotational systems have classes (l, l+1) and (2l, 2l+1)"
    ))
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let mut ok = true;
    ok &= criterion(1, "fixture K_19", s(1), fixture_k19);
    ok &= criterion(2, "fixture K_69 and difference ledger", s(1), fixture_k69);
    ok &= criterion(3, "fixture cycle listings", s(1), fixture_listings);
    let mut rows = Vec::new();
    let swept = criterion(4, "end-to-end sweep", s(30 * 60), || sweep(&mut rows));
    ok &= swept;
    ok &= criterion(5, "colour-class sizes", s(60), || class_sizes(&rows, swept));
    ok &= criterion(6, "infinity-cycle properties", s(5), infinity_suite);
    ok &= criterion(7, "graceful oracle", s(60), graceful_oracle);
    ok &= criterion(8, "circulant Hamiltonian decompositions", s(30), circulants);
    ok &= criterion(9, "standalone blow-up systems", s(120), blowups);
    ok &= criterion(10, "mutation detection", s(10), mutations);
    ok &= criterion(11, "oracle agreement", s(60), oracle_agreement);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

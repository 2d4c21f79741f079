//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact integer equality.

use std::process::ExitCode;
use std::time::Instant;

use absorbing_core::corpus::{
    graph_corpus, ideal_corpus, irreducible_family, primary_sample, staircase_ideals, DEFAULT_SEED,
};
use absorbing_core::decomposition::associated_primes;
use absorbing_core::graph::{
    edge_ideal, edge_power_linearity, minimal_vertex_covers, squarefree_power_witness,
};
use absorbing_core::linear::{
    check_linearity_by_powers, integral_closure_2d, is_integrally_closed_2d, is_omega_linear_2d,
    omega_power_irreducible, PowerVerdict,
};
use absorbing_core::omega::two_variable_formula;
use absorbing_core::oracle::{brute_noether, brute_power_decomposition_check, verify_certificate};
use absorbing_core::{
    canonical_primary_decomposition, noether_exponent, omega, omega_with, parse_ideal,
    standard_decomposition, Graph, Monomial, MonomialIdeal, OmegaOptions, OmegaValue, Ring, Rule,
};

type Outcome = Result<String, String>;

fn ring(vars: &[&str]) -> Ring {
    Ring::new(vars).expect("valid names")
}

fn ideal(s: &str, r: &Ring) -> MonomialIdeal {
    parse_ideal(s, Some(r)).expect("valid ideal")
}

fn exact(i: &MonomialIdeal) -> Option<u64> {
    omega(i).exact_value()
}

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn component_set<'a>(ideals: impl Iterator<Item = &'a MonomialIdeal>) -> Vec<String> {
    let mut v: Vec<String> = ideals.map(MonomialIdeal::render).collect();
    v.sort();
    v
}

fn worked_examples() -> Outcome {
    let xyz = ring(&["x", "y", "z"]);
    let xy = ring(&["x", "y"]);

    let i = ideal("x^4, y^3, z^2, x*y, y^2*z", &xyz);
    check(exact(&i) == Some(5), "ω((x^4,y^3,z^2,xy,y^2z)) ≠ 5")?;
    let std = standard_decomposition(&i).map_err(|e| e.to_string())?;
    let expected = component_set(
        ["x, y^2, z^2", "x^4, y, z^2", "x, y^3, z"]
            .iter()
            .map(|s| ideal(s, &xyz))
            .collect::<Vec<_>>()
            .iter(),
    );
    check(
        component_set(std.components.iter().map(|t| t.ideal())) == expected,
        "standard decomposition differs",
    )?;

    let i = ideal(
        "x^3*y^4, x^2*y^5, x^4*y^3*z^2, x^5*y^3*z, x^2*y^4*z^2",
        &xyz,
    );
    check(exact(&i) == Some(9), "gcd example: ω ≠ 9")?;
    let (h, j) = i.factor_out_gcd().map_err(|e| e.to_string())?;
    check(h == Monomial::new(vec![2, 3, 0]), "gcd example: h ≠ x^2y^3")?;
    let q = ideal("x^3, y^2, z^2, x*y", &xyz);
    check(noether_exponent(&q) == 4, "e((x^3,y^2,z^2,xy)) ≠ 4")?;
    let canon = canonical_primary_decomposition(&j).map_err(|e| e.to_string())?;
    let expected = component_set(
        ["x^2, y", "y, z", "x^3, y^2, z^2, x*y"]
            .iter()
            .map(|s| ideal(s, &xyz))
            .collect::<Vec<_>>()
            .iter(),
    );
    check(
        component_set(canon.components.iter().map(|c| c.ideal())) == expected,
        "canonical components differ",
    )?;

    let i = ideal("x^11*y^4, x^8*y^5, x^7*y^9, x^4*y^10, x^2*y^16", &xy);
    check(exact(&i) == Some(19), "staircase example: ω ≠ 19")?;

    let i = ideal("x^2, x*y, y^2, x*z^2", &xyz);
    let j = ideal("x^2, x*y, y^2, y*z^3", &xyz);
    let quad = [
        exact(&i),
        exact(&j),
        exact(&i.intersect(&j).unwrap()),
        exact(&i.sum(&j).unwrap()),
    ];
    check(
        quad == [Some(3), Some(4), Some(2), Some(4)],
        format!("I, J, I∩J, I+J gave {quad:?}"),
    )?;

    let i = ideal("x, y", &xyz);
    let j = ideal("y, z^2", &xyz);
    let triple = [exact(&i), exact(&j), exact(&i.intersect(&j).unwrap())];
    check(
        triple == [Some(1), Some(2), Some(3)],
        format!("(x,y), (y,z^2), meet gave {triple:?}"),
    )?;

    let i = ideal("x^3, x*y, y^2", &xy);
    let j = ideal("x^2, x*y, y^3", &xy);
    check(exact(&i.product(&j).unwrap()) == Some(5), "ω(IJ) ≠ 5")?;
    check(exact(&i.intersect(&j).unwrap()) == Some(3), "ω(I∩J) ≠ 3")?;
    let k = ideal("x^3, x*y^2, y^4", &xy);
    check(exact(&k) == Some(4), "ω((x^3,xy^2,y^4)) ≠ 4")?;
    check(
        is_omega_linear_2d(&k).unwrap().holds,
        "(x^3,xy^2,y^4) not linear",
    )?;
    let table = check_linearity_by_powers(&k, 3).unwrap();
    check(
        table.verdict == PowerVerdict::LinearUpTo { m_max: 3 },
        "(x^3,xy^2,y^4) power table not linear",
    )?;
    let x2y = Monomial::new(vec![2, 1]);
    check(
        integral_closure_2d(&k)
            .unwrap()
            .contains_monomial(&x2y)
            .unwrap(),
        "x^2y missing from closure",
    )?;
    check(!k.contains_monomial(&x2y).unwrap(), "x^2y in the ideal")?;
    Ok("all worked values reproduced".into())
}

fn oracle_equivalence() -> Outcome {
    let corpus = ideal_corpus(4, 5, 5000, DEFAULT_SEED);
    let mut exact_count = 0;
    for i in &corpus {
        let e = noether_exponent(i);
        let brute = brute_noether(i).map_err(|err| err.to_string())?;
        check(
            e == brute,
            format!("e{} = {e}, brute force {brute}", i.render()),
        )?;
        let r = omega_with(i, &OmegaOptions::default().without_certificates());
        if let OmegaValue::Exact(w) = r.value {
            exact_count += 1;
            let lo = e.max(i.max_degree());
            let canon = canonical_primary_decomposition(i).unwrap();
            let hi: u64 = canon.components.iter().map(|c| c.noether_exponent()).sum();
            check(
                lo <= w && w <= hi,
                format!("ω{} = {w} outside [{lo}, {hi}]", i.render()),
            )?;
        }
    }
    Ok(format!(
        "{} ideals, {exact_count} exact values inside the sandwich",
        corpus.len()
    ))
}

fn certificate_soundness() -> Outcome {
    let corpus = ideal_corpus(4, 5, 5000, DEFAULT_SEED);
    let tracked = [
        Rule::Primary,
        Rule::Antichain,
        Rule::Chain,
        Rule::UniqueTopRecursion,
        Rule::Dim1,
    ];
    let (mut emitted, mut length_checked) = (0, 0);
    for i in &corpus {
        let r = omega(i);
        if let Some(c) = &r.certificate {
            emitted += 1;
            check(
                verify_certificate(c),
                format!("certificate for {} fails", i.render()),
            )?;
        }
        let resolved = r.method.iter().any(|m| tracked.contains(m)) && !i.is_principal();
        if let (OmegaValue::Exact(w), true) = (r.value, resolved) {
            let c = r
                .certificate
                .as_ref()
                .ok_or_else(|| format!("no certificate for {}", i.render()))?;
            check(
                c.len() as u64 == w,
                format!(
                    "certificate length {} ≠ ω = {w} for {}",
                    c.len(),
                    i.render()
                ),
            )?;
            length_checked += 1;
        }
    }
    Ok(format!(
        "{emitted} certificates verified, {length_checked} lengths equal ω"
    ))
}

fn two_variable_totality() -> Outcome {
    let family = staircase_ideals(6, usize::MAX);
    let general = OmegaOptions::decomposition_path().without_certificates();
    let fast = OmegaOptions::default().without_certificates();
    let mut linear = 0;
    for i in &family {
        let f = two_variable_formula(i);
        let d = omega_with(i, &general).value;
        check(
            d == OmegaValue::Exact(f),
            format!("{}: formula {f}, decomposition {d}", i.render()),
        )?;
        let by_criterion = is_omega_linear_2d(i).unwrap().holds;
        let table: Vec<u64> = (1..=3)
            .map(|m| omega_with(&i.power(m).unwrap(), &fast).value.lo())
            .collect();
        let all_m = table.iter().zip(1..).all(|(&w, m)| w == m * f);
        let some_m = table[1] == 2 * f || table[2] == 3 * f;
        check(
            by_criterion == all_m && all_m == some_m,
            format!(
                "{}: criterion {by_criterion}, all m {all_m}, some m {some_m}",
                i.render()
            ),
        )?;
        linear += by_criterion as usize;
    }
    Ok(format!(
        "{} staircase ideals, {linear} linear, conditions agree",
        family.len()
    ))
}

fn linearity_suite() -> Outcome {
    let mut irreducibles = 0;
    for n in 1..=3 {
        for t in irreducible_family(n, 3) {
            irreducibles += 1;
            for m in 1..=3 {
                let power = t.ideal().power(m).unwrap();
                let predicted = omega_power_irreducible(&t, m).unwrap();
                check(
                    exact(&power) == Some(predicted),
                    format!("ω({}^{m}) ≠ {predicted}", t.ideal().render()),
                )?;
                check(
                    brute_power_decomposition_check(&t, m).unwrap(),
                    format!("{}^{m} ≠ ∩ Q_k", t.ideal().render()),
                )?;
            }
        }
    }
    let primaries = [
        primary_sample(2, 3, 150, DEFAULT_SEED),
        primary_sample(3, 3, 150, DEFAULT_SEED),
    ]
    .concat();
    for q in &primaries {
        let w = exact(q).ok_or("primary ideal without exact ω")?;
        for m in 2..=3 {
            let wm =
                exact(&q.power(m).unwrap()).ok_or("power of a primary ideal without exact ω")?;
            check(
                wm <= m as u64 * w,
                format!("ω({}^{m}) = {wm} > {m}·{w}", q.render()),
            )?;
        }
    }
    let mut closed = 0;
    for i in staircase_ideals(6, usize::MAX) {
        if is_integrally_closed_2d(&i).unwrap() {
            closed += 1;
            check(
                is_omega_linear_2d(&i).unwrap().holds,
                format!("closed {} is not linear", i.render()),
            )?;
        }
    }
    Ok(format!(
        "{irreducibles} irreducibles, {} primaries, {closed} closed ideals linear",
        primaries.len()
    ))
}

fn edge_ideal_suite() -> Outcome {
    let graphs = graph_corpus(7, 60, DEFAULT_SEED);
    for g in &graphs {
        let i = edge_ideal(g).unwrap();
        let covers = minimal_vertex_covers(g).unwrap();
        check(
            associated_primes(&i).unwrap() == covers,
            format!("Ass ≠ covers for {:?}", g.edges()),
        )?;
        for m in 1..=3 {
            let w = squarefree_power_witness(&i, &covers, m).unwrap();
            check(
                w.verify(),
                format!("power witness fails for {:?}, m = {m}", g.edges()),
            )?;
        }
    }
    for (name, g) in [
        ("C4", Graph::cycle(4).unwrap()),
        ("C5", Graph::cycle(5).unwrap()),
    ] {
        let rep = edge_power_linearity(&g, 3).unwrap();
        check(rep.linear(), format!("{name}: ω(I^m) ≠ m·r"))?;
    }
    Ok(format!(
        "{} connected graphs; C4 and C5 linear to m = 3",
        graphs.len()
    ))
}

fn honest_degradation() -> Outcome {
    let r = ring(&["x", "y", "z", "w"]);
    let i = ideal("x, y", &r)
        .intersect(&ideal("x^2, y^2, z", &r))
        .unwrap()
        .intersect(&ideal("x^2, y^2, w", &r))
        .unwrap();
    let res = omega(&i);
    match res.value {
        OmegaValue::Bounds { lo, hi } if lo <= hi && res.method == [Rule::FallbackBounds] => Ok(
            format!("{}: bounds {lo}..={hi}, no exact claim", i.render()),
        ),
        v => Err(format!("expected bounds, got {v} via {:?}", res.method)),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("worked examples", worked_examples),
        ("formula vs oracle", oracle_equivalence),
        ("certificate soundness", certificate_soundness),
        ("two-variable totality", two_variable_totality),
        ("linearity suite", linearity_suite),
        ("edge ideals", edge_ideal_suite),
        ("honest degradation", honest_degradation),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({detail}; {secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

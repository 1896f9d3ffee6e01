use anyhow::{bail, Result};
use symdyn::ca::{counting_shadow, endomorphism_image, verify_image, MyhillReport};
use symdyn::corpus::{run_corpus, CorpusConfig};
use symdyn::entropy::ln_big;
use symdyn::props::{gap_bound, MixingWitness};
use symdyn::tiling::positivity_check;
use symdyn::{
    block_count, check_entropy_preservation, entropy_blocks, entropy_spectral, fixtures, is_irreducible, is_mixing,
    is_strongly_irreducible, minimal_gap, pattern_check, search_moore_counterexample, si_certificate, tiling_density,
    tiling_z, Decision, EntropyEstimate, PointPair, Shift, ShiftKind, Word,
};

use crate::input::{load_ca, load_shift};
use crate::Outcome;

fn word(x: &Shift, w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        x.format_word(w)
    }
}

fn kind(x: &Shift) -> &'static str {
    match x.kind() {
        ShiftKind::Sft => "sft",
        ShiftKind::Sofic => "sofic",
    }
}

fn print_entropy(e: &EntropyEstimate) {
    let param = match e.method {
        symdyn::entropy::EntropyMethod::BlockCount => format!("n_max={}", e.param),
        symdyn::entropy::EntropyMethod::Spectral => format!("tol={:e}", e.param),
    };
    println!(
        "entropy ({}): {:.10} nats = {:.10} bits (error bound {:.3e})",
        e.method,
        e.value,
        e.log2_value(),
        e.error_bound
    );
    println!(
        "#: entropy method={}, {param}, value={:.12}, log2={:.12}, error_bound={:.3e}, empty={}",
        e.method,
        e.value,
        e.log2_value(),
        e.error_bound,
        e.empty
    );
}

fn print_table(x: &Shift, n_max: usize) {
    println!("n\t|X_n|\tlog|X_n|/n");
    for n in 1..=n_max {
        let c = block_count(x, n);
        let h = if c.bits() == 0 { 0.0 } else { ln_big(&c) / n as f64 };
        println!("{n}\t{c}\t{h:.10}");
    }
}

fn print_header(name: &str, x: &Shift) {
    println!("shift {name}: alphabet {}, {}", x.alphabet(), kind(x));
    println!(
        "#: shift name={name}, kind={}, alphabet_size={}, acceptor_states={}, presentation_vertices={}",
        kind(x),
        x.alphabet().len(),
        x.dfa().state_count(),
        x.deterministic().vertex_count()
    );
}

pub fn shift_analyze(arg: &str, gap_cap: Option<usize>, table: Option<usize>, tol: f64) -> Result<Outcome> {
    let (name, x) = load_shift(arg)?;
    print_header(&name, &x);

    let irr = is_irreducible(&x);
    println!("irreducible: {}", irr.verdict);
    let mut line = format!("#: irreducible verdict={}", irr.verdict);
    if let Some((u, v)) = &irr.witness {
        line.push_str(&format!(", u={}, v={}", word(&x, u), word(&x, v)));
        println!("  no word joins {} to {}", word(&x, u), word(&x, v));
    }
    println!("{line}");

    let mix = is_mixing(&x);
    println!("mixing: {} (cycle gcd {})", mix.mixing, mix.cycle_gcd);
    let mut line = format!("#: mixing verdict={}, cycle_gcd={}", mix.mixing, mix.cycle_gcd);
    if let Some(MixingWitness::Periodic(classes)) = &mix.witness {
        line.push_str(&format!(", period_classes={}", classes.len()));
    }
    println!("{line}");

    let si = is_strongly_irreducible(&x);
    println!("strongly irreducible: {}", si.verdict);
    println!("#: strongly_irreducible verdict={}, scope={}", si.verdict, si.scope);
    if let Some(cert) = si.witness {
        let mut cert = cert;
        if let Some(cap) = gap_cap {
            match minimal_gap(&x, cap) {
                Ok(n) => cert.n0_min = Some(n),
                Err(e) => println!("minimal gap: {e}"),
            }
        }
        println!("certificate:");
        for kv in cert.to_kv(&x).lines() {
            println!("  {kv}");
            println!("#: certificate {kv}");
        }
        if let Some(m) = cert.n0_min {
            if m > cert.n0_bound {
                println!("minimal gap {m} exceeds the certified bound {}", cert.n0_bound);
                return Ok(Outcome::Contradiction);
            }
        }
    } else if let Some(cap) = gap_cap {
        match minimal_gap(&x, cap) {
            Ok(n) => println!("#: certificate N0_min={n}"),
            Err(e) => {
                println!("minimal gap: {e}");
                println!("#: minimal_gap none_up_to={cap}");
            }
        }
    }
    if let Some(cap) = gap_cap {
        if let Ok(b) = gap_bound(&x) {
            if let Some((u, v, n)) = b.blocking {
                if b.n0 <= cap {
                    println!("  gap {n} fails for u={}, v={}", word(&x, &u), word(&x, &v));
                }
            }
        }
    }

    print_entropy(&entropy_spectral(&x, tol));
    print_entropy(&entropy_blocks(&x, 40));
    if let Some(n) = table {
        print_table(&x, n);
    }
    Ok(Outcome::Ok)
}

pub fn shift_entropy(arg: &str, n_max: usize, tol: f64, table: bool) -> Result<Outcome> {
    let (name, x) = load_shift(arg)?;
    print_header(&name, &x);
    print_entropy(&entropy_spectral(&x, tol));
    print_entropy(&entropy_blocks(&x, n_max));
    if table {
        print_table(&x, n_max);
    }
    Ok(Outcome::Ok)
}

fn print_pair(x: &Shift, what: &str, d: &Decision<PointPair>) {
    println!("{what}: {} ({} level)", d.verdict, d.scope);
    let mut line = format!("#: {what} verdict={}, scope={}", d.verdict, d.scope);
    if let Some(w) = &d.witness {
        let [a, b] = w.windows(1);
        println!("  witness points {}", w.format(x));
        line.push_str(&format!(", window1={}, window2={}", word(x, &a), word(x, &b)));
    }
    println!("{line}");
}

fn print_myhill(x: &Shift, r: &MyhillReport) {
    println!("#: strongly_irreducible verdict={}", r.strongly_irreducible);
    print_pair(x, "pre_injective", &r.pre_injective);
    print_pair(x, "injective", &r.injective);
    println!("surjective: {}", r.surjective.verdict);
    let mut line = format!("#: surjective verdict={}", r.surjective.verdict);
    if let Some(w) = &r.surjective.witness {
        println!("  garden of eden word {}", word(x, w));
        line.push_str(&format!(", garden_of_eden={}", word(x, w)));
    }
    println!("{line}");
    println!(
        "#: myhill consistent={}, applies={}",
        !r.contradiction(),
        r.strongly_irreducible && r.pre_injective.is_true()
    );
}

pub fn ca_analyze(shift_arg: &str, ca_arg: &str, tol: f64) -> Result<Outcome> {
    let (name, x) = load_shift(shift_arg)?;
    let t = load_ca(ca_arg, x.alphabet())?;
    print_header(&name, &x);
    let (l, r) = t.memory();
    println!("automaton: memory [{l}, {r}], {} table entries", t.table().len());
    println!("#: automaton memory_left={l}, memory_right={r}, width={}", t.width());
    let image = endomorphism_image(&t, &x)?;
    if let Some((n, w)) = verify_image(&t, &x, &image, 12) {
        bail!("image self-check failed at length {n} on {}", word(&image, &w));
    }
    let report = symdyn::check_myhill(&t, &x)?;
    print_myhill(&x, &report);
    let ent = check_entropy_preservation(&t, &x, tol)?;
    println!(
        "entropy: domain {:.10}, image {:.10} (equality required: {})",
        ent.domain.value, ent.image.value, ent.equality_required
    );
    println!(
        "#: entropy_preservation domain={:.12}, image={:.12}, monotone={}, equality_required={}, equal={}",
        ent.domain.value, ent.image.value, ent.monotone_ok, ent.equality_required, ent.equality_ok
    );
    let shadow = counting_shadow(&t, &x, &image, 12);
    println!("#: counting_shadow ok={}", shadow.is_none());
    if report.contradiction() || ent.contradiction() || shadow.is_some() {
        return Ok(Outcome::Contradiction);
    }
    Ok(Outcome::Ok)
}

pub fn moore(shift_arg: &str, memory_bound: usize, budget: usize, seed: u64) -> Result<Outcome> {
    let (name, x) = load_shift(shift_arg)?;
    print_header(&name, &x);
    let r = search_moore_counterexample(&x, memory_bound, budget, seed)?;
    println!(
        "#: moore_search found={}, examined={}, endomorphisms={}, exhaustive={}",
        r.found.is_some(),
        r.examined,
        r.endomorphisms,
        r.exhaustive
    );
    match &r.found {
        Some(t) => {
            println!("surjective endomorphism that is not pre-injective:");
            print!("{}", t.to_text());
            let report = symdyn::check_myhill(t, &x)?;
            print_myhill(&x, &report);
            // on a full shift surjective automata are pre-injective
            if x.dfa().state_count() == 1 && x.blocks(1).len() == x.alphabet().len() {
                return Ok(Outcome::Contradiction);
            }
        }
        None if r.exhaustive => println!("no such automaton with memory width <= {memory_bound}"),
        None => println!("none found within the budget (absence proves nothing)"),
    }
    Ok(Outcome::Ok)
}

pub fn corpus(args: &[String], count: usize, seed: u64, memory: (i64, i64), tol: f64, quiet: bool) -> Result<Outcome> {
    let names: Vec<String> = if args.is_empty() {
        vec!["full2".into(), "golden".into(), "even".into()]
    } else {
        args.to_vec()
    };
    let shifts = names.iter().map(|n| load_shift(n)).collect::<Result<Vec<_>>>()?;
    let cfg = CorpusConfig {
        count,
        seed,
        memory,
        tol,
    };
    println!(
        "#: corpus count={count}, seed={seed}, memory={}..{}, shifts={}",
        memory.0,
        memory.1,
        names.join(",")
    );
    let report = run_corpus(&shifts, &cfg)?;
    if !quiet {
        for inst in &report.instances {
            println!("{}", inst.line());
            for v in &inst.violations {
                println!("#: violation shift={}, seed={}, check={v}", inst.shift, inst.seed);
            }
        }
    }
    for line in report.summary_lines() {
        println!("{line}");
    }
    println!("#: contradictions total={}", report.contradictions());
    Ok(if report.contradictions() > 0 {
        Outcome::Contradiction
    } else {
        Outcome::Ok
    })
}

/// Runs the bundled worked examples and compares with their known outcomes.
pub fn worked_examples(tol: f64) -> Result<Outcome> {
    let mut failures = 0;
    let mut expect = |what: &str, ok: bool| {
        println!("#: example {what} ok={ok}");
        if !ok {
            failures += 1;
        }
    };

    let full = fixtures::full2();
    let xor = symdyn::check_myhill(&fixtures::xor_ca(), &full)?;
    expect(
        "xor-full2 preinj=true inj=false surj=true",
        xor.pre_injective.is_true() && !xor.injective.is_true() && xor.surjective.is_true(),
    );

    let tp = fixtures::twopoint();
    let col = symdyn::check_myhill(&fixtures::collapse_ca(), &tp)?;
    let goe = col.surjective.witness.as_ref().map(|w| tp.format_word(w));
    expect(
        "collapse-twopoint preinj=true surj=false goe=1 si=false",
        col.pre_injective.is_true()
            && !col.surjective.is_true()
            && goe.as_deref() == Some("1")
            && !col.strongly_irreducible,
    );

    let even = fixtures::even();
    let cert = si_certificate(&even)?;
    expect(
        "even si=true l0=1 n0=0 D=1 N0_bound=3",
        (cert.sync.len(), cert.n0, cert.diameter, cert.n0_bound) == (1, 0, 1, 3),
    );
    expect("even minimal_gap=2", minimal_gap(&even, cert.n0_bound)? == 2);
    let moore = search_moore_counterexample(&even, 3, 10_000, 0)?;
    println!(
        "#: example even-moore-search found={}, examined={}, endomorphisms={}, exhaustive={}",
        moore.found.is_some(),
        moore.examined,
        moore.endomorphisms,
        moore.exhaustive
    );
    if let Some(t) = &moore.found {
        let r = symdyn::check_myhill(t, &even)?;
        expect(
            "even-moore-witness surj=true preinj=false",
            r.surjective.is_true() && !r.pre_injective.is_true(),
        );
    }

    expect("period2 mixing=false si=false", {
        let p = fixtures::period2();
        !is_mixing(&p).mixing && !is_strongly_irreducible(&p).is_true()
    });

    for k in 2..=5 {
        let x = fixtures::mixnot(k);
        let mix = is_mixing(&x).mixing;
        let gap = gap_bound(&x).map(|b| b.n0).ok();
        println!(
            "#: example mixnot_{k} mixing={mix}, minimal_gap={}",
            gap.map_or("none".to_string(), |g| g.to_string())
        );
    }

    for x in [fixtures::golden(), fixtures::even()] {
        let rows = positivity_check(&x, 24)?;
        expect("positivity-lower-bound", rows.iter().all(|r| r.holds));
    }

    let report = run_corpus(
        &[("full2".to_string(), full.clone())],
        &CorpusConfig {
            count: 50,
            seed: 0,
            memory: (0, 2),
            tol,
        },
    )?;
    let images_si = report.instances.iter().all(|i| i.image_strongly_irreducible);
    expect(
        "full2-images-strongly-irreducible count=50",
        images_si && report.instances.len() == 50,
    );
    expect("full2-corpus contradictions=0", report.contradictions() == 0);

    let g = fixtures::golden();
    let lem = pattern_check(&g, 1, 9, 18, None)?;
    expect("pattern-count golden d=1 k=9 n=18", lem.holds);

    println!("#: examples failures={failures}");
    Ok(if failures > 0 {
        Outcome::Contradiction
    } else {
        Outcome::Ok
    })
}

pub fn tiling_check(k: usize, n: Option<usize>) -> Result<Outcome> {
    let t = tiling_z(k)?;
    println!(
        "tiling: E = [0, {k}), E' = [{}, {}], T = {k}Z, verified on [{}, {})",
        -(k as i64) + 1,
        k as i64 - 1,
        -10 * k as i64,
        10 * k as i64
    );
    println!("#: tiling k={k}, verified=true");
    let windows: Vec<usize> = match n {
        Some(n) => vec![n],
        None => vec![k, 2 * k, 10 * k, 100 * k],
    };
    let mut ok = true;
    for n in windows {
        let d = tiling_density(&t, n)?;
        let required = n >= 2 * k;
        println!(
            "#: tiling_density k={k}, n={n}, count={}, ratio={:.10}, alpha={:.10}, alpha_ok={}",
            d.count, d.ratio, d.alpha, d.alpha_ok
        );
        ok &= !required || d.alpha_ok;
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Contradiction })
}

pub fn pattern(arg: &str, d: usize, k: Option<usize>, n: usize, pattern: Option<&str>) -> Result<Outcome> {
    let (name, x) = load_shift(arg)?;
    let pattern = pattern.map(|p| x.parse_word(p)).transpose()?;
    let k = match k {
        Some(k) => k,
        None => {
            d + 2 * si_certificate(&x)
                .map_err(|_| symdyn::Error::CertificateMissing)?
                .n0_bound
        }
    };
    let r = pattern_check(&x, d, k, n, pattern.as_ref())?;
    println!(
        "shift {name}: forbidding {} on {} tiles of length {k} in [0, {n})",
        word(&x, &r.pattern),
        r.tiles
    );
    println!(
        "  |Q| = {}, |L_n| = {}, rho = {}, bound = {:.6}",
        r.q_count, r.x_count, r.rho, r.bound
    );
    println!(
        "#: pattern d={d}, k={k}, n={n}, pattern={}, tiles={}, rho={}, q={}, x={}, bound={:.6}, holds={}, strict={}, entropy_gap={:.10}",
        word(&x, &r.pattern),
        r.tiles,
        r.rho,
        r.q_count,
        r.x_count,
        r.bound,
        r.holds,
        r.strict,
        r.entropy_gap
    );
    Ok(if r.holds { Outcome::Ok } else { Outcome::Contradiction })
}

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails when a criterion fails, except for those listed in
//! `KNOWN_RED`, which cannot be met as stated (see the README).

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use symdyn::corpus::{run_corpus, CorpusConfig, CorpusReport};
use symdyn::props::gap_threshold;
use symdyn::{
    block_count, check_myhill, entropy_blocks, entropy_compare, entropy_spectral, equal_shifts, fixtures, higher_block,
    image_presentation, is_mixing, is_pre_injective, is_strongly_irreducible, is_surjective, minimal_gap,
    pattern_check, random_ca, si_certificate, tiling_density, tiling_z, Alphabet, CellularAutomaton, Shift, Word,
};

use common::{naive_threshold, sft_minimal_gap, shortest_orphan, Lang, LN_2, LN_PHI};

/// Criteria that are unattainable as stated; they are reported but do not
/// fail the run.
const KNOWN_RED: &[usize] = &[4];

type Outcome = Result<String, String>;
type Criterion = (usize, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn fmt(x: &Shift, w: &Word) -> String {
    x.format_word(w)
}

fn criterion_1() -> Outcome {
    let x = fixtures::full2();
    let t = fixtures::xor_ca();
    let r = check_myhill(&t, &x).map_err(err)?;
    ensure(r.pre_injective.is_true(), || "xor reported not pre-injective".into())?;
    ensure(!r.injective.is_true(), || "xor reported injective".into())?;
    ensure(r.surjective.is_true(), || "xor reported not surjective".into())?;
    let image = image_presentation(&t, &x).map_err(err)?;
    ensure(equal_shifts(&image, &x).map_err(err)?.is_true(), || {
        "image differs from the full shift".into()
    })?;
    // the witness points have equal images
    let w = r.injective.witness.ok_or("no injectivity witness")?;
    let [a, b] = w.windows(3);
    ensure(
        a != b && t.apply_to_word(&a).map_err(err)? == t.apply_to_word(&b).map_err(err)?,
        || "injectivity witness does not re-verify".into(),
    )?;
    Ok(format!(
        "preinj=true inj=false surj=true, image = full shift, witness {}",
        w.format(&x)
    ))
}

fn criterion_2() -> Outcome {
    let x = fixtures::twopoint();
    let r = check_myhill(&fixtures::collapse_ca(), &x).map_err(err)?;
    ensure(r.pre_injective.is_true(), || {
        "collapse reported not pre-injective".into()
    })?;
    ensure(!r.surjective.is_true(), || "collapse reported surjective".into())?;
    let goe = r.surjective.witness.ok_or("no Garden-of-Eden word")?;
    ensure(fmt(&x, &goe) == "1", || {
        format!("Garden-of-Eden word {}", fmt(&x, &goe))
    })?;
    ensure(!r.strongly_irreducible, || {
        "two-point shift reported strongly irreducible".into()
    })?;
    Ok("preinj=true surj=false goe=1 si=false".into())
}

/// Shortest word after which the follower sets of all left contexts agree,
/// judged on contexts and followers of length at most 4.
fn oracle_sync_length(lang: &Lang) -> usize {
    let short: Vec<Vec<u16>> = (0..=4).flat_map(|n| lang.words(n)).collect();
    (0..=4)
        .find(|&l| {
            lang.words(l).into_iter().any(|w| {
                let followers: Vec<Vec<bool>> = short
                    .iter()
                    .filter(|p| lang.contains(&[p.as_slice(), &w].concat()))
                    .map(|p| {
                        short
                            .iter()
                            .map(|f| lang.contains(&[p.as_slice(), &w, f].concat()))
                            .collect()
                    })
                    .collect();
                followers.windows(2).all(|f| f[0] == f[1])
            })
        })
        .expect("synchronizing word of length <= 4")
}

/// Least uniform gap over pairs of words of length at most 5.
fn naive_minimal_gap(lang: &Lang) -> Option<usize> {
    let words: Vec<Vec<u16>> = (1..=5).flat_map(|n| lang.words(n)).collect();
    let mut best = 0;
    for u in &words {
        for v in &words {
            best = best.max(naive_threshold(lang, u, v, 12)?);
        }
    }
    Some(best)
}

fn criterion_3() -> Outcome {
    let mut details = Vec::new();
    for name in ["golden", "even"] {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        ensure(is_mixing(&x).mixing, || format!("{name} reported not mixing"))?;
        ensure(is_strongly_irreducible(&x).is_true(), || {
            format!("{name} reported not SI")
        })?;
    }
    let even = fixtures::even();
    let cert = si_certificate(&even).map_err(err)?;
    let lang = Lang::of("even");
    let l0 = oracle_sync_length(&lang);
    let u0 = cert.sync.word.letters().to_vec();
    let n0 = naive_threshold(&lang, &u0, &u0, 12).ok_or("no gap for the sync word")?;
    // the Fischer cover of the even shift is the 2-cycle a -0-> b -0-> a
    // with a loop 1 at a, so its diameter is 1
    let d = 1;
    let expected = (l0, n0, d, l0 + n0 + 2 * d);
    let got = (cert.sync.len(), cert.n0, cert.diameter, cert.n0_bound);
    ensure(got == expected && expected == (1, 0, 1, 3), || {
        format!("even certificate (l0, n0, D, N0_bound) = {got:?}, oracle {expected:?}")
    })?;

    let p = fixtures::period2();
    ensure(!is_mixing(&p).mixing && !is_strongly_irreducible(&p).is_true(), || {
        "period-2 shift reported mixing or SI".into()
    })?;

    for (name, want) in [("golden", 1), ("even", 2), ("full2", 0)] {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        let lang = Lang::of(name);
        let oracle = match lang {
            Lang::Even => naive_minimal_gap(&lang),
            _ => sft_minimal_gap(&lang),
        };
        let got = minimal_gap(&x, 64).map_err(err)?;
        let bound = si_certificate(&x).map_err(err)?.n0_bound;
        ensure(oracle == Some(want) && got == want && got <= bound, || {
            format!("{name}: minimal gap {got}, oracle {oracle:?}, expected {want}, bound {bound}")
        })?;
        details.push(format!("{name} gap={got}<=N0_bound={bound}"));
    }
    Ok(format!(
        "even (l0,n0,D,N0_bound)={got:?}; period2 mixing=false si=false; {}",
        details.join(", ")
    ))
}

fn criterion_4() -> Outcome {
    let mut details = Vec::new();
    let mut failures = Vec::new();
    for (name, exact) in [("full2", LN_2), ("golden", LN_PHI), ("even", LN_PHI)] {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        let s = entropy_spectral(&x, 1e-9);
        let b = entropy_blocks(&x, 40);
        let diff = (s.value - b.value).abs();
        if (s.value - exact).abs() > 1e-9 {
            failures.push(format!("{name}: spectral {:.12} vs Perron {:.12}", s.value, exact));
        }
        if diff > 5e-3 {
            failures.push(format!("{name}: |spectral - block(40)| = {diff:.3e} > 5e-3"));
        }
        details.push(format!("{name} diff={diff:.2e}"));
    }
    if failures.is_empty() {
        Ok(details.join(", "))
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_5() -> Outcome {
    let binary = Alphabet::binary();
    let zero = Shift::from_forbidden(binary.clone(), &["1"]).map_err(err)?;
    let golden = fixtures::golden();
    let full = fixtures::full2();
    let mut details = Vec::new();
    for (outer, inner, label, want) in [
        (&golden, &zero, "golden > {0^inf}", LN_PHI),
        (&full, &golden, "full2 > golden", LN_2 - LN_PHI),
    ] {
        let d = entropy_compare(outer, inner, 1e-9).map_err(err)?;
        let gap = d.witness.as_ref().ok_or("no estimate")?;
        ensure(d.is_true(), || format!("{label}: strict gap not certified"))?;
        ensure((gap.gap - want).abs() <= 1e-9, || {
            format!("{label}: gap {:.12} vs {want:.12}", gap.gap)
        })?;
        details.push(format!("{label} gap={:.10}", gap.gap));
    }
    Ok(details.join(", "))
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    for name in ["golden", "even"] {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        let lang = Lang::of(name);
        let stride = 1 + 2 * si_certificate(&x).map_err(err)?.n0_bound;
        let rows = symdyn::tiling::positivity_check(&x, 24).map_err(err)?;
        ensure(rows.len() == 24, || "missing rows".into())?;
        for n in 1..=24 {
            let count = block_count(&x, n);
            if n <= 14 {
                ensure(count == BigUint::from(lang.count(n)), || {
                    format!("{name}: |L_{n}| disagrees with enumeration")
                })?;
            }
            let tiles = n / stride;
            ensure(count >= BigUint::from(1u8) << tiles, || {
                format!("{name}: |L_{n}| < 2^{tiles}")
            })?;
            let row = &rows[n - 1];
            ensure(row.holds && row.tiles == tiles, || {
                format!("{name}: positivity row {n} fails")
            })?;
        }
        details.push(format!("{name} stride={stride}"));
    }
    Ok(format!("n<=24, {}", details.join(", ")))
}

fn criterion_7() -> Outcome {
    for k in [1usize, 2, 3, 5] {
        let t = tiling_z(k).map_err(err)?;
        let (lo, hi) = (-10 * k as i64, 10 * k as i64);
        // translates by kZ of [0, k) and of [-k+1, k-1]
        for p in lo..hi {
            let tiles = (lo - k as i64..hi + k as i64)
                .filter(|g| g.rem_euclid(k as i64) == 0 && *g <= p && p < g + k as i64)
                .count();
            ensure(tiles == 1, || format!("k={k}: {p} lies in {tiles} tiles"))?;
            let covered = (lo - 2 * k as i64..hi + 2 * k as i64)
                .any(|g| g.rem_euclid(k as i64) == 0 && g - (k as i64) < p && p < g + k as i64);
            ensure(covered, || format!("k={k}: {p} not covered"))?;
        }
        ensure(t.verify_on(&symdyn::Interval::new(lo, hi)), || {
            format!("k={k}: verify_on failed")
        })?;
        for n in 2 * k..=40 * k {
            let d = tiling_density(&t, n).map_err(err)?;
            ensure(d.count == n / k, || {
                format!("k={k}, n={n}: {} tiles, expected {}", d.count, n / k)
            })?;
            ensure(d.ratio >= 1.0 / (2 * k) as f64 && d.alpha_ok, || {
                format!("k={k}, n={n}: density {}", d.ratio)
            })?;
        }
    }
    Ok("k in {1,2,3,5}, windows [-10k,10k), densities n in [2k,40k]".into())
}

fn criterion_8() -> Outcome {
    let x = fixtures::golden();
    let lang = Lang::of("golden");
    let margin = si_certificate(&x).map_err(err)?.n0_bound;
    let k = 1 + 2 * margin;
    let mut checked = Vec::new();
    for n in k..=18 {
        let r = pattern_check(&x, 1, k, n, None).map_err(err)?;
        let p = r.pattern.letters()[0];
        let words = lang.words(n);
        let q = words
            .iter()
            .filter(|w| (0..n / k).all(|j| w[j * k + margin] != p))
            .count();
        ensure(r.x_count == BigUint::from(words.len()), || {
            format!("n={n}: |L_n| disagrees")
        })?;
        ensure(r.q_count == BigUint::from(q), || {
            format!("n={n}: |Q| = {} vs enumeration {q}", r.q_count)
        })?;
        ensure(r.holds, || format!("n={n}: inequality fails"))?;
        checked.push(n);
    }
    Ok(format!(
        "golden d=1 k={k} n={}..={}",
        checked[0],
        checked[checked.len() - 1]
    ))
}

fn corpus() -> &'static CorpusReport {
    use std::sync::OnceLock;
    static REPORT: OnceLock<CorpusReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let shifts: Vec<(String, Shift)> = ["full2", "golden", "even"]
            .iter()
            .map(|n| (n.to_string(), fixtures::shift_by_name(n).expect("bundled")))
            .collect();
        let cfg = CorpusConfig {
            count: 200,
            seed: 0,
            memory: (0, 2),
            tol: 1e-9,
        };
        run_corpus(&shifts, &cfg).expect("corpus runs")
    })
}

fn criterion_9() -> Outcome {
    let r = corpus();
    let bad = r
        .instances
        .iter()
        .filter(|i| i.strongly_irreducible && i.pre_injective && !i.surjective)
        .count();
    ensure(bad == 0, || format!("{bad} pre-injective, non-surjective instances"))?;
    ensure(r.contradictions() == 0, || {
        format!("{} contradictions", r.contradictions())
    })?;
    let counts: Vec<String> = r
        .per_shift
        .iter()
        .map(|(n, s)| format!("{n} {}/{} endomorphisms", s.endomorphisms, s.sampled))
        .collect();
    Ok(format!("{}; 0 contradictions", counts.join(", ")))
}

fn criterion_10() -> Outcome {
    let cfg = CorpusConfig {
        count: 50,
        seed: 1000,
        memory: (0, 2),
        tol: 1e-9,
    };
    let r = run_corpus(&[("full2".into(), fixtures::full2())], &cfg).map_err(err)?;
    ensure(r.instances.len() == 50, || {
        format!("{} endomorphisms", r.instances.len())
    })?;
    let bad = r.instances.iter().filter(|i| !i.image_strongly_irreducible).count();
    ensure(bad == 0, || format!("{bad} images not SI"))?;
    Ok("50/50 images SI".into())
}

fn criterion_11() -> Outcome {
    let mut n = 0;
    let mut worst: f64 = 0.0;
    for i in &corpus().instances {
        if i.strongly_irreducible && i.pre_injective {
            n += 1;
            let d = (i.entropy_x - i.entropy_image).abs();
            worst = worst.max(d);
            ensure(d <= 2e-9, || {
                format!("{} seed {}: entropies differ by {d:.3e}", i.shift, i.seed)
            })?;
        }
    }
    ensure(n > 0, || "no pre-injective instances".into())?;
    Ok(format!("{n} pre-injective instances, max difference {worst:.2e}"))
}

fn criterion_12() -> Outcome {
    for name in fixtures::SHIFT_NAMES {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        let si = is_strongly_irreducible(&x).verdict;
        for k in 1..=3 {
            let y = higher_block(&x, k).map_err(err)?.shift;
            let v = is_strongly_irreducible(&y).verdict;
            ensure(v == si, || {
                format!("{name}: SI {si} but {v} for the {k}-block recoding")
            })?;
        }
    }
    Ok(format!("{} shifts, k in 1..=3", fixtures::SHIFT_NAMES.len()))
}

/// Endomorphisms checked against the brute-force oracles: the bundled
/// automata plus seeded random ones of width at most 3.
fn oracle_automata() -> Vec<(&'static str, Shift, CellularAutomaton)> {
    let mut out = Vec::new();
    for name in fixtures::SHIFT_NAMES {
        let x = fixtures::shift_by_name(name).expect("bundled");
        for ca in fixtures::CA_NAMES {
            let t = symdyn::parse::parse_ca(fixtures::ca_text(ca).expect("bundled"), x.alphabet()).expect("parses");
            if symdyn::ca::endomorphism_image(&t, &x).is_ok() {
                out.push((name, x.clone(), t));
            }
        }
    }
    for name in ["full2", "golden", "even"] {
        let x = fixtures::shift_by_name(name).expect("bundled");
        for seed in 0..60 {
            let memory = (0, (seed % 3) as i64);
            let t = random_ca(x.alphabet(), x.alphabet(), memory, seed).expect("small table");
            if symdyn::ca::endomorphism_image(&t, &x).is_ok() {
                out.push((name, x.clone(), t));
            }
        }
    }
    out
}

fn criterion_13() -> Outcome {
    let cases = oracle_automata();
    let mut pairs = 0;
    for (name, x, t) in &cases {
        let lang = Lang::of(name);
        let d = is_surjective(t, x, x).map_err(err)?;
        let orphan = shortest_orphan(t, &lang, 8);
        match (&d.witness, &orphan) {
            (None, None) => ensure(d.is_true(), || format!("{name}: verdict without witness"))?,
            (Some(w), Some(o)) => {
                let w = w.letters();
                ensure(
                    w.len() == o.len() && lang.contains(w) && !common::has_preimage(t, &lang, w),
                    || format!("{name}: Garden-of-Eden word {w:?}, oracle {o:?}"),
                )?
            }
            (Some(w), None) => ensure(w.len() > 8, || format!("{name}: witness {w:?} has a preimage"))?,
            (None, Some(o)) => return Err(format!("{name}: surjective but {o:?} has no preimage")),
        }
        let p = is_pre_injective(t, x).map_err(err)?;
        if let Some(w) = &p.witness {
            ensure(w.is_asymptotic(), || format!("{name}: witness not asymptotic"))?;
            for reps in 1..=3 {
                let [a, b] = w.windows(reps);
                let ok = a != b
                    && a.len() == b.len()
                    && lang.contains(a.letters())
                    && lang.contains(b.letters())
                    && t.apply_to_word(&a).map_err(err)? == t.apply_to_word(&b).map_err(err)?;
                ensure(ok, || format!("{name}: witness {} does not re-verify", w.format(x)))?;
            }
        }
    }

    for name in fixtures::SHIFT_NAMES {
        let x = fixtures::shift_by_name(name).map_err(err)?;
        let lang = Lang::of(name);
        let words: Vec<Vec<u16>> = (1..=5).flat_map(|n| lang.words(n)).collect();
        let mut naive_max = Some(0);
        for u in &words {
            for v in &words {
                let oracle = naive_threshold(&lang, u, v, 12);
                let got = gap_threshold(&x, &Word::new(u.clone()), &Word::new(v.clone())).map_err(err)?;
                ensure(got == oracle, || {
                    format!("{name}: gap for ({u:?}, {v:?}) {got:?}, oracle {oracle:?}")
                })?;
                naive_max = naive_max.zip(oracle).map(|(a, b)| a.max(b));
                pairs += 1;
            }
        }
        let got = minimal_gap(&x, 64).ok();
        // words of length 5 see every context when forbidden words have
        // length at most 6; longer contexts are covered by criterion 14
        let short_memory = matches!(&lang, Lang::Even) || lang.memory() <= 6;
        if short_memory {
            ensure(got == naive_max, || {
                format!("{name}: minimal gap {got:?}, naive {naive_max:?}")
            })?;
        } else {
            ensure(got.is_some() && got >= naive_max, || {
                format!("{name}: minimal gap {got:?} below naive {naive_max:?}")
            })?;
        }
    }
    Ok(format!(
        "{} endomorphisms (targets <= 8), {pairs} word pairs (lengths <= 5)",
        cases.len()
    ))
}

fn criterion_14() -> Outcome {
    let mut values = Vec::new();
    for k in 2..=5 {
        let name = format!("mixnot_{k}");
        let lang = Lang::of(&name);
        let oracle = sft_minimal_gap(&lang);
        let got = minimal_gap(&fixtures::mixnot(k), 64).ok();
        ensure(got == oracle && got.is_some(), || {
            format!("{name}: minimal gap {got:?}, oracle {oracle:?}")
        })?;
        values.push(format!("K={k}: {}", got.unwrap()));
    }
    Ok(values.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        (1, "XOR on the full shift", Some(Duration::from_secs(1)), criterion_1),
        (
            2,
            "collapse on the two-point shift",
            Some(Duration::from_secs(1)),
            criterion_2,
        ),
        (3, "mixing, SI certificates and minimal gaps", None, criterion_3),
        (
            4,
            "spectral vs block-count entropy",
            Some(Duration::from_secs(5)),
            criterion_4,
        ),
        (5, "certified strict entropy gaps", None, criterion_5),
        (6, "positivity lower bound", None, criterion_6),
        (7, "tilings of Z", None, criterion_7),
        (8, "tile-pattern counting inequality", None, criterion_8),
        (
            9,
            "random endomorphism corpus",
            Some(Duration::from_secs(300)),
            criterion_9,
        ),
        (10, "images of full-shift automata are SI", None, criterion_10),
        (11, "entropy preserved by pre-injective maps", None, criterion_11),
        (12, "SI invariant under higher-block recoding", None, criterion_12),
        (13, "oracle equivalence", None, criterion_13),
        (14, "minimal gaps of the mixnot truncations", None, criterion_14),
    ];
    let mut unexpected = 0;
    for (no, title, limit, f) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("criterion {no:>2}: PASS {title}: {detail} [{elapsed:.2?}]"),
            Err(detail) => {
                let known = KNOWN_RED.contains(&no);
                let tag = if known { " (known, see README)" } else { "" };
                println!("criterion {no:>2}: FAIL{tag} {title}: {detail} [{elapsed:.2?}]");
                unexpected += usize::from(!known);
            }
        }
    }
    if unexpected > 0 {
        println!("acceptance: {unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        println!("acceptance: no unexpected failures");
        ExitCode::SUCCESS
    }
}

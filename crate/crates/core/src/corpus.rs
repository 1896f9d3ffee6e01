//! Seeded random corpora of endomorphisms, checked against the implications
//! that must hold between their properties.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::ca::{counting_shadow, entropy_report, myhill_with_image, random_ca};
use crate::error::Result;
use crate::props::is_strongly_irreducible;
use crate::shift::Shift;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusConfig {
    pub count: usize,
    pub seed: u64,
    /// Memory interval `[l, r]` of every generated automaton.
    pub memory: (i64, i64),
    pub tol: f64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            count: 200,
            seed: 0,
            memory: (0, 2),
            tol: 1e-9,
        }
    }
}

/// An implication that failed on some instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// Strongly irreducible domain, pre-injective, not surjective.
    Myhill,
    /// Strongly irreducible target of equal entropy, pre-injective, not surjective.
    PreInjectiveNotSurjective,
    /// Strongly irreducible target of equal entropy, injective, not surjective.
    InjectiveNotSurjective,
    /// Injective endomorphism of a strongly irreducible shift, not surjective.
    Surjunctivity,
    /// Injective but not pre-injective.
    InjectiveNotPreInjective,
    /// Strongly irreducible domain with an image that is not.
    ImageNotStronglyIrreducible,
    /// Strongly irreducible domain, pre-injective, image entropy differs.
    EntropyNotPreserved,
    /// Image entropy exceeds the domain's.
    EntropyIncreased,
    /// More image words of length `n` than domain words of length `n + width - 1`.
    CountingShadow,
    /// Strongly irreducible image with more than one point and zero entropy.
    ZeroEntropyImage,
}

impl Violation {
    pub const ALL: [Violation; 10] = [
        Violation::Myhill,
        Violation::PreInjectiveNotSurjective,
        Violation::InjectiveNotSurjective,
        Violation::Surjunctivity,
        Violation::InjectiveNotPreInjective,
        Violation::ImageNotStronglyIrreducible,
        Violation::EntropyNotPreserved,
        Violation::EntropyIncreased,
        Violation::CountingShadow,
        Violation::ZeroEntropyImage,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Violation::Myhill => "myhill",
            Violation::PreInjectiveNotSurjective => "preinjective-implies-surjective",
            Violation::InjectiveNotSurjective => "injective-implies-surjective",
            Violation::Surjunctivity => "surjunctivity",
            Violation::InjectiveNotPreInjective => "injective-implies-preinjective",
            Violation::ImageNotStronglyIrreducible => "image-strongly-irreducible",
            Violation::EntropyNotPreserved => "entropy-preserved",
            Violation::EntropyIncreased => "entropy-monotone",
            Violation::CountingShadow => "counting-shadow",
            Violation::ZeroEntropyImage => "image-positive-entropy",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One generated automaton that maps its shift into itself.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub shift: String,
    pub seed: u64,
    pub pre_injective: bool,
    pub injective: bool,
    pub surjective: bool,
    pub strongly_irreducible: bool,
    pub image_strongly_irreducible: bool,
    pub entropy_x: f64,
    pub entropy_image: f64,
    pub violations: Vec<Violation>,
}

impl Instance {
    /// Machine-readable line.
    pub fn line(&self) -> String {
        format!(
            "#: instance shift={}, seed={}, preinj={}, inj={}, surj={}, si={}, entropy_x={:.10}, entropy_image={:.10}",
            self.shift,
            self.seed,
            self.pre_injective,
            self.injective,
            self.surjective,
            self.strongly_irreducible,
            self.entropy_x,
            self.entropy_image
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShiftSummary {
    pub sampled: usize,
    pub endomorphisms: usize,
    pub pre_injective: usize,
    pub injective: usize,
    pub surjective: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusReport {
    /// Endomorphisms only, in (shift, seed) order.
    pub instances: Vec<Instance>,
    pub per_shift: BTreeMap<String, ShiftSummary>,
    pub violations: BTreeMap<Violation, usize>,
}

impl CorpusReport {
    pub fn contradictions(&self) -> usize {
        self.violations.values().sum()
    }

    /// Summary lines, one per shift and one per checked implication.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, s) in &self.per_shift {
            out.push(format!(
                "#: summary shift={name}, sampled={}, endomorphisms={}, preinj={}, inj={}, surj={}",
                s.sampled, s.endomorphisms, s.pre_injective, s.injective, s.surjective
            ));
        }
        for v in Violation::ALL {
            out.push(format!(
                "#: contradictions {}={}",
                v,
                self.violations.get(&v).copied().unwrap_or(0)
            ));
        }
        out
    }
}

fn run_instance(name: &str, x: &Shift, si: bool, cfg: &CorpusConfig, seed: u64) -> Result<Option<Instance>> {
    let a = x.alphabet();
    let t = random_ca(a, a, cfg.memory, seed)?;
    let image = match crate::ca::endomorphism_image(&t, x) {
        Ok(img) => img,
        Err(crate::Error::NotEndomorphism(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let report = myhill_with_image(&t, x, &image, si);
    let (pre, inj, surj) = (
        report.pre_injective.is_true(),
        report.injective.is_true(),
        report.surjective.is_true(),
    );
    let image_si = is_strongly_irreducible(&image).is_true();
    let entropy = entropy_report(x, &image, si && pre, cfg.tol);

    let mut violations = Vec::new();
    let mut flag = |cond: bool, v: Violation| {
        if cond {
            violations.push(v);
        }
    };
    flag(report.myhill_violated(), Violation::Myhill);
    // endomorphisms: the target is the domain, so it is strongly irreducible
    // with equal entropy whenever the domain is strongly irreducible
    flag(si && pre && !surj, Violation::PreInjectiveNotSurjective);
    flag(si && inj && !surj, Violation::InjectiveNotSurjective);
    flag(report.surjunctivity_violated(), Violation::Surjunctivity);
    flag(report.injectivity_inconsistent(), Violation::InjectiveNotPreInjective);
    flag(si && !image_si, Violation::ImageNotStronglyIrreducible);
    flag(
        entropy.equality_required && !entropy.equality_ok,
        Violation::EntropyNotPreserved,
    );
    flag(!entropy.monotone_ok, Violation::EntropyIncreased);
    flag(counting_shadow(&t, x, &image, 12).is_some(), Violation::CountingShadow);
    // a strongly irreducible shift using two letters has more than one point
    let several_points = image.blocks(1).len() > 1;
    flag(
        image_si && several_points && entropy.image.value < 1e-3,
        Violation::ZeroEntropyImage,
    );

    Ok(Some(Instance {
        shift: name.to_string(),
        seed,
        pre_injective: pre,
        injective: inj,
        surjective: surj,
        strongly_irreducible: si,
        image_strongly_irreducible: image_si,
        entropy_x: entropy.domain.value,
        entropy_image: entropy.image.value,
        violations,
    }))
}

/// Generates `cfg.count` automata per shift with seeds `cfg.seed + i`, keeps
/// the endomorphisms and checks every implication on each. Results do not
/// depend on the number of worker threads.
pub fn run_corpus(shifts: &[(String, Shift)], cfg: &CorpusConfig) -> Result<CorpusReport> {
    let si: Vec<bool> = shifts
        .iter()
        .map(|(_, x)| is_strongly_irreducible(x).is_true())
        .collect();
    let jobs: Vec<(usize, u64)> = (0..shifts.len())
        .flat_map(|s| (0..cfg.count as u64).map(move |i| (s, cfg.seed.wrapping_add(i))))
        .collect();
    let results: Vec<Result<Option<Instance>>> = jobs
        .par_iter()
        .map(|&(s, seed)| run_instance(&shifts[s].0, &shifts[s].1, si[s], cfg, seed))
        .collect();

    let mut per_shift: BTreeMap<String, ShiftSummary> = shifts
        .iter()
        .map(|(name, _)| (name.clone(), ShiftSummary::default()))
        .collect();
    let mut violations = BTreeMap::new();
    let mut instances = Vec::new();
    for (&(s, _), r) in jobs.iter().zip(results) {
        let summary = per_shift.get_mut(&shifts[s].0).expect("known shift");
        summary.sampled += 1;
        let Some(inst) = r? else { continue };
        summary.endomorphisms += 1;
        summary.pre_injective += usize::from(inst.pre_injective);
        summary.injective += usize::from(inst.injective);
        summary.surjective += usize::from(inst.surjective);
        for &v in &inst.violations {
            *violations.entry(v).or_insert(0) += 1;
        }
        instances.push(inst);
    }
    Ok(CorpusReport {
        instances,
        per_shift,
        violations,
    })
}

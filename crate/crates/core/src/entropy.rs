//! Topological entropy in nats, from exact block counts and from the Perron
//! root of the right-resolving presentation.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::decision::{Decision, Scope, Verdict};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::shift::Shift;

/// Exact number of words of length `n` in the language.
pub fn block_count(x: &Shift, n: usize) -> BigUint {
    x.dfa().count_words(n)
}

/// Natural logarithm of a positive big integer; `-inf` for zero.
pub fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyMethod {
    BlockCount,
    Spectral,
}

impl fmt::Display for EntropyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntropyMethod::BlockCount => "block-count",
            EntropyMethod::Spectral => "spectral",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyEstimate {
    /// Nats.
    pub value: f64,
    pub method: EntropyMethod,
    /// `n_max` for block counts, the tolerance for the spectral method.
    pub param: f64,
    pub error_bound: f64,
    /// `log|X_n| / n` for `n = 1..=n_max` (block counts only).
    pub sequence: Vec<f64>,
    /// Set when the shift is empty and the value is a placeholder 0.
    pub empty: bool,
}

impl EntropyEstimate {
    pub fn log2_value(&self) -> f64 {
        self.value / std::f64::consts::LN_2
    }
}

/// `log|X_n| / n` at `n = n_max`.
///
/// Block counts are submultiplicative, so the sequence dominates its limit
/// and approaches it like `C / n`; twice the drop over the last doubling,
/// `2 |a(n/2) - a(n)|`, bounds the remaining distance to the limit.
pub fn entropy_blocks(x: &Shift, n_max: usize) -> EntropyEstimate {
    let n_max = n_max.max(2);
    let counts = x.dfa().count_sequence(n_max);
    if x.is_empty() {
        return EntropyEstimate {
            value: 0.0,
            method: EntropyMethod::BlockCount,
            param: n_max as f64,
            error_bound: 0.0,
            sequence: vec![0.0; n_max],
            empty: true,
        };
    }
    let sequence: Vec<f64> = (1..=n_max).map(|n| ln_big(&counts[n]) / n as f64).collect();
    let a = |n: usize| sequence[n - 1];
    let value = a(n_max);
    let error_bound = 2.0 * (a(n_max / 2) - value).abs();
    EntropyEstimate {
        value,
        method: EntropyMethod::BlockCount,
        param: n_max as f64,
        error_bound,
        sequence,
        empty: false,
    }
}

/// Certified bracket `[lo, hi]` for the Perron root of the component `comp`.
fn perron_bracket(g: &LabeledGraph, comp: &[usize], tol: f64) -> (f64, f64) {
    let index: std::collections::HashMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|e| Some((*index.get(&e.src)?, *index.get(&e.dst)?)))
        .collect();
    let m = comp.len();
    if edges.len() == m {
        // a single cycle
        return (1.0, 1.0);
    }
    // Power iteration on A + I, which is primitive on a strongly connected
    // component; Collatz–Wielandt ratios bracket its Perron root.
    let mut v = vec![1.0f64; m];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for _ in 0..200_000 {
        let mut w = v.clone();
        for &(s, d) in &edges {
            w[s] += v[d];
        }
        let (mut rmin, mut rmax) = (f64::INFINITY, 0.0f64);
        for i in 0..m {
            let r = w[i] / v[i];
            rmin = rmin.min(r);
            rmax = rmax.max(r);
        }
        lo = f64::max(lo, rmin - 1.0);
        hi = f64::min(hi, rmax - 1.0);
        if lo > 0.0 && (hi.ln() - lo.ln()) / 2.0 <= tol {
            break;
        }
        let norm = w.iter().cloned().fold(0.0, f64::max);
        v = w.into_iter().map(|c| c / norm).collect();
    }
    (lo.max(1.0), hi.max(1.0))
}

/// Entropy as `log λ` for the Perron root `λ` of the right-resolving
/// presentation, maximized over its strongly connected components.
pub fn entropy_spectral(x: &Shift, tol: f64) -> EntropyEstimate {
    let g = x.deterministic();
    let (lo, hi) = g
        .nontrivial_sccs()
        .iter()
        .map(|comp| perron_bracket(g, comp, tol))
        .fold((1.0f64, 1.0f64), |(a, b), (c, d)| (a.max(c), b.max(d)));
    let (llo, lhi) = (lo.ln(), hi.ln());
    EntropyEstimate {
        value: (llo + lhi) / 2.0,
        method: EntropyMethod::Spectral,
        param: tol,
        error_bound: (lhi - llo) / 2.0,
        sequence: Vec::new(),
        empty: x.is_empty(),
    }
}

/// Spectral entropies of a shift and a subshift.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyGap {
    pub outer: EntropyEstimate,
    pub inner: EntropyEstimate,
    pub gap: f64,
    pub tol: f64,
}

/// Compares `h(y)` against `h(x)` for `y ⊆ x`. The verdict is true (strictly
/// less) when the certified gap exceeds `2 tol`, inconclusive otherwise; the
/// witness always carries both estimates.
pub fn entropy_compare(x: &Shift, y: &Shift, tol: f64) -> Result<Decision<EntropyGap>> {
    if let Some(w) = x.inclusion_witness(y)? {
        return Err(Error::NotSubshift(y.format_word(&w)));
    }
    let outer = entropy_spectral(x, tol);
    let inner = entropy_spectral(y, tol);
    let gap = outer.value - inner.value;
    let certified = gap - outer.error_bound - inner.error_bound;
    let verdict = if certified > 2.0 * tol {
        Verdict::True
    } else {
        Verdict::Inconclusive
    };
    Ok(Decision {
        verdict,
        witness: Some(EntropyGap { outer, inner, gap, tol }),
        scope: Scope::PointLevel,
    })
}

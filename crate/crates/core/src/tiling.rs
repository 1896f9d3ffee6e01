//! Følner windows and tilings of ℤ, and exact counting checks of the entropy
//! drop forced by forbidding a pattern on every tile.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::alphabet::{Symbol, Word};
use crate::entropy::ln_big;
use crate::error::{Error, Result};
use crate::props::si_certificate;
use crate::shift::Shift;
use crate::window::Interval;

/// The window `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FolnerWindow {
    pub n: usize,
}

impl FolnerWindow {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "empty window");
        FolnerWindow { n }
    }

    pub fn interval(&self) -> Interval {
        Interval::new(0, self.n as i64)
    }

    /// Exact `|F^{+E} \ F|` for `E = [-e, e]`, counted point by point.
    pub fn boundary_count(&self, e: usize) -> usize {
        let f = self.interval();
        f.dilate(e as i64, e as i64).count_outside(&f)
    }

    /// `|F^{+E} \ F| / |F|` for `E = [-e, e]`.
    pub fn boundary_ratio(&self, e: usize) -> f64 {
        self.boundary_count(e) as f64 / self.n as f64
    }
}

/// The tiling of ℤ by translates of `E = [0, k)` along `T = kℤ`, with
/// covering set `E' = E - E = [-k+1, k-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingSpec {
    pub k: usize,
}

impl TilingSpec {
    pub fn tile(&self) -> Interval {
        Interval::new(0, self.k as i64)
    }

    /// `E'` as a half-open interval.
    pub fn cover(&self) -> Interval {
        let k = self.k as i64;
        Interval::new(-k + 1, k)
    }

    /// Centers `g ∈ T` whose cover `g + E'` meets `w`.
    fn centers_near(&self, w: &Interval) -> impl Iterator<Item = i64> {
        let k = self.k as i64;
        let lo = (w.start - k).div_euclid(k) * k;
        let hi = w.end + k;
        (lo..=hi).step_by(self.k)
    }

    /// Checks on `w` that the tiles are pairwise disjoint and that the
    /// translates of `E'` cover every point.
    pub fn verify_on(&self, w: &Interval) -> bool {
        let centers: Vec<i64> = self.centers_near(w).collect();
        (w.start..w.end).all(|p| {
            let in_tiles = centers.iter().filter(|&&g| self.tile().shifted(g).contains(p)).count();
            let covered = centers.iter().any(|&g| self.cover().shifted(g).contains(p));
            in_tiles <= 1 && covered
        })
    }
}

/// The tiling with tile `[0, k)`, verified exactly on `[-10k, 10k)`.
pub fn tiling_z(k: usize) -> Result<TilingSpec> {
    if k == 0 {
        return Err(Error::InvalidTiling("tile length must be positive".into()));
    }
    let t = TilingSpec { k };
    let k = k as i64;
    if !t.verify_on(&Interval::new(-10 * k, 10 * k)) {
        return Err(Error::InvalidTiling(format!("tiling with k = {k} fails verification")));
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TileDensity {
    /// Number of tiles inside `[0, n)`.
    pub count: usize,
    pub ratio: f64,
    pub alpha: f64,
    pub alpha_ok: bool,
}

/// Counts the tiles `g + E ⊆ [0, n)` and compares their density with
/// `α = 1 / (2k)`.
pub fn tiling_density(t: &TilingSpec, n: usize) -> Result<TileDensity> {
    if n < t.k {
        return Err(Error::WindowTooSmall { n, k: t.k });
    }
    let window = Interval::new(0, n as i64);
    let count = (0..n as i64)
        .step_by(t.k)
        .filter(|&g| window.contains_interval(&t.tile().shifted(g)))
        .count();
    let ratio = count as f64 / n as f64;
    let alpha = 1.0 / (2 * t.k) as f64;
    Ok(TileDensity {
        count,
        ratio,
        alpha,
        alpha_ok: ratio >= alpha,
    })
}

/// Counts words of length `n` in the language whose restriction to each of
/// the given windows satisfies `allowed`.
fn count_constrained(x: &Shift, n: usize, windows: &[(usize, usize)], allowed: &dyn Fn(&[Symbol]) -> bool) -> BigUint {
    // windows are disjoint and sorted; carry the letters of the open window
    let dfa = x.dfa();
    let mut layer: Vec<(usize, Vec<Symbol>, BigUint)> = vec![(0, Vec::new(), BigUint::one())];
    let window_at = |i: usize| windows.iter().find(|&&(a, b)| a <= i && i < b).copied();
    for i in 0..n {
        let win = window_at(i);
        let mut next: std::collections::HashMap<(usize, Vec<Symbol>), BigUint> = Default::default();
        for (s, buf, c) in &layer {
            for a in 0..dfa.alphabet_len() as Symbol {
                let Some(t) = dfa.step(*s, a) else { continue };
                let mut nb = buf.clone();
                if let Some((_, b)) = win {
                    nb.push(a);
                    if i + 1 == b {
                        if !allowed(&nb) {
                            continue;
                        }
                        nb.clear();
                    }
                }
                *next.entry((t, nb)).or_insert_with(BigUint::zero) += c;
            }
        }
        let mut v: Vec<_> = next.into_iter().map(|((s, b), c)| (s, b, c)).collect();
        v.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        layer = v;
    }
    layer.into_iter().map(|(_, _, c)| c).sum()
}

/// Exact comparison of the words avoiding a pattern on every tile with the
/// bound `(1 - 1/ρ)^m |L_n|`.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternReport {
    pub d: usize,
    pub k: usize,
    pub n: usize,
    pub pattern: Word,
    /// Gap bound from the certificate; the pattern window sits this far
    /// inside each tile.
    pub margin: usize,
    /// Number of tiles `m`.
    pub tiles: usize,
    /// `ρ = |L_k|`.
    pub rho: BigUint,
    pub q_count: BigUint,
    pub x_count: BigUint,
    /// `(1 - 1/ρ)^m |L_n|` as a float, for display.
    pub bound: f64,
    /// The exact inequality `|Q| ρ^m <= (ρ - 1)^m |L_n|`.
    pub holds: bool,
    /// Whether the inequality is strict.
    pub strict: bool,
    /// `(log|L_n| - log|Q|) / n`.
    pub entropy_gap: f64,
}

/// Forbids `pattern` (of length `d`; by default the largest word of `L_d`) on
/// the window `[g + N0, g + N0 + d)` of every tile `[g, g + k)` inside `[0, n)`,
/// where `N0` is the certificate's gap bound, and checks the counting
/// inequality exactly. Requires `k >= d + 2 N0`.
pub fn pattern_check(x: &Shift, d: usize, k: usize, n: usize, pattern: Option<&Word>) -> Result<PatternReport> {
    let cert = si_certificate(x).map_err(|_| Error::CertificateMissing)?;
    let margin = cert.n0_bound;
    if d == 0 || k < d + 2 * margin {
        return Err(Error::InvalidTiling(format!(
            "tile length {k} cannot hold a window of length {d} with margin {margin} on both sides"
        )));
    }
    let tiling = tiling_z(k)?;
    let tiles = tiling_density(&tiling, n)?.count;
    let pattern = match pattern {
        Some(p) => {
            if p.len() != d || !x.contains_word(p)? {
                return Err(Error::WordNotInLanguage(x.format_word(p)));
            }
            p.clone()
        }
        None => x.blocks(d).pop().expect("nonempty language"),
    };
    let windows: Vec<(usize, usize)> = (0..tiles).map(|j| (j * k + margin, j * k + margin + d)).collect();
    let q_count = count_constrained(x, n, &windows, &|w| w != pattern.letters());
    let x_count = x.dfa().count_words(n);
    let rho = x.dfa().count_words(k);
    let m = tiles as u32;
    let lhs = &q_count * rho.pow(m);
    let rhs = (&rho - BigUint::one()).pow(m) * &x_count;
    let ratio = 1.0 - 1.0 / rho.to_f64().unwrap_or(f64::INFINITY);
    Ok(PatternReport {
        d,
        k,
        n,
        margin,
        tiles,
        bound: ratio.powi(m as i32) * x_count.to_f64().unwrap_or(f64::INFINITY),
        holds: lhs <= rhs,
        strict: lhs < rhs,
        entropy_gap: (ln_big(&x_count) - ln_big(&q_count)) / n as f64,
        pattern,
        rho,
        q_count,
        x_count,
    })
}

/// One line of the positivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityRow {
    pub n: usize,
    pub tiles: usize,
    pub x_count: BigUint,
    /// Words using only the two chosen letters at the tile centers.
    pub z_count: BigUint,
    pub holds: bool,
}

/// For a strongly irreducible shift with two letters `a < b` in its
/// language, tiles of stride `k = 1 + 2 N0` and each `n <= n_max`: counts the
/// words whose tile centers carry `a` or `b`, and checks
/// `|L_n| >= |Z_n| >= 2^{tiles}`.
pub fn positivity_check(x: &Shift, n_max: usize) -> Result<Vec<PositivityRow>> {
    let cert = si_certificate(x).map_err(|_| Error::CertificateMissing)?;
    let letters = x.blocks(1);
    if letters.len() < 2 {
        return Err(Error::CertificateMissing);
    }
    let (a, b) = (letters[0].letters()[0], letters[1].letters()[0]);
    let margin = cert.n0_bound;
    let k = 1 + 2 * margin;
    let counts = x.dfa().count_sequence(n_max);
    (1..=n_max)
        .map(|n| {
            let tiles = n / k;
            let windows: Vec<(usize, usize)> = (0..tiles).map(|j| (j * k + margin, j * k + margin + 1)).collect();
            let z_count = count_constrained(x, n, &windows, &|w| w[0] == a || w[0] == b);
            let x_count = counts[n].clone();
            let lower = BigUint::one() << tiles;
            Ok(PositivityRow {
                n,
                tiles,
                holds: x_count >= z_count && z_count >= lower,
                x_count,
                z_count,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn folner_boundary_is_exact() {
        for n in [100, 1000, 10000] {
            let f = FolnerWindow::new(n);
            assert_eq!(f.boundary_count(3), 6);
            assert_eq!(f.boundary_ratio(3), 6.0 / n as f64);
        }
    }

    #[test]
    fn tilings() {
        let t = tiling_z(3).unwrap();
        assert_eq!(t.tile(), Interval::new(0, 3));
        assert_eq!(t.cover(), Interval::new(-2, 3));
        let t1 = tiling_z(1).unwrap();
        assert_eq!(t1.cover(), Interval::new(0, 1));
        assert!(tiling_z(5).unwrap().verify_on(&Interval::new(0, 50)));
        assert!(tiling_z(0).is_err());
    }

    #[test]
    fn densities() {
        let t3 = tiling_z(3).unwrap();
        let d = tiling_density(&t3, 30).unwrap();
        assert_eq!(d.count, 10);
        assert!(d.alpha_ok && (d.ratio - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(tiling_density(&t3, 31).unwrap().count, 10);
        let d = tiling_density(&tiling_z(1).unwrap(), 7).unwrap();
        assert_eq!((d.count, d.ratio), (7, 1.0));
        assert_eq!(tiling_density(&t3, 2), Err(Error::WindowTooSmall { n: 2, k: 3 }));
    }

    #[test]
    fn pattern_check_examples() {
        let g = fixtures::golden();
        let r = pattern_check(&g, 1, 9, 18, None).unwrap();
        assert_eq!(g.format_word(&r.pattern), "1");
        assert_eq!(r.tiles, 2);
        assert!(r.holds && r.strict);
        assert!(r.entropy_gap > 0.0);

        let f = fixtures::full2();
        let r = pattern_check(&f, 1, 1, 12, None).unwrap();
        assert_eq!(r.q_count, BigUint::one());
        assert!(r.holds && !r.strict);

        assert_eq!(
            pattern_check(&fixtures::twopoint(), 1, 9, 18, None).unwrap_err(),
            Error::CertificateMissing
        );
        assert!(pattern_check(&g, 1, 8, 18, None).is_err());
    }

    #[test]
    fn constrained_count_matches_filtering() {
        let e = fixtures::even();
        let windows = [(1, 3), (5, 6)];
        let got = count_constrained(&e, 8, &windows, &|w| w.iter().all(|&a| a == 0));
        let want = e
            .blocks(8)
            .iter()
            .filter(|w| w.letters()[1..3].iter().all(|&a| a == 0) && w.letters()[5] == 0)
            .count();
        assert_eq!(got, BigUint::from(want));
    }

    #[test]
    fn positivity() {
        for x in [fixtures::golden(), fixtures::even(), fixtures::full2()] {
            let rows = positivity_check(&x, 24).unwrap();
            assert!(rows.iter().all(|r| r.holds));
        }
    }
}

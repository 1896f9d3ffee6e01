//! Bundled example shifts and automata.

use crate::alphabet::Alphabet;
use crate::ca::CellularAutomaton;
use crate::error::{Error, Result};
use crate::parse::{parse_ca, parse_shift};
use crate::shift::Shift;

pub const FULL2: &str = include_str!("../fixtures/full2.shift");
pub const GOLDEN: &str = include_str!("../fixtures/golden.shift");
pub const EVEN: &str = include_str!("../fixtures/even.shift");
pub const TWOPOINT: &str = include_str!("../fixtures/twopoint.shift");
pub const PERIOD2: &str = include_str!("../fixtures/period2.shift");
pub const MIXNOT: [&str; 4] = [
    include_str!("../fixtures/mixnot_2.shift"),
    include_str!("../fixtures/mixnot_3.shift"),
    include_str!("../fixtures/mixnot_4.shift"),
    include_str!("../fixtures/mixnot_5.shift"),
];

pub const XOR_CA: &str = include_str!("../fixtures/xor.ca");
pub const COLLAPSE_CA: &str = include_str!("../fixtures/collapse.ca");
pub const IDENTITY_CA: &str = include_str!("../fixtures/identity.ca");
pub const CONST0_CA: &str = include_str!("../fixtures/const0.ca");

/// Names accepted by [`shift_by_name`].
pub const SHIFT_NAMES: [&str; 9] = [
    "full2", "golden", "even", "twopoint", "period2", "mixnot_2", "mixnot_3", "mixnot_4", "mixnot_5",
];

pub fn shift_text(name: &str) -> Result<&'static str> {
    Ok(match name {
        "full2" => FULL2,
        "golden" => GOLDEN,
        "even" => EVEN,
        "twopoint" => TWOPOINT,
        "period2" => PERIOD2,
        "mixnot_2" => MIXNOT[0],
        "mixnot_3" => MIXNOT[1],
        "mixnot_4" => MIXNOT[2],
        "mixnot_5" => MIXNOT[3],
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

/// Names accepted by [`ca_text`].
pub const CA_NAMES: [&str; 4] = ["xor", "collapse", "identity", "const0"];

pub fn ca_text(name: &str) -> Result<&'static str> {
    Ok(match name {
        "xor" => XOR_CA,
        "collapse" => COLLAPSE_CA,
        "identity" => IDENTITY_CA,
        "const0" => CONST0_CA,
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

pub fn shift_by_name(name: &str) -> Result<Shift> {
    parse_shift(shift_text(name)?)
}

fn bundled(text: &str) -> Shift {
    parse_shift(text).expect("bundled fixture parses")
}

pub fn full2() -> Shift {
    bundled(FULL2)
}

pub fn golden() -> Shift {
    bundled(GOLDEN)
}

pub fn even() -> Shift {
    bundled(EVEN)
}

pub fn twopoint() -> Shift {
    bundled(TWOPOINT)
}

pub fn period2() -> Shift {
    bundled(PERIOD2)
}

/// Truncation of the "no `0 1^h 0^k 1` with `h >= k`" family to `h <= k_max`,
/// for `k_max` in `2..=5`.
pub fn mixnot(k_max: usize) -> Shift {
    bundled(MIXNOT[k_max - 2])
}

fn bundled_ca(text: &str) -> CellularAutomaton {
    parse_ca(text, &Alphabet::binary()).expect("bundled automaton parses")
}

pub fn xor_ca() -> CellularAutomaton {
    bundled_ca(XOR_CA)
}

pub fn collapse_ca() -> CellularAutomaton {
    bundled_ca(COLLAPSE_CA)
}

pub fn identity_ca() -> CellularAutomaton {
    bundled_ca(IDENTITY_CA)
}

pub fn const0_ca() -> CellularAutomaton {
    bundled_ca(CONST0_CA)
}

//! Bundled quivers used by the test suites and the reproduction suite.

use crate::quiver::{parse_quiver, Quiver};

/// `(name, file contents)` for every bundled quiver.
pub const FIXTURES: &[(&str, &str)] = &[
    ("a1", include_str!("../fixtures/a1.quiver")),
    ("a2", include_str!("../fixtures/a2.quiver")),
    ("a3_linear", include_str!("../fixtures/a3_linear.quiver")),
    ("a3_sink", include_str!("../fixtures/a3_sink.quiver")),
    ("a4_linear", include_str!("../fixtures/a4_linear.quiver")),
    ("a4_alternating", include_str!("../fixtures/a4_alternating.quiver")),
    ("a4_sink", include_str!("../fixtures/a4_sink.quiver")),
    ("d4_first", include_str!("../fixtures/d4_first.quiver")),
    ("d4_second", include_str!("../fixtures/d4_second.quiver")),
    ("d5", include_str!("../fixtures/d5.quiver")),
];

/// The bundled quiver called `name`; panics on an unknown name.
pub fn fixture(name: &str) -> Quiver {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"));
    parse_quiver(text).expect("bundled fixtures parse")
}

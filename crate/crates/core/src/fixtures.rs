//! Bundled example inputs (see `fixtures/README.md`).

pub const SINGLE_POINT: &str = include_str!("../fixtures/single_point.arr");
pub const COORDINATE_LINES: &str = include_str!("../fixtures/coordinate_lines.arr");
pub const FALK_A: &str = include_str!("../fixtures/falk_a.arr");
pub const FALK_A_PRIME: &str = include_str!("../fixtures/falk_a_prime.arr");
pub const TRIANGLE: &str = include_str!("../fixtures/triangle.arr");
pub const PARALLEL_PAIR: &str = include_str!("../fixtures/parallel_pair.arr");
pub const BRAID: &str = include_str!("../fixtures/braid.arr");
pub const FALK_A_CONE_COVECTORS: &str = include_str!("../fixtures/falk_a_cone.covectors");
pub const FALK_A_CONE_TOPES: &str = include_str!("../fixtures/falk_a_cone.topes");
pub const FALK_J: &str = include_str!("../fixtures/falk_j.ideal");
pub const FALK_J_PRIME: &str = include_str!("../fixtures/falk_j_prime.ideal");
pub const VERTICAL_A: &str = include_str!("../fixtures/vertical_a.ideal");
pub const VERTICAL_A_PRIME: &str = include_str!("../fixtures/vertical_a_prime.ideal");

/// Arrangement fixtures by name.
pub const ARRANGEMENTS: &[(&str, &str)] = &[
    ("single_point", SINGLE_POINT),
    ("coordinate_lines", COORDINATE_LINES),
    ("falk_a", FALK_A),
    ("falk_a_prime", FALK_A_PRIME),
    ("triangle", TRIANGLE),
    ("parallel_pair", PARALLEL_PAIR),
    ("braid", BRAID),
];

/// Ideal fixtures by name.
pub const IDEALS: &[(&str, &str)] = &[
    ("falk_j", FALK_J),
    ("falk_j_prime", FALK_J_PRIME),
    ("vertical_a", VERTICAL_A),
    ("vertical_a_prime", VERTICAL_A_PRIME),
];

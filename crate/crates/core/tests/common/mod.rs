#![allow(dead_code)]

use fanokit::dataio::{parse_class, parse_keys, Dataset};

/// A 4-fold hypersurface of degree 5 in P(1^4,2,3). Cutting by a cubic
/// eliminating z leaves X_5 in P(1^4,2), whose only non-Gorenstein point is
/// the y-point, a 1/2(1,1,1) point.
pub const QUINTIC_KEY: &str = r#"
format = "fanokit/1"

[[key]]
name = "Quintic"
description = "Degree five hypersurface used as a synthetic key."
dimension = 4
coordinates = ["x1", "x2", "x3", "x4", "y", "z"]
witness = "x1"
equations = ["y^2*x1 + z*y + x1^5 + x2^5 + x3^5 + x4^5"]

[[key]]
name = "Cone"
description = "Degree five hypersurface singular along the x1-line after cutting."
dimension = 4
coordinates = ["x1", "x2", "x3", "x4", "y", "z"]
witness = "x1"
equations = ["y^2*x1 + z*y + x2^5 + x3^5 + x4^5"]
"#;

pub fn quintic_class(number: u32, key: &str, z_rhs: &str, x4_rhs: &str) -> String {
    format!(
        r#"
format = "fanokit/1"
number = {number}
key = "{key}"
key_weights = [1, 1, 1, 1, 2, 3]
ambient = [1, 1, 1, 1, 2]
basket = "{{1/2(1,1,1)}}"
profile = [[3, 1]]
parameters = []
charts = ["y"]

[embedding]
level = "t"
coordinates = ["x1", "x2", "x3", "y"]
printed = [1, 1, 1, 2]

[[rows]]
weight = 3
coordinate = "z"
rhs = "{z_rhs}"
level = "x"

[[rows]]
weight = 1
coordinate = "x4"
rhs = "{x4_rhs}"
level = "t"
"#
    )
}

/// Classes 1 (general, quasi-smooth) and 2 (singular at the x1-point of T).
pub fn synthetic() -> Dataset {
    let keys = parse_keys("keys", QUINTIC_KEY).unwrap();
    let classes = vec![
        parse_class("No1", &quintic_class(1, "Quintic", "generic", "generic")).unwrap(),
        parse_class("No2", &quintic_class(2, "Cone", "0", "x2")).unwrap(),
    ];
    Dataset { keys, classes }
}

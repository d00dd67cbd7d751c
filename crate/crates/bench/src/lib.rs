//! Fixtures shared by the benchmarks.

use absolute_core::{parse_presentation, Presentation};

pub const Z2: &str = "generators: a b c d\nrelations: a + b = 0; c + d = 0\nclass: group";
pub const Z3: &str = "generators: a b c d e f\nrelations: a + b = 0; c + d = 0; e + f = 0\nclass: group";
pub const SIX_AND_MINUS_ONE: &str = "generators: z p m\nrelations: z = 0; p + 6m = 0\nclass: group";
pub const TRIPOD: &str = "generators: a b c\nrelations: a + b = a + c";

pub fn presentation(text: &str) -> Presentation {
    parse_presentation(text).expect("fixture parses")
}

//! Fixtures shared by the criterion benches.

use cevian_core::{Bary, Triangle};

/// A scalene reference triangle with small integer vertices.
pub fn scalene() -> Triangle {
    Triangle::from_int_vertices([(-3, 1), (7, -2), (2, 6)]).expect("proper triangle")
}

/// A generic point off every degeneracy locus of [`scalene`].
pub fn generic_point() -> Bary {
    Bary::from_ints(1, 2, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_point_is_generic() {
        assert!(scalene()
            .classify_point(&scalene().bary_to_point(&generic_point()))
            .is_empty());
    }
}

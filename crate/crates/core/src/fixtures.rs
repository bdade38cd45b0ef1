//! Built-in example objects, parsed from the files under `fixtures/`.

use crate::complex::SimplicialComplex;
use crate::io;
use crate::matroid::Matroid;

pub const RP2_FACETS: &str = include_str!("../fixtures/rp2.facets");
pub const M_BASES: &str = include_str!("../fixtures/M.bases");
pub const N_BASES: &str = include_str!("../fixtures/N.bases");

/// The six-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    io::parse_complex(RP2_FACETS).expect("bundled fixture parses")
}

/// Rank-5 matroid on 8 elements whose Betti table coincides with that of
/// [`matroid_n`].
pub fn matroid_m() -> Matroid {
    io::parse_matroid(M_BASES).expect("bundled fixture parses")
}

pub fn matroid_n() -> Matroid {
    io::parse_matroid(N_BASES).expect("bundled fixture parses")
}

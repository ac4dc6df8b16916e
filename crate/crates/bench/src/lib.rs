//! Shared fixtures for the benchmark targets.

use octo_core::eisenstein::paley_tournament;
use octo_core::surface::Tournament;

/// The residue-rule orientation, the usual hot-path input.
pub fn survivor_fixture() -> Tournament {
    paley_tournament()
}

/// Its fourteen directed 3-cycles as sorted triples, the usual checker
/// input.
pub fn triangle_fixture() -> Vec<[u8; 3]> {
    survivor_fixture()
        .directed_three_cycles()
        .iter()
        .map(|c| c.sorted())
        .collect()
}

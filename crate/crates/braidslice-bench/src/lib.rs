//! Inputs shared by the pipeline benchmarks.

use braidslice_core::braid::BraidWord;
use braidslice_core::known::K1;
use braidslice_core::metabolisers::Character;

pub fn k1_word() -> BraidWord {
    K1.word()
}

/// The character attached to `N_0^α` at `q = 7`.
pub fn alpha_character() -> Character {
    Character {
        q: 7,
        values: [1, 2, 1, 2],
    }
}

//! Small example diagrams used in docs and tests.

use crate::diagram::ChordDiagram;

/// Seven-chord long diagram whose four odd chords all have the first sort,
/// giving `l = 8`. Chords: A(1,5) E(2,9) B(3,7) F(4,11) G(6,13) C(8,14)
/// D(10,12).
pub fn seven_chord() -> ChordDiagram {
    ChordDiagram::parse("long: A E B F A G B C E D F D G C").unwrap()
}

/// Trefoil shadow: three pairwise linked chords (1,4), (2,5), (3,6).
pub fn trefoil_shadow() -> ChordDiagram {
    ChordDiagram::parse("long: A B C A B C").unwrap()
}

/// Two crossed chords (1,3), (2,4). Trivializes in one move.
pub fn two_crossed() -> ChordDiagram {
    ChordDiagram::parse("long: A B A B").unwrap()
}

//! Diagram invariants: the even integer l, the words phi (tag G) and psi
//! (tag Gprime), their normal forms, and the dihedral shift. All of these
//! need a basepoint, so the word-valued operations take long diagrams;
//! closed diagrams get |l| plus conjugacy data stable under rotation.

use std::fmt;

use crate::diagram::{ChordDiagram, DiagramKind};
use crate::group::{
    cyclic_normal_form, dihedral_shift, reduce, DihedralElement, Generator, Group,
    GroupWord, NormalForm,
};
use crate::parity::classify;
use crate::{Error, Result};

fn require_long(d: &ChordDiagram, op: &str) -> Result<()> {
    if d.is_closed() {
        return Err(Error::Unsupported(format!(
            "{op} needs a long diagram; cut the closed one first"
        )));
    }
    Ok(())
}

/// Twice the sort-1 count minus twice the sort-2 count. Long diagrams only;
/// the closed counterpart is |l| via `closed_invariants`.
pub fn invariant_l(d: &ChordDiagram) -> Result<i64> {
    require_long(d, "invariant l")?;
    let cls = classify(d);
    Ok(2 * cls.sort1_count() as i64 - 2 * cls.sort2_count() as i64)
}

fn letters(d: &ChordDiagram) -> Vec<Generator> {
    let cls = classify(d);
    let by_id: Vec<Generator> = cls.classes().iter().map(|c| c.letter).collect();
    (1..=d.len()).map(|pos| by_id[d.id_at(pos)]).collect()
}

/// The word over {a, b, b'} read along the diagram, one letter per chord
/// endpoint, tagged G.
pub fn phi(d: &ChordDiagram) -> Result<GroupWord> {
    require_long(d, "phi")?;
    let syllables = letters(d).into_iter().map(|g| (g, 1)).collect();
    GroupWord::from_syllables(Group::G, syllables)
}

/// The phi letter sequence with every b and b' at an even position inverted,
/// tagged Gprime. a-letters are their own inverses and stay untouched.
pub fn psi(d: &ChordDiagram) -> Result<GroupWord> {
    require_long(d, "psi")?;
    let syllables = letters(d)
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let pos = i + 1;
            let exp = if g == Generator::A || pos % 2 == 1 { 1 } else { -1 };
            (g, exp)
        })
        .collect();
    GroupWord::from_syllables(Group::Gprime, syllables)
}

/// Everything the library computes for one long diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantBundle {
    pub n: usize,
    pub l: i64,
    pub sort1: usize,
    pub sort2: usize,
    pub phi: GroupWord,
    pub psi: GroupWord,
    pub phi_nf: NormalForm,
    pub psi_nf: NormalForm,
    pub shift: DihedralElement,
}

pub fn invariant_bundle(d: &ChordDiagram) -> Result<InvariantBundle> {
    require_long(d, "invariant bundle")?;
    let cls = classify(d);
    let phi = phi(d)?;
    let psi = psi(d)?;
    let phi_nf = reduce(&phi);
    let psi_nf = reduce(&psi);
    let shift = dihedral_shift(&phi)?;
    Ok(InvariantBundle {
        n: d.n(),
        l: 2 * cls.sort1_count() as i64 - 2 * cls.sort2_count() as i64,
        sort1: cls.sort1_count(),
        sort2: cls.sort2_count(),
        phi,
        psi,
        phi_nf,
        psi_nf,
        shift,
    })
}

/// Rotation-stable data of a closed diagram: |l|, the multiset of psi
/// conjugacy classes over all cuts, and the least class as canonical
/// representative. The multiset size tracks the chord count, so only |l|
/// and the canonical representative are move-invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedInvariants {
    pub n: usize,
    pub l_abs: i64,
    pub cut_classes: Vec<NormalForm>,
    pub canonical: NormalForm,
}

pub fn closed_invariants(d: &ChordDiagram) -> Result<ClosedInvariants> {
    if !d.is_closed() {
        return Err(Error::Unsupported(
            "closed invariants need a closed diagram; use the long bundle".into(),
        ));
    }
    let cuts: Vec<usize> = if d.is_empty() { vec![0] } else { (0..d.len()).collect() };
    let mut l_abs = 0;
    let mut cut_classes = Vec::with_capacity(cuts.len());
    for (i, &p) in cuts.iter().enumerate() {
        let cut = d.cut(p)?;
        if i == 0 {
            l_abs = invariant_l(&cut)?.abs();
        }
        cut_classes.push(cyclic_normal_form(&psi(&cut)?));
    }
    cut_classes.sort();
    let canonical = cut_classes[0].clone();
    Ok(ClosedInvariants { n: d.n(), l_abs, cut_classes, canonical })
}

/// Cobordism obstruction from l: nonzero |l| rules a disc filling out.
/// The report never claims sliceness, only the absence of this obstruction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SliceReport {
    pub obstructed: bool,
    pub l_abs: i64,
    pub sort1: usize,
    pub sort2: usize,
}

impl fmt::Display for SliceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.obstructed {
            write!(
                f,
                "not slice: |l| = {} (sort counts {}/{})",
                self.l_abs, self.sort1, self.sort2
            )
        } else {
            write!(f, "no obstruction from l (sort counts {}/{})", self.sort1, self.sort2)
        }
    }
}

/// Works on either kind; a closed diagram is read at its stored basepoint,
/// which is enough because |l| is rotation-stable.
pub fn slice_obstruction(d: &ChordDiagram) -> SliceReport {
    let cls = classify(d);
    let l = 2 * cls.sort1_count() as i64 - 2 * cls.sort2_count() as i64;
    SliceReport {
        obstructed: l != 0,
        l_abs: l.abs(),
        sort1: cls.sort1_count(),
        sort2: cls.sort2_count(),
    }
}

/// The value a move must preserve, packaged per diagram kind: (l, phi, psi)
/// normal forms for long diagrams, (|l|, canonical psi class) for closed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvariantKey {
    Long { l: i64, phi_nf: NormalForm, psi_nf: NormalForm },
    Closed { l_abs: i64, canonical_psi: NormalForm },
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantKey::Long { l, phi_nf, psi_nf } => {
                write!(f, "l={l} phi={phi_nf} psi={psi_nf}")
            }
            InvariantKey::Closed { l_abs, canonical_psi } => {
                write!(f, "|l|={l_abs} psi_class={canonical_psi}")
            }
        }
    }
}

pub fn invariant_key(d: &ChordDiagram) -> InvariantKey {
    match d.kind() {
        DiagramKind::Long => {
            let phi_nf = reduce(&phi(d).expect("long diagram"));
            let psi_nf = reduce(&psi(d).expect("long diagram"));
            let l = invariant_l(d).expect("long diagram");
            InvariantKey::Long { l, phi_nf, psi_nf }
        }
        DiagramKind::Closed => {
            // shifting the cut by two keeps every endpoint parity, so the
            // word at an even cut is a rotation (hence conjugate) of the
            // word at cut 0 and likewise odd cuts of cut 1; the lex-least
            // class over all cuts is the min of just those two
            let c0 = d.cut(0).expect("gap 0 always cuts");
            let l_abs = invariant_l(&c0).expect("cuts are long").abs();
            let k0 = cyclic_normal_form(&psi(&c0).expect("cuts are long"));
            let canonical_psi = if d.len() > 1 {
                let c1 = d.cut(1).expect("gap 1 exists");
                k0.min(cyclic_normal_form(&psi(&c1).expect("cuts are long")))
            } else {
                k0
            };
            InvariantKey::Closed { l_abs, canonical_psi }
        }
    }
}

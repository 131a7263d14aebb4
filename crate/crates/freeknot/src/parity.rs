//! Chord classification: parity, type, sort, letter.
//!
//! A chord is even iff it is linked with evenly many chords. An odd chord is
//! type 1 iff it is linked with evenly many even chords. Sort weighs the type
//! against the endpoint-position parities and drives the integer invariant:
//! every odd chord contributes +2 (sort 1) or -2 (sort 2). Sort depends on
//! where the basepoint sits; closed diagrams use their stored one.

use std::fmt;

use crate::diagram::{Chord, ChordDiagram};
use crate::group::Generator;
use crate::moves::{apply_move, MoveDescriptor};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChordType {
    Type1,
    Type2,
}

impl fmt::Display for ChordType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChordType::Type1 => "type1",
            ChordType::Type2 => "type2",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChordSort {
    Sort1,
    Sort2,
}

impl fmt::Display for ChordSort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChordSort::Sort1 => "sort1",
            ChordSort::Sort2 => "sort2",
        })
    }
}

/// Full classification record for one chord. Type and sort are present
/// exactly for odd chords; the letter is a for even chords, b for type 1,
/// b' for type 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChordClass {
    pub chord: Chord,
    pub degree: usize,
    pub parity: Parity,
    pub chord_type: Option<ChordType>,
    pub sort: Option<ChordSort>,
    pub letter: Generator,
}

/// Per-chord classes for a whole diagram, indexed by chord id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    classes: Vec<ChordClass>,
}

impl Classification {
    pub fn classes(&self) -> &[ChordClass] {
        &self.classes
    }

    pub fn class_of(&self, label: &str) -> Option<&ChordClass> {
        self.classes.iter().find(|c| c.chord.label == label)
    }

    pub fn even_count(&self) -> usize {
        self.classes.iter().filter(|c| c.parity == Parity::Even).count()
    }

    pub fn odd_count(&self) -> usize {
        self.classes.iter().filter(|c| c.parity == Parity::Odd).count()
    }

    pub fn type1_count(&self) -> usize {
        self.count_type(ChordType::Type1)
    }

    pub fn type2_count(&self) -> usize {
        self.count_type(ChordType::Type2)
    }

    pub fn sort1_count(&self) -> usize {
        self.count_sort(ChordSort::Sort1)
    }

    pub fn sort2_count(&self) -> usize {
        self.count_sort(ChordSort::Sort2)
    }

    fn count_type(&self, t: ChordType) -> usize {
        self.classes.iter().filter(|c| c.chord_type == Some(t)).count()
    }

    fn count_sort(&self, s: ChordSort) -> usize {
        self.classes.iter().filter(|c| c.sort == Some(s)).count()
    }
}

/// Classifies every chord. O(n^2) over the linking table, recomputed from
/// scratch; diagrams are desk-sized and recomputation avoids stale caches.
pub fn classify(d: &ChordDiagram) -> Classification {
    let chords = d.chords();
    let n = chords.len();
    let mut linked = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let l = d
                .linked(&chords[i], &chords[j])
                .expect("chords come from this diagram");
            linked[i * n + j] = l;
            linked[j * n + i] = l;
        }
    }
    let degrees: Vec<usize> =
        (0..n).map(|i| (0..n).filter(|&j| linked[i * n + j]).count()).collect();
    let even: Vec<bool> = degrees.iter().map(|&deg| deg % 2 == 0).collect();

    let classes = (0..n)
        .map(|i| {
            let chord = chords[i].clone();
            let degree = degrees[i];
            if even[i] {
                return ChordClass {
                    chord,
                    degree,
                    parity: Parity::Even,
                    chord_type: None,
                    sort: None,
                    letter: Generator::A,
                };
            }
            let even_linked =
                (0..n).filter(|&j| linked[i * n + j] && even[j]).count();
            let type1 = even_linked % 2 == 0;
            let both_odd_pos = chord.first % 2 == 1 && chord.second % 2 == 1;
            // odd chords have endpoints of equal position parity, so
            // !both_odd_pos means both endpoints sit at even positions
            let sort1 = both_odd_pos == type1;
            ChordClass {
                chord,
                degree,
                parity: Parity::Odd,
                chord_type: Some(if type1 { ChordType::Type1 } else { ChordType::Type2 }),
                sort: Some(if sort1 { ChordSort::Sort1 } else { ChordSort::Sort2 }),
                letter: if type1 { Generator::B } else { Generator::BPrime },
            }
        })
        .collect();
    Classification { classes }
}

/// One verified statement about a (diagram, move) pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactCheck {
    pub fact: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of checking the parity facts against a single applied move.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactReport {
    pub move_applied: String,
    pub checks: Vec<FactCheck>,
}

impl FactReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FactCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for FactReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} under {}:",
            if self.passed() { "facts hold" } else { "FACT VIOLATION" },
            self.move_applied
        )?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.fact, c.detail)?;
        }
        Ok(())
    }
}

fn check_odd_count(label: &'static str, cls: &Classification, out: &mut Vec<FactCheck>) {
    let odd = cls.odd_count();
    out.push(FactCheck {
        fact: label,
        passed: odd.is_multiple_of(2),
        detail: format!("{odd} odd chords"),
    });
}

fn check_endpoint_parity_lemma(
    label: &'static str,
    cls: &Classification,
    out: &mut Vec<FactCheck>,
) {
    let bad: Vec<&ChordClass> = cls
        .classes()
        .iter()
        .filter(|c| {
            let same_pos_parity = c.chord.first % 2 == c.chord.second % 2;
            same_pos_parity != (c.parity == Parity::Odd)
        })
        .collect();
    out.push(FactCheck {
        fact: label,
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            "endpoint parities match chord parity for every chord".into()
        } else {
            format!(
                "mismatched chords: {}",
                bad.iter().map(|c| c.chord.label.as_str()).collect::<Vec<_>>().join(", ")
            )
        },
    });
}

fn check_pair(
    fact: &'static str,
    cls: &Classification,
    l1: &str,
    l2: &str,
    out: &mut Vec<FactCheck>,
) {
    let (c1, c2) = match (cls.class_of(l1), cls.class_of(l2)) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            out.push(FactCheck {
                fact,
                passed: false,
                detail: format!("pair {l1},{l2} not found"),
            });
            return;
        }
    };
    let mut passed = c1.parity == c2.parity;
    let mut detail = format!("{l1} is {}, {l2} is {}", c1.parity, c2.parity);
    if passed && c1.parity == Parity::Odd {
        let same_type = c1.chord_type == c2.chord_type;
        let opposite_sorts = match (c1.sort, c2.sort) {
            (Some(s1), Some(s2)) => s1 != s2,
            _ => false,
        };
        passed = same_type && opposite_sorts;
        detail = format!(
            "{l1}: {} {}; {l2}: {} {}",
            c1.chord_type.unwrap(),
            c1.sort.unwrap(),
            c2.chord_type.unwrap(),
            c2.sort.unwrap()
        );
    }
    out.push(FactCheck { fact, passed, detail });
}

/// Applies `m` to `d` and checks every parity fact relevant to that move,
/// plus the always-facts (#odd even, endpoint-parity lemma) on both sides.
/// Errors only when the move itself is inapplicable.
pub fn verify_parity_facts(d: &ChordDiagram, m: &MoveDescriptor) -> Result<FactReport> {
    let after = apply_move(d, m)?;
    let before_cls = classify(d);
    let after_cls = classify(&after);
    let mut checks = Vec::new();

    check_odd_count("odd chord count even (before)", &before_cls, &mut checks);
    check_odd_count("odd chord count even (after)", &after_cls, &mut checks);
    check_endpoint_parity_lemma("endpoint parity lemma (before)", &before_cls, &mut checks);
    check_endpoint_parity_lemma("endpoint parity lemma (after)", &after_cls, &mut checks);

    match m {
        MoveDescriptor::R1Add { gap } => {
            let label = after.label_at(gap + 1).to_string();
            let class = after_cls.class_of(&label).ok_or_else(|| {
                Error::Inconsistent(format!("created chord {label} missing from classification"))
            })?;
            checks.push(FactCheck {
                fact: "created isolated chord is even",
                passed: class.parity == Parity::Even && class.degree == 0,
                detail: format!("{label}: degree {}, {}", class.degree, class.parity),
            });
        }
        MoveDescriptor::R1Remove { chord } => {
            let class = before_cls
                .class_of(chord)
                .ok_or_else(|| Error::ChordNotFound(chord.clone()))?;
            checks.push(FactCheck {
                fact: "cancelled isolated chord is even",
                passed: class.parity == Parity::Even && class.degree == 0,
                detail: format!("{chord}: degree {}, {}", class.degree, class.parity),
            });
        }
        MoveDescriptor::R2Add { gap1, .. } => {
            // both configs put one endpoint of each new chord at gap1+1, gap1+2
            let l1 = after.label_at(gap1 + 1).to_string();
            let l2 = after.label_at(gap1 + 2).to_string();
            check_pair(
                "created pair shares parity (type and sort rules when odd)",
                &after_cls,
                &l1,
                &l2,
                &mut checks,
            );
        }
        MoveDescriptor::R2Remove { chord1, chord2 } => {
            check_pair(
                "cancelled pair shares parity, same type, opposite sorts when odd",
                &before_cls,
                chord1,
                chord2,
                &mut checks,
            );
        }
        MoveDescriptor::R3 { sites } => {
            let mut triangle: Vec<String> = Vec::new();
            for &(p, q) in sites {
                for pos in [p, q] {
                    let lab = d.label_at(pos).to_string();
                    if !triangle.contains(&lab) {
                        triangle.push(lab);
                    }
                }
            }
            let odd_in_triangle = triangle
                .iter()
                .filter(|l| {
                    before_cls.class_of(l).map(|c| c.parity == Parity::Odd).unwrap_or(false)
                })
                .count();
            checks.push(FactCheck {
                fact: "triangle holds 0 or 2 odd chords",
                passed: odd_in_triangle == 0 || odd_in_triangle == 2,
                detail: format!("{odd_in_triangle} odd among {}", triangle.join(", ")),
            });

            let mut parity_ok = true;
            let mut sort_ok = true;
            let mut type_ok = true;
            let mut bad = String::new();
            for before in before_cls.classes() {
                let label = &before.chord.label;
                let Some(after_c) = after_cls.class_of(label) else {
                    parity_ok = false;
                    bad = format!("{label} vanished");
                    break;
                };
                if after_c.parity != before.parity {
                    parity_ok = false;
                    bad = format!("{label} changed parity");
                }
                if after_c.sort != before.sort {
                    sort_ok = false;
                    bad = format!("{label} changed sort");
                }
                // an odd triangle chord flips type iff exactly one of its two
                // partners is even; with the 0-or-2-odd constraint that means
                // every odd triangle chord flips and nobody else does
                if before.parity == Parity::Odd {
                    let in_triangle = triangle.contains(label);
                    let must_flip = if in_triangle {
                        let even_partners = triangle
                            .iter()
                            .filter(|l| *l != label)
                            .filter(|l| {
                                before_cls
                                    .class_of(l)
                                    .map(|c| c.parity == Parity::Even)
                                    .unwrap_or(false)
                            })
                            .count();
                        even_partners == 1
                    } else {
                        false
                    };
                    let flipped = after_c.chord_type != before.chord_type;
                    if flipped != must_flip {
                        type_ok = false;
                        bad = format!(
                            "{label}: type {} but rule says {}",
                            if flipped { "flipped" } else { "held" },
                            if must_flip { "flip" } else { "hold" }
                        );
                    }
                }
            }
            let all = parity_ok && sort_ok && type_ok;
            checks.push(FactCheck {
                fact: "triangle move preserves parity and sort, flips types per rule",
                passed: all,
                detail: if all { "all chords conform".into() } else { bad },
            });
        }
    }

    Ok(FactReport { move_applied: m.to_string(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn classes(d: &ChordDiagram) -> Classification {
        classify(d)
    }

    #[test]
    fn trefoil_shadow_is_all_even() {
        let d = samples::trefoil_shadow();
        let cls = classes(&d);
        assert_eq!(cls.even_count(), 3);
        assert_eq!(cls.odd_count(), 0);
        for c in cls.classes() {
            assert_eq!(c.parity, Parity::Even);
            assert_eq!(c.letter, Generator::A);
            assert_eq!(c.chord_type, None);
            assert_eq!(c.sort, None);
        }
    }

    #[test]
    fn single_chord_is_even() {
        let d = ChordDiagram::parse("long: K K").unwrap();
        let cls = classes(&d);
        let k = cls.class_of("K").unwrap();
        assert_eq!(k.degree, 0);
        assert_eq!(k.parity, Parity::Even);
        assert_eq!(k.letter, Generator::A);
    }

    #[test]
    fn seven_chord_classification_table() {
        let d = samples::seven_chord();
        let cls = classes(&d);
        let expect = [
            ("A", Parity::Odd, Some(ChordType::Type1), Some(ChordSort::Sort1), Generator::B),
            ("B", Parity::Odd, Some(ChordType::Type1), Some(ChordSort::Sort1), Generator::B),
            ("C", Parity::Odd, Some(ChordType::Type2), Some(ChordSort::Sort1), Generator::BPrime),
            ("D", Parity::Odd, Some(ChordType::Type2), Some(ChordSort::Sort1), Generator::BPrime),
            ("E", Parity::Even, None, None, Generator::A),
            ("F", Parity::Even, None, None, Generator::A),
            ("G", Parity::Even, None, None, Generator::A),
        ];
        for (label, parity, chord_type, sort, letter) in expect {
            let c = cls.class_of(label).unwrap();
            assert_eq!(c.parity, parity, "{label}");
            assert_eq!(c.chord_type, chord_type, "{label}");
            assert_eq!(c.sort, sort, "{label}");
            assert_eq!(c.letter, letter, "{label}");
        }
        assert_eq!(cls.even_count(), 3);
        assert_eq!(cls.odd_count(), 4);
        assert_eq!(cls.type1_count(), 2);
        assert_eq!(cls.type2_count(), 2);
        assert_eq!(cls.sort1_count(), 4);
        assert_eq!(cls.sort2_count(), 0);
    }

    #[test]
    fn two_crossed_chords_have_opposite_sorts() {
        let d = samples::two_crossed();
        let cls = classes(&d);
        let a = cls.class_of("A").unwrap();
        let b = cls.class_of("B").unwrap();
        assert_eq!(a.parity, Parity::Odd);
        assert_eq!(b.parity, Parity::Odd);
        assert_eq!(a.chord_type, Some(ChordType::Type1));
        assert_eq!(b.chord_type, Some(ChordType::Type1));
        assert_eq!(a.sort, Some(ChordSort::Sort1));
        assert_eq!(b.sort, Some(ChordSort::Sort2));
    }

    #[test]
    fn odd_counts_are_even_across_samples() {
        for d in [
            samples::seven_chord(),
            samples::trefoil_shadow(),
            samples::two_crossed(),
            ChordDiagram::parse("long:").unwrap(),
            ChordDiagram::parse("closed: A B A C B C").unwrap(),
        ] {
            assert_eq!(classes(&d).odd_count() % 2, 0, "{d}");
        }
    }

    #[test]
    fn rotation_flips_every_sort_and_keeps_types() {
        let closed = samples::seven_chord().close();
        let base = classes(&closed);
        let once = classes(&closed.rotate_basepoint(1).unwrap());
        let twice = classes(&closed.rotate_basepoint(2).unwrap());
        for c in base.classes() {
            let label = &c.chord.label;
            let c1 = once.class_of(label).unwrap();
            let c2 = twice.class_of(label).unwrap();
            assert_eq!(c.parity, c1.parity, "{label}: parity is position-free");
            assert_eq!(c.chord_type, c1.chord_type, "{label}: type is position-free");
            assert_eq!(c.parity, c2.parity, "{label}");
            assert_eq!(c.chord_type, c2.chord_type, "{label}");
            assert_eq!(c.sort, c2.sort, "{label}: sort survives rotation by two");
            if c.parity == Parity::Odd {
                assert_ne!(c.sort, c1.sort, "{label}: sort flips under rotation by one");
            }
        }
    }

    #[test]
    fn endpoint_parity_lemma_on_samples() {
        for d in [
            samples::seven_chord(),
            samples::trefoil_shadow(),
            ChordDiagram::parse("closed: X Y X Z Y Z").unwrap(),
        ] {
            for c in classes(&d).classes() {
                let same = c.chord.first % 2 == c.chord.second % 2;
                assert_eq!(same, c.parity == Parity::Odd, "{d}: chord {}", c.chord.label);
            }
        }
    }

    #[test]
    fn fact_report_for_pair_cancellation() {
        let d = samples::two_crossed();
        let m = MoveDescriptor::R2Remove { chord1: "A".into(), chord2: "B".into() };
        let report = verify_parity_facts(&d, &m).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn fact_report_for_triangle_move() {
        let d = samples::trefoil_shadow();
        let m = MoveDescriptor::R3 { sites: [(1, 2), (3, 4), (5, 6)] };
        let report = verify_parity_facts(&d, &m).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn fact_report_for_kink_birth() {
        let d = ChordDiagram::parse("long:").unwrap();
        let m = MoveDescriptor::R1Add { gap: 0 };
        let report = verify_parity_facts(&d, &m).unwrap();
        assert!(report.passed(), "{report}");
        assert!(verify_parity_facts(&d, &MoveDescriptor::R1Add { gap: 5 }).is_err());
    }
}

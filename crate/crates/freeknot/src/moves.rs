//! Reidemeister moves on chord diagrams: descriptors, enumeration,
//! application, inversion, and seeded random walks.
//!
//! Gap convention: a gap g means "insert before 1-based position g+1", so a
//! diagram of length L has gaps 0..=L. Long diagrams use the full range.
//! Closed diagrams enumerate gaps 0..=L-1 only (gap L repeats gap 0 up to
//! rotation) but `apply_move` accepts gap L as well, which move inversion
//! needs to restore token sequences exactly.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Chord, ChordDiagram, DiagramKind};
use crate::invariants::{invariant_key, InvariantKey};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum R2Config {
    Crossed,
    Nested,
}

impl fmt::Display for R2Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R2Config::Crossed => "crossed",
            R2Config::Nested => "nested",
        })
    }
}

/// One applicable move. Removal variants name chords by label; addition
/// variants name gaps; the triangle move lists its three two-position sites.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MoveDescriptor {
    R1Add { gap: usize },
    R1Remove { chord: String },
    R2Add { gap1: usize, gap2: usize, config: R2Config },
    R2Remove { chord1: String, chord2: String },
    R3 { sites: [(usize, usize); 3] },
}

impl fmt::Display for MoveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveDescriptor::R1Add { gap } => write!(f, "R1+ gap {gap}"),
            MoveDescriptor::R1Remove { chord } => write!(f, "R1- {chord}"),
            MoveDescriptor::R2Add { gap1, gap2, config } => {
                write!(f, "R2+ {config} gaps {gap1},{gap2}")
            }
            MoveDescriptor::R2Remove { chord1, chord2 } => {
                write!(f, "R2- {chord1},{chord2}")
            }
            MoveDescriptor::R3 { sites } => write!(
                f,
                "R3 ({} {})({} {})({} {})",
                sites[0].0, sites[0].1, sites[1].0, sites[1].1, sites[2].0, sites[2].1
            ),
        }
    }
}

/// Labels for freshly created chords, chosen not to clash with existing ones.
fn fresh_labels(d: &ChordDiagram, count: usize) -> Vec<String> {
    let existing: Vec<String> = (0..d.n()).map(|id| d.label(id).to_string()).collect();
    let mut out = Vec::with_capacity(count);
    let mut k = d.n();
    while out.len() < count {
        let cand = crate::diagram::canonical_label(k);
        k += 1;
        if !existing.contains(&cand) && !out.contains(&cand) {
            out.push(cand);
        }
    }
    out
}

fn check_gap(d: &ChordDiagram, gap: usize) -> Result<()> {
    if gap > d.len() {
        return Err(Error::GapOutOfRange { gap, len: d.len() });
    }
    Ok(())
}

fn find_chord(d: &ChordDiagram, label: &str) -> Result<Chord> {
    d.chord_by_label(label).ok_or_else(|| Error::ChordNotFound(label.to_string()))
}

// Does `c` end at position `p`?
fn owns(c: &Chord, p: usize) -> bool {
    c.first == p || c.second == p
}

// One endpoint of each chord in each of the positions.
fn mixed(c1: &Chord, c2: &Chord, p: usize, q: usize) -> bool {
    (owns(c1, p) && owns(c2, q)) || (owns(c2, p) && owns(c1, q))
}

fn r1_site(d: &ChordDiagram, label: &str) -> Result<(Chord, bool)> {
    let c = find_chord(d, label)?;
    let adjacent = c.second == c.first + 1;
    let wrap = d.is_closed() && c.first == 1 && c.second == d.len() && d.len() > 2;
    if !adjacent && !wrap {
        return Err(Error::Inapplicable(format!(
            "chord {label} at ({},{}) has no adjacent endpoints",
            c.first, c.second
        )));
    }
    Ok((c, !adjacent))
}

// Sorted endpoint positions of a cancellable pair; `wrap_only` marks pairs
// whose two sites straddle a closed diagram's basepoint.
struct R2Site {
    positions: [usize; 4],
    wrap_only: bool,
}

fn r2_site(d: &ChordDiagram, l1: &str, l2: &str) -> Result<R2Site> {
    let c1 = find_chord(d, l1)?;
    let c2 = find_chord(d, l2)?;
    if c1.label == c2.label {
        return Err(Error::Inapplicable("a pair needs two distinct chords".into()));
    }
    let mut ps = [c1.first, c1.second, c2.first, c2.second];
    ps.sort_unstable();
    let linear = ps[1] == ps[0] + 1
        && ps[3] == ps[2] + 1
        && mixed(&c1, &c2, ps[0], ps[1])
        && mixed(&c1, &c2, ps[2], ps[3]);
    let wrap = d.is_closed()
        && ps[0] == 1
        && ps[3] == d.len()
        && ps[2] == ps[1] + 1
        && mixed(&c1, &c2, ps[3], ps[0])
        && mixed(&c1, &c2, ps[1], ps[2]);
    if !linear && !wrap {
        return Err(Error::Inapplicable(format!(
            "chords {l1},{l2} do not form two adjacent mixed pairs"
        )));
    }
    Ok(R2Site { positions: ps, wrap_only: !linear })
}

// Chord ids at the six positions of a validated triangle.
fn r3_check(d: &ChordDiagram, sites: &[(usize, usize); 3]) -> Result<()> {
    let len = d.len();
    let mut positions = Vec::with_capacity(6);
    for &(p, q) in sites {
        let adjacent = q == p + 1 && q <= len;
        let wrap = d.is_closed() && p == len && q == 1 && len >= 2;
        if p == 0 || p > len || (!adjacent && !wrap) {
            return Err(Error::Inapplicable(format!("({p},{q}) is not an adjacent site")));
        }
        positions.push(p);
        positions.push(q);
    }
    let mut distinct = positions.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 6 {
        return Err(Error::Inapplicable("triangle sites overlap".into()));
    }
    let mut ids: Vec<usize> = positions.iter().map(|&p| d.id_at(p)).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != 3 {
        return Err(Error::Inapplicable(format!(
            "sites touch {} chords, need exactly 3",
            ids.len()
        )));
    }
    for &(p, q) in sites {
        if d.id_at(p) == d.id_at(q) {
            return Err(Error::Inapplicable(
                "a site holds both endpoints of one chord".into(),
            ));
        }
    }
    Ok(())
}

/// Applies a move. The descriptor must be applicable; anything else is
/// rejected with a reason. Labels of surviving chords are preserved.
pub fn apply_move(d: &ChordDiagram, m: &MoveDescriptor) -> Result<ChordDiagram> {
    let kind = d.kind();
    match m {
        MoveDescriptor::R1Add { gap } => {
            check_gap(d, *gap)?;
            let label = fresh_labels(d, 1).pop().unwrap();
            let mut tokens = d.tokens();
            tokens.insert(*gap, label.clone());
            tokens.insert(*gap, label);
            ChordDiagram::from_tokens(kind, &tokens)
        }
        MoveDescriptor::R1Remove { chord } => {
            let (c, _) = r1_site(d, chord)?;
            let mut tokens = d.tokens();
            tokens.remove(c.second - 1);
            tokens.remove(c.first - 1);
            ChordDiagram::from_tokens(kind, &tokens)
        }
        MoveDescriptor::R2Add { gap1, gap2, config } => {
            if gap1 > gap2 {
                return Err(Error::Inapplicable(format!(
                    "pair gaps must satisfy gap1 <= gap2, got {gap1} > {gap2}"
                )));
            }
            check_gap(d, *gap2)?;
            let labels = fresh_labels(d, 2);
            let (u, v) = (labels[0].clone(), labels[1].clone());
            let mut tokens = d.tokens();
            // the far pair goes in first so gap1 stays valid
            match config {
                R2Config::Crossed => {
                    tokens.insert(*gap2, v.clone());
                    tokens.insert(*gap2, u.clone());
                }
                R2Config::Nested => {
                    tokens.insert(*gap2, u.clone());
                    tokens.insert(*gap2, v.clone());
                }
            }
            tokens.insert(*gap1, v);
            tokens.insert(*gap1, u);
            ChordDiagram::from_tokens(kind, &tokens)
        }
        MoveDescriptor::R2Remove { chord1, chord2 } => {
            let site = r2_site(d, chord1, chord2)?;
            let mut tokens = d.tokens();
            for &p in site.positions.iter().rev() {
                tokens.remove(p - 1);
            }
            ChordDiagram::from_tokens(kind, &tokens)
        }
        MoveDescriptor::R3 { sites } => {
            r3_check(d, sites)?;
            let mut tokens = d.tokens();
            for &(p, q) in sites {
                tokens.swap(p - 1, q - 1);
            }
            ChordDiagram::from_tokens(kind, &tokens)
        }
    }
}

// Gaps a closed diagram enumerates; gap L is omitted as a rotation of gap 0.
fn enumerable_gaps(d: &ChordDiagram) -> std::ops::RangeInclusive<usize> {
    match d.kind() {
        DiagramKind::Long => 0..=d.len(),
        DiagramKind::Closed => 0..=d.len().max(1) - 1,
    }
}

fn adjacent_sites(d: &ChordDiagram) -> Vec<(usize, usize)> {
    let len = d.len();
    let mut sites: Vec<(usize, usize)> = (1..len).map(|p| (p, p + 1)).collect();
    if d.is_closed() && len >= 2 {
        sites.push((len, 1));
    }
    sites
}

/// Every applicable move, in a fixed deterministic order: removals, then
/// triangle moves, then (budget permitting) additions.
pub fn enumerate_moves(
    d: &ChordDiagram,
    allow_increasing: bool,
    max_chords: usize,
) -> Vec<MoveDescriptor> {
    let mut out = Vec::new();
    let chords = d.chords();

    for c in &chords {
        if r1_site(d, &c.label).is_ok() {
            out.push(MoveDescriptor::R1Remove { chord: c.label.clone() });
        }
    }

    for i in 0..chords.len() {
        for j in (i + 1)..chords.len() {
            if r2_site(d, &chords[i].label, &chords[j].label).is_ok() {
                out.push(MoveDescriptor::R2Remove {
                    chord1: chords[i].label.clone(),
                    chord2: chords[j].label.clone(),
                });
            }
        }
    }

    let sites = adjacent_sites(d);
    let mut odd_ids: Option<Vec<bool>> = None;
    for i in 0..sites.len() {
        for j in (i + 1)..sites.len() {
            for k in (j + 1)..sites.len() {
                let triple = [sites[i], sites[j], sites[k]];
                if r3_check(d, &triple).is_ok() {
                    if cfg!(debug_assertions) {
                        // triangles hold 0 or 2 odd chords, never 1 or 3
                        let odd = odd_ids.get_or_insert_with(|| {
                            crate::parity::classify(d)
                                .classes()
                                .iter()
                                .map(|c| c.parity == crate::parity::Parity::Odd)
                                .collect()
                        });
                        let mut ids: Vec<usize> = triple
                            .iter()
                            .flat_map(|&(p, q)| [d.id_at(p), d.id_at(q)])
                            .collect();
                        ids.sort_unstable();
                        ids.dedup();
                        let count = ids.iter().filter(|&&id| odd[id]).count();
                        debug_assert!(
                            count == 0 || count == 2,
                            "triangle with {count} odd chords in {d}"
                        );
                    }
                    out.push(MoveDescriptor::R3 { sites: triple });
                }
            }
        }
    }

    if allow_increasing {
        let n = d.n();
        if n < max_chords {
            for gap in enumerable_gaps(d) {
                out.push(MoveDescriptor::R1Add { gap });
            }
        }
        if n + 2 <= max_chords {
            for gap1 in enumerable_gaps(d) {
                for gap2 in gap1..=*enumerable_gaps(d).end() {
                    for config in [R2Config::Crossed, R2Config::Nested] {
                        out.push(MoveDescriptor::R2Add { gap1, gap2, config });
                    }
                }
            }
        }
    }
    out
}

/// Descriptor undoing `m`, given the diagrams before and after. Removals of
/// basepoint-straddling sites on closed diagrams have no inverse descriptor
/// (additions never create straddling pairs) and report as unsupported.
pub fn inverse_move(
    before: &ChordDiagram,
    m: &MoveDescriptor,
    after: &ChordDiagram,
) -> Result<MoveDescriptor> {
    match m {
        MoveDescriptor::R1Add { gap } => {
            Ok(MoveDescriptor::R1Remove { chord: after.label_at(gap + 1).to_string() })
        }
        MoveDescriptor::R1Remove { chord } => {
            let (c, wrap_only) = r1_site(before, chord)?;
            if wrap_only {
                return Err(Error::Unsupported(
                    "basepoint-straddling removal has no inverse descriptor".into(),
                ));
            }
            Ok(MoveDescriptor::R1Add { gap: c.first - 1 })
        }
        MoveDescriptor::R2Add { gap1, .. } => Ok(MoveDescriptor::R2Remove {
            chord1: after.label_at(gap1 + 1).to_string(),
            chord2: after.label_at(gap1 + 2).to_string(),
        }),
        MoveDescriptor::R2Remove { chord1, chord2 } => {
            let site = r2_site(before, chord1, chord2)?;
            if site.wrap_only {
                return Err(Error::Unsupported(
                    "basepoint-straddling removal has no inverse descriptor".into(),
                ));
            }
            let ps = site.positions;
            let c1 = find_chord(before, chord1)?;
            let config = if owns(&c1, ps[0]) == owns(&c1, ps[2]) {
                R2Config::Crossed
            } else {
                R2Config::Nested
            };
            Ok(MoveDescriptor::R2Add { gap1: ps[0] - 1, gap2: ps[2] - 3, config })
        }
        MoveDescriptor::R3 { sites } => Ok(MoveDescriptor::R3 { sites: *sites }),
    }
}

/// Deliberate corruption hooks for harness self-tests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tamper {
    None,
    /// After the first step, apply the first endpoint transposition that
    /// shifts the diagram's invariant key, silently corrupting the walk.
    /// Diagrams where no single transposition shifts the key are left alone.
    TransposeOnce,
}

fn transpose_corrupt(d: &ChordDiagram) -> ChordDiagram {
    let key = invariant_key(d);
    let tokens = d.tokens();
    for i in 0..tokens.len() {
        for j in (i + 1)..tokens.len() {
            if tokens[i] == tokens[j] {
                continue;
            }
            let mut t = tokens.clone();
            t.swap(i, j);
            let cand = ChordDiagram::from_tokens(d.kind(), &t)
                .expect("transposition keeps the token multiset");
            if invariant_key(&cand) != key {
                return cand;
            }
        }
    }
    d.clone()
}

/// One snapshot of a walk: the diagram (display form), the move that
/// produced it (None for the start), and its invariant key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalkEntry {
    pub snapshot: String,
    pub mv: Option<MoveDescriptor>,
    pub key: InvariantKey,
}

/// Full record of a seeded walk. `violation` is the index of the first
/// entry whose key differs from the starting key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WalkReport {
    pub seed: u64,
    pub entries: Vec<WalkEntry>,
    pub truncated: bool,
    pub violation: Option<usize>,
}

impl WalkReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn steps_taken(&self) -> usize {
        self.entries.len() - 1
    }
}

/// Uniform random walk over the applicable moves, recording invariants at
/// every step. Deterministic per seed. A walk with no applicable move is
/// flagged truncated rather than failing.
pub fn random_walk(
    d: &ChordDiagram,
    steps: usize,
    seed: u64,
    max_chords: usize,
) -> Result<WalkReport> {
    random_walk_with(d, steps, seed, max_chords, Tamper::None)
}

pub fn random_walk_with(
    d: &ChordDiagram,
    steps: usize,
    seed: u64,
    max_chords: usize,
    tamper: Tamper,
) -> Result<WalkReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = d.clone();
    let mut entries = vec![WalkEntry {
        snapshot: current.to_string(),
        mv: None,
        key: invariant_key(&current),
    }];
    let mut truncated = false;
    for step in 1..=steps {
        let moves = enumerate_moves(&current, true, max_chords);
        if moves.is_empty() {
            truncated = true;
            break;
        }
        let mv = moves[rng.gen_range(0..moves.len())].clone();
        current = apply_move(&current, &mv)?;
        if tamper == Tamper::TransposeOnce && step == 1 {
            current = transpose_corrupt(&current);
        }
        entries.push(WalkEntry {
            snapshot: current.to_string(),
            mv: Some(mv),
            key: invariant_key(&current),
        });
    }
    let violation = entries.iter().position(|e| e.key != entries[0].key);
    Ok(WalkReport { seed, entries, truncated, violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn parse(s: &str) -> ChordDiagram {
        ChordDiagram::parse(s).unwrap()
    }

    #[test]
    fn empty_long_diagram_has_exactly_one_move_class() {
        let d = parse("long:");
        let moves = enumerate_moves(&d, true, 1);
        assert_eq!(moves, vec![MoveDescriptor::R1Add { gap: 0 }]);
        assert!(enumerate_moves(&d, true, 0).is_empty());
        assert!(enumerate_moves(&d, false, 10).is_empty());
    }

    #[test]
    fn empty_closed_diagram_gaps_collapse_to_one() {
        let d = parse("closed:");
        let moves = enumerate_moves(&d, true, 2);
        assert_eq!(
            moves,
            vec![
                MoveDescriptor::R1Add { gap: 0 },
                MoveDescriptor::R2Add { gap1: 0, gap2: 0, config: R2Config::Crossed },
                MoveDescriptor::R2Add { gap1: 0, gap2: 0, config: R2Config::Nested },
            ]
        );
    }

    #[test]
    fn crossed_pair_cancels_to_empty() {
        for s in ["long: A B A B", "closed: A B A B"] {
            let d = parse(s);
            let m = MoveDescriptor::R2Remove { chord1: "A".into(), chord2: "B".into() };
            assert!(enumerate_moves(&d, false, 0).contains(&m), "{s}");
            let after = apply_move(&d, &m).unwrap();
            assert!(after.is_empty(), "{s}");
            assert_eq!(after.kind(), d.kind());
        }
    }

    #[test]
    fn nested_pair_cancels_too() {
        let d = parse("long: A B B A");
        let m = MoveDescriptor::R2Remove { chord1: "A".into(), chord2: "B".into() };
        assert!(apply_move(&d, &m).unwrap().is_empty());
        // two isolated kinks side by side do not form a cancellable pair
        let kinks = parse("long: A A B B");
        let m2 = MoveDescriptor::R2Remove { chord1: "A".into(), chord2: "B".into() };
        assert!(apply_move(&kinks, &m2).is_err());
    }

    #[test]
    fn trefoil_triangle_move_matches_expected_chords() {
        let d = samples::trefoil_shadow();
        let m = MoveDescriptor::R3 { sites: [(1, 2), (3, 4), (5, 6)] };
        assert!(enumerate_moves(&d, false, 0).contains(&m));
        let after = apply_move(&d, &m).unwrap();
        let mut eps: Vec<(usize, usize)> = after.endpoints();
        eps.sort_unstable();
        assert_eq!(eps, vec![(1, 6), (2, 3), (4, 5)]);
    }

    #[test]
    fn kink_roundtrip_restores_tokens() {
        let d = samples::trefoil_shadow();
        let added = apply_move(&d, &MoveDescriptor::R1Add { gap: 3 }).unwrap();
        assert_eq!(added.n(), 4);
        let new_label = added.label_at(4).to_string();
        let removed =
            apply_move(&added, &MoveDescriptor::R1Remove { chord: new_label }).unwrap();
        assert_eq!(removed.to_string(), d.to_string());
    }

    #[test]
    fn fresh_labels_avoid_clashes() {
        let d = parse("long: D E D E");
        let added = apply_move(&d, &MoveDescriptor::R1Add { gap: 0 }).unwrap();
        let label = added.label_at(1);
        assert!(label != "D" && label != "E");
    }

    #[test]
    fn wrap_sites_exist_only_on_closed_diagrams() {
        let long = parse("long: A B B A");
        for m in enumerate_moves(&long, false, 0) {
            match m {
                MoveDescriptor::R1Remove { ref chord } => assert_eq!(chord, "B"),
                MoveDescriptor::R2Remove { .. } => {}
                ref other => panic!("unexpected {other}"),
            }
        }
        // closed, same tokens: chord A straddles the basepoint
        let closed = parse("closed: A B B A");
        assert!(enumerate_moves(&closed, false, 0)
            .contains(&MoveDescriptor::R1Remove { chord: "A".into() }));
    }

    #[test]
    fn wrap_removal_has_no_inverse_descriptor() {
        let closed = parse("closed: A B B A");
        let m = MoveDescriptor::R1Remove { chord: "A".into() };
        let after = apply_move(&closed, &m).unwrap();
        assert!(matches!(inverse_move(&closed, &m, &after), Err(Error::Unsupported(_))));
    }

    #[test]
    fn enumerated_moves_invert_exactly() {
        let diagrams = [
            samples::seven_chord(),
            samples::trefoil_shadow(),
            samples::two_crossed(),
            parse("closed: A B A C B C"),
            parse("closed: A A"),
            parse("long: A B C C B A"),
        ];
        for d in &diagrams {
            for m in enumerate_moves(d, true, d.n() + 2) {
                let after = apply_move(d, &m).unwrap();
                match inverse_move(d, &m, &after) {
                    Ok(inv) => {
                        let back = apply_move(&after, &inv).unwrap();
                        // a removal's inverse re-adds chords under fresh
                        // labels, so compare label-insensitively
                        assert_eq!(
                            back.canonical_string(),
                            d.canonical_string(),
                            "{d} under {m} then {inv}"
                        );
                        if !matches!(
                            m,
                            MoveDescriptor::R1Remove { .. } | MoveDescriptor::R2Remove { .. }
                        ) {
                            assert_eq!(back.to_string(), d.to_string(), "{d} under {m}");
                        }
                    }
                    Err(Error::Unsupported(_)) => {
                        assert!(d.is_closed(), "only wrap removals lack inverses: {m}");
                    }
                    Err(e) => panic!("unexpected error inverting {m}: {e}"),
                }
            }
        }
    }

    #[test]
    fn equal_gap_pair_addition_is_invertible() {
        let d = parse("long: A A");
        let m = MoveDescriptor::R2Add { gap1: 1, gap2: 1, config: R2Config::Crossed };
        let after = apply_move(&d, &m).unwrap();
        assert_eq!(after.n(), 3);
        let inv = inverse_move(&d, &m, &after).unwrap();
        assert_eq!(apply_move(&after, &inv).unwrap().to_string(), d.to_string());
    }

    #[test]
    fn pair_addition_configs_link_as_named() {
        let d = samples::trefoil_shadow();
        for (config, want_linked) in [(R2Config::Crossed, true), (R2Config::Nested, false)] {
            let m = MoveDescriptor::R2Add { gap1: 2, gap2: 5, config };
            let after = apply_move(&d, &m).unwrap();
            let u = after.chord_by_label(after.label_at(3)).unwrap();
            let v = after.chord_by_label(after.label_at(4)).unwrap();
            assert_eq!(after.linked(&u, &v).unwrap(), want_linked, "{config}");
            // the new pair links the same pre-existing chords
            for c in after.chords() {
                if c.label != u.label && c.label != v.label {
                    assert_eq!(
                        after.linked(&u, &c).unwrap(),
                        after.linked(&v, &c).unwrap(),
                        "{config}: chord {}",
                        c.label
                    );
                }
            }
        }
    }

    #[test]
    fn walks_are_deterministic_per_seed() {
        let d = samples::seven_chord();
        let a = random_walk(&d, 12, 99, 10).unwrap();
        let b = random_walk(&d, 12, 99, 10).unwrap();
        assert_eq!(a, b);
        let c = random_walk(&d, 12, 100, 10).unwrap();
        assert!(a.entries != c.entries, "different seeds should diverge");
    }

    #[test]
    fn walk_on_seven_chord_preserves_key() {
        let d = samples::seven_chord();
        let report = random_walk(&d, 30, 7, 12).unwrap();
        assert_eq!(report.steps_taken(), 30);
        assert!(report.passed(), "violation at {:?}", report.violation);
    }

    #[test]
    fn tampered_walk_is_flagged() {
        let d = samples::seven_chord();
        for seed in [7, 8, 9] {
            let report = random_walk_with(&d, 5, seed, 12, Tamper::TransposeOnce).unwrap();
            assert_eq!(report.violation, Some(1), "seed {seed}");
        }
    }

    #[test]
    fn walk_truncates_when_no_move_exists() {
        let d = parse("long:");
        let report = random_walk(&d, 3, 1, 0).unwrap();
        assert!(report.truncated);
        assert_eq!(report.steps_taken(), 0);
    }

    #[test]
    fn budget_gates_additions() {
        let d = samples::trefoil_shadow();
        let at_cap = enumerate_moves(&d, true, 3);
        assert!(at_cap.iter().all(|m| !matches!(m, MoveDescriptor::R1Add { .. })));
        assert!(at_cap.iter().all(|m| !matches!(m, MoveDescriptor::R2Add { .. })));
        let one_more = enumerate_moves(&d, true, 4);
        assert!(one_more.iter().any(|m| matches!(m, MoveDescriptor::R1Add { .. })));
        assert!(one_more.iter().all(|m| !matches!(m, MoveDescriptor::R2Add { .. })));
    }
}

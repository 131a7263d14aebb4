//! Words and normal forms in two groups on the generators a, b, b'.
//!
//! Tag `G`: a^2 = b^2 = b'^2 = 1 and ab = b'a, so b' = aba and the group is
//! the free product of two order-2 cyclics. Tag `Gprime`: a^2 = 1 and
//! ab = b'^-1 a, so b' = a b^-1 a and the group is the free product of an
//! order-2 cyclic with the integers. Reduction rewrites b' away and then
//! cancels inside the free product; the result is unique, so word equality
//! is normal-form equality.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    A,
    B,
    BPrime,
}

impl Generator {
    pub fn as_str(self) -> &'static str {
        match self {
            Generator::A => "a",
            Generator::B => "b",
            Generator::BPrime => "b'",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Group {
    G,
    Gprime,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::G => "g",
            Group::Gprime => "gp",
        }
    }

    /// Accepts the CLI spellings `g` and `gp`.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(Group::G),
            "gp" => Ok(Group::Gprime),
            other => Err(Error::Parse(format!("unknown group `{other}` (use g or gp)"))),
        }
    }
}

/// A word: ordered syllables (generator, nonzero exponent) under a group tag.
/// Adjacent syllables may repeat a generator; reduction merges them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupWord {
    tag: Group,
    syllables: Vec<(Generator, i64)>,
}

impl GroupWord {
    pub fn identity(tag: Group) -> Self {
        GroupWord { tag, syllables: Vec::new() }
    }

    pub fn from_syllables(tag: Group, syllables: Vec<(Generator, i64)>) -> Result<Self> {
        if let Some(&(g, _)) = syllables.iter().find(|&&(_, e)| e == 0) {
            return Err(Error::Parse(format!("zero exponent on `{g}`")));
        }
        Ok(GroupWord { tag, syllables })
    }

    /// Parses the word grammar: `1` alone, or whitespace-separated syllables
    /// `a`, `b`, `b'`, each with an optional `^<nonzero int>`.
    pub fn parse(tag: Group, text: &str) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.is_empty() {
            return Err(Error::Parse("empty word (write `1` for the identity)".into()));
        }
        if toks.len() == 1 && toks[0] == "1" {
            return Ok(Self::identity(tag));
        }
        let mut syllables = Vec::with_capacity(toks.len());
        for tok in toks {
            if tok == "1" {
                return Err(Error::Parse("`1` must stand alone".into()));
            }
            let (gen_str, exp_str) = match tok.split_once('^') {
                Some((g, e)) => (g, Some(e)),
                None => (tok, None),
            };
            let gen = match gen_str {
                "a" => Generator::A,
                "b" => Generator::B,
                "b'" => Generator::BPrime,
                other => return Err(Error::Parse(format!("unknown generator `{other}`"))),
            };
            let exp = match exp_str {
                None => 1,
                Some(e) => e
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
            };
            if exp == 0 {
                return Err(Error::Parse(format!("zero exponent in `{tok}`")));
            }
            syllables.push((gen, exp));
        }
        Ok(GroupWord { tag, syllables })
    }

    pub fn tag(&self) -> Group {
        self.tag
    }

    pub fn syllables(&self) -> &[(Generator, i64)] {
        &self.syllables
    }

    /// Total letter count, each syllable contributing |exponent|.
    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(Error::GroupMismatch(self.tag.name(), other.tag.name()));
        }
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        Ok(GroupWord { tag: self.tag, syllables })
    }

    /// Count of `a` letters, used as a structural check on diagram words.
    pub fn a_letter_count(&self) -> usize {
        self.syllables
            .iter()
            .filter(|&&(g, _)| g == Generator::A)
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syllables(f, self.syllables.iter().map(|&(g, e)| (g.as_str(), e)))
    }
}

fn write_syllables<'a, I>(f: &mut fmt::Formatter<'_>, syllables: I) -> fmt::Result
where
    I: Iterator<Item = (&'a str, i64)>,
{
    let mut any = false;
    for (i, (g, e)) in syllables.enumerate() {
        any = true;
        if i > 0 {
            f.write_str(" ")?;
        }
        if e == 1 {
            write!(f, "{g}")?;
        } else {
            write!(f, "{g}^{e}")?;
        }
    }
    if !any {
        f.write_str("1")?;
    }
    Ok(())
}

/// Generators surviving reduction; b' is always rewritten away.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NfGen {
    A,
    B,
}

impl NfGen {
    pub fn as_str(self) -> &'static str {
        match self {
            NfGen::A => "a",
            NfGen::B => "b",
        }
    }

    fn as_generator(self) -> Generator {
        match self {
            NfGen::A => Generator::A,
            NfGen::B => Generator::B,
        }
    }
}

/// Reduced word: alternating generators, a-exponents 1, b-exponents nonzero
/// (and 1 under tag `G`). Two words are equal in the group exactly when
/// their normal forms are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm {
    tag: Group,
    syllables: Vec<(NfGen, i64)>,
}

impl NormalForm {
    pub fn tag(&self) -> Group {
        self.tag
    }

    pub fn syllables(&self) -> &[(NfGen, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// The normal form read back as a plain word.
    pub fn as_word(&self) -> GroupWord {
        GroupWord {
            tag: self.tag,
            syllables: self
                .syllables
                .iter()
                .map(|&(g, e)| (g.as_generator(), e))
                .collect(),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syllables(f, self.syllables.iter().map(|&(g, e)| (g.as_str(), e)))
    }
}

// Syllable order: a before b, positive exponents before negative, small
// magnitude first. This realizes a < b < b^-1.
fn syl_key(s: &(NfGen, i64)) -> (u8, u8, i64) {
    let gen_rank = match s.0 {
        NfGen::A => 0,
        NfGen::B => 1,
    };
    let sign_rank = if s.1 >= 0 { 0 } else { 1 };
    (gen_rank, sign_rank, s.1.abs())
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        let tag_rank = |t: Group| match t {
            Group::G => 0,
            Group::Gprime => 1,
        };
        tag_rank(self.tag).cmp(&tag_rank(other.tag)).then_with(|| {
            self.syllables
                .iter()
                .map(syl_key)
                .cmp(other.syllables.iter().map(syl_key))
        })
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn norm_exp(tag: Group, g: NfGen, e: i64) -> i64 {
    match (tag, g) {
        (_, NfGen::A) => e.rem_euclid(2),
        (Group::G, NfGen::B) => e.rem_euclid(2),
        (Group::Gprime, NfGen::B) => e,
    }
}

fn push_syllable(stack: &mut Vec<(NfGen, i64)>, tag: Group, g: NfGen, e: i64) {
    let mut e = norm_exp(tag, g, e);
    if e == 0 {
        return;
    }
    if let Some(&(top, top_e)) = stack.last() {
        if top == g {
            stack.pop();
            e = norm_exp(tag, g, top_e + e);
            if e == 0 {
                return;
            }
        }
    }
    stack.push((g, e));
}

/// Rewrites b' away and cancels inside the free product. Idempotent in the
/// sense that reducing a normal form read back as a word changes nothing.
pub fn reduce(w: &GroupWord) -> NormalForm {
    let tag = w.tag;
    let mut stack: Vec<(NfGen, i64)> = Vec::new();
    for &(g, e) in &w.syllables {
        match g {
            Generator::A => push_syllable(&mut stack, tag, NfGen::A, e),
            Generator::B => push_syllable(&mut stack, tag, NfGen::B, e),
            Generator::BPrime => {
                // b'^e = a b^e a under G, a b^-e a under Gprime.
                let be = match tag {
                    Group::G => e,
                    Group::Gprime => -e,
                };
                push_syllable(&mut stack, tag, NfGen::A, 1);
                push_syllable(&mut stack, tag, NfGen::B, be);
                push_syllable(&mut stack, tag, NfGen::A, 1);
            }
        }
    }
    NormalForm { tag, syllables: stack }
}

/// Group equality via normal forms. Errors when the tags differ.
pub fn equal(w1: &GroupWord, w2: &GroupWord) -> Result<bool> {
    if w1.tag != w2.tag {
        return Err(Error::GroupMismatch(w1.tag.name(), w2.tag.name()));
    }
    Ok(reduce(w1) == reduce(w2))
}

/// Canonical conjugacy-class representative: cyclically reduced, then the
/// lexicographically least rotation under a < b < b^-1.
pub fn cyclic_normal_form(w: &GroupWord) -> NormalForm {
    let nf = reduce(w);
    let tag = nf.tag;
    let mut syl = nf.syllables;
    loop {
        let k = syl.len();
        if k < 2 || syl[0].0 != syl[k - 1].0 {
            break;
        }
        // w ~ v2..v(k-1) (vk v1) after conjugating by the first syllable
        let (g, e_first) = syl[0];
        let (_, e_last) = syl[k - 1];
        let merged = norm_exp(tag, g, e_first + e_last);
        syl = syl[1..k - 1].to_vec();
        if merged != 0 {
            syl.push((g, merged));
        }
    }
    if syl.len() > 1 {
        let k = syl.len();
        let mut best: Option<Vec<(NfGen, i64)>> = None;
        for r in 0..k {
            let mut rot = Vec::with_capacity(k);
            rot.extend_from_slice(&syl[r..]);
            rot.extend_from_slice(&syl[..r]);
            let better = match &best {
                None => true,
                Some(b) => rot.iter().map(syl_key).cmp(b.iter().map(syl_key)) == Ordering::Less,
            };
            if better {
                best = Some(rot);
            }
        }
        syl = best.unwrap();
    }
    NormalForm { tag, syllables: syl }
}

/// Retags a Gprime word as a G word, where the extra relations b^2 = b'^2 = 1
/// collapse inverses. Errors unless the input is tagged Gprime.
pub fn quotient_to_g(w: &GroupWord) -> Result<GroupWord> {
    if w.tag != Group::Gprime {
        return Err(Error::GroupMismatch(w.tag.name(), Group::Gprime.name()));
    }
    Ok(GroupWord { tag: Group::G, syllables: w.syllables.clone() })
}

/// An element of the infinite dihedral group, as an isometry of the integer
/// line: x -> x + translation, reflected or not. The generators a, b, b' map
/// to the reflections with translation 0, +1, -1, making b b' the translation
/// by +2, i.e. shift +1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DihedralElement {
    translation: i64,
    reflected: bool,
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement { translation: 0, reflected: false }
    }

    /// Applies `rhs` first, then `self`.
    pub fn compose(self, rhs: Self) -> Self {
        let rhs_t = if self.reflected { -rhs.translation } else { rhs.translation };
        DihedralElement {
            translation: self.translation + rhs_t,
            reflected: self.reflected ^ rhs.reflected,
        }
    }

    pub fn translation(&self) -> i64 {
        self.translation
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    /// Exponent k such that the translation part equals (b b')^k. None when
    /// the translation is odd; words read off diagrams always land on even
    /// translations.
    pub fn shift(&self) -> Option<i64> {
        (self.translation % 2 == 0).then_some(self.translation / 2)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reflected {
            write!(f, "reflection (translation {:+})", self.translation)
        } else {
            write!(f, "translation {:+}", self.translation)
        }
    }
}

/// Dihedral image of a word under tag G. Errors on a Gprime word.
pub fn dihedral_shift(w: &GroupWord) -> Result<DihedralElement> {
    if w.tag != Group::G {
        return Err(Error::GroupMismatch(w.tag.name(), Group::G.name()));
    }
    let mut acc = DihedralElement::identity();
    for &(g, e) in &w.syllables {
        if e.rem_euclid(2) == 0 {
            continue; // every generator squares to the identity here
        }
        let refl = match g {
            Generator::A => DihedralElement { translation: 0, reflected: true },
            Generator::B => DihedralElement { translation: 1, reflected: true },
            Generator::BPrime => DihedralElement { translation: -1, reflected: true },
        };
        acc = acc.compose(refl);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(tag: Group, s: &str) -> GroupWord {
        GroupWord::parse(tag, s).unwrap()
    }

    fn nf(tag: Group, s: &str) -> String {
        reduce(&w(tag, s)).to_string()
    }

    #[test]
    fn parse_and_display_words() {
        let word = w(Group::Gprime, "b a b a b a b b'^-1 a b'^-1 a b'^-1 a b'^-1");
        assert_eq!(word.to_string(), "b a b a b a b b'^-1 a b'^-1 a b'^-1 a b'^-1");
        assert_eq!(word.letter_len(), 14);
        assert_eq!(w(Group::G, "1").to_string(), "1");
        assert_eq!(w(Group::G, "b^-3").letter_len(), 3);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(GroupWord::parse(Group::G, "").is_err());
        assert!(GroupWord::parse(Group::G, "c").is_err());
        assert!(GroupWord::parse(Group::G, "b^0").is_err());
        assert!(GroupWord::parse(Group::G, "b^x").is_err());
        assert!(GroupWord::parse(Group::G, "1 b").is_err());
    }

    #[test]
    fn involutions_cancel() {
        for tag in [Group::G, Group::Gprime] {
            assert_eq!(nf(tag, "a a"), "1");
            assert_eq!(nf(tag, "a^2"), "1");
            assert_eq!(nf(tag, "a^-1"), "a");
        }
        assert_eq!(nf(Group::G, "b b"), "1");
        assert_eq!(nf(Group::G, "b^-1"), "b");
        assert_eq!(nf(Group::Gprime, "b b"), "b^2");
        assert_eq!(nf(Group::Gprime, "b b^-1"), "1");
    }

    #[test]
    fn bprime_rewrites_by_tag() {
        assert_eq!(nf(Group::G, "b'"), "a b a");
        assert_eq!(nf(Group::G, "b' b'"), "1");
        assert_eq!(nf(Group::Gprime, "b'"), "a b^-1 a");
        assert_eq!(nf(Group::Gprime, "b' b'"), "a b^-2 a");
        assert_eq!(nf(Group::Gprime, "b'^-1"), "a b a");
        assert_eq!(nf(Group::Gprime, "b' b'^-1"), "1");
    }

    #[test]
    fn defining_relations_hold() {
        assert!(equal(&w(Group::G, "a b"), &w(Group::G, "b' a")).unwrap());
        assert!(equal(&w(Group::Gprime, "a b"), &w(Group::Gprime, "b'^-1 a")).unwrap());
        assert!(!equal(&w(Group::G, "a b"), &w(Group::G, "b a")).unwrap());
        assert!(!equal(&w(Group::Gprime, "b b'"), &w(Group::Gprime, "b' b")).unwrap());
        assert!(!equal(&w(Group::G, "b b'"), &w(Group::G, "b' b")).unwrap());
    }

    #[test]
    fn equal_rejects_mismatched_tags() {
        assert!(equal(&w(Group::G, "a"), &w(Group::Gprime, "a")).is_err());
    }

    #[test]
    fn two_crossed_psi_word_reduces_to_identity() {
        assert_eq!(nf(Group::Gprime, "b b^-1 b b^-1"), "1");
    }

    #[test]
    fn seven_chord_words_reduce_to_staircase() {
        let expect = "b a b a b a b a b a b a b a b a";
        assert_eq!(nf(Group::G, "b a b a b a b b' a b' a b' a b'"), expect);
        assert_eq!(
            nf(Group::Gprime, "b a b a b a b b'^-1 a b'^-1 a b'^-1 a b'^-1"),
            expect
        );
    }

    #[test]
    fn reduce_is_idempotent_on_examples() {
        for (tag, s) in [
            (Group::G, "b' a b' b a a b^7"),
            (Group::Gprime, "b' a b'^-3 b a a b^7 a b^-7"),
        ] {
            let once = reduce(&w(tag, s));
            let twice = reduce(&once.as_word());
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn normal_form_alternates() {
        let f = reduce(&w(Group::Gprime, "b b b a a b^-2 b' b'"));
        for pair in f.syllables().windows(2) {
            assert_ne!(pair[0].0, pair[1].0, "adjacent syllables share a generator: {f}");
        }
    }

    #[test]
    fn cyclic_conjugation_invariance() {
        let base = w(Group::Gprime, "b a b^2");
        let conj = w(Group::Gprime, "a b a b^2 a"); // a w a^-1 with a = a^-1
        assert_eq!(cyclic_normal_form(&base), cyclic_normal_form(&conj));
        assert_eq!(cyclic_normal_form(&w(Group::Gprime, "a b a")).to_string(), "b");
        assert_eq!(cyclic_normal_form(&w(Group::G, "1")).to_string(), "1");
    }

    #[test]
    fn cyclic_picks_least_rotation() {
        // (ba)^2 cyclically: rotations "b a b a" and "a b a b"; a-first wins
        assert_eq!(cyclic_normal_form(&w(Group::G, "b a b a")).to_string(), "a b a b");
        // positive exponents rank before negative, so b^2 precedes b^-1
        assert_eq!(
            cyclic_normal_form(&w(Group::Gprime, "b^-1 a b^2 a")).to_string(),
            "a b^2 a b^-1"
        );
    }

    #[test]
    fn quotient_collapses_inverses() {
        let psi = w(Group::Gprime, "b b^-1 b'^-1 b'");
        let q = quotient_to_g(&psi).unwrap();
        assert_eq!(q.tag(), Group::G);
        assert!(equal(&q, &GroupWord::identity(Group::G)).unwrap());
        assert!(quotient_to_g(&w(Group::G, "a")).is_err());
    }

    #[test]
    fn dihedral_pinned_values() {
        let e = dihedral_shift(&w(Group::G, "b b'")).unwrap();
        assert_eq!(e.shift(), Some(1));
        assert!(!e.reflected());
        let id = dihedral_shift(&GroupWord::identity(Group::G)).unwrap();
        assert_eq!(id.shift(), Some(0));
        assert!(!id.reflected());
        let refl = dihedral_shift(&w(Group::G, "b")).unwrap();
        assert!(refl.reflected());
        assert_eq!(refl.translation(), 1);
        // odd translations fall outside the (b b')^k sublattice
        assert_eq!(dihedral_shift(&w(Group::G, "b a")).unwrap().shift(), None);
        assert!(dihedral_shift(&w(Group::Gprime, "b")).is_err());
    }

    #[test]
    fn dihedral_is_a_homomorphism_on_samples() {
        let words = [
            "a", "b", "b'", "a b", "b b'", "b' b", "a b a b'", "b^3 a b'^-2 a",
            "b' a b' a b'",
        ];
        for u in words {
            for v in words {
                let wu = w(Group::G, u);
                let wv = w(Group::G, v);
                let both = dihedral_shift(&wu.concat(&wv).unwrap()).unwrap();
                let composed =
                    dihedral_shift(&wu).unwrap().compose(dihedral_shift(&wv).unwrap());
                assert_eq!(both, composed, "failed on {u} | {v}");
            }
        }
    }

    #[test]
    fn normal_form_ordering() {
        let a = reduce(&w(Group::Gprime, "a"));
        let b = reduce(&w(Group::Gprime, "b"));
        let binv = reduce(&w(Group::Gprime, "b^-1"));
        let b2 = reduce(&w(Group::Gprime, "b^2"));
        assert!(a < b);
        assert!(b < binv);
        assert!(b < b2);
        assert!(b2 < binv);
        let id = reduce(&w(Group::Gprime, "1"));
        assert!(id < a, "the identity is the least normal form");
    }

    #[test]
    fn letter_length_parity_matches_in_g() {
        for s in ["b' a b a b b", "a", "b b'", "a b a b' a b^5"] {
            let word = w(Group::G, s);
            let f = reduce(&word);
            assert_eq!(
                word.letter_len() % 2,
                f.letter_len() % 2,
                "length parity drifted for {s}"
            );
        }
    }
}

//! Chord diagrams: fixed-point-free pairings of `2n` positions on a line
//! (long) or a circle (closed). Positions are 1-based everywhere.
//!
//! Closed diagrams carry an implicit basepoint between positions `2n` and 1;
//! the stored order is the reading order after cutting there.

use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DiagramKind {
    Long,
    Closed,
}

impl DiagramKind {
    pub fn header(self) -> &'static str {
        match self {
            DiagramKind::Long => "long",
            DiagramKind::Closed => "closed",
        }
    }
}

/// One chord with its two endpoint positions, `first < second`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chord {
    pub label: String,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChordDiagram {
    kind: DiagramKind,
    // labels[id] is the chord's token; ids run in order of first occurrence,
    // so id order equals first-endpoint order.
    labels: Vec<String>,
    // seq[i] is the chord id occupying position i + 1.
    seq: Vec<usize>,
}

fn valid_token(tok: &str) -> bool {
    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Canonical label for chord index `i`: A..Z, then AA, AB, ...
pub(crate) fn canonical_label(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

impl ChordDiagram {
    pub fn empty(kind: DiagramKind) -> Self {
        ChordDiagram { kind, labels: Vec::new(), seq: Vec::new() }
    }

    /// Builds a diagram from the token sequence in position order.
    /// Every token must occur exactly twice.
    pub fn from_tokens<S: AsRef<str>>(kind: DiagramKind, tokens: &[S]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut seq = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let tok = tok.as_ref();
            if !valid_token(tok) {
                return Err(Error::Parse(format!(
                    "invalid token `{tok}` (labels use [A-Za-z0-9_]+)"
                )));
            }
            let id = match labels.iter().position(|l| l == tok) {
                Some(id) => id,
                None => {
                    labels.push(tok.to_string());
                    labels.len() - 1
                }
            };
            seq.push(id);
        }
        let mut counts = vec![0usize; labels.len()];
        for &id in &seq {
            counts[id] += 1;
        }
        for (id, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(Error::Parse(format!(
                    "token `{}` appears {c} times (expected 2)",
                    labels[id]
                )));
            }
        }
        Ok(ChordDiagram { kind, labels, seq })
    }

    /// Parses one diagram line, e.g. `long: A B A B`.
    pub fn parse(line: &str) -> Result<Self> {
        let line = line.trim();
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` after diagram kind in `{line}`")))?;
        let kind = match head.trim() {
            "long" => DiagramKind::Long,
            "closed" => DiagramKind::Closed,
            other => return Err(Error::Parse(format!("unknown diagram kind `{other}`"))),
        };
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        Self::from_tokens(kind, &tokens)
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn is_closed(&self) -> bool {
        self.kind == DiagramKind::Closed
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of positions, always `2 * n()`.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    /// Token sequence in position order.
    pub fn tokens(&self) -> Vec<String> {
        self.seq.iter().map(|&id| self.labels[id].clone()).collect()
    }

    /// Chord id occupying a 1-based position.
    pub fn id_at(&self, pos: usize) -> usize {
        self.seq[pos - 1]
    }

    pub fn label_at(&self, pos: usize) -> &str {
        &self.labels[self.seq[pos - 1]]
    }

    /// Position of the other endpoint of the chord at `pos`.
    pub fn partner(&self, pos: usize) -> usize {
        let id = self.seq[pos - 1];
        for (i, &other) in self.seq.iter().enumerate() {
            if other == id && i + 1 != pos {
                return i + 1;
            }
        }
        unreachable!("every chord has two endpoints")
    }

    /// Endpoints per chord id, `(first, second)` with `first < second`.
    pub fn endpoints(&self) -> Vec<(usize, usize)> {
        let mut eps = vec![(0usize, 0usize); self.labels.len()];
        for (i, &id) in self.seq.iter().enumerate() {
            let pos = i + 1;
            if eps[id].0 == 0 {
                eps[id].0 = pos;
            } else {
                eps[id].1 = pos;
            }
        }
        eps
    }

    /// Chords ordered by first endpoint.
    pub fn chords(&self) -> Vec<Chord> {
        self.endpoints()
            .iter()
            .enumerate()
            .map(|(id, &(first, second))| Chord {
                label: self.labels[id].clone(),
                first,
                second,
            })
            .collect()
    }

    pub fn chord_by_label(&self, label: &str) -> Option<Chord> {
        let id = self.labels.iter().position(|l| l == label)?;
        let (first, second) = self.endpoints()[id];
        Some(Chord { label: label.to_string(), first, second })
    }

    fn check_chord(&self, c: &Chord) -> Result<()> {
        match self.chord_by_label(&c.label) {
            Some(found) if found == *c => Ok(()),
            _ => Err(Error::ChordNotFound(c.label.clone())),
        }
    }

    // Exactly one of (b1, b2) lies strictly inside (a1, a2). On a closed
    // diagram this alternation test does not depend on where the circle was
    // cut, so the same formula serves both kinds.
    pub(crate) fn alternate(a1: usize, a2: usize, b1: usize, b2: usize) -> bool {
        let in1 = a1 < b1 && b1 < a2;
        let in2 = a1 < b2 && b2 < a2;
        in1 != in2
    }

    /// Whether two chords are linked (their endpoints alternate).
    pub fn linked(&self, c: &Chord, d: &Chord) -> Result<bool> {
        self.check_chord(c)?;
        self.check_chord(d)?;
        Ok(Self::alternate(c.first, c.second, d.first, d.second))
    }

    /// Number of chords linked with `c`.
    pub fn degree(&self, c: &Chord) -> Result<usize> {
        self.check_chord(c)?;
        let eps = self.endpoints();
        let count = eps
            .iter()
            .filter(|&&(f, s)| Self::alternate(c.first, c.second, f, s))
            .count();
        Ok(count)
    }

    /// Moves the basepoint of a closed diagram: every position shifts by `k`
    /// modulo `2n`. Labels are preserved.
    pub fn rotate_basepoint(&self, k: i64) -> Result<Self> {
        if self.kind != DiagramKind::Closed {
            return Err(Error::Unsupported("rotate_basepoint needs a closed diagram".into()));
        }
        let len = self.len();
        if len == 0 {
            return Ok(self.clone());
        }
        let shift = k.rem_euclid(len as i64) as usize;
        let tokens = self.tokens();
        let mut rotated = vec![String::new(); len];
        for (i, tok) in tokens.into_iter().enumerate() {
            rotated[(i + shift) % len] = tok;
        }
        Self::from_tokens(self.kind, &rotated)
    }

    /// Cuts a closed diagram at gap `p` (after position `p`), producing the
    /// long diagram read from position `p + 1` onward. `cut(d, 0)` keeps the
    /// stored positions.
    pub fn cut(&self, gap: usize) -> Result<Self> {
        if self.kind != DiagramKind::Closed {
            return Err(Error::Unsupported("cut needs a closed diagram".into()));
        }
        let len = self.len();
        if gap >= len.max(1) {
            return Err(Error::GapOutOfRange { gap, len });
        }
        let tokens = self.tokens();
        let mut out = Vec::with_capacity(len);
        out.extend_from_slice(&tokens[gap..]);
        out.extend_from_slice(&tokens[..gap]);
        Self::from_tokens(DiagramKind::Long, &out)
    }

    /// Reinterprets a long diagram as its closure (same pairing, basepoint at
    /// the former infinity). Already-closed diagrams are returned unchanged.
    pub fn close(&self) -> Self {
        let mut d = self.clone();
        d.kind = DiagramKind::Closed;
        d
    }

    /// Mirrors the diagram: position `i` becomes `2n + 1 - i`.
    pub fn reverse(&self) -> Self {
        let mut tokens = self.tokens();
        tokens.reverse();
        Self::from_tokens(self.kind, &tokens).expect("reversal keeps tokens paired")
    }

    /// Concatenates two long diagrams; the second operand's positions shift
    /// by `2 * n1`. Clashing labels in the second operand are renamed.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        if self.kind != DiagramKind::Long || other.kind != DiagramKind::Long {
            return Err(Error::Unsupported("connected_sum needs two long diagrams".into()));
        }
        let mut tokens = self.tokens();
        let mut used: Vec<String> = self.labels.clone();
        let mut renames: Vec<(String, String)> = Vec::new();
        for lab in &other.labels {
            if used.iter().any(|u| u == lab) {
                let mut k = 2usize;
                let fresh = loop {
                    let cand = format!("{lab}_{k}");
                    if !used.iter().any(|u| u == &cand)
                        && !other.labels.iter().any(|u| u == &cand)
                    {
                        break cand;
                    }
                    k += 1;
                };
                used.push(fresh.clone());
                renames.push((lab.clone(), fresh));
            } else {
                used.push(lab.clone());
            }
        }
        for tok in other.tokens() {
            let tok = match renames.iter().find(|(from, _)| *from == tok) {
                Some((_, to)) => to.clone(),
                None => tok,
            };
            tokens.push(tok);
        }
        Self::from_tokens(DiagramKind::Long, &tokens)
    }

    /// Serialization with chords renamed A, B, C, ... in order of first
    /// occurrence. Equal strings mean equal diagrams position by position.
    pub fn canonical_string(&self) -> String {
        let mut s = String::from(self.kind.header());
        s.push(':');
        for &id in &self.seq {
            s.push(' ');
            s.push_str(&canonical_label(id));
        }
        s
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.header())?;
        for &id in &self.seq {
            write!(f, " {}", self.labels[id])?;
        }
        Ok(())
    }
}

//! Corpus files (one diagram per line) and random diagram generation.

use rand::Rng;

use crate::diagram::{canonical_label, ChordDiagram, DiagramKind};
use crate::{Error, Result};

/// Parses a corpus: one diagram per line; blank lines and lines starting
/// with `#` are skipped. Yields 1-based line numbers for error reporting.
pub fn parse_corpus(text: &str) -> Result<Vec<(usize, ChordDiagram)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let d = ChordDiagram::parse(trimmed)
            .map_err(|e| Error::ParseAt {
                line: i + 1,
                msg: match e {
                    Error::Parse(m) => m,
                    other => other.to_string(),
                },
            })?;
        out.push((i + 1, d));
    }
    Ok(out)
}

/// Uniformly random diagram with exactly `n` chords: the first open position
/// pairs with a uniformly random later open one, which makes every
/// fixed-point-free pairing of the 2n positions equally likely.
pub fn random_diagram<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    kind: DiagramKind,
) -> ChordDiagram {
    let len = 2 * n;
    let mut tokens: Vec<String> = vec![String::new(); len];
    let mut open: Vec<usize> = (0..len).collect();
    let mut next_label = 0;
    while open.len() >= 2 {
        let first = open[0];
        let j = rng.gen_range(1..open.len());
        let mate = open[j];
        let label = canonical_label(next_label);
        next_label += 1;
        tokens[first] = label.clone();
        tokens[mate] = label;
        open.remove(j);
        open.remove(0);
    }
    ChordDiagram::from_tokens(kind, &tokens).expect("pairing is a valid diagram")
}

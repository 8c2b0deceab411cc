use std::fmt;
use std::str::FromStr;

use super::FreeWordError;

/// A non-empty word over letters `x1, x2, …`, stored as zero-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SgWord(Vec<usize>);

impl SgWord {
    pub fn new(letters: Vec<usize>) -> Result<Self, FreeWordError> {
        if letters.is_empty() {
            return Err(FreeWordError::EmptyWord);
        }
        Ok(SgWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for SgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

pub(crate) fn parse_letter(tok: &str) -> Option<usize> {
    let n: usize = tok.strip_prefix('x')?.parse().ok()?;
    n.checked_sub(1)
}

impl FromStr for SgWord {
    type Err = FreeWordError;

    /// Space-separated letters, as in `x1 x2 x1`.
    fn from_str(s: &str) -> Result<Self, FreeWordError> {
        let letters = s
            .split_whitespace()
            .map(|t| parse_letter(t).ok_or_else(|| FreeWordError::Parse(t.to_string())))
            .collect::<Result<_, _>>()?;
        SgWord::new(letters)
    }
}

/// Image of a word under the letter map `map` (letter `i` goes to `map[i]`).
pub fn apply_letter_map(map: &[usize], w: &SgWord) -> SgWord {
    SgWord(w.0.iter().map(|&l| map[l]).collect())
}

/// Extends `a_i ↦ b_i` to an automorphism of the free semigroup on `k`
/// letters, returned as a permutation of the letters.
///
/// Endomorphisms never shorten words, so an assignment that extends both ways
/// sends letters to letters and is read off position by position. Letters not
/// occurring in any `a_i` go, in increasing order, to the letters not
/// occurring in any `b_i`, in increasing order.
pub fn semigroup_extend(k: usize, a: &[SgWord], b: &[SgWord]) -> Result<Vec<usize>, FreeWordError> {
    if a.len() != b.len() {
        return Err(FreeWordError::CountMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if let Some(&letter) = a.iter().chain(b).flat_map(|w| w.letters()).find(|&&l| l >= k) {
        return Err(FreeWordError::LetterOutOfRange { letter, alphabet: k });
    }
    if let Some(i) = (0..a.len()).find(|&i| a[i].len() != b[i].len()) {
        return Err(FreeWordError::LengthMismatch {
            index: i,
            left: a[i].len(),
            right: b[i].len(),
        });
    }
    let mut forced: Vec<Option<usize>> = vec![None; k];
    for (u, v) in a.iter().zip(b) {
        for (&x, &y) in u.letters().iter().zip(v.letters()) {
            match forced[x] {
                None => forced[x] = Some(y),
                Some(z) if z != y => {
                    return Err(FreeWordError::ConflictingAlignment {
                        letter: x,
                        first: z,
                        second: y,
                    })
                }
                Some(_) => {}
            }
        }
    }
    let mut preimage: Vec<Option<usize>> = vec![None; k];
    for (x, y) in forced.iter().enumerate() {
        if let Some(y) = *y {
            if let Some(p) = preimage[y] {
                return Err(FreeWordError::NotInjective {
                    letters: (p, x),
                    image: y,
                });
            }
            preimage[y] = Some(x);
        }
    }
    let mut free_targets = (0..k).filter(|&y| preimage[y].is_none());
    Ok(forced
        .iter()
        .map(|y| y.unwrap_or_else(|| free_targets.next().expect("as many free letters on both sides")))
        .collect())
}

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use super::FreeWordError;

/// A generator `x1`/`x2` (`gen` 0 or 1) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub const X1: Letter = Letter { gen: 0, inverse: false };
    pub const X2: Letter = Letter { gen: 1, inverse: false };

    pub fn inv(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.inverse { 'X' } else { 'x' };
        write!(f, "{head}{}", self.gen + 1)
    }
}

/// A freely reduced word in the free group on `x1, x2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FWord(Vec<Letter>);

/// Cancels adjacent inverse pairs until none remain.
pub fn freduce(letters: impl IntoIterator<Item = Letter>) -> FWord {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FWord(out)
}

impl FWord {
    pub fn identity() -> Self {
        FWord(Vec::new())
    }

    pub fn generator(gen: u8) -> Self {
        assert!(gen < 2, "rank two");
        FWord(vec![Letter { gen, inverse: false }])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> FWord {
        FWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, n: u32) -> FWord {
        (0..n).fold(FWord::identity(), |acc, _| &acc * self)
    }
}

impl Mul for &FWord {
    type Output = FWord;

    fn mul(self, rhs: &FWord) -> FWord {
        freduce(self.0.iter().chain(&rhs.0).copied())
    }
}

impl fmt::Display for FWord {
    /// Letters separated by spaces, capitals for inverses, `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for FWord {
    type Err = FreeWordError;

    /// Space-separated `x1 x2 X1 X2`, reduced on the way in; `1` or nothing
    /// is the identity.
    fn from_str(s: &str) -> Result<Self, FreeWordError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let l = match tok {
                "1" => continue,
                "x1" => Letter::X1,
                "x2" => Letter::X2,
                "X1" => Letter::X1.inv(),
                "X2" => Letter::X2.inv(),
                _ => return Err(FreeWordError::Parse(tok.to_string())),
            };
            letters.push(l);
        }
        Ok(freduce(letters))
    }
}

/// Image of `w` under the endomorphism sending `x1, x2` to `images`.
pub fn apply_f2_endo(images: (&FWord, &FWord), w: &FWord) -> FWord {
    let inverses = (images.0.inverse(), images.1.inverse());
    freduce(w.0.iter().flat_map(|l| {
        let img = match (l.gen, l.inverse) {
            (0, false) => images.0,
            (0, true) => &inverses.0,
            (_, false) => images.1,
            (_, true) => &inverses.1,
        };
        img.0.iter().copied()
    }))
}

/// Exponent sums of `x1` and `x2`.
pub fn abelianize(w: &FWord) -> (i64, i64) {
    let mut sums = [0i64; 2];
    for l in &w.0 {
        sums[l.gen as usize] += if l.inverse { -1 } else { 1 };
    }
    (sums[0], sums[1])
}

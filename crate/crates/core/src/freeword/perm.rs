use std::fmt;
use std::ops::Mul;

use super::FWord;

/// A permutation of `{1, 2, 3}` in one-line notation: `images[i - 1]` is the
/// image of `i`.
///
/// Products compose left to right: `(P · Q)(i) = Q(P(i))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([1, 2, 3]);

    pub fn new(images: [u8; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &x in &images {
            if !(1..=3).contains(&x) || seen[x as usize - 1] {
                return None;
            }
            seen[x as usize - 1] = true;
        }
        Some(Perm3(images))
    }

    /// All six permutations in lexicographic order of their one-line form.
    pub fn all() -> [Perm3; 6] {
        [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]].map(Perm3)
    }

    pub fn images(&self) -> [u8; 3] {
        self.0
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    pub fn inverse(&self) -> Perm3 {
        let mut out = [0; 3];
        for i in 1..=3u8 {
            out[self.apply(i) as usize - 1] = i;
        }
        Perm3(out)
    }

    pub fn is_even(&self) -> bool {
        let inversions = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| self.0[i] > self.0[j]);
        inversions.count() % 2 == 0
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn pow(&self, n: u32) -> Perm3 {
        (0..n).fold(Perm3::IDENTITY, |acc, _| acc * *self)
    }

    /// Whether `self` and `other` generate all of `S3`.
    pub fn generates_with(&self, other: &Perm3) -> bool {
        let mut group = vec![Perm3::IDENTITY];
        let mut i = 0;
        while i < group.len() {
            for g in [self, other] {
                let p = group[i] * *g;
                if !group.contains(&p) {
                    group.push(p);
                }
            }
            i += 1;
        }
        group.len() == 6
    }
}

impl Mul for Perm3 {
    type Output = Perm3;

    fn mul(self, rhs: Perm3) -> Perm3 {
        Perm3([1, 2, 3].map(|i| rhs.apply(self.apply(i))))
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{}{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Image under the homomorphism `F2 → S3` with `x1 ↦ (213)`, `x2 ↦ (132)`.
pub fn s3_image(w: &FWord) -> Perm3 {
    let gens = [Perm3([2, 1, 3]), Perm3([1, 3, 2])];
    w.letters().iter().fold(Perm3::IDENTITY, |acc, l| {
        let g = gens[l.gen as usize];
        acc * if l.inverse { g.inverse() } else { g }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(s: &str) -> String {
        s3_image(&s.parse().unwrap()).to_string()
    }

    #[test]
    fn stated_values() {
        assert_eq!(img("x1 x2"), "(312)");
        assert_eq!(img("x2 x1"), "(231)");
        assert_eq!(img("x1 x2 x1"), "(321)");
        assert_eq!(img("x2 x1 x2"), "(321)");
        assert_eq!(img("x1 x1"), "(123)");
        assert_eq!(img("x2 x2"), "(123)");
        assert!(s3_image(&"X1 X2 x1 x2".parse().unwrap()).is_even());
    }

    #[test]
    fn group_structure() {
        for p in Perm3::all() {
            assert_eq!(p * p.inverse(), Perm3::IDENTITY);
            for q in Perm3::all() {
                assert_eq!((p * q).is_even(), p.is_even() == q.is_even());
            }
        }
        assert_eq!(Perm3::all().iter().filter(|p| p.is_even()).count(), 3);
        assert!(Perm3([2, 1, 3]).generates_with(&Perm3([1, 3, 2])));
        assert!(!Perm3([3, 1, 2]).generates_with(&Perm3([2, 3, 1])));
        assert!(Perm3::new([1, 1, 2]).is_none());
    }
}

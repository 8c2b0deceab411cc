//! Replay of the certificate that `a = x1² x2 x1⁻¹ x2` and `b = x1 x2` lie in
//! different automorphism orbits of `F2` although endomorphisms map each to
//! the other.
//!
//! An automorphism `φ` with `φ(a) = b` is determined by `w1 = φ(x1)` and
//! `w2 = φ(x2)` with `w1² w2 w1⁻¹ w2 = x1 x2`. Composing with `γ: F2 → S3`
//! gives `P² Q P⁻¹ Q = γ(x1 x2)` for `P = γ(w1)`, `Q = γ(w2)`. Signs force
//! `P` even, surjectivity of `γ ∘ φ` forces `P, Q` to generate `S3`, and the
//! six remaining pairs all give the identity instead.

use std::fmt;

use super::{abelianize, apply_f2_endo, s3_image, FWord, FreeWordError, Perm3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One surviving pair `(P, Q)` and the value of `P² Q P⁻¹ Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Case {
    pub p: Perm3,
    pub q: Perm3,
    pub value: Perm3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Report {
    pub checks: Vec<Check>,
    pub cases: Vec<Case>,
    /// `γ(x1 x2)`, the value every case would need.
    pub target: Perm3,
}

impl F2Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn contradictions(&self) -> usize {
        self.cases.iter().filter(|c| c.value != self.target).count()
    }

    /// `Err` naming the first failed check.
    pub fn ensure_passed(&self) -> Result<(), FreeWordError> {
        match self.checks.iter().find(|c| !c.passed) {
            Some(c) => Err(FreeWordError::CheckFailed(c.name.clone())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for F2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", c.name, c.detail)?;
        }
        for (i, c) in self.cases.iter().enumerate() {
            writeln!(
                f,
                "case {}: P={} Q={} P^2 Q P^-1 Q = {} vs {}",
                i + 1,
                c.p,
                c.q,
                c.value,
                self.target
            )?;
        }
        writeln!(
            f,
            "{}: {}/{} contradiction cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.contradictions(),
            self.cases.len()
        )
    }
}

fn word(s: &str) -> FWord {
    s.parse().expect("well-formed literal")
}

fn relator(p: Perm3, q: Perm3) -> Perm3 {
    p.pow(2) * q * p.inverse() * q
}

/// Replays every step of the certificate.
pub fn verify_f2_counterexample() -> F2Report {
    let a = word("x1 x1 x2 X1 x2");
    let b = word("x1 x2");
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.into(),
            passed,
            detail,
        })
    };

    let sigma = (word("x1 x2"), FWord::identity());
    let tau = (word("x1 x1 x2"), word("X1 x2"));
    let sa = apply_f2_endo((&sigma.0, &sigma.1), &a);
    let tb = apply_f2_endo((&tau.0, &tau.1), &b);
    check(
        "forward endomorphism",
        sa == b,
        format!("sigma(x1)={}, sigma(x2)={}: sigma(a) = {sa}", sigma.0, sigma.1),
    );
    check(
        "backward endomorphism",
        tb == a,
        format!("tau(x1)={}, tau(x2)={}: tau(b) = {tb}", tau.0, tau.1),
    );

    // φ(a) = w1² w2 w1⁻¹ w2, so ab(φ(a)) = e1·ab(w1) + e2·ab(w2) with (e1, e2) = ab(a)
    let (e1, e2) = abelianize(&a);
    let ab_b = abelianize(&b);
    check(
        "abelianization",
        (e1, e2) == (1, 2) && ab_b == (1, 1),
        format!(
            "ab(a) = ({e1}, {e2}), ab(b) = ({}, {}), so l1+2m1 = l2+2m2 = 1",
            ab_b.0, ab_b.1
        ),
    );
    let parity = (-20i64..=20)
        .flat_map(|l| (-20i64..=20).map(move |m| (l, m)))
        .filter(|&(l, m)| e1 * l + e2 * m == 1)
        .all(|(l, _)| l % 2 != 0);
    check(
        "parity",
        parity,
        "every solution of l+2m=1 with |l|,|m| <= 20 has l odd, so both exponent sums of w1 are odd".into(),
    );

    let stated = [
        ("x1", "(213)"),
        ("x2", "(132)"),
        ("x1 x2", "(312)"),
        ("x2 x1", "(231)"),
        ("x1 x2 x1", "(321)"),
        ("x2 x1 x2", "(321)"),
        ("x1 x1", "(123)"),
        ("x2 x2", "(123)"),
    ];
    let mismatched: Vec<_> = stated
        .iter()
        .filter(|(w, p)| s3_image(&word(w)).to_string() != *p)
        .map(|(w, _)| *w)
        .collect();
    check(
        "S3 values",
        mismatched.is_empty(),
        stated
            .iter()
            .map(|(w, _)| format!("g({w})={}", s3_image(&word(w))))
            .collect::<Vec<_>>()
            .join(", "),
    );

    let target = s3_image(&b);
    let pairs: Vec<(Perm3, Perm3)> = Perm3::all()
        .into_iter()
        .flat_map(|p| Perm3::all().into_iter().map(move |q| (p, q)))
        .collect();
    let sign_rule = pairs.iter().all(|&(p, q)| relator(p, q).sign() == p.sign());
    let signed: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(p, _)| p.is_even() == target.is_even())
        .collect();
    check(
        "sign filter",
        sign_rule && target.is_even() && signed.len() == 18,
        format!(
            "sign(P^2 Q P^-1 Q) = sign(P) on all 36 pairs and {target} is even, so P is even \
             (reconstructed step; agrees with the parity check, since g sends x1 and x2 to transpositions): {} pairs remain",
            signed.len()
        ),
    );
    let generating: Vec<_> = signed.iter().copied().filter(|(p, q)| p.generates_with(q)).collect();
    let expected_p = [s3_image(&word("x1 x2")), s3_image(&word("x2 x1"))];
    let expected_q = [
        s3_image(&word("x1")),
        s3_image(&word("x2")),
        s3_image(&word("x1 x2 x1")),
    ];
    let shape = generating.len() == 6
        && generating
            .iter()
            .all(|(p, q)| expected_p.contains(p) && expected_q.contains(q));
    check(
        "generation filter",
        shape,
        format!(
            "g composed with an automorphism is onto S3, so P and Q generate S3 (reconstructed step): \
             P in {{{}, {}}}, Q in {{{}, {}, {}}}, {} pairs remain",
            expected_p[0],
            expected_p[1],
            expected_q[0],
            expected_q[1],
            expected_q[2],
            generating.len()
        ),
    );

    let cases: Vec<Case> = generating
        .iter()
        .map(|&(p, q)| Case {
            p,
            q,
            value: relator(p, q),
        })
        .collect();
    let all_identity = cases.iter().all(|c| c.value == Perm3::IDENTITY);
    check(
        "contradiction",
        cases.len() == 6 && all_identity && target != Perm3::IDENTITY,
        format!(
            "every remaining pair gives {} but g(x1 x2) = {target}; no automorphism sends a to b",
            Perm3::IDENTITY
        ),
    );
    F2Report { checks, cases, target }
}

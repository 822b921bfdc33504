//! Named verification suites: every identity the library is built on, run
//! exhaustively over a caller-chosen range and reported with witnesses.
//!
//! The exhaustive suites (`psi`, `orbits`) enumerate all of `S_n` and are
//! capped; the polynomial suites run off the `fast` engine and share its
//! soft cap.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use crate::bipoly::{BiPoly, Var};
use crate::engine;
use crate::gamma;
use crate::perm::{
    all_permutations, append_letter, orbit, prepend_letter, psi, ExtendedWord, PairKind,
    Permutation,
};
use crate::report::VerificationReport;
use crate::unipoly::UniPoly;

/// The suites the CLI can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Palindromic,
    ClosedForm,
    Psi,
    Orbits,
    Diagonal,
    All,
}

impl Suite {
    /// Largest `n_max` the suite accepts (the `S_n`-enumerating suites are
    /// exhaustive and capped low).
    pub fn cap(self) -> u32 {
        match self {
            Suite::Psi | Suite::Orbits => 10,
            Suite::Palindromic | Suite::ClosedForm | Suite::Diagonal => engine::DEFAULT_FAST_CAP,
            Suite::All => 10,
        }
    }

    /// Default `n_max` used when the caller does not supply one.
    pub fn default_n_max(self) -> u32 {
        match self {
            Suite::Palindromic => 14,
            Suite::ClosedForm => 12,
            Suite::Psi => 8,
            Suite::Orbits => 8,
            Suite::Diagonal => 10,
            Suite::All => 8,
        }
    }
}

/// Runs one suite. For [`Suite::All`] every suite runs at the smaller of
/// `n_max` and its own default.
pub fn run_suite(suite: Suite, n_max: u32) -> Vec<VerificationReport> {
    match suite {
        Suite::Palindromic => palindromic_suite(n_max),
        Suite::ClosedForm => closed_form_suite(n_max),
        Suite::Psi => psi_suite(n_max),
        Suite::Orbits => orbit_suite(n_max),
        Suite::Diagonal => diagonal_suite(n_max),
        Suite::All => {
            let mut all = Vec::new();
            for s in [Suite::Palindromic, Suite::ClosedForm, Suite::Psi, Suite::Orbits, Suite::Diagonal]
            {
                all.extend(run_suite(s, n_max.min(s.default_n_max())));
            }
            all
        }
    }
}

fn report<F>(name: &str, n_range: (u32, u32), body: F) -> VerificationReport
where
    F: FnOnce() -> Option<serde_json::Value>,
{
    let started = Instant::now();
    match body() {
        None => VerificationReport::pass(name, n_range, started.elapsed()),
        Some(witness) => VerificationReport::fail(name, n_range, witness, started.elapsed()),
    }
}

/// Symmetry of `Ã_n`: darga-`⌊n/2⌋` palindromicity, the raw exponent
/// mirror on `A_n` itself, and invariance of `Ã_n` under variable swap.
pub fn palindromic_suite(n_max: u32) -> Vec<VerificationReport> {
    let polys: Vec<(u32, BiPoly)> = (1..=n_max).map(|n| (n, engine::fast(n))).collect();
    vec![
        report("palindromic-darga", (1, n_max), || {
            for (n, a) in &polys {
                let tilde = engine::a_tilde_from(*n, a);
                if !tilde.is_palindromic(n / 2) {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
        report("reciprocal-mirror", (1, n_max), || {
            // A_n(p,q) = p^⌊n/2⌋ q^⌊(n-1)/2⌋ A_n(1/p, 1/q)
            for (n, a) in &polys {
                match a.reciprocal(n / 2, (n - 1) / 2) {
                    Ok(mirrored) if mirrored == *a => {}
                    _ => return Some(json!({"n": n})),
                }
            }
            None
        }),
        report("swap-symmetry", (1, n_max), || {
            for (n, a) in &polys {
                let tilde = engine::a_tilde_from(*n, a);
                if tilde.swap_vars() != tilde {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
    ]
}

/// The two closed forms: `A_n(p,1)` and `A_n(1,q)` as scaled binomial
/// powers.
pub fn closed_form_suite(n_max: u32) -> Vec<VerificationReport> {
    let polys: Vec<(u32, BiPoly)> = (1..=n_max).map(|n| (n, engine::fast(n))).collect();
    let one = BigInt::one();
    vec![
        report("closed-form-odes", (1, n_max), || {
            for (n, a) in &polys {
                if a.specialize(Var::Q, &one) != engine::closed_form_odes(*n) {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
        report("closed-form-edes", (1, n_max), || {
            for (n, a) in &polys {
                if a.specialize(Var::P, &one) != engine::closed_form_edes(*n) {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
    ]
}

fn counts_of(word: &ExtendedWord) -> (usize, usize) {
    word.descent_counts()
}

/// The complement/reversal-complement dualities and the boundary-word
/// bijection, exhaustively over `S_n`.
pub fn psi_suite(n_max: u32) -> Vec<VerificationReport> {
    let mut reports = vec![
        report("complement-duality", (1, n_max), || {
            for n in 1..=n_max {
                for pi in all_permutations(n as usize) {
                    let (odes, edes) = pi.descent_counts();
                    let (odes_c, edes_c) = pi.complement().descent_counts();
                    if odes + odes_c != (n as usize) / 2
                        || edes + edes_c != (n as usize - 1) / 2
                    {
                        return Some(json!({"n": n, "perm": pi.to_string()}));
                    }
                }
            }
            None
        }),
        report("rc-statistic-swap", (1, n_max), || {
            for n in (1..=n_max).filter(|n| n % 2 == 1) {
                for pi in all_permutations(n as usize) {
                    let (odes, edes) = pi.descent_counts();
                    let (odes_rc, edes_rc) = pi.reversal_complement().descent_counts();
                    if odes_rc != edes || edes_rc != odes {
                        return Some(json!({"n": n, "perm": pi.to_string()}));
                    }
                }
            }
            None
        }),
        report("boundary-statistics", (2, n_max), || {
            // the eight identities for π(2k+1), π0, (2k+1)π and 0π
            for m in (2..=n_max).filter(|m| m % 2 == 0) {
                let boundary = m + 1;
                for pi in all_permutations(m as usize) {
                    let (odes, edes) = pi.descent_counts();
                    let appended_hi = counts_of(&append_letter(&pi, boundary).unwrap());
                    let appended_lo = counts_of(&append_letter(&pi, 0).unwrap());
                    let prepended_hi = counts_of(&prepend_letter(boundary, &pi).unwrap());
                    let prepended_lo = counts_of(&prepend_letter(0, &pi).unwrap());
                    let ok = appended_hi == (odes, edes)
                        && appended_lo == (odes, edes + 1)
                        && prepended_hi == (edes + 1, odes)
                        && prepended_lo == (edes, odes);
                    if !ok {
                        return Some(json!({"n": m, "perm": pi.to_string()}));
                    }
                }
            }
            None
        }),
        report("psi-statistic-transfer", (2, n_max), || {
            for m in (2..=n_max).filter(|m| m % 2 == 0) {
                let boundary = m + 1;
                for pi in all_permutations(m as usize) {
                    let (odes_rc, edes_rc) = pi.reversal_complement().descent_counts();
                    let from_zero = counts_of(&psi(&append_letter(&pi, 0).unwrap()).unwrap());
                    let from_hi = counts_of(&psi(&append_letter(&pi, boundary).unwrap()).unwrap());
                    if from_zero != (edes_rc + 1, odes_rc) || from_hi != (edes_rc, odes_rc) {
                        return Some(json!({"n": m, "perm": pi.to_string()}));
                    }
                }
            }
            None
        }),
    ];
    reports.push(report("psi-bijectivity", (2, n_max.min(8)), || {
        // ψ applied to every word of S'_2k must produce S''_2k exactly.
        for m in (2..=n_max.min(8)).filter(|m| m % 2 == 0) {
            let boundary = m + 1;
            let mut image: BTreeSet<ExtendedWord> = BTreeSet::new();
            let mut codomain: BTreeSet<ExtendedWord> = BTreeSet::new();
            for pi in all_permutations(m as usize) {
                for x in [0, boundary] {
                    let out = match psi(&append_letter(&pi, x).unwrap()) {
                        Ok(out) => out,
                        Err(e) => return Some(json!({"n": m, "error": e.to_string()})),
                    };
                    if !image.insert(out) {
                        return Some(json!({"n": m, "perm": pi.to_string(), "collision": true}));
                    }
                }
                codomain.insert(prepend_letter(0, &pi).unwrap());
                codomain.insert(prepend_letter(boundary, &pi).unwrap());
            }
            if image != codomain {
                return Some(json!({"n": m, "image_size": image.len()}));
            }
        }
        None
    }));
    reports
}

fn orbit_statistic_report(
    name: &'static str,
    n_max: u32,
    kind: PairKind,
    statistic: fn(&Permutation) -> usize,
) -> VerificationReport {
    report(name, (1, n_max), move || {
        for n in 1..=n_max {
            let pairs = kind.pair_count(n as usize) as u32;
            let mut representatives = 0u64;
            for pi in all_permutations(n as usize) {
                let orb = orbit(&pi, kind);
                if orb.representative != pi {
                    continue; // each orbit is inspected once, via its representative
                }
                representatives += 1;
                if orb.len() != 1usize << pairs {
                    return Some(json!({"n": n, "perm": pi.to_string(), "orbit_size": orb.len()}));
                }
                // Σ over the orbit of x^statistic must be (1+x)^pairs.
                let mut sum = UniPoly::zero();
                for sigma in &orb.members {
                    sum.add_term(statistic(sigma) as u32, BigInt::one());
                }
                let expected = UniPoly::from_coeffs([(0, BigInt::one()), (1, BigInt::one())]).pow(pairs);
                if sum != expected {
                    return Some(json!({"n": n, "perm": pi.to_string(), "sum": sum.to_string()}));
                }
            }
            let expected_orbits = engine::factorial(n) / (BigInt::one() << pairs);
            if BigInt::from(representatives) != expected_orbits {
                return Some(json!({"n": n, "orbit_count": representatives}));
            }
        }
        None
    })
}

/// Group-action laws of the pair-swap maps: orbit sizes, orbit statistic
/// sums, orbit counts, and the `|S|`-descent property of the
/// representatives.
pub fn orbit_suite(n_max: u32) -> Vec<VerificationReport> {
    vec![
        orbit_statistic_report("orbit-odd-pairs", n_max, PairKind::OddPairs, |p| {
            p.descent_counts().0
        }),
        orbit_statistic_report("orbit-even-pairs", n_max, PairKind::EvenPairs, |p| {
            p.descent_counts().1
        }),
        report("representative-swap-grading", (1, n_max), || {
            // odes(φ_S(π̂)) = |S| for every subset, and the even-pairs twin.
            for n in 1..=n_max {
                for pi in all_permutations(n as usize) {
                    for (kind, statistic) in [
                        (PairKind::OddPairs, 0usize),
                        (PairKind::EvenPairs, 1usize),
                    ] {
                        let rep = orbit(&pi, kind).representative;
                        let pairs = kind.pair_count(n as usize);
                        for mask in 0u64..(1 << pairs) {
                            let subset: BTreeSet<usize> =
                                (1..=pairs).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                            let moved = match kind {
                                PairKind::OddPairs => crate::perm::varphi(&rep, &subset),
                                PairKind::EvenPairs => crate::perm::phi_even(&rep, &subset),
                            }
                            .expect("subset indices are in range");
                            let counts = moved.descent_counts();
                            let got = if statistic == 0 { counts.0 } else { counts.1 };
                            if got != subset.len() {
                                return Some(json!({
                                    "n": n,
                                    "perm": pi.to_string(),
                                    "subset": subset,
                                }));
                            }
                        }
                    }
                }
                // quadratic in orbit size; keep the grading check modest
                if n >= 8 {
                    break;
                }
            }
            None
        }),
    ]
}

/// Diagonal and sanity identities of the engine output.
pub fn diagonal_suite(n_max: u32) -> Vec<VerificationReport> {
    let polys: Vec<(u32, BiPoly)> = (1..=n_max).map(|n| (n, engine::fast(n))).collect();
    vec![
        report("diagonal-eulerian", (1, n_max), || {
            for (n, a) in &polys {
                if a.diagonal() != engine::classical_eulerian(*n) {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
        report("total-count", (1, n_max), || {
            let one = BigInt::one();
            for (n, a) in &polys {
                if a.eval(&one, &one) != engine::factorial(*n) {
                    return Some(json!({"n": n}));
                }
            }
            None
        }),
        report("top-monomial", (1, n_max), || {
            for (n, a) in &polys {
                let top = a.top_terms();
                let expected = ((n / 2, (n - 1) / 2), BigInt::one());
                if top.len() != 1 || top[0] != expected {
                    return Some(json!({"n": n, "top_terms": format!("{top:?}")}));
                }
            }
            None
        }),
        report("gamma-positivity", (1, n_max), || {
            for n in 1..=n_max {
                let check = gamma::conjecture_check(n);
                if !check.passed {
                    return Some(json!({
                        "n": n,
                        "coeffs": check.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    }));
                }
            }
            None
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_small_n() {
        for suite in [Suite::Palindromic, Suite::ClosedForm, Suite::Psi, Suite::Orbits, Suite::Diagonal] {
            for r in run_suite(suite, 5) {
                assert!(r.passed, "{}", r.summary_line());
            }
        }
    }

    #[test]
    fn all_runs_every_suite() {
        let reports = run_suite(Suite::All, 5);
        assert!(reports.len() >= 12);
        assert!(reports.iter().all(|r| r.passed));
    }
}

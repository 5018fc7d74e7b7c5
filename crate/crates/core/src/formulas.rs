//! Closed-form total eccentricity values for the extremal families, in exact
//! integer arithmetic. Each function rejects parameters outside the range
//! where the expression is known to hold.

use crate::error::{invalid, Result};
use crate::families::FamilySpec;

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        invalid(what())
    }
}

/// `floor((3n^2 - 2n) / 4)`, the path `P_n`.
pub fn eps_path(n: u64) -> Result<u64> {
    require(n >= 1, || format!("eps_path needs n >= 1, got {n}"))?;
    Ok((3 * n * n - 2 * n) / 4)
}

/// `n * floor(n / 2)`, the cycle `C_n`.
pub fn eps_cycle(n: u64) -> Result<u64> {
    require(n >= 3, || format!("eps_cycle needs n >= 3, got {n}"))?;
    Ok(n * (n / 2))
}

/// `2n - 1`, the star `K_{1,n-1}`, for `n >= 3`; `K_{1,1} = K_2` has 2.
pub fn eps_star(n: u64) -> Result<u64> {
    require(n >= 2, || format!("eps_star needs n >= 2, got {n}"))?;
    Ok(if n == 2 { 2 } else { 2 * n - 1 })
}

/// `n` for `K_n` with `n >= 2`; `K_1` has total eccentricity 0.
pub fn eps_complete(n: u64) -> Result<u64> {
    require(n >= 1, || format!("eps_complete needs n >= 1, got {n}"))?;
    Ok(if n == 1 { 0 } else { n })
}

/// `floor((3n^2 - k^2 - 2nk + 2(n + k)) / 4)`: maximum over connected graphs
/// with `k` pendant vertices, attained by every `T(l, k-l, n-k)`. Accepted for
/// `2 <= k <= n-2`; at `k = n-2` the brooms are double stars.
pub fn eps_double_broom_max(n: u64, k: u64) -> Result<u64> {
    require(k >= 2 && k + 2 <= n, || format!("eps_double_broom_max needs 2 <= k <= n-2, got n={n}, k={k}"))?;
    // 3n^2 - 2nk - k^2 = (3n + k)(n - k)
    Ok(((3 * n + k) * (n - k) + 2 * (n + k)) / 4)
}

/// `C^n_{3,3}`: `(3n^2 - 6n - 8)/4` for even `n`, `(3n^2 - 6n - 9)/4` for odd.
pub fn eps_c33(n: u64) -> Result<u64> {
    require(n >= 6, || format!("eps_c33 needs n >= 6, got {n}"))?;
    let base = 3 * n * n - 6 * n;
    Ok(if n.is_multiple_of(2) { (base - 8) / 4 } else { (base - 9) / 4 })
}

/// `floor((3n^2 - 4n - 3) / 4)`: maximum over unicyclic graphs, `U^l_{n,3}`.
pub fn eps_unicyclic_max(n: u64) -> Result<u64> {
    require(n >= 5, || format!("eps_unicyclic_max needs n >= 5, got {n}"))?;
    Ok((3 * n * n - 4 * n - 3) / 4)
}

/// Balanced `K^n_{n-s}` with `q = floor(n / (n-s))` and `r = n - (n-s)q`.
pub fn eps_kmn_balanced(n: u64, s: u64) -> Result<u64> {
    require(n >= 2 && s + 2 <= n, || format!("eps_kmn_balanced needs 0 <= s <= n-2, got n={n}, s={s}"))?;
    let m = n - s;
    let q = n / m;
    let r = n - m * q;
    let (num, den) = match r {
        0 => (n * (2 * n + s), 2 * m),
        1 => (q * (3 * m * q + m + 2), 2),
        _ => (2 * r * (2 * q + 1) + q * (3 * q + 1) * m, 2),
    };
    assert_eq!(num % den, 0, "eps_kmn_balanced({n}, {s}) is not integral");
    Ok(num / den)
}

/// Shared-vertex dumbbell `C^n_{m1,m2}`, `n = m1 + m2 - 1`, with `m1 >= m2`.
/// The four parity cases are asymmetric, so the order is not normalized here;
/// see [`eps_dumbbell_shared_any`].
pub fn eps_dumbbell_shared(m1: u64, m2: u64) -> Result<u64> {
    require(m2 >= 3 && m1 >= m2, || format!("eps_dumbbell_shared needs m1 >= m2 >= 3, got ({m1}, {m2})"))?;
    let s = m1 * m1 + m2 * m2 + m1 * m2;
    let num = match (m1.is_multiple_of(2), m2.is_multiple_of(2)) {
        (true, true) => s - m1,
        (true, false) => s - m1 - m2,
        (false, true) => s - 2 * m1 + 1,
        (false, false) => s - 2 * m1 - m2,
    };
    debug_assert_eq!(num % 2, 0);
    Ok(num / 2)
}

/// [`eps_dumbbell_shared`] with the arguments put in decreasing order.
pub fn eps_dumbbell_shared_any(a: u64, b: u64) -> Result<u64> {
    eps_dumbbell_shared(a.max(b), a.min(b))
}

/// `U^p_{n,g}`: `ng/2 + n - g + 1` for even `g`, `n(g-1)/2 + n - g + 2` for odd.
pub fn eps_tadpole_p(n: u64, g: u64) -> Result<u64> {
    require(g >= 3 && g < n, || format!("eps_tadpole_p needs 3 <= g <= n-1, got n={n}, g={g}"))?;
    Ok(if g.is_multiple_of(2) {
        n * g / 2 + n - g + 1
    } else {
        n * (g - 1) / 2 + n - g + 2
    })
}

/// `U^l_{n,n-1}`: `n(n-2)/2 + 3` for even `n`, `n(n-1)/2 + 2` for odd.
pub fn eps_lollipop_max(n: u64) -> Result<u64> {
    require(n >= 4, || format!("eps_lollipop_max needs n >= 4, got {n}"))?;
    Ok(if n.is_multiple_of(2) { n * (n - 2) / 2 + 3 } else { n * (n - 1) / 2 + 2 })
}

/// Which closed form applies to a family member, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    Path,
    Cycle,
    Star,
    Complete,
    DoubleBroomMax,
    C33,
    UnicyclicMax,
    KmnBalanced,
    DumbbellShared,
    TadpoleP,
    LollipopMax,
}

impl ClosedForm {
    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::Path => "eps_path",
            ClosedForm::Cycle => "eps_cycle",
            ClosedForm::Star => "eps_star",
            ClosedForm::Complete => "eps_complete",
            ClosedForm::DoubleBroomMax => "eps_double_broom_max",
            ClosedForm::C33 => "eps_c33",
            ClosedForm::UnicyclicMax => "eps_unicyclic_max",
            ClosedForm::KmnBalanced => "eps_kmn_balanced",
            ClosedForm::DumbbellShared => "eps_dumbbell_shared",
            ClosedForm::TadpoleP => "eps_tadpole_p",
            ClosedForm::LollipopMax => "eps_lollipop_max",
        }
    }
}

/// Closed-form total eccentricity for a family member, when one is known
/// and the parameters are inside its range.
pub fn closed_form(spec: &FamilySpec) -> Option<(ClosedForm, u64)> {
    let u = |x: usize| x as u64;
    let hit = |f: ClosedForm, v: Result<u64>| v.ok().map(|v| (f, v));
    match *spec {
        FamilySpec::Path(n) => hit(ClosedForm::Path, eps_path(u(n))),
        FamilySpec::Cycle(n) => hit(ClosedForm::Cycle, eps_cycle(u(n))),
        FamilySpec::Complete(n) => hit(ClosedForm::Complete, eps_complete(u(n))),
        FamilySpec::Star(n) => hit(ClosedForm::Star, eps_star(u(n))),
        FamilySpec::DoubleBroom { l, m, d } if l >= 1 && m >= 1 => {
            hit(ClosedForm::DoubleBroomMax, eps_double_broom_max(u(l + m + d), u(l + m)))
        }
        FamilySpec::TadpoleL { n, g } if g == 3 && n >= 5 => hit(ClosedForm::UnicyclicMax, eps_unicyclic_max(u(n))),
        FamilySpec::TadpoleL { n, g } if g + 1 == n => hit(ClosedForm::LollipopMax, eps_lollipop_max(u(n))),
        FamilySpec::TadpoleP { n, g } => hit(ClosedForm::TadpoleP, eps_tadpole_p(u(n), u(g))),
        FamilySpec::Dumbbell { m1, m2, n } if n + 1 == m1 + m2 => {
            hit(ClosedForm::DumbbellShared, eps_dumbbell_shared_any(u(m1), u(m2)))
        }
        FamilySpec::Dumbbell { m1: 3, m2: 3, n } => hit(ClosedForm::C33, eps_c33(u(n))),
        FamilySpec::CompleteWithPaths(ref ls) => {
            let lo = ls.iter().min()?;
            let hi = ls.iter().max()?;
            if hi - lo > 1 || ls.len() < 2 {
                return None;
            }
            let n: usize = ls.iter().sum();
            hit(ClosedForm::KmnBalanced, eps_kmn_balanced(u(n), u(n - ls.len())))
        }
        FamilySpec::CompleteWithPendants { n, k: 0 } => hit(ClosedForm::Complete, eps_complete(u(n))),
        // P_n^k with k >= 1: one center of eccentricity 1, all others 2
        FamilySpec::CompleteWithPendants { n, .. } => hit(ClosedForm::Star, eps_star(u(n))),
        _ => None,
    }
}

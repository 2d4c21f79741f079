//! Linearity of the absorbing degree under powers, `ω(I^m) = m·ω(I)`.
//!
//! Exact criteria exist for irreducible and primary ideals and for any
//! ideal in two variables; everything else is probed power by power and
//! reported as "linear up to `m`". Two-variable integral closure is
//! computed from the Newton polygon of the staircase.

use serde::Serialize;

use crate::decomposition::{staircase, IrreducibleComponent, PrimaryComponent};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial};
use crate::omega::{omega_with, OmegaOptions, OmegaValue};

/// A yes/no answer with the criterion that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub reason: String,
}

impl Verdict {
    fn new(holds: bool, reason: impl Into<String>) -> Self {
        Verdict {
            holds,
            reason: reason.into(),
        }
    }
}

/// `(x_1^{a_1}, ..., x_m^{a_m})` is linear iff at most one `a_i` exceeds 1.
pub fn is_omega_linear_irreducible(t: &IrreducibleComponent) -> Verdict {
    let big: Vec<Exp> = t
        .powers()
        .into_iter()
        .map(|(_, d)| d)
        .filter(|&d| d > 1)
        .collect();
    if big.len() <= 1 {
        Verdict::new(
            true,
            "at most one exponent exceeds 1, so ω(T^m) = m·ω(T) for every m",
        )
    } else {
        Verdict::new(
            false,
            format!("{} exponents exceed 1, so ω(T^2) < 2·ω(T)", big.len()),
        )
    }
}

/// A primary ideal is linear iff `ω(Q) = a_s`, the largest pure-power
/// exponent among its generators.
pub fn is_omega_linear_primary(q: &PrimaryComponent) -> Verdict {
    let w = q.noether_exponent();
    let a_s = largest_pure_power(q.ideal());
    let holds = w == a_s as u64;
    let rel = if holds { "=" } else { "≠" };
    Verdict::new(
        holds,
        format!(
            "ω(Q) = {w} {rel} {a_s}, the largest pure-power exponent (criterion valid for all m)"
        ),
    )
}

fn largest_pure_power(ideal: &MonomialIdeal) -> Exp {
    ideal
        .gens()
        .iter()
        .filter(|g| g.pure_power_var().is_some())
        .map(Monomial::max_exp)
        .max()
        .unwrap_or(0)
}

/// `ω(T^m) = (m - 1)·a_s + ω(T)` for irreducible `T`.
pub fn omega_power_irreducible(t: &IrreducibleComponent, m: u32) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroPower);
    }
    Ok((m as u64 - 1) * t.max_exponent() as u64 + t.noether_exponent())
}

fn require_two_vars(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.nvars() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            found: ideal.nvars(),
        });
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(())
}

/// In two variables, `I` is linear iff `ω(I) = max{a_1 + b_1, a_r + b_r}`.
pub fn is_omega_linear_2d(ideal: &MonomialIdeal) -> Result<Verdict> {
    require_two_vars(ideal)?;
    let w = crate::omega::two_variable_formula(ideal);
    let s = staircase(ideal);
    let (first, last) = (s[0], s[s.len() - 1]);
    let ends = (first.0 as u64 + first.1 as u64).max(last.0 as u64 + last.1 as u64);
    let holds = w == ends;
    let rel = if holds { "=" } else { "≠" };
    Ok(Verdict::new(
        holds,
        format!(
            "ω(I) = {w} {rel} {ends}, the larger end-generator degree (criterion valid for all m)"
        ),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerRow {
    pub m: u32,
    pub omega: OmegaValue,
    /// `m·ω(I)`, or its bounds.
    pub scaled: OmegaValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PowerVerdict {
    LinearUpTo {
        m_max: u32,
    },
    NotLinear {
        first_m: u32,
    },
    /// Some row only has bounds and no row already refutes linearity.
    Inconclusive {
        first_m: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerTable {
    pub rows: Vec<PowerRow>,
    pub verdict: PowerVerdict,
}

/// Computes `ω(I^m)` for `m = 1..=m_max` and compares with `m·ω(I)`.
pub fn check_linearity_by_powers(ideal: &MonomialIdeal, m_max: u32) -> Result<PowerTable> {
    if m_max == 0 {
        return Err(Error::ZeroPower);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let opts = OmegaOptions::default().without_certificates();
    let base = omega_with(ideal, &opts).value;
    let mut rows = Vec::with_capacity(m_max as usize);
    let mut verdict = None;
    for m in 1..=m_max {
        let omega = omega_with(&ideal.power(m)?, &opts).value;
        let scaled = match base {
            OmegaValue::Exact(v) => OmegaValue::Exact(m as u64 * v),
            OmegaValue::Bounds { lo, hi } => OmegaValue::Bounds {
                lo: m as u64 * lo,
                hi: m as u64 * hi,
            },
        };
        match (omega, scaled) {
            (OmegaValue::Exact(a), OmegaValue::Exact(b)) if a != b => {
                verdict.get_or_insert(PowerVerdict::NotLinear { first_m: m });
            }
            (OmegaValue::Exact(_), OmegaValue::Exact(_)) => {}
            _ if omega.hi() < scaled.lo() || omega.lo() > scaled.hi() => {
                verdict.get_or_insert(PowerVerdict::NotLinear { first_m: m });
            }
            _ => {
                verdict.get_or_insert(PowerVerdict::Inconclusive { first_m: m });
            }
        }
        rows.push(PowerRow { m, omega, scaled });
    }
    Ok(PowerTable {
        rows,
        verdict: verdict.unwrap_or(PowerVerdict::LinearUpTo { m_max }),
    })
}

/// The integral closure of a two-variable monomial ideal: monomials whose
/// exponent lies on or above the lower convex hull of the staircase.
pub fn integral_closure_2d(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    require_two_vars(ideal)?;
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let s = staircase(ideal);
    let (a_max, b_max) = (s[0].0, s[s.len() - 1].1);
    let mut members = Vec::new();
    for u in 0..=a_max {
        // the lowest v with (u, v) in the Newton polygon; columns scan upward
        if let Some(v) = (0..=b_max).find(|&v| in_newton_polygon(&s, u, v)) {
            members.push(Monomial::new(vec![u, v]));
        }
    }
    MonomialIdeal::minimalize(ideal.ring(), members)
}

/// Membership of `(u, v)` in `conv(staircase) + ℝ²₊`: it dominates a
/// staircase point or lies above a segment joining two of them.
fn in_newton_polygon(s: &[(Exp, Exp)], u: Exp, v: Exp) -> bool {
    let (u, v) = (u as i64, v as i64);
    if s.iter().any(|&(a, b)| a as i64 <= u && b as i64 <= v) {
        return true;
    }
    for (i, &(ai, bi)) in s.iter().enumerate() {
        for &(aj, bj) in &s[i + 1..] {
            let (ai, bi, aj, bj) = (ai as i64, bi as i64, aj as i64, bj as i64);
            // ai > aj; the point on the segment with first coordinate u
            if aj <= u && u <= ai && v * (ai - aj) >= (u - aj) * bi + (ai - u) * bj {
                return true;
            }
        }
    }
    false
}

pub fn is_integrally_closed_2d(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(&integral_closure_2d(ideal)? == ideal)
}

/// Slow closure test: `u^k ∈ I^k` for some `1 ≤ k ≤ k_max`.
pub fn closure_membership_by_powers(
    ideal: &MonomialIdeal,
    u: &Monomial,
    k_max: u32,
) -> Result<bool> {
    for k in 1..=k_max {
        let uk = (1..k).fold(u.clone(), |acc, _| acc.mul(u));
        if ideal.power(k)?.contains_monomial(&uk)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// When `I` and `J` both pass the two-variable criterion, so must `IJ`.
/// Returns false only on a counterexample.
pub fn product_preserves_linearity_check(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    require_two_vars(i)?;
    require_two_vars(j)?;
    if !(is_omega_linear_2d(i)?.holds && is_omega_linear_2d(j)?.holds) {
        return Ok(true);
    }
    Ok(is_omega_linear_2d(&i.product(j)?)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::PrimaryComponent;
    use crate::monomial::Ring;
    use crate::omega::omega;
    use crate::text::parse_ideal;

    fn xy(s: &str) -> MonomialIdeal {
        parse_ideal(s, Some(&Ring::new(&["x", "y"]).unwrap())).unwrap()
    }

    fn xyz(s: &str) -> MonomialIdeal {
        parse_ideal(s, Some(&Ring::new(&["x", "y", "z"]).unwrap())).unwrap()
    }

    #[test]
    fn irreducible_criterion() {
        let t = |s| IrreducibleComponent::new(xyz(s)).unwrap();
        assert!(is_omega_linear_irreducible(&t("x^3, y, z")).holds);
        assert!(!is_omega_linear_irreducible(&t("x^2, y^2")).holds);
        assert!(is_omega_linear_irreducible(&t("x")).holds);
    }

    #[test]
    fn primary_criterion() {
        let q = |s| PrimaryComponent::new(xy(s)).unwrap();
        assert!(is_omega_linear_primary(&q("x^3, x*y, y^2")).holds);
        assert!(is_omega_linear_primary(&q("x^3, x*y^2, y^4")).holds);
        assert!(!is_omega_linear_primary(&q("x^2, y^2")).holds);
    }

    #[test]
    fn irreducible_powers() {
        let t = |s| IrreducibleComponent::new(xy(s)).unwrap();
        assert_eq!(omega_power_irreducible(&t("x, y"), 3).unwrap(), 3);
        assert_eq!(omega_power_irreducible(&t("x^2, y"), 2).unwrap(), 4);
        assert_eq!(omega_power_irreducible(&t("x^2, y^2"), 2).unwrap(), 5);
        assert_eq!(
            omega(&xy("x^2, y^2").power(2).unwrap()).exact_value(),
            Some(5)
        );
        assert_eq!(
            omega(&xy("x^2, y").power(2).unwrap()).exact_value(),
            Some(4)
        );
    }

    #[test]
    fn two_variable_criterion() {
        assert!(is_omega_linear_2d(&xy("x^3, x*y^2, y^4")).unwrap().holds);
        assert!(!is_omega_linear_2d(&xy("x^2, y^2")).unwrap().holds);
        assert!(is_omega_linear_2d(&xy("x^2*y^3")).unwrap().holds);
        assert!(is_omega_linear_2d(&xyz("x")).is_err());
    }

    #[test]
    fn power_tables() {
        let t = check_linearity_by_powers(&xy("x, y"), 3).unwrap();
        assert_eq!(t.verdict, PowerVerdict::LinearUpTo { m_max: 3 });
        assert!(t
            .rows
            .iter()
            .all(|r| r.omega == OmegaValue::Exact(r.m as u64)));
        let t = check_linearity_by_powers(&xy("x^2, y^2"), 2).unwrap();
        assert_eq!(t.verdict, PowerVerdict::NotLinear { first_m: 2 });
        assert_eq!(t.rows[1].omega, OmegaValue::Exact(5));
    }

    #[test]
    fn product_of_linear_pair() {
        let i = xy("x^3, x*y, y^2");
        let j = xy("x^2, x*y, y^3");
        let p = i.product(&j).unwrap();
        assert_eq!(p, xy("x^5, x^3*y, x^2*y^2, x*y^3, y^5"));
        assert_eq!(omega(&p).exact_value(), Some(5));
        assert!(product_preserves_linearity_check(&i, &j).unwrap());
        assert_eq!(omega(&i.intersect(&j).unwrap()).exact_value(), Some(3));
    }

    #[test]
    fn closures() {
        let i = xy("x^3, x*y^2, y^4");
        let c = integral_closure_2d(&i).unwrap();
        let x2y = Monomial::new(vec![2, 1]);
        assert!(c.contains_monomial(&x2y).unwrap());
        assert!(!i.contains_monomial(&x2y).unwrap());
        assert!(closure_membership_by_powers(&i, &x2y, 3).unwrap());
        assert!(!is_integrally_closed_2d(&i).unwrap());
        assert!(is_omega_linear_2d(&i).unwrap().holds);

        assert_eq!(integral_closure_2d(&xy("x, y")).unwrap(), xy("x, y"));
        assert_eq!(
            integral_closure_2d(&xy("x^2, y^2")).unwrap(),
            xy("x^2, x*y, y^2")
        );
        assert!(is_integrally_closed_2d(&xy("x^2, x*y, y^2")).unwrap());
        assert_eq!(integral_closure_2d(&xy("x^2*y^3")).unwrap(), xy("x^2*y^3"));
        // gcd factors carry through
        assert_eq!(
            integral_closure_2d(&xy("x^3*y, x*y^3")).unwrap(),
            xy("x^3*y, x^2*y^2, x*y^3")
        );
    }
}

//! Information-flow policies over finite traces, as HRE templates.
//!
//! Every distinguished symbol of a template (`l`, `lλ`, `h`, `hl`, …) is an
//! opaque role bound to one symbol of Σ. The formulas are the published
//! ones, including their admitted brevity: observational determinism and
//! TSNI list only the cases the formulas print.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{Component, Hre, Regex};
use crate::{Error, Quantifier, Result, Sigma};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolicyId {
    /// Noninterference: `∀x₁∃x₂ (l, lλ)*`.
    Ni,
    /// Observational determinism.
    Od,
    /// Generalized noninterference.
    Gni,
    /// Declassification: `∀x₁∀x₂ (li,li)(pw,pw)(lo,lo)⁺`.
    Dc,
    /// Termination-sensitive noninterference.
    Tsni,
}

impl PolicyId {
    pub const ALL: [PolicyId; 5] = [
        PolicyId::Ni,
        PolicyId::Od,
        PolicyId::Gni,
        PolicyId::Dc,
        PolicyId::Tsni,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolicyId::Ni => "ni",
            PolicyId::Od => "od",
            PolicyId::Gni => "gni",
            PolicyId::Dc => "dc",
            PolicyId::Tsni => "tsni",
        }
    }

    pub fn from_name(s: &str) -> Option<PolicyId> {
        PolicyId::ALL.into_iter().find(|p| p.name() == s)
    }

    /// Roles that must be bound to symbols.
    pub fn roles(self) -> &'static [&'static str] {
        match self {
            PolicyId::Ni => &["l", "l_lambda"],
            PolicyId::Od | PolicyId::Tsni => &["l"],
            PolicyId::Gni => &["h", "l", "hl", "nh_l", "h_nl", "nh_nl"],
            PolicyId::Dc => &["li", "pw", "lo"],
        }
    }
}

/// Builds the template for `id` with each role replaced by the symbol
/// `bindings` maps it to. Unbound roles default to a symbol of the same
/// name.
pub fn policy(id: PolicyId, bindings: &[(&str, &str)], sigma: &Sigma) -> Result<Hre> {
    let bind = |role: &str| -> Result<String> {
        let sym = bindings
            .iter()
            .find(|(r, _)| *r == role)
            .map_or(role, |(_, s)| *s);
        if sigma.symbol(sym).is_none() {
            return Err(Error::UnknownSymbol(format!("{sym} (bound to role {role})")));
        }
        Ok(sym.to_string())
    };
    for (role, _) in bindings {
        if !id.roles().contains(role) {
            return Err(Error::PreconditionViolated(format!(
                "policy {} has no role {role}",
                id.name()
            )));
        }
    }
    let sym = |s: &String| Component::Sym(s.clone());
    let not = |s: &String| Component::Not(s.clone());
    let letter = |c: Vec<Component>| Regex::Letter(c);
    let any2 = || Regex::star(letter(vec![Component::Any, Component::Any]));
    let vars = |qs: &[Quantifier]| -> Vec<(Quantifier, String)> {
        qs.iter()
            .enumerate()
            .map(|(i, &q)| (q, format!("x{}", i + 1)))
            .collect()
    };
    use Quantifier::{Exists as E, Forall as A};
    let hre = match id {
        PolicyId::Ni => {
            let (l, ll) = (bind("l")?, bind("l_lambda")?);
            Hre {
                prefix: vars(&[A, E]),
                body: Regex::star(letter(vec![sym(&l), sym(&ll)])),
            }
        }
        PolicyId::Od => {
            let l = bind("l")?;
            Hre {
                prefix: vars(&[A, A]),
                body: Regex::any_of([
                    Regex::plus(letter(vec![sym(&l), sym(&l)])),
                    Regex::concat(letter(vec![not(&l), not(&l)]), any2()),
                    Regex::concat(letter(vec![sym(&l), not(&l)]), any2()),
                    Regex::concat(letter(vec![not(&l), sym(&l)]), any2()),
                ]),
            }
        }
        PolicyId::Gni => {
            let (h, l) = (bind("h")?, bind("l")?);
            let (hl, nhl, hnl, nhnl) = (bind("hl")?, bind("nh_l")?, bind("h_nl")?, bind("nh_nl")?);
            Hre {
                prefix: vars(&[A, A, E]),
                body: Regex::star(Regex::any_of([
                    letter(vec![sym(&h), sym(&l), sym(&hl)]),
                    letter(vec![not(&h), sym(&l), sym(&nhl)]),
                    letter(vec![sym(&h), not(&l), sym(&hnl)]),
                    letter(vec![not(&h), not(&l), sym(&nhnl)]),
                ])),
            }
        }
        PolicyId::Dc => {
            let (li, pw, lo) = (bind("li")?, bind("pw")?, bind("lo")?);
            Hre {
                prefix: vars(&[A, A]),
                body: Regex::seq([
                    letter(vec![sym(&li), sym(&li)]),
                    letter(vec![sym(&pw), sym(&pw)]),
                    Regex::plus(letter(vec![sym(&lo), sym(&lo)])),
                ]),
            }
        }
        PolicyId::Tsni => {
            let l = bind("l")?;
            Hre {
                prefix: vars(&[A, A]),
                body: Regex::any_of([
                    Regex::seq([
                        letter(vec![sym(&l), sym(&l)]),
                        any2(),
                        letter(vec![sym(&l), sym(&l)]),
                    ]),
                    Regex::concat(letter(vec![not(&l), not(&l)]), any2()),
                    Regex::concat(letter(vec![sym(&l), not(&l)]), any2()),
                    Regex::concat(letter(vec![not(&l), sym(&l)]), any2()),
                ]),
            }
        }
    };
    Ok(hre)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfa::{member, Hyperword};
    use crate::hre::{compile, parse};
    use alloc::string::ToString;

    #[test]
    fn printed_forms() {
        let s = Sigma::new(["l", "m"]).unwrap();
        let od = policy(PolicyId::Od, &[], &s).unwrap();
        assert_eq!(
            od.to_string(),
            "forall x1. forall x2. [l,l]+|[!l,!l][_,_]*|[l,!l][_,_]*|[!l,l][_,_]*"
        );
        assert_eq!(parse(&od.to_string()).unwrap(), od);
        let ni = policy(PolicyId::Ni, &[("l_lambda", "m")], &s).unwrap();
        assert_eq!(ni.to_string(), "forall x1. exists x2. [l,m]*");
    }

    #[test]
    fn od_and_dc_members() {
        let s = Sigma::new(["l", "m"]).unwrap();
        let od = compile(&policy(PolicyId::Od, &[], &s).unwrap(), &s).unwrap();
        assert!(member(&od, &Hyperword::parse_words(&s, ["ll", "ll"]).unwrap()).unwrap());
        let s = Sigma::new(["li", "pw", "lo"]).unwrap();
        let dc = compile(&policy(PolicyId::Dc, &[], &s).unwrap(), &s).unwrap();
        assert!(member(&dc, &Hyperword::parse_words(&s, ["li.pw.lo"]).unwrap()).unwrap());
    }

    #[test]
    fn binding_errors() {
        let s = Sigma::new(["l", "m"]).unwrap();
        assert!(matches!(policy(PolicyId::Dc, &[], &s), Err(Error::UnknownSymbol(_))));
        assert!(matches!(
            policy(PolicyId::Od, &[("h", "m")], &s),
            Err(Error::PreconditionViolated(_))
        ));
        assert_eq!(PolicyId::from_name("tsni"), Some(PolicyId::Tsni));
    }
}

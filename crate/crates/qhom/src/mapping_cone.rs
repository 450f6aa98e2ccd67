//! Steenrod-module model of the mapping cone of a loop-extended map whose
//! underlying map is trivial in homology: the homology splits as base plus
//! suspended cofiber, with declared crossing relations feeding the attaching
//! data back into the base.

use std::fmt;

use serde::Deserialize;

use crate::dyer_lashof::DLWord;
use crate::f2poly::{ClassExpr, Monomial};
use crate::loopspace::SpaceSpec;
use crate::{Error, Result};

/// One crossing relation: `Sq^t_* Sigma(word) = to` in the base.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub t: u32,
    pub word: DLWord,
    pub to: ClassExpr,
}

/// A mapping-cone model `H_*(C) = H_*(base) + Sigma H_*(cofiber)`.
#[derive(Clone, Debug)]
pub struct ConeSpec {
    name: String,
    base: SpaceSpec,
    cofiber: SpaceSpec,
    crossing: Vec<Crossing>,
}

/// An element of the cone: a base class plus a cofiber class, the latter
/// stored in desuspended form (so a degree-`n` cone class has a degree-`n`
/// base part and a degree-`n-1` cofiber part).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ConeClass {
    pub base: ClassExpr,
    pub cofiber: ClassExpr,
}

impl ConeClass {
    pub fn zero() -> Self {
        ConeClass::default()
    }

    pub fn from_base(base: ClassExpr) -> Self {
        ConeClass { base, cofiber: ClassExpr::zero() }
    }

    pub fn from_cofiber(cofiber: ClassExpr) -> Self {
        ConeClass { base: ClassExpr::zero(), cofiber }
    }

    pub fn add(&self, other: &ConeClass) -> ConeClass {
        ConeClass { base: self.base.add(&other.base), cofiber: self.cofiber.add(&other.cofiber) }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.cofiber.is_zero()
    }
}

impl fmt::Display for ConeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base.is_zero(), self.cofiber.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.base),
            (true, false) => write!(f, "S({})", self.cofiber),
            (false, false) => write!(f, "{} + S({})", self.base, self.cofiber),
        }
    }
}

#[derive(Deserialize)]
struct RawCone {
    name: Option<String>,
    base: String,
    cofiber: String,
    #[serde(default)]
    crossing: Vec<RawCrossing>,
}

#[derive(Deserialize)]
struct RawCrossing {
    t: u32,
    word: String,
    to: String,
}

const KAPPA_PRESET: &str = include_str!("../data/kappa_cone.toml");

impl ConeSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawCone =
            toml::from_str(text).map_err(|e| Error::Config(format!("cone config: {e}")))?;
        let base = SpaceSpec::load(&raw.base)?;
        let cofiber = SpaceSpec::load(&raw.cofiber)?;
        let mut crossing = Vec::new();
        for c in &raw.crossing {
            let word_expr = cofiber.parse(&c.word)?;
            let mut words = word_expr.terms();
            let word = match (words.next().and_then(|m| m.word_power()), words.next()) {
                (Some((w, 1)), None) => w.clone(),
                _ => {
                    return Err(Error::Config(format!(
                        "crossing `{}` must be a single cofiber generator word",
                        c.word
                    )))
                }
            };
            let to = base.parse(&c.to)?;
            for m in to.terms() {
                // cofiber degrees carry the +1 suspension shift
                if m.degree() + c.t != word.degree() + 1 {
                    return Err(Error::Config(format!(
                        "crossing Sq[{}] S({}) = {} does not lower degree by {}",
                        c.t, c.word, c.to, c.t
                    )));
                }
            }
            crossing.push(Crossing { t: c.t, word, to });
        }
        Ok(ConeSpec {
            name: raw.name.unwrap_or_else(|| "cone".into()),
            base,
            cofiber,
            crossing,
        })
    }

    /// Loads the shipped `kappa-cone` preset or a cone config by file path.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if name_or_path == "kappa-cone" {
            return Self::from_toml_str(KAPPA_PRESET);
        }
        let text = std::fs::read_to_string(name_or_path).map_err(|e| {
            Error::Config(format!("`{name_or_path}` is neither a preset nor a readable file: {e}"))
        })?;
        Self::from_toml_str(&text)
    }

    pub fn kappa() -> Self {
        Self::from_toml_str(KAPPA_PRESET).expect("shipped preset parses")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &SpaceSpec {
        &self.base
    }

    pub fn cofiber(&self) -> &SpaceSpec {
        &self.cofiber
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossing
    }

    /// The degree-`n` slice: base monomials at `n` and cofiber monomials at
    /// `n - 1` (representing their suspensions).
    pub fn cone_basis(
        &self,
        degree: u32,
        filter: crate::loopspace::BasisFilter,
    ) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
        let base = self.base.basis(degree, filter)?;
        let cofiber =
            if degree >= 1 { self.cofiber.basis(degree - 1, filter)? } else { Vec::new() };
        Ok((base, cofiber))
    }

    /// `Sq^t_*` on a cone class. The base component maps by the base action;
    /// a cofiber class `Sigma(w)` maps by `Sigma(Sq^t_* w)` plus, when `w` is
    /// a crossed generator word at the matching `t`, the declared base
    /// correction. Decomposable cofiber terms receive no correction, and a
    /// word that properly extends a crossed generator triggers a warning
    /// instead of a silent guess at the module structure.
    pub fn steenrod(&self, t: u32, e: &ConeClass) -> (ConeClass, Vec<String>) {
        let mut warnings = Vec::new();
        let mut base_out = self.base.steenrod(t, &e.base);
        let cofiber_out = self.cofiber.steenrod(t, &e.cofiber);
        for m in e.cofiber.terms() {
            let Some((word, 1)) = m.word_power() else { continue };
            for cr in &self.crossing {
                if cr.t == t && cr.word == *word {
                    base_out = base_out.add(&cr.to);
                } else if t >= 1 && extends(word, &cr.word) {
                    warnings.push(format!(
                        "S({word}) extends the crossed generator {}; the crossing relation is \
                         declared only on the generator, so no correction is applied to the \
                         operated word",
                        cr.word
                    ));
                }
            }
        }
        (ConeClass { base: base_out, cofiber: cofiber_out }, warnings)
    }

    /// Projection to the suspended cofiber followed by desuspension: the
    /// base component is discarded.
    pub fn pinch_desuspend(&self, e: &ConeClass) -> ClassExpr {
        e.cofiber.clone()
    }
}

fn extends(word: &DLWord, stem: &DLWord) -> bool {
    word.generator() == stem.generator()
        && word.length() > stem.length()
        && word.indices().ends_with(stem.indices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopspace::BasisFilter;

    #[test]
    fn kappa_cone_degree_14_slice() {
        let cone = ConeSpec::kappa();
        let (base, cof) = cone.cone_basis(14, BasisFilter::All).unwrap();
        let base: Vec<String> = base.iter().map(|m| m.to_string()).collect();
        let cof: Vec<String> = cof.iter().map(|m| m.to_string()).collect();
        // the hand-listed monomials...
        for want in ["g3*g3*Q[5]g3", "g3*Q[8]g3"] {
            assert!(base.iter().any(|m| m == want), "missing {want}");
        }
        for want in ["a1*a1*a2", "a1*Q[5]a1", "Q[8]a2"] {
            assert!(cof.iter().any(|m| m == want), "missing {want}");
        }
        // ...plus the two the exhaustive enumeration adds.
        assert!(base.iter().any(|m| m == "Q[4]g3*Q[4]g3"));
        assert!(cof.iter().any(|m| m == "Q[9]a1"));
        assert_eq!((base.len(), cof.len()), (3, 4));
    }

    #[test]
    fn kappa_cone_degree_3() {
        let cone = ConeSpec::kappa();
        let (base, cof) = cone.cone_basis(3, BasisFilter::All).unwrap();
        assert_eq!(base.len(), 1);
        assert_eq!(base[0].to_string(), "g3");
        assert!(cof.is_empty());
    }

    #[test]
    fn crossing_relation_fires_on_the_bottom_generator() {
        let cone = ConeSpec::kappa();
        let sigma_a1 = ConeClass::from_cofiber(cone.cofiber().parse("a1").unwrap());
        let (out, warnings) = cone.steenrod(2, &sigma_a1);
        assert_eq!(out.base.to_string(), "g3");
        assert!(out.cofiber.is_zero());
        assert!(warnings.is_empty());
    }

    #[test]
    fn cofiber_words_use_nishida_and_warn_about_operated_crossings() {
        let cone = ConeSpec::kappa();
        let e = ConeClass::from_cofiber(cone.cofiber().parse("Q[8]a2").unwrap());
        let (out, warnings) = cone.steenrod(1, &e);
        assert!(out.base.is_zero());
        assert_eq!(out.cofiber.to_string(), "Q[7]a2");
        assert!(warnings.is_empty());

        let extended = ConeClass::from_cofiber(cone.cofiber().parse("Q[9]a1").unwrap());
        let (out, warnings) = cone.steenrod(2, &extended);
        assert_eq!(out.cofiber.to_string(), "Q[7]a1");
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("Q[9]a1"));
    }

    #[test]
    fn base_classes_see_only_the_base_action() {
        let cone = ConeSpec::kappa();
        let e = ConeClass::from_base(cone.base().parse("g3*Q[8]g3").unwrap());
        let (out, warnings) = cone.steenrod(2, &e);
        assert_eq!(out.base, cone.base().steenrod(2, &cone.base().parse("g3*Q[8]g3").unwrap()));
        assert!(out.cofiber.is_zero());
        assert!(warnings.is_empty());
    }

    #[test]
    fn degree_bookkeeping_and_pinch() {
        let cone = ConeSpec::kappa();
        let e = ConeClass {
            base: cone.base().parse("g3*Q[8]g3").unwrap(),
            cofiber: cone.cofiber().parse("Q[8]a2").unwrap(),
        };
        let (out, _) = cone.steenrod(2, &e);
        for m in out.base.terms() {
            assert_eq!(m.degree(), 12);
        }
        for m in out.cofiber.terms() {
            assert_eq!(m.degree(), 11);
        }
        assert_eq!(cone.pinch_desuspend(&e).to_string(), "Q[8]a2");
        assert!(cone
            .pinch_desuspend(&ConeClass::from_base(cone.base().parse("g3").unwrap()))
            .is_zero());
    }
}

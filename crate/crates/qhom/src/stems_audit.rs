//! Embedded 2-primary stable-stem data and the rule engine over it:
//! Toda-bracket definedness and classification tables, Hurewicz-status
//! rules, EHP height bounds and Adams-filtration degree bounds.
//!
//! The fact base ships as a versioned data file; the engine never infers a
//! nonvanishing product beyond what the file asserts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::f2poly::{ClassExpr, Monomial};
use crate::loopspace::{self, SpaceSpec, Variant};
use crate::{Error, Result};

const STEMS_DATA: &str = include_str!("../data/stems.toml");

/// Order of a cyclic summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

/// One stem of the 2-primary stable homotopy ring.
#[derive(Clone, Debug)]
pub struct StemEntry {
    pub stem: u32,
    pub summands: Vec<(Order, String)>,
}

impl fmt::Display for StemEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(o, g)| match o {
                Order::Infinite => format!("Z{{{g}}}"),
                Order::Finite(n) => format!("Z/{n}{{{g}}}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A scalar multiple of a named class; the name `1` is the identity class of
/// the 0-stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub coeff: u64,
    pub gen: String,
}

impl Element {
    pub fn parse(text: &str) -> Result<Element> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let digits: String = text.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &text[digits.len()..];
        let coeff: u64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| Error::Parse(format!("bad coefficient in `{text}`")))?
        };
        let gen = if rest.is_empty() { "1".to_string() } else { rest.to_string() };
        if coeff == 0 {
            return Err(Error::Parse(format!("`{text}` is the zero class")));
        }
        let ok = gen == "1"
            || gen
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '^' | '*'));
        if !ok {
            return Err(Error::Parse(format!("`{gen}` is not a valid element name")));
        }
        Ok(Element { coeff, gen })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gen == "1" {
            write!(f, "{}", self.coeff)
        } else if self.coeff == 1 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}{}", self.coeff, self.gen)
        }
    }
}

/// Result of multiplying two elements against the fact base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductValue {
    Zero,
    Element(Element),
    Unknown(String),
}

impl fmt::Display for ProductValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductValue::Zero => write!(f, "0"),
            ProductValue::Element(e) => write!(f, "{e}"),
            ProductValue::Unknown(w) => write!(f, "unknown ({w})"),
        }
    }
}

/// Hurewicz-image status of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Nonzero,
    Zero,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct StatusReport {
    pub element: String,
    pub status: Status,
    pub rule: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
struct ElementMeta {
    stem: u32,
    order: Order,
    tags: Vec<String>,
    factors: Option<(String, String)>,
    hurewicz: Option<Status>,
    rule: Option<String>,
    detail: Option<String>,
}

#[derive(Deserialize)]
struct RawFacts {
    version: u32,
    #[serde(default)]
    trivial: Vec<u32>,
    #[serde(default, rename = "stem")]
    stems: Vec<RawStem>,
    #[serde(default, rename = "product")]
    products: Vec<RawProduct>,
    #[serde(default, rename = "height")]
    heights: Vec<RawHeight>,
    #[serde(default, rename = "element")]
    elements: Vec<RawElement>,
    audit: RawAudit,
    #[serde(default, rename = "bracket_value")]
    bracket_values: Vec<RawBracketValue>,
    #[serde(default, rename = "elimination")]
    eliminations: Vec<RawElimination>,
}

#[derive(Deserialize)]
struct RawStem {
    i: u32,
    summands: Vec<RawSummand>,
}

#[derive(Deserialize)]
struct RawSummand {
    order: RawOrder,
    gen: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawOrder {
    Finite(u64),
    Word(String),
}

#[derive(Deserialize)]
struct RawProduct {
    a: String,
    b: String,
    value: String,
}

#[derive(Deserialize)]
struct RawHeight {
    elem: String,
    h: u32,
}

#[derive(Deserialize)]
struct RawElement {
    name: String,
    stem: u32,
    order: RawOrder,
    #[serde(default)]
    tags: Vec<String>,
    factors: Option<Vec<String>>,
    hurewicz: Option<String>,
    rule: Option<String>,
    detail: Option<String>,
}

#[derive(Deserialize)]
struct RawAudit {
    eta_s: Vec<u32>,
    nu_s: Vec<u32>,
    sigma_s: Vec<u32>,
}

#[derive(Deserialize)]
struct RawBracketValue {
    alpha: String,
    beta: String,
    gamma: String,
    value: String,
    rule: String,
    detail: String,
}

#[derive(Deserialize)]
struct RawElimination {
    alpha: String,
    beta: String,
    gamma: String,
    kind: String,
}

/// The loaded fact base.
pub struct FactBase {
    pub version: u32,
    trivial: BTreeSet<u32>,
    stems: BTreeMap<u32, StemEntry>,
    products: BTreeMap<(String, String), Option<Element>>,
    heights: BTreeMap<String, u32>,
    elements: BTreeMap<String, ElementMeta>,
    covered_s: BTreeMap<String, Vec<u32>>,
    bracket_values: Vec<RawBracketValue>,
    eliminations: Vec<RawElimination>,
}

impl FactBase {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawFacts =
            toml::from_str(text).map_err(|e| Error::Config(format!("stems data: {e}")))?;
        let order = |o: &RawOrder| -> Result<Order> {
            match o {
                RawOrder::Finite(n) if n.is_power_of_two() => Ok(Order::Finite(*n)),
                RawOrder::Finite(n) => {
                    Err(Error::Config(format!("order {n} is not a power of two")))
                }
                RawOrder::Word(w) if w == "inf" => Ok(Order::Infinite),
                RawOrder::Word(w) => Err(Error::Config(format!("bad order `{w}`"))),
            }
        };
        let mut stems = BTreeMap::new();
        for s in &raw.stems {
            let summands = s
                .summands
                .iter()
                .map(|r| Ok((order(&r.order)?, r.gen.clone())))
                .collect::<Result<Vec<_>>>()?;
            stems.insert(s.i, StemEntry { stem: s.i, summands });
        }
        let mut elements = BTreeMap::new();
        for e in &raw.elements {
            let factors = match &e.factors {
                None => None,
                Some(v) if v.len() == 2 => Some((v[0].clone(), v[1].clone())),
                Some(_) => {
                    return Err(Error::Config(format!(
                        "element `{}`: factors must list exactly two classes",
                        e.name
                    )))
                }
            };
            let hurewicz = match e.hurewicz.as_deref() {
                None => None,
                Some("zero") => Some(Status::Zero),
                Some("nonzero") => Some(Status::Nonzero),
                Some(other) => {
                    return Err(Error::Config(format!("bad hurewicz status `{other}`")))
                }
            };
            elements.insert(
                e.name.clone(),
                ElementMeta {
                    stem: e.stem,
                    order: order(&e.order)?,
                    tags: e.tags.clone(),
                    factors,
                    hurewicz,
                    rule: e.rule.clone(),
                    detail: e.detail.clone(),
                },
            );
        }
        let mut products = BTreeMap::new();
        for p in &raw.products {
            let key = pair_key(&p.a, &p.b);
            let value = if p.value == "0" { None } else { Some(Element::parse(&p.value)?) };
            products.insert(key, value);
        }
        let mut covered_s = BTreeMap::new();
        covered_s.insert("eta".to_string(), raw.audit.eta_s.clone());
        covered_s.insert("nu".to_string(), raw.audit.nu_s.clone());
        covered_s.insert("sigma".to_string(), raw.audit.sigma_s.clone());
        let base = FactBase {
            version: raw.version,
            trivial: raw.trivial.into_iter().collect(),
            stems,
            products,
            heights: raw.heights.into_iter().map(|h| (h.elem, h.h)).collect(),
            elements,
            covered_s,
            bracket_values: raw.bracket_values,
            eliminations: raw.eliminations,
        };
        base.check_invariants()?;
        Ok(base)
    }

    fn check_invariants(&self) -> Result<()> {
        // every stem summand has matching element metadata
        for entry in self.stems.values() {
            for (order, gen) in &entry.summands {
                if gen == "1" {
                    continue;
                }
                let meta = self.elements.get(gen).ok_or_else(|| {
                    Error::Config(format!("stem {} lists `{gen}` without metadata", entry.stem))
                })?;
                if meta.stem != entry.stem || meta.order != *order {
                    return Err(Error::Config(format!(
                        "metadata for `{gen}` disagrees with the stem table"
                    )));
                }
            }
        }
        // heights never exceed the stem (Freudenthal)
        for (elem, h) in &self.heights {
            if let Some(stem) = self.stem_of(elem) {
                if stem > 0 && *h > stem {
                    return Err(Error::Config(format!("height of `{elem}` exceeds its stem")));
                }
            }
        }
        Ok(())
    }

    /// The embedded fact base.
    pub fn embedded() -> &'static FactBase {
        static BASE: OnceLock<FactBase> = OnceLock::new();
        BASE.get_or_init(|| FactBase::from_toml_str(STEMS_DATA).expect("shipped data parses"))
    }

    pub fn load(path: &str) -> Result<FactBase> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read `{path}`: {e}")))?;
        FactBase::from_toml_str(&text)
    }

    /// Stem lookup; `None` outside the tabulated range.
    pub fn stem(&self, i: u32) -> Option<StemEntry> {
        if let Some(entry) = self.stems.get(&i) {
            return Some(entry.clone());
        }
        if self.trivial.contains(&i) {
            return Some(StemEntry { stem: i, summands: vec![] });
        }
        None
    }

    fn stem_is_trivial(&self, i: u32) -> Option<bool> {
        self.stem(i).map(|e| e.summands.is_empty())
    }

    /// Stem of a named class, from metadata or the family patterns.
    pub fn stem_of(&self, gen: &str) -> Option<u32> {
        if gen == "1" {
            return Some(0);
        }
        if let Some(meta) = self.elements.get(gen) {
            return Some(meta.stem);
        }
        if let Some(i) = family_index(gen, "eta_") {
            return Some(1u32.checked_shl(i)?);
        }
        if let Some(j) = family_index(gen, "theta_") {
            return 1u32.checked_shl(j + 1).map(|n| n - 2);
        }
        if let Some(i) = family_index(gen, "tau_") {
            return 1u32.checked_shl(i + 1).map(|n| n + 1);
        }
        None
    }

    fn order_of(&self, gen: &str) -> Option<Order> {
        if gen == "1" {
            return Some(Order::Infinite);
        }
        self.elements.get(gen).map(|m| m.order)
    }

    fn reduce(&self, coeff: u64, gen: &str) -> ProductValue {
        match self.order_of(gen) {
            Some(Order::Finite(o)) if coeff % o == 0 => ProductValue::Zero,
            Some(Order::Finite(o)) => {
                ProductValue::Element(Element { coeff: coeff % o, gen: gen.to_string() })
            }
            _ => ProductValue::Element(Element { coeff, gen: gen.to_string() }),
        }
    }

    /// Product of two classes: scalar reduction by orders, declared facts,
    /// trivial-stem and group-exponent reasoning; anything else is unknown.
    pub fn product(&self, a: &Element, b: &Element) -> ProductValue {
        let k = a.coeff.saturating_mul(b.coeff);
        if a.gen == "1" && b.gen == "1" {
            return ProductValue::Element(Element { coeff: k, gen: "1".into() });
        }
        if a.gen == "1" {
            return self.reduce(k, &b.gen);
        }
        if b.gen == "1" {
            return self.reduce(k, &a.gen);
        }
        if let Some(value) = self.products.get(&pair_key(&a.gen, &b.gen)) {
            return match value {
                None => ProductValue::Zero,
                Some(v) => self.reduce(k.saturating_mul(v.coeff), &v.gen),
            };
        }
        let (Some(sa), Some(sb)) = (self.stem_of(&a.gen), self.stem_of(&b.gen)) else {
            return ProductValue::Unknown(format!("no stem data for {} or {}", a.gen, b.gen));
        };
        let s = sa + sb;
        match self.stem_is_trivial(s) {
            Some(true) => ProductValue::Zero,
            Some(false) => {
                let exponent = self
                    .stem(s)
                    .unwrap()
                    .summands
                    .iter()
                    .map(|(o, _)| match o {
                        Order::Finite(n) => Some(*n),
                        Order::Infinite => None,
                    })
                    .try_fold(1u64, |acc, o| o.map(|o| acc.max(o)));
                match exponent {
                    Some(e) if k % e == 0 => ProductValue::Zero,
                    _ => ProductValue::Unknown(format!(
                        "the product {}*{} in stem {s} is not in the fact base",
                        a.gen, b.gen
                    )),
                }
            }
            None => ProductValue::Unknown(format!("stem {s} is outside the table")),
        }
    }

    /// Hurewicz status with the rule that decides it.
    pub fn hurewicz_status(&self, name: &str) -> Result<StatusReport> {
        let element = Element::parse(name)?;
        let display = element.to_string();
        let report = |status, rule: &str, detail: String| {
            Ok(StatusReport { element: display.clone(), status, rule: rule.into(), detail })
        };
        if element.gen == "1" {
            return report(
                Status::Unknown,
                "out-of-scope",
                "degree-zero classes are outside the positive-degree audit".into(),
            );
        }
        if element.coeff % 2 == 0 {
            return report(
                Status::Zero,
                "even-multiple",
                "the Hurewicz map is additive into an F2 vector space, so even multiples vanish"
                    .into(),
            );
        }
        if let Some(i) = family_index(&element.gen, "eta_") {
            if i >= 3 {
                return report(
                    Status::Zero,
                    "dimension-gap",
                    format!(
                        "the class factors through a complex whose top cell lies below 2^{i}; \
                         the coextension is trivial in homology"
                    ),
                );
            }
        }
        if let Some(j) = family_index(&element.gen, "theta_") {
            if (1..=6).contains(&j) {
                return report(
                    Status::Nonzero,
                    "kervaire-square",
                    "Kervaire invariant one classes map to squares of primitive classes".into(),
                );
            }
            return report(
                Status::Unknown,
                "out-of-table",
                format!("no Kervaire invariant one class is available at index {j}"),
            );
        }
        if let Some(i) = family_index(&element.gen, "tau_") {
            if i >= 3 {
                return report(
                    Status::Zero,
                    "homotopy-operation",
                    "a cup-one operation applied to a class with trivial Hurewicz image stays \
                     trivial, and the correction term is a product across distinct gradings"
                        .into(),
                );
            }
        }
        if let Some(meta) = self.elements.get(&element.gen) {
            if let Some(status) = meta.hurewicz {
                return report(
                    status,
                    meta.rule.as_deref().unwrap_or("declared"),
                    meta.detail.clone().unwrap_or_default(),
                );
            }
            if meta.tags.iter().any(|t| t == "hopf") {
                return report(
                    Status::Nonzero,
                    "hopf-invariant-one",
                    "Hopf invariant one classes are detected on the bottom generators".into(),
                );
            }
            if meta.tags.iter().any(|t| t == "kervaire") {
                return report(
                    Status::Nonzero,
                    "kervaire-square",
                    "Kervaire invariant one classes map to squares of primitive classes".into(),
                );
            }
            if meta.tags.iter().any(|t| t == "im_j") {
                return report(
                    Status::Zero,
                    "image-of-j",
                    "classes coming from the image of J have trivial Hurewicz image".into(),
                );
            }
            if let Some((f, g)) = &meta.factors {
                return self.product_status(&display, f, g);
            }
        }
        if let Some((f, g)) = element.gen.split_once('*') {
            if self.stem_of(f).is_some() && self.stem_of(g).is_some() {
                return self.product_status(&display, f, g);
            }
        }
        report(
            Status::Unknown,
            "no-rule",
            "no rule in the fact base decides this class".into(),
        )
    }

    fn product_status(&self, display: &str, f: &str, g: &str) -> Result<StatusReport> {
        let (sf, sg) = (self.stem_of(f), self.stem_of(g));
        let (Some(sf), Some(sg)) = (sf, sg) else {
            return Ok(StatusReport {
                element: display.to_string(),
                status: Status::Unknown,
                rule: "no-rule".into(),
                detail: format!("missing stem data for {f} or {g}"),
            });
        };
        if sf > 0 && sg > 0 && sf != sg {
            return Ok(StatusReport {
                element: display.to_string(),
                status: Status::Zero,
                rule: "product-distinct-gradings".into(),
                detail: format!(
                    "a product of classes in distinct positive gradings ({sf} and {sg}) factors \
                     through a cell map that vanishes in homology"
                ),
            });
        }
        if sf == sg && sf > 0 {
            return Ok(StatusReport {
                element: display.to_string(),
                status: Status::Zero,
                rule: "product-rule".into(),
                detail: "among same-grading products only the self-products of the three Hopf \
                         classes survive"
                    .to_string(),
            });
        }
        Ok(StatusReport {
            element: display.to_string(),
            status: Status::Unknown,
            rule: "no-rule".into(),
            detail: "degree-zero factors carry no product rule".into(),
        })
    }

    /// Exact height when tabulated (odd multiples share the birth sphere of
    /// the class), plus the Freudenthal upper bound `h_f <= stem(f)`.
    pub fn height_info(&self, e: &Element) -> (Option<u32>, Option<u32>) {
        if e.gen == "1" {
            return (Some(1), Some(1));
        }
        let exact = if e.coeff % 2 == 1 { self.heights.get(&e.gen).copied() } else { None };
        let upper = exact.or_else(|| self.stem_of(&e.gen).map(|s| s.max(1)));
        (exact, upper)
    }

    pub fn adams_degree_bound(&self, k: u32, square_power: Option<u32>) -> u64 {
        match square_power {
            None => (1u64 << k) - 1,
            Some(t) => (1u64 << k) - (1u64 << t),
        }
    }
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

fn family_index(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Which EHP bound is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundMode {
    /// Bound by the largest of the three birth heights.
    Stated,
    /// Bound by the heights of the two right entries only; the unstable
    /// bracket is assembled in the loop model carrying those two.
    Sharper,
}

/// EHP height bound for a defined triple bracket, with the inputs used.
pub fn ehp_bound(
    facts: &FactBase,
    mode: BoundMode,
    alpha: &Element,
    beta: &Element,
    gamma: &Element,
) -> Result<(u32, String)> {
    let mut parts = Vec::new();
    let mut need = |e: &Element| -> Result<u32> {
        let (exact, upper) = facts.height_info(e);
        let value = upper.ok_or_else(|| {
            Error::UnknownFact(format!("no height information for {e}"))
        })?;
        parts.push(match exact {
            Some(h) => format!("h({e}) = {h}"),
            None => format!("h({e}) <= {value}"),
        });
        Ok(value)
    };
    let ha = need(alpha)?;
    let hb = need(beta)?;
    let hc = need(gamma)?;
    let bound = match mode {
        BoundMode::Stated => ha.max(hb).max(hc),
        BoundMode::Sharper => hb.max(hc),
    };
    let label = match mode {
        BoundMode::Stated => "stated",
        BoundMode::Sharper => "sharper",
    };
    Ok((bound, format!("{label} mode: {}", parts.join(", "))))
}

/// True when the candidate's exact height exceeds the bound, excluding the
/// identification of the bracket with the candidate.
pub fn height_contradiction(
    facts: &FactBase,
    bound: u32,
    candidate: &Element,
) -> Result<bool> {
    let (exact, _) = facts.height_info(candidate);
    let h = exact.ok_or_else(|| {
        Error::UnknownFact(format!("no exact height for {candidate}"))
    })?;
    Ok(h > bound)
}

/// Classification outcome of one audit row.
#[derive(Clone, Debug)]
pub enum RowVerdict {
    NotDefined { witness: String },
    Excluded { reason: String },
    Defined { value: Option<String>, rule: String, detail: String, status: Status },
}

#[derive(Clone, Debug)]
pub struct BracketRow {
    pub s: u32,
    pub j: u32,
    pub k: u32,
    pub beta: String,
    pub gamma: String,
    pub bracket: String,
    pub verdict: RowVerdict,
}

#[derive(Clone, Debug)]
pub struct BracketTable {
    pub alpha: String,
    pub rows: Vec<BracketRow>,
    pub notes: Vec<String>,
    pub has_unknown: bool,
}

fn nonzero_witness(left: &Element, right: &Element, value: &Element) -> String {
    let composite = format!("{left}*{right}");
    let value = value.to_string();
    if composite == value {
        format!("{composite} != 0")
    } else {
        format!("{composite} = {value} != 0")
    }
}

/// Definedness check for one triple: both composites must vanish in the
/// fact base.
pub fn bracket_defined(
    facts: &FactBase,
    alpha: &Element,
    beta: &Element,
    gamma: &Element,
) -> std::result::Result<(), String> {
    match facts.product(beta, alpha) {
        ProductValue::Zero => {}
        ProductValue::Element(v) => return Err(nonzero_witness(beta, alpha, &v)),
        ProductValue::Unknown(w) => return Err(format!("unknown composite {beta}*{alpha}: {w}")),
    }
    match facts.product(gamma, beta) {
        ProductValue::Zero => Ok(()),
        ProductValue::Element(v) => Err(nonzero_witness(gamma, beta, &v)),
        ProductValue::Unknown(w) => Err(format!("unknown composite {gamma}*{beta}: {w}")),
    }
}

/// Full verdict for one triple: definedness with witness, then the
/// classification rules.
pub fn classify_bracket(
    facts: &FactBase,
    alpha: &Element,
    beta: &Element,
    gamma: &Element,
) -> RowVerdict {
    match bracket_defined(facts, alpha, beta, gamma) {
        Err(witness) => RowVerdict::NotDefined { witness },
        Ok(()) => classify_defined(facts, alpha, beta, gamma),
    }
}

fn candidates(facts: &FactBase, stem: u32) -> Vec<Element> {
    if stem == 0 {
        return [2u64, 4, 8, 16, 32, 64]
            .into_iter()
            .map(|coeff| Element { coeff, gen: "1".into() })
            .collect();
    }
    let Some(entry) = facts.stem(stem) else { return Vec::new() };
    let mut out = Vec::new();
    for (order, gen) in &entry.summands {
        let cap = match order {
            Order::Finite(n) => *n,
            Order::Infinite => 64,
        };
        let mut coeff = 1u64;
        while coeff < cap {
            out.push(Element { coeff, gen: gen.clone() });
            coeff *= 2;
        }
    }
    out
}

fn classify_defined(
    facts: &FactBase,
    alpha: &Element,
    beta: &Element,
    gamma: &Element,
) -> RowVerdict {
    // resolved value facts first
    for v in &facts.bracket_values {
        if v.alpha == alpha.to_string() && v.beta == beta.to_string() && v.gamma == gamma.to_string()
        {
            return RowVerdict::Defined {
                value: Some(v.value.clone()),
                rule: v.rule.clone(),
                detail: v.detail.clone(),
                status: Status::Zero,
            };
        }
    }
    // the suspension-kernel / EHP eliminations
    for e in &facts.eliminations {
        if e.alpha == alpha.to_string() && e.beta == beta.to_string() && e.gamma == gamma.to_string()
        {
            return classify_elimination(facts, &e.kind, alpha, beta, gamma);
        }
    }
    // otherwise: every class of the target group must die
    let target = facts.stem_of(&alpha.gen).unwrap_or(0)
        + facts.stem_of(&beta.gen).unwrap_or(0)
        + facts.stem_of(&gamma.gen).unwrap_or(0)
        + 1;
    target_group_verdict(facts, target)
}

fn target_group_verdict(facts: &FactBase, target: u32) -> RowVerdict {
    let Some(entry) = facts.stem(target) else {
        return RowVerdict::Defined {
            value: None,
            rule: "unknown".into(),
            detail: format!("the target stem {target} is outside the table"),
            status: Status::Unknown,
        };
    };
    if entry.summands.is_empty() {
        return RowVerdict::Defined {
            value: Some("0".into()),
            rule: "target-group".into(),
            detail: format!("the target stem {target} is trivial"),
            status: Status::Zero,
        };
    }
    let mut parts = Vec::new();
    for (_, gen) in &entry.summands {
        match facts.hurewicz_status(gen) {
            Ok(r) if r.status == Status::Zero => {
                parts.push(format!("h({gen}) = 0 [{}]", r.rule));
            }
            Ok(r) => {
                return RowVerdict::Defined {
                    value: None,
                    rule: "unknown".into(),
                    detail: format!(
                        "stem {target} contains {gen} with status {:?}; the target-group rule \
                         does not apply",
                        r.status
                    ),
                    status: Status::Unknown,
                }
            }
            Err(e) => {
                return RowVerdict::Defined {
                    value: None,
                    rule: "unknown".into(),
                    detail: e.to_string(),
                    status: Status::Unknown,
                }
            }
        }
    }
    RowVerdict::Defined {
        value: None,
        rule: "target-group".into(),
        detail: format!(
            "pi_{target} = {entry}; {}; h is additive, so the whole group dies",
            parts.join(", ")
        ),
        status: Status::Zero,
    }
}

fn classify_elimination(
    facts: &FactBase,
    kind: &str,
    alpha: &Element,
    beta: &Element,
    gamma: &Element,
) -> RowVerdict {
    let target = facts.stem_of(&alpha.gen).unwrap_or(0)
        + facts.stem_of(&beta.gen).unwrap_or(0)
        + facts.stem_of(&gamma.gen).unwrap_or(0)
        + 1;
    match kind {
        "e-kernel-square" => {
            debug_assert!(target % 2 == 1 && gamma.coeff % 2 == 0);
            RowVerdict::Defined {
                value: None,
                rule: "e-kernel-square".into(),
                detail: format!(
                    "both end maps are trivial in mod-2 homology, so the image lies in the \
                     kernel of the homology suspension: a primitive decomposable, hence a \
                     square, in odd degree {target}"
                ),
                status: Status::Zero,
            }
        }
        "ehp" => {
            let (bound, inputs) =
                match ehp_bound(facts, BoundMode::Sharper, alpha, beta, gamma) {
                    Ok(v) => v,
                    Err(e) => {
                        return RowVerdict::Defined {
                            value: None,
                            rule: "unknown".into(),
                            detail: e.to_string(),
                            status: Status::Unknown,
                        }
                    }
                };
            let entry = facts.stem(target).expect("elimination targets are tabulated");
            let mut details = Vec::new();
            for (_, gen) in &entry.summands {
                let status =
                    facts.hurewicz_status(gen).map(|r| r.status).unwrap_or(Status::Unknown);
                if status == Status::Zero {
                    continue;
                }
                let candidate = Element { coeff: 1, gen: gen.clone() };
                match height_contradiction(facts, bound, &candidate) {
                    Ok(true) => {
                        let (h, _) = facts.height_info(&candidate);
                        details.push(format!(
                            "a nonzero image forces the bracket to agree with {gen} modulo \
                             classes with trivial image, but h({gen}) = {} > {bound}",
                            h.unwrap()
                        ));
                    }
                    _ => {
                        return RowVerdict::Defined {
                            value: None,
                            rule: "unknown".into(),
                            detail: format!(
                                "no height contradiction available for {gen} at bound {bound}"
                            ),
                            status: Status::Unknown,
                        }
                    }
                }
            }
            RowVerdict::Defined {
                value: None,
                rule: "ehp-sharper".into(),
                detail: format!("{inputs}; bound {bound}; {}", details.join("; ")),
                status: Status::Zero,
            }
        }
        other => RowVerdict::Defined {
            value: None,
            rule: "unknown".into(),
            detail: format!("unrecognised elimination kind `{other}`"),
            status: Status::Unknown,
        },
    }
}

fn build_row(
    facts: &FactBase,
    alpha: &Element,
    s: u32,
    j: u32,
    k: u32,
    gamma_first: bool,
) -> Option<BracketRow> {
    let beta_pool = candidates(facts, j);
    let gamma_pool = candidates(facts, k);
    if beta_pool.is_empty() || gamma_pool.is_empty() {
        return None;
    }
    let zero = |p: &ProductValue| matches!(p, ProductValue::Zero);

    let (beta, gamma, failure) = if gamma_first {
        let gamma = gamma_pool[0].clone();
        let beta = beta_pool.iter().find(|b| {
            zero(&facts.product(b, alpha)) && zero(&facts.product(&gamma, b))
        });
        match beta {
            Some(b) => (b.clone(), gamma, None),
            None => return None,
        }
    } else {
        match beta_pool.iter().find(|b| zero(&facts.product(b, alpha))) {
            None => {
                let b = beta_pool[0].clone();
                let witness = match facts.product(&b, alpha) {
                    ProductValue::Element(v) => nonzero_witness(&b, alpha, &v),
                    ProductValue::Unknown(w) => format!("unknown composite: {w}"),
                    ProductValue::Zero => unreachable!(),
                };
                let gamma = gamma_pool
                    .iter()
                    .find(|g| zero(&facts.product(g, &b)))
                    .unwrap_or(&gamma_pool[0])
                    .clone();
                (b, gamma, Some(witness))
            }
            Some(b) => match gamma_pool.iter().find(|g| zero(&facts.product(g, b))) {
                Some(g) => (b.clone(), g.clone(), None),
                None => {
                    let g = gamma_pool[0].clone();
                    let witness = match facts.product(&g, b) {
                        ProductValue::Element(v) => nonzero_witness(&g, b, &v),
                        ProductValue::Unknown(w) => format!("unknown composite: {w}"),
                        ProductValue::Zero => unreachable!(),
                    };
                    (b.clone(), g, Some(witness))
                }
            },
        }
    };

    let bracket = format!("{{{alpha},{beta},{gamma}}}");
    let verdict = match failure {
        Some(witness) => RowVerdict::NotDefined { witness },
        None => classify_defined(facts, alpha, &beta, &gamma),
    };
    Some(BracketRow {
        s,
        j,
        k,
        beta: beta.to_string(),
        gamma: gamma.to_string(),
        bracket,
        verdict,
    })
}

/// The bracket-classification table for one of the three Hopf classes:
/// all covered `(j, k)` splittings with the definedness verdicts and, for
/// the defined brackets, the rule that kills the Hurewicz image.
pub fn bracket_audit(facts: &FactBase, alpha_name: &str) -> Result<BracketTable> {
    if !matches!(alpha_name, "eta" | "nu" | "sigma") {
        return Err(Error::Parse(format!(
            "`{alpha_name}` is not one of the audited base classes (eta, nu, sigma)"
        )));
    }
    let alpha = Element { coeff: 1, gen: alpha_name.to_string() };
    let alpha_stem = facts.stem_of(alpha_name).expect("audited classes are tabulated");
    let covered = facts.covered_s.get(alpha_name).cloned().unwrap_or_default();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    notes.push(format!(
        "rows pair the first workable beta and gamma (powers of two times a tabulated \
         generator); s = j+k runs over the splittings with e_*^s h({alpha_name}) != 0, i.e. \
         s <= {alpha_stem}"
    ));
    for s in (0..=alpha_stem).rev() {
        if s == 0 {
            if covered.contains(&0) {
                rows.push(BracketRow {
                    s: 0,
                    j: 0,
                    k: 0,
                    beta: "2".into(),
                    gamma: "x".into(),
                    bracket: format!("{{{alpha_name},2,x}}"),
                    verdict: RowVerdict::Excluded {
                        reason: "there is no zero divisor x in the 0-stem (= Z) with 2x = 0"
                            .into(),
                    },
                });
            } else {
                notes.push(
                    "j+k = 0 omitted: the 0-stem is torsion free, so no bracket over it is \
                     defined"
                        .to_string(),
                );
            }
            continue;
        }
        let target = alpha_stem + s + 1;
        if !covered.contains(&s) {
            match facts.stem_is_trivial(target) {
                Some(true) => notes.push(format!(
                    "j+k = {s} omitted: a defined bracket would land in the trivial stem {target}"
                )),
                _ => {
                    // supplementary analysis for splittings the source table
                    // does not carry
                    let mut sub = Vec::new();
                    for j in (0..=s).rev() {
                        if let Some(row) = build_row(facts, &alpha, s, j, s - j, false) {
                            sub.push(render_row_inline(&row));
                        }
                    }
                    if sub.is_empty() {
                        notes.push(format!(
                            "j+k = {s} omitted: no nonzero beta and gamma exist in these stems"
                        ));
                    } else {
                        notes.push(format!(
                            "j+k = {s} is not in the source table; supplementary verdicts: {}",
                            sub.join(" | ")
                        ));
                    }
                }
            }
            continue;
        }
        for j in (0..=s).rev() {
            let k = s - j;
            let Some(row) = build_row(facts, &alpha, s, j, k, false) else { continue };
            if j == k {
                if let Some(other) = build_row(facts, &alpha, s, j, k, true) {
                    if other.beta != row.beta || other.gamma != row.gamma {
                        let mut pair = vec![other, row];
                        pair.sort_by(|a, b| a.beta.cmp(&b.beta));
                        rows.extend(pair);
                        continue;
                    }
                }
            }
            rows.push(row);
        }
    }
    let has_unknown = rows.iter().any(|r| {
        matches!(&r.verdict, RowVerdict::Defined { status: Status::Unknown, .. })
    });
    Ok(BracketTable { alpha: alpha_name.to_string(), rows, notes, has_unknown })
}

pub fn render_row_inline(row: &BracketRow) -> String {
    match &row.verdict {
        RowVerdict::NotDefined { witness } => {
            format!("{} not defined ({witness})", row.bracket)
        }
        RowVerdict::Excluded { reason } => format!("{}: {reason}", row.bracket),
        RowVerdict::Defined { value, rule, status, .. } => {
            let v = value.as_ref().map(|v| format!(" = {v}")).unwrap_or_default();
            let st = match status {
                Status::Zero => "h = 0",
                Status::Nonzero => "h != 0",
                Status::Unknown => "h unknown",
            };
            format!("{}{v}: {st} [{rule}]", row.bracket)
        }
    }
}

/// One verified link of the Adams-filtration degree-bound chain on the
/// `Q_0(S^0_+)` model.
#[derive(Clone, Debug)]
pub struct ChainLink {
    pub class: String,
    pub degree: u32,
    pub length: u32,
    pub suspension: String,
    pub height: u64,
    pub bottom_cell: u64,
    pub satisfies: bool,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub filtration: u32,
    pub square_power: Option<u32>,
    pub bound: u64,
    pub links: Vec<ChainLink>,
    pub min_degree: Option<u64>,
    pub all_satisfy: bool,
}

/// Verifies the degree-bound fact chain on the zero-component model: every
/// class whose suspension survives at height `2^l` with `l >= k` has degree
/// at least `2^k - 1` (or `2^k - 2^t` for `2^t`-th powers), because the
/// James-Hopf projection lands it on a summand with bottom cell `2^l`.
pub fn degree_bound_chain(
    space: &SpaceSpec,
    k: u32,
    square_power: Option<u32>,
    max_degree: u32,
) -> Result<ChainReport> {
    if space.variant() != Variant::Q0Plus {
        return Err(Error::Unsupported(
            "the degree-bound chain runs on the zero-component model".into(),
        ));
    }
    let facts = FactBase::embedded();
    let bound = facts.adams_degree_bound(k, square_power);
    let t = square_power.unwrap_or(0);
    if t >= k {
        return Err(Error::Unsupported("the square power must be below the filtration".into()));
    }
    let min_len = k - t;
    let mut links = Vec::new();
    let mut all = true;
    let mut min_degree: Option<u64> = None;
    for word in space.generator_words(max_degree) {
        if word.length() < min_len {
            continue;
        }
        let weight = 1i64 << word.length();
        let base = Monomial::from_word(word.clone()).with_translation(-weight);
        let mut class = ClassExpr::from_monomial(base);
        for _ in 0..t {
            class = class.mul(&class);
        }
        let degree = class.degree().unwrap() as u64;
        // the suspension of the underlying word and its James-Hopf shadow
        let word_class = ClassExpr::from_monomial(
            Monomial::from_word(word.clone()).with_translation(-weight),
        );
        let suspended = space.suspend(&word_class);
        let height = 1u64 << word.length();
        let projected = loopspace::james_hopf_project(&suspended, height);
        let bottom = loopspace::bottom_cell_dim(height, 1);
        let word_degree = word.degree() as u64;
        let ok = !suspended.is_zero()
            && !projected.is_zero()
            && word_degree + 1 >= bottom
            && degree >= bound;
        all &= ok;
        min_degree = Some(min_degree.map_or(degree, |m: u64| m.min(degree)));
        links.push(ChainLink {
            class: class.to_string(),
            degree: degree as u32,
            length: word.length(),
            suspension: suspended.to_string(),
            height,
            bottom_cell: bottom,
            satisfies: ok,
        });
    }
    Ok(ChainReport { filtration: k, square_power, bound, links, min_degree, all_satisfy: all })
}

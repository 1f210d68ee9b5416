//! Decision procedure for strong reality of named finite simple groups.
//!
//! A finite simple group is strongly real exactly when it is isomorphic to a
//! member of the following list:
//!
//! 1. `PSp(2n,q)`, `q ≢ 3 (mod 4)`, `n ≥ 1`
//! 2. `Omega(2n+1,q)`, `q ≡ 1 (mod 4)`, `n ≥ 3`
//! 3. `Omega(9,q)`, `q ≡ 3 (mod 4)`
//! 4. `POmega-(4n,q)`, `n ≥ 2`
//! 5. `POmega+(4n,q)`, `q ≢ 3 (mod 4)`, `n ≥ 3`
//! 6. `POmega+(8,q)`
//! 7. `3D4(q)`
//! 8. `A10`, `A14`, `J1`, `J2`
//!
//! Names are first rewritten through a table of exceptional isomorphisms so
//! that, for example, `A(5)` and `PSL(2,5)` both land on `PSp(2,4)`.

use std::fmt;

use thiserror::Error;

use crate::algebra::prime_power;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NameError {
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("invalid parameters for {family}: {detail}")]
    InvalidParameters { family: String, detail: String },
}

const SPORADIC: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "Co1", "Co2",
    "Co3", "He", "Ru", "Fi22", "Fi23", "Fi24'", "O'N", "Ly", "Th", "HN", "B", "M",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalKind {
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedE6,
    Suzuki,
    Ree,
    TwistedF4,
}

impl ExceptionalKind {
    const ALL: [(ExceptionalKind, &'static str); 9] = [
        (ExceptionalKind::G2, "G2"),
        (ExceptionalKind::F4, "F4"),
        (ExceptionalKind::E6, "E6"),
        (ExceptionalKind::E7, "E7"),
        (ExceptionalKind::E8, "E8"),
        (ExceptionalKind::TwistedE6, "2E6"),
        (ExceptionalKind::Suzuki, "2B2"),
        (ExceptionalKind::Ree, "2G2"),
        (ExceptionalKind::TwistedF4, "2F4"),
    ];

    pub fn label(self) -> &'static str {
        Self::ALL.iter().find(|(k, _)| *k == self).map(|(_, l)| *l).unwrap()
    }
}

/// Name of a finite (simple) group in the classifier's vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleGroupName {
    /// `PSp(dim,q)`, `dim = 2n`.
    Psp { dim: u32, q: u64 },
    /// `Omega(dim,q)`, `dim = 2n+1`.
    Omega { dim: u32, q: u64 },
    PomegaMinus { dim: u32, q: u64 },
    PomegaPlus { dim: u32, q: u64 },
    TrialityD4 { q: u64 },
    Alt { n: u32 },
    Sporadic(&'static str),
    Psl { n: u32, q: u64 },
    Psu { n: u32, q: u64 },
    Exceptional { kind: ExceptionalKind, q: u64 },
}

impl fmt::Display for SimpleGroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SimpleGroupName::*;
        match self {
            Psp { dim, q } => write!(f, "PSp({dim},{q})"),
            Omega { dim, q } => write!(f, "Omega({dim},{q})"),
            PomegaMinus { dim, q } => write!(f, "POmega-({dim},{q})"),
            PomegaPlus { dim, q } => write!(f, "POmega+({dim},{q})"),
            TrialityD4 { q } => write!(f, "3D4({q})"),
            Alt { n } => write!(f, "A({n})"),
            Sporadic(label) => write!(f, "{label}"),
            Psl { n, q } => write!(f, "PSL({n},{q})"),
            Psu { n, q } => write!(f, "PSU({n},{q})"),
            Exceptional { kind, q } => write!(f, "{}({q})", kind.label()),
        }
    }
}

/// Splits a name into a lowercase family token and numeric parameters,
/// ignoring whitespace. Trailing digits of the family token become the first
/// parameter (`PSL2(7)` -> `("psl", [2, 7])`) unless the token is itself a
/// fixed label such as `3D4`, `E8` or `M11`.
pub fn parse_tokens(text: &str) -> Option<(String, Vec<u64>)> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return None;
    }
    let (head, mut params) = match compact.find('(') {
        Some(open) => {
            let inner = compact[open + 1..].strip_suffix(')')?;
            let params = inner
                .split(',')
                .map(|t| t.parse::<u64>().ok())
                .collect::<Option<Vec<_>>>()?;
            (compact[..open].to_string(), params)
        }
        None => (compact.clone(), Vec::new()),
    };
    let lower = head.to_lowercase();
    if is_fixed_label(&lower) {
        return Some((lower, params));
    }
    let digits_at = lower.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if digits_at < lower.len() {
        if digits_at == 0 {
            return None;
        }
        let lead: u64 = lower[digits_at..].parse().ok()?;
        params.insert(0, lead);
        return Some((lower[..digits_at].to_string(), params));
    }
    Some((lower, params))
}

fn is_fixed_label(lower: &str) -> bool {
    lower == "3d4"
        || SPORADIC.iter().any(|s| s.to_lowercase() == lower)
        || ExceptionalKind::ALL.iter().any(|(_, l)| l.to_lowercase() == lower)
}

impl SimpleGroupName {
    pub fn parse(text: &str) -> Result<SimpleGroupName, NameError> {
        let unknown = || NameError::UnknownName(text.to_string());
        let (family, params) = parse_tokens(text).ok_or_else(unknown)?;
        if let Some(label) = SPORADIC.iter().find(|s| s.to_lowercase() == family) {
            return if params.is_empty() { Ok(SimpleGroupName::Sporadic(label)) } else { Err(unknown()) };
        }
        if let Some((kind, _)) = ExceptionalKind::ALL.iter().find(|(_, l)| l.to_lowercase() == family) {
            let [q] = params[..] else { return Err(unknown()) };
            return SimpleGroupName::Exceptional { kind: *kind, q }.validated();
        }
        use SimpleGroupName::*;
        let name = match (family.as_str(), params.as_slice()) {
            ("psp", &[d, q]) => Psp { dim: d as u32, q },
            ("omega", &[d, q]) => Omega { dim: d as u32, q },
            ("pomega-", &[d, q]) => PomegaMinus { dim: d as u32, q },
            ("pomega+", &[d, q]) => PomegaPlus { dim: d as u32, q },
            ("3d4", &[q]) => TrialityD4 { q },
            ("a" | "alt", &[n]) => Alt { n: n as u32 },
            ("psl", &[n, q]) => Psl { n: n as u32, q },
            ("psu", &[n, q]) => Psu { n: n as u32, q },
            _ => return Err(unknown()),
        };
        name.validated()
    }

    fn validated(self) -> Result<SimpleGroupName, NameError> {
        use SimpleGroupName::*;
        let invalid = |detail: &str| NameError::InvalidParameters {
            family: self.family_label().to_string(),
            detail: detail.to_string(),
        };
        if let Some(q) = self.q() {
            if prime_power(q).is_none() {
                return Err(invalid("q must be a prime power"));
            }
        }
        match self {
            Psp { dim, .. } if dim < 2 || dim % 2 != 0 => Err(invalid("dimension must be even and at least 2")),
            Omega { dim, .. } if dim < 3 || dim % 2 != 1 => Err(invalid("dimension must be odd and at least 3")),
            PomegaMinus { dim, .. } | PomegaPlus { dim, .. } if dim < 4 || dim % 2 != 0 => {
                Err(invalid("dimension must be even and at least 4"))
            }
            Alt { n } if n < 1 => Err(invalid("degree must be positive")),
            Psl { n, .. } if n < 2 => Err(invalid("dimension must be at least 2")),
            Psu { n, .. } if n < 2 => Err(invalid("dimension must be at least 2")),
            Exceptional { kind: ExceptionalKind::Suzuki | ExceptionalKind::TwistedF4, q }
                if !odd_power_of(q, 2) =>
            {
                Err(invalid("q must be an odd power of 2"))
            }
            Exceptional { kind: ExceptionalKind::Ree, q } if !odd_power_of(q, 3) => {
                Err(invalid("q must be an odd power of 3"))
            }
            _ => Ok(self),
        }
    }

    fn family_label(&self) -> &'static str {
        use SimpleGroupName::*;
        match self {
            Psp { .. } => "PSp",
            Omega { .. } => "Omega",
            PomegaMinus { .. } => "POmega-",
            PomegaPlus { .. } => "POmega+",
            TrialityD4 { .. } => "3D4",
            Alt { .. } => "A",
            Sporadic(_) => "sporadic",
            Psl { .. } => "PSL",
            Psu { .. } => "PSU",
            Exceptional { kind, .. } => kind.label(),
        }
    }

    fn q(&self) -> Option<u64> {
        use SimpleGroupName::*;
        match *self {
            Psp { q, .. } | Omega { q, .. } | PomegaMinus { q, .. } | PomegaPlus { q, .. } => Some(q),
            TrialityD4 { q } | Psl { q, .. } | Psu { q, .. } | Exceptional { q, .. } => Some(q),
            Alt { .. } | Sporadic(_) => None,
        }
    }
}

fn odd_power_of(q: u64, p: u64) -> bool {
    matches!(prime_power(q), Some((pp, k)) if pp == p && k % 2 == 1)
}

/// One rewrite through the exceptional-isomorphism table, or `None` when the
/// name is already canonical.
fn rewrite(name: SimpleGroupName) -> Option<(SimpleGroupName, &'static str)> {
    use SimpleGroupName::*;
    let even_q = |q: u64| q % 2 == 0;
    Some(match name {
        Alt { n: 5 } => (Psp { dim: 2, q: 4 }, "A5 ≅ PSL(2,4)"),
        Alt { n: 6 } => (Psp { dim: 2, q: 9 }, "A6 ≅ PSL(2,9)"),
        Psl { n: 4, q: 2 } => (Alt { n: 8 }, "PSL(4,2) ≅ A8"),
        Psl { n: 3, q: 2 } => (Psp { dim: 2, q: 7 }, "PSL(3,2) ≅ PSL(2,7)"),
        Psl { n: 2, q } => (Psp { dim: 2, q }, "PSL(2,q) ≅ PSp(2,q)"),
        Psu { n: 2, q } => (Psp { dim: 2, q }, "PSU(2,q) ≅ PSL(2,q)"),
        Psp { dim: 2, q: 5 } => (Psp { dim: 2, q: 4 }, "PSL(2,5) ≅ PSL(2,4)"),
        Psu { n: 4, q: 2 } => (Psp { dim: 4, q: 3 }, "PSU(4,2) ≅ PSp(4,3)"),
        Omega { dim: 3, q } => (Psp { dim: 2, q }, "Omega(3,q) ≅ PSL(2,q)"),
        Omega { dim: 5, q } => (Psp { dim: 4, q }, "Omega(5,q) ≅ PSp(4,q)"),
        Omega { dim, q } if even_q(q) => (Psp { dim: dim - 1, q }, "Omega(2n+1,2^k) ≅ PSp(2n,2^k)"),
        PomegaPlus { dim: 6, q } => (Psl { n: 4, q }, "POmega+(6,q) ≅ PSL(4,q)"),
        PomegaMinus { dim: 6, q } => (Psu { n: 4, q }, "POmega-(6,q) ≅ PSU(4,q)"),
        PomegaMinus { dim: 4, q } => (Psp { dim: 2, q: q * q }, "POmega-(4,q) ≅ PSL(2,q^2)"),
        _ => return None,
    })
}

/// Rewrites `name` to its canonical representative; idempotent.
pub fn normalize_name(name: SimpleGroupName) -> SimpleGroupName {
    normalize_with_trace(name).0
}

fn normalize_with_trace(mut name: SimpleGroupName) -> (SimpleGroupName, Vec<&'static str>) {
    let mut trace = Vec::new();
    while let Some((next, why)) = rewrite(name) {
        trace.push(why);
        name = next;
    }
    (name, trace)
}

fn not_simple_reason(name: &SimpleGroupName) -> Option<&'static str> {
    use ExceptionalKind::*;
    use SimpleGroupName::*;
    match *name {
        Alt { n } if n < 5 => Some("A(n) is not simple for n < 5"),
        Psp { dim: 2, q: 2 | 3 } => Some("PSL(2,2) and PSL(2,3) are solvable"),
        Psp { dim: 4, q: 2 } => Some("PSp(4,2) ≅ S6 is not simple"),
        Psu { n: 3, q: 2 } => Some("PSU(3,2) is solvable"),
        PomegaPlus { dim: 4, .. } => Some("POmega+(4,q) ≅ PSL(2,q) × PSL(2,q) is not simple"),
        Exceptional { kind: G2, q: 2 } => Some("G2(2) ≅ PSU(3,3).2 is not simple"),
        Exceptional { kind: Suzuki, q: 2 } => Some("2B2(2) has order 20"),
        Exceptional { kind: Ree, q: 3 } => Some("2G2(3) ≅ PΓL(2,8) is not simple"),
        Exceptional { kind: TwistedF4, q: 2 } => Some("2F4(2) is not simple (its derived subgroup is the Tits group)"),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    StronglyReal { item: u8 },
    NotStronglyReal,
    NotSimple,
    UnknownName,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::StronglyReal { .. } => "StronglyReal",
            Outcome::NotStronglyReal => "NotStronglyReal",
            Outcome::NotSimple => "NotSimple",
            Outcome::UnknownName => "UnknownName",
        }
    }

    pub fn item(&self) -> Option<u8> {
        match self {
            Outcome::StronglyReal { item } => Some(*item),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub normalized: Option<SimpleGroupName>,
    pub justification: String,
}

impl Verdict {
    /// `Some(flag)` when the verdict decides strong reality of a simple group.
    pub fn strongly_real(&self) -> Option<bool> {
        match self.outcome {
            Outcome::StronglyReal { .. } => Some(true),
            Outcome::NotStronglyReal => Some(false),
            _ => None,
        }
    }
}

/// Text of each list entry with its side conditions.
pub fn item_text(item: u8) -> &'static str {
    match item {
        1 => "PSp(2n,q) for q ≢ 3 (mod 4), n ≥ 1",
        2 => "Omega(2n+1,q) for q ≡ 1 (mod 4), n ≥ 3",
        3 => "Omega(9,q) for q ≡ 3 (mod 4)",
        4 => "POmega-(4n,q) for n ≥ 2",
        5 => "POmega+(4n,q) for q ≢ 3 (mod 4), n ≥ 3",
        6 => "POmega+(8,q)",
        7 => "3D4(q)",
        8 => "A10, A14, J1, J2",
        _ => "",
    }
}

/// Matches a canonical name against the list; `None` when it is absent.
fn list_item(name: &SimpleGroupName) -> Option<u8> {
    use SimpleGroupName::*;
    match *name {
        Psp { .. } if name.q()? % 4 != 3 => Some(1),
        Omega { dim, q } if q % 4 == 1 && (dim - 1) / 2 >= 3 => Some(2),
        Omega { dim: 9, q } if q % 4 == 3 => Some(3),
        PomegaMinus { dim, .. } if dim % 4 == 0 && dim / 4 >= 2 => Some(4),
        PomegaPlus { dim, q } if dim % 4 == 0 && dim / 4 >= 3 && q % 4 != 3 => Some(5),
        PomegaPlus { dim: 8, .. } => Some(6),
        TrialityD4 { .. } => Some(7),
        Alt { n: 10 | 14 } => Some(8),
        Sporadic("J1" | "J2") => Some(8),
        _ => None,
    }
}

pub fn classify(name: SimpleGroupName) -> Verdict {
    let (normalized, trace) = normalize_with_trace(name);
    let via = if trace.is_empty() {
        String::new()
    } else {
        format!(" (normalized {name} -> {normalized} via {})", trace.join(", "))
    };
    if let Some(reason) = not_simple_reason(&normalized) {
        return Verdict {
            outcome: Outcome::NotSimple,
            normalized: Some(normalized),
            justification: format!("{reason}{via}"),
        };
    }
    match list_item(&normalized) {
        Some(item) => Verdict {
            outcome: Outcome::StronglyReal { item },
            normalized: Some(normalized),
            justification: format!(
                "{normalized} matches item ({item}) of the strongly real simple groups list: {}{via}",
                item_text(item)
            ),
        },
        None => Verdict {
            outcome: Outcome::NotStronglyReal,
            normalized: Some(normalized),
            justification: format!(
                "{normalized} satisfies none of the list items (1)-(8), which is a complete characterization{via}"
            ),
        },
    }
}

/// Parses and classifies; unknown families yield [`Outcome::UnknownName`].
pub fn classify_str(text: &str) -> Result<Verdict, NameError> {
    match SimpleGroupName::parse(text) {
        Ok(name) => Ok(classify(name)),
        Err(NameError::UnknownName(n)) => Ok(Verdict {
            outcome: Outcome::UnknownName,
            normalized: None,
            justification: format!("unrecognized group name {n:?}"),
        }),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SimpleGroupName::*;

    fn verdict(s: &str) -> Outcome {
        classify_str(s).unwrap().outcome
    }

    fn sr(item: u8) -> Outcome {
        Outcome::StronglyReal { item }
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(SimpleGroupName::parse("PSp(4,5)").unwrap(), Psp { dim: 4, q: 5 });
        assert_eq!(SimpleGroupName::parse("psp4(5)").unwrap(), Psp { dim: 4, q: 5 });
        assert_eq!(SimpleGroupName::parse(" Omega ( 7 , 5 ) ").unwrap(), Omega { dim: 7, q: 5 });
        assert_eq!(SimpleGroupName::parse("POmega+(8,3)").unwrap(), PomegaPlus { dim: 8, q: 3 });
        assert_eq!(SimpleGroupName::parse("pomega-(8,3)").unwrap(), PomegaMinus { dim: 8, q: 3 });
        assert_eq!(SimpleGroupName::parse("3D4(2)").unwrap(), TrialityD4 { q: 2 });
        assert_eq!(SimpleGroupName::parse("A(14)").unwrap(), Alt { n: 14 });
        assert_eq!(SimpleGroupName::parse("A10").unwrap(), Alt { n: 10 });
        assert_eq!(SimpleGroupName::parse("j1").unwrap(), Sporadic("J1"));
        assert_eq!(SimpleGroupName::parse("M11").unwrap(), Sporadic("M11"));
        assert_eq!(SimpleGroupName::parse("PSL2(7)").unwrap(), Psl { n: 2, q: 7 });
        assert_eq!(
            SimpleGroupName::parse("E8(2)").unwrap(),
            Exceptional { kind: ExceptionalKind::E8, q: 2 }
        );
        assert!(matches!(SimpleGroupName::parse("Foo(3)"), Err(NameError::UnknownName(_))));
        assert!(matches!(SimpleGroupName::parse("PSL(2,6)"), Err(NameError::InvalidParameters { .. })));
        assert!(matches!(SimpleGroupName::parse("PSp(3,5)"), Err(NameError::InvalidParameters { .. })));
        assert!(matches!(SimpleGroupName::parse("2B2(4)"), Err(NameError::InvalidParameters { .. })));
        assert_eq!(verdict("Foo(3)"), Outcome::UnknownName);
    }

    #[test]
    fn display_round_trips() {
        for s in ["PSp(4,5)", "Omega(9,7)", "POmega-(8,3)", "POmega+(12,5)", "3D4(2)", "A(10)", "J2", "PSL(3,4)", "PSU(3,3)", "2F4(8)"] {
            let name = SimpleGroupName::parse(s).unwrap();
            assert_eq!(name.to_string(), s);
            assert_eq!(SimpleGroupName::parse(&name.to_string()).unwrap(), name);
        }
    }

    #[test]
    fn normalization_table() {
        let n = |s: &str| normalize_name(SimpleGroupName::parse(s).unwrap());
        assert_eq!(n("A(5)"), Psp { dim: 2, q: 4 });
        assert_eq!(n("PSL(2,5)"), Psp { dim: 2, q: 4 });
        assert_eq!(n("PSL(2,4)"), Psp { dim: 2, q: 4 });
        assert_eq!(n("A(6)"), Psp { dim: 2, q: 9 });
        assert_eq!(n("PSL(4,2)"), Alt { n: 8 });
        assert_eq!(n("A(8)"), Alt { n: 8 });
        assert_eq!(n("PSL(3,2)"), Psp { dim: 2, q: 7 });
        assert_eq!(n("PSU(4,2)"), Psp { dim: 4, q: 3 });
        assert_eq!(n("Omega(3,7)"), Psp { dim: 2, q: 7 });
        assert_eq!(n("Omega(5,3)"), Psp { dim: 4, q: 3 });
        assert_eq!(n("Omega(7,4)"), Psp { dim: 6, q: 4 });
        assert_eq!(n("POmega+(6,3)"), Psl { n: 4, q: 3 });
        assert_eq!(n("POmega-(6,2)"), Psp { dim: 4, q: 3 });
        assert_eq!(n("POmega-(6,3)"), Psu { n: 4, q: 3 });
        assert_eq!(n("J1"), Sporadic("J1"));
    }

    #[test]
    fn normalization_is_idempotent() {
        let names = [
            "A(5)", "A(6)", "A(7)", "A(8)", "PSL(2,5)", "PSL(4,2)", "PSU(4,2)", "Omega(3,9)",
            "Omega(5,5)", "Omega(9,8)", "POmega+(6,4)", "POmega-(6,2)", "POmega-(4,3)", "PSp(6,3)",
            "3D4(5)", "J2", "E8(3)",
        ];
        for s in names {
            let once = normalize_name(SimpleGroupName::parse(s).unwrap());
            assert_eq!(normalize_name(once), once, "{s}");
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(verdict("PSp(4,5)"), sr(1));
        assert_eq!(verdict("PSL(2,7)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("3D4(2)"), sr(7));
        assert_eq!(verdict("A(14)"), sr(8));
        assert_eq!(verdict("A(7)"), Outcome::NotStronglyReal);
    }

    // One positive and one boundary negative per side condition.
    #[test]
    fn item_side_conditions() {
        // (1) PSp(2n,q), q ≢ 3 (mod 4), n ≥ 1
        assert_eq!(verdict("PSp(2,5)"), sr(1));
        assert_eq!(verdict("PSp(6,9)"), sr(1));
        assert_eq!(verdict("PSp(4,8)"), sr(1));
        assert_eq!(verdict("PSp(4,3)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("PSp(2,11)"), Outcome::NotStronglyReal);
        // (2) Omega(2n+1,q), q ≡ 1 (mod 4), n ≥ 3
        assert_eq!(verdict("Omega(7,5)"), sr(2));
        assert_eq!(verdict("Omega(9,5)"), sr(2));
        assert_eq!(verdict("Omega(7,3)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("Omega(11,3)"), Outcome::NotStronglyReal);
        // n = 2 is rerouted to PSp(4,q) and item (1)
        assert_eq!(verdict("Omega(5,5)"), sr(1));
        assert_eq!(verdict("Omega(5,7)"), Outcome::NotStronglyReal);
        // (3) Omega(9,q), q ≡ 3 (mod 4)
        assert_eq!(verdict("Omega(9,3)"), sr(3));
        assert_eq!(verdict("Omega(9,7)"), sr(3));
        assert_eq!(verdict("Omega(13,7)"), Outcome::NotStronglyReal);
        // (4) POmega-(4n,q), n ≥ 2
        assert_eq!(verdict("POmega-(8,3)"), sr(4));
        assert_eq!(verdict("POmega-(12,7)"), sr(4));
        assert_ne!(verdict("POmega-(4,3)"), sr(4));
        assert_eq!(verdict("POmega-(10,3)"), Outcome::NotStronglyReal);
        // (5) POmega+(4n,q), q ≢ 3 (mod 4), n ≥ 3
        assert_eq!(verdict("POmega+(12,5)"), sr(5));
        assert_eq!(verdict("POmega+(12,4)"), sr(5));
        assert_eq!(verdict("POmega+(12,3)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("POmega+(16,7)"), Outcome::NotStronglyReal);
        // (6) POmega+(8,q), all q
        assert_eq!(verdict("POmega+(8,3)"), sr(6));
        assert_eq!(verdict("POmega+(8,5)"), sr(6));
        assert_eq!(verdict("POmega+(10,5)"), Outcome::NotStronglyReal);
        // (7) 3D4(q), all q
        assert_eq!(verdict("3D4(3)"), sr(7));
        // (8) A10, A14, J1, J2
        assert_eq!(verdict("A(10)"), sr(8));
        assert_eq!(verdict("J1"), sr(8));
        assert_eq!(verdict("J2"), sr(8));
        assert_eq!(verdict("A(12)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("J3"), Outcome::NotStronglyReal);
    }

    #[test]
    fn off_list_and_degenerate_names() {
        assert_eq!(verdict("PSL(3,2)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("PSU(3,3)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("E8(2)"), Outcome::NotStronglyReal);
        assert_eq!(verdict("M24"), Outcome::NotStronglyReal);
        assert_eq!(verdict("A(5)"), sr(1));
        assert_eq!(verdict("A(6)"), sr(1));
        assert_eq!(verdict("PSL(2,2)"), Outcome::NotSimple);
        assert_eq!(verdict("PSL(2,3)"), Outcome::NotSimple);
        assert_eq!(verdict("PSp(4,2)"), Outcome::NotSimple);
        assert_eq!(verdict("PSU(3,2)"), Outcome::NotSimple);
        assert_eq!(verdict("A(4)"), Outcome::NotSimple);
        assert_eq!(verdict("POmega+(4,5)"), Outcome::NotSimple);
        assert_eq!(verdict("Omega(5,2)"), Outcome::NotSimple);
    }

    #[test]
    fn vocabulary_is_complete() {
        let names = [
            "PSp(2,4)", "Omega(7,5)", "Omega(9,3)", "POmega-(8,2)", "POmega+(12,2)", "POmega+(8,7)",
            "3D4(2)", "A(10)", "A(14)", "J1", "J2", "A(5)", "Omega(5,3)", "POmega+(6,2)",
            "POmega-(6,3)", "Omega(7,8)", "PSL(2,9)", "PSU(4,2)",
        ];
        for s in names {
            assert_ne!(verdict(s), Outcome::UnknownName, "{s}");
        }
    }

    #[test]
    fn justification_mentions_item() {
        let v = classify_str("3D4(2)").unwrap();
        assert!(v.justification.contains("item (7)"));
        let v = classify_str("A(5)").unwrap();
        assert!(v.justification.contains("A5 ≅ PSL(2,4)"));
    }
}

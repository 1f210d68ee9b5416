//! Generator-based constructions of the concrete groups the toolkit checks.
//!
//! Linear groups are generated by elementary transvections `I + lambda E_ij`
//! with `lambda` running over the powers `w^0 .. w^(k-1)` of the primitive
//! element `w` (an F_p-basis of GF(p^k)). `SU3(q)` is realized inside
//! `SL3(q^2)` as the fixed points of `y -> A (f(y)^-1)^T A`, where `f` raises
//! entries to the `q`-th power.

use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::{AlgebraError, Code, Field, Matrix};
use crate::classifier::{parse_tokens, SimpleGroupName};
use crate::groups::{Group, GroupElement, GroupError, Permutation};

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group order {order} exceeds the element cap {cap}")]
    OrderExceedsCap { order: u128, cap: usize },
    #[error("invalid degree {0}: alternating groups need n >= 3")]
    InvalidDegree(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid permutation: {message}")]
    InvalidPermutation { line: usize, message: String },
    #[error("unknown group spec {0:?}")]
    UnknownSpec(String),
    #[error("matrix is not in SU3: {0}")]
    NotInSu3(String),
    #[error("constructed element violates the defining condition: {0}")]
    Membership(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl BuildError {
    /// True for failures caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            BuildError::OrderExceedsCap { .. } | BuildError::Group(GroupError::CapExceeded(_))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    SL2,
    GL2,
    PGL2,
    PSL2,
    SL3,
    PSL3,
    SU3,
    PSU3,
    Sp4,
    PSp4,
}

impl ClassicalFamily {
    pub fn label(self) -> &'static str {
        match self {
            ClassicalFamily::SL2 => "SL2",
            ClassicalFamily::GL2 => "GL2",
            ClassicalFamily::PGL2 => "PGL2",
            ClassicalFamily::PSL2 => "PSL2",
            ClassicalFamily::SL3 => "SL3",
            ClassicalFamily::PSL3 => "PSL3",
            ClassicalFamily::SU3 => "SU3",
            ClassicalFamily::PSU3 => "PSU3",
            ClassicalFamily::Sp4 => "Sp4",
            ClassicalFamily::PSp4 => "PSp4",
        }
    }

    /// Order by the standard formula.
    pub fn order(self, q: u64) -> u128 {
        let q = q as u128;
        let gcd = |a: u128, b: u128| -> u128 {
            let (mut a, mut b) = (a, b);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let sl2 = q * (q * q - 1);
        let sl3 = q.pow(3) * (q * q - 1) * (q.pow(3) - 1);
        let su3 = q.pow(3) * (q * q - 1) * (q.pow(3) + 1);
        let sp4 = q.pow(4) * (q * q - 1) * (q.pow(4) - 1);
        match self {
            ClassicalFamily::SL2 | ClassicalFamily::PGL2 => sl2,
            ClassicalFamily::GL2 => sl2 * (q - 1),
            ClassicalFamily::PSL2 => sl2 / gcd(2, q - 1),
            ClassicalFamily::SL3 => sl3,
            ClassicalFamily::PSL3 => sl3 / gcd(3, q - 1),
            ClassicalFamily::SU3 => su3,
            ClassicalFamily::PSU3 => su3 / gcd(3, q + 1),
            ClassicalFamily::Sp4 => sp4,
            ClassicalFamily::PSp4 => sp4 / gcd(2, q - 1),
        }
    }
}

/// A constructible group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Classical { family: ClassicalFamily, q: u64 },
    Alternating(usize),
    PermFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Classical { family, q } => write!(f, "{}({q})", family.label()),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::PermFile(p) => write!(f, "perm:{}", p.display()),
        }
    }
}

impl GroupSpec {
    /// Parses `SL2(5)`, `PSL(2,7)`, `PSp4(3)`, `SU3(3)`, `A(7)`, `A7`,
    /// `perm:<path>`, ignoring whitespace and case of the family token.
    pub fn parse(text: &str) -> Result<GroupSpec, BuildError> {
        let trimmed = text.trim();
        if let Some(path) = trimmed.strip_prefix("perm:") {
            if path.is_empty() {
                return Err(BuildError::UnknownSpec(text.into()));
            }
            return Ok(GroupSpec::PermFile(PathBuf::from(path)));
        }
        let unknown = || BuildError::UnknownSpec(text.into());
        let (family, params) = parse_tokens(trimmed).ok_or_else(unknown)?;
        let classical = |fam: ClassicalFamily, q: u64| Ok(GroupSpec::Classical { family: fam, q });
        use ClassicalFamily::*;
        match (family.as_str(), params.as_slice()) {
            ("a" | "alt", [n]) => Ok(GroupSpec::Alternating(*n as usize)),
            ("sl", [2, q]) => classical(SL2, *q),
            ("gl", [2, q]) => classical(GL2, *q),
            ("pgl", [2, q]) => classical(PGL2, *q),
            ("psl", [2, q]) => classical(PSL2, *q),
            ("sl", [3, q]) => classical(SL3, *q),
            ("psl", [3, q]) => classical(PSL3, *q),
            ("su", [3, q]) => classical(SU3, *q),
            ("psu", [3, q]) => classical(PSU3, *q),
            ("sp", [4, q]) => classical(Sp4, *q),
            ("psp", [4, q]) => classical(PSp4, *q),
            _ => Err(unknown()),
        }
    }

    /// The simple group this spec names, if it names one in the
    /// classifier's vocabulary (`PSL2(q)`, `PSL3(q)`, `PSU3(q)`, `PSp4(q)`, `A(n)`).
    pub fn simple_name(&self) -> Option<SimpleGroupName> {
        match *self {
            GroupSpec::Classical { family, q } => match family {
                ClassicalFamily::PSL2 => Some(SimpleGroupName::Psl { n: 2, q }),
                ClassicalFamily::PSL3 => Some(SimpleGroupName::Psl { n: 3, q }),
                ClassicalFamily::PSU3 => Some(SimpleGroupName::Psu { n: 3, q }),
                ClassicalFamily::PSp4 => Some(SimpleGroupName::Psp { dim: 4, q }),
                _ => None,
            },
            GroupSpec::Alternating(n) => Some(SimpleGroupName::Alt { n: n as u32 }),
            GroupSpec::PermFile(_) => None,
        }
    }

    /// Characteristic of the defining field, for matrix groups.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            GroupSpec::Classical { q, .. } => crate::algebra::prime_power(*q).map(|(p, _)| p),
            _ => None,
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group, BuildError> {
        match self {
            GroupSpec::Classical { family: ClassicalFamily::SU3, q } => build_su3(*q, cap),
            GroupSpec::Classical { family: ClassicalFamily::PSU3, q } => {
                Ok(build_su3(*q, cap)?.projective_quotient()?)
            }
            GroupSpec::Classical { family, q } => build_classical(*family, *q, cap),
            GroupSpec::Alternating(n) => build_alternating(*n, cap),
            GroupSpec::PermFile(path) => load_permutation_group(path, cap),
        }
    }
}

fn check_cap(order: u128, cap: usize) -> Result<(), BuildError> {
    if order > cap as u128 {
        return Err(BuildError::OrderExceedsCap { order, cap });
    }
    Ok(())
}

/// `w^0, .., w^(k-1)` for the primitive element `w`.
fn basis_scalars(field: &Field) -> Vec<Code> {
    let w = field.primitive();
    (0..field.k() as u64).map(|i| field.pow(w, i)).collect()
}

/// Elementary transvections `I + lambda E_ij`, `i != j`, over a field basis.
pub fn transvection_generators(field: &Field, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for lambda in basis_scalars(field) {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    gens.push(Matrix::identity(field, n).with_entry(i, j, lambda));
                }
            }
        }
    }
    gens
}

/// The alternating form `J` used for `Sp4`.
pub fn symplectic_form(field: &Field) -> Matrix {
    Matrix::from_ints(
        field,
        &[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]],
    )
    .expect("valid literal")
}

/// Symplectic transvection `x -> x + lambda <x, v> v` with `<x, y> = x^T J y`,
/// i.e. the matrix `I + lambda v (J v)^T` acting on column vectors.
pub fn symplectic_transvection(field: &Field, v: &[Code], lambda: Code) -> Matrix {
    let j = symplectic_form(field);
    let n = v.len();
    let jv: Vec<Code> = (0..n)
        .map(|i| (0..n).fold(0, |acc, k| field.add(acc, field.mul(j.at(i, k), v[k]))))
        .collect();
    let mut m = Matrix::identity(field, n);
    for r in 0..n {
        for c in 0..n {
            let add = field.mul(lambda, field.mul(v[r], jv[c]));
            m = m.clone().with_entry(r, c, field.add(m.at(r, c), add));
        }
    }
    m
}

pub fn preserves_symplectic_form(m: &Matrix) -> bool {
    let j = symplectic_form(m.field());
    m.transpose().mul(&j).mul(m) == j
}

fn sp4_generators(field: &Field) -> Vec<Matrix> {
    // Transvections along basis vectors alone only reach SL2 x SL2; the
    // vectors e_i + e_j are needed as well.
    let mut vectors: Vec<Vec<Code>> = Vec::new();
    for i in 0..4 {
        let mut v = vec![0; 4];
        v[i] = field.one();
        vectors.push(v);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = vec![0; 4];
            v[i] = field.one();
            v[j] = field.one();
            vectors.push(v);
        }
    }
    let mut gens = Vec::new();
    for lambda in basis_scalars(field) {
        for v in &vectors {
            gens.push(symplectic_transvection(field, v, lambda));
        }
    }
    gens
}

fn closure_of(gens: Vec<Matrix>, field: &Field, n: usize, cap: usize) -> Result<Group, BuildError> {
    let identity: GroupElement = Matrix::identity(field, n).into();
    let gens = gens.into_iter().map(GroupElement::from).collect();
    Ok(Group::closure_with_identity(identity, gens, cap)?)
}

fn verify_all(group: &Group, what: &str, pred: impl Fn(&Matrix) -> bool) -> Result<(), BuildError> {
    for g in group.elements() {
        let m = g.as_matrix().expect("matrix group");
        if !pred(m) {
            return Err(BuildError::Membership(format!("{what}: {}", m.to_text())));
        }
    }
    Ok(())
}

/// Builds one of the linear or symplectic families over GF(q).
pub fn build_classical(family: ClassicalFamily, q: u64, cap: usize) -> Result<Group, BuildError> {
    use ClassicalFamily::*;
    if matches!(family, SU3 | PSU3) {
        let g = build_su3(q, cap)?;
        return Ok(if family == PSU3 { g.projective_quotient()? } else { g });
    }
    let field = Field::of_order(q)?;
    // the linear group is enumerated before any quotient is taken
    let linear = match family {
        PGL2 => GL2,
        PSL2 => SL2,
        PSL3 => SL3,
        PSp4 => Sp4,
        other => other,
    };
    check_cap(linear.order(q), cap)?;
    let group = match linear {
        SL2 | SL3 => {
            let n = if linear == SL2 { 2 } else { 3 };
            let g = closure_of(transvection_generators(&field, n), &field, n, cap)?;
            verify_all(&g, "det = 1", |m| m.det().code() == field.one())?;
            g
        }
        GL2 => {
            let mut gens = transvection_generators(&field, 2);
            gens.push(Matrix::diagonal(&field, &[field.primitive(), field.one()]));
            closure_of(gens, &field, 2, cap)?
        }
        Sp4 => {
            let g = closure_of(sp4_generators(&field), &field, 4, cap)?;
            verify_all(&g, "M^T J M = J", preserves_symplectic_form)?;
            g
        }
        _ => unreachable!(),
    };
    Ok(if linear != family { group.projective_quotient()? } else { group })
}

/// The form matrix `A` defining the unitary group.
pub fn unitary_form(field: &Field) -> Matrix {
    Matrix::from_ints(field, &[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]).expect("valid literal")
}

/// True when `y = A (f(y)^-1)^T A`, with `f` the entrywise `q`-th power.
pub fn is_unitary_fixed_point(y: &Matrix, q: u64) -> bool {
    let a = unitary_form(y.field());
    y.entrywise_power(q)
        .iota_su(&a)
        .map(|img| img == *y)
        .unwrap_or(false)
}

/// `u(alpha, beta) = [[1, alpha, beta], [0, 1, alpha^q], [0, 0, 1]]` over
/// GF(q^2); rejected unless `beta + beta^q = alpha^(q+1)`.
pub fn su3_unipotent(field: &Field, q: u64, alpha: Code, beta: Code) -> Result<Matrix, BuildError> {
    let lhs = field.add(beta, field.pow(beta, q));
    let rhs = field.pow(alpha, q + 1);
    if lhs != rhs {
        return Err(BuildError::NotInSu3(format!(
            "beta + beta^q != alpha^(q+1) for alpha={}, beta={}",
            field.format(alpha),
            field.format(beta)
        )));
    }
    Ok(Matrix::identity(field, 3)
        .with_entry(0, 1, alpha)
        .with_entry(0, 2, beta)
        .with_entry(1, 2, field.pow(alpha, q)))
}

/// Admissible `(alpha, beta)` pairs, in code order.
pub fn su3_unipotent_parameters(field: &Field, q: u64) -> Vec<(Code, Code)> {
    let mut out = Vec::new();
    for alpha in field.elements() {
        let rhs = field.pow(alpha, q + 1);
        for beta in field.elements() {
            if field.add(beta, field.pow(beta, q)) == rhs {
                out.push((alpha, beta));
            }
        }
    }
    out
}

/// `SU3(q)` generated by all nontrivial `u(alpha, beta)` and the form `A`.
pub fn build_su3(q: u64, cap: usize) -> Result<Group, BuildError> {
    let base = Field::of_order(q)?;
    let field = Field::of_order(q * q)?;
    debug_assert_eq!(base.p(), field.p());
    check_cap(ClassicalFamily::SU3.order(q), cap)?;
    let mut gens = Vec::new();
    for (alpha, beta) in su3_unipotent_parameters(&field, q) {
        if alpha == 0 && beta == 0 {
            continue;
        }
        gens.push(su3_unipotent(&field, q, alpha, beta)?);
    }
    gens.push(unitary_form(&field));
    let group = closure_of(gens, &field, 3, cap)?;
    verify_all(&group, "iota o f stable, det = 1", |m| {
        m.det().code() == field.one() && is_unitary_fixed_point(m, q)
    })?;
    Ok(group)
}

/// `A_n` generated by the 3-cycles `(1 2 k)`, `k = 3..n`.
pub fn build_alternating(n: usize, cap: usize) -> Result<Group, BuildError> {
    if n < 3 {
        return Err(BuildError::InvalidDegree(n));
    }
    let order = (3..=n as u128).product::<u128>();
    check_cap(order, cap)?;
    let gens = (3..=n)
        .map(|k| Permutation::from_cycles(n, &[&[1, 2, k]]).map(GroupElement::from))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Group::closure(gens, cap)?)
}

/// Parses a permutation generator file: `degree N` followed by one line of
/// `N` 1-based images per generator. `#` starts a comment.
pub fn parse_permutation_generators(text: &str) -> Result<Vec<Permutation>, BuildError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = degree else {
            match tokens.as_slice() {
                ["degree", n] => {
                    let n = n.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(|| {
                        BuildError::Parse { line: line_no, message: format!("bad degree {n:?}") }
                    })?;
                    degree = Some(n);
                    continue;
                }
                _ => {
                    return Err(BuildError::Parse {
                        line: line_no,
                        message: "expected header `degree N`".into(),
                    })
                }
            }
        };
        if tokens.len() != n {
            return Err(BuildError::Parse {
                line: line_no,
                message: format!("expected {n} images, found {}", tokens.len()),
            });
        }
        let images = tokens
            .iter()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| BuildError::Parse { line: line_no, message: e.to_string() })?;
        let perm = Permutation::from_images(&images).map_err(|e| BuildError::InvalidPermutation {
            line: line_no,
            message: e.to_string(),
        })?;
        gens.push(perm);
    }
    if degree.is_none() {
        return Err(BuildError::Parse { line: 1, message: "missing `degree N` header".into() });
    }
    Ok(gens)
}

pub fn load_permutation_group(path: &Path, cap: usize) -> Result<Group, BuildError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| BuildError::Io { path: path.to_path_buf(), source })?;
    let gens = parse_permutation_generators(&text)?;
    let degree = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().nth(1))
        .and_then(|n| n.parse::<usize>().ok())
        .expect("validated header");
    let identity: GroupElement = Permutation::identity(degree).into();
    let gens = gens.into_iter().map(GroupElement::from).collect();
    Ok(Group::closure_with_identity(identity, gens, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_CAP;

    fn classical(family: ClassicalFamily, q: u64) -> Group {
        build_classical(family, q, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn linear_orders_match_formulas() {
        use ClassicalFamily::*;
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for fam in [SL2, GL2, PGL2, PSL2] {
                let g = classical(fam, q);
                assert_eq!(g.order() as u128, fam.order(q), "{fam:?}({q})");
            }
        }
        assert_eq!(classical(SL2, 5).order(), 120);
        assert_eq!(classical(PGL2, 7).order(), 336);
        for q in [2u64, 3, 4] {
            assert_eq!(classical(SL3, q).order() as u128, SL3.order(q));
            assert_eq!(classical(PSL3, q).order() as u128, PSL3.order(q));
        }
        assert_eq!(classical(PSL3, 2).order(), 168);
    }

    #[test]
    fn symplectic_orders_and_membership() {
        use ClassicalFamily::*;
        let sp = classical(Sp4, 2);
        assert_eq!(sp.order(), 720);
        let sp3 = classical(Sp4, 3);
        assert_eq!(sp3.order(), 51_840);
        assert!(sp3.elements().all(|g| preserves_symplectic_form(g.as_matrix().unwrap())));
        // q^4 (q^2 - 1)(q^4 - 1) / gcd(2, q - 1) at q = 3
        assert_eq!(sp3.projective_quotient().unwrap().order(), 81 * 8 * 80 / 2);
    }

    #[test]
    fn sl_membership_is_total() {
        let g = classical(ClassicalFamily::SL3, 3);
        let f = Field::of_order(3).unwrap();
        assert!(g.elements().all(|x| x.as_matrix().unwrap().det().code() == f.one()));
    }

    #[test]
    fn su3_over_gf9() {
        let g = build_su3(3, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 6048);
        assert_eq!(g.order() as u128, 27 * 28 * 8);
        for gen in g.generators() {
            assert!(is_unitary_fixed_point(gen.as_matrix().unwrap(), 3));
        }
        // trivial scalar center since gcd(3, q + 1) = 1
        assert_eq!(build_classical(ClassicalFamily::PSU3, 3, DEFAULT_CAP).unwrap().order(), 6048);
    }

    #[test]
    fn su3_unipotent_rejects_inadmissible_pairs() {
        let f = Field::of_order(9).unwrap();
        let alpha = f.one();
        let bad = f.elements().find(|&b| f.add(b, f.pow(b, 3)) != f.pow(alpha, 4)).unwrap();
        assert!(matches!(su3_unipotent(&f, 3, alpha, bad), Err(BuildError::NotInSu3(_))));
        let params = su3_unipotent_parameters(&f, 3);
        assert_eq!(params.len(), 27);
    }

    #[test]
    fn su3_small_cap() {
        assert!(matches!(build_su3(3, 1000), Err(BuildError::OrderExceedsCap { .. })));
    }

    #[test]
    fn alternating_groups() {
        assert_eq!(build_alternating(5, DEFAULT_CAP).unwrap().order(), 60);
        assert_eq!(build_alternating(7, DEFAULT_CAP).unwrap().order(), 2520);
        assert!(matches!(build_alternating(2, DEFAULT_CAP), Err(BuildError::InvalidDegree(2))));
        let err = build_alternating(14, DEFAULT_CAP).unwrap_err();
        assert!(err.is_resource());
        let err = build_alternating(10, 1_000_000).unwrap_err();
        assert!(matches!(err, BuildError::OrderExceedsCap { order: 1_814_400, .. }));
        assert!(build_alternating(5, DEFAULT_CAP)
            .unwrap()
            .elements()
            .all(|x| x.as_perm().unwrap().is_even()));
    }

    #[test]
    fn exceptional_isomorphism_sanity() {
        let sizes = |g: &Group| {
            let mut s: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size).collect();
            s.sort();
            s
        };
        let a5 = build_alternating(5, DEFAULT_CAP).unwrap();
        for q in [4, 5] {
            let g = classical(ClassicalFamily::PSL2, q);
            assert_eq!(g.order(), 60);
            assert_eq!(sizes(&g), sizes(&a5));
        }
    }

    #[test]
    fn generator_file_parsing() {
        let text = "# two generators of S5\ndegree 5\n2 3 4 5 1\n\n2 1 3 4 5   # a transposition\n";
        let gens = parse_permutation_generators(text).unwrap();
        assert_eq!(gens.len(), 2);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s5.txt");
        std::fs::write(&path, text).unwrap();
        let g = load_permutation_group(&path, DEFAULT_CAP).unwrap();
        assert_eq!(120 % g.order(), 0);
        assert_eq!(g.order(), 120);

        let repeated = "degree 3\n1 1 2\n";
        assert!(matches!(
            parse_permutation_generators(repeated),
            Err(BuildError::InvalidPermutation { line: 2, .. })
        ));
        let short = "degree 4\n1 2 3\n";
        assert!(matches!(parse_permutation_generators(short), Err(BuildError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_permutation_generators("1 2 3\n"),
            Err(BuildError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_permutation_generators("degree 2\n1 x\n"),
            Err(BuildError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn spec_grammar() {
        use ClassicalFamily::*;
        assert_eq!(GroupSpec::parse("SL2(5)").unwrap(), GroupSpec::Classical { family: SL2, q: 5 });
        assert_eq!(GroupSpec::parse(" psl( 2 , 7 )").unwrap(), GroupSpec::Classical { family: PSL2, q: 7 });
        assert_eq!(GroupSpec::parse("PSp4(3)").unwrap(), GroupSpec::Classical { family: PSp4, q: 3 });
        assert_eq!(GroupSpec::parse("SU3(3)").unwrap(), GroupSpec::Classical { family: SU3, q: 3 });
        assert_eq!(GroupSpec::parse("A(7)").unwrap(), GroupSpec::Alternating(7));
        assert_eq!(GroupSpec::parse("A5").unwrap(), GroupSpec::Alternating(5));
        assert_eq!(GroupSpec::parse("perm:x.txt").unwrap(), GroupSpec::PermFile("x.txt".into()));
        assert!(GroupSpec::parse("Foo(3)").is_err());
        assert!(GroupSpec::parse("SL5(3)").is_err());
        assert_eq!(
            GroupSpec::parse("PSL2(7)").unwrap().simple_name(),
            Some(SimpleGroupName::Psl { n: 2, q: 7 })
        );
        assert_eq!(GroupSpec::parse("SL2(7)").unwrap().simple_name(), None);
    }
}

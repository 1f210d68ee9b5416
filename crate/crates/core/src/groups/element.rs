use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::{Code, Field, Matrix};

use super::GroupError;

/// A permutation of `{1..degree}`, stored 0-based. Products act on the right:
/// `(a * b)(i) = b(a(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree as u16).collect() }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Permutation, GroupError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(GroupError::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(GroupError::InvalidPermutation(format!("{images:?}")));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u16);
        }
        Ok(Permutation { images: out.into() })
    }

    /// From disjoint cycles written 1-based, e.g. `&[&[1, 2, 3]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Permutation, GroupError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a == 0 || a > degree || b == 0 || b > degree {
                    return Err(GroupError::InvalidPermutation(format!("{cycles:?}")));
                }
                images[a - 1] = b;
            }
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn mul(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        Permutation { images: inv.into() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    pub fn to_text(&self) -> String {
        let imgs: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        format!("perm;{};{}", self.degree(), imgs.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The scalar subgroup a projective matrix is reduced by.
#[derive(Debug, PartialEq, Eq)]
pub struct ScalarSubgroup {
    field: Field,
    scalars: Vec<Code>,
}

impl ScalarSubgroup {
    pub fn new(field: &Field, mut scalars: Vec<Code>) -> Arc<ScalarSubgroup> {
        scalars.sort_unstable();
        scalars.dedup();
        Arc::new(ScalarSubgroup { field: field.clone(), scalars })
    }

    pub fn scalars(&self) -> &[Code] {
        &self.scalars
    }

    pub fn len(&self) -> usize {
        self.scalars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scalars.is_empty()
    }

    /// Smallest multiple `lambda * m` over the subgroup, in canonical order.
    pub fn canonicalize(&self, m: Matrix) -> Matrix {
        let mut best = m.clone();
        for &lambda in &self.scalars {
            if lambda == self.field.one() {
                continue;
            }
            let cand = m.scale(lambda);
            if cand < best {
                best = cand;
            }
        }
        best
    }
}

/// Element of a matrix or permutation group.
#[derive(Clone)]
pub enum GroupElement {
    Matrix {
        matrix: Matrix,
        /// Present when the element stands for a scalar coset.
        projective: Option<Arc<ScalarSubgroup>>,
    },
    Perm(Permutation),
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupElement::Matrix { matrix: a, .. }, GroupElement::Matrix { matrix: b, .. }) => a == b,
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            GroupElement::Matrix { matrix, .. } => {
                0u8.hash(state);
                matrix.hash(state);
            }
            GroupElement::Perm(p) => {
                1u8.hash(state);
                p.hash(state);
            }
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupElement::Matrix { matrix: a, .. }, GroupElement::Matrix { matrix: b, .. }) => a.cmp(b),
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.cmp(b),
            (GroupElement::Matrix { .. }, GroupElement::Perm(_)) => Ordering::Less,
            (GroupElement::Perm(_), GroupElement::Matrix { .. }) => Ordering::Greater,
        }
    }
}
impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl From<Permutation> for GroupElement {
    fn from(p: Permutation) -> Self {
        GroupElement::Perm(p)
    }
}

impl From<Matrix> for GroupElement {
    fn from(m: Matrix) -> Self {
        GroupElement::Matrix { matrix: m, projective: None }
    }
}

impl GroupElement {
    pub fn projective(m: Matrix, scalars: Arc<ScalarSubgroup>) -> GroupElement {
        let matrix = scalars.canonicalize(m);
        GroupElement::Matrix { matrix, projective: Some(scalars) }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self {
            GroupElement::Matrix { matrix, .. } => Some(matrix),
            GroupElement::Perm(_) => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            GroupElement::Perm(p) => Some(p),
            GroupElement::Matrix { .. } => None,
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, GroupElement::Matrix { projective: Some(_), .. })
    }

    /// True when `self` and `other` can be multiplied.
    pub fn compatible(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (
                GroupElement::Matrix { matrix: a, projective: pa },
                GroupElement::Matrix { matrix: b, projective: pb },
            ) => a.field() == b.field() && a.dim() == b.dim() && pa == pb,
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.degree() == b.degree(),
            _ => false,
        }
    }

    /// Identity of the same type (canonical coset representative when projective).
    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Matrix { matrix, projective } => {
                let e = Matrix::identity(matrix.field(), matrix.dim());
                match projective {
                    Some(s) => GroupElement::projective(e, s.clone()),
                    None => e.into(),
                }
            }
            GroupElement::Perm(p) => Permutation::identity(p.degree()).into(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Matrix { matrix, projective: None } => matrix.is_identity(),
            GroupElement::Matrix { matrix, projective: Some(s) } => {
                matrix.as_scalar().is_some_and(|l| s.scalars().contains(&l))
            }
            GroupElement::Perm(p) => p.is_identity(),
        }
    }

    /// Product; operands must be [`compatible`](Self::compatible).
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (
                GroupElement::Matrix { matrix: a, projective },
                GroupElement::Matrix { matrix: b, .. },
            ) => {
                let m = a.mul(b);
                match projective {
                    Some(s) => GroupElement::Matrix {
                        matrix: s.canonicalize(m),
                        projective: Some(s.clone()),
                    },
                    None => m.into(),
                }
            }
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.mul(b).into(),
            _ => panic!("product of incompatible group elements"),
        }
    }

    pub fn try_mul(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if !self.compatible(other) {
            return Err(GroupError::TypeMismatch);
        }
        Ok(self.mul(other))
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::Matrix { matrix, projective } => {
                let inv = matrix.inverse().expect("group elements are invertible");
                match projective {
                    Some(s) => GroupElement::projective(inv, s.clone()),
                    None => inv.into(),
                }
            }
            GroupElement::Perm(p) => p.inverse().into(),
        }
    }

    pub fn pow(&self, e: u64) -> GroupElement {
        let mut result = self.identity_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &GroupElement) -> GroupElement {
        g.inverse().mul(self).mul(g)
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Order by repeated multiplication.
    pub fn order(&self) -> u64 {
        let mut n = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.mul(self);
            n += 1;
        }
        n
    }

    /// Canonical serialization: the matrix text form, or
    /// `perm;N;i1,..,iN` with 1-based images.
    pub fn to_text(&self) -> String {
        match self {
            GroupElement::Matrix { matrix, .. } => matrix.to_text(),
            GroupElement::Perm(p) => p.to_text(),
        }
    }
}

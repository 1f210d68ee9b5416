use std::collections::VecDeque;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use indexmap::IndexSet;

use crate::algebra::Code;

use super::element::{GroupElement, Permutation, ScalarSubgroup};
use super::GroupError;

/// Default limit on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 5_000_000;

/// One conjugacy class. `members` holds element indices in canonical order,
/// so `members[0]` is the representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub rep_index: usize,
    pub size: usize,
    pub members: Vec<u32>,
}

/// A finite group given by generators together with its full element table.
///
/// Index 0 is always the identity; the rest follow breadth-first insertion
/// order from the generators, which makes enumeration deterministic.
pub struct Group {
    generators: Vec<GroupElement>,
    elements: IndexSet<GroupElement>,
    orders: Vec<AtomicU32>,
    canonical: OnceLock<Vec<u32>>,
    classes: OnceLock<Vec<ConjugacyClass>>,
    class_of: OnceLock<Vec<u32>>,
    involutions: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .finish()
    }
}

impl Group {
    /// Closure of `generators`; an empty list yields the trivial group.
    pub fn closure(generators: Vec<GroupElement>, cap: usize) -> Result<Group, GroupError> {
        let identity = match generators.first() {
            Some(g) => g.identity_like(),
            None => Permutation::identity(1).into(),
        };
        Group::closure_with_identity(identity, generators, cap)
    }

    pub fn closure_with_identity(
        identity: GroupElement,
        generators: Vec<GroupElement>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        if generators.iter().any(|g| !g.compatible(&identity)) {
            return Err(GroupError::TypeMismatch);
        }
        if cap == 0 {
            return Err(GroupError::CapExceeded(0));
        }
        let mut elements = IndexSet::new();
        elements.insert(identity);
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            for g in &generators {
                let y = x.mul(g);
                if !elements.contains(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded(elements.len()));
                    }
                    elements.insert(y);
                }
            }
            next += 1;
        }
        Ok(Group::from_table(generators, elements))
    }

    fn from_table(generators: Vec<GroupElement>, elements: IndexSet<GroupElement>) -> Group {
        let orders = (0..elements.len()).map(|_| AtomicU32::new(0)).collect();
        Group {
            generators,
            elements,
            orders,
            canonical: OnceLock::new(),
            classes: OnceLock::new(),
            class_of: OnceLock::new(),
            involutions: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn identity(&self) -> &GroupElement {
        &self.elements[0]
    }

    pub fn element(&self, index: usize) -> &GroupElement {
        &self.elements[index]
    }

    /// Elements in enumeration order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = &GroupElement> {
        self.elements.iter()
    }

    pub fn index_of(&self, x: &GroupElement) -> Option<usize> {
        self.elements.get_index_of(x)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.elements.contains(x)
    }

    pub fn require(&self, x: &GroupElement) -> Result<usize, GroupError> {
        self.index_of(x).ok_or(GroupError::NotAMember)
    }

    /// Element indices sorted by canonical element order.
    pub fn canonical_order(&self) -> &[u32] {
        self.canonical.get_or_init(|| {
            let mut idx: Vec<u32> = (0..self.order() as u32).collect();
            idx.sort_by(|&a, &b| self.elements[a as usize].cmp(&self.elements[b as usize]));
            idx
        })
    }

    pub fn element_order(&self, index: usize) -> u32 {
        let cached = self.orders[index].load(AtomicOrdering::Relaxed);
        if cached != 0 {
            return cached;
        }
        let n = self.elements[index].order() as u32;
        self.orders[index].store(n, AtomicOrdering::Relaxed);
        n
    }

    pub fn order_of(&self, x: &GroupElement) -> Result<u32, GroupError> {
        Ok(self.element_order(self.require(x)?))
    }

    /// Conjugation orbits, sorted by (size, canonical representative).
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| self.compute_classes())
    }

    /// Index into [`conjugacy_classes`](Self::conjugacy_classes) for each element.
    pub fn class_index(&self, element_index: usize) -> usize {
        self.class_of.get_or_init(|| {
            let mut of = vec![0u32; self.order()];
            for (ci, class) in self.conjugacy_classes().iter().enumerate() {
                for &m in &class.members {
                    of[m as usize] = ci as u32;
                }
            }
            of
        })[element_index] as usize
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order();
        let gen_pairs: Vec<(GroupElement, GroupElement)> = self
            .generators
            .iter()
            .map(|g| (g.inverse(), g.clone()))
            .collect();
        let mut assigned = vec![false; n];
        let mut raw: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut orbit = vec![start as u32];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let x = &self.elements[i];
                for (ginv, g) in &gen_pairs {
                    let y = ginv.mul(x).mul(g);
                    let j = self.elements.get_index_of(&y).expect("table is closed");
                    if !assigned[j] {
                        assigned[j] = true;
                        orbit.push(j as u32);
                        queue.push_back(j);
                    }
                }
            }
            orbit.sort_by(|&a, &b| self.elements[a as usize].cmp(&self.elements[b as usize]));
            raw.push(orbit);
        }
        raw.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then_with(|| self.elements[a[0] as usize].cmp(&self.elements[b[0] as usize]))
        });
        raw.into_iter()
            .map(|members| ConjugacyClass {
                representative: self.elements[members[0] as usize].clone(),
                rep_index: members[0] as usize,
                size: members.len(),
                members,
            })
            .collect()
    }

    /// Indices of all elements of order exactly 2, in canonical order.
    pub fn involution_indices(&self) -> &[u32] {
        self.involutions.get_or_init(|| {
            self.canonical_order()
                .iter()
                .copied()
                .filter(|&i| {
                    let x = &self.elements[i as usize];
                    !x.is_identity() && x.mul(x).is_identity()
                })
                .collect()
        })
    }

    pub fn involutions(&self) -> Vec<GroupElement> {
        self.involution_indices()
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect()
    }

    /// `{ g : gx = xg }` as indices in enumeration order.
    pub fn centralizer(&self, x: &GroupElement) -> Result<Vec<u32>, GroupError> {
        self.require(x)?;
        Ok(self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, g)| g.commutes_with(x))
            .map(|(i, _)| i as u32)
            .collect())
    }

    /// The scalar matrices `lambda * I` contained in a matrix group.
    pub fn scalar_center(&self) -> Result<Vec<Code>, GroupError> {
        let m = self.identity().as_matrix().ok_or(GroupError::TypeMismatch)?;
        let field = m.field();
        let n = m.dim();
        let mut out = Vec::new();
        for lambda in field.elements().skip(1) {
            let s: GroupElement = crate::algebra::Matrix::scalar(field, n, lambda).into();
            if self.contains(&s) {
                out.push(lambda);
            }
        }
        Ok(out)
    }

    /// Quotient of a matrix group by its scalar matrices; each coset is
    /// replaced by its smallest member in canonical order.
    pub fn projective_quotient(&self) -> Result<Group, GroupError> {
        if self.identity().is_projective() {
            return Err(GroupError::TypeMismatch);
        }
        let field = self.identity().as_matrix().ok_or(GroupError::TypeMismatch)?.field().clone();
        let scalars = ScalarSubgroup::new(&field, self.scalar_center()?);
        let project = |g: &GroupElement| {
            GroupElement::projective(g.as_matrix().expect("matrix group").clone(), scalars.clone())
        };
        let mut elements = IndexSet::with_capacity(self.order() / scalars.len().max(1));
        for g in &self.elements {
            elements.insert(project(g));
        }
        let generators = self.generators.iter().map(project).collect();
        Ok(Group::from_table(generators, elements))
    }

    /// Subgroup generated by some elements of this group.
    pub fn subgroup(&self, generators: Vec<GroupElement>) -> Result<Group, GroupError> {
        for g in &generators {
            self.require(g)?;
        }
        Group::closure_with_identity(self.identity().clone(), generators, self.order())
    }
}

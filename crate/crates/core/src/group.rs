//! Finite groups as explicit Cayley tables, plus the subgroup and
//! cyclicizer machinery the non-cyclic graph is built from.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("table has {rows} rows, expected {order}")]
    TableShape { rows: usize, order: usize },
    #[error("table row {row} has {cols} entries, expected {order}")]
    RowShape { row: usize, cols: usize, order: usize },
    #[error("table entry [{row}][{col}] = {value} is out of range")]
    EntryRange { row: usize, col: usize, value: usize },
    #[error("element 0 is not a two-sided identity: fails at element {witness}")]
    Identity { witness: usize },
    #[error("associativity fails on triple ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    Inverse { element: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexRange { index: usize, order: usize },
    #[error("operation requires a nonempty element set")]
    EmptySet,
}

/// A finite group given by its full multiplication table.
///
/// Elements are the indices `0..order`, index 0 is the identity, and
/// `table[i][j]` is the index of the product of element `i` by element `j`.
/// Construction validates the group axioms, so a `Group` value is always a
/// genuine group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
    element_names: Vec<String>,
    inverses: Vec<usize>,
}

/// A subset of a group's elements, kept sorted for deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: BTreeSet<usize>,
}

impl ElementSet {
    pub fn new() -> Self {
        ElementSet { members: BTreeSet::new() }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet { members: iter.into_iter().collect() }
    }

    pub fn singleton(g: usize) -> Self {
        Self::from_iter([g])
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(&g)
    }

    pub fn insert(&mut self, g: usize) -> bool {
        self.members.insert(g)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

impl Default for ElementSet {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet { members: iter.into_iter().collect() }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

impl Group {
    /// Builds a group from a multiplication table, checking every axiom:
    /// shape, closure, identity at index 0, associativity on all triples,
    /// and a two-sided inverse for every element.
    pub fn from_table(
        name: impl Into<String>,
        element_names: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Group, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if element_names.len() != order {
            return Err(GroupError::NameCount { expected: order, got: element_names.len() });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::RowShape { row, cols: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryRange { row, col, value });
                }
            }
        }
        for g in 0..order {
            if table[0][g] != g || table[g][0] != g {
                return Err(GroupError::Identity { witness: g });
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::Associativity { a, b, c });
                    }
                }
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            match (0..order).find(|&h| table[g][h] == 0 && table[h][g] == 0) {
                Some(h) => inverses[g] = h,
                None => return Err(GroupError::Inverse { element: g }),
            }
        }
        Ok(Group { name: name.into(), order, table, element_names, inverses })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.element_names[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Product of two elements.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    fn check_index(&self, g: usize) -> Result<(), GroupError> {
        if g >= self.order {
            return Err(GroupError::IndexRange { index: g, order: self.order });
        }
        Ok(())
    }

    /// Order of an element: the smallest k >= 1 with g^k = identity.
    pub fn element_order(&self, g: usize) -> Result<usize, GroupError> {
        self.check_index(g)?;
        let mut acc = g;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        Ok(k)
    }

    /// The subgroup generated by a nonempty set of elements: the closure of
    /// the set (plus the identity) under the group operation.
    pub fn subgroup_generated(&self, generators: &ElementSet) -> Result<ElementSet, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptySet);
        }
        for g in generators.iter() {
            self.check_index(g)?;
        }
        let mut closure: BTreeSet<usize> = generators.iter().collect();
        closure.insert(0);
        let mut frontier: Vec<usize> = closure.iter().copied().collect();
        while let Some(a) = frontier.pop() {
            for b in closure.clone() {
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if closure.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        Ok(ElementSet { members: closure })
    }

    /// Whether a nonempty set of elements generates a cyclic subgroup,
    /// i.e. the closure contains an element whose order equals its size.
    pub fn is_cyclic_subset(&self, set: &ElementSet) -> Result<bool, GroupError> {
        let closure = self.subgroup_generated(set)?;
        let size = closure.len();
        for h in closure.iter() {
            if self.element_order(h)? == size {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn pair_is_cyclic(&self, a: usize, b: usize) -> bool {
        self.is_cyclic_subset(&ElementSet::from_iter([a, b]))
            .expect("indices are in range")
    }

    /// The cyclicizer Cyc(G): elements that generate a cyclic subgroup with
    /// every element of the group. Computed by brute force over all pairs.
    pub fn cyclicizer(&self) -> ElementSet {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.pair_is_cyclic(a, b)))
            .collect()
    }

    /// True when the whole group is cyclic.
    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|g| self.element_order(g).unwrap() == self.order)
    }

    /// True when the group is abelian.
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> ElementSet {
        self.elements()
            .filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// The set of element orders occurring in the group.
    pub fn element_order_spectrum(&self) -> BTreeSet<usize> {
        self.elements().map(|g| self.element_order(g).unwrap()).collect()
    }

    pub fn count_elements_of_order(&self, k: usize) -> usize {
        self.elements().filter(|&g| self.element_order(g).unwrap() == k).count()
    }

    /// Number of distinct cyclic subgroups of size k. Each one has exactly
    /// phi(k) generators, so this is the order-k element census over phi(k).
    pub fn count_cyclic_subgroups_of_order(&self, k: usize) -> usize {
        if k == 1 {
            return 1;
        }
        let count = self.count_elements_of_order(k);
        let phi = euler_phi(k);
        debug_assert_eq!(count % phi, 0);
        count / phi
    }

    /// Enumerates every subgroup, as sorted element lists. Starts from the
    /// trivial subgroup and repeatedly extends each known subgroup by one
    /// outside generator, which reaches every subgroup.
    pub fn all_subgroups(&self) -> BTreeSet<Vec<usize>> {
        let trivial = vec![0];
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in self.elements() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens: ElementSet = h.iter().copied().collect();
                gens.insert(g);
                let bigger = self.subgroup_generated(&gens).unwrap();
                let key: Vec<usize> = bigger.iter().collect();
                if known.insert(key.clone()) {
                    frontier.push(key);
                }
            }
        }
        known
    }

    /// Number of subgroups of size k; 0 when k does not divide the order.
    pub fn count_subgroups_of_order(&self, k: usize) -> usize {
        if k == 0 || self.order % k != 0 {
            return 0;
        }
        self.all_subgroups().iter().filter(|h| h.len() == k).count()
    }

    /// Checks that a set of elements is closed under the operation and
    /// inverses (hence a subgroup) and is closed under conjugation.
    pub fn is_normal_subgroup(&self, set: &ElementSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        for a in set.iter() {
            if !set.contains(self.inverse(a)) {
                return false;
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return false;
                }
            }
            for g in self.elements() {
                let conj = self.mul(self.mul(g, a), self.inverse(g));
                if !set.contains(conj) {
                    return false;
                }
            }
        }
        true
    }

    /// Re-runs the full axiom check on the stored table.
    pub fn validate(&self) -> Result<(), GroupError> {
        Group::from_table(self.name.clone(), self.element_names.clone(), self.table.clone())
            .map(|_| ())
    }
}

/// Euler's totient: how many of 1..=n are coprime to n.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

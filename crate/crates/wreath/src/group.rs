//! Finite groups as multiplication tables, permutation groups on finite
//! point sets, generating-set validation, and Cayley graphs.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders up to this bound get an exhaustive associativity check; larger
/// tables are checked on a deterministic sample lattice.
const ASSOCIATIVITY_EXHAUSTIVE_LIMIT: usize = 256;

/// Point cap for [`PermutationGroup::symmetric`] (factorial enumeration).
pub const MAX_SYMMETRIC_POINTS: usize = 8;

/// Default element cap for [`PermutationGroup::closure`].
pub const DEFAULT_CLOSURE_CAP: u64 = 1_000_000;

const MAX_DIRECT_PRODUCT_ORDER: usize = 1024;

/// A finite group stored as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table given over element labels.
    pub fn from_table<S: AsRef<str>>(
        elements: Vec<String>,
        table: &[Vec<S>],
        identity: &str,
    ) -> Result<FiniteGroup> {
        let mut index = HashMap::new();
        for el in &elements {
            if index.insert(el.clone(), index.len()).is_some() {
                return Err(Error::DuplicateLabel(el.clone()));
            }
        }
        let n = elements.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Schema(format!("multiplication table must be {n}x{n}")));
        }
        let mut idx_table = Vec::with_capacity(n);
        for row in table {
            let mut idx_row = Vec::with_capacity(n);
            for cell in row {
                idx_row.push(
                    index
                        .get(cell.as_ref())
                        .copied()
                        .ok_or_else(|| Error::UnknownLabel(cell.as_ref().to_string()))?,
                );
            }
            idx_table.push(idx_row);
        }
        let id = index
            .get(identity)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(identity.to_string()))?;
        Self::from_index_table(elements, idx_table, id)
    }

    pub(crate) fn from_index_table(
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<FiniteGroup> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Schema("group must contain at least one element".into()));
        }
        let index: HashMap<String, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, el)| (el.clone(), i))
            .collect();
        for g in 0..n {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(Error::NoIdentity(elements[identity].clone()));
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::NoInverse(elements[g].clone()))?;
            inverse.push(inv);
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if table[table[a][b]][c] != table[a][table[b][c]] {
                return Err(Error::NotAssociative {
                    a: elements[a].clone(),
                    b: elements[b].clone(),
                    c: elements[c].clone(),
                });
            }
            Ok(())
        };
        if n <= ASSOCIATIVITY_EXHAUSTIVE_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let step = n.div_ceil(64);
            let lattice: Vec<usize> = (0..n).step_by(step).collect();
            for &a in &lattice {
                for &b in &lattice {
                    for &c in &lattice {
                        check(a, b, c)?;
                    }
                }
            }
        }
        Ok(FiniteGroup {
            elements,
            index,
            table,
            identity,
            inverse,
        })
    }

    /// The cyclic group Z_n with elements `"0".."n-1"` under addition mod n.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group order must be at least 1");
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_index_table(elements, table, 0).expect("modular addition is a group")
    }

    /// Componentwise direct product, used as a test fixture.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let n = a.order().checked_mul(b.order()).filter(|&n| n <= MAX_DIRECT_PRODUCT_ORDER);
        let Some(n) = n else {
            return Err(Error::size_cap(
                "direct product order",
                format!("{}*{}", a.order(), b.order()),
                MAX_DIRECT_PRODUCT_ORDER as u64,
            ));
        };
        let pair = |x: usize, y: usize| x * b.order() + y;
        let mut elements = Vec::with_capacity(n);
        for x in 0..a.order() {
            for y in 0..b.order() {
                elements.push(format!("({},{})", a.elements[x], b.elements[y]));
            }
        }
        let mut table = vec![vec![0; n]; n];
        for x1 in 0..a.order() {
            for y1 in 0..b.order() {
                for x2 in 0..a.order() {
                    for y2 in 0..b.order() {
                        table[pair(x1, y1)][pair(x2, y2)] =
                            pair(a.mul_idx(x1, x2), b.mul_idx(y1, y2));
                    }
                }
            }
        }
        Self::from_index_table(elements, table, pair(a.identity, b.identity))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn identity_idx(&self) -> usize {
        self.identity
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Checks symmetry, absence of the identity, and that the set spans the
    /// whole group.
    pub fn validate_generating_set<S: AsRef<str>>(&self, members: &[S]) -> Result<GeneratingSet> {
        let mut idx = Vec::with_capacity(members.len());
        for m in members {
            idx.push(
                self.index_of(m.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(m.as_ref().to_string()))?,
            );
        }
        idx.sort_unstable();
        idx.dedup();
        if idx.contains(&self.identity) {
            return Err(Error::ContainsIdentity);
        }
        for &s in &idx {
            if idx.binary_search(&self.inv_idx(s)).is_err() {
                return Err(Error::NotSymmetric(self.elements[s].clone()));
            }
        }
        // breadth-first span from the identity
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(g) = queue.pop_front() {
            for &s in &idx {
                let h = self.mul_idx(g, s);
                if !seen[h] {
                    seen[h] = true;
                    reached += 1;
                    queue.push_back(h);
                }
            }
        }
        if reached != self.order() {
            return Err(Error::DoesNotGenerate {
                reached,
                order: self.order(),
            });
        }
        Ok(GeneratingSet { members: idx })
    }

    /// The Cayley graph on this group's elements: `g` adjacent to `g*s` for
    /// every generator `s`. Always `|S|`-regular and connected.
    pub fn cayley_graph(&self, s: &GeneratingSet) -> Graph {
        let mut edges = Vec::with_capacity(self.order() * s.members.len());
        for g in 0..self.order() {
            for &gen in &s.members {
                let h = self.mul_idx(g, gen);
                edges.push((self.elements[g].clone(), self.elements[h].clone()));
            }
        }
        let graph = Graph::new(self.elements.clone(), &edges).expect("group elements are distinct");
        assert_eq!(graph.regular_degree(), Some(s.members.len()));
        assert!(graph.is_connected());
        graph
    }
}

/// A symmetric, identity-free generating set, stored as sorted element
/// indices of its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    members: Vec<usize>,
}

impl GeneratingSet {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A bijection of `0..n`, stored as an image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Schema("images are not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Right-action composition: `x (self.then(g)) = (x self) g`.
    pub fn then(&self, g: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&y| g.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// A set of permutations of a labeled point set, closed under composition
/// (hence a group).
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    domain: Vec<String>,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermutationGroup {
    /// Validates closure under composition (identity and inverses follow for
    /// a finite nonempty set).
    pub fn new(domain: Vec<String>, perms: Vec<Permutation>) -> Result<PermutationGroup> {
        if perms.is_empty() {
            return Err(Error::Schema("permutation group must be nonempty".into()));
        }
        let mut index = HashMap::new();
        for p in &perms {
            if p.degree() != domain.len() {
                return Err(Error::Schema(format!(
                    "permutation degree {} does not match domain size {}",
                    p.degree(),
                    domain.len()
                )));
            }
            if index.insert(p.clone(), index.len()).is_some() {
                return Err(Error::Schema("duplicate permutation".into()));
            }
        }
        for a in &perms {
            for b in &perms {
                if !index.contains_key(&a.then(b)) {
                    return Err(Error::Schema(
                        "permutation set is not closed under composition".into(),
                    ));
                }
            }
        }
        let group = PermutationGroup {
            domain,
            perms,
            index,
        };
        debug_assert!(group.identity_idx() < group.order());
        Ok(group)
    }

    fn from_parts(domain: Vec<String>, perms: Vec<Permutation>) -> PermutationGroup {
        let index = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermutationGroup {
            domain,
            perms,
            index,
        }
    }

    /// The full symmetric group on `points`, at most [`MAX_SYMMETRIC_POINTS`]
    /// of them. Permutations are listed in lexicographic image order.
    pub fn symmetric(points: Vec<String>) -> Result<PermutationGroup> {
        let n = points.len();
        if n > MAX_SYMMETRIC_POINTS {
            return Err(Error::size_cap("symmetric group points", n, MAX_SYMMETRIC_POINTS as u64));
        }
        let perms: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect();
        Ok(Self::from_parts(points, perms))
    }

    /// The one-element group on `points`.
    pub fn trivial(points: Vec<String>) -> PermutationGroup {
        let id = Permutation::identity(points.len());
        Self::from_parts(points, vec![id])
    }

    /// Breadth-first closure of `generators` under composition, in order of
    /// discovery starting from the identity.
    pub fn closure(domain: Vec<String>, generators: &[Permutation]) -> Result<PermutationGroup> {
        Self::closure_with_cap(domain, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn closure_with_cap(
        domain: Vec<String>,
        generators: &[Permutation],
        cap: u64,
    ) -> Result<PermutationGroup> {
        for g in generators {
            if g.degree() != domain.len() {
                return Err(Error::Schema(format!(
                    "generator degree {} does not match domain size {}",
                    g.degree(),
                    domain.len()
                )));
            }
        }
        let mut perms = vec![Permutation::identity(domain.len())];
        let mut seen: HashMap<Permutation, usize> = HashMap::new();
        seen.insert(perms[0].clone(), 0);
        let mut head = 0;
        while head < perms.len() {
            let current = perms[head].clone();
            head += 1;
            for g in generators {
                let next = current.then(g);
                if !seen.contains_key(&next) {
                    if perms.len() as u64 >= cap {
                        return Err(Error::size_cap("closure", format!("more than {cap}"), cap));
                    }
                    seen.insert(next.clone(), perms.len());
                    perms.push(next);
                }
            }
        }
        Ok(PermutationGroup {
            domain,
            perms,
            index: seen,
        })
    }

    /// The group acting on its own elements by right multiplication;
    /// permutation `k` is `x -> x*k`, in element order.
    pub fn regular_representation(g: &FiniteGroup) -> PermutationGroup {
        let perms: Vec<Permutation> = (0..g.order())
            .map(|k| Permutation {
                images: (0..g.order()).map(|x| g.mul_idx(x, k)).collect(),
            })
            .collect();
        Self::from_parts(g.elements().to_vec(), perms)
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn degree(&self) -> usize {
        self.domain.len()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity_idx(&self) -> usize {
        self.index[&Permutation::identity(self.degree())]
    }

    pub fn compose_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.perms[a].then(&self.perms[b])]
    }

    pub fn inverse_idx(&self, a: usize) -> usize {
        self.index[&self.perms[a].inverse()]
    }

    /// The orbit of a point, as sorted point indices.
    pub fn orbit_idx(&self, x: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.perms.iter().map(|p| p.apply(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn orbit(&self, point: &str) -> Result<Vec<String>> {
        let x = self
            .domain
            .iter()
            .position(|p| p == point)
            .ok_or_else(|| Error::UnknownPoint(point.to_string()))?;
        Ok(self
            .orbit_idx(x)
            .into_iter()
            .map(|i| self.domain[i].clone())
            .collect())
    }

    pub fn is_transitive(&self) -> bool {
        self.degree() == 0 || self.orbit_idx(0).len() == self.degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_construction_and_errors() {
        let z2 = FiniteGroup::from_table(
            vec!["e".into(), "a".into()],
            &[vec!["e", "a"], vec!["a", "e"]],
            "e",
        )
        .unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.inv_idx(1), 1);

        // (a*a)*b = b but a*(a*b) = e
        let bad = FiniteGroup::from_table(
            vec!["e".into(), "a".into(), "b".into()],
            &[
                vec!["e", "a", "b"],
                vec!["a", "e", "a"],
                vec!["b", "a", "e"],
            ],
            "e",
        );
        assert!(matches!(bad, Err(Error::NotAssociative { .. })));

        let no_id = FiniteGroup::from_table(
            vec!["e".into(), "a".into()],
            &[vec!["e", "a"], vec!["a", "e"]],
            "a",
        );
        assert!(matches!(no_id, Err(Error::NoIdentity(_))));
    }

    #[test]
    fn klein_four_group() {
        let k4 = FiniteGroup::from_table(
            vec!["e".into(), "a".into(), "b".into(), "c".into()],
            &[
                vec!["e", "a", "b", "c"],
                vec!["a", "e", "c", "b"],
                vec!["b", "c", "e", "a"],
                vec!["c", "b", "a", "e"],
            ],
            "e",
        )
        .unwrap();
        assert_eq!(k4.order(), 4);
        for g in 0..4 {
            assert_eq!(k4.inv_idx(g), g);
        }
    }

    #[test]
    fn cyclic_groups() {
        let z1 = FiniteGroup::cyclic(1);
        assert_eq!(z1.order(), 1);

        let z2 = FiniteGroup::cyclic(2);
        let s = z2.validate_generating_set(&["1"]).unwrap();
        assert_eq!(s.members(), [1]);

        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.inv_idx(2), 2);
        assert_eq!(z4.inv_idx(1), 3);
    }

    #[test]
    fn generating_set_validation() {
        let z4 = FiniteGroup::cyclic(4);
        assert!(z4.validate_generating_set(&["1", "3"]).is_ok());
        assert!(matches!(
            z4.validate_generating_set(&["2"]),
            Err(Error::DoesNotGenerate { reached: 2, order: 4 })
        ));
        assert_eq!(
            z4.validate_generating_set(&["0", "1", "3"]),
            Err(Error::ContainsIdentity)
        );
        assert_eq!(
            z4.validate_generating_set(&["1"]),
            Err(Error::NotSymmetric("1".into()))
        );
    }

    #[test]
    fn cayley_graphs() {
        let z2 = FiniteGroup::cyclic(2);
        let s2 = z2.validate_generating_set(&["1"]).unwrap();
        let k2 = z2.cayley_graph(&s2);
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);

        let z4 = FiniteGroup::cyclic(4);
        let s4 = z4.validate_generating_set(&["1", "3"]).unwrap();
        let g = z4.cayley_graph(&s4);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_connected());
        let c4 = Graph::cycle(&["0", "1", "2", "3"]);
        assert_eq!(g.edges_idx(), c4.edges_idx());
    }

    #[test]
    fn symmetric_group_sizes() {
        for (n, order) in [(1usize, 1usize), (3, 6), (4, 24)] {
            let pts: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            assert_eq!(PermutationGroup::symmetric(pts).unwrap().order(), order);
        }
        let pts: Vec<String> = (0..9).map(|i| i.to_string()).collect();
        assert!(matches!(
            PermutationGroup::symmetric(pts),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn regular_representation_is_faithful_and_transitive() {
        for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(5)] {
            let rep = PermutationGroup::regular_representation(&g);
            assert_eq!(rep.order(), g.order());
            // faithful: all permutations distinct
            assert_eq!(rep.index.len(), g.order());
            assert!(rep.is_transitive());
        }
        let z2rep = PermutationGroup::regular_representation(&FiniteGroup::cyclic(2));
        assert!(z2rep.perm(0).is_identity());
        assert_eq!(z2rep.perm(1).images(), [1, 0]);
    }

    #[test]
    fn closure_examples() {
        let pts: Vec<String> = vec!["0".into(), "1".into(), "2".into()];
        let t01 = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let t12 = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let sym3 = PermutationGroup::closure(pts.clone(), &[t01, t12]).unwrap();
        assert_eq!(sym3.order(), 6);
        assert!(sym3.is_transitive());

        let only_id = PermutationGroup::closure(pts, &[]).unwrap();
        assert_eq!(only_id.order(), 1);

        let pts4: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let cycle = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let z4 = PermutationGroup::closure(pts4, &[cycle]).unwrap();
        assert_eq!(z4.order(), 4);
    }

    #[test]
    fn closure_is_a_group() {
        let pts: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let a = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 3, 1]).unwrap();
        let g = PermutationGroup::closure(pts, &[a, b]).unwrap();
        // validates: closed under composition, has identity and inverses
        assert!(PermutationGroup::new(g.domain().to_vec(), g.perms().to_vec()).is_ok());
        for i in 0..g.order() {
            let inv = g.inverse_idx(i);
            assert_eq!(g.compose_idx(i, inv), g.identity_idx());
        }
    }

    #[test]
    fn orbits_and_transitivity() {
        let trivial = PermutationGroup::trivial(vec!["x".into(), "y".into()]);
        assert!(!trivial.is_transitive());
        assert_eq!(trivial.orbit("x").unwrap(), ["x"]);

        let sym3 =
            PermutationGroup::symmetric(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(sym3.is_transitive());
        assert_eq!(sym3.orbit("b").unwrap(), ["a", "b", "c"]);
        assert!(matches!(sym3.orbit("z"), Err(Error::UnknownPoint(_))));
    }

    // oracle: exhaustive search for a table isomorphism
    fn groups_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
        if a.order() != b.order() {
            return false;
        }
        let n = a.order();
        (0..n).permutations(n).any(|map| {
            (0..n).all(|x| (0..n).all(|y| map[a.mul_idx(x, y)] == b.mul_idx(map[x], map[y])))
        })
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let k4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(k4.order(), 4);
        for g in 0..4 {
            assert_eq!(k4.inv_idx(g), g);
        }

        let z1g = FiniteGroup::direct_product(&FiniteGroup::cyclic(1), &z3).unwrap();
        assert!(groups_isomorphic(&z1g, &z3));

        let z6 = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert!(groups_isomorphic(&z6, &FiniteGroup::cyclic(6)));
    }

    #[test]
    fn size_caps() {
        let z40 = FiniteGroup::cyclic(40);
        assert!(matches!(
            FiniteGroup::direct_product(&z40, &z40),
            Err(Error::SizeCap { .. })
        ));

        let pts: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let cycle = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        assert!(matches!(
            PermutationGroup::closure_with_cap(pts, &[cycle], 3),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn permutation_basics() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let q = p.inverse();
        assert!(p.then(&q).is_identity());
        // right action: apply p first, then q
        let r = Permutation::from_images(vec![1, 0, 2]).unwrap();
        assert_eq!(p.then(&r).apply(0), r.apply(p.apply(0)));
    }
}

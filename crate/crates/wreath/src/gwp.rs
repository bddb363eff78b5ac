//! Generalized wreath products of finite permutation groups: elements are
//! tuples of function tables into the factor groups, acting coordinatewise
//! on the product point set. Composition follows the pointwise rule
//! `t_i(y) = f_i(y) * h_i(y f_{A(i)})`, with `f_{A(i)}` the map induced on
//! the ancestral coordinates; the inverse is derived by solving that rule
//! against the identity.
//!
//! The module also carries the Cayley-graph verification harness: it builds
//! the distinguished generating set (one generator per factor generator,
//! supported on the all-identities argument), and checks per instance that
//! the group's Cayley graph coincides edge-for-edge with the generalized
//! wreath product of the factor Cayley graphs.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;

use crate::enumerate::{offset, MixedRadix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{FiniteGroup, GeneratingSet, PermutationGroup};
use crate::iso;
use crate::poset::Poset;
use crate::products::{CayleyGwpSpec, GwpVertex};

/// Default cap on enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: u64 = 1_000_000;

/// An element of a generalized wreath product: per poset element `i`, a flat
/// table over the ancestral point tuples whose entries index members of the
/// factor permutation group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GwpElement {
    tables: Vec<Vec<usize>>,
}

impl GwpElement {
    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }
}

/// A generalized wreath product of permutation groups over a poset.
#[derive(Debug, Clone)]
pub struct GwpGroupSpec {
    poset: Poset,
    actions: Vec<PermutationGroup>,
    /// axes[i] = indices of the strict ancestors of i, ascending
    axes: Vec<Vec<usize>>,
    /// radices[i] = point-set sizes along axes[i]
    radices: Vec<Vec<usize>>,
    table_len: Vec<usize>,
    x_sizes: Vec<usize>,
}

impl GwpGroupSpec {
    pub fn new(poset: Poset, actions: Vec<PermutationGroup>) -> Result<GwpGroupSpec> {
        if actions.len() != poset.len() {
            return Err(Error::Schema(format!(
                "expected {} actions, got {}",
                poset.len(),
                actions.len()
            )));
        }
        let n = poset.len();
        let x_sizes: Vec<usize> = actions.iter().map(|a| a.degree()).collect();
        let axes: Vec<Vec<usize>> = (0..n).map(|i| poset.ancestors_idx(i)).collect();
        let radices: Vec<Vec<usize>> = axes
            .iter()
            .map(|axis| axis.iter().map(|&j| x_sizes[j]).collect())
            .collect();
        let mut table_len = Vec::with_capacity(n);
        for (i, r) in radices.iter().enumerate() {
            let len = MixedRadix::count(r)
                .filter(|&l| l as u64 <= u32::MAX as u64)
                .ok_or_else(|| {
                    Error::size_cap(
                        &format!("function table for `{}`", poset.elements()[i]),
                        "overflow",
                        u32::MAX as u64,
                    )
                })?;
            table_len.push(len);
        }
        Ok(GwpGroupSpec {
            poset,
            actions,
            axes,
            radices,
            table_len,
            x_sizes,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn actions(&self) -> &[PermutationGroup] {
        &self.actions
    }

    /// Total point count of `X`, if it fits a machine word.
    pub fn point_count(&self) -> Option<usize> {
        MixedRadix::count(&self.x_sizes)
    }

    /// Points of `X` in lexicographic order, as coordinate index tuples.
    pub fn points(&self) -> impl Iterator<Item = Vec<usize>> {
        MixedRadix::new(self.x_sizes.clone())
    }

    pub fn point_offset(&self, x: &[usize]) -> usize {
        offset(&self.x_sizes, x)
    }

    /// Exact group order, `prod_i |G_i| ^ |args_i|`.
    pub fn element_count(&self) -> BigUint {
        let mut count = BigUint::from(1u8);
        for i in 0..self.poset.len() {
            count *= BigUint::from(self.actions[i].order()).pow(self.table_len[i] as u32);
        }
        count
    }

    /// The neutral element: every table constant at the factor identity.
    pub fn identity(&self) -> GwpElement {
        GwpElement {
            tables: (0..self.poset.len())
                .map(|i| vec![self.actions[i].identity_idx(); self.table_len[i]])
                .collect(),
        }
    }

    /// Builds an element from per-table permutation indices.
    pub fn element(&self, tables: Vec<Vec<usize>>) -> Result<GwpElement> {
        if tables.len() != self.poset.len() {
            return Err(Error::Schema(format!(
                "expected {} tables, got {}",
                self.poset.len(),
                tables.len()
            )));
        }
        for (i, t) in tables.iter().enumerate() {
            if t.len() != self.table_len[i] {
                return Err(Error::Schema(format!(
                    "table `{}` expects {} entries, got {}",
                    self.poset.elements()[i],
                    self.table_len[i],
                    t.len()
                )));
            }
            if let Some(&bad) = t.iter().find(|&&p| p >= self.actions[i].order()) {
                return Err(Error::Schema(format!(
                    "table `{}` references permutation {} of a group of order {}",
                    self.poset.elements()[i],
                    bad,
                    self.actions[i].order()
                )));
            }
        }
        Ok(GwpElement { tables })
    }

    fn check_point(&self, x: &[usize]) -> Result<()> {
        if x.len() != self.x_sizes.len()
            || x.iter().zip(&self.x_sizes).any(|(&d, &r)| d >= r)
        {
            return Err(Error::BadPoint(format!("{x:?}")));
        }
        Ok(())
    }

    /// Right action on a point: every coordinate moves under the permutation
    /// selected by its table at the ancestral coordinates of the original
    /// point (all coordinates move simultaneously).
    pub fn act(&self, x: &[usize], f: &GwpElement) -> Result<Vec<usize>> {
        self.check_point(x)?;
        Ok(self.act_unchecked(x, f))
    }

    fn act_unchecked(&self, x: &[usize], f: &GwpElement) -> Vec<usize> {
        (0..self.poset.len())
            .map(|i| {
                let digits: Vec<usize> = self.axes[i].iter().map(|&j| x[j]).collect();
                let perm = f.tables[i][offset(&self.radices[i], &digits)];
                self.actions[i].perm(perm).apply(x[i])
            })
            .collect()
    }

    /// The image vector of the whole action of `f` over the lexicographic
    /// point enumeration.
    pub fn action_map(&self, f: &GwpElement) -> Vec<usize> {
        self.points()
            .map(|x| self.point_offset(&self.act_unchecked(&x, f)))
            .collect()
    }

    fn induced_on_members(&self, f: &GwpElement, members: &[usize]) -> Vec<usize> {
        let rad: Vec<usize> = members.iter().map(|&j| self.x_sizes[j]).collect();
        let pos_of = |a: usize| members.iter().position(|&m| m == a).expect("axis in members");
        let mut out = Vec::new();
        for y in MixedRadix::new(rad.clone()) {
            let z: Vec<usize> = members
                .iter()
                .enumerate()
                .map(|(p, &j)| {
                    let digits: Vec<usize> =
                        self.axes[j].iter().map(|&a| y[pos_of(a)]).collect();
                    let perm = f.tables[j][offset(&self.radices[j], &digits)];
                    self.actions[j].perm(perm).apply(y[p])
                })
                .collect();
            out.push(offset(&rad, &z));
        }
        out
    }

    /// The map induced by `f` on the coordinates of an ancestral subset `J`,
    /// as an image vector over the lexicographic enumeration of `X_J`. It
    /// commutes with the projection: projecting an acted point equals acting
    /// on the projected point.
    pub fn induced<S: AsRef<str>>(&self, f: &GwpElement, rel: &[S]) -> Result<Vec<usize>> {
        let mut members = Vec::with_capacity(rel.len());
        for l in rel {
            members.push(
                self.poset
                    .index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?,
            );
        }
        members.sort_unstable();
        members.dedup();
        if !self
            .poset
            .is_ancestral_mask(members.iter().fold(0u64, |m, &i| m | 1 << i))
        {
            return Err(Error::NotAncestral(
                members
                    .iter()
                    .map(|&i| self.poset.elements()[i].as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            ));
        }
        Ok(self.induced_on_members(f, &members))
    }

    /// Group composition via the pointwise rule
    /// `t_i(y) = f_i(y) * h_i(y f_{A(i)})`; applying `t` equals applying `f`
    /// then `h`.
    pub fn compose(&self, f: &GwpElement, h: &GwpElement) -> GwpElement {
        let tables = (0..self.poset.len())
            .map(|i| {
                let induced = self.induced_on_members(f, &self.axes[i]);
                (0..self.table_len[i])
                    .map(|y| {
                        self.actions[i].compose_idx(f.tables[i][y], h.tables[i][induced[y]])
                    })
                    .collect()
            })
            .collect();
        GwpElement { tables }
    }

    /// The group inverse, `h_i(z) = (f_i(z f_{A(i)}^{-1}))^{-1}`.
    pub fn inverse(&self, f: &GwpElement) -> GwpElement {
        let tables = (0..self.poset.len())
            .map(|i| {
                let induced = self.induced_on_members(f, &self.axes[i]);
                let mut pulled_back = vec![0usize; self.table_len[i]];
                for (y, &z) in induced.iter().enumerate() {
                    pulled_back[z] = y;
                }
                (0..self.table_len[i])
                    .map(|z| self.actions[i].inverse_idx(f.tables[i][pulled_back[z]]))
                    .collect()
            })
            .collect();
        GwpElement { tables }
    }

    fn flat_radices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.poset.len() {
            out.extend(std::iter::repeat_n(self.actions[i].order(), self.table_len[i]));
        }
        out
    }

    /// All elements in enumeration order: tables in poset order, each table
    /// lexicographic over arguments, entries in group member order.
    pub fn enumerate(&self) -> Result<Vec<GwpElement>> {
        self.enumerate_capped(DEFAULT_ELEMENT_CAP)
    }

    pub fn enumerate_capped(&self, cap: u64) -> Result<Vec<GwpElement>> {
        let count = self.element_count();
        if count > BigUint::from(cap) {
            return Err(Error::size_cap("generalized wreath product order", &count, cap));
        }
        let mut out = Vec::new();
        for digits in MixedRadix::new(self.flat_radices()) {
            let mut tables = Vec::with_capacity(self.poset.len());
            let mut pos = 0;
            for &len in &self.table_len {
                tables.push(digits[pos..pos + len].to_vec());
                pos += len;
            }
            out.push(GwpElement { tables });
        }
        Ok(out)
    }

    fn check_enumerable(&self, cap: u64) -> Result<()> {
        if self.point_count().is_none() {
            return Err(Error::size_cap("point set", "overflow", cap));
        }
        Ok(())
    }

    /// True iff distinct elements act differently on `X` (exhaustive).
    pub fn is_faithful(&self) -> Result<bool> {
        self.check_enumerable(DEFAULT_ELEMENT_CAP)?;
        let elements = self.enumerate()?;
        let maps: HashSet<Vec<usize>> = elements.iter().map(|f| self.action_map(f)).collect();
        Ok(maps.len() == elements.len())
    }

    /// True iff the orbit of any point under the whole group is all of `X`.
    pub fn is_transitive(&self) -> Result<bool> {
        self.check_enumerable(DEFAULT_ELEMENT_CAP)?;
        let total = self.point_count().expect("checked");
        if total == 0 {
            return Ok(true);
        }
        let start = vec![0usize; self.poset.len()];
        let orbit: HashSet<usize> = self
            .enumerate()?
            .iter()
            .map(|f| self.point_offset(&self.act_unchecked(&start, f)))
            .collect();
        Ok(orbit.len() == total)
    }

    /// The set of all action maps, for comparison against block-structure
    /// automorphisms.
    pub fn action_maps(&self) -> Result<Vec<Vec<usize>>> {
        self.check_enumerable(DEFAULT_ELEMENT_CAP)?;
        Ok(self
            .enumerate()?
            .iter()
            .map(|f| self.action_map(f))
            .collect())
    }
}

/// Builds the generalized wreath product over the regular representations of
/// the factor groups, together with the theorem's generating set: for each
/// poset element `i` and factor generator `s`, the element whose tables are
/// identity-constant except that table `i` takes `s` at the all-identities
/// argument. The result is symmetric and identity-free.
pub fn theorem_generating_set(
    poset: &Poset,
    factors: &[(FiniteGroup, GeneratingSet)],
) -> Result<(GwpGroupSpec, Vec<GwpElement>)> {
    let actions: Vec<PermutationGroup> = factors
        .iter()
        .map(|(g, _)| PermutationGroup::regular_representation(g))
        .collect();
    let spec = GwpGroupSpec::new(poset.clone(), actions)?;
    let mut gens = Vec::new();
    for (i, (_, genset)) in factors.iter().enumerate() {
        let identities: Vec<usize> = spec.axes[i]
            .iter()
            .map(|&j| factors[j].0.identity_idx())
            .collect();
        let arg = offset(&spec.radices[i], &identities);
        for &s in genset.members() {
            // in the regular representation, permutation s is element s
            let mut e = spec.identity();
            e.tables[i][arg] = s;
            gens.push(e);
        }
    }
    let identity = spec.identity();
    for e in &gens {
        assert_ne!(*e, identity, "generator equals the identity");
        assert!(
            gens.contains(&spec.inverse(e)),
            "generating set is not symmetric"
        );
    }
    Ok((spec, gens))
}

/// Outcome of the per-instance Cayley-graph verification.
#[derive(Debug, Clone, Serialize)]
pub struct CayleyTheoremReport {
    pub generates: bool,
    pub edge_sets_equal: bool,
    pub defimine_isomorphic: bool,
    pub vertices: u64,
    pub edges: u64,
    pub witness: Option<(String, String)>,
}

impl CayleyTheoremReport {
    pub fn passed(&self) -> bool {
        self.generates && self.edge_sets_equal && self.defimine_isomorphic
    }
}

/// Runs [`verify_cayley_theorem_capped`] at the default element cap.
///
/// ```
/// use wreath::group::FiniteGroup;
/// use wreath::gwp::verify_cayley_theorem;
/// use wreath::poset::Poset;
///
/// let chain = Poset::from_covers(&["1", "2"], &[("1", "2")])?;
/// let z2 = FiniteGroup::cyclic(2);
/// let s = z2.validate_generating_set(&["1"])?;
/// let report = verify_cayley_theorem(&chain, &[(z2.clone(), s.clone()), (z2, s)])?;
/// assert!(report.passed());
/// assert_eq!((report.vertices, report.edges), (8, 8)); // an octagon
/// # Ok::<(), wreath::Error>(())
/// ```
pub fn verify_cayley_theorem(
    poset: &Poset,
    factors: &[(FiniteGroup, GeneratingSet)],
) -> Result<CayleyTheoremReport> {
    verify_cayley_theorem_capped(poset, factors, DEFAULT_ELEMENT_CAP)
}

/// Checks, on one instance, that (a) the theorem generating set spans the
/// whole group, (b) the Cayley graph of the group equals the generalized
/// wreath product of the factor Cayley graphs edge-for-edge under the shared
/// vertex encoding, and (c) the plain-graph convention yields an isomorphic
/// graph. `witness` carries the first edge in the symmetric difference when
/// (b) fails.
pub fn verify_cayley_theorem_capped(
    poset: &Poset,
    factors: &[(FiniteGroup, GeneratingSet)],
    cap: u64,
) -> Result<CayleyTheoremReport> {
    let (spec, gens) = theorem_generating_set(poset, factors)?;
    let elements = spec.enumerate_capped(cap)?;

    // (a) breadth-first span from the identity
    let mut seen: HashSet<GwpElement> = HashSet::new();
    let identity = spec.identity();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(e) = queue.pop_front() {
        for s in &gens {
            let next = spec.compose(&e, s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let generates = seen.len() == elements.len();

    // (b) edge sets under identical vertex encoding
    let cay = CayleyGwpSpec::new(poset.clone(), factors.to_vec())?;
    let label = |e: &GwpElement| {
        cay.vertex_label(&GwpVertex {
            tables: e.tables.clone(),
        })
    };
    let normalize = |a: String, b: String| if a <= b { (a, b) } else { (b, a) };
    let mut group_edges: BTreeSet<(String, String)> = BTreeSet::new();
    for f in &elements {
        let from = label(f);
        for s in &gens {
            let to = label(&spec.compose(f, s));
            group_edges.insert(normalize(from.clone(), to));
        }
    }
    let graph = cay.materialize_capped(cap)?;
    let graph_edges: BTreeSet<(String, String)> = graph
        .edges_idx()
        .into_iter()
        .map(|(u, v)| normalize(graph.label(u).to_string(), graph.label(v).to_string()))
        .collect();
    let edge_sets_equal = group_edges == graph_edges;
    let witness = group_edges
        .symmetric_difference(&graph_edges)
        .next()
        .cloned();

    // (c) plain-graph convention agrees up to isomorphism
    let defimine: Graph = cay.as_graph_spec().materialize_capped(cap)?;
    let iso_cap = usize::try_from(cap).unwrap_or(usize::MAX);
    let defimine_isomorphic = iso::isomorphism_with_cap(&defimine, &graph, iso_cap)?.is_some();

    Ok(CayleyTheoremReport {
        generates,
        edge_sets_equal,
        defimine_isomorphic,
        vertices: elements.len() as u64,
        edges: graph.edge_count() as u64,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Poset {
        Poset::from_covers(&["1", "2"], &[("1", "2")]).unwrap()
    }

    fn antichain2() -> Poset {
        Poset::from_covers(&["1", "2"], &[]).unwrap()
    }

    fn v_poset() -> Poset {
        Poset::from_covers(&["1", "2", "3"], &[("1", "3"), ("2", "3")]).unwrap()
    }

    fn z2_pair() -> (FiniteGroup, GeneratingSet) {
        let g = FiniteGroup::cyclic(2);
        let s = g.validate_generating_set(&["1"]).unwrap();
        (g, s)
    }

    fn regular_spec(poset: Poset, orders: &[usize]) -> GwpGroupSpec {
        let actions = orders
            .iter()
            .map(|&n| PermutationGroup::regular_representation(&FiniteGroup::cyclic(n)))
            .collect();
        GwpGroupSpec::new(poset, actions).unwrap()
    }

    #[test]
    fn identity_and_element_counts() {
        let spec = regular_spec(chain2(), &[2, 2]);
        assert_eq!(spec.element_count(), BigUint::from(8u8));
        assert_eq!(regular_spec(antichain2(), &[2, 2]).element_count(), BigUint::from(4u8));
        let v = regular_spec(v_poset(), &[2, 2, 2]);
        assert_eq!(v.element_count(), BigUint::from(64u8));
        assert_eq!(spec.enumerate().unwrap().len(), 8);

        let id = spec.identity();
        for x in spec.points() {
            assert_eq!(spec.act(&x, &id).unwrap(), x);
        }
    }

    #[test]
    fn action_example() {
        let spec = regular_spec(chain2(), &[2, 2]);
        // f = (+1, constant +0) sends (0,0) to (1,0)
        let f = spec.element(vec![vec![1], vec![0, 0]]).unwrap();
        assert_eq!(spec.act(&[0, 0], &f).unwrap(), vec![1, 0]);
        // antichain action is coordinatewise
        let anti = regular_spec(antichain2(), &[2, 3]);
        let g = anti.element(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(anti.act(&[0, 0], &g).unwrap(), vec![1, 2]);
        assert_eq!(anti.act(&[1, 1], &g).unwrap(), vec![0, 0]);

        assert!(matches!(spec.act(&[0], &f), Err(Error::BadPoint(_))));
        assert!(matches!(spec.act(&[0, 5], &f), Err(Error::BadPoint(_))));
    }

    #[test]
    fn compose_example_from_pointwise_rule() {
        let spec = regular_spec(chain2(), &[2, 2]);
        let f = spec.element(vec![vec![1], vec![0, 0]]).unwrap();
        let h = spec.element(vec![vec![0], vec![0, 1]]).unwrap();
        let t = spec.compose(&f, &h);
        assert_eq!(t.tables(), &[vec![1], vec![1, 0]]);
    }

    #[test]
    fn compose_with_identity() {
        let spec = regular_spec(chain2(), &[2, 3]);
        let id = spec.identity();
        for f in spec.enumerate().unwrap() {
            assert_eq!(spec.compose(&f, &id), f);
            assert_eq!(spec.compose(&id, &f), f);
        }
    }

    #[test]
    fn action_homomorphism_exhaustive() {
        let spec = regular_spec(chain2(), &[2, 2]);
        let elements = spec.enumerate().unwrap();
        let points: Vec<Vec<usize>> = spec.points().collect();
        for f in &elements {
            for h in &elements {
                let t = spec.compose(f, h);
                for x in &points {
                    let via_t = spec.act(x, &t).unwrap();
                    let stepwise = spec.act(&spec.act(x, f).unwrap(), h).unwrap();
                    assert_eq!(via_t, stepwise);
                }
            }
        }
    }

    #[test]
    fn composition_is_associative_exhaustive() {
        let spec = regular_spec(chain2(), &[2, 2]);
        let elements = spec.enumerate().unwrap();
        for f in &elements {
            for g in &elements {
                for h in &elements {
                    assert_eq!(
                        spec.compose(&spec.compose(f, g), h),
                        spec.compose(f, &spec.compose(g, h))
                    );
                }
            }
        }
    }

    #[test]
    fn composition_sampled_on_the_64_element_instance() {
        let spec = regular_spec(v_poset(), &[2, 2, 2]);
        let elements = spec.enumerate().unwrap();
        assert_eq!(elements.len(), 64);
        let sample: Vec<_> = elements.iter().step_by(5).collect();
        for f in &sample {
            for g in &sample {
                for h in &sample {
                    assert_eq!(
                        spec.compose(&spec.compose(f, g), h),
                        spec.compose(f, &spec.compose(g, h))
                    );
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let spec = regular_spec(chain2(), &[2, 2]);
        let id = spec.identity();
        assert_eq!(spec.inverse(&id), id);
        for f in spec.enumerate().unwrap() {
            assert_eq!(spec.compose(&f, &spec.inverse(&f)), id);
            assert_eq!(spec.compose(&spec.inverse(&f), &f), id);
        }
        // identity above: constant tables invert pointwise
        let z3 = regular_spec(chain2(), &[3, 3]);
        let f = z3.element(vec![vec![0], vec![1, 1, 1]]).unwrap();
        assert_eq!(z3.inverse(&f).tables(), &[vec![0], vec![2, 2, 2]]);
    }

    #[test]
    fn induced_maps() {
        let spec = regular_spec(chain2(), &[2, 2]);
        let f = spec.element(vec![vec![1], vec![0, 1]]).unwrap();
        // J = {1}: the induced map is the permutation f_1
        assert_eq!(spec.induced(&f, &["1"]).unwrap(), vec![1, 0]);
        // J = empty: the one-point map
        assert_eq!(spec.induced::<&str>(&f, &[]).unwrap(), vec![0]);
        // J = I: the full action
        assert_eq!(spec.induced(&f, &["1", "2"]).unwrap(), spec.action_map(&f));
        // {2} is not ancestral
        assert!(matches!(
            spec.induced(&f, &["2"]),
            Err(Error::NotAncestral(_))
        ));
    }

    #[test]
    fn induced_commutes_with_projection() {
        let spec = regular_spec(v_poset(), &[2, 2, 2]);
        let masks = spec
            .poset()
            .ancestral_family()
            .unwrap();
        for f in spec.enumerate().unwrap() {
            for rel in &masks {
                let members: Vec<usize> = rel
                    .iter()
                    .map(|l| spec.poset().index_of(l).unwrap())
                    .collect();
                let rad: Vec<usize> = members.iter().map(|&i| spec.x_sizes[i]).collect();
                let induced = spec.induced(&f, rel).unwrap();
                for x in spec.points() {
                    let projected: Vec<usize> = members.iter().map(|&i| x[i]).collect();
                    let acted = spec.act(&x, &f).unwrap();
                    let acted_projected: Vec<usize> = members.iter().map(|&i| acted[i]).collect();
                    assert_eq!(
                        offset(&rad, &acted_projected),
                        induced[offset(&rad, &projected)]
                    );
                }
            }
        }
    }

    #[test]
    fn faithfulness() {
        assert!(regular_spec(chain2(), &[2, 2]).is_faithful().unwrap());
        assert!(regular_spec(antichain2(), &[2, 2]).is_faithful().unwrap());
        assert!(regular_spec(v_poset(), &[2, 2, 2]).is_faithful().unwrap());
    }

    #[test]
    fn transitivity_biconditional() {
        let two_points: Vec<String> = vec!["0".into(), "1".into()];
        let trivial = PermutationGroup::trivial(two_points);
        let z2 = PermutationGroup::regular_representation(&FiniteGroup::cyclic(2));
        let single = Poset::from_covers(&["1"], &[]).unwrap();

        let instances = vec![
            GwpGroupSpec::new(chain2(), vec![z2.clone(), z2.clone()]).unwrap(),
            GwpGroupSpec::new(chain2(), vec![z2.clone(), trivial.clone()]).unwrap(),
            GwpGroupSpec::new(chain2(), vec![trivial.clone(), z2.clone()]).unwrap(),
            GwpGroupSpec::new(antichain2(), vec![trivial.clone(), trivial.clone()]).unwrap(),
            GwpGroupSpec::new(single.clone(), vec![z2]).unwrap(),
            GwpGroupSpec::new(single, vec![trivial]).unwrap(),
        ];
        for spec in &instances {
            let factors_transitive = spec.actions().iter().all(|a| a.is_transitive());
            assert_eq!(spec.is_transitive().unwrap(), factors_transitive);
        }
    }

    #[test]
    fn automorphism_theorem_at_small_scale() {
        use crate::poset::BlockStructure;
        for poset in [chain2(), antichain2()] {
            let points: Vec<String> = vec!["0".into(), "1".into()];
            let sym = PermutationGroup::symmetric(points.clone()).unwrap();
            let spec = GwpGroupSpec::new(poset.clone(), vec![sym.clone(), sym]).unwrap();
            let mut action: Vec<Vec<usize>> = spec.action_maps().unwrap();
            action.sort();
            let block = BlockStructure::new(poset, vec![points.clone(), points]).unwrap();
            let mut autos = block.automorphisms().unwrap();
            autos.sort();
            assert_eq!(action, autos);
        }
    }

    #[test]
    fn generating_set_shape() {
        let (spec, gens) = theorem_generating_set(&chain2(), &[z2_pair(), z2_pair()]).unwrap();
        assert_eq!(gens.len(), 2);
        let identity = spec.identity();
        for g in &gens {
            assert_ne!(*g, identity);
            assert!(gens.contains(&spec.inverse(g)));
        }

        let (v_spec, v_gens) =
            theorem_generating_set(&v_poset(), &[z2_pair(), z2_pair(), z2_pair()]).unwrap();
        assert_eq!(v_gens.len(), 3);
        // the three generators span all 64 elements
        let mut seen: HashSet<GwpElement> = HashSet::new();
        seen.insert(v_spec.identity());
        let mut queue = VecDeque::from([v_spec.identity()]);
        while let Some(e) = queue.pop_front() {
            for s in &v_gens {
                let next = v_spec.compose(&e, s);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn cayley_theorem_on_chain() {
        let report = verify_cayley_theorem(&chain2(), &[z2_pair(), z2_pair()]).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.vertices, 8);
        assert_eq!(report.edges, 8);
        assert!(report.witness.is_none());
    }

    #[test]
    fn cayley_theorem_on_v_poset() {
        let report =
            verify_cayley_theorem(&v_poset(), &[z2_pair(), z2_pair(), z2_pair()]).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.vertices, 64);
        assert_eq!(report.edges, 96);
    }

    fn z3_pair() -> (FiniteGroup, GeneratingSet) {
        let g = FiniteGroup::cyclic(3);
        let s = g.validate_generating_set(&["1", "2"]).unwrap();
        (g, s)
    }

    #[test]
    fn cayley_theorem_with_mixed_orders_on_v_poset() {
        // two ancestors with distinct inverses feed the bottom table
        let report =
            verify_cayley_theorem(&v_poset(), &[z2_pair(), z3_pair(), z2_pair()]).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.vertices, 2 * 3 * 64);
        assert_eq!(report.edges, 384 * 4 / 2);
    }

    #[test]
    fn cayley_theorem_on_three_chain() {
        let chain3 = Poset::from_covers(&["1", "2", "3"], &[("1", "2"), ("2", "3")]).unwrap();
        let report = verify_cayley_theorem(&chain3, &[z2_pair(), z2_pair(), z2_pair()]).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.vertices, 2 * 4 * 16);
        assert_eq!(report.edges, 128 * 3 / 2);
    }

    #[test]
    fn enumeration_cap() {
        let spec = regular_spec(chain2(), &[3, 3]);
        assert!(matches!(
            spec.enumerate_capped(10),
            Err(Error::SizeCap { .. })
        ));
    }
}

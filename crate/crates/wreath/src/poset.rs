//! Finite posets given by Hasse covers, their ancestral/hereditary sets,
//! enumeration of ancestral subsets, and poset block structures with the
//! block equivalence relations.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;

use crate::enumerate::{offset, MixedRadix};
use crate::error::{Error, Result};

/// Default cap on the number of ancestral subsets enumerated by
/// [`Poset::ancestral_family`].
pub const DEFAULT_FAMILY_CAP: u64 = 1 << 20;

/// Hard cap on the total point count for [`BlockStructure::automorphisms`],
/// which searches all `|X|!` permutations.
pub const MAX_AUTOMORPHISM_POINTS: usize = 8;

// Ancestral subsets are manipulated as u64 bit masks over element indices.
const MAX_ELEMENTS: usize = 64;

/// A finite poset over string labels. The strict order is the transitive
/// closure of the input cover pairs, each pair `(upper, lower)` meaning
/// `upper` lies strictly above `lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    /// strictly_above[i] = mask of indices j with element j above element i
    strictly_above: Vec<u64>,
    /// strictly_below[i] = mask of indices j with element j below element i
    strictly_below: Vec<u64>,
}

impl Poset {
    /// Builds a poset from its element list and Hasse cover pairs
    /// `(upper, lower)`. Fails if the covers close into a cycle (including
    /// a reflexive pair).
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
        if elements.is_empty() {
            return Err(Error::Schema(
                "poset must contain at least one element".into(),
            ));
        }
        if elements.len() > MAX_ELEMENTS {
            return Err(Error::size_cap(
                "poset elements",
                elements.len(),
                MAX_ELEMENTS as u64,
            ));
        }
        let mut index = HashMap::new();
        let mut labels = Vec::with_capacity(elements.len());
        for el in elements {
            let label = el.as_ref().to_string();
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            labels.push(label);
        }
        let lookup = |l: &S| -> Result<usize> {
            index
                .get(l.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
        };
        let mut cover_idx = Vec::with_capacity(covers.len());
        for (upper, lower) in covers {
            cover_idx.push((lookup(upper)?, lookup(lower)?));
        }

        let n = labels.len();
        // strictly_below as reachability of the cover relation
        let mut below = vec![0u64; n];
        for &(u, l) in &cover_idx {
            below[u] |= 1u64 << l;
        }
        // transitive closure, one elimination pass per intermediate node
        for k in 0..n {
            for i in 0..n {
                if below[i] >> k & 1 == 1 {
                    below[i] |= below[k];
                }
            }
        }
        for (i, &mask) in below.iter().enumerate() {
            if mask >> i & 1 == 1 {
                return Err(Error::CycleDetected);
            }
        }
        let mut above = vec![0u64; n];
        for (i, &mask) in below.iter().enumerate() {
            for (j, up) in above.iter_mut().enumerate() {
                if mask >> j & 1 == 1 {
                    *up |= 1u64 << i;
                }
            }
        }
        Ok(Poset {
            elements: labels,
            index,
            covers: cover_idx,
            strictly_above: above,
            strictly_below: below,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty element lists
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// True iff element `a` lies strictly above element `b`.
    pub fn above(&self, a: usize, b: usize) -> bool {
        self.strictly_below[a] >> b & 1 == 1
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn mask_to_labels(&self, mask: u64) -> Vec<String> {
        (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.elements[i].clone())
            .collect()
    }

    fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64> {
        let mut mask = 0u64;
        for l in labels {
            mask |= 1u64 << self.require(l.as_ref())?;
        }
        Ok(mask)
    }

    /// Indices of the strict ancestors of element `i`, ascending.
    pub fn ancestors_idx(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.strictly_above[i] >> j & 1 == 1)
            .collect()
    }

    /// The ancestral set `A(i)` (strict) or `A[i]` (including `i`),
    /// sorted by declared element order.
    pub fn ancestral_set(&self, label: &str, strict: bool) -> Result<Vec<String>> {
        let i = self.require(label)?;
        let mut mask = self.strictly_above[i];
        if !strict {
            mask |= 1u64 << i;
        }
        Ok(self.mask_to_labels(mask))
    }

    /// The hereditary set `H(i)` (strict) or `H[i]` (including `i`),
    /// sorted by declared element order.
    pub fn hereditary_set(&self, label: &str, strict: bool) -> Result<Vec<String>> {
        let i = self.require(label)?;
        let mut mask = self.strictly_below[i];
        if !strict {
            mask |= 1u64 << i;
        }
        Ok(self.mask_to_labels(mask))
    }

    pub(crate) fn is_ancestral_mask(&self, mask: u64) -> bool {
        (0..self.len())
            .all(|j| mask >> j & 1 == 0 || self.strictly_above[j] & !mask == 0)
    }

    /// True iff `labels` is an upward-closed subset: whenever `i` is above a
    /// member, `i` is a member too.
    pub fn is_ancestral<S: AsRef<str>>(&self, labels: &[S]) -> Result<bool> {
        Ok(self.is_ancestral_mask(self.mask_of(labels)?))
    }

    pub(crate) fn ancestral_family_masks(&self, cap: u64) -> Result<Vec<u64>> {
        // Grow upward-closed sets one maximal-available element at a time;
        // every ancestral subset is reachable by peeling minimal members.
        let n = self.len();
        let mut seen: HashSet<u64> = HashSet::new();
        let mut stack = vec![0u64];
        seen.insert(0);
        while let Some(mask) = stack.pop() {
            for i in 0..n {
                if mask >> i & 1 == 0 && self.strictly_above[i] & !mask == 0 {
                    let next = mask | 1u64 << i;
                    if seen.insert(next) {
                        if seen.len() as u64 > cap {
                            return Err(Error::size_cap(
                                "ancestral family",
                                format!("more than {cap}"),
                                cap,
                            ));
                        }
                        stack.push(next);
                    }
                }
            }
        }
        let mut masks: Vec<u64> = seen.into_iter().collect();
        masks.sort_by_key(|&m| {
            let members: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            (members.len(), members)
        });
        Ok(masks)
    }

    /// All ancestral subsets, ordered by size and then lexicographically by
    /// member indices. Always includes the empty set and the full set.
    pub fn ancestral_family(&self) -> Result<Vec<Vec<String>>> {
        self.ancestral_family_with_cap(DEFAULT_FAMILY_CAP)
    }

    pub fn ancestral_family_with_cap(&self, cap: u64) -> Result<Vec<Vec<String>>> {
        Ok(self
            .ancestral_family_masks(cap)?
            .into_iter()
            .map(|m| self.mask_to_labels(m))
            .collect())
    }

    /// A total order on element indices in which every strict ancestor of an
    /// element appears before it; incomparable elements keep declared order.
    pub fn linear_extension_idx(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            for i in 0..n {
                if placed >> i & 1 == 0 && self.strictly_above[i] & !placed == 0 {
                    placed |= 1u64 << i;
                    out.push(i);
                    break;
                }
            }
        }
        out
    }

    pub fn linear_extension(&self) -> Vec<String> {
        self.linear_extension_idx()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect()
    }
}

/// A poset block structure: a product set `X = prod X_i` indexed by a poset,
/// carrying one equivalence relation per ancestral subset.
#[derive(Debug, Clone)]
pub struct BlockStructure {
    poset: Poset,
    point_sets: Vec<Vec<String>>,
    point_index: Vec<HashMap<String, usize>>,
}

impl BlockStructure {
    /// `point_sets[i]` is the point alphabet of poset element `i` (declared
    /// order); each must hold at least two points.
    pub fn new(poset: Poset, point_sets: Vec<Vec<String>>) -> Result<BlockStructure> {
        if point_sets.len() != poset.len() {
            return Err(Error::Schema(format!(
                "expected {} point sets, got {}",
                poset.len(),
                point_sets.len()
            )));
        }
        let mut point_index = Vec::with_capacity(point_sets.len());
        for (i, set) in point_sets.iter().enumerate() {
            if set.len() < 2 {
                return Err(Error::PointSetTooSmall(poset.elements[i].clone()));
            }
            let mut idx = HashMap::new();
            for p in set {
                if idx.insert(p.clone(), idx.len()).is_some() {
                    return Err(Error::DuplicateLabel(p.clone()));
                }
            }
            point_index.push(idx);
        }
        Ok(BlockStructure {
            poset,
            point_sets,
            point_index,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn point_sets(&self) -> &[Vec<String>] {
        &self.point_sets
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.point_sets.iter().map(|s| s.len()).collect()
    }

    /// Exact size of the product set `X`.
    pub fn total_size(&self) -> BigUint {
        self.point_sets
            .iter()
            .fold(BigUint::from(1u8), |acc, s| acc * BigUint::from(s.len()))
    }

    fn point_indices<S: AsRef<str>>(&self, point: &[S]) -> Result<Vec<usize>> {
        if point.len() != self.poset.len() {
            return Err(Error::BadPoint(format!(
                "expected {} coordinates, got {}",
                self.poset.len(),
                point.len()
            )));
        }
        point
            .iter()
            .enumerate()
            .map(|(i, p)| {
                self.point_index[i]
                    .get(p.as_ref())
                    .copied()
                    .ok_or_else(|| Error::BadPoint(format!("coordinate {i}: `{}`", p.as_ref())))
            })
            .collect()
    }

    /// `x ~_J y` iff the projections of `x` and `y` to the coordinates in `J`
    /// agree. `J` must be ancestral.
    pub fn related<S: AsRef<str>>(&self, rel: &[S], x: &[S], y: &[S]) -> Result<bool> {
        let mask = self.poset.mask_of(rel)?;
        if !self.poset.is_ancestral_mask(mask) {
            return Err(Error::NotAncestral(
                rel.iter().map(|s| s.as_ref()).join(","),
            ));
        }
        let xi = self.point_indices(x)?;
        let yi = self.point_indices(y)?;
        Ok(self.related_idx(mask, &xi, &yi))
    }

    pub(crate) fn related_idx(&self, rel_mask: u64, x: &[usize], y: &[usize]) -> bool {
        (0..self.poset.len()).all(|i| rel_mask >> i & 1 == 0 || x[i] == y[i])
    }

    /// All points of `X` in lexicographic order (first coordinate most
    /// significant), as coordinate index tuples.
    pub fn points_idx(&self) -> impl Iterator<Item = Vec<usize>> {
        MixedRadix::new(self.sizes())
    }

    pub fn point_offset(&self, point: &[usize]) -> usize {
        offset(&self.sizes(), point)
    }

    /// All permutations of `X` preserving every block relation, as image
    /// vectors over the lexicographic point enumeration. Brute force, capped
    /// at [`MAX_AUTOMORPHISM_POINTS`] points.
    pub fn automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        let total = MixedRadix::count(&self.sizes())
            .filter(|&t| t <= MAX_AUTOMORPHISM_POINTS)
            .ok_or_else(|| {
                Error::size_cap(
                    "block structure points",
                    self.total_size(),
                    MAX_AUTOMORPHISM_POINTS as u64,
                )
            })?;

        // class_of[J][point] = rank of the point's projection to J
        let masks = self.poset.ancestral_family_masks(DEFAULT_FAMILY_CAP)?;
        let sizes = self.sizes();
        let mut classes: Vec<Vec<usize>> = Vec::with_capacity(masks.len());
        for &mask in &masks {
            let members: Vec<usize> = (0..self.poset.len())
                .filter(|&i| mask >> i & 1 == 1)
                .collect();
            let radices: Vec<usize> = members.iter().map(|&i| sizes[i]).collect();
            let class = self
                .points_idx()
                .map(|pt| {
                    let digits: Vec<usize> = members.iter().map(|&i| pt[i]).collect();
                    offset(&radices, &digits)
                })
                .collect();
            classes.push(class);
        }

        let preserves = |perm: &[usize]| {
            classes.iter().all(|class| {
                (0..total).all(|x| {
                    (x..total).all(|y| (class[x] == class[y]) == (class[perm[x]] == class[perm[y]]))
                })
            })
        };
        Ok((0..total)
            .permutations(total)
            .filter(|p| preserves(p))
            .collect())
    }
}

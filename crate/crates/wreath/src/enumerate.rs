//! Mixed-radix enumeration shared by block structures, product graphs and
//! group elements. Tuples are ordered lexicographically with the first
//! coordinate most significant, which pins down every "lexicographic"
//! ordering promised by the public API.

/// Every vertex/element stores its function tables in full, so argument
/// spaces past this length are rejected up front.
pub(crate) const MAX_TABLE_LEN: usize = 1 << 24;

/// Rank of `digits` in the lexicographic enumeration of the box
/// `radices[0] x radices[1] x ...`.
pub(crate) fn offset(radices: &[usize], digits: &[usize]) -> usize {
    debug_assert_eq!(radices.len(), digits.len());
    let mut off = 0usize;
    for (&r, &d) in radices.iter().zip(digits) {
        debug_assert!(d < r);
        off = off * r + d;
    }
    off
}

/// Iterator over all digit tuples of a mixed-radix box, in lexicographic
/// order. Yields nothing if any radix is zero; yields the empty tuple once
/// when `radices` is empty.
pub(crate) struct MixedRadix {
    radices: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl MixedRadix {
    pub(crate) fn new(radices: Vec<usize>) -> Self {
        let current = if radices.contains(&0) {
            None
        } else {
            Some(vec![0; radices.len()])
        };
        MixedRadix { radices, current }
    }

    pub(crate) fn count(radices: &[usize]) -> Option<usize> {
        radices
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r))
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let digits = self.current.as_mut()?;
        let out = digits.clone();
        // advance the odometer, last digit fastest
        let mut pos = self.radices.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.radices[pos] {
                break;
            }
            digits[pos] = 0;
        }
        Some(out)
    }
}

//! The Grassmannian poset `Q(k,n)` and its two Stanley polytopes.
//!
//! `Q(k,n)` is the k x (n-k) grid `{(i,j) : 1 <= i <= k, 1 <= j <= n-k}`
//! ordered componentwise. Filters (upward closed subsets) index the vertices
//! of the order polytope, anti-chains those of the chain polytope, and
//! `min` is the bijection between the two families. Coordinates are always
//! row-major in `(i,j)`, which fixes the vector conventions used by every
//! other module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Signed, Zero};

use crate::numeric::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    InvalidDimensions { k: usize, n: usize },
    DimensionMismatch { expected: usize, got: usize },
    NotAnElement { element: (usize, usize) },
    NotUpwardClosed { missing: (usize, usize) },
    NotAnAntiChain { first: (usize, usize), second: (usize, usize) },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::InvalidDimensions { k, n } => {
                write!(f, "invalid poset dimensions: require 1 <= k < n, got k={k}, n={n}")
            }
            PosetError::DimensionMismatch { expected, got } => {
                write!(f, "vector has dimension {got}, expected {expected}")
            }
            PosetError::NotAnElement { element } => {
                write!(f, "({}, {}) is not a poset element", element.0, element.1)
            }
            PosetError::NotUpwardClosed { missing } => {
                write!(
                    f,
                    "set is not a filter: missing ({}, {})",
                    missing.0, missing.1
                )
            }
            PosetError::NotAnAntiChain { first, second } => {
                write!(
                    f,
                    "elements ({}, {}) and ({}, {}) are comparable",
                    first.0, first.1, second.0, second.1
                )
            }
        }
    }
}

/// The grid poset `Q(k,n)` with the componentwise order. Cheap to copy;
/// elements are materialized on demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrassmannPoset {
    k: usize,
    n: usize,
}

impl GrassmannPoset {
    pub fn new(k: usize, n: usize) -> Result<Self, PosetError> {
        if k < 1 || k >= n {
            return Err(PosetError::InvalidDimensions { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn num_elements(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Elements `(i,j)` in row-major order; this is the coordinate order of
    /// every vector produced by this module.
    pub fn elements(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_elements());
        for i in 1..=self.k {
            for j in 1..=self.cols() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn contains_element(&self, e: (usize, usize)) -> bool {
        (1..=self.k).contains(&e.0) && (1..=self.cols()).contains(&e.1)
    }

    pub fn index(&self, e: (usize, usize)) -> usize {
        debug_assert!(self.contains_element(e));
        (e.0 - 1) * self.cols() + (e.1 - 1)
    }

    /// The componentwise order relation.
    pub fn leq(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a.0 <= b.0 && a.1 <= b.1
    }

    pub fn lt(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a != b && self.leq(a, b)
    }

    /// Number of elements in the longest chain.
    pub fn longest_chain_len(&self) -> usize {
        self.k + self.cols() - 1
    }

    /// All filters, sorted by characteristic vector.
    ///
    /// A filter of the grid is a union of row suffixes with lengths
    /// `s_1 <= s_2 <= ... <= s_k`, so the enumeration walks monotone length
    /// profiles instead of scanning all subsets.
    pub fn filters(&self) -> Vec<Filter> {
        let mut profiles: Vec<Vec<usize>> = Vec::new();
        let mut current = Vec::with_capacity(self.k);
        fn rec(rows_left: usize, min: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rows_left == 0 {
                out.push(current.clone());
                return;
            }
            for s in min..=max {
                current.push(s);
                rec(rows_left - 1, s, max, current, out);
                current.pop();
            }
        }
        rec(self.k, 0, self.cols(), &mut current, &mut profiles);
        let mut filters: Vec<Filter> = profiles
            .into_iter()
            .map(|profile| {
                let mut members = Vec::new();
                for (i, &s) in profile.iter().enumerate() {
                    for j in (self.cols() - s + 1)..=self.cols() {
                        members.push((i + 1, j));
                    }
                }
                Filter {
                    poset: *self,
                    members,
                }
            })
            .collect();
        filters.sort_by(|a, b| a.characteristic_vector().cmp(&b.characteristic_vector()));
        filters
    }

    /// All anti-chains, sorted by characteristic vector. These are exactly
    /// the minimal-element sets of the filters.
    pub fn anti_chains(&self) -> Vec<AntiChain> {
        let mut chains: Vec<AntiChain> = self.filters().iter().map(Filter::min_elements).collect();
        chains.sort_by(|a, b| a.characteristic_vector().cmp(&b.characteristic_vector()));
        chains
    }

    /// Characteristic vectors of the filters: the vertex set of the order
    /// polytope.
    pub fn order_polytope_vertices(&self) -> Vec<Vec<Int>> {
        self.filters()
            .iter()
            .map(Filter::characteristic_vector)
            .collect()
    }

    /// Characteristic vectors of the anti-chains: the vertex set of the
    /// chain polytope.
    pub fn chain_polytope_vertices(&self) -> Vec<Vec<Int>> {
        self.anti_chains()
            .iter()
            .map(AntiChain::characteristic_vector)
            .collect()
    }

    fn check_dim(&self, x: &[Rat]) -> Result<(), PosetError> {
        if x.len() != self.num_elements() {
            return Err(PosetError::DimensionMismatch {
                expected: self.num_elements(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Exact membership in the order polytope: `0 <= x <= 1` and
    /// `x_p <= x_q` whenever `p < q`.
    pub fn order_polytope_contains(&self, x: &[Rat]) -> Result<bool, PosetError> {
        self.check_dim(x)?;
        let one = Rat::one();
        if x.iter().any(|v| v.is_negative() || *v > one) {
            return Ok(false);
        }
        let elems = self.elements();
        for (a, &ea) in elems.iter().enumerate() {
            for (b, &eb) in elems.iter().enumerate() {
                if self.lt(ea, eb) && x[a] > x[b] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Exact membership in the chain polytope: `x >= 0` and every chain sums
    /// to at most 1. Since coordinates are nonnegative it suffices to bound
    /// the maximal chains, which is done by dynamic programming over the
    /// grid.
    pub fn chain_polytope_contains(&self, x: &[Rat]) -> Result<bool, PosetError> {
        self.check_dim(x)?;
        if x.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        Ok(self.max_chain_sum(x) <= Rat::one())
    }

    /// Maximum of `sum_{p in C} x_p` over chains `C`.
    fn max_chain_sum(&self, x: &[Rat]) -> Rat {
        let cols = self.cols();
        let mut best: Vec<Rat> = vec![Rat::zero(); self.num_elements()];
        for i in 1..=self.k {
            for j in 1..=cols {
                let idx = self.index((i, j));
                let mut prev = Rat::zero();
                if i > 1 {
                    prev = prev.max(best[self.index((i - 1, j))].clone());
                }
                if j > 1 {
                    prev = prev.max(best[self.index((i, j - 1))].clone());
                }
                best[idx] = prev + &x[idx];
            }
        }
        best.into_iter().max().unwrap_or_else(Rat::zero)
    }

    /// Number of lattice points in the t-th dilate of the order polytope,
    /// from the inequality description: monotone labelings with values in
    /// `0..=t`.
    pub fn order_lattice_points(&self, t: u64) -> u64 {
        let cols = self.cols();
        let mut count = 0u64;
        let mut values: Vec<u64> = vec![0; self.num_elements()];
        // row-major DFS; the lower bound at (i,j) is max of the up/left
        // neighbors, which are already assigned
        fn rec(
            poset: &GrassmannPoset,
            pos: usize,
            t: u64,
            cols: usize,
            values: &mut Vec<u64>,
            count: &mut u64,
        ) {
            if pos == poset.num_elements() {
                *count += 1;
                return;
            }
            let i = pos / cols + 1;
            let j = pos % cols + 1;
            let mut lo = 0u64;
            if i > 1 {
                lo = lo.max(values[poset.index((i - 1, j))]);
            }
            if j > 1 {
                lo = lo.max(values[poset.index((i, j - 1))]);
            }
            for v in lo..=t {
                values[pos] = v;
                rec(poset, pos + 1, t, cols, values, count);
            }
        }
        rec(self, 0, t, cols, &mut values, &mut count);
        count
    }

    /// Number of lattice points in the t-th dilate of the chain polytope:
    /// nonnegative labelings with every maximal chain summing to at most t.
    pub fn chain_lattice_points(&self, t: u64) -> u64 {
        let cols = self.cols();
        let mut count = 0u64;
        // best[idx] = largest chain sum ending at idx
        let mut best: Vec<u64> = vec![0; self.num_elements()];
        fn rec(
            poset: &GrassmannPoset,
            pos: usize,
            t: u64,
            cols: usize,
            best: &mut Vec<u64>,
            count: &mut u64,
        ) {
            if pos == poset.num_elements() {
                *count += 1;
                return;
            }
            let i = pos / cols + 1;
            let j = pos % cols + 1;
            let mut prev = 0u64;
            if i > 1 {
                prev = prev.max(best[poset.index((i - 1, j))]);
            }
            if j > 1 {
                prev = prev.max(best[poset.index((i, j - 1))]);
            }
            for v in 0..=(t - prev) {
                best[pos] = prev + v;
                rec(poset, pos + 1, t, cols, best, count);
            }
        }
        rec(self, 0, t, cols, &mut best, &mut count);
        count
    }
}

/// An upward closed subset of a [`GrassmannPoset`], validated on
/// construction. Members are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    poset: GrassmannPoset,
    members: Vec<(usize, usize)>,
}

impl Filter {
    pub fn new(poset: GrassmannPoset, mut members: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if !poset.contains_element(m) {
                return Err(PosetError::NotAnElement { element: m });
            }
        }
        for &m in &members {
            for q in poset.elements() {
                if poset.lt(m, q) && !members.contains(&q) {
                    return Err(PosetError::NotUpwardClosed { missing: q });
                }
            }
        }
        Ok(Self { poset, members })
    }

    pub fn poset(&self) -> &GrassmannPoset {
        &self.poset
    }

    pub fn members(&self) -> &[(usize, usize)] {
        &self.members
    }

    pub fn characteristic_vector(&self) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.poset.num_elements()];
        for &m in &self.members {
            v[self.poset.index(m)] = Int::one();
        }
        v
    }

    /// The minimal elements; always an anti-chain, and the map is a
    /// bijection onto anti-chains with inverse [`AntiChain::upward_closure`].
    pub fn min_elements(&self) -> AntiChain {
        let members: Vec<(usize, usize)> = self
            .members
            .iter()
            .copied()
            .filter(|&p| !self.members.iter().any(|&q| self.poset.lt(q, p)))
            .collect();
        AntiChain {
            poset: self.poset,
            members,
        }
    }

    /// Row counts `s_F(i) = |{(i,j) in F}|`.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut s = vec![0usize; self.poset.k()];
        for &(i, _) in &self.members {
            s[i - 1] += 1;
        }
        s
    }
}

/// A set of pairwise incomparable elements, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiChain {
    poset: GrassmannPoset,
    members: Vec<(usize, usize)>,
}

impl AntiChain {
    pub fn new(poset: GrassmannPoset, mut members: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if !poset.contains_element(m) {
                return Err(PosetError::NotAnElement { element: m });
            }
        }
        for (a, &p) in members.iter().enumerate() {
            for &q in &members[a + 1..] {
                if poset.leq(p, q) || poset.leq(q, p) {
                    return Err(PosetError::NotAnAntiChain { first: p, second: q });
                }
            }
        }
        Ok(Self { poset, members })
    }

    pub fn poset(&self) -> &GrassmannPoset {
        &self.poset
    }

    pub fn members(&self) -> &[(usize, usize)] {
        &self.members
    }

    pub fn characteristic_vector(&self) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.poset.num_elements()];
        for &m in &self.members {
            v[self.poset.index(m)] = Int::one();
        }
        v
    }

    pub fn upward_closure(&self) -> Filter {
        let members: Vec<(usize, usize)> = self
            .poset
            .elements()
            .into_iter()
            .filter(|&q| self.members.iter().any(|&p| self.poset.leq(p, q)))
            .collect();
        Filter {
            poset: self.poset,
            members,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binomial;
    use crate::numeric::{rat, rat_frac};

    fn poset(k: usize, n: usize) -> GrassmannPoset {
        GrassmannPoset::new(k, n).unwrap()
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(GrassmannPoset::new(0, 3).is_err());
        assert!(GrassmannPoset::new(3, 3).is_err());
        assert!(GrassmannPoset::new(4, 3).is_err());
        assert!(GrassmannPoset::new(1, 2).is_ok());
    }

    #[test]
    fn element_counts_and_order_axioms() {
        for (k, n) in [(1, 2), (2, 4), (3, 7), (2, 5)] {
            let p = poset(k, n);
            let elems = p.elements();
            assert_eq!(elems.len(), k * (n - k));
            // reflexive, antisymmetric, transitive on all pairs/triples
            for &a in &elems {
                assert!(p.leq(a, a));
                for &b in &elems {
                    if p.leq(a, b) && p.leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for &c in &elems {
                        if p.leq(a, b) && p.leq(b, c) {
                            assert!(p.leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grid_2x2_has_four_covers() {
        // brute-force cover enumeration: a < b with nothing strictly between
        let p = poset(2, 4);
        let elems = p.elements();
        let mut covers = 0;
        for &a in &elems {
            for &b in &elems {
                if p.lt(a, b) && !elems.iter().any(|&c| p.lt(a, c) && p.lt(c, b)) {
                    covers += 1;
                }
            }
        }
        assert_eq!(covers, 4);
    }

    /// Oracle: filters found by scanning all subsets for upward closure.
    fn filters_by_brute_force(p: &GrassmannPoset) -> usize {
        let elems = p.elements();
        let d = elems.len();
        let mut count = 0usize;
        for mask in 0u32..(1 << d) {
            let members: Vec<(usize, usize)> = (0..d)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| elems[i])
                .collect();
            let closed = members.iter().all(|&m| {
                elems
                    .iter()
                    .all(|&q| !p.lt(m, q) || members.contains(&q))
            });
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn filter_counts_match_brute_force_and_binomial() {
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let p = poset(k, n);
            let filters = p.filters();
            assert_eq!(filters.len(), filters_by_brute_force(&p));
            assert_eq!(filters.len() as u64, binomial(n, k));
        }
    }

    #[test]
    fn filters_counts_up_to_dimension_twelve() {
        for n in 2..=13usize {
            for k in 1..n {
                if k * (n - k) <= 12 {
                    let p = poset(k, n);
                    assert_eq!(p.filters().len() as u64, binomial(n, k));
                    assert_eq!(p.anti_chains().len() as u64, binomial(n, k));
                }
            }
        }
    }

    #[test]
    fn filters_are_sorted_and_include_extremes() {
        let p = poset(1, 2);
        let filters = p.filters();
        assert_eq!(filters.len(), 2);
        assert!(filters[0].members().is_empty());
        assert_eq!(filters[1].members(), [(1, 1)]);
    }

    #[test]
    fn q37_example_filter() {
        let p = poset(3, 7);
        let f = Filter::new(p, alloc::vec![(3, 2), (3, 3), (3, 4), (2, 4), (1, 4)]).unwrap();
        assert!(p.filters().contains(&f));
        let min = f.min_elements();
        assert_eq!(min.members(), [(1, 4), (3, 2)]);
        assert_eq!(min.upward_closure(), f);
        assert_eq!(f.row_counts(), [1, 1, 3]);
    }

    #[test]
    fn non_filters_are_rejected() {
        let p = poset(2, 4);
        assert!(matches!(
            Filter::new(p, alloc::vec![(1, 1)]),
            Err(PosetError::NotUpwardClosed { .. })
        ));
        assert!(matches!(
            Filter::new(p, alloc::vec![(5, 1)]),
            Err(PosetError::NotAnElement { .. })
        ));
        assert!(matches!(
            AntiChain::new(p, alloc::vec![(1, 1), (2, 2)]),
            Err(PosetError::NotAnAntiChain { .. })
        ));
    }

    #[test]
    fn min_elements_is_a_bijection_on_q25() {
        let p = poset(2, 5);
        let filters = p.filters();
        let mut seen = Vec::new();
        for f in &filters {
            let a = f.min_elements();
            // anti-chain validity
            assert!(AntiChain::new(p, a.members().to_vec()).is_ok());
            assert_eq!(&a.upward_closure(), f, "closure must invert min");
            seen.push(a.members().to_vec());
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), filters.len());
        // empty filter maps to empty anti-chain
        let empty = Filter::new(p, Vec::new()).unwrap();
        assert!(empty.min_elements().members().is_empty());
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(poset(1, 2).order_polytope_vertices().len(), 2);
        let verts = poset(2, 4).order_polytope_vertices();
        assert_eq!(verts.len(), 6);
        let mut dedup = verts.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 6);
        assert_eq!(poset(3, 6).order_polytope_vertices().len(), 20);
        for (k, n) in [(2, 5), (3, 6)] {
            let p = poset(k, n);
            assert_eq!(
                p.chain_polytope_vertices().len(),
                p.order_polytope_vertices().len()
            );
        }
    }

    #[test]
    fn zero_one_vectors_in_polytopes_are_exactly_indicators() {
        // order polytope <-> filters; chain polytope <-> anti-chains
        for (k, n) in [(2, 4), (2, 5)] {
            let p = poset(k, n);
            let d = p.num_elements();
            let elems = p.elements();
            let filter_vecs: Vec<Vec<Int>> = p.order_polytope_vertices();
            let chain_vecs: Vec<Vec<Int>> = p.chain_polytope_vertices();
            for mask in 0u32..(1 << d) {
                let x: Vec<Rat> = (0..d)
                    .map(|i| rat((mask >> i & 1) as i64))
                    .collect();
                let as_int: Vec<Int> = (0..d).map(|i| Int::from(mask >> i & 1)).collect();
                let members: Vec<(usize, usize)> = (0..d)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| elems[i])
                    .collect();
                assert_eq!(
                    p.order_polytope_contains(&x).unwrap(),
                    filter_vecs.contains(&as_int),
                    "order membership must match filter indicators"
                );
                assert_eq!(
                    p.chain_polytope_contains(&x).unwrap(),
                    chain_vecs.contains(&as_int),
                    "chain membership must match anti-chain indicators: {members:?}"
                );
            }
        }
    }

    #[test]
    fn barycenter_and_uniform_points() {
        let p = poset(2, 4);
        let verts = p.order_polytope_vertices();
        let count = rat(verts.len() as i64);
        let mut bary = alloc::vec![Rat::zero(); p.num_elements()];
        for v in &verts {
            for (i, c) in v.iter().enumerate() {
                bary[i] += Rat::from_integer(c.clone()) / &count;
            }
        }
        assert!(p.order_polytope_contains(&bary).unwrap());

        // all-ones violates a length-2 chain in the chain polytope
        let ones = alloc::vec![rat(1); p.num_elements()];
        assert!(!p.chain_polytope_contains(&ones).unwrap());

        // uniform 1/(longest chain) sits on the boundary
        let len = p.longest_chain_len() as i64;
        let uniform = alloc::vec![rat_frac(1, len); p.num_elements()];
        assert!(p.chain_polytope_contains(&uniform).unwrap());
    }

    #[test]
    fn order_contains_rejects_dimension_mismatch_and_violations() {
        let p = poset(2, 4);
        assert!(matches!(
            p.order_polytope_contains(&[rat(0)]),
            Err(PosetError::DimensionMismatch { .. })
        ));
        // x_(1,1) = 1 with x_(1,2) = 0 breaks (1,1) < (1,2)
        let x = alloc::vec![rat(1), rat(0), rat(0), rat(0)];
        assert!(!p.order_polytope_contains(&x).unwrap());
        // out of the unit box
        let x = alloc::vec![rat(2), rat(2), rat(2), rat(2)];
        assert!(!p.order_polytope_contains(&x).unwrap());
    }

    #[test]
    fn dilate_counts_small_cases() {
        let p = poset(2, 4);
        assert_eq!(p.order_lattice_points(0), 1);
        assert_eq!(p.order_lattice_points(1), 6);
        assert_eq!(p.order_lattice_points(2), 20);
        assert_eq!(p.chain_lattice_points(1), 6);
    }
}

//! Matching fields for the Grassmannian Gr(k,n).
//!
//! A matching field assigns to every k-subset of `[n]` an ordered tuple of
//! its elements; position `i` of the tuple names the column assigned to row
//! `i`. Coherent fields arise from generic weight matrices by picking, for
//! each subset, the unique assignment of minimal weight.
//!
//! Besides the diagonal, block-diagonal and FFLV families this module builds
//! the interpolating sequence between the diagonal and FFLV fields: the
//! triple sequence `S(k,n)`, the weight matrices `M(k,n)` obtained by entry
//! swaps, the induced fields, the tuple-level swap recursion, and a closed
//! form for the tuples at every stage. Coherence of an arbitrary field is
//! decided by an exact rational LP.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{Signed, Zero};

use crate::combin::{k_subsets, permutations};
use crate::lp::{self, Cmp, Constraint, LpOutcome};
use crate::numeric::{int, rat, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    InvalidDimensions { k: usize, n: usize },
    /// Two assignments tie on this subset; the matrix is not generic.
    NonGeneric { subset: Vec<usize> },
    IndexOutOfRange { index: usize, last: usize },
    InvalidSubset { subset: Vec<usize> },
    InvalidTuples,
    MalformedMatrix,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::InvalidDimensions { k, n } => {
                write!(f, "require 1 <= k < n, got k={k}, n={n}")
            }
            FieldError::NonGeneric { subset } => {
                write!(f, "weight matrix is not generic: tie on subset {subset:?}")
            }
            FieldError::IndexOutOfRange { index, last } => {
                write!(f, "sequence index {index} out of range 0..={last}")
            }
            FieldError::InvalidSubset { subset } => {
                write!(f, "not a valid k-subset: {subset:?}")
            }
            FieldError::InvalidTuples => write!(f, "tuples do not form a matching field"),
            FieldError::MalformedMatrix => write!(f, "weight matrix rows are empty or ragged"),
        }
    }
}

fn check_dims(k: usize, n: usize) -> Result<(), FieldError> {
    if k < 1 || k >= n {
        return Err(FieldError::InvalidDimensions { k, n });
    }
    Ok(())
}

/// A k x n matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: Vec<Vec<Rat>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self, FieldError> {
        let k = rows.len();
        if k == 0 || rows[0].is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(FieldError::MalformedMatrix);
        }
        check_dims(k, rows[0].len())?;
        Ok(Self { rows })
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self, FieldError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Entry in row `i`, column `j` (both 1-based, matching tuple values).
    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i - 1][j - 1]
    }

    /// New matrix with entries `(i, a)` and `(i, b)` exchanged (1-based).
    pub fn with_swapped(&self, i: usize, a: usize, b: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[i - 1].swap(a - 1, b - 1);
        Self { rows }
    }

    /// Weight of assigning column `tuple[i]` to row `i` for all rows.
    pub fn assignment_weight(&self, tuple: &[usize]) -> Rat {
        let mut acc = Rat::zero();
        for (i, &col) in tuple.iter().enumerate() {
            acc += &self.rows[i][col - 1];
        }
        acc
    }
}

/// A matching field: every k-subset of `[n]` mapped to an arrangement of
/// itself. Stored as a sorted map, so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingField {
    k: usize,
    n: usize,
    tuples: BTreeMap<Vec<usize>, Vec<usize>>,
}

impl MatchingField {
    /// Builds a field from its tuples; the underlying sets must be exactly
    /// the k-subsets of `[n]`, each appearing once.
    pub fn from_tuples<I>(k: usize, n: usize, tuples: I) -> Result<Self, FieldError>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        check_dims(k, n)?;
        let mut map = BTreeMap::new();
        for tuple in tuples {
            let mut set = tuple.clone();
            set.sort_unstable();
            let distinct = set.windows(2).all(|w| w[0] < w[1]);
            if tuple.len() != k || !distinct || set[0] < 1 || set[k - 1] > n {
                return Err(FieldError::InvalidTuples);
            }
            if map.insert(set, tuple).is_some() {
                return Err(FieldError::InvalidTuples);
            }
        }
        if map.len() != k_subsets(n, k).len() {
            return Err(FieldError::InvalidTuples);
        }
        Ok(Self { k, n, tuples: map })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tuple(&self, subset: &[usize]) -> Option<&Vec<usize>> {
        self.tuples.get(subset)
    }

    /// `(sorted subset, tuple)` pairs in lexicographic subset order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<usize>)> {
        self.tuples.iter()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// True when every subset has a unique minimal assignment.
pub fn is_generic(m: &WeightMatrix) -> bool {
    induce_field(m).is_ok()
}

/// The matching field induced by a generic weight matrix: each subset is
/// arranged by its unique weight-minimizing assignment.
pub fn induce_field(m: &WeightMatrix) -> Result<MatchingField, FieldError> {
    let (k, n) = (m.k(), m.n());
    let perms = permutations(k);
    let mut tuples = Vec::new();
    for subset in k_subsets(n, k) {
        let mut best: Option<(Rat, Vec<usize>)> = None;
        let mut tie = false;
        for perm in &perms {
            let tuple: Vec<usize> = perm.iter().map(|&p| subset[p]).collect();
            let w = m.assignment_weight(&tuple);
            match &best {
                Some((bw, _)) if *bw == w => tie = true,
                Some((bw, _)) if *bw < w => {}
                _ => {
                    best = Some((w, tuple));
                    tie = false;
                }
            }
        }
        if tie {
            return Err(FieldError::NonGeneric { subset });
        }
        tuples.push(best.expect("at least one permutation").1);
    }
    MatchingField::from_tuples(k, n, tuples)
}

/// The diagonal matching field: every tuple ascending.
pub fn diagonal(k: usize, n: usize) -> Result<MatchingField, FieldError> {
    check_dims(k, n)?;
    MatchingField::from_tuples(k, n, k_subsets(n, k))
}

/// The block-diagonal matching field: `(j_2, j_1, j_3, ..., j_k)` when
/// `1` is in the subset, ascending otherwise.
pub fn block_diagonal(k: usize, n: usize) -> Result<MatchingField, FieldError> {
    check_dims(k, n)?;
    let tuples = k_subsets(n, k).into_iter().map(|mut s| {
        if s[0] == 1 && k >= 2 {
            s.swap(0, 1);
        }
        s
    });
    MatchingField::from_tuples(k, n, tuples)
}

/// `M_D`: row 1 is zero, row `i >= 2` has entries `(n - j) * n^(i-2)`.
pub fn diagonal_weight_matrix(k: usize, n: usize) -> Result<WeightMatrix, FieldError> {
    check_dims(k, n)?;
    let mut rows = vec![vec![Rat::zero(); n]];
    for i in 2..=k {
        let scale = int(n as i64).pow((i - 2) as u32);
        rows.push(
            (1..=n)
                .map(|j| Rat::from_integer(int((n - j) as i64) * &scale))
                .collect(),
        );
    }
    WeightMatrix::new(rows)
}

/// The block-diagonal weight matrix: row 2 becomes `(0, n-1, n-2, ..., 1)`,
/// all other rows as in `M_D`.
pub fn block_diagonal_weight_matrix(k: usize, n: usize) -> Result<WeightMatrix, FieldError> {
    let mut m = diagonal_weight_matrix(k, n)?;
    if k >= 2 {
        m.rows[1] = (0..n)
            .map(|j| if j == 0 { rat(0) } else { rat((n - j) as i64) })
            .collect();
    }
    WeightMatrix::new(m.rows)
}

/// `Diag`: entries `(i-1)(n+1-j)`. Induces the diagonal matching field and
/// is the base of the FFLV weight matrix.
pub fn diag_matrix(k: usize, n: usize) -> Result<WeightMatrix, FieldError> {
    check_dims(k, n)?;
    let rows = (1..=k)
        .map(|i| {
            (1..=n)
                .map(|j| rat(((i - 1) * (n + 1 - j)) as i64))
                .collect()
        })
        .collect();
    WeightMatrix::new(rows)
}

/// `Diag - N*D` with `D` the identity pattern; `offset` plays the role of N.
pub fn fflv_weight_matrix_with_offset(
    k: usize,
    n: usize,
    offset: &Int,
) -> Result<WeightMatrix, FieldError> {
    let mut m = diag_matrix(k, n)?;
    for i in 0..k {
        let v = &m.rows[i][i] - Rat::from_integer(offset.clone());
        m.rows[i][i] = v;
    }
    Ok(m)
}

/// The FFLV weight matrix with the default offset `N = n^3`.
pub fn fflv_weight_matrix(k: usize, n: usize) -> Result<WeightMatrix, FieldError> {
    let offset = int(n as i64).pow(3);
    fflv_weight_matrix_with_offset(k, n, &offset)
}

/// The FFLV matching field, induced by [`fflv_weight_matrix`]. Its tuples
/// put every element of the subset that lies in `[k]` at its own position
/// and arrange the rest in ascending order.
pub fn fflv(k: usize, n: usize) -> Result<MatchingField, FieldError> {
    induce_field(&fflv_weight_matrix(k, n)?)
}

/// FFLV field for a custom offset; fails with `NonGeneric` when the offset
/// is too small.
pub fn fflv_with_offset(k: usize, n: usize, offset: &Int) -> Result<MatchingField, FieldError> {
    induce_field(&fflv_weight_matrix_with_offset(k, n, offset)?)
}

/// The sequence of triples `(p, l, q)` that drives the interpolation from
/// the diagonal field to the FFLV field. Entry 0 is the seed `(k+1, k, n)`,
/// which performs no swap; entries `1..` each exchange one pair of weight
/// matrix entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSequence {
    k: usize,
    n: usize,
    entries: Vec<(usize, usize, usize)>,
}

impl TripleSequence {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(usize, usize, usize)] {
        &self.entries
    }

    /// Index of the last entry; mutation steps are `1..=last_index()`.
    pub fn last_index(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, index: usize) -> Result<(usize, usize, usize), FieldError> {
        self.entries
            .get(index)
            .copied()
            .ok_or(FieldError::IndexOutOfRange {
                index,
                last: self.last_index(),
            })
    }
}

/// Builds `S(k,n)`. Starting from the seed `(k+1, k, n)` the successor of
/// `(p, l, q)` is `(p, l, q+1)` while `q < n`, then `(p, l+1, k+1)` while
/// `l < p-1`, then `(p-1, 1, k+1)` while `p > 2`; the sequence stops at
/// `(2, 1, n)`. The sequence is not defined for `k = 1`, where the seed
/// would already be the terminator.
pub fn triple_sequence(k: usize, n: usize) -> Result<TripleSequence, FieldError> {
    check_dims(k, n)?;
    if k < 2 {
        return Err(FieldError::InvalidDimensions { k, n });
    }
    let mut entries = vec![(k + 1, k, n)];
    loop {
        let (p, l, q) = *entries.last().expect("nonempty");
        if (p, l, q) == (2, 1, n) {
            break;
        }
        let next = if q < n {
            (p, l, q + 1)
        } else if l < p - 1 {
            (p, l + 1, k + 1)
        } else {
            debug_assert!(p > 2);
            (p - 1, 1, k + 1)
        };
        entries.push(next);
    }
    Ok(TripleSequence { k, n, entries })
}

/// The weight matrices `M(k,n)`, one per sequence entry: `M_0 = M_D` and
/// `M_i` swaps entries `(l_i + 1, p_i)` and `(l_i + 1, q_i)` of `M_{i-1}`.
pub fn weight_sequence(k: usize, n: usize) -> Result<Vec<WeightMatrix>, FieldError> {
    let seq = triple_sequence(k, n)?;
    let mut out = vec![diagonal_weight_matrix(k, n)?];
    for &(p, l, q) in &seq.entries()[1..] {
        let prev = out.last().expect("nonempty");
        out.push(prev.with_swapped(l + 1, p, q));
    }
    Ok(out)
}

/// The matching field induced by the i-th weight matrix of the sequence.
pub fn intermediate_field(k: usize, n: usize, index: usize) -> Result<MatchingField, FieldError> {
    let matrices = weight_sequence(k, n)?;
    let m = matrices.get(index).ok_or(FieldError::IndexOutOfRange {
        index,
        last: matrices.len() - 1,
    })?;
    induce_field(m)
}

/// Tuple-level step: wherever `p` sits at position `l` and `q` at position
/// `l+1`, exchange them; all other tuples are untouched.
pub fn swap_step(field: &MatchingField, triple: (usize, usize, usize)) -> MatchingField {
    let (p, l, q) = triple;
    let tuples = field.entries().map(|(_, tuple)| {
        let mut t = tuple.clone();
        if l >= 1 && l < t.len() && t[l - 1] == p && t[l] == q {
            t.swap(l - 1, l);
        }
        t
    });
    MatchingField::from_tuples(field.k, field.n, tuples).expect("swap preserves field structure")
}

/// Closed form for the tuple of `subset` in the i-th intermediate field
/// (`index >= 1`):
///
/// * elements of the subset lying in `{p_i+1, ..., k}` stay at their own
///   positions;
/// * if `p_i` occurs at sorted position `s <= l_i`, it is placed at
///   position `l_i + 1` when the first later element `>= k+1` is at most
///   `q_i`, and at position `l_i` otherwise;
/// * everything else fills the remaining positions in ascending order.
pub fn tuple_oracle(
    k: usize,
    n: usize,
    index: usize,
    subset: &[usize],
) -> Result<Vec<usize>, FieldError> {
    let seq = triple_sequence(k, n)?;
    if index < 1 {
        return Err(FieldError::IndexOutOfRange {
            index,
            last: seq.last_index(),
        });
    }
    let (p, l, q) = seq.get(index)?;
    let sorted_ok = subset.windows(2).all(|w| w[0] < w[1]);
    if subset.len() != k || !sorted_ok || subset[0] < 1 || subset[k - 1] > n {
        return Err(FieldError::InvalidSubset {
            subset: subset.to_vec(),
        });
    }

    let mut slots: Vec<Option<usize>> = vec![None; k];
    let mut placed = vec![false; k]; // by sorted index into `subset`

    for (s, &j) in subset.iter().enumerate() {
        if j > p && j <= k {
            slots[j - 1] = Some(j);
            placed[s] = true;
        }
    }
    if let Some(s) = subset.iter().position(|&j| j == p) {
        if s + 1 <= l {
            let after = subset[s + 1..].iter().find(|&&j| j >= k + 1);
            let first_large = *after.expect("an element >= k+1 follows p when s <= l");
            let pos = if first_large <= q { l + 1 } else { l };
            slots[pos - 1] = Some(p);
            placed[s] = true;
        }
    }
    let mut rest = subset
        .iter()
        .enumerate()
        .filter(|&(s, _)| !placed[s])
        .map(|(_, &j)| j);
    for slot in slots.iter_mut() {
        if slot.is_none() {
            *slot = Some(rest.next().expect("counts match"));
        }
    }
    debug_assert!(rest.next().is_none());
    Ok(slots.into_iter().map(|s| s.expect("filled")).collect())
}

/// Outcome of the coherence decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coherence {
    /// A generic witness matrix inducing the field.
    Feasible(WeightMatrix),
    Infeasible,
}

impl Coherence {
    pub fn is_coherent(&self) -> bool {
        matches!(self, Coherence::Feasible(_))
    }
}

/// Decides whether the field is induced by some generic weight matrix, by
/// exact LP.
///
/// Variables are the matrix entries (split into positive and negative
/// parts) plus a slack `eps`; for every subset and every non-chosen
/// assignment the chosen one must win by at least `eps`. The system is
/// homogeneous, so the field is coherent iff the maximum of `eps` (capped
/// at 1) is positive; the maximizer then yields a strict witness.
pub fn coherence_check(field: &MatchingField) -> Coherence {
    let (k, n) = (field.k(), field.n());
    let num_entries = k * n;
    // columns: eps | entry positive parts | entry negative parts
    let num_vars = 1 + 2 * num_entries;
    let col = |i: usize, j: usize| 1 + i * n + (j - 1);

    let perms = permutations(k);
    let mut constraints = Vec::new();
    for (subset, chosen) in field.entries() {
        for perm in &perms {
            let other: Vec<usize> = perm.iter().map(|&p| subset[p]).collect();
            if other == *chosen {
                continue;
            }
            let mut coeffs = vec![Rat::zero(); num_vars];
            coeffs[0] = rat(1); // eps
            for i in 0..k {
                let plus = col(i, chosen[i]);
                coeffs[plus] += rat(1);
                coeffs[plus + num_entries] -= rat(1);
                let minus = col(i, other[i]);
                coeffs[minus] -= rat(1);
                coeffs[minus + num_entries] += rat(1);
            }
            constraints.push(Constraint::new(coeffs, Cmp::Le, rat(0)));
        }
    }
    let mut cap = vec![Rat::zero(); num_vars];
    cap[0] = rat(1);
    constraints.push(Constraint::new(cap, Cmp::Le, rat(1)));

    let mut objective = vec![Rat::zero(); num_vars];
    objective[0] = rat(1);
    match lp::maximize(&objective, &constraints) {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            let rows: Vec<Vec<Rat>> = (0..k)
                .map(|i| {
                    (1..=n)
                        .map(|j| &point[col(i, j)] - &point[col(i, j) + num_entries])
                        .collect()
                })
                .collect();
            let witness = WeightMatrix::new(rows).expect("witness has the field's shape");
            debug_assert_eq!(induce_field(&witness).as_ref(), Ok(field));
            Coherence::Feasible(witness)
        }
        LpOutcome::Optimal { .. } => Coherence::Infeasible,
        LpOutcome::Infeasible | LpOutcome::Unbounded => {
            unreachable!("zero point is feasible and eps is capped")
        }
    }
}

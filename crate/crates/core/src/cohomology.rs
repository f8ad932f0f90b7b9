//! First group cohomology `H¹(G, M)` and Tate cohomology `Ĥ⁻¹(G, M)` of a
//! lattice action, plus coboundary testing, class trivialization by rank-one
//! extension, and the non-vanishing irrationality certificate.
//!
//! Cocycles follow the convention `a(gh) = a(g) + a(h) · A_g` (row vectors,
//! right action, `a(1) = 0`).  `H¹` is computed from the full
//! element-indexed linear system: one unknown row per non-identity element,
//! one block of equations per ordered pair of non-identity elements.  The
//! groups here have order at most a few dozen, so the bookkeeping-free
//! formulation wins over presentation-based shortcuts.
//!
//! `Ĥ⁻¹(G, M) = ker(N) / span{rows of (A_g − I)}` where `N = Σ_g A_g`; the
//! augmentation rows land in `ker N` because `A_g · N = N`.

use crate::group::LatticeAction;
use crate::matrix::{
    in_row_span, kernel_basis, quotient_invariants, solve_left, unit_row, IntegerMatrix,
    QuotientStructure,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from cohomological operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("invalid class candidate: {0}")]
    InvalidClass(String),
}

/// Outcome of a certification-style test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TestStatus {
    Certified,
    Inconclusive { reason: String },
}

impl TestStatus {
    pub fn is_certified(&self) -> bool {
        matches!(self, TestStatus::Certified)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            TestStatus::Certified => None,
            TestStatus::Inconclusive { reason } => Some(reason),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            TestStatus::Certified => json!({ "outcome": "certified" }),
            TestStatus::Inconclusive { reason } => {
                json!({ "outcome": "inconclusive", "reason": reason })
            }
        }
    }
}

/// A 1-cocycle for a lattice action: one coordinate row per group element,
/// zero at the identity, satisfying `a(gh) = a(g) + a(h) · A_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    values: Vec<Vec<BigInt>>,
}

impl Cocycle {
    /// Validates and wraps per-element values indexed like the action's
    /// element list (index 0 = identity).
    pub fn from_values(
        action: &LatticeAction,
        values: Vec<Vec<BigInt>>,
    ) -> Result<Self, CohomologyError> {
        let n = action.group().order();
        let r = action.rank();
        if values.len() != n {
            return Err(CohomologyError::NotACocycle(format!(
                "expected {n} value rows, found {}",
                values.len()
            )));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != r {
                return Err(CohomologyError::NotACocycle(format!(
                    "value for `{}` has length {}, expected {r}",
                    action.group().name(i),
                    row.len()
                )));
            }
        }
        if values[0].iter().any(|x| !x.is_zero()) {
            return Err(CohomologyError::NotACocycle(
                "value at the identity must be zero".into(),
            ));
        }
        for g in 1..n {
            for h in 1..n {
                let p = action.group().mul_index(g, h);
                // a(g) + a(h)·A_g
                let mut expect = values[g].clone();
                let ag = action.matrix(g);
                for (i, coeff) in values[h].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for j in 0..r {
                        let t = coeff * ag.get(i, j);
                        expect[j] += t;
                    }
                }
                if expect != values[p] {
                    return Err(CohomologyError::NotACocycle(format!(
                        "condition fails at the pair ({}, {})",
                        action.group().name(g),
                        action.group().name(h)
                    )));
                }
            }
        }
        Ok(Cocycle { values })
    }

    /// Builds a cocycle from a name-keyed map; the identity may be omitted.
    pub fn from_named(
        action: &LatticeAction,
        named: &BTreeMap<String, Vec<BigInt>>,
    ) -> Result<Self, CohomologyError> {
        let n = action.group().order();
        let r = action.rank();
        let mut values = vec![vec![BigInt::zero(); r]; n];
        for (name, row) in named {
            let Some(i) = action.group().index_of_name(name) else {
                return Err(CohomologyError::NotACocycle(format!(
                    "`{name}` is not a group element"
                )));
            };
            values[i] = row.clone();
        }
        Self::from_values(action, values)
    }

    /// The zero cocycle.
    pub fn zero(action: &LatticeAction) -> Self {
        Cocycle {
            values: vec![vec![BigInt::zero(); action.rank()]; action.group().order()],
        }
    }

    /// Value at element index `i`.
    pub fn value(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }

    /// Elementwise difference; the result is again a cocycle.
    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        assert_eq!(self.values.len(), other.values.len());
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Cocycle { values }
    }

    /// Serializes as `{"t2": ["0", "1", …], …}` keyed by element name; the
    /// identity (always zero) is omitted.
    pub fn to_json(&self, action: &LatticeAction) -> Value {
        let mut map = Map::new();
        for i in 1..self.values.len() {
            map.insert(
                action.group().name(i).to_string(),
                Value::Array(
                    self.values[i]
                        .iter()
                        .map(|e| Value::String(e.to_string()))
                        .collect(),
                ),
            );
        }
        Value::Object(map)
    }

    /// Concatenation of the non-identity value rows, matching the unknown
    /// layout of the cocycle linear system.
    fn flatten(&self) -> Vec<BigInt> {
        self.values[1..].concat()
    }
}

/// Representatives attached to a cohomology computation: genuine cocycles
/// for `H¹`, plain lattice rows for `Ĥ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representatives {
    Cocycles(Vec<Cocycle>),
    LatticeRows(Vec<Vec<BigInt>>),
}

/// A computed cohomology group: its abstract structure (always finite here,
/// so `free_rank = 0`) plus one representative per invariant factor.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub structure: QuotientStructure,
    pub representatives: Representatives,
}

impl CohomologyResult {
    pub fn is_trivial(&self) -> bool {
        self.structure.is_trivial()
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        self.structure.factors_u64()
    }

    fn trivial(kind_cocycles: bool) -> Self {
        CohomologyResult {
            structure: QuotientStructure {
                free_rank: 0,
                invariant_factors: Vec::new(),
                torsion_representatives: Vec::new(),
            },
            representatives: if kind_cocycles {
                Representatives::Cocycles(Vec::new())
            } else {
                Representatives::LatticeRows(Vec::new())
            },
        }
    }

    /// Serializes as
    /// `{"free_rank": 0, "invariant_factors": […], "representatives": […]}`.
    pub fn to_json(&self, action: &LatticeAction) -> Value {
        let reps: Vec<Value> = match &self.representatives {
            Representatives::Cocycles(cs) => cs.iter().map(|c| c.to_json(action)).collect(),
            Representatives::LatticeRows(rows) => rows
                .iter()
                .map(|r| {
                    Value::Array(r.iter().map(|e| Value::String(e.to_string())).collect())
                })
                .collect(),
        };
        json!({
            "free_rank": self.structure.free_rank,
            "invariant_factors": self.structure.factors_u64(),
            "representatives": reps,
        })
    }
}

/// Unknown layout of the cocycle system: element `g ≥ 1` owns the block of
/// columns `[(g−1)·r, g·r)` of a flattened row vector.
fn unknown_count(action: &LatticeAction) -> usize {
    (action.group().order() - 1) * action.rank()
}

/// Constraint matrix of the full element-indexed cocycle system.  Unknowns
/// are rows (dimension `(n−1)·r`), constraints are columns: for each ordered
/// pair `(g, h)` of non-identity elements and coordinate `j`, the column
/// encodes `a(gh)_j − a(g)_j − (a(h) · A_g)_j = 0`.
fn cocycle_constraint_matrix(action: &LatticeAction) -> IntegerMatrix {
    let n = action.group().order();
    let r = action.rank();
    let unknowns = unknown_count(action);
    let pairs = (n - 1) * (n - 1);
    let mut c = IntegerMatrix::zeros(unknowns, pairs * r);
    let mut col_base = 0;
    for g in 1..n {
        let ag = action.matrix(g);
        for h in 1..n {
            let p = action.group().mul_index(g, h);
            for j in 0..r {
                let col = col_base + j;
                if p != 0 {
                    let idx = (p - 1) * r + j;
                    let v = c.get(idx, col) + 1;
                    c.set(idx, col, v);
                }
                {
                    let idx = (g - 1) * r + j;
                    let v = c.get(idx, col) - 1;
                    c.set(idx, col, v);
                }
                for i in 0..r {
                    let a = ag.get(i, j);
                    if !a.is_zero() {
                        let idx = (h - 1) * r + i;
                        let v = c.get(idx, col) - a;
                        c.set(idx, col, v);
                    }
                }
            }
            col_base += r;
        }
    }
    c
}

/// Saturated basis of the cocycle lattice `Z¹` in flattened coordinates.
fn cocycle_space(action: &LatticeAction) -> IntegerMatrix {
    kernel_basis(&cocycle_constraint_matrix(action))
}

/// Generators of the coboundary lattice `B¹`: row `t` is the flattening of
/// `g ↦ e_t · A_g − e_t`.
fn coboundary_generators(action: &LatticeAction) -> IntegerMatrix {
    let r = action.rank();
    IntegerMatrix::from_fn(r, unknown_count(action), |t, col| {
        let g = col / r + 1;
        let j = col % r;
        let mut v = action.matrix(g).get(t, j).clone();
        if t == j {
            v -= 1;
        }
        v
    })
}

fn unflatten(action: &LatticeAction, flat: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = action.group().order();
    let r = action.rank();
    let mut values = vec![vec![BigInt::zero(); r]];
    for g in 1..n {
        values.push(flat[(g - 1) * r..g * r].to_vec());
    }
    values
}

/// Computes `H¹(G, M) = Z¹ / B¹` for the action's full group.
///
/// The coboundary generators are expressed integrally in the saturated `Z¹`
/// basis (saturation makes the rational coordinates integral), and the
/// quotient's invariant factors are read off a Smith normal form.  Each
/// torsion representative lifts to a genuine cocycle.
pub fn h1(action: &LatticeAction) -> CohomologyResult {
    let n = action.group().order();
    let r = action.rank();
    if n <= 1 || r == 0 {
        return CohomologyResult::trivial(true);
    }
    let z = cocycle_space(action);
    let k = z.rows();
    let b = coboundary_generators(action);
    let coords = solve_left(&z, &b)
        .expect("coboundaries are cocycles, and the cocycle basis is saturated");
    let q = quotient_invariants(&coords, k).expect("coordinate widths agree");
    assert_eq!(
        q.free_rank, 0,
        "H^1 of a finite group on a lattice is finite"
    );
    let mut reps = Vec::new();
    let mut ambient_reps = Vec::new();
    for w in &q.torsion_representatives {
        // Lift the Z¹-coordinate representative back to a cocycle.
        let mut flat = vec![BigInt::zero(); z.cols()];
        for (i, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..z.cols() {
                let t = c * z.get(i, j);
                flat[j] += t;
            }
        }
        ambient_reps.push(flat.clone());
        let values = unflatten(action, &flat);
        let cocycle = Cocycle::from_values(action, values)
            .expect("lift of a cocycle-lattice vector is a cocycle");
        reps.push(cocycle);
    }
    CohomologyResult {
        structure: QuotientStructure {
            free_rank: 0,
            invariant_factors: q.invariant_factors,
            torsion_representatives: ambient_reps,
        },
        representatives: Representatives::Cocycles(reps),
    }
}

/// Rows `A_g − I` for all non-identity `g`, stacked vertically.
fn augmentation_rows(action: &LatticeAction) -> IntegerMatrix {
    let n = action.group().order();
    let r = action.rank();
    IntegerMatrix::from_fn((n - 1) * r, r, |row, j| {
        let g = row / r + 1;
        let i = row % r;
        let mut v = action.matrix(g).get(i, j).clone();
        if i == j {
            v -= 1;
        }
        v
    })
}

/// Computes `Ĥ⁻¹(G, M) = ker(N) / span{rows of (A_g − I)}`.
pub fn tate_minus1(action: &LatticeAction) -> CohomologyResult {
    let n = action.group().order();
    let r = action.rank();
    if n <= 1 || r == 0 {
        return CohomologyResult::trivial(false);
    }
    let norm = action.norm_matrix();
    let kernel = kernel_basis(&norm);
    let k = kernel.rows();
    let aug = augmentation_rows(action);
    let coords = solve_left(&kernel, &aug)
        .expect("augmentation rows lie in ker(N) since A_g · N = N, and the kernel basis is saturated");
    let q = quotient_invariants(&coords, k).expect("coordinate widths agree");
    assert_eq!(q.free_rank, 0, "Tate cohomology is annihilated by |G|");
    let mut rows = Vec::new();
    for w in &q.torsion_representatives {
        let mut lifted = vec![BigInt::zero(); r];
        for (i, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..r {
                let t = c * kernel.get(i, j);
                lifted[j] += t;
            }
        }
        rows.push(lifted);
    }
    CohomologyResult {
        structure: QuotientStructure {
            free_rank: 0,
            invariant_factors: q.invariant_factors,
            torsion_representatives: rows.clone(),
        },
        representatives: Representatives::LatticeRows(rows),
    }
}

/// Decides whether `a` is a coboundary `g ↦ m · A_g − m`, returning a
/// witness `m` when it is.  Fails with [`CohomologyError::NotACocycle`]
/// when `a` violates the cocycle condition.
pub fn is_coboundary(
    action: &LatticeAction,
    a: &Cocycle,
) -> Result<Option<Vec<BigInt>>, CohomologyError> {
    // Re-validate: inputs may come from outside.
    let a = Cocycle::from_values(action, a.values.clone())?;
    let n = action.group().order();
    let r = action.rank();
    if n <= 1 || r == 0 {
        return Ok(Some(vec![BigInt::zero(); r]));
    }
    // m · [A_g − I | …] = [a(g) | …]  over all non-identity g.
    let blocks: Vec<IntegerMatrix> = (1..n)
        .map(|g| action.matrix(g).sub(&IntegerMatrix::identity(r)))
        .collect();
    let block_refs: Vec<&IntegerMatrix> = blocks.iter().collect();
    let stacked = IntegerMatrix::hstack(&block_refs);
    let rhs = IntegerMatrix::from_rows(vec![a.flatten()]).expect("flattened cocycle row");
    Ok(solve_left(&stacked, &rhs).map(|x| x.row(0).to_vec()))
}

/// Extends the action by one coordinate so that the class of `a` dies: each
/// `A_g` becomes `[[A_g, 0], [−a(g), 1]]`.  The block map is a homomorphism
/// precisely because the group is abelian and `a` is a cocycle; the embedded
/// copy of `a` becomes the coboundary of `−e_{r+1}`.
pub fn adjoin_trivializer(
    action: &LatticeAction,
    a: &Cocycle,
) -> Result<LatticeAction, CohomologyError> {
    let a = Cocycle::from_values(action, a.values.clone())?;
    let r = action.rank();
    let mut generators = Vec::new();
    for (name, matrix) in action.group().generator_pairs() {
        let idx = action
            .group()
            .index_of(&matrix)
            .expect("generator belongs to its own group");
        let value = a.value(idx);
        let extended = IntegerMatrix::from_fn(r + 1, r + 1, |i, j| {
            if i < r && j < r {
                matrix.get(i, j).clone()
            } else if i == r && j == r {
                BigInt::from(1)
            } else if i == r {
                -value[j].clone()
            } else {
                BigInt::zero()
            }
        });
        generators.push((name, extended));
    }
    let labels = action.basis_labels().map(|ls| {
        let mut ls: Vec<String> = ls.to_vec();
        ls.push("adjoined".to_string());
        ls
    });
    let cap = action.group().order().max(crate::DEFAULT_MAX_GROUP_ORDER);
    Ok(LatticeAction::from_generators(&generators, labels, cap)
        .expect("block extension of an abelian action closes to an isomorphic group"))
}

/// Per-subgroup `H¹` record inside a non-vanishing report.
#[derive(Clone, Debug)]
pub struct SubgroupH1 {
    pub label: String,
    pub order: usize,
    pub invariant_factors: Vec<u64>,
}

impl SubgroupH1 {
    pub fn to_json(&self) -> Value {
        json!({
            "subgroup": self.label,
            "order": self.order,
            "h1_invariant_factors": self.invariant_factors,
        })
    }
}

/// Result of [`nonvanishing_test`]: the verdict plus the evidence computed
/// along the way.
#[derive(Clone, Debug)]
pub struct NonvanishingReport {
    pub status: TestStatus,
    /// `H¹` for each subgroup examined, in enumeration order.  On failure
    /// the last entry is the offending subgroup.
    pub subgroup_h1: Vec<SubgroupH1>,
    /// `Ĥ⁻¹(G, M)`, computed once every subgroup `H¹` vanishes.
    pub tate: Option<CohomologyResult>,
}

impl NonvanishingReport {
    pub fn is_certified(&self) -> bool {
        self.status.is_certified()
    }

    pub fn to_json(&self, action: &LatticeAction) -> Value {
        json!({
            "status": self.status.to_json(),
            "subgroup_h1": self.subgroup_h1.iter().map(SubgroupH1::to_json).collect::<Vec<_>>(),
            "tate_minus1": self.tate.as_ref().map(|t| t.to_json(action)),
        })
    }
}

/// Computes `H¹(H, M)` for every subgroup in enumeration order, stopping at
/// the first nonzero one.  Returns the per-subgroup records together with a
/// failure reason naming the offender, if any.
pub(crate) fn subgroup_h1_sweep(action: &LatticeAction) -> (Vec<SubgroupH1>, Option<String>) {
    let group = action.group();
    let full_order = group.order();
    let mut records = Vec::new();
    for sub in group.all_subgroups() {
        let restricted = action
            .restrict(&sub)
            .expect("enumerated subgroups restrict");
        let res = h1(&restricted);
        let record = SubgroupH1 {
            label: sub.label(),
            order: sub.order(),
            invariant_factors: res.invariant_factors(),
        };
        let nonzero = !res.is_trivial();
        records.push(record);
        if nonzero {
            let who = if sub.order() == full_order {
                "the full group".to_string()
            } else {
                format!("subgroup {}", sub.label())
            };
            let factors = records.last().unwrap().invariant_factors.clone();
            let reason = format!(
                "H^1({}, M) != 0 for {} (invariant factors {:?})",
                sub.label(),
                who,
                factors
            );
            return (records, Some(reason));
        }
    }
    (records, None)
}

/// The non-vanishing irrationality test: **Certified** iff `H¹(H, M) = 0`
/// for *every* subgroup `H` (the full group included) while
/// `Ĥ⁻¹(G, M) ≠ 0`.  Otherwise Inconclusive, naming the first failing
/// condition in the deterministic subgroup order.
pub fn nonvanishing_test(action: &LatticeAction) -> NonvanishingReport {
    let (records, failure) = subgroup_h1_sweep(action);
    if let Some(reason) = failure {
        return NonvanishingReport {
            status: TestStatus::Inconclusive { reason },
            subgroup_h1: records,
            tate: None,
        };
    }
    let tate = tate_minus1(action);
    if tate.is_trivial() {
        NonvanishingReport {
            status: TestStatus::Inconclusive {
                reason: "Hhat^-1(G, M) = 0".to_string(),
            },
            subgroup_h1: records,
            tate: Some(tate),
        }
    } else {
        NonvanishingReport {
            status: TestStatus::Certified,
            subgroup_h1: records,
            tate: Some(tate),
        }
    }
}

/// True iff the candidate cocycles generate `H¹(G, M)` — that is, adding
/// them to the coboundary lattice makes the quotient trivial.
pub fn h1_classes_generate(
    action: &LatticeAction,
    candidates: &[Cocycle],
) -> Result<bool, CohomologyError> {
    let n = action.group().order();
    let r = action.rank();
    if n <= 1 || r == 0 {
        return Ok(true);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in candidates {
        let c = Cocycle::from_values(action, c.values.clone())?;
        rows.push(c.flatten());
    }
    let z = cocycle_space(action);
    let k = z.rows();
    let b = coboundary_generators(action);
    let mut all = b.row_vectors();
    all.extend(rows);
    let stacked = IntegerMatrix::from_rows(all).expect("uniform widths");
    let Some(coords) = solve_left(&z, &stacked) else {
        return Err(CohomologyError::InvalidClass(
            "candidate is not in the cocycle lattice".into(),
        ));
    };
    let q = quotient_invariants(&coords, k).expect("coordinate widths agree");
    Ok(q.is_trivial())
}

/// True iff the candidate lattice rows lie in `ker N` and their classes
/// generate `Ĥ⁻¹(G, M)`.
pub fn tate_classes_generate(
    action: &LatticeAction,
    candidates: &[Vec<BigInt>],
) -> Result<bool, CohomologyError> {
    let n = action.group().order();
    let r = action.rank();
    if n <= 1 || r == 0 {
        return Ok(true);
    }
    let norm = action.norm_matrix();
    let kernel = kernel_basis(&norm);
    for c in candidates {
        if c.len() != r {
            return Err(CohomologyError::InvalidClass(format!(
                "candidate row has length {}, expected {r}",
                c.len()
            )));
        }
        if !in_row_span(&kernel, c) {
            return Err(CohomologyError::InvalidClass(
                "candidate row is not in ker(N)".into(),
            ));
        }
    }
    let aug = augmentation_rows(action);
    let mut all = aug.row_vectors();
    all.extend(candidates.iter().cloned());
    let stacked = IntegerMatrix::from_rows(all).expect("uniform widths");
    let coords = solve_left(&kernel, &stacked).expect("all rows lie in the saturated kernel");
    let q = quotient_invariants(&coords, kernel.rows()).expect("coordinate widths agree");
    Ok(q.is_trivial())
}

/// Convenience: the standard basis row `e_i` minus `e_j`.
pub fn difference_row(rank: usize, i: usize, j: usize) -> Vec<BigInt> {
    let mut v = unit_row(rank, i);
    v[j] -= 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::LatticeAction;
    use crate::DEFAULT_MAX_GROUP_ORDER;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn action_of(gens: &[(&str, &[&[i64]])]) -> LatticeAction {
        let gens: Vec<(String, IntegerMatrix)> = gens
            .iter()
            .map(|(n, rows)| (n.to_string(), IntegerMatrix::from_i64(rows)))
            .collect();
        LatticeAction::from_generators(&gens, None, DEFAULT_MAX_GROUP_ORDER).unwrap()
    }

    /// Order-two group acting on Z by negation.
    fn sign_action() -> LatticeAction {
        action_of(&[("t", &[&[-1]])])
    }

    #[test]
    fn h1_of_sign_action_is_z2() {
        // By hand: Z¹ = Z (any a(t) works since a(t) + a(t)·(−1) = 0), and
        // B¹ = 2Z, so H¹ ≅ Z/2 with representative ±e₁.
        let action = sign_action();
        let res = h1(&action);
        assert_eq!(res.invariant_factors(), vec![2]);
        let Representatives::Cocycles(reps) = &res.representatives else {
            panic!("H¹ representatives must be cocycles");
        };
        assert_eq!(reps.len(), 1);
        let witness = is_coboundary(&action, &reps[0]).unwrap();
        assert!(witness.is_none(), "representative must not be a coboundary");
    }

    #[test]
    fn h1_of_permutation_and_fixed_summands() {
        // The regular permutation module of C₂ has vanishing H¹, and a
        // fixed rank-1 summand contributes nothing: on a(t) restricted to a
        // trivial summand the condition 2·a(t) = 0 forces zero.
        let swap = action_of(&[("t", &[&[0, 1], &[1, 0]])]);
        assert!(h1(&swap).is_trivial());
        let sign_plus_fixed = action_of(&[("t", &[&[-1, 0], &[0, 1]])]);
        assert_eq!(h1(&sign_plus_fixed).invariant_factors(), vec![2]);
    }

    #[test]
    fn h1_of_trivial_group_vanishes() {
        let action = action_of(&[("t", &[&[1, 0], &[0, 1]])]);
        assert_eq!(action.group().order(), 1);
        assert!(h1(&action).is_trivial());
        assert!(tate_minus1(&action).is_trivial());
    }

    #[test]
    fn tate_of_sign_action_is_z2() {
        // N = 0, so ker N = Z; the augmentation row is −2, giving Z/2.
        let action = sign_action();
        let res = tate_minus1(&action);
        assert_eq!(res.invariant_factors(), vec![2]);
        let Representatives::LatticeRows(rows) = &res.representatives else {
            panic!("Tate representatives are lattice rows");
        };
        assert_eq!(rows.len(), 1);
        assert!(tate_classes_generate(&action, rows).unwrap());
    }

    #[test]
    fn tate_of_regular_permutation_action_vanishes() {
        let action = action_of(&[("t", &[&[0, 1], &[1, 0]])]);
        assert!(tate_minus1(&action).is_trivial());
    }

    #[test]
    fn coboundary_test_with_witness() {
        let action = sign_action();
        // a(t) = (2) is the coboundary of m = (−1): m·A − m = 1 − (−1)… sign
        // check: (−1)·(−1) − (−1) = 1 + 1 = 2.
        let a = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(2)]]).unwrap();
        let witness = is_coboundary(&action, &a).unwrap().expect("coboundary");
        assert_eq!(witness, vec![bi(-1)]);
        let b = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(1)]]).unwrap();
        assert!(is_coboundary(&action, &b).unwrap().is_none());
        assert!(is_coboundary(&action, &Cocycle::zero(&action))
            .unwrap()
            .is_some());
    }

    #[test]
    fn invalid_cocycle_is_rejected() {
        // For the swap action, a(t) = (1, 0) fails: a(t·t) = a(1) must be 0
        // but a(t) + a(t)·A = (1,0) + (0,1) = (1,1).
        let action = action_of(&[("t", &[&[0, 1], &[1, 0]])]);
        let err = Cocycle::from_values(&action, vec![vec![bi(0), bi(0)], vec![bi(1), bi(0)]])
            .unwrap_err();
        assert!(matches!(err, CohomologyError::NotACocycle(_)));
    }

    #[test]
    fn adjoin_trivializer_matches_block_form() {
        let action = sign_action();
        let a = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(1)]]).unwrap();
        let extended = adjoin_trivializer(&action, &a).unwrap();
        assert_eq!(extended.rank(), 2);
        let t = extended.matrix(extended.group().index_of_name("t").unwrap());
        assert_eq!(*t, IntegerMatrix::from_i64(&[&[-1, 0], &[-1, 1]]));
        // The embedded class dies: H¹ of the extension vanishes, and the
        // padded cocycle becomes the coboundary of −e₂.
        assert!(h1(&extended).is_trivial());
        let padded =
            Cocycle::from_values(&extended, vec![vec![bi(0), bi(0)], vec![bi(1), bi(0)]]).unwrap();
        let witness = is_coboundary(&extended, &padded).unwrap().expect("dies");
        let m = IntegerMatrix::from_rows(vec![witness.clone()]).unwrap();
        let moved = m.mul(t).sub(&m);
        assert_eq!(moved.row(0), padded.value(1));
    }

    #[test]
    fn adjoining_zero_cocycle_adds_trivial_summand() {
        let action = sign_action();
        let extended = adjoin_trivializer(&action, &Cocycle::zero(&action)).unwrap();
        let t = extended.matrix(extended.group().index_of_name("t").unwrap());
        assert_eq!(*t, IntegerMatrix::from_i64(&[&[-1, 0], &[0, 1]]));
    }

    #[test]
    fn block_sums_add_componentwise() {
        // sign ⊕ swap: H¹ and Ĥ⁻¹ both pick up exactly the sign part.
        let action = action_of(&[("t", &[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]])]);
        assert_eq!(h1(&action).invariant_factors(), vec![2]);
        assert_eq!(tate_minus1(&action).invariant_factors(), vec![2]);
    }

    #[test]
    fn nonvanishing_inconclusive_when_full_h1_nonzero() {
        let report = nonvanishing_test(&sign_action());
        assert!(!report.is_certified());
        assert!(report.status.reason().unwrap().contains("H^1"));
    }

    #[test]
    fn nonvanishing_inconclusive_when_tate_zero() {
        let report = nonvanishing_test(&action_of(&[("t", &[&[0, 1], &[1, 0]])]));
        assert!(!report.is_certified());
        assert_eq!(report.status.reason().unwrap(), "Hhat^-1(G, M) = 0");
        assert!(report.tate.is_some());
    }

    #[test]
    fn generation_check_accepts_true_generator() {
        let action = sign_action();
        let gen = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(1)]]).unwrap();
        assert!(h1_classes_generate(&action, &[gen]).unwrap());
        let cob = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(2)]]).unwrap();
        assert!(!h1_classes_generate(&action, &[cob]).unwrap());
    }

    #[test]
    fn cocycle_json_uses_element_names() {
        let action = sign_action();
        let a = Cocycle::from_values(&action, vec![vec![bi(0)], vec![bi(1)]]).unwrap();
        assert_eq!(a.to_json(&action), json!({ "t": ["1"] }));
    }
}

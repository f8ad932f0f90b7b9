//! Parity-obstruction irrationality tests.
//!
//! Both tests work on a lattice `M` with an action of a finite abelian
//! group `G` and a distinguished basis vector `e_u` fixed by the action.
//! They certify an arithmetic obstruction — every relevant value is forced
//! to be even where an affirmative answer would require an odd one — and
//! package the evidence into a replayable [`ParityCertificate`].
//!
//! **Simple test** (conditions checked in order):
//!  1. `H¹(H, M) = 0` for every subgroup `H ≤ G`;
//!  2. `e_u` is invariant;
//!  3. every `τ ≠ 1` flips some basis vector around `e_u`:
//!     `e_j·m(τ) = e_u − e_j` for some index `j`;
//!  4. every entry of the norm matrix `Σ_{τ∈G} m(τ)` is even.
//!
//! **Refined test** (for elementary abelian 2-groups): the caller supplies
//! a distinguished element `τ*` and flip index `w` with
//! `e_w·m(τ*) = e_u − e_w`; after the same subgroup-`H¹` sweep, each
//! index-2 subgroup `H` avoiding `τ*` must admit a witness `τ ∈ G ∖ H`
//! whose doubled action `m(τ) + 1` pairs evenly with `e_u` — either
//! column `u` of `m(τ) + 1` is entirely even, or every row `f` of the
//! `H`-invariant sublattice has even `u`-coordinate in `f·(m(τ) + 1)`.

use crate::cohomology::{subgroup_h1_sweep, SubgroupH1, TestStatus};
use crate::group::{FiniteMatrixGroup, GroupError, LatticeAction};
use crate::matrix::{kernel_basis, unit_row, IntegerMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParityError {
    #[error("basis index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("the refined parity test requires an elementary abelian 2-group")]
    NotElementaryAbelian2Group,
    #[error("no group element named `{0}`")]
    UnknownElement(String),
    #[error("flip relation failed: {0}")]
    FlipRelationFailed(String),
    #[error("certificate replay failed: {0}")]
    ReplayMismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One flip witness of the simple test: `e_partner·m(element) = e_u − e_partner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipWitness {
    pub element: String,
    pub partner: usize,
}

/// How a hyperplane witness `τ` pairs evenly in the refined test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperplaneBranch {
    /// Column `u` of `m(τ) + 1`, every entry even.
    EvenColumn { column: Vec<BigInt> },
    /// Basis of the `H`-invariant sublattice and the `u`-coordinates of
    /// `f·(m(τ) + 1)` for each basis row `f`, every one even.
    EvenInvariantPairing {
        invariant_basis: IntegerMatrix,
        pairings: Vec<BigInt>,
    },
}

/// Witness for one index-2 subgroup in the refined test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneWitness {
    pub hyperplane: String,
    pub witness: String,
    pub branch: HyperplaneBranch,
}

/// Test-specific half of a parity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParityKind {
    Simple {
        flips: Vec<FlipWitness>,
        norm_matrix: IntegerMatrix,
    },
    Refined {
        tau_star: String,
        flip_index: usize,
        hyperplanes: Vec<HyperplaneWitness>,
    },
}

/// Replayable evidence for a certified parity obstruction.
#[derive(Clone, Debug)]
pub struct ParityCertificate {
    pub invariant_index: usize,
    pub kind: ParityKind,
    pub subgroup_h1: Vec<SubgroupH1>,
}

/// Outcome of a parity test: status plus the evidence gathered on the way.
#[derive(Clone, Debug)]
pub struct ParityReport {
    pub status: TestStatus,
    pub certificate: Option<ParityCertificate>,
    /// Per-subgroup `H¹`, in enumeration order (last entry is the offender
    /// when the sweep fails).
    pub subgroup_h1: Vec<SubgroupH1>,
}

impl ParityReport {
    pub fn is_certified(&self) -> bool {
        self.status.is_certified()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.to_json(),
            "subgroup_h1": self.subgroup_h1.iter().map(SubgroupH1::to_json).collect::<Vec<_>>(),
            "certificate": self.certificate.as_ref().map(ParityCertificate::to_json),
        })
    }
}

fn bigints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|e| Value::String(e.to_string())).collect())
}

impl ParityCertificate {
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "invariant_index": self.invariant_index,
            "subgroup_h1": self.subgroup_h1.iter().map(SubgroupH1::to_json).collect::<Vec<_>>(),
        });
        let map = obj.as_object_mut().unwrap();
        match &self.kind {
            ParityKind::Simple { flips, norm_matrix } => {
                map.insert("test".into(), json!("parity-simple"));
                map.insert(
                    "flips".into(),
                    json!(flips
                        .iter()
                        .map(|f| json!({ "element": f.element, "partner": f.partner }))
                        .collect::<Vec<_>>()),
                );
                map.insert("norm_matrix".into(), norm_matrix.to_json());
            }
            ParityKind::Refined {
                tau_star,
                flip_index,
                hyperplanes,
            } => {
                map.insert("test".into(), json!("parity-refined"));
                map.insert("tau_star".into(), json!(tau_star));
                map.insert("flip_index".into(), json!(flip_index));
                let hs: Vec<Value> = hyperplanes
                    .iter()
                    .map(|h| {
                        let mut entry = json!({
                            "hyperplane": h.hyperplane,
                            "witness": h.witness,
                        });
                        let e = entry.as_object_mut().unwrap();
                        match &h.branch {
                            HyperplaneBranch::EvenColumn { column } => {
                                e.insert("branch".into(), json!("even-column"));
                                e.insert("column".into(), bigints_json(column));
                            }
                            HyperplaneBranch::EvenInvariantPairing {
                                invariant_basis,
                                pairings,
                            } => {
                                e.insert("branch".into(), json!("even-invariant-pairing"));
                                e.insert("invariant_basis".into(), invariant_basis.to_json());
                                e.insert("pairings".into(), bigints_json(pairings));
                            }
                        }
                        entry
                    })
                    .collect();
                map.insert("hyperplanes".into(), Value::Array(hs));
            }
        }
        obj
    }

    /// Re-verifies every claim in the certificate against the action it was
    /// issued for.  Errors identify the first claim that no longer holds.
    pub fn replay(&self, action: &LatticeAction) -> Result<(), ParityError> {
        let group = action.group();
        let rank = action.rank();
        let u = self.invariant_index;
        if u >= rank {
            return Err(ParityError::IndexOutOfRange { index: u, rank });
        }
        check_invariant_vector(action, u)
            .map_err(|detail| ParityError::ReplayMismatch(detail))?;
        // The subgroup sweep must reproduce the recorded vanishing tables.
        let (records, failure) = subgroup_h1_sweep(action);
        if let Some(reason) = failure {
            return Err(ParityError::ReplayMismatch(reason));
        }
        if records.len() != self.subgroup_h1.len() {
            return Err(ParityError::ReplayMismatch(format!(
                "subgroup count changed: certificate lists {}, sweep found {}",
                self.subgroup_h1.len(),
                records.len()
            )));
        }
        for (claimed, found) in self.subgroup_h1.iter().zip(&records) {
            if claimed.label != found.label
                || claimed.order != found.order
                || claimed.invariant_factors != found.invariant_factors
            {
                return Err(ParityError::ReplayMismatch(format!(
                    "subgroup record for {} does not match the recomputation",
                    claimed.label
                )));
            }
        }
        match &self.kind {
            ParityKind::Simple { flips, norm_matrix } => {
                if flips.len() != group.order() - 1 {
                    return Err(ParityError::ReplayMismatch(format!(
                        "expected {} flip witnesses, certificate has {}",
                        group.order() - 1,
                        flips.len()
                    )));
                }
                for flip in flips {
                    let idx = group
                        .index_of_name(&flip.element)
                        .ok_or_else(|| ParityError::UnknownElement(flip.element.clone()))?;
                    if idx == 0 {
                        return Err(ParityError::ReplayMismatch(
                            "flip witness recorded for the identity".into(),
                        ));
                    }
                    if flip.partner >= rank {
                        return Err(ParityError::IndexOutOfRange {
                            index: flip.partner,
                            rank,
                        });
                    }
                    if !flip_holds(action.matrix(idx), u, flip.partner) {
                        return Err(ParityError::ReplayMismatch(format!(
                            "flip e_{}·m({}) = e_{} - e_{} does not hold",
                            flip.partner, flip.element, u, flip.partner
                        )));
                    }
                }
                let norm = action.norm_matrix();
                if &norm != norm_matrix {
                    return Err(ParityError::ReplayMismatch(
                        "norm matrix does not match the recomputation".into(),
                    ));
                }
                if let Some((i, j)) = first_odd_entry(&norm) {
                    return Err(ParityError::ReplayMismatch(format!(
                        "norm matrix entry ({i},{j}) is odd"
                    )));
                }
            }
            ParityKind::Refined {
                tau_star,
                flip_index,
                hyperplanes,
            } => {
                if !group.is_elementary_abelian_2() {
                    return Err(ParityError::NotElementaryAbelian2Group);
                }
                let star = group
                    .index_of_name(tau_star)
                    .ok_or_else(|| ParityError::UnknownElement(tau_star.clone()))?;
                if *flip_index >= rank {
                    return Err(ParityError::IndexOutOfRange {
                        index: *flip_index,
                        rank,
                    });
                }
                if star == 0 || !flip_holds(action.matrix(star), u, *flip_index) {
                    return Err(ParityError::ReplayMismatch(format!(
                        "flip e_{}·m({}) = e_{} - e_{} does not hold",
                        flip_index, tau_star, u, flip_index
                    )));
                }
                let expected = hyperplanes_avoiding(group, star);
                if expected.len() != hyperplanes.len() {
                    return Err(ParityError::ReplayMismatch(format!(
                        "expected {} hyperplane witnesses, certificate has {}",
                        expected.len(),
                        hyperplanes.len()
                    )));
                }
                for (h, witness) in expected.iter().zip(hyperplanes) {
                    if h.label() != witness.hyperplane {
                        return Err(ParityError::ReplayMismatch(format!(
                            "hyperplane order mismatch: expected {}, certificate has {}",
                            h.label(),
                            witness.hyperplane
                        )));
                    }
                    let tau = group
                        .index_of_name(&witness.witness)
                        .ok_or_else(|| ParityError::UnknownElement(witness.witness.clone()))?;
                    if h.index_of(group.element(tau)).is_some() {
                        return Err(ParityError::ReplayMismatch(format!(
                            "witness {} lies inside hyperplane {}",
                            witness.witness,
                            h.label()
                        )));
                    }
                    let doubled = doubled_action(action, tau);
                    match &witness.branch {
                        HyperplaneBranch::EvenColumn { column } => {
                            let found = matrix_column(&doubled, u);
                            if &found != column || !all_even(column) {
                                return Err(ParityError::ReplayMismatch(format!(
                                    "even-column evidence for hyperplane {} fails",
                                    h.label()
                                )));
                            }
                        }
                        HyperplaneBranch::EvenInvariantPairing {
                            invariant_basis,
                            pairings,
                        } => {
                            let basis = invariant_sublattice(action, h)?;
                            let found = pairing_column(&basis, &doubled, u);
                            if &basis != invariant_basis || &found != pairings || !all_even(pairings)
                            {
                                return Err(ParityError::ReplayMismatch(format!(
                                    "invariant-pairing evidence for hyperplane {} fails",
                                    h.label()
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Norm matrix `Σ_{τ∈G} m(τ)` of the action.
pub fn norm_sum(action: &LatticeAction) -> IntegerMatrix {
    action.norm_matrix()
}

/// Basis (in Hermite form) of the sublattice fixed pointwise by the given
/// subgroup: the kernel of `x ↦ x·[m(h₁)−1 | m(h₂)−1 | …]`.
pub fn invariant_sublattice(
    action: &LatticeAction,
    subgroup: &FiniteMatrixGroup,
) -> Result<IntegerMatrix, ParityError> {
    let restricted = action.restrict(subgroup)?;
    let rank = restricted.rank();
    let identity = IntegerMatrix::identity(rank);
    let blocks: Vec<IntegerMatrix> = (1..subgroup.order())
        .map(|i| restricted.matrix(i).sub(&identity))
        .collect();
    if blocks.is_empty() {
        return Ok(identity);
    }
    let refs: Vec<&IntegerMatrix> = blocks.iter().collect();
    let constraint = IntegerMatrix::hstack(&refs);
    Ok(kernel_basis(&constraint))
}

fn flip_holds(m: &IntegerMatrix, u: usize, j: usize) -> bool {
    let rank = m.cols();
    let mut expected = unit_row(rank, u);
    expected[j] -= BigInt::one();
    m.row(j) == expected.as_slice()
}

fn first_odd_entry(m: &IntegerMatrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_odd() {
                return Some((i, j));
            }
        }
    }
    None
}

fn all_even(v: &[BigInt]) -> bool {
    v.iter().all(Integer::is_even)
}

/// `m(τ) + 1`, the pairing matrix of the refined test.
fn doubled_action(action: &LatticeAction, tau: usize) -> IntegerMatrix {
    action
        .matrix(tau)
        .add(&IntegerMatrix::identity(action.rank()))
}

fn matrix_column(m: &IntegerMatrix, col: usize) -> Vec<BigInt> {
    (0..m.rows()).map(|i| m.get(i, col).clone()).collect()
}

/// `u`-coordinates of `f·pairing` for each row `f` of `basis`.
fn pairing_column(basis: &IntegerMatrix, pairing: &IntegerMatrix, u: usize) -> Vec<BigInt> {
    let product = basis.mul(pairing);
    matrix_column(&product, u)
}

/// Checks `e_u·m(g) = e_u` for every `g`; on failure returns a description
/// of the offending element.
fn check_invariant_vector(action: &LatticeAction, u: usize) -> Result<(), String> {
    let group = action.group();
    let expected = unit_row(action.rank(), u);
    for g in 0..group.order() {
        if action.matrix(g).row(u) != expected.as_slice() {
            return Err(format!(
                "basis vector e_{} is not invariant: moved by {}",
                u,
                group.name(g)
            ));
        }
    }
    Ok(())
}

/// Index-2 subgroups not containing the element at `star`, in enumeration
/// order.
fn hyperplanes_avoiding(group: &FiniteMatrixGroup, star: usize) -> Vec<FiniteMatrixGroup> {
    group
        .all_subgroups()
        .into_iter()
        .filter(|h| 2 * h.order() == group.order() && h.index_of(group.element(star)).is_none())
        .collect()
}

/// The simple parity test.  `u` is the index of the distinguished basis
/// vector that must be fixed by the whole group.
pub fn parity_test_simple(action: &LatticeAction, u: usize) -> Result<ParityReport, ParityError> {
    let rank = action.rank();
    if u >= rank {
        return Err(ParityError::IndexOutOfRange { index: u, rank });
    }
    let group = action.group();
    let (records, failure) = subgroup_h1_sweep(action);
    if let Some(reason) = failure {
        return Ok(ParityReport {
            status: TestStatus::Inconclusive { reason },
            certificate: None,
            subgroup_h1: records,
        });
    }
    if let Err(detail) = check_invariant_vector(action, u) {
        return Ok(ParityReport {
            status: TestStatus::Inconclusive { reason: detail },
            certificate: None,
            subgroup_h1: records,
        });
    }
    let mut flips = Vec::new();
    for g in 1..group.order() {
        let partner = (0..rank).find(|&j| flip_holds(action.matrix(g), u, j));
        match partner {
            Some(j) => flips.push(FlipWitness {
                element: group.name(g).to_string(),
                partner: j,
            }),
            None => {
                return Ok(ParityReport {
                    status: TestStatus::Inconclusive {
                        reason: format!(
                            "no flip index for {}: no j with e_j·m({}) = e_{} - e_j",
                            group.name(g),
                            group.name(g),
                            u
                        ),
                    },
                    certificate: None,
                    subgroup_h1: records,
                });
            }
        }
    }
    let norm = action.norm_matrix();
    if let Some((i, j)) = first_odd_entry(&norm) {
        return Ok(ParityReport {
            status: TestStatus::Inconclusive {
                reason: format!("norm matrix entry ({i},{j}) = {} is odd", norm.get(i, j)),
            },
            certificate: None,
            subgroup_h1: records,
        });
    }
    Ok(ParityReport {
        status: TestStatus::Certified,
        certificate: Some(ParityCertificate {
            invariant_index: u,
            kind: ParityKind::Simple {
                flips,
                norm_matrix: norm,
            },
            subgroup_h1: records.clone(),
        }),
        subgroup_h1: records,
    })
}

/// The refined parity test for elementary abelian 2-groups.  The caller
/// supplies the distinguished element `tau_star` (by name) and the flip
/// index `w` with `e_w·m(τ*) = e_u − e_w`; mismatched inputs are errors,
/// genuinely unmet parity conditions yield `Inconclusive`.
pub fn parity_test_refined(
    action: &LatticeAction,
    u: usize,
    tau_star: &str,
    w: usize,
) -> Result<ParityReport, ParityError> {
    let rank = action.rank();
    for idx in [u, w] {
        if idx >= rank {
            return Err(ParityError::IndexOutOfRange { index: idx, rank });
        }
    }
    let group = action.group();
    if !group.is_elementary_abelian_2() {
        return Err(ParityError::NotElementaryAbelian2Group);
    }
    let star = group
        .index_of_name(tau_star)
        .ok_or_else(|| ParityError::UnknownElement(tau_star.to_string()))?;
    if star == 0 {
        return Err(ParityError::FlipRelationFailed(
            "tau* must not be the identity".into(),
        ));
    }
    check_invariant_vector(action, u).map_err(ParityError::FlipRelationFailed)?;
    if !flip_holds(action.matrix(star), u, w) {
        return Err(ParityError::FlipRelationFailed(format!(
            "e_{w}·m({tau_star}) != e_{u} - e_{w}"
        )));
    }
    let (records, failure) = subgroup_h1_sweep(action);
    if let Some(reason) = failure {
        return Ok(ParityReport {
            status: TestStatus::Inconclusive { reason },
            certificate: None,
            subgroup_h1: records,
        });
    }
    let mut witnesses = Vec::new();
    for h in hyperplanes_avoiding(group, star) {
        let mut found = None;
        let invariants = invariant_sublattice(action, &h)?;
        for tau in 1..group.order() {
            if h.index_of(group.element(tau)).is_some() {
                continue;
            }
            let doubled = doubled_action(action, tau);
            let column = matrix_column(&doubled, u);
            if all_even(&column) {
                found = Some(HyperplaneWitness {
                    hyperplane: h.label(),
                    witness: group.name(tau).to_string(),
                    branch: HyperplaneBranch::EvenColumn { column },
                });
                break;
            }
            let pairings = pairing_column(&invariants, &doubled, u);
            if all_even(&pairings) {
                found = Some(HyperplaneWitness {
                    hyperplane: h.label(),
                    witness: group.name(tau).to_string(),
                    branch: HyperplaneBranch::EvenInvariantPairing {
                        invariant_basis: invariants.clone(),
                        pairings,
                    },
                });
                break;
            }
        }
        match found {
            Some(w) => witnesses.push(w),
            None => {
                return Ok(ParityReport {
                    status: TestStatus::Inconclusive {
                        reason: format!("no parity witness for hyperplane {}", h.label()),
                    },
                    certificate: None,
                    subgroup_h1: records,
                });
            }
        }
    }
    Ok(ParityReport {
        status: TestStatus::Certified,
        certificate: Some(ParityCertificate {
            invariant_index: u,
            kind: ParityKind::Refined {
                tau_star: tau_star.to_string(),
                flip_index: w,
                hyperplanes: witnesses,
            },
            subgroup_h1: records.clone(),
        }),
        subgroup_h1: records,
    })
}

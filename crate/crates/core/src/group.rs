//! Finite abelian groups of unimodular integer matrices and their lattice
//! actions.
//!
//! A group is identified with its faithful matrix realization: each element
//! *is* a `rank × rank` unimodular matrix, acting on the lattice `ℤ^rank` of
//! coordinate rows by right multiplication.  Row `i` of an element is the
//! image of the `i`-th basis vector.  Because every group here is abelian,
//! `A_{gh} = A_g · A_h` needs no side convention.

use crate::matrix::{parse_entry, IntegerMatrix};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

/// Errors in group construction and subgroup handling.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generators `{a}` and `{b}` do not commute")]
    NonAbelian { a: String, b: String },
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator `{name}` is not unimodular")]
    NotUnimodular { name: String },
    #[error("the given group is not a subgroup of the acting group")]
    NotASubgroup,
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),
    #[error("{labels} basis labels given for a rank-{rank} lattice")]
    LabelCountMismatch { labels: usize, rank: usize },
}

/// A finite abelian group of unimodular `dim × dim` integer matrices,
/// closed under multiplication, with the identity at index 0.
///
/// Element names record one product expression discovered during closure
/// (`"1"`, `"t2"`, `"t1*t2"`, …) and stay stable under subgroup extraction.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    elements: Vec<IntegerMatrix>,
    names: Vec<String>,
    generators: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    index: HashMap<IntegerMatrix, usize>,
}

/// Closes a set of named generator matrices into a [`FiniteMatrixGroup`].
///
/// Fails when a generator is not square/unimodular, when two generators do
/// not commute (a group generated by commuting elements is abelian, so the
/// generator check covers every pair), or when the closure grows past
/// `cap` elements — which is also how an infinite-order generator surfaces.
pub fn close_group(
    generators: &[(String, IntegerMatrix)],
    cap: usize,
) -> Result<FiniteMatrixGroup, GroupError> {
    if generators.is_empty() {
        return Err(GroupError::InvalidGenerators(
            "at least one generator is required".into(),
        ));
    }
    let dim = generators[0].1.rows();
    let mut seen_names = BTreeSet::new();
    for (name, m) in generators {
        if !m.is_square() || m.rows() != dim {
            return Err(GroupError::InvalidGenerators(format!(
                "generator `{name}` is not a {dim}x{dim} matrix"
            )));
        }
        if name.is_empty() || name == "1" {
            return Err(GroupError::InvalidGenerators(format!(
                "generator name `{name}` is reserved or empty"
            )));
        }
        if !seen_names.insert(name.clone()) {
            return Err(GroupError::InvalidGenerators(format!(
                "duplicate generator name `{name}`"
            )));
        }
        if !m.is_unimodular() {
            return Err(GroupError::NotUnimodular { name: name.clone() });
        }
    }
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let (na, a) = &generators[i];
            let (nb, b) = &generators[j];
            if a.mul(b) != b.mul(a) {
                return Err(GroupError::NonAbelian {
                    a: na.clone(),
                    b: nb.clone(),
                });
            }
        }
    }

    let mut elements = vec![IntegerMatrix::identity(dim)];
    let mut names = vec!["1".to_string()];
    let mut index: HashMap<IntegerMatrix, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);

    // Breadth-first closure in deterministic order: elements in discovery
    // order, generators in the given order.
    let mut cursor = 0;
    while cursor < elements.len() {
        for (gname, gmat) in generators {
            let product = elements[cursor].mul(gmat);
            if !index.contains_key(&product) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                let name = if cursor == 0 {
                    gname.clone()
                } else {
                    format!("{}*{}", names[cursor], gname)
                };
                index.insert(product.clone(), elements.len());
                elements.push(product);
                names.push(name);
            }
        }
        cursor += 1;
    }

    let generator_indices = generators
        .iter()
        .map(|(_, m)| index[m])
        .collect::<Vec<_>>();
    FiniteMatrixGroup::from_parts(dim, elements, names, generator_indices, index)
}

impl FiniteMatrixGroup {
    fn from_parts(
        dim: usize,
        elements: Vec<IntegerMatrix>,
        names: Vec<String>,
        generators: Vec<usize>,
        index: HashMap<IntegerMatrix, usize>,
    ) -> Result<Self, GroupError> {
        let n = elements.len();
        let mut mul = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i].mul(&elements[j]);
                let Some(&k) = index.get(&p) else {
                    return Err(GroupError::InvalidGenerators(
                        "element set is not closed under multiplication".into(),
                    ));
                };
                mul[i * n + j] = k;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] != mul[j * n + i] {
                    return Err(GroupError::NonAbelian {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == 0 {
                    inv[i] = j;
                }
            }
        }
        if inv.iter().any(|&x| x == usize::MAX) {
            return Err(GroupError::InvalidGenerators(
                "element set is missing inverses".into(),
            ));
        }
        Ok(FiniteMatrixGroup {
            dim,
            elements,
            names,
            generators,
            mul,
            inv,
            index,
        })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Matrix dimension all elements share.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// The element matrix at `i`; index 0 is the identity.
    pub fn element(&self, i: usize) -> &IntegerMatrix {
        &self.elements[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index of the product of elements `i` and `j`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.elements.len() + j]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn index_of(&self, m: &IntegerMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Indices of the generators the group was built from.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    /// `(name, matrix)` pairs for the generating set.
    pub fn generator_pairs(&self) -> Vec<(String, IntegerMatrix)> {
        self.generators
            .iter()
            .map(|&i| (self.names[i].clone(), self.elements[i].clone()))
            .collect()
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut order = 1;
        while acc != 0 {
            acc = self.mul_index(acc, i);
            order += 1;
        }
        order
    }

    /// True iff every non-identity element has order 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        (0..self.order()).all(|i| self.mul_index(i, i) == 0)
    }

    /// Display label built from the generating set, e.g. `<t2, t1*t3>`;
    /// the trivial group is `<1>`.
    pub fn label(&self) -> String {
        if self.order() == 1 {
            return "<1>".to_string();
        }
        let gens: Vec<&str> = self
            .generators
            .iter()
            .filter(|&&i| i != 0)
            .map(|&i| self.names[i].as_str())
            .collect();
        format!("<{}>", gens.join(", "))
    }

    /// True iff every element of `sub` appears in this group.
    pub fn contains_group(&self, sub: &FiniteMatrixGroup) -> bool {
        sub.dim == self.dim && sub.elements.iter().all(|m| self.index.contains_key(m))
    }

    fn closure_of_indices(&self, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut closed: BTreeSet<usize> = BTreeSet::new();
        closed.insert(0);
        let mut frontier: Vec<usize> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in seed {
                let p = self.mul_index(x, g);
                if closed.insert(p) {
                    frontier.push(p);
                }
            }
        }
        closed
    }

    /// Builds the subgroup object on a closed element-index set, keeping
    /// parent element names and choosing a canonical generating set by
    /// greedy ascent over element indices.
    fn subgroup_from_indices(&self, indices: &BTreeSet<usize>) -> FiniteMatrixGroup {
        let members: Vec<usize> = indices.iter().copied().collect();
        let elements: Vec<IntegerMatrix> =
            members.iter().map(|&i| self.elements[i].clone()).collect();
        let names: Vec<String> = members.iter().map(|&i| self.names[i].clone()).collect();
        let mut index = HashMap::new();
        for (local, m) in elements.iter().enumerate() {
            index.insert(m.clone(), local);
        }
        // Greedy canonical generating set.
        let mut gens: Vec<usize> = Vec::new();
        let mut span: BTreeSet<usize> = self.closure_of_indices(&BTreeSet::new());
        for &cand in &members {
            if span.len() == members.len() {
                break;
            }
            if !span.contains(&cand) {
                let mut seed: BTreeSet<usize> = gens.iter().copied().collect();
                seed.insert(cand);
                span = self.closure_of_indices(&seed);
                gens.push(cand);
            }
        }
        let local_gens: Vec<usize> = gens
            .iter()
            .map(|g| members.binary_search(g).expect("generator inside subgroup"))
            .collect();
        FiniteMatrixGroup::from_parts(self.dim, elements, names, local_gens, index)
            .expect("closed subset of a group is a group")
    }

    /// Enumerates **all** subgroups, including the trivial group and the
    /// full group, in deterministic order (by order, then by element list).
    ///
    /// Works by breadth-first closure over generated subsets: every known
    /// subgroup is extended by each outside element until no new subgroup
    /// appears.  Any subgroup `⟨x_1, …, x_k⟩` is reached along the chain of
    /// its own generators, so the enumeration is complete.
    pub fn all_subgroups(&self) -> Vec<FiniteMatrixGroup> {
        let n = self.order();
        let trivial: BTreeSet<usize> = self.closure_of_indices(&BTreeSet::new());
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(trivial.iter().copied().collect());
        let mut frontier: Vec<BTreeSet<usize>> = vec![trivial];
        while let Some(h) = frontier.pop() {
            for x in 1..n {
                if h.contains(&x) {
                    continue;
                }
                let mut seed = h.clone();
                seed.insert(x);
                let closed = self.closure_of_indices(&seed);
                let key: Vec<usize> = closed.iter().copied().collect();
                if known.insert(key) {
                    frontier.push(closed);
                }
            }
        }
        let mut keys: Vec<Vec<usize>> = known.into_iter().collect();
        keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        keys.iter()
            .map(|k| self.subgroup_from_indices(&k.iter().copied().collect()))
            .collect()
    }
}

/// A lattice `ℤ^rank` together with a finite abelian group of unimodular
/// matrices acting on it.  The group elements are the action matrices.
#[derive(Clone, Debug)]
pub struct LatticeAction {
    group: FiniteMatrixGroup,
    basis_labels: Option<Vec<String>>,
}

impl LatticeAction {
    /// Builds an action by closing the generators; see [`close_group`].
    pub fn from_generators(
        generators: &[(String, IntegerMatrix)],
        basis_labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let group = close_group(generators, cap)?;
        if let Some(labels) = &basis_labels {
            if labels.len() != group.dimension() {
                return Err(GroupError::LabelCountMismatch {
                    labels: labels.len(),
                    rank: group.dimension(),
                });
            }
        }
        Ok(LatticeAction {
            group,
            basis_labels,
        })
    }

    /// Wraps an existing group as an action on its own dimension.
    pub fn from_group(group: FiniteMatrixGroup) -> Self {
        LatticeAction {
            group,
            basis_labels: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.group.dimension()
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    /// Action matrix of element `i` (row `j` is the image of basis vector
    /// `j`).
    pub fn matrix(&self, i: usize) -> &IntegerMatrix {
        self.group.element(i)
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis_labels.as_deref()
    }

    /// Restricts to a subgroup `h` (typically one returned by
    /// [`FiniteMatrixGroup::all_subgroups`]); fails with
    /// [`GroupError::NotASubgroup`] when `h` is not contained in the acting
    /// group.
    pub fn restrict(&self, h: &FiniteMatrixGroup) -> Result<LatticeAction, GroupError> {
        if !self.group.contains_group(h) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(LatticeAction {
            group: h.clone(),
            basis_labels: self.basis_labels.clone(),
        })
    }

    /// Sum of all action matrices (the norm element of the group ring in
    /// this presentation).
    pub fn norm_matrix(&self) -> IntegerMatrix {
        let mut acc = IntegerMatrix::zeros(self.rank(), self.rank());
        for i in 0..self.group.order() {
            acc = acc.add(self.group.element(i));
        }
        acc
    }

    /// Serializes as `{"rank": …, "generators": [{"name", "matrix"}…]}`,
    /// with matrix entries as decimal strings; the full action is recovered
    /// by closure.
    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .group
            .generator_pairs()
            .iter()
            .map(|(name, m)| {
                let rows: Vec<Value> = (0..m.rows())
                    .map(|i| {
                        Value::Array(
                            m.row(i)
                                .iter()
                                .map(|e| Value::String(e.to_string()))
                                .collect(),
                        )
                    })
                    .collect();
                json!({ "name": name, "matrix": rows })
            })
            .collect();
        let mut out = json!({ "rank": self.rank(), "generators": gens });
        if let Some(labels) = &self.basis_labels {
            out["labels"] = json!(labels);
        }
        out
    }

    /// Parses the form produced by [`LatticeAction::to_json`]; matrix
    /// entries may be JSON integers or decimal strings.
    pub fn from_json(v: &Value, cap: usize) -> Result<Self, GroupError> {
        let invalid = |msg: &str| GroupError::InvalidGenerators(msg.to_string());
        let obj = v
            .as_object()
            .ok_or_else(|| invalid("action must be a JSON object"))?;
        let rank = obj
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| invalid("missing integer field `rank`"))? as usize;
        let gens_json = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| invalid("missing array field `generators`"))?;
        let mut generators = Vec::with_capacity(gens_json.len());
        for g in gens_json {
            let name = g
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| invalid("generator missing string field `name`"))?;
            let rows_json = g
                .get("matrix")
                .and_then(Value::as_array)
                .ok_or_else(|| invalid("generator missing array field `matrix`"))?;
            if rows_json.len() != rank {
                return Err(invalid(&format!(
                    "generator `{name}` has {} rows, expected {rank}",
                    rows_json.len()
                )));
            }
            let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(rank);
            for row in rows_json {
                let row = row
                    .as_array()
                    .ok_or_else(|| invalid("matrix rows must be arrays"))?;
                if row.len() != rank {
                    return Err(invalid(&format!(
                        "generator `{name}` has a row of width {}, expected {rank}",
                        row.len()
                    )));
                }
                rows.push(
                    row.iter()
                        .map(|e| {
                            parse_entry(e)
                                .map_err(|err| invalid(&format!("generator `{name}`: {err}")))
                        })
                        .collect::<Result<_, _>>()?,
                );
            }
            let matrix =
                IntegerMatrix::from_rows(rows).map_err(|e| invalid(&format!("{name}: {e}")))?;
            generators.push((name.to_string(), matrix));
        }
        let labels = match obj.get("labels") {
            None | Some(Value::Null) => None,
            Some(Value::Array(a)) => Some(
                a.iter()
                    .map(|l| {
                        l.as_str()
                            .map(str::to_string)
                            .ok_or_else(|| invalid("labels must be strings"))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            Some(_) => return Err(invalid("`labels` must be an array of strings")),
        };
        LatticeAction::from_generators(&generators, labels, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_MAX_GROUP_ORDER;

    fn named(pairs: &[(&str, IntegerMatrix)]) -> Vec<(String, IntegerMatrix)> {
        pairs
            .iter()
            .map(|(n, m)| (n.to_string(), m.clone()))
            .collect()
    }

    fn klein_four_signs() -> FiniteMatrixGroup {
        let t1 = IntegerMatrix::from_i64(&[&[-1, 0], &[0, 1]]);
        let t2 = IntegerMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        close_group(&named(&[("t1", t1), ("t2", t2)]), DEFAULT_MAX_GROUP_ORDER).unwrap()
    }

    #[test]
    fn closure_of_two_commuting_involutions() {
        let g = klein_four_signs();
        assert_eq!(g.order(), 4);
        assert_eq!(g.name(0), "1");
        let names: Vec<&str> = (0..4).map(|i| g.name(i)).collect();
        assert_eq!(names, vec!["1", "t1", "t2", "t1*t2"]);
        assert!(g.is_elementary_abelian_2());
    }

    #[test]
    fn closure_of_order_four_rotation() {
        let s = IntegerMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let g = close_group(&named(&[("s", s)]), DEFAULT_MAX_GROUP_ORDER).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.element_order(g.index_of_name("s").unwrap()), 4);
        assert!(!g.is_elementary_abelian_2());
    }

    #[test]
    fn non_commuting_generators_are_rejected() {
        let a = IntegerMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let b = IntegerMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let err = close_group(&named(&[("a", a), ("b", b)]), DEFAULT_MAX_GROUP_ORDER).unwrap_err();
        assert!(matches!(err, GroupError::NonAbelian { .. }));
    }

    #[test]
    fn infinite_order_generator_hits_the_cap() {
        let shear = IntegerMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let err = close_group(&named(&[("u", shear)]), 64).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 64 });
    }

    #[test]
    fn non_unimodular_generator_is_rejected() {
        let m = IntegerMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        let err = close_group(&named(&[("m", m)]), DEFAULT_MAX_GROUP_ORDER).unwrap_err();
        assert_eq!(
            err,
            GroupError::NotUnimodular {
                name: "m".to_string()
            }
        );
    }

    #[test]
    fn mul_table_and_inverses_are_consistent() {
        let g = klein_four_signs();
        for i in 0..4 {
            assert_eq!(g.mul_index(i, g.inverse_index(i)), 0);
            for j in 0..4 {
                let p = g.element(i).mul(g.element(j));
                assert_eq!(g.index_of(&p), Some(g.mul_index(i, j)));
            }
        }
    }

    #[test]
    fn subgroups_of_klein_four() {
        let g = klein_four_signs();
        let subs = g.all_subgroups();
        assert_eq!(subs.len(), 5);
        let orders: Vec<usize> = subs.iter().map(FiniteMatrixGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4]);
        assert_eq!(subs[0].label(), "<1>");
        assert_eq!(subs[4].label(), "<t1, t2>");
    }

    #[test]
    fn subgroups_of_elementary_abelian_of_rank_three() {
        let t1 = IntegerMatrix::from_i64(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let t2 = IntegerMatrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let t3 = IntegerMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let g = close_group(
            &named(&[("t1", t1), ("t2", t2), ("t3", t3)]),
            DEFAULT_MAX_GROUP_ORDER,
        )
        .unwrap();
        let subs = g.all_subgroups();
        // (2^3 - 1) / (2 - 1) = 7 subgroups each of order 2 and of index 2,
        // plus trivial and full: 16 total.
        assert_eq!(subs.len(), 16);
        let orders: Vec<usize> = subs.iter().map(FiniteMatrixGroup::order).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 7);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 7);
    }

    #[test]
    fn subgroups_of_cyclic_four() {
        let s = IntegerMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        let g = close_group(&named(&[("s", s)]), DEFAULT_MAX_GROUP_ORDER).unwrap();
        let subs = g.all_subgroups();
        assert_eq!(subs.len(), 3);
        let orders: Vec<usize> = subs.iter().map(FiniteMatrixGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn restriction_to_foreign_group_fails() {
        let g = klein_four_signs();
        let action = LatticeAction::from_group(g);
        let other = close_group(
            &named(&[("s", IntegerMatrix::from_i64(&[&[0, 1], &[-1, 0]]))]),
            DEFAULT_MAX_GROUP_ORDER,
        )
        .unwrap();
        assert_eq!(action.restrict(&other).unwrap_err(), GroupError::NotASubgroup);
    }

    #[test]
    fn restriction_keeps_subgroup_structure() {
        let g = klein_four_signs();
        let action = LatticeAction::from_group(g.clone());
        for sub in g.all_subgroups() {
            let restricted = action.restrict(&sub).unwrap();
            assert_eq!(restricted.rank(), action.rank());
            assert_eq!(restricted.group().order(), sub.order());
        }
    }

    #[test]
    fn action_json_round_trip() {
        let g = klein_four_signs();
        let action = LatticeAction {
            group: g,
            basis_labels: Some(vec!["x".into(), "y".into()]),
        };
        let v = action.to_json();
        let back = LatticeAction::from_json(&v, DEFAULT_MAX_GROUP_ORDER).unwrap();
        assert_eq!(back.rank(), 2);
        assert_eq!(back.group().order(), 4);
        assert_eq!(back.basis_labels(), Some(&["x".to_string(), "y".to_string()][..]));
        assert_eq!(back.to_json(), v);
    }

    #[test]
    fn norm_matrix_of_sign_action() {
        let sign = IntegerMatrix::from_i64(&[&[-1]]);
        let action =
            LatticeAction::from_generators(&named(&[("t", sign)]), None, 16).unwrap();
        assert!(action.norm_matrix().is_zero());
    }
}

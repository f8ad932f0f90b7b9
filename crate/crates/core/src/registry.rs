//! Built-in lattice actions used by the negativity certificates.
//!
//! Each fixture is a finite abelian group of unimodular integer matrices
//! acting on a lattice of multiplicative coordinates; the basis labels
//! record which field element each coordinate tracks.  Names follow the
//! pattern `paper.sN.M`, `paper.sN.Mp`, `paper.sN.Mpp` for a base module
//! and its successive extensions.

use crate::group::LatticeAction;
use crate::matrix::IntegerMatrix;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegistryError {
    #[error("unknown registry name `{0}`")]
    UnknownName(String),
}

const REGISTRY_NAMES: [&str; 9] = [
    "paper.s3.M",
    "paper.s3.Mp",
    "paper.s5.M",
    "paper.s5.Mp",
    "paper.s5.Mpp",
    "paper.s8.M",
    "paper.s8.Mp",
    "paper.s12.M",
    "paper.s12.Mp",
];

/// The available fixture names, in registry order.
pub fn registry_names() -> &'static [&'static str] {
    &REGISTRY_NAMES
}

/// Loads a fixture by registry name.
pub fn paper_module(name: &str) -> Result<LatticeAction, RegistryError> {
    match name {
        "paper.s3.M" => Ok(s3_m()),
        "paper.s3.Mp" => Ok(s3_mp()),
        "paper.s5.M" => Ok(s5_m()),
        "paper.s5.Mp" => Ok(s5_mp()),
        "paper.s5.Mpp" => Ok(s5_mpp()),
        "paper.s8.M" => Ok(s8_m()),
        "paper.s8.Mp" => Ok(s8_mp()),
        "paper.s12.M" => Ok(s12_m()),
        "paper.s12.Mp" => Ok(s12_mp()),
        other => Err(RegistryError::UnknownName(other.to_string())),
    }
}

fn build(gens: &[(&str, &[&[i64]])], labels: &[&str]) -> LatticeAction {
    let named: Vec<(String, IntegerMatrix)> = gens
        .iter()
        .map(|(name, rows)| (name.to_string(), IntegerMatrix::from_i64(rows)))
        .collect();
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    LatticeAction::from_generators(&named, Some(labels), crate::DEFAULT_MAX_GROUP_ORDER)
        .expect("registry fixture closes to a finite abelian group")
}

const S3_LABELS: [&str; 6] = ["y1", "y2", "y3", "y1−a", "y1+αy3", "y3+α"];

fn s3_t1() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0],
        &[1, -1, 0, 0, 0, 0],
        &[1, 0, 0, 0, -1, 1],
        &[0, 0, 0, 1, 0, 0],
        &[1, 0, 0, 1, -1, 0],
        &[0, 0, 1, 1, -1, 0],
    ]
}

fn s3_t2() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[1, 0, -1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[1, 0, -1, 0, 0, 1],
        &[0, 0, -1, 0, 1, 0],
    ]
}

fn s3_m() -> LatticeAction {
    build(&[("t1", s3_t1()), ("t2", s3_t2())], &S3_LABELS)
}

fn s3_mp() -> LatticeAction {
    // Extension by the coordinate y3²+2αy3+y1, which each generator
    // multiplies by a unit recorded in the final row.
    build(
        &[
            (
                "t1",
                &[
                    &[1, 0, 0, 0, 0, 0, 0],
                    &[1, -1, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, -1, 1, 0],
                    &[0, 0, 0, 1, 0, 0, 0],
                    &[1, 0, 0, 1, -1, 0, 0],
                    &[0, 0, 1, 1, -1, 0, 0],
                    &[1, 0, 0, 1, -2, 0, 1],
                ],
            ),
            (
                "t2",
                &[
                    &[1, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0],
                    &[1, 0, -1, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0],
                    &[1, 0, -1, 0, 0, 1, 0],
                    &[0, 0, -1, 0, 1, 0, 0],
                    &[1, 0, -2, 0, 0, 0, 1],
                ],
            ),
        ],
        &[
            "y1",
            "y2",
            "y3",
            "y1−a",
            "y1+αy3",
            "y3+α",
            "y3²+2αy3+y1",
        ],
    )
}

const S5_LABELS: [&str; 4] = ["y0", "y1", "y2", "y3"];

fn s5_t1() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0],
        &[1, -1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
    ]
}

fn s5_t2() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[1, 0, -1, 0],
        &[0, 0, 0, 1],
    ]
}

fn s5_t3() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[1, 0, 0, -1],
    ]
}

fn s5_m() -> LatticeAction {
    build(
        &[("t1", s5_t1()), ("t2", s5_t2()), ("t3", s5_t3())],
        &S5_LABELS,
    )
}

const S5_MP_LABELS: [&str; 10] = [
    "y0", "y1", "y2", "y3", "y1+y2", "y1y2+y0", "y1+y3", "y1y3+y0", "y2+y3", "y2y3+y0",
];

/// Rows 4–9 of the rank-10 extension: three pairs (yᵢ+yⱼ, yᵢyⱼ+y0), each
/// either fixed or sent to its partner pair with a correction in the base
/// coordinates.
fn s5_mp_t1() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[1, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, -1, 0, 0, 0, 1, 0, 0, 0, 0],
        &[1, -1, 0, 0, 1, 0, 0, 0, 0, 0],
        &[0, -1, 0, 0, 0, 0, 0, 1, 0, 0],
        &[1, -1, 0, 0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]
}

fn s5_mp_t2() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[1, 0, -1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, -1, 0, 0, 1, 0, 0, 0, 0],
        &[1, 0, -1, 0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, -1, 0, 0, 0, 0, 0, 0, 1],
        &[1, 0, -1, 0, 0, 0, 0, 0, 1, 0],
    ]
}

fn s5_mp_t3() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, -1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, -1, 0, 0, 0, 1, 0, 0],
        &[1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, -1, 0, 0, 0, 0, 0, 1],
        &[1, 0, 0, -1, 0, 0, 0, 0, 1, 0],
    ]
}

fn s5_mp() -> LatticeAction {
    build(
        &[
            ("t1", s5_mp_t1()),
            ("t2", s5_mp_t2()),
            ("t3", s5_mp_t3()),
        ],
        &S5_MP_LABELS,
    )
}

fn s5_mpp() -> LatticeAction {
    // Two further coordinates (the symmetric functions of all three yᵢ
    // together with y0), swapped as a pair by every generator.
    build(
        &[
            (
                "t1",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
                    &[1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                    &[0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
                    &[1, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                    &[0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
                    &[1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                ],
            ),
            (
                "t2",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0],
                    &[1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
                    &[0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                    &[1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                    &[0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
                    &[1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                ],
            ),
            (
                "t3",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0],
                    &[1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0],
                    &[1, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0],
                    &[0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1],
                    &[1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0],
                ],
            ),
        ],
        &[
            "y0",
            "y1",
            "y2",
            "y3",
            "y1+y2",
            "y1y2+y0",
            "y1+y3",
            "y1y3+y0",
            "y2+y3",
            "y2y3+y0",
            "y1y2+y1y3+y2y3+y0",
            "y0(y1+y2+y3)+y1y2y3",
        ],
    )
}

const S8_LABELS: [&str; 8] = [
    "z1", "z1−1", "z2", "z2−1", "z2−z1", "z3", "z3−1", "z3−z1",
];

fn s8_t1() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 1, -1, 0, 0, 0],
        &[0, 1, 1, 0, -1, 0, 0, 0],
        &[1, 1, 0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, -1, 1],
        &[0, 1, 0, 0, 0, 0, -1, 0],
        &[0, 1, 0, 0, 0, 1, -1, 0],
    ]
}

fn s8_t2() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, -1, 1, 0, 0, 0],
        &[0, 1, 0, -1, 0, 0, 0, 0],
        &[0, 1, 1, -1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, -1, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0, 1],
        &[1, 0, 0, 0, 0, -1, 1, 0],
    ]
}

fn s8_m() -> LatticeAction {
    build(&[("t1", s8_t1()), ("t2", s8_t2())], &S8_LABELS)
}

/// The companion action in which the roles of the two generators are
/// permuted cyclically; conjugation by [`s8_basis_swap`] carries it onto
/// the registry's `paper.s8.M` generators.
pub fn s8_case_a_generators() -> Vec<(String, IntegerMatrix)> {
    let t1 = IntegerMatrix::from_i64(&[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, -1, 1, 0, 0, 0],
        &[0, 1, 0, -1, 0, 0, 0, 0],
        &[0, 1, 1, -1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0, 1, -1],
        &[0, 1, 0, 0, 0, 1, 0, -1],
        &[1, 1, 0, 0, 0, 0, 0, -1],
    ]);
    let t2 = IntegerMatrix::from_i64(&[
        &[1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0],
        &[1, 0, -1, 0, 0, 0, 0, 0],
        &[0, 0, -1, 0, 1, 0, 0, 0],
        &[1, 0, -1, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, -1, 1],
        &[0, 1, 0, 0, 0, 0, -1, 0],
        &[0, 1, 0, 0, 0, 1, -1, 0],
    ]);
    vec![("t1".to_string(), t1), ("t2".to_string(), t2)]
}

/// The permutation matrix exchanging the z2-block with the z3-block
/// (coordinates 2↔5, 3↔6, 4↔7); it is an involution.
pub fn s8_basis_swap() -> IntegerMatrix {
    IntegerMatrix::from_fn(8, 8, |i, j| {
        let image = match i {
            2 => 5,
            3 => 6,
            4 => 7,
            5 => 2,
            6 => 3,
            7 => 4,
            other => other,
        };
        BigInt::from(u8::from(j == image))
    })
}

fn s8_mp() -> LatticeAction {
    // Extension by (z2−1)²+z1−1 and z3²−z1, each scaled by a square unit
    // recorded in the final two rows.
    build(
        &[
            (
                "t1",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 1, -1, 0, 0, 0, 0, 0],
                    &[0, 1, 1, 0, -1, 0, 0, 0, 0, 0],
                    &[1, 1, 0, 0, -1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, -1, 1, 0, 0],
                    &[0, 1, 0, 0, 0, 0, -1, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 1, -1, 0, 0, 0],
                    &[1, 1, 0, 0, -2, 0, 0, 0, 1, 0],
                    &[0, 1, 0, 0, 0, 0, -2, 0, 0, 1],
                ],
            ),
            (
                "t2",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, -1, 1, 0, 0, 0, 0, 0],
                    &[0, 1, 0, -1, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 1, -1, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, 0, -1, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, -1, 0, 1, 0, 0],
                    &[1, 0, 0, 0, 0, -1, 1, 0, 0, 0],
                    &[0, 1, 0, -2, 0, 0, 0, 0, 1, 0],
                    &[1, 0, 0, 0, 0, -2, 0, 0, 0, 1],
                ],
            ),
        ],
        &[
            "z1",
            "z1−1",
            "z2",
            "z2−1",
            "z2−z1",
            "z3",
            "z3−1",
            "z3−z1",
            "(z2−1)²+z1−1",
            "z3²−z1",
        ],
    )
}

const S12_LABELS: [&str; 11] = [
    "u",
    "v",
    "u−a",
    "v²−bu",
    "w",
    "αw+u",
    "βw+v",
    "w+α",
    "vw+βu",
    "βu(w+α)+v(αw+u)",
    "vw+βu+α(βw+v)",
];

fn s12_t1() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0],
        &[1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0],
        &[0, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1],
        &[1, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0],
    ]
}

fn s12_t2() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1],
        &[0, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 1, -1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, -1, 1, 0, 0, 0],
    ]
}

fn s12_t3() -> &'static [&'static [i64]] {
    &[
        &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0],
        &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0],
    ]
}

fn s12_m() -> LatticeAction {
    build(
        &[("t1", s12_t1()), ("t2", s12_t2()), ("t3", s12_t3())],
        &S12_LABELS,
    )
}

fn s12_mp() -> LatticeAction {
    build(
        &[
            (
                "t1",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0],
                    &[1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0],
                    &[0, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0],
                    &[1, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
                    &[1, 0, 1, 0, 0, -2, 0, 0, 0, 0, 0, 1],
                ],
            ),
            (
                "t2",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0],
                    &[0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0],
                    &[0, 0, 0, 1, 1, 0, -1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, -1, 1, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, -2, 0, 0, 0, 0, 1],
                ],
            ),
            (
                "t3",
                &[
                    &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0],
                    &[0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0],
                    &[0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0],
                    &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0],
                    &[0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0],
                    &[1, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 1],
                ],
            ),
        ],
        &[
            "u",
            "v",
            "u−a",
            "v²−bu",
            "w",
            "αw+u",
            "βw+v",
            "w+α",
            "vw+βu",
            "βu(w+α)+v(αw+u)",
            "vw+βu+α(βw+v)",
            "w²−u",
        ],
    )
}

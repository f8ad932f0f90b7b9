//! Independent symbolic oracle for the mixed-sign normalization used by the
//! 3.2.3.1 decision: a throwaway monomial-automorphism calculus verifies that
//! the claimed change of variables really carries the mixed-sign action to
//! the all-minus action with the claimed coefficients, and a randomized grid
//! confirms the verdict does not depend on which normalizing substitution is
//! chosen.

use noether_core::{decide_group, decide_r, Outcome, ProblemInstance};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// A minimal symbolic calculus for monomial automorphisms of K(x₁,x₂,x₃):
// every image is  sign · aˢ⁰bˢ¹cˢ² · x₁^e⁰x₂^e¹x₃^e²  with formal symbols
// a, b, c and a concrete sign.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct Monomial {
    sign: i64,
    sym: [i64; 3],
    exp: [i64; 3],
}

impl Monomial {
    fn var(i: usize) -> Monomial {
        let mut exp = [0i64; 3];
        exp[i] = 1;
        Monomial {
            sign: 1,
            sym: [0; 3],
            exp,
        }
    }

    fn new(sign: i64, sym: [i64; 3], exp: [i64; 3]) -> Monomial {
        assert!(sign == 1 || sign == -1);
        Monomial { sign, sym, exp }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct MonomialAuto {
    images: [Monomial; 3],
}

fn apply(auto: &MonomialAuto, m: &Monomial) -> Monomial {
    let mut sign = m.sign;
    let mut sym = m.sym;
    let mut exp = [0i64; 3];
    for (j, e) in m.exp.iter().enumerate() {
        let img = &auto.images[j];
        if e.rem_euclid(2) == 1 && img.sign < 0 {
            sign = -sign;
        }
        for t in 0..3 {
            sym[t] += img.sym[t] * e;
            exp[t] += img.exp[t] * e;
        }
    }
    Monomial { sign, sym, exp }
}

/// `compose(f, g)` is `f ∘ g` (apply `g` first).
fn compose(f: &MonomialAuto, g: &MonomialAuto) -> MonomialAuto {
    MonomialAuto {
        images: std::array::from_fn(|i| apply(f, &g.images[i])),
    }
}

fn identity_auto() -> MonomialAuto {
    MonomialAuto {
        images: std::array::from_fn(Monomial::var),
    }
}

fn det3(t: &[[i64; 3]; 3]) -> i64 {
    t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1])
        - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
        + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])
}

/// Inverse of a unimodular integer 3×3 matrix via the adjugate.
fn inv3(t: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let d = det3(t);
    assert!(d == 1 || d == -1, "change of variables must be unimodular");
    let minor = |r: usize, c: usize| -> i64 {
        let rr: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cc: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        t[rr[0]][cc[0]] * t[rr[1]][cc[1]] - t[rr[0]][cc[1]] * t[rr[1]][cc[0]]
    };
    let mut inv = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            // adj[i][j] = cof[j][i]; 1/det = det for det = ±1.
            inv[i][j] = sign * minor(j, i) * d;
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            let s: i64 = (0..3).map(|k| t[i][k] * inv[k][j]).sum();
            assert_eq!(s, i64::from(i == j), "inverse check");
        }
    }
    inv
}

/// Rewrites `auto` in the coordinates `y_i = ∏ x_j^{T[i][j]}`: the exponent
/// matrix conjugates (`v ↦ v·T⁻¹` on exponent rows), coefficients carry over.
fn in_new_coordinates(auto: &MonomialAuto, t: &[[i64; 3]; 3]) -> MonomialAuto {
    let tinv = inv3(t);
    MonomialAuto {
        images: std::array::from_fn(|i| {
            let yi = Monomial::new(1, [0; 3], t[i]);
            let img = apply(auto, &yi);
            let mut exp = [0i64; 3];
            for (c, slot) in exp.iter_mut().enumerate() {
                *slot = (0..3).map(|j| img.exp[j] * tinv[j][c]).sum();
            }
            Monomial {
                sign: img.sign,
                sym: img.sym,
                exp,
            }
        }),
    }
}

// ---------------------------------------------------------------------------
// The two generators of the 3.2.3.1 action, symbolically.
// ---------------------------------------------------------------------------

/// σ₁: x₁ ↦ ε₁x₁, x₂ ↦ ε₂x₂, x₃ ↦ c/x₃.
fn sigma1(e1: i64, e2: i64) -> MonomialAuto {
    MonomialAuto {
        images: [
            Monomial::new(e1, [0, 0, 0], [1, 0, 0]),
            Monomial::new(e2, [0, 0, 0], [0, 1, 0]),
            Monomial::new(1, [0, 0, 1], [0, 0, -1]),
        ],
    }
}

/// σ₂: x₁ ↦ a/x₁, x₂ ↦ b/x₂, x₃ ↦ ε₃x₃.
fn sigma2(e3: i64) -> MonomialAuto {
    MonomialAuto {
        images: [
            Monomial::new(1, [1, 0, 0], [-1, 0, 0]),
            Monomial::new(1, [0, 1, 0], [0, -1, 0]),
            Monomial::new(e3, [0, 0, 0], [0, 0, 1]),
        ],
    }
}

/// The all-minus target shape with σ₂-coefficients `A = aˢ⁰bˢ¹cˢ²` etc.
fn assert_all_minus_shape(s1: &MonomialAuto, s2: &MonomialAuto, coeff_a: [i64; 3], coeff_b: [i64; 3], e3: i64) {
    assert_eq!(s1.images[0], Monomial::new(-1, [0, 0, 0], [1, 0, 0]));
    assert_eq!(s1.images[1], Monomial::new(-1, [0, 0, 0], [0, 1, 0]));
    assert_eq!(s1.images[2], Monomial::new(1, [0, 0, 1], [0, 0, -1]));
    assert_eq!(s2.images[0], Monomial::new(1, coeff_a, [-1, 0, 0]));
    assert_eq!(s2.images[1], Monomial::new(1, coeff_b, [0, -1, 0]));
    assert_eq!(s2.images[2], Monomial::new(e3, [0, 0, 0], [0, 0, 1]));
}

fn check_group_relations(s1: &MonomialAuto, s2: &MonomialAuto) {
    let id = identity_auto();
    assert_eq!(compose(s1, s1), id, "σ₁ must be an involution");
    assert_eq!(compose(s2, s2), id, "σ₂ must be an involution");
    assert_eq!(compose(s1, s2), compose(s2, s1), "generators must commute");
}

// ---------------------------------------------------------------------------
// Symbolic validation of the substitutions.
// ---------------------------------------------------------------------------

#[test]
fn oracle_validates_its_own_group_relations() {
    for e1 in [-1i64, 1] {
        for e2 in [-1i64, 1] {
            for e3 in [-1i64, 1] {
                check_group_relations(&sigma1(e1, e2), &sigma2(e3));
            }
        }
    }
}

#[test]
fn all_minus_pattern_already_has_the_reduced_shape() {
    for e3 in [-1i64, 1] {
        assert_all_minus_shape(&sigma1(-1, -1), &sigma2(e3), [1, 0, 0], [0, 1, 0], e3);
    }
}

#[test]
fn substituting_x2_by_x1x2_normalizes_the_minus_plus_pattern() {
    // (ε₁, ε₂) = (−1, +1): generators (x₁, x₁x₂, x₃).
    let t = [[1, 0, 0], [1, 1, 0], [0, 0, 1]];
    for e3 in [-1i64, 1] {
        let s1 = in_new_coordinates(&sigma1(-1, 1), &t);
        let s2 = in_new_coordinates(&sigma2(e3), &t);
        check_group_relations(&s1, &s2);
        // Coefficients become (a, ab, c): the reduction target R(a, ab, c).
        assert_all_minus_shape(&s1, &s2, [1, 0, 0], [1, 1, 0], e3);
    }
    // The same substitution does NOT normalize the (+1, −1) pattern —
    // the oracle can tell the difference.
    let s1 = in_new_coordinates(&sigma1(1, -1), &t);
    assert_eq!(s1.images[0].sign, 1);
}

#[test]
fn substituting_x1_by_x1x2_normalizes_the_plus_minus_pattern() {
    // (ε₁, ε₂) = (+1, −1): generators (x₁x₂, x₂, x₃).
    let t = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
    for e3 in [-1i64, 1] {
        let s1 = in_new_coordinates(&sigma1(1, -1), &t);
        let s2 = in_new_coordinates(&sigma2(e3), &t);
        check_group_relations(&s1, &s2);
        // Coefficients become (ab, b, c): the reduction target R(ab, b, c).
        assert_all_minus_shape(&s1, &s2, [1, 1, 0], [0, 1, 0], e3);
    }
}

#[test]
fn reordered_generators_give_the_permuted_reduction() {
    // The normalizing generating set is not unique: listing (x₁x₂, x₁, x₃)
    // instead of (x₁, x₁x₂, x₃) normalizes (−1, +1) just as well and lands
    // on the permuted triple (ab, a, c).
    let t = [[1, 1, 0], [1, 0, 0], [0, 0, 1]];
    let s1 = in_new_coordinates(&sigma1(-1, 1), &t);
    let s2 = in_new_coordinates(&sigma2(-1), &t);
    check_group_relations(&s1, &s2);
    assert_all_minus_shape(&s1, &s2, [1, 1, 0], [1, 0, 0], -1);

    // Likewise (x₂, x₁x₂, x₃) normalizes (+1, −1) onto (b, ab, c).
    let t = [[0, 1, 0], [1, 1, 0], [0, 0, 1]];
    let s1 = in_new_coordinates(&sigma1(1, -1), &t);
    let s2 = in_new_coordinates(&sigma2(-1), &t);
    check_group_relations(&s1, &s2);
    assert_all_minus_shape(&s1, &s2, [0, 1, 0], [1, 1, 0], -1);

    // A "deeper" normalizer — x₂ ↦ x₁³x₂ — is also valid and produces
    // (a, a³b, c), square-equivalent to (a, ab, c).
    let t = [[1, 0, 0], [3, 1, 0], [0, 0, 1]];
    let s1 = in_new_coordinates(&sigma1(-1, 1), &t);
    let s2 = in_new_coordinates(&sigma2(-1), &t);
    check_group_relations(&s1, &s2);
    assert_all_minus_shape(&s1, &s2, [1, 0, 0], [3, 1, 0], -1);
}

// ---------------------------------------------------------------------------
// Verdict invariance under the choice of normalizer.
// ---------------------------------------------------------------------------

const POOL: [i64; 12] = [1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 21, 22];

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn draw(rng: &mut impl Rng) -> BigRational {
    let n = POOL[rng.gen_range(0..POOL.len())];
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(sign * n)
}

fn group_outcome(a: &BigRational, b: &BigRational, c: &BigRational, signs: (i8, i8, i8)) -> Outcome {
    let instance = ProblemInstance::new(
        "3.2.3.1".parse().unwrap(),
        [
            ("a".to_string(), a.clone()),
            ("b".to_string(), b.clone()),
            ("c".to_string(), c.clone()),
        ]
        .into_iter()
        .collect(),
        [
            ("e1".to_string(), signs.0),
            ("e2".to_string(), signs.1),
            ("e3".to_string(), signs.2),
        ]
        .into_iter()
        .collect(),
    )
    .unwrap();
    decide_group(&instance).unwrap().outcome
}

#[test]
fn verdicts_are_independent_of_the_chosen_normalizer() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3231_0ace);
    for _ in 0..200 {
        let a = draw(&mut rng);
        let b = draw(&mut rng);
        let c = draw(&mut rng);
        let ab = &a * &b;
        let a3b = &(&(&a * &a) * &a) * &b;

        // (−1, +1): both generator orderings and the deeper normalizer agree,
        // and all agree with the dispatcher.
        let v = group_outcome(&a, &b, &c, (-1, 1, -1));
        let r1 = decide_r(&a, &ab, &c).unwrap().outcome;
        let r2 = decide_r(&ab, &a, &c).unwrap().outcome;
        let r3 = decide_r(&a, &a3b, &c).unwrap().outcome;
        assert_eq!(r1, r2, "generator order must not matter at ({a}, {b}, {c})");
        assert_eq!(r1, r3, "normalizer depth must not matter at ({a}, {b}, {c})");
        assert_eq!(v, r1, "dispatcher must match the oracle-validated reduction");

        // (+1, −1): same story with the mirrored substitution.
        let v = group_outcome(&a, &b, &c, (1, -1, -1));
        let r1 = decide_r(&ab, &b, &c).unwrap().outcome;
        let r2 = decide_r(&b, &ab, &c).unwrap().outcome;
        assert_eq!(r1, r2);
        assert_eq!(v, r1);

        // (−1, −1): no substitution at all.
        let v = group_outcome(&a, &b, &c, (-1, -1, -1));
        assert_eq!(v, decide_r(&a, &b, &c).unwrap().outcome);

        // Affirmative shortcuts are untouched by any of this.
        assert_eq!(group_outcome(&a, &b, &c, (1, 1, -1)), Outcome::Affirmative);
        assert_eq!(group_outcome(&a, &b, &c, (-1, 1, 1)), Outcome::Affirmative);
    }
}

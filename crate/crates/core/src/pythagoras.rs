//! Right triangles with integer sides.
//!
//! Every Pythagorean triple has an *integer* radius quadruple (the parity of
//! `a²+b² = c²` forces `a+b-c` even), and rightness is the single product
//! relation `r2·r3 = r1·r4`, which also equals the area `G`.
//!
//! Two parameterisations are implemented:
//!
//! * Dickson splits: `a²+b² = c²` iff `(a+b-c)²/2 = (c-a)(c-b)`; writing
//!   `e = a+b-c`, every triple is `[m+e, n+e, m+n+e]` with `e² = 2mn`, and
//!   all primitive triples with a given in-touch radius `r1 = e/2` come from
//!   factor pairs of `2r1²`.
//! * The P-sequence `[q', q, p, p']` with the Fibonacci-like rule
//!   `p = q'+q`, `p' = q+p`, which reproduces the radii multiplicatively:
//!   `[r1,r2,r3,r4] = [qq', pq', qp', pp']`. Here `q/p` and `q'/p'` are the
//!   half-angle tangents of the two acute angles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::rational::{divisor_pairs, int, square_free_split, Rational};
use crate::triangle::RadiusQuadruple;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("sides must be positive")]
    NonPositive,
    #[error("{0} {1} {2} is not a Pythagorean triple")]
    NotPythagorean(BigInt, BigInt, BigInt),
    #[error("triple is not primitive (gcd {0} > 1)")]
    NotPrimitive(BigInt),
    #[error("triple is not normalized (odd leg must come first)")]
    NotNormalized,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PSequenceError {
    #[error("entries must be positive")]
    NonPositive,
    #[error("Fibonacci rule violated: expected p = q'+q and p' = q+p")]
    BrokenRecurrence,
    #[error("q' must be odd")]
    EvenQPrime,
    #[error("q' and q must be coprime")]
    NotCoprime,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DicksonError {
    #[error("parameters must be positive")]
    NonPositive,
    #[error("e² = 2mn violated")]
    BrokenSquareRelation,
}

/// A Pythagorean triple `a² + b² = c²` with positive integer sides.
///
/// The constructor verifies the equation, so a value of this type is always
/// genuinely right-angled; `a` and `b` are kept in the caller's order (use
/// [`PythTriple::normalize`] for the primitive, odd-leg-first form).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PythTriple {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl PythTriple {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self, TripleError> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(TripleError::NonPositive);
        }
        if &a * &a + &b * &b != &c * &c {
            return Err(TripleError::NotPythagorean(a, b, c));
        }
        Ok(PythTriple { a, b, c })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self, TripleError> {
        Self::new(int(a), int(b), int(c))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn sides(&self) -> [BigInt; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn gcd(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd().is_one()
    }

    /// Primitive with the odd leg first.
    pub fn is_normalized(&self) -> bool {
        self.is_primitive() && self.a.is_odd()
    }

    /// Divides out the gcd and puts the odd leg first. Total: a primitive
    /// triple has exactly one odd leg.
    pub fn normalize(&self) -> PythTriple {
        let g = self.gcd();
        let (a, b, c) = (&self.a / &g, &self.b / &g, &self.c / &g);
        if a.is_odd() {
            PythTriple { a, b, c }
        } else {
            PythTriple { a: b, b: a, c }
        }
    }

    /// Integer radius quadruple `[r1, r2, r3, r4]`; integrality is forced by
    /// the parity of the Pythagorean equation.
    pub fn radii(&self) -> [BigInt; 4] {
        let two = int(2);
        let r1 = (&self.a + &self.b - &self.c) / &two;
        let r2 = (&self.a - &self.b + &self.c) / &two;
        let r3 = (-&self.a + &self.b + &self.c) / &two;
        let r4 = &r1 + &r2 + &r3;
        [r1, r2, r3, r4]
    }

    pub fn radius_quadruple(&self) -> RadiusQuadruple {
        let [r1, r2, r3, _] = self.radii();
        RadiusQuadruple::from_inner(r1.into(), r2.into(), r3.into())
            .expect("triple sides satisfy the triangle inequality")
    }

    /// Area `G = a·b/2 = r2·r3 = r1·r4`.
    pub fn area(&self) -> BigInt {
        &self.a * &self.b / int(2)
    }
}

impl std::fmt::Display for PythTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

/// Rightness in radius form: `r2·r3 = r1·r4`.
pub fn verify_right(r: &RadiusQuadruple) -> bool {
    r.r2() * r.r3() == r.r1() * r.r4()
}

/// The square-split identity `(a+b-c)² = 2(c-a)(c-b)`, which holds exactly
/// when `a² + b² = c²` — for *all* integer inputs, right or not.
pub fn dickson_check(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let e = a + b - c;
    &e * &e == int(2) * (c - a) * (c - b)
}

/// Parameters `(m, n, e)` with `e² = 2mn`; the generated triple is
/// `[m+e, n+e, m+n+e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonParams {
    m: BigInt,
    n: BigInt,
    e: BigInt,
}

impl DicksonParams {
    pub fn new(m: BigInt, n: BigInt, e: BigInt) -> Result<Self, DicksonError> {
        if !m.is_positive() || !n.is_positive() || !e.is_positive() {
            return Err(DicksonError::NonPositive);
        }
        if &e * &e != int(2) * &m * &n {
            return Err(DicksonError::BrokenSquareRelation);
        }
        Ok(DicksonParams { m, n, e })
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn e(&self) -> &BigInt {
        &self.e
    }
}

/// `[m+e, n+e, m+n+e]`: always a Pythagorean triple when `e² = 2mn`.
pub fn dickson_build(p: &DicksonParams) -> PythTriple {
    PythTriple::new(&p.m + &p.e, &p.n + &p.e, &p.m + &p.n + &p.e)
        .expect("e² = 2mn makes the square relation an identity")
}

/// Resolves the free choice in `e² = 2mn` for a given `m`: writing
/// `2m = f²·g` with `g` squarefree, every solution is `n = g·h²`,
/// `e = f·g·h` for `h = 1, 2, ...`.
pub fn dickson_param(m: &BigInt, h: &BigInt) -> Result<DicksonParams, DicksonError> {
    if !m.is_positive() || !h.is_positive() {
        return Err(DicksonError::NonPositive);
    }
    let (f, g) = square_free_split(&(int(2) * m));
    let n = &g * h * h;
    let e = &f * &g * h;
    DicksonParams::new(m.clone(), n, e)
}

/// All normalized primitive triples whose radius `r1 = (a+b-c)/2` equals the
/// given value: one candidate per factor pair `u·v = 2r1²` (radii
/// `[r1, u+r1, v+r1, 3r1+u+v]`), kept when the sides are coprime.
/// Sorted by hypotenuse, then first leg. May be empty for no `r1` — every
/// `r1 >= 1` admits the split `u = 1, v = 2r1²` with odd sides coprime — but
/// emptiness is not asserted here.
pub fn dickson_enumerate(r1: &BigInt) -> Vec<PythTriple> {
    assert!(r1.is_positive(), "in-touch radius must be positive");
    let mut out = Vec::new();
    for (u, v) in divisor_pairs(&(int(2) * r1 * r1)) {
        // u = v would need 2r1² to be a perfect square; it never is.
        let a = int(2) * r1 + &u;
        let b = int(2) * r1 + &v;
        let c = &u + &v + int(2) * r1;
        if a.gcd(&b).gcd(&c).is_one() {
            out.push(
                PythTriple::new(a, b, c)
                    .expect("factor-pair construction satisfies the equation")
                    .normalize(),
            );
        }
    }
    out.sort_by(|s, t| (s.c(), s.a()).cmp(&(t.c(), t.a())));
    out
}

/// Validates and normalizes raw sides into a primitive odd-first triple.
pub fn normalize_primitive(a: BigInt, b: BigInt, c: BigInt) -> Result<PythTriple, TripleError> {
    Ok(PythTriple::new(a, b, c)?.normalize())
}

/// Half-angle tangents of the two acute angles, as reduced fractions:
/// `tan(β/2) = r1/r2 = q/p` and `tan(α/2) = r1/r3 = q'/p'`.
pub fn half_angle_tangents(t: &PythTriple) -> Result<(Rational, Rational), TripleError> {
    require_normalized(t)?;
    let [r1, r2, r3, _] = t.radii();
    Ok((
        Rational::new(r1.clone(), r2),
        Rational::new(r1, r3),
    ))
}

fn require_normalized(t: &PythTriple) -> Result<(), TripleError> {
    let g = t.gcd();
    if !g.is_one() {
        return Err(TripleError::NotPrimitive(g));
    }
    if !t.a().is_odd() {
        return Err(TripleError::NotNormalized);
    }
    Ok(())
}

/// The four-term sequence `[q', q, p, p']` with `p = q'+q` and `p' = q+p`.
///
/// `q'` is odd and coprime to `q`; these two seed values determine the rest.
/// The radii of the associated triple factor through the sequence:
/// `[r1, r2, r3, r4] = [qq', pq', qp', pp']`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PSequence {
    q_prime: BigInt,
    q: BigInt,
    p: BigInt,
    p_prime: BigInt,
}

impl PSequence {
    pub fn new(
        q_prime: BigInt,
        q: BigInt,
        p: BigInt,
        p_prime: BigInt,
    ) -> Result<Self, PSequenceError> {
        if !q_prime.is_positive() || !q.is_positive() || !p.is_positive() || !p_prime.is_positive()
        {
            return Err(PSequenceError::NonPositive);
        }
        if p != &q_prime + &q || p_prime != &q + &p {
            return Err(PSequenceError::BrokenRecurrence);
        }
        if q_prime.is_even() {
            return Err(PSequenceError::EvenQPrime);
        }
        if !q_prime.gcd(&q).is_one() {
            return Err(PSequenceError::NotCoprime);
        }
        Ok(PSequence {
            q_prime,
            q,
            p,
            p_prime,
        })
    }

    /// Completes `[q', q, ?, ?]` by the recurrence.
    pub fn from_seed(q_prime: BigInt, q: BigInt) -> Result<Self, PSequenceError> {
        let p = &q_prime + &q;
        let p_prime = &q + &p;
        Self::new(q_prime, q, p, p_prime)
    }

    pub fn q_prime(&self) -> &BigInt {
        &self.q_prime
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn p_prime(&self) -> &BigInt {
        &self.p_prime
    }

    pub fn entries(&self) -> [BigInt; 4] {
        [
            self.q_prime.clone(),
            self.q.clone(),
            self.p.clone(),
            self.p_prime.clone(),
        ]
    }

    /// `[qq', pq', qp', pp']` — the radius quadruple, multiplicatively.
    pub fn radii(&self) -> [BigInt; 4] {
        [
            &self.q * &self.q_prime,
            &self.p * &self.q_prime,
            &self.q * &self.p_prime,
            &self.p * &self.p_prime,
        ]
    }

    /// The radius `r1 = q·q'` of the in-touch circle at the right angle.
    pub fn in_radius(&self) -> BigInt {
        &self.q * &self.q_prime
    }
}

impl std::fmt::Display for PSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{},{},{},{}]",
            self.q_prime, self.q, self.p, self.p_prime
        )
    }
}

/// P-sequence of a normalized primitive triple, read off the reduced
/// half-angle tangents `q/p = r1/r2` and `q'/p' = r1/r3`.
pub fn p_sequence(t: &PythTriple) -> Result<PSequence, TripleError> {
    let (qp_frac, qpp_frac) = half_angle_tangents(t)?;
    let seq = PSequence::new(
        qpp_frac.numer().clone(),
        qp_frac.numer().clone(),
        qp_frac.denom().clone(),
        qpp_frac.denom().clone(),
    )
    .expect("tangents of a normalized primitive triple satisfy the recurrence");
    Ok(seq)
}

/// Rebuilds the radius quadruple and triple from a P-sequence.
pub fn triple_from_pseq(seq: &PSequence) -> (RadiusQuadruple, PythTriple) {
    let [r1, r2, r3, _] = seq.radii();
    let triple = PythTriple::new(&r1 + &r2, &r1 + &r3, &r2 + &r3)
        .expect("P-sequence radii always form a right triple");
    let quad = RadiusQuadruple::from_inner(r1.into(), r2.into(), r3.into())
        .expect("P-sequence radii are positive");
    (quad, triple)
}

/// The four classical shapes of the same triple, all emitted as `[a, b, c]`:
///
/// * `[p²-q², 2pq, p²+q²]`
/// * from `(q', p')`: `a = p'q'`, `b = (p'²-q'²)/2`, `c = (p'²+q'²)/2`
/// * `[p'q', 2pq, pq'+qp']`
/// * `[p'q', 2pq, pp'-qq']`
///
/// They agree entry-wise; the agreement is itself a worthwhile test because
/// each shape distributes the radii differently.
pub fn standard_forms(seq: &PSequence) -> [PythTriple; 4] {
    let (q, p) = (&seq.q, &seq.p);
    let (qp, pp) = (&seq.q_prime, &seq.p_prime);
    let two = int(2);
    let f1 = PythTriple::new(p * p - q * q, &two * p * q, p * p + q * q);
    let f2 = PythTriple::new(
        pp * qp,
        (pp * pp - qp * qp) / &two,
        (pp * pp + qp * qp) / &two,
    );
    let f3 = PythTriple::new(pp * qp, &two * p * q, p * qp + q * pp);
    let f4 = PythTriple::new(pp * qp, &two * p * q, p * pp - q * qp);
    [f1, f2, f3, f4].map(|f| f.expect("standard forms satisfy the equation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn t(a: i64, b: i64, c: i64) -> PythTriple {
        PythTriple::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn constructor_rejects_non_triples() {
        assert!(matches!(
            PythTriple::from_i64(3, 4, 6),
            Err(TripleError::NotPythagorean(..))
        ));
        assert_eq!(PythTriple::from_i64(0, 4, 4), Err(TripleError::NonPositive));
    }

    #[test]
    fn normalize_divides_gcd_and_orders_legs() {
        assert_eq!(t(6, 8, 10).normalize(), t(3, 4, 5));
        assert_eq!(t(20, 21, 29).normalize(), t(21, 20, 29));
        assert_eq!(t(8, 15, 17).normalize(), t(15, 8, 17));
        assert!(t(33, 56, 65).is_normalized());
    }

    #[test]
    fn radii_are_integral_even_for_non_primitive() {
        assert_eq!(t(6, 8, 10).radii(), [int(2), int(4), int(6), int(12)]);
        assert_eq!(t(21, 20, 29).radii(), [int(6), int(15), int(14), int(35)]);
    }

    #[test]
    fn rightness_is_the_radius_product_relation() {
        assert!(verify_right(&t(3, 4, 5).radius_quadruple()));
        let not_right = crate::triangle::radii_from_sides(
            &crate::triangle::Triangle::new(
                rat(4, 1),
                rat(5, 1),
                rat(6, 1),
            )
            .unwrap(),
        );
        assert!(!verify_right(&not_right));
    }

    #[test]
    fn dickson_check_agrees_with_equation_including_non_triples() {
        // identity holds/fails together with a²+b²=c², e.g. near-misses
        for (a, b, c) in [(3, 4, 5), (3, 4, 6), (5, 12, 13), (5, 12, 12), (8, 15, 17)] {
            let eq = a * a + b * b == c * c;
            assert_eq!(dickson_check(&int(a), &int(b), &int(c)), eq, "{a},{b},{c}");
        }
    }

    #[test]
    fn dickson_build_and_param() {
        // m=1, h=1: 2m = 2 squarefree, e = 2, n = 2 -> [3,4,5]
        let p = dickson_param(&int(1), &int(1)).unwrap();
        assert_eq!(dickson_build(&p), t(3, 4, 5));
        // m=9, h=1: 2m = 18 = 3²·2, e = 6, n = 2 -> [15,8,17]
        let p = dickson_param(&int(9), &int(1)).unwrap();
        assert_eq!(dickson_build(&p), t(15, 8, 17));
        // m=1, h=2: n = 8, e = 4 -> [5,12,13]
        let p = dickson_param(&int(1), &int(2)).unwrap();
        assert_eq!(dickson_build(&p), t(5, 12, 13));
        assert_eq!(
            DicksonParams::new(int(1), int(3), int(2)),
            Err(DicksonError::BrokenSquareRelation)
        );
    }

    #[test]
    fn dickson_enumerate_small_radii() {
        assert_eq!(dickson_enumerate(&int(1)), vec![t(3, 4, 5)]);
        assert_eq!(dickson_enumerate(&int(2)), vec![t(5, 12, 13)]);
        // r1 = 3: the (3,6) split collapses to gcd 3 and is filtered
        assert_eq!(dickson_enumerate(&int(3)), vec![t(15, 8, 17), t(7, 24, 25)]);
        assert_eq!(dickson_enumerate(&int(4)), vec![t(9, 40, 41)]);
    }

    #[test]
    fn tangents_and_p_sequence() {
        let (qp, qpp) = half_angle_tangents(&t(3, 4, 5)).unwrap();
        assert_eq!((qp, qpp), (rat(1, 2), rat(1, 3)));
        let (qp, qpp) = half_angle_tangents(&t(21, 20, 29)).unwrap();
        assert_eq!((qp, qpp), (rat(2, 5), rat(3, 7)));

        let seq = p_sequence(&t(21, 20, 29)).unwrap();
        assert_eq!(seq.entries(), [int(3), int(2), int(5), int(7)]);
        assert_eq!(seq.radii(), [int(6), int(15), int(14), int(35)]);

        assert_eq!(
            p_sequence(&t(6, 8, 10)),
            Err(TripleError::NotPrimitive(int(2)))
        );
        assert_eq!(p_sequence(&t(4, 3, 5)), Err(TripleError::NotNormalized));
    }

    #[test]
    fn p_sequence_validation() {
        assert_eq!(
            PSequence::new(int(1), int(1), int(3), int(4)),
            Err(PSequenceError::BrokenRecurrence)
        );
        assert_eq!(
            PSequence::from_seed(int(2), int(1)),
            Err(PSequenceError::EvenQPrime)
        );
        assert_eq!(
            PSequence::from_seed(int(3), int(6)),
            Err(PSequenceError::NotCoprime)
        );
    }

    #[test]
    fn pseq_round_trip() {
        let seq = PSequence::from_seed(int(1), int(1)).unwrap();
        let (quad, triple) = triple_from_pseq(&seq);
        assert_eq!(triple, t(3, 4, 5));
        assert!(verify_right(&quad));
        assert_eq!(p_sequence(&triple).unwrap(), seq);
    }

    #[test]
    fn one_parameter_family_q_prime_one() {
        // [1, q, 1+q, 1+2q] -> [1+2q, 2q(1+q), 1+2q(1+q)]
        for q in 1i64..20 {
            let seq = PSequence::from_seed(int(1), int(q)).unwrap();
            let (_, triple) = triple_from_pseq(&seq);
            assert_eq!(
                triple.sides(),
                [
                    int(1 + 2 * q),
                    int(2 * q * (1 + q)),
                    int(1 + 2 * q * (1 + q))
                ]
            );
        }
    }

    #[test]
    fn standard_forms_agree() {
        for triple in [t(3, 4, 5), t(21, 20, 29), t(33, 56, 65)] {
            let seq = p_sequence(&triple).unwrap();
            let forms = standard_forms(&seq);
            for f in &forms {
                assert_eq!(*f, triple);
            }
        }
        // [3,2,5,7]: fourth form is [p'q', 2pq, pp'-qq'] = [21, 20, 35-6]
        let seq = PSequence::from_seed(int(3), int(2)).unwrap();
        assert_eq!(standard_forms(&seq)[3], t(21, 20, 29));
    }
}

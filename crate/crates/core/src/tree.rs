//! The ternary tree of primitive Pythagorean triples, rooted at `[3,4,5]`.
//!
//! Each primitive triple has exactly three children and (except the root)
//! one parent. The tree is realised three independent ways, and the
//! equivalence of the three is part of the test contract:
//!
//! * **P-sequence promotion** — restart the Fibonacci-like sequence from a
//!   pair of its own entries: `R: [q', p, …]`, `L: [p', q, …]`,
//!   `M: [p', p, …]`. The child's in-touch radius is the parent's `r2`,
//!   `r3`, `r4` respectively.
//! * **Matrix promotion** — the classical 3×3 matrices: all-positive `B`
//!   for the middle child, and `B` with the first (resp. second) column
//!   negated for the left (resp. right) child.
//! * **Price's sign-pattern method** — flip signs of `(a, b, c)`, take
//!   `t = 2(a+b+c)` of the flipped triple, and read `[|t-a|, |t-b|, |t+c|]`;
//!   the four meaningful patterns give the three children and the parent
//!   (degenerate `[0,1,1]` above the root).
//!
//! Demotion inverts promotion: on sequences via the two sign-resolved
//! completions of `[?, ?, x-y or y-x, …]`, on triples via
//! `e = a+b-c` and `[|a-2e|, |b-2e|, c-2e]`, and on half-angle tangents via
//! `x/y ↦ ±(x/(y-2x))^±1` with signs fixed to stay positive and below one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::pythagoras::{PSequence, PythTriple, TripleError};
use crate::rational::{int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("the root [3,4,5] has no parent")]
    RootHasNoParent,
    #[error("tangent {0} belongs to the root [3,4,5]")]
    RootTangent(Rational),
    #[error("{0} is not a valid half-angle tangent of a primitive triple")]
    InvalidTangent(Rational),
    #[error(transparent)]
    Triple(#[from] TripleError),
}

/// Branch labels for the three children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Left,
    Middle,
    Right,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::Left, Branch::Middle, Branch::Right];

    pub fn letter(self) -> char {
        match self {
            Branch::Left => 'L',
            Branch::Middle => 'M',
            Branch::Right => 'R',
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A root-to-node path, e.g. `"LR"`. The empty path is the root.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreePath(pub Vec<Branch>);

impl std::fmt::Display for TreePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TreePath {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|ch| match ch {
                'L' => Ok(Branch::Left),
                'M' => Ok(Branch::Middle),
                'R' => Ok(Branch::Right),
                other => Err(format!("invalid branch letter {other:?} (want L, M or R)")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TreePath)
    }
}

/// Child of a P-sequence: restart the recurrence from the branch's pair.
///
/// The restarted pair is always valid — the new `q'` (an old `q'` or `p'`)
/// is odd, and entries of a P-sequence are pairwise coprime.
pub fn promote(seq: &PSequence, branch: Branch) -> PSequence {
    let (q_prime, q) = match branch {
        Branch::Right => (seq.q_prime().clone(), seq.p().clone()),
        Branch::Left => (seq.p_prime().clone(), seq.q().clone()),
        Branch::Middle => (seq.p_prime().clone(), seq.p().clone()),
    };
    PSequence::from_seed(q_prime, q).expect("promoted seed pairs are always valid")
}

/// Result of demoting a P-sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Demotion {
    /// The sequence is `[1,1,2,3]`, the root.
    Root,
    /// The parent sequence, and the branch that re-promotes it here.
    Parent(PSequence, Branch),
}

/// Parent of a P-sequence `[x, y, …]`, by cases on the seed pair:
///
/// * `x = y` forces `x = y = 1`: the root.
/// * `x < y`: parent `[x, y-x, y, 2y-x]`, reached back by branch `R`.
/// * `x > y`: of the two completions `[2y-x, x-y, y, x]` and
///   `[x-2y, y, x-y, x]` exactly one is all-positive (`x` is odd, so
///   `x = 2y` cannot happen); they re-promote by `M` and `L` respectively.
pub fn demote(seq: &PSequence) -> Demotion {
    let x = seq.q_prime();
    let y = seq.q();
    match x.cmp(y) {
        std::cmp::Ordering::Equal => Demotion::Root,
        std::cmp::Ordering::Less => {
            let parent = PSequence::from_seed(x.clone(), y - x)
                .expect("x < y demotion stays valid");
            Demotion::Parent(parent, Branch::Right)
        }
        std::cmp::Ordering::Greater => {
            if x < &(int(2) * y) {
                let parent = PSequence::from_seed(int(2) * y - x, x - y)
                    .expect("y < x < 2y demotion stays valid");
                Demotion::Parent(parent, Branch::Middle)
            } else {
                let parent = PSequence::from_seed(x - int(2) * y, y.clone())
                    .expect("x > 2y demotion stays valid");
                Demotion::Parent(parent, Branch::Left)
            }
        }
    }
}

/// Step trace of one tangent demotion: the raw value `x/(y-2x)`, the
/// sign-corrected value if the raw denominator was negative, and the final
/// reciprocal-corrected result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentSteps {
    pub raw: Rational,
    pub sign_fixed: Option<Rational>,
    pub result: Rational,
}

impl TangentSteps {
    /// The chain as printed values: input excluded, duplicates collapsed.
    pub fn chain(&self) -> Vec<Rational> {
        let mut out = vec![self.raw.clone()];
        if let Some(s) = &self.sign_fixed {
            if s != &self.raw {
                out.push(s.clone());
            }
        }
        if out.last() != Some(&self.result) {
            out.push(self.result.clone());
        }
        out
    }
}

fn validate_tangent(t: &Rational) -> Result<(BigInt, BigInt), TreeError> {
    let x = t.numer().clone();
    let y = t.denom().clone();
    // A half-angle tangent of a primitive right triangle is a reduced x/y in
    // (0,1) with x, y not both odd... q/p has opposite parity; q'/p' both odd.
    // Accept any reduced fraction strictly between 0 and 1.
    if !x.is_positive() || x >= y {
        return Err(TreeError::InvalidTangent(t.clone()));
    }
    Ok((x, y))
}

/// One tangent demotion `x/y ↦ ±(x/(y-2x))^±1`, with the step trace.
///
/// The first sign is chosen to avoid a negative value, the reciprocal to
/// avoid a value above one. The root tangents `1/2` and `1/3` have no
/// parent and are rejected.
pub fn demote_tangent_steps(t: &Rational) -> Result<TangentSteps, TreeError> {
    let (x, y) = validate_tangent(t)?;
    if (x.is_one() && y == int(2)) || (x.is_one() && y == int(3)) {
        return Err(TreeError::RootTangent(t.clone()));
    }
    let raw_den = &y - int(2) * &x;
    if raw_den.is_zero() {
        // x/y = 1/2 is the only reduced fraction with y = 2x, handled above.
        return Err(TreeError::InvalidTangent(t.clone()));
    }
    let raw = Rational::new(x.clone(), raw_den.clone());
    let sign_fixed = if raw.is_negative() {
        Some(-raw.clone())
    } else {
        None
    };
    let positive = sign_fixed.clone().unwrap_or_else(|| raw.clone());
    let result = if positive > Rational::one() {
        positive.recip()
    } else {
        positive
    };
    Ok(TangentSteps {
        raw,
        sign_fixed,
        result,
    })
}

/// Final value of one tangent demotion; always a valid tangent again.
pub fn demote_tangent(t: &Rational) -> Result<Rational, TreeError> {
    Ok(demote_tangent_steps(t)?.result)
}

/// Parent triple via `e = a+b-c`: `[|a-2e|, |b-2e|, c-2e]`.
/// The root has no parent; non-primitive input is rejected.
pub fn demote_triple(t: &PythTriple) -> Result<PythTriple, TreeError> {
    let t = normalized(t)?;
    if t == PythTriple::from_i64(3, 4, 5).unwrap() {
        return Err(TreeError::RootHasNoParent);
    }
    let e = t.a() + t.b() - t.c();
    let two = int(2);
    let parent = PythTriple::new(
        (t.a() - &two * &e).abs(),
        (t.b() - &two * &e).abs(),
        t.c() - &two * &e,
    )
    .expect("triple demotion always lands on a triple");
    Ok(parent)
}

/// Child triple via the 3×3 matrices: rows `[±a ± 2b + 2c, ±2a ± b + 2c,
/// ±2a ± 2b + 3c]` with column signs `(-,+)` for L, `(+,+)` for M,
/// `(+,-)` for R. Requires a normalized primitive triple so the leg order
/// matches the branch labels.
pub fn promote_triple(t: &PythTriple, branch: Branch) -> Result<PythTriple, TreeError> {
    let t = normalized(t)?;
    let (sa, sb): (i64, i64) = match branch {
        Branch::Left => (-1, 1),
        Branch::Middle => (1, 1),
        Branch::Right => (1, -1),
    };
    let (sa, sb) = (int(sa), int(sb));
    let (a, b, c) = (t.a(), t.b(), t.c());
    let child = PythTriple::new(
        &sa * a + int(2) * &sb * b + int(2) * c,
        int(2) * &sa * a + &sb * b + int(2) * c,
        int(2) * &sa * a + int(2) * &sb * b + int(3) * c,
    )
    .expect("tree matrices preserve the equation");
    Ok(child)
}

/// Price's family: parent above, three children below, all from one recipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriceFamily {
    /// `[|t-a|, |t-b|, |t-c|]` for the pattern `(+,+,-)`, sorted ascending.
    /// `[0,1,1]` above the root, otherwise a valid triple (see `parent`).
    pub parent_raw: [BigInt; 3],
    /// The parent as a triple; `None` above the root.
    pub parent: Option<PythTriple>,
    /// Children in branch order `[L, M, R]`.
    pub children: [PythTriple; 3],
}

/// Sign-pattern method: for a pattern `s` on `(a, b, c)`, let
/// `t = 2(s₁a + s₂b + s₃c)` and read `[|t - s₁a|, |t - s₂b|, |t + s₃c|]`.
/// `(+,+,+)` is the middle child, `(-,+,+)` the left, `(+,-,+)` the right,
/// and `(+,+,-)` the parent.
pub fn family_price(t: &PythTriple) -> Result<PriceFamily, TreeError> {
    let t = normalized(t)?;
    let apply = |sa: i64, sb: i64, sc: i64| -> [BigInt; 3] {
        let a = int(sa) * t.a();
        let b = int(sb) * t.b();
        let c = int(sc) * t.c();
        let tt = int(2) * (&a + &b + &c);
        [(&tt - a).abs(), (&tt - b).abs(), (tt + c).abs()]
    };
    let child = |sa, sb, sc| -> PythTriple {
        let [x, y, z] = apply(sa, sb, sc);
        PythTriple::new(x, y, z).expect("sign-pattern children satisfy the equation")
    };
    let children = [child(-1, 1, 1), child(1, 1, 1), child(1, -1, 1)];
    let mut parent_raw = apply(1, 1, -1);
    parent_raw.sort();
    let parent = if parent_raw[0].is_zero() {
        None
    } else {
        let [x, y, z] = apply(1, 1, -1);
        Some(PythTriple::new(x, y, z).expect("non-degenerate pattern parent is a triple"))
    };
    Ok(PriceFamily {
        parent_raw,
        parent,
        children,
    })
}

/// Root-to-triple path, recovered by repeated sequence demotion.
pub fn path_of(t: &PythTriple) -> Result<TreePath, TreeError> {
    let t = normalized(t)?;
    let mut seq = crate::pythagoras::p_sequence(&t)?;
    let mut rev = Vec::new();
    loop {
        match demote(&seq) {
            Demotion::Root => break,
            Demotion::Parent(parent, branch) => {
                rev.push(branch);
                seq = parent;
            }
        }
    }
    rev.reverse();
    Ok(TreePath(rev))
}

/// The triple at a path from the root.
pub fn triple_at(path: &TreePath) -> PythTriple {
    let mut seq = root_sequence();
    for &b in &path.0 {
        seq = promote(&seq, b);
    }
    crate::pythagoras::triple_from_pseq(&seq).1
}

/// `[1,1,2,3]`, the P-sequence of `[3,4,5]`.
pub fn root_sequence() -> PSequence {
    PSequence::from_seed(int(1), int(1)).expect("root sequence is valid")
}

/// Which child-generation machinery to walk the tree with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChildMethod {
    PSequence,
    Matrix,
    Price,
}

/// All primitive triples with hypotenuse at most `limit`, in depth-first
/// preorder (L then M then R). Callers wanting a canonical order should
/// sort. Pruning is sound because every child's hypotenuse strictly
/// exceeds its parent's.
pub fn enumerate(limit: &BigInt) -> Vec<PythTriple> {
    enumerate_by(limit, ChildMethod::PSequence)
}

/// Same enumeration, with the child rule chosen explicitly.
pub fn enumerate_by(limit: &BigInt, method: ChildMethod) -> Vec<PythTriple> {
    let mut out = Vec::new();
    let root = triple_at(&TreePath::default());
    if root.c() > limit {
        return out;
    }
    let mut stack = vec![root];
    while let Some(t) = stack.pop() {
        let children: [PythTriple; 3] = match method {
            ChildMethod::PSequence => {
                let seq = crate::pythagoras::p_sequence(&t).expect("tree nodes are normalized");
                Branch::ALL.map(|b| crate::pythagoras::triple_from_pseq(&promote(&seq, b)).1)
            }
            ChildMethod::Matrix => {
                Branch::ALL.map(|b| promote_triple(&t, b).expect("tree nodes are normalized"))
            }
            ChildMethod::Price => {
                family_price(&t)
                    .expect("tree nodes are normalized")
                    .children
            }
        };
        out.push(t);
        // push R, M, L so L pops first: depth-first preorder in L, M, R order
        for child in children.into_iter().rev() {
            if child.c() <= limit {
                stack.push(child);
            }
        }
    }
    out
}

fn normalized(t: &PythTriple) -> Result<PythTriple, TreeError> {
    let g = t.gcd();
    if !g.is_one() {
        return Err(TreeError::Triple(TripleError::NotPrimitive(g)));
    }
    Ok(t.normalize()) // leg order is representation, not identity
}

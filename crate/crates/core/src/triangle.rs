//! Radius quadruples for general triangles.
//!
//! For a triangle with sides `a, b, c` define
//!
//! ```text
//! r1 = (a+b-c)/2   r2 = (a-b+c)/2   r3 = (-a+b+c)/2   r4 = r1+r2+r3
//! ```
//!
//! so `r4` is the semiperimeter and the sides come back as `a = r1+r2`,
//! `b = r1+r3`, `c = r2+r3`. In this encoding Heron's formula collapses to
//! `G² = r1·r2·r3·r4`, and the in-radius/ex-radii of the triangle are the
//! "equi-radii" `sᵢ = G/rᵢ`.

use num_traits::Signed;
use thiserror::Error;

use crate::rational::{sqrt_exact, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TriangleError {
    #[error("side {0} is not positive")]
    NonPositiveSide(Rational),
    #[error("sides violate the strict triangle inequality (degenerate or impossible)")]
    Degenerate,
    #[error("radius {0} is not positive")]
    NonPositiveRadius(Rational),
    #[error("fourth radius must equal r1+r2+r3")]
    BrokenRadiusSum,
}

/// A non-degenerate triangle with positive rational sides.
///
/// Construction enforces strict triangle inequalities, so every `Triangle`
/// has a valid, all-positive radius quadruple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Triangle {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self, TriangleError> {
        for s in [&a, &b, &c] {
            if !s.is_positive() {
                return Err(TriangleError::NonPositiveSide(s.clone()));
            }
        }
        if &a + &b <= c || &a + &c <= b || &b + &c <= a {
            return Err(TriangleError::Degenerate);
        }
        Ok(Triangle { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn sides(&self) -> [Rational; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// The quadruple `[r1, r2, r3, r4]`, all positive, with `r4 = r1+r2+r3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusQuadruple {
    r1: Rational,
    r2: Rational,
    r3: Rational,
    r4: Rational,
}

impl RadiusQuadruple {
    /// Builds from the three independent radii; `r4` is derived.
    pub fn from_inner(r1: Rational, r2: Rational, r3: Rational) -> Result<Self, TriangleError> {
        for r in [&r1, &r2, &r3] {
            if !r.is_positive() {
                return Err(TriangleError::NonPositiveRadius(r.clone()));
            }
        }
        let r4 = &r1 + &r2 + &r3;
        Ok(RadiusQuadruple { r1, r2, r3, r4 })
    }

    /// Validates a full quadruple, including the sum constraint on `r4`.
    pub fn new(
        r1: Rational,
        r2: Rational,
        r3: Rational,
        r4: Rational,
    ) -> Result<Self, TriangleError> {
        let q = Self::from_inner(r1, r2, r3)?;
        if q.r4 != r4 {
            return Err(TriangleError::BrokenRadiusSum);
        }
        Ok(q)
    }

    pub fn r1(&self) -> &Rational {
        &self.r1
    }

    pub fn r2(&self) -> &Rational {
        &self.r2
    }

    pub fn r3(&self) -> &Rational {
        &self.r3
    }

    pub fn r4(&self) -> &Rational {
        &self.r4
    }

    pub fn entries(&self) -> [Rational; 4] {
        [
            self.r1.clone(),
            self.r2.clone(),
            self.r3.clone(),
            self.r4.clone(),
        ]
    }
}

/// Sides → radii. Total on valid triangles: the strict triangle inequality
/// is exactly positivity of `r1, r2, r3`.
pub fn radii_from_sides(t: &Triangle) -> RadiusQuadruple {
    let two = Rational::from(crate::rational::int(2));
    let r1 = (t.a() + t.b() - t.c()) / &two;
    let r2 = (t.a() - t.b() + t.c()) / &two;
    let r3 = (-t.a() + t.b() + t.c()) / &two;
    RadiusQuadruple::from_inner(r1, r2, r3)
        .expect("triangle inequality guarantees positive radii")
}

/// Radii → sides: `[r1+r2, r1+r3, r2+r3]`.
pub fn sides_from_radii(r: &RadiusQuadruple) -> Triangle {
    Triangle::new(r.r1() + r.r2(), r.r1() + r.r3(), r.r2() + r.r3())
        .expect("positive radii always produce a valid triangle")
}

/// Heron's formula in radius form: the squared area `G² = r1·r2·r3·r4`.
pub fn heron_area_sq(r: &RadiusQuadruple) -> Rational {
    r.r1() * r.r2() * r.r3() * r.r4()
}

/// One equi-radius `sᵢ = G/rᵢ`.
///
/// `G` itself may be irrational; when `G²` is a perfect rational square the
/// value is exact, otherwise the square `sᵢ² = G²/rᵢ²` is carried instead so
/// downstream checks remain exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquiRadius {
    Exact(Rational),
    /// The radius is `sqrt(square)` with `square` not a perfect square.
    Irrational { square: Rational },
}

impl EquiRadius {
    /// `sᵢ²`, available exactly in both representations.
    pub fn square(&self) -> Rational {
        match self {
            EquiRadius::Exact(s) => s * s,
            EquiRadius::Irrational { square } => square.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            EquiRadius::Exact(s) => Some(s),
            EquiRadius::Irrational { .. } => None,
        }
    }
}

/// The four equi-radii `sᵢ = G/rᵢ`. Their product satisfies
/// `s1·s2·s3·s4 = G²`, the mirror of Heron's formula.
pub fn equi_radii(r: &RadiusQuadruple) -> [EquiRadius; 4] {
    let g_sq = heron_area_sq(r);
    let radii = r.entries();
    match sqrt_exact(&g_sq) {
        Some(g) => radii.map(|ri| EquiRadius::Exact(&g / ri)),
        None => radii.map(|ri| EquiRadius::Irrational {
            square: &g_sq / (&ri * &ri),
        }),
    }
}

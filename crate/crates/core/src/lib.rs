//! Exact arithmetic for right triangles built on radius quadruples.
//!
//! A triangle with sides `a, b, c` is encoded by the four radii
//! `r1 = (a+b-c)/2`, `r2 = (a-b+c)/2`, `r3 = (-a+b+c)/2` and the semiperimeter
//! `r4 = r1+r2+r3`. Everything in this crate grows out of that encoding:
//!
//! * [`triangle`] — radius quadruples for general triangles, Heron's formula
//!   as `G² = r1·r2·r3·r4`, and the dual "equi-radii" `sᵢ = G/rᵢ`.
//! * [`pythagoras`] — right triangles have integer radii satisfying
//!   `r2·r3 = r1·r4`; parameterisations (Dickson splits, the Fibonacci-like
//!   P-sequence `[q', q, p, p']`) and the four standard triple forms.
//! * [`tree`] — the ternary tree of primitive triples rooted at `[3,4,5]`,
//!   realised three independent ways: P-sequence promotion, 3×3 matrices,
//!   and the doubled-perimeter sign-pattern method.
//! * [`descartes`] — curvature quadruples satisfying the Descartes circle
//!   equation, reflections, reduction to root quadruples, and several
//!   integer families of solutions.
//! * [`packing`] — integral Apollonian packings generated from a triple's
//!   circle configuration, with exact tangency checking, rectangle
//!   detection, SVG rendering and a JSON-lines dump.
//! * [`geometry`] — the explicit plane configuration behind the algebra:
//!   the four mutually tangent circles on a triple's right-angle frame, the
//!   dual in/ex-circle system, and the nine-point circle whose tangencies
//!   read off the triple's tree neighbours at quarter scale.
//!
//! All core computation is exact: arbitrary-precision integers and rationals
//! throughout, no floating point. Floats appear only at the SVG rendering
//! boundary.

pub mod descartes;
pub mod geometry;
pub mod packing;
pub mod pythagoras;
pub mod rational;
pub mod tree;
pub mod triangle;

pub use rational::Rational;

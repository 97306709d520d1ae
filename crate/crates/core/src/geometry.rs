//! Exact plane geometry of a right triple's circle configurations.
//!
//! Place the right angle at the origin with legs along the axes. Four
//! mutually tangent circles sit on the rectangle corners: radius `r1` at
//! the origin, `r2` at `(a,0)`, `r3` at `(0,b)`, and `r4` at `(a,b)`
//! enclosing the others internally. This *corner system* is congruent,
//! by the reflection `ρ(x,y) = (r1-y, r1-x)`, to the triangle's
//! in/ex-circle system (the *equi-circles*), and the two systems share
//! their six contact points while being mutually orthogonal in a fixed
//! pattern. The nine-point circle of the triangle is tangent to all four
//! equi-circles, and the center differences of those tangencies are
//! quarter-scale copies of the triple's tree neighbours — the geometric
//! face of promotion and demotion.
//!
//! Everything here is rational and exact; no square roots are ever taken
//! (tangency and orthogonality are tested on squared distances).

use num_bigint::BigInt;
use num_traits::Signed;

use crate::pythagoras::PythTriple;
use crate::rational::{int, rat, rat_int, Rational};
use crate::triangle::RadiusQuadruple;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    pub fn dist_sq(&self, other: &PlanePoint) -> Rational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl std::fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A circle with a descriptive label, exact center and positive radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCircle {
    pub label: &'static str,
    pub center: PlanePoint,
    pub radius: Rational,
}

impl NamedCircle {
    fn new(label: &'static str, x: Rational, y: Rational, radius: Rational) -> Self {
        debug_assert!(radius.is_positive());
        NamedCircle {
            label,
            center: PlanePoint::new(x, y),
            radius,
        }
    }
}

/// How two circles touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tangency {
    External,
    /// The first-listed circle contains the second or vice versa.
    Internal,
}

/// Exact tangency classification from squared center distance.
pub fn tangency(a: &NamedCircle, b: &NamedCircle) -> Option<Tangency> {
    let d_sq = a.center.dist_sq(&b.center);
    let sum = &a.radius + &b.radius;
    let diff = &a.radius - &b.radius;
    if d_sq == &sum * &sum {
        Some(Tangency::External)
    } else if d_sq == &diff * &diff && a.radius != b.radius {
        Some(Tangency::Internal)
    } else {
        None
    }
}

/// Exact orthogonality: the circles meet at right angles exactly when the
/// squared center distance equals the sum of the squared radii.
pub fn orthogonal(a: &NamedCircle, b: &NamedCircle) -> bool {
    a.center.dist_sq(&b.center) == &a.radius * &a.radius + &b.radius * &b.radius
}

/// The contact point of two tangent circles: on the center line, at
/// distance `r` from the first center (external), or at distance `R` from
/// the containing center toward the contained one (internal).
pub fn contact_point(a: &NamedCircle, b: &NamedCircle) -> Option<PlanePoint> {
    let kind = tangency(a, b)?;
    let (from, to, ratio) = match kind {
        Tangency::External => {
            let span = &a.radius + &b.radius;
            (a, b, &a.radius / span)
        }
        Tangency::Internal => {
            let (big, small) = if a.radius > b.radius { (a, b) } else { (b, a) };
            let span = &big.radius - &small.radius;
            (big, small, &big.radius / span)
        }
    };
    Some(PlanePoint::new(
        &from.center.x + &ratio * (&to.center.x - &from.center.x),
        &from.center.y + ratio * (&to.center.y - &from.center.y),
    ))
}

/// Four mutually tangent circles and their six contact points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentSystem {
    pub circles: [NamedCircle; 4],
    /// Contact points in a fixed pair order over circle indices:
    /// `(3,2), (0,2), (0,1), (3,1), (3,0), (1,2)` — the first four lie on
    /// the line `x + y = r1`, the last two are the slant contacts swapped
    /// by the mirror map.
    pub contacts: [PlanePoint; 6],
}

const CONTACT_PAIRS: [(usize, usize); 6] = [(3, 2), (0, 2), (0, 1), (3, 1), (3, 0), (1, 2)];

fn system_contacts(circles: &[NamedCircle; 4]) -> [PlanePoint; 6] {
    CONTACT_PAIRS.map(|(i, j)| {
        contact_point(&circles[i], &circles[j])
            .expect("corner-system circles are mutually tangent by construction")
    })
}

fn radii(t: &PythTriple) -> (RadiusQuadruple, Rational, Rational) {
    let quad = t.radius_quadruple();
    (
        quad,
        Rational::from(t.a().clone()),
        Rational::from(t.b().clone()),
    )
}

/// The corner system: circles of radius `r1..r4` centered at the origin,
/// `(a,0)`, `(0,b)` and `(a,b)`; the largest contains the other three.
pub fn corner_system(t: &PythTriple) -> TangentSystem {
    let (quad, a, b) = radii(t);
    let [r1, r2, r3, r4] = quad.entries().clone();
    let circles = [
        NamedCircle::new("right-angle", rat_int(0), rat_int(0), r1),
        NamedCircle::new("x-leg", a.clone(), rat_int(0), r2),
        NamedCircle::new("y-leg", rat_int(0), b.clone(), r3),
        NamedCircle::new("outer", a, b, r4),
    ];
    let contacts = system_contacts(&circles);
    TangentSystem { circles, contacts }
}

/// The mirror map `ρ(x,y) = (r1-y, r1-x)`: reflection across the line
/// `x + y = r1` through the four collinear contact points.
pub fn mirror_point(t: &PythTriple, p: &PlanePoint) -> PlanePoint {
    let r1 = Rational::from(t.radii()[0].clone());
    PlanePoint::new(&r1 - &p.y, r1 - &p.x)
}

/// The mirrored system: every corner circle reflected by `ρ`, with its
/// own six contact points recomputed from scratch.
pub fn mirrored_system(t: &PythTriple) -> TangentSystem {
    let alpha = corner_system(t);
    let circles = alpha.circles.clone().map(|c| NamedCircle {
        label: c.label,
        center: mirror_point(t, &c.center),
        radius: c.radius,
    });
    let contacts = system_contacts(&circles);
    TangentSystem { circles, contacts }
}

/// Outcome of the four dual-system checks, all exact:
///
/// 1. the four leg contacts are collinear on `x + y = r1`;
/// 2. the mirror map swaps the two slant contacts;
/// 3. the mirrored system's six contact points coincide, as a set, with
///    the original six;
/// 4. mirrored circle `i` is orthogonal to original circle `j` exactly
///    when `(i, j)` are not opposite (`j ≠ 3-i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualReport {
    pub leg_contacts_collinear: bool,
    pub mirror_swaps_slant_contacts: bool,
    pub shared_contact_set: bool,
    pub orthogonality_pattern: bool,
}

impl DualReport {
    pub fn all_pass(&self) -> bool {
        self.leg_contacts_collinear
            && self.mirror_swaps_slant_contacts
            && self.shared_contact_set
            && self.orthogonality_pattern
    }

    /// The first failing claim, as a short description.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.leg_contacts_collinear {
            Some("leg contacts are not collinear on x+y=r1")
        } else if !self.mirror_swaps_slant_contacts {
            Some("mirror map does not swap the slant contacts")
        } else if !self.shared_contact_set {
            Some("mirrored system does not share the six contact points")
        } else if !self.orthogonality_pattern {
            Some("orthogonality pattern (all pairs except opposites) broken")
        } else {
            None
        }
    }
}

/// Runs all four dual-system checks on exact coordinates.
pub fn verify_duals(t: &PythTriple) -> DualReport {
    let alpha = corner_system(t);
    let beta = mirrored_system(t);
    let r1 = Rational::from(t.radii()[0].clone());

    let leg_contacts_collinear = alpha.contacts[..4]
        .iter()
        .all(|p| &p.x + &p.y == r1);

    let mirror_swaps_slant_contacts = mirror_point(t, &alpha.contacts[4]) == alpha.contacts[5]
        && mirror_point(t, &alpha.contacts[5]) == alpha.contacts[4];

    let mut left = alpha.contacts.clone();
    let mut right = beta.contacts.clone();
    left.sort();
    right.sort();
    let shared_contact_set = left == right;

    let mut orthogonality_pattern = true;
    for i in 0..4 {
        for j in 0..4 {
            let expected = j != 3 - i;
            if orthogonal(&beta.circles[i], &alpha.circles[j]) != expected {
                orthogonality_pattern = false;
            }
        }
    }

    DualReport {
        leg_contacts_collinear,
        mirror_swaps_slant_contacts,
        shared_contact_set,
        orthogonality_pattern,
    }
}

/// The equi-circles: incircle of radius `r1` at `(r1,r1)` and the three
/// excircles of radii `r2, r3, r4` at `(r2,-r2)`, `(-r3,r3)`, `(r4,r4)`.
/// Each is tangent to all three side lines of the triangle.
pub fn equi_system(t: &PythTriple) -> [NamedCircle; 4] {
    let [r1, r2, r3, r4] = t.radii().map(|r| Rational::from(r));
    [
        NamedCircle::new("incircle", r1.clone(), r1.clone(), r1),
        NamedCircle::new("ex-below", r2.clone(), -r2.clone(), r2),
        NamedCircle::new("ex-left", -r3.clone(), r3.clone(), r3),
        NamedCircle::new("ex-far", r4.clone(), r4.clone(), r4),
    ]
}

/// Exact check that a circle is tangent to all three side lines of the
/// triangle with vertices `(0,0)`, `(a,0)`, `(0,b)`: the axes and the
/// hypotenuse line `bx + ay = ab`. Squared-distance comparisons keep the
/// test free of square roots (`c² = a² + b²` clears the line's norm).
pub fn tangent_to_side_lines(t: &PythTriple, circle: &NamedCircle) -> bool {
    let (a, b, c) = (
        Rational::from(t.a().clone()),
        Rational::from(t.b().clone()),
        Rational::from(t.c().clone()),
    );
    let r_sq = &circle.radius * &circle.radius;
    let on_x_axis = &circle.center.y * &circle.center.y == r_sq;
    let on_y_axis = &circle.center.x * &circle.center.x == r_sq;
    let lhs = &b * &circle.center.x + &a * &circle.center.y - &a * &b;
    let on_hyp = &lhs * &lhs == r_sq * &c * &c;
    on_x_axis && on_y_axis && on_hyp
}

/// The compositions of the mirror `ρ` with the
/// horizontal/vertical frame reflections `τ(x,y)=(a-x,y)` and
/// `σ(x,y)=(x,b-y)` that carry the corner circles onto the equi-circles:
/// `[ρK1, τρK2, σρK3, στρK4]`.
pub fn symmetry_images(t: &PythTriple) -> [NamedCircle; 4] {
    let (_, a, b) = radii(t);
    let alpha = corner_system(t);
    let tau = |p: PlanePoint| PlanePoint::new(&a - &p.x, p.y);
    let sigma = |p: PlanePoint| PlanePoint::new(p.x, &b - &p.y);
    let rho = |p: &PlanePoint| mirror_point(t, p);
    let image = |i: usize, center: PlanePoint, label: &'static str| NamedCircle {
        label,
        center,
        radius: alpha.circles[i].radius.clone(),
    };
    [
        image(0, rho(&alpha.circles[0].center), "incircle"),
        image(1, tau(rho(&alpha.circles[1].center)), "ex-below"),
        image(2, sigma(rho(&alpha.circles[2].center)), "ex-left"),
        image(3, sigma(tau(rho(&alpha.circles[3].center))), "ex-far"),
    ]
}

/// A tangency between the nine-point circle and another circle, recorded
/// in quarter-scale integer form: the center difference times four gives
/// the `legs`, the radius sum (external) or difference (internal) times
/// four gives the `hypotenuse`, and tangency itself is the statement that
/// these satisfy the Pythagorean relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarterCertificate {
    pub label: &'static str,
    pub legs: [BigInt; 2],
    pub hypotenuse: BigInt,
    pub internal: bool,
}

impl QuarterCertificate {
    /// The tangency equation in integer form.
    pub fn holds(&self) -> bool {
        let [lx, ly] = &self.legs;
        lx * lx + ly * ly == &self.hypotenuse * &self.hypotenuse
    }
}

/// The nine-point circle read as a family tree: its tangencies with the
/// three excircles are quarter-scale copies of the triple's three
/// children, the incircle tangency a quarter-scale copy of its parent
/// (degenerate for the root), and the circumcircle tangency a
/// quarter-scale copy of the triple itself.
#[derive(Debug, Clone)]
pub struct NinePointFamily {
    pub nine_point: NamedCircle,
    pub circumcircle: NamedCircle,
    pub equi: [NamedCircle; 4],
    /// Certificates in order: incircle, ex-below, ex-left, ex-far,
    /// circumcircle.
    pub certificates: [QuarterCertificate; 5],
    /// Children in tree order `[left, middle, right]`, read from the
    /// ex-left, ex-far and ex-below tangencies.
    pub children: [PythTriple; 3],
    /// The incircle read-off `[|4r1-a|, |4r1-b|, |3c-2a-2b|]`, sorted;
    /// `[0,1,1]` exactly for the root triple.
    pub parent_raw: [BigInt; 3],
    /// The parent triple, when the read-off is non-degenerate.
    pub parent: Option<PythTriple>,
    /// Foot of the altitude from the right angle onto the hypotenuse:
    /// `(ab²/c², a²b/c²)`, a point of the nine-point circle.
    pub altitude_foot: PlanePoint,
}

/// Builds the nine-point circle `(a/4, b/4)` of radius `c/4`, certifies
/// its five tangencies, and reads the tree neighbours out of them.
pub fn nine_point_family(t: &PythTriple) -> NinePointFamily {
    let (a, b, c) = (t.a().clone(), t.b().clone(), t.c().clone());
    let quarter = rat(1, 4);
    let nine_point = NamedCircle::new(
        "nine-point",
        &quarter * Rational::from(a.clone()),
        &quarter * Rational::from(b.clone()),
        &quarter * Rational::from(c.clone()),
    );
    let circumcircle = NamedCircle::new(
        "circumcircle",
        rat(1, 2) * Rational::from(a.clone()),
        rat(1, 2) * Rational::from(b.clone()),
        rat(1, 2) * Rational::from(c.clone()),
    );
    let equi = equi_system(t);

    let four = rat_int(4);
    let certify = |other: &NamedCircle, internal: bool| -> QuarterCertificate {
        let dx = (&four * (&other.center.x - &nine_point.center.x)).to_integer();
        let dy = (&four * (&other.center.y - &nine_point.center.y)).to_integer();
        let combined = if internal {
            &other.radius - &nine_point.radius
        } else {
            &other.radius + &nine_point.radius
        };
        let cert = QuarterCertificate {
            label: other.label,
            legs: [dx.abs(), dy.abs()],
            hypotenuse: (four.clone() * combined).to_integer().abs(),
            internal,
        };
        assert!(
            cert.holds(),
            "nine-point tangency certificate failed for {}",
            other.label
        );
        cert
    };

    let certificates = [
        certify(&equi[0], true),
        certify(&equi[1], false),
        certify(&equi[2], false),
        certify(&equi[3], false),
        certify(&circumcircle, true),
    ];

    let triple_of = |cert: &QuarterCertificate| -> PythTriple {
        PythTriple::new(
            cert.legs[0].clone(),
            cert.legs[1].clone(),
            cert.hypotenuse.clone(),
        )
        .expect("certificate legs form a right triple")
    };
    let children = [
        triple_of(&certificates[2]),
        triple_of(&certificates[3]),
        triple_of(&certificates[1]),
    ];

    let mut parent_raw = [
        certificates[0].legs[0].clone(),
        certificates[0].legs[1].clone(),
        certificates[0].hypotenuse.clone(),
    ];
    let parent = if parent_raw[0].is_positive() && parent_raw[1].is_positive() {
        Some(triple_of(&certificates[0]))
    } else {
        None
    };
    parent_raw.sort();

    let c_sq = Rational::from(&c * &c);
    let altitude_foot = PlanePoint::new(
        Rational::from(&a * &b * &b) / &c_sq,
        Rational::from(&a * &a * &b) / c_sq,
    );

    NinePointFamily {
        nine_point,
        circumcircle,
        equi,
        certificates,
        children,
        parent_raw,
        parent,
        altitude_foot,
    }
}

/// Exact membership of the altitude foot on the nine-point circle.
pub fn altitude_foot_on_nine_point(t: &PythTriple) -> bool {
    let family = nine_point_family(t);
    family.altitude_foot.dist_sq(&family.nine_point.center)
        == &family.nine_point.radius * &family.nine_point.radius
}

/// The sextic identity `a²(3b²-a²)² + b²(3a²-b²)² = c⁶` — the membership
/// of the altitude foot, cleared of denominators; equivalently, that
/// `(a+bi)³` has modulus `c³`.
pub fn cube_identity(t: &PythTriple) -> bool {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let a2 = a * a;
    let b2 = b * b;
    let c2 = c * c;
    let u = int(3) * &b2 - &a2;
    let v = int(3) * &a2 - &b2;
    &a2 * &u * &u + &b2 * &v * &v == &c2 * &c2 * &c2
}

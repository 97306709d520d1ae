//! Integral Apollonian packings with exact circle positions.
//!
//! A circle is stored as `(k, kx, ky)`: its oriented curvature and the
//! curvature–center products, all rational. In these coordinates the
//! Descartes reflection acts linearly — each component maps to twice the
//! sum of the other three circles' values minus its own — so positions
//! come along for free with curvatures. Generation expands a seed
//! quadruple breadth-first, keeps curvatures up to a bound, deduplicates
//! circles exactly, and proves every new circle tangent to its three
//! neighbours with exact arithmetic (aborting on any violation rather
//! than trusting the linear rule). The result can be queried for
//! rectangles of centers, rendered to SVG, or dumped as JSON lines.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::descartes::{reduce_to_root, verify_dce, DescartesError, RootQuadruple};
use crate::pythagoras::PythTriple;
use crate::rational::{rat_int, sqrt_exact, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PackingError {
    #[error("seed circles {0} and {1} are not tangent")]
    InconsistentSeed(usize, usize),
    #[error(transparent)]
    Descartes(#[from] DescartesError),
    #[error("quadruple admits no layout with rational coordinates")]
    IrrationalLayout,
    #[error("circle positions contradict the required tangencies")]
    LayoutContradiction,
    #[error("packing has no enclosing circle to frame the drawing")]
    NoEnclosing,
}

/// One circle of a packing: oriented curvature `k` and the products
/// `kx = k·x`, `ky = k·y` of curvature with the center coordinates.
/// `depth` is the breadth-first generation at which the circle appeared
/// (0 for seed circles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedCircle {
    pub k: Rational,
    pub kx: Rational,
    pub ky: Rational,
    pub depth: u32,
}

impl PackedCircle {
    pub fn new(k: Rational, kx: Rational, ky: Rational, depth: u32) -> Self {
        PackedCircle { k, kx, ky, depth }
    }

    /// Center `(kx/k, ky/k)`.
    pub fn center(&self) -> (Rational, Rational) {
        (&self.kx / &self.k, &self.ky / &self.k)
    }

    /// Signed radius `1/k` (negative for an enclosing circle).
    pub fn signed_radius(&self) -> Rational {
        self.k.recip()
    }

    fn key(&self) -> (Rational, Rational, Rational) {
        (self.k.clone(), self.kx.clone(), self.ky.clone())
    }
}

/// Exact tangency test in curvature–center coordinates. Clearing
/// denominators from `|cᵢ - cⱼ|² = (1/kᵢ ± 1/kⱼ)²` gives
///
/// ```text
/// (kⱼ·kxᵢ - kᵢ·kxⱼ)² + (kⱼ·kyᵢ - kᵢ·kyⱼ)² = (kᵢ + kⱼ)²
/// ```
///
/// which covers external and internal tangency uniformly because the
/// curvatures carry orientation signs.
pub fn are_tangent(a: &PackedCircle, b: &PackedCircle) -> bool {
    let dx = &b.k * &a.kx - &a.k * &b.kx;
    let dy = &b.k * &a.ky - &a.k * &b.ky;
    let s = &a.k + &b.k;
    &dx * &dx + &dy * &dy == &s * &s
}

/// The four tangent circles sitting on a right triple's rectangle, scaled
/// by the triangle's area so curvatures are the integers
/// `[r4, r3, r2, -r1]`. For `[3,4,5]` the circles are centered at
/// `(0,0)`, `(1/2,0)`, `(0,2/3)`, `(1/2,2/3)` with curvatures
/// `[6,3,2,-1]`; the `-r1` circle encloses the other three.
pub fn seed_packing(t: &PythTriple) -> [PackedCircle; 4] {
    let [r1, r2, r3, r4] = t.radii();
    let area = Rational::from(&r2 * &r3);
    let (a, b) = (Rational::from(t.a().clone()), Rational::from(t.b().clone()));
    let (x, y) = (a / &area, b / &area);
    [
        PackedCircle::new(Rational::from(r4), rat_int(0), rat_int(0), 0),
        PackedCircle::new(Rational::from(r3.clone()), Rational::from(r3) * &x, rat_int(0), 0),
        PackedCircle::new(Rational::from(r2.clone()), rat_int(0), Rational::from(r2) * &y, 0),
        PackedCircle::new(
            Rational::from(-&r1),
            Rational::from(-&r1) * &x,
            Rational::from(-r1) * &y,
            0,
        ),
    ]
}

/// Places any integer Descartes quadruple with exactly one negative entry
/// in a canonical frame: the enclosing circle centered at the origin, the
/// smallest positive curvature tangent to it on the negative x-axis, the
/// next circle in the upper half plane, and the last circle's side fixed
/// by its tangency to the third. Errors if a center coordinate would be
/// irrational (never observed for integral quadruples, but not proven
/// impossible here).
pub fn layout_root(quad: &[BigInt; 4]) -> Result<[PackedCircle; 4], PackingError> {
    if !crate::descartes::verify_dce_int(quad) {
        return Err(DescartesError::NotDescartes.into());
    }
    let negs = quad.iter().filter(|x| x.is_negative()).count();
    if negs != 1 {
        return Err(DescartesError::WrongSignature(negs).into());
    }
    let mut q = quad.clone();
    q.sort();
    let enclosing_r = -Rational::from(q[0].clone()).recip();

    let circle = |k: &BigInt, x: Rational, y: Rational| {
        let kr = Rational::from(k.clone());
        PackedCircle::new(kr.clone(), &kr * x, kr * y, 0)
    };

    let a = circle(&q[0], rat_int(0), rat_int(0));
    let xb = Rational::from(q[1].clone()).recip() - &enclosing_r;
    let b = circle(&q[1], xb.clone(), rat_int(0));

    // Intersect the two tangency distance constraints (to the enclosing
    // circle and to b) for a circle of curvature k.
    let place = |k: &BigInt| -> Result<(Rational, Rational), PackingError> {
        let r = Rational::from(k.clone()).recip();
        let da = &enclosing_r - &r; // distance to the enclosing center
        let db = Rational::from(q[1].clone()).recip() + &r; // distance to b's center
        let x = (&xb * &xb + &da * &da - &db * &db) / (rat_int(2) * &xb);
        let y_sq = &da * &da - &x * &x;
        let y = sqrt_exact(&y_sq).ok_or(PackingError::IrrationalLayout)?;
        Ok((x, y))
    };

    let (xc, yc) = place(&q[2])?;
    let c = circle(&q[2], xc, yc);
    let (xd, yd) = place(&q[3])?;
    let d_up = circle(&q[3], xd.clone(), yd.clone());
    let d = if are_tangent(&d_up, &c) {
        d_up
    } else {
        let d_down = circle(&q[3], xd, -yd);
        if !are_tangent(&d_down, &c) {
            return Err(PackingError::LayoutContradiction);
        }
        d_down
    };
    Ok([a, b, c, d])
}

/// A generated packing: deduplicated circles, every tangent quadruple the
/// expansion visited (as indices into `circles`), the curvature bound,
/// and the reduced root quadruple identifying the packing.
#[derive(Debug, Clone)]
pub struct Packing {
    pub root: RootQuadruple,
    pub circles: Vec<PackedCircle>,
    pub quadruples: Vec<[usize; 4]>,
    pub bound: BigInt,
}

impl Packing {
    /// The unique circle with negative curvature, if present.
    pub fn enclosing(&self) -> Option<&PackedCircle> {
        self.circles.iter().find(|c| c.k.is_negative())
    }

    /// Indices sorted by `(k, kx, ky)`: the canonical order for output.
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.circles.len()).collect();
        idx.sort_by(|&i, &j| self.circles[i].key().cmp(&self.circles[j].key()));
        idx
    }
}

/// Integer image of the seed curvatures after clearing denominators:
/// the root of this quadruple identifies the packing.
fn integral_curvatures(seed: &[PackedCircle; 4]) -> [BigInt; 4] {
    let lcm = seed
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.k.denom()));
    let scaled: Vec<BigInt> = seed
        .iter()
        .map(|c| (&c.k * Rational::from(lcm.clone())).to_integer())
        .collect();
    [
        scaled[0].clone(),
        scaled[1].clone(),
        scaled[2].clone(),
        scaled[3].clone(),
    ]
}

/// Breadth-first expansion of a mutually tangent seed quadruple. Each
/// known quadruple is reflected at each member; candidates with curvature
/// exceeding `bound` are dropped, the rest are deduplicated on the exact
/// `(k, kx, ky)` triple. Every newly created circle is proven tangent to
/// its three neighbours exactly; a violation aborts the process, so a
/// returned packing is a verified one.
pub fn generate(seed: &[PackedCircle; 4], bound: &BigInt) -> Result<Packing, PackingError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if !are_tangent(&seed[i], &seed[j]) {
                return Err(PackingError::InconsistentSeed(i, j));
            }
        }
    }
    let curvatures: [Rational; 4] = [
        seed[0].k.clone(),
        seed[1].k.clone(),
        seed[2].k.clone(),
        seed[3].k.clone(),
    ];
    if !verify_dce(&curvatures) {
        return Err(DescartesError::NotDescartes.into());
    }
    let root = reduce_to_root(&integral_curvatures(seed))?;

    let bound_r = Rational::from(bound.clone());
    let mut circles: Vec<PackedCircle> = seed
        .iter()
        .map(|c| PackedCircle { depth: 0, ..c.clone() })
        .collect();
    let mut index: HashMap<(Rational, Rational, Rational), usize> = circles
        .iter()
        .enumerate()
        .map(|(i, c)| (c.key(), i))
        .collect();
    let mut visited: HashSet<[usize; 4]> = HashSet::new();
    let mut quadruples: Vec<[usize; 4]> = Vec::new();
    let mut queue: VecDeque<([usize; 4], u32)> = VecDeque::new();

    let start = [0usize, 1, 2, 3];
    visited.insert(start);
    quadruples.push(start);
    queue.push_back((start, 0));

    while let Some((quad, gen)) = queue.pop_front() {
        for slot in 0..4 {
            let kept: Vec<usize> = (0..4).filter(|&s| s != slot).map(|s| quad[s]).collect();
            let two = rat_int(2);
            let sum = |f: fn(&PackedCircle) -> &Rational| -> Rational {
                kept.iter().map(|&i| f(&circles[i])).sum()
            };
            let old = &circles[quad[slot]];
            let cand = PackedCircle::new(
                &two * sum(|c| &c.k) - &old.k,
                &two * sum(|c| &c.kx) - &old.kx,
                &two * sum(|c| &c.ky) - &old.ky,
                gen + 1,
            );
            if cand.k > bound_r {
                continue;
            }
            let idx = match index.get(&cand.key()) {
                Some(&i) => i,
                None => {
                    for &i in &kept {
                        assert!(
                            are_tangent(&cand, &circles[i]),
                            "reflected circle lost tangency: curvature {} against {}",
                            cand.k,
                            circles[i].k
                        );
                    }
                    let i = circles.len();
                    index.insert(cand.key(), i);
                    circles.push(cand);
                    i
                }
            };
            let mut next = [kept[0], kept[1], kept[2], idx];
            next.sort_unstable();
            if visited.insert(next) {
                quadruples.push(next);
                queue.push_back((next, gen + 1));
            }
        }
    }

    Ok(Packing {
        root,
        circles,
        quadruples,
        bound: bound.clone(),
    })
}

/// A tangent quadruple whose four centers form an exact rectangle. Such
/// quadruples satisfy `d = -k0 + k1 + k2` and `k1·k2 = -k0·k3` (sorted
/// curvatures), and their side sums reproduce a right triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterRectangle {
    /// Circle indices sorted by curvature: enclosing-most first.
    pub indices: [usize; 4],
    pub curvatures: [Rational; 4],
    /// `[k1-k0, k2-k0, k1+k2]`: legs and hypotenuse of the induced triple.
    pub triple_sides: [Rational; 3],
    /// The induced triple scaled to primitive integer form.
    pub triple: PythTriple,
}

/// Scans every visited quadruple for the rectangle-of-centers pattern.
/// Both parts are exact: the curvature relations and the geometric test
/// that the two diagonals share a midpoint and have equal length.
pub fn detect_rectangles(p: &Packing) -> Vec<CenterRectangle> {
    let mut found = Vec::new();
    for quad in &p.quadruples {
        let mut idx = *quad;
        idx.sort_by(|&i, &j| p.circles[i].key().cmp(&p.circles[j].key()));
        let [c0, c1, c2, c3] = idx.map(|i| &p.circles[i]);
        if c3.k != &c1.k + &c2.k - &c0.k || &c1.k * &c2.k != -(&c0.k * &c3.k) {
            continue;
        }
        let centers = [c0.center(), c1.center(), c2.center(), c3.center()];
        let mid_ok = centers[0].0.clone() + &centers[3].0 == centers[1].0.clone() + &centers[2].0
            && centers[0].1.clone() + &centers[3].1 == centers[1].1.clone() + &centers[2].1;
        if !mid_ok {
            continue;
        }
        let diag_sq = |p: &(Rational, Rational), q: &(Rational, Rational)| {
            let dx = &p.0 - &q.0;
            let dy = &p.1 - &q.1;
            &dx * &dx + &dy * &dy
        };
        if diag_sq(&centers[0], &centers[3]) != diag_sq(&centers[1], &centers[2]) {
            continue;
        }
        let sides = [&c1.k - &c0.k, &c2.k - &c0.k, &c1.k + &c2.k];
        let Some(triple) = primitive_from_rational_sides(&sides) else {
            continue;
        };
        found.push(CenterRectangle {
            indices: idx,
            curvatures: [c0.k.clone(), c1.k.clone(), c2.k.clone(), c3.k.clone()],
            triple_sides: sides,
            triple,
        });
    }
    found.sort_by(|a, b| a.curvatures.cmp(&b.curvatures));
    found
}

fn primitive_from_rational_sides(sides: &[Rational; 3]) -> Option<PythTriple> {
    let lcm = sides
        .iter()
        .fold(BigInt::one(), |acc, s| acc.lcm(s.denom()));
    let ints: Vec<BigInt> = sides
        .iter()
        .map(|s| (s * Rational::from(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::ZERO, |acc, v| acc.gcd(v));
    if g.is_zero() {
        return None;
    }
    PythTriple::new(&ints[0] / &g, &ints[1] / &g, &ints[2] / &g).ok()
}

/// Rendering knobs. `enclosing_radius_px` is the pixel radius the
/// enclosing circle maps to; circles whose radius is at least
/// `label_threshold` times the enclosing radius get a curvature label.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub enclosing_radius_px: f64,
    pub labels: bool,
    pub label_threshold: Rational,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            enclosing_radius_px: 500.0,
            labels: true,
            label_threshold: crate::rational::rat(1, 10),
        }
    }
}

const DEPTH_FILLS: [&str; 6] = [
    "#c9d8f2", "#bfe3c8", "#f2ddad", "#e9c2cf", "#d3c8ee", "#b5dde4",
];

/// Renders the packing as an SVG document. Circles are emitted in the
/// canonical `(k, kx, ky)` order so identical packings give identical
/// bytes; the enclosing circle is stroked but not filled; smaller circles
/// are filled by depth and drawn on top.
pub fn render_svg(p: &Packing, opts: &RenderOptions) -> Result<String, PackingError> {
    let enclosing = p.enclosing().ok_or(PackingError::NoEnclosing)?;
    let big_r = -enclosing.signed_radius();
    let (ecx, ecy) = enclosing.center();

    let margin = 6.0;
    let px = opts.enclosing_radius_px;
    let size = 2.0 * (px + margin);
    let scale = px / big_r.to_f64().unwrap_or(1.0);
    let to_px = |x: &Rational, y: &Rational| {
        let fx = (x - &ecx).to_f64().unwrap_or(0.0) * scale + size / 2.0;
        let fy = size / 2.0 - (y - &ecy).to_f64().unwrap_or(0.0) * scale;
        (fx, fy)
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );

    let min_labeled_radius = &opts.label_threshold * &big_r;
    let mut labels = String::new();
    for &i in &p.sorted_indices() {
        let c = &p.circles[i];
        let (x, y) = c.center();
        let (cx, cy) = to_px(&x, &y);
        let radius = c.signed_radius().abs();
        let r_px = radius.to_f64().unwrap_or(0.0) * scale;
        if c.k.is_negative() {
            let _ = writeln!(
                svg,
                r##"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{r_px:.3}" fill="none" stroke="#222222" stroke-width="2"/>"##
            );
        } else {
            let fill = DEPTH_FILLS[c.depth as usize % DEPTH_FILLS.len()];
            let _ = writeln!(
                svg,
                r##"  <circle cx="{cx:.3}" cy="{cy:.3}" r="{r_px:.3}" fill="{fill}" stroke="#222222" stroke-width="1"/>"##
            );
        }
        if opts.labels && radius >= min_labeled_radius {
            let font = (r_px * 0.62).max(4.0);
            let _ = writeln!(
                labels,
                r##"  <text x="{cx:.3}" y="{cy:.3}" font-size="{font:.1}" font-family="sans-serif" fill="#222222" text-anchor="middle" dominant-baseline="central">{}</text>"##,
                c.k
            );
        }
    }
    svg.push_str(&labels);
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// One JSON object per circle, in canonical order: exact curvature
/// (integer, or a `"p/q"` string when fractional), exact center
/// coordinates as fraction strings, and the discovery depth.
pub fn circles_jsonl(p: &Packing) -> String {
    let mut out = String::new();
    for &i in &p.sorted_indices() {
        let c = &p.circles[i];
        let (x, y) = c.center();
        let curvature = if c.k.is_integer() {
            let n = c.k.to_integer();
            n.to_i64()
                .map(serde_json::Value::from)
                .unwrap_or_else(|| serde_json::Value::from(n.to_string()))
        } else {
            serde_json::Value::from(c.k.to_string())
        };
        let line = serde_json::json!({
            "curvature": curvature,
            "x": x.to_string(),
            "y": y.to_string(),
            "depth": c.depth,
        });
        out.push_str(&line.to_string());
        out.push('\n');
    }
    out
}

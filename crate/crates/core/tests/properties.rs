//! Property-based invariants over randomly generated inputs.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use pytri::descartes::{
    bilateral_family, pt_quadruple, recognize_bilateral, reduce_to_root, reflect_int,
    verify_dce_int,
};
use pytri::pythagoras::p_sequence;
use pytri::rational::{int, rat, sqrt_exact, square_free_split};
use pytri::tree::{
    demote, demote_triple, path_of, promote, promote_triple, triple_at, Branch, Demotion,
    TreePath,
};
use pytri::triangle::{equi_radii, radii_from_sides, sides_from_radii, RadiusQuadruple};
use pytri::Rational;

fn branch_strategy() -> impl Strategy<Value = Branch> {
    prop_oneof![
        Just(Branch::Left),
        Just(Branch::Middle),
        Just(Branch::Right)
    ]
}

fn path_strategy(max_len: usize) -> impl Strategy<Value = TreePath> {
    proptest::collection::vec(branch_strategy(), 0..=max_len).prop_map(TreePath)
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=1_000_000, 1i64..=1_000).prop_map(|(n, d)| rat(n, d))
}

fn radius_quadruple() -> impl Strategy<Value = RadiusQuadruple> {
    (positive_rational(), positive_rational(), positive_rational())
        .prop_map(|(r1, r2, r3)| RadiusQuadruple::from_inner(r1, r2, r3).unwrap())
}

proptest! {
    /// The side and radius parameterizations of a triangle are mutually
    /// inverse bijections on the positive orthant.
    #[test]
    fn radii_sides_roundtrip(r in radius_quadruple()) {
        let tri = sides_from_radii(&r);
        let back = radii_from_sides(&tri);
        prop_assert_eq!(back.entries(), r.entries());
        // Strict triangle inequality holds by construction.
        let [a, b, c] = tri.sides();
        prop_assert!(&a + &b > c && &a + &c > b && &b + &c > a);
    }

    /// Walking down the tree along any branch word and asking for the path
    /// back recovers the same word; the triple reached is always primitive.
    #[test]
    fn tree_path_roundtrip(path in path_strategy(9)) {
        let t = triple_at(&path);
        prop_assert!(t.is_primitive());
        prop_assert_eq!(path_of(&t).unwrap(), path);
    }

    /// Demotion undoes promotion, on sequences and on triples.
    #[test]
    fn demote_inverts_promote(path in path_strategy(7), branch in branch_strategy()) {
        let t = triple_at(&path);
        let seq = p_sequence(&t).unwrap();
        let child_seq = promote(&seq, branch);
        prop_assert_eq!(demote(&child_seq), Demotion::Parent(seq, branch));

        let child = promote_triple(&t, branch).unwrap();
        prop_assert_eq!(demote_triple(&child).unwrap(), t);
    }

    /// The half-perimeter-square identity is equivalent to the Pythagorean
    /// equation on arbitrary positive integer triples.
    #[test]
    fn dickson_iff_pythagorean(a in 1i64..2000, b in 1i64..2000, c in 1i64..4000) {
        let (a, b, c) = (int(a), int(b), int(c));
        let pyth = &a * &a + &b * &b == &c * &c;
        prop_assert_eq!(pytri::pythagoras::dickson_check(&a, &b, &c), pyth);
    }

    /// Any reflection walk from a triple's curvature quadruple stays on the
    /// circle equation, and each single reflection is an involution.
    #[test]
    fn reflections_preserve_dce(
        path in path_strategy(6),
        walk in proptest::collection::vec(0usize..4, 0..=6),
    ) {
        let mut k = pt_quadruple(&triple_at(&path));
        prop_assert!(verify_dce_int(&k));
        for i in walk {
            k = reflect_int(&k, i).unwrap();
            prop_assert!(verify_dce_int(&k));
            let twice = reflect_int(&reflect_int(&k, i).unwrap(), i).unwrap();
            prop_assert_eq!(&twice, &k);
        }
    }

    /// Reducing a quadruple to its packing root is idempotent, and the root
    /// still satisfies the circle equation.
    #[test]
    fn reduce_to_root_idempotent(
        path in path_strategy(6),
        walk in proptest::collection::vec(0usize..4, 0..=5),
    ) {
        let mut k = pt_quadruple(&triple_at(&path));
        for i in walk {
            k = reflect_int(&k, i).unwrap();
        }
        let root = reduce_to_root(&k).unwrap();
        prop_assert!(verify_dce_int(root.entries()));
        let again = reduce_to_root(root.entries()).unwrap();
        prop_assert_eq!(&again, &root);
    }

    /// A bilaterally symmetric quadruple remembers its generator pair.
    #[test]
    fn bilateral_recognition_roundtrip(m in 1i64..=60, n in 1i64..=60) {
        let (m, n) = (int(m.min(n)), int(m.max(n)));
        prop_assume!(num_integer::gcd(m.clone(), n.clone()) == BigInt::one());
        let k = bilateral_family(&m, &n).unwrap();
        prop_assert!(verify_dce_int(&k));
        prop_assert_eq!(recognize_bilateral(&k), Some((m, n)));
    }

    /// For a right triple the equi-radii are the radius quadruple reversed.
    #[test]
    fn right_triple_equi_radii_reverse(path in path_strategy(7)) {
        let t = triple_at(&path);
        let radii = t.radii();
        let r = RadiusQuadruple::from_inner(
            Rational::from(radii[0].clone()),
            Rational::from(radii[1].clone()),
            Rational::from(radii[2].clone()),
        ).unwrap();
        let equi = equi_radii(&r);
        for (s, expected) in equi.iter().zip(radii.iter().rev()) {
            prop_assert_eq!(s.as_exact(), Some(&Rational::from(expected.clone())));
        }
    }

    /// Exact square roots and square-free splitting reconstruct their input.
    #[test]
    fn sqrt_and_square_free_split(x in 1i64..=1_000_000, d in 1i64..=1_000) {
        let q = rat(x, d);
        let sq = &q * &q;
        prop_assert_eq!(sqrt_exact(&sq), Some(q));

        let n = int(x) * int(x) * int(d);
        let (s, f) = square_free_split(&n);
        prop_assert_eq!(&s * &s * &f, n);
        // The residual factor carries no square divisor.
        for p in 2i64..=1000 {
            prop_assert!(!(&f % int(p * p)).is_zero());
        }
    }
}

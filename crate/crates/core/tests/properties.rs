use proptest::prelude::*;

use soliton_forge::geometry::{conjugate_ricci, Geometry, InnerProduct};
use soliton_forge::lie::{catalog_get, Family};
use soliton_forge::soliton::{soliton_solve, SolitonResult};
use soliton_forge::{q, signature_of, solve_linear, Matrix, Rational, SolutionSet};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, d)| q(p, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(rational(), rows * cols).prop_map(move |v| Matrix::from_vec(rows, cols, v).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_filter("singular", |m| !m.determinant().unwrap().is_zero())
}

fn symmetric_nondegenerate(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n)
        .prop_map(|m| m.add(&m.transpose()).unwrap())
        .prop_filter("degenerate", |m| !m.determinant().unwrap().is_zero())
}

fn catalog_family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!((&a - &b) + &b, a.clone());
        if let Some(inv) = a.recip() {
            prop_assert!((&a * inv).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn inverse_is_two_sided(m in invertible(4)) {
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(4));
        prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(4));
        prop_assert_eq!(m.determinant().unwrap() * inv.determinant().unwrap(), Rational::one());
    }

    #[test]
    fn solve_linear_is_correct(a in matrix(3, 5), x in matrix(5, 1), b in matrix(3, 1)) {
        // consistent by construction
        let rhs = a.mul(&x).unwrap();
        match solve_linear(&a, &rhs).unwrap() {
            SolutionSet::Inconsistent => prop_assert!(false, "consistent system reported inconsistent"),
            SolutionSet::Solutions { particular, nullspace } => {
                prop_assert_eq!(a.mul(&particular).unwrap(), rhs);
                prop_assert_eq!(nullspace.len(), 5 - a.rank());
                for v in &nullspace {
                    prop_assert!(a.mul(v).unwrap().is_zero());
                }
            }
        }
        // arbitrary right-hand side: consistency iff rank does not grow
        let consistent = a.hstack(&b).unwrap().rank() == a.rank();
        prop_assert_eq!(solve_linear(&a, &b).unwrap().is_consistent(), consistent);
    }

    #[test]
    fn signature_is_congruence_invariant(g in symmetric_nondegenerate(4), p in invertible(4)) {
        let moved = p.transpose().mul(&g).unwrap().mul(&p).unwrap();
        let s = signature_of(&g).unwrap();
        prop_assert_eq!(signature_of(&moved).unwrap(), s);
        prop_assert_eq!(s.positives + s.negatives, 4);
    }

    #[test]
    fn charpoly_is_similarity_invariant(m in matrix(4, 4), p in invertible(4)) {
        let moved = p.inverse().unwrap().mul(&m).unwrap().mul(&p).unwrap();
        let c = m.characteristic_polynomial().unwrap();
        prop_assert_eq!(moved.characteristic_polynomial().unwrap(), c.clone());
        prop_assert_eq!(&c[0], &m.determinant().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ricci_is_covariant(f in catalog_family(), g in symmetric_nondegenerate(4), a in invertible(4)) {
        let id = f.grid_ids().remove(0);
        let alg = catalog_get(&id).unwrap();
        let ip = InnerProduct::new(g).unwrap();
        let before = Geometry::compute(&alg, &ip).unwrap();
        let after = Geometry::compute(&alg.change_basis(&a).unwrap(), &ip.change_basis(&a).unwrap()).unwrap();
        prop_assert_eq!(
            after.ricci.ricci_op.clone(),
            conjugate_ricci(&before.ricci.ricci_op, &a).unwrap()
        );
        prop_assert_eq!(after.is_flat(), before.is_flat());
        prop_assert!(before.connection.torsion_violations(&alg).is_empty());
        prop_assert!(before.connection.metric_violations(&ip).is_empty());
    }

    #[test]
    fn soliton_eta_is_basis_invariant(f in catalog_family(), r in matrix(4, 4), a in invertible(4), pick in any::<bool>()) {
        let id = f.grid_ids().remove(0);
        let alg = catalog_get(&id).unwrap();
        // half the cases start from a genuine soliton η·I + D
        let r = if pick {
            let der = alg.derivation_basis();
            let mut d = Matrix::identity(4).scale(&r[(0, 0)]);
            for (k, b) in der.basis.iter().enumerate() {
                d = d.add(&b.scale(&r.entries()[k % 16])).unwrap();
            }
            d
        } else {
            r
        };
        let before = soliton_solve(&alg, &r).unwrap();
        let after = soliton_solve(&alg.change_basis(&a).unwrap(), &conjugate_ricci(&r, &a).unwrap()).unwrap();
        prop_assert_eq!(before.verdict_name(), after.verdict_name());
        prop_assert_eq!(before.eta(), after.eta());
        if pick {
            prop_assert!(before.is_soliton());
        }
        if let SolitonResult::Soliton { eta, d } = &before {
            prop_assert_eq!(Matrix::identity(4).scale(eta).add(d).unwrap(), r.clone());
            prop_assert!(alg.is_derivation(d));
        }
    }
}

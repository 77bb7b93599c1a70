//! Invariants checked on generated inputs.

mod common;

use gkz_core::lattice::{
    hnf, kernel_lattice, member_of_image_lattice, quotient_representatives, rational_lp_feasible,
    snf, LinearConstraint, Matrix,
};
use gkz_core::orbit::{check_upward_closed, cofsupp, exterior_degrees, fsupp, OrbitSet};
use gkz_core::param::{dual_parameter, facet_classes, HClass};
use gkz_core::presentation::{
    projection, restriction, toric_ideal_generators, GroebnerLimits, Mode,
};
use gkz_core::{json, oracle, Configuration, GaussRat, Int, IntMatrix, Parameter};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix_strategy(
    max_rows: usize,
    max_cols: usize,
    bound: i64,
) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
    })
}

fn big(rows: &[Vec<i64>]) -> IntMatrix {
    let cols = rows[0].len();
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect(),
        cols,
    )
    .unwrap()
}

fn small(rows: &[Vec<i64>]) -> Matrix<i64> {
    Matrix::from_rows(rows.to_vec(), rows[0].len()).unwrap()
}

fn is_unimodular(u: &IntMatrix) -> bool {
    let det = u.determinant();
    det == Int::one() || det == -Int::one()
}

/// Configurations with entries in `0..=3`, as a seed for the generator.
fn config_strategy() -> impl Strategy<Value = Configuration> {
    (1usize..=3, 1usize..=6)
        .prop_flat_map(|(d, n)| prop::collection::vec(prop::collection::vec(0i64..=3, n), d))
        .prop_filter_map("needs a pointed full-rank normal cone", |rows| {
            let c = Configuration::new(big(&rows)).ok()?;
            (c.is_pointed() && c.normality().is_ok_and(|cert| cert.normal)).then_some(c)
        })
}

fn beta_strategy(d: usize) -> impl Strategy<Value = Parameter> {
    prop::collection::vec(0..common::BETA_ENTRIES.len(), d).prop_map(|ix| {
        Parameter::parse(
            &ix.iter()
                .map(|&i| common::BETA_ENTRIES[i])
                .collect::<Vec<_>>(),
        )
        .unwrap()
    })
}

fn config_and_beta() -> impl Strategy<Value = (Configuration, Parameter)> {
    config_strategy().prop_flat_map(|c| {
        let d = c.dim();
        (Just(c), beta_strategy(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn hermite_form_reassembles(rows in matrix_strategy(4, 5, 6)) {
        let m = big(&rows);
        let form = hnf(&m);
        prop_assert!(is_unimodular(&form.u));
        prop_assert_eq!(&(&form.u * &m), &form.h);
        prop_assert_eq!(form.rank(), m.rank());
        for (i, &p) in form.pivots.iter().enumerate() {
            prop_assert!(form.h[(i, p)] > Int::zero());
            for k in 0..i {
                prop_assert!(form.h[(k, p)] >= Int::zero() && form.h[(k, p)] < form.h[(i, p)]);
            }
        }
    }

    #[test]
    fn smith_form_reassembles(rows in matrix_strategy(4, 5, 6)) {
        let m = big(&rows);
        let form = snf(&m);
        prop_assert!(is_unimodular(&form.u) && is_unimodular(&form.v));
        prop_assert_eq!(&(&(&form.u * &m) * &form.v), &form.s);
        let factors = form.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..form.s.rows() {
            for j in 0..form.s.cols() {
                prop_assert!(i == j || form.s[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn machine_and_big_integers_agree(rows in matrix_strategy(3, 4, 5)) {
        let wide = hnf(&big(&rows));
        let narrow = hnf(&small(&rows));
        let widened: Vec<Vec<Int>> = narrow.h.row_vecs().iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        prop_assert_eq!(wide.h.row_vecs(), widened);
        prop_assert_eq!(snf(&big(&rows)).rank(), snf(&small(&rows)).rank());
    }

    #[test]
    fn kernel_is_saturated(rows in matrix_strategy(3, 5, 4)) {
        let a = big(&rows);
        let k = kernel_lattice(&a);
        prop_assert_eq!(k.rank(), a.cols() - a.rank());
        for v in &k.vectors {
            prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        if k.rank() > 0 {
            // saturated iff every invariant factor of the basis matrix is 1
            prop_assert!(snf(&k.column_matrix()).invariant_factors().iter().all(|f| f.is_one() || *f == -Int::one()));
        }
    }

    #[test]
    fn membership_matches_the_oracles(rows in matrix_strategy(3, 4, 4), v in prop::collection::vec(-8i64..=8, 3)) {
        let m = big(&rows);
        let v: Vec<Int> = v[..m.rows()].iter().map(|&x| Int::from(x)).collect();
        let fast = member_of_image_lattice(&v, &m);
        if let Some(z) = &fast {
            prop_assert_eq!(&m.mul_vec(z), &v);
        }
        prop_assert_eq!(fast.is_some(), oracle::in_column_lattice(&v, &m));
        if oracle::column_lattice_box(&v, &m, 2).is_some() {
            prop_assert!(fast.is_some());
        }
    }

    #[test]
    fn quotient_representatives_are_distinct_and_complete(rows in matrix_strategy(3, 4, 4)) {
        let m = big(&rows);
        prop_assume!(m.rank() == m.rows());
        let reps = quotient_representatives(&m);
        let index: Int = snf(&m).invariant_factors().iter().map(|f| if *f < Int::zero() { -f.clone() } else { f.clone() }).product();
        prop_assert_eq!(Int::from(reps.len()), index);
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i + 1..] {
                let diff: Vec<Int> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                prop_assert!(member_of_image_lattice(&diff, &m).is_none());
            }
        }
    }

    #[test]
    fn lp_matches_the_planar_oracle(cs in prop::collection::vec((-3i64..=3, -3i64..=3, -4i64..=4, any::<bool>()), 1..6)) {
        let constraints: Vec<LinearConstraint<Int>> = cs
            .iter()
            .map(|&(a, b, e, ge)| {
                let coeffs = vec![Int::from(a), Int::from(b)];
                if ge { LinearConstraint::ge(coeffs, Int::from(e)) } else { LinearConstraint::le(coeffs, Int::from(e)) }
            })
            .collect();
        let fast = rational_lp_feasible(2, &constraints);
        if let Some(x) = &fast {
            prop_assert!(constraints.iter().all(|c| c.is_satisfied_by(x)));
        }
        prop_assert_eq!(fast.is_some(), oracle::lp_feasible_2d(&constraints).is_some());
    }

    #[test]
    fn supports_are_upward_closed_and_exchanged_by_duality((c, beta) in config_and_beta()) {
        let (f, cf) = (fsupp(&c, &beta).unwrap(), cofsupp(&c, &beta).unwrap());
        prop_assert!(check_upward_closed(&c, &f).is_ok());
        prop_assert!(check_upward_closed(&c, &cf).is_ok());
        prop_assert!(f.contains(&c.top_face().columns) || cf.contains(&c.top_face().columns));
        let dual = dual_parameter(&c, &beta).unwrap();
        prop_assert_eq!(fsupp(&c, &dual).unwrap(), cf);
        prop_assert_eq!(cofsupp(&c, &dual).unwrap(), f);
        let before = facet_classes(&c, &beta);
        let after = facet_classes(&c, &dual);
        for (b, a) in before.iter().zip(&after) {
            prop_assert_eq!(*a == HClass::NatInt, *b == HClass::NegInt);
        }
    }

    #[test]
    fn descriptor_multiplicities((c, beta) in config_and_beta()) {
        for face in c.faces() {
            let (d_af, _) = c.face_quantities(face);
            for desc in [projection(&c, face, &beta).unwrap(), restriction(&c, face, &beta, Mode::Default).unwrap()] {
                if !desc.zero {
                    prop_assert_eq!(desc.total_multiplicity(), 1u64 << d_af);
                    prop_assert!(desc.degrees.windows(2).all(|w| w[0].0 + 1 == w[1].0));
                }
            }
        }
    }

    #[test]
    fn exterior_degrees_sum_to_a_power_of_two(rank in 0usize..12, shift in -6i64..6) {
        let degrees = exterior_degrees(rank, shift);
        prop_assert_eq!(degrees.len(), rank + 1);
        prop_assert_eq!(degrees.iter().map(|(_, m)| m).sum::<u64>(), 1u64 << rank);
        prop_assert_eq!(degrees.last().unwrap().0, -shift);
    }

    #[test]
    fn toric_ideal_contains_small_kernel_binomials(rows in prop::collection::vec(prop::collection::vec(0i64..=2, 4), 2)) {
        let a = big(&rows);
        prop_assume!(a.rank() == 2);
        let gens = toric_ideal_generators(&a, &GroebnerLimits::default()).unwrap();
        for g in &gens {
            prop_assert!(a.mul_vec(&g.difference()).iter().all(Zero::is_zero));
        }
        let small = oracle::kernel_binomials(&a, 2);
        prop_assert!(gkz_core::presentation::ideal_contains(&gens, &small, &GroebnerLimits::default()).unwrap());
    }

    #[test]
    fn gaussian_json_round_trip(re in -50i64..50, rd in 1i64..20, im in -50i64..50, id in 1i64..20) {
        let g = GaussRat::new(gkz_core::Rat::new(Int::from(re), Int::from(rd)), gkz_core::Rat::new(Int::from(im), Int::from(id)));
        prop_assert_eq!(json::parse_gauss(&json::gauss(&g)).unwrap(), g.clone());
        let p = Parameter::new(vec![g.clone(), g]);
        prop_assert_eq!(p.to_string().trim_matches(|c| c == '(' || c == ')').parse::<Parameter>().unwrap(), p);
    }
}

#[test]
fn open_sets_from_supports() {
    let c = Configuration::from_i64_rows(&[&[1, 1, 1, 1], &[0, 1, 2, 3]]).unwrap();
    assert!(check_upward_closed(&c, &OrbitSet::all(&c)).is_ok());
}

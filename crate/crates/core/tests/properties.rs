use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use twisted_coord::cohomology::{h, right_vanishing_scan};
use twisted_coord::dynamics::{
    classify_ampleness, delta_sequence, non_left_ample_witness, orbit_pairings, CurveFunctional, DivisorClass,
    NumericalActionSpec, Verdict, WitnessConfig,
};
use twisted_coord::linalg::{self, char_poly, IntMatrix, SturmChain};
use twisted_coord::ring::{
    is_decomposable, twist_degree, twisted_product, Monomial, PowerRingSpec,
};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied().map(big).collect()).collect()).unwrap()
}

fn square(dim: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, dim), dim)
}

fn any_square(lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4).prop_flat_map(move |d| square(d, lo, hi))
}

/// Determinant by cofactor expansion over rationals.
fn laplace_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigRational::zero();
    for col in 0..n {
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * laplace_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Unimodular `Q` and its inverse from elementary row operations.
fn unimodular(dim: usize, ops: &[(usize, usize, i64)]) -> (IntMatrix, IntMatrix) {
    let mut q = IntMatrix::identity(dim);
    let mut q_inv = IntMatrix::identity(dim);
    for &(i, j, k) in ops {
        let (i, j) = (i % dim, j % dim);
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(dim).to_rows();
        e[i][j] = big(k);
        let mut e_inv = IntMatrix::identity(dim).to_rows();
        e_inv[i][j] = big(-k);
        q = IntMatrix::from_rows(e).unwrap().mul(&q);
        q_inv = q_inv.mul(&IntMatrix::from_rows(e_inv).unwrap());
    }
    (q, q_inv)
}

fn spec_from(p: IntMatrix, curves: Vec<Vec<i64>>) -> Option<NumericalActionSpec> {
    let curves = curves.iter().map(|c| CurveFunctional::from_i64(c)).collect();
    NumericalActionSpec::new(p, curves, 1).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn char_poly_matches_cofactor_expansion(rows in any_square(-5, 5)) {
        let p = matrix(&rows);
        let chi = char_poly(&p);
        prop_assert_eq!(chi.degree(), Some(rows.len()));
        for x in -3i64..=3 {
            let xi: Vec<Vec<BigRational>> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .enumerate()
                        .map(|(j, &v)| BigRational::from_integer(big(if i == j { x - v } else { -v })))
                        .collect()
                })
                .collect();
            prop_assert_eq!(BigRational::from_integer(chi.eval(&big(x))), laplace_det(&xi));
        }
    }

    #[test]
    fn spectral_radius_is_at_least_one(rows in any_square(-4, 4)) {
        let p = matrix(&rows);
        prop_assume!(!p.is_singular());
        let width = linalg::default_width();
        let r = linalg::spectral_radius_interval(&p, &width).unwrap();
        prop_assert!(r.width() <= width);
        prop_assert!(r.lo() >= &(BigRational::one() - &width));
    }

    #[test]
    fn sturm_certificate_for_nonnegative_actions(rows in any_square(0, 4)) {
        let p = matrix(&rows);
        prop_assume!(!p.is_singular());
        let r = linalg::spectral_radius_interval(&p, &linalg::default_width()).unwrap();
        let chi = char_poly(&p).to_rational();
        let chain = SturmChain::new(&chi.squarefree());
        prop_assert_eq!(chain.roots_above(r.hi()), 0);
        if !r.is_point() {
            let (a, b) = (chi.eval(r.lo()), chi.eval(r.hi()));
            prop_assert!((a * b).is_negative() || chain.roots_above(r.lo()) == 1);
        } else {
            prop_assert!(chi.eval(r.lo()).is_zero());
        }
    }

    #[test]
    fn quasi_unipotent_actions_have_radius_one(
        dim in 1usize..=4,
        block in 0usize..4,
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
    ) {
        // a block-diagonal finite-order or unipotent core, then conjugated
        let mut core = IntMatrix::identity(dim).to_rows();
        match block {
            0 if dim >= 2 => { core[0][1] = big(1); }
            1 if dim >= 2 => { core[0][0] = big(0); core[0][1] = big(-1); core[1][0] = big(1); core[1][1] = big(0); }
            2 if dim >= 3 => { core[0][0] = big(0); core[0][1] = big(0); core[0][2] = big(1); core[1][0] = big(1); core[1][1] = big(0); core[2][1] = big(1); core[2][2] = big(0); }
            _ => { core[dim - 1][dim - 1] = big(-1); }
        }
        let (q, q_inv) = unimodular(dim, &ops);
        let p = q.mul(&IntMatrix::from_rows(core).unwrap()).mul(&q_inv);
        prop_assert!(linalg::is_quasi_unipotent(&p));
        let r = linalg::spectral_radius_interval(&p, &linalg::default_width()).unwrap();
        prop_assert!(r.contains(&BigRational::one()));
    }

    #[test]
    fn jordan_exponent_is_a_similarity_invariant(
        diag in prop::collection::vec(-2i64..=3, 2..=4),
        upper in prop::collection::vec(-1i64..=1, 6),
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
    ) {
        let dim = diag.len();
        let mut rows = vec![vec![0i64; dim]; dim];
        let mut it = upper.iter();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = diag[i];
            for v in &mut row[i + 1..] {
                *v = *it.next().unwrap();
            }
        }
        let p = matrix(&rows);
        let (q, q_inv) = unimodular(dim, &ops);
        let conj = q.mul(&p).mul(&q_inv);
        let r = big(diag[0]);
        prop_assert_eq!(
            linalg::jordan_growth_exponent(&p, &r).unwrap(),
            linalg::jordan_growth_exponent(&conj, &r).unwrap()
        );
    }

    #[test]
    fn orbit_pairings_are_bilinear(
        rows in square(2, -3, 3),
        d1 in prop::collection::vec(-5i64..=5, 2),
        d2 in prop::collection::vec(-5i64..=5, 2),
        c1 in prop::collection::vec(-5i64..=5, 2),
        c2 in prop::collection::vec(-5i64..=5, 2),
    ) {
        let Some(spec) = spec_from(matrix(&rows), vec![c1.clone()]) else { return Ok(()); };
        let (d1, d2) = (DivisorClass::from_i64(&d1), DivisorClass::from_i64(&d2));
        let (c1, c2) = (CurveFunctional::from_i64(&c1), CurveFunctional::from_i64(&c2));
        let c12 = CurveFunctional(c1.0.iter().zip(&c2.0).map(|(a, b)| a + b).collect());
        let m = 12;
        let sum_d = orbit_pairings(&spec, &d1.add(&d2), &c1, m).unwrap();
        let sum_c = orbit_pairings(&spec, &d1, &c12, m).unwrap();
        let a = orbit_pairings(&spec, &d1, &c1, m).unwrap();
        let b = orbit_pairings(&spec, &d2, &c1, m).unwrap();
        let c = orbit_pairings(&spec, &d1, &c2, m).unwrap();
        for i in 0..=m {
            prop_assert_eq!(&sum_d[i], &(&a[i] + &b[i]));
            prop_assert_eq!(&sum_c[i], &(&a[i] + &c[i]));
        }
    }

    #[test]
    fn delta_increments_are_orbit_terms(
        rows in square(3, -2, 2),
        d in prop::collection::vec(-4i64..=4, 3),
        c in prop::collection::vec(-4i64..=4, 3),
    ) {
        let Some(spec) = spec_from(matrix(&rows), vec![c.clone()]) else { return Ok(()); };
        let d = DivisorClass::from_i64(&d);
        let c = CurveFunctional::from_i64(&c);
        let orbit = orbit_pairings(&spec, &d, &c, 15).unwrap();
        let delta = delta_sequence(&spec, &d, &c, 16).unwrap();
        prop_assert_eq!(&delta[0], &orbit[0]);
        for m in 1..16 {
            prop_assert_eq!(&(&delta[m] - &delta[m - 1]), &orbit[m]);
        }
    }

    #[test]
    fn verdicts_are_scale_invariant_and_respect_radius(
        rows in square(2, -3, 3),
        d in prop::collection::vec(-3i64..=3, 2),
        flag in prop::option::of(any::<bool>()),
    ) {
        let Some(mut spec) = spec_from(matrix(&rows), vec![vec![1, 0], vec![0, 1]]) else { return Ok(()); };
        if let Some(f) = flag {
            spec = spec.with_ample_flag(f);
        }
        let d = DivisorClass::from_i64(&d);
        let one = classify_ampleness(&spec, &d).unwrap();
        let two = classify_ampleness(&spec, &d.scale(&big(2))).unwrap();
        prop_assert_eq!((one.left, one.right), (two.left, two.right));
        prop_assert!(!one.reasons.is_empty());
        if one.spectral_radius.lo() > &BigRational::one() {
            prop_assert_ne!(one.left, Verdict::Yes);
        }
    }

    #[test]
    fn euler_characteristic_and_serre_duality(m in 1usize..=5, d in -20i64..=20) {
        let d = big(d);
        let mut chi = BigInt::zero();
        for q in 0..=m {
            let v = BigInt::from(h(m, &d, q).unwrap());
            if q % 2 == 0 { chi += v } else { chi -= v }
            let dual = -&d - BigInt::from(m) - 1;
            prop_assert_eq!(h(m, &d, q).unwrap(), h(m, &dual, m - q).unwrap());
        }
        // binomial polynomial (d+m)(d+m-1)...(d+1)/m!
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 1..=m {
            num *= &d + BigInt::from(i);
            den *= BigInt::from(i);
        }
        prop_assert_eq!(chi, num / den);
    }

    #[test]
    fn right_scans_stay_vanishing(m in 1usize..=3, r in 2u64..=5, t in -60i64..=5) {
        let spec = PowerRingSpec::new(m, r).unwrap();
        let scan = right_vanishing_scan(&spec, &big(t), 10).unwrap();
        if let Some(n0) = scan.n0 {
            let vanishes = |n: u32| (1..=m).all(|q| scan.table.get(n, q).unwrap().is_zero());
            for n in n0..=10u32 {
                prop_assert!(vanishes(n));
            }
            if n0 > 0 {
                prop_assert!(!vanishes(n0 - 1));
            }
        }
    }

    #[test]
    fn decomposition_witnesses_verify(r in 2u64..=4, n in 2u32..=4, seed in any::<u64>()) {
        let spec = PowerRingSpec::new(2, r).unwrap();
        let e = u64::try_from(twist_degree(r, n)).unwrap();
        let a = seed % (e + 1);
        let b = (seed / 7) % (e - a + 1);
        let z = Monomial::from_u64(&[a, b, e - a - b]);
        if let Some(w) = is_decomposable(&spec, &z, n).unwrap() {
            prop_assert!(w.verify(&spec, &z));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn twisted_product_is_associative(
        r in 1u64..=4,
        grades in (0u32..=4, 0u32..=4, 0u32..=4),
        cuts in prop::collection::vec(any::<u64>(), 6),
    ) {
        let spec = PowerRingSpec::new(1, r).unwrap();
        let (a, b, c) = grades;
        let mono = |n: u32, s: u64| {
            let e = u64::try_from(twist_degree(r, n)).unwrap();
            let x = s % (e + 1);
            Monomial::from_u64(&[x, e - x])
        };
        let (u, v, w) = (mono(a, cuts[0]), mono(b, cuts[1]), mono(c, cuts[2]));
        let uv_w = twisted_product(&spec, a + b, &twisted_product(&spec, a, &u, b, &v).unwrap(), c, &w).unwrap();
        let u_vw = twisted_product(&spec, a, &u, b + c, &twisted_product(&spec, b, &v, c, &w).unwrap()).unwrap();
        prop_assert_eq!(&uv_w, &u_vw);
        prop_assert_eq!(uv_w.degree(), twist_degree(r, a + b + c));
        let one = Monomial::one(2);
        prop_assert_eq!(&twisted_product(&spec, 0, &one, b, &v).unwrap(), &v);
        prop_assert_eq!(&twisted_product(&spec, b, &v, 0, &one).unwrap(), &v);
    }
}

#[test]
fn scalar_witness_holds_far_out() {
    for p in 2i64..=7 {
        let spec = spec_from(matrix(&[vec![p]]), vec![vec![1]]).unwrap();
        let d = DivisorClass::from_i64(&[1]);
        let w = non_left_ample_witness(&spec, &d, &d, &WitnessConfig::default()).unwrap();
        // (Δ_m - P^m H . C) = e_m - k p^m in closed form
        let k = &w.multiplier;
        let p_big = BigUint::from(p as u64);
        let mut p_m = BigUint::one();
        for m in 1..=1000u32 {
            p_m *= &p_big;
            let margin = BigInt::from(twist_degree(p as u64, m)) - k * BigInt::from(p_m.clone());
            assert!(margin.is_negative(), "p={p} m={m}");
        }
    }
}

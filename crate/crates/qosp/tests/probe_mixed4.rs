#[test]
fn probe_pairing_steps() {
    use qosp::algebra::u::gen_k;
    use qosp::half::Half;
    use qosp::hopf::pair;
    use qosp::invariant::{invariant_vector, Family};
    use qosp::scalar::Scalar;
    use qosp::spherical::{
        casimir_gamma, gamma_eigenvalue, mixed_chain_left_labels, mixed_chain_right_labels,
        spherical_function,
    };
    use qosp::action::Side;
    use qosp::comodule::matrix_element_s;
    let (ra, rb) = mixed_chain_right_labels();
    let (lb, lg) = mixed_chain_left_labels();
    let g = casimir_gamma();
    for n in 1..=2i64 {
        let l = Half::from_int(n);
        let s = (n % 2) as u8;
        let phi = spherical_function(
            l, s,
            Family::AlphaBeta, &ra, &rb, &Scalar::zero(),
            Family::BetaGamma, &Scalar::zero(), &lb, &lg,
        )
        .unwrap()
        .unwrap();
        let lam = gamma_eigenvalue(l, s);
        for m in -1..=1i64 {
            let t_val = pair(&gen_k(m).mul(&g), &phi.element);
            let p_val = pair(&gen_k(m), &phi.element);
            let ok = t_val.sub(&lam.mul(&p_val)).is_zero();
            println!("n={n} m={m}: <k^m G, phi> == lam P(m): {ok}");
        }
        // which matrix entries does k^m see?
        if n == 2 {
            for &i in &Half::range_sym(l) {
                for &j in &Half::range_sym(l) {
                    let me = matrix_element_s(l, i, j, s).unwrap();
                    let v = pair(&gen_k(1), &me);
                    if !v.is_zero() {
                        println!("  k^1 sees l=2 entry i={} j={}", i.twice(), j.twice());
                    }
                }
            }
            // invariant coords used
            let rv = invariant_vector(Side::Right, Family::AlphaBeta, l, s, &ra, &rb, &Scalar::zero()).unwrap().unwrap();
            let lv = invariant_vector(Side::Left, Family::BetaGamma, l, s, &Scalar::zero(), &lb, &lg).unwrap().unwrap();
            for (pos, &i) in Half::range_sym(l).iter().enumerate() {
                println!("  i={}: x={:?} y={:?}", i.twice(),
                    if rv.coords[pos].is_zero() {"0"} else {"*"},
                    if lv.coords[pos].is_zero() {"0"} else {"*"});
            }
        }
    }
}

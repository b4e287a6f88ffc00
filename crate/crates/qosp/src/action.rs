//! Left and right actions of the enveloping algebra on the coordinate
//! algebra, with single-term closed forms on the weight bases.

use crate::algebra::u::{gen_e, gen_k};
use crate::algebra::{AElement, AMono, UElement, UMono};
use crate::comodule::{eta, i_pow, xi};
use crate::half::Half;
use crate::hopf::{coproduct_a_mono, pair};
use crate::scalar::Scalar;
use crate::symrat::{SymPoly, SymRat};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Single generators whose action has a one-term closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionGen {
    E,
    F,
    K,
    KInv,
}

fn a_mono_parity(m: &AMono) -> u32 {
    (m.b + m.c) % 2
}

fn u_mono_parity(m: &UMono) -> u32 {
    (m.e + m.f) % 2
}

fn split_by_parity(x: &UElement) -> [UElement; 2] {
    let mut even = UElement::zero();
    let mut odd = UElement::zero();
    for (m, c) in x.terms() {
        if u_mono_parity(m) == 0 {
            even.add_term(m.clone(), c.clone());
        } else {
            odd.add_term(m.clone(), c.clone());
        }
    }
    [even, odd]
}

/// Right action: the pairing consumes the left coproduct leg.
pub fn act_right(x: &UElement, u: &AElement) -> AElement {
    let mut out = AElement::zero();
    for (m, c) in u.terms() {
        let delta = coproduct_a_mono(m);
        for (tm, tc) in delta.terms() {
            let px = pair(x, &AElement::from_mono(tm.l.clone()));
            if px.is_zero() {
                continue;
            }
            out.add_term(tm.r.clone(), c.mul(tc).mul(&px));
        }
    }
    out
}

/// Left action: the pairing consumes the right coproduct leg, with the
/// parity sign of moving x past the surviving leg.
pub fn act_left(x: &UElement, u: &AElement) -> AElement {
    let mut out = AElement::zero();
    let parts = split_by_parity(x);
    for (px_parity, xp) in parts.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        for (m, c) in u.terms() {
            let delta = coproduct_a_mono(m);
            for (tm, tc) in delta.terms() {
                let pv = pair(xp, &AElement::from_mono(tm.r.clone()));
                if pv.is_zero() {
                    continue;
                }
                let mut coeff = c.mul(tc).mul(&pv);
                if px_parity == 1 && a_mono_parity(&tm.l) == 1 {
                    coeff = coeff.neg();
                }
                out.add_term(tm.l.clone(), coeff);
            }
        }
    }
    out
}

pub fn act(side: Side, x: &UElement, u: &AElement) -> AElement {
    match side {
        Side::Left => act_left(x, u),
        Side::Right => act_right(x, u),
    }
}

fn sqrt_one_minus(n: i64) -> Scalar {
    // (1 - t^(-2n))^(1/2), zero when n = 0
    if n == 0 {
        return Scalar::zero();
    }
    Scalar::one()
        .sub(&Scalar::t_pow(-2 * n))
        .sqrt()
        .expect("1 - t^(-2n) has an admissible root")
}

fn sign_pow(n: i64) -> Scalar {
    if n.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// k-eigenvalue on the weight-i vector of the spin-l space.
pub fn k_eigenvalue(l: Half, i: Half, s: u8, inv: bool) -> Scalar {
    let lpi = (l + i).integer().expect("integer weight offset");
    let two_i = i.twice();
    let e = if inv { two_i } else { -two_i };
    sign_pow(lpi + s as i64).mul(&Scalar::t_pow(e))
}

/// One-term closed form for a generator acting on a weight basis vector;
/// returns the coefficient and the target weight.
pub fn closed_form_action(
    side: Side,
    gen: ActionGen,
    l: Half,
    idx: Half,
    s: u8,
) -> Result<(Scalar, Half)> {
    if (l - idx).integer().is_none() || idx.abs().twice() > l.twice() || l.twice() < 0 {
        return Err(Error::InvalidArgument(format!(
            "index {} outside the weight range of {}",
            idx, l
        )));
    }
    let one = Half::from_int(1);
    let lpi = (l + idx).integer().unwrap();
    let lmi = (l - idx).integer().unwrap();
    let qdiff = Scalar::q_pow(1).sub(&Scalar::q_pow(-1));
    let tfall = Scalar::one().sub(&Scalar::t_pow(-2));
    Ok(match (side, gen) {
        (_, ActionGen::K) | (_, ActionGen::KInv) => {
            (k_eigenvalue(l, idx, s, gen == ActionGen::KInv), idx)
        }
        (Side::Right, ActionGen::E) => {
            let unit = i_pow(lpi.div_euclid(2) - (lpi + 1).div_euclid(2));
            let coeff = unit
                .mul(&Scalar::t_pow(lmi))
                .mul(&sqrt_one_minus(lmi))
                .mul(&sqrt_one_minus(lpi + 1))
                .mul(&qdiff.inv()?);
            (coeff, idx + one)
        }
        (Side::Right, ActionGen::F) => {
            let unit = i_pow(lpi.div_euclid(2) - (lpi - 1).div_euclid(2));
            let coeff = sign_pow(lpi + s as i64 - 1)
                .mul(&unit)
                .mul(&Scalar::t_pow(lpi - 1))
                .mul(&sqrt_one_minus(lpi))
                .mul(&sqrt_one_minus(lmi + 1))
                .mul(&tfall.inv()?);
            (coeff, idx - one)
        }
        (Side::Left, ActionGen::E) => {
            let unit = i_pow((lpi - 1).div_euclid(2) - lpi.div_euclid(2));
            let coeff = sign_pow(lmi + 1 + l.twice())
                .mul(&unit)
                .mul(&Scalar::t_pow(lmi + 1))
                .mul(&sqrt_one_minus(lpi))
                .mul(&sqrt_one_minus(lmi + 1))
                .mul(&qdiff.inv()?);
            (coeff, idx - one)
        }
        (Side::Left, ActionGen::F) => {
            let unit = i_pow((lpi + 1).div_euclid(2) - lpi.div_euclid(2));
            let coeff = sign_pow(1 + s as i64)
                .mul(&unit)
                .mul(&Scalar::t_pow(lpi))
                .mul(&sqrt_one_minus(lmi))
                .mul(&sqrt_one_minus(lpi + 1))
                .mul(&tfall.inv()?);
            (coeff, idx + one)
        }
    })
}

/// Weight basis vector of the given side: xi for right modules, eta for
/// left modules.
pub fn basis_vector(side: Side, l: Half, i: Half, s: u8) -> Result<AElement> {
    match side {
        Side::Right => xi(l, i, s),
        Side::Left => eta(l, i, s),
    }
}

/// Expand an element of the spin-l weight space in its basis; rejects
/// elements outside the span.
pub fn expand_in_basis(side: Side, l: Half, s: u8, v: &AElement) -> Result<Vec<Scalar>> {
    let idx = Half::range_sym(l);
    let mut table: Vec<(AMono, Scalar)> = Vec::with_capacity(idx.len());
    for &i in &idx {
        let b = basis_vector(side, l, i, s)?;
        let (m, c) = b.terms().next().expect("basis vector is a single term");
        table.push((m.clone(), c.inv()?));
    }
    let mut coords = vec![Scalar::zero(); idx.len()];
    let mut seen = AElement::zero();
    for (pos, (m, cinv)) in table.iter().enumerate() {
        let c = v.coeff(m);
        if !c.is_zero() {
            coords[pos] = c.mul(cinv);
            seen.add_term(m.clone(), c);
        }
    }
    if &seen != v {
        return Err(Error::InvalidArgument(
            "element does not lie in the requested weight space".into(),
        ));
    }
    Ok(coords)
}

/// Matrix of act(side, x, .) on the spin-l weight space, column j holding
/// the image coordinates of the j-th basis vector (indices ascending).
pub fn action_matrix(side: Side, x: &UElement, l: Half, s: u8) -> Result<Vec<Vec<Scalar>>> {
    let idx = Half::range_sym(l);
    let dim = idx.len();
    let mut mat = vec![vec![Scalar::zero(); dim]; dim];
    for (col, &i) in idx.iter().enumerate() {
        let image = act(side, x, &basis_vector(side, l, i, s)?);
        let coords = expand_in_basis(side, l, s, &image)?;
        for (row, c) in coords.into_iter().enumerate() {
            mat[row][col] = c;
        }
    }
    Ok(mat)
}

/// Component matrices of the one-parameter primitive family: the images of
/// the e, fk, and k-1 parts on the spin-l space, in the convention where k
/// contributes its eigenvalue at the source weight.
pub struct PrimitiveParts {
    pub dim: usize,
    pub e_part: Vec<Vec<Scalar>>,
    pub fk_part: Vec<Vec<Scalar>>,
    pub k_minus_1_part: Vec<Vec<Scalar>>,
}

pub fn primitive_parts(side: Side, l: Half, s: u8) -> Result<PrimitiveParts> {
    let idx = Half::range_sym(l);
    let dim = idx.len();
    let zero = || vec![vec![Scalar::zero(); dim]; dim];
    let (mut e_part, mut fk_part, mut k_part) = (zero(), zero(), zero());
    for (col, &i) in idx.iter().enumerate() {
        let a_i = k_eigenvalue(l, i, s, false);
        k_part[col][col] = a_i.sub(&Scalar::one());
        let (be, tgt) = closed_form_action(side, ActionGen::E, l, i, s)?;
        if !be.is_zero() {
            let row = idx.iter().position(|&x| x == tgt).unwrap();
            e_part[row][col] = be;
        }
        let (bf, tgt) = closed_form_action(side, ActionGen::F, l, i, s)?;
        if !bf.is_zero() {
            let row = idx.iter().position(|&x| x == tgt).unwrap();
            fk_part[row][col] = bf.mul(&a_i);
        }
    }
    Ok(PrimitiveParts {
        dim,
        e_part,
        fk_part,
        k_minus_1_part: k_part,
    })
}

/// Matrix of the primitive family member with the given coefficients, in
/// the source-eigenvalue convention of `primitive_parts`.
pub fn primitive_action_matrix(
    side: Side,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    l: Half,
    s: u8,
) -> Result<Vec<Vec<Scalar>>> {
    let parts = primitive_parts(side, l, s)?;
    let dim = parts.dim;
    let mut mat = vec![vec![Scalar::zero(); dim]; dim];
    for r in 0..dim {
        for c in 0..dim {
            mat[r][c] = alpha
                .mul(&parts.e_part[r][c])
                .add(&beta.mul(&parts.fk_part[r][c]))
                .add(&gamma.mul(&parts.k_minus_1_part[r][c]));
        }
    }
    Ok(mat)
}

/// The primitive family element itself.
pub fn x_primitive(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> UElement {
    let mut x = gen_e().scale(alpha);
    x = x.add(&UElement::from_mono_scaled(UMono::new(0, 1, 1), beta.clone()));
    x = x.add(&gen_k(1).sub(&UElement::one()).scale(gamma));
    x
}

/// Matrix of the primitive family with its three coefficients left opaque:
/// entries are linear polynomials in the adjoined symbols.
pub fn primitive_matrix_symbolic(side: Side, l: Half, s: u8) -> Result<Vec<Vec<SymRat>>> {
    let parts = primitive_parts(side, l, s)?;
    let dim = parts.dim;
    let mut mat = Vec::with_capacity(dim);
    for r in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for c in 0..dim {
            let mut p = SymPoly::var(0).scale(&parts.e_part[r][c]);
            p = p.add(&SymPoly::var(1).scale(&parts.fk_part[r][c]));
            p = p.add(&SymPoly::var(2).scale(&parts.k_minus_1_part[r][c]));
            row.push(SymRat::from_poly(p));
        }
        mat.push(row);
    }
    Ok(mat)
}

/// Determinant of the symbolic primitive matrix.
pub fn primitive_det_symbolic(side: Side, l: Half, s: u8) -> Result<SymRat> {
    crate::linalg::det(&primitive_matrix_symbolic(side, l, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::a::{gen_a, gen_b, gen_sigma};
    use crate::algebra::u::{gen_f, kappa};
    use crate::hopf::coproduct_u;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn h(s: &str) -> Half {
        s.parse().unwrap()
    }

    fn rand_scalar(rng: &mut StdRng) -> Scalar {
        let n = rng.gen_range(1i64..4);
        let n = if rng.gen() { n } else { -n };
        let p = rng.gen_range(-2i64..3);
        Scalar::from_int(n).mul(&Scalar::t_pow(p))
    }

    fn rand_u_mono(rng: &mut StdRng, max_deg: u32) -> UMono {
        loop {
            let e = rng.gen_range(0..=max_deg);
            let f = rng.gen_range(0..=max_deg);
            if e + f <= max_deg {
                return UMono::new(e, f, rng.gen_range(-1i64..2));
            }
        }
    }

    fn rand_homogeneous_u(rng: &mut StdRng, max_deg: u32) -> UElement {
        // homogeneous parity, 1..2 terms
        let first = rand_u_mono(rng, max_deg);
        let par = u_mono_parity(&first);
        let mut x = UElement::from_mono_scaled(first, rand_scalar(rng));
        for _ in 0..1 {
            let m = rand_u_mono(rng, max_deg);
            if u_mono_parity(&m) == par {
                x = x.add(&UElement::from_mono_scaled(m, rand_scalar(rng)));
            }
        }
        x
    }

    fn rand_a_mono(rng: &mut StdRng, max_deg: u32) -> AMono {
        loop {
            let a = rng.gen_range(0..=max_deg);
            let b = rng.gen_range(0..=max_deg);
            let c = rng.gen_range(0..=max_deg);
            let d = rng.gen_range(0..=max_deg);
            if a + b + c + d <= max_deg && (a == 0 || d == 0) {
                return AMono::new(a, b, c, d, rng.gen_range(0..2) as u8);
            }
        }
    }

    fn rand_a(rng: &mut StdRng, max_deg: u32) -> AElement {
        let mut v = AElement::zero();
        for _ in 0..2 {
            v = v.add(&AElement::from_mono_scaled(
                rand_a_mono(rng, max_deg),
                rand_scalar(rng),
            ));
        }
        v
    }

    fn rand_homogeneous_a(rng: &mut StdRng, max_deg: u32) -> AElement {
        AElement::from_mono_scaled(rand_a_mono(rng, max_deg), rand_scalar(rng))
    }

    #[test]
    fn generator_actions_on_coordinates() {
        // R_k(a) = t a, L_k(a) = t a, R_e(b) picks the pairing value
        let k = gen_k(1);
        assert_eq!(act_right(&k, &gen_a()), gen_a().scale(&Scalar::t_pow(1)));
        assert_eq!(act_left(&k, &gen_a()), gen_a().scale(&Scalar::t_pow(1)));
        // top of the spin-1/2 tower annihilates under R_e
        for s in [0u8, 1] {
            let top = xi(h("1/2"), h("1/2"), s).unwrap();
            assert!(act_right(&gen_e(), &top).is_zero());
            let bottom = eta(h("1/2"), h("-1/2"), s).unwrap();
            assert!(act_left(&gen_e(), &bottom).is_zero());
        }
    }

    #[test]
    fn closed_form_matches_direct_action_everywhere() {
        for lstr in ["1/2", "1", "3/2", "2", "5/2"] {
            let l = h(lstr);
            for s in [0u8, 1] {
                for &i in &Half::range_sym(l) {
                    for (side, gens) in [
                        (Side::Right, [ActionGen::E, ActionGen::F, ActionGen::K, ActionGen::KInv]),
                        (Side::Left, [ActionGen::E, ActionGen::F, ActionGen::K, ActionGen::KInv]),
                    ] {
                        for gen in gens {
                            let x = match gen {
                                ActionGen::E => gen_e(),
                                ActionGen::F => gen_f(),
                                ActionGen::K => gen_k(1),
                                ActionGen::KInv => gen_k(-1),
                            };
                            let direct = act(side, &x, &basis_vector(side, l, i, s).unwrap());
                            let (coeff, tgt) = closed_form_action(side, gen, l, i, s).unwrap();
                            let expected = if coeff.is_zero() {
                                AElement::zero()
                            } else {
                                basis_vector(side, l, tgt, s).unwrap().scale(&coeff)
                            };
                            assert_eq!(
                                direct, expected,
                                "side={:?} gen={:?} l={} i={} s={}",
                                side, gen, l, i, s
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composite_action_laws() {
        let mut rng = StdRng::seed_from_u64(40);
        for _ in 0..60 {
            let x = rand_homogeneous_u(&mut rng, 2);
            let y = rand_homogeneous_u(&mut rng, 2);
            let u = rand_a(&mut rng, 2);
            let xy = x.mul(&y);
            let px = x.terms().next().map(|(m, _)| u_mono_parity(m)).unwrap_or(0);
            let py = y.terms().next().map(|(m, _)| u_mono_parity(m)).unwrap_or(0);
            let sign = px * py % 2 == 1;
            // right composite: R_(xy) = R_y . R_x
            let lhs = act_right(&xy, &u);
            let rhs = act_right(&y, &act_right(&x, &u));
            assert_eq!(lhs, rhs, "right composite");
            // left composite picks up the Koszul sign
            let lhs = act_left(&xy, &u);
            let rhs = act_left(&x, &act_left(&y, &u));
            let rhs = if sign { rhs.neg() } else { rhs };
            assert_eq!(lhs, rhs, "left composite");
            // left and right actions commute up to the same sign
            let lhs = act_right(&x, &act_left(&y, &u));
            let rhs = act_left(&y, &act_right(&x, &u));
            let rhs = if sign { rhs.neg() } else { rhs };
            assert_eq!(lhs, rhs, "left-right commutation");
        }
    }

    #[test]
    fn pairing_transfer_rules() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..60 {
            let x = rand_homogeneous_u(&mut rng, 2);
            let y = rand_homogeneous_u(&mut rng, 2);
            let u = rand_a(&mut rng, 2);
            let xy = x.mul(&y);
            let px = x.terms().next().map(|(m, _)| u_mono_parity(m)).unwrap_or(0);
            let py = y.terms().next().map(|(m, _)| u_mono_parity(m)).unwrap_or(0);
            let lhs = pair(&xy, &u);
            let via_left = pair(&x, &act_left(&y, &u));
            let s1 = if px * py % 2 == 1 {
                via_left.neg()
            } else {
                via_left
            };
            assert_eq!(lhs, s1, "transfer through the left action");
            let via_right = pair(&y, &act_right(&x, &u));
            assert_eq!(lhs, via_right, "transfer through the right action");
        }
    }

    #[test]
    fn module_algebra_rules() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..40 {
            let x = rand_homogeneous_u(&mut rng, 2);
            let u = rand_homogeneous_a(&mut rng, 2);
            let v = rand_a(&mut rng, 2);
            let pu = u.terms().next().map(|(m, _)| a_mono_parity(m)).unwrap_or(0);
            let uv = u.mul(&v);
            let dx = coproduct_u(&x);
            // R_x(uv) = sum +- R_(x1)(u) R_(x2)(v)
            let mut rhs = AElement::zero();
            for (tm, tc) in dx.terms() {
                let x1 = UElement::from_mono(tm.l.clone());
                let x2 = UElement::from_mono(tm.r.clone());
                let p1 = u_mono_parity(&tm.l);
                let p2 = u_mono_parity(&tm.r);
                let mut term = act_right(&x1, &u).mul(&act_right(&x2, &v)).scale(tc);
                if (pu + p1) * p2 % 2 == 1 {
                    term = term.neg();
                }
                rhs = rhs.add(&term);
            }
            assert_eq!(act_right(&x, &uv), rhs, "right module-algebra rule");
            // L_x(uv) = sum +- L_(x1)(u) L_(x2)(v); the sign moves x2 past
            // the surviving left leg, whose parity is p(u) + p(x1)
            let mut rhs = AElement::zero();
            for (tm, tc) in dx.terms() {
                let x1 = UElement::from_mono(tm.l.clone());
                let x2 = UElement::from_mono(tm.r.clone());
                let p1 = u_mono_parity(&tm.l);
                let p2 = u_mono_parity(&tm.r);
                let mut term = act_left(&x1, &u).mul(&act_left(&x2, &v)).scale(tc);
                if (pu + p1) * p2 % 2 == 1 {
                    term = term.neg();
                }
                rhs = rhs.add(&term);
            }
            assert_eq!(act_left(&x, &uv), rhs, "left module-algebra rule");
        }
    }

    #[test]
    fn weight_half_primitive_matrix() {
        // the spin-1/2 matrix of the primitive family, entry by entry
        let l = h("1/2");
        let alpha = Scalar::from_int(2);
        let beta = Scalar::t_pow(1);
        let gamma = Scalar::from_int(1);
        for s in [0u8, 1] {
            let m = primitive_action_matrix(Side::Right, &alpha, &beta, &gamma, l, s).unwrap();
            let sgn = |n: i64| {
                if n % 2 == 0 {
                    Scalar::one()
                } else {
                    Scalar::from_int(-1)
                }
            };
            // diagonal gamma((-1)^s t - 1), gamma((-1)^(1+s) t^-1 - 1)
            let d0 = sgn(s as i64)
                .mul(&Scalar::t_pow(1))
                .sub(&Scalar::one())
                .mul(&gamma);
            let d1 = sgn(1 + s as i64)
                .mul(&Scalar::t_pow(-1))
                .sub(&Scalar::one())
                .mul(&gamma);
            assert_eq!(m[0][0], d0);
            assert_eq!(m[1][1], d1);
            // corner entries -beta t^-1 and alpha (t - t^-1)/(q - q^-1)
            assert_eq!(m[0][1], beta.mul(&Scalar::t_pow(-1)).neg());
            let qdiff = Scalar::q_pow(1).sub(&Scalar::q_pow(-1));
            let tdiff = Scalar::t_pow(1).sub(&Scalar::t_pow(-1));
            assert_eq!(m[1][0], alpha.mul(&tdiff).mul(&qdiff.inv().unwrap()));
        }
    }

    #[test]
    fn primitive_matrix_vs_definitional_action() {
        // on the right, the source-eigenvalue convention amounts to scaling
        // the fk coefficient by q relative to the definitional composite; on
        // the left the two agree
        let mut rng = StdRng::seed_from_u64(43);
        for lstr in ["1/2", "1", "3/2"] {
            let l = h(lstr);
            for s in [0u8, 1] {
                let alpha = rand_scalar(&mut rng);
                let beta = rand_scalar(&mut rng);
                let gamma = rand_scalar(&mut rng);
                let x = x_primitive(&alpha, &beta.mul(&Scalar::q_pow(-1)), &gamma);
                let definit = action_matrix(Side::Right, &x, l, s).unwrap();
                let paper = primitive_action_matrix(Side::Right, &alpha, &beta, &gamma, l, s)
                    .unwrap();
                assert_eq!(definit, paper, "right l={} s={}", l, s);
                let x = x_primitive(&alpha, &beta, &gamma);
                let definit = action_matrix(Side::Left, &x, l, s).unwrap();
                let paper =
                    primitive_action_matrix(Side::Left, &alpha, &beta, &gamma, l, s).unwrap();
                assert_eq!(definit, paper, "left l={} s={}", l, s);
            }
        }
    }

    #[test]
    fn action_annihilates_counit_kernel_pairing() {
        // epsilon(x_primitive) = 0, so images lie in the span and the matrix
        // columns are complete; also sanity: acting by kappa = (k - k^-1)/(q - q^-1)
        let x = kappa();
        let v = gen_a().mul(&gen_b());
        let got = act_right(&x, &v);
        // weight of ab under k is t * -t... direct check against k action
        let k1 = act_right(&gen_k(1), &v);
        let km1 = act_right(&gen_k(-1), &v);
        let qdiff = Scalar::q_pow(1).sub(&Scalar::q_pow(-1));
        assert_eq!(got, k1.sub(&km1).scale(&qdiff.inv().unwrap()));
    }

    #[test]
    fn sigma_twist_flips_k_weight() {
        let v = gen_a();
        let vs = gen_a().mul(&gen_sigma());
        let k = gen_k(1);
        assert_eq!(
            act_right(&k, &vs),
            act_right(&k, &v).mul(&gen_sigma()).neg()
        );
    }

    #[test]
    fn weight_one_primitive_parts_match_known_entries() {
        // Right action on the three-dimensional space. The e and fk blocks
        // are twist-independent; the diagonal carries the k eigenvalues.
        let x = Scalar::sqrt_phi(2);
        let xinv = x.inv().unwrap();
        let it = Scalar::i().mul(&Scalar::t_pow(-1));
        for s in 0..=1u8 {
            let parts = primitive_parts(Side::Right, h("1"), s).unwrap();
            assert_eq!(parts.dim, 3);
            let mut e_expect = vec![vec![Scalar::zero(); 3]; 3];
            e_expect[1][0] = xinv.neg();
            e_expect[2][1] = it.mul(&xinv);
            assert_eq!(parts.e_part, e_expect, "e block, s={}", s);
            let mut fk_expect = vec![vec![Scalar::zero(); 3]; 3];
            fk_expect[0][1] = x.neg();
            fk_expect[1][2] = it.neg().mul(&x);
            assert_eq!(parts.fk_part, fk_expect, "fk block, s={}", s);
            let q = Scalar::q_pow(1);
            let qinv = Scalar::q_pow(-1);
            let diag = if s == 0 {
                [
                    q.add(&Scalar::one()).neg(),
                    Scalar::from_int(-2),
                    Scalar::one().add(&qinv).neg(),
                ]
            } else {
                [
                    q.sub(&Scalar::one()),
                    Scalar::zero(),
                    qinv.sub(&Scalar::one()),
                ]
            };
            for r in 0..3 {
                for c in 0..3 {
                    let want = if r == c {
                        diag[r].clone()
                    } else {
                        Scalar::zero()
                    };
                    assert_eq!(parts.k_minus_1_part[r][c], want, "k block {},{}", r, c);
                }
            }
        }
    }

    #[test]
    fn symbolic_determinants_of_weight_one_matrices() {
        let q = Scalar::q_pow(1);
        let qinv = Scalar::q_pow(-1);

        let d0 = primitive_det_symbolic(Side::Right, h("1"), 0).unwrap();
        let c0 = Scalar::from_int(-2)
            .mul(&Scalar::one().add(&q).pow(2).unwrap())
            .mul(&qinv);
        let expect0 = SymRat::from_poly(SymPoly::var(2).pow(3).scale(&c0));
        assert!(d0.eq_rat(&expect0), "twist 0: got {}", d0);

        let d1 = primitive_det_symbolic(Side::Right, h("1"), 1).unwrap();
        let c1 = Scalar::from_int(2).mul(&q.sub(&Scalar::one())).mul(&qinv);
        let abg = SymPoly::var(0).mul(&SymPoly::var(1)).mul(&SymPoly::var(2));
        let expect1 = SymRat::from_poly(abg.scale(&c1));
        assert!(d1.eq_rat(&expect1), "twist 1: got {}", d1);

        // Specializing the symbols matches the concrete matrix determinant.
        let (av, bv, gv) = (Scalar::t_pow(2), Scalar::from_int(3), Scalar::t_pow(-1));
        let concrete =
            primitive_action_matrix(Side::Right, &av, &bv, &gv, h("1"), 1).unwrap();
        let dc = crate::linalg::det(&concrete).unwrap();
        assert_eq!(d1.eval([&av, &bv, &gv]).unwrap(), dc);
    }
}

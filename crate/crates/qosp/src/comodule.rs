//! Irreducible comodules of the matrix algebra and their matrix elements.
//!
//! For each l in (1/2)Z_{>=0} the span of { a^(l-i) c^(l+i) } (right
//! version) or { a^(l-j) b^(l+j) } (left version) carries an irreducible
//! comodule of dimension 2l + 1.  The normalized bases are
//!   xi_i  = i^floor((l+i)/2) [2l; l+i]^(1/2) a^(l-i) c^(l+i),
//!   eta_j = i^floor((l+j)/2) [2l; l+j]^(1/2) a^(l-j) b^(l+j),
//! with Gauss binomials at base t^-2 and i ranging over -l..l in integer
//! steps.  The matrix elements m_ij defined by
//!   D(xi_i sigma^s) = sum_j m_ij sigma^s (x) xi_j sigma^s
//! have closed forms built from little q-Jacobi polynomials in the
//! central-ish variable zeta = t b c sigma, in four overlapping index
//! regions.  The same m_ij satisfy
//!   D(eta_i sigma^s) = sum_j eta_j sigma^s (x) m_ji sigma^s.

use crate::algebra::a::AMono;
use crate::algebra::tensor::tensor_of;
use crate::algebra::{AElement, ATensor};
use crate::error::{Error, Result};
use crate::hopf::coproduct_a;
use crate::half::Half;
use crate::qpoly::{gauss_binomial, little_q_jacobi};
use crate::scalar::Scalar;

pub(crate) fn i_pow(k: i64) -> Scalar {
    match k.rem_euclid(4) {
        0 => Scalar::one(),
        1 => Scalar::i(),
        2 => Scalar::from_int(-1),
        _ => Scalar::i().neg(),
    }
}

fn check_index(l: Half, i: Half) -> Result<()> {
    if l.is_negative() {
        return Err(Error::InvalidArgument(format!("negative weight {}", l)));
    }
    if !(l + i).is_integer() || i.abs() > l {
        return Err(Error::InvalidArgument(format!(
            "index {} out of range for weight {}",
            i, l
        )));
    }
    Ok(())
}

/// Square root of the Gauss binomial at base t^-2; always representable.
fn binom_sqrt(m: i64, n: i64) -> Scalar {
    gauss_binomial(m as u32, n as u32, &Scalar::t_pow(-2))
        .sqrt()
        .expect("binomial admits a square root")
}

/// Basis vector of the right comodule, a power of c times a power of a.
pub fn xi(l: Half, i: Half, s: u8) -> Result<AElement> {
    check_index(l, i)?;
    let lpi = (l + i).integer().unwrap();
    let lmi = (l - i).integer().unwrap();
    let coeff = i_pow(lpi.div_euclid(2)).mul(&binom_sqrt(lpi + lmi, lpi));
    Ok(AElement::from_mono_scaled(
        AMono::new(lmi as u32, 0, lpi as u32, 0, s % 2),
        coeff,
    ))
}

/// Basis vector of the left comodule, a power of b times a power of a.
pub fn eta(l: Half, j: Half, s: u8) -> Result<AElement> {
    check_index(l, j)?;
    let lpj = (l + j).integer().unwrap();
    let lmj = (l - j).integer().unwrap();
    let coeff = i_pow(lpj.div_euclid(2)).mul(&binom_sqrt(lpj + lmj, lpj));
    Ok(AElement::from_mono_scaled(
        AMono::new(lmj as u32, lpj as u32, 0, 0, s % 2),
        coeff,
    ))
}

/// Normalization scalar shared by the four matrix-element formulas;
/// requires i >= j.
pub fn n_coeff(l: Half, i: Half, j: Half) -> Result<Scalar> {
    check_index(l, i)?;
    check_index(l, j)?;
    let imj = (i - j).integer().ok_or_else(|| {
        Error::InvalidArgument("indices in different cosets".into())
    })?;
    if imj < 0 {
        return Err(Error::InvalidArgument(
            "normalization needs i >= j".into(),
        ));
    }
    let lpi = (l + i).integer().unwrap();
    let lpj = (l + j).integer().unwrap();
    let lmj = (l - j).integer().unwrap();
    Ok(i_pow(lpi.div_euclid(2) - lpj.div_euclid(2))
        .mul(&Scalar::t_pow(lpj * imj))
        .mul(&binom_sqrt(lpi, imj))
        .mul(&binom_sqrt(lmj, imj)))
}

/// The variable of the little q-Jacobi polynomials.
pub fn zeta() -> AElement {
    AElement::from_mono_scaled(AMono::new(0, 1, 1, 0, 1), Scalar::t_pow(1))
}

fn zeta_power_series(coeffs: &[Scalar]) -> AElement {
    let z = zeta();
    let mut acc = AElement::zero();
    let mut zp = AElement::one();
    for c in coeffs {
        acc = acc.add(&zp.scale(c));
        zp = zp.mul(&z);
    }
    acc
}

/// Matrix element m_ij of the weight-l comodule (no sigma twist).
pub fn matrix_element(l: Half, i: Half, j: Half) -> Result<AElement> {
    check_index(l, i)?;
    check_index(l, j)?;
    if !(i - j).is_integer() {
        return Err(Error::InvalidArgument(
            "matrix element needs indices in the same coset".into(),
        ));
    }
    let base = Scalar::t_pow(-2);
    let ipj = i + j;
    let imj = (i - j).integer().unwrap();
    let result = if ipj.twice() <= 0 {
        if imj >= 0 {
            // a-c region, polynomial on the right
            let n = (l + j).integer().unwrap();
            let mij = (-ipj).integer().unwrap();
            let mono = AElement::from_mono(AMono::new(
                mij as u32,
                0,
                imj as u32,
                0,
                (n % 2) as u8,
            ));
            let p = little_q_jacobi(n as u32, imj as u32, mij as u32, &base);
            mono.scale(&n_coeff(l, i, j)?).mul(&zeta_power_series(&p))
        } else {
            // a-b region, polynomial on the right; the sign is the cost
            // of carrying sigma^(l+i) through b^(j-i)
            let n = (l + i).integer().unwrap();
            let jmi = -imj;
            let mij = (-ipj).integer().unwrap();
            let mono = AElement::from_mono(AMono::new(
                mij as u32,
                jmi as u32,
                0,
                0,
                (n % 2) as u8,
            ));
            let sign = if (n * jmi) % 2 == 0 {
                Scalar::one()
            } else {
                Scalar::from_int(-1)
            };
            let p = little_q_jacobi(n as u32, jmi as u32, mij as u32, &base);
            mono.scale(&sign.mul(&n_coeff(l, j, i)?))
                .mul(&zeta_power_series(&p))
        }
    } else if imj <= 0 {
        // b-d region, polynomial on the left; the unit depends on the
        // parity class of the weight
        let n = (l - j).integer().unwrap();
        let jmi = -imj;
        let pij = ipj.integer().unwrap();
        let mono = AElement::from_mono(AMono::new(
            0,
            jmi as u32,
            0,
            pij as u32,
            (n % 2) as u8,
        ));
        let unit = if l.is_integer() {
            // (-1)^floor(jmi/2) (-i)^jmi
            i_pow(2 * jmi.div_euclid(2) - jmi)
        } else {
            // sigma^(l-j) carried through b^(j-i)
            i_pow(2 * ((n * jmi) % 2))
        };
        let p = little_q_jacobi(n as u32, jmi as u32, pij as u32, &base);
        zeta_power_series(&p)
            .scale(&unit.mul(&n_coeff(l, -i, -j)?))
            .mul(&mono)
    } else {
        // c-d region, polynomial on the left; an extra unit appears when
        // i-j and i+j are both odd
        let n = (l - i).integer().unwrap();
        let pij = ipj.integer().unwrap();
        let mono = AElement::from_mono(AMono::new(
            0,
            0,
            imj as u32,
            pij as u32,
            (n % 2) as u8,
        ));
        let unit = if imj % 2 == 1 && pij % 2 == 1 {
            i_pow(1 + 2 * n)
        } else {
            Scalar::one()
        };
        let p = little_q_jacobi(n as u32, imj as u32, pij as u32, &base);
        zeta_power_series(&p)
            .scale(&unit.mul(&n_coeff(l, -j, -i)?))
            .mul(&mono)
    };
    Ok(result)
}

/// Row i of the matrix-element table read off the coproduct itself:
/// group the terms of D(xi_i sigma^s) by their right tensor leg, which
/// must be one of the xi_j sigma^s monomials, and divide out the basis
/// normalization.  Serves as the ground truth the closed form is held to.
pub fn matrix_row_from_coaction(l: Half, i: Half, s: u8) -> Result<Vec<AElement>> {
    let dx = crate::hopf::coproduct_a(&xi(l, i, s)?);
    let idx = Half::range_sym(l);
    let basis: Vec<(AMono, Scalar)> = idx
        .iter()
        .map(|&j| {
            let x = xi(l, j, s)?;
            let (m, c) = x.terms().next().unwrap();
            Ok((m.clone(), c.inv().unwrap()))
        })
        .collect::<Result<_>>()?;
    let mut rows = vec![AElement::zero(); idx.len()];
    'terms: for (tm, c) in dx.terms() {
        for (pos, (bm, binv)) in basis.iter().enumerate() {
            if tm.r == *bm {
                rows[pos].add_term(tm.l.clone(), c.mul(binv));
                continue 'terms;
            }
        }
        return Err(Error::InvalidArgument(format!(
            "coaction term outside the basis span: {}",
            tm.r
        )));
    }
    Ok(rows)
}

/// m_ij multiplied by sigma^s.
pub fn matrix_element_s(l: Half, i: Half, j: Half, s: u8) -> Result<AElement> {
    let m = matrix_element(l, i, j)?;
    if s % 2 == 0 {
        Ok(m)
    } else {
        Ok(m.mul(&crate::algebra::a::gen_sigma()))
    }
}

/// All matrix elements of weight l, rows and columns ascending in the index.
pub fn matrix_element_table(l: Half) -> Result<Vec<Vec<AElement>>> {
    let idx = Half::range_sym(l);
    idx.iter()
        .map(|&i| idx.iter().map(|&j| matrix_element(l, i, j)).collect())
        .collect()
}

/// Weights 0, 1/2, ..., l_max in ascending order.
pub fn weight_steps(l_max: Half) -> Vec<Half> {
    (0..=l_max.twice()).map(Half::from_twice).collect()
}

/// Coordinates of an element on the basis {m^(l)_ij sigma^s} for one (l, s):
/// nonzero entries only, indices ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentCoords {
    pub l: Half,
    pub s: u8,
    pub coords: Vec<(Half, Half, Scalar)>,
}

/// Expresses x exactly in the span of the matrix elements of weight at most
/// l_max, both sigma-twists. The basis entries are linearly independent, so
/// the coordinates are unique; an x outside the span is an error carrying
/// the residual.
pub fn decompose(x: &AElement, l_max: Half) -> Result<Vec<ComponentCoords>> {
    let mut labels: Vec<(Half, u8, Half, Half)> = Vec::new();
    let mut basis: Vec<AElement> = Vec::new();
    for &l in &weight_steps(l_max) {
        for s in 0..=1u8 {
            for &i in &Half::range_sym(l) {
                for &j in &Half::range_sym(l) {
                    labels.push((l, s, i, j));
                    basis.push(matrix_element_s(l, i, j, s)?);
                }
            }
        }
    }
    let mut mono_index: std::collections::BTreeMap<AMono, usize> = Default::default();
    for el in basis.iter().chain(std::iter::once(x)) {
        for (m, _) in el.terms() {
            let next = mono_index.len();
            mono_index.entry(m.clone()).or_insert(next);
        }
    }
    let rows = mono_index.len();
    let mut mat = vec![vec![Scalar::zero(); basis.len()]; rows];
    for (col, el) in basis.iter().enumerate() {
        for (m, c) in el.terms() {
            mat[mono_index[m]][col] = c.clone();
        }
    }
    let mut rhs = vec![Scalar::zero(); rows];
    for (m, c) in x.terms() {
        rhs[mono_index[m]] = c.clone();
    }
    let (y, residual) = crate::linalg::solve_with_residual(&mat, &rhs)?;
    if residual.iter().any(|r| !r.is_zero()) {
        let mut rem = AElement::zero();
        for (m, &pos) in &mono_index {
            if !residual[pos].is_zero() {
                rem.add_term(m.clone(), residual[pos].clone());
            }
        }
        return Err(Error::NoSolution(format!(
            "element lies outside the weight-{} span; residual {}",
            l_max, rem
        )));
    }
    let mut out: Vec<ComponentCoords> = Vec::new();
    for (label, c) in labels.iter().zip(&y) {
        if c.is_zero() {
            continue;
        }
        let &(l, s, i, j) = label;
        match out.last_mut() {
            Some(comp) if comp.l == l && comp.s == s => comp.coords.push((i, j, c.clone())),
            _ => out.push(ComponentCoords {
                l,
                s,
                coords: vec![(i, j, c.clone())],
            }),
        }
    }
    Ok(out)
}

/// Rebuilds the element a coordinate list stands for.
pub fn reconstruct(components: &[ComponentCoords]) -> Result<AElement> {
    let mut acc = AElement::zero();
    for comp in components {
        for (i, j, c) in &comp.coords {
            acc = acc.add(&matrix_element_s(comp.l, *i, *j, comp.s)?.scale(c));
        }
    }
    Ok(acc)
}

/// Identities tying the matrix-element table to the coproduct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComoduleLaw {
    /// D(xi_i s^s) = sum_j m_ij s^s (x) xi_j s^s
    RightCoaction,
    /// D(eta_i s^s) = sum_j eta_j s^s (x) m_ji s^s
    LeftCoaction,
    /// D(m_ij s^s) = sum_k m_ik s^s (x) m_kj s^s
    MatrixComultiplication,
}

/// Expected-zero differences of the chosen law at weight l and twist s,
/// one per basis index (or index pair). All-zero output is the pass.
pub fn comodule_law_residues(l: Half, s: u8, law: ComoduleLaw) -> Result<Vec<ATensor>> {
    let idx = Half::range_sym(l);
    let table: Vec<Vec<AElement>> = idx
        .iter()
        .map(|&i| {
            idx.iter()
                .map(|&j| matrix_element_s(l, i, j, s))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut residues = Vec::new();
    match law {
        ComoduleLaw::RightCoaction => {
            for (pi, &i) in idx.iter().enumerate() {
                let mut rhs = ATensor::zero();
                for (pj, &j) in idx.iter().enumerate() {
                    rhs = rhs.add(&tensor_of(&table[pi][pj], &xi(l, j, s)?));
                }
                residues.push(coproduct_a(&xi(l, i, s)?).sub(&rhs));
            }
        }
        ComoduleLaw::LeftCoaction => {
            for (pi, &i) in idx.iter().enumerate() {
                let mut rhs = ATensor::zero();
                for (pj, &j) in idx.iter().enumerate() {
                    rhs = rhs.add(&tensor_of(&eta(l, j, s)?, &table[pj][pi]));
                }
                residues.push(coproduct_a(&eta(l, i, s)?).sub(&rhs));
            }
        }
        ComoduleLaw::MatrixComultiplication => {
            for pi in 0..idx.len() {
                for pj in 0..idx.len() {
                    let mut rhs = ATensor::zero();
                    for pk in 0..idx.len() {
                        rhs = rhs.add(&tensor_of(&table[pi][pk], &table[pk][pj]));
                    }
                    residues.push(coproduct_a(&table[pi][pj]).sub(&rhs));
                }
            }
        }
    }
    Ok(residues)
}

//! q-Pochhammer symbols, Gauss binomials, terminating basic
//! hypergeometric series, and the three orthogonal polynomial families
//! the spherical theory identifies.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// (a; base)_n = prod_{j=0}^{n-1} (1 - a base^j).
pub fn q_pochhammer(a: &Scalar, base: &Scalar, n: u32) -> Scalar {
    let mut acc = Scalar::one();
    let mut apow = a.clone();
    for _ in 0..n {
        acc = acc.mul(&Scalar::one().sub(&apow));
        apow = apow.mul(base);
    }
    acc
}

/// Canonical square root of the whole Pochhammer product.
pub fn q_pochhammer_sqrt(a: &Scalar, base: &Scalar, n: u32) -> Result<Scalar> {
    q_pochhammer(a, base, n).sqrt()
}

/// Product of the square roots of the individual Pochhammer factors.
/// Differs from [`q_pochhammer_sqrt`] by at most a fourth root of unity.
pub fn q_pochhammer_sqrt_factorwise(a: &Scalar, base: &Scalar, n: u32) -> Result<Scalar> {
    let mut acc = Scalar::one();
    let mut apow = a.clone();
    for _ in 0..n {
        acc = acc.mul(&Scalar::one().sub(&apow).sqrt()?);
        apow = apow.mul(base);
    }
    Ok(acc)
}

/// Gauss binomial [m; n] at the given base; zero outside 0 <= n <= m.
pub fn gauss_binomial(m: u32, n: u32, base: &Scalar) -> Scalar {
    if n > m {
        return Scalar::zero();
    }
    // (base^(m-n+1); base)_n / (base; base)_n
    let num = q_pochhammer(
        &base.pow((m - n + 1) as i64).expect("base invertible"),
        base,
        n,
    );
    let den = q_pochhammer(base, base, n);
    num.mul(&den.inv().expect("Gauss binomial denominator vanishes"))
}

/// Terminating basic hypergeometric series
///   sum_r  prod(upper;b)_r / prod(lower;b)_r
///          * ((-1)^r b^(r(r-1)/2))^(1 + #lower - #upper) * z^r / (b;b)_r.
/// Stops at the first vanishing term; errors when no upper parameter
/// truncates the sum and no explicit cap is given.
pub fn basic_hypergeometric(
    upper: &[Scalar],
    lower: &[Scalar],
    base: &Scalar,
    z: &Scalar,
    nmax: Option<u32>,
) -> Result<Scalar> {
    let hard_cap = 10_000u32;
    let cap = nmax.unwrap_or(hard_cap);
    let mut acc = Scalar::zero();
    let mut term = Scalar::one();
    let exp_extra = 1 + lower.len() as i64 - upper.len() as i64;
    let mut upow: Vec<Scalar> = upper.to_vec();
    let mut lpow: Vec<Scalar> = lower.to_vec();
    let mut bpow = base.clone(); // base^(r+1) factor source for (b;b)_r
    let mut r = 0u32;
    loop {
        acc = acc.add(&term.mul(&z.pow(r as i64).expect("z invertible or nonneg power")));
        if r >= cap {
            if nmax.is_none() {
                return Err(Error::NonTerminating);
            }
            break;
        }
        // advance term from index r to r+1
        let mut factor = Scalar::one();
        for u in upow.iter_mut() {
            factor = factor.mul(&Scalar::one().sub(u));
            *u = u.mul(base);
        }
        if exp_extra != 0 {
            // ((-1) b^r)^exp_extra
            let unit = Scalar::from_int(-1).mul(&base.pow(r as i64).unwrap());
            factor = factor.mul(&unit.pow(exp_extra).map_err(|_| Error::DivisionByZero)?);
        }
        let mut denf = Scalar::one().sub(&bpow); // (1 - b^(r+1))
        bpow = bpow.mul(base);
        for l in lpow.iter_mut() {
            denf = denf.mul(&Scalar::one().sub(l));
            *l = l.mul(base);
        }
        if denf.is_zero() {
            return Err(Error::DivisionByZero);
        }
        term = term.mul(&factor).mul(&denf.inv().unwrap());
        if term.is_zero() {
            break;
        }
        r += 1;
    }
    Ok(acc)
}

/// Little q-Jacobi polynomial coefficients: P_n^(alpha,beta)(z; b) =
/// sum_r (b^-n;b)_r (b^(alpha+beta+n+1);b)_r / ((b;b)_r (b^(alpha+1);b)_r) (b z)^r,
/// returned as the coefficient of z^r at index r.
pub fn little_q_jacobi(n: u32, alpha: u32, beta: u32, base: &Scalar) -> Vec<Scalar> {
    let bn = base.pow(-(n as i64)).expect("base invertible");
    let bab = base
        .pow((alpha + beta + n + 1) as i64)
        .expect("base invertible");
    let ba1 = base.pow((alpha + 1) as i64).expect("base invertible");
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for r in 0..=n {
        let num = q_pochhammer(&bn, base, r).mul(&q_pochhammer(&bab, base, r));
        let den = q_pochhammer(base, base, r).mul(&q_pochhammer(&ba1, base, r));
        let c = num
            .mul(&den.inv().expect("little q-Jacobi denominator vanishes"))
            .mul(&base.pow(r as i64).unwrap());
        coeffs.push(c);
    }
    coeffs
}

/// Evaluate a coefficient vector at a scalar argument.
pub fn eval_poly(coeffs: &[Scalar], z: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Dual q-Krawtchouk value R_n(i, N | b) =
/// 3phi2(b^-n, b^-i lam, -b^i lam; 0, b^-N; b, b) with lam = b^-N ... here in
/// the self-dual normalization used by the eigenvector formulas:
/// upper parameters b^-n, b^(-i-N/2) style are passed by the caller.
pub fn phi32(upper: [Scalar; 3], lower: [Scalar; 2], base: &Scalar, z: &Scalar) -> Result<Scalar> {
    basic_hypergeometric(&upper, &lower, base, z, None)
}

/// 4phi3 with all parameters explicit.
pub fn phi43(upper: [Scalar; 4], lower: [Scalar; 3], base: &Scalar, z: &Scalar) -> Result<Scalar> {
    basic_hypergeometric(&upper, &lower, base, z, None)
}

/// Askey-Wilson polynomial value p_n((z + 1/z)/2; a,b,c,d | q) =
/// a^-n (ab;q)_n (ac;q)_n (ad;q)_n
///   * 4phi3(q^-n, q^(n-1)abcd, az, a/z; ab, ac, ad; q, q).
pub fn askey_wilson(
    n: u32,
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
    base: &Scalar,
    z: &Scalar,
) -> Result<Scalar> {
    let ab = a.mul(b);
    let ac = a.mul(c);
    let ad = a.mul(d);
    let abcd = ab.mul(&c.mul(d));
    let prefix = a
        .pow(-(n as i64))?
        .mul(&q_pochhammer(&ab, base, n))
        .mul(&q_pochhammer(&ac, base, n))
        .mul(&q_pochhammer(&ad, base, n));
    let series = phi43(
        [
            base.pow(-(n as i64))?,
            base.pow(n as i64 - 1)?.mul(&abcd),
            a.mul(z),
            a.mul(&z.inv()?),
        ],
        [ab, ac, ad],
        base,
        base,
    )?;
    Ok(prefix.mul(&series))
}

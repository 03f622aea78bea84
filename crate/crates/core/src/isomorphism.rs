//! Basis transport and isomorphism verification.
//!
//! Only verification lives here: given a candidate linear map, check the
//! homomorphism equations on basis pairs. Searching for isomorphisms
//! between arbitrary algebras is nonlinear and out of scope; every
//! isomorphism claim handled by this crate comes with an explicit witness
//! matrix, either published or constructed from a scaling.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::families::{GammaVector, RMu1Params, RMu2Params};
use crate::matrix::Matrix;
use crate::scalar::{int, nth_root_exact, pow_scalar, Scalar};

/// Structure constants transported along an invertible P, with row i of P
/// holding the coordinates of the new basis vector b'_i in the old basis:
/// the new constants satisfy [P(b_i), P(b_j)] = sum_k c'_{ij}^k P(b_k),
/// so P is an isomorphism from the transported algebra onto the original.
pub fn transport(alg: &Algebra, p: &Matrix) -> Result<Algebra> {
    let n = alg.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p.rows(),
        });
    }
    let p_inv = p.inverse()?;
    let mut out = Algebra::new(n, alg.labels().to_vec());
    for i in 0..n {
        for j in 0..n {
            let prod = alg.bracket(p.row(i), p.row(j))?;
            // coordinates w.r.t. the rows of P: solve w * P = prod
            let coords = p_inv.apply(&prod)?;
            let sparse: Vec<(usize, Scalar)> = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect();
            if !sparse.is_empty() {
                out.set_bracket(i, j, sparse);
            }
        }
    }
    Ok(out)
}

/// Does the linear map with matrix P (row i = image of the i-th basis
/// vector of A in B's coordinates) satisfy P([x,y]_A) = [P(x),P(y)]_B on
/// all basis pairs? Returns the first violating pair otherwise.
pub fn is_homomorphism(
    a: &Algebra,
    b: &Algebra,
    p: &Matrix,
) -> Result<(bool, Option<(usize, usize)>)> {
    if p.rows() != a.dim() || p.cols() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: p.rows(),
        });
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = p.apply(&crate::scalar::sparse_to_dense(
                a.dim(),
                &a.basis_bracket(i, j),
            ))?;
            let rhs = b.bracket(p.row(i), p.row(j))?;
            if lhs != rhs {
                return Ok((false, Some((i, j))));
            }
        }
    }
    Ok((true, None))
}

pub fn is_isomorphism(a: &Algebra, b: &Algebra, p: &Matrix) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if p.inverse().is_err() {
        return Ok(false);
    }
    Ok(is_homomorphism(a, b, p)?.0)
}

/// The published change of basis taking the convenient form of mu3(n,k)
/// onto the original form: rows are the images of the convenient basis
/// (e'_1 = f_{k+1}, e'_2 = e_1 - f_{k+1}, e'_{i+1} = e_i, f'_j = f_j,
/// f'_{k+j} = f_{k+1+j}) in the original basis coordinates.
pub fn mu3_change_of_basis(n: usize, k: usize) -> Matrix {
    let m_orig = n - 2 * k - 1; // e-count of the original basis
    let e = |i: usize| i - 1;
    let f = |j: usize| m_orig + j - 1;
    let mut p = Matrix::zero(n, n);
    let mut row = 0;
    // e'_1 = f_{k+1}
    p.set(row, f(k + 1), int(1));
    row += 1;
    // e'_2 = e_1 - f_{k+1}
    p.set(row, e(1), int(1));
    p.set(row, f(k + 1), int(-1));
    row += 1;
    // e'_{i+1} = e_i for 2 <= i <= n-2k-1
    for i in 2..=m_orig {
        p.set(row, e(i), int(1));
        row += 1;
    }
    // f'_j = f_j for 1 <= j <= k
    for j in 1..=k {
        p.set(row, f(j), int(1));
        row += 1;
    }
    // f'_{k+j} = f_{k+1+j} for 1 <= j <= k
    for j in 1..=k {
        p.set(row, f(k + 1 + j), int(1));
        row += 1;
    }
    debug_assert_eq!(row, n);
    p
}

/// The automorphism family of L(gamma): f_i -> alpha_i f_i and
/// x_i -> beta_i f_i + x_i. It is an automorphism precisely when every
/// alpha_i is nonzero and (1 + gamma_i) beta_i = 0; callers verify via
/// `is_isomorphism`.
pub fn l_gamma_automorphism(gamma: &GammaVector, alphas: &[Scalar], betas: &[Scalar]) -> Matrix {
    let k = gamma.len();
    assert_eq!(alphas.len(), k);
    assert_eq!(betas.len(), k);
    let mut p = Matrix::zero(2 * k, 2 * k);
    for i in 0..k {
        p.set(i, i, alphas[i].clone());
        p.set(k + i, i, betas[i].clone());
        p.set(k + i, k + i, Scalar::one());
    }
    p
}

/// Scaling action on R(mu1,k) parameters: a_{i,j} -> a_{i,j}/A^{i-1},
/// phi_{i,j} -> phi_{i,j}/A, delta_{i,j} -> delta_{i,j}/A^{n-2k}.
pub fn scale_params_mu1(p: &RMu1Params, scale: &Scalar) -> Result<RMu1Params> {
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let mut out = p.clone();
    for (row, a_row) in out.a.iter_mut().enumerate() {
        let t = row + 2; // table index of a_{t,j}
        let div = pow_scalar(scale, (t - 1) as i64)?;
        for v in a_row.iter_mut() {
            *v = &*v / &div;
        }
    }
    for row in out.phi.iter_mut() {
        for v in row.iter_mut() {
            *v = &*v / scale;
        }
    }
    let m = out.a.len() + 1; // n - 2k
    let div = pow_scalar(scale, m as i64)?;
    for row in out.delta.iter_mut() {
        for v in row.iter_mut() {
            *v = &*v / &div;
        }
    }
    Ok(out)
}

/// Scaling action on R(mu2,k) parameters: b, beta, phi divide by A and
/// theta divides by A^2.
pub fn scale_params_mu2(p: &RMu2Params, scale: &Scalar) -> Result<RMu2Params> {
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let mut out = p.clone();
    for v in out.b.iter_mut().chain(out.beta.iter_mut()) {
        *v = &*v / scale;
    }
    for row in out.phi.iter_mut() {
        for v in row.iter_mut() {
            *v = &*v / scale;
        }
    }
    let sq = scale * scale;
    for row in out.theta.iter_mut() {
        for v in row.iter_mut() {
            *v = &*v / &sq;
        }
    }
    Ok(out)
}

/// Witness basis change for the mu1 scaling: e_i -> A^i e_i, f_i -> f_i,
/// f_{k+i} -> A f_{k+i}, x_i -> x_i, mapping R(mu1,k)(scaled params) onto
/// R(mu1,k)(original params). Free parameters of the general change are
/// set to zero. Returns the matrix and the verified verdict.
pub fn witness_isomorphism_mu1(
    n: usize,
    k: usize,
    p: &RMu1Params,
    scale: &Scalar,
) -> Result<(Matrix, bool)> {
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let original = crate::families::make_r_mu1(n, k, p)?;
    let scaled = crate::families::make_r_mu1(n, k, &scale_params_mu1(p, scale)?)?;
    let m = n - 2 * k;
    let dim = n + k;
    let mut w = Matrix::zero(dim, dim);
    for i in 0..m {
        w.set(i, i, pow_scalar(scale, (i + 1) as i64)?);
    }
    for i in 0..k {
        w.set(m + i, m + i, Scalar::one());
        w.set(m + k + i, m + k + i, scale.clone());
        w.set(m + 2 * k + i, m + 2 * k + i, Scalar::one());
    }
    let ok = is_isomorphism(&scaled, &original, &w)?;
    Ok((w, ok))
}

/// Witness basis change for the mu2 scaling: e_i -> A^i e_i, f_1 -> A f_1,
/// f_j -> f_j (j >= 2), f_{k+1} -> A^2 f_{k+1}, f_{k+j} -> A f_{k+j}
/// (j >= 2), x_i -> x_i.
pub fn witness_isomorphism_mu2(
    n: usize,
    k: usize,
    p: &RMu2Params,
    scale: &Scalar,
) -> Result<(Matrix, bool)> {
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let original = crate::families::make_r_mu2(n, k, p)?;
    let scaled = crate::families::make_r_mu2(n, k, &scale_params_mu2(p, scale)?)?;
    let m = n - 2 * k;
    let dim = n + k;
    let mut w = Matrix::zero(dim, dim);
    for i in 0..m {
        w.set(i, i, pow_scalar(scale, (i + 1) as i64)?);
    }
    w.set(m, m, scale.clone());
    for j in 1..k {
        w.set(m + j, m + j, Scalar::one());
    }
    w.set(m + k, m + k, scale * scale);
    for j in 1..k {
        w.set(m + k + j, m + k + j, scale.clone());
    }
    for i in 0..k {
        w.set(m + 2 * k + i, m + 2 * k + i, Scalar::one());
    }
    let ok = is_isomorphism(&scaled, &original, &w)?;
    Ok((w, ok))
}

#[derive(Debug, Clone, PartialEq)]
pub enum CanonicalOutcome {
    AllZero,
    Normalized { scale: Scalar },
    /// The leading parameter sits in a slot of weight > 1 whose exact root
    /// does not exist over ℚ and no weight-1 slot is available; the orbit
    /// has no rational representative with leading entry 1.
    IrrationalRootOrbit,
}

/// Orbit representative of mu1 parameters under the scaling action, in a
/// fixed scan order (a row-major, then phi, then delta). The first
/// nonzero parameter is normalized to 1 when its weight-w root exists in
/// ℚ; otherwise the first nonzero weight-1 slot is normalized instead.
pub fn canonical_scaling_form_mu1(p: &RMu1Params) -> Result<(RMu1Params, CanonicalOutcome)> {
    let mut slots: Vec<(Scalar, u32)> = Vec::new();
    for (row, a_row) in p.a.iter().enumerate() {
        for v in a_row {
            slots.push((v.clone(), (row + 1) as u32)); // weight t-1
        }
    }
    for row in &p.phi {
        for v in row {
            slots.push((v.clone(), 1));
        }
    }
    let m = p.a.len() + 1;
    for row in &p.delta {
        for v in row {
            slots.push((v.clone(), m as u32));
        }
    }
    match pick_scale(&slots) {
        Pick::AllZero => Ok((p.clone(), CanonicalOutcome::AllZero)),
        Pick::Scale(s) => Ok((
            scale_params_mu1(p, &s)?,
            CanonicalOutcome::Normalized { scale: s },
        )),
        Pick::Irrational => Ok((p.clone(), CanonicalOutcome::IrrationalRootOrbit)),
    }
}

/// Orbit representative of mu2 parameters; all slots have weight 1 except
/// theta (weight 2), so a rational representative always exists.
pub fn canonical_scaling_form_mu2(p: &RMu2Params) -> Result<(RMu2Params, CanonicalOutcome)> {
    let mut slots: Vec<(Scalar, u32)> = Vec::new();
    for v in p.b.iter().chain(p.beta.iter()) {
        slots.push((v.clone(), 1));
    }
    for row in &p.phi {
        for v in row {
            slots.push((v.clone(), 1));
        }
    }
    for row in &p.theta {
        for v in row {
            slots.push((v.clone(), 2));
        }
    }
    match pick_scale(&slots) {
        Pick::AllZero => Ok((p.clone(), CanonicalOutcome::AllZero)),
        Pick::Scale(s) => Ok((
            scale_params_mu2(p, &s)?,
            CanonicalOutcome::Normalized { scale: s },
        )),
        Pick::Irrational => Ok((p.clone(), CanonicalOutcome::IrrationalRootOrbit)),
    }
}

enum Pick {
    AllZero,
    Scale(Scalar),
    Irrational,
}

fn pick_scale(slots: &[(Scalar, u32)]) -> Pick {
    let Some((value, weight)) = slots.iter().find(|(v, _)| !v.is_zero()) else {
        return Pick::AllZero;
    };
    if let Some(root) = nth_root_exact(value, *weight) {
        return Pick::Scale(root);
    }
    // fall back to the first nonzero weight-1 slot
    match slots.iter().find(|(v, w)| *w == 1 && !v.is_zero()) {
        Some((v, _)) => Pick::Scale(v.clone()),
        None => Pick::Irrational,
    }
}

//! Second cohomology with adjoint coefficients.
//!
//! A 2-cochain is a bilinear map L x L -> L, stored by its values on
//! ordered basis pairs. ZL^2 is the nullspace of the coboundary identity
//! over the n^3 coefficient unknowns (n^4 scalar equations, streamed
//! through the sparse eliminator); BL^2 is the span of the coboundaries
//! psi_d over the n^2 matrix units d. HL^2 = 0 is the rigidity criterion.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Element, SparseElem};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{is_zero_vec, sparse_to_dense, unit_vec, zero_vec, Scalar};
use crate::solve::Eliminator;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cochain2 {
    n: usize,
    values: BTreeMap<(usize, usize), SparseElem>,
}

impl Cochain2 {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize, value: SparseElem) {
        assert!(i < self.n && j < self.n, "pair index out of range");
        let mut v = value;
        v.retain(|(_, c)| !c.is_zero());
        v.sort_by_key(|(k, _)| *k);
        assert!(v.iter().all(|(k, _)| *k < self.n), "value index out of range");
        if v.is_empty() {
            self.values.remove(&(i, j));
        } else {
            self.values.insert((i, j), v);
        }
    }

    pub fn value(&self, i: usize, j: usize) -> SparseElem {
        self.values.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &SparseElem)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Bilinear evaluation on arbitrary elements.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let mut out = zero_vec(self.n);
        for ((i, j), v) in &self.values {
            if x[*i].is_zero() || y[*j].is_zero() {
                continue;
            }
            let c = &x[*i] * &y[*j];
            for (k, coeff) in v {
                out[*k] += &c * coeff;
            }
        }
        out
    }

    /// Flattened coordinates in ℚ^(n^3), pair-major: (i,j,k) -> (i n + j) n + k.
    pub fn flatten_sparse(&self) -> Vec<(usize, Scalar)> {
        let n = self.n;
        let mut out = Vec::new();
        for ((i, j), v) in &self.values {
            for (k, c) in v {
                out.push(((i * n + j) * n + k, c.clone()));
            }
        }
        out
    }

    pub fn from_flat_sparse(n: usize, row: &[(usize, Scalar)]) -> Self {
        let mut values: BTreeMap<(usize, usize), SparseElem> = BTreeMap::new();
        for (idx, c) in row {
            let k = idx % n;
            let j = (idx / n) % n;
            let i = idx / (n * n);
            values.entry((i, j)).or_default().push((k, c.clone()));
        }
        let mut out = Self { n, values };
        for v in out.values.values_mut() {
            v.sort_by_key(|(k, _)| *k);
        }
        out
    }

    /// The bracket itself as a cochain.
    pub fn from_bracket(alg: &Algebra) -> Self {
        let mut out = Self::zero(alg.dim());
        for ((i, j), v) in alg.brackets() {
            out.set(*i, *j, v.clone());
        }
        out
    }

    /// Document form mirroring the algebra bracket entries (1-based).
    pub fn to_doc(&self) -> Vec<crate::algebra::BracketDoc> {
        self.values
            .iter()
            .map(|((i, j), v)| crate::algebra::BracketDoc {
                left: i + 1,
                right: j + 1,
                value: v
                    .iter()
                    .map(|(k, c)| ((k + 1).to_string(), c.to_string()))
                    .collect(),
            })
            .collect()
    }
}

/// The coboundary expression whose vanishing on all triples makes phi a
/// 2-cocycle:
/// `[x,phi(y,z)] - [phi(x,y),z] + [phi(x,z),y]
///  + phi(x,[y,z]) - phi([x,y],z) + phi([x,z],y)`.
pub fn cocycle_defect(
    alg: &Algebra,
    phi: &Cochain2,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Element> {
    let n = alg.dim();
    if phi.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: phi.dim(),
        });
    }
    let mut out = alg.bracket(x, &phi.eval(y, z))?;
    let t2 = alg.bracket(&phi.eval(x, y), z)?;
    let t3 = alg.bracket(&phi.eval(x, z), y)?;
    let t4 = phi.eval(x, &alg.bracket(y, z)?);
    let t5 = phi.eval(&alg.bracket(x, y)?, z);
    let t6 = phi.eval(&alg.bracket(x, z)?, y);
    for k in 0..n {
        out[k] = &out[k] - &t2[k] + &t3[k] + &t4[k] - &t5[k] + &t6[k];
    }
    Ok(out)
}

/// Zero defect on every ordered basis triple (complete by trilinearity).
pub fn is_cocycle(alg: &Algebra, phi: &Cochain2) -> Result<bool> {
    let n = alg.dim();
    for i in 0..n {
        let x = unit_vec(n, i);
        for j in 0..n {
            let y = unit_vec(n, j);
            for l in 0..n {
                let z = unit_vec(n, l);
                if !is_zero_vec(&cocycle_defect(alg, phi, &x, &y, &z)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The 2-coboundary of a linear map: psi_d(x,y) = [d(x),y] + [x,d(y)] - d([x,y]).
/// Zero exactly when d is a derivation.
pub fn coboundary_of(alg: &Algebra, d: &Matrix) -> Result<Cochain2> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: d.rows(),
        });
    }
    let mut out = Cochain2::zero(n);
    for i in 0..n {
        let bi = unit_vec(n, i);
        for j in 0..n {
            let bj = unit_vec(n, j);
            let mut v = alg.bracket(d.row(i), &bj)?;
            let t2 = alg.bracket(&bi, d.row(j))?;
            let t3 = d.apply(&sparse_to_dense(n, &alg.basis_bracket(i, j)))?;
            for k in 0..n {
                v[k] = &v[k] + &t2[k] - &t3[k];
            }
            let sparse: SparseElem = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            out.set(i, j, sparse);
        }
    }
    Ok(out)
}

/// Stream the cocycle equations of all basis triples into an eliminator
/// over the n^3 unknowns phi_{ij}^k.
fn cocycle_eliminator(alg: &Algebra) -> Eliminator {
    let n = alg.dim();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    // tensor grouped by left and by right factor
    let mut left: Vec<Vec<(usize, SparseElem)>> = vec![Vec::new(); n];
    let mut right: Vec<Vec<(usize, SparseElem)>> = vec![Vec::new(); n];
    for ((i, j), v) in alg.brackets() {
        left[*i].push((*j, v.clone()));
        right[*j].push((*i, v.clone()));
    }
    let mut el = Eliminator::new();
    for i in 0..n {
        for j in 0..n {
            let cij = alg.basis_bracket(i, j);
            for l in 0..n {
                let mut per_t: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
                // [b_i, phi(b_j,b_l)]: c_{i m}^t phi_{jl}^m
                for (m, vec) in &left[i] {
                    for (t, c) in vec {
                        per_t.entry(*t).or_default().push((idx(j, l, *m), c.clone()));
                    }
                }
                // -[phi(b_i,b_j), b_l]: -c_{m l}^t phi_{ij}^m
                for (m, vec) in &right[l] {
                    for (t, c) in vec {
                        per_t
                            .entry(*t)
                            .or_default()
                            .push((idx(i, j, *m), -c.clone()));
                    }
                }
                // +[phi(b_i,b_l), b_j]: c_{m j}^t phi_{il}^m
                for (m, vec) in &right[j] {
                    for (t, c) in vec {
                        per_t.entry(*t).or_default().push((idx(i, l, *m), c.clone()));
                    }
                }
                // +phi(b_i, [b_j,b_l]): c_{jl}^m phi_{im}^t
                for (m, c) in &alg.basis_bracket(j, l) {
                    for t in 0..n {
                        per_t.entry(t).or_default().push((idx(i, *m, t), c.clone()));
                    }
                }
                // -phi([b_i,b_j], b_l): -c_{ij}^m phi_{ml}^t
                for (m, c) in &cij {
                    for t in 0..n {
                        per_t
                            .entry(t)
                            .or_default()
                            .push((idx(*m, l, t), -c.clone()));
                    }
                }
                // +phi([b_i,b_l], b_j): c_{il}^m phi_{mj}^t
                for (m, c) in &alg.basis_bracket(i, l) {
                    for t in 0..n {
                        per_t.entry(t).or_default().push((idx(*m, j, t), c.clone()));
                    }
                }
                for (_t, terms) in per_t {
                    el.insert_rational(&terms);
                }
            }
        }
    }
    el
}

/// dim ZL^2 without materializing a basis.
pub fn zl2_dim(alg: &Algebra) -> usize {
    let n = alg.dim();
    n * n * n - cocycle_eliminator(alg).rank()
}

/// ZL^2 with a canonical basis.
pub fn zl2(alg: &Algebra) -> (usize, Vec<Cochain2>) {
    let n = alg.dim();
    let el = cocycle_eliminator(alg);
    let basis: Vec<Cochain2> = el
        .nullspace_rows(n * n * n)
        .iter()
        .map(|row| Cochain2::from_flat_sparse(n, row))
        .collect();
    (basis.len(), basis)
}

/// The span of all coboundaries psi_d, materialized from the matrix-unit
/// generators. Returns the eliminator (for membership tests) and the
/// generating cochains that increased its rank.
fn coboundary_span(alg: &Algebra) -> (Eliminator, Vec<Cochain2>) {
    let n = alg.dim();
    let mut el = Eliminator::new();
    let mut basis = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let mut d = Matrix::zero(n, n);
            d.set(u, v, Scalar::one());
            let psi = coboundary_of(alg, &d).expect("matrix unit has the right size");
            if el.insert_rational(&psi.flatten_sparse()) {
                basis.push(psi);
            }
        }
    }
    (el, basis)
}

/// BL^2 with a generating set (one psi_d per rank increase).
pub fn bl2(alg: &Algebra) -> (usize, Vec<Cochain2>) {
    let (el, basis) = coboundary_span(alg);
    (el.rank(), basis)
}

#[derive(Debug, Clone)]
pub struct CohomologyReport {
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_hl2: usize,
    pub rigid: bool,
    /// Representatives of a complement of BL^2 inside ZL^2, produced for
    /// small non-rigid algebras.
    pub witness: Option<Vec<Cochain2>>,
}

/// Ambient size below which hl2 materializes witness cocycles.
const WITNESS_LIMIT: usize = 1_000;

pub fn hl2(alg: &Algebra) -> CohomologyReport {
    let n = alg.dim();
    let dim_z2 = zl2_dim(alg);
    let (b2_el, _) = coboundary_span(alg);
    let dim_b2 = b2_el.rank();
    assert!(dim_b2 <= dim_z2, "coboundaries must be cocycles");
    let dim_hl2 = dim_z2 - dim_b2;
    let witness = if dim_hl2 > 0 && n * n * n <= WITNESS_LIMIT {
        let (_, z_basis) = zl2(alg);
        let mut acc = b2_el;
        let mut picked = Vec::new();
        for z in z_basis {
            if picked.len() == dim_hl2 {
                break;
            }
            if acc.insert_rational(&z.flatten_sparse()) {
                picked.push(z);
            }
        }
        Some(picked)
    } else {
        None
    };
    CohomologyReport {
        dim_z2,
        dim_b2,
        dim_hl2,
        rigid: dim_hl2 == 0,
        witness,
    }
}

pub fn is_cohomologically_rigid(alg: &Algebra) -> bool {
    hl2(alg).rigid
}

// ---- relative cochain families ----

/// The two quotient settings in which the relative cochain bases live.
/// Values of the built cochains land in the one-dimensional ideal spanned
/// by the first basis vector beyond the context algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeContext {
    /// Context R_m with parameters (m, k); extended algebra R_{m+1}.
    Rm { m: usize, k: usize },
    /// Context R_{n-k+m} with parameters (n, k, m), 1 <= m <= k-1;
    /// extended algebra R_{n-k+m+1}.
    Rnkm { n: usize, k: usize, m: usize },
}

/// Generators named by their designated basis pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelativeGenerator {
    /// value on (e_i, f_1)
    ChainF(usize),
    /// value on (e_1, y_1) for R_m, (e_1, y_{m+1}) for R_{n-k+m}
    TopY,
    /// value on (y_i, f_i)
    YF(usize),
    /// value on (y_i, y_{k+1})
    YY(usize),
    /// value on (e_1, f_i), satellites only, 2 <= i <= m+1
    Satellite(usize),
}

impl RelativeContext {
    pub fn base_algebra(&self) -> Result<Algebra> {
        match *self {
            RelativeContext::Rm { m, k } => crate::families::make_rm(m, k),
            RelativeContext::Rnkm { n, k, m } => {
                if m == 1 {
                    crate::families::make_rm(n - k + 1, k)
                } else {
                    crate::families::make_rnkm(n, k, m)
                }
            }
        }
    }

    pub fn extended_algebra(&self) -> Result<Algebra> {
        match *self {
            RelativeContext::Rm { m, k } => crate::families::make_rm(m + 1, k),
            RelativeContext::Rnkm { n, k, m } => crate::families::make_rnkm(n, k, m + 1),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RelativeContext::Rm { m, k } => {
                if m == 0 || k == 0 {
                    return Err(Error::InvalidSpec("Rm context needs m, k >= 1".into()));
                }
            }
            RelativeContext::Rnkm { n, k, m } => {
                if k < 2 || m == 0 || m > k - 1 || n < k + 3 {
                    return Err(Error::InvalidSpec(
                        "Rnkm context needs n >= k+3 and 1 <= m <= k-1".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> Vec<RelativeGenerator> {
        use RelativeGenerator::*;
        let mut out = Vec::new();
        match *self {
            RelativeContext::Rm { m, k } => {
                for i in 1..=m {
                    out.push(ChainF(i));
                }
                out.push(TopY);
                for i in 1..=k {
                    out.push(YF(i));
                }
                for i in 1..=k + 1 {
                    out.push(YY(i));
                }
            }
            RelativeContext::Rnkm { n, k, m } => {
                for i in 1..=n - k {
                    out.push(ChainF(i));
                }
                out.push(TopY);
                for i in 1..=k {
                    out.push(YF(i));
                }
                for i in 1..=k + 1 {
                    out.push(YY(i));
                }
                for i in 2..=m + 1 {
                    out.push(Satellite(i));
                }
            }
        }
        out
    }

    pub fn expected_count(&self) -> usize {
        match *self {
            RelativeContext::Rm { m, k } => m + 2 * k + 2,
            RelativeContext::Rnkm { n, k, m } => n + k + m + 2,
        }
    }

    pub fn generator_name(&self, gen: RelativeGenerator, ext: &Algebra) -> String {
        let (i, j) = self.designated_pair(gen, ext).expect("validated generator");
        format!("({},{})", ext.label(i), ext.label(j))
    }

    fn designated_pair(&self, gen: RelativeGenerator, ext: &Algebra) -> Result<(usize, usize)> {
        let lab = |s: String| {
            ext.label_index(&s)
                .ok_or_else(|| Error::InvalidSpec(format!("missing label {s}")))
        };
        let pair = match (*self, gen) {
            (RelativeContext::Rm { m, .. }, RelativeGenerator::ChainF(i)) => {
                if i == 0 || i > m {
                    return Err(Error::GeneratorRange {
                        generator: format!("{gen:?}"),
                        range: format!("1..={m}"),
                    });
                }
                (lab(format!("e{i}"))?, lab("f1".into())?)
            }
            (RelativeContext::Rnkm { n, k, .. }, RelativeGenerator::ChainF(i)) => {
                if i == 0 || i > n - k {
                    return Err(Error::GeneratorRange {
                        generator: format!("{gen:?}"),
                        range: format!("1..={}", n - k),
                    });
                }
                (lab(format!("e{i}"))?, lab("f1".into())?)
            }
            (RelativeContext::Rm { .. }, RelativeGenerator::TopY) => {
                (lab("e1".into())?, lab("y1".into())?)
            }
            (RelativeContext::Rnkm { m, .. }, RelativeGenerator::TopY) => {
                (lab("e1".into())?, lab(format!("y{}", m + 1))?)
            }
            (ctx, RelativeGenerator::YF(i)) => {
                let k = ctx.k();
                if i == 0 || i > k {
                    return Err(Error::GeneratorRange {
                        generator: format!("{gen:?}"),
                        range: format!("1..={k}"),
                    });
                }
                (lab(format!("y{i}"))?, lab(format!("f{i}"))?)
            }
            (ctx, RelativeGenerator::YY(i)) => {
                let k = ctx.k();
                if i == 0 || i > k + 1 {
                    return Err(Error::GeneratorRange {
                        generator: format!("{gen:?}"),
                        range: format!("1..={}", k + 1),
                    });
                }
                (lab(format!("y{i}"))?, lab(format!("y{}", k + 1))?)
            }
            (RelativeContext::Rnkm { m, .. }, RelativeGenerator::Satellite(i)) => {
                if i < 2 || i > m + 1 {
                    return Err(Error::GeneratorRange {
                        generator: format!("{gen:?}"),
                        range: format!("2..={}", m + 1),
                    });
                }
                (lab("e1".into())?, lab(format!("f{i}"))?)
            }
            (RelativeContext::Rm { .. }, RelativeGenerator::Satellite(_)) => {
                return Err(Error::GeneratorRange {
                    generator: format!("{gen:?}"),
                    range: "satellite generators exist only in the larger context".into(),
                })
            }
        };
        Ok(pair)
    }

    fn k(&self) -> usize {
        match *self {
            RelativeContext::Rm { k, .. } | RelativeContext::Rnkm { k, .. } => k,
        }
    }
}

/// Build one relative cochain on the extended algebra: the designated
/// value plus the values forced by the relation system of its context,
/// zero elsewhere.
pub fn build_relative_cochain(
    ctx: &RelativeContext,
    gen: RelativeGenerator,
) -> Result<Cochain2> {
    ctx.validate()?;
    let ext = ctx.extended_algebra()?;
    let nd = ext.dim();
    let lab = |s: String| {
        ext.label_index(&s)
            .ok_or_else(|| Error::InvalidSpec(format!("missing label {s}")))
    };
    let target = match *ctx {
        RelativeContext::Rm { m, .. } => lab(format!("e{}", m + 1))?,
        RelativeContext::Rnkm { n, k, m } => lab(format!("e{}", n - k + m + 1))?,
    };
    let unit: SparseElem = vec![(target, Scalar::one())];
    let scaled = |c: i64| -> SparseElem {
        if c == 0 {
            Vec::new()
        } else {
            vec![(target, Scalar::from_integer(c.into()))]
        }
    };
    let mut phi = Cochain2::zero(nd);
    let (pi, pj) = ctx.designated_pair(gen, &ext)?;
    phi.set(pi, pj, unit.clone());
    match (*ctx, gen) {
        (RelativeContext::Rm { m, .. }, RelativeGenerator::ChainF(i)) => {
            // phi(e_{i+1}, y_1) = (i - m) e_{m+1}, present while i+1 <= m
            if i < m {
                phi.set(
                    lab(format!("e{}", i + 1))?,
                    lab("y1".into())?,
                    scaled(i as i64 - m as i64),
                );
            }
        }
        (RelativeContext::Rm { m, k }, RelativeGenerator::YF(i)) => {
            if i == 1 {
                phi.set(
                    lab("f1".into())?,
                    lab("y1".into())?,
                    scaled(m as i64 - 1),
                );
            } else {
                phi.set(lab(format!("f{i}"))?, lab("y1".into())?, scaled(m as i64));
                phi.set(lab(format!("f{i}"))?, lab(format!("y{i}"))?, scaled(-1));
            }
            phi.set(
                lab(format!("f{i}"))?,
                lab(format!("y{}", k + 1))?,
                unit.clone(),
            );
        }
        (RelativeContext::Rm { m, .. }, RelativeGenerator::YY(i)) => {
            phi.set(lab(format!("y{i}"))?, lab("y1".into())?, scaled(m as i64));
        }
        (RelativeContext::Rm { .. }, RelativeGenerator::TopY) => {}
        (RelativeContext::Rnkm { m, .. }, RelativeGenerator::ChainF(i)) => {
            // e_{i+1} stays within range: i + 1 <= n - k + 1
            phi.set(
                lab(format!("e{}", i + 1))?,
                lab("y1".into())?,
                scaled(i as i64),
            );
            phi.set(
                lab(format!("e{}", i + 1))?,
                lab(format!("y{}", m + 1))?,
                scaled(-1),
            );
        }
        (RelativeContext::Rnkm { n, k, m }, RelativeGenerator::Satellite(i)) => {
            if i <= m {
                phi.set(
                    lab(format!("e{}", n - k + i))?,
                    lab(format!("y{i}"))?,
                    unit.clone(),
                );
                phi.set(
                    lab(format!("e{}", n - k + i))?,
                    lab(format!("y{}", m + 1))?,
                    scaled(-1),
                );
            }
        }
        (RelativeContext::Rnkm { k, m, .. }, RelativeGenerator::YF(i)) => {
            if i != m + 1 {
                phi.set(lab(format!("f{i}"))?, lab(format!("y{i}"))?, scaled(-1));
                phi.set(
                    lab(format!("f{i}"))?,
                    lab(format!("y{}", m + 1))?,
                    unit.clone(),
                );
            }
            phi.set(
                lab(format!("f{i}"))?,
                lab(format!("y{}", k + 1))?,
                unit.clone(),
            );
        }
        (RelativeContext::Rnkm { m, .. }, RelativeGenerator::YY(i)) => {
            phi.set(
                lab(format!("y{i}"))?,
                lab(format!("y{}", m + 1))?,
                unit.clone(),
            );
        }
        (RelativeContext::Rm { .. }, RelativeGenerator::Satellite(_)) => unreachable!(),
        (RelativeContext::Rnkm { .. }, RelativeGenerator::TopY) => {}
    }
    Ok(phi)
}

#[derive(Debug, Clone)]
pub struct RelativeGeneratorReport {
    pub name: String,
    pub is_cocycle: bool,
    pub is_coboundary: bool,
}

#[derive(Debug, Clone)]
pub struct RelativeBasisReport {
    pub generators: Vec<RelativeGeneratorReport>,
    pub count: usize,
    pub expected_count: usize,
    pub independent: bool,
    pub ok: bool,
}

/// Verify that every generator of the context's cochain family, completed
/// by its relation system, is simultaneously a 2-cocycle and a
/// 2-coboundary of the extended algebra, and that the family is linearly
/// independent with the stated cardinality.
pub fn verify_relative_basis(ctx: &RelativeContext) -> Result<RelativeBasisReport> {
    ctx.validate()?;
    let ext = ctx.extended_algebra()?;
    let (b2_el, _) = coboundary_span(&ext);
    let mut reports = Vec::new();
    let mut span = Eliminator::new();
    let mut independent = true;
    for gen in ctx.generators() {
        let phi = build_relative_cochain(ctx, gen)?;
        let name = ctx.generator_name(gen, &ext);
        let is_cocycle = is_cocycle(&ext, &phi)?;
        let is_coboundary = b2_el.reduces_to_zero(&phi.flatten_sparse());
        if !span.insert_rational(&phi.flatten_sparse()) {
            independent = false;
        }
        reports.push(RelativeGeneratorReport {
            name,
            is_cocycle,
            is_coboundary,
        });
    }
    let count = reports.len();
    let expected_count = ctx.expected_count();
    let ok = independent
        && count == expected_count
        && reports.iter().all(|r| r.is_cocycle && r.is_coboundary);
    Ok(RelativeBasisReport {
        generators: reports,
        count,
        expected_count,
        independent,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::derivation_space;
    use crate::families::{make_abelian, make_mu1, make_rn};
    use crate::sample::Sampler;

    #[test]
    fn zero_cochain_is_a_cocycle() {
        let a = make_mu1(8, 2).unwrap();
        assert!(is_cocycle(&a, &Cochain2::zero(8)).unwrap());
    }

    #[test]
    fn bracket_is_a_cocycle() {
        let a = make_mu1(8, 2).unwrap();
        let phi = Cochain2::from_bracket(&a);
        assert!(is_cocycle(&a, &phi).unwrap());
    }

    #[test]
    fn coboundary_of_derivation_vanishes() {
        let a = make_mu1(8, 2).unwrap();
        let der = derivation_space(&a);
        let psi = coboundary_of(&a, &der.basis[0]).unwrap();
        assert!(psi.is_zero());
    }

    #[test]
    fn coboundary_of_identity_is_the_bracket() {
        let a = make_mu1(8, 2).unwrap();
        let psi = coboundary_of(&a, &Matrix::identity(8)).unwrap();
        assert_eq!(psi, Cochain2::from_bracket(&a));
    }

    #[test]
    fn coboundaries_are_cocycles_on_rn() {
        let a = make_rn(5, 2).unwrap();
        let mut rng = Sampler::new(2);
        let d = Matrix::from_rows(rng.rational_matrix(10, 10));
        let psi = coboundary_of(&a, &d).unwrap();
        assert!(is_cocycle(&a, &psi).unwrap());
    }

    #[test]
    fn abelian_cohomology_dims() {
        // 1-dim zero bracket: every cochain is a cocycle, no coboundaries
        let a1 = make_abelian(1);
        let report = hl2(&a1);
        assert_eq!(
            (report.dim_z2, report.dim_b2, report.dim_hl2),
            (1, 0, 1)
        );
        assert!(!report.rigid);
        assert_eq!(report.witness.as_ref().map(Vec::len), Some(1));

        let a2 = make_abelian(2);
        let report = hl2(&a2);
        assert_eq!((report.dim_z2, report.dim_b2, report.dim_hl2), (8, 0, 8));
        assert!(!is_cohomologically_rigid(&a2));
    }

    #[test]
    fn b2_rank_nullity_cross_check() {
        for alg in [make_mu1(8, 2).unwrap(), make_rn(5, 2).unwrap()] {
            let n = alg.dim();
            let (dim_b2, _) = bl2(&alg);
            let der = derivation_space(&alg);
            assert_eq!(dim_b2, n * n - der.dim());
        }
    }

    #[test]
    fn relative_basis_r2_k2() {
        let ctx = RelativeContext::Rm { m: 2, k: 2 };
        let report = verify_relative_basis(&ctx).unwrap();
        assert_eq!(report.count, 8); // m + 2k + 2
        for g in &report.generators {
            assert!(g.is_cocycle, "{} is not a cocycle", g.name);
            assert!(g.is_coboundary, "{} is not a coboundary", g.name);
        }
        assert!(report.ok);
    }

    #[test]
    fn generator_ranges_are_enforced() {
        let ctx = RelativeContext::Rm { m: 2, k: 2 };
        assert!(build_relative_cochain(&ctx, RelativeGenerator::ChainF(3)).is_err());
        assert!(build_relative_cochain(&ctx, RelativeGenerator::Satellite(2)).is_err());
        let bad = RelativeContext::Rnkm { n: 5, k: 2, m: 2 };
        assert!(verify_relative_basis(&bad).is_err());
    }
}

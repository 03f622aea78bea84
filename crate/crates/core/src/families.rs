//! Constructors for the algebra families under study.
//!
//! Nilpotent families: the naturally graded p-filiform non-Lie algebras
//! mu1, mu2 (p = 2k even) and mu3 (p = 2k+1 odd, in two bases), plus the
//! abelian algebras a_k. Solvable families: the maximal extensions
//! R(mu1,k), R(mu2,k), R(mu3,k+2), the relabeled chain form R_n and its
//! quotients R_m and R_{n-k+m}, and the abelian-nilradical family L(gamma).
//!
//! Tables are transcribed index range by index range. Nothing is patched:
//! if a transcribed range were wrong the Leibniz scan would name the
//! offending triple, and the verification suite records such findings
//! instead of hiding them.

use num_traits::{One, Zero};

use crate::algebra::{Algebra, SparseElem};
use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalar::{int, parse_scalar, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyId {
    Abelian,
    Mu1,
    Mu2,
    Mu3Original,
    Mu3Convenient,
    LGamma,
    RMu1,
    RMu2,
    RMu3,
    Rn,
    Rm,
    Rnkm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mu3Form {
    Original,
    Convenient,
}

/// 1-based bracket assembly helper so constructor bodies read like the
/// published tables.
struct Table {
    alg: Algebra,
}

impl Table {
    fn new(dim: usize, labels: Vec<String>) -> Self {
        Self {
            alg: Algebra::new(dim, labels),
        }
    }

    /// `[b_i, b_j] = sum of terms`, all indices 1-based.
    fn put(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        let value: SparseElem = terms
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k - 1, c.clone()))
            .collect();
        if !value.is_empty() {
            self.alg.set_bracket(i - 1, j - 1, value);
        }
    }

    fn one(&mut self, i: usize, j: usize, k: usize) {
        self.put(i, j, &[(k, Scalar::one())]);
    }

    fn done(self) -> Algebra {
        self.alg
    }
}

fn labels(parts: &[(&str, usize)]) -> Vec<String> {
    let mut out = Vec::new();
    for (stem, count) in parts {
        for i in 1..=*count {
            out.push(format!("{stem}{i}"));
        }
    }
    out
}

fn constraint(family: &'static str, ok: bool, requirement: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::FamilyConstraint {
            family,
            constraint: requirement.to_string(),
        })
    }
}

/// k-dimensional abelian algebra a_k.
pub fn make_abelian(k: usize) -> Algebra {
    Algebra::new(k, labels(&[("a", k)]))
}

/// mu1(n,k): basis e1..e_{n-2k}, f1..f_{2k}.
pub fn make_mu1(n: usize, k: usize) -> Result<Algebra> {
    constraint("mu1", k >= 1, "k >= 1")?;
    constraint("mu1", n >= 2 * k + 4, "n - 2k >= 4")?;
    let m = n - 2 * k;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let mut t = Table::new(n, labels(&[("e", m), ("f", 2 * k)]));
    for i in 1..=m - 1 {
        t.one(e(i), e(1), e(i + 1));
    }
    for j in 1..=k {
        t.one(e(1), f(j), f(k + j));
    }
    Ok(t.done())
}

/// mu2(n,k): basis e1..e_{n-2k}, f1..f_{2k}.
pub fn make_mu2(n: usize, k: usize) -> Result<Algebra> {
    constraint("mu2", k >= 1, "k >= 1")?;
    constraint("mu2", n >= 2 * k + 4, "n - 2k >= 4")?;
    let m = n - 2 * k;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let mut t = Table::new(n, labels(&[("e", m), ("f", 2 * k)]));
    for i in 1..=m - 1 {
        t.one(e(i), e(1), e(i + 1));
    }
    t.put(e(1), f(1), &[(e(2), int(1)), (f(k + 1), int(1))]);
    for i in 2..=m - 1 {
        t.one(e(i), f(1), e(i + 1));
    }
    for j in 2..=k {
        t.one(e(1), f(j), f(k + j));
    }
    Ok(t.done())
}

/// mu3(n,k) in one of its two published bases.
///
/// Original: basis e1..e_{n-2k-1}, f1..f_{2k+1}. Convenient: basis
/// e1..e_{n-2k}, f1..f_{2k}; the two are related by an explicit change of
/// basis (see `isomorphism::mu3_change_of_basis`).
pub fn make_mu3(n: usize, k: usize, form: Mu3Form) -> Result<Algebra> {
    constraint("mu3", k >= 1, "k >= 1")?;
    constraint("mu3", n >= 2 * k + 5, "n - (2k+1) >= 4")?;
    match form {
        Mu3Form::Original => {
            let m = n - 2 * k - 1;
            let e = |i: usize| i;
            let f = |j: usize| m + j;
            let mut t = Table::new(n, labels(&[("e", m), ("f", 2 * k + 1)]));
            for i in 1..=m - 1 {
                t.one(e(i), e(1), e(i + 1));
            }
            for j in 1..=k {
                t.one(e(1), f(j), f(k + 1 + j));
            }
            for i in 1..=m - 1 {
                t.one(e(i), f(k + 1), e(i + 1));
            }
            Ok(t.done())
        }
        Mu3Form::Convenient => {
            let m = n - 2 * k;
            let e = |i: usize| i;
            let f = |j: usize| m + j;
            let mut t = Table::new(n, labels(&[("e", m), ("f", 2 * k)]));
            for i in 2..=m - 1 {
                t.one(e(i), e(1), e(i + 1));
            }
            for j in 1..=k {
                t.one(e(2), f(j), f(k + j));
            }
            Ok(t.done())
        }
    }
}

/// Entries restricted to {-1, 0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector(Vec<i8>);

impl GammaVector {
    pub fn new(entries: &[i64]) -> Result<Self> {
        if entries.iter().any(|&g| g != 0 && g != -1) {
            return Err(Error::FamilyConstraint {
                family: "Lgamma",
                constraint: "gamma entries in {-1, 0}".to_string(),
            });
        }
        Ok(Self(entries.iter().map(|&g| g as i8).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> Vec<i64> {
        self.0.iter().map(|&g| g as i64).collect()
    }

    /// All 2^k vectors of length k.
    pub fn all(k: usize) -> Vec<GammaVector> {
        let mut out = Vec::with_capacity(1 << k);
        for bits in 0..(1u32 << k) {
            let entries: Vec<i8> = (0..k)
                .map(|i| if bits >> i & 1 == 1 { -1 } else { 0 })
                .collect();
            out.push(GammaVector(entries));
        }
        out
    }
}

/// L(gamma): basis f1..fk, x1..xk with `[f_i,x_i] = f_i` and
/// `[x_i,f_i] = gamma_i f_i`.
pub fn make_l_gamma(gamma: &GammaVector) -> Algebra {
    let k = gamma.len();
    let f = |i: usize| i;
    let x = |i: usize| k + i;
    let mut t = Table::new(2 * k, labels(&[("f", k), ("x", k)]));
    for i in 1..=k {
        t.one(f(i), x(i), f(i));
        t.put(x(i), f(i), &[(f(i), int(gamma.0[i - 1] as i64))]);
    }
    t.done()
}

/// Parameters of R(mu1,k): `a[t][j]` for 2 <= t <= n-2k (stored from
/// t = 2 upward), `phi[i][j]` for i != j (diagonal must be zero), and a
/// full k x k `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMu1Params {
    pub a: Vec<Vec<Scalar>>,
    pub phi: Vec<Vec<Scalar>>,
    pub delta: Vec<Vec<Scalar>>,
}

impl RMu1Params {
    pub fn zero(n: usize, k: usize) -> Self {
        let m = n - 2 * k;
        Self {
            a: vec![vec![Scalar::zero(); k]; m - 1],
            phi: vec![vec![Scalar::zero(); k]; k],
            delta: vec![vec![Scalar::zero(); k]; k],
        }
    }

    pub fn sample(n: usize, k: usize, rng: &mut Sampler) -> Self {
        let mut p = Self::zero(n, k);
        for row in &mut p.a {
            for v in row.iter_mut() {
                *v = rng.rational();
            }
        }
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    p.phi[i][j] = rng.rational();
                }
                p.delta[i][j] = rng.rational();
            }
        }
        p
    }

    fn validate(&self, n: usize, k: usize) -> Result<()> {
        let m = n - 2 * k;
        let shape_ok = self.a.len() == m - 1
            && self.a.iter().all(|r| r.len() == k)
            && self.phi.len() == k
            && self.phi.iter().all(|r| r.len() == k)
            && self.delta.len() == k
            && self.delta.iter().all(|r| r.len() == k);
        constraint(
            "Rmu1",
            shape_ok,
            "parameter shapes a:(n-2k-1)xk, phi:kxk, delta:kxk",
        )?;
        let diag_ok = (0..k).all(|i| self.phi[i][i].is_zero());
        constraint("Rmu1", diag_ok, "phi diagonal absent (i != j only)")
    }

    /// `a_{t,j}` with the table's 1-based indices, 2 <= t <= n-2k.
    pub fn a_at(&self, t: usize, j: usize) -> &Scalar {
        &self.a[t - 2][j - 1]
    }
}

/// R(mu1,k): the mu1 nilradical extended by x1..xk.
pub fn make_r_mu1(n: usize, k: usize, p: &RMu1Params) -> Result<Algebra> {
    constraint("Rmu1", k >= 1, "k >= 1")?;
    constraint("Rmu1", n >= 2 * k + 4, "n - 2k >= 4")?;
    p.validate(n, k)?;
    let m = n - 2 * k;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let x = |i: usize| m + 2 * k + i;
    let mut t = Table::new(n + k, labels(&[("e", m), ("f", 2 * k), ("x", k)]));
    // nilradical
    for i in 1..=m - 1 {
        t.one(e(i), e(1), e(i + 1));
    }
    for j in 1..=k {
        t.one(e(1), f(j), f(k + j));
    }
    // extension
    for i in 1..=m {
        for j in 1..=k {
            let terms: Vec<(usize, Scalar)> = (i + 1..=m)
                .map(|tt| (e(tt), p.a_at(tt - i + 1, j).clone()))
                .collect();
            t.put(e(i), x(j), &terms);
        }
    }
    for i in 1..=k {
        t.one(f(i), x(i), f(i));
        t.one(f(k + i), x(i), f(k + i));
        t.put(x(i), f(i), &[(f(i), int(-1))]);
        for j in 1..=k {
            if i != j {
                t.put(x(i), f(j), &[(f(k + j), p.phi[i - 1][j - 1].clone())]);
            }
            t.put(x(i), x(j), &[(e(m), p.delta[i - 1][j - 1].clone())]);
        }
    }
    Ok(t.done())
}

/// Parameters of R(mu2,k): vectors `b`, `beta` of length k, `phi[i][j]`
/// for 1 <= i <= k, 2 <= j <= k, i != j (column 1 and diagonal zero), and
/// a full k x k `theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMu2Params {
    pub b: Vec<Scalar>,
    pub beta: Vec<Scalar>,
    pub phi: Vec<Vec<Scalar>>,
    pub theta: Vec<Vec<Scalar>>,
}

impl RMu2Params {
    pub fn zero(k: usize) -> Self {
        Self {
            b: vec![Scalar::zero(); k],
            beta: vec![Scalar::zero(); k],
            phi: vec![vec![Scalar::zero(); k]; k],
            theta: vec![vec![Scalar::zero(); k]; k],
        }
    }

    pub fn sample(k: usize, rng: &mut Sampler) -> Self {
        let mut p = Self::zero(k);
        for v in p.b.iter_mut().chain(p.beta.iter_mut()) {
            *v = rng.rational();
        }
        for i in 0..k {
            for j in 1..k {
                if i != j {
                    p.phi[i][j] = rng.rational();
                }
            }
            for j in 0..k {
                p.theta[i][j] = rng.rational();
            }
        }
        p
    }

    fn validate(&self, k: usize) -> Result<()> {
        let shape_ok = self.b.len() == k
            && self.beta.len() == k
            && self.phi.len() == k
            && self.phi.iter().all(|r| r.len() == k)
            && self.theta.len() == k
            && self.theta.iter().all(|r| r.len() == k);
        constraint(
            "Rmu2",
            shape_ok,
            "parameter shapes b,beta:k, phi:kxk, theta:kxk",
        )?;
        let absent_ok =
            (0..k).all(|i| self.phi[i][i].is_zero()) && (0..k).all(|i| self.phi[i][0].is_zero());
        constraint("Rmu2", absent_ok, "phi entries only for 2 <= j <= k, i != j")
    }
}

/// R(mu2,k): the mu2 nilradical extended by x1..xk.
pub fn make_r_mu2(n: usize, k: usize, p: &RMu2Params) -> Result<Algebra> {
    constraint("Rmu2", k >= 1, "k >= 1")?;
    constraint("Rmu2", n >= 2 * k + 4, "n - 2k >= 4")?;
    p.validate(k)?;
    let m = n - 2 * k;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let x = |i: usize| m + 2 * k + i;
    let mut t = Table::new(n + k, labels(&[("e", m), ("f", 2 * k), ("x", k)]));
    // nilradical
    for i in 1..=m - 1 {
        t.one(e(i), e(1), e(i + 1));
    }
    t.put(e(1), f(1), &[(e(2), int(1)), (f(k + 1), int(1))]);
    for i in 2..=m - 1 {
        t.one(e(i), f(1), e(i + 1));
    }
    for j in 2..=k {
        t.one(e(1), f(j), f(k + j));
    }
    // extension
    t.put(e(1), x(1), &[(f(1), int(1)), (f(k + 1), p.b[0].clone())]);
    t.put(e(2), x(1), &[(e(2), int(1)), (f(k + 1), int(1))]);
    for j in 3..=m {
        t.put(e(j), x(1), &[(e(j), int(j as i64 - 1))]);
    }
    t.put(x(1), e(1), &[(f(1), int(-1)), (f(k + 1), p.beta[0].clone())]);
    for i in 2..=k {
        t.put(e(1), x(i), &[(f(k + 1), p.b[i - 1].clone())]);
        t.one(f(k + i), x(i), f(k + i));
        t.put(x(i), e(1), &[(f(k + 1), p.beta[i - 1].clone())]);
    }
    for i in 1..=k {
        t.one(f(i), x(i), f(i));
        t.put(x(i), f(i), &[(f(i), int(-1))]);
        for j in 2..=k {
            if i != j {
                t.put(x(i), f(j), &[(f(k + j), p.phi[i - 1][j - 1].clone())]);
            }
        }
        for j in 1..=k {
            t.put(x(i), x(j), &[(f(k + 1), p.theta[i - 1][j - 1].clone())]);
        }
    }
    Ok(t.done())
}

/// R(mu3,k+2): the convenient-form mu3 nilradical extended by x1..xk and
/// the two extra generators y1, y2. Parameter-free.
pub fn make_r_mu3(n: usize, k: usize) -> Result<Algebra> {
    constraint("Rmu3", k >= 1, "k >= 1")?;
    constraint("Rmu3", n >= 2 * k + 5, "n - (2k+1) >= 4")?;
    let m = n - 2 * k;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let x = |i: usize| m + 2 * k + i;
    let y = |i: usize| m + 3 * k + i;
    let mut t = Table::new(
        n + k + 2,
        labels(&[("e", m), ("f", 2 * k), ("x", k), ("y", 2)]),
    );
    // nilradical (convenient form)
    for i in 2..=m - 1 {
        t.one(e(i), e(1), e(i + 1));
    }
    for j in 1..=k {
        t.one(e(2), f(j), f(k + j));
    }
    // extension
    t.one(e(1), y(1), e(1));
    for j in 2..=m {
        t.put(e(j), y(1), &[(e(j), int(j as i64 - 2))]);
    }
    t.put(y(1), e(1), &[(e(1), int(-1))]);
    for j in 2..=m {
        t.one(e(j), y(2), e(j));
    }
    for i in 1..=k {
        t.one(f(k + i), y(2), f(k + i));
        t.one(f(i), x(i), f(i));
        t.one(f(k + i), x(i), f(k + i));
        t.put(x(i), f(i), &[(f(i), int(-1))]);
    }
    Ok(t.done())
}

/// R_n: basis e1..en, f1..fk, y1..y_{k+1}; the relabeled chain form of
/// R(mu3,k+2) on n+2k+1 generators.
pub fn make_rn(n: usize, k: usize) -> Result<Algebra> {
    // The source algebra R(mu3,k+2) needs n - k + 1 >= 4 after relabeling.
    constraint("Rn", k >= 1, "k >= 1")?;
    constraint("Rn", n >= k + 3, "n >= k + 3")?;
    let e = |i: usize| i;
    let f = |j: usize| n + j;
    let y = |i: usize| n + k + i;
    let mut t = Table::new(n + 2 * k + 1, labels(&[("e", n), ("f", k), ("y", k + 1)]));
    for i in 1..=n - k {
        t.one(e(i), f(1), e(i + 1));
    }
    for i in 2..=k {
        t.one(e(1), f(i), e(n - k + i));
    }
    for i in 1..=k {
        t.one(f(i), y(i), f(i));
        t.put(y(i), f(i), &[(f(i), int(-1))]);
    }
    for i in 1..=n {
        t.one(e(i), y(k + 1), e(i));
    }
    for i in 1..=n - k + 1 {
        t.put(e(i), y(1), &[(e(i), int(i as i64 - 1))]);
    }
    for i in 2..=k {
        t.one(e(n - k + i), y(i), e(n - k + i));
    }
    Ok(t.done())
}

/// R_m: basis e1..em, f1..fk, y1..y_{k+1}; the quotient of R_n that keeps
/// only the first m chain vectors. Standalone table, independent of n.
pub fn make_rm(m: usize, k: usize) -> Result<Algebra> {
    constraint("Rm", m >= 1, "m >= 1")?;
    constraint("Rm", k >= 1, "k >= 1")?;
    let e = |i: usize| i;
    let f = |j: usize| m + j;
    let y = |i: usize| m + k + i;
    let mut t = Table::new(m + 2 * k + 1, labels(&[("e", m), ("f", k), ("y", k + 1)]));
    for i in 1..=m - 1 {
        t.one(e(i), f(1), e(i + 1));
    }
    for i in 1..=k {
        t.one(f(i), y(i), f(i));
        t.put(y(i), f(i), &[(f(i), int(-1))]);
    }
    for i in 1..=m {
        t.one(e(i), y(k + 1), e(i));
        t.put(e(i), y(1), &[(e(i), int(i as i64 - 1))]);
    }
    Ok(t.done())
}

/// R_{n-k+m}: the quotient of R_n that keeps chain vectors e1..e_{n-k+1}
/// and the first m-1 satellite vectors.
pub fn make_rnkm(n: usize, k: usize, m: usize) -> Result<Algebra> {
    constraint("Rnkm", k >= 1, "k >= 1")?;
    constraint("Rnkm", n >= k + 3, "n >= k + 3")?;
    constraint("Rnkm", (2..=k).contains(&m), "2 <= m <= k")?;
    let dim_e = n - k + m;
    let e = |i: usize| i;
    let f = |j: usize| dim_e + j;
    let y = |i: usize| dim_e + k + i;
    let mut t = Table::new(
        dim_e + 2 * k + 1,
        labels(&[("e", dim_e), ("f", k), ("y", k + 1)]),
    );
    for i in 1..=n - k {
        t.one(e(i), f(1), e(i + 1));
    }
    for i in 2..=m {
        t.one(e(1), f(i), e(n - k + i));
    }
    for i in 1..=k {
        t.one(f(i), y(i), f(i));
        t.put(y(i), f(i), &[(f(i), int(-1))]);
    }
    for i in 1..=n - k + m {
        t.one(e(i), y(k + 1), e(i));
    }
    for i in 1..=n - k + 1 {
        t.put(e(i), y(1), &[(e(i), int(i as i64 - 1))]);
    }
    for i in 2..=m {
        t.one(e(n - k + i), y(i), e(n - k + i));
    }
    Ok(t.done())
}

/// The grid of valid even-p family sizes inside `n <= n_max`, `k <= k_max`.
pub fn mu_even_grid(n_max: usize, k_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 6..=n_max {
        for k in 1..=k_max {
            if n >= 2 * k + 4 {
                out.push((n, k));
            }
        }
    }
    out
}

pub fn mu_odd_grid(n_max: usize, k_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 6..=n_max {
        for k in 1..=k_max {
            if n >= 2 * k + 5 {
                out.push((n, k));
            }
        }
    }
    out
}

// ---- family spec strings: "mu1:n=8,k=2", "Lgamma:g=[-1,0]", ... ----

#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: FamilyId,
    args: Vec<(String, String)>,
}

impl FamilySpec {
    pub fn parse(spec: &str) -> Result<Self> {
        let (head, rest) = match spec.split_once(':') {
            Some((h, r)) => (h, r),
            None => (spec, ""),
        };
        let family = match head {
            "abelian" => FamilyId::Abelian,
            "mu1" => FamilyId::Mu1,
            "mu2" => FamilyId::Mu2,
            "mu3" => FamilyId::Mu3Original,
            "Lgamma" | "lgamma" => FamilyId::LGamma,
            "Rmu1" | "rmu1" => FamilyId::RMu1,
            "Rmu2" | "rmu2" => FamilyId::RMu2,
            "Rmu3" | "rmu3" => FamilyId::RMu3,
            "Rn" | "rn" => FamilyId::Rn,
            "Rm" | "rm" => FamilyId::Rm,
            "Rnkm" | "rnkm" => FamilyId::Rnkm,
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        Ok(Self {
            family,
            args: split_args(rest)?,
        })
    }

    pub fn build(&self) -> Result<Algebra> {
        match self.family {
            FamilyId::Abelian => Ok(make_abelian(self.usize_arg("k")?)),
            FamilyId::Mu1 => make_mu1(self.usize_arg("n")?, self.usize_arg("k")?),
            FamilyId::Mu2 => make_mu2(self.usize_arg("n")?, self.usize_arg("k")?),
            FamilyId::Mu3Original | FamilyId::Mu3Convenient => {
                let form = match self.opt_arg("form") {
                    None | Some("original") => Mu3Form::Original,
                    Some("convenient") => Mu3Form::Convenient,
                    Some(other) => {
                        return Err(Error::InvalidSpec(format!("unknown mu3 form {other:?}")))
                    }
                };
                make_mu3(self.usize_arg("n")?, self.usize_arg("k")?, form)
            }
            FamilyId::LGamma => {
                let g = self.int_list_arg("g")?;
                Ok(make_l_gamma(&GammaVector::new(&g)?))
            }
            FamilyId::RMu1 => {
                let (n, k) = (self.usize_arg("n")?, self.usize_arg("k")?);
                constraint("Rmu1", k >= 1 && n >= 2 * k + 4, "n - 2k >= 4")?;
                let mut p = RMu1Params::zero(n, k);
                if let Some(a) = self.opt_matrix_arg("a")? {
                    p.a = a;
                }
                if let Some(phi) = self.opt_matrix_arg("phi")? {
                    p.phi = phi;
                }
                if let Some(delta) = self.opt_matrix_arg("delta")? {
                    p.delta = delta;
                }
                make_r_mu1(n, k, &p)
            }
            FamilyId::RMu2 => {
                let (n, k) = (self.usize_arg("n")?, self.usize_arg("k")?);
                constraint("Rmu2", k >= 1, "k >= 1")?;
                let mut p = RMu2Params::zero(k);
                if let Some(b) = self.opt_scalar_list_arg("b")? {
                    p.b = b;
                }
                if let Some(beta) = self.opt_scalar_list_arg("beta")? {
                    p.beta = beta;
                }
                if let Some(phi) = self.opt_matrix_arg("phi")? {
                    p.phi = phi;
                }
                if let Some(theta) = self.opt_matrix_arg("theta")? {
                    p.theta = theta;
                }
                make_r_mu2(n, k, &p)
            }
            FamilyId::RMu3 => make_r_mu3(self.usize_arg("n")?, self.usize_arg("k")?),
            FamilyId::Rn => make_rn(self.usize_arg("n")?, self.usize_arg("k")?),
            FamilyId::Rm => make_rm(self.usize_arg("m")?, self.usize_arg("k")?),
            FamilyId::Rnkm => make_rnkm(
                self.usize_arg("n")?,
                self.usize_arg("k")?,
                self.usize_arg("m")?,
            ),
        }
    }

    fn opt_arg(&self, name: &str) -> Option<&str> {
        self.args
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn arg(&self, name: &str) -> Result<&str> {
        self.opt_arg(name)
            .ok_or_else(|| Error::InvalidSpec(format!("missing argument {name}")))
    }

    fn usize_arg(&self, name: &str) -> Result<usize> {
        self.arg(name)?
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("argument {name} must be a positive integer")))
    }

    fn int_list_arg(&self, name: &str) -> Result<Vec<i64>> {
        parse_list(self.arg(name)?)?
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::InvalidSpec(format!("bad integer {s:?} in {name}")))
            })
            .collect()
    }

    fn opt_scalar_list_arg(&self, name: &str) -> Result<Option<Vec<Scalar>>> {
        match self.opt_arg(name) {
            None => Ok(None),
            Some(v) => Ok(Some(
                parse_list(v)?
                    .iter()
                    .map(|s| parse_scalar(s))
                    .collect::<Result<Vec<_>>>()?,
            )),
        }
    }

    fn opt_matrix_arg(&self, name: &str) -> Result<Option<Vec<Vec<Scalar>>>> {
        match self.opt_arg(name) {
            None => Ok(None),
            Some(v) => {
                let mut rows = Vec::new();
                for row in parse_nested_list(v)? {
                    rows.push(
                        row.iter()
                            .map(|s| parse_scalar(s))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                Ok(Some(rows))
            }
        }
    }
}

/// Split "n=8,k=2,g=[-1,0],a=[[1,0],[0,1]]" at top-level commas.
fn split_args(s: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::InvalidSpec("unbalanced brackets".to_string()))?;
                current.push(ch);
            }
            ',' if depth == 0 => {
                push_arg(&mut out, &current)?;
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::InvalidSpec("unbalanced brackets".to_string()));
    }
    if !current.is_empty() {
        push_arg(&mut out, &current)?;
    }
    Ok(out)
}

fn push_arg(out: &mut Vec<(String, String)>, piece: &str) -> Result<()> {
    let piece = piece.trim();
    if piece.is_empty() {
        return Ok(());
    }
    let (k, v) = piece
        .split_once('=')
        .ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got {piece:?}")))?;
    out.push((k.trim().to_string(), v.trim().to_string()));
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<String>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidSpec(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(inner.split(',').map(|p| p.trim().to_string()).collect())
}

fn parse_nested_list(s: &str) -> Result<Vec<Vec<String>>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidSpec(format!("expected [[..],..], got {s:?}")))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::InvalidSpec("unbalanced brackets".to_string()))?;
                current.push(ch);
            }
            ',' if depth == 0 => {
                if !current.trim().is_empty() {
                    rows.push(parse_list(current.trim())?);
                }
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        rows.push(parse_list(current.trim())?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use crate::subspace::Subspace;

    fn idx(alg: &Algebra, label: &str) -> usize {
        alg.label_index(label).expect("label exists")
    }

    #[test]
    fn mu1_table_entries() {
        let a = make_mu1(8, 2).unwrap();
        assert_eq!(a.dim(), 8);
        // [e1,f1] = f3, [e1,f2] = f4, [e_i,e1] = e_{i+1} for i <= 3
        assert_eq!(
            a.basis_bracket(idx(&a, "e1"), idx(&a, "f1")),
            vec![(idx(&a, "f3"), int(1))]
        );
        assert_eq!(
            a.basis_bracket(idx(&a, "e1"), idx(&a, "f2")),
            vec![(idx(&a, "f4"), int(1))]
        );
        for i in 1..=3usize {
            assert_eq!(
                a.basis_bracket(idx(&a, &format!("e{i}")), idx(&a, "e1")),
                vec![(idx(&a, &format!("e{}", i + 1)), int(1))]
            );
        }
        assert!(a.check_leibniz().ok);
    }

    #[test]
    fn mu2_adds_the_chain_action_of_f1() {
        let a = make_mu2(8, 2).unwrap();
        assert_eq!(
            a.basis_bracket(idx(&a, "e1"), idx(&a, "f1")),
            vec![(idx(&a, "e2"), int(1)), (idx(&a, "f3"), int(1))]
        );
        for i in 2..=3usize {
            assert_eq!(
                a.basis_bracket(idx(&a, &format!("e{i}")), idx(&a, "f1")),
                vec![(idx(&a, &format!("e{}", i + 1)), int(1))]
            );
        }
        assert!(a.check_leibniz().ok);
    }

    #[test]
    fn mu3_both_forms() {
        let orig = make_mu3(9, 2, Mu3Form::Original).unwrap();
        // [e_i, f3] = e_{i+1} for i <= 3 (f_{k+1} = f3 at k = 2)
        for i in 1..=3usize {
            assert_eq!(
                orig.basis_bracket(idx(&orig, &format!("e{i}")), idx(&orig, "f3")),
                vec![(idx(&orig, &format!("e{}", i + 1)), int(1))]
            );
        }
        let conv = make_mu3(9, 2, Mu3Form::Convenient).unwrap();
        assert_eq!(
            conv.basis_bracket(idx(&conv, "e2"), idx(&conv, "f1")),
            vec![(idx(&conv, "f3"), int(1))]
        );
        assert!(orig.check_leibniz().ok);
        assert!(conv.check_leibniz().ok);
    }

    #[test]
    fn boundary_sizes_are_rejected() {
        assert!(make_mu1(7, 2).is_err());
        assert!(make_mu1(8, 2).is_ok());
        assert!(make_mu2(7, 2).is_err());
        assert!(make_mu3(8, 2, Mu3Form::Original).is_err());
        assert!(make_mu3(9, 2, Mu3Form::Original).is_ok());
        assert!(make_rn(4, 2).is_err());
        assert!(make_rn(5, 2).is_ok());
    }

    #[test]
    fn l_gamma_tables() {
        let g = GammaVector::new(&[-1]).unwrap();
        let a = make_l_gamma(&g);
        assert_eq!(
            a.basis_bracket(idx(&a, "f1"), idx(&a, "x1")),
            vec![(idx(&a, "f1"), int(1))]
        );
        assert_eq!(
            a.basis_bracket(idx(&a, "x1"), idx(&a, "f1")),
            vec![(idx(&a, "f1"), int(-1))]
        );

        let g0 = GammaVector::new(&[0, 0]).unwrap();
        let b = make_l_gamma(&g0);
        assert_eq!(b.brackets().count(), 2); // only [f_i, x_i] = f_i
        assert!(b.check_leibniz().ok);
        assert!(GammaVector::new(&[1]).is_err());
    }

    #[test]
    fn l_gamma_nilradical_is_the_abelian_part() {
        for g in GammaVector::all(2) {
            let a = make_l_gamma(&g);
            let l2 = a
                .subspace_product(&Subspace::full(4), &Subspace::full(4))
                .unwrap();
            assert_eq!(l2, Subspace::coordinate(4, &[0, 1]));
            let nil = a.restrict(&Subspace::coordinate(4, &[0, 1])).unwrap();
            assert_eq!(nil.brackets().count(), 0); // abelian
        }
    }

    #[test]
    fn r_mu1_delta_bracket() {
        let mut p = RMu1Params::zero(8, 2);
        p.delta[0][0] = int(1);
        let a = make_r_mu1(8, 2, &p).unwrap();
        assert_eq!(
            a.basis_bracket(idx(&a, "x1"), idx(&a, "x1")),
            vec![(idx(&a, "e4"), int(1))]
        );
        assert!(a.check_leibniz().ok);
    }

    #[test]
    fn r_mu1_zero_params_pass_leibniz() {
        let a = make_r_mu1(8, 2, &RMu1Params::zero(8, 2)).unwrap();
        assert_eq!(a.dim(), 10);
        assert!(a.check_leibniz().ok);
    }

    #[test]
    fn r_mu2_b1_bracket() {
        let mut p = RMu2Params::zero(2);
        p.b[0] = int(1);
        let a = make_r_mu2(8, 2, &p).unwrap();
        assert_eq!(
            a.basis_bracket(idx(&a, "e1"), idx(&a, "x1")),
            vec![(idx(&a, "f1"), int(1)), (idx(&a, "f3"), int(1))]
        );
        assert!(a.check_leibniz().ok);
    }

    #[test]
    fn r_mu2_rejects_misplaced_phi() {
        let mut p = RMu2Params::zero(2);
        p.phi[0][0] = int(1);
        assert!(make_r_mu2(8, 2, &p).is_err());
        let mut q = RMu2Params::zero(2);
        q.phi[1][0] = int(1); // column 1 is outside the table's range
        assert!(make_r_mu2(8, 2, &q).is_err());
    }

    #[test]
    fn r_mu3_and_rn_tables() {
        let a = make_r_mu3(9, 2).unwrap();
        assert_eq!(a.dim(), 13);
        assert!(a.check_leibniz().ok);
        assert_eq!(
            a.basis_bracket(idx(&a, "y1"), idx(&a, "e1")),
            vec![(idx(&a, "e1"), int(-1))]
        );
        // [e_j, y1] = (j-2) e_j: zero at j = 2
        assert!(a.basis_bracket(idx(&a, "e2"), idx(&a, "y1")).is_empty());
        assert_eq!(
            a.basis_bracket(idx(&a, "e3"), idx(&a, "y1")),
            vec![(idx(&a, "e3"), int(1))]
        );

        let rn = make_rn(5, 2).unwrap();
        assert_eq!(rn.dim(), 10);
        assert!(rn.check_leibniz().ok);
        assert_eq!(
            rn.basis_bracket(idx(&rn, "e1"), idx(&rn, "f2")),
            vec![(idx(&rn, "e5"), int(1))]
        );
        assert_eq!(
            rn.basis_bracket(idx(&rn, "e4"), idx(&rn, "y1")),
            vec![(idx(&rn, "e4"), int(3))]
        );
    }

    #[test]
    fn rm_is_rn_without_satellites() {
        let rm = make_rm(1, 2).unwrap();
        assert_eq!(rm.dim(), 6);
        assert!(rm.check_leibniz().ok);
        let want: Vec<String> = ["e1", "f1", "f2", "y1", "y2", "y3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(rm.labels(), &want[..]);
        // [e1, y1] = 0*e1 is omitted
        assert!(rm.basis_bracket(0, idx(&rm, "y1")).is_empty());
    }

    #[test]
    fn rnkm_matches_rn_at_m_equals_k() {
        let rn = make_rn(7, 3).unwrap();
        let rk = make_rnkm(7, 3, 3).unwrap();
        assert_eq!(rn, rk);
    }

    #[test]
    fn spec_strings() {
        let a = FamilySpec::parse("mu1:n=8,k=2").unwrap().build().unwrap();
        assert_eq!(a.dim(), 8);
        let b = FamilySpec::parse("Lgamma:g=[-1,0]")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(b.dim(), 4);
        let c = FamilySpec::parse("Rmu2:n=8,k=2,b=[1,1/2]")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(
            c.basis_bracket(idx(&c, "e1"), idx(&c, "x2")),
            vec![(idx(&c, "f3"), frac(1, 2))]
        );
        assert!(FamilySpec::parse("mu1:n=7,k=2").unwrap().build().is_err());
        assert!(FamilySpec::parse("nope:n=1").is_err());
        assert!(FamilySpec::parse("mu1:n=8,k").is_err());
    }

    #[test]
    fn grids_respect_constraints() {
        for (n, k) in mu_even_grid(12, 4) {
            assert!(n >= 2 * k + 4);
            make_mu1(n, k).unwrap();
            make_mu2(n, k).unwrap();
        }
        for (n, k) in mu_odd_grid(12, 4) {
            assert!(n >= 2 * k + 5);
            make_mu3(n, k, Mu3Form::Original).unwrap();
            make_mu3(n, k, Mu3Form::Convenient).unwrap();
        }
    }
}

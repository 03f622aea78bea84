//! Finite-dimensional Leibniz algebras over ℚ, given by structure
//! constants on a labeled basis. Omitted products are zero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{
    add_scaled, format_scalar, is_zero_vec, parse_scalar, sparse_to_dense,
    unit_vec, zero_vec, Scalar,
};
use crate::solve::Eliminator;
use crate::subspace::Subspace;

pub type Element = Vec<Scalar>;
/// Sparse coefficient vector: strictly increasing indices, nonzero entries.
pub type SparseElem = Vec<(usize, Scalar)>;

pub const SCHEMA: &str = "leibniz-forge/1";

#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    tensor: BTreeMap<(usize, usize), SparseElem>,
}

impl Algebra {
    pub fn new(dim: usize, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), dim, "label count must equal dimension");
        Self {
            dim,
            labels,
            tensor: BTreeMap::new(),
        }
    }

    /// Zero algebra with synthetic labels `b1..bn`.
    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, (1..=dim).map(|i| format!("b{i}")).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Define `[b_i, b_j]`; panics on a repeated pair or bad index, which
    /// would be a transcription bug in a table, not a runtime condition.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: SparseElem) {
        assert!(i < self.dim && j < self.dim, "bracket index out of range");
        let mut v = value;
        v.retain(|(_, c)| !c.is_zero());
        v.sort_by_key(|(k, _)| *k);
        assert!(
            v.windows(2).all(|w| w[0].0 < w[1].0),
            "repeated index inside bracket value"
        );
        assert!(v.iter().all(|(k, _)| *k < self.dim), "value index out of range");
        if v.is_empty() {
            return;
        }
        let old = self.tensor.insert((i, j), v);
        assert!(old.is_none(), "duplicate bracket pair ({i},{j})");
    }

    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseElem)> {
        self.tensor.iter()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseElem {
        self.tensor.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `[x, y]` by bilinear extension.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = zero_vec(self.dim);
        for ((i, j), v) in &self.tensor {
            if x[*i].is_zero() || y[*j].is_zero() {
                continue;
            }
            let c = &x[*i] * &y[*j];
            for (k, coeff) in v {
                out[*k] += &c * coeff;
            }
        }
        Ok(out)
    }

    /// `[b_i, v]` for sparse `v`.
    fn left_mul_sparse(&self, i: usize, v: &SparseElem) -> Element {
        let mut out = zero_vec(self.dim);
        for (m, c) in v {
            if let Some(w) = self.tensor.get(&(i, *m)) {
                for (k, coeff) in w {
                    out[*k] += c * coeff;
                }
            }
        }
        out
    }

    /// `[v, b_j]` for sparse `v`.
    fn right_mul_sparse(&self, v: &SparseElem, j: usize) -> Element {
        let mut out = zero_vec(self.dim);
        for (m, c) in v {
            if let Some(w) = self.tensor.get(&(*m, j)) {
                for (k, coeff) in w {
                    out[*k] += c * coeff;
                }
            }
        }
        out
    }

    /// The trilinear expression whose vanishing characterizes Leibniz
    /// algebras: `[x,[y,z]] - [[x,y],z] + [[x,z],y]`.
    pub fn leibniz_defect(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Element> {
        let yz = self.bracket(y, z)?;
        let xy = self.bracket(x, y)?;
        let xz = self.bracket(x, z)?;
        let mut out = self.bracket(x, &yz)?;
        let t2 = self.bracket(&xy, z)?;
        let t3 = self.bracket(&xz, y)?;
        for k in 0..self.dim {
            out[k] = &out[k] - &t2[k] + &t3[k];
        }
        Ok(out)
    }

    /// Defect on a basis triple, using sparse products throughout.
    pub fn basis_defect(&self, i: usize, j: usize, l: usize) -> Element {
        let yz = self.basis_bracket(j, l);
        let xy = self.basis_bracket(i, j);
        let xz = self.basis_bracket(i, l);
        let mut out = self.left_mul_sparse(i, &yz);
        let t2 = self.right_mul_sparse(&xy, l);
        let t3 = self.right_mul_sparse(&xz, j);
        for k in 0..self.dim {
            out[k] = &out[k] - &t2[k] + &t3[k];
        }
        out
    }

    /// Scan all basis triples; trilinearity of the defect makes this a
    /// complete check.
    pub fn check_leibniz(&self) -> LeibnizReport {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for l in 0..self.dim {
                    if !is_zero_vec(&self.basis_defect(i, j, l)) {
                        violations.push((i, j, l));
                    }
                }
            }
        }
        LeibnizReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Right annihilator `{x : [y,x] = 0 for all y}`: the joint nullspace
    /// of all left multiplications by basis vectors.
    pub fn right_annihilator(&self) -> Subspace {
        let mut eqs: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for ((i, j), v) in &self.tensor {
            for (t, c) in v {
                eqs.entry((*i, *t)).or_default().push((*j, c.clone()));
            }
        }
        self.nullspace_of(eqs)
    }

    /// Center `{x : [x,y] = [y,x] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        let mut eqs: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for ((i, j), v) in &self.tensor {
            for (t, c) in v {
                eqs.entry((*i, *t)).or_default().push((*j, c.clone()));
                eqs.entry((self.dim + *j, *t)).or_default().push((*i, c.clone()));
            }
        }
        self.nullspace_of(eqs)
    }

    fn nullspace_of(&self, eqs: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>) -> Subspace {
        let mut el = Eliminator::new();
        for (_, terms) in eqs {
            el.insert_rational(&terms);
        }
        let rows: Vec<Element> = el
            .nullspace_rows(self.dim)
            .iter()
            .map(|r| sparse_to_dense(self.dim, r))
            .collect();
        Subspace::from_spanning(self.dim, &rows)
    }

    /// Membership checks forced by the Leibniz identity: every square
    /// `[x,x]` and every symmetrization `[x,y] + [y,x]` must land in the
    /// right annihilator. Violations witness a broken table.
    pub fn annihilator_spotcheck(&self) -> SpotcheckReport {
        let ann = self.right_annihilator();
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut v = sparse_to_dense(self.dim, &self.basis_bracket(i, j));
                if i != j {
                    let w = sparse_to_dense(self.dim, &self.basis_bracket(j, i));
                    for k in 0..self.dim {
                        v[k] += &w[k];
                    }
                }
                if !ann.contains(&v) {
                    violations.push((i, j));
                }
            }
        }
        SpotcheckReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Span of all products `[s, t]`, s in S, t in T.
    pub fn subspace_product(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim || t.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: s.ambient_dim(),
                right: t.ambient_dim(),
            });
        }
        let mut rows = Vec::new();
        for a in 0..s.dim() {
            for b in 0..t.dim() {
                let v = self.bracket(s.basis().row(a), t.basis().row(b))?;
                if !is_zero_vec(&v) {
                    rows.push(v);
                }
            }
        }
        Ok(Subspace::from_spanning(self.dim, &rows))
    }

    pub fn lower_central_series(&self) -> SeriesReport {
        self.series(SeriesKind::LowerCentral)
    }

    pub fn derived_series(&self) -> SeriesReport {
        self.series(SeriesKind::Derived)
    }

    fn series(&self, kind: SeriesKind) -> SeriesReport {
        let full = Subspace::full(self.dim);
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = match kind {
                SeriesKind::LowerCentral => self.subspace_product(last, &full),
                SeriesKind::Derived => self.subspace_product(last, last),
            }
            .expect("ambient dimensions agree by construction");
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let stabilized_at = terms.len();
        let terminates_at_zero = terms.last().unwrap().is_zero();
        SeriesReport {
            kind,
            terms,
            stabilized_at,
            terminates_at_zero,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().terminates_at_zero
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().terminates_at_zero
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        if s.ambient_dim() != self.dim {
            return false;
        }
        for r in 0..s.dim() {
            let row = s.basis().row(r);
            for b in 0..self.dim {
                let eb = unit_vec(self.dim, b);
                let left = self.bracket(row, &eb).expect("dims agree");
                let right = self.bracket(&eb, row).expect("dims agree");
                if !s.contains(&left) || !s.contains(&right) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by a two-sided ideal. The quotient basis is the set of
    /// ambient coordinates away from the ideal's pivots, so quotients by
    /// coordinate-spanned ideals keep their original labels and indices.
    pub fn quotient(&self, s: &Subspace) -> Result<Algebra> {
        if !self.is_ideal(s) {
            return Err(Error::NotAnIdeal);
        }
        let coords = s.complement_coords();
        let qdim = coords.len();
        let labels = coords.iter().map(|&c| self.labels[c].clone()).collect();
        let mut q = Algebra::new(qdim, labels);
        for (a, &ca) in coords.iter().enumerate() {
            for (b, &cb) in coords.iter().enumerate() {
                let v = self.basis_bracket(ca, cb);
                if v.is_empty() {
                    continue;
                }
                let reduced = s.reduce(&sparse_to_dense(self.dim, &v));
                let sparse: SparseElem = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !reduced[c].is_zero())
                    .map(|(q_idx, &c)| (q_idx, reduced[c].clone()))
                    .collect();
                if !sparse.is_empty() {
                    q.set_bracket(a, b, sparse);
                }
            }
        }
        Ok(q)
    }

    /// The subalgebra structure on a bracket-closed subspace, in the
    /// coordinates of its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Algebra> {
        let d = s.dim();
        let labels = s
            .pivots()
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect();
        let mut out = Algebra::new(d, labels);
        for a in 0..d {
            for b in 0..d {
                let v = self.bracket(s.basis().row(a), s.basis().row(b))?;
                if !s.contains(&v) {
                    return Err(Error::NotClosed);
                }
                // Coordinates w.r.t. an RREF basis are just the pivot entries.
                let sparse: SparseElem = s
                    .pivots()
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| !v[p].is_zero())
                    .map(|(r, &p)| (r, v[p].clone()))
                    .collect();
                if !sparse.is_empty() {
                    out.set_bracket(a, b, sparse);
                }
            }
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let dim = self.dim + other.dim;
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut name = l.clone();
            while labels.contains(&name) {
                name.push('\'');
            }
            labels.push(name);
        }
        let mut out = Algebra::new(dim, labels);
        for ((i, j), v) in &self.tensor {
            out.set_bracket(*i, *j, v.clone());
        }
        for ((i, j), v) in &other.tensor {
            let shifted = v.iter().map(|(k, c)| (k + self.dim, c.clone())).collect();
            out.set_bracket(i + self.dim, j + self.dim, shifted);
        }
        out
    }

    /// Matrix of right multiplication `y -> [y, x]` (row convention).
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let mut m = Matrix::zero(self.dim, self.dim);
        for ((i, j), v) in &self.tensor {
            if x[*j].is_zero() {
                continue;
            }
            for (k, c) in v {
                let val = m.at(*i, *k) + &x[*j] * c;
                m.set(*i, *k, val);
            }
        }
        Ok(m)
    }

    /// Matrix of left multiplication `y -> [x, y]` (row convention).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let mut m = Matrix::zero(self.dim, self.dim);
        for ((i, j), v) in &self.tensor {
            if x[*i].is_zero() {
                continue;
            }
            for (k, c) in v {
                let val = m.at(*j, *k) + &x[*i] * c;
                m.set(*j, *k, val);
            }
        }
        Ok(m)
    }

    /// Degree of each basis vector in the lower-central filtration:
    /// `deg(b) = max { t : b in L^t }`. Requires nilpotency.
    pub fn filtration_degrees(&self) -> Result<Vec<usize>> {
        let series = self.lower_central_series();
        if !series.terminates_at_zero {
            return Err(Error::NotNilpotentAlgebra);
        }
        let mut degs = vec![1; self.dim];
        for (t, term) in series.terms.iter().enumerate() {
            for (i, deg) in degs.iter_mut().enumerate() {
                if term.contains(&unit_vec(self.dim, i)) {
                    *deg = t + 1;
                }
            }
        }
        Ok(degs)
    }

    /// True iff every structure constant is homogeneous for the given
    /// degrees: `c_ij^l != 0` implies `deg(l) = deg(i) + deg(j)`. This
    /// certifies that the basis is adapted to the natural gradation.
    pub fn graded_check(&self, degrees: &[usize]) -> Result<bool> {
        if degrees.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: degrees.len(),
            });
        }
        for ((i, j), v) in &self.tensor {
            for (l, _) in v {
                if degrees[*l] != degrees[*i] + degrees[*j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Characteristic-sequence certificate: the lexicographic maximum of
    /// the Jordan shapes of right multiplications over a finite sample of
    /// elements outside L^2, together with the witness attaining it. The
    /// true invariant maximizes over all of L \ L^2, so the certificate is
    /// a lower bound; for the families built here the maximum is attained
    /// at a basis vector.
    pub fn characteristic_sequence(
        &self,
        sample: Option<&[Element]>,
    ) -> Result<CharSeqCertificate> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotentAlgebra);
        }
        if self.dim == 0 {
            return Ok(CharSeqCertificate {
                sequence: Vec::new(),
                witness: Vec::new(),
            });
        }
        let l2 = self.subspace_product(&Subspace::full(self.dim), &Subspace::full(self.dim))?;
        let candidates: Vec<Element> = match sample {
            Some(xs) => {
                for x in xs {
                    self.check_len(x)?;
                    if l2.contains(x) {
                        return Err(Error::SampleInDerivedSubspace);
                    }
                }
                xs.to_vec()
            }
            None => default_charseq_sample(self.dim, &l2),
        };
        let mut best: Option<(Vec<usize>, Element)> = None;
        for x in candidates {
            let r = self.right_mul_matrix(&x)?;
            let blocks = r.jordan_blocks_nilpotent()?;
            if best.as_ref().map_or(true, |(b, _)| blocks > *b) {
                best = Some((blocks, x));
            }
        }
        let (sequence, witness) = best.expect("sample is nonempty for dim > 0");
        Ok(CharSeqCertificate { sequence, witness })
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn describe_triple(&self, (i, j, l): (usize, usize, usize)) -> String {
        format!("({},{},{})", self.labels[i], self.labels[j], self.labels[l])
    }

    // ---- JSON document form ----

    pub fn to_doc(&self) -> AlgebraDoc {
        let brackets = self
            .tensor
            .iter()
            .map(|((i, j), v)| BracketDoc {
                left: i + 1,
                right: j + 1,
                value: v
                    .iter()
                    .map(|(k, c)| ((k + 1).to_string(), format_scalar(c)))
                    .collect(),
            })
            .collect();
        AlgebraDoc {
            schema: Some(SCHEMA.to_string()),
            dim: self.dim,
            labels: self.labels.clone(),
            brackets,
        }
    }

    pub fn from_doc(doc: &AlgebraDoc) -> Result<Algebra> {
        if let Some(s) = &doc.schema {
            if s != SCHEMA {
                return Err(Error::InvalidDocument(format!("unknown schema {s:?}")));
            }
        }
        if doc.labels.len() != doc.dim {
            return Err(Error::InvalidDocument(format!(
                "{} labels for dimension {}",
                doc.labels.len(),
                doc.dim
            )));
        }
        let mut alg = Algebra::new(doc.dim, doc.labels.clone());
        let mut seen = std::collections::BTreeSet::new();
        for b in &doc.brackets {
            if b.left == 0 || b.left > doc.dim || b.right == 0 || b.right > doc.dim {
                return Err(Error::InvalidDocument(format!(
                    "bracket index ({},{}) out of range 1..={}",
                    b.left, b.right, doc.dim
                )));
            }
            if !seen.insert((b.left, b.right)) {
                return Err(Error::InvalidDocument(format!(
                    "duplicate bracket pair ({},{})",
                    b.left, b.right
                )));
            }
            let mut value = Vec::new();
            for (key, lit) in &b.value {
                let k: usize = key
                    .parse()
                    .map_err(|_| Error::InvalidDocument(format!("bad index key {key:?}")))?;
                if k == 0 || k > doc.dim {
                    return Err(Error::InvalidDocument(format!(
                        "value index {k} out of range 1..={}",
                        doc.dim
                    )));
                }
                value.push((k - 1, parse_scalar(lit)?));
            }
            if !value.is_empty() {
                alg.set_bracket(b.left - 1, b.right - 1, value);
            }
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("document serializes")
    }

    pub fn from_json(json: &str) -> Result<Algebra> {
        let doc: AlgebraDoc = serde_json::from_str(json)?;
        Self::from_doc(&doc)
    }
}

/// All 0/1 combinations of up to three complement basis vectors of L^2;
/// the documented default sample for characteristic sequences.
fn default_charseq_sample(dim: usize, l2: &Subspace) -> Vec<Element> {
    let coords = l2.complement_coords();
    let mut out = Vec::new();
    for (a, &ca) in coords.iter().enumerate() {
        out.push(unit_vec(dim, ca));
        for (b, &cb) in coords.iter().enumerate().skip(a + 1) {
            let mut v = unit_vec(dim, ca);
            add_scaled(&mut v, &Scalar::from_integer(1.into()), &unit_vec(dim, cb));
            out.push(v.clone());
            for &cc in coords.iter().skip(b + 1) {
                let mut w = v.clone();
                add_scaled(&mut w, &Scalar::from_integer(1.into()), &unit_vec(dim, cc));
                out.push(w);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Strictly decreasing terms, starting with the full space, ending at
    /// the first stabilized term.
    pub terms: Vec<Subspace>,
    /// 1-based index of the stabilized term.
    pub stabilized_at: usize,
    pub terminates_at_zero: bool,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

#[derive(Debug, Clone)]
pub struct LeibnizReport {
    pub ok: bool,
    pub violations: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct SpotcheckReport {
    pub ok: bool,
    pub violations: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct CharSeqCertificate {
    pub sequence: Vec<usize>,
    pub witness: Element,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketDoc {
    pub left: usize,
    pub right: usize,
    pub value: BTreeMap<String, String>,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {} algebra on {{{}}}", self.dim, self.labels.join(", "))?;
        for ((i, j), v) in &self.tensor {
            let terms: Vec<String> = v
                .iter()
                .map(|(k, c)| {
                    if c.is_one() {
                        self.labels[*k].clone()
                    } else {
                        format!("{}*{}", format_scalar(c), self.labels[*k])
                    }
                })
                .collect();
            writeln!(
                f,
                "  [{},{}] = {}",
                self.labels[*i],
                self.labels[*j],
                terms.join(" + ")
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

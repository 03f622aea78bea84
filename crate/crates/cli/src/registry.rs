//! The claim registry: every structural statement the suite verifies,
//! with a fixed id, a human-readable statement, and a runner producing
//! one record per instance. Registry order fixes report order.

use serde_json::json;

use leibniz_core::algebra::Algebra;
use leibniz_core::cohomology::{hl2, verify_relative_basis, RelativeContext};
use leibniz_core::derivations::{
    derivation_pattern, derivation_space, diagonal_functionals, inner_derivation_space,
    is_complete, verify_derivation_pattern, verify_nilradical_candidate,
};
use leibniz_core::families::{
    make_l_gamma, make_mu1, make_mu2, make_mu3, make_r_mu1, make_r_mu2, make_r_mu3, make_rm,
    make_rn, make_rnkm, mu_even_grid, mu_odd_grid, FamilyId, GammaVector, Mu3Form, RMu1Params,
    RMu2Params,
};
use leibniz_core::isomorphism::{
    is_isomorphism, mu3_change_of_basis, witness_isomorphism_mu1, witness_isomorphism_mu2,
};
use leibniz_core::sample::Sampler;
use leibniz_core::subspace::Subspace;

use crate::report::{SuiteConfig, Verdict};

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub run: fn(&SuiteConfig, &mut Sampler) -> Vec<Outcome>,
}

pub struct Outcome {
    pub instance: String,
    pub verdict: Verdict,
    pub evidence: serde_json::Value,
}

fn outcome(instance: String, ok: bool, evidence: serde_json::Value) -> Outcome {
    Outcome {
        instance,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        evidence,
    }
}

pub fn registry() -> Vec<Claim> {
    vec![
        Claim {
            id: "leibniz-mu-tables",
            statement: "the mu1/mu2/mu3 multiplication tables satisfy the Leibniz identity \
                        on every basis triple",
            run: run_leibniz_mu_tables,
        },
        Claim {
            id: "mu3-two-forms-isomorphic",
            statement: "the explicit change of basis carries the convenient form of mu3 \
                        onto the original form",
            run: run_mu3_two_forms,
        },
        Claim {
            id: "derivation-pattern-mu1",
            statement: "the derivation space of mu1(n,k) equals the block form with \
                        parameters a, b, c, D1, D2 (dimension n + k + 2k^2)",
            run: run_pattern_mu1,
        },
        Claim {
            id: "derivation-pattern-mu2",
            statement: "the derivation space of mu2(n,k) equals the block form with the \
                        pinned D1 column and D3 = D1 + a1*Id - sum b_j E_1j",
            run: run_pattern_mu2,
        },
        Claim {
            id: "derivation-pattern-mu3",
            statement: "the derivation space of mu3(n,k) (convenient form) equals the block \
                        form with parameters a1, a2, beta and coupled B rows",
            run: run_pattern_mu3,
        },
        Claim {
            id: "diagonal-rank-mu1",
            statement: "the diagonal parameters (d_11..d_kk) of Der(mu1) have rank k: at \
                        most k nil-independent derivations",
            run: run_rank_mu1,
        },
        Claim {
            id: "diagonal-rank-mu2",
            statement: "the diagonal parameters (b1, d_22..d_kk) of Der(mu2) have rank k",
            run: run_rank_mu2,
        },
        Claim {
            id: "diagonal-rank-mu3",
            statement: "the diagonal parameters (a1, a2, d_11..d_kk) of Der(mu3) have rank k+2",
            run: run_rank_mu3,
        },
        Claim {
            id: "right-annihilator-r-families",
            statement: "in R(mu1,k), R(mu2,k), R(mu3,k+2): e2..e_{n-2k} and f_{k+1}..f_{2k} \
                        lie in the right annihilator, e1 and f1..fk do not",
            run: run_annihilator,
        },
        Claim {
            id: "solvable-extension-leibniz",
            statement: "the solvable extension tables R(mu1,k), R(mu2,k), R(mu3,k+2) define \
                        Leibniz algebras for arbitrary rational parameters, solvable and \
                        non-nilpotent",
            run: run_extension_leibniz,
        },
        Claim {
            id: "nilradical-certificates",
            statement: "the designated nilpotent part of each solvable extension is an ideal, \
                        nilpotent, and every complement generator acts non-nilpotently",
            run: run_nilradical,
        },
        Claim {
            id: "scaling-isomorphism-mu1",
            statement: "R(mu1,k)(params) and R(mu1,k)(scaled params) are isomorphic via the \
                        explicit diagonal basis change, for any nonzero scale",
            run: run_scaling_mu1,
        },
        Claim {
            id: "scaling-isomorphism-mu2",
            statement: "R(mu2,k)(params) and R(mu2,k)(scaled params) are isomorphic via the \
                        explicit diagonal basis change, for any nonzero scale",
            run: run_scaling_mu2,
        },
        Claim {
            id: "rn-derivation-form",
            statement: "every derivation of R_n has the 2k+1 parameter form (a; b_i; c_i) \
                        acting diagonally on the chain and moving y_i into f_i",
            run: run_rn_derivation_form,
        },
        Claim {
            id: "rn-complete",
            statement: "R_n is complete: trivial center and all derivations inner",
            run: run_rn_complete,
        },
        Claim {
            id: "rn-quotient-tables",
            statement: "quotients of R_n by the coordinate ideals reproduce the R_m and \
                        R_{n-k+m} tables entry by entry",
            run: run_quotients,
        },
        Claim {
            id: "relative-cochains-rm",
            statement: "each generator of the R_m cochain family, completed by its relation \
                        system, is both a cocycle and a coboundary of R_{m+1}; the family is \
                        independent of size m + 2k + 2",
            run: run_relative_rm,
        },
        Claim {
            id: "relative-cochains-rnkm",
            statement: "each generator of the R_{n-k+m} cochain family is both a cocycle and \
                        a coboundary of R_{n-k+m+1}; the family is independent of size \
                        n + k + m + 2",
            run: run_relative_rnkm,
        },
        Claim {
            id: "rigidity-rm",
            statement: "HL^2(R_m, R_m) = 0: the chain quotients are cohomologically rigid",
            run: run_rigidity_rm,
        },
        Claim {
            id: "rigidity-rn",
            statement: "HL^2(R_n, R_n) = 0: R(mu3,k+2) is cohomologically rigid",
            run: run_rigidity_rn,
        },
        Claim {
            id: "rigidity-lgamma",
            statement: "HL^2(L(gamma)) = 0 for every gamma in {-1,0}^k",
            run: run_rigidity_lgamma,
        },
        Claim {
            id: "lgamma-automorphisms",
            statement: "f_i -> alpha_i f_i, x_i -> beta_i f_i + x_i is an automorphism of \
                        L(gamma) exactly when every alpha_i is nonzero and \
                        (1 + gamma_i) beta_i = 0",
            run: run_lgamma_automorphisms,
        },
    ]
}

fn run_leibniz_mu_tables(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        for (name, alg) in [
            (format!("mu1(n={n},k={k})"), make_mu1(n, k)),
            (format!("mu2(n={n},k={k})"), make_mu2(n, k)),
        ] {
            out.push(leibniz_outcome(name, alg.expect("grid is valid")));
        }
    }
    for (n, k) in mu_odd_grid(cfg.n_max, cfg.k_max) {
        for (tag, form) in [("original", Mu3Form::Original), ("convenient", Mu3Form::Convenient)]
        {
            let alg = make_mu3(n, k, form).expect("grid is valid");
            out.push(leibniz_outcome(format!("mu3(n={n},k={k},{tag})"), alg));
        }
    }
    out
}

fn leibniz_outcome(instance: String, alg: Algebra) -> Outcome {
    let report = alg.check_leibniz();
    let witness: Vec<String> = report
        .violations
        .iter()
        .take(3)
        .map(|t| alg.describe_triple(*t))
        .collect();
    outcome(
        instance,
        report.ok,
        json!({ "violations": report.violations.len(), "first": witness }),
    )
}

fn run_mu3_two_forms(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    mu_odd_grid(cfg.n_max, cfg.k_max)
        .into_iter()
        .map(|(n, k)| {
            let orig = make_mu3(n, k, Mu3Form::Original).expect("grid is valid");
            let conv = make_mu3(n, k, Mu3Form::Convenient).expect("grid is valid");
            let p = mu3_change_of_basis(n, k);
            let ok = is_isomorphism(&conv, &orig, &p).unwrap_or(false);
            outcome(format!("mu3(n={n},k={k})"), ok, json!({ "isomorphic": ok }))
        })
        .collect()
}

fn pattern_outcomes(
    grid: Vec<(usize, usize)>,
    family: FamilyId,
    make: fn(usize, usize) -> leibniz_core::error::Result<Algebra>,
    label: &str,
) -> Vec<Outcome> {
    grid.into_iter()
        .map(|(n, k)| {
            let alg = make(n, k).expect("grid is valid");
            let der = derivation_space(&alg);
            let spec = derivation_pattern(family, n, k).expect("pattern exists");
            let report = verify_derivation_pattern(&alg, &der, &spec).expect("sizes agree");
            outcome(
                format!("{label}(n={n},k={k})"),
                report.ok,
                json!({
                    "dim_computed": report.dim_computed,
                    "dim_pattern": report.dim_pattern,
                    "violations": report.violations,
                }),
            )
        })
        .collect()
}

fn run_pattern_mu1(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    pattern_outcomes(
        mu_even_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu1,
        make_mu1,
        "mu1",
    )
}

fn run_pattern_mu2(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    pattern_outcomes(
        mu_even_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu2,
        make_mu2,
        "mu2",
    )
}

fn run_pattern_mu3(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    pattern_outcomes(
        mu_odd_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu3Convenient,
        |n, k| make_mu3(n, k, Mu3Form::Convenient),
        "mu3",
    )
}

fn rank_outcomes(
    grid: Vec<(usize, usize)>,
    family: FamilyId,
    make: fn(usize, usize) -> leibniz_core::error::Result<Algebra>,
    label: &str,
    expected: fn(usize) -> usize,
) -> Vec<Outcome> {
    grid.into_iter()
        .map(|(n, k)| {
            let alg = make(n, k).expect("grid is valid");
            let der = derivation_space(&alg);
            let rank = diagonal_functionals(&der, family, n, k)
                .expect("family supported")
                .rank();
            let want = expected(k);
            outcome(
                format!("{label}(n={n},k={k})"),
                rank == want,
                json!({ "rank": rank, "expected": want }),
            )
        })
        .collect()
}

fn run_rank_mu1(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    rank_outcomes(
        mu_even_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu1,
        make_mu1,
        "mu1",
        |k| k,
    )
}

fn run_rank_mu2(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    rank_outcomes(
        mu_even_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu2,
        make_mu2,
        "mu2",
        |k| k,
    )
}

fn run_rank_mu3(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    rank_outcomes(
        mu_odd_grid(cfg.n_max, cfg.k_max),
        FamilyId::Mu3Convenient,
        |n, k| make_mu3(n, k, Mu3Form::Convenient),
        "mu3",
        |k| k + 2,
    )
}

/// e2..e_{n-2k}, f_{k+1}..f_{2k} inside Ann_r; e1, f1..fk outside.
fn annihilator_outcome(instance: String, alg: &Algebra, m: usize, k: usize) -> Outcome {
    let ann = alg.right_annihilator();
    let n = alg.dim();
    let member = |idx: usize| ann.contains(&leibniz_core::scalar::unit_vec(n, idx));
    let mut ok = true;
    for i in 1..m {
        ok &= member(i); // e_{i+1}
    }
    for j in k..2 * k {
        ok &= member(m + j); // f_{k+j}
    }
    ok &= !member(0); // e1
    for j in 0..k {
        ok &= !member(m + j); // f_{j+1}
    }
    outcome(instance, ok, json!({ "dim_ann_r": ann.dim() }))
}

fn run_annihilator(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        let p1 = RMu1Params::sample(n, k, rng);
        let a1 = make_r_mu1(n, k, &p1).expect("grid is valid");
        out.push(annihilator_outcome(
            format!("Rmu1(n={n},k={k})"),
            &a1,
            n - 2 * k,
            k,
        ));
        let p2 = RMu2Params::sample(k, rng);
        let a2 = make_r_mu2(n, k, &p2).expect("grid is valid");
        out.push(annihilator_outcome(
            format!("Rmu2(n={n},k={k})"),
            &a2,
            n - 2 * k,
            k,
        ));
    }
    for (n, k) in mu_odd_grid(cfg.n_max, cfg.k_max) {
        let a3 = make_r_mu3(n, k).expect("grid is valid");
        out.push(annihilator_outcome(
            format!("Rmu3(n={n},k={k})"),
            &a3,
            n - 2 * k,
            k,
        ));
    }
    out
}

fn run_extension_leibniz(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        for s in 0..cfg.samples {
            let p = RMu1Params::sample(n, k, rng);
            let alg = make_r_mu1(n, k, &p).expect("grid is valid");
            let ok = alg.check_leibniz().ok && alg.is_solvable() && !alg.is_nilpotent();
            out.push(outcome(
                format!("Rmu1(n={n},k={k}) sample {s}"),
                ok,
                json!({ "dim": alg.dim() }),
            ));
            let q = RMu2Params::sample(k, rng);
            let alg = make_r_mu2(n, k, &q).expect("grid is valid");
            let ok = alg.check_leibniz().ok && alg.is_solvable() && !alg.is_nilpotent();
            out.push(outcome(
                format!("Rmu2(n={n},k={k}) sample {s}"),
                ok,
                json!({ "dim": alg.dim() }),
            ));
        }
    }
    for (n, k) in mu_odd_grid(cfg.n_max, cfg.k_max) {
        let alg = make_r_mu3(n, k).expect("grid is valid");
        let ok = alg.check_leibniz().ok && alg.is_solvable() && !alg.is_nilpotent();
        out.push(outcome(
            format!("Rmu3(n={n},k={k})"),
            ok,
            json!({ "dim": alg.dim() }),
        ));
    }
    out
}

fn run_nilradical(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        let p = RMu1Params::sample(n, k, rng);
        let alg = make_r_mu1(n, k, &p).expect("grid is valid");
        let nil = Subspace::coordinate(alg.dim(), &(0..n).collect::<Vec<_>>());
        let r = verify_nilradical_candidate(&alg, &nil).expect("dims agree");
        out.push(outcome(
            format!("Rmu1(n={n},k={k})"),
            r.ok,
            json!({ "is_ideal": r.is_ideal, "nilpotent": r.restricted_nilpotent }),
        ));
        let q = RMu2Params::sample(k, rng);
        let alg = make_r_mu2(n, k, &q).expect("grid is valid");
        let r = verify_nilradical_candidate(&alg, &nil).expect("dims agree");
        out.push(outcome(
            format!("Rmu2(n={n},k={k})"),
            r.ok,
            json!({ "is_ideal": r.is_ideal, "nilpotent": r.restricted_nilpotent }),
        ));
    }
    for (n, k) in mu_odd_grid(cfg.n_max, cfg.k_max) {
        let alg = make_r_mu3(n, k).expect("grid is valid");
        let nil = Subspace::coordinate(alg.dim(), &(0..n).collect::<Vec<_>>());
        let r = verify_nilradical_candidate(&alg, &nil).expect("dims agree");
        out.push(outcome(
            format!("Rmu3(n={n},k={k})"),
            r.ok,
            json!({ "is_ideal": r.is_ideal, "nilpotent": r.restricted_nilpotent }),
        ));
    }
    out
}

fn run_scaling_mu1(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        for s in 0..cfg.samples.max(1) {
            let p = RMu1Params::sample(n, k, rng);
            let scale = rng.nonzero_rational();
            let (w, ok) = witness_isomorphism_mu1(n, k, &p, &scale).expect("valid sizes");
            out.push(outcome(
                format!("Rmu1(n={n},k={k}) sample {s}"),
                ok,
                json!({ "scale": scale.to_string(), "witness": w.to_string_rows() }),
            ));
        }
    }
    out
}

fn run_scaling_mu2(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k) in mu_even_grid(cfg.n_max, cfg.k_max) {
        for s in 0..cfg.samples.max(1) {
            let p = RMu2Params::sample(k, rng);
            let scale = rng.nonzero_rational();
            let (w, ok) = witness_isomorphism_mu2(n, k, &p, &scale).expect("valid sizes");
            out.push(outcome(
                format!("Rmu2(n={n},k={k}) sample {s}"),
                ok,
                json!({ "scale": scale.to_string(), "witness": w.to_string_rows() }),
            ));
        }
    }
    out
}

const RN_INSTANCES: [(usize, usize); 4] = [(5, 2), (6, 2), (7, 2), (7, 3)];

fn run_rn_derivation_form(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    RN_INSTANCES
        .iter()
        .map(|&(n, k)| {
            let alg = make_rn(n, k).expect("valid sizes");
            let der = derivation_space(&alg);
            let spec = derivation_pattern(FamilyId::Rn, n, k).expect("pattern exists");
            let report = verify_derivation_pattern(&alg, &der, &spec).expect("sizes agree");
            outcome(
                format!("Rn(n={n},k={k})"),
                report.ok && report.dim_computed == 2 * k + 1,
                json!({ "dim": report.dim_computed, "expected": 2 * k + 1 }),
            )
        })
        .collect()
}

fn run_rn_complete(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    RN_INSTANCES
        .iter()
        .map(|&(n, k)| {
            let alg = make_rn(n, k).expect("valid sizes");
            let der = derivation_space(&alg);
            let inner = inner_derivation_space(&alg);
            let complete = is_complete(&alg);
            outcome(
                format!("Rn(n={n},k={k})"),
                complete && der.dim() == 2 * k + 1,
                json!({
                    "dim_der": der.dim(),
                    "dim_inner": inner.dim(),
                    "center": alg.center().dim(),
                }),
            )
        })
        .collect()
}

/// The chain ideal of R_n must run through the satellite vectors
/// e_{n-k+1}..e_n: the bare span e_{m+1}..e_{n-k} is not an ideal
/// ([e_{n-k}, f1] = e_{n-k+1} escapes it), so the R_m quotient is taken
/// by e_{m+1}..e_n. The narrower span is recorded as a flagged finding,
/// not silently corrected.
fn run_quotients(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (n, k, m) in [(6usize, 2usize, 2usize), (7, 3, 3), (7, 2, 4)] {
        let rn = make_rn(n, k).expect("valid sizes");
        let dim = rn.dim();
        let full_ideal = Subspace::coordinate(dim, &(m..n).collect::<Vec<_>>());
        let q = rn.quotient(&full_ideal);
        let rm = make_rm(m, k).expect("valid sizes");
        let ok = matches!(&q, Ok(alg) if *alg == rm);
        out.push(outcome(
            format!("Rn(n={n},k={k}) / span{{e{}..e{n}}} == Rm(m={m})", m + 1),
            ok,
            json!({ "quotient_dim": rm.dim() }),
        ));

        if m < n - k {
            let narrow = Subspace::coordinate(dim, &(m..n - k).collect::<Vec<_>>());
            let is_ideal = rn.is_ideal(&narrow);
            out.push(Outcome {
                instance: format!(
                    "Rn(n={n},k={k}): span{{e{}..e{}}} alone",
                    m + 1,
                    n - k
                ),
                verdict: if is_ideal { Verdict::Fail } else { Verdict::Flagged },
                evidence: json!({
                    "is_ideal": is_ideal,
                    "note": "the chain span without the satellite vectors is not an ideal; \
                             the quotient above extends it through e_n",
                }),
            });
        }
    }
    for (n, k, m) in [(6usize, 2usize, 2usize), (7, 3, 2), (7, 3, 3)] {
        let rn = make_rn(n, k).expect("valid sizes");
        let dim = rn.dim();
        let ideal = Subspace::coordinate(dim, &(n - k + m..n).collect::<Vec<_>>());
        let q = rn.quotient(&ideal);
        let target = make_rnkm(n, k, m).expect("valid sizes");
        let ok = matches!(&q, Ok(alg) if *alg == target);
        out.push(outcome(
            format!(
                "Rn(n={n},k={k}) / span{{e{}..e{n}}} == Rnkm(m={m})",
                n - k + m + 1
            ),
            ok,
            json!({ "quotient_dim": target.dim() }),
        ));
    }
    out
}

const RM_CONTEXTS: [(usize, usize); 4] = [(1, 2), (2, 2), (3, 2), (2, 3)];
const RNKM_CONTEXTS: [(usize, usize, usize); 4] = [(5, 2, 1), (6, 2, 1), (7, 3, 1), (7, 3, 2)];

fn relative_outcome(ctx: RelativeContext, instance: String) -> Outcome {
    match verify_relative_basis(&ctx) {
        Ok(report) => {
            let bad: Vec<String> = report
                .generators
                .iter()
                .filter(|g| !g.is_cocycle || !g.is_coboundary)
                .map(|g| g.name.clone())
                .collect();
            outcome(
                instance,
                report.ok,
                json!({
                    "count": report.count,
                    "expected": report.expected_count,
                    "independent": report.independent,
                    "failing": bad,
                }),
            )
        }
        Err(e) => outcome(instance, false, json!({ "error": e.to_string() })),
    }
}

fn run_relative_rm(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    RM_CONTEXTS
        .iter()
        .map(|&(m, k)| {
            relative_outcome(
                RelativeContext::Rm { m, k },
                format!("Rm context (m={m},k={k})"),
            )
        })
        .collect()
}

fn run_relative_rnkm(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    RNKM_CONTEXTS
        .iter()
        .map(|&(n, k, m)| {
            relative_outcome(
                RelativeContext::Rnkm { n, k, m },
                format!("Rnkm context (n={n},k={k},m={m})"),
            )
        })
        .collect()
}

fn rigidity_outcome(instance: String, alg: &Algebra) -> Outcome {
    let report = hl2(alg);
    outcome(
        instance,
        report.rigid,
        json!({
            "dim_z2": report.dim_z2,
            "dim_b2": report.dim_b2,
            "dim_hl2": report.dim_hl2,
        }),
    )
}

fn run_rigidity_rm(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for k in [2usize, 3] {
        let alg = make_rm(1, k).expect("valid sizes");
        out.push(rigidity_outcome(format!("R1 (k={k})"), &alg));
    }
    for m in 2..=4usize {
        let alg = make_rm(m, 2).expect("valid sizes");
        out.push(rigidity_outcome(format!("Rm (m={m},k=2)"), &alg));
    }
    out
}

fn run_rigidity_rn(_cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    [(5usize, 2usize), (6, 2)]
        .iter()
        .map(|&(n, k)| {
            let alg = make_rn(n, k).expect("valid sizes");
            rigidity_outcome(format!("Rn(n={n},k={k})"), &alg)
        })
        .collect()
}

fn run_rigidity_lgamma(cfg: &SuiteConfig, _rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for k in 1..=cfg.k_max.min(3) {
        for gamma in GammaVector::all(k) {
            let alg = make_l_gamma(&gamma);
            out.push(rigidity_outcome(
                format!("Lgamma(g={:?})", gamma.entries()),
                &alg,
            ));
        }
    }
    out
}

fn run_lgamma_automorphisms(cfg: &SuiteConfig, rng: &mut Sampler) -> Vec<Outcome> {
    let mut out = Vec::new();
    for k in 1..=cfg.k_max.min(3) {
        for gamma in GammaVector::all(k) {
            let alg = make_l_gamma(&gamma);
            let mut ok = true;
            for _ in 0..cfg.samples.max(1) {
                let alphas: Vec<_> = (0..k).map(|_| rng.nonzero_rational()).collect();
                // admissible betas: beta_i = 0 unless gamma_i = -1
                let betas: Vec<_> = gamma
                    .entries()
                    .iter()
                    .map(|&g| {
                        if g == -1 {
                            rng.rational()
                        } else {
                            leibniz_core::scalar::int(0)
                        }
                    })
                    .collect();
                let p = leibniz_core::isomorphism::l_gamma_automorphism(&gamma, &alphas, &betas);
                ok &= is_isomorphism(&alg, &alg, &p).unwrap_or(false);
                // violating the constraint must break the homomorphism law
                if let Some(pos) = gamma.entries().iter().position(|&g| g == 0) {
                    let mut bad = betas.clone();
                    bad[pos] = rng.nonzero_rational();
                    let p = leibniz_core::isomorphism::l_gamma_automorphism(&gamma, &alphas, &bad);
                    ok &= !leibniz_core::isomorphism::is_homomorphism(&alg, &alg, &p)
                        .map(|(h, _)| h)
                        .unwrap_or(true);
                }
            }
            out.push(outcome(
                format!("Lgamma(g={:?})", gamma.entries()),
                ok,
                json!({}),
            ));
        }
    }
    out
}

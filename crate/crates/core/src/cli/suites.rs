//! The named verification suites.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::diagram_tableaux::{
    col_c_d, hook_length_dim, idem_d, kostka, standard_young_tableaux, tab_d, Tableau,
};
use crate::exact_linear::{minimal_polynomial, operator_rank, Polynomial, Scalar, SparseOperator};
use crate::hecke_algebra::{
    gram_matrix, symmetrizing_form, CyclotomicParams, HeckeAlgebra, HeckeElement,
};
use crate::rep_modules::{
    dipper_mathas_dim_check, divided_power_space, lemma_is_check, lemma_s_check,
    permutation_module, specht_flag_from_modules, specht_module, weight_space_report,
    PermutationModule, PermutationWorkspace,
};
use crate::schur_algebra::{
    double_centralizer_filtered, double_centralizer_graded, weight_idempotents, xi_basis,
    xi_basis_report, CentralizerOptions, XiElement,
};
use crate::tensor_representation::{pad_for_faithfulness, row_removal, xi_operator, TensorSpace};

use super::report::{InstanceSummary, SkippedSuite, SuiteReport, SCHEMA_VERSION};
use super::{CliError, Instance};

/// Every suite except `all`, in report order.
pub const SUITES: [&str; 13] = [
    "dipper-mathas",
    "double-centralizer-filtered",
    "double-centralizer-graded",
    "hecke-basis",
    "idempotents",
    "kostka-lemma-s",
    "min-poly",
    "permutation",
    "row-removal",
    "specht",
    "specht-flag",
    "symmetrizing-form",
    "xi-basis",
];

/// Optional dumps added to the report.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Include every `Ξ_{i,j}` with its coefficients (suite `xi-basis`).
    pub dump_xi: bool,
    /// Include the generator images as triplet lists.
    pub dump: bool,
}

/// Values shared between the suites of one run.
struct Context<'a> {
    inst: &'a Instance,
    space: OnceLock<Result<TensorSpace, CliError>>,
    xi: OnceLock<Vec<XiElement>>,
    modules: OnceLock<Result<Vec<PermutationModule>, CliError>>,
}

impl<'a> Context<'a> {
    fn new(inst: &'a Instance) -> Self {
        Context {
            inst,
            space: OnceLock::new(),
            xi: OnceLock::new(),
            modules: OnceLock::new(),
        }
    }

    fn space(&self) -> Result<&TensorSpace, CliError> {
        let inst = self.inst;
        self.space
            .get_or_init(|| {
                TensorSpace::new(
                    inst.diagram.clone(),
                    inst.origin.clone(),
                    inst.d,
                    inst.caps.max_tensor_dim,
                )
                .map_err(CliError::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn xi(&self) -> Result<&[XiElement], CliError> {
        let space = self.space()?;
        Ok(self.xi.get_or_init(|| xi_basis(space)))
    }

    fn workspace(&self) -> Result<PermutationWorkspace<'_>, CliError> {
        Ok(PermutationWorkspace::new(
            self.space()?,
            self.xi()?,
            self.inst.caps.exact_limit,
        )?)
    }

    /// `M(A, c)` for every `A ∈ Tab^d`, in enumeration order.
    fn modules(&self) -> Result<&[PermutationModule], CliError> {
        self.modules
            .get_or_init(|| {
                let ws = self.workspace()?;
                tab_d(&self.inst.diagram, self.inst.d)
                    .iter()
                    .map(|a| permutation_module(&ws, a).map_err(CliError::from))
                    .collect()
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn params(&self) -> CyclotomicParams {
        CyclotomicParams::from_diagram(&self.inst.diagram, &self.inst.origin, self.inst.d)
    }

    fn hecke_dim(&self) -> Result<u128, CliError> {
        let n = self.params().dimension().expect("cyclotomic");
        let cap = self.inst.caps.max_hecke_dim;
        if n > cap {
            return Err(CliError::CapExceeded {
                what: "Hecke algebra".into(),
                required: n,
                cap,
            });
        }
        Ok(n)
    }
}

type Outcome = Result<(bool, Value), CliError>;

/// Runs `suite` on `inst`.
pub fn run(suite: &str, inst: &Instance, opts: RunOptions) -> Result<SuiteReport, CliError> {
    let ctx = Context::new(inst);
    if suite == "all" {
        let start = Instant::now();
        let mut reports = Vec::new();
        let mut skipped = Vec::new();
        for name in SUITES {
            match run_one(&ctx, name, opts) {
                Ok(r) => reports.push(r),
                Err(e) => skipped.push(SkippedSuite {
                    suite: name.into(),
                    reason: e.to_string(),
                }),
            }
        }
        let pass = reports.iter().all(|r| r.pass);
        return Ok(SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: "all".into(),
            instance: InstanceSummary::from(inst),
            pass,
            measured: json!({ "suites": reports, "skipped": skipped }),
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    if !SUITES.contains(&suite) {
        return Err(CliError::UnknownSuite(suite.into()));
    }
    run_one(&ctx, suite, opts)
}

fn run_one(ctx: &Context, suite: &str, opts: RunOptions) -> Result<SuiteReport, CliError> {
    let start = Instant::now();
    let (pass, mut measured) = match suite {
        "dipper-mathas" => dipper_mathas(ctx),
        "double-centralizer-filtered" => centralizer(ctx, false),
        "double-centralizer-graded" => centralizer(ctx, true),
        "hecke-basis" => hecke_basis(ctx),
        "idempotents" => idempotents(ctx),
        "kostka-lemma-s" => kostka_lemma_s(ctx),
        "min-poly" => min_poly(ctx),
        "permutation" => permutation(ctx),
        "row-removal" => rows(ctx),
        "specht" => specht(ctx),
        "specht-flag" => specht_flag(ctx),
        "symmetrizing-form" => form(ctx),
        "xi-basis" => xi(ctx, opts.dump_xi),
        other => Err(CliError::UnknownSuite(other.into())),
    }?;
    if opts.dump {
        let g = ctx.space()?.generator_images();
        measured["operators"] = json!({
            "x": g.x.iter().map(triplets).collect::<Vec<_>>(),
            "s": g.s.iter().map(triplets).collect::<Vec<_>>(),
        });
    }
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.into(),
        instance: InstanceSummary::from(ctx.inst),
        pass,
        measured,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// `[[row, col, "n/d"], …]` in column-major order.
fn triplets(op: &SparseOperator) -> Value {
    Value::Array(
        op.triplets()
            .into_iter()
            .map(|(r, c, v)| json!([r, c, v]))
            .collect(),
    )
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn hecke_basis(ctx: &Context) -> Outcome {
    let inst = ctx.inst;
    let n = ctx.hecke_dim()?;
    let d = inst.d;
    let extra = d.saturating_sub(inst.diagram.parts_equal_to_level());
    let padded = Arc::new(pad_for_faithfulness(&inst.diagram, extra));
    let space = TensorSpace::new(
        padded.clone(),
        inst.origin.clone(),
        d,
        inst.caps.max_tensor_dim,
    )?;
    let alg = HeckeAlgebra::new(space.params());
    let basis = alg.basis().expect("cyclotomic");
    let ops: Vec<SparseOperator> = basis.iter().map(|m| space.psi_monomial(m)).collect();
    let rank = operator_rank(&ops);
    let psi = |a: &HeckeElement| -> Result<SparseOperator, CliError> { Ok(space.psi(a)?) };
    let gens = alg.generators();
    let mut generator_mismatches = 0;
    for g in &gens {
        for h in &gens {
            if psi(&g.mul(h)?)? != psi(h)?.mul(&psi(g)?) {
                generator_mismatches += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut random = || {
        let mut terms = Vec::new();
        for _ in 0..3 {
            let m = &basis[rng.gen_range(0..basis.len())];
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            terms.push((m.exps.clone(), m.perm.clone(), Scalar::from_int(c)));
        }
        alg.from_terms(&terms)
    };
    let random_pairs = 50;
    let mut random_mismatches = 0;
    for _ in 0..random_pairs {
        let (a, b) = (random(), random());
        if psi(&a.mul(&b)?)? != psi(&b)?.mul(&psi(&a)?) {
            random_mismatches += 1;
        }
    }
    let pass = rank as u128 == n && generator_mismatches == 0 && random_mismatches == 0;
    Ok((
        pass,
        json!({
            "hecke_dim": n,
            "padded_parts": padded.parts(),
            "tensor_dim": space.dim(),
            "rank": rank,
            "generator_pairs": gens.len() * gens.len(),
            "generator_mismatches": generator_mismatches,
            "random_pairs": random_pairs,
            "random_mismatches": random_mismatches,
        }),
    ))
}

fn min_poly(ctx: &Context) -> Outcome {
    if ctx.inst.d == 0 {
        return Err(CliError::Precondition("x_1 needs d >= 1".into()));
    }
    let space = ctx.space()?;
    let f = minimal_polynomial(&space.generator_images().x[0]);
    let expected = Polynomial::from_roots(space.roots());
    Ok((
        f == expected,
        json!({ "polynomial": f.to_string(), "expected": expected.to_string(), "roots": space.roots() }),
    ))
}

fn centralizer(ctx: &Context, graded: bool) -> Outcome {
    let space = ctx.space()?;
    let opts = CentralizerOptions {
        exact_limit: ctx.inst.caps.exact_limit,
    };
    let r = if graded {
        double_centralizer_graded(space, &opts)
    } else {
        double_centralizer_filtered(space, &opts)
    };
    Ok((r.pass, to_value(&r)))
}

fn xi(ctx: &Context, dump: bool) -> Outcome {
    let space = ctx.space()?;
    let basis = ctx.xi()?;
    let r = xi_basis_report(space, basis)?;
    let mut v = to_value(&r);
    if dump {
        v["elements"] = Value::Array(
            basis
                .iter()
                .map(|x| {
                    json!({
                        "i": x.i,
                        "j": x.j,
                        "degree": x.degree,
                        "coefficients": x.coefficients.iter().map(|((h, k), c)| json!([h, k, c])).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        );
    }
    Ok((r.pass, v))
}

fn form(ctx: &Context) -> Outcome {
    let cap = ctx.inst.caps.max_hecke_dim;
    ctx.hecke_dim()?;
    let params = ctx.params();
    let g = gram_matrix(&params, cap)?;
    let alg = HeckeAlgebra::new(params);
    let basis: Vec<HeckeElement> = alg
        .basis()
        .expect("cyclotomic")
        .iter()
        .map(|m| alg.basis_element(m))
        .collect();
    let mut trace_failures = 0;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if symmetrizing_form(&a.mul(b)?)? != symmetrizing_form(&b.mul(a)?)? {
                trace_failures += 1;
            }
        }
    }
    Ok((
        g.nonsingular && trace_failures == 0,
        json!({
            "hecke_dim": g.size,
            "gram_rank": g.rank,
            "nonsingular": g.nonsingular,
            "trace_pairs": basis.len() * basis.len().saturating_sub(1) / 2,
            "trace_failures": trace_failures,
        }),
    ))
}

fn idempotents(ctx: &Context) -> Outcome {
    let space = ctx.space()?;
    let basis = ctx.xi()?;
    let es = weight_idempotents(space);
    let mut orthogonal = true;
    let mut sum = SparseOperator::zero(space.dim());
    for (a, ea) in es.iter().enumerate() {
        orthogonal &= ea.operator.mul(&ea.operator) == ea.operator;
        orthogonal &= es[a + 1..]
            .iter()
            .all(|eb| ea.operator.mul(&eb.operator).is_zero());
        sum = sum.add(&ea.operator);
    }
    let resolves_identity = sum == SparseOperator::identity(space.dim());
    let xi_ops: Vec<SparseOperator> = basis.iter().map(|x| x.operator.clone()).collect();
    let graded: Vec<SparseOperator> = basis
        .iter()
        .map(|x| xi_operator(space, &x.i, &x.j))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    let mut all = true;
    for a in idem_d(&ctx.inst.diagram, ctx.inst.d) {
        let r = lemma_is_check(space, basis, &a)?;
        let z = divided_power_space(space, &a)?;
        let invariant = z.idempotent_stable && z.is_invariant(&xi_ops) && z.is_invariant(&graded);
        all &= r.pass && invariant;
        rows.push(json!({ "lemma": r, "divided_power_invariant": invariant }));
    }
    Ok((
        orthogonal && resolves_identity && all,
        json!({
            "count": es.len(),
            "orthogonal": orthogonal,
            "resolves_identity": resolves_identity,
            "traces": es.iter().map(|e| e.trace).collect::<Vec<_>>(),
            "tableaux": rows,
        }),
    ))
}

fn permutation(ctx: &Context) -> Outcome {
    let space = ctx.space()?;
    let mut rows = Vec::new();
    let mut pass = true;
    for (a, m) in tab_d(&ctx.inst.diagram, ctx.inst.d)
        .iter()
        .zip(ctx.modules()?)
    {
        pass &= m.pass;
        if a.is_idempotent() {
            let r = weight_space_report(space, a, m.clone())?;
            pass &= r.pass;
            rows.push(to_value(&r));
        } else {
            rows.push(json!({ "module": m }));
        }
    }
    Ok((pass, json!({ "tableaux": rows })))
}

fn specht(ctx: &Context) -> Outcome {
    let inst = ctx.inst;
    let mut modules = Vec::new();
    let mut shapes = std::collections::BTreeSet::new();
    let mut pass = true;
    for b in col_c_d(&inst.diagram, &inst.origin, inst.d) {
        let s = specht_module(&b, &inst.origin)?;
        pass &= s.pass;
        shapes.extend(s.shapes.iter().filter(|m| !m.is_empty()).cloned());
        modules.push(s);
    }
    let hooks_agree = shapes
        .iter()
        .all(|m| hook_length_dim(m) == standard_young_tableaux(m).len() as u128);
    Ok((
        pass && hooks_agree,
        json!({ "modules": modules, "hook_formula_agrees": hooks_agree }),
    ))
}

fn kostka_lemma_s(ctx: &Context) -> Outcome {
    let inst = ctx.inst;
    let mut pass = true;
    let mut rows = Vec::new();
    for a in tab_d(&inst.diagram, inst.d) {
        let r = lemma_s_check(&a, &inst.origin)?;
        pass &= r.pass;
        rows.push(r);
    }
    let mut measured = json!({ "lemma_s": rows });
    let boxes = inst.diagram.boxes();
    if inst.d > 0 && inst.d.is_multiple_of(boxes) {
        let r = (inst.d / boxes) as i64;
        let target = Tableau::origin_tableau(inst.diagram.clone(), &inst.origin.shifted(r));
        let values: Vec<u64> = idem_d(&inst.diagram, inst.d)
            .iter()
            .map(|a| kostka(&target, a, &inst.origin))
            .collect::<Result<_, _>>()?;
        let ones = values.iter().filter(|v| **v == 1).count();
        let unique = ones == 1 && values.iter().all(|v| *v <= 1);
        pass &= unique;
        measured["shift_multiplicity_one"] = json!({ "r": r, "values": values, "pass": unique });
    }
    Ok((pass, measured))
}

fn specht_flag(ctx: &Context) -> Outcome {
    let r = specht_flag_from_modules(ctx.space()?, ctx.modules()?)?;
    Ok((r.pass, to_value(&r)))
}

fn dipper_mathas(ctx: &Context) -> Outcome {
    let inst = ctx.inst;
    let r = dipper_mathas_dim_check(
        &inst.diagram,
        &inst.origin,
        inst.d,
        inst.caps.max_tensor_dim,
        inst.caps.exact_limit,
    )?;
    Ok((r.pass, to_value(&r)))
}

fn rows(ctx: &Context) -> Outcome {
    let space = ctx.space()?;
    let n = ctx.inst.diagram.rows();
    if n < 2 {
        return Err(CliError::Precondition(
            "row removal needs at least two rows".into(),
        ));
    }
    let n_bar = ctx.inst.n_bar.unwrap_or(n - 1);
    let r = row_removal(space, n_bar, ctx.inst.caps.max_hecke_dim)?;
    let surjective = r.surjective_consistent();
    Ok((
        r.equivariant && r.intertwines && surjective != Some(false),
        json!({
            "kept_parts": r.sub_space.diagram().parts(),
            "equivariant": r.equivariant,
            "intertwines": r.intertwines,
            "rank_sub": r.rank_sub,
            "rank_full": r.rank_full,
            "surjective_consistent": surjective,
        }),
    ))
}

use std::path::Path;

use conelab::json::{
    cone_element_from_json, dims_from_json, dims_to_json, family_from_json, family_to_json, matrix_from_json,
    realization_from_json, realization_to_json, sigma_to_json,
};
use conelab::rank3::{
    build_rank3_cone, build_rank3_dual, classify_degrees, composition_family, coupling_decomposition,
    det_rank3_closed, det_rank3_dual_closed, family_3_5_7, DualRank3Element, Rank3Element,
};
use conelab::{
    degrees_from_sigma, iterate_construction, rank_cap, sigma_from_dims, CompositionError, ConditionOutcome,
    DegreeError, DimTable, ProjectionError, QCompositionFamily, QConeElement, QRealization, Rank3Error,
    RationalSampler, VerificationReport, RANK_CAP_ENV,
};
use serde_json::{json, Value};

use crate::output::{emit, rational, read_json, CmdResult, Failure};

pub struct Context {
    pub seed: u64,
    pub approx: bool,
    pub num_bound: i64,
    pub den_bound: i64,
}

impl Context {
    fn sampler(&self) -> Result<RationalSampler, Failure> {
        if self.num_bound < 1 || self.den_bound < 1 {
            return Err(Failure::input("sampler bounds must be positive"));
        }
        Ok(RationalSampler::with_bounds(self.seed, self.num_bound, self.den_bound))
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::input(e.to_string())
}

fn load_realization(path: &Path) -> Result<QRealization, Failure> {
    realization_from_json(&read_json(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_family(path: &Path) -> Result<QCompositionFamily, Failure> {
    family_from_json(&read_json(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn outcome_json(o: &ConditionOutcome) -> Value {
    let witness = o.counterexample.map(|w| {
        json!({ "k": w.k + 1, "j": w.j + 1, "i": w.i + 1, "a": w.a + 1, "b": w.b + 1 })
    });
    json!({ "holds": o.holds(), "counterexample": witness })
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "passed": r.passed(),
        "product": outcome_json(&r.product),
        "transpose_product": outcome_json(&r.transpose_product),
        "scalar": outcome_json(&r.scalar),
    })
}

fn degree_failure(e: DegreeError) -> Failure {
    match e {
        DegreeError::Inconsistent { .. } | DegreeError::Triple { .. } => Failure::semantic(e.to_string()),
        _ => Failure::input(e.to_string()),
    }
}

fn rank3_failure(e: Rank3Error) -> Failure {
    match e {
        Rank3Error::Composition(CompositionError::Relation { .. })
        | Rank3Error::Composition(CompositionError::AboveBound { .. })
        | Rank3Error::Conditions(_) => Failure::semantic(e.to_string()),
        _ => Failure::input(e.to_string()),
    }
}

pub fn sigma(dims: Option<&Path>, family_dims: Option<&[usize]>, powers: Option<usize>) -> CmdResult {
    let table = match (dims, family_dims, powers) {
        (Some(p), _, _) => dims_from_json(&read_json(p)?).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        (_, Some(&[r, s, n]), _) => DimTable::rank3(r, s, n),
        (_, _, Some(r)) if r >= 1 => DimTable::powers_of_two(r),
        _ => return Err(Failure::input("need --dims FILE, --family-dims R S N, or --powers-of-two R >= 1")),
    };
    let sigma = sigma_from_dims(&table).map_err(degree_failure)?;
    emit(&sigma_to_json(&sigma), None)
}

fn check_rank(rank: usize) -> Result<(), Failure> {
    let cap = rank_cap();
    if rank == 0 || rank > cap {
        return Err(Failure::input(format!(
            "rank must be in 1..={cap} (override the cap with {RANK_CAP_ENV})"
        )));
    }
    Ok(())
}

pub fn theorem(rank: usize) -> CmdResult {
    check_rank(rank)?;
    let v: QRealization = iterate_construction(rank);
    let report = v.verify_conditions();
    if !report.passed() {
        return Err(Failure::invariant("closure conditions fail on the doubling family")
            .with_output(json!({ "conditions": report_json(&report) })));
    }
    let dims = v.measured_dims();
    if dims != DimTable::powers_of_two(rank) {
        return Err(Failure::invariant("measured dimensions differ from 2^(k-j)"));
    }
    if v.size() != (1 << rank) - 1 {
        return Err(Failure::invariant(format!("N = {} differs from 2^r - 1", v.size())));
    }
    let sigma = sigma_from_dims(&dims).map_err(|e| Failure::invariant(e.to_string()))?;
    let degrees = degrees_from_sigma(&sigma);
    if degrees.last() != Some(&(1u64 << (rank - 1))) {
        return Err(Failure::invariant(format!("last degree {:?} differs from 2^(r-1)", degrees.last())));
    }
    emit(
        &json!({
            "rank": rank,
            "N": v.size(),
            "dims": dims_to_json(&dims)["dims"],
            "sigma": sigma.entries(),
            "degrees": degrees,
            "verified": true,
        }),
        None,
    )
}

pub fn iterate(rank: usize, out: Option<&Path>) -> CmdResult {
    check_rank(rank)?;
    emit(&realization_to_json(&iterate_construction(rank)), out)
}

pub fn double(input: &Path, out: Option<&Path>) -> CmdResult {
    let v = load_realization(input)?;
    check_rank(v.rank() + 1)?;
    let report = v.verify_conditions();
    if !report.passed() {
        return Err(Failure::semantic("input realization fails the closure conditions")
            .with_output(json!({ "conditions": report_json(&report) })));
    }
    emit(&realization_to_json(&conelab::double(&v)), out)
}

/// A point is given either in coordinates (`diag`/`off`) or as a full
/// symmetric matrix under `"matrix"`.
fn load_point(v: &QRealization, path: &Path) -> Result<QConeElement, Failure> {
    let value = read_json(path)?;
    if let Some(m) = value.get("matrix") {
        let m = matrix_from_json(m, "matrix").map_err(input_err)?;
        return v.project(&m).map_err(|e| match e {
            ProjectionError::NotInSpan { k, j } => {
                Failure::semantic(format!("point is not in V: block ({}, {}) is outside V_kj", k + 1, j + 1))
            }
            ProjectionError::NonScalarDiagonal(k) => {
                Failure::semantic(format!("point is not in V: diagonal block {} is not scalar", k + 1))
            }
            ProjectionError::NonZeroUpper { k, j } => {
                Failure::semantic(format!("point is not in V: block ({}, {}) breaks symmetry", k + 1, j + 1))
            }
            other => Failure::input(format!("{}: {other}", path.display())),
        });
    }
    cone_element_from_json(v, &value).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub fn member(ctx: &Context, cone: &Path, point: &Path) -> CmdResult {
    let v = load_realization(cone)?;
    let x = load_point(&v, point)?;
    let res = v.ldl_decompose(&x).map_err(|e| Failure::semantic(e.to_string()))?;
    let out = json!({
        "member": res.is_member,
        "in_closure": res.in_closure(),
        "pivots": res.pivots.iter().map(|d| rational(d, ctx.approx)).collect::<Vec<_>>(),
        "breakdown": res.breakdown.map(|b| b + 1),
    });
    if res.is_member {
        emit(&out, None)
    } else {
        let why = match res.breakdown {
            Some(b) => format!("not a member: zero pivot over a nonzero column at block {}", b + 1),
            None => "not a member: a pivot is not positive".to_string(),
        };
        Err(Failure::semantic(why).with_output(out))
    }
}

pub fn verify(cone: &Path) -> CmdResult {
    let v = load_realization(cone)?;
    let report = v.verify_conditions();
    let dims = v.measured_dims();
    let degrees = sigma_from_dims(&dims).ok().map(|s| degrees_from_sigma(&s));
    let out = json!({
        "conditions": report_json(&report),
        "partition": v.partition().sizes(),
        "dims": dims_to_json(&dims)["dims"],
        "degrees": degrees,
    });
    if report.passed() {
        emit(&out, None)
    } else {
        Err(Failure::semantic("closure conditions fail").with_output(out))
    }
}

pub fn rank3_family(r: Option<usize>, n: Option<usize>, fixture: bool) -> CmdResult {
    let f = if fixture {
        family_3_5_7()
    } else {
        let (r, n) = (r.unwrap_or(0), n.unwrap_or(0));
        composition_family(r, n).map_err(|e| match e {
            CompositionError::AboveBound { .. } => Failure::semantic(e.to_string()),
            _ => Failure::input(e.to_string()),
        })?
    };
    emit(&family_to_json(&f), None)
}

pub fn rank3_verify(path: &Path) -> CmdResult {
    let f = load_family(path)?;
    let (r, s, n) = f.triple();
    if let Err(e) = f.verify() {
        let pair = match e {
            CompositionError::Relation { i, j } => json!([i, j]),
            _ => Value::Null,
        };
        return Err(Failure::semantic(e.to_string())
            .with_output(json!({ "triple": [r, s, n], "relations": false, "failing_pair": pair })));
    }
    f.consistency_lr().map_err(|e| Failure::invariant(e.to_string()))?;
    emit(&json!({ "triple": [r, s, n], "relations": true, "consistency": true }), None)
}

pub fn rank3_build(path: &Path, dual: bool) -> CmdResult {
    let f = load_family(path)?;
    let v = if dual { build_rank3_dual(&f) } else { build_rank3_cone(&f) }.map_err(rank3_failure)?;
    emit(&realization_to_json(&v), None)
}

pub fn rank3_classify(triple: &[usize]) -> CmdResult {
    let &[r, s, n] = triple else {
        return Err(Failure::input("--triple takes three integers"));
    };
    let c = classify_degrees(r, s, n).map_err(degree_failure)?;
    emit(&serde_json::to_value(&c).expect("classification serializes"), None)
}

pub fn rank3_det(ctx: &Context, family: &Path, point: &Path, dual: bool) -> CmdResult {
    let f = load_family(family)?;
    let v = if dual { build_rank3_dual(&f) } else { build_rank3_cone(&f) }.map_err(rank3_failure)?;
    let x = load_point(&v, point)?;
    let closed = if dual {
        DualRank3Element::from_cone(&f, &x).and_then(|e| det_rank3_dual_closed(&f, &e))
    } else {
        Rank3Element::from_cone(&f, &x).and_then(|e| det_rank3_closed(&f, &e))
    };
    let closed = match closed {
        Ok(d) => Some(d),
        Err(Rank3Error::Undefined(_)) => None,
        Err(e) => return Err(rank3_failure(e)),
    };
    let elimination = v.embed(&x).map_err(input_err)?.determinant();
    let agree = closed.as_ref().map(|c| *c == elimination);
    let out = json!({
        "closed_form": closed.as_ref().map(|c| rational(c, ctx.approx)),
        "elimination": rational(&elimination, ctx.approx),
        "agree": agree,
    });
    if agree == Some(false) {
        return Err(Failure::invariant("closed form and elimination disagree").with_output(out));
    }
    emit(&out, None)
}

pub fn rank3_duality(ctx: &Context, family: &Path, samples: usize) -> CmdResult {
    let f = load_family(family)?;
    if f.r() == 0 {
        return Err(Failure::input("the coupling decomposition needs r >= 1"));
    }
    let v = build_rank3_cone(&f).map_err(rank3_failure)?;
    let w = build_rank3_dual(&f).map_err(rank3_failure)?;
    let mut s = ctx.sampler()?;
    for i in 0..samples {
        let x = Rank3Element::from_cone(&f, &s.interior_point(&v)).map_err(rank3_failure)?;
        let xi = DualRank3Element::from_cone(&f, &s.interior_point(&w)).map_err(rank3_failure)?;
        let dec = coupling_decomposition(&f, &x, &xi).map_err(rank3_failure)?;
        if !dec.holds() || !dec.all_positive() {
            let terms: Vec<Value> = [&dec.first, &dec.second, &dec.third]
                .iter()
                .map(|t| rational(t, ctx.approx))
                .collect();
            let out = json!({ "sample": i, "coupling": rational(&dec.coupling, ctx.approx), "terms": terms });
            let what = if dec.holds() { "a decomposition term is not positive" } else { "decomposition identity fails" };
            return Err(Failure::invariant(format!("{what} at sample {i}")).with_output(out));
        }
    }
    emit(
        &json!({ "triple": f.triple(), "samples": samples, "seed": ctx.seed, "identity_holds": true, "terms_positive": true }),
        None,
    )
}

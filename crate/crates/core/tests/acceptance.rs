//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{det_oracle, positive_definite_oracle};
use conelab::rank3::*;
use conelab::{
    degrees_from_sigma, dual_degrees_rank3, iterate_construction, sigma_from_dims, ConeElement, DimTable,
    GroupElement, QRealization, Rational, RationalSampler,
};

type F = CompositionFamily<Rational>;
type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theorem_reproduction() -> Outcome {
    for r in 2..=7usize {
        let v: QRealization = iterate_construction(r);
        let report = v.verify_conditions();
        ensure(report.passed(), || format!("r = {r}: closure conditions fail: {report:?}"))?;
        ensure(v.measured_dims() == DimTable::powers_of_two(r), || format!("r = {r}: dims differ from 2^(k-j)"))?;
        ensure(v.size() == (1 << r) - 1, || format!("r = {r}: N = {}", v.size()))?;
        let sigma = sigma_from_dims(&v.measured_dims()).map_err(|e| e.to_string())?;
        let last = *degrees_from_sigma(&sigma).last().unwrap();
        ensure(last == 1 << (r - 1), || format!("r = {r}: deg Δ_r = {last}"))?;
    }
    Ok("r = 2..7 verified, N = 2^r - 1, deg Δ_r = 2^(r-1)".into())
}

fn sigma_closed_form() -> Outcome {
    for r in 2..=12usize {
        let sigma = sigma_from_dims(&DimTable::powers_of_two(r)).map_err(|e| e.to_string())?;
        for i in 0..r {
            for j in 0..r {
                let expected = match i.cmp(&j) {
                    std::cmp::Ordering::Greater => 1u64 << (i - j - 1),
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Less => 0,
                };
                ensure(sigma.get(i, j) == expected, || format!("r = {r}: σ[{i}][{j}] = {}", sigma.get(i, j)))?;
            }
        }
    }
    Ok("σ_ij = 2^(i-j-1) for r = 2..12".into())
}

fn classification_table() -> Outcome {
    let table = [
        ((2, 2, 2), [1, 2, 3], [3, 2, 1]),
        ((1, 2, 2), [1, 2, 4], [3, 2, 1]),
        ((3, 5, 7), [1, 2, 4], [4, 2, 1]),
        ((0, 4, 9), [1, 2, 2], [3, 1, 1]),
    ];
    for ((r, s, n), primal, dual) in table {
        let c = classify_degrees(r, s, n).map_err(|e| e.to_string())?;
        ensure(c.primal == primal && c.dual == dual, || format!("({r},{s},{n}): {c:?}"))?;
        let rederived = degrees_from_sigma(&sigma_from_dims(&DimTable::rank3(r, s, n)).map_err(|e| e.to_string())?);
        ensure(rederived == primal.to_vec(), || format!("({r},{s},{n}): σ gives {rederived:?}"))?;
        let d = dual_degrees_rank3(r, s, n).map_err(|e| e.to_string())?;
        ensure(d == dual, || format!("({r},{s},{n}): dual algorithm gives {d:?}"))?;
    }
    Ok("four published degree pairs reproduced and re-derived".into())
}

fn family(r: usize, s: usize, n: usize) -> F {
    if (r, s, n) == (3, 5, 7) {
        family_3_5_7()
    } else {
        assert_eq!(s, n);
        composition_family(r, n).expect("within the Hurwitz-Radon bound")
    }
}

fn determinants() -> Outcome {
    let triples = [(1, 1, 1), (2, 2, 2), (4, 4, 4), (8, 8, 8), (1, 2, 2), (3, 5, 7)];
    let mut s = RationalSampler::new(4);
    let mut checked = 0;
    for (r, sz, n) in triples {
        let f = family(r, sz, n);
        let v = build_rank3_cone(&f).map_err(|e| e.to_string())?;
        let w = build_rank3_dual(&f).map_err(|e| e.to_string())?;
        let (mut primal, mut dual) = (0, 0);
        while primal < 100 {
            let x = Rank3Element::from_cone(&f, &s.cone_element(&v)).unwrap();
            let Ok(closed) = det_rank3_closed(&f, &x) else { continue };
            let oracle = det_oracle(&v.embed(&x.to_cone(&f).unwrap()).unwrap());
            ensure(closed == oracle, || format!("({r},{sz},{n}) primal: {closed} vs {oracle}"))?;
            primal += 1;
        }
        while dual < 100 {
            let xi = DualRank3Element::from_cone(&f, &s.cone_element(&w)).unwrap();
            let Ok(closed) = det_rank3_dual_closed(&f, &xi) else { continue };
            let oracle = det_oracle(&xi.display_matrix(&f).unwrap());
            ensure(closed == oracle, || format!("({r},{sz},{n}) dual: {closed} vs {oracle}"))?;
            dual += 1;
        }
        checked += primal + dual;
    }
    Ok(format!("{checked} closed-form determinants equal the Bareiss oracle"))
}

fn duality() -> Outcome {
    let f = family_3_5_7::<Rational>();
    let v = build_rank3_cone(&f).map_err(|e| e.to_string())?;
    let w = build_rank3_dual(&f).map_err(|e| e.to_string())?;
    let mut s = RationalSampler::new(5);
    for i in 0..100 {
        let x = Rank3Element::from_cone(&f, &s.interior_point(&v)).unwrap();
        let xi = DualRank3Element::from_cone(&f, &s.interior_point(&w)).unwrap();
        let dec = coupling_decomposition(&f, &x, &xi).map_err(|e| e.to_string())?;
        ensure(dec.holds(), || format!("pair {i}: identity fails: {dec:?}"))?;
        ensure(dec.all_positive(), || format!("pair {i}: a term is not positive: {dec:?}"))?;
    }
    let mut closure = 0;
    for i in 0..150 {
        let point = match i % 4 {
            3 => s.interior_point(&v),
            b => s.boundary_point(&v, b),
        };
        let x = Rank3Element::from_cone(&f, &point).unwrap();
        let xi = DualRank3Element::from_cone(&f, &s.interior_point(&w)).unwrap();
        let c = coupling(&f, &x, &xi).map_err(|e| e.to_string())?;
        ensure(c > Rational::from_integer(0.into()), || format!("closure pair {i}: coupling {c}"))?;
        closure += 1;
    }
    Ok(format!("decomposition exact at 100 interior pairs; coupling positive at {closure} closure pairs"))
}

fn relative_invariance() -> Outcome {
    let cases: [(&str, F); 4] = [
        ("(1,2,2)", composition_family(1, 2).unwrap()),
        ("(3,4,4)", composition_family(3, 4).unwrap()),
        ("(0,2,3)", F::new(2, 3, vec![]).unwrap()),
        ("(0,4,9)", F::new(4, 9, vec![]).unwrap()),
    ];
    let mut s = RationalSampler::new(6);
    let mut total = 0;
    for (name, f) in &cases {
        for side in [Side::Primal, Side::Dual] {
            let sys = invariant_system(f, side).map_err(|e| e.to_string())?;
            let v = &sys.realization;
            let samples: Vec<(GroupElement<Rational>, ConeElement<Rational>)> = (0..50)
                .map(|i| {
                    let x = if i % 2 == 0 { s.interior_point(v) } else { s.cone_element(v) };
                    (s.group_element(v), x)
                })
                .collect();
            let report = relative_invariance_check(v, &sys.invariants, &sys.sigma, &samples).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("{name} {side:?}: {report:?}"))?;
            total += report.checked;
        }
    }
    Ok(format!("Δ_j(ρ(h)x) = χ_j(h) Δ_j(x) at {total} samples (cases 2 and 4, primal and dual)"))
}

fn hurwitz_radon() -> Outcome {
    for n in [1, 2, 4, 8, 16] {
        let r = hurwitz_radon_number(n);
        let f = composition_family::<Rational>(r, n).map_err(|e| e.to_string())?;
        f.verify().map_err(|e| format!("(ρ({n}) = {r}, {n}): {e}"))?;
    }
    let f = family_3_5_7::<Rational>();
    f.verify().map_err(|e| e.to_string())?;
    f.consistency_lr().map_err(|e| e.to_string())?;
    let y: Vec<Rational> = (1..=5).map(|b| Rational::from_integer(b.into())).collect();
    #[rustfmt::skip]
    let expected = conelab::QMatrix::from_ints(7, 3, &[
        1, 4, -3,
        2, -3, -4,
        3, 2, 1,
        4, -1, 2,
        5, 0, 0,
        0, 5, 0,
        0, 0, 5,
    ]);
    ensure(f.right(&y) == expected, || "fixture R(y) differs".into())?;
    Ok("maximal families for n = 1, 2, 4, 8, 16 and the (3,5,7) fixture verified".into())
}

fn membership_equivalence() -> Outcome {
    let f = family_3_5_7::<Rational>();
    let pool: Vec<(&str, QRealization)> = vec![
        ("Ω₂", iterate_construction(2)),
        ("Ω₃", iterate_construction(3)),
        ("(3,5,7)", build_rank3_cone(&f).map_err(|e| e.to_string())?),
    ];
    let mut s = RationalSampler::new(8);
    let (mut total, mut members) = (0, 0);
    for (name, v) in &pool {
        for i in 0..200 {
            let x = match i % 3 {
                0 => s.interior_point(v),
                1 => {
                    let mut x = s.interior_point(v);
                    let shift: Rational = s.scalar();
                    for d in &mut x.diag {
                        *d -= shift.clone();
                    }
                    x
                }
                _ => s.cone_element(v),
            };
            let ldl = v.ldl_decompose(&x).map_err(|e| e.to_string())?.is_member;
            let oracle = positive_definite_oracle(&v.embed(&x).unwrap());
            ensure(ldl == oracle, || format!("{name} sample {i}: ldl {ldl}, minors {oracle}"))?;
            total += 1;
            members += usize::from(ldl);
        }
    }
    Ok(format!("{total} points agree ({members} members, {} non-members)", total - members))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 doubling theorem", theorem_reproduction),
        ("2 sigma closed form", sigma_closed_form),
        ("3 classification table", classification_table),
        ("4 rank-3 determinants", determinants),
        ("5 duality coupling", duality),
        ("6 relative invariance", relative_invariance),
        ("7 Hurwitz-Radon families", hurwitz_radon),
        ("8 membership oracle", membership_equivalence),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS [{name}] {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{name}] {msg} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

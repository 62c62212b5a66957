use arith::quadratic::fundamental_discriminants;
use disc_calculus::{
    a4_relations, biquadratic_polynomial, bindings, closure_polynomial, compositum_valuation,
    coprime_compositum_valuation, maximal_order_disc, s3_closure_disc, verify_lemma_bundle, v4_complete, FactoredInt,
    Identity, RamificationProfile,
};
use fields::{enum_cubic_s3, Provenance, Signature};
use proptest::prelude::*;
use rayon::prelude::*;

fn quadratic_profile(d: i64) -> RamificationProfile {
    let f = FactoredInt::from_i64(d).unwrap();
    f.primes().fold(RamificationProfile::unramified(2), |prof, p| prof.with_cycles(p, vec![2]).unwrap())
}

fn pairs(bound: u64) -> Vec<(i64, i64)> {
    let discs = fundamental_discriminants(bound);
    let mut out = Vec::new();
    for (i, &x) in discs.iter().enumerate() {
        for &y in &discs[i + 1..] {
            out.push((x, y));
        }
    }
    out
}

#[test]
fn biquadratic_discs_match_tame_valuations() {
    for (d1, d2) in pairs(500) {
        let (_, dl) = v4_complete(d1, d2).unwrap();
        let (p1, p2) = (quadratic_profile(d1), quadratic_profile(d2));
        for p in dl.primes().filter(|&p| p != 2) {
            assert_eq!(compositum_valuation(&p1, &p2, p).unwrap(), dl.valuation(p) as u64, "({d1}, {d2}) at {p}");
        }
    }
}

#[test]
fn biquadratic_discs_match_maximal_orders() {
    let failures: Vec<(i64, i64)> = pairs(500)
        .into_par_iter()
        .filter(|&(d1, d2)| {
            let (_, dl) = v4_complete(d1, d2).unwrap();
            maximal_order_disc(&biquadratic_polynomial(d1, d2)).unwrap() != dl
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn closure_discs_match_maximal_orders() {
    for sig in [Signature::Negative, Signature::Positive] {
        let mut cubics: Vec<_> = enum_cubic_s3(2000, sig).collect();
        cubics.sort_by_key(|r| r.abs_disc());
        assert!(cubics.len() >= 20);
        for rec in &cubics[..20] {
            let Provenance::CubicForm(form) = &rec.provenance else { unreachable!() };
            let (_, d6) = s3_closure_disc(rec).unwrap();
            assert_eq!(maximal_order_disc(&closure_polynomial(form)).unwrap(), d6, "{}", rec.label());
        }
    }
}

proptest! {
    #[test]
    fn a4_relations_satisfy_all_equations(f in 1i64..60, g in 1i64..30) {
        let d3 = FactoredInt::from_i64(f * f).unwrap();
        let d4 = d3.mul(&FactoredInt::from_i64(g * g).unwrap());
        let (d6, dl) = a4_relations(&d4, &d3).unwrap();
        let b = bindings([("L", dl), ("L4", d4), ("L3", d3), ("L6", d6)]);
        let report = verify_lemma_bundle(&b, Identity::A4Closure).unwrap();
        prop_assert!(report.holds, "{:?}", report.residuals);
    }

    #[test]
    fn tame_formulas_agree(
        (m1, c1) in cycle_type(), (m2, c2) in cycle_type(), p in prop::sample::select(vec![5u64, 7, 11, 13])
    ) {
        let a = RamificationProfile::unramified(m1).with_cycles(p, c1).unwrap();
        let b = RamificationProfile::unramified(m2).with_cycles(p, c2).unwrap();
        prop_assume!(!a.is_wild_at(p) && !b.is_wild_at(p));
        let general = compositum_valuation(&a, &b, p).unwrap();
        if let Some(special) = coprime_compositum_valuation(&a, &b, p).unwrap() {
            prop_assert_eq!(general, special);
        }
    }
}

/// A degree in 2..=6 and a partition of it.
fn cycle_type() -> impl Strategy<Value = (u32, Vec<u32>)> {
    (2u32..=6).prop_flat_map(|m| {
        prop::collection::vec(1u32..=m, 1..=m as usize).prop_map(move |parts| {
            let mut out = Vec::new();
            let mut left = m;
            for x in parts {
                let take = x.min(left);
                if take == 0 {
                    break;
                }
                out.push(take);
                left -= take;
            }
            if left > 0 {
                out.push(left);
            }
            (m, out)
        })
    })
}

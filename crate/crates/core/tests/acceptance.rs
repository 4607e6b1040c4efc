//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use mdeg_core::autos::{composed_nagata_family, f_dk, sigma_form};
use mdeg_core::classify::{
    classify_tame, enumerate_wild, semigroup_member, wild_family, Certificate, RuleId, TameStatus,
};
use mdeg_core::lnd::{nagata_exp, nagata_n, Derivation, ExpBudget};
use mdeg_core::polyalg::{sigma, Degree, Monomial, Polynomial};
use mdeg_core::reduction::{
    even_family_certificate, su_lower_bound, type_iii_check, Conclusion, ReductionQuery,
};
use mdeg_core::{Multidegree, PolyMap};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6d64_6567;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn md(d1: u32, d2: u32, d3: u32) -> Multidegree {
    Multidegree::new(d1, d2, d3).expect("positive degrees")
}

fn parse(s: &str) -> Polynomial {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// Closed form written out as text and parsed, so it shares nothing with the
/// library's evaluation of the Nagata maps.
fn nagata_closed_form(k: u32) -> [Polynomial; 3] {
    let s = "(y^2 + x*z)";
    [
        parse(&format!("x - 2*y*{s}^{k} - z*{s}^{}", 2 * k)),
        parse(&format!("y + z*{s}^{k}")),
        parse("z"),
    ]
}

fn ac1_exponential_identity() -> Outcome {
    let start = Instant::now();
    for k in 1..=5 {
        let series = nagata_exp(k, ExpBudget::default()).map_err(|e| format!("k={k}: {e}"))?;
        ensure(series.coords() == &nagata_closed_form(k), || {
            format!("k={k}: series and closed form differ")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 10.0, || format!("took {elapsed:?}"))?;
    Ok(format!("k=1..5 term-for-term equal in {elapsed:.2?}"))
}

fn ac2_nagata_multidegree() -> Outcome {
    let m = nagata_n(1).multidegree().map_err(|e| e.to_string())?;
    ensure(m.as_array() == [5, 3, 1], || format!("got {m}"))?;
    Ok(format!("mdeg N_1 = {m}"))
}

fn ac3_fdk_multidegrees() -> Outcome {
    let mut n = 0;
    for d in 3..=12u32 {
        for k in 1..=5u32 {
            let got = f_dk(d, k)
                .and_then(|f| f.multidegree())
                .map_err(|e| e.to_string())?;
            let want = [d, d + k * (d + 1), d + 2 * k * (d + 1)];
            ensure(got.as_array() == want, || {
                format!("F_{{{d},{k}}}: got {got}, want {want:?}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} maps F_{{d,k}}, d=3..12, k=1..5"))
}

fn ac4_composed_nagata_family() -> Outcome {
    let mut n = 0;
    for l in 1..=4u32 {
        for k in 1..=4u32 {
            let f = composed_nagata_family(l, k).map_err(|e| e.to_string())?;
            let got = f.multidegree().map_err(|e| e.to_string())?;
            let r = 4 * l + 1;
            ensure(got.as_array() == [r, r + 2 * k, r + 4 * k], || {
                format!("l={l}, k={k}: got {got}")
            })?;
            let inner = PolyMap::from_coords([
                parse("z"),
                parse(&format!("y + z*(y^2+x*z)^{l}")),
                parse(&format!("x - 2*y*(y^2+x*z)^{l} - z*(y^2+x*z)^{}", 2 * l)),
            ]);
            ensure(sigma_form(&inner) == sigma(), || {
                format!("l={l}: g^2+fh != sigma")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs (l,k) in 1..4, g^2+fh = y^2+xz"))
}

fn ac5_inverse_certificates() -> Outcome {
    let mut n = 0;
    let check = |name: String, f: PolyMap| -> Result<(), String> {
        let inv = f.inverse().map_err(|e| format!("{name}: {e}"))?;
        ensure(f.compose(&inv).is_identity(), || {
            format!("{name}: F∘F⁻¹ != id")
        })?;
        ensure(inv.compose(&f).is_identity(), || {
            format!("{name}: F⁻¹∘F != id")
        })
    };
    for d in 3..=12u32 {
        for k in 1..=5u32 {
            check(
                format!("F_{{{d},{k}}}"),
                f_dk(d, k).map_err(|e| e.to_string())?,
            )?;
            n += 1;
        }
    }
    for l in 1..=4u32 {
        for k in 1..=4u32 {
            check(
                format!("composed({l},{k})"),
                composed_nagata_family(l, k).map_err(|e| e.to_string())?,
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} maps, both composites are the identity"))
}

fn ac6_classifier_ground_truths() -> Outcome {
    let status = |t: Multidegree| {
        classify_tame(&t)
            .map(|c| c.status)
            .map_err(|e| e.to_string())
    };
    for (t, want) in [
        (md(3, 4, 5), TameStatus::NotTame),
        (md(3, 6, 11), TameStatus::Tame),
        (md(5, 7, 9), TameStatus::NotTame),
        (md(4, 9, 14), TameStatus::NotTame),
        (md(5, 3, 1).sorted(), TameStatus::Tame),
    ] {
        let got = status(t)?;
        ensure(got == want, || format!("{t}: got {got}, want {want}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..10 {
        let d2 = rng.gen_range(1..=40u32);
        let d3 = rng.gen_range(d2..=80u32);
        let t = md(1, d2, d3);
        let c = classify_tame(&t).map_err(|e| e.to_string())?;
        ensure(c.status == TameStatus::Tame && c.rule == RuleId::R1, || {
            format!("{t}: {} by {}", c.status, c.rule)
        })?;
        let Certificate::WitnessMap(w) = &c.certificate else {
            return Err(format!("{t}: no witness map"));
        };
        let got = w.multidegree().map_err(|e| e.to_string())?;
        ensure(got == t, || format!("{t}: witness has multidegree {got}"))?;
        ensure(w.verify_inverse().map_err(|e| e.to_string())?, || {
            format!("{t}: witness not invertible")
        })?;
    }
    Ok("5 fixed triples and 10 random (1,d2,d3) witnesses".into())
}

fn ac7_semigroup_oracle() -> Outcome {
    const LIMIT: usize = 200;
    let mut cases = 0;
    for d1 in 1..=12u64 {
        for d2 in 1..=12u64 {
            // reachability table built by dynamic programming
            let mut reach = [false; LIMIT + 1];
            reach[0] = true;
            for n in 1..=LIMIT {
                let n64 = n as u64;
                reach[n] = (n64 >= d1 && reach[(n64 - d1) as usize])
                    || (n64 >= d2 && reach[(n64 - d2) as usize]);
            }
            for d3 in 0..=LIMIT as u64 {
                let got = semigroup_member(d1, d2, d3);
                ensure(got.is_some() == reach[d3 as usize], || {
                    format!("({d1},{d2},{d3})")
                })?;
                if let Some(w) = got {
                    ensure(w.a * d1 + w.b * d2 == d3, || {
                        format!("bad witness for ({d1},{d2},{d3})")
                    })?;
                }
                cases += 1;
            }
            if d1 >= 2 && d2 >= 2 && num_integer::gcd(d1, d2) == 1 {
                let frob = d1 * d2 - d1 - d2;
                ensure(semigroup_member(d1, d2, frob).is_none(), || {
                    format!("Frobenius number {frob} of ({d1},{d2}) is a member")
                })?;
                ensure(
                    (frob + 1..=frob + d1.min(d2)).all(|n| semigroup_member(d1, d2, n).is_some()),
                    || format!("gap above Frobenius number of ({d1},{d2})"),
                )?;
            }
        }
    }
    Ok(format!(
        "{cases} membership queries match, Frobenius boundary holds"
    ))
}

fn ac8_reduction_inequalities() -> Outcome {
    let mut n = 0;
    for d in (6..=14u32).step_by(2) {
        for k in (1..=5u32).filter(|k| num_integer::gcd(d, *k) == 1) {
            let cert = even_family_certificate(d, k).map_err(|e| format!("({d},{k}): {e}"))?;
            for report in &cert.reports {
                if let Some(bad) = report.inequalities.iter().find(|c| !c.holds) {
                    return Err(format!("({d},{k}) {:?}: {bad}", report.coordinate));
                }
                ensure(report.conclusion == Conclusion::ReductionImpossible, || {
                    format!("({d},{k}) {:?} inconclusive", report.coordinate)
                })?;
            }
            let t = cert.triple;
            ensure(t.d2 % 2 == 1, || format!("{t}: d2 even"))?;
            ensure(type_iii_check(&t).excluded, || {
                format!("{t}: type III not excluded")
            })?;
            n += 1;
        }
    }
    Ok(format!(
        "{n} pairs (d,k), every coordinate reduction_impossible, type III excluded"
    ))
}

fn ac9_wild_enumeration() -> Outcome {
    let start = Instant::now();
    for d in 3..=9u32 {
        let list = enumerate_wild(d, 25).map_err(|e| format!("d={d}: {e}"))?;
        ensure(list.len() == 25, || {
            format!("d={d}: {} triples", list.len())
        })?;
        let distinct: BTreeSet<_> = list.iter().map(|(t, _)| t.as_array()).collect();
        ensure(distinct.len() == 25, || format!("d={d}: duplicates"))?;
        ensure(list.windows(2).all(|w| w[0].0.d2 < w[1].0.d2), || {
            format!("d={d}: d2 not increasing")
        })?;
        for (t, params) in &list {
            ensure(t.d1 == d, || format!("{t}: wrong d1"))?;
            let fresh = classify_tame(t).map_err(|e| e.to_string())?;
            ensure(fresh.status == TameStatus::NotTame, || {
                format!("{t}: {}", fresh.status)
            })?;
            let (triple, cls) = wild_family(*params).map_err(|e| format!("{t}: {e}"))?;
            ensure(triple == *t, || format!("{params}: {triple} != {t}"))?;
            let map = cls
                .certificate
                .map()
                .ok_or_else(|| format!("{t}: no map"))?;
            ensure(
                map.multidegree().map_err(|e| e.to_string())?.sorted() == *t,
                || format!("{t}: witness multidegree"),
            )?;
            ensure(map.verify_inverse().map_err(|e| e.to_string())?, || {
                format!("{t}: witness not invertible")
            })?;
        }
    }
    Ok(format!(
        "7 degrees x 25 triples, all NotTame with invertible witnesses in {:.2?}",
        start.elapsed()
    ))
}

fn random_poly(rng: &mut ChaCha8Rng) -> Polynomial {
    let terms = rng.gen_range(0..=4);
    Polynomial::from_terms((0..terms).map(|_| {
        let m = Monomial::new(
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
        );
        let c = BigRational::new(
            BigInt::from(rng.gen_range(-9..=9i64)),
            BigInt::from(rng.gen_range(1..=4i64)),
        );
        (m, c)
    }))
}

fn ac10_property_suites() -> Outcome {
    const N: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    for i in 0..N {
        let (f, g, h) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        ensure(&f + &g == &g + &f && &f * &g == &g * &f, || {
            format!("commutativity #{i}")
        })?;
        ensure(&(&f + &g) + &h == &f + &(&g + &h), || {
            format!("additive associativity #{i}")
        })?;
        ensure(&(&f * &g) * &h == &f * &(&g * &h), || {
            format!("multiplicative associativity #{i}")
        })?;
        ensure(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), || {
            format!("distributivity #{i}")
        })?;
        ensure(
            (&f + &(-&f)).is_zero() && &f * &Polynomial::one() == f,
            || format!("identities #{i}"),
        )?;
        let deg = |p: &Polynomial| p.total_degree();
        let want = match (deg(&f), deg(&g)) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        };
        ensure(deg(&(&f * &g)) == want, || {
            format!("degree multiplicativity #{i}")
        })?;
    }
    for i in 0..N {
        let d = Derivation::new(
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        let (f, g) = (random_poly(&mut rng), random_poly(&mut rng));
        ensure(
            d.apply(&(&f * &g)) == &(&d.apply(&f) * &g) + &(&f * &d.apply(&g)),
            || format!("Leibniz #{i}"),
        )?;
    }
    let mut checked = 0;
    while checked < N {
        let deg_f = rng.gen_range(1..=30u64);
        let deg_g = rng.gen_range(deg_f + 1..=60u64);
        let lb = rng.gen_range(2..=6u64);
        let q = rng.gen_range(0..=8u64);
        let p = deg_f / num_integer::gcd(deg_f, deg_g);
        let r = rng.gen_range(0..p);
        let bound = |lb, q, r| {
            ReductionQuery::new(deg_f, deg_g, lb, q, r)
                .map(|qy| su_lower_bound(&qy))
                .map_err(|e| e.to_string())
        };
        let base = bound(lb, q, r)?;
        ensure(bound(lb + 1, q, r)? >= base, || {
            format!("lb monotonicity at ({deg_f},{deg_g},{lb},{q},{r})")
        })?;
        if r + 1 < p {
            ensure(bound(lb, q, r + 1)? >= base, || {
                format!("r monotonicity at ({deg_f},{deg_g},{lb},{q},{r})")
            })?;
        }
        // with p = 1 the q coefficient deg_g(p-1) - deg_f + lb can be negative
        if p >= 2 {
            ensure(bound(lb, q + 1, r)? >= base, || {
                format!("q monotonicity at ({deg_f},{deg_g},{lb},{q},{r})")
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "{N} instances each: ring axioms, degree, Leibniz, su_lower_bound monotonicity"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 exponential identity", ac1_exponential_identity),
        ("AC2 Nagata multidegree", ac2_nagata_multidegree),
        ("AC3 F_{d,k} multidegrees", ac3_fdk_multidegrees),
        ("AC4 composed Nagata family", ac4_composed_nagata_family),
        ("AC5 automorphism certificates", ac5_inverse_certificates),
        ("AC6 classifier ground truths", ac6_classifier_ground_truths),
        ("AC7 semigroup oracle", ac7_semigroup_oracle),
        ("AC8 reduction inequalities", ac8_reduction_inequalities),
        ("AC9 wild enumeration", ac9_wild_enumeration),
        ("AC10 property suites", ac10_property_suites),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {name}: panicked");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

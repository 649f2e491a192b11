//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use setinf::characterizations::{bent_by_influence, concentration_threshold, is_bent, resiliency_order};
use setinf::geometry::{edge_boundary, path_census, t_influence_by_paths, walsh_from_paths_check, CensusMethod};
use setinf::influence::{
    bl_influence, fb_influence, gs_influence, influence, mu_probability, pseudo_influence,
    union_decomposition, AggregateAlgorithm, InfluenceAlgorithm, PseudoAlgorithm,
};
use setinf::oracle::{all_functions, random_function, tal_influence_by_definition, OracleConfig};
use setinf::spectra::{tail_weight, walsh_spectrum, SpectralProfile};
use setinf::{BooleanFunction, Rational, VariableSubset};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

fn set(n: usize, idx: &[usize]) -> VariableSubset {
    VariableSubset::from_indices(n, idx).unwrap()
}

fn functions_up_to(n: usize) -> impl Iterator<Item = BooleanFunction> {
    (1..=n).flat_map(all_functions)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn triple_agreement() -> Outcome {
    for f in all_functions(4) {
        let profile = SpectralProfile::new(&f);
        for t in VariableSubset::all_nonempty(4) {
            let restriction = influence(&f, &t, InfluenceAlgorithm::Restriction).unwrap().value;
            let walsh = influence(&f, &t, InfluenceAlgorithm::Walsh).unwrap().value;
            let ac = influence(&f, &t, InfluenceAlgorithm::Autocorrelation).unwrap().value;
            ensure(restriction == walsh && walsh == ac, || {
                format!("{} T={t}: {restriction} {walsh} {ac}", f.to_tt_string())
            })?;
            ensure(profile.influence(&t).unwrap().value == ac, || {
                format!("profile disagrees on {} T={t}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn halving() -> Outcome {
    for f in all_functions(4) {
        for t in VariableSubset::all_nonempty(4) {
            let inf = influence(&f, &t, InfluenceAlgorithm::Walsh).unwrap().value;
            let fb = fb_influence(&f, &t).unwrap().value;
            let mu = mu_probability(&f, &t).unwrap().value;
            ensure(fb == inf / 2 && mu == fb, || {
                format!("{} T={t}: inf {inf} fb {fb} mu {mu}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn prior_measures() -> Outcome {
    let gs_example = BooleanFunction::from_anf("x2*x3 + x2*x4 + x1*x2*x3 + x1*x2*x4", 4).unwrap();
    let t34 = set(4, &[3, 4]);
    ensure(gs_influence(&gs_example, &t34).unwrap().value.is_zero(), || "gs != 0".into())?;
    ensure(!gs_example.is_degenerate_on(&t34).unwrap(), || "degenerate".into())?;

    let zero_indicator = BooleanFunction::from_fn(6, |x| x == 0).unwrap();
    let s = set(6, &[4, 5, 6]);
    let t = set(6, &[2, 3, 6]);
    let bl = |v: &VariableSubset| bl_influence(&zero_indicator, v).unwrap().value;
    ensure(
        bl(&s) == r(1, 8) && bl(&t) == r(1, 8) && bl(&s.union(&t)) == r(1, 2),
        || format!("BL {} {} {}", bl(&s), bl(&t), bl(&s.union(&t))),
    )?;

    for n in 2..=6usize {
        let and = BooleanFunction::and_all(n).unwrap();
        let full = VariableSubset::full(n);
        let q = Rational::one() - r(1, 1 << (n - 1));
        let expected = Rational::one() - q * q;
        let inf = influence(&and, &full, InfluenceAlgorithm::Restriction).unwrap().value;
        let b = bl_influence(&and, &full).unwrap().value;
        ensure(b.is_one() && inf == expected, || format!("AND_{n}: BL {b}, inf {inf}"))?;
    }

    for n in 4..=5usize {
        for t in 2..=3usize {
            let f = BooleanFunction::from_fn(n, |x| {
                let bit = |j: usize| x >> (n - j) & 1 == 1;
                let product = (1..=t).all(bit);
                (t + 1..=n).fold(product, |acc, j| acc ^ bit(j))
            })
            .unwrap();
            let subset = VariableSubset::from_indices(n, &(1..=t).collect::<Vec<_>>()).unwrap();
            let q = Rational::one() - r(1, 1 << (t - 1));
            let expected = Rational::one() - q * q;
            let inf = influence(&f, &subset, InfluenceAlgorithm::Walsh).unwrap().value;
            let b = bl_influence(&f, &subset).unwrap().value;
            ensure(f.is_balanced() && b.is_one() && inf == expected, || {
                format!("balanced family n={n} t={t}: BL {b}, inf {inf}")
            })?;
        }
    }
    Ok(())
}

/// Every restriction of `f` onto `T` is constant or balanced, checked by
/// explicitly restricting.
fn restrictions_constant_or_balanced(f: &BooleanFunction, subset: &VariableSubset) -> bool {
    let fixed = subset.complement();
    let k = fixed.len();
    (0..1usize << k).all(|a| {
        let assignment: Vec<bool> = (0..k).map(|i| a >> (k - 1 - i) & 1 == 1).collect();
        let g = f.restrict(&fixed, &assignment).unwrap();
        g.is_constant() || g.is_balanced()
    })
}

fn ordering_chain() -> Outcome {
    for f in functions_up_to(3) {
        for t in VariableSubset::all_nonempty(f.n()) {
            let pi = pseudo_influence(&f, &t, PseudoAlgorithm::Walsh).unwrap().value;
            let inf = influence(&f, &t, InfluenceAlgorithm::Restriction).unwrap().value;
            let bl = bl_influence(&f, &t).unwrap().value;
            ensure(pi <= inf && inf <= bl, || {
                format!("{} T={t}: PI {pi} inf {inf} BL {bl}", f.to_tt_string())
            })?;
            ensure((inf == bl) == restrictions_constant_or_balanced(&f, &t), || {
                format!("equality condition fails for {} T={t}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn bent_and_resilient() -> Outcome {
    for f in all_functions(4) {
        ensure(is_bent(&f) == bent_by_influence(&f), || {
            format!("bent mismatch on {}", f.to_tt_string())
        })?;
    }
    for f in functions_up_to(4) {
        let n = f.n();
        let profile = SpectralProfile::new(&f);
        let order = resiliency_order(&f);
        for t in 1..=n {
            let t_inf = profile.t_influence(t).unwrap();
            ensure(t_inf.is_one() == order.is_some_and(|m| m >= n - t), || {
                format!("{} t={t}: t-inf {t_inf}, order {order:?}", f.to_tt_string())
            })?;
            ensure(t_inf.is_zero() == f.is_constant(), || {
                format!("{} t={t}: t-inf {t_inf}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn tal_equivalence() -> Outcome {
    for f in functions_up_to(3) {
        for t in VariableSubset::all_nonempty(f.n()) {
            let tal = tal_influence_by_definition(&f, &t).unwrap();
            let walsh = pseudo_influence(&f, &t, PseudoAlgorithm::Walsh).unwrap().value;
            let ac = pseudo_influence(&f, &t, PseudoAlgorithm::Autocorrelation).unwrap().value;
            ensure(tal == walsh && walsh == ac, || {
                format!("{} T={t}: J {tal}, PI {walsh} / {ac}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn geometry() -> Outcome {
    for f in functions_up_to(4) {
        let n = f.n();
        ensure(
            path_census(&f, CensusMethod::Direct) == path_census(&f, CensusMethod::Autocorrelation),
            || format!("census mismatch on {}", f.to_tt_string()),
        )?;
        let profile = SpectralProfile::new(&f);
        for t in 1..=n {
            let by_paths = t_influence_by_paths(&f, t).unwrap();
            ensure(by_paths == profile.t_influence(t).unwrap(), || {
                format!("path expansion differs on {} t={t}", f.to_tt_string())
            })?;
        }
        let edges = Rational::from_integer(edge_boundary(&f) as i128) / r((n as i128) << (n - 1), 1);
        ensure(edges == profile.t_influence(1).unwrap(), || {
            format!("edge relation fails on {}", f.to_tt_string())
        })?;
        if n <= 3 {
            ensure(walsh_from_paths_check(&f), || {
                format!("walsh-from-paths fails on {}", f.to_tt_string())
            })?;
        }
    }
    Ok(())
}

fn concentration() -> Outcome {
    for f in functions_up_to(4) {
        let profile = SpectralProfile::new(&f);
        for t in 1..=f.n() {
            let t_inf = profile.t_influence(t).unwrap();
            if t_inf.is_zero() {
                continue;
            }
            for eps in [t_inf, (t_inf + Rational::one()) / 2, Rational::one()] {
                let k = concentration_threshold(&f, t, eps).map_err(|e| e.to_string())?;
                let tail = tail_weight(&f, k).unwrap();
                ensure(tail <= eps, || {
                    format!("{} t={t} eps={eps}: k={k}, tail {tail}", f.to_tt_string())
                })?;
            }
        }
    }
    Ok(())
}

fn poincare() -> Outcome {
    for f in functions_up_to(4) {
        let n = f.n();
        let profile = SpectralProfile::new(&f);
        for t in 1..=n {
            let t_inf = profile.t_influence(t).unwrap();
            let bound = r(4 * t as i128, n as i128) * f.variance();
            ensure(t_inf >= bound, || format!("{} t={t}: {t_inf} < {bound}", f.to_tt_string()))?;
            if t == n {
                ensure(t_inf == bound, || format!("{} t=n: {t_inf} != {bound}", f.to_tt_string()))?;
            }
        }
    }
    Ok(())
}

fn monotone_on(f: &BooleanFunction, pairs: &[(VariableSubset, VariableSubset)]) -> Outcome {
    let profile = SpectralProfile::new(f);
    let n = f.n();
    let levels: Vec<Rational> = (1..=n).map(|t| profile.t_influence(t).unwrap()).collect();
    let spectral_ok = (1..=n).all(|t| {
        setinf::influence::t_influence(f, t, AggregateAlgorithm::Enumerate).unwrap() == levels[t - 1]
    });
    ensure(spectral_ok, || format!("aggregate routes differ on {}", f.to_tt_string()))?;
    ensure(levels.windows(2).all(|w| w[0] <= w[1]), || {
        format!("t-inf not monotone on {}", f.to_tt_string())
    })?;
    for (s, t) in pairs {
        let inf = |v: &VariableSubset| profile.influence(v).unwrap().value;
        let u = s.union(t);
        let d = union_decomposition(f, s, t).unwrap();
        ensure(d.identity_holds() && d.union == inf(&u), || {
            format!("union decomposition fails on {} S={s} T={t}", f.to_tt_string())
        })?;
        ensure(inf(s) <= inf(&u) && inf(t) <= inf(&u), || {
            format!("inf not monotone on {} S={s} T={t}", f.to_tt_string())
        })?;
        ensure(inf(&u) <= inf(s) + inf(t), || {
            format!("inf not sub-additive on {} S={s} T={t}", f.to_tt_string())
        })?;
    }
    Ok(())
}

fn monotonicity() -> Outcome {
    for f in functions_up_to(3) {
        let all = VariableSubset::all_nonempty(f.n());
        let pairs: Vec<_> = all
            .iter()
            .flat_map(|s| all.iter().map(move |t| (*s, *t)))
            .collect();
        monotone_on(&f, &pairs)?;
    }
    let config = OracleConfig::default();
    let mut rng = config.rng();
    for _ in 0..1000 {
        let f = random_function(8, &mut rng);
        let pairs: Vec<_> = (0..16)
            .map(|_| {
                let s = VariableSubset::new(8, rng.gen_range(1..256)).unwrap();
                let t = VariableSubset::new(8, rng.gen_range(1..256)).unwrap();
                (s, t)
            })
            .collect();
        monotone_on(&f, &pairs)?;
    }
    Ok(())
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let f = random_function(20, &mut rng);
    let start = Instant::now();
    let walsh = walsh_spectrum(&f);
    let walsh_time = start.elapsed();
    let start = Instant::now();
    let inf = influence(&f, &set(20, &[1, 5, 9, 20]), InfluenceAlgorithm::Restriction).unwrap();
    let inf_time = start.elapsed();
    println!("      walsh n=20: {walsh_time:?}, restriction influence n=20: {inf_time:?}");
    ensure(walsh.len() == 1 << 20 && inf.value <= Rational::one(), || "bad output".into())?;
    ensure(walsh_time < Duration::from_secs(5), || format!("walsh took {walsh_time:?}"))?;
    ensure(inf_time < Duration::from_secs(10), || format!("influence took {inf_time:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1  three influence algorithms agree (n=4, all T)", triple_agreement),
        ("2  fb = mu = inf/2 (n=4, all T)", halving),
        ("3  prior-measure examples and closed forms", prior_measures),
        ("4  PI <= inf <= BL with equality condition (n<=3)", ordering_chain),
        ("5  bent and resiliency characterisations (n<=4)", bent_and_resilient),
        ("6  Tal's J equals pseudo-influence (n<=3)", tal_equivalence),
        ("7  path census, path expansion, edge relation", geometry),
        ("8  concentration threshold bounds the tail (n<=4)", concentration),
        ("9  generalised Poincare inequality (n<=4)", poincare),
        ("10 monotonicity and union decomposition", monotonicity),
        ("11 n=20 walsh < 5s, restriction influence < 10s", performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {name} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

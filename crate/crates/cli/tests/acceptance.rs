//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines always
//! show up in `cargo test` output.
//!
//! Expected values come from plain f64 arithmetic on an independent
//! transcription of the constants, never from the engine itself.

use std::f64::consts::{LN_2, PI};
use std::process::Command;

use cosmocap_cli::ReportDocument;
use cosmocap_core::baseline::{fleet_bits, fleet_ops, FleetSpec};
use cosmocap_core::bounds::max_ops_per_sec;
use cosmocap_core::cosmo::{
    self, full_report, DensityMode, Scenario, Species, SpeciesTable, Statistics,
};
use cosmocap_core::dimq::{approx_eq, Base};
use cosmocap_core::largenum::identities;
use cosmocap_core::{ConstantsProfile, Dimension, Error, LogInterval, Quantity, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Stored constants of the "paper" profile, transcribed independently.
const HBAR: f64 = 1.0545e-34;
const C: f64 = 2.98e8;
const KB: f64 = 1.38e-23;
const YEAR: f64 = 3.156e7;

const RHO_NOW: f64 = 1e-27;
const AGE_NOW: f64 = 1e10 * YEAR;

const SEED: u64 = 0x5EED_C0DE;
const TWELVE_DIGITS: f64 = 1e-12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

fn paper() -> &'static ConstantsProfile {
    ConstantsProfile::paper()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn density(v: f64) -> Quantity {
    Quantity::new(v, Dimension::MASS_DENSITY).unwrap()
}

fn seconds(v: f64) -> Quantity {
    Quantity::new(v, Dimension::TIME).unwrap()
}

fn in_decades(q: &Quantity, lo: f64, hi: f64) -> bool {
    q.is_positive() && (lo..=hi).contains(&q.log10())
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.gen_range(lo..hi))
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_cosmocap"))
        .args(args)
        .output()
        .expect("run cosmocap");
    assert!(out.status.success(), "cosmocap {args:?} failed");
    out.stdout
}

/// Adaptive Simpson quadrature.
fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (l, r) = (simpson(f, a, m), simpson(f, m, b));
        if depth == 0 || (l + r - whole).abs() <= 15.0 * tol {
            l + r + (l + r - whole) / 15.0
        } else {
            recurse(f, a, m, l, tol / 2.0, depth - 1) + recurse(f, m, b, r, tol / 2.0, depth - 1)
        }
    }
    recurse(f, a, b, simpson(f, a, b), tol, 60)
}

fn headline_ops() -> Outcome {
    let ops = cosmo::ops_matter(paper(), density(RHO_NOW), seconds(AGE_NOW))
        .map_err(|e| e.to_string())?;
    let oracle = RHO_NOW * C.powi(5) * AGE_NOW.powi(4) / HBAR;
    ensure!(in_decades(&ops, 119.0, 121.0), "ops_matter = {ops}");
    let drift = rel(ops.value(), oracle);
    ensure!(
        drift < 1e-6,
        "log-space {} vs direct product {oracle:e}",
        ops.value()
    );
    let text = String::from_utf8(run_cli(&["report", "--default-paper"])).unwrap();
    let line = text
        .lines()
        .find(|l| l.contains("ops, matter in horizon"))
        .ok_or("no matter ops line in report")?;
    ensure!(
        line.contains("≈ 10^120") && line.contains("within tolerance"),
        "report line: {line}"
    );
    Ok(format!(
        "10^{:.2}, direct product agrees to {drift:.1e}",
        ops.log10()
    ))
}

fn headline_critical_ops() -> Outcome {
    let ops = cosmo::ops_critical(paper(), seconds(AGE_NOW)).unwrap();
    ensure!(in_decades(&ops, 120.5, 122.5), "ops_critical = {ops}");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for profile in [ConstantsProfile::paper(), ConstantsProfile::codata()] {
        for _ in 0..200 {
            let t = seconds(log_uniform(&mut rng, -40.0, 20.0));
            let rho_c =
                cosmo::critical_density(profile, t.recip().unwrap(), DensityMode::Approx).unwrap();
            let lhs = cosmo::ops_matter(profile, rho_c, t).unwrap();
            let rhs = cosmo::ops_critical(profile, t).unwrap();
            ensure!(
                lhs.rel_eq(&rhs, TWELVE_DIGITS),
                "{}: t = {t}: {lhs} vs {rhs}",
                profile.name()
            );
        }
    }
    Ok(format!(
        "10^{:.2} (≈{:.1e}); ops_matter(1/Gt²) identity on 400 ages",
        ops.log10(),
        ops.value()
    ))
}

fn headline_bits() -> Outcome {
    let photons = SpeciesTable::photons_only();
    let bits = cosmo::bits_matter(paper(), density(RHO_NOW), seconds(AGE_NOW), &photons).unwrap();
    ensure!(in_decades(&bits, 88.5, 91.5), "bits_matter = {bits}");
    let mixed = SpeciesTable::new(vec![
        Species::photon(),
        Species::new("neutrino", 1, 2, Statistics::Fermion).unwrap(),
    ]);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for (species, n_total) in [(&photons, 2.0), (&mixed, 3.75)] {
        for _ in 0..200 {
            let rho = density(log_uniform(&mut rng, -35.0, 5.0));
            let t = seconds(log_uniform(&mut rng, -30.0, 20.0));
            let ops = cosmo::ops_matter(paper(), rho, t).unwrap();
            let bits = cosmo::bits_matter(paper(), rho, t, species).unwrap();
            let expected = (4.0 / (3.0 * LN_2)).log10()
                + 0.25 * (PI * PI * n_total / 30.0).log10()
                + 0.75 * ops.log10();
            let expected = Quantity::from_log10(expected, Dimension::DIMENSIONLESS).unwrap();
            ensure!(
                bits.rel_eq(&expected, TWELVE_DIGITS),
                "rho {rho}, t {t}: {bits} vs {expected}"
            );
        }
    }
    Ok(format!(
        "10^{:.2}; (4/3ln2) D^1/4 ops^3/4 relation on 400 cases",
        bits.log10()
    ))
}

fn holographic_bits() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for _ in 0..200 {
        let t = seconds(log_uniform(&mut rng, -40.0, 20.0));
        let holo = cosmo::bits_holographic(paper(), t).unwrap();
        let ops = cosmo::ops_critical(paper(), t).unwrap();
        ensure!(holo == ops, "t = {t}: {holo} != {ops}");
    }
    let now = cosmo::bits_holographic(paper(), seconds(AGE_NOW)).unwrap();
    ensure!(in_decades(&now, 120.5, 122.5), "bits_holographic = {now}");
    Ok(format!(
        "bit-identical to ops_critical on 200 ages; 10^{:.2} today",
        now.log10()
    ))
}

fn radiation_ops() -> Outcome {
    let p = paper();
    // 2E/πħ = 1 op/s
    let e1 = Quantity::new(PI * HBAR / 2.0, Dimension::ENERGY).unwrap();
    let rate = max_ops_per_sec(p, e1).unwrap();
    ensure!(
        rel(rate.value(), 1.0) < TWELVE_DIGITS,
        "unit rate is {rate}"
    );

    let t1 = seconds(4.0);
    ensure!(
        cosmo::ops_radiation(p, e1, t1, t1).unwrap().is_zero(),
        "t0 = t1 is not zero"
    );
    let from_bang = cosmo::ops_radiation(p, e1, t1, Quantity::zero(Dimension::TIME)).unwrap();
    let constant = rate * t1;
    ensure!(
        from_bang.rel_eq(&(constant * 2.0), TWELVE_DIGITS),
        "t0 = 0: {from_bang} vs 2 × {constant}"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut worst_quadrature: f64 = 0.0;
    for i in 0..1000 {
        let t1v = log_uniform(&mut rng, -3.0, 20.0);
        let frac = rng.gen_range(1e-4..1.0);
        let t0v = t1v * frac;
        let (t1, t0) = (seconds(t1v), seconds(t0v));
        let ops = cosmo::ops_radiation(p, e1, t1, t0).unwrap().value() / rate.value();
        let lower = t1v - t0v;
        let upper = 2.0 * (t1v - t0v);
        let slack = 1e-12 * upper;
        ensure!(
            lower <= ops + slack && ops <= upper + slack,
            "pair {i}: {lower} ≤ {ops} ≤ {upper} violated"
        );
        if i % 10 == 0 {
            // ∫ (t1/t)^{1/2} dt over [t0, t1], in units of t1
            let integral = t1v * integrate(&|s: f64| s.powf(-0.5), frac, 1.0, 1e-13);
            let err = rel(ops, integral);
            worst_quadrature = worst_quadrature.max(err);
            ensure!(
                err < 1e-6,
                "pair {i}: closed form {ops} vs quadrature {integral}"
            );
        }
    }
    Ok(format!(
        "endpoints exact, sandwich on 1000 pairs, quadrature on 100 pairs agrees to {worst_quadrature:.1e}"
    ))
}

fn large_number_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for profile in [ConstantsProfile::paper(), ConstantsProfile::codata()] {
        for _ in 0..500 {
            let rho = density(log_uniform(&mut rng, -35.0, -15.0));
            let t = seconds(log_uniform(&mut rng, 10.0, 20.0));
            let r = identities(profile, rho, t).unwrap();
            ensure!(
                r.r2.rel_eq(&Quantity::one(), TWELVE_DIGITS),
                "{}: r2 = {:.15} at {rho}, {t}",
                profile.name(),
                r.r2.value()
            );
        }
        for _ in 0..50 {
            let t = seconds(log_uniform(&mut rng, 10.0, 20.0));
            let rho_c =
                cosmo::critical_density(profile, t.recip().unwrap(), DensityMode::Approx).unwrap();
            let r = identities(profile, rho_c, t).unwrap();
            let one = Quantity::one();
            ensure!(
                r.r1.rel_eq(&one, TWELVE_DIGITS),
                "{}: r1 = {:.15}",
                profile.name(),
                r.r1.value()
            );
            ensure!(
                r.r3.rel_eq(&one, TWELVE_DIGITS),
                "{}: r3 = {:.15}",
                profile.name(),
                r.r3.value()
            );
        }
    }
    let r = identities(paper(), density(RHO_NOW), seconds(AGE_NOW)).unwrap();
    let ratio = r.ops_over_beta_gamma2.value();
    ensure!(
        rel(ratio, 1836.0 / 137.0) < TWELVE_DIGITS,
        "ops/βγ² = {ratio:.15} vs 1836/137"
    );
    Ok(format!(
        "r2 on 1000 cases, r1 = r3 = 1 at critical density, ops/βγ² = {ratio:.12} = 1836/137"
    ))
}

fn blackbody_chain() -> Outcome {
    let photons = SpeciesTable::photons_only();
    let rho = density(RHO_NOW);
    let t = cosmo::blackbody_temperature(paper(), rho, &photons).unwrap();
    // ρc² = (π²/15) (k_B T)⁴ / (ħc)³ for two photon polarizations
    let oracle = (RHO_NOW * C * C * 15.0 * (HBAR * C).powi(3) / (PI * PI)).powf(0.25) / KB;
    ensure!(
        rel(t.value(), oracle) < 1e-9,
        "engine {} K vs oracle {oracle} K",
        t.value()
    );
    ensure!(
        rel(oracle, 18.4) <= 0.05,
        "oracle {oracle} K is not 18.4 K ± 5%"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    for _ in 0..200 {
        let rho = density(log_uniform(&mut rng, -35.0, 5.0));
        let age = seconds(log_uniform(&mut rng, -30.0, 20.0));
        let temp = cosmo::blackbody_temperature(paper(), rho, &photons).unwrap();
        let energy =
            rho * paper().c().powi(2).unwrap() * cosmo::horizon_volume(paper(), age).unwrap();
        let radiation = cosmo::bits_radiation(paper(), energy, temp).unwrap().bits;
        let matter = cosmo::bits_matter(paper(), rho, age, &photons).unwrap();
        ensure!(
            radiation.rel_eq(&matter, TWELVE_DIGITS),
            "{radiation} vs {matter}"
        );
    }
    Ok(format!(
        "T = {:.3} K (oracle {oracle:.3} K); bits_radiation = bits_matter on 200 cases",
        t.value()
    ))
}

fn inflation() -> Outcome {
    let growth = LogInterval::new(10.0, 6.0, Dimension::DIMENSIONLESS).unwrap();
    let total = cosmo::inflation_total_ops(&growth).unwrap();
    ensure!(
        total.center() == 20.0 && total.halfwidth() == 12.0,
        "got {total}"
    );
    let text = String::from_utf8(run_cli(&["epoch", "inflation", "--growth", "10:6"])).unwrap();
    ensure!(text.contains("10^{20±12}"), "CLI output: {text}");

    let t = seconds(AGE_NOW);
    let per_hubble = cosmo::inflation_bounds(paper(), t.recip().unwrap())
        .unwrap()
        .ops_per_hubble_time;
    let critical = cosmo::ops_critical(paper(), t).unwrap();
    ensure!(
        approx_eq(&per_hubble, &critical, 1.0),
        "{per_hubble} vs {critical}"
    );
    Ok(format!(
        "10^{{20±12}}; ops per Hubble time 10^{:.2} vs (t/t_P)² 10^{:.2}",
        per_hubble.log10(),
        critical.log10()
    ))
}

fn baseline() -> Outcome {
    let fleet = FleetSpec::default();
    let ops = fleet_ops(&fleet).unwrap();
    let bits = fleet_bits(&fleet).unwrap();
    ensure!(
        ops.value() == 1e31 && ops.dims().is_dimensionless(),
        "ops = {ops}"
    );
    ensure!(
        bits.value() == 1e21 && bits.dims().is_dimensionless(),
        "bits = {bits}"
    );
    Ok("1e31 ops, 1e21 bits".to_string())
}

fn large_numbers_near_1e40() -> Outcome {
    let codata = ConstantsProfile::codata();
    let t = codata.years(1e10).unwrap();
    let r = identities(codata, density(RHO_NOW), t).unwrap();
    let anchor = Quantity::from_log10(40.0, Dimension::DIMENSIONLESS).unwrap();
    for (name, q) in [("alpha", r.alpha), ("beta", r.beta), ("gamma", r.gamma)] {
        ensure!(approx_eq(&q, &anchor, 1.5), "{name} = {q}");
    }
    Ok(format!(
        "alpha 10^{:.2}, beta 10^{:.2}, gamma 10^{:.2}",
        r.alpha.log10(),
        r.beta.log10(),
        r.gamma.log10()
    ))
}

fn random_dimension(rng: &mut ChaCha8Rng) -> Dimension {
    let exps = Base::ALL.map(|_| Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    Dimension::from_exponents(exps)
}

fn dimension_safety() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let mut cases = 0;
    while cases < 100 {
        let (da, db) = (random_dimension(&mut rng), random_dimension(&mut rng));
        if da == db {
            continue;
        }
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = Quantity::from_parts(sign, rng.gen_range(-100.0..100.0), da).unwrap();
        let b = Quantity::from_parts(1, rng.gen_range(-100.0..100.0), db).unwrap();
        for r in [a.try_add(b), a.try_sub(b), b.try_add(a)] {
            ensure!(
                matches!(r, Err(Error::DimensionMismatch { .. })),
                "{a} ± {b} gave {r:?}"
            );
        }
        cases += 1;
    }
    Ok(format!("{cases} random mismatched pairs rejected"))
}

fn determinism() -> Outcome {
    let args = ["report", "--default-paper", "--json"];
    let first = run_cli(&args);
    let second = run_cli(&args);
    ensure!(first == second, "two runs differ");
    let doc: ReportDocument = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
    ensure!(doc.schema == 1, "schema {}", doc.schema);
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    ensure!(
        again.as_bytes() == first.as_slice(),
        "re-serialized JSON differs"
    );
    let scenario = doc.scenario.to_scenario(None).map_err(|e| e.to_string())?;
    ensure!(
        scenario == Scenario::paper_default(),
        "scenario does not round-trip"
    );
    let recomputed = full_report(&scenario).map_err(|e| e.to_string())?;
    ensure!(recomputed == doc.report, "report values do not round-trip");
    Ok(format!(
        "{} bytes, identical across runs, round-trips",
        first.len()
    ))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("headline ops, matter-dominated horizon", headline_ops),
        ("headline ops, critical density", headline_critical_ops),
        ("headline bits, thermalized matter", headline_bits),
        ("holographic bits equal critical ops", holographic_bits),
        ("radiation-era ops suite", radiation_ops),
        ("large-number identities", large_number_identities),
        ("blackbody temperature and bit count", blackbody_chain),
        ("inflation growth and horizon ops", inflation),
        ("conventional computer baseline", baseline),
        ("large numbers near 10^40 (codata)", large_numbers_near_1e40),
        ("dimension safety", dimension_safety),
        ("deterministic JSON report", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

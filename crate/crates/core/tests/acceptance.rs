//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use infonorm::special::{
    bifuzzy, imprecise_fuzzy, intuitionistic, intuitionistic_entropy_by_negation, neutrosophic2,
    neutrosophic3, partition_entropy_by_negation, partition_nonlog, partition_shannon,
    BifuzzyPair, FuzzyPartition, ImpreciseFuzzyPair, IntuitionisticPair,
    NeutrosophicBivalentInput, NeutrosophicTriple,
};
use infonorm::{
    homothety, normalize, normalize_approx, onicescu, profile, renyi, shannon, translate,
    tsallis, ExtendedInformation, RenyiMode,
};

const IDENTITY: f64 = 1e-12;
const DISTANCE: f64 = 1e-10;
const LIMIT: f64 = 1e-3;
const WORKED: f64 = 1e-6;
const SAMPLES: usize = 10_000;
const GRID: usize = 50;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

struct Sample {
    p: Vec<f64>,
    s: f64,
}

impl Sample {
    fn ext(&self) -> ExtendedInformation {
        ExtendedInformation::from_slice(&self.p, self.s).expect("sampled inside the domain")
    }
}

fn samples(count: usize, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=10);
            Sample {
                p: (0..n).map(|_| rng.random::<f64>()).collect(),
                s: rng.random::<f64>(),
            }
        })
        .collect()
}

fn grid(points: usize) -> impl Iterator<Item = f64> + Clone {
    (0..points).map(move |i| i as f64 / (points - 1) as f64)
}

fn max_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn partition_of_unity() -> Outcome {
    let xs: Vec<_> = samples(SAMPLES, 1).iter().map(Sample::ext).collect();
    let start = Instant::now();
    let outs: Vec<_> = xs.iter().map(normalize).collect();
    let elapsed = start.elapsed();

    let mut worst_sum = 0.0f64;
    let mut out_of_range = 0;
    for q in &outs {
        worst_sum = worst_sum.max((q.components().iter().sum::<f64>() - 1.0).abs());
        out_of_range += q.components().iter().filter(|c| !(0.0..=1.0).contains(*c)).count();
    }
    check(
        worst_sum <= IDENTITY && out_of_range == 0 && elapsed.as_secs_f64() < 1.0,
        format!(
            "max |sum-1| = {worst_sum:.2e}, components outside [0,1] = {out_of_range}, runtime = {:.1} ms",
            elapsed.as_secs_f64() * 1e3
        ),
    )
}

fn pipeline_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for x in samples(SAMPLES, 1).iter().map(Sample::ext) {
        let two_step = homothety(&translate(&x)).map_err(|e| e.to_string())?;
        worst = worst.max(max_gap(normalize(&x).components(), two_step.components()));
    }
    check(worst <= IDENTITY, format!("max component gap = {worst:.2e}"))
}

fn distance_preservation() -> Outcome {
    let mut worst_dist = 0.0f64;
    let mut worst_sum = 0.0f64;
    for sample in samples(SAMPLES, 1) {
        let q = translate(&sample.ext());
        let n = sample.p.len();
        for j in 0..n {
            let sq = |v: &[f64]| -> f64 {
                v.iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let d = c - if i == j { 1.0 } else { 0.0 };
                        d * d
                    })
                    .sum()
            };
            let lhs = sq(&q);
            let rhs = sq(&sample.p) + sample.s * sample.s;
            worst_dist = worst_dist.max((lhs - rhs).abs());
        }
        let delta = sample.p.iter().sum::<f64>() - 1.0;
        let expected = 1.0 + (delta * delta + n as f64 * sample.s * sample.s).sqrt();
        worst_sum = worst_sum.max((q.iter().sum::<f64>() - expected).abs());
    }
    check(
        worst_dist <= DISTANCE && worst_sum <= IDENTITY,
        format!("max distance gap = {worst_dist:.2e}, max translated-sum gap = {worst_sum:.2e}"),
    )
}

fn affine_coefficients() -> Outcome {
    let mut worst_affine = 0.0f64;
    let mut worst_root = 0.0f64;
    let mut negative_root = 0;
    for sample in samples(SAMPLES, 1) {
        let x = sample.ext();
        let prof = profile(&x);
        let affine: Vec<f64> = sample.p.iter().map(|p| prof.alpha * p + prof.beta).collect();
        worst_affine = worst_affine.max(max_gap(&affine, normalize(&x).components()));

        let n = sample.p.len() as f64;
        let delta = sample.p.iter().sum::<f64>() - 1.0;
        let t = prof.theta;
        worst_root = worst_root.max((n * t * t + 2.0 * delta * t - sample.s * sample.s).abs());
        if t < 0.0 {
            negative_root += 1;
        }
    }
    check(
        worst_affine <= IDENTITY && worst_root <= IDENTITY && negative_root == 0,
        format!(
            "max affine gap = {worst_affine:.2e}, max quadratic residual = {worst_root:.2e}, negative roots = {negative_root}"
        ),
    )
}

fn generic(p: &[f64], s: f64) -> (Vec<f64>, f64) {
    let x = ExtendedInformation::from_slice(p, s).expect("grid inside the domain");
    (normalize(&x).into_vec(), shannon(&x).value)
}

fn ok<T>(r: infonorm::Result<T>) -> T {
    r.expect("grid inside the domain")
}

fn special_reductions() -> Outcome {
    let mut worst = [0.0f64; 7];
    let mut bump = |slot: usize, v: f64| worst[slot] = worst[slot].max(v);

    for t in grid(GRID) {
        for i in grid(GRID) {
            for f in grid(GRID) {
                let out = neutrosophic3(&ok(NeutrosophicTriple::new(t, i, f)));
                let (q, e) = generic(&[t, i, f], 0.0);
                bump(0, max_gap(out.normalized.components(), &q).max((out.entropy - e).abs()));

                let out = neutrosophic2(&ok(NeutrosophicBivalentInput::new(t, i, f)));
                let (q, e) = generic(&[t, i], f);
                bump(
                    1,
                    max_gap(&[out.pair.truth, out.pair.falsity], &q).max((out.entropy - e).abs()),
                );
            }
        }
    }
    for mu in grid(GRID) {
        for nu in grid(GRID) {
            let bf = bifuzzy(&ok(BifuzzyPair::new(mu, nu)));
            let n2 = neutrosophic2(&ok(NeutrosophicBivalentInput::new(mu, nu, 0.0)));
            bump(
                2,
                max_gap(&[bf.pair.truth, bf.pair.falsity], &[n2.pair.truth, n2.pair.falsity])
                    .max((bf.entropy - n2.entropy).abs()),
            );
            if mu + nu <= 1.0 {
                let x = ok(IntuitionisticPair::new(mu, nu));
                let ifs = intuitionistic(&x);
                bump(
                    3,
                    max_gap(&[ifs.pair.truth, ifs.pair.falsity], &[bf.pair.truth, bf.pair.falsity])
                        .max((ifs.entropy - bf.entropy).abs()),
                );
                bump(5, (ifs.entropy - intuitionistic_entropy_by_negation(&x)).abs());

                let w = ok(FuzzyPartition::new(vec![mu, nu, (1.0 - mu - nu).max(0.0)]));
                bump(6, (partition_shannon(&w).entropy - partition_entropy_by_negation(&w)).abs());
            }
        }
        for sigma in grid(GRID).map(|v| v / 2.0) {
            let imp = imprecise_fuzzy(&ok(ImpreciseFuzzyPair::new(mu, sigma)));
            let n2 = neutrosophic2(&ok(NeutrosophicBivalentInput::new(mu, 1.0 - mu, 2.0 * sigma)));
            bump(
                4,
                max_gap(&[imp.pair.truth, imp.pair.falsity], &[n2.pair.truth, n2.pair.falsity])
                    .max((imp.entropy - n2.entropy).abs()),
            );
        }
    }
    let labels = [
        "neutro3",
        "neutro2",
        "bifuzzy",
        "ifs",
        "imprecise",
        "ifs-negation",
        "partition-negation",
    ];
    let detail = labels
        .iter()
        .zip(worst)
        .map(|(l, w)| format!("{l} {w:.1e}"))
        .collect::<Vec<_>>()
        .join(", ");
    check(worst.iter().all(|w| *w <= IDENTITY), format!("max gaps: {detail}"))
}

fn limit_recovery() -> Outcome {
    let mut worst_t = 0.0f64;
    let mut worst_r = 0.0f64;
    for sample in samples(1_000, 2) {
        let x = sample.ext();
        let target = (sample.p.len() as f64).ln() * shannon(&x).value;
        for order in [1.0 - 1e-4, 1.0 + 1e-4] {
            let t = tsallis(&x, order).map_err(|e| e.to_string())?.value;
            let r = renyi(&x, order, RenyiMode::Standard).map_err(|e| e.to_string())?.value;
            worst_t = worst_t.max((t - target).abs());
            worst_r = worst_r.max((r - target).abs());
        }
    }
    check(
        worst_t <= LIMIT && worst_r <= LIMIT,
        format!("max |tsallis - ln(n) shannon| = {worst_t:.2e}, max |renyi - ln(n) shannon| = {worst_r:.2e}"),
    )
}

fn endpoint_values() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 2..=10 {
        for j in 0..n {
            let mut p = vec![0.0; n];
            p[j] = 1.0;
            let x = ExtendedInformation::from_slice(&p, 0.0).unwrap();
            let t = tsallis(&x, 2.0).unwrap().value;
            let r = renyi(&x, 2.0, RenyiMode::Standard).unwrap().value;
            worst = [shannon(&x).value, t, r, onicescu(&x).value - 1.0]
                .iter()
                .fold(worst, |w, v| w.max(v.abs()));
            cases += 1;
        }
        for level in [0.0, 0.3, 1.0 / n as f64, 0.75, 1.0] {
            for s in [0.0, 0.25, 1.0] {
                let x = ExtendedInformation::from_slice(&vec![level; n], s).unwrap();
                worst = worst
                    .max((shannon(&x).value - 1.0).abs())
                    .max((onicescu(&x).value - 1.0 / n as f64).abs());
                cases += 1;
            }
        }
    }
    check(worst <= IDENTITY, format!("{cases} inputs, max deviation = {worst:.2e}"))
}

fn approximation_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst_complete = 0.0f64;
    for _ in 0..SAMPLES {
        let n = rng.random_range(2..=10);
        let raw: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-3).collect();
        let total: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|v| v / total).collect();
        let x = ExtendedInformation::from_slice(&p, rng.random::<f64>()).unwrap();
        worst_complete =
            worst_complete.max(max_gap(normalize_approx(&x).components(), normalize(&x).components()));
    }
    let mut worst_general = 0.0f64;
    for x in samples(SAMPLES, 1).iter().map(Sample::ext) {
        worst_general =
            worst_general.max(max_gap(normalize_approx(&x).components(), normalize(&x).components()));
    }
    check(
        worst_complete <= IDENTITY,
        format!(
            "complete input: max gap = {worst_complete:.2e}; general input (informational): max gap = {worst_general:.4}"
        ),
    )
}

fn worked_constants() -> Outcome {
    let x = ExtendedInformation::from_slice(&[0.6, 0.2], 0.0).unwrap();
    let q = normalize(&x);
    let e = shannon(&x).value;
    let ifs = intuitionistic(&IntuitionisticPair::new(0.5, 0.3).unwrap()).entropy;
    let nl = partition_nonlog(&FuzzyPartition::new(vec![0.5, 0.3, 0.2]).unwrap())
        .map_err(|e| e.to_string())?;
    // 40-digit mpmath evaluations: binary entropies of 2/3 and 7/12,
    // 5/6, sqrt(0.38/0.78) and 5/7.
    let gaps = [
        (q[0] - 2.0 / 3.0).abs(),
        (q[1] - 1.0 / 3.0).abs(),
        (e - 0.918_295_834).abs(),
        (ifs - 0.979_868_757).abs(),
        (nl.gap - 0.833_333_333).abs(),
        (nl.distance_ratio - 0.697_982_440).abs(),
        (nl.complement_ratio - 0.714_285_714).abs(),
    ];
    let worst = gaps.iter().copied().fold(0.0, f64::max);
    check(
        worst <= WORKED,
        format!(
            "normalize = ({:.6}, {:.6}), shannon = {e:.6}, ifs = {ifs:.6}, (E_K, E_E, E_P) = ({:.6}, {:.6}, {:.6})",
            q[0], q[1], nl.gap, nl.distance_ratio, nl.complement_ratio
        ),
    )
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn cli_golden_files() -> Outcome {
    let dir = fixtures();
    // (args, golden, expected exit code)
    let cases: &[(&[&str], &str, i32)] = &[
        (&["entropy", "records.csv", "--precision", "8"], "records.shannon.csv", 1),
        (
            &["entropy", "records.csv", "--measure", "renyi", "--alpha", "2", "--renyi-mode", "paper"],
            "records.renyi-paper.csv",
            1,
        ),
        (&["normalize", "records.jsonl"], "records.normalize.jsonl", 1),
        (
            &["entropy", "records.jsonl", "--measure", "tsallis", "--alpha", "0.5"],
            "records.tsallis.jsonl",
            1,
        ),
        (
            &["entropy", "records.csv", "--measure", "onicescu", "--output-format", "jsonl", "--precision", "6"],
            "records.onicescu.jsonl",
            1,
        ),
        (&["entropy", "valid.csv", "--measure", "renyi", "--alpha", "3"], "valid.renyi.csv", 0),
        (&["entropy", "empty.csv"], "empty.shannon.csv", 0),
        (&["entropy", "empty.jsonl"], "empty.shannon.jsonl", 0),
    ];
    let mut failures = Vec::new();
    for (args, golden, code) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_infonorm"))
            .args(*args)
            .current_dir(&dir)
            .output()
            .map_err(|e| e.to_string())?;
        let expected = std::fs::read(dir.join("golden").join(golden)).map_err(|e| e.to_string())?;
        if out.stdout != expected {
            failures.push(format!("{golden}: output differs"));
        }
        if out.status.code() != Some(*code) {
            failures.push(format!("{golden}: exit {:?}, expected {code}", out.status.code()));
        }
    }

    let text = std::fs::read_to_string(dir.join("golden/records.shannon.csv")).unwrap();
    let bad = text.lines().find(|l| l.starts_with("bad,")).unwrap_or_default();
    if !(bad.starts_with("bad,ifs,shannon,,,") && bad.contains("mu+nu exceeds 1")) {
        failures.push(format!("error row contract broken: {bad:?}"));
    }

    for (args, what) in [
        (&["entropy", "missing.csv"][..], "missing input"),
        (&["entropy", "records.csv", "--measure", "tsallis"][..], "missing --alpha"),
        (&["entropy", "records.csv", "--measure", "tsallis", "--alpha", "-1"][..], "nonpositive --alpha"),
        (&["normalize", "-"][..], "stdin without --format"),
    ] {
        let out = Command::new(env!("CARGO_BIN_EXE_infonorm"))
            .args(args)
            .current_dir(&dir)
            .output()
            .map_err(|e| e.to_string())?;
        if out.status.code() != Some(2) {
            failures.push(format!("{what}: exit {:?}, expected 2", out.status.code()));
        }
    }

    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} golden files byte-identical, exit codes 0/1/2 as expected", cases.len())
        } else {
            failures.join("; ")
        },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("partition of unity", partition_of_unity),
        ("pipeline equivalence", pipeline_equivalence),
        ("distance preservation", distance_preservation),
        ("affine coefficients", affine_coefficients),
        ("special-case reductions", special_reductions),
        ("limit recovery", limit_recovery),
        ("endpoint values", endpoint_values),
        ("approximation exactness", approximation_exactness),
        ("worked constants", worked_constants),
        ("CLI golden files", cli_golden_files),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

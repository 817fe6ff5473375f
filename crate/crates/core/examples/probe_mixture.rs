//! Scratch probe for the piecewise-mixture fixed points (to be removed).

use ambiguity_twin_core::data::{gen_synthetic, FnSpec, SyntheticSpec};
use ambiguity_twin_core::nn::{LearningSchedule, NetConfig};
use ambiguity_twin_core::twin::{train_twin, TargetCodec, TrainPlan, UncertaintyMode};

fn main() {
    let spec = SyntheticSpec {
        mean_fn: FnSpec::Linear {
            slope: 0.5,
            intercept: 0.25,
        },
        spread_fn: FnSpec::PiecewiseConstant {
            breaks: vec![0.5],
            values: vec![0.0, 0.25],
        },
    };
    let args: Vec<String> = std::env::args().collect();
    let tau_a: f64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(20_000.0);
    let tau_b: f64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(20_000.0);
    let hw: f64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(0.5);
    let seed: u64 = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(42);
    let p2: u64 = args.get(5).map(|s| s.parse().unwrap()).unwrap_or(200_000);
    let hw_b: f64 = args.get(6).map(|s| s.parse().unwrap()).unwrap_or(hw);

    let samples = gen_synthetic(&spec, 20_000, seed).unwrap();
    let plan = TrainPlan {
        phase1_iters: 200_000,
        phase2_iters: p2,
        schedule_a: LearningSchedule::new(0.5, 0.05, tau_a).unwrap(),
        schedule_b: LearningSchedule::new(0.1, 0.01, tau_b).unwrap(),
        seed,
    };
    let t0 = std::time::Instant::now();
    let model = train_twin(
        &plan,
        &samples,
        &NetConfig::new(vec![1, 10, 1], hw, seed.wrapping_add(1)),
        &NetConfig::new(vec![1, 10, 1], hw_b, seed.wrapping_add(2)),
        UncertaintyMode::AbsError,
        TargetCodec::identity(),
    )
    .unwrap();
    let elapsed = t0.elapsed();

    let mut worst_f: f64 = 0.0;
    let mut worst_g: f64 = 0.0;
    for i in 0..10 {
        let x = 0.05 + 0.1 * i as f64;
        let (f, g) = model.encoded_outputs(&[x]).unwrap();
        let m = spec.conditional_mean(x);
        let a = spec.abs_spread(x);
        worst_f = worst_f.max((f - m).abs());
        worst_g = worst_g.max((g - a).abs());
        println!(
            "x={x:.2}  f={f:.4} (m={m:.4}, d={:+.4})   g={g:.4} (a={a:.4}, d={:+.4})",
            f - m,
            g - a
        );
    }
    println!(
        "tau_a={tau_a} tau_b={tau_b} hw={hw} seed={seed}  worst_f={worst_f:.4} worst_g={worst_g:.4}  elapsed={elapsed:?}"
    );
}

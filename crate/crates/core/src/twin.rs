//! Two-phase training of a predictor network and an uncertainty network.
//!
//! Phase 1 fits the predictor on the (codec-encoded) targets. Phase 2
//! freezes it and fits the second network on the magnitude of the frozen
//! predictor's residuals, computed on the fly for every step. The result
//! predicts a band `value ± delta` in original target units.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::nn::{push_float_line, LearningSchedule, Mlp, NetConfig, Sample};

/// What the uncertainty network is trained to reproduce per input:
/// the expected absolute residual or the expected squared residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UncertaintyMode {
    AbsError,
    SqError,
}

impl UncertaintyMode {
    pub fn as_str(self) -> &'static str {
        match self {
            UncertaintyMode::AbsError => "abs",
            UncertaintyMode::SqError => "sq",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "abs" => Ok(UncertaintyMode::AbsError),
            "sq" => Ok(UncertaintyMode::SqError),
            other => Err(Error::Format(format!(
                "unknown uncertainty mode {other:?} (expected 'abs' or 'sq')"
            ))),
        }
    }
}

/// Affine map between original target units and the sigmoid range [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetCodec {
    y_min: f64,
    y_max: f64,
}

impl TargetCodec {
    pub fn new(y_min: f64, y_max: f64) -> Result<Self> {
        if !(y_min.is_finite() && y_max.is_finite() && y_min < y_max) {
            return Err(Error::Config(format!(
                "codec needs finite y_min < y_max, got [{y_min}, {y_max}]"
            )));
        }
        Ok(Self { y_min, y_max })
    }

    /// The identity codec on [0, 1].
    pub fn identity() -> Self {
        Self {
            y_min: 0.0,
            y_max: 1.0,
        }
    }

    pub fn y_min(&self) -> f64 {
        self.y_min
    }

    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    pub fn span(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn encode(&self, y: f64) -> f64 {
        (y - self.y_min) / self.span()
    }

    pub fn decode(&self, u: f64) -> f64 {
        self.y_min + u * self.span()
    }
}

/// Iteration budgets and learning-rate schedules for the two phases.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainPlan {
    pub phase1_iters: u64,
    pub phase2_iters: u64,
    pub schedule_a: LearningSchedule,
    pub schedule_b: LearningSchedule,
    pub seed: u64,
}

impl TrainPlan {
    pub fn validate(&self) -> Result<()> {
        if self.phase1_iters == 0 || self.phase2_iters == 0 {
            return Err(Error::Config(
                "phase iteration counts must be positive".into(),
            ));
        }
        self.schedule_a.validate()?;
        self.schedule_b.validate()?;
        Ok(())
    }

    /// Advisory checks that do not block training. The uncertainty net is
    /// expected to learn more slowly than the predictor.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.schedule_b.eta0 > self.schedule_a.eta_min {
            w.push(format!(
                "uncertainty-net learning rate starts at {} which exceeds the \
                 predictor's floor {}; consider a smaller eta for phase 2",
                self.schedule_b.eta0, self.schedule_a.eta_min
            ));
        }
        w
    }
}

/// Infinite stream of indices into a sample list.
pub trait IndexSampler {
    fn next_index(&mut self) -> usize;
}

/// Uniform independent draws with replacement.
pub struct UniformSampler {
    rng: ChaCha8Rng,
    n: usize,
}

impl UniformSampler {
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty("uniform sampler over zero samples".into()));
        }
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            n,
        })
    }
}

impl IndexSampler for UniformSampler {
    fn next_index(&mut self) -> usize {
        self.rng.random_range(0..self.n)
    }
}

/// Stable sub-seed derivation (splitmix64 of `base ^ stream * golden`),
/// so one run seed can feed several independent generators.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    let mut z = base ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Which network a training step touched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Predictor,
    Uncertainty,
}

/// Outcome of one training step.
#[derive(Debug, Clone, Copy)]
pub struct StepRecord {
    pub phase: Phase,
    /// 0-based iteration within the step's phase.
    pub step_in_phase: u64,
    pub eta: f64,
    /// Squared error of the updated network, measured before its update.
    pub sq_error: f64,
}

/// Incremental driver for the two-phase scheme. [`train_twin`] wraps it;
/// callers that need progress reporting or chunked execution (the CLI log,
/// the browser demo) step it directly.
pub struct TwinTrainer {
    plan: TrainPlan,
    samples: Vec<Sample>,
    sampler_a: Box<dyn IndexSampler>,
    sampler_b: Box<dyn IndexSampler>,
    net_a: Mlp,
    net_b: Mlp,
    mode: UncertaintyMode,
    codec: TargetCodec,
    done_a: u64,
    done_b: u64,
}

impl TwinTrainer {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        plan: TrainPlan,
        samples: Vec<Sample>,
        net_a: Mlp,
        net_b: Mlp,
        sampler_a: Box<dyn IndexSampler>,
        sampler_b: Box<dyn IndexSampler>,
        mode: UncertaintyMode,
        codec: TargetCodec,
    ) -> Result<Self> {
        plan.validate()?;
        if samples.is_empty() {
            return Err(Error::Empty("no training samples".into()));
        }
        if net_a.input_dim() != net_b.input_dim() {
            return Err(Error::Dimension(format!(
                "predictor and uncertainty nets disagree on input width: {} vs {}",
                net_a.input_dim(),
                net_b.input_dim()
            )));
        }
        for (i, s) in samples.iter().enumerate() {
            if s.input.len() != net_a.input_dim() {
                return Err(Error::Dimension(format!(
                    "sample {i} has {} inputs, networks expect {}",
                    s.input.len(),
                    net_a.input_dim()
                )));
            }
            if !(0.0..=1.0).contains(&s.target) {
                return Err(Error::Config(format!(
                    "sample {i} target {} outside [0, 1]; encode targets first",
                    s.target
                )));
            }
        }
        if net_a.output_dim() != 1 || net_b.output_dim() != 1 {
            return Err(Error::Dimension(
                "both networks must have a single output neuron".into(),
            ));
        }
        Ok(Self {
            plan,
            samples,
            sampler_a,
            sampler_b,
            net_a,
            net_b,
            mode,
            codec,
            done_a: 0,
            done_b: 0,
        })
    }

    pub fn steps_total(&self) -> u64 {
        self.plan.phase1_iters + self.plan.phase2_iters
    }

    pub fn steps_done(&self) -> u64 {
        self.done_a + self.done_b
    }

    pub fn is_finished(&self) -> bool {
        self.done_a == self.plan.phase1_iters && self.done_b == self.plan.phase2_iters
    }

    /// The predictor network in its current state.
    pub fn predictor(&self) -> &Mlp {
        &self.net_a
    }

    /// The uncertainty network in its current state.
    pub fn uncertainty(&self) -> &Mlp {
        &self.net_b
    }

    /// Runs one training step: a predictor update while phase 1 lasts,
    /// afterwards an uncertainty update against the frozen predictor.
    pub fn step(&mut self) -> Result<StepRecord> {
        if self.done_a < self.plan.phase1_iters {
            let idx = self.sampler_a.next_index();
            let t = self.done_a;
            let eta = self.plan.schedule_a.eta_at(t);
            let sq_error = self.net_a.backprop_step(&self.samples[idx], eta)?;
            self.done_a += 1;
            Ok(StepRecord {
                phase: Phase::Predictor,
                step_in_phase: t,
                eta,
                sq_error,
            })
        } else if self.done_b < self.plan.phase2_iters {
            let idx = self.sampler_b.next_index();
            let sample = &self.samples[idx];
            let f = self.net_a.predict_scalar(&sample.input)?;
            let residual = f - sample.target;
            let u = match self.mode {
                UncertaintyMode::AbsError => residual.abs(),
                UncertaintyMode::SqError => residual * residual,
            };
            let t = self.done_b;
            let eta = self.plan.schedule_b.eta_at(t);
            let shadow = Sample {
                input: sample.input.clone(),
                target: u,
            };
            let sq_error = self.net_b.backprop_step(&shadow, eta)?;
            self.done_b += 1;
            Ok(StepRecord {
                phase: Phase::Uncertainty,
                step_in_phase: t,
                eta,
                sq_error,
            })
        } else {
            Err(Error::Config("training plan already exhausted".into()))
        }
    }

    /// Runs every remaining step.
    pub fn run_to_end(&mut self) -> Result<()> {
        while !self.is_finished() {
            self.step()?;
        }
        Ok(())
    }

    /// Snapshot of the current model state (both nets cloned).
    pub fn model_snapshot(&self) -> TwinModel {
        TwinModel {
            net_a: self.net_a.clone(),
            net_b: self.net_b.clone(),
            codec: self.codec,
            mode: self.mode,
        }
    }

    pub fn into_model(self) -> TwinModel {
        TwinModel {
            net_a: self.net_a,
            net_b: self.net_b,
            codec: self.codec,
            mode: self.mode,
        }
    }
}

/// Trains both networks to completion with uniform sampling.
///
/// The two phases use independently seeded samplers derived from
/// `plan.seed`; the nets are initialized from their own config seeds.
pub fn train_twin(
    plan: &TrainPlan,
    samples: &[Sample],
    arch_a: &NetConfig,
    arch_b: &NetConfig,
    mode: UncertaintyMode,
    codec: TargetCodec,
) -> Result<TwinModel> {
    let net_a = Mlp::init(arch_a)?;
    let net_b = Mlp::init(arch_b)?;
    let sampler_a = UniformSampler::new(samples.len(), derive_seed(plan.seed, 1))?;
    let sampler_b = UniformSampler::new(samples.len(), derive_seed(plan.seed, 2))?;
    let mut trainer = TwinTrainer::new(
        plan.clone(),
        samples.to_vec(),
        net_a,
        net_b,
        Box::new(sampler_a),
        Box::new(sampler_b),
        mode,
        codec,
    )?;
    trainer.run_to_end()?;
    Ok(trainer.into_model())
}

/// A trained predictor/uncertainty pair plus the target codec.
/// Immutable once built; prediction is pure.
#[derive(Debug, Clone, PartialEq)]
pub struct TwinModel {
    net_a: Mlp,
    net_b: Mlp,
    codec: TargetCodec,
    mode: UncertaintyMode,
}

/// A prediction with its estimated uncertainty, both in original units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PredictionBand {
    pub value: f64,
    pub delta: f64,
}

impl PredictionBand {
    /// Signed distance from `y_true` to the nearest band edge; zero when
    /// the truth lies inside `value ± delta`.
    pub fn effective_error(&self, y_true: f64) -> f64 {
        let err = y_true - self.value;
        if err.abs() <= self.delta {
            0.0
        } else {
            err.signum() * (err.abs() - self.delta)
        }
    }

    /// Whether `y_true` falls inside the band, boundary inclusive.
    pub fn covers(&self, y_true: f64) -> bool {
        (y_true - self.value).abs() <= self.delta
    }
}

impl TwinModel {
    pub fn from_parts(net_a: Mlp, net_b: Mlp, codec: TargetCodec, mode: UncertaintyMode) -> Result<Self> {
        if net_a.input_dim() != net_b.input_dim()
            || net_a.output_dim() != 1
            || net_b.output_dim() != 1
        {
            return Err(Error::Dimension(
                "twin model needs two single-output nets with a common input width".into(),
            ));
        }
        Ok(Self {
            net_a,
            net_b,
            codec,
            mode,
        })
    }

    pub fn input_dim(&self) -> usize {
        self.net_a.input_dim()
    }

    pub fn codec(&self) -> &TargetCodec {
        &self.codec
    }

    pub fn mode(&self) -> UncertaintyMode {
        self.mode
    }

    pub fn predictor(&self) -> &Mlp {
        &self.net_a
    }

    pub fn uncertainty(&self) -> &Mlp {
        &self.net_b
    }

    /// Raw sigmoid outputs `(f, g)` of the two nets, in encoded units.
    pub fn encoded_outputs(&self, input: &[f64]) -> Result<(f64, f64)> {
        Ok((
            self.net_a.predict_scalar(input)?,
            self.net_b.predict_scalar(input)?,
        ))
    }

    /// Band prediction in original units. The value is codec-decoded; the
    /// delta is a residual magnitude in encoded space, so it is scaled by
    /// the codec span only — no offset.
    pub fn predict_band(&self, input: &[f64]) -> Result<PredictionBand> {
        let (f, g) = self.encoded_outputs(input)?;
        let delta_encoded = match self.mode {
            UncertaintyMode::AbsError => g,
            UncertaintyMode::SqError => g.sqrt(),
        };
        Ok(PredictionBand {
            value: self.codec.decode(f),
            delta: delta_encoded * self.codec.span(),
        })
    }

    /// Writes the versioned twin container: header, codec, then the two
    /// embedded mlp payloads.
    pub fn write_text(&self, out: &mut impl Write) -> Result<()> {
        let mut head = String::new();
        let _ = writeln!(head, "twin-v1 {}", self.mode.as_str());
        head.push_str("codec ");
        push_float_line(&mut head, &[self.codec.y_min, self.codec.y_max]);
        head.push_str("net-a\n");
        out.write_all(head.as_bytes())?;
        self.net_a.write_text(out)?;
        out.write_all(b"net-b\n")?;
        self.net_b.write_text(out)?;
        Ok(())
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_text(&mut file)?;
        std::io::Write::flush(&mut file)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<TwinModel> {
        use std::io::BufRead;
        let file = std::io::BufReader::new(std::fs::File::open(path)?);
        let raw: Vec<String> = file.lines().collect::<std::io::Result<_>>()?;
        let mut lines = raw
            .iter()
            .enumerate()
            .map(|(i, l)| (i + 1, l.as_str()))
            .filter(|(_, l)| !l.trim().is_empty());

        let (n, header) = lines
            .next()
            .ok_or_else(|| Error::Format("empty twin model file".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("twin-v1") {
            return Err(Error::Format(format!(
                "line {n}: expected 'twin-v1' header, got {header:?}"
            )));
        }
        let mode = UncertaintyMode::parse(
            parts
                .next()
                .ok_or_else(|| Error::Format(format!("line {n}: missing mode tag")))?,
        )?;

        let (n, codec_line) = lines
            .next()
            .ok_or_else(|| Error::Format("missing codec line".into()))?;
        let toks: Vec<&str> = codec_line.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "codec" {
            return Err(Error::Format(format!(
                "line {n}: expected 'codec <y_min> <y_max>'"
            )));
        }
        let y_min: f64 = toks[1]
            .parse()
            .map_err(|_| Error::Format(format!("line {n}: bad y_min {:?}", toks[1])))?;
        let y_max: f64 = toks[2]
            .parse()
            .map_err(|_| Error::Format(format!("line {n}: bad y_max {:?}", toks[2])))?;
        let codec = TargetCodec::new(y_min, y_max)
            .map_err(|e| Error::Format(format!("line {n}: {e}")))?;

        fn expect_marker<'a>(
            lines: &mut impl Iterator<Item = (usize, &'a str)>,
            want: &str,
        ) -> Result<()> {
            let (n, line) = lines
                .next()
                .ok_or_else(|| Error::Format(format!("missing '{want}' marker")))?;
            if line.trim() != want {
                return Err(Error::Format(format!(
                    "line {n}: expected '{want}', got {line:?}"
                )));
            }
            Ok(())
        }

        expect_marker(&mut lines, "net-a")?;
        let net_a = Mlp::read_from_lines(&mut lines)?;
        expect_marker(&mut lines, "net-b")?;
        let net_b = Mlp::read_from_lines(&mut lines)?;
        if let Some((n, _)) = lines.next() {
            return Err(Error::Format(format!(
                "line {n}: trailing content after twin payload"
            )));
        }
        TwinModel::from_parts(net_a, net_b, codec, mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coin_samples(n: usize, seed: u64) -> Vec<Sample> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| Sample {
                input: vec![rng.random_range(0.0..1.0)],
                target: if rng.random::<bool>() { 1.0 } else { 0.0 },
            })
            .collect()
    }

    fn line_samples(n: usize, seed: u64) -> Vec<Sample> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let x = rng.random_range(0.0..1.0);
                Sample {
                    input: vec![x],
                    target: x,
                }
            })
            .collect()
    }

    fn test_plan(seed: u64) -> TrainPlan {
        TrainPlan {
            phase1_iters: 100_000,
            phase2_iters: 100_000,
            schedule_a: LearningSchedule::new(0.5, 0.05, 20_000.0).unwrap(),
            schedule_b: LearningSchedule::new(0.1, 0.01, 20_000.0).unwrap(),
            seed,
        }
    }

    fn arch_1_10_1(seed: u64) -> NetConfig {
        NetConfig::new(vec![1, 10, 1], 0.5, seed)
    }

    #[test]
    fn codec_round_trip() {
        let codec = TargetCodec::new(-45.0, 45.0).unwrap();
        assert_eq!(codec.encode(0.0), 0.5);
        assert_eq!(codec.encode(45.0), 1.0);
        for y in [-45.0, -12.34, 0.0, 12.34, 45.0] {
            assert!((codec.decode(codec.encode(y)) - y).abs() < 1e-12);
        }
        assert!(TargetCodec::new(1.0, 1.0).is_err());
    }

    #[test]
    fn effective_error_cases() {
        let band = PredictionBand {
            value: 10.0,
            delta: 3.0,
        };
        assert_eq!(band.effective_error(12.0), 0.0);
        assert!((band.effective_error(15.0) - 2.0).abs() < 1e-12);
        assert!((band.effective_error(5.0) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn coverage_cases() {
        let exact = PredictionBand {
            value: 0.25,
            delta: 0.0,
        };
        assert!(exact.covers(0.25));
        assert!(!exact.covers(0.2500001));
        let half = PredictionBand {
            value: 0.5,
            delta: 0.5,
        };
        assert!(half.covers(1.0));
    }

    /// Helper: a net whose output is the constant sigma(logit(p)) = p.
    fn constant_net(input_dim: usize, p: f64) -> Mlp {
        let mut net = Mlp::init(&NetConfig::new(vec![input_dim, 1, 1], 0.0, 0)).unwrap();
        let bias = (p / (1.0 - p)).ln();
        net.layers_mut().last_mut().unwrap().biases[0] = bias;
        net
    }

    #[test]
    fn band_decoding_identity_codec() {
        let model = TwinModel::from_parts(
            constant_net(1, 0.6),
            constant_net(1, 0.1),
            TargetCodec::identity(),
            UncertaintyMode::AbsError,
        )
        .unwrap();
        let band = model.predict_band(&[0.3]).unwrap();
        assert!((band.value - 0.6).abs() < 1e-12);
        assert!((band.delta - 0.1).abs() < 1e-12);
    }

    #[test]
    fn band_decoding_angle_codec() {
        let codec = TargetCodec::new(-45.0, 45.0).unwrap();
        let model = TwinModel::from_parts(
            constant_net(1, 0.5),
            constant_net(1, 0.1),
            codec,
            UncertaintyMode::AbsError,
        )
        .unwrap();
        let band = model.predict_band(&[0.0]).unwrap();
        assert!(band.value.abs() < 1e-12, "midpoint decodes to 0 degrees");
        assert!((band.delta - 9.0).abs() < 1e-9, "0.1 of a 90-degree span");
    }

    #[test]
    fn sq_mode_takes_square_root() {
        let model = TwinModel::from_parts(
            constant_net(1, 0.5),
            constant_net(1, 0.25),
            TargetCodec::identity(),
            UncertaintyMode::SqError,
        )
        .unwrap();
        let band = model.predict_band(&[0.0]).unwrap();
        assert!((band.delta - 0.5).abs() < 1e-12);
    }

    #[test]
    fn coin_data_reaches_both_fixed_points() {
        let plan = test_plan(42);
        let samples = coin_samples(5000, 1);
        let model = train_twin(
            &plan,
            &samples,
            &arch_1_10_1(10),
            &arch_1_10_1(20),
            UncertaintyMode::AbsError,
            TargetCodec::identity(),
        )
        .unwrap();
        for i in 1..10 {
            let x = i as f64 / 10.0;
            let (f, g) = model.encoded_outputs(&[x]).unwrap();
            assert!((f - 0.5).abs() < 0.05, "mean at {x}: {f}");
            assert!((g - 0.5).abs() < 0.05, "spread at {x}: {g}");
        }
    }

    #[test]
    fn deterministic_data_trains_to_small_uncertainty() {
        let plan = test_plan(43);
        let samples = line_samples(5000, 2);
        let model = train_twin(
            &plan,
            &samples,
            &arch_1_10_1(11),
            &arch_1_10_1(21),
            UncertaintyMode::AbsError,
            TargetCodec::identity(),
        )
        .unwrap();
        for i in 1..10 {
            let x = i as f64 / 10.0;
            let (f, g) = model.encoded_outputs(&[x]).unwrap();
            assert!((f - x).abs() < 0.05, "mean at {x}: {f}");
            assert!(g <= 0.05, "uncertainty at {x}: {g}");
        }
    }

    #[test]
    fn phase_two_never_touches_the_predictor() {
        let plan = TrainPlan {
            phase1_iters: 2000,
            phase2_iters: 2000,
            ..test_plan(7)
        };
        let samples = coin_samples(500, 3);
        let mut trainer = TwinTrainer::new(
            plan.clone(),
            samples,
            Mlp::init(&arch_1_10_1(1)).unwrap(),
            Mlp::init(&arch_1_10_1(2)).unwrap(),
            Box::new(UniformSampler::new(500, derive_seed(plan.seed, 1)).unwrap()),
            Box::new(UniformSampler::new(500, derive_seed(plan.seed, 2)).unwrap()),
            UncertaintyMode::AbsError,
            TargetCodec::identity(),
        )
        .unwrap();
        while trainer.steps_done() < plan.phase1_iters {
            trainer.step().unwrap();
        }
        let frozen = trainer.predictor().clone();
        trainer.run_to_end().unwrap();
        assert_eq!(trainer.predictor(), &frozen);
        assert!(trainer.step().is_err(), "stepping past the plan must fail");
    }

    #[test]
    fn training_is_deterministic_per_seed() {
        let plan = TrainPlan {
            phase1_iters: 5000,
            phase2_iters: 5000,
            ..test_plan(99)
        };
        let samples = coin_samples(800, 5);
        let run = || {
            train_twin(
                &plan,
                &samples,
                &arch_1_10_1(31),
                &arch_1_10_1(32),
                UncertaintyMode::AbsError,
                TargetCodec::identity(),
            )
            .unwrap()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn plan_warnings_fire_on_fast_phase_two() {
        let mut plan = test_plan(0);
        plan.schedule_b = LearningSchedule::new(0.05, 0.01, 100.0).unwrap();
        assert!(plan.warnings().is_empty());
        plan.schedule_b = LearningSchedule::new(0.4, 0.01, 100.0).unwrap();
        assert_eq!(plan.warnings().len(), 1);
    }

    #[test]
    fn trainer_rejects_bad_inputs() {
        let plan = test_plan(0);
        let empty: Vec<Sample> = Vec::new();
        assert!(matches!(
            TwinTrainer::new(
                plan.clone(),
                empty,
                Mlp::init(&arch_1_10_1(1)).unwrap(),
                Mlp::init(&arch_1_10_1(2)).unwrap(),
                Box::new(UniformSampler::new(1, 0).unwrap()),
                Box::new(UniformSampler::new(1, 0).unwrap()),
                UncertaintyMode::AbsError,
                TargetCodec::identity(),
            ),
            Err(Error::Empty(_))
        ));
        let wide = Mlp::init(&NetConfig::new(vec![2, 3, 1], 0.5, 0)).unwrap();
        assert!(matches!(
            TwinTrainer::new(
                plan,
                coin_samples(10, 0),
                Mlp::init(&arch_1_10_1(1)).unwrap(),
                wide,
                Box::new(UniformSampler::new(10, 0).unwrap()),
                Box::new(UniformSampler::new(10, 0).unwrap()),
                UncertaintyMode::AbsError,
                TargetCodec::identity(),
            ),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn save_load_round_trip() {
        let plan = TrainPlan {
            phase1_iters: 3000,
            phase2_iters: 3000,
            ..test_plan(17)
        };
        let samples = coin_samples(300, 8);
        let codec = TargetCodec::new(-45.0, 45.0).unwrap();
        let model = train_twin(
            &plan,
            &samples,
            &arch_1_10_1(41),
            &arch_1_10_1(42),
            UncertaintyMode::SqError,
            codec,
        )
        .unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.twin");
        model.save(&path).unwrap();
        let loaded = TwinModel::load(&path).unwrap();
        assert_eq!(model, loaded);
    }

    #[test]
    fn malformed_twin_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.twin");
        std::fs::write(&path, "twin-v2 abs\ncodec 0 1\n").unwrap();
        assert!(TwinModel::load(&path).is_err());
        std::fs::write(&path, "twin-v1 weird\ncodec 0 1\n").unwrap();
        assert!(TwinModel::load(&path).is_err());
        std::fs::write(&path, "twin-v1 abs\ncodec 1 0\nnet-a\n").unwrap();
        assert!(TwinModel::load(&path).is_err());
    }

    #[test]
    fn effective_error_and_coverage_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..2000 {
            let band = PredictionBand {
                value: rng.random_range(-10.0..10.0),
                delta: rng.random_range(0.0..5.0),
            };
            let y = rng.random_range(-20.0..20.0);
            let eff = band.effective_error(y);
            assert_eq!(eff == 0.0, band.covers(y));
            assert!(eff.abs() <= (y - band.value).abs() + 1e-15);
        }
    }
}

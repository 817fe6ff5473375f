//! Minimal feedforward network: logistic-sigmoid activations everywhere,
//! trained one sample at a time by plain gradient descent.
//!
//! The hot path is deliberately simple — flat `Vec<f64>` weight storage,
//! no optimizer state — because every experiment in this crate runs the
//! same online update with a decaying learning rate.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Shape and initialization parameters for [`Mlp::init`].
#[derive(Debug, Clone, PartialEq)]
pub struct NetConfig {
    /// Neuron counts per layer, input first. Length >= 2, every entry >= 1.
    pub layer_sizes: Vec<usize>,
    /// Weights and biases are drawn uniformly from
    /// `[-init_half_width, +init_half_width]`.
    pub init_half_width: f64,
    pub seed: u64,
}

impl NetConfig {
    pub fn new(layer_sizes: Vec<usize>, init_half_width: f64, seed: u64) -> Self {
        Self {
            layer_sizes,
            init_half_width,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.layer_sizes.len() < 2 {
            return Err(Error::Config(format!(
                "need at least input and output layers, got {:?}",
                self.layer_sizes
            )));
        }
        if self.layer_sizes.iter().any(|&n| n == 0) {
            return Err(Error::Config(format!(
                "layer sizes must be >= 1, got {:?}",
                self.layer_sizes
            )));
        }
        if !self.init_half_width.is_finite() || self.init_half_width < 0.0 {
            return Err(Error::Config(format!(
                "init_half_width must be finite and >= 0, got {}",
                self.init_half_width
            )));
        }
        Ok(())
    }
}

/// One fully connected layer.
///
/// `weights` is row-major with shape `(fan_in, fan_out)`:
/// `weights[i * fan_out + j]` connects input `i` to output `j`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Layer {
    pub(crate) weights: Vec<f64>,
    pub(crate) biases: Vec<f64>,
}

/// Feedforward network with sigmoid activations on every computed layer,
/// including the output.
#[derive(Debug, Clone, PartialEq)]
pub struct Mlp {
    layer_sizes: Vec<usize>,
    layers: Vec<Layer>,
}

/// One training example. Targets live in the sigmoid's output range.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub input: Vec<f64>,
    pub target: f64,
}

impl Sample {
    pub fn new(input: Vec<f64>, target: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&target) {
            return Err(Error::Config(format!(
                "sample target must lie in [0, 1], got {target}"
            )));
        }
        Ok(Self { input, target })
    }
}

/// Learning rate `eta(t) = max(eta_min, eta0 / (1 + t / decay_tau))`:
/// hyperbolic decay towards a positive floor.
#[derive(Debug, Clone, PartialEq)]
pub struct LearningSchedule {
    pub eta0: f64,
    pub eta_min: f64,
    pub decay_tau: f64,
}

impl LearningSchedule {
    pub fn new(eta0: f64, eta_min: f64, decay_tau: f64) -> Result<Self> {
        let s = Self {
            eta0,
            eta_min,
            decay_tau,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.eta_min > 0.0
            && self.eta_min <= self.eta0
            && self.eta0.is_finite()
            && self.decay_tau > 0.0
            && self.decay_tau.is_finite();
        if !ok {
            return Err(Error::Config(format!(
                "learning schedule needs 0 < eta_min <= eta0 and decay_tau > 0, \
                 got eta0={}, eta_min={}, decay_tau={}",
                self.eta0, self.eta_min, self.decay_tau
            )));
        }
        Ok(())
    }

    /// Rate at iteration `t` (0-based).
    pub fn eta_at(&self, t: u64) -> f64 {
        let decayed = self.eta0 / (1.0 + t as f64 / self.decay_tau);
        decayed.max(self.eta_min)
    }
}

/// Per-layer gradients of the squared error, same shapes as the layers.
#[derive(Debug, Clone)]
pub struct Gradients {
    pub d_weights: Vec<Vec<f64>>,
    pub d_biases: Vec<Vec<f64>>,
}

/// Logistic sigmoid. The pre-activation is clamped to [-500, 500] so the
/// exponential cannot overflow.
pub fn sigmoid(z: f64) -> f64 {
    let z = z.clamp(-500.0, 500.0);
    1.0 / (1.0 + (-z).exp())
}

impl Mlp {
    /// Builds a network with weights and biases drawn uniformly from
    /// `[-init_half_width, +init_half_width]`. Same config, same network.
    pub fn init(config: &NetConfig) -> Result<Mlp> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let hw = config.init_half_width;
        let mut draw = |n: usize| -> Vec<f64> {
            (0..n)
                .map(|_| {
                    if hw == 0.0 {
                        0.0
                    } else {
                        rng.random_range(-hw..=hw)
                    }
                })
                .collect()
        };
        let layers = config
            .layer_sizes
            .windows(2)
            .map(|w| Layer {
                weights: draw(w[0] * w[1]),
                biases: draw(w[1]),
            })
            .collect();
        Ok(Mlp {
            layer_sizes: config.layer_sizes.clone(),
            layers,
        })
    }

    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn input_dim(&self) -> usize {
        self.layer_sizes[0]
    }

    pub fn output_dim(&self) -> usize {
        *self.layer_sizes.last().unwrap()
    }

    #[cfg(test)]
    pub(crate) fn layers_mut(&mut self) -> &mut [Layer] {
        &mut self.layers
    }

    fn check_input(&self, input: &[f64]) -> Result<()> {
        if input.len() != self.input_dim() {
            return Err(Error::Dimension(format!(
                "input has {} entries, network expects {}",
                input.len(),
                self.input_dim()
            )));
        }
        Ok(())
    }

    /// Runs the forward pass and returns the activations of every computed
    /// layer; the last entry is the network output.
    pub fn forward(&self, input: &[f64]) -> Result<Vec<Vec<f64>>> {
        self.check_input(input)?;
        let mut activations: Vec<Vec<f64>> = Vec::with_capacity(self.layers.len());
        let mut current = input;
        for (layer, &fan_out) in self.layers.iter().zip(&self.layer_sizes[1..]) {
            let mut next = layer.biases.clone();
            for (i, &a) in current.iter().enumerate() {
                let row = &layer.weights[i * fan_out..(i + 1) * fan_out];
                for (j, &w) in row.iter().enumerate() {
                    next[j] += w * a;
                }
            }
            for z in &mut next {
                *z = sigmoid(*z);
            }
            activations.push(next);
            current = activations.last().unwrap();
        }
        Ok(activations)
    }

    /// Scalar output of a single-output network.
    pub fn predict_scalar(&self, input: &[f64]) -> Result<f64> {
        if self.output_dim() != 1 {
            return Err(Error::Dimension(format!(
                "predict_scalar needs a single-output network, got {} outputs",
                self.output_dim()
            )));
        }
        Ok(self.forward(input)?.last().unwrap()[0])
    }

    /// Squared error `(f - y)^2` and its gradient with respect to every
    /// weight and bias, for a single-output network.
    pub fn gradients(&self, sample: &Sample) -> Result<(Gradients, f64)> {
        if self.output_dim() != 1 {
            return Err(Error::Dimension(format!(
                "training needs a single-output network, got {} outputs",
                self.output_dim()
            )));
        }
        let activations = self.forward(&sample.input)?;
        let f = activations.last().unwrap()[0];
        let err = (f - sample.target) * (f - sample.target);

        // delta[j] = d(err)/d(z_j) for the layer being processed,
        // starting from d(err)/d(z_out) = 2 (f - y) f (1 - f).
        let mut delta = vec![2.0 * (f - sample.target) * f * (1.0 - f)];
        let mut d_weights = vec![Vec::new(); self.layers.len()];
        let mut d_biases = vec![Vec::new(); self.layers.len()];

        for l in (0..self.layers.len()).rev() {
            let inputs: &[f64] = if l == 0 {
                &sample.input
            } else {
                &activations[l - 1]
            };
            let fan_out = self.layer_sizes[l + 1];
            let mut dw = vec![0.0; inputs.len() * fan_out];
            for (i, &a) in inputs.iter().enumerate() {
                for (j, &d) in delta.iter().enumerate() {
                    dw[i * fan_out + j] = a * d;
                }
            }
            d_weights[l] = dw;
            d_biases[l] = delta.clone();

            if l > 0 {
                let weights = &self.layers[l].weights;
                let prev = &activations[l - 1];
                let mut prev_delta = vec![0.0; prev.len()];
                for (i, pd) in prev_delta.iter_mut().enumerate() {
                    let mut sum = 0.0;
                    for (j, &d) in delta.iter().enumerate() {
                        sum += weights[i * fan_out + j] * d;
                    }
                    *pd = sum * prev[i] * (1.0 - prev[i]);
                }
                delta = prev_delta;
            }
        }

        if !err.is_finite() || delta.iter().any(|d| !d.is_finite()) {
            return Err(Error::Numeric(
                "non-finite error or gradient during backpropagation".into(),
            ));
        }
        Ok((
            Gradients {
                d_weights,
                d_biases,
            },
            err,
        ))
    }

    /// One online gradient-descent step on `sample`. Returns the squared
    /// error measured before the update.
    pub fn backprop_step(&mut self, sample: &Sample, eta: f64) -> Result<f64> {
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::Config(format!(
                "learning rate must be positive and finite, got {eta}"
            )));
        }
        let (grads, err) = self.gradients(sample)?;
        for (layer, (dw, db)) in self
            .layers
            .iter_mut()
            .zip(grads.d_weights.iter().zip(&grads.d_biases))
        {
            for (w, &g) in layer.weights.iter_mut().zip(dw) {
                *w -= eta * g;
            }
            for (b, &g) in layer.biases.iter_mut().zip(db) {
                *b -= eta * g;
            }
        }
        Ok(err)
    }

    /// Serializes the network in the documented text grammar:
    /// a `mlp-v1` header with the layer sizes, then per connection layer
    /// one line per fan-in row of weights followed by one bias line.
    /// Values carry 17 significant digits and round-trip bit-exactly.
    pub fn write_text(&self, out: &mut impl Write) -> Result<()> {
        let mut buf = String::new();
        buf.push_str("mlp-v1");
        for n in &self.layer_sizes {
            let _ = write!(buf, " {n}");
        }
        buf.push('\n');
        for (layer, &fan_out) in self.layers.iter().zip(&self.layer_sizes[1..]) {
            for row in layer.weights.chunks(fan_out) {
                push_float_line(&mut buf, row);
            }
            push_float_line(&mut buf, &layer.biases);
        }
        out.write_all(buf.as_bytes())?;
        Ok(())
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_text(&mut file)?;
        file.flush()?;
        Ok(())
    }

    /// Parses one `mlp-v1` payload from a stream of `(line_number, line)`
    /// pairs, consuming exactly the payload's lines. Used directly by
    /// [`Mlp::load`] and by the twin-model container format.
    pub(crate) fn read_from_lines<'a>(
        lines: &mut impl Iterator<Item = (usize, &'a str)>,
    ) -> Result<Mlp> {
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::Format("missing mlp header line".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("mlp-v1") {
            return Err(Error::Format(format!(
                "line {line_no}: expected 'mlp-v1' header, got {header:?}"
            )));
        }
        let layer_sizes: Vec<usize> = parts
            .map(|p| {
                p.parse::<usize>().map_err(|_| {
                    Error::Format(format!("line {line_no}: bad layer size {p:?}"))
                })
            })
            .collect::<Result<_>>()?;
        let config_probe = NetConfig::new(layer_sizes.clone(), 0.0, 0);
        config_probe.validate().map_err(|e| {
            Error::Format(format!("line {line_no}: invalid layer sizes ({e})"))
        })?;

        let mut read_row = |expected: usize| -> Result<Vec<f64>> {
            let (n, line) = lines
                .next()
                .ok_or_else(|| Error::Format("file truncated inside mlp payload".into()))?;
            let row: Vec<f64> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>()
                        .map_err(|_| Error::Format(format!("line {n}: bad number {tok:?}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != expected {
                return Err(Error::Format(format!(
                    "line {n}: expected {expected} values, found {}",
                    row.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::Format(format!("line {n}: non-finite weight")));
            }
            Ok(row)
        };

        let mut layers = Vec::with_capacity(layer_sizes.len() - 1);
        for w in layer_sizes.windows(2) {
            let (fan_in, fan_out) = (w[0], w[1]);
            let mut weights = Vec::with_capacity(fan_in * fan_out);
            for _ in 0..fan_in {
                weights.extend(read_row(fan_out)?);
            }
            let biases = read_row(fan_out)?;
            layers.push(Layer { weights, biases });
        }
        Ok(Mlp {
            layer_sizes,
            layers,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Mlp> {
        let file = std::io::BufReader::new(std::fs::File::open(path)?);
        let raw: Vec<String> = file.lines().collect::<std::io::Result<_>>()?;
        let mut lines = raw
            .iter()
            .enumerate()
            .map(|(i, l)| (i + 1, l.as_str()))
            .filter(|(_, l)| !l.trim().is_empty());
        let mlp = Self::read_from_lines(&mut lines)?;
        if let Some((n, _)) = lines.next() {
            return Err(Error::Format(format!(
                "line {n}: trailing content after mlp payload"
            )));
        }
        Ok(mlp)
    }
}

pub(crate) fn push_float_line(buf: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            buf.push(' ');
        }
        let _ = write!(buf, "{v:.16e}");
    }
    buf.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config() -> NetConfig {
        NetConfig::new(vec![14, 25, 1], 0.5, 7)
    }

    fn rng_samples(n: usize, dim: usize, seed: u64) -> Vec<Sample> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| Sample {
                input: (0..dim).map(|_| rng.random_range(0.0..1.0)).collect(),
                target: rng.random_range(0.0..1.0),
            })
            .collect()
    }

    #[test]
    fn zero_half_width_gives_half_everywhere() {
        let mlp = Mlp::init(&NetConfig::new(vec![3, 4, 1], 0.0, 0)).unwrap();
        let acts = mlp.forward(&[0.3, -2.0, 11.0]).unwrap();
        for layer in &acts {
            for &a in layer {
                assert_eq!(a, 0.5);
            }
        }
    }

    #[test]
    fn same_seed_same_network() {
        let a = Mlp::init(&small_config()).unwrap();
        let b = Mlp::init(&small_config()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn init_respects_half_width() {
        let mlp = Mlp::init(&small_config()).unwrap();
        for layer in &mlp.layers {
            for v in layer.weights.iter().chain(&layer.biases) {
                assert!(v.abs() <= 0.5, "weight {v} outside [-0.5, 0.5]");
            }
        }
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(Mlp::init(&NetConfig::new(vec![4], 0.5, 0)).is_err());
        assert!(Mlp::init(&NetConfig::new(vec![4, 0, 1], 0.5, 0)).is_err());
        assert!(Mlp::init(&NetConfig::new(vec![4, 1], -0.1, 0)).is_err());
    }

    #[test]
    fn forward_matches_scalar_oracle() {
        // 1-1-1 net with every weight and bias set to 1, input 0:
        // hidden = sigmoid(1), output = sigmoid(hidden + 1).
        let mut mlp = Mlp::init(&NetConfig::new(vec![1, 1, 1], 0.0, 0)).unwrap();
        for layer in mlp.layers_mut() {
            layer.weights.fill(1.0);
            layer.biases.fill(1.0);
        }
        let acts = mlp.forward(&[0.0]).unwrap();
        let hidden = 1.0 / (1.0 + (-1.0f64).exp());
        let output = 1.0 / (1.0 + (-(hidden + 1.0)).exp());
        assert!((acts[0][0] - hidden).abs() < 1e-12);
        assert!((acts[1][0] - output).abs() < 1e-12);
        assert!((output - 0.8495).abs() < 1e-4);
    }

    #[test]
    fn forward_rejects_bad_width() {
        let mlp = Mlp::init(&small_config()).unwrap();
        assert!(matches!(
            mlp.forward(&vec![0.0; 13]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn activations_stay_in_open_unit_interval() {
        let mlp = Mlp::init(&small_config()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let input: Vec<f64> = (0..14).map(|_| rng.random_range(0.0..1.0)).collect();
            for layer in mlp.forward(&input).unwrap() {
                for a in layer {
                    assert!(a > 0.0 && a < 1.0);
                }
            }
        }
    }

    /// Central finite difference of the squared error with respect to one
    /// weight, computed in the cancellation-free factored form
    /// `e+ - e- = (f+ - f-)(f+ + f- - 2y)`.
    fn fd_gradient(mlp: &Mlp, sample: &Sample, layer: usize, idx: usize, bias: bool) -> f64 {
        let h = 1e-5;
        let mut probe = |delta: f64| -> f64 {
            let mut m = mlp.clone();
            let slot = if bias {
                &mut m.layers[layer].biases[idx]
            } else {
                &mut m.layers[layer].weights[idx]
            };
            *slot += delta;
            m.predict_scalar(&sample.input).unwrap()
        };
        let f_plus = probe(h);
        let f_minus = probe(-h);
        (f_plus - f_minus) * (f_plus + f_minus - 2.0 * sample.target) / (2.0 * h)
    }

    #[test]
    fn analytic_gradient_matches_finite_differences() {
        let mlp = Mlp::init(&small_config()).unwrap();
        let sample = rng_samples(1, 14, 3).pop().unwrap();
        let (grads, _) = mlp.gradients(&sample).unwrap();
        for l in 0..mlp.layers.len() {
            for (idx, &g) in grads.d_weights[l].iter().enumerate() {
                let num = fd_gradient(&mlp, &sample, l, idx, false);
                if g.abs() > 1e-8 {
                    let rel = (g - num).abs() / g.abs().max(num.abs());
                    assert!(rel < 1e-5, "layer {l} weight {idx}: {g} vs {num}");
                }
            }
            for (idx, &g) in grads.d_biases[l].iter().enumerate() {
                let num = fd_gradient(&mlp, &sample, l, idx, true);
                if g.abs() > 1e-8 {
                    let rel = (g - num).abs() / g.abs().max(num.abs());
                    assert!(rel < 1e-5, "layer {l} bias {idx}: {g} vs {num}");
                }
            }
        }
    }

    #[test]
    fn exact_fit_leaves_weights_unchanged() {
        // A zero network outputs exactly 0.5; training on target 0.5 is a
        // zero-gradient step.
        let mut mlp = Mlp::init(&NetConfig::new(vec![4, 3, 1], 0.0, 0)).unwrap();
        let before = mlp.clone();
        let sample = Sample::new(vec![0.1, 0.2, 0.3, 0.4], 0.5).unwrap();
        let err = mlp.backprop_step(&sample, 0.5).unwrap();
        assert_eq!(err, 0.0);
        assert_eq!(mlp, before);
    }

    #[test]
    fn repeated_steps_fit_single_sample() {
        let mut mlp = Mlp::init(&small_config()).unwrap();
        let sample = rng_samples(1, 14, 11).pop().unwrap();
        let mut err = f64::MAX;
        for _ in 0..200 {
            err = mlp.backprop_step(&sample, 0.5).unwrap();
        }
        assert!(err < 1e-3, "error after 200 steps: {err}");
    }

    #[test]
    fn single_sample_contraction_within_budget() {
        for seed in [0u64, 1, 2] {
            let mut cfg = small_config();
            cfg.seed = seed;
            let mut mlp = Mlp::init(&cfg).unwrap();
            let sample = rng_samples(1, 14, 100 + seed).pop().unwrap();
            let mut ok = false;
            for _ in 0..10_000 {
                let f = mlp.predict_scalar(&sample.input).unwrap();
                if (f - sample.target).abs() < 1e-2 {
                    ok = true;
                    break;
                }
                mlp.backprop_step(&sample, 0.5).unwrap();
            }
            assert!(ok, "seed {seed} did not reach the target within 1e4 steps");
        }
    }

    #[test]
    fn training_is_deterministic() {
        let samples = rng_samples(500, 14, 5);
        let schedule = LearningSchedule::new(0.4, 0.01, 100.0).unwrap();
        let run = || {
            let mut mlp = Mlp::init(&small_config()).unwrap();
            for (t, s) in samples.iter().enumerate() {
                mlp.backprop_step(s, schedule.eta_at(t as u64)).unwrap();
            }
            mlp
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn schedule_values() {
        let s = LearningSchedule::new(0.4, 0.01, 1000.0).unwrap();
        assert_eq!(s.eta_at(0), 0.4);
        assert_eq!(s.eta_at(1000), 0.2);
        assert_eq!(s.eta_at(u64::MAX / 2), 0.01);
    }

    #[test]
    fn schedule_monotone_with_floor() {
        let s = LearningSchedule::new(0.5, 0.05, 321.0).unwrap();
        let mut prev = f64::MAX;
        for t in (0..200_000).step_by(97) {
            let eta = s.eta_at(t);
            assert!(eta <= prev && eta >= s.eta_min);
            prev = eta;
        }
    }

    #[test]
    fn schedule_rejects_bad_params() {
        assert!(LearningSchedule::new(0.1, 0.2, 10.0).is_err());
        assert!(LearningSchedule::new(0.1, 0.0, 10.0).is_err());
        assert!(LearningSchedule::new(0.1, 0.05, 0.0).is_err());
    }

    #[test]
    fn save_load_round_trip_is_exact() {
        let mut mlp = Mlp::init(&small_config()).unwrap();
        for s in rng_samples(50, 14, 8) {
            mlp.backprop_step(&s, 0.3).unwrap();
        }
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.mlp");
        mlp.save(&path).unwrap();
        let loaded = Mlp::load(&path).unwrap();
        assert_eq!(mlp, loaded);
        for s in rng_samples(10, 14, 9) {
            assert_eq!(
                mlp.predict_scalar(&s.input).unwrap(),
                loaded.predict_scalar(&s.input).unwrap()
            );
        }
    }

    #[test]
    fn truncated_file_is_rejected() {
        let mlp = Mlp::init(&small_config()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.mlp");
        mlp.save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let cut = lines[..lines.len() - 3].join("\n");
        std::fs::write(&path, cut).unwrap();
        assert!(matches!(Mlp::load(&path), Err(Error::Format(_))));
    }

    #[test]
    fn wrong_row_width_is_rejected() {
        let mlp = Mlp::init(&small_config()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.mlp");
        mlp.save(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        // Drop one value from the first weight row: 25 wide becomes 24.
        let row = lines[1].clone();
        lines[1] = row.rsplit_once(' ').unwrap().0.to_string();
        std::fs::write(&path, lines.join("\n")).unwrap();
        let err = Mlp::load(&path).unwrap_err();
        assert!(err.to_string().contains("expected 25 values"), "{err}");
    }
}

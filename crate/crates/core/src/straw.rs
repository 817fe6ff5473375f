//! Monte Carlo straw-chamber simulator.
//!
//! A chamber is a stack of layers of drift tubes ("straws"); alternate
//! layers are shifted sideways by one straw radius (half a cell). A
//! straight track leaves, in every straw it crosses, a drift value that
//! grows as the track passes closer to the wire. Tracks with different
//! angles can produce nearly identical drift patterns — that left-right
//! ambiguity is what the twin scheme is meant to expose.

use std::io::{BufRead, Write};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::nn::Sample;
use crate::twin::TargetCodec;

/// Chamber layout. Layer `k` sits at `z = radius * (2k + 1)`; its wires
/// sit at `x = radius * (2j + 1)`, plus one radius for odd layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChamberGeometry {
    pub n_layers: usize,
    pub straws_per_layer: usize,
    pub radius: f64,
}

impl Default for ChamberGeometry {
    fn default() -> Self {
        Self {
            n_layers: 2,
            straws_per_layer: 7,
            radius: 0.5,
        }
    }
}

impl ChamberGeometry {
    pub fn new(n_layers: usize, straws_per_layer: usize, radius: f64) -> Result<Self> {
        let g = Self {
            n_layers,
            straws_per_layer,
            radius,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_layers == 0 || self.straws_per_layer == 0 {
            return Err(Error::Config(
                "chamber needs at least one layer and one straw per layer".into(),
            ));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::Config(format!(
                "straw radius must be positive and finite, got {}",
                self.radius
            )));
        }
        Ok(())
    }

    pub fn total_straws(&self) -> usize {
        self.n_layers * self.straws_per_layer
    }

    pub fn layer_z(&self, layer: usize) -> f64 {
        self.radius * (2 * layer + 1) as f64
    }

    pub fn wire_x(&self, layer: usize, straw: usize) -> f64 {
        let shift = if layer % 2 == 1 { self.radius } else { 0.0 };
        self.radius * (2 * straw + 1) as f64 + shift
    }

    pub fn wire_center(&self, layer: usize, straw: usize) -> (f64, f64) {
        (self.wire_x(layer, straw), self.layer_z(layer))
    }

    /// Horizontal extent covered by straws, over all layers.
    pub fn x_extent(&self) -> (f64, f64) {
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for layer in 0..self.n_layers {
            lo = lo.min(self.wire_x(layer, 0) - self.radius);
            hi = hi.max(self.wire_x(layer, self.straws_per_layer - 1) + self.radius);
        }
        (lo, hi)
    }

    /// Vertical extent of the straw stack.
    pub fn z_extent(&self) -> (f64, f64) {
        (0.0, 2.0 * self.radius * self.n_layers as f64)
    }
}

/// Straight line `x(z) = x0 + z * tan(angle)`; `angle_deg = 0` is vertical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Track {
    pub angle_deg: f64,
    pub x0: f64,
}

impl Track {
    /// Exact perpendicular distance from the track line to a wire point.
    pub fn distance_to_wire(&self, wire: (f64, f64)) -> f64 {
        let a = self.angle_deg.to_radians();
        let (wx, wz) = wire;
        (a.cos() * (wx - self.x0) - a.sin() * wz).abs()
    }
}

/// One encoded event: per-straw drift inputs (0 for a miss, `(r - d) / r`
/// for a hit), the true track angle, and the hit count.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub inputs: Vec<f64>,
    pub target_angle_deg: f64,
    pub n_hits: usize,
}

impl Event {
    pub fn to_sample(&self, codec: &TargetCodec) -> Sample {
        Sample {
            input: self.inputs.clone(),
            target: codec.encode(self.target_angle_deg),
        }
    }
}

/// Encodes the drift response of every straw to a track. A straw counts as
/// hit only for `d < radius`, strictly: a tangent track is a miss.
pub fn encode_event(geometry: &ChamberGeometry, track: &Track) -> Event {
    let r = geometry.radius;
    let mut inputs = Vec::with_capacity(geometry.total_straws());
    let mut n_hits = 0;
    for layer in 0..geometry.n_layers {
        for straw in 0..geometry.straws_per_layer {
            let d = track.distance_to_wire(geometry.wire_center(layer, straw));
            if d < r {
                inputs.push((r - d) / r);
                n_hits += 1;
            } else {
                inputs.push(0.0);
            }
        }
    }
    Event {
        inputs,
        target_angle_deg: track.angle_deg,
        n_hits,
    }
}

/// Codec mapping `[-angle_max, +angle_max]` degrees onto the sigmoid range.
pub fn angle_codec(angle_max_deg: f64) -> Result<TargetCodec> {
    if !(angle_max_deg > 0.0 && angle_max_deg < 90.0) {
        return Err(Error::Config(format!(
            "angle_max must lie in (0, 90) degrees, got {angle_max_deg}"
        )));
    }
    TargetCodec::new(-angle_max_deg, angle_max_deg)
}

const MAX_CONSECUTIVE_REJECTIONS: u64 = 1_000_000;

/// Rejection-samples `n` tracks with at least `min_straws` hits.
///
/// Tracks draw `angle` uniform in `[-angle_max, +angle_max]` and `x0`
/// uniform over the chamber width extended by one cell (one straw
/// diameter) per side, so edge-clipping tracks occur. Each event consumes
/// its own counter stream of the seeded generator, which keeps the output
/// independent of how events are scheduled.
pub fn generate_dataset(
    geometry: &ChamberGeometry,
    n: usize,
    seed: u64,
    min_straws: usize,
    angle_max_deg: f64,
) -> Result<Vec<Event>> {
    geometry.validate()?;
    if n == 0 {
        return Err(Error::Config("dataset size must be positive".into()));
    }
    if min_straws > geometry.total_straws() {
        return Err(Error::Config(format!(
            "min_straws {} exceeds the chamber's {} straws",
            min_straws,
            geometry.total_straws()
        )));
    }
    if !(angle_max_deg > 0.0 && angle_max_deg < 90.0) {
        return Err(Error::Config(format!(
            "angle_max must lie in (0, 90) degrees, got {angle_max_deg}"
        )));
    }
    let (xlo, xhi) = geometry.x_extent();
    let cell = 2.0 * geometry.radius;
    let (xlo, xhi) = (xlo - cell, xhi + cell);

    let mut events = Vec::with_capacity(n);
    for i in 0..n {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let mut rejections: u64 = 0;
        loop {
            let track = Track {
                angle_deg: rng.random_range(-angle_max_deg..=angle_max_deg),
                x0: rng.random_range(xlo..=xhi),
            };
            let event = encode_event(geometry, &track);
            if event.n_hits >= min_straws {
                events.push(event);
                break;
            }
            rejections += 1;
            if rejections >= MAX_CONSECUTIVE_REJECTIONS {
                return Err(Error::Generation(format!(
                    "no track with >= {min_straws} hit straws in {MAX_CONSECUTIVE_REJECTIONS} \
                     consecutive draws"
                )));
            }
        }
    }
    Ok(events)
}

/// Writes events as CSV: `s0..s{N-1},angle_deg,n_hits`, floats with 17
/// significant digits so values survive a round trip bit-exactly.
pub fn write_events_csv(events: &[Event], n_straws: usize, out: &mut impl Write) -> Result<()> {
    let mut buf = String::new();
    for i in 0..n_straws {
        buf.push_str(&format!("s{i},"));
    }
    buf.push_str("angle_deg,n_hits\n");
    for (row, e) in events.iter().enumerate() {
        if e.inputs.len() != n_straws {
            return Err(Error::Dimension(format!(
                "event {row} has {} straw inputs, expected {n_straws}",
                e.inputs.len()
            )));
        }
        for v in &e.inputs {
            buf.push_str(&format!("{v:.16e},"));
        }
        buf.push_str(&format!("{:.16e},{}\n", e.target_angle_deg, e.n_hits));
        if buf.len() > 1 << 20 {
            out.write_all(buf.as_bytes())?;
            buf.clear();
        }
    }
    out.write_all(buf.as_bytes())?;
    Ok(())
}

/// Reads the CSV written by [`write_events_csv`]. The straw count is taken
/// from the header.
pub fn read_events_csv(input: &mut impl BufRead) -> Result<Vec<Event>> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Empty("event CSV has no header".into()))??;
    let cols: Vec<&str> = header.trim().split(',').collect();
    if cols.len() < 3 || cols[cols.len() - 2] != "angle_deg" || cols[cols.len() - 1] != "n_hits" {
        return Err(Error::Format(
            "event CSV header must end in angle_deg,n_hits".into(),
        ));
    }
    let n_straws = cols.len() - 2;
    for (i, c) in cols[..n_straws].iter().enumerate() {
        if *c != format!("s{i}") {
            return Err(Error::Format(format!(
                "event CSV header column {i} is {c:?}, expected 's{i}'"
            )));
        }
    }

    let mut events = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line = line?;
        let row = idx + 2; // 1-based file line
        if line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.trim().split(',').collect();
        if toks.len() != n_straws + 2 {
            return Err(Error::Parse {
                row,
                msg: format!("expected {} columns, found {}", n_straws + 2, toks.len()),
            });
        }
        let mut values = Vec::with_capacity(n_straws);
        for t in &toks[..n_straws] {
            values.push(t.parse::<f64>().map_err(|_| Error::Parse {
                row,
                msg: format!("bad drift value {t:?}"),
            })?);
        }
        let angle = toks[n_straws].parse::<f64>().map_err(|_| Error::Parse {
            row,
            msg: format!("bad angle {:?}", toks[n_straws]),
        })?;
        let n_hits = toks[n_straws + 1]
            .parse::<usize>()
            .map_err(|_| Error::Parse {
                row,
                msg: format!("bad hit count {:?}", toks[n_straws + 1]),
            })?;
        events.push(Event {
            inputs: values,
            target_angle_deg: angle,
            n_hits,
        });
    }
    if events.is_empty() {
        return Err(Error::Empty("event CSV has no data rows".into()));
    }
    Ok(events)
}

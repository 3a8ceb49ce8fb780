//! Seeded rejection sampling of configurations.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conic::steiner_point_sample;
use crate::error::{GeometryError, Result};
use crate::scalar::{int, ratio};
use crate::triangle::{Bary, DegeneracyClass, Triangle};

use super::config::{build_configuration, Configuration};

const RETRY_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// No degeneracy flag at all.
    Generic,
    /// `P` on the Steiner circumellipse.
    OnSteiner,
    /// `P` on the line at infinity.
    PInfinite,
    /// `P` on exactly one median, ordinary and off the Steiner ellipse.
    OnMedian,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [
        Stratum::Generic,
        Stratum::OnSteiner,
        Stratum::PInfinite,
        Stratum::OnMedian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Stratum::Generic => "generic",
            Stratum::OnSteiner => "on-steiner",
            Stratum::PInfinite => "p-infinite",
            Stratum::OnMedian => "on-median",
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Stratum {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        Stratum::ALL
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or(GeometryError::BadParameter("unknown stratum"))
    }
}

fn random_triangle(rng: &mut ChaCha8Rng) -> Triangle {
    loop {
        let mut pts = [(0i64, 0i64); 3];
        for p in &mut pts {
            *p = (rng.random_range(-10..=10), rng.random_range(-10..=10));
        }
        if let Ok(t) = Triangle::from_int_vertices(pts) {
            return t;
        }
    }
}

fn numerator(rng: &mut ChaCha8Rng) -> i64 {
    rng.random_range(-9..=9)
}

fn candidate(rng: &mut ChaCha8Rng, t: &Triangle, stratum: Stratum) -> Option<Bary> {
    let b = match stratum {
        Stratum::Generic => Bary::new(
            int(numerator(rng)),
            int(numerator(rng)),
            int(numerator(rng)),
        )
        .ok()?,
        Stratum::PInfinite => {
            let (u, v) = (numerator(rng), numerator(rng));
            Bary::new(int(u), int(v), int(-u - v)).ok()?
        }
        Stratum::OnMedian => {
            let (u, w) = (numerator(rng), numerator(rng));
            let mut c = [int(u), int(u), int(w)];
            c.rotate_left(rng.random_range(0..3));
            Bary::from_coords(&c).ok()?
        }
        Stratum::OnSteiner => {
            let param = ratio(numerator(rng), rng.random_range(1..=9));
            let p = steiner_point_sample(t, &param).ok()?;
            let b = t.point_to_bary(&p);
            // spread samples over all three vertex roles
            let mut c = b.coords();
            c.rotate_left(rng.random_range(0..3));
            Bary::from_coords(&c).ok()?
        }
    };
    let flags = crate::triangle::classify_bary(&b);
    let ok = match stratum {
        Stratum::Generic => flags.is_empty(),
        Stratum::PInfinite => flags == DegeneracyClass::AT_INFINITY,
        Stratum::OnMedian => flags == DegeneracyClass::ON_MEDIAN,
        Stratum::OnSteiner => (flags & DegeneracyClass::FORBIDDEN).is_empty(),
    };
    ok.then_some(b)
}

/// Configuration number `index` of the stream for `seed`. Each index draws
/// from its own ChaCha stream, so the result does not depend on how many
/// other configurations are sampled.
pub fn sample_configuration(seed: u64, index: usize, stratum: Stratum) -> Result<Configuration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    for _ in 0..RETRY_BUDGET {
        let t = random_triangle(&mut rng);
        let Some(b) = candidate(&mut rng, &t, stratum) else {
            continue;
        };
        if let Ok(cfg) = build_configuration(&t, &t.bary_to_point(&b)) {
            return Ok(cfg.with_fingerprint(seed, index));
        }
    }
    Err(GeometryError::SamplerExhausted)
}

pub fn sample_configurations(seed: u64, n: usize, stratum: Stratum) -> Result<Vec<Configuration>> {
    (0..n)
        .map(|i| sample_configuration(seed, i, stratum))
        .collect()
}

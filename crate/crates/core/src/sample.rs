//! Seeded random generators for property checks.
//!
//! All randomness goes through [`Sampler`], a ChaCha8 stream, so every suite
//! is reproducible from its seed on any platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::simple::{Ball, Partition, SimpleFunction};
use crate::young::YoungFunction;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for suite `stream` under a user seed.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo.ln(), hi.ln()).exp()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// A Young function from one of the four families, chosen uniformly.
    pub fn young(&mut self) -> YoungFunction {
        match self.index(4) {
            0 => YoungFunction::power(self.uniform(1.0, 8.0)).unwrap(),
            1 => {
                let t0 = if self.chance(0.2) {
                    0.0
                } else {
                    self.log_uniform(1e-2, 2.0)
                };
                YoungFunction::hinge(self.log_uniform(0.1, 10.0), t0).unwrap()
            }
            2 => YoungFunction::exp_power(self.uniform(1.0, 3.0)).unwrap(),
            _ => self.piecewise_linear(),
        }
    }

    fn piecewise_linear(&mut self) -> YoungFunction {
        let segments = 1 + self.index(4);
        let mut slopes: Vec<f64> = (0..segments)
            .map(|_| {
                if self.chance(0.2) {
                    0.0
                } else {
                    self.log_uniform(0.05, 5.0)
                }
            })
            .collect();
        slopes.sort_by(f64::total_cmp);
        if slopes[segments - 1] == 0.0 {
            slopes[segments - 1] = 1.0;
        }
        let mut knots = vec![(0.0, 0.0)];
        for slope in slopes {
            let (t, y) = *knots.last().unwrap();
            let width = self.log_uniform(0.05, 2.0);
            knots.push((t + width, y + slope * width));
        }
        YoungFunction::piecewise_linear(knots).unwrap()
    }

    pub fn partition(&mut self, max_cells: usize) -> Partition {
        let cells = 1 + self.index(max_cells);
        Partition::new((0..cells).map(|_| self.log_uniform(1e-3, 1e3)).collect()).unwrap()
    }

    /// Values log-uniform in `[1e-3, 1e3]`; each cell is zero with probability `zero_prob`.
    pub fn function_on(&mut self, partition: &Partition, zero_prob: f64) -> SimpleFunction {
        let values = (0..partition.len())
            .map(|_| {
                if self.chance(zero_prob) {
                    0.0
                } else {
                    self.log_uniform(1e-3, 1e3)
                }
            })
            .collect();
        SimpleFunction::on(partition.clone(), values).unwrap()
    }

    /// A nonzero function on 1 to 8 cells.
    pub fn simple_function(&mut self) -> SimpleFunction {
        let partition = self.partition(8);
        loop {
            let f = self.function_on(&partition, 0.1);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// `m` functions on one shared partition of 1 to 8 cells. Trial numbers
    /// `0 mod 25` include a zero factor and `1 mod 25` are indicators of one
    /// common cell set.
    pub fn tuple(&mut self, m: usize, trial: usize) -> Vec<SimpleFunction> {
        let partition = self.partition(8);
        match trial % 25 {
            0 => {
                let zero_at = self.index(m);
                (0..m)
                    .map(|i| {
                        if i == zero_at {
                            SimpleFunction::zero(partition.clone())
                        } else {
                            self.function_on(&partition, 0.1)
                        }
                    })
                    .collect()
            }
            1 => {
                let mut cells: Vec<usize> = (0..partition.len()).filter(|_| self.chance(0.5)).collect();
                if cells.is_empty() {
                    cells.push(0);
                }
                let chi = SimpleFunction::indicator(partition, &cells).unwrap();
                vec![chi; m]
            }
            _ => (0..m).map(|_| self.function_on(&partition, 0.1)).collect(),
        }
    }

    /// Ball with `n ∈ {1, 2, 3}` and radius log-uniform in `[1e-2, 1e2]`.
    pub fn ball(&mut self) -> Ball {
        let n = 1 + self.index(3) as u32;
        Ball::new(n, self.log_uniform(1e-2, 1e2)).unwrap()
    }
}

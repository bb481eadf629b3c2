use serde::Serialize;

use crate::error::{Error, Result};
use crate::temporal::DensityReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Total {
    Exact(usize),
    AtLeast(usize),
}

impl Total {
    pub fn admits(&self, t: usize) -> bool {
        match *self {
            Total::Exact(x) => t == x,
            Total::AtLeast(x) => t >= x,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub n: usize,
    pub total: Total,
    pub temporality: usize,
}

impl Prediction {
    pub fn matches(&self, r: &DensityReport) -> bool {
        r.n == self.n && self.total.admits(r.total) && r.temporality == self.temporality
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Trees { n: usize },
    Hypercube { d: usize },
    Adhoc { k: usize },
    HappyAdhoc { k: usize },
    Parity { n: usize },
    EvenCycle { n: usize },
    OddCycle { n: usize },
    Cactus { n: usize, c: usize },
}

impl Family {
    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Param(format!("`{name}` takes {k} parameter(s)")))
            }
        };
        let f = match name {
            "trees" => {
                want(1)?;
                Family::Trees { n: params[0] }
            }
            "hypercube" => {
                want(1)?;
                Family::Hypercube { d: params[0] }
            }
            "adhoc" => {
                want(1)?;
                Family::Adhoc { k: params[0] }
            }
            "happy-adhoc" => {
                want(1)?;
                Family::HappyAdhoc { k: params[0] }
            }
            "parity" => {
                want(1)?;
                Family::Parity { n: params[0] }
            }
            "cycles-even" => {
                want(1)?;
                Family::EvenCycle { n: params[0] }
            }
            "cycles-odd" => {
                want(1)?;
                Family::OddCycle { n: params[0] }
            }
            "cacti" => {
                want(2)?;
                Family::Cactus {
                    n: params[0],
                    c: params[1],
                }
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(f)
    }
}

pub(crate) fn generator_total(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ if n % 2 == 0 => n * n / 4 + 1,
        _ => (n * n + 3) / 4,
    }
}

pub fn predicted_density(f: Family) -> Prediction {
    match f {
        Family::Trees { n } => Prediction {
            n,
            total: Total::Exact(if n >= 2 { 2 * n - 3 } else { 0 }),
            temporality: match n {
                0 | 1 => 0,
                2 => 1,
                _ => 2,
            },
        },
        Family::Hypercube { d } => {
            let n = 1usize << d;
            Prediction {
                n,
                total: Total::Exact(n * d / 2),
                temporality: usize::from(d > 0),
            }
        }
        Family::Adhoc { k } => Prediction {
            n: 3 * k + 1,
            // k²/2 + 11k/2 − 3
            total: Total::Exact((k * k + 11 * k) / 2 - 3),
            temporality: k,
        },
        Family::HappyAdhoc { k } => Prediction {
            n: 3 * k + 2,
            // k²/2 + 13k/2 − 2
            total: Total::Exact((k * k + 13 * k) / 2 - 2),
            temporality: 1,
        },
        Family::Parity { n } => Prediction {
            n,
            total: Total::Exact(n * n / 4),
            temporality: n.div_ceil(4),
        },
        Family::EvenCycle { n } | Family::OddCycle { n } => Prediction {
            n,
            total: Total::Exact(generator_total(n)),
            temporality: n.div_ceil(2),
        },
        Family::Cactus { n, c } => {
            if c <= 2 {
                predicted_density(Family::Trees { n })
            } else {
                Prediction {
                    n,
                    total: Total::AtLeast((c * c).div_ceil(4) + 2 * (n - c)),
                    temporality: c.div_ceil(2).max(2),
                }
            }
        }
    }
}

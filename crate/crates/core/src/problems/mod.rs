//! The benchmark suite: SCH, FON, POL, KUR, ZDT1-4/6, DTLZ1-7 and UF1-10.
//!
//! Decision-space sizes follow the usual published defaults (ZDT 30/10
//! variables, DTLZ with three objectives and k = 5/10/20, UF with 30 variables).

mod classic;
mod dtlz;
mod front;
mod uf;
mod zdt;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::model::{Bounds, Problem};

pub use front::{
    analytic_front_with_preimages, brute_force_front, non_dominated_filter, read_front,
    read_front_file, sample_true_front, sample_true_front_in, write_front, FrontSample,
    FrontSource,
};

/// Identifier of one of the 26 built-in problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Benchmark {
    Sch,
    Fon,
    Pol,
    Kur,
    Zdt1,
    Zdt2,
    Zdt3,
    Zdt4,
    Zdt6,
    Dtlz1,
    Dtlz2,
    Dtlz3,
    Dtlz4,
    Dtlz5,
    Dtlz6,
    Dtlz7,
    Uf1,
    Uf2,
    Uf3,
    Uf4,
    Uf5,
    Uf6,
    Uf7,
    Uf8,
    Uf9,
    Uf10,
}

impl Benchmark {
    pub const ALL: [Benchmark; 26] = [
        Benchmark::Sch,
        Benchmark::Fon,
        Benchmark::Pol,
        Benchmark::Kur,
        Benchmark::Zdt1,
        Benchmark::Zdt2,
        Benchmark::Zdt3,
        Benchmark::Zdt4,
        Benchmark::Zdt6,
        Benchmark::Dtlz1,
        Benchmark::Dtlz2,
        Benchmark::Dtlz3,
        Benchmark::Dtlz4,
        Benchmark::Dtlz5,
        Benchmark::Dtlz6,
        Benchmark::Dtlz7,
        Benchmark::Uf1,
        Benchmark::Uf2,
        Benchmark::Uf3,
        Benchmark::Uf4,
        Benchmark::Uf5,
        Benchmark::Uf6,
        Benchmark::Uf7,
        Benchmark::Uf8,
        Benchmark::Uf9,
        Benchmark::Uf10,
    ];

    pub fn name(self) -> &'static str {
        use Benchmark::*;
        match self {
            Sch => "SCH",
            Fon => "FON",
            Pol => "POL",
            Kur => "KUR",
            Zdt1 => "ZDT1",
            Zdt2 => "ZDT2",
            Zdt3 => "ZDT3",
            Zdt4 => "ZDT4",
            Zdt6 => "ZDT6",
            Dtlz1 => "DTLZ1",
            Dtlz2 => "DTLZ2",
            Dtlz3 => "DTLZ3",
            Dtlz4 => "DTLZ4",
            Dtlz5 => "DTLZ5",
            Dtlz6 => "DTLZ6",
            Dtlz7 => "DTLZ7",
            Uf1 => "UF1",
            Uf2 => "UF2",
            Uf3 => "UF3",
            Uf4 => "UF4",
            Uf5 => "UF5",
            Uf6 => "UF6",
            Uf7 => "UF7",
            Uf8 => "UF8",
            Uf9 => "UF9",
            Uf10 => "UF10",
        }
    }

    pub fn supported_names() -> Vec<&'static str> {
        Self::ALL.iter().map(|b| b.name()).collect()
    }

    pub fn n_vars(self) -> usize {
        use Benchmark::*;
        match self {
            Sch => 1,
            Fon => 3,
            Pol => 2,
            Kur => 3,
            Zdt1 | Zdt2 | Zdt3 => 30,
            Zdt4 | Zdt6 => 10,
            Dtlz1 => 3 - 1 + 5,
            Dtlz2 | Dtlz3 | Dtlz4 | Dtlz5 | Dtlz6 => 3 - 1 + 10,
            Dtlz7 => 3 - 1 + 20,
            _ => 30,
        }
    }

    pub fn n_objectives(self) -> usize {
        use Benchmark::*;
        match self {
            Dtlz1 | Dtlz2 | Dtlz3 | Dtlz4 | Dtlz5 | Dtlz6 | Dtlz7 | Uf8 | Uf9 | Uf10 => 3,
            _ => 2,
        }
    }

    /// POL and KUR have no closed-form front and ship a precomputed reference.
    pub fn has_analytic_front(self) -> bool {
        !matches!(self, Benchmark::Pol | Benchmark::Kur)
    }

    pub fn bounds(self) -> Bounds {
        use Benchmark::*;
        let n = self.n_vars();
        let (lower, upper): (Vec<f64>, Vec<f64>) = match self {
            Sch => (vec![-1e3], vec![1e3]),
            Fon => (vec![-4.0; n], vec![4.0; n]),
            Pol => (
                vec![-std::f64::consts::PI; n],
                vec![std::f64::consts::PI; n],
            ),
            Kur => (vec![-5.0; n], vec![5.0; n]),
            Zdt4 => head_tail(n, 1, (0.0, 1.0), (-5.0, 5.0)),
            Uf1 | Uf2 | Uf5 | Uf6 | Uf7 => head_tail(n, 1, (0.0, 1.0), (-1.0, 1.0)),
            Uf4 => head_tail(n, 1, (0.0, 1.0), (-2.0, 2.0)),
            Uf8 | Uf9 | Uf10 => head_tail(n, 2, (0.0, 1.0), (-2.0, 2.0)),
            _ => (vec![0.0; n], vec![1.0; n]),
        };
        Bounds::new(lower, upper).expect("built-in bounds are valid")
    }

    /// Raw objective function; `x` must have `n_vars()` components.
    pub fn objectives(self, x: &[f64]) -> Vec<f64> {
        use Benchmark::*;
        match self {
            Sch => classic::sch(x),
            Fon => classic::fon(x),
            Pol => classic::pol(x),
            Kur => classic::kur(x),
            Zdt1 => zdt::zdt1(x),
            Zdt2 => zdt::zdt2(x),
            Zdt3 => zdt::zdt3(x),
            Zdt4 => zdt::zdt4(x),
            Zdt6 => zdt::zdt6(x),
            Dtlz1 => dtlz::dtlz1(x),
            Dtlz2 => dtlz::dtlz2(x),
            Dtlz3 => dtlz::dtlz3(x),
            Dtlz4 => dtlz::dtlz4(x),
            Dtlz5 => dtlz::dtlz5(x),
            Dtlz6 => dtlz::dtlz6(x),
            Dtlz7 => dtlz::dtlz7(x),
            Uf1 => uf::uf1(x),
            Uf2 => uf::uf2(x),
            Uf3 => uf::uf3(x),
            Uf4 => uf::uf4(x),
            Uf5 => uf::uf5(x),
            Uf6 => uf::uf6(x),
            Uf7 => uf::uf7(x),
            Uf8 => uf::uf8(x),
            Uf9 => uf::uf9(x),
            Uf10 => uf::uf10(x),
        }
    }
}

fn head_tail(n: usize, head: usize, h: (f64, f64), t: (f64, f64)) -> (Vec<f64>, Vec<f64>) {
    let lower = (0..n).map(|i| if i < head { h.0 } else { t.0 }).collect();
    let upper = (0..n).map(|i| if i < head { h.1 } else { t.1 }).collect();
    (lower, upper)
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Benchmark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        Self::ALL
            .iter()
            .copied()
            .find(|b| b.name() == wanted)
            .ok_or_else(|| {
                usage(format!(
                    "unknown problem '{s}'; supported: {}",
                    Self::supported_names().join(", ")
                ))
            })
    }
}

/// A fully described benchmark problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub benchmark: Benchmark,
    pub name: String,
    pub n_vars: usize,
    pub n_objectives: usize,
    pub bounds: Bounds,
    pub has_analytic_front: bool,
}

impl From<Benchmark> for ProblemSpec {
    fn from(b: Benchmark) -> Self {
        Self {
            benchmark: b,
            name: b.name().to_string(),
            n_vars: b.n_vars(),
            n_objectives: b.n_objectives(),
            bounds: b.bounds(),
            has_analytic_front: b.has_analytic_front(),
        }
    }
}

impl Problem for ProblemSpec {
    fn name(&self) -> &str {
        &self.name
    }

    fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    fn n_objectives(&self) -> usize {
        self.n_objectives
    }

    fn objectives(&self, x: &[f64]) -> Vec<f64> {
        self.benchmark.objectives(x)
    }
}

/// Looks up a built-in problem by (case-insensitive) name.
pub fn make_problem(name: &str) -> Result<ProblemSpec> {
    name.parse::<Benchmark>().map(ProblemSpec::from)
}

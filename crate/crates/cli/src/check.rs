//! The `check` subcommand: one test per orbit, run in parallel, reported in
//! enumeration order.

use std::fmt::Write as _;

use kquiver::engine::{check_alternating, cohomological_part, quiver_coefficients, table_for_pair};
use kquiver::oracle_a3::{inbound_table, outbound_table, A3OrbitMults};
use kquiver::quiver::{OrbitSpec, Quiver};
use kquiver::resolution::{full_pair, minimal_pair};
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::{sorted_terms, OrbitFile};
use crate::{CliError, Suite};

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub orbit: OrbitFile,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict} {:?}: {} orbits checked, {} failures",
            self.suite,
            self.checked,
            self.failures.len()
        );
        for f in &self.failures {
            let _ = writeln!(out, "{}", serde_json::to_string(f).expect("plain data serializes"));
        }
        out
    }
}

#[derive(Clone, Copy)]
enum A3Orientation {
    Inbound,
    Outbound,
}

fn a3_orientation(q: &Quiver) -> Option<A3Orientation> {
    let mut arrows = q.arrows().to_vec();
    arrows.sort_unstable();
    let same = |other: Quiver| {
        let mut a = other.arrows().to_vec();
        a.sort_unstable();
        a == arrows
    };
    if same(Quiver::inbound_a3()) {
        Some(A3Orientation::Inbound)
    } else if same(Quiver::outbound_a3()) {
        Some(A3Orientation::Outbound)
    } else {
        None
    }
}

/// Every dimension vector with entries in `0..=max`.
fn dimension_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_one(
    q: &Quiver,
    suite: Suite,
    orbit: &OrbitSpec,
    a3: Option<A3Orientation>,
) -> Result<Option<String>, CliError> {
    let e = orbit.dim();
    Ok(match suite {
        Suite::Signs => {
            let t = quiver_coefficients(q, e, orbit)?;
            check_alternating(&t)
                .first()
                .map(|v| format!("coefficient {} at degree {} for {:?} (codim {})", v.coeff, v.degree, v.key, t.codim))
        }
        Suite::Codim => {
            let t = quiver_coefficients(q, e, orbit)?;
            (t.tensor.min_degree() != Some(t.codim))
                .then(|| format!("lowest degree {:?}, codim {}", t.tensor.min_degree(), t.codim))
        }
        Suite::OracleA3 => {
            let m = A3OrbitMults::from_orbit(orbit)?;
            let oracle = match a3.expect("orientation checked before the run") {
                A3Orientation::Inbound => inbound_table(&m)?,
                A3Orientation::Outbound => outbound_table(&m)?,
            };
            let t = quiver_coefficients(q, e, orbit)?;
            (t.tensor != oracle).then(|| {
                let mut diff = t.tensor.clone();
                diff.add_scaled(&oracle, -1);
                format!(
                    "engine {} terms, oracle {} terms; first differences {:?}",
                    t.tensor.len(),
                    oracle.len(),
                    sorted_terms(&diff).into_iter().take(3).collect::<Vec<_>>()
                )
            })
        }
        Suite::Independence => {
            let (p1, p2) = (minimal_pair(q, orbit)?, full_pair(q, orbit)?);
            if p1 == p2 {
                return Ok(None);
            }
            let t1 = table_for_pair(q, e, orbit, p1)?;
            let t2 = table_for_pair(q, e, orbit, p2)?;
            // outside type A only the cohomological slice is known to agree
            let same =
                if q.is_type_a() { t1.tensor == t2.tensor } else { cohomological_part(&t1) == cohomological_part(&t2) };
            (!same || t1.codim != t2.codim).then(|| {
                format!(
                    "pairs {:?}/{:?} and {:?}/{:?} disagree",
                    t1.pair.vertices(),
                    t1.pair.ranks(),
                    t2.pair.vertices(),
                    t2.pair.ranks()
                )
            })
        }
    })
}

/// Runs `suite` on every orbit of every dimension vector with entries at
/// most `max_dim`.
pub fn run_suite(q: &Quiver, suite: Suite, max_dim: usize) -> Result<Report, CliError> {
    if !q.is_dynkin() {
        return Err(kquiver::Error::NotDynkin.into());
    }
    let a3 = a3_orientation(q);
    if suite == Suite::OracleA3 && a3.is_none() {
        return Err(CliError::Usage("the oracle-a3 suite needs the quiver 1 -> 2 <- 3 or 1 <- 2 -> 3".into()));
    }
    let mut orbits = Vec::new();
    for e in dimension_vectors(q.num_vertices(), max_dim) {
        orbits.extend(q.orbits(&e)?);
    }
    let results: Vec<Result<Option<String>, CliError>> =
        orbits.par_iter().map(|o| check_one(q, suite, o, a3)).collect();
    let mut failures = Vec::new();
    for (orbit, result) in orbits.iter().zip(results) {
        if let Some(detail) = result? {
            failures.push(Failure { orbit: OrbitFile::from_orbit(orbit), detail });
        }
    }
    Ok(Report { suite, checked: orbits.len(), failures })
}

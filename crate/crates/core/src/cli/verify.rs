use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, Sign};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::CliError;
use crate::combinatorics::{
    enumerate_acyclic_orientations, orientation_of_permutation, partition_at_rl_minima, Graph, OrderedSetPartition,
    Permutation,
};
use crate::geometry::{
    braid_generic_point, good_face_min_criterion, graphical_generic_point, is_good_face, lrmax_generic_point,
    pava_chain_projection, GraphicalFace, RegionProjector,
};
use crate::nui::{
    c_vector, enumerate_g_local_minima, is_nui, nui_from_c_vector, nui_projection_check, plus_product,
    product_char_poly, rlmin_generating_sum, CVector,
};
use crate::polynomial::{
    chromatic_by_counting, chromatic_deletion_contraction, gz_coefficient_check, mobius_char_poly,
    region_count_check, IntPolynomial,
};

pub const MAX_N_ENV: &str = "ARRANGEPROJ_MAX_N";
pub const DEFAULT_CEILING: usize = 6;
pub const EXHAUSTIVE_ALL_GRAPHS_CEILING: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    AllGraphs,
    Nui,
    Braid,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::AllGraphs => "all-graphs",
            Family::Nui => "nui",
            Family::Braid => "braid",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Family::AllGraphs, Family::Nui, Family::Braid]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown family {s:?}; expected all-graphs|nui|braid")))
    }
}

/// Largest `max_n` accepted for `family`. A positive integer in
/// `ARRANGEPROJ_MAX_N` replaces every ceiling.
pub fn ceiling(family: Family) -> Result<usize, CliError> {
    match std::env::var(MAX_N_ENV) {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| CliError::Usage(format!("{MAX_N_ENV} must be a positive integer, got {text:?}"))),
        Err(_) => Ok(match family {
            Family::AllGraphs => EXHAUSTIVE_ALL_GRAPHS_CEILING,
            Family::Nui | Family::Braid => DEFAULT_CEILING,
        }),
    }
}

fn general_ceiling() -> Result<usize, CliError> {
    ceiling(Family::Braid)
}

/// Outcome of one named check over a family of instances.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    /// First failing instance; `None` exactly when the check passed.
    pub counterexample: Option<String>,
    pub wall_time: Duration,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Wall time is left out: two runs with the same inputs compare equal.
impl PartialEq for CheckResult {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.instances == other.instances && self.counterexample == other.counterexample
    }
}

impl Eq for CheckResult {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: Family,
    pub max_n: usize,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    fn write(&self, f: &mut impl fmt::Write, timings: bool) -> fmt::Result {
        writeln!(f, "verify family={} max_n={} seed={} samples={}", self.family, self.max_n, self.seed, self.samples)?;
        for c in &self.checks {
            write!(f, "{} {} instances={}", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.instances)?;
            if timings {
                write!(f, " time={:.3}s", c.wall_time.as_secs_f64())?;
            }
            if let Some(ce) = &c.counterexample {
                write!(f, " counterexample: {ce}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }

    /// The report without wall times, stable across runs.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, false).expect("writing to a String");
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, true)
    }
}

/// Counts instances and keeps the first failure.
#[derive(Debug, Default)]
struct Tally {
    instances: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }
}

fn run_check<T>(name: &str, instances: &[T], mut body: impl FnMut(&T, &mut Tally)) -> CheckResult {
    let start = Instant::now();
    let mut tally = Tally::default();
    for instance in instances {
        body(instance, &mut tally);
    }
    CheckResult {
        name: name.to_string(),
        instances: tally.instances,
        counterexample: tally.counterexample,
        wall_time: start.elapsed(),
    }
}

/// Runs every check of `family` up to `max_n`.
///
/// * `all-graphs`: every graph on exactly `max_n` vertices, plus `samples`
///   random graphs (edge probability 1/2) alternating between `max_n + 1`
///   and `max_n + 2` vertices, capped at the general ceiling.
/// * `braid`: the complete graph on `n` vertices for `n = 1..=max_n`.
/// * `nui`: every valid c-vector of length `n = 1..=max_n`.
pub fn cmd_verify(family: Family, max_n: usize, seed: u64, samples: usize) -> Result<VerificationReport, CliError> {
    let limit = ceiling(family)?;
    if max_n == 0 || max_n > limit {
        return Err(CliError::CeilingExceeded { family: family.name().to_string(), max_n, ceiling: limit });
    }
    let checks = match family {
        Family::AllGraphs => verify_graphs(&family_graphs(max_n, seed, samples, general_ceiling()?)),
        Family::Braid => verify_braid(max_n),
        Family::Nui => verify_nui(max_n),
    };
    Ok(VerificationReport { family, max_n, seed, samples, checks })
}

fn family_graphs(max_n: usize, seed: u64, samples: usize, cap: usize) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Graph::all(max_n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let n = (max_n + 1 + s % 2).min(cap.max(max_n));
        graphs.push(Graph::random(n, &mut rng));
    }
    graphs
}

fn at_region(g: &Graph, region: &impl fmt::Display) -> String {
    format!("graph {g} region {region}")
}

/// Coefficient signs alternate and the polynomial is monic of degree `n`.
fn alternates(p: &IntPolynomial, n: usize) -> bool {
    p.degree() == Some(n)
        && p.is_monic()
        && p.coeffs().iter().enumerate().all(|(k, c)| {
            let expected = if (n - k).is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
            c.sign() == Sign::NoSign || c.sign() == expected
        })
}

pub(crate) fn verify_graphs(graphs: &[Graph]) -> Vec<CheckResult> {
    vec![
        run_check("method-agreement", graphs, |g, t| {
            let v = graphical_generic_point(g.n());
            let chromatic = chromatic_deletion_contraction(g);
            let mobius = mobius_char_poly(g);
            let projection = crate::geometry::char_poly_via_projection(g, &v);
            t.record(projection.as_ref() == Ok(&chromatic) && mobius == chromatic, || {
                format!("graph {g}: chromatic {chromatic}, mobius {mobius}, projection {projection:?}")
            });
        }),
        run_check("chromatic-vs-counting", graphs, |g, t| {
            let p = chromatic_deletion_contraction(g);
            let bad = (0..=g.n() + 1).find(|&q| p.eval(&BigInt::from(q)) != BigInt::from(chromatic_by_counting(g, q)));
            t.record(bad.is_none(), || format!("graph {g} at q={}", bad.unwrap_or_default()));
        }),
        run_check("alternating-signs", graphs, |g, t| {
            let p = chromatic_deletion_contraction(g);
            t.record(alternates(&p, g.n()), || format!("graph {g}: {p}"));
        }),
        run_check("region-count", graphs, |g, t| {
            t.record(region_count_check(g), || format!("graph {g}"));
        }),
        run_check("source-component-coefficients", graphs, |g, t| {
            let report = gz_coefficient_check(g);
            t.record(report.holds, || format!("graph {g}: counts {:?}", report.counts));
        }),
        run_check("closed-form-vs-oracle", graphs, |g, t| {
            let projector = RegionProjector::new(g, graphical_generic_point(g.n())).expect("dimensions match");
            for gamma in enumerate_acyclic_orientations(g) {
                let closed = projector.closed_form(&gamma);
                let oracle = projector.oracle(&gamma);
                let ok = match (&closed, &oracle) {
                    (Ok(c), Ok(o)) => c == o && c.pd == gamma.source_components().block_count(),
                    _ => false,
                };
                t.record(ok, || format!("{}: closed {closed:?}, oracle {oracle:?}", at_region(g, &gamma)));
            }
        }),
        run_check("good-face-bounds", graphs, |g, t| {
            let projector = RegionProjector::new(g, graphical_generic_point(g.n())).expect("dimensions match");
            for gamma in enumerate_acyclic_orientations(g) {
                let bounds = projector.good_face_bounds(&gamma);
                t.record(bounds.holds(), || format!("{}: {bounds:?}", at_region(g, &gamma)));
            }
        }),
    ]
}

pub(crate) fn verify_braid(max_n: usize) -> Vec<CheckResult> {
    let sizes: Vec<usize> = (1..=max_n).collect();
    vec![
        run_check("braid-rlmin", &sizes, |&n, t| {
            let kn = Graph::complete(n);
            let projector = RegionProjector::new(&kn, braid_generic_point(n)).expect("dimensions match");
            for sigma in Permutation::all(n) {
                let gamma = orientation_of_permutation(&kn, &sigma);
                let result = projector.oracle(&gamma);
                let ok = result.as_ref().is_ok_and(|r| {
                    r.pd == sigma.rl_min().count && r.face.ordered_partition() == partition_at_rl_minima(&sigma)
                });
                t.record(ok, || format!("{}: {result:?}", at_region(&kn, &sigma)));
            }
        }),
        run_check("rlmin-source-components", &sizes, |&n, t| {
            let kn = Graph::complete(n);
            for sigma in Permutation::all(n) {
                let k = orientation_of_permutation(&kn, &sigma).source_components().block_count();
                t.record(k == sigma.rl_min().count, || at_region(&kn, &sigma));
            }
        }),
        run_check("pava-vs-oracle", &sizes, |&n, t| {
            let kn = Graph::complete(n);
            let v = braid_generic_point(n);
            let projector = RegionProjector::new(&kn, v.clone()).expect("dimensions match");
            for sigma in Permutation::all(n) {
                let oracle = projector.oracle(&orientation_of_permutation(&kn, &sigma));
                let pava = pava_chain_projection(&v, &sigma);
                t.record(oracle.as_ref().is_ok_and(|r| r.point == pava), || {
                    format!("{}: pava {pava}, oracle {oracle:?}", at_region(&kn, &sigma))
                });
            }
        }),
        run_check("lrmax", &sizes, |&n, t| {
            let kn = Graph::complete(n);
            let projector = RegionProjector::new(&kn, lrmax_generic_point(n)).expect("dimensions match");
            for sigma in Permutation::all(n) {
                let result = projector.oracle(&orientation_of_permutation(&kn, &sigma));
                t.record(result.as_ref().is_ok_and(|r| r.pd == sigma.lr_max()), || {
                    format!("{}: {result:?}", at_region(&kn, &sigma))
                });
            }
        }),
        run_check("good-face-min-criterion", &sizes, |&n, t| {
            let kn = Graph::complete(n);
            let v = braid_generic_point(n);
            for pi in OrderedSetPartition::all(n) {
                let face = GraphicalFace::from_ordered(&kn, &pi).expect("every block is connected in K_n");
                t.record(good_face_min_criterion(&pi) == is_good_face(&kn, &v, &face), || format!("n={n} face {pi}"));
            }
        }),
    ]
}

pub(crate) fn verify_nui(max_n: usize) -> Vec<CheckResult> {
    let cvectors: Vec<CVector> = (1..=max_n).flat_map(CVector::all).collect();
    let sizes: Vec<usize> = (1..=max_n).collect();
    vec![
        run_check("nui-enumeration", &sizes, |&n, t| {
            let filtered = Graph::all(n).filter(is_nui).count();
            let expected = CVector::all(n).len();
            t.record(filtered == expected, || format!("n={n}: {filtered} graphs pass the closure test, {expected} c-vectors"));
        }),
        run_check("c-vector-round-trip", &cvectors, |c, t| {
            let g = nui_from_c_vector(c);
            t.record(is_nui(&g) && c_vector(&g).as_ref() == Ok(c), || format!("c-vector {c}"));
        }),
        run_check("product-formula", &cvectors, |c, t| {
            let g = nui_from_c_vector(c);
            let product = product_char_poly(c);
            t.record(product == chromatic_deletion_contraction(&g) && product == mobius_char_poly(&g), || {
                format!("c-vector {c}: product {product}")
            });
        }),
        run_check("rlmin-generating-sum", &cvectors, |c, t| {
            let sum = rlmin_generating_sum(&nui_from_c_vector(c));
            t.record(sum.as_ref() == Ok(&plus_product(c)), || format!("c-vector {c}: {sum:?}"));
        }),
        run_check("sign-bridge", &cvectors, |c, t| {
            let signed = product_char_poly(c).compose_neg();
            let signed = if c.n() % 2 == 0 { signed } else { -&signed };
            let sum = rlmin_generating_sum(&nui_from_c_vector(c));
            t.record(sum.as_ref() == Ok(&signed), || format!("c-vector {c}"));
        }),
        run_check("local-minimum-is-lex-min", &cvectors, |c, t| {
            let g = nui_from_c_vector(c);
            let minima = enumerate_g_local_minima(&g).expect("graph is natural unit interval");
            for gamma in enumerate_acyclic_orientations(&g) {
                let local: Vec<Permutation> =
                    gamma.linear_extensions().into_iter().filter(|s| minima.binary_search(s).is_ok()).collect();
                t.record(local == [gamma.lex_min_extension()], || {
                    format!("{}: local minima {local:?}", at_region(&g, &gamma))
                });
            }
        }),
        run_check("lex-min-projection", &cvectors, |c, t| {
            let g = nui_from_c_vector(c);
            match nui_projection_check(&g, &graphical_generic_point(c.n())) {
                Ok(report) => {
                    for region in &report.regions {
                        t.record(region.holds(), || format!("{}: {region:?}", at_region(&g, &region.orientation)));
                    }
                }
                Err(e) => t.record(false, || format!("graph {g}: {e}")),
            }
        }),
    ]
}

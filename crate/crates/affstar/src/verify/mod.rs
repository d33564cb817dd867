//! Verification suites: one per module layer plus an aggregate, each a
//! deterministic batch of identity checks with machine-readable reports.

pub mod checks;
pub mod config;
pub mod report;
pub mod tolerances;

use crate::verify::report::{CheckRecord, Report, ReportFormat};
use config::PartialConfig;
use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;
use tolerances as tol;

/// Reference grid sizes the tolerances were budgeted at. Runs below them
/// scale the affected tolerances by the 4th-order error model and mark the
/// checks informational.
const REF_GRID_Z: usize = 32;
const REF_GRID_W: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lie,
    Orbit,
    Moyal,
    Fourier,
    Representation,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lie => "lie",
            Suite::Orbit => "orbit",
            Suite::Moyal => "moyal",
            Suite::Fourier => "fourier",
            Suite::Representation => "representation",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lie" => Ok(Suite::Lie),
            "orbit" => Ok(Suite::Orbit),
            "moyal" => Ok(Suite::Moyal),
            "fourier" => Ok(Suite::Fourier),
            "representation" => Ok(Suite::Representation),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected lie|orbit|moyal|fourier|representation|all)"
            )),
        }
    }
}

/// Full configuration of a suite run. Fixed seed and config give
/// bit-identical random draws and, with timing capture disabled,
/// byte-identical reports.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Points per z/ξ axis of the 4-D pipeline grids; plane identity
    /// checks run at four times this resolution.
    pub grid_z: usize,
    /// Points per w axis of the 4-D pipeline grids.
    pub grid_w: usize,
    /// Star-product series cutoff.
    pub trunc: usize,
    /// Monodromy parameter used by the strip checks.
    pub theta: f64,
    pub out_dir: PathBuf,
    pub format: ReportFormat,
    pub tol_overrides: BTreeMap<String, f64>,
    /// Capture wall-clock timings in the report; disable for byte-identical
    /// report files.
    pub include_timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            grid_z: REF_GRID_Z,
            grid_w: REF_GRID_W,
            trunc: 20,
            theta: 0.25,
            out_dir: PathBuf::from("."),
            format: ReportFormat::Json,
            tol_overrides: BTreeMap::new(),
            include_timing: true,
        }
    }
}

impl SuiteConfig {
    pub fn apply(&mut self, partial: &PartialConfig) {
        if let Some(v) = partial.seed {
            self.seed = v;
        }
        if let Some(v) = partial.grid_z {
            self.grid_z = v;
        }
        if let Some(v) = partial.grid_w {
            self.grid_w = v;
        }
        if let Some(v) = partial.trunc {
            self.trunc = v;
        }
        if let Some(v) = partial.theta {
            self.theta = v;
        }
        if let Some(v) = &partial.out_dir {
            self.out_dir = v.clone();
        }
        if let Some(v) = partial.format {
            self.format = v;
        }
        if let Some(v) = partial.include_timing {
            self.include_timing = v;
        }
        for (k, v) in &partial.tol_overrides {
            self.tol_overrides.insert(k.clone(), *v);
        }
    }

    /// Tolerance multiplier of the 4th-order error model when the grid is
    /// coarser than the reference.
    fn grid_degradation(&self) -> f64 {
        let rz = (REF_GRID_Z as f64 / self.grid_z as f64).max(1.0);
        let rw = (REF_GRID_W as f64 / self.grid_w as f64).max(1.0);
        rz.max(rw).powi(4)
    }
}

struct Checker<'a> {
    cfg: &'a SuiteConfig,
    records: Vec<CheckRecord>,
}

impl<'a> Checker<'a> {
    fn new(cfg: &'a SuiteConfig) -> Self {
        Self {
            cfg,
            records: Vec::new(),
        }
    }

    fn run(&mut self, id: &str, desc: &str, base_tol: f64, f: impl FnOnce() -> f64) {
        self.run_inner(id, desc, base_tol, 1.0, f);
    }

    /// Grid-resolution-sensitive check: on degraded grids the tolerance is
    /// scaled and the record is marked informational rather than failing.
    fn run_grid(&mut self, id: &str, desc: &str, base_tol: f64, f: impl FnOnce() -> f64) {
        self.run_inner(id, desc, base_tol, self.cfg.grid_degradation(), f);
    }

    fn run_inner(
        &mut self,
        id: &str,
        desc: &str,
        base_tol: f64,
        degrade: f64,
        f: impl FnOnce() -> f64,
    ) {
        let mut id = id.to_string();
        let mut tol = base_tol;
        if degrade > 1.0 {
            tol *= degrade;
            id.push_str(":informational");
        }
        if let Some(over) = self.cfg.tol_overrides.get(&id) {
            tol = *over;
        }
        let start = Instant::now();
        let max_error = f();
        let ms = if self.cfg.include_timing {
            start.elapsed().as_secs_f64() * 1e3
        } else {
            0.0
        };
        self.records.push(CheckRecord {
            id,
            paper_ref: desc.to_string(),
            max_error,
            tol,
            pass: max_error <= tol,
            ms,
        });
    }
}

/// Run one suite (or all of them) under the given configuration.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut records = Vec::new();
    match suite {
        Suite::Lie => records.extend(lie_suite(cfg)),
        Suite::Orbit => records.extend(orbit_suite(cfg)),
        Suite::Moyal => records.extend(moyal_suite(cfg)),
        Suite::Fourier => records.extend(fourier_suite(cfg)),
        Suite::Representation => records.extend(representation_suite(cfg)),
        Suite::All => {
            records.extend(lie_suite(cfg));
            records.extend(orbit_suite(cfg));
            records.extend(moyal_suite(cfg));
            records.extend(fourier_suite(cfg));
            records.extend(representation_suite(cfg));
        }
    }
    Report::new(suite.name(), cfg.seed, records)
}

fn lie_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut c = Checker::new(cfg);
    let s = cfg.seed;
    c.run(
        "lie.bracket.antisymmetry",
        "bracket antisymmetry",
        tol::BRACKET_TOL,
        || checks::lie::bracket_antisymmetry(s, 10_000),
    );
    c.run(
        "lie.bracket.jacobi",
        "Jacobi identity of the bracket",
        tol::BRACKET_TOL,
        || checks::lie::bracket_jacobi(s, 10_000),
    );
    c.run(
        "lie.cover.associativity",
        "associativity of the cover product",
        tol::LIE_LAYER_TOL,
        || checks::lie::cover_associativity(s, 10_000),
    );
    c.run(
        "lie.cover.homomorphism",
        "covering projection is a homomorphism",
        tol::LIE_LAYER_TOL,
        || checks::lie::covering_homomorphism(s, 10_000),
    );
    c.run(
        "lie.exp.one_parameter",
        "exponential is a one-parameter subgroup",
        tol::LIE_LAYER_TOL,
        || checks::lie::one_parameter_subgroup(s, 10_000),
    );
    c.run(
        "lie.exp.phi1_branches",
        "series and direct phi1 branches agree",
        tol::PHI1_BRANCH_TOL,
        || checks::lie::phi1_branch_consistency(s, 2_000),
    );
    c.run(
        "lie.coadjoint.left_action",
        "coadjoint action composes as a left action",
        tol::LIE_LAYER_TOL,
        || checks::lie::coadjoint_left_action(s, 1_000),
    );
    c.records
}

fn orbit_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut c = Checker::new(cfg);
    let s = cfg.seed;
    c.run(
        "orbit.chart.round_trip",
        "sheet chart round trip",
        tol::CHART_ROUND_TRIP_TOL,
        || checks::orbit::chart_round_trip(s, 10_000),
    );
    c.run(
        "orbit.symplectic.matrix",
        "Poisson tensor antisymmetry and inverse",
        1e-15,
        checks::orbit::symplectic_matrix,
    );
    c.run
        ("orbit.poisson.antisymmetry",
        "Poisson bracket antisymmetry",
        tol::POISSON_TOL,
        || checks::orbit::poisson_antisymmetry(s, 300),
    );
    c.run(
        "orbit.poisson.leibniz",
        "Leibniz rule of the bracket",
        tol::POISSON_TOL,
        || checks::orbit::poisson_leibniz(s, 300),
    );
    c.run(
        "orbit.poisson.jacobi",
        "Jacobi identity of the bracket",
        tol::POISSON_TOL,
        || checks::orbit::poisson_jacobi(s, 300),
    );
    c.run(
        "orbit.poisson.real_contraction",
        "complex expansion equals the tensor contraction",
        tol::POISSON_TOL,
        || checks::orbit::poisson_real_contraction(s, 300),
    );
    c.run(
        "orbit.hamiltonian.linearity",
        "Hamiltonian symbol is real-linear",
        tol::PAIRING_TOL,
        || checks::orbit::hamiltonian_linearity(s, 1_000),
    );
    c.run(
        "orbit.hamiltonian.trace_pairing",
        "dual pairing equals the matrix-trace pairing",
        tol::PAIRING_TOL,
        || checks::orbit::trace_pairing_agreement(s, 1_000),
    );
    c.run(
        "orbit.kirillov.identity",
        "symplectic pairing equals the bracket Hamiltonian",
        tol::KIRILLOV_IDENTITY_TOL,
        || checks::orbit::kirillov_identity(s, 1_000),
    );
    c.run(
        "orbit.kirillov.finite_difference",
        "finite-difference symplectic pairing",
        tol::KIRILLOV_FD_TOL,
        || checks::orbit::kirillov_finite_difference(s, 200),
    );
    c.run(
        "orbit.coadjoint.fixed_points",
        "zero Y*-part functionals are fixed",
        tol::FIXED_POINT_TOL,
        || checks::orbit::coadjoint_fixed_points(s, 10_000),
    );
    c.run(
        "orbit.coadjoint.open_orbit",
        "open-orbit invariant scales exactly",
        tol::ORBIT_INVARIANT_TOL,
        || checks::orbit::open_orbit_invariance(s, 10_000),
    );
    c.records
}

fn moyal_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut c = Checker::new(cfg);
    let s = cfg.seed;
    let r_max = cfg.trunc;
    c.run(
        "moyal.star.commutator_identity",
        "star commutator equals the bracket symbol",
        tol::STAR_COMMUTATOR_TOL,
        || checks::moyal::star_commutator_identity(s, 1_000),
    );
    c.run(
        "moyal.ell.operator_commutator",
        "left-multiplication operators represent the bracket",
        tol::OPERATOR_COMMUTATOR_TOL,
        move || checks::moyal::operator_commutator(s, 20, r_max),
    );
    c.run(
        "moyal.pr.swap_parity",
        "contraction parity under argument swap",
        tol::CONTRACTION_TOL,
        || checks::moyal::swap_parity(s, 100),
    );
    c.run(
        "moyal.pr.bilinearity",
        "contraction bilinearity",
        tol::CONTRACTION_TOL,
        || checks::moyal::bilinearity(s, 100),
    );
    c.run(
        "moyal.pr.hamiltonian_closed_form",
        "closed Hamiltonian form of the contraction",
        tol::CONTRACTION_TOL,
        || checks::moyal::hamiltonian_closed_form(s, 50),
    );
    c.run(
        "moyal.pr.routes_agree",
        "enumerated and multinomial contraction routes",
        tol::CONTRACTION_TOL,
        || checks::moyal::contraction_routes_agree(s, 30),
    );
    c.run(
        "moyal.star.unit",
        "constants are star units",
        tol::BRACKET_TOL,
        || checks::moyal::star_unit(s, 100),
    );
    c.run(
        "moyal.star.tail_bound",
        "series tail bound at the default cutoff",
        tol::TAIL_BOUND_TOL,
        move || checks::moyal::tail_bound(r_max.max(20), 4.0),
    );
    c.records
}

fn fourier_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut c = Checker::new(cfg);
    let s = cfg.seed;
    let n2d = 4 * cfg.grid_z;
    let (nz, nw) = (cfg.grid_z, cfg.grid_w);
    let r_max = cfg.trunc;
    c.run_grid(
        "fourier.transform.gaussian",
        "Gaussian is a transform fixed point",
        tol::TRANSFORM_IDENTITY_TOL,
        || checks::fourier::gaussian_fixed_point(n2d),
    );
    c.run_grid(
        "fourier.transform.round_trip",
        "inverse composed with forward is the identity",
        tol::TRANSFORM_ROUND_TRIP_TOL,
        || checks::fourier::round_trip(n2d),
    );
    c.run_grid(
        "fourier.transform.parseval",
        "discrete norm preservation",
        tol::TRANSFORM_ROUND_TRIP_TOL,
        || checks::fourier::parseval(n2d),
    );
    c.run_grid(
        "fourier.lemma.derivative_z",
        "z-derivatives become frequency multipliers",
        tol::TRANSFORM_IDENTITY_TOL,
        || checks::fourier::derivative_rule_z(n2d),
    );
    c.run_grid(
        "fourier.lemma.multiplication",
        "coordinate multiplication becomes a frequency derivative",
        tol::TRANSFORM_IDENTITY_TOL,
        || checks::fourier::multiplication_rule(n2d),
    );
    c.run_grid(
        "fourier.lemma.dw_commutes",
        "w-derivatives commute with the transform",
        tol::TRANSFORM_IDENTITY_TOL,
        || checks::fourier::dw_commutes(n2d),
    );
    for r in 0..=3u32 {
        c.run_grid(
            &format!("fourier.pr.pipeline_r{r}"),
            "transformed contraction pipeline vs closed form",
            tol::PIPELINE_TOL,
            || checks::fourier::pipeline_vs_closed(s, nz, nw, r),
        );
    }
    c.run_grid(
        "fourier.ell.conjugated_vs_closed",
        "conjugated operator resums to its closed form",
        tol::CONJUGATED_ELL_TOL,
        move || checks::fourier::conjugated_vs_closed(s, nz, nw, r_max),
    );
    c.run_grid(
        "fourier.ell.truncation_monotone",
        "truncation error decreases with the cutoff",
        tol::TRUNCATION_RATIO_TOL,
        || checks::fourier::truncation_monotone(s, nz, nw),
    );
    c.records
}

fn representation_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut c = Checker::new(cfg);
    let s = cfg.seed;
    let theta = cfg.theta;
    c.run(
        "rep.action.group_law",
        "strip action composes with winding phases",
        tol::GROUP_LAW_TOL,
        || checks::rep::group_law(s, theta, 10),
    );
    c.run(
        "rep.action.winding_consistency",
        "winding representatives act by the twist scalar",
        tol::WINDING_TOL,
        || checks::rep::winding_consistency(theta),
    );
    c.run(
        "rep.action.literal_oracle",
        "spectral action equals the literal formula",
        tol::ACTION_ORACLE_TOL,
        || checks::rep::literal_oracle(s, theta, 10),
    );
    c.run(
        "rep.character.homomorphism",
        "characters are multiplicative",
        tol::CHARACTER_TOL,
        || checks::rep::character_homomorphism(s, 10_000),
    );
    c.run(
        "rep.flow.unitarity",
        "flow preserves the discrete norm",
        tol::UNITARITY_TOL,
        || checks::rep::flow_unitarity(s, theta, 10),
    );
    c.run(
        "rep.flow.one_parameter",
        "flow composes over half times",
        tol::ONE_PARAMETER_TOL,
        || checks::rep::flow_one_parameter(s, theta, 5),
    );
    c.run(
        "rep.flow.modes_agree",
        "closed-form and quadrature phases agree",
        tol::FLOW_MODES_TOL,
        || checks::rep::flow_modes_agree(s, theta, 5, 1000),
    );
    c.run(
        "rep.flow.vs_group_action",
        "characteristic flow equals the group action",
        tol::FLOW_ACTION_SUP_TOL,
        || checks::rep::flow_vs_action(s, 20, &[0.0, 0.25, 0.618], 1000),
    );
    c.run(
        "rep.generator.first_order",
        "action differences converge to the generator",
        tol::FIRST_ORDER_RATIO_SLACK,
        || checks::rep::generator_first_order(theta),
    );
    c.run(
        "rep.generator.commutator",
        "generators represent the bracket on the strip",
        tol::GENERATOR_COMMUTATOR_TOL,
        || checks::rep::generator_commutator(s, theta, 5),
    );
    c.run_grid(
        "rep.ell.variable_change",
        "frequency-side operator in the logarithmic variable",
        tol::VARIABLE_CHANGE_TOL,
        || checks::rep::variable_change(s, cfg.grid_z, cfg.grid_w),
    );
    c.records
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Lie,
            Suite::Orbit,
            Suite::Moyal,
            Suite::Fourier,
            Suite::Representation,
            Suite::All,
        ] {
            assert_eq!(Suite::from_str(s.name()), Ok(s));
        }
        assert!(Suite::from_str("bogus").is_err());
    }

    #[test]
    fn lie_suite_passes_and_is_deterministic() {
        let cfg = SuiteConfig {
            include_timing: false,
            ..SuiteConfig::default()
        };
        let a = run_suite(Suite::Lie, &cfg);
        let b = run_suite(Suite::Lie, &cfg);
        assert!(a.all_pass(), "failures: {}", a.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn tolerance_override_applies() {
        let mut cfg = SuiteConfig {
            include_timing: false,
            ..SuiteConfig::default()
        };
        cfg.tol_overrides
            .insert("lie.bracket.jacobi".into(), 1e-30);
        let r = run_suite(Suite::Lie, &cfg);
        let rec = r
            .checks
            .iter()
            .find(|c| c.id == "lie.bracket.jacobi")
            .unwrap();
        assert_eq!(rec.tol, 1e-30);
        assert!(!rec.pass);
        assert_eq!(r.summary.fail, 1);
    }

    #[test]
    fn degraded_grid_marks_informational() {
        let cfg = SuiteConfig {
            grid_z: 16,
            grid_w: 16,
            include_timing: false,
            ..SuiteConfig::default()
        };
        let r = run_suite(Suite::Fourier, &cfg);
        assert!(r.checks.iter().all(|c| c.id.ends_with(":informational")));
        // The scaled tolerance keeps honest passes at the coarser grid.
        assert!(r.all_pass(), "failures: {}", r.to_text());
    }
}

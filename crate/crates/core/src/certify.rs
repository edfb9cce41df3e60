//! Hyperbolicity certificates for link complements in thickened surfaces.
//!
//! The verdict depends on the derived surface: the sphere uses the classical
//! criterion (non-split, prime, alternating, not a 2-braid), orientable surfaces
//! of positive genus use the fully-alternating-and-prime criterion, and
//! non-orientable surfaces of negative Euler characteristic are checked on the
//! base and on their orientable double cover, with primeness left as an
//! assumption. An optional ambient assertion extends the conclusion to the
//! complement in a hyperbolic 3-manifold containing the surface.

use serde::{Serialize, Serializer};

use crate::diagram::{find_nugatory, reduce, AlternationViolation, LinkDiagram, Nugatory};
use crate::error::{Error, Hypothesis, Result};
use crate::map::{orientable_double_cover, surface_info, trace_faces, DoubleCover, SurfaceInfo, SurfaceType, VertexId};
use crate::prime::{obviously_prime_unchecked, TwoCutCandidate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Citation {
    /// Prime fully alternating links in closed thickened surfaces are hyperbolic.
    MainTheorem,
    /// Fully alternating diagrams are prime iff obviously prime.
    PrimenessCriterion,
    /// Extension to surfaces essentially embedded in hyperbolic 3-manifolds.
    AmbientTheorem,
    /// I-bundles over surfaces of negative Euler characteristic.
    BundleLemma,
    /// The classical statement for alternating links in the 3-sphere.
    SphereCriterion,
}

impl Citation {
    pub fn as_str(self) -> &'static str {
        match self {
            Citation::MainTheorem => "Theorem 1",
            Citation::PrimenessCriterion => "Theorem 2",
            Citation::AmbientTheorem => "Theorem 3",
            Citation::BundleLemma => "Lemma 7",
            Citation::SphereCriterion => "Menasco",
        }
    }
}

impl std::fmt::Display for Citation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Citation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Connected,
    Alternating,
    Cellular,
    Reduced,
    ObviouslyPrime,
    TwoBraid,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Connected => "connected",
            Check::Alternating => "alternating",
            Check::Cellular => "cellular",
            Check::Reduced => "reduced",
            Check::ObviouslyPrime => "obviously_prime",
            Check::TwoBraid => "two_braid",
        }
    }
}

/// Evidence for a failed check, replayable with the operation that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Disconnected {
        components: Vec<Vec<VertexId>>,
    },
    NotAlternating {
        violation: AlternationViolation,
    },
    NotCellular {
        declared_euler_char: i64,
        derived: SurfaceInfo,
    },
    Nugatory {
        nugatory: Box<Nugatory>,
    },
    TwoCut {
        candidate: Box<TwoCutCandidate>,
    },
    TwoBraid {
        crossings: usize,
    },
    /// The check failed on the orientable double cover of the base.
    Cover {
        check: Check,
        witness: Box<Witness>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    Hyperbolic { citation: Citation },
    FailsHypothesis { check: Check, witness: Witness },
    NotCovered { reason: String },
    ConditionallyHyperbolic { assumptions: Vec<String>, citation: Citation },
}

/// Results of the checks in evaluation order; checks after the first failure,
/// and checks outside the branch, are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub connected: bool,
    pub alternating: Option<bool>,
    pub cellular: Option<bool>,
    pub reduced: Option<bool>,
    pub obviously_prime: Option<bool>,
    /// Only evaluated on the sphere.
    pub two_braid: Option<bool>,
    pub surface: SurfaceInfo,
    pub component_count: usize,
    pub reduced_crossing_count: usize,
}

/// User assertions about the ambient 3-manifold, recorded verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AmbientAssertion {
    pub assertions: Vec<String>,
}

impl AmbientAssertion {
    /// One assertion per non-empty line; `#` starts a comment.
    pub fn parse(text: &str) -> Self {
        let assertions = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_owned)
            .collect();
        AmbientAssertion { assertions }
    }

    pub fn standard() -> Self {
        AmbientAssertion {
            assertions: vec![
                "M is a finite-volume hyperbolic 3-manifold".into(),
                "S is a closed essential surface in M".into(),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub checks: Checks,
    pub verdict: Verdict,
    pub citations: Vec<Citation>,
    /// Conclusion about the complement in the ambient manifold, when asserted.
    pub ambient: Option<Verdict>,
}

impl Certificate {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self.verdict, Verdict::Hyperbolic { .. })
    }

    pub fn failed_check(&self) -> Option<Check> {
        match &self.verdict {
            Verdict::FailsHypothesis { check, .. } => Some(*check),
            _ => None,
        }
    }
}

/// Standard closure of the 2-braid with `n` crossings: `n` bigons in a cycle
/// and two `n`-gons, one component for odd `n` and two for even `n`.
pub fn detect_two_braid(diagram: &LinkDiagram) -> Result<bool> {
    let info = surface_info(diagram.map());
    if !info.is_sphere() {
        return Err(Error::PreconditionFailed(Hypothesis::Sphere));
    }
    if !diagram.is_alternating().alternating {
        return Err(Error::PreconditionFailed(Hypothesis::Alternating));
    }
    Ok(two_braid_census(diagram))
}

fn two_braid_census(diagram: &LinkDiagram) -> bool {
    let n = diagram.crossing_count();
    if n < 2 {
        return false;
    }
    let mut degrees = trace_faces(diagram.map()).degrees();
    degrees.sort_unstable();
    let mut expected = vec![2; n];
    expected.extend([n, n]);
    expected.sort_unstable();
    degrees == expected && diagram.components().len() == if n % 2 == 1 { 1 } else { 2 }
}

/// The diagram lifted to the orientable double cover of its surface; cover
/// crossing `k * V + v` lies over crossing `v` on sheet `k`. Sheet 1 carries the
/// reversed chart, in which the interval direction is reversed too, so its
/// over-strand is the other strand.
pub fn double_cover_diagram(diagram: &LinkDiagram) -> (DoubleCover, LinkDiagram) {
    let map = diagram.map();
    let cover = orientable_double_cover(map);
    let over = (0..2)
        .flat_map(|k| diagram.over_darts().iter().map(move |&d| (k, d)))
        .map(|(k, d)| if k == 0 { cover.lift(d, 0) } else { cover.lift(map.next(d), 1) })
        .collect();
    let lifted = LinkDiagram::new(cover.map.clone(), over).expect("lift of a diagram is a diagram");
    (cover, lifted)
}

struct Run {
    checks: Checks,
    failure: Option<(Check, Witness)>,
}

impl Run {
    fn new(diagram: &LinkDiagram) -> Self {
        let map = diagram.map();
        Run {
            checks: Checks {
                connected: map.is_connected(),
                alternating: None,
                cellular: None,
                reduced: None,
                obviously_prime: None,
                two_braid: None,
                surface: surface_info(map),
                component_count: diagram.components().len(),
                reduced_crossing_count: reduce(diagram).crossing_count(),
            },
            failure: None,
        }
    }

    fn fail(&mut self, check: Check, witness: Witness) {
        if self.failure.is_none() {
            self.failure = Some((check, witness));
        }
    }

    /// Connected, alternating, cellular, reduced, obviously prime, in order.
    fn common(&mut self, diagram: &LinkDiagram, declared: Option<SurfaceType>) {
        let map = diagram.map();
        self.checks.connected = map.is_connected();
        if !self.checks.connected {
            return self.fail(Check::Connected, Witness::Disconnected { components: map.components() });
        }
        let alt = diagram.is_alternating();
        self.checks.alternating = Some(alt.alternating);
        if let Some(violation) = alt.violation {
            return self.fail(Check::Alternating, Witness::NotAlternating { violation });
        }
        let surface = self.checks.surface;
        let cellular = declared.is_none_or(|d| d == surface.surface_type());
        self.checks.cellular = Some(cellular);
        if !cellular {
            let declared_euler_char = declared.map_or(surface.euler_char, SurfaceType::euler_char);
            return self.fail(Check::Cellular, Witness::NotCellular { declared_euler_char, derived: surface });
        }
        let nugatory = find_nugatory(diagram);
        self.checks.reduced = Some(nugatory.is_empty());
        if let Some(n) = nugatory.into_iter().next() {
            return self.fail(Check::Reduced, Witness::Nugatory { nugatory: Box::new(n) });
        }
        let prime = obviously_prime_unchecked(diagram);
        self.checks.obviously_prime = Some(prime.obviously_prime);
        if let Some(w) = prime.witness {
            self.fail(Check::ObviouslyPrime, Witness::TwoCut { candidate: Box::new(w) });
        }
    }
}

/// Runs every check of the branch selected by the derived surface and returns
/// the verdict with its citations. Hypothesis failures are verdicts, not errors.
pub fn certify(
    diagram: &LinkDiagram,
    declared: Option<SurfaceType>,
    ambient: Option<&AmbientAssertion>,
) -> Certificate {
    let mut run = Run::new(diagram);
    let surface = run.checks.surface;
    let mut citations = Vec::new();
    let mut ambient_verdict = None;

    let verdict = if surface.components > 1 {
        run.common(diagram, declared);
        let (check, witness) = run.failure.take().expect("disconnected diagrams fail the first check");
        Verdict::FailsHypothesis { check, witness }
    } else if surface.is_sphere() {
        run.common(diagram, declared);
        if run.failure.is_none() {
            let braid = two_braid_census(diagram);
            run.checks.two_braid = Some(braid);
            if braid {
                run.fail(Check::TwoBraid, Witness::TwoBraid { crossings: diagram.crossing_count() });
            }
        }
        citations.push(Citation::SphereCriterion);
        match run.failure.take() {
            Some((check, witness)) => Verdict::FailsHypothesis { check, witness },
            None => Verdict::Hyperbolic { citation: Citation::SphereCriterion },
        }
    } else if surface.orientable {
        run.common(diagram, declared);
        citations.extend([Citation::MainTheorem, Citation::PrimenessCriterion]);
        match run.failure.take() {
            Some((check, witness)) => Verdict::FailsHypothesis { check, witness },
            None => {
                if surface.euler_char < 0 {
                    ambient_verdict = ambient.map(|a| ambient_conclusion(a, Vec::new()));
                }
                Verdict::Hyperbolic { citation: Citation::MainTheorem }
            }
        }
    } else if surface.euler_char < 0 {
        run.common(diagram, declared);
        if run.failure.is_none() {
            let (_, lifted) = double_cover_diagram(diagram);
            let mut lift_run = Run::new(&lifted);
            lift_run.common(&lifted, None);
            if let Some((check, witness)) = lift_run.failure {
                run.fail(check, Witness::Cover { check, witness: Box::new(witness) });
            }
        }
        citations.push(Citation::BundleLemma);
        match run.failure.take() {
            Some((check, witness)) => Verdict::FailsHypothesis { check, witness },
            None => {
                let assumptions = vec!["L is prime in the I-bundle over S".to_string()];
                ambient_verdict = ambient.map(|a| ambient_conclusion(a, assumptions.clone()));
                Verdict::ConditionallyHyperbolic { assumptions, citation: Citation::BundleLemma }
            }
        }
    } else {
        let reason = if surface.is_projective_plane() {
            "projective plane is excluded from the fully alternating setting"
        } else {
            "Klein bottle: non-orientable with zero Euler characteristic is outside the I-bundle lemma"
        };
        Verdict::NotCovered { reason: reason.into() }
    };

    if ambient_verdict.is_some() {
        citations.push(Citation::AmbientTheorem);
    }
    Certificate { checks: run.checks, verdict, citations, ambient: ambient_verdict }
}

fn ambient_conclusion(ambient: &AmbientAssertion, mut assumptions: Vec<String>) -> Verdict {
    assumptions.extend(ambient.assertions.iter().cloned());
    Verdict::ConditionallyHyperbolic { assumptions, citation: Citation::AmbientTheorem }
}

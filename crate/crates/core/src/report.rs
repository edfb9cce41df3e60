//! JSON and plain-text rendering of certificates.

use serde_json::{json, Value};

use crate::certify::{Certificate, Verdict};

pub const REPORT_VERSION: &str = "1";

/// Stable report schema; every key is always present.
pub fn certificate_json(input: &str, cert: &Certificate) -> Value {
    let s = &cert.checks.surface;
    let (kind, citation, assumptions, witness) = match &cert.verdict {
        Verdict::Hyperbolic { citation } => ("Hyperbolic", json!(citation), json!([]), Value::Null),
        Verdict::FailsHypothesis { check, witness } => {
            ("FailsHypothesis", Value::Null, json!([]), json!({ "check": check, "evidence": witness }))
        }
        Verdict::NotCovered { reason } => ("NotCovered", Value::Null, json!([reason]), Value::Null),
        Verdict::ConditionallyHyperbolic { assumptions, citation } => {
            ("ConditionallyHyperbolic", json!(citation), json!(assumptions), Value::Null)
        }
    };
    json!({
        "version": REPORT_VERSION,
        "input": input,
        "surface": { "chi": s.euler_char, "genus": s.genus, "orientable": s.orientable },
        "checks": {
            "connected": cert.checks.connected,
            "alternating": cert.checks.alternating,
            "cellular": cert.checks.cellular,
            "reduced": cert.checks.reduced,
            "obviously_prime": cert.checks.obviously_prime,
            "two_braid": cert.checks.two_braid,
        },
        "verdict": { "kind": kind, "citation": citation, "assumptions": assumptions, "witness": witness },
        "citations": cert.citations,
        "ambient": cert.ambient,
        "component_count": cert.checks.component_count,
        "reduced_crossing_count": cert.checks.reduced_crossing_count,
    })
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn certificate_text(input: &str, cert: &Certificate) -> String {
    let c = &cert.checks;
    let mut out = format!(
        "{input}\n  surface: {} (chi = {})\n  components: {}, reduced crossings: {}\n",
        c.surface.surface_type(),
        c.surface.euler_char,
        c.component_count,
        c.reduced_crossing_count
    );
    out += &format!(
        "  connected: {}  alternating: {}  cellular: {}  reduced: {}  obviously prime: {}  2-braid: {}\n",
        flag(Some(c.connected)),
        flag(c.alternating),
        flag(c.cellular),
        flag(c.reduced),
        flag(c.obviously_prime),
        flag(c.two_braid)
    );
    out += &format!("  verdict: {}\n", verdict_line(&cert.verdict));
    if let Some(a) = &cert.ambient {
        out += &format!("  ambient: {}\n", verdict_line(a));
    }
    out
}

fn verdict_line(v: &Verdict) -> String {
    match v {
        Verdict::Hyperbolic { citation } => format!("hyperbolic ({citation})"),
        Verdict::FailsHypothesis { check, .. } => format!("fails hypothesis: {}", check.as_str()),
        Verdict::NotCovered { reason } => format!("not covered: {reason}"),
        Verdict::ConditionallyHyperbolic { assumptions, citation } => {
            format!("hyperbolic assuming {} ({citation})", assumptions.join("; "))
        }
    }
}

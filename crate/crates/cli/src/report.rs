//! Human-readable and JSON renderings of verdicts.

use realstable::operators::{OperatorVerdict, OperatorWarning};
use realstable::stability::OracleReport;
use realstable::{StabilityVerdict, UniPoly, Witness};
use serde::Serialize;

use crate::document::{term_list, TermJson};

fn coeffs(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
#[serde(untagged)]
enum WitnessJson {
    Restriction {
        condition: u8,
        gamma: String,
        restriction: Vec<String>,
    },
    EdgePoint {
        condition: u8,
        t0: String,
        edge_value: String,
        edge: Vec<String>,
    },
    EdgeInterval {
        condition: u8,
        interval: [String; 2],
        edge: Vec<String>,
    },
}

impl WitnessJson {
    fn new(w: &Witness) -> Self {
        match w {
            Witness::Condition1 { gamma, restriction } => WitnessJson::Restriction {
                condition: 1,
                gamma: gamma.to_string(),
                restriction: coeffs(restriction),
            },
            Witness::Condition2 {
                t0,
                edge_value,
                edge,
            } => WitnessJson::EdgePoint {
                condition: 2,
                t0: t0.to_string(),
                edge_value: edge_value.to_string(),
                edge: coeffs(edge),
            },
            Witness::Condition2Interval { lo, hi, edge } => WitnessJson::EdgeInterval {
                condition: 2,
                interval: [lo.to_string(), hi.to_string()],
                edge: coeffs(edge),
            },
        }
    }
}

#[derive(Serialize)]
struct OracleJson {
    samples: usize,
    seed: u64,
    checked: usize,
    falsifier: Option<FalsifierJson>,
}

#[derive(Serialize)]
struct FalsifierJson {
    e: [String; 2],
    x: [String; 2],
    restriction: Vec<String>,
}

impl OracleJson {
    fn new(o: &OracleReport) -> Self {
        OracleJson {
            samples: o.samples,
            seed: o.seed,
            checked: o.checked,
            falsifier: o.falsifier.as_ref().map(|(l, r)| FalsifierJson {
                e: [l.e1.to_string(), l.e2.to_string()],
                x: [l.x1.to_string(), l.x2.to_string()],
                restriction: coeffs(r),
            }),
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    stable: bool,
    witness: Option<WitnessJson>,
    algorithm: &'static str,
    op_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
}

impl CheckJson {
    fn new(v: &StabilityVerdict, oracle: Option<&OracleReport>) -> Self {
        CheckJson {
            stable: v.stable,
            witness: v.witness.as_ref().map(WitnessJson::new),
            algorithm: v.algorithm.name(),
            op_count: v.op_count,
            oracle: oracle.map(OracleJson::new),
        }
    }
}

pub fn check_json(v: &StabilityVerdict, oracle: Option<&OracleReport>) -> String {
    serde_json::to_string(&CheckJson::new(v, oracle)).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct OperatorJson {
    #[serde(flatten)]
    check: CheckJson,
    preserver: bool,
    symbol: Vec<TermJson>,
    warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spot_check: Option<SpotJson>,
}

#[derive(Serialize)]
struct SpotJson {
    counterexample: Option<Vec<String>>,
}

fn warning_text(w: OperatorWarning) -> String {
    match w {
        OperatorWarning::ZeroSymbol => "symbol is identically zero".into(),
        OperatorWarning::LowRank(r) => format!("operator has rank {r}"),
    }
}

pub fn operator_json(
    v: &OperatorVerdict,
    oracle: Option<&OracleReport>,
    spot: Option<&Option<UniPoly>>,
) -> String {
    let out = OperatorJson {
        check: CheckJson::new(&v.verdict, oracle),
        preserver: v.preserver(),
        symbol: term_list(&v.symbol),
        warning: v.warning.map(warning_text),
        spot_check: spot.map(|c| SpotJson {
            counterexample: c.as_ref().map(coeffs),
        }),
    };
    serde_json::to_string(&out).expect("serializable") + "\n"
}

fn verdict_lines(v: &StabilityVerdict, yes: &str, no: &str) -> String {
    let mut s = format!(
        "{} (algorithm {}, {} arithmetic operations)\n",
        if v.stable { yes } else { no },
        v.algorithm,
        v.op_count
    );
    match &v.witness {
        None => {}
        Some(Witness::Condition1 { gamma, restriction }) => {
            s += &format!(
                "witness: at gamma = {gamma}, p(gamma + t, t) = {} is not real-rooted\n",
                restriction.display_with("t")
            );
        }
        Some(Witness::Condition2 {
            t0,
            edge_value,
            edge,
        }) => {
            s += &format!(
                "witness: edge polynomial {} takes the value {edge_value} at t = {t0}\n",
                edge.display_with("t")
            );
        }
        Some(Witness::Condition2Interval { lo, hi, edge }) => {
            s += &format!(
                "witness: edge polynomial {} has a root in ({lo}, {hi}]\n",
                edge.display_with("t")
            );
        }
    }
    s
}

fn oracle_lines(o: &OracleReport) -> String {
    match &o.falsifier {
        None => format!(
            "oracle: {} random lines (seed {}) all real-rooted\n",
            o.checked, o.seed
        ),
        Some((l, r)) => format!(
            "oracle: line {} (seed {}) with direction ({}, {}) through ({}, {}) gives {}, not real-rooted\n",
            o.checked,
            o.seed,
            l.e1,
            l.e2,
            l.x1,
            l.x2,
            r.display_with("t")
        ),
    }
}

pub fn check_text(v: &StabilityVerdict, oracle: Option<&OracleReport>) -> String {
    let mut s = verdict_lines(v, "stable", "not stable");
    if let Some(o) = oracle {
        s += &oracle_lines(o);
    }
    s
}

pub fn operator_text(
    v: &OperatorVerdict,
    oracle: Option<&OracleReport>,
    spot: Option<&Option<UniPoly>>,
) -> String {
    let mut s = format!("symbol: {}\n", v.symbol);
    s += &verdict_lines(
        &v.verdict,
        "preserves real-rootedness",
        "does not preserve real-rootedness",
    );
    if let Some(w) = v.warning {
        s += &format!("warning: {}\n", warning_text(w));
    }
    if let Some(o) = oracle {
        s += &oracle_lines(o);
    }
    match spot {
        Some(Some(r)) => s += &format!("spot check: real-rooted input {} has a non-real-rooted image\n", r.display_with("x")),
        Some(None) => s += "spot check: every sampled real-rooted input has a real-rooted image\n",
        None => {}
    }
    s
}

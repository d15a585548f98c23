//! The shipped fixture suite: spec, literal expectations and the byte-exact
//! report for each group.

use serde::{Deserialize, Serialize};

use super::{analysis_report, render, AnalysisConfig, Format};
use crate::error::{Error, Result};
use crate::group::GroupSpec;

pub const SUMMARY_FORMAT: &str = "endotriv-fixtures";
pub const EXPECT_FORMAT: &str = "endotriv-fixture-expect";

struct Fixture {
    name: &'static str,
    spec: &'static str,
    expect: &'static str,
    report: &'static str,
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            spec: include_str!(concat!("../../fixtures/specs/", $name, ".json")),
            expect: include_str!(concat!("../../fixtures/expect/", $name, ".json")),
            report: include_str!(concat!("../../fixtures/reports/", $name, ".json")),
        }
    };
}

const FIXTURES: &[Fixture] = &[
    fixture!("klein4"),
    fixture!("a4"),
    fixture!("a5"),
    fixture!("a4xc5"),
    fixture!("heisenberg3_klein4"),
    fixture!("l2_11"),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

/// Shipped spec of a fixture.
pub fn fixture_spec(name: &str) -> Result<GroupSpec> {
    let f =
        FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| Error::Invalid(format!("unknown fixture {name}")))?;
    GroupSpec::from_json(f.spec)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpectRecord {
    dim: usize,
    chi: [i64; 4],
    endotrivial: bool,
    #[serde(default)]
    phi_degrees: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Expect {
    format: String,
    version: u32,
    records: Vec<ExpectRecord>,
    tt_invariant_factors: Vec<u64>,
    #[serde(default)]
    tf_generator_dim: Option<usize>,
    #[serde(default)]
    principal_d_u: Option<Vec<i64>>,
    #[serde(default)]
    block_algebra_dims: Option<Vec<u64>>,
    #[serde(default)]
    block_shapes: Option<Vec<Option<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureError {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub error: Option<FixtureError>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureSummary {
    pub format: &'static str,
    pub version: u32,
    pub passed: bool,
    pub results: Vec<FixtureResult>,
}

pub fn cmd_fixtures(cfg: &AnalysisConfig) -> Result<FixtureSummary> {
    let mut results = Vec::new();
    for f in FIXTURES {
        let spec = GroupSpec::from_json(f.spec)?;
        let expect: Expect =
            serde_json::from_str(f.expect).map_err(|e| Error::SchemaError(format!("{}: {e}", f.name)))?;
        if expect.format != EXPECT_FORMAT || expect.version != 1 {
            return Err(Error::SchemaError(format!("{}: unsupported expectation format", f.name)));
        }
        let run = AnalysisConfig { spec: Some(spec), format: Format::Json, ..cfg.clone() };
        let r = match check(&run, &expect, f.report) {
            Ok(failures) => FixtureResult { name: f.name.into(), passed: failures.is_empty(), failures, error: None },
            Err(e) => FixtureResult {
                name: f.name.into(),
                passed: false,
                failures: vec![],
                error: Some(FixtureError { kind: e.kind().into(), message: e.to_string() }),
            },
        };
        results.push(r);
    }
    Ok(FixtureSummary { format: SUMMARY_FORMAT, version: 1, passed: results.iter().all(|r| r.passed), results })
}

fn check(cfg: &AnalysisConfig, expect: &Expect, shipped: &str) -> Result<Vec<String>> {
    let report = analysis_report(cfg)?;
    let mut fail = Vec::new();
    let t = &report.torsion;

    let got: Vec<(usize, [i64; 4], bool)> = t.records.iter().map(|r| (r.dim, r.chi, r.endotrivial)).collect();
    let want: Vec<(usize, [i64; 4], bool)> = expect.records.iter().map(|r| (r.dim, r.chi, r.endotrivial)).collect();
    if got != want {
        fail.push(format!("records {got:?}, expected {want:?}"));
    }
    for (i, (r, e)) in t.records.iter().zip(&expect.records).enumerate() {
        if let Some(p) = &e.phi_degrees {
            if &r.block_test.phi_degrees != p {
                fail.push(format!("record {i}: phi degrees {:?}, expected {p:?}", r.block_test.phi_degrees));
            }
        }
    }
    if t.tt_invariant_factors != expect.tt_invariant_factors {
        fail.push(format!(
            "TT invariant factors {:?}, expected {:?}",
            t.tt_invariant_factors, expect.tt_invariant_factors
        ));
    }
    if let Some(d) = expect.tf_generator_dim {
        if t.tf_generator_dim != d {
            fail.push(format!("Omega(k) has dimension {}, expected {d}", t.tf_generator_dim));
        }
    }
    if let Some(col) = &expect.principal_d_u {
        let got: Vec<Option<i64>> = report.principal_d_u.iter().map(|e| e.value.to_integer()).collect();
        let want: Vec<Option<i64>> = col.iter().map(|&x| Some(x)).collect();
        if got != want {
            fail.push(format!("principal d^u column {got:?}, expected {col:?}"));
        }
    }
    let dims: Vec<u64> = report.blocks.blocks.iter().map(|b| b.algebra_dim).collect();
    if dims.iter().sum::<u64>() != t.order {
        fail.push(format!("block algebra dimensions {dims:?} do not sum to {}", t.order));
    }
    if let Some(want) = &expect.block_algebra_dims {
        if &dims != want {
            fail.push(format!("block algebra dimensions {dims:?}, expected {want:?}"));
        }
    }
    if let Some(want) = &expect.block_shapes {
        let shapes: Vec<Option<String>> = report.blocks.blocks.iter().map(|b| b.shape.clone()).collect();
        if &shapes != want {
            fail.push(format!("block shapes {shapes:?}, expected {want:?}"));
        }
    }

    // invariants holding on every record
    for r in &t.records {
        if !r.round_trip {
            fail.push(format!("{}: Green round trip fails", r.source));
        }
        if r.chi_norm != 1 {
            fail.push(format!("{}: lifted character has norm {}", r.source, r.chi_norm));
        }
        if r.endotrivial && r.dim % 4 != 1 {
            fail.push(format!("{}: endo-trivial of dimension {}", r.source, r.dim));
        }
        if r.second_main_sums != r.chi[1..] {
            fail.push(format!(
                "{}: decomposition sums {:?} differ from {:?}",
                r.source,
                r.second_main_sums,
                &r.chi[1..]
            ));
        }
        if r.direct.is_some_and(|d| d != r.character) || r.character != r.block_test.passed {
            fail.push(format!("{}: verdicts disagree", r.source));
        }
    }

    let rendered = render(&serde_json::to_value(&report)?, Format::Json);
    if rendered != shipped {
        fail.push("report differs from the shipped report".into());
    }
    Ok(fail)
}

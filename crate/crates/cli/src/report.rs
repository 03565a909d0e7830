//! Serializable report types and their JSON/CSV/table renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use tracecodes::codes::WeightDistribution;
use tracecodes::gf::FieldCtx;
use tracecodes::quadform::QuadFormProfile;
use tracecodes::spectrum::RSetSizes;
use tracecodes::theory::TheoreticalWd;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldReport {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
    pub alpha: Vec<u64>,
}

impl FieldReport {
    pub fn of(ctx: &FieldCtx) -> Self {
        FieldReport {
            p: ctx.p(),
            m: ctx.m(),
            modulus: ctx.modulus().to_vec(),
            alpha: ctx.alpha().coeffs().to_vec(),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p {}", self.p);
        let _ = writeln!(out, "m {}", self.m);
        let _ = writeln!(out, "modulus {}", join(&self.modulus));
        let _ = writeln!(out, "alpha {}", join(&self.alpha));
        out
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileReport {
    pub a_log: u64,
    pub rank: u32,
    pub eps: i8,
}

impl ProfileReport {
    pub fn of(a_log: u64, profile: &QuadFormProfile) -> Self {
        ProfileReport {
            a_log,
            rank: profile.rank,
            eps: profile.eps,
        }
    }
}

pub fn profiles_table(rows: &[ProfileReport]) -> String {
    let mut out = String::from("a_log rank eps\n");
    for r in rows {
        let _ = writeln!(out, "{} {} {}", r.a_log, r.rank, r.eps);
    }
    out
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq, Clone, Copy)]
pub struct RSetReport {
    pub r0_plus: u64,
    pub r0_minus: u64,
    pub r1_plus: u64,
    pub r1_minus: u64,
    pub r0: u64,
    pub r1: u64,
}

impl RSetReport {
    pub fn of(sizes: &RSetSizes) -> Self {
        RSetReport {
            r0_plus: sizes.r0_plus,
            r0_minus: sizes.r0_minus,
            r1_plus: sizes.r1_plus,
            r1_minus: sizes.r1_minus,
            r0: sizes.r0(),
            r1: sizes.r1(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub case: String,
    pub expected: RSetReport,
    pub empirical: RSetReport,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl VerifyReport {
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "case {}", self.case);
        let _ = writeln!(out, "set expected empirical");
        let e = &self.expected;
        let g = &self.empirical;
        let _ = writeln!(out, "r0_plus {} {}", e.r0_plus, g.r0_plus);
        let _ = writeln!(out, "r0_minus {} {}", e.r0_minus, g.r0_minus);
        let _ = writeln!(out, "r1_plus {} {}", e.r1_plus, g.r1_plus);
        let _ = writeln!(out, "r1_minus {} {}", e.r1_minus, g.r1_minus);
        let _ = writeln!(out, "match {}", self.matches);
        out
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq, Clone)]
pub struct WeightEntry {
    pub w: u64,
    pub count: u128,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq, Clone)]
pub struct WdReport {
    pub family: String,
    pub p: u64,
    pub m: u32,
    pub k: u32,
    pub n: u64,
    pub dimension: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    pub weights: Vec<WeightEntry>,
}

impl WdReport {
    pub fn of_theory(wd: &TheoreticalWd) -> Self {
        WdReport {
            family: wd.spec.family.as_str().to_string(),
            p: wd.spec.p,
            m: wd.spec.m,
            k: wd.spec.k,
            n: wd.spec.n,
            dimension: wd.spec.dimension,
            case: Some(wd.case.as_str().to_string()),
            formula: Some(wd.formula.to_string()),
            weights: weights_of(wd.counts.iter()),
        }
    }

    pub fn of_empirical(wd: &WeightDistribution) -> Self {
        WdReport {
            family: wd.spec.family.as_str().to_string(),
            p: wd.spec.p,
            m: wd.spec.m,
            k: wd.spec.k,
            n: wd.spec.n,
            dimension: wd.spec.dimension,
            case: None,
            formula: None,
            weights: weights_of(wd.counts.iter()),
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family {}", self.family);
        let _ = writeln!(out, "p {}", self.p);
        let _ = writeln!(out, "m {}", self.m);
        let _ = writeln!(out, "k {}", self.k);
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "dimension {}", self.dimension);
        if let Some(case) = &self.case {
            let _ = writeln!(out, "case {case}");
        }
        if let Some(formula) = &self.formula {
            let _ = writeln!(out, "formula {formula}");
        }
        out.push_str("w count\n");
        for e in &self.weights {
            let _ = writeln!(out, "{} {}", e.w, e.count);
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("w,count\n");
        for e in &self.weights {
            let _ = writeln!(out, "{},{}", e.w, e.count);
        }
        out
    }
}

fn weights_of<'a>(entries: impl Iterator<Item = (&'a u64, &'a u128)>) -> Vec<WeightEntry> {
    entries
        .map(|(&w, &count)| WeightEntry { w, count })
        .collect()
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq, Clone)]
pub struct DiffEntry {
    pub w: u64,
    pub theory: u128,
    pub empirical: u128,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WdBothReport {
    pub theory: WdReport,
    pub empirical: WdReport,
    #[serde(rename = "match")]
    pub matches: bool,
    pub diffs: Vec<DiffEntry>,
}

impl WdBothReport {
    pub fn of(theory: WdReport, empirical: WdReport) -> Self {
        let mut diffs = Vec::new();
        let mut weights: Vec<u64> = theory
            .weights
            .iter()
            .chain(&empirical.weights)
            .map(|e| e.w)
            .collect();
        weights.sort_unstable();
        weights.dedup();
        let lookup = |r: &WdReport, w: u64| {
            r.weights
                .iter()
                .find(|e| e.w == w)
                .map(|e| e.count)
                .unwrap_or(0)
        };
        for w in weights {
            let t = lookup(&theory, w);
            let e = lookup(&empirical, w);
            if t != e {
                diffs.push(DiffEntry {
                    w,
                    theory: t,
                    empirical: e,
                });
            }
        }
        WdBothReport {
            theory,
            empirical,
            matches: diffs.is_empty(),
            diffs,
        }
    }

    pub fn table(&self) -> String {
        let mut out = String::from("== theory ==\n");
        out.push_str(&self.theory.table());
        out.push_str("== empirical ==\n");
        out.push_str(&self.empirical.table());
        out.push_str("== diff ==\n");
        let _ = writeln!(out, "match {}", self.matches);
        if !self.diffs.is_empty() {
            out.push_str("w theory empirical\n");
            for d in &self.diffs {
                let _ = writeln!(out, "{} {} {}", d.w, d.theory, d.empirical);
            }
        }
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

fn join(v: &[u64]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

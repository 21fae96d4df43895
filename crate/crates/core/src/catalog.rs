//! Nilpotent Lie superalgebras of dimension at most five, with their
//! multiplier dimensions and capability verdicts.
//!
//! Presentations are stored as printed, anomalies included; entries that do
//! not define a nilpotent Lie superalgebra carry a [`Flag`] instead of a
//! silent correction.

use std::fmt;

use crate::capability::{capability_verdict, partial_capability, CapabilityVerdict, Rule, Status};
use crate::format::parse_lenient;
use crate::multiplier::{multiplier_homology, multiplier_tags};
use crate::superalg::{GradedDim, SuperAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flag {
    /// The printed brackets are not nilpotent.
    NotNilpotentAsPrinted,
    /// A printed bracket violates the grading.
    GradingViolationAsPrinted,
    /// The printed basis split disagrees with the dimension in the id; the
    /// id's reading is used and the printed one is kept as `alternate`.
    BasisSplitAsPrinted,
}

impl Flag {
    pub fn id(self) -> &'static str {
        match self {
            Flag::NotNilpotentAsPrinted => "not-nilpotent-as-printed",
            Flag::GradingViolationAsPrinted => "grading-violation-as-printed",
            Flag::BasisSplitAsPrinted => "basis-split-as-printed",
        }
    }

    /// Entries with this flag are decided by the partial-capability rule
    /// only and their multiplier is not checked.
    pub fn skips_verification(self) -> bool {
        !matches!(self, Flag::BasisSplitAsPrinted)
    }
}

struct Raw {
    id: &'static str,
    aliases: &'static [&'static str],
    group: usize,
    text: &'static str,
    alternate: Option<&'static str>,
    total: Option<usize>,
    graded: Option<(usize, usize)>,
    capable: bool,
    provenance: &'static str,
    flags: &'static [Flag],
}

const fn raw(id: &'static str, group: usize, text: &'static str) -> Raw {
    Raw {
        id,
        aliases: &[],
        group,
        text,
        alternate: None,
        total: None,
        graded: None,
        capable: false,
        provenance: "",
        flags: &[],
    }
}

const G1: &str = "list dim L^2 = 1";
const G2: &str = "list dim L^2 = 2";
const G3: &str = "list dim L^2 = 3";

const RAW: &[Raw] = &[
    Raw { provenance: G1, ..raw("L1_1_1", 1, "superalgebra L1_1_1\neven x1\nodd x2\n[x2,x2] = x1\n") },
    Raw {
        graded: Some((2, 0)),
        capable: true,
        provenance: "list dim L^2 = 1; isomorphic to H(1,0)",
        ..raw("L2_3_0", 1, "superalgebra L2_3_0\neven x1 x2 x3\nodd\n[x1,x2] = x3\n")
    },
    Raw {
        aliases: &["L1p_1_2", "(L1_1_1)'", "(L1_1_1)^2"],
        provenance: "list dim L^2 = 1; derived from L1_1_1; isomorphic to H(0,1) + A(1|0)",
        ..raw("L1p_2_1", 1, "superalgebra L1p_2_1\neven x1 x2\nodd x3\n[x3,x3] = x1\n[x1,x2] = 0\n")
    },
    Raw { provenance: G1, ..raw("L3_1_2", 1, "superalgebra L3_1_2\neven x1\nodd x2 x3\n[x1,x2] = x3\n") },
    Raw {
        provenance: G1,
        ..raw("L4_1_2", 1, "superalgebra L4_1_2\neven x1\nodd x2 x3\n[x2,x2] = x1\n[x3,x3] = x1\n")
    },
    Raw {
        graded: Some((1, 2)),
        provenance: "list dim L^2 = 1; isomorphic to H(1,1)",
        ..raw("L7_3_1", 1, "superalgebra L7_3_1\neven x1 x2 x3\nodd x4\n[x1,x2] = x3\n[x4,x4] = x3\n")
    },
    Raw {
        provenance: G1,
        ..raw(
            "L14_1_3",
            1,
            "superalgebra L14_1_3\neven x1\nodd x2 x3 x4\n[x2,x2] = x1\n[x3,x3] = x1\n[x4,x4] = x1\n",
        )
    },
    Raw {
        graded: Some((5, 0)),
        provenance: "list dim L^2 = 1; isomorphic to H(2,0)",
        ..raw("L16_5_0", 1, "superalgebra L16_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x5\n[x3,x4] = x5\n")
    },
    Raw {
        graded: Some((3, 4)),
        provenance: "list dim L^2 = 1; isomorphic to H(1,2)",
        ..raw(
            "L25_3_2",
            1,
            "superalgebra L25_3_2\neven x1 x2 x3\nodd x4 x5\n[x1,x2] = x3\n[x4,x4] = x3\n[x5,x5] = x3\n",
        )
    },
    Raw {
        total: Some(7),
        provenance: G1,
        ..raw(
            "L26_3_2",
            1,
            "superalgebra L26_3_2\neven x1 x2 x3\nodd x4 x5\n[x1,x2] = x3\n[x4,x4] = x3\n[x5,x5] = -x3\n",
        )
    },
    Raw {
        provenance: G1,
        ..raw(
            "L40_1_4",
            1,
            "superalgebra L40_1_4\neven x1\nodd x2 x3 x4 x5\n[x2,x2] = x1\n[x3,x3] = x1\n[x4,x4] = x1\n[x5,x5] = x1\n",
        )
    },
    Raw {
        provenance: G1,
        ..raw(
            "L41_1_4",
            1,
            "superalgebra L41_1_4\neven x1\nodd x2 x3 x4 x5\n[x2,x2] = x1\n[x3,x3] = x1\n[x4,x4] = x1\n[x5,x5] = -x1\n",
        )
    },
    Raw {
        provenance: G1,
        ..raw(
            "L42_1_4",
            1,
            "superalgebra L42_1_4\neven x1\nodd x2 x3 x4 x5\n[x2,x2] = x1\n[x3,x3] = x1\n[x4,x4] = -x1\n[x5,x5] = -x1\n",
        )
    },
    Raw { provenance: G2, ..raw("L6_4_0", 2, "superalgebra L6_4_0\neven x1 x2 x3 x4\nodd\n[x1,x2] = x3\n[x1,x3] = x4\n") },
    Raw {
        capable: true,
        provenance: G2,
        ..raw("L8_2_2", 2, "superalgebra L8_2_2\neven x1 x2\nodd x3 x4\n[x1,x3] = x4\n[x3,x3] = x2\n")
    },
    Raw {
        total: Some(1),
        provenance: G2,
        ..raw(
            "L9_2_2",
            2,
            "superalgebra L9_2_2\neven x1 x2\nodd x3 x4\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x4] = 1/2 x1 + 1/2 x2\n",
        )
    },
    Raw {
        total: Some(1),
        provenance: "list dim L^2 = 2; isomorphic to H(0,1) + H(0,1)",
        ..raw("L10_2_2", 2, "superalgebra L10_2_2\neven x1 x2\nodd x3 x4\n[x3,x3] = x1\n[x4,x4] = x2\n")
    },
    Raw {
        total: Some(1),
        provenance: G2,
        ..raw(
            "L11_2_2",
            2,
            "superalgebra L11_2_2\neven x1 x2\nodd x3 x4\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x4] = x1 - x2\n",
        )
    },
    Raw {
        total: Some(1),
        provenance: G2,
        ..raw(
            "L12_2_2",
            2,
            "superalgebra L12_2_2\neven x1 x2\nodd x3 x4\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x4] = x1\n",
        )
    },
    Raw {
        provenance: G2,
        ..raw("L13_1_3", 2, "superalgebra L13_1_3\neven x1\nodd x2 x3 x4\n[x1,x2] = x3\n[x1,x3] = x4\n")
    },
    Raw {
        capable: true,
        provenance: "list dim L^2 = 2; the Lie algebra L_{5,8}",
        ..raw("L17_5_0", 2, "superalgebra L17_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x4\n[x1,x3] = x5\n")
    },
    Raw {
        capable: true,
        provenance: "list dim L^2 = 2; the Lie algebra L_{5,5}",
        ..raw(
            "L18_5_0",
            2,
            "superalgebra L18_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x3\n[x1,x3] = x4\n[x2,x5] = x4\n",
        )
    },
    Raw {
        provenance: G2,
        flags: &[Flag::NotNilpotentAsPrinted],
        ..raw(
            "L22_4_1",
            2,
            "superalgebra L22_4_1\neven x1 x2 x3 x4\nodd x5\n[x4,x2] = x1\n[x4,x3] = x3\n[x5,x5] = x1\n",
        )
    },
    Raw {
        provenance: G2,
        ..raw(
            "L23_4_1",
            2,
            "superalgebra L23_4_1\neven x1 x2 x3 x4\nodd x5\n[x1,x2] = x3\n[x4,x2] = x1\n[x5,x5] = x3\n",
        )
    },
    Raw {
        total: Some(6),
        capable: true,
        provenance: G2,
        ..raw("L24_3_2", 2, "superalgebra L24_3_2\neven x1 x2 x3\nodd x4 x5\n[x1,x2] = x3\n[x1,x5] = x4\n")
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L27_3_2",
            2,
            "superalgebra L27_3_2\neven x1 x2 x3\nodd x4 x5\n[x1,x2] = x3\n[x1,x5] = x4\n[x5,x5] = x3\n",
        )
    },
    Raw {
        total: Some(4),
        capable: true,
        provenance: G2,
        ..raw(
            "L28_2_3",
            2,
            "superalgebra L28_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x4] = x3\n[x4,x4] = x2\n[x5,x5] = x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L29_2_3",
            2,
            "superalgebra L29_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x4] = x3\n[x4,x4] = x2\n[x5,x5] = -x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L30_2_3",
            2,
            "superalgebra L30_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x5,x5] = x1 + x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L31_2_3",
            2,
            "superalgebra L31_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x5,x5] = -x1 - x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L32_2_3",
            2,
            "superalgebra L32_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x5,x5] = x1 - x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L33_2_3",
            2,
            "superalgebra L33_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x5] = x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L34_2_3",
            2,
            "superalgebra L34_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x5] = x1 + x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L35_2_3",
            2,
            "superalgebra L35_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x4,x4] = x2\n[x3,x5] = x1 - x2\n",
        )
    },
    Raw {
        total: Some(4),
        provenance: G2,
        ..raw(
            "L36_2_3",
            2,
            "superalgebra L36_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x3] = x1\n[x3,x5] = x2\n[x4,x5] = x1\n",
        )
    },
    Raw {
        total: Some(5),
        capable: true,
        provenance: G2,
        ..raw("L37_2_3", 2, "superalgebra L37_2_3\neven x1 x2\nodd x3 x4 x5\n[x3,x4] = x1\n[x4,x5] = x2\n")
    },
    Raw {
        provenance: G2,
        ..raw("L38_1_4", 2, "superalgebra L38_1_4\neven x1\nodd x2 x3 x4 x5\n[x1,x3] = x2\n[x1,x5] = x4\n")
    },
    Raw {
        total: Some(5),
        capable: true,
        provenance: G2,
        ..raw("L43_2_3", 2, "superalgebra L43_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x5] = x3\n[x4,x5] = x2\n")
    },
    Raw {
        capable: true,
        provenance: "list dim L^2 = 3; the Lie algebra L_{5,9}",
        flags: &[Flag::BasisSplitAsPrinted],
        alternate: Some(
            "superalgebra L19_5_0\neven x1 x2 x3 x4\nodd x5\n[x1,x2] = x3\n[x1,x3] = x4\n[x2,x3] = x5\n",
        ),
        ..raw(
            "L19_5_0",
            3,
            "superalgebra L19_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x3\n[x1,x3] = x4\n[x2,x3] = x5\n",
        )
    },
    Raw {
        capable: true,
        provenance: "list dim L^2 = 3; the Lie algebra L_{5,7}",
        flags: &[Flag::BasisSplitAsPrinted],
        alternate: Some(
            "superalgebra L20_5_0\neven x1 x2 x3 x4\nodd x5\n[x1,x2] = x3\n[x1,x3] = x4\n[x1,x4] = x5\n",
        ),
        ..raw(
            "L20_5_0",
            3,
            "superalgebra L20_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x3\n[x1,x3] = x4\n[x1,x4] = x5\n",
        )
    },
    Raw {
        capable: true,
        provenance: "list dim L^2 = 3; the Lie algebra L_{5,6}",
        flags: &[Flag::BasisSplitAsPrinted],
        alternate: Some(
            "superalgebra L21_5_0\neven x1 x2 x3 x4\nodd x5\n[x1,x2] = x3\n[x1,x3] = x4\n[x1,x4] = x5\n[x2,x3] = x5\n",
        ),
        ..raw(
            "L21_5_0",
            3,
            "superalgebra L21_5_0\neven x1 x2 x3 x4 x5\nodd\n[x1,x2] = x3\n[x1,x3] = x4\n[x1,x4] = x5\n[x2,x3] = x5\n",
        )
    },
    Raw {
        provenance: G3,
        flags: &[Flag::GradingViolationAsPrinted],
        ..raw(
            "L39_1_4",
            3,
            "superalgebra L39_1_4\neven x1\nodd x2 x3 x4 x5\n[x1,x2] = x3\n[x1,x3] = x4\n[x1,x4] = x5\n[x3,x4] = x5\n",
        )
    },
    Raw {
        total: Some(4),
        capable: true,
        provenance: G3,
        ..raw(
            "L44_2_3",
            3,
            "superalgebra L44_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x5] = x3\n[x2,x4] = x3\n[x4,x5] = -x1\n[x5,x5] = 2 x2\n",
        )
    },
    Raw {
        total: Some(3),
        capable: true,
        provenance: G3,
        ..raw(
            "L45_2_3",
            3,
            "superalgebra L45_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x4] = x3\n[x1,x5] = x4\n[x5,x5] = x2\n",
        )
    },
    Raw {
        total: Some(3),
        capable: true,
        provenance: G3,
        ..raw(
            "L46_2_3",
            3,
            "superalgebra L46_2_3\neven x1 x2\nodd x3 x4 x5\n[x1,x4] = x3\n[x1,x5] = x4\n[x3,x5] = -x2\n[x4,x4] = x2\n",
        )
    },
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub algebra: SuperAlgebra,
    /// `dim L^2` as listed.
    pub group: usize,
    pub expected_multiplier_total: Option<usize>,
    pub expected_multiplier: Option<GradedDim>,
    pub expected_verdict: Status,
    pub provenance: &'static str,
    pub flags: &'static [Flag],
    /// The printed reading when it differs from the one in `algebra`.
    pub alternate: Option<SuperAlgebra>,
    pub text: &'static str,
}

impl CatalogEntry {
    pub fn skips_verification(&self) -> bool {
        self.flags.iter().any(|f| f.skips_verification())
    }

    /// Total expected multiplier dimension, from either field.
    pub fn expected_total(&self) -> Option<usize> {
        self.expected_multiplier_total.or(self.expected_multiplier.map(GradedDim::total))
    }

    /// `(even, odd)` dimensions encoded in the id suffix.
    pub fn id_dims(&self) -> GradedDim {
        let mut parts = self.id.rsplitn(3, '_');
        let odd = parts.next().and_then(|s| s.parse().ok()).unwrap_or(0);
        let even = parts.next().and_then(|s| s.parse().ok()).unwrap_or(0);
        GradedDim::new(even, odd)
    }

    pub fn matches(&self, key: &str) -> bool {
        self.id == key || self.aliases.contains(&key)
    }
}

pub fn load_catalog() -> Vec<CatalogEntry> {
    RAW.iter()
        .map(|r| CatalogEntry {
            id: r.id,
            aliases: r.aliases,
            algebra: parse_lenient(r.text).expect("catalog text parses"),
            group: r.group,
            expected_multiplier_total: r.total,
            expected_multiplier: r.graded.map(|(e, o)| GradedDim::new(e, o)),
            expected_verdict: if r.capable { Status::Capable } else { Status::NonCapable },
            provenance: r.provenance,
            flags: r.flags,
            alternate: r.alternate.map(|t| parse_lenient(t).expect("catalog text parses")),
            text: r.text,
        })
        .collect()
}

pub fn find(key: &str) -> Option<CatalogEntry> {
    load_catalog().into_iter().find(|e| e.matches(key))
}

/// Verdict used for verification. Flagged entries are decided by the
/// partial-capability rule alone.
pub fn entry_verdict(entry: &CatalogEntry, grid_bound: usize) -> CapabilityVerdict {
    if entry.skips_verification() {
        let p = partial_capability(&entry.algebra);
        let (status, rule) = match p.status {
            Status::NonCapable => (Status::NonCapable, Rule::NotPartiallyCapable),
            _ => (Status::Undetermined, Rule::Undetermined),
        };
        return CapabilityVerdict { status, rule, witness: None, notes: format!("{}: {}", p.rule, p.notes) };
    }
    match capability_verdict(&entry.algebra, grid_bound) {
        Ok(v) => v,
        Err(e) => CapabilityVerdict { status: Status::Undetermined, rule: Rule::Undetermined, witness: None, notes: e.to_string() },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EntryCheck {
    pub id: &'static str,
    pub status: CheckStatus,
    pub multiplier_tags: Option<GradedDim>,
    pub multiplier_homology: Option<GradedDim>,
    pub verdict: CapabilityVerdict,
    pub expected_verdict: Status,
    pub expected_total: Option<usize>,
    pub reasons: Vec<String>,
}

impl fmt::Display for EntryCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = |d: Option<GradedDim>| d.map_or("-".to_string(), |d| d.to_string());
        write!(
            f,
            "{}: {} multiplier={} homology={} expected_total={} verdict={} rule={} expected_verdict={}",
            self.id,
            self.status,
            dim(self.multiplier_tags),
            dim(self.multiplier_homology),
            self.expected_total.map_or("-".to_string(), |t| t.to_string()),
            self.verdict.status,
            self.verdict.rule,
            self.expected_verdict,
        )?;
        for r in &self.reasons {
            write!(f, "; {r}")?;
        }
        Ok(())
    }
}

pub fn check_entry(entry: &CatalogEntry, grid_bound: usize) -> EntryCheck {
    let mut reasons = Vec::new();
    let verdict = entry_verdict(entry, grid_bound);
    let (mut tags, mut homology) = (None, None);
    if entry.skips_verification() {
        reasons.extend(entry.flags.iter().map(|f| f.id().to_string()));
    } else {
        tags = multiplier_tags(&entry.algebra).ok().map(|r| r.dim);
        homology = multiplier_homology(&entry.algebra).ok().map(|r| r.dim);
        if tags.is_none() || tags != homology {
            reasons.push("multiplier engines disagree".into());
        }
        if let (Some(t), Some(e)) = (tags, entry.expected_total()) {
            if t.total() != e {
                reasons.push(format!("multiplier total {} != {e}", t.total()));
            }
        }
        if let (Some(t), Some(e)) = (tags, entry.expected_multiplier) {
            if t != e {
                reasons.push(format!("multiplier {t} != {e}"));
            }
        }
        let d2 = entry.algebra.derived().dim().total();
        if d2 != entry.group {
            reasons.push(format!("dim L^2 = {d2} != {}", entry.group));
        }
    }
    let verdict_ok = verdict.status == entry.expected_verdict;
    if !verdict_ok {
        reasons.push(format!("verdict {} != {}", verdict.status, entry.expected_verdict));
    }
    let failed = if entry.skips_verification() { !verdict_ok } else { !reasons.is_empty() };
    let status = if failed {
        CheckStatus::Fail
    } else if entry.skips_verification() {
        CheckStatus::Skipped
    } else {
        CheckStatus::Pass
    };
    EntryCheck {
        id: entry.id,
        status,
        multiplier_tags: tags,
        multiplier_homology: homology,
        verdict,
        expected_verdict: entry.expected_verdict,
        expected_total: entry.expected_total(),
        reasons,
    }
}

#[derive(Debug, Clone)]
pub struct CatalogReport {
    pub checks: Vec<EntryCheck>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn count(&self, s: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn capable(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.verdict.status == Status::Capable).map(|c| c.id).collect()
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "entries: {}", self.checks.len())?;
        writeln!(f, "pass: {}", self.count(CheckStatus::Pass))?;
        writeln!(f, "fail: {}", self.count(CheckStatus::Fail))?;
        writeln!(f, "skipped: {}", self.count(CheckStatus::Skipped))?;
        writeln!(f, "capable: {}", self.capable().join(" "))?;
        writeln!(f, "status: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn verify_catalog(entries: &[CatalogEntry], grid_bound: usize) -> CatalogReport {
    CatalogReport { checks: entries.iter().map(|e| check_entry(e, grid_bound)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capability::DEFAULT_GRID_BOUND;
    use crate::format::{parse, print};
    use crate::recognize::{recognize, FamilyDescriptor};

    #[test]
    fn has_every_printed_entry() {
        let c = load_catalog();
        assert_eq!(c.len(), 45);
        let mut ids: Vec<&str> = c.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 45);
        assert_eq!(c.iter().filter(|e| e.expected_verdict == Status::Capable).count(), 14);
    }

    #[test]
    fn dims_match_ids_and_groups() {
        for e in load_catalog() {
            assert_eq!(e.algebra.dim(), e.id_dims(), "{}", e.id);
            assert_eq!(e.algebra.name(), e.id);
            if !e.skips_verification() {
                assert!(e.algebra.is_valid(), "{}", e.id);
                assert!(e.algebra.is_nilpotent(), "{}", e.id);
                assert_eq!(e.algebra.derived().dim().total(), e.group, "{}", e.id);
            }
        }
    }

    #[test]
    fn flagged_entries_fail_as_printed() {
        let l22 = find("L22_4_1").unwrap();
        assert!(l22.algebra.is_valid());
        assert!(!l22.algebra.is_nilpotent());
        let l39 = find("L39_1_4").unwrap();
        assert!(!l39.algebra.is_valid());
        assert!(parse(l39.text).is_err());
        let l19 = find("L19_5_0").unwrap();
        assert!(!l19.alternate.unwrap().is_valid());
    }

    #[test]
    fn flagged_entries_are_not_partially_capable() {
        for id in ["L22_4_1", "L39_1_4"] {
            let v = entry_verdict(&find(id).unwrap(), DEFAULT_GRID_BOUND);
            assert_eq!((v.status, v.rule), (Status::NonCapable, Rule::NotPartiallyCapable), "{id}");
        }
    }

    #[test]
    fn aliases_resolve() {
        for key in ["L1p_2_1", "L1p_1_2", "(L1_1_1)'", "(L1_1_1)^2"] {
            assert_eq!(find(key).unwrap().id, "L1p_2_1");
        }
        assert!(find("L5_1_1").is_none());
    }

    #[test]
    fn round_trip() {
        for e in load_catalog() {
            let text = print(&e.algebra);
            assert_eq!(parse_lenient(&text).unwrap(), e.algebra, "{}", e.id);
            assert_eq!(print(&parse_lenient(&text).unwrap()), text);
        }
    }

    #[test]
    fn isomorphism_claims() {
        let rec = |id: &str| recognize(&find(id).unwrap().algebra).unwrap();
        assert_eq!(rec("L7_3_1"), FamilyDescriptor::EvenHeisenberg { m: 1, n: 1 });
        assert_eq!(rec("L16_5_0"), FamilyDescriptor::EvenHeisenberg { m: 2, n: 0 });
        assert_eq!(rec("L25_3_2"), FamilyDescriptor::EvenHeisenberg { m: 1, n: 2 });
        assert_eq!(
            rec("L1p_2_1"),
            FamilyDescriptor::HeisenbergPlusAbelian {
                core: Box::new(FamilyDescriptor::EvenHeisenberg { m: 0, n: 1 }),
                pad: GradedDim::new(1, 0),
            }
        );
        // L10 = H(0,1) + H(0,1) has L^2 = Z(L) of rank (2|0)
        assert_eq!(rec("L10_2_2"), FamilyDescriptor::GeneralizedHeisenberg { rank: GradedDim::new(2, 0) });
        let l10 = find("L10_2_2").unwrap().algebra;
        let h01 = crate::recognize::build_canonical(&FamilyDescriptor::EvenHeisenberg { m: 0, n: 1 }).unwrap();
        let sum = h01.direct_sum(&h01);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(sum.bracket_basis(i, j), l10.bracket_basis(i, j));
            }
        }
    }

    #[test]
    fn derived_dimension_one_entries_are_heisenberg_type() {
        for e in load_catalog().iter().filter(|e| e.group == 1) {
            assert!(recognize(&e.algebra).unwrap().heisenberg_split().is_some(), "{}", e.id);
        }
    }

    #[test]
    fn check_line_format() {
        let c = check_entry(&find("L2_3_0").unwrap(), DEFAULT_GRID_BOUND);
        assert_eq!(
            c.to_string(),
            "L2_3_0: PASS multiplier=(2|0) homology=(2|0) expected_total=2 verdict=Capable \
             rule=heisenberg-even-m1n0 expected_verdict=Capable"
        );
        let c = check_entry(&find("L22_4_1").unwrap(), DEFAULT_GRID_BOUND);
        assert_eq!(c.status, CheckStatus::Skipped);
    }
}

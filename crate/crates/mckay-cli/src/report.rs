//! Report assembly and rendering.
//!
//! A [`Report`] is a plain data structure filled from an analysis; it
//! renders either as aligned text or as a stable `key = value` listing for
//! machine consumption. Both renderings are deterministic: identical inputs
//! produce byte-identical output (timing is opt-in for that reason).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Duration;

use mckay_core::orbifold::{AssocMode, OrbifoldAnalysis};
use mckay_core::{Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// The verification sweeps, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    AgeCodim,
    Transversality,
    Associativity,
    BettiPaths,
    Filtration,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::AgeCodim,
        Check::Transversality,
        Check::Associativity,
        Check::BettiPaths,
        Check::Filtration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::AgeCodim => "age-codim",
            Check::Transversality => "transversality",
            Check::Associativity => "associativity",
            Check::BettiPaths => "betti-paths",
            Check::Filtration => "filtration",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.iter().copied().find(|c| c.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    Pass,
    Fail,
    Skipped,
}

impl VerifyStatus {
    fn as_str(self) -> &'static str {
        match self {
            VerifyStatus::Pass => "pass",
            VerifyStatus::Fail => "fail",
            VerifyStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroupSummary {
    pub dim: usize,
    pub order: usize,
    pub exponent: u64,
    pub conductor: u64,
    pub in_sl: bool,
    pub in_sp: bool,
    pub num_classes: usize,
}

#[derive(Clone, Debug)]
pub struct ClassRow {
    pub id: usize,
    pub size: usize,
    pub order: u64,
    pub age: usize,
    pub codim: usize,
    pub representative: usize,
}

#[derive(Clone, Debug)]
pub struct RingProductRow {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug)]
pub struct ReflectionsReport {
    pub classes: Vec<usize>,
    pub sizes: Vec<usize>,
    pub dim_c: usize,
}

#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub check: Check,
    pub status: VerifyStatus,
    pub mode: Option<AssocMode>,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

/// Everything a command prints, in one deterministic structure.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub target: String,
    pub summary: GroupSummary,
    pub classes: Option<Vec<ClassRow>>,
    pub betti_orbifold: Option<BTreeMap<usize, usize>>,
    pub betti_hochschild: Option<BTreeMap<usize, usize>>,
    pub ring_basis: Option<Vec<(usize, usize)>>,
    pub ring_products: Option<Vec<RingProductRow>>,
    pub reflections: Option<ReflectionsReport>,
    pub verify: Option<Vec<VerifyRow>>,
    pub timing: Option<Duration>,
}

impl Report {
    pub fn new(command: &'static str, target: String, analysis: &OrbifoldAnalysis) -> Self {
        let group = analysis.group();
        Report {
            command,
            target,
            summary: GroupSummary {
                dim: group.dim(),
                order: group.order(),
                exponent: group.exponent(),
                conductor: group.conductor(),
                in_sl: group.is_in_sl(),
                in_sp: group.is_in_sp(),
                num_classes: analysis.classes().len(),
            },
            classes: None,
            betti_orbifold: None,
            betti_hochschild: None,
            ring_basis: None,
            ring_products: None,
            reflections: None,
            verify: None,
            timing: None,
        }
    }

    pub fn with_classes(mut self, analysis: &OrbifoldAnalysis) -> Self {
        self.classes = Some(
            analysis
                .classes()
                .iter()
                .enumerate()
                .map(|(id, c)| ClassRow {
                    id,
                    size: c.size,
                    order: c.order,
                    age: c.age,
                    codim: c.codim,
                    representative: c.representative,
                })
                .collect(),
        );
        self
    }

    pub fn with_betti(mut self, analysis: &OrbifoldAnalysis) -> Result<Self> {
        self.betti_orbifold = Some(analysis.orbifold_betti().dims);
        self.betti_hochschild = Some(analysis.hochschild_dims()?);
        Ok(self)
    }

    pub fn with_ring(mut self, analysis: &OrbifoldAnalysis) -> Result<Self> {
        let ring = analysis.gr_center_ring()?;
        let mut products = Vec::new();
        for i in 0..ring.rank() {
            for j in i..ring.rank() {
                if let Some(terms) = ring.constants.get(&(i, j)) {
                    products.push(RingProductRow {
                        left: i,
                        right: j,
                        terms: terms.iter().map(|(k, v)| (*k, v.clone())).collect(),
                    });
                }
            }
        }
        self.ring_basis = Some(ring.basis);
        self.ring_products = Some(products);
        Ok(self)
    }

    pub fn with_reflections(mut self, analysis: &OrbifoldAnalysis) -> Self {
        let classes = analysis.symplectic_reflections();
        let sizes = classes
            .iter()
            .map(|&c| analysis.classes()[c].size)
            .collect();
        let dim_c = classes.len();
        self.reflections = Some(ReflectionsReport {
            classes,
            sizes,
            dim_c,
        });
        self
    }

    pub fn with_verify(
        mut self,
        analysis: &OrbifoldAnalysis,
        skip: &BTreeSet<Check>,
        assoc_mode: Option<AssocMode>,
    ) -> Result<Self> {
        let mut rows = Vec::new();
        for check in Check::ALL {
            if skip.contains(&check) {
                rows.push(VerifyRow {
                    check,
                    status: VerifyStatus::Skipped,
                    mode: None,
                    checked: 0,
                    failures: 0,
                    counterexamples: Vec::new(),
                });
                continue;
            }
            let (outcome, mode) = match check {
                Check::AgeCodim => (analysis.verify_age_codim()?, None),
                Check::Transversality => (analysis.verify_trans_lemma()?, None),
                Check::Associativity => {
                    let mode = assoc_mode.unwrap_or(if analysis.group().order() <= 400 {
                        AssocMode::Elements
                    } else {
                        AssocMode::Classes
                    });
                    (analysis.verify_associativity(mode)?, Some(mode))
                }
                Check::BettiPaths => (analysis.verify_betti_paths()?, None),
                Check::Filtration => (analysis.verify_filtration(), None),
            };
            rows.push(VerifyRow {
                check,
                status: if outcome.passed() {
                    VerifyStatus::Pass
                } else {
                    VerifyStatus::Fail
                },
                mode,
                checked: outcome.checked,
                failures: outcome.failures,
                counterexamples: outcome.counterexamples,
            });
        }
        self.verify = Some(rows);
        Ok(self)
    }

    pub fn with_timing(mut self, elapsed: Duration, enabled: bool) -> Self {
        if enabled {
            self.timing = Some(elapsed);
        }
        self
    }

    /// False iff some verification row failed.
    pub fn all_pass(&self) -> bool {
        self.verify
            .as_ref()
            .map(|rows| rows.iter().all(|r| r.status != VerifyStatus::Fail))
            .unwrap_or(true)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Machine => self.render_machine(),
        }
    }

    fn render_machine(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        kv("schema", "1".into());
        kv("command", self.command.into());
        kv("target", self.target.clone());
        let s = &self.summary;
        kv("group.dim", s.dim.to_string());
        kv("group.order", s.order.to_string());
        kv("group.exponent", s.exponent.to_string());
        kv("group.conductor", s.conductor.to_string());
        kv("group.in_sl", s.in_sl.to_string());
        kv("group.in_sp", s.in_sp.to_string());
        kv("group.classes", s.num_classes.to_string());
        if let Some(rows) = &self.classes {
            for r in rows {
                let c = format!("class.c{}", r.id);
                kv(&format!("{c}.size"), r.size.to_string());
                kv(&format!("{c}.order"), r.order.to_string());
                kv(&format!("{c}.age"), r.age.to_string());
                kv(&format!("{c}.codim"), r.codim.to_string());
                kv(&format!("{c}.representative"), r.representative.to_string());
            }
        }
        if let Some(betti) = &self.betti_orbifold {
            for (deg, dim) in betti {
                kv(&format!("betti.orbifold.{deg}"), dim.to_string());
            }
        }
        if let Some(betti) = &self.betti_hochschild {
            for (deg, dim) in betti {
                kv(&format!("betti.hochschild.{deg}"), dim.to_string());
            }
        }
        if let Some(basis) = &self.ring_basis {
            for (class, degree) in basis {
                kv(&format!("ring.basis.c{class}.degree"), degree.to_string());
            }
        }
        if let Some(products) = &self.ring_products {
            for row in products {
                for (k, v) in &row.terms {
                    kv(
                        &format!("ring.c{}*c{}.c{k}", row.left, row.right),
                        v.to_string(),
                    );
                }
            }
        }
        if let Some(r) = &self.reflections {
            kv("reflections.count", r.classes.len().to_string());
            let ids: Vec<String> = r.classes.iter().map(|c| format!("c{c}")).collect();
            kv("reflections.classes", ids.join(","));
            for (c, size) in r.classes.iter().zip(&r.sizes) {
                kv(&format!("reflections.c{c}.size"), size.to_string());
            }
            kv("reflections.dim_c", r.dim_c.to_string());
        }
        if let Some(rows) = &self.verify {
            for r in rows {
                let base = format!("verify.{}", r.check.name());
                kv(&format!("{base}.status"), r.status.as_str().into());
                if let Some(mode) = r.mode {
                    kv(&format!("{base}.mode"), mode.as_str().into());
                }
                if r.status != VerifyStatus::Skipped {
                    kv(&format!("{base}.checked"), r.checked.to_string());
                    kv(&format!("{base}.failures"), r.failures.to_string());
                }
                for (i, ce) in r.counterexamples.iter().take(10).enumerate() {
                    kv(&format!("{base}.counterexample.{i}"), ce.clone());
                }
            }
        }
        kv(
            "result",
            if self.all_pass() { "pass" } else { "fail" }.into(),
        );
        if let Some(t) = self.timing {
            kv("timing.total_ms", t.as_millis().to_string());
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "group {}", self.target);
        let _ = writeln!(
            out,
            "  dim {}, order {}, exponent {}, conductor {}, {} classes",
            s.dim, s.order, s.exponent, s.conductor, s.num_classes
        );
        let _ = writeln!(
            out,
            "  volume-preserving (SL): {}   symplectic (Sp): {}",
            if s.in_sl { "yes" } else { "no" },
            if s.in_sp { "yes" } else { "no" }
        );
        if let Some(rows) = &self.classes {
            let _ = writeln!(out, "\nconjugacy classes (sorted by age, codim):");
            let _ = writeln!(
                out,
                "  {:<6} {:>6} {:>6} {:>5} {:>6} {:>14}",
                "class", "size", "order", "age", "codim", "representative"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "  {:<6} {:>6} {:>6} {:>5} {:>6} {:>14}",
                    format!("c{}", r.id),
                    r.size,
                    r.order,
                    r.age,
                    r.codim,
                    format!("g{}", r.representative)
                );
            }
        }
        if let (Some(orbifold), Some(hochschild)) = (&self.betti_orbifold, &self.betti_hochschild)
        {
            let line = |map: &BTreeMap<usize, usize>| {
                map.iter()
                    .map(|(d, v)| format!("b{d} = {v}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let _ = writeln!(out, "\nbetti numbers, orbifold grading (degree 2*age):");
            let _ = writeln!(out, "  {}", line(orbifold));
            let _ = writeln!(out, "betti numbers, fixed-space grading (degree codim):");
            let _ = writeln!(out, "  {}", line(hochschild));
            let _ = writeln!(
                out,
                "  gradings agree under degree = codim = 2*age: {}",
                if orbifold == hochschild { "yes" } else { "NO" }
            );
        }
        if let (Some(basis), Some(products)) = (&self.ring_basis, &self.ring_products) {
            let _ = writeln!(out, "\ngraded center ring:");
            let degrees: Vec<String> = basis
                .iter()
                .map(|(c, d)| format!("c{c} (deg {d})"))
                .collect();
            let _ = writeln!(out, "  basis: {}", degrees.join(", "));
            let mut printed = 0;
            for row in products {
                if row.left == 0 || row.right == 0 {
                    continue; // identity rows are forced
                }
                let terms: Vec<String> = row
                    .terms
                    .iter()
                    .map(|(k, v)| {
                        if v == &Rational::from_integer(1.into()) {
                            format!("c{k}")
                        } else {
                            format!("{v}*c{k}")
                        }
                    })
                    .collect();
                let _ = writeln!(out, "  c{} * c{} = {}", row.left, row.right, terms.join(" + "));
                printed += 1;
            }
            if printed == 0 {
                let _ = writeln!(
                    out,
                    "  all products of positive-degree classes vanish"
                );
            }
        }
        if let Some(r) = &self.reflections {
            let _ = writeln!(out, "\nsymplectic reflections (age-1 classes):");
            if r.classes.is_empty() {
                let _ = writeln!(out, "  none");
            }
            for (c, size) in r.classes.iter().zip(&r.sizes) {
                let _ = writeln!(out, "  c{c} ({size} elements)");
            }
            let _ = writeln!(out, "  deformation parameters (dim C): {}", r.dim_c);
        }
        if let Some(rows) = &self.verify {
            let _ = writeln!(out, "\nverification:");
            for r in rows {
                let detail = match r.status {
                    VerifyStatus::Skipped => "".to_string(),
                    _ => {
                        let mode = r
                            .mode
                            .map(|m| format!(", {} mode", m.as_str()))
                            .unwrap_or_default();
                        format!("  ({} checked{mode})", r.checked)
                    }
                };
                let _ = writeln!(
                    out,
                    "  {:<16} {:<8}{detail}",
                    r.check.name(),
                    r.status.as_str()
                );
                for ce in r.counterexamples.iter().take(10) {
                    let _ = writeln!(out, "    counterexample: {ce}");
                }
                if r.failures as usize > r.counterexamples.len() {
                    let _ = writeln!(out, "    ... {} failures total", r.failures);
                }
            }
        }
        let _ = writeln!(
            out,
            "\nresult: {}",
            if self.all_pass() { "pass" } else { "FAIL" }
        );
        if let Some(t) = self.timing {
            let _ = writeln!(out, "timing: {:.3?}", t);
        }
        out
    }
}

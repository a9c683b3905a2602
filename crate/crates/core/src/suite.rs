//! Reproduction suite: expected enumeration and classification counts for
//! the bundled quivers, plus the structural and homological checks that
//! accompany them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::classify::{classify_all, dedupe, family_counts, fingerprint, ClassificationRecord, Fingerprint, Homology, IsoClass, Verdict};
use crate::complex::TwoTermCategory;
use crate::endo::{BoundQuiverAlgebra, FinAlgebra};
use crate::error::Result;
use crate::fixtures::fixture;
use crate::module_cat::tau;
use crate::quiver::{dynkin_type, euler_form, parse_quiver, PathAlgebra, Quiver};
use crate::silting::{brute_force_silting, brute_force_tilting, enumerate_silting, enumerate_tilting, SiltingObject};

/// Expected values for one bundled quiver. An empty `families` list means
/// the split is not part of the suite.
#[derive(Clone, Copy, Debug)]
pub struct Expected {
    pub fixture: &'static str,
    pub silting: usize,
    pub tilting: usize,
    pub classes: usize,
    pub strictly_shod: usize,
    pub families: &'static [(&'static str, usize)],
}

pub const EXPECTED: &[Expected] = &[
    Expected { fixture: "a2", silting: 5, tilting: 2, classes: 2, strictly_shod: 0, families: &[] },
    Expected {
        fixture: "a3_linear",
        silting: 14,
        tilting: 5,
        classes: 5,
        strictly_shod: 0,
        families: &[("A3", 4), ("A2⊔A1", 1)],
    },
    Expected { fixture: "a3_sink", silting: 14, tilting: 5, classes: 6, strictly_shod: 0, families: &[] },
    Expected {
        fixture: "a4_linear",
        silting: 42,
        tilting: 14,
        classes: 15,
        strictly_shod: 0,
        families: &[("A4", 10), ("A3⊔A1", 4), ("A2⊔A2", 1)],
    },
    Expected { fixture: "a4_alternating", silting: 42, tilting: 14, classes: 17, strictly_shod: 0, families: &[] },
    Expected { fixture: "a4_sink", silting: 42, tilting: 14, classes: 16, strictly_shod: 0, families: &[] },
    Expected { fixture: "d4_first", silting: 50, tilting: 20, classes: 13, strictly_shod: 1, families: &[] },
    Expected { fixture: "d4_second", silting: 50, tilting: 20, classes: 11, strictly_shod: 0, families: &[] },
    Expected { fixture: "d5", silting: 182, tilting: 77, classes: 62, strictly_shod: 4, families: &[] },
];

/// The five strictly shod algebras as monomial algebras: name, the fixture
/// they arise from, the quiver and the zero paths (as arrow indices).
pub const STRICTLY_SHOD: &[(&str, &str, &str, &[&[usize]])] = &[
    ("s1", "d4_first", "vertices 1 2 3 4; arrows a:1->2 b:2->3 c:3->4", &[&[0, 1], &[1, 2]]),
    ("s2", "d5", "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5", &[&[0, 1, 2], &[2, 3]]),
    ("s3", "d5", "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:5->4", &[&[0, 1], &[1, 2]]),
    ("s4", "d5", "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:4->5", &[&[0, 1], &[1, 2]]),
    ("s5", "d5", "vertices 1 2 3 4 5; arrows a:1->2 b:2->3 c:3->4 d:2->5", &[&[0, 1], &[1, 2], &[0, 3]]),
];

/// A monomial bound quiver algebra from a quiver text and zero paths.
pub fn monomial_algebra(text: &str, zero_paths: &[&[usize]]) -> Result<BoundQuiverAlgebra> {
    let q = parse_quiver(text)?;
    let zero: Vec<Vec<usize>> = zero_paths.iter().map(|z| z.to_vec()).collect();
    BoundQuiverAlgebra::new(FinAlgebra::monomial(&PathAlgebra::new(&q), &zero)?)
}

/// Everything computed for one quiver.
pub struct Run {
    pub name: String,
    pub quiver: Quiver,
    pub category: TwoTermCategory,
    pub silting: Vec<SiltingObject>,
    pub tilting: Vec<SiltingObject>,
    pub records: Vec<ClassificationRecord>,
    pub classes: Vec<IsoClass>,
}

impl Run {
    pub fn new(name: &str, quiver: Quiver) -> Result<Self> {
        let category = TwoTermCategory::new(&quiver)?;
        let silting = enumerate_silting(&quiver)?;
        let tilting = enumerate_tilting(&quiver)?;
        let records = classify_all(&category, &silting)?;
        let classes = dedupe(&records);
        Ok(Self { name: name.to_string(), quiver, category, silting, tilting, records, classes })
    }

    pub fn strictly_shod_count(&self) -> usize {
        self.classes.iter().filter(|c| c.strictly_shod).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub fixture: String,
    pub quantity: String,
    pub expected: usize,
    pub computed: usize,
}

impl CountRow {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Self { number, title, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub counts: Vec<CountRow>,
    pub criteria: Vec<Criterion>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(Criterion::passed) && self.counts.iter().all(CountRow::passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let fw = self.counts.iter().map(|r| r.fixture.len()).max().unwrap_or(7).max(7);
        let qw = self.counts.iter().map(|r| r.quantity.chars().count()).max().unwrap_or(8).max(8);
        let pad = |x: &str, w: usize| format!("{x}{}", " ".repeat(w.saturating_sub(x.chars().count())));
        let _ = writeln!(s, "{}  {}  expected  computed", pad("fixture", fw), pad("quantity", qw));
        for r in &self.counts {
            let _ = writeln!(
                s,
                "{}  {}  {:>8}  {:>8}  {}",
                pad(&r.fixture, fw),
                pad(&r.quantity, qw),
                r.expected,
                r.computed,
                if r.passed() { "ok" } else { "MISMATCH" }
            );
        }
        s.push('\n');
        for c in &self.criteria {
            let _ = writeln!(
                s,
                "criterion {}: {} ({} checks): {}",
                c.number,
                c.title,
                c.checks,
                if c.passed() { "PASS" } else { "FAIL" }
            );
            for f in c.failures.iter().take(10) {
                let _ = writeln!(s, "    {f}");
            }
        }
        s
    }
}

fn count_rows(runs: &BTreeMap<String, Run>) -> Vec<CountRow> {
    let mut rows = Vec::new();
    for e in EXPECTED {
        let r = &runs[e.fixture];
        let mut push = |quantity: String, expected: usize, computed: usize| {
            rows.push(CountRow { fixture: e.fixture.to_string(), quantity, expected, computed })
        };
        push("silting".into(), e.silting, r.silting.len());
        push("tilting".into(), e.tilting, r.tilting.len());
        push("classes".into(), e.classes, r.classes.len());
        push("strictly shod".into(), e.strictly_shod, r.strictly_shod_count());
        let fams = family_counts(&r.classes);
        for (label, n) in e.families {
            push(format!("type {label}"), *n, fams.get(*label).copied().unwrap_or(0));
        }
    }
    rows
}

fn enumeration_counts(rows: &[CountRow]) -> Criterion {
    let mut c = Criterion::new(1, "enumeration counts");
    for r in rows.iter().filter(|r| r.quantity == "silting" || r.quantity == "tilting") {
        c.check(r.passed(), || format!("{} {}: expected {}, got {}", r.fixture, r.quantity, r.expected, r.computed));
    }
    c
}

fn classification_counts(rows: &[CountRow]) -> Criterion {
    let mut c = Criterion::new(2, "silted algebra classes");
    for r in rows.iter().filter(|r| r.quantity != "silting" && r.quantity != "tilting") {
        c.check(r.passed(), || format!("{} {}: expected {}, got {}", r.fixture, r.quantity, r.expected, r.computed));
    }
    c
}

fn strictly_shod_structure(runs: &BTreeMap<String, Run>) -> Result<Criterion> {
    let mut c = Criterion::new(3, "strictly shod algebras s1-s5");
    let mut expected: BTreeMap<&str, Vec<(&str, Fingerprint)>> = BTreeMap::new();
    for (name, fix, text, zero) in STRICTLY_SHOD {
        let b = monomial_algebra(text, zero)?;
        let h = Homology::compute(b.algebra())?;
        c.check(h.global_dimension() == 3, || format!("{name} has global dimension {}", h.global_dimension()));
        expected.entry(fix).or_default().push((name, fingerprint(&b, &h)));
    }
    for (fix, run) in runs {
        let mut want: Vec<&Fingerprint> = expected.get(fix.as_str()).map_or(Vec::new(), |v| v.iter().map(|x| &x.1).collect());
        let mut got: Vec<&Fingerprint> = Vec::new();
        for class in run.classes.iter().filter(|c| c.strictly_shod) {
            let r = &run.records[class.members[0]];
            got.push(&r.fingerprint);
            for b in &r.blocks {
                c.check(b.verdict == Verdict::StrictlyShod && b.global_dimension == 3, || {
                    format!("{fix}: strictly shod class {} has a block of global dimension {}", r.object.display(&run.category), b.global_dimension)
                });
            }
        }
        want.sort();
        got.sort();
        c.check(want == got, || format!("{fix}: strictly shod fingerprints differ from the expected presentations"));
    }
    Ok(c)
}

fn oracle_equivalence(runs: &BTreeMap<String, Run>) -> Criterion {
    let mut c = Criterion::new(4, "recursion equals brute force");
    for (fix, run) in runs {
        let silting = brute_force_silting(&run.category);
        let tilting = brute_force_tilting(run.category.module_category());
        c.check(silting == run.silting, || format!("{fix}: silting sets differ"));
        c.check(tilting == run.tilting, || format!("{fix}: tilting sets differ"));
    }
    c
}

fn homological_invariants(runs: &BTreeMap<String, Run>) -> Result<Criterion> {
    let mut c = Criterion::new(5, "homological invariants");
    for (fix, run) in runs {
        let q = &run.quiver;
        let mods = run.category.module_category();
        for a in 0..mods.len() {
            let da = &mods.module(a).dim;
            let by_coxeter = tau(q, da)?;
            let by_ext = mods.tau_dim_by_ext(a);
            c.check(by_coxeter.clone().unwrap_or_else(|| crate::quiver::DimVector::zero(q.vertex_count())) == by_ext, || {
                format!("{fix}: τ({da}) disagrees between Coxeter matrix and Ext")
            });
            for b in 0..mods.len() {
                let db = &mods.module(b).dim;
                let euler = mods.hom_dim(a, b) as i64 - mods.ext1_dim(a, b) as i64;
                c.check(euler == euler_form(q, da, db), || format!("{fix}: Euler identity fails for ({da}, {db})"));
                if let Some(t) = mods.tau(a) {
                    c.check(mods.ext1_dim(a, b) == mods.hom_dim(b, t), || format!("{fix}: AR formula fails for ({da}, {db})"));
                }
            }
        }
        for r in &run.records {
            let idx = r.object.indices(&run.category)?;
            let total: usize = idx.iter().flat_map(|&a| idx.iter().map(move |&b| (a, b))).map(|(a, b)| run.category.hom_dim(a, b)).sum();
            let name = || r.object.display(&run.category);
            c.check(r.algebra.dimension() == total, || format!("{fix}: dim End({}) ≠ sum of Hom dimensions", name()));
            c.check(r.algebra.arrow_counts() == r.homology.ext_matrix(1), || format!("{fix}: arrows ≠ Ext¹ for {}", name()));
            c.check(r.algebra.relation_counts() == r.homology.ext_matrix(2), || format!("{fix}: relations ≠ Ext² for {}", name()));
        }
    }
    Ok(c)
}

fn duality(runs: &BTreeMap<String, Run>, opposite: &BTreeMap<String, Run>) -> Criterion {
    let mut c = Criterion::new(6, "invariance under the opposite quiver");
    for (fix, run) in runs {
        let op = &opposite[fix];
        c.check(run.silting.len() == op.silting.len(), || format!("{fix}: silting {} vs {}", run.silting.len(), op.silting.len()));
        c.check(run.tilting.len() == op.tilting.len(), || format!("{fix}: tilting {} vs {}", run.tilting.len(), op.tilting.len()));
        c.check(run.classes.len() == op.classes.len(), || format!("{fix}: classes {} vs {}", run.classes.len(), op.classes.len()));
        c.check(family_counts(&run.classes) == family_counts(&op.classes), || format!("{fix}: family counts differ"));
    }
    c
}

fn observation(runs: &BTreeMap<String, Run>) -> Result<Criterion> {
    let mut c = Criterion::new(7, "observation: tilted of type Q");
    for (fix, run) in runs {
        let ty = dynkin_type(&run.quiver)?.to_string();
        let mods = run.category.module_category();
        for r in &run.records {
            let projective_free = r
                .object
                .modules
                .iter()
                .all(|d| mods.index_of(d).is_some_and(|k| !mods.is_projective(k)));
            if r.object.shifted.is_empty() || projective_free {
                c.check(r.label() == ty, || format!("{fix}: {} is {}, expected {ty}", r.object.display(&run.category), r.label()));
            }
        }
    }
    Ok(c)
}

/// Runs every bundled quiver and its opposite through enumeration and
/// classification, then evaluates all checks.
pub fn run_suite() -> Result<SuiteReport> {
    let names: Vec<&str> = crate::fixtures::FIXTURES.iter().map(|(n, _)| *n).collect();
    let runs: BTreeMap<String, Run> = names
        .par_iter()
        .map(|n| Run::new(n, fixture(n)).map(|r| (n.to_string(), r)))
        .collect::<Result<_>>()?;
    let opposite: BTreeMap<String, Run> = names
        .par_iter()
        .map(|n| Run::new(n, fixture(n).opposite()).map(|r| (n.to_string(), r)))
        .collect::<Result<_>>()?;
    let counts = count_rows(&runs);
    let criteria = vec![
        enumeration_counts(&counts),
        classification_counts(&counts),
        strictly_shod_structure(&runs)?,
        oracle_equivalence(&runs),
        homological_invariants(&runs)?,
        duality(&runs, &opposite),
        observation(&runs)?,
    ];
    Ok(SuiteReport { counts, criteria })
}

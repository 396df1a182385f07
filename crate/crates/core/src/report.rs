//! Axiom identifiers and check reports.

use std::fmt;
use std::time::{Duration, Instant};

use crate::lin::{KeyFmt, Lin};

macro_rules! axioms {
    ($($variant:ident => $name:literal, $desc:literal;)*) => {
        /// Every identity the checkers evaluate, in evaluation order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum AxiomId { $($variant),* }

        impl AxiomId {
            pub const ALL: &'static [AxiomId] = &[$(AxiomId::$variant),*];

            pub fn as_str(&self) -> &'static str {
                match self { $(AxiomId::$variant => $name),* }
            }

            pub fn description(&self) -> &'static str {
                match self { $(AxiomId::$variant => $desc),* }
            }

            pub fn from_name(s: &str) -> Option<AxiomId> {
                match s { $($name => Some(AxiomId::$variant),)* _ => None }
            }
        }
    };
}

axioms! {
    AAssoc => "A-ASSOC", "(xy)z = x(yz)";
    AUnit => "A-UNIT", "1x = x = x1";
    CCoassoc => "C-COASSOC", "(Δ⊗id)Δ = (id⊗Δ)Δ";
    CCounit => "C-COUNIT", "(ε⊗id)Δ = id = (id⊗ε)Δ";
    HDeltaMult => "H-DELTA-MULT", "Δ(xy) = Δ(x)Δ(y)";
    HEpsMult => "H-EPS-MULT", "ε(xy) = ε(x)ε(y)";
    HUnit => "H-UNIT", "Δ1 = 1⊗1, ε(1) = 1";
    HAntipode => "H-ANTIPODE", "x1 S(x2) = ε(x)1 = S(x1) x2";
    PCoalg => "P-COALG", "⇀ is a coalgebra map, ε multiplicative, Δ1 = 1⊗1";
    PS => "P-S", "x1·S(x2) = ε(x)1 = S(x1)·x2";
    PDot => "P-DOT", "x⇀(y·z) = (x1⇀y)·(x2⇀z)";
    PAssoc => "P-ASSOC", "x⇀(y⇀z) = (x1·(x2⇀y))⇀z";
    PConv => "P-CONV", "α_{x1}β_{x2} = β_{x1}α_{x2} = ε(x)id";
    PDelta => "P-DELTA", "Δ(x·y) = x1·α_{x2}(β_{x4}(y1)) ⊗ x3·y2";
    PAnti => "P-ANTI", "ΔS⇀(x) = S⇀(x2)⊗S⇀(x1)";
    PMp5 => "P-MP5", "(x1⇀y1)⊗(x2↼y2) = (x2⇀y2)⊗(x1↼y1)";
    LU => "L-U", "x⇀1 = ε(x)1";
    L1Act => "L-1ACT", "1⇀x = x";
    LSlin => "L-SLIN", "S(x⇀y) = x⇀S(y)";
    LBeta => "L-BETA", "β_x = α_{S⇀(x)}";
    LDa => "L-DA", "Δα_x(y) = α_{x1}(y1)⊗α_{x2}(y2)";
    LDb => "L-DB", "Δβ_x(y) = β_{x2}(y1)⊗β_{x1}(y2)";
    LMa => "L-MA", "α_x(y·z) = α_{x1}(y)·α_{x2}(z)";
    LMb => "L-MB", "β_x(y·z) = β_{x2}(y)·β_{x1}(z)";
    LAnti2 => "L-ANTI2", "β_{x2}(S(x3))·β_{x1}(x4) = ε(x)1";
    RecHarp => "REC-HARP", "x⇀y = S(x1)·(x2•y)";
    RecDot => "REC-DOT", "x·y = x1•(S⇀(x2)⇀y)";
    RecAssoc => "REC-ASSOC", "x⇀(y⇀z) = (x•y)⇀z";
    YdAction => "YD-ACTION", "⇀ is a unital associative action";
    YdComodule => "YD-COMODULE", "ρ is coassociative and counital";
    YdCompat => "YD-COMPAT", "ρ(a⇀v) = a1 v₋₁ T(a3) ⊗ a2⇀v₀";
    YdDelta => "YD-DELTA", "Δ(vw) = (m⊗m)(id⊗σ⊗id)(Δv⊗Δw)";
    YdColin => "YD-COLIN", "m, 1, Δ, ε are colinear";
    YdModAlg => "YD-MODALG", "a⇀(vw) = (a1⇀v)(a2⇀w), a⇀1 = ε(a)1";
    YdModCoalg => "YD-MODCOALG", "Δ(a⇀v) = (a1⇀v1)⊗(a2⇀v2), ε(a⇀v) = ε(a)ε(v)";
    YdAntipode => "YD-ANTIPODE", "S is the convolution inverse of id";
    PlClosure => "PL-CLOSURE", "bracket and action close on the subspace";
    PlLie => "PL-LIE", "[,] is antisymmetric and satisfies Jacobi";
    Pl1 => "PL-1", "x⇀[y,z] = [x⇀y,z] + [y,x⇀z]";
    Pl2 => "PL-2", "([x,y] + x⇀y - y⇀x)⇀z = x⇀(y⇀z) - y⇀(x⇀z)";
    PlSubjac => "PL-SUBJAC", "the subadjacent bracket satisfies Jacobi";
    HbHopf => "HB-HOPF", "(H,•,T) is a Hopf algebra";
    HbYd => "HB-YD", "(H,·,S) is a Hopf algebra in YD over (H,•,T)";
    HbMp5 => "HB-MP5", "MP-5 for ↼ built from T";
    HbCompat => "HB-COMPAT", "a•(b·c) = (a1•b)·S(a2)·(a3•c)";
    MpHopf => "MP-HOPF", "(H,•,T) is a Hopf algebra";
    MpAct => "MP-ACT", "⇀ is a left action and ↼ a right action";
    MpModc => "MP-MODC", "⇀ and ↼ are coalgebra maps";
    Mp1 => "MP-1", "a⇀1 = ε(a)1";
    Mp2 => "MP-2", "1↼a = ε(a)1";
    Mp3 => "MP-3", "a⇀(b•c) = (a1⇀b1)•((a2↼b2)⇀c)";
    Mp4 => "MP-4", "(a•b)↼c = (a↼(b1⇀c1))•(b2↼c2)";
    MpBc => "MP-BC", "a•b = (a1⇀b1)•(a2↼b2)";
    Mp5 => "MP-5", "(a1⇀b1)⊗(a2↼b2) = (a2⇀b2)⊗(a1↼b1)";
    RbHopf => "RB-HOPF", "H is a Hopf algebra";
    RbKalg => "RB-KALG", "K is an algebra and a coalgebra";
    RbCoact => "RB-COACT", "coaction has the shape required by the category";
    RbBimon => "RB-BIMON", "K is a bimonoid in YD over H";
    RbCoalg => "RB-COALG", "R is a unital coalgebra map";
    Rb1 => "RB-1", "R(a)R(b) = R(a1·(R(a2)⇀b))";
    Rb2 => "RB-2", "braided symmetry of the RB-descendent coaction";
    Rb3 => "RB-3", "R bijective and (a1⇀R⁻¹S(a2))·R⁻¹(a3) = ε(a)1";
    RbSk => "RB-SK", "S_K(a) = R(a1)⇀R⁻¹S_H R(a2) is an antipode of K";
    RbMorF => "RB-MOR-F", "f is an algebra and coalgebra map";
    RbMorG => "RB-MOR-G", "g is an algebra and coalgebra map";
    RbMorR => "RB-MOR-R", "f R = R' g";
    RbMorAct => "RB-MOR-ACT", "g(a⇀b) = f(a)⇀'g(b)";
    PmAlg => "PM-ALG", "g is an algebra map";
    PmCoalg => "PM-COALG", "g is a coalgebra map";
    PmAct => "PM-ACT", "g(a⇀b) = g(a)⇀'g(b)";
    RbGGrp => "RB-GGRP", "both tables are groups";
    RbGAct => "RB-GACT", "φ is an action by automorphisms";
    RbGW1 => "RB-GW1", "R(h)R(k) = R(h·φ(R(h))k)";
    RbLLie => "RB-LLIE", "both brackets are Lie";
    RbLDer => "RB-LDER", "φ is an action by derivations";
    RbLW1 => "RB-LW1", "[Rx,Ry] = R(φ(Rx)y - φ(Ry)x + [x,y])";
    RbLPost => "RB-LPOST", "x⇀y = φ(Rx)y is post-Lie";
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skip",
        }
    }
}

/// First failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "({}) lhs={} rhs={}", idx.join(","), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub axiom: AxiomId,
    pub status: Status,
    pub checked: usize,
    pub failed: usize,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl Entry {
    pub fn skipped(axiom: AxiomId, reason: impl Into<String>) -> Self {
        Entry {
            axiom,
            status: Status::Skipped,
            checked: 0,
            failed: 0,
            witness: None,
            detail: Some(reason.into()),
            elapsed: Duration::ZERO,
        }
    }

    /// A single yes/no verdict with an explanation on failure.
    pub fn verdict(axiom: AxiomId, ok: bool, detail: impl Into<String>) -> Self {
        Entry {
            axiom,
            status: if ok { Status::Pass } else { Status::Fail },
            checked: 1,
            failed: usize::from(!ok),
            witness: None,
            detail: if ok { None } else { Some(detail.into()) },
            elapsed: Duration::ZERO,
        }
    }

    /// Summarizes a sub-report as one entry; the witness is the first failure.
    pub fn aggregate(axiom: AxiomId, sub: &CheckReport) -> Self {
        let failing = sub.entries.iter().find(|e| e.status == Status::Fail);
        Entry {
            axiom,
            status: if sub.passed() { Status::Pass } else { Status::Fail },
            checked: sub.entries.iter().map(|e| e.checked).sum(),
            failed: sub.entries.iter().map(|e| e.failed).sum(),
            witness: failing.and_then(|e| e.witness.clone()),
            detail: failing.map(|e| match &e.detail {
                Some(d) => format!("{}: {d}", e.axiom),
                None => e.axiom.to_string(),
            }),
            elapsed: sub.entries.iter().map(|e| e.elapsed).sum(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates instances of one identity.
pub struct AxiomRun {
    axiom: AxiomId,
    checked: usize,
    failed: usize,
    witness: Option<Witness>,
    start: Instant,
}

impl AxiomRun {
    pub fn new(axiom: AxiomId) -> Self {
        AxiomRun { axiom, checked: 0, failed: 0, witness: None, start: Instant::now() }
    }

    /// Records one instance `lhs == rhs` at basis indices `idx`.
    pub fn compare<K: Ord + Clone + KeyFmt>(&mut self, idx: &[usize], lhs: &Lin<K>, rhs: &Lin<K>) -> bool {
        self.checked += 1;
        let ok = lhs == rhs;
        if !ok {
            self.fail(idx, lhs.to_string(), rhs.to_string());
        }
        ok
    }

    pub fn record(&mut self, idx: &[usize], ok: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(idx, lhs(), rhs());
        }
        ok
    }

    fn fail(&mut self, idx: &[usize], lhs: String, rhs: String) {
        self.failed += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness { indices: idx.to_vec(), lhs, rhs });
        }
    }

    pub fn finish(self) -> Entry {
        Entry {
            axiom: self.axiom,
            status: if self.failed == 0 { Status::Pass } else { Status::Fail },
            checked: self.checked,
            failed: self.failed,
            witness: self.witness,
            detail: None,
            elapsed: self.start.elapsed(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub entries: Vec<Entry>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
        self.notes.extend(other.notes);
    }

    /// True when every entry passed; skipped entries count as not passed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn get(&self, id: AxiomId) -> Option<&Entry> {
        self.entries.iter().find(|e| e.axiom == id)
    }

    pub fn status(&self, id: AxiomId) -> Option<Status> {
        self.get(id).map(|e| e.status)
    }

    pub fn all_pass(&self, ids: &[AxiomId]) -> bool {
        ids.iter().all(|id| self.status(*id) == Some(Status::Pass))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// One line per entry: `axiom_id status checked=N failed=M witness`.
    /// Contains no timings, so it is byte-stable across runs.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{} {} checked={} failed={}", e.axiom, e.status.as_str(), e.checked, e.failed));
            match (&e.witness, &e.detail) {
                (Some(w), _) => out.push_str(&format!(" witness={w}")),
                (None, Some(d)) => out.push_str(&format!(" detail={d}")),
                (None, None) => out.push_str(" -"),
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("# {n}\n"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{:<12} {:<4} {:>7} checked {:>5} failed {:>9.3} ms  {}\n",
                e.axiom.as_str(),
                e.status.as_str(),
                e.checked,
                e.failed,
                e.elapsed.as_secs_f64() * 1e3,
                e.axiom.description()
            ));
            if let Some(w) = &e.witness {
                out.push_str(&format!("    witness {w}\n"));
            }
            if let Some(d) = &e.detail {
                out.push_str(&format!("    {d}\n"));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        let fails = self.failures().count();
        let skips = self.entries.iter().filter(|e| e.status == Status::Skipped).count();
        out.push_str(&format!(
            "{} axioms: {} passed, {} failed, {} skipped\n",
            self.entries.len(),
            self.entries.len() - fails - skips,
            fails,
            skips
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip_and_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for id in AxiomId::ALL {
            assert!(seen.insert(id.as_str()), "duplicate name {}", id);
            assert_eq!(AxiomId::from_name(id.as_str()), Some(*id));
        }
    }

    #[test]
    fn first_witness_is_kept() {
        let f = crate::FieldSpec::RATIONALS;
        let mut run = AxiomRun::new(AxiomId::PDot);
        run.compare(&[0], &Lin::basis(0usize, f), &Lin::basis(0usize, f));
        run.compare(&[1, 2], &Lin::basis(1usize, f), &Lin::zero());
        run.compare(&[3], &Lin::basis(3usize, f), &Lin::zero());
        let e = run.finish();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.failed, 2);
        assert_eq!(e.witness.unwrap().indices, vec![1, 2]);
    }
}

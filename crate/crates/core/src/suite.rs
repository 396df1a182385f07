//! Per-kind check suites and derivations between file kinds.

use std::fmt;
use std::str::FromStr;

use crate::brace::{check_matched_pair, check_yd_brace, from_matched_pair, functor_f, functor_g, to_matched_pair};
use crate::error::{Error, Result};
use crate::examples::build_group_rb_linearization;
use crate::format::{Structure, StructureFile};
use crate::hopf::{check_algebra, check_hopf};
use crate::report::{AxiomId, CheckReport};
use crate::rota::{
    check_group_rb, check_lie_rb, check_rel_rb, descendent_hopf, functor_l, functor_m, functor_r, Category, RbMode,
};
use crate::ydpost::{check_post_lie, check_yd_hopf_monoid, check_yd_post_hopf, extract_post_lie, subadjacent_hopf};

/// Runs every check that applies to the structure's kind.
///
/// For post-Hopf data this is the post-Hopf suite followed by the
/// Yetter-Drinfeld module axioms of the Hopf-monoid check.
pub fn full_suite(s: &Structure) -> CheckReport {
    match s {
        Structure::Algebra(a) => check_algebra(a),
        Structure::Hopf(h) => check_hopf(h),
        Structure::YdPost(p) => {
            let mut report = check_yd_post_hopf(p);
            let monoid = check_yd_hopf_monoid(p);
            for e in monoid.entries {
                if report.get(e.axiom).is_none() {
                    report.push(e);
                }
            }
            report.notes.extend(monoid.notes);
            report
        }
        Structure::YdBrace(b) => check_yd_brace(b),
        Structure::MatchedPair(mp) => check_matched_pair(mp),
        Structure::RelRb(r) => check_rel_rb(r, RbMode::Full),
        Structure::GroupRb(g) => check_group_rb(g),
        Structure::LieRb(l) => check_lie_rb(l),
        Structure::PostLie(p) => check_post_lie(p),
    }
}

/// Keeps only the listed axioms, in report order.
pub fn restrict(report: CheckReport, ids: &[AxiomId]) -> CheckReport {
    CheckReport { entries: report.entries.into_iter().filter(|e| ids.contains(&e.axiom)).collect(), notes: report.notes }
}

/// Parses a comma-separated axiom list such as `P-DOT,P-CONV`.
pub fn parse_axioms(list: &str) -> Result<Vec<AxiomId>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| AxiomId::from_name(s).ok_or_else(|| Error::Parse(format!("unknown axiom id `{s}`"))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Subadjacent,
    Brace,
    PostHopf,
    MatchedPair,
    RbL,
    PostM,
    PostR,
    Sk,
    PostLie,
}

pub const TARGETS: &[(&str, Target)] = &[
    ("subadjacent", Target::Subadjacent),
    ("brace", Target::Brace),
    ("posthopf", Target::PostHopf),
    ("matchedpair", Target::MatchedPair),
    ("rb_l", Target::RbL),
    ("post_m", Target::PostM),
    ("post_r", Target::PostR),
    ("sk", Target::Sk),
    ("postlie", Target::PostLie),
];

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TARGETS
            .iter()
            .find(|(n, _)| *n == s)
            .map(|&(_, t)| t)
            .ok_or_else(|| Error::Parse(format!("unknown derive target `{s}`")))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = TARGETS.iter().find(|(_, t)| t == self).map(|(n, _)| *n).unwrap_or("?");
        f.write_str(name)
    }
}

/// Applies a construction to a file whose own suite passes, and re-checks
/// the result before returning it. Parameters are carried over unchanged.
pub fn derive(file: &StructureFile, target: Target) -> Result<StructureFile> {
    let source = full_suite(&file.structure);
    if !source.passed() {
        let ids: Vec<&str> = source.failures().map(|e| e.axiom.as_str()).collect();
        return Err(Error::Precondition(format!("source fails {}", ids.join(", "))));
    }
    let kind = file.structure.kind();
    let mismatch = || Error::Precondition(format!("cannot derive {target} from a {kind} file"));
    let with_params = |mut s: crate::ydpost::YDPostHopf| {
        s.params = file.params.clone();
        Structure::YdPost(s)
    };
    let out = match (&file.structure, target) {
        (Structure::YdPost(s), Target::Subadjacent) => Structure::Hopf(subadjacent_hopf(s)?),
        (Structure::YdPost(s), Target::Brace) => Structure::YdBrace(functor_f(s)?),
        (Structure::YdPost(s), Target::MatchedPair) => Structure::MatchedPair(to_matched_pair(s)?),
        (Structure::YdPost(s), Target::RbL) => Structure::RelRb(functor_l(s)?),
        (Structure::YdPost(s), Target::PostLie) => Structure::PostLie(extract_post_lie(s)?),
        (Structure::YdBrace(b), Target::PostHopf) => with_params(functor_g(b)?),
        (Structure::MatchedPair(mp), Target::PostHopf) => with_params(from_matched_pair(mp)?),
        (Structure::GroupRb(g), Target::PostHopf) => with_params(build_group_rb_linearization(g, file.field)?),
        (Structure::RelRb(r), Target::PostM) => with_params(functor_m(r)?),
        (Structure::RelRb(r), Target::PostR) => {
            let cat = if r.r_inverse()?.is_some() { Category::D } else { Category::CPrime };
            with_params(functor_r(r, cat)?)
        }
        (Structure::RelRb(r), Target::Sk) => Structure::Hopf(descendent_hopf(r)?),
        (Structure::LieRb(l), Target::PostLie) => Structure::PostLie(l.post_lie()),
        _ => return Err(mismatch()),
    };
    let check = full_suite(&out);
    if !check.passed() {
        let ids: Vec<&str> = check.failures().map(|e| e.axiom.as_str()).collect();
        return Err(Error::Internal(format!("derived {target} fails {}", ids.join(", "))));
    }
    let mut derived = StructureFile::new(file.field, out);
    derived.params = file.params.clone();
    Ok(derived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::build_sweedler;
    use crate::field::{FieldSpec, Scalar};

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn sweedler_file() -> StructureFile {
        StructureFile::new(Q, Structure::YdPost(build_sweedler(Scalar::from_int(1, Q), Q).unwrap()))
    }

    #[test]
    fn suite_has_no_duplicate_ids() {
        let r = full_suite(&sweedler_file().structure);
        assert!(r.passed());
        let mut ids: Vec<_> = r.entries.iter().map(|e| e.axiom).collect();
        let n = ids.len();
        ids.sort_by_key(|a| a.as_str());
        ids.dedup();
        assert_eq!(ids.len(), n);
        assert!(r.get(AxiomId::YdAction).is_some());
    }

    #[test]
    fn round_trips_are_byte_identical() {
        let f = sweedler_file();
        let text = f.emit();
        for (there, back) in [(Target::MatchedPair, Target::PostHopf), (Target::Brace, Target::PostHopf)] {
            let mid = derive(&f, there).unwrap();
            let mid = StructureFile::parse(&mid.emit()).unwrap();
            assert_eq!(derive(&mid, back).unwrap().emit(), text, "{there}");
        }
        let rb = derive(&f, Target::RbL).unwrap();
        assert_eq!(derive(&rb, Target::PostM).unwrap().emit(), text);
        assert_eq!(derive(&rb, Target::PostR).unwrap().emit(), text);
    }

    #[test]
    fn wrong_kind_and_failing_source() {
        let f = sweedler_file();
        assert!(matches!(derive(&f, Target::Sk), Err(Error::Precondition(_))));
        let Structure::YdPost(mut s) = f.structure.clone() else { unreachable!() };
        s.action.table[2][2] = s.action.table[2][2].neg();
        let bad = StructureFile::new(Q, Structure::YdPost(s));
        assert!(matches!(derive(&bad, Target::Subadjacent), Err(Error::Precondition(_))));
    }

    #[test]
    fn axiom_lists() {
        assert_eq!(parse_axioms("P-DOT, P-CONV").unwrap(), vec![AxiomId::PDot, AxiomId::PConv]);
        assert!(parse_axioms("P-NOPE").is_err());
        let r = restrict(full_suite(&sweedler_file().structure), &[AxiomId::PConv]);
        assert_eq!(r.entries.len(), 1);
    }
}

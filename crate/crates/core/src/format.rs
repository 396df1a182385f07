//! Line-oriented text format for every structure kind.
//!
//! ```text
//! kind ydpost
//! field Q
//! param k 1
//!
//! [carrier]
//! dim 4
//! label 1 g
//! unit 0 1
//! mul 1 1 0 1
//! counit 0 1
//! comul 2 2 0 1
//! antipode 2 3 -1
//!
//! [action 4 4]
//! 1 2 2 -1
//! ```
//!
//! `mul i j k c` means `e_i·e_j` has coefficient `c` on `e_k`; `comul i p q c`
//! puts `c` on `e_p⊗e_q` in `Δ(e_i)`; tensor sections list `i j k c` for
//! `e_i ⇀ e_j`. Zero coefficients are omitted. `#` starts a comment. Entries
//! may come in any order but a repeated index tuple is an error; emission is
//! sorted, so parse∘emit is the identity on emitted files.

use std::collections::{BTreeMap, BTreeSet};

use crate::brace::{MatchedPair, YDBrace};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{ActionTensor, AlgebraData, BraidedPair, CoalgebraData, HopfData, LinMap};
use crate::lin::{Elem, Elem2};
use crate::rota::{GroupRB, LieRB, RelRB};
use crate::yd::Coaction;
use crate::ydpost::{PostLieData, YDPostHopf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(AlgebraData),
    Hopf(HopfData),
    YdPost(YDPostHopf),
    YdBrace(YDBrace),
    MatchedPair(MatchedPair),
    RelRb(RelRB),
    GroupRb(GroupRB),
    LieRb(LieRB),
    PostLie(PostLieData),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Hopf(_) => "hopf",
            Structure::YdPost(_) => "ydpost",
            Structure::YdBrace(_) => "ydbrace",
            Structure::MatchedPair(_) => "matchedpair",
            Structure::RelRb(_) => "relrb",
            Structure::GroupRb(_) => "grouprb",
            Structure::LieRb(_) => "lierb",
            Structure::PostLie(_) => "postlie",
        }
    }
}

pub const KINDS: &[&str] =
    &["algebra", "hopf", "ydpost", "ydbrace", "matchedpair", "relrb", "grouprb", "lierb", "postlie"];

/// A parsed document. For `ydpost` the parameters live in the structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub field: FieldSpec,
    pub params: BTreeMap<String, Scalar>,
    pub structure: Structure,
}

impl StructureFile {
    pub fn new(field: FieldSpec, structure: Structure) -> Self {
        let params = match &structure {
            Structure::YdPost(s) => s.params.clone(),
            _ => BTreeMap::new(),
        };
        StructureFile { field, params, structure }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn emit(&self) -> String {
        emit(self)
    }
}

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

struct Line {
    no: usize,
    key: String,
    args: Vec<String>,
}

struct Section {
    name: String,
    dims: Vec<usize>,
    no: usize,
    lines: Vec<Line>,
}

struct Doc {
    kind: String,
    field: FieldSpec,
    params: BTreeMap<String, Scalar>,
    sections: Vec<Section>,
}

impl Doc {
    fn take(&mut self, name: &str) -> Option<Section> {
        let i = self.sections.iter().position(|s| s.name == name)?;
        Some(self.sections.remove(i))
    }

    fn need(&mut self, name: &str) -> Result<Section> {
        self.take(name).ok_or_else(|| Error::Parse(format!("missing section [{name}] for kind {}", self.kind)))
    }

    fn finish(self) -> Result<()> {
        match self.sections.first() {
            Some(s) => Err(perr(s.no, format!("unexpected section [{}] for kind {}", s.name, self.kind))),
            None => Ok(()),
        }
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let t: Vec<&str> = l.split_whitespace().collect();
        (!t.is_empty()).then_some((i + 1, t))
    })
}

fn parse_doc(text: &str) -> Result<Doc> {
    let mut kind = None;
    let mut field = None;
    let mut params = BTreeMap::new();
    let mut raw_params = Vec::new();
    let mut sections: Vec<Section> = Vec::new();
    for (no, t) in tokens(text) {
        if t[0].starts_with('[') {
            let joined = t.join(" ");
            let inner = joined
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| perr(no, "malformed section header"))?;
            let mut parts = inner.split_whitespace();
            let name = parts.next().ok_or_else(|| perr(no, "empty section header"))?.to_string();
            let dims = parts
                .map(|p| p.parse::<usize>().map_err(|_| perr(no, format!("bad dimension `{p}`"))))
                .collect::<Result<_>>()?;
            if sections.iter().any(|s| s.name == name) {
                return Err(perr(no, format!("duplicate section [{name}]")));
            }
            sections.push(Section { name, dims, no, lines: Vec::new() });
            continue;
        }
        let line = Line { no, key: t[0].to_string(), args: t[1..].iter().map(|s| s.to_string()).collect() };
        match sections.last_mut() {
            Some(s) => s.lines.push(line),
            None => match (line.key.as_str(), line.args.as_slice()) {
                ("kind", [k]) => {
                    if kind.replace(k.clone()).is_some() {
                        return Err(perr(no, "kind given twice"));
                    }
                }
                ("field", [f]) => {
                    if field.replace(f.parse::<FieldSpec>().map_err(|e| perr(no, e))?).is_some() {
                        return Err(perr(no, "field given twice"));
                    }
                }
                ("param", [name, value]) => raw_params.push((no, name.clone(), value.clone())),
                _ => return Err(perr(no, format!("unexpected header line `{}`", t.join(" ")))),
            },
        }
    }
    let kind = kind.ok_or_else(|| Error::Parse("missing `kind` line".into()))?;
    if !KINDS.contains(&kind.as_str()) {
        return Err(Error::Parse(format!("unknown kind `{kind}`")));
    }
    let field = field.ok_or_else(|| Error::Parse("missing `field` line".into()))?;
    for (no, name, value) in raw_params {
        let v = Scalar::parse(&value, field).map_err(|e| perr(no, e))?;
        if params.insert(name.clone(), v).is_some() {
            return Err(perr(no, format!("parameter {name} given twice")));
        }
    }
    Ok(Doc { kind, field, params, sections })
}

fn index(line: &Line, s: &str, bound: usize) -> Result<usize> {
    let i: usize = s.parse().map_err(|_| perr(line.no, format!("bad index `{s}`")))?;
    if i >= bound {
        return Err(perr(line.no, format!("index {i} out of range (dimension {bound})")));
    }
    Ok(i)
}

fn arity(line: &Line, n: usize) -> Result<()> {
    if line.args.len() != n {
        return Err(perr(line.no, format!("`{}` expects {n} fields, got {}", line.key, line.args.len())));
    }
    Ok(())
}

/// Tracks index tuples already seen per key.
#[derive(Default)]
struct Seen(BTreeSet<(String, Vec<usize>)>);

impl Seen {
    fn insert(&mut self, line: &Line, key: &str, idx: Vec<usize>) -> Result<()> {
        if !self.0.insert((key.to_string(), idx.clone())) {
            return Err(perr(line.no, format!("duplicate `{key}` entry {idx:?}")));
        }
        Ok(())
    }
}

/// Parses `n` indices with the given bounds followed by a coefficient.
fn entry(line: &Line, bounds: &[usize], field: FieldSpec, seen: &mut Seen, key: &str) -> Result<(Vec<usize>, Scalar)> {
    arity(line, bounds.len() + 1)?;
    let idx = bounds.iter().zip(&line.args).map(|(&b, s)| index(line, s, b)).collect::<Result<Vec<_>>>()?;
    let c = Scalar::parse(&line.args[bounds.len()], field).map_err(|e| perr(line.no, e))?;
    seen.insert(line, key, idx.clone())?;
    Ok((idx, c))
}

struct Space {
    algebra: AlgebraData,
    coalgebra: Option<CoalgebraData>,
    antipode: Option<LinMap>,
}

fn parse_space(sec: &Section, field: FieldSpec) -> Result<Space> {
    let dim_line = sec
        .lines
        .first()
        .filter(|l| l.key == "dim")
        .ok_or_else(|| perr(sec.no, format!("section [{}] must start with `dim`", sec.name)))?;
    arity(dim_line, 1)?;
    let d: usize = dim_line.args[0].parse().map_err(|_| perr(dim_line.no, "bad dimension"))?;
    let mut labels: Vec<String> = (0..d).map(|i| format!("e{i}")).collect();
    let mut unit = Elem::zero();
    let mut mul = vec![vec![Elem::zero(); d]; d];
    let mut counit = vec![field.zero(); d];
    let mut comul = vec![Elem2::zero(); d];
    let mut antipode = vec![Elem::zero(); d];
    let (mut has_coalg, mut has_s) = (false, false);
    let mut seen = Seen::default();
    for line in &sec.lines[1..] {
        match line.key.as_str() {
            "label" => {
                if line.args.len() != 2 {
                    return Err(perr(line.no, "`label` expects an index and a name without spaces"));
                }
                let i = index(line, &line.args[0], d)?;
                seen.insert(line, "label", vec![i])?;
                labels[i] = line.args[1].clone();
            }
            "unit" => {
                let (i, c) = entry(line, &[d], field, &mut seen, "unit")?;
                unit.add_term(i[0], c);
            }
            "mul" => {
                let (i, c) = entry(line, &[d, d, d], field, &mut seen, "mul")?;
                mul[i[0]][i[1]].add_term(i[2], c);
            }
            "counit" => {
                let (i, c) = entry(line, &[d], field, &mut seen, "counit")?;
                counit[i[0]] = c;
                has_coalg = true;
            }
            "comul" => {
                let (i, c) = entry(line, &[d, d, d], field, &mut seen, "comul")?;
                comul[i[0]].add_term((i[1], i[2]), c);
                has_coalg = true;
            }
            "antipode" => {
                let (i, c) = entry(line, &[d, d], field, &mut seen, "antipode")?;
                antipode[i[0]].add_term(i[1], c);
                has_s = true;
            }
            "dim" => return Err(perr(line.no, "dimension given twice")),
            k => return Err(perr(line.no, format!("unknown key `{k}` in [{}]", sec.name))),
        }
    }
    Ok(Space {
        algebra: AlgebraData { field, labels, mul, unit },
        coalgebra: has_coalg.then_some(CoalgebraData { field, comul, counit }),
        antipode: has_s.then_some(LinMap { dom: d, cod: d, images: antipode }),
    })
}

fn dims<const N: usize>(sec: &Section) -> Result<[usize; N]> {
    sec.dims
        .clone()
        .try_into()
        .map_err(|_| perr(sec.no, format!("section [{}] needs {N} dimensions", sec.name)))
}

fn parse_tensor(sec: &Section, field: FieldSpec) -> Result<ActionTensor> {
    let [a, t] = dims::<2>(sec)?;
    let mut out = ActionTensor::zero(field, a, t);
    let mut seen = Seen::default();
    for line in &sec.lines {
        let mut l = Line { no: line.no, key: sec.name.clone(), args: vec![line.key.clone()] };
        l.args.extend(line.args.iter().cloned());
        let (i, c) = entry(&l, &[a, t, t], field, &mut seen, &sec.name)?;
        out.table[i[0]][i[1]].add_term(i[2], c);
    }
    Ok(out)
}

fn parse_map(sec: &Section, field: FieldSpec) -> Result<LinMap> {
    let [dom, cod] = dims::<2>(sec)?;
    let mut images = vec![Elem::zero(); dom];
    let mut seen = Seen::default();
    for line in &sec.lines {
        let mut l = Line { no: line.no, key: sec.name.clone(), args: vec![line.key.clone()] };
        l.args.extend(line.args.iter().cloned());
        let (i, c) = entry(&l, &[dom, cod], field, &mut seen, &sec.name)?;
        images[i[0]].add_term(i[1], c);
    }
    Ok(LinMap { dom, cod, images })
}

fn parse_coaction(sec: &Section, field: FieldSpec) -> Result<Coaction> {
    let [dk, dh] = dims::<2>(sec)?;
    let mut out = vec![Elem2::zero(); dk];
    let mut seen = Seen::default();
    for line in &sec.lines {
        let mut l = Line { no: line.no, key: sec.name.clone(), args: vec![line.key.clone()] };
        l.args.extend(line.args.iter().cloned());
        let (i, c) = entry(&l, &[dk, dh, dk], field, &mut seen, &sec.name)?;
        out[i[0]].add_term((i[1], i[2]), c);
    }
    Ok(out)
}

fn parse_group(sec: &Section) -> Result<(Vec<Vec<usize>>, Vec<String>)> {
    let [n] = dims::<1>(sec)?;
    let mut labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut table = vec![vec![None; n]; n];
    let mut seen = Seen::default();
    for line in &sec.lines {
        match line.key.as_str() {
            "label" => {
                arity(line, 2)?;
                let i = index(line, &line.args[0], n)?;
                seen.insert(line, "label", vec![i])?;
                labels[i] = line.args[1].clone();
            }
            "mul" => {
                arity(line, 3)?;
                let i = index(line, &line.args[0], n)?;
                let j = index(line, &line.args[1], n)?;
                let k = index(line, &line.args[2], n)?;
                seen.insert(line, "mul", vec![i, j])?;
                table[i][j] = Some(k);
            }
            k => return Err(perr(line.no, format!("unknown key `{k}` in [{}]", sec.name))),
        }
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, k)| k.ok_or_else(|| perr(sec.no, format!("product {i}·{j} missing in [{}]", sec.name))))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok((table, labels))
}

fn parse_index_map(sec: &Section, arity_in: usize) -> Result<BTreeMap<Vec<usize>, usize>> {
    let mut out = BTreeMap::new();
    let bounds: Vec<usize> = sec.dims.clone();
    if bounds.len() != arity_in + 1 {
        return Err(perr(sec.no, format!("section [{}] needs {} dimensions", sec.name, arity_in + 1)));
    }
    for line in &sec.lines {
        let mut args = vec![line.key.clone()];
        args.extend(line.args.iter().cloned());
        let l = Line { no: line.no, key: sec.name.clone(), args };
        arity(&l, arity_in + 1)?;
        let idx: Vec<usize> = (0..arity_in).map(|i| index(&l, &l.args[i], bounds[i])).collect::<Result<_>>()?;
        let v = index(&l, &l.args[arity_in], bounds[arity_in])?;
        if out.insert(idx.clone(), v).is_some() {
            return Err(perr(l.no, format!("duplicate entry {idx:?} in [{}]", sec.name)));
        }
    }
    Ok(out)
}

fn complete(map: &BTreeMap<Vec<usize>, usize>, key: Vec<usize>, sec: &str) -> Result<usize> {
    map.get(&key).copied().ok_or_else(|| Error::Parse(format!("entry {key:?} missing in [{sec}]")))
}

fn hopf_from(space: Space, name: &str) -> Result<HopfData> {
    let coalgebra = space.coalgebra.ok_or_else(|| Error::Parse(format!("[{name}] lacks a coalgebra")))?;
    let antipode = space.antipode.ok_or_else(|| Error::Parse(format!("[{name}] lacks an antipode")))?;
    Ok(HopfData { algebra: space.algebra, coalgebra, antipode })
}

fn pair_from(space: Space, name: &str) -> Result<BraidedPair> {
    Ok(hopf_from(space, name)?.as_pair())
}

fn table_of(t: ActionTensor) -> Vec<Vec<Elem>> {
    t.table
}

pub fn parse(text: &str) -> Result<StructureFile> {
    let mut doc = parse_doc(text)?;
    let f = doc.field;
    let structure = match doc.kind.as_str() {
        "algebra" => Structure::Algebra(parse_space(&doc.need("carrier")?, f)?.algebra),
        "hopf" => Structure::Hopf(hopf_from(parse_space(&doc.need("carrier")?, f)?, "carrier")?),
        "ydpost" => {
            let carrier = pair_from(parse_space(&doc.need("carrier")?, f)?, "carrier")?;
            let action = parse_tensor(&doc.need("action")?, f)?;
            let beta = doc.take("beta").map(|s| parse_tensor(&s, f)).transpose()?;
            let mut s = YDPostHopf::new(carrier, action, beta);
            s.params = doc.params.clone();
            Structure::YdPost(s)
        }
        "ydbrace" => Structure::YdBrace(YDBrace {
            dot_side: pair_from(parse_space(&doc.need("dot")?, f)?, "dot")?,
            bullet_side: hopf_from(parse_space(&doc.need("bullet")?, f)?, "bullet")?,
        }),
        "matchedpair" => Structure::MatchedPair(MatchedPair {
            hopf: hopf_from(parse_space(&doc.need("hopf")?, f)?, "hopf")?,
            left: parse_tensor(&doc.need("left")?, f)?,
            right: parse_tensor(&doc.need("right")?, f)?,
        }),
        "relrb" => {
            let h = hopf_from(parse_space(&doc.need("h")?, f)?, "h")?;
            let k = parse_space(&doc.need("k")?, f)?;
            Structure::RelRb(RelRB {
                h,
                k_coalg: k.coalgebra.ok_or_else(|| Error::Parse("[k] lacks a coalgebra".into()))?,
                k_alg: k.algebra,
                k_antipode: k.antipode,
                action: parse_tensor(&doc.need("action")?, f)?,
                coaction: doc.take("coaction").map(|s| parse_coaction(&s, f)).transpose()?,
                r_map: parse_map(&doc.need("rmap")?, f)?,
            })
        }
        "grouprb" => {
            let (g_mul, g_labels) = parse_group(&doc.need("g")?)?;
            let (h_mul, h_labels) = parse_group(&doc.need("h")?)?;
            let phi_sec = doc.need("phi")?;
            let phi_map = parse_index_map(&phi_sec, 2)?;
            let r_sec = doc.need("r")?;
            let r_map = parse_index_map(&r_sec, 1)?;
            let (m, n) = (g_mul.len(), h_mul.len());
            if phi_sec.dims != [m, n, n] || r_sec.dims != [n, m] {
                return Err(perr(phi_sec.no, "[phi] must be [phi |G| |H| |H|] and [r] must be [r |H| |G|]"));
            }
            let phi = (0..m)
                .map(|g| (0..n).map(|h| complete(&phi_map, vec![g, h], "phi")).collect())
                .collect::<Result<_>>()?;
            let r = (0..n).map(|h| complete(&r_map, vec![h], "r")).collect::<Result<_>>()?;
            Structure::GroupRb(GroupRB { g_mul, g_labels, h_mul, h_labels, phi, r })
        }
        "lierb" => Structure::LieRb(LieRB {
            field: f,
            g_bracket: table_of(parse_tensor(&doc.need("gbracket")?, f)?),
            h_bracket: table_of(parse_tensor(&doc.need("hbracket")?, f)?),
            phi: table_of(parse_tensor(&doc.need("phi")?, f)?),
            r: parse_map(&doc.need("rmap")?, f)?,
        }),
        "postlie" => {
            let bracket = parse_tensor(&doc.need("bracket")?, f)?;
            let action = parse_tensor(&doc.need("action")?, f)?;
            let dim = bracket.target_dim;
            if action.target_dim != dim || bracket.acting_dim != dim || action.acting_dim != dim {
                return Err(Error::Parse("[bracket] and [action] must both be n × n".into()));
            }
            let embedding = match doc.take("embedding") {
                Some(s) => parse_map(&s, f)?.images,
                None => (0..dim).map(|i| Elem::basis(i, f)).collect(),
            };
            Structure::PostLie(PostLieData { field: f, dim, bracket: bracket.table, action: action.table, embedding })
        }
        _ => unreachable!("kind validated"),
    };
    let params = doc.params.clone();
    doc.finish()?;
    Ok(StructureFile { field: f, params, structure })
}

struct Out(String);

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.0.push_str(s.as_ref());
        self.0.push('\n');
    }

    fn section(&mut self, header: String) {
        self.0.push('\n');
        self.line(header);
    }

    fn space(&mut self, name: &str, a: &AlgebraData, c: Option<&CoalgebraData>, s: Option<&LinMap>) {
        let d = a.dim();
        self.section(format!("[{name}]"));
        self.line(format!("dim {d}"));
        for (i, l) in a.labels.iter().enumerate() {
            self.line(format!("label {i} {l}"));
        }
        for (i, c) in &a.unit {
            self.line(format!("unit {i} {c}"));
        }
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &a.mul[i][j] {
                    self.line(format!("mul {i} {j} {k} {c}"));
                }
            }
        }
        if let Some(co) = c {
            for (i, e) in co.counit.iter().enumerate() {
                if !e.is_zero() {
                    self.line(format!("counit {i} {e}"));
                }
            }
            for (i, t) in co.comul.iter().enumerate() {
                for ((p, q), c) in t {
                    self.line(format!("comul {i} {p} {q} {c}"));
                }
            }
        }
        if let Some(s) = s {
            for (i, img) in s.images.iter().enumerate() {
                for (k, c) in img {
                    self.line(format!("antipode {i} {k} {c}"));
                }
            }
        }
    }

    fn tensor(&mut self, name: &str, rows: usize, cols: usize, table: &[Vec<Elem>]) {
        self.section(format!("[{name} {rows} {cols}]"));
        for (i, row) in table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v {
                    self.line(format!("{i} {j} {k} {c}"));
                }
            }
        }
    }

    fn map(&mut self, name: &str, m: &LinMap) {
        self.section(format!("[{name} {} {}]", m.dom, m.cod));
        for (i, img) in m.images.iter().enumerate() {
            for (k, c) in img {
                self.line(format!("{i} {k} {c}"));
            }
        }
    }

    fn group(&mut self, name: &str, table: &[Vec<usize>], labels: &[String]) {
        self.section(format!("[{name} {}]", table.len()));
        for (i, l) in labels.iter().enumerate() {
            self.line(format!("label {i} {l}"));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, k) in row.iter().enumerate() {
                self.line(format!("mul {i} {j} {k}"));
            }
        }
    }
}

pub fn emit(file: &StructureFile) -> String {
    let mut o = Out(String::new());
    o.line(format!("kind {}", file.structure.kind()));
    o.line(format!("field {}", file.field));
    let params = match &file.structure {
        Structure::YdPost(s) => &s.params,
        _ => &file.params,
    };
    for (k, v) in params {
        o.line(format!("param {k} {v}"));
    }
    match &file.structure {
        Structure::Algebra(a) => o.space("carrier", a, None, None),
        Structure::Hopf(h) => o.space("carrier", &h.algebra, Some(&h.coalgebra), Some(&h.antipode)),
        Structure::YdPost(s) => {
            let c = &s.carrier;
            o.space("carrier", &c.algebra, Some(&c.coalgebra), Some(&c.s_map));
            let d = s.dim();
            o.tensor("action", d, d, &s.action.table);
            if let Some(b) = &s.beta {
                o.tensor("beta", d, d, &b.table);
            }
        }
        Structure::YdBrace(b) => {
            let (p, h) = (&b.dot_side, &b.bullet_side);
            o.space("dot", &p.algebra, Some(&p.coalgebra), Some(&p.s_map));
            o.space("bullet", &h.algebra, Some(&h.coalgebra), Some(&h.antipode));
        }
        Structure::MatchedPair(mp) => {
            let h = &mp.hopf;
            o.space("hopf", &h.algebra, Some(&h.coalgebra), Some(&h.antipode));
            o.tensor("left", h.dim(), h.dim(), &mp.left.table);
            o.tensor("right", h.dim(), h.dim(), &mp.right.table);
        }
        Structure::RelRb(r) => {
            o.space("h", &r.h.algebra, Some(&r.h.coalgebra), Some(&r.h.antipode));
            o.space("k", &r.k_alg, Some(&r.k_coalg), r.k_antipode.as_ref());
            o.tensor("action", r.dim_h(), r.dim_k(), &r.action.table);
            if let Some(co) = &r.coaction {
                o.section(format!("[coaction {} {}]", r.dim_k(), r.dim_h()));
                for (i, t) in co.iter().enumerate() {
                    for ((p, q), c) in t {
                        o.line(format!("{i} {p} {q} {c}"));
                    }
                }
            }
            o.map("rmap", &r.r_map);
        }
        Structure::GroupRb(g) => {
            o.group("g", &g.g_mul, &g.g_labels);
            o.group("h", &g.h_mul, &g.h_labels);
            let (m, n) = (g.g_mul.len(), g.h_mul.len());
            o.section(format!("[phi {m} {n} {n}]"));
            for (x, row) in g.phi.iter().enumerate() {
                for (h, k) in row.iter().enumerate() {
                    o.line(format!("{x} {h} {k}"));
                }
            }
            o.section(format!("[r {n} {m}]"));
            for (h, x) in g.r.iter().enumerate() {
                o.line(format!("{h} {x}"));
            }
        }
        Structure::LieRb(l) => {
            let (m, n) = (l.g_bracket.len(), l.h_bracket.len());
            o.tensor("gbracket", m, m, &l.g_bracket);
            o.tensor("hbracket", n, n, &l.h_bracket);
            o.tensor("phi", m, n, &l.phi);
            o.map("rmap", &l.r);
        }
        Structure::PostLie(p) => {
            o.tensor("bracket", p.dim, p.dim, &p.bracket);
            o.tensor("action", p.dim, p.dim, &p.action);
            let ambient = p.embedding.iter().flat_map(|v| v.keys()).max().map_or(p.dim, |&k| (k + 1).max(p.dim));
            let identity = p.embedding.iter().enumerate().all(|(i, v)| *v == Elem::basis(i, p.field));
            if !identity {
                o.map("embedding", &LinMap { dom: p.dim, cod: ambient, images: p.embedding.clone() });
            }
        }
    }
    o.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{build_sweedler, cyclic_group, sweedler_hopf, trivial_action_rb};
    use crate::rota::functor_l;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn round_trip(f: &StructureFile) {
        let text = f.emit();
        let back = StructureFile::parse(&text).unwrap();
        assert_eq!(&back, f);
        assert_eq!(back.emit(), text);
    }

    #[test]
    fn round_trips() {
        let s = build_sweedler(Scalar::from_int(1, Q), Q).unwrap();
        round_trip(&StructureFile::new(Q, Structure::YdPost(s.clone())));
        round_trip(&StructureFile::new(Q, Structure::Hopf(sweedler_hopf(Q))));
        round_trip(&StructureFile::new(Q, Structure::Algebra(sweedler_hopf(Q).algebra)));
        round_trip(&StructureFile::new(Q, Structure::RelRb(functor_l(&s).unwrap())));
        let (t, l) = cyclic_group(3);
        round_trip(&StructureFile::new(Q, Structure::GroupRb(trivial_action_rb(&t, &l))));
    }

    #[test]
    fn sweedler_file_has_params_and_sorted_entries() {
        let s = build_sweedler(Scalar::from_int(1, Q), Q).unwrap();
        let text = StructureFile::new(Q, Structure::YdPost(s)).emit();
        assert!(text.starts_with("kind ydpost\nfield Q\nparam k 1\n"));
        assert!(text.contains("\nmul 2 2 0 1\nmul 2 2 1 -1\n"));
    }

    const MINIMAL: &str = "kind algebra\nfield Q\n[carrier]\ndim 1\nunit 0 1\nmul 0 0 0 1\n";

    #[test]
    fn lenient_whitespace_and_comments() {
        let text = "# header\nkind   algebra\nfield Q\n\n[carrier]\n  dim 1  \nmul 0 0 0 1 # product\nunit 0 1\n";
        assert_eq!(parse(text).unwrap(), parse(MINIMAL).unwrap());
    }

    #[test]
    fn diagnostics() {
        let err = |t: &str| parse(t).unwrap_err().to_string();
        assert!(err("").contains("kind"));
        assert!(err(&format!("{MINIMAL}mul 0 0 0 2\n")).contains("line 7: duplicate"));
        assert!(err(&MINIMAL.replace("mul 0 0 0 1", "mul 0 0 1 1")).contains("out of range"));
        assert!(err(&MINIMAL.replace("unit 0 1", "unit 0 x")).contains("line 5"));
        assert!(err(&MINIMAL.replace("kind algebra", "kind widget")).contains("unknown kind"));
        assert!(err(&MINIMAL.replace("field Q", "field Fp:4")).contains("line 2"));
        assert!(err(&format!("{MINIMAL}[extra]\n")).contains("unexpected section"));
    }

    #[test]
    fn prime_field_coefficients_are_reduced() {
        let text = MINIMAL.replace("field Q", "field Fp:5").replace("unit 0 1", "unit 0 6");
        let f = parse(&text).unwrap();
        let Structure::Algebra(a) = &f.structure else { panic!() };
        assert!(a.unit.get(&0).unwrap().is_one());
    }
}

//! Validation and execution of one scenario.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::model::{rows, BlockLit, Command, Scenario, Subject, Verb};
use crate::error::{Error, Result};
use crate::involution::{components, AfInvolution, BlockSpec};
use crate::lie::LieAlgebra;
use crate::linalg::{Rational, RealSubspace};
use crate::manin::link::{check_link_conditions, lift, LinkDatum};
use crate::manin::{
    build_lagrangian, decompose_lagrangian, descend, verify_manin_triple, Certificate, LagrangianDatum, ManinForm,
    ManinTriple,
};
use crate::roots::parabolic::all_simple;
use crate::roots::{Parabolic, Side, SimpleSet};
use crate::tower::{build_tower, socle, Tower};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandReport {
    pub index: usize,
    pub verb: &'static str,
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bind: Option<String>,
    pub expect: bool,
    pub status: Status,
    /// Named clauses in evaluation order.
    pub certificate: Vec<(String, bool)>,
    pub facts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub real_basis: Vec<String>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub commands: Vec<CommandReport>,
}

impl ScenarioReport {
    fn failed_early(source: &str, scenario: Option<String>, code: i32, msg: String) -> Self {
        ScenarioReport {
            source: source.into(),
            scenario,
            algebra: None,
            real_basis: vec![],
            exit_code: code,
            error: Some(msg),
            commands: vec![],
        }
    }
}

pub fn rational_json(q: &Rational) -> Value {
    let n = serde_json::Number::from_str(&q.numer().to_string()).expect("integer literal");
    let d = serde_json::Number::from_str(&q.denom().to_string()).expect("integer literal");
    json!([n, d])
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

/// `{dim, basis}` with RREF rows; the basis re-parses as a subspace literal.
pub fn subspace_json(s: &RealSubspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis().iter().map(|r| vector_json(r)).collect::<Vec<_>>() })
}

fn set_json(s: &SimpleSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Subspace,
    Lagrangian,
    Triple,
    Link,
    Involution,
    Tower,
}

#[derive(Clone, Debug)]
enum Item {
    Subspace(RealSubspace),
    Lagrangian(LagrangianDatum),
    Triple { frame: SimpleSet, i: String, i_prime: String },
    Resolved(ManinTriple),
    Link { side: Side, parabolic: Parabolic, sigma: AfInvolution, f_tilde: String },
    Involution(AfInvolution),
    Tower(Box<Tower>),
}

impl Item {
    fn kind(&self) -> Kind {
        match self {
            Item::Subspace(_) => Kind::Subspace,
            Item::Lagrangian(_) => Kind::Lagrangian,
            Item::Triple { .. } | Item::Resolved(_) => Kind::Triple,
            Item::Link { .. } => Kind::Link,
            Item::Involution(_) => Kind::Involution,
            Item::Tower(_) => Kind::Tower,
        }
    }
}

struct Context {
    g: LieAlgebra,
    form: ManinForm,
    items: BTreeMap<String, Item>,
    verbose: bool,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn subspace_literal(g: &LieAlgebra, name: &str, basis: &[super::model::RowLit]) -> Result<RealSubspace> {
    let rs = rows(basis);
    if let Some(r) = rs.iter().find(|r| r.len() != g.real_dim()) {
        return Err(invalid(format!(
            "{name}: basis row has {} entries, the algebra has real dimension {}",
            r.len(),
            g.real_dim()
        )));
    }
    Ok(RealSubspace::span(g.real_dim(), &rs))
}

fn frame_of(g: &LieAlgebra, frame: &Option<SimpleSet>) -> SimpleSet {
    frame.clone().unwrap_or_else(|| all_simple(g))
}

fn sigma_of(g: &LieAlgebra, subset: &SimpleSet, blocks: &[BlockLit]) -> Result<AfInvolution> {
    let specs: Vec<BlockSpec> = blocks.iter().map(BlockLit::to_spec).collect();
    AfInvolution::assemble(g, &components(g, subset), &specs)
}

fn setup(s: &Scenario) -> Result<Context> {
    let g = LieAlgebra::from_names(&s.algebra.simple_types, s.algebra.center_rank)?;
    let lambda: Vec<_> = s.form.lambda.iter().map(|z| z.0.clone()).collect();
    let c = 2 * g.center_rank();
    if s.form.center_gram.len() != c || s.form.center_gram.iter().any(|r| r.len() != c) {
        return Err(Error::InvalidForm(format!("center Gram matrix must be {c}x{c}")));
    }
    let form = ManinForm::new(&g, &lambda, &s.form.center_matrix(c))?;
    let mut items = BTreeMap::new();
    for (name, subj) in &s.subjects {
        let wrap = |e: Error| invalid(format!("subject `{name}`: {e}"));
        let item = match subj {
            Subject::Subspace { basis } => Item::Subspace(subspace_literal(&g, name, basis)?),
            Subject::Lagrangian { frame, side, subset, sigma, i_a } => {
                let parabolic = Parabolic::standard(&g, &frame_of(&g, frame), *side, subset).map_err(wrap)?;
                let sigma = sigma_of(&g, subset, sigma).map_err(wrap)?;
                let i_a = subspace_literal(&g, name, i_a)?;
                Item::Lagrangian(LagrangianDatum { parabolic, sigma, i_a })
            }
            Subject::Triple { frame, i, i_prime } => {
                Item::Triple { frame: frame_of(&g, frame), i: i.clone(), i_prime: i_prime.clone() }
            }
            Subject::Link { frame, side, subset, sigma, f_tilde } => {
                let parabolic = Parabolic::standard(&g, &frame_of(&g, frame), *side, subset).map_err(wrap)?;
                let sigma = sigma_of(&g, subset, sigma).map_err(wrap)?;
                Item::Link { side: *side, parabolic, sigma, f_tilde: f_tilde.clone() }
            }
            Subject::Involution { subset, blocks } => {
                let subset = frame_of(&g, subset);
                if let Some(&bad) = subset.iter().find(|&&i| i >= g.semisimple_rank()) {
                    return Err(invalid(format!("subject `{name}`: simple root index {bad} out of range")));
                }
                Item::Involution(sigma_of(&g, &subset, blocks).map_err(wrap)?)
            }
        };
        items.insert(name.clone(), item);
    }
    // references between subjects
    for (name, item) in &items {
        let refs: Vec<&String> = match item {
            Item::Triple { i, i_prime, .. } => vec![i, i_prime],
            Item::Link { f_tilde, .. } => vec![f_tilde],
            _ => vec![],
        };
        for r in refs {
            match items.get(r).map(Item::kind) {
                Some(Kind::Subspace | Kind::Lagrangian) => {}
                Some(_) => return Err(invalid(format!("subject `{name}`: `{r}` is not a subspace or Lagrangian"))),
                None => return Err(invalid(format!("subject `{name}`: undefined subject `{r}`"))),
            }
        }
    }
    Ok(Context { g, form, items, verbose: false })
}

fn signature_of(verb: Verb) -> (&'static [&'static [Kind]], Option<Kind>) {
    use Kind::*;
    match verb {
        Verb::VerifyForm | Verb::IsSpecial => (&[], None),
        Verb::BuildLagrangian => (&[&[Lagrangian]], Some(Subspace)),
        Verb::VerifyTriple => (&[&[Triple]], None),
        Verb::Descend => (&[&[Triple]], Some(Triple)),
        Verb::CheckLink => (&[&[Triple], &[Link], &[Link]], None),
        Verb::Lift => (&[&[Triple], &[Link], &[Link]], Some(Triple)),
        Verb::Tower => (&[&[Triple]], Some(Tower)),
        Verb::Socle => (&[&[Tower, Triple]], None),
        Verb::CommonFixedVector => (&[&[Involution], &[Involution]], None),
    }
}

fn check_commands(ctx: &Context, commands: &[Command]) -> Result<()> {
    let mut kinds: BTreeMap<&str, Kind> = ctx.items.iter().map(|(n, i)| (n.as_str(), i.kind())).collect();
    for (k, c) in commands.iter().enumerate() {
        let (params, out) = signature_of(c.verb);
        if c.args.len() != params.len() {
            return Err(invalid(format!(
                "command {k} ({}): expected {} arguments, got {}",
                c.verb.name(),
                params.len(),
                c.args.len()
            )));
        }
        for (a, allowed) in c.args.iter().zip(params) {
            match kinds.get(a.as_str()) {
                None => return Err(invalid(format!("command {k} ({}): undefined subject `{a}`", c.verb.name()))),
                Some(kind) if !allowed.contains(kind) => {
                    return Err(invalid(format!(
                        "command {k} ({}): `{a}` is a {kind:?}, expected one of {allowed:?}",
                        c.verb.name()
                    )))
                }
                _ => {}
            }
        }
        if let Some(b) = &c.bind {
            let Some(out) = out else {
                return Err(invalid(format!("command {k} ({}): produces nothing to bind", c.verb.name())));
            };
            if kinds.insert(b.as_str(), out).is_some() {
                return Err(invalid(format!("command {k}: name `{b}` is already defined")));
            }
        }
    }
    Ok(())
}

struct Outcome {
    certificate: Certificate,
    facts: BTreeMap<String, Value>,
    witnesses: BTreeMap<String, Value>,
    bound: Option<Item>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { certificate: Certificate::default(), facts: BTreeMap::new(), witnesses: BTreeMap::new(), bound: None }
    }

    fn fact(&mut self, k: &str, v: Value) {
        self.facts.insert(k.into(), v);
    }

    fn witness(&mut self, k: &str, v: Value) {
        self.witnesses.insert(k.into(), v);
    }
}

impl Context {
    fn subspace(&self, name: &str) -> Result<RealSubspace> {
        match self.items.get(name) {
            Some(Item::Subspace(s)) => Ok(s.clone()),
            Some(Item::Lagrangian(d)) => build_lagrangian(&self.g, &self.form, d),
            _ => Err(invalid(format!("`{name}` is not a subspace"))),
        }
    }

    fn triple(&self, name: &str) -> Result<ManinTriple> {
        match self.items.get(name) {
            Some(Item::Resolved(t)) => Ok(t.clone()),
            Some(Item::Triple { frame, i, i_prime }) => {
                Ok(ManinTriple::new(frame.clone(), self.subspace(i)?, self.subspace(i_prime)?))
            }
            _ => Err(invalid(format!("`{name}` is not a triple"))),
        }
    }

    fn link(&self, name: &str) -> Result<LinkDatum> {
        match self.items.get(name) {
            Some(Item::Link { side, parabolic, sigma, f_tilde }) => Ok(LinkDatum {
                side: *side,
                parabolic: parabolic.clone(),
                sigma: sigma.clone(),
                f_tilde: self.subspace(f_tilde)?,
            }),
            _ => Err(invalid(format!("`{name}` is not a link"))),
        }
    }

    fn involution(&self, name: &str) -> Result<&AfInvolution> {
        match self.items.get(name) {
            Some(Item::Involution(s)) => Ok(s),
            _ => Err(invalid(format!("`{name}` is not an involution"))),
        }
    }

    fn tower(&self, name: &str) -> Result<Tower> {
        match self.items.get(name) {
            Some(Item::Tower(t)) => Ok((**t).clone()),
            _ => build_tower(&self.g, &self.form, &self.triple(name)?),
        }
    }

    fn execute(&self, c: &Command) -> Result<Outcome> {
        let g = &self.g;
        let form = &self.form;
        let mut o = Outcome::new();
        match c.verb {
            Verb::VerifyForm => {
                let sig = form.signature();
                o.certificate
                    .push("signature_split", sig.positive == g.dim() && sig.negative == g.dim() && sig.zero == 0);
                o.certificate.push("invariant", form.is_invariant(g));
                o.fact("signature", json!([sig.positive, sig.negative, sig.zero]));
                o.fact("real_dim", json!(g.real_dim()));
            }
            Verb::IsSpecial => {
                o.certificate.push("special", form.is_special(g));
            }
            Verb::BuildLagrangian => {
                let Some(Item::Lagrangian(d)) = self.items.get(&c.args[0]) else { unreachable!("checked") };
                let i = build_lagrangian(g, form, d)?;
                o.certificate.push("lagrangian", true);
                let back = decompose_lagrangian(g, form, &d.parabolic.frame, &i, d.parabolic.side)
                    .and_then(|e| build_lagrangian(g, form, &e));
                o.certificate.push("roundtrip", back.as_ref() == Ok(&i));
                o.fact("dim", json!(i.dim()));
                o.witness("i", subspace_json(&i));
                o.bound = Some(Item::Subspace(i));
            }
            Verb::VerifyTriple => {
                let t = self.triple(&c.args[0])?;
                o.certificate = verify_manin_triple(g, form, &t);
                o.fact("frame", set_json(&t.frame));
                o.fact("dims", json!([t.i.dim(), t.i_prime.dim()]));
            }
            Verb::Descend => {
                let t = self.triple(&c.args[0])?;
                let d = descend(g, form, &t)?;
                o.certificate = verify_manin_triple(g, form, &d.predecessor);
                o.fact("upper_subset", set_json(&d.data.upper.parabolic.subset));
                o.fact("lower_subset", set_json(&d.data.lower.parabolic.subset));
                o.fact("predecessor_frame", set_json(&d.predecessor.frame));
                o.witness("i_1", subspace_json(&d.predecessor.i));
                o.witness("i_prime_1", subspace_json(&d.predecessor.i_prime));
                o.witness("h", subspace_json(d.data.upper.h()));
                o.witness("h_prime", subspace_json(d.data.lower.h()));
                o.witness("i_a", subspace_json(&d.data.upper.i_a));
                o.witness("i_prime_a", subspace_json(&d.data.lower.i_a));
                o.bound = Some(Item::Resolved(d.predecessor));
            }
            Verb::CheckLink => {
                let pred = self.triple(&c.args[0])?;
                let link = self.link(&c.args[1])?;
                let other = self.link(&c.args[2])?;
                let r = check_link_conditions(g, form, &pred, &link, &other.parabolic)?;
                for (k, ok) in r.conditions.iter().enumerate() {
                    o.certificate.push(&format!("condition_{}", k + 1), *ok);
                }
                for (n, ok) in &r.clauses.clauses {
                    o.certificate.push(n, *ok);
                }
                o.fact("failed_conditions", json!(r.failed()));
                if let Some(b) = &r.borel_witness {
                    o.witness("borel", subspace_json(b));
                }
            }
            Verb::Lift => {
                let pred = self.triple(&c.args[0])?;
                let up = self.link(&c.args[1])?;
                let low = self.link(&c.args[2])?;
                let r = check_link_conditions(g, form, &pred, &up, &low.parabolic)?;
                let rp = check_link_conditions(g, form, &pred, &low, &up.parabolic)?;
                for k in 0..6 {
                    o.certificate.push(&format!("condition_{}", k + 1), r.conditions[k] && rp.conditions[k]);
                }
                for (n, ok) in &r.clauses.clauses {
                    o.certificate.push(&format!("upper.{n}"), *ok);
                }
                for (n, ok) in &rp.clauses.clauses {
                    o.certificate.push(&format!("lower.{n}"), *ok);
                }
                o.fact("failed_conditions_upper", json!(r.failed()));
                o.fact("failed_conditions_lower", json!(rp.failed()));
                if r.passed() && rp.passed() {
                    let t = lift(g, form, &pred, &up, &low)?;
                    o.certificate.push("lifted", true);
                    o.fact("frame", set_json(&t.frame));
                    o.witness("i", subspace_json(&t.i));
                    o.witness("i_prime", subspace_json(&t.i_prime));
                    o.bound = Some(Item::Resolved(t));
                }
            }
            Verb::Tower => {
                let t = self.triple(&c.args[0])?;
                let tower = build_tower(g, form, &t)?;
                o.certificate.push("reaches_j0", tower.last.frame.is_empty());
                o.fact("height", json!(tower.height()));
                let frames: Vec<Value> = tower.stages.iter().map(|s| set_json(&s.triple.frame)).collect();
                o.fact("stage_frames", Value::Array(frames));
                for (k, s) in tower.stages.iter().enumerate() {
                    o.witness(&format!("stage_{k}.i"), subspace_json(&s.triple.i));
                    o.witness(&format!("stage_{k}.i_prime"), subspace_json(&s.triple.i_prime));
                    o.witness(&format!("stage_{k}.f_tilde"), subspace_json(&s.link.f_tilde));
                    o.witness(&format!("stage_{k}.f_tilde_prime"), subspace_json(&s.link_prime.f_tilde));
                }
                o.bound = Some(Item::Tower(Box::new(tower)));
            }
            Verb::Socle => {
                let tower = self.tower(&c.args[0])?;
                let s = socle(g, form, &tower)?;
                o.certificate.push("socle", true);
                o.fact("height", json!(tower.height()));
                o.witness("i", subspace_json(&s.i));
                o.witness("i_prime", subspace_json(&s.i_prime));
            }
            Verb::CommonFixedVector => {
                let a = self.involution(&c.args[0])?;
                let b = self.involution(&c.args[1])?;
                if a.domain() != b.domain() {
                    return Err(invalid("the two involutions act on different subalgebras"));
                }
                let v = a.common_fixed_vector(b);
                o.certificate.push("nonzero_common_fixed_vector", v.is_some());
                if let Some(v) = v {
                    o.witness("vector", vector_json(&v));
                }
            }
        }
        Ok(o)
    }
}

/// Validates and runs a parsed scenario.
pub fn run_scenario(s: &Scenario, source: &str, verbose: bool) -> ScenarioReport {
    let mut ctx = match setup(s).and_then(|ctx| check_commands(&ctx, &s.commands).map(|_| ctx)) {
        Ok(ctx) => ctx,
        Err(e) => return ScenarioReport::failed_early(source, Some(s.name.clone()), EXIT_INVALID, e.to_string()),
    };
    ctx.verbose = verbose;
    let mut failed_binds: Vec<String> = Vec::new();
    let mut commands = Vec::new();
    for (index, c) in s.commands.iter().enumerate() {
        let mut rep = CommandReport {
            index,
            verb: c.verb.name(),
            args: c.args.clone(),
            bind: c.bind.clone(),
            expect: c.expect,
            status: Status::Error,
            certificate: vec![],
            facts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            error: None,
        };
        if let Some(dep) = c.args.iter().find(|a| failed_binds.contains(a)) {
            rep.error = Some(format!("`{dep}` was not produced by an earlier command"));
            failed_binds.extend(c.bind.clone());
            commands.push(rep);
            continue;
        }
        match ctx.execute(c) {
            Ok(o) => {
                rep.status = if o.certificate.passed() == c.expect { Status::Pass } else { Status::Fail };
                rep.certificate = o.certificate.clauses;
                rep.facts = o.facts;
                if ctx.verbose {
                    rep.witnesses = o.witnesses;
                }
                match (&c.bind, o.bound) {
                    (Some(b), Some(item)) => {
                        ctx.items.insert(b.clone(), item);
                    }
                    (Some(b), None) => failed_binds.push(b.clone()),
                    _ => {}
                }
            }
            Err(e) => {
                rep.error = Some(e.to_string());
                failed_binds.extend(c.bind.clone());
            }
        }
        commands.push(rep);
    }
    let code = if commands.iter().all(|c| c.status == Status::Pass) { EXIT_PASS } else { EXIT_FAIL };
    ScenarioReport {
        source: source.into(),
        scenario: Some(s.name.clone()),
        algebra: Some(ctx.g.describe()),
        real_basis: ctx.g.real_labels(),
        exit_code: code,
        error: None,
        commands,
    }
}

/// Parses and runs scenario text.
pub fn run_text(text: &str, source: &str, verbose: bool) -> ScenarioReport {
    match super::model::parse(text) {
        Ok(s) => run_scenario(&s, source, verbose),
        Err(e) => ScenarioReport::failed_early(source, None, EXIT_PARSE, format!("parse error: {e}")),
    }
}

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use vava_core::clutter::{
    detect_partition, dpartite_vanishing_check, facet_ideal, squarefree_pair_condition, ttorsion_search,
    TtorsionWitness,
};
use vava_core::combinat::subsets;
use vava_core::graph::{confirm_witness, edge_ideal, vv_vanishes_graph};
use vava_core::ideal::squarefree_power;
use vava_core::io::{self, NamedIdeal};
use vava_core::jacobian::{
    certify, determinant, jacobian_ideal, jacobian_ideal_at, jacobian_matrix, minors_ideal, Certification,
    DEFAULT_MINOR_BUDGET,
};
use vava_core::oracle::Naive;
use vava_core::rees::{assemble_quotient_presentation, relation_type_bounded, Family, MonomialMap, DEFAULT_FIBER_BUDGET};
use vava_core::vv::{vv_vanishes_with, VvOptions, VvReport};
use vava_core::{Error, IdealArithmetic, Interreduced, Monomial, MonomialIdeal, RingContext};

use crate::args::{ClutterCommand, Command, Global, GraphCommand, ReesCommand};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Negative = 1,
    Input = 2,
    Resource = 3,
    Assertion = 4,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit(&self) -> Exit {
        match self {
            Failure::Input(_) => Exit::Input,
            Failure::Core(e) => match e {
                Error::ResourceExceeded { .. } | Error::ExponentOverflow => Exit::Resource,
                Error::TheoremViolation(_) => Exit::Assertion,
                Error::VvNotVanishing | Error::MixedMinor { .. } => Exit::Negative,
                _ => Exit::Input,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit() {
            Exit::Input => "input",
            Exit::Resource => "resource",
            Exit::Assertion => "assertion",
            _ => "negative",
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(s) => f.write_str(s),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Input files read during a run: content digests and parsed JSON.
#[derive(Debug, Default)]
pub struct Inputs {
    pub digests: BTreeMap<String, String>,
    pub values: BTreeMap<String, Value>,
}

impl Inputs {
    fn read(&mut self, name: &str, path: &Path) -> Result<String, Failure> {
        let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        self.digests.insert(name.into(), hex::encode(Sha256::digest(&bytes)));
        let text = String::from_utf8(bytes).map_err(|_| Failure::Input(format!("{} is not UTF-8", path.display())))?;
        if let Ok(v) = serde_json::from_str(&text) {
            self.values.insert(name.into(), v);
        }
        Ok(text)
    }
}

/// Field-by-field comparison of the fast path against the oracle.
#[derive(Debug, Default)]
struct Diff {
    mismatches: Vec<Value>,
}

impl Diff {
    fn check<T: Serialize + PartialEq>(&mut self, what: &str, fast: &T, oracle: &T) {
        if fast != oracle {
            self.mismatches.push(json!({"what": what, "fast": fast, "oracle": oracle}));
        }
    }

    fn into_value(self) -> Value {
        if self.mismatches.is_empty() {
            json!({"status": "identical"})
        } else {
            json!({"status": "mismatch", "details": self.mismatches})
        }
    }
}

pub struct Outcome {
    pub result: Value,
    pub exit: Exit,
    pub oracle_diff: Option<Value>,
    pub summary: String,
}

impl Outcome {
    fn new(result: Value, exit: Exit, summary: String) -> Self {
        Self {
            result,
            exit,
            oracle_diff: None,
            summary,
        }
    }

    fn with_diff(mut self, diff: Option<Diff>) -> Self {
        if let Some(d) = diff {
            let v = d.into_value();
            if v["status"] == "mismatch" {
                self.exit = Exit::Assertion;
                self.summary.push_str("\noracle mismatch: the naive path disagrees");
            }
            self.oracle_diff = Some(v);
        }
        self
    }
}

struct Ctx<'a> {
    global: &'a Global,
    inputs: &'a mut Inputs,
}

impl Ctx<'_> {
    fn naive(&self) -> Naive {
        match self.global.budget {
            Some(b) => Naive { budget: b },
            None => Naive::default(),
        }
    }

    fn diff(&self) -> Option<Diff> {
        self.global.brute_force.then(Diff::default)
    }

    fn vv_opts(&self) -> VvOptions {
        VvOptions {
            max_degree: self.global.max_degree,
        }
    }

    fn pair(&mut self, path: &Path) -> Result<io::NamedPair, Failure> {
        Ok(io::parse_pair(&self.inputs.read("pair", path)?)?)
    }

    fn ideal(&mut self, name: &str, path: &Path) -> Result<NamedIdeal, Failure> {
        Ok(io::parse_ideal(&self.inputs.read(name, path)?)?)
    }
}

pub fn dispatch(command: &Command, global: &Global, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    let mut cx = Ctx { global, inputs };
    match command {
        Command::Vv { pair } => vv(&mut cx, pair),
        Command::VvSingle { input } => vv_single(&mut cx, input),
        Command::Graph(GraphCommand::Classify { sub, host }) => graph_classify(&mut cx, sub, host),
        Command::Clutter(ClutterCommand::Ttorsion { input, t, r, m_max }) => ttorsion(&mut cx, input, *t, *r, *m_max),
        Command::Clutter(ClutterCommand::Dpartite { input, sub }) => dpartite(&mut cx, input, sub),
        Command::Clutter(ClutterCommand::SqfreePairs { input }) => sqfree_pairs(&mut cx, input),
        Command::Jacobian {
            input,
            minor_size,
            target,
        } => jacobian(&mut cx, input, *minor_size, target.as_deref()),
        Command::Rees(ReesCommand::Present { pair, family }) => rees_present(&mut cx, pair, family),
        Command::Rees(ReesCommand::Rt { pair }) => rees_rt(&mut cx, pair),
        Command::OracleDiff { pair, count, seed } => oracle_diff(&mut cx, pair.as_deref(), *count, *seed),
    }
}

fn render_witnesses(ctx: &RingContext, rep: &VvReport) -> Value {
    let map: BTreeMap<String, Vec<String>> = rep
        .witnesses
        .iter()
        .map(|(t, ws)| (t.to_string(), ws.iter().map(|w| ctx.render(w)).collect()))
        .collect();
    json!(map)
}

fn vv_summary(ctx: &RingContext, rep: &VvReport) -> String {
    if rep.vanishes {
        return format!("VV vanishes (checked degrees 1..={})", rep.degrees_checked.1);
    }
    let t = rep.indeg.expect("nonvanishing has an initial degree");
    let first: Vec<String> = rep.witnesses[&t].iter().map(|w| ctx.render(w)).collect();
    format!("VV does not vanish: indeg = {t}, witnesses {}", first.join(", "))
}

fn vv_outcome(ctx: &RingContext, rep: &VvReport, extra: Value) -> Outcome {
    let mut result = json!({"report": rep, "witnesses_rendered": render_witnesses(ctx, rep)});
    if let (Value::Object(r), Value::Object(e)) = (&mut result, extra) {
        r.extend(e);
    }
    let exit = if rep.vanishes { Exit::Ok } else { Exit::Negative };
    Outcome::new(result, exit, vv_summary(ctx, rep))
}

fn vv(cx: &mut Ctx<'_>, path: &Path) -> Result<Outcome, Failure> {
    let p = cx.pair(path)?;
    let rep = vv_vanishes_with(&Interreduced, &p.j, &p.i, cx.vv_opts())?;
    let mut diff = cx.diff();
    if let Some(d) = diff.as_mut() {
        let slow = vv_vanishes_with(&cx.naive(), &p.j, &p.i, cx.vv_opts())?;
        d.check("vv report", &rep, &slow);
    }
    Ok(vv_outcome(&p.ctx, &rep, json!({})).with_diff(diff))
}

fn vv_single(cx: &mut Ctx<'_>, path: &Path) -> Result<Outcome, Failure> {
    let named = cx.ideal("ideal", path)?;
    let j = &named.ideal;
    let i = jacobian_ideal(j)?;
    let rep = vv_vanishes_with(&Interreduced, j, &i, cx.vv_opts())?;
    let mut diff = cx.diff();
    if let Some(d) = diff.as_mut() {
        let slow = vv_vanishes_with(&cx.naive(), j, &i, cx.vv_opts())?;
        d.check("vv report", &rep, &slow);
    }
    let extra = json!({
        "height": j.height()?,
        "jacobian_ideal": io::ideal_value(&named.ctx, &i),
    });
    Ok(vv_outcome(&named.ctx, &rep, extra).with_diff(diff))
}

fn graph_classify(cx: &mut Ctx<'_>, sub_path: &Path, host_path: &Path) -> Result<Outcome, Failure> {
    let sub = io::parse_graph(&cx.inputs.read("sub", sub_path)?)?;
    let host = io::parse_graph(&cx.inputs.read("super", host_path)?)?;
    let class = vv_vanishes_graph(&sub, &host)?;
    let n = host.n();
    let ctx = RingContext::standard(n)?;
    let witness = class.witness(n);
    let mut diff = cx.diff();
    let (algebraic, confirmed) = if sub.edge_count() == 0 {
        (json!("vacuous"), None)
    } else {
        let (j, i) = (edge_ideal(&sub), edge_ideal(&host));
        let rep = vv_vanishes_with(&Interreduced, &j, &i, VvOptions::default())?;
        if let Some(d) = diff.as_mut() {
            let slow = vv_vanishes_with(&cx.naive(), &j, &i, VvOptions::default())?;
            d.check("vv report", &rep, &slow);
        }
        let confirmed = match &witness {
            Some(w) => Some(confirm_witness(&sub, &host, w)?),
            None => None,
        };
        (json!(rep.vanishes), confirmed)
    };
    let result = json!({
        "classification": class,
        "witness": witness.as_ref().map(|w| ctx.render(w)),
        "witness_confirmed": confirmed,
        "algebraic_vanishes": algebraic,
    });
    let agree = algebraic.as_bool().is_none_or(|a| a == class.vanishes);
    let mut summary = format!(
        "almost C3-embedded: {}, almost P3-embedded: {}, algebraic: {algebraic}",
        class.c3.holds(),
        class.p3.holds()
    );
    if let Some(w) = &witness {
        let _ = write!(summary, ", witness {}", ctx.render(w));
    }
    let exit = if !agree || confirmed == Some(false) {
        summary.push_str("\ncombinatorial and algebraic answers disagree");
        Exit::Assertion
    } else if class.vanishes {
        Exit::Ok
    } else {
        Exit::Negative
    };
    Ok(Outcome::new(result, exit, summary).with_diff(diff))
}

fn confirm_with_oracle(naive: &Naive, j: &MonomialIdeal, i: &MonomialIdeal, g: &Monomial, t: u32) -> Result<bool, Failure> {
    let it = naive.power(i, t)?;
    let prod = naive.product(j, &naive.power(i, t - 1)?)?;
    Ok(naive.contains(j, g) && naive.contains(&it, g) && !naive.contains(&prod, g))
}

fn ttorsion(cx: &mut Ctx<'_>, path: &Path, t: usize, r: Option<usize>, m_max: Option<usize>) -> Result<Outcome, Failure> {
    let c = io::parse_clutter(&cx.inputs.read("clutter", path)?)?;
    let j = facet_ideal(&c);
    let r = match r {
        Some(r) => r,
        None => j.height()?,
    };
    let m_max = m_max.unwrap_or(c.n());
    let found: Option<TtorsionWitness> = ttorsion_search(&c, t, r, m_max)?;
    let ctx = RingContext::standard(c.n())?;
    let mut diff = cx.diff();
    if let (Some(d), Some(w)) = (diff.as_mut(), &found) {
        let i = jacobian_ideal_at(&j, r)?;
        d.check("witness confirmed", &true, &confirm_with_oracle(&cx.naive(), &j, &i, &w.monomial, t as u32)?);
    }
    let result = json!({
        "t": t,
        "r": r,
        "m_max": m_max,
        "found": found.is_some(),
        "witness": found,
        "witness_rendered": found.as_ref().map(|w| ctx.render(&w.monomial)),
    });
    let (exit, summary) = match &found {
        Some(w) => (
            Exit::Negative,
            format!("torsion in degree {t}: {} (y = {:?})", ctx.render(&w.monomial), w.y),
        ),
        None => (Exit::Ok, format!("no witness with m <= {m_max}; this does not show vanishing")),
    };
    Ok(Outcome::new(result, exit, summary).with_diff(diff))
}

fn dpartite(cx: &mut Ctx<'_>, path: &Path, sub_path: &Path) -> Result<Outcome, Failure> {
    let c = io::parse_clutter(&cx.inputs.read("clutter", path)?)?;
    let sub = io::parse_clutter(&cx.inputs.read("sub", sub_path)?)?;
    let partition = detect_partition(&c).ok_or_else(|| Failure::Input("clutter is not complete d-partite".into()))?;
    let vanishes = dpartite_vanishing_check(&c, &sub)?;
    let mut diff = cx.diff();
    if let Some(d) = diff.as_mut() {
        let slow = vv_vanishes_with(&cx.naive(), &facet_ideal(&sub), &facet_ideal(&c), VvOptions::default())?;
        d.check("vanishes", &vanishes, &slow.vanishes);
    }
    let result = json!({"partition": partition, "vanishes": vanishes});
    let summary = format!("VV vanishes for the subclutter ({} of {} circuits)", sub.len(), c.len());
    Ok(Outcome::new(result, Exit::Ok, summary).with_diff(diff))
}

fn sqfree_pairs(cx: &mut Ctx<'_>, path: &Path) -> Result<Outcome, Failure> {
    let named = cx.ideal("ideal", path)?;
    let j = &named.ideal;
    let d = j.indeg()? as usize;
    let verdict = squarefree_pair_condition(j, d)?;
    let n = j.nvars();
    let md = squarefree_power(n, d)?;
    let rep = vv_vanishes_with(&Interreduced, j, &md, VvOptions::default())?;
    let mut diff = cx.diff();
    if let Some(dd) = diff.as_mut() {
        let slow = vv_vanishes_with(&cx.naive(), j, &md, VvOptions::default())?;
        dd.check("vv report", &rep, &slow);
    }
    let holds = verdict.holds();
    let contract = if d == 3 { holds == rep.vanishes } else { !rep.vanishes || holds };
    let result = json!({
        "d": d,
        "condition": verdict,
        "vanishes": rep.vanishes,
        "report": rep,
        "witnesses_rendered": render_witnesses(&named.ctx, &rep),
    });
    let mut summary = format!("pair condition holds: {holds}; VV against the squarefree power vanishes: {}", rep.vanishes);
    if let Some(v) = verdict.violation() {
        let _ = write!(summary, "\nviolation: generator {:?}, G = {:?}", v.generator, v.g);
    }
    let exit = if !contract {
        summary.push_str("\ncondition and algebra disagree");
        Exit::Assertion
    } else if rep.vanishes && holds {
        Exit::Ok
    } else {
        Exit::Negative
    };
    Ok(Outcome::new(result, exit, summary).with_diff(diff))
}

fn jacobian(cx: &mut Ctx<'_>, path: &Path, minor_size: Option<usize>, target: Option<&Path>) -> Result<Outcome, Failure> {
    let named = cx.ideal("ideal", path)?;
    let j = &named.ideal;
    let theta = jacobian_matrix(j)?;
    let r = match minor_size {
        Some(r) => r,
        None => j.height()?,
    };
    let budget = cx.global.budget.unwrap_or(DEFAULT_MINOR_BUDGET);
    let rep = minors_ideal(&theta, r, budget)?;
    let target = match target {
        Some(p) => {
            let t = cx.ideal("target", p)?;
            if t.ctx != named.ctx {
                return Err(Failure::Input("target uses a different variable list".into()));
            }
            Some(t.ideal)
        }
        None => None,
    };
    let cert = target.as_ref().map(|t| certify(&rep, t)).transpose()?;
    let mut diff = cx.diff();
    if let Some(d) = diff.as_mut() {
        let mut terms = Vec::new();
        for rows in subsets(theta.rows(), r) {
            for cols in subsets(theta.cols(), r) {
                if let Some(term) = determinant(&theta, &rows, &cols)?.single_term() {
                    terms.push(term.mono);
                }
            }
        }
        let unpruned = MonomialIdeal::minimize(j.nvars(), terms)?;
        d.check("term minors", &rep.term_minors, &unpruned);
    }
    let matrix: Vec<Vec<String>> = (0..theta.rows())
        .map(|i| (0..theta.cols()).map(|k| theta.get(i, k).to_string()).collect())
        .collect();
    let result = json!({
        "matrix": matrix,
        "minors": rep,
        "minors_ideal": io::ideal_value(&named.ctx, &rep.term_minors),
        "jacobian_ideal": io::ideal_value(&named.ctx, &j.sum(&rep.term_minors)?),
        "certification": cert,
    });
    let mut summary = format!(
        "{r}-minors: {} evaluated, {} pruned, {} zero, {} mixed; minors ideal {}",
        rep.evaluated,
        rep.pruned,
        rep.zero,
        rep.mixed_minors.len(),
        rep.term_minors.render(&named.ctx)
    );
    let exit = match cert {
        Some(c) => {
            let _ = write!(summary, "\ncomparison with target: {c:?}");
            if c == Certification::Equal {
                Exit::Ok
            } else {
                Exit::Negative
            }
        }
        None => Exit::Ok,
    };
    Ok(Outcome::new(result, exit, summary).with_diff(diff))
}

fn rees_degree(cx: &Ctx<'_>) -> u32 {
    cx.global.max_degree.unwrap_or(3)
}

fn precondition_diff(cx: &Ctx<'_>, j: &MonomialIdeal, i: &MonomialIdeal) -> Result<Option<Diff>, Failure> {
    let mut diff = cx.diff();
    if let Some(d) = diff.as_mut() {
        let fast = vv_vanishes_with(&Interreduced, j, i, VvOptions::default())?;
        let slow = vv_vanishes_with(&cx.naive(), j, i, VvOptions::default())?;
        d.check("vv report", &fast, &slow);
    }
    Ok(diff)
}

fn rees_present(cx: &mut Ctx<'_>, path: &Path, family: &str) -> Result<Outcome, Failure> {
    let family: Family = family.parse()?;
    let p = cx.pair(path)?;
    let degree = rees_degree(cx);
    let budget = cx.global.budget.unwrap_or(DEFAULT_FIBER_BUDGET);
    let diff = precondition_diff(cx, &p.j, &p.i)?;
    let rep = assemble_quotient_presentation(&p.j, &p.i, family, degree, budget)?;
    let generators: Vec<String> = rep.generators.iter().map(ToString::to_string).collect();
    let result = json!({"family": family, "presentation": rep, "generators_rendered": generators});
    let (exit, summary) = if rep.generates() {
        (
            Exit::Ok,
            format!("{} generators ({family}) generate the kernel in T-degrees <= {degree}", generators.len()),
        )
    } else {
        (Exit::Negative, format!("{family} generators fall short: {:?}", rep.verdict))
    };
    Ok(Outcome::new(result, exit, summary).with_diff(diff))
}

fn rees_rt(cx: &mut Ctx<'_>, path: &Path) -> Result<Outcome, Failure> {
    let p = cx.pair(path)?;
    let degree = rees_degree(cx);
    let budget = cx.global.budget.unwrap_or(DEFAULT_FIBER_BUDGET);
    let diff = precondition_diff(cx, &p.j, &p.i)?;
    let phi = MonomialMap::from_ideal(&p.i)?;
    let rep = relation_type_bounded(&phi, degree, Some(&p.j), budget)?;
    let witnesses: BTreeMap<u32, String> = rep.witnesses.iter().map(|(t, g)| (*t, g.to_string())).collect();
    let t0 = p.j.t0()?;
    let result = json!({"report": rep, "witnesses_rendered": witnesses, "t0_j": t0});
    let summary = format!(
        "new generators needed in T-degrees {:?} (certified up to {degree}); relation type >= {}, t0(J) = {t0}",
        rep.degrees_needed, rep.rt_lower
    );
    Ok(Outcome::new(result, Exit::Ok, summary).with_diff(diff))
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=5);
    let gens = (0..k).map(|_| {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(1..=4) {
            e[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(e).expect("small exponents")
    });
    MonomialIdeal::minimize(n, gens).expect("one context")
}

fn diff_ops(d: &mut Diff, naive: &Naive, a: &MonomialIdeal, b: &MonomialIdeal, t: u32) -> Result<(), Failure> {
    d.check("product", &Interreduced.product(a, b)?, &naive.product(a, b)?);
    d.check("intersect", &Interreduced.intersect(a, b)?, &naive.intersect(a, b)?);
    d.check("power", &Interreduced.power(a, t)?, &naive.power(a, t)?);
    Ok(())
}

fn oracle_diff(cx: &mut Ctx<'_>, path: Option<&Path>, count: usize, seed: u64) -> Result<Outcome, Failure> {
    let naive = cx.naive();
    let mut d = Diff::default();
    let instances = match path {
        Some(path) => {
            let p = cx.pair(path)?;
            let t = cx.global.max_degree.unwrap_or(3).max(1);
            diff_ops(&mut d, &naive, &p.j, &p.i, t)?;
            diff_ops(&mut d, &naive, &p.i, &p.j, t)?;
            let fast = vv_vanishes_with(&Interreduced, &p.j, &p.i, cx.vv_opts())?;
            let slow = vv_vanishes_with(&naive, &p.j, &p.i, cx.vv_opts())?;
            d.check("vv report", &fast, &slow);
            1
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let n = rng.gen_range(1..=5);
                let a = random_ideal(&mut rng, n);
                let b = random_ideal(&mut rng, n);
                let t = *[1, 2, 3, 4].choose(&mut rng).expect("nonempty");
                diff_ops(&mut d, &naive, &a, &b, t)?;
            }
            count
        }
    };
    let mismatches = d.mismatches.len();
    let result = json!({"instances": instances, "diff": d.into_value()});
    let (exit, summary) = if mismatches == 0 {
        (Exit::Ok, format!("{instances} instance(s): interreduced and naive arithmetic agree"))
    } else {
        (Exit::Assertion, format!("{mismatches} mismatch(es) between interreduced and naive arithmetic"))
    };
    Ok(Outcome::new(result, exit, summary))
}

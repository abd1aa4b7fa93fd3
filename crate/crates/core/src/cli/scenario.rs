//! Scenario files and the three shipped scenarios.
//!
//! A scenario file names the scenario, a seed, its input files (relative to
//! the data directory) and the expected values:
//!
//! ```toml
//! name = "a8-green"
//! seed = 0
//! [inputs]
//! group = "a8.grp"
//! [expect]
//! quotient_dim = 2
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::construct::{self, f3};
use super::data::{data_dir, load_group, load_idempotent, read_text, resolve};
use super::labels::{LinearLabels, SWAP_CAVEAT};
use super::report::Timer;
use crate::brauer::{brauer_quotient, green_correspondent, green_pipeline, green_trivial_source, marks_count};
use crate::modrep::{
    chop, indecomposable_summands, is_isomorphic, is_projective, perm_rep, radical_series, socle_series, Constituents,
    MatRep,
};
use crate::permgrp::{coset_action, fingerprint, normalizer, sylow, PermAction, PermGroup, SearchBound};
use crate::blocks::project;
use crate::{Error, Result};

pub const SCENARIOS: [&str; 3] = ["a8-green", "a8-f13", "j4-local"];

#[derive(Clone, Debug, Deserialize)]
pub struct Scenario {
    pub name: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub inputs: BTreeMap<String, String>,
    #[serde(default)]
    pub expect: toml::Table,
}

impl Scenario {
    pub fn parse(text: &str, file: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse {
            file: file.to_string(),
            line: e.span().map_or(1, |s| text[..s.start].lines().count().max(1)),
            msg: e.message().to_string(),
        })
    }

    /// Loads `scenarios/<name>.toml` from the data directory.
    pub fn load(name: &str) -> Result<Self> {
        let path = data_dir().join("scenarios").join(format!("{name}.toml"));
        let s = Self::parse(&read_text(&path)?, &path.display().to_string())?;
        if s.name != name {
            return Err(Error::invalid(format!("{} declares name `{}`", path.display(), s.name)));
        }
        Ok(s)
    }

    fn input(&self, key: &str) -> Result<std::path::PathBuf> {
        let name = self
            .inputs
            .get(key)
            .ok_or_else(|| Error::invalid(format!("scenario {} lacks inputs.{key}", self.name)))?;
        let path = resolve(name);
        if !path.exists() {
            return Err(Error::invalid(format!(
                "scenario {} needs data file {} (run `brauerbox bootstrap`)",
                self.name,
                path.display()
            )));
        }
        Ok(path)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioOutcome {
    pub name: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

impl ScenarioOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn value(&self, key: &str) -> Option<&Value> {
        self.values.get(key)
    }
}

fn compare(s: &Scenario, values: BTreeMap<String, Value>, notes: Vec<String>) -> Result<ScenarioOutcome> {
    let mut checks = Vec::new();
    for (k, v) in &s.expect {
        let expected = serde_json::to_value(v).map_err(|e| Error::invalid(e.to_string()))?;
        let actual = values
            .get(k)
            .cloned()
            .ok_or_else(|| Error::invalid(format!("scenario {} does not compute `{k}`", s.name)))?;
        checks.push(Check {
            name: k.clone(),
            pass: actual == expected,
            expected,
            actual,
        });
    }
    Ok(ScenarioOutcome {
        name: s.name.clone(),
        seed: s.seed,
        checks,
        values,
        notes,
    })
}

/// Labels of all composition factors, with repetition, sorted.
pub fn constituent_labels(labels: &LinearLabels, c: &Constituents) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for item in &c.items {
        let l = labels.identify(&item.module)?.unwrap_or_else(|| format!("{}-dim", item.module.dim()));
        out.extend(std::iter::repeat(l).take(item.multiplicity));
    }
    out.sort();
    Ok(out)
}

fn iso(a: &MatRep, b: &MatRep) -> Result<bool> {
    Ok(is_isomorphic(a, b)?.is_some())
}

pub fn run(s: &Scenario, bound: SearchBound, timer: &mut Timer) -> Result<ScenarioOutcome> {
    match s.name.as_str() {
        "a8-green" => a8_green(s, bound, timer),
        "a8-f13" => a8_f13(s, bound, timer),
        "j4-local" => j4_local(s, timer),
        other => Err(Error::invalid(format!(
            "unknown scenario `{other}` (known: {})",
            SCENARIOS.join(", ")
        ))),
    }
}

/// Loads and runs a shipped scenario.
pub fn run_named(name: &str, bound: SearchBound, timer: &mut Timer) -> Result<ScenarioOutcome> {
    run(&Scenario::load(name)?, bound, timer)
}

fn same_as_input(s: &Scenario, key: &str, g: &PermGroup) -> Result<bool> {
    if !s.inputs.contains_key(key) {
        return Ok(true);
    }
    let h = load_group(&s.input(key)?)?;
    Ok(h.degree() == g.degree() && h.same_group(g))
}

fn a8_green(s: &Scenario, bound: SearchBound, timer: &mut Timer) -> Result<ScenarioOutcome> {
    let mut v: BTreeMap<String, Value> = BTreeMap::new();
    let a8 = Arc::new(construct::a8());
    let p = Arc::new(construct::sylow3());
    let syl = sylow(&a8, 3, s.seed, bound)?;
    let hprime = Arc::new(normalizer(&a8, &p, bound)?);
    timer.lap("groups");
    let inputs_match = same_as_input(s, "group", &a8)?
        && same_as_input(s, "sylow", &p)?
        && same_as_input(s, "normalizer", &hprime)?;
    v.insert("inputs_match".into(), json!(inputs_match));
    v.insert("a8_order".into(), json!(a8.order()));
    v.insert("p_order".into(), json!(p.order()));
    v.insert("sylow_order".into(), json!(syl.order()));
    v.insert("hprime_order".into(), json!(hprime.order()));

    let omega = perm_rep(&PermAction::natural(a8.clone()), f3());
    let bq = brauer_quotient(&omega, &p, &hprime)?;
    let fast = green_trivial_source(&omega, &p, &hprime)?;
    timer.lap("brauer");
    v.insert("fixed_dim".into(), json!(bq.fixed_basis.dim()));
    v.insert("quotient_dim".into(), json!(bq.dim()));
    v.insert(
        "fixed_points".into(),
        json!(fast.fixed_points.iter().map(|i| i + 1).collect::<Vec<_>>()),
    );

    let labels = LinearLabels::new(&hprime, f3())?;
    let c = chop(&bq.quotient_rep, s.seed)?;
    v.insert("constituents".into(), json!(constituent_labels(&labels, &c)?));
    v.insert(
        "constituents_distinct".into(),
        json!(c.items.len() == 2 && c.items.iter().all(|i| i.multiplicity == 1)),
    );
    let a7 = Arc::new(construct::a7());
    v.insert("marks".into(), json!(marks_count(&a8, &a7, &p)?));
    timer.lap("chop");

    // f'(1) and f'(7) from the decomposition of the permutation module
    let dec = indecomposable_summands(&omega, s.seed)?;
    let mut green = BTreeMap::new();
    for m in &dec.summands {
        let gc = green_correspondent(m, &p, &hprime, s.seed)?;
        let name = labels.identify(&gc.module)?.unwrap_or_else(|| "?".into());
        green.insert(m.dim().to_string(), name);
    }
    let pipeline = green_pipeline(&omega, &p, &hprime, s.seed)?
        .ok_or_else(|| Error::invalid("no summand of the permutation module has vertex P"))?;
    let agree = iso(&fast.module, &bq.quotient_rep)? && iso(&fast.module, &pipeline)? && iso(&bq.quotient_rep, &pipeline)?;
    v.insert("summand_dims".into(), json!(dec.dims()));
    v.insert("green_correspondents".into(), json!(green));
    v.insert("methods_agree".into(), json!(agree));
    v.insert("fast_path".into(), json!(fast.fast_path));
    v.insert("labels".into(), json!(labels.records()));
    timer.lap("green");
    compare(s, v, vec![SWAP_CAVEAT.to_string()])
}

fn a8_f13(s: &Scenario, bound: SearchBound, timer: &mut Timer) -> Result<ScenarioOutcome> {
    let mut v: BTreeMap<String, Value> = BTreeMap::new();
    let a8 = Arc::new(construct::a8());
    let stab = construct::two_subset_stabilizer();
    let p = construct::sylow3();
    let hprime = Arc::new(normalizer(&a8, &p, bound)?);
    v.insert(
        "inputs_match".into(),
        json!(same_as_input(s, "group", &a8)? && same_as_input(s, "stabilizer", &stab)?),
    );
    let omega = perm_rep(&coset_action(&a8, &stab)?, f3());
    timer.lap("groups");
    let c = chop(&omega, s.seed)?;
    timer.lap("chop");
    v.insert("module_dim".into(), json!(omega.dim()));
    v.insert("constituent_dims".into(), json!(c.dims()));
    let thirteen: Vec<_> = c.items.iter().filter(|i| i.module.dim() == 13).collect();
    v.insert(
        "thirteen_multiplicity".into(),
        json!(thirteen.iter().map(|i| i.multiplicity).sum::<usize>()),
    );
    let Some(m13) = thirteen.first().map(|i| i.module.clone()) else {
        return compare(s, v, Vec::new());
    };
    let gc = green_correspondent(&m13, &p, &hprime, s.seed)?;
    timer.lap("green");
    let mut dims = gc.summand_dims.clone();
    dims.sort_unstable();
    v.insert("restriction_summands".into(), json!(dims));
    v.insert("summand_vertex_orders".into(), json!(gc.vertex_orders));
    let mut discarded_projective = true;
    for (i, m) in gc.summands.iter().enumerate() {
        if i != gc.index {
            discarded_projective &= is_projective(m, s.seed)?;
        }
    }
    v.insert("discarded_projective".into(), json!(discarded_projective));
    let f = &gc.module;
    v.insert("correspondent_dim".into(), json!(f.dim()));
    let rs = radical_series(f, s.seed)?;
    let ss = socle_series(f, s.seed)?;
    timer.lap("series");
    v.insert("radical_layers".into(), json!(rs.layer_dims()));
    let mut soc = ss.layer_dims();
    soc.reverse();
    v.insert("socle_layers_top_down".into(), json!(soc));
    let uniserial = rs.layers.iter().all(|l| l.items.len() == 1 && l.items[0].multiplicity == 1);
    v.insert("uniserial".into(), json!(uniserial));
    let head = rs.layer_modules.first().cloned();
    let socle = ss.layer_modules.first().cloned();
    let head_is_socle = match (head, socle) {
        (Some(h), Some(so)) => iso(&h, &so)?,
        _ => false,
    };
    v.insert("head_is_socle".into(), json!(head_is_socle));
    let labels = LinearLabels::new(&hprime, f3())?;
    let layer_names = rs
        .layer_modules
        .iter()
        .map(|m| Ok(labels.identify(m)?.unwrap_or_else(|| format!("{}", m.dim()))))
        .collect::<Result<Vec<_>>>()?;
    v.insert("layer_names".into(), json!(layer_names));
    compare(s, v, vec![SWAP_CAVEAT.to_string()])
}

fn j4_local(s: &Scenario, timer: &mut Timer) -> Result<ScenarioOutcome> {
    let mut v: BTreeMap<String, Value> = BTreeMap::new();
    let n = load_group(&s.input("n")?)?;
    let ntilde = load_group(&s.input("ntilde")?)?;
    let hprime = load_group(&s.input("hprime")?)?;
    let h = load_group(&s.input("h")?)?;
    let e = load_group(&s.input("e")?)?;
    let idem = load_idempotent(&s.input("idempotent")?, e.clone())?;
    timer.lap("load");
    for (name, sub) in [("ntilde", &ntilde), ("hprime", &hprime), ("h", &h), ("e", &e)] {
        if !sub.is_subgroup_of(&n) {
            return Err(Error::NotSubgroup(format!("{name} is not inside N")));
        }
    }
    let local = construct::local_groups()?;
    let rebuilt = local.n.same_group(&n)
        && local.ntilde.same_group(&ntilde)
        && local.hprime.same_group(&hprime)
        && local.h.same_group(&h)
        && local.e.same_group(&e);
    v.insert("inputs_match".into(), json!(rebuilt));
    v.insert("n_order".into(), json!(n.order()));
    v.insert("ntilde_order".into(), json!(ntilde.order()));
    v.insert("index".into(), json!(n.order() / ntilde.order()));
    v.insert("hprime_order".into(), json!(hprime.order()));
    let fp = fingerprint(&ntilde, 10_000)?;
    let fp_ref = fingerprint(&construct::ntilde_reference()?, 10_000)?;
    v.insert("ntilde_fingerprint".into(), serde_json::to_value(&fp).expect("serializable"));
    v.insert("fingerprint_match".into(), json!(fp == fp_ref));
    let dual = construct::dual_module_check(&local, s.seed)?;
    v.insert("dual_orbits".into(), json!(dual.gl23_orbits));
    v.insert("dual_orbits_d8".into(), json!(dual.d8_orbits));
    v.insert("dual_radical_layers".into(), json!(dual.gl23_radical_layers));
    v.insert("dual_radical_layers_d8".into(), json!(dual.d8_radical_layers));
    timer.lap("groups");

    let module = perm_rep(&coset_action(&n, &ntilde)?, f3());
    v.insert("module_dim".into(), json!(module.dim()));
    let c = chop(&module, s.seed)?;
    timer.lap("chop");
    v.insert("constituent_dims".into(), json!(c.dims()));
    let sixes: Vec<_> = c.items.iter().filter(|i| i.module.dim() == 6).collect();
    v.insert("six_dim_count".into(), json!(sixes.len()));
    v.insert(
        "six_dim_multiplicities".into(),
        json!(sixes.iter().map(|i| i.multiplicity).collect::<Vec<_>>()),
    );
    if !idem.is_idempotent() {
        return Err(Error::invalid("shipped idempotent is not idempotent"));
    }
    let labels = LinearLabels::new(&hprime, f3())?;
    let mut projections = Vec::new();
    let mut proj_dims = Vec::new();
    for item in &sixes {
        let res = item.module.restrict(&h)?;
        let pr = project(&res, &idem, &hprime)?;
        proj_dims.push(pr.module.dim());
        projections.push(constituent_labels(&labels, &chop(&pr.module, s.seed)?)?);
    }
    projections.sort();
    timer.lap("projections");
    v.insert("projection_dims".into(), json!(proj_dims));
    v.insert("projections".into(), json!(projections));
    v.insert("labels".into(), json!(labels.records()));
    compare(s, v, vec![SWAP_CAVEAT.to_string()])
}

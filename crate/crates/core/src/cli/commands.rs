use std::fmt::Write as _;
use std::sync::Arc;

use serde_json::{json, Value};

use super::data::{self, load_group, load_idempotent, load_rep, resolve};
use super::report::{Report, Timer, FORMAT_VERSION};
use super::{scenario, BlocksCmd, BrauerCmd, Cli, Command, GlobalOpts, GroupCmd, ModCmd, ScenarioCmd};
use crate::blocks::io::write_idempotent;
use crate::blocks::{idempotent_from_character, linear_characters, project, LinearCharacter};
use crate::brauer::{
    brauer_quotient, direct_fixed_count, fixed_points, green_pipeline, green_trivial_source, marks_count,
};
use crate::ffla::PrimeField;
use crate::modrep::io::write_rep;
use crate::modrep::{
    chop, hom_space, indecomposable_summands, radical_series, socle_series, Constituents, MatRep,
};
use crate::permgrp::io::write_group;
use crate::permgrp::{coset_action, fingerprint, normalizer, sylow, PermGroup, SearchBound};
use crate::{Error, Result};

pub struct Outcome {
    pub text: String,
    pub report: Report,
    pub code: i32,
}

fn bound(g: &GlobalOpts) -> SearchBound {
    let mut b = SearchBound::default();
    if let Some(n) = g.bound {
        b.max_order = n;
    }
    b
}

fn field(g: &GlobalOpts) -> Result<PrimeField> {
    PrimeField::new(g.p)
}

fn group(name: &str) -> Result<Arc<PermGroup>> {
    load_group(&resolve(name))
}

fn rep(g: &GlobalOpts, name: &str, grp: Option<&str>) -> Result<MatRep> {
    let grp = grp.map(group).transpose()?;
    let r = load_rep(&resolve(name), grp)?;
    if r.p() as u32 != g.p {
        return Err(Error::invalid(format!("{name} is over F_{} but --p is {}", r.p(), g.p)));
    }
    Ok(r)
}

fn save(out: &Option<std::path::PathBuf>, text: &str, summary: &mut String) -> Result<()> {
    if let Some(path) = out {
        data::write_text(path, text)?;
        let _ = writeln!(summary, "wrote {}", path.display());
    }
    Ok(())
}

fn constituents_json(c: &Constituents) -> Value {
    json!({ "dims": c.dims(), "summary": c.summary() })
}

fn gens_json(g: &PermGroup) -> Value {
    json!(g.gens().iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

pub fn execute(cli: &Cli, command: Vec<String>) -> Result<Outcome> {
    let g = &cli.global;
    let mut timer = Timer::new(!g.no_timings);
    let mut text = String::new();
    let mut code = 0;
    let result = match &cli.command {
        Command::Group(cmd) => group_cmd(g, cmd, &mut text)?,
        Command::Mod(cmd) => mod_cmd(g, cmd, &mut text)?,
        Command::Brauer(cmd) => brauer_cmd(g, cmd, &mut text)?,
        Command::Blocks(cmd) => blocks_cmd(g, cmd, &mut text)?,
        Command::Scenario(ScenarioCmd::List) => {
            for s in scenario::SCENARIOS {
                let _ = writeln!(text, "{s}");
            }
            json!(scenario::SCENARIOS)
        }
        Command::Scenario(ScenarioCmd::Run { name }) => {
            let mut s = scenario::Scenario::load(name)?;
            if g.seed != 0 {
                s.seed = g.seed;
            }
            let out = scenario::run(&s, bound(g), &mut timer)?;
            for c in &out.checks {
                let _ = writeln!(
                    text,
                    "{} {}: expected {} got {}",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.actual
                );
            }
            let _ = writeln!(text, "scenario {}: {}", out.name, if out.passed() { "PASS" } else { "FAIL" });
            if !out.passed() {
                code = 1;
            }
            serde_json::to_value(&out).expect("serializable")
        }
        Command::Bootstrap { out } => {
            let dir = out.clone().unwrap_or_else(data::data_dir);
            let files = data::bootstrap(&dir, bound(g))?;
            for f in &files {
                let _ = writeln!(text, "wrote {}", f.display());
            }
            json!(files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>())
        }
    };
    timer.lap("total");
    Ok(Outcome {
        text,
        report: Report {
            format_version: FORMAT_VERSION,
            command,
            seed: g.seed,
            result,
            timings_ms: timer.finish(),
        },
        code,
    })
}

fn group_cmd(g: &GlobalOpts, cmd: &GroupCmd, text: &mut String) -> Result<Value> {
    Ok(match cmd {
        GroupCmd::Info { group: name } => {
            let grp = group(name)?;
            let _ = writeln!(text, "degree {} order {}", grp.degree(), grp.order());
            let orbits: Vec<Vec<usize>> = grp
                .orbits()
                .into_iter()
                .map(|o| o.into_iter().map(|x| x + 1).collect())
                .collect();
            let _ = writeln!(text, "orbit lengths {:?}", orbits.iter().map(|o| o.len()).collect::<Vec<_>>());
            let fp = if grp.order() <= 100_000 {
                Some(fingerprint(&grp, 100_000)?)
            } else {
                None
            };
            json!({
                "degree": grp.degree(),
                "order": grp.order(),
                "base": grp.base().iter().map(|x| x + 1).collect::<Vec<_>>(),
                "orbits": orbits,
                "fingerprint": fp,
            })
        }
        GroupCmd::Sylow { group: name, out } => {
            let grp = group(name)?;
            let s = sylow(&grp, g.p as u64, g.seed, bound(g))?;
            let _ = writeln!(text, "Sylow {}-subgroup of order {}", g.p, s.order());
            save(out, &write_group(&s), text)?;
            json!({ "order": s.order(), "generators": gens_json(&s) })
        }
        GroupCmd::Normalizer { group: name, sub, out } => {
            let grp = group(name)?;
            let k = group(sub)?;
            let n = normalizer(&grp, &k, bound(g))?;
            let _ = writeln!(text, "normalizer of order {}", n.order());
            save(out, &write_group(&n), text)?;
            json!({ "order": n.order(), "generators": gens_json(&n) })
        }
        GroupCmd::Cosets { group: name, sub, out } => {
            let grp = group(name)?;
            let h = group(sub)?;
            let act = coset_action(&grp, &h)?;
            let img = act.image_group();
            let _ = writeln!(text, "{} cosets, image of order {}", act.size(), img.order());
            save(out, &write_group(&img), text)?;
            json!({ "index": act.size(), "image_order": img.order(), "generators": gens_json(&img) })
        }
    })
}

fn mod_cmd(g: &GlobalOpts, cmd: &ModCmd, text: &mut String) -> Result<Value> {
    Ok(match cmd {
        ModCmd::Chop { rep: r, group: grp } => {
            let m = rep(g, r, grp.as_deref())?;
            let c = chop(&m, g.seed)?;
            let _ = writeln!(text, "constituent dims {:?}", c.dims());
            for s in c.summary() {
                let _ = writeln!(text, "  dim {} multiplicity {}", s.dim, s.multiplicity);
            }
            constituents_json(&c)
        }
        ModCmd::Radseries { rep: r, group: grp } | ModCmd::Socseries { rep: r, group: grp } => {
            let m = rep(g, r, grp.as_deref())?;
            let s = if matches!(cmd, ModCmd::Radseries { .. }) {
                radical_series(&m, g.seed)?
            } else {
                socle_series(&m, g.seed)?
            };
            let _ = writeln!(text, "layer dims {:?}", s.layer_dims());
            json!({
                "layer_dims": s.layer_dims(),
                "layers": s.layers.iter().map(constituents_json).collect::<Vec<_>>(),
            })
        }
        ModCmd::Decompose { rep: r, group: grp } => {
            let m = rep(g, r, grp.as_deref())?;
            let d = indecomposable_summands(&m, g.seed)?;
            let _ = writeln!(text, "summand dims {:?}", d.dims());
            json!({ "dims": d.dims(), "certificates": d.certificates })
        }
        ModCmd::Hom { rep: r, rep2, group: grp } => {
            let m = rep(g, r, grp.as_deref())?;
            let n = rep(g, rep2, grp.as_deref())?;
            let d = hom_space(&m, &n)?.len();
            let _ = writeln!(text, "dim Hom = {d}");
            json!({ "hom_dim": d })
        }
        ModCmd::Induce { rep: r, group: grp, to, out } => {
            let m = rep(g, r, Some(grp))?;
            let big = group(to)?;
            let ind = m.induce(&big)?;
            let _ = writeln!(text, "induced module of dim {}", ind.dim());
            save(out, &write_rep(&ind), text)?;
            json!({ "dim": ind.dim() })
        }
        ModCmd::Restrict { rep: r, group: grp, sub, out } => {
            let m = rep(g, r, Some(grp))?;
            let res = m.restrict(&group(sub)?)?;
            let _ = writeln!(text, "restricted module of dim {}", res.dim());
            save(out, &write_rep(&res), text)?;
            json!({ "dim": res.dim() })
        }
        ModCmd::Dual { rep: r, group: grp, out } => {
            let d = rep(g, r, grp.as_deref())?.dual();
            let _ = writeln!(text, "dual of dim {}", d.dim());
            save(out, &write_rep(&d), text)?;
            json!({ "dim": d.dim() })
        }
        ModCmd::Tensor { rep: r, rep2, group: grp, out } => {
            let t = rep(g, r, grp.as_deref())?.tensor(&rep(g, rep2, grp.as_deref())?)?;
            let _ = writeln!(text, "tensor product of dim {}", t.dim());
            save(out, &write_rep(&t), text)?;
            json!({ "dim": t.dim() })
        }
    })
}

fn normalizer_of(g: &GlobalOpts, grp: &PermGroup, p: &PermGroup, file: &Option<String>) -> Result<Arc<PermGroup>> {
    match file {
        Some(f) => group(f),
        None => Ok(Arc::new(normalizer(grp, p, bound(g))?)),
    }
}

fn brauer_cmd(g: &GlobalOpts, cmd: &BrauerCmd, text: &mut String) -> Result<Value> {
    Ok(match cmd {
        BrauerCmd::Fixed { group: grp, sub, rep: r } => {
            let m = rep(g, r, Some(grp))?;
            let k = group(sub)?;
            let fixed = fixed_points(&m, &k)?;
            let _ = writeln!(text, "dim V^K = {}", fixed.dim());
            json!({ "dim": fixed.dim(), "basis": fixed.rows() })
        }
        BrauerCmd::Quotient { group: grp, sub, rep: r, normalizer: nfile, out } => {
            let m = rep(g, r, Some(grp))?;
            let p = group(sub)?;
            let n = normalizer_of(g, m.group()?, &p, nfile)?;
            let bq = brauer_quotient(&m, &p, &n)?;
            let c = chop(&bq.quotient_rep, g.seed)?;
            let _ = writeln!(text, "dim V^P = {}", bq.fixed_basis.dim());
            let _ = writeln!(text, "dim traced = {}", bq.traced_subspace.dim());
            let _ = writeln!(text, "quotient dim {}", bq.dim());
            let _ = writeln!(text, "constituent dims {:?}", c.dims());
            save(out, &write_rep(&bq.quotient_rep), text)?;
            json!({
                "normalizer_order": n.order(),
                "fixed_dim": bq.fixed_basis.dim(),
                "traced_dim": bq.traced_subspace.dim(),
                "quotient_dim": bq.dim(),
                "constituents": constituents_json(&c),
            })
        }
        BrauerCmd::Marks { group: grp, sub, k } => {
            let (gg, h, kk) = (group(grp)?, group(sub)?, group(k)?);
            let marks = marks_count(&gg, &h, &kk)?;
            let direct = direct_fixed_count(&gg, &h, &kk)?;
            let _ = writeln!(text, "{marks}");
            if marks != direct as u128 {
                return Err(Error::invalid(format!("marks formula {marks} but {direct} fixed cosets")));
            }
            json!({ "marks": marks, "direct_count": direct })
        }
        BrauerCmd::Green { group: grp, sub, rep: r, normalizer: nfile, generic, out } => {
            let m = rep(g, r, Some(grp))?;
            let p = group(sub)?;
            let n = normalizer_of(g, m.group()?, &p, nfile)?;
            let (module, method) = if *generic {
                let module = green_pipeline(&m, &p, &n, g.seed)?
                    .ok_or_else(|| Error::invalid("no summand of the module has vertex P"))?;
                (module, "restrict-decompose")
            } else {
                let t = green_trivial_source(&m, &p, &n)?;
                let how = if t.fast_path { "fixed basis points" } else { "brauer quotient" };
                (t.module, how)
            };
            let c = chop(&module, g.seed)?;
            let _ = writeln!(text, "dim {} via {method}", module.dim());
            let _ = writeln!(text, "constituent dims {:?}", c.dims());
            save(out, &write_rep(&module), text)?;
            json!({ "dim": module.dim(), "method": method, "constituents": constituents_json(&c) })
        }
    })
}

fn blocks_cmd(g: &GlobalOpts, cmd: &BlocksCmd, text: &mut String) -> Result<Value> {
    let f = field(g)?;
    Ok(match cmd {
        BlocksCmd::Chars { group: grp } => {
            let chars = linear_characters(&group(grp)?, f)?;
            let _ = writeln!(text, "{} linear characters", chars.len());
            for c in &chars {
                let _ = writeln!(text, "  {:?}", c.values());
            }
            json!({ "count": chars.len(), "values": chars.iter().map(|c| c.values().to_vec()).collect::<Vec<_>>() })
        }
        BlocksCmd::Idem { group: grp, values, out } => {
            let lambda = LinearCharacter::new(group(grp)?, f, values.clone())?;
            let e = idempotent_from_character(&lambda)?;
            let written = write_idempotent(&e);
            if out.is_none() {
                text.push_str(&written);
            }
            save(out, &written, text)?;
            json!({ "support": e.terms().len(), "idempotent": written })
        }
        BlocksCmd::Project { rep: r, group: grp, e, idem, sub, out } => {
            let m = rep(g, r, Some(grp))?;
            let egrp = group(e)?;
            let idem = load_idempotent(&resolve(idem), egrp)?;
            let d = group(sub)?;
            let pr = project(&m, &idem, &d)?;
            let c = chop(&pr.module, g.seed)?;
            let _ = writeln!(text, "projection of dim {}", pr.module.dim());
            let _ = writeln!(text, "constituent dims {:?}", c.dims());
            save(out, &write_rep(&pr.module), text)?;
            json!({ "dim": pr.module.dim(), "constituents": constituents_json(&c) })
        }
    })
}

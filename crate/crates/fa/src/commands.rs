//! Command implementations.  Every command returns a `Report`; invocation
//! and input-syntax problems surface as `UsageError` instead, and internal
//! computation errors become failing report lines.

use crate::dsl::{parse_poly_str, AlgebraFile};
use crate::report::{tuple, Report};
use ncfilt::constructors::{enveloping, opposite, tensor};
use ncfilt::dimension::{
    cdim_filtered, gkdim_module, module_filtration_dims, ModulePresentation, ModuleRewrite,
};
use ncfilt::error::Result as NcResult;
use ncfilt::filtration::{gr_dims, gr_presentation, rees_presentation, specialize};
use ncfilt::localization::{
    diagonal_support_check, differential_filtration_check, verify_witness, OreEngine, OreVerdict,
};
use ncfilt::scalar;
use ncfilt::{Filtration, Generator, MonomialOrder, NCPoly, Presentation, RewriteSystem};
use std::fmt;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OrderChoice {
    /// Weighted degree from the filtration, ties by length then lex.
    Weights,
    /// Plain length then lex; ignores the filtration weights.
    LexTiebreak,
}

/// Invocation-level failure: bad files, bad flags, bad syntax.  Exit 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

pub type CmdResult = std::result::Result<Report, UsageError>;

pub struct Ctx {
    pub cap: u32,
    pub order: OrderChoice,
}

impl Ctx {
    fn rewrite_order(&self, filt: &Filtration) -> MonomialOrder {
        match self.order {
            OrderChoice::Weights => filt.order(),
            OrderChoice::LexTiebreak => MonomialOrder::len_lex(filt.degrees.len()),
        }
    }
}

fn load(path: &Path) -> std::result::Result<AlgebraFile, UsageError> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&src).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn poly_arg(pres: &Presentation, text: &str, flag: &str) -> std::result::Result<NCPoly, UsageError> {
    parse_poly_str(pres, text).map_err(|e| UsageError(format!("--{flag} {text:?}: {e}")))
}

/// Semicolon-separated polynomial list; empty or missing means none.
fn poly_list(
    pres: &Presentation,
    text: Option<&str>,
    flag: &str,
) -> std::result::Result<Vec<NCPoly>, UsageError> {
    let Some(text) = text else { return Ok(vec![]) };
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| poly_arg(pres, s, flag))
        .collect()
}

fn write_out(file: &AlgebraFile, path: &Path) -> std::result::Result<(), UsageError> {
    std::fs::write(path, file.print())
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Runs the fallible body; computation errors become a failing report.
fn reported(body: impl FnOnce(&mut Report) -> NcResult<()>) -> Report {
    let mut r = Report::new();
    if let Err(e) = body(&mut r) {
        r.line(format!("error: {e}"));
        r.verdict(false);
    }
    r
}

fn emit_presentation(
    r: &mut Report,
    produced: AlgebraFile,
    out: Option<&Path>,
) -> std::result::Result<(), UsageError> {
    r.block(&produced.print());
    r.fact("gens", produced.pres.ngens());
    r.fact("relations", produced.pres.relations.len());
    if let Some(path) = out {
        write_out(&produced, path)?;
        r.line(format!("wrote {}", path.display()));
    }
    Ok(())
}

pub fn new_cmd(
    path: &Path,
    name: &str,
    gens_spec: &str,
    rels: &[String],
    central: Option<&str>,
) -> CmdResult {
    let mut gens = Vec::new();
    for item in gens_spec.split(',') {
        let item = item.trim();
        let Some((gname, deg)) = item.split_once(':') else {
            return Err(UsageError(format!("--gens item {item:?}: expected name:degree")));
        };
        let degree: u32 = deg
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("--gens item {item:?}: bad degree")))?;
        gens.push(Generator { name: gname.trim().to_string(), degree });
    }
    let mut pres = Presentation::new(gens, vec![]);
    pres.validate().map_err(|e| UsageError(format!("--gens: {e}")))?;
    for rel in rels {
        let p = poly_arg(&pres, rel, "rel")?;
        pres.relations.push(p);
    }
    for cname in central.iter().flat_map(|s| s.split(',')).map(str::trim).filter(|s| !s.is_empty())
    {
        let i = pres
            .gen_index(cname)
            .ok_or_else(|| UsageError(format!("--central: unknown generator {cname}")))?;
        pres.central.insert(i);
    }
    let file = AlgebraFile::new(name, pres);
    let mut r = Report::new();
    emit_presentation(&mut r, file, Some(path))?;
    r.verdict(true);
    Ok(r)
}

pub fn gr_cmd(ctx: &Ctx, path: &Path, out: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let mut produced = None;
    let mut r = reported(|r| {
        let rs = RewriteSystem::complete(&file.pres, &filt.order(), ctx.cap)?;
        let g = gr_presentation(&file.pres, &filt, &rs)?;
        produced = Some(AlgebraFile::new(format!("{}_gr", file.name), g));
        r.fact("cap", ctx.cap);
        r.fact("dims", tuple(gr_dims(&file.pres, &filt, ctx.cap)?.0));
        r.verdict(rs.is_complete());
        Ok(())
    });
    if let Some(g) = produced {
        emit_presentation(&mut r, g, out)?;
    }
    Ok(r)
}

pub fn rees_cmd(path: &Path, out: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let mut produced = None;
    let mut r = reported(|r| {
        let rees = rees_presentation(&file.pres, &filt)?;
        produced = Some(AlgebraFile::new(format!("{}_rees", file.name), rees));
        r.verdict(true);
        Ok(())
    });
    if let Some(g) = produced {
        emit_presentation(&mut r, g, out)?;
    }
    Ok(r)
}

pub fn sp_cmd(path: &Path, lambda: &str, t: Option<&str>, out: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let lambda_val =
        scalar::parse(lambda).ok_or_else(|| UsageError(format!("--lambda {lambda:?}: not a rational")))?;
    let mut produced = None;
    let mut r = reported(|r| {
        let sp = specialize(&file.pres, &lambda_val, t)?;
        produced = Some(AlgebraFile::new(format!("{}_sp", file.name), sp));
        r.fact("lambda", scalar::display(&lambda_val));
        r.verdict(true);
        Ok(())
    });
    if let Some(g) = produced {
        emit_presentation(&mut r, g, out)?;
    }
    Ok(r)
}

pub fn twofilt_cmd(ctx: &Ctx, path: &Path) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    Ok(reported(|r| {
        let out = ncfilt::twofilt::two_filtrations(&file.pres, &filt, ctx.cap)?;
        let e = &out.exponents;
        let g: Vec<String> = file
            .pres
            .gens
            .iter()
            .zip(&out.g.degrees)
            .map(|(gen, d)| format!("{}:{d}", gen.name))
            .collect();
        r.line(format!(
            "split: {} commuting degree-0, {} positive-degree, {} other",
            out.split.a.len(),
            out.split.b.len(),
            out.split.c.len()
        ));
        r.line(format!("{} structure identities, max a-degree {}", out.structure.identities.len(), out.structure.max_a_degree));
        for f in &out.report.failures {
            r.line(format!(
                "commutator of {} and {} has degree {} above the bound {}",
                file.pres.gens[f.left].name, file.pres.gens[f.right].name, f.degree, f.bound
            ));
        }
        r.fact("cap", ctx.cap);
        r.fact("exponents", tuple([e.e0, e.e1, e.e2]));
        r.fact("g", g.join(", "));
        r.verdict(out.report.pass);
        Ok(())
    }))
}

pub fn tensor_cmd(left: &Path, right: &Path, out: Option<&Path>) -> CmdResult {
    let f1 = load(left)?;
    let f2 = load(right)?;
    let mut produced = None;
    let mut r = reported(|r| {
        let (pres, _) = tensor(&f1.pres, &f1.filtration(), &f2.pres, &f2.filtration())?;
        produced = Some(AlgebraFile::new(format!("{}_tensor_{}", f1.name, f2.name), pres));
        r.verdict(true);
        Ok(())
    });
    if let Some(g) = produced {
        emit_presentation(&mut r, g, out)?;
    }
    Ok(r)
}

pub fn op_cmd(path: &Path, out: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let produced = AlgebraFile::new(format!("{}_op", file.name), opposite(&file.pres));
    let mut r = Report::new();
    emit_presentation(&mut r, produced, out)?;
    r.verdict(true);
    Ok(r)
}

pub fn env_cmd(path: &Path, out: Option<&Path>) -> CmdResult {
    let file = load(path)?;
    let mut produced = None;
    let mut r = reported(|r| {
        let env = enveloping(&file.pres)?;
        produced = Some(AlgebraFile::new(format!("{}_env", file.name), env));
        r.verdict(true);
        Ok(())
    });
    if let Some(g) = produced {
        emit_presentation(&mut r, g, out)?;
    }
    Ok(r)
}

pub fn gkdim_cmd(ctx: &Ctx, path: &Path, module: Option<&str>) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let polys = poly_list(&file.pres, module, "module")?;
    Ok(reported(|r| {
        let m = ModulePresentation::cyclic(file.pres.clone(), &polys);
        let mrs = ModuleRewrite::complete(&m, &filt, ctx.cap)?;
        let dims = module_filtration_dims(&mrs, ctx.cap)?;
        let value = gkdim_module(&m, &filt, ctx.cap)?;
        r.fact("cap", ctx.cap);
        r.fact("complete", mrs.is_complete());
        r.fact("dims", tuple(dims.0));
        r.fact("gkdim", value);
        r.verdict(true);
        Ok(())
    }))
}

pub fn cdim_cmd(ctx: &Ctx, path: &Path, module: Option<&str>) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let polys = poly_list(&file.pres, module, "module")?;
    Ok(reported(|r| {
        let m = ModulePresentation::cyclic(file.pres.clone(), &polys);
        let report = cdim_filtered(&m, &filt, ctx.cap)?;
        let e = &report.certificate.exponents;
        r.line("two-filtrations certificate found; cdim read from certified growth");
        r.fact("cap", ctx.cap);
        r.fact("exponents", tuple([e.e0, e.e1, e.e2]));
        r.fact("cdim", report.value);
        r.verdict(report.certificate.report.pass);
        Ok(())
    }))
}

pub fn hilbert_cmd(ctx: &Ctx, path: &Path) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    Ok(reported(|r| {
        let rs = RewriteSystem::complete(&file.pres, &filt.order(), ctx.cap)?;
        let dims = gr_dims(&file.pres, &filt, ctx.cap)?;
        let cumulative: Vec<u64> = dims.cumulative();
        r.fact("cap", ctx.cap);
        r.fact("dims", tuple(dims.0));
        r.fact("cumulative", tuple(cumulative));
        r.verdict(rs.is_complete());
        Ok(())
    }))
}

fn compact(s: &str) -> String {
    s.replace(' ', "")
}

#[allow(clippy::too_many_arguments)]
pub fn ore_cmd(
    ctx: &Ctx,
    path: &Path,
    s_text: &str,
    a_text: &str,
    k_max: u32,
    k: Option<u32>,
    aprime_text: Option<&str>,
) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let s = poly_arg(&file.pres, s_text, "s")?;
    let a = poly_arg(&file.pres, a_text, "a")?;
    let proposed = match (k, aprime_text) {
        (Some(k), Some(text)) => Some((k, poly_arg(&file.pres, text, "aprime")?)),
        (None, None) => None,
        _ => return Err(UsageError("--k and --aprime must be given together".into())),
    };
    let order = ctx.rewrite_order(&filt);
    Ok(reported(|r| {
        let rs = RewriteSystem::complete(&file.pres, &order, ctx.cap)?;
        r.fact("cap", ctx.cap);
        match proposed {
            Some((k, a_prime)) => {
                let ok = verify_witness(&rs, &s, &a, &a_prime, k)?;
                if ok {
                    r.line(format!("verified: a*s^{k} = a'*s"));
                    r.fact(
                        "witness",
                        format!("k={k}, a'={}", compact(&file.pres.render_poly(&a_prime))),
                    );
                } else {
                    r.line(format!("proposed witness fails: a*s^{k} != a'*s"));
                }
                r.verdict(ok);
            }
            None => {
                let engine = OreEngine::new(&rs, &s)?;
                match engine.search(&a, k_max)? {
                    OreVerdict::Witness { a_prime, k } => {
                        r.line(format!("least power: a*s^{k} lands in the left ideal A*s"));
                        r.fact(
                            "witness",
                            format!("k={k}, a'={}", compact(&file.pres.render_poly(&a_prime))),
                        );
                        r.verdict(true);
                    }
                    OreVerdict::ObstructionCertified(c) => {
                        r.line(c);
                        r.named_verdict("fail", false);
                    }
                    OreVerdict::Inconclusive { cap, k_max } => {
                        r.line(format!(
                            "no witness found within cap {cap} and power bound {k_max}"
                        ));
                        r.named_verdict("inconclusive", false);
                    }
                }
            }
        }
        Ok(())
    }))
}

pub fn diffcheck_cmd(ctx: &Ctx, path: &Path, central: &str) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let mut c_gens = Vec::new();
    for name in central.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i = file
            .pres
            .gen_index(name)
            .ok_or_else(|| UsageError(format!("--central: unknown generator {name}")))?;
        c_gens.push(i);
    }
    Ok(reported(|r| {
        let report = differential_filtration_check(&file.pres, &filt, &c_gens, ctx.cap)?;
        for f in &report.failures {
            r.line(format!(
                "[{}, {}] has degree {} above the differential bound {}",
                file.pres.gens[f.c_gen].name,
                file.pres.render_word(&f.word),
                f.got,
                f.bound
            ));
        }
        r.fact("cap", report.cap);
        r.fact("checked", report.checked);
        r.fact("failures", report.failures.len());
        r.verdict(report.pass);
        Ok(())
    }))
}

pub fn diagsupp_cmd(ctx: &Ctx, path: &Path, module: Option<&str>, k_max: u32) -> CmdResult {
    let file = load(path)?;
    let env = enveloping(&file.pres)
        .map_err(|e| UsageError(format!("{}: not enveloping-compatible: {e}", path.display())))?;
    let n = file.pres.ngens();
    let relations = match module {
        Some(text) => poly_list(&env, Some(text), "module")?,
        None => (0..n).map(|i| NCPoly::gen(i).sub(&NCPoly::gen(n + i))).collect(),
    };
    Ok(reported(|r| {
        let m = ModulePresentation::cyclic(env.clone(), &relations);
        let report = diagonal_support_check(&file.pres, &m, k_max, ctx.cap)?;
        let rendered: Vec<String> = report
            .per_generator
            .iter()
            .map(|p| match p {
                Some(k) => k.to_string(),
                None => "none".to_string(),
            })
            .collect();
        if !report.complete {
            r.line("module completion hit the cap; annihilation is certified, escape is not");
        }
        r.fact("cap", ctx.cap);
        r.fact("kmax", report.k_max);
        r.fact("annihilator_powers", tuple(rendered));
        r.verdict(report.pass);
        Ok(())
    }))
}

pub fn check_cmd(ctx: &Ctx, path: &Path) -> CmdResult {
    let file = load(path)?;
    let filt = file.filtration();
    let order = ctx.rewrite_order(&filt);
    Ok(reported(|r| {
        let mut pass = true;
        let mut step = |r: &mut Report, name: &str, ok: bool| {
            r.line(format!("{}: {name}", if ok { "ok" } else { "FAIL" }));
            pass &= ok;
        };

        file.pres.validate()?;
        step(r, "presentation is well-formed", true);

        let reparsed = AlgebraFile::parse(&file.print());
        step(r, "print/parse round trip", reparsed.as_ref() == Ok(&file));

        let rs = RewriteSystem::complete(&file.pres, &order, ctx.cap)?;
        step(r, "completion certified below the cap", rs.is_complete());

        let confluence = rs.overlap_confluence_report();
        step(r, "all overlap ambiguities resolve", confluence.all_resolved);

        let in_box = |p: &NCPoly| p.terms().all(|(w, _)| order.in_box(w, ctx.cap));
        let reduced = file
            .pres
            .relations
            .iter()
            .filter(|p| in_box(p))
            .map(|p| rs.nf(p).map(|q| q.is_zero()))
            .collect::<NcResult<Vec<bool>>>()?;
        step(r, "relations reduce to zero", reduced.iter().all(|&b| b));

        r.fact("cap", ctx.cap);
        r.fact("rules", rs.rules().len());
        r.fact("dims", tuple(gr_dims(&file.pres, &filt, ctx.cap)?.0));
        r.verdict(pass);
        Ok(())
    }))
}

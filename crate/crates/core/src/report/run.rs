use super::config::{Command, Job, JobConfig};
use super::document::ReportDocument;
use super::suite::run_suite;
use crate::exterior::Multivector;
use crate::forms::{omega3, phi, q2};
use crate::h3::{dimension_audit, variation};
use crate::johnson::{
    bounding_pair_action_on_v, expected_johnson_contraction, johnson_element, BoundingPairSpec, JohnsonData,
    SubsurfaceSpec,
};
use crate::sample::DEFAULT_SEED;
use crate::{Error, Result};

pub const DEFAULT_TRIALS: usize = 20;

/// Resolves and runs a job.
pub fn run(config: &JobConfig) -> Result<ReportDocument> {
    run_job(&config.resolve()?)
}

pub fn run_job(job: &Job) -> Result<ReportDocument> {
    let mut report = ReportDocument::new(job.command.name(), job.genus());
    report.fixture = job.fixture.clone();
    report.params.insert("kappa1".into(), job.params.kappa1().to_string());
    report.params.insert("kappa2".into(), job.params.kappa2().to_string());
    match job.command {
        Command::Decompose => decompose(job, &mut report)?,
        Command::Forms => forms(job, &mut report)?,
        Command::Johnson => johnson(job, &mut report)?,
        Command::Act => act(job, &mut report)?,
        Command::Audit => audit(job, &mut report),
        Command::Invariants => invariants(job, &mut report)?,
    }
    Ok(report)
}

fn decompose(job: &Job, report: &mut ReportDocument) -> Result<()> {
    let s = &job.space;
    let x = job.multivector_ref(job.arg("x").unwrap_or("top"), 3, "args.x")?;
    let p = s.project_primitive(&x)?;
    let w = s.delta_component(&x)?;
    let dw = s.delta().wedge(&Multivector::from_vector(&w))?;
    report.input("x", x.to_string());
    report.output("contraction", s.contraction3(&x)?.to_string());
    report.output("primitive_part", p.to_string());
    report.output("delta_component", w.to_string());
    report.output("delta_part", dw.to_string());
    report.check("contraction(primitive_part) = 0", s.contraction3(&p)?.is_zero());
    report.check(
        "project(primitive_part) = primitive_part",
        s.project_primitive(&p)? == p,
    );
    report.check("x = primitive_part + delta^w", &p + &dw == x);
    report.verdict = Some(
        match (p.is_zero(), w.is_zero()) {
            (true, true) => "ZERO",
            (false, true) => "PRIMITIVE",
            (true, false) => "IN-δ∧V",
            (false, false) => "MIXED",
        }
        .into(),
    );
    Ok(())
}

fn forms(job: &Job, report: &mut ReportDocument) -> Result<()> {
    let s = &job.space;
    let mut evaluated = false;
    let first = match job.arg("s") {
        Some(text) => Some(job.multivector_ref(text, 3, "args.s")?),
        None => match job.bounding_pair() {
            Ok((name, pair)) => {
                report.input("s.source", format!("j({name})"));
                Some(crate::johnson::johnson_bp(&pair)?)
            }
            Err(_) => None,
        },
    };
    let second = match (job.arg("t"), job.multivectors.contains_key("top")) {
        (Some(text), _) => Some(job.multivector_ref(text, 3, "args.t")?),
        (None, true) => Some(job.multivectors["top"].clone()),
        (None, false) => None,
    };
    if let (Some(x), Some(y)) = (&first, &second) {
        evaluated = true;
        report.input("s", x.to_string());
        report.input("t", y.to_string());
        let w = omega3(x, y)?;
        let f = phi(x, y)?;
        report.output("omega3", w.to_string());
        report.output("phi", f.to_string());
        report.output("s.primitive", s.is_primitive(x)?);
        report.output("t.primitive", s.is_primitive(y)?);
        report.check("omega3(s,t) = -omega3(t,s)", omega3(y, x)? == -w);
        report.check("phi(s,t) = phi(t,s)", phi(y, x)? == f);
        if s.is_primitive(y)? {
            report.check(
                "phi(s,t) = phi(project(s),t) for primitive t",
                phi(&s.project_primitive(x)?, y)? == f,
            );
        }
    }
    if let (Some(a), Some(b)) = (job.arg("x"), job.arg("y")) {
        evaluated = true;
        let x = job.multivector_ref(a, 2, "args.x")?;
        let y = job.multivector_ref(b, 2, "args.y")?;
        report.input("x", x.to_string());
        report.input("y", y.to_string());
        let q = q2(&x, &y)?;
        report.output("q", q.to_string());
        report.check("q(x,y) = q(y,x)", q2(&y, &x)? == q);
    }
    if !evaluated {
        return Err(Error::Config {
            location: "args".into(),
            message: "forms needs s and t (degree 3) or x and y (degree 2)".into(),
        });
    }
    Ok(())
}

fn echo_side(report: &mut ReportDocument, key: &str, side: &SubsurfaceSpec) {
    report.input(&format!("{key}.boundary"), side.boundary().to_string());
    let pairs = side
        .pairs()
        .iter()
        .map(|(e, f)| format!("({e}, {f})"))
        .collect::<Vec<_>>()
        .join("; ");
    report.input(&format!("{key}.pairs"), pairs);
}

fn echo_pair(report: &mut ReportDocument, name: &str, pair: &BoundingPairSpec) {
    report.input("bounding_pair", name);
    echo_side(report, "side1", pair.side1());
    echo_side(report, "side2", pair.side2());
}

fn johnson(job: &Job, report: &mut ReportDocument) -> Result<()> {
    let s = &job.space;
    if let (Some(name), None) = (job.arg("subsurface"), job.arg("bounding_pair")) {
        let side = job.subsurfaces.get(name).ok_or_else(|| Error::Config {
            location: "args.subsurface".into(),
            message: format!("unknown subsurface {name:?}"),
        })?;
        report.input("subsurface", name);
        echo_side(report, "subsurface", side);
        let j = johnson_element(side);
        let c = s.contraction3(&j)?;
        report.output("j", j.to_string());
        report.output("j.contraction", c.to_string());
        report.output("j.primitive_part", s.project_primitive(&j)?.to_string());
        report.check(
            "contraction(j(X')) = genus(X')·d",
            c == expected_johnson_contraction(side),
        );
        return Ok(());
    }
    let (name, pair) = job.bounding_pair()?;
    echo_pair(report, &name, &pair);
    let data = JohnsonData::compute(&pair)?;
    report.output("d", pair.d().to_string());
    report.output("j(side1)", data.side1.to_string());
    report.output("j(side2)", data.side2.to_string());
    report.output("j(side1) - j(side2)", data.difference.to_string());
    report.output("d^delta", data.d_wedge_delta.to_string());
    report.output("j(d,d')", data.primitive1.to_string());
    report.check("j(X') - j(X'') = d^delta", data.identity_holds());
    report.check("project(j(X')) = project(j(X''))", data.projections_agree());
    report.check("contraction(j(d,d')) = 0", s.contraction3(&data.primitive1)?.is_zero());
    report.check(
        "contraction(j(X')) = genus(X')·d",
        s.contraction3(&data.side1)? == expected_johnson_contraction(pair.side1())
            && s.contraction3(&data.side2)? == expected_johnson_contraction(pair.side2()),
    );
    report.check(
        "tau_d tau_d'^-1 = id on V",
        bounding_pair_action_on_v(&pair).is_identity(),
    );
    Ok(())
}

fn act(job: &Job, report: &mut ReportDocument) -> Result<()> {
    let s = &job.space;
    let (name, pair) = job.bounding_pair()?;
    let top = job.multivector_ref(job.arg("top").unwrap_or("top"), 3, "args.top")?;
    echo_pair(report, &name, &pair);
    report.input("top", top.to_string());
    if !s.is_primitive(&top)? {
        return Err(Error::NotPrimitive(s.contraction3(&top)?.to_string()));
    }
    let data = JohnsonData::compute(&pair)?;
    report.check("j(X') - j(X'') = d^delta", data.identity_holds());
    report.check("project(j(X')) = project(j(X''))", data.projections_agree());
    report.check(
        "tau_d tau_d'^-1 = id on V",
        bounding_pair_action_on_v(&pair).is_identity(),
    );
    if !(data.identity_holds() && data.projections_agree()) {
        // j(d,d') is not well defined for this data
        return Ok(());
    }
    let var = variation(&pair, &top, &job.params)?;
    report.output("j(d,d')", data.primitive1.to_string());
    report.output("phi(j(d,d'), top)", phi(&data.primitive1, &top)?.to_string());
    report.output("omega3(j(d,d'), top)", omega3(&data.primitive1, &top)?.to_string());
    report.output("variation.scalar", var.scalar().to_string());
    report.output("variation.sym2", var.sym2().to_string());
    report.output("variation.top", var.top().to_string());
    report.check("variation.top = 0", var.top().is_zero());
    report.verdict = Some(if var.is_zero() { "TRIVIAL" } else { "NONTRIVIAL" }.into());
    Ok(())
}

fn audit(job: &Job, report: &mut ReportDocument) {
    let a = dimension_audit(&job.space);
    report.output("sub", a.sub);
    report.output("sub.scalar", a.sub_scalar);
    report.output("sub.sym2", a.sub_sym2);
    report.output("quotient", a.quotient);
    report.output("total", a.total);
    report.output("quotient.rank_projector", a.quotient_rank_projector);
    report.output("quotient.rank_isotropic", a.quotient_rank_isotropic);
    report.output("weight.sub", crate::h3::WEIGHT_PURE.to_string());
    report.output("weight.quotient", crate::h3::WEIGHT_QUOTIENT.to_string());
    report.check(
        "rank(projector image) = rank(isotropic span)",
        a.quotient_rank_projector == a.quotient_rank_isotropic,
    );
    report.check(
        "dim ∧³ₒV = C(2g,3) - 2g",
        a.quotient_rank_projector == a.quotient_expected,
    );
    report.check("total = sub + quotient", a.sub + a.quotient == a.total);
}

fn invariants(job: &Job, report: &mut ReportDocument) -> Result<()> {
    let seed = job.seed.unwrap_or(DEFAULT_SEED);
    let trials = match job.arg("trials") {
        Some(t) => t.parse().map_err(|_| Error::Config {
            location: "args.trials".into(),
            message: format!("not a count: {t:?}"),
        })?,
        None => DEFAULT_TRIALS,
    };
    report.seed = Some(seed);
    report.input("trials", trials);
    for (name, ok) in run_suite(&job.space, seed, trials) {
        report.check(&name, ok);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::FIGURE_ONE;

    fn fixture_job(command: &str) -> JobConfig {
        let mut c = JobConfig::for_fixture(FIGURE_ONE);
        c.command = Some(command.into());
        c
    }

    #[test]
    fn act_on_figure_one_is_nontrivial() {
        let r = run(&fixture_job("act")).unwrap();
        assert_eq!(r.outputs["variation.sym2"], "a2·a3".into());
        assert_eq!(r.outputs["phi(j(d,d'), top)"], "-a2·a3".into());
        assert_eq!(r.verdict.as_deref(), Some("NONTRIVIAL"));
        assert!(r.all_pass());
    }

    #[test]
    fn decompose_delta_wedge_a1() {
        let mut c = fixture_job("decompose");
        c.set_arg("x", "a2^b2^a1 + a3^b3^a1");
        let r = run(&c).unwrap();
        assert_eq!(r.outputs["primitive_part"], "0".into());
        assert_eq!(r.verdict.as_deref(), Some("IN-δ∧V"));
        assert!(r.all_pass());
    }

    #[test]
    fn audit_genus_three() {
        let mut c = JobConfig {
            command: Some("audit".into()),
            genus: Some(3),
            ..Default::default()
        };
        let r = run(&c).unwrap();
        assert_eq!(
            (&r.outputs["sub"], &r.outputs["quotient"], &r.outputs["total"]),
            (&22usize.into(), &14usize.into(), &36usize.into())
        );
        c.genus = Some(1);
        assert!(run(&c).is_err());
    }

    #[test]
    fn forms_default_to_the_figure_one_computation() {
        let r = run(&fixture_job("forms")).unwrap();
        assert_eq!(r.outputs["phi"], "-a2·a3".into());
        assert!(r.all_pass());
    }

    #[test]
    fn johnson_on_figure_one() {
        let r = run(&fixture_job("johnson")).unwrap();
        assert_eq!(r.outputs["j(d,d')"], "1/2 a1^a2^b2 - 1/2 a1^a3^b3".into());
        assert!(r.all_pass());
        let mut c = fixture_job("johnson");
        c.set_arg("subsurface", "side1");
        let r = run(&c).unwrap();
        assert_eq!(r.outputs["j.contraction"], "a1".into());
    }

    #[test]
    fn act_rejects_non_primitive_top() {
        let mut c = fixture_job("act");
        c.set_arg("top", "a1^a2^b2");
        assert!(matches!(run(&c), Err(Error::NotPrimitive(_))));
    }
}

//! Command implementations behind the `spbw` binary and the Python module.
//! Each returns a [`Report`]; [`exit_code`] maps outcomes to process codes.

use serde_json::json;

use crate::catalog;
use crate::dsl::Document;
use crate::gbasis::{member as ideal_member, IdealBasis, Membership};
use crate::homology::{self, SasVerdict};
use crate::matring::{is_idempotent, mat_mul, Complex, Mat, Side};
use crate::orefree;
use crate::polyarith::{gk_estimate, hilbert_series_truncated, Poly, Ring};
use crate::report::{Report, Status};
use crate::{Error, Result};

/// Loads a document from a path, `-` (stdin) or `@name` (a catalog preset).
pub fn load(input: &str) -> Result<Document> {
    if let Some(name) = input.strip_prefix('@') {
        return catalog::document(name);
    }
    let src = if input == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Usage(format!("stdin: {}", e)))?
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Usage(format!("{}: {}", input, e)))?
    };
    Document::parse(&src)
}

/// 0 pass, 1 fail, 2 inconclusive, 3 usage or parse error.
pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(rep) => match rep.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        },
        Err(Error::Parse { .. } | Error::Usage(_) | Error::UnknownPreset { .. } | Error::Shape(_) | Error::Rejected(_)) => 3,
        Err(_) => 1,
    }
}

fn ring<'a>(doc: &'a Document, name: Option<&str>) -> Result<&'a Ring> {
    match name {
        Some(n) => doc.ring(n).map(|r| &**r).ok_or_else(|| Error::Usage(format!("no ring named `{}`", n))),
        None => doc.rings().first().map(|r| &**r).ok_or_else(|| Error::Usage("document declares no ring".into())),
    }
}

fn matrix<'a>(doc: &'a Document, name: Option<&str>) -> Result<(&'a Ring, &'a Mat)> {
    let decl = match name {
        Some(n) => doc.matrices().iter().find(|m| m.name == n),
        None => doc.matrices().first(),
    }
    .ok_or_else(|| Error::Usage(format!("no matrix {}", name.map(|n| format!("named `{}`", n)).unwrap_or_default())))?;
    Ok((ring(doc, Some(&decl.ring))?, &decl.mat))
}

fn complex<'a>(doc: &'a Document, name: Option<&str>) -> Result<Option<(&'a Ring, Complex)>> {
    let decl = match name {
        Some(n) => Some(
            doc.complexes()
                .iter()
                .find(|c| c.name == n)
                .ok_or_else(|| Error::Usage(format!("no complex named `{}`", n)))?,
        ),
        None => doc.complexes().first(),
    };
    match decl {
        None => Ok(None),
        Some(d) => {
            let c = doc.complex(&d.name).expect("validated at parse");
            Ok(Some((ring(doc, Some(&d.ring))?, c)))
        }
    }
}

pub fn validate(doc: &Document) -> Result<Report> {
    let mut rep = Report::new("validate", None);
    for r in doc.rings() {
        let p = r.presentation();
        let sub = p.validate();
        rep.value(r.name(), json!({"quasi_commutative": sub.values["quasi_commutative"], "bijective": sub.values["bijective"]}));
        rep.extend(r.name(), sub);
    }
    for c in doc.complexes() {
        let ring = ring(doc, Some(&c.ring))?;
        let cx = doc.complex(&c.name).expect("validated at parse");
        rep.extend(&c.name, crate::matring::is_complex(ring, &cx)?);
    }
    rep.value("normalized", doc.to_text());
    Ok(rep)
}

pub fn normalize(doc: &Document, ring_name: Option<&str>, expr: &str) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    let p = crate::dsl::parse_poly(r, expr)?;
    let mut rep = Report::new("normalize", Some(r.name()));
    rep.value("input", expr);
    rep.value("normal_form", r.fmt(&p));
    rep.value("degree", json!(p.degree()));
    Ok(rep)
}

pub fn mul(doc: &Document, ring_name: Option<&str>, factors: &[String]) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    if factors.is_empty() {
        return Err(Error::Usage("mul needs at least one factor".into()));
    }
    let mut acc = r.one();
    for f in factors {
        acc = r.mul(&acc, &crate::dsl::parse_poly(r, f)?);
    }
    let mut rep = Report::new("mul", Some(r.name()));
    rep.value("factors", json!(factors));
    rep.value("product", r.fmt(&acc));
    Ok(rep)
}

pub fn hilbert(doc: &Document, ring_name: Option<&str>, n: u32) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    let mut rep = Report::new("hilbert", Some(r.name()));
    let dims: Vec<String> = hilbert_series_truncated(r.n(), n).iter().map(u128::to_string).collect();
    rep.value("N", n);
    rep.value("dimensions", json!(dims));
    Ok(rep)
}

pub fn gk(doc: &Document, ring_name: Option<&str>, m: u32) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    if m < 4 {
        return Err(Error::Usage("--M must be at least 4".into()));
    }
    let est = gk_estimate(r.n(), m);
    let mut rep = Report::new("gk", Some(r.name()));
    rep.value("M", m);
    rep.value("estimate", est.estimate());
    rep.value("full_slope", est.full_slope);
    rep.value("log_ratio", est.log_ratio);
    rep.value("variables", r.n());
    Ok(rep)
}

fn ideal(r: &Ring, side: Side, gens: &[String]) -> Result<IdealBasis> {
    if gens.is_empty() {
        return Err(Error::Usage("give at least one generator".into()));
    }
    let polys = gens.iter().map(|g| crate::dsl::parse_poly(r, g)).collect::<Result<Vec<Poly>>>()?;
    IdealBasis::new(r, side, polys)
}

pub fn member(
    doc: &Document,
    ring_name: Option<&str>,
    side: Side,
    element: &str,
    gens: &[String],
    bound: Option<u32>,
) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    let f = crate::dsl::parse_poly(r, element)?;
    let mut id = ideal(r, side, gens)?;
    let bound = bound.unwrap_or_else(|| id.default_bound().max(f.degree().unwrap_or(0) * 2 + 4));
    let m = ideal_member(r, &f, &mut id, bound)?;
    let mut rep = Report::new("member", Some(r.name()));
    rep.value("side", side.as_str());
    rep.value("element", r.fmt(&f));
    rep.value("degree_bound", bound);
    let status = match &m {
        Membership::Member(cert) => {
            rep.value("certificate", cert.to_json(r));
            Status::Pass
        }
        Membership::NotMember(why) => {
            rep.value("reason", format!("{:?}", why));
            Status::Fail
        }
        Membership::NotMemberUpTo(_) => Status::Inconclusive,
    };
    rep.check("membership", status, json!(m.to_string()));
    Ok(rep)
}

pub fn gb(doc: &Document, ring_name: Option<&str>, side: Side, gens: &[String], bound: Option<u32>) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    let mut id = ideal(r, side, gens)?;
    let bound = bound.unwrap_or_else(|| id.default_bound());
    id.complete(r, bound)?;
    let mut rep = Report::new("gb", Some(r.name()));
    rep.value("side", side.as_str());
    rep.value("degree_bound", bound);
    rep.value("basis", json!(id.basis.iter().map(|g| r.fmt(g)).collect::<Vec<_>>()));
    rep.pass_if("representations re-multiply", id.representations_hold(r), json!(null));
    let st = if id.exhaustive { Status::Pass } else { Status::Inconclusive };
    rep.check(
        "complete",
        st,
        json!(if id.exhaustive { "no pair skipped" } else { "pairs above the bound were skipped" }),
    );
    Ok(rep)
}

pub fn idem_check(doc: &Document, name: Option<&str>) -> Result<Report> {
    let (r, f) = matrix(doc, name)?;
    let mut rep = Report::new("idem-check", Some(r.name()));
    if !f.is_square() {
        return Err(Error::DimensionMismatch("idempotency needs a square matrix".into()));
    }
    let ok = is_idempotent(r, f)?;
    let evidence = if ok {
        json!(null)
    } else {
        json!(mat_mul(r, f, f)?.sub(f)?.to_text(r))
    };
    rep.pass_if("F*F = F", ok, evidence);
    Ok(rep)
}

pub fn qs_diagonalize(doc: &Document, name: Option<&str>) -> Result<Report> {
    let (r, f) = matrix(doc, name)?;
    let cert = orefree::qs_diagonalize(r, f)?;
    let mut rep = orefree::verify_certificate(r, f, &cert)?;
    rep.command = "qs-diagonalize".into();
    rep.value("U", cert.u.to_text(r));
    rep.value("Uinv", cert.u_inv.to_text(r));
    rep.value(
        "basis",
        json!(cert.basis.iter().map(|row| row.iter().map(|p| r.fmt(p)).collect::<Vec<_>>()).collect::<Vec<_>>()),
    );
    Ok(rep)
}

pub fn resolution_verify(doc: &Document, name: Option<&str>) -> Result<Report> {
    let (r, c) = complex(doc, name)?.ok_or_else(|| Error::Usage("document declares no complex".into()))?;
    homology::resolution_check(r, &c)
}

pub fn sas_check(doc: &Document, name: Option<&str>, probe_bound: u32) -> Result<(SasVerdict, Report)> {
    let found = complex(doc, name)?;
    let r = match &found {
        Some((r, _)) => *r,
        None => ring(doc, None)?,
    };
    let gld = r.presentation().gld.map(|g| g.value());
    let (v, mut rep) = homology::sas_check(r, found.as_ref().map(|(_, c)| c), gld, probe_bound)?;
    rep.value("probe_bound", probe_bound);
    if let SasVerdict::NotSas(w) = &v {
        rep.value("witness", w.as_str());
    }
    Ok((v, rep))
}

pub fn center(doc: &Document, ring_name: Option<&str>, degree: u32) -> Result<Report> {
    let r = ring(doc, ring_name)?;
    Ok(homology::center_up_to_degree(r, degree)?.1)
}

pub fn catalog_list() -> Result<Report> {
    let mut rep = Report::new("catalog list", None);
    let mut entries = Vec::new();
    for name in catalog::names() {
        let doc = catalog::document(name)?;
        let p = doc.rings()[0].presentation();
        entries.push(json!({
            "name": name,
            "vars": p.vars,
            "params": p.params,
            "gld": p.gld.map(|g| g.value()),
            "complexes": doc.complexes().iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
            "matrices": doc.matrices().iter().map(|m| m.name.clone()).collect::<Vec<_>>(),
        }));
    }
    rep.value("presets", json!(entries));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let doc = load("@dispin").unwrap();
        let (v, rep) = sas_check(&doc, None, 3).unwrap();
        assert_eq!((v.label(), exit_code(&Ok(rep))), ("SAS_Verified", 0));
        let doc = load("@type4").unwrap();
        let (v, rep) = sas_check(&doc, None, 3).unwrap();
        assert_eq!((v.label(), exit_code(&Ok(rep))), ("NotSAS", 1));
        assert_eq!(exit_code(&load("@nope").map(|_| Report::new("x", None))), 3);
        assert_eq!(exit_code(&Document::parse("ring r {").map(|_| Report::new("x", None))), 3);
    }

    #[test]
    fn membership_and_normal_forms() {
        let doc = load("@dispin").unwrap();
        let rep = member(&doc, None, Side::Left, "x2", &["x1".into(), "x3".into()], None).unwrap();
        assert!(rep.passed(), "{}", rep.render_text());
        let rep = mul(&doc, None, &["x3".into(), "x1^2".into()]).unwrap();
        assert_eq!(rep.values["product"], json!("x1^2*x3 - x1"));
        let rep = member(&doc, None, Side::Left, "1 + x1", &["x1".into()], None).unwrap();
        assert_eq!(rep.status(), Status::Fail);
    }

    #[test]
    fn idempotency_and_catalog() {
        let doc = load("@ore_idempotent").unwrap();
        assert_eq!(idem_check(&doc, Some("F")).unwrap().status(), Status::Fail);
        assert!(idem_check(&doc, Some("Fcorrected")).unwrap().passed());
        let rep = catalog_list().unwrap();
        assert_eq!(rep.values["presets"].as_array().unwrap().len(), catalog::names().len());
    }
}

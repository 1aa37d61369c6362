use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::json;

use eqos_core::arrangement::{parse_arrangement, Arrangement, PointedData, SignVector};
use eqos_core::fixtures;
use eqos_core::invariants::{
    ann_generated_by, ann_profile, distinguish, fingerprint, separating_invariants, two_generated_annihilators,
    Certificate, Verdict, NOT_DISTINGUISHED_NOTE,
};
use eqos_core::poly::{parse_poly, Gf2Poly, PolyRing};
use eqos_core::presentations::{
    cone_formula_holds, eq_ideal, free_signature, match_coorientation, os_ideal, parse_ideal, specialize,
    vg_chamber_model, vg_dimension, IdealPresentation,
};
use eqos_core::salvetti::{
    build_salvetti, equivariant_cohomology_gf2, homology_gf2, parse_sign_vectors, CovectorData,
};

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RingKind {
    Os,
    Eq,
    Vg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Example {
    Falk,
    Vertical,
    Cone,
}

pub const ANNIHILATOR_NOTE: &str =
    "annihilator sweep ranges over every nonzero linear form and every pair of linear forms it kills";

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_arrangement(path: &Path, report: &mut Report) -> Result<Arrangement> {
    let text = read(path)?;
    report.input(&path.display().to_string(), &text);
    parse_arrangement(&text).with_context(|| format!("in {}", path.display()))
}

fn load_ideal(path: &Path, report: &mut Report) -> Result<IdealPresentation> {
    let text = read(path)?;
    report.input(&path.display().to_string(), &text);
    parse_ideal(&text).with_context(|| format!("in {}", path.display()))
}

fn poly_lines(p: &IdealPresentation, polys: &[Gf2Poly]) -> Vec<String> {
    polys.iter().map(|g| g.display(&p.ring).to_string()).collect()
}

fn horizon(report: &mut Report, given: Option<usize>, default: usize, why: &str) -> usize {
    match given {
        Some(d) => {
            report.degree(d, "requested");
            d
        }
        None => {
            report.degree(default, why);
            default
        }
    }
}

pub fn presentation(report: &mut Report, path: &Path, ring: RingKind, degree: Option<usize>) -> Result<()> {
    let a = load_arrangement(path, report)?;
    let rank = a.rank();
    let d = horizon(report, degree, rank + 2, "rank + 2");
    let eq = eq_ideal(&a)?;
    let os = os_ideal(&a)?;
    let p = match ring {
        RingKind::Os => os.clone(),
        RingKind::Eq => eq.clone(),
        RingKind::Vg => specialize(&eq, 1)?,
    };
    let gens: Vec<String> = p
        .generators
        .iter()
        .zip(&p.provenance)
        .map(|(g, prov)| format!("{}    [{prov}]", g.display(&p.ring)))
        .collect();
    let gb = p.groebner();
    let s = report.section("presentation");
    s.put("ring", format!("{ring:?}").to_lowercase())
        .put("hyperplanes", a.len())
        .put("dimension", a.dim())
        .put("rank", rank)
        .put("generator_count", gens.len())
        .put("generators", gens)
        .put("groebner", poly_lines(&p, &gb));

    match ring {
        RingKind::Os | RingKind::Eq => {
            let hf = p.hilbert_function(d);
            report.section("hilbert").put("hilbert_function", json!(hf));
            let psi = specialize(&eq, 0)?.same_ideal(&os);
            report.check("psi", psi, "x = 0 specialization of the equivariant ideal equals the Orlik-Solomon ideal");
            if ring == RingKind::Eq {
                if d > rank {
                    let os_hf = os.hilbert_function(d);
                    let free = free_signature(&hf, &os_hf, rank);
                    report.check(
                        "free",
                        free,
                        format!("first differences of {hf:?} recover the Orlik-Solomon function {os_hf:?}"),
                    );
                } else {
                    report.note(format!("freeness check skipped: degree {d} is below rank + 1"));
                }
            }
        }
        RingKind::Vg => {
            report.note("the x = 1 ring is filtered, not graded; counts are standard monomials per degree up to n");
            let q = p.quotient(p.n());
            let by_degree: Vec<usize> = (0..=p.n()).map(|k| q.standard_monomials(k).len()).collect();
            let chambers = a.chambers()?.len();
            let dim = vg_dimension(&p);
            report
                .section("dimension")
                .put("standard_monomials_by_degree", json!(by_degree))
                .put("total_dimension", dim)
                .put("chambers", chambers);
            report.check("chambers", dim == chambers, format!("dimension {dim}, chambers {chambers}"));
            report.check(
                "heaviside",
                vg_chamber_model(&a)?,
                "every generator vanishes on the Heaviside point of every chamber",
            );
        }
    }
    Ok(())
}

fn certificate_line(c: &Certificate) -> String {
    c.to_string()
}

fn compare_quotients(
    report: &mut Report,
    left: &IdealPresentation,
    right: &IdealPresentation,
    d: usize,
) -> Result<Verdict> {
    if left.ring != right.ring {
        bail!(
            "rings differ: n={} x={} vs n={} x={}",
            left.n(),
            left.has_x() as u8,
            right.n(),
            right.has_x() as u8
        );
    }
    let (q1, q2) = (left.quotient(d + 1), right.quotient(d + 1));
    let verdict = distinguish(&q1, &q2, d)?;
    let all = separating_invariants(&q1, &q2, d)?;
    let (t1, t2) = (two_generated_annihilators(&q1, d)?, two_generated_annihilators(&q2, d)?);
    let forms = |t: &[eqos_core::invariants::TwoGenerated], r: &PolyRing| -> Vec<String> {
        t.iter()
            .map(|w| {
                format!(
                    "Ann({}) = <{}, {}>",
                    w.form.display(r),
                    w.generators[0].display(r),
                    w.generators[1].display(r)
                )
            })
            .collect()
    };
    report
        .section("invariants")
        .put("hilbert_left", json!(q1.hilbert_function(d)?))
        .put("hilbert_right", json!(q2.hilbert_function(d)?))
        .put("fingerprint_left", fingerprint(&q1, d)?.to_string())
        .put("fingerprint_right", fingerprint(&q2, d)?.to_string())
        .put("two_generated_left", json!(forms(&t1, &left.ring)))
        .put("two_generated_right", json!(forms(&t2, &right.ring)));
    report.note(ANNIHILATOR_NOTE);
    let s = report.section("verdict");
    s.put("verdict", verdict.label());
    match &verdict {
        Verdict::Distinguished { certificate } => {
            s.put("certificate", certificate_line(certificate));
            s.put("certificate_json", serde_json::to_value(certificate)?);
            s.put("separating", json!(all.iter().map(certificate_line).collect::<Vec<_>>()));
        }
        Verdict::NotDistinguished => {
            s.put("meaning", NOT_DISTINGUISHED_NOTE);
        }
    }
    Ok(verdict)
}

pub fn compare(report: &mut Report, a: &Path, b: &Path, ideals: bool, degree: Option<usize>) -> Result<()> {
    let (left, right, default, why) = if ideals {
        (load_ideal(a, report)?, load_ideal(b, report)?, 4, "default for ideal files")
    } else {
        let (x, y) = (load_arrangement(a, report)?, load_arrangement(b, report)?);
        let r = x.rank().max(y.rank());
        (eq_ideal(&x)?, eq_ideal(&y)?, r + 2, "rank + 2")
    };
    let d = horizon(report, degree, default, why);
    compare_quotients(report, &left, &right, d)?;
    Ok(())
}

pub enum SalvettiInput<'a> {
    Arrangement(&'a Path),
    Covectors { topes: &'a Path, covectors: &'a Path },
}

pub fn salvetti(report: &mut Report, input: SalvettiInput<'_>, degree: Option<usize>, equivariant: bool) -> Result<()> {
    let (faces, data): (Vec<SignVector>, Box<dyn PointedData>) = match input {
        SalvettiInput::Arrangement(path) => {
            let mut a = load_arrangement(path, report)?;
            if !a.is_central() {
                a = a.cone();
                report.note(format!(
                    "affine input coned: hyperplane {} is the hyperplane at infinity",
                    a.len()
                ));
            }
            (a.enumerate_faces()?, Box::new(a))
        }
        SalvettiInput::Covectors { topes, covectors } => {
            let (ttext, ctext) = (read(topes)?, read(covectors)?);
            report.input(&topes.display().to_string(), &ttext);
            report.input(&covectors.display().to_string(), &ctext);
            let t = parse_sign_vectors(&ttext).with_context(|| format!("in {}", topes.display()))?;
            let c = parse_sign_vectors(&ctext).with_context(|| format!("in {}", covectors.display()))?;
            let data = CovectorData::with_topes(c.clone(), &t)?;
            (c, Box::new(data))
        }
    };
    let rank = data.rank();
    let d = horizon(report, degree, rank + 2, "rank + 2");
    let sal = build_salvetti(&faces)?;
    let inv = sal.involution()?;
    let complex = sal.order_complex();
    let top = complex.dimension().unwrap_or(0);
    let fixed = (0..sal.len()).filter(|&i| inv[i] == i).count();
    report
        .section("complex")
        .put("hyperplanes", data.size())
        .put("rank", rank)
        .put("faces", faces.len())
        .put("chambers", sal.chamber_count())
        .put("salvetti_elements", sal.len())
        .put("simplices_by_dimension", json!(complex.counts()))
        .put("euler_characteristic", complex.euler_characteristic())
        .put("fixed_points", fixed);
    report.check(
        "fixed-points",
        fixed == sal.chamber_count(),
        format!("{fixed} fixed elements, {} chambers", sal.chamber_count()),
    );

    let betti = homology_gf2(&complex, top);
    let span = d.max(top);
    let os_hf = os_ideal(data.as_ref())?.hilbert_function(span);
    let mut padded = betti.clone();
    padded.resize(span + 1, 0);
    report
        .section("homology")
        .put("betti", json!(betti))
        .put("orlik_solomon_hilbert", json!(os_hf));
    report.check("betti", padded == os_hf, "GF(2) Betti numbers equal the Orlik-Solomon Hilbert function");

    if equivariant {
        let borel = equivariant_cohomology_gf2(&complex, &inv, d)?;
        let eq_hf = eq_ideal(data.as_ref())?.hilbert_function(d);
        let eq_trunc = eq_hf[..d].to_vec();
        report.note(format!(
            "Borel complex truncated at twist degree {d}; dimensions trusted through degree {}",
            d.saturating_sub(1)
        ));
        report
            .section("equivariant")
            .put("borel_dimensions", json!(borel))
            .put("equivariant_hilbert", json!(eq_trunc));
        report.check("borel", borel == eq_trunc, "Borel dimensions equal the equivariant Hilbert function");
        let differences_ok = (0..borel.len()).all(|k| {
            let prev = if k > 0 { borel[k - 1] } else { 0 };
            borel[k] as i64 - prev as i64 == padded.get(k).copied().unwrap_or(0) as i64
        });
        report.check("borel-free", differences_ok, "first differences of the Borel dimensions are the Betti numbers");
    }
    Ok(())
}

fn example_ideal(text: &str) -> IdealPresentation {
    parse_ideal(text).expect("bundled fixture parses")
}

fn example_arrangement(text: &str) -> Arrangement {
    parse_arrangement(text).expect("bundled fixture parses")
}

fn mask_text(mask: u64, n: usize) -> String {
    let flipped: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    if flipped.is_empty() {
        "no hyperplanes flipped".into()
    } else {
        format!("hyperplanes {} flipped", flipped.join(", "))
    }
}

pub fn reproduce(report: &mut Report, example: Example) -> Result<()> {
    match example {
        Example::Falk => reproduce_falk(report),
        Example::Vertical => reproduce_vertical(report),
        Example::Cone => reproduce_cone(report),
    }
}

fn reproduce_falk(report: &mut Report) -> Result<()> {
    let d = 4;
    report.degree(d, "fixture default");
    report.input("fixtures/falk_j.ideal", fixtures::FALK_J);
    report.input("fixtures/falk_j_prime.ideal", fixtures::FALK_J_PRIME);
    report.input("fixtures/falk_a.arr", fixtures::FALK_A);
    report.input("fixtures/falk_a_prime.arr", fixtures::FALK_A_PRIME);
    let (j, jp) = (example_ideal(fixtures::FALK_J), example_ideal(fixtures::FALK_J_PRIME));
    let (a, ap) = (example_arrangement(fixtures::FALK_A), example_arrangement(fixtures::FALK_A_PRIME));

    let (h0, h0p) = (specialize(&j, 0)?.hilbert_function(d), specialize(&jp, 0)?.hilbert_function(d));
    report.check("os-hilbert-equal", h0 == h0p, format!("x = 0 specializations: {h0:?} vs {h0p:?}"));
    let (ha, hap) = (os_ideal(&a)?.hilbert_function(d), os_ideal(&ap)?.hilbert_function(d));
    report.check(
        "arrangement-os-equal",
        ha == hap,
        format!("Orlik-Solomon ideals of the two arrangements: {ha:?} vs {hap:?}"),
    );

    let (q, qp) = (j.quotient(d + 1), jp.quotient(d + 1));
    let (f, fp) = (fingerprint(&q, d)?, fingerprint(&qp, d)?);
    report.section("fingerprints").put("j", f.to_string()).put("j_prime", fp.to_string());
    report.check("fingerprints-differ", f != fp, "annihilator fingerprints of J and J' at degree 4");
    let verdict = distinguish(&q, &qp, d)?;
    report.check("distinguished", verdict.is_distinguished(), verdict.label());

    let found = match_coorientation(&a, &j.generators)?;
    report.check(
        "coorientation-j",
        found.is_some(),
        found.map_or("no coorientation of the arrangement gives J".into(), |m| {
            format!("a coorientation gives J: {}", mask_text(m, a.len()))
        }),
    );
    let none = match_coorientation(&a, &jp.generators)?;
    report.check(
        "coorientation-j-prime",
        none.is_none(),
        "no coorientation of the first arrangement gives J'",
    );
    let mut forms = ap.forms().to_vec();
    forms.swap(0, 1);
    let relabelled = Arrangement::new(ap.dim(), forms)?;
    let found = match_coorientation(&relabelled, &jp.generators)?;
    report.check(
        "coorientation-j-prime-relabelled",
        found.is_some(),
        found.map_or("no coorientation of the second arrangement gives J'".into(), |m| {
            format!(
                "with hyperplanes 1 and 2 of the second arrangement exchanged, a coorientation gives J': {}",
                mask_text(m, relabelled.len())
            )
        }),
    );
    Ok(())
}

fn reproduce_vertical(report: &mut Report) -> Result<()> {
    let d = 4;
    report.degree(d, "fixture default");
    report.input("fixtures/vertical_a.ideal", fixtures::VERTICAL_A);
    report.input("fixtures/vertical_a_prime.ideal", fixtures::VERTICAL_A_PRIME);
    report.note(ANNIHILATOR_NOTE);
    let (p, pp) = (example_ideal(fixtures::VERTICAL_A), example_ideal(fixtures::VERTICAL_A_PRIME));
    let (q, qp) = (p.quotient(d + 1), pp.quotient(d + 1));
    let r = p.ring;
    let e2 = r.e(1);
    let profile = ann_profile(&q, &e2, d)?;
    report.check(
        "e2-kernel",
        profile.kernel_dims[0] == 2,
        format!("annihilator of e2 by degree: {:?}", profile.kernel_dims),
    );
    let gens = [r.e(2), parse_poly("x-e2", &r)?];
    report.check(
        "e2-generated",
        ann_generated_by(&q, &e2, &gens, d)?,
        "Ann(e2) = <e3, x+e2> through degree 4",
    );
    let other = two_generated_annihilators(&qp, d)?;
    report.check(
        "flip-has-none",
        other.is_empty(),
        format!("{} linear forms of the flipped ring have a two-generated annihilator", other.len()),
    );
    let all = separating_invariants(&q, &qp, d)?;
    let verdict = distinguish(&q, &qp, d)?;
    report.check("distinguished", verdict.is_distinguished(), verdict.label());
    report.check(
        "annihilator-certificate",
        all.iter().any(|c| matches!(c, Certificate::TwoGeneratedAnnihilator { .. })),
        "the two-generated annihilator test separates the rings",
    );
    report.section("separating").put(
        "invariants",
        json!(all.iter().map(certificate_line).collect::<Vec<_>>()),
    );
    Ok(())
}

fn reproduce_cone(report: &mut Report) -> Result<()> {
    report.note("each arrangement fixture is checked at its own horizon rank + 2");
    let mut rows = Vec::new();
    for (name, text) in fixtures::ARRANGEMENTS {
        report.input(&format!("fixtures/{name}.arr"), text);
        let a = example_arrangement(text);
        let d = a.rank() + 2;
        let hf = eq_ideal(&a)?.hilbert_function(d);
        let coned = eq_ideal(&a.cone())?.hilbert_function(d);
        let ok = cone_formula_holds(&hf, &coned);
        rows.push(format!("{name}: {hf:?} -> {coned:?}"));
        report.check(&format!("cone-{name}"), ok, format!("HF_cA(k) = HF_A(k) + HF_A(k-1) through degree {d}"));
    }
    report.section("hilbert").put("equivariant", json!(rows));
    Ok(())
}

mod common;

use catalan_core::cli::{parse_fraction, parse_term, CertificateRecord, Expr, RecordVerdict};
use catalan_core::exact_math::{Integer, Rational};
use catalan_core::summation::{
    gosper, verify_gosper, verify_zeilberger, zeilberger, BivariateHyperTerm, GosperCertificate, Inhomogeneous,
};
use common::*;

/// Integer points used to instantiate parameters.
const PARAM_SAMPLES: [i64; 3] = [3, 8, 13];

#[test]
fn summable_fixtures_have_verified_certificates() {
    assert!(SUMMABLE.len() >= 10);
    for f in SUMMABLE {
        let term = parse_term(f.expr, f.var, &strings(f.params)).unwrap();
        let hyper = term.hyper_term().unwrap();
        let cert = gosper(&hyper).unwrap_or_else(|e| panic!("{}: {e}", f.expr));
        assert!(verify_gosper(&hyper, &cert), "{}", f.expr);

        // Numeric route: z(k+1) - z(k) = t(k) wherever everything is defined.
        let params: Vec<Integer> = f.params.iter().zip(PARAM_SAMPLES).map(|(_, v)| Integer::from(v)).collect();
        let pq: Vec<Rational> = params.iter().cloned().map(Rational::from_integer).collect();
        let z = |k: i64| -> Option<Rational> {
            let t = hyper.eval(&params, &Integer::from(k))?;
            let r = cert.r.eval_rational(&pq, &q(k))?;
            Some(r * t)
        };
        let mut checked = 0;
        for k in -5..25 {
            if let (Some(t), Some(a), Some(b)) = (hyper.eval(&params, &Integer::from(k)), z(k), z(k + 1)) {
                assert_eq!(b - a, t, "{} at k = {k}", f.expr);
                checked += 1;
            }
        }
        assert!(checked >= 10, "{}: only {checked} points", f.expr);
    }
}

#[test]
fn non_summable_fixtures_name_the_failing_stage() {
    assert!(NOT_SUMMABLE.len() >= 3);
    for (expr, var, params) in NOT_SUMMABLE {
        let hyper = parse_term(expr, var, &strings(params)).unwrap().hyper_term().unwrap();
        let err = gosper(&hyper).expect_err(expr);
        let text = err.to_string();
        assert!(text.contains("stage"), "{expr}: {text}");
        assert!(!err.detail.is_empty());
    }
}

#[test]
fn tampered_gosper_certificate_is_rejected() {
    for f in SUMMABLE {
        let hyper = parse_term(f.expr, f.var, &strings(f.params)).unwrap().hyper_term().unwrap();
        let cert = gosper(&hyper).unwrap();
        let one = catalan_core::exact_math::RationalFunction::one(hyper.var(), hyper.field());
        let bumped = GosperCertificate { r: &cert.r + &one };
        assert!(!verify_gosper(&hyper, &bumped), "{}", f.expr);
    }
}

fn zeilberger_term(f: &ZeilbergerFixture) -> (catalan_core::cli::TermExpression, BivariateHyperTerm) {
    let mut all = strings(f.params);
    all.push(f.recvar.to_string());
    let term = parse_term(f.expr, "k", &all).unwrap();
    let hyper =
        BivariateHyperTerm::from_product(&term.product_form().unwrap(), f.recvar, "k", &strings(f.params)).unwrap();
    (term, hyper)
}

#[test]
fn zeilberger_fixtures_match_independent_sums() {
    assert!(ZEILBERGER.len() >= 3);
    for f in ZEILBERGER {
        let (_, hyper) = zeilberger_term(f);
        let rec = zeilberger(&hyper, 2).unwrap_or_else(|e| panic!("{}: {e}", f.expr));
        assert!(verify_zeilberger(&hyper, &rec), "{}", f.expr);

        let pq: Vec<Rational> = f.param_values.iter().map(|&v| q(v)).collect();
        let mut checked = 0;
        for n in 0..12 {
            let mut values = Vec::new();
            for j in 0..=rec.order() as i64 {
                let mut point = f.param_values.to_vec();
                point.push(n + j);
                values.push((f.sum)(&point));
            }
            let Some(values) = values.into_iter().collect::<Option<Vec<_>>>() else { continue };
            let Some(lhs) = rec
                .coefficients
                .iter()
                .zip(&values)
                .map(|(a, v)| a.eval_rational(&pq, &q(n)).map(|a| a * v))
                .sum::<Option<Rational>>()
            else {
                continue;
            };
            let rhs = match &rec.inhomogeneous {
                Inhomogeneous::Zero => q(0),
                Inhomogeneous::Polynomial(p) => p.eval_rational(&[], &q(n)).unwrap(),
                Inhomogeneous::NotPolynomial => continue,
            };
            assert_eq!(lhs, rhs, "{} at n = {n}", f.expr);
            checked += 1;
        }
        assert!(checked >= 5, "{}: only {checked} points", f.expr);
    }
}

#[test]
fn records_round_trip_and_reverify() {
    for f in SUMMABLE {
        let term = parse_term(f.expr, f.var, &strings(f.params)).unwrap();
        let hyper = term.hyper_term().unwrap();
        let cert = gosper(&hyper).unwrap();
        let text = CertificateRecord::gosper("fixture", &term, &cert).to_toml();
        let (record, stored) = CertificateRecord::load(&text).unwrap();
        assert_eq!((record.verdict, stored), (RecordVerdict::Verified, RecordVerdict::Verified), "{}", f.expr);
        let back = parse_fraction(&record.certificate, hyper.var(), hyper.field()).unwrap();
        assert_eq!(back, cert.r);
    }
    for f in ZEILBERGER {
        let (term, hyper) = zeilberger_term(f);
        let rec = zeilberger(&hyper, 2).unwrap();
        let text = CertificateRecord::zeilberger("fixture", &term, f.recvar, &rec).to_toml();
        let (record, _) = CertificateRecord::load(&text).unwrap();
        assert_eq!(record.verdict, RecordVerdict::Verified, "{}", f.expr);
    }
}

#[test]
fn stored_verdict_is_not_trusted() {
    let term = parse_term("k*factorial(k)", "k", &[]).unwrap();
    let cert = gosper(&term.hyper_term().unwrap()).unwrap();
    let mut record = CertificateRecord::gosper("t", &term, &cert);
    record.certificate = "1/(k + 1)".into();
    let (loaded, stored) = CertificateRecord::load(&record.to_toml()).unwrap();
    assert_eq!(stored, RecordVerdict::Verified);
    assert_eq!(loaded.verdict, RecordVerdict::Rejected);

    let mut bad = CertificateRecord::gosper("t", &term, &cert);
    bad.verdict = RecordVerdict::Rejected;
    let (loaded, _) = CertificateRecord::load(&bad.to_toml()).unwrap();
    assert_eq!(loaded.verdict, RecordVerdict::Verified);

    let f = &ZEILBERGER[0];
    let (term, hyper) = zeilberger_term(f);
    let rec = zeilberger(&hyper, 2).unwrap();
    let mut record = CertificateRecord::zeilberger("t", &term, f.recvar, &rec);
    record.coefficients[0] = "-3".into();
    assert_eq!(CertificateRecord::load(&record.to_toml()).unwrap().0.verdict, RecordVerdict::Rejected);
}

#[test]
fn corpus_parse_round_trip() {
    let mut all: Vec<(&str, &str, Vec<String>)> =
        SUMMABLE.iter().map(|f| (f.expr, f.var, strings(f.params))).collect();
    all.extend(NOT_SUMMABLE.iter().map(|(e, v, p)| (*e, *v, strings(p))));
    for f in ZEILBERGER {
        let mut p = strings(f.params);
        p.push(f.recvar.to_string());
        all.push((f.expr, "k", p));
    }
    for (src, var, params) in all {
        let t = parse_term(src, var, &params).unwrap();
        let again = parse_term(&t.to_string(), var, &params).unwrap();
        assert_eq!(t, again, "{src}");
        assert_eq!(Expr::parse(&t.to_string()).unwrap(), *t.expr());
    }
}

use operad_groebner::cli::{clie_summary, hom_table};
use operad_groebner::groebner::{
    buchberger, find_ambiguities, is_confluent, koszul_report, overlap_bound, s_polynomial,
    KoszulVerdict,
};
use operad_groebner::poly::{leading, normal_form, TreePolynomial};
use operad_groebner::presentations::{builtin, ClieParams, Presentation};
use operad_groebner::tree::{OpId, TreeMonomial as T};

fn ops(p: &Presentation) -> (OpId, OpId) {
    (
        p.signature.lookup("alpha").unwrap(),
        p.signature.lookup("m").unwrap(),
    )
}

fn leads(p: &Presentation) -> Vec<T> {
    p.relations
        .iter()
        .map(|r| leading(r, &p.order_spec).unwrap().0)
        .collect()
}

#[test]
fn ii0_ambiguity_resolves_to_the_right_comb() {
    let p = builtin("hom_ass_II0", None).unwrap();
    let (a, m) = ops(&p);
    let l = T::Leaf;
    // m(alpha(m(alpha(m(1,2)),3)),4) and its normal form m(1,alpha(m(2,alpha(m(3,4)))))
    let top = T::node(
        m,
        vec![
            T::node(
                a,
                vec![T::node(
                    m,
                    vec![T::node(a, vec![T::node(m, vec![l(1), l(2)])]), l(3)],
                )],
            ),
            l(4),
        ],
    );
    let bottom = T::node(
        m,
        vec![
            l(1),
            T::node(
                a,
                vec![T::node(
                    m,
                    vec![l(2), T::node(a, vec![T::node(m, vec![l(3), l(4)])])],
                )],
            ),
        ],
    );
    let overlaps = find_ambiguities(&leads(&p), p.mode, &p.order_spec, 5);
    let o = overlaps
        .iter()
        .find(|o| o.monomial == top)
        .expect("drawn ambiguity is found");
    assert_eq!(o.monomial.degree(), 5);
    let s = s_polynomial(o, &p.relations, &p.order_spec).unwrap();
    assert!(normal_form(&s, &p.relations, &p.order_spec).is_zero());
    assert_eq!(
        normal_form(&TreePolynomial::monomial(top), &p.relations, &p.order_spec),
        TreePolynomial::monomial(bottom)
    );
}

#[test]
fn ii0_is_confluent_and_koszul() {
    let p = builtin("hom_ass_II0", None).unwrap();
    let gb = buchberger(&p, &p.order_spec, 5).unwrap();
    assert_eq!(gb.basis, p.relations);
    assert!(gb.confluent_at_bound && gb.complete);
    let r = koszul_report(&p, &p.order_spec, 5).unwrap();
    assert_eq!(r.verdict, KoszulVerdict::KoszulCertified);
    assert_eq!(r.basis_degree, 2);
}

#[test]
fn a_low_bound_never_certifies() {
    let p = builtin("hom_ass_I1", None).unwrap();
    let r = koszul_report(&p, &p.order_spec, 4).unwrap();
    assert_eq!(r.verdict, KoszulVerdict::InconclusiveAtBound);
    assert!(!r.gb.complete);
}

#[test]
fn comb_with_two_alphas_is_not_confluent() {
    let p = builtin("hom_ass_I1", None).unwrap();
    let (a, m) = ops(&p);
    let l = T::Leaf;
    let drawn = T::node(
        m,
        vec![
            T::node(
                m,
                vec![T::node(m, vec![l(1), l(2)]), T::node(a, vec![l(3)])],
            ),
            T::node(a, vec![l(4)]),
        ],
    );
    let r = is_confluent(&p, &p.order_spec, 5).unwrap();
    let (o, nf) = r.certificate.expect("certificate");
    assert_eq!(o.monomial, drawn);
    assert!(!nf.is_zero());
    let gb = buchberger(&p, &p.order_spec, 5).unwrap();
    assert!(gb.basis.len() > 1);
    assert!(gb.basis.iter().any(|g| g.weight() == 3));
}

#[test]
fn i2_certificate_is_a_comb_with_two_alphas() {
    let p = builtin("hom_ass_I2", None).unwrap();
    let (a, m) = ops(&p);
    let l = T::Leaf;
    let r = is_confluent(&p, &p.order_spec, 5).unwrap();
    let (o, nf) = r.certificate.expect("certificate");
    assert!(!nf.is_zero());
    let expected = T::node(
        m,
        vec![
            T::node(
                m,
                vec![
                    T::node(m, vec![l(1), T::node(a, vec![l(2)])]),
                    T::node(a, vec![l(3)]),
                ],
            ),
            l(4),
        ],
    );
    assert_eq!(o.monomial, expected);
    assert_eq!(
        koszul_report(&p, &p.order_spec, 5).unwrap().verdict,
        KoszulVerdict::InconclusiveAtBound
    );
}

#[test]
fn only_two_deformations_have_ambiguities() {
    let (_, rows) = hom_table(5).unwrap();
    assert_eq!(rows.len(), 10);
    for r in &rows {
        let expected_confluent = !matches!(r.name.as_str(), "I1" | "I2");
        assert_eq!(r.confluent, expected_confluent, "{}", r.name);
        assert_eq!(r.certificate.is_some(), !expected_confluent, "{}", r.name);
        if matches!(
            r.name.as_str(),
            "I3" | "II1" | "II2" | "II3" | "III" | "IIIp" | "IIIpp"
        ) {
            assert_eq!(r.overlaps, 0, "{}", r.name);
        }
    }
}

#[test]
fn associativity_diamond() {
    let p = builtin("ass", None).unwrap();
    let overlaps = find_ambiguities(&leads(&p), p.mode, &p.order_spec, 4);
    assert_eq!(overlaps.len(), 1);
    assert_eq!(overlaps[0].monomial.degree(), 3);
    let s = s_polynomial(&overlaps[0], &p.relations, &p.order_spec).unwrap();
    assert!(!s.is_zero());
    assert!(normal_form(&s, &p.relations, &p.order_spec).is_zero());
    let gb = buchberger(&p, &p.order_spec, 4).unwrap();
    assert_eq!(gb.basis, p.relations);
    assert_eq!(
        koszul_report(&p, &p.order_spec, 4).unwrap().verdict,
        KoszulVerdict::KoszulCertified
    );
}

#[test]
fn conformal_lie_leading_terms_are_combs() {
    for k in 1..=2 {
        let s = clie_summary(
            ClieParams {
                k,
                nmax: 2,
                jmax: 2,
            },
            4,
        )
        .unwrap();
        assert_eq!(s.ambiguities, 0, "k={k}");
        assert!(s.comb_shape, "k={k}");
        assert!(s.certified, "k={k}");
        assert_eq!(s.basis_degree, 2);
        let p = &s.presentation;
        assert!(
            is_confluent(p, &p.order_spec, overlap_bound(&p.relations))
                .unwrap()
                .confluent
        );
    }
}

#[test]
fn conformal_lie_without_first_products_is_inconclusive() {
    // with k = 0 no relation carries a (., 1) symbol, so the comb shape is unavailable
    let s = clie_summary(
        ClieParams {
            k: 0,
            nmax: 2,
            jmax: 2,
        },
        4,
    )
    .unwrap();
    assert!(!s.comb_shape);
    assert!(s.ambiguities > 0);
    assert!(!s.certified);
}

#[test]
fn truncated_generator_family_warns() {
    let s = clie_summary(
        ClieParams {
            k: 1,
            nmax: 2,
            jmax: 0,
        },
        4,
    )
    .unwrap();
    assert!(!s.presentation.warnings.is_empty());
    assert!(s
        .presentation
        .warnings
        .iter()
        .all(|w| w.starts_with("TRUNCATED")));
}

mod common;

use branchorder_core::family::build_standard_presentation;
use branchorder_core::orderability::{
    build_universe, finite_group_shortcut, nlo_search, verify_certificate, DecisionNode, NloCertificate, NloOptions,
    NloOutcome, NotApplicable, Verdict,
};
use branchorder_core::{FamilyParams, Presentation, SearchBudget, Word};
use common::{cyclic, dihedral, free, free_abelian, pres, s3, trefoil, w};
use proptest::prelude::*;

fn cone_only() -> NloOptions {
    NloOptions {
        try_shortcut: false,
        ..NloOptions::default()
    }
}

fn certified(p: &Presentation, radius: usize, opts: &NloOptions) -> NloCertificate {
    match nlo_search(p, radius, opts) {
        NloOutcome::Certified { certificate, .. } => {
            assert_eq!(verify_certificate(p, &certificate), Verdict::Accept);
            certificate
        }
        other => panic!("{}: {other:?}", p.label()),
    }
}

fn klein_bottle() -> Presentation {
    pres(&["a", "b"], vec![w(&[(0, 1), (1, 1), (0, 1), (1, -1)])])
}

#[test]
fn universe_examples() {
    let u = build_universe(&free(1), 2, &SearchBudget::default());
    assert_eq!(u.len(), 5);
    assert!(u.equal_pairs().is_empty());

    let p = cyclic(2);
    let u = build_universe(&p, 2, &SearchBudget::default());
    let a = u.index_of(&Word::generator(0)).unwrap();
    let a_inv = u.index_of(&Word::power(0, -1)).unwrap();
    assert!(u.same_class(a, a_inv));
    assert!(u.trivial_set().contains(&u.index_of(&Word::power(0, 2)).unwrap()));
    for (i, j, proof) in u.equal_pairs() {
        proof.verify(&p).unwrap();
        assert_eq!(proof.start, u.representatives[i]);
        assert_eq!(proof.end, u.representatives[j]);
    }
}

#[test]
fn universe_classes_are_closed_under_inversion() {
    for p in [s3(), dihedral(4), free_abelian()] {
        let u = build_universe(&p, 3, &SearchBudget::default());
        for i in 0..u.len() {
            for j in 0..u.len() {
                if u.same_class(i, j) {
                    let ii = u.index_of(&u.representatives[i].invert()).unwrap();
                    let jj = u.index_of(&u.representatives[j].invert()).unwrap();
                    assert!(u.same_class(ii, jj));
                }
            }
        }
    }
}

#[test]
fn involution_certificate() {
    let p = cyclic(2);
    let cert = certified(&p, 2, &NloOptions::default());
    assert_eq!(cert.witness, vec![Word::generator(0)]);
    let cert = certified(&p, 2, &cone_only());
    assert_eq!(cert.witness, vec![Word::generator(0)]);
}

#[test]
fn shortcut_on_symmetric_group() {
    let p = s3();
    let (cert, _) = finite_group_shortcut(&p, &SearchBudget::default()).unwrap();
    assert_eq!(cert.witness, vec![Word::generator(0)]);
    let DecisionNode::Branch { positive: Some(leaf), .. } = &cert.tree else {
        panic!("expected a branch");
    };
    let DecisionNode::Leaf(c) = leaf.as_ref() else {
        panic!("expected a leaf");
    };
    assert_eq!(c.chain, vec![Word::generator(0); 2]);
    assert_eq!(verify_certificate(&p, &cert), Verdict::Accept);
}

#[test]
fn shortcut_not_applicable() {
    let p = build_standard_presentation(&FamilyParams::new(vec![7]).unwrap());
    assert_eq!(
        finite_group_shortcut(&p, &SearchBudget::default()).unwrap_err(),
        NotApplicable::TrivialGroup
    );
    let small = SearchBudget::new(1000, 64, 10_000);
    assert!(matches!(
        finite_group_shortcut(&free(1), &small),
        Err(NotApplicable::Exceeded { .. })
    ));
}

#[test]
fn left_orderable_controls_stay_inconclusive() {
    let controls = [free(1), free(2), free_abelian(), trefoil(), klein_bottle()];
    for p in &controls {
        for radius in 1..=3 {
            for opts in [NloOptions::default(), cone_only()] {
                let out = nlo_search(p, radius, &opts);
                assert_eq!(out.label(), "inconclusive", "{} at radius {radius}", p.label());
            }
        }
    }
}

#[test]
fn short_chains_stay_sound() {
    for chain in 1..=3 {
        let opts = NloOptions {
            max_chain_factors: chain,
            ..cone_only()
        };
        assert_eq!(nlo_search(&trefoil(), 2, &opts).label(), "inconclusive");
    }
}

#[test]
fn cone_search_certifies_finite_groups() {
    for p in [cyclic(2), cyclic(3), s3(), dihedral(4)] {
        certified(&p, 2, &cone_only());
    }
    // the ball of radius 2 misses a^3 = a^-2
    assert_eq!(nlo_search(&cyclic(5), 2, &cone_only()).label(), "inconclusive");
    certified(&cyclic(5), 3, &cone_only());
}

#[test]
fn monotone_in_radius() {
    for p in [cyclic(2), cyclic(3), s3()] {
        for radius in 2..=4 {
            certified(&p, radius, &cone_only());
        }
    }
}

#[test]
fn family_baseline() {
    let p = build_standard_presentation(&FamilyParams::new(vec![0, 0]).unwrap());
    let cert = certified(&p, 2, &NloOptions::default());
    assert_eq!(cert.witness, vec![p.parse_word("a1").unwrap()]);
    for k in -3..=3 {
        let p = build_standard_presentation(&FamilyParams::new(vec![k]).unwrap());
        assert!(matches!(nlo_search(&p, 2, &NloOptions::default()), NloOutcome::TrivialGroup));
    }
}

#[test]
fn verifier_rejects_foreign_relators() {
    let cert = certified(&cyclic(2), 2, &NloOptions::default());
    match verify_certificate(&cyclic(3), &cert) {
        Verdict::Reject { path, .. } => assert_eq!(path, "+"),
        Verdict::Accept => panic!("accepted against the wrong group"),
    }
}

#[test]
fn verifier_rejects_partial_trees() {
    let p = cyclic(2);
    let mut cert = certified(&p, 2, &NloOptions::default());
    if let DecisionNode::Branch { negative, .. } = &mut cert.tree {
        *negative = None;
    }
    match verify_certificate(&p, &cert) {
        Verdict::Reject { reason, .. } => assert!(reason.contains("missing negative")),
        Verdict::Accept => panic!("accepted a partial tree"),
    }
}

#[test]
fn verifier_rejects_unsigned_factors() {
    let p = s3();
    let mut cert = certified(&p, 2, &NloOptions::default());
    // a chain factor that is not signed on its branch
    if let DecisionNode::Branch { positive: Some(leaf), .. } = &mut cert.tree {
        if let DecisionNode::Leaf(c) = leaf.as_mut() {
            c.chain[0] = Word::generator(1);
        }
    }
    assert!(!verify_certificate(&p, &cert).is_accept());
}

#[test]
fn verifier_rejects_rebranching() {
    let p = cyclic(2);
    let cert = certified(&p, 2, &NloOptions::default());
    let a = Word::generator(0);
    let nested = NloCertificate {
        witness: cert.witness.clone(),
        tree: DecisionNode::branch(a, cert.tree.clone(), cert.tree.clone()),
    };
    assert!(!verify_certificate(&p, &nested).is_accept());
}

#[test]
fn certificates_round_trip_through_json() {
    for (p, opts) in [(s3(), NloOptions::default()), (dihedral(3), cone_only())] {
        let cert = certified(&p, 2, &opts);
        let text = cert.to_json_string(&p);
        let back = NloCertificate::from_json_str(&p, &text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(verify_certificate(&p, &back), Verdict::Accept);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Whatever the search returns on small random presentations passes the
    /// independent checker; corrupting one proof step makes it fail.
    #[test]
    fn emitted_certificates_verify(
        rels in prop::collection::vec(prop::collection::vec((0u32..2, -3i64..=3), 1..5), 1..3),
        radius in 1usize..=2,
        shortcut in any::<bool>(),
    ) {
        let rels: Vec<Word> = rels.into_iter().map(Word::free_reduce).filter(|r| !r.is_identity()).collect();
        prop_assume!(!rels.is_empty());
        let p = pres(&["x", "y"], rels);
        let opts = NloOptions {
            budget: SearchBudget::new(20_000, 32, 20_000),
            try_shortcut: shortcut,
            ..NloOptions::default()
        };
        if let NloOutcome::Certified { certificate, .. } = nlo_search(&p, radius, &opts) {
            prop_assert_eq!(verify_certificate(&p, &certificate), Verdict::Accept);
            let mut broken = certificate.clone();
            if let Some(step) = first_step(&mut broken.tree) {
                step.inverse = !step.inverse;
                prop_assert!(!verify_certificate(&p, &broken).is_accept());
            }
        }
    }
}

fn first_step(node: &mut DecisionNode) -> Option<&mut branchorder_core::ProofStep> {
    match node {
        DecisionNode::Leaf(c) => c.proof.first_mut(),
        DecisionNode::Branch { positive, negative, .. } => {
            if let Some(n) = positive {
                if let Some(s) = first_step(n) {
                    return Some(s);
                }
            }
            negative.as_mut().and_then(|n| first_step(n))
        }
    }
}

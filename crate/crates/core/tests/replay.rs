use branchorder_core::family::build_standard_presentation;
use branchorder_core::replay::{
    replay_identity, replay_suite, suite_instances, summarize, IdentityId, IdentityInstance, ReplayOutcome,
    ReplayStatus, SuiteOptions,
};
use branchorder_core::{FamilyParams, SearchBudget};

fn params(k: &[i64]) -> FamilyParams {
    FamilyParams::new(k.to_vec()).unwrap()
}

fn untimed() -> SuiteOptions {
    SuiteOptions {
        timing: false,
        ..SuiteOptions::default()
    }
}

#[test]
fn telescoping_needs_no_relators() {
    let free: Vec<IdentityInstance> = suite_instances(&params(&[-1, -1, -1]), -12..=12)
        .into_iter()
        .filter(|inst| inst.identity.is_free())
        .collect();
    assert_eq!(free.len(), 3 * 25);
    for inst in &free {
        let out = replay_identity(inst, &SearchBudget::default()).unwrap();
        assert!(matches!(out, ReplayOutcome::Proved(_)));
        assert_eq!(out.proof_steps(), 0);
    }
}

#[test]
fn suite_for_three_equal_twists() {
    let report = replay_suite(&params(&[-1, -1, -1]), -4..=4, &untimed());
    let s = summarize(&report);
    assert_eq!(s.error, 0);
    assert_eq!(s.unknown, 0);
    assert_eq!(s.proved, report.len());
}

#[test]
fn trivial_group_instances_all_hold() {
    let report = replay_suite(&params(&[2]), -2..=2, &untimed());
    assert!(!report.is_empty());
    assert!(report.iter().all(|e| e.status == ReplayStatus::Proved));
}

#[test]
fn report_order_and_shape() {
    let report = replay_suite(&params(&[0, 1]), -1..=1, &untimed());
    let keys: Vec<(IdentityId, usize, Option<i64>)> = report.iter().map(|e| (e.identity, e.i, e.m)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let json = serde_json::to_value(&report).unwrap();
    let first = &json[0];
    for key in ["identity", "i", "m", "status", "proof_steps", "millis"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
    assert_eq!(first["identity"], "I1");
    assert_eq!(first["status"], "proved");
    let i3 = report.iter().find(|e| e.identity == IdentityId::I3).unwrap();
    assert_eq!(serde_json::to_value(i3).unwrap()["m"], serde_json::Value::Null);
    assert!(report.iter().all(|e| e.millis == 0));
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&replay_suite(&params(&[1, -2]), -3..=3, &untimed())).unwrap();
    let b = serde_json::to_string(&replay_suite(&params(&[1, -2]), -3..=3, &untimed())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn second_and_third_forms_are_each_proven_from_the_first() {
    let p = params(&[1, 0, -2]);
    let std = build_standard_presentation(&p);
    for id in [IdentityId::I2, IdentityId::I3] {
        for i in 1..=3 {
            let m = id.takes_exponent().then_some(2);
            let inst = IdentityInstance::new(id, p.clone(), i, m).unwrap();
            let forms = inst.forms();
            let ReplayOutcome::Proved(proofs) = replay_identity(&inst, &SearchBudget::default()).unwrap() else {
                panic!("{id} i={i} unknown");
            };
            assert_eq!(proofs.len(), 2);
            for (proof, form) in proofs.iter().zip(&forms[1..]) {
                proof.verify(&std).unwrap();
                assert_eq!(proof.start, forms[0]);
                assert_eq!(&proof.end, form);
            }
        }
    }
}

#[test]
fn first_identity_grows_linearly() {
    for k in [[0, 0], [2, -1]] {
        let p = params(&k);
        let steps: Vec<usize> = (0..=6)
            .map(|m| {
                let inst = IdentityInstance::new(IdentityId::I1, p.clone(), 1, Some(m)).unwrap();
                replay_identity(&inst, &SearchBudget::default()).unwrap().proof_steps()
            })
            .collect();
        assert_eq!(steps[0], 0);
        for (m, s) in steps.iter().enumerate() {
            assert!(*s <= 2 * m.max(1), "m = {m}: {s} steps");
        }
    }
}

#[test]
fn empty_range() {
    #[allow(clippy::reversed_empty_ranges)]
    let range = 3..=2;
    assert!(suite_instances(&params(&[0]), range.clone()).is_empty());
    assert!(replay_suite(&params(&[0]), range, &untimed()).is_empty());
}

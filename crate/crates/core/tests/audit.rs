use meanconvex::catalog::{
    builtin_claims, run_audit_filtered, summarize, AuditFilter, AuditVerdict, Expected,
};
use meanconvex::SamplePlan;

#[test]
fn equality_families_are_confirmed() {
    let found = run_audit_filtered(AuditFilter::EqualityFamilies, &SamplePlan::default(), 1e-9);
    assert_eq!(found.len(), 7);
    for f in &found {
        assert_eq!(f.verdict, AuditVerdict::Confirmed, "{}", f.entry);
        assert!(f.measurements[0].tested >= 10_000);
    }
}

#[test]
fn every_entry_gets_a_verdict() {
    let plan = SamplePlan::small();
    let found = run_audit_filtered(AuditFilter::All, &plan, 1e-9);
    assert_eq!(found.len(), builtin_claims().len());
    let s = summarize(&found);
    assert_eq!(
        s.confirmed + s.refuted_on_samples + s.domain_violation + s.inconclusive,
        found.len()
    );
    assert!(s.refuted_on_samples > 0 && s.domain_violation > 0);
}

#[test]
fn suspect_filter_matches_expectation() {
    let found = run_audit_filtered(AuditFilter::Suspect, &SamplePlan::small(), 1e-9);
    assert!(!found.is_empty());
    assert!(found.iter().all(|f| f.expected == Expected::Suspect));
    assert!(found
        .iter()
        .all(|f| f.verdict != AuditVerdict::Confirmed || f.entry == "exp-neg-gg-one"));
}

#[test]
fn refuted_witnesses_replay() {
    for f in run_audit_filtered(AuditFilter::All, &SamplePlan::small(), 1e-9) {
        if let Some(w) = f.witness {
            assert!(w.lhs.is_finite() && w.rhs.is_finite(), "{}", f.entry);
            assert_ne!(w.lhs, w.rhs, "{}", f.entry);
        }
    }
}

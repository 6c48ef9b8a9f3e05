use heatcg::pyramid::DEFAULT_UNIT_BUDGET_MS;
use heatcg::{
    parse_manifest, pyramid_report, render_report, write_manifest, Layer, Status, TestRecord,
};
use proptest::prelude::*;

#[test]
fn manifest_single_line() {
    let recs =
        parse_manifest("layer,name,duration_ms,status\nunit,scalar vector multiplication,10,ok\n")
            .unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].layer, Layer::Unit);
    assert_eq!(recs[0].duration_ms, 10.0);
}

#[test]
fn manifest_unknown_layer() {
    let err = parse_manifest("layer,name,duration_ms,status\nweird,foo,1,ok\n").unwrap_err();
    assert!(err.to_string().contains("unknown layer"));
    assert!(err.to_string().contains("line 2"));
}

#[test]
fn report_render_is_deterministic() {
    let recs =
        parse_manifest("layer,name,duration_ms,status\nunit,a,1,ok\nsystem,b,2,fail\n").unwrap();
    let a = render_report(&pyramid_report(&recs, DEFAULT_UNIT_BUDGET_MS).unwrap());
    let b = render_report(&pyramid_report(&recs, DEFAULT_UNIT_BUDGET_MS).unwrap());
    assert_eq!(a, b);
    assert!(a.contains("Fail: 1"));
}

fn record() -> impl Strategy<Value = TestRecord> {
    (
        prop::sample::select(Layer::ALL.to_vec()),
        "[a-zA-Z0-9 ,\"_:-]{0,24}[a-z]",
        prop_oneof![0.0f64..1e5, (0u32..1000).prop_map(f64::from)],
        prop::sample::select(Status::ALL.to_vec()),
    )
        .prop_map(|(layer, name, duration_ms, status)| TestRecord {
            layer,
            name,
            duration_ms,
            status,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn manifest_round_trip(records in prop::collection::vec(record(), 0..20)) {
        prop_assert_eq!(parse_manifest(&write_manifest(&records)).unwrap(), records);
    }

    #[test]
    fn report_counts_add_up(records in prop::collection::vec(record(), 0..20)) {
        let rep = pyramid_report(&records, DEFAULT_UNIT_BUDGET_MS).unwrap();
        prop_assert_eq!(rep.status_counts.iter().sum::<usize>(), records.len());
        prop_assert_eq!(rep.layer_counts.iter().sum::<usize>(), records.len());
        let [u, i, s] = rep.layer_counts;
        prop_assert_eq!(rep.pyramid_ok, u >= i && i >= s);
    }
}

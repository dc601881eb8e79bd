use proptest::prelude::*;
use steiner_cover::{Point, PointSet};
use steiner_cover_cli::report::{self, Payload, RunReport};
use steiner_cover_cli::{parse_points, InputDocument, InputFormat};

fn planar_sets() -> impl Strategy<Value = PointSet> {
    prop::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1..20)
        .prop_map(|v| PointSet::from_xy(&v).unwrap())
}

fn spatial_sets() -> impl Strategy<Value = PointSet> {
    prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3, -1e3f64..1e3), 1..20)
        .prop_map(|v| PointSet::from_xyz(&v).unwrap())
}

proptest! {
    #[test]
    fn json_round_trip(ps in prop_oneof![planar_sets(), spatial_sets()]) {
        let text = report::to_string(&InputDocument::from_point_set(&ps));
        prop_assert_eq!(parse_points(text.as_bytes(), InputFormat::Json).unwrap(), ps.clone());
        let plain = serde_json::to_string(&InputDocument::from_point_set(&ps)).unwrap();
        prop_assert_eq!(parse_points(plain.as_bytes(), InputFormat::Json).unwrap(), ps);
    }

    #[test]
    fn csv_round_trip(ps in planar_sets()) {
        let text: String = ps.points().iter().map(|p| format!("{:?},{:?}\n", p.x(), p.y())).collect();
        prop_assert_eq!(parse_points(text.as_bytes(), InputFormat::Csv).unwrap(), ps);
    }

    #[test]
    fn hull_report_round_trip(ps in planar_sets(), ox in -10.0f64..10.0, oy in -10.0f64..10.0) {
        let cover = steiner_cover::build_cover(&ps, &Point::xy(ox, oy)).unwrap();
        let area = steiner_cover::union_area_exact(&cover).unwrap();
        let r = RunReport::new("area", b"in", Payload::AreaReport(area));
        let back: RunReport = serde_json::from_str(&report::to_string(&r)).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn duplicates_merge_on_parse() {
    let ps = parse_points("0,0\n0,0\n1,1\n".as_bytes(), InputFormat::Csv).unwrap();
    assert_eq!(ps.len(), 2);
}

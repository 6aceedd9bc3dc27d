use hsscohom_cli::records::*;
use hsscohom_cli::run;
use serde::de::DeserializeOwned;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hsscohom").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn records(args: &[&str]) -> Vec<Value> {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// Parses every line as `Envelope<T>` and checks that re-serializing gives the same JSON.
fn round_trip<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> Vec<Envelope<T>> {
    records(args)
        .into_iter()
        .map(|v| {
            let e: Envelope<T> = serde_json::from_value(v.clone()).unwrap_or_else(|e| panic!("{args:?}: {e}\n{v}"));
            assert_eq!(e.schema_version, SCHEMA_VERSION);
            assert_eq!(serde_json::to_value(&e).unwrap(), v, "{args:?}");
            e
        })
        .collect()
}

#[test]
fn bott_h11_of_the_plane() {
    let r = round_trip::<BottRecord>(&["bott", "--n", "2", "--p", "1", "--q", "1", "--l", "0"]);
    assert_eq!(r[0].body.dimension, Count::Small(1));
}

#[test]
fn large_bott_dimension_is_a_string() {
    let r = round_trip::<BottRecord>(&["bott", "--n", "60", "--p", "30", "--q", "0", "--l", "200"]);
    assert!(matches!(r[0].body.dimension, Count::Big(_)));
}

#[test]
fn snow_cn_zero_with_sequence_count() {
    let r = records(&["snow-cn", "--n", "4", "--p", "9", "--l", "2"]);
    assert_eq!(r[0]["status"], "zero");
    assert_eq!(r[0]["admissible_sequences_checked"], 16);
    round_trip::<AnswerRecord>(&["snow-cn", "--n", "4", "--p", "9", "--l", "2"]);
}

#[test]
fn cubic_surface_has_27_lines() {
    let r = round_trip::<LineRecord>(&["delpezzo", "lines", "--r", "6"]);
    assert_eq!(r.len(), 27);
    assert_eq!(r.iter().filter(|l| l.body.family == "exceptional").count(), 6);
}

#[test]
fn every_record_type_round_trips() {
    round_trip::<AnswerRecord>(&["quadric", "--n", "4", "--p", "2", "--q", "2", "--l", "0"]);
    round_trip::<ClassifyRecord>(&["classify-top", "--ambient", "Q5", "--q", "1", "--l", "3"]);
    round_trip::<MilnorRecord>(&["milnor", "--fermat", "3,3", "--faithful-degree", "1"]);
    round_trip::<SlpRecord>(&["slp", "--degrees", "2,3"]);
    round_trip::<VanishingRecord>(&["vanishing", "--ambient", "P5", "--degrees", "3", "--p", "2", "--q", "0", "--l", "1", "--witnesses"]);
    round_trip::<StabilityRecord>(&["stability", "--check", "tangent", "--ambient", "P4", "--degrees", "3"]);
    round_trip::<StabilityRecord>(&["stability", "--check", "hypersurface", "--n", "3", "--dh", "2", "--d", "1"]);
    round_trip::<LangerRecord>(&["stability", "--check", "langer", "--rank", "2", "--discriminant", "4", "--hn", "1"]);
    round_trip::<RestrictBoundRecord>(&["restrict-bound", "--ambient", "P4", "--degrees", "3", "--d", "1"]);
    round_trip::<SectionRecord>(&["vectorfields", "--target", "projective", "--m", "2", "--t", "0"]);
    round_trip::<SectionRecord>(&["vectorfields", "--target", "hypersurface", "--fermat", "4,2", "--t", "0"]);
    round_trip::<SurjectivityRecord>(&["vectorfields", "--target", "surjectivity", "--fermat", "5,2", "--f", "x4", "--t", "0"]);
    round_trip::<ExtendRecord>(&["extend", "--fermat", "5,2", "--f", "x4", "--t", "0"]);
    round_trip::<CanonicalRecord>(&["delpezzo", "canonical", "--r", "6"]);
    round_trip::<SearchRecord>(&["delpezzo", "search"]);
    round_trip::<OneFormRecord>(&["delpezzo", "forms", "--a", "3"]);
    round_trip::<ZerosRecord>(&["delpezzo", "zeros", "--four-point"]);
}

#[test]
fn sweep_produces_one_row_per_value() {
    let r = records(&["bott", "--n", "3", "--p", "1", "--q", "0", "--l", "0", "--sweep", "l=-4..4"]);
    assert_eq!(r.len(), 9);
    let keys = |v: &Value| v.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    assert!(r.iter().all(|v| keys(v) == keys(&r[0])));
    let ls: Vec<i64> = r.iter().map(|v| v["l"].as_i64().unwrap()).collect();
    assert_eq!(ls, (-4..=4).collect::<Vec<_>>());
}

#[test]
fn out_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let p = path.to_str().unwrap();
    records(&["bott", "--n", "2", "--p", "1", "--q", "0", "--l", "0", "--sweep", "l=0..3", "--out", p]);
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["schema_version", "command", "n", "p", "q", "l", "dimension"]);
    let dims: Vec<String> = rdr.records().map(|r| r.unwrap()[6].to_string()).collect();
    // h^0(P^2, Omega^1(l)) for l = 0..3
    assert_eq!(dims, ["0", "0", "3", "8"]);
}

#[test]
fn table_format_has_header_and_rows() {
    let (code, out, _) = call(&["--format", "table", "delpezzo", "canonical", "--r", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("schema_version"));
    assert!(lines[1].contains("(-3; 1,1,1)"));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["bogus"][..],
        &["bott", "--n", "2"],
        &["bott", "--n", "0", "--p", "1", "--q", "1", "--l", "0"],
        &["vanishing", "--ambient", "X7", "--degrees", "3", "--p", "1", "--q", "0", "--l", "1"],
        &["vanishing", "--ambient", "P5", "--degrees", "3", "--p", "3", "--q", "3", "--l", "1"],
        &["milnor", "--h", "x0^2*x1", "--vars", "2"],
        &["delpezzo", "lines", "--r", "9"],
        &["delpezzo", "zeros", "--form", "x1;x0"],
        &["bott", "--n", "2", "--p", "1", "--q", "1", "--l", "0", "--sweep", "l=3..1"],
        &["vectorfields", "--target", "restricted", "--fermat", "4,2", "--t", "0"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn zero_and_unknown_are_answers() {
    let r = records(&["classify-top", "--ambient", "P3", "--q", "1", "--l", "1"]);
    assert_eq!(r[0]["nonvanishing"], false);
    let r = records(&["stability", "--check", "restriction", "--ambient", "Q5", "--degrees", "2", "--d", "1"]);
    assert_eq!(r[0]["verdict"], "unknown");
}

#[test]
fn help_exits_0() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("delpezzo"));
}

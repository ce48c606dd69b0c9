use std::path::PathBuf;

use hyperchordal::betti::has_linear_resolution;
use hyperchordal::chordality::{
    find_peo, is_chordal, is_generalized_chordal_search, is_triangulated_bruteforce, is_triangulated_star_bruteforce, SearchOutcome,
};
use hyperchordal::complex::flag_complex_of;
use hyperchordal::homology::reduced_homology;
use hyperchordal::hypergraph::{make_complete_bipartite, make_dab_complete};
use hyperchordal::io::{parse_document, Document};
use hyperchordal::{FieldSpec, Hypergraph, Limits, SimplicialComplex, VertexSet};
use serde_json::Value;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn load(name: &str) -> (Document, Value) {
    let input = std::fs::read_to_string(dir().join(format!("{name}.json"))).unwrap();
    let expected = std::fs::read_to_string(dir().join(format!("{name}.expected.json"))).unwrap();
    (parse_document(&input).unwrap(), serde_json::from_str(&expected).unwrap())
}

fn hypergraph(name: &str) -> (Hypergraph, Value) {
    match load(name) {
        (Document::Hypergraph(doc), v) => (doc.hypergraph, v),
        other => panic!("{name}: expected a hypergraph, got {other:?}"),
    }
}

fn complex(name: &str) -> (SimplicialComplex, Value) {
    match load(name) {
        (Document::Complex(doc), v) => (doc.complex, v),
        other => panic!("{name}: expected a complex, got {other:?}"),
    }
}

fn set(v: &Value) -> VertexSet {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect()
}

fn field(key: &str) -> FieldSpec {
    key.parse().unwrap()
}

fn family(desc: &Value) -> Hypergraph {
    let g = |k: &str| desc[k].as_u64().unwrap() as usize;
    match desc["family"].as_str().unwrap() {
        "bipartite" => make_complete_bipartite(g("n"), g("m"), g("d")).unwrap(),
        "dab" => make_dab_complete(g("n"), g("m"), g("a"), g("b")).unwrap(),
        other => panic!("unknown family {other}"),
    }
}

fn every_fixture() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(dir())
        .unwrap()
        .filter_map(|e| e.unwrap().file_name().into_string().ok())
        .filter_map(|f| f.strip_suffix(".expected.json").map(str::to_string))
        .collect();
    names.sort();
    names
}

#[test]
fn every_fixture_meets_its_expectations() {
    let lim = Limits::default();
    let names = every_fixture();
    assert!(names.len() >= 9, "{names:?}");
    for name in names {
        let (doc, expected) = load(&name);
        let exp = expected.as_object().unwrap();
        match doc {
            Document::Hypergraph(doc) => {
                let h = &doc.hypergraph;
                if let Some(c) = exp.get("chordal") {
                    let c = c.as_bool().unwrap();
                    assert_eq!(is_chordal(h), c, "{name}");
                    assert_eq!(is_triangulated_bruteforce(h, &lim).unwrap(), c, "{name}");
                    assert_eq!(is_triangulated_star_bruteforce(h, &lim).unwrap(), c, "{name}");
                }
                if let Some(w) = exp.get("witness") {
                    assert_eq!(find_peo(h).unwrap_err().witness, set(w), "{name}");
                }
                if let Some(fields) = exp.get("linear") {
                    let flag = flag_complex_of(h, &lim).unwrap();
                    for (k, v) in fields.as_object().unwrap() {
                        let r = has_linear_resolution(&flag, field(k), &lim).unwrap();
                        assert_eq!(r.linear, v.as_bool().unwrap(), "{name} over {k}");
                        if let Some(d) = exp.get("d") {
                            assert_eq!(r.d, Some(d.as_u64().unwrap() as usize), "{name}");
                        }
                    }
                }
                if let Some(g) = exp.get("generalized_chordal") {
                    let out = is_generalized_chordal_search(h, 1_000_000);
                    let got = match out {
                        SearchOutcome::Yes { .. } => true,
                        SearchOutcome::No { .. } => false,
                        SearchOutcome::Inconclusive { .. } => panic!("{name}: search budget exhausted"),
                    };
                    assert_eq!(got, g.as_bool().unwrap(), "{name}");
                }
                if let Some(f) = exp.get("family") {
                    assert_eq!(family(f), *h, "{name}");
                }
                if let Some(f) = exp.get("complement_of") {
                    assert_eq!(family(f).complement(), *h, "{name}");
                }
                if let Some(facets) = exp.get("flag_facets") {
                    let want: Vec<VertexSet> = facets.as_array().unwrap().iter().map(set).collect();
                    let flag = flag_complex_of(h, &lim).unwrap();
                    let mut got = flag.facets().to_vec();
                    let mut want = want;
                    got.sort();
                    want.sort();
                    assert_eq!(got, want, "{name}");
                }
                if let Some(nb) = exp.get("neighborhood") {
                    let x = nb["vertex"].as_u64().unwrap() as usize;
                    let within = set(&nb["within"]);
                    assert_eq!(h.closed_neighborhood_within(x, within).unwrap(), set(&nb["induced"]), "{name}");
                    assert_eq!(h.closed_neighborhood(x).unwrap().intersection(within), set(&nb["ambient"]), "{name}");
                }
            }
            Document::Complex(doc) => {
                if let Some(hom) = exp.get("homology") {
                    let got = reduced_homology(&doc.complex, FieldSpec::GF2, &lim).unwrap();
                    assert_eq!(serde_json::to_value(&got).unwrap(), *hom, "{name}");
                }
            }
            Document::Script(_) => panic!("{name}: scripts have no expectations"),
        }
    }
}

#[test]
fn k4_minus_edge_labels_are_letters() {
    let text = std::fs::read_to_string(dir().join("k4_minus_edge.json")).unwrap();
    match parse_document(&text).unwrap() {
        Document::Hypergraph(doc) => assert_eq!(doc.labels.unwrap(), ["a", "b", "c", "d"]),
        _ => panic!(),
    }
}

#[test]
fn sphere_fixtures_have_top_class_over_every_field() {
    let lim = Limits::default();
    for (name, top) in [("hollow_triangle", 1), ("octahedron", 2)] {
        let (c, _) = complex(name);
        for f in ["gf2", "gf3", "q"] {
            let h = reduced_homology(&c, field(f), &lim).unwrap();
            assert_eq!(h.get(top), 1, "{name} {f}");
            assert_eq!(h.iter().map(|(_, d)| d).sum::<usize>(), 1, "{name} {f}");
        }
    }
    let (h, _) = hypergraph("k4_minus_edge");
    assert_eq!(h.d(), 3);
}

use std::io::Write;
use std::process::Command;

use brickforge::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_PRECONDITION};
use brickforge::io::{emit_edge_list, parse_graph};
use brickforge::report::GraphRecord;
use brickforge_core::families;
use brickforge_core::{is_isomorphic, MultiGraph};

fn brickforge(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("brickforge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn classify(g: &MultiGraph) -> (i32, GraphRecord) {
    let f = graph_file(&emit_edge_list(g));
    let (code, out, _) = brickforge(&["classify", f.path().to_str().unwrap()]);
    let record = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    (code, record)
}

#[test]
fn classify_named_graphs() {
    let (code, r) = classify(&families::cubeplex());
    assert_eq!((code, r.e2, r.brick), (EXIT_OK, Some(14), true));

    let (code, r) = classify(&families::petersen());
    assert_eq!((code, r.e2, r.e3), (EXIT_OK, Some(0), Some(15)));
    assert_eq!(r.near_bipartite, Some(false));
    assert_eq!(r.bound_satisfied, None);

    let (code, r) = classify(&families::prism(10).unwrap());
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.equality, Some(true));
    assert_eq!(r.family.as_deref(), Some("prism"));

    let (code, r) = classify(&families::k4());
    assert_eq!(code, EXIT_OK);
    assert!(r.exempt);
    assert_eq!((r.e1, r.e2), (Some(6), Some(0)));
}

#[test]
fn classify_exit_codes() {
    let c6 = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let (code, r) = classify(&c6);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(!r.brick);

    let f = graph_file("2 1\n0 0\n");
    let (code, _, err) = brickforge(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("loop"));

    let f = graph_file("3 1\n0 q\n");
    let (code, _, err) = brickforge(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2, column 3"));

    let (code, _, _) = brickforge(&["classify", "/nonexistent/graph.txt"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn decompose_named_graphs() {
    let f = graph_file(&emit_edge_list(&families::k4()));
    let (code, out, _) = brickforge(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("b 1 p 0 pieces 1\npiece 0 brick\n"));

    let pe = families::petersen().delete_edges(&[brickforge_core::EdgeRef(0)]).unwrap();
    let f = graph_file(&emit_edge_list(&pe));
    let (code, out, _) = brickforge(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("b 2 p 0 pieces "));
    assert_eq!(out.matches("brick\n").count(), 2);

    let c6 = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    let f = graph_file(&emit_edge_list(&c6));
    let (code, out, _) = brickforge(&["decompose", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("b 0 p 0"));
    assert!(!out.contains("brick\n"));

    let path = graph_file("4 3\n0 1\n1 2\n2 3\n");
    let (code, _, _) = brickforge(&["decompose", path.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_PRECONDITION);
}

#[test]
fn family_emission() {
    let (code, out, _) = brickforge(&["family", "prism", "10", "--format", "edges"]);
    assert_eq!(code, EXIT_OK);
    let g = parse_graph(&out).unwrap();
    assert!(g.order() == 10 && g.is_cubic());

    let (code, out, _) = brickforge(&["family", "moebius", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with(':'));
    assert!(is_isomorphic(&parse_graph(&out).unwrap(), &families::k4(), true));

    let (code, out, _) = brickforge(&["family", "cubeplex", "--format", "s6"]);
    assert_eq!(code, EXIT_OK);
    let g = parse_graph(&out).unwrap();
    assert!(is_isomorphic(&g, &families::cubeplex(), true));
    assert_eq!(g.b_invariant_count().unwrap(), 14);

    for bad in [&["family", "prism", "7"][..], &["family", "ladder", "1"], &["family", "dodecahedron"], &["family", "prism"]] {
        assert_eq!(brickforge(bad).0, EXIT_INPUT, "{bad:?}");
    }
    assert_eq!(brickforge(&["family", "k4", "--format", "graph6"]).0, EXIT_INPUT);
}

#[test]
fn sweep_flags_and_determinism() {
    assert_eq!(brickforge(&["sweep", "--max-n", "16"]).0, EXIT_INPUT);
    assert_eq!(brickforge(&["sweep", "--max-n", "2"]).0, EXIT_INPUT);
    assert_eq!(brickforge(&["sweep", "--colour"]).0, EXIT_INPUT);
    assert_eq!(brickforge(&["frobnicate"]).0, EXIT_INPUT);

    let (code, first, _) = brickforge(&["sweep", "--max-n", "10", "--jobs", "1"]);
    assert_eq!(code, EXIT_OK);
    let (_, second, _) = brickforge(&["sweep", "--max-n", "10", "--jobs", "4"]);
    let (_, third, _) = brickforge(&["sweep", "--max-n", "10", "--jobs", "1"]);
    assert_eq!(first, second);
    assert_eq!(first, third);
    assert_eq!(first.lines().count(), 1 + 2 + 5 + 19 + 1);

    let (code, pretty, _) = brickforge(&["sweep", "--max-n", "8", "--pretty"]);
    assert_eq!(code, EXIT_OK);
    assert!(pretty.contains("verified: true"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_brickforge");
    let status = |args: &[&str]| Command::new(exe).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["family", "k4"]), EXIT_OK);
    assert_eq!(status(&["family", "prism", "3"]), EXIT_INPUT);
    assert_eq!(status(&["sweep", "--max-n", "99"]), EXIT_INPUT);
    let f = graph_file(&emit_edge_list(&MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()));
    assert_eq!(status(&["classify", f.path().to_str().unwrap()]), EXIT_PRECONDITION);
    let output = Command::new(exe).args(["family", "petersen", "--format", "edges"]).output().unwrap();
    assert_eq!(String::from_utf8(output.stdout).unwrap(), emit_edge_list(&families::petersen()));
}

//! Replays the checked-in fuzz seeds through the parsers they target.

use std::fs;
use std::path::PathBuf;

use critset::bigraph::{incidence_transform, load_edge_list, write_edge_list, SimpleGraph};
use critset::rankcore::{check_permutation, Ranking};
use critset::synth::ConfigMap;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap()))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn edge_list_seeds() {
    for (name, data) in seeds("edge_list") {
        let result = load_edge_list(data.as_slice());
        assert_eq!(result.is_ok(), name != "one_field", "{name}");
        if let Ok((g, _)) = result {
            let mut once = Vec::new();
            write_edge_list(&g, &mut once).unwrap();
            assert_eq!(load_edge_list(once.as_slice()).unwrap().0.num_edges(), g.num_edges());
        }
    }
}

#[test]
fn ranking_seeds() {
    let (g, _) = load_edge_list("a x\nb x\nc y\nd y\nd z\n".as_bytes()).unwrap();
    for (name, data) in seeds("ranking") {
        let result = Ranking::read(&g, data.as_slice());
        assert_eq!(result.is_ok(), name != "repeated", "{name}");
        if let Ok(r) = result {
            check_permutation(r.order(), 4).unwrap();
            assert_eq!(r.order()[0], 3);
        }
    }
}

#[test]
fn synth_config_seeds() {
    for (name, data) in seeds("synth_config") {
        let parsed = ConfigMap::parse(std::str::from_utf8(&data).unwrap());
        match name.as_str() {
            "powerlaw" => assert!(parsed.unwrap().power_law().is_ok()),
            "er" => assert!(parsed.unwrap().er().is_ok()),
            _ => assert!(parsed.is_err(), "{name}"),
        }
    }
}

#[test]
fn simple_graph_seeds() {
    for (name, data) in seeds("simple_graph") {
        let parsed = SimpleGraph::parse(data.as_slice());
        assert_eq!(parsed.is_ok(), name == "triangle", "{name}");
        if let Ok(sg) = parsed {
            assert_eq!(incidence_transform(&sg).unwrap().num_items(), 3);
        }
    }
}

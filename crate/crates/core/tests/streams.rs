//! Graph streams: the generator, graph6 files and pattern filters.

use std::io::Write;

use econn::atlas::{named, pattern_set};
use econn::canon::canonical_form;
use econn::enumerate::{enumerate_connected, filter_free, read_graph6_stream};
use econn::{are_isomorphic, to_graph6, Error};

fn file_with(lines: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(lines.as_bytes()).unwrap();
    f
}

#[test]
fn reads_records_in_file_order() {
    let f = file_with("Bw\nBg\n");
    let graphs: Vec<_> = read_graph6_stream(f.path())
        .unwrap()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(graphs.len(), 2);
    assert!(are_isomorphic(&graphs[0], &named("K3").unwrap()));
    assert_eq!(graphs[1].edges(), vec![(0, 1), (1, 2)]);
}

#[test]
fn empty_file_is_an_empty_stream() {
    let f = file_with("");
    assert_eq!(read_graph6_stream(f.path()).unwrap().count(), 0);
}

#[test]
fn parse_errors_carry_the_line() {
    let f = file_with("Bw\n\nB w\nBg\n");
    let items: Vec<_> = read_graph6_stream(f.path()).unwrap().collect();
    assert!(items[0].is_ok());
    match &items[1] {
        Err(Error::Line { line, source }) => {
            assert_eq!(*line, 3);
            assert!(matches!(**source, Error::Graph6 { offset: 1, .. }));
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(items[2].is_ok());
}

#[test]
fn missing_file_is_an_error() {
    assert!(matches!(
        read_graph6_stream("/nonexistent/x.g6"),
        Err(Error::Io(_))
    ));
}

#[test]
fn claw_filter_on_four_vertices() {
    let free = filter_free(
        enumerate_connected(4).unwrap(),
        pattern_set("{K1_3}").unwrap(),
    );
    let graphs: Vec<_> = free.collect::<Result<_, _>>().unwrap();
    assert_eq!(graphs.len(), 5);
    let claw = named("K1_3").unwrap();
    assert!(graphs.iter().all(|g| !are_isomorphic(g, &claw)));
}

#[test]
fn trivial_filters() {
    for n in 1..=5 {
        let s = filter_free(
            enumerate_connected(n).unwrap(),
            pattern_set("{K1}").unwrap(),
        );
        assert_eq!(s.count(), 0);
    }
    for n in 1..=6 {
        let all = enumerate_connected(n).unwrap().count();
        let s = filter_free(
            enumerate_connected(n).unwrap(),
            pattern_set("{K7}").unwrap(),
        );
        assert_eq!(s.count(), all);
    }
}

#[test]
fn generator_output_is_duplicate_free_and_deterministic() {
    for n in 1..=8 {
        let first: Vec<String> = enumerate_connected(n)
            .unwrap()
            .map(|g| to_graph6(&g.unwrap()).unwrap())
            .collect();
        let second: Vec<String> = enumerate_connected(n)
            .unwrap()
            .map(|g| to_graph6(&g.unwrap()).unwrap())
            .collect();
        assert_eq!(first, second);
        let mut forms: Vec<_> = enumerate_connected(n)
            .unwrap()
            .map(|g| canonical_form(&g.unwrap()))
            .collect();
        let len = forms.len();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), len);
    }
}

#[test]
fn every_generated_graph_is_connected() {
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            let g = g.unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_connected());
        }
    }
}

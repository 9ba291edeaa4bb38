//! graph6 encoding (McKay's format) for small undirected graphs.
//!
//! Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use crate::graph::{Graph, MAX_ORDER};
use crate::{Error, Result};

/// Largest order written by [`to_graph6`] (single-byte header).
pub const MAX_SHORT_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` header are ignored.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim();
    let (base, text) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = text.as_bytes();
    match bytes.first() {
        None => return Err(Error::graph6(base, "empty record")),
        Some(b':') => return Err(Error::graph6(base, "sparse6 records are not supported")),
        Some(b'&') => return Err(Error::graph6(base, "digraph6 records are not supported")),
        _ => {}
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::graph6(
                base + i,
                format!("byte {b:#04x} outside 63..126"),
            ));
        }
    }

    let (n, header_len) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), 1)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 4)
    } else if bytes.len() >= 8 && bytes[1] == 126 {
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 8)
    } else {
        return Err(Error::graph6(base, "truncated order header"));
    };
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            limit: MAX_ORDER,
        });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[header_len..];
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::graph6(
            base + header_len + body.len().min(expected),
            format!(
                "expected {expected} edge bytes for n={n}, found {}",
                body.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let used = nbits - 6 * (expected - 1);
        let pad_mask = (1u8 << (6 - used)) - 1;
        if (last - 63) & pad_mask != 0 {
            return Err(Error::graph6(
                base + header_len + expected - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 record (no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_ORDER {
        return Err(Error::UnsupportedSize {
            n,
            limit: MAX_SHORT_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_small_records() {
        let k3 = from_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));

        let p3 = from_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        let k1 = from_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(from_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn encodes_small_graphs() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let line = to_graph6(&p4).unwrap();
        assert_eq!(from_graph6(&line).unwrap(), p4);
    }

    #[test]
    fn header_and_whitespace_ignored() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap().m(), 3);
    }

    #[test]
    fn malformed_records_name_offsets() {
        match from_graph6("B w") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        // K3 has 3 bits; the low three padding bits of 'x' (120-63=57=111001) are nonzero.
        assert!(matches!(
            from_graph6("Bx"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(from_graph6("C"), Err(Error::Graph6 { .. })));
        assert!(matches!(from_graph6("Bww"), Err(Error::Graph6 { .. })));
        assert!(from_graph6(":Bw").is_err());
        assert!(from_graph6("&Bw").is_err());
    }

    #[test]
    fn long_form_decodes_and_encoder_refuses() {
        let g = Graph::from_edges(63, &[(0, 62)]).unwrap();
        assert!(matches!(
            to_graph6(&g),
            Err(Error::UnsupportedSize { n: 63, .. })
        ));
        // n = 63 long form: '~' then 63 as three 6-bit groups (0,0,63).
        let nbits: usize = 63 * 62 / 2;
        let mut rec = vec![b'~', 63, 63, 63 + 63];
        let mut body = vec![63u8; nbits.div_ceil(6)];
        // bit for (0,62) is at index 62*61/2 = 1891.
        let k = 62 * 61 / 2;
        body[k / 6] += 1 << (5 - k % 6);
        rec.extend(body);
        let decoded = from_graph6(std::str::from_utf8(&rec).unwrap()).unwrap();
        assert_eq!(decoded, g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=62).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.set_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let line = to_graph6(&g).unwrap();
            let back = from_graph6(&line).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back).unwrap(), line);
        }
    }
}

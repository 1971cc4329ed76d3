use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use maxmatch_core::format::{parse_edge_list, parse_graph6, GRAPH6_HEADER};
use maxmatch_core::{Error, Graph};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

/// Reads the whole input from `path`, or stdin when absent.
pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    match path {
        Some(p) => {
            buf = std::fs::read(p)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(buf)
}

/// Edge lists contain digits; graph6 bytes (63..=126) never do.
pub fn detect(bytes: &[u8]) -> InputFormat {
    let trimmed = bytes.trim_ascii_start();
    if trimmed.starts_with(GRAPH6_HEADER.as_bytes()) {
        InputFormat::Graph6
    } else if trimmed.iter().any(u8::is_ascii_digit) || trimmed.is_empty() {
        InputFormat::EdgeList
    } else {
        InputFormat::Graph6
    }
}

pub fn parse(bytes: &[u8], format: InputFormat) -> Result<Graph, Error> {
    match format {
        InputFormat::Auto => parse(bytes, detect(bytes)),
        InputFormat::Graph6 => parse_graph6(bytes.trim_ascii()),
        InputFormat::EdgeList => {
            let text = std::str::from_utf8(bytes).map_err(|e| Error::EdgeList {
                line: 1 + bytes[..e.valid_up_to()]
                    .iter()
                    .filter(|&&b| b == b'\n')
                    .count(),
                message: "input is not valid UTF-8".into(),
            })?;
            parse_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect(b"C~\n"), InputFormat::Graph6);
        assert_eq!(detect(b">>graph6<<C~"), InputFormat::Graph6);
        assert_eq!(detect(b"0 1\n1 2\n"), InputFormat::EdgeList);
        assert_eq!(detect(b"n 3\n"), InputFormat::EdgeList);
        assert_eq!(detect(b""), InputFormat::EdgeList);
    }

    #[test]
    fn parses_both_formats() {
        let k4 = Graph::complete(4);
        assert_eq!(parse(b"C~\n", InputFormat::Auto).unwrap(), k4);
        assert_eq!(
            parse(b"0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", InputFormat::Auto).unwrap(),
            k4
        );
        assert!(matches!(
            parse(b"0 1", InputFormat::Graph6),
            Err(Error::Graph6 { .. })
        ));
    }
}

use std::path::PathBuf;

use bivarieg_core::io::{parse_graph, Format};
use bivarieg_core::{Error, Family, Graph, Result};
use clap::{Args, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

/// Exactly one graph source.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Read the graph from a file (edge list or graph6, autodetected).
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Inline graph6 string.
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,

    /// Named family, e.g. `petersen`, `cycle:8`, `complete_bipartite:2,3`.
    #[arg(long, value_name = "SPEC")]
    family: Option<Family>,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    #[command(flatten)]
    source: GraphSource,

    /// Override format autodetection for `--file`.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        let format = self.format.map(|f| match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::EdgeList => Format::EdgeList,
        });
        let s = &self.source;
        if let Some(path) = &s.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            parse_graph(&text, format)
        } else if let Some(text) = &s.graph6 {
            parse_graph(text, Some(format.unwrap_or(Format::Graph6)))
        } else if let Some(f) = s.family {
            f.build()
        } else {
            unreachable!("clap enforces exactly one source")
        }
    }
}

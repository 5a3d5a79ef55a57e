//! Dataset ingestion for the two on-disk layouts used throughout:
//!
//! * **Simplex streams** (`PREFIX-nverts.txt`, `PREFIX-simplices.txt`,
//!   `PREFIX-times.txt`, `PREFIX-labels.txt`): the nverts file holds one
//!   group size per line; the simplices file holds that many node ids per
//!   group, one id per line, concatenated in order; the times file holds
//!   one integer timestamp per group. The labels file has one `node label`
//!   pair per line.
//! * **Edge lists** (`u v` per line) with the same label-file format.
//!
//! All files are whitespace-separated, `#` starts a comment line. External
//! node ids are arbitrary tokens and get remapped to dense indices in order
//! of first appearance; class labels map to indices in sorted label order
//! so the numbering does not depend on node order.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::labeling::ClassLabeling;
use crate::linkpred::TemporalDataset;
use crate::simplex::{NodeId, Simplex, TimestampedSimplex};

/// A parsed dataset: the simplex stream (sorted by time, stable), the
/// labeling over the nodes that appear in the stream, and the maps back to
/// the external node and class names.
#[derive(Clone, Debug, PartialEq)]
pub struct DatasetBundle {
    pub name: String,
    pub stream: Vec<TimestampedSimplex>,
    pub labeling: ClassLabeling,
    /// Dense id -> external node token.
    pub node_names: Vec<String>,
    /// Class index -> external label token, sorted.
    pub class_names: Vec<String>,
    /// False when the source had no timestamps (edge lists).
    pub times_present: bool,
}

impl DatasetBundle {
    /// Downward closure of the stream capped at `max_dim`, with every
    /// labeled node present as a vertex.
    pub fn complex(&self, max_dim: usize) -> Result<SimplicialComplex> {
        let singletons = (0..self.labeling.num_nodes() as u32)
            .map(|v| Simplex::from_sorted(vec![NodeId(v)]));
        SimplicialComplex::from_simplices_capped(
            singletons.chain(self.stream.iter().map(|t| t.simplex.clone())),
            max_dim,
        )
    }

    /// The stream as a deduplicated hypergraph (multiplicities retained).
    pub fn hypergraph(&self) -> Hypergraph {
        Hypergraph::from_groups(self.stream.iter().map(|t| t.simplex.clone()))
    }

    pub fn temporal(&self) -> TemporalDataset {
        TemporalDataset {
            stream: self.stream.clone(),
            labeling: self.labeling.clone(),
        }
    }

    pub fn summary(&self) -> Result<DatasetSummary> {
        let x = self.complex(2)?;
        let mut times: Vec<i64> = self.stream.iter().map(|t| t.time).collect();
        times.sort_unstable();
        times.dedup();
        Ok(DatasetSummary {
            name: self.name.clone(),
            nodes: self.labeling.num_nodes(),
            classes: self.class_names.len(),
            simplices: self.stream.len(),
            max_group_size: self.stream.iter().map(|t| t.simplex.len()).max().unwrap_or(0),
            edges: x.simplex_count(1),
            filled_triangles: x.simplex_count(2),
            closed_triangles: x.count_potential_k_simplices(2)?,
            time_steps: self.times_present.then_some(times.len()),
        })
    }

    /// Writes the four simplex-stream files back out. Re-importing the
    /// result reproduces this bundle exactly.
    pub fn export(&self, prefix: &Path) -> Result<()> {
        let path = |suffix: &str| -> PathBuf {
            let mut s = prefix.as_os_str().to_os_string();
            s.push(suffix);
            PathBuf::from(s)
        };
        let mut nverts = String::new();
        let mut simplices = String::new();
        let mut times = String::new();
        for t in &self.stream {
            nverts.push_str(&format!("{}\n", t.simplex.len()));
            for v in t.simplex.vertices() {
                simplices.push_str(&format!("{}\n", self.node_names[v.index()]));
            }
            times.push_str(&format!("{}\n", t.time));
        }
        let mut labels = String::new();
        for (v, &c) in self.labeling.labels().iter().enumerate() {
            labels.push_str(&format!(
                "{} {}\n",
                self.node_names[v], self.class_names[c as usize]
            ));
        }
        fs::write(path("-nverts.txt"), nverts)?;
        fs::write(path("-simplices.txt"), simplices)?;
        fs::write(path("-times.txt"), times)?;
        fs::write(path("-labels.txt"), labels)?;
        Ok(())
    }
}

/// Load-time statistics in the shape of a dataset summary table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetSummary {
    pub name: String,
    pub nodes: usize,
    pub classes: usize,
    pub simplices: usize,
    pub max_group_size: usize,
    pub edges: usize,
    pub filled_triangles: usize,
    pub closed_triangles: u64,
    pub time_steps: Option<usize>,
}

struct NumberedLines {
    path: PathBuf,
    /// (1-based line number, token) pairs, comments and blanks skipped.
    tokens: Vec<(usize, String)>,
}

fn read_tokens(path: &Path, per_line: Option<usize>) -> Result<NumberedLines> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::parse(path, 0, format!("cannot read file: {e}"))
    })?;
    let mut tokens = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let parts: Vec<&str> = body.split_whitespace().collect();
        if let Some(expected) = per_line {
            if parts.len() != expected {
                return Err(Error::parse(
                    path,
                    line_no,
                    format!("expected {expected} fields, found {}", parts.len()),
                ));
            }
        }
        for p in parts {
            tokens.push((line_no, p.to_string()));
        }
    }
    Ok(NumberedLines {
        path: path.to_path_buf(),
        tokens,
    })
}

fn parse_int<T: std::str::FromStr>(file: &NumberedLines, idx: usize, what: &str) -> Result<T> {
    let (line, tok) = &file.tokens[idx];
    tok.parse().map_err(|_| {
        Error::parse(
            &file.path,
            *line,
            format!("cannot parse {what} from {tok:?}"),
        )
    })
}

#[derive(Default)]
struct NodeInterner {
    ids: HashMap<String, u32>,
    names: Vec<String>,
}

impl NodeInterner {
    fn intern(&mut self, token: &str) -> NodeId {
        if let Some(&id) = self.ids.get(token) {
            return NodeId(id);
        }
        let id = self.names.len() as u32;
        self.ids.insert(token.to_string(), id);
        self.names.push(token.to_string());
        NodeId(id)
    }
}

fn labeling_for(
    interner: &NodeInterner,
    label_path: &Path,
) -> Result<(ClassLabeling, Vec<String>)> {
    let file = read_tokens(label_path, Some(2))?;
    let mut by_node: HashMap<&str, &str> = HashMap::new();
    for pair in file.tokens.chunks(2) {
        by_node.insert(&pair[0].1, &pair[1].1);
    }
    let mut class_names: Vec<String> = by_node
        .values()
        .map(|label| label.to_string())
        .collect();
    class_names.sort_unstable();
    class_names.dedup();
    let class_index: HashMap<&str, u32> = class_names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i as u32))
        .collect();

    let mut labels = Vec::with_capacity(interner.names.len());
    let mut missing = Vec::new();
    for name in &interner.names {
        match by_node.get(name.as_str()) {
            Some(label) => labels.push(class_index[label]),
            None => missing.push(name.clone()),
        }
    }
    if !missing.is_empty() {
        let total = missing.len();
        missing.truncate(10);
        return Err(Error::InvalidInput(format!(
            "{total} stream node(s) have no label, e.g. {}",
            missing.join(", ")
        )));
    }
    Ok((ClassLabeling::new(labels, class_names.len())?, class_names))
}

/// Loads the four-file simplex-stream layout rooted at `prefix`
/// (`PREFIX-nverts.txt` and friends). The stream comes back stably sorted
/// by time.
pub fn load_simplex_dataset(prefix: &Path) -> Result<DatasetBundle> {
    let file_for = |suffix: &str| -> PathBuf {
        let mut s = prefix.as_os_str().to_os_string();
        s.push(suffix);
        PathBuf::from(s)
    };
    let nverts = read_tokens(&file_for("-nverts.txt"), Some(1))?;
    let simplices = read_tokens(&file_for("-simplices.txt"), Some(1))?;
    let times = read_tokens(&file_for("-times.txt"), Some(1))?;

    if times.tokens.len() != nverts.tokens.len() {
        return Err(Error::parse(
            &times.path,
            times.tokens.len().min(nverts.tokens.len()) + 1,
            format!(
                "{} timestamps for {} groups",
                times.tokens.len(),
                nverts.tokens.len()
            ),
        ));
    }
    let declared: usize = {
        let mut total = 0usize;
        for i in 0..nverts.tokens.len() {
            let size: usize = parse_int(&nverts, i, "group size")?;
            if size == 0 {
                let (line, _) = nverts.tokens[i];
                return Err(Error::parse(&nverts.path, line, "group size is zero"));
            }
            total += size;
        }
        total
    };
    if declared != simplices.tokens.len() {
        return Err(Error::parse(
            &simplices.path,
            simplices.tokens.last().map(|t| t.0).unwrap_or(0),
            format!(
                "group sizes sum to {declared} but the vertex file has {} entries",
                simplices.tokens.len()
            ),
        ));
    }

    let mut interner = NodeInterner::default();
    let mut stream = Vec::with_capacity(nverts.tokens.len());
    let mut cursor = 0usize;
    for i in 0..nverts.tokens.len() {
        let size: usize = parse_int(&nverts, i, "group size")?;
        let time: i64 = parse_int(&times, i, "timestamp")?;
        let mut vs = Vec::with_capacity(size);
        for j in 0..size {
            vs.push(interner.intern(&simplices.tokens[cursor + j].1));
        }
        let simplex = Simplex::new(vs).map_err(|e| {
            Error::parse(
                &simplices.path,
                simplices.tokens[cursor].0,
                format!("group starting here: {e}"),
            )
        })?;
        stream.push(TimestampedSimplex { simplex, time });
        cursor += size;
    }
    stream.sort_by_key(|t| t.time); // stable: ties keep input order

    let (labeling, class_names) = labeling_for(&interner, &file_for("-labels.txt"))?;
    let name = prefix
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    Ok(DatasetBundle {
        name,
        stream,
        labeling,
        node_names: interner.names,
        class_names,
        times_present: true,
    })
}

/// Loads a two-column edge list plus a label file. Duplicate edges collapse
/// in the hypergraph view but stay in the stream, so multiplicity is
/// preserved. Timestamps are absent; every record gets time 0.
pub fn load_edge_list_with_labels(path: &Path, label_path: &Path) -> Result<DatasetBundle> {
    let file = read_tokens(path, Some(2))?;
    let mut interner = NodeInterner::default();
    let mut stream = Vec::with_capacity(file.tokens.len() / 2);
    for pair in file.tokens.chunks(2) {
        let u = interner.intern(&pair[0].1);
        let v = interner.intern(&pair[1].1);
        let simplex = Simplex::new(vec![u, v])
            .map_err(|e| Error::parse(&file.path, pair[0].0, e.to_string()))?;
        stream.push(TimestampedSimplex { simplex, time: 0 });
    }
    let (labeling, class_names) = labeling_for(&interner, label_path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    Ok(DatasetBundle {
        name,
        stream,
        labeling,
        node_names: interner.names,
        class_names,
        times_present: false,
    })
}

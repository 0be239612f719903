use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter out of range: {what} = {got}, requires {bound}")]
    ParamOutOfRange {
        what: &'static str,
        got: usize,
        bound: &'static str,
    },
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge ({u}, {v}) not present in the graph")]
    EdgeNotPresent { u: usize, v: usize },
    #[error("repeated vertex {v} in embedding ordering")]
    RepeatedVertex { v: usize },
    #[error("search budget exceeded after {nodes} nodes; answer unknown")]
    BudgetExceeded { nodes: u64 },
    #[error("power iteration did not converge within {iterations} iterations (residual {residual})")]
    NonConvergence { iterations: u64, residual: f64 },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("internal check failed: {0}")]
    InternalCheck(String),
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("DIMACS parse error: {0}")]
    Dimacs(String),
}

pub type Result<T> = std::result::Result<T, Error>;

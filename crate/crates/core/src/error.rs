use thiserror::Error;

/// Largest supported rank of the symmetric group S_{n+1}.  Everything here is
/// exhaustive-search territory; beyond this, factorials stop being funny.
pub const MAX_RANK: usize = 12;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: S_{0} vs S_{1}")]
    RankMismatch(usize, usize),

    #[error("invalid permutation word `{0}`")]
    BadPermutation(String),

    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(usize),

    #[error("transposition ({i} {j}) out of range for S_{rank}")]
    BadTransposition { i: u8, j: u8, rank: usize },

    #[error("invalid quiver string `{0}`: expected a nonempty word over `>` and `<`")]
    BadQuiver(String),

    #[error("invalid interval `{0}`: expected `[i,j)` with 1 <= i < j <= n+1")]
    BadInterval(String),

    #[error("vertex {0} is not a sink")]
    NotASink(u8),

    #[error("vertex {0} is not a source")]
    NotASource(u8),

    #[error("vertex {0} is neither a sink nor a source")]
    NotMutable(u8),

    #[error("objects live over different quivers")]
    QuiverMismatch,

    #[error("{perm} is not c_Q-sortable for Q = {quiver}")]
    NotSortable { perm: String, quiver: String },

    #[error("torsion-free class has no source permutation")]
    MissingSource,

    #[error("vertex index {0} out of range")]
    VertexOutOfRange(u8),

    #[error("length must drop by one at s_{0}")]
    LengthPrecondition(u8),

    #[error("expected the quiver 1<-2->3->...->n, got {0}")]
    NotFanQuiver(String),

    #[error("dimension bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("unsupported field characteristic {0} (use 2, 3 or 5)")]
    BadField(u8),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

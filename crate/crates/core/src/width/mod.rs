//! Exact widths for small graphs.

mod clique;
mod rank;

pub use clique::{
    chain_3expression, clique_width, clique_width_at_most, k_expression, CliqueWidth, Expression,
    Term, CLIQUE_WIDTH_LIMIT,
};
pub use rank::{
    cut_rank, cut_rank_mask, layout_width, rank_u64, rank_width, rank_width_with_limit, RankWidth,
    SplitTree, RANK_WIDTH_LIMIT,
};

/// Whether `rwd <= cwd <= 2^(rwd + 1) - 1`.
pub fn sandwich_holds(rwd: usize, cwd: usize) -> bool {
    rwd <= cwd && cwd < 1usize << (rwd + 1)
}

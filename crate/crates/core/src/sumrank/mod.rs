//! Sum-rank words with 2x2 binary blocks and the SR(C1, C2) construction.

mod bounds;
mod code;
mod embed;
mod word;

pub use bounds::{decodable_gv_rate, embedding_gv_rate, entropy_q, gv_rate, singleton_bound, BoundReport};
pub use code::{sr_encode, sr_min_distance_bruteforce, Component, Readiness, SrDistanceCertificate, SumRankCode};
pub use embed::{hamming_embed, EmbedMode, HammingEmbedding};
pub use word::{lin_to_matrix, matrix_to_lin, sr_distance, sumrank_weight, sumrank_weight_formula, Mat2, SrWord};

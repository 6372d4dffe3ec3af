//! Language-adaptive pre-training at desk scale.
//!
//! A small decoder-only transformer (grouped-query attention, sliding-window
//! causal masking, rotary positions, RMSNorm, gated MLP, tied head) trained
//! through a reverse-mode tape, with low-rank adapters, a byte-fallback BPE
//! tokenizer, a two-phase training pipeline (causal-LM adaptation followed by
//! downstream classifier/regressor fine-tuning), perplexity and task metrics,
//! and energy/cost accounting for finished runs.

pub mod checkpoint;
pub mod cli;
pub mod config;
pub mod data;
pub mod downstream;
pub mod eval;
pub mod gradcheck;
pub mod lora;
pub mod model;
pub mod optim;
pub mod report;
pub mod tape;
pub mod tensor;
pub mod tokenizer;
pub mod trainer;

pub use tape::{Tape, Var};
pub use tensor::{Scalar, Tensor, TensorError};

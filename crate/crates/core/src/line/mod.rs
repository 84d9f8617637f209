//! Embeddability in the real line.

mod embed;
pub mod lp;
mod majorization;
mod profile;
mod four_point;

pub use embed::{embed_line, witness_for_ordering, LineWitness};
pub use majorization::{
    check_majorization, compare_sequences, find_majorizing_enumeration, IndexSequence,
    MajorizationMode, SeqRelation,
};
pub use profile::{check_line_class_sizes, check_line_profile, class_profile, ClassProfile, ClassSizeViolation, LineProfileReport};
pub use four_point::{classify_four_point, FourPointCase, FourPointClass};

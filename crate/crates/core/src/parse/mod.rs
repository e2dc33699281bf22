//! Expression front-end: parsing, normalization, canonical printing, JSON.

mod expr;
mod print;

pub use expr::{
    expand_words, normalize, normalize_by_rewriting, parse, parse_element, rewrite_word, Atom,
    FreeExpr, Word, MAX_EXPONENT,
};
pub use print::{from_json_str, print_canonical, to_json_string, JsonForm};

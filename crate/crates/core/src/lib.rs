pub mod fingerprint;
pub mod reference_codecs;
pub mod rle_conversions;
pub mod slp_conversions;
pub mod slp_engine;
pub mod suffix_structures;
pub mod text_model;

#[cfg(test)]
mod test_support;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/suffix-structures.md")]
    mod suffix_structures {}
    #[doc = include_str!("../../../book/src/slp-queries.md")]
    mod slp_queries {}
    #[doc = include_str!("../../../book/src/conversions.md")]
    mod conversions {}
}

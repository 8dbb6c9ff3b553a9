//! Canonical plain-text documents for algebras and extension data.

pub mod dext;
pub mod lexer;
pub mod nlie;

pub use dext::{
    coadjoint_names, dext1_names, dextgen_names, Dext1Document, DextGenDocument, DEXT1_HEADER,
    DEXTGEN_HEADER,
};
pub use lexer::{FormatError, FormatErrorKind};
pub use nlie::{default_names, AlgebraDocument, NLIE_HEADER};

/// Any of the three document kinds, chosen by the header line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraDocument),
    Dext1(Dext1Document),
    DextGen(DextGenDocument),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let first = lexer::lines(text)?
            .first()
            .map(|l| l.keyword().to_string())
            .unwrap_or_default();
        match first.as_str() {
            "dext1" => Dext1Document::parse(text).map(Document::Dext1),
            "dextgen" => DextGenDocument::parse(text).map(Document::DextGen),
            _ => AlgebraDocument::parse(text).map(Document::Algebra),
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            Document::Algebra(d) => d.serialize(),
            Document::Dext1(d) => d.serialize(),
            Document::DextGen(d) => d.serialize(),
        }
    }
}

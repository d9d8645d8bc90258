use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("element does not belong to this algebra")]
    ForeignElement,
    #[error("character does not belong to this algebra")]
    ForeignCharacter,
    #[error("domain/codomain mismatch")]
    DomainMismatch,
    #[error("point set is not a subset of the ambient set")]
    NotASubset,
    #[error("clopen algebra is not representable: {0}")]
    UnrepresentableCO(String),
    #[error("ideal is not representable: {0}")]
    UnrepresentableIdeal(String),
    #[error("point set is not open")]
    NotOpen,
    #[error("point set is not clopen in the ambient space")]
    NotClopen,
    #[error("enumeration is unsupported on this backend")]
    EnumerationUnsupported,
    #[error("finite-support ideals require a finite-cofinite block over an infinite universe")]
    FiniteSupportOnNonFcBlock,
    #[error("input is not validated at the required level")]
    NotValidated,
    #[error("pair is not a ZLBA")]
    NotZlba,
    #[error("the (LBA) condition fails: {0}")]
    LbaConditionFailed(String),
    #[error("operation is restricted to the finite backend")]
    FiniteBackendOnly,
    #[error("validation error: {0}")]
    Validation(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("field of order {p}^{k} exceeds the 2^16 cap")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {0} is not of the form l^2")]
    NotASquareField(u32),
    #[error("element {value} out of range for field of order {q}")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("unsupported tower depth m = {m} for {variant} (supported: 1..={max})")]
    UnsupportedDepth {
        variant: &'static str,
        m: usize,
        max: usize,
    },
    #[error("illegal group order: {0}")]
    IllegalOrder(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("automorphism variant does not match the tower: {0}")]
    VariantMismatch(String),
    #[error("recovery groups intersect nontrivially")]
    NontrivialIntersection,
    #[error("product of recovery groups is not a group: {0}")]
    NotNormalized(String),
    #[error("intersection of the two function spaces is zero")]
    EmptyCode,
    #[error("pole budget {budget} too small: need at least {needed}")]
    BudgetTooSmall { budget: u64, needed: u64 },
    #[error("designed distance {d} outside 1..={n}")]
    InvalidDistance { d: usize, n: usize },
    #[error("duplicate w-values among interpolation nodes of coordinate {0}")]
    DuplicateWValues(usize),
    #[error("word is not a codeword")]
    NotACodeword,
    #[error("enumeration of {count} codewords exceeds cap {cap}")]
    TooLarge { count: u128, cap: u128 },
    #[error("localities must be sorted ascending")]
    UnsortedLocalities,
    #[error("invalid bound query: {0}")]
    InvalidQuery(String),
    #[error("trade-off line undefined for r1 = r2 = 1 (denominator r1*r2 - 1 is zero)")]
    DenominatorZero,
    #[error("regime violation ({theorem}): {condition}")]
    RegimeViolation {
        theorem: &'static str,
        condition: String,
    },
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("malformed descriptor: {0}")]
    Descriptor(String),
    #[error("malformed group spec: {0}")]
    GroupSpec(String),
}

//! Input ingestion: joint alphabet remapping and factor references.
//!
//! Both inputs are raw byte strings. The joint alphabet is the set of byte
//! values occurring in either input, remapped to the dense range `1..=sigma`
//! in ascending byte order so the rewrite is deterministic.

use crate::error::Error;

/// Symbol id in the dense remapped alphabet, always in `1..=sigma`.
pub type Symbol = u32;

/// Which input string a factor or position refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    A,
    B,
}

/// Bijection between the byte values that occur in the inputs and `1..=sigma`.
#[derive(Clone, Debug)]
pub struct Alphabet {
    to_symbol: [u32; 256], // 0 marks an unused byte value
    to_byte: Vec<u8>,      // index sym-1
}

impl Alphabet {
    fn from_inputs(raw_a: &[u8], raw_b: &[u8]) -> Self {
        let mut used = [false; 256];
        for &byte in raw_a.iter().chain(raw_b) {
            used[byte as usize] = true;
        }
        let mut to_symbol = [0u32; 256];
        let mut to_byte = Vec::new();
        for byte in 0..256usize {
            if used[byte] {
                to_byte.push(byte as u8);
                to_symbol[byte] = to_byte.len() as u32;
            }
        }
        Alphabet { to_symbol, to_byte }
    }

    /// Number of distinct byte values, i.e. sigma.
    pub fn size(&self) -> u32 {
        self.to_byte.len() as u32
    }

    /// Symbol id of `byte`, if the byte occurs in the inputs.
    pub fn symbol_of(&self, byte: u8) -> Option<Symbol> {
        match self.to_symbol[byte as usize] {
            0 => None,
            sym => Some(sym),
        }
    }

    /// Raw byte behind a symbol id.
    pub fn byte_of(&self, symbol: Symbol) -> u8 {
        self.to_byte[(symbol - 1) as usize]
    }
}

/// One input rewritten over the dense joint alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemappedText {
    symbols: Vec<Symbol>,
    sigma: u32,
    source: Source,
}

impl RemappedText {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Size of the joint alphabet the text is written over.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    pub fn source(&self) -> Source {
        self.source
    }

    /// Symbol at 1-based position `pos`.
    pub fn symbol(&self, pos: usize) -> Symbol {
        self.symbols[pos - 1]
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Raw bytes recovered through the alphabet's inverse map.
    pub fn decode(&self, alphabet: &Alphabet) -> Vec<u8> {
        self.symbols.iter().map(|&s| alphabet.byte_of(s)).collect()
    }
}

/// Reference to one factor: source string, 1-based start position, length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FactorRef {
    pub source: Source,
    pub start: usize,
    pub len: usize,
}

impl FactorRef {
    pub fn new(text: &RemappedText, start: usize, len: usize) -> Result<Self, Error> {
        if len == 0 || start == 0 || start + len - 1 > text.len() {
            return Err(Error::OutOfRange {
                start,
                len,
                text_len: text.len(),
            });
        }
        Ok(FactorRef {
            source: text.source(),
            start,
            len,
        })
    }
}

/// Builds the joint alphabet over both inputs and rewrites each over
/// `1..=sigma`. Empty inputs are rejected.
pub fn remap_alphabet(
    raw_a: &[u8],
    raw_b: &[u8],
) -> Result<(RemappedText, RemappedText, Alphabet), Error> {
    if raw_a.is_empty() || raw_b.is_empty() {
        return Err(Error::EmptyInput);
    }
    let alphabet = Alphabet::from_inputs(raw_a, raw_b);
    let rewrite = |raw: &[u8], source| RemappedText {
        symbols: raw
            .iter()
            .map(|&b| alphabet.symbol_of(b).expect("byte seen while building"))
            .collect(),
        sigma: alphabet.size(),
        source,
    };
    let a = rewrite(raw_a, Source::A);
    let b = rewrite(raw_b, Source::B);
    Ok((a, b, alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_symbol_remap() {
        let (a, b, alpha) = remap_alphabet(b"ba", b"ab").unwrap();
        assert_eq!(alpha.size(), 2);
        assert_eq!(alpha.symbol_of(b'a'), Some(1));
        assert_eq!(alpha.symbol_of(b'b'), Some(2));
        assert_eq!(a.symbols(), &[2, 1]);
        assert_eq!(b.symbols(), &[1, 2]);
    }

    #[test]
    fn unary_alphabet() {
        let (a, b, alpha) = remap_alphabet(b"zz", b"zz").unwrap();
        assert_eq!(alpha.size(), 1);
        assert_eq!(a.symbols(), &[1, 1]);
        assert_eq!(b.symbols(), &[1, 1]);
    }

    #[test]
    fn union_alphabet_over_both_inputs() {
        let (a, b, alpha) = remap_alphabet(b"ca", b"ab").unwrap();
        assert_eq!(alpha.size(), 3);
        assert_eq!(alpha.symbol_of(b'a'), Some(1));
        assert_eq!(alpha.symbol_of(b'b'), Some(2));
        assert_eq!(alpha.symbol_of(b'c'), Some(3));
        assert_eq!(a.symbols(), &[3, 1]);
        assert_eq!(b.symbols(), &[1, 2]);
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(remap_alphabet(b"", b"x").unwrap_err(), Error::EmptyInput);
        assert_eq!(remap_alphabet(b"x", b"").unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn factor_ref_bounds() {
        let (a, _, _) = remap_alphabet(b"abc", b"abc").unwrap();
        assert!(FactorRef::new(&a, 1, 3).is_ok());
        assert!(FactorRef::new(&a, 3, 1).is_ok());
        assert!(FactorRef::new(&a, 0, 1).is_err());
        assert!(FactorRef::new(&a, 1, 0).is_err());
        assert!(FactorRef::new(&a, 2, 3).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_arbitrary_bytes(
            raw_a in proptest::collection::vec(any::<u8>(), 1..256),
            raw_b in proptest::collection::vec(any::<u8>(), 1..256),
        ) {
            let (a, b, alpha) = remap_alphabet(&raw_a, &raw_b).unwrap();
            prop_assert_eq!(a.decode(&alpha), raw_a.clone());
            prop_assert_eq!(b.decode(&alpha), raw_b.clone());
            prop_assert_eq!(a.len(), raw_a.len());
            prop_assert_eq!(b.len(), raw_b.len());
            prop_assert!(alpha.size() as usize <= 256.min(raw_a.len() + raw_b.len()));
            for &s in a.symbols().iter().chain(b.symbols()) {
                prop_assert!(1 <= s && s <= alpha.size());
            }
        }
    }
}

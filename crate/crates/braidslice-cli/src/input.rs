use crate::error::CliError;
use braidslice_core::braid::BraidWord;
use braidslice_core::known::{self, KnownKnot};
use braidslice_core::string_calculus::{from_braid, to_braid, AssocString};

/// A closure given by name, braid word or associated string.
pub struct Subject {
    pub word: BraidWord,
    pub string: Option<AssocString>,
    /// Set when the word is exactly a reference knot's word.
    pub reference: Option<&'static KnownKnot>,
}

impl Subject {
    pub fn parse(input: &str, as_braid: bool) -> Result<Self, CliError> {
        if let Some(k) = known::by_name(input.trim()) {
            return Ok(Subject {
                word: k.word(),
                string: Some(k.string()),
                reference: Some(k),
            });
        }
        let (word, string) = if as_braid {
            let w: BraidWord = input.parse()?;
            let s = from_braid(&w).ok();
            (w, s)
        } else {
            let s: AssocString = input.parse()?;
            (to_braid(&s), Some(s))
        };
        let reference = known::KNOWN.iter().copied().find(|k| k.word() == word);
        Ok(Subject {
            word,
            string,
            reference,
        })
    }

    /// Text that identifies the input for hashing.
    pub fn canonical(&self) -> String {
        format!("braid:{}", self.word)
    }
}

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const TOOL: &str = "braidslice";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize, Deserialize)]
pub struct Report<T> {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: String,
    pub input_hash: String,
    pub result: T,
}

pub trait Human {
    fn human(&self) -> String;
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub string: String,
    pub canonical: String,
    pub braid: String,
    pub crossings: u32,
    pub components: usize,
    pub families: Vec<String>,
    pub x_string: Option<String>,
    pub i_invariant: i64,
    pub s2a_pattern: Option<bool>,
    pub s2b_pattern: Option<bool>,
    pub signature: Option<i64>,
    pub determinant: Option<String>,
    pub reference: Option<String>,
    pub status: Option<String>,
}

fn or_dash<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

impl Human for ClassifyResult {
    fn human(&self) -> String {
        let mut s = String::new();
        let fam = if self.families.is_empty() {
            "none".to_string()
        } else {
            self.families.join(", ")
        };
        let _ = writeln!(
            s,
            "string      {} (canonical {})",
            self.string, self.canonical
        );
        let _ = writeln!(s, "braid       {}", self.braid);
        let _ = writeln!(s, "families    {fam}");
        let _ = writeln!(s, "x-string    {}", or_dash(&self.x_string));
        let _ = writeln!(s, "crossings   {}", self.crossings);
        let _ = writeln!(s, "components  {}", self.components);
        let _ = writeln!(s, "I           {}", self.i_invariant);
        let _ = writeln!(s, "signature   {}", or_dash(&self.signature));
        let _ = writeln!(s, "determinant {}", or_dash(&self.determinant));
        if let Some(r) = &self.reference {
            let _ = writeln!(s, "reference   {r}");
        }
        if let Some(st) = &self.status {
            let _ = writeln!(s, "status      {st}");
        }
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerateRow {
    pub string: String,
    pub x_string: Option<String>,
    pub crossings: u32,
    pub components: usize,
    pub families: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerateResult {
    pub max_crossings: u32,
    pub family: Option<String>,
    pub potentially_nonslice: bool,
    pub count: usize,
    pub rows: Vec<EnumerateRow>,
}

impl Human for EnumerateResult {
    fn human(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<32} {:<16} {:>3} {} {}",
                r.string,
                or_dash(&r.x_string),
                r.crossings,
                r.components,
                r.families.join(",")
            );
        }
        let _ = writeln!(s, "{} rows", self.count);
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ModuleInfo {
    pub q: u64,
    /// 1-based standard generators used for `a` and `b`.
    pub generators: [usize; 2],
    pub blanchfield: [[String; 2]; 2],
    /// Numerators over `q` on `{a, ta, b, tb}`.
    pub linking: [[i64; 4]; 4],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InvariantsResult {
    pub braid: String,
    pub string: Option<String>,
    pub components: usize,
    pub seifert_size: usize,
    pub alexander: String,
    pub determinant: String,
    pub signature: i64,
    pub closed_form_signature: Option<i64>,
    pub tl_signatures: BTreeMap<String, i64>,
    pub tl_nullities: BTreeMap<String, usize>,
    pub p: u32,
    pub homology: Vec<u64>,
    pub module: Option<ModuleInfo>,
}

pub fn homology_text(factors: &[u64]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    factors
        .iter()
        .map(|&f| {
            if f == 0 {
                "Z".to_string()
            } else {
                format!("Z/{f}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl Human for InvariantsResult {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "braid        {}", self.braid);
        let _ = writeln!(s, "string       {}", or_dash(&self.string));
        let _ = writeln!(s, "components   {}", self.components);
        let _ = writeln!(s, "seifert size {}", self.seifert_size);
        let _ = writeln!(s, "alexander    {}", self.alexander);
        let _ = writeln!(s, "determinant  {}", self.determinant);
        let _ = writeln!(s, "signature    {}", self.signature);
        for (k, v) in &self.tl_signatures {
            let _ = writeln!(
                s,
                "sigma({k})   {v} (nullity {})",
                self.tl_nullities.get(k).copied().unwrap_or(0)
            );
        }
        let _ = writeln!(s, "H1(cover {})  {}", self.p, homology_text(&self.homology));
        if let Some(m) = &self.module {
            let _ = writeln!(s, "generators   {} {}", m.generators[0], m.generators[1]);
            for row in &m.blanchfield {
                let _ = writeln!(s, "Bl           [{}] [{}]   (over {})", row[0], row[1], m.q);
            }
            for row in &m.linking {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(s, "lambda       {}   (over {})", cells.join(" "), m.q);
            }
        }
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CharacterRow {
    pub character: String,
    pub values: [u64; 4],
    pub polynomial: String,
    pub norm: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MetaboliserRow {
    pub tag: String,
    pub basis: Vec<[u64; 4]>,
    pub characters: Vec<CharacterRow>,
    pub obstructed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ObstructResult {
    pub braid: String,
    pub string: Option<String>,
    pub reference: Option<String>,
    pub p: u32,
    pub q: u64,
    pub homology: Vec<u64>,
    pub generators: [usize; 2],
    pub frame: String,
    pub dual_words: [String; 2],
    pub metabolisers: Vec<MetaboliserRow>,
    pub verdict: String,
    pub conclusion: String,
}

impl Human for ObstructResult {
    fn human(&self) -> String {
        let mut s = String::new();
        let name = self.reference.clone().unwrap_or_else(|| self.braid.clone());
        let _ = writeln!(s, "knot        {name}");
        let _ = writeln!(s, "H1(cover 3) {}", homology_text(&self.homology));
        let _ = writeln!(
            s,
            "generators  {} {}  (dual words {}, {}; {} frame)",
            self.generators[0],
            self.generators[1],
            self.dual_words[0],
            self.dual_words[1],
            self.frame
        );
        for m in &self.metabolisers {
            let last = m.characters.last();
            let _ = writeln!(
                s,
                "  {:<10} {} after {} character(s), last {}",
                m.tag,
                if m.obstructed {
                    "non-norm"
                } else {
                    "norms only"
                },
                m.characters.len(),
                last.map_or("-", |c| c.character.as_str())
            );
        }
        let _ = writeln!(s, "{}: {}", self.verdict, self.conclusion);
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NormResult {
    pub q: u32,
    pub polynomial: String,
    pub norm: bool,
    pub witness: Option<String>,
    pub offending: Option<String>,
    pub multiplicity: Option<u32>,
    pub self_conjugate: Option<bool>,
}

impl Human for NormResult {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "polynomial {}", self.polynomial);
        if self.norm {
            let _ = writeln!(s, "norm: f f̄ with f = {}", or_dash(&self.witness));
        } else {
            let _ = writeln!(
                s,
                "not a norm: factor {} with multiplicity {}{}",
                or_dash(&self.offending),
                or_dash(&self.multiplicity),
                if self.self_conjugate == Some(true) {
                    " (self-conjugate)"
                } else {
                    " (no conjugate partner)"
                }
            );
        }
        s
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DualRow {
    pub x: [u32; 2],
    pub y: [u32; 2],
    pub b_word: String,
    pub c_word: String,
    pub cancels: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DualCheckResult {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
    pub rows: Vec<DualRow>,
    pub all_cancel: bool,
}

impl Human for DualCheckResult {
    fn human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "b = {:?}, c = {:?}", self.b, self.c);
        for r in &self.rows {
            let _ = writeln!(
                s,
                "x = {:?} y = {:?}  B = [{}]  C = [{}]  {}",
                r.x,
                r.y,
                r.b_word,
                r.c_word,
                if r.cancels { "ok" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            s,
            "{}",
            if self.all_cancel {
                "all perturbations cancel"
            } else {
                "cancellation failed"
            }
        );
        s
    }
}

use crate::closures;
use crate::error::CliError;
use crate::input::Subject;
use crate::report::*;
use braidslice_core::braid::{closure_components, dual_subbraids, verify_dual_cancellation};
use braidslice_core::branched_cover::{
    blanchfield, branched_homology, check_module_structure, linking_form,
};
use braidslice_core::exact_algebra::modp::is_prime;
use braidslice_core::exact_algebra::{is_norm, CPoly, CycNum, LaurentPoly, NormVerdict};
use braidslice_core::known::{self, TABLE};
use braidslice_core::seifert::{alexander_polynomial, seifert_matrix, signature_suite};
use braidslice_core::string_calculus::{
    enumerate, families, x_string_patterns, linear_dual, x_string, AssocString, Family,
};
use braidslice_core::twisted_alexander::{
    knot_context, obstruct_context, ContextOptions, Frame, GroupWord, Verdict,
};
use serde::Deserialize;

pub fn classify(subject: &Subject) -> Result<ClassifyResult, CliError> {
    let a = match &subject.string {
        Some(a) => a.clone(),
        None => braidslice_core::string_calculus::from_braid(&subject.word)?,
    };
    let canonical = a.canonical();
    let fams = families(&a);
    let patterns = x_string_patterns(&a).ok();
    let (signature, determinant) = if a.components() == 1 {
        let suite = signature_suite(&subject.word).map_err(CliError::at("seifert"))?;
        (Some(suite.signature), Some(suite.determinant.to_string()))
    } else {
        (None, None)
    };
    let listed = closures::bundled();
    let status = if let Some(st) = listed.status(&a) {
        Some(st)
    } else if TABLE
        .iter()
        .any(|t| t.parse::<AssocString>().is_ok_and(|t| t.equivalent(&a)))
    {
        Some(
            match known::identify(&subject.word) {
                Some(_) => "not slice (twisted Alexander obstruction)",
                None => "potentially non-slice",
            }
            .to_string(),
        )
    } else {
        None
    };
    Ok(ClassifyResult {
        string: a.to_string(),
        canonical: canonical.to_string(),
        braid: subject.word.to_string(),
        crossings: a.crossings(),
        components: a.components(),
        families: fams.iter().map(|f| f.name().to_string()).collect(),
        x_string: x_string(&a).map(|x| x.to_string()),
        i_invariant: a.i_invariant(),
        s2a_pattern: patterns.map(|l| l.s2a_pattern),
        s2b_pattern: patterns.map(|l| l.s2b_pattern),
        signature,
        determinant,
        reference: known::identify(&subject.word).map(|k| k.name.to_string()),
        status,
    })
}

pub fn enumerate_cmd(
    max: u32,
    family: Option<Family>,
    potentially_nonslice: bool,
) -> Result<EnumerateResult, CliError> {
    let listed = closures::bundled();
    let rows: Vec<EnumerateRow> = enumerate(max, family)?
        .into_iter()
        .filter(|r| !potentially_nonslice || !listed.is_listed(&r.string))
        .map(|r| EnumerateRow {
            string: r.string.to_string(),
            x_string: r.x_string.map(|x| x.to_string()),
            crossings: r.crossings,
            components: r.components,
            families: r.families.iter().map(|f| f.name().to_string()).collect(),
        })
        .collect();
    Ok(EnumerateResult {
        max_crossings: max,
        family: family.map(|f| f.name().to_string()),
        potentially_nonslice,
        count: rows.len(),
        rows,
    })
}

/// `q` with `H1 = (Z/q)⁴`, when the homology has that shape.
fn homology_prime(factors: &[u64]) -> Option<u64> {
    match factors {
        [q, rest @ ..] if rest.len() == 3 && rest.iter().all(|x| x == q) && is_prime(*q) => {
            Some(*q)
        }
        _ => None,
    }
}

fn require_knot(subject: &Subject) -> Result<(), CliError> {
    let c = closure_components(&subject.word);
    if c != 1 {
        return Err(CliError::Unsupported {
            stage: "input",
            message: format!("closure has {c} components, not a knot"),
        });
    }
    Ok(())
}

pub fn invariants(subject: &Subject, p: u32, q: Option<u64>) -> Result<InvariantsResult, CliError> {
    if p < 2 {
        return Err(CliError::Unsupported {
            stage: "homology",
            message: format!("p = {p} must be at least 2"),
        });
    }
    let s = seifert_matrix(&subject.word).map_err(CliError::at("seifert"))?;
    let suite = signature_suite(&subject.word).map_err(CliError::at("seifert"))?;
    let h = branched_homology(&s, p).map_err(CliError::at("homology"))?;
    let chosen = match q {
        Some(q) => {
            if p != 3 || q == 3 || !is_prime(q) || !check_module_structure(&h, q) {
                return Err(CliError::Unsupported {
                    stage: "homology",
                    message: format!(
                        "H1 = {} is not M + M over Z/{q}",
                        homology_text(&h.invariant_factors)
                    ),
                });
            }
            Some(q)
        }
        None if p == 3 => homology_prime(&h.invariant_factors)
            .filter(|&q| q != 3 && check_module_structure(&h, q)),
        None => None,
    };
    let module = match chosen {
        Some(q) => {
            let gens = match subject.reference {
                Some(k) => k.generators,
                None => h
                    .scan_generators(q)
                    .ok_or_else(|| CliError::Internal("no generating pair found".into()))?,
            };
            let bl = blanchfield(&s, &h, gens, q).map_err(CliError::at("blanchfield"))?;
            Some(ModuleInfo {
                q,
                generators: [gens.0 + 1, gens.1 + 1],
                blanchfield: bl.entries.map(|row| row.map(|e| e.to_string())),
                linking: linking_form(&bl).symmetric_entries(),
            })
        }
        None => None,
    };
    Ok(InvariantsResult {
        braid: subject.word.to_string(),
        string: subject.string.as_ref().map(|a| a.to_string()),
        components: closure_components(&subject.word),
        seifert_size: s.size(),
        alexander: alexander_polynomial(&s).to_string(),
        determinant: suite.determinant.to_string(),
        signature: suite.signature,
        closed_form_signature: suite.closed_form,
        tl_signatures: suite.tl_signatures,
        tl_nullities: suite.tl_nullities,
        p,
        homology: h.invariant_factors,
        module,
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Override {
    /// 1-based standard generators.
    pub generators: Option<[usize; 2]>,
    pub a: Option<String>,
    pub b: Option<String>,
}

impl Override {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let o: Override = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("override file: {e}")))?;
        if o.a.is_some() != o.b.is_some() {
            return Err(CliError::Parse(
                "override file: give both dual words a and b, or neither".into(),
            ));
        }
        if let Some(g) = o.generators {
            if g[0] == 0 || g[1] == 0 || g[0] == g[1] {
                return Err(CliError::Parse(
                    "override file: generators are two distinct 1-based indices".into(),
                ));
            }
        }
        Ok(o)
    }

    fn options(&self, frame: Option<Frame>) -> Result<ContextOptions, CliError> {
        let word = |w: &str| {
            w.parse::<GroupWord>()
                .map_err(|e| CliError::Parse(format!("override file: {e}")))
        };
        let anchor_words = match (&self.a, &self.b) {
            (Some(a), Some(b)) => Some((word(a)?, word(b)?)),
            _ => None,
        };
        Ok(ContextOptions {
            generators: self.generators.map(|g| (g[0] - 1, g[1] - 1)),
            anchor_words,
            frame,
        })
    }
}

pub fn obstruct(
    subject: &Subject,
    p: u32,
    q: Option<u64>,
    ov: Option<&Override>,
    frame: Option<Frame>,
) -> Result<ObstructResult, CliError> {
    require_knot(subject)?;
    if p != 3 {
        return Err(CliError::Unsupported {
            stage: "homology",
            message: format!("only the triple cover is supported, got p = {p}"),
        });
    }
    let s = seifert_matrix(&subject.word).map_err(CliError::at("seifert"))?;
    let h = branched_homology(&s, 3).map_err(CliError::at("homology"))?;
    let q = match q.or_else(|| homology_prime(&h.invariant_factors)) {
        Some(q) => q,
        None => {
            return Err(CliError::Unsupported {
                stage: "homology",
                message: format!(
                    "H1 = {} is not (Z/q)^4 for a prime q",
                    homology_text(&h.invariant_factors)
                ),
            })
        }
    };
    let mut opts = match ov {
        Some(o) => o.options(frame)?,
        None => ContextOptions {
            frame,
            ..Default::default()
        },
    };
    if opts.generators.is_none() {
        opts.generators = subject.reference.map(|k| k.generators);
    }
    let ctx = knot_context(&subject.word, q, &opts).map_err(CliError::at("l-map"))?;
    let report = obstruct_context(&ctx, true).map_err(CliError::at("metaboliser search"))?;
    let (ga, gb) = report.generators;
    let frame_name = if opts.anchor_words.is_some() {
        "override"
    } else {
        match opts.frame.unwrap_or(Frame::RowShifted) {
            Frame::RowShifted => "row-shifted",
            Frame::Unshifted => "unshifted",
        }
    };
    let dual_words = match &opts.anchor_words {
        Some((a, b)) => [a.to_string(), b.to_string()],
        None => [
            ctx.duals[ga].word.to_string(),
            ctx.duals[gb].word.to_string(),
        ],
    };
    let obstructed = report.verdict == Verdict::Obstructed;
    Ok(ObstructResult {
        braid: subject.word.to_string(),
        string: subject.string.as_ref().map(|a| a.to_string()),
        reference: known::identify(&subject.word).map(|k| k.name.to_string()),
        p,
        q,
        homology: h.invariant_factors,
        generators: [ga + 1, gb + 1],
        frame: frame_name.into(),
        dual_words,
        metabolisers: report
            .metabolisers
            .iter()
            .map(|m| MetaboliserRow {
                tag: m.submodule.tag.to_string(),
                basis: m.submodule.basis.clone(),
                characters: m
                    .characters
                    .iter()
                    .map(|c| CharacterRow {
                        character: c.character.to_string(),
                        values: c.character.values,
                        polynomial: c.polynomial.to_string(),
                        norm: c.is_norm,
                    })
                    .collect(),
                obstructed: m.obstructed,
            })
            .collect(),
        verdict: if obstructed {
            "obstructed"
        } else {
            "not obstructed"
        }
        .into(),
        conclusion: if obstructed {
            "not slice"
        } else {
            "no conclusion"
        }
        .into(),
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffInput {
    Int(i64),
    Coords(Vec<i64>),
}

/// Parses `[c_0, c_1, …]`, each an integer or a list of coordinates on
/// `1, ζ, ζ², …`, into the Laurent polynomial `Σ c_i t^(low+i)`.
pub fn parse_cpoly(text: &str, q: u32, low: i64) -> Result<CPoly, CliError> {
    let raw: Vec<CoeffInput> = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("polynomial at column {}: {e}", e.column())))?;
    if raw.is_empty() {
        return Err(CliError::Parse("polynomial has no coefficients".into()));
    }
    let coeffs = raw
        .into_iter()
        .map(|c| match c {
            CoeffInput::Int(x) => CycNum::from_int_coeffs(q, &[x]),
            CoeffInput::Coords(v) => CycNum::from_int_coeffs(q, &v),
        })
        .collect();
    Ok(LaurentPoly::from_coeffs(low, coeffs))
}

pub fn norm_test(text: &str, q: u32, low: i64) -> Result<NormResult, CliError> {
    if q != 1 && !is_prime(q as u64) {
        return Err(CliError::Unsupported {
            stage: "norm test",
            message: format!("q = {q} must be 1 or a prime"),
        });
    }
    let p = parse_cpoly(text, q, low)?;
    if p.is_zero() {
        return Err(CliError::Parse(
            "the zero polynomial has no norm test".into(),
        ));
    }
    let base = NormResult {
        q,
        polynomial: p.to_string(),
        norm: false,
        witness: None,
        offending: None,
        multiplicity: None,
        self_conjugate: None,
    };
    Ok(match is_norm(&p)? {
        NormVerdict::Norm { witness } => NormResult {
            norm: true,
            witness: Some(witness.to_string()),
            ..base
        },
        NormVerdict::NotNorm {
            offending,
            multiplicity,
            self_conjugate,
        } => NormResult {
            offending: Some(offending.to_string()),
            multiplicity: Some(multiplicity),
            self_conjugate: Some(self_conjugate),
            ..base
        },
    })
}

fn parse_u32_list(text: &str, what: &str) -> Result<Vec<u32>, CliError> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    t.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<u32>().map_err(|_| {
                CliError::Parse(format!(
                    "{what}: token {} ({:?}) is not a non-negative integer",
                    i + 1,
                    tok.trim()
                ))
            })
        })
        .collect()
}

pub fn dual_check(b_text: &str, perturb: Option<&str>) -> Result<DualCheckResult, CliError> {
    let b = parse_u32_list(b_text, "string")?;
    let c = linear_dual(&b)?;
    let cases: Vec<[u32; 4]> = match perturb {
        Some(p) => {
            let v = parse_u32_list(p, "perturbation")?;
            let arr: [u32; 4] = v.try_into().map_err(|_| {
                CliError::Parse("perturbation takes four values x_l,x_r,y_l,y_r".into())
            })?;
            vec![arr]
        }
        None => (0..16u32)
            .map(|m| [m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1])
            .collect(),
    };
    let rows = cases
        .into_iter()
        .map(|[xl, xr, yl, yr]| {
            let (bw, cw) = dual_subbraids(&b, &c, (xl, xr), (yl, yr))?;
            Ok(DualRow {
                x: [xl, xr],
                y: [yl, yr],
                b_word: bw.to_string(),
                c_word: cw.to_string(),
                cancels: verify_dual_cancellation(&bw, &cw),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let all_cancel = rows.iter().all(|r| r.cancels);
    if let Some(r) = rows.iter().find(|r| !r.cancels) {
        return Err(CliError::Internal(format!(
            "B Δ⁻¹ C ≠ Δ⁻¹ for b = {b:?}, x = {:?}, y = {:?}",
            r.x, r.y
        )));
    }
    Ok(DualCheckResult {
        b,
        c,
        rows,
        all_cancel,
    })
}

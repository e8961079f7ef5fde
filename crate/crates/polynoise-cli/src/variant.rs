//! Noise variant selection and evaluation.
//!
//! A [`Sampler`] bundles everything needed to turn a coordinate into a value:
//! the variant, its tiling periods (periodic variants only) and the fractal
//! parameters. Building one validates the flag combination up front so the
//! commands themselves never have to re-check.

use std::fmt;

use polynoise::{
    cnoise2, cnoise3, cnoise4, fbm, pnoise2, pnoise3, pnoise4, snoise2, snoise3, snoise4, vec2,
    vec3, vec4, FbmParams, Period2, Period3, Period4, ShaderKind,
};

/// A variant plus the parameters that pin down its evaluation.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    kind: ShaderKind,
    period2: Option<Period2>,
    period3: Option<Period3>,
    period4: Option<Period4>,
    fbm: FbmParams,
}

/// A flag combination that does not describe a valid sampler.
#[derive(Debug, PartialEq, Eq)]
pub enum SamplerError {
    UnknownVariant(String),
    MissingPeriod(&'static str),
    UnexpectedPeriod(&'static str),
    PeriodArity {
        variant: &'static str,
        dims: usize,
        got: usize,
    },
    BadPeriod(u32),
}

impl fmt::Display for SamplerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplerError::UnknownVariant(name) => {
                write!(f, "unknown noise variant `{name}`; valid names are ")?;
                let mut first = true;
                for kind in polynoise::list_shader_kinds() {
                    if !first {
                        write!(f, ", ")?;
                    }
                    write!(f, "{kind}")?;
                    first = false;
                }
                Ok(())
            }
            SamplerError::MissingPeriod(variant) => {
                write!(f, "{variant} tiles over an explicit period; pass --period")
            }
            SamplerError::UnexpectedPeriod(variant) => {
                write!(f, "{variant} does not tile; drop --period")
            }
            SamplerError::PeriodArity { variant, dims, got } => {
                write!(f, "{variant} needs {dims} period components, got {got}")
            }
            SamplerError::BadPeriod(value) => {
                write!(f, "period component {value} is outside 1..=288")
            }
        }
    }
}

impl std::error::Error for SamplerError {}

impl Sampler {
    /// Validates the combination and builds the sampler. `period` must be
    /// given exactly when the variant is periodic, with one component per
    /// dimension, each in `1..=288`.
    pub fn new(
        kind: ShaderKind,
        period: Option<&[u32]>,
        fbm: FbmParams,
    ) -> Result<Self, SamplerError> {
        let mut sampler = Sampler {
            kind,
            period2: None,
            period3: None,
            period4: None,
            fbm,
        };
        let dims = sampler.dims();
        match (is_periodic(kind), period) {
            (false, None) => {}
            (false, Some(_)) => return Err(SamplerError::UnexpectedPeriod(kind.name())),
            (true, None) => return Err(SamplerError::MissingPeriod(kind.name())),
            (true, Some(p)) => {
                if p.len() != dims {
                    return Err(SamplerError::PeriodArity {
                        variant: kind.name(),
                        dims,
                        got: p.len(),
                    });
                }
                let bad = |e: polynoise::PeriodError| SamplerError::BadPeriod(e.value);
                match kind {
                    ShaderKind::Periodic2 => {
                        sampler.period2 = Some(Period2::new(p[0], p[1]).map_err(bad)?);
                    }
                    ShaderKind::Periodic3 => {
                        sampler.period3 = Some(Period3::new(p[0], p[1], p[2]).map_err(bad)?);
                    }
                    ShaderKind::Periodic4 => {
                        sampler.period4 = Some(Period4::new(p[0], p[1], p[2], p[3]).map_err(bad)?);
                    }
                    _ => unreachable!("only periodic kinds carry a period"),
                }
            }
        }
        Ok(sampler)
    }

    pub fn kind(&self) -> ShaderKind {
        self.kind
    }

    /// Number of input dimensions the variant consumes.
    pub fn dims(&self) -> usize {
        match self.kind {
            ShaderKind::Simplex2 | ShaderKind::Classic2 | ShaderKind::Periodic2 => 2,
            ShaderKind::Simplex3 | ShaderKind::Classic3 | ShaderKind::Periodic3 => 3,
            ShaderKind::Simplex4 | ShaderKind::Classic4 | ShaderKind::Periodic4 => 4,
        }
    }

    /// Evaluates the variant at `p`, using the first [`dims`](Self::dims)
    /// coordinates and ignoring the rest.
    pub fn eval(&self, p: [f32; 4]) -> f32 {
        let params = &self.fbm;
        match self.kind {
            ShaderKind::Simplex2 => fbm(snoise2, vec2(p[0], p[1]), params),
            ShaderKind::Simplex3 => fbm(snoise3, vec3(p[0], p[1], p[2]), params),
            ShaderKind::Simplex4 => fbm(snoise4, vec4(p[0], p[1], p[2], p[3]), params),
            ShaderKind::Classic2 => fbm(cnoise2, vec2(p[0], p[1]), params),
            ShaderKind::Classic3 => fbm(cnoise3, vec3(p[0], p[1], p[2]), params),
            ShaderKind::Classic4 => fbm(cnoise4, vec4(p[0], p[1], p[2], p[3]), params),
            ShaderKind::Periodic2 => {
                let per = self.period2.expect("validated in new");
                fbm(|q| pnoise2(q, per), vec2(p[0], p[1]), params)
            }
            ShaderKind::Periodic3 => {
                let per = self.period3.expect("validated in new");
                fbm(|q| pnoise3(q, per), vec3(p[0], p[1], p[2]), params)
            }
            ShaderKind::Periodic4 => {
                let per = self.period4.expect("validated in new");
                fbm(|q| pnoise4(q, per), vec4(p[0], p[1], p[2], p[3]), params)
            }
        }
    }
}

fn is_periodic(kind: ShaderKind) -> bool {
    matches!(
        kind,
        ShaderKind::Periodic2 | ShaderKind::Periodic3 | ShaderKind::Periodic4
    )
}

/// Parses a variant name as accepted by `--noise`.
pub fn parse_kind(name: &str) -> Result<ShaderKind, SamplerError> {
    ShaderKind::from_name(name).ok_or_else(|| SamplerError::UnknownVariant(name.to_owned()))
}

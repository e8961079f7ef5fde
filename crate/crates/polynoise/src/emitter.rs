//! GLSL source export. Every noise variant ships as a self-contained GLSL
//! 1.20 snippet — helper functions plus a single entry function, no
//! external state of any kind — stored as a versioned asset and embedded
//! in the binary at compile time.
//!
//! The 2-D simplex asset is the reference listing, byte for byte (its
//! original title comment precedes the `#version` directive, which GLSL
//! permits). The other eight are this library's reconstructions, labeled
//! as such in their header comments and kept in lock-step with the native
//! evaluators: same constants, same operation order.

/// The exportable shader variants, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShaderKind {
    Simplex2,
    Simplex3,
    Simplex4,
    Classic2,
    Classic3,
    Classic4,
    Periodic2,
    Periodic3,
    Periodic4,
}

/// All nine variants, in stable catalog order (2-D simplex first).
pub fn list_shader_kinds() -> [ShaderKind; 9] {
    use ShaderKind::*;
    [
        Simplex2, Simplex3, Simplex4, Classic2, Classic3, Classic4, Periodic2, Periodic3, Periodic4,
    ]
}

impl ShaderKind {
    /// The variant's CLI-facing name.
    pub const fn name(self) -> &'static str {
        match self {
            ShaderKind::Simplex2 => "simplex2",
            ShaderKind::Simplex3 => "simplex3",
            ShaderKind::Simplex4 => "simplex4",
            ShaderKind::Classic2 => "classic2",
            ShaderKind::Classic3 => "classic3",
            ShaderKind::Classic4 => "classic4",
            ShaderKind::Periodic2 => "periodic2",
            ShaderKind::Periodic3 => "periodic3",
            ShaderKind::Periodic4 => "periodic4",
        }
    }

    /// Inverse of [`ShaderKind::name`]; `None` for unknown names.
    pub fn from_name(name: &str) -> Option<ShaderKind> {
        list_shader_kinds().into_iter().find(|k| k.name() == name)
    }

    /// Name of the GLSL entry function in the emitted source.
    pub const fn entry_point(self) -> &'static str {
        match self {
            ShaderKind::Simplex2 | ShaderKind::Simplex3 | ShaderKind::Simplex4 => "snoise",
            ShaderKind::Classic2 | ShaderKind::Classic3 | ShaderKind::Classic4 => "cnoise",
            ShaderKind::Periodic2 | ShaderKind::Periodic3 | ShaderKind::Periodic4 => "pnoise",
        }
    }
}

impl core::fmt::Display for ShaderKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Complete standalone source for one variant: `#version 120` directive,
/// helper functions, entry function. UTF-8, LF line endings, trailing
/// newline.
pub fn emit_shader_source(kind: ShaderKind) -> &'static str {
    match kind {
        ShaderKind::Simplex2 => include_str!("shaders/simplex2.glsl"),
        ShaderKind::Simplex3 => include_str!("shaders/simplex3.glsl"),
        ShaderKind::Simplex4 => include_str!("shaders/simplex4.glsl"),
        ShaderKind::Classic2 => include_str!("shaders/classic2.glsl"),
        ShaderKind::Classic3 => include_str!("shaders/classic3.glsl"),
        ShaderKind::Classic4 => include_str!("shaders/classic4.glsl"),
        ShaderKind::Periodic2 => include_str!("shaders/periodic2.glsl"),
        ShaderKind::Periodic3 => include_str!("shaders/periodic3.glsl"),
        ShaderKind::Periodic4 => include_str!("shaders/periodic4.glsl"),
    }
}

/// The same source with the `#version` line removed, for pasting into a
/// larger shader that declares its own version.
pub fn emit_shader_source_bare(kind: ShaderKind) -> String {
    emit_shader_source(kind)
        .lines()
        .filter(|line| !line.starts_with("#version"))
        .map(|line| format!("{line}\n"))
        .collect()
}

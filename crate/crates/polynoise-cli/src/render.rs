//! Image rendering: planar slices and sphere maps.
//!
//! Both renderers produce a row-major `Vec<u8>` of 8-bit gray pixels. Work is
//! split across threads in contiguous row bands; because every pixel is a
//! pure function of its coordinates, the output is byte-identical for every
//! thread count.

use std::io::Write as _;
use std::path::Path;

use crate::variant::Sampler;

/// Maps a noise value in `[-1, 1]` onto an 8-bit gray level.
///
/// Zero lands exactly on 128 so the mid-gray of a lattice point is easy to
/// spot, and values outside the nominal range clamp instead of wrapping.
pub fn quantize(v: f32) -> u8 {
    let level = ((v + 1.0) / 2.0 * 255.0 + 0.5).floor();
    level.clamp(0.0, 255.0) as u8
}

/// Where a rendered image's pixel centers sit in noise space.
///
/// Pixel `(col, row)` of a planar render samples
/// `origin + (col * scale, row * scale, slice.z, slice.w)`. With an integer
/// origin and `scale = 1.0` every sample lands on the integer lattice, which
/// is the quickest way to *see* that the classic variants vanish there: the
/// whole image renders as the mid-gray 128. (Simplex variants have their
/// zeros on the skewed lattice instead, so they render texture even at
/// integer samples.)
pub struct PlaneView {
    pub width: u32,
    pub height: u32,
    pub origin: [f32; 4],
    pub scale: f32,
}

/// A sphere map: pixels inside the inscribed disc sample the surface of a
/// sphere of radius `radius`, pixels outside render black.
///
/// Pixel `(col, row)` maps to `x = 2(col + 0.5)/W - 1`,
/// `y = 2(row + 0.5)/H - 1`, `z = sqrt(1 - x^2 - y^2)`, and the sampled point
/// is `origin + radius * (x, y, z)`. The fourth coordinate, if the variant
/// has one, comes from `origin[3]`. This is the classic seam test: a texture
/// with any directional bias or discontinuity shows a visible crease at the
/// disc edge.
pub struct SphereView {
    pub width: u32,
    pub height: u32,
    pub origin: [f32; 4],
    pub radius: f32,
}

/// Renders a planar slice. Rows are distributed over `threads` contiguous
/// bands.
pub fn render_plane(sampler: &Sampler, view: &PlaneView, threads: usize) -> Vec<u8> {
    let width = view.width as usize;
    let height = view.height as usize;
    let mut pixels = vec![0u8; width * height];
    let render_row = |row: usize, out: &mut [u8]| {
        let y = view.origin[1] + row as f32 * view.scale;
        for (col, px) in out.iter_mut().enumerate() {
            let x = view.origin[0] + col as f32 * view.scale;
            let p = [x, y, view.origin[2], view.origin[3]];
            *px = quantize(sampler.eval(p));
        }
    };
    for_each_row_band(&mut pixels, width, threads, render_row);
    pixels
}

/// Renders a sphere map. Rows are distributed over `threads` contiguous
/// bands.
pub fn render_sphere(sampler: &Sampler, view: &SphereView, threads: usize) -> Vec<u8> {
    let width = view.width as usize;
    let height = view.height as usize;
    let mut pixels = vec![0u8; width * height];
    let render_row = |row: usize, out: &mut [u8]| {
        let y = 2.0 * (row as f32 + 0.5) / view.height as f32 - 1.0;
        for (col, px) in out.iter_mut().enumerate() {
            let x = 2.0 * (col as f32 + 0.5) / view.width as f32 - 1.0;
            let rsq = x * x + y * y;
            if rsq > 1.0 {
                *px = 0;
                continue;
            }
            let z = (1.0 - rsq).sqrt();
            let p = [
                view.origin[0] + view.radius * x,
                view.origin[1] + view.radius * y,
                view.origin[2] + view.radius * z,
                view.origin[3],
            ];
            *px = quantize(sampler.eval(p));
        }
    };
    for_each_row_band(&mut pixels, width, threads, render_row);
    pixels
}

/// Splits `pixels` into contiguous row bands and runs `render_row` on every
/// row, using one scoped thread per band.
fn for_each_row_band(
    pixels: &mut [u8],
    width: usize,
    threads: usize,
    render_row: impl Fn(usize, &mut [u8]) + Sync,
) {
    let threads = threads.max(1);
    let height = pixels.len() / width.max(1);
    let rows_per_band = height.div_ceil(threads).max(1);
    std::thread::scope(|scope| {
        for (band, chunk) in pixels.chunks_mut(rows_per_band * width).enumerate() {
            let render_row = &render_row;
            scope.spawn(move || {
                for (i, row_pixels) in chunk.chunks_mut(width).enumerate() {
                    render_row(band * rows_per_band + i, row_pixels);
                }
            });
        }
    });
}

/// Writes an 8-bit binary PGM (magic `P5`, maxval 255).
pub fn write_pgm(path: &Path, width: u32, height: u32, pixels: &[u8]) -> std::io::Result<()> {
    debug_assert_eq!(pixels.len(), width as usize * height as usize);
    let mut out = Vec::with_capacity(pixels.len() + 32);
    write!(out, "P5\n{width} {height}\n255\n")?;
    out.extend_from_slice(pixels);
    std::fs::write(path, out)
}

/// Writes an 8-bit grayscale PNG. Only available with the `png` feature.
#[cfg(feature = "png")]
pub fn write_png(
    path: &Path,
    width: u32,
    height: u32,
    pixels: &[u8],
) -> Result<(), image::ImageError> {
    debug_assert_eq!(pixels.len(), width as usize * height as usize);
    let img = image::GrayImage::from_raw(width, height, pixels.to_vec())
        .expect("pixel buffer matches the declared dimensions");
    img.save_with_format(path, image::ImageFormat::Png)
}

#![allow(dead_code)]

use std::fs;
use std::path::Path;

use msfractal::synthetic::{texture, TextureKind};
use msfractal::texture_io::save_pgm;

pub const FOUR_CLASSES: [(&str, TextureKind); 4] = [
    ("constant", TextureKind::Constant(120)),
    ("noise", TextureKind::Noise { lo: 0, hi: 255 }),
    ("ramp", TextureKind::Ramp),
    (
        "sinusoid",
        TextureKind::Sinusoid {
            period: 64.0,
            amplitude: 100.0,
        },
    ),
];

/// `root/<class>/<k>.pgm`, `images` files per class, each `width` x `height`.
pub fn write_class_tree(
    root: &Path,
    classes: &[(&str, TextureKind)],
    images: usize,
    width: usize,
    height: usize,
) {
    for (c, (name, kind)) in classes.iter().enumerate() {
        let dir = root.join(name);
        fs::create_dir_all(&dir).unwrap();
        for k in 0..images {
            let img = texture(*kind, width, height, (c * 1000 + k) as u64).unwrap();
            save_pgm(&img, dir.join(format!("{k:03}.pgm"))).unwrap();
        }
    }
}

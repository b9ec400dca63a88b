//! The UISA program-image format: a 16-byte header (magic `UISA`, format
//! version, entry pc, word count) followed by little-endian 32-bit words
//! loaded at the entry address.

pub const MAGIC: &[u8; 4] = b"UISA";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    pub entry: u32,
    pub words: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImageError {
    #[error("not a UISA image (bad magic)")]
    BadMagic,
    #[error("unsupported UISA version {0}")]
    BadVersion(u32),
    #[error("truncated image: header says {want} words, found {got}")]
    Truncated { want: u32, got: u32 },
}

impl Image {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + self.words.len() * 4);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&self.entry.to_le_bytes());
        out.extend_from_slice(&(self.words.len() as u32).to_le_bytes());
        for w in &self.words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Image, ImageError> {
        if bytes.len() < 16 || &bytes[0..4] != MAGIC {
            return Err(ImageError::BadMagic);
        }
        let word = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().unwrap());
        let version = word(4);
        if version != VERSION {
            return Err(ImageError::BadVersion(version));
        }
        let entry = word(8);
        let count = word(12);
        let avail = (bytes.len() - 16) / 4;
        if (avail as u32) < count {
            return Err(ImageError::Truncated {
                want: count,
                got: avail as u32,
            });
        }
        let words = (0..count as usize).map(|i| word(16 + 4 * i)).collect();
        Ok(Image { entry, words })
    }

    /// Load the image into memory at its entry address. The caller maps the
    /// region; loading through an unmapped range is a caller bug.
    pub fn load(&self, cpu: &mut crate::sim::CpuState) {
        for (i, w) in self.words.iter().enumerate() {
            cpu.write_mem(self.entry.wrapping_add(4 * i as u32), 4, *w)
                .expect("image target range must be mapped");
        }
        cpu.pc = self.entry;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let img = Image {
            entry: 0x1000,
            words: vec![0xE600_0000, 0x1234_5678],
        };
        let b = img.to_bytes();
        assert_eq!(b.len(), 16 + 8);
        assert_eq!(Image::from_bytes(&b).unwrap(), img);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(Image::from_bytes(b"ELF!....").unwrap_err(), ImageError::BadMagic);
        let mut b = Image {
            entry: 0,
            words: vec![1, 2, 3],
        }
        .to_bytes();
        b.truncate(20);
        assert!(matches!(
            Image::from_bytes(&b).unwrap_err(),
            ImageError::Truncated { .. }
        ));
    }
}

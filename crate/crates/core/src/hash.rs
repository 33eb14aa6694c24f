//! SHA-256 helpers used for parameter hashing and run manifests.

use sha2::{Digest, Sha256};

/// Hex-encoded SHA-256 of a byte slice.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Hex-encoded SHA-256 of a stream of f64 values in little-endian order.
pub fn sha256_f64<'a, I: IntoIterator<Item = &'a f64>>(values: I) -> String {
    let mut hasher = Sha256::new();
    for v in values {
        hasher.update(v.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_empty_digest() {
        // SHA-256 of the empty string.
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn f64_hash_is_order_sensitive() {
        let a = [1.0f64, 2.0];
        let b = [2.0f64, 1.0];
        assert_ne!(sha256_f64(a.iter()), sha256_f64(b.iter()));
    }
}

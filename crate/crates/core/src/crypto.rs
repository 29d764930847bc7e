// Copyright (c) Obelia contributors
// SPDX-License-Identifier: Apache-2.0

//! Digests and the signature abstraction.
//!
//! Two interchangeable schemes implement [`SignatureScheme`]:
//!
//! * [`Ed25519Scheme`] — real signatures, keys derived deterministically from
//!   a seed so simulations stay reproducible;
//! * [`MockScheme`] — signature = tagged hash of `(signer, message)`. Orders
//!   of magnitude faster, and anyone can compute anyone's signature, which is
//!   exactly the forgery hook the adversarial harness uses. Honest code only
//!   ever signs with its own identity.

use std::fmt;

use ed25519_dalek::{Signer as _, Verifier as _};
use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};

use crate::committee::{ValidatorId, ValidatorKind};

/// 32-byte content digest (SHA-256 of a canonical encoding).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digest(pub [u8; 32]);

impl Digest {
    pub const ZERO: Digest = Digest([0u8; 32]);

    pub fn of(bytes: &[u8]) -> Self {
        let mut h = Sha256::new();
        h.update(bytes);
        Digest(h.finalize().into())
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        let bytes = hex::decode(s).ok()?;
        let arr: [u8; 32] = bytes.try_into().ok()?;
        Some(Digest(arr))
    }
}

impl fmt::Debug for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", &self.to_hex()[..12])
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Digest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Digest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Digest::from_hex(&s).ok_or_else(|| serde::de::Error::custom("invalid digest hex"))
    }
}

/// Opaque signature bytes; the scheme decides the length.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(pub Vec<u8>);

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sig:{}", hex::encode(&self.0[..self.0.len().min(6)]))
    }
}

/// Signing and verification bound to validator identities.
///
/// `sign` is only meaningful for identities whose key material the scheme
/// holds; in simulation one scheme instance holds the whole roster.
pub trait SignatureScheme: Send + Sync {
    fn sign(&self, signer: ValidatorId, msg: &[u8]) -> Signature;
    fn verify(&self, signer: ValidatorId, msg: &[u8], sig: &Signature) -> bool;
}

const MOCK_TAG: u8 = 0xA0;

/// Deterministic mock: signature = SHA-256(tag || kind || index || msg).
///
/// Verification recomputes the hash, so a corrupted byte fails verification
/// just like a real scheme. Forgery is trivially possible by construction;
/// only adversary strategies exploit that.
#[derive(Clone, Default)]
pub struct MockScheme;

impl MockScheme {
    fn digest_for(signer: ValidatorId, msg: &[u8]) -> Vec<u8> {
        let mut h = Sha256::new();
        h.update([MOCK_TAG, signer.kind as u8]);
        h.update(signer.index.to_le_bytes());
        h.update(msg);
        h.finalize().to_vec()
    }
}

impl SignatureScheme for MockScheme {
    fn sign(&self, signer: ValidatorId, msg: &[u8]) -> Signature {
        Signature(Self::digest_for(signer, msg))
    }

    fn verify(&self, signer: ValidatorId, msg: &[u8], sig: &Signature) -> bool {
        sig.0 == Self::digest_for(signer, msg)
    }
}

/// Ed25519 over the same interface. Key pairs for the whole roster are
/// derived from a seed, one per (kind, index).
pub struct Ed25519Scheme {
    core_keys: Vec<ed25519_dalek::SigningKey>,
    aux_keys: Vec<ed25519_dalek::SigningKey>,
}

impl Ed25519Scheme {
    pub fn from_seed(seed: u64, core_count: usize, aux_count: usize) -> Self {
        let derive = |kind: u8, index: u32| {
            let mut h = Sha256::new();
            h.update(b"obelia-key");
            h.update(seed.to_le_bytes());
            h.update([kind]);
            h.update(index.to_le_bytes());
            let bytes: [u8; 32] = h.finalize().into();
            ed25519_dalek::SigningKey::from_bytes(&bytes)
        };
        Ed25519Scheme {
            core_keys: (0..core_count).map(|i| derive(0, i as u32)).collect(),
            aux_keys: (0..aux_count).map(|i| derive(1, i as u32)).collect(),
        }
    }

    fn key(&self, signer: ValidatorId) -> Option<&ed25519_dalek::SigningKey> {
        match signer.kind {
            ValidatorKind::Core => self.core_keys.get(signer.index as usize),
            ValidatorKind::Aux => self.aux_keys.get(signer.index as usize),
        }
    }
}

impl SignatureScheme for Ed25519Scheme {
    fn sign(&self, signer: ValidatorId, msg: &[u8]) -> Signature {
        let key = self.key(signer).expect("signer not in roster");
        Signature(key.sign(msg).to_bytes().to_vec())
    }

    fn verify(&self, signer: ValidatorId, msg: &[u8], sig: &Signature) -> bool {
        let Some(key) = self.key(signer) else { return false };
        let Ok(sig) = ed25519_dalek::Signature::from_slice(&sig.0) else {
            return false;
        };
        key.verifying_key().verify(msg, &sig).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn core(i: u32) -> ValidatorId {
        ValidatorId::core(i)
    }

    #[test]
    fn mock_sign_verify_roundtrip() {
        let s = MockScheme;
        let sig = s.sign(core(1), b"hello");
        assert!(s.verify(core(1), b"hello", &sig));
        assert!(!s.verify(core(2), b"hello", &sig));
        assert!(!s.verify(core(1), b"hellp", &sig));
    }

    #[test]
    fn mock_signatures_are_deterministic() {
        let s = MockScheme;
        assert_eq!(s.sign(core(3), b"m"), s.sign(core(3), b"m"));
    }

    #[test]
    fn ed25519_sign_verify_roundtrip() {
        let s = Ed25519Scheme::from_seed(7, 4, 2);
        let aux = ValidatorId::aux(1);
        let sig = s.sign(aux, b"proposal");
        assert!(s.verify(aux, b"proposal", &sig));
        assert!(!s.verify(ValidatorId::aux(0), b"proposal", &sig));
        let mut bad = sig.clone();
        bad.0[0] ^= 1;
        assert!(!s.verify(aux, b"proposal", &bad));
    }

    #[test]
    fn schemes_reject_replay_across_messages() {
        let s = MockScheme;
        let sig = s.sign(core(0), b"proposal-a");
        assert!(!s.verify(core(0), b"proposal-b", &sig));
    }
}

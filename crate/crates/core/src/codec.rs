// Copyright (c) Obelia contributors
// SPDX-License-Identifier: Apache-2.0

//! Canonical binary encoding used for content addressing and signing.
//!
//! Digests must be reproducible across implementations, so the byte layout
//! is fixed:
//!
//! * integers are little-endian, fixed width (`u8`, `u32`, `u64`);
//! * a validator id is `kind: u8` (0 = core, 1 = aux) followed by `index: u32`;
//! * a sequence is a `u32` element count followed by the elements;
//! * digest sets are encoded in ascending byte order;
//! * every value starts with a one-byte kind tag (see `tag` constants in
//!   [`crate::types`]).
//!
//! The signature over a value never enters its canonical encoding: a digest
//! identifies content, and signatures are bound to that digest separately.

pub struct Encoder {
    buf: Vec<u8>,
}

impl Encoder {
    pub fn new() -> Self {
        Self { buf: Vec::with_capacity(256) }
    }

    pub fn u8(&mut self, v: u8) -> &mut Self {
        self.buf.push(v);
        self
    }

    pub fn u32(&mut self, v: u32) -> &mut Self {
        self.buf.extend_from_slice(&v.to_le_bytes());
        self
    }

    pub fn u64(&mut self, v: u64) -> &mut Self {
        self.buf.extend_from_slice(&v.to_le_bytes());
        self
    }

    pub fn bytes(&mut self, v: &[u8]) -> &mut Self {
        self.buf.extend_from_slice(v);
        self
    }

    /// Length-prefixed sequence of fixed-size items.
    pub fn seq<'a, I, T, F>(&mut self, items: I, mut f: F) -> &mut Self
    where
        I: IntoIterator<Item = &'a T>,
        T: 'a,
        F: FnMut(&mut Self, &T),
    {
        let items: Vec<&T> = items.into_iter().collect();
        self.u32(items.len() as u32);
        for item in items {
            f(self, item);
        }
        self
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

impl Default for Encoder {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_little_endian_and_length_prefixed() {
        let mut e = Encoder::new();
        e.u8(7).u32(1).u64(2);
        e.seq(&[3u8, 4u8], |e, v| {
            e.u8(*v);
        });
        let bytes = e.finish();
        assert_eq!(
            bytes,
            vec![7, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 3, 4]
        );
    }
}

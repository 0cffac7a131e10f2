//! Inductive-freeness certificates and their JSON form.
//!
//! A certificate for an arrangement `A` refers to `A` after quotienting by its
//! center. A `Node` names a pivot in those coordinates; `del` certifies
//! `A \ H` and `res` certifies `A^H`, again each taken modulo its center.

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    Leaf,
    Node {
        pivot: Vec<i64>,
        del: Box<Certificate>,
        res: Box<Certificate>,
    },
}

#[derive(Serialize)]
struct NodeRef<'a> {
    pivot: &'a [i64],
    del: &'a Certificate,
    res: &'a Certificate,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeOwned {
    pivot: Vec<i64>,
    // Explicit deserializers make a missing child an error instead of a leaf.
    #[serde(deserialize_with = "Certificate::deserialize")]
    del: Certificate,
    #[serde(deserialize_with = "Certificate::deserialize")]
    res: Certificate,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Certificate::Leaf => s.serialize_none(),
            Certificate::Node { pivot, del, res } => NodeRef { pivot, del, res }.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match Option::<NodeOwned>::deserialize(d)? {
            None => Certificate::Leaf,
            Some(n) => Certificate::Node { pivot: n.pivot, del: Box::new(n.del), res: Box::new(n.res) },
        })
    }
}

impl Certificate {
    pub fn is_leaf(&self) -> bool {
        matches!(self, Certificate::Leaf)
    }

    /// Number of nodes, leaves included.
    pub fn size(&self) -> usize {
        match self {
            Certificate::Leaf => 1,
            Certificate::Node { del, res, .. } => 1 + del.size() + res.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Certificate::Leaf => 0,
            Certificate::Node { del, res, .. } => 1 + del.depth().max(res.depth()),
        }
    }
}

/// Identifies the arrangement a certificate file is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateHeader {
    pub system: String,
    /// 1-based reduced word.
    pub word: Vec<usize>,
    pub arrangement: Arrangement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub header: CertificateHeader,
    pub certificate: Certificate,
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        let mut out = Vec::new();
        let mut ser = serde_json::Serializer::new(&mut out);
        self.serialize(&mut ser).expect("serialization to memory");
        String::from_utf8(out).expect("JSON is UTF-8")
    }

    /// Parses a certificate file without a nesting-depth limit.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut de = serde_json::Deserializer::from_str(text);
        de.disable_recursion_limit();
        let f = CertificateFile::deserialize(&mut de).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        de.end().map_err(|e| Error::MalformedCertificate(e.to_string()))?;
        Ok(f)
    }
}

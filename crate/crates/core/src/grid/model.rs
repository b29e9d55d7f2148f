//! Fixed components, compasses, orbit edges and the grid container.

use crate::algebra::lattice::Weight;
use crate::algebra::rational::{serde_rational, Rational};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub const SCHEMA: &str = "grid-torus/1";

pub const BUNDLE_L: &str = "L";
pub const BUNDLE_MINUS_K: &str = "-K";
pub const BUNDLE_ADJOINT: &str = "K+tauL";

/// Multiset of nonzero weights on the normal bundle of a fixed component.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Compass {
    entries: BTreeMap<Weight, u32>,
}

#[derive(Serialize, Deserialize)]
struct CompassEntry {
    weight: Weight,
    mult: u32,
}

impl Compass {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_weights(ws: impl IntoIterator<Item = Weight>) -> Self {
        let mut c = Compass::new();
        for w in ws {
            c.add(w, 1);
        }
        c
    }

    pub fn from_pairs(ws: impl IntoIterator<Item = (Weight, u32)>) -> Self {
        let mut c = Compass::new();
        for (w, k) in ws {
            c.add(w, k);
        }
        c
    }

    /// Rank-1 compass with `plus` entries `+1` and `minus` entries `-1`.
    pub fn signs(plus: u32, minus: u32) -> Self {
        Compass::from_pairs([(Weight::scalar(1), plus), (Weight::scalar(-1), minus)])
    }

    pub fn add(&mut self, w: Weight, k: u32) {
        if k > 0 {
            *self.entries.entry(w).or_insert(0) += k;
        }
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u32> {
        &self.entries
    }

    pub fn multiplicity(&self, w: &Weight) -> u32 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn len(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u32)> {
        self.entries.iter().map(|(w, &k)| (w, k))
    }

    /// Every entry with repetition.
    pub fn expanded(&self) -> Vec<Weight> {
        self.iter()
            .flat_map(|(w, k)| std::iter::repeat_n(w.clone(), k as usize))
            .collect()
    }

    pub fn negated(&self) -> Compass {
        Compass::from_pairs(self.iter().map(|(w, k)| (-w, k)))
    }

    pub fn union(&self, o: &Compass) -> Compass {
        let mut c = self.clone();
        for (w, k) in o.iter() {
            c.add(w.clone(), k);
        }
        c
    }
}

impl fmt::Display for Compass {
    /// Exponent notation, e.g. `(1^3, -1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (w, k) in self.entries.iter().rev() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            if *k == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{w}^{k}")?;
            }
        }
        write!(f, ")")
    }
}

impl Serialize for Compass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<CompassEntry> = self
            .entries
            .iter()
            .map(|(w, &k)| CompassEntry {
                weight: w.clone(),
                mult: k,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Compass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<CompassEntry>::deserialize(d)?;
        let mut c = Compass::new();
        for e in v {
            if e.mult == 0 {
                return Err(de::Error::custom("compass multiplicity must be at least 1"));
            }
            c.add(e.weight, e.mult);
        }
        Ok(c)
    }
}

/// A compass that may be marked as not known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompassData {
    Known(Compass),
    Unspecified,
}

impl CompassData {
    pub fn known(&self) -> Option<&Compass> {
        match self {
            CompassData::Known(c) => Some(c),
            CompassData::Unspecified => None,
        }
    }
}

impl Serialize for CompassData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CompassData::Known(c) => c.serialize(s),
            CompassData::Unspecified => s.serialize_str("unspecified"),
        }
    }
}

impl<'de> Deserialize<'de> for CompassData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Tag(String),
            List(Compass),
        }
        match Raw::deserialize(d)? {
            Raw::List(c) => Ok(CompassData::Known(c)),
            Raw::Tag(t) if t == "unspecified" => Ok(CompassData::Unspecified),
            Raw::Tag(t) => Err(de::Error::custom(format!(
                "expected a compass list or \"unspecified\", got {t:?}"
            ))),
        }
    }
}

/// One summand of a normal-bundle splitting: the weight, its rank, and a
/// free-text bundle label such as `O(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEntry {
    pub weight: Weight,
    pub rank: u32,
    pub bundle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponent {
    pub id: String,
    pub label: String,
    pub dim: u32,
    #[serde(with = "mu_serde")]
    pub mu: BTreeMap<String, Vec<Rational>>,
    pub compass: CompassData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Vec<SplitEntry>>,
    /// Tangent directions that became fixed when this component was produced
    /// by a downgrade.
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    pub absorbed: u32,
}

fn is_zero_u32(x: &u32) -> bool {
    *x == 0
}

mod mu_serde {
    use super::*;
    use serde::ser::SerializeMap;

    struct Row<'a>(&'a [Rational]);

    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serde_rational::vec::serialize(self.0, s)
        }
    }

    struct OwnedRow(Vec<Rational>);

    impl<'de> Deserialize<'de> for OwnedRow {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            serde_rational::vec::deserialize(d).map(OwnedRow)
        }
    }

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<String, Vec<Rational>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(k, &Row(v))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, Vec<Rational>>, D::Error> {
        let raw = BTreeMap::<String, OwnedRow>::deserialize(d)?;
        Ok(raw.into_iter().map(|(k, v)| (k, v.0)).collect())
    }
}

impl FixedComponent {
    pub fn new(
        id: impl Into<String>,
        label: impl Into<String>,
        dim: u32,
        compass: Compass,
    ) -> Self {
        FixedComponent {
            id: id.into(),
            label: label.into(),
            dim,
            mu: BTreeMap::new(),
            compass: CompassData::Known(compass),
            split: None,
            absorbed: 0,
        }
    }

    pub fn with_mu(mut self, bundle: &str, value: Weight) -> Self {
        self.mu.insert(bundle.to_string(), value.to_rational());
        self
    }

    pub fn with_split(mut self, entries: Vec<SplitEntry>) -> Self {
        let mut e = entries;
        e.sort_by(|a, b| a.weight.cmp(&b.weight));
        self.split = Some(e);
        self
    }

    pub fn compass(&self) -> Option<&Compass> {
        self.compass.known()
    }

    pub fn mu_of(&self, bundle: &str) -> Option<&[Rational]> {
        self.mu.get(bundle).map(Vec::as_slice)
    }

    pub fn is_point(&self) -> bool {
        self.dim == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeTag {
    A,
    B,
    C,
    E,
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EdgeTag::A => "A",
            EdgeTag::B => "B",
            EdgeTag::C => "C",
            EdgeTag::E => "E",
        };
        f.write_str(s)
    }
}

/// Closure of a one-dimensional orbit. `src` holds the limit at `t -> 0`,
/// `dst` the limit at `t -> infinity`; `delta` is the stabilizer order.
/// For grids of rank above one the orientation is only a storage order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitEdge {
    pub src: String,
    pub dst: String,
    pub delta: u32,
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub tags: BTreeSet<EdgeTag>,
}

impl OrbitEdge {
    pub fn new(src: impl Into<String>, dst: impl Into<String>) -> Self {
        OrbitEdge {
            src: src.into(),
            dst: dst.into(),
            delta: 1,
            tags: BTreeSet::new(),
        }
    }

    pub fn tagged(src: impl Into<String>, dst: impl Into<String>, tag: EdgeTag) -> Self {
        let mut e = Self::new(src, dst);
        e.tags.insert(tag);
        e
    }

    pub fn with_delta(mut self, delta: u32) -> Self {
        self.delta = delta;
        self
    }

    pub fn tag(&self) -> Option<EdgeTag> {
        self.tags.iter().next().copied()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridFlags {
    pub equalized: bool,
    pub edges_complete: bool,
    pub contact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridData {
    pub schema: String,
    pub rank: usize,
    pub n: u32,
    pub flags: GridFlags,
    pub components: Vec<FixedComponent>,
    pub edges: Vec<OrbitEdge>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, String>,
}

impl GridData {
    pub fn new(rank: usize, n: u32) -> Self {
        GridData {
            schema: SCHEMA.to_string(),
            rank,
            n,
            flags: GridFlags::default(),
            components: Vec::new(),
            edges: Vec::new(),
            meta: BTreeMap::new(),
        }
    }

    pub fn component(&self, id: &str) -> Option<&FixedComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn component_mut(&mut self, id: &str) -> Option<&mut FixedComponent> {
        self.components.iter_mut().find(|c| c.id == id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    pub fn has_bundle(&self, bundle: &str) -> bool {
        !self.components.is_empty() && self.components.iter().all(|c| c.mu.contains_key(bundle))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid serialization cannot fail") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn sample() -> GridData {
        let mut g = GridData::new(1, 1);
        g.flags.equalized = true;
        g.flags.edges_complete = true;
        g.components.push(
            FixedComponent::new("y1", "point", 0, Compass::signs(1, 0))
                .with_mu("L", Weight::scalar(1)),
        );
        let mut sink = FixedComponent::new("y0", "point", 0, Compass::signs(0, 1))
            .with_mu("L", Weight::scalar(0));
        sink.mu.insert("K+tauL".into(), vec![rat(-9, 2)]);
        g.components.push(sink);
        g.edges.push(OrbitEdge::tagged("y1", "y0", EdgeTag::A));
        g
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let s = sample().to_json();
        let back = GridData::from_json(&s).unwrap();
        assert_eq!(back, sample());
        assert_eq!(back.to_json(), s);
        assert!(s.contains("\"-9/2\""));
        assert!(s.contains("\"schema\": \"grid-torus/1\""));
    }

    #[test]
    fn unspecified_compass_round_trip() {
        let mut g = sample();
        g.components[0].compass = CompassData::Unspecified;
        let s = g.to_json();
        assert!(s.contains("\"compass\": \"unspecified\""));
        assert_eq!(GridData::from_json(&s).unwrap(), g);
    }

    #[test]
    fn zero_multiplicity_rejected() {
        let bad = r#"[{"weight":[1],"mult":0}]"#;
        assert!(serde_json::from_str::<Compass>(bad).is_err());
    }

    #[test]
    fn compass_display() {
        assert_eq!(Compass::signs(3, 1).to_string(), "(1^3, -1)");
    }
}

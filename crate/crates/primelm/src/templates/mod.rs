//! Templated generation of the seven lexically matched structural variants.
//!
//! Every experimental item starts from a [`SlotFill`] (the content words) and
//! a set of sampled [`NoiseFlags`] (plurality, optional adjectives and
//! intensifiers, adverb presence and placement). Realizing the same fill and
//! flags under each of the seven [`StructureId`] templates yields seven
//! sentences that differ only in structure.

mod lexicon;
mod lists;
mod realize;

pub use lexicon::{
    load_lexicon,reference_counts, CompatibilityMatrix, FormKey, Lexicon, LexiconCounts,
    LexiconEntry, Pos,
};
pub use lists::{
    generate_lists, generate_lists_with_spec, read_lists, write_lists, ExperimentList, ListSpec,
    LoadedList, LoadedSentence, SentenceRole, LISTS_SCHEMA_VERSION,
};
pub use realize::{
    realize, realize_variants, realize_with_flags, sample_noise_flags, sample_slot_fill,
    AdjectiveChoice, AdverbPosition, GeneratedSentence, NoiseConfig, NoiseFlags, NpFlags, SlotFill,
};

use serde::{Deserialize, Serialize};

/// The seven abstract structures, one template each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StructureId {
    UnreducedObjectRc,
    ReducedObjectRc,
    UnreducedPassiveRc,
    ReducedPassiveRc,
    ActiveSubjectRc,
    /// Verb coordination with the word order of passive/object RCs.
    CoordPsOrc,
    /// Verb coordination with the word order of active subject RCs.
    CoordAsrc,
}

impl StructureId {
    pub const ALL: [StructureId; 7] = [
        StructureId::UnreducedObjectRc,
        StructureId::ReducedObjectRc,
        StructureId::UnreducedPassiveRc,
        StructureId::ReducedPassiveRc,
        StructureId::ActiveSubjectRc,
        StructureId::CoordPsOrc,
        StructureId::CoordAsrc,
    ];

    /// Stable identifier used in files and CLI output.
    pub fn name(self) -> &'static str {
        match self {
            StructureId::UnreducedObjectRc => "unreduced_object_rc",
            StructureId::ReducedObjectRc => "reduced_object_rc",
            StructureId::UnreducedPassiveRc => "unreduced_passive_rc",
            StructureId::ReducedPassiveRc => "reduced_passive_rc",
            StructureId::ActiveSubjectRc => "active_subject_rc",
            StructureId::CoordPsOrc => "coord_psorc",
            StructureId::CoordAsrc => "coord_asrc",
        }
    }

    /// Human-readable label for reports.
    pub fn label(self) -> &'static str {
        match self {
            StructureId::UnreducedObjectRc => "Unreduced Object RC",
            StructureId::ReducedObjectRc => "Reduced Object RC",
            StructureId::UnreducedPassiveRc => "Unreduced Passive RC",
            StructureId::ReducedPassiveRc => "Reduced Passive RC",
            StructureId::ActiveSubjectRc => "Active Subject RC",
            StructureId::CoordPsOrc => "PS/ORC-matched Coordination",
            StructureId::CoordAsrc => "ASRC-matched Coordination",
        }
    }

    pub fn parse(name: &str) -> Option<StructureId> {
        StructureId::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// Position in [`StructureId::ALL`]; also the deterministic tie-break order.
    pub fn index(self) -> usize {
        StructureId::ALL.iter().position(|&s| s == self).unwrap()
    }

    pub fn is_rc(self) -> bool {
        !matches!(self, StructureId::CoordPsOrc | StructureId::CoordAsrc)
    }

    pub fn is_coordination(self) -> bool {
        !self.is_rc()
    }

    /// Whether the relativizer is omitted. `None` for structures where
    /// reduction is not defined (subject RCs and coordination).
    pub fn is_reduced(self) -> Option<bool> {
        match self {
            StructureId::UnreducedObjectRc | StructureId::UnreducedPassiveRc => Some(false),
            StructureId::ReducedObjectRc | StructureId::ReducedPassiveRc => Some(true),
            _ => None,
        }
    }

    /// Whether the embedded verb is passive. `None` outside the four
    /// object/passive RC types.
    pub fn is_passive(self) -> Option<bool> {
        match self {
            StructureId::UnreducedPassiveRc | StructureId::ReducedPassiveRc => Some(true),
            StructureId::UnreducedObjectRc | StructureId::ReducedObjectRc => Some(false),
            _ => None,
        }
    }
}

impl std::fmt::Display for StructureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_seven_structures() {
        assert_eq!(StructureId::ALL.len(), 7);
        for (i, s) in StructureId::ALL.iter().enumerate() {
            assert_eq!(s.index(), i);
            assert_eq!(StructureId::parse(s.name()), Some(*s));
        }
    }

    #[test]
    fn rc_and_coordination_partition() {
        let rcs: Vec<_> = StructureId::ALL.iter().filter(|s| s.is_rc()).collect();
        assert_eq!(rcs.len(), 5);
        let coords: Vec<_> = StructureId::ALL
            .iter()
            .filter(|s| s.is_coordination())
            .collect();
        assert_eq!(coords.len(), 2);
    }
}

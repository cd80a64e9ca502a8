//! Cone membership verdicts shared by every membership test.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Where a form sits relative to a closed convex cone.
///
/// `Unknown` is reserved for the few queries where the exact kernels are
/// incomplete by design (irrational data outside the supported tower); it
/// is never used to paper over a computable answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MembershipVerdict {
    Interior,
    Boundary,
    Outside,
    Unknown,
}

impl MembershipVerdict {
    pub fn is_member(self) -> bool {
        matches!(self, MembershipVerdict::Interior | MembershipVerdict::Boundary)
    }

    /// Process exit code used by the command-line surface.
    pub fn exit_code(self) -> i32 {
        match self {
            MembershipVerdict::Interior => 0,
            MembershipVerdict::Boundary => 1,
            MembershipVerdict::Outside => 2,
            MembershipVerdict::Unknown => 3,
        }
    }

    pub fn code(self) -> char {
        match self {
            MembershipVerdict::Interior => 'I',
            MembershipVerdict::Boundary => 'B',
            MembershipVerdict::Outside => 'O',
            MembershipVerdict::Unknown => 'U',
        }
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MembershipVerdict::Interior => "Interior",
            MembershipVerdict::Boundary => "Boundary",
            MembershipVerdict::Outside => "Outside",
            MembershipVerdict::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

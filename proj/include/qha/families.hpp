#pragma once

#include <string>

namespace qha {

/// Parameterized presentation families used by `qha gen` and the test corpus.
/// Both emit deterministic text in the presentation file format.

/// One loop plus two whiskers at vertex 1 and a chain 1 -> 2 -> ... -> m; the
/// loop annihilates every arrow out of vertex 1 and the chain is cut by one
/// long relation. Requires m >= 10 (MBelowMinimum).
std::string example41_text(int m);

/// Two chains out of vertex 1: one relation-free of length m-1, one with
/// radical-square-zero relations. Requires m >= 9 (MBelowMinimum).
std::string example42_text(int m);

}  // namespace qha

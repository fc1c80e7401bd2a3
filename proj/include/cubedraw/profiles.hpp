#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubedraw/convex.hpp"

namespace cubedraw {

// Profiles in this module are ascending tuples (the draft-list convention),
// unlike the descending output of length_profile.
using AscProfile = std::vector<int>;

// The three crisp necessary conditions. Returns the violated condition, or
// nullopt on pass. Throws std::invalid_argument for malformed tuples.
std::optional<std::string> necessary_filters(const AscProfile& profile, int d);

enum class ProfileStatus { FilteredOut, Realizable, ProvenNone, BudgetExceeded };

struct ProfileCandidate {
  AscProfile profile;
  ProfileStatus status = ProfileStatus::ProvenNone;
  std::string filter_reason;             // set iff the filters rejected it
  std::optional<ConvexDrawing> witness;  // set iff Realizable
  long long nodes = 0;
};

struct RealizeOptions {
  long long node_budget = 1'000'000'000;
  // Iterate slot candidates in descending vertex order; the realizable set
  // must not depend on this.
  bool reverse_candidates = false;
};

// Backtracking slot assignment. Vertex 0...0 is pinned at slot 0, reflection
// and the coordinate-permutation stabilizer of 0...0 are broken canonically,
// so a ProvenNone verdict is exhaustive. Never returns FilteredOut.
ProfileCandidate realize_profile(const AscProfile& profile, int d,
                                 const RealizeOptions& opt = {});

struct EnumerateOptions {
  long long node_budget = 1'000'000'000;
  // Also run the search on filtered-out candidates (soundness audit); a
  // candidate both filtered and realizable would expose an unsound filter.
  bool audit_filtered = false;
  bool reverse_candidates = false;
};

// All ascending tuples with d entries in [1, 2^(d-1)], filtered then searched.
std::vector<ProfileCandidate> enumerate_profiles(
    int d, const EnumerateOptions& opt = {});

struct ConjectureReport {
  // l_i <= 2^(d-1) - 2^(d-i-1) (ascending index, evaluated while the exponent
  // is non-negative).
  std::vector<AscProfile> bound_violations;
  std::vector<AscProfile> all_odd_profiles;       // no even length at all
  std::vector<AscProfile> repeated_odd_profiles;  // some odd length twice

  bool consistent() const {
    return bound_violations.empty() && all_odd_profiles.empty() &&
           repeated_odd_profiles.empty();
  }
};

// Scans the realizable profiles of an enumeration for conjecture violations.
ConjectureReport check_conjectures(const std::vector<ProfileCandidate>& results,
                                   int d);

// The 31 known realizable d = 4 profiles (ascending), used as a regression
// baseline for enumerate_profiles(4).
const std::vector<AscProfile>& known_profiles_d4();

}  // namespace cubedraw

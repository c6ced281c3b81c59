#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "workbench/family.hpp"

namespace workbench {

/// Thrown when an exhaustive routine refuses an instance instead of silently
/// degrading to a heuristic (negative answers must be proofs).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constraint on the size of a sunflower core: exactly c, at most c, or
/// arbitrary.
struct CoreConstraint {
    enum class Kind { exact, at_most, any };
    Kind kind = Kind::any;
    int c = 0;

    static CoreConstraint exact(int c) { return {Kind::exact, c}; }
    static CoreConstraint at_most(int c) { return {Kind::at_most, c}; }
    static CoreConstraint any() { return {Kind::any, 0}; }

    bool admits(int core_size) const {
        switch (kind) {
            case Kind::exact: return core_size == c;
            case Kind::at_most: return core_size <= c;
            case Kind::any: return true;
        }
        return false;
    }

    std::string kind_name() const {
        switch (kind) {
            case Kind::exact: return "exact";
            case Kind::at_most: return "at_most";
            case Kind::any: return "any";
        }
        return "any";
    }

    static CoreConstraint from_kind_name(const std::string& name, int c);

    friend bool operator==(const CoreConstraint&, const CoreConstraint&) = default;
};

/// Indices of s members of a Family plus their common core; checkable in
/// O(s*w) by verify_cert.
struct SunflowerCert {
    std::vector<int> member_indices;
    SetWord core;
};

/// Returns the core if the sets form a sunflower (all pairwise intersections
/// equal the total intersection), absent otherwise. A single set is a
/// 1-sunflower with core equal to itself. Duplicate sets are invalid input.
std::optional<SetWord> is_sunflower(const std::vector<SetWord>& sets);

/// Exhaustive search for a sunflower with s petals whose core size satisfies
/// cc. Candidate cores are the empty set plus all pairwise intersections of
/// members (complete for s >= 2: the core of any sunflower is the
/// intersection of any two of its members), enumerated smallest-core first.
/// For each core the petals are packed by a greedy pass over the link and, on
/// greedy failure, by exact backtracking, so an absent answer is a proof.
/// Refuses with budget_error when the candidate (core,link) pair count would
/// exceed 5*10^5.
std::optional<SunflowerCert> find_sunflower(const Family& fam, int s, CoreConstraint cc);

/// True iff adding `extra` to fam would create a sunflower with s petals
/// (satisfying cc) that uses `extra`. fam itself is assumed admissible, and
/// `extra` must not already be a member.
bool creates_sunflower(const Family& fam, const SetWord& extra, int s, CoreConstraint cc);
bool creates_sunflower(const std::vector<SetWord>& members, const SetWord& extra, int s, CoreConstraint cc);

/// Certificate check: indices valid and distinct, count == s, pairwise
/// intersections all equal cert.core, and |core| satisfies cc. Never throws;
/// a diagnostic is written to *reason when non-null.
bool verify_cert(const Family& fam, const SunflowerCert& cert, int s, CoreConstraint cc,
                 std::string* reason = nullptr);

/// True iff find_sunflower returns absent (the negative answer is exhaustive).
bool is_admissible(const Family& fam, int s, CoreConstraint cc);

}  // namespace workbench

#pragma once

#include <optional>
#include <vector>

#include "workbench/setword.hpp"

namespace workbench {

/// A deduplicated collection of SetWords over a ground set [n], stored
/// strictly sorted under the value order on bitmasks. Immutable after
/// construction; all operations return new values.
class Family {
  public:
    Family() = default;

    /// General constructor: sorts, deduplicates, validates the ground cap and
    /// that every member is a subset of [ground_n]. If `uniformity` is given,
    /// every member must have that cardinality; otherwise it is inferred when
    /// all members share one cardinality.
    Family(int ground_n, std::vector<SetWord> members, std::optional<int> uniformity = std::nullopt);

    static Family empty(int ground_n) { return Family(ground_n, {}); }

    const std::vector<SetWord>& members() const { return members_; }
    int ground_n() const { return ground_n_; }
    std::optional<int> uniformity() const { return uniformity_; }
    std::size_t size() const { return members_.size(); }
    bool is_empty() const { return members_.empty(); }

    const SetWord& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const SetWord& w) const;

    /// Sizes present in the family, ascending.
    const std::vector<int>& layer_sizes() const { return layer_sizes_; }

    /// The layer F^(h): members of cardinality exactly h.
    Family layer(int h) const;

    int min_member_size() const;  // -1 for empty family
    int max_member_size() const;  // -1 for empty family

    friend bool operator==(const Family& a, const Family& b) {
        return a.ground_n_ == b.ground_n_ && a.members_ == b.members_;
    }

  private:
    std::vector<SetWord> members_;
    int ground_n_ = 0;
    std::optional<int> uniformity_;
    std::vector<int> layer_sizes_;
};

/// Union of all members; the empty set for an empty family.
SetWord support(const Family& fam);

/// The shadow on layer h: all h-subsets of members, deduplicated, with result
/// uniformity h. If h is negative or exceeds every member's size the result is
/// empty and *degenerate (when non-null) is set.
Family shadow(const Family& fam, int h, bool* degenerate = nullptr);

/// F(A,B) = { F \ B : F in fam, F cap B = A }. Requires a proper subset
/// relation a ⊆ b.
Family restrict(const Family& fam, const SetWord& a, const SetWord& b);

/// F[B] = members of fam containing at least one member of basis.
Family filter_superset(const Family& fam, const Family& basis);

/// All pairwise unions, deduplicated. Ground set is the larger of the two.
Family join(const Family& f1, const Family& f2);

}  // namespace workbench

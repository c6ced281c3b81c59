#pragma once

#include <vector>

#include "workbench/family.hpp"

namespace workbench {

/// Minimum image of a member list under relabeling of the ground set: the
/// lexicographically smallest sorted bitmask sequence over all injections of
/// the support into the ground set. The minimum always maps the support onto
/// an initial segment of labels.
std::vector<SetWord> min_image(const std::vector<SetWord>& members);

/// True iff `members` (sorted) equals its own minimum image, i.e. the family
/// is the canonical representative of its isomorphism class.
bool is_canonical(const std::vector<SetWord>& members);

/// Family wrapper: relabels onto the minimum image, keeping ground_n.
Family canonical_family(const Family& fam);

}  // namespace workbench

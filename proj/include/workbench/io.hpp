#pragma once

#include <iosfwd>
#include <string>

#include "workbench/family.hpp"

namespace workbench {

/// Family text format:
///   header line `n=<int> k=<int|->`, then one set per line with elements as
///   decimal integers separated by spaces. Lines starting with `#` are
///   comments; a line consisting of a single `-` denotes the empty set.
/// Serialization is canonical: members in storage order, elements ascending,
/// so serialize(parse(serialize(f))) is byte-identical to serialize(f).
std::string serialize_family(const Family& fam);

Family parse_family(std::istream& in);
Family parse_family_string(const std::string& text);
Family load_family_file(const std::string& path);
void save_family_file(const Family& fam, const std::string& path);

}  // namespace workbench

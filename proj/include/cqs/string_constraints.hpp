#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cqs/query.hpp"

namespace cqs {

std::u32string utf8_decode(const std::string& s);
std::string utf8_encode(const std::u32string& s);

// Longest string occurring as a substring of some member of every group.
// Ties go to the lexicographically smallest (by code point). Empty when none.
std::u32string longest_common_substring(const std::vector<std::vector<std::u32string>>& groups);

struct SynthesizedConstraint {
  StrPred pred = StrPred::Contain;
  std::string literal;
  bool operator==(const SynthesizedConstraint&) const = default;
};

// Strongest predicate p such that every group has a value v with p(v, literal).
StrPred strongest_predicate(const std::vector<std::set<std::string>>& w, const std::string& literal);

std::optional<SynthesizedConstraint> syn_lcs(const std::vector<std::set<std::string>>& w);

}  // namespace cqs

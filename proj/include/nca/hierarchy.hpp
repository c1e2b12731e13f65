#pragma once

// Concept hierarchy. The tree is implicit in the digit codes: every proper
// prefix of a code is an ancestor, e.g. 13114 (Fruit) sits under
// 1311 (Living thing), 131, 13 and 1 (Concrete).

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nca/corpus.hpp"

namespace nca {

/// Proper prefixes of `code`, nearest ancestor first.
std::vector<SemClassCode> ancestors(const SemClassCode& code);

/// True iff `a` is a strict prefix of `b`.
bool is_ancestor(const SemClassCode& a, const SemClassCode& b);

using LabelMap = std::map<SemClassCode, std::string>;

/// Reads code<TAB>label lines; '#' comments and blank lines are skipped.
/// A repeated code keeps the last label and reports a warning through
/// `warn`. Throws MalformedLabelLine.
LabelMap load_labels(std::istream& in,
                     const std::function<void(const std::string&)>& warn = {});
LabelMap load_labels_file(
    const std::string& path,
    const std::function<void(const std::string&)>& warn = {});

std::optional<std::string> label_of(const LabelMap& labels,
                                    const SemClassCode& code);

}  // namespace nca

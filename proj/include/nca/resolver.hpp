#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nca/corpus.hpp"
#include "nca/errors.hpp"
#include "nca/table.hpp"

namespace nca {

enum class Provenance {
  Direct,         // the noun's own entries
  ClassExact,     // representative of the noun's class
  ClassAncestor,  // representative of an ancestor class
  None,
};

struct Resolution {
  std::optional<std::string> classifier;
  Provenance provenance = Provenance::None;
  ClassifierType cltype = ClassifierType::Unit;
  /// Class whose representative was used (ClassExact and ClassAncestor).
  std::optional<SemClassCode> via_class;

  bool operator==(const Resolution&) const = default;
};

/// Picks a classifier for a noun: its own most frequent classifier, else
/// the representative of its class, else of the nearest ancestor class that
/// has one.
Resolution resolve(std::string_view noun, const SemClassCode& noun_class,
                   ClassifierType cltype, const NCATable& table);

/// "direct", "class", "ancestor:<code>" or "none".
std::string provenance_string(const Resolution& r);

struct Query {
  std::string noun;
  SemClassCode noun_class;
  ClassifierType cltype;
};

/// Parses noun<TAB>class<TAB>cltype. Throws MalformedQueryLine.
Query parse_query_line(std::string_view line, std::size_t line_no);

struct ResolvedQuery {
  Query query;
  Resolution resolution;
};

/// One record per non-blank input line, in input order; malformed lines
/// yield their error instead of a resolution.
using BatchRecord = std::variant<ResolvedQuery, MalformedQueryLine>;

std::vector<BatchRecord> resolve_batch(std::istream& queries,
                                       const NCATable& table);

/// noun<TAB>classifier-or-"-"<TAB>provenance
std::string render_resolution(const ResolvedQuery& r);

}  // namespace nca

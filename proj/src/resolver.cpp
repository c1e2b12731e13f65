#include "nca/resolver.hpp"

#include "nca/hierarchy.hpp"
#include "text.hpp"

namespace nca {

Resolution resolve(std::string_view noun, const SemClassCode& noun_class,
                   ClassifierType cltype, const NCATable& table) {
  Resolution r;
  r.cltype = cltype;
  if (auto cl = representative_for_noun(table, noun, noun_class, cltype)) {
    r.classifier = cl;
    r.provenance = Provenance::Direct;
    return r;
  }
  if (auto cl = representative_for_class(table, noun_class, cltype)) {
    r.classifier = cl;
    r.provenance = Provenance::ClassExact;
    r.via_class = noun_class;
    return r;
  }
  for (const auto& up : ancestors(noun_class)) {
    if (auto cl = representative_for_class(table, up, cltype)) {
      r.classifier = cl;
      r.provenance = Provenance::ClassAncestor;
      r.via_class = up;
      return r;
    }
  }
  return r;
}

std::string provenance_string(const Resolution& r) {
  switch (r.provenance) {
    case Provenance::Direct:
      return "direct";
    case Provenance::ClassExact:
      return "class";
    case Provenance::ClassAncestor:
      return "ancestor:" + (r.via_class ? r.via_class->str() : std::string());
    case Provenance::None:
      break;
  }
  return "none";
}

Query parse_query_line(std::string_view line, std::size_t line_no) {
  auto fields = text::split(line, '\t');
  if (fields.size() != 3)
    throw MalformedQueryLine(line_no, "expected noun<TAB>class<TAB>cltype");
  if (!is_valid_surface(fields[0]))
    throw MalformedQueryLine(line_no, "invalid noun");
  auto cls = SemClassCode::parse(fields[1]);
  if (!cls) throw MalformedQueryLine(line_no, "invalid class code");
  auto type = parse_classifier_type(fields[2]);
  if (!type) throw MalformedQueryLine(line_no, "classifier type must be 1 or 2");
  return {std::string(fields[0]), *cls, *type};
}

std::vector<BatchRecord> resolve_batch(std::istream& queries,
                                       const NCATable& table) {
  std::vector<BatchRecord> out;
  text::LineReader reader(queries);
  std::string line;
  while (reader.next(line)) {
    if (text::trim(line).empty()) continue;
    try {
      auto q = parse_query_line(line, reader.line_no());
      auto r = resolve(q.noun, q.noun_class, q.cltype, table);
      out.emplace_back(ResolvedQuery{std::move(q), std::move(r)});
    } catch (const MalformedQueryLine& err) {
      out.emplace_back(err);
    }
  }
  return out;
}

std::string render_resolution(const ResolvedQuery& r) {
  return r.query.noun + '\t' + r.resolution.classifier.value_or("-") + '\t' +
         provenance_string(r.resolution);
}

}  // namespace nca

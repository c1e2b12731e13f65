#include "nca/hierarchy.hpp"

#include <fstream>
#include <stdexcept>

#include "nca/errors.hpp"
#include "text.hpp"

namespace nca {

std::vector<SemClassCode> ancestors(const SemClassCode& code) {
  std::vector<SemClassCode> out;
  for (auto p = code.parent(); p; p = p->parent()) out.push_back(*p);
  return out;
}

bool is_ancestor(const SemClassCode& a, const SemClassCode& b) {
  return a.is_strict_prefix_of(b);
}

LabelMap load_labels(std::istream& in,
                     const std::function<void(const std::string&)>& warn) {
  LabelMap labels;
  text::LineReader reader(in);
  std::string line;
  while (reader.next(line)) {
    auto n = reader.line_no();
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw MalformedLabelLine(n, "expected code<TAB>label");
    auto code = SemClassCode::parse(std::string_view(line).substr(0, tab));
    if (!code) throw MalformedLabelLine(n, "invalid class code");
    std::string label = line.substr(tab + 1);
    if (text::trim(label).empty()) throw MalformedLabelLine(n, "empty label");

    auto [it, inserted] = labels.insert_or_assign(*code, label);
    if (!inserted && warn)
      warn("label line " + std::to_string(n) + ": code " + code->str() +
           " relabelled as '" + label + "'");
  }
  return labels;
}

LabelMap load_labels_file(
    const std::string& path,
    const std::function<void(const std::string&)>& warn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open labels '" + path + "'");
  return load_labels(in, warn);
}

std::optional<std::string> label_of(const LabelMap& labels,
                                    const SemClassCode& code) {
  auto it = labels.find(code);
  if (it == labels.end()) return std::nullopt;
  return it->second;
}

}  // namespace nca

#include "nca/table.hpp"

#include <fstream>
#include <stdexcept>

#include "nca/errors.hpp"
#include "text.hpp"

namespace nca {

namespace {

constexpr const char* kUnclassified = "0";

std::string class_key(const std::optional<SemClassCode>& code) {
  return code ? code->str() : kUnclassified;
}

std::optional<std::string> argmax(const std::map<std::string, std::uint64_t>&
                                      totals) {
  // std::map iterates in bytewise order, so the first maximum wins ties.
  std::optional<std::string> best;
  std::uint64_t best_freq = 0;
  for (const auto& [classifier, freq] : totals) {
    if (!best || freq > best_freq) {
      best = classifier;
      best_freq = freq;
    }
  }
  return best;
}

}  // namespace

void NCATable::add(const std::string& noun,
                   const std::optional<SemClassCode>& noun_class,
                   const std::string& classifier, ClassifierType cltype,
                   std::uint64_t count) {
  if (count == 0) return;
  Key key{noun, class_key(noun_class), classifier, static_cast<int>(cltype)};
  auto [it, inserted] = counts_.try_emplace(key, 0);
  it->second += count;
  total_ += count;
  if (inserted) {
    by_noun_[noun].insert(key);
    by_class_[std::get<1>(key)].insert(key);
  }
}

void NCATable::merge(const NCATable& other) {
  for (const auto& [key, freq] : other.counts_) {
    const auto& [noun, cls, classifier, type] = key;
    add(noun, SemClassCode::parse(cls), classifier,
        static_cast<ClassifierType>(type), freq);
  }
}

NCATable NCATable::scaled(std::uint64_t factor) const {
  if (factor == 0) throw std::invalid_argument("scale factor must be positive");
  NCATable out;
  for (const auto& [key, freq] : counts_) {
    const auto& [noun, cls, classifier, type] = key;
    out.add(noun, SemClassCode::parse(cls), classifier,
            static_cast<ClassifierType>(type), freq * factor);
  }
  return out;
}

NCAEntry NCATable::to_entry(const Key& key, std::uint64_t freq) {
  const auto& [noun, cls, classifier, type] = key;
  return {noun, SemClassCode::parse(cls), classifier,
          static_cast<ClassifierType>(type), freq};
}

std::vector<NCAEntry> NCATable::entries() const {
  std::vector<NCAEntry> out;
  out.reserve(counts_.size());
  for (const auto& [key, freq] : counts_) out.push_back(to_entry(key, freq));
  return out;
}

std::vector<NCAEntry> NCATable::entries_for_noun(std::string_view noun) const {
  std::vector<NCAEntry> out;
  auto it = by_noun_.find(noun);
  if (it == by_noun_.end()) return out;
  for (const auto& key : it->second)
    out.push_back(to_entry(key, counts_.at(key)));
  return out;
}

std::vector<NCAEntry> NCATable::entries_for_class(
    const SemClassCode& noun_class) const {
  std::vector<NCAEntry> out;
  auto it = by_class_.find(noun_class.str());
  if (it == by_class_.end()) return out;
  for (const auto& key : it->second)
    out.push_back(to_entry(key, counts_.at(key)));
  return out;
}

std::vector<SemClassCode> NCATable::classes() const {
  std::vector<SemClassCode> out;
  for (const auto& [cls, keys] : by_class_) {
    if (auto code = SemClassCode::parse(cls)) out.push_back(*code);
  }
  return out;
}

NCATable aggregate(std::span<const AssociationEvent> events) {
  NCATable table;
  for (const auto& ev : events) {
    if (!ev.classifier.cltype) continue;
    table.add(ev.noun.surface, ev.noun.sem, ev.classifier.surface,
              *ev.classifier.cltype);
  }
  return table;
}

std::optional<std::string> representative_for_noun(
    const NCATable& table, std::string_view noun,
    const SemClassCode& noun_class, ClassifierType cltype) {
  std::map<std::string, std::uint64_t> totals;
  for (const auto& e : table.entries_for_noun(noun)) {
    if (e.noun_class == noun_class && e.cltype == cltype)
      totals[e.classifier] += e.freq;
  }
  return argmax(totals);
}

std::optional<std::string> representative_for_class(
    const NCATable& table, const SemClassCode& noun_class,
    ClassifierType cltype) {
  std::map<std::string, std::uint64_t> totals;
  for (const auto& e : table.entries_for_class(noun_class)) {
    if (e.cltype == cltype) totals[e.classifier] += e.freq;
  }
  return argmax(totals);
}

void save_table(const NCATable& table, std::ostream& out) {
  for (const auto& e : table.entries()) {
    out << e.noun << '\t' << class_key(e.noun_class) << '\t' << e.classifier
        << '\t' << to_string(e.cltype) << '\t' << e.freq << '\n';
  }
}

NCATable load_table(std::istream& in) {
  NCATable table;
  std::set<NCATable::Key> seen;
  text::LineReader reader(in);
  std::string line;
  while (reader.next(line)) {
    auto n = reader.line_no();
    if (text::trim(line).empty() || line.front() == '#') continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 5)
      throw MalformedTableLine(n, "expected 5 tab-separated fields");
    if (!is_valid_surface(fields[0]))
      throw MalformedTableLine(n, "invalid noun");
    std::optional<SemClassCode> cls;
    if (fields[1] != kUnclassified) {
      cls = SemClassCode::parse(fields[1]);
      if (!cls) throw MalformedTableLine(n, "invalid noun class");
    }
    if (!is_valid_surface(fields[2]))
      throw MalformedTableLine(n, "invalid classifier");
    auto type = parse_classifier_type(fields[3]);
    if (!type) throw MalformedTableLine(n, "classifier type must be 1 or 2");
    auto freq = text::parse_uint(fields[4]);
    if (!freq || *freq == 0)
      throw MalformedTableLine(n, "frequency must be a positive integer");

    NCATable::Key key{std::string(fields[0]), class_key(cls),
                      std::string(fields[2]), static_cast<int>(*type)};
    if (!seen.insert(key).second)
      throw DuplicateKey(n, std::string(fields[0]) + "_" + class_key(cls) +
                                "/" + std::string(fields[2]) + "_" +
                                to_string(*type));
    table.add(std::string(fields[0]), cls, std::string(fields[2]), *type,
              *freq);
  }
  return table;
}

NCATable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table '" + path + "'");
  return load_table(in);
}

}  // namespace nca

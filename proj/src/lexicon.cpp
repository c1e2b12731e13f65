#include "nca/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "nca/errors.hpp"
#include "text.hpp"

namespace nca {

namespace {

std::string sem_key(const std::optional<SemClassCode>& sem) {
  return sem ? sem->str() : std::string();
}

bool lookup_order(const LexEntry& a, const LexEntry& b) {
  if (a.freq != b.freq) return a.freq > b.freq;
  auto la = a.pos.label();
  auto lb = b.pos.label();
  if (la != lb) return la < lb;
  return sem_key(a.sem) < sem_key(b.sem);
}

}  // namespace

void Lexicon::add(LexEntry entry, std::size_t line_no) {
  bool is_cl = entry.pos.kind() == PosTag::Kind::CL;
  if (is_cl && !entry.cltype)
    throw MalformedLexLine(line_no, "CL entry '" + entry.surface +
                                        "' needs a classifier type");
  if (!is_cl && entry.cltype)
    throw MalformedLexLine(line_no, "classifier type on non-CL entry '" +
                                        entry.surface + "'");
  if (!is_valid_surface(entry.surface))
    throw MalformedLexLine(line_no, "invalid surface '" + entry.surface + "'");

  auto& bucket = by_surface_[entry.surface];
  for (const auto& existing : bucket) {
    if (existing.pos == entry.pos && existing.sem == entry.sem)
      throw DuplicateEntry(line_no, entry.surface);
  }
  max_bytes_ = std::max(max_bytes_, entry.surface.size());
  bucket.push_back(std::move(entry));
  ++count_;
}

void Lexicon::finish() {
  for (auto& [surface, bucket] : by_surface_)
    std::sort(bucket.begin(), bucket.end(), lookup_order);
}

Lexicon Lexicon::from_entries(std::vector<LexEntry> entries) {
  Lexicon lex;
  std::size_t index = 0;
  for (auto& entry : entries) lex.add(std::move(entry), ++index);
  lex.finish();
  return lex;
}

std::span<const LexEntry> Lexicon::lookup(std::string_view surface) const {
  auto it = by_surface_.find(surface);
  if (it == by_surface_.end()) return {};
  return it->second;
}

bool Lexicon::contains(std::string_view surface) const {
  return by_surface_.find(surface) != by_surface_.end();
}

bool Lexicon::is_known_prefix(std::string_view prefix) const {
  auto it = by_surface_.lower_bound(prefix);
  return it != by_surface_.end() &&
         std::string_view(it->first).substr(0, prefix.size()) == prefix;
}

Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  text::LineReader reader(in);
  std::string line;
  while (reader.next(line)) {
    auto n = reader.line_no();
    if (text::trim(line).empty() || line.front() == '#') continue;

    auto fields = text::split(line, '\t');
    if (fields.size() != 5)
      throw MalformedLexLine(n, "expected 5 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    LexEntry entry;
    entry.surface = std::string(fields[0]);
    if (entry.surface.empty()) throw MalformedLexLine(n, "empty surface");

    auto pos = PosTag::parse(fields[1]);
    if (!pos) throw MalformedLexLine(n, "invalid POS '" +
                                            std::string(fields[1]) + "'");
    entry.pos = *pos;

    if (!fields[2].empty()) {
      entry.sem = SemClassCode::parse(fields[2]);
      if (!entry.sem)
        throw MalformedLexLine(n, "semantic class must be digits 1-9");
    }
    auto freq = text::parse_uint(fields[3]);
    if (!freq) throw MalformedLexLine(n, "frequency must be a non-negative integer");
    entry.freq = *freq;

    if (!fields[4].empty()) {
      entry.cltype = parse_classifier_type(fields[4]);
      if (!entry.cltype)
        throw MalformedLexLine(n, "classifier type must be 1 or 2");
    }
    lex.add(std::move(entry), n);
  }
  lex.finish();
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon '" + path + "'");
  return load_lexicon(in);
}

}  // namespace nca

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nca/concordancer.hpp"
#include "nca/errors.hpp"
#include "nca/hierarchy.hpp"
#include "nca/lexicon.hpp"
#include "nca/matcher.hpp"
#include "nca/resolver.hpp"
#include "nca/segmenter.hpp"
#include "nca/table.hpp"
#include "nca/tagger.hpp"

namespace nca::cli {

namespace {

// Raised when --strict turns a data error into an abort.
struct StrictAbort {};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool strict = false;

  void warn(const std::string& msg) const { err << "warning: " << msg << '\n'; }

  /// Reports a malformed record; under --strict flushes what has been
  /// written so far and aborts.
  void data_error(const DataError& e) const {
    if (strict) {
      out.flush();
      err << "error: " << e.what() << '\n';
      throw StrictAbort{};
    }
    warn(e.what());
  }
};

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

WindowConfig parse_window(const std::string& spec) {
  auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--window", "expected BEFORE,AFTER");
  WindowConfig w;
  try {
    std::size_t used = 0;
    w.before = std::stoul(spec.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(spec);
    auto rest = spec.substr(comma + 1);
    w.after = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(spec);
    w.validate();
  } catch (const std::exception&) {
    throw CLI::ValidationError("--window", "invalid window '" + spec + "'");
  }
  return w;
}

std::set<std::string, std::less<>> parse_linkers(const std::string& list) {
  std::set<std::string, std::less<>> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  if (out.empty())
    throw CLI::ValidationError("--linkers", "linker set must not be empty");
  return out;
}

std::string lexicon_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("NCA_LEXICON")) return env;
  return {};
}

Lexicon require_lexicon(const std::string& flag) {
  auto path = lexicon_path(flag);
  if (path.empty())
    throw CLI::RequiredError("--lexicon (or NCA_LEXICON)");
  return load_lexicon_file(path);
}

// --- subcommands -----------------------------------------------------------

void cmd_segment(const Context& cx, const Lexicon& lex, bool mark_unknown) {
  std::string line;
  while (next_line(cx.in, line)) {
    auto seg = segment(line, lex);
    std::string joined;
    for (const auto& piece : seg.pieces) {
      if (!joined.empty()) joined += ' ';
      joined += piece.surface;
      if (mark_unknown && !piece.known) joined += '?';
    }
    cx.out << joined << '\n';
  }
}

void cmd_tag(const Context& cx, const Lexicon& lex, const TaggerConfig& cfg) {
  std::string line;
  std::size_t line_no = 0;
  while (next_line(cx.in, line)) {
    ++line_no;
    Segmentation seg;
    std::istringstream words(line);
    std::string w;
    bool bad = false;
    while (words >> w) {
      if (!is_valid_surface(w)) {
        cx.data_error(MalformedToken(line_no, line.find(w) + 1, w,
                                     "surface contains '/'"));
        bad = true;
        break;
      }
      seg.pieces.push_back({w, lex.contains(w)});
    }
    if (bad) continue;
    cx.out << render_tagged_line(tag(seg, lex, cfg)) << '\n';
  }
}

void cmd_concord(const Context& cx, const WindowConfig& window) {
  std::string line;
  std::size_t line_no = 0;
  while (next_line(cx.in, line)) {
    ++line_no;
    std::vector<TaggedToken> tokens;
    try {
      tokens = parse_tagged_line(line, line_no);
    } catch (const DataError& e) {
      cx.data_error(e);
      continue;
    }
    for (const auto& frag : extract_fragments(tokens, window, line_no))
      cx.out << frag.origin.line << ':' << frag.origin.offset << '\t'
             << render_fragment(frag) << '\n';
  }
}

void cmd_extract(const Context& cx, const MatchConfig& cfg,
                 const std::optional<Lexicon>& lex) {
  cfg.validate();
  std::string line;
  std::size_t line_no = 0;
  while (next_line(cx.in, line)) {
    ++line_no;
    std::vector<TaggedToken> tokens;
    try {
      tokens = parse_tagged_line(line, line_no);
    } catch (const DataError& e) {
      cx.data_error(e);
      continue;
    }
    if (lex) fill_from_lexicon(tokens, *lex);
    for (const auto& ev : match_line(tokens, line_no, cfg))
      cx.out << render_event(ev) << '\n';
  }
}

void cmd_build_table(const Context& cx) {
  NCATable table;
  std::string line;
  std::size_t line_no = 0;
  while (next_line(cx.in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto ev = parse_event_line(line, line_no);
      table.add(ev.noun.surface, ev.noun.sem, ev.classifier.surface,
                *ev.classifier.cltype);
    } catch (const DataError& e) {
      cx.data_error(e);
    }
  }
  save_table(table, cx.out);
}

void cmd_stats(const Context& cx, const NCATable& table,
               const LabelMap& labels) {
  // class, label, unit rep, collective rep, entries, total freq
  for (const auto& cls : table.classes()) {
    auto entries = table.entries_for_class(cls);
    std::uint64_t total = 0;
    for (const auto& e : entries) total += e.freq;
    auto unit = representative_for_class(table, cls, ClassifierType::Unit);
    auto coll =
        representative_for_class(table, cls, ClassifierType::Collective);
    cx.out << cls.str() << '\t' << label_of(labels, cls).value_or("-") << '\t'
           << unit.value_or("-") << '\t' << coll.value_or("-") << '\t'
           << entries.size() << '\t' << total << '\n';
  }
}

void cmd_resolve(const Context& cx, const NCATable& table,
                 const std::optional<LabelMap>& labels) {
  for (const auto& record : resolve_batch(cx.in, table)) {
    if (const auto* err = std::get_if<MalformedQueryLine>(&record)) {
      cx.data_error(*err);
      continue;
    }
    const auto& r = std::get<ResolvedQuery>(record);
    cx.out << render_resolution(r);
    if (labels) {
      std::optional<SemClassCode> used = r.resolution.via_class;
      if (r.resolution.provenance == Provenance::Direct)
        used = r.query.noun_class;
      std::optional<std::string> label;
      if (used) label = label_of(*labels, *used);
      cx.out << '\t' << label.value_or("-");
    }
    cx.out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Noun classifier association extraction and resolution", "nca"};
  app.require_subcommand(1);
  app.fallthrough();

  Context cx{in, out, err};
  app.add_flag("--strict", cx.strict,
               "Abort with status 1 on the first malformed record");

  std::string lexicon_flag;
  bool mark_unknown = false;
  auto* seg = app.add_subcommand("segment", "Segment raw text into words");
  seg->add_option("--lexicon", lexicon_flag, "Lexicon TSV");
  seg->add_flag("--mark-unknown", mark_unknown, "Suffix unknown pieces with ?");

  std::string unknown_pos = "UNK";
  auto* tagc = app.add_subcommand("tag", "Tag segmented text");
  tagc->add_option("--lexicon", lexicon_flag, "Lexicon TSV");
  tagc->add_option("--unknown-pos", unknown_pos, "Tag for unknown words");

  std::string window_spec = "10,2";
  auto* conc = app.add_subcommand("concord", "Fragments around classifiers");
  conc->add_option("--window", window_spec, "BEFORE,AFTER");

  std::string linkers = "tii,sung,nai";
  std::string patterns = "enum,ord,ref,indef,attr,mod,pron";
  std::string ordinal_marker = "tii";
  std::size_t rel_span = 5;
  bool include_verbs = false;
  auto* ext = app.add_subcommand("extract", "Match classifier patterns");
  ext->add_option("--lexicon", lexicon_flag,
                  "Lexicon TSV used to fill missing classes and types");
  ext->add_option("--linkers", linkers, "Comma-separated linker words");
  ext->add_option("--ordinal-marker", ordinal_marker,
                  "Word between classifier and number in ordinals");
  ext->add_option("--rel-span", rel_span,
                  "Tokens searched for a relative pronoun");
  ext->add_flag("--include-verbs", include_verbs,
                "Allow verbs in the noun slot of enumerations");
  ext->add_option("--patterns", patterns, "Comma-separated pattern names");
  ext->add_option("--window", window_spec, "BEFORE,AFTER");

  auto* build = app.add_subcommand("build-table", "Aggregate events");

  std::string table_path;
  std::string labels_path;
  auto* stats = app.add_subcommand("stats", "Per-class summary of a table");
  stats->add_option("--table", table_path, "Table TSV (default: stdin)");
  stats->add_option("--labels", labels_path, "Class labels TSV");

  auto* res = app.add_subcommand("resolve", "Resolve classifiers for nouns");
  res->add_option("--table", table_path, "Table TSV")->required();
  res->add_option("--labels", labels_path, "Class labels TSV");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1
                                                : args.end(),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::Success&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "nca: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  auto warn = [&](const std::string& msg) { cx.warn(msg); };
  try {
    if (seg->parsed()) {
      cmd_segment(cx, require_lexicon(lexicon_flag), mark_unknown);
    } else if (tagc->parsed()) {
      TaggerConfig cfg;
      auto pos = PosTag::parse(unknown_pos);
      if (!pos || pos->kind() == PosTag::Kind::CL)
        throw CLI::ValidationError("--unknown-pos", "invalid tag");
      cfg.unknown_pos = *pos;
      cmd_tag(cx, require_lexicon(lexicon_flag), cfg);
    } else if (conc->parsed()) {
      cmd_concord(cx, parse_window(window_spec));
    } else if (ext->parsed()) {
      MatchConfig cfg;
      cfg.linkers = parse_linkers(linkers);
      cfg.ordinal_marker = ordinal_marker;
      cfg.gaps.rel_span = rel_span;
      cfg.include_verbs = include_verbs;
      try {
        cfg.patterns = PatternSet::parse(patterns);
      } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--patterns", e.what());
      }
      cfg.window = parse_window(window_spec);
      std::optional<Lexicon> lex;
      if (auto path = lexicon_path(lexicon_flag); !path.empty())
        lex = load_lexicon_file(path);
      cmd_extract(cx, cfg, lex);
    } else if (build->parsed()) {
      cmd_build_table(cx);
    } else if (stats->parsed()) {
      LabelMap labels;
      if (!labels_path.empty()) labels = load_labels_file(labels_path, warn);
      auto table = table_path.empty() ? load_table(in)
                                      : load_table_file(table_path);
      cmd_stats(cx, table, labels);
    } else if (res->parsed()) {
      std::optional<LabelMap> labels;
      if (!labels_path.empty()) labels = load_labels_file(labels_path, warn);
      cmd_resolve(cx, load_table_file(table_path), labels);
    }
  } catch (const StrictAbort&) {
    return kDataError;
  } catch (const CLI::ParseError& e) {
    err << "nca: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  out.flush();
  return kSuccess;
}

}  // namespace nca::cli

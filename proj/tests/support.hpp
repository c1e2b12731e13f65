#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nca/corpus.hpp"
#include "nca/lexicon.hpp"

namespace nca::test {

inline std::string fixture(const std::string& name) {
  return std::string(NCA_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<TaggedToken> toks(const std::string& line) {
  return parse_tagged_line(line);
}

inline Lexicon lexicon_from(const std::string& tsv) {
  std::istringstream in(tsv);
  return load_lexicon(in);
}

inline SemClassCode code(const std::string& s) {
  return *SemClassCode::parse(s);
}

}  // namespace nca::test

#include "nca/segmenter.hpp"

#include <array>
#include <cstdint>
#include <limits>

#include "text.hpp"

namespace nca {

std::vector<std::size_t> code_point_boundaries(std::string_view text) {
  std::vector<std::size_t> out;
  out.reserve(text.size() + 1);
  std::size_t i = 0;
  while (i < text.size()) {
    out.push_back(i);
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0 && lead < 0xF8) len = 4;
    else if (lead >= 0xE0) len = lead < 0xF0 ? 3 : 1;
    else if (lead >= 0xC0) len = 2;
    if (i + len > text.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
      auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        len = 1;
        break;
      }
    }
    i += len;
  }
  out.push_back(text.size());
  return out;
}

namespace {

struct Cost {
  std::size_t unknown_chars = 0;
  std::size_t pieces = 0;

  static Cost infinite() {
    constexpr auto big = std::numeric_limits<std::size_t>::max() / 4;
    return {big, big};
  }
  bool is_infinite() const { return *this == infinite(); }
  Cost plus(std::size_t chars, std::size_t n) const {
    return {unknown_chars + chars, pieces + n};
  }
  auto operator<=>(const Cost&) const = default;
};

// State after an unknown run: the next piece has to be a word, otherwise
// two runs would be adjacent and should have been one.
enum State : int { kFree = 0, kWordNext = 1 };

}  // namespace

std::vector<Piece> segment_chunk(std::string_view chunk,
                                 const Lexicon& lexicon) {
  if (chunk.empty()) return {};
  const auto bounds = code_point_boundaries(chunk);
  const std::size_t m = bounds.size() - 1;

  // word_ends[i]: code point indices j such that chunk[i, j) is a word.
  std::vector<std::vector<std::size_t>> word_ends(m);
  std::vector<bool> word_starts(m + 1, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      auto len = bounds[j] - bounds[i];
      if (len > lexicon.max_surface_bytes()) break;
      auto sub = chunk.substr(bounds[i], len);
      if (!lexicon.is_known_prefix(sub)) break;
      if (lexicon.contains(sub)) word_ends[i].push_back(j);
    }
    word_starts[i] = !word_ends[i].empty();
  }

  // Candidate run ends: the next word start or the end of the chunk.
  std::vector<std::size_t> run_stops;
  for (std::size_t j = 1; j <= m; ++j) {
    if (j == m || word_starts[j]) run_stops.push_back(j);
  }

  std::vector<std::array<Cost, 2>> best(m + 1);
  best[m] = {Cost{}, Cost{}};
  for (std::size_t step = m; step-- > 0;) {
    const std::size_t i = step;
    Cost word_best = Cost::infinite();
    for (auto j : word_ends[i]) {
      auto c = best[j][kFree].plus(0, 1);
      if (c < word_best) word_best = c;
    }
    Cost run_best = Cost::infinite();
    for (auto j : run_stops) {
      if (j <= i) continue;
      if (best[j][kWordNext].is_infinite()) continue;
      auto c = best[j][kWordNext].plus(j - i, 1);
      if (c < run_best) run_best = c;
    }
    best[i][kWordNext] = word_best;
    best[i][kFree] = std::min(word_best, run_best);
  }

  std::vector<Piece> pieces;
  std::size_t i = 0;
  State state = kFree;
  while (i < m) {
    const Cost target = best[i][state];
    std::size_t choose = 0;
    bool known = false;
    for (auto j : word_ends[i]) {
      if (best[j][kFree].plus(0, 1) == target && j > choose) {
        choose = j;
        known = true;
      }
    }
    if (state == kFree) {
      for (auto j : run_stops) {
        if (j <= i || j <= choose) continue;
        if (best[j][kWordNext].is_infinite()) continue;
        if (best[j][kWordNext].plus(j - i, 1) == target) {
          choose = j;
          known = false;
        }
      }
    }
    pieces.push_back(
        {std::string(chunk.substr(bounds[i], bounds[choose] - bounds[i])),
         known});
    state = known ? kFree : kWordNext;
    i = choose;
  }
  return pieces;
}

Segmentation segment(std::string_view input, const Lexicon& lexicon) {
  Segmentation out;
  std::size_t i = 0;
  while (i < input.size()) {
    while (i < input.size() && text::is_space(input[i])) ++i;
    std::size_t start = i;
    while (i < input.size() && !text::is_space(input[i])) ++i;
    if (i > start) {
      auto chunk = segment_chunk(input.substr(start, i - start), lexicon);
      for (auto& piece : chunk) out.pieces.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace nca

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nca/corpus.hpp"

namespace nca {

/// Token window around a classifier, not counting the classifier itself.
struct WindowConfig {
  std::size_t before = 10;
  std::size_t after = 2;

  static constexpr std::size_t kMaxFragment = 64;

  /// Throws std::invalid_argument when before + after + 1 exceeds
  /// kMaxFragment.
  void validate() const;
};

/// One fragment per CL token in `line`, in anchor order. Windows are clamped
/// to the line; overlapping windows are kept.
std::vector<Fragment> extract_fragments(std::span<const TaggedToken> line,
                                        const WindowConfig& config = {},
                                        std::size_t line_no = 0);

/// Renders a fragment as a tagged line with the anchor wrapped in [...].
std::string render_fragment(const Fragment& fragment);

}  // namespace nca

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace stralg {

enum class Method { direct, automaton, endo };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::automaton: return "automaton";
    case Method::endo: return "endo";
  }
  return "?";
}

/// A common factor/image occurrence pair. Spans are [begin, end) offsets
/// relative to the host's basepoint; an image span in the inverse host uses
/// the inverse host's coordinates, so [a, b) in the host reads [-b, -a).
struct Witness {
  std::string text;
  long long factor_begin = 0;
  long long factor_end = 0;
  long long image_begin = 0;
  long long image_end = 0;
  bool image_in_inverse = false;
};

struct BrickReport {
  bool brick = false;
  Method method = Method::direct;
  std::optional<Witness> witness;
  std::string periodicity;  // classification of the underlying word
  std::string scope;        // "exact" or "window N"
  std::string reason;       // short explanation of a negative verdict
  std::optional<std::size_t> end_dim;
};

}  // namespace stralg

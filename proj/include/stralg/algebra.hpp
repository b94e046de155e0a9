#pragma once

// String-algebra presentations: a finite quiver with monomial relations and
// optional sign maps ς, ε.
//
// Relations are always stored in traversal order: the first arrow walked is
// written first. A relation written in composition order as `a1 b2`
// (first b2, then a1) is therefore declared as `relation b2 a1`.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stralg::algebra {

using VertexIdx = std::uint32_t;
using ArrowIdx = std::uint32_t;
using Path = std::vector<ArrowIdx>;

struct Arrow {
  std::string id;
  VertexIdx source = 0;
  VertexIdx target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// (ς, ε) of one arrow; each entry is +1 or -1.
struct SignPair {
  int sigma = 1;
  int eps = 1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

using SignMaps = std::vector<SignPair>;

struct Presentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Path> relations;
  std::optional<SignMaps> signs;

  std::optional<VertexIdx> find_vertex(std::string_view id) const;
  std::optional<ArrowIdx> find_arrow(std::string_view id) const;
  std::string path_string(const Path& p) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Parses the line-oriented presentation format:
///   vertex <id>
///   arrow <id> <src> <dst>
///   relation <arrow> <arrow> ...      (traversal order)
///   sign <arrow> <+1|-1> <+1|-1>      (ς then ε; all arrows or none)
/// `#` starts a comment. Throws InputError with the offending line number.
Presentation parse_presentation(std::string_view text);
std::string print_presentation(const Presentation& p);

/// Deduplicates, drops relations containing another one as a contiguous
/// subpath, and sorts.
void normalize_relations(Presentation& p);

struct Violation {
  std::string code;  // I, II, III, IIa, IIb or REL
  std::string locus;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool is_string_algebra = false;
  bool is_gentle = false;
  std::optional<std::size_t> admissibility_bound;
  std::vector<Violation> violations;

  bool has(std::string_view code) const;
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate_string_algebra(const Presentation& p);

/// Returns the declared signs after checking conditions (a)-(c), or solves
/// for them. Throws InputError when the signs are inconsistent.
SignMaps solve_sign_maps(const Presentation& p);

/// First violated sign condition, as "(a) ..." etc., or nullopt.
std::optional<std::string> check_sign_conditions(const Presentation& p, const SignMaps& s);

/// A validated presentation with fixed signs and lookup tables.
class StringAlgebra {
 public:
  /// Validates, normalizes relations and fixes the signs. Throws InputError.
  explicit StringAlgebra(Presentation p);

  const Presentation& presentation() const { return p_; }
  const SignMaps& signs() const { return signs_; }
  const ValidationReport& report() const { return report_; }

  std::size_t num_vertices() const { return p_.vertices.size(); }
  std::size_t num_arrows() const { return p_.arrows.size(); }
  const Arrow& arrow(ArrowIdx a) const { return p_.arrows[a]; }
  const std::vector<ArrowIdx>& out_arrows(VertexIdx v) const { return out_[v]; }
  const std::vector<ArrowIdx>& in_arrows(VertexIdx v) const { return in_[v]; }

  bool is_relation(const Path& path) const { return relation_set_.count(path) != 0; }
  std::size_t max_relation_length() const { return max_rel_len_; }

 private:
  Presentation p_;
  SignMaps signs_;
  ValidationReport report_;
  std::vector<std::vector<ArrowIdx>> out_;
  std::vector<std::vector<ArrowIdx>> in_;
  std::set<Path> relation_set_;
  std::size_t max_rel_len_ = 0;
};

}  // namespace stralg::algebra

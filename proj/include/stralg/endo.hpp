#pragma once

// String and band modules as explicit representations over a prime field,
// and the dimension of their endomorphism space.

#include <cstdint>
#include <vector>

#include "stralg/strings.hpp"

namespace stralg::endo {

using strings::Str;
using strings::StringAlgebra;

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 65521;
inline constexpr std::size_t kMaxTotalDim = 400;

/// Dense matrix over F_p, row-major.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool is_zero() const;
};

Matrix multiply(const Matrix& x, const Matrix& y, std::uint32_t p);

struct Representation {
  std::uint32_t prime = kDefaultPrime;
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Matrix> maps;       // per arrow: dims[target] x dims[source]

  std::size_t total_dim() const;
};

/// One basis vector per string position.
Representation string_module(const StringAlgebra& A, const Str& x, std::uint32_t p = kDefaultPrime);
/// ℓ-dimensional block per position; the last (direct) syllable acts by the
/// Jordan block J_ℓ(λ), all others by identity blocks. Throws on λ = 0 mod p.
Representation band_module(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                           std::uint32_t p = kDefaultPrime);

/// Every relation composes to the zero map.
bool relations_vanish(const StringAlgebra& A, const Representation& r);

/// Rank of a matrix over F_p.
std::size_t rank_mod_p(Matrix m, std::uint32_t p);

/// dim End(r), solving φ_t M_α = M_α φ_s over F_p. Throws CapExceeded past
/// kMaxTotalDim.
std::size_t end_dim(const StringAlgebra& A, const Representation& r);

}  // namespace stralg::endo

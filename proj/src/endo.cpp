#include "stralg/endo.hpp"

#include <algorithm>
#include <numeric>

#include "stralg/error.hpp"

namespace stralg::endo {

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) { return pow_mod(x, p - 2, p); }

// Unknowns above this count make the dense system impractical.
constexpr std::size_t kMaxUnknowns = 40000;

}  // namespace

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

Matrix multiply(const Matrix& x, const Matrix& y, std::uint32_t p) {
  if (x.cols != y.rows) throw Error("matrix shapes do not compose");
  Matrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::uint64_t v = x.at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) = static_cast<std::uint32_t>((z.at(i, j) + v * y.at(k, j)) % p);
    }
  return z;
}

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

Representation string_module(const StringAlgebra& A, const Str& x, std::uint32_t p) {
  Representation r;
  r.prime = p;
  r.dims.assign(A.num_vertices(), 0);
  const auto& syl = x.syllables();
  // Position i sits at vertex pos[i] with basis index idx[i] inside it.
  std::vector<std::size_t> pos{x.source()}, idx;
  for (auto s : syl) pos.push_back(strings::syl_target(A, s));
  for (auto v : pos) idx.push_back(r.dims[v]++);
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a)
    r.maps.emplace_back(r.dims[A.arrow(a).target], r.dims[A.arrow(a).source]);
  for (std::size_t i = 0; i < syl.size(); ++i) {
    Matrix& m = r.maps[syl[i].base];
    if (syl[i].inverse)
      m.at(idx[i], idx[i + 1]) = 1;
    else
      m.at(idx[i + 1], idx[i]) = 1;
  }
  return r;
}

Representation band_module(const StringAlgebra& A, const Str& band, std::size_t l, std::uint64_t lambda,
                           std::uint32_t p) {
  if (l == 0) throw InputError("band module needs l >= 1");
  if (lambda % p == 0) throw InputError("band module needs a nonzero scalar");
  const auto& syl = band.syllables();
  if (syl.empty() || syl.back().inverse) throw InputError("band must end with a direct syllable");
  Representation r;
  r.prime = p;
  r.dims.assign(A.num_vertices(), 0);
  const std::size_t n = syl.size();
  std::vector<std::size_t> block;  // first basis index of each position's block
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = strings::syl_source(A, syl[i]);
    block.push_back(r.dims[v]);
    r.dims[v] += l;
  }
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a)
    r.maps.emplace_back(r.dims[A.arrow(a).target], r.dims[A.arrow(a).source]);
  const auto lam = static_cast<std::uint32_t>(lambda % p);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t from = i, to = (i + 1) % n;
    Matrix& m = r.maps[syl[i].base];
    const bool jordan = i + 1 == n;
    for (std::size_t k = 0; k < l; ++k) {
      if (syl[i].inverse) {
        m.at(block[from] + k, block[to] + k) = 1;
      } else if (jordan) {
        m.at(block[to] + k, block[from] + k) = lam;
        if (k + 1 < l) m.at(block[to] + k, block[from] + k + 1) = 1;
      } else {
        m.at(block[to] + k, block[from] + k) = 1;
      }
    }
  }
  return r;
}

bool relations_vanish(const StringAlgebra& A, const Representation& r) {
  for (const auto& rel : A.presentation().relations) {
    Matrix acc = r.maps[rel[0]];
    for (std::size_t i = 1; i < rel.size(); ++i) acc = multiply(r.maps[rel[i]], acc, r.prime);
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::size_t rank_mod_p(Matrix m, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const std::uint64_t inv = inv_mod(m.at(rank, col), p);
    for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) = static_cast<std::uint32_t>(m.at(rank, j) * inv % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m.at(i, col) == 0) continue;
      const std::uint64_t f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + (p - f) * m.at(rank, j)) % p);
    }
    ++rank;
  }
  return rank;
}

std::size_t end_dim(const StringAlgebra& A, const Representation& r) {
  if (r.total_dim() > kMaxTotalDim)
    throw CapExceeded("module dimension " + std::to_string(r.total_dim()) + " exceeds cap " + std::to_string(kMaxTotalDim));
  const std::uint32_t p = r.prime;
  std::vector<std::size_t> offset(r.dims.size());
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < r.dims.size(); ++v) {
    offset[v] = unknowns;
    unknowns += r.dims[v] * r.dims[v];
  }
  if (unknowns > kMaxUnknowns) throw CapExceeded("endomorphism system too large");
  std::size_t eqs = 0;
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a) eqs += r.maps[a].rows * r.maps[a].cols;
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::uint32_t a = 0; a < A.num_arrows(); ++a) {
    const Matrix& M = r.maps[a];
    const std::size_t s = A.arrow(a).source, t = A.arrow(a).target;
    const std::size_t ds = r.dims[s], dt = r.dims[t];
    // Entry (i, j) of φ_t M - M φ_s.
    for (std::size_t i = 0; i < dt; ++i)
      for (std::size_t j = 0; j < ds; ++j, ++row) {
        for (std::size_t k = 0; k < dt; ++k)
          if (M.at(k, j)) {
            auto& c = sys.at(row, offset[t] + i * dt + k);
            c = (c + M.at(k, j)) % p;
          }
        for (std::size_t k = 0; k < ds; ++k)
          if (M.at(i, k)) {
            auto& c = sys.at(row, offset[s] + k * ds + j);
            c = (c + p - M.at(i, k)) % p;
          }
      }
  }
  return unknowns - rank_mod_p(std::move(sys), p);
}

}  // namespace stralg::endo

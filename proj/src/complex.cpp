#include "cyreg/complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>

namespace cyreg {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    fail(ErrorCode::invalid_argument, "simplex has a repeated vertex: " + to_string());
  }
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // Dropping vertices from last to first yields lexicographic order.
  for (std::size_t skip = vertices_.size(); skip-- > 0;) {
    Simplex f;
    f.vertices_.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) f.vertices_.push_back(vertices_[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

template <class Term>
BasicChain<Term>::BasicChain(int dim, std::vector<Term> terms) : dim_(dim) {
  // Z2: a term listed twice cancels.
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(std::move(terms[i]));
    i = j;
  }
}

template <class Term>
bool BasicChain<Term>::contains(const Term& t) const {
  return std::binary_search(terms_.begin(), terms_.end(), t);
}

template <class Term>
BasicChain<Term>& BasicChain<Term>::operator+=(const BasicChain& other) {
  if (other.dim_ != dim_) {
    fail(ErrorCode::dimension_mismatch, "cannot add a " + std::to_string(dim_) + "-chain and a " +
                                            std::to_string(other.dim_) + "-chain");
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

template class BasicChain<Index>;
template class BasicChain<Simplex>;

SimplexChain boundary(const Simplex& s) {
  if (s.dim() < 1) return SimplexChain(s.dim() - 1);
  return SimplexChain(s.dim() - 1, s.faces());
}

SimplexChain boundary(const SimplexChain& c) {
  std::vector<Simplex> all;
  for (const auto& s : c.terms()) {
    for (auto& f : s.faces()) all.push_back(std::move(f));
  }
  return SimplexChain(c.dim() - 1, std::move(all));
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = bits_[r * words_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  w = value ? (w | mask) : (w & ~mask);
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

std::size_t BitMatrix::rank() const {
  std::vector<std::uint64_t> m = bits_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * words_ + w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + pivot * words_, m.begin() + (pivot + 1) * words_,
                       m.begin() + rank * words_);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && (m[r * words_ + w] & mask)) {
        for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
      }
    }
    ++rank;
  }
  return rank;
}

bool in_span(std::span<const std::vector<Index>> vectors, const std::vector<Index>& target,
             std::size_t length) {
  BitMatrix base(vectors.size(), length);
  BitMatrix extended(vectors.size() + 1, length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (Index c : vectors[i]) {
      base.set(i, c);
      extended.set(i, c);
    }
  }
  for (Index c : target) extended.set(vectors.size(), c);
  return base.rank() == extended.rank();
}

namespace {

// Rank of the boundary map from the k-simplexes to the (k-1)-simplexes.
std::size_t boundary_rank(const std::map<Simplex, std::size_t>& lower,
                          const std::vector<const Simplex*>& upper) {
  if (upper.empty() || lower.empty()) return 0;
  BitMatrix m(upper.size(), lower.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    for (const auto& f : upper[i]->faces()) {
      auto it = lower.find(f);
      if (it == lower.end()) {
        fail(ErrorCode::validation, "complex is not closed: missing face " + f.to_string() +
                                        " of " + upper[i]->to_string());
      }
      m.set(i, it->second);
    }
  }
  return m.rank();
}

}  // namespace

std::size_t betti_bruteforce(std::span<const Simplex> complex, int k) {
  if (k < 0) return 0;
  std::map<Simplex, std::size_t> lower;  // (k-1)-simplexes
  std::map<Simplex, std::size_t> middle;  // k-simplexes
  std::vector<const Simplex*> mid_list, upper;
  for (const auto& s : complex) {
    if (s.dim() == k - 1) lower.emplace(s, lower.size());
    if (s.dim() == k && middle.emplace(s, middle.size()).second) mid_list.push_back(&s);
    if (s.dim() == k + 1) upper.push_back(&s);
  }
  const std::size_t rank_k = k == 0 ? 0 : boundary_rank(lower, mid_list);
  const std::size_t rank_k1 = boundary_rank(middle, upper);
  return middle.size() - rank_k - rank_k1;
}

}  // namespace cyreg

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyreg/error.hpp"

namespace cyreg {

using Vertex = std::uint32_t;
using Index = std::uint32_t;

/// An abstract simplex: a strictly increasing list of vertex identifiers.
///
/// The constructor canonicalizes (sorts) its input and rejects duplicate
/// vertices, so two simplexes over the same vertex set always compare equal.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  /// Codimension-1 faces, in lexicographic order.
  std::vector<Simplex> faces() const;

  /// True when every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// A chain with Z2 coefficients: a set of terms, all of the same dimension.
/// Addition is symmetric difference; the empty chain is zero.
template <class Term>
class BasicChain {
 public:
  BasicChain() = default;
  explicit BasicChain(int dim) : dim_(dim) {}
  BasicChain(int dim, std::vector<Term> terms);

  int dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool contains(const Term& t) const;

  BasicChain& operator+=(const BasicChain& other);
  friend BasicChain operator+(BasicChain a, const BasicChain& b) {
    a += b;
    return a;
  }
  friend bool operator==(const BasicChain&, const BasicChain&) = default;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;  // sorted, unique
};

extern template class BasicChain<Index>;
extern template class BasicChain<Simplex>;

/// Chain of simplex indices relative to some complex.
using Chain = BasicChain<Index>;
/// Chain of explicit simplexes; handy when no complex is around.
using SimplexChain = BasicChain<Simplex>;

/// Sum of two chains; throws on dimension mismatch.
template <class Term>
BasicChain<Term> chain_add(const BasicChain<Term>& a, const BasicChain<Term>& b) {
  return a + b;
}

/// Sum of the codimension-1 faces. Vertices have zero boundary.
SimplexChain boundary(const Simplex& s);
SimplexChain boundary(const SimplexChain& c);

/// Dense matrix over Z2 stored as packed bit rows. Used for brute-force
/// rank computations, independent of the persistence column reduction.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  void set(std::size_t r, std::size_t c, bool value = true);
  bool get(std::size_t r, std::size_t c) const;

  /// Rank by row echelon elimination (works on a copy).
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

/// True when `target` lies in the Z2 span of `vectors`. Each vector is a
/// sorted list of coordinates in [0, length).
bool in_span(std::span<const std::vector<Index>> vectors,
             const std::vector<Index>& target, std::size_t length);

/// Betti number of a finite simplicial complex (closed under faces),
/// computed as dim Z_k - dim B_k by full Gaussian elimination over Z2.
std::size_t betti_bruteforce(std::span<const Simplex> complex, int k);

}  // namespace cyreg

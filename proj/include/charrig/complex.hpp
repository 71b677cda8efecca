#pragma once

// Finite oriented simplicial complexes, simplicial maps, subcomplexes and
// barycentric subdivision.
//
// A simplex is its strictly increasing vertex tuple; that order is its
// orientation. Simplices of each dimension are indexed in lexicographic
// order, so indexing is canonical for a given vertex labelling.

#include "charrig/matrix.hpp"
#include "charrig/zlin.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charrig {

using Vertex = std::int64_t;
using Simplex = std::vector<Vertex>;

std::string simplex_key(const Simplex& s);  // "0,1,2"
Simplex parse_simplex_key(std::string_view key);

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

class Complex {
 public:
  /// Builds from a list of simplices. With close_faces every face of every
  /// listed simplex is added; otherwise a missing face is a FaceClosureError.
  /// Tuples must be strictly increasing; repeats are a DuplicateError.
  static ComplexPtr create(std::string name, const std::vector<Simplex>& simplices,
                           bool close_faces = true);

  Complex(const Complex&) = delete;
  Complex& operator=(const Complex&) = delete;

  const std::string& name() const noexcept { return name_; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int j) const noexcept;
  std::size_t vertex_count() const noexcept { return count(0); }
  std::size_t size() const noexcept;
  const std::vector<Simplex>& simplices(int j) const;
  const Simplex& simplex(int j, std::size_t index) const { return simplices(j).at(index); }
  std::optional<std::size_t> index_of(const Simplex& s) const;
  std::size_t require_index(const Simplex& s) const;
  std::vector<Vertex> vertices() const;

  long euler_characteristic() const;

  /// Boundary matrix of degree j (count(j-1) x count(j)); valid for any
  /// j >= 0, empty shapes outside the dimension range.
  const ZMatrix& boundary(int j) const;
  /// Cached Smith normal form of boundary(j).
  const SNFResult& boundary_snf(int j) const;

  /// Per-complex memo keyed by a string. The value is computed outside the
  /// lock; concurrent first calls may both compute, one result is kept.
  template <class T, class F>
  const T& cached(const std::string& key, F&& make) const {
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *static_cast<const T*>(it->second.get());
    }
    auto value = std::make_shared<T>(make());
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, std::static_pointer_cast<void>(value));
    return *static_cast<const T*>(it->second.get());
  }

 private:
  Complex() = default;

  std::string name_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::shared_ptr<void>> cache_;
};

/// Parses the JSON complex description (name, dimension, simplices,
/// optional faces). Throws ParseError, FaceClosureError, DuplicateError.
ComplexPtr load_complex(std::string_view document);
ComplexPtr load_complex_file(const std::string& path);

/// Boundary matrix with DegreeError outside 0 <= j <= dim + 1.
ZMatrix boundary_matrix(const Complex& x, int j);

/// Alternating-sign boundary of an oriented simplex: (face, sign) pairs.
std::vector<std::pair<Simplex, int>> faces_with_signs(const Simplex& s);

/// Vertex map carrying every source simplex onto a (possibly degenerate)
/// target simplex.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::map<Vertex, Vertex> vertex_map);

  static SimplicialMap identity(const ComplexPtr& x);
  /// outer after inner.
  static SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

  const ComplexPtr& source() const noexcept { return source_; }
  const ComplexPtr& target() const noexcept { return target_; }
  const std::map<Vertex, Vertex>& vertex_map() const noexcept { return map_; }
  Vertex operator()(Vertex v) const { return map_.at(v); }

  /// Image of an oriented simplex: target index and orientation sign, or
  /// nullopt when the image is degenerate.
  std::optional<std::pair<std::size_t, int>> image(const Simplex& s) const;

  /// Matrix of the induced chain map in degree j.
  const ZMatrix& chain_map(int j) const;

  IntVector push_chain(int j, const IntVector& chain) const;
  RatVector pull_cochain(int j, const RatVector& cochain) const;

 private:
  ComplexPtr source_, target_;
  std::map<Vertex, Vertex> map_;
  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<ZMatrix>> chain_maps;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

ZMatrix induced_chain_map(const SimplicialMap& phi, int j);

/// Face-closed selection of simplices of a parent complex.
class Subcomplex {
 public:
  Subcomplex() = default;
  explicit Subcomplex(ComplexPtr parent);

  /// Closure of the given (dimension, index) simplices.
  static Subcomplex closure(ComplexPtr parent,
                            const std::vector<std::pair<int, std::size_t>>& cells);
  /// Closure of the support of a j-chain.
  static Subcomplex support(ComplexPtr parent, int j, const IntVector& chain);

  const ComplexPtr& parent() const noexcept { return parent_; }
  bool empty() const noexcept;
  bool contains(int j, std::size_t index) const;
  const std::vector<std::size_t>& indices(int j) const;
  std::size_t size() const noexcept;
  std::vector<Vertex> vertices() const;

  /// Standalone complex on the same vertex labels.
  ComplexPtr to_complex(const std::string& name) const;

  friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
    return a.parent_ == b.parent_ && a.cells_ == b.cells_;
  }

 private:
  void add_closed(int j, std::size_t index);
  ComplexPtr parent_;
  std::vector<std::vector<std::size_t>> cells_;  // sorted per dimension
};

/// Closed star of K's vertex set: closure of every simplex meeting it.
Subcomplex closed_star_neighborhood(const ComplexPtr& x, const Subcomplex& k);

/// First barycentric subdivision. Vertices of the fine complex are labelled
/// by (dimension, index) of the barycentred simplex, so each fine simplex's
/// vertex order is its flag order.
struct Subdivision {
  ComplexPtr coarse;
  ComplexPtr fine;
  /// carrier[j][i]: (dimension, index) of the smallest coarse simplex
  /// containing fine simplex i of dimension j.
  std::vector<std::vector<std::pair<int, std::size_t>>> carrier;
  /// Subdivision chain maps Sd_j: C_j(coarse) -> C_j(fine).
  std::vector<ZMatrix> chain_map;
  /// Last-vertex simplicial approximation fine -> coarse; a left inverse
  /// of Sd on chains.
  SimplicialMap last_vertex;

  IntVector subdivide_chain(int j, const IntVector& chain) const;
};

Subdivision barycentric_subdivide(const ComplexPtr& x);

}  // namespace charrig

#include "charrig/complex.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace charrig {

std::string simplex_key(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex parse_simplex_key(std::string_view key) {
  Simplex s;
  std::string part;
  std::istringstream in{std::string(key)};
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoll(part, &used));
      if (used != part.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed simplex key '" + std::string(key) + "'");
    }
  }
  if (s.empty()) throw ParseError("empty simplex key");
  return s;
}

std::vector<std::pair<Simplex, int>> faces_with_signs(const Simplex& s) {
  std::vector<std::pair<Simplex, int>> out;
  if (s.size() < 2) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t t = 0; t < s.size(); ++t)
      if (t != i) f.push_back(s[t]);
    out.emplace_back(std::move(f), i % 2 == 0 ? 1 : -1);
  }
  return out;
}

namespace {

void check_increasing(const Simplex& s) {
  if (s.empty()) throw ParseError("empty simplex");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i])
      throw ParseError("simplex [" + simplex_key(s) + "] is not a strictly increasing vertex tuple");
}

void add_with_faces(std::set<Simplex>& all, const Simplex& s) {
  if (!all.insert(s).second) return;
  for (auto& [f, sign] : faces_with_signs(s)) add_with_faces(all, f);
}

}  // namespace

ComplexPtr Complex::create(std::string name, const std::vector<Simplex>& simplices,
                           bool close_faces) {
  std::set<Simplex> all, listed;
  for (const auto& s : simplices) {
    check_increasing(s);
    if (!listed.insert(s).second) throw DuplicateError("duplicate simplex [" + simplex_key(s) + "]");
    if (close_faces)
      add_with_faces(all, s);
    else
      all.insert(s);
  }
  if (!close_faces)
    for (const auto& s : all)
      for (auto& [f, sign] : faces_with_signs(s))
        if (!all.count(f))
          throw FaceClosureError("face [" + simplex_key(f) + "] of [" + simplex_key(s) +
                                 "] is not listed");

  std::shared_ptr<Complex> x(new Complex());
  x->name_ = std::move(name);
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (x->by_dim_.size() <= d) x->by_dim_.resize(d + 1);
    x->by_dim_[d].push_back(s);  // std::set order is lexicographic
  }
  x->index_.resize(x->by_dim_.size());
  for (std::size_t d = 0; d < x->by_dim_.size(); ++d)
    for (std::size_t i = 0; i < x->by_dim_[d].size(); ++i) x->index_[d].emplace(x->by_dim_[d][i], i);
  return x;
}

std::size_t Complex::count(int j) const noexcept {
  if (j < 0 || j > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(j)].size();
}

std::size_t Complex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

const std::vector<Simplex>& Complex::simplices(int j) const {
  static const std::vector<Simplex> kEmpty;
  if (j < 0 || j > dimension()) return kEmpty;
  return by_dim_[static_cast<std::size_t>(j)];
}

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& m = index_[s.size() - 1];
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t Complex::require_index(const Simplex& s) const {
  auto i = index_of(s);
  if (!i) throw MismatchError("simplex [" + simplex_key(s) + "] is not in complex '" + name_ + "'");
  return *i;
}

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> v;
  for (const auto& s : simplices(0)) v.push_back(s[0]);
  return v;
}

long Complex::euler_characteristic() const {
  long chi = 0;
  for (int j = 0; j <= dimension(); ++j)
    chi += (j % 2 == 0 ? 1 : -1) * static_cast<long>(count(j));
  return chi;
}

const ZMatrix& Complex::boundary(int j) const {
  if (j < 0) throw DegreeError("negative boundary degree " + std::to_string(j));
  return cached<ZMatrix>("boundary:" + std::to_string(j), [&] {
    ZMatrix m(count(j - 1), count(j));
    if (j == 0) return m;
    const auto& cells = simplices(j);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (auto& [f, sign] : faces_with_signs(cells[c])) m(*index_of(f), c) = sign;
    return m;
  });
}

const SNFResult& Complex::boundary_snf(int j) const {
  return cached<SNFResult>("snf:" + std::to_string(j),
                           [&] { return smith_normal_form(boundary(j)); });
}

ZMatrix boundary_matrix(const Complex& x, int j) {
  if (j < 0 || j > x.dimension() + 1)
    throw DegreeError("boundary degree " + std::to_string(j) + " outside [0, " +
                      std::to_string(x.dimension() + 1) + "]");
  return x.boundary(j);
}

ComplexPtr load_complex(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("complex description is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("complex description must be a JSON object");
  auto read_list = [](const nlohmann::json& arr, const char* field) {
    if (!arr.is_array()) throw ParseError(std::string("'") + field + "' must be a list");
    std::vector<Simplex> out;
    for (const auto& t : arr) {
      if (!t.is_array() || t.empty())
        throw ParseError(std::string("entries of '") + field + "' must be non-empty vertex lists");
      Simplex s;
      for (const auto& v : t) {
        if (!v.is_number_integer()) throw ParseError("vertex labels must be integers");
        s.push_back(v.get<Vertex>());
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ParseError("complex description needs a string 'name'");
  if (!doc.contains("simplices")) throw ParseError("complex description needs 'simplices'");
  std::vector<Simplex> cells = read_list(doc["simplices"], "simplices");
  const bool explicit_faces = doc.contains("faces");
  if (explicit_faces) {
    auto extra = read_list(doc["faces"], "faces");
    cells.insert(cells.end(), extra.begin(), extra.end());
  }
  ComplexPtr x = Complex::create(doc["name"].get<std::string>(), cells, !explicit_faces);
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_integer()) throw ParseError("'dimension' must be an integer");
    if (doc["dimension"].get<int>() != x->dimension())
      throw ParseError("declared dimension " + std::to_string(doc["dimension"].get<int>()) +
                       " but simplices have dimension " + std::to_string(x->dimension()));
  }
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_number_integer() ||
        doc["vertices"].get<std::size_t>() != x->vertex_count())
      throw ParseError("declared vertex count does not match the simplices");
  }
  return x;
}

ComplexPtr load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open complex file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_complex(buf.str());
}

// --- SimplicialMap ---------------------------------------------------------

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target,
                             std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  for (Vertex v : source_->vertices())
    if (!map_.count(v))
      throw MismatchError("vertex map does not cover source vertex " + std::to_string(v));
  for (int j = 0; j <= source_->dimension(); ++j)
    for (const auto& s : source_->simplices(j)) {
      std::set<Vertex> img;
      for (Vertex v : s) img.insert(map_.at(v));
      if (!target_->index_of(Simplex(img.begin(), img.end())))
        throw MismatchError("image of [" + simplex_key(s) + "] is not a simplex of '" +
                            target_->name() + "'");
    }
}

SimplicialMap SimplicialMap::identity(const ComplexPtr& x) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : x->vertices()) m[v] = v;
  return SimplicialMap(x, x, std::move(m));
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (inner.target_ != outer.source_)
    throw MismatchError("cannot compose simplicial maps: target/source differ");
  std::map<Vertex, Vertex> m;
  for (auto [v, w] : inner.map_) m[v] = outer(w);
  return SimplicialMap(inner.source_, outer.target_, std::move(m));
}

std::optional<std::pair<std::size_t, int>> SimplicialMap::image(const Simplex& s) const {
  Simplex img;
  img.reserve(s.size());
  for (Vertex v : s) img.push_back(map_.at(v));
  // sign of the sorting permutation; a repeated vertex means degenerate
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) return std::nullopt;
      if (img[i] > img[j]) sign = -sign;
    }
  std::sort(img.begin(), img.end());
  return std::make_pair(target_->require_index(img), sign);
}

const ZMatrix& SimplicialMap::chain_map(int j) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->chain_maps[j];
  if (!slot) {
    auto m = std::make_shared<ZMatrix>(target_->count(j), source_->count(j));
    const auto& cells = source_->simplices(j);
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (auto im = image(cells[c])) (*m)(im->first, c) = im->second;
    slot = std::move(m);
  }
  return *slot;
}

IntVector SimplicialMap::push_chain(int j, const IntVector& chain) const {
  return multiply(chain_map(j), chain);
}

RatVector SimplicialMap::pull_cochain(int j, const RatVector& cochain) const {
  return multiply_transposed(chain_map(j), cochain);
}

ZMatrix induced_chain_map(const SimplicialMap& phi, int j) { return phi.chain_map(j); }

// --- Subcomplex ------------------------------------------------------------

Subcomplex::Subcomplex(ComplexPtr parent)
    : parent_(std::move(parent)),
      cells_(static_cast<std::size_t>(std::max(parent_->dimension() + 1, 0))) {}

void Subcomplex::add_closed(int j, std::size_t index) {
  auto& v = cells_[static_cast<std::size_t>(j)];
  auto it = std::lower_bound(v.begin(), v.end(), index);
  if (it != v.end() && *it == index) return;
  v.insert(it, index);
  for (auto& [f, sign] : faces_with_signs(parent_->simplex(j, index)))
    add_closed(j - 1, *parent_->index_of(f));
}

Subcomplex Subcomplex::closure(ComplexPtr parent,
                               const std::vector<std::pair<int, std::size_t>>& cells) {
  Subcomplex k(std::move(parent));
  for (auto [j, i] : cells) {
    if (i >= k.parent_->count(j)) throw MismatchError("subcomplex cell out of range");
    k.add_closed(j, i);
  }
  return k;
}

Subcomplex Subcomplex::support(ComplexPtr parent, int j, const IntVector& chain) {
  if (chain.size() != parent->count(j)) throw ShapeError("chain length does not match complex");
  std::vector<std::pair<int, std::size_t>> cells;
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (sgn(chain[i]) != 0) cells.emplace_back(j, i);
  return closure(std::move(parent), cells);
}

bool Subcomplex::empty() const noexcept { return size() == 0; }

bool Subcomplex::contains(int j, std::size_t index) const {
  if (j < 0 || static_cast<std::size_t>(j) >= cells_.size()) return false;
  const auto& v = cells_[static_cast<std::size_t>(j)];
  return std::binary_search(v.begin(), v.end(), index);
}

const std::vector<std::size_t>& Subcomplex::indices(int j) const {
  static const std::vector<std::size_t> kEmpty;
  if (j < 0 || static_cast<std::size_t>(j) >= cells_.size()) return kEmpty;
  return cells_[static_cast<std::size_t>(j)];
}

std::size_t Subcomplex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& v : cells_) n += v.size();
  return n;
}

std::vector<Vertex> Subcomplex::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i : indices(0)) out.push_back(parent_->simplex(0, i)[0]);
  return out;
}

ComplexPtr Subcomplex::to_complex(const std::string& name) const {
  std::vector<Simplex> cells;
  for (std::size_t j = 0; j < cells_.size(); ++j)
    for (std::size_t i : cells_[j]) cells.push_back(parent_->simplex(static_cast<int>(j), i));
  return Complex::create(name, cells, false);
}

Subcomplex closed_star_neighborhood(const ComplexPtr& x, const Subcomplex& k) {
  Subcomplex out(x);
  if (k.empty()) return out;
  if (k.parent() != x) throw MismatchError("subcomplex belongs to a different complex");
  std::set<Vertex> verts;
  for (Vertex v : k.vertices()) verts.insert(v);
  std::vector<std::pair<int, std::size_t>> cells;
  for (int j = 0; j <= x->dimension(); ++j) {
    const auto& s = x->simplices(j);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::any_of(s[i].begin(), s[i].end(), [&](Vertex v) { return verts.count(v) > 0; }))
        cells.emplace_back(j, i);
  }
  return Subcomplex::closure(x, cells);
}

// --- Barycentric subdivision -----------------------------------------------

namespace {

// All strictly increasing face chains ending at a simplex, as lists of
// (dimension, index) pairs ordered by dimension.
using Flag = std::vector<std::pair<int, std::size_t>>;

void flags_ending_at(const Complex& x, int j, std::size_t idx, Flag& suffix,
                     std::vector<Flag>& out) {
  suffix.emplace_back(j, idx);
  Flag f(suffix.rbegin(), suffix.rend());
  out.push_back(f);
  if (j > 0) {
    // the next-lower element of the chain may be any proper face
    const Simplex& s = x.simplex(j, idx);
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) face.push_back(s[b]);
      const int fj = static_cast<int>(face.size()) - 1;
      flags_ending_at(x, fj, *x.index_of(face), suffix, out);
    }
  }
  suffix.pop_back();
}

}  // namespace

Subdivision barycentric_subdivide(const ComplexPtr& x) {
  // barycentre labels: vertices of x first, then edges, ...
  std::vector<Vertex> offset(static_cast<std::size_t>(x->dimension() + 2), 0);
  for (int j = 0; j <= x->dimension(); ++j)
    offset[static_cast<std::size_t>(j + 1)] =
        offset[static_cast<std::size_t>(j)] + static_cast<Vertex>(x->count(j));
  auto label = [&](int j, std::size_t i) {
    return offset[static_cast<std::size_t>(j)] + static_cast<Vertex>(i);
  };

  std::vector<Simplex> fine_cells;
  std::map<Simplex, std::pair<int, std::size_t>> carrier_of;
  for (int j = 0; j <= x->dimension(); ++j)
    for (std::size_t i = 0; i < x->count(j); ++i) {
      std::vector<Flag> flags;
      Flag suffix;
      flags_ending_at(*x, j, i, suffix, flags);
      for (const auto& f : flags) {
        Simplex s;
        for (auto [fj, fi] : f) s.push_back(label(fj, fi));
        carrier_of.emplace(s, std::make_pair(j, i));
        fine_cells.push_back(std::move(s));
      }
    }
  std::sort(fine_cells.begin(), fine_cells.end());
  fine_cells.erase(std::unique(fine_cells.begin(), fine_cells.end()), fine_cells.end());
  ComplexPtr fine = Complex::create(x->name() + "'", fine_cells, false);

  std::vector<std::vector<std::pair<int, std::size_t>>> carrier(
      static_cast<std::size_t>(std::max(fine->dimension() + 1, 0)));
  for (int j = 0; j <= fine->dimension(); ++j)
    for (const auto& s : fine->simplices(j)) carrier[static_cast<std::size_t>(j)].push_back(carrier_of.at(s));

  // sd(v) = b_v; sd(s) = (-1)^dim(s) * (sd(boundary s) joined with b_s)
  std::vector<ZMatrix> sd;
  for (int j = 0; j <= x->dimension(); ++j) {
    ZMatrix m(fine->count(j), x->count(j));
    for (std::size_t i = 0; i < x->count(j); ++i) {
      if (j == 0) {
        m(fine->require_index({label(0, i)}), i) = 1;
        continue;
      }
      const Vertex b = label(j, i);
      const int sign = (j % 2 == 0) ? 1 : -1;
      for (auto& [face, fs] : faces_with_signs(x->simplex(j, i))) {
        const std::size_t fi = *x->index_of(face);
        const ZMatrix& prev = sd[static_cast<std::size_t>(j - 1)];
        for (std::size_t r = 0; r < prev.rows(); ++r) {
          if (sgn(prev(r, fi)) == 0) continue;
          Simplex cone = fine->simplex(j - 1, r);
          cone.push_back(b);
          m(fine->require_index(cone), i) += sign * fs * prev(r, fi);
        }
      }
    }
    sd.push_back(std::move(m));
  }

  std::map<Vertex, Vertex> last;
  for (int j = 0; j <= x->dimension(); ++j)
    for (std::size_t i = 0; i < x->count(j); ++i) last[label(j, i)] = x->simplex(j, i).back();

  return Subdivision{x, fine, std::move(carrier), std::move(sd),
                     SimplicialMap(fine, x, std::move(last))};
}

IntVector Subdivision::subdivide_chain(int j, const IntVector& chain) const {
  if (j < 0 || j > coarse->dimension()) {
    if (!is_zero(chain)) throw DegreeError("chain degree out of range for subdivision");
    return IntVector(fine->count(j));
  }
  return multiply(chain_map[static_cast<std::size_t>(j)], chain);
}

}  // namespace charrig

#include "contracta/filtered_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace contracta {

namespace {

std::string describe(const std::vector<VertexId>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ',';
    out << vs[i];
  }
  out << '}';
  return out.str();
}

std::vector<VertexId> facet_vertices(const std::vector<VertexId>& vs, std::size_t drop) {
  std::vector<VertexId> out;
  out.reserve(vs.size() - 1);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i != drop) out.push_back(vs[i]);
  return out;
}

}  // namespace

std::size_t FilteredComplex::VertexListHash::operator()(const std::vector<VertexId>& v) const {
  // FNV-1a over the vertex ids.
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId x : v) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

FilteredComplex FilteredComplex::assemble(std::vector<Entry> entries,
                                          std::vector<SimplexId> order) {
  FilteredComplex K;
  K.entries_ = std::move(entries);
  const std::size_t n = K.entries_.size();

  for (std::size_t id = 0; id < n; ++id) {
    auto& vs = K.entries_[id].vertices;
    if (vs.empty()) throw InvalidInput("empty simplex");
    if (!std::is_sorted(vs.begin(), vs.end()) ||
        std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw InvalidInput("simplex vertices must be strictly increasing: " + describe(vs));
    auto [it, fresh] = K.index_.emplace(vs, static_cast<SimplexId>(id));
    if (!fresh) throw DuplicateSimplexError("duplicate simplex " + describe(vs));
  }

  K.facets_.resize(n);
  K.cofacets_.resize(n);
  for (std::size_t id = 0; id < n; ++id) {
    const auto& e = K.entries_[id];
    if (e.vertices.size() == 1) continue;
    K.facets_[id].reserve(e.vertices.size());
    for (std::size_t drop = 0; drop < e.vertices.size(); ++drop) {
      auto fv = facet_vertices(e.vertices, drop);
      auto it = K.index_.find(fv);
      if (it == K.index_.end())
        throw MissingFaceError("simplex " + describe(e.vertices) + " is missing face " +
                               describe(fv));
      if (K.entries_[it->second].height > e.height) {
        std::ostringstream msg;
        msg << "height " << K.entries_[it->second].height << " of face " << describe(fv)
            << " exceeds height " << e.height << " of " << describe(e.vertices);
        throw NonMonotoneHeightError(msg.str());
      }
      K.facets_[id].push_back(it->second);
      K.cofacets_[it->second].push_back(static_cast<SimplexId>(id));
    }
  }

  K.order_ = std::move(order);
  K.rank_.resize(n);
  for (std::size_t r = 0; r < n; ++r) K.rank_[K.order_[r]] = r;

  K.dim_ = -1;
  for (const auto& e : K.entries_)
    K.dim_ = std::max(K.dim_, static_cast<int>(e.vertices.size()) - 1);
  K.by_dim_.assign(K.dim_ + 1, {});
  for (SimplexId id : K.order_) K.by_dim_[K.dim(id)].push_back(id);

  K.check_order_invariants();
  return K;
}

void FilteredComplex::check_order_invariants() const {
  const std::size_t n = entries_.size();
  if (order_.size() != n) throw InternalError("order is not a permutation");
  // (height, dim) must be nondecreasing along the order, and every face must
  // come strictly before its cofaces.
  for (std::size_t r = 1; r < n; ++r) {
    const SimplexId a = order_[r - 1], b = order_[r];
    if (height(a) > height(b) || (height(a) == height(b) && dim(a) > dim(b)))
      throw InternalError("total order does not sort by (height, dimension)");
  }
  for (std::size_t id = 0; id < n; ++id)
    for (SimplexId f : facets_[id])
      if (rank_[f] >= rank_[id]) throw InternalError("face ranked after coface");
}

FilteredComplex FilteredComplex::build(std::vector<Entry> entries) {
  std::vector<SimplexId> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& e : entries) std::sort(e.vertices.begin(), e.vertices.end());
  std::sort(order.begin(), order.end(), [&](SimplexId a, SimplexId b) {
    const auto& ea = entries[a];
    const auto& eb = entries[b];
    if (ea.height != eb.height) return ea.height < eb.height;
    if (ea.vertices.size() != eb.vertices.size()) return ea.vertices.size() < eb.vertices.size();
    return ea.vertices < eb.vertices;
  });
  return assemble(std::move(entries), std::move(order));
}

FilteredComplex FilteredComplex::build_ordered(std::vector<Entry> entries) {
  std::vector<SimplexId> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& e : entries) std::sort(e.vertices.begin(), e.vertices.end());
  return assemble(std::move(entries), std::move(order));
}

FilteredComplex FilteredComplex::lower_star(
    const std::map<VertexId, double>& vertex_heights,
    const std::vector<std::vector<VertexId>>& skeleton) {
  std::vector<Entry> entries;
  entries.reserve(skeleton.size());
  for (const auto& vs : skeleton) {
    double h = -std::numeric_limits<double>::infinity();
    for (VertexId v : vs) {
      auto it = vertex_heights.find(v);
      if (it == vertex_heights.end())
        throw UnknownVertexError("no height for vertex " + std::to_string(v));
      h = std::max(h, it->second);
    }
    entries.push_back({vs, h});
  }
  return build(std::move(entries));
}

SimplexId FilteredComplex::find(std::span<const VertexId> vertices) const {
  std::vector<VertexId> key(vertices.begin(), vertices.end());
  std::sort(key.begin(), key.end());
  auto it = index_.find(key);
  return it == index_.end() ? kNoSimplex : it->second;
}

SimplexId FilteredComplex::require(std::span<const VertexId> vertices) const {
  SimplexId s = find(vertices);
  if (s == kNoSimplex)
    throw UnknownSimplexError("no such simplex " +
                              describe({vertices.begin(), vertices.end()}));
  return s;
}

SimplexId FilteredComplex::vertex_simplex(VertexId v) const {
  const VertexId key[1] = {v};
  SimplexId s = find(key);
  if (s == kNoSimplex) throw UnknownVertexError("no such vertex " + std::to_string(v));
  return s;
}

const std::vector<SimplexId>& FilteredComplex::simplices_of_dim(int p) const {
  static const std::vector<SimplexId> kEmpty;
  if (p < 0 || p > dim_) return kEmpty;
  return by_dim_[p];
}

double FilteredComplex::max_height() const {
  return entries_.empty() ? -std::numeric_limits<double>::infinity()
                          : entries_[order_.back()].height;
}

std::vector<SimplexId> FilteredComplex::closure(std::span<const SimplexId> s) const {
  std::vector<char> seen(entries_.size(), 0);
  std::vector<SimplexId> stack(s.begin(), s.end());
  std::vector<SimplexId> out;
  while (!stack.empty()) {
    SimplexId t = stack.back();
    stack.pop_back();
    if (seen[t]) continue;
    seen[t] = 1;
    out.push_back(t);
    for (SimplexId f : facets_[t])
      if (!seen[f]) stack.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexId> FilteredComplex::star(std::span<const SimplexId> s) const {
  std::vector<char> seen(entries_.size(), 0);
  std::vector<SimplexId> stack(s.begin(), s.end());
  std::vector<SimplexId> out;
  while (!stack.empty()) {
    SimplexId t = stack.back();
    stack.pop_back();
    if (seen[t]) continue;
    seen[t] = 1;
    out.push_back(t);
    for (SimplexId c : cofacets_[t])
      if (!seen[c]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexId> FilteredComplex::link(SimplexId s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= entries_.size())
    throw UnknownSimplexError("link of unknown simplex id " + std::to_string(s));
  const SimplexId one[1] = {s};
  auto cl_st = closure(star(one));
  auto st_cl = star(closure(one));
  std::vector<SimplexId> out;
  std::set_difference(cl_st.begin(), cl_st.end(), st_cl.begin(), st_cl.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<SimplexId> FilteredComplex::sublevel(double a) const {
  // Heights are nondecreasing along the order, so the sublevel is a prefix.
  std::vector<SimplexId> out;
  for (SimplexId id : order_) {
    if (entries_[id].height > a) break;
    out.push_back(id);
  }
  return out;
}

}  // namespace contracta

#include "mlcore/types.hpp"

#include <algorithm>
#include <numeric>

namespace mlcore {

VertexSet::VertexSet(std::vector<vertex_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(std::size_t vertex_count) {
  VertexSet s;
  s.members_.resize(vertex_count);
  std::iota(s.members_.begin(), s.members_.end(), vertex_t{0});
  return s;
}

bool VertexSet::contains(vertex_t v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::contains_all(const VertexSet& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

VertexSet VertexSet::intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.members_.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(out.members_));
  return out;
}

}  // namespace mlcore

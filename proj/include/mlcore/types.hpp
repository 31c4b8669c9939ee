#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mlcore {

using vertex_t = std::uint32_t;
using layer_t = std::uint32_t;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Per-layer minimum-degree requirements identifying a core. Componentwise
// comparison (dominates) defines the partial order of the core lattice;
// operator<=> is lexicographic and only used for deterministic container keys.
class CorenessVector {
 public:
  CorenessVector() = default;
  explicit CorenessVector(std::vector<std::uint32_t> components)
      : components_(std::move(components)) {}
  CorenessVector(std::initializer_list<std::uint32_t> components)
      : components_(components) {}

  static CorenessVector zeros(std::size_t layer_count) {
    return CorenessVector(std::vector<std::uint32_t>(layer_count, 0));
  }

  std::size_t size() const { return components_.size(); }
  std::uint32_t operator[](std::size_t i) const { return components_[i]; }
  void set(std::size_t i, std::uint32_t value) { components_[i] = value; }

  // Lattice level: sum of components.
  std::uint64_t level() const {
    std::uint64_t sum = 0;
    for (auto c : components_) sum += c;
    return sum;
  }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (auto c : components_) n += (c > 0);
    return n;
  }

  bool dominates(const CorenessVector& other) const {
    if (components_.size() != other.components_.size()) return false;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i] < other.components_[i]) return false;
    }
    return true;
  }

  CorenessVector bumped(std::size_t i) const {
    CorenessVector k(*this);
    ++k.components_[i];
    return k;
  }

  const std::vector<std::uint32_t>& components() const { return components_; }

  friend bool operator==(const CorenessVector&, const CorenessVector&) = default;
  friend auto operator<=>(const CorenessVector&, const CorenessVector&) = default;

 private:
  std::vector<std::uint32_t> components_;
};

// Canonical vertex set: sorted, duplicate-free. Equality on the member list is
// equality of sets, which keeps serialized forms bit-identical.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<vertex_t> members);
  VertexSet(std::initializer_list<vertex_t> members)
      : VertexSet(std::vector<vertex_t>(members)) {}

  static VertexSet full(std::size_t vertex_count);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(vertex_t v) const;
  bool contains_all(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const { return other.contains_all(*this); }

  static VertexSet intersect(const VertexSet& a, const VertexSet& b);

  std::span<const vertex_t> members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<vertex_t> members_;
};

struct CorenessVectorHash {
  std::size_t operator()(const CorenessVector& k) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto c : k.components()) h = h * 1099511628211ull ^ (c + 0x9e37);
    return h;
  }
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t h = 14695981039346656037ull;
    for (auto v : s.members()) h = h * 1099511628211ull ^ (v + 1);
    return h;
  }
};

}  // namespace mlcore

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz {

/// Sorted multiset of element orders (m1 <= ... <= mr), r >= 3, every mi >= 2.
struct TypeVector {
  std::vector<std::uint32_t> orders;

  TypeVector() = default;
  /// Sorts; throws precondition when r < 3 or an entry is below 2.
  explicit TypeVector(std::vector<std::uint32_t> orders);
  static TypeVector parse(std::string_view text);

  std::size_t size() const { return orders.size(); }
  std::string str() const;
  auto operator<=>(const TypeVector&) const = default;
};

/// 1/r + 1/s + 1/t < 1, decided in integers.
bool is_hyperbolic(std::uint32_t r, std::uint32_t s, std::uint32_t t);

/// Ordered tuple (x1, ..., xr) with x1 ... xr = 1 generating G.
class SphericalSystem {
 public:
  /// Throws precondition unless the tuple is a spherical system of G.
  SphericalSystem(GroupHandle group, std::vector<Element> elements);

  const GroupHandle& group() const { return group_; }
  const std::vector<Element>& elements() const { return elements_; }
  const TypeVector& type() const { return type_; }
  std::size_t size() const { return elements_.size(); }
  /// Conjugacy classes of all powers of all entries (enumerated groups).
  const ClassMask& sigma_classes() const;

  /// `group<TAB>type<TAB>enc;enc;...`
  std::string serialize() const;
  static SphericalSystem deserialize(std::string_view line, const GroupOptions& options = {});

 private:
  GroupHandle group_;
  std::vector<Element> elements_;
  TypeVector type_;
  ClassMask sigma_;
};

/// Sorted type on success, nullopt when the product is not 1 or the entries
/// do not generate. Throws precondition for r < 3, foreign-element for
/// entries outside G.
std::optional<TypeVector> is_spherical_system(const GroupHandle& g, std::span<const Element> tuple);

/// Sigma(T) as a sorted list of encodings (always contains the identity).
std::vector<Element> sigma_set(const SphericalSystem& t);

/// Sigma(T1) and Sigma(T2) meet only in the identity. Throws group-mismatch.
/// For permutation groups above the enumeration cap the test compares cycle
/// types of powers, which can only err towards "not disjoint".
bool are_disjoint(const SphericalSystem& t1, const SphericalSystem& t2);

struct RamificationStructure {
  SphericalSystem first;
  SphericalSystem second;

  /// Throws precondition unless the two systems are disjoint.
  RamificationStructure(SphericalSystem a, SphericalSystem b);
  bool beauville() const { return first.size() == 3 && second.size() == 3; }
};

struct EnumerateOptions {
  // Restrict x1 to conjugacy class representatives.
  bool up_to_inner = false;
  // Refuse when the candidate bound |G|^(r-1) exceeds this.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

using IdTuple = std::vector<ElemId>;

/// Every ordered system whose sorted type equals tau, in lexicographic id
/// order (independent of the thread count). Throws budget-exceeded.
std::vector<IdTuple> enumerate_system_ids(const GroupHandle& g, const TypeVector& tau,
                                          const EnumerateOptions& options = {});
std::vector<SphericalSystem> enumerate_systems(const GroupHandle& g, const TypeVector& tau,
                                               const EnumerateOptions& options = {});

enum class SearchMode { exhaustive, randomized };

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t trials = 1'000'000;         // randomized mode
  std::uint64_t seed = 0;                   // randomized mode
  std::uint64_t state_budget = 100'000'000;  // exhaustive mode: search states visited
};

struct SearchResult {
  enum class Outcome { found, none, inconclusive };
  Outcome outcome = Outcome::none;
  std::optional<RamificationStructure> structure;
  std::uint64_t work = 0;  // states visited or trials drawn
};

std::string_view to_string(SearchResult::Outcome outcome);

/// Searches for an unmixed ramification structure of unordered type (tau1, tau2).
/// Exhaustive "none" is a proof of non-existence; randomized "inconclusive" is not.
SearchResult exists_unmixed_structure(const GroupHandle& g, const TypeVector& tau1, const TypeVector& tau2,
                                      const SearchOptions& options = {});
/// A side fixed either by its exact type or only by its size.
struct SideConstraint {
  std::size_t size = 0;
  std::optional<TypeVector> type;

  static SideConstraint of_type(TypeVector tau) { return {tau.size(), std::move(tau)}; }
  static SideConstraint of_size(std::size_t r) { return {r, std::nullopt}; }
};

SearchResult exists_unmixed_structure(const GroupHandle& g, const SideConstraint& side1,
                                      const SideConstraint& side2, const SearchOptions& options = {});
/// Same, over all types of sizes (r1, r2).
SearchResult exists_unmixed_structure_sizes(const GroupHandle& g, std::size_t r1, std::size_t r2,
                                            const SearchOptions& options = {});

}  // namespace hurwitz

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hurwitz {

enum class Family { symmetric, alternating, psl2, abelian, dihedral, z2_semidirect };

/// Names a group in one of the supported families.
///
/// Parameters per family: symmetric/alternating `{n}`, psl2 `{p}`,
/// abelian invariant factors `{n1, ..., nt}` with n1 | n2 | ... | nt,
/// dihedral `{n}` (order 2n), z2_semidirect `{m, n}` (order 2mn, the
/// involution inverting both cyclic factors).
struct GroupSpec {
  Family family = Family::symmetric;
  std::vector<std::int64_t> params;

  /// Grammar: `sym:n`, `alt:n`, `psl2:p`, `ab:n1,n2,...`, `dih:n`, `z2semi:m,n`.
  static GroupSpec parse(std::string_view text);
  std::string str() const;
  /// Throws Error(invalid_spec) when the family invariants are violated.
  void validate() const;

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec symmetric_spec(int n);
GroupSpec alternating_spec(int n);
GroupSpec psl2_spec(int p);
GroupSpec abelian_spec(std::vector<std::int64_t> factors);
GroupSpec dihedral_spec(int n);
GroupSpec z2_semidirect_spec(int m, int n);

/// Canonical element encoding. Permutations: 1-based image sequence.
/// psl2: row-major (a, b, c, d), the lexicographically smaller of {M, -M}.
/// abelian: residue tuple. dihedral: (eps, i) for t^eps r^i.
/// z2_semidirect: (eps, i, j) for t^eps r^i s^j.
struct Element {
  std::vector<std::int32_t> code;

  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
  std::string str() const;
  static Element parse(std::string_view text);
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

using ElemId = std::uint32_t;
using AutMap = std::function<Element(const Element&)>;
using ClassMask = boost::dynamic_bitset<std::uint64_t>;

struct GroupOptions {
  std::uint64_t enumeration_cap = 20000;
  // Permit an arithmetic-only handle (no element tables) for groups above
  // the cap; table-backed operations then throw unsupported-size.
  bool allow_unenumerated = false;
};

struct ConjugacyClass {
  std::uint32_t id = 0;
  ElemId representative = 0;
  std::uint64_t size = 0;
  std::uint32_t order = 0;
};

namespace detail {
struct GroupData;
}

/// Immutable, shareable realization of a finite group.
///
/// Products follow the left-to-right convention: for permutations,
/// `multiply(a, b)` applies a first, then b. Every table-backed query works
/// on dense ids ordered by canonical encoding, so id order is encoding order.
class GroupHandle {
 public:
  const GroupSpec& spec() const;
  std::uint64_t order() const;
  bool enumerated() const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t k) const;
  std::uint64_t element_order(const Element& a) const;
  bool contains(const Element& a) const;
  /// Throws foreign-element unless `contains(a)`.
  void require_member(const Element& a) const;
  std::vector<Element> generators() const;

  // Table-backed (enumerated handles only).
  std::size_t size() const;
  const Element& element(ElemId id) const;
  ElemId id(const Element& e) const;
  ElemId identity_id() const;
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  ElemId pow(ElemId a, std::int64_t k) const;
  /// g x g^-1
  ElemId conjugate(ElemId g, ElemId x) const;
  std::uint32_t order_of(ElemId a) const;
  std::uint32_t class_of(ElemId a) const;
  std::span<const ConjugacyClass> conjugacy_classes() const;
  std::span<const ElemId> generator_ids() const;
  /// True iff the ids generate the whole group.
  bool generates(std::span<const ElemId> ids) const;
  /// Subgroup generated by the ids, as a membership bitset over ids.
  boost::dynamic_bitset<std::uint64_t> subgroup(std::span<const ElemId> ids) const;
  /// Classes of all powers of elements in class `c` (includes the identity class).
  const ClassMask& power_classes(std::uint32_t c) const;
  /// Elements commuting with `x`.
  std::vector<ElemId> centralizer(ElemId x) const;

  // Automorphisms.
  bool aut_available() const;
  /// Reason string when unavailable; empty otherwise.
  const std::string& aut_unavailable_reason() const;
  /// Generators of Aut(G) as maps on encodings.
  std::vector<AutMap> aut_generators() const;
  /// Generators of Aut(G) as permutations of ids (enumerated handles only).
  const std::vector<std::vector<ElemId>>& aut_permutations() const;
  std::uint64_t aut_order() const;
  std::uint64_t center_order() const;
  std::uint64_t inn_order() const;
  std::uint64_t out_order() const;

  bool same_group(const GroupHandle& other) const;

 private:
  friend GroupHandle make_group(const GroupSpec&, const GroupOptions&);
  explicit GroupHandle(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
  const detail::GroupData& tables() const;

  std::shared_ptr<const detail::GroupData> data_;
};

/// Errors: invalid-spec, unsupported-size (order above the enumeration cap
/// unless `allow_unenumerated`).
GroupHandle make_group(const GroupSpec& spec, const GroupOptions& options = {});

}  // namespace hurwitz

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/group.hpp"

namespace hurwitz::detail {

struct AutData {
  std::vector<AutMap> generators;
  std::uint64_t order = 1;
};

// Encoding-level arithmetic for one family instance.
class FamilyArithmetic {
 public:
  virtual ~FamilyArithmetic() = default;

  virtual std::uint64_t order() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool valid(const Element& a) const = 0;
  /// All elements, any order.
  virtual std::vector<Element> elements() const = 0;
  virtual std::vector<Element> generators() const = 0;
  /// Automorphism generators, or nullopt with `reason` set.
  virtual std::optional<AutData> automorphisms(std::string& reason) const = 0;
  // Families without a closed-form Aut ask the group builder to search
  // generator images exhaustively instead.
  virtual bool brute_force_aut() const { return false; }

  virtual std::uint64_t element_order(const Element& a) const {
    const Element id = identity();
    Element x = a;
    std::uint64_t k = 1;
    while (x != id) {
      x = multiply(x, a);
      ++k;
    }
    return k;
  }
};

std::unique_ptr<FamilyArithmetic> make_permutation_family(int n, bool alternating);
std::unique_ptr<FamilyArithmetic> make_psl2_family(int p);
std::unique_ptr<FamilyArithmetic> make_abelian_family(std::vector<std::int64_t> factors);
std::unique_ptr<FamilyArithmetic> make_semidirect_family(std::vector<std::int64_t> moduli);

struct GroupData {
  GroupSpec spec;
  std::unique_ptr<FamilyArithmetic> arith;
  std::uint64_t order = 0;
  bool enumerated = false;

  std::vector<Element> elements;  // sorted by encoding
  ElemId identity = 0;
  std::unordered_map<Element, ElemId, ElementHash> index;
  std::vector<ElemId> mul_table;  // row-major when present
  std::vector<ElemId> inverse;
  std::vector<std::uint32_t> orders;
  std::vector<std::uint32_t> class_ids;
  std::vector<ConjugacyClass> classes;
  std::vector<ClassMask> power_classes;
  std::vector<ElemId> generator_ids;
  std::uint64_t center_order = 1;

  bool aut_ok = false;
  std::string aut_reason;
  AutData aut;
  std::vector<std::vector<ElemId>> aut_perms;
};

}  // namespace hurwitz::detail

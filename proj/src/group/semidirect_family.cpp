#include "family.hpp"
#include "hurwitz/numtheory.hpp"

namespace hurwitz::detail {
namespace {

// Z/2 acting by inversion on Z/m1 x ... x Z/mk; code (eps, i1, ..., ik) for t^eps r^i.
// From r t = t r^-1: (e1, i)(e2, j) = (e1 + e2, (-1)^e2 i + j).
class SemidirectFamily final : public FamilyArithmetic {
 public:
  explicit SemidirectFamily(std::vector<std::int64_t> moduli) : m_(std::move(moduli)) {}

  std::uint64_t order() const override {
    std::uint64_t o = 2;
    for (auto m : m_) o *= static_cast<std::uint64_t>(m);
    return o;
  }

  Element identity() const override { return Element{std::vector<std::int32_t>(m_.size() + 1, 0)}; }

  Element multiply(const Element& a, const Element& b) const override {
    Element out = a;
    out.code[0] = (a.code[0] + b.code[0]) % 2;
    const int sign = b.code[0] ? -1 : 1;
    for (std::size_t k = 0; k < m_.size(); ++k) {
      out.code[k + 1] = static_cast<std::int32_t>(nt::mod(sign * a.code[k + 1] + b.code[k + 1], m_[k]));
    }
    return out;
  }

  Element inverse(const Element& a) const override {
    if (a.code[0] == 1) return a;  // reflections are involutions
    Element out = a;
    for (std::size_t k = 0; k < m_.size(); ++k) {
      out.code[k + 1] = static_cast<std::int32_t>(nt::mod(-a.code[k + 1], m_[k]));
    }
    return out;
  }

  bool valid(const Element& a) const override {
    if (a.code.size() != m_.size() + 1 || a.code[0] < 0 || a.code[0] > 1) return false;
    for (std::size_t k = 0; k < m_.size(); ++k) {
      if (a.code[k + 1] < 0 || a.code[k + 1] >= m_[k]) return false;
    }
    return true;
  }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    Element cur = identity();
    for (std::uint64_t k = 0; k < order(); ++k) {
      out.push_back(cur);
      for (std::size_t i = m_.size() + 1; i-- > 0;) {
        const std::int64_t bound = i == 0 ? 2 : m_[i - 1];
        if (++cur.code[i] < bound) break;
        cur.code[i] = 0;
      }
    }
    return out;
  }

  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    Element t = identity();
    t.code[0] = 1;
    gens.push_back(t);
    for (std::size_t k = 0; k < m_.size(); ++k) {
      if (m_[k] == 1) continue;
      Element r = identity();
      r.code[k + 1] = 1;
      gens.push_back(std::move(r));
    }
    return gens;
  }

  bool brute_force_aut() const override { return true; }

  std::optional<AutData> automorphisms(std::string&) const override { return std::nullopt; }

 private:
  std::vector<std::int64_t> m_;
};

}  // namespace

std::unique_ptr<FamilyArithmetic> make_semidirect_family(std::vector<std::int64_t> moduli) {
  return std::make_unique<SemidirectFamily>(std::move(moduli));
}

}  // namespace hurwitz::detail

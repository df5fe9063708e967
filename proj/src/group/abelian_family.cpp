#include <numeric>

#include "family.hpp"
#include "hurwitz/numtheory.hpp"

namespace hurwitz::detail {
namespace {

class AbelianFamily final : public FamilyArithmetic {
 public:
  explicit AbelianFamily(std::vector<std::int64_t> factors) : n_(std::move(factors)) {}

  std::uint64_t order() const override {
    std::uint64_t o = 1;
    for (auto f : n_) o *= static_cast<std::uint64_t>(f);
    return o;
  }

  Element identity() const override { return Element{std::vector<std::int32_t>(n_.size(), 0)}; }

  Element multiply(const Element& a, const Element& b) const override {
    Element out = a;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      out.code[i] = static_cast<std::int32_t>((a.code[i] + b.code[i]) % n_[i]);
    }
    return out;
  }

  Element inverse(const Element& a) const override {
    Element out = a;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      out.code[i] = static_cast<std::int32_t>(nt::mod(-a.code[i], n_[i]));
    }
    return out;
  }

  bool valid(const Element& a) const override {
    if (a.code.size() != n_.size()) return false;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      if (a.code[i] < 0 || a.code[i] >= n_[i]) return false;
    }
    return true;
  }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    Element cur = identity();
    for (std::uint64_t k = 0; k < order(); ++k) {
      out.push_back(cur);
      for (std::size_t i = n_.size(); i-- > 0;) {
        if (++cur.code[i] < n_[i]) break;
        cur.code[i] = 0;
      }
    }
    return out;
  }

  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      Element e = identity();
      e.code[i] = 1 % n_[i];
      gens.push_back(std::move(e));
    }
    return gens;
  }

  std::uint64_t element_order(const Element& a) const override {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      const auto g = std::gcd(static_cast<std::int64_t>(a.code[i]), n_[i]);
      o = std::lcm(o, static_cast<std::uint64_t>(n_[i] / g));
    }
    return o;
  }

  bool brute_force_aut() const override { return n_.size() == 2 && n_[0] != n_[1]; }

  std::optional<AutData> automorphisms(std::string& reason) const override {
    if (n_.size() > 2) {
      reason = "automorphisms are realized for abelian groups of rank at most 2";
      return std::nullopt;
    }
    AutData aut;
    std::vector<std::int64_t> units;
    const std::int64_t n = n_.back();
    for (std::int64_t u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(u);
    }
    if (n_.size() == 1) {
      for (auto u : units) {
        if (u == 1) continue;
        aut.generators.push_back([n, u](const Element& x) {
          return Element{{static_cast<std::int32_t>(x.code[0] * u % n)}};
        });
      }
      aut.order = static_cast<std::uint64_t>(nt::euler_phi(n));
      return aut;
    }
    // GL(2, Z/n) acting on row vectors: elementary matrices and diag(u, 1).
    aut.generators.push_back([n](const Element& x) {
      return Element{{x.code[0], static_cast<std::int32_t>((x.code[0] + x.code[1]) % n)}};
    });
    aut.generators.push_back([n](const Element& x) {
      return Element{{static_cast<std::int32_t>((x.code[0] + x.code[1]) % n), x.code[1]}};
    });
    for (auto u : units) {
      if (u == 1) continue;
      aut.generators.push_back([n, u](const Element& x) {
        return Element{{static_cast<std::int32_t>(x.code[0] * u % n), x.code[1]}};
      });
    }
    std::uint64_t gl = static_cast<std::uint64_t>(n * n * n * n);
    for (auto [p, e] : nt::factorize(n)) {
      const auto q = static_cast<std::uint64_t>(p);
      gl = gl / (q * q * q) * ((q - 1) * (q * q - 1));
    }
    aut.order = gl;
    return aut;
  }

 private:
  std::vector<std::int64_t> n_;
};

}  // namespace

std::unique_ptr<FamilyArithmetic> make_abelian_family(std::vector<std::int64_t> factors) {
  return std::make_unique<AbelianFamily>(std::move(factors));
}

}  // namespace hurwitz::detail

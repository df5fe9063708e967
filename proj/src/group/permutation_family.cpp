#include <algorithm>
#include <numeric>

#include "family.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz::detail {
namespace {

Element wrap(perm::Perm p) { return Element{std::move(p)}; }

perm::Perm cycle_on(int from, int to, int n) {
  perm::Perm p = perm::identity(n);
  for (int i = from; i < to; ++i) p[i - 1] = i + 1;
  p[to - 1] = from;
  return p;
}

class PermutationFamily final : public FamilyArithmetic {
 public:
  PermutationFamily(int n, bool alternating) : n_(n), alternating_(alternating) {}

  std::uint64_t order() const override {
    std::uint64_t f = 1;
    for (int i = 2; i <= n_; ++i) f *= static_cast<std::uint64_t>(i);
    return (alternating_ && n_ >= 2) ? f / 2 : f;
  }

  Element identity() const override { return wrap(perm::identity(n_)); }

  Element multiply(const Element& a, const Element& b) const override {
    return wrap(perm::compose(a.code, b.code));
  }

  Element inverse(const Element& a) const override { return wrap(perm::inverse(a.code)); }

  bool valid(const Element& a) const override {
    if (static_cast<int>(a.code.size()) != n_ || !perm::is_valid(a.code)) return false;
    return !alternating_ || perm::is_even(a.code);
  }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    perm::Perm p = perm::identity(n_);
    do {
      if (!alternating_ || perm::is_even(p)) out.push_back(wrap(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    if (n_ < 2) return gens;
    if (!alternating_) {
      gens.push_back(wrap(cycle_on(1, 2, n_)));
      if (n_ > 2) gens.push_back(wrap(cycle_on(1, n_, n_)));
      return gens;
    }
    if (n_ < 3) return gens;
    gens.push_back(wrap(cycle_on(1, 3, n_)));
    if (n_ > 3) gens.push_back(wrap(n_ % 2 == 1 ? cycle_on(1, n_, n_) : cycle_on(2, n_, n_)));
    return gens;
  }

  std::optional<AutData> automorphisms(std::string& reason) const override {
    if (n_ == 6) {
      reason = "the exceptional outer automorphism of degree 6 is not realized";
      return std::nullopt;
    }
    // Conjugation by S_n; for n != 6 this is all of Aut(A_n) and Aut(S_n).
    AutData aut;
    std::vector<perm::Perm> conj;
    if (n_ >= 2) conj.push_back(cycle_on(1, 2, n_));
    if (n_ >= 3) conj.push_back(cycle_on(1, n_, n_));
    for (const auto& g : conj) {
      aut.generators.push_back([g, gi = perm::inverse(g)](const Element& x) {
        return wrap(perm::compose(perm::compose(gi, x.code), g));
      });
    }
    std::uint64_t sym = 1;
    for (int i = 2; i <= n_; ++i) sym *= static_cast<std::uint64_t>(i);
    if (alternating_) {
      aut.order = n_ <= 2 ? 1 : (n_ == 3 ? 2 : sym);
    } else {
      aut.order = n_ <= 2 ? 1 : sym;
    }
    return aut;
  }

  std::uint64_t element_order(const Element& a) const override { return perm::order(a.code); }

 private:
  int n_;
  bool alternating_;
};

}  // namespace

std::unique_ptr<FamilyArithmetic> make_permutation_family(int n, bool alternating) {
  return std::make_unique<PermutationFamily>(n, alternating);
}

}  // namespace hurwitz::detail

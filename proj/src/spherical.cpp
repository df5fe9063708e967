#include "hurwitz/spherical.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"
#include "subgroups.hpp"

namespace hurwitz {

// ---- TypeVector -----------------------------------------------------------

TypeVector::TypeVector(std::vector<std::uint32_t> o) : orders(std::move(o)) {
  if (orders.size() < 3) throw Error(ErrorKind::precondition, "a type needs at least 3 entries");
  for (auto m : orders) {
    if (m < 2) throw Error(ErrorKind::precondition, "type entries must be at least 2");
  }
  std::sort(orders.begin(), orders.end());
}

TypeVector TypeVector::parse(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw Error(ErrorKind::precondition, "malformed type '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return TypeVector(std::move(out));
}

std::string TypeVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  return out;
}

bool is_hyperbolic(std::uint32_t r, std::uint32_t s, std::uint32_t t) {
  if (r < 2 || s < 2 || t < 2) throw Error(ErrorKind::precondition, "triple entries must be at least 2");
  const std::uint64_t a = r, b = s, c = t;
  return b * c + a * c + a * b < a * b * c;
}

// ---- helpers --------------------------------------------------------------

namespace {

bool is_permutation_family(const GroupHandle& g) {
  return g.spec().family == Family::symmetric || g.spec().family == Family::alternating;
}

bool generates_lazy(const GroupHandle& g, std::span<const Element> tuple) {
  if (!is_permutation_family(g)) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": generation test needs an enumerated group");
  }
  std::vector<perm::Perm> gens;
  for (const auto& e : tuple) gens.push_back(e.code);
  return perm::group_order(gens, static_cast<int>(g.spec().params[0])) == g.order();
}

std::set<perm::CycleType> nontrivial_power_types(const SphericalSystem& t) {
  std::set<perm::CycleType> out;
  for (const auto& e : t.elements()) {
    for (auto& type : perm::power_types(perm::cycle_type(e.code))) {
      if (!type.empty()) out.insert(std::move(type));
    }
  }
  return out;
}

}  // namespace

std::optional<TypeVector> is_spherical_system(const GroupHandle& g, std::span<const Element> tuple) {
  if (tuple.size() < 3) throw Error(ErrorKind::precondition, "a spherical system needs r >= 3 entries");
  for (const auto& e : tuple) g.require_member(e);
  Element prod = g.identity();
  for (const auto& e : tuple) prod = g.multiply(prod, e);
  if (prod != g.identity()) return std::nullopt;
  std::vector<std::uint32_t> orders;
  for (const auto& e : tuple) {
    const auto o = g.element_order(e);
    if (o < 2) return std::nullopt;  // types have entries >= 2
    orders.push_back(static_cast<std::uint32_t>(o));
  }
  if (g.enumerated()) {
    std::vector<ElemId> ids;
    for (const auto& e : tuple) ids.push_back(g.id(e));
    if (!g.generates(ids)) return std::nullopt;
  } else if (!generates_lazy(g, tuple)) {
    return std::nullopt;
  }
  return TypeVector(std::move(orders));
}

// ---- SphericalSystem ------------------------------------------------------

SphericalSystem::SphericalSystem(GroupHandle group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  auto type = is_spherical_system(group_, elements_);
  if (!type) {
    throw Error(ErrorKind::precondition, "tuple is not a spherical system of " + group_.spec().str());
  }
  type_ = std::move(*type);
  if (group_.enumerated()) {
    sigma_ = ClassMask(group_.conjugacy_classes().size());
    for (const auto& e : elements_) sigma_ |= group_.power_classes(group_.class_of(group_.id(e)));
  }
}

const ClassMask& SphericalSystem::sigma_classes() const {
  if (!group_.enumerated()) {
    throw Error(ErrorKind::unsupported_size, group_.spec().str() + ": Sigma classes need an enumerated group");
  }
  return sigma_;
}

std::string SphericalSystem::serialize() const {
  std::string out = group_.spec().str() + '\t' + type_.str() + '\t';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ';';
    out += elements_[i].str();
  }
  return out;
}

SphericalSystem SphericalSystem::deserialize(std::string_view line, const GroupOptions& options) {
  const auto tab1 = line.find('\t');
  const auto tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos) {
    throw Error(ErrorKind::precondition, "system record needs three tab-separated fields");
  }
  auto g = make_group(GroupSpec::parse(line.substr(0, tab1)), options);
  const auto declared = TypeVector::parse(line.substr(tab1 + 1, tab2 - tab1 - 1));
  std::vector<Element> elems;
  auto rest = line.substr(tab2 + 1);
  while (true) {
    const auto semi = rest.find(';');
    elems.push_back(Element::parse(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  SphericalSystem t(std::move(g), std::move(elems));
  if (t.type() != declared) throw Error(ErrorKind::precondition, "declared type does not match the entries");
  return t;
}

std::vector<Element> sigma_set(const SphericalSystem& t) {
  const auto& g = t.group();
  if (!g.enumerated()) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": Sigma-set listing needs an enumerated group");
  }
  const auto& mask = t.sigma_classes();
  std::vector<Element> out;
  for (ElemId x = 0; x < g.size(); ++x) {
    if (mask.test(g.class_of(x))) out.push_back(g.element(x));
  }
  return out;
}

bool are_disjoint(const SphericalSystem& t1, const SphericalSystem& t2) {
  if (!t1.group().same_group(t2.group())) {
    throw Error(ErrorKind::group_mismatch, t1.group().spec().str() + " vs " + t2.group().spec().str());
  }
  const auto& g = t1.group();
  if (g.enumerated()) {
    auto common = t1.sigma_classes() & t2.sigma_classes();
    common.reset(g.class_of(g.identity_id()));
    return common.none();
  }
  if (!is_permutation_family(g)) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": disjointness needs an enumerated group");
  }
  const auto a = nontrivial_power_types(t1);
  const auto b = nontrivial_power_types(t2);
  return std::none_of(a.begin(), a.end(), [&](const auto& type) { return b.count(type) > 0; });
}

RamificationStructure::RamificationStructure(SphericalSystem a, SphericalSystem b)
    : first(std::move(a)), second(std::move(b)) {
  if (!are_disjoint(first, second)) throw Error(ErrorKind::precondition, "systems are not disjoint");
}

// ---- enumeration ----------------------------------------------------------

namespace {

struct TypeState {
  std::vector<std::uint32_t> distinct;
  std::vector<std::uint32_t> counts;
};

TypeState split_type(const TypeVector& tau) {
  TypeState s;
  for (auto m : tau.orders) {
    if (s.distinct.empty() || s.distinct.back() != m) {
      s.distinct.push_back(m);
      s.counts.push_back(0);
    }
    ++s.counts.back();
  }
  return s;
}

class SystemEnumerator {
 public:
  SystemEnumerator(const GroupHandle& g, const TypeVector& tau) : g_(g), r_(tau.size()), type_(split_type(tau)) {
    by_order_.resize(type_.distinct.size());
    for (ElemId x = 0; x < g.size(); ++x) {
      for (std::size_t j = 0; j < type_.distinct.size(); ++j) {
        if (g.order_of(x) == type_.distinct[j]) by_order_[j].push_back(x);
      }
    }
  }

  std::vector<ElemId> first_candidates(bool up_to_inner) const {
    std::vector<ElemId> out;
    for (const auto& ids : by_order_) {
      for (ElemId x : ids) {
        if (!up_to_inner || g_.conjugacy_classes()[g_.class_of(x)].representative == x) out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // All systems starting with x1, appended in lexicographic order.
  void run(ElemId x1, detail::SubgroupCache& cache, std::vector<IdTuple>& out) const {
    auto counts = type_.counts;
    const auto j = slot(g_.order_of(x1));
    --counts[j];
    IdTuple tuple{x1};
    recurse(tuple, x1, cache.join(detail::SubgroupCache::trivial(), x1), counts, cache, out);
  }

 private:
  std::size_t slot(std::uint32_t order) const {
    return static_cast<std::size_t>(std::find(type_.distinct.begin(), type_.distinct.end(), order) -
                                    type_.distinct.begin());
  }

  void recurse(IdTuple& tuple, ElemId prod, std::uint32_t h, std::vector<std::uint32_t>& counts,
               detail::SubgroupCache& cache, std::vector<IdTuple>& out) const {
    if (tuple.size() + 1 == r_) {
      if (!cache.whole(h)) return;
      const ElemId last = g_.inv(prod);
      const auto j = slot(g_.order_of(last));
      if (j == counts.size() || counts[j] != 1) return;
      tuple.push_back(last);
      out.push_back(tuple);
      tuple.pop_back();
      return;
    }
    // Candidates in increasing id order across all order slots.
    std::vector<ElemId> cand;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j]) cand.insert(cand.end(), by_order_[j].begin(), by_order_[j].end());
    }
    std::sort(cand.begin(), cand.end());
    for (ElemId x : cand) {
      const auto j = slot(g_.order_of(x));
      --counts[j];
      tuple.push_back(x);
      recurse(tuple, g_.mul(prod, x), cache.join(h, x), counts, cache, out);
      tuple.pop_back();
      ++counts[j];
    }
  }

  const GroupHandle& g_;
  std::size_t r_;
  TypeState type_;
  std::vector<std::vector<ElemId>> by_order_;
};

}  // namespace

std::vector<IdTuple> enumerate_system_ids(const GroupHandle& g, const TypeVector& tau,
                                          const EnumerateOptions& options) {
  if (!g.enumerated()) {
    throw Error(ErrorKind::unsupported_size, g.spec().str() + ": enumeration needs an enumerated group");
  }
  const long double first = options.up_to_inner ? g.conjugacy_classes().size() : g.size();
  const long double bound = first * std::pow(static_cast<long double>(g.size()), tau.size() - 2);
  if (bound > static_cast<long double>(options.budget)) {
    throw Error(ErrorKind::budget_exceeded, "candidate bound " + std::to_string(static_cast<double>(bound)) +
                                                " exceeds budget " + std::to_string(options.budget));
  }
  SystemEnumerator en(g, tau);
  const auto firsts = en.first_candidates(options.up_to_inner);
  std::vector<std::vector<IdTuple>> parts(firsts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    detail::SubgroupCache cache(g);
    for (std::size_t i = next++; i < firsts.size(); i = next++) en.run(firsts[i], cache, parts[i]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(firsts.size())));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::vector<IdTuple> out;
  for (auto& p : parts) {
    for (auto& t : p) out.push_back(std::move(t));
  }
  return out;
}

std::vector<SphericalSystem> enumerate_systems(const GroupHandle& g, const TypeVector& tau,
                                               const EnumerateOptions& options) {
  std::vector<SphericalSystem> out;
  for (const auto& ids : enumerate_system_ids(g, tau, options)) {
    std::vector<Element> elems;
    for (auto x : ids) elems.push_back(g.element(x));
    out.emplace_back(g, std::move(elems));
  }
  return out;
}

std::string_view to_string(SearchResult::Outcome outcome) {
  switch (outcome) {
    case SearchResult::Outcome::found: return "found";
    case SearchResult::Outcome::none: return "none";
    case SearchResult::Outcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

}  // namespace hurwitz

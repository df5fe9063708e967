#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "family.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/numtheory.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

namespace {

constexpr std::size_t kTableLimit = 2600;  // multiplication table up to ~27 MB
constexpr std::size_t kBruteAutLimit = 2000;

std::vector<std::int64_t> parse_ints(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw Error(ErrorKind::invalid_spec, "malformed integer list in " + std::string(what) + ": '" +
                                               std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

// ---- GroupSpec ------------------------------------------------------------

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::invalid_spec, "expected family:params, got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  GroupSpec spec;
  if (name == "sym") {
    spec.family = Family::symmetric;
  } else if (name == "alt") {
    spec.family = Family::alternating;
  } else if (name == "psl2") {
    spec.family = Family::psl2;
  } else if (name == "ab") {
    spec.family = Family::abelian;
  } else if (name == "dih") {
    spec.family = Family::dihedral;
  } else if (name == "z2semi") {
    spec.family = Family::z2_semidirect;
  } else {
    throw Error(ErrorKind::invalid_spec, "unknown family '" + std::string(name) + "'");
  }
  spec.params = parse_ints(text.substr(colon + 1), "group spec");
  spec.validate();
  return spec;
}

std::string GroupSpec::str() const {
  static constexpr const char* names[] = {"sym", "alt", "psl2", "ab", "dih", "z2semi"};
  std::string out = names[static_cast<int>(family)];
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

void GroupSpec::validate() const {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw Error(ErrorKind::invalid_spec, str() + " expects " + std::to_string(count) + " parameter(s)");
    }
  };
  for (auto v : params) {
    if (v < 1) throw Error(ErrorKind::invalid_spec, str() + ": parameters must be positive");
  }
  switch (family) {
    case Family::symmetric:
    case Family::alternating:
      need(1);
      if (params[0] > 20) throw Error(ErrorKind::unsupported_size, str() + ": degree above 20");
      break;
    case Family::psl2:
      need(1);
      if (params[0] == 2 || !nt::is_prime(params[0])) {
        throw Error(ErrorKind::invalid_spec, str() + ": p must be an odd prime");
      }
      if (params[0] > 100000) throw Error(ErrorKind::unsupported_size, str() + ": p too large");
      break;
    case Family::abelian:
      if (params.empty()) throw Error(ErrorKind::invalid_spec, "ab: needs at least one invariant factor");
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] < 2) throw Error(ErrorKind::invalid_spec, str() + ": invariant factors must be >= 2");
        if (i && params[i] % params[i - 1] != 0) {
          throw Error(ErrorKind::invalid_spec, str() + ": invariant factors must form a divisibility chain");
        }
      }
      break;
    case Family::dihedral:
      need(1);
      break;
    case Family::z2_semidirect:
      need(2);
      break;
  }
  long double order = 1;
  for (auto v : params) order *= static_cast<long double>(v);
  if (family != Family::symmetric && family != Family::alternating && order > 1e15L) {
    throw Error(ErrorKind::unsupported_size, str() + ": order too large");
  }
}

GroupSpec symmetric_spec(int n) { return {Family::symmetric, {n}}; }
GroupSpec alternating_spec(int n) { return {Family::alternating, {n}}; }
GroupSpec psl2_spec(int p) { return {Family::psl2, {p}}; }
GroupSpec abelian_spec(std::vector<std::int64_t> factors) { return {Family::abelian, std::move(factors)}; }
GroupSpec dihedral_spec(int n) { return {Family::dihedral, {n}}; }
GroupSpec z2_semidirect_spec(int m, int n) { return {Family::z2_semidirect, {m, n}}; }

// ---- Element --------------------------------------------------------------

std::string Element::str() const {
  std::string out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(code[i]);
  }
  return out;
}

Element Element::parse(std::string_view text) {
  while (!text.empty() && (text.front() == '[' || text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ']' || text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
  Element e;
  try {
    for (auto v : parse_ints(text, "element")) e.code.push_back(static_cast<std::int32_t>(v));
  } catch (const Error&) {
    throw Error(ErrorKind::foreign_element, "malformed element encoding '" + std::string(text) + "'");
  }
  return e;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : e.code) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 0x100000001b3ull;
  }
  return h;
}

// ---- construction ---------------------------------------------------------

namespace {

using detail::GroupData;

struct Builder {
  GroupData& d;

  ElemId mul(ElemId a, ElemId b) const {
    if (!d.mul_table.empty()) return d.mul_table[static_cast<std::size_t>(a) * d.elements.size() + b];
    return d.index.at(d.arith->multiply(d.elements[a], d.elements[b]));
  }

  void build_tables() {
    auto elems = d.arith->elements();
    std::sort(elems.begin(), elems.end());
    d.elements = std::move(elems);
    const std::size_t n = d.elements.size();
    d.index.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) d.index.emplace(d.elements[i], static_cast<ElemId>(i));
    d.identity = d.index.at(d.arith->identity());

    if (n <= kTableLimit) {
      d.mul_table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          d.mul_table[a * n + b] = d.index.at(d.arith->multiply(d.elements[a], d.elements[b]));
        }
      }
    }
    d.inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) d.inverse[a] = d.index.at(d.arith->inverse(d.elements[a]));
    d.orders.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t k = 1;
      for (ElemId x = static_cast<ElemId>(a); x != d.identity; x = mul(x, static_cast<ElemId>(a))) ++k;
      d.orders[a] = k;
    }
    for (const auto& g : d.arith->generators()) d.generator_ids.push_back(d.index.at(g));
  }

  void build_classes() {
    const std::size_t n = d.elements.size();
    constexpr std::uint32_t unset = ~0u;
    d.class_ids.assign(n, unset);
    std::vector<ElemId> queue;
    for (std::size_t start = 0; start < n; ++start) {
      if (d.class_ids[start] != unset) continue;
      const auto cid = static_cast<std::uint32_t>(d.classes.size());
      queue.assign(1, static_cast<ElemId>(start));
      d.class_ids[start] = cid;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (ElemId g : d.generator_ids) {
          const ElemId y = mul(mul(g, queue[k]), d.inverse[g]);
          if (d.class_ids[y] == unset) {
            d.class_ids[y] = cid;
            queue.push_back(y);
          }
        }
      }
      d.classes.push_back({cid, static_cast<ElemId>(start), queue.size(), d.orders[start]});
    }
    d.power_classes.assign(d.classes.size(), ClassMask(d.classes.size()));
    for (const auto& c : d.classes) {
      ElemId x = d.identity;
      for (std::uint32_t k = 0; k < c.order; ++k) {
        d.power_classes[c.id].set(d.class_ids[x]);
        x = mul(x, c.representative);
      }
    }
    d.center_order = 0;
    for (const auto& c : d.classes) d.center_order += (c.size == 1);
  }

  // Exhaustive search over generator images; consistency along every Cayley
  // graph edge makes the map a homomorphism.
  void brute_force_aut() {
    const std::size_t n = d.elements.size();
    const auto& gens = d.generator_ids;
    std::vector<std::vector<ElemId>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t h = 0; h < n; ++h) {
        if (d.orders[h] == d.orders[gens[i]]) candidates[i].push_back(static_cast<ElemId>(h));
      }
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    std::vector<std::vector<ElemId>> found;
    constexpr ElemId unset = ~0u;
    std::vector<ElemId> image(n);
    std::vector<char> hit(n);
    std::vector<ElemId> queue;
    while (true) {
      std::fill(image.begin(), image.end(), unset);
      std::fill(hit.begin(), hit.end(), 0);
      image[d.identity] = d.identity;
      hit[d.identity] = 1;
      queue.assign(1, d.identity);
      bool ok = true;
      for (std::size_t k = 0; k < queue.size() && ok; ++k) {
        const ElemId x = queue[k];
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const ElemId y = mul(x, gens[i]);
          const ElemId fy = mul(image[x], candidates[i][pick[i]]);
          if (image[y] == unset) {
            if (hit[fy]) {
              ok = false;
              break;
            }
            image[y] = fy;
            hit[fy] = 1;
            queue.push_back(y);
          } else if (image[y] != fy) {
            ok = false;
            break;
          }
        }
      }
      if (ok && queue.size() == n) found.push_back(image);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    d.aut.order = found.size();
    // Keep a generating subset: add maps while they enlarge the generated group.
    std::vector<perm::Perm> chosen;
    std::uint64_t reached = 1;
    for (const auto& f : found) {
      if (reached == found.size()) break;
      perm::Perm p(n);
      for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<std::int32_t>(f[x] + 1);
      chosen.push_back(p);
      const auto next = perm::group_order(chosen, static_cast<int>(n));
      if (next == reached) {
        chosen.pop_back();
        continue;
      }
      reached = next;
      d.aut_perms.push_back(f);
    }
    d.aut_ok = true;
    auto data = &d;
    for (const auto& f : d.aut_perms) {
      d.aut.generators.push_back([data, f](const Element& x) { return data->elements[f[data->index.at(x)]]; });
    }
  }

  void build_aut() {
    if (d.arith->brute_force_aut()) {
      if (d.elements.size() > kBruteAutLimit) {
        d.aut_reason = "automorphism search limited to order " + std::to_string(kBruteAutLimit);
        return;
      }
      brute_force_aut();
      return;
    }
    auto aut = d.arith->automorphisms(d.aut_reason);
    if (!aut) return;
    d.aut_ok = true;
    d.aut = std::move(*aut);
    if (!d.enumerated) return;
    for (const auto& f : d.aut.generators) {
      std::vector<ElemId> p(d.elements.size());
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = d.index.at(f(d.elements[x]));
      d.aut_perms.push_back(std::move(p));
    }
  }
};

}  // namespace

GroupHandle make_group(const GroupSpec& spec, const GroupOptions& options) {
  spec.validate();
  auto data = std::make_shared<GroupData>();
  data->spec = spec;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::symmetric: data->arith = detail::make_permutation_family(static_cast<int>(p[0]), false); break;
    case Family::alternating: data->arith = detail::make_permutation_family(static_cast<int>(p[0]), true); break;
    case Family::psl2: data->arith = detail::make_psl2_family(static_cast<int>(p[0])); break;
    case Family::abelian: data->arith = detail::make_abelian_family(p); break;
    case Family::dihedral: data->arith = detail::make_semidirect_family({p[0]}); break;
    case Family::z2_semidirect: data->arith = detail::make_semidirect_family({p[0], p[1]}); break;
  }
  data->order = data->arith->order();
  data->enumerated = data->order <= options.enumeration_cap;
  if (!data->enumerated && !options.allow_unenumerated) {
    throw Error(ErrorKind::unsupported_size, spec.str() + " has order " + std::to_string(data->order) +
                                                 " above the enumeration cap " +
                                                 std::to_string(options.enumeration_cap));
  }
  Builder b{*data};
  if (data->enumerated) {
    b.build_tables();
    b.build_classes();
  }
  if (!data->enumerated && data->arith->brute_force_aut()) {
    data->aut_reason = "automorphism search needs an enumerated group";
  } else {
    b.build_aut();
  }
  return GroupHandle(std::move(data));
}

// ---- GroupHandle ----------------------------------------------------------

const GroupSpec& GroupHandle::spec() const { return data_->spec; }
std::uint64_t GroupHandle::order() const { return data_->order; }
bool GroupHandle::enumerated() const { return data_->enumerated; }

Element GroupHandle::identity() const { return data_->arith->identity(); }

Element GroupHandle::multiply(const Element& a, const Element& b) const {
  require_member(a);
  require_member(b);
  return data_->arith->multiply(a, b);
}

Element GroupHandle::inverse(const Element& a) const {
  require_member(a);
  return data_->arith->inverse(a);
}

Element GroupHandle::power(const Element& a, std::int64_t k) const {
  require_member(a);
  Element base = k < 0 ? data_->arith->inverse(a) : a;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element acc = data_->arith->identity();
  while (e) {
    if (e & 1) acc = data_->arith->multiply(acc, base);
    base = data_->arith->multiply(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t GroupHandle::element_order(const Element& a) const {
  require_member(a);
  if (data_->enumerated) return data_->orders[data_->index.at(a)];
  return data_->arith->element_order(a);
}

bool GroupHandle::contains(const Element& a) const { return data_->arith->valid(a); }

void GroupHandle::require_member(const Element& a) const {
  if (!contains(a)) {
    throw Error(ErrorKind::foreign_element, "'" + a.str() + "' is not an element of " + data_->spec.str());
  }
}

std::vector<Element> GroupHandle::generators() const { return data_->arith->generators(); }

const detail::GroupData& GroupHandle::tables() const {
  if (!data_->enumerated) {
    throw Error(ErrorKind::unsupported_size, data_->spec.str() + " is not enumerated (order " +
                                                 std::to_string(data_->order) + ")");
  }
  return *data_;
}

std::size_t GroupHandle::size() const { return tables().elements.size(); }
const Element& GroupHandle::element(ElemId id) const { return tables().elements.at(id); }

ElemId GroupHandle::id(const Element& e) const {
  const auto& t = tables();
  auto it = t.index.find(e);
  if (it == t.index.end()) {
    throw Error(ErrorKind::foreign_element, "'" + e.str() + "' is not an element of " + data_->spec.str());
  }
  return it->second;
}

ElemId GroupHandle::identity_id() const { return tables().identity; }

ElemId GroupHandle::mul(ElemId a, ElemId b) const {
  const auto& t = *data_;
  if (!t.mul_table.empty()) return t.mul_table[static_cast<std::size_t>(a) * t.elements.size() + b];
  return tables().index.at(t.arith->multiply(t.elements[a], t.elements[b]));
}

ElemId GroupHandle::inv(ElemId a) const { return tables().inverse[a]; }

ElemId GroupHandle::pow(ElemId a, std::int64_t k) const {
  const auto& t = tables();
  const auto ord = static_cast<std::int64_t>(t.orders[a]);
  k %= ord;
  if (k < 0) k += ord;
  ElemId acc = t.identity;
  for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

ElemId GroupHandle::conjugate(ElemId g, ElemId x) const { return mul(mul(g, x), inv(g)); }
std::uint32_t GroupHandle::order_of(ElemId a) const { return tables().orders[a]; }
std::uint32_t GroupHandle::class_of(ElemId a) const { return tables().class_ids[a]; }
std::span<const ConjugacyClass> GroupHandle::conjugacy_classes() const { return tables().classes; }
std::span<const ElemId> GroupHandle::generator_ids() const { return tables().generator_ids; }

boost::dynamic_bitset<std::uint64_t> GroupHandle::subgroup(std::span<const ElemId> ids) const {
  const auto& t = tables();
  boost::dynamic_bitset<std::uint64_t> in(t.elements.size());
  std::vector<ElemId> queue{t.identity};
  in.set(t.identity);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (ElemId g : ids) {
      const ElemId y = mul(queue[k], g);
      if (!in.test(y)) {
        in.set(y);
        queue.push_back(y);
      }
    }
  }
  return in;
}

bool GroupHandle::generates(std::span<const ElemId> ids) const {
  return subgroup(ids).count() == tables().elements.size();
}

const ClassMask& GroupHandle::power_classes(std::uint32_t c) const { return tables().power_classes.at(c); }

std::vector<ElemId> GroupHandle::centralizer(ElemId x) const {
  std::vector<ElemId> out;
  const auto n = static_cast<ElemId>(size());
  for (ElemId g = 0; g < n; ++g) {
    if (mul(g, x) == mul(x, g)) out.push_back(g);
  }
  return out;
}

bool GroupHandle::aut_available() const { return data_->aut_ok; }
const std::string& GroupHandle::aut_unavailable_reason() const { return data_->aut_reason; }

namespace {
void require_aut(const detail::GroupData& d) {
  if (!d.aut_ok) throw Error(ErrorKind::aut_unavailable, d.spec.str() + ": " + d.aut_reason);
}
}  // namespace

std::vector<AutMap> GroupHandle::aut_generators() const {
  require_aut(*data_);
  return data_->aut.generators;
}

const std::vector<std::vector<ElemId>>& GroupHandle::aut_permutations() const {
  require_aut(*data_);
  return tables().aut_perms;
}

std::uint64_t GroupHandle::aut_order() const {
  require_aut(*data_);
  return data_->aut.order;
}

std::uint64_t GroupHandle::center_order() const {
  if (data_->enumerated) return data_->center_order;
  // Only large groups skip enumeration; of those, the abelian ones are their own center.
  return data_->spec.family == Family::abelian ? data_->order : 1;
}
std::uint64_t GroupHandle::inn_order() const { return data_->order / center_order(); }
std::uint64_t GroupHandle::out_order() const { return aut_order() / inn_order(); }

bool GroupHandle::same_group(const GroupHandle& other) const {
  return data_ == other.data_ || data_->spec == other.data_->spec;
}

}  // namespace hurwitz

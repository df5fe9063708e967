#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/group.hpp"
#include "json.hpp"

namespace hurwitz::verify {

// pass / fail concern this implementation. `refuted` marks a published
// closed form contradicted by two independent brute-force counts that agree
// with each other; it is reported but does not fail a run.
enum class Status { pass, fail, refuted };
std::string_view to_string(Status s);

struct Check {
  std::string suite;
  std::string name;
  Status status = Status::pass;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();

  std::string json_line() const;
};

using Sink = std::function<void(const Check&)>;

struct VerifyOptions {
  std::uint64_t max_order = 60;          // registry bound for the group, spherical, braid and invariants suites
  std::uint64_t abelian_max_order = 0;   // classification sweep; 0 means max_order
  std::int64_t dihedral_max = 20;
  std::int64_t semidirect_max = 8;
  std::int64_t trace_max_p = 100;
  std::vector<int> psl2_primes{7, 11, 13};
  std::vector<int> psl2_h_primes{7, 11, 13};
  int growth_min = 7;
  int growth_max = 12;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

/// Every supported family instance of order <= max_order, one per
/// isomorphism-relevant parameter choice, in a fixed order.
std::vector<GroupSpec> registry(std::uint64_t max_order);

void group_suite(const VerifyOptions& o, const Sink& sink);
void spherical_suite(const VerifyOptions& o, const Sink& sink);
/// Braid-orbit lemmas on 3- and 4-systems, then h against its bounds.
void braid_suite(const VerifyOptions& o, const Sink& sink);
void invariants_suite(const VerifyOptions& o, const Sink& sink);
void psl2_suite(const VerifyOptions& o, const Sink& sink);
void abelian_suite(const VerifyOptions& o, const Sink& sink);
void nonexistence_suite(const VerifyOptions& o, const Sink& sink);
void growth_suite(const VerifyOptions& o, const Sink& sink);

/// All suites in a fixed order.
void run_all(const VerifyOptions& o, const Sink& sink);

/// The fixed type pair of the A_n growth check.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> growth_types();

}  // namespace hurwitz::verify

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cltb/lattice.hpp"

namespace cltb {

enum class Relation { approx, le, ge };

// One comparison.  For `le` the check passes when computed <= expected
// + tolerance, for `ge` when computed >= expected - tolerance.
struct Check {
  std::string scenario;
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::approx;
  std::string provenance;  // published, derived or trivial
  bool pass = false;
  double margin = 0.0;  // slack left, negative on failure
  std::string note;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(Check c);
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  nlohmann::json to_json() const;
};

// suite: lemmas, dominance, tables, examples or all
Report run_verify(const std::string& suite, std::uint64_t seed);

struct Table {
  std::string id;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
// custom takes {"header": [...], "rows": [[...], ...]}
Table render_table(const std::string& id, const nlohmann::json& custom = nullptr);
std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

// Named laws used by the dominance checks, all with finite support.
std::vector<std::pair<std::string, LatticeDist>> standard_laws();

// Standardized n-fold sum of d.
LatticeDist standardized_sum(const LatticeDist& d, int n);

// Largest |F(x) - Phi(x)| with F taken from either side at x.
double pointwise_gap(const LatticeDist& standardized, double x);

std::string format_number(double x);

}  // namespace cltb

namespace cltb {

// Pieces of run_verify, exposed for the acceptance gate.
void verify_lemmas(Report& r, std::uint64_t seed);
void verify_uniform_dominance(Report& r);
void verify_random_sum_dominance(Report& r, std::uint64_t seed);
void verify_tables(Report& r);
void verify_examples(Report& r);

// Deterministic uniform(0,1) stream; the same seed gives the same draws
// on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed);
  double next();
  double range(double lo, double hi) { return lo + (hi - lo) * next(); }
  int integer(int lo, int hi);  // inclusive

 private:
  std::uint64_t state_;
};

// Random finitely supported law on a grid, for property checks.
LatticeDist random_lattice(UniformStream& u, int max_atoms = 6);

}  // namespace cltb

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fairnet/instance.hpp"

namespace fairnet {

// Seeded generator with fixed sampling algorithms, so a given seed yields
// byte-identical corpora everywhere (std:: distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
  }
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  std::string family = "er";  // er | path | star | clique | reduced-3col
  int count = 10;
  int agents = 4;
  int goods = 4;
  double edge_density = 0.5;       // er only
  double valuation_density = 0.5;  // probability of a 1 entry
  std::uint64_t seed = 1;
};

struct GeneratedInstance {
  std::string name;
  Instance instance;
};

// Instances are produced in a fixed order; entry names embed the family,
// parameters, seed and index.
std::vector<GeneratedInstance> generate_corpus(const GenOptions& opts);

// Random instance helpers reused by tests.
Instance random_instance(Rng& rng, int agents, int goods, double edge_density,
                         double valuation_density);

}  // namespace fairnet

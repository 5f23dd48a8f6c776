#pragma once

#include "dps/exponent.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dps {

// Word (g_1, ..., g_k) is the product s_{g_1} ... s_{g_k}; it acts rightmost first.
using Word = std::vector<int>;

struct WeylElement {
  Word word;
  IntMatrix action; // on omega coordinates: (w.lambda) = action * lambda
};

struct WeylGroupTable {
  std::string type_label;
  std::vector<Word> words; // BFS order; words[0] is the identity
  std::size_t longest = 0;
  bool from_cache = false;
};

class CacheError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string format_word(const Word& w); // "w[4,2,3,5,4]" with 1-based letters
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

Weight reflect(const RootDatum& d, int i, const Weight& lambda);
Weight apply(const RootDatum& d, const Word& w, const Weight& lambda);
Exponent apply(const RootDatum& d, const Word& w, const Exponent& lambda);
std::vector<int> apply_to_root(const RootDatum& d, const Word& w, const std::vector<int>& root);

WeylElement make_element(const RootDatum& d, const Word& w);
bool same_element(const RootDatum& d, const Word& a, const Word& b);

// Number of positive roots sent negative.
int inversion_count(const RootDatum& d, const Word& w);

std::uint64_t weyl_group_order(const RootDatum& d);
std::uint64_t weyl_subgroup_order(const RootDatum& d, NodeSet theta);

// Full enumeration; uses and refreshes the on-disk cache when cache_dir is given.
WeylGroupTable enumerate_weyl(const RootDatum& d, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

// Elements w with w(Phi+_M) > 0 and w^{-1}(Phi+_L) > 0, filtered from the full table.
std::vector<Word> minimal_coset_reps(const RootDatum& d, const WeylGroupTable& table, NodeSet theta_l, NodeSet theta_m);
// W^{M,T} by the marker walk: shortest representatives of W/W_M, BFS order.
std::vector<Word> minimal_right_coset_reps(const RootDatum& d, NodeSet theta_m);
// Minimal reps of W_J / W_{J_M}, generators restricted to J.
std::vector<Word> minimal_right_coset_reps(const RootDatum& d, NodeSet j, NodeSet theta_m);

// Elements of the parabolic subgroup W_J, BFS order.
std::vector<Word> parabolic_elements(const RootDatum& d, NodeSet j);

bool is_antidominant(const Exponent& e);
// w with w.lambda anti-dominant in the real part; lowest positive index first.
std::pair<Word, Exponent> to_antidominant(const RootDatum& d, const Exponent& lambda);

struct Stabilizer {
  std::uint64_t order = 1;
  std::vector<Word> generators;
  std::vector<Word> elements;
};
Stabilizer stabilizer(const RootDatum& d, const Exponent& lambda);

// BFS orbit, lowest generator first.
std::vector<Exponent> orbit(const RootDatum& d, const Exponent& lambda);
bool same_orbit(const RootDatum& d, const Exponent& a, const Exponent& b);

} // namespace dps

#pragma once

#include "dps/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dps {

// Node indices are 0-based everywhere in the API; text I/O is 1-based.
using NodeSet = std::uint32_t;
using Weight = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<int>>;

class RootDatumError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RootDatum {
  int rank = 0;
  IntMatrix cartan;
  IntMatrix positive_roots;          // simple-root coordinates, lex order
  std::vector<std::vector<int>> adj; // diagram neighbours, ascending
  std::string type_label;
};

struct Component {
  std::string type_label; // "A3", "D4", "E6", ...
  std::vector<int> nodes; // chain order; D/E: centre first, then arms by index
};

RootDatum build_root_datum(const std::string& type_label);
RootDatum root_datum_from_cartan(const IntMatrix& cartan, const std::string& label = "");
// Plain text: rank, then rank rows of integers.
IntMatrix read_cartan_file(const std::string& path);

inline bool contains(NodeSet s, int i) { return (s >> i) & 1u; }
inline NodeSet with(NodeSet s, int i) { return s | (NodeSet(1) << i); }
NodeSet full_set(const RootDatum& d);
NodeSet complement(const RootDatum& d, NodeSet s);
int set_size(NodeSet s);
std::string format_nodes(NodeSet s); // "{1,3,4}"

Rational pairing(const RootDatum& d, const Weight& lambda, const std::vector<int>& root);
Weight simple_root_as_weight(const RootDatum& d, int i);
Weight rho_levi(const RootDatum& d, NodeSet theta);
Rational rho_pairing(const RootDatum& d, NodeSet theta, int i);

std::vector<Component> subdiagram_components(const RootDatum& d, NodeSet theta);
std::vector<int> diagram_automorphism(const RootDatum& d);

// |W| of a connected finite-type component, from its label.
std::uint64_t component_weyl_order(const std::string& label);

} // namespace dps

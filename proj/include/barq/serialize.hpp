#pragma once

#include "barq/cochain.hpp"
#include "barq/report.hpp"

#include <cstdint>
#include <string>

namespace barq {

// JSON forms:
//   Dyadic           "m/2^k"
//   PLMap            {"points": [["x","y"], ...]}  (dyadic strings)
//   Element          cyclic: integer; symmetric: image array; free abelian:
//                    integer array; fprime: the PLMap form
//   Chain            {"group": name, "degree": n,
//                     "terms": [{"coeff": c, "tuple": [element, ...]}, ...]}
//   table cochain    {"group": name, "degree": n, "table": ["rat", ...]}
//                    (row-major in the group's element order)

Json dyadic_to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

Json plmap_to_json(const PLMap& m);
PLMap plmap_from_json(const Json& j);

Json element_to_json(const Group& group, const Element& e);
Element element_from_json(const Group& group, const Json& j);

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);
Chain chain_from_file(const std::string& path);

struct TableCochain {
  Group group;
  Cochain cochain;
};

Json table_cochain_to_json(const Group& group, const Cochain& w);
TableCochain table_cochain_from_json(const Json& j);
TableCochain table_cochain_from_file(const std::string& path);

// Element expressions for the command line:
//   expr := factor (('*' | '.') factor)*        left associative
//   factor := 'inv' '(' expr ')' | '(' expr ')' | atom
//   '.' is group multiplication; '*' is the interval-halving star product
//   (PL maps only).  Atoms by backend:
//   every group:   'e' (identity)
//   fprime:        '1' (identity), 'f', 'g', 'w<i>' (built-in generator i)
//   cyclic:        integer residue
//   symmetric:     image digits, e.g. '102' for the map 0->1,1->0,2->2
//   free abelian:  '[a,b,...]' (or a bare integer when rank is 1)
Element parse_element(const Group& group, const std::string& expr);

// Reference values the verification commands compare against.  The compiled-in
// values are reproduced by `barq thompson-verify` and the pairing commands;
// a JSON file with any subset of the keys overrides them.
struct GoldenValues {
  std::int64_t alpha_f_g = 1;
  std::int64_t alpha_g_f = -1;
  std::int64_t zeta2_pairing = 2;
  std::int64_t zeta4_pairing = 8;
  std::int64_t zeta8_pairing = 384;
};

GoldenValues golden_defaults();
GoldenValues golden_from_file(const std::string& path);

}  // namespace barq

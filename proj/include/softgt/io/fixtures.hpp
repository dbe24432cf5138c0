#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "softgt/errors.hpp"

namespace softgt::io {

struct Fixture {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::string_view kSmallSpace = R"(# Three opens that are not regular open, on a carrier supported on r1, r2.
[universe]
a, b, c
[parameters]
r1, r2, r3
[carrier]
r1={a,b,c}; r2={b,c}
[opens]
S_A1: r1={b}; r2={b,c}
S_A2: r1={a,c}; r2={c}
S_A3: r1={a,b}; r2={b,c}
S_A: r1={a,b,c}; r2={b,c}
[covers]
C12: S_A1, S_A2
C13: S_A1, S_A3
WHOLE: carrier
[subsets]
F1: r1={a,c}
)";

inline constexpr std::string_view kExampleOnesN4 = R"(# Truncation n=4 of the space on N generated by the sets {1,x}.
[universe]
1, 2, 3, 4
[parameters]
r1, r2
[basis]
B2: r1={1,2}; r2={1,2}
B3: r1={1,3}; r2={1,3}
B4: r1={1,4}; r2={1,4}
[covers]
BASIS: B2, B3, B4
)";

inline constexpr std::string_view kPairsM4 = R"(# Truncation m=4 of the space on N generated by consecutive pairs.
[universe]
1, 2, 3, 4, 5, 6, 7, 8
[basis]
P12: {1,2}
P23: {2,3}
P34: {3,4}
P45: {4,5}
P56: {5,6}
P67: {6,7}
P78: {7,8}
[covers]
ODD: P12, P34, P56, P78
BASE: P12, P23, P34, P45, P56, P67, P78
)";

inline constexpr std::string_view kDiscreteSubspaceN3 = R"(# Truncation n=3 of the discrete subspace on N, one parameter.
[universe]
1, 2, 3
[parameters]
r1
[basis]
H1: r1={1}
H2: r1={2}
H3: r1={3}
[covers]
ROWS: H1, H2, H3
)";

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all{
      {"example_3_2", kSmallSpace},
      {"example_ones_n4", kExampleOnesN4},
      {"pairs_m4", kPairsM4},
      {"discrete_subspace_n3", kDiscreteSubspaceN3},
  };
  return all;
}

inline std::string_view fixture_text(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f.text;
  throw StructuralError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace softgt::io

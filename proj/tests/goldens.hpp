#pragma once

#include "octica/poly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace testing_support {

using namespace octica;

struct Golden {
  std::string symbol;
  QPoly germ;
  long mu;  // tabulated Milnor number
};

inline QPoly gX() { return qvar(local_frame(), "x"); }
inline QPoly gY() { return qvar(local_frame(), "y"); }
inline QPoly gk(long v) { return qconst(Rational(v), local_frame()); }

inline std::vector<Golden> isolated_goldens() {
  const QPoly X = gX(), Y = gY(), xy2 = (X * Y).pow(2);
  std::vector<Golden> out;
  for (int n = 1; n <= 20; ++n) out.push_back({"A_" + std::to_string(n), X.pow(2) + Y.pow(n + 1), n});
  for (int n = 4; n <= 12; ++n) out.push_back({"D_" + std::to_string(n), Y * (X.pow(2) + Y.pow(n - 2)), n});
  out.push_back({"E_6", X.pow(3) + Y.pow(4), 6});
  out.push_back({"E_7", X.pow(3) + X * Y.pow(3), 7});
  out.push_back({"E_8", X.pow(3) + Y.pow(5), 8});
  for (long lambda : {0, 1, 3}) out.push_back({"X_9", X.pow(4) + gk(lambda) * xy2 + Y.pow(4), 9});
  for (long lambda : {0, 1}) out.push_back({"J_10", X.pow(3) + gk(lambda) * xy2 + Y.pow(6), 10});
  for (int p = 10; p <= 14; ++p) out.push_back({"X_" + std::to_string(p), X.pow(4) + xy2 + Y.pow(4 + p - 9), p});
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s)
      out.push_back({"Y_" + std::to_string(std::min(r, s)) + "," + std::to_string(std::max(r, s)),
                     X.pow(4 + r) + xy2 + Y.pow(4 + s), 9 + r + s});
  for (int p = 1; p <= 5; ++p) out.push_back({"J_2," + std::to_string(p), X.pow(3) + xy2 + Y.pow(6 + p), 10 + p});
  return out;
}

inline std::vector<Golden> non_isolated_goldens() {
  const QPoly X = gX(), Y = gY(), xy2 = (X * Y).pow(2);
  std::vector<Golden> out{{"A_inf", X.pow(2), 0},
                          {"D_inf", X.pow(2) * Y, 1},
                          {"J_2,inf", X.pow(3) + xy2, 4},
                          {"X_inf", X.pow(4) + xy2, 5},
                          {"Y_inf,inf", xy2, 4}};
  for (int r = 1; r <= 4; ++r) out.push_back({"Y_" + std::to_string(r) + ",inf", X.pow(r + 4) + xy2, r + 5});
  return out;
}

}  // namespace testing_support

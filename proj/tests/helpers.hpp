#pragma once

#include "hessq/poly.hpp"

namespace testutil {

inline hessq::Polynomial x(int s) { return hessq::Polynomial::var(hessq::VarId::xs(s)); }
inline hessq::Polynomial q(int r, int s) { return hessq::Polynomial::var(hessq::VarId::q(r, s)); }
inline hessq::Polynomial xf(int i, int j) { return hessq::Polynomial::var(hessq::VarId::flag(i, j)); }
inline hessq::Polynomial lam() { return hessq::Polynomial::var(hessq::VarId::lambda()); }

}  // namespace testutil

#pragma once

// The two one-parameter test families.

#include "witnessgate/hermitian.hpp"

#include <string>

namespace witnessgate {

/// 2 (x) 2 family E[a].
BipartiteHermitian family_e(const Rational& a);
/// 3 (x) 2 family F[a].
BipartiteHermitian family_f(const Rational& a);

enum class Family { E, F };
Family parse_family(const std::string& name);
BipartiteHermitian family_member(Family f, const Rational& a);

}  // namespace witnessgate

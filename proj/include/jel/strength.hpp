#pragma once

#include <optional>
#include <string_view>

#include "jel/syntax.hpp"

namespace jel {

enum class Verdict { Stronger, Weaker, Equal, Incomparable };

std::string_view verdict_name(Verdict v);  // "STRONGER", ...
Verdict flip(Verdict v);

enum class ProofStandard {
  Scintilla = 1,
  Reasonable = 2,
  Preponderance = 3,
  Convincing = 4,
  BeyondDoubt = 5,
};

std::string_view standard_name(ProofStandard s);  // keyword form
std::optional<ProofStandard> parse_standard(std::string_view keyword);

// Partial strength order on justifiers.
Verdict stronger(const Term& x, const Term& y);

// 1 (weakest) .. 5. Throws UnrankedTerm for variables, checkers over
// unranked terms, absences and unclassifiable commitments.
int pattern_rank(const Term& t);
std::optional<int> try_pattern_rank(const Term& t);

bool meets_standard(const Term& justifier, ProofStandard standard);

bool equal_strength(const Term& x, const Term& y);

enum class Preference { First, Second };

// Which commitment the viewer prefers: a shared creditor the stronger one, a
// shared debtor the weaker one, anyone else neither. Throws
// IncomparableStrength unless one is strictly stronger.
std::optional<Preference> prefer(const Commitment& x, const Commitment& y,
                                 const Agent& viewer);

}  // namespace jel

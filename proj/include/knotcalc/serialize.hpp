#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "knotcalc/fpgroups.hpp"
#include "knotcalc/intmat.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/nestcurves.hpp"
#include "knotcalc/swcalc.hpp"

namespace knotcalc {

/// Integers that fit int64 are emitted as JSON numbers, larger ones as
/// decimal strings; both forms are accepted on input.
nlohmann::json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const nlohmann::json& j);

/// {"min_exp": int, "coeffs": [ints]}
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

/// {"num_generators": n, "relators": [[[gen, exp], ...], ...]}
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

/// "gens: a b ; rels: a^6 b^6, a^4 b^2"
std::string presentation_to_text(const Presentation& p);
Presentation presentation_from_text(std::string_view text);

nlohmann::json abelian_to_json(const AbelianInvariants& inv);

/// {"terms": [{"base": str, "n": int, "coeff": int}, ...]}
nlohmann::json sw_to_json(const SWPolynomial& sw);
SWPolynomial sw_from_json(const nlohmann::json& j);

/// Array of arrays of integers.
nlohmann::json intmatrix_to_json(const IntMatrix& m);
IntMatrix intmatrix_from_json(const nlohmann::json& j);

nlohmann::json nest_invariants_to_json(const NestInvariants& inv);

}  // namespace knotcalc

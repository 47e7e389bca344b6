#pragma once

#include <json.hpp>

#include "hurwitz/closed_form.hpp"
#include "hurwitz/identity_verify.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/polyseries.hpp"

namespace hurwitz {

// Insertion-ordered so that output is byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& alpha);

/// {var, order, coeffs: [[{u, x, p: {i: e}, q: "num/den"}, ...], ...]}
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// {kind, alpha, m?, value} with value as a decimal string.
Json to_json(const CountResult& r);

/// {identity, m?, order, status, first_discrepancy?}
Json to_json(const VerifyReport& r);

const char* factor_mode_name(FactorMode mode);

}  // namespace hurwitz

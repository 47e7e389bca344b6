#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "hurwitz/partition.hpp"
#include "hurwitz/polyseries.hpp"

namespace hurwitz {

enum class SeriesTag { G, H, Hhat, T, v, w, s, Aw, Bs };

struct SeriesId {
  SeriesTag tag;
  std::optional<int> m;  // required (>= 2) for G, T, v, w, Aw
  int order;
};

const char* series_tag_name(SeriesTag tag);
std::optional<SeriesTag> parse_series_tag(std::string_view name);
bool series_needs_m(SeriesTag tag);

enum class IdentityTag {
  MAIN1, MAIN2, GAW, RECG, EULER_G, TTOG, RECT, DEFV, VAW, WLISTS,
  PROP1, PROP2, PROP3, KDV, KDV2, EULER_H,
};

const char* identity_name(IdentityTag tag);
std::optional<IdentityTag> parse_identity(std::string_view name);
bool identity_needs_m(IdentityTag tag);

std::span<const IdentityTag> all_identities();
std::span<const IdentityTag> g_family_identities();
std::span<const IdentityTag> h_family_identities();

/// Replacement values of G_alpha(m) for building G, T and v; used to check
/// that the verifier detects corrupted counts.
using GOverrides = std::map<Partition, Rational>;

/// Exact truncated generating series. G, H, Hhat, T and v are assembled
/// from the closed-form counts; w and s are solved from their implicit
/// equations; Aw and Bs compose the branch polynomials with them.
///
///   [z^n] G    = sum_{alpha |- n} G_alpha(m) |C_alpha|/n! u^l p_alpha x^{c(alpha)}
///   [z^n] H    = sum H_alpha |C_alpha| / (n! (n+l-2)!) p_alpha
///   [z^n] Hhat = sum H_alpha |C_alpha| / (n! (n+l-2)!) u^l p_alpha
///   [z^{n-1}] T: coefficient T_alpha = |C_alpha| G_alpha(m) / (m (n-1)!)
///   [z^n] v    : coefficient (m-1) c(alpha) T_alpha on x^{c(alpha)-1}
Series build_series(const SeriesId& id, const GOverrides& overrides = {});

/// Hhat with the alternative weight 1/(n-l+2)! in place of 1/(n+l-2)!.
/// Kept so tests can show this normalization does not satisfy KDV2.
Series build_hhat_shifted_weight(int order);

struct VerifyReport {
  IdentityTag identity;
  std::optional<int> m;
  int order;
  bool passed;
  std::optional<Discrepancy> first_discrepancy;
  std::optional<int> k;  // PROP3: the index p_k whose check failed first
};

/// Checks lhs == rhs exactly for the tagged identity up to z^order.
/// On failure the least z-degree and then least monomial is reported.
VerifyReport verify(IdentityTag id, std::optional<int> m, int order, const GOverrides& overrides = {});

}  // namespace hurwitz

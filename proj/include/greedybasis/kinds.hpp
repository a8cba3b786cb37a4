#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace greedybasis {

/// Greedy-type constants of a basis. Each one is the least C in an inequality
/// of the form ||left|| <= C ||right|| over a family of admissible instances.
enum class ConstantKind {
  quasi_greedy,            // C_q
  unconditional,           // K
  greedy,                  // C_g
  almost_greedy,           // C_al
  partially_greedy,        // C_p
  democracy,               // Delta_d
  conservative,            // Delta_c
  super_democracy,         // Delta_s
  super_conservative,      // Delta_sc
  slc,                     // Delta
  partial_slc,             // Delta_pc
  property_f,              // F
  property_fp,             // F_p
  property_fstar,          // F*
  property_fpstar,         // F_p*
  property_q,              // Q
  c1,                      // C_1, signed variant of (F)
  c2,                      // C_2, projection variant of (F*)
};

inline constexpr std::size_t kConstantKindCount = 18;

struct KindName {
  ConstantKind kind;
  std::string_view token;   // CLI flag token
  std::string_view symbol;  // report label
};

inline constexpr std::array<KindName, kConstantKindCount> kKindNames{{
    {ConstantKind::quasi_greedy, "cq", "C_q"},
    {ConstantKind::unconditional, "k", "K"},
    {ConstantKind::greedy, "cg", "C_g"},
    {ConstantKind::almost_greedy, "cal", "C_al"},
    {ConstantKind::partially_greedy, "cp", "C_p"},
    {ConstantKind::democracy, "dd", "Delta_d"},
    {ConstantKind::conservative, "dc", "Delta_c"},
    {ConstantKind::super_democracy, "ds", "Delta_s"},
    {ConstantKind::super_conservative, "dsc", "Delta_sc"},
    {ConstantKind::slc, "slc", "Delta"},
    {ConstantKind::partial_slc, "pslc", "Delta_pc"},
    {ConstantKind::property_f, "f", "F"},
    {ConstantKind::property_fp, "fp", "F_p"},
    {ConstantKind::property_fstar, "fstar", "F*"},
    {ConstantKind::property_fpstar, "fpstar", "F_p*"},
    {ConstantKind::property_q, "q", "Q"},
    {ConstantKind::c1, "c1", "C_1"},
    {ConstantKind::c2, "c2", "C_2"},
}};

static_assert([] {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (static_cast<std::size_t>(kKindNames[i].kind) != i) return false;
  return true;
}());

inline constexpr std::string_view token(ConstantKind k) { return kKindNames[static_cast<std::size_t>(k)].token; }
inline constexpr std::string_view symbol(ConstantKind k) { return kKindNames[static_cast<std::size_t>(k)].symbol; }

inline std::optional<ConstantKind> kind_from_token(std::string_view t) {
  for (const auto& n : kKindNames)
    if (n.token == t) return n.kind;
  return std::nullopt;
}

}  // namespace greedybasis

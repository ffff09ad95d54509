#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "trinom/modular.hpp"

namespace trinom {

// Enumeration order is also the report order within one (p, n).
enum class ClaimId {
    Thm1_Eq2,
    Thm1_Eq4,
    Thm2_Eq6,
    Thm2_Eq7,
    Prop3_Eq9,
    Prop3_Eq10,
    Cor4_Eq11,
    TripleSum_a,
    PropP_CC,
    HalfRow_Binomial,
    Babbage,
    Wolstenholme,
    Glaisher,
    Morley,
    Carlitz,
    Lemma_GL0,
    Lemma_GL,
    Lemma_GL2,
    Lemma_CONG0,
    Lemma_CONG1,
    Lemma_C1b,
    Lemma_C1c,
    Lemma_C2b,
    Lemma_C2c,
    Lemma_C3,
    Lemma_C3b,
    Lemma_H0,
    Lemma_H1,
    Lemma_H2,
    Lemma_H3,
};

inline constexpr std::array kAllClaims{
    ClaimId::Thm1_Eq2,     ClaimId::Thm1_Eq4,    ClaimId::Thm2_Eq6,
    ClaimId::Thm2_Eq7,     ClaimId::Prop3_Eq9,   ClaimId::Prop3_Eq10,
    ClaimId::Cor4_Eq11,    ClaimId::TripleSum_a, ClaimId::PropP_CC,
    ClaimId::HalfRow_Binomial, ClaimId::Babbage, ClaimId::Wolstenholme,
    ClaimId::Glaisher,     ClaimId::Morley,      ClaimId::Carlitz,
    ClaimId::Lemma_GL0,    ClaimId::Lemma_GL,    ClaimId::Lemma_GL2,
    ClaimId::Lemma_CONG0,  ClaimId::Lemma_CONG1, ClaimId::Lemma_C1b,
    ClaimId::Lemma_C1c,    ClaimId::Lemma_C2b,   ClaimId::Lemma_C2c,
    ClaimId::Lemma_C3,     ClaimId::Lemma_C3b,   ClaimId::Lemma_H0,
    ClaimId::Lemma_H1,     ClaimId::Lemma_H2,    ClaimId::Lemma_H3,
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

/// True for claims whose statement carries the parameter n.
bool claim_takes_n(ClaimId id);

struct CheckResult {
    ClaimId claim;
    u64 p;
    std::optional<u64> n;
    std::optional<u64> k;
    u64 modulus;
    Residue lhs;
    Residue rhs;
    bool pass;
};

/// Builds a record; lhs and rhs must share a modulus.
CheckResult make_check(ClaimId claim, u64 p, std::optional<u64> n, std::optional<u64> k,
                       const Residue& lhs, const Residue& rhs);

/// Report order: (p, n, claim, k), with an absent n or k sorting first.
bool report_less(const CheckResult& a, const CheckResult& b);

}  // namespace trinom
